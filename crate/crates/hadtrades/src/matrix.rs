//! Square matrices of root-of-unity entries (with structural zeros for
//! weighing matrices), exact Hadamard/weighing verification, dephasing,
//! equivalence operations, Kronecker products, and the text formats.

use crate::cyclotomic::{is_vanishing_sum, lcm, RootExp};
use crate::{limits, Error, Result};

/// Verification state of a [`UnitMatrix`]. The flag is only ever set by a
/// full re-check; every mutating operation returns a new value with the flag
/// reset to `Plain`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixKind {
    Plain,
    VerifiedHadamard,
    VerifiedWeighing(usize),
}

/// An n×n matrix whose entries are m-th roots of unity or structural zeros.
///
/// Real (±1) matrices are the m = 2 specialisation; structural zeros are a
/// distinct entry state rather than an encoded exponent, so weighing matrices
/// cannot be confused with Hadamard ones.
#[derive(Clone, Debug)]
pub struct UnitMatrix {
    n: usize,
    m: usize,
    /// Row-major; None is a structural zero, Some(k) is ζ_m^k.
    entries: Vec<Option<usize>>,
    kind: MatrixKind,
}

impl PartialEq for UnitMatrix {
    /// Entrywise equality of normalised exponents after re-embedding to a
    /// common modulus. The verification flag does not participate.
    fn eq(&self, other: &Self) -> bool {
        if self.n != other.n {
            return false;
        }
        let m = lcm(self.m, other.m);
        let (sa, sb) = (m / self.m, m / other.m);
        self.entries
            .iter()
            .zip(&other.entries)
            .all(|(a, b)| match (a, b) {
                (None, None) => true,
                (Some(x), Some(y)) => (x * sa) % m == (y * sb) % m,
                _ => false,
            })
    }
}

impl Eq for UnitMatrix {}

impl UnitMatrix {
    pub fn new(n: usize, m: usize, entries: Vec<Option<usize>>) -> Result<UnitMatrix> {
        if n == 0 {
            return Err(Error::InvalidArgument("order must be positive".into()));
        }
        if n > limits::MAX_MATRIX_ORDER {
            return Err(Error::SizeLimit {
                what: "matrix order",
                got: n,
                limit: limits::MAX_MATRIX_ORDER,
            });
        }
        if m == 0 {
            return Err(Error::InvalidArgument("modulus must be positive".into()));
        }
        if m > limits::MAX_MODULUS {
            return Err(Error::SizeLimit {
                what: "modulus",
                got: m,
                limit: limits::MAX_MODULUS,
            });
        }
        if entries.len() != n * n {
            return Err(Error::InvalidArgument(format!(
                "expected {} entries, got {}",
                n * n,
                entries.len()
            )));
        }
        let entries = entries.into_iter().map(|e| e.map(|k| k % m)).collect();
        Ok(UnitMatrix {
            n,
            m,
            entries,
            kind: MatrixKind::Plain,
        })
    }

    /// Builds a real matrix from rows of `+`, `-` and `0` characters.
    pub fn from_signs(rows: &[&str]) -> Result<UnitMatrix> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            let chars: Vec<char> = row.chars().filter(|c| !c.is_whitespace()).collect();
            if chars.len() != n {
                return Err(Error::InvalidArgument(format!(
                    "expected {n} signs per row, got {}",
                    chars.len()
                )));
            }
            for ch in chars {
                entries.push(match ch {
                    '+' => Some(0),
                    '-' => Some(1),
                    '0' => None,
                    other => {
                        return Err(Error::Parse(format!("unexpected sign character '{other}'")))
                    }
                });
            }
        }
        UnitMatrix::new(n, 2, entries)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> usize {
        self.m
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn exponent(&self, row: usize, col: usize) -> Option<usize> {
        self.entries[row * self.n + col]
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<RootExp> {
        self.exponent(row, col)
            .map(|k| RootExp::new(k as i64, self.m).expect("stored exponent is valid"))
    }

    pub fn has_zeros(&self) -> bool {
        self.entries.iter().any(|e| e.is_none())
    }

    /// True when every entry is ±1 (or a structural zero).
    pub fn is_real(&self) -> bool {
        self.entries.iter().all(|e| match e {
            None => true,
            Some(0) => true,
            Some(k) => 2 * k == self.m,
        })
    }

    /// Bit-packed rows for real zero-free matrices of order ≤ 64: bit j of
    /// word i is set iff entry (i, j) is −1. Inner products of ±1 rows then
    /// reduce to a popcount of an XOR.
    pub fn packed_real_rows(&self) -> Option<Vec<u64>> {
        if !self.is_real() || self.has_zeros() || self.n > 64 {
            return None;
        }
        let mut rows = Vec::with_capacity(self.n);
        for i in 0..self.n {
            let mut word = 0u64;
            for j in 0..self.n {
                if self.exponent(i, j) != Some(0) {
                    word |= 1 << j;
                }
            }
            rows.push(word);
        }
        Some(rows)
    }

    /// Re-embeds every exponent into a multiple of the current modulus.
    pub fn re_embed(&self, m2: usize) -> Result<UnitMatrix> {
        if !m2.is_multiple_of(self.m) {
            return Err(Error::InvalidArgument(format!(
                "cannot embed modulus {} into {}",
                self.m, m2
            )));
        }
        if m2 > limits::MAX_MODULUS {
            return Err(Error::SizeLimit {
                what: "modulus",
                got: m2,
                limit: limits::MAX_MODULUS,
            });
        }
        let scale = m2 / self.m;
        let entries = self.entries.iter().map(|e| e.map(|k| k * scale)).collect();
        Ok(UnitMatrix {
            n: self.n,
            m: m2,
            entries,
            kind: self.kind,
        })
    }

    /// The exponent differences feeding a restricted Hermitian inner product
    /// ⟨r_{i,B}, r_{j,B}⟩; cells where either row is zero contribute nothing.
    fn restricted_diffs(&self, i: usize, j: usize, cols: &[usize]) -> Vec<usize> {
        let mut diffs = Vec::with_capacity(cols.len());
        for &c in cols {
            if let (Some(a), Some(b)) = (self.exponent(i, c), self.exponent(j, c)) {
                diffs.push((a + self.m - b) % self.m);
            }
        }
        diffs
    }

    /// Exact test of ⟨r_{i,B}, r_{j,B}⟩ = 0 for a column mask B.
    pub fn restricted_rows_orthogonal(&self, i: usize, j: usize, cols: &[usize]) -> Result<bool> {
        if i >= self.n || j >= self.n || cols.iter().any(|&c| c >= self.n) {
            return Err(Error::InvalidArgument(
                "row/column index out of range".into(),
            ));
        }
        is_vanishing_sum(&self.restricted_diffs(i, j, cols), self.m)
    }

    fn all_cols(&self) -> Vec<usize> {
        (0..self.n).collect()
    }

    /// First row pair with a non-vanishing inner product, if any. Requires a
    /// zero-free matrix.
    pub fn hadamard_defect(&self) -> Result<Option<(usize, usize)>> {
        if self.has_zeros() {
            return Err(Error::InvalidKind(
                "matrix has structural zeros; use the weighing check".into(),
            ));
        }
        if let Some(packed) = self.packed_real_rows() {
            let half = self.n / 2;
            for i in 0..self.n {
                for j in i + 1..self.n {
                    if self.n % 2 == 1 || (packed[i] ^ packed[j]).count_ones() as usize != half {
                        return Ok(Some((i, j)));
                    }
                }
            }
            return Ok(None);
        }
        let cols = self.all_cols();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if !is_vanishing_sum(&self.restricted_diffs(i, j, &cols), self.m)? {
                    return Ok(Some((i, j)));
                }
            }
        }
        Ok(None)
    }

    /// Checks HH† = nI exactly and upgrades the kind flag on success.
    pub fn is_complex_hadamard(&mut self) -> Result<bool> {
        let ok = self.hadamard_defect()?.is_none();
        if ok {
            self.kind = MatrixKind::VerifiedHadamard;
        }
        Ok(ok)
    }

    /// Non-mutating Hadamard check.
    pub fn check_hadamard(&self) -> Result<bool> {
        Ok(self.hadamard_defect()?.is_none())
    }

    /// Consumes the matrix and returns it verified, or an error naming the
    /// first failing row pair.
    pub fn into_verified_hadamard(mut self) -> Result<UnitMatrix> {
        match self.hadamard_defect()? {
            None => {
                self.kind = MatrixKind::VerifiedHadamard;
                Ok(self)
            }
            Some((i, j)) => Err(Error::InvalidKind(format!(
                "rows {} and {} are not orthogonal",
                i + 1,
                j + 1
            ))),
        }
    }

    /// Checks MMᵀ = kI with entries in {0, ±1} and exactly k nonzeros in
    /// every row and column; upgrades the kind flag on success.
    pub fn is_weighing(&mut self, k: usize) -> Result<bool> {
        if !self.is_real() {
            return Err(Error::InvalidKind(
                "weighing check requires entries in {0, +1, -1}".into(),
            ));
        }
        let n = self.n;
        let sign = |e: Option<usize>| -> i64 {
            match e {
                None => 0,
                Some(0) => 1,
                Some(_) => -1,
            }
        };
        for i in 0..n {
            let row_nz = (0..n).filter(|&j| self.exponent(i, j).is_some()).count();
            let col_nz = (0..n).filter(|&j| self.exponent(j, i).is_some()).count();
            if row_nz != k || col_nz != k {
                return Ok(false);
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let dot: i64 = (0..n)
                    .map(|c| sign(self.exponent(i, c)) * sign(self.exponent(j, c)))
                    .sum();
                if dot != 0 {
                    return Ok(false);
                }
            }
        }
        self.kind = MatrixKind::VerifiedWeighing(k);
        Ok(true)
    }

    /// Scales each column by the conjugate of its first entry, then each row
    /// by the conjugate of its new first entry, producing an equivalent
    /// matrix with an all-ones first row and column. Requires a verified
    /// Hadamard input; the output is re-verified.
    pub fn dephase(&self) -> Result<UnitMatrix> {
        if self.kind != MatrixKind::VerifiedHadamard {
            return Err(Error::InvalidKind(
                "dephase requires a verified Hadamard matrix".into(),
            ));
        }
        let n = self.n;
        let m = self.m;
        let mut entries = self.entries.clone();
        for j in 0..n {
            let f = (m - entries[j].expect("hadamard has no zeros")) % m;
            for i in 0..n {
                let idx = i * n + j;
                entries[idx] = entries[idx].map(|k| (k + f) % m);
            }
        }
        for i in 0..n {
            let f = (m - entries[i * n].expect("hadamard has no zeros")) % m;
            for j in 0..n {
                let idx = i * n + j;
                entries[idx] = entries[idx].map(|k| (k + f) % m);
            }
        }
        UnitMatrix::new(n, m, entries)?.into_verified_hadamard()
    }

    fn validate_permutation(&self, perm: &[usize]) -> Result<()> {
        if perm.len() != self.n {
            return Err(Error::InvalidArgument("permutation length mismatch".into()));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || seen[p] {
                return Err(Error::InvalidArgument("not a permutation".into()));
            }
            seen[p] = true;
        }
        Ok(())
    }

    /// Re-verifies a result of an equivalence operation when the source was
    /// verified Hadamard; otherwise leaves it plain.
    fn inherit_verification(&self, out: UnitMatrix) -> Result<UnitMatrix> {
        if self.kind == MatrixKind::VerifiedHadamard {
            out.into_verified_hadamard()
        } else {
            Ok(out)
        }
    }

    /// Row i of the output is row perm[i] of the input.
    pub fn permute_rows(&self, perm: &[usize]) -> Result<UnitMatrix> {
        self.validate_permutation(perm)?;
        let mut entries = Vec::with_capacity(self.n * self.n);
        for &p in perm {
            entries.extend_from_slice(&self.entries[p * self.n..(p + 1) * self.n]);
        }
        self.inherit_verification(UnitMatrix::new(self.n, self.m, entries)?)
    }

    pub fn permute_cols(&self, perm: &[usize]) -> Result<UnitMatrix> {
        self.validate_permutation(perm)?;
        let mut entries = Vec::with_capacity(self.n * self.n);
        for i in 0..self.n {
            for &p in perm {
                entries.push(self.entries[i * self.n + p]);
            }
        }
        self.inherit_verification(UnitMatrix::new(self.n, self.m, entries)?)
    }

    pub fn scale_row(&self, row: usize, c: &RootExp) -> Result<UnitMatrix> {
        if row >= self.n {
            return Err(Error::InvalidArgument("row index out of range".into()));
        }
        let m2 = lcm(self.m, c.modulus());
        let base = self.re_embed(m2)?;
        let c = c.re_embed(m2)?;
        let mut entries = base.entries;
        for j in 0..self.n {
            let idx = row * self.n + j;
            entries[idx] = entries[idx].map(|k| (k + c.exponent()) % m2);
        }
        self.inherit_verification(UnitMatrix::new(self.n, m2, entries)?)
    }

    pub fn scale_col(&self, col: usize, c: &RootExp) -> Result<UnitMatrix> {
        if col >= self.n {
            return Err(Error::InvalidArgument("column index out of range".into()));
        }
        let m2 = lcm(self.m, c.modulus());
        let base = self.re_embed(m2)?;
        let c = c.re_embed(m2)?;
        let mut entries = base.entries;
        for i in 0..self.n {
            let idx = i * self.n + col;
            entries[idx] = entries[idx].map(|k| (k + c.exponent()) % m2);
        }
        self.inherit_verification(UnitMatrix::new(self.n, m2, entries)?)
    }

    /// Kronecker product of two verified Hadamard matrices; the result has
    /// order n_A·n_B, modulus lcm(m_A, m_B), and is re-verified.
    pub fn kronecker(a: &UnitMatrix, b: &UnitMatrix) -> Result<UnitMatrix> {
        if a.kind != MatrixKind::VerifiedHadamard || b.kind != MatrixKind::VerifiedHadamard {
            return Err(Error::InvalidKind(
                "kronecker requires verified Hadamard factors".into(),
            ));
        }
        let n = a.n * b.n;
        if n > limits::MAX_MATRIX_ORDER {
            return Err(Error::SizeLimit {
                what: "matrix order",
                got: n,
                limit: limits::MAX_MATRIX_ORDER,
            });
        }
        let m = lcm(a.m, b.m);
        let (sa, sb) = (m / a.m, m / b.m);
        let mut entries = vec![None; n * n];
        for ia in 0..a.n {
            for ja in 0..a.n {
                let ka = a.exponent(ia, ja).expect("hadamard has no zeros") * sa;
                for ib in 0..b.n {
                    for jb in 0..b.n {
                        let kb = b.exponent(ib, jb).expect("hadamard has no zeros") * sb;
                        let r = ia * b.n + ib;
                        let c = ja * b.n + jb;
                        entries[r * n + c] = Some((ka + kb) % m);
                    }
                }
            }
        }
        UnitMatrix::new(n, m, entries)?.into_verified_hadamard()
    }

    /// Returns a copy with the given cells replaced. The kind flag resets to
    /// plain; callers re-verify.
    pub fn with_entries(&self, changes: &[(usize, usize, Option<usize>)]) -> Result<UnitMatrix> {
        let mut entries = self.entries.clone();
        for &(i, j, e) in changes {
            if i >= self.n || j >= self.n {
                return Err(Error::InvalidArgument("cell out of range".into()));
            }
            entries[i * self.n + j] = e.map(|k| k % self.m);
        }
        UnitMatrix::new(self.n, self.m, entries)
    }

    // -- text formats -------------------------------------------------------

    /// Exponent format: first line `n m`, then n lines of n space-separated
    /// exponents in [0, m); `z` marks a structural zero.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m);
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n)
                .map(|j| match self.exponent(i, j) {
                    None => "z".to_string(),
                    Some(k) => k.to_string(),
                })
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// Real shorthand: n lines of `+`/`-`/`0`, implying m = 2. Errors on
    /// non-real matrices.
    pub fn to_sign_text(&self) -> Result<String> {
        if !self.is_real() {
            return Err(Error::InvalidKind(
                "sign shorthand requires a real matrix".into(),
            ));
        }
        let mut out = String::new();
        for i in 0..self.n {
            for j in 0..self.n {
                out.push(match self.exponent(i, j) {
                    None => '0',
                    Some(0) => '+',
                    Some(_) => '-',
                });
            }
            out.push('\n');
        }
        Ok(out)
    }

    /// Parses either text format, deciding by the shape of the first line.
    pub fn parse(text: &str) -> Result<UnitMatrix> {
        let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
        if lines.is_empty() {
            return Err(Error::Parse("empty matrix file".into()));
        }
        let head: Vec<&str> = lines[0].split_whitespace().collect();
        let looks_like_header =
            head.len() == 2 && head.iter().all(|t| t.chars().all(|c| c.is_ascii_digit()));
        if looks_like_header {
            let n: usize = head[0]
                .parse()
                .map_err(|_| Error::Parse("bad order".into()))?;
            let m: usize = head[1]
                .parse()
                .map_err(|_| Error::Parse("bad modulus".into()))?;
            if lines.len() != n + 1 {
                return Err(Error::Parse(format!(
                    "expected {n} matrix rows, found {}",
                    lines.len() - 1
                )));
            }
            let mut entries = Vec::with_capacity(n * n);
            for line in &lines[1..] {
                let toks: Vec<&str> = line.split_whitespace().collect();
                if toks.len() != n {
                    return Err(Error::Parse(format!(
                        "expected {n} entries per row, found {}",
                        toks.len()
                    )));
                }
                for t in toks {
                    if t == "z" {
                        entries.push(None);
                    } else {
                        let k: usize = t
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad exponent '{t}'")))?;
                        if m > 0 && k >= m {
                            return Err(Error::Parse(format!(
                                "exponent {k} out of range for modulus {m}"
                            )));
                        }
                        entries.push(Some(k));
                    }
                }
            }
            UnitMatrix::new(n, m, entries)
        } else {
            UnitMatrix::from_signs(&lines)
        }
    }
}

impl std::fmt::Display for UnitMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h2() -> UnitMatrix {
        UnitMatrix::from_signs(&["++", "+-"])
            .unwrap()
            .into_verified_hadamard()
            .unwrap()
    }

    fn h4() -> UnitMatrix {
        UnitMatrix::kronecker(&h2(), &h2()).unwrap()
    }

    fn fourier(n: usize) -> UnitMatrix {
        let mut entries = Vec::with_capacity(n * n);
        for j in 0..n {
            for k in 0..n {
                entries.push(Some((j * k) % n));
            }
        }
        UnitMatrix::new(n, n, entries).unwrap()
    }

    #[test]
    fn fourier_matrices_verify() {
        for n in 1..=8 {
            let mut f = fourier(n);
            assert!(f.is_complex_hadamard().unwrap(), "F_{n}");
            assert_eq!(f.kind(), MatrixKind::VerifiedHadamard);
        }
    }

    #[test]
    fn equal_rows_fail_verification() {
        let mut m = UnitMatrix::from_signs(&["++", "++"]).unwrap();
        assert!(!m.is_complex_hadamard().unwrap());
        assert_eq!(m.kind(), MatrixKind::Plain);
        assert_eq!(m.hadamard_defect().unwrap(), Some((0, 1)));
    }

    #[test]
    fn zeros_are_rejected_by_the_hadamard_check() {
        let mut m = UnitMatrix::from_signs(&["+0", "0+"]).unwrap();
        assert!(matches!(m.is_complex_hadamard(), Err(Error::InvalidKind(_))));
    }

    #[test]
    fn identity_is_a_weight_one_weighing_matrix() {
        let mut m = UnitMatrix::from_signs(&["+00", "0+0", "00+"]).unwrap();
        assert!(m.is_weighing(1).unwrap());
        assert_eq!(m.kind(), MatrixKind::VerifiedWeighing(1));
        assert!(!m.clone().is_weighing(2).unwrap());
    }

    #[test]
    fn weighing_check_rejects_complex_entries() {
        let mut f = fourier(4);
        assert!(matches!(f.is_weighing(4), Err(Error::InvalidKind(_))));
    }

    #[test]
    fn real_zero_free_weighing_at_full_weight_matches_hadamard() {
        let mut h = h4();
        assert!(h.is_weighing(4).unwrap());
        let mut bad = UnitMatrix::from_signs(&["++", "++"]).unwrap();
        assert!(!bad.is_weighing(2).unwrap());
        assert!(!bad.is_complex_hadamard().unwrap());
    }

    #[test]
    fn dephase_fixes_sylvester_and_fourier() {
        let h = h4();
        assert_eq!(h.dephase().unwrap(), h);
        let f = fourier(3).into_verified_hadamard().unwrap();
        assert_eq!(f.dephase().unwrap(), f);
    }

    #[test]
    fn dephase_normalises_a_scrambled_host() {
        let f = fourier(5).into_verified_hadamard().unwrap();
        let scrambled = f
            .scale_row(2, &RootExp::new(3, 5).unwrap())
            .unwrap()
            .scale_col(0, &RootExp::new(1, 5).unwrap())
            .unwrap()
            .scale_col(4, &RootExp::new(2, 5).unwrap())
            .unwrap();
        let d = scrambled.dephase().unwrap();
        assert_eq!(d.kind(), MatrixKind::VerifiedHadamard);
        for i in 0..5 {
            assert_eq!(d.exponent(0, i), Some(0), "first row all ones");
            assert_eq!(d.exponent(i, 0), Some(0), "first column all ones");
        }
    }

    #[test]
    fn dephase_requires_verification() {
        let m = UnitMatrix::from_signs(&["++", "+-"]).unwrap();
        assert!(matches!(m.dephase(), Err(Error::InvalidKind(_))));
    }

    #[test]
    fn row_swap_is_an_involution() {
        let h = h4();
        let perm = [1usize, 0, 2, 3];
        let swapped = h.permute_rows(&perm).unwrap();
        assert_ne!(swapped, h);
        assert_eq!(swapped.permute_rows(&perm).unwrap(), h);
        assert_eq!(swapped.kind(), MatrixKind::VerifiedHadamard);
    }

    #[test]
    fn scale_row_and_back() {
        let h = h4();
        let c = RootExp::new(1, 2).unwrap();
        let scaled = h.scale_row(2, &c).unwrap();
        assert_eq!(scaled.kind(), MatrixKind::VerifiedHadamard);
        assert_eq!(scaled.scale_row(2, &c.conj()).unwrap(), h);
    }

    #[test]
    fn scaling_fourier5_by_a_fifth_root_stays_hadamard() {
        let f = fourier(5).into_verified_hadamard().unwrap();
        let c = RootExp::new(1, 5).unwrap();
        let scaled = f.scale_row(3, &c).unwrap();
        assert_eq!(scaled.kind(), MatrixKind::VerifiedHadamard);
        let scaled_col = f.scale_col(2, &c).unwrap();
        assert_eq!(scaled_col.kind(), MatrixKind::VerifiedHadamard);
    }

    #[test]
    fn invalid_permutations_are_rejected() {
        let h = h4();
        assert!(h.permute_rows(&[0, 0, 1, 2]).is_err());
        assert!(h.permute_rows(&[0, 1, 2]).is_err());
        assert!(h.permute_cols(&[0, 1, 2, 9]).is_err());
    }

    #[test]
    fn kronecker_of_h2_with_itself_is_sylvester_h4() {
        let k = UnitMatrix::kronecker(&h2(), &h2()).unwrap();
        let expect = UnitMatrix::from_signs(&["++++", "+-+-", "++--", "+--+"]).unwrap();
        assert_eq!(k, expect);
        assert_eq!(k.kind(), MatrixKind::VerifiedHadamard);
    }

    #[test]
    fn kronecker_mixes_moduli() {
        let f2 = fourier(2).into_verified_hadamard().unwrap();
        let f3 = fourier(3).into_verified_hadamard().unwrap();
        let k = UnitMatrix::kronecker(&f2, &f3).unwrap();
        assert_eq!(k.order(), 6);
        assert_eq!(k.modulus(), 6);
        assert_eq!(k.kind(), MatrixKind::VerifiedHadamard);
    }

    #[test]
    fn kronecker_requires_verified_inputs() {
        let a = UnitMatrix::from_signs(&["++", "+-"]).unwrap();
        let b = h2();
        assert!(matches!(
            UnitMatrix::kronecker(&a, &b),
            Err(Error::InvalidKind(_))
        ));
    }

    #[test]
    fn packed_rows_match_entries() {
        let h = h4();
        let packed = h.packed_real_rows().unwrap();
        for (i, word) in packed.iter().enumerate() {
            for j in 0..4 {
                let neg = (word >> j) & 1 == 1;
                assert_eq!(neg, h.exponent(i, j) == Some(1));
            }
        }
        assert!(fourier(4).packed_real_rows().is_none());
    }

    #[test]
    fn text_round_trip_exponent_format() {
        let f = fourier(4);
        let text = f.to_text();
        let parsed = UnitMatrix::parse(&text).unwrap();
        assert_eq!(parsed, f);
        assert_eq!(parsed.to_text(), text);
    }

    #[test]
    fn text_round_trip_sign_format() {
        let w = UnitMatrix::from_signs(&["0++", "+0-", "+-0"]).unwrap();
        let text = w.to_sign_text().unwrap();
        let parsed = UnitMatrix::parse(&text).unwrap();
        assert_eq!(parsed, w);
        assert!(fourier(3).to_sign_text().is_err());
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert!(UnitMatrix::parse("").is_err());
        assert!(UnitMatrix::parse("2 4\n0 1\n0").is_err());
        assert!(UnitMatrix::parse("2 4\n0 9\n0 1").is_err());
        assert!(UnitMatrix::parse("+*\n++").is_err());
    }

    #[test]
    fn equality_re_embeds_moduli() {
        let a = UnitMatrix::from_signs(&["++", "+-"]).unwrap();
        let b = UnitMatrix::new(2, 4, vec![Some(0), Some(0), Some(0), Some(2)]).unwrap();
        assert_eq!(a, b);
        let c = UnitMatrix::new(2, 4, vec![Some(0), Some(0), Some(0), Some(1)]).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn restricted_orthogonality_on_masked_columns() {
        let h = h4();
        // Rows 0 and 1 agree on columns {0, 2} and disagree on {1, 3}.
        assert!(!h.restricted_rows_orthogonal(0, 1, &[0, 2]).unwrap());
        assert!(h.restricted_rows_orthogonal(0, 1, &[0, 1]).unwrap());
        assert!(h.restricted_rows_orthogonal(0, 1, &[0, 1, 2, 3]).unwrap());
        assert!(h.restricted_rows_orthogonal(0, 9, &[0]).is_err());
    }
}
