//! Trades: sets of matrix entries that can all be changed to produce another
//! verified matrix of the same kind. Includes switching, the restricted-row
//! orthogonality tests, rectangular blocks and rank-one machinery, trade
//! profiles, symmetric differences, the GF(2) span of rectangular trades, and
//! the certificate file format.

use crate::cyclotomic::{lcm, CycloNumber, RootExp};
use crate::gf2::{BitVec, Gf2Basis};
use crate::matrix::{MatrixKind, UnitMatrix};
use crate::util::{divisors, k_subsets};
use crate::{limits, Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// A cell position, 0-based (row, col).
pub type Cell = (usize, usize);

/// How a trade is switched: one scalar multiplying every cell, or an explicit
/// replacement value per cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Assignment {
    Scalar(RootExp),
    Explicit(BTreeMap<Cell, RootExp>),
}

/// A set of cell positions in a host matrix, with an optional switch
/// assignment. Assignment-free trades support profile and symmetric
/// difference analytics; switching requires an assignment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trade {
    n: usize,
    cells: BTreeSet<Cell>,
    assignment: Option<Assignment>,
}

impl Trade {
    fn validate_cells(n: usize, cells: &BTreeSet<Cell>) -> Result<()> {
        if cells.is_empty() {
            return Err(Error::InvalidArgument("trade has no cells".into()));
        }
        if cells.iter().any(|&(i, j)| i >= n || j >= n) {
            return Err(Error::InvalidArgument("trade cell out of range".into()));
        }
        Ok(())
    }

    pub fn new(n: usize, cells: BTreeSet<Cell>) -> Result<Trade> {
        Self::validate_cells(n, &cells)?;
        Ok(Trade {
            n,
            cells,
            assignment: None,
        })
    }

    pub fn with_scalar(n: usize, cells: BTreeSet<Cell>, c: RootExp) -> Result<Trade> {
        Self::validate_cells(n, &cells)?;
        if c.is_one() {
            return Err(Error::InvalidArgument(
                "scalar multiplier must differ from 1".into(),
            ));
        }
        Ok(Trade {
            n,
            cells,
            assignment: Some(Assignment::Scalar(c)),
        })
    }

    pub fn with_explicit(
        n: usize,
        cells: BTreeSet<Cell>,
        values: BTreeMap<Cell, RootExp>,
    ) -> Result<Trade> {
        Self::validate_cells(n, &cells)?;
        if values.keys().cloned().collect::<BTreeSet<_>>() != cells {
            return Err(Error::InvalidArgument(
                "assignment domain must equal the cell set".into(),
            ));
        }
        Ok(Trade {
            n,
            cells,
            assignment: Some(Assignment::Explicit(values)),
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    pub fn assignment(&self) -> Option<&Assignment> {
        self.assignment.as_ref()
    }

    pub fn scalar(&self) -> Option<RootExp> {
        match &self.assignment {
            Some(Assignment::Scalar(c)) => Some(*c),
            _ => None,
        }
    }
}

/// A rectangle of rows A × columns B with a scalar multiplier c ≠ 1. The
/// induced trade has size |A|·|B|.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RectBlock {
    rows: Vec<usize>,
    cols: Vec<usize>,
    multiplier: RootExp,
}

impl RectBlock {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>, multiplier: RootExp) -> Result<RectBlock> {
        if rows.is_empty() || cols.is_empty() {
            return Err(Error::InvalidArgument("empty block".into()));
        }
        if multiplier.is_one() {
            return Err(Error::InvalidArgument(
                "block multiplier must differ from 1".into(),
            ));
        }
        let mut rows = rows;
        let mut cols = cols;
        rows.sort_unstable();
        rows.dedup();
        cols.sort_unstable();
        cols.dedup();
        Ok(RectBlock {
            rows,
            cols,
            multiplier,
        })
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn multiplier(&self) -> RootExp {
        self.multiplier
    }

    pub fn area(&self) -> usize {
        self.rows.len() * self.cols.len()
    }

    pub fn cells(&self) -> BTreeSet<Cell> {
        let mut out = BTreeSet::new();
        for &i in &self.rows {
            for &j in &self.cols {
                out.insert((i, j));
            }
        }
        out
    }

    /// The induced scalar trade for a host of order n.
    pub fn to_trade(&self, n: usize) -> Result<Trade> {
        Trade::with_scalar(n, self.cells(), self.multiplier)
    }

    /// Same block with a different multiplier.
    pub fn with_multiplier(&self, c: RootExp) -> Result<RectBlock> {
        RectBlock::new(self.rows.clone(), self.cols.clone(), c)
    }
}

/// Per-row and per-column cell counts of a trade, with the common nonzero
/// counts d and e when they are uniform.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TradeProfile {
    pub row_counts: Vec<usize>,
    pub col_counts: Vec<usize>,
    pub d: Option<usize>,
    pub e: Option<usize>,
}

fn uniform_nonzero(counts: &[usize]) -> Option<usize> {
    let mut it = counts.iter().filter(|&&c| c > 0);
    let first = *it.next()?;
    if it.all(|&c| c == first) {
        Some(first)
    } else {
        None
    }
}

impl TradeProfile {
    pub fn size(&self) -> usize {
        self.row_counts.iter().sum()
    }

    pub fn met_rows(&self) -> usize {
        self.row_counts.iter().filter(|&&c| c > 0).count()
    }

    pub fn met_cols(&self) -> usize {
        self.col_counts.iter().filter(|&&c| c > 0).count()
    }

    /// Some(true) when d is uniform and even or 1; None when not uniform.
    pub fn d_even_or_one(&self) -> Option<bool> {
        self.d.map(|d| d % 2 == 0 || d == 1)
    }

    pub fn e_even_or_one(&self) -> Option<bool> {
        self.e.map(|e| e % 2 == 0 || e == 1)
    }

    /// Some(true) when d is uniform and d · (met rows) equals the size.
    pub fn d_consistent(&self) -> Option<bool> {
        self.d.map(|d| d * self.met_rows() == self.size())
    }
}

/// Row/column cell counts of a trade.
pub fn trade_profile(t: &Trade) -> TradeProfile {
    let mut row_counts = vec![0usize; t.n];
    let mut col_counts = vec![0usize; t.n];
    for &(i, j) in &t.cells {
        row_counts[i] += 1;
        col_counts[j] += 1;
    }
    let d = uniform_nonzero(&row_counts);
    let e = uniform_nonzero(&col_counts);
    TradeProfile {
        row_counts,
        col_counts,
        d,
        e,
    }
}

/// Applies the switch: returns a matrix equal to the host off the trade and
/// to the assignment on it. The result has its verification flag reset.
pub fn apply_switch(h: &UnitMatrix, t: &Trade) -> Result<UnitMatrix> {
    if t.n != h.order() {
        return Err(Error::InvalidArgument("trade/host order mismatch".into()));
    }
    let assignment = t
        .assignment
        .as_ref()
        .ok_or_else(|| Error::InvalidArgument("trade has no assignment".into()))?;
    let target_m = match assignment {
        Assignment::Scalar(c) => lcm(h.modulus(), c.modulus()),
        Assignment::Explicit(map) => map
            .values()
            .fold(h.modulus(), |m, v| lcm(m, v.modulus())),
    };
    let host = h.re_embed(target_m)?;
    let mut changes: Vec<(usize, usize, Option<usize>)> = Vec::with_capacity(t.size());
    for &(i, j) in &t.cells {
        let old = host.exponent(i, j);
        let new = match assignment {
            Assignment::Scalar(c) => {
                let c = c.re_embed(target_m)?;
                old.map(|k| (k + c.exponent()) % target_m)
            }
            Assignment::Explicit(map) => {
                let v = map[&(i, j)].re_embed(target_m)?;
                Some(v.exponent())
            }
        };
        if new == old {
            return Err(Error::TradeViolation(format!(
                "assigned value equals the host entry at ({}, {})",
                i + 1,
                j + 1
            )));
        }
        changes.push((i, j, new));
    }
    host.with_entries(&changes)
}

/// True iff switching the trade yields a matrix passing the host's own
/// verification: Hadamard hosts re-verify as Hadamard (real hosts demand a
/// real switch), weighing hosts re-verify at the same weight.
pub fn is_trade(h: &UnitMatrix, t: &Trade) -> Result<bool> {
    match h.kind() {
        MatrixKind::VerifiedHadamard => {
            let switched = apply_switch(h, t)?;
            if h.is_real() && !switched.is_real() {
                return Ok(false);
            }
            switched.check_hadamard()
        }
        MatrixKind::VerifiedWeighing(k) => {
            let mut switched = apply_switch(h, t)?;
            switched.is_weighing(k)
        }
        MatrixKind::Plain => Err(Error::InvalidArgument(
            "host must be verified before trade checks".into(),
        )),
    }
}

/// Rows of the host grouped by whether they contain trade cells.
fn met_and_disjoint_rows(t: &Trade) -> (BTreeMap<usize, Vec<usize>>, Vec<usize>) {
    let mut met: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(i, j) in &t.cells {
        met.entry(i).or_default().push(j);
    }
    let disjoint = (0..t.n).filter(|r| !met.contains_key(r)).collect();
    (met, disjoint)
}

/// First (met row, disjoint row) pair whose restricted inner product fails to
/// vanish, or None when the necessary condition of the scalar-switch test
/// holds everywhere.
pub fn lemma1_first_violation(h: &UnitMatrix, t: &Trade) -> Result<Option<(usize, usize)>> {
    if !matches!(t.assignment, Some(Assignment::Scalar(_))) {
        return Err(Error::InvalidArgument(
            "the restricted-row test needs a scalar assignment".into(),
        ));
    }
    if t.n != h.order() {
        return Err(Error::InvalidArgument("trade/host order mismatch".into()));
    }
    let (met, disjoint) = met_and_disjoint_rows(t);
    for (&i, cols) in &met {
        for &j in &disjoint {
            if !h.restricted_rows_orthogonal(i, j, cols)? {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

/// Necessary condition for a scalar switch: every row meeting the trade must
/// be orthogonal, restricted to its met columns, to every row disjoint from
/// the trade. A false verdict certifies the set is not switchable by any
/// scalar; a true verdict certifies nothing.
pub fn lemma1_necessary(h: &UnitMatrix, t: &Trade) -> Result<bool> {
    Ok(lemma1_first_violation(h, t)?.is_none())
}

/// Decides whether the block is a rectangular trade: ⟨r_{i,B}, r_{j,B}⟩ = 0
/// for every i in A and j outside A. The verdict does not depend on the
/// block's multiplier.
pub fn is_rectangular_trade(h: &UnitMatrix, block: &RectBlock) -> Result<bool> {
    let n = h.order();
    if block.rows.iter().any(|&r| r >= n) || block.cols.iter().any(|&c| c >= n) {
        return Err(Error::InvalidArgument("block index out of range".into()));
    }
    let in_a: BTreeSet<usize> = block.rows.iter().copied().collect();
    for &i in &block.rows {
        for j in 0..n {
            if in_a.contains(&j) {
                continue;
            }
            if !h.restricted_rows_orthogonal(i, j, &block.cols)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The rectangular trade revealed by exchanging two rows of a real Hadamard
/// matrix: A = {i, j}, B = the n/2 columns where the rows differ, c = −1.
pub fn row_pair_trade(h: &UnitMatrix, i: usize, j: usize) -> Result<RectBlock> {
    if h.kind() != MatrixKind::VerifiedHadamard || !h.is_real() {
        return Err(Error::InvalidKind(
            "row-pair trades need a real verified Hadamard host".into(),
        ));
    }
    if i == j {
        return Err(Error::InvalidArgument("row indices must differ".into()));
    }
    let n = h.order();
    if i >= n || j >= n {
        return Err(Error::InvalidArgument("row index out of range".into()));
    }
    let cols: Vec<usize> = (0..n)
        .filter(|&c| h.exponent(i, c) != h.exponent(j, c))
        .collect();
    debug_assert_eq!(cols.len(), n / 2);
    RectBlock::new(vec![i, j], cols, RootExp::minus_one(2)?)
}

/// Exact rank-1 test of the A×B submatrix over Q(ζ_m).
pub fn is_rank_one(h: &UnitMatrix, rows: &[usize], cols: &[usize]) -> Result<bool> {
    if rows.is_empty() || cols.is_empty() {
        return Err(Error::InvalidArgument("empty block".into()));
    }
    let n = h.order();
    if rows.iter().any(|&r| r >= n) || cols.iter().any(|&c| c >= n) {
        return Err(Error::InvalidArgument("block index out of range".into()));
    }
    let m = h.modulus();
    let mut sub = Vec::with_capacity(rows.len());
    for &i in rows {
        let mut row = Vec::with_capacity(cols.len());
        for &j in cols {
            row.push(match h.entry(i, j) {
                Some(r) => CycloNumber::from_root(&r),
                None => CycloNumber::zero(m)?,
            });
        }
        sub.push(row);
    }
    Ok(crate::cyclotomic::cyclo_rank(&sub)? == 1)
}

/// Signature of a column restricted to a row set: None once the column is
/// all-zero there; otherwise the zero pattern plus the exponent differences
/// against the first nonzero entry. Equal signatures mean proportional
/// columns.
fn column_signature(h: &UnitMatrix, rows: &[usize], col: usize) -> Option<Vec<Option<usize>>> {
    let m = h.modulus();
    let entries: Vec<Option<usize>> = rows.iter().map(|&r| h.exponent(r, col)).collect();
    let anchor = entries.iter().flatten().next().copied()?;
    Some(
        entries
            .iter()
            .map(|e| e.map(|k| (k + m - anchor) % m))
            .collect(),
    )
}

/// Groups columns by proportionality over the given rows. Returns the
/// proportionality classes of the not-all-zero columns (each sorted) and the
/// all-zero columns.
pub(crate) fn proportional_column_classes(
    h: &UnitMatrix,
    rows: &[usize],
    cols: &[usize],
) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut classes: BTreeMap<Vec<Option<usize>>, Vec<usize>> = BTreeMap::new();
    let mut zero_cols = Vec::new();
    for &j in cols {
        match column_signature(h, rows, j) {
            Some(sig) => classes.entry(sig).or_default().push(j),
            None => zero_cols.push(j),
        }
    }
    let mut out: Vec<Vec<usize>> = classes.into_values().collect();
    out.sort();
    (out, zero_cols)
}

/// All a×b blocks of rank exactly 1, for a·b = n, in lexicographic (A, B)
/// order. Every returned block is a rectangular trade and the enumeration is
/// exhaustive. Blocks carry the default multiplier −1.
pub fn enumerate_rank_one_blocks(h: &UnitMatrix, a: usize, b: usize) -> Result<Vec<RectBlock>> {
    let n = h.order();
    if a == 0 || b == 0 || a * b != n {
        return Err(Error::InvalidArgument(format!(
            "block shape {a}x{b} does not factor the order {n}"
        )));
    }
    let minus_one = RootExp::minus_one(2)?;
    let all_rows: Vec<usize> = (0..n).collect();
    let all_cols: Vec<usize> = (0..n).collect();
    let mut blocks = Vec::new();
    for rows in k_subsets(&all_rows, a) {
        let (classes, zero_cols) = proportional_column_classes(h, &rows, &all_cols);
        let mut column_sets: Vec<Vec<usize>> = Vec::new();
        for class in &classes {
            if class.len() + zero_cols.len() < b {
                continue;
            }
            let mut pool: Vec<usize> = class.iter().chain(zero_cols.iter()).copied().collect();
            pool.sort_unstable();
            for subset in k_subsets(&pool, b) {
                // Skip subsets of pure zero columns (rank 0, not 1).
                if subset.iter().any(|c| class.contains(c)) {
                    column_sets.push(subset);
                }
            }
        }
        column_sets.sort();
        column_sets.dedup();
        for cols in column_sets {
            blocks.push(RectBlock::new(rows.clone(), cols, minus_one)?);
        }
    }
    Ok(blocks)
}

/// Cells in exactly one of the two trades, plus the induced negation trade
/// when both inputs are scalar −1 trades and the difference is nonempty.
pub struct SymmetricDifference {
    pub cells: BTreeSet<Cell>,
    pub induced: Option<Trade>,
}

pub fn symmetric_difference(t1: &Trade, t2: &Trade) -> Result<SymmetricDifference> {
    if t1.n != t2.n {
        return Err(Error::InvalidArgument("order mismatch".into()));
    }
    let cells: BTreeSet<Cell> = t1
        .cells
        .symmetric_difference(&t2.cells)
        .copied()
        .collect();
    let both_negations = matches!(t1.scalar(), Some(c) if c.is_minus_one())
        && matches!(t2.scalar(), Some(c) if c.is_minus_one());
    let induced = if both_negations && !cells.is_empty() {
        Some(Trade::with_scalar(
            t1.n,
            cells.clone(),
            RootExp::minus_one(2)?,
        )?)
    } else {
        None
    };
    Ok(SymmetricDifference { cells, induced })
}

/// The diagonal negation trade of a skew matrix (H + Hᵀ = 2I).
pub fn diagonal_trade(h: &UnitMatrix) -> Result<Trade> {
    let n = h.order();
    let m = h.modulus();
    if !h.is_real() || h.has_zeros() {
        return Err(Error::InvalidKind(
            "the diagonal trade needs a real zero-free host".into(),
        ));
    }
    let skew = (0..n).all(|i| h.exponent(i, i) == Some(0))
        && (0..n).all(|i| {
            (0..n).all(|j| {
                i == j || {
                    let a = h.exponent(i, j).unwrap();
                    let b = h.exponent(j, i).unwrap();
                    (a == 0 && 2 * b == m) || (b == 0 && 2 * a == m)
                }
            })
        });
    if !skew {
        return Err(Error::NotSkew);
    }
    let cells: BTreeSet<Cell> = (0..n).map(|i| (i, i)).collect();
    Trade::with_scalar(n, cells, RootExp::minus_one(2)?)
}

/// GF(2) span of the size-n rectangular trades of a real Hadamard matrix:
/// indicator vectors of every rank-one a×b block over all factorisations
/// n = a·b. Membership in the span does not by itself make а cell set a
/// trade; the span may contain non-trades.
pub struct TradeSpace {
    n: usize,
    generator_count: usize,
    basis: Gf2Basis,
}

impl TradeSpace {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    pub fn rank(&self) -> usize {
        self.basis.rank()
    }

    fn indicator(&self, cells: &BTreeSet<Cell>) -> Result<BitVec> {
        let mut v = BitVec::zero(self.n * self.n);
        for &(i, j) in cells {
            if i >= self.n || j >= self.n {
                return Err(Error::InvalidArgument("cell out of range".into()));
            }
            v.set(i * self.n + j);
        }
        Ok(v)
    }

    /// Whether the indicator vector of the cell set lies in the span. The
    /// empty set is always a member.
    pub fn membership(&self, cells: &BTreeSet<Cell>) -> Result<bool> {
        Ok(self.basis.contains(&self.indicator(cells)?))
    }

    /// The reduced basis as cell sets.
    pub fn basis_cell_sets(&self) -> Vec<BTreeSet<Cell>> {
        self.basis
            .basis_rows()
            .map(|row| {
                let mut cells = BTreeSet::new();
                for i in 0..self.n {
                    for j in 0..self.n {
                        if row.get(i * self.n + j) {
                            cells.insert((i, j));
                        }
                    }
                }
                cells
            })
            .collect()
    }
}

pub fn trade_space_gf2(h: &UnitMatrix) -> Result<TradeSpace> {
    let n = h.order();
    if n > limits::MAX_TRADE_SPACE_ORDER {
        return Err(Error::SizeLimit {
            what: "trade-space order",
            got: n,
            limit: limits::MAX_TRADE_SPACE_ORDER,
        });
    }
    let mut basis = Gf2Basis::new();
    let mut generator_count = 0;
    for a in divisors(n) {
        let b = n / a;
        for block in enumerate_rank_one_blocks(h, a, b)? {
            generator_count += 1;
            let mut v = BitVec::zero(n * n);
            for (i, j) in block.cells() {
                v.set(i * n + j);
            }
            basis.insert(v);
        }
    }
    Ok(TradeSpace {
        n,
        generator_count,
        basis,
    })
}

// ---------------------------------------------------------------------------
// Certificate file format
// ---------------------------------------------------------------------------

/// Whether cell coordinates in a certificate file are 1-based (the default,
/// matching printed matrices) or 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum IndexBase {
    #[default]
    One,
    Zero,
}

impl IndexBase {
    fn to_internal(self, v: usize, what: &str) -> Result<usize> {
        match self {
            IndexBase::Zero => Ok(v),
            IndexBase::One => v
                .checked_sub(1)
                .ok_or_else(|| Error::Parse(format!("{what} index 0 in a 1-based certificate"))),
        }
    }

    fn to_external(self, v: usize) -> usize {
        match self {
            IndexBase::Zero => v,
            IndexBase::One => v + 1,
        }
    }
}

/// The on-disk trade certificate: order, modulus, cells, and either a scalar
/// exponent (multiply by ζ_modulus^k) or explicit [row, col, k] replacements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TradeCertificate {
    pub order: usize,
    pub modulus: usize,
    pub cells: Vec<[usize; 2]>,
    pub assignment: CertAssignment,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CertAssignment {
    Scalar(usize),
    Explicit(Vec<[usize; 3]>),
}

impl TradeCertificate {
    pub fn from_trade(t: &Trade, base: IndexBase) -> Result<TradeCertificate> {
        let assignment = t
            .assignment
            .as_ref()
            .ok_or_else(|| Error::InvalidArgument("certificate needs an assignment".into()))?;
        let (modulus, assignment) = match assignment {
            Assignment::Scalar(c) => (c.modulus(), CertAssignment::Scalar(c.exponent())),
            Assignment::Explicit(map) => {
                let m = map.values().fold(1usize, |m, v| lcm(m, v.modulus()));
                let mut triples = Vec::with_capacity(map.len());
                for (&(i, j), v) in map {
                    triples.push([
                        base.to_external(i),
                        base.to_external(j),
                        v.re_embed(m)?.exponent(),
                    ]);
                }
                (m, CertAssignment::Explicit(triples))
            }
        };
        let cells = t
            .cells
            .iter()
            .map(|&(i, j)| [base.to_external(i), base.to_external(j)])
            .collect();
        Ok(TradeCertificate {
            order: t.n,
            modulus,
            cells,
            assignment,
        })
    }

    pub fn to_trade(&self, base: IndexBase) -> Result<Trade> {
        let mut cells = BTreeSet::new();
        for &[i, j] in &self.cells {
            cells.insert((
                base.to_internal(i, "row")?,
                base.to_internal(j, "col")?,
            ));
        }
        match &self.assignment {
            CertAssignment::Scalar(k) => {
                let c = RootExp::new(*k as i64, self.modulus)?;
                Trade::with_scalar(self.order, cells, c)
            }
            CertAssignment::Explicit(triples) => {
                let mut map = BTreeMap::new();
                for &[i, j, k] in triples {
                    map.insert(
                        (base.to_internal(i, "row")?, base.to_internal(j, "col")?),
                        RootExp::new(k as i64, self.modulus)?,
                    );
                }
                Trade::with_explicit(self.order, cells, map)
            }
        }
    }

    /// Canonical JSON text: pretty-printed with a trailing newline. Writing
    /// a parsed certificate back reproduces the bytes exactly.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<TradeCertificate> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("certificate: {e}")))
    }
}
