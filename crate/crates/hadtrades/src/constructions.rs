//! Named matrix generators. Every constructor returns an exactly verified
//! matrix; the two printed example matrices are hardcoded verbatim because
//! their row/column ordering is load-bearing for the companion cell sets.

use crate::cyclotomic::{lcm, RootExp};
use crate::matrix::UnitMatrix;
use crate::trades::Trade;
use crate::{limits, Error, Result};
use std::collections::BTreeMap;

/// Cell positions, 0-based (row, col).
pub type Cell = (usize, usize);

/// Sylvester matrix of order 2^k: H_1 = [1] and H_{2^k} = H_2 ⊗ H_{2^{k−1}}.
pub fn sylvester(k: usize) -> Result<UnitMatrix> {
    if k > limits::MAX_SYLVESTER_K {
        return Err(Error::SizeLimit {
            what: "sylvester exponent",
            got: k,
            limit: limits::MAX_SYLVESTER_K,
        });
    }
    let h1 = UnitMatrix::new(1, 2, vec![Some(0)])?.into_verified_hadamard()?;
    if k == 0 {
        return Ok(h1);
    }
    let h2 = UnitMatrix::from_signs(&["++", "+-"])?.into_verified_hadamard()?;
    let mut out = h2.clone();
    for _ in 1..k {
        out = UnitMatrix::kronecker(&h2, &out)?;
    }
    Ok(out)
}

/// Fourier matrix of order n: entry (j, k) = ζ_n^{jk}, modulus n.
pub fn fourier(n: usize) -> Result<UnitMatrix> {
    if n == 0 {
        return Err(Error::InvalidArgument("order must be positive".into()));
    }
    if n > limits::MAX_FOURIER_ORDER {
        return Err(Error::SizeLimit {
            what: "fourier order",
            got: n,
            limit: limits::MAX_FOURIER_ORDER,
        });
    }
    let mut entries = Vec::with_capacity(n * n);
    for j in 0..n {
        for k in 0..n {
            entries.push(Some((j * k) % n));
        }
    }
    UnitMatrix::new(n, n, entries)?.into_verified_hadamard()
}

const PALEY_PRIMES: [usize; 5] = [3, 7, 11, 19, 23];

/// Legendre symbol over GF(q) for prime q, by Euler's criterion.
fn legendre(a: i64, q: i64) -> i64 {
    let a = a.rem_euclid(q);
    if a == 0 {
        return 0;
    }
    let mut result = 1i64;
    let mut base = a % q;
    let mut e = (q - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % q;
        }
        base = base * base % q;
        e >>= 1;
    }
    if result == q - 1 {
        -1
    } else {
        result
    }
}

/// Paley construction of order q + 1 from the quadratic-residue (Jacobsthal)
/// matrix of GF(q), for prime q ≡ 3 (mod 4), normalised so that the diagonal
/// is +1 and H + Hᵀ = 2I.
pub fn paley_i(q: usize) -> Result<UnitMatrix> {
    if !PALEY_PRIMES.contains(&q) {
        return Err(Error::InvalidArgument(format!(
            "paley order must be one of {PALEY_PRIMES:?}, got {q}"
        )));
    }
    let n = q + 1;
    let qi = q as i64;
    let mut entries = vec![Some(0); n * n];
    // Index 0 is the point at infinity; 1..=q are the field elements 0..q-1.
    for j in 1..n {
        entries[j] = Some(0); // first row +1
        entries[j * n] = Some(1); // first column -1
    }
    for i in 1..n {
        for j in 1..n {
            if i == j {
                continue;
            }
            let chi = legendre(i as i64 - j as i64, qi);
            entries[i * n + j] = Some(if chi == 1 { 0 } else { 1 });
        }
    }
    UnitMatrix::new(n, 2, entries)?.into_verified_hadamard()
}

/// The printed order-8 Paley matrix, rows exactly as printed, together with
/// its shaded 8-cell set (returned 0-based by [`example_paley8_shaded`]).
pub fn example_paley8() -> UnitMatrix {
    UnitMatrix::from_signs(&[
        "++++++++",
        "+---+-++",
        "++---+-+",
        "+++---+-",
        "+-++---+",
        "++-++---",
        "+-+-++--",
        "+--+-++-",
    ])
    .expect("static matrix is well-formed")
    .into_verified_hadamard()
    .expect("static matrix is Hadamard")
}

/// The shaded cells of the order-8 example, 0-based.
pub fn example_paley8_shaded() -> Vec<Cell> {
    vec![
        (0, 0),
        (0, 1),
        (2, 3),
        (2, 4),
        (3, 3),
        (3, 4),
        (5, 0),
        (5, 1),
    ]
}

/// Petrescu's 7×7 complex Hadamard matrix with u = ζ_3, encoded over
/// modulus 6: u ↦ 2, −u ↦ 5, −u² ↦ 1, −1 ↦ 3.
pub fn petrescu7() -> UnitMatrix {
    const ONE: usize = 0;
    const U: usize = 2; // zeta_3
    const NEG_U: usize = 5;
    const NEG_U2: usize = 1;
    const NEG1: usize = 3;
    let rows: [[usize; 7]; 7] = [
        [ONE, ONE, ONE, ONE, ONE, ONE, ONE],
        [ONE, NEG_U, U, NEG_U2, NEG1, NEG1, NEG_U],
        [ONE, U, NEG_U, NEG1, NEG_U2, NEG1, NEG_U],
        [ONE, NEG_U2, NEG1, NEG_U, U, NEG_U, NEG1],
        [ONE, NEG1, NEG_U2, U, NEG_U, NEG_U, NEG1],
        [ONE, NEG1, NEG1, NEG_U, NEG_U, U, NEG_U2],
        [ONE, NEG_U, NEG_U, NEG1, NEG1, NEG_U2, U],
    ];
    let entries = rows.iter().flatten().map(|&k| Some(k)).collect();
    UnitMatrix::new(7, 6, entries)
        .expect("static matrix is well-formed")
        .into_verified_hadamard()
        .expect("static matrix is Hadamard")
}

/// The shaded cells of the Petrescu matrix, 0-based: two 2×2 rank-one
/// blocks on the diagonal.
pub fn petrescu7_shaded() -> Vec<Cell> {
    let mut cells = petrescu7_first_block();
    cells.extend(petrescu7_second_block());
    cells
}

/// The first shaded block, rows {2,3} × cols {2,3} in 1-based terms.
pub fn petrescu7_first_block() -> Vec<Cell> {
    vec![(1, 1), (1, 2), (2, 1), (2, 2)]
}

/// The second shaded block, rows {4,5} × cols {4,5} in 1-based terms.
pub fn petrescu7_second_block() -> Vec<Cell> {
    vec![(3, 3), (3, 4), (4, 3), (4, 4)]
}

/// The switch of the Petrescu shaded set with parameter c ≠ 1: the first
/// block is multiplied by c and the second by conj(c), in modulus
/// lcm(6, order of c). For c = −1 the two coincide and the trade is scalar.
pub fn petrescu_trade(c: &RootExp) -> Result<Trade> {
    if c.is_one() {
        return Err(Error::InvalidArgument(
            "switch parameter must differ from 1".into(),
        ));
    }
    let m = lcm(6, c.modulus());
    let h = petrescu7().re_embed(m)?;
    let c = c.re_embed(m)?;
    let mut values = BTreeMap::new();
    for (i, j) in petrescu7_first_block() {
        values.insert((i, j), h.entry(i, j).expect("zero-free").mul(&c)?);
    }
    for (i, j) in petrescu7_second_block() {
        values.insert((i, j), h.entry(i, j).expect("zero-free").mul(&c.conj())?);
    }
    let cells = values.keys().copied().collect();
    Trade::with_explicit(7, cells, values)
}

/// The woven W(6,4) weighing matrix.
pub fn weave_w64() -> UnitMatrix {
    let mut w = UnitMatrix::from_signs(&[
        "00++++",
        "00++--",
        "++00+-",
        "++00-+",
        "+-+-00",
        "-++-00",
    ])
    .expect("static matrix is well-formed");
    let ok = w.is_weighing(4).expect("entries are real");
    assert!(ok, "static matrix is W(6,4)");
    w
}

/// The shaded 2×2 rank-one block of the W(6,4): rows {0,1} × cols {2,3},
/// 0-based.
pub fn weave_w64_shaded_block() -> (Vec<usize>, Vec<usize>) {
    (vec![0, 1], vec![2, 3])
}
