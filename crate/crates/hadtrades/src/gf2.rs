//! Minimal GF(2) linear algebra on bit-packed vectors: reduced echelon
//! basis with insertion and membership tests.

/// A GF(2) vector of `nbits` bits, packed into u64 words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitVec {
    nbits: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zero(nbits: usize) -> BitVec {
        BitVec {
            nbits,
            words: vec![0; nbits.div_ceil(64)],
        }
    }

    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.nbits);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.nbits, other.nbits);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Index of the lowest set bit.
    pub fn first_set(&self) -> Option<usize> {
        for (w, word) in self.words.iter().enumerate() {
            if *word != 0 {
                return Some(w * 64 + word.trailing_zeros() as usize);
            }
        }
        None
    }
}

/// A reduced row-echelon basis over GF(2). Each basis row owns a distinct
/// pivot bit that no other row uses.
#[derive(Clone, Debug, Default)]
pub struct Gf2Basis {
    rows: Vec<(usize, BitVec)>, // (pivot, row), sorted by pivot
}

impl Gf2Basis {
    pub fn new() -> Gf2Basis {
        Gf2Basis { rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &BitVec> {
        self.rows.iter().map(|(_, r)| r)
    }

    fn reduce(&self, mut v: BitVec) -> BitVec {
        for (pivot, row) in &self.rows {
            if v.get(*pivot) {
                v.xor_assign(row);
            }
        }
        v
    }

    /// Inserts a vector; returns true when it enlarged the span.
    pub fn insert(&mut self, v: BitVec) -> bool {
        let v = self.reduce(v);
        let Some(pivot) = v.first_set() else {
            return false;
        };
        // Clear the new pivot from existing rows to keep the basis reduced.
        for (_, row) in self.rows.iter_mut() {
            if row.get(pivot) {
                row.xor_assign(&v);
            }
        }
        self.rows.push((pivot, v));
        self.rows.sort_by_key(|(p, _)| *p);
        true
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v.clone()).is_zero()
    }
}
