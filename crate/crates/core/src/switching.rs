//! Switching, diagonal similarity, equivalence testing and switching-class
//! fingerprints.
//!
//! Switching a tournament by a vertex subset `X` reverses exactly the arcs
//! between `X` and its complement; on Seidel matrices this is conjugation by
//! the `±1` diagonal matrix with `-1` at the positions of `X`. Diamond counts,
//! principal minors and hence characteristic polynomials are invariants of
//! the switching class.

use crate::counting::count_diamonds_spectral;
use crate::error::{Error, Result};
use crate::spectral::CharPoly;
use crate::tournament::{bit, low_mask, GramSquare, SeidelMatrix, Tournament};
use num_bigint::BigInt;

// ============================================================================
// SwitchSet / SignDiagonal
// ============================================================================

/// A subset of vertices, stored as a bitmask.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SwitchSet {
    mask: u64,
}

impl SwitchSet {
    pub fn from_mask(mask: u64) -> Self {
        Self { mask }
    }

    pub fn from_indices(indices: &[usize], n: usize) -> Result<Self> {
        let mut mask = 0u64;
        for &v in indices {
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            mask |= bit(v);
        }
        Ok(Self { mask })
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn contains(&self, v: usize) -> bool {
        self.mask & bit(v) != 0
    }

    /// Member vertices in increasing order.
    pub fn indices(&self, n: usize) -> Vec<usize> {
        (0..n).filter(|&v| self.contains(v)).collect()
    }
}

/// A `±1` diagonal matrix, the Seidel-side image of a switch set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignDiagonal {
    signs: Vec<i8>,
}

impl SignDiagonal {
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::precondition("diagonal entries must be ±1"));
        }
        Ok(Self { signs })
    }

    /// `-1` exactly at the vertices of `x`.
    pub fn from_switch_set(x: SwitchSet, n: usize) -> Self {
        Self {
            signs: (0..n).map(|v| if x.contains(v) { -1 } else { 1 }).collect(),
        }
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn sign(&self, v: usize) -> i64 {
        self.signs[v] as i64
    }

    /// The switch set `{ v : ε_v = -1 }`.
    pub fn to_switch_set(&self) -> SwitchSet {
        let mut mask = 0u64;
        for (v, &s) in self.signs.iter().enumerate() {
            if s == -1 {
                mask |= bit(v);
            }
        }
        SwitchSet::from_mask(mask)
    }
}

// ============================================================================
// Operations
// ============================================================================

/// Reverses all arcs between `x` and its complement.
pub fn switch(t: &Tournament, x: SwitchSet) -> Tournament {
    let n = t.n();
    let mask = low_mask(n);
    let xm = x.mask() & mask;
    let mut out = vec![0u64; n];
    for (i, slot) in out.iter_mut().enumerate() {
        let side = xm >> i & 1;
        // arcs i→j stay iff j is on i's side of the cut; crossing arcs flip
        let same: u64 = if side == 1 { xm } else { !xm & mask };
        let cross = mask & !same;
        *slot = (t.out_set(i) & same) | (t.in_set(i) & cross);
    }
    Tournament::from_out_sets(n, out)
}

/// Conjugation `D·S·D`; equals the Seidel matrix of the corresponding switch.
pub fn diagonal_similar(s: &SeidelMatrix, d: &SignDiagonal) -> SeidelMatrix {
    let n = s.n();
    assert_eq!(d.signs().len(), n, "diagonal size mismatch");
    let mut entries = vec![0i64; n * n];
    for i in 0..n {
        for j in 0..n {
            entries[i * n + j] = d.sign(i) * s.get(i, j) * d.sign(j);
        }
    }
    SeidelMatrix::from_parts(n, entries)
}

/// Switches by the in-neighbourhood of `v`, after which `v` dominates every
/// other vertex.
pub fn normalize_dominant(t: &Tournament, v: usize) -> Tournament {
    debug_assert!(v < t.n());
    let res = switch(t, SwitchSet::from_mask(t.in_set(v)));
    debug_assert_eq!(res.out_degree(v) as usize, t.n() - 1);
    res
}

/// Searches for a `±1` diagonal witness `D` with `D·S₁·D = S₂` (first sign
/// fixed `+1`), i.e. a switch set carrying `t1` to `t2` on the same labeling.
///
/// With the first sign fixed, row 0 of the conjugation identity pins every
/// other sign, so the candidate is unique and checked directly.
pub fn are_switching_equivalent(t1: &Tournament, t2: &Tournament) -> Result<Option<SignDiagonal>> {
    if t1.n() != t2.n() {
        return Err(Error::precondition(format!(
            "orders differ: {} vs {}",
            t1.n(),
            t2.n()
        )));
    }
    let n = t1.n();
    // ε_j = s2(0,j)·s1(0,j); vertex j keeps its arc to 0 iff signs agree
    let mut mask = 0u64;
    for j in 1..n {
        if t1.dominates(0, j) != t2.dominates(0, j) {
            mask |= bit(j);
        }
    }
    let x = SwitchSet::from_mask(mask);
    if &switch(t1, x) == t2 {
        Ok(Some(SignDiagonal::from_switch_set(x, n)))
    } else {
        Ok(None)
    }
}

/// Equivalence up to relabeling: brute-force over all vertex permutations,
/// testing labeled switching equivalence for each. Guarded to `n <= 8`.
pub fn are_switching_equivalent_up_to_iso(
    t1: &Tournament,
    t2: &Tournament,
) -> Result<Option<(Vec<usize>, SignDiagonal)>> {
    if t1.n() != t2.n() {
        return Err(Error::precondition(format!(
            "orders differ: {} vs {}",
            t1.n(),
            t2.n()
        )));
    }
    let n = t1.n();
    if n > 8 {
        return Err(Error::precondition(format!(
            "relabeling equivalence is brute-force and limited to order 8, got {n}"
        )));
    }
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let relabeled = t1.relabel(&perm);
        if let Some(d) = are_switching_equivalent(&relabeled, t2)? {
            return Ok(Some((perm, d)));
        }
        if !next_permutation(&mut perm) {
            return Ok(None);
        }
    }
}

/// Lexicographic successor in place; false once the last permutation passed.
fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

// ============================================================================
// Fingerprint
// ============================================================================

/// A cheap invariant of the switching class up to relabeling: the Seidel
/// characteristic polynomial, the sorted multiset of `|m_ij|`, and the
/// diamond count. Equal fingerprints are necessary but not sufficient for
/// equivalence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    pub charpoly: Vec<BigInt>,
    pub abs_m_multiset: Vec<i64>,
    pub delta: u64,
}

pub fn fingerprint(t: &Tournament) -> Fingerprint {
    let s = SeidelMatrix::of(t);
    let g = GramSquare::of(&s);
    Fingerprint {
        charpoly: CharPoly::of_seidel(&s).coeffs().to_vec(),
        abs_m_multiset: g.abs_upper_multiset(),
        delta: count_diamonds_spectral(t),
    }
}
