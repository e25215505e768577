//! Generators for the named tournament families and the bundled instances.

use crate::error::{Error, Result};
use crate::tournament::{bit, low_mask, DegreeProfile, SeidelMatrix, Tournament, MAX_ORDER};
use sha2::{Digest, Sha256};

// ============================================================================
// Paley tournaments
// ============================================================================

/// A prime `q ≡ 3 (mod 4)` together with its quadratic-residue table.
///
/// For such `q`, `-1` is a non-residue, so "is `y - x` a nonzero square"
/// orients every pair exactly once.
#[derive(Clone, Debug)]
pub struct PrimeModulus {
    q: u64,
    residues: Vec<bool>,
}

impl PrimeModulus {
    /// Trial-division primality plus the residue-class requirement.
    pub fn new(q: u64) -> Result<Self> {
        if q > 1_000_000 {
            return Err(Error::precondition(format!(
                "prime modulus {q} exceeds the trial-division guard of 10^6"
            )));
        }
        if q < 2 || !is_prime(q) {
            return Err(Error::NotPrime { q });
        }
        if q % 4 != 3 {
            return Err(Error::BadResidue { q });
        }
        let mut residues = vec![false; q as usize];
        for x in 1..q {
            residues[((x * x) % q) as usize] = true;
        }
        Ok(Self { q, residues })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Whether `x mod q` is a nonzero quadratic residue.
    pub fn is_residue(&self, x: u64) -> bool {
        let r = (x % self.q) as usize;
        r != 0 && self.residues[r]
    }

    /// The Paley tournament on `q` vertices: `x → y` iff `y - x` is a
    /// nonzero square mod `q`.
    pub fn tournament(&self) -> Result<Tournament> {
        let q = self.q as usize;
        if q > MAX_ORDER {
            return Err(Error::InvalidOrder {
                n: q,
                reason: "orders above 64 are not supported by the bitset storage",
            });
        }
        let mut out = vec![0u64; q];
        for x in 0..q as u64 {
            for y in 0..q as u64 {
                if x == y {
                    continue;
                }
                let fwd = self.is_residue((y + self.q - x) % self.q);
                let bwd = self.is_residue((x + self.q - y) % self.q);
                assert!(fwd != bwd, "totality requires -1 to be a non-residue");
                if fwd {
                    out[x as usize] |= bit(y as usize);
                }
            }
        }
        Ok(Tournament::from_out_sets(q, out))
    }
}

fn is_prime(q: u64) -> bool {
    if q < 4 {
        return q >= 2;
    }
    if q.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Convenience wrapper building [`PrimeModulus`] and its tournament.
pub fn paley(q: u64) -> Result<Tournament> {
    PrimeModulus::new(q)?.tournament()
}

// ============================================================================
// Vertex surgery
// ============================================================================

/// Appends a new vertex dominating every existing vertex.
pub fn add_dominating_vertex(t: &Tournament) -> Result<Tournament> {
    let n = t.n();
    if n + 1 > MAX_ORDER {
        return Err(Error::InvalidOrder {
            n: n + 1,
            reason: "orders above 64 are not supported by the bitset storage",
        });
    }
    let mut out: Vec<u64> = (0..n).map(|v| t.out_set(v)).collect();
    out.push(low_mask(n));
    Ok(Tournament::from_out_sets(n + 1, out))
}

/// The induced sub-tournament on the other vertices; labels above `v`
/// shift down by one.
pub fn delete_vertex(t: &Tournament, v: usize) -> Result<Tournament> {
    let n = t.n();
    if v >= n {
        return Err(Error::VertexOutOfRange { v, n });
    }
    if n < 2 {
        return Err(Error::InvalidOrder {
            n: 0,
            reason: "cannot delete the last vertex",
        });
    }
    let keep_low = low_mask(v);
    let mut out = Vec::with_capacity(n - 1);
    for i in 0..n {
        if i == v {
            continue;
        }
        let s = t.out_set(i);
        out.push((s & keep_low) | ((s >> (v + 1)) << v));
    }
    Ok(Tournament::from_out_sets(n - 1, out))
}

/// The transitive (linear-order) tournament: `i → j` iff `i < j`.
pub fn transitive(n: usize) -> Result<Tournament> {
    Tournament::from_arc_bits(n, &vec![true; n * (n - 1) / 2])
}

// ============================================================================
// Bundled instances
// ============================================================================

/// The 10×10 Seidel matrix bundled as a primary test vector, stored as data
/// and integrity-checked on load.
const PAPER10_SEIDEL: &str = "\
0 -1 1 -1 1 -1 -1 1 -1 -1
1 0 -1 -1 -1 -1 1 1 1 -1
-1 1 0 -1 -1 1 -1 1 -1 -1
1 1 1 0 -1 -1 1 -1 -1 -1
-1 1 1 1 0 -1 -1 -1 1 -1
1 1 -1 1 1 0 -1 -1 -1 -1
1 -1 1 -1 1 1 0 -1 1 -1
-1 -1 -1 1 1 1 1 0 -1 -1
1 -1 1 1 -1 1 -1 1 0 -1
1 1 1 1 1 1 1 1 1 0
";

const PAPER10_SHA256: &str = "170da5de9866f9f99784c98676b08331fd9a9988079e979d72bd9d35c2da2054";

/// Two 3-cycles, the first dominating the second vertex-wise.
fn ew6() -> Tournament {
    let mut out = vec![0u64; 6];
    for (a, b) in [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)] {
        out[a] |= bit(b);
    }
    for o in out.iter_mut().take(3) {
        *o |= bit(3) | bit(4) | bit(5);
    }
    Tournament::from_out_sets(6, out)
}

fn paper10() -> Tournament {
    let digest = Sha256::digest(PAPER10_SEIDEL.as_bytes());
    let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
    assert_eq!(hex, PAPER10_SHA256, "bundled 10-vertex matrix is corrupted");
    SeidelMatrix::parse(PAPER10_SEIDEL)
        .expect("bundled 10-vertex matrix must parse")
        .to_tournament()
}

/// Looks up a bundled tournament: `paper10`, `ew6`, or `transitive(n)`.
pub fn builtin(name: &str) -> Result<Tournament> {
    let name = name.trim();
    match name {
        "paper10" => Ok(paper10()),
        "ew6" => Ok(ew6()),
        _ => {
            if let Some(rest) = name.strip_prefix("transitive(").and_then(|r| r.strip_suffix(')')) {
                let n: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| Error::UnknownBuiltin(name.to_string()))?;
                return transitive(n);
            }
            Err(Error::UnknownBuiltin(name.to_string()))
        }
    }
}

/// Names accepted by [`builtin`], for help text.
pub const BUILTIN_NAMES: &[&str] = &["paper10", "ew6", "transitive(n)"];

// ============================================================================
// Regularity predicates
// ============================================================================

/// Whether every pair `i ≠ j` has the same `d⁺(i, j)`. When it holds (for
/// `n >= 3`), the order is `3 (mod 4)` and the common value is `(n-3)/4`;
/// both facts are asserted.
pub fn is_doubly_regular(t: &Tournament) -> bool {
    let n = t.n();
    if n < 3 {
        return false;
    }
    let h = (t.out_set(0) & t.out_set(1)).count_ones();
    for i in 0..n {
        for j in (i + 1)..n {
            if (t.out_set(i) & t.out_set(j)).count_ones() != h {
                return false;
            }
        }
    }
    assert_eq!(n % 4, 3, "doubly regular order must be 3 mod 4");
    assert_eq!(h as usize, (n - 3) / 4, "pair out-degree must be (n-3)/4");
    true
}
