//! Tournament storage, Seidel adjacency matrices, their exact squares, and
//! degree statistics (currently order ≤ 64, bitset-backed).
//!
//! A tournament on `n` labeled vertices is an orientation of the complete
//! graph. Arcs are encoded as the row-major upper-triangle bit string over
//! pairs `(i, j)` with `i < j`: bit `1` means `i → j`. That encoding makes
//! exhaustive enumeration a plain integer counter.
//!
//! Vertices are 0-indexed here; human-facing formats are 1-indexed.

use crate::error::{Error, Result};

/// Largest supported order. Out-neighbourhoods are single `u64` bitsets.
pub const MAX_ORDER: usize = 64;

#[inline(always)]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline(always)]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Number of arcs, `n(n-1)/2`.
#[inline(always)]
pub const fn arc_count(n: usize) -> usize {
    n * (n - 1) / 2
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidOrder {
            n,
            reason: "tournaments have at least one vertex",
        });
    }
    if n > MAX_ORDER {
        return Err(Error::InvalidOrder {
            n,
            reason: "orders above 64 are not supported by the bitset storage",
        });
    }
    Ok(())
}

// ============================================================================
// Tournament
// ============================================================================

/// An orientation of the complete graph on `n` labeled vertices.
///
/// Immutable after construction; all operations on it are pure functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    n: usize,
    /// `out[i]` is the bitset of vertices dominated by `i`.
    out: Vec<u64>,
}

impl Tournament {
    /// Builds a tournament from its arc bits, one per pair `(i, j)` with
    /// `i < j` in row-major order; `true` means `i → j`.
    pub fn from_arc_bits(n: usize, bits: &[bool]) -> Result<Self> {
        check_order(n)?;
        let expected = arc_count(n);
        if bits.len() != expected {
            return Err(Error::ArcLength {
                n,
                expected,
                got: bits.len(),
            });
        }
        let mut out = vec![0u64; n];
        let mut k = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if bits[k] {
                    out[i] |= bit(j);
                } else {
                    out[j] |= bit(i);
                }
                k += 1;
            }
        }
        Ok(Self { n, out })
    }

    /// Builds a tournament from a `'0'`/`'1'` arc string (same pair order).
    pub fn from_bit_str(n: usize, s: &str) -> Result<Self> {
        check_order(n)?;
        let expected = arc_count(n);
        if s.len() != expected {
            return Err(Error::ArcLength {
                n,
                expected,
                got: s.len(),
            });
        }
        let mut bits = Vec::with_capacity(expected);
        for (k, c) in s.chars().enumerate() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                other => {
                    return Err(Error::Parse {
                        line: 1,
                        col: k + 1,
                        msg: format!("expected '0' or '1', found {other:?}"),
                    })
                }
            }
        }
        Self::from_arc_bits(n, &bits)
    }

    /// Builds a tournament whose arc bits are the binary digits of `code`
    /// (bit `k` of `code` is arc bit `k`). Requires `n(n-1)/2 <= 64`.
    pub fn from_arc_code(n: usize, code: u64) -> Result<Self> {
        check_order(n)?;
        let nbits = arc_count(n);
        if nbits > 64 {
            return Err(Error::InvalidOrder {
                n,
                reason: "arc code form requires n(n-1)/2 <= 64",
            });
        }
        if nbits < 64 && code >> nbits != 0 {
            return Err(Error::ArcLength {
                n,
                expected: nbits,
                got: 64 - code.leading_zeros() as usize,
            });
        }
        let mut out = vec![0u64; n];
        let mut k = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if (code >> k) & 1 == 1 {
                    out[i] |= bit(j);
                } else {
                    out[j] |= bit(i);
                }
                k += 1;
            }
        }
        Ok(Self { n, out })
    }

    /// Builds from prevalidated out-neighbour bitsets.
    pub(crate) fn from_out_sets(n: usize, out: Vec<u64>) -> Self {
        debug_assert_eq!(out.len(), n);
        debug_assert!(Self { n, out: out.clone() }.is_consistent());
        Self { n, out }
    }

    /// Samples a uniformly random tournament.
    pub fn random<R: rand::RngCore + ?Sized>(n: usize, rng: &mut R) -> Result<Self> {
        check_order(n)?;
        let nbits = arc_count(n);
        let mut bits = Vec::with_capacity(nbits);
        let mut word = 0u64;
        for k in 0..nbits {
            if k % 64 == 0 {
                word = rng.next_u64();
            }
            bits.push((word >> (k % 64)) & 1 == 1);
        }
        Self::from_arc_bits(n, &bits)
    }

    #[inline(always)]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Whether `i → j`.
    #[inline(always)]
    pub fn dominates(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.n && j < self.n);
        self.out[i] & bit(j) != 0
    }

    /// Bitset of out-neighbours of `v`.
    #[inline(always)]
    pub fn out_set(&self, v: usize) -> u64 {
        self.out[v]
    }

    /// Bitset of in-neighbours of `v`.
    #[inline(always)]
    pub fn in_set(&self, v: usize) -> u64 {
        low_mask(self.n) & !self.out[v] & !bit(v)
    }

    #[inline(always)]
    pub fn out_degree(&self, v: usize) -> u32 {
        self.out[v].count_ones()
    }

    #[inline(always)]
    pub fn in_degree(&self, v: usize) -> u32 {
        self.in_set(v).count_ones()
    }

    /// Sorted multiset of out-degrees (the score vector).
    pub fn scores(&self) -> Vec<u32> {
        let mut s: Vec<u32> = (0..self.n).map(|v| self.out_degree(v)).collect();
        s.sort_unstable();
        s
    }

    /// The arc bits in pair order.
    pub fn arc_bits(&self) -> Vec<bool> {
        let mut bits = Vec::with_capacity(arc_count(self.n));
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                bits.push(self.dominates(i, j));
            }
        }
        bits
    }

    /// The arc bits as a `'0'`/`'1'` string.
    pub fn bit_string(&self) -> String {
        self.arc_bits().iter().map(|&b| if b { '1' } else { '0' }).collect()
    }

    /// Relabels vertices: in the result, `perm[i]` plays the role of `i`.
    ///
    /// # Panics
    /// Panics if `perm` is not a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Tournament {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut seen = 0u64;
        for &p in perm {
            assert!(p < self.n && seen & bit(p) == 0, "not a permutation");
            seen |= bit(p);
        }
        let mut out = vec![0u64; self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j && self.dominates(i, j) {
                    out[perm[i]] |= bit(perm[j]);
                }
            }
        }
        Tournament { n: self.n, out }
    }

    /// Every pair carries exactly one arc and there are no loops.
    pub fn is_consistent(&self) -> bool {
        let mask = low_mask(self.n);
        for i in 0..self.n {
            if self.out[i] & !mask != 0 || self.out[i] & bit(i) != 0 {
                return false;
            }
            for j in (i + 1)..self.n {
                let ij = self.out[i] & bit(j) != 0;
                let ji = self.out[j] & bit(i) != 0;
                if ij == ji {
                    return false;
                }
            }
        }
        true
    }

    // -- text format ---------------------------------------------------------

    /// Parses the tournament text format: line 1 is `n`, line 2 is the
    /// `n(n-1)/2`-character arc bit string.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let first = lines.next().ok_or_else(|| Error::Parse {
            line: 1,
            col: 1,
            msg: "empty input, expected the order n".into(),
        })?;
        let trimmed = first.trim();
        let n: usize = trimmed.parse().map_err(|_| Error::Parse {
            line: 1,
            col: 1,
            msg: format!("expected the order n, found {trimmed:?}"),
        })?;
        check_order(n)?;
        let expected = arc_count(n);
        let second = match lines.next() {
            Some(s) => s.trim(),
            None if expected == 0 => "",
            None => {
                return Err(Error::Parse {
                    line: 2,
                    col: 1,
                    msg: format!("expected {expected} arc bits, found end of input"),
                })
            }
        };
        if second.len() != expected {
            return Err(Error::Parse {
                line: 2,
                col: second.len().min(expected) + 1,
                msg: format!("expected {expected} arc bits, found {}", second.len()),
            });
        }
        for (k, c) in second.chars().enumerate() {
            if c != '0' && c != '1' {
                return Err(Error::Parse {
                    line: 2,
                    col: k + 1,
                    msg: format!("expected '0' or '1', found {c:?}"),
                });
            }
        }
        for (extra, line) in lines.enumerate() {
            if !line.trim().is_empty() {
                return Err(Error::Parse {
                    line: 3 + extra,
                    col: 1,
                    msg: "unexpected trailing content".into(),
                });
            }
        }
        Self::from_bit_str(n, second)
    }

    /// Renders the tournament text format (inverse of [`Tournament::parse`]).
    pub fn to_text(&self) -> String {
        format!("{}\n{}\n", self.n, self.bit_string())
    }
}

impl std::fmt::Debug for Tournament {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Tournament(n={}, bits={})", self.n, self.bit_string())
    }
}

// ============================================================================
// SeidelMatrix
// ============================================================================

/// The Seidel adjacency matrix `S = A - Aᵀ` of a tournament: skew-symmetric,
/// zero diagonal, `±1` off the diagonal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SeidelMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl SeidelMatrix {
    /// The Seidel matrix of `t`: `+1` at `(i, j)` iff `i → j`.
    pub fn of(t: &Tournament) -> Self {
        let n = t.n();
        let mut entries = vec![0i64; n * n];
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                entries[i * n + j] = if t.dominates(i, j) { 1 } else { -1 };
            }
        }
        Self { n, entries }
    }

    #[inline(always)]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline(always)]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// Entries of `S + I`, the `±1` matrix tested by the EW predicate.
    pub fn plus_identity(&self) -> Vec<i64> {
        let mut b = self.entries.clone();
        for i in 0..self.n {
            b[i * self.n + i] = 1;
        }
        b
    }

    /// The tournament this matrix encodes.
    pub fn to_tournament(&self) -> Tournament {
        let mut out = vec![0u64; self.n];
        for (i, o) in out.iter_mut().enumerate() {
            for j in 0..self.n {
                if self.get(i, j) == 1 {
                    *o |= bit(j);
                }
            }
        }
        Tournament::from_out_sets(self.n, out)
    }

    pub(crate) fn from_parts(n: usize, entries: Vec<i64>) -> Self {
        debug_assert_eq!(entries.len(), n * n);
        Self { n, entries }
    }

    /// Parses the Seidel text format: `n` lines of `n` whitespace-separated
    /// values from `{-1, 0, 1}`. Validates skew-symmetry.
    pub fn parse(text: &str) -> Result<Self> {
        let rows: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .collect();
        if rows.is_empty() {
            return Err(Error::Parse {
                line: 1,
                col: 1,
                msg: "empty input, expected a square matrix".into(),
            });
        }
        let n = rows[0].1.split_whitespace().count();
        check_order(n)?;
        if rows.len() != n {
            let (line, _) = rows.last().copied().unwrap();
            return Err(Error::Parse {
                line: line + 1,
                col: 1,
                msg: format!("expected {n} rows to match {n} columns, found {}", rows.len()),
            });
        }
        let mut entries = vec![0i64; n * n];
        for (i, &(line_idx, line)) in rows.iter().enumerate() {
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != n {
                return Err(Error::Parse {
                    line: line_idx + 1,
                    col: toks.len().min(n) + 1,
                    msg: format!("expected {n} entries, found {}", toks.len()),
                });
            }
            for (j, tok) in toks.iter().enumerate() {
                let v: i64 = tok.parse().map_err(|_| Error::Parse {
                    line: line_idx + 1,
                    col: j + 1,
                    msg: format!("expected -1, 0 or 1, found {tok:?}"),
                })?;
                if !(-1..=1).contains(&v) {
                    return Err(Error::Parse {
                        line: line_idx + 1,
                        col: j + 1,
                        msg: format!("expected -1, 0 or 1, found {v}"),
                    });
                }
                entries[i * n + j] = v;
            }
        }
        for i in 0..n {
            if entries[i * n + i] != 0 {
                return Err(Error::Parse {
                    line: rows[i].0 + 1,
                    col: i + 1,
                    msg: "diagonal entry must be 0".into(),
                });
            }
            for j in 0..n {
                if i != j && entries[i * n + j] == 0 {
                    return Err(Error::Parse {
                        line: rows[i].0 + 1,
                        col: j + 1,
                        msg: "off-diagonal entry must be -1 or 1".into(),
                    });
                }
                if entries[i * n + j] != -entries[j * n + i] {
                    return Err(Error::Parse {
                        line: rows[j].0 + 1,
                        col: i + 1,
                        msg: format!("matrix is not skew-symmetric at ({}, {})", i + 1, j + 1),
                    });
                }
            }
        }
        Ok(Self { n, entries })
    }

    /// Renders the Seidel text format.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if j > 0 {
                    s.push(' ');
                }
                s.push_str(&self.get(i, j).to_string());
            }
            s.push('\n');
        }
        s
    }
}

impl std::fmt::Debug for SeidelMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SeidelMatrix(n={})", self.n)
    }
}

// ============================================================================
// GramSquare
// ============================================================================

/// The exact integer square `S²` of a Seidel matrix. Symmetric with every
/// diagonal entry `1 - n`; off-diagonal entries are odd iff `n` is odd.
#[derive(Clone, PartialEq, Eq)]
pub struct GramSquare {
    n: usize,
    entries: Vec<i64>,
}

impl GramSquare {
    pub fn of(s: &SeidelMatrix) -> Self {
        let n = s.n();
        let mut entries = vec![0i64; n * n];
        for i in 0..n {
            for j in i..n {
                let mut acc = 0i64;
                for k in 0..n {
                    acc += s.get(i, k) * s.get(k, j);
                }
                entries[i * n + j] = acc;
                entries[j * n + i] = acc;
            }
        }
        let g = Self { n, entries };
        debug_assert!((0..n).all(|i| g.m(i, i) == 1 - n as i64));
        g
    }

    #[inline(always)]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry `m_ij` of `S²`.
    #[inline(always)]
    pub fn m(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    /// `Σ_{i<j} m_ij`.
    pub fn sum_upper(&self) -> i64 {
        let mut acc = 0;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                acc += self.m(i, j);
            }
        }
        acc
    }

    /// `Σ_{i<j} m_ij²`.
    pub fn sum_sq_upper(&self) -> i64 {
        let mut acc = 0;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                acc += self.m(i, j) * self.m(i, j);
            }
        }
        acc
    }

    /// Whether `S² = c·I`.
    pub fn is_scalar(&self, c: i64) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| self.m(i, j) == if i == j { c } else { 0 })
        })
    }

    /// Sorted multiset of `|m_ij|` over pairs `i < j`.
    pub fn abs_upper_multiset(&self) -> Vec<i64> {
        let mut v = Vec::with_capacity(arc_count(self.n));
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                v.push(self.m(i, j).abs());
            }
        }
        v.sort_unstable();
        v
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[i64] {
        &self.entries
    }
}

impl std::fmt::Debug for GramSquare {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GramSquare(n={})", self.n)
    }
}

// ============================================================================
// DegreeProfile
// ============================================================================

/// Vertex and pair degree statistics of a tournament.
///
/// Carries `d⁺(i)`, `d⁻(i)`, the pair tables `d⁺(i,j)`, `d⁻(i,j)` and
/// `γ_ij = |N⁺(i) ∩ N⁻(j)| + |N⁻(i) ∩ N⁺(j)|`.
#[derive(Clone, Debug)]
pub struct DegreeProfile {
    n: usize,
    out_degrees: Vec<u32>,
    in_degrees: Vec<u32>,
    pair_out: Vec<u32>,
    pair_in: Vec<u32>,
    gamma: Vec<u32>,
}

impl DegreeProfile {
    pub fn of(t: &Tournament) -> Self {
        let n = t.n();
        let out_degrees: Vec<u32> = (0..n).map(|v| t.out_degree(v)).collect();
        let in_degrees: Vec<u32> = (0..n).map(|v| t.in_degree(v)).collect();
        let mut pair_out = vec![0u32; n * n];
        let mut pair_in = vec![0u32; n * n];
        let mut gamma = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let po = (t.out_set(i) & t.out_set(j)).count_ones();
                let pi = (t.in_set(i) & t.in_set(j)).count_ones();
                pair_out[i * n + j] = po;
                pair_in[i * n + j] = pi;
                gamma[i * n + j] = n as u32 - 2 - po - pi;
            }
        }
        Self {
            n,
            out_degrees,
            in_degrees,
            pair_out,
            pair_in,
            gamma,
        }
    }

    #[inline(always)]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn out_degree(&self, v: usize) -> u32 {
        self.out_degrees[v]
    }

    pub fn in_degree(&self, v: usize) -> u32 {
        self.in_degrees[v]
    }

    pub fn out_degrees(&self) -> &[u32] {
        &self.out_degrees
    }

    pub fn in_degrees(&self) -> &[u32] {
        &self.in_degrees
    }

    /// `d⁺(i, j) = |N⁺(i) ∩ N⁺(j)|`.
    pub fn pair_out(&self, i: usize, j: usize) -> u32 {
        self.pair_out[i * self.n + j]
    }

    /// `d⁻(i, j) = |N⁻(i) ∩ N⁻(j)|`.
    pub fn pair_in(&self, i: usize, j: usize) -> u32 {
        self.pair_in[i * self.n + j]
    }

    pub fn gamma(&self, i: usize, j: usize) -> u32 {
        self.gamma[i * self.n + j]
    }
}

/// `m_ij = 2γ_ij - n + 2`, the off-diagonal entry of `S²` determined by the
/// degree profile.
pub fn m_from_gamma(gamma: u32, n: usize) -> i64 {
    2 * gamma as i64 - n as i64 + 2
}

// ============================================================================
// Tests
// ============================================================================
