//! Diamond and 3-cycle counters: a 4-subset oracle and the closed-form
//! counters driven by degrees and by the entries of `S²`.
//!
//! A diamond is a 4-subtournament containing exactly one 3-cycle. The oracle
//! classifies every 4-subset that way; the spectral counters evaluate
//! `δ_T = (n²(n-1)(n-2) - 6·Σ_{i<j} m_ij²) / 96` and
//! `c₃(T) = (n(n-1)(n-2) + 6·Σ_{i<j} m_ij) / 24` with exact integer
//! arithmetic. Both divisions are exact for every tournament; that is
//! asserted, never rounded.

use crate::error::{Error, Result};
use crate::tournament::{GramSquare, SeidelMatrix, Tournament};
use serde::Serialize;

/// `C(n, k)` as an exact integer.
pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial overflow")
}

/// Which counting path produced a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CountMethod {
    Oracle,
    Spectral,
}

/// Diamond and 3-cycle counts of one tournament.
#[derive(Clone, Debug, Serialize)]
pub struct CountReport {
    pub n: usize,
    pub delta: u64,
    pub c3: u64,
    pub method: CountMethod,
}

impl CountReport {
    /// Counts with the requested method.
    pub fn of(t: &Tournament, method: CountMethod) -> Self {
        let (delta, c3) = match method {
            CountMethod::Oracle => (count_diamonds_oracle(t), count_3cycles_degree(t)),
            CountMethod::Spectral => (count_diamonds_spectral(t), count_3cycles_spectral(t)),
        };
        Self { n: t.n(), delta, c3, method }
    }
}

#[inline(always)]
fn is_cyclic_triple(t: &Tournament, a: usize, b: usize, c: usize) -> bool {
    (t.dominates(a, b) && t.dominates(b, c) && t.dominates(c, a))
        || (t.dominates(a, c) && t.dominates(c, b) && t.dominates(b, a))
}

/// Number of 3-cycles in the sub-tournament induced by `{a, b, c, d}`.
#[inline]
fn cycles_in_quad(t: &Tournament, a: usize, b: usize, c: usize, d: usize) -> u32 {
    is_cyclic_triple(t, a, b, c) as u32
        + is_cyclic_triple(t, a, b, d) as u32
        + is_cyclic_triple(t, a, c, d) as u32
        + is_cyclic_triple(t, b, c, d) as u32
}

/// Brute-force diamond count: scans all 4-subsets and keeps those whose
/// induced sub-tournament has exactly one 3-cycle.
pub fn count_diamonds_oracle(t: &Tournament) -> u64 {
    let n = t.n();
    let mut count = 0u64;
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                for d in (c + 1)..n {
                    if cycles_in_quad(t, a, b, c, d) == 1 {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

/// Diamond count from the entries of `S²`.
pub fn count_diamonds_spectral(t: &Tournament) -> u64 {
    let g = GramSquare::of(&SeidelMatrix::of(t));
    delta_from_gram(&g)
}

pub(crate) fn delta_from_gram(g: &GramSquare) -> u64 {
    let n = g.n() as i64;
    let numerator = n * n * (n - 1) * (n - 2) - 6 * g.sum_sq_upper();
    assert!(
        numerator >= 0 && numerator % 96 == 0,
        "diamond formula must yield a nonnegative integer, got {numerator}/96"
    );
    (numerator / 96) as u64
}

/// 3-cycle count from the out-degrees: `C(n,3) - Σ_i C(d⁺(i), 2)`.
pub fn count_3cycles_degree(t: &Tournament) -> u64 {
    let n = t.n() as u64;
    let transitive: u64 = (0..t.n())
        .map(|v| binomial(t.out_degree(v) as u64, 2))
        .sum();
    binomial(n, 3) - transitive
}

/// 3-cycle count from the entries of `S²`.
pub fn count_3cycles_spectral(t: &Tournament) -> u64 {
    let g = GramSquare::of(&SeidelMatrix::of(t));
    let n = g.n() as i64;
    let numerator = n * (n - 1) * (n - 2) + 6 * g.sum_upper();
    assert!(
        numerator >= 0 && numerator % 24 == 0,
        "3-cycle formula must yield a nonnegative integer, got {numerator}/24"
    );
    (numerator / 24) as u64
}

/// For a vertex `v` dominating every other vertex, returns
/// `(δ(T - v), c₃(T - v))`; the two summands of `δ_T`.
pub fn diamond_delta_decomposition(t: &Tournament, v: usize) -> Result<(u64, u64)> {
    let n = t.n();
    if v >= n {
        return Err(Error::VertexOutOfRange { v, n });
    }
    if t.out_degree(v) as usize != n - 1 {
        return Err(Error::precondition(format!(
            "vertex {v} does not dominate all other vertices (out-degree {} of {})",
            t.out_degree(v),
            n - 1
        )));
    }
    let rest = crate::constructions::delete_vertex(t, v)?;
    Ok((count_diamonds_oracle(&rest), count_3cycles_degree(&rest)))
}

/// Determinant of the Seidel matrix of a 4-tournament: 9 for a diamond,
/// 1 otherwise.
pub fn seidel_det4(t: &Tournament) -> Result<i64> {
    if t.n() != 4 {
        return Err(Error::precondition(format!(
            "seidel_det4 requires order 4, got {}",
            t.n()
        )));
    }
    let s = SeidelMatrix::of(t);
    let d = det4(&[
        [s.get(0, 0), s.get(0, 1), s.get(0, 2), s.get(0, 3)],
        [s.get(1, 0), s.get(1, 1), s.get(1, 2), s.get(1, 3)],
        [s.get(2, 0), s.get(2, 1), s.get(2, 2), s.get(2, 3)],
        [s.get(3, 0), s.get(3, 1), s.get(3, 2), s.get(3, 3)],
    ]);
    assert!(d == 1 || d == 9, "4-tournament Seidel determinant must be 1 or 9, got {d}");
    Ok(d)
}

#[inline]
fn det2(a: i64, b: i64, c: i64, d: i64) -> i64 {
    a * d - b * c
}

#[inline]
fn det3(m: &[[i64; 3]; 3]) -> i64 {
    m[0][0] * det2(m[1][1], m[1][2], m[2][1], m[2][2])
        - m[0][1] * det2(m[1][0], m[1][2], m[2][0], m[2][2])
        + m[0][2] * det2(m[1][0], m[1][1], m[2][0], m[2][1])
}

pub(crate) fn det4(m: &[[i64; 4]; 4]) -> i64 {
    let mut acc = 0i64;
    for col in 0..4 {
        let mut minor = [[0i64; 3]; 3];
        for (r, row) in m.iter().skip(1).enumerate() {
            let mut cc = 0;
            for (c, &v) in row.iter().enumerate() {
                if c != col {
                    minor[r][cc] = v;
                    cc += 1;
                }
            }
        }
        let term = m[0][col] * det3(&minor);
        if col % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Determinant of the principal 4×4 Seidel submatrix on `{a, b, c, d}`.
pub fn principal_seidel_det4(s: &SeidelMatrix, a: usize, b: usize, c: usize, d: usize) -> i64 {
    let idx = [a, b, c, d];
    let mut m = [[0i64; 4]; 4];
    for (r, &i) in idx.iter().enumerate() {
        for (cidx, &j) in idx.iter().enumerate() {
            m[r][cidx] = s.get(i, j);
        }
    }
    det4(&m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{add_dominating_vertex, delete_vertex, paley, transitive};
    use crate::tournament::arc_count;

    fn all_tournaments(n: usize) -> impl Iterator<Item = Tournament> {
        (0u64..1 << arc_count(n)).map(move |code| Tournament::from_arc_code(n, code).unwrap())
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(count_diamonds_oracle(&transitive(4).unwrap()), 0);
        // 3-cycle plus dominating vertex: the defining diamond
        let c3 = Tournament::from_bit_str(3, "101").unwrap();
        let diamond = add_dominating_vertex(&c3).unwrap();
        assert_eq!(count_diamonds_oracle(&diamond), 1);
        // Paley star on 8 vertices
        let star7 = add_dominating_vertex(&paley(7).unwrap()).unwrap();
        assert_eq!(count_diamonds_oracle(&star7), 28);
    }

    #[test]
    fn spectral_examples() {
        let c3 = Tournament::from_bit_str(3, "101").unwrap();
        let diamond = add_dominating_vertex(&c3).unwrap();
        assert_eq!(count_diamonds_spectral(&diamond), 1);
        let g = GramSquare::of(&SeidelMatrix::of(&diamond));
        assert!(g.is_scalar(-3));

        let t4 = transitive(4).unwrap();
        assert_eq!(count_diamonds_spectral(&t4), 0);
        let g = GramSquare::of(&SeidelMatrix::of(&t4));
        assert_eq!(g.sum_sq_upper(), 16);
    }

    #[test]
    fn three_cycle_counters() {
        let c3 = Tournament::from_bit_str(3, "101").unwrap();
        assert_eq!(count_3cycles_degree(&c3), 1);
        assert_eq!(count_3cycles_spectral(&c3), 1);
        for n in [3usize, 5, 9] {
            let t = transitive(n).unwrap();
            assert_eq!(count_3cycles_degree(&t), 0);
            assert_eq!(count_3cycles_spectral(&t), 0);
        }
        let p7 = paley(7).unwrap();
        assert_eq!(count_3cycles_degree(&p7), 14);
        assert_eq!(count_3cycles_spectral(&p7), 14);
        assert_eq!(count_3cycles_degree(&p7), (7u64.pow(3) - 7) / 24);
    }

    #[test]
    fn counters_agree_exhaustively_small() {
        for n in 1..=5usize {
            for t in all_tournaments(n) {
                assert_eq!(count_diamonds_oracle(&t), count_diamonds_spectral(&t));
                assert_eq!(count_3cycles_degree(&t), count_3cycles_spectral(&t));
            }
        }
    }

    #[test]
    fn regular_cycle_maximum() {
        // c₃ ≤ (n³ - n)/24 with equality iff n odd and regular
        for n in 3..=6usize {
            for t in all_tournaments(n) {
                let c3 = count_3cycles_degree(&t);
                let cap = (n as u64).pow(3) - n as u64;
                assert!(24 * c3 <= cap);
                let regular = (0..n).all(|v| t.out_degree(v) as usize == (n - 1) / 2);
                assert_eq!(24 * c3 == cap, n % 2 == 1 && regular);
            }
        }
    }

    #[test]
    fn decomposition_examples() {
        let c3 = Tournament::from_bit_str(3, "101").unwrap();
        let diamond = add_dominating_vertex(&c3).unwrap();
        assert_eq!(diamond_delta_decomposition(&diamond, 3).unwrap(), (0, 1));

        let star7 = add_dominating_vertex(&paley(7).unwrap()).unwrap();
        let (d, c) = diamond_delta_decomposition(&star7, 7).unwrap();
        assert_eq!((d, c), (14, 14));
        assert_eq!(d + c, count_diamonds_oracle(&star7));

        let t5 = transitive(5).unwrap();
        assert_eq!(diamond_delta_decomposition(&t5, 0).unwrap(), (0, 0));
        // vertex 1 of the transitive order does not dominate vertex 0
        assert!(diamond_delta_decomposition(&t5, 1).is_err());
        assert!(diamond_delta_decomposition(&t5, 9).is_err());
    }

    #[test]
    fn det4_classifies_diamonds() {
        let mut diamonds = 0;
        for t in all_tournaments(4) {
            let d = seidel_det4(&t).unwrap();
            let is_diamond = count_diamonds_oracle(&t) == 1;
            assert_eq!(d == 9, is_diamond);
            if is_diamond {
                diamonds += 1;
            }
        }
        assert_eq!(diamonds, 16);
        assert!(seidel_det4(&transitive(5).unwrap()).is_err());
    }

    #[test]
    fn deletion_is_monotone() {
        let star7 = add_dominating_vertex(&paley(7).unwrap()).unwrap();
        let d0 = count_diamonds_oracle(&star7);
        let c0 = count_3cycles_degree(&star7);
        for v in 0..star7.n() {
            let rest = delete_vertex(&star7, v).unwrap();
            assert!(count_diamonds_oracle(&rest) <= d0);
            assert!(count_3cycles_degree(&rest) <= c0);
        }
    }

    #[test]
    fn small_orders_count_zero() {
        for n in 1..=3usize {
            for t in all_tournaments(n) {
                assert_eq!(count_diamonds_oracle(&t), 0);
                assert_eq!(count_diamonds_spectral(&t), 0);
            }
        }
    }
}
