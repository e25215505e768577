//! Exact characteristic polynomials of Seidel matrices and their squares,
//! matching against the named spectral forms, and the structural matrix
//! predicates (skew-conference, skew-type EW).
//!
//! Polynomials are computed by the Faddeev–LeVerrier recurrence over
//! arbitrary-precision integers; every division in the recurrence is exact
//! and asserted. Form matching is coefficient-exact, never numeric.

use crate::counting::{binomial, count_diamonds_oracle};
use crate::error::{Error, Result};
use crate::tournament::{GramSquare, SeidelMatrix, Tournament};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

// ============================================================================
// CharPoly
// ============================================================================

/// Exact monic characteristic polynomial `det(xI - M)` of an integer matrix.
///
/// `coeffs[k]` is the coefficient of `x^k`; `coeffs[n]` is 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    /// Faddeev–LeVerrier over `BigInt`: `M_k = A·M_{k-1} + c_{n-k+1}·I`,
    /// `c_{n-k} = -tr(A·M_k)/k`, with every division exact.
    pub fn of_int_matrix(n: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), n * n, "matrix shape mismatch");
        assert!(n >= 1, "empty matrix");
        let a: Vec<BigInt> = entries.iter().map(|&v| BigInt::from(v)).collect();
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::from(1);
        // M_0 = 0
        let mut m = vec![BigInt::zero(); n * n];
        for k in 1..=n {
            // M_k = A·M_{k-1} + c_{n-k+1}·I
            let mut mk = if k == 1 {
                vec![BigInt::zero(); n * n]
            } else {
                mat_mul(n, &a, &m)
            };
            let shift = coeffs[n - k + 1].clone();
            for i in 0..n {
                mk[i * n + i] += &shift;
            }
            // c_{n-k} = -tr(A·M_k)/k
            let mut tr = BigInt::zero();
            for i in 0..n {
                for j in 0..n {
                    tr += &a[i * n + j] * &mk[j * n + i];
                }
            }
            let neg = -tr;
            let q = &neg / k;
            assert!(
                (&q * k) == neg,
                "Faddeev-LeVerrier division by {k} must be exact"
            );
            coeffs[n - k] = q;
            m = mk;
        }
        Self { coeffs }
    }

    /// Characteristic polynomial of a Seidel matrix, with the structural
    /// facts for skew-symmetric `±1` matrices asserted: no odd-power terms
    /// (beyond the forced `x` factor at odd order), a simple root at 0 for
    /// odd order, and nonnegative even-part coefficients.
    pub fn of_seidel(s: &SeidelMatrix) -> Self {
        let p = Self::of_int_matrix(s.n(), s.entries());
        let n = s.n();
        for k in 0..=n {
            if (n - k) % 2 == 1 {
                assert!(
                    p.coeffs[k].is_zero(),
                    "odd-part coefficient x^{k} must vanish for a Seidel matrix"
                );
            } else {
                assert!(
                    !p.coeffs[k].is_negative(),
                    "even-part coefficient x^{k} must be nonnegative"
                );
            }
        }
        if n % 2 == 1 {
            assert!(p.coeffs[0].is_zero() && !p.coeffs[1].is_zero(),
                "odd order forces eigenvalue 0 with multiplicity exactly one");
        }
        p
    }

    /// Characteristic polynomial of `S²`.
    pub fn of_gram(g: &GramSquare) -> Self {
        Self::of_int_matrix(g.n(), g.entries())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^k` (zero above the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Ascending coefficient slice, `coeffs()[k]` multiplying `x^k`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// The coefficient of `x^{n-h}`, i.e. `(-1)^h` times the sum of all
    /// `h×h` principal minors; zero when `h` exceeds the degree.
    pub fn sigma(&self, h: usize) -> BigInt {
        let n = self.degree();
        if h > n {
            BigInt::zero()
        } else {
            self.coeffs[n - h].clone()
        }
    }

    /// Determinant of the underlying matrix: `(-1)^n · P(0)`.
    pub fn determinant(&self) -> BigInt {
        let c0 = self.coeffs[0].clone();
        if self.degree().is_multiple_of(2) {
            c0
        } else {
            -c0
        }
    }

    /// Builds a polynomial from ascending coefficients (testing and form
    /// construction).
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty());
        assert_eq!(*coeffs.last().unwrap(), BigInt::from(1), "must be monic");
        Self { coeffs }
    }

    /// Plain text like `x^6 + 15x^4 + 63x^2 + 49`.
    pub fn to_display_string(&self) -> String {
        let mut parts = Vec::new();
        for k in (0..=self.degree()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = match (k, mag == BigInt::from(1)) {
                (0, _) => mag.to_string(),
                (1, true) => "x".to_string(),
                (1, false) => format!("{mag}x"),
                (_, true) => format!("x^{k}"),
                (_, false) => format!("{mag}x^{k}"),
            };
            if parts.is_empty() {
                parts.push(if c.is_negative() { format!("-{body}") } else { body });
            } else {
                parts.push(format!("{} {body}", if c.is_negative() { "-" } else { "+" }));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" ")
        }
    }
}

impl std::fmt::Debug for CharPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CharPoly({})", self.to_display_string())
    }
}

fn mat_mul(n: usize, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = &a[i * n + k];
            if aik.is_zero() {
                continue;
            }
            for j in 0..n {
                let bkj = &b[k * n + j];
                if !bkj.is_zero() {
                    out[i * n + j] += aik * bkj;
                }
            }
        }
    }
    out
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

fn poly_pow(base: &[BigInt], exp: usize) -> Vec<BigInt> {
    let mut acc = vec![BigInt::from(1)];
    for _ in 0..exp {
        acc = poly_mul(&acc, base);
    }
    acc
}

/// `(x² + c)` as ascending coefficients.
fn quad(c: i64) -> Vec<BigInt> {
    vec![BigInt::from(c), BigInt::zero(), BigInt::from(1)]
}

// ============================================================================
// SpectralForm
// ============================================================================

/// The named exact shapes a Seidel characteristic polynomial can take.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SpectralForm {
    /// `(x² + (n-1))^{n/2}`, the square of a skew-conference matrix shape.
    SkewConferenceForm,
    /// `(x² + 8k + 1)(x² + 4k - 1)^{2k}` at order `n = 4k + 2`.
    EwForm { k: u64 },
    /// `(x² + 1)(x² + 4k + 3)^{2k}` at order `n = 4k + 2`.
    DeletedDrtForm { k: u64 },
    Other,
}

impl SpectralForm {
    /// Factored display such as `(x^2+9)(x^2+3)^2`, if the form is named.
    pub fn factored_string(&self, n: usize) -> Option<String> {
        match self {
            SpectralForm::SkewConferenceForm => {
                Some(format!("(x^2+{})^{}", n - 1, n / 2))
            }
            SpectralForm::EwForm { k } => {
                Some(format!("(x^2+{})(x^2+{})^{}", 8 * k + 1, 4 * k - 1, 2 * k))
            }
            SpectralForm::DeletedDrtForm { k } => {
                Some(format!("(x^2+1)(x^2+{})^{}", 4 * k + 3, 2 * k))
            }
            SpectralForm::Other => None,
        }
    }
}

/// The polynomial `(x² + (n-1))^{n/2}` for even `n`.
pub fn skew_conference_poly(n: usize) -> CharPoly {
    assert!(n.is_multiple_of(2) && n >= 2);
    CharPoly::from_coeffs(poly_pow(&quad(n as i64 - 1), n / 2))
}

/// The polynomial `(x² + 8k + 1)(x² + 4k - 1)^{2k}`.
pub fn ew_form_poly(k: u64) -> CharPoly {
    assert!(k >= 1);
    let p = poly_mul(
        &quad(8 * k as i64 + 1),
        &poly_pow(&quad(4 * k as i64 - 1), 2 * k as usize),
    );
    CharPoly::from_coeffs(p)
}

/// The polynomial `(x² + 1)(x² + 4k + 3)^{2k}`.
pub fn deleted_drt_form_poly(k: u64) -> CharPoly {
    assert!(k >= 1);
    let p = poly_mul(&quad(1), &poly_pow(&quad(4 * k as i64 + 3), 2 * k as usize));
    CharPoly::from_coeffs(p)
}

/// Classifies `p` against the named forms by exact coefficient identity.
pub fn match_spectral_form(p: &CharPoly) -> SpectralForm {
    let n = p.degree();
    if n >= 2 && n.is_multiple_of(2) && *p == skew_conference_poly(n) {
        return SpectralForm::SkewConferenceForm;
    }
    if n >= 6 && n % 4 == 2 {
        let k = ((n - 2) / 4) as u64;
        if *p == ew_form_poly(k) {
            return SpectralForm::EwForm { k };
        }
        if *p == deleted_drt_form_poly(k) {
            return SpectralForm::DeletedDrtForm { k };
        }
    }
    SpectralForm::Other
}

// ============================================================================
// Identity checks
// ============================================================================

/// Verdict of the 4×4 principal-minor sum identity
/// `α₄ = 8·δ_T + C(n, 4)`, with `δ_T` taken from the oracle.
#[derive(Clone, Debug)]
pub struct MinorSumCheck {
    pub pass: bool,
    pub alpha4: BigInt,
    pub expected: BigInt,
    pub delta: u64,
}

pub fn minor_sum_identity_check(t: &Tournament) -> Result<MinorSumCheck> {
    let n = t.n();
    if n < 4 {
        return Err(Error::precondition(format!(
            "minor-sum identity requires order >= 4, got {n}"
        )));
    }
    let p = CharPoly::of_seidel(&SeidelMatrix::of(t));
    let alpha4 = p.sigma(4);
    let delta = count_diamonds_oracle(t);
    let expected = BigInt::from(8 * delta + binomial(n as u64, 4));
    Ok(MinorSumCheck {
        pass: alpha4 == expected,
        alpha4,
        expected,
        delta,
    })
}

/// Verdict of the coefficient identities `β₂ = 2α₄ + α₂²` and
/// `α₂ = n(n-1)/2` linking `P_S` and `P_{S²}`.
#[derive(Clone, Debug)]
pub struct BetaAlphaCheck {
    pub pass: bool,
    pub alpha2: BigInt,
    pub alpha4: BigInt,
    pub beta2: BigInt,
}

pub fn beta_alpha_identity_check(s: &SeidelMatrix) -> BetaAlphaCheck {
    let ps = CharPoly::of_seidel(s);
    let pg = CharPoly::of_gram(&GramSquare::of(s));
    let alpha2 = ps.sigma(2);
    let alpha4 = ps.sigma(4);
    let beta2 = pg.sigma(2);
    let n = s.n() as u64;
    let pass = beta2 == 2u8 * &alpha4 + &alpha2 * &alpha2
        && alpha2 == BigInt::from(n * (n.saturating_sub(1)) / 2);
    BetaAlphaCheck {
        pass,
        alpha2,
        alpha4,
        beta2,
    }
}

// ============================================================================
// Matrix predicates
// ============================================================================

/// Whether `S·Sᵀ = (n-1)·I`, i.e. `S² = (1-n)·I`.
///
/// Such matrices exist only at orders divisible by 4 (beyond the trivial
/// orders 1 and 2); that fact is asserted when the predicate holds.
pub fn is_skew_conference(s: &SeidelMatrix) -> bool {
    let n = s.n();
    let holds = GramSquare::of(s).is_scalar(1 - n as i64);
    if holds && n > 2 {
        assert!(n.is_multiple_of(4), "skew-conference order {n} must be divisible by 4");
    }
    holds
}

/// The two index blocks discovered by the EW predicate (0-indexed).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EwPartition {
    pub parts: [Vec<usize>; 2],
}

/// Tests whether a `±1` matrix `B` is an EW matrix of skew type:
/// `B + Bᵀ = 2I` and, for some split of the indices into two halves,
/// `BBᵀ = BᵀB = diag(M, M)` with `M = (n-2)I + 2J`.
///
/// Returns the discovered split on success. Odd orders are rejected;
/// even orders with `n ≡ 0 (mod 4)` cannot carry the block shape and
/// return `None`.
pub fn is_skew_ew(n: usize, b: &[i64]) -> Result<Option<EwPartition>> {
    if n == 0 || b.len() != n * n {
        return Err(Error::precondition("EW check requires a nonempty square matrix"));
    }
    if n % 2 == 1 {
        return Err(Error::precondition(format!(
            "EW check requires even order, got {n}"
        )));
    }
    if b.iter().any(|&v| v != 1 && v != -1) {
        return Err(Error::precondition("EW check requires a ±1 matrix"));
    }
    if n % 4 != 2 {
        return Ok(None);
    }
    // skew type: B + Bᵀ = 2I
    for i in 0..n {
        for j in 0..n {
            let want = if i == j { 2 } else { 0 };
            if b[i * n + j] + b[j * n + i] != want {
                return Ok(None);
            }
        }
    }
    let g = square_product(n, b, false); // B·Bᵀ
    let h = square_product(n, b, true); // Bᵀ·B
    // group indices by "off-diagonal entry of B·Bᵀ equals 2"
    let mut first = vec![0usize];
    let mut second = Vec::new();
    for (j, &gj) in g.iter().enumerate().take(n).skip(1) {
        match gj {
            2 => first.push(j),
            0 => second.push(j),
            _ => return Ok(None),
        }
    }
    if first.len() != n / 2 || second.len() != n / 2 {
        return Ok(None);
    }
    let part_of = |v: usize| -> usize { usize::from(!first.contains(&v)) };
    for i in 0..n {
        for j in 0..n {
            let want = if i == j {
                n as i64
            } else if part_of(i) == part_of(j) {
                2
            } else {
                0
            };
            if g[i * n + j] != want || h[i * n + j] != want {
                return Ok(None);
            }
        }
    }
    Ok(Some(EwPartition {
        parts: [first, second],
    }))
}

/// EW test applied to `S + I` of a tournament's Seidel matrix.
pub fn is_skew_ew_seidel(s: &SeidelMatrix) -> Result<Option<EwPartition>> {
    is_skew_ew(s.n(), &s.plus_identity())
}

fn square_product(n: usize, b: &[i64], transpose_first: bool) -> Vec<i64> {
    let mut out = vec![0i64; n * n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = 0;
            for k in 0..n {
                acc += if transpose_first {
                    b[k * n + i] * b[k * n + j]
                } else {
                    b[i * n + k] * b[j * n + k]
                };
            }
            out[i * n + j] = acc;
        }
    }
    out
}
