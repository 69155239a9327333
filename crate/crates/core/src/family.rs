//! The big -1 Jacobi family: eigenvalue operator, spectrum, canonical basis,
//! monic polynomials from the three-term recurrence, and the two-interval
//! weight with exact moments.
//!
//! The family `P_n^{(alpha,beta)}(x;c)` consists of the polynomial
//! eigenfunctions of
//!
//! ```text
//! L = g0(x) (R - I) + g1(x) D R,
//! g0 = ((alpha+beta+1) x^2 + (c alpha - beta) x + c) / x^2,
//! g1 = 2 (x-1)(x+c) / x,
//! ```
//!
//! with eigenvalues `lambda_n = 2n` (n even), `-2(alpha+beta+n+1)` (n odd).
//! For `alpha, beta > -1` and `0 <= c < 1` they are orthogonal on
//! `[-1,-c] U [c,1]` with weight `sign(x) (x+1)(x-c) (1-x^2)^((alpha-1)/2)
//! (x^2-c^2)^((beta-1)/2)`. When both exponents are nonnegative integers the
//! weight is a signed polynomial and every moment is an exact rational.

use std::sync::Mutex;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::dunkl::DunklOperator;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::poly::Poly;
use crate::rational::{int, rat, Rational};

/// The parameter triple. Symbolic identity paths accept any rationals that
/// keep the recurrence denominators nonzero; orthogonality and quadrature
/// need `alpha > -1`, `beta > -1`, `0 <= c < 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    pub alpha: Rational,
    pub beta: Rational,
    pub c: Rational,
}

impl Params {
    pub fn new(alpha: Rational, beta: Rational, c: Rational) -> Self {
        Self { alpha, beta, c }
    }

    /// Integer-valued convenience constructor.
    pub fn from_ints(alpha: i64, beta: i64, c_num: i64, c_den: i64) -> Self {
        Self::new(int(alpha), int(beta), rat(c_num, c_den))
    }

    /// Same `beta`, `c`; `alpha` shifted by `delta` (the ladder direction).
    pub fn shifted_alpha(&self, delta: i64) -> Self {
        Self::new(&self.alpha + int(delta), self.beta.clone(), self.c.clone())
    }

    pub fn sum_ab(&self) -> Rational {
        &self.alpha + &self.beta
    }

    /// Positivity window of the orthogonality measure.
    pub fn in_positivity_window(&self) -> bool {
        self.alpha > int(-1) && self.beta > int(-1) && self.c >= int(0) && self.c < int(1)
    }

    /// Check that no recurrence denominator `alpha+beta+2k` (`k <= nmax+1`)
    /// vanishes, so `P_0..P_nmax` are all defined.
    pub fn validate_up_to(&self, nmax: usize) -> Result<()> {
        let ab = self.sum_ab();
        for k in 0..=nmax as i64 + 1 {
            if (&ab + int(2 * k)).is_zero() {
                return Err(Error::DegenerateParams(format!(
                    "alpha+beta+2n vanishes at n={k}"
                )));
            }
        }
        Ok(())
    }
}

/// `g0(x) = (alpha+beta+1) + (c alpha - beta)/x + c/x^2`.
pub fn g0(p: &Params) -> LaurentPoly {
    LaurentPoly::from_terms([
        (0, &p.sum_ab() + int(1)),
        (-1, &(&p.c * &p.alpha) - &p.beta),
        (-2, p.c.clone()),
    ])
}

/// `g1(x) = 2(x-1)(x+c)/x = 2x + 2(c-1) - 2c/x`.
pub fn g1(p: &Params) -> LaurentPoly {
    LaurentPoly::from_terms([
        (1, int(2)),
        (0, (&p.c - int(1)) * int(2)),
        (-1, &p.c * int(-2)),
    ])
}

/// The eigenvalue operator `L = g0 (R - I) + g1 D R`.
pub fn build_l(p: &Params) -> DunklOperator {
    let g0 = g0(p);
    DunklOperator::from_terms([
        (0, true, g0.clone()),
        (0, false, -&g0),
        (1, true, g1(p)),
    ])
}

/// `lambda_n`: `2n` for even `n`, `-2(alpha+beta+n+1)` for odd `n`.
pub fn lambda_n(n: usize, p: &Params) -> Rational {
    if n % 2 == 0 {
        int(2 * n as i64)
    } else {
        (&p.sum_ab() + int(n as i64 + 1)) * int(-2)
    }
}

/// `mu_n = (lambda_n + alpha + beta + 1)/2 = (-1)^n (n + (alpha+beta+1)/2)`.
pub fn mu_n(n: usize, p: &Params) -> Rational {
    (lambda_n(n, p) + p.sum_ab() + int(1)) / int(2)
}

/// Canonical basis: `(x^2-c^2)^(n/2)` for even `n`,
/// `(x+c)(x^2-c^2)^((n-1)/2)` for odd `n`. Monic of degree `n`.
pub fn phi_basis(n: usize, c: &Rational) -> Poly {
    let core = Poly::from_coeffs(vec![-(c * c), Rational::zero(), int(1)]);
    if n % 2 == 0 {
        core.pow(n / 2)
    } else {
        let lin = Poly::from_coeffs(vec![c.clone(), int(1)]);
        &lin * &core.pow((n - 1) / 2)
    }
}

/// Subdiagonal entry of `L` in the canonical basis: `2(c-1)n` for even `n`,
/// `2(c+1)(beta+n)` for odd `n`.
pub fn eta_n(n: usize, p: &Params) -> Rational {
    if n % 2 == 0 {
        (&p.c - int(1)) * int(2 * n as i64)
    } else {
        (&p.c + int(1)) * (&p.beta + int(n as i64)) * int(2)
    }
}

fn nonzero_denom(d: &Rational, n: usize) -> Result<()> {
    if d.is_zero() {
        Err(Error::DegenerateParams(format!(
            "alpha+beta+2n vanishes near n={n}"
        )))
    } else {
        Ok(())
    }
}

/// Recurrence coefficient `u_n`, `n >= 1`:
/// `(1-c)^2 n (alpha+beta+n) / (alpha+beta+2n)^2` for even `n`,
/// `(1+c)^2 (alpha+n)(beta+n) / (alpha+beta+2n)^2` for odd `n`.
pub fn u_coeff(n: usize, p: &Params) -> Result<Rational> {
    assert!(n >= 1, "u_n is defined for n >= 1");
    let nn = int(n as i64);
    let denom = &p.sum_ab() + int(2 * n as i64);
    nonzero_denom(&denom, n)?;
    let denom2 = &denom * &denom;
    let num = if n % 2 == 0 {
        let s = int(1) - &p.c;
        &s * &s * &nn * (&p.sum_ab() + &nn)
    } else {
        let s = int(1) + &p.c;
        &s * &s * (&p.alpha + &nn) * (&p.beta + &nn)
    };
    Ok(num / denom2)
}

/// Recurrence coefficient `b_n`, parity-split closed form.
pub fn b_coeff(n: usize, p: &Params) -> Result<Rational> {
    let nn = int(n as i64);
    let d0 = &p.sum_ab() + int(2 * n as i64);
    let d1 = &p.sum_ab() + int(2 * n as i64 + 2);
    nonzero_denom(&d0, n)?;
    nonzero_denom(&d1, n + 1)?;
    Ok(if n % 2 == 0 {
        -&p.c + (&p.c - int(1)) * &nn / &d0 + (int(1) + &p.c) * (&p.beta + &nn + int(1)) / &d1
    } else {
        p.c.clone() + (int(1) - &p.c) * (&nn + int(1)) / &d1 - (&p.c + int(1)) * (&p.beta + &nn) / &d0
    })
}

/// Lazily extended monic sequence `P_0, P_1, ...` from the three-term
/// recurrence `P_{n+1} = (x - b_n) P_n - u_n P_{n-1}`.
///
/// Extension is serialized behind a mutex, so concurrent readers always see a
/// consistent prefix.
pub struct MonicPolySeq {
    params: Params,
    cache: Mutex<Vec<Poly>>,
}

impl MonicPolySeq {
    pub fn new(params: Params) -> Self {
        Self {
            params,
            cache: Mutex::new(vec![Poly::one()]),
        }
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    /// Monic `P_n`; extends the cached prefix as needed.
    pub fn poly(&self, n: usize) -> Result<Poly> {
        let mut cache = self.cache.lock().unwrap();
        while cache.len() <= n {
            let k = cache.len() - 1;
            let b = b_coeff(k, &self.params)?;
            let shifted = Poly::from_coeffs(vec![-b, int(1)]);
            let mut next = &shifted * &cache[k];
            if k >= 1 {
                let u = u_coeff(k, &self.params)?;
                next = &next - &cache[k - 1].scale(&u);
            }
            cache.push(next);
        }
        Ok(cache[n].clone())
    }

    /// Norm `h_n = u_1 ... u_n h_0` with `h_0 = m_0`; exact in the polynomial
    /// regime. The recursion is standard three-term theory (the closed form is
    /// not in the source material), cross-checked against direct moment sums
    /// in the tests.
    pub fn norm(&self, n: usize) -> Result<Rational> {
        let mut h = exact_moment(0, &self.params)?;
        for k in 1..=n {
            h *= u_coeff(k, &self.params)?;
        }
        Ok(h)
    }
}

/// `(alpha-1)/2` and `(beta-1)/2` as nonnegative integers, or an error.
fn polynomial_regime_exponents(p: &Params) -> Result<(usize, usize)> {
    let half = |v: &Rational, name: &str| -> Result<usize> {
        let e = (v - int(1)) / int(2);
        if !e.is_integer() || e.is_negative() {
            return Err(Error::NotPolynomialRegime(format!(
                "({name}-1)/2 = {e} is not a nonnegative integer"
            )));
        }
        Ok(e.to_integer().to_usize().expect("small exponent"))
    };
    Ok((half(&p.alpha, "alpha")?, half(&p.beta, "beta")?))
}

/// The polynomial factor `W(x) = (x+1)(x-c)(1-x^2)^((alpha-1)/2)
/// (x^2-c^2)^((beta-1)/2)` of the weight `w = sign(x) W(x)`. Requires odd
/// positive integer `alpha`, `beta`.
pub fn weight_poly_part(p: &Params) -> Result<Poly> {
    let (ea, eb) = polynomial_regime_exponents(p)?;
    let lin = Poly::from_coeffs(vec![int(1), int(1)]); // x + 1
    let lin2 = Poly::from_coeffs(vec![-&p.c, int(1)]); // x - c
    let quad = Poly::from_coeffs(vec![int(1), int(0), int(-1)]); // 1 - x^2
    let quad2 = Poly::from_coeffs(vec![-(&p.c * &p.c), int(0), int(1)]); // x^2 - c^2
    Ok(&(&(&lin * &lin2) * &quad.pow(ea)) * &quad2.pow(eb))
}

fn check_c_range(p: &Params) -> Result<()> {
    if p.c < int(0) || p.c >= int(1) {
        return Err(Error::DomainError(format!(
            "c = {} outside [0, 1)",
            p.c
        )));
    }
    Ok(())
}

/// Exact moment `m_k = integral x^k w(x) dx` over `[-1,-c] U [c,1]`; the
/// `sign(x)` factor flips the left interval:
/// `m_k = integral_c^1 x^k W - integral_{-1}^{-c} x^k W`.
pub fn exact_moment(k: usize, p: &Params) -> Result<Rational> {
    check_c_range(p)?;
    let w = weight_poly_part(p)?;
    let xk = &Poly::monomial(k, int(1)) * &w;
    let right = xk.definite_integral(&p.c, &int(1));
    let left = xk.definite_integral(&int(-1), &(-&p.c));
    Ok(right - left)
}

/// `integral f g w` as a finite sum of coefficients times exact moments.
pub fn inner_product(f: &Poly, g: &Poly, p: &Params) -> Result<Rational> {
    let prod = f * g;
    let mut acc = Rational::zero();
    for (k, coeff) in prod.coeffs().iter().enumerate() {
        if !coeff.is_zero() {
            acc += coeff * exact_moment(k, p)?;
        }
    }
    Ok(acc)
}

/// Floating-point weight evaluation on the open support
/// `(-1,-c) U (c,1)`; strictly positive there.
pub fn weight_eval(x: f64, alpha: f64, beta: f64, c: f64) -> Result<f64> {
    let inside = (x > c && x < 1.0) || (x > -1.0 && x < -c);
    if !inside {
        return Err(Error::DomainError(format!(
            "x = {x} not in (-1,-{c}) U ({c},1)"
        )));
    }
    let sign = if x > 0.0 { 1.0 } else { -1.0 };
    Ok(sign
        * (x + 1.0)
        * (x - c)
        * (1.0 - x * x).powf((alpha - 1.0) / 2.0)
        * (x * x - c * c).powf((beta - 1.0) / 2.0))
}
