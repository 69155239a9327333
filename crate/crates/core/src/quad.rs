//! Floating-point layer: Gaussian quadrature for the two-interval weight and
//! a tanh-sinh mass integrator for non-polynomial parameter regimes.
//!
//! This is the only module that leaves exact arithmetic. The conversion from
//! rationals is explicit and one-way: the Jacobi matrix is assembled from the
//! exact recurrence coefficients, then handed to a symmetric tridiagonal
//! eigensolver (implicit-shift QL with first-row accumulation, the
//! Golub-Welsch construction). Nodes are the eigenvalues; the weight at node
//! `i` is `mass` times the squared first eigenvector component.

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::family::{b_coeff, u_coeff, Params};
use crate::rational::{int, Rational};

/// Explicit one-way conversion out of the exact world.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Gaussian quadrature rule: strictly increasing nodes, positive weights.
#[derive(Clone, Debug)]
pub struct QuadRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadRule {
    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// Diagonal `b_0..b_{N-1}` and off-diagonal `sqrt(u_1)..sqrt(u_{N-1})` of the
/// symmetric Jacobi matrix. Demands `u_n > 0` (exactly, before the square
/// root), which the positivity window guarantees.
pub fn jacobi_matrix(n: usize, p: &Params) -> Result<(Vec<f64>, Vec<f64>)> {
    assert!(n >= 1, "the Jacobi matrix needs at least one row");
    let mut diag = Vec::with_capacity(n);
    for k in 0..n {
        diag.push(to_f64(&b_coeff(k, p)?));
    }
    let mut off = Vec::with_capacity(n - 1);
    for k in 1..n {
        let u = u_coeff(k, p)?;
        if u <= int(0) {
            return Err(Error::PositivityViolation { index: k });
        }
        off.push(to_f64(&u).sqrt());
    }
    Ok((diag, off))
}

/// N-point Gauss rule for the weight with total mass `mass`; exact (to
/// rounding) on polynomials of degree `2N-1`.
pub fn gauss_rule(n: usize, p: &Params, mass: f64) -> Result<QuadRule> {
    let (diag, off) = jacobi_matrix(n, p)?;
    let (nodes, first) = tridiag_eigen(diag, off)?;
    let weights = first.iter().map(|z| mass * z * z).collect();
    Ok(QuadRule { nodes, weights })
}

/// Eigenvalues of a symmetric tridiagonal matrix together with the first
/// component of each normalized eigenvector, sorted by eigenvalue.
/// Implicit-shift QL; rotations are accumulated only into the first row.
fn tridiag_eigen(mut d: Vec<f64>, mut e: Vec<f64>) -> Result<(Vec<f64>, Vec<f64>)> {
    let n = d.len();
    let mut z = vec![0.0; n];
    z[0] = 1.0;
    if n == 1 {
        return Ok((d, z));
    }
    assert_eq!(e.len(), n - 1);
    e.push(0.0);
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 60 {
                return Err(Error::EigenFailure { index: l });
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            let mut underflow = false;
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| d[a].total_cmp(&d[b]));
    Ok((
        order.iter().map(|&i| d[i]).collect(),
        order.iter().map(|&i| z[i]).collect(),
    ))
}

/// Tanh-sinh (double exponential) quadrature of `f` over `(a, b)`.
///
/// The integrand receives `(x, x - a, b - x)` with the endpoint distances
/// computed from the transform itself, so algebraic endpoint singularities
/// with exponent `> -1` are evaluated without cancellation.
pub fn tanh_sinh<F>(f: F, a: f64, b: f64, rel_tol: f64) -> Result<f64>
where
    F: Fn(f64, f64, f64) -> f64,
{
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let t_max = 6.0;
    let term = |t: f64| -> f64 {
        let w = std::f64::consts::FRAC_PI_2 * t.sinh();
        let em = (-2.0 * w.abs()).exp();
        // 1 -+ tanh(w), ordered towards the near endpoint
        let small = 2.0 * em / (1.0 + em);
        let large = 2.0 / (1.0 + em);
        let (one_minus_u, one_plus_u) = if w >= 0.0 { (small, large) } else { (large, small) };
        if one_minus_u == 0.0 || one_plus_u == 0.0 {
            return 0.0;
        }
        let x_fwd = half * one_plus_u; // x - a
        let x_bwd = half * one_minus_u; // b - x
        let x = mid + half * (one_plus_u - one_minus_u) * 0.5;
        let sech = 2.0 * (-w.abs()).exp() / (1.0 + em);
        let dxdt = half * std::f64::consts::FRAC_PI_2 * t.cosh() * sech * sech;
        let v = f(x, x_fwd, x_bwd) * dxdt;
        if v.is_finite() {
            v
        } else {
            0.0
        }
    };

    let mut h = 1.0;
    let mut sum = term(0.0);
    let mut k = 1;
    while k as f64 * h <= t_max {
        sum += term(k as f64 * h) + term(-(k as f64) * h);
        k += 1;
    }
    let mut estimate = h * sum;
    let mut achieved = f64::INFINITY;
    for _level in 1..=12 {
        h *= 0.5;
        let mut k = 1;
        while k as f64 * h <= t_max {
            sum += term(k as f64 * h) + term(-(k as f64) * h);
            k += 2; // odd multiples only; even ones were already counted
        }
        let refined = h * sum;
        achieved = (refined - estimate).abs() / refined.abs().max(f64::MIN_POSITIVE);
        estimate = refined;
        if achieved <= rel_tol {
            return Ok(estimate);
        }
    }
    Err(Error::ConvergenceFailure {
        achieved,
        target: rel_tol,
    })
}

/// Total mass `integral w(x) dx` over `[-1,-c] U [c,1]` by tanh-sinh on each
/// interval, valid for all `alpha, beta > -1`, `0 <= c < 1`. Relative
/// accuracy target `1e-10`.
pub fn numeric_mass(alpha: f64, beta: f64, c: f64) -> Result<f64> {
    if !(alpha > -1.0 && beta > -1.0 && (0.0..1.0).contains(&c)) {
        return Err(Error::DomainError(format!(
            "need alpha, beta > -1 and 0 <= c < 1, got ({alpha}, {beta}, {c})"
        )));
    }
    let ea = (alpha - 1.0) / 2.0;
    let eb = (beta - 1.0) / 2.0;
    // on (c, 1):  w = (1+x)^(ea+1) (1-x)^ea (x-c)^(eb+1) (x+c)^eb
    let right = tanh_sinh(
        |x, x_fwd, x_bwd| {
            (1.0 + x).powf(ea + 1.0) * x_bwd.powf(ea) * x_fwd.powf(eb + 1.0) * (x + c).powf(eb)
        },
        c,
        1.0,
        5e-12,
    )?;
    // on (-1, -c): w = (x+1)^(ea+1) (1-x)^ea (c-x)^(eb+1) (-c-x)^eb
    let left = tanh_sinh(
        |x, x_fwd, x_bwd| {
            x_fwd.powf(ea + 1.0) * (1.0 - x).powf(ea) * (c - x).powf(eb + 1.0) * x_bwd.powf(eb)
        },
        -1.0,
        -c,
        5e-12,
    )?;
    Ok(left + right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::exact_moment;

    fn p112() -> Params {
        Params::from_ints(1, 1, 1, 2)
    }

    #[test]
    fn jacobi_matrix_small() {
        let (d, e) = jacobi_matrix(1, &p112()).unwrap();
        assert_eq!(d, vec![0.25]);
        assert!(e.is_empty());
        let (d, e) = jacobi_matrix(2, &p112()).unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(e, vec![0.75]); // sqrt(9/16)
    }

    #[test]
    fn positivity_violation_detected() {
        // u_1 = (1+c)^2 (alpha+1)(beta+1)/(alpha+beta+2)^2 < 0 for alpha < -1
        let p = Params::new(crate::rational::rat(-3, 2), int(1), crate::rational::rat(1, 2));
        assert_eq!(
            jacobi_matrix(2, &p),
            Err(Error::PositivityViolation { index: 1 })
        );
    }

    #[test]
    fn one_point_rule_is_centroid() {
        let rule = gauss_rule(1, &p112(), 0.375).unwrap();
        assert!((rule.nodes[0] - 0.25).abs() < 1e-15);
        assert!((rule.weights[0] - 0.375).abs() < 1e-15);
    }

    #[test]
    fn four_point_rule_reproduces_moments() {
        let p = p112();
        let mass = to_f64(&exact_moment(0, &p).unwrap());
        let rule = gauss_rule(4, &p, mass).unwrap();
        for k in 0..=7 {
            let got = rule.integrate(|x| x.powi(k as i32));
            let want = to_f64(&exact_moment(k, &p).unwrap());
            assert!(
                (got - want).abs() <= 1e-12 * want.abs().max(1.0),
                "k={k}: {got} vs {want}"
            );
        }
    }

    #[test]
    fn nodes_sorted_inside_interval_weights_positive() {
        let p = Params::from_ints(3, 1, 1, 4);
        let mass = to_f64(&exact_moment(0, &p).unwrap());
        let rule = gauss_rule(12, &p, mass).unwrap();
        for win in rule.nodes.windows(2) {
            assert!(win[0] < win[1]);
        }
        assert!(rule.nodes.iter().all(|&x| x > -1.0 && x < 1.0));
        assert!(rule.weights.iter().all(|&w| w > 0.0));
    }

    #[test]
    fn consecutive_rules_interlace() {
        let p = p112();
        let r5 = gauss_rule(5, &p, 0.375).unwrap();
        let r6 = gauss_rule(6, &p, 0.375).unwrap();
        for i in 0..5 {
            assert!(r6.nodes[i] < r5.nodes[i] && r5.nodes[i] < r6.nodes[i + 1]);
        }
    }

    #[test]
    fn tanh_sinh_smooth_and_singular() {
        // integral_0^1 x dx and integral_0^1 1/sqrt(x) dx
        let smooth = tanh_sinh(|x, _, _| x, 0.0, 1.0, 1e-12).unwrap();
        assert!((smooth - 0.5).abs() < 1e-12);
        let singular = tanh_sinh(|_, xf, _| xf.powf(-0.5), 0.0, 1.0, 1e-12).unwrap();
        assert!((singular - 2.0).abs() < 1e-11);
    }

    #[test]
    fn numeric_mass_agrees_with_exact_moments() {
        let m = numeric_mass(1.0, 1.0, 0.5).unwrap();
        assert!((m - 0.375).abs() < 0.375 * 1e-10);
        let m = numeric_mass(3.0, 1.0, 0.5).unwrap();
        let want = 9.0 / 64.0;
        assert!((m - want).abs() < want * 1e-10);
    }

    #[test]
    fn numeric_mass_fractional_exponents() {
        // reference values from an independent 30-digit integrator
        let m = numeric_mass(0.5, 0.5, 0.5).unwrap();
        assert!((m - 0.733708053850165596).abs() < 1e-10);
        let m = numeric_mass(0.5, 0.5, 0.25).unwrap();
        assert!((m - 1.230465813036034928).abs() < 1e-10);
    }

    #[test]
    fn numeric_mass_rejects_bad_parameters() {
        assert!(matches!(
            numeric_mass(-1.5, 0.0, 0.5),
            Err(Error::DomainError(_))
        ));
        assert!(matches!(
            numeric_mass(1.0, 1.0, 1.0),
            Err(Error::DomainError(_))
        ));
    }
}
