//! Parameter-shifting ladder operators and Christoffel transforms.
//!
//! The lowering operator
//!
//! ```text
//! Dlow = A(x)(I - R) + B(x) D + C(x) D R,
//! A = c^2/x^3 - c(c-1)/(2x^2) + beta(c+1)/(2x),
//! B = (x^2 - c^2)/x^2,   C = c(x+c)(1-x)/x^2,
//! ```
//!
//! sends `P_n^{(alpha,beta)}` to `nu_n P_{n-1}^{(alpha+2,beta)}` (the Hahn
//! property) and reduces to the ordinary Dunkl operator
//! `D + (beta/2x)(I - R)` at `c = 0`. The raising operator
//! `Rup = S1 I + S2 R + T1 D + T2 D R` shifts `alpha -> alpha - 2` and raises
//! the degree. Both satisfy exact intertwining relations with the eigenvalue
//! operator, and the lowering action coincides with two successive
//! Christoffel transforms at the nodes `1` and `-1`.

use num_traits::Zero;

use crate::dunkl::DunklOperator;
use crate::error::{Error, Result};
use crate::family::{build_l, MonicPolySeq, Params};
use crate::jordan::{check_op_action, ActionCheck, StructureConstant, StructureKind};
use crate::laurent::LaurentPoly;
use crate::poly::Poly;
use crate::rational::{int, rat, Rational};

/// Result of one ladder check on `P_n`: the parameter shift on `alpha`, the
/// predicted proportionality constant, and whether the exact application
/// reproduced `constant * P_target` coefficientwise.
#[derive(Clone, Debug)]
pub struct LadderReport {
    pub n: usize,
    /// `+2` for lowering, `-2` for raising.
    pub shift: i64,
    pub predicted_constant: Rational,
    pub exact_match: bool,
}

/// The lowering (generalized Dunkl) operator.
pub fn build_lowering(p: &Params) -> DunklOperator {
    let half = rat(1, 2);
    let a = LaurentPoly::from_terms([
        (-3, &p.c * &p.c),
        (-2, -(&p.c * (&p.c - int(1)) * &half)),
        (-1, &p.beta * (&p.c + int(1)) * &half),
    ]);
    let b = LaurentPoly::from_terms([(0, int(1)), (-2, -(&p.c * &p.c))]);
    // c(x+c)(1-x)/x^2 = -c + c(1-c)/x + c^2/x^2
    let c = LaurentPoly::from_terms([
        (0, -&p.c),
        (-1, &p.c * (int(1) - &p.c)),
        (-2, &p.c * &p.c),
    ]);
    DunklOperator::from_terms([
        (0, false, a.clone()),
        (0, true, -&a),
        (1, false, b),
        (1, true, c),
    ])
}

/// `nu_n`: `(1-c)n` for even `n`, `(c+1)(beta+n)` for odd `n`.
pub fn nu_n(n: usize, p: &Params) -> Rational {
    if n % 2 == 0 {
        (int(1) - &p.c) * int(n as i64)
    } else {
        (&p.c + int(1)) * (&p.beta + int(n as i64))
    }
}

/// `kappa_n`: `2(c-1)(alpha+beta+n)` for even `n`, `-2(c+1)(alpha+n)` for odd.
pub fn kappa_n(n: usize, p: &Params) -> Rational {
    if n % 2 == 0 {
        (&p.c - int(1)) * (&p.sum_ab() + int(n as i64)) * int(2)
    } else {
        (&p.c + int(1)) * (&p.alpha + int(n as i64)) * int(-2)
    }
}

/// Residual of the lowering intertwining relation
/// `L^{(alpha+2)} Dlow + Dlow L^{(alpha)} + 2(alpha+beta+2) Dlow`;
/// zero for every parameter choice.
pub fn lowering_intertwiner_residual(p: &Params) -> DunklOperator {
    let low = build_lowering(p);
    let l = build_l(p);
    let l_up = build_l(&p.shifted_alpha(2));
    let scale = (&p.sum_ab() + int(2)) * int(2);
    &(&l_up.compose(&low) + &low.compose(&l)) + &low.scale(&scale)
}

/// Residual of the raising intertwining relation
/// `L^{(alpha-2)} Rup + Rup L^{(alpha)} + 2(alpha+beta) Rup`.
pub fn raising_intertwiner_residual(p: &Params) -> DunklOperator {
    let up = build_raising(p);
    let l = build_l(p);
    let l_dn = build_l(&p.shifted_alpha(-2));
    let scale = &p.sum_ab() * int(2);
    &(&l_dn.compose(&up) + &up.compose(&l)) + &up.scale(&scale)
}

/// Hahn property: `Dlow P_n^{(alpha,beta)} = nu_n P_{n-1}^{(alpha+2,beta)}`,
/// verified by exact application against the shifted-parameter family.
pub fn hahn_check(n: usize, p: &Params) -> Result<LadderReport> {
    let seq = MonicPolySeq::new(p.clone());
    let target = MonicPolySeq::new(p.shifted_alpha(2));
    hahn_check_with(&build_lowering(p), &seq, &target, n)
}

/// `hahn_check` against caller-held sequences, for loops over `n`.
/// `target` must be the `alpha+2` family of `seq`.
pub fn hahn_check_with(
    low: &DunklOperator,
    seq: &MonicPolySeq,
    target: &MonicPolySeq,
    n: usize,
) -> Result<LadderReport> {
    assert!(n >= 1, "the Hahn check lowers degree, take n >= 1");
    let expected = StructureConstant {
        n,
        kind: StructureKind::Nu,
        value: nu_n(n, seq.params()),
        target_degree: n as i64 - 1,
    };
    let check = check_op_action(low, seq, target, expected)?;
    Ok(ladder_report(n, 2, check))
}

/// Raising action: `Rup P_n^{(alpha,beta)} = kappa_n P_{n+1}^{(alpha-2,beta)}`.
/// Errors with `DegenerateParams` when the target family hits a vanishing
/// recurrence denominator.
pub fn raising_check(n: usize, p: &Params) -> Result<LadderReport> {
    let seq = MonicPolySeq::new(p.clone());
    let target = MonicPolySeq::new(p.shifted_alpha(-2));
    raising_check_with(&build_raising(p), &seq, &target, n)
}

/// `raising_check` against caller-held sequences, for loops over `n`.
/// `target` must be the `alpha-2` family of `seq`.
pub fn raising_check_with(
    up: &DunklOperator,
    seq: &MonicPolySeq,
    target: &MonicPolySeq,
    n: usize,
) -> Result<LadderReport> {
    let expected = StructureConstant {
        n,
        kind: StructureKind::Kappa,
        value: kappa_n(n, seq.params()),
        target_degree: n as i64 + 1,
    };
    let check = check_op_action(up, seq, target, expected)?;
    Ok(ladder_report(n, -2, check))
}

fn ladder_report(n: usize, shift: i64, check: ActionCheck) -> LadderReport {
    LadderReport {
        n,
        shift,
        predicted_constant: check.expected.value.clone(),
        exact_match: check.exact(),
    }
}

/// The raising operator; the four Laurent coefficients are fixed rational
/// functions of `(alpha, beta, c)` with poles up to `x^{-3}`.
pub fn build_raising(p: &Params) -> DunklOperator {
    let (al, be, c) = (&p.alpha, &p.beta, &p.c);
    let c2 = c * c;
    let s1 = LaurentPoly::from_terms([
        (1, be * c - be - al * int(2)),
        (0, -((c + int(2)) * (c - int(1)))),
        (-1, be - &c2 * int(2) + &c2 * al * int(2) - be * c),
        (-2, -(c * (c - int(1)))),
        (-3, &c2 * int(2)),
    ]);
    let s2 = LaurentPoly::from_terms([
        (1, be * c - be + c * al * int(2)),
        (0, (c - int(1)) * (c * al * int(2) - c - be * int(2))),
        (-1, -be - &c2 * al * int(2) + be * c + &c2 * int(2)),
        (-2, c * (c - int(1))),
        (-3, &c2 * int(-2)),
    ]);
    // T1 = 2(x^2-1)(c^2-x^2)/x^2, T2 = 2c(1+x)(x-1)^2(x+c)/x^2
    let x2m1 = LaurentPoly::from_terms([(2, int(1)), (0, int(-1))]);
    let c2mx2 = LaurentPoly::from_terms([(0, c2.clone()), (2, int(-1))]);
    let t1 = (&x2m1 * &c2mx2).shift(-2).scale(&int(2));
    let one_plus_x = LaurentPoly::from_terms([(0, int(1)), (1, int(1))]);
    let xm1sq = LaurentPoly::from_terms([(2, int(1)), (1, int(-2)), (0, int(1))]);
    let x_plus_c = LaurentPoly::from_terms([(1, int(1)), (0, c.clone())]);
    let t2 = (&(&one_plus_x * &xm1sq) * &x_plus_c)
        .shift(-2)
        .scale(&(c * int(2)));
    DunklOperator::from_terms([(0, false, s1), (0, true, s2), (1, false, t1), (1, true, t2)])
}

/// The ordinary Dunkl operator `D + (beta/2x)(I - R)`: the `c = 0` form of
/// the lowering operator.
pub fn little_dunkl(beta: &Rational) -> DunklOperator {
    let coeff = LaurentPoly::monomial(-1, beta / int(2));
    DunklOperator::from_terms([
        (1, false, LaurentPoly::one()),
        (0, false, coeff.clone()),
        (0, true, -&coeff),
    ])
}

/// The `c = 0` form of the raising operator:
/// `2(1-x^2) D - beta (x-1)^2/x R + (2 + beta/x - (beta+2 alpha) x) I`.
///
/// (The derivative term carries no reflection: that is what the general
/// operator specializes to, and the reflected variant fails to raise the
/// little -1 family.)
pub fn little_raising(alpha: &Rational, beta: &Rational) -> DunklOperator {
    let t = LaurentPoly::from_terms([(0, int(2)), (2, int(-2))]);
    let s2 = LaurentPoly::from_terms([(1, -beta), (0, beta * int(2)), (-1, -beta)]);
    let s1 = LaurentPoly::from_terms([
        (0, int(2)),
        (-1, beta.clone()),
        (1, -(beta + alpha * int(2))),
    ]);
    DunklOperator::from_terms([(1, false, t), (0, true, s2), (0, false, s1)])
}

/// Christoffel transform at node `a` of a monic sequence:
/// `Q_n = (P_{n+1} - (P_{n+1}(a)/P_n(a)) P_n) / (x - a)`.
///
/// Consumes `polys[0..=N]`, returns the transformed monic `Q_0..Q_{N-1}`.
/// The division is exact whenever `P_n(a) != 0`; a nonzero remainder would
/// be an internal inconsistency and is reported as `NonzeroRemainder`.
pub fn christoffel(polys: &[Poly], a: &Rational) -> Result<Vec<Poly>> {
    let divisor = Poly::from_coeffs(vec![-a, int(1)]);
    let mut out = Vec::new();
    for n in 0..polys.len().saturating_sub(1) {
        let pa = polys[n].eval(a);
        if pa.is_zero() {
            return Err(Error::ZeroAtNode { degree: n });
        }
        let ratio = polys[n + 1].eval(a) / pa;
        let num = &polys[n + 1] - &polys[n].scale(&ratio);
        let (q, r) = num.divmod(&divisor);
        if !r.is_zero() {
            return Err(Error::NonzeroRemainder);
        }
        out.push(q);
    }
    Ok(out)
}
