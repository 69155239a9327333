//! Normal-form algebra of differential-difference operators.
//!
//! An operator is a finite sum `sum a_{d,e}(x) * D^d * R^e` with Laurent
//! polynomial coefficients, derivative order `d >= 0` and reflection power
//! `e in {0,1}`. Composition is applied right-to-left: `R` acts first, then
//! `D^d`, then multiplication by the coefficient. The normal form (coefficient
//! left, derivatives middle, reflection right) is unique, so operator equality
//! on the whole space of Laurent polynomials is structural equality of the
//! term table.
//!
//! Rewrite rules used to renormalize products:
//!
//! ```text
//! R * f(x)   = f(-x) * R
//! R * D      = -D * R
//! D^d * f(x) = sum_k C(d,k) f^(k)(x) * D^(d-k)
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::poly::Poly;
use crate::rational::{parse_rational, Rational};

/// Key of one normal-form term: (derivative order, reflection present).
pub type TermKey = (usize, bool);

#[derive(Clone, PartialEq, Eq, Default)]
pub struct DunklOperator {
    terms: BTreeMap<TermKey, LaurentPoly>,
}

impl DunklOperator {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self::from_term(0, false, LaurentPoly::one())
    }

    /// The reflection `R f(x) = f(-x)`.
    pub fn reflection() -> Self {
        Self::from_term(0, true, LaurentPoly::one())
    }

    pub fn derivative() -> Self {
        Self::from_term(1, false, LaurentPoly::one())
    }

    /// Multiplication by a fixed Laurent polynomial.
    pub fn multiplication(f: LaurentPoly) -> Self {
        Self::from_term(0, false, f)
    }

    pub fn from_term(order: usize, reflected: bool, coeff: LaurentPoly) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((order, reflected), coeff);
        }
        Self { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, bool, LaurentPoly)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (d, e, f) in iter {
            out.add_term((d, e), f);
        }
        out
    }

    fn add_term(&mut self, key: TermKey, coeff: LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.remove(&key) {
            Some(old) => {
                let sum = &old + &coeff;
                if !sum.is_zero() {
                    self.terms.insert(key, sum);
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TermKey, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, order: usize, reflected: bool) -> LaurentPoly {
        self.terms
            .get(&(order, reflected))
            .cloned()
            .unwrap_or_else(LaurentPoly::zero)
    }

    pub fn max_order(&self) -> usize {
        self.terms.keys().map(|&(d, _)| d).max().unwrap_or(0)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let mut out = Self::zero();
        for (&key, f) in &self.terms {
            out.add_term(key, f.scale(s));
        }
        out
    }

    /// `self + t * I`.
    pub fn shift(&self, t: &Rational) -> Self {
        self + &Self::multiplication(LaurentPoly::constant(t.clone()))
    }

    /// Exact action on a Laurent polynomial:
    /// `sum a_{d,e}(x) * (d/dx)^d [ f((-1)^e x) ]`.
    pub fn apply(&self, f: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(d, e), a) in &self.terms {
            let mut g = if e { f.reflect() } else { f.clone() };
            for _ in 0..d {
                g = g.derivative();
            }
            out = &out + &(a * &g);
        }
        out
    }

    /// Apply and demand a polynomial result.
    pub fn apply_poly(&self, f: &Poly) -> Result<Poly> {
        Poly::from_laurent(&self.apply(&f.to_laurent()))
    }

    /// Normal form of `self . other` (self acts second).
    pub fn compose(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(d1, e1), f) in &self.terms {
            for (&(d2, e2), g) in &other.terms {
                // push R^e1 through g, then through D^d2
                let g1 = if e1 { g.reflect() } else { g.clone() };
                let negate = e1 && d2 % 2 == 1;
                // Leibniz: D^d1 * g1 = sum_k C(d1,k) g1^(k) D^(d1-k)
                let mut gk = g1;
                for k in 0..=d1 {
                    let mut coeff = f * &gk;
                    coeff = coeff.scale(&Rational::from_integer(binomial(d1, k)));
                    if negate {
                        coeff = -&coeff;
                    }
                    out.add_term((d1 - k + d2, e1 ^ e2), coeff);
                    gk = gk.derivative();
                }
            }
        }
        out
    }

    /// `{self, other} = self.other + other.self`.
    pub fn anticommutator(&self, other: &Self) -> Self {
        &self.compose(other) + &other.compose(self)
    }

    /// `[self, other] = self.other - other.self`.
    pub fn commutator(&self, other: &Self) -> Self {
        &self.compose(other) - &other.compose(self)
    }

    /// JSON object keyed `"d,e"`, each value an exponent -> `"p/q"` map.
    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        for (&(d, e), f) in &self.terms {
            let mut inner = Map::new();
            for (&exp, c) in f.iter() {
                inner.insert(exp.to_string(), Value::String(c.to_string()));
            }
            obj.insert(format!("{},{}", d, u8::from(e)), Value::Object(inner));
        }
        Value::Object(obj)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse("operator JSON must be an object".into()))?;
        let mut out = Self::zero();
        for (key, inner) in obj {
            let (d, e) = key
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("bad operator term key {key:?}")))?;
            let d: usize = d
                .parse()
                .map_err(|_| Error::Parse(format!("bad derivative order in {key:?}")))?;
            let e = match e {
                "0" => false,
                "1" => true,
                _ => return Err(Error::Parse(format!("bad reflection power in {key:?}"))),
            };
            let inner = inner
                .as_object()
                .ok_or_else(|| Error::Parse(format!("term {key:?} must map exponents to p/q")))?;
            let mut coeff = LaurentPoly::zero();
            for (exp, c) in inner {
                let exp: i64 = exp
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent {exp:?}")))?;
                let c = c
                    .as_str()
                    .ok_or_else(|| Error::Parse(format!("coefficient at x^{exp} not a string")))?;
                coeff = &coeff + &LaurentPoly::monomial(exp, parse_rational(c)?);
            }
            out.add_term((d, e), coeff);
        }
        Ok(out)
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

impl Add for &DunklOperator {
    type Output = DunklOperator;
    fn add(self, rhs: &DunklOperator) -> DunklOperator {
        let mut out = self.clone();
        for (&key, f) in &rhs.terms {
            out.add_term(key, f.clone());
        }
        out
    }
}

impl Sub for &DunklOperator {
    type Output = DunklOperator;
    fn sub(self, rhs: &DunklOperator) -> DunklOperator {
        let mut out = self.clone();
        for (&key, f) in &rhs.terms {
            out.add_term(key, -f);
        }
        out
    }
}

impl Neg for &DunklOperator {
    type Output = DunklOperator;
    fn neg(self) -> DunklOperator {
        DunklOperator {
            terms: self.terms.iter().map(|(&k, f)| (k, -f)).collect(),
        }
    }
}

impl fmt::Display for DunklOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(d, e), a) in &self.terms {
            if first {
                first = false;
            } else {
                write!(f, "  +  ")?;
            }
            write!(f, "({a})")?;
            match d {
                0 => {}
                1 => write!(f, "*D")?,
                _ => write!(f, "*D^{d}")?,
            }
            if e {
                write!(f, "*R")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for DunklOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn x_plus(c: Rational) -> LaurentPoly {
        LaurentPoly::from_terms([(1, int(1)), (0, c)])
    }

    #[test]
    fn reflection_acts_and_squares_to_identity() {
        let r = DunklOperator::reflection();
        assert_eq!(r.apply(&x_plus(rat(1, 2))), x_plus(rat(1, 2)).reflect());
        assert_eq!(r.compose(&r), DunklOperator::identity());
    }

    #[test]
    fn derivative_after_reflection() {
        // (D*R) x^2: reflect x^2 (even, unchanged), then differentiate -> 2x.
        let dr = DunklOperator::from_term(1, true, LaurentPoly::one());
        assert_eq!(dr.apply(&LaurentPoly::x_pow(2)), LaurentPoly::monomial(1, int(2)));
        // and on an odd power the reflection shows: (D*R) x^3 = -3x^2
        assert_eq!(dr.apply(&LaurentPoly::x_pow(3)), LaurentPoly::monomial(2, int(-3)));
    }

    #[test]
    fn compose_leibniz() {
        // D . (x*I) = I + x*D
        let d = DunklOperator::derivative();
        let mx = DunklOperator::multiplication(LaurentPoly::x());
        let got = d.compose(&mx);
        let want = &DunklOperator::identity()
            + &DunklOperator::from_term(1, false, LaurentPoly::x());
        assert_eq!(got, want);
    }

    #[test]
    fn compose_parity_rule() {
        // R . (x*I) = -x*R
        let r = DunklOperator::reflection();
        let mx = DunklOperator::multiplication(LaurentPoly::x());
        let want = DunklOperator::from_term(0, true, LaurentPoly::monomial(1, int(-1)));
        assert_eq!(r.compose(&mx), want);
        // R . D = -D . R
        let d = DunklOperator::derivative();
        let want = DunklOperator::from_term(1, true, LaurentPoly::constant(int(-1)));
        assert_eq!(r.compose(&d), want);
    }

    #[test]
    fn anticommutator_basics() {
        let b = DunklOperator::from_terms([
            (0, true, LaurentPoly::x_pow(-1)),
            (1, false, x_plus(int(3))),
        ]);
        assert_eq!(
            DunklOperator::identity().anticommutator(&b),
            b.scale(&int(2))
        );
        // {R, D} = 0
        let r = DunklOperator::reflection();
        let d = DunklOperator::derivative();
        assert!(r.anticommutator(&d).is_zero());
    }

    #[test]
    fn op_equality_is_normal_form_equality() {
        let r = DunklOperator::reflection();
        assert_eq!(r.compose(&r), DunklOperator::identity());
        // D.x != x.D (they differ by I)
        let d = DunklOperator::derivative();
        let mx = DunklOperator::multiplication(LaurentPoly::x());
        assert_ne!(d.compose(&mx), mx.compose(&d));
        assert_eq!(
            &d.compose(&mx) - &mx.compose(&d),
            DunklOperator::identity()
        );
    }

    #[test]
    fn second_order_composition() {
        // D^2 . f(x)*I with f = x^2: f'' = 2, so D^2 f = f D^2 + 2 f' D + f''
        let d2 = DunklOperator::from_term(2, false, LaurentPoly::one());
        let f = DunklOperator::multiplication(LaurentPoly::x_pow(2));
        let got = d2.compose(&f);
        let want = DunklOperator::from_terms([
            (2, false, LaurentPoly::x_pow(2)),
            (1, false, LaurentPoly::monomial(1, int(4))),
            (0, false, LaurentPoly::constant(int(2))),
        ]);
        assert_eq!(got, want);
    }

    #[test]
    fn json_round_trip() {
        let op = DunklOperator::from_terms([
            (0, true, LaurentPoly::from_terms([(-2, rat(1, 2)), (0, int(3))])),
            (1, true, x_plus(rat(-2, 3))),
            (2, false, LaurentPoly::x_pow(-1)),
        ]);
        let v = op.to_json();
        assert_eq!(DunklOperator::from_json(&v).unwrap(), op);
    }

    #[test]
    fn json_rejects_malformed() {
        assert!(DunklOperator::from_json(&serde_json::json!([1, 2])).is_err());
        assert!(DunklOperator::from_json(&serde_json::json!({"1;0": {}})).is_err());
        assert!(DunklOperator::from_json(&serde_json::json!({"1,2": {}})).is_err());
        assert!(DunklOperator::from_json(&serde_json::json!({"1,0": {"0": 5}})).is_err());
    }
}
