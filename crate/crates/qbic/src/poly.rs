//! Dense polynomials with ring-generic coefficient arithmetic, and the
//! degree-12 dispersion polynomial of the coupled dot–ladder system.
//!
//! The dispersion equation carries two square roots, one per channel.
//! Squaring twice eliminates both:
//!
//! ```text
//! P(z) = [A(z)²·B₊(z)·B₋(z) − (g⁴/4)·(B₊(z) + B₋(z))]² − (g⁸/4)·B₊(z)·B₋(z)
//! A(z) = z − E_d,   B±(z) = (z ± t')² − t_h²
//! ```
//!
//! whose root set is the union of the dispersion-equation solutions over
//! all four square-root sign choices, i.e. over all four Riemann sheets.
//! Squaring introduces no extraneous roots here: unwinding the two
//! squarings shows every root of `P` solves the dispersion equation for
//! some sign pair. `P` is monic of degree 12.
//!
//! Coefficients are assembled by explicit convolution of the low-degree
//! factors — never by sampling and interpolation — so the only rounding
//! is in the final ring operations. The construction is generic over the
//! coefficient ring; instantiating it with rationals gives bit-exact
//! coefficients against which the `f64` path is tested.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{Float, FloatConst, Num, Zero};

use crate::model::ModelParams;

/// Dense polynomial, `coeffs[i]` multiplying `z^i`.
///
/// Normalized form keeps the top coefficient nonzero; the zero
/// polynomial is the empty coefficient list and has no degree.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

impl<C: Num + Clone> Poly<C> {
    pub fn new(coeffs: Vec<C>) -> Self {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    /// `None` for the zero polynomial (degree −∞).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Poly::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        Poly::new(out)
    }

    /// Discrete convolution of the coefficient sequences.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, s: C) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, z: C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * z.clone() + c.clone();
        }
        acc
    }

    /// Coefficients of the derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        let mut k = C::one();
        for c in &self.coeffs[1..] {
            out.push(c.clone() * k.clone());
            k = k + C::one();
        }
        Poly::new(out)
    }
}

/// `P(z)` over any coefficient ring, from ring images of the four
/// parameters. Shared by the floating and exact construction paths.
pub fn dispersion_polynomial_ring<C: Num + Clone>(t_h: C, tp_h: C, g: C, e_d: C) -> Poly<C> {
    let one = C::one;
    let two = || one() + one();
    let four = || two() * two();

    // A = z − E_d, B± = (z ± t')² − t² = (t'² − t²) ± 2t'·z + z²
    let a = Poly::new(vec![C::zero() - e_d, one()]);
    let t2 = t_h.clone() * t_h;
    let tp2 = tp_h.clone() * tp_h.clone();
    let b_plus = Poly::new(vec![tp2.clone() - t2.clone(), two() * tp_h.clone(), one()]);
    let b_minus = Poly::new(vec![tp2 - t2, C::zero() - two() * tp_h, one()]);

    let g2 = g.clone() * g;
    let g4 = g2.clone() * g2;
    let g8 = g4.clone() * g4.clone();

    // inner bracket first, then squared
    let bracket = a
        .mul(&a)
        .mul(&b_plus)
        .mul(&b_minus)
        .sub(&b_plus.add(&b_minus).scale(g4 / four()));
    bracket
        .mul(&bracket)
        .sub(&b_plus.mul(&b_minus).scale(g8 / four()))
}

/// Degree-12 dispersion polynomial with real floating coefficients.
pub fn dispersion_polynomial<T: Float + FloatConst>(params: &ModelParams<T>) -> Poly<T> {
    dispersion_polynomial_ring(params.t_h, params.tp_h, params.g, params.e_d)
}

pub type Rational = Ratio<BigInt>;

/// Exact-coefficient dispersion polynomial from the binary-exact
/// rational images of `f64` parameters. Reference for the `f64` path.
pub fn dispersion_polynomial_exact(params: &ModelParams<f64>) -> Poly<Rational> {
    let r = |x: f64| Rational::from_float(x).expect("finite parameter");
    dispersion_polynomial_ring(r(params.t_h), r(params.tp_h), r(params.g), r(params.e_d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;
    use proptest::prelude::*;

    #[test]
    fn difference_of_squares() {
        let a = Poly::new(vec![1.0, 1.0]); // z + 1
        let b = Poly::new(vec![-1.0, 1.0]); // z − 1
        assert_eq!(a.mul(&b), Poly::new(vec![-1.0, 0.0, 1.0]));
    }

    #[test]
    fn cancellation_yields_zero_poly() {
        let z2 = Poly::new(vec![0.0, 0.0, 1.0]);
        let sum = z2.add(&z2.scale(-1.0));
        assert!(sum.is_zero());
        assert_eq!(sum.degree(), None);
    }

    #[test]
    fn scale_example() {
        let p = Poly::new(vec![-1.0, 0.0, 1.0]);
        assert_eq!(p.scale(2.0), Poly::new(vec![-2.0, 0.0, 2.0]));
    }

    #[test]
    fn dispersion_is_monic_degree_12() {
        let p = dispersion_polynomial(&ModelParams::unit_hopping(0.345, 0.1, 0.3).unwrap());
        assert_eq!(p.degree(), Some(12));
        assert!((p.coeff(12) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn decoupled_limit_factorizes() {
        // g = 0: P = (A²B₊B₋)², quadruple root at E_d, double roots at edges
        let params = ModelParams::unit_hopping(0.345, 0.0, 0.3).unwrap();
        let p = dispersion_polynomial(&params);
        assert_eq!(p.degree(), Some(12));
        for e in [0.3, 0.655, -0.655, 1.345, -1.345] {
            assert!(p.eval(e).abs() < 1e-12, "edge/dot root {e} not a root");
        }
        // quadruple root at E_d: first three derivatives vanish too
        let dp = p.derivative();
        let ddp = dp.derivative();
        let dddp = ddp.derivative();
        assert!(dp.eval(0.3).abs() < 1e-11);
        assert!(ddp.eval(0.3).abs() < 1e-10);
        assert!(dddp.eval(0.3).abs() < 1e-9);
    }

    #[test]
    fn float_coefficients_match_exact_rationals() {
        let params = ModelParams::unit_hopping(0.345, 0.1, 0.3).unwrap();
        let float = dispersion_polynomial(&params);
        let exact = dispersion_polynomial_exact(&params);
        assert_eq!(float.degree(), exact.degree());
        for i in 0..=12 {
            let e = exact.coeff(i).to_f64().unwrap();
            let f = float.coeff(i);
            // convolution arithmetic stays within a few ulp of exact
            assert!(
                (f - e).abs() <= 1e-14 * e.abs().max(1.0),
                "coeff {i}: float {f} vs exact {e}"
            );
        }
    }

    proptest! {
        // (p·q)(z) = p(z)·q(z) and (p+q)(z) = p(z)+q(z) on random data
        #[test]
        fn ring_ops_commute_with_eval(
            p in prop::collection::vec(-3.0f64..3.0, 0..6),
            q in prop::collection::vec(-3.0f64..3.0, 0..6),
            z in -2.0f64..2.0,
        ) {
            let p = Poly::new(p);
            let q = Poly::new(q);
            let prod = p.mul(&q).eval(z) - p.eval(z) * q.eval(z);
            let sum = p.add(&q).eval(z) - (p.eval(z) + q.eval(z));
            prop_assert!(prod.abs() < 1e-9);
            prop_assert!(sum.abs() < 1e-12);
        }

        // root multiset of P(E_d) equals the negated multiset of P(−E_d)
        // via coefficient parity: c_i(E_d) = (−1)^i·c_i(−E_d)
        #[test]
        fn e_d_reflection_parity(
            tp in 0.01f64..0.99,
            g in 0.01f64..0.3,
            ed in -2.0f64..2.0,
        ) {
            let p = dispersion_polynomial(&ModelParams::unit_hopping(tp, g, ed).unwrap());
            let m = dispersion_polynomial(&ModelParams::unit_hopping(tp, g, -ed).unwrap());
            for i in 0..=12 {
                let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
                let diff = p.coeff(i) - sign * m.coeff(i);
                prop_assert!(diff.abs() < 1e-12 * p.coeff(i).abs().max(1.0));
            }
        }
    }
}
