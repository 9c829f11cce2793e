//! Truncated exponential-generating-series arithmetic.
//!
//! A [`TruncatedSeries`] keeps the first `order` coefficients of a formal
//! power series. All operations min-merge the orders of their inputs, so a
//! coefficient is retained only while it is exact. The scalar type is
//! generic: `f64` for evaluation and sampling, [`num_rational::BigRational`]
//! for exact count cross-checks (see the crate-root aliases `Series` and
//! `SeriesExact`).

use num_traits::{FromPrimitive, Num, Signed};

use crate::{Error, Result};

/// Scalar types a series can be built over: a field with signs and exact
/// conversion from small integers.
pub trait Coeff: Clone + Num + Signed + FromPrimitive {
    /// Scalar exponential, where the type supports one. Rationals do not,
    /// which restricts the fixed-point solver to B'(0) = 0 in exact mode.
    fn exp_scalar(&self) -> Option<Self> {
        None
    }
}

impl Coeff for f64 {
    fn exp_scalar(&self) -> Option<Self> {
        Some(f64::exp(*self))
    }
}

impl Coeff for num_rational::BigRational {}

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Coeff> TruncatedSeries<T> {
    /// Series with the given coefficients; the order is their count.
    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "series order must be at least 1");
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_coeffs(vec![T::zero(); order.max(1)])
    }

    /// The series `z`, truncated at `order`.
    pub fn x(order: usize) -> Self {
        let mut c = vec![T::zero(); order.max(2)];
        c[1] = T::one();
        Self::from_coeffs(c)
    }

    pub fn constant(value: T, order: usize) -> Self {
        let mut c = vec![T::zero(); order.max(1)];
        c[0] = value;
        Self::from_coeffs(c)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Result<&T> {
        self.coeffs.get(k).ok_or(Error::OrderTooSmall {
            need: k + 1,
            have: self.order(),
        })
    }

    pub fn truncate(&self, order: usize) -> Self {
        let n = order.min(self.order()).max(1);
        Self::from_coeffs(self.coeffs[..n].to_vec())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..n)
            .map(|k| self.coeffs[k].clone() + other.coeffs[k].clone())
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, factor: &T) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.clone() * factor.clone())
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut coeffs = vec![T::zero(); n];
        for i in 0..n.min(self.order()) {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..(n - i).min(other.order()) {
                coeffs[i + j] = coeffs[i + j].clone()
                    + self.coeffs[i].clone() * other.coeffs[j].clone();
            }
        }
        Self::from_coeffs(coeffs)
    }

    /// Substitution `self(other)`; `other` must have zero constant term.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if !other.coeffs[0].is_zero() {
            return Err(Error::CompositionAtNonzeroConstant);
        }
        let n = self.order().min(other.order());
        let inner = other.truncate(n);
        // Horner on series.
        let mut result = Self::constant(self.coeffs[n - 1].clone(), n);
        for k in (0..n - 1).rev() {
            result = result.mul(&inner);
            result.coeffs[0] = result.coeffs[0].clone() + self.coeffs[k].clone();
        }
        Ok(result)
    }

    /// Formal derivative; drops the top coefficient, which is no longer exact.
    pub fn derive(&self) -> Self {
        if self.order() == 1 {
            return Self::zero(1);
        }
        let coeffs = (1..self.order())
            .map(|k| self.coeffs[k].clone() * T::from_usize(k).unwrap())
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Pointing `z d/dz`; coefficient k becomes `k * a_k`, same order.
    pub fn point(&self) -> Self {
        let coeffs = (0..self.order())
            .map(|k| self.coeffs[k].clone() * T::from_usize(k).unwrap())
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Series exponential; the argument must have zero constant term.
    ///
    /// Uses the recurrence e_n = (1/n) sum_{k=1..n} k a_k e_{n-k} from
    /// E' = A' E.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::CompositionAtNonzeroConstant);
        }
        let n = self.order();
        let mut e = vec![T::zero(); n];
        e[0] = T::one();
        for m in 1..n {
            let mut acc = T::zero();
            for k in 1..=m {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc = acc
                    + T::from_usize(k).unwrap() * self.coeffs[k].clone() * e[m - k].clone();
            }
            e[m] = acc / T::from_usize(m).unwrap();
        }
        Ok(Self::from_coeffs(e))
    }

    /// Truncated power by repeated squaring.
    pub fn pow(&self, mut exponent: usize) -> Self {
        let mut result = Self::constant(T::one(), self.order());
        let mut base = self.clone();
        while exponent > 0 {
            if exponent & 1 == 1 {
                result = result.mul(&base);
            }
            exponent >>= 1;
            if exponent > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Horner evaluation at `x`. Returns the value together with the
    /// magnitude of the last retained term as a truncation-error proxy.
    pub fn eval(&self, x: &T) -> (T, T) {
        let mut value = T::zero();
        for c in self.coeffs.iter().rev() {
            value = value * x.clone() + c.clone();
        }
        let mut tail = self.coeffs[self.order() - 1].abs();
        for _ in 0..self.order() - 1 {
            tail = tail * x.abs();
        }
        (value, tail)
    }

    /// Multiply by `z`: shift coefficients up by one within the truncation.
    pub fn shift_up(&self) -> Self {
        let n = self.order();
        let mut coeffs = vec![T::zero(); n];
        for k in 1..n {
            coeffs[k] = self.coeffs[k - 1].clone();
        }
        Self::from_coeffs(coeffs)
    }
}

/// Solve the block-stability fixed point `C(z) = z exp(B'(C(z)))` by
/// iteration from zero; pass `i` fixes coefficients up to `z^i`, so `order`
/// passes suffice.
///
/// With exact coefficients a nonzero `B'(0)` is rejected, since the scalar
/// factor `exp(B'(0))` is not rational.
pub fn fixed_point<T: Coeff>(bprime: &TruncatedSeries<T>, order: usize) -> Result<TruncatedSeries<T>> {
    assert!(order >= 1);
    let order = order.max(2);
    let b0 = bprime.coeffs()[0].clone();
    let scalar = if b0.is_zero() {
        T::one()
    } else {
        b0.exp_scalar().ok_or(Error::ParameterOutOfRange(
            "nonzero B'(0) needs a scalar exponential".into(),
        ))?
    };
    let mut tail = bprime.truncate(order);
    tail = tail.add(&TruncatedSeries::constant(-b0, order));

    let mut c = TruncatedSeries::zero(order);
    for _ in 0..order {
        let inner = tail.compose(&c)?;
        c = inner.exp()?.scale(&scalar).shift_up();
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{BigRational, Series, SeriesExact};
    use num_bigint::BigInt;
    use num_traits::{One, ToPrimitive, Zero};

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn exp_series(order: usize) -> Series {
        Series::x(order).exp().unwrap()
    }

    #[test]
    fn exp_of_x_first_coefficients() {
        let e = exp_series(8);
        assert_eq!(&e.coeffs()[..4], &[1.0, 1.0, 0.5, 1.0 / 6.0]);
    }

    #[test]
    fn exp_rejects_nonzero_constant() {
        let s = Series::constant(1.0, 4);
        assert_eq!(s.exp().unwrap_err(), Error::CompositionAtNonzeroConstant);
    }

    #[test]
    fn point_of_exp_is_x_exp() {
        // x d/dx e^x = x e^x, coefficient k is k/k!.
        let p = exp_series(10).point();
        let mut fact = 1.0;
        for k in 0..10 {
            if k > 0 {
                fact *= k as f64;
            }
            assert!((p.coeffs()[k] - k as f64 / fact).abs() < 1e-15);
        }
    }

    #[test]
    fn compose_geometric_with_x_squared() {
        // 1/(1-z) composed with z^2 is 1 + z^2 + z^4 + ...
        let geo = Series::from_coeffs(vec![1.0; 6]);
        let mut x2 = Series::zero(6);
        x2 = x2.add(&Series::x(6).mul(&Series::x(6)));
        let c = geo.compose(&x2).unwrap();
        assert_eq!(c.coeffs(), &[1.0, 0.0, 1.0, 0.0, 1.0, 0.0]);
    }

    #[test]
    fn compose_rejects_nonzero_constant() {
        let geo = Series::from_coeffs(vec![1.0; 4]);
        let one = Series::constant(1.0, 4);
        assert_eq!(
            geo.compose(&one).unwrap_err(),
            Error::CompositionAtNonzeroConstant
        );
    }

    #[test]
    fn eval_exp_at_one() {
        let (v, tail) = exp_series(64).eval(&1.0);
        assert!((v - 1f64.exp()).abs() < 1e-15);
        assert!(tail < 1e-80);
        let (z, _) = Series::zero(8).eval(&3.0);
        assert_eq!(z, 0.0);
    }

    #[test]
    fn fixed_point_trees_counts_rooted_trees() {
        // B'(z) = z gives labeled rooted trees: [z^n] C = n^{n-1}/n!.
        // Oracle for small n: brute-force enumeration over parent maps is
        // n^{n-1} by construction; n <= 6 spelled out.
        let c = fixed_point(&Series::x(8), 8).unwrap();
        let mut fact = 1.0;
        for n in 1..7usize {
            fact *= n as f64;
            let expect = (n as f64).powi(n as i32 - 1) / fact;
            assert!(
                (c.coeffs()[n] - expect).abs() < 1e-12 * expect.max(1.0),
                "n={n}"
            );
        }
    }

    #[test]
    fn fixed_point_forb_c4_counts_three_vertex_graphs() {
        // B'(z) = z + z^2/2; |C_3| = 3 paths + 1 triangle = 4.
        let bprime = Series::from_coeffs(vec![0.0, 1.0, 0.5, 0.0, 0.0]);
        let c = fixed_point(&bprime, 5).unwrap();
        let count = c.coeffs()[3] * 6.0 / 3.0;
        assert!((count - 4.0).abs() < 1e-12);
    }

    #[test]
    fn fixed_point_of_zero_block_series_is_x() {
        let c = fixed_point(&Series::zero(6), 6).unwrap();
        assert_eq!(c.coeffs(), &[0.0, 1.0, 0.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn fixed_point_constant_bprime_scales_linear_term() {
        // C = z exp(c) when B' is the constant c.
        let c = fixed_point(&Series::constant(0.5, 5), 5).unwrap();
        assert!((c.coeffs()[1] - 0.5f64.exp()).abs() < 1e-15);
    }

    #[test]
    fn fixed_point_exact_mode_rejects_nonzero_constant() {
        let b = SeriesExact::constant(BigRational::one(), 4);
        assert!(fixed_point(&b, 4).is_err());
    }

    #[test]
    fn fixed_point_is_self_consistent() {
        // Substituting the fixed point back reproduces it coefficientwise.
        let bprime = Series::from_coeffs(vec![0.0, 1.0, 0.5, 1.0 / 3.0, 0.25, 0.1, 0.0, 0.0]);
        let c = fixed_point(&bprime, 8).unwrap();
        let again = bprime.compose(&c).unwrap().exp().unwrap().shift_up();
        for (a, b) in c.coeffs().iter().zip(again.coeffs()) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn exact_trees_fixed_point_matches_cayley_counts_to_n_12() {
        let b = SeriesExact::x(13);
        let c = fixed_point(&b, 13).unwrap();
        let mut fact = BigRational::one();
        for n in 1..13usize {
            fact = fact * rat(n as i64, 1);
            let rooted = c.coeffs()[n].clone() * fact.clone();
            let expect = BigInt::from(n).pow(n as u32 - 1);
            assert!(rooted.is_integer(), "n={n}");
            assert_eq!(rooted.to_integer(), expect, "n={n}");
        }
    }

    #[test]
    fn exact_ring_axioms_hold() {
        let a = SeriesExact::from_coeffs(vec![rat(1, 2), rat(-2, 3), rat(5, 7), rat(0, 1)]);
        let b = SeriesExact::from_coeffs(vec![rat(3, 4), rat(1, 5), rat(-1, 2), rat(2, 9)]);
        let c = SeriesExact::from_coeffs(vec![rat(0, 1), rat(7, 3), rat(1, 8), rat(-3, 5)]);
        assert_eq!(a.mul(&b), b.mul(&a));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn product_and_chain_rule_hold_coefficientwise() {
        let f = SeriesExact::from_coeffs(vec![rat(1, 1), rat(1, 2), rat(1, 3), rat(1, 4), rat(1, 5)]);
        let g = SeriesExact::from_coeffs(vec![rat(2, 1), rat(-1, 3), rat(1, 6), rat(3, 7), rat(1, 9)]);
        let lhs = f.mul(&g).derive();
        let rhs = f.derive().mul(&g.truncate(4)).add(&f.truncate(4).mul(&g.derive()));
        assert_eq!(lhs, rhs);

        let h = SeriesExact::from_coeffs(vec![rat(0, 1), rat(1, 1), rat(1, 2), rat(2, 5), rat(1, 7)]);
        let lhs = f.compose(&h).unwrap().derive();
        let rhs = f.derive().compose(&h.truncate(4)).unwrap().mul(&h.derive());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let f = Series::from_coeffs(vec![1.0, 0.3, -0.2, 0.05, 0.01]);
        let direct = f.mul(&f).mul(&f).mul(&f).mul(&f);
        let fast = f.pow(5);
        for (a, b) in direct.coeffs().iter().zip(fast.coeffs()) {
            assert!((a - b).abs() < 1e-14);
        }
    }

    #[test]
    fn exact_eval_is_exact() {
        let f = SeriesExact::from_coeffs(vec![rat(1, 3), rat(2, 5), rat(-1, 7)]);
        let (v, _) = f.eval(&rat(1, 2));
        assert_eq!(v, rat(1, 3) + rat(1, 5) - rat(1, 28));
        assert!(v.to_f64().is_some());
    }
}
