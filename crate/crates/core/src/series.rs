//! Truncated bivariate power series with exact integer coefficients, and
//! the fixed-point solver for the generating function
//! `F = 1 + x F + x y F^2 / (1 - y (F - 1))`.
//!
//! All arithmetic is performed modulo `(x^{N+1}, y^{N+1})`. Series division
//! is avoided: inversion exists only for unit constant term (via the
//! geometric expansion) and the functional equation is checked in cleared-
//! denominator form.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::closed::i_closed;
use crate::{Error, Result};

/// Default truncation-order bound for the solver.
pub const DEFAULT_ORDER_BOUND: usize = 30;

/// A polynomial in `x` and `y` truncated to degree `order` in each
/// variable, with exact integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSeries {
    order: usize,
    /// Coefficient of `x^n y^k` at index `n * (order + 1) + k`.
    coeffs: Vec<BigInt>,
}

impl BivariateSeries {
    pub fn zero(order: usize) -> Self {
        BivariateSeries {
            order,
            coeffs: vec![BigInt::zero(); (order + 1) * (order + 1)],
        }
    }

    pub fn constant(order: usize, c: i64) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::from(c);
        s
    }

    /// The monomial `x`.
    pub fn x(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.set(1, 0, BigInt::one());
        }
        s
    }

    /// The monomial `y`.
    pub fn y(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.set(0, 1, BigInt::one());
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coefficient(&self, n: usize, k: usize) -> &BigInt {
        &self.coeffs[n * (self.order + 1) + k]
    }

    pub fn set(&mut self, n: usize, k: usize, value: BigInt) {
        self.coeffs[n * (self.order + 1) + k] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Nonzero coefficients as `(n, k, value)`, ordered by `(n, k)`.
    pub fn nonzero_terms(&self) -> Vec<(usize, usize, BigInt)> {
        let mut out = Vec::new();
        for n in 0..=self.order {
            for k in 0..=self.order {
                let c = self.coefficient(n, k);
                if !c.is_zero() {
                    out.push((n, k, c.clone()));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a - b)
    }

    fn zip(&self, other: &Self, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        assert_eq!(self.order, other.order, "mismatched truncation orders");
        BivariateSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    /// Truncating product.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "mismatched truncation orders");
        let ord = self.order;
        let mut out = Self::zero(ord);
        for n1 in 0..=ord {
            for k1 in 0..=ord {
                let a = self.coefficient(n1, k1);
                if a.is_zero() {
                    continue;
                }
                for n2 in 0..=ord - n1 {
                    for k2 in 0..=ord - k1 {
                        let b = other.coefficient(n2, k2);
                        if b.is_zero() {
                            continue;
                        }
                        let idx = (n1 + n2) * (ord + 1) + (k1 + k2);
                        out.coeffs[idx] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Multiplicative inverse, defined only for constant coefficient `+-1`:
    /// `1/(c - g) = c^{-1} sum (c^{-1} g)^t` with `g` the non-constant
    /// part, which terminates under truncation.
    pub fn inverse(&self) -> Result<Self> {
        let c = self.coefficient(0, 0);
        if !(c == &BigInt::one() || c == &(-BigInt::one())) {
            return Err(Error::Domain(format!(
                "series inversion requires constant coefficient +-1, got {c}"
            )));
        }
        let sign = c.clone();
        // g = 1 - c*self has zero constant term, so g^t dies past 2*order.
        let mut g = Self::constant(self.order, 1).sub(self);
        if sign == -BigInt::one() {
            g = Self::constant(self.order, 1).add(self);
        }
        let mut result = Self::constant(self.order, 1);
        let mut power = Self::constant(self.order, 1);
        for _ in 0..2 * self.order {
            power = power.mul(&g);
            if power.is_zero() {
                break;
            }
            result = result.add(&power);
        }
        if sign == -BigInt::one() {
            result = Self::zero(self.order).sub(&result);
        }
        Ok(result)
    }
}

/// Solves `F = 1 + x F + x y F^2 / (1 - y (F - 1))` modulo
/// `(x^{N+1}, y^{N+1})` by iterating the right-hand side from `F = 1`;
/// each iteration fixes one more `x`-degree.
pub fn series_solve_f(order: usize) -> Result<BivariateSeries> {
    if order > DEFAULT_ORDER_BOUND {
        return Err(Error::Resource(format!(
            "order {order} exceeds the solver bound {DEFAULT_ORDER_BOUND}"
        )));
    }
    let one = BivariateSeries::constant(order, 1);
    let x = BivariateSeries::x(order);
    let y = BivariateSeries::y(order);
    let mut f = one.clone();
    for _ in 0..order + 2 {
        let denom = one.sub(&y.mul(&f.sub(&one)));
        let next = one
            .add(&x.mul(&f))
            .add(&x.mul(&y).mul(&f.mul(&f)).mul(&denom.inverse()?));
        if next == f {
            return Ok(f);
        }
        f = next;
    }
    panic!("series fixed point did not stabilize within {} iterations", order + 2);
}

/// Checks the cleared-denominator identity
/// `F D - (1 + x F) D - x y F^2 = 0` with `D = 1 - y (F - 1)`, to the
/// truncation order.
pub fn verify_functional_equation(f: &BivariateSeries) -> bool {
    let order = f.order();
    let one = BivariateSeries::constant(order, 1);
    let x = BivariateSeries::x(order);
    let y = BivariateSeries::y(order);
    let denom = one.sub(&y.mul(&f.sub(&one)));
    let lhs = f
        .mul(&denom)
        .sub(&one.add(&x.mul(f)).mul(&denom))
        .sub(&x.mul(&y).mul(&f.mul(f)));
    lhs.is_zero()
}

/// The series whose `(n, k)` coefficient is `I(n, k)` from the closed form.
pub fn series_from_closed_form(order: usize) -> BivariateSeries {
    let mut s = BivariateSeries::zero(order);
    for n in 0..=order {
        for k in 0..=order {
            s.set(n, k, BigInt::from(i_closed(n as u64, k as u64)));
        }
    }
    s
}
