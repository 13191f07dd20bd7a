//! Exact univariate polynomial arithmetic over a signed integer scalar,
//! plus the closed forms used throughout: Fibonacci polynomials, path and
//! cycle independence polynomials, and the equal-part multipartite formula.

use crate::error::{Error, Result};
use num_traits::{FromPrimitive, Signed};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Scalar a [`Polynomial`] may have as coefficients.
///
/// Implemented by any exact signed integer type satisfying the num-traits
/// bounds below (`i64`, `i128`, `num_bigint::BigInt`, ...). Floating-point
/// types are ruled out by `Eq`.
pub trait Coefficient:
    Signed + FromPrimitive + Clone + Eq + fmt::Debug + fmt::Display + Send + Sync
{
}

impl<T> Coefficient for T where
    T: Signed + FromPrimitive + Clone + Eq + fmt::Debug + fmt::Display + Send + Sync
{
}

/// Dense univariate polynomial, ascending coefficients.
///
/// Canonical form: the trailing coefficient is nonzero; the zero polynomial
/// has an empty coefficient vector. Equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<C> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> Polynomial<C> {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial { coeffs: vec![C::one()] }
    }

    pub fn constant(c: C) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Polynomial { coeffs: vec![C::zero(), C::one()] }
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    /// Convenience constructor from small integers.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| C::from_i64(c).unwrap()).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Multiplies by the scalar `c`.
    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift_mul_x(&self, k: usize) -> Self {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// Exact evaluation at `t` (Horner).
    pub fn eval(&self, t: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t.clone() + c.clone();
        }
        acc
    }

    /// Value at `-1`, the alternating coefficient sum.
    pub fn eval_minus_one(&self) -> C {
        self.eval(&-C::one())
    }

    /// Sums of even-index and odd-index coefficients.
    pub fn even_odd_sums(&self) -> (C, C) {
        let mut even = C::zero();
        let mut odd = C::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if k % 2 == 0 {
                even = even + c.clone();
            } else {
                odd = odd + c.clone();
            }
        }
        (even, odd)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Machine rendering: the raw ascending coefficient list.
    pub fn coeff_list_string(&self) -> String {
        let items: Vec<String> = if self.is_zero() {
            vec!["0".into()]
        } else {
            self.coeffs.iter().map(|c| c.to_string()).collect()
        };
        format!("[{}]", items.join(", "))
    }
}

impl<C: Coefficient> Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Self) -> Polynomial<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl<C: Coefficient> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Self) -> Polynomial<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl<C: Coefficient> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Self) -> Polynomial<C> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl<C: Coefficient> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

/// Pretty ascending rendering, e.g. `1 + 5x + 5x^2 + x^3`.
impl<C: Coefficient> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            match (k, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{mag}x^{k}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `n`-th Fibonacci polynomial: `F_0 = F_1 = 1`, `F_n = F_{n-1} + x F_{n-2}`.
pub fn fibonacci_poly<C: Coefficient>(n: usize) -> Polynomial<C> {
    let mut prev: Polynomial<C> = Polynomial::one();
    let mut cur: Polynomial<C> = Polynomial::one();
    for _ in 1..n.max(1) {
        let next = &cur + &prev.shift_mul_x(1);
        prev = cur;
        cur = next;
    }
    cur
}

/// Independence polynomial of the path `P_n`, i.e. `F_{n+1}`.
pub fn path_poly<C: Coefficient>(n: usize) -> Result<Polynomial<C>> {
    if n == 0 {
        return Err(Error::ParamOutOfRange { op: "path_poly", msg: "n >= 1 required".into() });
    }
    Ok(fibonacci_poly(n + 1))
}

/// Independence polynomial of the cycle `C_n`: `F_{n-1} + 2x F_{n-2}`.
pub fn cycle_poly<C: Coefficient>(n: usize) -> Result<Polynomial<C>> {
    if n < 3 {
        return Err(Error::ParamOutOfRange { op: "cycle_poly", msg: "n >= 3 required".into() });
    }
    let two = C::one() + C::one();
    Ok(&fibonacci_poly(n - 1) + &fibonacci_poly::<C>(n - 2).shift_mul_x(1).scale(&two))
}

/// Independence polynomial of the complete multipartite graph with `parts`
/// parts of size `part_size`: `p (1+x)^a - (p-1)`, the Zykov-sum expansion
/// of `p` edgeless graphs on `a` vertices.
pub fn equal_multipartite_poly<C: Coefficient>(
    parts: usize,
    part_size: usize,
) -> Result<Polynomial<C>> {
    if parts == 0 || part_size == 0 {
        return Err(Error::ParamOutOfRange {
            op: "equal_multipartite_poly",
            msg: "parts >= 1 and part_size >= 1 required".into(),
        });
    }
    let p = C::from_usize(parts).unwrap();
    let pm1 = C::from_usize(parts - 1).unwrap();
    let one_plus_x = Polynomial::from_i64s(&[1, 1]).pow(part_size);
    Ok(&one_plus_x.scale(&p) - &Polynomial::constant(pm1))
}

/// `F_n(-1)`: periodic with period 6 as `1, 1, 0, -1, -1, 0`.
pub fn fibonacci_at_minus_one(n: u64) -> i64 {
    const PERIOD: [i64; 6] = [1, 1, 0, -1, -1, 0];
    PERIOD[(n % 6) as usize]
}

/// `I(P_n; -1)` in O(1) via the period-6 structure of `F_n(-1)`.
pub fn value_at_minus_one_path(n: u64) -> Result<i64> {
    if n == 0 {
        return Err(Error::ParamOutOfRange {
            op: "value_at_minus_one_path",
            msg: "n >= 1 required".into(),
        });
    }
    Ok(fibonacci_at_minus_one(n + 1))
}

/// `I(C_n; -1)` in O(1): `F_{n-1}(-1) - 2 F_{n-2}(-1)`.
pub fn value_at_minus_one_cycle(n: u64) -> Result<i64> {
    if n < 3 {
        return Err(Error::ParamOutOfRange {
            op: "value_at_minus_one_cycle",
            msg: "n >= 3 required".into(),
        });
    }
    Ok(fibonacci_at_minus_one(n - 1) - 2 * fibonacci_at_minus_one(n - 2))
}
