//! Dense univariate polynomials over ℤ with arbitrary-precision coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Integer polynomial, coefficients in ascending degree order.
///
/// The coefficient vector never has trailing zeros, so the zero
/// polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn x() -> Self {
        IntPoly::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::from_coeffs(vec![c])
    }

    /// `x - root`.
    pub fn linear_root(root: &BigInt) -> Self {
        IntPoly::from_coeffs(vec![-root.clone(), BigInt::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Ascending coefficients `c_0, …, c_d`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn scale(&self, k: &BigInt) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divide out the (positive) content, keeping every sign.
    pub fn without_content(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let g = self.content();
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Divide out the content and make the leading coefficient positive.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            g = -g;
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// `self` with its leading coefficient made positive.
    pub fn with_positive_leading(self) -> IntPoly {
        if self.leading().is_some_and(Signed::is_negative) {
            -self
        } else {
            self
        }
    }

    /// Remainder `r` of `c·self = q·divisor + r` for some positive integer
    /// `c` (a power of `|lc(divisor)|`). The positive multiplier keeps the
    /// remainder's sign meaningful for Sturm chains.
    pub fn pseudo_rem(&self, divisor: &IntPoly) -> IntPoly {
        let dd = divisor.degree().expect("pseudo-remainder by zero polynomial");
        let lc = divisor.leading().unwrap();
        let lc_abs = lc.abs();
        let negative = lc.is_negative();
        let mut r = self.coeffs.clone();
        while r.len() > dd && !r.is_empty() {
            let shift = r.len() - 1 - dd;
            let lead = r.last().unwrap().clone();
            let lead = if negative { -lead } else { lead };
            for c in r.iter_mut() {
                *c *= &lc_abs;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                r[shift + i] -= &lead * d;
            }
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        IntPoly { coeffs: r }
    }

    /// Quotient of an exact division in ℤ\[x\], or `None` when the
    /// remainder is nonzero or a step would leave ℤ.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc = divisor.leading().unwrap();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return r.is_empty().then(IntPoly::zero);
        }
        let mut q = vec![BigInt::zero(); r.len() - dd];
        while r.len() > dd {
            let shift = r.len() - 1 - dd;
            let (t, rem) = r.last().unwrap().div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                r[shift + i] -= &t * d;
            }
            q[shift] = t;
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        r.is_empty().then(|| IntPoly::from_coeffs(q))
    }

    /// Primitive gcd with positive leading coefficient (primitive PRS).
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    pub fn pow(&self, e: u32) -> IntPoly {
        (0..e).fold(IntPoly::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Sign of `self(num / 2^exp)`, computed without fractions.
    pub fn sign_at_dyadic(&self, num: &BigInt, exp: u32) -> Ordering {
        let Some(d) = self.degree() else {
            return Ordering::Equal;
        };
        // Σ c_i num^i 2^{exp(d-i)} by Horner.
        let mut acc = self.coeffs[d].clone();
        for i in (0..d).rev() {
            acc = acc * num + (&self.coeffs[i] << (exp as usize * (d - i)));
        }
        sign_of(&acc)
    }

    /// Coefficient sign variations of `self(y + num / 2^exp)`. By
    /// Descartes' rule this bounds the number of roots above the point and
    /// has the same parity; zero variations proves there are none.
    pub fn sign_variations_above(&self, num: &BigInt, exp: u32) -> usize {
        let Some(d) = self.degree() else {
            return 0;
        };
        // w(z) = 2^{exp·d} self(z / 2^exp), then shift z ↦ z + num.
        let mut w: Vec<BigInt> = (0..=d).map(|i| &self.coeffs[i] << (exp as usize * (d - i))).collect();
        for i in 0..d {
            for j in (i..d).rev() {
                let carry = num * &w[j + 1];
                w[j] += carry;
            }
        }
        let mut last = Ordering::Equal;
        let mut changes = 0;
        for s in w.iter().map(sign_of).filter(|s| *s != Ordering::Equal) {
            if last != Ordering::Equal && s != last {
                changes += 1;
            }
            last = s;
        }
        changes
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Sign of the polynomial at `+∞` (`positive = true`) or `-∞`.
    pub fn sign_at_infinity(&self, positive: bool) -> Ordering {
        match (self.degree(), self.leading()) {
            (Some(d), Some(lc)) => {
                let s = sign_of(lc);
                if positive || d % 2 == 0 {
                    s
                } else {
                    s.reverse()
                }
            }
            _ => Ordering::Equal,
        }
    }

    /// `q(y) = self(±y + offset)`; `negate` selects the minus sign.
    pub fn substitute_linear(&self, negate: bool, offset: &BigInt) -> IntPoly {
        let lin = IntPoly::from_coeffs(vec![
            offset.clone(),
            if negate { -BigInt::one() } else { BigInt::one() },
        ]);
        self.coeffs
            .iter()
            .rev()
            .fold(IntPoly::zero(), |acc, c| &(&acc * &lin) + &IntPoly::constant(c.clone()))
    }
}

pub(crate) fn sign_of(x: &BigInt) -> Ordering {
    match x.sign() {
        Sign::Minus => Ordering::Less,
        Sign::NoSign => Ordering::Equal,
        Sign::Plus => Ordering::Greater,
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigInt::zero();
        IntPoly::from_coeffs(
            (0..len)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs.clone())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn descartes_variations_above_a_point() {
        // (x - 1)(x - 2)(x - 3)
        let f = p(&[-6, 11, -6, 1]);
        assert_eq!(f.sign_variations_above(&BigInt::from(0), 0), 3);
        assert_eq!(f.sign_variations_above(&BigInt::from(5), 1), 1); // above 2.5
        assert_eq!(f.sign_variations_above(&BigInt::from(7), 1), 0); // above 3.5
        assert!((f.eval_f64(2.5) + 0.375).abs() < 1e-12);
    }

    #[test]
    fn normalizes_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[0, 9, -6, 1]).to_string(), "x^3 - 6x^2 + 9x");
        assert_eq!(p(&[-2, 0, 1]).to_string(), "x^2 - 2");
        assert_eq!(p(&[1, -1]).to_string(), "-x + 1");
    }

    #[test]
    fn gcd_of_cubic_and_derivative() {
        let f = p(&[0, 9, -6, 1]); // x (x - 3)^2
        assert_eq!(f.gcd(&f.derivative()), p(&[-3, 1]));
        assert_eq!(p(&[-2, 0, 1]).gcd(&p(&[0, 2])), IntPoly::one());
        assert_eq!(IntPoly::zero().gcd(&p(&[4, 2])), p(&[2, 1]));
    }

    #[test]
    fn exact_division() {
        let f = p(&[0, 9, -6, 1]);
        assert_eq!(f.div_exact(&p(&[-3, 1])), Some(p(&[0, -3, 1])));
        assert_eq!(f.div_exact(&p(&[1, 1])), None);
        assert_eq!(p(&[1, 2]).div_exact(&p(&[0, 2])), None);
    }

    #[test]
    fn pseudo_remainder_sign() {
        // 2·(x^2 + 1) = (x + 1)(2x - 2)·... remainder has positive multiplier
        let a = p(&[1, 0, 1]);
        let b = p(&[-1, -2]);
        let r = a.pseudo_rem(&b);
        // c·a(x) - q b(x) evaluated at the root of b (x = -1/2) equals r there.
        // a(-1/2) = 5/4 > 0, so r must be positive.
        assert_eq!(r.degree(), Some(0));
        assert!(r.coeffs()[0].is_positive());
    }

    #[test]
    fn dyadic_sign_and_substitution() {
        let f = p(&[-2, 0, 1]);
        assert_eq!(f.sign_at_dyadic(&BigInt::from(3), 1), Ordering::Greater); // 1.5
        assert_eq!(f.sign_at_dyadic(&BigInt::from(11), 3), Ordering::Less); // 1.375
        assert_eq!(f.sign_at_infinity(false), Ordering::Greater);
        assert_eq!(p(&[0, 1]).sign_at_infinity(false), Ordering::Less);
        // f(5 - y) = y^2 - 10y + 23
        assert_eq!(f.substitute_linear(true, &BigInt::from(5)), p(&[23, -10, 1]));
        assert_eq!(f.substitute_linear(false, &BigInt::from(-1)), p(&[-1, -2, 1]));
    }

    proptest! {
        #[test]
        fn multiplication_then_exact_division(a in proptest::collection::vec(-20i64..20, 1..6),
                                              b in proptest::collection::vec(-20i64..20, 1..6)) {
            let (a, b) = (p(&a), p(&b));
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.div_exact(&b), Some(a.clone()));
            let x = BigInt::from(7);
            prop_assert_eq!(prod.eval(&x), a.eval(&x) * b.eval(&x));
        }

        #[test]
        fn gcd_divides_both(a in proptest::collection::vec(-9i64..9, 1..5),
                            b in proptest::collection::vec(-9i64..9, 1..5),
                            c in proptest::collection::vec(-9i64..9, 1..4)) {
            let (a, b, c) = (p(&a), p(&b), p(&c));
            prop_assume!(!a.is_zero() && !b.is_zero() && !c.is_zero());
            let (ac, bc) = (&a * &c, &b * &c);
            let g = ac.gcd(&bc);
            prop_assert!(ac.div_exact(&g).is_some());
            prop_assert!(bc.div_exact(&g).is_some());
            prop_assert!(g.div_exact(&c.primitive_part()).is_some());
        }
    }
}
