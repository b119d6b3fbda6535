//! Polynomials in L with rational coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LPoly {
    /// `coeffs[k]` is the coefficient of L^k; no trailing zeros.
    coeffs: Vec<BigRational>,
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl LPoly {
    pub fn zero() -> Self {
        LPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// c L^k
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = q(c);
        Self::from_rationals(coeffs)
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::from_rationals(c.iter().map(|&v| q(v)).collect())
    }

    pub fn from_bigints(c: &[BigInt]) -> Self {
        Self::from_rationals(c.iter().map(|v| BigRational::from_integer(v.clone())).collect())
    }

    pub fn from_rationals(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        LPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest power of L with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::from_rationals((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }

    pub fn neg(&self) -> Self {
        LPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_rationals(out)
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Self::from_rationals(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Multiply by L^k.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        LPoly { coeffs }
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().expect("nonzero");
        let lead = d.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quo = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quo.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (j, b) in d.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * b;
                }
            }
            quo[k] = c;
        }
        rem.truncate(dd);
        (Self::from_rationals(quo), Self::from_rationals(rem))
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let l = self.leading();
        self.scale(&(BigRational::one() / l))
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// lcm of coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::one(), |a, c| a.lcm(c.denom()))
    }

    /// gcd of numerators (for integral polynomials: the content).
    pub fn numerator_gcd(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |a, c| a.gcd(c.numer()))
    }

    /// Integer coefficients, if integral.
    pub fn to_bigints(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }

    /// Coefficients padded to length `n` as strings (for JSON).
    pub fn coeff_strings(&self, n: usize) -> Vec<String> {
        (0..n.max(self.coeffs.len())).map(|k| self.coeff(k).to_string()).collect()
    }
}

impl fmt::Display for LPoly {
    /// Ascending powers: `1 - L + L^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            let var = match k {
                0 => String::new(),
                1 => "L".to_string(),
                _ => format!("L^{k}"),
            };
            let body = if k == 0 {
                a.to_string()
            } else if a.is_one() {
                var
            } else {
                format!("{a}{var}")
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            write!(f, "{body}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display() {
        assert_eq!(LPoly::from_ints(&[1, -1, 1]).to_string(), "1 - L + L^2");
        assert_eq!(LPoly::from_ints(&[0, 0, -2, 0, 1]).to_string(), "-2L^2 + L^4");
        assert_eq!(LPoly::zero().to_string(), "0");
    }

    #[test]
    fn gcd_and_division() {
        // (1 + L)(1 - L + L^2) and (1 + L) L
        let a = LPoly::from_ints(&[1, 0, 0, 1]);
        let b = LPoly::from_ints(&[0, 1, 1]);
        assert_eq!(a.gcd(&b), LPoly::from_ints(&[1, 1]));
        let (quo, r) = a.div_rem(&LPoly::from_ints(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(quo, LPoly::from_ints(&[1, -1, 1]));
        assert_eq!(LPoly::from_ints(&[0, 0, 3]).valuation(), Some(2));
    }

    #[test]
    fn eval_horner() {
        let p = LPoly::from_ints(&[1, 2, 3]);
        assert_eq!(p.eval(&q(2)), q(17));
    }
}
