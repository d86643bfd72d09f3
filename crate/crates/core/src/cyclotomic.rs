//! Arithmetic in Q[ζ]/(ζ^s - 1), with reduction into the cyclotomic field
//! Q(ζ_s) = Q[ζ]/(Φ_s) for equality tests and final extraction.

use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cyclotomic {
    s: u32,
    /// coeffs[k] multiplies ζ^k, length s
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero(s: u32) -> Self {
        assert!(s >= 1);
        Cyclotomic {
            s,
            coeffs: vec![BigRational::zero(); s as usize],
        }
    }

    pub fn from_rational(s: u32, c: BigRational) -> Self {
        let mut out = Self::zero(s);
        out.coeffs[0] = c;
        out
    }

    pub fn one(s: u32) -> Self {
        Self::from_rational(s, BigRational::one())
    }

    /// ζ^k
    pub fn root_power(s: u32, k: u64) -> Self {
        let mut out = Self::zero(s);
        out.coeffs[(k % s as u64) as usize] = BigRational::one();
        out
    }

    pub fn order(&self) -> u32 {
        self.s
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Zero as an element of the quotient ring (not merely the field).
    pub fn is_ring_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Cyclotomic {
            s: self.s,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplication by ζ^k, a cyclic shift.
    pub fn shift(&self, k: u64) -> Self {
        let s = self.s as usize;
        let k = (k % s as u64) as usize;
        let mut coeffs = vec![BigRational::zero(); s];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(i + k) % s] = c.clone();
        }
        Cyclotomic { s: self.s, coeffs }
    }

    /// Image in Q(ζ_s): the remainder modulo Φ_s, of length φ(s).
    pub fn reduce(&self) -> Vec<BigRational> {
        let phi = cyclotomic_polynomial(self.s);
        let deg = phi.len() - 1;
        let mut rem = self.coeffs.clone();
        for top in (deg..rem.len()).rev() {
            let c = rem[top].clone();
            if c.is_zero() {
                continue;
            }
            for (i, m) in phi.iter().enumerate() {
                let idx = top - deg + i;
                rem[idx] -= &c * BigRational::from_integer(m.clone());
            }
        }
        rem.truncate(deg);
        rem
    }

    /// Zero in the field Q(ζ_s).
    pub fn is_zero(&self) -> bool {
        self.reduce().iter().all(Zero::is_zero)
    }

    /// The rational value, if this element of Q(ζ_s) lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        let r = self.reduce();
        r.iter().skip(1).all(Zero::is_zero).then(|| r[0].clone())
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.s, rhs.s);
        Cyclotomic {
            s: self.s,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        assert_eq!(self.s, rhs.s);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            s: self.s,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.s, rhs.s);
        let s = self.s as usize;
        let mut coeffs = vec![BigRational::zero(); s];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[(i + j) % s] += a * b;
                }
            }
        }
        Cyclotomic { s: self.s, coeffs }
    }
}

/// Integer coefficients of Φ_s, constant term first.
pub fn cyclotomic_polynomial(s: u32) -> Vec<BigInt> {
    // x^s - 1 divided by Φ_e for every proper divisor e of s
    let mut poly = vec![BigInt::zero(); s as usize + 1];
    poly[0] = BigInt::from(-1);
    poly[s as usize] = BigInt::one();
    for e in (1..s).filter(|e| s.is_multiple_of(*e)) {
        poly = exact_divide(&poly, &cyclotomic_polynomial(e));
    }
    poly
}

fn exact_divide(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    // den is monic
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for top in (dd..rem.len()).rev() {
        let c = rem[top].clone();
        quot[top - dd] = c.clone();
        for (i, m) in den.iter().enumerate() {
            rem[top - dd + i] -= &c * m;
        }
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}
