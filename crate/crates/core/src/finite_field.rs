//! Finite fields F_q, q = p^k, built as F_p[t]/(f) for the smallest monic
//! irreducible f of degree k.
//!
//! Elements are encoded as integers 0..q whose base-p digits are the
//! coefficients c_0 + c_1 p + ... + c_{k-1} p^{k-1}. "Smallest" orders the
//! candidate moduli by that same encoding of their lower coefficients.

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct FiniteField {
    p: u32,
    k: u32,
    q: u32,
    /// Monic modulus, coefficients from t^0 to t^k.
    modulus: Vec<u32>,
}

impl FiniteField {
    pub fn new(q: u32) -> Result<Self> {
        let (p, k) = prime_power(q).ok_or_else(|| Error::domain(format!("{q} is not a prime power")))?;
        let modulus = smallest_irreducible(p, k);
        Ok(FiniteField { p, k, q, modulus })
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }

    pub fn one(&self) -> u32 {
        1
    }

    fn digits(&self, mut a: u32) -> Vec<u32> {
        (0..self.k)
            .map(|_| {
                let d = a % self.p;
                a /= self.p;
                d
            })
            .collect()
    }

    fn encode(&self, coeffs: &[u32]) -> u32 {
        coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.encode(&sum)
    }

    pub fn neg(&self, a: u32) -> u32 {
        let neg: Vec<u32> = self.digits(a).iter().map(|&x| (self.p - x) % self.p).collect();
        self.encode(&neg)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as u32;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let p = self.p as u64;
        let mut prod = vec![0u64; 2 * self.k as usize - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // reduce by the monic modulus from the top down
        let k = self.k as usize;
        for top in (k..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            for (i, &m) in self.modulus[..k].iter().enumerate() {
                let idx = top - k + i;
                prod[idx] = (prod[idx] + (p - c) * m as u64) % p;
            }
            prod[top] = 0;
        }
        let coeffs: Vec<u32> = prod[..k].iter().map(|&c| c as u32).collect();
        self.encode(&coeffs)
    }

    pub fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }
}

/// (p, k) with q = p^k, p prime, k ≥ 1.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut rest, mut k) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

fn poly_rem(mut a: Vec<u32>, b: &[u32], p: u32) -> Vec<u32> {
    // b is monic
    let db = b.len() - 1;
    while a.len() > db {
        let c = *a.last().unwrap();
        let shift = a.len() - 1 - db;
        if c != 0 {
            for (i, &bi) in b.iter().enumerate() {
                a[shift + i] = (a[shift + i] + (p - c) * bi % p) % p;
            }
        }
        a.pop();
    }
    a
}

fn monic_from_index(p: u32, degree: u32, mut index: u32) -> Vec<u32> {
    let mut coeffs: Vec<u32> = (0..degree)
        .map(|_| {
            let c = index % p;
            index /= p;
            c
        })
        .collect();
    coeffs.push(1);
    coeffs
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let k = (f.len() - 1) as u32;
    for degree in 1..=k / 2 {
        for index in 0..p.pow(degree) {
            let g = monic_from_index(p, degree, index);
            if poly_rem(f.to_vec(), &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(p: u32, k: u32) -> Vec<u32> {
    (0..p.pow(k))
        .map(|index| monic_from_index(p, k, index))
        .find(|f| is_irreducible(f, p))
        .expect("an irreducible polynomial of every degree exists")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(49), Some((7, 2)));
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn moduli() {
        // t^2 + 1 is reducible over F_2; t^2 + t + 1 is the first irreducible
        assert_eq!(FiniteField::new(4).unwrap().modulus(), &[1, 1, 1]);
        // over F_3, t^2 + 1 is irreducible and comes first
        assert_eq!(FiniteField::new(9).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(FiniteField::new(8).unwrap().modulus(), &[1, 1, 0, 1]);
    }

    #[test]
    fn field_axioms() {
        for q in [2, 4, 8, 9, 25, 27, 49] {
            let f = FiniteField::new(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), 0);
                // every nonzero element has multiplicative order dividing q - 1
                if a != 0 {
                    assert_eq!(f.pow(a, (q - 1) as u64), 1, "q={q} a={a}");
                    assert!(f.elements().any(|b| f.mul(a, b) == 1));
                }
                for b in f.elements().step_by(3) {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                }
            }
        }
    }
}
