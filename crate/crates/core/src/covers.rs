//! Cyclic covers y^d = Π (x - a_i)^{m_i} of the projective line: ramification,
//! genus, the fibre over ∞, triangle signatures, and point counts over finite
//! fields.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::arith::{factorial, falling_factorial, gcd, is_prime};
use crate::error::{Error, Result};
use crate::finite_field::FiniteField;
use crate::partitions::{automorphism_count, Partition};

/// Largest field size accepted by [`fermat_point_count`].
pub const FERMAT_MAX_Q: u32 = 10_000;

/// The cover y^d = Π (x - a_i)^{m_i}; only the multiplicities matter here.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclicCoverSpec {
    d: u32,
    multiplicities: Vec<u32>,
    n: u64,
}

impl CyclicCoverSpec {
    /// Reduces each multiplicity mod d; a multiplicity divisible by d is not a
    /// branch point and is rejected.
    pub fn new(d: u32, multiplicities: &[u32]) -> Result<Self> {
        if d < 2 {
            return Err(Error::domain("cover degree must be at least 2"));
        }
        if multiplicities.is_empty() {
            return Err(Error::domain("need at least one finite branch point"));
        }
        let reduced: Vec<u32> = multiplicities.iter().map(|m| m % d).collect();
        if reduced.contains(&0) {
            return Err(Error::domain(format!(
                "multiplicities divisible by {d} are not branch points: {multiplicities:?}"
            )));
        }
        let n = reduced.iter().map(|&m| m as u64).sum();
        Ok(CyclicCoverSpec {
            d,
            multiplicities: reduced,
            n,
        })
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    /// Σ m_i after reduction; only its class mod d is meaningful.
    pub fn total_multiplicity(&self) -> u64 {
        self.n
    }

    fn ramified_at_infinity(&self) -> bool {
        !self.n.is_multiple_of(self.d as u64)
    }

    /// e_i = d / gcd(d, m_i) at each finite branch point, and e_∞ = d / gcd(d, n)
    /// when ∞ ramifies.
    pub fn ramification_indices(&self) -> Ramification {
        let d = self.d as u64;
        Ramification {
            finite: self
                .multiplicities
                .iter()
                .map(|&m| (d / gcd(d, m as u64)) as u32)
                .collect(),
            infinity: self.ramified_at_infinity().then(|| (d / gcd(d, self.n)) as u32),
        }
    }

    /// The curve is irreducible iff gcd(d, m_1, .., m_s) = 1.
    pub fn is_irreducible(&self) -> bool {
        self.multiplicities.iter().fold(self.d as u64, |g, &m| gcd(g, m as u64)) == 1
    }

    /// Riemann–Hurwitz for the cyclic cover:
    /// 2g - 2 = -2d + Σ_i (d - gcd(d, m_i)) + [d ∤ n](d - gcd(d, n)).
    pub fn genus(&self) -> Result<u64> {
        if !self.is_irreducible() {
            return Err(Error::domain(format!(
                "y^{} = Π(x-a_i)^{:?} is reducible",
                self.d, self.multiplicities
            )));
        }
        let d = self.d as i64;
        let mut twice = -2 * d;
        for &m in &self.multiplicities {
            twice += d - gcd(d as u64, m as u64) as i64;
        }
        if self.ramified_at_infinity() {
            twice += d - gcd(d as u64, self.n) as i64;
        }
        // twice = 2g - 2
        if twice < -2 || twice % 2 != 0 {
            return Err(Error::Internal(format!("Riemann–Hurwitz gave 2g-2 = {twice}")));
        }
        Ok(((twice + 2) / 2) as u64)
    }

    pub fn profile_at_infinity(&self) -> Partition {
        profile_at_infinity(self.d, self.n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ramification {
    pub finite: Vec<u32>,
    pub infinity: Option<u32>,
}

impl Ramification {
    /// All indices, finite points first, then ∞ if it ramifies.
    pub fn all(&self) -> Vec<u32> {
        self.finite.iter().copied().chain(self.infinity).collect()
    }
}

/// gcd(d, n) cycles of length d / gcd(d, n); (1^d) exactly when d | n.
pub fn profile_at_infinity(d: u32, n: u64) -> Partition {
    let g = gcd(d as u64, n) as u32;
    Partition::from_sorted(vec![d / g; g as usize])
}

/// m! / Π_k γ_k!, the number of distinct orderings of the parts of μ.
pub fn monodromy_type_count(mu: &Partition) -> BigUint {
    factorial(mu.len() as u32) / automorphism_count(mu)
}

/// Orbifold signature (p, q, r) of a triangle quotient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbifoldSignature {
    orders: [u32; 3],
}

impl OrbifoldSignature {
    pub fn new(p: u32, q: u32, r: u32) -> Result<Self> {
        if p < 2 || q < 2 || r < 2 {
            return Err(Error::domain(format!(
                "orbifold orders must be at least 2, got ({p},{q},{r})"
            )));
        }
        Ok(OrbifoldSignature { orders: [p, q, r] })
    }

    pub fn orders(&self) -> [u32; 3] {
        self.orders
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Geometry {
    Spherical,
    Euclidean,
    Hyperbolic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleClass {
    pub geometry: Geometry,
    pub group: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub order: Option<u64>,
}

/// Geometry from the sign of 1/p + 1/q + 1/r - 1, and for spherical
/// signatures the finite rotation group.
pub fn triangle_classify(sig: OrbifoldSignature) -> TriangleClass {
    let mut o = sig.orders.map(u64::from);
    o.sort_unstable();
    let [p, q, r] = o;
    let lhs = q * r + p * r + p * q;
    let rhs = p * q * r;
    let geometry = match lhs.cmp(&rhs) {
        std::cmp::Ordering::Greater => Geometry::Spherical,
        std::cmp::Ordering::Equal => Geometry::Euclidean,
        std::cmp::Ordering::Less => Geometry::Hyperbolic,
    };
    let group = match (geometry, p, q, r) {
        (Geometry::Spherical, 2, 2, 2) => Some(("Z2xZ2".to_string(), 4)),
        (Geometry::Spherical, 2, 2, n) => Some((format!("D{n}"), 2 * n)),
        (Geometry::Spherical, 2, 3, 3) => Some(("A4".to_string(), 12)),
        (Geometry::Spherical, 2, 3, 4) => Some(("S4".to_string(), 24)),
        (Geometry::Spherical, 2, 3, 5) => Some(("A5".to_string(), 60)),
        _ => None,
    };
    TriangleClass {
        geometry,
        order: group.as_ref().map(|g| g.1),
        group: group.map(|g| g.0),
    }
}

/// (p)_{m+1} / (p² - p): ordered (m+1)-tuples of distinct points of the
/// affine line over F_p modulo affine transformations. Zero once m ≥ p.
pub fn count_configurations_mod_affine(p: u64, m: u64) -> Result<BigRational> {
    if !is_prime(p) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    if m == 0 {
        return Err(Error::domain("need at least one root (m ≥ 1)"));
    }
    let numerator = BigInt::from(falling_factorial(p, m + 1));
    Ok(BigRational::new(numerator, BigInt::from(p * p - p)))
}

/// Number of affine F_q-points of y^m + x^n = 1.
pub fn fermat_point_count(n: u64, m: u64, q: u32) -> Result<u64> {
    if n < 2 || m < 2 {
        return Err(Error::domain("exponents must be at least 2"));
    }
    if q > FERMAT_MAX_Q {
        return Err(Error::size_limit("field size", q, FERMAT_MAX_Q));
    }
    let field = FiniteField::new(q)?;
    // histogram the values of x^n and y^m, then pair a with 1 - a
    let mut x_hits = vec![0u64; q as usize];
    let mut y_hits = vec![0u64; q as usize];
    for t in field.elements() {
        x_hits[field.pow(t, n) as usize] += 1;
        y_hits[field.pow(t, m) as usize] += 1;
    }
    Ok(field
        .elements()
        .map(|a| x_hits[a as usize] * y_hits[field.sub(field.one(), a) as usize])
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn cover(d: u32, m: &[u32]) -> CyclicCoverSpec {
        CyclicCoverSpec::new(d, m).unwrap()
    }

    #[test]
    fn ramification_examples() {
        let hyper = cover(2, &[1; 6]).ramification_indices();
        assert_eq!(hyper.finite, vec![2; 6]);
        assert_eq!(hyper.infinity, None);
        let r = cover(4, &[2]).ramification_indices();
        assert_eq!((r.finite, r.infinity), (vec![2], Some(2)));
        assert_eq!(cover(3, &[1, 2]).ramification_indices().all(), vec![3, 3]);
    }

    #[test]
    fn genus_examples() {
        assert_eq!(cover(2, &[1; 6]).genus().unwrap(), 2);
        assert_eq!(cover(3, &[1, 1, 1]).genus().unwrap(), 1);
        assert_eq!(cover(2, &[1; 5]).genus().unwrap(), 2);
        assert!(matches!(cover(4, &[2, 2]).genus(), Err(Error::Domain(_))));
    }

    #[test]
    fn reduction_mod_d() {
        assert_eq!(cover(3, &[4, 5]).multiplicities(), &[1, 2]);
        assert!(CyclicCoverSpec::new(3, &[3]).is_err());
        assert!(CyclicCoverSpec::new(1, &[1]).is_err());
        assert!(CyclicCoverSpec::new(3, &[]).is_err());
    }

    #[test]
    fn genus_matches_fully_ramified_formula() {
        for d in 2..=6u32 {
            for s in 1..=8usize {
                // all m_i coprime to d, with the last one fixing d | n
                for base in (1..d).filter(|&m| gcd(d as u64, m as u64) == 1) {
                    let mut ms = vec![base; s];
                    let n: u32 = ms.iter().sum();
                    let fix = (d - n % d) % d + base;
                    let fix = fix % d;
                    if fix == 0 || gcd(d as u64, fix as u64) != 1 {
                        continue;
                    }
                    ms[s - 1] = fix;
                    let c = cover(d, &ms);
                    assert_eq!(c.total_multiplicity() % d as u64, 0);
                    let g = c.genus().unwrap() as i64;
                    assert_eq!(2 * g, (d as i64 - 1) * (s as i64 - 2), "d={d} ms={ms:?}");
                }
            }
        }
    }

    #[test]
    fn riemann_hurwitz_closure() {
        for d in 2..=6u32 {
            for a in 1..d {
                for b in 1..d {
                    for c in 1..d {
                        let spec = cover(d, &[a, b, c]);
                        let Ok(g) = spec.genus() else { continue };
                        let sum: u64 = spec
                            .ramification_indices()
                            .all()
                            .iter()
                            .map(|&e| (e as u64 - 1) * (d as u64 / e as u64))
                            .sum();
                        assert_eq!(sum % 2, 0);
                        assert_eq!(2 * g + 2 * d as u64 - 2, sum);
                        let inf = spec.profile_at_infinity();
                        assert_eq!(inf.weight(), d);
                        assert!(inf.parts().iter().all(|&x| x == inf.part(0)));
                    }
                }
            }
        }
    }

    #[test]
    fn infinity_profiles() {
        assert_eq!(profile_at_infinity(4, 8), Partition::ones(4));
        assert_eq!(profile_at_infinity(4, 6).to_string(), "2,2");
        assert_eq!(profile_at_infinity(5, 7).to_string(), "5");
    }

    fn distinct_orderings(mu: &Partition) -> usize {
        let parts = mu.parts();
        let mut seen = HashSet::new();
        for perm in crate::perm::all_permutations(parts.len()) {
            let seq: Vec<u32> = (0..parts.len()).map(|i| parts[perm.apply(i)]).collect();
            seen.insert(seq);
        }
        seen.len()
    }

    #[test]
    fn monodromy_type_counts() {
        let p = |s: &str| s.parse::<Partition>().unwrap();
        assert_eq!(monodromy_type_count(&p("2,1,1")), 3u32.into());
        assert_eq!(monodromy_type_count(&p("1,1,1")), 1u32.into());
        assert_eq!(monodromy_type_count(&p("3,2,1")), 6u32.into());
        for d in 1..=8 {
            for mu in crate::partitions::generate_partitions(d).unwrap() {
                if mu.len() <= 6 {
                    assert_eq!(monodromy_type_count(&mu), BigUint::from(distinct_orderings(&mu)));
                }
            }
        }
    }

    #[test]
    fn triangle_examples() {
        let c = triangle_classify(OrbifoldSignature::new(2, 3, 5).unwrap());
        assert_eq!(c.geometry, Geometry::Spherical);
        assert_eq!((c.group.as_deref(), c.order), (Some("A5"), Some(60)));
        let c = triangle_classify(OrbifoldSignature::new(2, 3, 6).unwrap());
        assert_eq!((c.geometry, c.group), (Geometry::Euclidean, None));
        let c = triangle_classify(OrbifoldSignature::new(2, 3, 7).unwrap());
        assert_eq!((c.geometry, c.group), (Geometry::Hyperbolic, None));
        let c = triangle_classify(OrbifoldSignature::new(7, 2, 2).unwrap());
        assert_eq!((c.group.as_deref(), c.order), (Some("D7"), Some(14)));
        let c = triangle_classify(OrbifoldSignature::new(2, 2, 2).unwrap());
        assert_eq!((c.group.as_deref(), c.order), (Some("Z2xZ2"), Some(4)));
        assert!(OrbifoldSignature::new(1, 2, 3).is_err());
        assert_eq!(
            serde_json::to_string(&triangle_classify(OrbifoldSignature::new(2, 3, 5).unwrap())).unwrap(),
            r#"{"geometry":"spherical","group":"A5","order":60}"#
        );
    }

    #[test]
    fn triangle_permutation_invariance() {
        for p in 2..=7 {
            for q in 2..=7 {
                for r in 2..=7 {
                    let base = triangle_classify(OrbifoldSignature::new(p, q, r).unwrap());
                    for [a, b, c] in [[p, r, q], [q, p, r], [q, r, p], [r, p, q], [r, q, p]] {
                        assert_eq!(triangle_classify(OrbifoldSignature::new(a, b, c).unwrap()), base);
                    }
                }
            }
        }
    }

    /// Orbits of ordered (m+1)-tuples of distinct F_p points under x ↦ ax + b.
    fn affine_orbits(p: u64, m: u64) -> u64 {
        let k = (m + 1) as usize;
        let mut seen = HashSet::new();
        let mut orbits = 0;
        let mut tuple = vec![0u64; k];
        loop {
            let distinct = (0..k).all(|i| (i + 1..k).all(|j| tuple[i] != tuple[j]));
            if distinct && !seen.contains(&tuple) {
                orbits += 1;
                for a in 1..p {
                    for b in 0..p {
                        seen.insert(tuple.iter().map(|&x| (a * x + b) % p).collect::<Vec<_>>());
                    }
                }
            }
            let mut i = 0;
            while i < k {
                tuple[i] += 1;
                if tuple[i] < p {
                    break;
                }
                tuple[i] = 0;
                i += 1;
            }
            if i == k {
                break;
            }
        }
        orbits
    }

    #[test]
    fn affine_configuration_examples() {
        let int = |n: i64| BigRational::from_integer(n.into());
        assert_eq!(count_configurations_mod_affine(5, 2).unwrap(), int(3));
        assert_eq!(count_configurations_mod_affine(3, 1).unwrap(), int(1));
        assert_eq!(count_configurations_mod_affine(7, 2).unwrap(), int(5));
        assert_eq!(count_configurations_mod_affine(3, 3).unwrap(), int(0));
        assert!(count_configurations_mod_affine(4, 1).is_err());
        assert!(count_configurations_mod_affine(5, 0).is_err());
        for p in [2u64, 3, 5, 7] {
            for m in 1..p.min(4) {
                assert_eq!(
                    count_configurations_mod_affine(p, m).unwrap(),
                    int(affine_orbits(p, m) as i64)
                );
            }
        }
        for p in [2u64, 3, 5, 7, 11, 13] {
            for m in 1..p {
                assert!(count_configurations_mod_affine(p, m).unwrap().is_integer());
            }
        }
    }

    fn fermat_scan(n: u64, m: u64, q: u32) -> u64 {
        let f = FiniteField::new(q).unwrap();
        let mut count = 0;
        for x in f.elements() {
            for y in f.elements() {
                if f.add(f.pow(y, m), f.pow(x, n)) == 1 {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn fermat_examples() {
        assert_eq!(fermat_point_count(2, 2, 3).unwrap(), 4);
        assert_eq!(fermat_point_count(2, 2, 5).unwrap(), 4);
        assert_eq!(fermat_point_count(3, 2, 2).unwrap(), 2);
        assert!(fermat_point_count(1, 2, 5).is_err());
        assert!(fermat_point_count(2, 2, 6).is_err());
        assert!(matches!(fermat_point_count(2, 2, 10_007), Err(Error::SizeLimit { .. })));
        for q in [2u32, 3, 4, 5, 8, 9, 16, 25, 27] {
            for (n, m) in [(2, 2), (3, 2), (2, 3), (4, 3), (3, 3)] {
                assert_eq!(
                    fermat_point_count(n, m, q).unwrap(),
                    fermat_scan(n, m, q),
                    "q={q} n={n} m={m}"
                );
            }
        }
    }
}
