//! Hurwitz numbers of the projective line.
//!
//! Disconnected numbers are the identity-class bracket (1/d!)[C_(1^d)] Π C_{η^i}.
//! Connected numbers are extracted by a rooted inclusion–exclusion: split off
//! the orbit containing sheet 1, whose restricted monodromy has cycle types
//! that are sub-multisets of the original profiles.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{factorial, format_rational, to_rational};
use crate::class_algebra::{frobenius_product_coefficient, product_of_class_sums, CLASS_ALGEBRA_MAX_DEGREE};
use crate::error::{Error, Result};
use crate::partitions::{class_size, Partition};
use crate::perm::{is_transitive, Perm};

/// Largest degree the exhaustive monodromy enumeration accepts by default.
pub const DEFAULT_ORACLE_MAX_DEGREE: u32 = 5;
/// Default cap on the number of (r-1)-prefixes the oracle may enumerate.
pub const DEFAULT_ORACLE_MAX_TUPLES: u128 = 50_000_000;

/// Degree `d` coverings of P¹ with ramification profile `profiles[i]` over
/// the i-th branch point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoveringProblem {
    d: u32,
    profiles: Vec<Partition>,
}

impl CoveringProblem {
    pub fn new(d: u32, profiles: Vec<Partition>) -> Result<Self> {
        if d == 0 {
            return Err(Error::domain("covering degree must be at least 1"));
        }
        if let Some(bad) = profiles.iter().find(|p| p.weight() != d) {
            return Err(Error::domain(format!("profile ({bad}) is not a partition of {d}")));
        }
        Ok(CoveringProblem { d, profiles })
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn profiles(&self) -> &[Partition] {
        &self.profiles
    }

    /// Profiles with the unramified ones, (1^d), removed.
    pub fn ramified_profiles(&self) -> Vec<Partition> {
        self.profiles.iter().filter(|p| !p.is_trivial()).cloned().collect()
    }

    /// Total ramification Σ_i (d - ℓ(η^i)).
    pub fn ramification(&self) -> u64 {
        self.profiles.iter().map(|p| (self.d as usize - p.len()) as u64).sum()
    }

    /// Genus of a connected covering from Riemann–Hurwitz,
    /// 2 - 2g = 2d - Σ_i (d - ℓ(η^i)); `None` when no nonnegative integer fits.
    pub fn genus(&self) -> Option<u64> {
        let twice = self.ramification() as i64 - 2 * self.d as i64 + 2;
        (twice >= 0 && twice % 2 == 0).then_some(twice as u64 / 2)
    }
}

/// Which route evaluates the identity-class bracket.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Explicit products of class sums in Z(QS_d).
    ClassAlgebra,
    /// The character sum over irreducible representations.
    Frobenius,
}

/// The disconnected Hurwitz number, through the class algebra when d is small
/// enough for explicit products and through characters beyond that.
pub fn disconnected_hurwitz(problem: &CoveringProblem) -> Result<BigRational> {
    let method = if problem.d <= CLASS_ALGEBRA_MAX_DEGREE {
        Method::ClassAlgebra
    } else {
        Method::Frobenius
    };
    disconnected_hurwitz_with(problem, method)
}

pub fn disconnected_hurwitz_with(problem: &CoveringProblem, method: Method) -> Result<BigRational> {
    disconnected(problem.d, &problem.ramified_profiles(), method)
}

fn disconnected(d: u32, profiles: &[Partition], method: Method) -> Result<BigRational> {
    if d == 0 {
        return Ok(BigRational::one());
    }
    // a product of permutations is even, so odd total ramification is impossible
    if profiles.iter().map(|p| d as usize - p.len()).sum::<usize>() % 2 == 1 {
        return Ok(BigRational::zero());
    }
    if profiles.is_empty() {
        return Ok(BigRational::one() / to_rational(&factorial(d)));
    }
    match method {
        Method::ClassAlgebra => {
            let bracket = product_of_class_sums(d, profiles)?.identity_coefficient();
            Ok(bracket / to_rational(&factorial(d)))
        }
        Method::Frobenius => frobenius_product_coefficient(profiles),
    }
}

/// The connected Hurwitz number: transitive monodromy tuples divided by d!.
pub fn connected_hurwitz(problem: &CoveringProblem) -> Result<BigRational> {
    connected_hurwitz_with(problem, Method::Frobenius)
}

pub fn connected_hurwitz_with(problem: &CoveringProblem, method: Method) -> Result<BigRational> {
    let mut extractor = ConnectedExtractor {
        method,
        connected: HashMap::new(),
        disconnected: HashMap::new(),
    };
    extractor.connected(problem.d, normalize(problem.ramified_profiles()))
}

fn normalize(mut profiles: Vec<Partition>) -> Vec<Partition> {
    profiles.retain(|p| !p.is_trivial());
    profiles.sort();
    profiles
}

type Key = (u32, Vec<Partition>);

struct ConnectedExtractor {
    method: Method,
    connected: HashMap<Key, BigRational>,
    disconnected: HashMap<Key, BigRational>,
}

impl ConnectedExtractor {
    fn disconnected(&mut self, d: u32, profiles: Vec<Partition>) -> Result<BigRational> {
        let key = (d, profiles);
        if let Some(v) = self.disconnected.get(&key) {
            return Ok(v.clone());
        }
        let v = disconnected(d, &key.1, self.method)?;
        self.disconnected.insert(key, v.clone());
        Ok(v)
    }

    // H(d; η) = Σ_{k, β} (k/d) H_c(k; β) H(d-k; η∖β), where β^i ⊆ η^i has
    // weight k and is the cycle type on the orbit of sheet 1.
    fn connected(&mut self, d: u32, profiles: Vec<Partition>) -> Result<BigRational> {
        let ramification: u64 = profiles.iter().map(|p| (d as usize - p.len()) as u64).sum();
        // a transitive tuple needs 2d-2 ≤ Σ ramification with matching parity
        if ramification % 2 == 1 || ramification + 2 < 2 * d as u64 {
            return Ok(BigRational::zero());
        }
        let key = (d, profiles);
        if let Some(v) = self.connected.get(&key) {
            return Ok(v.clone());
        }
        let profiles = key.1.clone();
        let mut value = self.disconnected(d, profiles.clone())?;
        for k in 1..d {
            let options: Vec<Vec<Partition>> = profiles.iter().map(|p| p.submultisets_of_weight(k)).collect();
            if options.iter().any(Vec::is_empty) {
                continue;
            }
            let factor = BigRational::new(BigInt::from(k), BigInt::from(d));
            let mut choice = vec![0usize; profiles.len()];
            loop {
                let sub: Vec<Partition> = options.iter().zip(&choice).map(|(o, &c)| o[c].clone()).collect();
                let rest: Vec<Partition> = profiles
                    .iter()
                    .zip(&sub)
                    .map(|(p, s)| p.multiset_difference(s))
                    .collect::<Result<_>>()?;
                let hc = self.connected(k, normalize(sub))?;
                if !hc.is_zero() {
                    let h = self.disconnected(d - k, normalize(rest))?;
                    value -= &factor * hc * h;
                }
                // odometer over the per-profile choices
                let mut i = 0;
                while i < choice.len() {
                    choice[i] += 1;
                    if choice[i] < options[i].len() {
                        break;
                    }
                    choice[i] = 0;
                    i += 1;
                }
                if i == choice.len() {
                    break;
                }
            }
        }
        self.connected.insert(key, value.clone());
        Ok(value)
    }
}

/// Bounds for [`monodromy_oracle_bounded`].
#[derive(Debug, Clone, Copy)]
pub struct OracleBudget {
    pub max_degree: u32,
    pub max_tuples: u128,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_degree: DEFAULT_ORACLE_MAX_DEGREE,
            max_tuples: DEFAULT_ORACLE_MAX_TUPLES,
        }
    }
}

/// (1/d!) · #{(s_1..s_r) : type(s_i) = η^i, s_1⋯s_r = 1}, restricted to
/// transitive tuples when `connected_only`. Exhaustive over S_d.
pub fn monodromy_oracle(problem: &CoveringProblem, connected_only: bool) -> Result<BigRational> {
    monodromy_oracle_bounded(problem, connected_only, OracleBudget::default())
}

pub fn monodromy_oracle_bounded(
    problem: &CoveringProblem,
    connected_only: bool,
    budget: OracleBudget,
) -> Result<BigRational> {
    let d = problem.d;
    if d > budget.max_degree {
        return Err(Error::size_limit("monodromy oracle degree", d, budget.max_degree));
    }
    let profiles = problem.ramified_profiles();
    let order = to_rational(&factorial(d));
    let Some((last, prefix)) = profiles.split_last() else {
        let transitive = d == 1;
        let count = if connected_only && !transitive { 0 } else { 1 };
        return Ok(BigRational::from_integer(count.into()) / order);
    };
    let work: BigUint = prefix.iter().map(class_size).product();
    if work > BigUint::from(budget.max_tuples) {
        return Err(Error::SizeLimit {
            what: "monodromy oracle tuples",
            requested: u128::try_from(work).unwrap_or(u128::MAX),
            limit: budget.max_tuples,
        });
    }
    let lists = crate::class_algebra::class_lists(d);
    let classes: Vec<&[Perm]> = prefix.iter().map(|p| lists[p].as_slice()).collect();
    let n = d as usize;

    let count_from = |first: Option<&Perm>| -> u64 {
        let mut chosen: Vec<Perm> = Vec::with_capacity(profiles.len());
        let start = match first {
            Some(p) => {
                chosen.push(*p);
                *p
            }
            None => Perm::identity(n),
        };
        let depth = chosen.len();
        count_tuples(&classes[depth..], start, last, n, connected_only, &mut chosen)
    };

    let total: u64 = match classes.first() {
        Some(first) => first.par_iter().map(|p| count_from(Some(p))).sum(),
        None => count_from(None),
    };
    Ok(BigRational::from_integer(total.into()) / order)
}

fn count_tuples(
    classes: &[&[Perm]],
    product: Perm,
    last: &Partition,
    n: usize,
    connected_only: bool,
    chosen: &mut Vec<Perm>,
) -> u64 {
    match classes.split_first() {
        None => {
            let closing = product.inverse();
            if closing.cycle_type() != *last {
                return 0;
            }
            if connected_only {
                chosen.push(closing);
                let ok = is_transitive(n, chosen);
                chosen.pop();
                if !ok {
                    return 0;
                }
            }
            1
        }
        Some((class, rest)) => {
            let mut total = 0;
            for s in class.iter() {
                chosen.push(*s);
                total += count_tuples(rest, product.compose(s), last, n, connected_only, chosen);
                chosen.pop();
            }
            total
        }
    }
}

/// Number of further simple branch points, r = d + m + 2(g - 1), of a genus g
/// degree d covering whose profile over ∞ has m parts.
pub fn simple_branch_count(d: u32, m: u32, g: u32) -> Result<u64> {
    if d == 0 || m == 0 || m > d {
        return Err(Error::domain(format!("need d ≥ 1 and 1 ≤ m ≤ d, got d={d}, m={m}")));
    }
    let r = d as i64 + m as i64 + 2 * (g as i64 - 1);
    u64::try_from(r).map_err(|_| Error::domain(format!("no covering with d={d}, m={m}, g={g}: r={r} < 0")))
}

/// The genus-0 single Hurwitz number (2d-2)!/d! · d^{d-3}.
pub fn genus0_closed_form(d: u32) -> Result<BigRational> {
    if d == 0 {
        return Err(Error::domain("degree must be at least 1"));
    }
    let base = to_rational(&factorial(2 * d - 2)) / to_rational(&factorial(d));
    let power = BigRational::from_integer(BigInt::from(d)).pow(d as i32 - 3);
    Ok(base * power)
}

/// JSON report for one covering problem.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HurwitzReport {
    pub d: u32,
    pub profiles: Vec<Partition>,
    pub genus: Option<u64>,
    pub disconnected: String,
    pub connected: String,
}

impl HurwitzReport {
    pub fn new(problem: &CoveringProblem, disconnected: &BigRational, connected: &BigRational) -> Self {
        HurwitzReport {
            d: problem.d,
            profiles: problem.profiles.clone(),
            genus: problem.genus(),
            disconnected: format_rational(disconnected),
            connected: format_rational(connected),
        }
    }
}
