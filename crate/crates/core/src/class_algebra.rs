//! The center of the rational group algebra of S_d, in the basis of
//! conjugacy-class sums.
//!
//! Products are computed by the representative method: fix one permutation
//! of the first class, multiply it by every element of the second class and
//! histogram the resulting cycle types. Structure constants are memoized per
//! unordered pair of classes.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::arith::{factorial, format_rational, parse_rational, to_rational};
use crate::characters::{character_value, dimension};
use crate::error::{Error, Result};
use crate::partitions::{class_size, generate_partitions_bounded, Partition};
use crate::perm::{all_permutations, Perm};

/// Largest degree for which products are computed by explicit enumeration.
pub const CLASS_ALGEBRA_MAX_DEGREE: u32 = 9;

type ClassLists = HashMap<Partition, Vec<Perm>>;
type StructureConstants = Vec<(Partition, BigUint)>;

static CLASS_LISTS: LazyLock<RwLock<HashMap<u32, Arc<ClassLists>>>> = LazyLock::new(Default::default);
static PRODUCTS: LazyLock<RwLock<HashMap<(Partition, Partition), Arc<StructureConstants>>>> =
    LazyLock::new(Default::default);

pub(crate) fn class_lists(d: u32) -> Arc<ClassLists> {
    if let Some(lists) = CLASS_LISTS.read().unwrap().get(&d) {
        return lists.clone();
    }
    let mut lists: ClassLists = HashMap::new();
    for p in all_permutations(d as usize) {
        lists.entry(p.cycle_type()).or_default().push(p);
    }
    let lists = Arc::new(lists);
    // concurrent builders produce identical maps; last write wins harmlessly
    CLASS_LISTS.write().unwrap().insert(d, lists.clone());
    lists
}

/// Structure constants c with C_a C_b = Σ_ρ c_ρ C_ρ.
pub fn structure_constants(a: &Partition, b: &Partition) -> Result<Arc<StructureConstants>> {
    let d = a.weight();
    if b.weight() != d {
        return Err(Error::domain(format!("classes ({a}) and ({b}) live in different S_d")));
    }
    if d > CLASS_ALGEBRA_MAX_DEGREE {
        return Err(Error::size_limit("class algebra degree", d, CLASS_ALGEBRA_MAX_DEGREE));
    }
    let key = if a <= b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    if let Some(c) = PRODUCTS.read().unwrap().get(&key) {
        return Ok(c.clone());
    }
    let lists = class_lists(d);
    let sigma = lists[&key.0][0];
    let mut histogram: BTreeMap<Partition, u64> = BTreeMap::new();
    for tau in &lists[&key.1] {
        *histogram.entry(sigma.compose(tau).cycle_type()).or_default() += 1;
    }
    let first = class_size(&key.0);
    let mut constants = Vec::with_capacity(histogram.len());
    for (rho, count) in histogram {
        let (q, r) = (&first * count).div_rem(&class_size(&rho));
        if !r.is_zero() {
            return Err(Error::Internal(format!(
                "structure constant of ({rho}) in C({})·C({}) is not integral",
                key.0, key.1
            )));
        }
        constants.push((rho, q));
    }
    let constants = Arc::new(constants);
    PRODUCTS.write().unwrap().insert(key, constants.clone());
    Ok(constants)
}

/// An element of the class algebra Z(QS_d): a sparse rational combination of
/// class sums. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassAlgebraElement {
    d: u32,
    coeffs: BTreeMap<Partition, BigRational>,
}

impl ClassAlgebraElement {
    pub fn zero(d: u32) -> Self {
        ClassAlgebraElement {
            d,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn identity(d: u32) -> Self {
        Self::class_sum(&Partition::ones(d))
    }

    /// The sum of all permutations of cycle type η.
    pub fn class_sum(eta: &Partition) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(eta.clone(), BigRational::one());
        ClassAlgebraElement {
            d: eta.weight(),
            coeffs,
        }
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn coefficient(&self, class: &Partition) -> BigRational {
        self.coeffs.get(class).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `c · C_class`.
    pub fn add_term(&mut self, class: Partition, c: BigRational) -> Result<()> {
        if class.weight() != self.d {
            return Err(Error::domain(format!(
                "class ({class}) is not a partition of {}",
                self.d
            )));
        }
        let entry = self.coeffs.entry(class.clone()).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&class);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.add_term(k.clone(), v.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.d);
        }
        ClassAlgebraElement {
            d: self.d,
            coeffs: self.coeffs.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut acc: BTreeMap<Partition, BigRational> = BTreeMap::new();
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                let weight = ca * cb;
                for (rho, c) in structure_constants(a, b)?.iter() {
                    *acc.entry(rho.clone()).or_insert_with(BigRational::zero) +=
                        &weight * BigRational::from_integer(BigInt::from(c.clone()));
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(ClassAlgebraElement { d: self.d, coeffs: acc })
    }

    /// The coefficient of the identity class (1^d).
    pub fn identity_coefficient(&self) -> BigRational {
        self.coefficient(&Partition::ones(self.d))
    }

    /// Parses the JSON map form `{"3,1,1": "p/q", ...}` produced by `Serialize`.
    pub fn from_json_map(d: u32, map: &BTreeMap<String, String>) -> Result<Self> {
        let mut out = Self::zero(d);
        for (k, v) in map {
            out.add_term(k.parse()?, parse_rational(v)?)?;
        }
        Ok(out)
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.d != other.d {
            return Err(Error::domain(format!(
                "class algebra elements of degrees {} and {}",
                self.d, other.d
            )));
        }
        Ok(())
    }
}

impl Serialize for ClassAlgebraElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.coeffs.len()))?;
        for (k, v) in &self.coeffs {
            map.serialize_entry(&k.to_string(), &format_rational(v))?;
        }
        map.end()
    }
}

/// Π_i C_{η^i} in Z(QS_d); the empty product is the identity of degree `d`.
pub fn product_of_class_sums(d: u32, profiles: &[Partition]) -> Result<ClassAlgebraElement> {
    profiles.iter().try_fold(ClassAlgebraElement::identity(d), |acc, eta| {
        acc.multiply(&ClassAlgebraElement::class_sum(eta))
    })
}

/// (1/d!) [C_(1^d)] Π_i C_{η^i}, evaluated through characters:
/// Σ_λ (dim λ / d!)² Π_i |C_{η^i}| χ^λ(η^i) / dim λ.
pub fn frobenius_product_coefficient(profiles: &[Partition]) -> Result<BigRational> {
    let Some(first) = profiles.first() else {
        return Err(Error::domain("profile list must be nonempty"));
    };
    let d = first.weight();
    if profiles.iter().any(|eta| eta.weight() != d) {
        return Err(Error::domain("profiles have mixed degrees"));
    }
    let order = to_rational(&factorial(d));
    let sizes: Vec<BigRational> = profiles.iter().map(|eta| to_rational(&class_size(eta))).collect();
    let mut total = BigRational::zero();
    for lambda in generate_partitions_bounded(d, d)? {
        let dim = to_rational(&dimension(&lambda));
        let ratio = &dim / &order;
        let mut term = &ratio * &ratio;
        for (eta, size) in profiles.iter().zip(&sizes) {
            let chi = character_value(&lambda, eta)?;
            if chi.is_zero() {
                term = BigRational::zero();
                break;
            }
            term = term * size * BigRational::from_integer(chi) / &dim;
        }
        total += term;
    }
    Ok(total)
}
