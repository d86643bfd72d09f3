//! Irreducible characters of the symmetric group and the coefficient
//! families built from them.
//!
//! Character values use the Murnaghan–Nakayama rule on beta-sets (abacus
//! positions), memoized process-wide. Littlewood–Richardson coefficients are
//! counted directly as tableaux; Kronecker coefficients are character inner
//! products.

use std::collections::HashMap;
use std::sync::{LazyLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::factorial;
use crate::error::{Error, Result};
use crate::partitions::{class_size, generate_partitions_bounded, Partition};

/// Default cap on `d` for materializing a full [`CharacterTable`] (p(20) = 627).
pub const DEFAULT_TABLE_MAX_DEGREE: u32 = 20;

static CHARACTER_CACHE: LazyLock<RwLock<HashMap<(Partition, Partition), BigInt>>> = LazyLock::new(Default::default);

/// χ^λ(μ), the value of the irreducible character λ on the class μ.
pub fn character_value(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    if lambda.weight() != mu.weight() {
        return Err(Error::domain(format!(
            "character χ^({lambda}) evaluated on class ({mu}) of different weight"
        )));
    }
    Ok(murnaghan_nakayama(lambda, mu.parts()))
}

fn murnaghan_nakayama(lambda: &Partition, mu: &[u32]) -> BigInt {
    let Some((&strip, rest)) = mu.split_first() else {
        return BigInt::one();
    };
    // one-row shapes carry the trivial character
    if lambda.len() == 1 {
        return BigInt::one();
    }
    let key = (lambda.clone(), Partition::from_sorted(mu.to_vec()));
    if let Some(v) = CHARACTER_CACHE.read().unwrap().get(&key) {
        return v.clone();
    }

    let len = lambda.len();
    let beta: Vec<u32> = (0..len).map(|i| lambda.part(i) + (len - 1 - i) as u32).collect();
    let mut total = BigInt::zero();
    for (i, &b) in beta.iter().enumerate() {
        if b < strip {
            continue;
        }
        let target = b - strip;
        if beta.contains(&target) {
            continue;
        }
        let height = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[i] = target;
        let shape = shape_from_beta(moved);
        let value = murnaghan_nakayama(&shape, rest);
        if height % 2 == 0 {
            total += value;
        } else {
            total -= value;
        }
    }
    CHARACTER_CACHE.write().unwrap().insert(key, total.clone());
    total
}

fn shape_from_beta(mut beta: Vec<u32>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let len = beta.len();
    let parts = beta
        .iter()
        .enumerate()
        .map(|(i, &b)| b - (len - 1 - i) as u32)
        .filter(|&p| p > 0)
        .collect();
    Partition::from_sorted(parts)
}

/// Hook length formula: d! / Π hooks.
pub fn dimension(lambda: &Partition) -> BigUint {
    let conj = lambda.conjugate();
    let mut hooks = BigUint::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row as usize {
            let arm = row - j as u32 - 1;
            let leg = conj.part(j) - i as u32 - 1;
            hooks *= arm + leg + 1;
        }
    }
    factorial(lambda.weight()) / hooks
}

/// Number of LR tableaux of shape η/λ and content μ: semistandard fillings
/// whose row-reverse reading word (right to left, top to bottom) is a lattice
/// word. Inputs of mismatched size or non-nested shapes give 0.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, eta: &Partition) -> u64 {
    if lambda.weight() + mu.weight() != eta.weight() || !eta.contains(lambda) {
        return 0;
    }
    let rows = eta.len();
    // cells of the skew shape in reading order
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|r| {
            (lambda.part(r) as usize..eta.part(r) as usize)
                .rev()
                .map(move |c| (r, c))
        })
        .collect();
    let mut grid: Vec<Vec<u32>> = (0..rows).map(|r| vec![0; eta.part(r) as usize]).collect();
    let mut counts = vec![0u32; mu.len() + 1];
    let mut found = 0u64;
    fill_lr(0, &cells, lambda, mu, &mut grid, &mut counts, &mut found);
    found
}

fn fill_lr(
    at: usize,
    cells: &[(usize, usize)],
    lambda: &Partition,
    mu: &Partition,
    grid: &mut [Vec<u32>],
    counts: &mut [u32],
    found: &mut u64,
) {
    let Some(&(r, c)) = cells.get(at) else {
        *found += 1;
        return;
    };
    // right neighbour was filled earlier in the reading order
    let max = if c + 1 < grid[r].len() {
        grid[r][c + 1]
    } else {
        mu.len() as u32
    };
    let min = if r > 0 && c >= lambda.part(r - 1) as usize {
        grid[r - 1][c] + 1
    } else {
        1
    };
    for v in min..=max {
        let vi = v as usize;
        if counts[vi] >= mu.part(vi - 1) {
            continue;
        }
        if vi > 1 && counts[vi - 1] < counts[vi] + 1 {
            continue;
        }
        counts[vi] += 1;
        grid[r][c] = v;
        fill_lr(at + 1, cells, lambda, mu, grid, counts, found);
        counts[vi] -= 1;
    }
    grid[r][c] = 0;
}

/// g_{λμν} = (1/d!) Σ_ρ |C_ρ| χ^λ(ρ) χ^μ(ρ) χ^ν(ρ).
pub fn kronecker_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigUint> {
    let d = lambda.weight();
    if mu.weight() != d || nu.weight() != d {
        return Err(Error::domain(
            "Kronecker coefficient needs three partitions of the same weight",
        ));
    }
    let mut sum = BigInt::zero();
    for rho in generate_partitions_bounded(d, d)? {
        let term = character_value(lambda, &rho)? * character_value(mu, &rho)? * character_value(nu, &rho)?;
        if !term.is_zero() {
            sum += BigInt::from(class_size(&rho)) * term;
        }
    }
    let (q, r) = sum.div_rem(&BigInt::from(factorial(d)));
    if !r.is_zero() || q.is_negative() {
        return Err(Error::Internal(format!(
            "Kronecker sum for ({lambda}),({mu}),({nu}) is not a nonnegative integer"
        )));
    }
    Ok(q.magnitude().clone())
}

/// The full character table of S_d, rows and columns in reverse-lex order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTable {
    pub d: u32,
    pub irreps: Vec<Partition>,
    pub classes: Vec<Partition>,
    #[serde(serialize_with = "ser_matrix", deserialize_with = "de_matrix")]
    pub values: Vec<Vec<BigInt>>,
}

impl CharacterTable {
    pub fn new(d: u32) -> Result<Self> {
        Self::new_bounded(d, DEFAULT_TABLE_MAX_DEGREE)
    }

    pub fn new_bounded(d: u32, max_degree: u32) -> Result<Self> {
        let labels = generate_partitions_bounded(d, max_degree)?;
        let values = labels
            .iter()
            .map(|lam| labels.iter().map(|mu| murnaghan_nakayama(lam, mu.parts())).collect())
            .collect();
        Ok(CharacterTable {
            d,
            irreps: labels.clone(),
            classes: labels,
            values,
        })
    }

    pub fn value(&self, irrep: usize, class: usize) -> &BigInt {
        &self.values[irrep][class]
    }
}

// Entries are written as JSON integers when they fit in i64, otherwise as
// decimal strings.
fn ser_matrix<S: Serializer>(m: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
    let rows: Vec<Vec<serde_json::Value>> = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| match v.to_i64() {
                    Some(x) => serde_json::Value::from(x),
                    None => serde_json::Value::from(v.to_string()),
                })
                .collect()
        })
        .collect();
    rows.serialize(s)
}

fn de_matrix<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<BigInt>>, D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Entry {
        Int(i64),
        Text(String),
    }
    let rows = Vec::<Vec<Entry>>::deserialize(d)?;
    rows.into_iter()
        .map(|row| {
            row.into_iter()
                .map(|e| match e {
                    Entry::Int(x) => Ok(BigInt::from(x)),
                    Entry::Text(s) => s.parse().map_err(serde::de::Error::custom),
                })
                .collect()
        })
        .collect()
}
