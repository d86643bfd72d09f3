//! Brute-force oracles shared by the integration tests. None of them call the
//! routines they are used to check.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet};

use hurwitz::finite_field::FiniteField;
use hurwitz::partitions::generate_partitions;
use hurwitz::perm::{all_permutations, Perm};
use hurwitz::Partition;
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::Rng;

pub fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

/// Some permutation with cycle type μ.
pub fn representative(mu: &Partition) -> Perm {
    let d = mu.weight() as usize;
    let mut img = vec![0usize; d];
    let mut start = 0;
    for &len in mu.parts() {
        let len = len as usize;
        for i in 0..len {
            img[start + i] = start + (i + 1) % len;
        }
        start += len;
    }
    Perm::from_images(&img).unwrap()
}

/// Number of row-tabloids of shape μ fixed by σ.
pub fn tabloid_trace(mu: &Partition, sigma: &Perm) -> i64 {
    let d = mu.weight() as usize;
    let mut rows = vec![0usize; d];
    let mut room: Vec<u32> = mu.parts().to_vec();
    fn rec(i: usize, d: usize, rows: &mut [usize], room: &mut [u32], sigma: &Perm) -> i64 {
        if i == d {
            let fixed = (0..d).all(|x| rows[sigma.apply(x)] == rows[x]);
            return fixed as i64;
        }
        let mut total = 0;
        for r in 0..room.len() {
            if room[r] > 0 {
                room[r] -= 1;
                rows[i] = r;
                total += rec(i + 1, d, rows, room, sigma);
                room[r] += 1;
            }
        }
        total
    }
    rec(0, d, &mut rows, &mut room, sigma)
}

/// Semistandard tableaux of shape λ with entries in 1..=max, as content vectors.
pub fn ssyt_contents(lambda: &Partition, max: usize) -> Vec<Vec<u32>> {
    let cells: Vec<(usize, usize)> = lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut grid = vec![vec![0usize; lambda.part(0) as usize]; lambda.len()];
    let mut out = Vec::new();
    fn rec(k: usize, cells: &[(usize, usize)], grid: &mut [Vec<usize>], max: usize, out: &mut Vec<Vec<u32>>) {
        if k == cells.len() {
            let mut content = vec![0u32; max];
            for row in grid.iter() {
                for &x in row.iter().filter(|&&x| x > 0) {
                    content[x - 1] += 1;
                }
            }
            out.push(content);
            return;
        }
        let (r, c) = cells[k];
        let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        for x in lo_row.max(lo_col)..=max {
            grid[r][c] = x;
            rec(k + 1, cells, grid, max, out);
        }
        grid[r][c] = 0;
    }
    if lambda.is_empty() {
        return vec![vec![0; max]];
    }
    rec(0, &cells, &mut grid, max, &mut out);
    out
}

pub fn kostka(lambda: &Partition, mu: &Partition) -> i64 {
    ssyt_contents(lambda, mu.len())
        .iter()
        .filter(|c| c.as_slice() == mu.parts())
        .count() as i64
}

/// Character table of S_d from permutation characters of tabloid modules,
/// inverting the unitriangular Kostka matrix: π^μ = Σ_λ K_{λμ} χ^λ.
/// Rows and columns follow `generate_partitions(d)`.
pub fn oracle_character_table(d: u32) -> Vec<Vec<BigInt>> {
    let labels = generate_partitions(d).unwrap();
    let reps: Vec<Perm> = labels.iter().map(representative).collect();
    let n = labels.len();
    let mut chi: Vec<Vec<i64>> = vec![vec![0; n]; n];
    // reverse-lex order refines dominance, so earlier rows are the larger shapes
    for m in 0..n {
        let mut row: Vec<i64> = reps.iter().map(|s| tabloid_trace(&labels[m], s)).collect();
        for l in 0..m {
            let k = kostka(&labels[l], &labels[m]);
            if k != 0 {
                for c in 0..n {
                    row[c] -= k * chi[l][c];
                }
            }
        }
        chi[m] = row;
    }
    chi.into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect()
}

/// Polynomial in a fixed number of variables, exponent vector -> coefficient.
pub type Poly = BTreeMap<Vec<u32>, i64>;

pub fn schur_polynomial(lambda: &Partition, vars: usize) -> Poly {
    let mut poly = Poly::new();
    for content in ssyt_contents(lambda, vars) {
        *poly.entry(content).or_default() += 1;
    }
    poly
}

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Schur expansion of a symmetric polynomial by peeling off the
/// lexicographically largest monomial, which is always a partition.
pub fn schur_expand(mut poly: Poly, vars: usize) -> BTreeMap<Partition, i64> {
    let mut out = BTreeMap::new();
    while let Some((top, &c)) = poly.iter().next_back() {
        let shape = Partition::new(top.iter().copied().filter(|&x| x > 0).collect::<Vec<_>>()).unwrap();
        for (e, x) in schur_polynomial(&shape, vars) {
            *poly.entry(e).or_default() -= c * x;
        }
        poly.retain(|_, x| *x != 0);
        out.insert(shape, c);
    }
    out
}

/// Orbits of ordered (m+1)-tuples of distinct points of F_p under x ↦ ax + b.
pub fn affine_orbits(p: u64, m: u64) -> u64 {
    let k = (m + 1) as usize;
    let mut tuples = Vec::new();
    fn rec(p: u64, k: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in 0..p {
            if !cur.contains(&x) {
                cur.push(x);
                rec(p, k, cur, out);
                cur.pop();
            }
        }
    }
    rec(p, k, &mut Vec::new(), &mut tuples);
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut orbits = 0;
    for t in &tuples {
        if seen.contains(t) {
            continue;
        }
        orbits += 1;
        for a in 1..p {
            for b in 0..p {
                seen.insert(t.iter().map(|x| (a * x + b) % p).collect());
            }
        }
    }
    orbits
}

/// #{(x, y) ∈ F_q² : y^m + x^n = 1} by scanning every pair.
pub fn fermat_scan(n: u64, m: u64, q: u32) -> u64 {
    let f = FiniteField::new(q).unwrap();
    let mut count = 0;
    for x in f.elements() {
        let xn = f.pow(x, n);
        for y in f.elements() {
            if f.add(f.pow(y, m), xn) == f.one() {
                count += 1;
            }
        }
    }
    count
}

/// Coefficients of Π_{k=1}^{n} 1/(1 - t^k) up to t^terms.
pub fn partition_product_series(n: usize, terms: usize) -> Vec<u64> {
    let mut series = vec![0u64; terms + 1];
    series[0] = 1;
    for k in 1..=n {
        for j in k..=terms {
            series[j] += series[j - k];
        }
    }
    series
}

pub fn random_profiles(rng: &mut StdRng, d: u32, r: usize) -> Vec<Partition> {
    let all = generate_partitions(d).unwrap();
    (0..r).map(|_| all[rng.gen_range(0..all.len())].clone()).collect()
}

/// Σ_{σ ∈ S_d} χ(σ)ψ(σ)φ(σ) / d! with characters from the tabloid oracle,
/// summed over every permutation rather than over classes.
pub fn oracle_kronecker(d: u32, table: &[Vec<BigInt>], i: usize, j: usize, k: usize) -> BigInt {
    let labels = generate_partitions(d).unwrap();
    let mut total = BigInt::from(0);
    let mut count = BigInt::from(0);
    for sigma in all_permutations(d as usize) {
        let c = labels.iter().position(|l| *l == sigma.cycle_type()).unwrap();
        total += &table[i][c] * &table[j][c] * &table[k][c];
        count += 1;
    }
    total / count
}
