//! Invariant theory of finite monomial groups acting on C[x_1, .., x_n]:
//! group closure, invariance checks, Molien series and a Reynolds-operator
//! rank computation that cross-checks them.
//!
//! A monomial element sends x_i ↦ ζ^{e_i} x_{π(i)}, ζ a fixed primitive s-th
//! root of unity.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{binomial, format_rational, parse_rational};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};

pub const DEFAULT_MAX_GROUP_ORDER: usize = 100_000;
pub const MAX_SERIES_DEGREE: usize = 64;
pub const MAX_REYNOLDS_MONOMIALS: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MonomialElement {
    pub perm: Vec<usize>,
    pub exponents: Vec<u32>,
}

impl MonomialElement {
    pub fn identity(n: usize) -> Self {
        MonomialElement {
            perm: (0..n).collect(),
            exponents: vec![0; n],
        }
    }

    /// `self · other` as matrices: `other` acts first.
    pub fn compose(&self, other: &Self, s: u32) -> Self {
        let n = self.perm.len();
        let mut perm = vec![0; n];
        let mut exponents = vec![0; n];
        for i in 0..n {
            let mid = other.perm[i];
            perm[i] = self.perm[mid];
            exponents[i] = (other.exponents[i] + self.exponents[mid]) % s;
        }
        MonomialElement { perm, exponents }
    }

    pub fn inverse(&self, s: u32) -> Self {
        let n = self.perm.len();
        let mut perm = vec![0; n];
        let mut exponents = vec![0; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            exponents[self.perm[i]] = (s - self.exponents[i] % s) % s;
        }
        MonomialElement { perm, exponents }
    }

    /// For each cycle of π: (length, total exponent mod s). det(I - t·g) is
    /// Π over cycles of (1 - ζ^{total} t^{length}).
    fn cycles(&self, s: u32) -> Vec<(usize, u32)> {
        let n = self.perm.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let (mut i, mut len, mut total) = (start, 0, 0u32);
            while !seen[i] {
                seen[i] = true;
                total = (total + self.exponents[i]) % s;
                i = self.perm[i];
                len += 1;
            }
            out.push((len, total));
        }
        out
    }

    /// Image of the monomial x^a: (scalar exponent of ζ, new exponent vector).
    fn act_on_monomial(&self, a: &[u32], s: u32) -> (u64, Vec<u32>) {
        let mut b = vec![0; a.len()];
        let mut phase = 0u64;
        for (i, &ai) in a.iter().enumerate() {
            b[self.perm[i]] = ai;
            phase += ai as u64 * self.exponents[i] as u64;
        }
        (phase % s as u64, b)
    }
}

/// A finite group of monomial matrices given by generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialAction {
    pub n: usize,
    pub s: u32,
    pub generators: Vec<MonomialElement>,
}

impl MonomialAction {
    pub fn new(n: usize, s: u32, generators: Vec<MonomialElement>) -> Result<Self> {
        let action = MonomialAction { n, s, generators };
        action.validate()?;
        Ok(action)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let action: MonomialAction = serde_json::from_str(text)?;
        action.validate()?;
        Ok(action)
    }

    fn validate(&self) -> Result<()> {
        if self.s == 0 {
            return Err(Error::domain("root-of-unity order s must be at least 1"));
        }
        for g in &self.generators {
            if g.perm.len() != self.n || g.exponents.len() != self.n {
                return Err(Error::domain(format!(
                    "generator {g:?} does not act on {} variables",
                    self.n
                )));
            }
            let mut seen = vec![false; self.n];
            for &x in &g.perm {
                if x >= self.n || std::mem::replace(&mut seen[x], true) {
                    return Err(Error::domain(format!("{:?} is not a permutation", g.perm)));
                }
            }
            if g.exponents.iter().any(|&e| e >= self.s) {
                return Err(Error::domain(format!("exponents must lie in 0..{}", self.s)));
            }
        }
        Ok(())
    }

    /// The group with no generators.
    pub fn trivial(n: usize) -> Self {
        MonomialAction {
            n,
            s: 1,
            generators: vec![],
        }
    }

    /// Z_s acting diagonally by x_i ↦ ζ^{w_i} x_i.
    pub fn cyclic(s: u32, weights: &[u32]) -> Result<Self> {
        let n = weights.len();
        let gen = MonomialElement {
            perm: (0..n).collect(),
            exponents: weights.iter().map(|w| w % s.max(1)).collect(),
        };
        Self::new(n, s, vec![gen])
    }

    /// Z_n cyclically permuting the variables.
    pub fn cyclic_shift(n: usize) -> Result<Self> {
        let gen = MonomialElement {
            perm: (0..n).map(|i| (i + 1) % n).collect(),
            exponents: vec![0; n],
        };
        Self::new(n, 1, vec![gen])
    }

    /// S_n permuting the variables, generated by (1 2) and (1 2 .. n).
    pub fn symmetric(n: usize) -> Result<Self> {
        if n < 2 {
            return Ok(Self::trivial(n));
        }
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(0, 1);
        let gens = vec![
            MonomialElement {
                perm: swap,
                exponents: vec![0; n],
            },
            MonomialElement {
                perm: (0..n).map(|i| (i + 1) % n).collect(),
                exponents: vec![0; n],
            },
        ];
        Self::new(n, 1, gens)
    }

    /// D_s on x_1..x_s with τ: x_j ↦ ε^j x_j and σ: x_j ↦ x_{s-j}, indices
    /// read mod s (so x_s is fixed by σ). ε is a primitive s-th root of unity.
    pub fn dihedral(s: u32) -> Result<Self> {
        if s < 2 {
            return Err(Error::domain("dihedral action needs s ≥ 2"));
        }
        let n = s as usize;
        let tau = MonomialElement {
            perm: (0..n).collect(),
            exponents: (1..=s).map(|j| j % s).collect(),
        };
        // slot j-1 holds x_j
        let sigma_perm = (1..=n).map(|j| if j == n { n - 1 } else { n - j - 1 }).collect();
        let sigma = MonomialElement {
            perm: sigma_perm,
            exponents: vec![0; n],
        };
        Self::new(n, s, vec![tau, sigma])
    }
}

/// Breadth-first closure of the generators, identity first.
pub fn generate_group(action: &MonomialAction) -> Result<Vec<MonomialElement>> {
    generate_group_bounded(action, DEFAULT_MAX_GROUP_ORDER)
}

pub fn generate_group_bounded(action: &MonomialAction, max_order: usize) -> Result<Vec<MonomialElement>> {
    let id = MonomialElement::identity(action.n);
    let mut seen: HashSet<MonomialElement> = HashSet::from([id.clone()]);
    let mut order = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for gen in &action.generators {
            let h = gen.compose(&g, action.s);
            if seen.insert(h.clone()) {
                if order.len() >= max_order {
                    return Err(Error::size_limit(
                        "group order",
                        (max_order + 1) as u64,
                        max_order as u64,
                    ));
                }
                order.push(h.clone());
                queue.push_back(h);
            }
        }
    }
    Ok(order)
}

/// A sparse polynomial with coefficients in Q[ζ]/(ζ^s - 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySparse {
    n: usize,
    s: u32,
    terms: BTreeMap<Vec<u32>, Cyclotomic>,
}

impl PolySparse {
    pub fn zero(n: usize, s: u32) -> Self {
        PolySparse {
            n,
            s,
            terms: BTreeMap::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Cyclotomic)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, coeff: Cyclotomic) {
        assert_eq!(exponents.len(), self.n);
        assert_eq!(coeff.order(), self.s);
        let entry = self
            .terms
            .entry(exponents.clone())
            .or_insert_with(|| Cyclotomic::zero(self.s));
        *entry += &coeff;
        if entry.is_zero() {
            self.terms.remove(&exponents);
        }
    }

    pub fn monomial(exponents: Vec<u32>, s: u32) -> Self {
        let mut p = Self::zero(exponents.len(), s);
        p.add_term(exponents, Cyclotomic::one(s));
        p
    }

    /// Re-expresses the coefficients over Q[ζ]/(ζ^s - 1) for a new s that is a
    /// multiple of the current one, and pads to `n` variables.
    fn lift(&self, n: usize, s: u32) -> Result<Self> {
        if n < self.n || !s.is_multiple_of(self.s) {
            return Err(Error::domain(format!(
                "cannot view a polynomial in {} variables over ζ_{} as one in {n} variables over ζ_{s}",
                self.n, self.s
            )));
        }
        let step = (s / self.s) as u64;
        let mut out = Self::zero(n, s);
        for (e, c) in &self.terms {
            let mut padded = e.clone();
            padded.resize(n, 0);
            let mut lifted = Cyclotomic::zero(s);
            for (k, a) in c.coeffs().iter().enumerate() {
                if !a.is_zero() {
                    lifted += &Cyclotomic::root_power(s, k as u64 * step).scale(a);
                }
            }
            out.add_term(padded, lifted);
        }
        Ok(out)
    }

    pub fn act(&self, g: &MonomialElement) -> Self {
        let mut out = Self::zero(self.n, self.s);
        for (a, c) in &self.terms {
            let (phase, b) = g.act_on_monomial(a, self.s);
            out.add_term(b, c.shift(phase));
        }
        out
    }

    /// Parses sums of rational multiples of monomials, e.g.
    /// `"x1^2*x2 - 1/2*x3 + 4"`. Variables are x1..xn.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut poly = Self::zero(n, 1);
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms = Vec::new();
        let mut current = String::new();
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && !current.is_empty() && !current.ends_with(['^', '*']) {
                terms.push(std::mem::take(&mut current));
            }
            current.push(ch);
        }
        terms.push(current);
        for term in terms {
            let (sign, body) = match term.strip_prefix('-') {
                Some(rest) => (-BigRational::one(), rest),
                None => (BigRational::one(), term.trim_start_matches('+')),
            };
            let mut coeff = sign;
            let mut exps = vec![0u32; n];
            for factor in body.split('*') {
                if let Some(var) = factor.strip_prefix('x') {
                    let (idx, pow) = match var.split_once('^') {
                        Some((i, p)) => (i, p),
                        None => (var, "1"),
                    };
                    let bad = || Error::Parse(format!("invalid factor {factor:?}"));
                    let idx: usize = idx.parse().map_err(|_| bad())?;
                    let pow: u32 = pow.parse().map_err(|_| bad())?;
                    if idx == 0 || idx > n {
                        return Err(Error::Parse(format!("variable x{idx} outside x1..x{n}")));
                    }
                    exps[idx - 1] += pow;
                } else {
                    coeff *= parse_rational(factor)?;
                }
            }
            poly.add_term(exps, Cyclotomic::from_rational(1, coeff));
        }
        Ok(poly)
    }
}

impl fmt::Display for PolySparse {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let coeff = match c.as_rational() {
                Some(r) => format_rational(&r),
                None => {
                    let parts: Vec<String> = c
                        .reduce()
                        .iter()
                        .enumerate()
                        .filter(|(_, a)| !a.is_zero())
                        .map(|(k, a)| format!("{}*z^{k}", format_rational(a)))
                        .collect();
                    format!("({})", parts.join(" + "))
                }
            };
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(k, &p)| {
                    if p == 1 {
                        format!("x{}", k + 1)
                    } else {
                        format!("x{}^{p}", k + 1)
                    }
                })
                .collect();
            match (coeff.as_str(), vars.is_empty()) {
                (_, true) => f.write_str(&coeff)?,
                ("1", false) => f.write_str(&vars.join("*"))?,
                _ => write!(f, "{coeff}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}

/// e_i(x_1, .., x_n).
pub fn elementary_symmetric(i: usize, n: usize) -> Result<PolySparse> {
    if i == 0 || i > n {
        return Err(Error::domain(format!("need 1 ≤ i ≤ n, got i={i}, n={n}")));
    }
    let mut poly = PolySparse::zero(n, 1);
    for mask in 0u64..(1 << n) {
        if mask.count_ones() as usize == i {
            let exps = (0..n).map(|k| (mask >> k & 1) as u32).collect();
            poly.add_term(exps, Cyclotomic::one(1));
        }
    }
    Ok(poly)
}

/// True iff every generator fixes `f` (hence the whole group does).
pub fn is_invariant(f: &PolySparse, action: &MonomialAction) -> Result<bool> {
    let s = num_integer::lcm(f.s, action.s);
    let f = f.lift(action.n, s)?;
    for g in &action.generators {
        // re-express generator exponents over the common root ζ_lcm
        let scaled = MonomialElement {
            perm: g.perm.clone(),
            exponents: g.exponents.iter().map(|&e| e * (s / action.s)).collect(),
        };
        if f.act(&scaled) != f {
            return Ok(false);
        }
    }
    Ok(true)
}

fn element_series(g: &MonomialElement, s: u32, terms: usize) -> Vec<Cyclotomic> {
    // det(I - t·g) as a polynomial in t, then invert the power series
    let mut det = vec![Cyclotomic::zero(s); terms];
    det[0] = Cyclotomic::one(s);
    for (len, total) in g.cycles(s) {
        let factor = -&Cyclotomic::root_power(s, total as u64);
        let mut next = det.clone();
        for k in len..terms {
            next[k] += &(&det[k - len] * &factor);
        }
        det = next;
    }
    invert_series(&det)
}

/// Inverse of a power series with constant term 1, truncated to its length.
fn invert_series(a: &[Cyclotomic]) -> Vec<Cyclotomic> {
    let s = a[0].order();
    let mut inv = vec![Cyclotomic::zero(s); a.len()];
    inv[0] = Cyclotomic::one(s);
    for k in 1..a.len() {
        let mut acc = Cyclotomic::zero(s);
        for j in 1..=k {
            if !a[j].is_ring_zero() {
                acc += &(&a[j] * &inv[k - j]);
            }
        }
        inv[k] = -&acc;
    }
    inv
}

fn finish_series(sum: Vec<Cyclotomic>, group_order: usize) -> Result<Vec<BigUint>> {
    let order = BigRational::from_integer(BigInt::from(group_order));
    sum.into_iter()
        .enumerate()
        .map(|(j, c)| {
            let value = c
                .as_rational()
                .map(|r| r / &order)
                .filter(|r| r.is_integer() && !r.is_negative())
                .ok_or_else(|| {
                    Error::Internal(format!("Molien coefficient at degree {j} is not a nonnegative integer"))
                })?;
            Ok(value.to_integer().magnitude().clone())
        })
        .collect()
}

/// dim C[x]^G_j for j = 0..=N, from (1/|G|) Σ_g 1/det(I - t·g).
pub fn molien_series(action: &MonomialAction, max_degree: usize) -> Result<Vec<BigUint>> {
    molien_series_bounded(action, max_degree, DEFAULT_MAX_GROUP_ORDER)
}

pub fn molien_series_bounded(action: &MonomialAction, max_degree: usize, max_order: usize) -> Result<Vec<BigUint>> {
    if max_degree > MAX_SERIES_DEGREE {
        return Err(Error::size_limit(
            "series truncation",
            max_degree as u64,
            MAX_SERIES_DEGREE as u64,
        ));
    }
    let group = generate_group_bounded(action, max_order)?;
    let terms = max_degree + 1;
    let sum = group.par_iter().map(|g| element_series(g, action.s, terms)).reduce(
        || vec![Cyclotomic::zero(action.s); terms],
        |mut acc, x| {
            for (a, b) in acc.iter_mut().zip(&x) {
                *a += b;
            }
            acc
        },
    );
    finish_series(sum, group.len())
}

/// Conjugacy classes of the generated group as (representative, size).
pub fn conjugacy_classes(action: &MonomialAction) -> Result<Vec<(MonomialElement, usize)>> {
    let group = generate_group(action)?;
    let mut assigned: HashSet<MonomialElement> = HashSet::new();
    let mut classes = Vec::new();
    for g in &group {
        if assigned.contains(g) {
            continue;
        }
        let class: HashSet<MonomialElement> = group
            .iter()
            .map(|h| h.compose(g, action.s).compose(&h.inverse(action.s), action.s))
            .collect();
        classes.push((g.clone(), class.len()));
        assigned.extend(class);
    }
    Ok(classes)
}

/// The Molien series summed class by class, n_g / det(I - t·g).
pub fn molien_series_by_classes(action: &MonomialAction, max_degree: usize) -> Result<Vec<BigUint>> {
    let classes = conjugacy_classes(action)?;
    let terms = max_degree + 1;
    let mut sum = vec![Cyclotomic::zero(action.s); terms];
    let mut order = 0;
    for (rep, size) in &classes {
        let weight = BigRational::from_integer(BigInt::from(*size));
        for (a, b) in sum.iter_mut().zip(element_series(rep, action.s, terms)) {
            *a += &b.scale(&weight);
        }
        order += size;
    }
    finish_series(sum, order)
}

fn monomials_of_degree(n: usize, degree: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, left: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if acc.len() + 1 == n {
            acc.push(left);
            out.push(acc.clone());
            acc.pop();
            return;
        }
        for k in (0..=left).rev() {
            acc.push(k);
            rec(n, left - k, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if degree == 0 {
            out.push(vec![]);
        }
        return out;
    }
    rec(n, degree, &mut Vec::new(), &mut out);
    out
}

/// dim C[x]^G_j by averaging every degree-j monomial over the group and
/// taking the rank of the images over Q(ζ_s).
pub fn invariant_dimension_bruteforce(action: &MonomialAction, degree: u32) -> Result<u64> {
    let count = binomial(action.n as u64 + degree as u64 - 1, degree as u64);
    if action.n > 0 && count > BigUint::from(MAX_REYNOLDS_MONOMIALS) {
        return Err(Error::size_limit(
            "monomial basis",
            count.to_u64().unwrap_or(u64::MAX),
            MAX_REYNOLDS_MONOMIALS,
        ));
    }
    let group = generate_group(action)?;
    let s = action.s;
    let phi = Cyclotomic::one(s).reduce().len();

    // Reynolds images are supported on a single orbit of monomials under the
    // underlying permutations, so the rank splits over orbit blocks.
    let mut blocks: HashMap<Vec<u32>, Vec<PolySparse>> = HashMap::new();
    for m in monomials_of_degree(action.n, degree) {
        let mono = PolySparse::monomial(m.clone(), s);
        let mut image = PolySparse::zero(action.n, s);
        for g in &group {
            for (e, c) in mono.act(g).terms {
                image.add_term(e, c);
            }
        }
        let key = group.iter().map(|g| g.act_on_monomial(&m, s).1).min().unwrap();
        blocks.entry(key).or_default().push(image);
    }

    let mut rank = 0usize;
    for images in blocks.values() {
        let support: Vec<Vec<u32>> = images
            .iter()
            .flat_map(|p| p.terms.keys().cloned())
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        if support.is_empty() {
            continue;
        }
        // expand each image and its multiples by ζ^k, k < φ(s), into rational
        // coordinates; the Q-rank is φ(s) times the Q(ζ)-rank
        let mut rows: Vec<Vec<BigRational>> = Vec::new();
        for p in images {
            for k in 0..phi {
                let mut row = Vec::with_capacity(support.len() * phi);
                for mono in &support {
                    match p.terms.get(mono) {
                        Some(c) => row.extend(c.shift(k as u64).reduce()),
                        None => row.extend(std::iter::repeat_n(BigRational::zero(), phi)),
                    }
                }
                rows.push(row);
            }
        }
        let r = rational_rank(rows);
        if !r.is_multiple_of(phi) {
            return Err(Error::Internal(format!(
                "rank {r} over Q is not a multiple of φ(s) = {phi}"
            )));
        }
        rank += r / phi;
    }
    Ok(rank as u64)
}

fn rational_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let lead = rows[rank][col].clone();
        for c in col..cols {
            rows[rank][c] = &rows[rank][c] / &lead;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..cols {
                    let delta = &factor * &rows[rank][c];
                    rows[r][c] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}
