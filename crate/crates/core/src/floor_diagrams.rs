//! Labelled floor diagrams of plane curves and their multiplicities.
//!
//! Vertices (floors) are 1..d in their fixed linear order; an edge (u, v, w)
//! runs from u to v > u with weight w. The divergence of v is its outgoing
//! weight minus its incoming weight and must be at most 1.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::arith::binomial;
use crate::error::{Error, Result};

pub const MAX_FLOOR_DEGREE: u32 = 6;
pub const MAX_KONTSEVICH_DEGREE: u32 = 8;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FloorDiagram {
    d: u32,
    /// Sorted; parallel edges appear repeatedly.
    edges: Vec<(u32, u32, u32)>,
}

impl FloorDiagram {
    /// Validates the edge list against connectivity and divergence.
    pub fn new(d: u32, mut edges: Vec<(u32, u32, u32)>) -> Result<Self> {
        if d == 0 {
            return Err(Error::domain("a floor diagram needs at least one vertex"));
        }
        if edges.len() + 1 < d as usize {
            return Err(Error::domain("too few edges to connect the floors"));
        }
        for &(u, v, w) in &edges {
            if !(1 <= u && u < v && v <= d && w >= 1) {
                return Err(Error::domain(format!("invalid edge ({u}, {v}, {w})")));
            }
        }
        edges.sort_unstable();
        let diagram = FloorDiagram { d, edges };
        if let Some(v) = (1..=d).find(|&v| diagram.divergence(v) > 1) {
            return Err(Error::domain(format!("vertex {v} has divergence above 1")));
        }
        if !diagram.is_connected() {
            return Err(Error::domain("floor diagram is not connected"));
        }
        Ok(diagram)
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn edges(&self) -> &[(u32, u32, u32)] {
        &self.edges
    }

    pub fn genus(&self) -> u32 {
        (self.edges.len() + 1 - self.d as usize) as u32
    }

    pub fn divergence(&self, v: u32) -> i64 {
        self.edges
            .iter()
            .map(|&(a, b, w)| match () {
                _ if a == v => w as i64,
                _ if b == v => -(w as i64),
                _ => 0,
            })
            .sum()
    }

    fn is_connected(&self) -> bool {
        let mut parent: Vec<usize> = (0..=self.d as usize).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for &(u, v, _) in &self.edges {
            let (a, b) = (find(&mut parent, u as usize), find(&mut parent, v as usize));
            parent[a] = b;
        }
        let root = find(&mut parent, 1);
        (2..=self.d as usize).all(|v| find(&mut parent, v) == root)
    }
}

fn check_range(d: u32, g: u32) -> Result<()> {
    if d == 0 {
        return Err(Error::domain("degree must be at least 1"));
    }
    if d > MAX_FLOOR_DEGREE {
        return Err(Error::size_limit(
            "floor diagram degree",
            d as u64,
            MAX_FLOOR_DEGREE as u64,
        ));
    }
    let max_genus = (d - 1) * (d.saturating_sub(2)) / 2;
    if g > max_genus {
        return Err(Error::domain(format!(
            "genus {g} exceeds the bound (d-1)(d-2)/2 = {max_genus} for plane curves of degree {d}"
        )));
    }
    Ok(())
}

/// All connected labelled floor diagrams of degree d and genus g, sorted.
pub fn enumerate_diagrams(d: u32, g: u32) -> Result<Vec<FloorDiagram>> {
    check_range(d, g)?;
    let n_edges = (d + g - 1) as usize;
    // candidate edge types in increasing order
    let mut types = Vec::new();
    for u in 1..d {
        for v in u + 1..=d {
            for w in 1..=u {
                types.push((u, v, w));
            }
        }
    }
    let mut state = Search {
        d,
        types: &types,
        cut: vec![0; d as usize + 1],
        div: vec![0; d as usize + 1],
        chosen: Vec::with_capacity(n_edges),
        out: Vec::new(),
    };
    state.extend(0, n_edges);
    let mut out = state.out;
    out.sort();
    Ok(out)
}

struct Search<'a> {
    d: u32,
    types: &'a [(u32, u32, u32)],
    /// cut[k]: total weight of edges from {..=k} to {k+1..}
    cut: Vec<u32>,
    div: Vec<i64>,
    chosen: Vec<(u32, u32, u32)>,
    out: Vec<FloorDiagram>,
}

impl Search<'_> {
    fn extend(&mut self, from: usize, left: usize) {
        if left == 0 {
            // every vertex below the last source is finished; check the rest
            if self.div[1..].iter().all(|&x| x <= 1) {
                if let Ok(diagram) = FloorDiagram::new(self.d, self.chosen.clone()) {
                    self.out.push(diagram);
                }
            }
            return;
        }
        for i in from..self.types.len() {
            let (u, v, w) = self.types[i];
            // vertices below u have all their edges placed
            if let Some(prev) = self.chosen.last() {
                if prev.0 < u && (prev.0..u).any(|x| self.div[x as usize] > 1) {
                    return;
                }
            }
            // the weight across cut k equals Σ_{x ≤ k} div(x) ≤ k
            if (u..v).any(|k| self.cut[k as usize] + w > k) {
                continue;
            }
            for k in u..v {
                self.cut[k as usize] += w;
            }
            self.div[u as usize] += w as i64;
            self.div[v as usize] -= w as i64;
            self.chosen.push((u, v, w));
            self.extend(i, left - 1);
            self.chosen.pop();
            self.div[u as usize] -= w as i64;
            self.div[v as usize] += w as i64;
            for k in u..v {
                self.cut[k as usize] -= w;
            }
        }
    }
}

/// Π w(e)².
pub fn mu_multiplicity(diagram: &FloorDiagram) -> BigUint {
    diagram
        .edges
        .iter()
        .fold(BigUint::one(), |acc, &(_, _, w)| acc * (w as u64 * w as u64))
}

/// Number of markings: linear extensions of floors, edges and the 1 - div(v)
/// extra sink rays at each v, modulo permutations of identical elements.
///
/// Floors form a chain. An edge (u, v) sits in one of the gaps u..v-1 (gap k
/// lies between floors k and k+1, gap d after floor d) and a ray at v in one
/// of the gaps v..d. Elements in one gap are mutually incomparable.
pub fn nu_markings(diagram: &FloorDiagram) -> BigUint {
    let d = diagram.d as usize;
    // (lowest gap, highest gap, multiplicity) per element type
    let mut groups: Vec<(usize, usize, usize)> = Vec::new();
    let mut i = 0;
    while i < diagram.edges.len() {
        let e = diagram.edges[i];
        let run = diagram.edges[i..].iter().take_while(|&&x| x == e).count();
        groups.push((e.0 as usize, e.1 as usize - 1, run));
        i += run;
    }
    for v in 1..=diagram.d {
        let rays = 1 - diagram.divergence(v);
        if rays > 0 {
            groups.push((v as usize, d, rays as usize));
        }
    }

    // occupancy vector of the gaps -> weighted count
    let mut states: HashMap<Vec<usize>, BigUint> = HashMap::from([(vec![0; d + 1], BigUint::one())]);
    for &(lo, hi, count) in &groups {
        let mut next: HashMap<Vec<usize>, BigUint> = HashMap::new();
        for (occ, weight) in &states {
            place(lo, hi, count, occ.clone(), weight.clone(), &mut next);
        }
        states = next;
    }
    states.into_values().fold(BigUint::zero(), |acc, x| acc + x)
}

// Distributes `count` identical elements over gaps lo..=hi; putting n of them
// into a gap already holding c elements interleaves in C(c + n, n) ways.
fn place(lo: usize, hi: usize, count: usize, occ: Vec<usize>, weight: BigUint, out: &mut HashMap<Vec<usize>, BigUint>) {
    if lo == hi {
        let mut occ = occ;
        let factor = binomial((occ[lo] + count) as u64, count as u64);
        occ[lo] += count;
        *out.entry(occ).or_default() += weight * factor;
        return;
    }
    for n in 0..=count {
        let mut occ = occ.clone();
        let factor = binomial((occ[lo] + n) as u64, n as u64);
        occ[lo] += n;
        place(lo + 1, hi, count - n, occ, &weight * factor, out);
    }
}

/// N_{d,g} = Σ_D μ(D)·ν(D).
pub fn gw_invariant(d: u32, g: u32) -> Result<BigUint> {
    let diagrams = enumerate_diagrams(d, g)?;
    Ok(diagrams
        .par_iter()
        .map(|diagram| mu_multiplicity(diagram) * nu_markings(diagram))
        .reduce(BigUint::zero, |a, b| a + b))
}

/// Kontsevich's recursion for rational plane curves through 3d - 1 points.
pub fn kontsevich_oracle(d: u32) -> Result<BigUint> {
    if d == 0 {
        return Err(Error::domain("degree must be at least 1"));
    }
    if d > MAX_KONTSEVICH_DEGREE {
        return Err(Error::size_limit(
            "Kontsevich degree",
            d as u64,
            MAX_KONTSEVICH_DEGREE as u64,
        ));
    }
    let mut n: Vec<BigInt> = vec![BigInt::zero(), BigInt::one()];
    for total in 2..=d as u64 {
        let mut acc = BigInt::zero();
        for d1 in 1..total {
            let d2 = total - d1;
            let a = BigInt::from(binomial(3 * total - 4, 3 * d1 - 2)) * d2;
            let b = BigInt::from(binomial(3 * total - 4, 3 * d1 - 1)) * d1;
            acc += &n[d1 as usize] * &n[d2 as usize] * d1 * d1 * d2 * (a - b);
        }
        n.push(acc);
    }
    n[d as usize]
        .to_biguint()
        .ok_or_else(|| Error::Internal("negative Kontsevich number".into()))
}

/// A diagram with its multiplicities, as printed by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagramReport {
    pub d: u32,
    pub g: u32,
    pub edges: Vec<[u32; 3]>,
    #[serde(serialize_with = "ser_big")]
    pub mu: BigUint,
    #[serde(serialize_with = "ser_big")]
    pub nu: BigUint,
}

impl From<&FloorDiagram> for DiagramReport {
    fn from(diagram: &FloorDiagram) -> Self {
        DiagramReport {
            d: diagram.d,
            g: diagram.genus(),
            edges: diagram.edges.iter().map(|&(u, v, w)| [u, v, w]).collect(),
            mu: mu_multiplicity(diagram),
            nu: nu_markings(diagram),
        }
    }
}

fn ser_big<S: Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x.to_u64() {
        Some(v) => s.serialize_u64(v),
        None => s.serialize_str(&x.to_string()),
    }
}
