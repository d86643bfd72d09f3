//! Fixed-capacity permutations for the exhaustive S_d computations.

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// Largest degree a [`Perm`] can hold.
pub const MAX_PERM_DEGREE: usize = 12;

/// A permutation of {0, .., n-1}; `img[i]` is the image of `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    n: u8,
    img: [u8; MAX_PERM_DEGREE],
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_PERM_DEGREE);
        let mut img = [0u8; MAX_PERM_DEGREE];
        for (i, slot) in img.iter_mut().enumerate() {
            *slot = i as u8;
        }
        Perm { n: n as u8, img }
    }

    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > MAX_PERM_DEGREE {
            return Err(Error::size_limit(
                "permutation degree",
                n as u64,
                MAX_PERM_DEGREE as u64,
            ));
        }
        let mut seen = [false; MAX_PERM_DEGREE];
        let mut img = [0u8; MAX_PERM_DEGREE];
        for (i, &x) in images.iter().enumerate() {
            if x >= n || seen[x] {
                return Err(Error::domain(format!("{images:?} is not a permutation")));
            }
            seen[x] = true;
            img[i] = x as u8;
        }
        for (i, slot) in img.iter_mut().enumerate().skip(n) {
            *slot = i as u8;
        }
        Ok(Perm { n: n as u8, img })
    }

    pub fn degree(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.img[i] as usize
    }

    /// `self * other`: apply `other` first, then `self`.
    #[inline]
    pub fn compose(&self, other: &Perm) -> Perm {
        let mut img = self.img;
        for i in 0..self.n as usize {
            img[i] = self.img[other.img[i] as usize];
        }
        Perm { n: self.n, img }
    }

    pub fn inverse(&self) -> Perm {
        let mut img = self.img;
        for i in 0..self.n as usize {
            img[self.img[i] as usize] = i as u8;
        }
        Perm { n: self.n, img }
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n as usize).all(|i| self.img[i] as usize == i)
    }

    /// Cycle lengths, sorted decreasingly.
    pub fn cycle_type(&self) -> Partition {
        let n = self.n as usize;
        let mut seen = [false; MAX_PERM_DEGREE];
        let mut lens = Vec::with_capacity(n);
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.img[i] as usize;
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_sorted(lens)
    }
}

impl std::fmt::Debug for Perm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(&self.img[..self.n as usize]).finish()
    }
}

/// Every permutation of {0, .., n-1} in lexicographic order of images.
pub fn all_permutations(n: usize) -> Vec<Perm> {
    assert!(n <= MAX_PERM_DEGREE);
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(Perm::from_images(&cur).expect("valid permutation"));
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// True when the group generated by `perms` acts transitively on {0, .., n-1}.
pub fn is_transitive(n: usize, perms: &[Perm]) -> bool {
    if n <= 1 {
        return true;
    }
    let mut parent = [0u8; MAX_PERM_DEGREE];
    for (i, p) in parent.iter_mut().enumerate() {
        *p = i as u8;
    }
    fn find(parent: &mut [u8; MAX_PERM_DEGREE], mut x: usize) -> usize {
        while parent[x] as usize != x {
            parent[x] = parent[parent[x] as usize];
            x = parent[x] as usize;
        }
        x
    }
    let mut components = n;
    for p in perms {
        for i in 0..n {
            let a = find(&mut parent, i);
            let b = find(&mut parent, p.apply(i));
            if a != b {
                parent[a] = b as u8;
                components -= 1;
                if components == 1 {
                    return true;
                }
            }
        }
    }
    components == 1
}
