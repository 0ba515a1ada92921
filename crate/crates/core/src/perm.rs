//! Permutations of {1,..,n} with the word machinery the Hecke engine needs:
//! lengths, reduced words, Young subgroups and distinguished coset
//! representatives.
//!
//! Products compose left-to-right: `(u * v)(i) = v(u(i))`.  This matches the
//! convention `T_u T_v = T_{u*v}` when lengths add, so reduced words read off
//! generator products in the order they are applied.

use std::fmt;

/// A permutation of {1,..,n}, stored as the image vector `imgs[i-1] = w(i)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    imgs: Vec<u8>,
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.imgs)
    }
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            imgs: (1..=n as u8).collect(),
        }
    }

    /// Builds a permutation from its one-line notation (1-based images).
    pub fn from_images(imgs: Vec<u8>) -> Self {
        let n = imgs.len();
        let mut seen = vec![false; n + 1];
        for &v in &imgs {
            assert!(v >= 1 && v as usize <= n && !seen[v as usize], "invalid permutation");
            seen[v as usize] = true;
        }
        Perm { imgs }
    }

    /// The adjacent transposition t_i = (i, i+1), for 1 <= i < n.
    pub fn transposition(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n);
        let mut imgs: Vec<u8> = (1..=n as u8).collect();
        imgs.swap(i - 1, i);
        Perm { imgs }
    }

    pub fn n(&self) -> usize {
        self.imgs.len()
    }

    pub fn is_identity(&self) -> bool {
        self.imgs.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// w(i) for 1 <= i <= n.
    pub fn apply(&self, i: usize) -> usize {
        self.imgs[i - 1] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.imgs
    }

    pub fn inverse(&self) -> Perm {
        let mut imgs = vec![0u8; self.imgs.len()];
        for (i, &v) in self.imgs.iter().enumerate() {
            imgs[v as usize - 1] = (i + 1) as u8;
        }
        Perm { imgs }
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n());
        Perm {
            imgs: self.imgs.iter().map(|&v| other.imgs[v as usize - 1]).collect(),
        }
    }

    /// Number of inversions, which is the Coxeter length.
    pub fn len(&self) -> usize {
        let mut c = 0;
        for i in 0..self.imgs.len() {
            for j in i + 1..self.imgs.len() {
                if self.imgs[i] > self.imgs[j] {
                    c += 1;
                }
            }
        }
        c
    }

    /// Right product by t_i; swaps the values i and i+1.
    pub fn mul_transposition(&self, i: usize) -> Perm {
        let mut imgs = self.imgs.clone();
        for v in imgs.iter_mut() {
            if *v as usize == i {
                *v = (i + 1) as u8;
            } else if *v as usize == i + 1 {
                *v = i as u8;
            }
        }
        Perm { imgs }
    }

    /// True iff len(w * t_i) > len(w).
    pub fn right_ascent(&self, i: usize) -> bool {
        // w * t_i swaps the values i, i+1; the length grows iff i occurs
        // before i+1 in one-line notation.
        let pi = self.imgs.iter().position(|&v| v as usize == i).unwrap();
        let pj = self.imgs.iter().position(|&v| v as usize == i + 1).unwrap();
        pi < pj
    }

    /// A reduced word for w: T_w = T_{word[0]} T_{word[1]} ...
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut u = self.clone();
        let mut rev = Vec::new();
        'outer: while !u.is_identity() {
            for i in 1..u.n() {
                if !u.right_ascent(i) {
                    rev.push(i);
                    u = u.mul_transposition(i);
                    continue 'outer;
                }
            }
            unreachable!("non-identity permutation has a descent");
        }
        rev.reverse();
        rev
    }

    /// All permutations of S_n in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut imgs: Vec<u8> = (1..=n as u8).collect();
        loop {
            out.push(Perm { imgs: imgs.clone() });
            // next lexicographic permutation
            if n < 2 {
                break;
            }
            let mut i = n - 1;
            while i > 0 && imgs[i - 1] >= imgs[i] {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            let mut j = n - 1;
            while imgs[j] <= imgs[i - 1] {
                j -= 1;
            }
            imgs.swap(i - 1, j);
            imgs[i..].reverse();
        }
        out
    }
}

/// All elements of the Young subgroup fixing the given consecutive blocks of
/// {1,..,n} setwise; `blocks` are the block lengths in order.
pub fn young_subgroup(n: usize, blocks: &[usize]) -> Vec<Perm> {
    assert_eq!(blocks.iter().sum::<usize>(), n);
    let mut elems = vec![Perm::identity(n)];
    let mut start = 0;
    for &b in blocks {
        if b > 1 {
            let locals = Perm::all(b);
            let mut next = Vec::with_capacity(elems.len() * locals.len());
            for e in &elems {
                for loc in &locals {
                    let mut imgs = e.images().to_vec();
                    let window: Vec<u8> = (0..b).map(|k| imgs[start + k]).collect();
                    for k in 0..b {
                        imgs[start + k] = window[loc.apply(k + 1) - 1];
                    }
                    next.push(Perm::from_images(imgs));
                }
            }
            elems = next;
        }
        start += b;
    }
    elems
}

/// Minimal-length right coset representatives for the Young subgroup of the
/// given block shape: the permutations increasing on each block.
pub fn coset_reps(n: usize, blocks: &[usize]) -> Vec<Perm> {
    let bounds = block_bounds(blocks);
    Perm::all(n)
        .into_iter()
        .filter(|w| is_row_increasing(w, &bounds))
        .collect()
}

fn block_bounds(blocks: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut start = 1;
    for &b in blocks {
        if b > 0 {
            out.push((start, start + b - 1));
        }
        start += b;
    }
    out
}

fn is_row_increasing(w: &Perm, bounds: &[(usize, usize)]) -> bool {
    bounds
        .iter()
        .all(|&(lo, hi)| (lo..hi).all(|i| w.apply(i) < w.apply(i + 1)))
}

/// Minimal-length (S_blocks_a, S_blocks_b)-double coset representatives.
pub fn double_coset_reps(n: usize, blocks_a: &[usize], blocks_b: &[usize]) -> Vec<Perm> {
    let ba = block_bounds(blocks_a);
    let bb = block_bounds(blocks_b);
    Perm::all(n)
        .into_iter()
        .filter(|w| is_row_increasing(w, &ba) && is_row_increasing(&w.inverse(), &bb))
        .collect()
}
