//! Partitions, multipartitions and multicompositions with the dominance
//! order and the enumeration orders used everywhere else.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{domain_err, Result};

/// A partition: weakly decreasing positive parts, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing: {parts:?}"
        );
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Part i (1-based), 0 beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Column length: number of parts >= j (1-based column index).
    pub fn conjugate_part(&self, j: usize) -> u32 {
        self.parts.iter().filter(|&&p| p as usize >= j).count() as u32
    }

    /// All partitions of n, in descending lexicographic order (so (n) first).
    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition::new(prefix.clone()));
                return;
            }
            let hi = max.min(n);
            for p in (1..=hi).rev() {
                prefix.push(p);
                rec(n - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    pub fn is_e_restricted(&self, e: u32) -> bool {
        (1..=self.parts.len()).all(|i| self.part(i) - self.part(i + 1) < e)
    }
}

/// A composition: non-negative parts in a fixed order, trailing zeros
/// trimmed for canonical equality (interior zeros are significant).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<u32>,
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

impl Composition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Composition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> u32 {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// The partition obtained by sorting the parts.
    pub fn sorted(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    /// All compositions of n into at most `max_parts` parts (interior zeros
    /// allowed, trailing zeros canonicalized away).
    pub fn all(n: u32, max_parts: usize) -> Vec<Composition> {
        fn rec(n: u32, slots: usize, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
            if slots == 0 {
                if n == 0 {
                    out.push(Composition::new(prefix.clone()));
                }
                return;
            }
            for p in 0..=n {
                prefix.push(p);
                rec(n - p, slots - 1, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, max_parts, &mut Vec::new(), &mut out);
        out.sort();
        out.dedup();
        out
    }
}

impl From<Partition> for Composition {
    fn from(p: Partition) -> Self {
        Composition { parts: p.parts }
    }
}

/// An r-tuple of partitions of total size n.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl fmt::Debug for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self
            .components
            .iter()
            .map(|p| {
                let ps: Vec<String> = p.parts().iter().map(|x| x.to_string()).collect();
                format!("({})", ps.join(","))
            })
            .collect();
        write!(f, "[{}]", body.join("|"))
    }
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Self {
        assert!(!components.is_empty(), "need at least one component");
        Multipartition { components }
    }

    pub fn empty(r: usize) -> Self {
        Multipartition {
            components: vec![Partition::empty(); r],
        }
    }

    pub fn r(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> u32 {
        self.components.iter().map(|p| p.size()).sum()
    }

    pub fn component(&self, s: usize) -> &Partition {
        &self.components[s - 1]
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    /// max over components of the number of parts
    pub fn length(&self) -> usize {
        self.components.iter().map(|p| p.len()).max().unwrap_or(0)
    }

    pub fn row_len(&self, s: usize, i: usize) -> u32 {
        self.component(s).part(i)
    }

    /// Row lengths in row-reading order (component 1 rows, then component 2,
    /// ...), the block sizes of the Young subgroup S_lambda.
    pub fn row_blocks(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for p in &self.components {
            for &x in p.parts() {
                out.push(x as usize);
            }
        }
        out
    }

    pub fn to_multicomposition(&self) -> Multicomposition {
        Multicomposition::new(
            self.components
                .iter()
                .map(|p| Composition::from(p.clone()))
                .collect(),
        )
    }
}

/// An r-tuple of compositions of total size n.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multicomposition {
    components: Vec<Composition>,
}

impl fmt::Debug for Multicomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.components.iter().map(|p| format!("{:?}", p)).collect();
        write!(f, "[{}]", body.join("|"))
    }
}

impl Multicomposition {
    pub fn new(components: Vec<Composition>) -> Self {
        assert!(!components.is_empty());
        Multicomposition { components }
    }

    pub fn r(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> u32 {
        self.components.iter().map(|p| p.size()).sum()
    }

    pub fn component(&self, s: usize) -> &Composition {
        &self.components[s - 1]
    }

    pub fn components(&self) -> &[Composition] {
        &self.components
    }

    pub fn row_len(&self, s: usize, i: usize) -> u32 {
        self.component(s).part(i)
    }

    pub fn max_rows(&self) -> usize {
        self.components.iter().map(|c| c.len()).max().unwrap_or(0)
    }

    pub fn row_blocks(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for p in &self.components {
            for &x in p.parts() {
                out.push(x as usize);
            }
        }
        out
    }

    /// Sorts each component into a partition.
    pub fn sorted(&self) -> Multipartition {
        Multipartition::new(self.components.iter().map(|c| c.sorted()).collect())
    }

    pub fn is_multipartition(&self) -> bool {
        self.components
            .iter()
            .all(|c| c.parts().windows(2).all(|w| w[0] >= w[1]))
    }
}

/// The dominance partial-sum profile: for every component s and row index i,
/// the sum of all earlier components plus the first i rows of component s.
fn dominance_profile(rows: &dyn Fn(usize, usize) -> u32, r: usize, depth: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(r * depth);
    let mut before: u64 = 0;
    for s in 1..=r {
        let mut acc = before;
        for i in 1..=depth {
            acc += rows(s, i) as u64;
            out.push(acc);
        }
        before = acc;
    }
    out
}

fn profile_of_multipartition(l: &Multipartition, depth: usize) -> Vec<u64> {
    dominance_profile(&|s, i| l.row_len(s, i), l.r(), depth)
}

fn profile_of_multicomposition(l: &Multicomposition, depth: usize) -> Vec<u64> {
    dominance_profile(&|s, i| l.row_len(s, i), l.r(), depth)
}

/// lambda dominates mu (lambda >= mu in the dominance order).
pub fn dominates(lambda: &Multipartition, mu: &Multipartition) -> Result<bool> {
    if lambda.r() != mu.r() || lambda.size() != mu.size() {
        return domain_err(format!(
            "dominance needs matching r and n: {lambda} vs {mu}"
        ));
    }
    let depth = lambda.length().max(mu.length()).max(1);
    let a = profile_of_multipartition(lambda, depth);
    let b = profile_of_multipartition(mu, depth);
    Ok(a.iter().zip(&b).all(|(x, y)| x >= y))
}

pub fn dominates_strictly(lambda: &Multipartition, mu: &Multipartition) -> Result<bool> {
    Ok(lambda != mu && dominates(lambda, mu)?)
}

/// Dominance on multicompositions, by the same partial-sum inequalities.
pub fn dominates_compositions(lambda: &Multicomposition, mu: &Multicomposition) -> Result<bool> {
    if lambda.r() != mu.r() || lambda.size() != mu.size() {
        return domain_err("dominance needs matching r and n".to_string());
    }
    let depth = lambda.max_rows().max(mu.max_rows()).max(1);
    let a = profile_of_multicomposition(lambda, depth);
    let b = profile_of_multicomposition(mu, depth);
    Ok(a.iter().zip(&b).all(|(x, y)| x >= y))
}

/// All multipartitions of n with r components, in a fixed total order that
/// refines dominance: whenever lambda strictly dominates mu, lambda comes
/// first.  Sorting key: the dominance profile, compared lexicographically in
/// descending order.
pub fn enumerate_multipartitions(r: usize, n: u32) -> Result<Vec<Multipartition>> {
    if r == 0 {
        return domain_err("r must be at least 1");
    }
    let mut out = Vec::new();
    fn rec(rest: u32, slots: usize, prefix: &mut Vec<Partition>, out: &mut Vec<Multipartition>) {
        if slots == 1 {
            prefix.push(Partition::all(rest).remove(0));
            // replace with full iteration below
            prefix.pop();
            for p in Partition::all(rest) {
                prefix.push(p);
                out.push(Multipartition::new(prefix.clone()));
                prefix.pop();
            }
            return;
        }
        for k in (0..=rest).rev() {
            for p in Partition::all(k) {
                prefix.push(p);
                rec(rest - k, slots - 1, prefix, out);
                prefix.pop();
            }
        }
    }
    rec(n, r, &mut Vec::new(), &mut out);
    let depth = n.max(1) as usize;
    out.sort_by(|a, b| {
        let pa = profile_of_multipartition(a, depth);
        let pb = profile_of_multipartition(b, depth);
        match pb.cmp(&pa) {
            Ordering::Equal => a.cmp(b),
            o => o,
        }
    });
    Ok(out)
}

/// Sigma_lambda |Std(lambda)|^2 = r^n n!, the Robinson-Schensted identity
/// behind the basis theorem.
pub fn count_identity_check(r: usize, n: u32) -> Result<bool> {
    let mps = enumerate_multipartitions(r, n)?;
    let total: u64 = mps
        .iter()
        .map(|l| {
            let c = super::tableau::standard_tableaux(l).len() as u64;
            c * c
        })
        .sum();
    Ok(total == order_of_wreath(r, n))
}

/// r^n * n!
pub fn order_of_wreath(r: usize, n: u32) -> u64 {
    let mut v: u64 = 1;
    for _ in 0..n {
        v *= r as u64;
    }
    for k in 1..=n as u64 {
        v *= k;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(parts: &[&[u32]]) -> Multipartition {
        Multipartition::new(parts.iter().map(|p| Partition::new(p.to_vec())).collect())
    }

    #[test]
    fn enumeration_counts() {
        // brute-force cardinalities
        assert_eq!(enumerate_multipartitions(2, 2).unwrap().len(), 5);
        assert_eq!(enumerate_multipartitions(1, 0).unwrap().len(), 1);
        assert_eq!(
            enumerate_multipartitions(3, 1).unwrap(),
            vec![
                mp(&[&[1], &[], &[]]),
                mp(&[&[], &[1], &[]]),
                mp(&[&[], &[], &[1]])
            ]
        );
        assert!(enumerate_multipartitions(0, 2).is_err());
    }

    #[test]
    fn dominance_examples() {
        let a = mp(&[&[2], &[]]);
        let b = mp(&[&[1, 1], &[]]);
        let c = mp(&[&[], &[2]]);
        assert!(dominates(&a, &b).unwrap());
        assert!(dominates(&b, &c).unwrap());
        assert!(dominates(&a, &a).unwrap());
        assert!(!dominates(&c, &b).unwrap());
        assert!(dominates(&a, &mp(&[&[2], &[]])).unwrap());
        // mismatched sizes rejected
        assert!(dominates(&a, &mp(&[&[1], &[]])).is_err());
    }

    #[test]
    fn enumeration_refines_dominance() {
        for (r, n) in [(1usize, 5u32), (2, 4), (3, 3)] {
            let mps = enumerate_multipartitions(r, n).unwrap();
            for i in 0..mps.len() {
                for j in 0..mps.len() {
                    if dominates_strictly(&mps[i], &mps[j]).unwrap() {
                        assert!(i < j, "{} should come before {}", mps[i], mps[j]);
                    }
                }
            }
        }
    }

    #[test]
    fn dominance_is_partial_order() {
        for (r, n) in [(2usize, 3u32), (3, 3)] {
            let mps = enumerate_multipartitions(r, n).unwrap();
            for a in &mps {
                for b in &mps {
                    let ab = dominates(a, b).unwrap();
                    let ba = dominates(b, a).unwrap();
                    if ab && ba {
                        assert_eq!(a, b, "antisymmetry");
                    }
                    for c in &mps {
                        if ab && dominates(b, c).unwrap() {
                            assert!(dominates(a, c).unwrap(), "transitivity");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn count_identity_small() {
        assert!(count_identity_check(2, 2).unwrap());
        assert!(count_identity_check(1, 3).unwrap());
        assert!(count_identity_check(3, 0).unwrap());
    }

    #[test]
    fn compositions_with_interior_zeros() {
        let all = Composition::all(2, 2);
        assert_eq!(all.len(), 3); // (2), (1,1), (0,2)
        assert!(all.contains(&Composition::new(vec![0, 2])));
        assert_eq!(Composition::new(vec![2, 0]), Composition::new(vec![2]));
    }
}
