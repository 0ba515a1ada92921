//! Standard and semistandard tableaux on multipartition diagrams.

use std::collections::BTreeMap;

use super::node::Node;
use super::partition::{Multicomposition, Multipartition, Partition};
use crate::perm::Perm;

/// A standard tableau: a filling of the diagram by 1..n increasing along
/// rows and down columns in each component.  The permutation `d` with
/// `t = t^lambda . d` is cached at construction.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct StandardTableau {
    shape: Multipartition,
    /// rows[s-1][i-1] = entries of row i of component s
    rows: Vec<Vec<Vec<u8>>>,
    d: Perm,
}

impl StandardTableau {
    fn new(shape: Multipartition, rows: Vec<Vec<Vec<u8>>>) -> Self {
        let d = d_of(&shape, &rows);
        StandardTableau { shape, rows, d }
    }

    pub fn shape(&self) -> &Multipartition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Vec<u8>>] {
        &self.rows
    }

    pub fn n(&self) -> u32 {
        self.shape.size()
    }

    /// The permutation d(t) with t = t^lambda . d(t).
    pub fn d(&self) -> &Perm {
        &self.d
    }

    pub fn entry(&self, x: &Node) -> u8 {
        self.rows[x.comp as usize - 1][x.row as usize - 1][x.col as usize - 1]
    }

    /// The node holding entry k.
    pub fn position_of(&self, k: u8) -> Node {
        for (s, comp) in self.rows.iter().enumerate() {
            for (i, row) in comp.iter().enumerate() {
                for (j, &e) in row.iter().enumerate() {
                    if e == k {
                        return Node::new(i as u32 + 1, j as u32 + 1, s as u32 + 1);
                    }
                }
            }
        }
        panic!("entry {k} not present");
    }

    /// Component holding entry k.
    pub fn comp_of(&self, k: u8) -> u32 {
        self.position_of(k).comp
    }

    /// Residue exponent of entry k: res_t(k) = q^(j-i) Q_s as ((j-i), s).
    pub fn residue_exponent(&self, k: u8) -> (i64, u32) {
        self.position_of(k).residue_exponent()
    }

    /// Shape of the subtableau holding 1..k.
    pub fn shape_restricted(&self, k: u8) -> Multipartition {
        let comps = self
            .rows
            .iter()
            .map(|comp| {
                Partition::new(
                    comp.iter()
                        .map(|row| row.iter().filter(|&&e| e <= k).count() as u32)
                        .collect(),
                )
            })
            .collect();
        Multipartition::new(comps)
    }
}

fn d_of(shape: &Multipartition, rows: &[Vec<Vec<u8>>]) -> Perm {
    let n = shape.size() as usize;
    let mut imgs = vec![0u8; n];
    let mut counter = 0usize;
    for comp in rows {
        for row in comp {
            for &e in row {
                // t^lambda holds counter+1 at this node
                imgs[counter] = e;
                counter += 1;
            }
        }
    }
    Perm::from_images(imgs)
}

/// The row-reading tableau t^lambda.
pub fn initial_tableau(shape: &Multipartition) -> StandardTableau {
    let mut rows = Vec::new();
    let mut next = 1u8;
    for s in 1..=shape.r() {
        let mut comp = Vec::new();
        for &len in shape.component(s).parts() {
            let row: Vec<u8> = (0..len).map(|_| {
                let e = next;
                next += 1;
                e
            }).collect();
            comp.push(row);
        }
        rows.push(comp);
    }
    StandardTableau::new(shape.clone(), rows)
}

/// All standard tableaux of the given shape; the first is t^lambda.
pub fn standard_tableaux(shape: &Multipartition) -> Vec<StandardTableau> {
    let n = shape.size();
    let r = shape.r();
    let mut rows: Vec<Vec<Vec<u8>>> = (1..=r)
        .map(|s| shape.component(s).parts().iter().map(|_| Vec::new()).collect())
        .collect();
    let mut out = Vec::new();
    fill(shape, n, 1, &mut rows, &mut out);
    out
}

fn fill(
    shape: &Multipartition,
    n: u32,
    next: u8,
    rows: &mut Vec<Vec<Vec<u8>>>,
    out: &mut Vec<StandardTableau>,
) {
    if u32::from(next) > n {
        out.push(StandardTableau::new(shape.clone(), rows.clone()));
        return;
    }
    for s in 0..rows.len() {
        for i in 0..rows[s].len() {
            let cur = rows[s][i].len() as u32;
            let cap = shape.component(s + 1).part(i + 1);
            let above_ok = i == 0 || rows[s][i - 1].len() as u32 > cur;
            if cur < cap && above_ok {
                rows[s][i].push(next);
                fill(shape, n, next + 1, rows, out);
                rows[s][i].pop();
            }
        }
    }
}

/// Dominance on same-shape standard tableaux: s dominates t when the shape
/// of s restricted to 1..k dominates the shape of t restricted to 1..k for
/// every k.
pub fn tableau_dominates(s: &StandardTableau, t: &StandardTableau) -> bool {
    assert_eq!(s.shape(), t.shape());
    (1..=s.n() as u8).all(|k| {
        super::partition::dominates(&s.shape_restricted(k), &t.shape_restricted(k)).unwrap()
    })
}

/// An entry of a tableau of some type: the pair (i, s), ordered by
/// component first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TypedEntry {
    pub comp: u8,
    pub row: u8,
}

impl TypedEntry {
    pub fn new(row: u8, comp: u8) -> Self {
        TypedEntry { comp, row }
    }
}

/// A semistandard tableau of shape lambda and type mu.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SemistandardTableau {
    shape: Multipartition,
    typ: Multicomposition,
    /// rows[s-1][i-1][j-1] = value at node (i, j, s)
    rows: Vec<Vec<Vec<TypedEntry>>>,
}

impl SemistandardTableau {
    pub fn shape(&self) -> &Multipartition {
        &self.shape
    }

    pub fn typ(&self) -> &Multicomposition {
        &self.typ
    }

    pub fn rows(&self) -> &[Vec<Vec<TypedEntry>>] {
        &self.rows
    }
}

/// Row and component of each entry of the row-reading tableau of a
/// multicomposition: entry k -> (row, comp).
fn row_reading_positions(mu: &Multicomposition) -> Vec<TypedEntry> {
    let mut out = Vec::with_capacity(mu.size() as usize);
    for s in 1..=mu.r() {
        for (i, &len) in mu.component(s).parts().iter().enumerate() {
            for _ in 0..len {
                out.push(TypedEntry::new(i as u8 + 1, s as u8));
            }
        }
    }
    out
}

/// mu(t): replace each entry k of the standard tableau by (i, s) when k sits
/// in row i of component s of t^mu.
pub fn type_filling(t: &StandardTableau, mu: &Multicomposition) -> SemistandardTableau {
    assert_eq!(t.n(), mu.size());
    let pos = row_reading_positions(mu);
    let rows = t
        .rows()
        .iter()
        .map(|comp| {
            comp.iter()
                .map(|row| row.iter().map(|&e| pos[e as usize - 1]).collect())
                .collect()
        })
        .collect();
    SemistandardTableau {
        shape: t.shape().clone(),
        typ: mu.clone(),
        rows,
    }
}

/// The three semistandardness conditions: rows weakly increase, columns
/// strictly increase, and an entry (i, s) in component c needs s >= c.
pub fn is_semistandard(t: &SemistandardTableau) -> bool {
    for (c0, comp) in t.rows.iter().enumerate() {
        for (i, row) in comp.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if (v.comp as usize) < c0 + 1 {
                    return false;
                }
                if j + 1 < row.len() && !(v <= row[j + 1]) {
                    return false;
                }
                if i + 1 < comp.len() && j < comp[i + 1].len() && !(v < comp[i + 1][j]) {
                    return false;
                }
            }
        }
    }
    true
}

/// All semistandard lambda-tableaux of type mu, together with the fiber of
/// standard tableaux mapping to each under mu(.); the tableaux are returned
/// in a fixed order.
pub fn semistandard_with_fibers(
    lambda: &Multipartition,
    mu: &Multicomposition,
) -> Vec<(SemistandardTableau, Vec<usize>)> {
    assert_eq!(lambda.size(), mu.size(), "size mismatch");
    assert_eq!(lambda.r(), mu.r(), "component count mismatch");
    let std = standard_tableaux(lambda);
    let mut groups: BTreeMap<SemistandardTableau, Vec<usize>> = BTreeMap::new();
    for (idx, t) in std.iter().enumerate() {
        let f = type_filling(t, mu);
        if is_semistandard(&f) {
            groups.entry(f).or_default().push(idx);
        }
    }
    groups.into_iter().collect()
}

pub fn semistandard_tableaux(
    lambda: &Multipartition,
    mu: &Multicomposition,
) -> Vec<SemistandardTableau> {
    semistandard_with_fibers(lambda, mu)
        .into_iter()
        .map(|(t, _)| t)
        .collect()
}

/// The weight omega = ((0),...,(0),(1^n)).
pub fn omega(r: usize, n: u32) -> Multicomposition {
    let mut comps = vec![super::partition::Composition::new(vec![]); r];
    comps[r - 1] = super::partition::Composition::new(vec![1; n as usize]);
    Multicomposition::new(comps)
}

/// Number of semistandard Young tableaux of a single partition shape with
/// entries in 1..=d (column-strict fillings).
pub fn ssyt_count(p: &Partition, d: u32) -> u64 {
    if p.len() as u32 > d {
        return 0;
    }
    fn rec(p: &Partition, d: u32, row: usize, filled: &mut Vec<Vec<u32>>) -> u64 {
        if row == p.len() {
            return 1;
        }
        fn cell(p: &Partition, d: u32, row: usize, col: usize, filled: &mut Vec<Vec<u32>>) -> u64 {
            if col == p.part(row + 1) as usize {
                return rec(p, d, row + 1, filled);
            }
            let lo = {
                let left = if col > 0 { filled[row][col - 1] } else { 1 };
                let up = if row > 0 { filled[row - 1][col] + 1 } else { 1 };
                left.max(up)
            };
            let mut total = 0;
            for v in lo..=d {
                filled[row].push(v);
                total += cell(p, d, row, col + 1, filled);
                filled[row].pop();
            }
            total
        }
        cell(p, d, row, 0, filled)
    }
    let mut filled: Vec<Vec<u32>> = vec![Vec::new(); p.len()];
    rec(p, d, 0, &mut filled)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partition::enumerate_multipartitions;

    fn mp(parts: &[&[u32]]) -> Multipartition {
        Multipartition::new(parts.iter().map(|p| Partition::new(p.to_vec())).collect())
    }

    #[test]
    fn std_counts() {
        assert_eq!(standard_tableaux(&mp(&[&[1], &[1]])).len(), 2);
        assert_eq!(standard_tableaux(&mp(&[&[4]])).len(), 1);
        assert_eq!(standard_tableaux(&mp(&[&[2, 1]])).len(), 2);
    }

    #[test]
    fn initial_is_first_and_identity() {
        let l = mp(&[&[2, 1], &[1]]);
        let all = standard_tableaux(&l);
        assert_eq!(all[0], initial_tableau(&l));
        assert!(all[0].d().is_identity());
        for t in &all {
            assert!(tableau_dominates(&all[0], t));
        }
    }

    #[test]
    fn d_matches_displayed_example() {
        // the standard ((3,1),(1,1),(2,1))-tableau with entries
        //   479 / 6 | 1 / 8 | 25 / 3
        // has d(t) = (1,4,6,8,5)(2,7)(3,9)
        let l = mp(&[&[3, 1], &[1, 1], &[2, 1]]);
        let all = standard_tableaux(&l);
        let target = all
            .iter()
            .find(|t| {
                t.rows() == &[
                    vec![vec![4, 7, 9], vec![6]],
                    vec![vec![1], vec![8]],
                    vec![vec![2, 5], vec![3]],
                ]
            })
            .expect("displayed tableau is standard");
        let d = target.d();
        // cycles (1,4,6,8,5)(2,7)(3,9)
        let expect = [(1, 4), (4, 6), (6, 8), (8, 5), (5, 1), (2, 7), (7, 2), (3, 9), (9, 3)];
        for (a, b) in expect {
            assert_eq!(d.apply(a), b);
        }
        // entry 9 sits at (1,3,1): residue q^2 Q_1
        assert_eq!(target.residue_exponent(9), (2, 1));
    }

    #[test]
    fn semistandard_of_own_type_is_unique() {
        let l = mp(&[&[3, 1], &[1, 1], &[2, 1]]);
        let mu = l.to_multicomposition();
        let ss = semistandard_tableaux(&l, &mu);
        assert_eq!(ss.len(), 1);
        assert_eq!(ss[0], type_filling(&initial_tableau(&l), &mu));
    }

    #[test]
    fn omega_type_matches_standard() {
        for l in enumerate_multipartitions(2, 3).unwrap() {
            let om = omega(2, 3);
            let fibers = semistandard_with_fibers(&l, &om);
            let nstd = standard_tableaux(&l).len();
            assert_eq!(fibers.len(), nstd, "shape {l}");
            assert!(fibers.iter().all(|(_, f)| f.len() == 1), "omega fibers are singletons");
        }
    }

    #[test]
    fn single_row_semistandard() {
        let l = mp(&[&[2]]);
        let mu = Multicomposition::new(vec![super::super::partition::Composition::new(vec![
            1, 1,
        ])]);
        assert_eq!(semistandard_tableaux(&l, &mu).len(), 1);
    }

    #[test]
    fn ssyt_counts() {
        assert_eq!(ssyt_count(&Partition::new(vec![1]), 2), 2);
        assert_eq!(ssyt_count(&Partition::new(vec![2]), 2), 3);
        assert_eq!(ssyt_count(&Partition::new(vec![1, 1]), 2), 1);
        assert_eq!(ssyt_count(&Partition::new(vec![2, 1]), 3), 8);
    }
}
