//! Residues modulo e, normal and good nodes, Kleshchev multipartitions,
//! i-restriction and i-induction at the character level, and the
//! branching-rule prediction.

use std::collections::BTreeMap;

use crate::combinatorics::{
    addable_nodes, add_node, enumerate_multipartitions, remove_node, removable_nodes,
    Multipartition, Node,
};
use crate::error::{domain_err, Result};

/// e and the multicharge: Q_s = q^{a_s}, charges reduced mod e when finite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EResidueConfig {
    /// None encodes e = infinity (q not a root of unity)
    pub e: Option<u32>,
    pub charges: Vec<i64>,
}

impl EResidueConfig {
    pub fn new(e: Option<u32>, charges: Vec<i64>) -> Result<Self> {
        if let Some(e) = e {
            if e < 2 {
                return domain_err("finite e must be at least 2");
            }
            return Ok(EResidueConfig {
                e: Some(e),
                charges: charges.iter().map(|&a| a.rem_euclid(e as i64)).collect(),
            });
        }
        Ok(EResidueConfig { e: None, charges })
    }

    pub fn r(&self) -> usize {
        self.charges.len()
    }

    /// a_s + col - row, reduced mod e when e is finite.
    pub fn residue(&self, node: &Node) -> i64 {
        let raw = self.charges[node.comp as usize - 1] + node.col as i64 - node.row as i64;
        match self.e {
            Some(e) => raw.rem_euclid(e as i64),
            None => raw,
        }
    }

    pub fn residues(&self) -> Vec<i64> {
        match self.e {
            Some(e) => (0..e as i64).collect(),
            None => Vec::new(),
        }
    }
}

/// Addable/removable i-nodes of a shape in the "below" order, with normal
/// flags and the good node.
#[derive(Clone, Debug)]
pub struct NodeClassification {
    pub residue: i64,
    pub addable: Vec<Node>,
    pub removable: Vec<Node>,
    /// parallel to `removable`
    pub normal: Vec<bool>,
    pub good: Option<Node>,
}

/// `b` is strictly below `a` in the node order (later component, or same
/// component and larger row).
fn below(a: &Node, b: &Node) -> bool {
    a.is_below(b)
}

/// Classifies nodes for one residue by the counting conditions: a
/// removable i-node x is normal when (i) every addable i-node y below x
/// has more removable than addable i-nodes strictly between x and y, and
/// (ii) at least as many removable as addable i-nodes sit below x; x is
/// good when no normal i-node lies above it.  Condition (i) quantifies
/// over addable nodes: that reading is the one equivalent to the
/// unmatched-bracket rule and the one that makes the r = 1 Kleshchev set
/// equal the e-restricted partitions.
pub fn classify_nodes(l: &Multipartition, i: i64, config: &EResidueConfig) -> NodeClassification {
    let addable: Vec<Node> = addable_nodes(l)
        .into_iter()
        .filter(|x| config.residue(x) == i)
        .collect();
    let removable: Vec<Node> = removable_nodes(l)
        .into_iter()
        .filter(|x| config.residue(x) == i)
        .collect();
    let strictly_between = |x: &Node, y: &Node, z: &Node| below(x, z) && below(z, y);
    let normal: Vec<bool> = removable
        .iter()
        .map(|x| {
            let cond_i = addable.iter().filter(|y| below(x, y)).all(|y| {
                let rem_between = removable.iter().filter(|z| strictly_between(x, y, z)).count();
                let add_between = addable.iter().filter(|z| strictly_between(x, y, z)).count();
                rem_between > add_between
            });
            let rem_below = removable.iter().filter(|y| below(x, y)).count();
            let add_below = addable.iter().filter(|y| below(x, y)).count();
            cond_i && rem_below >= add_below
        })
        .collect();
    // good: normal with no normal node above ("above" is the strict
    // complement of "below"), i.e. the first normal node in the below order
    let good = removable
        .iter()
        .zip(&normal)
        .filter(|(_, &n)| n)
        .map(|(x, _)| *x)
        .min_by(|a, b| {
            if below(a, b) {
                std::cmp::Ordering::Less
            } else if below(b, a) {
                std::cmp::Ordering::Greater
            } else {
                std::cmp::Ordering::Equal
            }
        });
    NodeClassification {
        residue: i,
        addable,
        removable,
        normal,
        good,
    }
}

/// All good nodes of a shape, at most one per residue.
pub fn good_nodes(l: &Multipartition, config: &EResidueConfig) -> Vec<(i64, Node)> {
    config
        .residues()
        .into_iter()
        .filter_map(|i| classify_nodes(l, i, config).good.map(|x| (i, x)))
        .collect()
}

/// The Kleshchev multipartitions of n: reachable from the empty shape by
/// adding good nodes, generated level by level.
pub fn kleshchev_multipartitions(
    r: usize,
    n: u32,
    config: &EResidueConfig,
) -> Result<Vec<Multipartition>> {
    if config.e.is_none() {
        return domain_err("Kleshchev enumeration needs finite e");
    }
    if config.r() != r {
        return domain_err("multicharge length must match r");
    }
    let mut level: Vec<Multipartition> = vec![Multipartition::empty(r)];
    for _ in 0..n {
        let mut next: BTreeMap<Multipartition, ()> = BTreeMap::new();
        for l in &level {
            for (_, x) in good_nodes_addable(l, config) {
                next.insert(add_node(l, &x), ());
            }
        }
        level = next.into_keys().collect();
    }
    // report in the global enumeration order
    let order = enumerate_multipartitions(r, n)?;
    Ok(order.into_iter().filter(|l| level.contains(l)).collect())
}

/// Addable nodes x of lambda such that x is a good node of lambda + x; the
/// crystal raising moves.
pub fn good_nodes_addable(l: &Multipartition, config: &EResidueConfig) -> Vec<(i64, Node)> {
    addable_nodes(l)
        .iter()
        .filter_map(|x| {
            let i = config.residue(x);
            let bigger = add_node(l, x);
            match classify_nodes(&bigger, i, config).good {
                Some(g) if g == *x => Some((i, *x)),
                _ => None,
            }
        })
        .collect()
}

pub fn is_kleshchev(l: &Multipartition, config: &EResidueConfig) -> Result<bool> {
    let set = kleshchev_multipartitions(l.r(), l.size(), config)?;
    Ok(set.contains(l))
}

/// The multiset of shapes obtained by removing one i-node.
pub fn i_restriction(l: &Multipartition, i: i64, config: &EResidueConfig) -> Vec<Multipartition> {
    removable_nodes(l)
        .into_iter()
        .filter(|x| config.residue(x) == i)
        .map(|x| remove_node(l, &x))
        .collect()
}

/// The multiset of shapes obtained by adding one i-node.
pub fn i_induction(l: &Multipartition, i: i64, config: &EResidueConfig) -> Vec<Multipartition> {
    addable_nodes(l)
        .into_iter()
        .filter(|x| config.residue(x) == i)
        .map(|x| add_node(l, &x))
        .collect()
}

/// Predicted socle summands of the restriction of D^mu: the good-node
/// predecessors with their residues.  The unknown relabeling permutations
/// of the branching theorem are taken as the identity; callers should flag
/// the output as a conjectural labeling.
pub fn branching_prediction(
    mu: &Multipartition,
    config: &EResidueConfig,
) -> Result<Vec<(i64, Multipartition)>> {
    if !is_kleshchev(mu, config)? {
        return domain_err(format!("{mu} is not Kleshchev for this configuration"));
    }
    Ok(good_nodes(mu, config)
        .into_iter()
        .map(|(i, x)| (i, remove_node(mu, &x)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Partition;

    fn mp(parts: &[&[u32]]) -> Multipartition {
        Multipartition::new(parts.iter().map(|p| Partition::new(p.to_vec())).collect())
    }

    fn cfg(e: u32, charges: &[i64]) -> EResidueConfig {
        EResidueConfig::new(Some(e), charges.to_vec()).unwrap()
    }

    #[test]
    fn e_residues() {
        let c = cfg(2, &[0]);
        assert_eq!(c.residue(&Node::new(1, 1, 1)), 0);
        assert_eq!(c.residue(&Node::new(2, 1, 1)), 1);
        let c2 = cfg(3, &[0, 1]);
        assert_eq!(c2.residue(&Node::new(1, 1, 2)), 1);
    }

    #[test]
    fn single_box_is_good() {
        let c = cfg(2, &[0]);
        let l = mp(&[&[1]]);
        let cls = classify_nodes(&l, 0, &c);
        assert_eq!(cls.removable, vec![Node::new(1, 1, 1)]);
        assert_eq!(cls.normal, vec![true]);
        assert_eq!(cls.good, Some(Node::new(1, 1, 1)));
        // empty shape: nothing
        let cls = classify_nodes(&mp(&[&[]]), 0, &c);
        assert!(cls.removable.is_empty() && cls.good.is_none());
    }

    #[test]
    fn row_of_two_at_e2_has_no_good_node() {
        // (2) is not 2-restricted: its removable 1-node fails condition (ii)
        // because of the addable 1-node below it, so no good node exists.
        let c = cfg(2, &[0]);
        let l = mp(&[&[2]]);
        let cls = classify_nodes(&l, 1, &c);
        assert_eq!(cls.removable, vec![Node::new(1, 2, 1)]);
        assert_eq!(cls.normal, vec![false]);
        assert_eq!(cls.good, None);
        assert!(good_nodes(&l, &c).is_empty());
        // at e = 3 the same node is good
        let c3 = cfg(3, &[0]);
        let cls3 = classify_nodes(&l, 1, &c3);
        assert_eq!(cls3.good, Some(Node::new(1, 2, 1)));
    }

    #[test]
    fn kleshchev_is_e_restricted_for_r1() {
        for e in [2u32, 3] {
            for n in 0..=5u32 {
                let c = cfg(e, &[0]);
                let klesh = kleshchev_multipartitions(1, n, &c).unwrap();
                let expect: Vec<Multipartition> = enumerate_multipartitions(1, n)
                    .unwrap()
                    .into_iter()
                    .filter(|l| l.component(1).is_e_restricted(e))
                    .collect();
                assert_eq!(klesh, expect, "e={e}, n={n}");
            }
        }
    }

    #[test]
    fn kleshchev_base_case() {
        let c = cfg(2, &[0, 0]);
        let k0 = kleshchev_multipartitions(2, 0, &c).unwrap();
        assert_eq!(k0, vec![Multipartition::empty(2)]);
    }

    #[test]
    fn restriction_partitions_removals() {
        let c = cfg(2, &[0]);
        let l = mp(&[&[2]]);
        // 1-restriction removes the node of residue 1; 0-restriction nothing
        assert_eq!(i_restriction(&l, 1, &c), vec![mp(&[&[1]])]);
        assert!(i_restriction(&l, 0, &c).is_empty());
        // total over residues = number of removable nodes
        let l2 = mp(&[&[2, 1], &[1]]);
        let c2 = cfg(2, &[0, 1]);
        let total: usize = c2.residues().iter().map(|&i| i_restriction(&l2, i, &c2).len()).sum();
        assert_eq!(total, removable_nodes(&l2).len());
        // every removal can be re-added
        for &i in &c2.residues() {
            for nu in i_restriction(&l2, i, &c2) {
                assert!(i_induction(&nu, i, &c2).contains(&l2));
            }
        }
    }

    #[test]
    fn branching_small() {
        let c = cfg(2, &[0]);
        // mu = (1,1): the good node is the 1-node at (2,1); predecessor (1)
        let preds = branching_prediction(&mp(&[&[1, 1]]), &c).unwrap();
        assert_eq!(preds, vec![(1, mp(&[&[1]]))]);
        // empty mu: no predecessors
        let c2 = cfg(2, &[0, 0]);
        assert!(branching_prediction(&Multipartition::empty(2), &c2).unwrap().is_empty());
        // non-Kleshchev mu rejected
        assert!(branching_prediction(&mp(&[&[2]]), &c).is_err());
    }

    #[test]
    fn predicted_summands_have_distinct_residues_and_are_kleshchev() {
        let c = cfg(2, &[0, 1]);
        for n in 1..=3u32 {
            for mu in kleshchev_multipartitions(2, n, &c).unwrap() {
                let preds = branching_prediction(&mu, &c).unwrap();
                assert!(!preds.is_empty(), "{mu} must have a good node");
                let mut residues: Vec<i64> = preds.iter().map(|(i, _)| *i).collect();
                residues.dedup();
                assert_eq!(residues.len(), preds.len(), "distinct residues at {mu}");
                for (_, lam) in preds {
                    assert!(is_kleshchev(&lam, &c).unwrap(), "{lam} closed under removal");
                }
            }
        }
    }

    /// Brute-force signature bracketing: read addable (+) and removable (-)
    /// i-nodes from top to bottom, cancel adjacent "-+" pairs, and keep the
    /// surviving removables.
    fn bracket_normals(l: &Multipartition, i: i64, c: &EResidueConfig) -> Vec<Node> {
        let mut seq: Vec<(Node, bool)> = addable_nodes(l)
            .into_iter()
            .filter(|x| c.residue(x) == i)
            .map(|x| (x, false))
            .chain(
                removable_nodes(l)
                    .into_iter()
                    .filter(|x| c.residue(x) == i)
                    .map(|x| (x, true)),
            )
            .collect();
        seq.sort_by(|(a, _), (b, _)| {
            if below(a, b) {
                std::cmp::Ordering::Less
            } else if below(b, a) {
                std::cmp::Ordering::Greater
            } else {
                std::cmp::Ordering::Equal
            }
        });
        loop {
            let mut cancelled = false;
            for k in 0..seq.len().saturating_sub(1) {
                if seq[k].1 && !seq[k + 1].1 {
                    seq.drain(k..=k + 1);
                    cancelled = true;
                    break;
                }
            }
            if !cancelled {
                break;
            }
        }
        seq.into_iter().filter(|(_, r)| *r).map(|(x, _)| x).collect()
    }

    #[test]
    fn counting_conditions_match_bracket_rule() {
        for (r, e, charges) in [(1usize, 2u32, vec![0i64]), (2, 2, vec![0, 1]), (2, 3, vec![0, 0])] {
            let c = cfg(e, &charges);
            for n in 0..=4u32 {
                for l in enumerate_multipartitions(r, n).unwrap() {
                    for i in c.residues() {
                        let cls = classify_nodes(&l, i, &c);
                        let from_counting: Vec<Node> = cls
                            .removable
                            .iter()
                            .zip(&cls.normal)
                            .filter(|(_, &b)| b)
                            .map(|(x, _)| *x)
                            .collect();
                        let from_bracket = bracket_normals(&l, i, &c);
                        assert_eq!(from_counting, from_bracket, "{l} i={i} e={e}");
                    }
                }
            }
        }
    }

    #[test]
    fn crystal_graph_is_graded_and_connected() {
        // every Kleshchev shape of n reaches one of n-1 by removing its
        // good nodes, so the graph is connected to the empty shape
        let c = cfg(3, &[0, 1]);
        for n in 1..=3u32 {
            let kn = kleshchev_multipartitions(2, n, &c).unwrap();
            let prev = kleshchev_multipartitions(2, n - 1, &c).unwrap();
            for mu in &kn {
                let preds = branching_prediction(mu, &c).unwrap();
                assert!(preds.iter().any(|(_, l)| prev.contains(l)));
            }
        }
    }
}
