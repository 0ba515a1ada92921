//! Nodes of multipartition diagrams, addable/removable status and rim hooks.

use super::partition::{Multipartition, Partition};

/// A node (row, column, component), all 1-based.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Node {
    pub row: u32,
    pub col: u32,
    pub comp: u32,
}

impl Node {
    pub fn new(row: u32, col: u32, comp: u32) -> Self {
        assert!(row >= 1 && col >= 1 && comp >= 1);
        Node { row, col, comp }
    }

    /// The symbolic residue exponent: res(x) = q^(col-row) Q_comp, returned
    /// as the pair (col - row, comp).
    pub fn residue_exponent(&self) -> (i64, u32) {
        (self.col as i64 - self.row as i64, self.comp)
    }

    /// `other` is below `self`: strictly later component, or same component
    /// and strictly larger row.
    pub fn is_below(&self, other: &Node) -> bool {
        other.comp > self.comp || (other.comp == self.comp && other.row > self.row)
    }
}

/// All nodes of the diagram, in row-reading order.
pub fn diagram(l: &Multipartition) -> Vec<Node> {
    let mut out = Vec::with_capacity(l.size() as usize);
    for s in 1..=l.r() {
        for (i, &len) in l.component(s).parts().iter().enumerate() {
            for j in 1..=len {
                out.push(Node::new(i as u32 + 1, j, s as u32));
            }
        }
    }
    out
}

pub fn contains(l: &Multipartition, x: &Node) -> bool {
    (x.comp as usize) <= l.r() && x.col <= l.component(x.comp as usize).part(x.row as usize)
}

/// Nodes whose removal leaves a multipartition diagram.
pub fn removable_nodes(l: &Multipartition) -> Vec<Node> {
    let mut out = Vec::new();
    for s in 1..=l.r() {
        let p = l.component(s);
        for i in 1..=p.len() {
            let len = p.part(i);
            if len > 0 && p.part(i + 1) < len {
                out.push(Node::new(i as u32, len, s as u32));
            }
        }
    }
    out
}

/// Nodes outside the diagram whose addition leaves a multipartition diagram.
pub fn addable_nodes(l: &Multipartition) -> Vec<Node> {
    let mut out = Vec::new();
    for s in 1..=l.r() {
        let p = l.component(s);
        for i in 1..=p.len() + 1 {
            let len = p.part(i);
            if i == 1 || p.part(i - 1) > len {
                out.push(Node::new(i as u32, len + 1, s as u32));
            }
        }
    }
    out
}

pub fn remove_node(l: &Multipartition, x: &Node) -> Multipartition {
    let mut comps: Vec<Partition> = l.components().to_vec();
    let p = &comps[x.comp as usize - 1];
    let mut parts = p.parts().to_vec();
    assert_eq!(parts[x.row as usize - 1], x.col, "node not removable");
    parts[x.row as usize - 1] -= 1;
    comps[x.comp as usize - 1] = Partition::new(parts);
    Multipartition::new(comps)
}

pub fn add_node(l: &Multipartition, x: &Node) -> Multipartition {
    let mut comps: Vec<Partition> = l.components().to_vec();
    let p = &comps[x.comp as usize - 1];
    let mut parts = p.parts().to_vec();
    while parts.len() < x.row as usize {
        parts.push(0);
    }
    assert_eq!(parts[x.row as usize - 1] + 1, x.col, "node not addable");
    parts[x.row as usize - 1] += 1;
    comps[x.comp as usize - 1] = Partition::new(parts);
    Multipartition::new(comps)
}

/// The rim hook of a node inside one component: the border strip running
/// from the end of the node's row to the end of its column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RimHook {
    pub comp: u32,
    /// cells (row, col) within the component
    pub cells: Vec<(u32, u32)>,
    pub leg_length: u32,
    pub foot: Node,
}

impl RimHook {
    pub fn size(&self) -> usize {
        self.cells.len()
    }
}

/// The rim hook at node x, together with the multipartition left after
/// removing it.
pub fn rim_hook_at(l: &Multipartition, x: &Node) -> (RimHook, Multipartition) {
    assert!(contains(l, x), "node outside diagram");
    let s = x.comp as usize;
    let sigma = l.component(s);
    let i = x.row as usize;
    let j = x.col as usize;
    let foot_row = sigma.conjugate_part(j) as usize;
    let mut cells = Vec::new();
    for a in i..=foot_row {
        let lo = if a == foot_row {
            j as u32
        } else {
            sigma.part(a + 1).max(j as u32)
        };
        for b in lo..=sigma.part(a) {
            cells.push((a as u32, b));
        }
    }
    let hook = RimHook {
        comp: x.comp,
        cells,
        leg_length: (foot_row - i) as u32,
        foot: Node::new(foot_row as u32, j as u32, x.comp),
    };
    // removal: rows i..foot_row-1 take the length of the next row minus one,
    // the foot row is cut back to j-1
    let mut parts = sigma.parts().to_vec();
    for a in i..foot_row {
        parts[a - 1] = sigma.part(a + 1) - 1;
    }
    parts[foot_row - 1] = (j - 1) as u32;
    let mut comps = l.components().to_vec();
    comps[s - 1] = Partition::new(parts);
    (hook, Multipartition::new(comps))
}

/// For each node of the diagram: the node, its rim hook, and the shape left
/// after removal.
pub fn rim_hooks(l: &Multipartition) -> Vec<(Node, RimHook, Multipartition)> {
    diagram(l)
        .into_iter()
        .map(|x| {
            let (h, rest) = rim_hook_at(l, &x);
            (x, h, rest)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(parts: &[&[u32]]) -> Multipartition {
        Multipartition::new(parts.iter().map(|p| Partition::new(p.to_vec())).collect())
    }

    #[test]
    fn residue_exponents() {
        assert_eq!(Node::new(1, 1, 2).residue_exponent(), (0, 2));
        assert_eq!(Node::new(1, 3, 1).residue_exponent(), (2, 1));
        assert_eq!(Node::new(3, 1, 2).residue_exponent(), (-2, 2));
    }

    #[test]
    fn rim_hooks_small() {
        let row = mp(&[&[2]]);
        let (h, rest) = rim_hook_at(&row, &Node::new(1, 1, 1));
        assert_eq!(h.size(), 2);
        assert_eq!(h.leg_length, 0);
        assert_eq!(rest, mp(&[&[]]));

        let col = mp(&[&[1, 1]]);
        let (h, rest) = rim_hook_at(&col, &Node::new(1, 1, 1));
        assert_eq!(h.size(), 2);
        assert_eq!(h.leg_length, 1);
        assert_eq!(h.foot, Node::new(2, 1, 1));
        assert_eq!(rest, mp(&[&[]]));

        let single = mp(&[&[1]]);
        let (h, _) = rim_hook_at(&single, &Node::new(1, 1, 1));
        assert_eq!(h.size(), 1);
        assert_eq!(h.leg_length, 0);
    }

    #[test]
    fn hook_removal_reinserts() {
        // removing the rim hook at a node and re-adding its cells restores
        // the diagram
        let l = mp(&[&[3, 2], &[1]]);
        for (x, h, rest) in rim_hooks(&l) {
            let mut cells: Vec<(u32, u32, u32)> = super::diagram(&rest)
                .iter()
                .map(|n| (n.comp, n.row, n.col))
                .collect();
            for (a, b) in &h.cells {
                cells.push((h.comp, *a, *b));
            }
            let mut orig: Vec<(u32, u32, u32)> = super::diagram(&l)
                .iter()
                .map(|n| (n.comp, n.row, n.col))
                .collect();
            cells.sort();
            orig.sort();
            assert_eq!(cells, orig, "hook at {:?}", x);
        }
    }

    #[test]
    fn addable_removable() {
        let l = mp(&[&[2, 1], &[]]);
        assert_eq!(
            removable_nodes(&l),
            vec![Node::new(1, 2, 1), Node::new(2, 1, 1)]
        );
        assert_eq!(
            addable_nodes(&l),
            vec![Node::new(1, 3, 1), Node::new(2, 2, 1), Node::new(3, 1, 1), Node::new(1, 1, 2)]
        );
    }
}
