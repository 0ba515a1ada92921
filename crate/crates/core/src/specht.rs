//! Specht modules over exact fields: action matrices and Gram forms read
//! off through Murphy coordinates, simple-quotient dimensions, residue
//! blocks and the Morita reduction predicate.

use std::collections::BTreeMap;

use crate::coeff::{ParameterSpec, Scalar};
use crate::combinatorics::{enumerate_multipartitions, initial_tableau, Multipartition};
use crate::error::{internal_err, Result};
use crate::hecke::murphy::MurphyBasis;
use crate::hecke::seminormal::residue_of;
use crate::hecke::{m_st, Element, HeckeAlgebra};
use crate::linalg::Matrix;

/// Shared state for Specht-module computations at one parameter set.
pub struct SpechtContext<'a> {
    pub alg: &'a HeckeAlgebra,
    pub n: u32,
    pub murphy: MurphyBasis,
}

impl<'a> SpechtContext<'a> {
    pub fn new(alg: &'a HeckeAlgebra, n: u32, override_scale: bool) -> Result<Self> {
        let murphy = MurphyBasis::new(alg, n, override_scale)?;
        Ok(SpechtContext { alg, n, murphy })
    }

    pub fn shapes(&self) -> &[Multipartition] {
        &self.murphy.shapes
    }

    /// Murphy coordinates of h restricted to the block of one shape,
    /// asserting that nothing survives on shapes the cell filtration
    /// forbids (shapes not dominating the given one).
    fn coords(&self, h: &Element) -> Result<Vec<Scalar>> {
        self.murphy.coordinates(self.alg, h)
    }

    /// The matrix of right multiplication by T_i (i = 0 is T_0) on the
    /// Specht module of the given shape, in the m_t basis.
    pub fn specht_action(&self, shape_idx: usize, i: usize) -> Result<Matrix> {
        let tabs = &self.murphy.tableaux[shape_idx];
        let dim = tabs.len();
        let dom = self.alg.domain().clone();
        let mut out = Matrix::zero(dom, dim, dim);
        for (ti, t) in tabs.iter().enumerate() {
            let mt = self
                .alg
                .right_mul_word(&self.murphy.m_lambdas[shape_idx], &t.d().reduced_word());
            let hit = self.alg.right_mul_generator(&mt, i)?;
            let coords = self.coords(&hit)?;
            let row = self.read_cell_row(shape_idx, &coords)?;
            for (vi, c) in row.into_iter().enumerate() {
                out.set(ti, vi, c);
            }
        }
        Ok(out)
    }

    /// The matrix of right multiplication by L_k on the Specht module.
    pub fn specht_l_action(&self, shape_idx: usize, k: usize) -> Result<Matrix> {
        let tabs = &self.murphy.tableaux[shape_idx];
        let dim = tabs.len();
        let dom = self.alg.domain().clone();
        let mut out = Matrix::zero(dom, dim, dim);
        for (ti, t) in tabs.iter().enumerate() {
            let mt = self
                .alg
                .right_mul_word(&self.murphy.m_lambdas[shape_idx], &t.d().reduced_word());
            let hit = self.alg.right_mul_l(&mt, k);
            let coords = self.coords(&hit)?;
            let row = self.read_cell_row(shape_idx, &coords)?;
            for (vi, c) in row.into_iter().enumerate() {
                out.set(ti, vi, c);
            }
        }
        Ok(out)
    }

    /// Reads the coefficients of m_{t^lambda, v} out of full Murphy
    /// coordinates, checking the cellularity constraints: within the shape
    /// only s = t^lambda rows occur, and below the shape nothing occurs.
    fn read_cell_row(&self, shape_idx: usize, coords: &[Scalar]) -> Result<Vec<Scalar>> {
        let tabs = &self.murphy.tableaux[shape_idx];
        let range = self.murphy.shape_range(shape_idx);
        let mut row = vec![self.alg.domain().zero(); tabs.len()];
        for (pi, pair) in self.murphy.pairs.iter().enumerate() {
            let c = &coords[pi];
            if c.is_zero() {
                continue;
            }
            if pair.shape_idx == shape_idx {
                if pair.s_idx != 0 {
                    return internal_err("cell action leaked off the t^lambda row");
                }
                row[pair.t_idx] = c.clone();
            } else if pi >= range.end {
                // enumeration refines dominance, so later shapes do not dominate
                return internal_err("cell action leaked below the cell filtration");
            }
        }
        Ok(row)
    }

    /// Gram matrix of the cell form: <m_s, m_t> is the coefficient of
    /// m_lambda in m_{t^lambda s} m_{t t^lambda}.
    pub fn gram_matrix(&self, shape_idx: usize) -> Result<Matrix> {
        let shape = &self.murphy.shapes[shape_idx];
        let tabs = &self.murphy.tableaux[shape_idx];
        let dim = tabs.len();
        let t0 = initial_tableau(shape);
        let m_lam = &self.murphy.m_lambdas[shape_idx];
        let dom = self.alg.domain().clone();
        let target = self.murphy.pair_index(shape_idx, 0, 0);
        let mut out = Matrix::zero(dom, dim, dim);
        let rights: Vec<Element> = tabs
            .iter()
            .map(|t| m_st(self.alg, m_lam, t, &t0))
            .collect();
        for (si, s) in tabs.iter().enumerate() {
            let left = m_st(self.alg, m_lam, &t0, s);
            for (ti, right) in rights.iter().enumerate() {
                let prod = self.alg.multiply(&left, right);
                let coords = self.coords(&prod)?;
                out.set(si, ti, coords[target].clone());
            }
        }
        Ok(out)
    }

    /// rank of the Gram matrix: D^lambda is nonzero iff positive, and the
    /// rank is dim D^lambda.
    pub fn simple_dimension(&self, shape_idx: usize) -> Result<(bool, usize)> {
        let g = self.gram_matrix(shape_idx)?;
        let rank = g.rank();
        Ok((rank > 0, rank))
    }
}

/// A fully materialized Specht module: generator action matrices over the
/// concrete field and the Gram form of the cell basis.
pub struct SpechtModule {
    pub shape: Multipartition,
    pub dim: usize,
    /// matrices of right multiplication by T_0..T_{n-1}
    pub action: Vec<Matrix>,
    pub gram: Matrix,
}

impl<'a> SpechtContext<'a> {
    pub fn specht_module(&self, shape_idx: usize) -> Result<SpechtModule> {
        let action = (0..self.alg.n)
            .map(|i| self.specht_action(shape_idx, i))
            .collect::<Result<Vec<_>>>()?;
        let gram = self.gram_matrix(shape_idx)?;
        Ok(SpechtModule {
            shape: self.murphy.shapes[shape_idx].clone(),
            dim: self.murphy.tableaux[shape_idx].len(),
            action,
            gram,
        })
    }
}

/// The partition of multipartitions of n into residue classes: the fibers
/// of lambda -> multiset of residues of t^lambda.
#[derive(Clone, Debug)]
pub struct BlockPartition {
    pub shapes: Vec<Multipartition>,
    /// class id per shape, classes numbered in first-seen order
    pub class_of: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
}

pub fn residue_blocks(params: &ParameterSpec, n: u32) -> Result<BlockPartition> {
    let shapes = enumerate_multipartitions(params.r, n)?;
    let mut keys: BTreeMap<Vec<Scalar>, usize> = BTreeMap::new();
    let mut class_of = Vec::with_capacity(shapes.len());
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, shape) in shapes.iter().enumerate() {
        let t0 = initial_tableau(shape);
        let mut key: Vec<Scalar> = (1..=n as u8).map(|k| residue_of(params, &t0, k)).collect();
        key.sort();
        let next = keys.len();
        let id = *keys.entry(key).or_insert(next);
        if id == classes.len() {
            classes.push(Vec::new());
        }
        classes[id].push(i);
        class_of.push(id);
    }
    Ok(BlockPartition {
        shapes,
        class_of,
        classes,
    })
}

/// The residue multiset of one shape, for reporting.
pub fn residue_multiset(params: &ParameterSpec, shape: &Multipartition) -> Vec<Scalar> {
    let t0 = initial_tableau(shape);
    let mut key: Vec<Scalar> = (1..=shape.size() as u8)
        .map(|k| residue_of(params, &t0, k))
        .collect();
    key.sort();
    key
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::CoeffDomain;
    use crate::combinatorics::Partition;

    fn mp(parts: &[&[u32]]) -> Multipartition {
        Multipartition::new(parts.iter().map(|p| Partition::new(p.to_vec())).collect())
    }

    fn rational(r: usize, q: i64, qs: &[i64]) -> ParameterSpec {
        let d = CoeffDomain::Rational;
        ParameterSpec::concrete(
            r,
            d.clone(),
            d.from_i64(q),
            qs.iter().map(|&x| d.from_i64(x)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn gram_examples() {
        // lambda = ((1),(1)), r=2: <m,m> = Q1 - Q2 at a generic point
        let params = rational(2, 3, &[2, 7]);
        let alg = HeckeAlgebra::new(params.clone(), 2);
        let ctx = SpechtContext::new(&alg, 2, false).unwrap();
        let idx = ctx
            .shapes()
            .iter()
            .position(|s| s == &mp(&[&[1], &[1]]))
            .unwrap();
        let g = ctx.gram_matrix(idx).unwrap();
        assert_eq!(g.get(0, 0), &params.qq[0].sub(&params.qq[1]));

        // lambda = (2), r=1: Gram = [1+q]
        let p1 = rational(1, 3, &[1]);
        let alg1 = HeckeAlgebra::new(p1.clone(), 2);
        let ctx1 = SpechtContext::new(&alg1, 2, false).unwrap();
        let i2 = ctx1.shapes().iter().position(|s| s == &mp(&[&[2]])).unwrap();
        let g2 = ctx1.gram_matrix(i2).unwrap();
        assert_eq!(g2.get(0, 0), &p1.domain.from_i64(4));
    }

    #[test]
    fn gram_symmetric_everywhere() {
        let params = rational(2, 3, &[2, 7]);
        let alg = HeckeAlgebra::new(params, 2);
        let ctx = SpechtContext::new(&alg, 2, false).unwrap();
        for i in 0..ctx.shapes().len() {
            assert!(ctx.gram_matrix(i).unwrap().is_symmetric());
        }
    }

    #[test]
    fn action_examples() {
        // r=1, n=2, lambda=(2): T_1 acts by q
        let params = rational(1, 5, &[1]);
        let alg = HeckeAlgebra::new(params.clone(), 2);
        let ctx = SpechtContext::new(&alg, 2, false).unwrap();
        let i2 = ctx.shapes().iter().position(|s| s == &mp(&[&[2]])).unwrap();
        let m = ctx.specht_action(i2, 1).unwrap();
        assert_eq!(m.get(0, 0), &params.q);
    }

    #[test]
    fn braid_relation_on_action_matrices() {
        // lambda = (2,1), n=3: the action matrices satisfy the braid relation
        let params = rational(1, 3, &[1]);
        let alg = HeckeAlgebra::new(params, 3);
        let ctx = SpechtContext::new(&alg, 3, false).unwrap();
        let idx = ctx.shapes().iter().position(|s| s == &mp(&[&[2, 1]])).unwrap();
        let t1 = ctx.specht_action(idx, 1).unwrap();
        let t2 = ctx.specht_action(idx, 2).unwrap();
        let a = t1.mul(&t2).mul(&t1);
        let b = t2.mul(&t1).mul(&t2);
        assert!(a.sub(&b).is_zero());
    }

    #[test]
    fn l_action_is_triangular_with_residues() {
        // the matrix of L_k is upper triangular in the dominance-sorted
        // tableau basis with res_t(k) on the diagonal
        let params = rational(2, 3, &[2, 7]);
        let alg = HeckeAlgebra::new(params.clone(), 2);
        let ctx = SpechtContext::new(&alg, 2, false).unwrap();
        for (idx, shape) in ctx.shapes().iter().enumerate() {
            let tabs = &ctx.murphy.tableaux[idx];
            for k in 1..=2 {
                let m = ctx.specht_l_action(idx, k).unwrap();
                for (ti, t) in tabs.iter().enumerate() {
                    assert_eq!(
                        m.get(ti, ti),
                        &residue_of(&params, t, k as u8),
                        "diagonal at {shape}"
                    );
                    for vi in 0..tabs.len() {
                        if vi == ti || m.get(ti, vi).is_zero() {
                            continue;
                        }
                        // nonzero off-diagonal entries only at v strictly
                        // dominating t
                        assert!(
                            crate::combinatorics::tableau_dominates(&tabs[vi], &tabs[ti])
                                && vi != ti,
                            "off-diagonal at {shape}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn generic_grams_are_full_rank() {
        let params = rational(2, 3, &[2, 7]);
        let alg = HeckeAlgebra::new(params, 2);
        let ctx = SpechtContext::new(&alg, 2, false).unwrap();
        for i in 0..ctx.shapes().len() {
            let (nonzero, rank) = ctx.simple_dimension(i).unwrap();
            assert!(nonzero);
            assert_eq!(rank, ctx.murphy.tableaux[i].len());
        }
    }

    #[test]
    fn e2_simples_for_n2() {
        // q = -1: (2) has rank 0, (1,1) has rank 1
        let params = rational(1, -1, &[1]);
        let alg = HeckeAlgebra::new(params, 2);
        let ctx = SpechtContext::new(&alg, 2, false).unwrap();
        let i2 = ctx.shapes().iter().position(|s| s == &mp(&[&[2]])).unwrap();
        let i11 = ctx.shapes().iter().position(|s| s == &mp(&[&[1, 1]])).unwrap();
        assert_eq!(ctx.simple_dimension(i2).unwrap(), (false, 0));
        assert_eq!(ctx.simple_dimension(i11).unwrap(), (true, 1));
    }

    #[test]
    fn specht_module_packs_consistently() {
        let params = rational(2, -1, &[1, -1]);
        let alg = HeckeAlgebra::new(params, 2);
        let ctx = SpechtContext::new(&alg, 2, false).unwrap();
        for i in 0..ctx.shapes().len() {
            let m = ctx.specht_module(i).unwrap();
            assert_eq!(m.action.len(), 2);
            assert_eq!(m.gram.rows, m.dim);
            // the form is invariant: A G = G A^T for the generators, which
            // for self-adjoint generators means A G symmetric
            for a in &m.action {
                assert!(a.mul(&m.gram).is_symmetric());
            }
        }
    }

    #[test]
    fn cyclotomic_field_classification() {
        // e = 3 realized inside Q(zeta_3): simples are the 3-restricted
        // partitions, matching the prime-field route
        let d = crate::coeff::CoeffDomain::Cyclotomic(3);
        let params = ParameterSpec::concrete(
            1,
            d.clone(),
            crate::coeff::Scalar::Cyc(crate::coeff::CycElt::zeta_pow(3, 1)),
            vec![d.one()],
        )
        .unwrap();
        assert_eq!(params.e, crate::coeff::EOrder::Finite(3));
        for n in 1..=3u32 {
            let alg = HeckeAlgebra::new(params.clone(), n as usize);
            let ctx = SpechtContext::new(&alg, n, false).unwrap();
            for (i, shape) in ctx.shapes().iter().enumerate() {
                let (nonzero, _) = ctx.simple_dimension(i).unwrap();
                assert_eq!(nonzero, shape.component(1).is_e_restricted(3), "{shape} at n={n}");
            }
        }
    }

    #[test]
    fn blocks_at_degenerate_point() {
        // r=1, n=2, q=-1, Q=1: (2) and (1,1) share the residue multiset
        let params = rational(1, -1, &[1]);
        let blocks = residue_blocks(&params, 2).unwrap();
        assert_eq!(blocks.classes.len(), 1);
        // generic: every shape in its own class
        let gen = rational(1, 3, &[1]);
        let blocks = residue_blocks(&gen, 2).unwrap();
        assert_eq!(blocks.classes.len(), 2);
        // n=0: a single class
        let blocks = residue_blocks(&gen, 0).unwrap();
        assert_eq!(blocks.classes.len(), 1);
    }

    #[test]
    fn degenerate_zero_parameters_classification() {
        // q of order e, all Q_s = 0: the nonzero simples are exactly
        // ((0),...,(0), mu) with mu e-restricted in the last component
        let params = rational(2, -1, &[0, 0]);
        for n in 1..=3u32 {
            let alg = HeckeAlgebra::new(params.clone(), n as usize);
            let ctx = SpechtContext::new(&alg, n, false).unwrap();
            for (i, shape) in ctx.shapes().iter().enumerate() {
                let (nonzero, _) = ctx.simple_dimension(i).unwrap();
                let expect = shape.component(1).is_empty()
                    && shape.component(2).is_e_restricted(2);
                assert_eq!(nonzero, expect, "shape {shape} at n={n}");
            }
        }
    }

    #[test]
    fn action_matrices_satisfy_relations() {
        // every Specht module carries a representation: all defining
        // relations hold for the action matrices, at two specializations
        for params in [rational(2, 3, &[2, 7]), rational(2, -1, &[1, -1])] {
            let alg = HeckeAlgebra::new(params.clone(), 2);
            let ctx = SpechtContext::new(&alg, 2, false).unwrap();
            let one = params.domain.one();
            for idx in 0..ctx.shapes().len() {
                let t0 = ctx.specht_action(idx, 0).unwrap();
                let t1 = ctx.specht_action(idx, 1).unwrap();
                let dim = t0.rows;
                let id = crate::linalg::Matrix::identity(params.domain.clone(), dim);
                // order relation
                let prod = t0
                    .sub(&id.scale(&params.qq[0]))
                    .mul(&t0.sub(&id.scale(&params.qq[1])));
                assert!(prod.is_zero(), "order relation at shape {idx}");
                // quadratic relation
                let quad = t1.sub(&id.scale(&params.q)).mul(&t1.add(&id.scale(&one)));
                assert!(quad.is_zero(), "quadratic relation at shape {idx}");
                // mixed braid
                let a = t0.mul(&t1).mul(&t0).mul(&t1);
                let b = t1.mul(&t0).mul(&t1).mul(&t0);
                assert!(a.sub(&b).is_zero(), "mixed braid at shape {idx}");
            }
        }
    }

    #[test]
    fn gram_form_is_associative() {
        // <x h, y> = <x, y h*> for sampled pairs via matrices:
        // G satisfies  A_i G = G A_i^*  where A_i is the action matrix and
        // star of a generator is itself, so A_i G must be symmetric.
        let params = rational(2, 3, &[2, 7]);
        let alg = HeckeAlgebra::new(params, 2);
        let ctx = SpechtContext::new(&alg, 2, false).unwrap();
        for idx in 0..ctx.shapes().len() {
            let g = ctx.gram_matrix(idx).unwrap();
            for i in 0..2 {
                let a = ctx.specht_action(idx, i).unwrap();
                let ag = a.mul(&g);
                assert!(ag.is_symmetric(), "A_{i} G symmetric at shape {idx}");
            }
        }
    }
}
