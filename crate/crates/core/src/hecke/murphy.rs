//! The Murphy (standard) basis m_st and exact coordinates with respect to
//! it: one factored solve per parameter set, reused for every reduction.

use std::collections::BTreeMap;

use crate::coeff::Scalar;
use crate::combinatorics::{
    enumerate_multipartitions, standard_tableaux, Multipartition, StandardTableau,
};
use crate::error::{domain_err, internal_err, Result};
use crate::hecke::{m_lambda, m_st, Element, HeckeAlgebra, Monomial};
use crate::linalg::{Matrix, Solver};

/// Index of one Murphy basis element: shape and the two tableaux.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MurphyPair {
    pub shape_idx: usize,
    pub s_idx: usize,
    pub t_idx: usize,
}

/// All pairs (s, t) of same-shape standard tableaux, grouped by shape with
/// shapes in the dominance-refining enumeration order, together with the
/// normal forms of the m_st and a factored basis-change solver.
pub struct MurphyBasis {
    pub shapes: Vec<Multipartition>,
    pub tableaux: Vec<Vec<StandardTableau>>,
    pub m_lambdas: Vec<Element>,
    pub pairs: Vec<MurphyPair>,
    pub elements: Vec<Element>,
    pub monomial_index: BTreeMap<Monomial, usize>,
    solver: Solver,
}

/// Desk-scale guard: exact solves beyond this dimension are refused unless
/// the caller overrides.
pub const SCALE_LIMIT: usize = 20_000;

impl MurphyBasis {
    pub fn new(alg: &HeckeAlgebra, n: u32, override_scale: bool) -> Result<MurphyBasis> {
        let dim = alg.dim();
        if dim > SCALE_LIMIT && !override_scale {
            return domain_err(format!(
                "r^n n! = {dim} exceeds the desk-scale limit {SCALE_LIMIT}; pass the override to proceed"
            ));
        }
        if alg.params.is_symbolic() && n > 3 {
            return domain_err("symbolic Murphy coordinates are limited to n <= 3");
        }
        let shapes = enumerate_multipartitions(alg.params.r, n)?;
        let tableaux: Vec<Vec<StandardTableau>> =
            shapes.iter().map(standard_tableaux).collect();
        let m_lambdas: Vec<Element> = shapes.iter().map(|l| m_lambda(alg, l)).collect();
        let mut pairs = Vec::new();
        let mut elements = Vec::new();
        for (li, tabs) in tableaux.iter().enumerate() {
            for (si, s) in tabs.iter().enumerate() {
                for (ti, t) in tabs.iter().enumerate() {
                    pairs.push(MurphyPair {
                        shape_idx: li,
                        s_idx: si,
                        t_idx: ti,
                    });
                    elements.push(m_st(alg, &m_lambdas[li], s, t));
                }
            }
        }
        if pairs.len() != dim {
            return internal_err(format!(
                "Murphy family has {} elements, expected {dim}",
                pairs.len()
            ));
        }
        let monomial_index = alg.basis_index();
        // columns of the solve are the Murphy elements; rows are monomials
        let mut cols = Vec::with_capacity(dim);
        for e in &elements {
            cols.push(alg.coordinates(e, &monomial_index));
        }
        let mut mat = Matrix::zero(alg.domain().clone(), dim, dim);
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                if !v.is_zero() {
                    mat.set(i, j, v.clone());
                }
            }
        }
        let solver = Solver::new(mat);
        if solver.rank() != dim {
            return internal_err(
                "Murphy family is not a basis; the standard basis theorem guarantees invertibility",
            );
        }
        Ok(MurphyBasis {
            shapes,
            tableaux,
            m_lambdas,
            pairs,
            elements,
            monomial_index,
            solver,
        })
    }

    pub fn dim(&self) -> usize {
        self.pairs.len()
    }

    /// Exact coordinates of h in the Murphy basis.
    pub fn coordinates(&self, alg: &HeckeAlgebra, h: &Element) -> Result<Vec<Scalar>> {
        let rhs = alg.coordinates(h, &self.monomial_index);
        match self.solver.solve(&rhs) {
            Some(x) => Ok(x),
            None => internal_err("Murphy coordinate solve is inconsistent"),
        }
    }

    /// Range of pair indices belonging to one shape.
    pub fn shape_range(&self, shape_idx: usize) -> std::ops::Range<usize> {
        let mut start = 0;
        for (li, tabs) in self.tableaux.iter().enumerate() {
            let block = tabs.len() * tabs.len();
            if li == shape_idx {
                return start..start + block;
            }
            start += block;
        }
        start..start
    }

    pub fn pair_index(&self, shape_idx: usize, s_idx: usize, t_idx: usize) -> usize {
        let tabs = self.tableaux[shape_idx].len();
        self.shape_range(shape_idx).start + s_idx * tabs + t_idx
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{CoeffDomain, ParameterSpec};

    fn rational_params(r: usize, qv: i64, qs: &[i64]) -> ParameterSpec {
        let d = CoeffDomain::Rational;
        ParameterSpec::concrete(
            r,
            d.clone(),
            d.from_i64(qv),
            qs.iter().map(|&x| d.from_i64(x)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn murphy_family_is_basis() {
        let params = rational_params(2, 3, &[2, 7]);
        let alg = HeckeAlgebra::new(params, 2);
        let mb = MurphyBasis::new(&alg, 2, false).unwrap();
        assert_eq!(mb.dim(), 8);
    }

    #[test]
    fn m_lambda_has_unit_coordinates() {
        let params = rational_params(2, 3, &[2, 7]);
        let alg = HeckeAlgebra::new(params, 2);
        let mb = MurphyBasis::new(&alg, 2, false).unwrap();
        for (li, _) in mb.shapes.iter().enumerate() {
            let coords = mb.coordinates(&alg, &mb.m_lambdas[li]).unwrap();
            // t^lambda is the first tableau of each shape
            let expect = mb.pair_index(li, 0, 0);
            for (i, c) in coords.iter().enumerate() {
                if i == expect {
                    assert!(c.is_one());
                } else {
                    assert!(c.is_zero());
                }
            }
        }
    }

    #[test]
    fn identity_reexpands() {
        let params = rational_params(1, 2, &[1]);
        let alg = HeckeAlgebra::new(params, 2);
        let mb = MurphyBasis::new(&alg, 2, false).unwrap();
        let coords = mb.coordinates(&alg, &alg.one()).unwrap();
        // multiply back: sum coords * m_st = 1
        let mut acc = Element::zero();
        for (c, e) in coords.iter().zip(&mb.elements) {
            acc = acc.add(&e.scale(c));
        }
        assert_eq!(acc, alg.one());
    }

    #[test]
    fn star_transposes_coordinates() {
        let params = rational_params(2, 3, &[2, 7]);
        let alg = HeckeAlgebra::new(params.clone(), 2);
        let mb = MurphyBasis::new(&alg, 2, false).unwrap();
        // try h = T_1 T_0
        let h = alg.multiply(&alg.generator(1), &alg.generator(0));
        let ch = mb.coordinates(&alg, &h).unwrap();
        let cs = mb.coordinates(&alg, &alg.star(&h)).unwrap();
        for (pi, pair) in mb.pairs.iter().enumerate() {
            let swapped = mb.pair_index(pair.shape_idx, pair.t_idx, pair.s_idx);
            assert_eq!(ch[pi], cs[swapped]);
        }
    }
}
