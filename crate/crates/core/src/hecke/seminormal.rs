//! Seminormal representations: the simple modules in the semisimple case,
//! built directly on standard tableaux.  Their direct sum is a faithful
//! representation and doubles as the independent oracle for the rewriting
//! engine.

use std::collections::BTreeMap;

use crate::coeff::{specialize, ParameterSpec, Scalar};
use crate::combinatorics::{
    enumerate_multipartitions, standard_tableaux, Multipartition, StandardTableau,
};
use crate::error::{domain_err, Result};
use crate::hecke::{p_hecke, Element, Monomial};
use crate::linalg::Matrix;

/// One seminormal module: generator matrices over Std(lambda).
#[derive(Clone)]
pub struct SeminormalRep {
    pub shape: Multipartition,
    pub basis: Vec<StandardTableau>,
    /// matrices of T_0, .., T_{n-1}; rows act from the left on row vectors
    pub generators: Vec<Matrix>,
    /// diagonal of L_k per tableau: l_diag[k-1][t]
    pub l_diag: Vec<Vec<Scalar>>,
}

/// Residue of entry k in a tableau, realized at the parameters.
pub fn residue_of(params: &ParameterSpec, t: &StandardTableau, k: u8) -> Scalar {
    let (e, s) = t.residue_exponent(k);
    params.residue(e, s)
}

/// Builds the seminormal module for one shape.  Fails when a residue
/// separation denominator vanishes, which cannot happen in symbolic mode.
pub fn seminormal_rep(params: &ParameterSpec, shape: &Multipartition) -> Result<SeminormalRep> {
    let n = shape.size() as usize;
    let tabs = standard_tableaux(shape);
    let dim = tabs.len();
    let dom = params.domain.clone();
    let index: BTreeMap<_, usize> = tabs
        .iter()
        .enumerate()
        .map(|(i, t)| (t.rows().to_vec(), i))
        .collect();

    let mut generators = Vec::with_capacity(n);
    // T_0 acts as the diagonal of first-entry residues
    let mut t0 = Matrix::zero(dom.clone(), dim, dim);
    for (ti, t) in tabs.iter().enumerate() {
        t0.set(ti, ti, residue_of(params, t, 1));
    }
    generators.push(t0);

    for i in 1..n {
        let mut m = Matrix::zero(dom.clone(), dim, dim);
        for (ti, t) in tabs.iter().enumerate() {
            let pi = t.position_of(i as u8);
            let pj = t.position_of(i as u8 + 1);
            if pi.comp == pj.comp && pi.row == pj.row {
                m.set(ti, ti, params.q.clone());
            } else if pi.comp == pj.comp && pi.col == pj.col {
                m.set(ti, ti, dom.from_i64(-1));
            } else {
                let swapped = swap_entries(t, i as u8);
                let si = *index
                    .get(&swapped)
                    .expect("swapping non-adjacent entries keeps the tableau standard");
                let rt = residue_of(params, t, i as u8);
                let rs = residue_of(params, &tabs[si], i as u8);
                let denom = rt.sub(&rs);
                let dinv = match denom.inv() {
                    Some(d) => d,
                    None => {
                        return domain_err(
                            "not semisimple: equal residues collapse the seminormal form",
                        )
                    }
                };
                // The diagonal carries the residue of the swapped tableau:
                // this is the reading forced by the braid relations, and it
                // degenerates to q and -1 in the same-row/same-column cases.
                let diag = params.q.sub(&dom.one()).mul(&rs).mul(&dinv).neg();
                let off = params.q.mul(&rt).sub(&rs).mul(&dinv);
                m.set(ti, ti, diag);
                m.set(ti, si, off);
            }
        }
        generators.push(m);
    }

    let l_diag = (1..=n)
        .map(|k| {
            tabs.iter()
                .map(|t| residue_of(params, t, k as u8))
                .collect()
        })
        .collect();

    Ok(SeminormalRep {
        shape: shape.clone(),
        basis: tabs,
        generators,
        l_diag,
    })
}

impl SeminormalRep {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Image of a basis monomial L^a T_w.
    pub fn image_monomial(&self, m: &Monomial) -> Matrix {
        let dom = self.generators[0].domain.clone();
        let dim = self.dim();
        // start from the diagonal prod_k L_k^{a_k}
        let mut d = Matrix::identity(dom, dim);
        for (k, &e) in m.a.iter().enumerate() {
            if e == 0 {
                continue;
            }
            for t in 0..dim {
                let v = d.get(t, t).mul(&self.l_diag[k][t].pow(e as i64));
                d.set(t, t, v);
            }
        }
        for &i in &m.w.reduced_word() {
            d = d.mul(&self.generators[i]);
        }
        d
    }

    pub fn image(&self, h: &Element) -> Matrix {
        let dom = self.generators[0].domain.clone();
        let mut acc = Matrix::zero(dom, self.dim(), self.dim());
        for (m, c) in &h.terms {
            acc = acc.add(&self.image_monomial(m).scale(c));
        }
        acc
    }

    /// Checks every defining relation as an exact matrix identity.
    pub fn verify_relations(&self, params: &ParameterSpec) -> Result<()> {
        let dom = params.domain.clone();
        let dim = self.dim();
        let id = Matrix::identity(dom.clone(), dim);
        let n = self.generators.len();
        let gens = &self.generators;
        // (T_0 - Q_1)..(T_0 - Q_r) = 0
        let mut prod = id.clone();
        for s in 1..=params.r {
            prod = prod.mul(&gens[0].sub(&id.scale(&params.qq[s - 1])));
        }
        if !prod.is_zero() {
            return domain_err(format!("order relation fails at {}", self.shape));
        }
        // (T_i - q)(T_i + 1) = 0
        for i in 1..n {
            let lhs = gens[i].sub(&id.scale(&params.q)).mul(&gens[i].add(&id));
            if !lhs.is_zero() {
                return domain_err(format!("quadratic relation fails at {} i={i}", self.shape));
            }
        }
        // T_0 T_1 T_0 T_1 = T_1 T_0 T_1 T_0
        if n >= 2 {
            let a = gens[0].mul(&gens[1]).mul(&gens[0]).mul(&gens[1]);
            let b = gens[1].mul(&gens[0]).mul(&gens[1]).mul(&gens[0]);
            if !a.sub(&b).is_zero() {
                return domain_err(format!("mixed braid relation fails at {}", self.shape));
            }
        }
        // adjacent braid and distant commutation
        for i in 1..n.saturating_sub(1) {
            let a = gens[i].mul(&gens[i + 1]).mul(&gens[i]);
            let b = gens[i + 1].mul(&gens[i]).mul(&gens[i + 1]);
            if !a.sub(&b).is_zero() {
                return domain_err(format!("braid relation fails at {} i={i}", self.shape));
            }
        }
        for i in 0..n {
            for j in i + 2..n {
                let a = gens[i].mul(&gens[j]);
                let b = gens[j].mul(&gens[i]);
                if !a.sub(&b).is_zero() {
                    return domain_err(format!(
                        "distant commutation fails at {} ({i},{j})",
                        self.shape
                    ));
                }
            }
        }
        Ok(())
    }
}

fn swap_entries(t: &StandardTableau, i: u8) -> Vec<Vec<Vec<u8>>> {
    t.rows()
        .iter()
        .map(|comp| {
            comp.iter()
                .map(|row| {
                    row.iter()
                        .map(|&e| {
                            if e == i {
                                i + 1
                            } else if e == i + 1 {
                                i
                            } else {
                                e
                            }
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}

/// The direct sum of all seminormal modules: a faithful representation in
/// the semisimple case.
pub struct SeminormalOracle {
    pub params: ParameterSpec,
    pub n: u32,
    pub shapes: Vec<Multipartition>,
    pub reps: Vec<SeminormalRep>,
}

impl SeminormalOracle {
    /// In concrete mode this refuses parameters where the semisimplicity
    /// polynomial vanishes.
    pub fn new(params: &ParameterSpec, n: u32) -> Result<SeminormalOracle> {
        if !params.is_symbolic() {
            let p = p_hecke(params.r, n);
            let val = specialize(&p, params)?;
            if val.is_zero() {
                return domain_err("not semisimple: P_H(q, Q) = 0 at these parameters");
            }
        }
        let shapes = enumerate_multipartitions(params.r, n)?;
        let reps = shapes
            .iter()
            .map(|l| seminormal_rep(params, l))
            .collect::<Result<Vec<_>>>()?;
        Ok(SeminormalOracle {
            params: params.clone(),
            n,
            shapes,
            reps,
        })
    }

    pub fn image(&self, h: &Element) -> Vec<Matrix> {
        self.reps.iter().map(|r| r.image(h)).collect()
    }

    pub fn image_monomial(&self, m: &Monomial) -> Vec<Matrix> {
        self.reps.iter().map(|r| r.image_monomial(m)).collect()
    }

    /// Concatenated entries of a block-diagonal image, a vector of length
    /// sum of dim^2 = r^n n!.
    pub fn flatten(blocks: &[Matrix]) -> Vec<Scalar> {
        let mut out = Vec::new();
        for b in blocks {
            for i in 0..b.rows {
                out.extend(b.row(i).iter().cloned());
            }
        }
        out
    }

    /// chi^lambda(h): the trace of the block at the given shape index.
    pub fn character(&self, shape_idx: usize, h: &Element) -> Scalar {
        let m = self.reps[shape_idx].image(h);
        let mut acc = self.params.domain.zero();
        for i in 0..m.rows {
            acc = acc.add(m.get(i, i));
        }
        acc
    }

    pub fn verify_relations(&self) -> Result<()> {
        for rep in &self.reps {
            rep.verify_relations(&self.params)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{scalar_string, q_var_names};
    use crate::combinatorics::Partition;
    use crate::hecke::HeckeAlgebra;

    fn mp(parts: &[&[u32]]) -> Multipartition {
        Multipartition::new(parts.iter().map(|p| Partition::new(p.to_vec())).collect())
    }

    #[test]
    fn one_dimensional_actions() {
        // lambda = (n): every T_i acts by q; lambda = (1^n): every T_i by -1
        let params = ParameterSpec::symbolic(1);
        let row = seminormal_rep(&params, &mp(&[&[3]])).unwrap();
        for i in 1..3 {
            assert_eq!(row.generators[i].get(0, 0), &params.q);
        }
        let col = seminormal_rep(&params, &mp(&[&[1, 1, 1]])).unwrap();
        for i in 1..3 {
            assert_eq!(col.generators[i].get(0, 0), &params.domain.from_i64(-1));
        }
    }

    #[test]
    fn two_component_example() {
        // lambda = ((1),(1)): T_0 = diag(Q1, Q2) and the displayed T_1 entries
        let params = ParameterSpec::symbolic(2);
        let rep = seminormal_rep(&params, &mp(&[&[1], &[1]])).unwrap();
        assert_eq!(rep.generators[0].get(0, 0), &params.qq[0]);
        assert_eq!(rep.generators[0].get(1, 1), &params.qq[1]);
        let names = q_var_names(2);
        let d = scalar_string(rep.generators[1].get(0, 0), &names);
        assert_eq!(d, "(Q2-q*Q2)/(-Q2+Q1)");
        let off = scalar_string(rep.generators[1].get(0, 1), &names);
        assert_eq!(off, "(-Q2+q*Q1)/(-Q2+Q1)");
        // the two diagonal entries weight the opposite component parameters
        let d2 = scalar_string(rep.generators[1].get(1, 1), &names);
        assert_eq!(d2, "(-Q1+q*Q1)/(-Q2+Q1)");
    }

    #[test]
    fn relations_hold_symbolically() {
        for (r, n) in [(1usize, 3u32), (2, 2), (3, 2)] {
            let params = ParameterSpec::symbolic(r);
            let oracle = SeminormalOracle::new(&params, n).unwrap();
            oracle.verify_relations().unwrap();
        }
    }

    #[test]
    fn oracle_matches_engine() {
        // images respect right multiplication by generators
        let params = ParameterSpec::symbolic(2);
        let alg = HeckeAlgebra::new(params.clone(), 2);
        let oracle = SeminormalOracle::new(&params, 2).unwrap();
        for m in alg.basis() {
            let mut h = Element::zero();
            h.add_term(m.clone(), params.domain.one());
            for i in 0..2 {
                let lhs = oracle.image(&alg.right_mul_generator(&h, i).unwrap());
                let gen_img = oracle.image(&alg.generator(i));
                let rhs: Vec<Matrix> = oracle
                    .image(&h)
                    .iter()
                    .zip(&gen_img)
                    .map(|(a, b)| a.mul(b))
                    .collect();
                for (a, b) in lhs.iter().zip(&rhs) {
                    assert!(a.sub(b).is_zero(), "engine vs oracle at {:?} T_{i}", m);
                }
            }
        }
    }
}
