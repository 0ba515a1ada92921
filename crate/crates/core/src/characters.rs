//! Characters of the seminormal modules, Schur elements through L-symbols,
//! generic degrees, and the trace expansion that certifies them.

use crate::coeff::{specialize, ParameterSpec, Scalar};
use crate::combinatorics::{l_symbol, Multipartition, Partition};
use crate::error::{domain_err, Result};
use crate::hecke::seminormal::SeminormalOracle;
use crate::hecke::{Element, HeckeAlgebra};

/// Characters of the seminormal modules, evaluated as traces of oracle
/// blocks.
pub struct CharacterTable {
    oracle: SeminormalOracle,
}

impl CharacterTable {
    pub fn new(params: &ParameterSpec, n: u32) -> Result<CharacterTable> {
        Ok(CharacterTable {
            oracle: SeminormalOracle::new(params, n)?,
        })
    }

    pub fn shapes(&self) -> &[Multipartition] {
        &self.oracle.shapes
    }

    pub fn value(&self, lambda: &Multipartition, h: &Element) -> Result<Scalar> {
        character_value(&self.oracle, lambda, h)
    }
}

/// A Schur element with its unit bookkeeping.
#[derive(Clone, Debug)]
pub struct SchurElement {
    pub shape: Multipartition,
    /// symbolic value in q, Q_1..Q_r
    pub value: Scalar,
    /// exponent of the sign prefactor: n(r-1) + C(r,2) C(L,2)
    pub sign_exponent: u64,
    /// exponent of the q prefactor: r L (L-1)(2rL - r - 3)/12
    pub q_exponent: i64,
}

/// The Schur element s_lambda(q, Q) from the L-symbol product formula.
pub fn schur_element(lambda: &Multipartition, l: usize) -> Result<SchurElement> {
    if l < lambda.length() {
        return domain_err(format!(
            "symbol length {l} below the partition length {}",
            lambda.length()
        ));
    }
    let r = lambda.r();
    let n = lambda.size() as i64;
    let params = ParameterSpec::symbolic(r);
    let dom = &params.domain;
    let symbol = l_symbol(lambda, l)?;
    let beta = &symbol.beta;

    let mut num = dom.one();
    // prod_{s<t} (Q_s - Q_t)^L
    for s in 1..=r {
        for t in (s + 1)..=r {
            let d = params.qq[s - 1].sub(&params.qq[t - 1]);
            num = num.mul(&d.pow(l as i64));
        }
    }
    // prod_{s,t} prod_{alpha in B_s} prod_{k=1..alpha} (q^k Q_s - Q_t)
    for s in 1..=r {
        for t in 1..=r {
            for &alpha in &beta[s - 1] {
                for k in 1..=alpha {
                    let f = params.q.pow(k).mul(&params.qq[s - 1]).sub(&params.qq[t - 1]);
                    num = num.mul(&f);
                }
            }
        }
    }

    let mut den = params.q.sub(&dom.one()).pow(n);
    let mut qprod = dom.one();
    for s in 1..=r {
        qprod = qprod.mul(&params.qq[s - 1]);
    }
    den = den.mul(&qprod.pow(n));
    // prod_{s<=t} over symbol pairs (alpha_s > alpha_t when s = t)
    for s in 1..=r {
        for t in s..=r {
            for &alpha_s in &beta[s - 1] {
                for &alpha_t in &beta[t - 1] {
                    if s == t && alpha_s <= alpha_t {
                        continue;
                    }
                    let f = params
                        .q
                        .pow(alpha_s)
                        .mul(&params.qq[s - 1])
                        .sub(&params.q.pow(alpha_t).mul(&params.qq[t - 1]));
                    den = den.mul(&f);
                }
            }
        }
    }

    let sign_exponent = (n as u64) * (r as u64 - 1)
        + (r as u64 * (r as u64 - 1) / 2) * (l as u64 * (l as u64 - 1) / 2);
    let raw = (r as i64) * (l as i64) * (l as i64 - 1) * (2 * (r as i64) * (l as i64) - r as i64 - 3);
    assert!(raw % 12 == 0, "q-prefactor exponent must be integral");
    let q_exponent = raw / 12;

    let mut value = num.div(&den)?;
    if sign_exponent % 2 == 1 {
        value = value.neg();
    }
    value = value.mul(&params.q.pow(q_exponent));
    if value.is_zero() {
        return crate::error::internal_err("Schur element vanished symbolically");
    }
    Ok(SchurElement {
        shape: lambda.clone(),
        value,
        sign_exponent,
        q_exponent,
    })
}

/// D_lambda(q) = s_eta / s_lambda with eta = ((n),(0),..,(0)), as a reduced
/// fraction.
pub fn generic_degree(lambda: &Multipartition) -> Result<Scalar> {
    let r = lambda.r();
    let n = lambda.size();
    let mut comps = vec![Partition::empty(); r];
    comps[0] = Partition::new(vec![n]);
    let eta = Multipartition::new(comps);
    let l = lambda.length().max(1);
    let s_eta = schur_element(&eta, l)?;
    let s_lam = schur_element(lambda, l)?;
    s_eta.value.div(&s_lam.value)
}

/// chi^lambda(h): the trace of the oracle block at the shape.
pub fn character_value(
    oracle: &SeminormalOracle,
    lambda: &Multipartition,
    h: &Element,
) -> Result<Scalar> {
    let idx = oracle
        .shapes
        .iter()
        .position(|s| s == lambda)
        .ok_or_else(|| crate::error::Error::Domain(format!("{lambda} is not a shape of size {}", oracle.n)))?;
    Ok(oracle.character(idx, h))
}

/// Checks tau(h) = sum_lambda s_lambda^{-1} chi^lambda(h) on every basis
/// monomial.  In concrete mode the Schur elements are specialized first.
pub fn tau_expansion_check(alg: &HeckeAlgebra, n: u32) -> Result<bool> {
    let params = &alg.params;
    let oracle = SeminormalOracle::new(params, n)?;
    let mut inv_schur = Vec::with_capacity(oracle.shapes.len());
    for shape in &oracle.shapes {
        let s = schur_element(shape, shape.length().max(1))?;
        let val = if params.is_symbolic() {
            s.value
        } else {
            specialize(&s.value, params)?
        };
        match val.inv() {
            Some(i) => inv_schur.push(i),
            None => return domain_err("Schur element specializes to zero: not semisimple"),
        }
    }
    for m in alg.basis() {
        let mut h = Element::zero();
        h.add_term(m.clone(), params.domain.one());
        let lhs = alg.tau(&h);
        let mut rhs = params.domain.zero();
        for (idx, inv) in inv_schur.iter().enumerate() {
            rhs = rhs.add(&inv.mul(&oracle.character(idx, &h)));
        }
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{scalar_string, q_var_names, CoeffDomain};
    use crate::combinatorics::enumerate_multipartitions;

    fn mp(parts: &[&[u32]]) -> Multipartition {
        Multipartition::new(parts.iter().map(|p| Partition::new(p.to_vec())).collect())
    }

    #[test]
    fn schur_elements_for_n2() {
        // independent oracle: solve the trace expansion at n = 2 by hand:
        // tau(1) = 1 and tau(T_1) = 0 force s_(2) = 1+q, s_(11) = (1+q)/q
        let names = q_var_names(1);
        let s2 = schur_element(&mp(&[&[2]]), 1).unwrap();
        assert_eq!(scalar_string(&s2.value, &names), "1+q");
        let s11 = schur_element(&mp(&[&[1, 1]]), 2).unwrap();
        assert_eq!(scalar_string(&s11.value, &names), "(1+q)/q");
    }

    #[test]
    fn schur_element_of_point() {
        let s = schur_element(&mp(&[&[1]]), 1).unwrap();
        assert!(s.value.is_one());
    }

    #[test]
    fn l_stability() {
        for shape in [mp(&[&[2, 1]]), mp(&[&[1], &[2]]), mp(&[&[1, 1], &[1]])] {
            let l0 = shape.length().max(1);
            let a = schur_element(&shape, l0).unwrap();
            let b = schur_element(&shape, l0 + 1).unwrap();
            let c = schur_element(&shape, l0 + 2).unwrap();
            assert_eq!(a.value, b.value, "L-stability at {shape}");
            assert_eq!(b.value, c.value, "L-stability at {shape}");
        }
    }

    #[test]
    fn generic_degrees_small() {
        // lambda = eta gives 1; r=1, n=2: D_(11) = s_(2)/s_(11) = q
        let d = generic_degree(&mp(&[&[2]])).unwrap();
        assert!(d.is_one());
        let params = ParameterSpec::symbolic(1);
        let d11 = generic_degree(&mp(&[&[1, 1]])).unwrap();
        assert_eq!(d11, params.q);
    }

    #[test]
    fn character_values_n2() {
        let params = ParameterSpec::symbolic(1);
        let alg = HeckeAlgebra::new(params.clone(), 2);
        let oracle = SeminormalOracle::new(&params, 2).unwrap();
        let t1 = alg.generator(1);
        assert_eq!(character_value(&oracle, &mp(&[&[2]]), &t1).unwrap(), params.q);
        assert_eq!(
            character_value(&oracle, &mp(&[&[1, 1]]), &t1).unwrap(),
            params.domain.from_i64(-1)
        );
        // chi(1) = |Std|
        for shape in enumerate_multipartitions(1, 2).unwrap() {
            let v = character_value(&oracle, &shape, &alg.one()).unwrap();
            let count = crate::combinatorics::standard_tableaux(&shape).len() as i64;
            assert_eq!(v, params.domain.from_i64(count));
        }
    }

    #[test]
    fn tau_expansion_symbolic_and_concrete() {
        // (1,2) symbolically
        let params = ParameterSpec::symbolic(1);
        let alg = HeckeAlgebra::new(params, 2);
        assert!(tau_expansion_check(&alg, 2).unwrap());

        // (2,2) at a rational specialization with P_H != 0
        let d = CoeffDomain::Rational;
        let conc = ParameterSpec::concrete(
            2,
            d.clone(),
            d.from_i64(2),
            vec![d.from_i64(3), d.from_i64(5)],
        )
        .unwrap();
        let alg2 = HeckeAlgebra::new(conc, 2);
        assert!(tau_expansion_check(&alg2, 2).unwrap());
    }

    #[test]
    fn characters_linearly_independent() {
        // the chi^lambda are independent functionals on the monomial basis
        let params = ParameterSpec::symbolic(2);
        let alg = HeckeAlgebra::new(params.clone(), 2);
        let oracle = SeminormalOracle::new(&params, 2).unwrap();
        let basis = alg.basis();
        let mut rows = Vec::new();
        for idx in 0..oracle.shapes.len() {
            let row: Vec<_> = basis
                .iter()
                .map(|m| {
                    let mut h = Element::zero();
                    h.add_term(m.clone(), params.domain.one());
                    oracle.character(idx, &h)
                })
                .collect();
            rows.push(row);
        }
        let mat = crate::linalg::Matrix::from_rows(params.domain.clone(), rows);
        assert_eq!(mat.rank(), oracle.shapes.len());
    }

    #[test]
    fn trace_property_on_samples() {
        // chi(gh) = chi(hg) for some non-commuting pairs
        let params = ParameterSpec::symbolic(2);
        let alg = HeckeAlgebra::new(params.clone(), 2);
        let oracle = SeminormalOracle::new(&params, 2).unwrap();
        let g = alg.multiply(&alg.generator(0), &alg.generator(1));
        let h = alg.generator(1);
        for shape in enumerate_multipartitions(2, 2).unwrap() {
            let a = character_value(&oracle, &shape, &alg.multiply(&g, &h)).unwrap();
            let b = character_value(&oracle, &shape, &alg.multiply(&h, &g)).unwrap();
            assert_eq!(a, b);
        }
    }
}
