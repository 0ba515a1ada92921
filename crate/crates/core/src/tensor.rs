//! Tensor-space realizations: the deformed place-permutation action of the
//! type-A generators, the extension to T_0 through the block-permutation
//! operators, relation verification and Schur-Weyl dimension identities.

use crate::coeff::{CoeffDomain, ParameterSpec, Scalar};
use crate::combinatorics::{enumerate_multipartitions, ssyt_count, standard_tableaux, Multipartition};
use crate::error::{domain_err, Result};
use crate::linalg::{commutant_dimension, Matrix};

/// V^(tensor n) with V split into r blocks of sizes d_1..d_r; the working
/// field carries v with q = v^2 and the cyclotomic parameters.
pub struct TensorSpace {
    pub d_split: Vec<u32>,
    pub d: u32,
    pub n: u32,
    pub domain: CoeffDomain,
    pub v: Scalar,
    pub qq: Vec<Scalar>,
    /// all tuples of I(d;n) in lexicographic order
    indices: Vec<Vec<u8>>,
}

fn all_indices(d: u32, n: u32) -> Vec<Vec<u8>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::with_capacity(out.len() * d as usize);
        for a in &out {
            for x in 1..=d as u8 {
                let mut b = a.clone();
                b.push(x);
                next.push(b);
            }
        }
        out = next;
    }
    out
}

impl TensorSpace {
    /// Symbolic coefficients in v, Q_1..Q_r.
    pub fn symbolic(d_split: Vec<u32>, n: u32) -> Result<TensorSpace> {
        let r = d_split.len();
        let params = ParameterSpec::symbolic(r);
        TensorSpace::with_values(d_split, n, params.domain.clone(), params.q, params.qq)
    }

    pub fn with_values(
        d_split: Vec<u32>,
        n: u32,
        domain: CoeffDomain,
        v: Scalar,
        qq: Vec<Scalar>,
    ) -> Result<TensorSpace> {
        if d_split.is_empty() || d_split.iter().any(|&x| x == 0) {
            return domain_err("the dimension split needs positive parts");
        }
        if qq.len() != d_split.len() {
            return domain_err("one cyclotomic parameter per block");
        }
        if v.is_zero() || qq.iter().any(|x| x.is_zero()) {
            return domain_err("v and the Q_s must be invertible");
        }
        let d: u32 = d_split.iter().sum();
        let indices = all_indices(d, n);
        Ok(TensorSpace {
            d_split,
            d,
            n,
            domain,
            v,
            qq,
            indices,
        })
    }

    pub fn dim(&self) -> usize {
        self.indices.len()
    }

    pub fn r(&self) -> usize {
        self.d_split.len()
    }

    /// gamma(a): the block containing letter a (1-based).
    fn gamma(&self, a: u8) -> usize {
        let mut acc = 0u32;
        for (s, &ds) in self.d_split.iter().enumerate() {
            acc += ds;
            if (a as u32) <= acc {
                return s + 1;
            }
        }
        panic!("letter out of range");
    }

    fn index_of(&self, a: &[u8]) -> usize {
        let mut idx = 0usize;
        for &x in a {
            idx = idx * self.d as usize + (x as usize - 1);
        }
        idx
    }

    /// The deformed place-permutation matrix of the j-th type-A generator,
    /// 1 <= j < n.
    pub fn jimbo(&self, j: usize) -> Matrix {
        assert!(j >= 1 && (j as u32) < self.n);
        let dim = self.dim();
        let mut m = Matrix::zero(self.domain.clone(), dim, dim);
        let vinv = self.v.inv().expect("v invertible");
        let vv = self.v.sub(&vinv);
        for (ai, a) in self.indices.iter().enumerate() {
            let x = a[j - 1];
            let y = a[j];
            if x == y {
                m.set(ai, ai, self.v.clone());
            } else {
                let mut b = a.clone();
                b.swap(j - 1, j);
                let bi = self.index_of(&b);
                if x > y {
                    m.set(ai, bi, self.domain.one());
                } else {
                    m.set(ai, bi, self.domain.one());
                    m.set(ai, ai, vv.clone());
                }
            }
        }
        m
    }

    pub fn jimbo_inverse(&self, j: usize) -> Matrix {
        // (T - v)(T + 1/v) = 0 gives T^{-1} = T - (v - 1/v)
        let m = self.jimbo(j);
        let vinv = self.v.inv().expect("v invertible");
        let vv = self.v.sub(&vinv);
        let id = Matrix::identity(self.domain.clone(), self.dim());
        m.sub(&id.scale(&vv))
    }

    /// The diagonal operator weighting by the block parameter of the first
    /// letter.
    pub fn varpi(&self) -> Matrix {
        let dim = self.dim();
        let mut m = Matrix::zero(self.domain.clone(), dim, dim);
        for (ai, a) in self.indices.iter().enumerate() {
            let s = if self.n == 0 { 1 } else { self.gamma(a[0]) };
            m.set(ai, ai, self.qq[s - 1].clone());
        }
        m
    }

    /// The block-permutation operator: acts as the deformed generator
    /// inside one block and as the plain swap across blocks.
    pub fn s_op(&self, j: usize) -> Matrix {
        assert!(j >= 1 && (j as u32) < self.n);
        let dim = self.dim();
        let mut m = Matrix::zero(self.domain.clone(), dim, dim);
        let jim = self.jimbo(j);
        for (ai, a) in self.indices.iter().enumerate() {
            if self.gamma(a[j - 1]) == self.gamma(a[j]) {
                for bi in 0..dim {
                    let c = jim.get(ai, bi);
                    if !c.is_zero() {
                        m.set(ai, bi, c.clone());
                    }
                }
            } else {
                let mut b = a.clone();
                b.swap(j - 1, j);
                let bi = self.index_of(&b);
                m.set(ai, bi, self.domain.one());
            }
        }
        m
    }

    /// T_0 = varpi S_1 .. S_{n-1} T~_{n-1}^{-1} .. T~_1^{-1}.
    pub fn t0(&self) -> Matrix {
        let mut m = self.varpi();
        for j in 1..self.n as usize {
            m = m.mul(&self.s_op(j));
        }
        for j in (1..self.n as usize).rev() {
            m = m.mul(&self.jimbo_inverse(j));
        }
        m
    }

    /// The Ariki-Koike generator family: T_0 and the rescaled T_j = v T~_j,
    /// which satisfy (T_j - q)(T_j + 1) = 0 with q = v^2.
    pub fn ak_generators(&self) -> Vec<Matrix> {
        let mut gens = vec![self.t0()];
        for j in 1..self.n as usize {
            gens.push(self.jimbo(j).scale(&self.v));
        }
        gens
    }

    /// Every defining relation of the cyclotomic algebra as an exact matrix
    /// identity on tensor space.
    pub fn verify_relations(&self) -> Result<()> {
        let gens = self.ak_generators();
        let n = gens.len();
        let id = Matrix::identity(self.domain.clone(), self.dim());
        let q = self.v.mul(&self.v);
        let mut prod = id.clone();
        for s in 1..=self.r() {
            prod = prod.mul(&gens[0].sub(&id.scale(&self.qq[s - 1])));
        }
        if !prod.is_zero() {
            return domain_err("tensor order relation (T_0 - Q_1)..(T_0 - Q_r) failed");
        }
        for j in 1..n {
            let lhs = gens[j].sub(&id.scale(&q)).mul(&gens[j].add(&id));
            if !lhs.is_zero() {
                return domain_err(format!("tensor quadratic relation failed at {j}"));
            }
        }
        if n >= 2 {
            let a = gens[0].mul(&gens[1]).mul(&gens[0]).mul(&gens[1]);
            let b = gens[1].mul(&gens[0]).mul(&gens[1]).mul(&gens[0]);
            if !a.sub(&b).is_zero() {
                return domain_err("tensor mixed braid relation failed");
            }
        }
        for j in 1..n.saturating_sub(1) {
            let a = gens[j].mul(&gens[j + 1]).mul(&gens[j]);
            let b = gens[j + 1].mul(&gens[j]).mul(&gens[j + 1]);
            if !a.sub(&b).is_zero() {
                return domain_err(format!("tensor braid relation failed at {j}"));
            }
        }
        for i in 0..n {
            for j in i + 2..n {
                let a = gens[i].mul(&gens[j]);
                let b = gens[j].mul(&gens[i]);
                if !a.sub(&b).is_zero() {
                    return domain_err(format!("tensor commutation failed at ({i},{j})"));
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct SchurWeylReport {
    pub tensor_dim: u64,
    pub bimodule_dim: u64,
    pub commutant_dim: Option<u64>,
    pub expected_commutant_dim: u64,
}

impl SchurWeylReport {
    pub fn holds(&self) -> bool {
        self.tensor_dim == self.bimodule_dim
            && self.commutant_dim.map(|c| c == self.expected_commutant_dim).unwrap_or(true)
    }
}

/// Multipartitions of n fitting the split: len(lambda^(s)) <= d_s.
pub fn split_multipartitions(d_split: &[u32], n: u32) -> Result<Vec<Multipartition>> {
    Ok(enumerate_multipartitions(d_split.len(), n)?
        .into_iter()
        .filter(|l| {
            l.components()
                .iter()
                .zip(d_split)
                .all(|(p, &d)| p.len() as u32 <= d)
        })
        .collect())
}

/// d^n = sum over split shapes of (prod_s ssyt(lambda^(s), d_s)) |Std|,
/// plus the exact commutant dimension when requested.
pub fn schur_weyl_dimension_check(
    space: &TensorSpace,
    with_commutant: bool,
) -> Result<SchurWeylReport> {
    let mut bimodule_dim = 0u64;
    let mut expected_commutant = 0u64;
    for lam in split_multipartitions(&space.d_split, space.n)? {
        let weyl: u64 = lam
            .components()
            .iter()
            .zip(&space.d_split)
            .map(|(p, &d)| ssyt_count(p, d))
            .product();
        bimodule_dim += weyl * standard_tableaux(&lam).len() as u64;
        expected_commutant += weyl * weyl;
    }
    let commutant_dim = if with_commutant {
        Some(commutant_dimension(&space.ak_generators()) as u64)
    } else {
        None
    };
    Ok(SchurWeylReport {
        tensor_dim: space.dim() as u64,
        bimodule_dim,
        commutant_dim,
        expected_commutant_dim: expected_commutant,
    })
}
