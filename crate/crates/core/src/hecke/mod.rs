//! The Ariki-Koike algebra engine: elements in the normal-form basis
//! L_1^{a_1}..L_n^{a_n} T_w with 0 <= a_k < r, generator rewriting on both
//! sides, the * anti-involution, the trace form and the distinguished
//! elements m_lambda and m_st.
//!
//! Rewriting rests on three families of rules:
//!   - word rules: T_w T_i collapses by the quadratic relation when the
//!     length drops (and symmetrically on the left);
//!   - commutation: T_i L_i^a L_{i+1}^b = L_i^b L_{i+1}^a T_i -+ (q-1) times
//!     a staircase of L_i^x L_{i+1}^y terms with x+y = a+b and exponents
//!     bounded by max(a, b), so pushing a generator through the L-block
//!     never raises exponents;
//!   - cap rules: L_1^r falls to the characteristic polynomial of T_0 and
//!     L_k^r reduces through T_{k-1} L_{k-1} T_{k-1} = q L_k, built as a
//!     table by induction on k.

pub mod murphy;
pub mod seminormal;

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use crate::coeff::{CoeffDomain, ParameterSpec, Scalar};
use crate::combinatorics::Multipartition;
use crate::error::{domain_err, Result};
use crate::perm::Perm;

/// A normal-form basis monomial.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    /// L-exponents, a[k-1] = exponent of L_k, each < r
    pub a: Vec<u8>,
    pub w: Perm,
}

impl Monomial {
    pub fn identity(n: usize) -> Monomial {
        Monomial {
            a: vec![0; n],
            w: Perm::identity(n),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.a.iter().all(|&x| x == 0) && self.w.is_identity()
    }
}

pub type TermMap = BTreeMap<Monomial, Scalar>;

/// An element of the algebra: a finitely supported map from monomials to
/// coefficients, with no explicit zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Element {
    pub terms: TermMap,
}

impl Element {
    pub fn zero() -> Element {
        Element {
            terms: TermMap::new(),
        }
    }

    pub fn from_terms(terms: TermMap) -> Element {
        Element { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get().add(&c);
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.neg());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x.mul(c)))
                .collect(),
        }
    }
}

/// Exponent-overflow worklist item: L-exponents possibly >= r and a queue
/// of permutation factors still to be multiplied out on the right.
struct RawTerm {
    a: Vec<u16>,
    words: Vec<Perm>,
    c: Scalar,
}

pub struct HeckeAlgebra {
    pub params: ParameterSpec,
    pub n: usize,
    /// cap[k-1] = normal form of L_k^r
    cap: Vec<TermMap>,
    /// memoized normal forms of T_w L_k
    twlk: Mutex<HashMap<(Perm, usize), TermMap>>,
}

impl HeckeAlgebra {
    pub fn new(params: ParameterSpec, n: usize) -> HeckeAlgebra {
        let mut alg = HeckeAlgebra {
            params,
            n,
            cap: Vec::new(),
            twlk: Mutex::new(HashMap::new()),
        };
        for k in 1..=n {
            let table = alg.build_cap(k);
            alg.cap.push(table);
        }
        alg
    }

    pub fn r(&self) -> usize {
        self.params.r
    }

    pub fn domain(&self) -> &CoeffDomain {
        &self.params.domain
    }

    fn q(&self) -> &Scalar {
        &self.params.q
    }

    fn q_minus_one(&self) -> Scalar {
        self.params.q.sub(&self.domain().one())
    }

    pub fn one(&self) -> Element {
        let mut e = Element::zero();
        e.add_term(Monomial::identity(self.n), self.domain().one());
        e
    }

    /// The generator T_i; T_0 is L_1.
    pub fn generator(&self, i: usize) -> Element {
        assert!(i < self.n, "generator index out of range");
        if i == 0 {
            self.l_element(1)
        } else {
            let mut e = Element::zero();
            e.add_term(
                Monomial {
                    a: vec![0; self.n],
                    w: Perm::transposition(self.n, i),
                },
                self.domain().one(),
            );
            e
        }
    }

    /// L_k as a normal-form element.
    pub fn l_element(&self, k: usize) -> Element {
        assert!(k >= 1 && k <= self.n);
        let mut a = vec![0u16; self.n];
        a[k - 1] = 1;
        let terms = self.normalize(vec![RawTerm {
            a,
            words: Vec::new(),
            c: self.domain().one(),
        }]);
        Element::from_terms(terms)
    }

    /// All r^n n! basis monomials, ordered by (a-vector lex, one-line word
    /// of the permutation lex).
    pub fn basis(&self) -> Vec<Monomial> {
        let mut out = Vec::new();
        let perms = Perm::all(self.n);
        let r = self.r() as u8;
        let mut a = vec![0u8; self.n];
        loop {
            for w in &perms {
                out.push(Monomial {
                    a: a.clone(),
                    w: w.clone(),
                });
            }
            // increment the exponent vector
            let mut pos = self.n;
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                if a[pos] + 1 < r {
                    a[pos] += 1;
                    for x in a.iter_mut().skip(pos + 1) {
                        *x = 0;
                    }
                    break;
                }
            }
        }
    }

    pub fn dim(&self) -> usize {
        let mut d = 1usize;
        for _ in 0..self.n {
            d *= self.r();
        }
        for k in 2..=self.n {
            d *= k;
        }
        d
    }

    // ---- normalization ----

    /// Builds the normal form of L_k^r, assuming caps for 1..k-1 are built.
    fn build_cap(&self, k: usize) -> TermMap {
        let r = self.r();
        let dom = self.domain().clone();
        if k == 1 {
            // characteristic polynomial: L_1^r = -sum_{j<r} (-1)^(r-j) e_{r-j}(Q) L_1^j
            let elem_sym = elementary_symmetric(&self.params.qq, &dom);
            let mut out = Element::zero();
            for j in 0..r {
                let mut sign = dom.one();
                if (r - j) % 2 == 0 {
                    sign = sign.neg();
                }
                // -(-1)^{r-j} e_{r-j}
                let coeff = sign.mul(&elem_sym[r - j]);
                let mut a = vec![0u8; self.n];
                a[0] = j as u8;
                out.add_term(
                    Monomial {
                        a,
                        w: Perm::identity(self.n),
                    },
                    coeff,
                );
            }
            return out.terms;
        }
        // L_k^r = q^{-1} T_{k-1} ( L_{k-1} ( T_{k-1} L_k^{r-1} ) )
        let mut x0 = Element::zero();
        let mut a = vec![0u8; self.n];
        a[k - 1] = (r - 1) as u8;
        x0.add_term(
            Monomial {
                a,
                w: Perm::identity(self.n),
            },
            dom.one(),
        );
        let x1 = self.left_mul_gen(k - 1, &x0);
        let x2 = self.left_mul_l(k - 1, &x1);
        let x3 = self.left_mul_gen(k - 1, &x2);
        let qinv = self.q().inv().expect("q invertible");
        x3.scale(&qinv).terms
    }

    /// Reduces raw terms (exponents possibly >= r, pending word factors)
    /// into normal form using the cap tables.
    fn normalize(&self, items: Vec<RawTerm>) -> TermMap {
        let r = self.r() as u16;
        let mut out = Element::zero();
        let mut work = items;
        while let Some(item) = work.pop() {
            if item.c.is_zero() {
                continue;
            }
            // the largest index with an overflowing exponent rules
            let overflow = (0..self.n).rev().find(|&j| item.a[j] >= r);
            match overflow {
                None => {
                    let a: Vec<u8> = item.a.iter().map(|&x| x as u8).collect();
                    let mut words = item.words;
                    let head = if words.is_empty() {
                        Perm::identity(self.n)
                    } else {
                        words.remove(0)
                    };
                    let mut elem = Element::zero();
                    elem.add_term(Monomial { a, w: head }, item.c);
                    for w in words {
                        elem = self.right_mul_word(&elem, &w.reduced_word());
                    }
                    out = out.add(&elem);
                }
                Some(j) => {
                    debug_assert!(j < self.cap.len(), "cap table for L_{} missing", j + 1);
                    let mut rest = item.a.clone();
                    rest[j] -= r;
                    for (m, d) in &self.cap[j] {
                        let mut a = rest.clone();
                        for (x, &b) in a.iter_mut().zip(m.a.iter()) {
                            *x += b as u16;
                        }
                        let mut words = Vec::with_capacity(item.words.len() + 1);
                        if !m.w.is_identity() {
                            words.push(m.w.clone());
                        }
                        words.extend(item.words.iter().cloned());
                        work.push(RawTerm {
                            a,
                            words,
                            c: item.c.mul(d),
                        });
                    }
                }
            }
        }
        out.terms
    }

    // ---- right multiplication ----

    /// h * T_i for i >= 1.
    pub fn right_mul_gen(&self, h: &Element, i: usize) -> Element {
        assert!(i >= 1 && i < self.n);
        let qm1 = self.q_minus_one();
        let mut out = Element::zero();
        for (m, c) in &h.terms {
            if m.w.right_ascent(i) {
                out.add_term(
                    Monomial {
                        a: m.a.clone(),
                        w: m.w.mul_transposition(i),
                    },
                    c.clone(),
                );
            } else {
                out.add_term(
                    Monomial {
                        a: m.a.clone(),
                        w: m.w.mul_transposition(i),
                    },
                    c.mul(self.q()),
                );
                out.add_term(m.clone(), c.mul(&qm1));
            }
        }
        out
    }

    pub fn right_mul_word(&self, h: &Element, word: &[usize]) -> Element {
        let mut out = h.clone();
        for &i in word {
            out = self.right_mul_gen(&out, i);
        }
        out
    }

    /// h * L_k.
    pub fn right_mul_l(&self, h: &Element, k: usize) -> Element {
        assert!(k >= 1 && k <= self.n);
        let mut items = Vec::new();
        for (m, c) in &h.terms {
            let tl = self.tw_lk(&m.w, k);
            for (m2, d) in tl.iter() {
                let mut a: Vec<u16> = m.a.iter().map(|&x| x as u16).collect();
                for (x, &b) in a.iter_mut().zip(m2.a.iter()) {
                    *x += b as u16;
                }
                items.push(RawTerm {
                    a,
                    words: if m2.w.is_identity() {
                        Vec::new()
                    } else {
                        vec![m2.w.clone()]
                    },
                    c: c.mul(d),
                });
            }
        }
        Element::from_terms(self.normalize(items))
    }

    /// h * T_0 (T_0 = L_1).
    pub fn right_mul_t0(&self, h: &Element) -> Element {
        self.right_mul_l(h, 1)
    }

    /// h * g for a generator index 0 <= i < n, the op-level entry point.
    pub fn right_mul_generator(&self, h: &Element, i: usize) -> Result<Element> {
        if i >= self.n {
            return domain_err(format!("generator index {i} out of range for n={}", self.n));
        }
        Ok(if i == 0 {
            self.right_mul_t0(h)
        } else {
            self.right_mul_gen(h, i)
        })
    }

    /// Normal form of T_w L_k, memoized.
    fn tw_lk(&self, w: &Perm, k: usize) -> TermMap {
        if let Some(t) = self.twlk.lock().unwrap().get(&(w.clone(), k)) {
            return t.clone();
        }
        let mut x = self.l_element(k);
        let word = w.reduced_word();
        for &i in word.iter().rev() {
            x = self.left_mul_gen(i, &x);
        }
        let t = x.terms;
        self.twlk
            .lock()
            .unwrap()
            .insert((w.clone(), k), t.clone());
        t
    }

    // ---- left multiplication ----

    /// T_i * h for i >= 1, via the staircase commutation rule; exponents
    /// never grow past max of the touched pair, so no cap reduction happens.
    pub fn left_mul_gen(&self, i: usize, h: &Element) -> Element {
        assert!(i >= 1 && i < self.n);
        let qm1 = self.q_minus_one();
        let ti = Perm::transposition(self.n, i);
        let mut out = Element::zero();
        for (m, c) in &h.terms {
            let alpha = m.a[i - 1];
            let beta = m.a[i];
            // main term: exponents swapped, T_i absorbed into the word
            let mut swapped = m.a.clone();
            swapped.swap(i - 1, i);
            let tw = ti.then(&m.w);
            if tw.len() > m.w.len() {
                out.add_term(
                    Monomial {
                        a: swapped.clone(),
                        w: tw,
                    },
                    c.clone(),
                );
            } else {
                out.add_term(
                    Monomial {
                        a: swapped.clone(),
                        w: tw,
                    },
                    c.mul(self.q()),
                );
                out.add_term(
                    Monomial {
                        a: swapped.clone(),
                        w: m.w.clone(),
                    },
                    c.mul(&qm1),
                );
            }
            // staircase corrections, keeping the original word
            if alpha > beta {
                for step in 1..=(alpha - beta) {
                    let mut a = m.a.clone();
                    a[i - 1] = alpha - step;
                    a[i] = beta + step;
                    out.add_term(
                        Monomial {
                            a,
                            w: m.w.clone(),
                        },
                        c.mul(&qm1).neg(),
                    );
                }
            } else {
                for step in 1..=(beta - alpha) {
                    let mut a = m.a.clone();
                    a[i - 1] = beta - step;
                    a[i] = alpha + step;
                    out.add_term(
                        Monomial {
                            a,
                            w: m.w.clone(),
                        },
                        c.mul(&qm1),
                    );
                }
            }
        }
        out
    }

    /// L_k * h: exponent increment plus cap reduction.
    pub fn left_mul_l(&self, k: usize, h: &Element) -> Element {
        let items = h
            .terms
            .iter()
            .map(|(m, c)| {
                let mut a: Vec<u16> = m.a.iter().map(|&x| x as u16).collect();
                a[k - 1] += 1;
                RawTerm {
                    a,
                    words: if m.w.is_identity() {
                        Vec::new()
                    } else {
                        vec![m.w.clone()]
                    },
                    c: c.clone(),
                }
            })
            .collect();
        Element::from_terms(self.normalize(items))
    }

    /// T_word * h, applying the rightmost letter first.
    pub fn left_mul_word(&self, word: &[usize], h: &Element) -> Element {
        let mut out = h.clone();
        for &i in word.iter().rev() {
            out = self.left_mul_gen(i, &out);
        }
        out
    }

    // ---- products, star, tau ----

    /// g * (the monomial), multiplying L-powers then the word.
    fn right_mul_monomial(&self, g: &Element, m: &Monomial) -> Element {
        let mut out = g.clone();
        for k in 1..=self.n {
            for _ in 0..m.a[k - 1] {
                out = self.right_mul_l(&out, k);
            }
        }
        if !m.w.is_identity() {
            out = self.right_mul_word(&out, &m.w.reduced_word());
        }
        out
    }

    pub fn multiply(&self, g: &Element, h: &Element) -> Element {
        let mut out = Element::zero();
        for (m, c) in &h.terms {
            out = out.add(&self.right_mul_monomial(g, m).scale(c));
        }
        out
    }

    /// The * anti-involution: T_w -> T_{w^-1}, L_k -> L_k.
    pub fn star(&self, h: &Element) -> Element {
        let mut out = Element::zero();
        for (m, c) in &h.terms {
            let mut x = Element::zero();
            x.add_term(
                Monomial {
                    a: m.a.clone(),
                    w: Perm::identity(self.n),
                },
                c.clone(),
            );
            let winv = m.w.inverse();
            out = out.add(&self.left_mul_word(&winv.reduced_word(), &x));
        }
        out
    }

    /// The canonical trace: the coefficient of the identity monomial.
    pub fn tau(&self, h: &Element) -> Scalar {
        h.terms
            .iter()
            .find(|(m, _)| m.is_identity())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.domain().zero())
    }

    /// Coordinates of an element over the full monomial basis, in basis()
    /// order.
    pub fn coordinates(&self, h: &Element, basis_index: &BTreeMap<Monomial, usize>) -> Vec<Scalar> {
        let mut v = vec![self.domain().zero(); basis_index.len()];
        for (m, c) in &h.terms {
            v[*basis_index.get(m).expect("monomial outside basis")] = c.clone();
        }
        v
    }

    pub fn basis_index(&self) -> BTreeMap<Monomial, usize> {
        self.basis()
            .into_iter()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect()
    }
}

/// e_0..e_r of the given scalars.
fn elementary_symmetric(xs: &[Scalar], dom: &CoeffDomain) -> Vec<Scalar> {
    let mut e = vec![dom.zero(); xs.len() + 1];
    e[0] = dom.one();
    for (i, x) in xs.iter().enumerate() {
        for j in (1..=i + 1).rev() {
            let t = e[j - 1].mul(x);
            e[j] = e[j].add(&t);
        }
    }
    e
}

/// P_H(q, Q): the product whose invertibility is equivalent to
/// semisimplicity.
pub fn p_hecke(r: usize, n: u32) -> Scalar {
    let params = ParameterSpec::symbolic(r);
    let dom = &params.domain;
    let mut acc = dom.one();
    for i in 1..=n {
        let mut cyc = dom.zero();
        for k in 0..i {
            cyc = cyc.add(&params.q.pow(k as i64));
        }
        acc = acc.mul(&cyc);
    }
    for i in 1..=r {
        for j in (i + 1)..=r {
            for d in -(n as i64 - 1)..=(n as i64 - 1) {
                let factor = params.q.pow(d).mul(&params.qq[i - 1]).sub(&params.qq[j - 1]);
                acc = acc.mul(&factor);
            }
        }
    }
    acc
}

/// The Morita-reduction polynomial P_n for a partition of {Q_1..Q_r} into
/// groups (indices 1-based): the cross-group product of (q^d Q_i - Q_j).
pub fn morita_polynomial_nonzero(
    params: &ParameterSpec,
    groups: &[Vec<usize>],
    n: u32,
) -> Result<bool> {
    let mut seen = vec![false; params.r];
    for g in groups {
        for &i in g {
            if i < 1 || i > params.r || seen[i - 1] {
                return domain_err("groups must partition the parameter indices");
            }
            seen[i - 1] = true;
        }
    }
    if !seen.iter().all(|&x| x) {
        return domain_err("groups must cover all parameter indices");
    }
    let mut acc = params.domain.one();
    for (a, ga) in groups.iter().enumerate() {
        for gb in groups.iter().skip(a + 1) {
            for &i in ga {
                for &j in gb {
                    for d in -(n as i64 - 1)..=(n as i64 - 1) {
                        let factor = params
                            .q
                            .pow(d)
                            .mul(&params.qq[i - 1])
                            .sub(&params.qq[j - 1]);
                        acc = acc.mul(&factor);
                    }
                }
            }
        }
    }
    Ok(!acc.is_zero())
}

/// x_lambda = sum of T_w over the Young subgroup of the shape.
pub fn x_lambda(alg: &HeckeAlgebra, row_blocks: &[usize]) -> Element {
    let blocks: Vec<usize> = row_blocks.to_vec();
    let mut out = Element::zero();
    for w in crate::perm::young_subgroup(alg.n, &blocks) {
        out.add_term(
            Monomial {
                a: vec![0; alg.n],
                w,
            },
            alg.domain().one(),
        );
    }
    out
}

/// m_lambda = x_lambda u_lambda^+ for a multipartition or multicomposition
/// presented by row blocks and component sizes.
pub fn m_lambda_from_blocks(
    alg: &HeckeAlgebra,
    row_blocks: &[usize],
    component_sizes: &[u32],
) -> Element {
    let mut out = x_lambda(alg, row_blocks);
    let mut prefix = 0u32;
    for s in 2..=component_sizes.len() {
        prefix += component_sizes[s - 2];
        for k in 1..=prefix {
            // multiply by (L_k - Q_s)
            let shifted = alg.right_mul_l(&out, k as usize);
            out = shifted.sub(&out.scale(&alg.params.qq[s - 1]));
        }
    }
    out
}

pub fn m_lambda(alg: &HeckeAlgebra, lambda: &Multipartition) -> Element {
    let sizes: Vec<u32> = lambda.components().iter().map(|p| p.size()).collect();
    m_lambda_from_blocks(alg, &lambda.row_blocks(), &sizes)
}

pub fn m_lambda_composition(
    alg: &HeckeAlgebra,
    mu: &crate::combinatorics::Multicomposition,
) -> Element {
    let sizes: Vec<u32> = mu.components().iter().map(|c| c.size()).collect();
    m_lambda_from_blocks(alg, &mu.row_blocks(), &sizes)
}

/// m_st = T_{d(s)}^* m_lambda T_{d(t)}.
pub fn m_st(
    alg: &HeckeAlgebra,
    m_lam: &Element,
    s: &crate::combinatorics::StandardTableau,
    t: &crate::combinatorics::StandardTableau,
) -> Element {
    assert_eq!(s.shape(), t.shape(), "tableaux must share a shape");
    let right = alg.right_mul_word(m_lam, &t.d().reduced_word());
    alg.left_mul_word(&s.d().inverse().reduced_word(), &right)
}
