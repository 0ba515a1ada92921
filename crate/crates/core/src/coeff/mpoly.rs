//! Sparse multivariate polynomials over the rationals, with the exact gcd
//! machinery the fraction field needs.
//!
//! Exponents are non-negative; Laurent behaviour lives in the fraction type
//! where a monomial denominator absorbs negative powers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Mono = Vec<u32>;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MPoly {
    pub nvars: usize,
    /// exponent vector -> nonzero coefficient
    pub terms: BTreeMap<Mono, BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; nvars], c);
        }
        MPoly { nvars, terms }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, rat(1))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut mono = vec![0; nvars];
        mono[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(mono, rat(1));
        MPoly { nvars, terms }
    }

    pub fn monomial(nvars: usize, mono: Mono, c: BigRational) -> Self {
        assert_eq!(mono.len(), nvars);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        MPoly { nvars, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|m| m.iter().all(|&e| e == 0))
    }

    pub fn constant_value(&self) -> Option<BigRational> {
        if self.is_zero() {
            Some(BigRational::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert_with(BigRational::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(m);
            }
        }
        MPoly {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut terms: BTreeMap<Mono, BigRational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mono: Mono = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                let entry = terms.entry(mono).or_insert_with(BigRational::zero);
                *entry += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        MPoly {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn scale(&self, c: &BigRational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut acc = MPoly::one(self.nvars);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m[var]).max().unwrap_or(0)
    }

    /// Componentwise minimum exponent over all terms (the monomial content).
    pub fn monomial_content(&self) -> Mono {
        let mut mins = vec![u32::MAX; self.nvars];
        for m in self.terms.keys() {
            for (a, b) in mins.iter_mut().zip(m) {
                *a = (*a).min(*b);
            }
        }
        if self.terms.is_empty() {
            mins = vec![0; self.nvars];
        }
        mins
    }

    pub fn div_monomial(&self, mono: &Mono) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let q: Mono = m.iter().zip(mono).map(|(a, b)| a.checked_sub(*b).unwrap()).collect();
                    (q, c.clone())
                })
                .collect(),
        }
    }

    /// The leading term in lexicographic order on exponent vectors.
    fn lex_leading(&self) -> Option<(&Mono, &BigRational)> {
        self.terms.iter().next_back()
    }

    /// The rational content times the sign of the lex-leading coefficient;
    /// dividing by it yields an integer-primitive polynomial with positive
    /// leading coefficient.
    pub fn unit_content(&self) -> BigRational {
        if self.is_zero() {
            return BigRational::one();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_bigint_gcd(&num_gcd, c.numer());
            den_lcm = &den_lcm / num_bigint_gcd(&den_lcm, c.denom()) * c.denom();
        }
        let mut content = BigRational::new(num_gcd, den_lcm);
        if self.lex_leading().unwrap().1.is_negative() {
            content = -content;
        }
        content
    }

    pub fn primitive(&self) -> MPoly {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.unit_content();
        self.scale(&c.recip())
    }

    /// Exact division; returns None when the division is not exact.
    pub fn div_exact(&self, divisor: &MPoly) -> Option<MPoly> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = MPoly::zero(self.nvars);
        let (dm, dc) = {
            let (m, c) = divisor.lex_leading().unwrap();
            (m.clone(), c.clone())
        };
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.lex_leading().unwrap();
                (m.clone(), c.clone())
            };
            if !dm.iter().zip(&rm).all(|(d, r)| d <= r) {
                return None;
            }
            let mono: Mono = rm.iter().zip(&dm).map(|(r, d)| r - d).collect();
            let t = MPoly::monomial(self.nvars, mono, rc / &dc);
            rem = rem.sub(&t.mul(divisor));
            quot = quot.add(&t);
        }
        Some(quot)
    }

    /// Evaluate with a caller-supplied ring: `var_pow(i, e)` gives the i-th
    /// value raised to e, `from_rat` embeds a rational.
    pub fn fold<R>(
        &self,
        zero: R,
        from_rat: &dyn Fn(&BigRational) -> R,
        var_pow: &dyn Fn(usize, u32) -> R,
        add: &dyn Fn(&R, &R) -> R,
        mul: &dyn Fn(&R, &R) -> R,
    ) -> R {
        let mut acc = zero;
        for (m, c) in &self.terms {
            let mut term = from_rat(c);
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    term = mul(&term, &var_pow(i, e));
                }
            }
            acc = add(&acc, &term);
        }
        acc
    }
}

fn num_bigint_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    num_integer::Integer::gcd(a, b)
}

// ---- multivariate gcd via primitive polynomial remainder sequences ----

/// gcd normalized to integer-primitive form with positive lex-leading
/// coefficient (so gcd(0, 0) = 0 and gcd with a nonzero constant is 1).
pub fn mgcd(a: &MPoly, b: &MPoly) -> MPoly {
    assert_eq!(a.nvars, b.nvars);
    if a.is_zero() {
        return b.primitive();
    }
    if b.is_zero() {
        return a.primitive();
    }
    if a.is_constant() || b.is_constant() {
        return MPoly::one(a.nvars);
    }
    // peel off the common monomial factor first
    let ca = a.monomial_content();
    let cb = b.monomial_content();
    let shared: Mono = ca.iter().zip(&cb).map(|(x, y)| *x.min(y)).collect();
    let a = a.div_monomial(&a.monomial_content());
    let b = b.div_monomial(&b.monomial_content());
    let core = mgcd_inner(&a.primitive(), &b.primitive());
    let shift = MPoly::monomial(core.nvars, shared, BigRational::one());
    core.mul(&shift).primitive()
}

fn mgcd_inner(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_constant() || b.is_constant() {
        return MPoly::one(a.nvars);
    }
    // main variable: the highest-index variable occurring in either
    let var = (0..a.nvars)
        .rev()
        .find(|&v| a.degree_in(v) > 0 || b.degree_in(v) > 0)
        .expect("non-constant polynomial has a variable");
    let ua = to_univariate(a, var);
    let ub = to_univariate(b, var);
    let cont_a = ua.iter().fold(MPoly::zero(a.nvars), |g, c| mgcd(&g, c));
    let cont_b = ub.iter().fold(MPoly::zero(a.nvars), |g, c| mgcd(&g, c));
    let cont = mgcd(&cont_a, &cont_b);
    let pa = divide_coeffs(&ua, &cont_a);
    let pb = divide_coeffs(&ub, &cont_b);
    let prs = primitive_prs(pa, pb, a.nvars, var);
    from_univariate(&prs, var, a.nvars).mul(&cont).primitive()
}

/// dense coefficient list in `var`, lowest degree first
fn to_univariate(p: &MPoly, var: usize) -> Vec<MPoly> {
    let deg = p.degree_in(var) as usize;
    let mut out = vec![MPoly::zero(p.nvars); deg + 1];
    for (m, c) in &p.terms {
        let e = m[var] as usize;
        let mut rest = m.clone();
        rest[var] = 0;
        out[e] = out[e].add(&MPoly::monomial(p.nvars, rest, c.clone()));
    }
    out
}

fn from_univariate(coeffs: &[MPoly], var: usize, nvars: usize) -> MPoly {
    let mut acc = MPoly::zero(nvars);
    for (e, c) in coeffs.iter().enumerate() {
        let mut mono = vec![0; nvars];
        mono[var] = e as u32;
        acc = acc.add(&c.mul(&MPoly::monomial(nvars, mono, BigRational::one())));
    }
    acc
}

fn trim(mut v: Vec<MPoly>) -> Vec<MPoly> {
    while v.last().map(|p| p.is_zero()).unwrap_or(false) {
        v.pop();
    }
    v
}

fn divide_coeffs(coeffs: &[MPoly], d: &MPoly) -> Vec<MPoly> {
    coeffs
        .iter()
        .map(|c| {
            if c.is_zero() {
                c.clone()
            } else {
                c.div_exact(d).expect("content divides coefficients")
            }
        })
        .collect()
}

fn uni_content(coeffs: &[MPoly]) -> MPoly {
    coeffs.iter().fold(
        MPoly::zero(coeffs.first().map(|c| c.nvars).unwrap_or(0)),
        |g, c| mgcd(&g, c),
    )
}

/// Pseudo-remainder of dense coefficient vectors in the main variable:
/// repeatedly r := lb * r - lr * x^(dr-db) * b, which cancels the leading
/// coefficient exactly, until deg r < deg b.
fn pseudo_rem(a: &[MPoly], b: &[MPoly]) -> Vec<MPoly> {
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    let mut r: Vec<MPoly> = trim(a.to_vec());
    while r.len() >= b.len() {
        let dr = r.len() - 1;
        let lr = r.last().unwrap().clone();
        let mut next: Vec<MPoly> = r.iter().map(|c| c.mul(lb)).collect();
        for (i, c) in b.iter().enumerate() {
            let idx = i + dr - db;
            next[idx] = next[idx].sub(&c.mul(&lr));
        }
        debug_assert!(next.last().unwrap().is_zero());
        r = trim(next);
    }
    r
}

fn primitive_prs(a: Vec<MPoly>, b: Vec<MPoly>, nvars: usize, _var: usize) -> Vec<MPoly> {
    let mut f = trim(a);
    let mut g = trim(b);
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        if g.is_empty() {
            return f;
        }
        if g.len() == 1 {
            // gcd with a nonzero constant-in-var polynomial
            return vec![MPoly::one(nvars)];
        }
        let r = pseudo_rem(&f, &g);
        let r = if r.is_empty() {
            r
        } else {
            let c = uni_content(&r);
            divide_coeffs(&r, &c)
        };
        f = g;
        g = r;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(nv: usize) -> MPoly {
        MPoly::var(nv, 0)
    }

    #[test]
    fn ring_basics() {
        let x = q(2);
        let y = MPoly::var(2, 1);
        let p = x.add(&y).mul(&x.sub(&y));
        let expect = x.mul(&x).sub(&y.mul(&y));
        assert_eq!(p, expect);
    }

    #[test]
    fn exact_division() {
        let x = q(2);
        let y = MPoly::var(2, 1);
        let a = x.add(&y).pow(3);
        let b = x.add(&y);
        let quot = a.div_exact(&b).unwrap();
        assert_eq!(quot, x.add(&y).pow(2));
        assert!(x.mul(&x).div_exact(&y).is_none());
    }

    #[test]
    fn gcd_multivariate() {
        let x = q(3);
        let y = MPoly::var(3, 1);
        let z = MPoly::var(3, 2);
        let g = x.add(&y).mul(&z.add(&MPoly::one(3)));
        let a = g.mul(&x.sub(&z).pow(2));
        let b = g.mul(&y.add(&z));
        let got = mgcd(&a, &b);
        assert_eq!(got, g.primitive());
        assert!(a.div_exact(&got).is_some());
        assert!(b.div_exact(&got).is_some());
    }

    #[test]
    fn gcd_coprime() {
        let x = q(2);
        let y = MPoly::var(2, 1);
        assert_eq!(mgcd(&x.add(&MPoly::one(2)), &y.add(&MPoly::one(2))), MPoly::one(2));
    }
}
