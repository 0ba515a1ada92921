//! The cyclotomic field Q(zeta_e), represented as Q[x] modulo the e-th
//! cyclotomic polynomial with dense coefficient vectors.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;

/// Coefficients of the e-th cyclotomic polynomial, constant term first.
/// Computed once per e and shared; guarded for one-time construction.
static CYCLO_TABLE: Lazy<Mutex<HashMap<u32, Vec<BigInt>>>> = Lazy::new(|| Mutex::new(HashMap::new()));

pub fn cyclotomic_polynomial(e: u32) -> Vec<BigInt> {
    assert!(e >= 1);
    if let Some(p) = CYCLO_TABLE.lock().unwrap().get(&e) {
        return p.clone();
    }
    // Phi_e = (x^e - 1) / prod_{d | e, d < e} Phi_d
    let mut num: Vec<BigInt> = vec![BigInt::zero(); e as usize + 1];
    num[0] = BigInt::from(-1);
    num[e as usize] = BigInt::one();
    for d in 1..e {
        if e % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            num = int_poly_div_exact(&num, &phi_d);
        }
    }
    CYCLO_TABLE.lock().unwrap().insert(e, num.clone());
    num
}

/// Exact division of integer polynomials with monic divisor.
fn int_poly_div_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    assert!(b.last().map(|c| c.is_one()).unwrap_or(false), "divisor must be monic");
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let mut quot = vec![BigInt::zero(); rem.len().saturating_sub(db)];
    while rem.len() > db {
        let dr = rem.len() - 1;
        let c = rem.last().unwrap().clone();
        quot[dr - db] = c.clone();
        for (i, bc) in b.iter().enumerate() {
            let idx = i + dr - db;
            let v = std::mem::take(&mut rem[idx]);
            rem[idx] = v - &c * bc;
        }
        while rem.last().map(|x| x.is_zero()).unwrap_or(false) {
            rem.pop();
        }
        while rem.len() > db && rem.last().map(|x| x.is_zero()).unwrap_or(false) {
            rem.pop();
        }
        if rem.len() <= db {
            break;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division not exact");
    quot
}

pub fn euler_phi(e: u32) -> u32 {
    (cyclotomic_polynomial(e).len() - 1) as u32
}

/// An element of Q(zeta_e): coefficients of 1, zeta, ..., zeta^(phi(e)-1).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CycElt {
    pub e: u32,
    pub coeffs: Vec<BigRational>,
}

impl CycElt {
    pub fn zero(e: u32) -> Self {
        CycElt {
            e,
            coeffs: vec![BigRational::zero(); euler_phi(e) as usize],
        }
    }

    pub fn from_rational(e: u32, c: BigRational) -> Self {
        let mut z = Self::zero(e);
        if !z.coeffs.is_empty() {
            z.coeffs[0] = c;
        }
        z
    }

    pub fn one(e: u32) -> Self {
        Self::from_rational(e, BigRational::one())
    }

    /// zeta^k
    pub fn zeta_pow(e: u32, k: i64) -> Self {
        let k = k.rem_euclid(e as i64) as usize;
        let mut dense = vec![BigRational::zero(); k + 1];
        dense[k] = BigRational::one();
        Self::reduce(e, dense)
    }

    fn reduce(e: u32, mut dense: Vec<BigRational>) -> Self {
        let phi: Vec<BigRational> = cyclotomic_polynomial(e)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        let deg = phi.len() - 1;
        while dense.len() > deg {
            let dr = dense.len() - 1;
            let c = dense.pop().unwrap();
            if !c.is_zero() {
                for (i, pc) in phi.iter().enumerate().take(deg) {
                    dense[dr - deg + i] -= &c * pc;
                }
            }
            while dense.len() > deg && dense.last().map(|x| x.is_zero()).unwrap_or(false) {
                dense.pop();
            }
        }
        dense.resize(deg, BigRational::zero());
        CycElt { e, coeffs: dense }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &CycElt) -> CycElt {
        assert_eq!(self.e, other.e);
        CycElt {
            e: self.e,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn neg(&self) -> CycElt {
        CycElt {
            e: self.e,
            coeffs: self.coeffs.iter().map(|a| -a.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &CycElt) -> CycElt {
        assert_eq!(self.e, other.e);
        let n = self.coeffs.len();
        if n == 0 {
            return self.clone();
        }
        let mut dense = vec![BigRational::zero(); 2 * n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    dense[i + j] += a * b;
                }
            }
        }
        Self::reduce(self.e, dense)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// the cyclotomic polynomial.
    pub fn inv(&self) -> Option<CycElt> {
        if self.is_zero() {
            return None;
        }
        let modulus: Vec<BigRational> = cyclotomic_polynomial(self.e)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        let mut r0 = modulus;
        let mut r1 = trim(self.coeffs.clone());
        let mut s0 = vec![];
        let mut s1 = vec![BigRational::one()];
        while !r1.is_empty() {
            let (q, r) = poly_divmod(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        // r0 = gcd, a nonzero constant since Phi_e is irreducible over Q
        assert_eq!(r0.len(), 1, "cyclotomic polynomial must be coprime to nonzero element");
        let scale = r0[0].recip();
        let mut res: Vec<BigRational> = s0.iter().map(|c| c * &scale).collect();
        res.resize(self.coeffs.len().max(res.len()), BigRational::zero());
        Some(CycElt::reduce(self.e, res))
    }
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().map(|x| x.is_zero()).unwrap_or(false) {
        v.pop();
    }
    v
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    assert!(!b.is_empty());
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    let mut quot = vec![BigRational::zero(); a.len().saturating_sub(db)];
    while trim(rem.clone()).len() > db {
        rem = trim(rem);
        let dr = rem.len() - 1;
        let c = rem.last().unwrap() / lb;
        quot[dr - db] = c.clone();
        for (i, bc) in b.iter().enumerate() {
            let v = std::mem::take(&mut rem[i + dr - db]);
            rem[i + dr - db] = v - &c * bc;
        }
    }
    (trim(quot), trim(rem))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        let to_i64 = |v: Vec<BigInt>| -> Vec<i64> {
            v.into_iter().map(|x| i64::try_from(x).unwrap()).collect()
        };
        assert_eq!(to_i64(cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(to_i64(cyclotomic_polynomial(2)), vec![1, 1]);
        assert_eq!(to_i64(cyclotomic_polynomial(3)), vec![1, 1, 1]);
        assert_eq!(to_i64(cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(to_i64(cyclotomic_polynomial(6)), vec![1, -1, 1]);
        assert_eq!(to_i64(cyclotomic_polynomial(12)), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn zeta_has_order_e() {
        for e in [2u32, 3, 4, 5, 6, 12] {
            let z = CycElt::zeta_pow(e, 1);
            let mut p = CycElt::one(e);
            for k in 1..=e {
                p = p.mul(&z);
                if k < e {
                    assert!(!(p == CycElt::one(e)), "zeta_{e}^{k} must not be 1");
                }
            }
            assert_eq!(p, CycElt::one(e));
        }
    }

    #[test]
    fn inverse() {
        let z = CycElt::zeta_pow(5, 2);
        let one = CycElt::one(5);
        let i = z.inv().unwrap();
        assert_eq!(z.mul(&i), one);
        let s = z.add(&CycElt::one(5)); // 1 + zeta^2
        assert_eq!(s.mul(&s.inv().unwrap()), one);
        assert!(CycElt::zero(5).inv().is_none());
    }
}
