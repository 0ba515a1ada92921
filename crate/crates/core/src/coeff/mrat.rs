//! The fraction field of the multivariate polynomial ring: reduced
//! numerator/denominator pairs with a canonical normalization, giving the
//! symbolic coefficient mode in q (or v) and Q_1..Q_r.

use num_rational::BigRational;
use num_traits::One;

use super::mpoly::{mgcd, MPoly};

/// A reduced fraction of multivariate polynomials.  Canonical form: gcd of
/// numerator and denominator is 1 and the denominator is integer-primitive
/// with positive lex-leading coefficient.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MRat {
    pub num: MPoly,
    pub den: MPoly,
}

impl MRat {
    pub fn new(num: MPoly, den: MPoly) -> MRat {
        assert!(!den.is_zero(), "zero denominator");
        MRat { num, den }.reduced()
    }

    pub fn from_poly(num: MPoly) -> MRat {
        let nv = num.nvars;
        MRat {
            num,
            den: MPoly::one(nv),
        }
    }

    pub fn zero(nvars: usize) -> MRat {
        MRat::from_poly(MPoly::zero(nvars))
    }

    pub fn one(nvars: usize) -> MRat {
        MRat::from_poly(MPoly::one(nvars))
    }

    pub fn constant(nvars: usize, c: BigRational) -> MRat {
        MRat::from_poly(MPoly::constant(nvars, c))
    }

    pub fn var(nvars: usize, i: usize) -> MRat {
        MRat::from_poly(MPoly::var(nvars, i))
    }

    /// x_i^e with e possibly negative.
    pub fn var_pow(nvars: usize, i: usize, e: i64) -> MRat {
        let p = MPoly::var(nvars, i).pow(e.unsigned_abs() as u32);
        if e >= 0 {
            MRat::from_poly(p)
        } else {
            MRat {
                num: MPoly::one(nvars),
                den: p,
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    fn reduced(self) -> MRat {
        let MRat { num, den } = self;
        if num.is_zero() {
            return MRat {
                den: MPoly::one(num.nvars),
                num,
            };
        }
        let g = mgcd(&num, &den);
        let (mut num, mut den) = if g.is_constant() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides"),
                den.div_exact(&g).expect("gcd divides"),
            )
        };
        let unit = den.unit_content();
        let inv = unit.recip();
        den = den.scale(&inv);
        num = num.scale(&inv);
        MRat { num, den }
    }

    pub fn add(&self, other: &MRat) -> MRat {
        MRat::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> MRat {
        MRat {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &MRat) -> MRat {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MRat) -> MRat {
        // cross-reduce before multiplying to keep intermediates small
        let g1 = mgcd(&self.num, &other.den);
        let g2 = mgcd(&other.num, &self.den);
        let a = self.num.div_exact(&g1).unwrap_or_else(|| self.num.clone());
        let d = other.den.div_exact(&g1).unwrap_or_else(|| other.den.clone());
        let c = other.num.div_exact(&g2).unwrap_or_else(|| other.num.clone());
        let b = self.den.div_exact(&g2).unwrap_or_else(|| self.den.clone());
        MRat::new(a.mul(&c), b.mul(&d))
    }

    pub fn inv(&self) -> Option<MRat> {
        if self.is_zero() {
            return None;
        }
        Some(MRat::new(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &MRat) -> Option<MRat> {
        other.inv().map(|i| self.mul(&i))
    }

    pub fn pow(&self, e: i64) -> MRat {
        let base = if e >= 0 {
            self.clone()
        } else {
            self.inv().expect("negative power of zero")
        };
        let mut acc = MRat::one(self.nvars());
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }
}

/// Renders a polynomial with the given variable names, terms in ascending
/// lex order (so "1+q", not "q+1").
pub fn poly_string(p: &MPoly, vars: &[String]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (mono, c) in &p.terms {
        let mut factors: Vec<String> = Vec::new();
        for (i, &e) in mono.iter().enumerate() {
            if e == 1 {
                factors.push(vars[i].clone());
            } else if e > 1 {
                factors.push(format!("{}^{}", vars[i], e));
            }
        }
        let body = factors.join("*");
        let piece = if body.is_empty() {
            rat_string(c)
        } else if c.is_one() {
            body
        } else if (-c.clone()).is_one() {
            format!("-{}", body)
        } else {
            format!("{}*{}", rat_string(c), body)
        };
        if out.is_empty() {
            out = piece;
        } else if piece.starts_with('-') {
            out = format!("{}-{}", out, &piece[1..]);
        } else {
            out = format!("{}+{}", out, piece);
        }
    }
    out
}

fn rat_string(c: &BigRational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn mrat_string(f: &MRat, vars: &[String]) -> String {
    let num = poly_string(&f.num, vars);
    if f.den.is_constant() && f.den.constant_value().map(|c| c.is_one()).unwrap_or(false) {
        num
    } else {
        let den = poly_string(&f.den, vars);
        let num_wrapped = if f.num.terms.len() > 1 {
            format!("({num})")
        } else {
            num
        };
        let den_wrapped = if f.den.terms.len() > 1 {
            format!("({den})")
        } else {
            den
        };
        format!("{num_wrapped}/{den_wrapped}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn nv() -> usize {
        2
    }

    fn q() -> MRat {
        MRat::var(nv(), 0)
    }

    fn one() -> MRat {
        MRat::one(nv())
    }

    #[test]
    fn field_identities() {
        let a = q().add(&one()); // 1+q
        let b = q().sub(&one()); // q-1
        let prod = a.mul(&b); // q^2-1
        let expect = q().mul(&q()).sub(&one());
        assert_eq!(prod, expect);
        let ratio = prod.div(&a).unwrap();
        assert_eq!(ratio, b);
        assert!(a.sub(&a).is_zero());
        assert!(a.div(&a).unwrap().is_one());
    }

    #[test]
    fn canonical_denominator() {
        // (q-1)/(2-2q) reduces to -1/2
        let n = q().sub(&one());
        let two = MRat::constant(nv(), BigRational::from_integer(BigInt::from(2)));
        let d = two.sub(&two.mul(&q()));
        let f = n.div(&d).unwrap();
        assert_eq!(
            f,
            MRat::constant(nv(), BigRational::new(BigInt::from(-1), BigInt::from(2)))
        );
    }

    #[test]
    fn rendering() {
        let vars = vec!["q".to_string(), "Q1".to_string()];
        let f = one().add(&q());
        assert_eq!(mrat_string(&f, &vars), "1+q");
        let g = f.div(&q()).unwrap();
        assert_eq!(mrat_string(&g, &vars), "(1+q)/q");
    }

    #[test]
    fn laurent_normalization() {
        // q^-2 stored as 1/q^2
        let f = MRat::var_pow(nv(), 0, -2);
        assert!(f.num.is_constant());
        assert_eq!(f.den, MPoly::var(nv(), 0).pow(2));
        assert!(f.mul(&MRat::var_pow(nv(), 0, 2)).is_one());
    }
}
