//! Univariate rational functions in t over a concrete base field: the
//! arithmetic of the Jantzen modular system.  The valuation is taken at the
//! maximal ideal (t - 1).

use super::{CoeffDomain, Scalar};

/// Dense polynomial in t, constant term first, trailing zeros trimmed.
pub type TPoly = Vec<Scalar>;

fn trim(mut v: TPoly) -> TPoly {
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
    v
}

fn p_add(a: &[Scalar], b: &[Scalar], dom: &CoeffDomain) -> TPoly {
    let n = a.len().max(b.len());
    let mut out = vec![dom.zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] = out[i].add(x);
    }
    for (i, y) in b.iter().enumerate() {
        out[i] = out[i].add(y);
    }
    trim(out)
}

fn p_neg(a: &[Scalar]) -> TPoly {
    a.iter().map(|c| c.neg()).collect()
}

fn p_mul(a: &[Scalar], b: &[Scalar], dom: &CoeffDomain) -> TPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![dom.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    trim(out)
}

fn p_divmod(a: &[Scalar], b: &[Scalar], dom: &CoeffDomain) -> (TPoly, TPoly) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "division by zero polynomial");
    let lb_inv = b.last().unwrap().inv().expect("leading coefficient invertible");
    let db = b.len() - 1;
    let mut rem = trim(a.to_vec());
    let mut quot = vec![dom.zero(); rem.len().saturating_sub(db)];
    while rem.len() > db {
        let dr = rem.len() - 1;
        let c = rem.last().unwrap().mul(&lb_inv);
        quot[dr - db] = c.clone();
        for (i, bc) in b.iter().enumerate() {
            rem[i + dr - db] = rem[i + dr - db].sub(&c.mul(bc));
        }
        rem = trim(rem);
    }
    (trim(quot), rem)
}

fn p_gcd(a: &[Scalar], b: &[Scalar], dom: &CoeffDomain) -> TPoly {
    let mut f = trim(a.to_vec());
    let mut g = trim(b.to_vec());
    while !g.is_empty() {
        let (_, r) = p_divmod(&f, &g, dom);
        f = g;
        g = r;
    }
    // monic normalization
    if let Some(lead) = f.last().cloned() {
        let inv = lead.inv().expect("field leading coefficient");
        f = f.iter().map(|c| c.mul(&inv)).collect();
    }
    f
}

fn p_eval_at_one(a: &[Scalar], dom: &CoeffDomain) -> Scalar {
    a.iter().fold(dom.zero(), |acc, c| acc.add(c))
}

/// Synthetic division by (t - 1); panics unless 1 is a root.
fn p_div_t_minus_one(a: &[Scalar], dom: &CoeffDomain) -> TPoly {
    debug_assert!(p_eval_at_one(a, dom).is_zero());
    // a(t) = (t-1) q(t): Horner from the top
    let mut out = vec![dom.zero(); a.len().saturating_sub(1)];
    let mut carry = dom.zero();
    for i in (0..a.len()).rev() {
        if i == 0 {
            break;
        }
        carry = carry.add(&a[i]);
        out[i - 1] = carry.clone();
    }
    trim(out)
}

/// A reduced rational function in t: gcd(num, den) = 1, den monic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TRat {
    pub base: CoeffDomain,
    pub num: TPoly,
    pub den: TPoly,
}

impl TRat {
    pub fn new(base: CoeffDomain, num: TPoly, den: TPoly) -> TRat {
        assert!(!trim(den.clone()).is_empty(), "zero denominator");
        TRat { base, num, den }.reduced()
    }

    pub fn constant(base: CoeffDomain, c: Scalar) -> TRat {
        let one = base.one();
        let num = if c.is_zero() { vec![] } else { vec![c] };
        TRat {
            base,
            num,
            den: vec![one],
        }
    }

    pub fn t(base: CoeffDomain) -> TRat {
        let num = vec![base.zero(), base.one()];
        let den = vec![base.one()];
        TRat { base, num, den }
    }

    fn reduced(self) -> TRat {
        let TRat { base, num, den } = self;
        let num = trim(num);
        let den = trim(den);
        if num.is_empty() {
            return TRat {
                den: vec![base.one()],
                num,
                base,
            };
        }
        let g = p_gcd(&num, &den, &base);
        let (num, den) = if g.len() > 1 {
            (p_divmod(&num, &g, &base).0, p_divmod(&den, &g, &base).0)
        } else {
            (num, den)
        };
        // monic denominator
        let lead_inv = den.last().unwrap().inv().expect("nonzero denominator");
        let num = num.iter().map(|c| c.mul(&lead_inv)).collect();
        let den = den.iter().map(|c| c.mul(&lead_inv)).collect();
        TRat { base, num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn add(&self, o: &TRat) -> TRat {
        assert_eq!(self.base, o.base);
        TRat::new(
            self.base.clone(),
            p_add(
                &p_mul(&self.num, &o.den, &self.base),
                &p_mul(&o.num, &self.den, &self.base),
                &self.base,
            ),
            p_mul(&self.den, &o.den, &self.base),
        )
    }

    pub fn neg(&self) -> TRat {
        TRat {
            base: self.base.clone(),
            num: p_neg(&self.num),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &TRat) -> TRat {
        assert_eq!(self.base, o.base);
        TRat::new(
            self.base.clone(),
            p_mul(&self.num, &o.num, &self.base),
            p_mul(&self.den, &o.den, &self.base),
        )
    }

    pub fn inv(&self) -> Option<TRat> {
        if self.is_zero() {
            return None;
        }
        Some(TRat::new(self.base.clone(), self.den.clone(), self.num.clone()))
    }

    /// Value at t = 1, defined when the denominator does not vanish there.
    pub fn eval_at_one(&self) -> Option<Scalar> {
        let d = p_eval_at_one(&self.den, &self.base);
        let n = p_eval_at_one(&self.num, &self.base);
        d.inv().map(|di| n.mul(&di))
    }

    /// (t-1)-adic valuation: multiplicity of the root 1 in the numerator
    /// minus the denominator; None encodes +infinity (the zero function).
    pub fn valuation_at_t1(&self) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        let count = |mut p: TPoly| -> i64 {
            let mut k = 0;
            while !p.is_empty() && p_eval_at_one(&p, &self.base).is_zero() {
                p = p_div_t_minus_one(&p, &self.base);
                k += 1;
            }
            k
        };
        Some(count(self.num.clone()) - count(self.den.clone()))
    }

    pub fn render(&self, sym_names: &[String]) -> String {
        let fmt = |p: &TPoly| -> String {
            if p.is_empty() {
                return "0".into();
            }
            let mut parts = Vec::new();
            for (i, c) in p.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let cs = super::scalar_string(c, sym_names);
                let piece = match i {
                    0 => cs,
                    1 if c.is_one() => "t".into(),
                    1 => format!("({cs})*t"),
                    _ if c.is_one() => format!("t^{i}"),
                    _ => format!("({cs})*t^{i}"),
                };
                parts.push(piece);
            }
            parts.join("+")
        };
        if self.den.len() == 1 && self.den[0].is_one() {
            fmt(&self.num)
        } else {
            format!("({})/({})", fmt(&self.num), fmt(&self.den))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dom() -> CoeffDomain {
        CoeffDomain::Rational
    }

    fn t() -> TRat {
        TRat::t(dom())
    }

    fn c(v: i64) -> TRat {
        TRat::constant(dom(), dom().from_i64(v))
    }

    #[test]
    fn valuations() {
        // (t-1)^3 (t+1) has valuation 3
        let tm1 = t().add(&c(-1));
        let tp1 = t().add(&c(1));
        let f = tm1.mul(&tm1).mul(&tm1).mul(&tp1);
        assert_eq!(f.valuation_at_t1(), Some(3));
        assert_eq!(tp1.valuation_at_t1(), Some(0));
        assert_eq!(c(0).valuation_at_t1(), None);
        // multiplicativity
        let g = tm1.mul(&tp1);
        assert_eq!(
            f.mul(&g).valuation_at_t1().unwrap(),
            f.valuation_at_t1().unwrap() + g.valuation_at_t1().unwrap()
        );
    }

    #[test]
    fn field_ops() {
        let f = t().mul(&t()).add(&c(-1)); // t^2 - 1
        let g = t().add(&c(1)); // t + 1
        let h = f.mul(&g.inv().unwrap());
        assert_eq!(h, t().add(&c(-1)));
        assert!(f.mul(&f.inv().unwrap()) == c(1));
    }

    #[test]
    fn eval() {
        let f = t().mul(&t()).add(&c(3)); // t^2+3
        assert_eq!(f.eval_at_one().unwrap(), dom().from_i64(4));
        let tm1 = t().add(&c(-1));
        assert!(tm1.inv().unwrap().eval_at_one().is_none());
    }
}
