//! Prime-field arithmetic GF(p) for word-sized p.

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FpElt {
    pub p: u64,
    pub v: u64,
}

impl FpElt {
    pub fn new(p: u64, v: i64) -> Self {
        let v = v.rem_euclid(p as i64) as u64;
        FpElt { p, v }
    }

    pub fn zero(p: u64) -> Self {
        FpElt { p, v: 0 }
    }

    pub fn one(p: u64) -> Self {
        FpElt { p, v: 1 % p }
    }

    pub fn is_zero(&self) -> bool {
        self.v == 0
    }

    pub fn add(&self, o: &FpElt) -> FpElt {
        assert_eq!(self.p, o.p);
        FpElt {
            p: self.p,
            v: (self.v + o.v) % self.p,
        }
    }

    pub fn neg(&self) -> FpElt {
        FpElt {
            p: self.p,
            v: if self.v == 0 { 0 } else { self.p - self.v },
        }
    }

    pub fn sub(&self, o: &FpElt) -> FpElt {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &FpElt) -> FpElt {
        assert_eq!(self.p, o.p);
        FpElt {
            p: self.p,
            v: ((self.v as u128 * o.v as u128) % self.p as u128) as u64,
        }
    }

    pub fn inv(&self) -> Option<FpElt> {
        if self.v == 0 {
            return None;
        }
        // extended Euclid
        let (mut r0, mut r1) = (self.p as i128, self.v as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1, "modulus must be prime");
        Some(FpElt::new(self.p, s0 as i64))
    }

    pub fn pow(&self, mut e: u64) -> FpElt {
        let mut base = *self;
        let mut acc = FpElt::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf3() {
        let two = FpElt::new(3, 2);
        assert_eq!(two.add(&two).v, 1);
        assert_eq!(two.mul(&two).v, 1);
        assert_eq!(two.inv().unwrap().v, 2);
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(7));
        assert!(!is_prime(1));
        assert!(!is_prime(9));
    }
}
