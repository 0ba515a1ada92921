//! Exact scalar arithmetic in every coefficient mode the workbench needs:
//! rationals, prime fields, cyclotomic fields, the symbolic fraction field
//! in q and Q_1..Q_r, and rational functions in t over a concrete field.

pub mod cyclotomic;
pub mod fp;
pub mod mpoly;
pub mod mrat;
pub mod tpoly;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{domain_err, Error, Result};
pub use cyclotomic::CycElt;
pub use fp::FpElt;
pub use mpoly::MPoly;
pub use mrat::{mrat_string, MRat};
pub use tpoly::TRat;

/// Which concrete field computations run over.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
    Cyclotomic(u32),
}

impl FieldSpec {
    pub fn parse(s: &str) -> Result<FieldSpec> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("QQ") {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(body) = s.strip_prefix("GF(").and_then(|x| x.strip_suffix(')')) {
            let p: u64 = body
                .parse()
                .map_err(|_| Error::Domain(format!("bad prime in field spec: {s}")))?;
            if !fp::is_prime(p) {
                return domain_err(format!("{p} is not prime"));
            }
            return Ok(FieldSpec::PrimeField(p));
        }
        if let Some(body) = s.strip_prefix("cyclo(").and_then(|x| x.strip_suffix(')')) {
            let e: u32 = body
                .parse()
                .map_err(|_| Error::Domain(format!("bad order in field spec: {s}")))?;
            if e < 1 {
                return domain_err("cyclotomic order must be at least 1");
            }
            return Ok(FieldSpec::Cyclotomic(e));
        }
        domain_err(format!("unknown field spec {s:?}; expected QQ, GF(p) or cyclo(e)"))
    }

    pub fn to_domain(self) -> CoeffDomain {
        match self {
            FieldSpec::Rationals => CoeffDomain::Rational,
            FieldSpec::PrimeField(p) => CoeffDomain::PrimeField(p),
            FieldSpec::Cyclotomic(e) => CoeffDomain::Cyclotomic(e),
        }
    }

    pub fn describe(self) -> String {
        match self {
            FieldSpec::Rationals => "QQ".into(),
            FieldSpec::PrimeField(p) => format!("GF({p})"),
            FieldSpec::Cyclotomic(e) => format!("cyclo({e})"),
        }
    }
}

/// The coefficient mode of a computation; carries what is needed to mint
/// constants of the right shape.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum CoeffDomain {
    Rational,
    PrimeField(u64),
    Cyclotomic(u32),
    /// fraction field of Q[x_0..x_{nvars-1}]; x_0 is q (or v), x_s is Q_s
    Symbolic { nvars: usize },
    /// rational functions in t over a concrete base field
    RationalFunction { base: Box<CoeffDomain> },
}

impl CoeffDomain {
    pub fn symbolic(r: usize) -> CoeffDomain {
        CoeffDomain::Symbolic { nvars: r + 1 }
    }

    pub fn lifted(base: CoeffDomain) -> CoeffDomain {
        assert!(base.is_concrete(), "lift base must be a concrete field");
        CoeffDomain::RationalFunction { base: Box::new(base) }
    }

    pub fn is_concrete(&self) -> bool {
        matches!(
            self,
            CoeffDomain::Rational | CoeffDomain::PrimeField(_) | CoeffDomain::Cyclotomic(_)
        )
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self, CoeffDomain::Symbolic { .. })
    }

    pub fn zero(&self) -> Scalar {
        match self {
            CoeffDomain::Rational => Scalar::Rat(BigRational::zero()),
            CoeffDomain::PrimeField(p) => Scalar::Fp(FpElt::zero(*p)),
            CoeffDomain::Cyclotomic(e) => Scalar::Cyc(CycElt::zero(*e)),
            CoeffDomain::Symbolic { nvars } => Scalar::Sym(Box::new(MRat::zero(*nvars))),
            CoeffDomain::RationalFunction { base } => {
                Scalar::TR(Box::new(TRat::constant(base.as_ref().clone(), base.zero())))
            }
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            CoeffDomain::Rational => Scalar::Rat(BigRational::from_integer(BigInt::from(v))),
            CoeffDomain::PrimeField(p) => Scalar::Fp(FpElt::new(*p, v)),
            CoeffDomain::Cyclotomic(e) => {
                Scalar::Cyc(CycElt::from_rational(*e, BigRational::from_integer(BigInt::from(v))))
            }
            CoeffDomain::Symbolic { nvars } => Scalar::Sym(Box::new(MRat::constant(
                *nvars,
                BigRational::from_integer(BigInt::from(v)),
            ))),
            CoeffDomain::RationalFunction { base } => {
                Scalar::TR(Box::new(TRat::constant(base.as_ref().clone(), base.from_i64(v))))
            }
        }
    }

    /// Symbolic variable x_i.
    pub fn var(&self, i: usize) -> Scalar {
        match self {
            CoeffDomain::Symbolic { nvars } => Scalar::Sym(Box::new(MRat::var(*nvars, i))),
            _ => panic!("var only exists in symbolic mode"),
        }
    }

    /// The indeterminate t of the lifted mode.
    pub fn t(&self) -> Scalar {
        match self {
            CoeffDomain::RationalFunction { base } => {
                Scalar::TR(Box::new(TRat::t(base.as_ref().clone())))
            }
            _ => panic!("t only exists in lifted mode"),
        }
    }

    pub fn matches(&self, s: &Scalar) -> bool {
        match (self, s) {
            (CoeffDomain::Rational, Scalar::Rat(_)) => true,
            (CoeffDomain::PrimeField(p), Scalar::Fp(x)) => x.p == *p,
            (CoeffDomain::Cyclotomic(e), Scalar::Cyc(x)) => x.e == *e,
            (CoeffDomain::Symbolic { nvars }, Scalar::Sym(x)) => x.nvars() == *nvars,
            (CoeffDomain::RationalFunction { base }, Scalar::TR(x)) => x.base == **base,
            _ => false,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            CoeffDomain::Rational => "QQ".into(),
            CoeffDomain::PrimeField(p) => format!("GF({p})"),
            CoeffDomain::Cyclotomic(e) => format!("cyclo({e})"),
            CoeffDomain::Symbolic { nvars } => format!("symbolic({} vars)", nvars),
            CoeffDomain::RationalFunction { base } => format!("{}(t)", base.describe()),
        }
    }
}

/// An exact scalar in one of the coefficient modes.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Scalar {
    Rat(BigRational),
    Fp(FpElt),
    Cyc(CycElt),
    Sym(Box<MRat>),
    TR(Box<TRat>),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(x) => x.is_zero(),
            Scalar::Fp(x) => x.is_zero(),
            Scalar::Cyc(x) => x.is_zero(),
            Scalar::Sym(x) => x.is_zero(),
            Scalar::TR(x) => x.is_zero(),
        }
    }

    pub fn domain(&self) -> CoeffDomain {
        match self {
            Scalar::Rat(_) => CoeffDomain::Rational,
            Scalar::Fp(x) => CoeffDomain::PrimeField(x.p),
            Scalar::Cyc(x) => CoeffDomain::Cyclotomic(x.e),
            Scalar::Sym(x) => CoeffDomain::Symbolic { nvars: x.nvars() },
            Scalar::TR(x) => CoeffDomain::RationalFunction {
                base: Box::new(x.base.clone()),
            },
        }
    }

    pub fn is_one(&self) -> bool {
        self == &self.domain().one()
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp(a), Scalar::Fp(b)) => Scalar::Fp(a.add(b)),
            (Scalar::Cyc(a), Scalar::Cyc(b)) => Scalar::Cyc(a.add(b)),
            (Scalar::Sym(a), Scalar::Sym(b)) => Scalar::Sym(Box::new(a.add(b))),
            (Scalar::TR(a), Scalar::TR(b)) => Scalar::TR(Box::new(a.add(b))),
            _ => panic!("coefficient mode mismatch in add"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a.clone()),
            Scalar::Fp(a) => Scalar::Fp(a.neg()),
            Scalar::Cyc(a) => Scalar::Cyc(a.neg()),
            Scalar::Sym(a) => Scalar::Sym(Box::new(a.neg())),
            Scalar::TR(a) => Scalar::TR(Box::new(a.neg())),
        }
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp(a), Scalar::Fp(b)) => Scalar::Fp(a.mul(b)),
            (Scalar::Cyc(a), Scalar::Cyc(b)) => Scalar::Cyc(a.mul(b)),
            (Scalar::Sym(a), Scalar::Sym(b)) => Scalar::Sym(Box::new(a.mul(b))),
            (Scalar::TR(a), Scalar::TR(b)) => Scalar::TR(Box::new(a.mul(b))),
            _ => panic!("coefficient mode mismatch in mul"),
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rat(a) => (!a.is_zero()).then(|| Scalar::Rat(a.recip())),
            Scalar::Fp(a) => a.inv().map(Scalar::Fp),
            Scalar::Cyc(a) => a.inv().map(Scalar::Cyc),
            Scalar::Sym(a) => a.inv().map(|x| Scalar::Sym(Box::new(x))),
            Scalar::TR(a) => a.inv().map(|x| Scalar::TR(Box::new(x))),
        }
    }

    pub fn div(&self, o: &Scalar) -> Result<Scalar> {
        match o.inv() {
            Some(i) => Ok(self.mul(&i)),
            None => domain_err("division by zero"),
        }
    }

    pub fn pow(&self, e: i64) -> Scalar {
        let base = if e >= 0 {
            self.clone()
        } else {
            self.inv().expect("negative power of a non-invertible scalar")
        };
        let mut acc = self.domain().one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// Multiplicative order: smallest k >= 1 with self^k = 1, searching up
    /// to a mode-specific bound; None when no such k exists (infinite order).
    pub fn multiplicative_order(&self) -> Option<u32> {
        let bound: u64 = match self {
            Scalar::Rat(_) => 2,
            Scalar::Fp(x) => x.p - 1,
            Scalar::Cyc(x) => num_integer::lcm(2u64, x.e as u64),
            _ => return None,
        };
        let one = self.domain().one();
        let mut p = self.clone();
        for k in 1..=bound {
            if p == one {
                return Some(k as u32);
            }
            p = p.mul(self);
        }
        None
    }
}

/// The exact-arithmetic entry point with checked modes, for the op surface.
pub fn arith(a: &Scalar, b: &Scalar, op: char) -> Result<Scalar> {
    if a.domain() != b.domain() {
        return domain_err(format!(
            "coefficient mode mismatch: {} vs {}",
            a.domain().describe(),
            b.domain().describe()
        ));
    }
    match op {
        '+' => Ok(a.add(b)),
        '-' => Ok(a.sub(b)),
        '*' => Ok(a.mul(b)),
        '/' => a.div(b),
        _ => domain_err(format!("unknown operation {op:?}")),
    }
}

/// The (t-1)-adic valuation of a lifted scalar: the largest k with
/// (t-1)^k dividing the numerator, None (= +infinity) for zero.  Rejects
/// values whose denominator vanishes at t = 1, which sit outside the
/// localization.
pub fn valuation_at_t1(v: &Scalar) -> Result<Option<u64>> {
    match v {
        Scalar::TR(f) => {
            if f.is_zero() {
                return Ok(None);
            }
            match f.valuation_at_t1() {
                Some(k) if k >= 0 => Ok(Some(k as u64)),
                _ => domain_err("denominator divisible by (t-1): outside the localization"),
            }
        }
        _ => domain_err("valuation needs a rational function in t"),
    }
}

/// Variable names used when rendering symbolic values.
pub fn q_var_names(r: usize) -> Vec<String> {
    let mut names = vec!["q".to_string()];
    for s in 1..=r {
        names.push(format!("Q{s}"));
    }
    names
}

pub fn v_var_names(r: usize) -> Vec<String> {
    let mut names = vec!["v".to_string()];
    for s in 1..=r {
        names.push(format!("Q{s}"));
    }
    names
}

pub fn scalar_string(s: &Scalar, sym_names: &[String]) -> String {
    match s {
        Scalar::Rat(x) => {
            if x.denom().is_one() {
                x.numer().to_string()
            } else {
                format!("{}/{}", x.numer(), x.denom())
            }
        }
        Scalar::Fp(x) => x.v.to_string(),
        Scalar::Cyc(x) => {
            let names = vec!["z".to_string()];
            let mut p = MPoly::zero(1);
            for (i, c) in x.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    p = p.add(&MPoly::monomial(1, vec![i as u32], c.clone()));
                }
            }
            mrat::poly_string(&p, &names)
        }
        Scalar::Sym(x) => mrat_string(x, sym_names),
        Scalar::TR(x) => x.render(sym_names),
    }
}

/// Default rendering with q, Q1, Q2, ... variable names.
pub fn scalar_default_string(s: &Scalar) -> String {
    let names = q_var_names(8);
    scalar_string(s, &names)
}

// ---------- parameters ----------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EOrder {
    Finite(u32),
    Infinite,
}

impl EOrder {
    pub fn describe(self) -> String {
        match self {
            EOrder::Finite(e) => e.to_string(),
            EOrder::Infinite => "infinity".into(),
        }
    }
}

/// Hecke-algebra parameters: q invertible and one Q per component, either
/// symbolic indeterminates or concrete field elements.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParameterSpec {
    pub r: usize,
    pub domain: CoeffDomain,
    pub q: Scalar,
    pub qq: Vec<Scalar>,
    pub e: EOrder,
}

impl ParameterSpec {
    /// Independent indeterminates q, Q_1..Q_r.
    pub fn symbolic(r: usize) -> ParameterSpec {
        let domain = CoeffDomain::symbolic(r);
        let q = domain.var(0);
        let qq = (1..=r).map(|s| domain.var(s)).collect();
        ParameterSpec {
            r,
            domain,
            q,
            qq,
            e: EOrder::Infinite,
        }
    }

    pub fn concrete(r: usize, domain: CoeffDomain, q: Scalar, qq: Vec<Scalar>) -> Result<ParameterSpec> {
        if !domain.is_concrete() && !matches!(domain, CoeffDomain::RationalFunction { .. }) {
            return domain_err("concrete parameters need a concrete coefficient domain");
        }
        if qq.len() != r {
            return domain_err(format!("expected {r} cyclotomic parameters, got {}", qq.len()));
        }
        if !domain.matches(&q) || qq.iter().any(|x| !domain.matches(x)) {
            return domain_err("parameter values do not live in the declared field");
        }
        if q.is_zero() {
            return domain_err("q must be invertible");
        }
        let e = derive_e(&q);
        Ok(ParameterSpec { r, domain, q, qq, e })
    }

    pub fn is_symbolic(&self) -> bool {
        self.domain.is_symbolic()
    }

    /// res(x) = q^(col-row) * Q_s realized in this parameter set.
    pub fn residue(&self, exponent: i64, comp: u32) -> Scalar {
        self.q.pow(exponent).mul(&self.qq[comp as usize - 1])
    }

    /// The lifted modular system over this parameter set: coefficients
    /// become rational functions in t, q goes to q t and Q_s to Q_s t^(n s)
    /// (or t^(n s) - 1 when Q_s = 0).
    pub fn lift(&self, n: u32) -> Result<ParameterSpec> {
        if !self.domain.is_concrete() {
            return domain_err("only concrete parameters can be lifted");
        }
        let base = self.domain.clone();
        let domain = CoeffDomain::lifted(base.clone());
        let t = domain.t();
        let embed = |x: &Scalar| Scalar::TR(Box::new(TRat::constant(base.clone(), x.clone())));
        let q = embed(&self.q).mul(&t);
        let qq: Vec<Scalar> = self
            .qq
            .iter()
            .enumerate()
            .map(|(idx, x)| {
                let s = idx as i64 + 1;
                let tpow = t.pow(n as i64 * s);
                if x.is_zero() {
                    tpow.sub(&domain.one())
                } else {
                    embed(x).mul(&tpow)
                }
            })
            .collect();
        Ok(ParameterSpec {
            r: self.r,
            domain,
            q,
            qq,
            e: EOrder::Infinite,
        })
    }
}

fn derive_e(q: &Scalar) -> EOrder {
    if q.is_one() {
        return match q {
            Scalar::Fp(x) => EOrder::Finite(x.p as u32),
            _ => EOrder::Infinite,
        };
    }
    match q.multiplicative_order() {
        Some(k) => EOrder::Finite(k),
        None => EOrder::Infinite,
    }
}

/// Parses a scalar literal in the CLI grammar: "a/b" in any mode, or
/// "zeta"/"zeta^k" in cyclotomic mode.
pub fn parse_value(text: &str, domain: &CoeffDomain) -> Result<Scalar> {
    let text = text.trim();
    if let Some(rest) = text.strip_prefix("zeta") {
        if let CoeffDomain::Cyclotomic(e) = domain {
            let k: i64 = if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^')
                    .and_then(|x| x.parse().ok())
                    .ok_or_else(|| Error::Domain(format!("bad root of unity literal {text:?}")))?
            };
            return Ok(Scalar::Cyc(CycElt::zeta_pow(*e, k)));
        }
        return domain_err("zeta literals need cyclotomic mode");
    }
    let (num, den) = match text.split_once('/') {
        Some((a, b)) => (a, b),
        None => (text, "1"),
    };
    let a: i64 = num
        .parse()
        .map_err(|_| Error::Domain(format!("bad scalar literal {text:?}")))?;
    let b: i64 = den
        .parse()
        .map_err(|_| Error::Domain(format!("bad scalar literal {text:?}")))?;
    if b == 0 {
        return domain_err("zero denominator in scalar literal");
    }
    domain.from_i64(a).div(&domain.from_i64(b))
}

/// Evaluates a symbolic value at concrete parameters.  Rejects assignments
/// where a denominator factor vanishes, naming the factor.
pub fn specialize(v: &Scalar, params: &ParameterSpec) -> Result<Scalar> {
    let f = match v {
        Scalar::Sym(f) => f,
        _ => return domain_err("specialize expects a symbolic value"),
    };
    if params.is_symbolic() {
        return domain_err("specialize needs concrete parameters");
    }
    if f.nvars() != params.r + 1 {
        return domain_err("symbolic value has the wrong number of variables");
    }
    let den = eval_mpoly(&f.den, params);
    if den.is_zero() {
        let names = q_var_names(params.r);
        return domain_err(format!(
            "specialization pole: factor {} vanishes at the given parameters",
            mrat::poly_string(&f.den, &names)
        ));
    }
    let num = eval_mpoly(&f.num, params);
    num.div(&den)
}

pub fn eval_mpoly(p: &MPoly, params: &ParameterSpec) -> Scalar {
    let dom = &params.domain;
    p.fold(
        dom.zero(),
        &|c| rational_in(dom, c),
        &|i, e| {
            let base = if i == 0 { &params.q } else { &params.qq[i - 1] };
            base.pow(e as i64)
        },
        &|a, b| a.add(b),
        &|a, b| a.mul(b),
    )
}

/// Embeds a rational constant into a domain (denominator must be a unit).
pub fn rational_in(domain: &CoeffDomain, c: &BigRational) -> Scalar {
    let numer = big_to_scalar(domain, c.numer());
    let denom = big_to_scalar(domain, c.denom());
    numer
        .div(&denom)
        .expect("field characteristic divides a rational denominator")
}

fn big_to_scalar(domain: &CoeffDomain, v: &BigInt) -> Scalar {
    if v.is_zero() {
        return domain.zero();
    }
    // digit-wise Horner so values beyond i64 still embed exactly
    let (_, digits) = v.abs().to_radix_be(256);
    let base = domain.from_i64(256);
    let mut acc = domain.zero();
    for d in digits {
        acc = acc.mul(&base).add(&domain.from_i64(d as i64));
    }
    if v.is_negative() {
        acc = acc.neg();
    }
    acc
}
