//! The acceptance suite: every identity the workbench is contracted to
//! satisfy, runnable at two scales.  Each criterion reports one pass/fail
//! line; failures carry the violated identity.

use std::time::Instant;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::characters::tau_expansion_check;
use crate::coeff::{specialize, CoeffDomain, ParameterSpec};
use crate::combinatorics::{
    count_identity_check, enumerate_multipartitions, order_of_wreath, semistandard_with_fibers,
    standard_tableaux,
};
use crate::crystal::{kleshchev_multipartitions, EResidueConfig};
use crate::error::{domain_err, Result};
use crate::hecke::seminormal::SeminormalOracle;
use crate::hecke::{m_lambda_composition, p_hecke, Element, HeckeAlgebra, Monomial};
use crate::jantzen::{sum_formula_all_shapes, ModularSystem};
use crate::linalg::Matrix;
use crate::perm::Perm;
use crate::schur::{
    decomposition_matrix, double_centralizer_check, permutation_module_census, schur_dimension,
    WeightPoset, WeylEngine,
};
use crate::specht::{residue_blocks, SpechtContext};
use crate::tensor::{schur_weyl_dimension_check, TensorSpace};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Level {
    Quick,
    Full,
}

impl Level {
    /// Quick runs cap the algebra dimension r^n n! at 200; full at the
    /// desk-scale limit.
    pub fn dim_cap(self) -> u64 {
        match self {
            Level::Quick => 200,
            Level::Full => 20_000,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

const SEED: u64 = 0xAC1D_0001;

fn rational_params(r: usize, q: i64, qs: &[i64]) -> ParameterSpec {
    let d = CoeffDomain::Rational;
    ParameterSpec::concrete(
        r,
        d.clone(),
        d.from_i64(q),
        qs.iter().map(|&x| d.from_i64(x)).collect(),
    )
    .unwrap()
}

fn gf_params(p: u64, r: usize, q: i64, qs: &[i64]) -> ParameterSpec {
    let d = CoeffDomain::PrimeField(p);
    ParameterSpec::concrete(
        r,
        d.clone(),
        d.from_i64(q),
        qs.iter().map(|&x| d.from_i64(x)).collect(),
    )
    .unwrap()
}

/// A random rational parameter set with P_H(q, Q) nonzero.
fn random_semisimple(rng: &mut ChaCha8Rng, r: usize, n: u32) -> ParameterSpec {
    let d = CoeffDomain::Rational;
    let ph = p_hecke(r, n);
    loop {
        let qv: i64 = rng.gen_range(2..=9);
        let qs: Vec<i64> = (0..r).map(|_| rng.gen_range(-9..=9)).collect();
        if qs.iter().any(|&x| x == 0) {
            continue;
        }
        let params = ParameterSpec::concrete(
            r,
            d.clone(),
            d.from_i64(qv),
            qs.iter().map(|&x| d.from_i64(x)).collect(),
        )
        .unwrap();
        if let Ok(v) = specialize(&ph, &params) {
            if !v.is_zero() {
                return params;
            }
        }
    }
}

fn random_monomial(rng: &mut ChaCha8Rng, r: usize, n: usize) -> Monomial {
    let a: Vec<u8> = (0..n).map(|_| rng.gen_range(0..r as u8)).collect();
    let mut imgs: Vec<u8> = (1..=n as u8).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        imgs.swap(i, j);
    }
    Monomial {
        a,
        w: Perm::from_images(imgs),
    }
}

// ---- criteria ----

fn c1_relation_suite(level: Level) -> Result<String> {
    let mut covered = Vec::new();
    for r in 1..=3usize {
        for n in 1..=4u32 {
            if order_of_wreath(r, n) > level.dim_cap() {
                continue;
            }
            let params = ParameterSpec::symbolic(r);
            let shapes = enumerate_multipartitions(r, n)?;
            shapes
                .par_iter()
                .map(|l| {
                    crate::hecke::seminormal::seminormal_rep(&params, l)?.verify_relations(&params)
                })
                .collect::<Result<Vec<_>>>()?;
            covered.push(format!("({r},{n})"));
        }
    }
    Ok(format!("all defining relations hold symbolically at {}", covered.join(" ")))
}

fn c2_basis_rank(level: Level) -> Result<String> {
    for r in 1..=4usize {
        for n in 0..=6u32 {
            if !count_identity_check(r, n)? {
                return domain_err(format!("square-count identity fails at ({r},{n})"));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut checked = Vec::new();
    for (r, n) in [(2usize, 2u32), (2, 3), (3, 2)] {
        if order_of_wreath(r, n) > level.dim_cap() {
            continue;
        }
        let params = random_semisimple(&mut rng, r, n);
        let alg = HeckeAlgebra::new(params.clone(), n as usize);
        let oracle = SeminormalOracle::new(&params, n)?;
        let dim = alg.dim();
        let mut rows = Vec::with_capacity(dim);
        for m in alg.basis() {
            rows.push(SeminormalOracle::flatten(&oracle.image_monomial(&m)));
        }
        let mat = Matrix::from_rows(params.domain.clone(), rows);
        if mat.rank() != dim {
            return domain_err(format!("monomial images are dependent at ({r},{n})"));
        }
        checked.push(format!("({r},{n})"));
    }
    Ok(format!(
        "sum of squares = r^n n! for r<=4, n<=6; monomial images full rank at {}",
        checked.join(" ")
    ))
}

fn c3_engine_soundness(_level: Level) -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
    for (r, n) in [(2usize, 3usize), (3, 2)] {
        let params = random_semisimple(&mut rng, r, n as u32);
        let alg = HeckeAlgebra::new(params.clone(), n);
        let oracle = SeminormalOracle::new(&params, n as u32)?;
        let gen_images: Vec<Vec<Matrix>> =
            (0..n).map(|i| oracle.image(&alg.generator(i))).collect();
        for _ in 0..50 {
            let m = random_monomial(&mut rng, r, n);
            let mut h = Element::zero();
            h.add_term(m.clone(), params.domain.one());
            let img = oracle.image(&h);
            for i in 0..n {
                let lhs = oracle.image(&alg.right_mul_generator(&h, i)?);
                for ((a, b), g) in lhs.iter().zip(&img).zip(&gen_images[i]) {
                    if !a.sub(&b.mul(g)).is_zero() {
                        return domain_err(format!(
                            "engine disagrees with the oracle at ({r},{n}), monomial {m:?}, T_{i}"
                        ));
                    }
                }
            }
        }
    }
    Ok("right multiplication matches the seminormal oracle on 50 random monomials at (2,3) and (3,2)".into())
}

fn c4_tau_expansion(_level: Level) -> Result<String> {
    let sym = ParameterSpec::symbolic(1);
    let alg = HeckeAlgebra::new(sym, 2);
    if !tau_expansion_check(&alg, 2)? {
        return domain_err("symbolic trace expansion fails at (1,2)");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 4);
    for _ in 0..5 {
        let params = random_semisimple(&mut rng, 2, 2);
        let alg = HeckeAlgebra::new(params, 2);
        if !tau_expansion_check(&alg, 2)? {
            return domain_err("trace expansion fails at a (2,2) specialization");
        }
    }
    Ok("tau = sum of chi/s over all basis monomials, (1,2) symbolic and (2,2) at 5 points".into())
}

fn c5_semisimplicity(_level: Level) -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 5);
    let d = CoeffDomain::Rational;
    let ph = p_hecke(2, 2);
    for trial in 0..20 {
        // half the draws are forced onto the degenerate locus
        let (qv, q1, q2) = if trial % 2 == 0 {
            (rng.gen_range(2..=7), rng.gen_range(1..=5), rng.gen_range(1..=5))
        } else {
            match trial % 8 {
                1 => (-1, rng.gen_range(1..=5), rng.gen_range(1..=5)),
                3 => {
                    let a = rng.gen_range(1..=5);
                    (rng.gen_range(2..=7), a, a)
                }
                5 => {
                    let q = rng.gen_range(2..=7);
                    let a = rng.gen_range(1..=3);
                    (q, a, q * a)
                }
                _ => {
                    let q = rng.gen_range(2..=7);
                    let a = rng.gen_range(1..=3);
                    (q, q * a, a)
                }
            }
        };
        let params = ParameterSpec::concrete(
            2,
            d.clone(),
            d.from_i64(qv),
            vec![d.from_i64(q1), d.from_i64(q2)],
        )?;
        let ph_val = specialize(&ph, &params)?;
        let alg = HeckeAlgebra::new(params, 2);
        let ctx = SpechtContext::new(&alg, 2, false)?;
        let mut all_nonsingular = true;
        for i in 0..ctx.shapes().len() {
            let g = ctx.gram_matrix(i)?;
            if g.rank() != g.rows {
                all_nonsingular = false;
            }
        }
        if all_nonsingular != !ph_val.is_zero() {
            return domain_err(format!(
                "criterion 5 fails at q={qv}, Q=({q1},{q2}): grams nonsingular={all_nonsingular}, P_H nonzero={}",
                !ph_val.is_zero()
            ));
        }
    }
    Ok("over 20 specializations of (2,2): all Specht Grams nonsingular iff P_H != 0".into())
}

/// The parameters used for the modular-classification criteria.
fn modular_params(r: usize, e: u32, charges: &[i64]) -> ParameterSpec {
    match e {
        2 => {
            let qs: Vec<i64> = charges.iter().map(|&a| if a % 2 == 0 { 1 } else { -1 }).collect();
            rational_params(r, -1, &qs)
        }
        3 => {
            // q = 2 has order 3 in GF(7)
            let qs: Vec<i64> = charges.iter().map(|&a| [1i64, 2, 4][(a.rem_euclid(3)) as usize]).collect();
            gf_params(7, r, 2, &qs)
        }
        _ => panic!("unsupported e"),
    }
}

fn simple_labels(params: &ParameterSpec, n: u32) -> Result<Vec<crate::combinatorics::Multipartition>> {
    let alg = HeckeAlgebra::new(params.clone(), n as usize);
    let ctx = SpechtContext::new(&alg, n, false)?;
    let mut out = Vec::new();
    for (i, shape) in ctx.shapes().iter().enumerate() {
        let (nonzero, _) = ctx.simple_dimension(i)?;
        if nonzero {
            out.push(shape.clone());
        }
    }
    Ok(out)
}

fn c6_simple_classification(level: Level) -> Result<String> {
    // r = 1: nonzero simples = e-restricted partitions
    let n_max_r1 = if level == Level::Quick { 4 } else { 5 };
    for e in [2u32, 3] {
        for n in 1..=n_max_r1 {
            let params = modular_params(1, e, &[0]);
            let got = simple_labels(&params, n)?;
            let expect: Vec<_> = enumerate_multipartitions(1, n)?
                .into_iter()
                .filter(|l| l.component(1).is_e_restricted(e))
                .collect();
            if got != expect {
                return domain_err(format!("e-restricted classification fails at n={n}, e={e}"));
            }
        }
    }
    // r = 2: nonzero simples = Kleshchev multipartitions
    for e in [2u32, 3] {
        for charges in [[0i64, 0], [0, 1]] {
            for n in 1..=3u32 {
                let params = modular_params(2, e, &charges);
                let got = simple_labels(&params, n)?;
                let cfg = EResidueConfig::new(Some(e), charges.to_vec())?;
                let expect = kleshchev_multipartitions(2, n, &cfg)?;
                if got != expect {
                    return domain_err(format!(
                        "Kleshchev classification fails at n={n}, e={e}, charges {charges:?}: got {got:?}, expected {expect:?}"
                    ));
                }
            }
        }
    }
    Ok("nonzero Gram ranks match e-restricted (r=1, n<=5) and Kleshchev (r=2, n<=3) labels".into())
}

fn decomposition_suite(level: Level) -> Vec<(ParameterSpec, u32, &'static str)> {
    let n_max_r1 = if level == Level::Quick { 4 } else { 5 };
    let mut out: Vec<(ParameterSpec, u32, &'static str)> = Vec::new();
    for e in [2u32, 3] {
        for n in 1..=n_max_r1 {
            out.push((modular_params(1, e, &[0]), n, "r=1"));
        }
        for charges in [[0i64, 0], [0, 1]] {
            for n in 1..=3u32 {
                out.push((modular_params(2, e, &charges), n, "r=2"));
            }
        }
    }
    out
}

fn c7_decomposition(level: Level) -> Result<String> {
    for (params, n, _) in decomposition_suite(level) {
        let r = params.r;
        let alg = HeckeAlgebra::new(params, n as usize);
        let sctx = SpechtContext::new(&alg, n, false)?;
        let engine = WeylEngine::new(&sctx);
        let poset = WeightPoset::standard(r, n)?;
        let dm = decomposition_matrix(&engine, &poset)?;
        // unitriangularity and integrality are enforced inside; check the
        // omega column extraction against the Specht Gram ranks
        for (i, _) in dm.shapes.iter().enumerate() {
            let (_, rank) = sctx.simple_dimension(i)?;
            if rank != dm.specht_rank[i] {
                return domain_err(format!(
                    "omega extraction disagrees with Specht rank at shape index {i}"
                ));
            }
        }
    }
    // known desk case, in the ascending-order display
    let params = rational_params(1, -1, &[1]);
    let alg = HeckeAlgebra::new(params, 2);
    let sctx = SpechtContext::new(&alg, 2, false)?;
    let engine = WeylEngine::new(&sctx);
    let poset = WeightPoset::standard(1, 2)?;
    let dm = decomposition_matrix(&engine, &poset)?;
    if dm.display_ascending() != vec![vec![1, 0], vec![1, 1]] {
        return domain_err("desk case (1,2,2) does not match [[1,0],[1,1]]");
    }
    // generic parameters give the identity matrix
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
    let params = random_semisimple(&mut rng, 2, 2);
    let alg = HeckeAlgebra::new(params, 2);
    let sctx = SpechtContext::new(&alg, 2, false)?;
    let engine = WeylEngine::new(&sctx);
    let poset = WeightPoset::standard(2, 2)?;
    let dm = decomposition_matrix(&engine, &poset)?;
    for (i, row) in dm.entries.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v != u64::from(i == j) {
                return domain_err("generic decomposition matrix is not the identity");
            }
        }
    }
    Ok("decomposition matrices unitriangular with the omega column matching Specht ranks; desk case and generic identity verified".into())
}

fn c8_census(_level: Level) -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 8);
    for (r, n) in [(1usize, 2u32), (1, 3), (2, 2), (2, 3)] {
        let params = random_semisimple(&mut rng, r, n);
        let alg = HeckeAlgebra::new(params.clone(), n as usize);
        let sctx = SpechtContext::new(&alg, n, false)?;
        let engine = WeylEngine::new(&sctx);
        let poset = WeightPoset::standard(r, n)?;
        let index = alg.basis_index();
        for mu in &poset.weights {
            let (mult, dim) = permutation_module_census(mu)?;
            // dim W^lambda phi_mu = |SStd(lambda, mu)|
            for (lam, &k) in &mult {
                let g = engine.weight_gram(lam, mu)?;
                if g.rows as u64 != k {
                    return domain_err(format!("weight-space dimension mismatch at {lam}, {mu:?}"));
                }
            }
            // dim M^mu as an exact rank of m_mu H
            let m_mu = m_lambda_composition(&alg, mu);
            let mut rows = Vec::new();
            for b in alg.basis() {
                let mut hb = Element::zero();
                hb.add_term(b, params.domain.one());
                rows.push(alg.coordinates(&alg.multiply(&m_mu, &hb), &index));
            }
            let rank = Matrix::from_rows(params.domain.clone(), rows).rank() as u64;
            if rank != dim {
                return domain_err(format!(
                    "dim m_mu H = {rank} but the census says {dim} at {mu:?}"
                ));
            }
        }
    }
    Ok("weight-space dimensions and permutation-module ranks match the semistandard census up to (2,3)".into())
}

fn c9_jantzen(level: Level) -> Result<String> {
    let mut cases: Vec<(ParameterSpec, u32)> = Vec::new();
    let n_max = if level == Level::Quick { 3 } else { 4 };
    for n in 2..=n_max {
        cases.push((rational_params(1, -1, &[1]), n));
    }
    cases.push((gf_params(7, 1, 2, &[1]), 3));
    let n2_max = if level == Level::Quick { 2 } else { 3 };
    for n in 2..=n2_max {
        cases.push((gf_params(101, 2, -1, &[1, -1]), n));
    }
    let mut det_matches = 0usize;
    let mut det_total = 0usize;
    for (base, n) in cases {
        let system = ModularSystem::new(&base, n)?;
        let lifted_alg = crate::jantzen::lifted_algebra(&system, n);
        let sctx = SpechtContext::new(&lifted_alg, n, false)?;
        let poset = WeightPoset::standard(base.r, n)?;
        let reports = sum_formula_all_shapes(&sctx, &system, &poset.weights)?;
        for rep in &reports {
            if !rep.all_match {
                let bad: Vec<String> = rep
                    .rows
                    .iter()
                    .filter(|r| !r.matches)
                    .map(|r| format!("{:?}: {} vs {}", r.weight, r.gram_valuation, r.hook_side))
                    .collect();
                return domain_err(format!(
                    "sum formula fails at lambda={}, r={}, n={n}: {}",
                    rep.lambda,
                    base.r,
                    bad.join("; ")
                ));
            }
            for row in &rep.rows {
                if let Some(dg) = &row.det_vs_g {
                    det_total += 1;
                    if dg.agree_up_to_unit {
                        det_matches += 1;
                    }
                }
            }
        }
    }
    Ok(format!(
        "valuation identity holds everywhere; det = (unit) g with unit(1) = +-1 on {det_matches}/{det_total} comparisons (reported, non-fatal)"
    ))
}

fn c10_blocks(level: Level) -> Result<String> {
    for (params, n, _) in decomposition_suite(level) {
        let r = params.r;
        let blocks = residue_blocks(&params, n)?;
        let alg = HeckeAlgebra::new(params, n as usize);
        let sctx = SpechtContext::new(&alg, n, false)?;
        let engine = WeylEngine::new(&sctx);
        let poset = WeightPoset::standard(r, n)?;
        let dm = decomposition_matrix(&engine, &poset)?;
        let linkage = dm.linkage_classes();
        // compare the two partitions of the shape set
        let mut by_class = vec![usize::MAX; blocks.shapes.len()];
        for (ci, members) in linkage.iter().enumerate() {
            for &m in members {
                by_class[m] = ci;
            }
        }
        for i in 0..blocks.shapes.len() {
            for j in 0..blocks.shapes.len() {
                let same_residue = blocks.class_of[i] == blocks.class_of[j];
                let same_linkage = by_class[i] == by_class[j];
                if same_residue != same_linkage {
                    return domain_err(format!(
                        "blocks mismatch at n={n}: {} vs {} (residue {same_residue}, linkage {same_linkage})",
                        blocks.shapes[i], blocks.shapes[j]
                    ));
                }
            }
        }
    }
    Ok("residue-multiset classes equal decomposition-matrix linkage classes at all criterion-7 scales".into())
}

fn c11_tensor(_level: Level) -> Result<String> {
    for (split, n) in [(vec![1u32, 1], 2u32), (vec![1, 1], 3)] {
        let sp = TensorSpace::symbolic(split, n)?;
        sp.verify_relations()?;
        let rep = schur_weyl_dimension_check(&sp, false)?;
        if rep.tensor_dim != rep.bimodule_dim {
            return domain_err(format!("dimension identity fails at n={n}"));
        }
    }
    let d = CoeffDomain::Rational;
    let sp = TensorSpace::with_values(vec![2], 2, d.clone(), d.from_i64(2), vec![d.from_i64(1)])?;
    let rep = schur_weyl_dimension_check(&sp, true)?;
    if rep.commutant_dim != Some(10) {
        return domain_err(format!("classical commutant is {:?}, not 10", rep.commutant_dim));
    }
    Ok("tensor relations hold symbolically; d^n matches the bimodule census; classical commutant = 10".into())
}

fn c12_double_centralizer(_level: Level) -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 12);
    for (r, n) in [(1usize, 2u32), (2, 2)] {
        let params = random_semisimple(&mut rng, r, n);
        let alg = HeckeAlgebra::new(params, n as usize);
        let sctx = SpechtContext::new(&alg, n, false)?;
        let poset = WeightPoset::standard(r, n)?;
        let rep = double_centralizer_check(&sctx, &poset)?;
        if !rep.holds() {
            return domain_err(format!("double centralizer fails at ({r},{n}): {rep:?}"));
        }
        let _ = schur_dimension(&poset);
    }
    Ok("commutant = semistandard census and bicommutant = r^n n! at (1,2) and (2,2)".into())
}

const CRITERIA: [(usize, &str, fn(Level) -> Result<String>); 12] = [
    (1, "relation suite", c1_relation_suite),
    (2, "basis and rank identities", c2_basis_rank),
    (3, "engine soundness vs oracle", c3_engine_soundness),
    (4, "trace expansion", c4_tau_expansion),
    (5, "semisimplicity criterion", c5_semisimplicity),
    (6, "simple classification", c6_simple_classification),
    (7, "decomposition matrices", c7_decomposition),
    (8, "census identities", c8_census),
    (9, "Jantzen valuation identity", c9_jantzen),
    (10, "blocks vs linkage", c10_blocks),
    (11, "tensor Schur-Weyl", c11_tensor),
    (12, "double centralizer", c12_double_centralizer),
];

/// Runs one criterion by its 1-based id.
pub fn run_criterion(id: usize, level: Level) -> CriterionReport {
    let (cid, name, f) = CRITERIA[id - 1];
    let start = Instant::now();
    let (passed, detail) = match f(level) {
        Ok(d) => (true, d),
        Err(e) => (false, format!("{e}")),
    };
    CriterionReport {
        id: cid,
        name,
        passed,
        detail,
        millis: start.elapsed().as_millis(),
    }
}

pub fn run(level: Level) -> Vec<CriterionReport> {
    CRITERIA
        .iter()
        .map(|&(id, name, f)| {
            let start = Instant::now();
            let (passed, detail) = match f(level) {
                Ok(d) => (true, d),
                Err(e) => (false, format!("{e}")),
            };
            CriterionReport {
                id,
                name,
                passed,
                detail,
                millis: start.elapsed().as_millis(),
            }
        })
        .collect()
}

/// Degenerate-input sanity: everything accepts n = 0.
pub fn empty_case_check() -> Result<()> {
    let params = rational_params(2, 3, &[2, 7]);
    let blocks = residue_blocks(&params, 0)?;
    if blocks.classes.len() != 1 {
        return domain_err("n = 0 must give one residue class");
    }
    let shapes = enumerate_multipartitions(2, 0)?;
    if shapes.len() != 1 || standard_tableaux(&shapes[0]).len() != 1 {
        return domain_err("n = 0 must give the empty shape with one tableau");
    }
    let om = crate::combinatorics::omega(2, 0);
    if semistandard_with_fibers(&shapes[0], &om).len() != 1 {
        return domain_err("n = 0 semistandard census is off");
    }
    Ok(())
}
