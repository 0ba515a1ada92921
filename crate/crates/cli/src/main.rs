//! Batch command-line front end: parses parameters, dispatches to the
//! library, and emits deterministic JSON envelopes (CSV for bare matrices).

use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use akw_core::characters::{generic_degree, schur_element};
use akw_core::coeff::{
    parse_value, q_var_names, scalar_string, specialize, v_var_names, FieldSpec, ParameterSpec,
    Scalar,
};
use akw_core::combinatorics::{
    enumerate_multipartitions, semistandard_with_fibers, standard_tableaux, Composition,
    Multicomposition, Multipartition, Partition,
};
use akw_core::crystal::{branching_prediction, kleshchev_multipartitions, EResidueConfig};
use akw_core::error::Error;
use akw_core::hecke::{morita_polynomial_nonzero, p_hecke, HeckeAlgebra};
use akw_core::jantzen::{lifted_algebra, sum_formula_all_shapes, ModularSystem};
use akw_core::schur::{
    borel_census, decomposition_matrix, double_centralizer_check, permutation_module_census,
    schur_dimension, WeightPoset, WeylEngine,
};
use akw_core::selftest::{run as run_selftest, Level};
use akw_core::specht::{residue_blocks, residue_multiset, SpechtContext};
use akw_core::tensor::{schur_weyl_dimension_check, TensorSpace};

#[derive(Parser)]
#[command(name = "akw", version, about = "Exact workbench for Ariki-Koike and cyclotomic q-Schur algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct ParamArgs {
    /// number of cyclotomic parameters (components)
    #[arg(long)]
    r: Option<usize>,
    /// total size
    #[arg(long)]
    n: Option<u32>,
    /// coefficient field: QQ | GF(p) | cyclo(e)
    #[arg(long)]
    field: Option<String>,
    /// q as "a/b" or "zeta^k" in cyclotomic mode
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    /// comma-separated Q_1,..,Q_r in the same grammar
    #[arg(long = "Q", allow_hyphen_values = true)]
    qq: Option<String>,
    /// work with q, Q_1..Q_r as indeterminates
    #[arg(long)]
    symbolic: bool,
    /// quantum characteristic for crystal combinatorics
    #[arg(long)]
    e: Option<u32>,
    /// comma-separated multicharge
    #[arg(long, allow_hyphen_values = true)]
    charge: Option<String>,
    /// output format: json | csv (csv only for matrix payloads)
    #[arg(long, default_value = "json")]
    format: String,
    /// write the output here instead of standard output
    #[arg(long)]
    out: Option<String>,
    /// worker threads (0 = automatic)
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// lift the desk-scale guard on exact solves
    #[arg(long)]
    override_scale: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the multipartitions of n in dominance-refining order
    Multipartitions(ParamArgs),
    /// Standard (and optionally semistandard) tableaux of a shape
    Tableaux {
        #[command(flatten)]
        common: ParamArgs,
        /// shape as nested JSON, e.g. [[3,1],[1,1]]
        #[arg(long)]
        lambda: String,
        /// optional type for semistandard tableaux
        #[arg(long)]
        mu: Option<String>,
    },
    /// Gram matrix and rank of a Specht module
    Gram {
        #[command(flatten)]
        common: ParamArgs,
        #[arg(long)]
        lambda: String,
    },
    /// Labels and dimensions of the nonzero simple modules
    Simples(ParamArgs),
    /// Residue-multiset blocks
    Blocks(ParamArgs),
    /// Decomposition matrix of the cyclotomic Schur algebra
    Decomp {
        #[command(flatten)]
        common: ParamArgs,
        /// also emit the Ariki-Koike submatrix
        #[arg(long)]
        hecke_submatrix: bool,
    },
    /// Schur elements (and generic degrees)
    SchurElements(ParamArgs),
    /// The semisimplicity polynomial, optionally with a Morita grouping test
    Semisimple {
        #[command(flatten)]
        common: ParamArgs,
        /// partition of 1..r into groups, e.g. "1,2|3"
        #[arg(long)]
        groups: Option<String>,
    },
    /// Kleshchev multipartitions and the crystal edges into them
    Kleshchev(ParamArgs),
    /// Jantzen sum-formula data for every shape
    Jantzen {
        #[command(flatten)]
        common: ParamArgs,
        /// restrict to one shape
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Permutation-module and Schur-algebra dimension census
    Census {
        #[command(flatten)]
        common: ParamArgs,
        /// one weight as nested JSON; all weights when absent
        #[arg(long)]
        mu: Option<String>,
        /// include the Borel basis census
        #[arg(long)]
        borel: bool,
        /// include the exact double-centralizer check (concrete mode)
        #[arg(long)]
        double_centralizer: bool,
    },
    /// Tensor-space relation and dimension checks
    TensorCheck {
        #[command(flatten)]
        common: ParamArgs,
        /// block sizes, e.g. "1,1"
        #[arg(long)]
        d_split: String,
        /// square root of q, same grammar as --q
        #[arg(long, allow_hyphen_values = true)]
        v: Option<String>,
        /// also compute the exact commutant dimension
        #[arg(long)]
        commutant: bool,
    },
    /// Run the acceptance identities
    Selftest {
        #[command(flatten)]
        common: ParamArgs,
        #[arg(long, default_value = "quick")]
        level: String,
    },
}

fn main() {
    // grammar violations print usage on stderr and exit 1
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            std::process::exit(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let code = match dispatch(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Domain(_) => 1,
                Error::Internal(_) => 2,
            }
        }
    };
    std::process::exit(code);
}

fn parse_partition_json(v: &Value) -> Result<Partition, Error> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Domain("shape components must be arrays".into()))?;
    let mut parts = Vec::new();
    for x in arr {
        parts.push(
            x.as_u64()
                .ok_or_else(|| Error::Domain("parts must be non-negative integers".into()))?
                as u32,
        );
    }
    if !parts.windows(2).all(|w| w[0] >= w[1]) {
        return Err(Error::Domain(format!("parts must be weakly decreasing: {parts:?}")));
    }
    Ok(Partition::new(parts))
}

fn parse_multipartition(s: &str) -> Result<Multipartition, Error> {
    let v: Value =
        serde_json::from_str(s).map_err(|e| Error::Domain(format!("bad shape JSON: {e}")))?;
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Domain("shape must be an array of arrays".into()))?;
    if arr.is_empty() {
        return Err(Error::Domain("shape needs at least one component".into()));
    }
    Ok(Multipartition::new(
        arr.iter().map(parse_partition_json).collect::<Result<_, _>>()?,
    ))
}

fn parse_multicomposition(s: &str) -> Result<Multicomposition, Error> {
    let v: Value =
        serde_json::from_str(s).map_err(|e| Error::Domain(format!("bad weight JSON: {e}")))?;
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Domain("weight must be an array of arrays".into()))?;
    let mut comps = Vec::new();
    for c in arr {
        let ca = c
            .as_array()
            .ok_or_else(|| Error::Domain("weight components must be arrays".into()))?;
        let mut parts = Vec::new();
        for x in ca {
            parts.push(x.as_u64().ok_or_else(|| Error::Domain("bad part".into()))? as u32);
        }
        comps.push(Composition::new(parts));
    }
    Ok(Multicomposition::new(comps))
}

fn shape_json(l: &Multipartition) -> Value {
    Value::Array(
        l.components()
            .iter()
            .map(|p| Value::Array(p.parts().iter().map(|&x| json!(x)).collect()))
            .collect(),
    )
}

fn weight_json(m: &Multicomposition) -> Value {
    Value::Array(
        m.components()
            .iter()
            .map(|p| Value::Array(p.parts().iter().map(|&x| json!(x)).collect()))
            .collect(),
    )
}

/// Key used in maps: "(2,1)" for one component, the display form otherwise.
fn shape_key(l: &Multipartition) -> String {
    if l.r() == 1 {
        let parts: Vec<String> = l.component(1).parts().iter().map(|x| x.to_string()).collect();
        format!("({})", parts.join(","))
    } else {
        format!("{l}")
    }
}

struct Run {
    config: Value,
    warnings: Vec<String>,
    started: Instant,
}

impl Run {
    fn new(config: Value) -> Run {
        Run {
            config,
            warnings: Vec::new(),
            started: Instant::now(),
        }
    }

    fn warn(&mut self, w: impl Into<String>) {
        self.warnings.push(w.into());
    }

    fn emit(self, common: &ParamArgs, payload: Value, csv: Option<String>) -> Result<(), Error> {
        let body = if common.format == "csv" {
            match csv {
                Some(c) => c,
                None => {
                    return Err(Error::Domain(
                        "csv output is only available for matrix payloads".into(),
                    ))
                }
            }
        } else if common.format == "json" {
            let envelope = json!({
                "tool": "akw",
                "version": env!("CARGO_PKG_VERSION"),
                "config": self.config,
                "timing_ms": self.started.elapsed().as_millis() as u64,
                "warnings": self.warnings,
                "payload": payload,
            });
            serde_json::to_string_pretty(&envelope).unwrap()
        } else {
            return Err(Error::Domain(format!("unknown format {:?}", common.format)));
        };
        match &common.out {
            Some(path) => {
                let mut f = std::fs::File::create(path)
                    .map_err(|e| Error::Domain(format!("cannot write {path}: {e}")))?;
                writeln!(f, "{body}").map_err(|e| Error::Domain(format!("write failed: {e}")))?;
            }
            None => println!("{body}"),
        }
        Ok(())
    }
}

fn require_r(common: &ParamArgs) -> Result<usize, Error> {
    common.r.ok_or_else(|| Error::Domain("--r is required".into()))
}

fn require_n(common: &ParamArgs) -> Result<u32, Error> {
    common.n.ok_or_else(|| Error::Domain("--n is required".into()))
}

/// Builds parameters from the flags: symbolic, or a concrete field with q
/// and the Q list.
fn build_params(common: &ParamArgs) -> Result<ParameterSpec, Error> {
    let r = require_r(common)?;
    if common.symbolic {
        return Ok(ParameterSpec::symbolic(r));
    }
    let field = FieldSpec::parse(common.field.as_deref().unwrap_or("QQ"))?;
    let domain = field.to_domain();
    let q = parse_value(
        common.q.as_deref().ok_or_else(|| {
            Error::Domain("--q is required in concrete mode (or pass --symbolic)".into())
        })?,
        &domain,
    )?;
    let qs: Vec<Scalar> = common
        .qq
        .as_deref()
        .ok_or_else(|| Error::Domain("--Q is required in concrete mode".into()))?
        .split(',')
        .map(|s| parse_value(s, &domain))
        .collect::<Result<_, _>>()?;
    ParameterSpec::concrete(r, domain, q, qs)
}

fn config_json(common: &ParamArgs, extra: Value) -> Value {
    let mut cfg = json!({
        "r": common.r,
        "n": common.n,
        "field": common.field,
        "q": common.q,
        "Q": common.qq,
        "symbolic": common.symbolic,
        "e": common.e,
        "charge": common.charge,
        "format": common.format,
        "jobs": common.jobs,
        "override_scale": common.override_scale,
    });
    if let (Value::Object(base), Value::Object(ext)) = (&mut cfg, extra) {
        for (k, v) in ext {
            base.insert(k, v);
        }
    }
    cfg
}

fn setup_jobs(common: &ParamArgs) {
    if common.jobs > 0 {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(common.jobs)
            .build_global();
    }
}

fn dispatch(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Multipartitions(common) => {
            setup_jobs(&common);
            let run = Run::new(config_json(&common, json!({"subcommand": "multipartitions"})));
            let r = require_r(&common)?;
            let n = require_n(&common)?;
            let shapes = enumerate_multipartitions(r, n)?;
            let payload = json!({
                "count": shapes.len(),
                "order": "dominance-refining, most dominant first",
                "shapes": shapes.iter().map(shape_json).collect::<Vec<_>>(),
            });
            run.emit(&common, payload, None)
        }
        Command::Tableaux { common, lambda, mu } => {
            setup_jobs(&common);
            let run = Run::new(config_json(
                &common,
                json!({"subcommand": "tableaux", "lambda": lambda, "mu": mu}),
            ));
            let lam = parse_multipartition(&lambda)?;
            let std = standard_tableaux(&lam);
            let mut payload = json!({
                "shape": shape_json(&lam),
                "standard_count": std.len(),
                "standard": std.iter().map(|t| json!({
                    "rows": t.rows(),
                    "d": t.d().images(),
                })).collect::<Vec<_>>(),
            });
            if let Some(mu) = mu {
                let mu = parse_multicomposition(&mu)?;
                if mu.size() != lam.size() || mu.r() != lam.r() {
                    return Err(Error::Domain(
                        "size or component mismatch between shape and type".into(),
                    ));
                }
                let ss = semistandard_with_fibers(&lam, &mu);
                payload["semistandard_count"] = json!(ss.len());
                payload["semistandard"] = Value::Array(
                    ss.iter()
                        .map(|(t, fiber)| {
                            json!({
                                "rows": t.rows().iter().map(|comp| comp.iter().map(|row| row.iter().map(|e| json!([e.row, e.comp])).collect::<Vec<_>>()).collect::<Vec<_>>()).collect::<Vec<_>>(),
                                "fiber_size": fiber.len(),
                            })
                        })
                        .collect(),
                );
            }
            run.emit(&common, payload, None)
        }
        Command::Gram { common, lambda } => {
            setup_jobs(&common);
            let run = Run::new(config_json(&common, json!({"subcommand": "gram", "lambda": lambda})));
            let lam = parse_multipartition(&lambda)?;
            let params = build_params(&common)?;
            if params.is_symbolic() {
                return Err(Error::Domain("gram needs a concrete field".into()));
            }
            if lam.r() != params.r {
                return Err(Error::Domain("shape and parameters disagree on r".into()));
            }
            let n = lam.size();
            let alg = HeckeAlgebra::new(params.clone(), n as usize);
            let ctx = SpechtContext::new(&alg, n, common.override_scale)?;
            let idx = ctx
                .shapes()
                .iter()
                .position(|s| s == &lam)
                .ok_or_else(|| Error::Domain("shape not found".into()))?;
            let g = ctx.gram_matrix(idx)?;
            let names = q_var_names(params.r);
            let rows: Vec<Vec<String>> = (0..g.rows)
                .map(|i| g.row(i).iter().map(|c| scalar_string(c, &names)).collect())
                .collect();
            let csv = rows.iter().map(|r| r.join(",")).collect::<Vec<_>>().join("\n");
            // the cell generator in the element wire format:
            // terms {a, one-line permutation, coefficient string}
            let m_lam_terms: Vec<Value> = ctx.murphy.m_lambdas[idx]
                .terms
                .iter()
                .map(|(m, c)| {
                    json!({
                        "a": m.a,
                        "w": m.w.images(),
                        "c": scalar_string(c, &names),
                    })
                })
                .collect();
            let payload = json!({
                "lambda": shape_json(&lam),
                "dim": g.rows,
                "rank": g.rank(),
                "matrix": rows,
                "m_lambda": m_lam_terms,
            });
            run.emit(&common, payload, Some(csv))
        }
        Command::Simples(common) => {
            setup_jobs(&common);
            let run = Run::new(config_json(&common, json!({"subcommand": "simples"})));
            let params = build_params(&common)?;
            let n = require_n(&common)?;
            if params.is_symbolic() {
                return Err(Error::Domain("simples needs a concrete field".into()));
            }
            let alg = HeckeAlgebra::new(params.clone(), n as usize);
            let ctx = SpechtContext::new(&alg, n, common.override_scale)?;
            let mut items = Vec::new();
            for (i, shape) in ctx.shapes().iter().enumerate() {
                let (nonzero, dim) = ctx.simple_dimension(i)?;
                items.push(json!({
                    "lambda": shape_json(shape),
                    "nonzero": nonzero,
                    "dim": dim,
                    "specht_dim": ctx.murphy.tableaux[i].len(),
                }));
            }
            let payload = json!({"e": params.e.describe(), "simples": items});
            run.emit(&common, payload, None)
        }
        Command::Blocks(common) => {
            setup_jobs(&common);
            let run = Run::new(config_json(&common, json!({"subcommand": "blocks"})));
            let params = build_params(&common)?;
            let n = require_n(&common)?;
            if params.is_symbolic() {
                return Err(Error::Domain("blocks needs a concrete field".into()));
            }
            let blocks = residue_blocks(&params, n)?;
            let names = q_var_names(params.r);
            let classes: Vec<Value> = blocks
                .classes
                .iter()
                .map(|members| {
                    let shapes: Vec<Value> =
                        members.iter().map(|&i| shape_json(&blocks.shapes[i])).collect();
                    let residues: Vec<String> =
                        residue_multiset(&params, &blocks.shapes[members[0]])
                            .iter()
                            .map(|s| scalar_string(s, &names))
                            .collect();
                    json!({"shapes": shapes, "residues": residues})
                })
                .collect();
            let payload = json!({"class_count": blocks.classes.len(), "classes": classes});
            run.emit(&common, payload, None)
        }
        Command::Decomp { common, hecke_submatrix } => {
            setup_jobs(&common);
            let mut run = Run::new(config_json(
                &common,
                json!({"subcommand": "decomp", "hecke_submatrix": hecke_submatrix}),
            ));
            let params = build_params(&common)?;
            let n = require_n(&common)?;
            if params.is_symbolic() {
                return Err(Error::Domain("decomp needs a concrete field".into()));
            }
            let alg = HeckeAlgebra::new(params.clone(), n as usize);
            let sctx = SpechtContext::new(&alg, n, common.override_scale)?;
            let engine = WeylEngine::new(&sctx);
            let poset = WeightPoset::standard(params.r, n)?;
            let dm = decomposition_matrix(&engine, &poset)?;
            run.warn("rows and columns are in the dominance-refining order, most dominant first");
            let csv = dm
                .entries
                .iter()
                .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
                .collect::<Vec<_>>()
                .join("\n");
            let mut payload = json!({
                "rows": dm.shapes.iter().map(shape_json).collect::<Vec<_>>(),
                "cols": dm.shapes.iter().map(shape_json).collect::<Vec<_>>(),
                "entries": dm.entries,
                "ascending_display": dm.display_ascending(),
                "specht_rank": dm.specht_rank,
            });
            if hecke_submatrix {
                payload["hecke_cols"] = Value::Array(
                    dm.hecke_cols.iter().map(|&c| shape_json(&dm.shapes[c])).collect(),
                );
                payload["hecke_entries"] = json!(dm.hecke_submatrix());
            }
            run.emit(&common, payload, Some(csv))
        }
        Command::SchurElements(common) => {
            setup_jobs(&common);
            let run = Run::new(config_json(&common, json!({"subcommand": "schur-elements"})));
            let r = require_r(&common)?;
            let n = require_n(&common)?;
            let shapes = enumerate_multipartitions(r, n)?;
            let symbolic_names = q_var_names(r);
            let concrete = if common.symbolic || common.q.is_none() {
                None
            } else {
                Some(build_params(&common)?)
            };
            let mut values = serde_json::Map::new();
            let mut degrees = serde_json::Map::new();
            for shape in &shapes {
                let s = schur_element(shape, shape.length().max(1))?;
                let rendered = match &concrete {
                    None => scalar_string(&s.value, &symbolic_names),
                    Some(p) => {
                        let v = specialize(&s.value, p)?;
                        scalar_string(&v, &symbolic_names)
                    }
                };
                values.insert(shape_key(shape), json!(rendered));
                let d = generic_degree(shape)?;
                degrees.insert(shape_key(shape), json!(scalar_string(&d, &symbolic_names)));
            }
            let payload = json!({"schur_elements": values, "generic_degrees": degrees});
            run.emit(&common, payload, None)
        }
        Command::Semisimple { common, groups } => {
            setup_jobs(&common);
            let run = Run::new(config_json(&common, json!({"subcommand": "semisimple", "groups": groups})));
            let r = require_r(&common)?;
            let n = require_n(&common)?;
            let names = q_var_names(r);
            let ph = p_hecke(r, n);
            let mut payload = json!({"p_hecke": scalar_string(&ph, &names)});
            if !common.symbolic && common.q.is_some() {
                let params = build_params(&common)?;
                let val = specialize(&ph, &params)?;
                payload["value"] = json!(scalar_string(&val, &names));
                payload["semisimple"] = json!(!val.is_zero());
                payload["e"] = json!(params.e.describe());
                if let Some(g) = groups {
                    let parsed: Vec<Vec<usize>> = g
                        .split('|')
                        .map(|grp| {
                            grp.split(',')
                                .map(|x| x.trim().parse::<usize>())
                                .collect::<Result<Vec<_>, _>>()
                        })
                        .collect::<Result<_, _>>()
                        .map_err(|e| Error::Domain(format!("bad --groups: {e}")))?;
                    let ok = morita_polynomial_nonzero(&params, &parsed, n)?;
                    payload["morita_reduction_applicable"] = json!(ok);
                }
            }
            run.emit(&common, payload, None)
        }
        Command::Kleshchev(common) => {
            setup_jobs(&common);
            let mut run = Run::new(config_json(&common, json!({"subcommand": "kleshchev"})));
            let r = require_r(&common)?;
            let n = require_n(&common)?;
            let e = common.e;
            let charges: Vec<i64> = match &common.charge {
                Some(c) => c
                    .split(',')
                    .map(|x| x.trim().parse::<i64>())
                    .collect::<Result<_, _>>()
                    .map_err(|e| Error::Domain(format!("bad --charge: {e}")))?,
                None => vec![0; r],
            };
            if charges.len() != r {
                return Err(Error::Domain("need one charge per component".into()));
            }
            let cfg = EResidueConfig::new(e, charges)?;
            if e.is_none() {
                run.warn("e is infinite: every multipartition is reported, nothing is asserted");
                let shapes = enumerate_multipartitions(r, n)?;
                let payload = json!({
                    "count": shapes.len(),
                    "shapes": shapes.iter().map(shape_json).collect::<Vec<_>>(),
                });
                return run.emit(&common, payload, None);
            }
            let klesh = kleshchev_multipartitions(r, n, &cfg)?;
            run.warn("edge labels use the identity relabeling: conjectural labeling");
            let mut edges = Vec::new();
            for mu in &klesh {
                for (i, lam) in branching_prediction(mu, &cfg)? {
                    edges.push(json!({
                        "from": shape_json(&lam),
                        "to": shape_json(mu),
                        "residue": i,
                    }));
                }
            }
            let payload = json!({
                "count": klesh.len(),
                "shapes": klesh.iter().map(shape_json).collect::<Vec<_>>(),
                "edges": edges,
            });
            run.emit(&common, payload, None)
        }
        Command::Jantzen { common, lambda } => {
            setup_jobs(&common);
            let mut run = Run::new(config_json(&common, json!({"subcommand": "jantzen", "lambda": lambda})));
            let params = build_params(&common)?;
            let n = require_n(&common)?;
            if params.is_symbolic() {
                return Err(Error::Domain("jantzen needs a concrete base field".into()));
            }
            let system = ModularSystem::new(&params, n)?;
            let alg = lifted_algebra(&system, n);
            let sctx = SpechtContext::new(&alg, n, common.override_scale)?;
            let poset = WeightPoset::standard(params.r, n)?;
            let reports = sum_formula_all_shapes(&sctx, &system, &poset.weights)?;
            let wanted = lambda.map(|l| parse_multipartition(&l)).transpose()?;
            let mut items = Vec::new();
            let mut mismatched_det = 0usize;
            for rep in &reports {
                if let Some(w) = &wanted {
                    if &rep.lambda != w {
                        continue;
                    }
                }
                let rows: Vec<Value> = rep
                    .rows
                    .iter()
                    .map(|row| {
                        if let Some(dg) = &row.det_vs_g {
                            if !dg.agree_up_to_unit {
                                mismatched_det += 1;
                            }
                        }
                        json!({
                            "nu": weight_json(&row.weight),
                            "weight_space_dim": row.weight_space_dim,
                            "gram_valuation": row.gram_valuation,
                            "rim_hook_side": row.hook_side,
                            "match": row.matches,
                            "det_vs_g": row.det_vs_g.as_ref().map(|d| json!({
                                "valuations_agree": d.valuations_agree,
                                "equal": d.equal,
                                "equal_up_to_sign": d.equal_up_to_sign,
                                "agree_up_to_unit": d.agree_up_to_unit,
                                "unit_ratio_at_one": d.unit_ratio_at_one.as_ref()
                                    .map(|u| scalar_string(u, &q_var_names(params.r))),
                            })),
                        })
                    })
                    .collect();
                items.push(json!({
                    "lambda": shape_json(&rep.lambda),
                    "all_match": rep.all_match,
                    "weights": rows,
                }));
            }
            if mismatched_det > 0 {
                run.warn(format!(
                    "det G and the rim-hook product differ beyond sign in {mismatched_det} comparisons; the valuation identity is the normative check"
                ));
            }
            let payload = json!({"shapes": items});
            run.emit(&common, payload, None)
        }
        Command::Census { common, mu, borel, double_centralizer } => {
            setup_jobs(&common);
            let run = Run::new(config_json(
                &common,
                json!({"subcommand": "census", "mu": mu, "borel": borel, "double_centralizer": double_centralizer}),
            ));
            let r = require_r(&common)?;
            let n = require_n(&common)?;
            let poset = WeightPoset::standard(r, n)?;
            let weights: Vec<Multicomposition> = match mu {
                Some(m) => vec![parse_multicomposition(&m)?],
                None => poset.weights.clone(),
            };
            let mut rows = Vec::new();
            for w in &weights {
                let (mult, dim) = permutation_module_census(w)?;
                let m: serde_json::Map<String, Value> =
                    mult.iter().map(|(l, &k)| (shape_key(l), json!(k))).collect();
                rows.push(json!({"mu": weight_json(w), "dim": dim, "multiplicities": m}));
            }
            let mut payload = json!({
                "weights": rows,
                "schur_dimension": schur_dimension(&poset),
                "saturated": poset.saturated,
            });
            if borel {
                let c = borel_census(r, n)?;
                payload["borel"] = json!({
                    "lowering_count": c.lowering_count,
                    "raising_count": c.raising_count,
                    "product_filtered": c.product_filtered,
                    "product_unfiltered": c.product_unfiltered,
                    "schur_dim": c.schur_dim,
                    "filtered_matches_dimension": c.product_filtered == c.schur_dim,
                });
            }
            if double_centralizer {
                let params = build_params(&common)?;
                if params.is_symbolic() {
                    return Err(Error::Domain(
                        "the double-centralizer check needs a concrete field".into(),
                    ));
                }
                let alg = HeckeAlgebra::new(params, n as usize);
                let sctx = SpechtContext::new(&alg, n, common.override_scale)?;
                let rep = double_centralizer_check(&sctx, &poset)?;
                payload["double_centralizer"] = json!({
                    "commutant_dim": rep.commutant_dim,
                    "expected_commutant_dim": rep.expected_commutant_dim,
                    "bicommutant_dim": rep.bicommutant_dim,
                    "expected_bicommutant_dim": rep.expected_bicommutant_dim,
                    "holds": rep.holds(),
                });
            }
            run.emit(&common, payload, None)
        }
        Command::TensorCheck { common, d_split, v, commutant } => {
            setup_jobs(&common);
            let mut run = Run::new(config_json(
                &common,
                json!({"subcommand": "tensor-check", "d_split": d_split, "v": v, "commutant": commutant}),
            ));
            let split: Vec<u32> = d_split
                .split(',')
                .map(|x| x.trim().parse::<u32>())
                .collect::<Result<_, _>>()
                .map_err(|e| Error::Domain(format!("bad --d-split: {e}")))?;
            let n = require_n(&common)?;
            let r = split.len();
            let space = if common.symbolic {
                TensorSpace::symbolic(split, n)?
            } else {
                let field = FieldSpec::parse(common.field.as_deref().unwrap_or("QQ"))?;
                let domain = field.to_domain();
                let v_val = match (&v, &common.q) {
                    (Some(vs), _) => parse_value(vs, &domain)?,
                    (None, Some(qs)) => {
                        let qv = parse_value(qs, &domain)?;
                        try_sqrt(&qv).ok_or_else(|| {
                            Error::Domain(
                                "q has no square root in this field; pass --v directly or use a cyclotomic extension"
                                    .into(),
                            )
                        })?
                    }
                    (None, None) => {
                        return Err(Error::Domain("pass --v (or --q with a square root)".into()))
                    }
                };
                let qs: Vec<Scalar> = common
                    .qq
                    .as_deref()
                    .ok_or_else(|| Error::Domain("--Q is required".into()))?
                    .split(',')
                    .map(|s| parse_value(s, &domain))
                    .collect::<Result<_, _>>()?;
                if qs.len() != r {
                    return Err(Error::Domain("need one Q per block".into()));
                }
                TensorSpace::with_values(split, n, domain, v_val, qs)?
            };
            let relation_verdict = space.verify_relations().map(|_| "ok".to_string());
            let rep = schur_weyl_dimension_check(&space, commutant)?;
            if !rep.holds() {
                run.warn("a tensor dimension identity failed");
            }
            let names = v_var_names(r);
            let payload = json!({
                "relations": match relation_verdict { Ok(s) => s, Err(e) => format!("{e}") },
                "v": scalar_string(&space.v, &names),
                "tensor_dim": rep.tensor_dim,
                "bimodule_dim": rep.bimodule_dim,
                "commutant_dim": rep.commutant_dim,
                "expected_commutant_dim": rep.expected_commutant_dim,
            });
            run.emit(&common, payload, None)
        }
        Command::Selftest { common, level } => {
            setup_jobs(&common);
            let mut run = Run::new(config_json(&common, json!({"subcommand": "selftest", "level": level})));
            let lvl = match level.as_str() {
                "quick" => Level::Quick,
                "full" => Level::Full,
                other => return Err(Error::Domain(format!("unknown level {other:?}"))),
            };
            akw_core::selftest::empty_case_check()?;
            let reports = run_selftest(lvl);
            let all = reports.iter().all(|r| r.passed);
            let total_ms: u128 = reports.iter().map(|r| r.millis).sum();
            if lvl == Level::Quick && total_ms > 120_000 {
                run.warn(format!(
                    "quick selftest took {total_ms} ms, over the two-minute budget (soft warning)"
                ));
            }
            for r in &reports {
                eprintln!(
                    "{} criterion {:2} {} [{} ms] {}",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.id,
                    r.name,
                    r.millis,
                    r.detail
                );
            }
            let payload = json!({
                "level": level,
                "all_passed": all,
                "criteria": reports.iter().map(|r| json!({
                    "id": r.id,
                    "name": r.name,
                    "passed": r.passed,
                    "detail": r.detail,
                    "ms": r.millis as u64,
                })).collect::<Vec<_>>(),
            });
            run.emit(&common, payload, None)?;
            if !all {
                let failed: Vec<String> = reports
                    .iter()
                    .filter(|r| !r.passed)
                    .map(|r| format!("criterion {} ({})", r.id, r.name))
                    .collect();
                return Err(Error::Internal(format!("selftest failed: {}", failed.join(", "))));
            }
            Ok(())
        }
    }
}

/// Square roots in the concrete fields, for deriving v from q.
fn try_sqrt(q: &Scalar) -> Option<Scalar> {
    match q {
        Scalar::Rat(x) => {
            let n = x.numer().sqrt();
            let d = x.denom().sqrt();
            let cand = num_rational::BigRational::new(n, d);
            (&cand * &cand == *x).then(|| Scalar::Rat(cand))
        }
        Scalar::Fp(x) => (0..x.p)
            .find(|v| (*v as u128 * *v as u128) % x.p as u128 == x.v as u128)
            .map(|v| Scalar::Fp(akw_core::coeff::FpElt { p: x.p, v })),
        Scalar::Cyc(x) => {
            // pure powers of the root of unity
            let e = x.e as i64;
            for k in 0..e {
                if *x == akw_core::coeff::CycElt::zeta_pow(x.e, k) {
                    if k % 2 == 0 {
                        return Some(Scalar::Cyc(akw_core::coeff::CycElt::zeta_pow(x.e, k / 2)));
                    }
                    if e % 2 == 1 {
                        return Some(Scalar::Cyc(akw_core::coeff::CycElt::zeta_pow(
                            x.e,
                            (k + e) / 2,
                        )));
                    }
                    return None;
                }
            }
            None
        }
        _ => None,
    }
}
