use std::fmt::Write as _;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use engel_core::algebra::RankMode;
use engel_core::complex::{homology_report, strata_report, BettiReport, ComplexKind};
use engel_core::engel::{
    characteristic_foliation, elc as elc_of, elc_formula_check, foliation_closure_check, verify_witness, PlanePair,
};
use engel_core::lie::{engel_ansatz, family, type_info, AlgebraSpec, LieAlgebra4, FAMILY_IDS, TYPE_IDS};
use serde_json::{json, Value};

use crate::select::{self, Chosen};
use crate::{BettiArgs, CatalogAction, CliError, ElcArgs, FoliationArgs, Format, JacobiArgs, StrataArgs};

/// Output so far, plus the error that ends the run.
pub type Outcome = Result<String, (String, CliError)>;

fn fail<E: Into<CliError>>(e: E) -> (String, CliError) {
    (String::new(), e.into())
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn no_csv(format: Format, what: &str) -> Result<(), (String, CliError)> {
    match format {
        Format::Csv => Err(fail(CliError::Usage(format!("{what} has no csv output")))),
        _ => Ok(()),
    }
}

fn param_list(alg: &LieAlgebra4) -> String {
    let ps: Vec<&str> = alg.params().iter().map(|v| v.name()).collect();
    if ps.is_empty() {
        "none".into()
    } else {
        ps.join(", ")
    }
}

fn bracket_table(label: &str, alg: &LieAlgebra4) -> String {
    let mut s = format!("{label}\n{alg}\n");
    if !alg.nonzero().is_empty() {
        let nz: Vec<String> = alg.nonzero().iter().map(ToString::to_string).collect();
        let _ = writeln!(s, "assumed nonzero: {}", nz.join(", "));
    }
    s
}

pub fn families(action: CatalogAction) -> Outcome {
    match action {
        CatalogAction::List => {
            let mut s = String::new();
            for id in FAMILY_IDS {
                let alg = family(id).map_err(fail)?;
                let _ = writeln!(s, "family {id}: parameters {}", param_list(&alg));
            }
            Ok(s)
        }
        CatalogAction::Show { id } => Ok(bracket_table(&format!("family {id}"), &family(id).map_err(fail)?)),
        CatalogAction::Dump { id } => Ok(pretty(&AlgebraSpec::of(&family(id).map_err(fail)?))),
    }
}

pub fn types(action: CatalogAction, params: &[String]) -> Outcome {
    match action {
        CatalogAction::List => {
            let mut s = String::new();
            for id in TYPE_IDS {
                let info = type_info(id).map_err(fail)?;
                let ps: Vec<&str> = [(info.uses_a, "a"), (info.uses_b, "b")]
                    .iter()
                    .filter_map(|&(used, n)| used.then_some(n))
                    .collect();
                let ps = if ps.is_empty() { "none".to_string() } else { ps.join(", ") };
                let _ = write!(s, "type {id}: parameters {ps}");
                if let Some(c) = info.constraint {
                    let _ = write!(s, "; requires {c}");
                }
                s.push('\n');
            }
            Ok(s)
        }
        CatalogAction::Show { id } => {
            let c = select::type_choice(id, params).map_err(fail)?;
            Ok(bracket_table(&c.label, &c.alg))
        }
        CatalogAction::Dump { id } => Ok(pretty(&AlgebraSpec::of(&select::type_choice(id, params).map_err(fail)?.alg))),
    }
}

pub fn jacobi(args: &JacobiArgs) -> Outcome {
    no_csv(args.format, "jacobi")?;
    let chosen = select::jacobi(&args.selector, &args.params).map_err(fail)?;
    let (alg, label) = match chosen {
        Some(Chosen { alg, label, .. }) => (alg, label),
        None => (engel_ansatz(), "ansatz".to_string()),
    };
    let residuals = alg.jacobi_residuals();
    let total = residuals.len();
    let open: Vec<_> = residuals.into_iter().filter(|r| !r.value.is_zero()).collect();
    let verdict = match (open.is_empty(), args.selector.ansatz) {
        (true, _) => "PASS",
        (false, true) => "OPEN",
        (false, false) => "FAIL",
    };
    let out = match args.format {
        Format::Json => pretty(&json!({
            "algebra": label,
            "parameters": alg.params().iter().map(|v| v.name()).collect::<Vec<_>>(),
            "residuals": open.iter().map(|r| json!({
                "triple": [r.triple.0 + 1, r.triple.1 + 1, r.triple.2 + 1],
                "coord": r.coord + 1,
                "value": r.value.to_string(),
            })).collect::<Vec<_>>(),
            "verdict": verdict,
        })),
        _ => {
            let mut s = format!("algebra: {label}\n");
            let _ = writeln!(s, "parameters ({}): {}", alg.params().len(), param_list(&alg));
            let _ = writeln!(s, "nonzero residuals: {} of {total}", open.len());
            for r in &open {
                let (i, j, k) = r.triple;
                let _ = writeln!(s, "(y{},y{},y{}) y{}: {}", i + 1, j + 1, k + 1, r.coord + 1, r.value);
            }
            let _ = writeln!(s, "verdict: {verdict}");
            s
        }
    };
    if verdict == "FAIL" {
        return Err((out, CliError::Failed(format!("{label} violates the Jacobi identity"))));
    }
    Ok(out)
}

/// Runs `jobs` on a small worker pool; results keep the job order.
fn run_pool<T: Send, F: Fn(usize) -> T + Sync>(jobs: usize, f: F) -> Vec<T> {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(jobs.max(1));
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<T>>> = Mutex::new((0..jobs).map(|_| None).collect());
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::Relaxed);
                if k >= jobs {
                    break;
                }
                let r = f(k);
                slots.lock().expect("pool lock")[k] = Some(r);
            });
        }
    });
    slots.into_inner().expect("pool lock").into_iter().map(|r| r.expect("job ran")).collect()
}

fn csv_block(r: &BettiReport, label: &str) -> String {
    let mut s = format!("# {} complex, weight {}, {label}, mode {}", r.kind, r.weight, r.mode.variant);
    if let Some(seed) = r.mode.seed {
        let _ = write!(s, " seed {seed} trials {} range {}", r.mode.trials.unwrap_or(0), r.mode.range.unwrap_or(0));
    }
    if let Some(sp) = &r.specialization {
        let kv: Vec<String> = sp.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = write!(s, " specialization {}", kv.join(" "));
    }
    s.push('\n');
    s + &r.to_csv()
}

pub fn betti(args: &BettiArgs) -> Outcome {
    let kind: ComplexKind = args.complex.parse().map_err(fail)?;
    let mode = if args.symbolic {
        RankMode::SymbolicGeneric
    } else {
        RankMode::randomized(args.seed, args.trials, args.range).map_err(fail)?
    };
    let fixed = if args.specialize.is_empty() { None } else { Some(select::assignment(&args.specialize).map_err(fail)?) };
    let algs = select::all(&args.selector, &args.params).map_err(fail)?;
    let jobs: Vec<(&Chosen, i32)> = algs.iter().flat_map(|c| args.weights.iter().map(move |&w| (c, w))).collect();
    let results = run_pool(jobs.len(), |k| {
        let (c, w) = jobs[k];
        homology_report(kind, w, &c.alg, c.source.clone(), &mode, fixed.as_ref())
    });
    let mut reports = Vec::new();
    for r in results {
        reports.push(r.map_err(fail)?);
    }
    let out = match args.format {
        Format::Table => reports.iter().map(|r| r.to_table(args.paper_table)).collect::<Vec<_>>().join("\n"),
        Format::Json => pretty(&reports),
        Format::Csv => {
            reports.iter().zip(&jobs).map(|(r, (c, _))| csv_block(r, &c.label)).collect::<Vec<_>>().join("\n")
        }
    };
    match &args.output {
        Some(path) => {
            std::fs::write(path, out).map_err(|e| fail(CliError::Usage(format!("{}: {e}", path.display()))))?;
            Ok(String::new())
        }
        None => Ok(out),
    }
}

pub fn strata(args: &StrataArgs) -> Outcome {
    let kind: ComplexKind = args.complex.parse().map_err(fail)?;
    let c = select::one(&args.selector, &args.params).map_err(fail)?;
    let asg = select::assignment(&args.assign).map_err(fail)?;
    let info = strata_report(kind, args.weight, args.m, &c.alg, &asg).map_err(fail)?;
    let kv: Vec<String> = asg.iter().map(|(k, v)| format!("{}={v}", k.name())).collect();
    Ok(match args.format {
        Format::Json => pretty(&json!({
            "kind": kind.name(),
            "weight": args.weight,
            "algebra": c.source,
            "m": args.m,
            "assignment": asg.iter().map(|(k, v)| (k.name().to_string(), v.to_string())).collect::<std::collections::BTreeMap<_, _>>(),
            "rank": info.rank,
            "kernel": info.kernel_dim,
        })),
        Format::Csv => format!("m,rank,kernel\n{},{},{}\n", args.m, info.rank, info.kernel_dim),
        Format::Table => format!(
            "{kind} complex, weight {}, {}, m={}\nassignment: {}\nrank {}\nkernel {}\n",
            args.weight,
            c.label,
            args.m,
            if kv.is_empty() { "none".into() } else { kv.join(", ") },
            info.rank,
            info.kernel_dim
        ),
    })
}

pub fn elc(args: &ElcArgs) -> Outcome {
    no_csv(args.format, "elc")?;
    let id = args.class_type;
    if args.symbolic {
        if !args.params.is_empty() {
            return Err(fail(CliError::Usage("--symbolic keeps a and b symbolic; drop --param".into())));
        }
        let check = elc_formula_check(id).map_err(fail)?;
        let out = match args.format {
            Format::Json => pretty(&check),
            _ => {
                let mut s = format!("{}\ncomputed: {}\n", check.closed_form, check.computed);
                if check.matches {
                    s += "check: MATCH\n";
                } else {
                    let _ = writeln!(s, "check: MISMATCH\ndifference: {}", check.difference);
                }
                s
            }
        };
        if !check.matches {
            return Err((out, CliError::Failed(format!("type {id} closed form differs from the computed coefficient"))));
        }
        return Ok(out);
    }
    let (params, _) = select::class_params(&args.params).map_err(fail)?;
    if let Some(w) = &args.witness {
        let plane = PlanePair::parse(w).map_err(fail)?;
        let report = verify_witness(id, &plane, &params).map_err(fail)?;
        let verdict = if report.verified { "NONZERO" } else { "ZERO" };
        let out = match args.format {
            Format::Json => {
                let mut v = serde_json::to_value(&report).expect("serializable");
                v["verdict"] = Value::from(verdict);
                pretty(&v)
            }
            _ => {
                let mut s = format!("type {id}, plane {}\nE-l-C: {}\n", report.plane, report.elc);
                for smp in &report.samples {
                    let kv: Vec<String> = smp.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    let at = if kv.is_empty() { String::new() } else { format!(" at {}", kv.join(", ")) };
                    let flag = if smp.triple_nonzero { "independent" } else { "dependent" };
                    let _ = writeln!(s, "sample{at}: E-l-C {}, w1 w2 w3 {flag}", smp.elc);
                }
                s + verdict + "\n"
            }
        };
        if !report.verified {
            return Err((out, CliError::Failed(format!("plane {} gives no Engel-like structure", report.plane))));
        }
        return Ok(out);
    }
    let c = select::type_choice(id, &args.params).map_err(fail)?;
    let value = elc_of(&c.alg, &PlanePair::symbolic());
    Ok(match args.format {
        Format::Json => pretty(&json!({ "algebra": c.source, "elc": value.to_string() })),
        _ => format!("{}: {value}\n", c.label),
    })
}

pub fn foliation(args: &FoliationArgs) -> Outcome {
    no_csv(args.format, "foliation")?;
    let c = select::one(&args.selector, &args.params).map_err(fail)?;
    let sol = characteristic_foliation(&c.alg);
    let closed = foliation_closure_check(&c.alg, &sol);
    let out = match args.format {
        Format::Json => pretty(&json!({ "algebra": c.source, "foliation": sol, "closure_verified": closed })),
        _ => format!("{}: {sol}\nclosure: {}\n", c.label, if closed { "verified" } else { "FAILED" }),
    };
    if !closed {
        return Err((out, CliError::Failed("foliation does not close under substitution".into())));
    }
    Ok(out)
}
