use std::fs;
use std::path::Path;

use holoprime::holonomy::spin7::{spin7_suite, P2Matrix};
use holoprime::holonomy::{g2::g2_suite, g2_build_tables, spin7_build_tables, Decomposition};
use holoprime::linalg::rational::parse_str;
use holoprime::mp::{mp_lower_bound_search, replay, MpCertificate, Strategy};
use holoprime::primeness::{
    koszul_suite, lambda_sampler, numeric_prime_certificate, prime_check_invariant, r5_suite, witness_search_verdict,
    SymbolComplex, SymbolComplexReport,
};
use holoprime::report::SuiteReport;
use holoprime::{Error, Form, Result, Subspace};
use serde::Serialize;
use serde_json::json;

use crate::{Command, Format, Group, LambdaMode, OutputArgs, PrimeMode, StrategyArg, Suite};

fn emit(output: &OutputArgs, json: &str, markdown: impl FnOnce() -> String) -> Result<()> {
    let text = match output.format {
        Format::Json => format!("{json}\n"),
        Format::Markdown => markdown(),
    };
    match &output.out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serialisable")
}

fn read_subspace(path: &Path) -> Result<Subspace> {
    let raw = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&raw)?)
}

pub fn run(command: Command) -> Result<u8> {
    match command {
        Command::Decompose { group, degree, output } => decompose(group, degree, &output),
        Command::Verify {
            suite,
            samples,
            seed,
            claim_map,
            output,
        } => verify(suite, samples, seed, claim_map, &output),
        Command::CheckPrime {
            input,
            mode,
            transitive,
            samples,
            seed,
            output,
        } => check_prime(&input, mode, transitive, samples, seed, &output),
        Command::CheckCompletePrime {
            e,
            f,
            lambda,
            covector,
            samples,
            seed,
            output,
        } => check_complete_prime(&e, f.as_deref(), lambda, covector.as_deref(), samples, seed, &output),
        Command::MpSearch {
            n,
            strategy,
            budget,
            seed,
            output,
        } => mp_search(n, strategy, budget, seed, &output),
        Command::MpReplay { certificate, output } => mp_replay(&certificate, &output),
    }
}

fn decompose(group: Group, degree: usize, output: &OutputArgs) -> Result<u8> {
    let (name, dec): (&str, Decomposition) = match group {
        Group::G2 => ("g2", g2_build_tables()?.decomposition),
        Group::Spin7 => ("spin7", spin7_build_tables()?.decomposition),
    };
    if degree > dec.ambient() {
        return Err(Error::DegreeOverflow {
            degree,
            n: dec.ambient(),
        });
    }
    let components: Vec<_> = dec
        .degree(degree)
        .into_iter()
        .map(|c| {
            json!({
                "name": c.name(),
                "dim": c.space.dim(),
                "basis": c.space.basis_forms().iter().map(|f| f.to_string()).collect::<Vec<_>>(),
            })
        })
        .collect();
    let doc = json!({ "group": name, "n": dec.ambient(), "degree": degree, "components": components });
    emit(output, &to_json(&doc), || {
        let mut md = format!("# {name}, degree {degree}\n");
        for c in dec.degree(degree) {
            md.push_str(&format!("\n## {} (dim {})\n\n", c.name(), c.space.dim()));
            for f in c.space.basis_forms() {
                md.push_str(&format!("- `{f}`\n"));
            }
        }
        md
    })?;
    Ok(0)
}

#[derive(Serialize)]
struct VerifyOutput {
    seed: u64,
    samples: usize,
    passed: bool,
    suites: Vec<SuiteReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    p2_matrix: Option<P2Matrix>,
}

fn verify(suite: Suite, samples: usize, seed: u64, claim_map: bool, output: &OutputArgs) -> Result<u8> {
    if samples == 0 {
        return Err(Error::InvalidArgument("--samples must be positive".into()));
    }
    let mut suites = Vec::new();
    let mut p2 = None;
    if matches!(suite, Suite::G2 | Suite::All) {
        suites.push(g2_suite(samples, seed)?);
    }
    if matches!(suite, Suite::Spin7 | Suite::All) {
        let (report, matrix) = spin7_suite(samples, seed)?;
        suites.push(report);
        p2 = Some(matrix);
    }
    if matches!(suite, Suite::R5 | Suite::All) {
        suites.push(r5_suite(samples, seed)?);
    }
    if matches!(suite, Suite::Koszul | Suite::All) {
        suites.push(koszul_suite(samples, seed)?);
    }
    if claim_map {
        for s in &suites {
            for item in &s.items {
                println!("{}\t{}", item.id, item.claim);
            }
        }
        return Ok(0);
    }
    let passed = suites.iter().all(|s| s.passed);
    if let (Some(matrix), Some(out)) = (&p2, &output.out) {
        let dir = out.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
        fs::write(dir.join("p2_matrix.json"), to_json(matrix) + "\n")?;
    }
    let doc = VerifyOutput {
        seed,
        samples,
        passed,
        suites,
        p2_matrix: p2,
    };
    emit(output, &to_json(&doc), || {
        doc.suites.iter().map(|s| s.to_markdown() + "\n").collect()
    })?;
    Ok(if passed { 0 } else { 1 })
}

fn check_prime(
    input: &Path,
    mode: PrimeMode,
    transitive: bool,
    samples: usize,
    seed: u64,
    output: &OutputArgs,
) -> Result<u8> {
    let space = read_subspace(input)?;
    let n = space.ambient();
    let (doc, not_prime) = match mode {
        PrimeMode::Invariant => {
            let v = prime_check_invariant(&space, &Form::covector(n, 1)?, transitive)?;
            (json!({ "verdict": v }), v.is_not_prime())
        }
        PrimeMode::Witness => {
            let v = witness_search_verdict(&space, samples, seed);
            (json!({ "verdict": v }), v.is_not_prime())
        }
        PrimeMode::Numeric => {
            let c = numeric_prime_certificate(&space, samples.clamp(1, 16), 1e-6, seed)?;
            let below = c.below_tolerance;
            (json!({ "status": "evidence_only", "numeric": c }), below)
        }
    };
    let text = to_json(&doc);
    emit(output, &text, || format!("```json\n{text}\n```\n"))?;
    Ok(if not_prime { 1 } else { 0 })
}

fn parse_covector(raw: &str) -> Result<Form> {
    let coords = raw
        .split(',')
        .map(|s| parse_str(s.trim()))
        .collect::<Result<Vec<_>>>()?;
    let f = Form::from_covector_coords(&coords);
    if f.is_zero() {
        return Err(Error::ZeroCovector);
    }
    Ok(f)
}

fn check_complete_prime(
    e: &Path,
    f: Option<&Path>,
    mode: LambdaMode,
    covector: Option<&str>,
    samples: usize,
    seed: u64,
    output: &OutputArgs,
) -> Result<u8> {
    let e = read_subspace(e)?;
    let n = e.ambient();
    let complex = match f {
        Some(path) => SymbolComplex::type2(&read_subspace(path)?, &e)?,
        None => SymbolComplex::type1(&e)?,
    };
    let lambdas = match (covector, mode) {
        (Some(raw), _) => {
            let l = parse_covector(raw)?;
            if l.ambient() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: l.ambient(),
                });
            }
            vec![l]
        }
        (None, LambdaMode::Invariant) => vec![Form::covector(n, 1)?],
        (None, LambdaMode::Generic) => lambda_sampler(n, samples, seed),
    };
    let reports: Vec<SymbolComplexReport> = lambdas.iter().map(|l| complex.at(l)).collect::<Result<_>>()?;
    let exact = reports.iter().all(|r| r.verdict);
    let evidence = match (covector, mode) {
        (None, LambdaMode::Generic) => format!("generic-λ evidence ({} samples)", reports.len()),
        _ => "single covector".to_string(),
    };
    let doc = json!({
        "exact": exact,
        "evidence": evidence,
        "dims": complex.dims(),
        "euler_characteristic": complex.euler_characteristic(),
        "first_report": reports.first(),
        "inexact_samples": reports.iter().filter(|r| !r.verdict).count(),
    });
    let text = to_json(&doc);
    emit(output, &text, || format!("```json\n{text}\n```\n"))?;
    Ok(if exact { 0 } else { 1 })
}

fn mp_search(n: usize, strategy: StrategyArg, budget: usize, seed: u64, output: &OutputArgs) -> Result<u8> {
    let strategy = match strategy {
        StrategyArg::Greedy => Strategy::Greedy,
        StrategyArg::Randomized => Strategy::Randomized,
    };
    let cert = mp_lower_bound_search(n, strategy, budget, seed)?;
    let ok = replay(&cert).is_ok();
    let text = to_json(&cert);
    emit(output, &text, || {
        format!(
            "# MP search, n = {n}\n\ndimension {} (floor {}), baseline {}, {} steps, replay {}\n",
            cert.dimension,
            cert.floor,
            cert.baseline.name(),
            cert.steps.len(),
            if ok { "ok" } else { "FAILED" }
        )
    })?;
    Ok(if ok && cert.dimension >= cert.floor { 0 } else { 1 })
}

fn mp_replay(path: &Path, output: &OutputArgs) -> Result<u8> {
    let raw = fs::read_to_string(path)?;
    let cert: MpCertificate = serde_json::from_str(&raw)?;
    let (ok, reason) = match replay(&cert) {
        Ok(_) => (true, None),
        Err(Error::Consistency(why)) => (false, Some(why)),
        Err(other) => return Err(other),
    };
    let doc = json!({ "n": cert.n, "dimension": cert.dimension, "replayed": ok, "reason": reason });
    let text = to_json(&doc);
    emit(output, &text, || format!("```json\n{text}\n```\n"))?;
    Ok(if ok { 0 } else { 1 })
}
