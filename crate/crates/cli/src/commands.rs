//! One function per subcommand. Each returns the finished report.

use std::path::Path;

use hnlab_core::catalogue::{format as catalogue_format, ExampleReport};
use hnlab_core::cover::{witness_families, CoverError};
use hnlab_core::hn::HnError;
use hnlab_core::{
    build, check_consistency, enumerate_cases, oversemigroups_with_multiplicity, solve_exponents,
    symmetric_cover, theorem_verdict, vanishing_check, verify_delta, verify_example, Binomial,
    CoverQuery, ExampleSpec, ExponentPair, FamilyRegistry, NumericalSemigroup, SemigroupError,
};
use serde_json::{json, Value};

use crate::report::{Failure, Report};

/// Generators and `--n` values above this are refused.
pub const MAX_INPUT: u64 = 1_000_000;
pub const FROBENIUS_CAP_VAR: &str = "HNLAB_MAX_FROBENIUS";
const DEFAULT_FROBENIUS_CAP: u64 = 1_000_000;

type Outcome = Result<Value, Failure>;

fn report(command: &str, inputs: Value, outcome: Outcome) -> Report {
    Report {
        command: command.into(),
        inputs,
        outcome,
    }
}

/// `a,b,c` as three non-negative integers.
pub fn parse_triple(s: &str) -> Result<[u64; 3], String> {
    let parts: Vec<&str> = s.split(',').collect();
    let [x, y, z] = parts.as_slice() else {
        return Err(format!(
            "expected three comma-separated integers, got {s:?}"
        ));
    };
    let int = |t: &str| {
        t.trim()
            .parse::<u64>()
            .map_err(|_| format!("not a non-negative integer: {t:?}"))
    };
    Ok([int(x)?, int(y)?, int(z)?])
}

fn frobenius_cap() -> Result<u64, Failure> {
    match std::env::var(FROBENIUS_CAP_VAR) {
        Err(_) => Ok(DEFAULT_FROBENIUS_CAP),
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::usage(
                "BadEnvironment",
                format!("{FROBENIUS_CAP_VAR}={v:?} is not an integer"),
            )
        }),
    }
}

fn semigroup_failure(e: SemigroupError) -> Failure {
    let kind = match e {
        SemigroupError::EmptyInput => "EmptyInput",
        SemigroupError::ZeroGenerator => "ZeroGenerator",
        SemigroupError::NonCofinite(_) => "NonCofinite",
        SemigroupError::NotMember(_) => "NotMember",
    };
    Failure::domain(kind, e)
}

fn cover_failure(e: CoverError) -> Failure {
    match e {
        CoverError::UnsupportedMultiplicity { .. } => Failure::domain("UnsupportedMultiplicity", e),
        CoverError::FamilyRange(_) => Failure::domain("FamilyRange", e),
        CoverError::InvariantViolation(_) => Failure::mismatch(e, Value::Null),
    }
}

fn hn_failure(e: HnError) -> Failure {
    let kind = match e {
        HnError::InvalidExponent(_) => "InvalidExponent",
        HnError::InvalidTriple(_) => "InvalidTriple",
        HnError::NotImplementedRange(_) => "NotImplementedRange",
        HnError::BadMultiplicity(_) => "BadMultiplicity",
        HnError::Cases(_) => "OutOfRange",
    };
    Failure::domain(kind, e)
}

fn check_size(what: &str, values: &[u64]) -> Result<(), Failure> {
    match values.iter().find(|&&v| v > MAX_INPUT) {
        Some(v) => Err(Failure::domain(
            "InputTooLarge",
            format!("{what} {v} exceeds {MAX_INPUT}"),
        )),
        None => Ok(()),
    }
}

/// Parses a generator list and enforces the Frobenius cap.
fn semigroup(gens: &[u64]) -> Result<NumericalSemigroup, Failure> {
    check_size("generator", gens)?;
    let s = NumericalSemigroup::new(gens).map_err(semigroup_failure)?;
    let cap = frobenius_cap()?;
    if s.frobenius() > cap as i64 {
        return Err(Failure::domain(
            "FrobeniusCap",
            format!(
                "Frobenius number {} exceeds {FROBENIUS_CAP_VAR} = {cap}",
                s.frobenius()
            ),
        ));
    }
    Ok(s)
}

fn merge(a: Value, b: Value) -> Value {
    match (a, b) {
        (Value::Object(mut x), Value::Object(y)) => {
            x.extend(y);
            Value::Object(x)
        }
        (a, _) => a,
    }
}

fn semigroup_json(s: &NumericalSemigroup) -> Value {
    let profile = serde_json::to_value(s.profile()).expect("serializable");
    let traits = serde_json::to_value(s.traits()).expect("serializable");
    let head = json!({
        "minimal_generators": s.minimal_gens(),
        "apery": s.apery(),
    });
    merge(merge(head, profile), traits)
}

fn binomial_json(b: &Binomial) -> Value {
    json!({ "text": b.to_string(), "plus": b.plus, "minus": b.minus })
}

pub fn sgp_analyze(gens: &[u64]) -> Report {
    let outcome = semigroup(gens).map(|s| semigroup_json(&s));
    report("sgp analyze", json!({ "gens": gens }), outcome)
}

pub fn sgp_contains(gens: &[u64], n: u64) -> Report {
    let outcome = semigroup(gens).map(
        |s| json!({ "minimal_generators": s.minimal_gens(), "n": n, "member": s.contains(n) }),
    );
    report("sgp contains", json!({ "gens": gens, "n": n }), outcome)
}

pub fn sgp_apery(gens: &[u64], n: u64) -> Report {
    let outcome = (|| {
        check_size("n", &[n])?;
        let s = semigroup(gens)?;
        let apery = s.apery_set(n).map_err(semigroup_failure)?;
        let mut sorted = apery.clone();
        sorted.sort_unstable();
        Ok(json!({
            "minimal_generators": s.minimal_gens(),
            "n": n,
            "by_residue": apery,
            "sorted": sorted,
        }))
    })();
    report("sgp apery", json!({ "gens": gens, "n": n }), outcome)
}

pub fn sgp_oversemigroups(gens: &[u64], mult: Option<u64>) -> Report {
    let outcome = (|| {
        let s = semigroup(gens)?;
        let m = mult.unwrap_or(s.multiplicity());
        let mut found = oversemigroups_with_multiplicity(&s, m).map_err(cover_failure)?;
        found.sort();
        let rows: Vec<Value> = found
            .iter()
            .map(|u| {
                json!({
                    "generators": u.minimal_gens(),
                    "frobenius": u.frobenius(),
                    "symmetric": u.is_symmetric(),
                })
            })
            .collect();
        Ok(json!({
            "base": s.minimal_gens(),
            "multiplicity": m,
            "count": rows.len(),
            "symmetric_count": found.iter().filter(|u| u.is_symmetric()).count(),
            "oversemigroups": rows,
        }))
    })();
    report(
        "sgp oversemigroups",
        json!({ "gens": gens, "mult": mult }),
        outcome,
    )
}

pub fn sgp_sym_cover(gens: &[u64], mult: Option<u64>) -> Report {
    let outcome = (|| {
        let s = semigroup(gens)?;
        let mut q = CoverQuery::new(s.clone());
        if let Some(m) = mult {
            q.target_mult = m;
        }
        let v = symmetric_cover(&q).map_err(cover_failure)?;
        Ok(json!({
            "base": s.minimal_gens(),
            "multiplicity": q.target_mult,
            "covered": v.covered,
            "witness": v.witness.as_ref().map(|w| w.minimal_gens().to_vec()),
            "witness_frobenius": v.witness.as_ref().map(|w| w.frobenius()),
            "search_count": v.search_count,
        }))
    })();
    report(
        "sgp sym-cover",
        json!({ "gens": gens, "mult": mult }),
        outcome,
    )
}

pub fn sgp_families(m1: u64) -> Report {
    let outcome = (|| {
        check_size("m1", &[m1])?;
        let families = witness_families(m1).map_err(cover_failure)?;
        let rows: Vec<Value> = families
            .iter()
            .map(|(f, s)| {
                json!({
                    "name": f.name,
                    "generators": s.minimal_gens(),
                    "frobenius": s.frobenius(),
                    "expected_frobenius": f.expected_frobenius,
                    "symmetric": s.is_symmetric(),
                })
            })
            .collect();
        Ok(json!({ "m1": m1, "families": rows }))
    })();
    report("sgp families", json!({ "m1": m1 }), outcome)
}

pub fn delta_verify(bound: u64, jobs: usize) -> Report {
    let inputs = json!({ "bound": bound, "jobs": jobs });
    let outcome = (|| {
        check_size("bound", &[bound])?;
        let r = verify_delta(bound, jobs);
        let result = json!({
            "bound": r.bound,
            "examined": r.examined,
            "flagged": r.flagged,
            "expected": r.expected,
            "matches": r.matches(),
        });
        if r.matches() {
            Ok(result)
        } else {
            Err(Failure::mismatch(
                "flagged triples differ from the expected list",
                result,
            ))
        }
    })();
    report("delta verify", inputs, outcome)
}

fn pair(a: [u64; 3], b: [u64; 3]) -> Result<ExponentPair, Failure> {
    ExponentPair::new(a, b).map_err(hn_failure)
}

pub fn hn_build(a: [u64; 3], b: [u64; 3], e: Option<u64>) -> Report {
    let outcome = (|| {
        let h = build(&pair(a, b)?);
        let verdict = e
            .map(|e| theorem_verdict(&h, e).map_err(hn_failure))
            .transpose()?;
        Ok(json!({
            "a": h.exponents.a,
            "b": h.exponents.b,
            "c": h.exponents.c(),
            "generators": h.generators.iter().map(binomial_json).collect::<Vec<_>>(),
            "m": h.m,
            "gcd": h.gcd,
            "homogeneous": vanishing_check(&h),
            "value_semigroup": h.value_semigroup.as_ref().map(semigroup_json),
            "verdict": verdict,
        }))
    })();
    report("hn build", json!({ "a": a, "b": b, "e": e }), outcome)
}

pub fn hn_solve(m: [u64; 3]) -> Report {
    let outcome = solve_exponents(m).map_err(hn_failure).map(|pairs| {
        let solutions: Vec<Value> = pairs
            .iter()
            .map(|p| {
                json!({
                    "a": p.a,
                    "b": p.b,
                    "generators": build(p).generators.iter().map(binomial_json).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({ "m": m, "count": solutions.len(), "solutions": solutions })
    });
    report("hn solve", json!({ "m": m }), outcome)
}

pub fn hn_normalize(a: [u64; 3], b: [u64; 3]) -> Report {
    let outcome = pair(a, b).map(|p| {
        let n = p.normalize();
        json!({ "a": n.a, "b": n.b, "m": n.multipliers(), "m_before": p.multipliers() })
    });
    report("hn normalize", json!({ "a": a, "b": b }), outcome)
}

fn example_json(r: &ExampleReport) -> Value {
    let spec = &r.spec;
    json!({
        "id": spec.id,
        "n": spec.n,
        "m": spec.m,
        "f": spec.f_display(),
        "gcd_tuple": spec.gcd_tuple,
        "gcd": r.gcd,
        "gcd_ok": r.gcd_ok,
        "weight_checks": r.weight_checks,
        "skipped": r.skipped,
        "predicted": {
            "label": spec.predicted.label,
            "components": spec.predicted.components,
        },
        "record_consistent": r.record_consistent,
        "provenance": spec.provenance,
        "preconditions": spec.preconditions,
        "pass": r.pass,
    })
}

pub fn catalogue_check(id: &str, n: u64, m: [u64; 3]) -> Report {
    let inputs = json!({ "id": id, "n": n, "m": m });
    let outcome = (|| {
        let registry = FamilyRegistry::builtin();
        let spec = registry.example_spec(id, n, m).map_err(|e| {
            let kind = match e {
                hnlab_core::catalogue::CatalogueError::UnknownFamily(_) => "UnknownFamily",
                _ => "NotInCatalogue",
            };
            Failure::domain(kind, e)
        })?;
        let r = verify_example(&spec);
        let result = example_json(&r);
        if r.pass {
            Ok(result)
        } else {
            Err(Failure::mismatch("example failed its checks", result))
        }
    })();
    report("catalogue check", inputs, outcome)
}

pub fn catalogue_list() -> Report {
    let registry = FamilyRegistry::builtin();
    let families: Vec<Value> = registry
        .families()
        .map(|f| {
            let mut pairs = f.admissible();
            pairs.sort_unstable();
            let admissible: Vec<Value> = pairs
                .iter()
                .map(|(n, m)| json!({ "n": n, "m": m }))
                .collect();
            json!({ "id": f.id(), "summary": f.summary(), "admissible": admissible })
        })
        .collect();
    report(
        "catalogue list",
        json!({}),
        Ok(json!({ "families": families })),
    )
}

fn sweep(specs: &[ExampleSpec]) -> Outcome {
    let rows: Vec<(Value, bool)> = specs
        .iter()
        .map(|spec| {
            let r = verify_example(spec);
            let ok = r.pass && r.record_consistent;
            let row = json!({
                "id": spec.id,
                "n": spec.n,
                "m": spec.m,
                "label": spec.predicted.label,
                "pass": r.pass,
                "record_consistent": r.record_consistent,
            });
            (row, ok)
        })
        .collect();
    let passed = rows.iter().filter(|(_, ok)| *ok).count();
    let result = json!({
        "total": rows.len(),
        "passed": passed,
        "examples": rows.into_iter().map(|(row, _)| row).collect::<Vec<_>>(),
    });
    if passed == specs.len() {
        Ok(result)
    } else {
        Err(Failure::mismatch(
            format!(
                "{} of {} examples failed",
                specs.len() - passed,
                specs.len()
            ),
            result,
        ))
    }
}

pub fn catalogue_sweep(file: Option<&Path>) -> Report {
    let inputs = json!({ "file": file.map(|p| p.display().to_string()) });
    let outcome = (|| {
        let text = match file {
            Some(path) => std::fs::read_to_string(path)
                .map_err(|e| Failure::usage("Io", format!("{}: {e}", path.display())))?,
            None => catalogue_format::SHIPPED.to_string(),
        };
        let specs = catalogue_format::parse(&text).map_err(|e| Failure::usage("Parse", e))?;
        sweep(&specs)
    })();
    report("catalogue sweep", inputs, outcome)
}

pub fn catalogue_dump(out: Option<&Path>) -> Report {
    let inputs = json!({ "out": out.map(|p| p.display().to_string()) });
    let specs = FamilyRegistry::builtin().all_specs();
    let text = catalogue_format::render(&specs);
    let outcome = match out {
        Some(path) => std::fs::write(path, &text)
            .map(|_| json!({ "written": path.display().to_string(), "examples": specs.len() }))
            .map_err(|e| Failure::usage("Io", format!("{}: {e}", path.display()))),
        None => Ok(json!({ "examples": specs.len(), "catalogue": text })),
    };
    report("catalogue dump", inputs, outcome)
}

pub fn cases(e: u64, m1: Option<u64>) -> Report {
    let outcome = (|| {
        let records = enumerate_cases(e).map_err(|err| Failure::domain("OutOfRange", err))?;
        let rows = records
            .iter()
            .map(|r| {
                let consistency = m1
                    .map(|m1| check_consistency(r, m1).map_err(|err| Failure::domain("BadM1", err)))
                    .transpose()?;
                Ok(json!({
                    "label": r.label,
                    "components": r.components,
                    "consistency": consistency,
                }))
            })
            .collect::<Result<Vec<Value>, Failure>>()?;
        Ok(json!({ "e": e, "count": rows.len(), "records": rows }))
    })();
    report("cases", json!({ "e": e, "m1": m1 }), outcome)
}
