//! End-to-end acceptance checks. Each criterion prints one PASS or FAIL line;
//! the test fails if any of them fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use hnlab_core::cover::{witness_families, DELTA};
use hnlab_core::{
    binomial_weight_vanishes, build, check_consistency, enumerate_cases,
    oversemigroups_with_multiplicity, solve_exponents, vanishing_check, verify_example,
    ExponentPair, FamilyRegistry, NumericalSemigroup,
};
use serde_json::Value;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sg(gens: &[u64]) -> NumericalSemigroup {
    NumericalSemigroup::new(gens).unwrap()
}

fn delta_reproduction() -> Verdict {
    let out = Command::new(env!("CARGO_BIN_EXE_hnlab"))
        .args(["--format", "json", "delta", "verify", "--bound", "20"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(0), || {
        format!("exit status {:?}", out.status)
    })?;
    let report: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let flagged: Vec<[u64; 3]> =
        serde_json::from_value(report["result"]["flagged"].clone()).map_err(|e| e.to_string())?;
    ensure(flagged == DELTA, || format!("flagged {flagged:?}"))?;
    Ok(format!(
        "flagged {flagged:?} among {} triples",
        report["result"]["examined"]
    ))
}

fn witness_family_frobenius() -> Verdict {
    let mut checked = 0;
    for m1 in 5..=50 {
        let families = witness_families(m1).map_err(|e| e.to_string())?;
        let want = [2 * m1 - 1, 2 * m1 + 1, 4 * m1 - 3, 2 * m1 + 3];
        for ((family, s), f) in families.iter().zip(want) {
            ensure(s.is_symmetric() && s.frobenius() == f as i64, || {
                format!(
                    "m1 = {m1}, {}: F = {}, want {f}",
                    family.name,
                    s.frobenius()
                )
            })?;
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} family members symmetric with the stated Frobenius numbers"
    ))
}

fn fixed_semigroup_facts() -> Verdict {
    ensure(sg(&[4, 5, 6]).frobenius() == 7, || "F<4,5,6> != 7".into())?;
    ensure(sg(&[4, 6, 7]).frobenius() == 9, || "F<4,6,7> != 9".into())?;
    ensure(sg(&[3, 4]).is_symmetric(), || "<3,4> not symmetric".into())?;
    let s = sg(&[3, 4, 5]);
    let (p, t) = (s.profile(), s.traits());
    ensure(
        p.frobenius == 2 && p.n_below == 1 && t.semigroup_type == 2 && t.almost_symmetric,
        || format!("<3,4,5>: {p:?} {t:?}"),
    )?;
    Ok(
        "F<4,5,6> = 7, F<4,6,7> = 9, <3,4> symmetric, <3,4,5>: F 2, n 1, type 2, almost symmetric"
            .into(),
    )
}

type PrintedIdeal = ([u64; 3], [u64; 3], [u64; 3], [&'static str; 3]);

fn exponent_matrices() -> Verdict {
    // (a, b, m, generators)
    let printed: [PrintedIdeal; 4] = [
        (
            [1, 1, 1],
            [2, 1, 1],
            [3, 4, 5],
            ["x^3-y*z", "y^2-x*z", "z^2-x^2*y"],
        ),
        (
            [1, 1, 1],
            [3, 1, 1],
            [3, 5, 7],
            ["x^4-y*z", "y^2-x*z", "z^2-x^3*y"],
        ),
        (
            [2, 2, 1],
            [1, 1, 1],
            [4, 5, 7],
            ["x^3-y*z", "y^3-x^2*z", "z^2-x*y^2"],
        ),
        (
            [3, 2, 1],
            [1, 1, 1],
            [4, 7, 9],
            ["x^4-y*z", "y^3-x^3*z", "z^2-x*y^2"],
        ),
    ];
    for (a, b, m, gens) in printed {
        let e = ExponentPair::new(a, b).map_err(|e| e.to_string())?;
        let h = build(&e);
        let shown: Vec<String> = h.generators.iter().map(|g| g.to_string()).collect();
        ensure(h.m == m && shown == gens, || {
            format!("{a:?},{b:?}: m {:?}, {shown:?}", h.m)
        })?;
        let solved = solve_exponents(m).map_err(|e| e.to_string())?;
        ensure(solved == vec![e], || format!("solve {m:?} gave {solved:?}"))?;
    }
    // the b3 = 2 branch for (4,7,9) would need a1 = (7 - 9)/2 < 0
    let solved = solve_exponents([4, 7, 9]).map_err(|e| e.to_string())?;
    ensure(solved.iter().all(|p| p.b[2] == 1), || format!("{solved:?}"))?;
    Ok("four exponent pairs rebuild the printed generators and m; solver round-trips".into())
}

fn case_taxonomy() -> Verdict {
    let want: [&[&str]; 3] = [
        &["(a)"],
        &["(b.1)", "(b.2)", "(b.3)"],
        &["(c.1)", "(c.2)", "(c.3)", "(c.4)", "(c.5)"],
    ];
    for (e, labels) in (1..=3).zip(want) {
        let records = enumerate_cases(e).map_err(|x| x.to_string())?;
        let got: Vec<&str> = records.iter().map(|r| r.label.as_str()).collect();
        ensure(got == labels, || format!("e = {e}: {got:?}"))?;
        for r in &records {
            for m1 in 3..=10 {
                let c = check_consistency(r, m1).map_err(|x| x.to_string())?;
                let per_component = r.components.iter().zip(&c.component_multiplicities);
                ensure(
                    r.weighted_sum() == e
                        && c.total == m1 * e
                        && per_component.clone().all(|(p, &em)| em == m1 * p.sigma),
                    || format!("{r} with m1 = {m1}: {c:?}"),
                )?;
            }
        }
    }
    Ok("1/3/5 labelled records for e = 1/2/3, all consistent".into())
}

fn catalogue_sweep() -> Verdict {
    let specs = FamilyRegistry::builtin().all_specs();
    for spec in &specs {
        let r = verify_example(spec);
        ensure(r.pass && r.gcd == 1, || {
            format!("{} n={} m={:?}", spec.id, spec.n, spec.m)
        })?;
    }
    Ok(format!(
        "{} examples pass weight and gcd checks",
        specs.len()
    ))
}

/// Brute-force oracles for the property criterion.
mod oracle {
    pub fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    pub fn members(gens: &[u64], limit: u64) -> Vec<bool> {
        let mut member = vec![false; limit as usize + 1];
        member[0] = true;
        for n in 1..=limit {
            member[n as usize] = gens.iter().any(|&g| g <= n && member[(n - g) as usize]);
        }
        member
    }

    /// Additively closed subsets of `[1, top]` with gcd 1: one per semigroup
    /// generated by integers `<= top`.
    pub fn closed_subsets(top: u64) -> Vec<Vec<u64>> {
        let mut out = Vec::new();
        let mut stack = vec![(1u64, Vec::<u64>::new())];
        while let Some((x, chosen)) = stack.pop() {
            if x > top {
                if chosen.iter().fold(0, |g, &v| gcd(g, v)) == 1 {
                    out.push(chosen);
                }
                continue;
            }
            let forced = chosen.iter().any(|&u| u < x && chosen.contains(&(x - u)));
            if !forced {
                stack.push((x + 1, chosen.clone()));
            }
            let mut with = chosen;
            with.push(x);
            stack.push((x + 1, with));
        }
        out
    }
}

fn property_suites() -> Verdict {
    let population = oracle::closed_subsets(20);
    for gens in &population {
        let s = sg(gens);
        let limit = s.multiplicity() * 21;
        let member = oracle::members(gens, limit);
        let f = member.iter().rposition(|&m| !m).map_or(-1, |p| p as i64);
        let p = s.profile();
        ensure(p.frobenius == f, || {
            format!("{s}: F {} vs {f}", p.frobenius)
        })?;
        ensure(
            p.genus + p.n_below == (f + 1) as u64 && 2 * p.genus as i64 > f,
            || format!("{s}: {p:?}"),
        )?;
        let reflect = f < 0 || (0..=f).all(|x| member[x as usize] != member[(f - x) as usize]);
        ensure(s.is_symmetric() == reflect, || format!("{s}: symmetry"))?;
    }

    let mut bases = 0;
    for gens in &population {
        let base = sg(gens);
        let f = base.frobenius();
        if !(1..=25).contains(&f) {
            continue;
        }
        let f = f as u64;
        let mask = |u: &NumericalSemigroup| {
            (0..=f)
                .filter(|&x| u.contains(x))
                .fold(0u32, |a, x| a | 1 << x)
        };
        let window = (1u32 << (f + 1)) - 1;
        let closed = |u: u32| {
            (1..=f)
                .filter(|&a| u >> a & 1 == 1)
                .all(|a| (u << a) & window & !u == 0)
        };
        let start = mask(&base);
        let free: Vec<u64> = (base.multiplicity()..=f)
            .filter(|&x| start >> x & 1 == 0)
            .collect();
        let brute: BTreeSet<u32> = (0u32..1 << free.len())
            .map(|c| {
                free.iter()
                    .enumerate()
                    .filter(|(i, _)| c >> i & 1 == 1)
                    .fold(start, |acc, (_, &x)| acc | 1 << x)
            })
            .filter(|&u| closed(u))
            .collect();
        let found = oversemigroups_with_multiplicity(&base, base.multiplicity())
            .map_err(|e| e.to_string())?;
        let masks: BTreeSet<u32> = found.iter().map(mask).collect();
        ensure(masks == brute && masks.len() == found.len(), || {
            format!("{base}: oversemigroups")
        })?;
        bases += 1;
    }

    let mut pairs = 0;
    let mut triples = Vec::new();
    for x in 1..=6u64 {
        for y in 1..=6 {
            for z in 1..=6 {
                triples.push([x, y, z]);
            }
        }
    }
    for &a in &triples {
        for &b in &triples {
            let e = ExponentPair::new(a, b).map_err(|e| e.to_string())?;
            let h = build(&e);
            let w = h.weights();
            let weights_ok = h
                .generators
                .iter()
                .all(|g| binomial_weight_vanishes(&w, g) == Ok(true));
            ensure(
                e.multipliers() == e.multipliers_expanded()
                    && h.m.iter().all(|&m| m >= 3)
                    && vanishing_check(&h)
                    && weights_ok,
                || format!("{a:?}, {b:?}"),
            )?;
            pairs += 1;
        }
    }
    Ok(format!(
        "{} semigroups, {bases} oversemigroup bases, {pairs} exponent pairs",
        population.len()
    ))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 7] = [
        (
            "1 exceptional triples up to 20",
            delta_reproduction,
            Duration::from_secs(60),
        ),
        (
            "2 symmetric witness families",
            witness_family_frobenius,
            Duration::from_secs(1),
        ),
        (
            "3 fixed semigroup facts",
            fixed_semigroup_facts,
            Duration::from_secs(1),
        ),
        (
            "4 exponent matrices",
            exponent_matrices,
            Duration::from_secs(1),
        ),
        ("5 case taxonomy", case_taxonomy, Duration::from_secs(1)),
        ("6 catalogue sweep", catalogue_sweep, Duration::from_secs(1)),
        (
            "7 property suites",
            property_suites,
            Duration::from_secs(300),
        ),
    ];
    let mut failed = Vec::new();
    for (name, run, limit) in criteria {
        let started = Instant::now();
        let verdict = run();
        let elapsed = started.elapsed();
        let verdict = verdict.and_then(|detail| {
            if elapsed <= limit {
                Ok(detail)
            } else {
                Err(format!("took {elapsed:?}, limit {limit:?}"))
            }
        });
        match verdict {
            Ok(detail) => println!(
                "PASS criterion {name} ({:.3} s): {detail}",
                elapsed.as_secs_f64()
            ),
            Err(why) => {
                println!(
                    "FAIL criterion {name} ({:.3} s): {why}",
                    elapsed.as_secs_f64()
                );
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed: {failed:?}");
}
