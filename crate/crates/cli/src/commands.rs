use crate::{CheckCurve, CheckSextuple, CliError, Command, CurveArgs, ExtendSextuple, FindTriples, Outcome, SearchPoints, SextupleArgs, ThreefoldScan, Variant};
use hasse_core::arith::{parse_integer, parse_rational, Integer, Rational};
use hasse_core::conic::ConicPoint;
use hasse_core::construct::{check_conditions, check_triple, enumerate_ab, extend, extension_constant, family_seed, search_triples, Sextuple, Triple, TripleVariant};
use hasse_core::curve::{
    family_polynomial, family_separability_input, local_solvability_report, search_rational_points, separability_check, separability_oracle,
    threefold_2adic_obstruction_scan, threefold_local_witness, LocalStatus,
};
use hasse_core::local::{odd_primes_up_to, Place};
use hasse_core::ratfunc::Polynomial;
use hasse_core::report::Report;
use serde_json::{json, Value};

pub fn dispatch(c: &Command, seed: u64) -> Result<Outcome, CliError> {
    match c {
        Command::VerifyPaper => Ok(crate::paper::verify_paper(seed)),
        Command::FindTriples(a) => find_triples(a),
        Command::CheckSextuple(a) => check_sextuple(a),
        Command::ExtendSextuple(a) => extend_sextuple(a),
        Command::EmitCurve(a) => emit_curve(a),
        Command::CheckCurve(a) => check_curve(a),
        Command::SearchPoints(a) => search_points(a),
        Command::ThreefoldScan(a) => threefold_scan(a),
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("library types serialize")
}

fn pass(result: Value) -> Result<Outcome, CliError> {
    Ok(Outcome { result, failures: vec![] })
}

fn report_failures(prefix: &str, r: &Report) -> Vec<String> {
    r.failures().into_iter().map(|k| format!("{prefix}{k}")).collect()
}

fn find_triples(a: &FindTriples) -> Result<Outcome, CliError> {
    let hits = search_triples(&a.p, &a.b0, a.xmax, a.ymax)?;
    pass(to_value(&hits))
}

fn sextuple(a: &SextupleArgs) -> Result<Sextuple, CliError> {
    if let Some(id) = a.family {
        return Ok(family_seed(id)?);
    }
    let missing = || CliError::Usage("give --family or all of --p --b --d --alpha --beta --gamma --witness".into());
    let (p, b, d) = (a.p.clone().ok_or_else(missing)?, a.b.clone().ok_or_else(missing)?, a.d.clone().ok_or_else(missing)?);
    let (al, be, ga) = (a.alpha.clone().ok_or_else(missing)?, a.beta.clone().ok_or_else(missing)?, a.gamma.clone().ok_or_else(missing)?);
    let w = a.witness.as_deref().ok_or_else(missing)?;
    let parts: Vec<Integer> = w.split(',').map(parse_integer).collect::<Result<_, _>>().map_err(|e| CliError::Usage(format!("--witness: {e}")))?;
    let [u, v, t] = <[Integer; 3]>::try_from(parts).map_err(|_| CliError::Usage("--witness needs three integers u,v,t".into()))?;
    Ok(Sextuple::new(Triple::new(p, b, d), al, be, ga, ConicPoint::new(u, v, t))?)
}

fn check_sextuple(a: &CheckSextuple) -> Result<Outcome, CliError> {
    let s = sextuple(&a.sextuple)?;
    let variant = match a.variant {
        Variant::Strict => TripleVariant::Strict,
        Variant::Generalized => TripleVariant::Generalized,
    };
    let triple = check_triple(&s.triple, variant)?;
    let conditions = check_conditions(&s, a.n)?;
    let mut failures = report_failures("triple.", &triple);
    failures.extend(report_failures("", &conditions));
    Ok(Outcome { result: json!({ "sextuple": s, "triple": triple, "conditions": conditions }), failures })
}

fn extend_sextuple(a: &ExtendSextuple) -> Result<Outcome, CliError> {
    let s0 = sextuple(&a.sextuple)?;
    if let Some(b0) = &a.b0 {
        let (lo, hi) = (a.xmin.unwrap_or(0), a.xmax.unwrap_or(0));
        if lo > hi {
            return Err(CliError::Usage("--xmin must not exceed --xmax".into()));
        }
        let pairs = enumerate_ab(&s0, b0, lo..=hi)?;
        let out: Vec<Value> = pairs
            .iter()
            .map(|(x, y)| extend(&s0, x, y).map(|s| json!({ "A": x.to_string(), "B": y.to_string(), "sextuple": s })))
            .collect::<Result<_, _>>()?;
        return pass(json!({ "seed": s0, "extensions": out }));
    }
    let (x, y) = match (&a.a, &a.b_value) {
        (Some(x), Some(y)) => (x, y),
        _ => return Err(CliError::Usage("give --A and --B, or --B0 with --xmin/--xmax".into())),
    };
    let c = extension_constant(&s0, x, y)?;
    let s = extend(&s0, x, y)?;
    pass(json!({ "seed": s0, "A": x.to_string(), "B": y.to_string(), "C": c.to_string(), "sextuple": s }))
}

/// Family curves exist for n > 5 with n ≢ 0 mod 4, away from the residue
/// excluded by the genus gate.
fn admissible_genus(a: &CurveArgs) -> Result<(), CliError> {
    if a.n % 4 == 0 {
        return Err(CliError::Failed(format!("n = {} is excluded: the construction requires n not divisible by 4 (n = 0 mod 4)", a.n)));
    }
    if a.n <= 5 {
        return Err(CliError::Failed(format!("n = {} is excluded: the families require n > 5", a.n)));
    }
    Ok(())
}

fn emit_curve(a: &CurveArgs) -> Result<Outcome, CliError> {
    admissible_genus(a)?;
    let c = family_polynomial(a.family, a.n, &a.t)?;
    let gate = check_conditions(&c.provenance, a.n as i64)?;
    if gate.passed("genus_gate") != Some(true) {
        return Err(CliError::Failed(format!("n = {} is excluded by the genus gate: {}", a.n, gate.conditions["genus_gate"].witness)));
    }
    pass(to_value(&c))
}

fn check_curve(a: &CheckCurve) -> Result<Outcome, CliError> {
    admissible_genus(&a.curve)?;
    let c = family_polynomial(a.curve.family, a.curve.n, &a.curve.t)?;
    let conditions = check_conditions(&c.provenance, a.curve.n as i64)?;
    let sep_input = family_separability_input(&c)?;
    let sep = separability_check(&sep_input)?;
    let oracle = separability_oracle(c.f());
    let local = local_solvability_report(&c, a.prime_bound)?;
    let points = search_rational_points(c.f(), a.height_bound)?;
    let mut failures = report_failures("conditions.", &conditions);
    if !sep.pass {
        failures.push("separability.criterion".into());
    }
    if !oracle {
        failures.push("separability.oracle".into());
    }
    for e in local.entries.iter().filter(|e| e.status != LocalStatus::Solvable) {
        failures.push(format!("local.{}", e.place));
    }
    if !points.is_empty() {
        failures.push("points.found".into());
    }
    let note = if points.is_empty() {
        format!("no rational points of height <= {}: consistent with the absence of rational points, not a proof", a.height_bound)
    } else {
        "rational points found".to_string()
    };
    Ok(Outcome {
        result: json!({
            "curve": c,
            "conditions": conditions,
            "separability": { "input": sep_input, "criterion": sep, "oracle": oracle },
            "local": local,
            "points": { "height_bound": a.height_bound, "found": points, "note": note },
        }),
        failures,
    })
}

fn search_points(a: &SearchPoints) -> Result<Outcome, CliError> {
    let f = match (&a.family, &a.coeffs) {
        (Some(id), None) => {
            let (n, t) = (a.n.ok_or_else(|| CliError::Usage("--n is required".into()))?, a.t.clone().ok_or_else(|| CliError::Usage("--T is required".into()))?);
            family_polynomial(*id, n, &t)?.coefficients
        }
        (None, Some(cs)) => {
            let cs: Vec<Rational> = cs.split(',').map(parse_rational).collect::<Result<_, _>>().map_err(|e| CliError::Usage(format!("--coeffs: {e}")))?;
            Polynomial::new(cs)
        }
        _ => return Err(CliError::Usage("give --family/--n/--T or --coeffs".into())),
    };
    let points = search_rational_points(&f, a.height_bound)?;
    pass(json!({ "height_bound": a.height_bound, "coefficients": f, "points": points }))
}

fn threefold_scan(a: &ThreefoldScan) -> Result<Outcome, CliError> {
    let t = Triple::new(a.p.clone(), a.b.clone(), a.d.clone());
    let mut places = vec![Place::Infinite, Place::Finite(Integer::from(2))];
    places.extend(odd_primes_up_to(a.prime_bound).into_iter().map(|l| Place::Finite(Integer::from(l))));
    let witnesses = places.iter().map(|l| threefold_local_witness(&t, l)).collect::<Result<Vec<_>, _>>()?;
    let scan = threefold_2adic_obstruction_scan(&t, a.precision)?;
    let failures = if scan.all_admissible_half { vec![] } else { vec!["scan.admissible_half".to_string()] };
    Ok(Outcome {
        result: json!({
            "triple": t,
            "local_witnesses": witnesses,
            "two_adic_scan": scan,
            "note": "invariant 0 away from 2 and 1/2 on every admissible 2-adic class at this precision: consistent with an empty Brauer set, not a proof",
        }),
        failures,
    })
}
