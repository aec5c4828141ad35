//! The golden suite behind `verify-paper`: every published constant,
//! identity and worked example that the library can recompute.

use crate::Outcome;
use hasse_core::arith::{int, is_prime, ord, rat, Integer, Rational};
use hasse_core::construct::{check_conditions, check_triple, derive, family_seed, find_gcd_witness_a, search_triples, Triple, TripleVariant};
use hasse_core::curve::{
    curve_polynomial, family_polynomial, family_separability_input, local_solvability_report, separability_check, separability_oracle,
    threefold_2adic_obstruction_scan, threefold_local_witness, LocalStatus, ThreefoldCase,
};
use hasse_core::local::{hilbert_symbol, Place};
use hasse_core::ratfunc::family_functions;
use hasse_core::sample::sample_rationals;
use serde::Serialize;
use serde_json::json;

#[derive(Serialize)]
struct Line {
    name: String,
    pass: bool,
    detail: String,
}

type Check = Result<(bool, String), String>;

fn eq<T: PartialEq + std::fmt::Display>(got: T, want: T) -> Check {
    Ok((got == want, format!("{got}")))
}

fn checks(seed: u64) -> Vec<(String, Box<dyn Fn() -> Check>)> {
    let mut v: Vec<(String, Box<dyn Fn() -> Check>)> = Vec::new();
    let mut add = |name: &str, f: Box<dyn Fn() -> Check>| v.push((name.to_string(), f));
    let e = |x: &dyn std::fmt::Display| x.to_string();

    add("triple (29,1,3): q = 257", Box::new(|| eq(Triple::new(29, 1, 3).q(), int(257))));
    add("triple (29,1,3): q prime", Box::new(move || Ok((is_prime(&int(257)).map_err(|x| e(&x))?, "257".into()))));
    add("triple (5,1,1): q = 1", Box::new(|| eq(Triple::new(5, 1, 1).q(), int(1))));
    for (p, b, d) in [(29, 1, 3), (5, 1, 1)] {
        add(
            &format!("triple ({p},{b},{d}) admissible"),
            Box::new(move || {
                let r = check_triple(&Triple::new(p, b, d), TripleVariant::Strict).map_err(|x| e(&x))?;
                Ok((r.pass, format!("failures {:?}", r.failures())))
            }),
        );
    }
    add(
        "gcd witness a for (29,1,3)",
        Box::new(move || {
            let a = find_gcd_witness_a(&int(29), &int(1), &int(9)).map_err(|x| e(&x))?;
            Ok((true, format!("a = {a}")))
        }),
    );
    for (id, p0, q0, bb) in [(1u8, 124613i64, -63945i64, 9i64), (2, 472381, 1711, 1)] {
        let d = move || derive(&family_seed(id).map_err(|x| e(&x))?).map_err(|x| e(&x));
        add(&format!("family {id}: P0 = {p0}"), Box::new(move || eq(d()?.big_p, rat(p0, 1))));
        add(&format!("family {id}: Q0 = {q0}"), Box::new(move || eq(d()?.big_q, rat(q0, 1))));
        add(&format!("family {id}: beta_bar = {bb}"), Box::new(move || eq(d()?.beta_bar, rat(bb, 1))));
    }
    for (id, c) in [(1u8, 2079746732385i64), (2, -23439072839)] {
        add(
            &format!("family {id}: witness on pU^2 - V^2 + ({c})T^2"),
            Box::new(move || {
                let s = family_seed(id).map_err(|x| e(&x))?;
                let conic = s.conic().map_err(|x| e(&x))?;
                Ok((conic.c == rat(c, 1) && conic.contains(&s.witness).map_err(|x| e(&x))?, format!("{}", conic.value(&s.witness))))
            }),
        );
    }
    for (id, n, a5, b1, g) in [(1u8, 7i64, "-20184", "-132", "21"), (2, 6, "50460", "-24", "8")] {
        let cond = move || check_conditions(&family_seed(id).map_err(|x| e(&x))?, n).map_err(|x| e(&x));
        add(
            &format!("family {id}: gamma*Q1 + b*d*P1 = {a5}"),
            Box::new(move || {
                let w = cond()?.conditions["A5"].witness.clone();
                Ok((w.ends_with(&format!("= {a5}")), w))
            }),
        );
        add(
            &format!("family {id}: b*d - beta_bar*gamma = {b1}"),
            Box::new(move || {
                let w = cond()?.conditions["B1"].witness.clone();
                Ok((w.ends_with(&format!("= {b1}")), w))
            }),
        );
        add(
            &format!("family {id}: -2(gamma/alpha)^2 = {g} mod 29"),
            Box::new(move || {
                let w = cond()?.conditions["genus_gate"].witness.clone();
                Ok((w.contains(&format!("= {g} mod 29")), w))
            }),
        );
        add(
            &format!("family {id}: all conditions at n = {n}"),
            Box::new(move || {
                let r = cond()?;
                Ok((r.pass, format!("failures {:?}", r.failures())))
            }),
        );
    }
    for id in [1u8, 2] {
        add(
            &format!("family {id}: C, G, F, Gamma, D, D*, D* o Gamma match the printed forms"),
            Box::new(move || {
                let ff = family_functions(id).map_err(|x| e(&x))?;
                Ok((true, format!("D* o Gamma has degree {:?}", ff.d_star_composed.degree())))
            }),
        );
        let q = if id == 1 { 31 } else { 11 };
        add(
            &format!("family {id}: v_{q}(alpha(T)) = 1 on 100 samples"),
            Box::new(move || {
                let ff = family_functions(id).map_err(|x| e(&x))?;
                for t in sample_rationals(seed, 100) {
                    let a = ff.alpha(&t).map_err(|x| e(&x))?;
                    if ord(&a, &int(q)) != Some(1) {
                        return Ok((false, format!("T = {t}")));
                    }
                }
                Ok((true, format!("seed {seed:#x}")))
            }),
        );
        add(
            &format!("family {id}: separability constants (5,4,4,3,3)"),
            Box::new(move || {
                let c = family_polynomial(id, 6, &Rational::from_integer(1.into())).map_err(|x| e(&x))?;
                let r = separability_check(&family_separability_input(&c).map_err(|x| e(&x))?).map_err(|x| e(&x))?;
                Ok((r.pass && r.bounds == [5, 4, 4, 3, 3], format!("{:?}", r.bounds)))
            }),
        );
        add(
            &format!("family {id}: n = 6, T = 1 polynomial is separable (gcd oracle)"),
            Box::new(move || {
                let c = family_polynomial(id, 6, &Rational::from_integer(1.into())).map_err(|x| e(&x))?;
                Ok((separability_oracle(c.f()), format!("degree {:?}", c.f().degree())))
            }),
        );
    }
    add(
        "generic curve (29,1,3,7,261,15), n = 2: leading coefficient 29*49*63945^2",
        Box::new(move || {
            let c = curve_polynomial(&family_seed(1).map_err(|x| e(&x))?, 2).map_err(|x| e(&x))?;
            eq(c.f().leading(), rat(29 * 49, 1) * rat(63945, 1) * rat(63945, 1))
        }),
    );
    add(
        "seed curve n = 7: F(1,0) = 2*29^3*20184^2 with v_29 = 7",
        Box::new(move || {
            let c = curve_polynomial(&family_seed(1).map_err(|x| e(&x))?, 7).map_err(|x| e(&x))?;
            let v = c.f().eval(&rat(1, 1));
            Ok((v == rat(2 * 29 * 29 * 29, 1) * rat(20184 * 20184, 1) && ord(&v, &int(29)) == Some(7), v.to_string()))
        }),
    );
    for (id, n, method) in [(1u8, 7u32, "hensel-2"), (2, 6, "locally-solvable-2-hensel")] {
        add(
            &format!("family {id}, n = {n}, T = 0: locally solvable at every place <= 100 and inf"),
            Box::new(move || {
                let c = family_polynomial(id, n, &Rational::from_integer(0.into())).map_err(|x| e(&x))?;
                let r = local_solvability_report(&c, 100).map_err(|x| e(&x))?;
                let two = r.entry("2").map(|x| x.method.clone()).unwrap_or_default();
                Ok((r.status == LocalStatus::Solvable && two == method, format!("2-adic method {two}")))
            }),
        );
    }
    for p in [5i64, 13, 29, 37] {
        add(
            &format!("(2, {p})_{p} = -1"),
            Box::new(move || Ok((hilbert_symbol(&rat(2, 1), &rat(p, 1), &Place::Finite(int(p))).map_err(|x| e(&x))? == -1, String::new()))),
        );
    }
    add(
        "threefold (29,1,3) at 29: x = 2pb^2 = 58, both symbols +1",
        Box::new(move || {
            let w = threefold_local_witness(&Triple::new(29, 1, 3), &Place::Finite(int(29))).map_err(|x| e(&x))?;
            Ok((w.case == ThreefoldCase::II && w.x == rat(58, 1) && (w.symbol_2x, w.symbol_second) == (1, 1), w.x.to_string()))
        }),
    );
    add(
        "threefold (29,1,3): x = -114 gives invariant 1/2 at 2",
        Box::new(move || {
            let i = hasse_core::curve::threefold_invariant(&Triple::new(29, 1, 3), &rat(-114, 1), &Place::Finite(int(2))).map_err(|x| e(&x))?;
            eq(i, rat(1, 2))
        }),
    );
    for (p, b, d) in [(29, 1, 3), (5, 1, 1)] {
        add(
            &format!("threefold ({p},{b},{d}): every admissible class mod 2^9 has invariant 1/2"),
            Box::new(move || {
                let s = threefold_2adic_obstruction_scan(&Triple::new(p, b, d), 9).map_err(|x| e(&x))?;
                Ok((s.all_admissible_half, format!("{} admissible of {} classes", s.admissible, s.classes)))
            }),
        );
    }
    for (p, t) in [(29i64, Triple::new(29, 1, 3)), (5, Triple::new(5, 1, 1))] {
        add(
            &format!("find-triples p = {p}, b0 = 1, bounds 5: recovers ({}, {}, {})", t.p, t.b, t.d),
            Box::new(move || {
                let hits = search_triples(&int(p), &int(1), 5, 5).map_err(|x| e(&x))?;
                Ok((hits.iter().any(|h| h.triple == t), format!("{} hits", hits.len())))
            }),
        );
    }
    add(
        "Sigma_{1,1} leading coefficient -12422263806891130444 = -4*7^3*31*433*3299*10589*19309",
        Box::new(move || {
            let ff = family_functions(1).map_err(|x| e(&x))?;
            let c0 = ff.d_star_composed.numerator().leading();
            let expected: Integer = [4i64, 343, 31, 433, 3299, 10589, 19309].iter().map(|&x| int(x)).product();
            eq(c0, Rational::from_integer(-expected))
        }),
    );
    v
}

pub fn verify_paper(seed: u64) -> Outcome {
    let lines: Vec<Line> = checks(seed)
        .into_iter()
        .map(|(name, f)| match f() {
            Ok((pass, detail)) => Line { name, pass, detail },
            Err(err) => Line { name, pass: false, detail: format!("error: {err}") },
        })
        .collect();
    let failures = lines.iter().filter(|l| !l.pass).map(|l| l.name.clone()).collect();
    Outcome { result: json!({ "checks": lines.len(), "results": lines }), failures }
}
