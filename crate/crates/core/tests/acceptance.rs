//! Acceptance suite. Runs as a plain binary (no libtest harness) so that
//! every criterion prints exactly one PASS/FAIL line; exits non-zero if any
//! criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::Pow;
use ordinal_arith::expr::{evaluate, parse, print_text};
use ordinal_arith::harness::{
    certify_recursion, check_law, find_law, gen_limit_ordinal, gen_ordinal, iterate_op,
    limit_certificate, CertDepths, GenParams, IterOp, TransfiniteOp,
};
use ordinal_arith::{
    conway_witness_check, jac_mul, jac_pow, make_ordinal, nat_add, nat_mul, nat_ominus, ord_add,
    ord_mul, ord_pow, sj_pow, sj_pow_finite_base, Ordinal,
};

// Pinned budgets.
const TRIPLE_BUDGET: Duration = Duration::from_millis(1);
const LAW_SUITE_BUDGET: Duration = Duration::from_secs(60);
const MONUS_BUDGET: Duration = Duration::from_secs(10);
const PERTURB_MIN_RATE: f64 = 0.95;
const PERTURB_INDEX: u64 = 4;
const CONWAY_DEPTH: u64 = 4;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

/// Sum of `ω^e·c` built by hand, independent of the operations under test.
fn poly(terms: &[(Ordinal, u64)]) -> Ordinal {
    make_ordinal(terms.iter().map(|(e, c)| (e.clone(), BigInt::from(*c)))).unwrap()
}

fn n(k: u64) -> Ordinal {
    Ordinal::from(k)
}

fn w() -> Ordinal {
    Ordinal::omega()
}

fn c1_distinguishing_triple() -> Outcome {
    let cases = [
        ("(w+2) ^ 2", poly(&[(n(2), 1), (n(1), 2), (n(0), 2)])),
        ("(w+2) j^ 2", poly(&[(n(2), 1), (n(1), 2), (n(0), 4)])),
        ("(w+2) #^ 2", poly(&[(n(2), 1), (n(1), 4), (n(0), 4)])),
    ];
    let mut worst = Duration::ZERO;
    for (src, expected) in &cases {
        // best of a few runs, to keep scheduler noise out of a 1 ms budget
        let mut best = Duration::MAX;
        for _ in 0..5 {
            let t = Instant::now();
            let v = evaluate(src).map_err(|e| e.to_string())?;
            best = best.min(t.elapsed());
            check(v == *expected, format!("{src} gave {v}, expected {expected}"))?;
        }
        check(best < TRIPLE_BUDGET, format!("{src} took {best:?}"))?;
        worst = worst.max(best);
    }
    Ok(format!("exact; slowest {worst:?}"))
}

fn c2_counterexamples() -> Outcome {
    let (one, two) = (n(1), n(2));
    let w2 = poly(&[(n(1), 2)]);
    let w1 = w().succ();
    let one_plus_w = ord_add(&one, &w());
    let pairs: [(&str, Ordinal, Ordinal); 9] = [
        ("1×(1+ω)", jac_mul(&one, &one_plus_w), w()),
        ("(1×1)⊕(1×ω)", nat_add(&jac_mul(&one, &one), &jac_mul(&one, &w())), w1.clone()),
        ("2^⊗(1+ω)", sj_pow(&two, &one_plus_w), w()),
        ("2^⊗1 ⊗ 2^⊗ω", nat_mul(&sj_pow(&two, &one), &sj_pow(&two, &w())), w2.clone()),
        ("(1+1)·ω", ord_mul(&ord_add(&one, &one), &w()), w()),
        ("(1⊕1)×ω", jac_mul(&nat_add(&one, &one), &w()), w()),
        ("2×ω", jac_mul(&two, &w()), w()),
        ("ω×2", jac_mul(&w(), &two), w2.clone()),
        ("1+ω", one_plus_w.clone(), w()),
    ];
    for (name, got, want) in &pairs {
        check(got == want, format!("{name} = {got}, expected {want}"))?;
    }
    check(one_plus_w != w1, "1+ω equals ω+1")?;
    check(ord_add(&w(), &one) == w1, "ω+1")?;
    check(ord_mul(&two, &w()) == w() && w() != w2, "2·ω")?;
    check(ord_mul(&w(), &two) == w2, "ω·2")?;
    check(ord_add(&ord_mul(&one, &w()), &ord_mul(&one, &w())) == w2, "1·ω+1·ω")?;
    check(nat_add(&jac_mul(&one, &w()), &jac_mul(&one, &w())) == w2, "(1×ω)⊕(1×ω)")?;
    Ok(format!("{} identities exact", pairs.len() + 6))
}

const POSITIVE_LAWS: [&str; 25] = [
    // the law grid
    "ord-add-assoc",
    "ord-left-distrib",
    "ord-mul-assoc",
    "ord-pow-add",
    "ord-pow-mul",
    "nat-add-assoc",
    "jacthm",
    "jac-mul-assoc",
    "jac-pow-add",
    "jac-pow-mul",
    "nat-distrib",
    "nat-mul-assoc",
    "mainthm",
    "maincor",
    // beyond the grid
    "maincor-finite",
    "nat-add-comm",
    "nat-mul-comm",
    "nat-right-distrib",
    "nat-add-strict",
    "nat-mul-strict",
    "deg-nat-mul",
    "omega-jac-mul",
    "chain-add",
    "chain-mul",
    "chain-pow",
];

fn c3_positive_laws() -> Outcome {
    let params = GenParams::default();
    let t = Instant::now();
    for id in POSITIVE_LAWS {
        let r = check_law(id, &params, 1000).map_err(|e| e.to_string())?;
        if let Some(f) = r.failures.first() {
            return Err(format!("{id} failed at trial {} ({} failures)", f.trial, r.failures.len()));
        }
    }
    let took = t.elapsed();
    check(took < LAW_SUITE_BUDGET, format!("took {took:?}"))?;
    Ok(format!("{} laws × 1000 trials, 0 failures, {took:.2?}", POSITIVE_LAWS.len()))
}

fn c4_negative_laws() -> Outcome {
    let cases = [("naive-jac-distrib", [n(1), n(1), w()]), ("naive-sj-add", [n(2), n(1), w()])];
    for (id, tuple) in &cases {
        let law = find_law(id).map_err(|e| e.to_string())?;
        check(!law.check(tuple).holds, format!("{id} holds on the known tuple"))?;
        let r = check_law(id, &GenParams::default(), 200).map_err(|e| e.to_string())?;
        check(r.passed, format!("{id} was not refuted"))?;
        let first = &r.failures[0];
        check(first.trial == 0 && first.inputs == tuple.to_vec(), format!("{id}: trial 0 is not the forced tuple"))?;
    }
    Ok("both refuted at trial 0 by (1,1,ω) and (2,1,ω)".into())
}

fn c5_iteration_oracles() -> Outcome {
    let params = GenParams::default().with_seed(5005);
    let mut compared = 0;
    for i in 0..500 {
        let a = gen_ordinal(&params, i);
        for k in 0..=8u64 {
            let kk = n(k);
            let pairs = [
                (jac_mul(&a, &kk), iterate_op(IterOp::NatAdd, &a, k), "×"),
                (jac_pow(&a, &kk), iterate_op(IterOp::JacMul, &a, k), "^×"),
                (sj_pow(&a, &kk), iterate_op(IterOp::NatMul, &a, k), "^⊗"),
            ];
            for (closed, iterated, op) in pairs {
                check(closed == iterated, format!("{a} {op} {k}: {closed} vs {iterated}"))?;
                compared += 1;
            }
        }
    }
    Ok(format!("{compared} exact comparisons"))
}

fn c6_finite_base() -> Outcome {
    for a in [2u64, 3, 5] {
        let base = BigUint::from(a);
        for k in 0..=10u64 {
            let v = sj_pow_finite_base(&base, &n(k)).map_err(|e| e.to_string())?;
            let machine = Ordinal::from(Pow::pow(&base, k as u32));
            let iterated = iterate_op(IterOp::NatMul, &n(a), k);
            check(v == machine && v == iterated, format!("{a}^⊗{k} = {v}"))?;
        }
    }
    let params = GenParams::default().with_seed(6006);
    let depths = CertDepths::default();
    for i in 0..100 {
        let beta = gen_limit_ordinal(&params, i);
        for a in [2u64, 3, 5] {
            let base = BigUint::from(a);
            let claimed = sj_pow_finite_base(&base, &beta).map_err(|e| e.to_string())?;
            let cert = limit_certificate(
                &claimed,
                |g| sj_pow_finite_base(&base, g).unwrap(),
                &beta,
                depths.m_depth,
                depths.n_depth,
            )
            .map_err(|e| e.to_string())?;
            check(cert.passed(), format!("{a}^⊗({beta}) = {claimed} not certified"))?;
            let rec = certify_recursion(TransfiniteOp::SjPow, &n(a), &beta, depths);
            check(rec.passed(), format!("{a}^⊗({beta}): recursion fails at {:?}", rec.witness))?;
        }
    }
    Ok("iteration exact for a∈{2,3,5}, n≤10; 300 limit certificates".into())
}

fn c7_jacobsthal_recursion() -> Outcome {
    let params = GenParams::default().with_seed(7007);
    let depths = CertDepths::default();
    let mut stages = 0;
    for i in 0..100 {
        let a = gen_ordinal(&params, 2 * i);
        let lam = gen_limit_ordinal(&params, 2 * i + 1);
        for base in [Ordinal::zero(), lam.clone()] {
            let mut prev = jac_mul(&a, &base);
            if base.is_zero() {
                check(prev.is_zero(), format!("{a} × 0 = {prev}"))?;
            }
            for k in 1..=12u64 {
                let cur = jac_mul(&a, &ord_add(&base, &n(k)));
                let step = nat_add(&prev, &a);
                check(cur == step, format!("{a} × ({base} + {k}) = {cur}, recursion gives {step}"))?;
                prev = cur;
                stages += 1;
            }
        }
        let claimed = jac_mul(&a, &lam);
        let cert = limit_certificate(&claimed, |g| jac_mul(&a, g), &lam, depths.m_depth, depths.n_depth)
            .map_err(|e| e.to_string())?;
        check(cert.passed(), format!("{a} × {lam} = {claimed} not certified"))?;
        let rec = certify_recursion(TransfiniteOp::JacMul, &a, &lam, depths);
        check(rec.passed(), format!("{a} × {lam}: recursion fails at {:?}", rec.witness))?;
    }
    Ok(format!("{stages} successor stages, 100 limit certificates"))
}

fn c8_inequality_chain() -> Outcome {
    let params = GenParams::default().with_seed(8008);
    for i in 0..1000 {
        let a = gen_ordinal(&params, 2 * i);
        let b = gen_ordinal(&params, 2 * i + 1);
        check(ord_add(&a, &b) <= nat_add(&a, &b), format!("α+β ≤ α⊕β at {a}, {b}"))?;
        let (m0, m1, m2) = (ord_mul(&a, &b), jac_mul(&a, &b), nat_mul(&a, &b));
        check(m0 <= m1 && m1 <= m2, format!("αβ ≤ α×β ≤ α⊗β at {a}, {b}"))?;
        let (p0, p1, p2) = (ord_pow(&a, &b), jac_pow(&a, &b), sj_pow(&a, &b));
        check(p0 <= p1 && p1 <= p2, format!("α^β ≤ α^×β ≤ α^⊗β at {a}, {b}"))?;
    }
    Ok("1000 pairs, all three chains hold".into())
}

fn c9_conway() -> Outcome {
    let params = GenParams::default().with_seed(9009);
    let (mut limits, mut refuted) = (0u32, 0u32);
    for i in 0..500 {
        let a = gen_ordinal(&params, 2 * i);
        let b = gen_ordinal(&params, 2 * i + 1);
        let p = nat_mul(&a, &b);
        check(
            conway_witness_check(&a, &b, &p, CONWAY_DEPTH),
            format!("true product {p} of {a}, {b} rejected"),
        )?;
        if p.is_limit() {
            limits += 1;
            let perturbed = p.fund_seq(PERTURB_INDEX).unwrap();
            if !conway_witness_check(&a, &b, &perturbed, CONWAY_DEPTH) {
                refuted += 1;
            }
        }
    }
    let rate = f64::from(refuted) / f64::from(limits.max(1));
    let detail = format!("500 products accepted; perturbed claims refuted {refuted}/{limits} = {:.1}%", rate * 100.0);
    check(limits > 0 && rate >= PERTURB_MIN_RATE, detail.clone())?;
    Ok(detail)
}

type Vec3 = [u64; 3];

fn vec3_ordinal(v: Vec3) -> Ordinal {
    poly(&[(n(2), v[0]), (n(1), v[1]), (n(0), v[2])])
}

fn c10_monus_exhaustive() -> Outcome {
    let t = Instant::now();
    // Ordinals below ω³ as coefficient vectors (ω², ω, 1); lexicographic
    // order on these vectors is the ordinal order, and natural sum is
    // coordinate-wise addition.
    let mut universe: Vec<Vec3> = Vec::with_capacity(216);
    for c2 in 0..=5 {
        for c1 in 0..=5 {
            for c0 in 0..=5 {
                universe.push([c2, c1, c0]);
            }
        }
    }
    // already ascending in lexicographic order
    let ordinals: Vec<Ordinal> = universe.iter().map(|v| vec3_ordinal(*v)).collect();
    let mut pairs = 0u64;
    for (ia, a) in universe.iter().enumerate() {
        for (ib, b) in universe.iter().enumerate() {
            let least = universe
                .iter()
                .position(|g| [b[0] + g[0], b[1] + g[1], b[2] + g[2]] >= *a)
                .expect("γ = α always works");
            let got = nat_ominus(&ordinals[ia], &ordinals[ib]);
            check(got == ordinals[least], format!("{} ⊖ {} = {got}, search gives {}", ordinals[ia], ordinals[ib], ordinals[least]))?;
            pairs += 1;
        }
    }
    let took = t.elapsed();
    check(took < MONUS_BUDGET, format!("took {took:?}"))?;
    Ok(format!("{pairs} pairs agree, {took:.2?}"))
}

fn c11_parser() -> Outcome {
    let params = GenParams {
        max_depth: 3,
        max_terms: 4,
        max_coeff: 1000,
        seed: 1111,
    };
    for i in 0..1000 {
        let a = gen_ordinal(&params, i);
        let text = print_text(&a);
        let back = evaluate(&text).map_err(|e| format!("{text}: {e}"))?;
        check(back == a, format!("{text} read back as {back}"))?;
    }
    let fixtures = [
        ("w #+ w j* 2", "(w #+ (w j* 2))"),
        ("2 ^ 1 ^ 2", "(2 ^ (1 ^ 2))"),
        ("w^2 + w*2 + 4", "(((w ^ 2) + (w * 2)) + 4)"),
        ("(w+2) #^ 2", "((w + 2) #^ 2)"),
    ];
    for (src, shape) in fixtures {
        let got = parse(src).map_err(|e| e.to_string())?.to_string();
        check(got == shape, format!("{src} parsed as {got}"))?;
    }
    let e = parse("w^").unwrap_err();
    check(e.offset == 2, format!("`w^` error at {}", e.offset))?;
    for bad in ["", "(", "w w", "1 $", "w #- 1 #- 2", "deg", "((w)"] {
        let e = parse(bad).err().ok_or(format!("{bad:?} parsed"))?;
        check(e.offset <= bad.len(), format!("{bad:?}: offset {} outside input", e.offset))?;
    }
    Ok("1000 round trips; precedence fixtures hold".into())
}

fn c12_determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_ordcalc"))
            .args(["laws", "--law", "all", "--seed", "7", "--json"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    check(a.status.success() && b.status.success(), "laws run did not succeed")?;
    check(!a.stdout.is_empty(), "empty output")?;
    check(a.stdout == b.stdout, "outputs differ")?;
    serde_json::from_slice::<serde_json::Value>(&a.stdout).map_err(|e| e.to_string())?;
    Ok(format!("{} bytes, identical", a.stdout.len()))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("distinguishing triple", c1_distinguishing_triple),
        ("counterexamples", c2_counterexamples),
        ("positive law suite", c3_positive_laws),
        ("negative law suite", c4_negative_laws),
        ("iteration oracles", c5_iteration_oracles),
        ("finite-base exponentiation", c6_finite_base),
        ("Jacobsthal recursion", c7_jacobsthal_recursion),
        ("inequality chain", c8_inequality_chain),
        ("Conway characterization", c9_conway),
        ("monus exhaustive search", c10_monus_exhaustive),
        ("parser", c11_parser),
        ("determinism", c12_determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let res = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let took = t.elapsed();
        match res {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{took:.2?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} [{took:.2?}]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
