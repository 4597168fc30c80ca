//! Acceptance suite: one PASS/FAIL line per criterion, with a wall-clock limit
//! each. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use yugong::adic::{
    conjecture_scan, lemma2_checks, periodic_prefix, product_mod_small, rational_approximation,
    scan_prime_k, theorem3_bound, verify_congruences, weighted_ac_sum, DEFAULT_SIZE_CAP,
};
use yugong::correlate::{naive_profile, verify_theorem1};
use yugong::gf2k::{build_field, primitive_moduli, FieldElem};
use yugong::seqgen::{decompose_m_sequence, interleave, m_sequence};
use yugong::tables::{diff_table, EXAMPLE1_K1, TABLE1, TABLE2, TABLE3, TABLE4};
use yugong::{full_profile, two_adic_complexity, yu_gong, BinarySeq, Delta, InterleaveSpec};

const SEED: u64 = 20_081_017;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome {
            pass,
            detail: detail.into(),
        }
    }
}

fn run(id: u32, name: &str, limit: Duration, check: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let out = check();
    let elapsed = start.elapsed();
    let in_time = elapsed <= limit;
    let pass = out.pass && in_time;
    println!(
        "{} [{id:>2}] {name}: {} ({:.2?} / limit {:?}{})",
        if pass { "PASS" } else { "FAIL" },
        out.detail,
        elapsed,
        limit,
        if in_time { "" } else { ", over time" },
    );
    pass
}

fn yg(k: u32) -> BinarySeq {
    yu_gong(k, Delta::Plus, None).unwrap().seq
}

fn table_match(k: u32, rows: &[yugong::tables::TableRow]) -> (usize, usize) {
    let profile = full_profile(&yg(k));
    let diff = diff_table(rows, &profile).unwrap();
    (profile.off_peak().len(), diff.len())
}

fn criterion1() -> Outcome {
    let (cells, bad) = table_match(2, TABLE1);
    let k1 = full_profile(&yg(1));
    let example_ok = k1.off_peak() == EXAMPLE1_K1;
    Outcome::new(
        bad == 0 && cells == 59 && example_ok,
        format!("k=2: {cells} cells, {bad} mismatches; k=1 example matches: {example_ok}"),
    )
}

fn criterion2() -> Outcome {
    let (c3, b3) = table_match(3, TABLE2);
    let (c4, b4) = table_match(4, TABLE3);
    Outcome::new(
        b3 == 0 && b4 == 0 && c3 == 251 && c4 == 1019,
        format!("k=3: {c3} cells, {b3} mismatches; k=4: {c4} cells, {b4} mismatches"),
    )
}

fn criterion3() -> Outcome {
    let mut runs = 0;
    let mut failures = Vec::new();
    for k in 2..=6u32 {
        let moduli: Vec<u64> = if k <= 4 {
            primitive_moduli(2 * k).into_iter().take(2).collect()
        } else {
            vec![build_field(2 * k, None).unwrap().modulus()]
        };
        for m in moduli {
            let ctx = build_field(2 * k, Some(m)).unwrap();
            for delta in [Delta::Plus, Delta::Minus] {
                let r = verify_theorem1(k, delta, &ctx).unwrap();
                runs += 1;
                if !r.passed() {
                    failures.push(format!(
                        "k={k} m={m:#x} delta={delta}: {} mismatches",
                        r.mismatches.len()
                    ));
                }
            }
        }
    }
    Outcome::new(
        failures.is_empty() && runs == 4 * 3 + 4,
        format!("{runs} (k, modulus, delta) runs; failures: {failures:?}"),
    )
}

fn criterion4() -> Outcome {
    let expected = [6u64, 55, 240, 1020, 4072, 16367, 65504, 262123];
    let got: Vec<u64> = (1..=8).map(|k| theorem3_bound(k).unwrap().reported).collect();
    Outcome::new(got == expected, format!("bounds {got:?}"))
}

fn criterion5() -> Outcome {
    let mut ok = true;
    let mut cells = Vec::new();
    let mut fast_part = Duration::ZERO;
    let start = Instant::now();
    for row in &TABLE4[1..] {
        let k = row.k;
        let phi2 = two_adic_complexity(&yg(k)).phi2;
        let bound = theorem3_bound(k).unwrap();
        let admits = bound.admits(phi2) == Some(true);
        let strict = bound.threshold.is_some_and(|t| phi2 as f64 > t) || phi2 == bound.period;
        ok &= admits && strict;
        let same = if phi2 == row.actual { "=" } else { "!=" };
        cells.push(format!("k={k}:{phi2}{same}{}", row.actual));
        if k == 5 {
            fast_part = start.elapsed();
        }
    }
    let fast_ok = fast_part <= Duration::from_secs(10);
    Outcome::new(
        ok && fast_ok,
        format!(
            "all above threshold: {ok}; k<=5 in {fast_part:.2?}; measured vs published {}",
            cells.join(" ")
        ),
    )
}

fn criterion6() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    for k in 2..=9u32 {
        let r = product_mod_small(&yg(k), 15).unwrap();
        let want = [13, 0, 10, 9][(k % 4) as usize];
        if r != want {
            ok = false;
            notes.push(format!("mod15 k={k}: {r} != {want}"));
        }
    }
    for k in 2..=6u32 {
        let rep = verify_congruences(&yg(k), k).unwrap();
        if !rep.passed() {
            ok = false;
            notes.push(format!(
                "k={k}: {:?}",
                rep.failures().map(|f| f.label.clone()).collect::<Vec<_>>()
            ));
        }
    }
    for k in 2..=8u32 {
        let w = weighted_ac_sum(k, &full_profile(&yg(k))).unwrap();
        if !w.agree() {
            ok = false;
            notes.push(format!("weighted sum k={k}"));
        }
    }
    Outcome::new(
        ok,
        if notes.is_empty() {
            "mod 15 for k=2..9, chain for k=2..6, weighted sums for k=2..8 all exact".to_string()
        } else {
            notes.join("; ")
        },
    )
}

fn criterion7() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for k in 2..=8u32 {
        let r = lemma2_checks(k, DEFAULT_SIZE_CAP).unwrap();
        ok &= r.passed();
        if k == 4 || k == 8 {
            ok &= r.gcd_main == 1u32.into();
        }
        notes.push(format!("k={k}: gcd={} aux={}", r.gcd_main, r.gcd_aux));
    }
    ok &= lemma2_checks(DEFAULT_SIZE_CAP + 1, DEFAULT_SIZE_CAP).is_err();
    Outcome::new(ok, notes.join(", "))
}

fn criterion8() -> Outcome {
    let ks = scan_prime_k(24);
    Outcome::new(ks == [4, 24], format!("{ks:?}"))
}

fn criterion9() -> Outcome {
    let rows = conjecture_scan(&[4, 8, 12], DEFAULT_SIZE_CAP).unwrap();
    let ok = rows.len() == 3 && rows.iter().all(|r| r.gcd == 1u32.into() && !r.counterexample);
    let text: Vec<String> = rows.iter().map(|r| format!("k={}:{}", r.k, r.gcd)).collect();
    Outcome::new(ok, text.join(" "))
}

/// Sequences with `N <= 300` from every parameter choice.
fn generated_small() -> Vec<(String, BinarySeq)> {
    let mut out = Vec::new();
    for k in 1..=3u32 {
        for m in primitive_moduli(2 * k) {
            let ctx = build_field(2 * k, Some(m)).unwrap();
            for delta in [Delta::Plus, Delta::Minus] {
                let s = yu_gong(k, delta, Some(&ctx)).unwrap().seq;
                out.push((format!("k={k},m={m:#x},d={delta}"), s));
            }
        }
    }
    out
}

fn random_periodic(rng: &mut ChaCha8Rng, count: usize, max_n: usize) -> Vec<BinarySeq> {
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            BinarySeq::from_fn(n, |_| rng.gen()).unwrap()
        })
        .collect()
}

/// `(index, from prefix, exact)` for each disagreement.
fn raa_mismatches(seqs: &[BinarySeq], extra: usize) -> Vec<(usize, u64, u64)> {
    seqs.iter()
        .enumerate()
        .filter_map(|(i, s)| {
            let n = s.period();
            let approx = rational_approximation(&periodic_prefix(s, 2 * n + extra)).unwrap();
            let phi2 = two_adic_complexity(s).phi2;
            (approx.complexity() != phi2).then_some((i, approx.complexity(), phi2))
        })
        .collect()
}

fn criterion10() -> Outcome {
    let (labels, generated): (Vec<String>, Vec<BinarySeq>) = generated_small().into_iter().unzip();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let random = random_periodic(&mut rng, 100, 64);
    let gen_bad = raa_mismatches(&generated, 0);
    let rnd_bad = raa_mismatches(&random, 0);
    let gen_bad_plus2 = raa_mismatches(&generated, 2);
    let rnd_bad_plus2 = raa_mismatches(&random, 2);
    let gen_names: Vec<&str> = gen_bad.iter().map(|&(i, ..)| labels[i].as_str()).collect();
    let example = rnd_bad
        .first()
        .map(|&(i, a, p)| format!("; e.g. N={}: {a} vs {p}", random[i].period()));
    Outcome::new(
        gen_bad.is_empty() && rnd_bad.is_empty(),
        format!(
            "2N-bit prefixes: generated {}/{} agree {gen_names:?}, random {}/{} agree{} \
             [with 2N+2 bits: generated {}/{}, random {}/{} agree]",
            generated.len() - gen_bad.len(),
            generated.len(),
            random.len() - rnd_bad.len(),
            random.len(),
            example.unwrap_or_default(),
            generated.len() - gen_bad_plus2.len(),
            generated.len(),
            random.len() - rnd_bad_plus2.len(),
            random.len(),
        ),
    )
}

fn criterion11() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x11);
    let mut failures = Vec::new();

    let mut seqs = random_periodic(&mut rng, 50, 4096);
    seqs.extend((1..=6).map(yg));
    for s in &seqs {
        if full_profile(s) != naive_profile(s) {
            failures.push(format!("profile N={}", s.period()));
        }
    }

    for k in 2..=5u32 {
        let s = yg(k);
        let phi2 = two_adic_complexity(&s).phi2;
        for _ in 0..20 {
            let t = rng.gen_range(0..s.period());
            if two_adic_complexity(&s.rotate_left(t)).phi2 != phi2 {
                failures.push(format!("shift k={k} t={t}"));
            }
        }
    }

    for k in 2..=8u32 {
        let ctx = build_field(2 * k, None).unwrap();
        let (base, shifts) = decompose_m_sequence(k, &ctx).unwrap();
        let rebuilt = interleave(&InterleaveSpec::new(base, shifts, None).unwrap());
        if rebuilt != m_sequence(&ctx) {
            failures.push(format!("round trip k={k}"));
        }
    }

    for n in 1..=16u32 {
        let ctx = build_field(n, None).unwrap();
        let elem = |r: &mut ChaCha8Rng| ctx.elem(r.gen_range(0..1u32 << n)).unwrap();
        for m in (1..=n).filter(|m| n % m == 0) {
            for _ in 0..200 {
                let (x, y) = (elem(&mut rng), elem(&mut rng));
                let lhs = ctx.trace(m, x + y).unwrap();
                let rhs = ctx.trace(m, x).unwrap() + ctx.trace(m, y).unwrap();
                if lhs != rhs {
                    failures.push(format!("linearity n={n} m={m}"));
                }
            }
            if n <= 8 {
                for bits in 0..1u32 << n {
                    let x = ctx.elem(bits).unwrap();
                    let inner = ctx.trace(m, x).unwrap();
                    let outer = ctx.trace_over(inner, 1, m).unwrap();
                    if outer != ctx.trace(1, x).unwrap() {
                        failures.push(format!("transitivity n={n} m={m} x={bits}"));
                    }
                }
            }
        }
        let ones = (0..1u32 << n)
            .filter(|&b| ctx.trace(1, ctx.elem(b).unwrap()).unwrap() == FieldElem::ONE)
            .count();
        if ones != 1 << (n - 1) {
            failures.push(format!("trace balance n={n}"));
        }
    }

    failures.truncate(10);
    Outcome::new(
        failures.is_empty(),
        format!("profile, shift invariance, round trip, trace laws; failures: {failures:?}"),
    )
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let results = [
        run(1, "Table 1 reproduction", secs(1), criterion1),
        run(2, "Tables 2-3 reproduction", secs(5), criterion2),
        run(3, "four-valued predictor", secs(60), criterion3),
        run(4, "complexity bounds", secs(1), criterion4),
        run(5, "complexity above bound", secs(300), criterion5),
        run(6, "congruence suite", secs(120), criterion6),
        run(7, "gcd lemma", secs(60), criterion7),
        run(8, "prime scan", secs(10), criterion8),
        run(9, "conjecture scan", secs(60), criterion9),
        run(10, "rational approximation oracle", secs(30), criterion10),
        run(11, "property suite", secs(60), criterion11),
    ];
    let passed = results.iter().filter(|&&p| p).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
