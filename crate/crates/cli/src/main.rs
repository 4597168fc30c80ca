//! Command-line front end. Exit status: 0 all checks pass, 1 a check failed,
//! 2 usage error, 3 resource cap exceeded.

mod args;

use std::fs;
use std::process::ExitCode;

use clap::Parser;
use serde_json::json;
use yugong::adic::{
    conjecture_scan, lemma2_checks, prime_candidate, scan_prime_k, theorem3_bound,
    verify_congruences, GcdRoute,
};
use yugong::correlate::{grouped_rows, verify_theorem1};
use yugong::gf2k::{build_field, parse_modulus};
use yugong::report::{hex, CheckRecord, Report};
use yugong::tables::{autocorrelation_table, complexity_row, table_values};
use yugong::{full_profile, two_adic_complexity, yu_gong, Delta, Error, FieldContext};

use args::{Cli, Command, FieldArgs, Format, GenerateArgs, OutputArgs, ScanArgs, Suite, TablesArgs, VerifyArgs};

/// Largest k the verify and tables commands will build.
const MAX_RUN_K: u32 = 8;

enum Failure {
    Usage(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceCap { .. } => Failure::Cap(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type CmdResult = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.workers {
        if n == 0 {
            eprintln!("error: --workers must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .expect("thread pool configured once");
    }
    let result = match cli.command {
        Command::Generate(a) => generate(a),
        Command::Tables(a) => tables(a),
        Command::Verify(a) => verify(a),
        Command::Scan(a) => scan(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn emit(output: &OutputArgs, text: &str) -> Result<(), Failure> {
    match &output.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn delta_of(field: &FieldArgs) -> Delta {
    Delta::try_from(field.delta).expect("validated by the argument parser")
}

fn modulus_of(field: &FieldArgs) -> Result<Option<u64>, Failure> {
    field
        .modulus
        .as_deref()
        .map(parse_modulus)
        .transpose()
        .map_err(Failure::from)
}

/// The field for `k`: the override when its degree is `2k`, else the default.
fn field_for(k: u32, modulus: Option<u64>) -> Result<FieldContext, Failure> {
    let chosen = modulus.filter(|m| 63 - m.leading_zeros() == 2 * k);
    Ok(build_field(2 * k, chosen)?)
}

fn check_modulus_used(modulus: Option<u64>, ks: impl IntoIterator<Item = u32>) -> Result<(), Failure> {
    if let Some(m) = modulus {
        let degree = 63 - m.leading_zeros();
        if !ks.into_iter().any(|k| 2 * k == degree) {
            return Err(Failure::Usage(format!(
                "modulus {m:#x} has degree {degree}, which matches no requested k"
            )));
        }
    }
    Ok(())
}

fn check_run_k(k: u32) -> Result<(), Failure> {
    if k > MAX_RUN_K {
        return Err(Failure::Cap(format!("k = {k} exceeds the run limit {MAX_RUN_K}")));
    }
    Ok(())
}

fn render_report(report: &Report, format: Format) -> String {
    match format {
        Format::Csv => report.to_csv(),
        Format::Struct => report.to_json() + "\n",
        Format::Paper => {
            let mut out = String::new();
            for r in &report.records {
                let modulus = if r.modulus == "0x0" {
                    String::new()
                } else {
                    format!(" (mod {})", r.modulus)
                };
                out.push_str(&format!(
                    "{} {}: expected {} actual {}{modulus}\n",
                    if r.pass { "PASS" } else { "FAIL" },
                    r.label,
                    r.expected,
                    r.actual
                ));
            }
            let failed = report.failures().count();
            out.push_str(&format!("{} checks, {failed} failed\n", report.records.len()));
            out
        }
    }
}

fn generate(a: GenerateArgs) -> CmdResult {
    let modulus = modulus_of(&a.field)?;
    let delta = delta_of(&a.field);
    let ctx = build_field(2 * a.k, modulus)?;
    let yg = yu_gong(a.k, delta, Some(&ctx))?;
    if !yg.in_theorem_scope {
        eprintln!("warning: k = {} lies outside the four-valued autocorrelation range", a.k);
    }
    let (ascii, hexs) = (yg.seq.to_ascii(), yg.seq.to_hex());
    let text = match a.output.format.unwrap_or(Format::Paper) {
        Format::Paper => format!(
            "k={} delta={} modulus={:#x} N={} weight={}\nascii {ascii}\nhex {hexs}\n",
            yg.k,
            delta,
            yg.modulus,
            yg.period(),
            yg.seq.weight()
        ),
        Format::Csv => format!(
            "k,delta,modulus,period,weight,ascii,hex\n{},{},{:#x},{},{},{ascii},{hexs}\n",
            yg.k,
            delta,
            yg.modulus,
            yg.period(),
            yg.seq.weight()
        ),
        Format::Struct => {
            let v = json!({
                "version": yugong::report::FORMAT_VERSION,
                "k": yg.k,
                "delta": delta.value(),
                "modulus": format!("{:#x}", yg.modulus),
                "period": yg.period(),
                "weight": yg.seq.weight(),
                "in_theorem_scope": yg.in_theorem_scope,
                "ascii": ascii,
                "hex": hexs,
            });
            serde_json::to_string_pretty(&v).expect("json") + "\n"
        }
    };
    emit(&a.output, &text)?;
    Ok(true)
}

fn tables(a: TablesArgs) -> CmdResult {
    let which: Vec<u8> = a.which.map_or_else(|| vec![1, 2, 3, 4], |w| vec![w]);
    if which.contains(&4) && !(1..=MAX_RUN_K).contains(&a.k_max) {
        return Err(Failure::Usage(format!(
            "--k-max must lie in 1..={MAX_RUN_K}, got {}",
            a.k_max
        )));
    }
    let modulus = modulus_of(&a.field)?;
    let delta = delta_of(&a.field);
    let mut ks_touched: Vec<u32> = which.iter().filter(|&&w| w < 4).map(|&w| u32::from(w) + 1).collect();
    if which.contains(&4) {
        ks_touched.extend(1..=a.k_max);
    }
    check_modulus_used(modulus, ks_touched)?;

    let format = a.output.format.unwrap_or(Format::Paper);
    let mut report = Report::new();
    let mut paper = String::new();
    let mut csv = String::new();
    let mut structured = Vec::new();

    for &w in which.iter().filter(|&&w| w < 4) {
        let k = u32::from(w) + 1;
        let ctx = field_for(k, modulus)?;
        let profile = full_profile(&yu_gong(k, delta, Some(&ctx))?.seq);
        let fixture = autocorrelation_table(k).expect("tables 1-3 exist");
        let expected = table_values(fixture)?;
        let measured = profile.off_peak();
        let bad: Vec<usize> = (0..expected.len()).filter(|&i| expected[i] != measured[i]).collect();
        report.push(CheckRecord::exact(
            format!("table{w}/k={k}/mismatched cells"),
            0,
            bad.len() as u64,
        ));
        paper.push_str(&format!("Table {w} (k={k}, modulus {:#x}, delta {delta})\n", ctx.modulus()));
        let rows = grouped_rows(&profile, k);
        for row in &rows {
            paper.push_str(&format!("{:>5}-{:<5} {}\n", row.first, row.last, row.text));
        }
        for &i in bad.iter().take(20) {
            paper.push_str(&format!("  tau={}: expected {} measured {}\n", i + 1, expected[i], measured[i]));
        }
        paper.push_str(&format!("Table {w}: {} cells, {} mismatches\n\n", expected.len(), bad.len()));
        csv.push_str(&format!("# table {w}, k={k}\n{}", profile.to_csv()));
        structured.push(json!({
            "table": w,
            "k": k,
            "modulus": format!("{:#x}", ctx.modulus()),
            "rows": rows.iter().map(|r| json!({"first": r.first, "last": r.last, "text": r.text})).collect::<Vec<_>>(),
            "mismatched_taus": bad.iter().map(|i| i + 1).collect::<Vec<_>>(),
        }));
    }

    if which.contains(&4) {
        paper.push_str("Table 4\n    k         N    actual     bound  published-actual  published-bound\n");
        csv.push_str("# table 4\nk,period,actual,bound,case,published_actual,published_bound\n");
        let mut rows = Vec::new();
        for k in 1..=a.k_max {
            let ctx = field_for(k, modulus)?;
            let phi2 = two_adic_complexity(&yu_gong(k, delta, Some(&ctx))?.seq).phi2;
            let bound = theorem3_bound(k)?;
            let published = complexity_row(k).expect("published rows cover k <= 8");
            report.push(CheckRecord::exact(format!("table4/k={k}/bound"), published.bound, bound.reported));
            let same = if phi2 == published.actual { "" } else { "  (differs)" };
            paper.push_str(&format!(
                "{k:>5} {:>9} {phi2:>9} {:>9} {:>17} {:>16}{same}\n",
                bound.period, bound.reported, published.actual, published.bound
            ));
            csv.push_str(&format!(
                "{k},{},{phi2},{},{},{},{}\n",
                bound.period, bound.reported, bound.case, published.actual, published.bound
            ));
            rows.push(json!({
                "k": k,
                "period": bound.period,
                "actual": phi2,
                "bound": bound.reported,
                "case": bound.case.label(),
                "published_actual": published.actual,
                "published_bound": published.bound,
            }));
        }
        structured.push(json!({"table": 4, "rows": rows}));
    }

    let text = match format {
        Format::Paper => paper + &render_report(&report, Format::Paper),
        Format::Csv => csv,
        Format::Struct => {
            let v = json!({
                "version": report.version,
                "tables": structured,
                "records": report.records,
            });
            serde_json::to_string_pretty(&v).expect("json") + "\n"
        }
    };
    emit(&a.output, &text)?;
    Ok(report.passed())
}

fn verify(a: VerifyArgs) -> CmdResult {
    if a.k.lo < 2 {
        return Err(Failure::Usage("verify needs k >= 2".into()));
    }
    check_run_k(a.k.hi)?;
    let modulus = modulus_of(&a.field)?;
    check_modulus_used(modulus, a.k.iter())?;
    let delta = delta_of(&a.field);
    let runs = |s: Suite| a.only.is_none_or(|o| o == s);
    let mut report = Report::new();
    let mut capped = None;

    for k in a.k.iter() {
        let ctx = field_for(k, modulus)?;
        let tag = format!("k={k}/delta={delta}/modulus={:#x}", ctx.modulus());
        if runs(Suite::Theorem1) {
            let r = verify_theorem1(k, delta, &ctx)?;
            let p = format!("theorem1/{tag}");
            report.push(CheckRecord::flag(format!("{p}/values in {{N,0,4,-4}}"), r.values_in_range));
            report.push(CheckRecord::exact(format!("{p}/predictor mismatches"), 0, r.mismatches.len() as u64));
            report.push(CheckRecord::exact(
                format!("{p}/periodicity failures"),
                0,
                r.periodicity_failures.len() as u64,
            ));
            report.push(CheckRecord::exact(
                format!("{p}/block mismatches"),
                0,
                r.block_mismatches.len() as u64,
            ));
            for f in &r.families {
                report.push(CheckRecord::exact(
                    format!("{p}/regular blocks S_{}..S_{}", f.first, f.last),
                    f.expected,
                    f.measured,
                ));
            }
        }
        if runs(Suite::Congruences) {
            let yg = yu_gong(k, delta, Some(&ctx))?;
            let c = verify_congruences(&yg.seq, k)?;
            report.extend_congruences(&format!("congruences/{tag}/"), &c);
            let phi2 = two_adic_complexity(&yg.seq).phi2;
            let bound = theorem3_bound(k)?;
            let min = bound.min_admissible.expect("k >= 2 carries a claim");
            report.push(CheckRecord::flag(
                format!("complexity/{tag}/{}: phi2 = {phi2}, need >= {min}", bound.case),
                bound.admits(phi2) == Some(true),
            ));
        }
        if runs(Suite::Lemma2) {
            match lemma2_checks(k, a.size_cap) {
                Ok(r) => {
                    for c in &r.clauses {
                        report.push(CheckRecord::flag(
                            format!(
                                "lemma2/k={k}/part{}: {} [gcd {}]",
                                c.part,
                                c.claim,
                                if c.part == 3 { &r.gcd_aux } else { &r.gcd_main }
                            ),
                            c.holds,
                        ));
                    }
                }
                Err(e @ Error::ResourceCap { .. }) => {
                    eprintln!("skipped lemma2 at k={k}: {e}");
                    capped = Some(e.to_string());
                }
                Err(e) => return Err(e.into()),
            }
        }
    }

    let format = a.output.format.unwrap_or(Format::Paper);
    emit(&a.output, &render_report(&report, format))?;
    if a.output.out.is_some() {
        println!(
            "{} checks, {} failed",
            report.records.len(),
            report.failures().count()
        );
    }
    match capped {
        Some(msg) if report.passed() => Err(Failure::Cap(msg)),
        _ => Ok(report.passed()),
    }
}

fn scan(a: ScanArgs) -> CmdResult {
    let format = a.output.format.unwrap_or(Format::Paper);
    if a.primes {
        let primes = scan_prime_k(a.k_max);
        let rows: Vec<(u32, String, bool)> = (4..=a.k_max)
            .step_by(4)
            .map(|k| (k, hex(&prime_candidate(k)), primes.contains(&k)))
            .collect();
        let text = match format {
            Format::Paper => {
                let mut s: String = rows
                    .iter()
                    .map(|(k, p, prime)| format!("k={k:<3} p={p} {}\n", if *prime { "prime" } else { "composite" }))
                    .collect();
                let list: Vec<String> = primes.iter().map(u32::to_string).collect();
                s.push_str(&format!("prime k: {}\n", list.join(", ")));
                s
            }
            Format::Csv => {
                let mut s = String::from("k,candidate,prime\n");
                for (k, p, prime) in &rows {
                    s.push_str(&format!("{k},{p},{prime}\n"));
                }
                s
            }
            Format::Struct => {
                let v = json!({
                    "version": yugong::report::FORMAT_VERSION,
                    "k_max": a.k_max,
                    "rows": rows.iter().map(|(k, p, prime)| json!({"k": k, "candidate": p, "prime": prime})).collect::<Vec<_>>(),
                    "prime_k": primes,
                });
                serde_json::to_string_pretty(&v).expect("json") + "\n"
            }
        };
        emit(&a.output, &text)?;
        return Ok(true);
    }

    let rows = conjecture_scan(&a.ks, a.size_cap)?;
    let route = |r: GcdRoute| match r {
        GcdRoute::Both => "reduced+direct",
        GcdRoute::Reduced => "reduced",
    };
    let text = match format {
        Format::Paper => rows
            .iter()
            .map(|r| {
                format!(
                    "k={:<3} gcd={} via {}{}\n",
                    r.k,
                    r.gcd,
                    route(r.route),
                    if r.counterexample { "  COUNTEREXAMPLE" } else { "" }
                )
            })
            .collect(),
        Format::Csv => {
            let mut s = String::from("k,gcd,route,counterexample\n");
            for r in &rows {
                s.push_str(&format!("{},{},{},{}\n", r.k, hex(&r.gcd), route(r.route), r.counterexample));
            }
            s
        }
        Format::Struct => {
            let v = json!({
                "version": yugong::report::FORMAT_VERSION,
                "size_cap": a.size_cap,
                "rows": rows.iter().map(|r| json!({
                    "k": r.k,
                    "gcd": hex(&r.gcd),
                    "route": route(r.route),
                    "counterexample": r.counterexample,
                })).collect::<Vec<_>>(),
            });
            serde_json::to_string_pretty(&v).expect("json") + "\n"
        }
    };
    emit(&a.output, &text)?;
    Ok(rows.iter().all(|r| !r.counterexample))
}
