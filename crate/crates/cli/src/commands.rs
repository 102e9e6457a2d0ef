//! One handler per subcommand. Each loads the word, computes its answer and
//! prints it as text or as an [`OutputRecord`].

use std::io::{self, Write};

use absent_core::oracle::{self, WordSet};
use absent_core::{is_mas, AbsentIndex, Error as CoreError, Letter, MasDag, Word};
use anyhow::{Context, Result};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::input::{Codec, Input, InputArgs};
use crate::output::{show, OutputRecord};
use crate::{CheckKind, EnumArgs, Family, Verdict, VerifyArgs, VerifyCheck};

/// Enumerations larger than this trigger a warning when no limit is given.
const LARGE_ENUMERATION_IOTA: usize = 20;

fn load(args: &InputArgs) -> Result<(Input, AbsentIndex)> {
    let input = args.load()?;
    let index = AbsentIndex::new(input.word.clone());
    Ok((input, index))
}

fn build_dag(word: &Word, cap: usize) -> Result<MasDag> {
    MasDag::with_cap(word, cap).map_err(|e| match e {
        CoreError::DagTooLarge { .. } => anyhow::Error::new(e).context("raise the limit with --dag-cap"),
        e => e.into(),
    })
}

fn record(input: &Input, index: &AbsentIndex) -> OutputRecord {
    OutputRecord::new(input, &index.factorization)
}

fn arch_spans(index: &AbsentIndex) -> String {
    let f = &index.factorization;
    (1..=f.iota())
        .map(|l| {
            let (s, e) = f.arch_bounds(l);
            format!("[{s}:{e}]")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn analyze(args: &InputArgs, json: bool) -> Result<Verdict> {
    let (input, index) = load(args)?;
    let c = &input.codec;
    let modus = c.render(index.factorization.modus());
    let one = c.render(&index.one_sas());
    let lex_sas = c.render(&index.lex_min_sas());
    let lex_mas = c.render(&index.lex_min_mas());
    if json {
        let mut rec = record(&input, &index);
        rec.result = json!({
            "modus": modus,
            "one_sas": one,
            "lex_min_sas": lex_sas,
            "lex_min_mas": lex_mas,
        });
        rec.print_json()?;
    } else {
        let rest_start = index.factorization.rest_start();
        let rest = c.render(&input.word.letters()[rest_start - 1..]);
        let mut out = io::stdout().lock();
        writeln!(out, "length       {}", input.word.len())?;
        writeln!(out, "alphabet     {}", input.word.sigma())?;
        writeln!(out, "iota         {}", index.iota())?;
        writeln!(out, "arches       {}", show(&arch_spans(&index)))?;
        writeln!(out, "modus        {}", show(&modus))?;
        writeln!(out, "rest         {}", show(&rest))?;
        writeln!(out, "one sas      {one}")?;
        writeln!(out, "lex-min sas  {lex_sas}")?;
        writeln!(out, "lex-min mas  {lex_mas}")?;
    }
    Ok(Verdict::Positive)
}

pub fn check(args: &InputArgs, kind: CheckKind, query: &str, json: bool) -> Result<Verdict> {
    let (input, index) = load(args)?;
    let answer = match kind {
        CheckKind::Sas => index.is_sas(&input.codec.encode_query(query)?)?,
        CheckKind::Mas => index.is_mas(&input.codec.encode_query(query)?)?,
        CheckKind::Subseq => input.word.is_subsequence(&input.codec.encode_query_lenient(query)?).is_some(),
    };
    if json {
        let mut rec = record(&input, &index);
        rec.result = Value::Bool(answer);
        rec.print_json()?;
    } else {
        writeln!(io::stdout().lock(), "{answer}")?;
    }
    Ok(if answer { Verdict::Positive } else { Verdict::Negative })
}

pub fn enumerate(args: &EnumArgs, json: bool) -> Result<Verdict> {
    let (input, index) = load(&args.input)?;
    let dag = match args.kind {
        Family::Sas => None,
        Family::Mas => Some(build_dag(&input.word, args.dag_cap)?),
    };
    let count = match &dag {
        Some(dag) => dag.count(),
        None => index.count_sas(),
    };
    if args.count_only {
        if json {
            let mut rec = record(&input, &index);
            rec.count = Some(count.to_string());
            rec.result = json!({ "kind": family_name(args.kind) });
            rec.print_json()?;
        } else {
            writeln!(io::stdout().lock(), "{count}")?;
        }
        return Ok(Verdict::Positive);
    }
    if args.limit.is_none() && index.iota() >= LARGE_ENUMERATION_IOTA {
        eprintln!("warning: enumerating {count} words; consider --limit or --count-only");
    }

    let mut items = Vec::new();
    let mut failure = None;
    let mut out = io::stdout().lock();
    let mut sink = |u: &[Letter]| {
        if failure.is_some() {
            return;
        }
        let rendered = input.codec.render(u);
        if json {
            items.push(rendered);
        } else if let Err(e) = writeln!(out, "{rendered}").and_then(|_| out.flush()) {
            failure = Some(e);
        }
    };
    let emitted = match &dag {
        Some(dag) => dag.enumerate(args.limit, &mut sink),
        None => index.sas.enumerate(args.limit, &mut sink),
    };
    if let Some(e) = failure {
        return Err(e.into());
    }
    drop(out);
    if json {
        let mut rec = record(&input, &index);
        rec.count = Some(count.to_string());
        rec.result = json!({ "kind": family_name(args.kind), "emitted": emitted });
        rec.items = items;
        rec.print_json()?;
    }
    Ok(Verdict::Positive)
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::Sas => "sas",
        Family::Mas => "mas",
    }
}

pub fn range(args: &InputArgs, i: usize, j: usize, json: bool) -> Result<Verdict> {
    let (input, index) = load(args)?;
    let r = index.sas_range(i, j)?;
    let (u, iota) = index.range_sas(i, j)?;
    let sas = input.codec.render(&u);
    if json {
        let mut rec = record(&input, &index);
        rec.result = json!({
            "i": i,
            "j": j,
            "sas": sas,
            "iota": iota,
            "start_node": r.start_node,
            "end_node": r.end_node,
        });
        rec.print_json()?;
    } else {
        let mut out = io::stdout().lock();
        writeln!(out, "sas   {sas}")?;
        writeln!(out, "iota  {iota}")?;
    }
    Ok(Verdict::Positive)
}

pub fn extend(args: &InputArgs, query: &str, json: bool) -> Result<Verdict> {
    let (input, index) = load(args)?;
    let u = input.codec.encode_query(query)?;
    let extension = index.mas_extend(&u)?;
    let c = &input.codec;
    let mas = extension.as_ref().map(|v| c.render(&[u.as_slice(), v].concat()));
    if json {
        let mut rec = record(&input, &index);
        rec.result = json!({
            "extendable": extension.is_some(),
            "extension": extension.as_ref().map(|v| c.render(v)),
            "mas": mas,
        });
        rec.print_json()?;
    } else {
        let line = mas.unwrap_or_else(|| format!("{} cannot be extended to a MAS", show(query)));
        writeln!(io::stdout().lock(), "{line}")?;
    }
    Ok(Verdict::Positive)
}

/// Outcome of one verification check.
struct CheckReport {
    name: &'static str,
    ok: bool,
    detail: String,
}

impl CheckReport {
    fn new(name: &'static str, failures: Vec<String>, checked: usize) -> Self {
        let ok = failures.is_empty();
        let detail = if ok {
            format!("{checked} comparisons")
        } else {
            format!("{} of {checked} comparisons failed; first: {}", failures.len(), failures[0])
        };
        CheckReport { name, ok, detail }
    }
}

pub fn verify(args: &VerifyArgs, json: bool) -> Result<Verdict> {
    let (input, index) = load(&args.input)?;
    let all = [VerifyCheck::Sas, VerifyCheck::Mas, VerifyCheck::Range, VerifyCheck::Extend, VerifyCheck::Family];
    let mut reports = Vec::new();
    for check in all.iter().filter(|c| args.checks.is_empty() || args.checks.contains(c)) {
        let c = &input.codec;
        let report = match check {
            VerifyCheck::Sas => verify_sas(&index, c, args.budget)?,
            VerifyCheck::Mas => verify_mas(&index, c, args.budget, args.dag_cap)?,
            VerifyCheck::Range => verify_range(&index, c, args.budget)?,
            VerifyCheck::Extend => verify_extend(&index, c, args.budget)?,
            VerifyCheck::Family => verify_family(&index, args.dag_cap)?,
        };
        reports.push(report);
    }
    let ok = reports.iter().all(|r| r.ok);
    if json {
        let mut rec = record(&input, &index);
        let checks: Vec<Value> =
            reports.iter().map(|r| json!({ "name": r.name, "ok": r.ok, "detail": r.detail })).collect();
        rec.result = json!({ "ok": ok, "checks": checks });
        rec.print_json()?;
    } else {
        let mut out = io::stdout().lock();
        for r in &reports {
            writeln!(out, "{:<7} {}  {}", r.name, if r.ok { "OK" } else { "MISMATCH" }, r.detail)?;
        }
        writeln!(out, "{}", if ok { "OK" } else { "MISMATCH" })?;
    }
    Ok(if ok { Verdict::Positive } else { Verdict::Negative })
}

fn compare_sets(name: &str, c: &Codec, got: &WordSet, want: &WordSet, failures: &mut Vec<String>) {
    if let Some(u) = got.difference(want).next() {
        failures.push(format!("{name} lists {} wrongly", c.render(u)));
    }
    if let Some(u) = want.difference(got).next() {
        failures.push(format!("{name} misses {}", c.render(u)));
    }
}

fn verify_sas(index: &AbsentIndex, c: &Codec, budget: u64) -> Result<CheckReport> {
    let w = &index.word;
    let want = oracle::oracle_sas_set(w, budget).context("brute-force SAS")?;
    let got: WordSet = index.sas.iter().collect();
    let mut failures = Vec::new();
    let mut checked = 3;
    compare_sets("enumeration", c, &got, &want, &mut failures);
    if index.count_sas() != BigUint::from(want.len()) {
        failures.push(format!("count {} but {} exist", index.count_sas(), want.len()));
    }
    if Some(&index.lex_min_sas()) != want.iter().next() {
        failures.push(format!("lex-min {}", c.render(&index.lex_min_sas())));
    }
    if !want.contains(&index.one_sas()) {
        failures.push(format!("{} is not an SAS", c.render(&index.one_sas())));
    }
    for u in oracle::words_of_length(w.sigma(), index.iota() + 1) {
        checked += 1;
        if index.is_sas(&u)? != want.contains(&u) {
            failures.push(format!("membership test wrong for {}", c.render(&u)));
        }
    }
    Ok(CheckReport::new("sas", failures, checked))
}

fn verify_mas(index: &AbsentIndex, c: &Codec, budget: u64, cap: usize) -> Result<CheckReport> {
    let w = &index.word;
    let dag = build_dag(w, cap)?;
    let want = oracle::oracle_mas_set(w, w.len() + 1, budget).context("brute-force MAS")?;
    let got: WordSet = dag.iter().collect();
    let mut failures = Vec::new();
    let mut checked = 4;
    compare_sets("enumeration", c, &got, &want, &mut failures);
    if dag.count() != BigUint::from(want.len()) {
        failures.push(format!("count {} but {} exist", dag.count(), want.len()));
    }
    let longest = want.iter().map(Vec::len).max().unwrap_or(0);
    if dag.longest_len() != longest || dag.longest_mas().len() != longest {
        failures.push(format!("longest length {} but {longest} expected", dag.longest_len()));
    }
    if Some(&index.lex_min_mas()) != want.iter().next() {
        failures.push(format!("lex-min {}", c.render(&index.lex_min_mas())));
    }
    for len in 1..=w.len() + 1 {
        checked += 1;
        if dag.exists_mas_of_length(len) != want.iter().any(|u| u.len() == len) {
            failures.push(format!("existence of length {len} wrong"));
        }
    }
    for u in &want {
        checked += 1;
        if !is_mas(w, u)? || !dag.is_mas(u)? {
            failures.push(format!("{} rejected", c.render(u)));
        }
    }
    Ok(CheckReport::new("mas", failures, checked))
}

fn verify_range(index: &AbsentIndex, c: &Codec, budget: u64) -> Result<CheckReport> {
    let w = &index.word;
    let mut failures = Vec::new();
    let mut checked = 0;
    for i in 1..=w.len() {
        for j in i..=w.len() {
            checked += 1;
            let factor = w.factor(i, j)?;
            let want = oracle::oracle_sas_set(&factor, budget).context("brute-force SAS of a factor")?;
            let (u, iota) = index.range_sas(i, j)?;
            if !want.contains(&u) {
                failures.push(format!("[{i}:{j}] gave {}", c.render(&u)));
            }
            if iota != u.len() - 1 {
                failures.push(format!("[{i}:{j}] reported universality {iota}"));
            }
        }
    }
    Ok(CheckReport::new("range", failures, checked))
}

/// Prefix length up to which every occurring prefix is tried.
const EXTEND_PREFIX_LEN: usize = 3;

fn verify_extend(index: &AbsentIndex, c: &Codec, budget: u64) -> Result<CheckReport> {
    let w = &index.word;
    let mut failures = Vec::new();
    let mut checked = 0;
    for u in oracle::words_up_to(w.sigma(), EXTEND_PREFIX_LEN) {
        if !u.is_empty() && w.is_subsequence(&u).is_none() {
            continue;
        }
        checked += 1;
        let want = oracle::oracle_mas_extension(w, &u, budget).context("brute-force extension")?;
        let got = index.mas_extend(&u)?;
        let valid = got.as_ref().map(|v| is_mas(w, &[u.as_slice(), v].concat())).transpose()?;
        let agrees = match (&got, &want) {
            (Some(v), Some(best)) => v.len() == best.len() && valid == Some(true),
            (None, None) => true,
            _ => false,
        };
        if !agrees {
            failures.push(format!("prefix {}", show(&c.render(&u))));
        }
    }
    Ok(CheckReport::new("extend", failures, checked))
}

/// The MAS and SAS of a word coincide exactly when renaming its letters
/// turns it into the alternating word A_k with k = iota.
fn verify_family(index: &AbsentIndex, cap: usize) -> Result<CheckReport> {
    let w = &index.word;
    let (renamed, _) = Word::normalize(w.letters())?;
    let k = index.iota();
    let is_permuted_a = k > 0
        && renamed.sigma() == w.sigma()
        && oracle::gen_a(w.sigma(), k).is_ok_and(|a| a.letters() == renamed.letters());
    let dag = build_dag(w, cap)?;
    let sas: WordSet = index.sas.iter().collect();
    let mas: WordSet = dag.iter().collect();
    let failures = if (sas == mas) == is_permuted_a {
        Vec::new()
    } else {
        vec![format!(
            "{} MAS and {} SAS, but the word {} a renamed A_k",
            mas.len(),
            sas.len(),
            if is_permuted_a { "is" } else { "is not" }
        )]
    };
    Ok(CheckReport::new("family", failures, 1))
}
