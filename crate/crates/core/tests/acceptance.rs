//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p absent-core --test acceptance`.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use absent_core::oracle::{self, DEFAULT_BUDGET};
use absent_core::{
    ArchFactorization, ArchTree, Letter, MasDag, MasExtender, MinArch, OccArrays, PosArch, Pos,
    SasIndex, Word,
};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn text(s: &str) -> Word {
    let chars: Vec<char> = s.chars().collect();
    Word::normalize(&chars).expect("nonempty").0
}

struct Built {
    word: Word,
    f: ArchFactorization,
    tree: ArchTree,
    sas: SasIndex,
}

fn build(word: Word) -> Built {
    let f = ArchFactorization::new(&word);
    let pa = PosArch::new(&word, &f);
    let tree = ArchTree::new(&word, &MinArch::new(&word));
    let sas = SasIndex::new(&word, &f, &tree, &pa);
    Built { word, f, tree, sas }
}

fn sas_set(b: &Built) -> BTreeSet<Vec<Letter>> {
    b.sas.iter().collect()
}

fn mas_set(w: &Word) -> BTreeSet<Vec<Letter>> {
    MasDag::new(w).expect("small word").iter().collect()
}

/// A uniformly random word of length `n` in which all `sigma` letters occur.
fn random_word(rng: &mut ChaCha8Rng, sigma: usize, n: usize) -> Word {
    assert!(n >= sigma);
    loop {
        let letters: Vec<Letter> = (0..n).map(|_| rng.gen_range(1..=sigma as Letter)).collect();
        match Word::new(letters) {
            Ok(w) if w.sigma() == sigma => return w,
            _ => {}
        }
    }
}

/// All words of length `n` over `{1, 2}` in which both letters occur.
fn binary_words(n: usize) -> impl Iterator<Item = Word> {
    oracle::words_of_length(2, n).filter_map(|v| Word::new(v).ok().filter(|w| w.sigma() == 2))
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();

    let w = text("0011");
    let expected: BTreeSet<_> = [vec![2, 1], vec![1, 1, 1], vec![2, 2, 2]].into_iter().collect();
    ensure(mas_set(&w) == expected, || format!("mas(0011) = {:?}", mas_set(&w)))?;

    let b = build(text("012121012"));
    let expected: BTreeSet<_> = [vec![1, 1, 1], vec![2, 1, 1], vec![3, 1, 1]].into_iter().collect();
    ensure(sas_set(&b) == expected, || format!("sas(012121012) = {:?}", sas_set(&b)))?;
    ensure(b.f.iota() == 2 && b.f.arch_ends() == [3, 7], || {
        format!("012121012: iota {} arches {:?}", b.f.iota(), b.f.arch_ends())
    })?;

    let b = build(text("1221311331221"));
    let pa = PosArch::new(&b.word, &b.f);
    let first: Vec<Vec<usize>> =
        (1..=2).map(|l| (1..=3).map(|a| pa.first(l, a)).collect()).collect();
    let last: Vec<Vec<usize>> = (1..=2).map(|l| (1..=3).map(|a| pa.last(l, a)).collect()).collect();
    ensure(first == [[1, 2, 5], [6, 11, 8]], || format!("firstPosArch {first:?}"))?;
    ensure(last == [[4, 3, 5], [10, 11, 9]], || format!("lastPosArch {last:?}"))?;

    let min_arch = MinArch::new(&b.word);
    let mut expected = vec![Pos::At(5); 3];
    expected.extend([Pos::At(11); 6]);
    expected.extend([Pos::Inf; 4]);
    ensure(min_arch.as_slice() == expected, || format!("minArch {:?}", min_arch.as_slice()))?;

    let t = &b.tree;
    let children = |u| t.children(u).expect("node exists");
    ensure(children(14) == [9, 10, 11, 12, 13], || format!("children(14) {:?}", children(14)))?;
    ensure(children(11) == [3, 4, 5, 6, 7, 8], || format!("children(11) {:?}", children(11)))?;
    ensure(children(5) == [0, 1, 2], || format!("children(5) {:?}", children(5)))?;
    ensure(t.label(14) == Ok(Some(3)), || "label(14) is not 3".into())?;
    ensure(t.depth(4) == Ok(2) && t.depth(1) == Ok(3), || "depth(4), depth(1)".into())?;

    let dist: Vec<u32> = b.sas.dist_array().to_vec();
    ensure(dist == [4, 4, 3, 3, 3, 3, 3, 3, 2, 2, 2, 2, 2], || format!("dist {dist:?}"))?;
    ensure(sas_set(&b) == [vec![3, 2, 3]].into_iter().collect(), || "unique SAS 323".into())?;

    for ((i, j), want) in [((5, 13), vec![2, 3]), ((2, 13), vec![3, 2, 3])] {
        let got = t.decode_sas_range(&t.sas_range(i, j).map_err(|e| e.to_string())?);
        ensure(got.as_ref() == Ok(&want), || format!("sas_range({i},{j}) = {got:?}"))?;
    }

    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("all fixtures exact in {elapsed:.2?}"))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut candidates = 0usize;
    for case in 0..500 {
        let sigma = rng.gen_range(2..=3);
        let n = rng.gen_range(sigma.max(2)..=12);
        let b = build(random_word(&mut rng, sigma, n));
        let w = &b.word;
        let ctx = || format!("case {case}: w = {:?}", w.letters());

        let oracle_sas = oracle::oracle_sas_set(w, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        ensure(sas_set(&b) == oracle_sas, || format!("{}: SAS sets differ", ctx()))?;

        let oracle_mas =
            oracle::oracle_mas_set(w, n + 1, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        let dag = MasDag::new(w).map_err(|e| e.to_string())?;
        let listed: BTreeSet<_> = dag.iter().collect();
        ensure(listed == oracle_mas, || format!("{}: MAS sets differ", ctx()))?;

        for u in oracle::words_of_length(sigma, b.f.iota() + 1) {
            let definitional = w.is_subsequence(&u).is_none();
            ensure(b.sas.is_sas(w, &u) == Ok(definitional), || {
                format!("{}: is_sas({u:?})", ctx())
            })?;
            candidates += 1;
        }
        for u in oracle::words_up_to(sigma, 5) {
            let definitional = oracle::is_mas_definitional(w, &u);
            ensure(absent_core::is_mas(w, &u) == Ok(definitional), || {
                format!("{}: is_mas({u:?})", ctx())
            })?;
            ensure(dag.is_mas(&u) == Ok(definitional), || {
                format!("{}: DAG membership of {u:?}", ctx())
            })?;
            candidates += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("500 words, {candidates} membership candidates, in {elapsed:.2?}"))
}

fn criterion_3() -> Outcome {
    let mut checked = 0;
    for sigma in 2..=4u64 {
        for k in 1..=6u64 {
            let w = oracle::gen_b(sigma as usize, k as usize).map_err(|e| e.to_string())?;
            let b = build(w);
            let formula: u64 = (1..=sigma).map(|t| binomial(sigma, t) * binomial(k, t - 1)).sum();
            let count = b.sas.count();
            ensure(count == BigUint::from(formula), || {
                format!("B_{k} over {sigma} letters: count {count}, formula {formula}")
            })?;
            let brute = oracle::oracle_sas_set(&b.word, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
            ensure(brute.len() as u64 == formula, || {
                format!("B_{k} over {sigma} letters: oracle {}, formula {formula}", brute.len())
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (σ, k) pairs match the formula and the oracle"))
}

fn criterion_4() -> Outcome {
    for sigma in 2..=3 {
        for k in 1..=3 {
            let w = oracle::gen_a(sigma, k).map_err(|e| e.to_string())?;
            let sas = sas_set(&build(w.clone()));
            let mas = mas_set(&w);
            ensure(sas == mas, || format!("A_{k} over {sigma} letters: mas != sas"))?;
        }
    }
    let mut words = 0;
    let mut equal = 0;
    for n in 2..=8 {
        for w in binary_words(n) {
            let b = build(w.clone());
            let same_count = b.sas.count() == MasDag::new(&w).map_err(|e| e.to_string())?.count();
            let (normal, _) = Word::normalize(w.letters()).map_err(|e| e.to_string())?;
            let is_a = normal == oracle::gen_a(2, b.f.iota()).map_err(|e| e.to_string())?;
            ensure(same_count == is_a, || {
                format!("w = {:?}: equal counts {same_count}, permutation of A_k {is_a}", w.letters())
            })?;
            words += 1;
            equal += usize::from(same_count);
        }
    }
    Ok(format!("A_k equality for σ∈{{2,3}}, k≤3; {words} binary words, {equal} with |sas|=|mas|"))
}

fn criterion_5() -> Outcome {
    let mut best_a = Vec::new();
    for k in 1..=5 {
        best_a.push(build(oracle::gen_a(2, k).map_err(|e| e.to_string())?).sas.count());
    }
    let mut words = 0;
    for n in 2..=10 {
        for w in binary_words(n) {
            let b = build(w);
            let k = b.f.iota();
            let count = b.sas.count();
            ensure(count <= best_a[k - 1], || {
                format!("w = {:?} (ι={k}) has {count} SAS, A_{k} has {}", b.word.letters(), best_a[k - 1])
            })?;
            words += 1;
        }
    }
    Ok(format!("{words} binary words with n ≤ 10 bounded by A_ι"))
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut ranges = 0;
    for case in 0..200 {
        let sigma = rng.gen_range(2..=4);
        let n = rng.gen_range(sigma..=20);
        let b = build(random_word(&mut rng, sigma, n));
        for i in 1..=n {
            for j in i..=n {
                let factor = b.word.factor(i, j).map_err(|e| e.to_string())?;
                let iota = oracle::brute_universality(&factor);
                let r = b.tree.sas_range(i, j).map_err(|e| e.to_string())?;
                let u = b.tree.decode_sas_range(&r).map_err(|e| e.to_string())?;
                ensure(u.len() == iota + 1 && factor.is_subsequence(&u).is_none(), || {
                    format!("case {case}: w = {:?}, ({i},{j}) gave {u:?}, ι = {iota}", b.word.letters())
                })?;
                ranges += 1;
            }
        }
    }
    Ok(format!("{ranges} ranges over 200 words"))
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut queries = 0;
    let mut extendable = 0;
    for case in 0..100 {
        let sigma = rng.gen_range(2..=3);
        let n = rng.gen_range(sigma..=12);
        let w = random_word(&mut rng, sigma, n);
        let f = ArchFactorization::new(&w);
        let ext = MasExtender::new(&w, &f, &OccArrays::build(&w));
        for u in oracle::words_up_to(sigma, 4).filter(|u| w.is_subsequence(u).is_some()) {
            let got = ext.extend(&w, &u).map_err(|e| e.to_string())?;
            let want =
                oracle::oracle_mas_extension(&w, &u, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
            ensure(got.as_ref().map(Vec::len) == want.as_ref().map(Vec::len), || {
                format!("case {case}: w = {:?}, u = {u:?}: got {got:?}, oracle {want:?}", w.letters())
            })?;
            queries += 1;
            extendable += usize::from(got.is_some());
        }
    }
    Ok(format!("{queries} prefixes over 100 words, {extendable} extendable"))
}

fn build_timed(w: &Word) -> Duration {
    let start = Instant::now();
    let b = build(w.clone());
    let elapsed = start.elapsed();
    std::hint::black_box(&b);
    elapsed
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let small = random_word(&mut rng, 4, 100_000);
    let large = random_word(&mut rng, 4, 1_000_000);
    let t_small = (0..3).map(|_| build_timed(&small)).min().expect("three runs");
    let t_large = (0..3).map(|_| build_timed(&large)).min().expect("three runs");
    let ratio = t_large.as_secs_f64() / t_small.as_secs_f64();

    let b = build(large);
    let n = b.word.len();
    let queries: Vec<(usize, usize)> = (0..1_000_000)
        .map(|_| {
            let i = rng.gen_range(1..=n);
            (i, rng.gen_range(i..=n))
        })
        .collect();
    let q_start = Instant::now();
    let mut checksum = 0usize;
    for &(i, j) in &queries {
        let r = b.tree.sas_range(i, j).map_err(|e| e.to_string())?;
        checksum = checksum.wrapping_add(r.end_node);
    }
    let t_queries = q_start.elapsed();
    std::hint::black_box(checksum);
    let total = start.elapsed();

    let detail = format!(
        "build 10^5: {t_small:.2?}, 10^6: {t_large:.2?} (ratio {ratio:.1}), 10^6 queries: {t_queries:.2?}, total {total:.2?}"
    );
    ensure(ratio <= 15.0, || format!("{detail}: ratio above 15"))?;
    ensure(t_queries < Duration::from_secs(2), || format!("{detail}: queries too slow"))?;
    ensure(total < Duration::from_secs(10), || format!("{detail}: total too slow"))?;
    Ok(detail)
}

fn criterion_9() -> Outcome {
    const OUTPUTS: usize = 100_000;
    const RUNS: usize = 5;
    let b = build(oracle::gen_a(3, 6).map_err(|e| e.to_string())?);
    let mut best: Vec<Duration> = Vec::new();
    for _ in 0..RUNS {
        let mut iter = b.sas.iter();
        let mut latencies = Vec::with_capacity(OUTPUTS);
        let mut last = Instant::now();
        while latencies.len() < OUTPUTS {
            let Some(u) = iter.next() else { break };
            let now = Instant::now();
            std::hint::black_box(u);
            latencies.push(now - last);
            last = now;
        }
        if best.is_empty() {
            best = latencies;
        } else {
            best.iter_mut().zip(latencies).for_each(|(b, l)| *b = (*b).min(l));
        }
    }
    let outputs = best.len();
    let max = *best.iter().max().ok_or("no outputs")?;
    let mut sorted = best.clone();
    sorted.sort_unstable();
    let median = sorted[outputs / 2].max(Duration::from_nanos(1));
    let ratio = max.as_secs_f64() / median.as_secs_f64();
    let detail = format!(
        "{outputs} outputs of A_6 over 3 letters (total {}), median {median:?}, max {max:?}, ratio {ratio:.1}",
        b.sas.count()
    );
    ensure(ratio <= 100.0, || format!("{detail}: ratio above 100"))?;
    Ok(detail)
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("worked examples", criterion_1),
        ("oracle equivalence", criterion_2),
        ("SAS count of B_k", criterion_3),
        ("mas = sas exactly for permutations of A_k", criterion_4),
        ("A_k maximizes the SAS count", criterion_5),
        ("range queries", criterion_6),
        ("MAS extension minimality", criterion_7),
        ("build scaling and query throughput", criterion_8),
        ("enumeration delay", criterion_9),
    ];
    let mut failed = 0;
    for (number, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {} ({name}): PASS: {detail}", number + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL: {detail}", number + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
