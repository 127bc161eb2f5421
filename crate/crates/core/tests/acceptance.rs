//! Acceptance run: one line per criterion, non-zero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use gsq_core::bitset::VertexSet;
use gsq_core::chordality::{chordal, is_chordal};
use gsq_core::corpus::{
    generate_all, generate_random, generate_up_to, parse_graph6, write_graph6, CorpusSpec,
};
use gsq_core::families;
use gsq_core::graph::Graph;
use gsq_core::harness::{check_theorem, verify_corpus, TheoremId, Verdict};
use gsq_core::patterns::{find_fertile_sprout, find_sprouts, find_unwithered_flower};
use gsq_core::witnesses::{extract_flower, verify_flower};

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

/// Tally of verdicts of one claim over a corpus.
#[derive(Default)]
struct Tally {
    holds: usize,
    vacuous: usize,
    counterexamples: Vec<String>,
    errors: Vec<String>,
}

impl Tally {
    fn run(id: TheoremId, graphs: &[Graph]) -> Tally {
        let mut t = Tally::default();
        for g in graphs {
            match check_theorem(id, g) {
                Ok(Verdict::Holds) => t.holds += 1,
                Ok(Verdict::Vacuous) => t.vacuous += 1,
                Ok(Verdict::Counterexample(c)) => t
                    .counterexamples
                    .push(format!("{} ({})", c.graph6, c.detail)),
                Err(e) => t
                    .errors
                    .push(format!("{}: {e}", write_graph6(g).unwrap_or_default())),
            }
        }
        t
    }

    fn clean(&self) -> bool {
        self.counterexamples.is_empty() && self.errors.is_empty()
    }

    fn describe(&self, id: TheoremId) -> String {
        let mut s = format!(
            "{id}: {} holds, {} vacuous, {} counterexamples",
            self.holds,
            self.vacuous,
            self.counterexamples.len()
        );
        if let Some(c) = self.counterexamples.first() {
            s += &format!(" (first: {c})");
        }
        if let Some(e) = self.errors.first() {
            s += &format!(", {} errors (first: {e})", self.errors.len());
        }
        s
    }
}

fn connected_up_to(n: usize) -> Vec<Graph> {
    generate_up_to(n, true).expect("n within the exhaustive bound")
}

fn all_up_to(n: usize) -> Vec<Graph> {
    generate_up_to(n, false).expect("n within the exhaustive bound")
}

/// Independent oracle: some vertex set of size at least 4 on which every
/// vertex has exactly two neighbours and which is connected.
fn has_hole_brute(g: &Graph) -> bool {
    let n = g.order();
    (0u32..1 << n).any(|mask| {
        if mask.count_ones() < 4 {
            return false;
        }
        let set: VertexSet = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if set.iter().any(|v| (g.neighbors(v) & set).len() != 2) {
            return false;
        }
        let mut seen = VertexSet::singleton(set.first().unwrap());
        loop {
            let mut next = seen;
            for v in seen {
                next |= g.neighbors(v) & set;
            }
            if next == seen {
                return seen == set;
            }
            seen = next;
        }
    })
}

fn chordality_oracle() -> Outcome {
    let graphs = all_up_to(7);
    let disagree = graphs
        .iter()
        .filter(|g| is_chordal(g).is_chordal() == has_hole_brute(g))
        .count();
    outcome(
        graphs.len() == 1252 && disagree == 0,
        format!(
            "{} graphs with n <= 7, {disagree} disagreements with the subset oracle",
            graphs.len()
        ),
    )
}

fn flower_equiv() -> Outcome {
    let graphs = connected_up_to(7);
    let tally = Tally::run(TheoremId::FlowerEquiv, &graphs);
    let mut holes = 0;
    let mut bad = Vec::new();
    for g in &graphs {
        if let Some(h) = is_chordal(&g.square()).hole() {
            holes += 1;
            match extract_flower(g, h.vertices()) {
                Ok(f) if verify_flower(g, &f).is_ok() && f.withered_by.is_none() => {}
                Ok(_) => bad.push(write_graph6(g).unwrap()),
                Err(e) => bad.push(format!("{} ({e})", write_graph6(g).unwrap())),
            }
        }
    }
    outcome(
        tally.clean() && bad.is_empty() && tally.holds == graphs.len(),
        format!(
            "{} connected graphs; {}; {holes} non-chordal squares, {} failed extractions",
            graphs.len(),
            tally.describe(TheoremId::FlowerEquiv),
            bad.len()
        ),
    )
}

fn lg_square_equiv() -> Outcome {
    let graphs: Vec<Graph> = connected_up_to(7)
        .into_iter()
        .filter(|g| g.size() <= 12)
        .collect();
    let tally = Tally::run(TheoremId::LgSquareEquiv, &graphs);
    outcome(
        tally.clean() && tally.holds == graphs.len(),
        format!(
            "{} connected graphs with at most 12 edges; {}",
            graphs.len(),
            tally.describe(TheoremId::LgSquareEquiv)
        ),
    )
}

fn cameron() -> Outcome {
    let graphs: Vec<Graph> = all_up_to(8).into_iter().filter(chordal).collect();
    let tally = Tally::run(TheoremId::Cameron, &graphs);
    outcome(
        tally.clean() && tally.holds == graphs.len(),
        format!(
            "{} chordal graphs with n <= 8; {}",
            graphs.len(),
            tally.describe(TheoremId::Cameron)
        ),
    )
}

fn simple_claim(id: TheoremId, n: usize) -> Outcome {
    let graphs = all_up_to(n);
    let tally = Tally::run(id, &graphs);
    outcome(
        tally.clean(),
        format!(
            "{} graphs with n <= {n}; {}",
            graphs.len(),
            tally.describe(id)
        ),
    )
}

fn sufficient_conditions() -> Outcome {
    let mut graphs = all_up_to(7);
    let exhaustive = graphs.len();
    let mut seed = 1;
    for p in [0.2, 0.5] {
        for n in [6, 8, 10, 12] {
            graphs.extend(generate_random(n, p, 1250, seed).unwrap());
            seed += 1;
        }
    }
    let mut ok = true;
    let mut parts = Vec::new();
    for id in [
        TheoremId::BpSufficient,
        TheoremId::Flotow,
        TheoremId::NewSufficient,
    ] {
        let tally = Tally::run(id, &graphs);
        ok &= tally.clean();
        parts.push(tally.describe(id));
    }
    outcome(
        ok,
        format!(
            "{exhaustive} exhaustive + {} random graphs; {}",
            graphs.len() - exhaustive,
            parts.join("; ")
        ),
    )
}

fn ls_equiv() -> Outcome {
    let graphs: Vec<Graph> = all_up_to(8).into_iter().filter(chordal).collect();
    let tally = Tally::run(TheoremId::LsEquiv, &graphs);
    outcome(
        tally.clean() && tally.holds == graphs.len(),
        format!(
            "{} chordal graphs with n <= 8; {}",
            graphs.len(),
            tally.describe(TheoremId::LsEquiv)
        ),
    )
}

fn fixed_instances() -> Outcome {
    let sunflower5 = families::chordal_sunflower_5();
    let a = chordal(&sunflower5) && !chordal(&sunflower5.square());
    let f4 = families::f4();
    let b = find_unwithered_flower(&f4, 4).unwrap().is_some();
    let c6 = Graph::cycle(6);
    let c = find_sprouts(&c6, 4).unwrap().iter().any(|s| {
        let mut u = s.u_edges.clone();
        let mut w = s.w_edges.clone();
        u.sort_unstable();
        w.sort_unstable();
        s.is_fertile() && u == [(0, 1), (1, 2), (3, 4), (4, 5)] && w == [(0, 5), (2, 3)]
    }) && find_fertile_sprout(&c6, 4).unwrap().is_some();
    let d = !chordal(&c6.line_graph().lg.square());
    outcome(
        a && b && c && d,
        format!(
            "sunflower graph chordal with non-chordal square: {a}; F4 unwithered flower of size 4: {b}; \
             C6 fertile sprout of size 4: {c}; L(C6)^2 non-chordal: {d}"
        ),
    )
}

fn infrastructure() -> Outcome {
    let expected = [1, 2, 4, 11, 34, 156, 1044, 12346];
    let mut counts = Vec::new();
    let mut round_trip_failures = 0;
    for n in 1..=8 {
        let graphs = generate_all(n, false).unwrap();
        counts.push(graphs.len());
        round_trip_failures += graphs
            .iter()
            .filter(|g| parse_graph6(&write_graph6(g).unwrap()).as_ref() != Ok(*g))
            .count();
    }
    let spec = CorpusSpec::exhaustive(6);
    let one = verify_corpus(&spec, &TheoremId::ALL, 1)
        .unwrap()
        .report
        .to_json();
    let eight = verify_corpus(&spec, &TheoremId::ALL, 8)
        .unwrap()
        .report
        .to_json();
    let identical = one == eight;
    outcome(
        counts == expected && round_trip_failures == 0 && identical,
        format!(
            "counts {counts:?}; {round_trip_failures} graph6 round-trip failures; \
             exhaustive(6) report identical for 1 and 8 workers: {identical} ({} bytes)",
            one.len()
        ),
    )
}

fn main() -> ExitCode {
    type Criterion = (u32, &'static str, Duration, fn() -> Outcome);
    let secs = Duration::from_secs;
    let criteria: [Criterion; 11] = [
        (
            1,
            "chordality oracle equivalence",
            secs(30),
            chordality_oracle,
        ),
        (
            2,
            "FLOWER_EQUIV and flower extraction",
            secs(300),
            flower_equiv,
        ),
        (3, "LG_SQUARE_EQUIV", secs(600), lg_square_equiv),
        (4, "CAMERON", secs(300), cameron),
        (5, "DUCHET", secs(120), || {
            simple_claim(TheoremId::Duchet, 7)
        }),
        (6, "DIAMETER_COMPLETE", secs(120), || {
            simple_claim(TheoremId::DiameterComplete, 8)
        }),
        (7, "NO_TWO_CONSEC", secs(300), || {
            simple_claim(TheoremId::NoTwoConsec, 7)
        }),
        (8, "sufficient conditions", secs(600), sufficient_conditions),
        (9, "LS_EQUIV", secs(600), ls_equiv),
        (10, "fixed instances", secs(1), fixed_instances),
        (11, "infrastructure", secs(300), infrastructure),
    ];
    let mut failed = 0;
    for (number, name, limit, run) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let pass = result.ok && elapsed <= limit;
        if !pass {
            failed += 1;
        }
        println!(
            "[{}] criterion {number:>2} {name}: {} [{:.2} s, limit {} s]",
            if pass { "PASS" } else { "FAIL" },
            result.detail,
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
