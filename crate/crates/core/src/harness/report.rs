use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::certificate::Counterexample;
use super::checks::{check_theorem_observed, Observation};
use super::{Bound, ClaimKind, TheoremId, Verdict};
use crate::canon::{canonical_graph, CANONICAL_ORDER_BOUND};
use crate::corpus::{write_graph6, CorpusSpec};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Version of the JSON layout of [`TheoremReport`].
pub const SCHEMA_VERSION: u32 = 1;

/// Verdict without its payload.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum VerdictTag {
    Holds,
    Vacuous,
    Counterexample,
    /// Outside the size bound of the claim.
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremSummary {
    pub id: TheoremId,
    pub kind: ClaimKind,
    pub statement: String,
    pub bound: Bound,
    pub holds: usize,
    pub vacuous: usize,
    pub counterexamples: usize,
    pub skipped: usize,
}

/// Verdicts of one graph. `graph6` is the input as given, `canonical` the
/// graph6 of its canonical relabelling (the input itself above the
/// canonical-form bound).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphVerdicts {
    pub canonical: String,
    pub graph6: String,
    pub verdicts: BTreeMap<TheoremId, VerdictTag>,
}

/// How often the extracted flower of a square hole of length
/// `hole_length` had `q` vertices in `W`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RatioCount {
    pub hole_length: usize,
    pub q: usize,
    pub count: usize,
}

/// The deterministic result of a corpus run. Everything in here depends
/// only on the corpus and the selected claims.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub schema_version: u32,
    pub corpus: CorpusSpec,
    pub graphs: usize,
    pub theorems: Vec<TheoremSummary>,
    pub counterexamples: Vec<Counterexample>,
    /// Counterexamples whose certificates did not check out. Always empty
    /// unless a verifier or a search is broken.
    pub unverified: Vec<String>,
    pub flower_ratios: Vec<RatioCount>,
    pub per_graph: Vec<GraphVerdicts>,
}

impl TheoremReport {
    pub fn total_counterexamples(&self) -> usize {
        self.theorems.iter().map(|t| t.counterexamples).sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}

/// A report plus the time spent per claim, summed over workers. Timings
/// vary between runs and are kept out of the report.
#[derive(Clone, Debug)]
pub struct CorpusRun {
    pub report: TheoremReport,
    pub elapsed: BTreeMap<TheoremId, Duration>,
}

struct GraphResult {
    canonical: String,
    graph6: String,
    verdicts: Vec<(TheoremId, VerdictTag, Duration)>,
    counterexamples: Vec<Counterexample>,
    observations: Vec<Observation>,
}

fn run_graph(g: &Graph, ids: &[TheoremId]) -> Result<GraphResult> {
    let graph6 = write_graph6(g)?;
    let canonical = if g.order() <= CANONICAL_ORDER_BOUND {
        write_graph6(&canonical_graph(g)?)?
    } else {
        graph6.clone()
    };
    let mut out = GraphResult {
        canonical,
        graph6,
        verdicts: Vec::with_capacity(ids.len()),
        counterexamples: Vec::new(),
        observations: Vec::new(),
    };
    for &id in ids {
        let start = Instant::now();
        let tag = match check_theorem_observed(id, g) {
            Ok((verdict, seen)) => {
                out.observations.extend(seen);
                let tag = verdict.tag();
                if let Verdict::Counterexample(c) = verdict {
                    out.counterexamples.push(*c);
                }
                tag
            }
            Err(Error::TooLarge { .. }) => VerdictTag::Skipped,
            Err(e) => return Err(e),
        };
        out.verdicts.push((id, tag, start.elapsed()));
    }
    Ok(out)
}

/// Runs every selected claim on every graph of the corpus with `jobs`
/// worker threads (0 picks the number of cores). The report is sorted by
/// canonical form and does not depend on `jobs`.
pub fn verify_corpus(spec: &CorpusSpec, ids: &[TheoremId], jobs: usize) -> Result<CorpusRun> {
    verify_graphs(spec, &spec.graphs()?, ids, jobs)
}

/// [`verify_corpus`] on graphs that are already in memory; `spec` is only
/// recorded in the report.
pub fn verify_graphs(
    spec: &CorpusSpec,
    graphs: &[Graph],
    ids: &[TheoremId],
    jobs: usize,
) -> Result<CorpusRun> {
    let mut ids = ids.to_vec();
    ids.sort();
    ids.dedup();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Io(e.to_string()))?;
    let mut results = pool.install(|| {
        graphs
            .par_iter()
            .map(|g| run_graph(g, &ids))
            .collect::<Result<Vec<GraphResult>>>()
    })?;
    results.sort_by(|a, b| (&a.canonical, &a.graph6).cmp(&(&b.canonical, &b.graph6)));

    let mut theorems: Vec<TheoremSummary> = ids
        .iter()
        .map(|&id| TheoremSummary {
            id,
            kind: id.kind(),
            statement: id.statement().to_string(),
            bound: id.bound(),
            holds: 0,
            vacuous: 0,
            counterexamples: 0,
            skipped: 0,
        })
        .collect();
    let mut elapsed: BTreeMap<TheoremId, Duration> = BTreeMap::new();
    let mut ratios: BTreeMap<Observation, usize> = BTreeMap::new();
    let mut counterexamples = Vec::new();
    let mut per_graph = Vec::with_capacity(results.len());
    for r in results {
        for (i, &(id, tag, time)) in r.verdicts.iter().enumerate() {
            let s = &mut theorems[i];
            match tag {
                VerdictTag::Holds => s.holds += 1,
                VerdictTag::Vacuous => s.vacuous += 1,
                VerdictTag::Counterexample => s.counterexamples += 1,
                VerdictTag::Skipped => s.skipped += 1,
            }
            *elapsed.entry(id).or_default() += time;
        }
        for o in r.observations {
            *ratios.entry(o).or_default() += 1;
        }
        counterexamples.extend(r.counterexamples);
        per_graph.push(GraphVerdicts {
            canonical: r.canonical,
            graph6: r.graph6,
            verdicts: r.verdicts.iter().map(|&(id, tag, _)| (id, tag)).collect(),
        });
    }
    counterexamples.sort_by_key(|c| c.theorem);
    let mut unverified = Vec::new();
    for c in &counterexamples {
        if !c.reverify()? {
            unverified.push(format!("{} on {}", c.theorem, c.graph6));
        }
    }

    let report = TheoremReport {
        schema_version: SCHEMA_VERSION,
        corpus: spec.clone(),
        graphs: graphs.len(),
        theorems,
        counterexamples,
        unverified,
        flower_ratios: ratios
            .into_iter()
            .map(|(o, count)| RatioCount {
                hole_length: o.hole_length,
                q: o.q,
                count,
            })
            .collect(),
        per_graph,
    };
    Ok(CorpusRun { report, elapsed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::Format;

    #[test]
    fn single_k4_file() {
        let dir = std::env::temp_dir().join(format!("gsq-report-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("k4.g6");
        std::fs::write(&path, "C~\n").unwrap();
        let run = verify_corpus(
            &CorpusSpec::file(&path, Format::G6),
            &[TheoremId::DiameterComplete],
            1,
        )
        .unwrap();
        let r = &run.report;
        assert_eq!(r.graphs, 1);
        assert_eq!(r.theorems[0].holds, 1);
        assert_eq!(
            r.per_graph[0].verdicts[&TheoremId::DiameterComplete],
            VerdictTag::Holds
        );
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn counts_add_up_and_jobs_do_not_matter() {
        let spec = CorpusSpec::exhaustive(5);
        let one = verify_corpus(&spec, &TheoremId::ALL, 1).unwrap().report;
        let four = verify_corpus(&spec, &TheoremId::ALL, 4).unwrap().report;
        assert_eq!(one.to_json(), four.to_json());
        assert_eq!(one.total_counterexamples(), 0);
        assert!(one.unverified.is_empty());
        for t in &one.theorems {
            assert_eq!(
                t.holds + t.vacuous + t.counterexamples + t.skipped,
                one.graphs
            );
        }
        assert_eq!(one.graphs, 1 + 2 + 4 + 11 + 34);
    }
}
