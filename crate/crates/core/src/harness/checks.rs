use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::certificate::{Certificate, Counterexample, Fact, Target};
use super::{TheoremId, Verdict};
use crate::chordality::{
    chordal, enumerate_induced_cycles_bounded, has_induced_cycle_geq, is_chordal,
    ChordalityCertificate,
};
use crate::corpus::write_graph6;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::patterns::{
    check_sufficient_chordalsq, find_claw, find_fertile_sprout, find_p5a,
    find_unsuspended_sunflower, find_unwithered_flower,
};
use crate::witnesses::{extract_flower, verify_flower};

/// Side information gathered while checking [`TheoremId::FlowerEquiv`]:
/// the hole length `l` of a square hole and the number `q` of `w`s of the
/// flower extracted from it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Observation {
    pub hole_length: usize,
    pub q: usize,
}

/// Runs one claim on one graph. Graphs outside the bound of the claim are
/// rejected with [`Error::TooLarge`].
pub fn check_theorem(id: TheoremId, g: &Graph) -> Result<Verdict> {
    check_theorem_observed(id, g).map(|(v, _)| v)
}

/// [`check_theorem`] together with the flower observations.
pub fn check_theorem_observed(id: TheoremId, g: &Graph) -> Result<(Verdict, Vec<Observation>)> {
    let bound = id.bound();
    if g.order() > bound.max_order {
        return Err(Error::TooLarge {
            size: g.order(),
            bound: bound.max_order,
        });
    }
    if let Some(m) = bound.max_size {
        if g.size() > m {
            return Err(Error::TooLarge {
                size: g.size(),
                bound: m,
            });
        }
    }
    if g.order() == 0 {
        return Ok((Verdict::Vacuous, Vec::new()));
    }
    let mut cx = Builder { id, g, k: None };
    let mut seen = Vec::new();
    let verdict = match id {
        TheoremId::DiameterComplete => diameter_complete(&mut cx)?,
        TheoremId::Duchet => duchet(&mut cx)?,
        TheoremId::LsEquiv => ls_equiv(&mut cx)?,
        TheoremId::LsClosed => ls_closed(&mut cx)?,
        TheoremId::NoTwoConsec => no_two_consec(&mut cx)?,
        TheoremId::BpSufficient => bp_sufficient(&mut cx)?,
        TheoremId::Flotow => flotow(&mut cx)?,
        TheoremId::NewSufficient => new_sufficient(&mut cx)?,
        TheoremId::FlowerEquiv => flower_equiv(&mut cx, &mut seen)?,
        TheoremId::LineCycle => line_cycle(&mut cx)?,
        TheoremId::LgCycleBound => lg_cycle_bound(&mut cx)?,
        TheoremId::Cameron => cameron(&mut cx)?,
        TheoremId::SproutEquiv => sprout_equiv(&mut cx)?,
        TheoremId::LgSquareEquiv => lg_square_equiv(&mut cx)?,
    };
    Ok((verdict, seen))
}

struct Builder<'a> {
    id: TheoremId,
    g: &'a Graph,
    k: Option<usize>,
}

impl Builder<'_> {
    fn fail(&self, detail: impl Into<String>, certificates: Vec<Certificate>) -> Result<Verdict> {
        Ok(Verdict::Counterexample(Box::new(Counterexample {
            theorem: self.id,
            graph6: write_graph6(self.g)?,
            k: self.k,
            detail: detail.into(),
            certificates,
        })))
    }
}

fn hole(target: Target, cert: &ChordalityCertificate) -> Certificate {
    match cert {
        ChordalityCertificate::NotChordal { hole } => Certificate::Hole {
            target,
            cycle: hole.vertices().to_vec(),
        },
        ChordalityCertificate::Chordal { peo } => Certificate::Peo {
            target,
            order: peo.clone(),
        },
    }
}

fn fact(fact: Fact) -> Certificate {
    Certificate::Fact { fact }
}

fn line_graph_square(g: &Graph) -> Graph {
    g.line_graph().lg.square()
}

fn diameter_complete(cx: &mut Builder) -> Result<Verdict> {
    let g = cx.g;
    let dm = g.diameter()?;
    let dist = g.distances();
    for k in 1..=g.order() {
        let p = g.power(k)?;
        let complete = p.components().into_iter().all(|c| p.is_clique(c));
        if complete == (k >= dm) {
            continue;
        }
        cx.k = Some(k);
        let far = (0..g.order())
            .flat_map(|a| (a + 1..g.order()).map(move |b| (a, b)))
            .find(|&(a, b)| dist.get(a, b).is_some_and(|d| d > k));
        return if complete {
            let (a, b) = far.expect("k < dm leaves a far pair");
            cx.fail(
                format!("components of G^{k} are complete but dm = {dm}"),
                vec![
                    fact(Fact::ComponentsComplete { k }),
                    Certificate::FarPair { a, b, k },
                ],
            )
        } else {
            cx.fail(
                format!("G^{k} has an incomplete component but dm = {dm}"),
                vec![fact(Fact::DiameterAtMost { k })],
            )
        };
    }
    Ok(Verdict::Holds)
}

fn duchet(cx: &mut Builder) -> Result<Verdict> {
    let g = cx.g;
    let dm = g.diameter()?.max(1);
    for k in 1..=dm {
        let low = is_chordal(&g.power(k)?);
        if !low.is_chordal() {
            continue;
        }
        let high = is_chordal(&g.power(k + 2)?);
        if !high.is_chordal() {
            cx.k = Some(k);
            return cx.fail(
                format!("G^{k} is chordal but G^{} is not", k + 2),
                vec![
                    hole(Target::Power { k }, &low),
                    hole(Target::Power { k: k + 2 }, &high),
                ],
            );
        }
    }
    Ok(Verdict::Holds)
}

fn first_unsuspended(h: &Graph) -> Result<Option<crate::patterns::SunflowerWitness>> {
    for size in 4..=h.order() / 2 {
        if let Some(s) = find_unsuspended_sunflower(h, size)? {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

fn ls_equiv(cx: &mut Builder) -> Result<Verdict> {
    let g = cx.g;
    let base = is_chordal(g);
    if !base.is_chordal() {
        return Ok(Verdict::Vacuous);
    }
    let sq = is_chordal(&g.square());
    let sunflower = first_unsuspended(g)?;
    match (sq.is_chordal(), sunflower) {
        (true, Some(s)) => cx.fail(
            "G^2 is chordal but G has an unsuspended sunflower",
            vec![
                hole(Target::Graph, &base),
                hole(Target::Power { k: 2 }, &sq),
                Certificate::Sunflower {
                    target: Target::Graph,
                    witness: s,
                },
            ],
        ),
        (false, None) => cx.fail(
            "G^2 is not chordal but G has no unsuspended sunflower",
            vec![
                hole(Target::Graph, &base),
                hole(Target::Power { k: 2 }, &sq),
                fact(Fact::NoUnsuspendedSunflower {
                    target: Target::Graph,
                    min_size: 4,
                }),
            ],
        ),
        _ => Ok(Verdict::Holds),
    }
}

fn ls_closed(cx: &mut Builder) -> Result<Verdict> {
    let g = cx.g;
    let base = is_chordal(g);
    if !base.is_chordal() || first_unsuspended(g)?.is_some() {
        return Ok(Verdict::Vacuous);
    }
    let hypothesis = vec![
        hole(Target::Graph, &base),
        fact(Fact::NoUnsuspendedSunflower {
            target: Target::Graph,
            min_size: 4,
        }),
    ];
    let dm = g.diameter()?;
    for k in 2..=dm + 1 {
        let p = g.power(k)?;
        let cert = is_chordal(&p);
        if !cert.is_chordal() {
            cx.k = Some(k);
            let mut certs = hypothesis;
            certs.push(hole(Target::Power { k }, &cert));
            return cx.fail(format!("G^{k} is not chordal"), certs);
        }
        if let Some(s) = first_unsuspended(&p)? {
            cx.k = Some(k);
            let mut certs = hypothesis;
            certs.push(Certificate::Sunflower {
                target: Target::Power { k },
                witness: s,
            });
            return cx.fail(format!("G^{k} has an unsuspended sunflower"), certs);
        }
    }
    Ok(Verdict::Holds)
}

fn no_two_consec(cx: &mut Builder) -> Result<Verdict> {
    let g = cx.g;
    let mut any_hole = false;
    for k in 2..=4 {
        let p = g.power(k)?;
        let holes = enumerate_induced_cycles_bounded(&p, 4, None, p.order())?;
        any_hole |= !holes.is_empty();
        for r in 1..=k / 2 {
            let gr = g.power(r)?;
            for h in &holes {
                let c = h.vertices();
                let l = c.len();
                let inside: Vec<bool> = (0..l).map(|i| gr.has_edge(c[i], c[(i + 1) % l])).collect();
                if let Some(at) = (0..l).find(|&i| inside[i] && inside[(i + 1) % l]) {
                    cx.k = Some(k);
                    return cx.fail(
                        format!("G^{r} contains two consecutive edges of a hole of G^{k}"),
                        vec![Certificate::ConsecutiveEdges {
                            k,
                            r,
                            cycle: c.to_vec(),
                            at,
                        }],
                    );
                }
                if inside.iter().filter(|&&x| x).count() > l / 2 {
                    cx.k = Some(k);
                    return cx.fail(
                        format!("G^{r} contains more than half of the edges of a hole of G^{k}"),
                        vec![Certificate::ManyEdges {
                            k,
                            r,
                            cycle: c.to_vec(),
                        }],
                    );
                }
            }
        }
    }
    Ok(if any_hole {
        Verdict::Holds
    } else {
        Verdict::Vacuous
    })
}

fn bp_sufficient(cx: &mut Builder) -> Result<Verdict> {
    let g = cx.g;
    if find_claw(g).is_some() || find_p5a(g).is_some() || has_induced_cycle_geq(g, 6)?.is_some() {
        return Ok(Verdict::Vacuous);
    }
    let sq = is_chordal(&g.square());
    if sq.is_chordal() {
        return Ok(Verdict::Holds);
    }
    cx.fail(
        "G has no claw, no P5+a and no long hole but G^2 is not chordal",
        vec![
            fact(Fact::ClawFree),
            fact(Fact::P5aFree),
            fact(Fact::NoInducedCycleAtLeast {
                target: Target::Graph,
                f: 6,
            }),
            hole(Target::Power { k: 2 }, &sq),
        ],
    )
}

fn flotow(cx: &mut Builder) -> Result<Verdict> {
    let g = cx.g;
    let base = is_chordal(g);
    if !base.is_chordal() || find_claw(g).is_some() {
        return Ok(Verdict::Vacuous);
    }
    let sq = is_chordal(&g.square());
    if sq.is_chordal() {
        return Ok(Verdict::Holds);
    }
    cx.fail(
        "G is chordal and claw-free but G^2 is not chordal",
        vec![
            hole(Target::Graph, &base),
            fact(Fact::ClawFree),
            hole(Target::Power { k: 2 }, &sq),
        ],
    )
}

fn new_sufficient(cx: &mut Builder) -> Result<Verdict> {
    let g = cx.g;
    if !check_sufficient_chordalsq(g)?.applicable {
        return Ok(Verdict::Vacuous);
    }
    let sq = is_chordal(&g.square());
    if sq.is_chordal() {
        return Ok(Verdict::Holds);
    }
    cx.fail(
        "the claw / long hole / F4 test applies but G^2 is not chordal",
        vec![
            fact(Fact::SufficientApplicable),
            hole(Target::Power { k: 2 }, &sq),
        ],
    )
}

/// Largest flower size that fits: `size + ⌈size/2⌉ <= n`.
fn max_flower_size(n: usize) -> usize {
    (0..=n).rev().find(|&s| s + s.div_ceil(2) <= n).unwrap_or(0)
}

fn flower_equiv(cx: &mut Builder, seen: &mut Vec<Observation>) -> Result<Verdict> {
    let g = cx.g;
    let sq = g.square();
    let cert = is_chordal(&sq);
    let max_size = max_flower_size(g.order());
    let mut unwithered = None;
    for size in 4..=max_size {
        if let Some(f) = find_unwithered_flower(g, size)? {
            unwithered = Some(f);
            break;
        }
    }
    match (cert.is_chordal(), unwithered) {
        (true, Some(f)) => {
            return cx.fail(
                "G^2 is chordal but G has an unwithered flower",
                vec![
                    hole(Target::Power { k: 2 }, &cert),
                    Certificate::Flower { witness: f },
                ],
            )
        }
        (false, None) => {
            return cx.fail(
                "G^2 is not chordal but every flower of G is withered",
                vec![
                    hole(Target::Power { k: 2 }, &cert),
                    fact(Fact::NoUnwitheredFlower {
                        min_size: 4,
                        max_size,
                    }),
                ],
            )
        }
        _ => {}
    }
    // the constructive direction: every square hole yields an unwithered flower
    let holes = enumerate_induced_cycles_bounded(&sq, 4, None, sq.order())?;
    for h in holes {
        let c = h.vertices();
        let flower = match extract_flower(g, c) {
            Ok(f) if verify_flower(g, &f).is_ok() && f.withered_by.is_none() => f,
            Ok(_) | Err(Error::InternalContradiction(_)) => {
                return cx.fail(
                    "a hole of G^2 does not yield an unwithered flower",
                    vec![Certificate::Hole {
                        target: Target::Power { k: 2 },
                        cycle: c.to_vec(),
                    }],
                )
            }
            Err(e) => return Err(e),
        };
        seen.push(Observation {
            hole_length: c.len(),
            q: flower.w.len(),
        });
    }
    Ok(Verdict::Holds)
}

/// One cycle of `g` for each length `>= 3` that occurs, as a vertex
/// sequence starting at its smallest vertex.
pub fn simple_cycles_by_length(g: &Graph) -> BTreeMap<usize, Vec<usize>> {
    fn extend(
        g: &Graph,
        path: &mut Vec<usize>,
        on: &mut [bool],
        out: &mut BTreeMap<usize, Vec<usize>>,
    ) {
        let s = path[0];
        let last = *path.last().unwrap();
        for v in g.neighbors(last) {
            if v == s && path.len() >= 3 && path[1] < last {
                out.entry(path.len()).or_insert_with(|| path.clone());
            }
            if v > s && !on[v] {
                on[v] = true;
                path.push(v);
                extend(g, path, on, out);
                path.pop();
                on[v] = false;
            }
        }
    }
    let mut out = BTreeMap::new();
    let mut on = vec![false; g.order()];
    for s in 0..g.order() {
        on[s] = true;
        extend(g, &mut vec![s], &mut on, &mut out);
        on[s] = false;
    }
    out
}

fn line_cycle(cx: &mut Builder) -> Result<Verdict> {
    let g = cx.g;
    let cycles = simple_cycles_by_length(g);
    let lg = g.line_graph().lg;
    let mut induced: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for h in enumerate_induced_cycles_bounded(&lg, 4, None, lg.order())? {
        induced.entry(h.len()).or_insert_with(|| h.into_vec());
    }
    let longest = g.order().max(lg.order());
    for l in 4..=longest {
        match (cycles.get(&l), induced.get(&l)) {
            (Some(c), None) => {
                return cx.fail(
                    format!("G has a cycle of length {l} but L(G) has no induced one"),
                    vec![
                        Certificate::Cycle { cycle: c.clone() },
                        fact(Fact::NoInducedCycleOfLength {
                            target: Target::LineGraph,
                            l,
                        }),
                    ],
                )
            }
            (None, Some(c)) => {
                return cx.fail(
                    format!(
                        "L(G) has an induced cycle of length {l} but G has no cycle of that length"
                    ),
                    vec![
                        Certificate::Hole {
                            target: Target::LineGraph,
                            cycle: c.clone(),
                        },
                        fact(Fact::NoCycleOfLength { l }),
                    ],
                )
            }
            _ => {}
        }
    }
    Ok(Verdict::Holds)
}

fn lg_cycle_bound(cx: &mut Builder) -> Result<Verdict> {
    let g = cx.g;
    let lg2 = line_graph_square(g);
    let mut applied = false;
    for f in 4..=6 {
        if has_induced_cycle_geq(g, f)?.is_some() {
            continue;
        }
        applied = true;
        if let Some(h) = has_induced_cycle_geq(&lg2, f)? {
            return cx.fail(
                format!("G has no induced cycle of length >= {f} but L(G)^2 has one"),
                vec![
                    fact(Fact::NoInducedCycleAtLeast {
                        target: Target::Graph,
                        f,
                    }),
                    Certificate::Hole {
                        target: Target::LineGraphSquare,
                        cycle: h.into_vec(),
                    },
                ],
            );
        }
    }
    Ok(if applied {
        Verdict::Holds
    } else {
        Verdict::Vacuous
    })
}

fn cameron(cx: &mut Builder) -> Result<Verdict> {
    let g = cx.g;
    let base = is_chordal(g);
    if !base.is_chordal() {
        return Ok(Verdict::Vacuous);
    }
    let lg2 = is_chordal(&line_graph_square(g));
    if lg2.is_chordal() {
        return Ok(Verdict::Holds);
    }
    cx.fail(
        "G is chordal but L(G)^2 is not",
        vec![
            hole(Target::Graph, &base),
            hole(Target::LineGraphSquare, &lg2),
        ],
    )
}

fn sprout_equiv(cx: &mut Builder) -> Result<Verdict> {
    let g = cx.g;
    let lg2 = line_graph_square(g);
    let mut induced: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for h in enumerate_induced_cycles_bounded(&lg2, 4, None, lg2.order())? {
        induced.entry(h.len()).or_insert_with(|| h.into_vec());
    }
    for l in 4..=g.size() {
        let sprout = find_fertile_sprout(g, l)?;
        match (induced.get(&l), sprout) {
            (Some(c), None) => {
                return cx.fail(
                    format!("L(G)^2 has an induced cycle of length {l} but G has no fertile sprout of size {l}"),
                    vec![
                        Certificate::Hole {
                            target: Target::LineGraphSquare,
                            cycle: c.clone(),
                        },
                        fact(Fact::NoFertileSprout { sizes: vec![l] }),
                    ],
                )
            }
            (None, Some(s)) => {
                return cx.fail(
                    format!("G has a fertile sprout of size {l} but L(G)^2 has no induced cycle of that length"),
                    vec![
                        Certificate::Sprout { witness: s },
                        fact(Fact::NoInducedCycleOfLength {
                            target: Target::LineGraphSquare,
                            l,
                        }),
                    ],
                )
            }
            _ => {}
        }
    }
    Ok(Verdict::Holds)
}

fn lg_square_equiv(cx: &mut Builder) -> Result<Verdict> {
    let g = cx.g;
    let lg2 = is_chordal(&line_graph_square(g));
    let long_hole = has_induced_cycle_geq(g, 6)?;
    let mut sprout = None;
    for size in [4, 5] {
        if let Some(s) = find_fertile_sprout(g, size)? {
            sprout = Some(s);
            break;
        }
    }
    let obstructed = long_hole.is_some() || sprout.is_some();
    if lg2.is_chordal() != obstructed {
        return Ok(Verdict::Holds);
    }
    if lg2.is_chordal() {
        let mut certs = vec![hole(Target::LineGraphSquare, &lg2)];
        match (long_hole, sprout) {
            (Some(h), _) => certs.push(Certificate::Hole {
                target: Target::Graph,
                cycle: h.into_vec(),
            }),
            (None, Some(s)) => certs.push(Certificate::Sprout { witness: s }),
            (None, None) => unreachable!("obstructed"),
        }
        cx.fail(
            "L(G)^2 is chordal but G has a long hole or a fertile sprout of size 4 or 5",
            certs,
        )
    } else {
        cx.fail(
            "L(G)^2 is not chordal but G has neither a long hole nor a fertile sprout of size 4 or 5",
            vec![
                hole(Target::LineGraphSquare, &lg2),
                fact(Fact::NoInducedCycleAtLeast {
                    target: Target::Graph,
                    f: 6,
                }),
                fact(Fact::NoFertileSprout { sizes: vec![4, 5] }),
            ],
        )
    }
}

/// Chordality of `g²`, or of `L(g)²` when `line` is set.
pub(crate) fn target_chordal(g: &Graph, line: bool) -> bool {
    if line {
        chordal(&line_graph_square(g))
    } else {
        chordal(&g.square())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn holds(id: TheoremId, g: &Graph) {
        let v = check_theorem(id, g).unwrap();
        assert_eq!(v, Verdict::Holds, "{id} on {g:?}");
    }

    #[test]
    fn documented_examples() {
        holds(TheoremId::Duchet, &Graph::cycle(5));
        holds(TheoremId::FlowerEquiv, &families::f4());
        holds(TheoremId::LgSquareEquiv, &Graph::cycle(6));
        holds(TheoremId::DiameterComplete, &Graph::complete(4));
    }

    #[test]
    fn vacuous_hypotheses() {
        let c5 = Graph::cycle(5);
        assert_eq!(
            check_theorem(TheoremId::LsEquiv, &c5).unwrap(),
            Verdict::Vacuous
        );
        assert_eq!(
            check_theorem(TheoremId::Flotow, &c5).unwrap(),
            Verdict::Vacuous
        );
        assert_eq!(
            check_theorem(TheoremId::Cameron, &c5).unwrap(),
            Verdict::Vacuous
        );
        assert_eq!(
            check_theorem(TheoremId::BpSufficient, &Graph::star(3)).unwrap(),
            Verdict::Vacuous
        );
        assert_eq!(
            check_theorem(TheoremId::LgCycleBound, &Graph::cycle(7)).unwrap(),
            Verdict::Vacuous
        );
        assert_eq!(
            check_theorem(TheoremId::NoTwoConsec, &Graph::complete(4)).unwrap(),
            Verdict::Vacuous
        );
        holds(TheoremId::NoTwoConsec, &Graph::cycle(8));
    }

    #[test]
    fn bounds_are_enforced() {
        let big = Graph::cycle(9);
        assert!(matches!(
            check_theorem(TheoremId::FlowerEquiv, &big),
            Err(Error::TooLarge { .. })
        ));
        let dense = Graph::complete(6);
        assert!(matches!(
            check_theorem(TheoremId::SproutEquiv, &dense),
            Err(Error::TooLarge { .. })
        ));
        holds(TheoremId::Flotow, &Graph::path(12));
    }

    #[test]
    fn simple_cycles() {
        let k4 = Graph::complete(4);
        let cycles = simple_cycles_by_length(&k4);
        assert_eq!(cycles.keys().copied().collect::<Vec<_>>(), vec![3, 4]);
        assert!(simple_cycles_by_length(&Graph::path(5)).is_empty());
        let c6 = simple_cycles_by_length(&Graph::cycle(6));
        assert_eq!(c6.get(&6), Some(&vec![0, 1, 2, 3, 4, 5]));
    }

    #[test]
    fn flower_observations() {
        let (v, seen) = check_theorem_observed(TheoremId::FlowerEquiv, &Graph::cycle(8)).unwrap();
        assert_eq!(v, Verdict::Holds);
        assert_eq!(seen.len(), 10);
        assert!(seen.contains(&Observation {
            hole_length: 4,
            q: 4
        }));
        assert!(seen.contains(&Observation {
            hole_length: 5,
            q: 3
        }));
        assert!(seen.iter().all(|o| 2 * o.q >= o.hole_length));
    }

    #[test]
    fn every_claim_on_small_named_graphs() {
        let graphs = [
            Graph::cycle(4),
            Graph::cycle(6),
            Graph::path(6),
            Graph::star(4),
            families::p5a(),
            families::f4(),
            families::f4_suspended(),
            families::sprout_c5_pendants(),
        ];
        for g in &graphs {
            for id in TheoremId::ALL {
                match check_theorem(id, g) {
                    Ok(Verdict::Counterexample(c)) => panic!("{id}: {c:?}"),
                    Ok(_) | Err(Error::TooLarge { .. }) => {}
                    Err(e) => panic!("{id}: {e}"),
                }
            }
        }
    }
}
