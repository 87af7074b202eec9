//! Orbits, functional-graph analysis, and the Bulgarian-specific checks
//! (convergence to the staircase, the `k(k-1)` exponent, the extremal
//! path, Garden-of-Eden structure).

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::necklace::{necklace_count, necklace_of_state, Necklace};
use crate::operators::bulgarian_step;
use crate::par::Exec;
use crate::partition::{triangular, triangular_decompose, Partition};
use crate::system::{partition_step_bound, Bulgarian, System};

/// A trajectory up to and including its first repeated state.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitResult<S> {
    /// `path[tail + cycle_length] == path[tail]`; earlier states are distinct.
    pub path: Vec<S>,
    pub tail: usize,
    pub cycle_length: usize,
}

impl<S> OrbitResult<S> {
    /// The cycle states in visit order.
    pub fn cycle(&self) -> &[S] {
        &self.path[self.tail..self.tail + self.cycle_length]
    }

    pub fn last(&self) -> &S {
        self.path.last().expect("an orbit always holds its start")
    }
}

/// Iterates `system` from `start` until a state repeats, remembering every
/// visited state.
pub fn orbit<Y: System>(
    system: &Y,
    start: &Y::State,
    step_bound: usize,
) -> Result<OrbitResult<Y::State>> {
    let mut seen: HashMap<Y::State, usize> = HashMap::new();
    let mut path = vec![start.clone()];
    seen.insert(start.clone(), 0);
    loop {
        if path.len() > step_bound {
            return Err(Error::StepBound { bound: step_bound });
        }
        let next = system.step(path.last().unwrap());
        let first = seen.get(&next).copied();
        path.push(next.clone());
        if let Some(tail) = first {
            let cycle_length = path.len() - 1 - tail;
            return Ok(OrbitResult {
                path,
                tail,
                cycle_length,
            });
        }
        seen.insert(next, path.len() - 1);
    }
}

/// Tail and cycle length by Floyd's tortoise and hare, holding only a
/// constant number of states.
pub fn tail_and_cycle_floyd<Y: System>(
    system: &Y,
    start: &Y::State,
    step_bound: usize,
) -> Result<(usize, usize)> {
    let f = |s: &Y::State| system.step(s);
    let mut tortoise = f(start);
    let mut hare = f(&tortoise);
    let mut steps = 1;
    while tortoise != hare {
        steps += 1;
        if steps > step_bound {
            return Err(Error::StepBound { bound: step_bound });
        }
        tortoise = f(&tortoise);
        hare = f(&f(&hare));
    }
    let mut tail = 0;
    tortoise = start.clone();
    while tortoise != hare {
        tortoise = f(&tortoise);
        hare = f(&hare);
        tail += 1;
    }
    let mut cycle_length = 1;
    hare = f(&tortoise);
    while tortoise != hare {
        hare = f(&hare);
        cycle_length += 1;
    }
    Ok((tail, cycle_length))
}

/// Rotates a cycle so it starts at its smallest state.
pub fn canonical_cycle<S: Ord + Clone>(cycle: &[S]) -> Vec<S> {
    let Some(at) = cycle
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.cmp(b.1))
        .map(|(i, _)| i)
    else {
        return Vec::new();
    };
    cycle[at..].iter().chain(&cycle[..at]).cloned().collect()
}

/// The full functional graph of one variant on the states of `n` cards.
#[derive(Debug, Clone)]
pub struct StateGraph<S> {
    pub states: Vec<S>,
    /// `images[i]` is the index of `step(states[i])`.
    pub images: Vec<usize>,
    /// Component (cycle) index of every state.
    pub component: Vec<usize>,
    /// Distance from every state to its cycle.
    pub tail: Vec<usize>,
    /// Cycles as state indices, each starting at its smallest state, sorted
    /// by that first state.
    pub cycles: Vec<Vec<usize>>,
    pub in_degree: Vec<u32>,
}

impl<S: Clone + Eq + std::hash::Hash + Ord + Send + Sync> StateGraph<S> {
    pub fn build<Y>(system: &Y, n: u32, limits: &Limits, exec: Exec) -> Result<Self>
    where
        Y: System<State = S>,
    {
        let states = system.states(n, limits)?;
        let index: HashMap<&S, usize> = states.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let images: Vec<usize> = exec.map(&states, |s| {
            let image = system.step(s);
            *index
                .get(&image)
                .expect("state space is closed under the step map")
        });

        // colour pass: 0 = unseen, 1 = on the current walk, 2 = finished
        let len = states.len();
        let mut colour = vec![0u8; len];
        let mut on_cycle = vec![usize::MAX; len];
        let mut raw_cycles: Vec<Vec<usize>> = Vec::new();
        let mut walk = Vec::new();
        for s in 0..len {
            let mut cur = s;
            while colour[cur] == 0 {
                colour[cur] = 1;
                walk.push(cur);
                cur = images[cur];
            }
            if colour[cur] == 1 {
                let from = walk.iter().position(|&x| x == cur).unwrap();
                raw_cycles.push(walk[from..].to_vec());
            }
            for &w in &walk {
                colour[w] = 2;
            }
            walk.clear();
        }
        let mut cycles: Vec<Vec<usize>> = raw_cycles
            .into_iter()
            .map(|c| {
                let at = (0..c.len())
                    .min_by(|&a, &b| states[c[a]].cmp(&states[c[b]]))
                    .unwrap();
                c[at..].iter().chain(&c[..at]).copied().collect()
            })
            .collect();
        cycles.sort_by(|a, b| states[a[0]].cmp(&states[b[0]]));
        for (id, c) in cycles.iter().enumerate() {
            for &v in c {
                on_cycle[v] = id;
            }
        }

        let walked: Vec<(usize, usize)> = exec.map_range(len, |s| {
            let mut cur = s;
            let mut t = 0;
            while on_cycle[cur] == usize::MAX {
                cur = images[cur];
                t += 1;
            }
            (on_cycle[cur], t)
        });
        let (component, tail) = walked.into_iter().unzip();

        let mut in_degree = vec![0u32; len];
        for &img in &images {
            in_degree[img] += 1;
        }
        Ok(StateGraph {
            states,
            images,
            component,
            tail,
            cycles,
            in_degree,
        })
    }

    pub fn index_of(&self, state: &S) -> Option<usize> {
        self.states.iter().position(|s| s == state)
    }

    /// States with no predecessor, in enumeration order.
    pub fn ge_indices(&self) -> Vec<usize> {
        (0..self.states.len())
            .filter(|&i| self.in_degree[i] == 0)
            .collect()
    }

    pub fn component_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.cycles.len()];
        for &c in &self.component {
            sizes[c] += 1;
        }
        sizes
    }

    pub fn summary(&self, n: u32, variant: String) -> GraphSummary<S> {
        GraphSummary {
            n,
            variant,
            state_count: self.states.len(),
            component_count: self.cycles.len(),
            cycle_lengths: self.cycles.iter().map(Vec::len).collect(),
            component_sizes: self.component_sizes(),
            cycles: self
                .cycles
                .iter()
                .map(|c| c.iter().map(|&i| self.states[i].clone()).collect())
                .collect(),
            max_tail: self.tail.iter().copied().max().unwrap_or(0),
            ge_states: self
                .ge_indices()
                .into_iter()
                .map(|i| self.states[i].clone())
                .collect(),
            edges: None,
        }
    }
}

/// Component structure of one variant over all states of `n` cards.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphSummary<S> {
    pub n: u32,
    pub variant: String,
    pub state_count: usize,
    pub component_count: usize,
    pub cycle_lengths: Vec<usize>,
    pub component_sizes: Vec<usize>,
    /// Each cycle starts at its smallest state.
    pub cycles: Vec<Vec<S>>,
    pub max_tail: usize,
    /// States with no predecessor, in enumeration order.
    pub ge_states: Vec<S>,
    /// Every edge `s -> step(s)`, kept only when requested for export.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<(S, S)>>,
}

/// Exact component, cycle, tail, and Garden-of-Eden structure over every
/// state of `n` cards.
pub fn analyze_state_space<Y: System>(
    system: &Y,
    n: u32,
    limits: &Limits,
    exec: Exec,
) -> Result<GraphSummary<Y::State>> {
    let graph = StateGraph::build(system, n, limits, exec)?;
    Ok(graph.summary(n, system.name()))
}

/// Like [`analyze_state_space`] but also keeps every edge for export.
pub fn analyze_with_edges<Y: System>(
    system: &Y,
    n: u32,
    limits: &Limits,
    exec: Exec,
) -> Result<GraphSummary<Y::State>> {
    let graph = StateGraph::build(system, n, limits, exec)?;
    let mut summary = graph.summary(n, system.name());
    summary.edges = Some(
        graph
            .states
            .iter()
            .zip(&graph.images)
            .map(|(s, &img)| (s.clone(), graph.states[img].clone()))
            .collect(),
    );
    Ok(summary)
}

/// A partition is a Garden of Eden for the Bulgarian map exactly when its
/// largest part is smaller than its number of parts minus one.
pub fn garden_of_eden_test(lambda: &Partition) -> Result<bool> {
    if lambda.is_empty() {
        return Err(Error::invalid(
            "garden-of-eden test needs a nonempty partition",
        ));
    }
    Ok((lambda.largest() as usize) + 1 < lambda.len())
}

fn iterate_bulgarian(lambda: &Partition, steps: usize) -> Partition {
    (0..steps).fold(lambda.clone(), |s, _| bulgarian_step(&s))
}

/// Result of checking that every partition of `k(k+1)/2` reaches the
/// staircase after exactly `k(k-1)` moves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExponentReport {
    pub k: u32,
    pub n: u32,
    pub exponent: usize,
    pub checked: usize,
    pub holds: bool,
    /// Starting partitions whose image after `exponent` moves is not the
    /// staircase, with that image.
    pub exceptions: Vec<(Partition, Partition)>,
}

pub fn knuth_exponent_check(k: u32, limits: &Limits, exec: Exec) -> Result<ExponentReport> {
    if k < 1 {
        return Err(Error::invalid("k must be at least 1"));
    }
    let n = triangular(k) as u32;
    let states = Bulgarian.states(n, limits)?;
    let exponent = (k as usize) * (k as usize - 1);
    let sigma = Partition::staircase(k);
    let images = exec.map(&states, |s| iterate_bulgarian(s, exponent));
    let exceptions: Vec<(Partition, Partition)> = states
        .iter()
        .zip(images)
        .filter(|(_, img)| *img != sigma)
        .map(|(s, img)| (s.clone(), img))
        .collect();
    Ok(ExponentReport {
        k,
        n,
        exponent,
        checked: states.len(),
        holds: exceptions.is_empty(),
        exceptions,
    })
}

/// Result of checking that every partition of a triangular number ends in
/// the singleton cycle of the staircase.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConvergenceReport {
    pub k: u32,
    pub n: u32,
    pub checked: usize,
    pub max_tail: usize,
    /// Starting partitions whose cycle is not `{staircase}`.
    pub exceptions: Vec<Partition>,
}

impl ConvergenceReport {
    pub fn holds(&self) -> bool {
        self.exceptions.is_empty()
    }
}

pub fn staircase_convergence_check(
    k: u32,
    limits: &Limits,
    exec: Exec,
) -> Result<ConvergenceReport> {
    let n = triangular(k) as u32;
    let states = Bulgarian.states(n, limits)?;
    let sigma = Partition::staircase(k);
    let bound = partition_step_bound(n);
    let orbits = exec.map(&states, |s| orbit(&Bulgarian, s, bound));
    let mut exceptions = Vec::new();
    let mut max_tail = 0;
    for (s, o) in states.iter().zip(orbits) {
        let o = o?;
        max_tail = max_tail.max(o.tail);
        if o.cycle() != std::slice::from_ref(&sigma) {
            exceptions.push(s.clone());
        }
    }
    Ok(ConvergenceReport {
        k,
        n,
        checked: states.len(),
        max_tail,
        exceptions,
    })
}

/// The slowest start for triangular `n = k(k+1)/2`, its distance to the
/// staircase, and the conjugate symmetry of its path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ToomReport {
    pub k: u32,
    pub tau: Partition,
    pub minimal_s: usize,
    pub expected_s: usize,
    /// `tau, B(tau), ..., B^minimal_s(tau)`.
    pub path: Vec<Partition>,
    pub conjugacy_holds: bool,
    /// Indices `i` where `B^i(tau)` is not the conjugate of
    /// `B^(k(k-1)-i-1)(tau)`.
    pub conjugacy_failures: Vec<usize>,
}

/// `(k-1, k-1, k-2, ..., 2, 1, 1)`.
pub fn toom_tau(k: u32) -> Result<Partition> {
    if k < 2 {
        return Err(Error::invalid("the extremal partition needs k >= 2"));
    }
    let mut parts = vec![k - 1];
    parts.extend((1..k).rev());
    parts.push(1);
    Partition::new(parts)
}

pub fn toom_path(k: u32) -> Result<ToomReport> {
    let tau = toom_tau(k)?;
    let sigma = Partition::staircase(k);
    let bound = partition_step_bound(tau.n());
    let mut path = vec![tau.clone()];
    while *path.last().unwrap() != sigma {
        if path.len() > bound {
            return Err(Error::StepBound { bound });
        }
        path.push(bulgarian_step(path.last().unwrap()));
    }
    let minimal_s = path.len() - 1;
    let expected_s = (k as usize) * (k as usize - 1);
    let conjugacy_failures: Vec<usize> = if minimal_s == expected_s {
        (0..expected_s)
            .filter(|&i| path[i] != path[expected_s - i - 1].conjugate())
            .collect()
    } else {
        (0..expected_s).collect()
    };
    Ok(ToomReport {
        k,
        tau,
        minimal_s,
        expected_s,
        conjugacy_holds: conjugacy_failures.is_empty(),
        conjugacy_failures,
        path,
    })
}

/// For one cycle: a Garden-of-Eden start whose orbit enters it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleEntry {
    pub cycle: Vec<Partition>,
    pub witness: Option<Partition>,
    /// Orbit of the witness up to its first cycle state.
    pub path: Vec<Partition>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReachabilityReport {
    pub n: u32,
    pub ge_count: usize,
    pub cycles: Vec<CycleEntry>,
    pub holds: bool,
}

/// Looks for a Garden-of-Eden partition feeding every cycle of the
/// Bulgarian graph on partitions of `n`. For `n <= 2` there are no
/// Garden-of-Eden partitions at all, so the report does not hold there.
pub fn ge_reachability_check(n: u32, limits: &Limits, exec: Exec) -> Result<ReachabilityReport> {
    let graph = StateGraph::build(&Bulgarian, n, limits, exec)?;
    let ge = graph.ge_indices();
    let cycles: Vec<CycleEntry> = graph
        .cycles
        .iter()
        .enumerate()
        .map(|(id, cyc)| {
            let witness = ge.iter().copied().find(|&g| graph.component[g] == id);
            let path = witness
                .map(|g| {
                    let mut cur = g;
                    let mut path = vec![graph.states[cur].clone()];
                    for _ in 0..graph.tail[g] {
                        cur = graph.images[cur];
                        path.push(graph.states[cur].clone());
                    }
                    path
                })
                .unwrap_or_default();
            CycleEntry {
                cycle: cyc.iter().map(|&i| graph.states[i].clone()).collect(),
                witness: witness.map(|g| graph.states[g].clone()),
                path,
            }
        })
        .collect();
    Ok(ReachabilityReport {
        n,
        ge_count: ge.len(),
        holds: cycles.iter().all(|c| c.witness.is_some()),
        cycles,
    })
}

/// Compares the in-degree-zero states of the Bulgarian graph with the
/// closed-form Garden-of-Eden test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeCharacterization {
    pub n: u32,
    pub ge_states: Vec<Partition>,
    /// In-degree 0 but the closed form says otherwise.
    pub missed: Vec<Partition>,
    /// The closed form says Garden of Eden but a predecessor exists.
    pub spurious: Vec<Partition>,
}

impl GeCharacterization {
    pub fn holds(&self) -> bool {
        self.missed.is_empty() && self.spurious.is_empty()
    }
}

pub fn ge_characterization_check(
    n: u32,
    limits: &Limits,
    exec: Exec,
) -> Result<GeCharacterization> {
    if n == 0 {
        return Err(Error::invalid("n must be at least 1"));
    }
    let graph = StateGraph::build(&Bulgarian, n, limits, exec)?;
    let mut out = GeCharacterization {
        n,
        ge_states: Vec::new(),
        missed: Vec::new(),
        spurious: Vec::new(),
    };
    for (i, s) in graph.states.iter().enumerate() {
        let by_degree = graph.in_degree[i] == 0;
        let by_formula = garden_of_eden_test(s)?;
        if by_degree {
            out.ge_states.push(s.clone());
        }
        match (by_degree, by_formula) {
            (true, false) => out.missed.push(s.clone()),
            (false, true) => out.spurious.push(s.clone()),
            _ => {}
        }
    }
    Ok(out)
}

/// One Bulgarian component seen through its necklace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentNecklace {
    pub cycle: Vec<Partition>,
    pub cycle_length: usize,
    pub necklace: Necklace,
    pub period: usize,
    pub size: usize,
}

/// Closed-form component count next to the exhaustive one, with each
/// cycle's necklace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NecklaceReport {
    pub n: u32,
    pub k: u32,
    pub r: u32,
    pub formula_count: u64,
    pub component_count: usize,
    pub components: Vec<ComponentNecklace>,
    /// Every cycle state's necklace turns by exactly one bead per move.
    pub rotation_holds: bool,
}

impl NecklaceReport {
    pub fn holds(&self) -> bool {
        self.formula_count == self.component_count as u64
            && self.rotation_holds
            && self.components.iter().all(|c| c.cycle_length == c.period)
    }
}

pub fn necklace_components(n: u32, limits: &Limits, exec: Exec) -> Result<NecklaceReport> {
    let tri = triangular_decompose(n as u64)?;
    let graph = StateGraph::build(&Bulgarian, n, limits, exec)?;
    let sizes = graph.component_sizes();
    let mut rotation_holds = true;
    let mut components = Vec::with_capacity(graph.cycles.len());
    for (id, cyc) in graph.cycles.iter().enumerate() {
        let cycle: Vec<Partition> = cyc.iter().map(|&i| graph.states[i].clone()).collect();
        for s in &cycle {
            let here = necklace_of_state(s)?;
            let next = necklace_of_state(&bulgarian_step(s))?;
            rotation_holds &= next.beads() == here.rotated(1).beads();
        }
        let necklace = necklace_of_state(&cycle[0])?;
        components.push(ComponentNecklace {
            cycle_length: cycle.len(),
            period: necklace.period(),
            necklace,
            size: sizes[id],
            cycle,
        });
    }
    Ok(NecklaceReport {
        n,
        k: tri.k,
        r: tri.r,
        formula_count: necklace_count(n as u64)?,
        component_count: graph.cycles.len(),
        components,
        rotation_holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Composition;
    use crate::system::Montreal;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn orbit_of_433() {
        let o = orbit(&Bulgarian, &p(&[4, 3, 3]), 100).unwrap();
        assert_eq!((o.tail, o.cycle_length), (9, 1));
        assert_eq!(o.cycle(), &[p(&[4, 3, 2, 1])]);
        assert_eq!(o.path.len(), 11);
    }

    #[test]
    fn orbit_of_421_is_a_four_cycle() {
        let o = orbit(&Bulgarian, &p(&[4, 2, 1]), 100).unwrap();
        assert_eq!(o.tail, 0);
        assert_eq!(
            o.cycle(),
            &[
                p(&[4, 2, 1]),
                p(&[3, 3, 1]),
                p(&[3, 2, 2]),
                p(&[3, 2, 1, 1])
            ]
        );
    }

    #[test]
    fn montreal_orbit_of_322() {
        let start = Composition::montreal(vec![3, 2, 2]).unwrap();
        let o = orbit(&Montreal, &start, 1000).unwrap();
        assert_eq!((o.tail, o.cycle_length), (0, 18));
    }

    #[test]
    fn step_bound_is_an_error() {
        assert_eq!(
            orbit(&Bulgarian, &p(&[4, 3, 3]), 5),
            Err(Error::StepBound { bound: 5 })
        );
        assert!(tail_and_cycle_floyd(&Bulgarian, &p(&[4, 3, 3]), 3).is_err());
    }

    #[test]
    fn floyd_agrees_on_small_spaces() {
        for n in 1..=15 {
            for s in Bulgarian.states(n, &Limits::default()).unwrap() {
                let o = orbit(&Bulgarian, &s, 1000).unwrap();
                let f = tail_and_cycle_floyd(&Bulgarian, &s, 1000).unwrap();
                assert_eq!((o.tail, o.cycle_length), f, "{s}");
            }
        }
    }

    #[test]
    fn graph_examples() {
        let lim = Limits::default();
        let g7 = analyze_state_space(&Bulgarian, 7, &lim, Exec::default()).unwrap();
        assert_eq!(g7.component_count, 1);
        assert_eq!(g7.cycle_lengths, vec![4]);
        let g6 = analyze_state_space(&Bulgarian, 6, &lim, Exec::default()).unwrap();
        assert_eq!(g6.cycles, vec![vec![p(&[3, 2, 1])]]);
        let g8 = analyze_state_space(&Bulgarian, 8, &lim, Exec::default()).unwrap();
        assert_eq!(g8.component_count, 2);
    }

    #[test]
    fn ge_examples() {
        assert!(garden_of_eden_test(&p(&[1, 1, 1, 1])).unwrap());
        assert!(!garden_of_eden_test(&p(&[4, 2, 1])).unwrap());
        assert!(garden_of_eden_test(&p(&[2, 2, 2, 2, 2])).unwrap());
        assert!(garden_of_eden_test(&Partition::empty()).is_err());
    }

    #[test]
    fn knuth_small() {
        let lim = Limits::default();
        let r1 = knuth_exponent_check(1, &lim, Exec::default()).unwrap();
        assert!(r1.holds);
        assert_eq!(r1.checked, 1);
        let r2 = knuth_exponent_check(2, &lim, Exec::default()).unwrap();
        assert!(r2.holds);
        assert_eq!(iterate_bulgarian(&p(&[1, 1, 1]), 2), p(&[2, 1]));
        let r5 = knuth_exponent_check(5, &lim, Exec::default()).unwrap();
        assert!(r5.holds);
        assert_eq!(r5.checked, 176);
    }

    #[test]
    fn toom_examples() {
        let r3 = toom_path(3).unwrap();
        assert_eq!(r3.tau, p(&[2, 2, 1, 1]));
        assert_eq!(r3.minimal_s, 6);
        let expect = [
            p(&[2, 2, 1, 1]),
            p(&[4, 1, 1]),
            p(&[3, 3]),
            p(&[2, 2, 2]),
            p(&[3, 1, 1, 1]),
            p(&[4, 2]),
            p(&[3, 2, 1]),
        ];
        assert_eq!(r3.path, expect);
        assert!(r3.conjugacy_holds);
        let r2 = toom_path(2).unwrap();
        assert_eq!((r2.tau.clone(), r2.minimal_s), (p(&[1, 1, 1]), 2));
        let r4 = toom_path(4).unwrap();
        assert_eq!((r4.tau.clone(), r4.minimal_s), (p(&[3, 3, 2, 1, 1]), 12));
        assert!(toom_path(1).is_err());
    }

    #[test]
    fn reachability_examples() {
        let lim = Limits::default();
        let r3 = ge_reachability_check(3, &lim, Exec::default()).unwrap();
        assert!(r3.holds);
        assert_eq!(r3.cycles[0].cycle, vec![p(&[2, 1])]);
        assert_eq!(r3.cycles[0].witness, Some(p(&[1, 1, 1])));
        assert_eq!(r3.cycles[0].path, vec![p(&[1, 1, 1]), p(&[3]), p(&[2, 1])]);
        let r8 = ge_reachability_check(8, &lim, Exec::default()).unwrap();
        assert!(r8.holds);
        assert_eq!(r8.cycles.len(), 2);
        for n in [1, 2] {
            let r = ge_reachability_check(n, &lim, Exec::default()).unwrap();
            assert_eq!(r.ge_count, 0);
            assert!(!r.holds);
        }
    }

    #[test]
    fn necklace_report_for_twelve() {
        let r = necklace_components(12, &Limits::default(), Exec::default()).unwrap();
        assert_eq!((r.k, r.r, r.formula_count, r.component_count), (5, 2, 2, 2));
        assert!(r.holds());
        let fig = r
            .components
            .iter()
            .find(|c| c.cycle.contains(&p(&[5, 3, 3, 1])))
            .unwrap();
        assert_eq!(fig.cycle_length, 5);
        assert_eq!(fig.necklace.to_string(), "BWBWW");
    }

    #[test]
    fn canonical_cycle_rotates_to_min() {
        assert_eq!(canonical_cycle(&[3, 1, 2]), vec![1, 2, 3]);
        assert!(canonical_cycle::<u32>(&[]).is_empty());
    }
}
