//! Greedy routing on the undirected star graph and the oriented router for
//! the Fujita orientation, with per-hop instrumentation.
//!
//! Both routers are node-local: a step depends only on the current address
//! `c` and the destination `t`. Traces record every hop together with the
//! move kind, the decision case that produced it and the analysis phase.

use std::fmt;

use serde::Serialize;

use crate::classify::{classify, is_alternating, ClassifiedSets};
use crate::error::{Error, Result};
use crate::perm::{same_order, Perm};
use crate::topology::{is_outgoing, Half, HalfBoundary, Scheme};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MoveKind {
    /// The front value goes straight to its target position.
    Settling,
    /// The front value is already `t(1)` and gets displaced.
    Seeding,
    /// The front value moves into the half it is destined for.
    Crossing,
    FinalCrossing,
    PreFinalCrossing,
}

impl MoveKind {
    pub fn is_crossing(self) -> bool {
        matches!(
            self,
            MoveKind::Crossing | MoveKind::FinalCrossing | MoveKind::PreFinalCrossing
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            MoveKind::Settling => "settling",
            MoveKind::Seeding => "seeding",
            MoveKind::Crossing => "crossing",
            MoveKind::FinalCrossing => "final-crossing",
            MoveKind::PreFinalCrossing => "pre-final-crossing",
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which branch of the decision procedure picked the link.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Case {
    Settle,
    CrossOutsideCycle,
    CrossBackward,
    CrossSettled,
    /// Case 2.3 with no settled value in the sending half.
    CrossFallback,
    FinalFromCrossed,
    FinalOrPreFinal,
    SeedCrossed,
    ClassicSettle,
    ClassicSeed,
}

impl Case {
    pub fn label(self) -> &'static str {
        match self {
            Case::Settle => "1",
            Case::CrossOutsideCycle => "2.1",
            Case::CrossBackward => "2.2",
            Case::CrossSettled => "2.3",
            Case::CrossFallback => "2.3f",
            Case::FinalFromCrossed => "3.1",
            Case::FinalOrPreFinal => "3.2",
            Case::SeedCrossed => "4",
            Case::ClassicSettle => "settle",
            Case::ClassicSeed => "seed",
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for Case {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Phase {
    One,
    Two,
    Three,
}

impl Phase {
    pub fn number(self) -> u8 {
        match self {
            Phase::One => 1,
            Phase::Two => 2,
            Phase::Three => 3,
        }
    }
}

impl Serialize for Phase {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u8(self.number())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Step {
    pub link: usize,
    pub kind: MoveKind,
    pub case: Case,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hop {
    /// 1-based.
    pub index: usize,
    /// Node the packet is at before this hop.
    pub node: Perm,
    pub link: usize,
    #[serde(skip)]
    pub next: Perm,
    #[serde(rename = "move")]
    pub kind: MoveKind,
    pub case: Case,
    pub phase: Phase,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RouteTrace {
    pub source: Perm,
    pub target: Perm,
    /// `None` for undirected (classic) routes.
    pub scheme: Option<Scheme>,
    pub length: usize,
    pub hops: Vec<Hop>,
}

impl RouteTrace {
    pub fn len(&self) -> usize {
        self.hops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hops.is_empty()
    }

    /// Every node on the route: `nodes()[j]` is the node before hop `j+1`,
    /// and the last entry is the node reached.
    pub fn nodes(&self) -> Vec<Perm> {
        let mut out = Vec::with_capacity(self.hops.len() + 1);
        out.push(self.source);
        out.extend(self.hops.iter().map(|h| h.next));
        out
    }

    pub fn phase_len(&self, phase: Phase) -> usize {
        self.hops.iter().filter(|h| h.phase == phase).count()
    }

    /// One line per hop:
    /// `<idx> <node> --<link>--> <node'> <move> case=<label> phase=<n>`.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for h in &self.hops {
            out.push_str(&format!(
                "{} {} --{}--> {} {} case={} phase={}\n",
                h.index,
                h.node,
                h.link,
                h.next,
                h.kind,
                h.case,
                h.phase.number()
            ));
        }
        out
    }
}

/// Runaway guard for the oriented router: twice the proven worst case.
pub fn hop_cap(n: usize) -> usize {
    4 * n + 8
}

pub fn classic_step(c: &Perm, t: &Perm) -> Result<Step> {
    same_order(c, t)?;
    if c == t {
        return Err(Error::NoStep);
    }
    let front = c.get(1);
    if front != t.get(1) {
        return Ok(Step {
            link: t.position_of(front),
            kind: MoveKind::Settling,
            case: Case::ClassicSettle,
        });
    }
    let link = (2..=c.n())
        .find(|&i| c.get(i) != t.get(i))
        .expect("c != t with matching fronts leaves an unsettled position");
    Ok(Step {
        link,
        kind: MoveKind::Seeding,
        case: Case::ClassicSeed,
    })
}

pub fn classic_route(s: &Perm, t: &Perm) -> Result<RouteTrace> {
    same_order(s, t)?;
    // The greedy route is optimal, so its length is bounded by the diameter.
    let cap = 3 * s.n();
    build_route(s, t, None, cap, classic_step)
}

/// Undirected distance from the mismatch count and the number of
/// non-singleton relative cycles.
pub fn classic_distance(s: &Perm, t: &Perm) -> Result<usize> {
    same_order(s, t)?;
    let mismatched = (1..=s.n()).filter(|&i| s.get(i) != t.get(i)).count();
    let cycles = crate::perm::relative_cycles(s, t)?.nonsingleton_count;
    Ok(if mismatched == 0 {
        0
    } else if s.get(1) == t.get(1) {
        mismatched + cycles
    } else {
        mismatched + cycles - 2
    })
}

/// Undirected distance written through the value classes:
/// `|ULL| + |URR| + |X| + c`.
pub fn classic_distance_sets(s: &Perm, t: &Perm) -> Result<usize> {
    let cs = classify(s, t)?;
    Ok(distance_from_sets(&cs))
}

pub fn distance_from_sets(cs: &ClassifiedSets) -> usize {
    cs.uncrossed_count() + cs.crossed_count + cs.nonsingleton_cycles
}

/// One decision of the oriented router at node `c` for destination `t`.
///
/// Writing `H` for the half the node may send into (left for even nodes,
/// right for odd ones) the cases are tried in order:
///
/// 1. the front value belongs in `H`: settle it;
/// 2. some unsettled value sits in its own correct half: cross the front
///    value by swapping in such a value from `H` (2.1 prefers one outside the
///    front value's relative cycle, 2.2 takes the first met walking that cycle
///    backwards, 2.3 falls back to a settled value of `H`);
/// 3. the front value belongs in the other half: final crossing with a value
///    of `H` destined for the other half, preferring alternating cycles (3.1),
///    otherwise bring `t(1)` forward or, failing that, a settled value (3.2);
/// 4. the front value is `t(1)`: seed with a value of `H` destined for the
///    other half.
///
/// Ties are broken by the lowest position in `c`.
pub fn oriented_step(c: &Perm, t: &Perm, scheme: Scheme) -> Result<Step> {
    if scheme != Scheme::Fujita {
        return Err(Error::UnsupportedScheme(scheme.to_string()));
    }
    same_order(c, t)?;
    if c == t {
        return Err(Error::NoStep);
    }
    let cs = classify(c, t)?;
    let hb = HalfBoundary::new(c.n());
    let home = Half::outgoing_for(c.sign());
    let front = c.get(1);
    let target_front = t.get(1);
    let lowest = |set: &[usize]| set.iter().map(|&v| c.position_of(v)).min();

    let step = if hb.half_of(t.position_of(front)) == Some(home) {
        Step {
            link: t.position_of(front),
            kind: MoveKind::Settling,
            case: Case::Settle,
        }
    } else if cs.uncrossed_count() > 0 {
        let kind = if front == target_front {
            MoveKind::Seeding
        } else {
            MoveKind::Crossing
        };
        let same = cs.same_half(home);
        if !same.is_empty() {
            let front_cycle = cs.relative.cycle_index_of(front);
            let outside: Vec<usize> = same
                .iter()
                .copied()
                .filter(|&v| cs.relative.cycle_index_of(v) != front_cycle)
                .collect();
            if let Some(link) = lowest(&outside) {
                Step {
                    link,
                    kind,
                    case: Case::CrossOutsideCycle,
                }
            } else {
                let cycle = cs.relative.cycle_of(front);
                let start = cycle
                    .iter()
                    .position(|&v| v == front)
                    .expect("front on its cycle");
                let len = cycle.len();
                let value = (1..len)
                    .map(|back| cycle[(start + len - back) % len])
                    .find(|v| same.contains(v))
                    .ok_or_else(|| {
                        Error::InvariantViolation(format!(
                            "case 2.2 at {c} -> {t}: no same-half value on the front cycle"
                        ))
                    })?;
                Step {
                    link: c.position_of(value),
                    kind,
                    case: Case::CrossBackward,
                }
            }
        } else {
            // With no settled value in the sending half, the half holds only
            // t(1) and values bound for the other half. Bring t(1) forward if
            // it is there, otherwise take the lowest crossed value.
            let tf_pos = c.position_of(target_front);
            if let Some(link) = lowest(cs.settled_in(home)) {
                Step {
                    link,
                    kind,
                    case: Case::CrossSettled,
                }
            } else {
                let link = (front != target_front && hb.half_of(tf_pos) == Some(home))
                    .then_some(tf_pos)
                    .or_else(|| lowest(cs.leaving(home)))
                    .ok_or_else(|| {
                        Error::InvariantViolation(format!(
                            "case 2.3 at {c} -> {t}: the sending half holds nothing to swap in"
                        ))
                    })?;
                Step {
                    link,
                    kind,
                    case: Case::CrossFallback,
                }
            }
        }
    } else if front != target_front {
        let leaving = cs.leaving(home);
        if !leaving.is_empty() {
            let on_alternating: Vec<usize> = leaving
                .iter()
                .copied()
                .filter(|&v| is_alternating(cs.relative.cycle_of(v), c))
                .collect();
            let link = lowest(&on_alternating)
                .or_else(|| lowest(leaving))
                .expect("non-empty candidate set");
            Step {
                link,
                kind: MoveKind::FinalCrossing,
                case: Case::FinalFromCrossed,
            }
        } else {
            let pos = c.position_of(target_front);
            if hb.half_of(pos) == Some(home) {
                Step {
                    link: pos,
                    kind: MoveKind::FinalCrossing,
                    case: Case::FinalOrPreFinal,
                }
            } else {
                let link = lowest(cs.settled_in(home)).ok_or_else(|| {
                    Error::InvariantViolation(format!(
                        "case 3.2 at {c} -> {t}: t(1) unreachable and no settled value in the sending half"
                    ))
                })?;
                Step {
                    link,
                    kind: MoveKind::PreFinalCrossing,
                    case: Case::FinalOrPreFinal,
                }
            }
        }
    } else {
        let link = lowest(cs.leaving(home)).ok_or_else(|| {
            Error::InvariantViolation(format!("case 4 at {c} -> {t}: nothing to seed with"))
        })?;
        Step {
            link,
            kind: MoveKind::Seeding,
            case: Case::SeedCrossed,
        }
    };

    if hb.half_of(step.link) != Some(home) {
        return Err(Error::InvariantViolation(format!(
            "case {} at {c} -> {t} picked link {} outside the sending half",
            step.case, step.link
        )));
    }
    Ok(step)
}

pub fn oriented_route(s: &Perm, t: &Perm, scheme: Scheme) -> Result<RouteTrace> {
    if scheme != Scheme::Fujita {
        return Err(Error::UnsupportedScheme(scheme.to_string()));
    }
    same_order(s, t)?;
    build_route(s, t, Some(scheme), hop_cap(s.n()), |c, t| {
        oriented_step(c, t, scheme)
    })
}

fn build_route(
    s: &Perm,
    t: &Perm,
    scheme: Option<Scheme>,
    cap: usize,
    mut step: impl FnMut(&Perm, &Perm) -> Result<Step>,
) -> Result<RouteTrace> {
    let mut hops = Vec::new();
    let mut c = *s;
    while c != *t {
        if hops.len() >= cap {
            return Err(Error::InvariantViolation(format!(
                "route {s} -> {t} exceeded the hop cap {cap}"
            )));
        }
        let st = step(&c, t)?;
        let next = c.swap_front(st.link);
        hops.push(Hop {
            index: hops.len() + 1,
            node: c,
            link: st.link,
            next,
            kind: st.kind,
            case: st.case,
            phase: Phase::Three,
        });
        c = next;
    }
    assign_phases(&mut hops);
    Ok(RouteTrace {
        source: *s,
        target: *t,
        scheme,
        length: hops.len(),
        hops,
    })
}

/// Phase boundaries as a pair `(phase_one_len, phase_two_len)`.
///
/// Phase One is the run of leading settling moves (empty unless the first
/// move settles); Phase Two runs from there through the final crossing move,
/// and is empty when the route has none.
pub fn phase_bounds(hops: &[Hop]) -> (usize, usize) {
    let one = hops
        .iter()
        .take_while(|h| h.kind == MoveKind::Settling)
        .count();
    let two = hops[one..]
        .iter()
        .position(|h| h.kind == MoveKind::FinalCrossing)
        .map_or(0, |at| at + 1);
    (one, two)
}

fn assign_phases(hops: &mut [Hop]) {
    let (one, two) = phase_bounds(hops);
    for (j, h) in hops.iter_mut().enumerate() {
        h.phase = if j < one {
            Phase::One
        } else if j < one + two {
            Phase::Two
        } else {
            Phase::Three
        };
    }
}

/// `|X| + max(6, 4·max(|ULL|, |URR|) + χ + 4)`.
pub fn theorem2_bound(s: &Perm, t: &Perm) -> Result<usize> {
    Ok(theorem2_bound_from_sets(&classify(s, t)?))
}

pub fn theorem2_bound_from_sets(cs: &ClassifiedSets) -> usize {
    let y = 4 * cs.max_same_half() + cs.alternating_count + 4;
    cs.crossed_count + y.max(6)
}

/// Directed length bound in terms of the undirected distance.
pub fn corollary1_bound(undirected: usize) -> usize {
    4 * undirected + 4
}

/// Diameter upper bound: `2n+2` for odd `n`, `2n+4` for even `n`.
pub fn corollary2_bound(n: usize) -> usize {
    if n % 2 == 1 {
        2 * n + 2
    } else {
        2 * n + 4
    }
}

/// Structural validity of a trace: consecutive hops chain, the route ends at
/// the target, phases are ordered, and for oriented traces every hop follows
/// an outgoing arc. Returns human-readable violations.
pub fn validate_trace(trace: &RouteTrace) -> Vec<String> {
    let mut out = Vec::new();
    let n = trace.source.n();
    let k = HalfBoundary::new(n).k;
    let mut c = trace.source;
    let mut last_phase = Phase::One;
    for h in &trace.hops {
        if h.node != c {
            out.push(format!(
                "hop {} starts at {} but the packet is at {}",
                h.index, h.node, c
            ));
        }
        if h.link < 2 || h.link > n {
            out.push(format!("hop {} uses invalid link {}", h.index, h.link));
            return out;
        }
        if h.next != h.node.swap_front(h.link) {
            out.push(format!("hop {} does not follow link {}", h.index, h.link));
        }
        if let Some(scheme) = trace.scheme {
            if !is_outgoing(h.node.sign(), h.link, scheme, k) {
                out.push(format!(
                    "hop {} uses incoming link {} at {}",
                    h.index, h.link, h.node
                ));
            }
        }
        if h.phase < last_phase {
            out.push(format!(
                "hop {} goes back to phase {}",
                h.index,
                h.phase.number()
            ));
        }
        last_phase = h.phase;
        c = h.next;
    }
    if c != trace.target {
        out.push(format!("route ends at {c}, not {}", trace.target));
    }
    if trace.length != trace.hops.len() {
        out.push(format!(
            "length {} disagrees with {} hops",
            trace.length,
            trace.hops.len()
        ));
    }
    if trace.scheme.is_some() && trace.hops.len() > hop_cap(n) {
        out.push(format!(
            "{} hops exceed the cap {}",
            trace.hops.len(),
            hop_cap(n)
        ));
    }
    out
}

/// `|ULL| + |URR|` must never grow along an oriented route.
pub fn check_monotone_uncrossed(trace: &RouteTrace) -> Vec<String> {
    let mut out = Vec::new();
    let mut prev = None;
    for (j, node) in trace.nodes().iter().enumerate() {
        let now = classify(node, &trace.target)
            .expect("same order")
            .uncrossed_count();
        if let Some(p) = prev {
            if now > p {
                out.push(format!("|ULL|+|URR| rises from {p} to {now} after hop {j}"));
            }
        }
        prev = Some(now);
    }
    out
}

/// Outcome of checking one oriented trace against the phase-by-phase
/// analysis.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct PhaseReport {
    pub phase_one: usize,
    pub phase_two: usize,
    pub phase_three: usize,
    pub violations: Vec<String>,
}

impl PhaseReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the per-phase claims on a trace, with `α` the node after Phase One,
/// `γ` the node after Phase Two and `H` the sending half of `α`:
///
/// * Phase One: `|X(α)| = |X(s)| - (len₁ - 1)` (no change when Phase One is
///   empty) and `χ(α) ≤ χ(s)`;
/// * Phase Two, when non-empty: if `ULL(α)`, `URR(α)` and the values of `α`'s
///   sending half bound for the other half are all empty then `χ(γ) ≤ 1`,
///   `len₂ ≤ 2`, `|X(γ)| ≤ |X(α)| + 2`; otherwise, with
///   `w = max(|ULL(α)|, |URR(α)|)`, `χ(γ) ≤ χ(α) + 1`, `len₂ ≤ 2w + 1` and
///   `|X(γ)| ≤ |X(α)| + 2w`;
/// * Phase Three: `len₃ = |X(γ)| + c(γ)`;
/// * Phase One holds only settling moves and Phase Two only crossing moves
///   after its first; no crossing move happens outside Phase Two.
pub fn check_phase_propositions(trace: &RouteTrace) -> PhaseReport {
    let (one, two) = phase_bounds(&trace.hops);
    let mut rep = PhaseReport {
        phase_one: one,
        phase_two: two,
        phase_three: trace.hops.len() - one - two,
        violations: Vec::new(),
    };
    if trace.hops.is_empty() {
        return rep;
    }
    let nodes = trace.nodes();
    let t = &trace.target;
    let sets = |p: &Perm| classify(p, t).expect("trace nodes share one order");
    let s_sets = sets(&nodes[0]);
    let alpha = nodes[one];
    let a_sets = sets(&alpha);
    let gamma = nodes[one + two];
    let g_sets = sets(&gamma);
    let v = &mut rep.violations;

    // Phase One
    let expected_x = s_sets.crossed_count - one.saturating_sub(1);
    if one > 0 && a_sets.crossed_count != expected_x {
        v.push(format!(
            "phase one: |X(alpha)| = {}, expected {}",
            a_sets.crossed_count, expected_x
        ));
    }
    if a_sets.alternating_count > s_sets.alternating_count {
        v.push(format!(
            "phase one: chi(alpha) = {} > chi(s) = {}",
            a_sets.alternating_count, s_sets.alternating_count
        ));
    }

    // Phase Two
    if two > 0 {
        let home = Half::outgoing_for(alpha.sign());
        let sparse = a_sets.uncrossed_count() == 0 && a_sets.leaving(home).is_empty();
        let w = a_sets.max_same_half();
        let (chi_cap, len_cap, x_cap) = if sparse {
            (1, 2, a_sets.crossed_count + 2)
        } else {
            (
                a_sets.alternating_count + 1,
                2 * w + 1,
                a_sets.crossed_count + 2 * w,
            )
        };
        if g_sets.alternating_count > chi_cap {
            v.push(format!(
                "phase two: chi(gamma) = {} > {chi_cap}",
                g_sets.alternating_count
            ));
        }
        if two > len_cap {
            v.push(format!("phase two: {two} moves > {len_cap}"));
        }
        if g_sets.crossed_count > x_cap {
            v.push(format!(
                "phase two: |X(gamma)| = {} > {x_cap}",
                g_sets.crossed_count
            ));
        }
    }

    // Phase Three
    let three_expected = g_sets.crossed_count + g_sets.nonsingleton_cycles;
    if rep.phase_three != three_expected {
        v.push(format!(
            "phase three: {} moves, expected |X(gamma)| + c(gamma) = {three_expected}",
            rep.phase_three
        ));
    }

    // Move kinds per phase
    for h in &trace.hops[..one] {
        if h.kind != MoveKind::Settling {
            v.push(format!("hop {} in phase one is {}", h.index, h.kind));
        }
    }
    for h in trace.hops[one..one + two].iter().skip(1) {
        if !h.kind.is_crossing() {
            v.push(format!("hop {} in phase two is {}", h.index, h.kind));
        }
    }
    for h in &trace.hops[one + two..] {
        if h.kind.is_crossing() {
            v.push(format!("hop {} in phase three is {}", h.index, h.kind));
        }
    }
    rep
}
