//! Verification front end: lower-bound witnesses, pair sweeps that check
//! every routing bound against the BFS oracle, sampled algebraic checks and
//! diameter tables.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::oracle::{
    bfs, diameter, orbit_sources, DiameterMode, DistanceField, Orientation, RankCodec,
};
use crate::perm::{relative_cycles, relative_map, Perm};
use crate::routing::{
    check_monotone_uncrossed, check_phase_propositions, classic_distance, classic_distance_sets,
    classic_route, corollary1_bound, corollary2_bound, hop_cap, oriented_route, theorem2_bound,
    validate_trace, RouteTrace,
};
use crate::topology::{translation_preserves_arc, HalfBoundary, Scheme};

/// Violations kept per check; the total count is always exact.
pub const MAX_RECORDED_VIOLATIONS: usize = 20;

pub const DEFAULT_SAMPLES: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessVariant {
    /// `(1)(2..k)(k+1..n)`: both halves shifted cyclically by one.
    OddDefault,
    /// `(1)(2,3)(4..k)(k+1..n)` for even `n ≥ 8`.
    EvenRefined,
}

impl WitnessVariant {
    pub fn name(self) -> &'static str {
        match self {
            WitnessVariant::OddDefault => "odd-default",
            WitnessVariant::EvenRefined => "even-refined",
        }
    }

    /// The variant used for the lower-bound argument at order `n`.
    pub fn for_order(n: usize) -> Self {
        if n.is_multiple_of(2) && n >= 8 {
            WitnessVariant::EvenRefined
        } else {
            WitnessVariant::OddDefault
        }
    }
}

impl fmt::Display for WitnessVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WitnessVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.replace('_', "-").as_str() {
            "odd-default" | "odd" => Ok(WitnessVariant::OddDefault),
            "even-refined" | "even" => Ok(WitnessVariant::EvenRefined),
            other => Err(Error::Argument(format!(
                "unknown witness variant {other:?}"
            ))),
        }
    }
}

pub fn witness(n: usize, variant: WitnessVariant) -> Result<Perm> {
    if n < 5 {
        return Err(Error::Argument(format!("witnesses need n >= 5, got {n}")));
    }
    let k = HalfBoundary::new(n).k;
    let right: Vec<usize> = (k + 1..=n).collect();
    let cycles = match variant {
        WitnessVariant::OddDefault => vec![(2..=k).collect(), right],
        WitnessVariant::EvenRefined => {
            if n % 2 == 1 || n < 8 {
                return Err(Error::Argument(format!(
                    "the even-refined witness needs even n >= 8, got {n}"
                )));
            }
            vec![vec![2, 3], (4..=k).collect(), right]
        }
    };
    Perm::from_cycles(n, &cycles)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// Oriented routes end at the target using outgoing arcs only.
    RouteValidity,
    Theorem2,
    /// Oriented length at most `4d+4`.
    Cor1,
    /// Oriented length at most `2n+2` (odd `n`) or `2n+4` (even `n`).
    Cor2,
    PhaseProps,
    /// Closed-form undirected distance and classic route length equal BFS.
    Eq1VsBfs,
    /// Set-based distance formula equals the closed form.
    Eq5VsEq1,
    SplitMerge,
    /// `|ULL|+|URR|` never increases along an oriented route.
    Monotone,
    /// Directed BFS distance never exceeds the oriented route length.
    BfsLeRoute,
    /// Even left translations preserve link labels and arc directions.
    EvenTranslation,
}

impl Check {
    pub const ALL: [Check; 11] = [
        Check::RouteValidity,
        Check::Theorem2,
        Check::Cor1,
        Check::Cor2,
        Check::PhaseProps,
        Check::Eq1VsBfs,
        Check::Eq5VsEq1,
        Check::SplitMerge,
        Check::Monotone,
        Check::BfsLeRoute,
        Check::EvenTranslation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::RouteValidity => "route-validity",
            Check::Theorem2 => "theorem2",
            Check::Cor1 => "cor1",
            Check::Cor2 => "cor2",
            Check::PhaseProps => "phase-props",
            Check::Eq1VsBfs => "eq1-vs-bfs",
            Check::Eq5VsEq1 => "eq5-vs-eq1",
            Check::SplitMerge => "split-merge",
            Check::Monotone => "monotone",
            Check::BfsLeRoute => "bfs-le-route",
            Check::EvenTranslation => "even-translation",
        }
    }

    /// Whether the check runs the oriented router, which exists only for the
    /// Fujita scheme.
    pub fn needs_router(self) -> bool {
        matches!(
            self,
            Check::RouteValidity
                | Check::Theorem2
                | Check::Cor1
                | Check::Cor2
                | Check::PhaseProps
                | Check::Monotone
                | Check::BfsLeRoute
        )
    }

    /// Parses a comma-separated list; `all` selects every check that applies
    /// to `scheme`.
    pub fn parse_list(list: &str, scheme: Scheme) -> Result<Vec<Check>> {
        let mut out = Vec::new();
        for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if name == "all" {
                out.extend(
                    Check::ALL
                        .iter()
                        .filter(|c| scheme == Scheme::Fujita || !c.needs_router()),
                );
            } else {
                out.push(name.parse()?);
            }
        }
        let mut seen = Vec::new();
        out.retain(|c| {
            let fresh = !seen.contains(c);
            seen.push(*c);
            fresh
        });
        Ok(out)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

/// Which sources a pair sweep starts from. Targets are always all of `S_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SourceSet {
    All,
    /// `{id, id·g2}`: one source per sign class.
    Orbit,
}

impl SourceSet {
    pub fn default_for(n: usize) -> Self {
        if n <= 6 {
            SourceSet::All
        } else {
            SourceSet::Orbit
        }
    }

    pub fn sources(self, n: usize) -> Result<Vec<Perm>> {
        match self {
            SourceSet::Orbit => Ok(orbit_sources(n)?.to_vec()),
            SourceSet::All => all_perms(n),
        }
    }
}

impl fmt::Display for SourceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SourceSet::All => "all",
            SourceSet::Orbit => "orbit",
        })
    }
}

pub fn all_perms(n: usize) -> Result<Vec<Perm>> {
    let codec = RankCodec::new(n)?;
    (0..codec.capacity()).map(|r| codec.unrank(r)).collect()
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub n: usize,
    pub scheme: Scheme,
    pub checks: Vec<Check>,
    pub sources: SourceSet,
    pub samples: usize,
    pub seed: u64,
}

impl VerifyOptions {
    /// Every applicable check, default sources, default sampling.
    pub fn new(n: usize, scheme: Scheme) -> Self {
        VerifyOptions {
            n,
            scheme,
            checks: Check::ALL
                .into_iter()
                .filter(|c| scheme == Scheme::Fujita || !c.needs_router())
                .collect(),
            sources: SourceSet::default_for(n),
            samples: DEFAULT_SAMPLES,
            seed: 0,
        }
    }

    pub fn with_checks(mut self, checks: &[Check]) -> Self {
        self.checks = checks.to_vec();
        self
    }
}

/// One counterexample. For sampled checks `t` is the target and `s` the
/// current node; `observed` and `bound` are check-specific quantities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub s: Perm,
    pub t: Perm,
    pub observed: usize,
    pub bound: usize,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub name: String,
    /// Number of pairs (or samples) examined.
    pub population: u64,
    pub violation_count: u64,
    /// The first violations found, at most `MAX_RECORDED_VIOLATIONS`.
    pub violations: Vec<Violation>,
    pub elapsed_ms: f64,
    /// Largest observed quantity, e.g. the longest route.
    pub max_observed: Option<usize>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub scheme: Scheme,
    pub sources: SourceSet,
    pub checks: Vec<CheckReport>,
    pub overall: bool,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.overall
    }

    pub fn check(&self, name: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn render_text(&self) -> String {
        let mut out = format!(
            "n={} scheme={} sources={}\n",
            self.n, self.scheme, self.sources
        );
        for c in &self.checks {
            out.push_str(&format!(
                "{:<16} {} population={} violations={} max={} elapsed={:.1}ms\n",
                c.name,
                if c.passed() { "PASS" } else { "FAIL" },
                c.population,
                c.violation_count,
                c.max_observed.map_or("-".to_string(), |m| m.to_string()),
                c.elapsed_ms
            ));
            for v in &c.violations {
                out.push_str(&format!(
                    "  {} -> {} observed={} bound={} {}\n",
                    v.s, v.t, v.observed, v.bound, v.detail
                ));
            }
        }
        out.push_str(if self.overall {
            "overall PASS\n"
        } else {
            "overall FAIL\n"
        });
        out
    }

    pub fn render_csv(&self) -> String {
        let mut out = String::from("check,population,violations,max_observed,elapsed_ms,pass\n");
        for c in &self.checks {
            out.push_str(&format!(
                "{},{},{},{},{:.1},{}\n",
                c.name,
                c.population,
                c.violation_count,
                c.max_observed.map_or(String::new(), |m| m.to_string()),
                c.elapsed_ms,
                c.passed()
            ));
        }
        out
    }
}

#[derive(Debug, Default)]
struct Tally {
    population: u64,
    count: u64,
    violations: Vec<Violation>,
    max_observed: Option<usize>,
}

impl Tally {
    fn observe(&mut self, value: usize) {
        self.max_observed = Some(self.max_observed.map_or(value, |m| m.max(value)));
    }

    fn fail(&mut self, v: Violation) {
        self.count += 1;
        if self.violations.len() < MAX_RECORDED_VIOLATIONS {
            self.violations.push(v);
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.population += other.population;
        self.count += other.count;
        for v in other.violations {
            if self.violations.len() >= MAX_RECORDED_VIOLATIONS {
                break;
            }
            self.violations.push(v);
        }
        if let Some(m) = other.max_observed {
            self.observe(m);
        }
        self
    }

    fn into_report(self, check: Check, started: Instant) -> CheckReport {
        CheckReport {
            name: check.name().to_string(),
            population: self.population,
            violation_count: self.count,
            violations: self.violations,
            elapsed_ms: started.elapsed().as_secs_f64() * 1e3,
            max_observed: self.max_observed,
        }
    }
}

/// Per-source state shared by every target of a pair sweep.
struct SourceCtx {
    s: Perm,
    undirected: Option<DistanceField>,
    directed: Option<DistanceField>,
}

pub fn verify(opts: &VerifyOptions) -> Result<VerificationReport> {
    RankCodec::new(opts.n)?;
    for &check in &opts.checks {
        if check.needs_router() && opts.scheme != Scheme::Fujita {
            return Err(Error::UnsupportedScheme(format!(
                "{} (check {check})",
                opts.scheme
            )));
        }
    }
    let sources = opts.sources.sources(opts.n)?;
    let targets = all_perms(opts.n)?;
    let mut checks = Vec::with_capacity(opts.checks.len());
    for &check in &opts.checks {
        let started = Instant::now();
        let tally = match check {
            Check::SplitMerge => split_merge_tally(opts.n, opts.samples, opts.seed)?,
            Check::EvenTranslation => {
                translation_tally(opts.n, opts.scheme, opts.samples, opts.seed)?
            }
            _ => pair_sweep(check, opts.scheme, &sources, &targets)?,
        };
        checks.push(tally.into_report(check, started));
    }
    let overall = checks.iter().all(CheckReport::passed);
    Ok(VerificationReport {
        n: opts.n,
        scheme: opts.scheme,
        sources: opts.sources,
        checks,
        overall,
    })
}

fn pair_sweep(check: Check, scheme: Scheme, sources: &[Perm], targets: &[Perm]) -> Result<Tally> {
    let need_undirected = matches!(check, Check::Cor1 | Check::Eq1VsBfs);
    let need_directed = check == Check::BfsLeRoute;
    sources
        .par_iter()
        .map(|s| {
            let ctx = SourceCtx {
                s: *s,
                undirected: need_undirected
                    .then(|| bfs(s, Orientation::Undirected))
                    .transpose()?,
                directed: need_directed
                    .then(|| bfs(s, Orientation::Directed(scheme)))
                    .transpose()?,
            };
            let mut tally = Tally::default();
            for t in targets {
                tally.population += 1;
                check_pair(check, scheme, &ctx, t, &mut tally)?;
            }
            Ok(tally)
        })
        .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))
}

fn check_pair(
    check: Check,
    scheme: Scheme,
    ctx: &SourceCtx,
    t: &Perm,
    tally: &mut Tally,
) -> Result<()> {
    let s = &ctx.s;
    let n = s.n();
    let violation = |observed: usize, bound: usize, detail: String| Violation {
        s: *s,
        t: *t,
        observed,
        bound,
        detail,
    };
    let bfs_distance = |field: &Option<DistanceField>| {
        field
            .as_ref()
            .and_then(|f| f.get(t))
            .expect("strong orientations leave every vertex reachable")
    };

    match check {
        Check::Eq1VsBfs => {
            let d = bfs_distance(&ctx.undirected);
            let eq1 = classic_distance(s, t)?;
            let walked = classic_route(s, t)?.length;
            tally.observe(d);
            if eq1 != d || walked != d {
                tally.fail(violation(
                    eq1,
                    d,
                    format!("closed form {eq1}, classic route {walked}, bfs {d}"),
                ));
            }
        }
        Check::Eq5VsEq1 => {
            let eq1 = classic_distance(s, t)?;
            let eq5 = classic_distance_sets(s, t)?;
            tally.observe(eq5);
            if eq1 != eq5 {
                tally.fail(violation(
                    eq5,
                    eq1,
                    "set formula disagrees with closed form".into(),
                ));
            }
        }
        Check::SplitMerge | Check::EvenTranslation => {
            unreachable!("sampled checks do not sweep pairs")
        }
        _ => {
            let trace = match oriented_route(s, t, scheme) {
                Ok(trace) => trace,
                Err(e) => {
                    tally.fail(violation(0, hop_cap(n), format!("router error: {e}")));
                    return Ok(());
                }
            };
            let len = trace.length;
            tally.observe(len);
            let (bound, detail) = match check {
                Check::RouteValidity => (hop_cap(n), validate_trace(&trace).into_iter().next()),
                Check::Theorem2 => exceeds(len, theorem2_bound(s, t)?),
                Check::Cor1 => exceeds(len, corollary1_bound(bfs_distance(&ctx.undirected))),
                Check::Cor2 => exceeds(len, corollary2_bound(n)),
                Check::BfsLeRoute => {
                    let d = bfs_distance(&ctx.directed);
                    (
                        len,
                        (d > len).then(|| format!("bfs distance {d} exceeds route length")),
                    )
                }
                Check::Monotone => (0, check_monotone_uncrossed(&trace).into_iter().next()),
                Check::PhaseProps => phase_detail(&trace),
                _ => unreachable!("handled above"),
            };
            if let Some(detail) = detail {
                tally.fail(violation(len, bound, detail));
            }
        }
    }
    Ok(())
}

fn exceeds(len: usize, bound: usize) -> (usize, Option<String>) {
    (
        bound,
        (len > bound).then(|| format!("length {len} exceeds {bound}")),
    )
}

fn phase_detail(trace: &RouteTrace) -> (usize, Option<String>) {
    let rep = check_phase_propositions(trace);
    let detail = (!rep.passed()).then(|| {
        format!(
            "phases {}/{}/{}: {}",
            rep.phase_one,
            rep.phase_two,
            rep.phase_three,
            rep.violations.join("; ")
        )
    });
    (0, detail)
}

pub fn random_perm(n: usize, rng: &mut impl Rng) -> Result<Perm> {
    let mut vals: Vec<usize> = (1..=n).collect();
    vals.shuffle(rng);
    Perm::from_values(&vals)
}

/// Cycle list of `c ∘ t⁻¹` after swapping positions 1 and `i` of `c`,
/// predicted by splicing: if `x = c(1)` and `w = c(i)` share a cycle it is
/// cut in front of `w`, otherwise the cycles of `x` and `w` are concatenated.
/// Cycles are returned normalized (smallest value first, sorted).
pub fn predicted_cycles_after_swap(c: &Perm, t: &Perm, i: usize) -> Result<Vec<Vec<usize>>> {
    let sigma = relative_map(c, t)?;
    let n = c.n();
    let x = c.get(1);
    let w = c.get(i);
    let orbit = |start: usize| {
        let mut cycle = vec![start];
        let mut v = sigma.get(start);
        while v != start {
            cycle.push(v);
            v = sigma.get(v);
        }
        cycle
    };
    let mut done = vec![false; n + 1];
    let mut out = Vec::new();
    let x_cycle = orbit(x);
    if let Some(cut) = x_cycle.iter().position(|&v| v == w) {
        out.push(x_cycle[..cut].to_vec());
        out.push(x_cycle[cut..].to_vec());
    } else {
        let mut merged = x_cycle.clone();
        merged.extend(orbit(w));
        out.push(merged);
    }
    for cycle in &out {
        for &v in cycle {
            done[v] = true;
        }
    }
    for v in 1..=n {
        if !done[v] {
            let cycle = orbit(v);
            for &u in &cycle {
                done[u] = true;
            }
            out.push(cycle);
        }
    }
    for cycle in out.iter_mut() {
        let min_at = (0..cycle.len()).min_by_key(|&j| cycle[j]).unwrap_or(0);
        cycle.rotate_left(min_at);
    }
    out.sort_by_key(|cycle| cycle[0]);
    Ok(out)
}

/// Whether the swap along link `i` changes the relative cycles of `c`
/// exactly as the split/merge law predicts.
pub fn split_merge_holds(c: &Perm, t: &Perm, i: usize) -> Result<bool> {
    let predicted = predicted_cycles_after_swap(c, t, i)?;
    let actual = relative_cycles(&c.apply_generator(i)?, t)?;
    let before = relative_cycles(c, t)?.cycles.len();
    let count_ok = if relative_cycles(c, t)?.same_cycle(c.get(1), c.get(i)) {
        actual.cycles.len() == before + 1
    } else {
        actual.cycles.len() + 1 == before
    };
    Ok(count_ok && predicted == actual.cycles)
}

/// Split/merge law over every `(c, t, i)` for `n ≤ 5`, otherwise over
/// `samples` seeded random triples.
fn split_merge_tally(n: usize, samples: usize, seed: u64) -> Result<Tally> {
    let mut tally = Tally::default();
    let record = |c: &Perm, t: &Perm, i: usize, tally: &mut Tally| -> Result<()> {
        tally.population += 1;
        if !split_merge_holds(c, t, i)? {
            tally.fail(Violation {
                s: *c,
                t: *t,
                observed: i,
                bound: 0,
                detail: format!("swap on link {i} breaks the split/merge law"),
            });
        }
        Ok(())
    };
    if n <= 5 {
        let all = all_perms(n)?;
        for c in &all {
            for t in &all {
                for i in 2..=n {
                    record(c, t, i, &mut tally)?;
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let c = random_perm(n, &mut rng)?;
            let t = random_perm(n, &mut rng)?;
            let i = rng.gen_range(2..=n);
            record(&c, &t, i, &mut tally)?;
        }
    }
    Ok(tally)
}

/// Samples `(h, u, link)` with `h` even and checks that `u ↦ h·u` keeps the
/// arc along `link` with its direction.
fn translation_tally(n: usize, scheme: Scheme, samples: usize, seed: u64) -> Result<Tally> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally::default();
    for _ in 0..samples {
        let mut h = random_perm(n, &mut rng)?;
        if !h.sign().is_even() {
            h = h.swap_front(2);
        }
        let u = random_perm(n, &mut rng)?;
        let link = rng.gen_range(2..=n);
        tally.population += 1;
        if !translation_preserves_arc(&h, &u, link, scheme)? {
            tally.fail(Violation {
                s: u,
                t: h,
                observed: link,
                bound: 0,
                detail: format!("translation by {h} moves the arc of {u} on link {link}"),
            });
        }
    }
    Ok(tally)
}

/// Diameter lower bound at order `n`: `2n−1`, raised to `2n` from `n = 7`.
/// `None` below `n = 5`, where the bound is not claimed.
pub fn lower_bound(n: usize) -> Option<usize> {
    match n {
        0..=4 => None,
        5 | 6 => Some(2 * n - 1),
        _ => Some(2 * n),
    }
}

/// Diameter upper bound for the Fujita orientation; `None` below `n = 5`.
pub fn upper_bound(n: usize) -> Option<usize> {
    (n >= 5).then(|| corollary2_bound(n))
}

pub fn undirected_diameter_formula(n: usize) -> usize {
    3 * (n - 1) / 2
}

/// Default diameter mode for tables: exhaustive through `n = 7`, orbit beyond.
pub fn default_mode(n: usize) -> DiameterMode {
    if n <= 7 {
        DiameterMode::Exhaustive
    } else {
        DiameterMode::Orbit
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiameterTableRow {
    pub n: usize,
    pub undirected: usize,
    pub fujita: usize,
    pub day_tripathi: usize,
    pub lower: Option<usize>,
    pub upper: Option<usize>,
    pub mode: DiameterMode,
}

impl DiameterTableRow {
    /// Undirected diameter matches the formula and the Fujita diameter lies
    /// within the bound columns that apply.
    pub fn consistent(&self) -> bool {
        self.undirected == undirected_diameter_formula(self.n)
            && self.lower.is_none_or(|lo| self.fujita >= lo)
            && self.upper.is_none_or(|hi| self.fujita <= hi)
    }
}

pub fn table_row(n: usize, mode: DiameterMode) -> Result<DiameterTableRow> {
    let undirected = diameter(n, Orientation::Undirected, mode)?.value;
    let fujita = diameter(n, Orientation::Directed(Scheme::Fujita), mode)?.value;
    let day_tripathi = diameter(n, Orientation::Directed(Scheme::DayTripathi), mode)?.value;
    Ok(DiameterTableRow {
        n,
        undirected,
        fujita,
        day_tripathi,
        lower: lower_bound(n),
        upper: upper_bound(n),
        mode,
    })
}

/// One row per order; `mode` overrides the per-order default.
pub fn table(
    range: RangeInclusive<usize>,
    mode: Option<DiameterMode>,
) -> Result<Vec<DiameterTableRow>> {
    range
        .map(|n| table_row(n, mode.unwrap_or_else(|| default_mode(n))))
        .collect()
}

pub const TABLE_CSV_HEADER: &str = "n,undirected,fujita,daytripathi,lower,upper,mode";

pub fn render_table_csv(rows: &[DiameterTableRow]) -> String {
    let opt = |v: Option<usize>| v.map_or(String::new(), |v| v.to_string());
    let mut out = format!("{TABLE_CSV_HEADER}\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.n,
            r.undirected,
            r.fujita,
            r.day_tripathi,
            opt(r.lower),
            opt(r.upper),
            r.mode
        ));
    }
    out
}

pub fn render_table_text(rows: &[DiameterTableRow]) -> String {
    let opt = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
    let mut out = format!(
        "{:>2} {:>10} {:>6} {:>12} {:>5} {:>5}  {}\n",
        "n", "undirected", "fujita", "day-tripathi", "lower", "upper", "mode"
    );
    for r in rows {
        out.push_str(&format!(
            "{:>2} {:>10} {:>6} {:>12} {:>5} {:>5}  {}\n",
            r.n,
            r.undirected,
            r.fujita,
            r.day_tripathi,
            opt(r.lower),
            opt(r.upper),
            r.mode
        ));
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct LowerBoundReport {
    pub n: usize,
    pub variant: WitnessVariant,
    pub witness: Perm,
    /// Directed Fujita distance from the witness to the identity.
    pub witness_distance: usize,
    pub diameter: usize,
    pub mode: DiameterMode,
    /// `2n−1`, or `2n` for `n ≥ 7`.
    pub required: usize,
    /// `false` at `n = 5`, where only the measurement is reported.
    pub asserted: bool,
    pub holds: bool,
    /// Whether the diameter reaches `2n`.
    pub reaches_2n: bool,
}

impl LowerBoundReport {
    pub fn passed(&self) -> bool {
        !self.asserted || self.holds
    }

    pub fn render_text(&self) -> String {
        format!(
            "n={} witness={} ({}) witness_distance={} diameter={} required>={} holds={} reaches_2n={}{}",
            self.n,
            self.witness,
            self.variant,
            self.witness_distance,
            self.diameter,
            self.required,
            self.holds,
            self.reaches_2n,
            if self.asserted { "" } else { " (informational)" }
        )
    }
}

/// Directed Fujita distance from the lower-bound witness to the identity,
/// and the orbit-mode diameter compared with the lower bound.
pub fn lower_bound_check(n: usize) -> Result<LowerBoundReport> {
    if !(5..=8).contains(&n) {
        return Err(Error::Argument(format!(
            "lower-bound checks cover n in 5..=8, got {n}"
        )));
    }
    let orientation = Orientation::Directed(Scheme::Fujita);
    let variant = WitnessVariant::for_order(n);
    let w = witness(n, variant)?;
    let witness_distance = bfs(&w, orientation)?
        .get(&Perm::identity(n)?)
        .expect("strong orientation");
    let mode = DiameterMode::Orbit;
    let diam = diameter(n, orientation, mode)?.value;
    let required = if n >= 7 { 2 * n } else { 2 * n - 1 };
    Ok(LowerBoundReport {
        n,
        variant,
        witness: w,
        witness_distance,
        diameter: diam,
        mode,
        required,
        asserted: n >= 6,
        holds: diam >= required,
        reaches_2n: diam >= 2 * n,
    })
}
