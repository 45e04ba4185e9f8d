//! Partition of values between a current permutation and a target into
//! settled/unsettled and left/right classes, plus the derived counts that
//! drive the oriented router and every bound formula.

use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::perm::{relative_cycles, same_order, CycleDecomposition, Perm};
use crate::topology::{Half, HalfBoundary};

/// Value classes of `c` relative to `t`. All sets are sorted ascending.
///
/// `ull`, `urr`, `ulr` and `url` partition the unsettled values other than
/// `c(1)` and `t(1)`; the first letter after `U` is the half the value sits in
/// now, the second the half it must reach.
#[derive(Debug, Clone, Serialize)]
pub struct ClassifiedSets {
    pub settled: Vec<usize>,
    pub unsettled: Vec<usize>,
    pub ull: Vec<usize>,
    pub urr: Vec<usize>,
    pub ulr: Vec<usize>,
    pub url: Vec<usize>,
    pub sl: Vec<usize>,
    pub sr: Vec<usize>,
    /// `ulr ∪ url`.
    pub crossed: Vec<usize>,
    pub crossed_count: usize,
    pub alternating_count: usize,
    pub nonsingleton_cycles: usize,
    #[serde(skip)]
    pub relative: CycleDecomposition,
}

impl ClassifiedSets {
    /// Number of values not at their target position.
    pub fn mismatched(&self) -> usize {
        self.unsettled.len()
    }

    /// `|ULL| + |URR|`: unsettled values that are in the correct half.
    pub fn uncrossed_count(&self) -> usize {
        self.ull.len() + self.urr.len()
    }

    pub fn max_same_half(&self) -> usize {
        self.ull.len().max(self.urr.len())
    }

    /// Unsettled values currently in `half` and destined for the same half.
    pub fn same_half(&self, half: Half) -> &[usize] {
        match half {
            Half::Left => &self.ull,
            Half::Right => &self.urr,
        }
    }

    /// Unsettled values currently in `half` and destined for the other one.
    pub fn leaving(&self, half: Half) -> &[usize] {
        match half {
            Half::Left => &self.ulr,
            Half::Right => &self.url,
        }
    }

    /// Settled values at positions of `half`.
    pub fn settled_in(&self, half: Half) -> &[usize] {
        match half {
            Half::Left => &self.sl,
            Half::Right => &self.sr,
        }
    }
}

pub fn classify(c: &Perm, t: &Perm) -> Result<ClassifiedSets> {
    same_order(c, t)?;
    let n = c.n();
    let hb = HalfBoundary::new(n);
    let c_inv = c.inverse();
    let t_inv = t.inverse();
    let front = c.get(1);
    let target_front = t.get(1);

    let mut out = ClassifiedSets {
        settled: Vec::new(),
        unsettled: Vec::new(),
        ull: Vec::new(),
        urr: Vec::new(),
        ulr: Vec::new(),
        url: Vec::new(),
        sl: Vec::new(),
        sr: Vec::new(),
        crossed: Vec::new(),
        crossed_count: 0,
        alternating_count: 0,
        nonsingleton_cycles: 0,
        relative: relative_cycles(c, t)?,
    };

    for v in 1..=n {
        let now = c_inv.get(v);
        let dest = t_inv.get(v);
        if now == dest {
            out.settled.push(v);
            match hb.half_of(dest) {
                Some(Half::Left) => out.sl.push(v),
                Some(Half::Right) => out.sr.push(v),
                None => {}
            }
            continue;
        }
        out.unsettled.push(v);
        if v == front || v == target_front {
            continue;
        }
        // Neither position can be 1 here: c(1) and t(1) were skipped.
        match (hb.half_of(now), hb.half_of(dest)) {
            (Some(Half::Left), Some(Half::Left)) => out.ull.push(v),
            (Some(Half::Right), Some(Half::Right)) => out.urr.push(v),
            (Some(Half::Left), Some(Half::Right)) => out.ulr.push(v),
            (Some(Half::Right), Some(Half::Left)) => out.url.push(v),
            _ => unreachable!("position 1 excluded above"),
        }
    }

    out.crossed = out.ulr.iter().chain(out.url.iter()).copied().collect();
    out.crossed.sort_unstable();
    out.crossed_count = out.crossed.len();
    out.nonsingleton_cycles = out.relative.nonsingleton_count;
    out.alternating_count = out
        .relative
        .cycles
        .iter()
        .filter(|cycle| is_alternating(cycle, c))
        .count();
    Ok(out)
}

/// True when the cycle has at least two elements and, walking it cyclically,
/// every consecutive pair of values sits in opposite halves of `c`. A value
/// at position 1 belongs to neither half and breaks alternation.
pub fn is_alternating(cycle: &[usize], c: &Perm) -> bool {
    if cycle.len() < 2 {
        return false;
    }
    let hb = HalfBoundary::new(c.n());
    let halves: Option<Vec<Half>> = cycle
        .iter()
        .map(|&v| hb.half_of(c.position_of(v)))
        .collect();
    let Some(halves) = halves else {
        return false;
    };
    (0..halves.len()).all(|j| halves[j] != halves[(j + 1) % halves.len()])
}

fn write_set(f: &mut fmt::Formatter<'_>, name: &str, set: &[usize]) -> fmt::Result {
    let parts: Vec<String> = set.iter().map(|v| v.to_string()).collect();
    writeln!(f, "{name}={{{}}}", parts.join(","))
}

impl fmt::Display for ClassifiedSets {
    /// Fixed line order: S, SL, SR, ULL, URR, ULR, URL, X, then the counts.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_set(f, "S", &self.settled)?;
        write_set(f, "SL", &self.sl)?;
        write_set(f, "SR", &self.sr)?;
        write_set(f, "ULL", &self.ull)?;
        write_set(f, "URR", &self.urr)?;
        write_set(f, "ULR", &self.ulr)?;
        write_set(f, "URL", &self.url)?;
        write_set(f, "X", &self.crossed)?;
        write!(
            f,
            "chi={} cycles={}",
            self.alternating_count, self.nonsingleton_cycles
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn classify_self_is_all_settled() {
        let t = p("35142");
        let cs = classify(&t, &t).unwrap();
        assert_eq!(cs.settled, vec![1, 2, 3, 4, 5]);
        assert!(cs.unsettled.is_empty());
        assert!(cs.ull.is_empty() && cs.urr.is_empty() && cs.ulr.is_empty() && cs.url.is_empty());
        assert_eq!(cs.crossed_count, 0);
        assert_eq!(cs.alternating_count, 0);
        assert_eq!(cs.nonsingleton_cycles, 0);
    }

    #[test]
    fn classify_single_crossing_pair() {
        let cs = classify(&p("21435"), &p("12345")).unwrap();
        assert_eq!(cs.settled, vec![5]);
        assert_eq!(cs.ulr, vec![4]);
        assert_eq!(cs.url, vec![3]);
        assert!(cs.ull.is_empty() && cs.urr.is_empty());
        assert_eq!(cs.crossed, vec![3, 4]);
        assert_eq!(cs.sr, vec![5]);
        assert!(cs.sl.is_empty());
    }

    #[test]
    fn classify_two_alternating_cycles() {
        let cs = classify(&p("14523"), &p("12345")).unwrap();
        assert_eq!(cs.ulr, vec![4, 5]);
        assert_eq!(cs.url, vec![2, 3]);
        assert!(cs.ull.is_empty() && cs.urr.is_empty());
        assert_eq!(cs.settled, vec![1]);
        // settled front value is in neither SL nor SR
        assert!(cs.sl.is_empty() && cs.sr.is_empty());
        assert_eq!(cs.alternating_count, 2);
        assert_eq!(cs.nonsingleton_cycles, 2);
    }

    #[test]
    fn alternating_examples() {
        let c = p("14523");
        assert!(!is_alternating(&[3], &c));
        assert!(is_alternating(&[4, 2], &c));
        assert!(!is_alternating(&[1, 2], &p("21345")));
        // three-cycles can never alternate
        assert!(!is_alternating(&[2, 4, 3], &c));
    }

    #[test]
    fn display_order() {
        let text = classify(&p("21435"), &p("12345")).unwrap().to_string();
        let keys: Vec<&str> = text.lines().map(|l| l.split('=').next().unwrap()).collect();
        assert_eq!(
            keys,
            vec!["S", "SL", "SR", "ULL", "URR", "ULR", "URL", "X", "chi"]
        );
        assert!(text.ends_with("chi=1 cycles=2"));
    }
}
