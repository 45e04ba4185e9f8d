//! Brute-force ground truth: Lehmer-code ranking, BFS distance fields over the
//! undirected and oriented star graphs, eccentricities and exact diameters.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{Perm, MAX_ORDER, MIN_ORDER};
use crate::topology::{is_outgoing, HalfBoundary, Scheme};

/// Largest order a single distance field is built for (10! bytes = 3.6 MB).
pub const MAX_BFS_ORDER: usize = 10;
/// Largest order for an all-sources diameter sweep.
pub const MAX_EXHAUSTIVE_ORDER: usize = 8;

pub const UNREACHABLE: u8 = u8::MAX;

/// Bijection between permutations of order `n` and `0..n!` via the factorial
/// number system (lexicographic rank).
#[derive(Debug, Clone)]
pub struct RankCodec {
    n: usize,
    /// `factorials[i] = i!`
    factorials: [u64; MAX_ORDER + 1],
}

impl RankCodec {
    pub fn new(n: usize) -> Result<Self> {
        if !(MIN_ORDER..=MAX_ORDER).contains(&n) {
            return Err(Error::InvalidOrder(n));
        }
        let mut factorials = [1u64; MAX_ORDER + 1];
        for i in 1..=MAX_ORDER {
            factorials[i] = factorials[i - 1] * i as u64;
        }
        Ok(RankCodec { n, factorials })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn capacity(&self) -> u64 {
        self.factorials[self.n]
    }

    #[inline]
    pub fn rank(&self, p: &Perm) -> u64 {
        debug_assert_eq!(p.n(), self.n);
        let mut used = 0u32;
        let mut r = 0u64;
        for (i, &v) in p.values().iter().enumerate() {
            let below = (1u32 << v) - 2;
            let smaller_unused = (v as u32 - 1) - (used & below).count_ones();
            r += smaller_unused as u64 * self.factorials[self.n - 1 - i];
            used |= 1 << v;
        }
        r
    }

    pub fn unrank(&self, rank: u64) -> Result<Perm> {
        if rank >= self.capacity() {
            return Err(Error::RankOutOfRange {
                rank,
                capacity: self.capacity(),
            });
        }
        Ok(self.unrank_unchecked(rank))
    }

    fn unrank_unchecked(&self, mut rank: u64) -> Perm {
        let mut pool: Vec<usize> = (1..=self.n).collect();
        let mut vals = Vec::with_capacity(self.n);
        for i in 0..self.n {
            let f = self.factorials[self.n - 1 - i];
            let digit = (rank / f) as usize;
            rank %= f;
            vals.push(pool.remove(digit));
        }
        Perm::from_values(&vals).expect("unrank yields a permutation")
    }
}

/// Which graph a search runs on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Orientation {
    Undirected,
    Directed(Scheme),
}

impl Orientation {
    pub fn new(directed: bool, scheme: Scheme) -> Self {
        if directed {
            Orientation::Directed(scheme)
        } else {
            Orientation::Undirected
        }
    }

    pub fn is_directed(self) -> bool {
        matches!(self, Orientation::Directed(_))
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Orientation::Undirected => f.write_str("undirected"),
            Orientation::Directed(s) => write!(f, "directed/{s}"),
        }
    }
}

/// Hop distances from one source to every vertex, indexed by rank.
#[derive(Debug, Clone)]
pub struct DistanceField {
    pub source: Perm,
    pub orientation: Orientation,
    pub dist: Vec<u8>,
    codec: RankCodec,
}

impl DistanceField {
    pub fn codec(&self) -> &RankCodec {
        &self.codec
    }

    pub fn get(&self, target: &Perm) -> Option<usize> {
        match self.dist[self.codec.rank(target) as usize] {
            UNREACHABLE => None,
            d => Some(d as usize),
        }
    }

    pub fn unreachable_count(&self) -> usize {
        self.dist.iter().filter(|&&d| d == UNREACHABLE).count()
    }

    /// Largest finite distance and the lowest-rank vertex attaining it.
    pub fn farthest(&self) -> (usize, Perm) {
        let mut best = (0u8, 0usize);
        for (r, &d) in self.dist.iter().enumerate() {
            if d != UNREACHABLE && d > best.0 {
                best = (d, r);
            }
        }
        (best.0 as usize, self.codec.unrank_unchecked(best.1 as u64))
    }

    pub fn eccentricity(&self) -> usize {
        self.farthest().0
    }
}

/// Frontier BFS over ranks. Neighbours are generated on the fly; in the
/// directed case the sign of a vertex is the source sign flipped once per
/// level, so it never needs recomputing.
pub fn bfs(source: &Perm, orientation: Orientation) -> Result<DistanceField> {
    let n = source.n();
    if n > MAX_BFS_ORDER {
        return Err(Error::TooLarge {
            n,
            limit: MAX_BFS_ORDER,
            what: "a BFS distance field",
        });
    }
    let codec = RankCodec::new(n)?;
    let k = HalfBoundary::new(n).k;
    let mut dist = vec![UNREACHABLE; codec.capacity() as usize];
    dist[codec.rank(source) as usize] = 0;
    let mut frontier = vec![*source];
    let mut next = Vec::new();
    let mut parity = source.sign();
    let mut level: u8 = 0;
    while !frontier.is_empty() {
        level += 1;
        for u in &frontier {
            for link in 2..=n {
                if let Orientation::Directed(scheme) = orientation {
                    if !is_outgoing(parity, link, scheme, k) {
                        continue;
                    }
                }
                let v = u.swap_front(link);
                let slot = &mut dist[codec.rank(&v) as usize];
                if *slot == UNREACHABLE {
                    *slot = level;
                    next.push(v);
                }
            }
        }
        std::mem::swap(&mut frontier, &mut next);
        next.clear();
        parity = parity.flip();
    }
    Ok(DistanceField {
        source: *source,
        orientation,
        dist,
        codec,
    })
}

pub fn eccentricity(source: &Perm, orientation: Orientation) -> Result<usize> {
    Ok(bfs(source, orientation)?.eccentricity())
}

/// Exact shortest-path length from `s` to `t`; `None` if unreachable.
pub fn distance(s: &Perm, t: &Perm, orientation: Orientation) -> Result<Option<usize>> {
    crate::perm::same_order(s, t)?;
    Ok(bfs(s, orientation)?.get(t))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DiameterMode {
    /// Every vertex as a source.
    Exhaustive,
    /// One even and one odd source; sound because left multiplication by an
    /// even permutation preserves link labels and arc directions.
    Orbit,
}

impl fmt::Display for DiameterMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DiameterMode::Exhaustive => "exhaustive",
            DiameterMode::Orbit => "orbit",
        })
    }
}

impl FromStr for DiameterMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" => Ok(DiameterMode::Exhaustive),
            "orbit" => Ok(DiameterMode::Orbit),
            other => Err(Error::Argument(format!("unknown mode {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diameter {
    pub n: usize,
    pub orientation: Orientation,
    pub mode: DiameterMode,
    pub value: usize,
    pub witness: (Perm, Perm),
    /// Vertices unreachable from some source; zero for a strong orientation.
    pub unreachable: usize,
}

/// The two orbit representatives: the identity and `id · g_2`.
pub fn orbit_sources(n: usize) -> Result<[Perm; 2]> {
    let id = Perm::identity(n)?;
    Ok([id, id.swap_front(2)])
}

pub fn diameter(n: usize, orientation: Orientation, mode: DiameterMode) -> Result<Diameter> {
    let sources: Vec<Perm> = match mode {
        DiameterMode::Orbit => orbit_sources(n)?.to_vec(),
        DiameterMode::Exhaustive => {
            if n > MAX_EXHAUSTIVE_ORDER {
                return Err(Error::TooLarge {
                    n,
                    limit: MAX_EXHAUSTIVE_ORDER,
                    what: "an exhaustive diameter sweep",
                });
            }
            let codec = RankCodec::new(n)?;
            (0..codec.capacity())
                .map(|r| codec.unrank_unchecked(r))
                .collect()
        }
    };
    let per_source: Vec<(usize, Perm, Perm, usize)> = sources
        .par_iter()
        .map(|s| {
            bfs(s, orientation).map(|field| {
                let (d, far) = field.farthest();
                (d, *s, far, field.unreachable_count())
            })
        })
        .collect::<Result<_>>()?;
    // Sources are in rank order, so the first maximum is deterministic.
    let mut best = per_source[0];
    let mut unreachable = 0;
    for entry in &per_source {
        unreachable += entry.3;
        if entry.0 > best.0 {
            best = *entry;
        }
    }
    Ok(Diameter {
        n,
        orientation,
        mode,
        value: best.0,
        witness: (best.1, best.2),
        unreachable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        let codec = RankCodec::new(5).unwrap();
        assert_eq!(codec.rank(&Perm::identity(5).unwrap()), 0);
        assert_eq!(codec.unrank(119).unwrap().to_string(), "54321");
        assert!(matches!(
            codec.unrank(120),
            Err(Error::RankOutOfRange { .. })
        ));
        let codec = RankCodec::new(8).unwrap();
        assert_eq!(codec.rank(&codec.unrank(12345).unwrap()), 12345);
    }

    #[test]
    fn rank_is_a_bijection_n5() {
        let codec = RankCodec::new(5).unwrap();
        let mut seen = [false; 120];
        for r in 0..120 {
            let p = codec.unrank(r).unwrap();
            assert_eq!(codec.rank(&p), r);
            assert!(!seen[r as usize]);
            seen[r as usize] = true;
        }
    }

    #[test]
    fn rank_follows_lexicographic_order() {
        let codec = RankCodec::new(4).unwrap();
        let perms: Vec<String> = (0..24)
            .map(|r| codec.unrank(r).unwrap().to_string())
            .collect();
        let mut sorted = perms.clone();
        sorted.sort();
        assert_eq!(perms, sorted);
    }

    #[test]
    fn undirected_eccentricity_n5() {
        let id = Perm::identity(5).unwrap();
        assert_eq!(eccentricity(&id, Orientation::Undirected).unwrap(), 6);
    }

    #[test]
    fn directed_distance_examples() {
        let id = Perm::identity(5).unwrap();
        let fujita = Orientation::Directed(Scheme::Fujita);
        assert_eq!(distance(&id, &id, fujita).unwrap(), Some(0));
        let d = distance(&"21345".parse().unwrap(), &id, fujita)
            .unwrap()
            .unwrap();
        assert!((1..=5).contains(&d));
    }

    #[test]
    fn field_has_no_sentinel_for_strong_orientations() {
        for n in 3..=6 {
            let id = Perm::identity(n).unwrap();
            for scheme in Scheme::ALL {
                let field = bfs(&id, Orientation::Directed(scheme)).unwrap();
                assert_eq!(field.unreachable_count(), 0, "n={n} {scheme}");
            }
        }
    }

    #[test]
    fn bfs_rejects_large_orders() {
        let p = Perm::identity(11).unwrap();
        assert!(matches!(
            bfs(&p, Orientation::Undirected),
            Err(Error::TooLarge { .. })
        ));
        assert!(matches!(
            diameter(9, Orientation::Undirected, DiameterMode::Exhaustive),
            Err(Error::TooLarge { .. })
        ));
    }
}
