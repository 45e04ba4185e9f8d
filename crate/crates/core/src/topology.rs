//! The n-star graph and its two strong orientations.
//!
//! Adjacency is never materialized: the neighbour along link `i` is always
//! `u.swap_front(i)`, and the arc direction follows from the sign of `u` and
//! the link label alone.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{Parity, Perm};

/// Arc-direction rule for the unidirectional star graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scheme {
    /// Even nodes send on links `2..=k` and receive on `k+1..=n`; odd nodes
    /// the reverse.
    Fujita,
    /// Even nodes send on even links, odd nodes on odd links.
    DayTripathi,
}

impl Scheme {
    pub const ALL: [Scheme; 2] = [Scheme::Fujita, Scheme::DayTripathi];

    pub fn name(self) -> &'static str {
        match self {
            Scheme::Fujita => "fujita",
            Scheme::DayTripathi => "day-tripathi",
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "fujita" => Ok(Scheme::Fujita),
            "day-tripathi" | "daytripathi" | "day_tripathi" => Ok(Scheme::DayTripathi),
            other => Err(Error::Argument(format!("unknown scheme {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Outgoing,
    Incoming,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Outgoing => "out",
            Direction::Incoming => "in",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Half {
    Left,
    Right,
}

impl Half {
    pub fn other(self) -> Half {
        match self {
            Half::Left => Half::Right,
            Half::Right => Half::Left,
        }
    }

    /// The half an even node sends on is the left one; odd nodes use the right.
    pub fn outgoing_for(parity: Parity) -> Half {
        match parity {
            Parity::Even => Half::Left,
            Parity::Odd => Half::Right,
        }
    }
}

/// Split of positions `2..=n` into a left half `2..=k` and a right half
/// `k+1..=n` with `k = ceil((n-1)/2) + 1`. Position 1 is in neither half.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HalfBoundary {
    pub n: usize,
    pub k: usize,
}

impl HalfBoundary {
    pub fn new(n: usize) -> Self {
        HalfBoundary {
            n,
            k: (n - 1).div_ceil(2) + 1,
        }
    }

    pub fn left_positions(&self) -> RangeInclusive<usize> {
        2..=self.k
    }

    pub fn right_positions(&self) -> RangeInclusive<usize> {
        self.k + 1..=self.n
    }

    pub fn positions(&self, half: Half) -> RangeInclusive<usize> {
        match half {
            Half::Left => self.left_positions(),
            Half::Right => self.right_positions(),
        }
    }

    #[inline]
    pub fn half_of(&self, pos: usize) -> Option<Half> {
        if pos < 2 {
            None
        } else if pos <= self.k {
            Some(Half::Left)
        } else {
            Some(Half::Right)
        }
    }
}

/// Direction of link `link` at a node of the given parity. This is the hot
/// path of every directed BFS; it takes the sign rather than the node.
#[inline]
pub fn is_outgoing(parity: Parity, link: usize, scheme: Scheme, k: usize) -> bool {
    let first_set = match scheme {
        Scheme::Fujita => link <= k,
        Scheme::DayTripathi => link.is_multiple_of(2),
    };
    first_set == parity.is_even()
}

pub fn arc_direction(u: &Perm, link: usize, scheme: Scheme) -> Result<Direction> {
    if link < 2 || link > u.n() {
        return Err(Error::LinkOutOfRange { link, n: u.n() });
    }
    let k = HalfBoundary::new(u.n()).k;
    Ok(if is_outgoing(u.sign(), link, scheme, k) {
        Direction::Outgoing
    } else {
        Direction::Incoming
    })
}

/// All `n-1` neighbours, ordered by link label.
pub fn neighbors(u: &Perm) -> Vec<(usize, Perm)> {
    (2..=u.n()).map(|i| (i, u.swap_front(i))).collect()
}

pub fn out_neighbors(u: &Perm, scheme: Scheme) -> Vec<(usize, Perm)> {
    directed_neighbors(u, scheme, true)
}

pub fn in_neighbors(u: &Perm, scheme: Scheme) -> Vec<(usize, Perm)> {
    directed_neighbors(u, scheme, false)
}

fn directed_neighbors(u: &Perm, scheme: Scheme, outgoing: bool) -> Vec<(usize, Perm)> {
    let k = HalfBoundary::new(u.n()).k;
    let parity = u.sign();
    (2..=u.n())
        .filter(|&i| is_outgoing(parity, i, scheme, k) == outgoing)
        .map(|i| (i, u.swap_front(i)))
        .collect()
}

/// Whether left multiplication by `h` maps the arc of `u` along `link` to an
/// arc along the same link with the same direction.
pub fn translation_preserves_arc(h: &Perm, u: &Perm, link: usize, scheme: Scheme) -> Result<bool> {
    let hu = h.compose(u)?;
    let moved_neighbor = h.compose(&u.apply_generator(link)?)?;
    if hu.apply_generator(link)? != moved_neighbor {
        return Ok(false);
    }
    Ok(arc_direction(u, link, scheme)? == arc_direction(&hu, link, scheme)?)
}
