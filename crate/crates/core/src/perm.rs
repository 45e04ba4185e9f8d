//! Permutations in one-line notation with 1-based positions and values.
//!
//! A [`Perm`] is the address of a star-graph node. Every edge of the star
//! graph swaps the value at position 1 with the value at some position
//! `i >= 2`, so most of the routing machinery reduces to [`Perm::apply_generator`]
//! and the cycle structure of one permutation relative to another.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported order. `12!` still fits comfortably in a `u64` rank.
pub const MAX_ORDER: usize = 12;
/// Smallest order for which the star graph is 2-edge-connected.
pub const MIN_ORDER: usize = 3;

/// Parity of a permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_count(count: usize) -> Self {
        if count.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn is_even(self) -> bool {
        self == Parity::Even
    }
}

/// Addition in Z/2, so that `sign(a ∘ b) = sign(a) + sign(b)`.
impl std::ops::Add for Parity {
    type Output = Parity;

    fn add(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// A permutation of `{1..n}` stored inline; `Copy` so that sweeps over
/// millions of nodes never allocate.
///
/// Entries past `n` are always zero, which keeps the derived `Eq`/`Hash`
/// consistent.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    n: u8,
    vals: [u8; MAX_ORDER],
}

impl Perm {
    pub fn identity(n: usize) -> Result<Self> {
        check_order(n)?;
        let mut vals = [0u8; MAX_ORDER];
        for (i, v) in vals.iter_mut().take(n).enumerate() {
            *v = (i + 1) as u8;
        }
        Ok(Perm { n: n as u8, vals })
    }

    /// Builds a permutation from its one-line values, validating that they
    /// form a bijection on `{1..n}`.
    pub fn from_values(values: &[usize]) -> Result<Self> {
        let n = values.len();
        check_order(n)?;
        let mut seen = 0u32;
        let mut vals = [0u8; MAX_ORDER];
        for (i, &v) in values.iter().enumerate() {
            if v == 0 || v > n {
                return Err(Error::Parse(format!("value {v} out of range 1..={n}")));
            }
            if seen & (1 << v) != 0 {
                return Err(Error::Parse(format!("duplicate value {v}")));
            }
            seen |= 1 << v;
            vals[i] = v as u8;
        }
        Ok(Perm { n: n as u8, vals })
    }

    /// Builds a permutation from disjoint cycles; values not mentioned are
    /// fixed. The cycle `(a0, a1, .., ak)` maps `a_i` to `a_{i+1}`.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        check_order(n)?;
        let mut vals: Vec<usize> = (1..=n).collect();
        let mut seen = 0u32;
        for cycle in cycles {
            for (j, &a) in cycle.iter().enumerate() {
                if a == 0 || a > n {
                    return Err(Error::Parse(format!(
                        "cycle value {a} out of range 1..={n}"
                    )));
                }
                if seen & (1 << a) != 0 {
                    return Err(Error::Parse(format!("value {a} appears in two cycles")));
                }
                seen |= 1 << a;
                vals[a - 1] = cycle[(j + 1) % cycle.len()];
            }
        }
        Perm::from_values(&vals)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Value at 1-based position `pos`.
    #[inline]
    pub fn get(&self, pos: usize) -> usize {
        debug_assert!(pos >= 1 && pos <= self.n());
        self.vals[pos - 1] as usize
    }

    /// One-line values as a slice (index 0 is position 1).
    pub fn values(&self) -> &[u8] {
        &self.vals[..self.n()]
    }

    /// 1-based position currently holding `value`.
    pub fn position_of(&self, value: usize) -> usize {
        self.values()
            .iter()
            .position(|&v| v as usize == value)
            .map(|i| i + 1)
            .expect("value within 1..=n")
    }

    pub fn is_identity(&self) -> bool {
        self.values()
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize == i + 1)
    }

    /// `result(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        same_order(self, other)?;
        let mut vals = [0u8; MAX_ORDER];
        for (i, v) in vals.iter_mut().take(self.n()).enumerate() {
            *v = self.vals[other.vals[i] as usize - 1];
        }
        Ok(Perm { n: self.n, vals })
    }

    pub fn inverse(&self) -> Perm {
        let mut vals = [0u8; MAX_ORDER];
        for (i, &v) in self.values().iter().enumerate() {
            vals[v as usize - 1] = (i + 1) as u8;
        }
        Perm { n: self.n, vals }
    }

    pub fn inversion_count(&self) -> usize {
        let v = self.values();
        let mut count = 0;
        for x in 0..v.len() {
            for y in x + 1..v.len() {
                if v[x] > v[y] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Sign as the parity of the inversion count.
    pub fn sign(&self) -> Parity {
        Parity::from_count(self.inversion_count())
    }

    /// Sign as the parity of the number of even-length cycles.
    pub fn sign_by_cycles(&self) -> Parity {
        let even_cycles = self
            .cycles()
            .cycles
            .iter()
            .filter(|c| c.len() % 2 == 0)
            .count();
        Parity::from_count(even_cycles)
    }

    /// Cycle decomposition of the map `i -> self(i)`.
    pub fn cycles(&self) -> CycleDecomposition {
        let n = self.n();
        let mut visited = [false; MAX_ORDER + 1];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if visited[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !visited[x] {
                visited[x] = true;
                cycle.push(x);
                x = self.get(x);
            }
            cycles.push(cycle);
        }
        CycleDecomposition::from_cycles(n, cycles)
    }

    /// Swaps the values at position 1 and position `i`. This is right
    /// multiplication by the generator `g_i`, i.e. one hop along link `i`.
    pub fn apply_generator(&self, i: usize) -> Result<Perm> {
        if i < 2 || i > self.n() {
            return Err(Error::LinkOutOfRange {
                link: i,
                n: self.n(),
            });
        }
        Ok(self.swap_front(i))
    }

    /// Unchecked variant of [`Perm::apply_generator`] for hot loops.
    #[inline]
    pub fn swap_front(&self, i: usize) -> Perm {
        let mut out = *self;
        out.vals.swap(0, i - 1);
        out
    }
}

/// Cycles of `s` relative to `t`, i.e. the cycles of `s ∘ t⁻¹`.
///
/// The relative map sends value `v` to the value currently sitting at `v`'s
/// target position, so its fixed points are exactly the settled values.
pub fn relative_cycles(s: &Perm, t: &Perm) -> Result<CycleDecomposition> {
    Ok(relative_map(s, t)?.cycles())
}

/// The relative permutation `s ∘ t⁻¹` over values.
pub fn relative_map(s: &Perm, t: &Perm) -> Result<Perm> {
    s.compose(&t.inverse())
}

/// Disjoint-cycle decomposition. Each cycle lists values in map order and is
/// rotated so that its smallest element comes first; cycles are sorted by
/// that first element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleDecomposition {
    pub cycles: Vec<Vec<usize>>,
    pub nonsingleton_count: usize,
    pub fixed_points: Vec<usize>,
    /// `owner[v]` is the index into `cycles` of the cycle containing `v`.
    #[serde(skip)]
    owner: Vec<usize>,
}

impl CycleDecomposition {
    fn from_cycles(n: usize, mut cycles: Vec<Vec<usize>>) -> Self {
        for c in cycles.iter_mut() {
            let min_at = c
                .iter()
                .enumerate()
                .min_by_key(|(_, &v)| v)
                .map(|(i, _)| i)
                .unwrap_or(0);
            c.rotate_left(min_at);
        }
        cycles.sort_by_key(|c| c[0]);
        let mut owner = vec![usize::MAX; n + 1];
        for (idx, c) in cycles.iter().enumerate() {
            for &v in c {
                owner[v] = idx;
            }
        }
        let nonsingleton_count = cycles.iter().filter(|c| c.len() >= 2).count();
        let fixed_points = cycles
            .iter()
            .filter(|c| c.len() == 1)
            .map(|c| c[0])
            .collect();
        CycleDecomposition {
            cycles,
            nonsingleton_count,
            fixed_points,
            owner,
        }
    }

    pub fn cycle_index_of(&self, value: usize) -> usize {
        self.owner[value]
    }

    pub fn cycle_of(&self, value: usize) -> &[usize] {
        &self.cycles[self.owner[value]]
    }

    pub fn same_cycle(&self, a: usize, b: usize) -> bool {
        self.owner[a] == self.owner[b]
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cycles {
            let parts: Vec<String> = c.iter().map(|v| v.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

fn check_order(n: usize) -> Result<()> {
    if !(MIN_ORDER..=MAX_ORDER).contains(&n) {
        return Err(Error::InvalidOrder(n));
    }
    Ok(())
}

pub(crate) fn same_order(a: &Perm, b: &Perm) -> Result<()> {
    if a.n != b.n {
        return Err(Error::OrderMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    Ok(())
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for &v in self.values() {
                write!(f, "{v}")?;
            }
        } else {
            let parts: Vec<String> = self.values().iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm({self})")
    }
}

impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad value {tok:?} in {s:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|ch| {
                    ch.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad digit {ch:?} in {s:?}")))
                })
                .collect::<Result<_>>()?
        };
        Perm::from_values(&values)
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    // Pointwise oracle: r(i) = p(q(i)), evaluated from the raw strings.
    fn compose_oracle(p: &str, q: &str) -> String {
        let pv: Vec<u32> = p.chars().map(|c| c.to_digit(10).unwrap()).collect();
        let qv: Vec<u32> = q.chars().map(|c| c.to_digit(10).unwrap()).collect();
        qv.iter()
            .map(|&qi| char::from_digit(pv[qi as usize - 1], 10).unwrap())
            .collect()
    }

    #[test]
    fn compose_examples() {
        let id = Perm::identity(5).unwrap();
        assert_eq!(id.compose(&p("23145")).unwrap(), p("23145"));
        assert_eq!(p("21345").compose(&p("21345")).unwrap(), id);
        assert_eq!(compose_oracle("23145", "21345"), "32145");
        assert_eq!(p("23145").compose(&p("21345")).unwrap(), p("32145"));
    }

    #[test]
    fn compose_order_mismatch() {
        let err = p("2134").compose(&p("21345")).unwrap_err();
        assert!(matches!(err, Error::OrderMismatch { left: 4, right: 5 }));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(p("12345").inverse(), p("12345"));
        assert_eq!(p("21345").inverse(), p("21345"));
        assert_eq!(p("23145").inverse(), p("31245"));
        assert!(p("23145").compose(&p("31245")).unwrap().is_identity());
    }

    #[test]
    fn sign_examples() {
        assert_eq!(p("12345").sign(), Parity::Even);
        assert_eq!(p("21345").sign(), Parity::Odd);
        assert_eq!(p("23145").inversion_count(), 2);
        assert_eq!(p("23145").sign(), Parity::Even);
    }

    #[test]
    fn cycle_examples() {
        let id = Perm::identity(5).unwrap().cycles();
        assert_eq!(id.cycles.len(), 5);
        assert_eq!(id.nonsingleton_count, 0);

        let c = p("21345").cycles();
        assert_eq!(c.cycles, vec![vec![1, 2], vec![3], vec![4], vec![5]]);
        assert_eq!(c.nonsingleton_count, 1);
        assert_eq!(c.fixed_points, vec![3, 4, 5]);

        let c = p("23145").cycles();
        assert_eq!(c.cycles, vec![vec![1, 2, 3], vec![4], vec![5]]);
        assert_eq!(c.nonsingleton_count, 1);
        assert_eq!(c.to_string(), "(1 2 3)(4)(5)");
    }

    #[test]
    fn relative_cycle_examples() {
        let s = p("21435");
        assert_eq!(relative_cycles(&s, &s).unwrap().nonsingleton_count, 0);
        let id = Perm::identity(5).unwrap();
        assert_eq!(
            relative_cycles(&p("23145"), &id).unwrap(),
            p("23145").cycles()
        );
        let rel = relative_cycles(&p("21345"), &p("21435")).unwrap();
        assert_eq!(rel.cycles, vec![vec![1], vec![2], vec![3, 4], vec![5]]);
    }

    #[test]
    fn relative_fixed_points_are_settled_values() {
        let s = p("52314");
        let t = p("12354");
        let rel = relative_cycles(&s, &t).unwrap();
        let settled: Vec<usize> = (1..=5)
            .filter(|&i| s.get(i) == t.get(i))
            .map(|i| s.get(i))
            .collect();
        let mut fixed = rel.fixed_points.clone();
        fixed.sort();
        let mut settled = settled;
        settled.sort();
        assert_eq!(fixed, settled);
    }

    #[test]
    fn generator_examples() {
        let id = p("12345");
        assert_eq!(id.apply_generator(2).unwrap(), p("21345"));
        assert_eq!(id.apply_generator(5).unwrap(), p("52341"));
        let q = p("35142");
        assert_eq!(q.apply_generator(4).unwrap().apply_generator(4).unwrap(), q);
        assert!(matches!(
            id.apply_generator(1),
            Err(Error::LinkOutOfRange { .. })
        ));
        assert!(matches!(
            id.apply_generator(6),
            Err(Error::LinkOutOfRange { .. })
        ));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("21345").to_string(), "21345");
        assert_eq!(p("2,1,3,4,5").to_string(), "21345");
        let big = p("2,1,3,4,5,6,7,8,9,10");
        assert_eq!(big.to_string(), "2,1,3,4,5,6,7,8,9,10");
        assert!("12245".parse::<Perm>().is_err());
        assert!("02345".parse::<Perm>().is_err());
        assert!("12346".parse::<Perm>().is_err());
        assert!("12".parse::<Perm>().is_err());
        assert!("1,2,3,4,5,6,7,8,9,10,11,12,13".parse::<Perm>().is_err());
        assert!("1a345".parse::<Perm>().is_err());
    }

    #[test]
    fn from_cycles_expands_cycle_notation() {
        let w = Perm::from_cycles(5, &[vec![2, 3], vec![4, 5]]).unwrap();
        assert_eq!(w, p("13254"));
        let w = Perm::from_cycles(5, &[vec![1, 2, 3]]).unwrap();
        assert_eq!(w, p("23145"));
        assert!(Perm::from_cycles(5, &[vec![1, 2], vec![2, 3]]).is_err());
    }

    #[test]
    fn serde_uses_text_format() {
        let json = serde_json::to_string(&p("21345")).unwrap();
        assert_eq!(json, "\"21345\"");
        let back: Perm = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p("21345"));
    }
}
