//! Squarefree monomials, t-spread predicates, enumeration and shadows.
//!
//! A squarefree monomial is identified with its support. Variables are
//! 1-based: `x_i` is stored in bit `i - 1` of a `u64`, so the ambient ring
//! may have at most 64 variables. Widening the mask type is the extension
//! path if larger rings are ever needed; every routine goes through the
//! accessors below rather than touching the bits directly.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported number of variables.
pub const MAX_VARS: u32 = 64;

/// A squarefree monomial `x_{i_1} ... x_{i_d}`, stored as its support.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct SquarefreeMonomial(u64);

impl SquarefreeMonomial {
    /// The monomial `1`.
    pub const ONE: SquarefreeMonomial = SquarefreeMonomial(0);

    pub fn from_indices<I: IntoIterator<Item = u32>>(indices: I) -> Result<Self> {
        let mut bits = 0u64;
        for i in indices {
            if i == 0 || i > MAX_VARS {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    n: MAX_VARS,
                });
            }
            bits |= 1u64 << (i - 1);
        }
        Ok(SquarefreeMonomial(bits))
    }

    /// The single variable `x_i`.
    pub fn var(i: u32) -> Self {
        assert!((1..=MAX_VARS).contains(&i), "variable index {i} out of range");
        SquarefreeMonomial(1u64 << (i - 1))
    }

    /// Wraps a raw support mask (bit `i - 1` is `x_i`).
    pub const fn from_mask(mask: u64) -> Self {
        SquarefreeMonomial(mask)
    }

    pub const fn mask(self) -> u64 {
        self.0
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    /// Support indices in increasing order.
    pub fn indices(self) -> Indices {
        Indices(self.0)
    }

    /// Largest variable index, `0` for the monomial `1`.
    pub fn max_index(self) -> u32 {
        64 - self.0.leading_zeros()
    }

    pub fn min_index(self) -> u32 {
        if self.0 == 0 {
            0
        } else {
            self.0.trailing_zeros() + 1
        }
    }

    pub fn contains(self, i: u32) -> bool {
        (1..=MAX_VARS).contains(&i) && self.0 & (1u64 << (i - 1)) != 0
    }

    /// `self | other` in the divisibility order.
    pub fn divides(self, other: SquarefreeMonomial) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn lcm_with(self, other: SquarefreeMonomial) -> Self {
        SquarefreeMonomial(self.0 | other.0)
    }

    pub fn is_coprime_to(self, other: SquarefreeMonomial) -> bool {
        self.0 & other.0 == 0
    }

    pub fn with_var(self, i: u32) -> Self {
        self.lcm_with(Self::var(i))
    }

    pub fn without_var(self, i: u32) -> Self {
        SquarefreeMonomial(self.0 & !(1u64 << (i - 1)))
    }

    /// True when every index is at most `n`.
    pub fn fits(self, n: u32) -> bool {
        self.max_index() <= n
    }

    pub fn is_t_spread(self, t: u32) -> bool {
        is_t_spread(self, t)
    }
}

/// Iterator over the support of a monomial, ascending.
#[derive(Clone)]
pub struct Indices(u64);

impl Iterator for Indices {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(i + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Indices {}

impl fmt::Display for SquarefreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, i) in self.indices().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "x{i}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SquarefreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SquarefreeMonomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Self::ONE);
        }
        if s.is_empty() {
            return Err(Error::parse(s, "empty monomial"));
        }
        let mut bits = 0u64;
        for token in s.split('*') {
            let token = token.trim();
            let index = token
                .strip_prefix('x')
                .and_then(|digits| digits.parse::<u32>().ok())
                .ok_or_else(|| Error::parse(token, "expected a variable like x3"))?;
            if index == 0 || index > MAX_VARS {
                return Err(Error::parse(token, "variable index out of range 1..=64"));
            }
            let bit = 1u64 << (index - 1);
            if bits & bit != 0 {
                return Err(Error::parse(token, "repeated variable in a squarefree monomial"));
            }
            bits |= bit;
        }
        Ok(SquarefreeMonomial(bits))
    }
}

impl Serialize for SquarefreeMonomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.indices())
    }
}

impl<'de> Deserialize<'de> for SquarefreeMonomial {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let indices = Vec::<u32>::deserialize(deserializer)?;
        let mut seen = 0u64;
        for &i in &indices {
            if i == 0 || i > MAX_VARS {
                return Err(serde::de::Error::custom(format!(
                    "variable index {i} out of range 1..=64"
                )));
            }
            if seen & (1u64 << (i - 1)) != 0 {
                return Err(serde::de::Error::custom(format!("repeated variable index {i}")));
            }
            seen |= 1u64 << (i - 1);
        }
        Ok(SquarefreeMonomial(seen))
    }
}

/// True iff consecutive support indices differ by at least `t`.
///
/// Monomials of degree at most one are t-spread for every `t`, and `t = 0`
/// accepts everything.
pub fn is_t_spread(m: SquarefreeMonomial, t: u32) -> bool {
    if t <= 1 {
        return true;
    }
    let mut prev: Option<u32> = None;
    for i in m.indices() {
        if let Some(p) = prev {
            if i - p < t {
                return false;
            }
        }
        prev = Some(i);
    }
    true
}

pub fn max_index(m: SquarefreeMonomial) -> u32 {
    m.max_index()
}

/// Least common multiple of a nonempty list: the union of supports.
pub fn lcm(ms: &[SquarefreeMonomial]) -> Result<SquarefreeMonomial> {
    if ms.is_empty() {
        return Err(Error::EmptyLcm);
    }
    Ok(ms.iter().fold(SquarefreeMonomial::ONE, |acc, &m| acc.lcm_with(m)))
}

/// `binom(a, b)` with the convention that it vanishes outside `0 <= b <= a`.
pub fn binomial(a: i64, b: i64) -> u64 {
    if b < 0 || a < 0 || b > a {
        return 0;
    }
    let b = b.min(a - b) as u128;
    let a = a as u128;
    let mut acc: u128 = 1;
    for k in 0..b {
        acc = acc * (a - k) / (k + 1);
    }
    u64::try_from(acc).expect("binomial coefficient overflows u64")
}

/// Number of t-spread monomials of degree `d` in `n` variables.
pub fn count_t_spread(n: u32, d: u32, t: u32) -> u64 {
    let (n, d, t) = (n as i64, d as i64, t as i64);
    binomial(n - (d - 1) * (t - 1), d)
}

/// Maximum degree of a t-spread monomial in `n` variables.
pub fn max_t_spread_degree(n: u32, t: u32) -> u32 {
    assert!(n >= 1 && t >= 1, "max_t_spread_degree needs n, t >= 1");
    (n - 1) / t + 1
}

/// Squarefree lex comparison of monomials of the same degree: the monomial
/// with the smaller index at the first differing position is larger.
pub fn slex_cmp(u: SquarefreeMonomial, v: SquarefreeMonomial) -> Result<Ordering> {
    if u.degree() != v.degree() {
        return Err(Error::DegreeMismatch(u.degree(), v.degree()));
    }
    Ok(slex_cmp_unchecked(u, v))
}

pub(crate) fn slex_cmp_unchecked(u: SquarefreeMonomial, v: SquarefreeMonomial) -> Ordering {
    let diff = u.0 ^ v.0;
    if diff == 0 {
        return Ordering::Equal;
    }
    let low = diff & diff.wrapping_neg();
    if u.0 & low != 0 {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// Canonical order for generator lists: degree ascending, then slex descending.
pub(crate) fn generator_order(u: &SquarefreeMonomial, v: &SquarefreeMonomial) -> Ordering {
    u.degree()
        .cmp(&v.degree())
        .then_with(|| slex_cmp_unchecked(*v, *u))
}

/// A duplicate-free set of squarefree monomials in a fixed ambient ring,
/// kept in canonical order (degree ascending, slex descending).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialSet {
    ambient: u32,
    members: Vec<SquarefreeMonomial>,
}

impl MonomialSet {
    pub fn new(ambient: u32, members: impl IntoIterator<Item = SquarefreeMonomial>) -> Result<Self> {
        if ambient > MAX_VARS {
            return Err(Error::AmbientTooLarge(ambient));
        }
        let mut members: Vec<_> = members.into_iter().collect();
        if let Some(bad) = members.iter().find(|m| !m.fits(ambient)) {
            return Err(Error::IndexOutOfRange {
                index: bad.max_index(),
                n: ambient,
            });
        }
        members.sort_by(generator_order);
        members.dedup();
        Ok(MonomialSet { ambient, members })
    }

    pub fn empty(ambient: u32) -> Self {
        MonomialSet {
            ambient,
            members: Vec::new(),
        }
    }

    pub fn ambient(&self) -> u32 {
        self.ambient
    }

    pub fn members(&self) -> &[SquarefreeMonomial] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, m: SquarefreeMonomial) -> bool {
        self.members.contains(&m)
    }

    pub fn iter(&self) -> impl Iterator<Item = SquarefreeMonomial> + '_ {
        self.members.iter().copied()
    }
}

/// All t-spread monomials of degree `d` in `n` variables, slex-descending.
pub fn enumerate_t_spread(n: u32, d: u32, t: u32) -> MonomialSet {
    assert!(n <= MAX_VARS, "ambient size {n} exceeds 64");
    let step = t.max(1);
    let mut out = Vec::with_capacity(count_t_spread(n, d, step) as usize);
    fn extend(out: &mut Vec<SquarefreeMonomial>, prefix: u64, next: u32, left: u32, n: u32, step: u32) {
        if left == 0 {
            out.push(SquarefreeMonomial(prefix));
            return;
        }
        // leave room for the remaining `left - 1` indices
        let last_start = n as i64 - (left as i64 - 1) * step as i64;
        let mut i = next as i64;
        while i <= last_start {
            let bit = 1u64 << (i - 1);
            extend(out, prefix | bit, i as u32 + step, left - 1, n, step);
            i += 1;
        }
    }
    extend(&mut out, 0, 1, d, n, step);
    // lexicographic index tuples come out slex-descending already
    MonomialSet { ambient: n, members: out }
}

/// The t-shadow: t-spread monomials `x_i * w` for `w` in `set`, `i` not in `w`.
pub fn t_shadow(set: &MonomialSet, t: u32) -> Result<MonomialSet> {
    let mut degree = None;
    for m in set.iter() {
        match degree {
            None => degree = Some(m.degree()),
            Some(d) if d != m.degree() => return Err(Error::DegreeMismatch(d, m.degree())),
            _ => {}
        }
        if !is_t_spread(m, t) {
            return Err(Error::NotTSpread(m.to_string(), t));
        }
    }
    let n = set.ambient();
    let mut out = Vec::new();
    for w in set.iter() {
        for i in 1..=n {
            if w.contains(i) {
                continue;
            }
            let m = w.with_var(i);
            if is_t_spread(m, t) {
                out.push(m);
            }
        }
    }
    MonomialSet::new(n, out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(ix: &[u32]) -> SquarefreeMonomial {
        SquarefreeMonomial::from_indices(ix.iter().copied()).unwrap()
    }

    #[test]
    fn t_spread_examples() {
        assert!(is_t_spread(mono(&[2, 4]), 2));
        assert!(is_t_spread(SquarefreeMonomial::ONE, 5));
        assert!(!is_t_spread(mono(&[1, 3, 5, 7, 9]), 3));
        assert!(is_t_spread(mono(&[1, 2]), 0));
        assert!(is_t_spread(mono(&[7]), 100));
    }

    #[test]
    fn max_index_examples() {
        assert_eq!(mono(&[1, 5, 7]).max_index(), 7);
        assert_eq!(SquarefreeMonomial::ONE.max_index(), 0);
        assert_eq!(mono(&[3]).max_index(), 3);
        assert_eq!(mono(&[64]).max_index(), 64);
    }

    #[test]
    fn lcm_examples() {
        assert_eq!(lcm(&[mono(&[2, 4]), mono(&[1, 5, 7])]).unwrap(), mono(&[1, 2, 4, 5, 7]));
        assert_eq!(lcm(&[mono(&[3])]).unwrap(), mono(&[3]));
        let gens = [mono(&[1, 4]), mono(&[1, 3, 8]), mono(&[2, 4, 6]), mono(&[1, 3, 5, 7, 9])];
        assert_eq!(lcm(&gens).unwrap(), mono(&[1, 2, 3, 4, 5, 6, 7, 8, 9]));
        assert_eq!(lcm(&[]), Err(Error::EmptyLcm));
        assert_eq!(Error::EmptyLcm.to_string(), "empty lcm");
    }

    #[test]
    fn counting_examples() {
        assert_eq!(count_t_spread(4, 2, 2), 3);
        assert_eq!(count_t_spread(9, 1, 3), 9);
        assert_eq!(count_t_spread(10, 5, 3), 0);
        assert_eq!(count_t_spread(10, 4, 3), 1);
        assert_eq!(count_t_spread(7, 0, 3), 1);
    }

    #[test]
    fn enumeration_examples() {
        let m = enumerate_t_spread(4, 2, 2);
        assert_eq!(m.members(), &[mono(&[1, 3]), mono(&[1, 4]), mono(&[2, 4])]);
        assert_eq!(enumerate_t_spread(6, 0, 2).members(), &[SquarefreeMonomial::ONE]);
        let top = enumerate_t_spread(10, 4, 3);
        assert_eq!(top.members(), &[mono(&[1, 4, 7, 10])]);
    }

    #[test]
    fn shadow_examples() {
        let t = MonomialSet::new(5, [mono(&[1, 4])]).unwrap();
        assert!(t_shadow(&t, 3).unwrap().is_empty());
        let one = MonomialSet::new(4, [SquarefreeMonomial::ONE]).unwrap();
        assert_eq!(t_shadow(&one, 2).unwrap().len(), 4);
        let tail = MonomialSet::new(10, [mono(&[2, 5, 8]), mono(&[3, 6, 9])]).unwrap();
        assert!(t_shadow(&tail, 3).unwrap().is_empty());
        let mixed = MonomialSet::new(10, [mono(&[2]), mono(&[3, 6])]).unwrap();
        assert!(matches!(t_shadow(&mixed, 3), Err(Error::DegreeMismatch(..))));
    }

    #[test]
    fn slex_examples() {
        assert_eq!(slex_cmp(mono(&[1, 4, 7]), mono(&[1, 4, 8])).unwrap(), Ordering::Greater);
        assert_eq!(slex_cmp(mono(&[2, 5]), mono(&[2, 5])).unwrap(), Ordering::Equal);
        assert_eq!(slex_cmp(mono(&[1, 5]), mono(&[2, 3])).unwrap(), Ordering::Greater);
        assert!(slex_cmp(mono(&[1]), mono(&[1, 2])).is_err());
    }

    #[test]
    fn max_degree_examples() {
        assert_eq!(max_t_spread_degree(10, 3), 4);
        assert_eq!(max_t_spread_degree(9, 1), 9);
        assert_eq!(max_t_spread_degree(4, 4), 1);
    }

    #[test]
    fn text_round_trip() {
        let m: SquarefreeMonomial = "x3*x7*x9".parse().unwrap();
        assert_eq!(m, mono(&[3, 7, 9]));
        assert_eq!(m.to_string(), "x3*x7*x9");
        assert_eq!("1".parse::<SquarefreeMonomial>().unwrap().to_string(), "1");
        let err = "x3*y7".parse::<SquarefreeMonomial>().unwrap_err();
        assert!(err.to_string().contains("y7"));
        assert!("x2*x2".parse::<SquarefreeMonomial>().is_err());
        assert!("x0".parse::<SquarefreeMonomial>().is_err());
    }
}
