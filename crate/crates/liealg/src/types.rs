use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::{LieError, Result};

/// Exact rational scalar used for torus (central) coordinates.
pub type Rational = Ratio<i64>;

/// The seven families of simple Lie algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Family> {
        match c {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            'E' => Some(Family::E),
            'F' => Some(Family::F),
            'G' => Some(Family::G),
            _ => None,
        }
    }
}

/// A simple Lie type in canonical form.
///
/// Canonical ranks are A >= 1, B >= 2, C >= 3, D >= 4, E in {6,7,8}, F = 4,
/// G = 2.  The aliases B1, C1 -> A1, C2 -> B2, D2 -> A1 x A1 and D3 -> A3 are
/// resolved by [`LieType::simple`]; a `SimpleLieType` value is always
/// canonical.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleLieType {
    family: Family,
    rank: usize,
}

impl SimpleLieType {
    /// Builds a canonical simple type, rejecting aliases and bad ranks.
    pub fn new(family: Family, rank: usize) -> Result<SimpleLieType> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(SimpleLieType { family, rank })
        } else {
            Err(LieError::InvalidType(format!(
                "{}{} is not canonical",
                family.letter(),
                rank
            )))
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl fmt::Display for SimpleLieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A product of canonical simple factors plus a central torus.
///
/// The text syntax concatenates factors and an optional torus, matching the
/// usual naming: `"E8"`, `"A2A2"`, `"A1D6"`, `"E6T1"`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LieType {
    factors: Vec<SimpleLieType>,
    torus_rank: usize,
}

impl LieType {
    /// A single simple factor, canonicalizing low-rank aliases:
    /// B1, C1 -> A1; C2 -> B2; D2 -> A1A1; D3 -> A3.
    pub fn simple(family: Family, rank: usize) -> Result<LieType> {
        if rank == 0 {
            return Err(LieError::InvalidType(format!(
                "{}0 has rank zero",
                family.letter()
            )));
        }
        let factors = match (family, rank) {
            (Family::B, 1) | (Family::C, 1) => vec![SimpleLieType::new(Family::A, 1)?],
            (Family::C, 2) => vec![SimpleLieType::new(Family::B, 2)?],
            (Family::D, 2) => vec![
                SimpleLieType::new(Family::A, 1)?,
                SimpleLieType::new(Family::A, 1)?,
            ],
            (Family::D, 3) => vec![SimpleLieType::new(Family::A, 3)?],
            _ => vec![SimpleLieType::new(family, rank)?],
        };
        Ok(LieType {
            factors,
            torus_rank: 0,
        })
    }

    /// A bare torus of rank `k`.
    pub fn torus(k: usize) -> LieType {
        LieType {
            factors: Vec::new(),
            torus_rank: k,
        }
    }

    /// Product of the given types (factors concatenate, torus ranks add).
    pub fn product<I: IntoIterator<Item = LieType>>(parts: I) -> LieType {
        let mut factors = Vec::new();
        let mut torus_rank = 0;
        for p in parts {
            factors.extend(p.factors);
            torus_rank += p.torus_rank;
        }
        LieType {
            factors,
            torus_rank,
        }
    }

    pub fn factors(&self) -> &[SimpleLieType] {
        &self.factors
    }

    pub fn torus_rank(&self) -> usize {
        self.torus_rank
    }

    /// Rank of the semisimple part (sum of factor ranks).
    pub fn semisimple_rank(&self) -> usize {
        self.factors.iter().map(|f| f.rank()).sum()
    }

    /// Total rank = semisimple rank + torus rank.
    pub fn rank(&self) -> usize {
        self.semisimple_rank() + self.torus_rank
    }

    pub fn is_simple(&self) -> bool {
        self.factors.len() == 1 && self.torus_rank == 0
    }

    /// The unique simple factor, if this type is simple.
    pub fn as_simple(&self) -> Option<SimpleLieType> {
        if self.is_simple() {
            Some(self.factors[0])
        } else {
            None
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() && self.torus_rank == 0 {
            return write!(f, "T0");
        }
        for fac in &self.factors {
            write!(f, "{fac}")?;
        }
        if self.torus_rank > 0 {
            write!(f, "T{}", self.torus_rank)?;
        }
        Ok(())
    }
}

impl FromStr for LieType {
    type Err = LieError;

    fn from_str(s: &str) -> Result<LieType> {
        let bad = || LieError::InvalidType(s.to_string());
        let mut parts = Vec::new();
        let mut chars = s.chars().peekable();
        if s.is_empty() {
            return Err(bad());
        }
        while let Some(c) = chars.next() {
            let mut digits = String::new();
            while let Some(d) = chars.peek() {
                if d.is_ascii_digit() {
                    digits.push(*d);
                    chars.next();
                } else {
                    break;
                }
            }
            let rank: usize = digits.parse().map_err(|_| bad())?;
            if c == 'T' {
                parts.push(LieType::torus(rank));
            } else {
                let family = Family::from_letter(c).ok_or_else(bad)?;
                parts.push(LieType::simple(family, rank)?);
            }
        }
        Ok(LieType::product(parts))
    }
}

/// Integer coordinates of a vector in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVec(pub Vec<i64>);

impl RootVec {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Height = sum of simple-root coefficients.
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Standard basis vector for the 1-based node `i`.
    pub fn simple(rank: usize, i: usize) -> RootVec {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        RootVec(v)
    }
}

impl fmt::Display for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.0
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// Integer coordinates in the fundamental-weight basis, optionally extended
/// by exact-rational central (torus) coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub coords: Vec<i64>,
    pub central: Vec<Rational>,
}

impl Weight {
    pub fn new(coords: Vec<i64>) -> Weight {
        Weight {
            coords,
            central: Vec::new(),
        }
    }

    pub fn with_central(coords: Vec<i64>, central: Vec<Rational>) -> Weight {
        Weight { coords, central }
    }

    pub fn zero(rank: usize) -> Weight {
        Weight::new(vec![0; rank])
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Dominant iff every non-central coordinate is >= 0.
    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.coords.len(), other.coords.len());
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        let central = if self.central.is_empty() {
            other.central.clone()
        } else if other.central.is_empty() {
            self.central.clone()
        } else {
            self.central
                .iter()
                .zip(&other.central)
                .map(|(a, b)| a + b)
                .collect()
        };
        Weight { coords, central }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.coords.len(), other.coords.len());
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
            central: self.central.clone(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        parts.extend(self.central.iter().map(format_rational));
        write!(f, "[{}]", parts.join(","))
    }
}

/// Renders an exact rational the way the CLI and JSON output expect:
/// `"3"` when integral, `"3/2"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
