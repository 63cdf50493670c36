use std::fmt;
use std::ops::Add;

use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

/// A homological dimension: a natural number or infinity.
///
/// `Finite(_) < Infinite`, and finite values compare numerically, so `max`
/// over an iterator of dimensions does the right thing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dimension {
    Finite(u32),
    Infinite,
}

impl Dimension {
    pub const ZERO: Dimension = Dimension::Finite(0);

    pub fn is_finite(self) -> bool {
        matches!(self, Dimension::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Dimension::Finite(n) => Some(n),
            Dimension::Infinite => None,
        }
    }

    /// `self - 1`, saturating at zero; infinity stays infinite.
    pub fn pred(self) -> Dimension {
        match self {
            Dimension::Finite(n) => Dimension::Finite(n.saturating_sub(1)),
            Dimension::Infinite => Dimension::Infinite,
        }
    }

    pub fn succ(self) -> Dimension {
        self + Dimension::Finite(1)
    }
}

impl Default for Dimension {
    fn default() -> Self {
        Dimension::ZERO
    }
}

impl From<u32> for Dimension {
    fn from(n: u32) -> Self {
        Dimension::Finite(n)
    }
}

impl From<usize> for Dimension {
    fn from(n: usize) -> Self {
        Dimension::Finite(u32::try_from(n).expect("dimension overflows u32"))
    }
}

impl Add for Dimension {
    type Output = Dimension;

    fn add(self, rhs: Dimension) -> Dimension {
        match (self, rhs) {
            (Dimension::Finite(a), Dimension::Finite(b)) => Dimension::Finite(a + b),
            _ => Dimension::Infinite,
        }
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::Finite(n) => write!(f, "{n}"),
            Dimension::Infinite => f.write_str("infinity"),
        }
    }
}

// JSON form: {"value": N} or {"value": "infinity"}.
impl Serialize for Dimension {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(1))?;
        match self {
            Dimension::Finite(n) => map.serialize_entry("value", n)?,
            Dimension::Infinite => map.serialize_entry("value", "infinity")?,
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Dimension {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u32),
            Text(String),
        }
        #[derive(Deserialize)]
        struct Wrapper {
            value: Raw,
        }
        match Wrapper::deserialize(deserializer)?.value {
            Raw::Num(n) => Ok(Dimension::Finite(n)),
            Raw::Text(s) if s == "infinity" => Ok(Dimension::Infinite),
            Raw::Text(s) => Err(de::Error::custom(format!("bad dimension value `{s}`"))),
        }
    }
}
