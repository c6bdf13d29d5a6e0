use std::fmt;
use std::str::FromStr;

/// Statement ids accepted by `verify --theorem`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    L2_1,
    L2_2,
    L2_3,
    L2_4,
    T3_2,
    C3_3,
    T3_4,
    T3_5,
    T3_6,
    T3_7,
    T3_8,
    T3_9,
    T3_10,
    T3_11,
    C3_12,
}

impl TheoremId {
    pub const ALL: [TheoremId; 15] = [
        TheoremId::L2_1,
        TheoremId::L2_2,
        TheoremId::L2_3,
        TheoremId::L2_4,
        TheoremId::T3_2,
        TheoremId::C3_3,
        TheoremId::T3_4,
        TheoremId::T3_5,
        TheoremId::T3_6,
        TheoremId::T3_7,
        TheoremId::T3_8,
        TheoremId::T3_9,
        TheoremId::T3_10,
        TheoremId::T3_11,
        TheoremId::C3_12,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::L2_1 => "L2.1",
            TheoremId::L2_2 => "L2.2",
            TheoremId::L2_3 => "L2.3",
            TheoremId::L2_4 => "L2.4",
            TheoremId::T3_2 => "T3.2",
            TheoremId::C3_3 => "C3.3",
            TheoremId::T3_4 => "T3.4",
            TheoremId::T3_5 => "T3.5",
            TheoremId::T3_6 => "T3.6",
            TheoremId::T3_7 => "T3.7",
            TheoremId::T3_8 => "T3.8",
            TheoremId::T3_9 => "T3.9",
            TheoremId::T3_10 => "T3.10",
            TheoremId::T3_11 => "T3.11",
            TheoremId::C3_12 => "C3.12",
        }
    }

    /// Only meaningful over the rationals with transpose.
    pub fn requires_rationals(self) -> bool {
        self == TheoremId::T3_9
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown theorem id {0:?}")]
pub struct UnknownTheorem(pub String);

impl FromStr for TheoremId {
    type Err = UnknownTheorem;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL.into_iter().find(|t| t.as_str() == s).ok_or_else(|| UnknownTheorem(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(t.as_str().parse::<TheoremId>().unwrap(), t);
        }
        assert!("T3.1".parse::<TheoremId>().is_err());
    }
}
