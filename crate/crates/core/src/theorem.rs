use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::Error;

/// Identifiers for the checked results, in report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    Obs1,
    ObsO2,
    ObsAb,
    New1,
    ObsO3,
    PathR,
    PathTr,
    AhEqNTr,
    Th4,
    Th5,
    Th6,
    ThmS,
    ThmGirthEq,
    PropMindeg,
    PropDiam2,
    PropDiampath,
    PropGirth,
    ThmTstrdEqN,
    PropNg,
    Thm2Strd,
    PropEqGt,
    PropGtPlus1,
    PropCeilGt,
    ThmThree,
    Prop3n2,
    LemLeavesZero,
    ThmTreeGt,
    ThmTreeNs,
}

impl TheoremId {
    pub const ALL: [TheoremId; 28] = [
        TheoremId::Obs1,
        TheoremId::ObsO2,
        TheoremId::ObsAb,
        TheoremId::New1,
        TheoremId::ObsO3,
        TheoremId::PathR,
        TheoremId::PathTr,
        TheoremId::AhEqNTr,
        TheoremId::Th4,
        TheoremId::Th5,
        TheoremId::Th6,
        TheoremId::ThmS,
        TheoremId::ThmGirthEq,
        TheoremId::PropMindeg,
        TheoremId::PropDiam2,
        TheoremId::PropDiampath,
        TheoremId::PropGirth,
        TheoremId::ThmTstrdEqN,
        TheoremId::PropNg,
        TheoremId::Thm2Strd,
        TheoremId::PropEqGt,
        TheoremId::PropGtPlus1,
        TheoremId::PropCeilGt,
        TheoremId::ThmThree,
        TheoremId::Prop3n2,
        TheoremId::LemLeavesZero,
        TheoremId::ThmTreeGt,
        TheoremId::ThmTreeNs,
    ];

    /// Inequality-type results expected to hold on every connected graph.
    pub const INEQUALITIES: [TheoremId; 14] = [
        TheoremId::Obs1,
        TheoremId::ObsO2,
        TheoremId::ObsO3,
        TheoremId::New1,
        TheoremId::ThmS,
        TheoremId::PropMindeg,
        TheoremId::PropDiam2,
        TheoremId::PropDiampath,
        TheoremId::PropGirth,
        TheoremId::Thm2Strd,
        TheoremId::ThmThree,
        TheoremId::Prop3n2,
        TheoremId::PropEqGt,
        TheoremId::PropGtPlus1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Obs1 => "OBS1",
            TheoremId::ObsO2 => "OBS_O2",
            TheoremId::ObsAb => "OBS_AB",
            TheoremId::New1 => "NEW1",
            TheoremId::ObsO3 => "OBS_O3",
            TheoremId::PathR => "PATH_R",
            TheoremId::PathTr => "PATH_TR",
            TheoremId::AhEqNTr => "AH_EQ_N_TR",
            TheoremId::Th4 => "TH4",
            TheoremId::Th5 => "TH5",
            TheoremId::Th6 => "TH6",
            TheoremId::ThmS => "THM_S",
            TheoremId::ThmGirthEq => "THM_GIRTH_EQ",
            TheoremId::PropMindeg => "PROP_MINDEG",
            TheoremId::PropDiam2 => "PROP_DIAM2",
            TheoremId::PropDiampath => "PROP_DIAMPATH",
            TheoremId::PropGirth => "PROP_GIRTH",
            TheoremId::ThmTstrdEqN => "THM_TSTRD_EQ_N",
            TheoremId::PropNg => "PROP_NG",
            TheoremId::Thm2Strd => "THM_2STRD",
            TheoremId::PropEqGt => "PROP_EQ_GT",
            TheoremId::PropGtPlus1 => "PROP_GT_PLUS1",
            TheoremId::PropCeilGt => "PROP_CEIL_GT",
            TheoremId::ThmThree => "THM_THREE",
            TheoremId::Prop3n2 => "PROP_3N2",
            TheoremId::LemLeavesZero => "LEM_LEAVES_ZERO",
            TheoremId::ThmTreeGt => "THM_TREE_GT",
            TheoremId::ThmTreeNs => "THM_TREE_NS",
        }
    }

    /// Parses a comma-separated list; `all` selects every id.
    pub fn parse_list(s: &str) -> Result<Vec<TheoremId>, Error> {
        if s.trim().eq_ignore_ascii_case("all") {
            return Ok(TheoremId::ALL.to_vec());
        }
        let mut out: Vec<TheoremId> = s
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| t.trim().parse())
            .collect::<Result<_, _>>()?;
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown theorem id `{s}`")))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}
