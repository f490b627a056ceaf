//! Command-line names for central elements and transition endpoints.

use std::fmt;
use std::str::FromStr;

use heckez::charmap::CentralFamily;
use heckez::{Basis, CentralElement, Partition};

/// `family:partition`, e.g. `gr:2,1` or `idem:(3)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ElementSpec {
    pub family: CentralFamily,
    pub lambda: Partition,
}

impl ElementSpec {
    pub fn element(&self) -> CentralElement {
        self.family.element(&self.lambda)
    }
}

impl FromStr for ElementSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (family, lambda) = s
            .split_once(':')
            .ok_or_else(|| format!("expected FAMILY:PARTITION (e.g. gr:2,1), got {s:?}"))?;
        let family = family
            .parse()
            .map_err(|e| format!("{e} (expected gr, n1, nt2, nf or idem)"))?;
        let lambda = lambda.parse().map_err(|e| format!("{e}"))?;
        Ok(Self { family, lambda })
    }
}

impl fmt::Display for ElementSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.family.tag().to_lowercase(), self.lambda)
    }
}

/// One end of `transition`: a central family (`N1`, `NT2`, `NF`, `GR`, `IDEM`)
/// or a symmetric-function basis (`m`, `e`, `h`, `p`, `s`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Endpoint {
    Family(CentralFamily),
    Basis(Basis),
}

impl FromStr for Endpoint {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if let Ok(b) = s.parse() {
            return Ok(Self::Basis(b));
        }
        s.parse()
            .map(Self::Family)
            .map_err(|_| format!("unknown tag {s:?} (expected N1, NT2, NF, GR, IDEM or m, e, h, p, s)"))
    }
}
