use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::quartet::{ForbiddenFamily, Quartet};

/// Fixed graphs glued next to a source instance by the wrap reductions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GadgetKind {
    /// Half graph on `a1..a3`, `b1..b3` with `a_i b_j` iff `i + j >= 4`.
    Ch3,
    /// Triangle `abc`, half graph `b_i c_j` iff `i + j >= 5`, `b` joined to
    /// the `c_j` and `c` joined to the `b_i`.
    Ech4,
    /// Induced path `a1 b1 a2 b2`.
    P4,
    /// Path `b1' a1 b1 a2 b2`.
    Pprime,
}

impl GadgetKind {
    pub const ALL: [GadgetKind; 4] = [GadgetKind::Ch3, GadgetKind::Ech4, GadgetKind::P4, GadgetKind::Pprime];

    pub fn name(self) -> &'static str {
        match self {
            GadgetKind::Ch3 => "ch3",
            GadgetKind::Ech4 => "ech4",
            GadgetKind::P4 => "p4",
            GadgetKind::Pprime => "pprime",
        }
    }

    pub fn order(self) -> usize {
        match self {
            GadgetKind::Ch3 => 6,
            GadgetKind::Ech4 => 11,
            GadgetKind::P4 => 4,
            GadgetKind::Pprime => 5,
        }
    }

    /// Vertex names in index order.
    pub fn labels(self) -> &'static [&'static str] {
        match self {
            GadgetKind::Ch3 => &["a1", "a2", "a3", "b1", "b2", "b3"],
            GadgetKind::Ech4 => &["a", "b", "c", "b1", "b2", "b3", "b4", "c1", "c2", "c3", "c4"],
            GadgetKind::P4 => &["a1", "b1", "a2", "b2"],
            GadgetKind::Pprime => &["a1", "a2", "b1", "b1'", "b2"],
        }
    }

    /// Family the wrapped instance is posed for.
    pub fn family(self) -> ForbiddenFamily {
        let (a, b) = match self {
            GadgetKind::Ch3 => (Quartet::Paw, Quartet::CoC4),
            GadgetKind::Ech4 => (Quartet::Diamond, Quartet::CoC4),
            GadgetKind::P4 => (Quartet::Paw, Quartet::CoDiamond),
            GadgetKind::Pprime => (Quartet::Diamond, Quartet::CoDiamond),
        };
        ForbiddenFamily::pair(a, b).unwrap()
    }

    /// Gadget vertices that receive no optional edges to the source.
    pub fn sealed(self) -> &'static [usize] {
        match self {
            GadgetKind::Ech4 => &[0],
            _ => &[],
        }
    }
}

impl fmt::Display for GadgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GadgetKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GadgetKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

pub fn gadget(kind: GadgetKind) -> Graph {
    let mut g = Graph::empty(kind.order());
    match kind {
        GadgetKind::Ch3 => {
            for i in 1..=3 {
                for j in 1..=3 {
                    if i + j >= 4 {
                        g.add_edge(i - 1, 2 + j);
                    }
                }
            }
        }
        GadgetKind::Ech4 => {
            let (a, b, c) = (0, 1, 2);
            let bi = |i: usize| 2 + i;
            let cj = |j: usize| 6 + j;
            g.add_edge(a, b);
            g.add_edge(a, c);
            g.add_edge(b, c);
            for i in 1..=4 {
                g.add_edge(b, cj(i));
                g.add_edge(c, bi(i));
                for j in 1..=4 {
                    if i + j >= 5 {
                        g.add_edge(bi(i), cj(j));
                    }
                }
            }
        }
        GadgetKind::P4 => {
            for i in 1..4 {
                g.add_edge(i - 1, i);
            }
        }
        GadgetKind::Pprime => {
            let (a1, a2, b1, b1p, b2) = (0, 1, 2, 3, 4);
            g.add_edge(a1, b1);
            g.add_edge(a1, b1p);
            g.add_edge(b1, a2);
            g.add_edge(a2, b2);
        }
    }
    g
}
