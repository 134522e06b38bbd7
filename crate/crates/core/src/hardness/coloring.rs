use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::json;

use super::{ReductionOutput, Target};
use crate::error::{Error, Result};
use crate::graph::{Graph, SandwichInstance};
use crate::poly::RAMSEY_3_4;
use crate::quartet::{ForbiddenFamily, Quartet};

/// Default size of the three added independent sets.
pub const DEFAULT_SET_SIZE: usize = RAMSEY_3_4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ColoringVariant {
    /// `(H, K_n)` under `{paw, K4}`.
    PawK4,
    /// `H` plus three independent `t`-sets under `{co-paw, K4}`.
    CoPawK4,
    /// Complement of the `CoPawK4` instance, under `{paw, co-K4}`.
    PawCoK4,
}

impl ColoringVariant {
    pub const ALL: [ColoringVariant; 3] = [ColoringVariant::PawK4, ColoringVariant::CoPawK4, ColoringVariant::PawCoK4];

    pub fn name(self) -> &'static str {
        match self {
            ColoringVariant::PawK4 => "paw-k4",
            ColoringVariant::CoPawK4 => "co-paw-k4",
            ColoringVariant::PawCoK4 => "paw-co-k4",
        }
    }

    pub fn family(self) -> ForbiddenFamily {
        let (a, b) = match self {
            ColoringVariant::PawK4 => (Quartet::Paw, Quartet::K4),
            ColoringVariant::CoPawK4 => (Quartet::CoPaw, Quartet::K4),
            ColoringVariant::PawCoK4 => (Quartet::Paw, Quartet::CoK4),
        };
        ForbiddenFamily::pair(a, b).unwrap()
    }
}

impl fmt::Display for ColoringVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ColoringVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ColoringVariant::ALL
            .into_iter()
            .find(|v| v.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// Sandwich instance whose feasibility encodes 3-colorability of `h`.
///
/// For the set-based variants the vertices of `h` come first, followed by
/// the sets `X`, `Y`, `Z` of `t` vertices each. Only `t >= 9` carries the
/// correctness guarantee; smaller sets are for structural experiments and
/// are flagged in the metadata.
pub fn reduce_3col(h: &Graph, variant: ColoringVariant, t: usize) -> Result<ReductionOutput> {
    let mut meta = BTreeMap::new();
    meta.insert("source".into(), json!("three-coloring"));
    meta.insert("variant".into(), json!(variant.name()));
    meta.insert("source_order".into(), json!(h.n()));
    let instance = match variant {
        ColoringVariant::PawK4 => {
            if !h.is_connected() || h.find_triangle().is_none() {
                return Err(Error::Precondition("H must be connected and contain a triangle".into()));
            }
            SandwichInstance::from_graphs(h.clone(), Graph::complete(h.n()))?
        }
        ColoringVariant::CoPawK4 | ColoringVariant::PawCoK4 => {
            if t == 0 {
                return Err(Error::Precondition("the added sets need at least one vertex".into()));
            }
            meta.insert("set_size".into(), json!(t));
            meta.insert("guaranteed".into(), json!(t >= RAMSEY_3_4));
            let inst = three_sets(h, t);
            check_set_structure(&inst, h.n(), t)?;
            if variant == ColoringVariant::PawCoK4 {
                inst.complement()
            } else {
                inst
            }
        }
    };
    Ok(ReductionOutput {
        instance,
        family: Target::Family(variant.family()),
        meta,
    })
}

fn three_sets(h: &Graph, t: usize) -> SandwichInstance {
    let k = h.n();
    let n = k + 3 * t;
    let part = |v: usize| (v - k) / t;
    let mut lower = Graph::empty(n);
    lower.embed(&(0..k).collect::<Vec<_>>(), h);
    let mut upper = lower.clone();
    for u in 0..n {
        for v in u + 1..n {
            if u >= k && part(u) != part(v) {
                lower.add_edge(u, v);
                upper.add_edge(u, v);
            } else if u < k {
                upper.add_edge(u, v);
            }
        }
    }
    SandwichInstance::from_graphs(lower, upper).expect("nested by construction")
}

/// The added sets are independent and pairwise completely joined in the
/// mandatory graph, and fully free towards `H` in the permitted graph.
pub fn check_set_structure(inst: &SandwichInstance, k: usize, t: usize) -> Result<()> {
    if inst.n() != k + 3 * t {
        return Err(Error::OrderMismatch {
            expected: k + 3 * t,
            found: inst.n(),
        });
    }
    let part = |v: usize| (v - k) / t;
    for u in k..inst.n() {
        for v in u + 1..inst.n() {
            let want = part(u) != part(v);
            if inst.is_mandatory(u, v) != want || inst.is_allowed(u, v) != want {
                return Err(Error::Precondition(format!(
                    "pair {u}-{v} breaks the set structure"
                )));
            }
        }
        for x in 0..k {
            if !inst.is_optional(x, u) {
                return Err(Error::Precondition(format!("pair {x}-{u} should be optional")));
            }
        }
    }
    Ok(())
}

/// Complete tripartite witness: color class `i` of `H` joins the `i`-th set.
/// For the complemented variant the complement is returned.
pub fn three_coloring_witness(h: &Graph, coloring: &[usize], variant: ColoringVariant, t: usize) -> Graph {
    let k = h.n();
    let class = |v: usize| if v < k { coloring[v] } else { (v - k) / t };
    let n = match variant {
        ColoringVariant::PawK4 => k,
        _ => k + 3 * t,
    };
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if class(u) != class(v) {
                g.add_edge(u, v);
            }
        }
    }
    if variant == ColoringVariant::PawCoK4 {
        g.complement()
    } else {
        g
    }
}

/// Proper coloring with colors `0..3`, by backtracking in vertex order.
pub fn three_coloring(h: &Graph) -> Option<Vec<usize>> {
    fn go(h: &Graph, v: usize, colors: &mut Vec<usize>) -> bool {
        if v == h.n() {
            return true;
        }
        for c in 0..3 {
            if h.neighbors(v).filter(|&u| u < v).all(|u| colors[u] != c) {
                colors[v] = c;
                if go(h, v + 1, colors) {
                    return true;
                }
            }
        }
        false
    }
    let mut colors = vec![0; h.n()];
    go(h, 0, &mut colors).then_some(colors)
}

pub const THREE_COLOR_LIMIT: usize = 10;

pub fn oracle_3col(h: &Graph) -> Result<bool> {
    if h.n() > THREE_COLOR_LIMIT {
        return Err(Error::OracleLimit(format!("{} vertices (limit {THREE_COLOR_LIMIT})", h.n())));
    }
    Ok(three_coloring(h).is_some())
}
