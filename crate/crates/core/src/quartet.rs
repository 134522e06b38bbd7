//! The eleven graphs of order four, the four graphs of order three, and
//! induced-occurrence detection for both.
//!
//! An induced subgraph on a sorted vertex tuple is summarised by a bit mask
//! over its vertex pairs in lexicographic position order
//! (`01, 02, 03, 12, 13, 23` for four vertices, `01, 02, 12` for three).
//! Each pattern precomputes which masks it matches and one labeling per mask,
//! so detection never tries all permutations.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

const QUAD_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
const TRIPLE_PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

fn pair_bit4(i: usize, j: usize) -> u8 {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    let pos = QUAD_PAIRS.iter().position(|&p| p == (i, j)).unwrap();
    1 << pos
}

fn pair_bit3(i: usize, j: usize) -> u8 {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    let pos = TRIPLE_PAIRS.iter().position(|&p| p == (i, j)).unwrap();
    1 << pos
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in 0..k {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                rec(k, cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(k, &mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// The graphs of order four.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Quartet {
    #[serde(rename = "K4")]
    K4,
    #[serde(rename = "co-K4")]
    CoK4,
    #[serde(rename = "diamond")]
    Diamond,
    #[serde(rename = "co-diamond")]
    CoDiamond,
    #[serde(rename = "paw")]
    Paw,
    #[serde(rename = "co-paw")]
    CoPaw,
    #[serde(rename = "claw")]
    Claw,
    #[serde(rename = "co-claw")]
    CoClaw,
    #[serde(rename = "C4")]
    C4,
    #[serde(rename = "co-C4")]
    CoC4,
    #[serde(rename = "P4")]
    P4,
}

impl Quartet {
    pub const ALL: [Quartet; 11] = [
        Quartet::K4,
        Quartet::CoK4,
        Quartet::Diamond,
        Quartet::CoDiamond,
        Quartet::Paw,
        Quartet::CoPaw,
        Quartet::Claw,
        Quartet::CoClaw,
        Quartet::C4,
        Quartet::CoC4,
        Quartet::P4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Quartet::K4 => "K4",
            Quartet::CoK4 => "co-K4",
            Quartet::Diamond => "diamond",
            Quartet::CoDiamond => "co-diamond",
            Quartet::Paw => "paw",
            Quartet::CoPaw => "co-paw",
            Quartet::Claw => "claw",
            Quartet::CoClaw => "co-claw",
            Quartet::C4 => "C4",
            Quartet::CoC4 => "co-C4",
            Quartet::P4 => "P4",
        }
    }

    /// Parses a name, ignoring case and accepting a few common aliases
    /// (`2K2`, `K1+P3`, `K3+K1`, `K2+2K1`).
    pub fn from_name(name: &str) -> Result<Quartet> {
        let key = name.trim().to_ascii_lowercase().replace('_', "-");
        let alias = match key.as_str() {
            "2k2" => Some(Quartet::CoC4),
            "k1+p3" | "p3+k1" => Some(Quartet::CoPaw),
            "k3+k1" | "k1+k3" => Some(Quartet::CoClaw),
            "k2+2k1" | "2k1+k2" => Some(Quartet::CoDiamond),
            "4k1" => Some(Quartet::CoK4),
            _ => None,
        };
        if let Some(q) = alias {
            return Ok(q);
        }
        let key = if key.starts_with("co") && !key.starts_with("co-") {
            format!("co-{}", &key[2..])
        } else {
            key
        };
        Quartet::ALL
            .into_iter()
            .find(|q| q.name().to_ascii_lowercase() == key)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn complement(self) -> Quartet {
        match self {
            Quartet::K4 => Quartet::CoK4,
            Quartet::CoK4 => Quartet::K4,
            Quartet::Diamond => Quartet::CoDiamond,
            Quartet::CoDiamond => Quartet::Diamond,
            Quartet::Paw => Quartet::CoPaw,
            Quartet::CoPaw => Quartet::Paw,
            Quartet::Claw => Quartet::CoClaw,
            Quartet::CoClaw => Quartet::Claw,
            Quartet::C4 => Quartet::CoC4,
            Quartet::CoC4 => Quartet::C4,
            Quartet::P4 => Quartet::P4,
        }
    }

    /// Edge mask of the canonical labeling on vertices `0..4`. The `co-` graphs
    /// are the labeled complements of their partners.
    pub fn canonical_mask(self) -> u8 {
        let edges: &[(usize, usize)] = match self {
            Quartet::K4 | Quartet::CoK4 => &QUAD_PAIRS,
            Quartet::Diamond | Quartet::CoDiamond => &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)],
            Quartet::Paw | Quartet::CoPaw => &[(0, 1), (0, 2), (1, 2), (2, 3)],
            Quartet::Claw | Quartet::CoClaw => &[(0, 1), (0, 2), (0, 3)],
            Quartet::C4 | Quartet::CoC4 => &[(0, 1), (1, 2), (2, 3), (0, 3)],
            Quartet::P4 => &[(0, 1), (1, 2), (2, 3)],
        };
        let mask = edges.iter().fold(0u8, |m, &(i, j)| m | pair_bit4(i, j));
        match self {
            Quartet::CoK4 | Quartet::CoDiamond | Quartet::CoPaw | Quartet::CoClaw | Quartet::CoC4 => !mask & 0x3f,
            _ => mask,
        }
    }

    pub fn graph(self) -> Graph {
        mask_graph4(self.canonical_mask())
    }

    pub fn edge_count(self) -> usize {
        self.canonical_mask().count_ones() as usize
    }

    pub fn is_connected(self) -> bool {
        self.graph().is_connected()
    }

    pub fn has_universal_vertex(self) -> bool {
        let g = self.graph();
        (0..4).any(|v| g.is_universal(v))
    }

    /// Labelings of this quartet: entry `m` is the lexicographically first
    /// permutation `p` such that placing canonical vertex `i` at tuple
    /// position `p[i]` yields mask `m`.
    fn labelings(self) -> &'static [Option<[u8; 4]>; 64] {
        static TABLES: OnceLock<Vec<[Option<[u8; 4]>; 64]>> = OnceLock::new();
        let tables = TABLES.get_or_init(|| {
            Quartet::ALL
                .iter()
                .map(|q| {
                    let mut table = [None; 64];
                    let canon = q.canonical_mask();
                    for perm in permutations(4) {
                        let mut m = 0u8;
                        for (bit, &(i, j)) in QUAD_PAIRS.iter().enumerate() {
                            if canon >> bit & 1 == 1 {
                                m |= pair_bit4(perm[i], perm[j]);
                            }
                        }
                        if table[m as usize].is_none() {
                            table[m as usize] = Some([perm[0] as u8, perm[1] as u8, perm[2] as u8, perm[3] as u8]);
                        }
                    }
                    table
                })
                .collect()
        });
        &tables[self as usize]
    }

    /// All distinct masks this quartet induces on a sorted 4-tuple.
    pub fn embeddings(self) -> impl Iterator<Item = u8> {
        let table = self.labelings();
        (0u8..64).filter(move |&m| table[m as usize].is_some())
    }

    /// Which quartet a 4-vertex mask induces.
    pub fn classify(mask: u8) -> Quartet {
        static CLASS: OnceLock<[Quartet; 64]> = OnceLock::new();
        let table = CLASS.get_or_init(|| {
            let mut t = [Quartet::K4; 64];
            for q in Quartet::ALL {
                for m in q.embeddings() {
                    t[m as usize] = q;
                }
            }
            t
        });
        table[mask as usize & 0x3f]
    }

    fn bit(self) -> u16 {
        1 << self as u16
    }
}

impl fmt::Display for Quartet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Quartet {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Quartet::from_name(s)
    }
}

fn mask_graph4(mask: u8) -> Graph {
    let edges: Vec<(usize, usize)> = QUAD_PAIRS
        .iter()
        .enumerate()
        .filter(|(bit, _)| mask >> bit & 1 == 1)
        .map(|(_, &p)| p)
        .collect();
    Graph::from_edges(4, &edges).unwrap()
}

/// Mask induced by a sorted (or arbitrary) 4-tuple.
#[inline]
pub fn quad_mask(g: &Graph, t: [usize; 4]) -> u8 {
    let mut m = 0u8;
    for (bit, &(i, j)) in QUAD_PAIRS.iter().enumerate() {
        if g.has_edge(t[i], t[j]) {
            m |= 1 << bit;
        }
    }
    m
}

/// Visits every 4-subset `a < b < c < d` in lexicographic order together with
/// its induced mask; stops early when `visit` returns `Some`.
pub fn scan_quads<T>(g: &Graph, mut visit: impl FnMut([usize; 4], u8) -> Option<T>) -> Option<T> {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            let ab = g.has_edge(a, b) as u8;
            for c in b + 1..n {
                let abc = ab | (g.has_edge(a, c) as u8) << 1 | (g.has_edge(b, c) as u8) << 3;
                for d in c + 1..n {
                    let m = abc
                        | (g.has_edge(a, d) as u8) << 2
                        | (g.has_edge(b, d) as u8) << 4
                        | (g.has_edge(c, d) as u8) << 5;
                    if let Some(out) = visit([a, b, c, d], m) {
                        return Some(out);
                    }
                }
            }
        }
    }
    None
}

/// Lexicographically first 4-set inducing `h`, returned as a labeling: entry
/// `i` is the vertex playing canonical vertex `i` of `h`.
pub fn find_induced(g: &Graph, h: Quartet) -> Option<[usize; 4]> {
    let table = h.labelings();
    scan_quads(g, |t, m| table[m as usize].map(|p| [t[p[0] as usize], t[p[1] as usize], t[p[2] as usize], t[p[3] as usize]]))
}

/// The graphs of order three, used by closure rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Triplet {
    #[serde(rename = "K3")]
    K3,
    #[serde(rename = "P3")]
    P3,
    #[serde(rename = "co-P3")]
    CoP3,
    #[serde(rename = "co-K3")]
    CoK3,
}

impl Triplet {
    pub const ALL: [Triplet; 4] = [Triplet::K3, Triplet::P3, Triplet::CoP3, Triplet::CoK3];

    pub fn name(self) -> &'static str {
        match self {
            Triplet::K3 => "K3",
            Triplet::P3 => "P3",
            Triplet::CoP3 => "co-P3",
            Triplet::CoK3 => "co-K3",
        }
    }

    pub fn complement(self) -> Triplet {
        match self {
            Triplet::K3 => Triplet::CoK3,
            Triplet::CoK3 => Triplet::K3,
            Triplet::P3 => Triplet::CoP3,
            Triplet::CoP3 => Triplet::P3,
        }
    }

    /// Canonical labelings: P3 is the path `0-1-2`, co-P3 the single edge `02`.
    pub fn canonical_mask(self) -> u8 {
        match self {
            Triplet::K3 => 0b111,
            Triplet::P3 => pair_bit3(0, 1) | pair_bit3(1, 2),
            Triplet::CoP3 => pair_bit3(0, 2),
            Triplet::CoK3 => 0,
        }
    }

    pub fn graph(self) -> Graph {
        let edges: Vec<(usize, usize)> = TRIPLE_PAIRS
            .iter()
            .enumerate()
            .filter(|(bit, _)| self.canonical_mask() >> bit & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        Graph::from_edges(3, &edges).unwrap()
    }

    fn labelings(self) -> [Option<[u8; 3]>; 8] {
        let mut table = [None; 8];
        let canon = self.canonical_mask();
        for perm in permutations(3) {
            let mut m = 0u8;
            for (bit, &(i, j)) in TRIPLE_PAIRS.iter().enumerate() {
                if canon >> bit & 1 == 1 {
                    m |= pair_bit3(perm[i], perm[j]);
                }
            }
            if table[m as usize].is_none() {
                table[m as usize] = Some([perm[0] as u8, perm[1] as u8, perm[2] as u8]);
            }
        }
        table
    }
}

/// Lexicographically first 3-set inducing `h`, as a labeling.
pub fn find_induced_triplet(g: &Graph, h: Triplet) -> Option<[usize; 3]> {
    let table = h.labelings();
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let m = g.has_edge(a, b) as u8 | (g.has_edge(a, c) as u8) << 1 | (g.has_edge(b, c) as u8) << 2;
                if let Some(p) = table[m as usize] {
                    let t = [a, b, c];
                    return Some([t[p[0] as usize], t[p[1] as usize], t[p[2] as usize]]);
                }
            }
        }
    }
    None
}

/// A forbidden graph of order three or four.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Pattern {
    Triplet(Triplet),
    Quartet(Quartet),
}

impl Pattern {
    pub fn order(self) -> usize {
        match self {
            Pattern::Triplet(_) => 3,
            Pattern::Quartet(_) => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Pattern::Triplet(t) => t.name(),
            Pattern::Quartet(q) => q.name(),
        }
    }

    pub fn complement(self) -> Pattern {
        match self {
            Pattern::Triplet(t) => Pattern::Triplet(t.complement()),
            Pattern::Quartet(q) => Pattern::Quartet(q.complement()),
        }
    }

    pub fn graph(self) -> Graph {
        match self {
            Pattern::Triplet(t) => t.graph(),
            Pattern::Quartet(q) => q.graph(),
        }
    }

    /// First induced occurrence as a labeling of length `order()`.
    pub fn find_in(self, g: &Graph) -> Option<Vec<usize>> {
        match self {
            Pattern::Triplet(t) => find_induced_triplet(g, t).map(|l| l.to_vec()),
            Pattern::Quartet(q) => find_induced(g, q).map(|l| l.to_vec()),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A nonempty set of forbidden quartets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Quartet>", into = "Vec<Quartet>")]
pub struct ForbiddenFamily {
    members: Vec<Quartet>,
}

impl ForbiddenFamily {
    pub fn new(members: &[Quartet]) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::Precondition("a forbidden family needs at least one member".into()));
        }
        let mut sorted = members.to_vec();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::IdenticalPair(w[0].name().to_string()));
        }
        Ok(ForbiddenFamily { members: sorted })
    }

    pub fn single(q: Quartet) -> Self {
        ForbiddenFamily { members: vec![q] }
    }

    pub fn pair(a: Quartet, b: Quartet) -> Result<Self> {
        ForbiddenFamily::new(&[a, b])
    }

    /// Parses a comma separated list such as `paw,co-C4`.
    pub fn parse(spec: &str) -> Result<Self> {
        let members = spec
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(Quartet::from_name)
            .collect::<Result<Vec<_>>>()?;
        ForbiddenFamily::new(&members)
    }

    pub fn members(&self) -> &[Quartet] {
        &self.members
    }

    pub fn contains(&self, q: Quartet) -> bool {
        self.members.contains(&q)
    }

    pub fn complement(&self) -> ForbiddenFamily {
        let members: Vec<Quartet> = self.members.iter().map(|q| q.complement()).collect();
        ForbiddenFamily::new(&members).expect("complement preserves distinctness")
    }

    pub fn all_connected(&self) -> bool {
        self.members.iter().all(|q| q.is_connected())
    }

    pub fn any_universal_vertex(&self) -> bool {
        self.members.iter().any(|q| q.has_universal_vertex())
    }

    fn bits(&self) -> u16 {
        self.members.iter().fold(0, |b, q| b | q.bit())
    }

    /// First induced occurrence of any member, by 4-set order.
    pub fn find_occurrence(&self, g: &Graph) -> Option<(Quartet, [usize; 4])> {
        let bits = self.bits();
        scan_quads(g, |t, m| {
            let q = Quartet::classify(m);
            if bits & q.bit() == 0 {
                return None;
            }
            let p = q.labelings()[m as usize].unwrap();
            Some((q, [t[p[0] as usize], t[p[1] as usize], t[p[2] as usize], t[p[3] as usize]]))
        })
    }

    pub fn is_free(&self, g: &Graph) -> bool {
        let bits = self.bits();
        scan_quads(g, |_, m| (bits & Quartet::classify(m).bit() != 0).then_some(())).is_none()
    }
}

impl fmt::Display for ForbiddenFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.members.iter().map(|q| q.name()).collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

impl TryFrom<Vec<Quartet>> for ForbiddenFamily {
    type Error = Error;
    fn try_from(v: Vec<Quartet>) -> Result<Self> {
        ForbiddenFamily::new(&v)
    }
}

impl From<ForbiddenFamily> for Vec<Quartet> {
    fn from(f: ForbiddenFamily) -> Self {
        f.members
    }
}
