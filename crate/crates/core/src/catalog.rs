//! The thirty forbidden pairs up to complementation, their complexity status,
//! and the closure rules behind the forced-completion solver.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::quartet::{ForbiddenFamily, Pattern, Quartet, Triplet};

/// Polynomial algorithms, one per tractable pair (two pairs share the
/// co-component split).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    /// Both members fatal: feasible iff the mandatory graph is already free.
    ClosureDiamondK4,
    ClosureDiamondC4,
    ClosureDiamondPaw,
    /// Nothing of order 18 or more avoids both K4 and co-K4.
    RamseyBound,
    /// Component split plus universal-vertex stripping ({P4,C4}).
    UniversalStrip,
    /// Closure attempt, then recursion on co-components ({P4,K1+F2}).
    CoComponentSplit,
    /// Isolated-vertex closure, complete bipartite complement, co-components.
    P4CoDiamond,
    /// Mandatory graph or a clique minus one clique, per component.
    PawC4,
    /// Mandatory or permitted graph, per component.
    PawClaw,
    /// Triangle-free mandatory graph or complete multipartite closure.
    PawCoClaw,
    /// Multipartite closure or complete bipartite fill on either side.
    PawCoPaw,
    /// Clique, stable set and an optional five-cycle.
    PseudoSplit,
    /// Exhaustive below ten vertices, endpoint check above.
    ClawCoClaw,
    /// Special shapes plus a 2-SAT partition around a hub edge.
    ClawCoC4,
}

impl Algorithm {
    pub fn id(self) -> &'static str {
        match self {
            Algorithm::ClosureDiamondK4 => "closure-diamond-K4",
            Algorithm::ClosureDiamondC4 => "closure-diamond-C4",
            Algorithm::ClosureDiamondPaw => "closure-diamond-paw",
            Algorithm::RamseyBound => "ramsey-bound",
            Algorithm::UniversalStrip => "universal-strip",
            Algorithm::CoComponentSplit => "co-component-split",
            Algorithm::P4CoDiamond => "p4-co-diamond",
            Algorithm::PawC4 => "paw-c4",
            Algorithm::PawClaw => "paw-claw",
            Algorithm::PawCoClaw => "paw-co-claw",
            Algorithm::PawCoPaw => "paw-co-paw",
            Algorithm::PseudoSplit => "pseudo-split",
            Algorithm::ClawCoClaw => "claw-co-claw",
            Algorithm::ClawCoC4 => "claw-co-C4",
        }
    }
}

/// NP-hardness reductions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reduction {
    /// Imported from the single-C4 hardness construction; no generator here.
    ImportedC4Free,
    ThreeColoring,
    ThreeColoringPadded,
    ChainGadgetCh3,
    ChainGadgetECh4,
    CoMatchedPath,
    CoMatchedFork,
}

impl Reduction {
    pub fn id(self) -> &'static str {
        match self {
            Reduction::ImportedC4Free => "imported-c4-free",
            Reduction::ThreeColoring => "three-coloring",
            Reduction::ThreeColoringPadded => "three-coloring-padded",
            Reduction::ChainGadgetCh3 => "chain-gadget-ch3",
            Reduction::ChainGadgetECh4 => "chain-gadget-ech4",
            Reduction::CoMatchedPath => "co-matched-p4",
            Reduction::CoMatchedFork => "co-matched-pprime",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "status", content = "via", rename_all = "kebab-case")]
pub enum Status {
    Poly(Algorithm),
    NpComplete(Reduction),
    Open,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Poly(_) => "P",
            Status::NpComplete(_) => "NPC",
            Status::Open => "open",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Poly(a) => write!(f, "P ({})", a.id()),
            Status::NpComplete(r) => write!(f, "NPC ({})", r.id()),
            Status::Open => f.write_str("open"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StatusEntry {
    pub pair: [Quartet; 2],
    #[serde(flatten)]
    pub status: Status,
}

fn sorted_names(a: Quartet, b: Quartet) -> [&'static str; 2] {
    let mut names = [a.name(), b.name()];
    names.sort_unstable();
    names
}

/// Representative of `{a, b}` under complementation: the orientation whose
/// sorted name list is lexicographically smaller, listed in name order.
pub fn canonical_pair(a: Quartet, b: Quartet) -> Result<[Quartet; 2]> {
    if a == b {
        return Err(Error::IdenticalPair(a.name().to_string()));
    }
    let plain = sorted_names(a, b);
    let flipped = sorted_names(a.complement(), b.complement());
    let (x, y) = if flipped < plain {
        (a.complement(), b.complement())
    } else {
        (a, b)
    };
    Ok(if x.name() <= y.name() { [x, y] } else { [y, x] })
}

/// True when `{a, b}` is the complement of `{x, y}`'s orientation.
pub fn is_complement_of(a: Quartet, b: Quartet, [x, y]: [Quartet; 2]) -> bool {
    let mut given = [a, b];
    given.sort();
    let mut other = [x, y];
    other.sort();
    given != other
}

const KNOWN: [(Quartet, Quartet, Status); 22] = {
    use Algorithm as A;
    use Quartet::*;
    use Reduction as R;
    use Status::*;
    [
        (Diamond, K4, Poly(A::ClosureDiamondK4)),
        (Diamond, C4, Poly(A::ClosureDiamondC4)),
        (Diamond, Paw, Poly(A::ClosureDiamondPaw)),
        (K4, CoK4, Poly(A::RamseyBound)),
        (P4, C4, Poly(A::UniversalStrip)),
        (P4, CoClaw, Poly(A::CoComponentSplit)),
        (P4, CoPaw, Poly(A::CoComponentSplit)),
        (P4, CoDiamond, Poly(A::P4CoDiamond)),
        (Paw, C4, Poly(A::PawC4)),
        (Paw, Claw, Poly(A::PawClaw)),
        (Paw, CoClaw, Poly(A::PawCoClaw)),
        (Paw, CoPaw, Poly(A::PawCoPaw)),
        (C4, CoC4, Poly(A::PseudoSplit)),
        (Claw, CoClaw, Poly(A::ClawCoClaw)),
        (Claw, CoC4, Poly(A::ClawCoC4)),
        (C4, K4, NpComplete(R::ImportedC4Free)),
        (Paw, K4, NpComplete(R::ThreeColoring)),
        (Paw, CoK4, NpComplete(R::ThreeColoringPadded)),
        (Paw, CoC4, NpComplete(R::ChainGadgetCh3)),
        (Diamond, CoC4, NpComplete(R::ChainGadgetECh4)),
        (Paw, CoDiamond, NpComplete(R::CoMatchedPath)),
        (Diamond, CoDiamond, NpComplete(R::CoMatchedFork)),
    ]
};

/// Classification of a pair, invariant under complementing both members.
pub fn pair_status(a: Quartet, b: Quartet) -> Result<StatusEntry> {
    let pair = canonical_pair(a, b)?;
    let status = KNOWN
        .iter()
        .find(|(x, y, _)| canonical_pair(*x, *y).unwrap() == pair)
        .map(|&(_, _, s)| s)
        .unwrap_or(Status::Open);
    Ok(StatusEntry { pair, status })
}

/// The orientation a known result is stated for, which may be the complement
/// of the canonical representative; `None` for open pairs.
pub fn native_pair(a: Quartet, b: Quartet) -> Result<Option<([Quartet; 2], Status)>> {
    let pair = canonical_pair(a, b)?;
    Ok(KNOWN
        .iter()
        .find(|(x, y, _)| canonical_pair(*x, *y).unwrap() == pair)
        .map(|&(x, y, s)| ([x, y], s)))
}

/// All thirty canonical pairs with their status, sorted by names.
pub fn status_table() -> Vec<StatusEntry> {
    let mut pairs: Vec<[Quartet; 2]> = Vec::new();
    for (i, &a) in Quartet::ALL.iter().enumerate() {
        for &b in &Quartet::ALL[i + 1..] {
            let p = canonical_pair(a, b).unwrap();
            if !pairs.contains(&p) {
                pairs.push(p);
            }
        }
    }
    pairs.sort_by_key(|p| sorted_names(p[0], p[1]));
    pairs.into_iter().map(|[a, b]| pair_status(a, b).unwrap()).collect()
}

/// Plain-text rendering of the table, one pair per line.
pub fn render_status_table(entries: &[StatusEntry]) -> String {
    let mut out = String::new();
    out.push_str(&format!("{:<24} {:<6} {}\n", "pair", "status", "via"));
    for e in entries {
        let via = match e.status {
            Status::Poly(a) => a.id(),
            Status::NpComplete(r) => r.id(),
            Status::Open => "-",
        };
        let pair = format!("{{{},{}}}", e.pair[0], e.pair[1]);
        out.push_str(&format!("{:<24} {:<6} {}\n", pair, e.status.label(), via));
    }
    let count = |l: &str| entries.iter().filter(|e| e.status.label() == l).count();
    out.push_str(&format!(
        "total {}: {} P, {} NPC, {} open\n",
        entries.len(),
        count("P"),
        count("NPC"),
        count("open")
    ));
    out
}

/// A set of forbidden patterns of order three or four.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PatternFamily(Vec<Pattern>);

impl PatternFamily {
    pub fn new(members: &[Pattern]) -> Self {
        let mut m = members.to_vec();
        m.sort();
        m.dedup();
        PatternFamily(m)
    }

    pub fn members(&self) -> &[Pattern] {
        &self.0
    }

    pub fn complement(&self) -> PatternFamily {
        PatternFamily::new(&self.0.iter().map(|p| p.complement()).collect::<Vec<_>>())
    }

    /// First member (in sorted order) occurring in `g`, with its labeling.
    pub fn find_occurrence(&self, g: &Graph) -> Option<(Pattern, Vec<usize>)> {
        self.0.iter().find_map(|&p| p.find_in(g).map(|l| (p, l)))
    }

    pub fn is_free(&self, g: &Graph) -> bool {
        self.find_occurrence(g).is_none()
    }
}

impl From<&ForbiddenFamily> for PatternFamily {
    fn from(f: &ForbiddenFamily) -> Self {
        PatternFamily::new(&f.members().iter().map(|&q| Pattern::Quartet(q)).collect::<Vec<_>>())
    }
}

impl fmt::Display for PatternFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.0.iter().map(|p| p.name()).collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

/// How to repair an induced occurrence of `member`: `completion` is the unique
/// family-free supergraph on the same vertices (canonical labeling), or `None`
/// when no such supergraph exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureRule {
    pub family: PatternFamily,
    pub member: Pattern,
    pub completion: Option<Graph>,
}

const P3: Pattern = Pattern::Triplet(Triplet::P3);
const K3: Pattern = Pattern::Triplet(Triplet::K3);

fn q(x: Quartet) -> Pattern {
    Pattern::Quartet(x)
}

/// Families solvable by forced completion, with their rules.
pub fn closure_rules() -> Vec<ClosureRule> {
    let k4 = Some(Quartet::K4.graph());
    let mut c4_from_p4 = Quartet::P4.graph();
    c4_from_p4.add_edge(0, 3);
    let raw: Vec<(Vec<Pattern>, Pattern, Option<Graph>)> = vec![
        (vec![P3], P3, Some(Triplet::K3.graph())),
        (vec![q(Quartet::Diamond), q(Quartet::K4)], q(Quartet::Diamond), None),
        (vec![q(Quartet::Diamond), q(Quartet::K4)], q(Quartet::K4), None),
        (vec![q(Quartet::Diamond), q(Quartet::C4)], q(Quartet::Diamond), k4.clone()),
        (vec![q(Quartet::Diamond), q(Quartet::C4)], q(Quartet::C4), k4.clone()),
        (vec![q(Quartet::Diamond), q(Quartet::Paw)], q(Quartet::Diamond), k4.clone()),
        (vec![q(Quartet::Diamond), q(Quartet::Paw)], q(Quartet::Paw), k4.clone()),
        (vec![q(Quartet::P4), K3], q(Quartet::P4), Some(c4_from_p4)),
        (vec![q(Quartet::P4), K3], K3, None),
        (vec![q(Quartet::P4), P3], q(Quartet::P4), k4),
        (vec![q(Quartet::P4), P3], P3, Some(Triplet::K3.graph())),
    ];
    raw.into_iter()
        .map(|(fam, member, completion)| ClosureRule {
            family: PatternFamily::new(&fam),
            member,
            completion,
        })
        .collect()
}

/// The rule for `member` within a directly registered `family`.
pub fn closure_rule(family: &PatternFamily, member: Pattern) -> Result<ClosureRule> {
    let rules = closure_rules();
    if !rules.iter().any(|r| &r.family == family) {
        return Err(Error::UnregisteredFamily(family.to_string()));
    }
    rules
        .into_iter()
        .find(|r| &r.family == family && r.member == member)
        .ok_or_else(|| Error::Precondition(format!("{member} is not a member of {family}")))
}

/// Whether `family` is closure-solvable, and if so whether the instance must
/// be complemented first.
pub fn closure_route(family: &PatternFamily) -> Option<bool> {
    let rules = closure_rules();
    if rules.iter().any(|r| &r.family == family) {
        Some(false)
    } else if rules.iter().any(|r| r.family == family.complement()) {
        Some(true)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_pair_prefers_smaller_names() {
        use Quartet::*;
        assert_eq!(canonical_pair(CoDiamond, CoK4).unwrap(), [K4, Diamond]);
        assert!(canonical_pair(Paw, Paw).is_err());
        assert_eq!(canonical_pair(C4, P4).unwrap(), [C4, P4]);
        assert!(is_complement_of(CoC4, P4, [C4, P4]));
    }

    #[test]
    fn status_examples() {
        use Quartet::*;
        assert_eq!(pair_status(P4, C4).unwrap().status, Status::Poly(Algorithm::UniversalStrip));
        assert_eq!(pair_status(Paw, K4).unwrap().status, Status::NpComplete(Reduction::ThreeColoring));
        assert_eq!(pair_status(Claw, K4).unwrap().status, Status::Open);
        assert_eq!(pair_status(CoPaw, CoK4).unwrap().status, pair_status(Paw, K4).unwrap().status);
    }

    #[test]
    fn table_counts() {
        let t = status_table();
        assert_eq!(t.len(), 30);
        let count = |l: &str| t.iter().filter(|e| e.status.label() == l).count();
        assert_eq!((count("P"), count("NPC"), count("open")), (15, 7, 8));
    }

    #[test]
    fn unregistered_family() {
        let fam = PatternFamily::new(&[q(Quartet::Claw)]);
        assert!(matches!(closure_rule(&fam, q(Quartet::Claw)), Err(Error::UnregisteredFamily(_))));
        let co_p3 = PatternFamily::new(&[Pattern::Triplet(Triplet::CoP3)]);
        assert_eq!(closure_route(&co_p3), Some(true));
        assert_eq!(closure_route(&PatternFamily::new(&[P3])), Some(false));
    }

    /// Every rule's completion is the unique family-free supergraph.
    #[test]
    fn closure_rules_are_exhaustively_correct() {
        for rule in closure_rules() {
            let base = rule.member.graph();
            let k = base.n();
            let pairs: Vec<(usize, usize)> =
                (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v))).filter(|&(u, v)| !base.has_edge(u, v)).collect();
            let mut free = Vec::new();
            for mask in 0u32..1 << pairs.len() {
                let mut g = base.clone();
                for (i, &(u, v)) in pairs.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        g.add_edge(u, v);
                    }
                }
                if rule.family.is_free(&g) {
                    free.push(g);
                }
            }
            match &rule.completion {
                None => assert!(free.is_empty(), "{} in {}", rule.member, rule.family),
                Some(c) => assert_eq!(free, vec![c.clone()], "{} in {}", rule.member, rule.family),
            }
        }
    }
}
