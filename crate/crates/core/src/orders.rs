//! Total orders in which the greedy removal visits edges.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::graph::Edge;

/// Identifier of the generator behind [`OrderKind::Random`], recorded in reports.
pub const RANDOM_ORDER_ALGORITHM: &str = "chacha8-fisher-yates";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Lex,
    Colex,
    RevLex,
    RevColex,
    Random,
}

impl OrderKind {
    pub const ALL: [OrderKind; 5] =
        [OrderKind::Random, OrderKind::Colex, OrderKind::Lex, OrderKind::RevColex, OrderKind::RevLex];

    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Lex => "lex",
            OrderKind::Colex => "colex",
            OrderKind::RevLex => "revlex",
            OrderKind::RevColex => "revcolex",
            OrderKind::Random => "random",
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OrderKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        OrderKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown order `{s}` (expected lex, colex, revlex, revcolex or random)"))
    }
}

/// An edge order; `seed` only matters for [`OrderKind::Random`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeOrder {
    pub kind: OrderKind,
    pub seed: u64,
}

impl EdgeOrder {
    pub fn new(kind: OrderKind, seed: u64) -> Self {
        EdgeOrder { kind, seed }
    }

    pub fn lexicographic() -> Self {
        Self::new(OrderKind::Lex, 0)
    }

    pub fn colexicographic() -> Self {
        Self::new(OrderKind::Colex, 0)
    }

    pub fn reverse_lexicographic() -> Self {
        Self::new(OrderKind::RevLex, 0)
    }

    pub fn reverse_colexicographic() -> Self {
        Self::new(OrderKind::RevColex, 0)
    }

    pub fn random(seed: u64) -> Self {
        Self::new(OrderKind::Random, seed)
    }

    /// Sorts `edges` in place.
    pub fn sort(&self, edges: &mut [Edge]) {
        match self.kind {
            OrderKind::Lex => edges.sort_by(cmp_lex),
            OrderKind::Colex => edges.sort_by(cmp_colex),
            OrderKind::RevLex => edges.sort_by(|a, b| cmp_lex(b, a)),
            OrderKind::RevColex => edges.sort_by(|a, b| cmp_colex(b, a)),
            OrderKind::Random => {
                // canonical starting point so the result ignores input order
                edges.sort_by(cmp_lex);
                let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
                edges.shuffle(&mut rng);
            }
        }
    }
}

impl fmt::Display for EdgeOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            OrderKind::Random => write!(f, "random(seed={})", self.seed),
            kind => write!(f, "{kind}"),
        }
    }
}

fn tie_break(a: &Edge, b: &Edge) -> Ordering {
    a.u.cmp(&b.u).then(a.v.cmp(&b.v))
}

fn cmp_lex(a: &Edge, b: &Edge) -> Ordering {
    a.grade.cmp_lex(&b.grade).then_with(|| tie_break(a, b))
}

fn cmp_colex(a: &Edge, b: &Edge) -> Ordering {
    a.grade.cmp_colex(&b.grade).then_with(|| tie_break(a, b))
}

/// Returns a sorted copy of `edges`.
pub fn sort_edges(edges: &[Edge], order: &EdgeOrder) -> Vec<Edge> {
    let mut out = edges.to_vec();
    order.sort(&mut out);
    out
}
