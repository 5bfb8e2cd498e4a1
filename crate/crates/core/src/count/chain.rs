use serde::{Deserialize, Serialize};

use super::{triple_admissible, CountScalar, Profile};

/// An augmented sequence `(e_1, e_2, x_1, e_3, x_2, ..., x_{n-3}, e_{n-1}, e_n)`
/// together with the marked-index positions it came from.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct InsertionChain {
    sequence: Vec<u32>,
}

impl InsertionChain {
    /// Builds the sequence by inserting `nodes` between the marked indices.
    /// Panics unless `nodes.len() + 3 == indices.len()`.
    pub fn new(indices: &[u32], nodes: &[u32]) -> InsertionChain {
        let n = indices.len();
        assert!(
            n >= 3 && nodes.len() + 3 == n,
            "need exactly n - 3 node indices"
        );
        let mut sequence = Vec::with_capacity(2 * n - 3);
        sequence.push(indices[0]);
        sequence.push(indices[1]);
        for (j, &x) in nodes.iter().enumerate() {
            sequence.push(x);
            sequence.push(indices[j + 2]);
        }
        sequence.push(indices[n - 1]);
        InsertionChain { sequence }
    }

    pub fn sequence(&self) -> &[u32] {
        &self.sequence
    }

    /// Node indices `x_1, ..., x_{n-3}`.
    pub fn nodes(&self) -> Vec<u32> {
        let len = self.sequence.len();
        (2..len.saturating_sub(1))
            .step_by(2)
            .map(|i| self.sequence[i])
            .collect()
    }

    /// Component triples `(S_{2j-1}, S_{2j}, S_{2j+1})`, one per line of the chain.
    pub fn triples(&self) -> Vec<[u32; 3]> {
        let s = &self.sequence;
        (0..(s.len() - 1) / 2)
            .map(|j| [s[2 * j], s[2 * j + 1], s[2 * j + 2]])
            .collect()
    }

    pub fn is_admissible(&self, p: u32) -> bool {
        self.triples()
            .iter()
            .all(|t| triple_admissible(t[0], t[1], t[2], p))
    }
}

fn node_range(p: u32) -> std::ops::RangeInclusive<u32> {
    1..=(2 * p).saturating_sub(3).max(1)
}

/// Left-to-right transfer over the chain; the state is the value of the
/// most recent node index.
pub fn n_gen_chain<C: CountScalar>(profile: &Profile) -> C {
    let p = profile.p();
    let e = profile.indices();
    let n = e.len();
    if n == 3 {
        return if triple_admissible(e[0], e[1], e[2], p) {
            C::one()
        } else {
            C::zero()
        };
    }
    let width = node_range(p).count();
    // ways[x - 1] = number of admissible prefixes ending at node value x
    let mut ways: Vec<C> = node_range(p)
        .map(|x| {
            if triple_admissible(e[0], e[1], x, p) {
                C::one()
            } else {
                C::zero()
            }
        })
        .collect();
    for j in 1..n - 3 {
        let marked = e[j + 1];
        let mut next = vec![C::zero(); width];
        for (slot, x_new) in next.iter_mut().zip(node_range(p)) {
            for (w, x_old) in ways.iter().zip(node_range(p)) {
                if !w.is_zero() && triple_admissible(x_old, marked, x_new, p) {
                    *slot = slot.clone() + w.clone();
                }
            }
        }
        ways = next;
    }
    let mut total = C::zero();
    for (w, x) in ways.into_iter().zip(node_range(p)) {
        if triple_admissible(x, e[n - 2], e[n - 1], p) {
            total = total + w;
        }
    }
    total
}

/// Every admissible chain, found by backtracking over node values.
pub fn enumerate_chains(profile: &Profile) -> Vec<InsertionChain> {
    let p = profile.p();
    let e = profile.indices();
    let n = e.len();
    let mut out = Vec::new();
    if n == 3 {
        if triple_admissible(e[0], e[1], e[2], p) {
            out.push(InsertionChain::new(e, &[]));
        }
        return out;
    }
    let mut nodes = Vec::with_capacity(n - 3);
    extend(e, p, &mut nodes, &mut out);
    out
}

fn extend(e: &[u32], p: u32, nodes: &mut Vec<u32>, out: &mut Vec<InsertionChain>) {
    let n = e.len();
    let j = nodes.len();
    if j == n - 3 {
        let last = *nodes.last().expect("n > 3");
        if triple_admissible(last, e[n - 2], e[n - 1], p) {
            out.push(InsertionChain::new(e, nodes));
        }
        return;
    }
    let (left, mid) = if j == 0 {
        (e[0], e[1])
    } else {
        (nodes[j - 1], e[j + 1])
    };
    for x in node_range(p) {
        if triple_admissible(left, mid, x, p) {
            nodes.push(x);
            extend(e, p, nodes, out);
            nodes.pop();
        }
    }
}

/// Chain count by explicit enumeration.
pub fn n_gen_chain_enumerated<C: CountScalar>(profile: &Profile) -> C {
    C::from_usize(enumerate_chains(profile).len()).expect("count fits the scalar")
}
