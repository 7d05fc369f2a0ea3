//! Direct validation of chains from obstruction placements, counting
//! obstructions (`n`) rather than homological degree (`n + 1`).

use std::collections::{BTreeSet, HashMap};

use super::ObstructionSet;
use crate::word::Word;

/// Obstruction `k` occupies letters `starts[k]..=ends[k]`, 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Placement {
    pub starts: Vec<usize>,
    pub ends: Vec<usize>,
}

/// Every placement making `w` an `n`-prechain: `n` obstructions with
/// `1 = a₁ < a₂ ≤ b₁ < a₃ ≤ b₂ < … < aₙ ≤ bₙ₋₁ < bₙ = ℓ(w)`.
pub fn prechain_placements(w: &Word, n: usize, obs: &ObstructionSet) -> Vec<Placement> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let occ: Vec<(usize, usize)> =
        obs.occurrences_in(w).into_iter().map(|(s, e)| (s + 1, e)).collect();
    let mut stack = Vec::with_capacity(n);
    search(&occ, n, w.len(), &mut stack, &mut out, usize::MAX);
    out
}

/// Depth-first search over occurrence sequences; stops once `limit`
/// placements are found.
fn search(
    occ: &[(usize, usize)],
    n: usize,
    len: usize,
    stack: &mut Vec<(usize, usize)>,
    out: &mut Vec<Placement>,
    limit: usize,
) {
    if out.len() >= limit {
        return;
    }
    let k = stack.len();
    if k == n {
        if stack[k - 1].1 == len {
            out.push(Placement {
                starts: stack.iter().map(|o| o.0).collect(),
                ends: stack.iter().map(|o| o.1).collect(),
            });
        }
        return;
    }
    for &(a, b) in occ {
        let ok = if k == 0 {
            a == 1
        } else {
            let (pa, pb) = stack[k - 1];
            a > pa && a <= pb && b > pb && (k < 2 || a > stack[k - 2].1)
        };
        if ok {
            stack.push((a, b));
            search(occ, n, len, stack, out, limit);
            stack.pop();
        }
    }
}

pub fn is_prechain(w: &Word, n: usize, obs: &ObstructionSet) -> bool {
    if n == 0 {
        return false;
    }
    let occ: Vec<(usize, usize)> =
        obs.occurrences_in(w).into_iter().map(|(s, e)| (s + 1, e)).collect();
    let mut out = Vec::new();
    search(&occ, n, w.len(), &mut Vec::new(), &mut out, 1);
    !out.is_empty()
}

/// The placements witnessing that `w` is an `n`-chain: `n`-prechain
/// placements such that no prefix `x₁⋯xᵢ` with `i < b_m` is an
/// `m`-prechain. A genuine chain has exactly one.
pub fn chain_placements(w: &Word, n: usize, obs: &ObstructionSet) -> Vec<Placement> {
    let mut memo: HashMap<(usize, usize), bool> = HashMap::new();
    let mut prefix_is_prechain = |i: usize, m: usize| {
        *memo.entry((i, m)).or_insert_with(|| is_prechain(&w.prefix(i), m, obs))
    };
    prechain_placements(w, n, obs)
        .into_iter()
        .filter(|p| (1..=n).all(|m| (1..p.ends[m - 1]).all(|i| !prefix_is_prechain(i, m))))
        .collect()
}

/// `Some(placement)` when `w` is an `n`-chain.
pub fn is_chain_top_down(w: &Word, n: usize, obs: &ObstructionSet) -> Option<Placement> {
    chain_placements(w, n, obs).into_iter().next()
}

/// Every `n`-prechain word, built by laying obstructions left to right.
/// Finite because each step adds between one letter and the length of the
/// longest obstruction.
pub fn prechain_words(obs: &ObstructionSet, n: usize) -> BTreeSet<Word> {
    if n == 0 {
        return BTreeSet::new();
    }
    let words: Vec<&Word> = obs.words().collect();
    // (word, 0-based start of the last obstruction, end of the one before it)
    let mut layer: Vec<(Word, usize, usize)> = words.iter().map(|o| ((*o).clone(), 0, 0)).collect();
    for _ in 1..n {
        let mut next = Vec::new();
        for (w, last_start, before_end) in &layer {
            let last_end = w.len();
            for o in &words {
                for start in (last_start + 1).max(*before_end)..last_end {
                    if start + o.len() <= last_end
                        || w.letters()[start..] != o.letters()[..last_end - start]
                    {
                        continue;
                    }
                    next.push((w.concat(&o.suffix_from(last_end - start)), start, last_end));
                }
            }
        }
        layer = next;
    }
    layer.into_iter().map(|(w, ..)| w).collect()
}
