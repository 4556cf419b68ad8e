//! Canonical labeling of finite topologies up to homeomorphism.
//!
//! A topology is encoded by its minimal-neighbourhood relation `M[x][y] = (y ∈ U_x)`,
//! a preorder. Points are relabeled in the order that makes the relation
//! lexicographically least when read block by block: block `k` holds the
//! entries between the `k`-th chosen point and every earlier one. Each block
//! depends only on the points chosen so far, so only candidates producing the
//! least next block need to be explored. Points with identical relations to
//! everything else are interchangeable and explored once.

use crate::space::FiniteSpace;

/// A byte string equal for two spaces iff they are homeomorphic.
///
/// Layout: the ground size, then every open set of the canonically relabeled
/// space in increasing order, each as `ceil(n / 8)` little-endian bytes.
pub fn canonical_form(space: &FiniteSpace) -> Vec<u8> {
    let relabeled = canonical_relabeling(space);
    let n = relabeled.n();
    let width = n.div_ceil(8);
    let mut out = Vec::with_capacity(1 + width * relabeled.opens().len());
    out.push(n as u8);
    for s in relabeled.opens() {
        out.extend_from_slice(&s.bits().to_le_bytes()[..width]);
    }
    out
}

/// The canonical representative of `space`'s homeomorphism class.
pub fn canonical_relabeling(space: &FiniteSpace) -> FiniteSpace {
    let n = space.n();
    let hoods: Vec<u64> = (0..n).map(|x| space.minimal_neighborhood(x).bits()).collect();
    let rel = |x: usize, y: usize| (hoods[x] >> y) & 1 == 1;

    let mut search = Search {
        n,
        rel: &rel,
        best: None,
        order: Vec::with_capacity(n),
        code: Vec::with_capacity(n),
    };
    let remaining: Vec<usize> = (0..n).collect();
    search.descend(&remaining);
    let (_, order) = search.best.expect("at least one labeling");

    let mut perm = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    space.relabel(&perm)
}

struct Search<'a, F: Fn(usize, usize) -> bool> {
    n: usize,
    rel: &'a F,
    best: Option<(Vec<u128>, Vec<usize>)>,
    order: Vec<usize>,
    code: Vec<u128>,
}

impl<F: Fn(usize, usize) -> bool> Search<'_, F> {
    fn block(&self, cand: usize) -> u128 {
        let mut v = 0u128;
        for &prev in &self.order {
            v = (v << 2) | (((self.rel)(cand, prev) as u128) << 1) | (self.rel)(prev, cand) as u128;
        }
        v
    }

    fn twins(&self, a: usize, b: usize) -> bool {
        (self.rel)(a, b) == (self.rel)(b, a)
            && (0..self.n)
                .filter(|&z| z != a && z != b)
                .all(|z| (self.rel)(a, z) == (self.rel)(b, z) && (self.rel)(z, a) == (self.rel)(z, b))
    }

    fn descend(&mut self, remaining: &[usize]) {
        if remaining.is_empty() {
            let better = match &self.best {
                None => true,
                Some((code, _)) => self.code < *code,
            };
            if better {
                self.best = Some((self.code.clone(), self.order.clone()));
            }
            return;
        }
        let depth = self.order.len();
        if let Some((best, _)) = &self.best {
            if self.code[..] > best[..depth] {
                return;
            }
        }
        let blocks: Vec<u128> = remaining.iter().map(|&c| self.block(c)).collect();
        let least = *blocks.iter().min().expect("non-empty");
        let mut tried: Vec<usize> = Vec::new();
        for (i, &cand) in remaining.iter().enumerate() {
            if blocks[i] != least || tried.iter().any(|&t| self.twins(t, cand)) {
                continue;
            }
            tried.push(cand);
            let rest: Vec<usize> = remaining.iter().copied().filter(|&r| r != cand).collect();
            self.order.push(cand);
            self.code.push(least);
            self.descend(&rest);
            self.order.pop();
            self.code.pop();
        }
    }
}

/// All `n!` permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).expect("pivot");
        current.swap(i - 1, j);
        current[i..].reverse();
    }
    out
}
