//! Canonical forms of small vertex-coloured digraphs by individualisation
//! and refinement, used to decide poset isomorphism.

use super::graded::GradedPoset;
use super::natural::NaturalPoset;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// An isomorphism invariant that separates non-isomorphic inputs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u64>);

struct Digraph {
    colour: Vec<u64>,
    adj: Vec<Vec<bool>>,
}

impl Digraph {
    fn n(&self) -> usize {
        self.colour.len()
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        self.adj[u][v] == self.adj[v][u]
            && (0..self.n())
                .filter(|&w| w != u && w != v)
                .all(|w| self.adj[u][w] == self.adj[v][w] && self.adj[w][u] == self.adj[w][v])
    }

    fn refine(&self, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        let n = self.n();
        loop {
            let mut cell_of = vec![0usize; n];
            for (c, cell) in cells.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = c;
                }
            }
            let k = cells.len();
            let signature = |v: usize| {
                let mut sig = vec![0usize; 2 * k];
                for w in 0..n {
                    if self.adj[v][w] {
                        sig[cell_of[w]] += 1;
                    }
                    if self.adj[w][v] {
                        sig[k + cell_of[w]] += 1;
                    }
                }
                sig
            };
            let mut next = Vec::with_capacity(k);
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut tagged: Vec<(Vec<usize>, usize)> =
                    cell.iter().map(|&v| (signature(v), v)).collect();
                tagged.sort();
                let mut start = 0;
                for i in 1..=tagged.len() {
                    if i == tagged.len() || tagged[i].0 != tagged[start].0 {
                        next.push(tagged[start..i].iter().map(|t| t.1).collect());
                        start = i;
                    }
                }
            }
            if next.len() == k {
                return next;
            }
            cells = next;
        }
    }

    fn certificate(&self, cells: &[Vec<usize>]) -> Vec<u64> {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let n = order.len();
        let mut out = vec![n as u64];
        out.extend(order.iter().map(|&v| self.colour[v]));
        let mut word = 0u64;
        let mut used = 0;
        for &a in &order {
            for &b in &order {
                word = word << 1 | self.adj[a][b] as u64;
                used += 1;
                if used == 64 {
                    out.push(word);
                    word = 0;
                    used = 0;
                }
            }
        }
        out.push(word << ((64 - used) % 64));
        out
    }

    fn search(&self, cells: Vec<Vec<usize>>, best: &mut Option<Vec<u64>>) {
        let cells = self.refine(cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let cert = self.certificate(&cells);
            if best.as_ref().is_none_or(|b| cert < *b) {
                *best = Some(cert);
            }
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);
            let mut branch = cells.clone();
            let rest: Vec<usize> = branch[target].iter().copied().filter(|&w| w != v).collect();
            branch[target] = vec![v];
            branch.insert(target + 1, rest);
            self.search(branch, best);
        }
    }

    fn canonical(&self) -> CanonicalForm {
        let mut colours: Vec<u64> = self.colour.clone();
        colours.sort_unstable();
        colours.dedup();
        let cells: Vec<Vec<usize>> = colours
            .iter()
            .map(|&c| (0..self.n()).filter(|&v| self.colour[v] == c).collect())
            .collect();
        if cells.is_empty() {
            return CanonicalForm(vec![0]);
        }
        let mut best = None;
        self.search(cells, &mut best);
        CanonicalForm(best.expect("at least one leaf"))
    }
}

/// Posets that can be put in canonical form.
pub trait Canonical {
    fn element_count(&self) -> usize;
    #[doc(hidden)]
    fn digraph(&self) -> (Vec<u64>, Vec<Vec<bool>>);

    fn canonical_form(&self, limits: &Limits) -> Result<CanonicalForm> {
        let n = self.element_count();
        if n > limits.iso_n {
            return Err(Error::guard("isomorphism test size", limits.iso_n, n));
        }
        let (colour, adj) = self.digraph();
        Ok(Digraph { colour, adj }.canonical())
    }
}

impl Canonical for GradedPoset {
    fn element_count(&self) -> usize {
        self.len()
    }

    fn digraph(&self) -> (Vec<u64>, Vec<Vec<bool>>) {
        let n = self.len();
        let mut adj = vec![vec![false; n]; n];
        for &(a, b) in self.covers() {
            adj[a][b] = true;
        }
        (self.ranks().iter().map(|&r| r as u64).collect(), adj)
    }
}

impl Canonical for NaturalPoset {
    fn element_count(&self) -> usize {
        self.len()
    }

    fn digraph(&self) -> (Vec<u64>, Vec<Vec<bool>>) {
        let n = self.len();
        let adj = (0..n)
            .map(|a| (0..n).map(|b| self.lt0(a, b)).collect())
            .collect();
        (vec![0; n], adj)
    }
}

/// Exact isomorphism test (rank-preserving for graded posets).
pub fn are_isomorphic<P: Canonical>(a: &P, b: &P, limits: &Limits) -> Result<bool> {
    if a.element_count() != b.element_count() {
        return Ok(false);
    }
    Ok(a.canonical_form(limits)? == b.canonical_form(limits)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::q_from_commuting_word;

    #[test]
    fn natural_posets() {
        let l = Limits::default();
        let v = NaturalPoset::from_relations(3, &[(1, 3), (2, 3)]).unwrap();
        let v2 = NaturalPoset::from_relations(3, &[(1, 2), (1, 3)]).unwrap();
        assert!(!are_isomorphic(&v, &v2, &l).unwrap());
        let a = NaturalPoset::from_relations(4, &[(1, 3), (2, 4)]).unwrap();
        let b = NaturalPoset::from_relations(4, &[(1, 4), (2, 3)]).unwrap();
        assert!(are_isomorphic(&a, &b, &l).unwrap());
        let c = NaturalPoset::from_relations(4, &[(1, 3), (1, 4), (2, 4)]).unwrap();
        assert!(!are_isomorphic(&a, &c, &l).unwrap());
        assert!(are_isomorphic(
            &NaturalPoset::antichain(12),
            &NaturalPoset::antichain(12),
            &l
        )
        .unwrap());
        let q = q_from_commuting_word(6).unwrap();
        let (r, _) = NaturalPoset::naturalize(
            6,
            &q.relations()
                .iter()
                .map(|&(x, y)| (7 - y, 7 - x))
                .collect::<Vec<_>>(),
        )
        .unwrap();
        // Q_n is self-dual
        assert!(are_isomorphic(&q, &r, &l).unwrap());
    }

    #[test]
    fn graded_posets() {
        let l = Limits::default();
        let b2 = GradedPoset::from_levels(vec![0, 1, 1, 2], vec![(0, 1), (0, 2), (1, 3), (2, 3)])
            .unwrap();
        assert!(!are_isomorphic(&b2, &GradedPoset::chain(3), &l).unwrap());
        let renamed =
            GradedPoset::from_levels(vec![2, 1, 0, 1], vec![(2, 1), (2, 3), (1, 0), (3, 0)])
                .unwrap();
        assert!(are_isomorphic(&b2, &renamed, &l).unwrap());
        let tight = Limits { iso_n: 3, ..l };
        assert!(are_isomorphic(&b2, &renamed, &tight)
            .unwrap_err()
            .is_guard());
    }
}
