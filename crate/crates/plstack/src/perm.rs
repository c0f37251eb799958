//! Finite permutation groups as explicit element tables, and brute-force
//! counting of homomorphisms from a presentation into such a table.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::presentation::GroupPresentation;

/// A permutation of `0..degree`, stored as its image list.
pub type Perm = Vec<usize>;

fn compose(p: &Perm, q: &Perm) -> Perm {
    // (p ∘ q)(x) = p(q(x))
    q.iter().map(|&x| p[x]).collect()
}

/// A finite permutation group given by its full element list.
///
/// Closure under composition and the presence of the identity are verified
/// at construction; for permutations this is enough to be a group.
#[derive(Debug, Clone)]
pub struct PermutationGroupTable {
    degree: usize,
    elements: Vec<Perm>,
    identity: usize,
    /// mult[i][j] = index of elements[i] ∘ elements[j]
    mult: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

impl PermutationGroupTable {
    pub fn from_elements(degree: usize, elements: Vec<Perm>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::Invalid("element list is empty".into()));
        }
        let mut index: HashMap<Perm, usize> = HashMap::with_capacity(elements.len());
        for (i, p) in elements.iter().enumerate() {
            let mut seen = vec![false; degree];
            if p.len() != degree || p.iter().any(|&x| x >= degree || std::mem::replace(&mut seen[x], true)) {
                return Err(Error::Invalid(format!(
                    "element {i} is not a permutation of 0..{degree}"
                )));
            }
            if index.insert(p.clone(), i).is_some() {
                return Err(Error::Invalid(format!("element {i} is a duplicate")));
            }
        }
        let id: Perm = (0..degree).collect();
        let Some(&identity) = index.get(&id) else {
            return Err(Error::Invalid("identity permutation missing".into()));
        };
        let n = elements.len();
        let mut mult = vec![vec![0usize; n]; n];
        for i in 0..n {
            for j in 0..n {
                let prod = compose(&elements[i], &elements[j]);
                let Some(&k) = index.get(&prod) else {
                    return Err(Error::Invalid(format!(
                        "not closed under composition: {i} ∘ {j} is missing"
                    )));
                };
                mult[i][j] = k;
            }
        }
        let mut inverse = vec![0usize; n];
        for i in 0..n {
            inverse[i] = (0..n)
                .find(|&j| mult[i][j] == identity)
                .expect("finite closed permutation sets have inverses");
        }
        Ok(PermutationGroupTable {
            degree,
            elements,
            identity,
            mult,
            inverse,
        })
    }

    /// Close a generating set under composition.
    pub fn generate(degree: usize, generators: &[Perm]) -> Result<Self> {
        let id: Perm = (0..degree).collect();
        let mut elements = vec![id];
        let mut seen: HashMap<Perm, usize> = HashMap::new();
        seen.insert(elements[0].clone(), 0);
        let mut frontier = 0;
        while frontier < elements.len() {
            let current = elements[frontier].clone();
            frontier += 1;
            for g in generators {
                if g.len() != degree {
                    return Err(Error::Invalid("generator degree mismatch".into()));
                }
                let next = compose(g, &current);
                if !seen.contains_key(&next) {
                    seen.insert(next.clone(), elements.len());
                    elements.push(next);
                }
            }
        }
        elements.sort();
        Self::from_elements(degree, elements)
    }

    /// The direct product, acting on the disjoint union of the two point
    /// sets.
    pub fn direct_product(&self, other: &PermutationGroupTable) -> PermutationGroupTable {
        let degree = self.degree + other.degree;
        let mut elements = Vec::with_capacity(self.order() * other.order());
        for p in &self.elements {
            for q in &other.elements {
                let mut e: Perm = Vec::with_capacity(degree);
                e.extend(p.iter().copied());
                e.extend(q.iter().map(|&x| x + self.degree));
                elements.push(e);
            }
        }
        Self::from_elements(degree, elements).expect("product of groups is a group")
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn identity_index(&self) -> usize {
        self.identity
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }
}

/// Count homomorphisms from the presented group into the table by
/// backtracking over generator images, pruning with every relator whose
/// support is already assigned. The trivial homomorphism is included.
///
/// `budget` caps the number of relator evaluations; exceeding it aborts
/// with the worst-case requirement in the error.
pub fn count_homomorphisms(
    p: &GroupPresentation,
    table: &PermutationGroupTable,
    budget: u64,
) -> Result<u64> {
    let g = p.generators().len();
    let n = table.order();
    // relators bucketed by the largest generator they mention
    let mut by_depth: Vec<Vec<&crate::presentation::Word>> = vec![Vec::new(); g + 1];
    for r in p.relators() {
        let depth = r
            .letters()
            .iter()
            .map(|l| l.gen + 1)
            .max()
            .unwrap_or(0);
        by_depth[depth].push(r);
    }
    // empty relators hold in any group
    let worst_case: u128 = (0..=g)
        .map(|d| by_depth[d].len() as u128 * (n as u128).saturating_pow(d as u32))
        .sum();

    struct Search<'a> {
        table: &'a PermutationGroupTable,
        by_depth: Vec<Vec<&'a crate::presentation::Word>>,
        gens: usize,
        images: Vec<usize>,
        evals: u64,
        budget: u64,
        worst_case: u128,
        count: u64,
    }

    impl Search<'_> {
        fn word_holds(&mut self, w: &crate::presentation::Word) -> Result<bool> {
            self.evals += 1;
            if self.evals > self.budget {
                return Err(Error::BudgetExceeded {
                    budget: self.budget,
                    required: self.worst_case,
                });
            }
            let mut acc = self.table.identity_index();
            for l in w.letters() {
                let img = self.images[l.gen];
                let factor = if l.inverse {
                    self.table.inverse[img]
                } else {
                    img
                };
                acc = self.table.mult[acc][factor];
            }
            Ok(acc == self.table.identity_index())
        }

        fn descend(&mut self, depth: usize) -> Result<()> {
            if depth == self.gens {
                self.count += 1;
                return Ok(());
            }
            for e in 0..self.table.order() {
                self.images.push(e);
                let mut ok = true;
                for w in self.by_depth[depth + 1].clone() {
                    if !self.word_holds(w)? {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    self.descend(depth + 1)?;
                }
                self.images.pop();
            }
            Ok(())
        }
    }

    // depth-0 relators are empty words: identically satisfied
    let mut search = Search {
        table,
        by_depth,
        gens: g,
        images: Vec::with_capacity(g),
        evals: 0,
        budget,
        worst_case,
        count: 0,
    };
    search.descend(0)?;
    Ok(search.count)
}

pub const DEFAULT_HOM_BUDGET: u64 = 100_000_000;

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> PermutationGroupTable {
        PermutationGroupTable::from_elements(2, vec![vec![0, 1], vec![1, 0]]).unwrap()
    }

    fn z3() -> PermutationGroupTable {
        PermutationGroupTable::generate(3, &[vec![1, 2, 0]]).unwrap()
    }

    fn trivial() -> PermutationGroupTable {
        PermutationGroupTable::from_elements(1, vec![vec![0]]).unwrap()
    }

    fn a5_pres() -> GroupPresentation {
        GroupPresentation::parse(&["a", "b"], &["aa", "bbb", "ababababab"]).unwrap()
    }

    #[test]
    fn table_validation() {
        assert!(PermutationGroupTable::from_elements(2, vec![vec![1, 0]]).is_err()); // no identity
        assert!(PermutationGroupTable::from_elements(2, vec![vec![0, 0]]).is_err()); // not a perm
        // {id, 3-cycle} is not closed
        assert!(PermutationGroupTable::from_elements(
            3,
            vec![vec![0, 1, 2], vec![1, 2, 0]]
        )
        .is_err());
        assert_eq!(z3().order(), 3);
    }

    #[test]
    fn alternating_group_has_order_sixty() {
        let a5 = PermutationGroupTable::generate(5, &[vec![1, 2, 0, 3, 4], vec![1, 2, 3, 4, 0]])
            .unwrap();
        assert_eq!(a5.order(), 60);
    }

    #[test]
    fn hom_count_into_trivial_group_is_one() {
        assert_eq!(count_homomorphisms(&a5_pres(), &trivial(), 1_000).unwrap(), 1);
    }

    #[test]
    fn hom_count_a5_into_z2_is_one() {
        // b^3 = e forces b = e in Z/2; then (ab)^5 = a forces a = e
        assert_eq!(count_homomorphisms(&a5_pres(), &z2(), 10_000).unwrap(), 1);
    }

    #[test]
    fn hom_count_is_multiplicative_over_product_targets() {
        let p = GroupPresentation::parse(&["a", "b"], &["aaa", "bb", "abab"]).unwrap();
        let t1 = z2();
        let t2 = z3();
        let prod = t1.direct_product(&t2);
        assert_eq!(prod.order(), 6);
        let c1 = count_homomorphisms(&p, &t1, 100_000).unwrap();
        let c2 = count_homomorphisms(&p, &t2, 100_000).unwrap();
        let c = count_homomorphisms(&p, &prod, 100_000).unwrap();
        assert_eq!(c, c1 * c2);
    }

    #[test]
    fn budget_exhaustion_reports_worst_case() {
        match count_homomorphisms(&a5_pres(), &z2(), 2) {
            Err(Error::BudgetExceeded { budget: 2, required }) => {
                assert!(required > 0);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn free_presentation_counts_all_tuples() {
        let free = GroupPresentation::parse(&["a", "b"], &[]).unwrap();
        assert_eq!(count_homomorphisms(&free, &z3(), 1_000).unwrap(), 9);
    }
}
