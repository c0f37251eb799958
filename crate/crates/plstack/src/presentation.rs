//! Finite group presentations: perfectness and balance via the exponent
//! matrix, product presentations, and presentation-complex homology both
//! cellular (from the exponent matrix) and simplicial (via an honest
//! triangulation of the 2-complex).

use std::collections::BTreeMap;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::{homology, HomologyProfile};
use crate::matrix::Matrix;
use crate::{Int, IntMatrix};

/// One letter of a relator word: a generator index and an inversion flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

/// A freely reduced word in the generators.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Word {
        let mut stack: Vec<Letter> = Vec::new();
        for l in letters {
            match stack.last() {
                Some(top) if top.gen == l.gen && top.inverse != l.inverse => {
                    stack.pop();
                }
                _ => stack.push(l),
            }
        }
        Word(stack)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Signed exponent sum per generator.
    pub fn exponent_sums(&self, gens: usize) -> Vec<i64> {
        let mut sums = vec![0i64; gens];
        for l in &self.0 {
            sums[l.gen] += if l.inverse { -1 } else { 1 };
        }
        sums
    }

    /// Rotate the word by `n` letters (cyclic permutation).
    pub fn rotated(&self, n: usize) -> Word {
        if self.0.is_empty() {
            return self.clone();
        }
        let n = n % self.0.len();
        let mut letters = self.0[n..].to_vec();
        letters.extend_from_slice(&self.0[..n]);
        Word::new(letters)
    }
}

/// Generators and freely reduced relator words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl GroupPresentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let g = generators.len();
        for (i, r) in relators.iter().enumerate() {
            if let Some(l) = r.letters().iter().find(|l| l.gen >= g) {
                return Err(Error::UnknownGenerator(format!(
                    "relator {i} uses generator #{}",
                    l.gen
                )));
            }
        }
        Ok(GroupPresentation {
            generators,
            relators,
        })
    }

    /// Parse from the single-letter alphabet: lowercase is a generator,
    /// uppercase its inverse.
    pub fn parse(generators: &[&str], relators: &[&str]) -> Result<Self> {
        let gens: Vec<String> = generators.iter().map(|s| s.to_string()).collect();
        let mut index = BTreeMap::new();
        for (i, name) in gens.iter().enumerate() {
            let mut chars = name.chars();
            let (Some(c), None) = (chars.next(), chars.next()) else {
                return Err(Error::Parse(format!(
                    "generator {name:?} is not a single letter"
                )));
            };
            if !c.is_ascii_lowercase() {
                return Err(Error::Parse(format!(
                    "generator {name:?} must be a lowercase ascii letter"
                )));
            }
            if index.insert(c, i).is_some() {
                return Err(Error::Parse(format!("generator {name:?} declared twice")));
            }
        }
        let mut words = Vec::with_capacity(relators.len());
        for r in relators {
            let mut letters = Vec::with_capacity(r.len());
            for c in r.chars() {
                let lower = c.to_ascii_lowercase();
                let Some(&gen) = index.get(&lower) else {
                    return Err(Error::UnknownGenerator(c.to_string()));
                };
                letters.push(Letter {
                    gen,
                    inverse: c.is_ascii_uppercase(),
                });
            }
            words.push(Word::new(letters));
        }
        GroupPresentation::new(gens, words)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Render a relator back into the case-encoded alphabet.
    pub fn relator_string(&self, r: &Word) -> String {
        r.letters()
            .iter()
            .map(|l| {
                let name = &self.generators[l.gen];
                if l.inverse {
                    name.to_ascii_uppercase()
                } else {
                    name.clone()
                }
            })
            .collect()
    }

    /// Rows are relators, columns generators, entries signed exponent sums.
    pub fn exponent_matrix(&self) -> IntMatrix {
        let mut m = Matrix::new(self.relators.len(), self.generators.len());
        for (i, r) in self.relators.iter().enumerate() {
            for (j, e) in r.exponent_sums(self.generators.len()).into_iter().enumerate() {
                if e != 0 {
                    m.set(i, j, Int::from(e));
                }
            }
        }
        m
    }

    pub fn abelianization(&self) -> AbelianizationResult {
        let snf = self.exponent_matrix().smith_normal_form();
        AbelianizationResult {
            free_rank: self.generators.len() - snf.rank,
            torsion: snf.torsion(),
        }
    }

    pub fn is_perfect(&self) -> bool {
        self.abelianization().is_trivial()
    }

    pub fn is_balanced(&self) -> bool {
        self.generators.len() == self.relators.len()
    }

    /// Product presentation: both generator sets (the second renamed away
    /// from the first), both relator sets, plus all mixed commutators.
    pub fn product(&self, other: &GroupPresentation) -> Result<GroupPresentation> {
        let mut generators = self.generators.clone();
        let mut rename = Vec::with_capacity(other.generators.len());
        for name in &other.generators {
            let fresh = if generators.contains(name) {
                ('a'..='z')
                    .map(|c| c.to_string())
                    .find(|c| !generators.contains(c) && !other.generators.contains(c))
                    .ok_or_else(|| {
                        Error::Invalid("single-letter generator alphabet exhausted".into())
                    })?
            } else {
                name.clone()
            };
            rename.push(generators.len());
            generators.push(fresh);
        }
        let mut relators = self.relators.clone();
        for r in &other.relators {
            relators.push(Word::new(r.letters().iter().map(|l| Letter {
                gen: rename[l.gen],
                inverse: l.inverse,
            })));
        }
        for x in 0..self.generators.len() {
            for &y in &rename {
                relators.push(Word::new([
                    Letter { gen: x, inverse: false },
                    Letter { gen: y, inverse: false },
                    Letter { gen: x, inverse: true },
                    Letter { gen: y, inverse: true },
                ]));
            }
        }
        GroupPresentation::new(generators, relators)
    }

    /// n-fold product of the presentation with itself; n = 1 is a clone.
    pub fn power(&self, n: u32) -> Result<GroupPresentation> {
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }
}

/// The abelian group `Z^free_rank ⊕ Z/d_1 ⊕ …`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianizationResult {
    pub free_rank: usize,
    pub torsion: Vec<Int>,
}

impl AbelianizationResult {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

/// Homology of the presentation 2-complex from its cellular chain complex
/// `Z^r --∂₂--> Z^g --0--> Z`, with ∂₂ the transposed exponent matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellularHomology {
    pub h0: AbelianizationResult,
    pub h1: AbelianizationResult,
    /// H₂ is free (a kernel inside Z^r); only its rank is needed.
    pub h2_free_rank: usize,
}

pub fn presentation_cellular_homology(p: &GroupPresentation) -> CellularHomology {
    let snf = p.exponent_matrix().smith_normal_form();
    CellularHomology {
        h0: AbelianizationResult {
            free_rank: 1,
            torsion: Vec::new(),
        },
        h1: AbelianizationResult {
            free_rank: p.generators().len() - snf.rank,
            torsion: snf.torsion(),
        },
        h2_free_rank: p.relators().len() - snf.rank,
    }
}

impl CellularHomology {
    /// Compare against a simplicial homology profile of the same complex.
    pub fn matches_profile(&self, profile: &HomologyProfile) -> bool {
        let betti_at = |i: usize| profile.betti.get(i).copied().unwrap_or(0);
        let torsion_at = |i: usize| {
            profile
                .torsion
                .get(i)
                .map(Vec::as_slice)
                .unwrap_or(&[])
                .to_vec()
        };
        betti_at(0) == self.h0.free_rank
            && torsion_at(0).is_empty()
            && betti_at(1) == self.h1.free_rank
            && torsion_at(1) == self.h1.torsion
            && betti_at(2) == self.h2_free_rank
            && torsion_at(2).is_empty()
            && profile.betti.iter().skip(3).all(|&b| b == 0)
    }
}

/// Triangulated presentation complex.
///
/// The wedge point is vertex 0 and each generator loop is subdivided into
/// three edges. Each relator of length L contributes a 3L-gon: the polygon
/// is coned from a private apex, and every cone triangle is split once more
/// through midpoints on its spokes. All interior vertices are private to
/// their relator, so gluing the boundary walk onto the loops identifies no
/// two distinct simplices, and the quotient is a genuine simplicial complex
/// whose homology matches the cellular computation.
pub fn presentation_complex_simplicial(p: &GroupPresentation) -> Result<SimplicialComplex> {
    let g = p.generators().len();
    let wedge = 0u32;
    let loop_out = |i: usize| 1 + 2 * i as u32; // first interior vertex of loop i
    let loop_in = |i: usize| 2 + 2 * i as u32; // second interior vertex of loop i

    let mut faces: Vec<Face> = Vec::new();
    if g == 0 {
        faces.push(Face::of(&[wedge]));
    }
    for i in 0..g {
        faces.push(Face::of(&[wedge, loop_out(i)]));
        faces.push(Face::of(&[loop_out(i), loop_in(i)]));
        faces.push(Face::of(&[loop_in(i), wedge]));
    }

    let mut next = 1 + 2 * g as u32;
    for (ri, relator) in p.relators().iter().enumerate() {
        if relator.is_empty() {
            return Err(Error::EmptyRelator(ri));
        }
        // boundary walk of the polygon through the subdivided loops
        let mut walk: Vec<u32> = vec![wedge];
        for l in relator.letters() {
            if l.inverse {
                walk.push(loop_in(l.gen));
                walk.push(loop_out(l.gen));
            } else {
                walk.push(loop_out(l.gen));
                walk.push(loop_in(l.gen));
            }
            walk.push(wedge);
        }
        let steps = walk.len() - 1; // 3L
        let apex = next;
        let mids: Vec<u32> = (apex + 1..apex + 1 + steps as u32).collect();
        next = apex + 1 + steps as u32;
        for s in 0..steps {
            let (u, u_next) = (walk[s], walk[s + 1]);
            let (m, m_next) = (mids[s], mids[(s + 1) % steps]);
            faces.push(Face::of(&[apex, m, m_next]));
            faces.push(Face::new([m, m_next, u_next])?);
            faces.push(Face::new([m, u, u_next])?);
        }
    }
    Ok(SimplicialComplex::from_facets(faces))
}

/// Simplicial homology of the triangulated presentation complex.
pub fn presentation_complex_homology(p: &GroupPresentation) -> Result<HomologyProfile> {
    Ok(homology(&presentation_complex_simplicial(p)?))
}
