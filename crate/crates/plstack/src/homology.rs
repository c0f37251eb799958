//! Integral simplicial homology via Smith normal form.
//!
//! Unreduced homology with exact torsion. The orientation convention is
//! fixed by sorted vertex order: the subface omitting position `i` of a
//! sorted k-face carries sign `(-1)^i`.

use std::collections::BTreeMap;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::{Int, IntMatrix};

/// Boundary operator `∂_k`: rows indexed by (k-1)-faces, columns by k-faces,
/// both in lexicographic order.
pub fn boundary_matrix(x: &SimplicialComplex, k: i64) -> Result<IntMatrix> {
    if k < 1 || k > x.dim() {
        return Err(Error::Invalid(format!(
            "boundary operator degree {k} outside 1..={}",
            x.dim()
        )));
    }
    let rows: BTreeMap<Face, usize> = x
        .faces(k - 1)
        .into_iter()
        .enumerate()
        .map(|(i, f)| (f, i))
        .collect();
    let cols: Vec<Face> = x.faces(k).into_iter().collect();
    let mut m = Matrix::new(rows.len(), cols.len());
    for (j, face) in cols.iter().enumerate() {
        for (pos, sub) in face.boundary_ridges().into_iter().enumerate() {
            let i = rows[&sub];
            let sign = if pos % 2 == 0 { 1 } else { -1 };
            m.set(i, j, Int::from(sign));
        }
    }
    Ok(m)
}

/// Betti numbers and torsion invariant factors, one slot per dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyProfile {
    pub betti: Vec<usize>,
    pub torsion: Vec<Vec<Int>>,
}

impl HomologyProfile {
    /// Alternating sum of Betti numbers (torsion does not contribute).
    pub fn euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    pub fn has_torsion(&self) -> bool {
        self.torsion.iter().any(|t| !t.is_empty())
    }

    /// Homology of a point: betti (1, 0, …, 0), no torsion.
    pub fn is_acyclic(&self) -> bool {
        !self.has_torsion()
            && self.betti.first() == Some(&1)
            && self.betti[1..].iter().all(|&b| b == 0)
    }

    /// Homology of the n-sphere. For n = 0 this is betti_0 = 2.
    pub fn matches_sphere(&self, n: i64) -> bool {
        if self.has_torsion() || n < 0 {
            return false;
        }
        let expected: Vec<usize> = if n == 0 {
            vec![2]
        } else {
            let mut e = vec![0; (n + 1) as usize];
            e[0] = 1;
            e[n as usize] = 1;
            e
        };
        let mut actual = self.betti.clone();
        while actual.len() > expected.len() && actual.last() == Some(&0) {
            actual.pop();
        }
        actual == expected
    }
}

/// Unreduced integral homology of a complex.
pub fn homology(x: &SimplicialComplex) -> HomologyProfile {
    let d = x.dim();
    if d < 0 {
        return HomologyProfile {
            betti: Vec::new(),
            torsion: Vec::new(),
        };
    }
    // SNF of each boundary operator, once
    let snfs: Vec<_> = (1..=d)
        .map(|k| boundary_matrix(x, k).expect("degree in range").smith_normal_form())
        .collect();
    let rank = |k: i64| -> usize {
        if k < 1 || k > d {
            0
        } else {
            snfs[(k - 1) as usize].rank
        }
    };
    let mut betti = Vec::new();
    let mut torsion = Vec::new();
    for i in 0..=d {
        let faces_i = x.faces(i).len();
        betti.push(faces_i - rank(i) - rank(i + 1));
        torsion.push(if i < d {
            snfs[i as usize].torsion()
        } else {
            Vec::new()
        });
    }
    HomologyProfile { betti, torsion }
}

/// Outcome of a homology-sphere test.
#[derive(Debug, Clone)]
pub struct SphereCheck {
    pub is_sphere: bool,
    pub profile: HomologyProfile,
}

/// Does the closed pseudomanifold `x` have the homology of the n-sphere?
pub fn is_homology_sphere(x: &SimplicialComplex, n: i64) -> Result<SphereCheck> {
    if !x.is_pure() {
        return Err(Error::NotPure);
    }
    if x.dim() != n {
        return Err(Error::Invalid(format!(
            "complex has dimension {}, expected {n}",
            x.dim()
        )));
    }
    let bd = x.boundary_decomposition()?;
    if !bd.is_closed() {
        return Err(Error::NoBoundaryExpected);
    }
    let profile = homology(x);
    Ok(SphereCheck {
        is_sphere: profile.matches_sphere(n),
        profile,
    })
}
