//! f-, h-, and g-vectors, k-stackedness, and the g₃ boundary check.
//!
//! Conventions, fixed once: a d-dimensional complex uses `d+1` in the
//! h-transform binomials (facet cardinality), so the boundary of a simplex
//! has the all-ones h-vector. The g-vector is reported both truncated to
//! ⌊(d+1)/2⌋ and as the full difference sequence.

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::num::{binomial, IntScalar};
use crate::Int;

/// f-vector including `f_{-1} = 1`: one entry per dimension `-1..=d`.
pub fn f_vector(x: &SimplicialComplex) -> Vec<Int> {
    (-1..=x.dim())
        .map(|k| Int::from(x.faces(k).len()))
        .collect()
}

/// h-vector of a pure d-dimensional complex from its f-vector:
/// `h_j = Σ_{i=0..j} (-1)^{j-i} C(d+1-i, j-i) f_{i-1}`.
pub fn h_vector<T: IntScalar>(f: &[T], d: i64) -> Result<Vec<T>> {
    if f.len() as i64 != d + 2 {
        return Err(Error::BadVector(format!(
            "f-vector has {} entries, expected {} for dimension {d}",
            f.len(),
            d + 2
        )));
    }
    let mut h = Vec::with_capacity((d + 2) as usize);
    for j in 0..=d + 1 {
        let mut acc = T::zero();
        for i in 0..=j {
            let c: T = binomial(d + 1 - i, j - i);
            let term = c * f[i as usize].clone();
            acc = if (j - i) % 2 == 0 { acc + term } else { acc - term };
        }
        h.push(acc);
    }
    Ok(h)
}

/// g-vector: `g_0 = h_0`, `g_i = h_i - h_{i-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GVector<T> {
    /// Truncated to index ⌊(d+1)/2⌋, the range used for closed manifolds.
    pub truncated: Vec<T>,
    /// The full difference sequence, same length as h.
    pub full: Vec<T>,
}

pub fn g_vector<T: IntScalar>(h: &[T]) -> GVector<T> {
    assert!(!h.is_empty(), "h-vector cannot be empty");
    let d = h.len() as i64 - 2;
    let mut full = vec![h[0].clone()];
    for i in 1..h.len() {
        full.push(h[i].clone() - h[i - 1].clone());
    }
    let cut = ((d + 1).div_euclid(2) + 1).clamp(1, full.len() as i64) as usize;
    GVector {
        truncated: full[..cut].to_vec(),
        full,
    }
}

/// f-, h-, and g-vectors of a complex, bundled with its dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceVectorBundle {
    pub complex_dim: i64,
    pub f: Vec<Int>,
    pub h: Vec<Int>,
    pub g: GVector<Int>,
}

impl FaceVectorBundle {
    pub fn of(x: &SimplicialComplex) -> FaceVectorBundle {
        let d = x.dim();
        let f = f_vector(x);
        let h = h_vector(&f, d).expect("f-vector length matches dim by construction");
        let g = g_vector(&h);
        FaceVectorBundle {
            complex_dim: d,
            f,
            h,
            g,
        }
    }
}

/// Outcome of a k-stackedness query on a complex with boundary.
#[derive(Debug, Clone)]
pub struct StackednessReport {
    pub k: i64,
    pub complex_dim: i64,
    /// True iff no interior face has dimension d-k-1 (equivalently, by the
    /// up-set property of interior faces, dimension <= d-k-1).
    pub stacked: bool,
    /// Smallest k for which the property holds. Always present for a pure
    /// complex with boundary (its facets are interior).
    pub k_min: Option<i64>,
    /// Interior faces of dimension <= d-k-1, the offending witnesses.
    pub witnesses: Vec<Face>,
}

/// Does every face of dimension `d-k-1` lie on the boundary?
pub fn is_k_stacked(s: &SimplicialComplex, k: i64) -> Result<StackednessReport> {
    let d = s.dim();
    let bd = s.boundary_decomposition()?;
    if bd.is_closed() {
        return Err(Error::NoBoundary);
    }
    if !(0..=d).contains(&k) {
        return Err(Error::Invalid(format!(
            "stackedness parameter k={k} outside 0..={d}"
        )));
    }
    let target = d - k - 1;
    let witnesses: Vec<Face> = bd
        .interior_faces
        .iter()
        .filter(|f| f.dim() <= target)
        .cloned()
        .collect();
    let k_min = bd.min_interior_dim().map(|m| d - m);
    Ok(StackednessReport {
        k,
        complex_dim: d,
        stacked: witnesses.is_empty(),
        k_min,
        witnesses,
    })
}

/// The boundary g-vector together with the k=2 stackedness flag.
#[derive(Debug, Clone)]
pub struct G3Report {
    pub boundary_dim: i64,
    pub g: Vec<Int>,
    pub g3: Int,
    pub stacked2: bool,
    /// Set when dim(S) < 6, below the regime the check is meant for.
    pub below_theorem_dim: bool,
}

/// g-vector of ∂S plus whether S has no interior faces of dimension d-3.
pub fn g3_boundary_check(s: &SimplicialComplex) -> Result<G3Report> {
    let d = s.dim();
    let bd = s.boundary_decomposition()?;
    if bd.is_closed() {
        return Err(Error::NoBoundary);
    }
    if !bd.boundary.is_closed_pseudomanifold() {
        return Err(Error::Invalid(
            "boundary is not a closed pseudomanifold".into(),
        ));
    }
    let bundle = FaceVectorBundle::of(&bd.boundary);
    let g3 = bundle
        .g
        .full
        .get(3)
        .cloned()
        .unwrap_or_else(|| Int::from(0));
    let stacked2 = is_k_stacked(s, 2)?.stacked;
    Ok(G3Report {
        boundary_dim: bundle.complex_dim,
        g: bundle.g.truncated.clone(),
        g3,
        stacked2,
        below_theorem_dim: d < 6,
    })
}
