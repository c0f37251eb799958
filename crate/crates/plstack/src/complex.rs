//! Abstract simplicial complexes given by their facet lists.
//!
//! A complex is stored as the antichain of its inclusion-maximal faces; the
//! full face poset is derived on demand and memoized. Complexes are immutable
//! after construction, so every operation here is a pure function returning a
//! fresh complex.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use itertools::Itertools;

use crate::error::{Error, Result};

/// A vertex label. Ids need not be contiguous; equality is by id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(pub u32);

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A face: strictly increasing sequence of vertex ids. The empty face
/// (dimension -1) is allowed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Face(Vec<Vertex>);

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().map(|v| v.to_string()).join(","))
    }
}

impl Face {
    /// The empty face, dimension -1.
    pub fn empty() -> Self {
        Face(Vec::new())
    }

    /// Build a face from vertex ids; sorts, rejects duplicates.
    pub fn new(ids: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut vs: Vec<Vertex> = ids.into_iter().map(Vertex).collect();
        vs.sort_unstable();
        if vs.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidFace(format!(
                "duplicate vertex in {:?}",
                vs.iter().map(|v| v.0).collect::<Vec<_>>()
            )));
        }
        Ok(Face(vs))
    }

    /// Convenience constructor for literals known to be duplicate-free.
    pub fn of(ids: &[u32]) -> Self {
        Self::new(ids.iter().copied()).expect("duplicate vertex in face literal")
    }

    pub fn dim(&self) -> i64 {
        self.0.len() as i64 - 1
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn ids(&self) -> Vec<u32> {
        self.0.iter().map(|v| v.0).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Superset test: does `self` contain every vertex of `other`?
    pub fn contains(&self, other: &Face) -> bool {
        if other.0.len() > self.0.len() {
            return false;
        }
        // both sorted: single merge pass
        let mut it = self.0.iter();
        'outer: for v in &other.0 {
            for w in it.by_ref() {
                match w.cmp(v) {
                    std::cmp::Ordering::Less => continue,
                    std::cmp::Ordering::Equal => continue 'outer,
                    std::cmp::Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    pub fn union(&self, other: &Face) -> Face {
        let mut vs: Vec<Vertex> = self.0.iter().chain(&other.0).copied().collect();
        vs.sort_unstable();
        vs.dedup();
        Face(vs)
    }

    /// Set difference `self \ other`.
    pub fn minus(&self, other: &Face) -> Face {
        Face(
            self.0
                .iter()
                .filter(|v| !other.contains_vertex(**v))
                .copied()
                .collect(),
        )
    }

    pub fn with_vertex(&self, v: Vertex) -> Face {
        let mut vs = self.0.clone();
        match vs.binary_search(&v) {
            Ok(_) => {}
            Err(pos) => vs.insert(pos, v),
        }
        Face(vs)
    }

    /// All subfaces of dimension exactly `k` (k = -1 yields the empty face).
    pub fn subfaces(&self, k: i64) -> Vec<Face> {
        if k < -1 || k > self.dim() {
            return Vec::new();
        }
        self.0
            .iter()
            .copied()
            .combinations((k + 1) as usize)
            .map(Face)
            .collect()
    }

    /// The codimension-1 subfaces, each omitting one vertex, in omission order.
    pub fn boundary_ridges(&self) -> Vec<Face> {
        (0..self.0.len())
            .map(|i| {
                let mut vs = self.0.clone();
                vs.remove(i);
                Face(vs)
            })
            .collect()
    }

    /// Every subface, the empty face included.
    pub fn all_subfaces(&self) -> Vec<Face> {
        self.0
            .iter()
            .copied()
            .powerset()
            .map(Face)
            .collect()
    }
}

/// Full face table of a complex, indexed by dimension (offset by one so the
/// empty face sits at slot 0).
#[derive(Debug, Clone, Default)]
struct FaceTable {
    by_dim: Vec<BTreeSet<Face>>,
}

impl FaceTable {
    fn dim_slot(&self, k: i64) -> Option<&BTreeSet<Face>> {
        if k < -1 {
            return None;
        }
        self.by_dim.get((k + 1) as usize)
    }
}

/// An abstract simplicial complex, represented by its facet antichain.
///
/// Two degenerate cases are distinguished: the *empty complex* `{∅}` (one
/// face, the empty one) and the *void complex* (no faces at all). The void
/// complex only ever appears as the boundary of a closed complex.
#[derive(Default)]
pub struct SimplicialComplex {
    facets: BTreeSet<Face>,
    faces: OnceLock<FaceTable>,
    pure: OnceLock<bool>,
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("facets", &self.facets)
            .finish()
    }
}

impl Clone for SimplicialComplex {
    fn clone(&self) -> Self {
        let out = SimplicialComplex {
            facets: self.facets.clone(),
            faces: OnceLock::new(),
            pure: OnceLock::new(),
        };
        if let Some(t) = self.faces.get() {
            let _ = out.faces.set(t.clone());
        }
        if let Some(p) = self.pure.get() {
            let _ = out.pure.set(*p);
        }
        out
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    /// The complex with no faces at all.
    pub fn void() -> Self {
        SimplicialComplex::default()
    }

    /// The complex whose only face is the empty face.
    pub fn empty() -> Self {
        Self::from_facet_antichain([Face::empty()])
    }

    /// Build from an arbitrary family of faces: dominated faces are dropped,
    /// exact duplicates collapse. An empty family yields the empty complex.
    pub fn from_facets(faces: impl IntoIterator<Item = Face>) -> Self {
        let mut by_size: Vec<Face> = faces.into_iter().collect();
        by_size.sort_by_key(|f| std::cmp::Reverse(f.0.len()));
        let mut kept: Vec<Face> = Vec::new();
        for f in by_size {
            if !kept.iter().any(|g| g.contains(&f)) {
                kept.push(f);
            }
        }
        if kept.is_empty() {
            kept.push(Face::empty());
        }
        Self::from_facet_antichain(kept)
    }

    /// Wrap an already-maximal facet family without normalization.
    fn from_facet_antichain(facets: impl IntoIterator<Item = Face>) -> Self {
        SimplicialComplex {
            facets: facets.into_iter().collect(),
            faces: OnceLock::new(),
            pure: OnceLock::new(),
        }
    }

    /// Test convenience: each slice is one facet.
    pub fn of(facets: &[&[u32]]) -> Self {
        Self::from_facets(facets.iter().map(|f| Face::of(f)))
    }

    /// The d-simplex on vertices `1..=d+1`.
    pub fn simplex(d: u32) -> Self {
        Self::from_facet_antichain([Face::new(1..=d + 1).unwrap()])
    }

    /// The boundary of the d-simplex on vertices `1..=d+1`.
    pub fn boundary_simplex(d: u32) -> Self {
        Self::from_facet_antichain(Face::new(1..=d + 1).unwrap().subfaces(d as i64 - 1))
    }

    pub fn facets(&self) -> &BTreeSet<Face> {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Max facet dimension; -1 for the empty and the void complex.
    pub fn dim(&self) -> i64 {
        self.facets.iter().map(|f| f.dim()).max().unwrap_or(-1)
    }

    /// All facets of equal dimension. Cached.
    pub fn is_pure(&self) -> bool {
        *self.pure.get_or_init(|| {
            let d = self.dim();
            self.facets.iter().all(|f| f.dim() == d)
        })
    }

    fn face_table(&self) -> &FaceTable {
        self.faces.get_or_init(|| {
            let mut by_dim: Vec<BTreeSet<Face>> = Vec::new();
            by_dim.resize_with((self.dim() + 2).max(0) as usize, BTreeSet::new);
            for facet in &self.facets {
                for sub in facet.all_subfaces() {
                    let slot = (sub.dim() + 1) as usize;
                    by_dim[slot].insert(sub);
                }
            }
            FaceTable { by_dim }
        })
    }

    /// All faces of dimension exactly `k`; out-of-range `k` is the empty set.
    pub fn faces(&self, k: i64) -> BTreeSet<Face> {
        self.face_table()
            .dim_slot(k)
            .cloned()
            .unwrap_or_default()
    }

    /// Iterator over every face of the downward closure.
    pub fn all_faces(&self) -> impl Iterator<Item = &Face> {
        self.face_table().by_dim.iter().flatten()
    }

    pub fn face_set(&self) -> BTreeSet<Face> {
        self.all_faces().cloned().collect()
    }

    pub fn contains_face(&self, f: &Face) -> bool {
        if self.is_void() {
            return false;
        }
        self.facets.iter().any(|h| h.contains(f))
    }

    pub fn vertices(&self) -> BTreeSet<Vertex> {
        self.facets
            .iter()
            .flat_map(|f| f.vertices().iter().copied())
            .collect()
    }

    /// Smallest unused vertex id: max id + 1, or 0 for a vertex-free complex.
    pub fn fresh_vertex(&self) -> Vertex {
        Vertex(
            self.vertices()
                .iter()
                .map(|v| v.0 + 1)
                .max()
                .unwrap_or(0),
        )
    }

    /// Unreduced Euler characteristic: alternating sum of face counts for
    /// dimensions >= 0.
    pub fn euler_characteristic(&self) -> i64 {
        let mut chi = 0i64;
        for k in 0..=self.dim() {
            let n = self.faces(k).len() as i64;
            chi += if k % 2 == 0 { n } else { -n };
        }
        chi
    }

    /// Closed star: the subcomplex generated by all facets containing `f`.
    pub fn star(&self, f: &Face) -> Result<SimplicialComplex> {
        if !self.contains_face(f) {
            return Err(Error::FaceNotPresent(f.clone()));
        }
        Ok(Self::from_facet_antichain(
            self.facets.iter().filter(|h| h.contains(f)).cloned(),
        ))
    }

    /// Link: `{ G : G ∪ f ∈ X, G ∩ f = ∅ }` as a complex.
    pub fn link(&self, f: &Face) -> Result<SimplicialComplex> {
        if !self.contains_face(f) {
            return Err(Error::FaceNotPresent(f.clone()));
        }
        Ok(Self::from_facet_antichain(
            self.facets
                .iter()
                .filter(|h| h.contains(f))
                .map(|h| h.minus(f)),
        ))
    }

    /// Ridge-to-facet incidence counts for a pure complex.
    fn ridge_incidence(&self) -> Result<BTreeMap<Face, usize>> {
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        let d = self.dim();
        let mut counts: BTreeMap<Face, usize> = BTreeMap::new();
        for facet in &self.facets {
            for ridge in facet.subfaces(d - 1) {
                *counts.entry(ridge).or_insert(0) += 1;
            }
        }
        Ok(counts)
    }

    /// Every ridge in exactly two facets. Non-pure complexes are not closed
    /// pseudomanifolds.
    pub fn is_closed_pseudomanifold(&self) -> bool {
        match self.ridge_incidence() {
            Ok(counts) => counts.values().all(|&c| c == 2),
            Err(_) => false,
        }
    }

    /// Facet-ridge graph connectivity (dually connected).
    pub fn is_strongly_connected(&self) -> bool {
        let facets: Vec<&Face> = self.facets.iter().collect();
        if facets.len() <= 1 {
            return true;
        }
        let adjacent = |a: &Face, b: &Face| {
            let shared = a.vertices().iter().filter(|v| b.contains_vertex(**v)).count();
            shared + 1 == a.vertices().len() && shared + 1 == b.vertices().len()
        };
        let mut seen = vec![false; facets.len()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(i) = queue.pop_front() {
            for j in 0..facets.len() {
                if !seen[j] && adjacent(facets[i], facets[j]) {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Split a pure complex into its boundary subcomplex and interior faces.
    ///
    /// The boundary is generated by the ridges lying in exactly one facet;
    /// a ridge in three or more facets is rejected. For a closed complex the
    /// boundary is the void complex and every face is interior.
    pub fn boundary_decomposition(&self) -> Result<BoundaryDecomposition> {
        let counts = self.ridge_incidence()?;
        if let Some((ridge, &c)) = counts.iter().find(|(_, &c)| c > 2) {
            return Err(Error::NotPseudomanifold(ridge.clone(), c));
        }
        let boundary_ridges: Vec<Face> = counts
            .into_iter()
            .filter_map(|(r, c)| (c == 1).then_some(r))
            .collect();
        let boundary = if boundary_ridges.is_empty() {
            SimplicialComplex::void()
        } else {
            SimplicialComplex::from_facet_antichain(boundary_ridges)
        };
        let boundary_faces = boundary.face_set();
        let interior_faces = self
            .all_faces()
            .filter(|f| !boundary_faces.contains(f))
            .cloned()
            .collect();
        Ok(BoundaryDecomposition {
            boundary,
            interior_faces,
        })
    }

    /// Cone with a fresh apex: facets `{apex} ∪ G` for each facet `G`.
    /// Coning the empty complex yields the single-vertex complex.
    pub fn cone(&self, apex: Vertex) -> Result<SimplicialComplex> {
        if self.vertices().contains(&apex) {
            return Err(Error::VertexClash(apex));
        }
        Ok(Self::from_facet_antichain(
            self.facets.iter().map(|f| f.with_vertex(apex)),
        ))
    }

    /// Stellar subdivision at `f`: remove the open star of `f`, cone the
    /// fresh vertex over `∂f ∗ link(f)`. Subdividing a vertex is rejected.
    pub fn stellar_subdivide(&self, f: &Face, v: Vertex) -> Result<SimplicialComplex> {
        if !self.contains_face(f) {
            return Err(Error::FaceNotPresent(f.clone()));
        }
        if f.dim() < 1 {
            return Err(Error::VertexSubdivisionRejected(f.clone()));
        }
        if self.vertices().contains(&v) {
            return Err(Error::VertexClash(v));
        }
        let mut facets = BTreeSet::new();
        for h in &self.facets {
            if h.contains(f) {
                let rest = h.minus(f);
                for g in f.boundary_ridges() {
                    facets.insert(g.union(&rest).with_vertex(v));
                }
            } else {
                facets.insert(h.clone());
            }
        }
        // the union is an antichain whenever the inputs were (old facets do
        // not contain v; new facets of a common h differ in their ∂f part)
        debug_assert!({
            let norm = Self::from_facets(facets.iter().cloned());
            norm.facets == facets
        });
        Ok(Self::from_facet_antichain(facets))
    }
}

// immutable with internally synchronized caches
const _: () = {
    const fn require_send_sync<T: Send + Sync>() {}
    require_send_sync::<SimplicialComplex>()
};

/// Boundary subcomplex plus the interior face set of a pure complex.
#[derive(Debug, Clone)]
pub struct BoundaryDecomposition {
    pub boundary: SimplicialComplex,
    pub interior_faces: BTreeSet<Face>,
}

impl BoundaryDecomposition {
    pub fn is_closed(&self) -> bool {
        self.boundary.is_void()
    }

    /// Smallest dimension among interior faces, if any.
    pub fn min_interior_dim(&self) -> Option<i64> {
        self.interior_faces.iter().map(|f| f.dim()).min()
    }
}
