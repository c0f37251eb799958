//! Property tests for the spec-level invariants.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use plstack::complex::{Face, SimplicialComplex};
use plstack::matrix::Matrix;
use plstack::presentation::{GroupPresentation, Letter, Word};
use plstack::{attach_pyramid, homology, verify_stack_lemma};

/// A small random complex: a handful of faces over a small vertex pool.
fn small_complex() -> impl Strategy<Value = SimplicialComplex> {
    prop::collection::vec(prop::collection::btree_set(1u32..=8, 1..=5), 1..=6)
        .prop_map(|faces| {
            SimplicialComplex::from_facets(
                faces
                    .into_iter()
                    .map(|s| Face::new(s).unwrap()),
            )
        })
}

/// A ball grown from a simplex by a short random pyramid schedule, described
/// by raw index choices so shrinking stays meaningful.
fn grown_ball() -> impl Strategy<Value = SimplicialComplex> {
    (2u32..=4, prop::collection::vec((any::<u32>(), any::<u32>()), 0..4)).prop_map(
        |(d, choices)| {
            let mut s = SimplicialComplex::simplex(d);
            for (fi, di) in choices {
                let bd = s.boundary_decomposition().unwrap();
                let dim = 1 + (di as i64 % (d as i64 - 1).max(1));
                let faces: Vec<Face> = bd
                    .boundary
                    .faces(dim)
                    .into_iter()
                    .filter(|f| !bd.interior_faces.contains(f))
                    .collect();
                if faces.is_empty() {
                    continue;
                }
                let f = faces[fi as usize % faces.len()].clone();
                let apex = s.fresh_vertex();
                s = attach_pyramid(&s, &f, apex).unwrap().0;
            }
            s
        },
    )
}

proptest! {
    #[test]
    fn downward_closure(x in small_complex()) {
        for f in x.face_set() {
            for sub in f.all_subfaces() {
                prop_assert!(x.contains_face(&sub), "{sub} missing below {f}");
            }
        }
    }

    #[test]
    fn star_link_duality(x in small_complex()) {
        for f in x.face_set() {
            if f.is_empty() { continue; }
            let star = x.star(&f).unwrap();
            let link = x.link(&f).unwrap();
            let rebuilt: std::collections::BTreeSet<Face> =
                link.facets().iter().map(|g| g.union(&f)).collect();
            prop_assert_eq!(star.facets(), &rebuilt);
        }
    }

    #[test]
    fn stellar_subdivision_preserves_euler_characteristic(
        x in small_complex(),
        pick in any::<u32>(),
    ) {
        let candidates: Vec<Face> =
            x.face_set().into_iter().filter(|f| f.dim() >= 1).collect();
        prop_assume!(!candidates.is_empty());
        let f = candidates[pick as usize % candidates.len()].clone();
        let y = x.stellar_subdivide(&f, x.fresh_vertex()).unwrap();
        prop_assert_eq!(y.euler_characteristic(), x.euler_characteristic());
        prop_assert!(!y.contains_face(&f));
    }

    #[test]
    fn stellar_subdivision_preserves_closed_pseudomanifolds(
        d in 2u32..=4,
        picks in prop::collection::vec(any::<u32>(), 1..4),
    ) {
        let mut x = SimplicialComplex::boundary_simplex(d);
        for pick in picks {
            prop_assert!(x.is_closed_pseudomanifold());
            let candidates: Vec<Face> =
                x.face_set().into_iter().filter(|f| f.dim() >= 1).collect();
            let f = candidates[pick as usize % candidates.len()].clone();
            x = x.stellar_subdivide(&f, x.fresh_vertex()).unwrap();
        }
        prop_assert!(x.is_closed_pseudomanifold());
        prop_assert!(x.is_strongly_connected());
    }

    #[test]
    fn interior_faces_are_an_up_set(s in grown_ball()) {
        let bd = s.boundary_decomposition().unwrap();
        for f in &bd.interior_faces {
            for g in s.all_faces() {
                if g.contains(f) {
                    prop_assert!(bd.interior_faces.contains(g));
                }
            }
        }
        // filter consequence: a dimension with no interior faces has none
        // below it either
        for t in 0..s.dim() {
            if !bd.interior_faces.iter().any(|f| f.dim() == t) {
                prop_assert!(!bd.interior_faces.iter().any(|f| f.dim() < t));
            }
        }
    }

    #[test]
    fn ledger_and_boundary_commutation(s in grown_ball(), fi in any::<u32>()) {
        let bd = s.boundary_decomposition().unwrap();
        let candidates: Vec<Face> = bd
            .boundary
            .face_set()
            .into_iter()
            .filter(|f| f.dim() >= 1)
            .collect();
        prop_assume!(!candidates.is_empty());
        let f = candidates[fi as usize % candidates.len()].clone();
        let apex = s.fresh_vertex();

        // Lemma-style ledger exactness
        let report = verify_stack_lemma(&s, &f, apex).unwrap();
        prop_assert!(report.matches(),
            "missing {:?}, unexpected {:?}", report.missing, report.unexpected);

        // boundary of the attachment equals the stellar subdivision
        let (enlarged, att) = attach_pyramid(&s, &f, apex).unwrap();
        let direct = enlarged.boundary_decomposition().unwrap().boundary;
        let subdivided = bd.boundary.stellar_subdivide(&f, apex).unwrap();
        prop_assert_eq!(&direct, &subdivided);

        // dimension floor and facet growth
        prop_assert_eq!(att.ledger_delta.iter().map(|g| g.dim()).min(), Some(f.dim()));
        prop_assert!(att.ledger_delta.iter().all(|g| g.dim() >= 1));
        let star_facets = bd.boundary.star(&f).unwrap().facet_count();
        prop_assert_eq!(enlarged.facet_count(), s.facet_count() + star_facets);
        prop_assert!(enlarged.boundary_decomposition().is_ok());
    }

    #[test]
    fn boundary_operators_compose_to_zero(x in small_complex()) {
        for k in 2..=x.dim() {
            let a = plstack::boundary_matrix(&x, k - 1).unwrap();
            let b = plstack::boundary_matrix(&x, k).unwrap();
            prop_assert!(a.multiply(&b).is_zero());
        }
    }

    #[test]
    fn homology_is_subdivision_invariant(x in small_complex(), pick in any::<u32>()) {
        let candidates: Vec<Face> =
            x.face_set().into_iter().filter(|f| f.dim() >= 1).collect();
        prop_assume!(!candidates.is_empty());
        let f = candidates[pick as usize % candidates.len()].clone();
        let y = x.stellar_subdivide(&f, x.fresh_vertex()).unwrap();
        prop_assert_eq!(homology(&x), homology(&y));
    }

    #[test]
    fn cone_homology_is_a_point(x in small_complex()) {
        let c = x.cone(x.fresh_vertex()).unwrap();
        prop_assert!(homology(&c).is_acyclic());
    }

    #[test]
    fn snf_matches_minor_gcd_oracle(
        entries in prop::collection::vec(-9i64..=9, 1..=25),
        rows in 1usize..=5,
    ) {
        let cols = (entries.len() / rows).max(1);
        let take = rows * cols;
        prop_assume!(entries.len() >= take);
        let m = Matrix::from_rows(
            entries[..take]
                .chunks(cols)
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        );
        let snf = m.smith_normal_form();
        let oracle = minor_gcd_invariants(&m, rows, cols);
        prop_assert_eq!(&snf.invariant_factors, &oracle);
        // divisibility chain
        for w in snf.invariant_factors.windows(2) {
            prop_assert!((w[1].clone() % w[0].clone()).is_zero());
        }
    }

    #[test]
    fn free_reduction_and_rotation_invariance(
        raw in prop::collection::vec((0usize..3, any::<bool>()), 0..12),
        shift in any::<usize>(),
    ) {
        let w = Word::new(raw.iter().map(|&(gen, inverse)| Letter { gen, inverse }));
        let again = Word::new(w.letters().iter().copied());
        prop_assert_eq!(&w, &again);
        if !w.is_empty() {
            let rotated = w.rotated(shift % w.len());
            prop_assert_eq!(w.exponent_sums(3), rotated.exponent_sums(3));
        }
    }

    #[test]
    fn stellar_face_count_delta_matches_link_formula(
        x in small_complex(),
        pick in any::<u32>(),
    ) {
        // the change in the f-vector is determined by dim F and the
        // f-vector of link(F): removing the faces above F and adding
        // v ∗ ∂F ∗ link(F)
        let candidates: Vec<Face> =
            x.face_set().into_iter().filter(|f| f.dim() >= 1).collect();
        prop_assume!(!candidates.is_empty());
        let f = candidates[pick as usize % candidates.len()].clone();
        let link = x.link(&f).unwrap();
        let m = f.dim();
        let link_count = |t: i64| -> i64 {
            if t == -1 { 1 } else { link.faces(t).len() as i64 }
        };
        let y = x.stellar_subdivide(&f, x.fresh_vertex()).unwrap();
        let top = x.dim().max(y.dim());
        for j in 0..=top {
            let added: i64 = (0..=m)
                .map(|s| {
                    let choose: BigInt = plstack::num::binomial(m + 1, s);
                    i64::try_from(&choose).unwrap() * link_count(j - s - 1)
                })
                .sum();
            let removed = link_count(j - m - 1);
            let actual = y.faces(j).len() as i64 - x.faces(j).len() as i64;
            prop_assert_eq!(actual, added - removed, "dimension {}", j);
        }
    }

    #[test]
    fn perfect_products_stay_perfect(n in 1u32..=3) {
        let a5 = GroupPresentation::parse(&["a", "b"], &["aa", "bbb", "ababababab"]).unwrap();
        let icosa = GroupPresentation::parse(&["s", "t"], &["ststSSS", "sssTTTTT"]).unwrap();
        for p in [&a5, &icosa] {
            for q in [&a5, &icosa] {
                let prod = p.product(q).unwrap().power(n).unwrap();
                prop_assert!(prod.is_perfect());
            }
        }
    }
}

/// Independent oracle: the product of the first i invariant factors equals
/// the gcd of all i×i minors.
fn minor_gcd_invariants(m: &Matrix<BigInt>, rows: usize, cols: usize) -> Vec<BigInt> {
    let mut factors = Vec::new();
    let mut prev = BigInt::from(1);
    for i in 1..=rows.min(cols) {
        let mut g = BigInt::zero();
        for rs in combinations(rows, i) {
            for cs in combinations(cols, i) {
                let d = det(m, &rs, &cs);
                g = g.gcd(&d);
            }
        }
        if g.is_zero() {
            break;
        }
        factors.push(&g / &prev);
        prev = g;
    }
    factors
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (0..n).combinations(k).collect()
}

/// Laplace expansion along the first row of the selected submatrix.
fn det(m: &Matrix<BigInt>, rs: &[usize], cs: &[usize]) -> BigInt {
    if rs.len() == 1 {
        return m.get(rs[0], cs[0]);
    }
    let mut acc = BigInt::zero();
    for (j, &c) in cs.iter().enumerate() {
        let coef = m.get(rs[0], c);
        if coef.is_zero() {
            continue;
        }
        let rest_cols: Vec<usize> = cs.iter().copied().filter(|&x| x != c).collect();
        let sub = det(m, &rs[1..], &rest_cols);
        let term = coef * sub;
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

#[test]
fn minor_gcd_oracle_sanity() {
    // the 3x2 exponent matrix of the alternating-group presentation
    let m = Matrix::from_rows(vec![
        vec![BigInt::from(2), BigInt::from(0)],
        vec![BigInt::from(0), BigInt::from(3)],
        vec![BigInt::from(5), BigInt::from(5)],
    ]);
    assert_eq!(
        minor_gcd_invariants(&m, 3, 2),
        vec![BigInt::from(1), BigInt::from(1)]
    );
    let diag = Matrix::from_rows(vec![
        vec![BigInt::from(2), BigInt::from(0)],
        vec![BigInt::from(0), BigInt::from(4)],
    ]);
    assert_eq!(
        minor_gcd_invariants(&diag, 2, 2),
        vec![BigInt::from(2), BigInt::from(4)]
    );
}

#[test]
fn signed_abs_consistency() {
    // guard for the SNF factor normalization
    let m = Matrix::from_rows(vec![vec![BigInt::from(-4)]]);
    assert_eq!(
        m.smith_normal_form().invariant_factors,
        vec![BigInt::from(4).abs()]
    );
}

#[test]
fn complexes_are_shareable_across_threads() {
    // complexes are immutable with internally synchronized caches, so
    // concurrent readers must observe identical results
    let x = SimplicialComplex::boundary_simplex(5);
    let single = (homology(&x), x.face_set(), x.boundary_decomposition().unwrap().is_closed());
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..4)
            .map(|_| {
                let x = &x;
                scope.spawn(move || {
                    (
                        homology(x),
                        x.face_set(),
                        x.boundary_decomposition().unwrap().is_closed(),
                    )
                })
            })
            .collect();
        for h in handles {
            let got = h.join().unwrap();
            assert_eq!(got.0, single.0);
            assert_eq!(got.1, single.1);
            assert_eq!(got.2, single.2);
        }
    });
}
