//! Stellar subdivisions of the boundary realized as pyramid attachments.
//!
//! Subdividing a boundary face `F` of a triangulated manifold-with-boundary
//! `S` is matched on the solid side by gluing a cone (apex ∗ star(∂S, F))
//! on top of `S`. The boundary of the enlarged complex is exactly the
//! stellar subdivision, and the interior grows by precisely the faces
//! containing `F` — the ledger tracked here. Running a schedule of such
//! attachments with a dimension floor keeps low-dimensional faces on the
//! boundary, which is what stackedness preservation needs.

use std::collections::BTreeSet;

use crate::complex::{Face, SimplicialComplex, Vertex};
use crate::error::{Error, Result};

/// One pyramid attachment: what was glued and what became interior.
#[derive(Debug, Clone)]
pub struct PyramidAttachment {
    /// The subdivided boundary face.
    pub base: Face,
    pub apex: Vertex,
    /// `{ apex ∗ G : G facet of star(∂S, base) }`.
    pub added_facets: BTreeSet<Face>,
    /// Faces newly interior: everything containing `base`, minus what was
    /// already interior. Its minimum dimension equals `dim base`.
    pub ledger_delta: BTreeSet<Face>,
}

/// Glue a pyramid over the star of the boundary face `f`.
///
/// Returns the enlarged complex and the attachment record. When `f` is a
/// boundary facet this degenerates to stacking a single top-dimensional
/// simplex.
pub fn attach_pyramid(
    s: &SimplicialComplex,
    f: &Face,
    apex: Vertex,
) -> Result<(SimplicialComplex, PyramidAttachment)> {
    let bd = s.boundary_decomposition()?;
    if bd.is_closed() {
        return Err(Error::NoBoundary);
    }
    if !s.contains_face(f) {
        return Err(Error::FaceNotPresent(f.clone()));
    }
    if f.dim() < 1 {
        return Err(Error::VertexSubdivisionRejected(f.clone()));
    }
    if bd.interior_faces.contains(f) {
        return Err(Error::FaceNotOnBoundary(f.clone()));
    }
    if s.vertices().contains(&apex) {
        return Err(Error::VertexClash(apex));
    }

    let star = bd.boundary.star(f)?;
    let added_facets: BTreeSet<Face> = star
        .facets()
        .iter()
        .map(|g| g.with_vertex(apex))
        .collect();
    let enlarged = SimplicialComplex::from_facets(
        s.facets().iter().cloned().chain(added_facets.iter().cloned()),
    );
    let ledger_delta: BTreeSet<Face> = enlarged
        .all_faces()
        .filter(|g| g.contains(f) && !bd.interior_faces.contains(*g))
        .cloned()
        .collect();
    debug_assert_eq!(
        ledger_delta.iter().map(|g| g.dim()).min(),
        Some(f.dim())
    );
    Ok((
        enlarged,
        PyramidAttachment {
            base: f.clone(),
            apex,
            added_facets,
            ledger_delta,
        },
    ))
}

/// An ordered list of subdivision steps with a dimension floor.
///
/// Steps address faces on the boundary *at execution time*, so later steps
/// may name faces created by earlier ones. A missing apex is minted as
/// max-id + 1 of the evolving complex.
#[derive(Debug, Clone)]
pub struct SubdivisionSchedule {
    pub floor_dim: i64,
    pub steps: Vec<ScheduleStep>,
}

#[derive(Debug, Clone)]
pub struct ScheduleStep {
    pub face: Face,
    pub apex: Option<Vertex>,
}

/// Full provenance of a schedule run.
#[derive(Debug, Clone)]
pub struct ScheduleRun {
    pub final_complex: SimplicialComplex,
    /// Union of all per-step ledger deltas.
    pub ledger: BTreeSet<Face>,
    pub attachments: Vec<PyramidAttachment>,
}

/// Fold `attach_pyramid` over a schedule, checking the dimension floor after
/// every step. Any failure aborts with the step index and reason.
pub fn run_schedule(s: &SimplicialComplex, schedule: &SubdivisionSchedule) -> Result<ScheduleRun> {
    if schedule.floor_dim < 1 {
        return Err(Error::Invalid(format!(
            "schedule floor_dim {} must be at least 1",
            schedule.floor_dim
        )));
    }
    let mut current = s.clone();
    let mut ledger = BTreeSet::new();
    let mut attachments = Vec::with_capacity(schedule.steps.len());
    for (index, step) in schedule.steps.iter().enumerate() {
        let at_step = |source: Error| Error::ScheduleStep {
            index,
            source: Box::new(source),
        };
        if step.face.dim() < schedule.floor_dim {
            return Err(at_step(Error::Invalid(format!(
                "face {} has dimension {} below the floor {}",
                step.face,
                step.face.dim(),
                schedule.floor_dim
            ))));
        }
        let apex = step.apex.unwrap_or_else(|| current.fresh_vertex());
        let (next, att) = attach_pyramid(&current, &step.face, apex).map_err(at_step)?;
        assert!(
            att.ledger_delta.iter().all(|g| g.dim() >= schedule.floor_dim),
            "ledger dipped below the schedule floor"
        );
        ledger.extend(att.ledger_delta.iter().cloned());
        attachments.push(att);
        current = next;
    }
    Ok(ScheduleRun {
        final_complex: current,
        ledger,
        attachments,
    })
}

/// Double-check of the interior-face ledger for a single attachment.
///
/// The prediction `interior(S') = interior(S) ∪ { G ⊇ F }` is compared
/// against an independent recomputation via `boundary_decomposition`.
/// Discrepancies are report content, not errors.
#[derive(Debug, Clone)]
pub struct StackLemmaReport {
    pub base: Face,
    pub apex: Vertex,
    pub predicted_interior: BTreeSet<Face>,
    pub actual_interior: BTreeSet<Face>,
    /// Predicted but not actually interior.
    pub missing: Vec<Face>,
    /// Actually interior but not predicted.
    pub unexpected: Vec<Face>,
}

impl StackLemmaReport {
    pub fn matches(&self) -> bool {
        self.missing.is_empty() && self.unexpected.is_empty()
    }
}

pub fn verify_stack_lemma(
    s: &SimplicialComplex,
    f: &Face,
    apex: Vertex,
) -> Result<StackLemmaReport> {
    let before = s.boundary_decomposition()?;
    let (enlarged, att) = attach_pyramid(s, f, apex)?;
    let predicted: BTreeSet<Face> = before
        .interior_faces
        .iter()
        .cloned()
        .chain(att.ledger_delta.iter().cloned())
        .collect();
    let actual = enlarged.boundary_decomposition()?.interior_faces;
    let missing = predicted.difference(&actual).cloned().collect();
    let unexpected = actual.difference(&predicted).cloned().collect();
    Ok(StackLemmaReport {
        base: f.clone(),
        apex,
        predicted_interior: predicted,
        actual_interior: actual,
        missing,
        unexpected,
    })
}

/// Fill a closed pseudomanifold with a cone, producing a complex whose
/// boundary is the input.
pub fn disk_extension_by_cone(
    x: &SimplicialComplex,
    apex: Vertex,
) -> Result<SimplicialComplex> {
    if !x.is_pure() {
        return Err(Error::NotPure);
    }
    let bd = x.boundary_decomposition()?;
    if !bd.is_closed() {
        return Err(Error::NoBoundaryExpected);
    }
    let filled = x.cone(apex)?;
    debug_assert_eq!(&filled.boundary_decomposition()?.boundary, x);
    Ok(filled)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn face(ids: &[u32]) -> Face {
        Face::of(ids)
    }

    #[test]
    fn stacking_a_boundary_facet() {
        let s = SimplicialComplex::simplex(3);
        let (enlarged, att) = attach_pyramid(&s, &face(&[1, 2, 3]), Vertex(5)).unwrap();
        assert_eq!(
            enlarged,
            SimplicialComplex::of(&[&[1, 2, 3, 4], &[1, 2, 3, 5]])
        );
        let expect: BTreeSet<Face> =
            [face(&[1, 2, 3]), face(&[1, 2, 3, 5])].into_iter().collect();
        assert_eq!(att.ledger_delta, expect);
        assert_eq!(
            enlarged.boundary_decomposition().unwrap().boundary.facet_count(),
            6
        );
    }

    #[test]
    fn edge_pyramid_on_two_tetrahedra() {
        // two tetrahedra sharing a triangle; subdividing at the edge {1,2}
        // builds a pyramid of exactly two tetrahedra
        let s = SimplicialComplex::of(&[&[1, 2, 3, 4], &[1, 2, 3, 5]]);
        let (enlarged, att) = attach_pyramid(&s, &face(&[1, 2]), Vertex(6)).unwrap();
        assert_eq!(
            att.added_facets,
            [face(&[1, 2, 4, 6]), face(&[1, 2, 5, 6])].into_iter().collect()
        );
        let expect_delta: BTreeSet<Face> = [
            face(&[1, 2]),
            face(&[1, 2, 4]),
            face(&[1, 2, 5]),
            face(&[1, 2, 6]),
            face(&[1, 2, 4, 6]),
            face(&[1, 2, 5, 6]),
        ]
        .into_iter()
        .collect();
        assert_eq!(att.ledger_delta, expect_delta);
        // no vertex changed sides
        assert!(att.ledger_delta.iter().all(|g| g.dim() >= 1));
        let bd = enlarged.boundary_decomposition().unwrap();
        assert_eq!(
            bd.boundary,
            SimplicialComplex::of(&[
                &[1, 3, 4],
                &[2, 3, 4],
                &[1, 3, 5],
                &[2, 3, 5],
                &[1, 4, 6],
                &[2, 4, 6],
                &[1, 5, 6],
                &[2, 5, 6],
            ])
        );
    }

    #[test]
    fn boundary_commutes_with_stellar_subdivision() {
        let s = SimplicialComplex::of(&[&[1, 2, 3, 4], &[1, 2, 3, 5]]);
        let boundary = s.boundary_decomposition().unwrap().boundary;
        let (enlarged, _) = attach_pyramid(&s, &face(&[1, 2]), Vertex(6)).unwrap();
        let direct = enlarged.boundary_decomposition().unwrap().boundary;
        let subdivided = boundary.stellar_subdivide(&face(&[1, 2]), Vertex(6)).unwrap();
        assert_eq!(direct, subdivided);
    }

    #[test]
    fn attachment_gates() {
        let s = SimplicialComplex::simplex(3);
        assert!(matches!(
            attach_pyramid(&s, &face(&[1]), Vertex(9)),
            Err(Error::VertexSubdivisionRejected(_))
        ));
        assert!(matches!(
            attach_pyramid(&s, &face(&[1, 2, 3, 4]), Vertex(9)),
            Err(Error::FaceNotOnBoundary(_))
        ));
        assert!(matches!(
            attach_pyramid(&s, &face(&[1, 6]), Vertex(9)),
            Err(Error::FaceNotPresent(_))
        ));
        assert!(matches!(
            attach_pyramid(&s, &face(&[1, 2]), Vertex(3)),
            Err(Error::VertexClash(_))
        ));
        assert!(matches!(
            attach_pyramid(&SimplicialComplex::boundary_simplex(3), &face(&[1, 2]), Vertex(9)),
            Err(Error::NoBoundary)
        ));
    }

    #[test]
    fn facet_count_grows_by_the_star() {
        let s = SimplicialComplex::of(&[&[1, 2, 3, 4], &[1, 2, 3, 5]]);
        let bd = s.boundary_decomposition().unwrap();
        let f = face(&[1, 2]);
        let star_facets = bd.boundary.star(&f).unwrap().facet_count();
        let (enlarged, _) = attach_pyramid(&s, &f, Vertex(6)).unwrap();
        assert_eq!(enlarged.facet_count(), s.facet_count() + star_facets);
    }

    #[test]
    fn two_step_schedule_on_a_tetrahedron() {
        let schedule = SubdivisionSchedule {
            floor_dim: 2,
            steps: vec![
                ScheduleStep {
                    face: face(&[1, 2, 3]),
                    apex: Some(Vertex(5)),
                },
                ScheduleStep {
                    face: face(&[1, 2, 5]),
                    apex: Some(Vertex(6)),
                },
            ],
        };
        let run = run_schedule(&SimplicialComplex::simplex(3), &schedule).unwrap();
        assert_eq!(run.final_complex.facet_count(), 3);
        // every newly interior face has dimension >= 2, so the result is
        // 1-stacked but not 0-stacked
        let r1 = crate::face_vectors::is_k_stacked(&run.final_complex, 1).unwrap();
        assert!(r1.stacked);
        let r0 = crate::face_vectors::is_k_stacked(&run.final_complex, 0).unwrap();
        assert!(!r0.stacked);
        assert_eq!(run.attachments.len(), 2);
    }

    #[test]
    fn empty_schedule_is_identity() {
        let s = SimplicialComplex::simplex(3);
        let run = run_schedule(
            &s,
            &SubdivisionSchedule {
                floor_dim: 1,
                steps: vec![],
            },
        )
        .unwrap();
        assert_eq!(run.final_complex, s);
        assert!(run.ledger.is_empty());
    }

    #[test]
    fn schedule_failures_carry_the_step_index() {
        let s = SimplicialComplex::simplex(3);
        let bad = SubdivisionSchedule {
            floor_dim: 1,
            steps: vec![
                ScheduleStep {
                    face: face(&[1, 2, 3]),
                    apex: None,
                },
                ScheduleStep {
                    face: face(&[7, 8]),
                    apex: None,
                },
            ],
        };
        match run_schedule(&s, &bad) {
            Err(Error::ScheduleStep { index: 1, source }) => {
                assert!(matches!(*source, Error::FaceNotPresent(_)));
            }
            other => panic!("expected step error, got {other:?}"),
        }
        let low_floor = SubdivisionSchedule {
            floor_dim: 0,
            steps: vec![],
        };
        assert!(matches!(
            run_schedule(&s, &low_floor),
            Err(Error::Invalid(_))
        ));
    }

    #[test]
    fn schedule_auto_mints_apexes() {
        let schedule = SubdivisionSchedule {
            floor_dim: 2,
            steps: vec![ScheduleStep {
                face: face(&[1, 2, 3]),
                apex: None,
            }],
        };
        let run = run_schedule(&SimplicialComplex::simplex(3), &schedule).unwrap();
        assert_eq!(run.attachments[0].apex, Vertex(5));
    }

    #[test]
    fn stack_lemma_verification_matches() {
        let facet_case =
            verify_stack_lemma(&SimplicialComplex::simplex(3), &face(&[1, 2, 3]), Vertex(5))
                .unwrap();
        assert!(facet_case.matches());

        let two = SimplicialComplex::of(&[&[1, 2, 3, 4], &[1, 2, 3, 5]]);
        let edge_case = verify_stack_lemma(&two, &face(&[1, 2]), Vertex(6)).unwrap();
        assert!(edge_case.matches(), "missing {:?} unexpected {:?}", edge_case.missing, edge_case.unexpected);
    }

    #[test]
    fn disk_extension_examples() {
        let sphere = SimplicialComplex::boundary_simplex(3);
        let ball = disk_extension_by_cone(&sphere, Vertex(9)).unwrap();
        assert_eq!(ball.facet_count(), 4);
        assert_eq!(ball.boundary_decomposition().unwrap().boundary, sphere);

        let circle = SimplicialComplex::of(&[&[1, 2], &[1, 3], &[2, 3]]);
        let disk = disk_extension_by_cone(&circle, Vertex(9)).unwrap();
        assert_eq!(disk.facet_count(), 3);
        assert_eq!(disk.boundary_decomposition().unwrap().boundary, circle);

        assert!(matches!(
            disk_extension_by_cone(&SimplicialComplex::simplex(3), Vertex(9)),
            Err(Error::NoBoundaryExpected)
        ));
    }
}
