//! The AG-invariant and the combinatorial marked ribbon surface.
//!
//! Marked points are permitted threads, elementary polygons are forbidden
//! threads (full-relation cycles give the polygons around unmarked boundary
//! components), arcs are vertices. The pairing walk below alternates between
//! the two kinds of threads and traces one marked boundary component per
//! orbit.

use serde::Serialize;

use crate::dimension::Dimension;
use crate::error::InvariantError;
use crate::presentation::{GentlePresentation, VertexId};
use crate::threads::{SlotRef, ThreadSet};

/// The multiset of pairs `(m, n)`, sorted descending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AgInvariant {
    pub pairs: Vec<(u32, u32)>,
}

impl AgInvariant {
    fn from_unsorted(mut pairs: Vec<(u32, u32)>) -> Self {
        pairs.sort_by(|a, b| b.cmp(a));
        AgInvariant { pairs }
    }

    /// Number of occurrences of `(m, n)`.
    pub fn count(&self, m: u32, n: u32) -> usize {
        self.pairs.iter().filter(|&&p| p == (m, n)).count()
    }

    /// `sum_l l * phi(0, l)`.
    pub fn weighted_zero_pairs(&self) -> u32 {
        self.pairs.iter().filter(|p| p.0 == 0).map(|p| p.1).sum()
    }

    pub fn has_zero_pair(&self) -> bool {
        self.pairs.iter().any(|p| p.0 == 0)
    }

    pub fn marked_total(&self) -> u32 {
        self.pairs.iter().map(|p| p.0).sum()
    }
}

impl std::fmt::Display for AgInvariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let body: Vec<String> = self.pairs.iter().map(|(m, n)| format!("({m},{n})")).collect();
        write!(f, "[{}]", body.join(", "))
    }
}

/// One orbit of the pairing walk: permitted and forbidden thread indices
/// in visiting order.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Orbit {
    permitted: Vec<usize>,
    forbidden: Vec<usize>,
}

fn walk_orbit(threads: &ThreadSet, start: usize) -> Result<Orbit, InvariantError> {
    let limit = threads.permitted.len() + 1;
    let mut orbit = Orbit {
        permitted: Vec::new(),
        forbidden: Vec::new(),
    };
    let mut h = start;
    loop {
        orbit.permitted.push(h);
        if orbit.permitted.len() > limit {
            return Err(InvariantError::new("pairing walk does not close"));
        }
        let end = threads.permitted[h].end;
        // forbidden slot with the same index holds the empty outgoing corner
        let f = threads
            .forbidden_at(end)
            .filter(|&f| threads.forbidden_finite[f].end == end)
            .ok_or_else(|| {
                InvariantError::new(format!("no forbidden thread ends at slot {end:?}"))
            })?;
        orbit.forbidden.push(f);
        let fstart = threads.forbidden_finite[f].start;
        let next_slot = SlotRef {
            vertex: fstart.vertex,
            index: 1 - fstart.index,
        };
        h = threads
            .permitted_at(next_slot)
            .filter(|&p| threads.permitted[p].start == next_slot)
            .ok_or_else(|| {
                InvariantError::new(format!("no permitted thread starts at slot {next_slot:?}"))
            })?;
        if h == start {
            return Ok(orbit);
        }
    }
}

/// Runs the walk, trying candidate starting threads in `order`.
fn orbits(threads: &ThreadSet, order: &[usize]) -> Result<Vec<Orbit>, InvariantError> {
    let mut used = vec![false; threads.permitted.len()];
    let mut out = Vec::new();
    for &h in order {
        if used[h] {
            continue;
        }
        let orbit = walk_orbit(threads, h)?;
        for &p in &orbit.permitted {
            if used[p] {
                return Err(InvariantError::new("permitted thread visited by two orbits"));
            }
            used[p] = true;
        }
        out.push(orbit);
    }
    if used.iter().any(|u| !u) {
        return Err(InvariantError::new("permitted thread missed by the walk"));
    }
    Ok(out)
}

fn pairs_of(threads: &ThreadSet, orbits: &[Orbit]) -> AgInvariant {
    let mut pairs: Vec<(u32, u32)> = orbits
        .iter()
        .map(|o| {
            let n: usize = o
                .forbidden
                .iter()
                .map(|&f| threads.forbidden_finite[f].len())
                .sum();
            (o.permitted.len() as u32, n as u32)
        })
        .collect();
    pairs.extend(threads.infinite_cycles.iter().map(|c| (0, c.len() as u32)));
    AgInvariant::from_unsorted(pairs)
}

pub fn ag_invariant(a: &GentlePresentation) -> Result<AgInvariant, InvariantError> {
    let threads = ThreadSet::new(a);
    let order: Vec<usize> = (0..threads.permitted.len()).collect();
    ag_invariant_with_order(&threads, &order)
}

/// The invariant computed with starting threads tried in the given order
/// (a permutation of the permitted thread indices).
pub fn ag_invariant_with_order(
    threads: &ThreadSet,
    order: &[usize],
) -> Result<AgInvariant, InvariantError> {
    Ok(pairs_of(threads, &orbits(threads, order)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PolygonSource {
    /// Index into `ThreadSet::forbidden_finite`.
    ForbiddenThread(usize),
    /// Index into `ThreadSet::infinite_cycles`.
    FullRelationCycle(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementaryPolygon {
    /// Arc sides in order, with multiplicity.
    pub arc_sides: Vec<VertexId>,
    pub c_number: Dimension,
    pub source: PolygonSource,
    pub boundary_component: usize,
}

impl ElementaryPolygon {
    pub fn is_infinite(&self) -> bool {
        !self.c_number.is_finite()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryComponent {
    pub id: usize,
    /// Permitted thread indices of the marked points, in walk order.
    pub marked_points: Vec<usize>,
    /// Polygon indices bordering this component.
    pub polygons: Vec<usize>,
}

impl BoundaryComponent {
    pub fn marked_point_count(&self) -> usize {
        self.marked_points.len()
    }

    pub fn is_unmarked(&self) -> bool {
        self.marked_points.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct SurfaceModel {
    pub threads: ThreadSet,
    pub boundary_components: Vec<BoundaryComponent>,
    pub polygons: Vec<ElementaryPolygon>,
    /// One arc per vertex of the quiver.
    pub arcs: Vec<VertexId>,
}

impl SurfaceModel {
    pub fn new(a: &GentlePresentation) -> Result<Self, InvariantError> {
        let threads = ThreadSet::new(a);
        let order: Vec<usize> = (0..threads.permitted.len()).collect();
        let orbits = orbits(&threads, &order)?;

        let mut polygons = Vec::new();
        let mut components = Vec::new();
        for (id, orbit) in orbits.iter().enumerate() {
            let mut polys = Vec::new();
            for &f in &orbit.forbidden {
                let t = &threads.forbidden_finite[f];
                polys.push(polygons.len());
                polygons.push(ElementaryPolygon {
                    arc_sides: t.vertices(a),
                    c_number: Dimension::from(t.len() + 1),
                    source: PolygonSource::ForbiddenThread(f),
                    boundary_component: id,
                });
            }
            components.push(BoundaryComponent {
                id,
                marked_points: orbit.permitted.clone(),
                polygons: polys,
            });
        }
        for (i, cycle) in threads.infinite_cycles.iter().enumerate() {
            let id = components.len();
            components.push(BoundaryComponent {
                id,
                marked_points: Vec::new(),
                polygons: vec![polygons.len()],
            });
            polygons.push(ElementaryPolygon {
                arc_sides: cycle.iter().map(|&x| a.source(x)).collect(),
                c_number: Dimension::Infinite,
                source: PolygonSource::FullRelationCycle(i),
                boundary_component: id,
            });
        }
        Ok(SurfaceModel {
            threads,
            boundary_components: components,
            polygons,
            arcs: a.vertices().collect(),
        })
    }

    /// The AG-invariant read off the boundary components:
    /// `m_t` marked points and `n_t = sum (c - 1)` over the polygons on `b_t`.
    pub fn ag_invariant(&self) -> AgInvariant {
        let pairs = self
            .boundary_components
            .iter()
            .map(|b| {
                if b.is_unmarked() {
                    let p = &self.polygons[b.polygons[0]];
                    (0, p.arc_sides.len() as u32)
                } else {
                    let n: u32 = b
                        .polygons
                        .iter()
                        .map(|&p| self.polygons[p].c_number.finite().expect("finite polygon") - 1)
                        .sum();
                    (b.marked_point_count() as u32, n)
                }
            })
            .collect();
        AgInvariant::from_unsorted(pairs)
    }

    pub fn marked_total(&self) -> usize {
        self.threads.permitted.len()
    }

    pub fn stats(&self) -> Result<SurfaceStats, InvariantError> {
        let b = self.boundary_components.len() as i64;
        let marked = self.marked_total() as i64;
        let unmarked = self
            .boundary_components
            .iter()
            .filter(|c| c.is_unmarked())
            .count() as i64;
        let arcs = self.arcs.len() as i64;
        let finite_faces = self.polygons.iter().filter(|p| !p.is_infinite()).count() as i64;
        // an unmarked circle is one virtual vertex and one loop edge; its
        // polygon is an annulus and contributes nothing to chi
        let chi = (marked + unmarked) - (arcs + marked + unmarked) + finite_faces;
        let twice_genus = 2 - b - chi;
        if twice_genus < 0 || twice_genus % 2 != 0 {
            return Err(InvariantError::new(format!(
                "Euler characteristic {chi} with {b} boundary components gives no genus"
            )));
        }
        Ok(SurfaceStats {
            boundary_count: b as usize,
            marked_total: marked as usize,
            arc_count: arcs as usize,
            polygon_count: self.polygons.len(),
            euler_characteristic: chi,
            genus: (twice_genus / 2) as usize,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceStats {
    pub boundary_count: usize,
    pub marked_total: usize,
    pub arc_count: usize,
    pub polygon_count: usize,
    pub euler_characteristic: i64,
    pub genus: usize,
}

pub fn surface_model(a: &GentlePresentation) -> Result<SurfaceModel, InvariantError> {
    SurfaceModel::new(a)
}

/// Consecutive-arcs number of every polygon, in `SurfaceModel::polygons` order.
pub fn c_numbers(a: &GentlePresentation) -> Result<Vec<Dimension>, InvariantError> {
    Ok(SurfaceModel::new(a)?
        .polygons
        .iter()
        .map(|p| p.c_number)
        .collect())
}

pub fn surface_stats(a: &GentlePresentation) -> Result<SurfaceStats, InvariantError> {
    SurfaceModel::new(a)?.stats()
}
