//! Quivers with length-two relations and the gentleness check.
//!
//! Paths compose left to right: `ab` means "`a` then `b`" and requires
//! `target(a) == source(b)`. Identifiers are opaque strings; everything
//! downstream breaks ties by input order, which is the order of the
//! [`VertexId`] / [`ArrowId`] indices.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct ArrowId(pub usize);

/// An unvalidated arrow, referring to its endpoints by name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawArrow {
    pub name: String,
    pub source: String,
    pub target: String,
}

/// A quiver with relations exactly as written by the user.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawPresentation {
    pub vertices: Vec<String>,
    pub arrows: Vec<RawArrow>,
    pub relations: Vec<(String, String)>,
}

impl RawPresentation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(mut self, name: impl Into<String>) -> Self {
        self.vertices.push(name.into());
        self
    }

    pub fn arrow(
        mut self,
        name: impl Into<String>,
        source: impl Into<String>,
        target: impl Into<String>,
    ) -> Self {
        self.arrows.push(RawArrow {
            name: name.into(),
            source: source.into(),
            target: target.into(),
        });
        self
    }

    pub fn relation(mut self, first: impl Into<String>, second: impl Into<String>) -> Self {
        self.relations.push((first.into(), second.into()));
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> + '_ {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn arrows(&self) -> impl ExactSizeIterator<Item = ArrowId> + '_ {
        (0..self.arrows.len()).map(ArrowId)
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.0]
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a.0]
    }
}

/// Input that is not even a well-formed quiver with relations.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum MalformedIssue {
    #[error("the quiver has no vertices")]
    NoVertices,
    #[error("vertex `{0}` declared twice")]
    DuplicateVertex(String),
    #[error("arrow `{0}` declared twice")]
    DuplicateArrow(String),
    #[error("arrow `{arrow}` refers to undeclared vertex `{vertex}`")]
    UnknownVertex { arrow: String, vertex: String },
    #[error("relation refers to undeclared arrow `{0}`")]
    UnknownArrow(String),
    #[error("relation `{first} {second}` is not a path: target({first}) != source({second})")]
    NotComposable { first: String, second: String },
    #[error("relation `{first} {second}` listed twice")]
    DuplicateRelation { first: String, second: String },
}

/// A well-formed presentation that fails one of the gentleness conditions.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum Violation {
    #[error("vertex `{vertex}` has {count} incoming arrows (at most 2 allowed)")]
    InDegree { vertex: String, count: usize },
    #[error("vertex `{vertex}` has {count} outgoing arrows (at most 2 allowed)")]
    OutDegree { vertex: String, count: usize },
    #[error("arrow `{arrow}` has several continuations outside the relations: {others:?}")]
    PermittedSuccessors { arrow: String, others: Vec<String> },
    #[error("arrow `{arrow}` has several predecessors outside the relations: {others:?}")]
    PermittedPredecessors { arrow: String, others: Vec<String> },
    #[error("arrow `{arrow}` starts several relations: {others:?}")]
    RelationSuccessors { arrow: String, others: Vec<String> },
    #[error("arrow `{arrow}` ends several relations: {others:?}")]
    RelationPredecessors { arrow: String, others: Vec<String> },
    #[error("oriented cycle {arrows:?} avoids every relation, so the algebra is infinite-dimensional")]
    RelationFreeCycle { arrows: Vec<String> },
    #[error("the quiver is disconnected ({components} components)")]
    Disconnected { components: usize },
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum PresentationError {
    #[error("malformed presentation: {}", join(.0))]
    Malformed(Vec<MalformedIssue>),
    #[error("not gentle: {}", join(.0))]
    NotGentle(Vec<Violation>),
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

/// A validated gentle bound quiver algebra `kQ/I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GentlePresentation {
    quiver: Quiver,
    relations: Vec<(ArrowId, ArrowId)>,
    relation_set: HashSet<(ArrowId, ArrowId)>,
    in_arrows: Vec<Vec<ArrowId>>,
    out_arrows: Vec<Vec<ArrowId>>,
    relation_succ: Vec<Option<ArrowId>>,
    relation_pred: Vec<Option<ArrowId>>,
    permitted_succ: Vec<Option<ArrowId>>,
    permitted_pred: Vec<Option<ArrowId>>,
}

/// Checks `raw` and builds the presentation, or reports every problem found.
///
/// Malformed input (duplicate ids, dangling references, relations that are
/// not paths) is reported separately from gentleness violations.
pub fn validate_gentle(raw: &RawPresentation) -> Result<GentlePresentation, PresentationError> {
    let mut issues = Vec::new();
    if raw.vertices.is_empty() {
        issues.push(MalformedIssue::NoVertices);
    }
    let mut vertex_ix = HashMap::new();
    for (i, name) in raw.vertices.iter().enumerate() {
        if vertex_ix.insert(name.as_str(), VertexId(i)).is_some() {
            issues.push(MalformedIssue::DuplicateVertex(name.clone()));
        }
    }
    let mut arrows = Vec::with_capacity(raw.arrows.len());
    let mut arrow_ix = HashMap::new();
    for (i, a) in raw.arrows.iter().enumerate() {
        if arrow_ix.insert(a.name.as_str(), ArrowId(i)).is_some() {
            issues.push(MalformedIssue::DuplicateArrow(a.name.clone()));
        }
        let mut endpoint = |v: &str| match vertex_ix.get(v) {
            Some(&id) => id,
            None => {
                issues.push(MalformedIssue::UnknownVertex {
                    arrow: a.name.clone(),
                    vertex: v.to_string(),
                });
                VertexId(usize::MAX)
            }
        };
        let source = endpoint(&a.source);
        let target = endpoint(&a.target);
        arrows.push(Arrow {
            name: a.name.clone(),
            source,
            target,
        });
    }
    let mut relations = Vec::new();
    let mut relation_set = HashSet::new();
    for (first, second) in &raw.relations {
        let lookup = |name: &str, issues: &mut Vec<MalformedIssue>| {
            let id = arrow_ix.get(name).copied();
            if id.is_none() {
                issues.push(MalformedIssue::UnknownArrow(name.to_string()));
            }
            id
        };
        let (Some(a), Some(b)) = (lookup(first, &mut issues), lookup(second, &mut issues)) else {
            continue;
        };
        if arrows[a.0].target != arrows[b.0].source {
            issues.push(MalformedIssue::NotComposable {
                first: first.clone(),
                second: second.clone(),
            });
            continue;
        }
        if !relation_set.insert((a, b)) {
            issues.push(MalformedIssue::DuplicateRelation {
                first: first.clone(),
                second: second.clone(),
            });
            continue;
        }
        relations.push((a, b));
    }
    if !issues.is_empty() {
        return Err(PresentationError::Malformed(issues));
    }

    let quiver = Quiver {
        vertices: raw.vertices.clone(),
        arrows,
    };
    let n = quiver.vertex_count();
    let mut in_arrows = vec![Vec::new(); n];
    let mut out_arrows = vec![Vec::new(); n];
    for a in quiver.arrows() {
        let arrow = quiver.arrow(a);
        out_arrows[arrow.source.0].push(a);
        in_arrows[arrow.target.0].push(a);
    }

    let mut violations = Vec::new();
    for v in quiver.vertices() {
        let name = quiver.vertex_name(v).to_string();
        if in_arrows[v.0].len() > 2 {
            violations.push(Violation::InDegree {
                vertex: name.clone(),
                count: in_arrows[v.0].len(),
            });
        }
        if out_arrows[v.0].len() > 2 {
            violations.push(Violation::OutDegree {
                vertex: name,
                count: out_arrows[v.0].len(),
            });
        }
    }

    let m = quiver.arrow_count();
    let names = |ids: &[ArrowId]| -> Vec<String> {
        ids.iter().map(|a| quiver.arrow(*a).name.clone()).collect()
    };
    let mut relation_succ = vec![None; m];
    let mut relation_pred = vec![None; m];
    let mut permitted_succ = vec![None; m];
    let mut permitted_pred = vec![None; m];
    for b in quiver.arrows() {
        let tgt = quiver.arrow(b).target;
        let (rel, perm): (Vec<ArrowId>, Vec<ArrowId>) = out_arrows[tgt.0]
            .iter()
            .partition(|&&c| relation_set.contains(&(b, c)));
        let arrow = quiver.arrow(b).name.clone();
        match rel.as_slice() {
            [] => {}
            [c] => relation_succ[b.0] = Some(*c),
            _ => violations.push(Violation::RelationSuccessors {
                arrow: arrow.clone(),
                others: names(&rel),
            }),
        }
        match perm.as_slice() {
            [] => {}
            [c] => permitted_succ[b.0] = Some(*c),
            _ => violations.push(Violation::PermittedSuccessors {
                arrow,
                others: names(&perm),
            }),
        }

        let src = quiver.arrow(b).source;
        let (rel, perm): (Vec<ArrowId>, Vec<ArrowId>) = in_arrows[src.0]
            .iter()
            .partition(|&&a| relation_set.contains(&(a, b)));
        let arrow = quiver.arrow(b).name.clone();
        match rel.as_slice() {
            [] => {}
            [a] => relation_pred[b.0] = Some(*a),
            _ => violations.push(Violation::RelationPredecessors {
                arrow: arrow.clone(),
                others: names(&rel),
            }),
        }
        match perm.as_slice() {
            [] => {}
            [a] => permitted_pred[b.0] = Some(*a),
            _ => violations.push(Violation::PermittedPredecessors {
                arrow,
                others: names(&perm),
            }),
        }
    }

    // Only meaningful once the successor maps are functions.
    if violations.is_empty() {
        for cycle in functional_cycles(&permitted_succ) {
            violations.push(Violation::RelationFreeCycle {
                arrows: names(&cycle),
            });
        }
    }

    let components = component_count(n, &quiver.arrows);
    if components > 1 {
        violations.push(Violation::Disconnected { components });
    }

    if !violations.is_empty() {
        return Err(PresentationError::NotGentle(violations));
    }
    Ok(GentlePresentation {
        quiver,
        relations,
        relation_set,
        in_arrows,
        out_arrows,
        relation_succ,
        relation_pred,
        permitted_succ,
        permitted_pred,
    })
}

/// Cycles of a partial function on arrows, each rotated to start at its
/// smallest member and listed in order of that member.
fn functional_cycles(succ: &[Option<ArrowId>]) -> Vec<Vec<ArrowId>> {
    // 0 = unvisited, 1 = on current walk, 2 = finished
    let mut state = vec![0u8; succ.len()];
    let mut cycles = Vec::new();
    for start in 0..succ.len() {
        if state[start] != 0 {
            continue;
        }
        let mut walk = Vec::new();
        let mut cur = Some(ArrowId(start));
        while let Some(a) = cur {
            match state[a.0] {
                0 => {
                    state[a.0] = 1;
                    walk.push(a);
                    cur = succ[a.0];
                }
                1 => {
                    let pos = walk.iter().position(|&x| x == a).unwrap();
                    cycles.push(canonical_rotation(walk[pos..].to_vec()));
                    break;
                }
                _ => break,
            }
        }
        for a in walk {
            state[a.0] = 2;
        }
    }
    cycles.sort();
    cycles
}

fn canonical_rotation(mut cycle: Vec<ArrowId>) -> Vec<ArrowId> {
    if let Some(min_pos) = cycle.iter().enumerate().min_by_key(|(_, a)| **a).map(|(i, _)| i) {
        cycle.rotate_left(min_pos);
    }
    cycle
}

fn component_count(n: usize, arrows: &[Arrow]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = n;
    for a in arrows {
        let (x, y) = (find(&mut parent, a.source.0), find(&mut parent, a.target.0));
        if x != y {
            parent[x] = y;
            components -= 1;
        }
    }
    components
}

impl GentlePresentation {
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn arrow_count(&self) -> usize {
        self.quiver.arrow_count()
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> + '_ {
        self.quiver.vertices()
    }

    pub fn arrows(&self) -> impl ExactSizeIterator<Item = ArrowId> + '_ {
        self.quiver.arrows()
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        self.quiver.vertex_name(v)
    }

    pub fn arrow_name(&self, a: ArrowId) -> &str {
        &self.quiver.arrow(a).name
    }

    pub fn source(&self, a: ArrowId) -> VertexId {
        self.quiver.arrow(a).source
    }

    pub fn target(&self, a: ArrowId) -> VertexId {
        self.quiver.arrow(a).target
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.quiver
            .vertices
            .iter()
            .position(|v| v == name)
            .map(VertexId)
    }

    pub fn arrow_by_name(&self, name: &str) -> Option<ArrowId> {
        self.quiver
            .arrows
            .iter()
            .position(|a| a.name == name)
            .map(ArrowId)
    }

    /// Relations in input order.
    pub fn relations(&self) -> &[(ArrowId, ArrowId)] {
        &self.relations
    }

    pub fn is_relation(&self, first: ArrowId, second: ArrowId) -> bool {
        self.relation_set.contains(&(first, second))
    }

    pub fn in_arrows(&self, v: VertexId) -> &[ArrowId] {
        &self.in_arrows[v.0]
    }

    pub fn out_arrows(&self, v: VertexId) -> &[ArrowId] {
        &self.out_arrows[v.0]
    }

    /// The unique `c` with `ac` in I.
    pub fn relation_successor(&self, a: ArrowId) -> Option<ArrowId> {
        self.relation_succ[a.0]
    }

    /// The unique `c` with `ca` in I.
    pub fn relation_predecessor(&self, a: ArrowId) -> Option<ArrowId> {
        self.relation_pred[a.0]
    }

    /// The unique `c` with `t(a) = s(c)` and `ac` not in I.
    pub fn permitted_successor(&self, a: ArrowId) -> Option<ArrowId> {
        self.permitted_succ[a.0]
    }

    pub fn permitted_predecessor(&self, a: ArrowId) -> Option<ArrowId> {
        self.permitted_pred[a.0]
    }

    /// True when the path (given as consecutive arrows) has no length-two
    /// subpath in I. Does not check composability.
    pub fn is_relation_free(&self, path: &[ArrowId]) -> bool {
        path.windows(2).all(|w| !self.is_relation(w[0], w[1]))
    }

    /// Every oriented cycle all of whose consecutive compositions (including
    /// the wrap-around) are relations, rotated to start at its least arrow.
    pub fn full_relation_cycles(&self) -> Vec<Vec<ArrowId>> {
        functional_cycles(&self.relation_succ)
    }

    /// True when `Q` itself is a single oriented cycle with full relations.
    pub fn is_full_relation_cycle(&self) -> bool {
        let cycles = self.full_relation_cycles();
        cycles.len() == 1
            && cycles[0].len() == self.arrow_count()
            && self.arrow_count() == self.vertex_count()
    }

    /// Reverse every arrow and every relation.
    pub fn opposite(&self) -> GentlePresentation {
        let mut raw = RawPresentation {
            vertices: self.quiver.vertices.clone(),
            ..RawPresentation::default()
        };
        for a in &self.quiver.arrows {
            raw.arrows.push(RawArrow {
                name: a.name.clone(),
                source: self.quiver.vertices[a.target.0].clone(),
                target: self.quiver.vertices[a.source.0].clone(),
            });
        }
        for &(a, b) in &self.relations {
            raw.relations
                .push((self.arrow_name(b).to_string(), self.arrow_name(a).to_string()));
        }
        validate_gentle(&raw).expect("the opposite of a gentle algebra is gentle")
    }

    pub fn to_raw(&self) -> RawPresentation {
        RawPresentation {
            vertices: self.quiver.vertices.clone(),
            arrows: self
                .quiver
                .arrows
                .iter()
                .map(|a| RawArrow {
                    name: a.name.clone(),
                    source: self.quiver.vertices[a.source.0].clone(),
                    target: self.quiver.vertices[a.target.0].clone(),
                })
                .collect(),
            relations: self
                .relations
                .iter()
                .map(|&(a, b)| (self.arrow_name(a).to_string(), self.arrow_name(b).to_string()))
                .collect(),
        }
    }
}
