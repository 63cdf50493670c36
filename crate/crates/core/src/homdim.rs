//! Global dimension, self-injective dimension, resolutions of simples and
//! injectives, and Gorenstein-projective modules.

use std::collections::HashMap;

use serde::Serialize;

use crate::dimension::Dimension;
use crate::error::{CapError, InvariantError};
use crate::presentation::{ArrowId, GentlePresentation, VertexId};
use crate::strings::{
    leg, pd_string, projective_cover, string_of_injective, string_of_projective, syzygy, Letter,
    StringSum, StringWord,
};
use crate::surface::{ag_invariant, SurfaceModel};
use crate::threads::{forbidden_tail, ThreadSet};

/// `max c(polygon) - 1` over all elementary polygons.
pub fn gldim_via_polygons(a: &GentlePresentation) -> Result<Dimension, InvariantError> {
    let s = SurfaceModel::new(a)?;
    Ok(s.polygons
        .iter()
        .map(|p| p.c_number.pred())
        .max()
        .unwrap_or(Dimension::ZERO))
}

/// Longest forbidden thread; infinite as soon as there is a full-relation cycle.
pub fn gldim_via_threads(a: &GentlePresentation) -> Dimension {
    let t = ThreadSet::new(a);
    if !t.infinite_cycles.is_empty() {
        return Dimension::Infinite;
    }
    t.forbidden_finite
        .iter()
        .map(|f| Dimension::from(f.len()))
        .max()
        .unwrap_or(Dimension::ZERO)
}

pub fn gldim(a: &GentlePresentation) -> Dimension {
    gldim_via_threads(a)
}

pub fn pd_simple(a: &GentlePresentation, v: VertexId) -> Dimension {
    a.out_arrows(v)
        .iter()
        .map(|&x| forbidden_tail(a, x))
        .max()
        .unwrap_or(Dimension::ZERO)
}

/// Self-injective dimension, the same on both sides.
pub fn injdim(a: &GentlePresentation) -> Dimension {
    if a.vertex_count() == 1 && a.arrow_count() == 0 || a.is_full_relation_cycle() {
        return Dimension::ZERO;
    }
    let longest = ThreadSet::new(a)
        .forbidden_finite
        .iter()
        .map(|f| f.len() as u32)
        .max()
        .unwrap_or(0);
    Dimension::Finite(longest.max(1))
}

/// Smallest cap for which an infinite verdict of an iterated-syzygy
/// computation is sound.
pub fn sound_cap(a: &GentlePresentation) -> u32 {
    injdim(a).finite().expect("gentle algebras are Gorenstein") + 1
}

/// Resolves a requested cap: `None` means the sound default.
pub fn resolve_cap(a: &GentlePresentation, cap: Option<u32>) -> Result<u32, CapError> {
    let required = sound_cap(a);
    match cap {
        None => Ok(required),
        Some(c) if c < required => Err(CapError { cap: c, required }),
        Some(c) => Ok(c),
    }
}

pub fn pd_module(a: &GentlePresentation, m: &StringSum) -> Dimension {
    pd_string(a, m, sound_cap(a))
}

pub fn pd_injective(a: &GentlePresentation, v: VertexId) -> Dimension {
    pd_module(a, &string_of_injective(a, v).into())
}

/// Kernel summand of the projective cover of `I(v)` sitting at `v` itself:
/// the overshoots of the legs through the in-arrows of `v`, joined at `v`
/// when there are two of them.
fn socle_kernel(a: &GentlePresentation, v: VertexId) -> Option<StringWord> {
    let over = |x: ArrowId| a.permitted_successor(x).map(|y| leg(a, y)).unwrap_or_default();
    match a.in_arrows(v) {
        [] => None,
        [x] => {
            let o = over(*x);
            let (&first, rest) = o.split_first()?;
            Some(StringWord::path(a, a.target(first), rest))
        }
        [x, y] => {
            let (l, r) = (over(*x), over(*y));
            let start = l.last().map_or(v, |&z| a.target(z));
            let mut letters: Vec<Letter> = l.iter().rev().map(|&z| Letter::inverse(z)).collect();
            letters.extend(r.iter().map(|&z| Letter::direct(z)));
            Some(StringWord::new(a, start, letters).expect("joined overshoots form a string"))
        }
        _ => unreachable!("gentle vertices have at most two incoming arrows"),
    }
}

fn is_projective(a: &GentlePresentation, w: &StringWord) -> bool {
    let top = w.top(a);
    top.len() == 1 && string_of_projective(a, top[0]) == *w
}

/// Projective dimension of `I(v)` read off the polygons: zero when `I(v)` is
/// projective, otherwise `max{1, c - 1}` over the polygons reached from the
/// end tops of the injective string through their outgoing arrow that
/// leaves the string.
///
/// `None` when the kernel of the cover of `I(v)` has a nonprojective summand
/// at `v`, where the polygon count no longer describes the resolution.
pub fn pd_injective_by_polygons(a: &GentlePresentation, v: VertexId) -> Option<Dimension> {
    let w = string_of_injective(a, v);
    if is_projective(a, &w) {
        return Some(Dimension::ZERO);
    }
    if let Some(m) = socle_kernel(a, v) {
        if !is_projective(a, &m) {
            return None;
        }
    }
    let on_string: Vec<ArrowId> = w.letters().iter().map(|l| l.arrow).collect();
    let pos = w.positions(a);
    let top = w.top(a);
    let mut best = Dimension::Finite(1);
    for t in [pos[0], *pos.last().unwrap()] {
        if !top.contains(&t) {
            continue;
        }
        for &d in a.out_arrows(t).iter().filter(|x| !on_string.contains(x)) {
            best = best.max(forbidden_tail(a, d));
        }
    }
    Some(best)
}

/// A detected repetition in an infinite resolution: the degrees
/// `start .. start + length` repeat forever.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Period {
    pub start: usize,
    pub length: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolutionLadder {
    /// Degree `k` lists the vertices `v` with `P(v)` in the `k`-th term.
    pub degrees: Vec<Vec<VertexId>>,
    pub terminates: bool,
    pub period: Option<Period>,
}

impl ResolutionLadder {
    /// Projective dimension of the resolved module.
    pub fn length(&self) -> Dimension {
        if self.terminates {
            Dimension::from(self.degrees.len().saturating_sub(1))
        } else {
            Dimension::Infinite
        }
    }

    /// The repeating block of degrees.
    pub fn cycle(&self) -> Option<&[Vec<VertexId>]> {
        self.period
            .map(|p| &self.degrees[p.start..p.start + p.length])
    }

    fn unroll(&mut self, max_terms: usize) {
        if let Some(p) = self.period {
            while self.degrees.len() < max_terms {
                let k = self.degrees.len();
                let d = self.degrees[p.start + (k - p.start) % p.length].clone();
                self.degrees.push(d);
            }
        }
    }
}

/// Runs `step` from `state` until it returns `None` (termination) or a
/// state repeats (period). `degree` reads the term off a state.
fn ladder<S, F, D>(initial: S, mut step: F, degree: D, max_terms: usize) -> ResolutionLadder
where
    S: Clone + Eq + std::hash::Hash,
    F: FnMut(&S) -> Option<S>,
    D: Fn(&S) -> Vec<VertexId>,
{
    let mut seen: HashMap<S, usize> = HashMap::new();
    let mut degrees = Vec::new();
    let mut cur = Some(initial);
    let mut period = None;
    while let Some(state) = cur {
        let k = degrees.len();
        if let Some(&j) = seen.get(&state) {
            period = Some(Period {
                start: j,
                length: k - j,
            });
            break;
        }
        seen.insert(state.clone(), k);
        degrees.push(degree(&state));
        cur = step(&state);
    }
    let mut out = ResolutionLadder {
        terminates: period.is_none(),
        degrees,
        period,
    };
    out.unroll(max_terms.max(1));
    out
}

/// Minimal projective resolution of any string module by iterated syzygies.
pub fn resolution_of_module(a: &GentlePresentation, m: &StringSum, max_terms: usize) -> ResolutionLadder {
    ladder(
        m.clone(),
        |s| {
            let next = syzygy(a, s);
            (!next.is_zero()).then_some(next)
        },
        |s| projective_cover(a, s).tops,
        max_terms,
    )
}

/// Resolution of `S(v)` along the two forbidden paths leaving `v`: degree
/// `k >= 1` holds the targets of their `k`-th arrows.
pub fn resolution_of_simple(a: &GentlePresentation, v: VertexId, max_terms: usize) -> ResolutionLadder {
    #[derive(Clone, PartialEq, Eq, Hash)]
    enum State {
        Vertex(VertexId),
        Arrows(Vec<ArrowId>),
    }
    ladder(
        State::Vertex(v),
        |s| {
            let next: Vec<ArrowId> = match s {
                State::Vertex(v) => a.out_arrows(*v).to_vec(),
                State::Arrows(xs) => xs.iter().filter_map(|&x| a.relation_successor(x)).collect(),
            };
            (!next.is_empty()).then_some(State::Arrows(next))
        },
        |s| match s {
            State::Vertex(v) => vec![*v],
            State::Arrows(xs) => {
                let mut d: Vec<VertexId> = xs.iter().map(|&x| a.target(x)).collect();
                d.sort();
                d
            }
        },
        max_terms,
    )
}

pub fn resolution_of_injective(a: &GentlePresentation, v: VertexId, max_terms: usize) -> ResolutionLadder {
    resolution_of_module(a, &string_of_injective(a, v).into(), max_terms)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GorensteinReport {
    /// One indecomposable projective per vertex.
    pub projectives: Vec<VertexId>,
    /// `alpha A` for each arrow `alpha` on a full-relation cycle.
    pub nonprojectives: Vec<StringWord>,
    /// `sum l * phi(0, l)` from the AG-invariant.
    pub count_by_formula: usize,
}

/// The uniserial module `alpha A`: top at the target of `alpha`, then the
/// maximal permitted path continuing after `alpha`.
pub fn alpha_module(a: &GentlePresentation, alpha: ArrowId) -> StringWord {
    let t = a.target(alpha);
    match a.permitted_successor(alpha) {
        Some(next) => StringWord::path(a, t, &leg(a, next)),
        None => StringWord::simple(t),
    }
}

pub fn gorenstein_projectives(a: &GentlePresentation) -> Result<GorensteinReport, InvariantError> {
    let nonprojectives = a
        .full_relation_cycles()
        .iter()
        .flatten()
        .map(|&x| alpha_module(a, x))
        .collect();
    Ok(GorensteinReport {
        projectives: a.vertices().collect(),
        nonprojectives,
        count_by_formula: gp_count_via_ag(a)?,
    })
}

pub fn gp_count_via_ag(a: &GentlePresentation) -> Result<usize, InvariantError> {
    Ok(ag_invariant(a)?.weighted_zero_pairs() as usize)
}

pub fn is_gldim_finite_via_ag(a: &GentlePresentation) -> Result<bool, InvariantError> {
    Ok(!ag_invariant(a)?.has_zero_pair())
}

/// One row of the table of projective dimensions of simples and injectives.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PdRow {
    pub vertex: String,
    pub simple: Dimension,
    pub injective: Dimension,
}

pub fn pd_table(a: &GentlePresentation) -> Vec<PdRow> {
    a.vertices()
        .map(|v| PdRow {
            vertex: a.vertex_name(v).to_string(),
            simple: pd_simple(a, v),
            injective: pd_injective(a, v),
        })
        .collect()
}
