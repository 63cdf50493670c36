//! Brute-force verification over a finite field.
//!
//! Modules are realised as explicit quiver representations (built from path
//! enumeration, not from the string combinatorics), covered by sums of
//! indecomposable projectives, and resolved by rank and nullspace
//! computations. `check_equalities` compares every combinatorial dimension
//! of a presentation against these computations.

pub mod matrix;
pub mod rep;
pub mod resolve;

use serde::Serialize;

use crate::dimension::Dimension;
use crate::error::{CapError, InvariantError};
use crate::homdim;
use crate::presentation::GentlePresentation;
use crate::strings::{self, StringSum, StringWord};
use crate::surface::SurfaceModel;
use crate::threads::ThreadSet;

pub use matrix::Matrix;
pub use rep::{algebra_dimension, injective_rep, projective_rep, rep_of_string, simple_rep, LinearRep};
pub use resolve::{cover_step, linear_resolution, pd_linear, LinearStep};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckEntry {
    pub name: String,
    pub combinatorial: String,
    pub oracle: String,
    pub agree: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub field: u32,
    pub cap: u32,
    pub checks: Vec<CheckEntry>,
}

impl OracleReport {
    pub fn all_agree(&self) -> bool {
        self.checks.iter().all(|c| c.agree)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.checks.iter().filter(|c| !c.agree)
    }

    fn push<T: PartialEq + ToString>(&mut self, name: impl Into<String>, combinatorial: T, oracle: T) {
        self.checks.push(CheckEntry {
            name: name.into(),
            agree: combinatorial == oracle,
            combinatorial: combinatorial.to_string(),
            oracle: oracle.to_string(),
        });
    }
}

#[derive(Debug, thiserror::Error)]
pub enum OracleError {
    #[error(transparent)]
    Cap(#[from] CapError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error("unsupported field characteristic {0}; use 2 or 3")]
    Field(u32),
}

fn dims(v: &[usize]) -> String {
    format!("{v:?}")
}

/// Dimension vectors of the string syzygies of `m`, one per step.
fn string_syzygy_dims(a: &GentlePresentation, m: &StringWord, steps: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = StringSum::from(m.clone());
    for _ in 0..steps {
        if cur.is_zero() {
            break;
        }
        cur = strings::syzygy(a, &cur);
        out.push(cur.dim_vector(a));
    }
    out
}

fn linear_syzygy_dims(a: &GentlePresentation, m: &LinearRep, steps: usize) -> Vec<Vec<usize>> {
    linear_resolution(a, m, steps)
        .into_iter()
        .map(|s| s.kernel.dim_vector)
        .collect()
}

/// Every combinatorial dimension of `a` against the linear-algebra oracle
/// over `F_p`. `cap` defaults to the sound cap; smaller caps are refused.
pub fn check_equalities(
    a: &GentlePresentation,
    p: u32,
    cap: Option<u32>,
) -> Result<OracleReport, OracleError> {
    if p != 2 && p != 3 {
        return Err(OracleError::Field(p));
    }
    let cap = homdim::resolve_cap(a, cap)?;
    let mut report = OracleReport {
        field: p,
        cap,
        checks: Vec::new(),
    };

    let mut max_simple = Dimension::ZERO;
    let mut max_injective = Dimension::ZERO;
    for v in a.vertices() {
        let name = a.vertex_name(v);
        let s = simple_rep(a, v, p);
        let i = injective_rep(a, v, p);
        let pd_s = pd_linear(a, &s, cap);
        let pd_i = pd_linear(a, &i, cap);
        max_simple = max_simple.max(pd_s);
        max_injective = max_injective.max(pd_i);
        report.push(format!("pd S({name})"), homdim::pd_simple(a, v), pd_s);
        report.push(format!("pd I({name})"), homdim::pd_injective(a, v), pd_i);

        let inj_string = strings::string_of_injective(a, v);
        report.push(
            format!("dim I({name})"),
            dims(&inj_string.dim_vector(a)),
            dims(&i.dim_vector),
        );
        let proj_string = strings::string_of_projective(a, v);
        report.push(
            format!("dim P({name})"),
            dims(&proj_string.dim_vector(a)),
            dims(&projective_rep(a, v, p).dim_vector),
        );

        let steps = cap as usize;
        for (label, word, rep) in [
            ("S", StringWord::simple(v), s),
            ("I", inj_string, i),
        ] {
            let combinatorial = string_syzygy_dims(a, &word, steps);
            let linear = linear_syzygy_dims(a, &rep, steps);
            report.push(
                format!("syzygy dims {label}({name})"),
                format!("{combinatorial:?}"),
                format!("{linear:?}"),
            );
        }
    }

    let gp = homdim::gldim_via_polygons(a)?;
    let gt = homdim::gldim_via_threads(a);
    report.push("gl.dim polygons vs threads", gp, gt);
    report.push("gl.dim vs max pd S", gp, max_simple);

    let inj = homdim::injdim(a);
    report.push("inj.dim vs max pd I", inj, max_injective);
    report.push("inj.dim vs opposite", inj, homdim::injdim(&a.opposite()));
    report.push(
        "gl.dim finite vs AG",
        gp.is_finite(),
        homdim::is_gldim_finite_via_ag(a)?,
    );

    let gorenstein = homdim::gorenstein_projectives(a)?;
    let on_cycles: usize = a.full_relation_cycles().iter().map(Vec::len).sum();
    report.push(
        "nonprojective GP vs AG count",
        gorenstein.nonprojectives.len(),
        gorenstein.count_by_formula,
    );
    report.push("nonprojective GP vs arrows on full cycles", gorenstein.nonprojectives.len(), on_cycles);

    let threads = ThreadSet::new(a);
    let surface = SurfaceModel::new(a)?;
    let marked: usize = surface.ag_invariant().marked_total() as usize;
    report.push("permitted vs finite forbidden threads", threads.permitted.len(), threads.forbidden_finite.len());
    report.push("permitted threads vs marked points", threads.permitted.len(), marked);
    report.push("polygons vs forbidden threads", surface.polygons.len(), threads.forbidden_count());

    let paths: usize = a
        .vertices()
        .map(|v| strings::string_of_projective(a, v).dimension())
        .sum();
    report.push("dim A", paths, algebra_dimension(a));
    Ok(report)
}
