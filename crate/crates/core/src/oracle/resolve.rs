//! Minimal projective covers and their kernels by linear algebra.

use crate::dimension::Dimension;
use crate::presentation::{ArrowId, GentlePresentation, VertexId};

use super::matrix::Matrix;
use super::rep::{paths_from, projective_rep, LinearRep};

/// One step of a resolution computed by linear algebra.
#[derive(Clone, Debug)]
pub struct LinearStep {
    /// Top of the module, one entry per summand `P(v)` of the cover.
    pub tops: Vec<VertexId>,
    pub kernel: LinearRep,
    /// `rank` of the cover map at each vertex.
    pub cover_ranks: Vec<usize>,
    /// `dim P` at each vertex.
    pub cover_dims: Vec<usize>,
}

/// Product of the arrow maps of `m` along a path from the vertex of `v`.
fn act(m: &LinearRep, v: &Matrix, path: &[ArrowId]) -> Matrix {
    path.iter().fold(v.clone(), |acc, &x| acc.mul(&m.arrow_maps[x.0]))
}

pub fn cover_step(a: &GentlePresentation, m: &LinearRep) -> LinearStep {
    let p = m.p;
    let n = a.vertex_count();

    // top vectors: complement of the images of incoming arrows
    let mut tops = Vec::new();
    let mut generators: Vec<(VertexId, Matrix)> = Vec::new();
    for w in a.vertices() {
        let d = m.dim_vector[w.0];
        if d == 0 {
            continue;
        }
        let images: Vec<&Matrix> = a.in_arrows(w).iter().map(|&x| &m.arrow_maps[x.0]).collect();
        let radical = Matrix::vstack(&images, d, p);
        for c in radical.complement_of_row_space() {
            let mut e = Matrix::zeros(1, d, p);
            e.set(0, c, 1);
            tops.push(w);
            generators.push((w, e));
        }
    }

    // the cover and the images of its basis elements
    let covers: Vec<LinearRep> = generators.iter().map(|(w, _)| projective_rep(a, *w, p)).collect();
    let cover = LinearRep::direct_sum(a, &covers, p);
    let mut phi: Vec<Matrix> = a
        .vertices()
        .map(|u| Matrix::zeros(cover.dim_vector[u.0], m.dim_vector[u.0], p))
        .collect();
    let mut offsets = vec![0usize; n];
    for (w, e) in &generators {
        // same basis order as `projective_rep`
        let mut local = vec![0usize; n];
        for path in paths_from(a, *w) {
            let u = path.last().map_or(*w, |&x| a.target(x));
            let image = act(m, e, &path);
            let row = offsets[u.0] + local[u.0];
            local[u.0] += 1;
            for c in 0..image.cols() {
                phi[u.0].set(row, c, image.get(0, c));
            }
        }
        for u in 0..n {
            offsets[u] += local[u];
        }
    }

    let cover_ranks: Vec<usize> = phi.iter().map(Matrix::rank).collect();
    let bases: Vec<Matrix> = phi.iter().map(Matrix::left_nullspace).collect();
    let kernel_maps = a
        .arrows()
        .map(|x| {
            let (s, t) = (a.source(x).0, a.target(x).0);
            let image = bases[s].mul(&cover.arrow_maps[x.0]);
            bases[t]
                .left_solve(&image)
                .expect("kernel is a subrepresentation")
        })
        .collect();
    LinearStep {
        tops,
        kernel: LinearRep {
            p,
            dim_vector: bases.iter().map(Matrix::rows).collect(),
            arrow_maps: kernel_maps,
        },
        cover_ranks,
        cover_dims: cover.dim_vector,
    }
}

/// Projective dimension by iterated linear syzygies, infinity if the
/// `cap`-th syzygy is still nonzero.
pub fn pd_linear(a: &GentlePresentation, m: &LinearRep, cap: u32) -> Dimension {
    let mut cur = m.clone();
    if cur.is_zero() {
        return Dimension::ZERO;
    }
    for k in 0..cap {
        let step = cover_step(a, &cur);
        if step.kernel.is_zero() {
            return Dimension::Finite(k);
        }
        cur = step.kernel;
    }
    Dimension::Infinite
}

/// Up to `steps` cover steps, stopping early at a zero kernel.
pub fn linear_resolution(a: &GentlePresentation, m: &LinearRep, steps: usize) -> Vec<LinearStep> {
    let mut out: Vec<LinearStep> = Vec::new();
    let mut cur = m.clone();
    for _ in 0..steps {
        if cur.is_zero() {
            break;
        }
        let step = cover_step(a, &cur);
        cur = step.kernel.clone();
        out.push(step);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::oracle::rep::{injective_rep, rep_of_string, simple_rep};
    use crate::strings::string_of_injective;

    fn v(a: &GentlePresentation, name: &str) -> VertexId {
        a.vertex_by_name(name).unwrap()
    }

    #[test]
    fn examples() {
        let t9 = fixtures::t9();
        assert_eq!(pd_linear(&t9, &simple_rep(&t9, v(&t9, "4"), 2), 3), 1u32.into());
        assert_eq!(pd_linear(&t9, &simple_rep(&t9, v(&t9, "1"), 2), 3), Dimension::Infinite);
        let ex72 = fixtures::ex72();
        let i8 = injective_rep(&ex72, v(&ex72, "8"), 2);
        assert_eq!(pd_linear(&ex72, &i8, 6), 4u32.into());
        let i8s = rep_of_string(&ex72, &string_of_injective(&ex72, v(&ex72, "8")), 3);
        assert_eq!(pd_linear(&ex72, &i8s, 6), 4u32.into());
    }

    #[test]
    fn exactness() {
        for (name, a) in fixtures::all() {
            for x in a.vertices() {
                let m = simple_rep(&a, x, 2);
                let mut dims = m.dim_vector.clone();
                for step in linear_resolution(&a, &m, 4) {
                    assert_eq!(step.cover_ranks, dims, "{name}: cover is onto");
                    for u in 0..a.vertex_count() {
                        assert_eq!(step.kernel.dim_vector[u] + dims[u], step.cover_dims[u]);
                    }
                    assert!(step.kernel.is_valid(&a), "{name}");
                    dims = step.kernel.dim_vector.clone();
                }
            }
        }
    }
}
