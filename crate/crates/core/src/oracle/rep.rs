//! Quiver representations over `F_p`, built directly from paths.
//!
//! Vectors are rows. The map of an arrow `x: s -> t` has shape
//! `dim(s) x dim(t)` and acts by `v |-> v * A_x`, so a path `x y` acts by
//! `A_x * A_y`.

use crate::presentation::{ArrowId, GentlePresentation, VertexId};
use crate::strings::StringWord;

use super::matrix::Matrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearRep {
    pub p: u32,
    pub dim_vector: Vec<usize>,
    pub arrow_maps: Vec<Matrix>,
}

impl LinearRep {
    pub fn zero(a: &GentlePresentation, p: u32) -> Self {
        LinearRep {
            p,
            dim_vector: vec![0; a.vertex_count()],
            arrow_maps: a.arrows().map(|_| Matrix::zeros(0, 0, p)).collect(),
        }
    }

    pub fn total_dimension(&self) -> usize {
        self.dim_vector.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dimension() == 0
    }

    /// Shapes agree with the quiver and every relation acts as zero.
    pub fn is_valid(&self, a: &GentlePresentation) -> bool {
        let shapes = a.arrows().all(|x| {
            let m = &self.arrow_maps[x.0];
            m.rows() == self.dim_vector[a.source(x).0] && m.cols() == self.dim_vector[a.target(x).0]
        });
        shapes
            && a
                .relations()
                .iter()
                .all(|&(x, y)| self.arrow_maps[x.0].mul(&self.arrow_maps[y.0]).is_zero())
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(a: &GentlePresentation, parts: &[LinearRep], p: u32) -> LinearRep {
        let n = a.vertex_count();
        let mut dim_vector = vec![0; n];
        for part in parts {
            for v in 0..n {
                dim_vector[v] += part.dim_vector[v];
            }
        }
        let arrow_maps = a
            .arrows()
            .map(|x| {
                let (s, t) = (a.source(x).0, a.target(x).0);
                let mut m = Matrix::zeros(dim_vector[s], dim_vector[t], p);
                let (mut r0, mut c0) = (0, 0);
                for part in parts {
                    let b = &part.arrow_maps[x.0];
                    for i in 0..b.rows() {
                        for j in 0..b.cols() {
                            m.set(r0 + i, c0 + j, b.get(i, j));
                        }
                    }
                    r0 += part.dim_vector[s];
                    c0 += part.dim_vector[t];
                }
                m
            })
            .collect();
        LinearRep {
            p,
            dim_vector,
            arrow_maps,
        }
    }
}

/// All paths (as arrow lists, trivial included) avoiding the relations
/// and starting at `v`.
pub fn paths_from(a: &GentlePresentation, v: VertexId) -> Vec<Vec<ArrowId>> {
    let mut out = vec![Vec::new()];
    let mut frontier: Vec<Vec<ArrowId>> = vec![Vec::new()];
    while let Some(p) = frontier.pop() {
        let here = p.last().map_or(v, |&x| a.target(x));
        for &x in a.out_arrows(here) {
            if let Some(&last) = p.last() {
                if a.is_relation(last, x) {
                    continue;
                }
            }
            let mut q = p.clone();
            q.push(x);
            assert!(q.len() <= 4 * a.arrow_count() + 4, "path algebra is not finite-dimensional");
            out.push(q.clone());
            frontier.push(q);
        }
    }
    out.sort();
    out
}

fn path_end(a: &GentlePresentation, start: VertexId, p: &[ArrowId]) -> VertexId {
    p.last().map_or(start, |&x| a.target(x))
}

/// Number of nonzero paths, trivial ones included.
pub fn algebra_dimension(a: &GentlePresentation) -> usize {
    a.vertices().map(|v| paths_from(a, v).len()).sum()
}

/// For each vertex the local index of each basis element that lives there.
fn local_indices(a: &GentlePresentation, at: &[VertexId]) -> (Vec<usize>, Vec<usize>) {
    let mut dims = vec![0; a.vertex_count()];
    let idx = at
        .iter()
        .map(|v| {
            let i = dims[v.0];
            dims[v.0] += 1;
            i
        })
        .collect();
    (dims, idx)
}

/// `P(v) = e_v A`: basis the nonzero paths from `v`, arrows act by right
/// multiplication.
pub fn projective_rep(a: &GentlePresentation, v: VertexId, p: u32) -> LinearRep {
    let paths = paths_from(a, v);
    let at: Vec<VertexId> = paths.iter().map(|q| path_end(a, v, q)).collect();
    let (dims, idx) = local_indices(a, &at);
    let mut maps: Vec<Matrix> = a
        .arrows()
        .map(|x| Matrix::zeros(dims[a.source(x).0], dims[a.target(x).0], p))
        .collect();
    for (i, q) in paths.iter().enumerate() {
        for &x in a.out_arrows(at[i]) {
            if q.last().is_some_and(|&l| a.is_relation(l, x)) {
                continue;
            }
            let mut longer = q.clone();
            longer.push(x);
            let j = paths.binary_search(&longer).expect("extended path is enumerated");
            maps[x.0].set(idx[i], idx[j], 1);
        }
    }
    LinearRep {
        p,
        dim_vector: dims,
        arrow_maps: maps,
    }
}

/// `I(v) = D(A e_v)`: basis the duals of the nonzero paths ending at `v`,
/// indexed by their source. `x` sends the dual of `x q` to the dual of `q`.
pub fn injective_rep(a: &GentlePresentation, v: VertexId, p: u32) -> LinearRep {
    let mut paths: Vec<(VertexId, Vec<ArrowId>)> = a
        .vertices()
        .flat_map(|u| {
            paths_from(a, u)
                .into_iter()
                .filter(move |q| path_end(a, u, q) == v)
                .map(move |q| (u, q))
        })
        .collect();
    paths.sort();
    let at: Vec<VertexId> = paths.iter().map(|(u, _)| *u).collect();
    let (dims, idx) = local_indices(a, &at);
    let mut maps: Vec<Matrix> = a
        .arrows()
        .map(|x| Matrix::zeros(dims[a.source(x).0], dims[a.target(x).0], p))
        .collect();
    for (i, (_, q)) in paths.iter().enumerate() {
        if let Some((&x, rest)) = q.split_first() {
            let key = (a.target(x), rest.to_vec());
            let j = paths.binary_search(&key).expect("suffix path is enumerated");
            maps[x.0].set(idx[i], idx[j], 1);
        }
    }
    LinearRep {
        p,
        dim_vector: dims,
        arrow_maps: maps,
    }
}

pub fn simple_rep(a: &GentlePresentation, v: VertexId, p: u32) -> LinearRep {
    let mut dims = vec![0; a.vertex_count()];
    dims[v.0] = 1;
    let maps = a
        .arrows()
        .map(|x| Matrix::zeros(dims[a.source(x).0], dims[a.target(x).0], p))
        .collect();
    LinearRep {
        p,
        dim_vector: dims,
        arrow_maps: maps,
    }
}

/// One basis vector per position of the word; each letter contributes a
/// single 1 to the map of its arrow.
pub fn rep_of_string(a: &GentlePresentation, w: &StringWord, p: u32) -> LinearRep {
    let at = w.positions(a);
    let (dims, idx) = local_indices(a, &at);
    let mut maps: Vec<Matrix> = a
        .arrows()
        .map(|x| Matrix::zeros(dims[a.source(x).0], dims[a.target(x).0], p))
        .collect();
    for (k, l) in w.letters().iter().enumerate() {
        let (from, to) = if l.inverse { (k + 1, k) } else { (k, k + 1) };
        maps[l.arrow.0].set(idx[from], idx[to], 1);
    }
    LinearRep {
        p,
        dim_vector: dims,
        arrow_maps: maps,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::strings::{parse_string, string_of_injective, string_of_projective};

    fn v(a: &GentlePresentation, name: &str) -> VertexId {
        a.vertex_by_name(name).unwrap()
    }

    #[test]
    fn algebra_dimensions() {
        assert_eq!(algebra_dimension(&fixtures::point()), 1);
        assert_eq!(algebra_dimension(&fixtures::a2()), 3);
        assert_eq!(algebra_dimension(&fixtures::t9()), 27);
        assert_eq!(algebra_dimension(&fixtures::kronecker()), 4);
    }

    #[test]
    fn string_reps() {
        let t9 = fixtures::t9();
        let s = rep_of_string(&t9, &StringWord::simple(v(&t9, "4")), 2);
        assert_eq!(s.total_dimension(), 1);
        assert!(s.arrow_maps.iter().all(Matrix::is_zero));

        let w = parse_string(&t9, "f g").unwrap();
        let r = rep_of_string(&t9, &w, 2);
        assert_eq!(r.dim_vector, vec![0, 1, 0, 0, 0, 1, 1, 0, 0]);
        let f = t9.arrow_by_name("f").unwrap();
        let g = t9.arrow_by_name("g").unwrap();
        assert_eq!(r.arrow_maps[f.0].rank(), 1);
        assert_eq!(r.arrow_maps[g.0].rank(), 1);

        let p1 = rep_of_string(&t9, &string_of_projective(&t9, v(&t9, "1")), 2);
        assert_eq!(p1.total_dimension(), 6);
    }

    #[test]
    fn path_reps_match_strings() {
        for (name, a) in fixtures::all() {
            for x in a.vertices() {
                for p in [2, 3] {
                    let proj = projective_rep(&a, x, p);
                    let inj = injective_rep(&a, x, p);
                    assert!(proj.is_valid(&a), "{name}");
                    assert!(inj.is_valid(&a), "{name}");
                    assert_eq!(proj.dim_vector, string_of_projective(&a, x).dim_vector(&a), "{name}");
                    assert_eq!(inj.dim_vector, string_of_injective(&a, x).dim_vector(&a), "{name}");
                    assert!(rep_of_string(&a, &string_of_projective(&a, x), p).is_valid(&a));
                }
            }
        }
    }
}
