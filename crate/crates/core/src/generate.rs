//! Seeded random gentle presentations.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::presentation::{validate_gentle, GentlePresentation, RawPresentation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub vertex_count: usize,
    /// Clamped to `2 * vertex_count`; at least `vertex_count - 1` arrows are
    /// always drawn to connect the quiver.
    pub target_arrow_count: usize,
    pub seed: u64,
    pub allow_full_cycles: bool,
}

impl GeneratorConfig {
    pub fn new(vertex_count: usize, seed: u64) -> Self {
        GeneratorConfig {
            vertex_count,
            target_arrow_count: default_arrow_count(vertex_count),
            seed,
            allow_full_cycles: true,
        }
    }
}

pub fn default_arrow_count(vertex_count: usize) -> usize {
    vertex_count.saturating_sub(1) + vertex_count / 2
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("vertex count must be at least 1")]
    NoVertices,
    #[error("no gentle presentation found in {attempts} attempts")]
    BudgetExhausted { attempts: usize },
}

const ATTEMPTS: usize = 2000;
const STEP_DOWN: usize = 100;

/// Draws arrows within the degree bounds (a spanning tree first), pairs
/// the arrows at each vertex into relations and non-relations at random,
/// and rejects draws with a relation-free oriented cycle (or, unless
/// allowed, a full-relation cycle). Some targets admit no gentle
/// presentation (two loops at one vertex, say), so every `STEP_DOWN` failed
/// draws the target drops by one arrow, down to a spanning tree.
pub fn gen_gentle(cfg: &GeneratorConfig) -> Result<GentlePresentation, GenerateError> {
    let n = cfg.vertex_count;
    if n == 0 {
        return Err(GenerateError::NoVertices);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let target = cfg.target_arrow_count.clamp(n - 1, 2 * n);
    for attempt in 0..ATTEMPTS {
        let target = target.saturating_sub(attempt / STEP_DOWN).max(n - 1);
        let Some(arrows) = draw_arrows(&mut rng, n, target) else {
            continue;
        };
        let relations = draw_relations(&mut rng, n, &arrows);
        let mut raw = RawPresentation::new();
        for v in 1..=n {
            raw = raw.vertex(v.to_string());
        }
        for (i, &(s, t)) in arrows.iter().enumerate() {
            raw = raw.arrow(format!("x{}", i + 1), (s + 1).to_string(), (t + 1).to_string());
        }
        for (x, y) in relations {
            raw = raw.relation(format!("x{}", x + 1), format!("x{}", y + 1));
        }
        let Ok(a) = validate_gentle(&raw) else {
            continue;
        };
        if !cfg.allow_full_cycles && !a.full_relation_cycles().is_empty() {
            continue;
        }
        return Ok(a);
    }
    Err(GenerateError::BudgetExhausted { attempts: ATTEMPTS })
}

fn draw_arrows(rng: &mut ChaCha8Rng, n: usize, target: usize) -> Option<Vec<(usize, usize)>> {
    let mut outdeg = vec![0u8; n];
    let mut indeg = vec![0u8; n];
    let mut arrows = Vec::with_capacity(target);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let new = order[i];
        let candidates: Vec<(usize, usize)> = order[..i]
            .iter()
            .flat_map(|&old| [(old, new), (new, old)])
            .filter(|&(s, t)| outdeg[s] < 2 && indeg[t] < 2)
            .collect();
        let &(s, t) = candidates.choose(rng)?;
        outdeg[s] += 1;
        indeg[t] += 1;
        arrows.push((s, t));
    }
    let mut tries = 0;
    while arrows.len() < target && tries < 20 * n {
        tries += 1;
        let s = rng.gen_range(0..n);
        let t = rng.gen_range(0..n);
        if outdeg[s] < 2 && indeg[t] < 2 {
            outdeg[s] += 1;
            indeg[t] += 1;
            arrows.push((s, t));
        }
    }
    arrows.shuffle(rng);
    Some(arrows)
}

/// At each vertex every incoming arrow gets at most one relation and at most
/// one non-relation continuation, and dually; with two arrows on the other
/// side both occur.
fn draw_relations(rng: &mut ChaCha8Rng, n: usize, arrows: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut relations = Vec::new();
    for v in 0..n {
        let ins: Vec<usize> = (0..arrows.len()).filter(|&i| arrows[i].1 == v).collect();
        let outs: Vec<usize> = (0..arrows.len()).filter(|&i| arrows[i].0 == v).collect();
        match (ins.len(), outs.len()) {
            (0, _) | (_, 0) => {}
            (1, 1) => {
                if rng.gen_bool(0.5) {
                    relations.push((ins[0], outs[0]));
                }
            }
            (1, 2) => relations.push((ins[0], *outs.choose(rng).unwrap())),
            (2, 1) => relations.push((*ins.choose(rng).unwrap(), outs[0])),
            (2, 2) => {
                let swap = rng.gen_bool(0.5) as usize;
                relations.push((ins[0], outs[swap]));
                relations.push((ins[1], outs[1 - swap]));
            }
            _ => unreachable!("degrees are bounded by two"),
        }
    }
    relations
}
