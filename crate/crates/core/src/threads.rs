//! Permitted and forbidden threads.
//!
//! Every vertex `v` has two permitted slots and two forbidden slots. A
//! permitted slot is a pair (incoming arrow, outgoing arrow), either side
//! possibly empty, such that the arrows compose outside the relations; a
//! forbidden slot is the same with the composition inside the relations.
//! The permitted slots are filled by the non-relation pairs at `v`, then the
//! unpaired incoming and outgoing arrows, then empty pairs. The forbidden
//! slots are the cross pairing: forbidden slot `y` takes the incoming arrow
//! of permitted slot `1 - y` and the outgoing arrow of permitted slot `y`.
//!
//! Threads are the maximal chains through these slots; an empty pair is a
//! trivial thread. Geometrically the permitted slots of `v` are the two
//! endpoints of the arc `v` and the forbidden slots its two sides.

use std::collections::HashMap;

use serde::Serialize;

use crate::dimension::Dimension;
use crate::presentation::{ArrowId, GentlePresentation, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ThreadKind {
    Permitted,
    Forbidden,
}

/// One of the two slots of a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SlotRef {
    pub vertex: VertexId,
    pub index: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Pair {
    incoming: Option<ArrowId>,
    outgoing: Option<ArrowId>,
}

#[derive(Clone, Debug)]
struct VertexSlots {
    permitted: [Pair; 2],
}

impl VertexSlots {
    fn forbidden(&self, y: usize) -> Pair {
        Pair {
            incoming: self.permitted[1 - y].incoming,
            outgoing: self.permitted[y].outgoing,
        }
    }

    fn pair(&self, kind: ThreadKind, index: usize) -> Pair {
        match kind {
            ThreadKind::Permitted => self.permitted[index],
            ThreadKind::Forbidden => self.forbidden(index),
        }
    }
}

fn vertex_slots(a: &GentlePresentation, v: VertexId) -> VertexSlots {
    let ins = a.in_arrows(v);
    let outs = a.out_arrows(v);
    let mut pairs = Vec::with_capacity(2);
    let mut paired_outs = Vec::new();
    for &b in ins {
        match a.permitted_successor(b) {
            Some(c) => {
                pairs.push(Pair {
                    incoming: Some(b),
                    outgoing: Some(c),
                });
                paired_outs.push(c);
            }
            None => pairs.push(Pair {
                incoming: Some(b),
                outgoing: None,
            }),
        }
    }
    for &c in outs {
        if !paired_outs.contains(&c) {
            pairs.push(Pair {
                incoming: None,
                outgoing: Some(c),
            });
        }
    }
    assert!(pairs.len() <= 2, "more than two permitted slots at a gentle vertex");
    while pairs.len() < 2 {
        pairs.push(Pair {
            incoming: None,
            outgoing: None,
        });
    }
    let slots = VertexSlots {
        permitted: [pairs[0], pairs[1]],
    };
    for y in 0..2 {
        let f = slots.forbidden(y);
        let consistent = match (f.incoming, f.outgoing) {
            (Some(b), Some(c)) => a.is_relation(b, c),
            (Some(b), None) => a.relation_successor(b).is_none(),
            (None, Some(c)) => a.relation_predecessor(c).is_none(),
            (None, None) => true,
        };
        assert!(consistent, "forbidden slot pairing disagrees with the relations");
    }
    slots
}

/// A maximal permitted or forbidden path, or a trivial one at a vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thread {
    pub kind: ThreadKind,
    /// Empty for a trivial thread.
    pub arrows: Vec<ArrowId>,
    /// Slot the thread starts in (at its source vertex).
    pub start: SlotRef,
    /// Slot the thread ends in (at its target vertex).
    pub end: SlotRef,
}

impl Thread {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn source(&self) -> VertexId {
        self.start.vertex
    }

    pub fn target(&self) -> VertexId {
        self.end.vertex
    }

    /// Vertices visited in order; a single vertex for a trivial thread.
    pub fn vertices(&self, a: &GentlePresentation) -> Vec<VertexId> {
        let mut out = vec![self.source()];
        out.extend(self.arrows.iter().map(|&x| a.target(x)));
        out
    }

    fn sort_key(&self) -> (bool, usize, SlotRef) {
        let least = match self.arrows.iter().min() {
            Some(a) => a.0,
            None => self.start.vertex.0,
        };
        (self.is_trivial(), least, self.start)
    }

    pub fn render(&self, a: &GentlePresentation) -> String {
        if self.is_trivial() {
            format!("1_{}", a.vertex_name(self.source()))
        } else {
            self.arrows
                .iter()
                .map(|&x| a.arrow_name(x))
                .collect::<Vec<_>>()
                .join("·")
        }
    }
}

/// All threads of a gentle presentation, with slot ownership tables.
#[derive(Clone, Debug)]
pub struct ThreadSet {
    pub permitted: Vec<Thread>,
    pub forbidden_finite: Vec<Thread>,
    /// Full-relation cycles, each standing for an infinite forbidden thread.
    pub infinite_cycles: Vec<Vec<ArrowId>>,
    slots: Vec<VertexSlots>,
    permitted_owner: HashMap<SlotRef, usize>,
    forbidden_owner: HashMap<SlotRef, usize>,
}

impl ThreadSet {
    pub fn new(a: &GentlePresentation) -> Self {
        let slots: Vec<VertexSlots> = a.vertices().map(|v| vertex_slots(a, v)).collect();
        let infinite_cycles = a.full_relation_cycles();

        let mut permitted = collect_threads(a, &slots, ThreadKind::Permitted);
        let mut forbidden_finite = collect_threads(a, &slots, ThreadKind::Forbidden);
        permitted.sort_by_key(Thread::sort_key);
        forbidden_finite.sort_by_key(Thread::sort_key);

        let owners = |threads: &[Thread]| {
            let mut map = HashMap::new();
            for (i, t) in threads.iter().enumerate() {
                map.insert(t.start, i);
                map.insert(t.end, i);
            }
            map
        };
        let permitted_owner = owners(&permitted);
        let forbidden_owner = owners(&forbidden_finite);
        ThreadSet {
            permitted,
            forbidden_finite,
            infinite_cycles,
            slots,
            permitted_owner,
            forbidden_owner,
        }
    }

    /// Number of forbidden threads, finite and infinite.
    pub fn forbidden_count(&self) -> usize {
        self.forbidden_finite.len() + self.infinite_cycles.len()
    }

    /// The permitted thread occupying a permitted slot at one of its ends.
    pub fn permitted_at(&self, slot: SlotRef) -> Option<usize> {
        self.permitted_owner.get(&slot).copied()
    }

    /// The finite forbidden thread occupying a forbidden slot at one of its ends.
    pub fn forbidden_at(&self, slot: SlotRef) -> Option<usize> {
        self.forbidden_owner.get(&slot).copied()
    }

    /// Incoming and outgoing arrow of a slot.
    pub fn slot_arrows(&self, kind: ThreadKind, slot: SlotRef) -> (Option<ArrowId>, Option<ArrowId>) {
        let p = self.slots[slot.vertex.0].pair(kind, slot.index);
        (p.incoming, p.outgoing)
    }
}

type Neighbour = fn(&GentlePresentation, ArrowId) -> Option<ArrowId>;

fn collect_threads(a: &GentlePresentation, slots: &[VertexSlots], kind: ThreadKind) -> Vec<Thread> {
    let (pred, succ): (Neighbour, Neighbour) =
        match kind {
            ThreadKind::Permitted => (
                GentlePresentation::permitted_predecessor,
                GentlePresentation::permitted_successor,
            ),
            ThreadKind::Forbidden => (
                GentlePresentation::relation_predecessor,
                GentlePresentation::relation_successor,
            ),
        };
    let find_slot = |v: VertexId, pick: &dyn Fn(Pair) -> bool| -> SlotRef {
        let index = (0..2)
            .find(|&i| pick(slots[v.0].pair(kind, i)))
            .expect("arrow occupies a slot at each endpoint");
        SlotRef { vertex: v, index }
    };

    let mut threads = Vec::new();
    for first in a.arrows() {
        if pred(a, first).is_some() {
            continue;
        }
        let mut arrows = vec![first];
        let mut cur = first;
        // Full-relation cycles have no start and are skipped by the guard
        // above; relation-free cycles were rejected during validation.
        while let Some(next) = succ(a, cur) {
            arrows.push(next);
            cur = next;
        }
        let start = find_slot(a.source(first), &|p| p.outgoing == Some(first));
        let end = find_slot(a.target(cur), &|p| p.incoming == Some(cur));
        threads.push(Thread {
            kind,
            arrows,
            start,
            end,
        });
    }
    for v in a.vertices() {
        for index in 0..2 {
            let p = slots[v.0].pair(kind, index);
            if p.incoming.is_none() && p.outgoing.is_none() {
                let slot = SlotRef { vertex: v, index };
                threads.push(Thread {
                    kind,
                    arrows: Vec::new(),
                    start: slot,
                    end: slot,
                });
            }
        }
    }
    threads
}

pub fn permitted_threads(a: &GentlePresentation) -> Vec<Thread> {
    ThreadSet::new(a).permitted
}

/// Finite forbidden threads and, separately, the full-relation cycles.
pub fn forbidden_threads(a: &GentlePresentation) -> (Vec<Thread>, Vec<Vec<ArrowId>>) {
    let set = ThreadSet::new(a);
    (set.forbidden_finite, set.infinite_cycles)
}

/// Length of the maximal forbidden path starting with `alpha`.
pub fn forbidden_tail(a: &GentlePresentation, alpha: ArrowId) -> Dimension {
    let mut len = 1u32;
    let mut cur = alpha;
    while let Some(next) = a.relation_successor(cur) {
        if next == alpha {
            return Dimension::Infinite;
        }
        len += 1;
        cur = next;
    }
    Dimension::Finite(len)
}
