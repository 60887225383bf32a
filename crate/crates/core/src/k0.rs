//! Grothendieck groups of the discrete cluster categories.
//!
//! Two independent routes:
//!
//! * [`compute_k0_cn`] takes the free abelian group on the standard tilting
//!   arcs modulo one exchange relation `[B_{m*}] - [B_m]` per arc.
//! * [`EulerOracle`] takes every arc inside a finite window modulo the Euler
//!   relation of every triangle it can see: both triangles of each crossing
//!   pair, and `A -> 0 -> ΣA -> ΣA`.

use std::collections::HashMap;

use serde::Serialize;

use crate::arcs::Arc;
use crate::circle::{CircleModel, InteriorCount, PointIndex};
use crate::error::{Error, Result};
use crate::linalg::{
    cokernel_of_rows, GroupPresentation, IntMatrix, Quotient, QuotientClass, SparseQuotientBuilder,
};
use crate::tilting::StandardTilting;

/// Outcome of the exchange-relation computation for one tilting set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct K0Report {
    pub presentation: GroupPresentation,
    pub n: usize,
    pub depth: usize,
    pub arc_count: usize,
    pub relation_count: usize,
    /// Arcs whose exchange quadrilateral leaves the truncation.
    pub frontier_count: usize,
    /// `free_rank - n`: classes the truncation failed to pin down.
    pub frontier_excess: i64,
}

impl K0Report {
    pub fn matches_expected(&self) -> bool {
        self.frontier_excess == 0 && self.presentation.is_free()
    }
}

/// Relation matrix over the tilting arcs, one row per exchange relation.
pub fn palu_relation_matrix(t: &StandardTilting) -> IntMatrix {
    let rels = t.palu_relations();
    let rows: Vec<Vec<i64>> = rels.iter().map(|r| r.to_dense(t.len())).collect();
    IntMatrix::from_rows(t.len(), &rows).expect("relations are indexed by tilting arcs")
}

/// Exchange-relation quotient for an already built (possibly mutated) set.
pub fn k0_of_tilting(t: &StandardTilting) -> Result<K0Report> {
    if t.depth() < 2 {
        return Err(Error::InsufficientDepth(format!(
            "depth {} is too shallow; need at least 2",
            t.depth()
        )));
    }
    let m = palu_relation_matrix(t);
    let presentation = cokernel_of_rows(&m);
    let frontier_count = t.frontier_indices().len();
    Ok(K0Report {
        frontier_excess: presentation.free_rank as i64 - t.n() as i64,
        presentation,
        n: t.n(),
        depth: t.depth(),
        arc_count: t.len(),
        relation_count: m.rows(),
        frontier_count,
    })
}

pub fn compute_k0_cn(n: usize, anchor_offsets: &[i64], depth: usize) -> Result<K0Report> {
    if depth < 2 {
        return Err(Error::InsufficientDepth(format!(
            "depth {depth} is too shallow; need at least 2"
        )));
    }
    k0_of_tilting(&StandardTilting::build(n, anchor_offsets, depth)?)
}

/// Brute-force Euler-relation quotient over all arcs with both endpoint
/// offsets in `[-window, window]`.
#[derive(Debug, Clone)]
pub struct EulerOracle {
    model: CircleModel,
    window: i64,
    arcs: Vec<Arc>,
    index: HashMap<Arc, usize>,
    quotient: Quotient,
    relation_count: usize,
}

pub fn euler_oracle(n: usize, window: i64) -> Result<EulerOracle> {
    EulerOracle::new(n, window)
}

impl EulerOracle {
    pub fn new(n: usize, window: i64) -> Result<Self> {
        let model = CircleModel::new(n)?;
        if window < 2 {
            return Err(Error::InsufficientWindow(format!("window {window} < 2")));
        }
        let points = model.window_points(window);
        let mut arcs = Vec::new();
        let mut index = HashMap::new();
        for (i, &p) in points.iter().enumerate() {
            for &q in &points[i + 1..] {
                if let Ok(a) = Arc::new(p, q) {
                    index.insert(a, arcs.len());
                    arcs.push(a);
                }
            }
        }
        let mut builder = SparseQuotientBuilder::new(arcs.len());
        visit_relations(model, window, &arcs, &index, |r| builder.add_relation(r))?;
        Ok(EulerOracle {
            model,
            window,
            arcs,
            index,
            relation_count: builder.relation_count(),
            quotient: builder.finish()?,
        })
    }

    /// Visits every relation as `(arc index, coefficient)` terms: first the
    /// rotation relations `[A] + [ΣA]`, then both Euler relations
    /// `[M] + [N] - (middle)` of every crossing pair.
    pub fn for_each_relation<F>(&self, f: F) -> Result<()>
    where
        F: FnMut(&[(usize, i64)]) -> Result<()>,
    {
        visit_relations(self.model, self.window, &self.arcs, &self.index, f)
    }

    pub fn model(&self) -> CircleModel {
        self.model
    }

    pub fn window(&self) -> i64 {
        self.window
    }

    pub fn presentation(&self) -> &GroupPresentation {
        self.quotient.presentation()
    }

    pub fn quotient(&self) -> &Quotient {
        &self.quotient
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn relation_count(&self) -> usize {
        self.relation_count
    }

    pub fn contains(&self, arc: &Arc) -> bool {
        self.index.contains_key(arc)
    }

    pub fn index_of(&self, arc: &Arc) -> Option<usize> {
        self.index.get(arc).copied()
    }

    pub fn class_of(&self, arc: &Arc) -> Option<QuotientClass> {
        self.index.get(arc).map(|&i| self.quotient.class_of(i))
    }

    /// Every in-window arc with its class.
    pub fn class_map(&self) -> Vec<(Arc, QuotientClass)> {
        self.arcs
            .iter()
            .enumerate()
            .map(|(i, a)| (*a, self.quotient.class_of(i)))
            .collect()
    }
}

fn visit_relations<F>(
    model: CircleModel,
    window: i64,
    arcs: &[Arc],
    index: &HashMap<Arc, usize>,
    mut f: F,
) -> Result<()>
where
    F: FnMut(&[(usize, i64)]) -> Result<()>,
{
    for (i, a) in arcs.iter().enumerate() {
        if let Some(&j) = index.get(&a.suspend(1)) {
            f(&[(i, 1), (j, 1)])?;
        }
    }
    let points = model.window_points(window);
    let np = points.len();
    // arc index by point pair; None for zero objects
    let mut table = vec![None; np * np];
    for (i, &p) in points.iter().enumerate() {
        for (j, &q) in points.iter().enumerate() {
            if i != j {
                table[i * np + j] = Arc::new(p, q).ok().map(|a| index[&a]);
            }
        }
    }
    let side = |i: usize, j: usize| table[i * np + j];
    let mut terms: Vec<(usize, i64)> = Vec::with_capacity(4);
    for a in 0..np {
        for b in a + 1..np {
            for c in b + 1..np {
                let m = side(a, c).expect("diagonals are arcs");
                for d in c + 1..np {
                    let n = side(b, d).expect("diagonals are arcs");
                    for (s, t) in [(side(b, c), side(d, a)), (side(a, b), side(c, d))] {
                        terms.clear();
                        terms.push((m, 1));
                        terms.push((n, 1));
                        terms.extend(s.map(|x| (x, -1)));
                        terms.extend(t.map(|x| (x, -1)));
                        f(&terms)?;
                    }
                }
            }
        }
    }
    Ok(())
}

/// Class of the arc `W_i` in a one-sided fountain, as a multiple of `[W_1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ParityClass {
    Zero,
    W,
    MinusW,
}

/// The arc `W_i = {anchor, anchor + i + 1}` with `i` interior points.
pub fn fountain_arc(anchor: PointIndex, i: u64) -> Result<Arc> {
    Arc::new(anchor, anchor.step(i as i64 + 1))
}

/// Iterates `[W_{i+1}] = [W_i] + (-1)^i [W_1]` from `[W_1] = w`.
pub fn parity_class(i: u64) -> Result<ParityClass> {
    if i == 0 {
        return Err(Error::Invalid("fountain index starts at 1".into()));
    }
    let mut coeff: i64 = 1;
    for k in 1..i {
        coeff += if k % 2 == 0 { 1 } else { -1 };
    }
    Ok(match coeff {
        0 => ParityClass::Zero,
        1 => ParityClass::W,
        -1 => ParityClass::MinusW,
        c => unreachable!("recurrence left {{-1,0,1}}: {c}"),
    })
}

/// A class over the basis `[Y_1], [X_2], …, [X_n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct K0Class {
    pub labels: Vec<String>,
    pub coefficients: Vec<i64>,
}

impl K0Class {
    pub fn zero(n: usize) -> Self {
        let mut labels = vec!["Y1".to_string()];
        labels.extend((2..=n).map(|i| format!("X{i}")));
        K0Class {
            labels,
            coefficients: vec![0; n],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(|&c| c == 0)
    }

    pub fn scaled(mut self, k: i64) -> Self {
        for c in &mut self.coefficients {
            *c *= k;
        }
        self
    }
}

/// `[{z_i^{--}, z_i}]` in the basis: `[X_2] + [Y_1]` for `i = 1`, otherwise
/// `2[X_i] - [X_2] - [Y_1]`.
pub fn segment_generator_class(n: usize, i: usize) -> Result<K0Class> {
    if n < 2 {
        return Err(Error::Invalid(
            "the basis Y1, X2, ..., Xn needs at least two accumulation points".into(),
        ));
    }
    if !(1..=n).contains(&i) {
        return Err(Error::IndexOutOfRange {
            index: i,
            range: format!("1..={n}"),
        });
    }
    let mut c = K0Class::zero(n);
    if i == 1 {
        c.coefficients[0] = 1;
        c.coefficients[1] = 1;
    } else {
        c.coefficients[0] -= 1;
        c.coefficients[1] -= 1;
        c.coefficients[i - 1] += 2;
    }
    Ok(c)
}

/// Class of an arc with both endpoints in one segment, anchors at offset 0.
pub fn class_same_segment(n: usize, arc: &Arc) -> Result<K0Class> {
    class_same_segment_with_anchors(&vec![0; n], arc)
}

/// Zero when the arc has an even number of interior points. Otherwise the
/// arc is `Σ^{-j}` of a longer or equal arc sharing its lower endpoint with
/// `Σ^{-j}{z^{--}, z}`, where `j` aligns the lower endpoint with `z^{--}`;
/// odd arcs of one fountain share a class and `Σ` acts as `-1`, so the class
/// is `(-1)^j` times the segment generator.
pub fn class_same_segment_with_anchors(anchor_offsets: &[i64], arc: &Arc) -> Result<K0Class> {
    let n = anchor_offsets.len();
    let (lo, hi) = arc.endpoints();
    let model = CircleModel::new(n)?;
    model.check(lo)?;
    model.check(hi)?;
    let interior = match arc.interior_count() {
        InteriorCount::Finite(k) => k,
        InteriorCount::Infinite => return Err(Error::CrossSegment(lo, hi)),
    };
    let generator = segment_generator_class(n, lo.segment + 1)?;
    if interior % 2 == 0 {
        return Ok(K0Class::zero(n));
    }
    let shift = lo.offset - (anchor_offsets[lo.segment] - 2);
    Ok(generator.scaled(if shift.rem_euclid(2) == 0 { 1 } else { -1 }))
}
