//! The fixed cluster-tilting configuration: an inscribed `n`-gon with a fan
//! triangulation from `z_1`, and one leapfrog per accumulation point,
//! truncated at a finite depth.
//!
//! Names used in [`StandardTilting::index_of`]:
//!
//! * `Z{i}`: the polygon edge `{z_i, z_{i+1}}` (for `n = 1`, `{z_1^-, z_1^+}`),
//! * `Y{i}`: the second arc of the leapfrog that starts at `Z{i}`,
//! * `X{i}`: the fan arc `{z_1, z_i}` for `2 <= i <= n` (`n >= 2`),
//! * `L{k}[t]`: arc `t` of the leapfrog converging to the `k`-th
//!   accumulation point.
//!
//! Mutation appends `*` to every name of the replaced arc.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::Serialize;

use crate::arcs::{induced_triangles, Arc};
use crate::circle::{cyclic_between, CircleModel, PointIndex};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StandardTilting {
    #[serde(rename = "n", serialize_with = "ser_model")]
    model: CircleModel,
    anchors: Vec<PointIndex>,
    depth: usize,
    arcs: Vec<Arc>,
    names: BTreeMap<String, usize>,
    #[serde(skip)]
    leapfrogs: Vec<Vec<usize>>,
}

fn ser_model<S: serde::Serializer>(m: &CircleModel, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(m.num_segments() as u64)
}

/// The two diagonals of a quadrilateral in the triangulation, and the
/// middle terms of their exchange triangles `m -> B_{m*} -> m*` and
/// `m* -> B_m -> m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExchangePair {
    pub m: Arc,
    pub m_star: Arc,
    pub b_m: Vec<Arc>,
    pub b_m_star: Vec<Arc>,
}

/// A sparse integer combination of tilting arcs, `[B_{m*}] - [B_m]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Relation {
    /// Index of the arc `m` whose exchange pair produced the relation.
    pub source: usize,
    /// `(arc index, coefficient)`, sorted by index, no zero coefficients.
    pub coefficients: Vec<(usize, i64)>,
}

impl Relation {
    fn from_terms(source: usize, terms: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
        for (i, k) in terms {
            *acc.entry(i).or_insert(0) += k;
        }
        Relation {
            source,
            coefficients: acc.into_iter().filter(|&(_, k)| k != 0).collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<i64> {
        let mut v = vec![0; len];
        for &(i, k) in &self.coefficients {
            v[i] = k;
        }
        v
    }

    pub fn negated(&self) -> Relation {
        Relation {
            source: self.source,
            coefficients: self.coefficients.iter().map(|&(i, k)| (i, -k)).collect(),
        }
    }

    pub fn l1_norm(&self) -> i64 {
        self.coefficients.iter().map(|(_, k)| k.abs()).sum()
    }
}

impl StandardTilting {
    /// Builds the configuration with anchors `z_i = (i-1, anchor_offsets[i-1])`
    /// and leapfrogs truncated after arc `2 * depth`.
    pub fn build(n: usize, anchor_offsets: &[i64], depth: usize) -> Result<Self> {
        let model = CircleModel::new(n)?;
        if depth == 0 {
            return Err(Error::InsufficientDepth("depth must be at least 1".into()));
        }
        if anchor_offsets.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: anchor_offsets.len(),
            });
        }
        let anchors: Vec<PointIndex> = anchor_offsets
            .iter()
            .enumerate()
            .map(|(s, &o)| PointIndex::new(s, o))
            .collect();
        let mut t = StandardTilting {
            model,
            anchors: anchors.clone(),
            depth,
            arcs: Vec::new(),
            names: BTreeMap::new(),
            leapfrogs: Vec::new(),
        };
        let z = |i: usize| anchors[(i - 1) % n];

        if n == 1 {
            // the only edge is {z^-, z^+}; its leapfrog runs outwards
            let z1 = z(1);
            let idx = t.leapfrog(1, z1.succ(), z1.pred())?;
            t.leapfrogs.push(idx);
            return Ok(t);
        }

        for i in 1..=n {
            let e = t.insert(Arc::new(z(i), z(i + 1))?, format!("Z{i}"));
            if i == 1 {
                t.names.insert("X2".into(), e);
            }
            if i == n {
                t.names.insert(format!("X{n}"), e);
            }
        }
        for i in 3..n {
            t.insert(Arc::new(z(1), z(i))?, format!("X{i}"));
        }
        for k in 1..=n {
            // L_k converges to the accumulation point between z_{k-1} and z_k
            let below = if k == 1 { z(n) } else { z(k - 1) };
            let idx = t.leapfrog(k, below, z(k))?;
            t.leapfrogs.push(idx);
        }
        Ok(t)
    }

    fn insert(&mut self, arc: Arc, name: String) -> usize {
        let idx = match self.arcs.iter().position(|a| *a == arc) {
            Some(i) => i,
            None => {
                self.arcs.push(arc);
                self.arcs.len() - 1
            }
        };
        self.names.insert(name, idx);
        idx
    }

    /// Zigzag `{below+m, above-m}`, `{below+m, above-m-1}` for `t = 2m, 2m+1`.
    fn leapfrog(&mut self, k: usize, below: PointIndex, above: PointIndex) -> Result<Vec<usize>> {
        let n = self.model.num_segments();
        let edge = if k == 1 { n } else { k - 1 };
        let mut idx = Vec::with_capacity(2 * self.depth + 1);
        for t in 0..=(2 * self.depth) {
            let m = (t / 2) as i64;
            let lower = below.step(m);
            let upper = above.step(-m - (t % 2) as i64);
            let i = self.insert(Arc::new(lower, upper)?, format!("L{k}[{t}]"));
            if t == 0 {
                self.names.insert(format!("Z{edge}"), i);
            }
            if t == 1 {
                self.names.insert(format!("Y{edge}"), i);
            }
            idx.push(i);
        }
        Ok(idx)
    }

    pub fn model(&self) -> CircleModel {
        self.model
    }

    pub fn n(&self) -> usize {
        self.model.num_segments()
    }

    pub fn anchors(&self) -> &[PointIndex] {
        &self.anchors
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn arc(&self, index: usize) -> Option<&Arc> {
        self.arcs.get(index)
    }

    pub fn names(&self) -> &BTreeMap<String, usize> {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn index_of_arc(&self, arc: &Arc) -> Option<usize> {
        self.arcs.iter().position(|a| a == arc)
    }

    /// All names of the arc at `index`.
    pub fn names_of(&self, index: usize) -> Vec<&str> {
        self.names
            .iter()
            .filter(|(_, &i)| i == index)
            .map(|(k, _)| k.as_str())
            .collect()
    }

    /// Preferred name for display: polygon edge, then fan arc, then `Y`,
    /// then leapfrog position.
    pub fn label(&self, index: usize) -> String {
        let rank = |s: &str| {
            "ZXYL"
                .find(s.trim_end_matches('*').chars().next().unwrap_or('L'))
                .unwrap_or(4)
        };
        self.names_of(index)
            .into_iter()
            .min_by_key(|s| (rank(s), s.len()))
            .map_or_else(|| format!("#{index}"), str::to_string)
    }

    /// Arc indices of the leapfrog converging to accumulation point `k`
    /// (1-based), in zigzag order, as built.
    pub fn leapfrog_indices(&self, k: usize) -> &[usize] {
        &self.leapfrogs[k - 1]
    }

    pub fn is_non_crossing(&self) -> bool {
        self.arcs
            .iter()
            .enumerate()
            .all(|(i, a)| self.arcs[i + 1..].iter().all(|b| !a.crosses(b)))
    }

    /// Third vertex of the triangle on the anticlockwise side from `p` to `q`,
    /// if that triangle is present in the truncated set.
    fn apex(&self, ctx: &Lookup, p: PointIndex, q: PointIndex) -> Option<PointIndex> {
        let linked = |a: PointIndex, b: PointIndex| {
            a.is_adjacent(b) || Arc::new(a, b).is_ok_and(|arc| ctx.set.contains(&arc))
        };
        let mut candidates: Vec<PointIndex> = vec![p.succ(), p.pred()];
        if let Some(v) = ctx.incident.get(&p) {
            candidates.extend(v.iter().copied());
        }
        candidates
            .into_iter()
            .find(|&r| r != q && cyclic_between(p, r, q) && linked(r, q))
    }

    /// Exchange pair of the arc at `m_index`.
    pub fn exchange_pair(&self, m_index: usize) -> Result<ExchangePair> {
        self.exchange_pair_with(&Lookup::new(&self.arcs), m_index)
    }

    fn exchange_pair_with(&self, ctx: &Lookup, m_index: usize) -> Result<ExchangePair> {
        let m = *self
            .arcs
            .get(m_index)
            .ok_or_else(|| Error::IndexOutOfRange {
                index: m_index,
                range: format!("0..{}", self.arcs.len()),
            })?;
        let (p, q) = m.endpoints();
        let (Some(r1), Some(r2)) = (self.apex(ctx, p, q), self.apex(ctx, q, p)) else {
            return Err(Error::InsufficientDepth(format!(
                "{} ({m}) borders a triangle outside the truncated configuration",
                self.label(m_index)
            )));
        };
        let m_star = Arc::new(r1, r2)?;
        let (to_star, to_m) = induced_triangles(&m, &m_star)?;
        Ok(ExchangePair {
            m,
            m_star,
            b_m: to_m.middle,
            b_m_star: to_star.middle,
        })
    }

    /// Indices whose exchange pair is available at this depth.
    pub fn interior_indices(&self) -> Vec<usize> {
        let ctx = Lookup::new(&self.arcs);
        (0..self.arcs.len())
            .filter(|&i| self.exchange_pair_with(&ctx, i).is_ok())
            .collect()
    }

    pub fn frontier_indices(&self) -> Vec<usize> {
        let ctx = Lookup::new(&self.arcs);
        (0..self.arcs.len())
            .filter(|&i| self.exchange_pair_with(&ctx, i).is_err())
            .collect()
    }

    /// One relation `[B_{m*}] - [B_m]` per interior arc.
    pub fn palu_relations(&self) -> Vec<Relation> {
        let ctx = Lookup::new(&self.arcs);
        let index: HashMap<Arc, usize> =
            self.arcs.iter().enumerate().map(|(i, a)| (*a, i)).collect();
        (0..self.arcs.len())
            .filter_map(|i| {
                let pair = self.exchange_pair_with(&ctx, i).ok()?;
                let plus = pair.b_m_star.iter().map(|a| (index[a], 1));
                let minus = pair.b_m.iter().map(|a| (index[a], -1));
                Some(Relation::from_terms(i, plus.chain(minus)))
            })
            .collect()
    }

    /// Flip the arc at `m_index` to the other diagonal of its quadrilateral.
    pub fn mutate(&self, m_index: usize) -> Result<StandardTilting> {
        let pair = self.exchange_pair(m_index)?;
        let mut out = self.clone();
        out.arcs[m_index] = pair.m_star;
        for (name, &i) in &self.names {
            if i == m_index {
                out.names.remove(name);
                let flipped = match name.strip_suffix('*') {
                    Some(base) => base.to_string(),
                    None => format!("{name}*"),
                };
                out.names.insert(flipped, m_index);
            }
        }
        Ok(out)
    }
}

struct Lookup {
    set: HashSet<Arc>,
    incident: HashMap<PointIndex, Vec<PointIndex>>,
}

impl Lookup {
    fn new(arcs: &[Arc]) -> Self {
        let mut incident: HashMap<PointIndex, Vec<PointIndex>> = HashMap::new();
        for a in arcs {
            let (p, q) = a.endpoints();
            incident.entry(p).or_default().push(q);
            incident.entry(q).or_default().push(p);
        }
        Lookup {
            set: arcs.iter().copied().collect(),
            incident,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(a: (usize, i64), b: (usize, i64)) -> Arc {
        Arc::new(a.into(), b.into()).unwrap()
    }

    fn as_set(v: &[Arc]) -> HashSet<Arc> {
        v.iter().copied().collect()
    }

    #[test]
    fn rejects_bad_input() {
        assert!(StandardTilting::build(0, &[], 2).is_err());
        assert!(StandardTilting::build(2, &[0, 0], 0).is_err());
        assert!(matches!(
            StandardTilting::build(3, &[0, 0], 2),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn counts() {
        // n edges + (n-3) fan arcs + 2d new arcs per leapfrog
        let t = StandardTilting::build(3, &[0, 0, 0], 2).unwrap();
        assert_eq!(t.len(), 15);
        for d in 1..5 {
            let t = StandardTilting::build(5, &[0; 5], d).unwrap();
            assert_eq!(t.len(), 5 + 2 + 5 * 2 * d);
        }
        let t = StandardTilting::build(2, &[0, 0], 3).unwrap();
        assert_eq!(t.len(), 1 + 2 * 2 * 3);
        let t = StandardTilting::build(1, &[0], 4).unwrap();
        assert_eq!(t.len(), 1 + 2 * 4);
    }

    #[test]
    fn single_accumulation_point() {
        let t = StandardTilting::build(1, &[0], 1).unwrap();
        assert_eq!(
            t.arcs(),
            &[
                arc((0, -1), (0, 1)),
                arc((0, -2), (0, 1)),
                arc((0, -2), (0, 2))
            ]
        );
        assert_eq!(t.index_of("Z1").unwrap(), 0);
        assert_eq!(t.index_of("Y1").unwrap(), 1);
    }

    #[test]
    fn leapfrog_shape() {
        let t = StandardTilting::build(4, &[0, 3, -2, 1], 3).unwrap();
        let z = t.anchors().to_vec();
        for i in 1..=4 {
            let k = i % 4 + 1;
            let lf = t.leapfrog_indices(k);
            assert_eq!(lf[0], t.index_of(&format!("Z{i}")).unwrap());
            assert_eq!(
                t.arcs()[lf[1]],
                Arc::new(z[i - 1], z[k - 1].pred()).unwrap()
            );
            // every inner arc has exactly two neighbours sharing an endpoint
            for pos in 1..lf.len() - 1 {
                let a = t.arcs()[lf[pos]];
                let touching = lf
                    .iter()
                    .filter(|&&j| j != lf[pos] && t.arcs()[j].shares_endpoint(&a))
                    .count();
                assert_eq!(touching, 2, "L{k}[{pos}]");
            }
        }
    }

    #[test]
    fn built_sets_are_non_crossing() {
        for n in 1..=6 {
            for d in 1..=4 {
                let t = StandardTilting::build(n, &vec![0; n], d).unwrap();
                assert!(t.is_non_crossing(), "n={n} d={d}");
            }
        }
    }

    #[test]
    fn frontier_is_deepest_leapfrog_arcs() {
        for n in 1..=5 {
            let t = StandardTilting::build(n, &vec![0; n], 3).unwrap();
            let expected: HashSet<usize> = (1..=n)
                .map(|k| *t.leapfrog_indices(k).last().unwrap())
                .collect();
            let frontier: HashSet<usize> = t.frontier_indices().into_iter().collect();
            assert_eq!(frontier, expected, "n={n}");
        }
    }

    #[test]
    fn exchange_triangle_with_three_accumulation_points() {
        let t = StandardTilting::build(3, &[0, 0, 0], 2).unwrap();
        let get = |s: &str| t.arcs()[t.index_of(s).unwrap()];
        let pair = t.exchange_pair(t.index_of("Z1").unwrap()).unwrap();
        assert_eq!(as_set(&pair.b_m), as_set(&[get("Z2"), get("Y1")]));
        assert_eq!(pair.b_m_star, vec![get("Z3")]);
        // the other diagonal of (z3, z1, z2^-, z2)
        assert_eq!(pair.m_star, arc((1, -1), (2, 0)));
    }

    #[test]
    fn exchange_with_one_accumulation_point() {
        let t = StandardTilting::build(1, &[0], 2).unwrap();
        let pair = t.exchange_pair(0).unwrap();
        assert_eq!(pair.b_m, vec![t.arcs()[t.index_of("Y1").unwrap()]]);
        assert!(pair.b_m_star.is_empty());
        assert_eq!(pair.m_star, arc((0, -2), (0, 0)));
    }

    #[test]
    fn exchange_on_fan_arcs() {
        let n = 6;
        let t = StandardTilting::build(n, &[0; 6], 2).unwrap();
        let get = |s: String| t.arcs()[t.index_of(&s).unwrap()];
        for i in 3..n {
            let pair = t
                .exchange_pair(t.index_of(&format!("X{i}")).unwrap())
                .unwrap();
            let a = as_set(&[get(format!("Z{i}")), get(format!("X{}", i - 1))]);
            let b = as_set(&[get(format!("X{}", i + 1)), get(format!("Z{}", i - 1))]);
            let got = [as_set(&pair.b_m), as_set(&pair.b_m_star)];
            assert!(got == [a.clone(), b.clone()] || got == [b, a], "X{i}");
        }
    }

    #[test]
    fn frontier_arc_has_no_exchange_pair() {
        let t = StandardTilting::build(2, &[0, 0], 2).unwrap();
        let last = *t.leapfrog_indices(1).last().unwrap();
        assert!(matches!(
            t.exchange_pair(last),
            Err(Error::InsufficientDepth(_))
        ));
        assert!(matches!(t.mutate(last), Err(Error::InsufficientDepth(_))));
        assert!(matches!(
            t.exchange_pair(999),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn leapfrog_relations_add_neighbours() {
        let t = StandardTilting::build(3, &[0, 0, 0], 3).unwrap();
        let rels = t.palu_relations();
        for k in 1..=3 {
            let lf = t.leapfrog_indices(k);
            for pos in 1..lf.len() - 1 {
                let r = rels.iter().find(|r| r.source == lf[pos]).unwrap();
                let mut expected = vec![(lf[pos - 1], 1), (lf[pos + 1], 1)];
                expected.sort_unstable();
                let neg: Vec<_> = expected.iter().map(|&(i, k)| (i, -k)).collect();
                assert!(r.coefficients == expected || r.coefficients == neg);
            }
        }
    }

    #[test]
    fn relation_count_and_norm() {
        let t = StandardTilting::build(5, &[0; 5], 3).unwrap();
        let rels = t.palu_relations();
        assert_eq!(rels.len(), t.len() - 5);
        assert!(rels.iter().all(|r| r.l1_norm() <= 4 && r.l1_norm() > 0));
    }

    #[test]
    fn mutation_renames_and_flips_back() {
        let t = StandardTilting::build(4, &[0; 4], 2).unwrap();
        let i = t.index_of("X3").unwrap();
        let m = t.mutate(i).unwrap();
        assert!(m.index_of("X3").is_err());
        assert_eq!(m.index_of("X3*").unwrap(), i);
        assert!(m.is_non_crossing());
        let back = m.mutate(i).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn json_layout() {
        let t = StandardTilting::build(1, &[0], 1).unwrap();
        let v: serde_json::Value = serde_json::to_value(&t).unwrap();
        assert_eq!(v["n"], 1);
        assert_eq!(v["depth"], 1);
        assert_eq!(v["anchors"].to_string(), "[[0,0]]");
        assert_eq!(v["arcs"][0].to_string(), "[[0,-1],[0,1]]");
        assert_eq!(v["names"]["Z1"], 0);
    }
}
