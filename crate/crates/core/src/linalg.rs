//! Exact integer linear algebra: Smith normal form over arbitrary-precision
//! integers, cokernel presentations of finitely generated abelian groups,
//! and a sparse quotient builder for large relation sets with mostly unit
//! coefficients.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows of machine integers. All rows must have
    /// length `cols`.
    pub fn from_rows<R: AsRef<[i64]>>(cols: usize, rows: &[R]) -> Result<Self> {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    got: row.len(),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                m.data[i * cols + j] = BigInt::from(v);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// JSON array of rows, for cross-checks in an external algebra system.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            (0..self.rows)
                .map(|i| serde_json::Value::Array(self.row(i).iter().map(int_to_json).collect()))
                .collect(),
        )
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j] * k;
            self.data[dst * self.cols + j] += v;
        }
    }

    /// col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + src] * k;
            self.data[i * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -std::mem::take(&mut self.data[i * self.cols + j]);
            self.data[i * self.cols + j] = v;
        }
    }
}

fn int_to_json(v: &BigInt) -> serde_json::Value {
    match v.to_i64() {
        Some(x) => serde_json::Value::from(x),
        None => serde_json::Value::String(v.to_string()),
    }
}

/// Diagonal of the Smith normal form together with the column transform.
#[derive(Debug, Clone)]
pub struct SmithDecomposition {
    /// `min(rows, cols)` entries, nonnegative, each dividing the next, zeros
    /// last.
    pub diagonal: Vec<BigInt>,
    /// Unimodular `V` with `U · A · V = D` for some unimodular `U`.
    pub col_transform: IntMatrix,
}

pub fn smith_normal_form(m: &IntMatrix) -> Vec<BigInt> {
    smith_reduce(m.clone(), false).0
}

pub fn smith_decomposition(m: &IntMatrix) -> SmithDecomposition {
    let (diagonal, v) = smith_reduce(m.clone(), true);
    SmithDecomposition {
        diagonal,
        col_transform: v.expect("column transform requested"),
    }
}

fn min_abs_nonzero(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows {
        for j in t..a.cols {
            let v = a.get(i, j);
            if v.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| v.abs() < a.get(bi, bj).abs()) {
                if v.abs().is_one() {
                    return Some((i, j));
                }
                best = Some((i, j));
            }
        }
    }
    best
}

/// Integer elimination with minimal-absolute-value pivoting.
fn smith_reduce(mut a: IntMatrix, track: bool) -> (Vec<BigInt>, Option<IntMatrix>) {
    let mut v = track.then(|| IntMatrix::identity(a.cols));
    let steps = a.rows.min(a.cols);
    let mut t = 0;
    while t < steps {
        let Some((pi, pj)) = min_abs_nonzero(&a, t) else {
            break;
        };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        if let Some(v) = v.as_mut() {
            v.swap_cols(t, pj);
        }
        loop {
            let pivot = a.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..a.rows {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = a.get(i, t).div_floor(&pivot);
                a.add_row(i, t, &-q);
                clean &= a.get(i, t).is_zero();
            }
            for j in t + 1..a.cols {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = -a.get(t, j).div_floor(&pivot);
                a.add_col(j, t, &q);
                if let Some(v) = v.as_mut() {
                    v.add_col(j, t, &q);
                }
                clean &= a.get(t, j).is_zero();
            }
            if !clean {
                // a remainder is smaller than the pivot; move it into place
                let mut best = (t, t);
                for i in t + 1..a.rows {
                    let x = a.get(i, t);
                    if !x.is_zero() && x.abs() < a.get(best.0, best.1).abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..a.cols {
                    let x = a.get(t, j);
                    if !x.is_zero() && x.abs() < a.get(best.0, best.1).abs() {
                        best = (t, j);
                    }
                }
                a.swap_rows(t, best.0);
                a.swap_cols(t, best.1);
                if let Some(v) = v.as_mut() {
                    v.swap_cols(t, best.1);
                }
                continue;
            }
            // row and column are clear; enforce divisibility of the rest
            let mut offender = None;
            'scan: for i in t + 1..a.rows {
                for j in t + 1..a.cols {
                    if !a.get(i, j).is_multiple_of(&pivot) {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => a.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
        }
        t += 1;
    }
    let diagonal = (0..steps).map(|i| a.get(i, i).clone()).collect();
    (diagonal, v)
}

/// A finitely generated abelian group `Z^free_rank ⊕ ⊕ Z/d_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupPresentation {
    pub free_rank: usize,
    /// Each at least 2, each dividing the next.
    #[serde(with = "factor_serde")]
    pub invariant_factors: Vec<BigInt>,
}

impl GroupPresentation {
    pub fn new(free_rank: usize, factors: &[u64]) -> Self {
        GroupPresentation {
            free_rank,
            invariant_factors: factors.iter().map(|&d| BigInt::from(d)).collect(),
        }
    }

    pub fn free(rank: usize) -> Self {
        Self::new(rank, &[])
    }

    /// Reads a presentation off a Smith diagonal of a relation matrix over
    /// `ambient_rank` generators.
    pub fn from_diagonal(ambient_rank: usize, diagonal: &[BigInt]) -> Self {
        let nonzero = diagonal.iter().filter(|d| !d.is_zero()).count();
        GroupPresentation {
            free_rank: ambient_rank - nonzero,
            invariant_factors: diagonal
                .iter()
                .filter(|d| **d > BigInt::one())
                .cloned()
                .collect(),
        }
    }

    pub fn is_free(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn has_divisibility_chain(&self) -> bool {
        self.invariant_factors.iter().all(|d| *d >= BigInt::from(2))
            && self
                .invariant_factors
                .windows(2)
                .all(|w| w[1].is_multiple_of(&w[0]))
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(if self.free_rank == 1 {
                "Z".to_string()
            } else {
                format!("Z^{}", self.free_rank)
            });
        }
        let mut i = 0;
        while i < self.invariant_factors.len() {
            let d = &self.invariant_factors[i];
            let run = self.invariant_factors[i..]
                .iter()
                .take_while(|x| *x == d)
                .count();
            parts.push(if run == 1 {
                format!("Z/{d}")
            } else {
                format!("(Z/{d})^{run}")
            });
            i += run;
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

mod factor_serde {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Small(u64),
        Big(String),
    }

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        v.iter()
            .map(|d| {
                d.to_u64()
                    .map_or_else(|| Repr::Big(d.to_string()), Repr::Small)
            })
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<Repr>::deserialize(d)?
            .into_iter()
            .map(|r| match r {
                Repr::Small(x) => Ok(BigInt::from(x)),
                Repr::Big(s) => s.parse().map_err(D::Error::custom),
            })
            .collect()
    }
}

/// Presentation of `Z^ambient_rank` modulo the span of `columns`.
pub fn cokernel_presentation<C: AsRef<[i64]>>(
    ambient_rank: usize,
    columns: &[C],
) -> Result<GroupPresentation> {
    let m = IntMatrix::from_rows(ambient_rank, columns)?;
    Ok(cokernel_of_rows(&m))
}

/// Cokernel of the row span of `m` inside `Z^m.cols()`.
pub fn cokernel_of_rows(m: &IntMatrix) -> GroupPresentation {
    GroupPresentation::from_diagonal(m.cols(), &smith_normal_form(m))
}

/// An element of a [`Quotient`], in its normal-form coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuotientClass(pub Vec<BigInt>);

impl QuotientClass {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
}

/// `Z^ncols / span(relations)`, with every generator's class available in
/// coordinates `Z/d_1 ⊕ … ⊕ Z/d_k ⊕ Z^r`.
#[derive(Debug, Clone)]
pub struct Quotient {
    /// Per coordinate: the torsion order, or zero for a free coordinate.
    moduli: Vec<BigInt>,
    /// Per generator: expression over the free generators.
    expressions: Vec<Vec<(usize, i64)>>,
    /// Per free generator: its coordinates.
    free_coords: Vec<Vec<BigInt>>,
    presentation: GroupPresentation,
}

impl Quotient {
    pub fn presentation(&self) -> &GroupPresentation {
        &self.presentation
    }

    pub fn moduli(&self) -> &[BigInt] {
        &self.moduli
    }

    pub fn num_generators(&self) -> usize {
        self.expressions.len()
    }

    pub fn class_of(&self, generator: usize) -> QuotientClass {
        self.class_of_combination(&[(generator, 1)])
    }

    pub fn class_of_combination(&self, terms: &[(usize, i64)]) -> QuotientClass {
        let mut coords = vec![BigInt::zero(); self.moduli.len()];
        for &(g, k) in terms {
            for &(f, a) in &self.expressions[g] {
                let scale = BigInt::from(a) * k;
                for (c, x) in coords.iter_mut().zip(&self.free_coords[f]) {
                    *c += x * &scale;
                }
            }
        }
        self.reduce(coords)
    }

    pub fn add(&self, a: &QuotientClass, b: &QuotientClass) -> QuotientClass {
        self.reduce(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }

    pub fn neg(&self, a: &QuotientClass) -> QuotientClass {
        self.reduce(a.0.iter().map(|x| -x).collect())
    }

    fn reduce(&self, coords: Vec<BigInt>) -> QuotientClass {
        QuotientClass(
            coords
                .into_iter()
                .zip(&self.moduli)
                .map(|(x, d)| if d.is_zero() { x } else { x.mod_floor(d) })
                .collect(),
        )
    }

    /// Presentation of this group modulo the subgroup generated by
    /// `classes`.
    pub fn quotient_by(&self, classes: &[QuotientClass]) -> GroupPresentation {
        let k = self.moduli.len();
        let torsion: Vec<usize> = (0..k).filter(|&t| !self.moduli[t].is_zero()).collect();
        let mut m = IntMatrix::zeros(classes.len() + torsion.len(), k);
        for (i, c) in classes.iter().enumerate() {
            for (j, x) in c.0.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        for (r, &t) in torsion.iter().enumerate() {
            m.set(classes.len() + r, t, self.moduli[t].clone());
        }
        cokernel_of_rows(&m)
    }
}

/// Incrementally eliminates generators through relations that have a unit
/// coefficient; whatever is left goes through a dense Smith reduction.
#[derive(Debug, Clone)]
pub struct SparseQuotientBuilder {
    /// `Some(expr)` once a generator is eliminated; expressions only mention
    /// free generators.
    expr: Vec<Option<Vec<(usize, i64)>>>,
    /// Eliminated generators whose expression may mention a free generator.
    users: Vec<Vec<usize>>,
    residual: Vec<Vec<(usize, i64)>>,
    relations: usize,
}

impl SparseQuotientBuilder {
    pub fn new(generators: usize) -> Self {
        SparseQuotientBuilder {
            expr: vec![None; generators],
            users: vec![Vec::new(); generators],
            residual: Vec::new(),
            relations: 0,
        }
    }

    pub fn relation_count(&self) -> usize {
        self.relations
    }

    fn reduce(&self, terms: &[(usize, i64)]) -> Result<Vec<(usize, i64)>> {
        let mut acc: HashMap<usize, i64> = HashMap::new();
        for &(g, k) in terms {
            match &self.expr[g] {
                None => add_into(&mut acc, g, k)?,
                Some(e) => {
                    for &(f, a) in e {
                        add_into(&mut acc, f, a.checked_mul(k).ok_or(Error::Overflow)?)?;
                    }
                }
            }
        }
        let mut out: Vec<(usize, i64)> = acc.into_iter().filter(|&(_, v)| v != 0).collect();
        out.sort_unstable();
        Ok(out)
    }

    pub fn add_relation(&mut self, terms: &[(usize, i64)]) -> Result<()> {
        self.relations += 1;
        let reduced = self.reduce(terms)?;
        if reduced.is_empty() {
            return Ok(());
        }
        let pivot = reduced
            .iter()
            .filter(|(_, k)| k.abs() == 1)
            .min_by_key(|(g, _)| self.users[*g].len())
            .copied();
        let Some((c, kc)) = pivot else {
            self.residual.push(reduced);
            return Ok(());
        };
        // c = -kc * (rest), since kc = ±1
        let e: Vec<(usize, i64)> = reduced
            .iter()
            .filter(|(g, _)| *g != c)
            .map(|&(g, k)| (g, -kc * k))
            .collect();
        let dependants = std::mem::take(&mut self.users[c]);
        for u in dependants {
            let Some(old) = self.expr[u].take() else {
                continue;
            };
            let Some(pos) = old.iter().position(|(g, _)| *g == c) else {
                self.expr[u] = Some(old);
                continue;
            };
            let k = old[pos].1;
            let mut acc: HashMap<usize, i64> = HashMap::new();
            for &(g, a) in old.iter().filter(|(g, _)| *g != c) {
                add_into(&mut acc, g, a)?;
            }
            for &(g, a) in &e {
                add_into(&mut acc, g, a.checked_mul(k).ok_or(Error::Overflow)?)?;
            }
            let mut new: Vec<(usize, i64)> = acc.into_iter().filter(|&(_, v)| v != 0).collect();
            new.sort_unstable();
            for &(g, _) in &new {
                if !old.iter().any(|(h, _)| *h == g) {
                    self.users[g].push(u);
                }
            }
            self.expr[u] = Some(new);
        }
        for &(g, _) in &e {
            self.users[g].push(c);
        }
        self.expr[c] = Some(e);
        Ok(())
    }

    pub fn finish(self) -> Result<Quotient> {
        let n = self.expr.len();
        let free: Vec<usize> = (0..n).filter(|&g| self.expr[g].is_none()).collect();
        let mut free_pos = vec![usize::MAX; n];
        for (i, &g) in free.iter().enumerate() {
            free_pos[g] = i;
        }
        let mut rows: Vec<Vec<(usize, i64)>> = Vec::new();
        for r in &self.residual {
            let red = self.reduce(r)?;
            if !red.is_empty() && !rows.contains(&red) {
                rows.push(red);
            }
        }
        let mut m = IntMatrix::zeros(rows.len(), free.len());
        for (i, r) in rows.iter().enumerate() {
            for &(g, k) in r {
                m.set(i, free_pos[g], BigInt::from(k));
            }
        }
        let smith = smith_decomposition(&m);
        let f = free.len();
        let mut diag: Vec<BigInt> = smith.diagonal.clone();
        diag.resize(f, BigInt::zero());
        let keep: Vec<usize> = (0..f).filter(|&t| !diag[t].is_one()).collect();
        let moduli: Vec<BigInt> = keep.iter().map(|&t| diag[t].clone()).collect();
        let free_coords: Vec<Vec<BigInt>> = (0..f)
            .map(|i| {
                keep.iter()
                    .zip(&moduli)
                    .map(|(&t, d)| {
                        let x = smith.col_transform.get(i, t).clone();
                        if d.is_zero() {
                            x
                        } else {
                            x.mod_floor(d)
                        }
                    })
                    .collect()
            })
            .collect();
        let expressions = (0..n)
            .map(|g| match &self.expr[g] {
                None => vec![(free_pos[g], 1)],
                Some(e) => e.iter().map(|&(h, k)| (free_pos[h], k)).collect(),
            })
            .collect();
        let presentation = GroupPresentation::from_diagonal(f, &smith.diagonal);
        Ok(Quotient {
            moduli,
            expressions,
            free_coords,
            presentation,
        })
    }
}

fn add_into(acc: &mut HashMap<usize, i64>, g: usize, k: i64) -> Result<()> {
    let slot = acc.entry(g).or_insert(0);
    *slot = slot.checked_add(k).ok_or(Error::Overflow)?;
    Ok(())
}
