//! Grothendieck group of the completion `C̄_n`.
//!
//! The completion is a Verdier quotient of the discrete cluster category with
//! `2n` accumulation points by a subcategory equivalent to `n` copies of the
//! one-point category. Only its `K₀` is modelled: right exactness gives
//! `Z^n --f--> K₀(host) = Z^{2n} --> K₀(C̄_n) --> 0`, and the columns of `f` are
//! the classes of the kernel generators `{z_{2i-1}^{--}, z_{2i-1}}`.

use num_bigint::BigInt;
use serde::Serialize;

use crate::arcs::Arc;
use crate::circle::{CircleModel, PointIndex};
use crate::error::{Error, Result};
use crate::k0::EulerOracle;
use crate::linalg::{cokernel_of_rows, GroupPresentation, IntMatrix, QuotientClass};

/// The host with `2n` segments and the alternating kernel segments `0, 2, 4, …`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompletionModel {
    n: usize,
    host: CircleModel,
    kernel_segments: Vec<usize>,
    kernel_anchors: Vec<PointIndex>,
}

impl CompletionModel {
    /// Anchors `z_{2i-1}` at offset 0 of each kernel segment.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoSegments);
        }
        let host = CircleModel::new(2 * n)?;
        let kernel_segments: Vec<usize> = (0..n).map(|i| 2 * i).collect();
        let kernel_anchors = kernel_segments
            .iter()
            .map(|&s| PointIndex::new(s, 0))
            .collect();
        Ok(CompletionModel {
            n,
            host,
            kernel_segments,
            kernel_anchors,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn host(&self) -> CircleModel {
        self.host
    }

    pub fn kernel_segments(&self) -> &[usize] {
        &self.kernel_segments
    }

    pub fn kernel_anchors(&self) -> &[PointIndex] {
        &self.kernel_anchors
    }

    /// `{z_{2i-1} - 2, z_{2i-1}}` for `1 <= i <= n`.
    pub fn kernel_generator_arc(&self, i: usize) -> Result<Arc> {
        if !(1..=self.n).contains(&i) {
            return Err(Error::IndexOutOfRange {
                index: i,
                range: format!("1..={}", self.n),
            });
        }
        let z = self.kernel_anchors[i - 1];
        Arc::new(z.step(-2), z)
    }

    pub fn kernel_generators(&self) -> Vec<Arc> {
        (1..=self.n)
            .map(|i| self.kernel_generator_arc(i).expect("index in range"))
            .collect()
    }

    pub fn is_kernel_object(&self, a: &Arc) -> bool {
        a.is_same_segment() && self.kernel_segments.contains(&a.lo().segment)
    }
}

/// `2n x n` matrix over `[Y_1, X_2, …, X_{2n}]` whose column `i` is the class
/// of the `i`-th kernel generator.
pub fn f_matrix(n: usize) -> IntMatrix {
    let mut f = IntMatrix::zeros(2 * n, n);
    f.set(0, 0, BigInt::from(1));
    f.set(1, 0, BigInt::from(1));
    for i in 2..=n {
        f.set(0, i - 1, BigInt::from(-1));
        f.set(1, i - 1, BigInt::from(-1));
        // X_{2i-1} is row 2i-2
        f.set(2 * i - 2, i - 1, BigInt::from(2));
    }
    f
}

pub fn compute_k0_completed(n: usize) -> Result<GroupPresentation> {
    if n == 0 {
        return Err(Error::NoSegments);
    }
    Ok(cokernel_of_rows(&f_matrix(n).transpose()))
}

/// Both routes to `K₀(C̄_n)` side by side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompletionReport {
    pub expected: GroupPresentation,
    pub oracle: GroupPresentation,
    #[serde(rename = "match")]
    pub matches: bool,
    pub generators: Vec<Arc>,
    /// Whether every kernel generator has a non-zero oracle class.
    #[serde(skip)]
    pub generators_nonzero: bool,
}

/// Quotients the brute-force host group by the oracle classes of the kernel
/// generators and compares with [`compute_k0_completed`].
pub fn verify_f_oracle(n: usize, window: i64) -> Result<CompletionReport> {
    let model = CompletionModel::new(n)?;
    if window < 2 {
        return Err(Error::InsufficientWindow(format!(
            "window {window} does not contain the kernel generators; need at least 2"
        )));
    }
    let generators = model.kernel_generators();
    let (expected, oracle) = std::thread::scope(|s| {
        let expected = s.spawn(|| compute_k0_completed(n));
        let oracle = EulerOracle::new(2 * n, window);
        (expected.join().expect("cokernel thread panicked"), oracle)
    });
    let (expected, oracle) = (expected?, oracle?);
    let classes: Vec<QuotientClass> = generators
        .iter()
        .map(|a| {
            oracle.class_of(a).ok_or_else(|| {
                Error::InsufficientWindow(format!("{a} lies outside window {window}"))
            })
        })
        .collect::<Result<_>>()?;
    let generators_nonzero = classes.iter().all(|c| !c.is_zero());
    let oracle_presentation = oracle.quotient().quotient_by(&classes);
    Ok(CompletionReport {
        matches: oracle_presentation == expected,
        expected,
        oracle: oracle_presentation,
        generators,
        generators_nonzero,
    })
}
