//! Graded dimensions of `L_c(λ)` and of its `W`-invariants.

use crate::classify::is_diagonalizable;
use crate::error::{Error, Result};
use crate::gamma::{gamma_c_of_degree, Constraints};
use crate::params::Parameter;
use crate::rational::residue;
use crate::shapes::{Cell, MultiPartition};

/// Coefficients `a_0, .., a_D` of a graded dimension.
pub type GradedCount = Vec<u64>;

fn require_diagonalizable(shape: &MultiPartition, c: &Parameter) -> Result<()> {
    if c.is_c0_zero() {
        return Err(Error::Precondition("the basis count needs c0 != 0".into()));
    }
    if !is_diagonalizable(shape, c).diagonalizable {
        return Err(Error::Precondition("L_c(λ) is not diagonalizable".into()));
    }
    Ok(())
}

/// `a_d = #{(P, Q) ∈ Γ_c : ΣQ = d}`. Refused unless `c0 != 0` and diagonalizable.
pub fn graded_dim_l(shape: &MultiPartition, c: &Parameter, max_degree: u64) -> Result<GradedCount> {
    require_diagonalizable(shape, c)?;
    let cons = Constraints::new(shape, c);
    Ok((0..=max_degree).map(|d| gamma_c_of_degree(shape, &cons, d).len() as u64).collect())
}

/// A non-negative filling, weakly increasing along rows and strictly down columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColumnStrictTableau {
    pub q: Vec<u64>,
}

/// Column-strict fillings of total `degree`. With `residues = true` each
/// entry must satisfy `Q(b) ≡ β(b) (mod r)`.
pub fn enumerate_column_strict(shape: &MultiPartition, degree: u64, residues: bool) -> Vec<ColumnStrictTableau> {
    let boxes = shape.boxes();
    let r = shape.r();
    let left: Vec<Option<usize>> = boxes
        .iter()
        .map(|b| (b.col > 1).then(|| shape.index_of(&Cell::new(b.component, b.row, b.col - 1)).unwrap()))
        .collect();
    let up: Vec<Option<usize>> = boxes
        .iter()
        .map(|b| (b.row > 1).then(|| shape.index_of(&Cell::new(b.component, b.row - 1, b.col)).unwrap()))
        .collect();
    let mut out = Vec::new();
    let mut q = vec![0u64; boxes.len()];
    #[allow(clippy::too_many_arguments)]
    fn go(
        idx: usize,
        left_sum: u64,
        q: &mut Vec<u64>,
        boxes: &[Cell],
        left: &[Option<usize>],
        up: &[Option<usize>],
        r: usize,
        residues: bool,
        out: &mut Vec<ColumnStrictTableau>,
    ) {
        if idx == boxes.len() {
            if left_sum == 0 {
                out.push(ColumnStrictTableau { q: q.clone() });
            }
            return;
        }
        let lo = left[idx].map_or(0, |l| q[l]).max(up[idx].map_or(0, |u| q[u] + 1));
        let mut v = lo;
        while v <= left_sum {
            if !residues || residue(v as i64 - boxes[idx].component as i64, r) == 0 {
                q[idx] = v;
                go(idx + 1, left_sum - v, q, boxes, left, up, r, residues, out);
            }
            v += 1;
        }
        q[idx] = 0;
    }
    go(0, degree, &mut q, boxes, &left, &up, r, residues, &mut out);
    out
}

/// `(b1, b2, k, strict)`: `Q(b1) - Q(b2) <= k`, or `< k` when `strict`.
///
/// The bound is strict when it comes from the `-1` equation: there the
/// surviving vector is antisymmetric in the two positions and symmetrizes
/// to zero at equality.
fn invariant_pairs(shape: &MultiPartition, c: &Parameter) -> Vec<(usize, usize, u64, bool)> {
    let boxes = shape.boxes();
    let mut out = Vec::new();
    for (i, b1) in boxes.iter().enumerate() {
        for (j, b2) in boxes.iter().enumerate() {
            let (a, b) = (b1.component as i64, b2.component as i64);
            for s in [-1, 1] {
                let v = c.linear(a, b, b1.content() - b2.content() + s);
                if let Some(k) = c.congruent_positive(&v, a, b) {
                    out.push((i, j, k, s == -1));
                }
            }
        }
    }
    out
}

/// Counts column-strict tableaux with the residue condition, `Q(b) < k`
/// for each single equation and the pair bounds of [`invariant_pairs`].
pub fn graded_char_invariants(shape: &MultiPartition, c: &Parameter, max_degree: u64) -> Result<GradedCount> {
    require_diagonalizable(shape, c)?;
    let single = Constraints::new(shape, c).single;
    let pairs = invariant_pairs(shape, c);
    Ok((0..=max_degree)
        .map(|d| {
            enumerate_column_strict(shape, d, true)
                .iter()
                .filter(|t| {
                    single.iter().all(|&(b, k)| t.q[b] < k)
                        && pairs.iter().all(|&(b1, b2, k, strict)| {
                            let bound = t.q[b2] + k;
                            if strict {
                                t.q[b1] < bound
                            } else {
                                t.q[b1] <= bound
                            }
                        })
                })
                .count() as u64
        })
        .collect())
}
