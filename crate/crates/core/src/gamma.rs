//! The index set Γ of t-eigenvectors, the subset Γ_c that survives in
//! `L_c`, weights, and fold detection.
//!
//! A [`PQPair`] stores `P` and `Q` as vectors over box indices (see
//! [`crate::shapes`]). Positions `i` are 1-based as in `P: boxes -> 1..=n`.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::params::Parameter;
use crate::rational::{int, residue, Rational};
use crate::shapes::{box_leq, is_permutation, Cell, MultiPartition, StandardTableau};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PQPair {
    pub p: Vec<usize>,
    pub q: Vec<u64>,
}

impl PQPair {
    pub fn degree(&self) -> u64 {
        self.q.iter().sum()
    }

    pub fn n(&self) -> usize {
        self.p.len()
    }

    /// `p_inverse()[i - 1]` is the box index at position `i`.
    pub fn p_inverse(&self) -> Vec<usize> {
        let mut inv = vec![usize::MAX; self.p.len()];
        for (b, &v) in self.p.iter().enumerate() {
            inv[v - 1] = b;
        }
        inv
    }

    /// Box index at position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.p.iter().position(|&v| v == i).expect("position in range")
    }
}

/// The reason a pair fails membership.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Shape,
    /// `b < b2` but `Q(b) > Q(b2)`, or `Q(b) = Q(b2)` with `P(b) < P(b2)`.
    Order {
        b: usize,
        b2: usize,
    },
    /// `Q(b) >= k` although `k = d_β - d_{β-k} + r ct(b) c0`.
    Single {
        b: usize,
        k: u64,
    },
    /// `Q(b1) > Q(b2) + k`, or equality with `P(b1) < P(b2)`.
    Pair {
        b1: usize,
        b2: usize,
        k: u64,
    },
}

/// The active equations of Γ_c for a shape and parameter.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Constraints {
    /// `(b, k)`: `Q(b) < k`.
    pub single: Vec<(usize, u64)>,
    /// `(b1, b2, k)`: `Q(b1) <= Q(b2) + k`, equality forcing `P(b1) > P(b2)`.
    pub pair: Vec<(usize, usize, u64)>,
}

impl Constraints {
    pub fn new(shape: &MultiPartition, c: &Parameter) -> Self {
        let boxes = shape.boxes();
        let mut single = Vec::new();
        for (i, b) in boxes.iter().enumerate() {
            for k in c.bare_equations(b.component as i64, b.content()) {
                single.push((i, k));
            }
        }
        let mut pair = BTreeSet::new();
        for (i, b1) in boxes.iter().enumerate() {
            for (j, b2) in boxes.iter().enumerate() {
                let (a, b) = (b1.component as i64, b2.component as i64);
                for s in [-1, 1] {
                    let v = c.linear(a, b, b1.content() - b2.content() + s);
                    if let Some(k) = c.congruent_positive(&v, a, b) {
                        pair.insert((i, j, k));
                    }
                }
            }
        }
        Constraints { single, pair: pair.into_iter().collect() }
    }

    pub fn is_empty(&self) -> bool {
        self.single.is_empty() && self.pair.is_empty()
    }

    /// Checks the Γ_c equations (not the Γ conditions).
    pub fn check(&self, pq: &PQPair) -> std::result::Result<(), Violation> {
        for &(b, k) in &self.single {
            if pq.q[b] >= k {
                return Err(Violation::Single { b, k });
            }
        }
        for &(b1, b2, k) in &self.pair {
            let (q1, q2) = (pq.q[b1], pq.q[b2] + k);
            if q1 > q2 || (q1 == q2 && pq.p[b1] < pq.p[b2]) {
                return Err(Violation::Pair { b1, b2, k });
            }
        }
        Ok(())
    }

    /// Checks only the `Q`-inequalities, ignoring tie-breaks on `P`.
    fn check_q(&self, q: &[u64]) -> bool {
        self.single.iter().all(|&(b, k)| q[b] < k) && self.pair.iter().all(|&(b1, b2, k)| q[b1] <= q[b2] + k)
    }
}

/// Checks the defining conditions of Γ.
pub fn in_gamma(pq: &PQPair, shape: &MultiPartition) -> std::result::Result<(), Violation> {
    let n = shape.n();
    if pq.p.len() != n || pq.q.len() != n || !is_permutation(&pq.p) {
        return Err(Violation::Shape);
    }
    let boxes = shape.boxes();
    for (i, b) in boxes.iter().enumerate() {
        for (j, b2) in boxes.iter().enumerate() {
            if i != j && box_leq(b, b2) {
                let bad = pq.q[i] > pq.q[j] || (pq.q[i] == pq.q[j] && pq.p[i] < pq.p[j]);
                if bad {
                    return Err(Violation::Order { b: i, b2: j });
                }
            }
        }
    }
    Ok(())
}

/// Membership in Γ_c with the first violated clause on failure.
pub fn in_gamma_c(pq: &PQPair, shape: &MultiPartition, c: &Parameter) -> std::result::Result<(), Violation> {
    in_gamma(pq, shape)?;
    Constraints::new(shape, c).check(pq)
}

/// The longest permutation sorting `mu` into non-decreasing order, as
/// `w[p - 1] = w(p)`.
pub fn w_mu(mu: &[u64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..mu.len()).collect();
    order.sort_by(|&a, &b| mu[a].cmp(&mu[b]).then(b.cmp(&a)));
    let mut w = vec![0; mu.len()];
    for (rank, &p) in order.iter().enumerate() {
        w[p] = rank + 1;
    }
    w
}

/// `(μ, T) -> (P, Q)` with `P = w_μ^{-1} T` and `Q(b) = μ_{P(b)}`.
pub fn mu_t_to_pq(mu: &[u64], t: &StandardTableau) -> PQPair {
    let w = w_mu(mu);
    let mut winv = vec![0; w.len()];
    for (p, &v) in w.iter().enumerate() {
        winv[v - 1] = p + 1;
    }
    let p: Vec<usize> = t.entries().iter().map(|&e| winv[e - 1]).collect();
    let q = p.iter().map(|&v| mu[v - 1]).collect();
    PQPair { p, q }
}

/// Inverse of [`mu_t_to_pq`].
pub fn pq_to_mu_t(pq: &PQPair) -> (Vec<u64>, StandardTableau) {
    let n = pq.n();
    let mut mu = vec![0; n];
    for (b, &v) in pq.p.iter().enumerate() {
        mu[v - 1] = pq.q[b];
    }
    let w = w_mu(&mu);
    let entries = pq.p.iter().map(|&v| w[v - 1]).collect();
    (mu, StandardTableau::from_entries_unchecked(entries))
}

/// The t-weight at one position: the `z_i` eigenvalue and the exponent of
/// `ζ` in the `ζ_i` eigenvalue.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightEntry {
    pub z: Rational,
    pub zeta: usize,
}

/// Weight of a single box carrying filling value `q`.
pub fn box_weight(b: &Cell, q: u64, c: &Parameter) -> WeightEntry {
    let beta = b.component as i64;
    let qi = q as i64;
    let z = int(qi + 1) - c.linear(beta, beta - qi - 1, 0) - int(c.r() as i64 * b.content()) * c.c0();
    WeightEntry { z, zeta: residue(beta - qi, c.r()) }
}

/// Weights indexed by position `i - 1`.
pub fn weight_of(pq: &PQPair, shape: &MultiPartition, c: &Parameter) -> Vec<WeightEntry> {
    pq.p_inverse().into_iter().map(|b| box_weight(&shape.boxes()[b], pq.q[b], c)).collect()
}

/// Least position `i` with equal weights at `i` and `i + 1`.
pub fn is_folded(pq: &PQPair, shape: &MultiPartition, c: &Parameter) -> Option<usize> {
    let w = weight_of(pq, shape, c);
    (0..w.len().saturating_sub(1)).find(|&i| w[i] == w[i + 1]).map(|i| i + 1)
}

/// `s_i(P, Q) = (s_i P, Q)`. Requires `1 <= i < n`.
pub fn apply_si(pq: &PQPair, i: usize) -> PQPair {
    assert!(i >= 1 && i < pq.n(), "s_i needs 1 <= i < n");
    let p =
        pq.p.iter()
            .map(|&v| {
                if v == i {
                    i + 1
                } else if v == i + 1 {
                    i
                } else {
                    v
                }
            })
            .collect();
    PQPair { p, q: pq.q.clone() }
}

/// The affine raising map: positions shift down, position 1 moves to `n` and gains 1.
pub fn apply_phi(pq: &PQPair) -> PQPair {
    let n = pq.n();
    let mut out = pq.clone();
    for b in 0..n {
        if pq.p[b] == 1 {
            out.p[b] = n;
            out.q[b] += 1;
        } else {
            out.p[b] -= 1;
        }
    }
    out
}

/// Inverse of [`apply_phi`]; `None` when the box at position `n` has `Q = 0`.
pub fn apply_psi(pq: &PQPair) -> Option<PQPair> {
    let n = pq.n();
    let last = pq.at(n);
    if pq.q[last] == 0 {
        return None;
    }
    let mut out = pq.clone();
    for b in 0..n {
        if b == last {
            out.p[b] = 1;
            out.q[b] -= 1;
        } else {
            out.p[b] += 1;
        }
    }
    Some(out)
}

/// Neighbour tables used by the enumerators.
struct Geometry {
    left: Vec<Option<usize>>,
    up: Vec<Option<usize>>,
}

impl Geometry {
    fn new(shape: &MultiPartition) -> Self {
        let find = |b: Cell| shape.index_of(&b);
        let boxes = shape.boxes();
        let left = boxes
            .iter()
            .map(|b| if b.col > 1 { find(Cell::new(b.component, b.row, b.col - 1)) } else { None })
            .collect();
        let up = boxes
            .iter()
            .map(|b| if b.row > 1 { find(Cell::new(b.component, b.row - 1, b.col)) } else { None })
            .collect();
        Geometry { left, up }
    }
}

/// For each box, the boxes whose `P` must exceed its own.
fn p_edges(shape: &MultiPartition, q: &[u64], cons: &Constraints) -> Vec<Vec<usize>> {
    let boxes = shape.boxes();
    let n = boxes.len();
    let mut greater = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            if i != j && box_leq(&boxes[i], &boxes[j]) && q[i] == q[j] {
                greater[j].push(i);
            }
        }
    }
    for &(b1, b2, k) in &cons.pair {
        if q[b1] == q[b2] + k && b1 != b2 && !greater[b2].contains(&b1) {
            greater[b2].push(b1);
        }
    }
    greater
}

/// Assigns `n, n-1, .., 1` so that every box receives a smaller value than
/// the boxes listed in `greater[b]`. `fixed[b]` pins a value. Calls `emit`
/// on each completion; stops when `emit` returns `false`.
fn linear_extensions(greater: &[Vec<usize>], fixed: &[Option<usize>], emit: &mut dyn FnMut(&[usize]) -> bool) {
    let n = greater.len();
    let mut pending: Vec<usize> = greater.iter().map(Vec::len).collect();
    let mut smaller = vec![Vec::new(); n];
    for (b, gs) in greater.iter().enumerate() {
        for &g in gs {
            smaller[g].push(b);
        }
    }
    let mut by_value = vec![None; n + 1];
    for (b, f) in fixed.iter().enumerate() {
        if let Some(v) = *f {
            if v == 0 || v > n || by_value[v].is_some() {
                return;
            }
            by_value[v] = Some(b);
        }
    }
    let mut p = vec![0usize; n];
    fn go(
        v: usize,
        p: &mut Vec<usize>,
        pending: &mut Vec<usize>,
        smaller: &[Vec<usize>],
        fixed: &[Option<usize>],
        by_value: &[Option<usize>],
        emit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if v == 0 {
            return emit(p);
        }
        let mut place = |b: usize, p: &mut Vec<usize>, pending: &mut Vec<usize>| -> bool {
            p[b] = v;
            for &s in &smaller[b] {
                pending[s] -= 1;
            }
            let cont = go(v - 1, p, pending, smaller, fixed, by_value, emit);
            for &s in &smaller[b] {
                pending[s] += 1;
            }
            p[b] = 0;
            cont
        };
        if let Some(b) = by_value[v] {
            if pending[b] == 0 {
                return place(b, p, pending);
            }
            return true;
        }
        for b in 0..p.len() {
            if p[b] == 0 && pending[b] == 0 && fixed[b].is_none() && !place(b, p, pending) {
                return false;
            }
        }
        true
    }
    go(n, &mut p, &mut pending, &smaller, fixed, &by_value, emit);
}

/// Column-wise weakly increasing fillings of total `degree` satisfying `keep`.
fn monotone_fillings(shape: &MultiPartition, degree: u64, upper: &[u64], emit: &mut dyn FnMut(&[u64])) {
    let geo = Geometry::new(shape);
    let n = shape.n();
    let mut q = vec![0u64; n];
    fn go(idx: usize, left: u64, q: &mut Vec<u64>, geo: &Geometry, upper: &[u64], emit: &mut dyn FnMut(&[u64])) {
        let n = q.len();
        if idx == n {
            if left == 0 {
                emit(q);
            }
            return;
        }
        let lo = geo.left[idx].map_or(0, |l| q[l]).max(geo.up[idx].map_or(0, |u| q[u]));
        let hi = left.min(upper[idx]);
        let mut v = lo;
        while v <= hi {
            q[idx] = v;
            go(idx + 1, left - v, q, geo, upper, emit);
            v += 1;
        }
        q[idx] = 0;
    }
    go(0, degree, &mut q, &geo, upper, emit);
}

fn single_bounds(n: usize, cons: &Constraints) -> Vec<u64> {
    let mut upper = vec![u64::MAX; n];
    for &(b, k) in &cons.single {
        upper[b] = upper[b].min(k - 1);
    }
    upper
}

/// Γ_c members of one degree, in a deterministic order.
pub fn gamma_c_of_degree(shape: &MultiPartition, cons: &Constraints, degree: u64) -> Vec<PQPair> {
    let n = shape.n();
    let upper = single_bounds(n, cons);
    let mut out = Vec::new();
    monotone_fillings(shape, degree, &upper, &mut |q| {
        if !cons.check_q(q) {
            return;
        }
        let greater = p_edges(shape, q, cons);
        let fixed = vec![None; n];
        linear_extensions(&greater, &fixed, &mut |p| {
            out.push(PQPair { p: p.to_vec(), q: q.to_vec() });
            true
        });
    });
    out
}

/// Γ_c grouped by degree `0..=max_degree`.
pub fn enumerate_gamma_c(shape: &MultiPartition, c: &Parameter, max_degree: u64) -> Vec<Vec<PQPair>> {
    let cons = Constraints::new(shape, c);
    (0..=max_degree).map(|d| gamma_c_of_degree(shape, &cons, d)).collect()
}

/// All of Γ grouped by degree.
pub fn enumerate_gamma(shape: &MultiPartition, max_degree: u64) -> Vec<Vec<PQPair>> {
    let cons = Constraints::default();
    (0..=max_degree).map(|d| gamma_c_of_degree(shape, &cons, d)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FoldCase {
    /// `φ(P,Q)` is folded; `b2` is a corner with content 0.
    Phi,
    /// `s_i(P,Q)` is folded at position `i`.
    Reflection { i: usize },
}

/// A near fold: an element of Γ_c whose image under `φ` or some `s_i` is folded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NearFold {
    pub pq: PQPair,
    pub case: FoldCase,
    pub b1: usize,
    pub b2: usize,
    pub b3: Option<usize>,
    pub k: u64,
    /// The folded image.
    pub image: PQPair,
    /// First position `i` with `wt_i = wt_{i+1}` in the image.
    pub fold_at: usize,
}

impl NearFold {
    /// Degree of the folded image, where the Jordan block lives.
    pub fn degree(&self) -> u64 {
        self.image.degree()
    }
}

/// Every near fold with `a = 0`, one per `(b1, b2, b3, k)`.
///
/// Candidates come from the removable/rim scan; each is completed by
/// backtracking over reverse standard fillings and kept only if it passes
/// membership and the fold check.
pub fn near_folds(shape: &MultiPartition, c: &Parameter) -> Vec<NearFold> {
    if c.is_c0_zero() {
        return Vec::new();
    }
    let cons = Constraints::new(shape, c);
    let n = shape.n();
    let mut out = Vec::new();
    for b1c in shape.removable_boxes() {
        let b1 = shape.index_of(&b1c).unwrap();
        for b2c in shape.rim_boxes() {
            let b2 = shape.index_of(&b2c).unwrap();
            let (a, b) = (b1c.component as i64, b2c.component as i64);
            let v = c.linear(a, b, b1c.content() - b2c.content());
            let Some(k) = c.congruent_positive(&v, a, b) else { continue };
            if b2c.content() == 0 {
                let mut q = vec![0; n];
                q[b1] = k - 1;
                let mut fixed = vec![None; n];
                fixed[b1] = Some(1);
                fixed[b2] = Some(n);
                if n < 2 {
                    continue;
                }
                if let Some(pq) = complete(shape, &cons, &q, &fixed) {
                    let image = apply_phi(&pq);
                    if let Some(fold_at) = is_folded(&image, shape, c) {
                        out.push(NearFold { pq, case: FoldCase::Phi, b1, b2, b3: None, k, image, fold_at });
                    }
                }
            } else {
                let neighbours = [
                    (b2c.col > 1).then(|| Cell::new(b2c.component, b2c.row, b2c.col - 1)),
                    (b2c.row > 1).then(|| Cell::new(b2c.component, b2c.row - 1, b2c.col)),
                ];
                for b3c in neighbours.into_iter().flatten() {
                    let Some(b3) = shape.index_of(&b3c) else { continue };
                    if b3 == b1 {
                        continue;
                    }
                    let mut q = vec![0; n];
                    q[b1] = k;
                    for i in (2..n).rev() {
                        let mut fixed = vec![None; n];
                        fixed[b1] = Some(i + 1);
                        fixed[b3] = Some(i);
                        fixed[b2] = Some(i - 1);
                        let Some(pq) = complete(shape, &cons, &q, &fixed) else { continue };
                        let image = apply_si(&pq, i);
                        if is_folded(&image, shape, c).is_some() {
                            let fold_at = is_folded(&image, shape, c).unwrap();
                            out.push(NearFold {
                                pq,
                                case: FoldCase::Reflection { i },
                                b1,
                                b2,
                                b3: Some(b3),
                                k,
                                image,
                                fold_at,
                            });
                            break;
                        }
                    }
                }
            }
        }
    }
    out
}

/// First completion of `P` (with pinned values) such that `(P, q)` lies in Γ_c.
fn complete(shape: &MultiPartition, cons: &Constraints, q: &[u64], fixed: &[Option<usize>]) -> Option<PQPair> {
    if !cons.check_q(q) {
        return None;
    }
    let greater = p_edges(shape, q, cons);
    let mut found = None;
    linear_extensions(&greater, fixed, &mut |p| {
        let pq = PQPair { p: p.to_vec(), q: q.to_vec() };
        if cons.check(&pq).is_ok() {
            found = Some(pq);
            false
        } else {
            true
        }
    });
    found
}

/// Near folds found by scanning all of Γ_c up to `max_degree`: members whose
/// `φ` or `s_i` image is folded. Independent of the constructive scan.
pub fn near_folds_brute_force(shape: &MultiPartition, c: &Parameter, max_degree: u64) -> Vec<(PQPair, PQPair)> {
    let mut out = Vec::new();
    if c.is_c0_zero() {
        return out;
    }
    for layer in enumerate_gamma_c(shape, c, max_degree) {
        for pq in layer {
            let phi = apply_phi(&pq);
            if shape.n() >= 2 && is_folded(&phi, shape, c).is_some() {
                out.push((pq.clone(), phi));
                continue;
            }
            for i in 1..shape.n() {
                let s = apply_si(&pq, i);
                if is_folded(&s, shape, c).is_some() {
                    out.push((pq.clone(), s));
                    break;
                }
            }
        }
    }
    out
}

/// Checks that a pair is a genuine near fold of the stated case.
pub fn verify_near_fold(nf: &NearFold, shape: &MultiPartition, c: &Parameter) -> Result<()> {
    in_gamma_c(&nf.pq, shape, c).map_err(|v| Error::Internal(format!("near fold not in Γ_c: {v:?}")))?;
    let image = match nf.case {
        FoldCase::Phi => apply_phi(&nf.pq),
        FoldCase::Reflection { i } => apply_si(&nf.pq, i),
    };
    if image != nf.image || is_folded(&image, shape, c) != Some(nf.fold_at) {
        return Err(Error::Internal("near fold image is not folded".into()));
    }
    Ok(())
}

/// Convenience: `true` iff `q` is the zero filling.
pub fn is_zero_filling(pq: &PQPair) -> bool {
    pq.q.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn shape(parts: &[&[usize]]) -> MultiPartition {
        MultiPartition::from_parts(parts).unwrap()
    }

    #[test]
    fn zero_mu_gives_reverse_tableau() {
        let lam = shape(&[&[2, 1]]);
        for t in lam.standard_tableaux() {
            let pq = mu_t_to_pq(&[0, 0, 0], &t);
            assert!(is_zero_filling(&pq));
            let rev: Vec<usize> = t.entries().iter().map(|&e| 4 - e).collect();
            assert_eq!(pq.p, rev);
            assert!(in_gamma(&pq, &lam).is_ok());
        }
    }

    #[test]
    fn mu_t_example() {
        let lam = shape(&[&[2]]);
        let t = &lam.standard_tableaux()[0];
        let pq = mu_t_to_pq(&[1, 0], t);
        assert_eq!(pq.q, vec![0, 1]);
        assert_eq!(pq.p, vec![2, 1]);
        assert_eq!(pq_to_mu_t(&pq), (vec![1, 0], t.clone()));
    }

    #[test]
    fn weight_examples() {
        let lam = shape(&[&[2]]);
        let c = Parameter::with_c0(1, rat(1, 2));
        let pq = PQPair { p: vec![2, 1], q: vec![0, 0] };
        let w = weight_of(&pq, &lam, &c);
        assert_eq!(w[0].z, rat(1, 2));
        assert_eq!(w[1].z, int(1));
        let c = Parameter::new(2, int(0), &[rat(-1, 2)]).unwrap();
        let lam = shape(&[&[], &[1]]);
        let w = weight_of(&PQPair { p: vec![1], q: vec![0] }, &lam, &c);
        assert_eq!(w[0].z, int(2));
    }

    #[test]
    fn membership_example() {
        let lam = shape(&[&[2]]);
        let c = Parameter::with_c0(1, rat(1, 2));
        let pq = PQPair { p: vec![2, 1], q: vec![0, 1] };
        assert!(in_gamma(&pq, &lam).is_ok());
        assert_eq!(in_gamma_c(&pq, &lam, &c), Err(Violation::Pair { b1: 1, b2: 0, k: 1 }));
    }

    #[test]
    fn enumeration_counts() {
        let counts = |lam: &MultiPartition, c: &Parameter, d: u64| -> Vec<usize> {
            enumerate_gamma_c(lam, c, d).iter().map(Vec::len).collect()
        };
        let one = shape(&[&[1]]);
        assert_eq!(counts(&one, &Parameter::with_c0(1, int(0)), 3), vec![1, 1, 1, 1]);
        let two = shape(&[&[2]]);
        assert_eq!(counts(&two, &Parameter::with_c0(1, rat(1, 2)), 3), vec![1, 1, 1, 1]);
        assert_eq!(counts(&two, &Parameter::with_c0(1, rat(1, 4)), 2), vec![1, 2, 3]);
    }

    #[test]
    fn phi_psi_si() {
        let pq = PQPair { p: vec![3, 1, 2], q: vec![0, 2, 1] };
        let f = apply_phi(&pq);
        assert_eq!(f.degree(), pq.degree() + 1);
        assert_eq!(apply_psi(&f), Some(pq.clone()));
        assert_eq!(apply_si(&apply_si(&pq, 2), 2), pq);
        assert_eq!(apply_psi(&PQPair { p: vec![2, 1], q: vec![0, 1] }), None);
    }

    #[test]
    fn near_fold_examples() {
        let lam = shape(&[&[2, 1]]);
        let folds = near_folds(&lam, &Parameter::with_c0(1, rat(1, 2)));
        assert!(!folds.is_empty());
        for nf in &folds {
            verify_near_fold(nf, &lam, &Parameter::with_c0(1, rat(1, 2))).unwrap();
        }
        assert!(near_folds(&lam, &Parameter::with_c0(1, rat(1, 3))).is_empty());
        assert!(near_folds(&lam, &Parameter::with_c0(1, int(0))).is_empty());
    }

    #[test]
    fn folded_examples() {
        let lam = shape(&[&[2], &[]]);
        let c = Parameter::with_c0(2, int(0));
        let pq = PQPair { p: vec![2, 1], q: vec![0, 0] };
        assert_eq!(is_folded(&pq, &lam, &c), Some(1));
        let lam = shape(&[&[2, 1]]);
        let c = Parameter::with_c0(1, rat(1, 1009));
        let pq = PQPair { p: vec![3, 2, 1], q: vec![0, 0, 0] };
        assert_eq!(is_folded(&pq, &lam, &c), None);
    }
}
