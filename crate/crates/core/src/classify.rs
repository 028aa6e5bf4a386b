//! Decision procedures for diagonalizability and unitarity, blocking
//! sequences, and explicit unitarity-violating pairs.
//!
//! Every procedure first normalises to `c0 >= 0` by transposing all
//! components; certificates refer to the normalised shape, and the verdict
//! records whether that happened.

use std::collections::HashSet;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::gamma::{self, Constraints, NearFold, PQPair};
use crate::params::{ExtendedNat, Parameter};
use crate::rational::{int, Rational};
use crate::shapes::{box_leq, Cell, MultiPartition};

/// Transposes every component and negates `c0` when `c0 < 0`.
pub fn reduce_sign(shape: &MultiPartition, c: &Parameter) -> (MultiPartition, Parameter, bool) {
    if c.is_c0_negative() {
        (shape.transpose(), c.with_new_c0(-c.c0().clone()), true)
    } else {
        (shape.clone(), c.clone(), false)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RemovableStat {
    pub cell: Cell,
    pub k: ExtendedNat,
    pub l: ExtendedNat,
}

impl RemovableStat {
    /// `k = ∞` or `l < k`.
    pub fn passes(&self) -> bool {
        !self.k.is_finite() || self.l < self.k
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiagCertificate {
    C0Zero,
    Stats {
        table: Vec<RemovableStat>,
        /// Present when the verdict is negative.
        near_fold: Option<NearFold>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagVerdict {
    pub diagonalizable: bool,
    /// `true` when the certificate refers to the transposed shape.
    pub flipped: bool,
    pub shape: MultiPartition,
    pub param: Parameter,
    pub certificate: DiagCertificate,
}

/// Diagonalizability test from the removable-box statistics.
pub fn is_diagonalizable(shape: &MultiPartition, c: &Parameter) -> DiagVerdict {
    let (shape, c, flipped) = reduce_sign(shape, c);
    if c.is_c0_zero() {
        return DiagVerdict { diagonalizable: true, flipped, shape, param: c, certificate: DiagCertificate::C0Zero };
    }
    let table: Vec<RemovableStat> = shape
        .removable_boxes()
        .into_iter()
        .map(|b| RemovableStat { k: c.k_stat(&b, &shape), l: c.l_stat(&b, &shape), cell: b })
        .collect();
    let diagonalizable = table.iter().all(RemovableStat::passes);
    let near_fold =
        if diagonalizable { None } else { gamma::near_folds(&shape, &c).into_iter().min_by_key(|nf| nf.degree()) };
    DiagVerdict { diagonalizable, flipped, shape, param: c, certificate: DiagCertificate::Stats { table, near_fold } }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BlockTarget {
    /// A box and a residue `j`.
    Char { b: Cell, j: usize },
    /// An ordered pair of boxes.
    Pair { b: Cell, b2: Cell },
}

/// `boxes = (b_0, .., b_{2q+1})`; `l` is present exactly for the char form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockingSequence {
    pub target: BlockTarget,
    pub boxes: Vec<Cell>,
    pub l: Option<usize>,
}

impl BlockingSequence {
    pub fn q(&self) -> usize {
        self.boxes.len() / 2 - 1
    }
}

fn step_holds(c: &Parameter, x: &Cell, y: &Cell) -> bool {
    let (a, b) = (x.component as i64, y.component as i64);
    let m = int(c.m(a, b));
    [-1, 1].iter().any(|s| c.linear(a, b, x.content() - y.content() + s) == m)
}

fn final_holds(c: &Parameter, x: &Cell, l: usize) -> bool {
    let a = x.component as i64;
    c.linear(a, l as i64, x.content()) == int(c.m(a, l as i64))
}

/// Shortest-first search. `finish(level, y, used)` decides whether the
/// sequence may end at `b_{2q+1} = y`, returning the trailing `l` if so.
fn search(
    shape: &MultiPartition,
    c: &Parameter,
    start: &Cell,
    budget: i64,
    max_step_total: i64,
    finish: &dyn Fn(usize, &Cell, i64) -> Option<Option<usize>>,
) -> Option<(Vec<Cell>, Option<usize>)> {
    let boxes = shape.boxes();
    // A path is stored as the list of b_0..b_{2k}.
    let mut level: Vec<(Vec<Cell>, i64)> = vec![(vec![*start], 0)];
    let mut seen: HashSet<(Cell, i64)> = HashSet::new();
    seen.insert((*start, 0));
    let mut q = 0;
    while !level.is_empty() {
        let mut next = Vec::new();
        for (path, used) in &level {
            let x = path.last().unwrap();
            for y in boxes.iter().filter(|y| box_leq(x, y)) {
                if let Some(l) = finish(q, y, *used) {
                    let mut seq = path.clone();
                    seq.push(*y);
                    return Some((seq, l));
                }
                for z in boxes {
                    if !step_holds(c, y, z) {
                        continue;
                    }
                    let u = used + c.m(y.component as i64, z.component as i64);
                    if u > max_step_total || u > budget {
                        continue;
                    }
                    if seen.insert((*z, u)) {
                        let mut p = path.clone();
                        p.push(*y);
                        p.push(*z);
                        next.push((p, u));
                    }
                }
            }
        }
        level = next;
        q += 1;
    }
    None
}

/// A blocking sequence for `(b, j)`, shortest in `q`.
pub fn find_blocking_char(b: &Cell, j: usize, shape: &MultiPartition, c: &Parameter) -> Option<BlockingSequence> {
    let mij = c.m(b.component as i64, j as i64);
    let finish = |_q: usize, y: &Cell, used: i64| -> Option<Option<usize>> {
        (0..c.r()).find(|&l| used + c.m(y.component as i64, l as i64) <= mij && final_holds(c, y, l)).map(Some)
    };
    let (boxes, l) = search(shape, c, b, mij, mij - 1, &finish)?;
    Some(BlockingSequence { target: BlockTarget::Char { b: *b, j }, boxes, l })
}

/// A blocking sequence for the pair `(b, b2)`: the char form for
/// `(b, β(b2))` if one exists, otherwise a chain ending at `b2`.
pub fn find_blocking_pair(b: &Cell, b2: &Cell, shape: &MultiPartition, c: &Parameter) -> Option<BlockingSequence> {
    let target = BlockTarget::Pair { b: *b, b2: *b2 };
    if let Some(seq) = find_blocking_char(b, b2.component, shape, c) {
        return Some(BlockingSequence { target, ..seq });
    }
    let mij = c.m(b.component as i64, b2.component as i64);
    let finish = |q: usize, y: &Cell, used: i64| -> Option<Option<usize>> {
        (y == b2 && (q == 0 || used == mij)).then_some(None)
    };
    let (boxes, _) = search(shape, c, b, mij, mij, &finish)?;
    Some(BlockingSequence { target, boxes, l: None })
}

/// Re-checks every defining condition of a blocking sequence from scratch,
/// using the strictly-increasing formulation rather than the sum form the
/// search relies on.
pub fn verify_blocking(seq: &BlockingSequence, shape: &MultiPartition, c: &Parameter) -> bool {
    let bs = &seq.boxes;
    if bs.len() < 2 || !bs.len().is_multiple_of(2) || !bs.iter().all(|b| shape.contains(b)) {
        return false;
    }
    let q = bs.len() / 2 - 1;
    let b0 = match &seq.target {
        BlockTarget::Char { b, .. } | BlockTarget::Pair { b, .. } => b,
    };
    if &bs[0] != b0 {
        return false;
    }
    if !(0..=q).all(|k| box_leq(&bs[2 * k], &bs[2 * k + 1])) {
        return false;
    }
    let i = b0.component as i64;
    let mi = |x: &Cell| c.m(i, x.component as i64);
    let increasing = (1..q).all(|k| mi(&bs[2 * k]) < mi(&bs[2 * k + 2]));
    let steps_hold = (1..=q).all(|k| step_holds(c, &bs[2 * k - 1], &bs[2 * k]));
    if !increasing || !steps_hold {
        return false;
    }
    let char_form = |j: usize, l: usize| -> bool {
        let mil = c.m(i, l as i64);
        let window = mil <= c.m(i, j as i64) && (q == 0 || mi(&bs[2 * q]) < mil);
        window && l < c.r() && final_holds(c, &bs[2 * q + 1], l)
    };
    match (&seq.target, seq.l) {
        (BlockTarget::Char { j, .. }, Some(l)) => char_form(*j, l),
        (BlockTarget::Pair { b2, .. }, Some(l)) => char_form(b2.component, l),
        (BlockTarget::Pair { b2, .. }, None) => {
            let last_ok = q == 0 || mi(&bs[2 * q]) == c.m(i, b2.component as i64);
            &bs[2 * q + 1] == b2 && last_ok
        }
        (BlockTarget::Char { .. }, None) => false,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UnitaryCertificate {
    /// `c0 = 0`: the residues `(i, j)` that needed a witness, each with the
    /// `k` found (all present when unitary), or the first failing `(i, j)`.
    C0Zero {
        checked: Vec<(usize, usize, Option<usize>)>,
    },
    NotDiagonalizable(DiagVerdict),
    /// Every required blocking sequence.
    Blocked {
        sequences: Vec<BlockingSequence>,
    },
    /// A pair inside its window with no blocking sequence.
    PairUnblocked {
        b1: Cell,
        b2: Cell,
        m: i64,
        witness: PQPair,
    },
    /// A box and residue with no blocking sequence.
    CharUnblocked {
        b: Cell,
        j: usize,
        m: i64,
        witness: PQPair,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitaryVerdict {
    pub unitary: bool,
    pub flipped: bool,
    pub shape: MultiPartition,
    pub param: Parameter,
    pub certificate: UnitaryCertificate,
}

impl UnitaryVerdict {
    /// Degree at which the oracle should see the obstruction, if any.
    pub fn refutation_degree(&self) -> Option<u64> {
        match &self.certificate {
            UnitaryCertificate::PairUnblocked { witness, .. } => Some(witness.degree()),
            UnitaryCertificate::CharUnblocked { witness, .. } => Some(witness.degree() + 1),
            UnitaryCertificate::NotDiagonalizable(d) => match &d.certificate {
                DiagCertificate::Stats { near_fold: Some(nf), .. } => Some(nf.degree()),
                _ => None,
            },
            UnitaryCertificate::C0Zero { checked } if !self.unitary => {
                checked.iter().find(|(_, _, k)| k.is_none()).map(|&(i, j, _)| self.param.m(i as i64, j as i64) as u64)
            }
            _ => None,
        }
    }
}

/// `(d_a - d_b + r(Δct - 1)c0, d_a - d_b + r(Δct + 1)c0)` for an ordered pair.
pub fn pair_window(c: &Parameter, b1: &Cell, b2: &Cell) -> (Rational, Rational) {
    let (a, b) = (b1.component as i64, b2.component as i64);
    let dct = b1.content() - b2.content();
    (c.linear(a, b, dct - 1), c.linear(a, b, dct + 1))
}

/// The pair lies strictly inside its window, so it needs a blocking sequence.
pub fn pair_needs_blocking(c: &Parameter, b1: &Cell, b2: &Cell) -> bool {
    let (lo, hi) = pair_window(c, b1, b2);
    let m = int(c.m(b1.component as i64, b2.component as i64));
    hi > m && m > lo
}

/// `d_β - d_j + r ct(b) c0 > m_{β,j}`: the box and residue need a blocking sequence.
pub fn char_needs_blocking(c: &Parameter, b: &Cell, j: usize) -> bool {
    let a = b.component as i64;
    c.linear(a, j as i64, b.content()) > int(c.m(a, j as i64))
}

/// Unitarity test.
pub fn is_unitary(shape: &MultiPartition, c: &Parameter) -> Result<UnitaryVerdict> {
    let (shape, c, flipped) = reduce_sign(shape, c);
    let verdict =
        |unitary, certificate| UnitaryVerdict { unitary, flipped, shape: shape.clone(), param: c.clone(), certificate };
    if c.is_c0_zero() {
        let (ok, checked) = c0_zero_unitary(&shape, &c);
        return Ok(verdict(ok, UnitaryCertificate::C0Zero { checked }));
    }
    let diag = is_diagonalizable(&shape, &c);
    if !diag.diagonalizable {
        return Ok(verdict(false, UnitaryCertificate::NotDiagonalizable(diag)));
    }
    let mut sequences = Vec::new();
    for b1 in shape.boxes() {
        for b2 in shape.boxes() {
            if !pair_needs_blocking(&c, b1, b2) {
                continue;
            }
            match find_blocking_pair(b1, b2, &shape, &c) {
                Some(seq) => sequences.push(seq),
                None => {
                    let target = ViolationTarget::Pair(*b1, *b2);
                    let witness = construct_violation(&target, &shape, &c)?;
                    let m = c.m(b1.component as i64, b2.component as i64);
                    let cert = UnitaryCertificate::PairUnblocked { b1: *b1, b2: *b2, m, witness };
                    return Ok(verdict(false, cert));
                }
            }
        }
    }
    for b in shape.boxes() {
        for j in 0..c.r() {
            if !char_needs_blocking(&c, b, j) {
                continue;
            }
            match find_blocking_char(b, j, &shape, &c) {
                Some(seq) => sequences.push(seq),
                None => {
                    let witness = construct_violation(&ViolationTarget::Char(*b, j), &shape, &c)?;
                    let m = c.m(b.component as i64, j as i64);
                    let cert = UnitaryCertificate::CharUnblocked { b: *b, j, m, witness };
                    return Ok(verdict(false, cert));
                }
            }
        }
    }
    Ok(verdict(true, UnitaryCertificate::Blocked { sequences }))
}

/// The `c0 = 0` criterion: for each non-empty `λ^i` and each `j` with
/// `d_i - d_j > m_ij`, some `k` with `m_ik < m_ij` and `d_i - d_k = m_ik`.
fn c0_zero_unitary(shape: &MultiPartition, c: &Parameter) -> (bool, Vec<(usize, usize, Option<usize>)>) {
    let r = c.r();
    let mut checked = Vec::new();
    for i in 0..r {
        if shape.component(i).is_empty() {
            continue;
        }
        let ii = i as i64;
        for j in 0..r {
            let mij = c.m(ii, j as i64);
            if c.linear(ii, j as i64, 0) <= int(mij) {
                continue;
            }
            let k = (0..r).find(|&k| {
                let mik = c.m(ii, k as i64);
                mik < mij && c.linear(ii, k as i64, 0) == int(mik)
            });
            checked.push((i, j, k));
            if k.is_none() {
                return (false, checked);
            }
        }
    }
    (true, checked)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ViolationTarget {
    Pair(Cell, Cell),
    Char(Cell, usize),
}

/// Builds `(P, Q) ∈ Γ_c` violating the unitarity inequality for a target
/// that has no blocking sequence. Requires `c0 > 0` and a diagonalizable
/// module. The result is re-validated before it is returned.
pub fn construct_violation(target: &ViolationTarget, shape: &MultiPartition, c: &Parameter) -> Result<PQPair> {
    if !c.c0().is_positive() {
        return Err(Error::Precondition("violation construction needs c0 > 0".into()));
    }
    match target {
        ViolationTarget::Pair(b1, b2) => {
            if !pair_needs_blocking(c, b1, b2) {
                return Err(Error::Precondition("pair is outside its window".into()));
            }
            if find_blocking_pair(b1, b2, shape, c).is_some() {
                return Err(Error::Precondition("a blocking sequence exists".into()));
            }
        }
        ViolationTarget::Char(b, j) => {
            if !char_needs_blocking(c, b, *j) {
                return Err(Error::Precondition("box and residue do not need blocking".into()));
            }
            if find_blocking_char(b, *j, shape, c).is_some() {
                return Err(Error::Precondition("a blocking sequence exists".into()));
            }
        }
    }
    if !is_diagonalizable(shape, c).diagonalizable {
        return Err(Error::Precondition("module is not diagonalizable".into()));
    }
    let pq = greedy_violation(target, shape, c)?;
    check_violation(target, &pq, shape, c).map(|_| pq)
}

fn greedy_violation(target: &ViolationTarget, shape: &MultiPartition, c: &Parameter) -> Result<PQPair> {
    let boxes = shape.boxes();
    let n = boxes.len();
    let idx = |b: &Cell| shape.index_of(b).ok_or_else(|| Error::Precondition(format!("{b} not in shape")));
    let mut p: Vec<Option<usize>> = vec![None; n];
    let mut q: Vec<Option<u64>> = vec![None; n];
    let mut top = n;
    let i;
    match target {
        ViolationTarget::Pair(b1, b2) => {
            i = b1.component;
            let m = c.m(b1.component as i64, b2.component as i64) as u64;
            let (x1, x2) = (idx(b1)?, idx(b2)?);
            let up: Vec<usize> = (0..n).filter(|&b| box_leq(b1, &boxes[b])).collect();
            let down: Vec<usize> = (0..n).filter(|&b| box_leq(&boxes[b], b2)).collect();
            if up.iter().any(|b| down.contains(b)) {
                return Err(Error::Precondition("b1 <= b2 is itself blocking".into()));
            }
            // Highest numbers go to the strict down-set of b2, then b1, b2,
            // then the strict up-set of b1; each block decreasing along the order.
            for &b in down.iter().filter(|&&b| b != x2) {
                p[b] = Some(top);
                q[b] = Some(0);
                top -= 1;
            }
            p[x1] = Some(top);
            q[x1] = Some(m);
            top -= 1;
            p[x2] = Some(top);
            q[x2] = Some(0);
            top -= 1;
            for &b in up.iter().filter(|&&b| b != x1) {
                p[b] = Some(top);
                q[b] = Some(m);
                top -= 1;
            }
        }
        ViolationTarget::Char(b, j) => {
            i = b.component;
            let m = c.m(b.component as i64, *j as i64) as u64;
            let x = idx(b)?;
            p[x] = Some(1);
            q[x] = Some(m - 1);
            for y in (0..n).filter(|&y| y != x && box_leq(b, &boxes[y])) {
                p[y] = Some(top);
                q[y] = Some(m);
                top -= 1;
            }
        }
    }
    let cons = Constraints::new(shape, c);
    let r = c.r();
    for k in 1..=r {
        let comp = (i + r * 2 - k) % r;
        for b in 0..n {
            if boxes[b].component != comp || p[b].is_some() {
                continue;
            }
            while top >= 1 && p.contains(&Some(top)) {
                top -= 1;
            }
            if top == 0 {
                return Err(Error::Internal("ran out of positions".into()));
            }
            p[b] = Some(top);
            let mut v: i64 = 0;
            for b2 in 0..n {
                if let Some(q2) = q[b2] {
                    if b2 != b && box_leq(&boxes[b2], &boxes[b]) {
                        v = v.max(q2 as i64);
                    }
                }
            }
            for &(x, y, l) in &cons.pair {
                if y == b && x != b {
                    if let Some(qx) = q[x] {
                        // Equality needs P(x) > P(b).
                        let tie_ok = p[x].is_some_and(|px| px > top);
                        v = v.max(qx as i64 - l as i64 + i64::from(!tie_ok));
                    }
                }
            }
            q[b] = Some(v as u64);
        }
    }
    let p: Option<Vec<usize>> = p.into_iter().collect();
    let q: Option<Vec<u64>> = q.into_iter().collect();
    match (p, q) {
        (Some(p), Some(q)) => Ok(PQPair { p, q }),
        _ => Err(Error::Internal("violation construction left boxes unassigned".into())),
    }
}

/// Checks membership in Γ_c and that the pair violates the inequality tied
/// to its target.
pub fn check_violation(target: &ViolationTarget, pq: &PQPair, shape: &MultiPartition, c: &Parameter) -> Result<()> {
    gamma::in_gamma_c(pq, shape, c).map_err(|v| Error::Internal(format!("violation witness not in Γ_c: {v:?}")))?;
    let idx = |b: &Cell| shape.index_of(b).ok_or_else(|| Error::Internal("box not in shape".into()));
    let ok = match target {
        ViolationTarget::Pair(b1, b2) => {
            let (x1, x2) = (idx(b1)?, idx(b2)?);
            let diff = pq.q[x1] as i64 - pq.q[x2] as i64;
            let (lo, hi) = pair_window(c, b1, b2);
            let d = int(diff);
            let congruent = (diff - (b1.component as i64 - b2.component as i64)).rem_euclid(c.r() as i64) == 0;
            pq.p[x1] == pq.p[x2] + 1 && lo < d && d < hi && congruent
        }
        ViolationTarget::Char(b, _) => {
            let x = idx(b)?;
            let qb = pq.q[x] as i64;
            let beta = b.component as i64;
            let rhs = c.linear(beta, beta - qb - 1, b.content());
            pq.p[x] == 1 && int(qb + 1) < rhs
        }
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Internal("violation witness does not violate its inequality".into()))
    }
}

/// Re-checks a blocking-sequence list against the clauses it should cover.
pub fn verify_blocked(verdict: &UnitaryVerdict) -> bool {
    match &verdict.certificate {
        UnitaryCertificate::Blocked { sequences } => {
            sequences.iter().all(|s| verify_blocking(s, &verdict.shape, &verdict.param))
        }
        _ => true,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocusPoint {
    pub c0: Rational,
    pub d0: Rational,
    pub diagonalizable: bool,
    pub unitary: bool,
}

/// Verdicts for `r = 2` over a `(c0, d0)` grid, with `d1 = -d0`.
pub fn locus_2d(shape: &MultiPartition, c0s: &[Rational], d0s: &[Rational]) -> Result<Vec<LocusPoint>> {
    if shape.r() != 2 {
        return Err(Error::Precondition("locus sweeps need r = 2".into()));
    }
    let mut out = Vec::with_capacity(c0s.len() * d0s.len());
    for c0 in c0s {
        for d0 in d0s {
            let c = Parameter::from_full(2, c0.clone(), vec![d0.clone(), -d0.clone()])?;
            let diag = is_diagonalizable(shape, &c).diagonalizable;
            let unitary = is_unitary(shape, &c)?.unitary;
            out.push(LocusPoint { c0: c0.clone(), d0: d0.clone(), diagonalizable: diag, unitary });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn shape(parts: &[&[usize]]) -> MultiPartition {
        MultiPartition::from_parts(parts).unwrap()
    }

    #[test]
    fn reduce_sign_examples() {
        let (s, c, f) = reduce_sign(&shape(&[&[2]]), &Parameter::with_c0(1, rat(-1, 2)));
        assert_eq!(s, shape(&[&[1, 1]]));
        assert_eq!(c.c0(), &rat(1, 2));
        assert!(f);
        let (s, _, f) = reduce_sign(&shape(&[&[2]]), &Parameter::with_c0(1, rat(1, 3)));
        assert_eq!(s, shape(&[&[2]]));
        assert!(!f);
    }

    #[test]
    fn diag_examples() {
        let lam = shape(&[&[2, 1]]);
        assert!(!is_diagonalizable(&lam, &Parameter::with_c0(1, rat(1, 2))).diagonalizable);
        assert!(is_diagonalizable(&lam, &Parameter::with_c0(1, rat(1, 3))).diagonalizable);
        let v = is_diagonalizable(&lam, &Parameter::new(1, int(0), &[]).unwrap());
        assert_eq!(v.certificate, DiagCertificate::C0Zero);
        let v = is_diagonalizable(&lam, &Parameter::with_c0(1, rat(1, 2)));
        match v.certificate {
            DiagCertificate::Stats { near_fold: Some(nf), .. } => assert_eq!(nf.k, 1),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn blocking_char_examples() {
        let lam = shape(&[&[2]]);
        let b = Cell::new(0, 1, 2);
        let c = Parameter::with_c0(1, int(1));
        let s = find_blocking_char(&b, 0, &lam, &c).unwrap();
        assert_eq!(s.boxes, vec![b, b]);
        assert_eq!(s.l, Some(0));
        assert!(verify_blocking(&s, &lam, &c));
        assert!(find_blocking_char(&b, 0, &lam, &Parameter::with_c0(1, rat(3, 4))).is_none());
        assert!(find_blocking_char(&b, 0, &lam, &Parameter::with_c0(1, int(0))).is_none());
    }

    #[test]
    fn blocking_pair_examples() {
        let lam = shape(&[&[2]]);
        let (b, b2) = (Cell::new(0, 1, 2), Cell::new(0, 1, 1));
        for c0 in [rat(5, 8), rat(3, 4), rat(7, 8)] {
            assert!(find_blocking_pair(&b, &b2, &lam, &Parameter::with_c0(1, c0)).is_none());
        }
        let c = Parameter::with_c0(1, int(1));
        let s = find_blocking_pair(&b, &b2, &lam, &c).unwrap();
        assert!(verify_blocking(&s, &lam, &c));
        let s = find_blocking_pair(&b2, &b, &lam, &Parameter::with_c0(1, rat(3, 4))).unwrap();
        assert_eq!(s.boxes, vec![b2, b]);
    }

    #[test]
    fn unitary_examples() {
        let lam = shape(&[&[2]]);
        for (c0, want) in [(rat(0, 1), true), (rat(1, 4), true), (rat(1, 2), true), (rat(3, 4), false), (int(1), false)]
        {
            let v = is_unitary(&lam, &Parameter::with_c0(1, c0.clone())).unwrap();
            assert_eq!(v.unitary, want, "c0 = {c0}");
        }
        let v = is_unitary(&lam, &Parameter::with_c0(1, int(1))).unwrap();
        assert!(matches!(v.certificate, UnitaryCertificate::NotDiagonalizable(_)));
    }

    #[test]
    fn violation_examples() {
        let lam = shape(&[&[2]]);
        let (b1, b2) = (Cell::new(0, 1, 2), Cell::new(0, 1, 1));
        let c = Parameter::with_c0(1, rat(3, 4));
        let pq = construct_violation(&ViolationTarget::Pair(b1, b2), &lam, &c).unwrap();
        assert_eq!(pq.q, vec![0, 1]);
        assert_eq!(pq.p[1], pq.p[0] + 1);
        let c = Parameter::with_c0(1, rat(5, 4));
        let pq = construct_violation(&ViolationTarget::Char(b1, 0), &lam, &c).unwrap();
        assert_eq!(pq.p[1], 1);
        assert_eq!(pq.q[1], 0);
        let c = Parameter::with_c0(1, int(1));
        assert!(matches!(construct_violation(&ViolationTarget::Char(b1, 0), &lam, &c), Err(Error::Precondition(_))));
    }

    #[test]
    fn c0_zero_unitarity() {
        let lam = shape(&[&[1], &[]]);
        let c = Parameter::new(2, int(0), &[int(0)]).unwrap();
        assert!(is_unitary(&lam, &c).unwrap().unitary);
        // d_0 - d_1 = 3 > m_01 = 1 and no k with m_0k < 1.
        let c = Parameter::new(2, int(0), &[rat(-3, 2)]).unwrap();
        assert!(!is_unitary(&lam, &c).unwrap().unitary);
    }
}
