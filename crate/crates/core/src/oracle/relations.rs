//! Exact verification of the defining relations on a truncated module.
//!
//! Vectors carry coefficients in `Q(ζ)`. Every root-of-unity factor is
//! produced by [`CycNumber`] arithmetic: `ζ_k` acts on a basis element by
//! `ζ^{key_k}`, and sums such as `Σ_l ζ_i^l s_ij ζ_i^{-l}` are evaluated
//! term by term before comparison.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use super::cyc::{CycField, CycNumber};
use super::module::TruncatedModule;
use crate::rational::{int, Rational};

type CVec = BTreeMap<usize, CycNumber>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationFailure {
    pub relation: String,
    pub degree: usize,
    pub basis_index: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelationReport {
    /// Number of (relation, basis vector) evaluations.
    pub checked: usize,
    pub failures: Vec<RelationFailure>,
}

impl RelationReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    /// Distinct relation names that failed.
    pub fn failed_relations(&self) -> Vec<String> {
        let mut v: Vec<String> = self.failures.iter().map(|f| f.relation.clone()).collect();
        v.sort();
        v.dedup();
        v
    }
}

struct Ops<'a> {
    tm: &'a TruncatedModule,
    field: Arc<CycField>,
    r: usize,
    /// `ζ^k`, `0 <= k < r`.
    zpow: Vec<CycNumber>,
    keys: Vec<Vec<Vec<usize>>>,
}

fn add_into(acc: &mut CVec, k: usize, v: CycNumber) {
    if v.is_zero() {
        return;
    }
    match acc.get_mut(&k) {
        Some(e) => {
            *e = e.add(&v);
            if e.is_zero() {
                acc.remove(&k);
            }
        }
        None => {
            acc.insert(k, v);
        }
    }
}

impl<'a> Ops<'a> {
    fn new(tm: &'a TruncatedModule, degrees: usize) -> Self {
        let r = tm.param().r();
        let field = CycField::new(r);
        let zpow: Vec<CycNumber> = (0..r as i64).map(|k| CycNumber::zeta_pow(&field, k)).collect();
        let keys = (0..=degrees).map(|d| (0..tm.dim(d)).map(|a| tm.torus_key(d, a)).collect()).collect();
        Ops { tm, field, r, zpow, keys }
    }

    fn m(&self, k: i64) -> usize {
        k.rem_euclid(self.r as i64) as usize
    }

    fn rat(&self, q: Rational) -> CycNumber {
        CycNumber::from_rational(&self.field, q)
    }

    fn basis(&self, a: usize) -> CVec {
        let mut v = CVec::new();
        v.insert(a, self.rat(int(1)));
        v
    }

    fn scale(&self, v: &CVec, s: &CycNumber) -> CVec {
        let mut out = CVec::new();
        for (k, x) in v {
            add_into(&mut out, *k, x.mul(s));
        }
        out
    }

    fn lin(&self, parts: &[(&CVec, CycNumber)]) -> CVec {
        let mut out = CVec::new();
        for (v, s) in parts {
            for (k, x) in v.iter() {
                add_into(&mut out, *k, x.mul(s));
            }
        }
        out
    }

    fn x(&self, i: usize, d: usize, v: &CVec) -> CVec {
        v.iter().map(|(a, x)| (self.tm.x_index(i, d, *a), x.clone())).collect()
    }

    fn y(&self, i: usize, d: usize, v: &CVec) -> CVec {
        let mut out = CVec::new();
        if d == 0 {
            return out;
        }
        let cols = self.tm.y_columns(i, d);
        for (a, x) in v {
            for (b, e) in &cols[*a] {
                add_into(&mut out, *b, x.scale(e));
            }
        }
        out
    }

    /// `ζ_k^e`.
    fn zeta(&self, k: usize, e: i64, d: usize, v: &CVec) -> CVec {
        v.iter().map(|(a, x)| (*a, x.mul_zeta(e * self.keys[d][*a][k - 1] as i64))).collect()
    }

    /// Transposition `s_ij` acting on `x^μ ⊗ v_T`.
    fn sij(&self, i: usize, j: usize, d: usize, v: &CVec) -> CVec {
        let sp = self.tm.specht();
        let mat = if i == j { None } else { Some(sp.transposition(i, j)) };
        let s = sp.dim();
        let mut out = CVec::new();
        for (a, x) in v {
            let (mu, t) = self.tm.element(d, *a);
            let Some(mat) = mat else {
                add_into(&mut out, *a, x.clone());
                continue;
            };
            let mut m2 = mu.to_vec();
            m2.swap(i - 1, j - 1);
            for u in 0..s {
                let e = mat.get(u, t);
                if !e.is_zero() {
                    add_into(&mut out, self.tm.index(&m2, u), x.scale(e));
                }
            }
        }
        out
    }

    fn s(&self, k: usize, d: usize, v: &CVec) -> CVec {
        self.sij(k, k + 1, d, v)
    }

    /// `Σ_l ζ^{l·shift} ζ_i^l s_ij ζ_i^{-l}`, summed literally over `l`.
    fn conj_sum(&self, i: usize, j: usize, shift: i64, d: usize, v: &CVec) -> CVec {
        let mut out = CVec::new();
        for l in 0..self.r as i64 {
            let w = self.zeta(i, -l, d, v);
            let w = self.sij(i, j, d, &w);
            let w = self.zeta(i, l, d, &w);
            for (k, x) in w {
                add_into(&mut out, k, x.mul(&self.zpow[self.m(l * shift)]));
            }
        }
        out
    }

    /// `e_il = (1/r) Σ_{l'} ζ^{-l l'} ζ_i^{l'}`.
    fn idempotent(&self, i: usize, l: i64, d: usize, v: &CVec) -> CVec {
        let mut out = CVec::new();
        let inv_r = Rational::new(1.into(), (self.r as i64).into());
        for lp in 0..self.r as i64 {
            let w = self.zeta(i, lp, d, v);
            let c = self.zpow[self.m(-l * lp)].scale(&inv_r);
            for (k, x) in w {
                add_into(&mut out, k, x.mul(&c));
            }
        }
        out
    }

    fn phi_jm(&self, i: usize, d: usize, v: &CVec) -> CVec {
        let mut out = CVec::new();
        for j in 1..i {
            for (k, x) in self.conj_sum(i, j, 0, d, v) {
                add_into(&mut out, k, x);
            }
        }
        out
    }

    /// `z_i = y_i x_i + c0 φ_i`, from the operators (needs `d < D`).
    fn z(&self, i: usize, d: usize, v: &CVec) -> CVec {
        let yx = self.y(i, d + 1, &self.x(i, d, v));
        let c0 = self.rat(self.tm.param().c0().clone());
        self.lin(&[(&yx, self.rat(int(1))), (&self.phi_jm(i, d, v), c0)])
    }

    fn z_stored(&self, i: usize, d: usize, v: &CVec) -> CVec {
        let cols = self.tm.z_columns(i, d);
        let mut out = CVec::new();
        for (a, x) in v {
            for (b, e) in &cols[*a] {
                add_into(&mut out, *b, x.scale(e));
            }
        }
        out
    }

    fn pi(&self, i: usize, d: usize, v: &CVec) -> CVec {
        let mut out = CVec::new();
        for l in 0..self.r as i64 {
            let w = self.zeta(i + 1, -l, d, v);
            for (k, x) in self.zeta(i, l, d, &w) {
                add_into(&mut out, k, x);
            }
        }
        out
    }
}

/// Checks every relation on every basis vector of the truncation:
/// the `y_i x_i` and `y_i x_j` commutation rules, `[x_i,x_j] = [y_i,y_j] = 0`,
/// `W`-equivariance of `x` and `y`, the group relations, agreement of the
/// stored `z_i` with `y_i x_i + c0 φ_i`, `z_i s_i = s_i z_{i+1} - c0 π_i`,
/// `z_i s_j = s_j z_i` for `j ∉ {i-1, i}`, and `[z_i, z_j] = 0`.
pub fn verify_relations(tm: &TruncatedModule) -> RelationReport {
    let top = tm.max_degree();
    let ops = Ops::new(tm, top);
    let n = tm.n();
    let r = ops.r;
    let param = tm.param();
    let c0 = ops.rat(param.c0().clone());
    let one = ops.rat(int(1));
    let minus = ops.rat(int(-1));
    let mut report = RelationReport::default();
    let check = |name: &str, d: usize, a: usize, v: CVec, report: &mut RelationReport| {
        report.checked += 1;
        if !v.is_empty() {
            report.failures.push(RelationFailure { relation: name.to_string(), degree: d, basis_index: a });
        }
    };
    let sum = |parts: &[(&CVec, &CycNumber)]| -> CVec {
        let owned: Vec<(&CVec, CycNumber)> = parts.iter().map(|(v, s)| (*v, (*s).clone())).collect();
        ops.lin(&owned)
    };
    for d in 0..=top {
        for a in 0..tm.dim(d) {
            let e = ops.basis(a);
            if d < top {
                for i in 1..=n {
                    let yx = ops.y(i, d + 1, &ops.x(i, d, &e));
                    let xy = if d == 0 { CVec::new() } else { ops.x(i, d - 1, &ops.y(i, d, &e)) };
                    let mut refl = CVec::new();
                    for j in (1..=n).filter(|&j| j != i) {
                        for (k, x) in ops.conj_sum(i, j, 0, d, &e) {
                            add_into(&mut refl, k, x);
                        }
                    }
                    let mut cyc = CVec::new();
                    for l in 0..r as i64 {
                        let coeff = ops.rat(param.d(l) - param.d(l - 1));
                        for (k, x) in ops.idempotent(i, l, d, &e) {
                            add_into(&mut cyc, k, x.mul(&coeff));
                        }
                    }
                    let rel = sum(&[(&yx, &one), (&xy, &minus), (&e, &minus), (&refl, &c0), (&cyc, &one)]);
                    check("y_i x_i", d, a, rel, &mut report);
                    for j in (1..=n).filter(|&j| j != i) {
                        let yx = ops.y(i, d + 1, &ops.x(j, d, &e));
                        let xy = if d == 0 { CVec::new() } else { ops.x(j, d - 1, &ops.y(i, d, &e)) };
                        let refl = ops.conj_sum(i, j, -1, d, &e);
                        let rel = sum(&[(&yx, &one), (&xy, &minus), (&refl, &c0.neg())]);
                        check("y_i x_j", d, a, rel, &mut report);
                        let xx = sum(&[
                            (&ops.x(i, d + 1, &ops.x(j, d, &e)), &one),
                            (&ops.x(j, d + 1, &ops.x(i, d, &e)), &minus),
                        ]);
                        check("x_i x_j", d, a, xx, &mut report);
                    }
                    let z_op = ops.z(i, d, &e);
                    let z_st = ops.z_stored(i, d, &e);
                    check("z_i = y_i x_i + c0 φ_i", d, a, sum(&[(&z_op, &one), (&z_st, &minus)]), &mut report);
                    // Stored z_i has just been matched against the operator
                    // on every basis vector, so products can use it.
                    for j in i + 1..=n {
                        let zz = sum(&[
                            (&ops.z_stored(i, d, &ops.z_stored(j, d, &e)), &one),
                            (&ops.z_stored(j, d, &ops.z_stored(i, d, &e)), &minus),
                        ]);
                        check("z_i z_j", d, a, zz, &mut report);
                    }
                    for k in 1..n {
                        let lhs = ops.z_stored(i, d, &ops.s(k, d, &e));
                        if k == i {
                            let rhs = ops.s(k, d, &ops.z_stored(i + 1, d, &e));
                            let pi = ops.pi(i, d, &e);
                            let rel = sum(&[(&lhs, &one), (&rhs, &minus), (&pi, &c0)]);
                            check("z_i s_i", d, a, rel, &mut report);
                        } else if k + 1 != i {
                            let rhs = ops.s(k, d, &ops.z_stored(i, d, &e));
                            check("z_i s_j", d, a, sum(&[(&lhs, &one), (&rhs, &minus)]), &mut report);
                        }
                    }
                    for k in 1..n {
                        let ki = if i == k {
                            k + 1
                        } else if i == k + 1 {
                            k
                        } else {
                            i
                        };
                        let lhs = ops.s(k, d + 1, &ops.x(i, d, &ops.s(k, d, &e)));
                        let rhs = ops.x(ki, d, &e);
                        check("s x s", d, a, sum(&[(&lhs, &one), (&rhs, &minus)]), &mut report);
                    }
                    for k in 1..=n {
                        let lhs = ops.zeta(k, 1, d + 1, &ops.x(i, d, &ops.zeta(k, -1, d, &e)));
                        let shift = if k == i { -1 } else { 0 };
                        let rhs = ops.scale(&ops.x(i, d, &e), &ops.zpow[ops.m(shift)]);
                        check("ζ x ζ^-1", d, a, sum(&[(&lhs, &one), (&rhs, &minus)]), &mut report);
                    }
                }
            }
            if d >= 1 {
                for i in 1..=n {
                    for k in 1..n {
                        let ki = if i == k {
                            k + 1
                        } else if i == k + 1 {
                            k
                        } else {
                            i
                        };
                        let lhs = ops.s(k, d - 1, &ops.y(i, d, &ops.s(k, d, &e)));
                        let rhs = ops.y(ki, d, &e);
                        check("s y s", d, a, sum(&[(&lhs, &one), (&rhs, &minus)]), &mut report);
                    }
                    for k in 1..=n {
                        let lhs = ops.zeta(k, 1, d - 1, &ops.y(i, d, &ops.zeta(k, -1, d, &e)));
                        let shift = if k == i { 1 } else { 0 };
                        let rhs = ops.scale(&ops.y(i, d, &e), &ops.zpow[ops.m(shift)]);
                        check("ζ y ζ^-1", d, a, sum(&[(&lhs, &one), (&rhs, &minus)]), &mut report);
                    }
                }
            }
            if d >= 2 {
                for i in 1..=n {
                    for j in i + 1..=n {
                        let a1 = ops.y(i, d - 1, &ops.y(j, d, &e));
                        let a2 = ops.y(j, d - 1, &ops.y(i, d, &e));
                        check("y_i y_j", d, a, sum(&[(&a1, &one), (&a2, &minus)]), &mut report);
                    }
                }
            }
            for k in 1..n {
                let ss = sum(&[(&ops.s(k, d, &ops.s(k, d, &e)), &one), (&e, &minus)]);
                check("s_k^2", d, a, ss, &mut report);
                if k + 1 < n {
                    let l = ops.s(k, d, &ops.s(k + 1, d, &ops.s(k, d, &e)));
                    let rr = ops.s(k + 1, d, &ops.s(k, d, &ops.s(k + 1, d, &e)));
                    check("braid", d, a, sum(&[(&l, &one), (&rr, &minus)]), &mut report);
                }
            }
            for k in 1..=n {
                let mut w = e.clone();
                for _ in 0..r {
                    w = ops.zeta(k, 1, d, &w);
                }
                check("ζ_k^r", d, a, sum(&[(&w, &one), (&e, &minus)]), &mut report);
            }
        }
    }
    report
}
