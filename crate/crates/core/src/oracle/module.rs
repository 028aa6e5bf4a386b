//! Degree-truncated standard module `Δ_c(λ)` with exact operator matrices,
//! Gram matrices of the contravariant form, and the checks built on them.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use super::linalg::{symmetric_inertia, Inertia, Matrix};
use super::specht::{build_specht, SpechtModel};
use crate::error::{Error, Result};
use crate::gamma::{mu_t_to_pq, pq_to_mu_t, w_mu, weight_of, NearFold, PQPair};
use crate::params::Parameter;
use crate::rational::{int, residue, Rational};
use crate::shapes::MultiPartition;

/// Sparse column: `(basis index, coefficient)`, sorted by index, no zeros.
pub type Sparse = Vec<(usize, Rational)>;

/// A deliberate sign error in one term of the Dunkl operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mutation {
    /// `∂_i` enters with the wrong sign.
    DerivativeSign,
    /// The cyclic `d`-term enters with the wrong sign.
    CyclicSign,
    /// The `s_ij` divided differences enter with the wrong sign.
    ReflectionSign,
}

impl Mutation {
    pub const ALL: [Mutation; 3] = [Mutation::DerivativeSign, Mutation::CyclicSign, Mutation::ReflectionSign];
}

#[derive(Clone, Debug)]
pub struct OracleOptions {
    pub mutation: Option<Mutation>,
    /// Refuse truncations whose total basis size exceeds this.
    pub max_basis: usize,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions { mutation: None, max_basis: 20_000 }
    }
}

/// Exponent vectors of one degree.
#[derive(Clone, Debug)]
pub struct DegreeBasis {
    mus: Vec<Vec<u64>>,
    index: HashMap<Vec<u64>, usize>,
}

impl DegreeBasis {
    fn new(n: usize, d: u64) -> Self {
        let mut mus = Vec::new();
        let mut cur = vec![0u64; n];
        fn go(k: usize, left: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
            if k + 1 == cur.len() {
                cur[k] = left;
                out.push(cur.clone());
                return;
            }
            for v in (0..=left).rev() {
                cur[k] = v;
                go(k + 1, left - v, cur, out);
            }
        }
        if n > 0 {
            go(0, d, &mut cur, &mut mus);
        }
        let index = mus.iter().enumerate().map(|(k, m)| (m.clone(), k)).collect();
        DegreeBasis { mus, index }
    }

    pub fn monomials(&self) -> &[Vec<u64>] {
        &self.mus
    }
}

fn push(acc: &mut BTreeMap<usize, Rational>, k: usize, v: Rational) {
    if v.is_zero() {
        return;
    }
    let e = acc.entry(k).or_insert_with(Rational::zero);
    *e += v;
}

fn finish(acc: BTreeMap<usize, Rational>) -> Sparse {
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// Per-degree rank data of the Gram matrix, one entry per torus block.
#[derive(Clone, Debug)]
pub struct DegreeForm {
    pub blocks: Vec<Vec<usize>>,
    pub inertia: Vec<Inertia>,
}

impl DegreeForm {
    pub fn rank(&self) -> usize {
        self.inertia.iter().map(Inertia::rank).sum()
    }

    pub fn negative(&self) -> usize {
        self.inertia.iter().map(|i| i.negative).sum()
    }
}

#[derive(Clone, Debug)]
pub struct TruncatedModule {
    param: Parameter,
    specht: SpechtModel,
    max_degree: usize,
    options: OracleOptions,
    bases: Vec<DegreeBasis>,
    /// `y[d][i - 1][col]`: `y_i` on degree `d` (empty for `d = 0`).
    y: Vec<Vec<Vec<Sparse>>>,
    /// `z[d][i - 1][col]`.
    z: Vec<Vec<Vec<Sparse>>>,
    gram: Vec<Matrix>,
    forms: Vec<DegreeForm>,
}

/// `build_truncation` with default options.
pub fn build_truncation(shape: &MultiPartition, c: &Parameter, max_degree: usize) -> Result<TruncatedModule> {
    TruncatedModule::build(shape, c, max_degree, OracleOptions::default())
}

impl TruncatedModule {
    pub fn build(shape: &MultiPartition, c: &Parameter, max_degree: usize, options: OracleOptions) -> Result<Self> {
        if shape.r() != c.r() {
            return Err(Error::InvalidParameter("shape and parameter disagree on r".into()));
        }
        let specht = build_specht(shape)?;
        let n = shape.n();
        let bases: Vec<DegreeBasis> = (0..=max_degree + 1).map(|d| DegreeBasis::new(n, d as u64)).collect();
        let total: usize = bases.iter().take(max_degree + 1).map(|b| b.mus.len() * specht.dim()).sum();
        if total > options.max_basis {
            return Err(Error::Precondition(format!(
                "truncation basis has {total} elements, above the cap {}",
                options.max_basis
            )));
        }
        let mut tm = TruncatedModule {
            param: c.clone(),
            specht,
            max_degree,
            options,
            bases,
            y: Vec::new(),
            z: Vec::new(),
            gram: Vec::new(),
            forms: Vec::new(),
        };
        for d in 0..=max_degree {
            let cols: Vec<Vec<Sparse>> = (1..=n)
                .map(|i| (0..tm.dim(d)).map(|a| if d == 0 { Vec::new() } else { tm.dunkl_basis(i, d, a) }).collect())
                .collect();
            tm.y.push(cols);
        }
        for d in 0..=max_degree {
            let cols: Vec<Vec<Sparse>> =
                (1..=n).map(|i| (0..tm.dim(d)).map(|a| tm.z_column(i, d, a)).collect()).collect();
            tm.z.push(cols);
        }
        for d in 0..=max_degree {
            let g = tm.compute_gram(d);
            if !g.is_symmetric() {
                return Err(Error::Internal(format!("Gram matrix in degree {d} is not symmetric")));
            }
            tm.gram.push(g);
            let blocks = tm.blocks(d);
            let inertia = blocks
                .iter()
                .map(|b| {
                    let mut i = symmetric_inertia(&tm.gram[d].submatrix(b, b));
                    i.pivots = i.pivots.iter().map(|&p| b[p]).collect();
                    i
                })
                .collect();
            tm.forms.push(DegreeForm { blocks, inertia });
        }
        Ok(tm)
    }

    pub fn param(&self) -> &Parameter {
        &self.param
    }

    pub fn specht(&self) -> &SpechtModel {
        &self.specht
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn n(&self) -> usize {
        self.specht.n()
    }

    pub fn options(&self) -> &OracleOptions {
        &self.options
    }

    /// Size of the degree-`d` basis `x^μ ⊗ v_T`.
    pub fn dim(&self, d: usize) -> usize {
        self.bases[d].mus.len() * self.specht.dim()
    }

    /// `(μ, tableau index)` of a basis element.
    pub fn element(&self, d: usize, a: usize) -> (&[u64], usize) {
        let s = self.specht.dim();
        (&self.bases[d].mus[a / s], a % s)
    }

    pub fn index(&self, mu: &[u64], t: usize) -> usize {
        let d: u64 = mu.iter().sum();
        self.bases[d as usize].index[mu] * self.specht.dim() + t
    }

    /// Exponents of `ζ` for `ζ_1, .., ζ_n` on a basis element.
    pub fn torus_key(&self, d: usize, a: usize) -> Vec<usize> {
        let (mu, t) = self.element(d, a);
        let r = self.param.r();
        (1..=self.n()).map(|k| residue(self.specht.beta(t, k) as i64 - mu[k - 1] as i64, r)).collect()
    }

    /// Basis indices grouped by torus key; the form and every `z_i` preserve each group.
    pub fn blocks(&self, d: usize) -> Vec<Vec<usize>> {
        let mut map: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for a in 0..self.dim(d) {
            map.entry(self.torus_key(d, a)).or_default().push(a);
        }
        map.into_values().collect()
    }

    /// `y_i (x^μ ⊗ v_T)` in the degree-`|μ|-1` basis (requires `|μ| <= D + 1`).
    pub fn dunkl(&self, i: usize, mu: &[u64], t: usize) -> Sparse {
        let p = mu[i - 1];
        let r = self.param.r() as i64;
        let c0 = self.param.c0();
        let bi = self.specht.beta(t, i) as i64;
        let mutation = self.options.mutation;
        let mut acc = BTreeMap::new();
        if p > 0 {
            let mut deriv = int(p as i64);
            let mut cyc = self.param.linear(bi, bi - p as i64, 0);
            if mutation == Some(Mutation::DerivativeSign) {
                deriv = -deriv;
            }
            if mutation == Some(Mutation::CyclicSign) {
                cyc = -cyc;
            }
            let mut m2 = mu.to_vec();
            m2[i - 1] -= 1;
            push(&mut acc, self.index(&m2, t), deriv - cyc);
        }
        if c0.is_zero() {
            return finish(acc);
        }
        for j in (1..=self.n()).filter(|&j| j != i) {
            let q = mu[j - 1];
            if p == q {
                continue;
            }
            let bj = self.specht.beta(t, j) as i64;
            let (hi, lo) = (p.max(q), p.min(q));
            let mut coeff = int(r) * c0;
            if p > q {
                coeff = -coeff;
            }
            if mutation == Some(Mutation::ReflectionSign) {
                coeff = -coeff;
            }
            let sij = self.specht.transposition(i, j);
            for step in 0..hi - lo {
                let new_j = lo + step;
                if residue(new_j as i64 - q as i64 - (bi - bj), r as usize) != 0 {
                    continue;
                }
                let mut m2 = mu.to_vec();
                m2[i - 1] = hi - 1 - step;
                m2[j - 1] = new_j;
                for s in 0..self.specht.dim() {
                    let e = sij.get(s, t);
                    if !e.is_zero() {
                        push(&mut acc, self.index(&m2, s), &coeff * e);
                    }
                }
            }
        }
        finish(acc)
    }

    fn dunkl_basis(&self, i: usize, d: usize, a: usize) -> Sparse {
        let (mu, t) = self.element(d, a);
        let mu = mu.to_vec();
        self.dunkl(i, &mu, t)
    }

    /// `φ_i (x^μ ⊗ v_T) = r Σ_{j<i, μ_i-β_i ≡ μ_j-β_j} x^{s_ij μ} ⊗ s_ij v_T`.
    pub fn jucys_murphy(&self, i: usize, mu: &[u64], t: usize) -> Sparse {
        let r = self.param.r();
        let mut acc = BTreeMap::new();
        let key = |k: usize| residue(mu[k - 1] as i64 - self.specht.beta(t, k) as i64, r);
        for j in 1..i {
            if key(i) != key(j) {
                continue;
            }
            let mut m2 = mu.to_vec();
            m2.swap(i - 1, j - 1);
            let sij = self.specht.transposition(i, j);
            for s in 0..self.specht.dim() {
                let e = sij.get(s, t);
                if !e.is_zero() {
                    push(&mut acc, self.index(&m2, s), int(r as i64) * e);
                }
            }
        }
        finish(acc)
    }

    fn z_column(&self, i: usize, d: usize, a: usize) -> Sparse {
        let (mu, t) = self.element(d, a);
        let mut up = mu.to_vec();
        up[i - 1] += 1;
        let mut acc: BTreeMap<usize, Rational> = self.dunkl(i, &up, t).into_iter().collect();
        let c0 = self.param.c0().clone();
        if !c0.is_zero() {
            for (k, v) in self.jucys_murphy(i, mu, t) {
                push(&mut acc, k, v * &c0);
            }
        }
        finish(acc)
    }

    /// Sparse columns of `y_i` on degree `d` (`d >= 1`).
    pub fn y_columns(&self, i: usize, d: usize) -> &[Sparse] {
        &self.y[d][i - 1]
    }

    /// Sparse columns of `z_i` on degree `d`.
    pub fn z_columns(&self, i: usize, d: usize) -> &[Sparse] {
        &self.z[d][i - 1]
    }

    /// Dense matrix of `z_i` on degree `d`.
    pub fn z_matrix(&self, i: usize, d: usize) -> Matrix {
        dense(self.z_columns(i, d), self.dim(d))
    }

    /// Dense matrix of `y_i: degree d -> d-1`.
    pub fn y_matrix(&self, i: usize, d: usize) -> Matrix {
        dense(self.y_columns(i, d), self.dim(d - 1))
    }

    /// Index of `x_i · (basis element a)` in degree `d + 1`.
    pub fn x_index(&self, i: usize, d: usize, a: usize) -> usize {
        let (mu, t) = self.element(d, a);
        let mut m2 = mu.to_vec();
        m2[i - 1] += 1;
        self.index(&m2, t)
    }

    /// `s_k` on a basis element.
    pub fn s_apply(&self, k: usize, d: usize, a: usize) -> Sparse {
        let (mu, t) = self.element(d, a);
        let mut m2 = mu.to_vec();
        m2.swap(k - 1, k);
        let s = self.specht.s(k);
        (0..self.specht.dim())
            .filter(|&u| !s.get(u, t).is_zero())
            .map(|u| (self.index(&m2, u), s.get(u, t).clone()))
            .collect()
    }

    fn compute_gram(&self, d: usize) -> Matrix {
        let n = self.dim(d);
        let mut g = Matrix::zeros(n, n);
        if d == 0 {
            for a in 0..n {
                g.set(a, a, self.specht.nu()[a].clone());
            }
            return g;
        }
        let prev = &self.gram[d - 1];
        for block in self.blocks(d) {
            for &a in &block {
                let (mu, s) = self.element(d, a);
                let i = mu.iter().position(|&m| m > 0).unwrap() + 1;
                let mut m2 = mu.to_vec();
                m2[i - 1] -= 1;
                let a2 = self.index(&m2, s);
                for &b in &block {
                    let mut v = Rational::zero();
                    for (k, y) in &self.y[d][i - 1][b] {
                        let gk = prev.get(a2, *k);
                        if !gk.is_zero() {
                            v += gk * y;
                        }
                    }
                    g.set(a, b, v);
                }
            }
        }
        g
    }

    /// Gram matrix `⟨x^μ v_S, x^ν v_T⟩` of degree `d`.
    pub fn gram(&self, d: usize) -> &Matrix {
        &self.gram[d]
    }

    pub fn form(&self, d: usize) -> &DegreeForm {
        &self.forms[d]
    }

    /// `(rank, corank)` of the Gram matrix per degree; rank is `dim L_d`.
    pub fn radical_and_l(&self) -> Vec<(usize, usize)> {
        (0..=self.max_degree).map(|d| (self.forms[d].rank(), self.dim(d) - self.forms[d].rank())).collect()
    }

    /// Least degree whose Gram matrix has a negative direction.
    pub fn first_negative_degree(&self) -> Option<usize> {
        (0..=self.max_degree).find(|&d| self.forms[d].negative() > 0)
    }

    /// Positive semidefiniteness in every degree `<= upto`.
    pub fn check_positive(&self, upto: usize) -> bool {
        self.first_negative_degree().is_none_or(|d| d > upto)
    }

    /// Matrix of `z_i` on `L_d`, per torus block, in the basis of pivot images.
    pub fn z_on_l(&self, i: usize, d: usize) -> Result<Vec<Matrix>> {
        let g = &self.gram[d];
        let cols = &self.z[d][i - 1];
        let mut out = Vec::new();
        for inertia in &self.forms[d].inertia {
            let s = &inertia.pivots;
            if s.is_empty() {
                continue;
            }
            let gss = g.submatrix(s, s);
            let mut gz = Matrix::zeros(s.len(), s.len());
            for (col, &b) in s.iter().enumerate() {
                for (row, &a) in s.iter().enumerate() {
                    let mut v = Rational::zero();
                    for (k, zk) in &cols[b] {
                        let gk = g.get(a, *k);
                        if !gk.is_zero() {
                            v += gk * zk;
                        }
                    }
                    gz.set(row, col, v);
                }
            }
            let inv = gss.inverse().ok_or_else(|| Error::Internal("pivot block is singular".into()))?;
            out.push(inv.mul(&gz));
        }
        Ok(out)
    }

    /// Least degree in which some `z_i` acts on `L_d` with a Jordan block.
    pub fn first_jordan_degree(&self) -> Result<Option<usize>> {
        for d in 0..=self.max_degree {
            for i in 1..=self.n() {
                if self.z_on_l(i, d)?.iter().any(|m| !m.is_diagonalizable()) {
                    return Ok(Some(d));
                }
            }
        }
        Ok(None)
    }

    /// False iff some `z_i` has a non-trivial Jordan block on `L_d`, `d <= upto`.
    pub fn check_diag_truncation(&self, upto: usize) -> Result<bool> {
        Ok(self.first_jordan_degree()?.is_none_or(|d| d > upto))
    }

    /// `dim (L_d)^W` as the rank of the form on `W`-invariants of `Δ_d`.
    pub fn invariant_ranks(&self) -> Vec<usize> {
        (0..=self.max_degree)
            .map(|d| {
                let block: Vec<usize> =
                    (0..self.dim(d)).filter(|&a| self.torus_key(d, a).iter().all(|&k| k == 0)).collect();
                if block.is_empty() {
                    return 0;
                }
                let pos: HashMap<usize, usize> = block.iter().enumerate().map(|(k, &a)| (a, k)).collect();
                let m = block.len();
                let mut rows = Vec::new();
                for k in 1..self.n() {
                    let mut sk = Matrix::zeros(m, m);
                    for (col, &a) in block.iter().enumerate() {
                        for (b, v) in self.s_apply(k, d, a) {
                            sk.set(pos[&b], col, v);
                        }
                    }
                    let sk = sk.shift(&Rational::one());
                    rows.extend(sk.to_rows());
                }
                let basis =
                    if rows.is_empty() { Matrix::identity(m).to_rows() } else { Matrix::from_rows(rows).kernel() };
                if basis.is_empty() {
                    return 0;
                }
                let b = Matrix::from_rows(basis).transpose();
                let g = self.gram[d].submatrix(&block, &block);
                b.transpose().mul(&g).mul(&b).rank()
            })
            .collect()
    }

    /// Change of basis to `x^μ ⊗ w_μ^{-1} v_T` within one degree.
    fn triangular_frame(&self, d: usize) -> (Vec<Matrix>, Vec<Matrix>) {
        let mut fwd = Vec::new();
        let mut inv = Vec::new();
        for mu in &self.bases[d].mus {
            let w = w_mu(mu);
            let mut winv = vec![0; w.len()];
            for (p, &v) in w.iter().enumerate() {
                winv[v - 1] = p + 1;
            }
            let c = self.specht.permutation(&winv);
            inv.push(c.inverse().expect("permutation matrices are invertible"));
            fwd.push(c);
        }
        (fwd, inv)
    }

    /// `z_i` on degree `d` in the basis `x^μ ⊗ w_μ^{-1} v_T`.
    pub fn z_triangular(&self, i: usize, d: usize) -> Matrix {
        let (fwd, inv) = self.triangular_frame(d);
        let z = self.z_matrix(i, d);
        let n = self.dim(d);
        let s = self.specht.dim();
        let mut c = Matrix::zeros(n, n);
        let mut cinv = Matrix::zeros(n, n);
        for (m, (f, g)) in fwd.iter().zip(&inv).enumerate() {
            for a in 0..s {
                for b in 0..s {
                    c.set(m * s + a, m * s + b, f.get(a, b).clone());
                    cinv.set(m * s + a, m * s + b, g.get(a, b).clone());
                }
            }
        }
        cinv.mul(&z).mul(&c)
    }

    /// Checks that every `z_i` is triangular for the dominance-then-Bruhat
    /// order with diagonal equal to the combinatorial weights.
    pub fn check_triangularity(&self) -> std::result::Result<(), String> {
        let s = self.specht.dim();
        let shape = self.specht.shape();
        for d in 0..=self.max_degree {
            let mus = &self.bases[d].mus;
            let (fwd, _) = self.triangular_frame(d);
            for i in 1..=self.n() {
                let z = self.z_triangular(i, d);
                for col in 0..self.dim(d) {
                    let (mu, t) = (&mus[col / s], col % s);
                    let pq = mu_t_to_pq(mu, &self.specht.tableaux()[t]);
                    let wt = &weight_of(&pq, shape, &self.param)[i - 1];
                    if z.get(col, col) != &wt.z {
                        return Err(format!("z_{i} diagonal at degree {d}, μ={mu:?}, T#{t}"));
                    }
                    for u in 0..s {
                        if fwd[col / s].get(u, t).is_zero() {
                            continue;
                        }
                        let key = self.torus_key(d, (col / s) * s + u);
                        if key[i - 1] != wt.zeta {
                            return Err(format!("ζ_{i} eigenvalue at degree {d}, μ={mu:?}"));
                        }
                    }
                    for row in (0..self.dim(d)).filter(|&row| row != col) {
                        if z.get(row, col).is_zero() {
                            continue;
                        }
                        if !monomial_less(&mus[row / s], mu) {
                            return Err(format!(
                                "z_{i} entry above the order at degree {d}: {:?} vs {mu:?}",
                                mus[row / s]
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The joint `t`-eigenvector `x^μ v_T^μ + lower terms` for `pq`, in the
    /// standard basis of degree `ΣQ`.
    pub fn jack_vector(&self, pq: &PQPair) -> Result<Vec<Rational>> {
        let d = pq.degree() as usize;
        if d > self.max_degree {
            return Err(Error::Precondition(format!("degree {d} exceeds the truncation")));
        }
        let shape = self.specht.shape();
        let (mu, t) = pq_to_mu_t(pq);
        let t_idx = self
            .specht
            .index_of(&t)
            .ok_or_else(|| Error::InvalidParameter("tableau does not match the shape".into()))?;
        let s = self.specht.dim();
        let lead = self.bases[d].index[&mu] * s + t_idx;
        let weights = weight_of(pq, shape, &self.param);
        let mus = &self.bases[d].mus;
        let lower: Vec<usize> = (0..self.dim(d)).filter(|&a| monomial_less(&mus[a / s], &mu)).collect();
        let n = self.n();
        let zs: Vec<Matrix> = (1..=n).map(|i| self.z_triangular(i, d)).collect();
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for (i, z) in zs.iter().enumerate() {
            let shifted = z.shift(&weights[i].z);
            for row in 0..self.dim(d) {
                rows.push(lower.iter().map(|&u| shifted.get(row, u).clone()).collect::<Vec<_>>());
                rhs.push(-shifted.get(row, lead).clone());
            }
        }
        let sol = if lower.is_empty() {
            if rhs.iter().any(|v| !v.is_zero()) {
                None
            } else {
                Some(Vec::new())
            }
        } else {
            Matrix::from_rows(rows).solve_unique(&rhs)
        };
        let sol = sol.ok_or_else(|| {
            let w: Vec<String> = weights.iter().map(|w| crate::rational::format_rational(&w.z)).collect();
            Error::Oracle(format!("no unique eigenvector for weight ({})", w.join(",")))
        })?;
        let mut tri = vec![Rational::zero(); self.dim(d)];
        tri[lead] = Rational::one();
        for (k, &u) in lower.iter().enumerate() {
            tri[u] = sol[k].clone();
        }
        let (fwd, _) = self.triangular_frame(d);
        let mut out = vec![Rational::zero(); self.dim(d)];
        for (a, v) in tri.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let (m, tt) = (a / s, a % s);
            for u in 0..s {
                let e = fwd[m].get(u, tt);
                if !e.is_zero() {
                    out[m * s + u] += v * e;
                }
            }
        }
        Ok(out)
    }

    /// Applies sparse columns to a dense vector.
    pub fn apply(cols: &[Sparse], v: &[Rational], out_dim: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); out_dim];
        for (b, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (k, e) in &cols[b] {
                out[*k] += x * e;
            }
        }
        out
    }

    /// `s_k` on a dense vector of degree `d`.
    pub fn apply_s(&self, k: usize, d: usize, v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim(d)];
        for (a, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, e) in self.s_apply(k, d, a) {
                out[b] += x * &e;
            }
        }
        out
    }

    /// Exhibits the Jordan block of a folded weight: `f1 = f_{image}`,
    /// `f2 = s_i f1`, `(z_i - α) f2 = -r c0 f1` and `(z_{i+1} - α) f2 = r c0 f1`.
    pub fn fold_witness(&self, nf: &NearFold) -> Result<FoldWitness> {
        let d = nf.degree() as usize;
        let i = nf.fold_at;
        let f1 = self.jack_vector(&nf.image)?;
        let weights = weight_of(&nf.image, self.specht.shape(), &self.param);
        let alpha = weights[i - 1].z.clone();
        let f2 = self.apply_s(i, d, &f1);
        let dim = self.dim(d);
        let rc0 = int(self.param.r() as i64) * self.param.c0();
        let sub = |a: &[Rational], b: &[Rational], s: &Rational| -> Vec<Rational> {
            a.iter().zip(b).map(|(x, y)| x - y * s).collect()
        };
        let z_i = |k: usize, v: &[Rational]| Self::apply(self.z_columns(k, d), v, dim);
        let ok1 = sub(&z_i(i, &f1), &f1, &alpha).iter().all(Zero::is_zero)
            && sub(&z_i(i + 1, &f1), &f1, &alpha).iter().all(Zero::is_zero);
        let lhs = sub(&z_i(i, &f2), &f2, &alpha);
        let ok2 = lhs.iter().zip(&f1).all(|(a, b)| *a == -(b * &rc0));
        let lhs2 = sub(&z_i(i + 1, &f2), &f2, &alpha);
        let ok3 = lhs2.iter().zip(&f1).all(|(a, b)| *a == b * &rc0);
        let nonzero_in_l = self.gram[d].mul_vec(&f2).iter().any(|v| !v.is_zero());
        if !(ok1 && ok2 && ok3) {
            return Err(Error::Oracle(format!("fold identities fail at position {i}, degree {d}")));
        }
        Ok(FoldWitness { position: i, degree: d, alpha, f1, f2, nonzero_in_l })
    }
}

/// Jordan-block witness produced by [`TruncatedModule::fold_witness`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldWitness {
    pub position: usize,
    pub degree: usize,
    pub alpha: Rational,
    pub f1: Vec<Rational>,
    pub f2: Vec<Rational>,
    /// `f2` is not in the radical of the form.
    pub nonzero_in_l: bool,
}

fn dense(cols: &[Sparse], rows: usize) -> Matrix {
    let mut m = Matrix::zeros(rows, cols.len());
    for (b, col) in cols.iter().enumerate() {
        for (a, v) in col {
            m.set(*a, b, v.clone());
        }
    }
    m
}

/// Strict order on exponent vectors: dominance of the sorted rearrangements,
/// then Bruhat order of `w_μ`.
pub fn monomial_less(nu: &[u64], mu: &[u64]) -> bool {
    let sorted = |v: &[u64]| {
        let mut s = v.to_vec();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    };
    let (a, b) = (sorted(nu), sorted(mu));
    if a != b {
        let mut sa = 0;
        let mut sb = 0;
        for (x, y) in a.iter().zip(&b) {
            sa += x;
            sb += y;
            if sa > sb {
                return false;
            }
        }
        return sa == sb;
    }
    let (u, v) = (w_mu(nu), w_mu(mu));
    u != v && bruhat_leq(&u, &v)
}

/// Bruhat order on permutations in one-line notation (tableau criterion).
pub fn bruhat_leq(u: &[usize], v: &[usize]) -> bool {
    (1..=u.len()).all(|k| {
        let mut a = u[..k].to_vec();
        let mut b = v[..k].to_vec();
        a.sort_unstable();
        b.sort_unstable();
        a.iter().zip(&b).all(|(x, y)| x <= y)
    })
}
