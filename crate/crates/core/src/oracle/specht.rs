//! Rational seminormal model of the irreducible `G(r,1,n)`-module `S^λ`.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::cyc::{CycField, CycNumber};
use super::linalg::Matrix;
use crate::error::{Error, Result};
use crate::rational::{int, Rational};
use crate::shapes::{MultiPartition, StandardTableau};

#[derive(Clone, Debug)]
pub struct SpechtModel {
    shape: MultiPartition,
    tableaux: Vec<StandardTableau>,
    index: HashMap<Vec<usize>, usize>,
    /// `simple[i - 1]` is the matrix of `s_i`.
    simple: Vec<Matrix>,
    /// `transpositions[(i, j)]` for `1 <= i < j <= n`.
    transpositions: HashMap<(usize, usize), Matrix>,
    nu: Vec<Rational>,
    /// `beta[t][i - 1]`, `content[t][i - 1]` for the box holding `i`.
    beta: Vec<Vec<usize>>,
    content: Vec<Vec<i64>>,
}

impl SpechtModel {
    pub fn shape(&self) -> &MultiPartition {
        &self.shape
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    pub fn tableaux(&self) -> &[StandardTableau] {
        &self.tableaux
    }

    pub fn index_of(&self, t: &StandardTableau) -> Option<usize> {
        self.index.get(t.entries()).copied()
    }

    pub fn s(&self, i: usize) -> &Matrix {
        &self.simple[i - 1]
    }

    /// Matrix of the transposition `(i j)`.
    pub fn transposition(&self, i: usize, j: usize) -> &Matrix {
        let key = (i.min(j), i.max(j));
        &self.transpositions[&key]
    }

    /// Diagonal of the invariant form.
    pub fn nu(&self) -> &[Rational] {
        &self.nu
    }

    /// Component of the box holding `i` in tableau `t`.
    pub fn beta(&self, t: usize, i: usize) -> usize {
        self.beta[t][i - 1]
    }

    pub fn content(&self, t: usize, i: usize) -> i64 {
        self.content[t][i - 1]
    }

    /// Matrix of a permutation given in one-line notation `w[p - 1] = w(p)`.
    pub fn permutation(&self, w: &[usize]) -> Matrix {
        let mut pi = w.to_vec();
        let mut m = Matrix::identity(self.dim());
        while let Some(i) = (0..pi.len().saturating_sub(1)).find(|&i| pi[i] > pi[i + 1]) {
            pi.swap(i, i + 1);
            m = self.simple[i].mul(&m);
        }
        m
    }

    /// Diagonal of `ζ_i` as cyclotomic numbers.
    pub fn zeta_diagonal(&self, field: &Arc<CycField>, i: usize) -> Vec<CycNumber> {
        (0..self.dim()).map(|t| CycNumber::zeta_pow(field, self.beta(t, i) as i64)).collect()
    }

    fn check(&self) -> Result<()> {
        let n = self.n();
        let dim = self.dim();
        let id = Matrix::identity(dim);
        let fail = |what: &str| Err(Error::Internal(format!("Specht model: {what} fails")));
        for i in 1..n {
            let s = self.s(i);
            if s.mul(s) != id {
                return fail("s_i^2 = 1");
            }
            for j in i + 1..n {
                let t = self.s(j);
                let ok = if j == i + 1 { s.mul(t).mul(s) == t.mul(s).mul(t) } else { s.mul(t) == t.mul(s) };
                if !ok {
                    return fail("braid relation");
                }
            }
            for a in 0..dim {
                for b in 0..dim {
                    let sab = s.get(a, b);
                    if sab.is_zero() {
                        continue;
                    }
                    if sab * &self.nu[a] != s.get(b, a) * &self.nu[b] {
                        return fail("s_i self-adjointness");
                    }
                    let swapped = (1..=n).all(|k| {
                        let k2 = if k == i {
                            i + 1
                        } else if k == i + 1 {
                            i
                        } else {
                            k
                        };
                        self.beta(a, k) == self.beta(b, k2)
                    });
                    if !swapped {
                        return fail("s_i ζ_i s_i = ζ_{i+1}");
                    }
                }
            }
        }
        if self.nu.iter().any(|v| *v <= Rational::zero()) {
            return fail("positivity of ν");
        }
        let r = self.shape.r();
        let field = CycField::new(r);
        for i in 1..=n {
            let zi = self.zeta_diagonal(&field, i);
            let one = CycNumber::from_rational(&field, Rational::one());
            if zi.iter().any(|z| (0..r).fold(one.clone(), |acc, _| acc.mul(z)) != one) {
                return fail("ζ_i^r = 1");
            }
            // φ_i = Σ_{j<i} Σ_l ζ_i^l s_ij ζ_i^{-l}, evaluated over Q(ζ).
            for a in 0..dim {
                for b in 0..dim {
                    let mut acc = CycNumber::zero(&field);
                    for j in 1..i {
                        let sij = self.transposition(i, j).get(a, b);
                        if sij.is_zero() {
                            continue;
                        }
                        for l in 0..r as i64 {
                            let e = l * (self.beta(a, i) as i64 - self.beta(b, i) as i64);
                            acc = acc.add(&CycNumber::zeta_pow(&field, e).scale(sij));
                        }
                    }
                    let want = if a == b { int(r as i64 * self.content(a, i)) } else { Rational::zero() };
                    if acc != CycNumber::from_rational(&field, want) {
                        return fail("Jucys-Murphy eigenvalue");
                    }
                }
            }
        }
        Ok(())
    }
}

/// Builds and validates the seminormal model.
///
/// On a pair `T, T' = s_i T` with `i, i+1` in one component and `i` in a
/// higher row of `T`: `s_i v_T = ρ v_T + v_T'`, `s_i v_T' = -ρ v_T' + (1-ρ²) v_T`
/// with `ρ = 1/(ct(i+1) - ct(i))`; across components `s_i` swaps.
pub fn build_specht(shape: &MultiPartition) -> Result<SpechtModel> {
    let n = shape.n();
    let tableaux = shape.standard_tableaux();
    let dim = tableaux.len();
    let index: HashMap<Vec<usize>, usize> =
        tableaux.iter().enumerate().map(|(k, t)| (t.entries().to_vec(), k)).collect();
    let boxes = shape.boxes();
    let mut beta = Vec::with_capacity(dim);
    let mut content = Vec::with_capacity(dim);
    for t in &tableaux {
        let inv = t.inverse();
        beta.push(inv.iter().map(|&b| boxes[b].component).collect::<Vec<_>>());
        content.push(inv.iter().map(|&b| boxes[b].content()).collect::<Vec<_>>());
    }
    let mut simple = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let mut m = Matrix::zeros(dim, dim);
        for (k, t) in tableaux.iter().enumerate() {
            let inv = t.inverse();
            let (b, b2) = (&boxes[inv[i - 1]], &boxes[inv[i]]);
            let swapped: Vec<usize> = t
                .entries()
                .iter()
                .map(|&e| {
                    if e == i {
                        i + 1
                    } else if e == i + 1 {
                        i
                    } else {
                        e
                    }
                })
                .collect();
            if b.component != b2.component {
                m.set(index[&swapped], k, Rational::one());
                continue;
            }
            let rho = Rational::one() / int(b2.content() - b.content());
            match index.get(&swapped) {
                None => m.set(k, k, rho),
                Some(&k2) => {
                    m.set(k, k, rho.clone());
                    let off = if b.row < b2.row { Rational::one() } else { Rational::one() - &rho * &rho };
                    m.set(k2, k, off);
                }
            }
        }
        simple.push(m);
    }
    let nu = norms(dim, &simple);
    let mut model = SpechtModel {
        shape: shape.clone(),
        tableaux,
        index,
        simple,
        transpositions: HashMap::new(),
        nu,
        beta,
        content,
    };
    for i in 1..=n {
        for j in i + 1..=n {
            let mut w: Vec<usize> = (1..=n).collect();
            w.swap(i - 1, j - 1);
            let m = model.permutation(&w);
            model.transpositions.insert((i, j), m);
        }
    }
    model.check()?;
    Ok(model)
}

/// Norms by propagation from the first tableau: `ν_{T'} = c ν_T` whenever
/// `s_i v_T` has coefficient 1 on `v_T'` and `s_i v_T'` has `c` on `v_T`.
fn norms(dim: usize, simple: &[Matrix]) -> Vec<Rational> {
    let mut nu: Vec<Option<Rational>> = vec![None; dim];
    nu[0] = Some(Rational::one());
    let mut stack = vec![0];
    while let Some(k) = stack.pop() {
        let base = nu[k].clone().unwrap();
        for s in simple {
            for k2 in 0..dim {
                if k2 == k || s.get(k2, k).is_zero() || nu[k2].is_some() {
                    continue;
                }
                // Self-adjointness: s[k2][k] ν_k2 = s[k][k2] ν_k.
                nu[k2] = Some(s.get(k, k2) * &base / s.get(k2, k));
                stack.push(k2);
            }
        }
    }
    nu.into_iter().map(|v| v.unwrap_or_else(Rational::one)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn model(parts: &[&[usize]]) -> SpechtModel {
        build_specht(&MultiPartition::from_parts(parts).unwrap()).unwrap()
    }

    #[test]
    fn small_models() {
        let m = model(&[&[2]]);
        assert_eq!(m.dim(), 1);
        assert_eq!(*m.s(1).get(0, 0), int(1));
        let m = model(&[&[1, 1]]);
        assert_eq!(*m.s(1).get(0, 0), int(-1));
        let m = model(&[&[2, 1]]);
        assert_eq!(m.dim(), 2);
        let mut cts: Vec<i64> = (0..2).map(|t| m.content(t, 2)).collect();
        cts.sort();
        assert_eq!(cts, vec![-1, 1]);
    }

    #[test]
    fn larger_models_validate() {
        for shape in MultiPartition::all(4, 2).iter().chain(MultiPartition::all(3, 3).iter()) {
            let m = build_specht(shape).unwrap();
            assert_eq!(m.dim() as u128, shape.hook_count());
        }
        let m = model(&[&[3, 1]]);
        assert!(m.nu().iter().any(|v| *v != int(1)));
        assert!(m.nu().iter().all(|v| *v > rat(0, 1)));
    }
}
