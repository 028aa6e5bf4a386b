//! Dense exact linear algebra over the rationals.

use num_traits::{One, Zero};

use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let data: Vec<Rational> = rows.into_iter().flatten().collect();
        assert_eq!(data.len(), r * c, "ragged rows");
        Matrix { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.set(a, b, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        *out.at_mut(i, j) += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut s = Rational::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        s += a * b;
                    }
                }
                s
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        let data = self.data.iter().map(|a| a * s).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// `self - s·I`.
    pub fn shift(&self, s: &Rational) -> Matrix {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            *m.at_mut(i, i) -= s;
        }
        m
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&i| !m.get(i, col).is_zero()) else {
                continue;
            };
            m.swap_rows(p, row);
            let inv = m.get(row, col).recip();
            for j in col..m.cols {
                let v = m.get(row, j) * &inv;
                m.set(row, j, v);
            }
            for i in 0..m.rows {
                if i == row || m.get(i, col).is_zero() {
                    continue;
                }
                let f = m.get(i, col).clone();
                for j in col..m.cols {
                    let v = m.get(row, j) * &f;
                    if !v.is_zero() {
                        *m.at_mut(i, j) -= v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of the right null space, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let (m, pivots) = self.rref();
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -m.get(row, free).clone();
            }
            out.push(v);
        }
        out
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Rational::one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        let rows: Vec<usize> = (0..n).collect();
        Some(r.submatrix(&rows, &cols))
    }

    /// The unique solution of `self · x = b`, if there is exactly one.
    pub fn solve_unique(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        let n = self.cols;
        let mut aug = Matrix::zeros(self.rows, n + 1);
        for i in 0..self.rows {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(k, &p)| p != k) {
            return None;
        }
        Some((0..n).map(|k| r.get(k, n).clone()).collect())
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

    /// Characteristic polynomial, coefficients from degree 0 up (monic),
    /// via Hessenberg reduction.
    pub fn charpoly(&self) -> Poly {
        assert!(self.is_square());
        let n = self.rows;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !h.get(i, m - 1).is_zero()) else {
                continue;
            };
            h.swap_rows(i, m);
            h.swap_cols(i, m);
            let piv = h.get(m, m - 1).clone();
            for k in m + 1..n {
                if h.get(k, m - 1).is_zero() {
                    continue;
                }
                let u = h.get(k, m - 1) / &piv;
                for j in 0..n {
                    let v = h.get(m, j) * &u;
                    if !v.is_zero() {
                        *h.at_mut(k, j) -= v;
                    }
                }
                for j in 0..n {
                    let v = h.get(j, k) * &u;
                    if !v.is_zero() {
                        *h.at_mut(j, m) += v;
                    }
                }
            }
        }
        let mut polys: Vec<Poly> = vec![vec![Rational::one()]];
        for m in 0..n {
            let mut p = poly_mul(&polys[m], &[-h.get(m, m).clone(), Rational::one()]);
            let mut prod = Rational::one();
            for i in (0..m).rev() {
                prod *= h.get(i + 1, i);
                if prod.is_zero() {
                    break;
                }
                let coeff = h.get(i, m) * &prod;
                if coeff.is_zero() {
                    continue;
                }
                let term = poly_scale(&polys[i], &coeff);
                p = poly_sub(&p, &term);
            }
            polys.push(p);
        }
        polys.pop().unwrap()
    }

    /// `p(self)` by Horner.
    pub fn eval_poly(&self, p: &Poly) -> Matrix {
        let n = self.rows;
        let mut acc = Matrix::zeros(n, n);
        for c in p.iter().rev() {
            acc = acc.mul(self);
            for i in 0..n {
                *acc.at_mut(i, i) += c;
            }
        }
        acc
    }

    /// True iff the minimal polynomial is squarefree.
    pub fn is_diagonalizable(&self) -> bool {
        if self.rows <= 1 {
            return true;
        }
        let p = self.charpoly();
        let g = poly_gcd(&p, &poly_derivative(&p));
        if g.len() <= 1 {
            return true;
        }
        let (s, _) = poly_divrem(&p, &g);
        self.eval_poly(&s).is_zero()
    }
}

/// Dense polynomial, coefficient of `t^k` at index `k`, no trailing zeros.
pub type Poly = Vec<Rational>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub fn poly_mul(a: &[Rational], b: &[Rational]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub fn poly_scale(a: &[Rational], s: &Rational) -> Poly {
    trim(a.iter().map(|x| x * s).collect())
}

pub fn poly_sub(a: &[Rational], b: &[Rational]) -> Poly {
    let n = a.len().max(b.len());
    let z = Rational::zero();
    trim((0..n).map(|k| a.get(k).unwrap_or(&z) - b.get(k).unwrap_or(&z)).collect())
}

pub fn poly_derivative(a: &[Rational]) -> Poly {
    trim(a.iter().enumerate().skip(1).map(|(k, x)| x * Rational::from_integer(k.into())).collect())
}

/// Quotient and remainder; `b` must be non-zero.
pub fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Poly, Poly) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut rem = trim(a.to_vec());
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead = b.last().unwrap().clone();
    let mut quot = vec![Rational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let f = rem.last().unwrap() / &lead;
        for (k, y) in b.iter().enumerate() {
            rem[shift + k] -= &f * y;
        }
        quot[shift] = f;
        rem.pop();
        rem = trim(rem);
    }
    (trim(quot), rem)
}

/// Monic gcd.
pub fn poly_gcd(a: &[Rational], b: &[Rational]) -> Poly {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let (_, r) = poly_divrem(&x, &y);
        x = y;
        y = r;
    }
    match x.last() {
        Some(l) => {
            let inv = l.recip();
            poly_scale(&x, &inv)
        }
        None => x,
    }
}

/// Result of symmetric elimination.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
    /// Indices of the pivot rows; the principal submatrix on them is
    /// non-singular and its size is the rank.
    pub pivots: Vec<usize>,
    /// One sign per pivot step (`+1`, `-1`; a 2x2 step records `0`).
    pub signs: Vec<i8>,
}

impl Inertia {
    pub fn rank(&self) -> usize {
        self.positive + self.negative
    }

    pub fn is_psd(&self) -> bool {
        self.negative == 0
    }
}

/// Exact inertia of a symmetric matrix by Schur-complement pivoting,
/// using 1x1 pivots on non-zero diagonal entries and 2x2 pivots otherwise.
pub fn symmetric_inertia(a: &Matrix) -> Inertia {
    assert!(a.is_square());
    let n = a.rows;
    let mut w = a.clone();
    let mut active: Vec<usize> = (0..n).collect();
    let mut out = Inertia::default();
    loop {
        if let Some(pos) = active.iter().position(|&k| !w.get(k, k).is_zero()) {
            let k = active.remove(pos);
            let piv = w.get(k, k).clone();
            if piv > Rational::zero() {
                out.positive += 1;
                out.signs.push(1);
            } else {
                out.negative += 1;
                out.signs.push(-1);
            }
            out.pivots.push(k);
            let inv = piv.recip();
            for &i in &active {
                if w.get(i, k).is_zero() {
                    continue;
                }
                let f = w.get(i, k) * &inv;
                for &j in &active {
                    let v = &f * w.get(k, j);
                    if !v.is_zero() {
                        *w.at_mut(i, j) -= v;
                    }
                }
            }
            continue;
        }
        let pair = active
            .iter()
            .enumerate()
            .find_map(|(x, &i)| active[x + 1..].iter().find(|&&j| !w.get(i, j).is_zero()).map(|&j| (i, j)));
        let Some((i, j)) = pair else { break };
        active.retain(|&k| k != i && k != j);
        out.positive += 1;
        out.negative += 1;
        out.signs.push(0);
        out.pivots.push(i);
        out.pivots.push(j);
        let binv = w.get(i, j).recip();
        for &p in &active {
            for &q in &active {
                let v = (w.get(p, i) * w.get(j, q) + w.get(p, j) * w.get(i, q)) * &binv;
                if !v.is_zero() {
                    *w.at_mut(p, q) -= v;
                }
            }
        }
    }
    out.zero = n - out.rank();
    out
}
