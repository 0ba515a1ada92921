//! Dense exact linear algebra over any of the coefficient modes: Gaussian
//! elimination with replayable row operations, so one factorization serves
//! many right-hand sides.

use crate::coeff::{CoeffDomain, Scalar};

#[derive(Clone, Debug)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub domain: CoeffDomain,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(domain: CoeffDomain, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![domain.zero(); rows * cols],
            domain,
        }
    }

    pub fn identity(domain: CoeffDomain, n: usize) -> Matrix {
        let mut m = Matrix::zero(domain, n, n);
        for i in 0..n {
            let one = m.domain.one();
            m.set(i, i, one);
        }
        m
    }

    pub fn from_rows(domain: CoeffDomain, rows: Vec<Vec<Scalar>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c));
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
            domain,
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.domain.clone(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zero(self.domain.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert!(self.rows == other.rows && self.cols == other.cols);
        let mut out = self.clone();
        for i in 0..self.rows * self.cols {
            out.data[i] = out.data[i].add(&other.data[i]);
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert!(self.rows == other.rows && self.cols == other.cols);
        let mut out = self.clone();
        for i in 0..self.rows * self.cols {
            out.data[i] = out.data[i].sub(&other.data[i]);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let mut out = self.clone();
        for v in out.data.iter_mut() {
            *v = v.mul(c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn rank(&self) -> usize {
        Solver::new(self.clone()).rank()
    }

    /// Determinant by fraction-producing elimination; exact in every mode.
    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        if self.rows == 0 {
            // empty Gram matrices have determinant 1 by convention
            return self.domain.one();
        }
        let mut m = self.clone();
        let mut det = self.domain.one();
        for col in 0..m.cols {
            let pivot = (col..m.rows).find(|&i| !m.get(i, col).is_zero());
            let pivot = match pivot {
                Some(p) => p,
                None => return self.domain.zero(),
            };
            if pivot != col {
                for j in 0..m.cols {
                    let a = m.get(pivot, j).clone();
                    let b = m.get(col, j).clone();
                    m.set(pivot, j, b);
                    m.set(col, j, a);
                }
                det = det.neg();
            }
            let p = m.get(col, col).clone();
            det = det.mul(&p);
            let pinv = p.inv().expect("nonzero pivot");
            for i in col + 1..m.rows {
                let f = m.get(i, col).mul(&pinv);
                if f.is_zero() {
                    continue;
                }
                for j in col..m.cols {
                    let v = m.get(i, j).sub(&f.mul(m.get(col, j)));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    /// Basis of the right kernel {x : A x = 0}.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let solver = Solver::new(self.clone());
        solver.kernel_basis()
    }
}

enum Op {
    Swap(usize, usize),
    Scale(usize, Scalar),
    /// row[target] += c * row[source]
    AddMul(usize, usize, Scalar),
}

/// Reduced row echelon factorization of A with the row operations recorded,
/// so `solve` replays them on each right-hand side of A x = b.
pub struct Solver {
    rref: Matrix,
    ops: Vec<Op>,
    pivots: Vec<(usize, usize)>,
}

impl Solver {
    pub fn new(mut a: Matrix) -> Solver {
        let mut ops = Vec::new();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..a.cols {
            if row >= a.rows {
                break;
            }
            let pivot = (row..a.rows).find(|&i| !a.get(i, col).is_zero());
            let pivot = match pivot {
                Some(p) => p,
                None => continue,
            };
            if pivot != row {
                for j in 0..a.cols {
                    let x = a.get(pivot, j).clone();
                    let y = a.get(row, j).clone();
                    a.set(pivot, j, y);
                    a.set(row, j, x);
                }
                ops.push(Op::Swap(pivot, row));
            }
            let pinv = a.get(row, col).inv().expect("nonzero pivot");
            if !a.get(row, col).is_one() {
                for j in 0..a.cols {
                    let v = a.get(row, j).mul(&pinv);
                    a.set(row, j, v);
                }
                ops.push(Op::Scale(row, pinv));
            }
            for i in 0..a.rows {
                if i == row || a.get(i, col).is_zero() {
                    continue;
                }
                let f = a.get(i, col).neg();
                for j in 0..a.cols {
                    let v = a.get(i, j).add(&f.mul(a.get(row, j)));
                    a.set(i, j, v);
                }
                ops.push(Op::AddMul(i, row, f));
            }
            pivots.push((row, col));
            row += 1;
        }
        Solver {
            rref: a,
            ops,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// One solution of A x = b with free variables set to zero; None when
    /// the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rref.rows);
        let mut y = b.to_vec();
        for op in &self.ops {
            match op {
                Op::Swap(i, j) => y.swap(*i, *j),
                Op::Scale(i, c) => y[*i] = y[*i].mul(c),
                Op::AddMul(i, src, c) => {
                    let v = y[*i].add(&c.mul(&y[*src]));
                    y[*i] = v;
                }
            }
        }
        // consistency beyond the rank
        for i in self.pivots.len()..self.rref.rows {
            if !y[i].is_zero() {
                return None;
            }
        }
        let mut x = vec![self.rref.domain.zero(); self.rref.cols];
        for &(row, col) in &self.pivots {
            x[col] = y[row].clone();
        }
        Some(x)
    }

    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let n = self.rref.cols;
        let pivot_cols: Vec<usize> = self.pivots.iter().map(|&(_, c)| c).collect();
        let mut out = Vec::new();
        for j in 0..n {
            if pivot_cols.contains(&j) {
                continue;
            }
            let mut v = vec![self.rref.domain.zero(); n];
            v[j] = self.rref.domain.one();
            for &(row, col) in &self.pivots {
                v[col] = self.rref.get(row, j).neg();
            }
            out.push(v);
        }
        out
    }
}

/// Dimension of {X : X G = G X for all G}, the commutant of a family of
/// square matrices, computed as the kernel dimension of the stacked
/// commutator system.
pub fn commutant_dimension(gens: &[Matrix]) -> usize {
    assert!(!gens.is_empty());
    let d = gens[0].rows;
    let domain = gens[0].domain.clone();
    let unknowns = d * d;
    let mut rows = Vec::new();
    for g in gens {
        assert_eq!(g.rows, d);
        for i in 0..d {
            for j in 0..d {
                // (XG - GX)[i][j] = sum_b X[i][b] G[b][j] - sum_a G[i][a] X[a][j]
                let mut row = vec![domain.zero(); unknowns];
                for b in 0..d {
                    row[i * d + b] = row[i * d + b].add(g.get(b, j));
                }
                for a in 0..d {
                    row[a * d + j] = row[a * d + j].sub(g.get(i, a));
                }
                rows.push(row);
            }
        }
    }
    let m = Matrix::from_rows(domain, rows);
    unknowns - m.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dq() -> CoeffDomain {
        CoeffDomain::Rational
    }

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            dq(),
            rows.iter()
                .map(|r| r.iter().map(|&v| dq().from_i64(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_det_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        assert!(a.det().is_zero());
        let ker = a.kernel_basis();
        assert_eq!(ker.len(), 1);
        // check A k = 0
        for i in 0..3 {
            let mut acc = dq().zero();
            for j in 0..3 {
                acc = acc.add(&a.get(i, j).mul(&ker[0][j]));
            }
            assert!(acc.is_zero());
        }

        let b = m(&[&[2, 1], &[1, 1]]);
        assert_eq!(b.det(), dq().from_i64(1));
        assert_eq!(Matrix::zero(dq(), 0, 0).det(), dq().one());
    }

    #[test]
    fn solve_and_reuse() {
        let a = m(&[&[1, 1], &[1, -1], &[2, 0]]);
        let s = Solver::new(a);
        let x = s.solve(&[dq().from_i64(3), dq().from_i64(1), dq().from_i64(4)]).unwrap();
        assert_eq!(x, vec![dq().from_i64(2), dq().from_i64(1)]);
        assert!(s.solve(&[dq().from_i64(1), dq().from_i64(0), dq().from_i64(5)]).is_none());
    }

    #[test]
    fn commutant_of_identity() {
        let id = Matrix::identity(dq(), 3);
        assert_eq!(commutant_dimension(&[id]), 9);
    }
}
