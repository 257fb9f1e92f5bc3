use super::scalar::Field;

/// Dense matrix over a field, row-major.
#[derive(Clone, PartialEq, Debug)]
pub struct Mat<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Mat<F> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c));
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out: Mat<F> = Mat::zero(self.rows, other.cols);
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
                    let cur = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = a.sub(b);
        }
        out
    }

    pub fn mul_scalar(&self, c: &F) -> Self {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = a.mul(c);
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        acc = acc.add(&a.mul(&v[j]));
                    }
                }
                acc
            })
            .collect()
    }
}

/// Basis of the right kernel of `m`, by fraction-free (Bareiss-style)
/// elimination followed by back substitution.
///
/// Pivots are chosen as the first nonzero entry in row-major order, so the
/// output is deterministic: one canonical vector per free column, with a 1
/// in the free position.
pub fn solve_nullspace<F: Field>(m: &Mat<F>) -> Vec<Vec<F>> {
    let rows = m.nrows();
    let cols = m.ncols();
    let mut a = m.clone();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut prev_pivot = F::one();
    let mut rank = 0usize;

    for col in 0..cols {
        // first nonzero entry in row-major order below the current rank
        let pivot_row = (rank..rows).find(|&r| !a.get(r, col).is_zero());
        let pivot_row = match pivot_row {
            Some(r) => r,
            None => continue,
        };
        if pivot_row != rank {
            for j in 0..cols {
                let x = a.get(rank, j).clone();
                let y = a.get(pivot_row, j).clone();
                a.set(rank, j, y);
                a.set(pivot_row, j, x);
            }
        }
        let pivot = a.get(rank, col).clone();
        // one-step fraction-free update: exact division by the previous pivot
        for r in (rank + 1)..rows {
            let factor = a.get(r, col).clone();
            for j in 0..cols {
                let val = a
                    .get(r, j)
                    .mul(&pivot)
                    .sub(&factor.mul(a.get(rank, j)))
                    .div(&prev_pivot)
                    .expect("Bareiss division is exact");
                a.set(r, j, val);
            }
        }
        prev_pivot = pivot;
        pivot_cols.push(col);
        rank += 1;
        if rank == rows {
            break;
        }
    }

    // Back substitution to reduced row echelon form.
    for i in (0..rank).rev() {
        let pc = pivot_cols[i];
        let pinv = a.get(i, pc).inv().unwrap();
        for j in 0..cols {
            let v = a.get(i, j).mul(&pinv);
            a.set(i, j, v);
        }
        for r in 0..i {
            let factor = a.get(r, pc).clone();
            if factor.is_zero() {
                continue;
            }
            for j in 0..cols {
                let v = a.get(r, j).sub(&factor.mul(a.get(i, j)));
                a.set(r, j, v);
            }
        }
    }

    let mut basis = Vec::new();
    let pivot_set: std::collections::BTreeSet<usize> = pivot_cols.iter().copied().collect();
    for free in 0..cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![F::zero(); cols];
        v[free] = F::one();
        for (i, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = a.get(i, free).neg();
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratfn::{RatQ, RatQU};
    use crate::algebra::scalar::Rat;

    #[test]
    fn nullspace_identity_empty() {
        let m: Mat<Rat> = Mat::identity(3);
        assert!(solve_nullspace(&m).is_empty());
    }

    #[test]
    fn nullspace_zero_full() {
        let m: Mat<Rat> = Mat::zero(2, 2);
        let basis = solve_nullspace(&m);
        assert_eq!(basis.len(), 2);
        assert_eq!(basis[0], vec![Rat::from_int(1), Rat::from_int(0)]);
        assert_eq!(basis[1], vec![Rat::from_int(0), Rat::from_int(1)]);
    }

    #[test]
    fn nullspace_rational_function_entries() {
        // [[u, -q], [q u, -q^2]] over Q(q)(u): kernel spanned by (q, u).
        let q = RatQU::constant(RatQ::var());
        let u = RatQU::var();
        let m = Mat::from_rows(vec![
            vec![u.clone(), q.neg()],
            vec![q.mul(&u), q.mul(&q).neg()],
        ]);
        let basis = solve_nullspace(&m);
        assert_eq!(basis.len(), 1);
        // Canonical form has 1 in the free column; check proportionality to (q, u).
        let v = &basis[0];
        let cross = v[0].mul(&u).sub(&v[1].mul(&q));
        assert!(cross.is_zero());
        for b in &basis {
            assert!(m.mul_vec(b).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn nullspace_vectors_are_exact_kernel_members() {
        let m = Mat::from_rows(vec![
            vec![Rat::from_int(1), Rat::from_int(2), Rat::from_int(3)],
            vec![Rat::from_int(2), Rat::from_int(4), Rat::from_int(6)],
        ]);
        let basis = solve_nullspace(&m);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }
}
