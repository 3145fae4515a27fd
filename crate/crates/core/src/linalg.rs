//! Dense exact linear algebra over a field.

use crate::ring::FieldOps;

/// A dense matrix over a field, stored row-major.
#[derive(Clone, PartialEq, Debug)]
pub struct Mat<C> {
    rows: Vec<Vec<C>>,
}

impl<C: FieldOps> Mat<C> {
    pub fn from_rows(rows: Vec<Vec<C>>) -> Self {
        if let Some(w) = rows.first().map(Vec::len) {
            assert!(rows.iter().all(|r| r.len() == w), "ragged matrix");
        }
        Mat { rows }
    }

    pub fn from_cols(cols: Vec<Vec<C>>) -> Self {
        assert!(!cols.is_empty());
        let n = cols[0].len();
        let rows = (0..n)
            .map(|i| cols.iter().map(|c| c[i].clone()).collect())
            .collect();
        Mat { rows }
    }

    pub fn identity(n: usize, one: &C) -> Self {
        let zero = one.zero_like();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { one.clone() } else { zero.clone() })
                    .collect()
            })
            .collect();
        Mat { rows }
    }

    /// The permutation matrix `P` with `(P·x)_k = x_{perm[k]}`.
    pub fn permutation(perm: &[usize], one: &C) -> Self {
        let n = perm.len();
        let zero = one.zero_like();
        let rows = (0..n)
            .map(|k| {
                (0..n)
                    .map(|j| if j == perm[k] { one.clone() } else { zero.clone() })
                    .collect()
            })
            .collect();
        Mat { rows }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn rows(&self) -> &[Vec<C>] {
        &self.rows
    }

    pub fn at(&self, i: usize, j: usize) -> &C {
        &self.rows[i][j]
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let (n, k, m) = (self.nrows(), self.ncols(), rhs.ncols());
        assert_eq!(k, rhs.nrows(), "dimension mismatch");
        let zero = self.rows[0][0].zero_like();
        let rows = (0..n)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        let mut acc = zero.clone();
                        for l in 0..k {
                            acc = acc.add(&self.rows[i][l].mul(&rhs.rows[l][j]));
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        Mat { rows }
    }

    pub fn mul_vec(&self, v: &[C]) -> Vec<C> {
        assert_eq!(self.ncols(), v.len(), "dimension mismatch");
        self.rows
            .iter()
            .map(|row| {
                let mut acc = v[0].zero_like();
                for (a, x) in row.iter().zip(v) {
                    acc = acc.add(&a.mul(x));
                }
                acc
            })
            .collect()
    }

    /// Row-reduces a working copy and returns its rank.
    pub fn rank(&self) -> usize {
        let mut m = self.rows.clone();
        gauss_rank(&mut m)
    }

    /// Inverse by Gauss–Jordan elimination; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.nrows();
        assert_eq!(n, self.ncols(), "inverse of a non-square matrix");
        if n == 0 {
            return Some(Mat { rows: vec![] });
        }
        let one = self.rows[0][0].one_like();
        let mut a = self.rows.clone();
        let mut b = Self::identity(n, &one).rows;
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            b.swap(col, pivot);
            let inv = a[col][col].inv().unwrap();
            for j in 0..n {
                a[col][j] = a[col][j].mul(&inv);
                b[col][j] = b[col][j].mul(&inv);
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for j in 0..n {
                        a[r][j] = a[r][j].sub(&f.mul(&a[col][j]));
                        b[r][j] = b[r][j].sub(&f.mul(&b[col][j]));
                    }
                }
            }
        }
        Some(Mat { rows: b })
    }

    /// Solves `x · rows = b`, i.e. expresses `b` as a linear combination of
    /// the rows of this matrix. `None` when `b` is outside the row span.
    /// When the rows are dependent an arbitrary consistent solution is
    /// returned.
    pub fn solve_transposed(&self, b: &[C]) -> Option<Vec<C>> {
        let n = self.nrows();
        let w = self.ncols();
        assert_eq!(w, b.len(), "dimension mismatch");
        if n == 0 {
            return b.iter().all(C::is_zero).then(Vec::new);
        }
        let zero = b[0].zero_like();
        // augmented system: columns are the unknown combination coefficients
        let mut aug: Vec<Vec<C>> = (0..w)
            .map(|j| {
                let mut row: Vec<C> = (0..n).map(|i| self.rows[i][j].clone()).collect();
                row.push(b[j].clone());
                row
            })
            .collect();
        let rank = gauss_rank(&mut aug);
        // consistency: no pivot in the last column
        let mut x = vec![zero; n];
        for row in aug.iter().take(rank) {
            let lead = row.iter().position(|c| !c.is_zero()).unwrap();
            if lead == n {
                return None;
            }
            // row is normalized so that row[lead] = 1 and it is the only
            // nonzero entry of its column among the reduced rows
            x[lead] = row[n].clone();
        }
        Some(x)
    }
}

/// In-place reduced row echelon form; returns the rank.
fn gauss_rank<C: FieldOps>(m: &mut [Vec<C>]) -> usize {
    if m.is_empty() {
        return 0;
    }
    let w = m[0].len();
    let mut rank = 0;
    for col in 0..w {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = m[rank][col].inv().unwrap();
        for j in col..w {
            m[rank][j] = m[rank][j].mul(&inv);
        }
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in col..w {
                    m[r][j] = m[r][j].sub(&f.mul(&m[rank][j]));
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Rank of a list of coefficient vectors.
pub fn rank_of_rows<C: FieldOps>(rows: &[Vec<C>]) -> usize {
    let mut m = rows.to_vec();
    gauss_rank(&mut m)
}

/// Greedy independent subset: scans the rows in order and keeps each row that
/// increases the rank, returning the lexicographically first maximal
/// independent index set.
pub fn greedy_independent_rows<C: FieldOps>(rows: &[Vec<C>]) -> Vec<usize> {
    let mut kept: Vec<Vec<C>> = Vec::new();
    let mut idx = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        kept.push(row.clone());
        if rank_of_rows(&kept) == kept.len() {
            idx.push(i);
        } else {
            kept.pop();
        }
    }
    idx
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rat;

    fn m(rows: &[&[i64]]) -> Mat<Rat> {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&c| Rat::from_int(c)).collect())
                .collect(),
        )
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[2, 0, 1], &[0, -1, 0], &[1, 0, 0]]);
        let inv = a.inverse().unwrap();
        assert_eq!(inv, m(&[&[0, 0, 1], &[0, -1, 0], &[1, 0, -2]]));
        let one = Rat::one();
        assert_eq!(a.mul(&inv), Mat::identity(3, &one));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn rank_and_solve() {
        let a = m(&[&[1, 0, 2], &[0, 1, 1]]);
        assert_eq!(a.rank(), 2);
        // b = 3*r0 - r1
        let b = vec![Rat::from_int(3), Rat::from_int(-1), Rat::from_int(5)];
        let x = a.solve_transposed(&b).unwrap();
        assert_eq!(x, vec![Rat::from_int(3), Rat::from_int(-1)]);
        let c = vec![Rat::zero(), Rat::zero(), Rat::one()];
        assert!(a.solve_transposed(&c).is_none());
    }

    #[test]
    fn greedy_selection() {
        let rows: Vec<Vec<Rat>> = vec![
            vec![Rat::from_int(1), Rat::from_int(2)],
            vec![Rat::from_int(2), Rat::from_int(4)],
            vec![Rat::from_int(0), Rat::from_int(1)],
        ];
        assert_eq!(greedy_independent_rows(&rows), vec![0, 2]);
    }
}
