use core::fmt;
use core::ops::Mul;

use num_traits::{One, Signed, Zero};

use super::rat::{is_integer, rat, Rat};
use super::vec::Vec3;

/// A 3×3 exact rational matrix. Columns are the images of the basis vectors,
/// so lattice bases and linear parts of isometries both live here.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mat3 {
    // Row-major storage; rows[i][j] is row i, column j.
    rows: [[Rat; 3]; 3],
}

impl Mat3 {
    pub fn from_rows(rows: [[Rat; 3]; 3]) -> Self {
        Mat3 { rows }
    }

    pub fn from_cols(cols: [Vec3; 3]) -> Self {
        let c = |i: usize| cols[i].components();
        let (a, b, d) = (c(0), c(1), c(2));
        Mat3 {
            rows: [
                [a[0].clone(), b[0].clone(), d[0].clone()],
                [a[1].clone(), b[1].clone(), d[1].clone()],
                [a[2].clone(), b[2].clone(), d[2].clone()],
            ],
        }
    }

    pub fn from_int_rows(rows: [[i64; 3]; 3]) -> Self {
        Mat3 {
            rows: rows.map(|r| r.map(rat)),
        }
    }

    pub fn from_int_cols(cols: [[i64; 3]; 3]) -> Self {
        Mat3::from_int_rows([
            [cols[0][0], cols[1][0], cols[2][0]],
            [cols[0][1], cols[1][1], cols[2][1]],
            [cols[0][2], cols[1][2], cols[2][2]],
        ])
    }

    pub fn identity() -> Self {
        Mat3::from_int_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rat {
        &self.rows[i][j]
    }

    pub fn col(&self, j: usize) -> Vec3 {
        Vec3::new(
            self.rows[0][j].clone(),
            self.rows[1][j].clone(),
            self.rows[2][j].clone(),
        )
    }

    pub fn transpose(&self) -> Mat3 {
        let e = |i: usize, j: usize| self.rows[i][j].clone();
        Mat3::from_rows([
            [e(0, 0), e(1, 0), e(2, 0)],
            [e(0, 1), e(1, 1), e(2, 1)],
            [e(0, 2), e(1, 2), e(2, 2)],
        ])
    }

    pub fn det(&self) -> Rat {
        let m = &self.rows;
        let minor =
            |a: usize, b: usize, c: usize, d: usize| &m[1][a] * &m[2][b] - &m[1][c] * &m[2][d];
        &m[0][0] * minor(1, 2, 2, 1) - &m[0][1] * minor(0, 2, 2, 0) + &m[0][2] * minor(0, 1, 1, 0)
    }

    /// Adjugate matrix: `self * adjugate = det * I`.
    pub fn adjugate(&self) -> Mat3 {
        let m = &self.rows;
        let cof = |r1: usize, r2: usize, c1: usize, c2: usize| {
            &m[r1][c1] * &m[r2][c2] - &m[r1][c2] * &m[r2][c1]
        };
        // Cofactor expansion, transposed.
        Mat3::from_rows([
            [cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2)],
            [-cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2)],
            [cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)],
        ])
    }

    pub fn inverse(&self) -> Option<Mat3> {
        let d = self.det();
        if d.is_zero() {
            return None;
        }
        let inv_d = d.recip();
        let adj = self.adjugate();
        Some(Mat3 {
            rows: adj.rows.map(|r| r.map(|e| e * &inv_d)),
        })
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat3::identity()
    }

    pub fn is_integer(&self) -> bool {
        self.rows.iter().flatten().all(is_integer)
    }

    /// `|det| == 1`, the volume-preservation condition for linear parts.
    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }

    pub fn neg(&self) -> Mat3 {
        Mat3 {
            rows: self.rows.clone().map(|r| r.map(|e| -e)),
        }
    }

    pub fn mul_vec(&self, v: &Vec3) -> Vec3 {
        let row = |i: usize| {
            &self.rows[i][0] * &v.x + &self.rows[i][1] * &v.y + &self.rows[i][2] * &v.z
        };
        Vec3::new(row(0), row(1), row(2))
    }
}

impl Mul for &Mat3 {
    type Output = Mat3;
    fn mul(self, rhs: &Mat3) -> Mat3 {
        let e = |i: usize, j: usize| {
            &self.rows[i][0] * &rhs.rows[0][j]
                + &self.rows[i][1] * &rhs.rows[1][j]
                + &self.rows[i][2] * &rhs.rows[2][j]
        };
        Mat3::from_rows([
            [e(0, 0), e(0, 1), e(0, 2)],
            [e(1, 0), e(1, 1), e(1, 2)],
            [e(2, 0), e(2, 1), e(2, 2)],
        ])
    }
}

impl fmt::Display for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "[{}, {}, {}]", row[0], row[1], row[2])?;
        }
        Ok(())
    }
}

impl fmt::Debug for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::frac;

    #[test]
    fn det_and_inverse() {
        // Face-centered basis, determinant 2.
        let b = Mat3::from_int_cols([[0, 1, 1], [1, 0, 1], [1, 1, 0]]);
        assert_eq!(b.det(), rat(2));
        let inv = b.inverse().unwrap();
        assert!((&b * &inv).is_identity());
        assert_eq!(inv.entry(0, 0), &frac(-1, 2));
    }

    #[test]
    fn adjugate_times_self_is_det() {
        let b = Mat3::from_int_cols([[-1, 1, 1], [1, -1, 1], [1, 1, -1]]);
        let adj = b.adjugate();
        let prod = &adj * &b;
        assert_eq!(prod.entry(0, 0), &rat(4));
        assert_eq!(prod.entry(0, 1), &rat(0));
    }

    #[test]
    fn cyclic_permutation_is_unimodular() {
        // x -> z, y -> x, z -> y as a matrix on column vectors.
        let r = Mat3::from_int_rows([[0, 0, 1], [1, 0, 0], [0, 1, 0]]);
        assert!(r.is_unimodular());
        assert_eq!(r.det(), rat(1));
        let v = r.mul_vec(&Vec3::ints(1, 0, 0));
        assert_eq!(v, Vec3::ints(0, 1, 0));
    }
}
