//! Dense matrices over [`LaurentPoly`].

use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::LaurentPoly;

/// Row-major dense matrix. Shape `rows × cols` is a linear map from a
/// `cols`-dimensional space to a `rows`-dimensional one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

impl RingMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RingMatrix { rows, cols, entries: vec![LaurentPoly::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, LaurentPoly::one());
        }
        m
    }

    pub fn scalar(p: LaurentPoly) -> Self {
        RingMatrix { rows: 1, cols: 1, entries: vec![p] }
    }

    /// Builds from rows; panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RingMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    pub fn from_vec(rows: usize, cols: usize, entries: Vec<LaurentPoly>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        RingMatrix { rows, cols, entries }
    }

    /// Column vector.
    pub fn column(entries: Vec<LaurentPoly>) -> Self {
        let n = entries.len();
        Self::from_vec(n, 1, entries)
    }

    /// Row vector.
    pub fn row(entries: Vec<LaurentPoly>) -> Self {
        let n = entries.len();
        Self::from_vec(1, n, entries)
    }

    /// Permutation matrix sending basis vector `j` to `perm[j]`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Self::zeros(n, n);
        for (j, &i) in perm.iter().enumerate() {
            m.set(i, j, LaurentPoly::one());
        }
        m
    }

    /// Flip `V_a ⊗ V_b → V_b ⊗ V_a` for spaces of dimension `a` and `b`.
    pub fn flip(a: usize, b: usize) -> Self {
        let perm: Vec<usize> = (0..a * b).map(|j| (j % b) * a + j / b).collect();
        Self::permutation(&perm)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> &LaurentPoly {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: LaurentPoly) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[LaurentPoly] {
        &self.entries
    }

    pub fn row_vec(&self, r: usize) -> &[LaurentPoly] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rows)
    }

    pub fn checked_mul(&self, rhs: &RingMatrix) -> Option<RingMatrix> {
        if self.cols != rhs.rows {
            return None;
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.entries[idx] += &(a * b);
                }
            }
        }
        Some(out)
    }

    /// Kronecker product; `(i1, i2)` maps to row `i1·rows(rhs) + i2`.
    pub fn kron(&self, rhs: &RingMatrix) -> RingMatrix {
        let (r2, c2) = rhs.shape();
        let mut out = Self::zeros(self.rows * r2, self.cols * c2);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..r2 {
                    for j2 in 0..c2 {
                        let b = rhs.get(i2, j2);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(i1 * r2 + i2, j1 * c2 + j2, a * b);
                    }
                }
            }
        }
        out
    }

    pub fn kron_all<'a, I: IntoIterator<Item = &'a RingMatrix>>(factors: I) -> RingMatrix {
        factors.into_iter().fold(Self::identity(1), |acc, m| acc.kron(m))
    }

    pub fn scale(&self, p: &LaurentPoly) -> RingMatrix {
        RingMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|e| e * p).collect() }
    }

    pub fn add(&self, rhs: &RingMatrix) -> RingMatrix {
        assert_eq!(self.shape(), rhs.shape(), "shape mismatch in add");
        RingMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn transpose(&self) -> RingMatrix {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn trace(&self) -> LaurentPoly {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    /// First entry (row-major) where `self` and `other` differ.
    pub fn first_difference(&self, other: &RingMatrix) -> Option<(usize, usize)> {
        if self.shape() != other.shape() {
            return Some((0, 0));
        }
        self.entries.iter().zip(&other.entries).position(|(a, b)| a != b).map(|k| (k / self.cols, k % self.cols))
    }
}

impl Mul for &RingMatrix {
    type Output = RingMatrix;
    fn mul(self, rhs: &RingMatrix) -> RingMatrix {
        self.checked_mul(rhs).unwrap_or_else(|| panic!("shape mismatch: {:?} * {:?}", self.shape(), rhs.shape()))
    }
}

impl fmt::Debug for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RingMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row_vec(r).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row_vec(r).iter().map(|e| e.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<LaurentPoly>>,
}

impl Serialize for RingMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let entries = (0..self.rows).map(|r| self.row_vec(r).to_vec()).collect();
        MatrixRepr { rows: self.rows, cols: self.cols, entries }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RingMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = MatrixRepr::deserialize(d)?;
        if repr.entries.len() != repr.rows || repr.entries.iter().any(|r| r.len() != repr.cols) {
            return Err(serde::de::Error::custom("matrix entries do not match rows/cols"));
        }
        Ok(RingMatrix { rows: repr.rows, cols: repr.cols, entries: repr.entries.into_iter().flatten().collect() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn small(rows: usize, cols: usize) -> impl Strategy<Value = RingMatrix> {
        proptest::collection::vec((-2i32..3, -2i64..3), rows * cols).prop_map(move |v| {
            RingMatrix::from_vec(rows, cols, v.into_iter().map(|(e, c)| LaurentPoly::int_monomial(c, e)).collect())
        })
    }

    #[test]
    fn kron_examples() {
        assert_eq!(RingMatrix::identity(2).kron(&RingMatrix::identity(2)), RingMatrix::identity(4));
        let s = RingMatrix::scalar("2A - i".parse().unwrap());
        let m = RingMatrix::flip(2, 2);
        assert_eq!(s.kron(&m), m.scale(s.get(0, 0)));
        // (1 2) on three factors: swap the first two tensor factors
        let p = RingMatrix::flip(2, 2).kron(&RingMatrix::identity(2));
        for j in 0..8 {
            let (b0, b1, b2) = (j >> 2 & 1, j >> 1 & 1, j & 1);
            let i = (b1 << 2) | (b0 << 1) | b2;
            assert!(p.get(i, j).is_one());
        }
    }

    #[test]
    fn flip_is_involution_and_matches_swap() {
        let f = RingMatrix::flip(2, 3);
        assert_eq!(&RingMatrix::flip(3, 2) * &f, RingMatrix::identity(6));
        // e_i ⊗ e_j -> e_j ⊗ e_i
        let i = 1;
        let j = 2;
        assert!(f.get(j * 2 + i, i * 3 + j).is_one());
    }

    #[test]
    fn empty_shapes() {
        let z = RingMatrix::zeros(0, 3);
        let w = RingMatrix::zeros(3, 0);
        assert_eq!(&w * &z, RingMatrix::zeros(3, 3));
        assert_eq!(&z * &w, RingMatrix::zeros(0, 0));
    }

    proptest! {
        #[test]
        fn mixed_product(m in small(2, 3), n in small(2, 2), p in small(3, 1), q in small(2, 2)) {
            let lhs = &m.kron(&n) * &p.kron(&q);
            let rhs = (&m * &p).kron(&(&n * &q));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn kron_associative(a in small(1, 2), b in small(2, 1), c in small(2, 2)) {
            prop_assert_eq!(a.kron(&b).kron(&c), a.kron(&b.kron(&c)));
        }
    }
}
