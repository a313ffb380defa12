//! The exponent group `A`: a free abelian group of finite rank with a fixed
//! embedding of its basis into the coefficient field, plus the integer
//! matrix utilities used to move between bases.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalars::FieldScalar;

/// A free Z-module `A` of rank `r` together with the images of its basis
/// vectors in the coefficient field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeBasis {
    embed: Vec<FieldScalar>,
}

impl LatticeBasis {
    /// The first embedding must be 1 and all embeddings must be distinct.
    pub fn new(embed: Vec<FieldScalar>) -> Result<Self> {
        match embed.first() {
            None => return Err(Error::InvalidBasis("rank must be positive")),
            Some(e) if !e.is_one() => return Err(Error::InvalidBasis("first basis vector must embed as 1")),
            _ => {}
        }
        for (i, a) in embed.iter().enumerate() {
            if embed[..i].contains(a) {
                return Err(Error::InvalidBasis("embeddings must be distinct"));
            }
        }
        Ok(LatticeBasis { embed })
    }

    pub fn rank(&self) -> usize {
        self.embed.len()
    }

    pub fn embeddings(&self) -> &[FieldScalar] {
        &self.embed
    }

    /// Image of a coordinate vector in the field.
    pub fn embed(&self, v: &LatticeVector) -> Result<FieldScalar> {
        embed_with(&self.embed, v)
    }
}

/// `sum v_i * embed_i`.
pub(crate) fn embed_with(embed: &[FieldScalar], v: &LatticeVector) -> Result<FieldScalar> {
    v.check_len(embed.len())?;
    let field = embed[0].field();
    let mut acc = field.zero();
    for (c, e) in v.0.iter().zip(embed) {
        if *c != 0 {
            acc = acc + &(&field.int(*c) * e);
        }
    }
    Ok(acc)
}

/// Integer coordinates relative to a lattice basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeVector(pub Vec<i64>);

impl LatticeVector {
    pub fn zero(n: usize) -> Self {
        LatticeVector(vec![0; n])
    }

    /// The standard basis vector `e_i` in dimension `n`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        LatticeVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.len() == n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: n, found: self.len() })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        other.check_len(self.len())?;
        self.0.iter().zip(&other.0).map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow)).collect::<Result<_>>().map(LatticeVector)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        other.check_len(self.len())?;
        self.0.iter().zip(&other.0).map(|(a, b)| a.checked_sub(*b).ok_or(Error::Overflow)).collect::<Result<_>>().map(LatticeVector)
    }

    pub fn scale(&self, k: i64) -> Result<Self> {
        self.0.iter().map(|a| a.checked_mul(k).ok_or(Error::Overflow)).collect::<Result<_>>().map(LatticeVector)
    }

    pub fn neg(&self) -> Self {
        LatticeVector(self.0.iter().map(|a| -a).collect())
    }

    /// Sum of absolute values of the coordinates.
    pub fn l1(&self) -> u64 {
        self.0.iter().map(|a| a.unsigned_abs()).sum()
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// gcd of the coordinates; 0 exactly for the zero vector.
pub fn content(v: &LatticeVector) -> u64 {
    v.0.iter().fold(0u64, |g, &c| g.gcd(&c.unsigned_abs()))
}

pub fn is_primitive(v: &LatticeVector) -> bool {
    content(v) == 1
}

/// Square integer matrix with determinant ±1, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnimodularMatrix {
    rows: Vec<Vec<i64>>,
}

impl UnimodularMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidArgument("empty matrix".into()));
        }
        for r in &rows {
            if r.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: r.len() });
            }
        }
        let m = UnimodularMatrix { rows };
        match m.det() {
            Some(1) | Some(-1) => Ok(m),
            _ => Err(Error::NotUnimodular),
        }
    }

    pub fn identity(n: usize) -> Self {
        UnimodularMatrix { rows: (0..n).map(|i| LatticeVector::unit(n, i).0).collect() }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    pub fn column(&self, j: usize) -> LatticeVector {
        LatticeVector(self.rows.iter().map(|r| r[j]).collect())
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.size())
    }

    /// Exact determinant by rational elimination; `None` if it does not fit in `i64`.
    pub fn det(&self) -> Option<i64> {
        let n = self.size();
        let mut m: Vec<Vec<BigRational>> =
            self.rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
        let mut det = BigRational::from_integer(1.into());
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
                return Some(0);
            };
            if piv != col {
                m.swap(piv, col);
                det = -det;
            }
            det *= &m[col][col];
            for r in col + 1..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let f = &m[r][col] / &m[col][col];
                for k in col..n {
                    let d = &f * &m[col][k];
                    m[r][k] -= d;
                }
            }
        }
        det.to_integer().to_i64()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let n = self.size();
        if other.size() != n {
            return Err(Error::DimensionMismatch { expected: n, found: other.size() });
        }
        let mut rows = vec![vec![0i64; n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, out) in row.iter_mut().enumerate() {
                let mut acc = 0i64;
                for k in 0..n {
                    acc = self.rows[i][k]
                        .checked_mul(other.rows[k][j])
                        .and_then(|p| acc.checked_add(p))
                        .ok_or(Error::Overflow)?;
                }
                *out = acc;
            }
        }
        Ok(UnimodularMatrix { rows })
    }

    /// Integer inverse, obtained by rational Gauss-Jordan elimination.
    pub fn inverse(&self) -> Self {
        let n = self.size();
        let one = BigRational::from_integer(1.into());
        let mut m: Vec<Vec<BigRational>> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut row: Vec<BigRational> = r.iter().map(|&x| BigRational::from_integer(x.into())).collect();
                row.extend((0..n).map(|j| if i == j { one.clone() } else { BigRational::zero() }));
                row
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| !m[r][col].is_zero()).expect("unimodular");
            m.swap(piv, col);
            let inv = m[col][col].recip();
            for x in m[col].iter_mut() {
                *x *= &inv;
            }
            for r in 0..n {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for k in 0..2 * n {
                        let d = &f * &m[col][k];
                        m[r][k] -= d;
                    }
                }
            }
        }
        let rows = m
            .into_iter()
            .map(|r| r[n..].iter().map(|x| x.to_integer().to_i64().expect("integral inverse")).collect())
            .collect();
        UnimodularMatrix { rows }
    }

    pub fn transpose(&self) -> Self {
        let n = self.size();
        UnimodularMatrix { rows: (0..n).map(|j| self.column(j).0).collect() }
    }
}

impl fmt::Display for UnimodularMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{}", LatticeVector(r.clone()))?;
        }
        Ok(())
    }
}

pub fn apply_matrix(m: &UnimodularMatrix, v: &LatticeVector) -> Result<LatticeVector> {
    v.check_len(m.size())?;
    m.rows
        .iter()
        .map(|r| {
            r.iter().zip(&v.0).try_fold(0i64, |acc, (a, b)| a.checked_mul(*b).and_then(|p| acc.checked_add(p)))
        })
        .collect::<Option<Vec<_>>>()
        .map(LatticeVector)
        .ok_or(Error::Overflow)
}

/// A unimodular matrix whose first column is the primitive vector `v`.
///
/// `v` is carried to `e_1` by 2x2 extended-gcd blocks acting on coordinates
/// `(0, i)`; the returned matrix is the inverse of that product.
pub fn complete_to_basis(v: &LatticeVector) -> Result<UnimodularMatrix> {
    if !is_primitive(v) {
        return Err(Error::NotPrimitive);
    }
    let n = v.len();
    let mut w = v.0.clone();
    let mut m = UnimodularMatrix::identity(n);
    // Right-multiply `m` by the inverse of the block acting on coordinates (0, i).
    let apply_inv = |m: &mut UnimodularMatrix, i: usize, inv: [[i64; 2]; 2]| {
        for row in m.rows.iter_mut() {
            let (c0, ci) = (row[0], row[i]);
            row[0] = c0 * inv[0][0] + ci * inv[1][0];
            row[i] = c0 * inv[0][1] + ci * inv[1][1];
        }
    };
    for i in (1..n).rev() {
        let (a, b) = (w[0], w[i]);
        if b == 0 {
            continue;
        }
        if a == 0 {
            w.swap(0, i);
            apply_inv(&mut m, i, [[0, 1], [1, 0]]);
            continue;
        }
        let eg = a.extended_gcd(&b);
        let (mut g, mut s, mut t) = (eg.gcd, eg.x, eg.y);
        if g < 0 {
            g = -g;
            s = -s;
            t = -t;
        }
        let (a1, b1) = (a / g, b / g);
        // Block [[s, t], [-b1, a1]] sends (a, b) to (g, 0); its inverse is [[a1, -t], [b1, s]].
        w[0] = g;
        w[i] = 0;
        apply_inv(&mut m, i, [[a1, -t], [b1, s]]);
    }
    if w[0] < 0 {
        for row in m.rows.iter_mut() {
            row[0] = -row[0];
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[i64]) -> LatticeVector {
        LatticeVector(c.to_vec())
    }

    #[test]
    fn contents() {
        assert_eq!(content(&v(&[4, 6])), 2);
        assert_eq!(content(&v(&[0, 0])), 0);
        assert_eq!(content(&v(&[3, 5, 7])), 1);
        assert_eq!(content(&v(&[-4, 0])), 4);
        assert!(is_primitive(&v(&[6, 10, 15])));
        assert!(!is_primitive(&v(&[2, 4])));
    }

    #[test]
    fn completion_examples() {
        assert!(complete_to_basis(&v(&[1, 0])).unwrap().is_identity());
        let swap = complete_to_basis(&v(&[0, 1])).unwrap();
        assert_eq!(swap.rows(), &[vec![0, 1], vec![1, 0]]);
        let m = complete_to_basis(&v(&[2, 3])).unwrap();
        assert_eq!(m.column(0), v(&[2, 3]));
        assert_eq!(m.det().unwrap().abs(), 1);
        assert_eq!(complete_to_basis(&v(&[2, 4])), Err(Error::NotPrimitive));
        assert_eq!(complete_to_basis(&v(&[0, 0])), Err(Error::NotPrimitive));
    }

    #[test]
    fn apply_examples() {
        let id = UnimodularMatrix::identity(2);
        assert_eq!(apply_matrix(&id, &v(&[5, -2])).unwrap(), v(&[5, -2]));
        let swap = UnimodularMatrix::new(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(apply_matrix(&swap, &v(&[1, 2])).unwrap(), v(&[2, 1]));
        let m = UnimodularMatrix::new(vec![vec![1, 0], vec![1, -1]]).unwrap();
        assert_eq!(apply_matrix(&m, &v(&[1, 1])).unwrap(), v(&[1, 0]));
        assert!(matches!(apply_matrix(&m, &v(&[1, 1, 1])), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn rejects_singular() {
        assert_eq!(UnimodularMatrix::new(vec![vec![2, 0], vec![0, 1]]), Err(Error::NotUnimodular));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = UnimodularMatrix::new(vec![vec![2, 1, 0], vec![3, 2, 0], vec![1, 1, 1]]).unwrap();
        assert!(m.mul(&m.inverse()).unwrap().is_identity());
    }
}
