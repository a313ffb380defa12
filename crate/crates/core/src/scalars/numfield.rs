//! The algebraic layer of the coefficient field: `Q[a_1, ..., a_m] / (f_1(a_1), ..., f_m(a_m))`
//! stored densely on the power basis.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An algebraic symbol with a monic minimal polynomial over the rationals.
///
/// `min_poly` lists coefficients from the constant term upwards; the last
/// entry is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraicSymbol {
    pub name: String,
    pub min_poly: Vec<BigRational>,
}

impl AlgebraicSymbol {
    pub fn new(name: impl Into<String>, min_poly: Vec<BigRational>) -> Result<Self> {
        let name = name.into();
        let bad = |reason| Error::InvalidMinPoly { symbol: name.clone(), reason };
        if min_poly.len() < 3 {
            return Err(bad("degree must be at least 2"));
        }
        if !min_poly.last().is_some_and(One::is_one) {
            return Err(bad("polynomial must be monic"));
        }
        if min_poly.len() == 3 {
            // X^2 + bX + c has a rational root iff b^2 - 4c is a rational square.
            let disc = &min_poly[1] * &min_poly[1] - BigRational::from_integer(4.into()) * &min_poly[0];
            if is_rational_square(&disc) {
                return Err(bad("quadratic has a rational root"));
            }
        }
        Ok(AlgebraicSymbol { name, min_poly })
    }

    /// The symbol for the square root of a non-square integer `d`.
    pub fn sqrt(name: impl Into<String>, d: i64) -> Result<Self> {
        Self::new(name, vec![BigRational::from_integer((-d).into()), BigRational::zero(), BigRational::one()])
    }

    /// A primitive `n`-th root of unity, `n >= 3`, with the cyclotomic polynomial as minimal polynomial.
    pub fn root_of_unity(name: impl Into<String>, n: u32) -> Result<Self> {
        let phi = cyclotomic(n);
        Self::new(name, phi.into_iter().map(|c| BigRational::from_integer(c.into())).collect())
    }

    pub fn degree(&self) -> usize {
        self.min_poly.len() - 1
    }
}

fn is_rational_square(r: &BigRational) -> bool {
    if r.is_negative() {
        return false;
    }
    let is_sq = |n: &BigInt| {
        let s = n.sqrt();
        &(&s * &s) == n
    };
    is_sq(r.numer()) && is_sq(r.denom())
}

/// Integer coefficients (constant term first) of the `n`-th cyclotomic polynomial.
pub fn cyclotomic(n: u32) -> Vec<i64> {
    assert!(n >= 1);
    // X^n - 1 divided by every Phi_d with d a proper divisor of n.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = cyclotomic(d);
            num = exact_poly_div(&num, &phi_d);
        }
    }
    num
}

fn exact_poly_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let dn = rem.len() - 1;
    let mut quot = vec![0i64; dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= c * d;
        }
    }
    quot
}

/// Precomputed multiplication data for the algebraic layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct NumberField {
    pub(crate) symbols: Vec<AlgebraicSymbol>,
    /// Per-symbol degree; the basis index is mixed radix with the first
    /// symbol as least significant digit.
    radices: Vec<usize>,
    degree: usize,
    /// `table[i][j]` is the product of basis elements `i` and `j` as a sparse
    /// combination of basis elements.
    table: Vec<Vec<Vec<(usize, BigRational)>>>,
}

/// Element of the algebraic layer, dense on the power basis.
pub(crate) type Alg = Vec<BigRational>;

impl NumberField {
    pub(crate) fn new(symbols: Vec<AlgebraicSymbol>) -> Self {
        let radices: Vec<usize> = symbols.iter().map(AlgebraicSymbol::degree).collect();
        let degree = radices.iter().product();
        // Reduced powers a^k for k < 2d - 1, per symbol.
        let powers: Vec<Vec<Vec<BigRational>>> = symbols.iter().map(reduced_powers).collect();
        let mut nf = NumberField { symbols, radices, degree, table: Vec::new() };
        let mut table = Vec::with_capacity(degree);
        for i in 0..degree {
            let ei = nf.exponents(i);
            let mut row = Vec::with_capacity(degree);
            for j in 0..degree {
                let ej = nf.exponents(j);
                // Tensor product of the per-symbol reduced powers.
                let mut acc: Vec<(usize, BigRational)> = vec![(0, BigRational::one())];
                let mut stride = 1;
                for s in 0..nf.radices.len() {
                    let pw = &powers[s][ei[s] + ej[s]];
                    let mut next = Vec::new();
                    for (idx, c) in &acc {
                        for (k, pc) in pw.iter().enumerate() {
                            if !pc.is_zero() {
                                next.push((idx + k * stride, c * pc));
                            }
                        }
                    }
                    acc = next;
                    stride *= nf.radices[s];
                }
                row.push(acc);
            }
            table.push(row);
        }
        nf.table = table;
        nf
    }

    #[cfg(test)]
    pub(crate) fn degree(&self) -> usize {
        self.degree
    }

    /// Exponent of each symbol in basis element `idx`.
    pub(crate) fn exponents(&self, mut idx: usize) -> Vec<usize> {
        self.radices
            .iter()
            .map(|r| {
                let e = idx % r;
                idx /= r;
                e
            })
            .collect()
    }

    pub(crate) fn basis_index_of_symbol(&self, s: usize) -> usize {
        self.radices[..s].iter().product()
    }

    pub(crate) fn zero(&self) -> Alg {
        vec![BigRational::zero(); self.degree]
    }

    pub(crate) fn from_rational(&self, r: BigRational) -> Alg {
        let mut a = self.zero();
        a[0] = r;
        a
    }

    pub(crate) fn one(&self) -> Alg {
        self.from_rational(BigRational::one())
    }

    pub(crate) fn is_zero(a: &Alg) -> bool {
        a.iter().all(Zero::is_zero)
    }

    pub(crate) fn is_one(a: &Alg) -> bool {
        a[0].is_one() && a[1..].iter().all(Zero::is_zero)
    }

    pub(crate) fn is_rational(a: &Alg) -> bool {
        a[1..].iter().all(Zero::is_zero)
    }

    pub(crate) fn add(a: &Alg, b: &Alg) -> Alg {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub(crate) fn neg(a: &Alg) -> Alg {
        a.iter().map(|x| -x).collect()
    }

    pub(crate) fn mul(&self, a: &Alg, b: &Alg) -> Alg {
        if self.degree == 1 {
            return vec![&a[0] * &b[0]];
        }
        let mut out = self.zero();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let prod = ai * bj;
                for (k, c) in &self.table[i][j] {
                    out[*k] += &prod * c;
                }
            }
        }
        out
    }

    /// Multiplicative inverse by solving `a * z = 1` on the power basis.
    pub(crate) fn inverse(&self, a: &Alg) -> Result<Alg> {
        if Self::is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        if Self::is_rational(a) {
            return Ok(self.from_rational(a[0].recip()));
        }
        let n = self.degree;
        // Column j of the multiplication matrix is a * basis_j.
        let mut m: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); n + 1]; n];
        for j in 0..n {
            for (i, ai) in a.iter().enumerate() {
                if ai.is_zero() {
                    continue;
                }
                for (k, c) in &self.table[i][j] {
                    m[*k][j] += ai * c;
                }
            }
        }
        m[0][n] = BigRational::one();
        solve_in_place(&mut m, n).ok_or(Error::ZeroDivisor)
    }

    /// Image of `a` under the involution sending symbol `s` (of degree 2,
    /// minimal polynomial `X^2 + bX + c`) to its other root `-b - s`.
    pub(crate) fn conjugate(&self, a: &Alg, s: usize) -> Alg {
        let b = &self.symbols[s].min_poly[1];
        let stride = self.basis_index_of_symbol(s);
        let mut out = self.zero();
        for (idx, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if self.exponents(idx)[s] == 0 {
                out[idx] += c;
            } else {
                let base = idx - stride;
                out[base] -= c * b;
                out[idx] -= c;
            }
        }
        out
    }
}

fn reduced_powers(sym: &AlgebraicSymbol) -> Vec<Vec<BigRational>> {
    let d = sym.degree();
    let mut out: Vec<Vec<BigRational>> = Vec::with_capacity(2 * d - 1);
    for k in 0..d {
        let mut v = vec![BigRational::zero(); d];
        v[k] = BigRational::one();
        out.push(v);
    }
    for _ in d..(2 * d - 1) {
        let prev = out.last().unwrap();
        // Multiply by the symbol: shift up and fold the top coefficient back.
        let top = prev[d - 1].clone();
        let mut v = vec![BigRational::zero(); d];
        for k in 1..d {
            v[k] = prev[k - 1].clone();
        }
        for k in 0..d {
            v[k] -= &top * &sym.min_poly[k];
        }
        out.push(v);
    }
    out
}

/// Gauss-Jordan elimination on an `n x (n+1)` augmented matrix.
fn solve_in_place(m: &mut [Vec<BigRational>], n: usize) -> Option<Vec<BigRational>> {
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for k in col..=n {
            m[col][k] = &m[col][k] * &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for k in col..=n {
                    let delta = &f * &m[col][k];
                    m[r][k] -= delta;
                }
            }
        }
    }
    Some(m.iter().map(|row| row[n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic(1), vec![-1, 1]);
        assert_eq!(cyclotomic(2), vec![1, 1]);
        assert_eq!(cyclotomic(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn rejects_reducible_quadratic() {
        assert!(AlgebraicSymbol::sqrt("r4", 4).is_err());
        assert!(AlgebraicSymbol::sqrt("s2", 2).is_ok());
        assert!(AlgebraicSymbol::new("bad", vec![q(1), q(2)]).is_err());
        assert!(AlgebraicSymbol::new("bad", vec![q(1), q(0), q(2)]).is_err());
    }

    #[test]
    fn two_layer_tower() {
        let nf = NumberField::new(vec![
            AlgebraicSymbol::sqrt("s2", 2).unwrap(),
            AlgebraicSymbol::sqrt("s3", 3).unwrap(),
        ]);
        assert_eq!(nf.degree(), 4);
        let mut s2 = nf.zero();
        s2[1] = q(1);
        let mut s3 = nf.zero();
        s3[2] = q(1);
        assert_eq!(nf.mul(&s2, &s2), nf.from_rational(q(2)));
        let s6 = nf.mul(&s2, &s3);
        assert_eq!(nf.mul(&s6, &s6), nf.from_rational(q(6)));
        let a = NumberField::add(&nf.one(), &s6);
        let inv = nf.inverse(&a).unwrap();
        assert_eq!(nf.mul(&a, &inv), nf.one());
        let c = nf.conjugate(&s6, 0);
        assert_eq!(c, NumberField::neg(&s6));
    }

    #[test]
    fn cube_root_of_unity_inverse() {
        let nf = NumberField::new(vec![AlgebraicSymbol::root_of_unity("w", 3).unwrap()]);
        let mut w = nf.zero();
        w[1] = q(1);
        let w3 = nf.mul(&nf.mul(&w, &w), &w);
        assert_eq!(w3, nf.one());
        let wm1 = NumberField::add(&w, &NumberField::neg(&nf.one()));
        let inv = nf.inverse(&wm1).unwrap();
        assert_eq!(nf.mul(&inv, &wm1), nf.one());
    }
}
