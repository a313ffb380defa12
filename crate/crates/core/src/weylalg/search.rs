//! Bounded searches for central elements and two-sided ideals.
//!
//! Both work inside the finite-dimensional space of elements supported on
//! terms `m ∂^k` with `k + size(m) <= D`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::{WeylAlgebra, WeylElement};
use crate::error::{Error, Result};
use crate::expolyring::ExpoMonomial;
use crate::lattice::LatticeVector;
use crate::linalg::{kernel, Echelon, SparseVec};

type Key = (u32, ExpoMonomial);

/// All integer vectors of length `n` with l1 norm at most `bound`.
fn ball(n: usize, bound: u64) -> Vec<Vec<i64>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let b = bound as i64;
    for head in -b..=b {
        for mut tail in ball(n - 1, bound - head.unsigned_abs()) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Every term `m ∂^k` of total size at most `bound`.
pub(crate) fn terms_up_to(alg: &WeylAlgebra, bound: u64) -> Vec<WeylElement> {
    let ring = alg.ring();
    let mut out = Vec::new();
    for k in 0..=bound {
        for exps in ball(ring.exponent_dim(), bound - k) {
            let m = ExpoMonomial::from_exponents(&exps, ring.e_len());
            out.push(alg.from_parts([(k as u32, ring.monomial(m))]));
        }
    }
    out
}

/// Generators `x^{b_i}`, `∂`, `e^{b_i x}` and `y` of the algebra.
fn commutation_tests(alg: &WeylAlgebra) -> Result<Vec<WeylElement>> {
    let ring = alg.ring();
    let mut out = Vec::new();
    for i in 0..ring.rank() {
        out.push(alg.x_pow(&LatticeVector::unit(ring.rank(), i))?);
    }
    out.push(alg.d_pow(1));
    for i in 0..ring.e_len() {
        out.push(alg.exp(&LatticeVector::unit(ring.e_len(), i))?);
    }
    out.push(alg.y_pow(1));
    Ok(out)
}

/// Basis (reduced echelon form, ascending leading term) of the elements of
/// size at most `degree` commuting with every generator.
pub fn center_up_to_degree(alg: &WeylAlgebra, degree: u64) -> Result<Vec<WeylElement>> {
    if degree == 0 {
        return Err(Error::InvalidArgument("degree must be positive".into()));
    }
    let candidates = terms_up_to(alg, degree);
    let tests = commutation_tests(alg)?;
    let mut columns: Vec<SparseVec<(usize, Key)>> = Vec::with_capacity(candidates.len());
    for c in &candidates {
        let mut col = BTreeMap::new();
        for (i, g) in tests.iter().enumerate() {
            for (k, v) in g.commutator(c)?.to_sparse() {
                col.insert((i, k), v);
            }
        }
        columns.push(col);
    }
    let mut span: Echelon<Key> = Echelon::new();
    for combo in kernel(&columns, &alg.field().one()) {
        let mut v: SparseVec<Key> = BTreeMap::new();
        for (j, c) in combo {
            for (k, x) in candidates[j].to_sparse() {
                v.insert(k, &x * &c);
            }
        }
        span.insert(v);
    }
    Ok(span.reduced_basis().iter().map(|v| WeylElement::from_sparse(alg, v)).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealReport {
    pub contains_one: bool,
    /// Dimension of the truncated span after each closure step, starting
    /// with the span of the generator itself.
    pub profile: Vec<usize>,
}

/// Closes `span{gen}` under left and right multiplication by `x^{±b_i}`,
/// `e^{±b_i x}`, `y^{±1}` and `∂`, discarding products with a term of size
/// above `degree`, until the span stops growing or contains 1.
pub fn ideal_saturate(gen: &WeylElement, degree: u64) -> Result<IdealReport> {
    if gen.is_zero() {
        return Err(Error::ZeroGenerator);
    }
    let alg = gen.algebra();
    let ring = alg.ring();
    let mut mults = Vec::new();
    for i in 0..ring.rank() {
        let u = LatticeVector::unit(ring.rank(), i);
        mults.push(alg.x_pow(&u)?);
        mults.push(alg.x_pow(&u.neg())?);
    }
    for i in 0..ring.e_len() {
        let u = LatticeVector::unit(ring.e_len(), i);
        mults.push(alg.exp(&u)?);
        mults.push(alg.exp(&u.neg())?);
    }
    mults.push(alg.y_pow(1));
    mults.push(alg.y_pow(-1));
    mults.push(alg.d_pow(1));

    let one = alg.one().to_sparse();
    let mut span: Echelon<Key> = Echelon::new();
    span.insert(gen.to_sparse());
    let mut profile = vec![span.dim()];
    let mut frontier = vec![gen.clone()];
    let mut contains_one = span.contains(&one);
    while !contains_one && !frontier.is_empty() {
        let mut next = Vec::new();
        for s in &frontier {
            for g in &mults {
                for p in [g.try_mul(s)?, s.try_mul(g)?] {
                    if p.max_size() <= degree && span.insert(p.to_sparse()) {
                        next.push(p);
                    }
                }
            }
        }
        frontier = next;
        profile.push(span.dim());
        contains_one = span.contains(&one);
    }
    Ok(IdealReport { contains_one, profile })
}
