//! Automorphisms of the expolynomial ring, the isomorphism test for the
//! central parameter `p`, and Galois descent on coefficients.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::expolyring::{ExpoMonomial, ExpoPoly};
use crate::lattice::{apply_matrix, complete_to_basis, content, LatticeVector, UnimodularMatrix};
use crate::scalars::{Field, FieldScalar};
use crate::weylalg::WeylElement;

/// `z^v ↦ (Π λ_i^{(Mv)_i}) z^{Mv}` on flattened exponent vectors `[y, e.., x..]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingAutomorphism {
    torus: Vec<FieldScalar>,
    matrix: UnimodularMatrix,
}

impl RingAutomorphism {
    pub fn new(torus: Vec<FieldScalar>, matrix: UnimodularMatrix) -> Result<Self> {
        if torus.len() != matrix.size() {
            return Err(Error::DimensionMismatch { expected: matrix.size(), found: torus.len() });
        }
        if torus.iter().any(FieldScalar::is_zero) {
            return Err(Error::InvalidArgument("torus entries must be nonzero".into()));
        }
        Ok(RingAutomorphism { torus, matrix })
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        RingAutomorphism { torus: (0..n).map(|_| field.one()).collect(), matrix: UnimodularMatrix::identity(n) }
    }

    pub fn size(&self) -> usize {
        self.matrix.size()
    }

    pub fn torus(&self) -> &[FieldScalar] {
        &self.torus
    }

    pub fn matrix(&self) -> &UnimodularMatrix {
        &self.matrix
    }

    fn check(&self, n: usize) -> Result<()> {
        if self.size() == n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: n, found: self.size() })
        }
    }

    /// Inverse: matrix `M^{-1}` and torus `μ_i = Π_j λ_j^{-M_{ji}}`.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.size();
        let mut torus = Vec::with_capacity(n);
        for i in 0..n {
            let col = LatticeVector((0..n).map(|j| -self.matrix.entry(j, i)).collect());
            torus.push(torus_on_exponentials(&self.torus, &col)?);
        }
        Ok(RingAutomorphism { torus, matrix: self.matrix.inverse() })
    }
}

pub fn apply_automorphism(g: &RingAutomorphism, f: &ExpoPoly) -> Result<ExpoPoly> {
    let ring = f.ring();
    g.check(ring.exponent_dim())?;
    let mut out = ring.zero();
    for (m, c) in f.terms() {
        let w = apply_matrix(&g.matrix, &LatticeVector(m.to_exponents()))?;
        let scale = torus_on_exponentials(&g.torus, &w)?;
        out.add_term(ExpoMonomial::from_exponents(&w.0, ring.e_len()), c * &scale);
    }
    Ok(out)
}

/// `g ∘ h`: matrix `MN`, torus `λ_j Π_i μ_i^{(M^{-1})_{ij}}`.
pub fn compose(g: &RingAutomorphism, h: &RingAutomorphism) -> Result<RingAutomorphism> {
    g.check(h.size())?;
    let n = g.size();
    let minv = g.matrix.inverse();
    let mut torus = Vec::with_capacity(n);
    for j in 0..n {
        let col = LatticeVector((0..n).map(|i| minv.entry(i, j)).collect());
        torus.push(&g.torus[j] * &torus_on_exponentials(&h.torus, &col)?);
    }
    Ok(RingAutomorphism { torus, matrix: g.matrix.mul(&h.matrix)? })
}

/// `Π λ_i^{α_i}`.
pub fn torus_on_exponentials(lambda: &[FieldScalar], alpha: &LatticeVector) -> Result<FieldScalar> {
    alpha.check_len(lambda.len())?;
    let field = lambda.first().ok_or(Error::DimensionMismatch { expected: 1, found: 0 })?.field();
    let mut acc = field.one();
    for (l, &a) in lambda.iter().zip(&alpha.0) {
        if a != 0 {
            acc = &acc * &l.pow(a)?;
        }
    }
    Ok(acc)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoDecision {
    pub isomorphic: bool,
    /// `σ` with `σ(p1) = ±p2` when isomorphic.
    pub witness: Option<UnimodularMatrix>,
}

/// Decides whether some `σ ∈ GL(r, Z)` sends `p1` to `±p2`.
pub fn iso_decide(p1: &LatticeVector, p2: &LatticeVector) -> Result<IsoDecision> {
    p2.check_len(p1.len())?;
    if p1.is_zero() || p2.is_zero() {
        return Err(Error::ZeroVector);
    }
    let r = p1.len();
    if r == 1 {
        let (a, b) = (p1.0[0], p2.0[0]);
        if a.abs() != b.abs() {
            return Ok(IsoDecision { isomorphic: false, witness: None });
        }
        return Ok(IsoDecision { isomorphic: true, witness: Some(UnimodularMatrix::new(alloc::vec![alloc::vec![a.signum() * b.signum()]])?) });
    }
    let (c1, c2) = (content(p1), content(p2));
    if c1 != c2 {
        return Ok(IsoDecision { isomorphic: false, witness: None });
    }
    let c = c1 as i64;
    let prim = |p: &LatticeVector| LatticeVector(p.0.iter().map(|x| x / c).collect());
    let m1 = complete_to_basis(&prim(p1))?;
    let m2 = complete_to_basis(&prim(p2))?;
    // M1 e1 = p1/c and M2 e1 = p2/c, so M2 M1^{-1} sends p1 to p2.
    let sigma = m2.mul(&m1.inverse())?;
    Ok(IsoDecision { isomorphic: true, witness: Some(sigma) })
}

/// `content(v) e_1`.
pub fn canonical_orbit_rep(v: &LatticeVector) -> Result<LatticeVector> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let mut out = LatticeVector::zero(v.len());
    out.0[0] = content(v) as i64;
    Ok(out)
}

/// The nontrivial automorphism of a configured quadratic layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisAction {
    layer: String,
}

impl GaloisAction {
    pub fn new(field: &Field, layer: &str) -> Result<Self> {
        // Validates the layer by conjugating a probe.
        field.one().conjugate(layer)?;
        Ok(GaloisAction { layer: layer.to_string() })
    }

    pub fn layer(&self) -> &str {
        &self.layer
    }

    pub fn order(&self) -> u32 {
        2
    }

    pub fn apply_scalar(&self, c: &FieldScalar) -> Result<FieldScalar> {
        c.conjugate(&self.layer)
    }
}

/// Conjugates every coefficient; exponents and `∂`-powers are fixed.
pub fn galois_apply(sigma: &GaloisAction, a: &WeylElement) -> Result<WeylElement> {
    a.map_coefficients(|c| sigma.apply_scalar(c))
}

/// `(a + σ(a)) / 2`.
pub fn reynolds_project(sigma: &GaloisAction, a: &WeylElement) -> Result<WeylElement> {
    let half = a.algebra().field().ratio(1, 2)?;
    Ok((a + &galois_apply(sigma, a)?).scale(&half))
}
