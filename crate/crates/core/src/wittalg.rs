//! The Witt-type Lie algebra spanned by `e^{αx} x^β ∂`.

use core::fmt;

use crate::error::{Error, Result};
use crate::expolyring::{ExpoMonomial, ExpoPoly, Ring};
use crate::lattice::LatticeVector;

/// `f ∂` with `f` free of `y`.
#[derive(Clone, PartialEq, Eq)]
pub struct WittElement {
    coeff: ExpoPoly,
}

impl WittElement {
    pub fn new(coeff: ExpoPoly) -> Result<Self> {
        if coeff.terms().keys().any(|m| m.y_pow != 0) {
            return Err(Error::InvalidArgument("Witt coefficients must not involve y".into()));
        }
        Ok(WittElement { coeff })
    }

    /// `e^{αx} x^β ∂`.
    pub fn basis(ring: &Ring, alpha: &LatticeVector, beta: &LatticeVector) -> Result<Self> {
        ring.check_monomial(&ExpoMonomial { y_pow: 0, e_part: alpha.clone(), x_part: beta.clone() })?;
        Ok(WittElement { coeff: ring.monomial(ExpoMonomial { y_pow: 0, e_part: alpha.clone(), x_part: beta.clone() }) })
    }

    pub fn coeff(&self) -> &ExpoPoly {
        &self.coeff
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        Ok(WittElement { coeff: self.coeff.try_add(&other.coeff)? })
    }

    pub fn neg(&self) -> Self {
        WittElement { coeff: -&self.coeff }
    }

    pub fn scale(&self, c: &crate::scalars::FieldScalar) -> Self {
        WittElement { coeff: self.coeff.scale(c) }
    }
}

/// `[f∂, g∂] = (f δ(g) - g δ(f)) ∂`.
pub fn witt_bracket(a: &WittElement, b: &WittElement) -> Result<WittElement> {
    let f = &a.coeff;
    let g = &b.coeff;
    let c = f.try_mul(&g.delta()?)?.try_add(&-&g.try_mul(&f.delta()?)?)?;
    Ok(WittElement { coeff: c })
}

/// `[e^{αx}x^β∂, e^{γx}x^δ∂] = e^{(α+γ)x}((γ-α) x^{β+δ} + (δ-β) x^{β+δ-1}) ∂`.
pub fn structure_constants(
    ring: &Ring,
    alpha: &LatticeVector,
    beta: &LatticeVector,
    gamma: &LatticeVector,
    delta: &LatticeVector,
) -> Result<WittElement> {
    let e = alpha.checked_add(gamma)?;
    let x = beta.checked_add(delta)?;
    let x1 = x.checked_sub(&LatticeVector::unit(ring.rank(), 0))?;
    let c0 = ring.embed_e(&gamma.checked_sub(alpha)?)?;
    let c1 = ring.embed_x(&delta.checked_sub(beta)?)?;
    let t0 = ring.term(ExpoMonomial { y_pow: 0, e_part: e.clone(), x_part: x }, c0);
    let t1 = ring.term(ExpoMonomial { y_pow: 0, e_part: e, x_part: x1 }, c1);
    Ok(WittElement { coeff: t0.try_add(&t1)? })
}

/// `[a,[b,c]] + [b,[c,a]] + [c,[a,b]]`.
pub fn jacobi_defect(a: &WittElement, b: &WittElement, c: &WittElement) -> Result<WittElement> {
    let t1 = witt_bracket(a, &witt_bracket(b, c)?)?;
    let t2 = witt_bracket(b, &witt_bracket(c, a)?)?;
    let t3 = witt_bracket(c, &witt_bracket(a, b)?)?;
    t1.try_add(&t2)?.try_add(&t3)
}

impl fmt::Display for WittElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff.is_zero() {
            return f.write_str("0");
        }
        let mut out = alloc::string::String::new();
        for (m, c) in self.coeff.terms().iter().rev() {
            let mono = alloc::format!("{m}");
            let word = if mono.is_empty() { alloc::string::String::from("D") } else { alloc::format!("{mono}*D") };
            crate::expolyring::write_term(&mut out, c, &word);
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for WittElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WittElement({self})")
    }
}
