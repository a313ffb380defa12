//! The commutative ring generated by `e^{αx}`, `x^β` (`α, β ∈ A`) and the
//! central unit `y`, stored as Laurent polynomials on exponent records.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::lattice::{embed_with, LatticeBasis, LatticeVector};
use crate::scalars::{Field, FieldScalar};

/// Which central generator is adjoined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Variant {
    /// `y = e^{x^p τ}` with `τ` a scalar symbol; `δ(y) = p τ x^{p-1} y`.
    Constant,
    /// `y = e^{x^p e^{tx}}`; the e-lattice gains a coordinate for `e^{tx}`
    /// whose embedding is the named symbol.
    Dynamic { t_symbol: String },
}

#[derive(Debug, PartialEq, Eq)]
pub struct RingConfig {
    pub basis: LatticeBasis,
    pub p: LatticeVector,
    pub variant: Variant,
    /// Embeddings of the e-part coordinates (the basis, plus `t` if dynamic).
    e_embed: Vec<FieldScalar>,
    tau: Option<FieldScalar>,
}

/// Shared handle on a ring configuration.
#[derive(Debug, Clone)]
pub struct Ring(Arc<RingConfig>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Ring {}

impl Ring {
    pub fn new(basis: LatticeBasis, p: LatticeVector, variant: Variant) -> Result<Self> {
        p.check_len(basis.rank())?;
        if p.is_zero() {
            return Err(Error::ZeroVector);
        }
        let field = basis.embeddings()[0].field().clone();
        let mut e_embed = basis.embeddings().to_vec();
        let tau = match &variant {
            Variant::Constant => Some(field.symbol("tau")?),
            Variant::Dynamic { t_symbol } => {
                let t = field.symbol(t_symbol)?;
                if e_embed.contains(&t) {
                    return Err(Error::InvalidBasis("t must differ from the basis embeddings"));
                }
                e_embed.push(t);
                None
            }
        };
        Ok(Ring(Arc::new(RingConfig { basis, p, variant, e_embed, tau })))
    }

    pub fn config(&self) -> &RingConfig {
        &self.0
    }

    pub fn field(&self) -> &Field {
        self.0.basis.embeddings()[0].field()
    }

    pub fn rank(&self) -> usize {
        self.0.basis.rank()
    }

    /// Number of e-part coordinates.
    pub fn e_len(&self) -> usize {
        self.0.e_embed.len()
    }

    /// Length of the flattened exponent vector `[y, e.., x..]`.
    pub fn exponent_dim(&self) -> usize {
        1 + self.e_len() + self.rank()
    }

    pub fn e_embeddings(&self) -> &[FieldScalar] {
        &self.0.e_embed
    }

    pub fn embed_x(&self, v: &LatticeVector) -> Result<FieldScalar> {
        self.0.basis.embed(v)
    }

    pub fn embed_e(&self, v: &LatticeVector) -> Result<FieldScalar> {
        embed_with(&self.0.e_embed, v)
    }

    pub fn zero(&self) -> ExpoPoly {
        ExpoPoly { ring: self.clone(), terms: BTreeMap::new() }
    }

    pub fn one(&self) -> ExpoPoly {
        self.scalar(self.field().one())
    }

    pub fn scalar(&self, c: FieldScalar) -> ExpoPoly {
        self.term(self.unit_monomial(), c)
    }

    pub fn unit_monomial(&self) -> ExpoMonomial {
        ExpoMonomial { y_pow: 0, e_part: LatticeVector::zero(self.e_len()), x_part: LatticeVector::zero(self.rank()) }
    }

    pub fn term(&self, m: ExpoMonomial, c: FieldScalar) -> ExpoPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        ExpoPoly { ring: self.clone(), terms }
    }

    pub fn monomial(&self, m: ExpoMonomial) -> ExpoPoly {
        self.term(m, self.field().one())
    }

    pub fn check_monomial(&self, m: &ExpoMonomial) -> Result<()> {
        m.e_part.check_len(self.e_len())?;
        m.x_part.check_len(self.rank())
    }

    /// `x^α`.
    pub fn x_pow(&self, alpha: &LatticeVector) -> Result<ExpoPoly> {
        alpha.check_len(self.rank())?;
        let mut m = self.unit_monomial();
        m.x_part = alpha.clone();
        Ok(self.monomial(m))
    }

    /// `e^{αx}`.
    pub fn exp(&self, alpha: &LatticeVector) -> Result<ExpoPoly> {
        alpha.check_len(self.e_len())?;
        let mut m = self.unit_monomial();
        m.e_part = alpha.clone();
        Ok(self.monomial(m))
    }

    /// `y^k`.
    pub fn y_pow(&self, k: i64) -> ExpoPoly {
        let mut m = self.unit_monomial();
        m.y_pow = k;
        self.monomial(m)
    }

    /// `δ(y) / y`.
    fn log_derivative_y(&self) -> Result<ExpoPoly> {
        let cfg = &self.0;
        let p_val = self.embed_x(&cfg.p)?;
        let x_pm1 = cfg.p.checked_sub(&LatticeVector::unit(self.rank(), 0))?;
        match &cfg.variant {
            Variant::Constant => {
                let tau = cfg.tau.clone().expect("constant variant has tau");
                let mut m = self.unit_monomial();
                m.x_part = x_pm1;
                Ok(self.term(m, &p_val * &tau))
            }
            Variant::Dynamic { .. } => {
                let t = cfg.e_embed.last().expect("dynamic variant has t").clone();
                let e_t = LatticeVector::unit(self.e_len(), self.e_len() - 1);
                let mut a = self.unit_monomial();
                a.e_part = e_t.clone();
                a.x_part = x_pm1;
                let mut b = self.unit_monomial();
                b.e_part = e_t;
                b.x_part = cfg.p.clone();
                Ok(self.term(a, p_val) + self.term(b, t))
            }
        }
    }

    /// `δ` restricted to the `y, e` part of a monomial, returned as a
    /// multiplier: `δ(y^a e^{α}) = y^a e^{α} * (a δ(y)/y + emb(α))`.
    pub(crate) fn ye_log_derivative(&self, m: &ExpoMonomial) -> Result<ExpoPoly> {
        let mut out = self.scalar(self.embed_e(&m.e_part)?);
        if m.y_pow != 0 {
            out = out + self.log_derivative_y()?.scale(&self.field().int(m.y_pow));
        }
        Ok(out)
    }
}

/// Exponent record `y^{y_pow} e^{e_part x} x^{x_part}`; the derived order is
/// lexicographic on `(y_pow, e_part, x_part)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExpoMonomial {
    pub y_pow: i64,
    pub e_part: LatticeVector,
    pub x_part: LatticeVector,
}

impl ExpoMonomial {
    pub fn is_one(&self) -> bool {
        self.y_pow == 0 && self.e_part.is_zero() && self.x_part.is_zero()
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        Ok(ExpoMonomial {
            y_pow: self.y_pow.checked_add(other.y_pow).ok_or(Error::Overflow)?,
            e_part: self.e_part.checked_add(&other.e_part)?,
            x_part: self.x_part.checked_add(&other.x_part)?,
        })
    }

    pub fn inverse(&self) -> Self {
        ExpoMonomial { y_pow: -self.y_pow, e_part: self.e_part.neg(), x_part: self.x_part.neg() }
    }

    /// `|y_pow| + |e_part|_1 + |x_part|_1`.
    pub fn size(&self) -> u64 {
        self.y_pow.unsigned_abs() + self.e_part.l1() + self.x_part.l1()
    }

    /// Flattened exponent vector `[y, e.., x..]`.
    pub fn to_exponents(&self) -> Vec<i64> {
        let mut v = Vec::with_capacity(1 + self.e_part.len() + self.x_part.len());
        v.push(self.y_pow);
        v.extend_from_slice(&self.e_part.0);
        v.extend_from_slice(&self.x_part.0);
        v
    }

    pub fn from_exponents(v: &[i64], e_len: usize) -> Self {
        ExpoMonomial {
            y_pow: v[0],
            e_part: LatticeVector(v[1..1 + e_len].to_vec()),
            x_part: LatticeVector(v[1 + e_len..].to_vec()),
        }
    }
}

impl fmt::Display for ExpoMonomial {
    /// `Y^a*E(..)*X(..)` with trivial factors omitted; empty for 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| {
            if first {
                first = false;
                Ok(())
            } else {
                f.write_str("*")
            }
        };
        match self.y_pow {
            0 => {}
            1 => {
                sep(f)?;
                f.write_str("Y")?;
            }
            k => {
                sep(f)?;
                write!(f, "Y^{k}")?;
            }
        }
        if !self.e_part.is_zero() {
            sep(f)?;
            write!(f, "E({})", self.e_part)?;
        }
        if !self.x_part.is_zero() {
            sep(f)?;
            write!(f, "X({})", self.x_part)?;
        }
        Ok(())
    }
}

/// `(y_pow + Σ e_part, x_part)`: the bidegree read off a monomial. The
/// `∂`-power is accepted for symmetry with Weyl monomials and ignored.
pub fn multidegree(m: &ExpoMonomial, _d_pow: u32) -> (i64, LatticeVector) {
    (m.y_pow + m.e_part.0.iter().sum::<i64>(), m.x_part.clone())
}

/// An element of the expolynomial ring.
#[derive(Clone, PartialEq, Eq)]
pub struct ExpoPoly {
    ring: Ring,
    terms: BTreeMap<ExpoMonomial, FieldScalar>,
}

impl ExpoPoly {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &BTreeMap<ExpoMonomial, FieldScalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().next().is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    /// A single monomial with nonzero coefficient.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Largest monomial size occurring, 0 for the zero polynomial.
    pub fn max_size(&self) -> u64 {
        self.terms.keys().map(ExpoMonomial::size).max().unwrap_or(0)
    }

    pub fn constant_term(&self) -> FieldScalar {
        self.terms.get(&self.ring.unit_monomial()).cloned().unwrap_or_else(|| self.ring.field().zero())
    }

    pub(crate) fn add_term(&mut self, m: ExpoMonomial, c: FieldScalar) {
        use alloc::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::ConfigMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let (mut out, small) = if self.len() >= other.len() { (self.clone(), other) } else { (other.clone(), self) };
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = self.ring.zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.checked_mul(mb)?, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &FieldScalar) -> Self {
        if c.is_zero() {
            return self.ring.zero();
        }
        ExpoPoly { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &ExpoMonomial) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            terms.insert(k.checked_mul(m)?, c.clone());
        }
        Ok(ExpoPoly { ring: self.ring.clone(), terms })
    }

    pub fn map_coefficients(&self, f: impl Fn(&FieldScalar) -> Result<FieldScalar>) -> Result<Self> {
        let mut out = self.ring.zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c)?);
        }
        Ok(out)
    }

    /// The derivation `δ` extending `δ(x^α) = α x^{α-1}`, `δ(e^{αx}) = α e^{αx}`
    /// and the configured rule for `y`.
    pub fn delta(&self) -> Result<Self> {
        let ring = &self.ring;
        let e1 = LatticeVector::unit(ring.rank(), 0);
        let mut out = ring.zero();
        for (m, c) in &self.terms {
            let beta = ring.embed_x(&m.x_part)?;
            if !beta.is_zero() {
                let mut lowered = m.clone();
                lowered.x_part = m.x_part.checked_sub(&e1)?;
                out.add_term(lowered, c * &beta);
            }
            let ye = ring.ye_log_derivative(m)?;
            for (k, a) in &ye.terms {
                out.add_term(k.checked_mul(m)?, a * c);
            }
        }
        Ok(out)
    }
}

macro_rules! ring_binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr<&ExpoPoly> for &ExpoPoly {
            type Output = ExpoPoly;
            fn $m(self, rhs: &ExpoPoly) -> ExpoPoly {
                self.$f(rhs).expect("operands from the same ring")
            }
        }
        impl $tr<ExpoPoly> for ExpoPoly {
            type Output = ExpoPoly;
            fn $m(self, rhs: ExpoPoly) -> ExpoPoly {
                (&self).$f(&rhs).expect("operands from the same ring")
            }
        }
    };
}

ring_binop!(Add, add, try_add);
ring_binop!(Mul, mul, try_mul);

impl Sub<&ExpoPoly> for &ExpoPoly {
    type Output = ExpoPoly;
    fn sub(self, rhs: &ExpoPoly) -> ExpoPoly {
        self + &(-rhs)
    }
}

impl Sub<ExpoPoly> for ExpoPoly {
    type Output = ExpoPoly;
    fn sub(self, rhs: ExpoPoly) -> ExpoPoly {
        &self - &rhs
    }
}

impl Neg for &ExpoPoly {
    type Output = ExpoPoly;
    fn neg(self) -> ExpoPoly {
        ExpoPoly { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for ExpoPoly {
    type Output = ExpoPoly;
    fn neg(self) -> ExpoPoly {
        -&self
    }
}

/// Writes `c*mono` with unit coefficients elided and compound coefficients
/// parenthesised.
pub(crate) fn write_term(out: &mut String, c: &FieldScalar, mono: &str) {
    use core::fmt::Write;
    let first = out.is_empty();
    let body = if mono.is_empty() {
        c.to_string()
    } else if c.is_one() {
        String::from(mono)
    } else if (-c).is_one() {
        alloc::format!("-{mono}")
    } else if c.is_product_form() {
        alloc::format!("{c}*{mono}")
    } else {
        alloc::format!("({c})*{mono}")
    };
    if first {
        out.push_str(&body);
    } else if let Some(rest) = body.strip_prefix('-') {
        let _ = write!(out, " - {rest}");
    } else {
        let _ = write!(out, " + {body}");
    }
}

impl fmt::Display for ExpoPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (m, c) in self.terms.iter().rev() {
            write_term(&mut out, c, &alloc::format!("{m}"));
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for ExpoPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExpoPoly({self})")
    }
}
