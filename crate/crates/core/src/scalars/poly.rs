//! Sparse multivariate polynomials in the transcendental symbols with
//! coefficients in the algebraic layer, including a recursive gcd.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::numfield::{Alg, NumberField};
use crate::error::Result;

/// Exponents of the transcendental symbols, in declaration order.
pub(crate) type Mono = Vec<u32>;

/// Terms are ordered lexicographically on the exponent vector, so the last
/// entry of the map is the leading term.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct Poly {
    pub(crate) terms: BTreeMap<Mono, Alg>,
}

fn mono_mul(a: &Mono, b: &Mono) -> Mono {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn mono_div(a: &Mono, b: &Mono) -> Option<Mono> {
    a.iter().zip(b).map(|(x, y)| x.checked_sub(*y)).collect()
}

impl Poly {
    pub(crate) fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub(crate) fn constant(c: Alg, nvars: usize) -> Self {
        let mut terms = BTreeMap::new();
        if !NumberField::is_zero(&c) {
            terms.insert(vec![0; nvars], c);
        }
        Poly { terms }
    }

    pub(crate) fn monomial(m: Mono, c: Alg) -> Self {
        let mut terms = BTreeMap::new();
        if !NumberField::is_zero(&c) {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn is_constant(&self) -> bool {
        match self.terms.len() {
            0 => true,
            1 => self.terms.keys().next().unwrap().iter().all(|&e| e == 0),
            _ => false,
        }
    }

    /// The constant value if the polynomial has no transcendental part.
    pub(crate) fn constant_value(&self) -> Option<&Alg> {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.iter().all(|&e| e == 0) {
                return Some(c);
            }
        }
        None
    }

    pub(crate) fn is_one(&self) -> bool {
        self.constant_value().is_some_and(NumberField::is_one)
    }

    pub(crate) fn leading(&self) -> Option<(&Mono, &Alg)> {
        self.terms.last_key_value()
    }

    fn add_term(&mut self, m: Mono, c: Alg) {
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                if !NumberField::is_zero(&c) {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let s = NumberField::add(o.get(), &c);
                if NumberField::is_zero(&s) {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub(crate) fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub(crate) fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), NumberField::neg(c))).collect() }
    }

    pub(crate) fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), NumberField::neg(c));
        }
        out
    }

    pub(crate) fn mul(&self, other: &Poly, nf: &NumberField) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(mono_mul(ma, mb), nf.mul(ca, cb));
            }
        }
        out
    }

    pub(crate) fn scale(&self, c: &Alg, nf: &NumberField) -> Poly {
        if NumberField::is_zero(c) {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, a)| (m.clone(), nf.mul(a, c))).collect() }
    }

    pub(crate) fn map_coefficients(&self, f: impl Fn(&Alg) -> Alg) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    fn mul_term(&self, m: &Mono, c: &Alg, nf: &NumberField) -> Poly {
        Poly { terms: self.terms.iter().map(|(ma, a)| (mono_mul(ma, m), nf.mul(a, c))).collect() }
    }

    /// Quotient if `d` divides `self` exactly.
    pub(crate) fn div_exact(&self, d: &Poly, nf: &NumberField) -> Option<Poly> {
        let (dm, dc) = d.leading()?;
        let dinv = nf.inverse(dc).ok()?;
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let m = mono_div(rm, dm)?;
            let c = nf.mul(rc, &dinv);
            rem = rem.sub(&d.mul_term(&m, &c, nf));
            quot.add_term(m, c);
        }
        Some(quot)
    }

    /// Divide by the leading coefficient.
    pub(crate) fn monic(&self, nf: &NumberField) -> Result<Poly> {
        match self.leading() {
            None => Ok(Poly::zero()),
            Some((_, c)) if NumberField::is_one(c) => Ok(self.clone()),
            Some((_, c)) => Ok(self.scale(&nf.inverse(c)?, nf)),
        }
    }

    fn has_var(&self, v: usize) -> bool {
        self.terms.keys().any(|m| m[v] > 0)
    }

    fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|m| m[v]).max().unwrap_or(0)
    }

    /// Coefficients with respect to the variable `v`.
    fn coeffs_in(&self, v: usize) -> BTreeMap<u32, Poly> {
        let mut out: BTreeMap<u32, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut rest = m.clone();
            rest[v] = 0;
            out.entry(m[v]).or_insert_with(Poly::zero).add_term(rest, c.clone());
        }
        out
    }

    fn lead_coeff_in(&self, v: usize) -> Poly {
        let d = self.degree_in(v);
        self.coeffs_in(v).remove(&d).unwrap_or_else(Poly::zero)
    }

    fn content_in(&self, v: usize, nf: &NumberField) -> Poly {
        let mut g = Poly::zero();
        for c in self.coeffs_in(v).values() {
            g = gcd(&g, c, nf);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn primitive_in(&self, v: usize, nf: &NumberField) -> Poly {
        let c = self.content_in(v, nf);
        self.div_exact(&c, nf).expect("content divides")
    }

    fn var_power(v: usize, e: u32, nvars: usize, nf: &NumberField) -> Poly {
        let mut m = vec![0; nvars];
        m[v] = e;
        Poly::monomial(m, nf.one())
    }

    /// Pseudo-remainder of `self` by `b` viewed as polynomials in `v`.
    fn prem_in(&self, b: &Poly, v: usize, nf: &NumberField) -> Poly {
        let nvars = b.terms.keys().next().map_or(0, Vec::len);
        let db = b.degree_in(v);
        let lb = b.lead_coeff_in(v);
        let mut r = self.clone();
        while !r.is_zero() && r.degree_in(v) >= db {
            let dr = r.degree_in(v);
            let lr = r.lead_coeff_in(v);
            let shift = Self::var_power(v, dr - db, nvars, nf);
            r = r.mul(&lb, nf).sub(&lr.mul(&shift, nf).mul(b, nf));
        }
        r
    }
}

/// Monic greatest common divisor over the algebraic layer.
pub(crate) fn gcd(a: &Poly, b: &Poly, nf: &NumberField) -> Poly {
    if a.is_zero() {
        return b.monic(nf).unwrap_or_else(|_| b.clone());
    }
    if b.is_zero() {
        return a.monic(nf).unwrap_or_else(|_| a.clone());
    }
    let nvars = a.terms.keys().next().unwrap().len();
    if a.is_constant() || b.is_constant() {
        return Poly::constant(nf.one(), nvars);
    }
    if a.terms.len() == 1 || b.terms.len() == 1 {
        // gcd with a monomial is the common monomial factor.
        let mut m: Mono = vec![u32::MAX; nvars];
        for k in a.terms.keys().chain(b.terms.keys()) {
            for (x, y) in m.iter_mut().zip(k) {
                *x = (*x).min(*y);
            }
        }
        return Poly::monomial(m, nf.one());
    }
    let v = (0..nvars).find(|&v| a.has_var(v) || b.has_var(v)).unwrap();
    if !a.has_var(v) {
        return gcd(a, &b.content_in(v, nf), nf);
    }
    if !b.has_var(v) {
        return gcd(&a.content_in(v, nf), b, nf);
    }
    let ca = a.content_in(v, nf);
    let cb = b.content_in(v, nf);
    let c = gcd(&ca, &cb, nf);
    let mut pa = a.div_exact(&ca, nf).expect("content divides");
    let mut pb = b.div_exact(&cb, nf).expect("content divides");
    if pa.degree_in(v) < pb.degree_in(v) {
        core::mem::swap(&mut pa, &mut pb);
    }
    loop {
        let r = pa.prem_in(&pb, v, nf);
        if r.is_zero() {
            break;
        }
        if r.degree_in(v) == 0 {
            pb = Poly::constant(nf.one(), nvars);
            break;
        }
        pa = pb;
        pb = r.primitive_in(v, nf);
    }
    let g = c.mul(&pb.primitive_in(v, nf), nf);
    g.monic(nf).unwrap_or(g)
}
