//! Exact coefficient field: the rationals extended by algebraic symbols
//! (each reduced by its minimal polynomial) and then by formal
//! transcendental symbols, stored as reduced fractions of polynomials.

mod numfield;
mod poly;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use numfield::{cyclotomic, AlgebraicSymbol};
use numfield::{Alg, NumberField};
use poly::{gcd, Poly};

use crate::error::{Error, Result};

/// Default transcendental symbols: the deformation parameter `t`, the
/// invertible scalar `tau` standing for `e^t`, the quantum parameter `q` and
/// the weight parameter `lambda`.
pub const DEFAULT_TRANSCENDENTALS: [&str; 4] = ["t", "tau", "q", "lambda"];

#[derive(Debug, PartialEq, Eq)]
struct FieldSpec {
    nf: NumberField,
    transcendental: Vec<String>,
}

/// Shared handle on a configured coefficient field.
#[derive(Debug, Clone)]
pub struct Field(Arc<FieldSpec>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Field {}

#[derive(Debug, Default, Clone)]
pub struct FieldBuilder {
    algebraic: Vec<AlgebraicSymbol>,
    transcendental: Vec<String>,
}

impl FieldBuilder {
    pub fn algebraic(mut self, sym: AlgebraicSymbol) -> Self {
        self.algebraic.push(sym);
        self
    }

    pub fn transcendental(mut self, name: impl Into<String>) -> Self {
        self.transcendental.push(name.into());
        self
    }

    pub fn default_transcendentals(mut self) -> Self {
        for s in DEFAULT_TRANSCENDENTALS {
            self.transcendental.push(s.to_string());
        }
        self
    }

    pub fn build(self) -> Result<Field> {
        let mut seen: Vec<&str> = Vec::new();
        for name in self.algebraic.iter().map(|a| a.name.as_str()).chain(self.transcendental.iter().map(String::as_str)) {
            if seen.contains(&name) {
                return Err(Error::DuplicateSymbol(name.to_string()));
            }
            seen.push(name);
        }
        Ok(Field(Arc::new(FieldSpec { nf: NumberField::new(self.algebraic), transcendental: self.transcendental })))
    }
}

impl Field {
    pub fn builder() -> FieldBuilder {
        FieldBuilder::default()
    }

    /// The rationals extended by the default transcendental symbols only.
    pub fn standard() -> Field {
        Field::builder().default_transcendentals().build().expect("distinct default symbols")
    }

    fn nf(&self) -> &NumberField {
        &self.0.nf
    }

    fn nvars(&self) -> usize {
        self.0.transcendental.len()
    }

    pub fn algebraic_symbols(&self) -> &[AlgebraicSymbol] {
        &self.0.nf.symbols
    }

    pub fn transcendental_symbols(&self) -> &[String] {
        &self.0.transcendental
    }

    pub fn has_symbol(&self, name: &str) -> bool {
        self.symbol(name).is_ok()
    }

    fn from_poly(&self, num: Poly) -> FieldScalar {
        FieldScalar { field: self.clone(), num, den: Poly::constant(self.nf().one(), self.nvars()) }
    }

    pub fn zero(&self) -> FieldScalar {
        self.from_poly(Poly::zero())
    }

    pub fn one(&self) -> FieldScalar {
        self.int(1)
    }

    pub fn int(&self, n: i64) -> FieldScalar {
        self.from_rational(BigRational::from_integer(n.into()))
    }

    pub fn from_rational(&self, r: BigRational) -> FieldScalar {
        self.from_poly(Poly::constant(self.nf().from_rational(r), self.nvars()))
    }

    pub fn ratio(&self, n: i64, d: i64) -> Result<FieldScalar> {
        if d == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.from_rational(BigRational::new(n.into(), d.into())))
    }

    /// The scalar named by `name`, algebraic or transcendental.
    pub fn symbol(&self, name: &str) -> Result<FieldScalar> {
        let nf = self.nf();
        if let Some(s) = nf.symbols.iter().position(|a| a.name == name) {
            let mut a = nf.zero();
            a[nf.basis_index_of_symbol(s)] = BigRational::one();
            return Ok(self.from_poly(Poly::constant(a, self.nvars())));
        }
        if let Some(v) = self.0.transcendental.iter().position(|t| t == name) {
            let mut m = vec![0; self.nvars()];
            m[v] = 1;
            return Ok(self.from_poly(Poly::monomial(m, nf.one())));
        }
        Err(Error::UnknownSymbol(name.to_string()))
    }
}

/// An element of the coefficient field.
///
/// Always stored reduced: numerator and denominator are coprime and the
/// denominator has leading coefficient one, which makes structural equality
/// coincide with equality of field elements.
#[derive(Clone)]
pub struct FieldScalar {
    field: Field,
    num: Poly,
    den: Poly,
}

impl FieldScalar {
    pub fn field(&self) -> &Field {
        &self.field
    }

    fn build(field: &Field, num: Poly, den: Poly) -> Result<FieldScalar> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let nf = field.nf();
        if num.is_zero() {
            return Ok(field.zero());
        }
        if let Some(c) = den.constant_value() {
            if NumberField::is_one(c) {
                return Ok(FieldScalar { field: field.clone(), num, den });
            }
            let inv = nf.inverse(c)?;
            return Ok(field.from_poly(num.scale(&inv, nf)));
        }
        let g = gcd(&num, &den, nf);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g, nf).expect("gcd divides"), den.div_exact(&g, nf).expect("gcd divides"))
        };
        let lc = den.leading().expect("nonzero").1.clone();
        if !NumberField::is_one(&lc) {
            let inv = nf.inverse(&lc)?;
            num = num.scale(&inv, nf);
            den = den.scale(&inv, nf);
        }
        Ok(FieldScalar { field: field.clone(), num, den })
    }

    fn same_field(&self, other: &Self) {
        assert!(self.field == other.field, "scalars from different fields");
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the scalar is a rational number.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if !self.den.is_one() {
            return None;
        }
        let c = self.num.constant_value()?;
        NumberField::is_rational(c).then(|| c[0].clone())
    }

    /// True when no transcendental symbol occurs.
    pub fn is_algebraic(&self) -> bool {
        self.den.is_constant() && self.num.is_constant()
    }

    /// Names of the transcendental symbols occurring in the reduced form.
    pub fn transcendentals_used(&self) -> Vec<&str> {
        let names = &self.field.0.transcendental;
        (0..names.len())
            .filter(|&v| self.num.terms.keys().chain(self.den.terms.keys()).any(|m| m[v] > 0))
            .map(|v| names[v].as_str())
            .collect()
    }

    /// `num / den` with coprime parts; only the leading coefficient of `den` is normalized.
    fn from_coprime(field: &Field, num: Poly, den: Poly) -> FieldScalar {
        let nf = field.nf();
        let lc = den.leading().expect("nonzero denominator").1;
        if NumberField::is_one(lc) {
            return FieldScalar { field: field.clone(), num, den };
        }
        let inv = nf.inverse(lc).expect("nonzero leading coefficient");
        FieldScalar { field: field.clone(), num: num.scale(&inv, nf), den: den.scale(&inv, nf) }
    }

    pub fn checked_add(&self, other: &Self) -> FieldScalar {
        self.same_field(other);
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::build(&self.field, self.num.add(&other.num), self.den.clone()).expect("nonzero denominator");
        }
        let nf = self.field.nf();
        // a/b + c/d = (a d' + c b') / (b d') with g = gcd(b, d), b = g b', d = g d';
        // any common factor of the result divides g.
        let g = gcd(&self.den, &other.den, nf);
        if g.is_one() {
            let num = self.num.mul(&other.den, nf).add(&other.num.mul(&self.den, nf));
            return Self::from_coprime(&self.field, num, self.den.mul(&other.den, nf));
        }
        let b1 = self.den.div_exact(&g, nf).expect("gcd divides");
        let d1 = other.den.div_exact(&g, nf).expect("gcd divides");
        let num = self.num.mul(&d1, nf).add(&other.num.mul(&b1, nf));
        if num.is_zero() {
            return self.field.zero();
        }
        let h = gcd(&num, &g, nf);
        let den = self.den.mul(&d1, nf);
        if h.is_one() {
            return Self::from_coprime(&self.field, num, den);
        }
        Self::from_coprime(&self.field, num.div_exact(&h, nf).expect("gcd divides"), den.div_exact(&h, nf).expect("gcd divides"))
    }

    pub fn checked_mul(&self, other: &Self) -> FieldScalar {
        self.same_field(other);
        if self.is_zero() || other.is_zero() {
            return self.field.zero();
        }
        let nf = self.field.nf();
        // Cross-cancel: gcd(a, d) and gcd(c, b) are the only possible common factors.
        let cancel = |n: &Poly, d: &Poly| -> (Poly, Poly) {
            if d.is_one() || n.is_constant() {
                return (n.clone(), d.clone());
            }
            let g = gcd(n, d, nf);
            if g.is_one() {
                (n.clone(), d.clone())
            } else {
                (n.div_exact(&g, nf).expect("gcd divides"), d.div_exact(&g, nf).expect("gcd divides"))
            }
        };
        let (a, d) = cancel(&self.num, &other.den);
        let (c, b) = cancel(&other.num, &self.den);
        Self::from_coprime(&self.field, a.mul(&c, nf), b.mul(&d, nf))
    }

    pub fn inv(&self) -> Result<FieldScalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_coprime(&self.field, self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<FieldScalar> {
        Ok(self.checked_mul(&other.inv()?))
    }

    /// Powers of a reduced fraction stay reduced, so no gcd is needed.
    pub fn pow(&self, e: i64) -> Result<FieldScalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let nf = self.field.nf();
        let power = |p: &Poly| {
            let mut n = e.unsigned_abs();
            let mut acc = Poly::constant(nf.one(), self.field.nvars());
            let mut sq = p.clone();
            while n > 0 {
                if n & 1 == 1 {
                    acc = acc.mul(&sq, nf);
                }
                n >>= 1;
                if n > 0 {
                    sq = sq.mul(&sq, nf);
                }
            }
            acc
        };
        if base.is_zero() {
            return Ok(if e == 0 { self.field.one() } else { base });
        }
        Ok(Self::from_coprime(&self.field, power(&base.num), power(&base.den)))
    }

    /// Galois conjugation on the quadratic layer named `layer`: the symbol
    /// is sent to its other root and everything else is fixed.
    pub fn conjugate(&self, layer: &str) -> Result<FieldScalar> {
        let nf = self.field.nf();
        let s = nf
            .symbols
            .iter()
            .position(|a| a.name == layer && a.degree() == 2)
            .ok_or_else(|| Error::UnconfiguredLayer(layer.to_string()))?;
        let num = self.num.map_coefficients(|c| nf.conjugate(c, s));
        let den = self.den.map_coefficients(|c| nf.conjugate(c, s));
        Self::build(&self.field, num, den)
    }

    /// Replace the transcendental symbol `name` by `value`.
    pub fn substitute(&self, name: &str, value: &FieldScalar) -> Result<FieldScalar> {
        let v = self
            .field
            .0
            .transcendental
            .iter()
            .position(|t| t == name)
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))?;
        let eval = |p: &Poly| -> FieldScalar {
            let mut acc = self.field.zero();
            for (m, c) in &p.terms {
                let mut rest = m.clone();
                rest[v] = 0;
                let term = self.field.from_poly(Poly::monomial(rest, c.clone()));
                acc = &acc + &(&term * &value.pow(m[v] as i64).expect("nonnegative power"));
            }
            acc
        };
        eval(&self.num).checked_div(&eval(&self.den))
    }

    fn num_is_single_term(&self) -> bool {
        self.num.terms.len() == 1 && self.num.terms.values().next().is_some_and(|c| c.iter().filter(|x| !x.is_zero()).count() == 1)
    }

    /// True when the printed form has no top-level sum, so it can be used as
    /// a factor without parentheses.
    pub fn is_product_form(&self) -> bool {
        !self.den.is_one() || self.num_is_single_term() || self.is_zero()
    }

    /// True when the printed form starts with a minus sign.
    pub fn is_negative_form(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        render_poly(&self.field, &self.num).starts_with('-')
    }
}

impl PartialEq for FieldScalar {
    fn eq(&self, other: &Self) -> bool {
        self.num == other.num && self.den == other.den
    }
}

impl Eq for FieldScalar {}

impl PartialOrd for FieldScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Structural order on reduced forms; used only for canonical map keys.
impl Ord for FieldScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.den, &self.num).cmp(&(&other.den, &other.num))
    }
}

impl fmt::Debug for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldScalar({self})")
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&FieldScalar> for &FieldScalar {
            type Output = FieldScalar;
            fn $m(self, rhs: &FieldScalar) -> FieldScalar {
                $body(self, rhs)
            }
        }
        impl $tr<FieldScalar> for FieldScalar {
            type Output = FieldScalar;
            fn $m(self, rhs: FieldScalar) -> FieldScalar {
                $body(&self, &rhs)
            }
        }
        impl $tr<&FieldScalar> for FieldScalar {
            type Output = FieldScalar;
            fn $m(self, rhs: &FieldScalar) -> FieldScalar {
                $body(&self, rhs)
            }
        }
    };
}

binop!(Add, add, |a: &FieldScalar, b: &FieldScalar| a.checked_add(b));
binop!(Mul, mul, |a: &FieldScalar, b: &FieldScalar| a.checked_mul(b));
binop!(Sub, sub, |a: &FieldScalar, b: &FieldScalar| a.checked_add(&-b));

impl Neg for &FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        FieldScalar { field: self.field.clone(), num: self.num.neg(), den: self.den.clone() }
    }
}

impl Neg for FieldScalar {
    type Output = FieldScalar;
    fn neg(self) -> FieldScalar {
        -&self
    }
}

fn render_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Product of named symbols with exponents, e.g. `q^2*t`; empty for 1.
fn render_symbols<'a>(parts: impl Iterator<Item = (&'a str, u32)>) -> String {
    let mut out = String::new();
    for (name, e) in parts.filter(|(_, e)| *e > 0) {
        if !out.is_empty() {
            out.push('*');
        }
        out.push_str(name);
        if e > 1 {
            out.push_str(&format!("^{e}"));
        }
    }
    out
}

/// `coefficient * factor` with unit coefficients elided.
fn render_scaled(c: &BigRational, factor: &str) -> String {
    if factor.is_empty() {
        return render_rational(c);
    }
    if c.is_one() {
        factor.to_string()
    } else if (-c).is_one() {
        format!("-{factor}")
    } else {
        format!("{}*{factor}", render_rational(c))
    }
}

fn join_terms(terms: &[String]) -> String {
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        if i == 0 {
            out.push_str(t);
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(t);
        }
    }
    out
}

fn alg_terms(nf: &NumberField, a: &Alg) -> Vec<String> {
    a.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(idx, c)| {
            let exps = nf.exponents(idx);
            let sym = render_symbols(nf.symbols.iter().zip(&exps).map(|(s, &e)| (s.name.as_str(), e as u32)));
            render_scaled(c, &sym)
        })
        .collect()
}

fn render_poly(field: &Field, p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let nf = field.nf();
    let names = &field.0.transcendental;
    let mut terms = Vec::new();
    for (m, c) in p.terms.iter().rev() {
        let mono = render_symbols(names.iter().map(String::as_str).zip(m.iter().copied()));
        if mono.is_empty() {
            terms.extend(alg_terms(nf, c));
            continue;
        }
        let parts = alg_terms(nf, c);
        if parts.len() == 1 {
            let nz: Vec<(usize, &BigRational)> = c.iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
            let (idx, r) = nz[0];
            if idx == 0 {
                terms.push(render_scaled(r, &mono));
            } else {
                terms.push(format!("{}*{mono}", parts[0]));
            }
        } else {
            terms.push(format!("({})*{mono}", join_terms(&parts)));
        }
    }
    join_terms(&terms)
}

fn poly_is_single_symbol(p: &Poly) -> bool {
    p.terms.len() == 1 && {
        let (m, c) = p.terms.iter().next().unwrap();
        NumberField::is_one(c) && m.iter().filter(|&&e| e > 0).count() == 1
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = render_poly(&self.field, &self.num);
        if self.den.is_one() {
            return f.write_str(&num);
        }
        let num = if self.num_is_single_term() { num } else { format!("({num})") };
        let den = render_poly(&self.field, &self.den);
        if poly_is_single_symbol(&self.den) {
            write!(f, "{num}/{den}")
        } else {
            write!(f, "{num}/({den})")
        }
    }
}

impl From<&FieldScalar> for Option<BigInt> {
    fn from(s: &FieldScalar) -> Self {
        s.as_rational().filter(|r| r.is_integer()).map(|r| r.numer().clone())
    }
}
