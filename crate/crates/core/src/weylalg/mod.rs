//! The Ore extension `R[∂; σ, δ_q]` over the expolynomial ring, with an
//! optional `q`-twist on the powers of `x`.
//!
//! Elements are kept normally ordered as `Σ f_k ∂^k`; the product pushes
//! `∂` to the right with `∂ f = σ(f) ∂ + δ_q(f)`.

mod search;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::expolyring::{write_term, ExpoMonomial, ExpoPoly, Ring};
use crate::lattice::LatticeVector;
use crate::scalars::{cyclotomic, AlgebraicSymbol, Field, FieldScalar};

pub use search::{center_up_to_degree, ideal_saturate, IdealReport};

/// Name of the algebraic symbol standing for a primitive root of unity.
pub const OMEGA: &str = "ω";

/// Name of the formal symbol `q^{b_i}` for basis coordinate `i >= 1`.
pub fn twist_symbol(i: usize) -> String {
    format!("q_{i}")
}

/// How `q` is specialised.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QMode {
    Classical,
    Generic,
    /// `q` a primitive `N`-th root of unity.
    RootOfUnity(u32),
}

impl QMode {
    /// The algebraic symbol that must be configured for this mode, if any.
    pub fn required_algebraic(&self) -> Option<AlgebraicSymbol> {
        match *self {
            QMode::RootOfUnity(n) if n >= 3 => Some(AlgebraicSymbol::root_of_unity(OMEGA, n).expect("cyclotomic of degree >= 2")),
            _ => None,
        }
    }

    /// Transcendental symbols this mode needs on a lattice of rank `rank`.
    pub fn required_transcendentals(&self, rank: usize) -> Vec<String> {
        let mut out = Vec::new();
        if self.is_classical() {
            return out;
        }
        if *self == QMode::Generic {
            out.push(String::from("q"));
        }
        out.extend((1..rank).map(twist_symbol));
        out
    }

    pub fn is_classical(&self) -> bool {
        matches!(self, QMode::Classical | QMode::RootOfUnity(1))
    }
}

impl fmt::Display for QMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QMode::Classical => f.write_str("classical"),
            QMode::Generic => f.write_str("generic"),
            QMode::RootOfUnity(n) => write!(f, "root:{n}"),
        }
    }
}

#[derive(Debug, PartialEq, Eq)]
pub struct DeformationConfig {
    pub mode: QMode,
    /// Value of `q`.
    pub q: FieldScalar,
    /// `σ(x^{b_i}) = twist[i] x^{b_i}`.
    pub twist: Vec<FieldScalar>,
}

impl DeformationConfig {
    pub fn new(field: &Field, mode: QMode, rank: usize) -> Result<Self> {
        let q = match mode {
            QMode::Classical | QMode::RootOfUnity(1) => field.one(),
            QMode::Generic => field.symbol("q")?,
            QMode::RootOfUnity(0) => return Err(Error::InvalidArgument(String::from("root of unity order must be positive"))),
            QMode::RootOfUnity(2) => field.int(-1),
            QMode::RootOfUnity(n) => {
                let sym = field
                    .algebraic_symbols()
                    .iter()
                    .find(|a| a.name == OMEGA)
                    .ok_or_else(|| Error::UnknownSymbol(String::from(OMEGA)))?;
                let phi: Vec<_> = cyclotomic(n).into_iter().map(|c| num_rational::BigRational::from_integer(c.into())).collect();
                if sym.min_poly != phi {
                    return Err(Error::InvalidMinPoly { symbol: String::from(OMEGA), reason: "does not match the requested root of unity" });
                }
                field.symbol(OMEGA)?
            }
        };
        let mut twist = vec![q.clone()];
        for i in 1..rank {
            twist.push(if mode.is_classical() { field.one() } else { field.symbol(&twist_symbol(i))? });
        }
        Ok(DeformationConfig { mode, q, twist })
    }

    pub fn is_classical(&self) -> bool {
        self.mode.is_classical()
    }
}

#[derive(Debug, PartialEq, Eq)]
struct WeylInner {
    ring: Ring,
    deformation: DeformationConfig,
}

/// Shared handle on a configured Weyl-type algebra.
#[derive(Debug, Clone)]
pub struct WeylAlgebra(Arc<WeylInner>);

impl PartialEq for WeylAlgebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for WeylAlgebra {}

/// A single surface generator, for building words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Token {
    Scalar(FieldScalar),
    X(LatticeVector),
    E(LatticeVector),
    Y(i64),
    D,
}

impl WeylAlgebra {
    pub fn new(ring: Ring, mode: QMode) -> Result<Self> {
        let deformation = DeformationConfig::new(ring.field(), mode, ring.rank())?;
        Ok(WeylAlgebra(Arc::new(WeylInner { ring, deformation })))
    }

    pub fn ring(&self) -> &Ring {
        &self.0.ring
    }

    pub fn field(&self) -> &Field {
        self.0.ring.field()
    }

    pub fn deformation(&self) -> &DeformationConfig {
        &self.0.deformation
    }

    pub fn mode(&self) -> QMode {
        self.0.deformation.mode
    }

    pub fn zero(&self) -> WeylElement {
        WeylElement { alg: self.clone(), parts: BTreeMap::new() }
    }

    pub fn one(&self) -> WeylElement {
        self.from_poly(self.ring().one())
    }

    pub fn scalar(&self, c: FieldScalar) -> WeylElement {
        self.from_poly(self.ring().scalar(c))
    }

    pub fn from_poly(&self, f: ExpoPoly) -> WeylElement {
        self.from_parts([(0, f)])
    }

    pub fn from_parts(&self, parts: impl IntoIterator<Item = (u32, ExpoPoly)>) -> WeylElement {
        let mut out = self.zero();
        for (k, f) in parts {
            out.add_part(k, f);
        }
        out
    }

    /// `∂^k`.
    pub fn d_pow(&self, k: u32) -> WeylElement {
        self.from_parts([(k, self.ring().one())])
    }

    pub fn x_pow(&self, alpha: &LatticeVector) -> Result<WeylElement> {
        Ok(self.from_poly(self.ring().x_pow(alpha)?))
    }

    pub fn exp(&self, alpha: &LatticeVector) -> Result<WeylElement> {
        Ok(self.from_poly(self.ring().exp(alpha)?))
    }

    pub fn y_pow(&self, k: i64) -> WeylElement {
        self.from_poly(self.ring().y_pow(k))
    }

    pub fn token(&self, t: &Token) -> Result<WeylElement> {
        match t {
            Token::Scalar(c) => Ok(self.scalar(c.clone())),
            Token::X(a) => self.x_pow(a),
            Token::E(a) => self.exp(a),
            Token::Y(k) => Ok(self.y_pow(*k)),
            Token::D => Ok(self.d_pow(1)),
        }
    }

    /// `q^{⟨γ⟩} = Π twist_i^{γ_i}`.
    fn twist_factor(&self, gamma: &LatticeVector) -> Result<FieldScalar> {
        let d = self.deformation();
        let mut acc = self.field().one();
        if d.is_classical() {
            return Ok(acc);
        }
        for (t, &g) in d.twist.iter().zip(&gamma.0) {
            if g != 0 {
                acc = &acc * &t.pow(g)?;
            }
        }
        Ok(acc)
    }

    /// `δ_q(x^γ) = c(γ) x^{γ-1}`: the embedding of `γ` when classical,
    /// `(q^{⟨γ⟩} - 1)/(q - 1)` otherwise.
    fn x_coefficient(&self, gamma: &LatticeVector) -> Result<FieldScalar> {
        let d = self.deformation();
        if d.is_classical() {
            return self.ring().embed_x(gamma);
        }
        let one = self.field().one();
        (&self.twist_factor(gamma)? - &one).checked_div(&(&d.q - &one))
    }

    /// The twist `σ`: scales `x^γ` by `q^{⟨γ⟩}` and fixes `e^{αx}` and `y`.
    pub fn sigma_twist(&self, f: &ExpoPoly) -> Result<ExpoPoly> {
        if self.deformation().is_classical() {
            return Ok(f.clone());
        }
        let mut out = self.ring().zero();
        for (m, c) in f.terms() {
            out.add_term(m.clone(), c * &self.twist_factor(&m.x_part)?);
        }
        Ok(out)
    }

    /// `δ_q(u x^γ) = u c(γ) x^{γ-1} + δ(u) x^γ` for `u` in the `y, e` part.
    pub fn delta_q(&self, f: &ExpoPoly) -> Result<ExpoPoly> {
        let ring = self.ring();
        let e1 = LatticeVector::unit(ring.rank(), 0);
        let mut out = ring.zero();
        for (m, c) in f.terms() {
            let cx = self.x_coefficient(&m.x_part)?;
            if !cx.is_zero() {
                let mut lowered = m.clone();
                lowered.x_part = m.x_part.checked_sub(&e1)?;
                out.add_term(lowered, c * &cx);
            }
            for (k, a) in ring.ye_log_derivative(m)?.terms() {
                out.add_term(k.checked_mul(m)?, a * c);
            }
        }
        Ok(out)
    }

    fn check(&self, other: &WeylAlgebra) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ConfigMismatch)
        }
    }

    /// Product of generator tokens, normally ordered.
    pub fn normal_form(&self, tokens: &[Token]) -> Result<WeylElement> {
        let mut acc = self.one();
        for t in tokens {
            acc = acc.try_mul(&self.token(t)?)?;
        }
        Ok(acc)
    }
}

/// A normally ordered element `Σ f_k ∂^k`.
#[derive(Clone, PartialEq, Eq)]
pub struct WeylElement {
    alg: WeylAlgebra,
    parts: BTreeMap<u32, ExpoPoly>,
}

impl WeylElement {
    pub fn algebra(&self) -> &WeylAlgebra {
        &self.alg
    }

    pub fn parts(&self) -> &BTreeMap<u32, ExpoPoly> {
        &self.parts
    }

    pub fn part(&self, k: u32) -> ExpoPoly {
        self.parts.get(&k).cloned().unwrap_or_else(|| self.alg.ring().zero())
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.parts.len() == 1 && self.parts.get(&0).is_some_and(ExpoPoly::is_one)
    }

    /// True when the element is a scalar multiple of 1.
    pub fn is_scalar(&self) -> bool {
        self.parts.is_empty()
            || (self.parts.len() == 1 && self.parts.get(&0).is_some_and(|f| f.len() == 1 && f.terms().keys().next().unwrap().is_one()))
    }

    pub fn d_degree(&self) -> Option<u32> {
        self.parts.keys().next_back().copied()
    }

    /// Largest `∂`-degree plus monomial size over all terms.
    pub fn max_size(&self) -> u64 {
        self.parts.iter().map(|(k, f)| *k as u64 + f.max_size()).max().unwrap_or(0)
    }

    /// Terms keyed by `(∂-degree, monomial)`.
    pub fn to_sparse(&self) -> BTreeMap<(u32, ExpoMonomial), FieldScalar> {
        let mut out = BTreeMap::new();
        for (k, f) in &self.parts {
            for (m, c) in f.terms() {
                out.insert((*k, m.clone()), c.clone());
            }
        }
        out
    }

    pub fn from_sparse(alg: &WeylAlgebra, v: &BTreeMap<(u32, ExpoMonomial), FieldScalar>) -> WeylElement {
        let mut parts: BTreeMap<u32, ExpoPoly> = BTreeMap::new();
        for ((k, m), c) in v {
            parts.entry(*k).or_insert_with(|| alg.ring().zero()).add_term(m.clone(), c.clone());
        }
        alg.from_parts(parts)
    }

    fn add_part(&mut self, k: u32, f: ExpoPoly) {
        if f.is_zero() {
            return;
        }
        match self.parts.remove(&k) {
            None => {
                self.parts.insert(k, f);
            }
            Some(g) => {
                let s = &g + &f;
                if !s.is_zero() {
                    self.parts.insert(k, s);
                }
            }
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.alg.check(&other.alg)?;
        let mut out = self.clone();
        for (k, f) in &other.parts {
            out.add_part(*k, f.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &FieldScalar) -> Self {
        self.alg.from_parts(self.parts.iter().map(|(k, f)| (*k, f.scale(c))))
    }

    /// `f · self` for `f` in the coefficient ring.
    pub fn left_mul_poly(&self, f: &ExpoPoly) -> Result<Self> {
        let mut out = self.alg.zero();
        for (k, g) in &self.parts {
            out.add_part(*k, f.try_mul(g)?);
        }
        Ok(out)
    }

    /// `∂ · self`.
    pub fn left_mul_d(&self) -> Result<Self> {
        let mut out = self.alg.zero();
        for (k, f) in &self.parts {
            out.add_part(k + 1, self.alg.sigma_twist(f)?);
            out.add_part(*k, self.alg.delta_q(f)?);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.alg.check(&other.alg)?;
        let mut out = self.alg.zero();
        let Some(top) = self.d_degree() else { return Ok(out) };
        // cur = ∂^i · other
        let mut cur = other.clone();
        for i in 0..=top {
            if let Some(f) = self.parts.get(&i) {
                out = out.try_add(&cur.left_mul_poly(f)?)?;
            }
            if i < top {
                cur = cur.left_mul_d()?;
            }
        }
        Ok(out)
    }

    pub fn commutator(&self, other: &Self) -> Result<Self> {
        Ok(&self.try_mul(other)? - &other.try_mul(self)?)
    }

    pub fn map_coefficients(&self, f: impl Fn(&FieldScalar) -> Result<FieldScalar>) -> Result<Self> {
        let mut parts = Vec::new();
        for (k, g) in &self.parts {
            parts.push((*k, g.map_coefficients(&f)?));
        }
        Ok(self.alg.from_parts(parts))
    }
}

pub fn weyl_mul(a: &WeylElement, b: &WeylElement) -> Result<WeylElement> {
    a.try_mul(b)
}

pub fn commutator(a: &WeylElement, b: &WeylElement) -> Result<WeylElement> {
    a.commutator(b)
}

impl Add<&WeylElement> for &WeylElement {
    type Output = WeylElement;
    fn add(self, rhs: &WeylElement) -> WeylElement {
        self.try_add(rhs).expect("operands from the same algebra")
    }
}

impl Mul<&WeylElement> for &WeylElement {
    type Output = WeylElement;
    fn mul(self, rhs: &WeylElement) -> WeylElement {
        self.try_mul(rhs).expect("operands from the same algebra")
    }
}

impl Neg for &WeylElement {
    type Output = WeylElement;
    fn neg(self) -> WeylElement {
        self.alg.from_parts(self.parts.iter().map(|(k, f)| (*k, -f)))
    }
}

impl Sub<&WeylElement> for &WeylElement {
    type Output = WeylElement;
    fn sub(self, rhs: &WeylElement) -> WeylElement {
        self + &(-rhs)
    }
}

impl fmt::Display for WeylElement {
    /// Terms by `∂`-degree descending, then monomial order descending.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (k, g) in self.parts.iter().rev() {
            let d = match k {
                0 => String::new(),
                1 => String::from("D"),
                k => format!("D^{k}"),
            };
            for (m, c) in g.terms().iter().rev() {
                let mono = format!("{m}");
                let word = match (mono.is_empty(), d.is_empty()) {
                    (true, _) => d.clone(),
                    (false, true) => mono,
                    (false, false) => format!("{mono}*{d}"),
                };
                write_term(&mut out, c, &word);
            }
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement({self})")
    }
}

/// Certificate that `[D, X] = I` has no `n`-dimensional solution: the trace
/// of any commutator vanishes while the trace of the identity is `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionReport {
    pub dimension: u64,
    pub lhs: FieldScalar,
    pub rhs: FieldScalar,
}

/// Builds the truncated differentiation and multiplication-by-`x` matrices on
/// `span{1, x, ..., x^{n-1}}` and compares `tr(DX - XD)` with `tr(I_n)`.
pub fn trace_obstruction(field: &Field, n: i64) -> Result<ObstructionReport> {
    if n <= 0 {
        return Err(Error::InvalidArgument(format!("dimension must be positive, got {n}")));
    }
    let size = n as usize;
    let mut d = vec![vec![0i64; size]; size];
    let mut x = vec![vec![0i64; size]; size];
    for k in 1..size {
        d[k - 1][k] = k as i64;
        x[k][k - 1] = 1;
    }
    let prod = |a: &[Vec<i64>], b: &[Vec<i64>], i: usize| -> i64 { (0..size).map(|k| a[i][k] * b[k][i]).sum() };
    let trace: i64 = (0..size).map(|i| prod(&d, &x, i) - prod(&x, &d, i)).sum();
    Ok(ObstructionReport { dimension: n as u64, lhs: field.int(trace), rhs: field.int(n) })
}

/// Values of a character of the coefficient ring on its generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingCharacter {
    /// `χ(x^{b_i})` per basis coordinate.
    pub x: Vec<FieldScalar>,
    /// `χ(e^{b_i x})` per e-coordinate.
    pub e: Vec<FieldScalar>,
    pub y: FieldScalar,
}

impl RingCharacter {
    pub fn eval_monomial(&self, m: &ExpoMonomial) -> Result<FieldScalar> {
        let mut acc = self.y.pow(m.y_pow)?;
        for (v, &k) in self.e.iter().zip(&m.e_part.0).chain(self.x.iter().zip(&m.x_part.0)) {
            if k != 0 {
                acc = &acc * &v.pow(k)?;
            }
        }
        Ok(acc)
    }

    pub fn eval(&self, f: &ExpoPoly) -> Result<FieldScalar> {
        let mut acc = f.ring().field().zero();
        for (m, c) in f.terms() {
            acc = &acc + &(c * &self.eval_monomial(m)?);
        }
        Ok(acc)
    }
}

fn binomial(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Action of `a` on `M_χ = A ⊗_R F_χ` in the basis `∂^k ⊗ 1`.
///
/// `a ∂^k` is normally ordered, then each `f ∂^j` is rewritten as
/// `Σ_i (-1)^i C(j,i) ∂^{j-i} δ^i(f)` so the coefficients can be evaluated
/// through `χ`.
pub fn induced_module_apply(
    a: &WeylElement,
    v: &BTreeMap<u32, FieldScalar>,
    chi: &RingCharacter,
) -> Result<BTreeMap<u32, FieldScalar>> {
    let alg = a.algebra();
    if !alg.deformation().is_classical() {
        return Err(Error::NonClassicalMode);
    }
    let mut out: BTreeMap<u32, FieldScalar> = BTreeMap::new();
    for (&k, vk) in v {
        if vk.is_zero() {
            continue;
        }
        let w = a.try_mul(&alg.d_pow(k))?;
        for (&j, f) in w.parts() {
            let mut g = f.clone();
            for i in 0..=j {
                let c = chi.eval(&g)?;
                if !c.is_zero() {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    let coef = &(&c * &alg.field().int(sign * binomial(j, i))) * vk;
                    let e = out.entry(j - i).or_insert_with(|| alg.field().zero());
                    *e = &*e + &coef;
                }
                if i < j {
                    g = g.delta()?;
                }
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expolyring::Variant;
    use crate::lattice::LatticeBasis;

    pub(crate) fn algebra(mode: QMode) -> WeylAlgebra {
        let mut b = Field::builder().default_transcendentals();
        if let Some(s) = mode.required_algebraic() {
            b = b.algebraic(s);
        }
        let f = b.build().unwrap();
        let basis = LatticeBasis::new(vec![f.one()]).unwrap();
        let ring = Ring::new(basis, LatticeVector(vec![1]), Variant::Constant).unwrap();
        WeylAlgebra::new(ring, mode).unwrap()
    }

    fn x(a: &WeylAlgebra, k: i64) -> WeylElement {
        a.x_pow(&LatticeVector(vec![k])).unwrap()
    }

    #[test]
    fn canonical_commutation() {
        let a = algebra(QMode::Classical);
        let nf = a.normal_form(&[Token::D, Token::X(LatticeVector(vec![1]))]).unwrap();
        assert_eq!(nf.to_string(), "X(1)*D + 1");
        assert!(a.d_pow(1).commutator(&x(&a, 1)).unwrap().is_one());
        let nf = a.normal_form(&[Token::D, Token::D, Token::X(LatticeVector(vec![1]))]).unwrap();
        assert_eq!(nf.to_string(), "X(1)*D^2 + 2*D");
    }

    #[test]
    fn generic_q_relations() {
        let a = algebra(QMode::Generic);
        let q = a.field().symbol("q").unwrap();
        let d = a.d_pow(1);
        let x1 = x(&a, 1);
        let lhs = &(&d * &x1) - &(&x1 * &d).scale(&q);
        assert!(lhs.is_one());
        // ∂x² = q²x²∂ + (1+q)x
        let got = &d * &x(&a, 2);
        let expected = &(&x(&a, 2) * &d).scale(&(&q * &q)) + &x1.scale(&(&a.field().one() + &q));
        assert_eq!(got, expected);
        // [x, ∂] = (1-q)x∂ - 1
        let c = x1.commutator(&d).unwrap();
        let expected = &(&x1 * &d).scale(&(&a.field().one() - &q)) - &a.one();
        assert_eq!(c, expected);
    }

    #[test]
    fn products() {
        let a = algebra(QMode::Classical);
        let d = a.d_pow(1);
        let e = a.exp(&LatticeVector(vec![1])).unwrap();
        assert_eq!(&d * &e, &(&e * &d) + &e);
        let xd = &x(&a, 1) * &d;
        assert_eq!(&xd * &xd, &(&x(&a, 2) * &a.d_pow(2)) + &xd);
        assert_eq!(&a.one() * &xd, xd);
        assert!(e.commutator(&a.y_pow(1)).unwrap().is_zero());
    }

    #[test]
    fn sigma_twist_values() {
        let a = algebra(QMode::Generic);
        let q = a.field().symbol("q").unwrap();
        let r = a.ring();
        let x1 = r.x_pow(&LatticeVector(vec![1])).unwrap();
        assert_eq!(a.sigma_twist(&x1).unwrap(), x1.scale(&q));
        let x2 = r.x_pow(&LatticeVector(vec![2])).unwrap();
        assert_eq!(a.sigma_twist(&x2).unwrap(), x2.scale(&(&q * &q)));
        let e = r.exp(&LatticeVector(vec![1])).unwrap();
        assert_eq!(a.sigma_twist(&e).unwrap(), e);
    }

    #[test]
    fn obstruction() {
        let f = Field::standard();
        for n in 1..=10 {
            let r = trace_obstruction(&f, n).unwrap();
            assert!(r.lhs.is_zero());
            assert_eq!(r.rhs, f.int(n));
        }
        assert!(trace_obstruction(&f, 0).is_err());
    }

    #[test]
    fn induced_module() {
        let a = algebra(QMode::Classical);
        let f = a.field().clone();
        let lambda = f.symbol("lambda").unwrap();
        let chi = RingCharacter { x: vec![lambda.clone()], e: vec![f.int(3)], y: f.one() };
        let v0: BTreeMap<u32, FieldScalar> = [(0, f.one())].into();
        let v1: BTreeMap<u32, FieldScalar> = [(1, f.one())].into();
        let got = induced_module_apply(&x(&a, 1), &v0, &chi).unwrap();
        assert_eq!(got, [(0, lambda.clone())].into());
        let got = induced_module_apply(&x(&a, 1), &v1, &chi).unwrap();
        assert_eq!(got, [(1, lambda.clone()), (0, f.int(-1))].into());
        let e = a.exp(&LatticeVector(vec![1])).unwrap();
        assert_eq!(induced_module_apply(&e, &v0, &chi).unwrap(), [(0, f.int(3))].into());
        let g = algebra(QMode::Generic);
        assert_eq!(induced_module_apply(&g.one(), &v0, &chi), Err(Error::NonClassicalMode));
    }
}
