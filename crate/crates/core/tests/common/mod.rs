//! Fixtures, seeded generators and independent oracles shared by the
//! integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet, VecDeque};

use expoweyl_core::expolyring::{ExpoMonomial, ExpoPoly, Ring, Variant};
use expoweyl_core::lattice::{LatticeBasis, LatticeVector};
use expoweyl_core::scalars::{AlgebraicSymbol, Field, FieldScalar};
use expoweyl_core::weylalg::{QMode, WeylAlgebra, WeylElement};
use expoweyl_core::wittalg::WittElement;
use rand::Rng;

pub const MODES: [QMode; 3] = [QMode::Classical, QMode::Generic, QMode::RootOfUnity(3)];

pub fn lv(c: &[i64]) -> LatticeVector {
    LatticeVector(c.to_vec())
}

/// Field with `√2`, the default symbols, and whatever `mode` needs.
pub fn field_for(mode: QMode, rank: usize) -> Field {
    let mut b = Field::builder().algebraic(AlgebraicSymbol::sqrt("√2", 2).unwrap());
    if let Some(s) = mode.required_algebraic() {
        b = b.algebraic(s);
    }
    b = b.default_transcendentals();
    for s in mode.required_transcendentals(rank) {
        if s != "q" {
            b = b.transcendental(s);
        }
    }
    b.build().unwrap()
}

/// Rank one, `A = Z`, `p = 1`, constant variant.
pub fn algebra(mode: QMode) -> WeylAlgebra {
    let f = field_for(mode, 1);
    let ring = Ring::new(LatticeBasis::new(vec![f.one()]).unwrap(), lv(&[1]), Variant::Constant).unwrap();
    WeylAlgebra::new(ring, mode).unwrap()
}

/// Rank two, `A = Z[√2]`, `p = 1`, constant variant.
pub fn sqrt2_algebra(mode: QMode) -> WeylAlgebra {
    let f = field_for(mode, 2);
    let basis = LatticeBasis::new(vec![f.one(), f.symbol("√2").unwrap()]).unwrap();
    let ring = Ring::new(basis, lv(&[1, 0]), Variant::Constant).unwrap();
    WeylAlgebra::new(ring, mode).unwrap()
}

/// A small random scalar: `a + b√2` times optionally `q^k` or `t`, over
/// an optional `1 + q` denominator.
pub fn scalar<R: Rng>(rng: &mut R, f: &Field, symbolic: bool) -> FieldScalar {
    let mut c = f.int(rng.gen_range(-3..=3));
    if rng.gen_bool(0.3) {
        c = &c + &(&f.int(rng.gen_range(-2..=2)) * &f.symbol("√2").unwrap());
    }
    if symbolic {
        if rng.gen_bool(0.3) {
            c = &c * &f.symbol("t").unwrap();
        }
        if rng.gen_bool(0.2) {
            c = &c + &f.symbol("q").unwrap();
        }
        if rng.gen_bool(0.15) {
            c = c.checked_div(&(&f.one() + &f.symbol("q").unwrap())).unwrap();
        }
    }
    c
}

pub fn nonzero_scalar<R: Rng>(rng: &mut R, f: &Field, symbolic: bool) -> FieldScalar {
    loop {
        let c = scalar(rng, f, symbolic);
        if !c.is_zero() {
            return c;
        }
    }
}

/// Random monomial with every exponent in `[-bound, bound]`.
pub fn monomial<R: Rng>(rng: &mut R, ring: &Ring, bound: i64, with_y: bool) -> ExpoMonomial {
    let mut coords = |n: usize| LatticeVector((0..n).map(|_| rng.gen_range(-bound..=bound)).collect());
    let e_part = coords(ring.e_len());
    let x_part = coords(ring.rank());
    let y_pow = if with_y { rng.gen_range(-1..=1) } else { 0 };
    ExpoMonomial { y_pow, e_part, x_part }
}

pub fn poly<R: Rng>(rng: &mut R, ring: &Ring, terms: usize, bound: i64, with_y: bool) -> ExpoPoly {
    let mut out = ring.zero();
    for _ in 0..terms {
        let m = monomial(rng, ring, bound, with_y);
        out = &out + &ring.term(m, scalar(rng, ring.field(), false));
    }
    out
}

pub fn weyl<R: Rng>(rng: &mut R, alg: &WeylAlgebra, terms: usize, bound: i64, max_d: u32) -> WeylElement {
    let mut out = alg.zero();
    for _ in 0..terms {
        let k = rng.gen_range(0..=max_d);
        let f = poly(rng, alg.ring(), 1, bound, true);
        out = &out + &alg.from_parts([(k, f)]);
    }
    out
}

pub fn witt<R: Rng>(rng: &mut R, ring: &Ring, terms: usize, bound: i64) -> WittElement {
    WittElement::new(poly(rng, ring, terms, bound, false)).unwrap()
}

/// Symbol-free random element of the Weyl algebra with coefficients in `Q(√2)`.
pub fn galois_element<R: Rng>(rng: &mut R, alg: &WeylAlgebra) -> WeylElement {
    let mut out = alg.zero();
    for _ in 0..rng.gen_range(1..=4) {
        let k = rng.gen_range(0..=2);
        let m = monomial(rng, alg.ring(), 1, true);
        out = &out + &alg.from_parts([(k, alg.ring().term(m, scalar(rng, alg.field(), false)))]);
    }
    out
}

// ---------------------------------------------------------------- oracles

/// Letters of the rewriting oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X,
    D,
    E,
}

/// Rewrites a word over `{x, ∂, e^x}` by repeatedly replacing the leftmost
/// `∂x` with `q x∂ + 1` and `∂e` with `e∂ + e`, then reads off the result.
pub fn rewrite_oracle(alg: &WeylAlgebra, word: &[Letter]) -> WeylElement {
    let f = alg.field();
    let q = alg.deformation().q.clone();
    let mut todo: Vec<(Vec<Letter>, FieldScalar)> = vec![(word.to_vec(), f.one())];
    let mut done: BTreeMap<(usize, usize, usize), FieldScalar> = BTreeMap::new();
    while let Some((w, c)) = todo.pop() {
        let pos = w.windows(2).position(|p| p[0] == Letter::D && p[1] != Letter::D);
        match pos {
            None => {
                let count = |l| w.iter().filter(|&&x| x == l).count();
                let key = (count(Letter::X), count(Letter::E), count(Letter::D));
                let e = done.entry(key).or_insert_with(|| f.zero());
                *e = &*e + &c;
            }
            Some(i) => {
                let g = w[i + 1];
                let mut swapped = w.clone();
                swapped.swap(i, i + 1);
                let mut dropped = w.clone();
                dropped.remove(i);
                match g {
                    Letter::X => {
                        todo.push((swapped, &c * &q));
                        dropped.remove(i);
                        todo.push((dropped, c));
                    }
                    Letter::E => {
                        todo.push((swapped, c.clone()));
                        todo.push((dropped, c));
                    }
                    Letter::D => unreachable!(),
                }
            }
        }
    }
    let ring = alg.ring();
    let mut out = alg.zero();
    for ((nx, ne, nd), c) in done {
        let m = ExpoMonomial { y_pow: 0, e_part: lv(&[ne as i64]), x_part: lv(&[nx as i64]) };
        out = &out + &alg.from_parts([(nd as u32, ring.term(m, c))]);
    }
    out
}

/// Generators of GL(2, Z) used by the breadth-first oracle.
const GL2_GENS: [[[i64; 2]; 2]; 6] = [
    [[1, 1], [0, 1]],
    [[1, -1], [0, 1]],
    [[1, 0], [1, 1]],
    [[1, 0], [-1, 1]],
    [[0, -1], [1, 0]],
    [[1, 0], [0, -1]],
];

/// Every vector reachable from `start` by words of length at most `depth`.
pub fn gl2_orbit(start: (i64, i64), depth: usize) -> HashSet<(i64, i64)> {
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([(start, 0usize)]);
    while let Some((v, d)) = queue.pop_front() {
        if d == depth {
            continue;
        }
        for g in &GL2_GENS {
            let w = (g[0][0] * v.0 + g[0][1] * v.1, g[1][0] * v.0 + g[1][1] * v.1);
            if seen.insert(w) {
                queue.push_back((w, d + 1));
            }
        }
    }
    seen
}

/// Multisets over `gens` (all negative integers) summing to `n`, by
/// explicit enumeration of non-increasing index sequences.
pub fn multiset_count_bruteforce(gens: &[i64], n: i64) -> u64 {
    fn go(gens: &[i64], start: usize, remaining: i64) -> u64 {
        if remaining == 0 {
            return 1;
        }
        let mut total = 0;
        for i in start..gens.len() {
            if gens[i] >= remaining {
                total += go(gens, i, remaining - gens[i]);
            }
        }
        total
    }
    go(gens, 0, n)
}

/// Dense integer polynomial product, coefficients from degree 0 upwards.
pub fn poly_mul_oracle(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub fn euclid(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        euclid(b, a % b)
    }
}
