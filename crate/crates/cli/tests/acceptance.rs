//! Acceptance criteria, one test each. Every test also prints a single
//! `criterion N: PASS|FAIL` line with details and its runtime budget.

#[path = "../../core/tests/common/mod.rs"]
mod common;
mod support;

use std::time::{Duration, Instant};

use common::{
    algebra, galois_element, gl2_orbit, lv, multiset_count_bruteforce, nonzero_scalar, poly, rewrite_oracle, scalar,
    sqrt2_algebra, weyl, witt, Letter, MODES,
};
use expoweyl::{parse_element, print_canonical};
use expoweyl_core::expolyring::Ring;
use expoweyl_core::lattice::{apply_matrix, UnimodularMatrix};
use expoweyl_core::repthy::{bgg_character, duality_on_characters, verma_character_rank1, verma_weight_dim, NegativePart};
use expoweyl_core::ringmaps::{
    apply_automorphism, compose, galois_apply, iso_decide, reynolds_project, GaloisAction, RingAutomorphism,
};
use expoweyl_core::scalars::FieldScalar;
use expoweyl_core::weylalg::{center_up_to_degree, ideal_saturate, trace_obstruction, QMode, Token, WeylAlgebra};
use expoweyl_core::wittalg::{jacobi_defect, structure_constants, witt_bracket, WittElement};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5eed_2024;

fn verdict(n: u32, title: &str, pass: bool, detail: &str, start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    let ok = pass && elapsed <= budget;
    let word = if ok { "PASS" } else { "FAIL" };
    eprintln!("criterion {n}: {word} {title} ({detail}; {elapsed:.2?} of {budget:?})");
    assert!(ok, "criterion {n} failed: {detail}; {elapsed:.2?} of {budget:?}");
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

#[test]
fn criterion_01_canonical_commutation() {
    let start = Instant::now();
    let classical = algebra(QMode::Classical);
    let generic = algebra(QMode::Generic);
    let a = parse_element("D*X(1) - X(1)*D", &classical).unwrap();
    let b = parse_element("D*X(1) - q*X(1)*D", &generic).unwrap();
    let detail = format!("q=1: {a}; generic: {b}");
    verdict(1, "canonical commutation", a.is_one() && b.is_one(), &detail, start, secs(1));
}

#[test]
fn criterion_02_rewriting_oracle() {
    let start = Instant::now();
    let mut words: Vec<Vec<Letter>> = vec![vec![]];
    let mut frontier = words.clone();
    for _ in 0..6 {
        frontier = frontier
            .iter()
            .flat_map(|w| {
                [Letter::X, Letter::D, Letter::E].map(|l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
        words.extend(frontier.iter().cloned());
    }
    let mut checked = 0;
    let mut bad = Vec::new();
    for mode in MODES {
        let alg = algebra(mode);
        for w in &words {
            let tokens: Vec<Token> = w
                .iter()
                .map(|l| match l {
                    Letter::X => Token::X(lv(&[1])),
                    Letter::D => Token::D,
                    Letter::E => Token::E(lv(&[1])),
                })
                .collect();
            checked += 1;
            if alg.normal_form(&tokens).unwrap() != rewrite_oracle(&alg, w) {
                bad.push(format!("{mode} {w:?}"));
            }
        }
    }
    let detail = format!("{} of {checked} words agree", checked - bad.len());
    verdict(2, "rewriting oracle equivalence", bad.is_empty(), &detail, start, secs(60));
}

#[test]
fn criterion_03_ore_associativity() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut parts = Vec::new();
    let mut all = true;
    for mode in MODES {
        let alg = algebra(mode);
        let mut good = 0;
        for _ in 0..200 {
            let a = weyl(&mut rng, &alg, 2, 1, 2);
            let b = weyl(&mut rng, &alg, 2, 1, 2);
            let c = weyl(&mut rng, &alg, 2, 1, 2);
            if &(&a * &b) * &c == &a * &(&b * &c) {
                good += 1;
            }
        }
        all &= good == 200;
        parts.push(format!("{mode} {good}/200"));
    }
    verdict(3, "Ore associativity", all, &parts.join(", "), start, secs(120));
}

#[test]
fn criterion_04_sigma_leibniz() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 4);
    let mut parts = Vec::new();
    let mut all = true;
    for mode in MODES {
        let alg = algebra(mode);
        let r = alg.ring();
        let mut good = 0;
        for _ in 0..300 {
            let f = poly(&mut rng, r, 3, 2, true);
            let g = poly(&mut rng, r, 3, 2, true);
            let lhs = alg.delta_q(&(&f * &g)).unwrap();
            let rhs = &(&alg.sigma_twist(&f).unwrap() * &alg.delta_q(&g).unwrap()) + &(&alg.delta_q(&f).unwrap() * &g);
            if lhs == rhs {
                good += 1;
            }
        }
        all &= good == 300;
        parts.push(format!("{mode} {good}/300"));
    }
    verdict(4, "sigma-Leibniz rule", all, &parts.join(", "), start, secs(60));
}

#[test]
fn criterion_05_jacobi_and_structure_constants() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 5);
    let alg = algebra(QMode::Classical);
    let r = alg.ring();
    let mut jacobi_ok = 0;
    for _ in 0..300 {
        let (a, b, c) = (witt(&mut rng, r, 2, 2), witt(&mut rng, r, 2, 2), witt(&mut rng, r, 2, 2));
        if jacobi_defect(&a, &b, &c).unwrap().is_zero() {
            jacobi_ok += 1;
        }
    }
    let mut sc_ok = 0;
    let mut sc_total = 0;
    for a in -2..=2 {
        for b in -2..=2 {
            for c in -2..=2 {
                for d in -2..=2 {
                    let u = WittElement::basis(r, &lv(&[a]), &lv(&[b])).unwrap();
                    let v = WittElement::basis(r, &lv(&[c]), &lv(&[d])).unwrap();
                    let closed = structure_constants(r, &lv(&[a]), &lv(&[b]), &lv(&[c]), &lv(&[d])).unwrap();
                    sc_total += 1;
                    if witt_bracket(&u, &v).unwrap() == closed {
                        sc_ok += 1;
                    }
                }
            }
        }
    }
    let detail = format!("Jacobi {jacobi_ok}/300, structure constants {sc_ok}/{sc_total}");
    verdict(5, "Jacobi identity", jacobi_ok == 300 && sc_ok == sc_total, &detail, start, secs(120));
}

#[test]
fn criterion_06_iso_vs_bfs() {
    let start = Instant::now();
    let box3: Vec<(i64, i64)> =
        (-3..=3).flat_map(|a| (-3..=3).map(move |b| (a, b))).filter(|&v| v != (0, 0)).collect();
    let (mut agree, mut total, mut witnesses) = (0, 0, 0);
    let mut witness_ok = true;
    for &p1 in &box3 {
        let orbit = gl2_orbit(p1, 12);
        for &p2 in &box3 {
            total += 1;
            let expected = orbit.contains(&p2) || orbit.contains(&(-p2.0, -p2.1));
            let (u, v) = (lv(&[p1.0, p1.1]), lv(&[p2.0, p2.1]));
            let d = iso_decide(&u, &v).unwrap();
            if d.isomorphic == expected {
                agree += 1;
            }
            if d.isomorphic {
                witnesses += 1;
                let img = d.witness.as_ref().map(|w| apply_matrix(w, &u).unwrap());
                witness_ok &= img.as_ref() == Some(&v) || img == Some(v.neg());
            }
        }
    }
    let detail = format!("{agree}/{total} pairs agree, {witnesses} witnesses verified: {witness_ok}");
    verdict(6, "isomorphism decision vs BFS", agree == total && witness_ok, &detail, start, secs(300));
}

#[test]
fn criterion_07_galois_descent() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
    let alg = sqrt2_algebra(QMode::Classical);
    let sigma = GaloisAction::new(alg.field(), "√2").unwrap();
    let (mut idem, mut kernel, mut rational) = (0, 0, 0);
    for _ in 0..200 {
        let a = galois_element(&mut rng, &alg);
        let p = reynolds_project(&sigma, &a).unwrap();
        if reynolds_project(&sigma, &p).unwrap() == p {
            idem += 1;
        }
        // p lies in ker(id - σ), and a does exactly when a is its own projection.
        let fixed = galois_apply(&sigma, &a).unwrap() == a;
        if galois_apply(&sigma, &p).unwrap() == p && fixed == (p == a) {
            kernel += 1;
        }
        let q = a.map_coefficients(|c| Ok(c.as_rational().map_or_else(|| alg.field().one(), |r| alg.field().from_rational(r)))).unwrap();
        if galois_apply(&sigma, &q).unwrap() == q && reynolds_project(&sigma, &q).unwrap() == q {
            rational += 1;
        }
    }
    let detail = format!("idempotent {idem}/200, image = kernel {kernel}/200, rational fixed {rational}/200");
    verdict(7, "Galois descent", idem == 200 && kernel == 200 && rational == 200, &detail, start, secs(60));
}

fn random_automorphism<R: Rng>(rng: &mut R, r: &Ring) -> RingAutomorphism {
    let n = r.exponent_dim();
    let torus = (0..n).map(|_| nonzero_scalar(rng, r.field(), true)).collect();
    let mut m = UnimodularMatrix::identity(n);
    for _ in 0..rng.gen_range(0..6) {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let mut rows = UnimodularMatrix::identity(n).rows().to_vec();
        if i == j {
            rows[i][i] = -1;
        } else {
            rows[i][j] = rng.gen_range(-2..=2);
        }
        m = UnimodularMatrix::new(rows).unwrap().mul(&m).unwrap();
    }
    RingAutomorphism::new(torus, m).unwrap()
}

#[test]
fn criterion_08_torus_homomorphism_and_injectivity() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 8);
    let alg = sqrt2_algebra(QMode::Classical);
    let r = alg.ring();
    let n = r.exponent_dim();
    let mut hom = 0;
    for _ in 0..100 {
        let g = random_automorphism(&mut rng, r);
        let h = random_automorphism(&mut rng, r);
        let f = poly(&mut rng, r, 3, 2, true);
        let direct = apply_automorphism(&g, &apply_automorphism(&h, &f).unwrap()).unwrap();
        if apply_automorphism(&compose(&g, &h).unwrap(), &f).unwrap() == direct {
            hom += 1;
        }
    }
    // Every torus with entries from a small pool: fixing all e^{e_i x} forces the e-entries to be 1.
    let f = r.field();
    let pool: [FieldScalar; 3] = [f.one(), f.int(-1), f.symbol("lambda").unwrap()];
    let (mut inj, mut tori) = (true, 0);
    let mut idx = vec![0usize; n];
    loop {
        tori += 1;
        let torus: Vec<FieldScalar> = idx.iter().map(|&i| pool[i].clone()).collect();
        let g = RingAutomorphism::new(torus.clone(), UnimodularMatrix::identity(n)).unwrap();
        let fixes = (0..r.e_len()).all(|i| {
            let m = r.exp(&expoweyl_core::lattice::LatticeVector::unit(r.e_len(), i)).unwrap();
            apply_automorphism(&g, &m).unwrap() == m
        });
        let trivial = torus[1..=r.e_len()].iter().all(FieldScalar::is_one);
        inj &= fixes == trivial;
        let mut k = 0;
        while k < n && idx[k] == pool.len() - 1 {
            idx[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
        idx[k] += 1;
    }
    let detail = format!("compose {hom}/100, injectivity over {tori} tori: {inj}");
    verdict(8, "torus homomorphism and injectivity", hom == 100 && inj, &detail, start, secs(60));
}

#[test]
fn criterion_09_trace_obstruction() {
    let start = Instant::now();
    let f = algebra(QMode::Classical).field().clone();
    let ok = (1..=10).all(|n| {
        let r = trace_obstruction(&f, n).unwrap();
        r.lhs.is_zero() && r.rhs == f.int(n) && r.lhs != r.rhs
    });
    verdict(9, "trace obstruction", ok, "n = 1..10, lhs 0 and rhs n", start, secs(1));
}

#[test]
fn criterion_10_center_under_deformation() {
    let start = Instant::now();
    let names = |alg: &WeylAlgebra| -> Vec<String> {
        center_up_to_degree(alg, 3).unwrap().iter().map(print_canonical).collect()
    };
    let generic = names(&algebra(QMode::Generic));
    let root3 = names(&algebra(QMode::RootOfUnity(3)));
    let root2 = names(&algebra(QMode::RootOfUnity(2)));
    let has = |v: &[String], s: &str| v.iter().any(|x| x == s);
    let ok = generic == ["1"] && has(&root3, "X(3)") && has(&root3, "X(-3)") && has(&root2, "X(2)");
    let detail = format!("generic {generic:?}, root:3 {root3:?}, root:2 {root2:?}");
    verdict(10, "center under deformation", ok, &detail, start, secs(300));
}

#[test]
fn criterion_11_simplicity_witnesses() {
    let start = Instant::now();
    let alg = algebra(QMode::Generic);
    let mut parts = Vec::new();
    let mut ok = true;
    for g in ["X(1)", "D", "E(1)", "X(1)*D + 1"] {
        let r = ideal_saturate(&parse_element(g, &alg).unwrap(), 4).unwrap();
        ok &= r.contains_one;
        parts.push(format!("{g}: {}", r.contains_one));
    }
    verdict(11, "simplicity witnesses at D = 4", ok, &parts.join(", "), start, secs(300));
}

#[test]
fn criterion_12_verma_dimensions() {
    let start = Instant::now();
    let mut ok = true;
    let mut checked = 0;
    for gens in [vec![-1], vec![-1, -2]] {
        let neg = NegativePart::new(gens.iter().map(|&g| lv(&[g])).collect()).unwrap();
        for depth in 0..=20 {
            checked += 1;
            let got = verma_weight_dim(&neg, &lv(&[-depth])).unwrap();
            ok &= got == multiset_count_bruteforce(&gens, -depth) as u128;
            if gens.len() == 1 {
                ok &= got == 1;
            }
        }
    }
    verdict(12, "Verma dimensions vs enumeration", ok, &format!("{checked} weights"), start, secs(60));
}

#[test]
fn criterion_13_bgg_character() {
    let start = Instant::now();
    let mut ok = true;
    for n in 0..=5u64 {
        let h = n as i64;
        let depth = 2 * n + 4;
        let lowest = h - depth as i64;
        let ch = bgg_character(n, depth);
        let expected = verma_character_rank1(h, lowest).difference(&verma_character_rank1(-h - 2, lowest)).unwrap();
        let support: Vec<i64> = ch.dims().keys().rev().copied().collect();
        ok &= ch == expected;
        ok &= support == (-h - 1..=h).rev().collect::<Vec<_>>();
        ok &= ch.dims().values().all(|&d| d == 1);
        let dual = duality_on_characters(&ch);
        ok &= duality_on_characters(&dual) == ch && ch.dims().iter().all(|(w, d)| dual.dim(&-w) == *d);
    }
    verdict(13, "BGG character and duality", ok, "n = 0..5", start, secs(1));
}

#[test]
fn criterion_14_round_trip_and_golden_files() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 14);
    let algebras: Vec<WeylAlgebra> = MODES.iter().flat_map(|&m| [algebra(m), sqrt2_algebra(m)]).collect();
    let mut round = 0;
    for i in 0..200 {
        let alg = &algebras[i % algebras.len()];
        let mut v = weyl(&mut rng, alg, 4, 2, 3);
        if i % 2 == 1 {
            v = v.scale(&nonzero_scalar(&mut rng, alg.field(), true));
            v = &v + &alg.scalar(scalar(&mut rng, alg.field(), true));
        }
        if parse_element(&print_canonical(&v), alg).ok() == Some(v) {
            round += 1;
        }
    }
    let bad = support::mismatches();
    let total = support::cases().len();
    let detail = format!("round trip {round}/200, golden {}/{total} match {bad:?}", total - bad.len());
    verdict(14, "CLI round trip and golden files", round == 200 && bad.is_empty(), &detail, start, secs(60));
}
