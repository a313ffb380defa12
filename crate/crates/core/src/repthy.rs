//! Weight-space counting for Verma modules, rank-one BGG characters,
//! character duality and the dense/discrete support test.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::Neg;

use crate::error::{Error, Result};
use crate::lattice::{LatticeBasis, LatticeVector};
use crate::scalars::FieldScalar;

/// Finite generating set of `A⁻`: nonzero vectors whose first nonzero
/// coordinate is negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegativePart {
    gens: Vec<LatticeVector>,
}

fn leading_index(v: &LatticeVector) -> Option<usize> {
    v.0.iter().position(|&c| c != 0)
}

impl NegativePart {
    pub fn new(mut gens: Vec<LatticeVector>) -> Result<Self> {
        let Some(first) = gens.first() else {
            return Err(Error::InvalidArgument("negative part needs at least one generator".into()));
        };
        let n = first.len();
        for g in &gens {
            g.check_len(n)?;
            match leading_index(g) {
                None => return Err(Error::ZeroVector),
                Some(i) if g.0[i] > 0 => {
                    return Err(Error::InvalidArgument(alloc::format!("generator ({g}) is not negative")));
                }
                _ => {}
            }
        }
        gens.sort_by_key(|g| (leading_index(g), g.clone()));
        gens.dedup();
        Ok(NegativePart { gens })
    }

    pub fn gens(&self) -> &[LatticeVector] {
        &self.gens
    }
}

/// Whether tuples of generators are counted up to order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Counting {
    #[default]
    Multiset,
    Ordered,
}

fn binomial(n: u128, k: u128) -> Result<u128> {
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i).ok_or(Error::Overflow)? / (i + 1);
    }
    Ok(acc)
}

struct Counter<'a> {
    gens: &'a [LatticeVector],
    counting: Counting,
    memo: BTreeMap<(usize, Vec<i64>), BTreeMap<u128, u128>>,
}

impl Counter<'_> {
    /// Weighted counts of decompositions of `n` over `gens[i..]`, keyed by
    /// the number of generators used.
    fn run(&mut self, i: usize, n: &[i64]) -> Result<BTreeMap<u128, u128>> {
        if i == self.gens.len() {
            let mut out = BTreeMap::new();
            if n.iter().all(|&c| c == 0) {
                out.insert(0, 1);
            }
            return Ok(out);
        }
        if let Some(hit) = self.memo.get(&(i, n.to_vec())) {
            return Ok(hit.clone());
        }
        let g = &self.gens[i].0;
        let l = leading_index(&self.gens[i]).expect("nonzero generator");
        let mut out: BTreeMap<u128, u128> = BTreeMap::new();
        // Later generators cannot touch coordinates before `l` nor raise coordinate `l`.
        if n[..l].iter().all(|&c| c == 0) && n[l] <= 0 {
            let kmax = n[l] / g[l];
            let mut rest = n.to_vec();
            for k in 0..=kmax {
                for (m, c) in self.run(i + 1, &rest)? {
                    let w = match self.counting {
                        Counting::Multiset => 1,
                        Counting::Ordered => binomial(m + k as u128, k as u128)?,
                    };
                    let e = out.entry(m + k as u128).or_insert(0);
                    *e = c.checked_mul(w).and_then(|x| e.checked_add(x)).ok_or(Error::Overflow)?;
                }
                for (r, gi) in rest.iter_mut().zip(g) {
                    *r = r.checked_sub(*gi).ok_or(Error::Overflow)?;
                }
            }
        }
        self.memo.insert((i, n.to_vec()), out.clone());
        Ok(out)
    }
}

/// Number of ways to write `n` as a sum of generators of `A⁻`.
pub fn verma_weight_dim_with(neg: &NegativePart, n: &LatticeVector, counting: Counting) -> Result<u128> {
    n.check_len(neg.gens[0].len())?;
    let mut c = Counter { gens: &neg.gens, counting, memo: BTreeMap::new() };
    c.run(0, &n.0)?.values().try_fold(0u128, |acc, &x| acc.checked_add(x).ok_or(Error::Overflow))
}

/// Number of multisets of generators summing to `n`.
pub fn verma_weight_dim(neg: &NegativePart, n: &LatticeVector) -> Result<u128> {
    verma_weight_dim_with(neg, n, Counting::Multiset)
}

/// Eigenvalue `λ - n` of `∂` on `x^n ⊗ 1` in the rank-one Verma module.
pub fn verma_action_rank1(lambda: &FieldScalar, n: u64) -> FieldScalar {
    lambda - &lambda.field().int(n as i64)
}

/// Formal character: weight to multiplicity, zero entries omitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character<W: Ord> {
    dims: BTreeMap<W, u64>,
}

impl<W: Ord> Default for Character<W> {
    fn default() -> Self {
        Character { dims: BTreeMap::new() }
    }
}

impl<W: Ord + Clone> Character<W> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_dims(dims: impl IntoIterator<Item = (W, u64)>) -> Self {
        Character { dims: dims.into_iter().filter(|(_, d)| *d != 0).collect() }
    }

    pub fn dims(&self) -> &BTreeMap<W, u64> {
        &self.dims
    }

    pub fn dim(&self, w: &W) -> u64 {
        self.dims.get(w).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.dims.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    /// `self - other`, which must stay effective.
    pub fn difference(&self, other: &Self) -> Result<Self> {
        let mut dims = self.dims.clone();
        for (w, d) in &other.dims {
            let cur = dims.get(w).copied().unwrap_or(0);
            let left = cur.checked_sub(*d).ok_or_else(|| Error::InvalidArgument("character difference is not effective".into()))?;
            if left == 0 {
                dims.remove(w);
            } else {
                dims.insert(w.clone(), left);
            }
        }
        Ok(Character { dims })
    }
}

/// `ch Δ(χ_h)` restricted to weights in `[lowest, h]`: multiplicity one throughout.
pub fn verma_character_rank1(highest: i64, lowest: i64) -> Character<i64> {
    Character::from_dims((lowest..=highest).map(|w| (w, 1)))
}

/// `ch L(χ_n) = ch Δ(χ_n) - ch Δ(χ_{-n-2})` on the weights `n - k`, `0 <= k <= depth`.
pub fn bgg_character(n: u64, depth: u64) -> Character<i64> {
    let h = n as i64;
    let lowest = h - depth as i64;
    let top = verma_character_rank1(h, lowest);
    let sub = verma_character_rank1(-h - 2, lowest);
    top.difference(&sub).expect("Verma submodule support is contained in the top module")
}

/// Weight negation, the character-level action of the duality functor in rank one.
pub fn duality_on_characters<W: Ord + Clone + Neg<Output = W>>(ch: &Character<W>) -> Character<W> {
    Character { dims: ch.dims.iter().map(|(w, d)| (-w.clone(), *d)).collect() }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SupportType {
    Dense,
    Discrete,
}

/// Dense when `χ(x)` involves a transcendental symbol not occurring in the
/// lattice embeddings, discrete otherwise.
pub fn classify_support(chi_x: &FieldScalar, basis: &LatticeBasis) -> SupportType {
    let lattice_syms: Vec<&str> = basis.embeddings().iter().flat_map(FieldScalar::transcendentals_used).collect();
    if chi_x.transcendentals_used().iter().any(|s| !lattice_syms.contains(s)) {
        SupportType::Dense
    } else {
        SupportType::Discrete
    }
}

/// On `v_{n+k}`: `x` acts by `n + k` and `e^x` by `q^{n+k}`.
pub fn discrete_module_action(n: i64, k: i64, q_char: &FieldScalar) -> Result<(i64, FieldScalar)> {
    if q_char.is_zero() {
        return Err(Error::InvalidArgument("character value of e^x must be nonzero".into()));
    }
    let w = n.checked_add(k).ok_or(Error::Overflow)?;
    Ok((w, q_char.pow(w)?))
}
