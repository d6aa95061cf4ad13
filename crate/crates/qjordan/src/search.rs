//! Exhaustive enumeration of small quadratic algebras over F_2 and F_3,
//! classifying every candidate as weak/strict/division and hunting for
//! weak-but-not-strict examples.
//!
//! Candidates are normalized: the unit is `e_1` and `Q_{e_1}` is pinned to
//! the identity (forced by the first axiom up to basis change), so the free
//! data are the remaining diagonal operators and all polar operators. Those
//! matrix entries are the digits of the candidate index, first entry least
//! significant, which makes the enumeration order canonical and censuses
//! byte-reproducible.

use crate::gf::{Fe, FieldSpec};
use crate::identities::{
    is_division_with_table, is_strict_via_extension, is_strict_with_table, is_weak_with_table,
};
use crate::linalg::Matrix;
use crate::qjcore::{ElementTable, QuadraticAlgebra};
use crate::{Error, Result};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Spaces small enough for full enumeration.
pub const FULL_ENUMERATION: [(u64, usize); 4] = [(2, 1), (2, 2), (3, 1), (3, 2)];

pub fn supports_full_enumeration(p: u64, n: usize) -> bool {
    FULL_ENUMERATION.contains(&(p, n))
}

/// Number of free matrix entries: `n²(n−1)` diagonal plus `n²·n(n−1)/2` polar.
fn digit_count(n: usize) -> u32 {
    (n * n * (n - 1) + n * n * (n * (n - 1) / 2)) as u32
}

/// Total candidate count `p^(free entries)`.
pub fn candidate_count(p: u64, n: usize) -> u128 {
    (p as u128).pow(digit_count(n))
}

/// Decodes the candidate at `index` in canonical order.
pub fn candidate_at(field: &FieldSpec, n: usize, index: u128) -> QuadraticAlgebra {
    let p = field.p() as u128;
    let mut rest = index;
    let mut next_digit = || {
        let d = (rest % p) as u8;
        rest /= p;
        Fe(d)
    };
    let mut diag_ops = Vec::with_capacity(n);
    diag_ops.push(Matrix::identity(n));
    for _ in 1..n {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, next_digit());
            }
        }
        diag_ops.push(m);
    }
    let mut polar_ops = Vec::with_capacity(n * (n - 1) / 2);
    for _ in 0..n * (n - 1) / 2 {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, next_digit());
            }
        }
        polar_ops.push(m);
    }
    let mut unit = vec![Fe::ZERO; n];
    unit[0] = Fe::ONE;
    QuadraticAlgebra::new(field.clone(), unit, diag_ops, polar_ops)
        .expect("normalized candidate data is well-formed")
}

/// Streams every candidate of a fully enumerable space in canonical order.
pub fn enumerate_candidates(
    p: u64,
    n: usize,
) -> Result<impl Iterator<Item = QuadraticAlgebra>> {
    if !supports_full_enumeration(p, n) {
        return Err(Error::Invalid(format!(
            "space (p={p}, n={n}) requires sampling; full enumeration covers {FULL_ENUMERATION:?}"
        )));
    }
    let field = FieldSpec::prime(p)?;
    Ok((0..candidate_count(p, n)).map(move |index| candidate_at(&field, n, index)))
}

/// Classification counts over an enumerated (or sampled) candidate space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub p: u64,
    pub n: usize,
    pub total: u128,
    /// Candidates actually classified (equals `total` for full enumeration).
    pub examined: u64,
    pub weak: u64,
    pub strict: u64,
    pub weak_division: u64,
    pub strict_division: u64,
    /// Serialized weak-but-not-strict candidates, in canonical index order.
    /// Reported, never asserted empty: such algebras would be findings.
    pub weak_not_strict: Vec<String>,
    /// Weak division candidates that are not strict. One entry here would
    /// falsify the claim the search corroborates (weak division algebras are
    /// always strict), so the acceptance suite asserts the list is empty.
    pub weak_division_not_strict: Vec<String>,
    /// `(sample_size, seed)` when sampling instead of full enumeration.
    pub sample: Option<(u64, u64)>,
}

impl Census {
    fn new(p: u64, n: usize) -> Census {
        Census {
            p,
            n,
            total: candidate_count(p, n),
            examined: 0,
            weak: 0,
            strict: 0,
            weak_division: 0,
            strict_division: 0,
            weak_not_strict: Vec::new(),
            weak_division_not_strict: Vec::new(),
            sample: None,
        }
    }

    fn record(&mut self, alg: &QuadraticAlgebra, t: &ElementTable) {
        self.examined += 1;
        if !is_weak_with_table(t) {
            return;
        }
        self.weak += 1;
        let strict = is_strict_with_table(t);
        let division = is_division_with_table(t);
        if strict {
            self.strict += 1;
        } else {
            self.weak_not_strict.push(alg.to_text());
        }
        if division {
            self.weak_division += 1;
            if strict {
                self.strict_division += 1;
            } else {
                self.weak_division_not_strict.push(alg.to_text());
            }
        }
    }
}

/// Classifies every candidate of a fully enumerable space.
pub fn classify_candidates(p: u64, n: usize) -> Result<Census> {
    if !supports_full_enumeration(p, n) {
        return Err(Error::Invalid(format!(
            "space (p={p}, n={n}) requires sampling; full enumeration covers {FULL_ENUMERATION:?}"
        )));
    }
    let mut census = Census::new(p, n);
    for alg in enumerate_candidates(p, n)? {
        let t = ElementTable::build(&alg)?;
        census.record(&alg, &t);
    }
    Ok(census)
}

/// Classifies a seeded deterministic sample of a larger space. Indices are
/// drawn uniformly, then deduplicated and sorted so the classification order
/// is canonical.
pub fn classify_sampled(p: u64, n: usize, sample: u64, seed: u64) -> Result<Census> {
    if !matches!(p, 2 | 3) {
        return Err(Error::Invalid("search supports p in {2, 3}".into()));
    }
    let field = FieldSpec::prime(p)?;
    let mut census = Census::new(p, n);
    census.sample = Some((sample, seed));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut indices: Vec<u128> = (0..sample)
        .map(|_| rng.random_range(0..census.total))
        .collect();
    indices.sort_unstable();
    indices.dedup();
    for index in indices {
        let alg = candidate_at(&field, n, index);
        let t = ElementTable::build(&alg)?;
        census.record(&alg, &t);
    }
    Ok(census)
}

/// Renders the census as key=value lines followed by the serialized
/// weak-not-strict algebras. Pure function of the census.
pub fn render_census(census: &Census) -> String {
    let mut out = String::new();
    out.push_str(&format!("p={}\n", census.p));
    out.push_str(&format!("n={}\n", census.n));
    if let Some((k, seed)) = census.sample {
        out.push_str(&format!("sample={k}\nseed={seed}\n"));
    }
    out.push_str(&format!("total={}\n", census.total));
    out.push_str(&format!("examined={}\n", census.examined));
    out.push_str(&format!("weak={}\n", census.weak));
    out.push_str(&format!("strict={}\n", census.strict));
    out.push_str(&format!("weak_division={}\n", census.weak_division));
    out.push_str(&format!("strict_division={}\n", census.strict_division));
    out.push_str(&format!(
        "weak_not_strict_count={}\n",
        census.weak_not_strict.len()
    ));
    out.push_str(&format!(
        "weak_division_not_strict_count={}\n",
        census.weak_division_not_strict.len()
    ));
    for (i, text) in census.weak_not_strict.iter().enumerate() {
        out.push_str(&format!("# weak_not_strict {}\n{text}", i + 1));
    }
    out
}

/// Checks that the two strictness routes agree on every weak candidate of a
/// fully enumerable space: the linearized identities over the base field
/// against the weak axioms in the degree-2 scalar extension.
pub fn strictness_agreement_sweep(p: u64, n: usize) -> Result<bool> {
    sweep_against(p, n, is_strict_via_extension)
}

/// The sweep against an arbitrary second strictness oracle; the harness
/// sanity tests inject a broken oracle here.
pub fn sweep_against(
    p: u64,
    n: usize,
    oracle: impl Fn(&QuadraticAlgebra) -> Result<bool>,
) -> Result<bool> {
    if !supports_full_enumeration(p, n) {
        return Err(Error::Invalid(format!(
            "sweep requires a fully enumerable space, not (p={p}, n={n})"
        )));
    }
    let field = FieldSpec::prime(p)?;
    for index in 0..candidate_count(p, n) {
        let alg = candidate_at(&field, n, index);
        let t = ElementTable::build(&alg)?;
        if !is_weak_with_table(&t) {
            continue;
        }
        if is_strict_with_table(&t) != oracle(&alg)? {
            return Ok(false);
        }
    }
    Ok(true)
}
