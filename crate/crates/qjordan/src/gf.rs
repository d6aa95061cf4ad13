//! Exact arithmetic in the finite fields `F_p` and `F_{p^m}`.
//!
//! An element with coefficient vector `(c_0, ..., c_{m-1})` (constant term
//! first) is stored as its canonical index `Σ c_i p^i`, so index 0 is zero
//! and index 1 is one, and the index order is the canonical element order
//! used by every exhaustive loop in the crate. Arithmetic is table-driven:
//! fields here are tiny and the tables make the exhaustive checks cheap.

use crate::{Error, Result};

/// Largest supported field order, so element indices fit in a byte.
pub const MAX_FIELD_ORDER: usize = 256;

/// A field element, stored as its canonical index in the owning [`FieldSpec`].
///
/// Elements carry no back-reference to their field; using an element with a
/// foreign spec is a logic error and trips the table bounds checks.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Fe(pub u8);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// The scalar field `F_{p^m}`, with precomputed operation tables.
#[derive(Clone)]
pub struct FieldSpec {
    p: u64,
    m: usize,
    /// Monic modulus coefficients `c_0 .. c_m` (length m+1); empty when m = 1.
    modulus: Vec<u64>,
    order: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for FieldSpec {}

impl std::fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.m == 1 {
            write!(f, "FieldSpec(F_{})", self.p)
        } else {
            write!(
                f,
                "FieldSpec(F_{}^{}, modulus={:?})",
                self.p, self.m, self.modulus
            )
        }
    }
}

impl FieldSpec {
    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<FieldSpec> {
        FieldSpec::build(p, 1, Vec::new())
    }

    /// `F_{p^m}` with the canonical (lexicographically smallest) modulus.
    pub fn extension(p: u64, m: usize) -> Result<FieldSpec> {
        if m == 1 {
            return FieldSpec::prime(p);
        }
        let modulus = find_irreducible(p, m)?;
        FieldSpec::build(p, m, modulus)
    }

    /// `F_{p^m}` with an explicit monic modulus `c_0 .. c_m`.
    pub fn with_modulus(p: u64, m: usize, modulus: &[u64]) -> Result<FieldSpec> {
        if m < 2 {
            return Err(Error::Invalid(
                "explicit modulus requires extension degree m >= 2".into(),
            ));
        }
        FieldSpec::build(p, m, modulus.to_vec())
    }

    fn build(p: u64, m: usize, modulus: Vec<u64>) -> Result<FieldSpec> {
        if !is_prime(p) {
            return Err(Error::Invalid(format!("{p} is not prime")));
        }
        if m == 0 {
            return Err(Error::Invalid("extension degree must be >= 1".into()));
        }
        let order = (p as u128).checked_pow(m as u32).ok_or_else(|| {
            Error::Invalid(format!("field order p^m overflows for p={p}, m={m}"))
        })?;
        if order > MAX_FIELD_ORDER as u128 {
            return Err(Error::Invalid(format!(
                "field order {order} exceeds the supported maximum {MAX_FIELD_ORDER}"
            )));
        }
        let order = order as usize;
        if m > 1 {
            if modulus.len() != m + 1 || modulus[m] != 1 {
                return Err(Error::Invalid(format!(
                    "modulus must be monic of degree {m} (got {modulus:?})"
                )));
            }
            if modulus.iter().any(|&c| c >= p) {
                return Err(Error::Invalid(
                    "modulus coefficients must be residues in [0, p)".into(),
                ));
            }
            if !is_irreducible(p, &modulus) {
                return Err(Error::Invalid(format!(
                    "modulus {modulus:?} is reducible over F_{p}"
                )));
            }
        }

        let mut spec = FieldSpec {
            p,
            m,
            modulus,
            order,
            add: vec![0; order * order],
            mul: vec![0; order * order],
            neg: vec![0; order],
            inv: vec![0; order],
        };
        for i in 0..order {
            let a = spec.index_coeffs(i);
            spec.neg[i] = spec.coeffs_index(&a.iter().map(|&c| (p - c) % p).collect::<Vec<_>>());
            for j in 0..order {
                let b = spec.index_coeffs(j);
                let sum: Vec<u64> = a.iter().zip(&b).map(|(&x, &y)| (x + y) % p).collect();
                spec.add[i * order + j] = spec.coeffs_index(&sum);
                let prod = spec.poly_mul_reduce(&a, &b);
                spec.mul[i * order + j] = spec.coeffs_index(&prod);
            }
        }
        for i in 1..order {
            // Scan is fine at these sizes and keeps the table deterministic.
            for j in 1..order {
                if spec.mul[i * order + j] == 1 {
                    spec.inv[i] = j as u8;
                    break;
                }
            }
        }
        Ok(spec)
    }

    fn index_coeffs(&self, idx: usize) -> Vec<u64> {
        let mut v = vec![0u64; self.m];
        let mut rest = idx as u64;
        for c in v.iter_mut() {
            *c = rest % self.p;
            rest /= self.p;
        }
        v
    }

    fn coeffs_index(&self, coeffs: &[u64]) -> u8 {
        let mut idx = 0u64;
        for &c in coeffs.iter().rev() {
            idx = idx * self.p + c;
        }
        idx as u8
    }

    fn poly_mul_reduce(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let m = self.m;
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &ai) in a.iter().enumerate() {
            for (j, &bj) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ai * bj) % self.p;
            }
        }
        if m > 1 {
            // Eliminate degrees 2m-2 down to m against the monic modulus.
            for d in (m..2 * m - 1).rev() {
                let lead = prod[d];
                if lead == 0 {
                    continue;
                }
                prod[d] = 0;
                let shift = d - m;
                for k in 0..m {
                    let sub = (lead * self.modulus[k]) % self.p;
                    prod[shift + k] = (prod[shift + k] + self.p - sub) % self.p;
                }
            }
        }
        prod.truncate(m);
        prod
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of elements, `p^m`.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Modulus coefficients `c_0 .. c_m`, present only when `m > 1`.
    pub fn modulus(&self) -> Option<&[u64]> {
        if self.m > 1 {
            Some(&self.modulus)
        } else {
            None
        }
    }

    pub fn zero(&self) -> Fe {
        Fe(0)
    }

    pub fn one(&self) -> Fe {
        Fe(1)
    }

    pub fn add(&self, x: Fe, y: Fe) -> Fe {
        Fe(self.add[x.index() * self.order + y.index()])
    }

    pub fn sub(&self, x: Fe, y: Fe) -> Fe {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: Fe, y: Fe) -> Fe {
        Fe(self.mul[x.index() * self.order + y.index()])
    }

    pub fn neg(&self, x: Fe) -> Fe {
        Fe(self.neg[x.index()])
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, x: Fe) -> Option<Fe> {
        if x.is_zero() {
            None
        } else {
            Some(Fe(self.inv[x.index()]))
        }
    }

    pub fn pow(&self, x: Fe, e: u64) -> Fe {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(acc, x);
        }
        acc
    }

    /// Embeds the integer `c` as the constant `c mod p`.
    pub fn scalar(&self, c: u64) -> Fe {
        Fe((c % self.p) as u8)
    }

    /// The residue `(p+1)/2`, the inverse of 2; requires odd characteristic.
    pub fn half(&self) -> Result<Fe> {
        if self.p == 2 {
            return Err(Error::Invalid("1/2 does not exist in characteristic 2".into()));
        }
        Ok(self.inv(self.scalar(2)).expect("2 is a unit for odd p"))
    }

    /// All `p^m` elements in canonical order: zero first, one second.
    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.order).map(|i| Fe(i as u8))
    }

    /// Coefficient list `(c_0, ..., c_{m-1})`, constant term first.
    pub fn coeffs(&self, x: Fe) -> Vec<u64> {
        self.index_coeffs(x.index())
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<Fe> {
        if coeffs.len() != self.m {
            return Err(Error::Invalid(format!(
                "expected {} coefficients, got {}",
                self.m,
                coeffs.len()
            )));
        }
        if coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::Invalid(format!(
                "coefficient out of range [0, {}): {coeffs:?}",
                self.p
            )));
        }
        Ok(Fe(self.coeffs_index(coeffs)))
    }

    /// Serialized form: the residue itself when `m = 1`, else the
    /// comma-separated coefficient list, constant term first.
    pub fn render(&self, x: Fe) -> String {
        let coeffs = self.coeffs(x);
        coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn parse_element(&self, s: &str) -> Result<Fe> {
        let coeffs: Vec<u64> = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Invalid(format!("bad field element '{s}'")))
            })
            .collect::<Result<_>>()?;
        self.from_coeffs(&coeffs)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Remainder of `a` under division by monic `b`, coefficients over `F_p`.
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        if lead != 0 {
            let shift = r.len() - 1 - db;
            for k in 0..=db {
                let sub = (lead * b[k]) % p;
                r[shift + k] = (r[shift + k] + p - sub) % p;
            }
        }
        r.pop();
    }
    r
}

fn is_irreducible(p: u64, f: &[u64]) -> bool {
    let m = f.len() - 1;
    // Trial division against every monic polynomial of degree 1..=m/2.
    for d in 1..=m / 2 {
        let count = p.pow(d as u32);
        for idx in 0..count {
            let mut g = vec![0u64; d + 1];
            let mut rest = idx;
            for c in g.iter_mut().take(d) {
                *c = rest % p;
                rest /= p;
            }
            g[d] = 1;
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// The smallest monic irreducible polynomial of degree `m` over `F_p`,
/// ordering candidates by the radix value `Σ c_i p^i` of their lower
/// coefficients — the same canonical order used for field elements.
/// Deterministic: two calls return identical coefficients.
pub fn find_irreducible(p: u64, m: usize) -> Result<Vec<u64>> {
    if !is_prime(p) {
        return Err(Error::Invalid(format!("{p} is not prime")));
    }
    if m < 2 {
        return Err(Error::Invalid("find_irreducible requires degree m >= 2".into()));
    }
    let count = (p as u128).pow(m as u32);
    let mut lower = vec![0u64; m];
    for _ in 0..count {
        let mut f = lower.clone();
        f.push(1);
        if is_irreducible(p, &f) {
            return Ok(f);
        }
        for c in lower.iter_mut() {
            *c += 1;
            if *c < p {
                break;
            }
            *c = 0;
        }
    }
    Err(Error::Invalid(format!(
        "no irreducible polynomial of degree {m} over F_{p} (unreachable for prime p)"
    )))
}
