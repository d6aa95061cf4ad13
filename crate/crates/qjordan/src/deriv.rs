//! ε-derivations: the defining predicate, solution spaces as exact kernels,
//! the bracket grading, and the inverse-compatibility equivalence for
//! division algebras.
//!
//! A linear map δ is an ε-derivation when `δ(aQ_b) = ε δ(a)Q_b + aQ_{b,δ(b)}`
//! for all a, b. For fixed b this is the operator condition
//! `Q_b ∘ δ = ε δ ∘ Q_b + Q_{b,δ(b)}`, linear in δ; the defect as a function
//! of b is a quadratic map, so it vanishes everywhere iff it vanishes on the
//! basis vectors and on the polarized basis pairs. That is what lets
//! [`derivation_space`] work from basis constraints alone, independent of
//! `|J|`, while [`is_derivation`] stays an exhaustive cross-check.

use crate::gf::{Fe, FieldSpec};
use crate::linalg::{apply, canonical_basis, Matrix, Vector};
use crate::qjcore::{ElementTable, QuadraticAlgebra};
use crate::{Error, Result};

/// The sign ε. In characteristic 2 the two signs induce the same predicate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Epsilon {
    Plus,
    Minus,
}

impl Epsilon {
    pub fn scalar(self, f: &FieldSpec) -> Fe {
        match self {
            Epsilon::Plus => f.one(),
            Epsilon::Minus => f.neg(f.one()),
        }
    }

    /// The grading product: brackets of ε₁- and ε₂-derivations land in the
    /// ε₁ε₂ space.
    pub fn product(self, other: Epsilon) -> Epsilon {
        if self == other {
            Epsilon::Plus
        } else {
            Epsilon::Minus
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Epsilon::Plus => "plus",
            Epsilon::Minus => "minus",
        }
    }
}

/// A solution space of linear conditions on operators, held as a canonical
/// (reduced-echelon over the flattened n² coordinates) basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationSpace {
    pub epsilon: Epsilon,
    pub basis: Vec<Matrix>,
}

impl DerivationSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn flattened(&self) -> Vec<Vector> {
        self.basis.iter().map(|m| m.flatten()).collect()
    }

    /// Subspace equality, decided on canonical bases.
    pub fn same_span(&self, other: &DerivationSpace) -> bool {
        self.flattened() == other.flattened()
    }
}

/// Exhaustive check of the defining identity over all `b ∈ J`.
pub fn is_derivation(alg: &QuadraticAlgebra, d: &Matrix, eps: Epsilon) -> Result<bool> {
    let t = ElementTable::build(alg)?;
    Ok(is_derivation_with_table(&t, d, eps))
}

pub fn is_derivation_with_table(t: &ElementTable, d: &Matrix, eps: Epsilon) -> bool {
    let f = t.field();
    let s = eps.scalar(f);
    for b in 0..t.len() {
        let qb = &t.q_ops[b];
        let bd = t.apply_to(b, d);
        let lhs = qb.mul(d, f);
        let rhs = d.mul(qb, f).scale(s, f).add(&t.polar(b, bd), f);
        if lhs != rhs {
            return false;
        }
    }
    true
}

/// Solves a homogeneous system of linear conditions on an n×n operator.
/// `defects` maps a candidate operator to the concatenated defect values of
/// every condition; it must be linear. Coefficients are read off by
/// evaluating on the n² elementary matrices; the canonical kernel basis
/// comes back as matrices.
#[allow(clippy::needless_range_loop)] // rows is indexed by equation, not col
fn solve_operator_conditions(
    n: usize,
    f: &FieldSpec,
    defects: impl Fn(&Matrix) -> Vector,
) -> Vec<Matrix> {
    let cols = n * n;
    let n_eqs = defects(&Matrix::zeros(n, n)).len();
    let mut rows = vec![vec![Fe::ZERO; cols]; n_eqs];
    for col in 0..cols {
        let mut e = Matrix::zeros(n, n);
        e.set(col / n, col % n, Fe::ONE);
        for (r, entry) in defects(&e).into_iter().enumerate() {
            rows[r][col] = entry;
        }
    }
    let a = Matrix::from_rows(rows).expect("uniform constraint rows");
    a.kernel_basis(f)
        .into_iter()
        .map(|v| Matrix::from_flat(n, n, v).expect("n² kernel coordinates"))
        .collect()
}

/// The space of ε-derivations, computed from basis constraints: the operator
/// condition at every basis vector, and the polarized condition at every
/// basis pair. No element enumeration is involved, so this works above the
/// exhaustive bound as well.
pub fn derivation_space(alg: &QuadraticAlgebra, eps: Epsilon) -> DerivationSpace {
    let f = alg.field().clone();
    let n = alg.dim();
    let s = eps.scalar(&f);
    let defects = |d: &Matrix| -> Vector {
        let mut out = Vec::new();
        for j in 0..n {
            let ej = alg.basis_vector(j);
            let qj = alg.diag_op(j);
            let dj = apply(&ej, d, &f);
            out.extend(
                qj.mul(d, &f)
                    .sub(&d.mul(qj, &f).scale(s, &f), &f)
                    .sub(&alg.q_polar(&ej, &dj), &f)
                    .flatten(),
            );
        }
        for j in 0..n {
            for k in j + 1..n {
                let ej = alg.basis_vector(j);
                let ek = alg.basis_vector(k);
                let pjk = alg.polar_op(j, k);
                let dj = apply(&ej, d, &f);
                let dk = apply(&ek, d, &f);
                out.extend(
                    pjk.mul(d, &f)
                        .sub(&d.mul(pjk, &f).scale(s, &f), &f)
                        .sub(&alg.q_polar(&ej, &dk), &f)
                        .sub(&alg.q_polar(&ek, &dj), &f)
                        .flatten(),
                );
            }
        }
        out
    };
    let basis = solve_operator_conditions(n, &f, defects);
    DerivationSpace { epsilon: eps, basis }
}

/// The generalized-derivation space `𝔇 = 𝔇_+ + 𝔇_−` with its summands.
#[derive(Clone, Debug)]
pub struct GeneralizedDerivations {
    pub plus: DerivationSpace,
    pub minus: DerivationSpace,
    /// Canonical basis of the sum.
    pub basis: Vec<Matrix>,
    /// Canonical basis of the intersection of the two summands.
    pub intersection: Vec<Matrix>,
}

impl GeneralizedDerivations {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Computes `𝔇_+ + 𝔇_−` and asserts the characteristic-dependent structure:
/// in characteristic 2 the summands coincide; in odd characteristic they
/// intersect trivially (the sum is direct).
pub fn generalized_derivation_space(alg: &QuadraticAlgebra) -> Result<GeneralizedDerivations> {
    let f = alg.field().clone();
    let n = alg.dim();
    let plus = derivation_space(alg, Epsilon::Plus);
    let minus = derivation_space(alg, Epsilon::Minus);
    let mut stacked = plus.flattened();
    stacked.extend(minus.flattened());
    let basis: Vec<Matrix> = canonical_basis(stacked, &f)
        .into_iter()
        .map(|v| Matrix::from_flat(n, n, v).expect("n² coordinates"))
        .collect();
    let intersection: Vec<Matrix> =
        subspace_intersection(&plus.flattened(), &minus.flattened(), &f)
            .into_iter()
            .map(|v| Matrix::from_flat(n, n, v).expect("n² coordinates"))
            .collect();
    if f.p() == 2 {
        if !plus.same_span(&minus) {
            return Err(Error::Invalid(
                "characteristic 2: the two derivation spaces must coincide".into(),
            ));
        }
    } else if !intersection.is_empty() {
        return Err(Error::Invalid(
            "odd characteristic: derivation spaces must intersect trivially".into(),
        ));
    }
    Ok(GeneralizedDerivations {
        plus,
        minus,
        basis,
        intersection,
    })
}

/// Canonical basis of `span(u) ∩ span(v)`, by solving for coefficient pairs
/// with `Σ α_i u_i = Σ β_j v_j`.
pub fn subspace_intersection(u: &[Vector], v: &[Vector], f: &FieldSpec) -> Vec<Vector> {
    if u.is_empty() || v.is_empty() {
        return Vec::new();
    }
    let len = u[0].len();
    let k = u.len();
    let mut rows = Vec::with_capacity(len);
    for c in 0..len {
        let mut row = Vec::with_capacity(k + v.len());
        for ui in u {
            row.push(ui[c]);
        }
        for vj in v {
            row.push(f.neg(vj[c]));
        }
        rows.push(row);
    }
    let a = Matrix::from_rows(rows).expect("uniform rows");
    let members = a
        .kernel_basis(f)
        .into_iter()
        .map(|coeffs| {
            let mut x = vec![Fe::ZERO; len];
            for (i, ui) in u.iter().enumerate() {
                if !coeffs[i].is_zero() {
                    for (xe, &ue) in x.iter_mut().zip(ui) {
                        *xe = f.add(*xe, f.mul(coeffs[i], ue));
                    }
                }
            }
            x
        })
        .collect();
    canonical_basis(members, f)
}

/// The commutator map `a ↦ d1(d2(a)) − d2(d1(a))` under the right-action
/// convention.
pub fn bracket(d1: &Matrix, d2: &Matrix, f: &FieldSpec) -> Matrix {
    d2.mul(d1, f).sub(&d1.mul(d2, f), f)
}

/// Whether every `Q_{1,a}` is an anti-derivation; by linearity of
/// `a ↦ Q_{1,a}` it suffices to check the basis vectors.
pub fn q1a_maps_are_antiderivations(alg: &QuadraticAlgebra) -> Result<bool> {
    let t = ElementTable::build(alg)?;
    for i in 0..alg.dim() {
        let q1a = alg.q_polar(alg.unit(), &alg.basis_vector(i));
        if !is_derivation_with_table(&t, &q1a, Epsilon::Minus) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// In the isotope at `a`, the maps `Q^a_{a,b}`, `V^a_{a,b}` and `V^a_{b,a}`
/// coincide and form an anti-derivation of the isotope.
pub fn isotope_antiderivation_check(
    alg: &QuadraticAlgebra,
    a: &[Fe],
    b: &[Fe],
) -> Result<bool> {
    let iso = alg.isotope(a)?;
    let q = iso.q_polar(a, b);
    let v1 = iso.v_op(a, b);
    let v2 = iso.v_op(b, a);
    if q != v1 || v1 != v2 {
        return Ok(false);
    }
    is_derivation(&iso, &q, Epsilon::Minus)
}

/// The space of linear maps satisfying `δ(a^{-1}) = −ε δ(a)Q_a^{-1}` for all
/// invertible `a`. For weak division algebras this coincides with the
/// ε-derivation space (each containment is a theorem; the equality is what
/// the acceptance suite checks).
pub fn inverse_compatible_space(alg: &QuadraticAlgebra, eps: Epsilon) -> Result<DerivationSpace> {
    let t = ElementTable::build(alg)?;
    if !crate::identities::is_division_with_table(&t) {
        return Err(Error::NotDivision);
    }
    let f = alg.field().clone();
    let n = alg.dim();
    let s = eps.scalar(&f);
    let defects = |d: &Matrix| -> Vector {
        let mut out = Vec::new();
        for a in 1..t.len() {
            let ainv = &t.elements[t.inverses[a].expect("division algebra")];
            let qinv = t.q_invs[a].as_ref().expect("division algebra");
            let lhs = apply(ainv, d, &f);
            let rhs = apply(&apply(&t.elements[a], d, &f), qinv, &f);
            out.extend(
                lhs.iter()
                    .zip(&rhs)
                    .map(|(&x, &y)| f.add(x, f.mul(s, y))),
            );
        }
        out
    };
    let basis = solve_operator_conditions(n, &f, defects);
    Ok(DerivationSpace { epsilon: eps, basis })
}

/// Whether the evaluation map `𝔇(J) → J, δ ↦ aδ` has full rank at every
/// invertible `a`, i.e. generalized derivations reach every value there.
pub fn derivations_transitive_on_units(alg: &QuadraticAlgebra) -> Result<bool> {
    let gen = generalized_derivation_space(alg)?;
    let t = ElementTable::build(alg)?;
    let f = alg.field();
    for a in 0..t.len() {
        if t.inverses[a].is_none() {
            continue;
        }
        let rows: Vec<Vector> = gen
            .basis
            .iter()
            .map(|d| apply(&t.elements[a], d, f))
            .collect();
        if rows.is_empty() {
            return Ok(false);
        }
        let m = Matrix::from_rows(rows).expect("uniform rows");
        if m.rank(f) != alg.dim() {
            return Ok(false);
        }
    }
    Ok(true)
}
