//! The quadratic algebra `(J, Q, 1)`: operator evaluation, inverses,
//! isotopes, scalar extension, and the plain-text file format.
//!
//! An algebra is stored as its basis operator matrices `Q_{e_i}` and
//! `Q_{e_i,e_j}` (i < j); the operator of an arbitrary element is assembled
//! with the quadratic-map expansion
//! `Q_a = Σ t_i² Q_{e_i} + Σ_{i<j} t_i t_j Q_{e_i,e_j}` for `a = Σ t_i e_i`.
//! Any such matrix data defines a legitimate quadratic map, which is what
//! makes the exhaustive search space enumerable and makes scalar extension a
//! plain reinterpretation of the entries.

use crate::gf::{Fe, FieldSpec};
use crate::linalg::{apply, vec_add, vec_is_zero, Matrix, Vector};
use crate::{Error, Result};

/// Exhaustive checks iterate all elements of `J`; they refuse (rather than
/// sample) once `|J|` exceeds this bound.
pub const DEFAULT_ELEMENT_BOUND: u128 = 729;

/// A finite quadratic algebra with distinguished unit.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadraticAlgebra {
    field: FieldSpec,
    dim: usize,
    unit: Vector,
    /// `Q_{e_i}` for each basis vector.
    diag_ops: Vec<Matrix>,
    /// `Q_{e_i,e_j}` for i < j, indexed by [`QuadraticAlgebra::pair_index`].
    polar_ops: Vec<Matrix>,
}

impl QuadraticAlgebra {
    pub fn new(
        field: FieldSpec,
        unit: Vector,
        diag_ops: Vec<Matrix>,
        polar_ops: Vec<Matrix>,
    ) -> Result<QuadraticAlgebra> {
        let dim = unit.len();
        if dim == 0 {
            return Err(Error::Invalid("dimension must be at least 1".into()));
        }
        if vec_is_zero(&unit) {
            return Err(Error::Invalid("the unit must be nonzero".into()));
        }
        if unit.iter().any(|e| e.index() >= field.order()) {
            return Err(Error::Invalid("unit coordinate out of field range".into()));
        }
        if diag_ops.len() != dim || polar_ops.len() != dim * (dim - 1) / 2 {
            return Err(Error::Dimension(format!(
                "expected {} diagonal and {} polar operators, got {} and {}",
                dim,
                dim * (dim - 1) / 2,
                diag_ops.len(),
                polar_ops.len()
            )));
        }
        for m in diag_ops.iter().chain(&polar_ops) {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::Dimension("operator matrix is not dim x dim".into()));
            }
            if m.flatten().iter().any(|e| e.index() >= field.order()) {
                return Err(Error::Invalid("operator entry out of field range".into()));
            }
        }
        Ok(QuadraticAlgebra {
            field,
            dim,
            unit,
            diag_ops,
            polar_ops,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn diag_op(&self, i: usize) -> &Matrix {
        &self.diag_ops[i]
    }

    /// `Q_{e_i,e_j}` for i < j.
    pub fn polar_op(&self, i: usize, j: usize) -> &Matrix {
        &self.polar_ops[self.pair_index(i, j)]
    }

    /// Index of the pair (i, j), i < j, in the flattened polar list.
    pub fn pair_index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.dim);
        i * self.dim - i * (i + 1) / 2 + (j - i - 1)
    }

    pub fn zero_vector(&self) -> Vector {
        vec![Fe::ZERO; self.dim]
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        let mut v = self.zero_vector();
        v[i] = Fe::ONE;
        v
    }

    /// The operator `Q_a`, assembled from the basis operators.
    pub fn q_op(&self, a: &[Fe]) -> Matrix {
        let f = &self.field;
        let mut out = Matrix::zeros(self.dim, self.dim);
        for (i, &ti) in a.iter().enumerate() {
            if ti.is_zero() {
                continue;
            }
            out = out.add(&self.diag_ops[i].scale(f.mul(ti, ti), f), f);
            for (j, &tj) in a.iter().enumerate().skip(i + 1) {
                if tj.is_zero() {
                    continue;
                }
                out = out.add(&self.polar_ops[self.pair_index(i, j)].scale(f.mul(ti, tj), f), f);
            }
        }
        out
    }

    /// The polar operator `Q_{a,b} = Q_{a+b} - Q_a - Q_b`.
    pub fn q_polar(&self, a: &[Fe], b: &[Fe]) -> Matrix {
        let f = &self.field;
        let sum = vec_add(a, b, f);
        self.q_op(&sum).sub(&self.q_op(a), f).sub(&self.q_op(b), f)
    }

    /// The operator `V_{a,b}`, whose i-th row is `e_i V_{a,b} = b Q_{a,e_i}`.
    pub fn v_op(&self, a: &[Fe], b: &[Fe]) -> Matrix {
        let rows = (0..self.dim)
            .map(|i| apply(b, &self.q_polar(a, &self.basis_vector(i)), &self.field))
            .collect();
        Matrix::from_rows(rows).expect("uniform row lengths")
    }

    pub fn is_invertible(&self, a: &[Fe]) -> bool {
        self.q_op(a).inverse(&self.field).is_some()
    }

    /// `a^{-1} = a Q_a^{-1}`; `None` is the non-invertible verdict.
    pub fn inverse(&self, a: &[Fe]) -> Option<Vector> {
        let qinv = self.q_op(a).inverse(&self.field)?;
        Some(apply(a, &qinv, &self.field))
    }

    /// The isotope at an invertible element: unit `a`, operators
    /// `Q^a_y = Q_a^{-1} Q_y`.
    pub fn isotope(&self, a: &[Fe]) -> Result<QuadraticAlgebra> {
        let qinv = self.q_op(a).inverse(&self.field).ok_or(Error::NotInvertible)?;
        let diag_ops = self.diag_ops.iter().map(|q| qinv.mul(q, &self.field)).collect();
        let polar_ops = self.polar_ops.iter().map(|q| qinv.mul(q, &self.field)).collect();
        QuadraticAlgebra::new(self.field.clone(), a.to_vec(), diag_ops, polar_ops)
    }

    /// Scalar extension to `F_{p^m}` with the canonical modulus. The unit
    /// coordinates and operator entries are unchanged: base-field residues
    /// keep their canonical indices inside the extension, so the matrices are
    /// reinterpreted, not recomputed.
    pub fn scalar_extension(&self, m: usize) -> Result<QuadraticAlgebra> {
        if self.field.m() != 1 {
            return Err(Error::Invalid(
                "scalar extension starts from an algebra over a prime field".into(),
            ));
        }
        if m < 2 {
            return Err(Error::Invalid("extension degree must be >= 2".into()));
        }
        let field = FieldSpec::extension(self.field.p(), m)?;
        QuadraticAlgebra::new(
            field,
            self.unit.clone(),
            self.diag_ops.clone(),
            self.polar_ops.clone(),
        )
    }

    /// Whether the linear map `f` (acting on rows) is a unital homomorphism
    /// into `other`: `f(1) = 1'` and `f(aQ_b) = f(a) Q'_{f(b)}`, exhaustively.
    pub fn is_homomorphism(&self, map: &Matrix, other: &QuadraticAlgebra) -> Result<bool> {
        if self.field != other.field {
            return Err(Error::Invalid("algebras are over different fields".into()));
        }
        if map.rows() != self.dim || map.cols() != other.dim {
            return Err(Error::Dimension(format!(
                "map must be {}x{}, got {}x{}",
                self.dim,
                other.dim,
                map.rows(),
                map.cols()
            )));
        }
        let f = &self.field;
        if apply(&self.unit, map, f) != other.unit {
            return Ok(false);
        }
        let elems = self.elements()?;
        for a in &elems {
            for b in &elems {
                let lhs = apply(&apply(a, &self.q_op(b), f), map, f);
                let rhs = apply(&apply(a, map, f), &other.q_op(&apply(b, map, f)), f);
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Whether the span of `basis` contains the unit and is closed under
    /// `Q_a` for every `a` in the span (exhaustive).
    pub fn is_subalgebra(&self, basis: &[Vector]) -> Result<bool> {
        let f = &self.field;
        let q = f.order() as u128;
        let k = basis.len();
        if basis.iter().any(|v| v.len() != self.dim) {
            return Err(Error::Dimension("basis vector of wrong length".into()));
        }
        let size = q.checked_pow(k as u32).ok_or(Error::BoundExceeded {
            size: u128::MAX,
            bound: DEFAULT_ELEMENT_BOUND,
        })?;
        if size > DEFAULT_ELEMENT_BOUND {
            return Err(Error::BoundExceeded {
                size,
                bound: DEFAULT_ELEMENT_BOUND,
            });
        }
        // Enumerate the span (with repetition; fine at these sizes).
        let mut span = Vec::new();
        let mut seen = std::collections::HashSet::new();
        let mut coeffs = vec![Fe::ZERO; k];
        loop {
            let mut v = self.zero_vector();
            for (c, b) in coeffs.iter().zip(basis) {
                if !c.is_zero() {
                    v = vec_add(&v, &crate::linalg::vec_scale(*c, b, f), f);
                }
            }
            if seen.insert(v.clone()) {
                span.push(v);
            }
            let mut done = true;
            for c in coeffs.iter_mut() {
                let next = c.index() + 1;
                if next < f.order() {
                    *c = Fe(next as u8);
                    done = false;
                    break;
                }
                *c = Fe::ZERO;
            }
            if done {
                break;
            }
        }
        if !seen.contains(&self.unit) {
            return Ok(false);
        }
        for a in &span {
            let qa = self.q_op(a);
            for v in &span {
                if !seen.contains(&apply(v, &qa, f)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `|J| = q^n` as a big integer.
    pub fn element_count(&self) -> u128 {
        (self.field.order() as u128).pow(self.dim as u32)
    }

    /// All elements in canonical order (coordinate `e_0` least significant),
    /// so element 0 comes first. Refuses above the exhaustive bound.
    pub fn elements(&self) -> Result<Vec<Vector>> {
        self.elements_bounded(DEFAULT_ELEMENT_BOUND)
    }

    pub fn elements_bounded(&self, bound: u128) -> Result<Vec<Vector>> {
        let size = self.element_count();
        if size > bound {
            return Err(Error::BoundExceeded { size, bound });
        }
        let q = self.field.order();
        let mut out = Vec::with_capacity(size as usize);
        for idx in 0..size as usize {
            let mut v = self.zero_vector();
            let mut rest = idx;
            for c in v.iter_mut() {
                *c = Fe((rest % q) as u8);
                rest /= q;
            }
            out.push(v);
        }
        Ok(out)
    }

    /// Canonical index of an element (inverse of the enumeration order).
    pub fn element_index(&self, a: &[Fe]) -> usize {
        let q = self.field.order();
        a.iter().rev().fold(0, |acc, &c| acc * q + c.index())
    }

    pub fn render_vector(&self, v: &[Fe]) -> String {
        v.iter()
            .map(|&e| self.field.render(e))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Serializes in the `qja v1` plain-text format.
    pub fn to_text(&self) -> String {
        let f = &self.field;
        let mut out = String::from("qja v1\n");
        out.push_str(&format!("p {}\n", f.p()));
        out.push_str(&format!("m {}\n", f.m()));
        if let Some(modulus) = f.modulus() {
            let words: Vec<String> = modulus.iter().map(|c| c.to_string()).collect();
            out.push_str(&format!("modulus {}\n", words.join(" ")));
        }
        out.push_str(&format!("dim {}\n", self.dim));
        out.push_str(&format!("unit {}\n", self.render_vector(&self.unit)));
        for (i, q) in self.diag_ops.iter().enumerate() {
            out.push_str(&format!("Q {}\n{}\n", i + 1, q.render(f)));
        }
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                out.push_str(&format!(
                    "P {} {}\n{}\n",
                    i + 1,
                    j + 1,
                    self.polar_op(i, j).render(f)
                ));
            }
        }
        out
    }

    /// Parses the `qja v1` format. `#` starts a comment; blank lines are
    /// skipped; missing `P` blocks default to zero matrices.
    pub fn parse(text: &str) -> Result<QuadraticAlgebra> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(n, l)| (n + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let perr = |line: usize, msg: &str| Error::Parse {
            line,
            msg: msg.to_string(),
        };

        let (ln, header) = lines.next().ok_or(perr(0, "empty file"))?;
        if header != "qja v1" {
            return Err(perr(ln, "expected header 'qja v1'"));
        }

        let mut p: Option<u64> = None;
        let mut m: usize = 1;
        let mut modulus: Option<Vec<u64>> = None;
        let mut dim: Option<usize> = None;
        let mut unit: Option<Vec<String>> = None;
        let mut blocks: Vec<(usize, String, Vec<Vec<String>>)> = Vec::new();

        let mut rest: Vec<(usize, &str)> = lines.collect();
        rest.reverse();
        while let Some((ln, line)) = rest.pop() {
            let mut words = line.split_whitespace();
            let key = words.next().unwrap();
            let args: Vec<&str> = words.collect();
            match key {
                "p" => {
                    p = Some(
                        args.first()
                            .and_then(|s| s.parse().ok())
                            .ok_or(perr(ln, "bad 'p' line"))?,
                    )
                }
                "m" => {
                    m = args
                        .first()
                        .and_then(|s| s.parse().ok())
                        .ok_or(perr(ln, "bad 'm' line"))?
                }
                "modulus" => {
                    modulus = Some(
                        args.iter()
                            .map(|s| s.parse().map_err(|_| perr(ln, "bad modulus coefficient")))
                            .collect::<Result<_>>()?,
                    )
                }
                "dim" => {
                    dim = Some(
                        args.first()
                            .and_then(|s| s.parse().ok())
                            .ok_or(perr(ln, "bad 'dim' line"))?,
                    )
                }
                "unit" => unit = Some(args.iter().map(|s| s.to_string()).collect()),
                "Q" | "P" => {
                    let n = dim.ok_or(perr(ln, "operator block before 'dim'"))?;
                    let label = format!("{key} {}", args.join(" "));
                    let mut rows = Vec::with_capacity(n);
                    for _ in 0..n {
                        let (rln, row) = rest
                            .pop()
                            .ok_or(perr(ln, "operator block truncated"))?;
                        let entries: Vec<String> =
                            row.split_whitespace().map(|s| s.to_string()).collect();
                        if entries.len() != n {
                            return Err(perr(rln, "wrong number of entries in matrix row"));
                        }
                        rows.push(entries);
                    }
                    blocks.push((ln, label, rows));
                }
                _ => return Err(perr(ln, &format!("unknown directive '{key}'"))),
            }
        }

        let p = p.ok_or(perr(0, "missing 'p' line"))?;
        let dim = dim.ok_or(perr(0, "missing 'dim' line"))?;
        let field = if m == 1 {
            FieldSpec::prime(p).map_err(|e| perr(0, &e.to_string()))?
        } else {
            let modulus = match modulus {
                Some(mo) => mo,
                None => crate::gf::find_irreducible(p, m).map_err(|e| perr(0, &e.to_string()))?,
            };
            FieldSpec::with_modulus(p, m, &modulus).map_err(|e| perr(0, &e.to_string()))?
        };

        let unit_words = unit.ok_or(perr(0, "missing 'unit' line"))?;
        if unit_words.len() != dim {
            return Err(perr(0, "unit has wrong number of coordinates"));
        }
        let unit: Vector = unit_words
            .iter()
            .map(|w| field.parse_element(w).map_err(|e| perr(0, &e.to_string())))
            .collect::<Result<_>>()?;

        let mut diag_ops: Vec<Option<Matrix>> = vec![None; dim];
        let n_pairs = dim * (dim - 1) / 2;
        let mut polar_ops: Vec<Option<Matrix>> = vec![None; n_pairs];
        let pair_index =
            |i: usize, j: usize| -> usize { i * dim - i * (i + 1) / 2 + (j - i - 1) };
        for (ln, label, rows) in blocks {
            let matrix_rows: Vec<Vector> = rows
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|w| field.parse_element(w).map_err(|e| perr(ln, &e.to_string())))
                        .collect::<Result<Vector>>()
                })
                .collect::<Result<_>>()?;
            let matrix = Matrix::from_rows(matrix_rows).map_err(|e| perr(ln, &e.to_string()))?;
            let words: Vec<&str> = label.split_whitespace().collect();
            match words[0] {
                "Q" => {
                    let i: usize = words
                        .get(1)
                        .and_then(|s| s.parse().ok())
                        .ok_or(perr(ln, "bad 'Q' index"))?;
                    if i == 0 || i > dim {
                        return Err(perr(ln, "'Q' index out of range"));
                    }
                    diag_ops[i - 1] = Some(matrix);
                }
                _ => {
                    let i: usize = words
                        .get(1)
                        .and_then(|s| s.parse().ok())
                        .ok_or(perr(ln, "bad 'P' index"))?;
                    let j: usize = words
                        .get(2)
                        .and_then(|s| s.parse().ok())
                        .ok_or(perr(ln, "bad 'P' index"))?;
                    if i == 0 || j == 0 || i >= j || j > dim {
                        return Err(perr(ln, "'P' indices must satisfy 1 <= i < j <= dim"));
                    }
                    polar_ops[pair_index(i - 1, j - 1)] = Some(matrix);
                }
            }
        }
        let diag_ops: Vec<Matrix> = diag_ops
            .into_iter()
            .enumerate()
            .map(|(i, op)| op.ok_or(perr(0, &format!("missing block 'Q {}'", i + 1))))
            .collect::<Result<_>>()?;
        let polar_ops: Vec<Matrix> = polar_ops
            .into_iter()
            .map(|op| op.unwrap_or_else(|| Matrix::zeros(dim, dim)))
            .collect();
        QuadraticAlgebra::new(field, unit, diag_ops, polar_ops)
            .map_err(|e| perr(0, &e.to_string()))
    }
}

/// Precomputed per-element data for exhaustive checks: the canonical element
/// list, every `Q_a`, and every inverse.
pub struct ElementTable {
    field: FieldSpec,
    dim: usize,
    pub elements: Vec<Vector>,
    pub q_ops: Vec<Matrix>,
    pub q_invs: Vec<Option<Matrix>>,
    /// Index of `a^{-1}` for each element index, when invertible.
    pub inverses: Vec<Option<usize>>,
    basis_indices: Vec<usize>,
    unit_index: usize,
}

impl ElementTable {
    pub fn build(alg: &QuadraticAlgebra) -> Result<ElementTable> {
        let elements = alg.elements()?;
        let f = alg.field().clone();
        let q_ops: Vec<Matrix> = elements.iter().map(|a| alg.q_op(a)).collect();
        let q_invs: Vec<Option<Matrix>> = q_ops.iter().map(|m| m.inverse(&f)).collect();
        let inverses = elements
            .iter()
            .zip(&q_invs)
            .map(|(a, qi)| qi.as_ref().map(|qi| alg.element_index(&apply(a, qi, &f))))
            .collect();
        let basis_indices = (0..alg.dim())
            .map(|i| alg.element_index(&alg.basis_vector(i)))
            .collect();
        let unit_index = alg.element_index(alg.unit());
        Ok(ElementTable {
            field: f,
            dim: alg.dim(),
            elements,
            q_ops,
            q_invs,
            inverses,
            basis_indices,
            unit_index,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn unit_index(&self) -> usize {
        self.unit_index
    }

    pub fn basis_index(&self, i: usize) -> usize {
        self.basis_indices[i]
    }

    pub fn index_of(&self, v: &[Fe]) -> usize {
        let q = self.field.order();
        v.iter().rev().fold(0, |acc, &c| acc * q + c.index())
    }

    pub fn add(&self, i: usize, j: usize) -> usize {
        self.index_of(&vec_add(&self.elements[i], &self.elements[j], &self.field))
    }

    pub fn neg(&self, i: usize) -> usize {
        self.index_of(&crate::linalg::vec_neg(&self.elements[i], &self.field))
    }

    /// Applies an operator matrix to element `i`, returning an element index.
    pub fn apply_to(&self, i: usize, m: &Matrix) -> usize {
        self.index_of(&apply(&self.elements[i], m, &self.field))
    }

    /// `Q_{a,b}` from the cached diagonal operators.
    pub fn polar(&self, i: usize, j: usize) -> Matrix {
        let sum = self.add(i, j);
        self.q_ops[sum]
            .sub(&self.q_ops[i], &self.field)
            .sub(&self.q_ops[j], &self.field)
    }

    /// `V_{a,b}` with rows `e_i V_{a,b} = b Q_{a,e_i}`.
    pub fn v_matrix(&self, a: usize, b: usize) -> Matrix {
        let rows = (0..self.dim)
            .map(|i| {
                apply(
                    &self.elements[b],
                    &self.polar(a, self.basis_indices[i]),
                    &self.field,
                )
            })
            .collect();
        Matrix::from_rows(rows).expect("uniform row lengths")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{field_algebra, matrix_plus_algebra};
    use crate::gf::FieldSpec;

    #[test]
    fn q_op_at_zero_and_unit() {
        let j = field_algebra(2, 2).unwrap();
        assert!(j.q_op(&j.zero_vector()).is_zero());
        assert_eq!(j.q_op(j.unit()), Matrix::identity(2));
    }

    #[test]
    fn f4_generator_operator_is_multiplication_by_its_square() {
        // For the 2-dim algebra built from F_4, Q at the generator x is
        // multiplication by x^2 = x + 1.
        let j = field_algebra(2, 2).unwrap();
        let x = vec![Fe(0), Fe(1)];
        let q = j.q_op(&x);
        // x^2 = x+1, so rows: 1 -> x+1, x -> x^2 + x = 1.
        assert_eq!(apply(&[Fe(1), Fe(0)], &q, j.field()), vec![Fe(1), Fe(1)]);
        assert_eq!(apply(&[Fe(0), Fe(1)], &q, j.field()), vec![Fe(1), Fe(0)]);
    }

    #[test]
    fn polar_symmetry_and_degenerate_cases() {
        let j = field_algebra(3, 2).unwrap();
        let elems = j.elements().unwrap();
        for a in &elems {
            assert!(j.q_polar(a, &j.zero_vector()).is_zero());
            for b in &elems {
                assert_eq!(j.q_polar(a, b), j.q_polar(b, a));
            }
            // Q_{a,a} = 2 Q_a.
            let two = j.field().scalar(2);
            assert_eq!(j.q_polar(a, a), j.q_op(a).scale(two, j.field()));
        }
    }

    #[test]
    fn polarization_matches_basis_expansion() {
        // Independent oracle: Q_{a,b} = Σ_i 2 t_i s_i Q_i + Σ_{i<j} (t_i s_j + t_j s_i) Q_ij.
        let j = matrix_plus_algebra(2, 2).unwrap();
        let f = j.field();
        let elems = j.elements().unwrap();
        for a in elems.iter().step_by(3) {
            for b in elems.iter().step_by(5) {
                let mut expect = Matrix::zeros(j.dim(), j.dim());
                for i in 0..j.dim() {
                    let c = f.mul(f.scalar(2), f.mul(a[i], b[i]));
                    expect = expect.add(&j.diag_op(i).scale(c, f), f);
                    for k in i + 1..j.dim() {
                        let c = f.add(f.mul(a[i], b[k]), f.mul(a[k], b[i]));
                        expect = expect.add(&j.polar_op(i, k).scale(c, f), f);
                    }
                }
                assert_eq!(j.q_polar(a, b), expect);
            }
        }
    }

    #[test]
    fn homogeneity_exhaustive() {
        for j in [field_algebra(3, 2).unwrap(), matrix_plus_algebra(2, 2).unwrap()] {
            let f = j.field().clone();
            for a in j.elements().unwrap() {
                for t in f.elements() {
                    let ta = crate::linalg::vec_scale(t, &a, &f);
                    assert_eq!(j.q_op(&ta), j.q_op(&a).scale(f.mul(t, t), &f));
                }
            }
        }
    }

    #[test]
    fn v_symmetry_and_unit_case() {
        // cV_{a,b} = aV_{c,b} over the F_5 field algebra; V_{1,1} = 2·id.
        let j = field_algebra(5, 1).unwrap();
        let f = j.field();
        let elems = j.elements().unwrap();
        for a in &elems {
            assert!(j.v_op(a, &j.zero_vector()).is_zero());
            for b in &elems {
                let vab = j.v_op(a, b);
                for c in &elems {
                    assert_eq!(apply(c, &vab, f), apply(a, &j.v_op(c, b), f));
                }
            }
        }
        let two = f.scalar(2);
        assert_eq!(
            j.v_op(j.unit(), j.unit()),
            Matrix::identity(1).scale(two, f)
        );
    }

    #[test]
    fn inverse_examples() {
        let j = field_algebra(5, 1).unwrap();
        assert_eq!(j.inverse(j.unit()), Some(j.unit().clone()));
        assert_eq!(j.inverse(&[Fe(2)]), Some(vec![Fe(3)]));
        assert_eq!(j.inverse(&j.zero_vector()), None);
    }

    #[test]
    fn isotope_at_unit_is_identity_and_unit_op_is_identity() {
        let j = field_algebra(2, 2).unwrap();
        let iso = j.isotope(j.unit()).unwrap();
        assert_eq!(iso, j);
        // In any isotope, Q at the new unit is the identity.
        let a = vec![Fe(0), Fe(1)];
        let iso = j.isotope(&a).unwrap();
        assert_eq!(iso.q_op(&a), Matrix::identity(2));
        assert_eq!(iso.unit(), &a);
    }

    #[test]
    fn isotope_of_f4_matches_closed_form() {
        // bQ^x_y = x^{-2} y^2 b in the field F_4.
        let j = field_algebra(2, 2).unwrap();
        let k = FieldSpec::extension(2, 2).unwrap();
        let x = vec![Fe(0), Fe(1)];
        let iso = j.isotope(&x).unwrap();
        // Work in F_4 directly: coordinates of J are coefficients of F_4.
        let to_fe = |v: &[Fe]| k.from_coeffs(&[v[0].0 as u64, v[1].0 as u64]).unwrap();
        let from_fe = |e: crate::gf::Fe| {
            let c = k.coeffs(e);
            vec![Fe(c[0] as u8), Fe(c[1] as u8)]
        };
        let xinv2 = k.inv(k.mul(to_fe(&x), to_fe(&x))).unwrap();
        for y in j.elements().unwrap() {
            let qy = iso.q_op(&y);
            for b in j.elements().unwrap() {
                let got = apply(&b, &qy, j.field());
                let y2 = k.mul(to_fe(&y), to_fe(&y));
                let expect = from_fe(k.mul(k.mul(xinv2, y2), to_fe(&b)));
                assert_eq!(got, expect);
            }
        }
    }

    #[test]
    fn products_and_inverses_of_invertibles_stay_invertible() {
        // In a weak algebra, aQ_b and a^{-1} are invertible when a, b are.
        for j in [field_algebra(3, 2).unwrap(), matrix_plus_algebra(2, 2).unwrap()] {
            let f = j.field();
            for a in j.elements().unwrap() {
                if !j.is_invertible(&a) {
                    continue;
                }
                let ainv = j.inverse(&a).unwrap();
                assert!(j.is_invertible(&ainv));
                // Q_{a^{-1}} = Q_a^{-1}.
                assert_eq!(j.q_op(&ainv), j.q_op(&a).inverse(f).unwrap());
                for b in j.elements().unwrap() {
                    if j.is_invertible(&b) {
                        assert!(j.is_invertible(&apply(&a, &j.q_op(&b), f)));
                    }
                }
            }
        }
    }

    #[test]
    fn isotopes_of_weak_algebras_are_weak() {
        // Every isotope of a weak (resp. strict) algebra passes the same
        // axiom suite.
        use crate::identities::{is_strict_qja, is_weak_qja};
        for j in [field_algebra(2, 2).unwrap(), field_algebra(3, 2).unwrap()] {
            for a in j.elements().unwrap() {
                if !j.is_invertible(&a) {
                    continue;
                }
                let iso = j.isotope(&a).unwrap();
                assert!(is_weak_qja(&iso).unwrap());
                assert!(is_strict_qja(&iso).unwrap());
            }
        }
        let j = matrix_plus_algebra(2, 2).unwrap();
        let mut checked = 0;
        for a in j.elements().unwrap() {
            if j.is_invertible(&a) {
                assert!(is_weak_qja(&j.isotope(&a).unwrap()).unwrap());
                checked += 1;
            }
        }
        assert!(checked > 1);
    }

    #[test]
    fn isotope_v_operator_identity() {
        // V^a_{b,c} = V_{b, cQ_a^{-1}} as matrices.
        let j = field_algebra(3, 2).unwrap();
        let f = j.field();
        for a in j.elements().unwrap() {
            let Some(qinv) = j.q_op(&a).inverse(f) else { continue };
            let iso = j.isotope(&a).unwrap();
            for b in j.elements().unwrap() {
                for c in j.elements().unwrap() {
                    let lhs = iso.v_op(&b, &c);
                    let rhs = j.v_op(&b, &apply(&c, &qinv, f));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn isotope_requires_invertible() {
        let j = matrix_plus_algebra(2, 2).unwrap();
        // E12 is not invertible in M_2(F_2)+.
        let e12 = vec![Fe(0), Fe(1), Fe(0), Fe(0)];
        assert!(matches!(j.isotope(&e12), Err(Error::NotInvertible)));
    }

    #[test]
    fn scalar_extension_preserves_shape_and_restricts() {
        let j = field_algebra(2, 1).unwrap();
        let ext = j.scalar_extension(2).unwrap();
        assert_eq!(ext.dim(), j.dim());
        assert_eq!(ext.unit(), j.unit());
        assert_eq!(ext.field().order(), 4);
        // Restriction to base-field coordinates equals the original operator.
        for a in j.elements().unwrap() {
            assert_eq!(ext.q_op(&a).flatten(), j.q_op(&a).flatten());
        }
        // The extension of the F_2 field algebra is F_4 acting by squares:
        // exhaustively, bQ̂_a = a² b.
        let k = ext.field().clone();
        for a in ext.elements().unwrap() {
            let q = ext.q_op(&a);
            for b in ext.elements().unwrap() {
                let got = apply(&b, &q, &k);
                let expect = vec![k.mul(k.mul(a[0], a[0]), b[0])];
                assert_eq!(got, expect);
            }
        }
    }

    #[test]
    fn homomorphism_examples() {
        let j = field_algebra(2, 2).unwrap();
        let id = Matrix::identity(2);
        assert!(j.is_homomorphism(&id, &j).unwrap());
        let zero = Matrix::zeros(2, 2);
        assert!(!j.is_homomorphism(&zero, &j).unwrap());
        // Frobenius b -> b^2 on the F_4 algebra.
        let k = FieldSpec::extension(2, 2).unwrap();
        let mut frob = Matrix::zeros(2, 2);
        for i in 0..2 {
            let e = k.from_coeffs(&[(i == 0) as u64, (i == 1) as u64]).unwrap();
            let sq = k.mul(e, e);
            let c = k.coeffs(sq);
            frob.set(i, 0, Fe(c[0] as u8));
            frob.set(i, 1, Fe(c[1] as u8));
        }
        assert!(j.is_homomorphism(&frob, &j).unwrap());
    }

    #[test]
    fn subalgebra_examples() {
        let j = matrix_plus_algebra(2, 2).unwrap();
        let full: Vec<Vector> = (0..4).map(|i| j.basis_vector(i)).collect();
        assert!(j.is_subalgebra(&full).unwrap());
        assert!(j.is_subalgebra(&[j.unit().clone()]).unwrap());
        // span{I, E12} in M_2(F_2)+ is closed under b -> aba.
        let e12 = vec![Fe(0), Fe(1), Fe(0), Fe(0)];
        assert!(j.is_subalgebra(&[j.unit().clone(), e12]).unwrap());
        // span{E12} does not contain the unit.
        let e12 = vec![Fe(0), Fe(1), Fe(0), Fe(0)];
        assert!(!j.is_subalgebra(&[e12]).unwrap());
    }

    #[test]
    fn enumeration_shape() {
        let j = field_algebra(2, 2).unwrap();
        let elems = j.elements().unwrap();
        assert_eq!(elems.len(), 4);
        assert_eq!(elems[0], j.zero_vector());
        for (i, e) in elems.iter().enumerate() {
            assert_eq!(j.element_index(e), i);
        }
        let j8 = field_algebra(2, 3).unwrap();
        assert_eq!(j8.elements().unwrap().len(), 8);
    }

    #[test]
    fn element_bound_refuses() {
        let j = matrix_plus_algebra(3, 2).unwrap();
        // 3^4 = 81 fits; a degree-2 extension would have 9^4 = 6561 elements.
        let ext = j.scalar_extension(2).unwrap();
        assert!(matches!(
            ext.elements(),
            Err(Error::BoundExceeded { size: 6561, .. })
        ));
    }

    #[test]
    fn text_round_trip() {
        for j in [
            field_algebra(2, 2).unwrap(),
            field_algebra(3, 2).unwrap(),
            matrix_plus_algebra(2, 2).unwrap(),
            field_algebra(2, 1).unwrap().scalar_extension(2).unwrap(),
        ] {
            let text = j.to_text();
            let back = QuadraticAlgebra::parse(&text).unwrap();
            assert_eq!(back, j);
            // Determinism of the rendering itself.
            assert_eq!(back.to_text(), text);
        }
    }

    #[test]
    fn parse_handles_comments_and_defaults() {
        let text = "# a 1-dim example\nqja v1\np 5\nm 1\ndim 1\nunit 1\nQ 1\n1\n";
        let j = QuadraticAlgebra::parse(text).unwrap();
        assert_eq!(j.dim(), 1);
        assert_eq!(j.field().p(), 5);
        // Missing P blocks default to zero: dim 2 with no P block.
        let text = "qja v1\np 2\nm 1\ndim 2\nunit 1 0\nQ 1\n1 0\n0 1\nQ 2\n0 0\n0 0\n";
        let j = QuadraticAlgebra::parse(text).unwrap();
        assert!(j.polar_op(0, 1).is_zero());
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(QuadraticAlgebra::parse("").is_err());
        assert!(QuadraticAlgebra::parse("qja v2\n").is_err());
        assert!(QuadraticAlgebra::parse("qja v1\np 4\nm 1\ndim 1\nunit 1\nQ 1\n1\n").is_err());
        assert!(QuadraticAlgebra::parse("qja v1\np 2\nm 1\ndim 1\nunit 0\nQ 1\n1\n").is_err());
        assert!(QuadraticAlgebra::parse("qja v1\np 2\nm 1\ndim 2\nunit 1 0\nQ 1\n1 0\n").is_err());
    }
}
