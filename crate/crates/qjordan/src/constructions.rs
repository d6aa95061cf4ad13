//! Canonical example algebras and the linear/quadratic bridge in odd
//! characteristic.

use crate::gf::{Fe, FieldSpec};
use crate::linalg::{vec_add, vec_is_zero, vec_scale, vec_sub, Matrix, Vector};
use crate::qjcore::{QuadraticAlgebra, DEFAULT_ELEMENT_BOUND};
use crate::{Error, Result};

/// The field `F_{p^m}` viewed as a quadratic algebra over `F_p` in its power
/// basis, with `bQ_a = a² b`. A division algebra for every `(p, m)`.
pub fn field_algebra(p: u64, m: usize) -> Result<QuadraticAlgebra> {
    let base = FieldSpec::prime(p)?;
    let k = FieldSpec::extension(p, m)?;
    let gen = if m == 1 {
        k.one()
    } else {
        k.from_coeffs(&{
            let mut c = vec![0u64; m];
            c[1] = 1;
            c
        })?
    };
    // Multiplication-by-z as an m x m matrix over F_p in the power basis.
    let mult_matrix = |z: Fe| -> Matrix {
        let rows = (0..m)
            .map(|r| {
                let prod = k.mul(k.pow(gen, r as u64), z);
                k.coeffs(prod).iter().map(|&c| Fe(c as u8)).collect()
            })
            .collect();
        Matrix::from_rows(rows).expect("uniform rows")
    };
    let diag_ops = (0..m)
        .map(|i| mult_matrix(k.pow(gen, 2 * i as u64)))
        .collect();
    let mut polar_ops = Vec::new();
    let two = k.scalar(2);
    for i in 0..m {
        for j in i + 1..m {
            polar_ops.push(mult_matrix(k.mul(two, k.pow(gen, (i + j) as u64))));
        }
    }
    let mut unit = vec![Fe::ZERO; m];
    unit[0] = Fe::ONE;
    QuadraticAlgebra::new(base, unit, diag_ops, polar_ops)
}

/// The full matrix algebra `M_r(F_p)` with the sandwich operator
/// `bQ_a = a b a`, flattened row-major into dimension `r²`.
pub fn matrix_plus_algebra(p: u64, r: usize) -> Result<QuadraticAlgebra> {
    if r < 2 {
        return Err(Error::Invalid("matrix algebra requires r >= 2".into()));
    }
    let f = FieldSpec::prime(p)?;
    let n = r * r;
    let size = (p as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if size > DEFAULT_ELEMENT_BOUND {
        return Err(Error::BoundExceeded {
            size,
            bound: DEFAULT_ELEMENT_BOUND,
        });
    }
    // r x r matrix product on row-major flattenings.
    let mmul = |a: &[Fe], b: &[Fe]| -> Vector {
        let mut out = vec![Fe::ZERO; n];
        for i in 0..r {
            for k in 0..r {
                let c = a[i * r + k];
                if c.is_zero() {
                    continue;
                }
                for j in 0..r {
                    out[i * r + j] = f.add(out[i * r + j], f.mul(c, b[k * r + j]));
                }
            }
        }
        out
    };
    let basis = |k: usize| -> Vector {
        let mut v = vec![Fe::ZERO; n];
        v[k] = Fe::ONE;
        v
    };
    let sandwich_op = |left: &[Fe], right: &[Fe]| -> Matrix {
        let rows = (0..n).map(|l| mmul(left, &mmul(&basis(l), right))).collect();
        Matrix::from_rows(rows).expect("uniform rows")
    };
    let diag_ops = (0..n).map(|k| sandwich_op(&basis(k), &basis(k))).collect();
    let mut polar_ops = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let m = sandwich_op(&basis(i), &basis(j)).add(&sandwich_op(&basis(j), &basis(i)), &f);
            polar_ops.push(m);
        }
    }
    let mut unit = vec![Fe::ZERO; n];
    for d in 0..r {
        unit[d * r + d] = Fe::ONE;
    }
    QuadraticAlgebra::new(f, unit, diag_ops, polar_ops)
}

/// A commutative unital algebra given by its multiplication table, the
/// carrier for the linear Jordan axiom `a²·(ba) = (a²·b)·a` in odd
/// characteristic. The table is not validated beyond its shape; use
/// [`LinearJordanAlgebra::is_linear_jordan`] to check the semantics.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearJordanAlgebra {
    field: FieldSpec,
    dim: usize,
    unit: Vector,
    /// `table[i][j]` holds the coordinates of `e_i · e_j`.
    table: Vec<Vec<Vector>>,
}

impl LinearJordanAlgebra {
    pub fn new(
        field: FieldSpec,
        unit: Vector,
        table: Vec<Vec<Vector>>,
    ) -> Result<LinearJordanAlgebra> {
        if field.p() == 2 {
            return Err(Error::Invalid(
                "linear Jordan algebras require odd characteristic".into(),
            ));
        }
        let dim = unit.len();
        if dim == 0 || vec_is_zero(&unit) {
            return Err(Error::Invalid("the unit must be nonzero".into()));
        }
        if table.len() != dim || table.iter().any(|r| r.len() != dim) {
            return Err(Error::Dimension("multiplication table is not dim x dim".into()));
        }
        if table
            .iter()
            .flatten()
            .any(|v| v.len() != dim || v.iter().any(|e| e.index() >= field.order()))
        {
            return Err(Error::Dimension("table entry of wrong shape".into()));
        }
        Ok(LinearJordanAlgebra {
            field,
            dim,
            unit,
            table,
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

    /// The bilinear product extending the table.
    pub fn product(&self, a: &[Fe], b: &[Fe]) -> Vector {
        let f = &self.field;
        let mut out = vec![Fe::ZERO; self.dim];
        for (i, &ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let c = f.mul(ai, bj);
                out = vec_add(&out, &vec_scale(c, &self.table[i][j], f), f);
            }
        }
        out
    }

    /// The associator `{a, x, b} = (a·x)·b − a·(x·b)`.
    pub fn associator(&self, a: &[Fe], x: &[Fe], b: &[Fe]) -> Vector {
        let f = &self.field;
        vec_sub(
            &self.product(&self.product(a, x), b),
            &self.product(a, &self.product(x, b)),
            f,
        )
    }

    pub fn elements(&self) -> Result<Vec<Vector>> {
        let size = (self.field.order() as u128).pow(self.dim as u32);
        if size > DEFAULT_ELEMENT_BOUND {
            return Err(Error::BoundExceeded {
                size,
                bound: DEFAULT_ELEMENT_BOUND,
            });
        }
        let q = self.field.order();
        let mut out = Vec::with_capacity(size as usize);
        for idx in 0..size as usize {
            let mut v = vec![Fe::ZERO; self.dim];
            let mut rest = idx;
            for c in v.iter_mut() {
                *c = Fe((rest % q) as u8);
                rest /= q;
            }
            out.push(v);
        }
        Ok(out)
    }

    /// Exhaustive check of commutativity, the unit law, and the Jordan axiom
    /// `a²·(b·a) = (a²·b)·a`.
    pub fn is_linear_jordan(&self) -> Result<bool> {
        let elems = self.elements()?;
        for a in &elems {
            if self.product(&self.unit, a) != *a || self.product(a, &self.unit) != *a {
                return Ok(false);
            }
            for b in &elems {
                if self.product(a, b) != self.product(b, a) {
                    return Ok(false);
                }
            }
        }
        for a in &elems {
            let a2 = self.product(a, a);
            for b in &elems {
                let lhs = self.product(&a2, &self.product(b, a));
                let rhs = self.product(&self.product(&a2, b), a);
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Whether some `b` satisfies `a·b = 1` and `a²·b = a` (exhaustive scan).
    pub fn is_invertible(&self, a: &[Fe]) -> Result<bool> {
        if vec_is_zero(a) {
            return Ok(false);
        }
        let a2 = self.product(a, a);
        for b in self.elements()? {
            if self.product(a, &b) == self.unit && self.product(&a2, &b) == *a {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Serializes in the `lja v1` plain-text format: one `M i` block per
    /// basis vector, whose rows are the coordinates of `e_i · e_j`.
    pub fn to_text(&self) -> String {
        let f = &self.field;
        let render_vec = |v: &[Fe]| {
            v.iter()
                .map(|&e| f.render(e))
                .collect::<Vec<_>>()
                .join(" ")
        };
        let mut out = String::from("lja v1\n");
        out.push_str(&format!("p {}\n", f.p()));
        out.push_str(&format!("m {}\n", f.m()));
        if let Some(modulus) = f.modulus() {
            let words: Vec<String> = modulus.iter().map(|c| c.to_string()).collect();
            out.push_str(&format!("modulus {}\n", words.join(" ")));
        }
        out.push_str(&format!("dim {}\n", self.dim));
        out.push_str(&format!("unit {}\n", render_vec(&self.unit)));
        for (i, row) in self.table.iter().enumerate() {
            out.push_str(&format!("M {}\n", i + 1));
            for v in row {
                out.push_str(&render_vec(v));
                out.push('\n');
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<LinearJordanAlgebra> {
        let perr = |line: usize, msg: &str| Error::Parse {
            line,
            msg: msg.to_string(),
        };
        let mut rest: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(n, l)| (n + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty())
            .collect();
        rest.reverse();
        let (ln, header) = rest.pop().ok_or(perr(0, "empty file"))?;
        if header != "lja v1" {
            return Err(perr(ln, "expected header 'lja v1'"));
        }
        let mut p: Option<u64> = None;
        let mut m: usize = 1;
        let mut modulus: Option<Vec<u64>> = None;
        let mut dim: Option<usize> = None;
        let mut unit_words: Option<Vec<String>> = None;
        let mut blocks: Vec<(usize, usize, Vec<Vec<String>>)> = Vec::new();
        while let Some((ln, line)) = rest.pop() {
            let mut words = line.split_whitespace();
            let key = words.next().unwrap();
            let args: Vec<&str> = words.collect();
            match key {
                "p" => p = args.first().and_then(|s| s.parse().ok()),
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
                "dim" => dim = args.first().and_then(|s| s.parse().ok()),
                "unit" => unit_words = Some(args.iter().map(|s| s.to_string()).collect()),
                "M" => {
                    let n = dim.ok_or(perr(ln, "'M' block before 'dim'"))?;
                    let i: usize = args
                        .first()
                        .and_then(|s| s.parse().ok())
                        .ok_or(perr(ln, "bad 'M' index"))?;
                    let mut rows = Vec::with_capacity(n);
                    for _ in 0..n {
                        let (rln, row) = rest.pop().ok_or(perr(ln, "'M' block truncated"))?;
                        let entries: Vec<String> =
                            row.split_whitespace().map(|s| s.to_string()).collect();
                        if entries.len() != n {
                            return Err(perr(rln, "wrong number of entries in table row"));
                        }
                        rows.push(entries);
                    }
                    blocks.push((ln, i, rows));
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
        let unit_words = unit_words.ok_or(perr(0, "missing 'unit' line"))?;
        if unit_words.len() != dim {
            return Err(perr(0, "unit has wrong number of coordinates"));
        }
        let unit: Vector = unit_words
            .iter()
            .map(|w| field.parse_element(w).map_err(|e| perr(0, &e.to_string())))
            .collect::<Result<_>>()?;
        let mut table: Vec<Option<Vec<Vector>>> = vec![None; dim];
        for (ln, i, rows) in blocks {
            if i == 0 || i > dim {
                return Err(perr(ln, "'M' index out of range"));
            }
            let parsed: Vec<Vector> = rows
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|w| field.parse_element(w).map_err(|e| perr(ln, &e.to_string())))
                        .collect::<Result<Vector>>()
                })
                .collect::<Result<_>>()?;
            table[i - 1] = Some(parsed);
        }
        let table: Vec<Vec<Vector>> = table
            .into_iter()
            .enumerate()
            .map(|(i, t)| t.ok_or(perr(0, &format!("missing block 'M {}'", i + 1))))
            .collect::<Result<_>>()?;
        LinearJordanAlgebra::new(field, unit, table).map_err(|e| perr(0, &e.to_string()))
    }
}

/// The product `a·b = ½ 1Q_{a,b}` attached to a weak quadratic Jordan
/// algebra in odd characteristic.
pub fn to_linear(j: &QuadraticAlgebra) -> Result<LinearJordanAlgebra> {
    let f = j.field().clone();
    let half = f.half()?;
    let unit = j.unit().clone();
    let table = (0..j.dim())
        .map(|i| {
            (0..j.dim())
                .map(|k| {
                    let polar = j.q_polar(&j.basis_vector(i), &j.basis_vector(k));
                    vec_scale(half, &crate::linalg::apply(&unit, &polar, &f), &f)
                })
                .collect()
        })
        .collect();
    LinearJordanAlgebra::new(f, unit, table)
}

/// The quadratic algebra with `bQ_a = −a²·b + 2a·(a·b)` attached to a
/// commutative unital algebra in odd characteristic.
pub fn from_linear(l: &LinearJordanAlgebra) -> Result<QuadraticAlgebra> {
    let f = l.field().clone();
    let n = l.dim();
    let basis = |i: usize| {
        let mut v = vec![Fe::ZERO; n];
        v[i] = Fe::ONE;
        v
    };
    let two = f.scalar(2);
    let q_for = |a: &[Fe]| -> Matrix {
        let a2 = l.product(a, a);
        let rows = (0..n)
            .map(|r| {
                let b = basis(r);
                let twice = vec_scale(two, &l.product(a, &l.product(a, &b)), &f);
                vec_sub(&twice, &l.product(&a2, &b), &f)
            })
            .collect();
        Matrix::from_rows(rows).expect("uniform rows")
    };
    let diag_ops: Vec<Matrix> = (0..n).map(|i| q_for(&basis(i))).collect();
    let mut polar_ops = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let sum = vec_add(&basis(i), &basis(j), &f);
            polar_ops.push(q_for(&sum).sub(&diag_ops[i], &f).sub(&diag_ops[j], &f));
        }
    }
    QuadraticAlgebra::new(f, l.unit().clone(), diag_ops, polar_ops)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::apply;

    #[test]
    fn field_algebra_basics() {
        let j = field_algebra(2, 1).unwrap();
        assert_eq!(j.dim(), 1);
        assert_eq!(j.q_op(j.unit()), Matrix::identity(1));
        // F_4 as an algebra over F_2 is a division algebra.
        let j = field_algebra(2, 2).unwrap();
        for a in j.elements().unwrap() {
            assert_eq!(j.is_invertible(&a), !vec_is_zero(&a));
        }
    }

    #[test]
    fn field_algebra_operator_is_squared_multiplication() {
        let j = field_algebra(3, 2).unwrap();
        let k = FieldSpec::extension(3, 2).unwrap();
        let to_fe = |v: &[Fe]| k.from_coeffs(&[v[0].0 as u64, v[1].0 as u64]).unwrap();
        let from_fe = |e: Fe| {
            let c = k.coeffs(e);
            vec![Fe(c[0] as u8), Fe(c[1] as u8)]
        };
        for a in j.elements().unwrap() {
            let q = j.q_op(&a);
            let a2 = k.mul(to_fe(&a), to_fe(&a));
            for b in j.elements().unwrap() {
                assert_eq!(apply(&b, &q, j.field()), from_fe(k.mul(a2, to_fe(&b))));
            }
        }
    }

    #[test]
    fn matrix_algebra_basics() {
        let j = matrix_plus_algebra(2, 2).unwrap();
        assert_eq!(j.dim(), 4);
        assert_eq!(j.q_op(j.unit()), Matrix::identity(4));
        // Q_{E12} is singular: E12·x·E12 has rank at most 1.
        let e12 = vec![Fe(0), Fe(1), Fe(0), Fe(0)];
        assert!(!j.is_invertible(&e12));
        assert!(matrix_plus_algebra(2, 1).is_err());
        assert!(matrix_plus_algebra(3, 3).is_err()); // 3^9 elements exceed the bound
    }

    #[test]
    fn matrix_algebra_sandwich_oracle() {
        // Independent oracle: compute aba directly on 2x2 matrices.
        let j = matrix_plus_algebra(3, 2).unwrap();
        let f = j.field().clone();
        let mmul = |a: &[Fe], b: &[Fe]| -> Vector {
            let mut out = vec![Fe::ZERO; 4];
            for i in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        out[i * 2 + l] =
                            f.add(out[i * 2 + l], f.mul(a[i * 2 + k], b[k * 2 + l]));
                    }
                }
            }
            out
        };
        for a in j.elements().unwrap().iter().step_by(7) {
            let q = j.q_op(a);
            for b in j.elements().unwrap().iter().step_by(5) {
                assert_eq!(apply(b, &q, &f), mmul(a, &mmul(b, a)));
            }
        }
    }

    #[test]
    fn to_linear_of_prime_field_is_ordinary_product() {
        let j = field_algebra(5, 1).unwrap();
        let l = to_linear(&j).unwrap();
        let f = l.field().clone();
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(l.product(&[a], &[b]), vec![f.mul(a, b)]);
            }
        }
        assert_eq!(l.unit(), j.unit());
        assert!(l.is_linear_jordan().unwrap());
    }

    #[test]
    fn to_linear_rejects_char_two() {
        let j = field_algebra(2, 2).unwrap();
        assert!(to_linear(&j).is_err());
    }

    #[test]
    fn from_linear_round_trip_f5() {
        let j = field_algebra(5, 1).unwrap();
        let l = to_linear(&j).unwrap();
        assert_eq!(from_linear(&l).unwrap(), j);
    }

    #[test]
    fn from_linear_one_dimensional_idempotent() {
        // e·e = e gives bQ_a = a² b.
        let f = FieldSpec::prime(3).unwrap();
        let l = LinearJordanAlgebra::new(f.clone(), vec![Fe(1)], vec![vec![vec![Fe(1)]]]).unwrap();
        let j = from_linear(&l).unwrap();
        for a in f.elements() {
            let q = j.q_op(&[a]);
            for b in f.elements() {
                assert_eq!(apply(&[b], &q, &f), vec![f.mul(f.mul(a, a), b)]);
            }
        }
        assert_eq!(j.q_op(j.unit()), Matrix::identity(1));
    }

    #[test]
    fn linear_jordan_rejects_noncommutative() {
        let f = FieldSpec::prime(3).unwrap();
        // e1 = unit; e2·e1 deliberately differs from e1·e2.
        let e1 = vec![Fe(1), Fe(0)];
        let e2 = vec![Fe(0), Fe(1)];
        let table = vec![
            vec![e1.clone(), e2.clone()],
            vec![vec![Fe(2), Fe(0)], e1.clone()],
        ];
        let l = LinearJordanAlgebra::new(f, e1, table).unwrap();
        assert!(!l.is_linear_jordan().unwrap());
    }

    #[test]
    fn symmetrized_matrix_product_is_linear_jordan() {
        let j = matrix_plus_algebra(3, 2).unwrap();
        let l = to_linear(&j).unwrap();
        assert!(l.is_linear_jordan().unwrap());
    }

    #[test]
    fn associator_trivial_cases() {
        let j = matrix_plus_algebra(3, 2).unwrap();
        let l = to_linear(&j).unwrap();
        let elems = l.elements().unwrap();
        for x in elems.iter().step_by(7) {
            for b in elems.iter().step_by(11) {
                assert!(vec_is_zero(&l.associator(l.unit(), x, b)));
            }
        }
        // Field algebras associate.
        let lf = to_linear(&field_algebra(3, 2).unwrap()).unwrap();
        for a in lf.elements().unwrap() {
            for x in lf.elements().unwrap() {
                for b in lf.elements().unwrap() {
                    assert!(vec_is_zero(&lf.associator(&a, &x, &b)));
                }
            }
        }
    }

    #[test]
    fn commutator_of_unit_polars_is_four_times_associator() {
        // x[Q_{1,a}, Q_{1,b}] = 4{a, x, b} on the symmetrized matrix algebra.
        let j = matrix_plus_algebra(3, 2).unwrap();
        let l = to_linear(&j).unwrap();
        let f = j.field().clone();
        let four = f.scalar(4);
        let elems = j.elements().unwrap();
        for a in elems.iter().step_by(5) {
            let qa = j.q_polar(j.unit(), a);
            for b in elems.iter().step_by(7) {
                let qb = j.q_polar(j.unit(), b);
                let comm = qa.mul(&qb, &f).sub(&qb.mul(&qa, &f), &f);
                for x in &elems {
                    let lhs = apply(x, &comm, &f);
                    let rhs = vec_scale(four, &l.associator(a, x, b), &f);
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn linear_invertibility_matches_quadratic() {
        let j = field_algebra(3, 2).unwrap();
        let l = to_linear(&j).unwrap();
        for a in j.elements().unwrap() {
            assert_eq!(l.is_invertible(&a).unwrap(), j.is_invertible(&a));
        }
        let jm = matrix_plus_algebra(3, 2).unwrap();
        let lm = to_linear(&jm).unwrap();
        for a in jm.elements().unwrap() {
            assert_eq!(lm.is_invertible(&a).unwrap(), jm.is_invertible(&a));
        }
    }

    #[test]
    fn lja_text_round_trip() {
        let l = to_linear(&matrix_plus_algebra(3, 2).unwrap()).unwrap();
        let text = l.to_text();
        let back = LinearJordanAlgebra::parse(&text).unwrap();
        assert_eq!(back, l);
        assert!(LinearJordanAlgebra::parse("lja v1\np 2\n").is_err());
    }
}
