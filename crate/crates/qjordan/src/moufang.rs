//! Finite Moufang sets built from weak quadratic Jordan division algebras:
//! explicit root groups as permutations, the little projective group by
//! closure, μ-maps by double-coset search, and the Hua-map structure with its
//! round-trip back to a quadratic algebra.
//!
//! Points are indexed in canonical element order with ∞ last. Permutations
//! compose left-to-right (`p.then(q)` applies `p` first), matching the
//! right-action convention everywhere else in the crate.

use crate::gf::Fe;
use crate::identities;
use crate::linalg::{apply, Matrix};
use crate::qjcore::{ElementTable, QuadraticAlgebra};
use crate::{Error, Result};

/// Default cap on the closure computation for the little projective group.
pub const DEFAULT_GROUP_BOUND: usize = 1_000_000;

/// A permutation of the point set, stored as its image array.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Perm(Vec<u16>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n as u16).collect())
    }

    pub fn from_images(images: Vec<u16>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if (i as usize) >= n || seen[i as usize] {
                return Err(Error::Invalid("image array is not a bijection".into()));
            }
            seen[i as usize] = true;
        }
        Ok(Perm(images))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// Composition in application order: `self` first, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&i| other.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u16; self.0.len()];
        for (i, &img) in self.0.iter().enumerate() {
            inv[img as usize] = i as u16;
        }
        Perm(inv)
    }

    /// Conjugate `g^h = h^{-1} g h`.
    pub fn conjugate_by(&self, h: &Perm) -> Perm {
        h.inverse().then(self).then(h)
    }

    pub fn images(&self) -> &[u16] {
        &self.0
    }
}

/// The Moufang set of a weak quadratic Jordan division algebra: the point set
/// `X = J ∪ {∞}` with one explicit root group per point.
pub struct MoufangSet {
    algebra: QuadraticAlgebra,
    table: ElementTable,
    /// Root groups indexed by point; each sorted by image array.
    root_groups: Vec<Vec<Perm>>,
    tau: Perm,
}

impl MoufangSet {
    pub fn algebra(&self) -> &QuadraticAlgebra {
        &self.algebra
    }

    pub fn table(&self) -> &ElementTable {
        &self.table
    }

    /// Number of points, `|J| + 1`.
    pub fn n_points(&self) -> usize {
        self.table.len() + 1
    }

    /// Index of the point ∞ (last in the point order).
    pub fn infinity(&self) -> usize {
        self.table.len()
    }

    /// Index of the zero element of `J`.
    pub fn zero(&self) -> usize {
        0
    }

    pub fn tau(&self) -> &Perm {
        &self.tau
    }

    pub fn root_group(&self, point: usize) -> &[Perm] {
        &self.root_groups[point]
    }

    /// The translation `x ↦ x + b`, fixing ∞.
    pub fn alpha(&self, b: usize) -> Perm {
        let n = self.n_points();
        let mut images = Vec::with_capacity(n);
        for x in 0..self.table.len() {
            images.push(self.table.add(x, b) as u16);
        }
        images.push(self.infinity() as u16);
        Perm(images)
    }
}

/// Builds `M(J)`: `U_∞` is the translation group, `τ: x ↦ −x^{-1}` swaps
/// 0 and ∞, `U_0 = U_∞^τ`, and `U_c = U_0^{α_c}` for nonzero `c`.
pub fn build_moufang(alg: &QuadraticAlgebra) -> Result<MoufangSet> {
    let table = ElementTable::build(alg)?;
    if !identities::is_weak_with_table(&table) {
        return Err(Error::Invalid(
            "Moufang construction requires a weak quadratic Jordan algebra".into(),
        ));
    }
    if !identities::is_division_with_table(&table) {
        return Err(Error::NotDivision);
    }
    let n_el = table.len();
    let inf = n_el;
    let mut tau_images = Vec::with_capacity(n_el + 1);
    tau_images.push(inf as u16);
    for x in 1..n_el {
        let xinv = table.inverses[x].expect("division algebra");
        tau_images.push(table.neg(xinv) as u16);
    }
    tau_images.push(0u16);
    let tau = Perm::from_images(tau_images)?;

    let ms = MoufangSet {
        algebra: alg.clone(),
        table,
        root_groups: Vec::new(),
        tau,
    };
    let u_inf: Vec<Perm> = (0..n_el).map(|b| ms.alpha(b)).collect();
    let u_zero: Vec<Perm> = u_inf.iter().map(|g| g.conjugate_by(&ms.tau)).collect();
    let mut root_groups: Vec<Vec<Perm>> = Vec::with_capacity(n_el + 1);
    for c in 0..n_el {
        let mut group = if c == 0 {
            u_zero.clone()
        } else {
            let ac = ms.alpha(c);
            u_zero.iter().map(|g| g.conjugate_by(&ac)).collect()
        };
        group.sort();
        root_groups.push(group);
    }
    let mut u_inf_sorted = u_inf;
    u_inf_sorted.sort();
    root_groups.push(u_inf_sorted);
    Ok(MoufangSet {
        root_groups,
        ..ms
    })
}

/// Exhaustive check of both axioms: each `U_x` fixes `x` and acts regularly
/// on the remaining points, and `U_y^g = U_{yg}` for all `x, y` and `g ∈ U_x`.
pub fn verify_moufang_axioms(ms: &MoufangSet) -> bool {
    let n = ms.n_points();
    for (x, group) in ms.root_groups.iter().enumerate() {
        if group.len() != n - 1 {
            return false;
        }
        let base = if x == 0 { 1 } else { 0 };
        let mut hit = vec![false; n];
        for g in group {
            if g.apply(x) != x {
                return false;
            }
            let img = g.apply(base);
            if img == x || hit[img] {
                return false;
            }
            hit[img] = true;
        }
    }
    // Conjugation covariance, as set equality of sorted groups.
    for group in &ms.root_groups {
        for g in group {
            for y in 0..n {
                let mut conj: Vec<Perm> =
                    ms.root_groups[y].iter().map(|h| h.conjugate_by(g)).collect();
                conj.sort();
                if conj != ms.root_groups[g.apply(y)] {
                    return false;
                }
            }
        }
    }
    true
}

fn generators(ms: &MoufangSet) -> Vec<Perm> {
    let mut gens: Vec<Perm> = ms.root_groups.iter().flatten().cloned().collect();
    gens.sort();
    gens.dedup();
    gens
}

/// Order of the little projective group `⟨U_x : x ∈ X⟩`, by breadth-first
/// closure over image arrays.
pub fn little_projective_group_order(ms: &MoufangSet, bound: usize) -> Result<usize> {
    let gens = generators(ms);
    let mut seen = std::collections::HashSet::new();
    let mut queue = std::collections::VecDeque::new();
    let id = Perm::identity(ms.n_points());
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(g) = queue.pop_front() {
        for gen in &gens {
            let h = g.then(gen);
            if seen.insert(h.clone()) {
                if seen.len() > bound {
                    return Err(Error::BoundExceeded {
                        size: seen.len() as u128,
                        bound: bound as u128,
                    });
                }
                queue.push_back(h);
            }
        }
    }
    Ok(seen.len())
}

/// Whether the little projective group is 2-transitive: the orbit of one
/// ordered pair of distinct points covers them all.
pub fn is_two_transitive(ms: &MoufangSet) -> bool {
    let n = ms.n_points();
    if n < 2 {
        return false;
    }
    let gens = generators(ms);
    let start = (0usize, 1usize);
    let mut seen = std::collections::HashSet::new();
    let mut queue = std::collections::VecDeque::new();
    seen.insert(start);
    queue.push_back(start);
    while let Some((a, b)) = queue.pop_front() {
        for g in &gens {
            let next = (g.apply(a), g.apply(b));
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    seen.len() == n * (n - 1)
}

/// Properness: 2-transitive but not sharply so (`|G†| ≠ |X|·(|X|−1)`).
pub fn is_proper(ms: &MoufangSet, bound: usize) -> Result<bool> {
    let order = little_projective_group_order(ms, bound)?;
    let n = ms.n_points();
    Ok(is_two_transitive(ms) && order != n * (n - 1))
}

/// The μ-map of a nonzero element: the unique permutation in
/// `U_0 · α_a · U_0` that swaps 0 and ∞, found by exhaustive search over the
/// double coset.
pub fn mu_map(ms: &MoufangSet, a: usize) -> Result<Perm> {
    if a == 0 || a >= ms.table.len() {
        return Err(Error::Invalid("mu-map needs a nonzero element of J".into()));
    }
    let alpha_a = ms.alpha(a);
    let u_zero = &ms.root_groups[0];
    let zero = ms.zero();
    let inf = ms.infinity();
    let mut found: std::collections::BTreeSet<Perm> = std::collections::BTreeSet::new();
    for g in u_zero {
        let ga = g.then(&alpha_a);
        for h in u_zero {
            let cand = ga.then(h);
            if cand.apply(zero) == inf && cand.apply(inf) == zero {
                found.insert(cand);
            }
        }
    }
    match found.len() {
        1 => Ok(found.into_iter().next().unwrap()),
        0 => Err(Error::Invalid(
            "no double-coset element swaps 0 and ∞ (input is not Moufang)".into(),
        )),
        k => Err(Error::Invalid(format!(
            "μ-map is not unique ({k} candidates); input is not Moufang"
        ))),
    }
}

/// The Hua map `h_a = μ_e μ_a` restricted to `J`, returned as a matrix once
/// linearity is verified; `h_0` is the zero map.
pub fn h_map(ms: &MoufangSet, e: usize, a: usize) -> Result<Matrix> {
    let h_all = HuaMaps::build(ms, e)?;
    h_all.matrix(a).cloned().ok_or_else(|| {
        Error::Invalid("Hua map restriction is not linear (not a Jordan Moufang set)".into())
    })
}

/// All Hua maps `a ↦ h_a` for a fixed base point `e`.
pub struct HuaMaps {
    pub e: usize,
    mats: Vec<Option<Matrix>>,
}

impl HuaMaps {
    /// Computes every `h_a` and checks each restriction fixes 0, is additive
    /// and F_p-homogeneous. A non-linear restriction is recorded as `None`,
    /// not an error: improper inputs are reported on, never asserted.
    pub fn build(ms: &MoufangSet, e: usize) -> Result<HuaMaps> {
        if e == 0 || e >= ms.table.len() {
            return Err(Error::Invalid("base point must be a nonzero element".into()));
        }
        let t = &ms.table;
        let f = t.field();
        let mu_e = mu_map(ms, e)?;
        let dim = t.dim();
        let mut mats: Vec<Option<Matrix>> = Vec::with_capacity(t.len());
        mats.push(Some(Matrix::zeros(dim, dim)));
        for a in 1..t.len() {
            let h = mu_e.then(&mu_map(ms, a)?);
            // The composite fixes 0 and ∞ by construction; verify and then
            // test additivity and homogeneity of the restriction to J.
            let mut ok = h.apply(0) == 0 && h.apply(ms.infinity()) == ms.infinity();
            if ok {
                'outer: for x in 0..t.len() {
                    for y in 0..t.len() {
                        if h.apply(t.add(x, y)) != t.add(h.apply(x), h.apply(y)) {
                            ok = false;
                            break 'outer;
                        }
                    }
                }
            }
            if ok {
                for x in 0..t.len() {
                    for s in f.elements() {
                        let sx = t.index_of(&crate::linalg::vec_scale(s, &t.elements[x], f));
                        let shx =
                            t.index_of(&crate::linalg::vec_scale(s, &t.elements[h.apply(x)], f));
                        if h.apply(sx) != shx {
                            ok = false;
                            break;
                        }
                    }
                }
            }
            if ok {
                let rows = (0..dim)
                    .map(|i| t.elements[h.apply(t.basis_index(i))].clone())
                    .collect();
                mats.push(Some(Matrix::from_rows(rows).expect("uniform rows")));
            } else {
                mats.push(None);
            }
        }
        Ok(HuaMaps { e, mats })
    }

    pub fn len(&self) -> usize {
        self.mats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mats.is_empty()
    }

    pub fn matrix(&self, a: usize) -> Option<&Matrix> {
        self.mats[a].as_ref()
    }

    pub fn all_linear(&self) -> bool {
        self.mats.iter().all(|m| m.is_some())
    }
}

/// The report of the Hua-map structure checks at base point `e`, plus the
/// reconstructed algebra when everything passes.
pub struct RecoverReport {
    pub e: usize,
    /// Every restriction `h_a` is linear.
    pub linear: bool,
    /// `h_e = id`.
    pub qj1: bool,
    /// `h_{a·h_b} = h_b h_a h_b` for all a, b.
    pub qj3: bool,
    /// `h_{aτ} = h_a^{-1}` for all nonzero a.
    pub tau_inverse: bool,
    /// `(a, b) ↦ h_{a+b} − h_a − h_b` is biadditive.
    pub biadditive: bool,
    /// `h_{s·a} = s² h_a` for all scalars s.
    pub homogeneous: bool,
    /// QJ2 for the assembled structure.
    pub qj2: bool,
    /// The basis-operator assembly reproduces every `h_a`.
    pub quadratic: bool,
    /// The reconstructed algebra passes the weak axiom suite.
    pub weak: bool,
    pub reconstruction: Option<QuadraticAlgebra>,
}

impl RecoverReport {
    pub fn all_pass(&self) -> bool {
        self.linear
            && self.qj1
            && self.qj3
            && self.tau_inverse
            && self.biadditive
            && self.homogeneous
            && self.qj2
            && self.quadratic
            && self.weak
    }
}

/// Assembles `H: a ↦ h_a`, checks the Hua-map identities, and reconstructs a
/// quadratic algebra from the basis maps, cross-checking the weak axioms.
pub fn recover_structure(ms: &MoufangSet, e: usize) -> Result<RecoverReport> {
    let t = &ms.table;
    let f = t.field().clone();
    let dim = t.dim();
    let maps = HuaMaps::build(ms, e)?;
    let mut report = RecoverReport {
        e,
        linear: maps.all_linear(),
        qj1: false,
        qj3: false,
        tau_inverse: false,
        biadditive: false,
        homogeneous: false,
        qj2: false,
        quadratic: false,
        weak: false,
        reconstruction: None,
    };
    if !report.linear {
        return Ok(report);
    }
    let h = |a: usize| maps.matrix(a).expect("all linear");
    report.qj1 = *h(e) == Matrix::identity(dim);
    report.qj3 = (0..t.len()).all(|a| {
        (0..t.len()).all(|b| {
            let ahb = t.apply_to(a, h(b));
            let rhs = h(b).mul(h(a), &f).mul(h(b), &f);
            *h(ahb) == rhs
        })
    });
    report.tau_inverse = (1..t.len()).all(|a| {
        let atau = ms.tau.apply(a);
        match h(a).inverse(&f) {
            Some(inv) => *h(atau) == inv,
            None => false,
        }
    });
    let hp = |a: usize, b: usize| h(t.add(a, b)).sub(h(a), &f).sub(h(b), &f);
    report.biadditive = (0..t.len()).all(|a| {
        (0..t.len()).all(|a2| {
            (0..t.len()).all(|b| {
                let lhs = hp(t.add(a, a2), b);
                let rhs = hp(a, b).add(&hp(a2, b), &f);
                lhs == rhs
            })
        })
    });
    report.homogeneous = (0..t.len()).all(|a| {
        f.elements().all(|s| {
            let sa = t.index_of(&crate::linalg::vec_scale(s, &t.elements[a], &f));
            *h(sa) == h(a).scale(f.mul(s, s), &f)
        })
    });
    // QJ2 directly on H, with V built from the polars of H.
    let v_of = |a: usize, b: usize| -> Matrix {
        let rows = (0..dim)
            .map(|i| apply(&t.elements[b], &hp(a, t.basis_index(i)), &f))
            .collect();
        Matrix::from_rows(rows).expect("uniform rows")
    };
    report.qj2 = (0..t.len()).all(|a| {
        (0..t.len()).all(|b| h(a).mul(&v_of(a, b), &f) == v_of(b, a).mul(h(a), &f))
    });

    let diag_ops: Vec<Matrix> = (0..dim).map(|i| h(t.basis_index(i)).clone()).collect();
    let mut polar_ops = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            polar_ops.push(hp(t.basis_index(i), t.basis_index(j)));
        }
    }
    let unit = t.elements[e].clone();
    let candidate = QuadraticAlgebra::new(f.clone(), unit, diag_ops, polar_ops)?;
    report.quadratic = (0..t.len()).all(|a| candidate.q_op(&t.elements[a]) == *h(a));
    report.weak = identities::is_weak_qja(&candidate)?;
    report.reconstruction = Some(candidate);
    Ok(report)
}

/// Convenience: μ-map by element coordinates.
pub fn mu_map_of(ms: &MoufangSet, a: &[Fe]) -> Result<Perm> {
    mu_map(ms, ms.table.index_of(a))
}

/// The closed-form permutation `x ↦ −a² x^{-1}` (0 ↔ ∞) of a field algebra,
/// used as an independent oracle for the μ-map search.
pub fn field_mu_oracle(ms: &MoufangSet, a: usize) -> Result<Perm> {
    let t = &ms.table;
    let f = t.field();
    if t.dim() != 1 {
        return Err(Error::Invalid("closed form applies to 1-dim algebras".into()));
    }
    let av = t.elements[a][0];
    let a2 = f.mul(av, av);
    let n = ms.n_points();
    let mut images = vec![0u16; n];
    images[0] = ms.infinity() as u16;
    images[ms.infinity()] = 0;
    for (x, image) in images.iter_mut().enumerate().take(t.len()).skip(1) {
        let xv = t.elements[x][0];
        let img = f.neg(f.mul(a2, f.inv(xv).expect("nonzero")));
        *image = t.index_of(&[img]) as u16;
    }
    Perm::from_images(images)
}
