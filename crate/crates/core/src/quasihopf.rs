//! Quasi-Hopf algebras by structure constants, their axioms, and the
//! biclosed monoidal structure on finite-dimensional modules.
//!
//! Conventions: `Φ = X ⊗ Y ⊗ Z`, `Φ⁻¹ = P ⊗ Q ⊗ R`, `Δ(h) = h¹ ⊗ h²`.
//! Every Sweedler sum is an explicit sum over the stored sparse tensor.

use std::collections::HashMap;

use crate::algebra::{act_tensor, element, kron_vec, sandwich, Algebra, Module, Tensor};
use crate::error::{mismatch, Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{intertwiner_space, Matrix, Subspace};
use crate::report::{first_failure, CheckReport};

/// Plain structure-constant presentation; the serialization boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiHopfData {
    pub field: Field,
    pub dim: usize,
    /// `mult[(i * n + j) * n + k]`: coefficient of `e_k` in `e_i e_j`.
    pub mult: Vec<Scalar>,
    pub unit: Vec<Scalar>,
    /// `comult[i]`: `Δ(e_i)` as a dense vector of length `n²`.
    pub comult: Vec<Vec<Scalar>>,
    pub counit: Vec<Scalar>,
    /// `antipode[i]`: `S(e_i)`.
    pub antipode: Vec<Vec<Scalar>>,
    pub antipode_inv: Vec<Vec<Scalar>>,
    /// Dense vectors of length `n³`.
    pub phi: Vec<Scalar>,
    pub phi_inv: Vec<Scalar>,
    pub alpha: Vec<Scalar>,
    pub beta: Vec<Scalar>,
}

#[derive(Clone, Debug)]
pub struct QuasiHopf {
    data: QuasiHopfData,
    alg: Algebra,
    comult: Vec<Tensor>,
    counit: Vec<Tensor>,
    s_images: Vec<Tensor>,
    antipode: Matrix,
    antipode_inv: Matrix,
    phi: Tensor,
    phi_inv: Tensor,
    fingerprint: u64,
}

fn check_len(what: &str, v: &[Scalar], n: usize) -> Result<()> {
    if v.len() != n {
        return Err(mismatch(what, n, v.len()));
    }
    Ok(())
}

impl QuasiHopf {
    /// Validates shapes only; the algebraic invariants are reported by
    /// [`QuasiHopf::check_structure`] and the axiom checks.
    pub fn new(data: QuasiHopfData) -> Result<QuasiHopf> {
        let n = data.dim;
        let f = data.field;
        let alg = Algebra::new(f, n, data.mult.clone(), data.unit.clone())?;
        for (what, list) in [
            ("comult", &data.comult),
            ("antipode", &data.antipode),
            ("antipode_inv", &data.antipode_inv),
        ] {
            if list.len() != n {
                return Err(mismatch(what, n, list.len()));
            }
        }
        for v in &data.comult {
            check_len("comult", v, n * n)?;
        }
        for v in data.antipode.iter().chain(&data.antipode_inv) {
            check_len("antipode", v, n)?;
        }
        check_len("counit", &data.counit, n)?;
        check_len("phi", &data.phi, n * n * n)?;
        check_len("phi_inv", &data.phi_inv, n * n * n)?;
        check_len("alpha", &data.alpha, n)?;
        check_len("beta", &data.beta, n)?;
        let all = data
            .comult
            .iter()
            .flatten()
            .chain(data.antipode.iter().flatten())
            .chain(data.antipode_inv.iter().flatten())
            .chain(&data.counit)
            .chain(&data.phi)
            .chain(&data.phi_inv)
            .chain(&data.alpha)
            .chain(&data.beta);
        for s in all {
            if s.field() != f {
                return Err(Error::FieldMismatch(f, s.field()));
            }
        }
        let comult = data
            .comult
            .iter()
            .map(|v| Tensor::from_dense(f, n, 2, v))
            .collect::<Result<Vec<_>>>()?;
        let counit = data.counit.iter().map(|c| Tensor::scalar_or_zero(c)).collect();
        let s_images = data.antipode.iter().map(|v| element(f, v)).collect();
        let antipode = Matrix::from_cols(f, n, &data.antipode)?;
        let antipode_inv = Matrix::from_cols(f, n, &data.antipode_inv)?;
        let phi = Tensor::from_dense(f, n, 3, &data.phi)?;
        let phi_inv = Tensor::from_dense(f, n, 3, &data.phi_inv)?;
        let fingerprint = {
            use std::collections::hash_map::DefaultHasher;
            use std::hash::{Hash, Hasher};
            let mut h = DefaultHasher::new();
            alg.fingerprint().hash(&mut h);
            data.comult.hash(&mut h);
            data.counit.hash(&mut h);
            data.antipode.hash(&mut h);
            data.antipode_inv.hash(&mut h);
            data.phi.hash(&mut h);
            data.phi_inv.hash(&mut h);
            data.alpha.hash(&mut h);
            data.beta.hash(&mut h);
            h.finish()
        };
        Ok(QuasiHopf {
            data,
            alg,
            comult,
            counit,
            s_images,
            antipode,
            antipode_inv,
            phi,
            phi_inv,
            fingerprint,
        })
    }

    pub fn data(&self) -> &QuasiHopfData {
        &self.data
    }
    pub fn field(&self) -> Field {
        self.data.field
    }
    pub fn dim(&self) -> usize {
        self.data.dim
    }
    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }
    pub fn phi(&self) -> &Tensor {
        &self.phi
    }
    pub fn phi_inv(&self) -> &Tensor {
        &self.phi_inv
    }
    pub fn alpha(&self) -> &[Scalar] {
        &self.data.alpha
    }
    pub fn beta(&self) -> &[Scalar] {
        &self.data.beta
    }
    pub fn one(&self) -> &[Scalar] {
        &self.data.unit
    }
    pub fn comult_tensors(&self) -> &[Tensor] {
        &self.comult
    }
    pub fn counit_tensors(&self) -> &[Tensor] {
        &self.counit
    }
    pub fn antipode_tensors(&self) -> &[Tensor] {
        &self.s_images
    }
    /// Matrix of `S`; column `i` is `S(e_i)`.
    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }
    pub fn antipode_inv(&self) -> &Matrix {
        &self.antipode_inv
    }

    pub fn e(&self, i: usize) -> Vec<Scalar> {
        self.alg.basis_vector(i)
    }
    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.alg.mul(a, b)
    }
    pub fn mul_all(&self, xs: &[&[Scalar]]) -> Vec<Scalar> {
        self.alg.mul_all(xs)
    }
    pub fn s(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.antipode.mul_vec(x)
    }
    pub fn s_inv(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.antipode_inv.mul_vec(x)
    }
    pub fn eps(&self, x: &[Scalar]) -> Scalar {
        let mut acc = self.field().zero();
        for (a, b) in x.iter().zip(&self.data.counit) {
            acc.add_mul(a, b);
        }
        acc
    }
    pub fn delta(&self, x: &[Scalar]) -> Tensor {
        element(self.field(), x).apply_at(0, &self.comult)
    }
    /// `1 ⊗ ... ⊗ 1` with `k` factors.
    pub fn ones(&self, k: usize) -> Tensor {
        let one = element(self.field(), self.one());
        let mut t = Tensor::scalar(self.field().one());
        for _ in 0..k {
            t = t.outer(&one);
        }
        t
    }

    /// Φ = 1⊗1⊗1 and α = β = 1.
    pub fn is_hopf(&self) -> bool {
        self.phi == self.ones(3) && self.data.alpha == self.data.unit && self.data.beta == self.data.unit
    }

    /// Φ = 1⊗1⊗1 (α and β may still be nontrivial).
    pub fn has_trivial_phi(&self) -> bool {
        self.phi == self.ones(3) && self.phi_inv == self.ones(3)
    }

    /// Algebra-level invariants that constructors do not enforce.
    pub fn check_structure(&self) -> CheckReport {
        let n = self.dim();
        let f = self.field();
        let mut r = CheckReport::new();
        r.record("associativity", self.alg.associativity_witness());
        r.record("unit", self.alg.unit_witness());
        let delta_hom = if self.delta(self.one()) != self.ones(2) {
            Some(vec![])
        } else {
            first_failure(n * n, |ij| {
                let (i, j) = (ij / n, ij % n);
                let lhs = self.delta(&self.mul(&self.e(i), &self.e(j)));
                lhs != self.comult[i].mul(&self.comult[j], &self.alg)
            })
            .map(|ij| vec![ij / n, ij % n])
        };
        r.record("comult_multiplicative", delta_hom);
        let eps_hom = if !self.eps(self.one()).is_one() {
            Some(vec![])
        } else {
            first_failure(n * n, |ij| {
                let (i, j) = (ij / n, ij % n);
                self.eps(&self.mul(&self.e(i), &self.e(j))) != &self.data.counit[i] * &self.data.counit[j]
            })
            .map(|ij| vec![ij / n, ij % n])
        };
        r.record("counit_multiplicative", eps_hom);
        let one3 = self.ones(3);
        let phi_ok = self.phi.mul(&self.phi_inv, &self.alg) == one3 && self.phi_inv.mul(&self.phi, &self.alg) == one3;
        r.record("phi_invertible", (!phi_ok).then(Vec::new));
        let id = Matrix::identity(f, n);
        let s_ok = self.antipode.mul(&self.antipode_inv) == id && self.antipode_inv.mul(&self.antipode) == id;
        r.record("antipode_invertible", (!s_ok).then(Vec::new));
        let anti = if self.s(self.one()) != self.one() {
            Some(vec![])
        } else {
            first_failure(n * n, |ij| {
                let (i, j) = (ij / n, ij % n);
                self.s(&self.mul(&self.e(i), &self.e(j))) != self.mul(&self.s(&self.e(j)), &self.s(&self.e(i)))
            })
            .map(|ij| vec![ij / n, ij % n])
        };
        r.record("antipode_antimultiplicative", anti);
        r
    }

    /// Coassociativity up to Φ, the pentagon, counitality and `(id⊗ε⊗id)Φ = 1⊗1`.
    pub fn check_quasi_bialgebra(&self) -> CheckReport {
        let n = self.dim();
        let mut r = CheckReport::new();
        let coassoc = first_failure(n, |a| {
            let d = &self.comult[a];
            let lhs = d.apply_at(1, &self.comult);
            let rhs = self
                .phi
                .mul(&d.apply_at(0, &self.comult), &self.alg)
                .mul(&self.phi_inv, &self.alg);
            lhs != rhs
        });
        r.record("coassoc", coassoc.map(|a| vec![a]));
        let lhs = self
            .phi
            .apply_at(2, &self.comult)
            .mul(&self.phi.apply_at(0, &self.comult), &self.alg);
        let one = element(self.field(), self.one());
        let rhs = self
            .phi
            .insert(0, &one)
            .mul(&self.phi.apply_at(1, &self.comult), &self.alg)
            .mul(&self.phi.insert(3, &one), &self.alg);
        r.record("pentagon", lhs.first_difference(&rhs));
        let counit = first_failure(n, |a| {
            let ea = element(self.field(), &self.e(a));
            let d = &self.comult[a];
            d.apply_at(0, &self.counit) != ea || d.apply_at(1, &self.counit) != ea
        });
        r.record("counit", counit.map(|a| vec![a]));
        r.record("unass", self.phi.apply_at(1, &self.counit).first_difference(&self.ones(2)));
        r
    }

    /// The antipode axioms with α, β, plus `ε∘S = ε` and `ε(P)QβS(R) = β`.
    pub fn check_quasi_hopf(&self) -> CheckReport {
        let n = self.dim();
        let (alpha, beta) = (&self.data.alpha, &self.data.beta);
        let mut r = CheckReport::new();
        let alpha_fail = first_failure(n, |h| {
            let mut acc = self.alg.zero_vector();
            for (c, idx) in self.comult[h].legs() {
                let t = self.mul_all(&[&self.s(&self.e(idx[0])), alpha, &self.e(idx[1])]);
                axpy(&mut acc, &c, &t);
            }
            acc != scaled(alpha, &self.data.counit[h])
        });
        r.record("alpha", alpha_fail.map(|h| vec![h]));
        let beta_fail = first_failure(n, |h| {
            let mut acc = self.alg.zero_vector();
            for (c, idx) in self.comult[h].legs() {
                let t = self.mul_all(&[&self.e(idx[0]), beta, &self.s(&self.e(idx[1]))]);
                axpy(&mut acc, &c, &t);
            }
            acc != scaled(beta, &self.data.counit[h])
        });
        r.record("beta", beta_fail.map(|h| vec![h]));
        let mut ev = self.alg.zero_vector();
        for (c, idx) in self.phi.legs() {
            let (x, y, z) = (self.e(idx[0]), self.e(idx[1]), self.e(idx[2]));
            axpy(&mut ev, &c, &self.mul_all(&[&x, beta, &self.s(&y), alpha, &z]));
        }
        r.record("evcoev", first_vec_difference(&ev, self.one()));
        let mut coev = self.alg.zero_vector();
        for (c, idx) in self.phi_inv.legs() {
            let (p, q, rr) = (self.e(idx[0]), self.e(idx[1]), self.e(idx[2]));
            axpy(&mut coev, &c, &self.mul_all(&[&self.s(&p), alpha, &q, beta, &rr]));
        }
        r.record("coevev", first_vec_difference(&coev, self.one()));
        let eps_s = (0..n).find(|&i| self.eps(&self.s(&self.e(i))) != self.data.counit[i]);
        r.record("counit_antipode", eps_s.map(|i| vec![i]));
        let mut eb = self.alg.zero_vector();
        for (c, idx) in self.phi_inv.legs() {
            let k = &c * &self.data.counit[idx[0]];
            axpy(&mut eb, &k, &self.mul_all(&[&self.e(idx[1]), beta, &self.s(&self.e(idx[2]))]));
        }
        r.record("counit_phi_beta", first_vec_difference(&eb, beta));
        r
    }

    /// Structure, quasi-bialgebra and quasi-Hopf checks in one report.
    pub fn check_all(&self) -> CheckReport {
        let mut r = self.check_structure();
        r.extend(self.check_quasi_bialgebra());
        r.extend(self.check_quasi_hopf());
        r
    }

    // ---- modules -------------------------------------------------------

    pub fn module(&self, dim: usize, action: Vec<Matrix>) -> Result<Module> {
        if action.len() != self.dim() {
            return Err(mismatch("action list", self.dim(), action.len()));
        }
        Module::new(self.field(), dim, action, self.fingerprint)
    }

    pub fn trivial_module(&self) -> Module {
        let f = self.field();
        let action = self
            .data
            .counit
            .iter()
            .map(|c| Matrix::from_data(f, 1, 1, vec![c.clone()]).unwrap())
            .collect();
        self.module(1, action).unwrap()
    }

    pub fn regular_module(&self) -> Module {
        let action = (0..self.dim()).map(|i| self.alg.left_mult(&self.e(i))).collect();
        self.module(self.dim(), action).unwrap()
    }

    fn own(&self, m: &Module) -> Result<()> {
        if m.parent() != self.fingerprint {
            return Err(Error::ParentMismatch);
        }
        Ok(())
    }

    /// Action of a general element of `H^{⊗k}` on a tensor product of modules.
    pub fn act(&self, t: &Tensor, modules: &[&Module]) -> Matrix {
        act_tensor(t, modules)
    }

    pub fn tensor_module(&self, v: &Module, w: &Module) -> Result<Module> {
        self.own(v)?;
        self.own(w)?;
        let action = self.comult.iter().map(|d| act_tensor(d, &[v, w])).collect();
        self.module(v.dim() * w.dim(), action)
    }

    /// `(V⊗W)⊗U → V⊗(W⊗U)`: the action of Φ.
    pub fn associator(&self, v: &Module, w: &Module, u: &Module) -> Result<Matrix> {
        self.own(v)?;
        self.own(w)?;
        self.own(u)?;
        Ok(act_tensor(&self.phi, &[v, w, u]))
    }

    pub fn associator_inv(&self, v: &Module, w: &Module, u: &Module) -> Result<Matrix> {
        self.own(v)?;
        self.own(w)?;
        self.own(u)?;
        Ok(act_tensor(&self.phi_inv, &[v, w, u]))
    }

    fn antipode_actions(&self, v: &Module, inverse: bool) -> Vec<Matrix> {
        let s = if inverse { &self.antipode_inv } else { &self.antipode };
        (0..self.dim()).map(|i| v.act(&s.col(i))).collect()
    }

    /// `Hom^l(V, M) = Hom_k(V, M)` with `h·φ = h¹ φ(S(h²)−)`, basis `E_{ab}` at `a·dim V + b`.
    pub fn left_hom(&self, v: &Module, m: &Module) -> Result<Module> {
        self.own(v)?;
        self.own(m)?;
        let sv = self.antipode_actions(v, false);
        let f = self.field();
        let d = v.dim() * m.dim();
        let action = self
            .comult
            .iter()
            .map(|delta| {
                let mut acc = Matrix::zeros(f, d, d);
                for (c, idx) in delta.legs() {
                    acc.add_scaled(&c, &sandwich(m.basis_action(idx[0]), &sv[idx[1]]));
                }
                acc
            })
            .collect();
        self.module(d, action)
    }

    /// `Hom^r(V, M) = Hom_k(V, M)` with `h·φ = h² φ(S⁻¹(h¹)−)`.
    pub fn right_hom(&self, v: &Module, m: &Module) -> Result<Module> {
        self.own(v)?;
        self.own(m)?;
        let sv = self.antipode_actions(v, true);
        let f = self.field();
        let d = v.dim() * m.dim();
        let action = self
            .comult
            .iter()
            .map(|delta| {
                let mut acc = Matrix::zeros(f, d, d);
                for (c, idx) in delta.legs() {
                    acc.add_scaled(&c, &sandwich(m.basis_action(idx[1]), &sv[idx[0]]));
                }
                acc
            })
            .collect();
        self.module(d, action)
    }

    /// `ev^l: Hom^l(V,M) ⊗ V → M`, `φ ⊗ v ↦ X φ(S(Y)αZ v)`.
    pub fn eval_left(&self, v: &Module, m: &Module) -> Result<Matrix> {
        self.own(v)?;
        self.own(m)?;
        let (dv, dm) = (v.dim(), m.dim());
        let f = self.field();
        let mut ev = Matrix::zeros(f, dm, dm * dv * dv);
        for (c, idx) in self.phi.legs() {
            let xm = m.basis_action(idx[0]);
            let t = v.act(&self.mul_all(&[&self.s(&self.e(idx[1])), self.alpha(), &self.e(idx[2])]));
            add_eval(&mut ev, &c, xm, &t, dv, dm, false);
        }
        Ok(ev)
    }

    /// `ev^r: V ⊗ Hom^r(V,M) → M`, `v ⊗ φ ↦ R φ(S⁻¹(Q)S⁻¹(α)P v)`.
    pub fn eval_right(&self, v: &Module, m: &Module) -> Result<Matrix> {
        self.own(v)?;
        self.own(m)?;
        let (dv, dm) = (v.dim(), m.dim());
        let f = self.field();
        let mut ev = Matrix::zeros(f, dm, dm * dv * dv);
        let sa = self.s_inv(self.alpha());
        for (c, idx) in self.phi_inv.legs() {
            let rm = m.basis_action(idx[2]);
            let t = v.act(&self.mul_all(&[&self.s_inv(&self.e(idx[1])), &sa, &self.e(idx[0])]));
            add_eval(&mut ev, &c, rm, &t, dv, dm, true);
        }
        Ok(ev)
    }

    /// First basis element of `H` on which `f: src → dst` fails to commute with the actions.
    pub fn intertwiner_witness(&self, src: &Module, dst: &Module, f: &Matrix) -> Option<usize> {
        if f.rows() != dst.dim() || f.cols() != src.dim() {
            return Some(usize::MAX);
        }
        (0..self.dim()).find(|&i| f.mul(src.basis_action(i)) != dst.basis_action(i).mul(f))
    }

    fn require_intertwiner(&self, src: &Module, dst: &Module, f: &Matrix, what: &str) -> Result<()> {
        match self.intertwiner_witness(src, dst, f) {
            None => Ok(()),
            Some(usize::MAX) => Err(Error::NotIntertwiner(format!("{what}: wrong shape"))),
            Some(i) => Err(Error::NotIntertwiner(format!("{what}: fails on basis element {i}"))),
        }
    }

    /// `ζ^l: Hom_H(M⊗N, L) → Hom_H(M, Hom^l(N, L))`, `f ↦ (m ↦ f(Pm ⊗ QβS(R)−))`.
    pub fn zeta_l(&self, m: &Module, n: &Module, l: &Module, f: &Matrix) -> Result<Matrix> {
        let mn = self.tensor_module(m, n)?;
        self.require_intertwiner(&mn, l, f, "zeta_l input")?;
        let mut t = Tensor::zero(self.field(), 2);
        for (c, idx) in self.phi_inv.legs() {
            let q = self.mul_all(&[&self.e(idx[1]), self.beta(), &self.s(&self.e(idx[2]))]);
            let term = element(self.field(), &self.e(idx[0])).outer(&element(self.field(), &q));
            t = t.add(&term.scale(&c));
        }
        let fp = f.mul(&act_tensor(&t, &[m, n]));
        Ok(curry_left(&fp, l.dim(), m.dim(), n.dim()))
    }

    /// `η^l(g) = ev^l ∘ (g ⊗ id)`.
    pub fn eta_l(&self, m: &Module, n: &Module, l: &Module, g: &Matrix) -> Result<Matrix> {
        let hom = self.left_hom(n, l)?;
        self.require_intertwiner(m, &hom, g, "eta_l input")?;
        let ev = self.eval_left(n, l)?;
        Ok(ev.mul(&g.kron(&Matrix::identity(self.field(), n.dim()))))
    }

    /// `ζ^r: Hom_H(N⊗M, L) → Hom_H(M, Hom^r(N, L))`, `f ↦ (m ↦ f(YS⁻¹(β)S⁻¹(X)− ⊗ Zm))`.
    pub fn zeta_r(&self, m: &Module, n: &Module, l: &Module, f: &Matrix) -> Result<Matrix> {
        let nm = self.tensor_module(n, m)?;
        self.require_intertwiner(&nm, l, f, "zeta_r input")?;
        let sb = self.s_inv(self.beta());
        let mut t = Tensor::zero(self.field(), 2);
        for (c, idx) in self.phi.legs() {
            let y = self.mul_all(&[&self.e(idx[1]), &sb, &self.s_inv(&self.e(idx[0]))]);
            let term = element(self.field(), &y).outer(&element(self.field(), &self.e(idx[2])));
            t = t.add(&term.scale(&c));
        }
        let fp = f.mul(&act_tensor(&t, &[n, m]));
        Ok(curry_right(&fp, l.dim(), n.dim(), m.dim()))
    }

    /// `η^r(g) = ev^r ∘ (id ⊗ g)`.
    pub fn eta_r(&self, m: &Module, n: &Module, l: &Module, g: &Matrix) -> Result<Matrix> {
        let hom = self.right_hom(n, l)?;
        self.require_intertwiner(m, &hom, g, "eta_r input")?;
        let ev = self.eval_right(n, l)?;
        Ok(ev.mul(&Matrix::identity(self.field(), n.dim()).kron(g)))
    }

    /// Canonical basis of `Hom_H(V, W)`, flattened row-major `dim W x dim V`.
    pub fn hom_module_morphisms(&self, v: &Module, w: &Module) -> Result<Subspace> {
        self.own(v)?;
        self.own(w)?;
        let cons: Vec<(Matrix, Matrix)> = (0..self.dim())
            .map(|i| (v.basis_action(i).clone(), w.basis_action(i).clone()))
            .collect();
        intertwiner_space(self.field(), w.dim(), v.dim(), &cons)
    }

    /// The three associativity isomorphisms of the hexagon, for `V`, `W`, `M`:
    /// `Hom^l(V,Hom^l(W,M)) → Hom^l(V⊗W,M)`, `Hom^l(V,Hom^r(W,M)) → Hom^r(W,Hom^l(V,M))`
    /// and `Hom^r(V⊗W,M) → Hom^r(W,Hom^r(V,M))`.
    pub fn hexagon_isos(&self, v: &Module, w: &Module, m: &Module) -> Result<[Matrix; 3]> {
        self.own(v)?;
        self.own(w)?;
        self.own(m)?;
        let (dv, dw, dm) = (v.dim(), w.dim(), m.dim());
        let f = self.field();
        let d = dm * dv * dw;
        let mut iso = [Matrix::zeros(f, d, d), Matrix::zeros(f, d, d), Matrix::zeros(f, d, d)];
        // (leg acting on M, leg on V via S, leg on W via S) per isomorphism
        let legs = [[0usize, 2, 1], [1, 2, 0], [2, 1, 0]];
        for (c, idx) in self.phi.legs() {
            for (k, l) in legs.iter().enumerate() {
                let a = m.basis_action(idx[l[0]]);
                let b = v.act(&self.s(&self.e(idx[l[1]])));
                let cc = w.act(&self.s(&self.e(idx[l[2]])));
                let k3 = a.kron(&b.transpose()).kron(&cc.transpose());
                iso[k].add_scaled(&c, &k3);
            }
        }
        let perm = swap_inner_layout(f, dm, dw, dv);
        iso[0] = iso[0].mul(&perm);
        iso[1] = iso[1].mul(&perm);
        Ok(iso)
    }
}

impl Tensor {
    /// Order-0 tensor holding `c` (empty when `c` is zero).
    pub fn scalar_or_zero(c: &Scalar) -> Tensor {
        let mut t = Tensor::zero(c.field(), 0);
        t.add_term(Vec::new(), c.clone());
        t
    }
}

fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    for (a, x) in acc.iter_mut().zip(v) {
        a.add_mul(c, x);
    }
}

fn scaled(v: &[Scalar], c: &Scalar) -> Vec<Scalar> {
    v.iter().map(|x| x * c).collect()
}

fn first_vec_difference(a: &[Scalar], b: &[Scalar]) -> Option<Vec<usize>> {
    a.iter().zip(b).position(|(x, y)| x != y).map(|i| vec![i])
}

/// Adds `c · (φ ⊗ v ↦ A φ(T v))` into an evaluation matrix. With `right`,
/// the domain is `V ⊗ Hom(V,M)` instead of `Hom(V,M) ⊗ V`.
pub(crate) fn add_eval(ev: &mut Matrix, c: &Scalar, a: &Matrix, t: &Matrix, dv: usize, dm: usize, right: bool) {
    let dh = dm * dv;
    for j in 0..dm {
        for p in 0..dm {
            let ajp = a.get(j, p);
            if ajp.is_zero() {
                continue;
            }
            let cj = c * ajp;
            for b in 0..dv {
                for x in 0..dv {
                    let tb = t.get(b, x);
                    if tb.is_zero() {
                        continue;
                    }
                    let phi = p * dv + b;
                    let col = if right { x * dh + phi } else { phi * dv + x };
                    ev.get_mut(j, col).add_mul(&cj, tb);
                }
            }
        }
    }
}

/// `F: M⊗N → L` (as `dL x dM·dN`) to `M → Hom_k(N, L)`, fixing the left slot.
pub fn curry_left(fp: &Matrix, dl: usize, dm: usize, dn: usize) -> Matrix {
    let mut out = Matrix::zeros(fp.field(), dl * dn, dm);
    for a in 0..dl {
        for c in 0..dm {
            for b in 0..dn {
                out.set(a * dn + b, c, fp.get(a, c * dn + b).clone());
            }
        }
    }
    out
}

/// `F: N⊗M → L` to `M → Hom_k(N, L)`, fixing the right slot.
pub fn curry_right(fp: &Matrix, dl: usize, dn: usize, dm: usize) -> Matrix {
    let mut out = Matrix::zeros(fp.field(), dl * dn, dm);
    for a in 0..dl {
        for b in 0..dn {
            for c in 0..dm {
                out.set(a * dn + b, c, fp.get(a, b * dm + c).clone());
            }
        }
    }
    out
}

/// Permutation taking the layout `(m, w, v)` of `Hom(V, Hom(W, M))` to the
/// layout `(m, v, w)`.
pub(crate) fn swap_inner_layout(f: Field, dm: usize, dw: usize, dv: usize) -> Matrix {
    let d = dm * dw * dv;
    let mut p = Matrix::zeros(f, d, d);
    for m in 0..dm {
        for w in 0..dw {
            for v in 0..dv {
                p.set((m * dv + v) * dw + w, (m * dw + w) * dv + v, f.one());
            }
        }
    }
    p
}

// ---- builders -----------------------------------------------------------

/// Validates a Cayley table and returns `(identity, inverses)`.
pub fn validate_group(table: &[Vec<usize>]) -> Result<(usize, Vec<usize>)> {
    let n = table.len();
    if n == 0 {
        return Err(Error::Invalid("empty group table".into()));
    }
    for row in table {
        if row.len() != n {
            return Err(mismatch("group table row", n, row.len()));
        }
        if let Some(&bad) = row.iter().find(|&&x| x >= n) {
            return Err(Error::IndexOutOfRange { index: bad, bound: n });
        }
    }
    let e = (0..n)
        .find(|&e| (0..n).all(|j| table[e][j] == j && table[j][e] == j))
        .ok_or_else(|| Error::Invalid("group table has no identity".into()))?;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::Invalid(format!("group table not associative at ({a},{b},{c})")));
                }
            }
        }
    }
    let inv = (0..n)
        .map(|a| {
            (0..n)
                .find(|&b| table[a][b] == e && table[b][a] == e)
                .ok_or_else(|| Error::Invalid(format!("element {a} has no inverse")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((e, inv))
}

pub fn cyclic_group_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
}

/// Closes a set of permutations under composition and returns the Cayley
/// table in order of discovery (the identity first). `(σ·τ)(i) = σ(τ(i))`.
pub fn permutation_group_table(generators: &[Vec<usize>]) -> Result<(Vec<Vec<usize>>, Vec<Vec<usize>>)> {
    let deg = generators.first().map_or(0, |g| g.len());
    for g in generators {
        let mut seen = vec![false; deg];
        if g.len() != deg || g.iter().any(|&x| x >= deg || std::mem::replace(&mut seen[x], true)) {
            return Err(Error::Invalid("not a permutation".into()));
        }
    }
    let compose = |s: &[usize], t: &[usize]| -> Vec<usize> { t.iter().map(|&i| s[i]).collect() };
    let mut elems: Vec<Vec<usize>> = vec![(0..deg).collect()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    index.insert(elems[0].clone(), 0);
    let mut i = 0;
    while i < elems.len() {
        for g in generators {
            let p = compose(&elems[i], g);
            if !index.contains_key(&p) {
                index.insert(p.clone(), elems.len());
                elems.push(p);
            }
        }
        i += 1;
    }
    let table = elems
        .iter()
        .map(|a| elems.iter().map(|b| index[&compose(a, b)]).collect())
        .collect();
    Ok((table, elems))
}

/// Cayley table of S₃ acting on `{0,1,2}`, generated by a transposition and a 3-cycle.
pub fn s3_table() -> Vec<Vec<usize>> {
    permutation_group_table(&[vec![1, 0, 2], vec![1, 2, 0]]).unwrap().0
}

fn trivial_phi(unit: &[Scalar]) -> Vec<Scalar> {
    kron_vec(&kron_vec(unit, unit), unit)
}

/// The group algebra `kG`: `Δ(g) = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`, Φ trivial.
pub fn group_algebra(field: Field, table: &[Vec<usize>]) -> Result<QuasiHopf> {
    let (e, inv) = validate_group(table)?;
    let n = table.len();
    let unit_vec = |i: usize| {
        let mut v = vec![field.zero(); n];
        v[i] = field.one();
        v
    };
    let mut mult = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            mult.extend(unit_vec(table[i][j]));
        }
    }
    let unit = unit_vec(e);
    let comult = (0..n)
        .map(|g| {
            let mut v = vec![field.zero(); n * n];
            v[g * n + g] = field.one();
            v
        })
        .collect();
    let antipode: Vec<Vec<Scalar>> = (0..n).map(|g| unit_vec(inv[g])).collect();
    QuasiHopf::new(QuasiHopfData {
        field,
        dim: n,
        mult,
        unit: unit.clone(),
        comult,
        counit: vec![field.one(); n],
        antipode: antipode.clone(),
        antipode_inv: antipode,
        phi: trivial_phi(&unit),
        phi_inv: trivial_phi(&unit),
        alpha: unit.clone(),
        beta: unit,
    })
}

/// Sweedler's four-dimensional Hopf algebra with basis `1, g, x, gx`:
/// `g² = 1`, `x² = 0`, `xg = −gx`, `Δ(x) = x⊗1 + g⊗x`, `S(x) = −gx`.
pub fn sweedler_h4(field: Field) -> QuasiHopf {
    // basis index = a + 2b for g^a x^b
    let n = 4;
    let word = |i: usize| (i % 2, i / 2);
    let mut mult = Vec::with_capacity(64);
    for i in 0..n {
        for j in 0..n {
            let (a, b) = word(i);
            let (c, d) = word(j);
            let mut v = vec![field.zero(); n];
            if b + d < 2 {
                let sign = if b * c == 1 { -1 } else { 1 };
                v[(a + c) % 2 + 2 * (b + d)] = field.from_i64(sign);
            }
            mult.extend(v);
        }
    }
    let v = |xs: [i64; 4]| -> Vec<Scalar> { xs.iter().map(|&x| field.from_i64(x)).collect() };
    let unit = v([1, 0, 0, 0]);
    let pair = |terms: &[(usize, usize, i64)]| {
        let mut out = vec![field.zero(); n * n];
        for &(i, j, c) in terms {
            out[i * n + j] = field.from_i64(c);
        }
        out
    };
    let comult = vec![
        pair(&[(0, 0, 1)]),
        pair(&[(1, 1, 1)]),
        pair(&[(2, 0, 1), (1, 2, 1)]),
        pair(&[(3, 1, 1), (0, 3, 1)]),
    ];
    let antipode = vec![v([1, 0, 0, 0]), v([0, 1, 0, 0]), v([0, 0, 0, -1]), v([0, 0, 1, 0])];
    let antipode_inv = vec![v([1, 0, 0, 0]), v([0, 1, 0, 0]), v([0, 0, 0, 1]), v([0, 0, -1, 0])];
    QuasiHopf::new(QuasiHopfData {
        field,
        dim: n,
        mult,
        unit: unit.clone(),
        comult,
        counit: v([1, 1, 0, 0]),
        antipode,
        antipode_inv,
        phi: trivial_phi(&unit),
        phi_inv: trivial_phi(&unit),
        alpha: unit.clone(),
        beta: unit,
    })
    .expect("H4 shapes")
}

/// The dual group algebra `k^G` twisted by a 3-cochain `ω`, given as
/// `omega[(x * n + y) * n + z] = ω(x, y, z)` in the order of the table.
pub fn twisted_dual_group_algebra(field: Field, table: &[Vec<usize>], omega: &[Scalar]) -> Result<QuasiHopf> {
    let (e, inv) = validate_group(table)?;
    let n = table.len();
    if omega.len() != n * n * n {
        return Err(mismatch("omega", n * n * n, omega.len()));
    }
    if let Some(pos) = omega.iter().position(|w| w.is_zero()) {
        return Err(Error::Invalid(format!("omega vanishes at index {pos}")));
    }
    let unit_vec = |i: usize| {
        let mut v = vec![field.zero(); n];
        v[i] = field.one();
        v
    };
    let mut mult = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            mult.extend(if i == j { unit_vec(i) } else { vec![field.zero(); n] });
        }
    }
    let unit = vec![field.one(); n];
    let comult = (0..n)
        .map(|g| {
            let mut v = vec![field.zero(); n * n];
            for x in 0..n {
                for y in 0..n {
                    if table[x][y] == g {
                        v[x * n + y] = field.one();
                    }
                }
            }
            v
        })
        .collect();
    let counit = (0..n).map(|g| if g == e { field.one() } else { field.zero() }).collect();
    let antipode: Vec<Vec<Scalar>> = (0..n).map(|g| unit_vec(inv[g])).collect();
    let phi = omega.to_vec();
    let phi_inv = omega.iter().map(|w| w.inv()).collect();
    let beta = (0..n).map(|x| omega[(x * n + inv[x]) * n + x].inv()).collect();
    QuasiHopf::new(QuasiHopfData {
        field,
        dim: n,
        mult,
        unit: unit.clone(),
        comult,
        counit,
        antipode: antipode.clone(),
        antipode_inv: antipode,
        phi,
        phi_inv,
        alpha: unit,
        beta,
    })
}

/// `ω` on `ℤ₂ = {e, a}` with `ω(a,a,a) = −1` and all other values 1; a 3-cocycle.
pub fn z2_cocycle(field: Field) -> Vec<Scalar> {
    let mut w = vec![field.one(); 8];
    w[7] = field.from_i64(-1);
    w
}

/// `ω(a,a,e) = −1`, rest 1: normalized but not a cocycle.
pub fn z2_non_cocycle(field: Field) -> Vec<Scalar> {
    let mut w = vec![field.one(); 8];
    w[6] = field.from_i64(-1);
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf5() -> Field {
        Field::prime(5).unwrap()
    }

    #[test]
    fn c2_passes_everything() {
        let h = group_algebra(gf5(), &cyclic_group_table(2)).unwrap();
        let r = h.check_all();
        assert!(r.passed(), "{:?}", r.failed_ids());
        assert!(h.is_hopf());
    }

    #[test]
    fn h4_antipode_squared_is_not_identity() {
        let h = sweedler_h4(Field::Rationals);
        assert!(h.check_all().passed());
        let s2 = h.antipode().mul(h.antipode());
        assert!(!s2.is_identity());
    }

    #[test]
    fn twisted_z2_passes_and_non_cocycle_fails_pentagon_only() {
        let f = Field::Rationals;
        let t = cyclic_group_table(2);
        let good = twisted_dual_group_algebra(f, &t, &z2_cocycle(f)).unwrap();
        assert!(good.check_all().passed(), "{:?}", good.check_all().failed_ids());
        assert!(!good.has_trivial_phi());
        assert_eq!(good.beta(), &[f.one(), f.from_i64(-1)]);
        let bad = twisted_dual_group_algebra(f, &t, &z2_non_cocycle(f)).unwrap();
        assert_eq!(bad.check_all().failed_ids(), vec!["pentagon"]);
    }

    #[test]
    fn zero_omega_rejected() {
        let f = Field::Rationals;
        let mut w = z2_cocycle(f);
        w[3] = f.zero();
        assert!(twisted_dual_group_algebra(f, &cyclic_group_table(2), &w).is_err());
    }

    #[test]
    fn bad_group_table_rejected() {
        assert!(validate_group(&[vec![0, 1], vec![1, 1]]).is_err());
        assert!(validate_group(&[vec![0, 2], vec![1, 0]]).is_err());
    }

    #[test]
    fn s3_table_is_a_group_of_order_6() {
        let t = s3_table();
        assert_eq!(t.len(), 6);
        assert!(validate_group(&t).is_ok());
    }

    #[test]
    fn hom_modules_are_actions() {
        let h = sweedler_h4(Field::Rationals);
        let reg = h.regular_module();
        for m in [h.left_hom(&reg, &reg).unwrap(), h.right_hom(&reg, &reg).unwrap()] {
            assert!(m.action_witness(h.algebra()).is_none());
        }
        let t = h.tensor_module(&reg, &reg).unwrap();
        assert!(t.action_witness(h.algebra()).is_none());
    }

    #[test]
    fn evaluations_are_intertwiners_twisted() {
        let f = Field::Rationals;
        let h = twisted_dual_group_algebra(f, &cyclic_group_table(2), &z2_cocycle(f)).unwrap();
        let reg = h.regular_module();
        let hl = h.left_hom(&reg, &reg).unwrap();
        let ev = h.eval_left(&reg, &reg).unwrap();
        let src = h.tensor_module(&hl, &reg).unwrap();
        assert_eq!(h.intertwiner_witness(&src, &reg, &ev), None);
        let hr = h.right_hom(&reg, &reg).unwrap();
        let evr = h.eval_right(&reg, &reg).unwrap();
        let src = h.tensor_module(&reg, &hr).unwrap();
        assert_eq!(h.intertwiner_witness(&src, &reg, &evr), None);
    }

    #[test]
    fn adjunction_roundtrips_twisted() {
        let f = gf5();
        let h = twisted_dual_group_algebra(f, &cyclic_group_table(2), &z2_cocycle(f)).unwrap();
        let reg = h.regular_module();
        let k = h.trivial_module();
        let v = reg.direct_sum(&k).unwrap();
        for (m, n, l) in [(&reg, &reg, &reg), (&v, &reg, &k), (&reg, &v, &v), (&k, &v, &reg)] {
            let mn = h.tensor_module(m, n).unwrap();
            let hom = h.hom_module_morphisms(&mn, l).unwrap();
            for i in 0..hom.dim() {
                let fm = crate::algebra::unflatten(f, l.dim(), mn.dim(), &hom.vector(i));
                let z = h.zeta_l(m, n, l, &fm).unwrap();
                assert_eq!(h.eta_l(m, n, l, &z).unwrap(), fm);
            }
            let nm = h.tensor_module(n, m).unwrap();
            let hom = h.hom_module_morphisms(&nm, l).unwrap();
            for i in 0..hom.dim() {
                let fm = crate::algebra::unflatten(f, l.dim(), nm.dim(), &hom.vector(i));
                let z = h.zeta_r(m, n, l, &fm).unwrap();
                assert_eq!(h.eta_r(m, n, l, &z).unwrap(), fm);
            }
        }
    }

    #[test]
    fn c2_intertwiners_dimension() {
        let h = group_algebra(Field::Rationals, &cyclic_group_table(2)).unwrap();
        let reg = h.regular_module();
        assert_eq!(h.hom_module_morphisms(&reg, &reg).unwrap().dim(), 2);
        let k = h.trivial_module();
        assert_eq!(h.hom_module_morphisms(&k, &k).unwrap().dim(), 1);
    }
}
