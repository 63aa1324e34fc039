//! Weak-center elements `(M, τ)` built from contramodule coefficients.
//!
//! τ is materialized per module on demand and cached by the module's
//! structural hash. All maps are in carrier coordinates of the category.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::algebra::Module;
use crate::category::{precompose, Biclosed, Category};
use crate::coefficients::{hexagon_sides, tau_from_contramodule, Contramodule};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::report::{digits, CheckReport};

pub struct CenterElement {
    category: Category,
    coefficient: Contramodule,
    tau_cache: Mutex<HashMap<u64, Arc<Matrix>>>,
}

impl CenterElement {
    pub fn new(category: Category, coefficient: Contramodule) -> Result<CenterElement> {
        if coefficient.module().parent() != category.fingerprint() {
            return Err(Error::ParentMismatch);
        }
        Ok(CenterElement {
            category,
            coefficient,
            tau_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn category(&self) -> &Category {
        &self.category
    }
    pub fn coefficient(&self) -> &Contramodule {
        &self.coefficient
    }
    pub fn module(&self) -> &Module {
        self.coefficient.module()
    }

    /// `τ_V: V ◁ M → M ▷ V`, computed once per module.
    pub fn tau(&self, v: &Module) -> Result<Arc<Matrix>> {
        let key = v.fingerprint();
        if let Some(t) = self.tau_cache.lock().unwrap().get(&key) {
            return Ok(t.clone());
        }
        let t = Arc::new(tau_from_contramodule(&self.category, &self.coefficient, v)?);
        let mut cache = self.tau_cache.lock().unwrap();
        Ok(cache.entry(key).or_insert(t).clone())
    }

    pub fn cached(&self) -> usize {
        self.tau_cache.lock().unwrap().len()
    }

    pub fn check_hexagon(&self, v: &Module, w: &Module) -> Result<CheckReport> {
        let cat = &self.category;
        let vw = cat.tensor(v, w)?;
        let (tv, tw, tvw) = (self.tau(v)?, self.tau(w)?, self.tau(&vw.module)?);
        let (lhs, rhs) = hexagon_sides(cat, v, w, self.module(), &tv, &tw, &tvw)?;
        let mut report = CheckReport::new();
        report.record("hexagon", matrix_witness(&lhs, &rhs));
        Ok(report)
    }

    /// `τ` on the unit object is the identity.
    pub fn check_unitality(&self) -> Result<CheckReport> {
        let unit = self.category.unit_object();
        let t = self.tau(&unit)?;
        let id = Matrix::identity(t.field(), t.rows());
        let mut report = CheckReport::new();
        report.record("unitality", matrix_witness(&t, &id));
        Ok(report)
    }

    /// `τ_V ∘ (− ∘ g) = (− ∘ g) ∘ τ_{V′}` for a module map `g: V → V′`.
    pub fn check_naturality(&self, v: &Module, v2: &Module, g: &Matrix) -> Result<CheckReport> {
        let cat = &self.category;
        if cat.intertwiner_witness(v, v2, g).is_some() {
            return Err(Error::NotIntertwiner("naturality probe needs a module map".into()));
        }
        let m = self.module();
        let (l2, l1) = (cat.hom_l(v2, m)?, cat.hom_l(v, m)?);
        let (r2, r1) = (cat.hom_r(v2, m)?, cat.hom_r(v, m)?);
        let lhs = self.tau(v)?.mul(&precompose(&l2, &l1, g));
        let tau2 = self.tau(v2)?;
        let rhs = precompose(&r2, &r1, g).mul(&tau2);
        let mut report = CheckReport::new();
        report.record("naturality", matrix_witness(&lhs, &rhs));
        Ok(report)
    }

    /// Sends `Id ∈ Hom(M, M)` through `Hom(1⊗M, M) ≅ Hom(1, M◁M) → Hom(1, M▷M) ≅ Hom(M⊗1, M)`
    /// and back to `Hom(M, M)`.
    pub fn stability_image(&self) -> Result<Matrix> {
        let cat = &self.category;
        let m = self.module();
        let unit = cat.unit_object();
        let f = m.field();
        let id = Matrix::identity(f, m.dim());
        let from_left = id.mul(&cat.left_unitor(m)?);
        let g = cat.zeta_l(&unit, m, m, &from_left)?;
        let g2 = self.tau(m)?.mul(&g);
        let back = cat.eta_r(&unit, m, m, &g2)?;
        let runitor = cat.right_unitor(m)?;
        let inv = runitor
            .inverse()
            .ok_or_else(|| Error::Invalid("right unitor is not invertible".into()))?;
        Ok(back.mul(&inv))
    }

    pub fn check_stability_central(&self) -> Result<CheckReport> {
        let img = self.stability_image()?;
        let id = Matrix::identity(img.field(), img.rows());
        let mut report = CheckReport::new();
        report.record("stability_central", matrix_witness(&img, &id));
        Ok(report)
    }

    /// Whether `τ_V` is invertible.
    pub fn check_weakstrong(&self, v: &Module) -> Result<CheckReport> {
        let t = self.tau(v)?;
        let full = t.is_square() && t.rank() == t.rows();
        let mut report = CheckReport::new();
        let witness = if full { None } else { Some(vec![t.rank()]) };
        report.record_note("weakstrong", witness, format!("rank {} of {}", t.rank(), t.rows()));
        Ok(report)
    }

    /// `ι: Hom_H(T⊗V, M) → Hom_H(V⊗T, M)`, `f ↦ η^r(τ_V ∘ ζ^l(f))`, in the
    /// canonical bases of both morphism spaces.
    pub fn contratrace_iota(&self, t: &Module, v: &Module) -> Result<Matrix> {
        let cat = &self.category;
        let m = self.module();
        let tv = cat.tensor(t, v)?;
        let vt = cat.tensor(v, t)?;
        let src = cat.morphisms(&tv.module, m)?;
        let dst = cat.morphisms(&vt.module, m)?;
        let tau = self.tau(v)?;
        let f = m.field();
        let mut cols = Vec::with_capacity(src.dim());
        for k in 0..src.dim() {
            let phi = Matrix::from_data(f, m.dim(), tv.module.dim(), src.vector(k))?;
            let g = tau.mul(&cat.zeta_l(t, v, m, &phi)?);
            let out = cat.eta_r(t, v, m, &g)?;
            let coords = dst
                .coordinates(&out.to_vec())
                .ok_or_else(|| Error::Invalid("ι leaves the morphism space".into()))?;
            cols.push(coords);
        }
        if cols.is_empty() {
            return Ok(Matrix::zeros(f, dst.dim(), 0));
        }
        Matrix::from_cols(f, dst.dim(), &cols)
    }

    /// `ι_{W,V} ∘ ι_{V,W} = id`.
    pub fn check_symmetry(&self, v: &Module, w: &Module) -> Result<CheckReport> {
        let a = self.contratrace_iota(v, w)?;
        let b = self.contratrace_iota(w, v)?;
        let prod = b.mul(&a);
        let id = Matrix::identity(prod.field(), prod.rows());
        let mut report = CheckReport::new();
        report.record("symmetry", matrix_witness(&prod, &id));
        Ok(report)
    }
}

fn matrix_witness(lhs: &Matrix, rhs: &Matrix) -> Option<Vec<usize>> {
    if lhs == rhs {
        return None;
    }
    if lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols() {
        return Some(vec![]);
    }
    let cols = lhs.cols();
    let k = (0..lhs.rows() * cols).find(|&k| lhs.get(k / cols, k % cols) != rhs.get(k / cols, k % cols))?;
    Some(digits(k, &[lhs.rows(), cols]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebroid::{enveloping_algebroid, truncated_polynomial};
    use crate::coefficients::{
        check_stability_algebroid, check_stability_hopf, check_stability_quasi, enveloping_dual_coefficient,
        unit_coefficient, Flavor,
    };
    use crate::field::Field;
    use crate::quasihopf::{cyclic_group_table, group_algebra, twisted_dual_group_algebra, z2_cocycle};

    fn kc2_center(f: Field) -> CenterElement {
        let h = group_algebra(f, &cyclic_group_table(2)).unwrap();
        let c = unit_coefficient(&h, Flavor::HopfMu).unwrap();
        CenterElement::new(Category::quasi(h), c).unwrap()
    }

    #[test]
    fn hopf_unit_coefficient_is_central_and_stable() {
        let e = kc2_center(Field::Rationals);
        let reg = e.category().regular_module();
        assert!(e.check_hexagon(&reg, &reg).unwrap().passed());
        assert!(e.check_unitality().unwrap().passed());
        assert!(e.check_stability_central().unwrap().passed());
        assert!(e.check_weakstrong(&reg).unwrap().passed());
        assert!(e.check_symmetry(&reg, &reg).unwrap().passed());
        let iota = e.contratrace_iota(&reg, &reg).unwrap();
        assert_eq!((iota.rows(), iota.cols()), (2, 2));
    }

    #[test]
    fn scaled_tau_breaks_hexagon_and_stability() {
        let f = Field::Rationals;
        let h = group_algebra(f, &cyclic_group_table(2)).unwrap();
        let c = unit_coefficient(&h, Flavor::HopfMu).unwrap().scaled(&f.from_i64(2));
        let hopf = check_stability_hopf(&h, &c).unwrap().passed();
        let e = CenterElement::new(Category::quasi(h), c).unwrap();
        let reg = e.category().regular_module();
        assert!(!e.check_hexagon(&reg, &reg).unwrap().passed());
        assert_eq!(e.check_stability_central().unwrap().passed(), hopf);
        assert!(!hopf);
    }

    #[test]
    fn cache_fills_once_per_module() {
        let e = kc2_center(Field::prime(5).unwrap());
        let reg = e.category().regular_module();
        let a = e.tau(&reg).unwrap();
        let b = e.tau(&reg).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
        assert_eq!(e.cached(), 1);
    }

    #[test]
    fn quasi_stability_paths_agree() {
        let f = Field::Rationals;
        let h = twisted_dual_group_algebra(f, &cyclic_group_table(2), &z2_cocycle(f)).unwrap();
        for s in [1, 3] {
            let c = unit_coefficient(&h, Flavor::QuasiTypeI).unwrap().scaled(&f.from_i64(s));
            let direct = check_stability_quasi(&h, &c).unwrap().status("stability");
            let e = CenterElement::new(Category::quasi(h.clone()), c).unwrap();
            assert_eq!(e.check_stability_central().unwrap().passed(), direct);
        }
    }

    #[test]
    fn algebroid_stability_paths_agree() {
        let f = Field::prime(5).unwrap();
        let a = enveloping_algebroid(&truncated_polynomial(f, 2).unwrap()).unwrap();
        let c = enveloping_dual_coefficient(&a).unwrap();
        let direct = check_stability_algebroid(&a, &c).unwrap().passed();
        let e = CenterElement::new(Category::algebroid(a.clone()), c).unwrap();
        assert_eq!(e.check_stability_central().unwrap().passed(), direct);
        assert!(e.check_unitality().unwrap().passed());
        let reg = a.regular_module();
        assert!(e.check_hexagon(&reg, &reg).unwrap().passed());
    }
}
