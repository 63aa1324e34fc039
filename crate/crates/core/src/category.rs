//! The biclosed monoidal category of modules, uniformly over quasi-Hopf
//! algebras and Hopf algebroids.
//!
//! Objects are [`Module`]s. Tensor products over a base ring are quotients,
//! so a [`TensorObject`] carries a projector from and a section into the
//! ambient k-tensor product; internal homs are subspaces of `Hom_k`, so a
//! [`HomObject`] carries an embedding into and coordinates from `Hom_k`. In
//! the quasi-Hopf case all four maps are identities.

use std::sync::Arc;

use crate::algebra::{Algebra, Module};
use crate::algebroid::HopfAlgebroid;
use crate::error::Result;
use crate::field::{Field, Scalar};
use crate::linalg::{Matrix, Subspace};
use crate::quasihopf::QuasiHopf;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorObject {
    pub module: Module,
    /// `V ⊗_k W → V ⊗ W`.
    pub projector: Matrix,
    /// A section `V ⊗ W → V ⊗_k W` of the projector.
    pub lift: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomObject {
    pub module: Module,
    /// Carrier coordinates to row-major `Hom_k(V, M)`.
    pub embedding: Matrix,
    /// Left inverse of the embedding on the carrier.
    pub coords: Matrix,
    pub source_dim: usize,
    pub target_dim: usize,
}

impl HomObject {
    fn full(module: Module, source_dim: usize, target_dim: usize) -> HomObject {
        let id = Matrix::identity(module.field(), module.dim());
        HomObject {
            module,
            embedding: id.clone(),
            coords: id,
            source_dim,
            target_dim,
        }
    }

    /// The carrier element with the given coordinates as a `target x source` matrix.
    pub fn to_map(&self, coords: &[Scalar]) -> Matrix {
        let flat = self.embedding.mul_vec(coords);
        Matrix::from_data(self.module.field(), self.target_dim, self.source_dim, flat).expect("hom shape")
    }
}

/// Operations of a biclosed monoidal category of finite-dimensional modules.
/// Morphisms are matrices in carrier coordinates.
pub trait Biclosed: Send + Sync {
    fn field(&self) -> Field;
    fn algebra(&self) -> &Algebra;
    fn fingerprint(&self) -> u64;
    /// Dimension of the acting algebra `H`.
    fn acting_dim(&self) -> usize {
        self.algebra().dim()
    }
    fn one(&self) -> Vec<Scalar> {
        self.algebra().unit().to_vec()
    }

    fn unit_object(&self) -> Module;
    fn regular_module(&self) -> Module;
    fn module(&self, dim: usize, action: Vec<Matrix>) -> Result<Module>;

    fn tensor(&self, v: &Module, w: &Module) -> Result<TensorObject>;
    /// `(U ⊗ V) ⊗ W → U ⊗ (V ⊗ W)`.
    fn associator(&self, u: &Module, v: &Module, w: &Module) -> Result<Matrix>;
    /// `1 ⊗ V → V`.
    fn left_unitor(&self, v: &Module) -> Result<Matrix>;
    /// `V ⊗ 1 → V`.
    fn right_unitor(&self, v: &Module) -> Result<Matrix>;

    /// `V ◁ M = Hom^l(V, M)`.
    fn hom_l(&self, v: &Module, m: &Module) -> Result<HomObject>;
    /// `M ▷ V = Hom^r(V, M)`.
    fn hom_r(&self, v: &Module, m: &Module) -> Result<HomObject>;
    fn eval_l(&self, v: &Module, m: &Module) -> Result<Matrix>;
    fn eval_r(&self, v: &Module, m: &Module) -> Result<Matrix>;

    /// `Hom(M⊗N, L) → Hom(M, Hom^l(N, L))`.
    fn zeta_l(&self, m: &Module, n: &Module, l: &Module, f: &Matrix) -> Result<Matrix>;
    fn eta_l(&self, m: &Module, n: &Module, l: &Module, g: &Matrix) -> Result<Matrix>;
    /// `Hom(N⊗M, L) → Hom(M, Hom^r(N, L))`.
    fn zeta_r(&self, m: &Module, n: &Module, l: &Module, f: &Matrix) -> Result<Matrix>;
    fn eta_r(&self, m: &Module, n: &Module, l: &Module, g: &Matrix) -> Result<Matrix>;

    /// Module maps `V → W`, flattened row-major, in the canonical echelon basis.
    fn morphisms(&self, v: &Module, w: &Module) -> Result<Subspace>;
    fn intertwiner_witness(&self, src: &Module, dst: &Module, f: &Matrix) -> Option<usize>;

    /// `Hom^l(V,Hom^l(W,M)) → Hom^l(V⊗W,M)`, `Hom^l(V,Hom^r(W,M)) → Hom^r(W,Hom^l(V,M))`
    /// and `Hom^r(V⊗W,M) → Hom^r(W,Hom^r(V,M))` in carrier coordinates.
    fn hexagon_isos(&self, v: &Module, w: &Module, m: &Module) -> Result<[Matrix; 3]>;
}

impl Biclosed for QuasiHopf {
    fn field(&self) -> Field {
        QuasiHopf::field(self)
    }
    fn algebra(&self) -> &Algebra {
        QuasiHopf::algebra(self)
    }
    fn fingerprint(&self) -> u64 {
        QuasiHopf::fingerprint(self)
    }
    fn unit_object(&self) -> Module {
        self.trivial_module()
    }
    fn regular_module(&self) -> Module {
        QuasiHopf::regular_module(self)
    }
    fn module(&self, dim: usize, action: Vec<Matrix>) -> Result<Module> {
        QuasiHopf::module(self, dim, action)
    }
    fn tensor(&self, v: &Module, w: &Module) -> Result<TensorObject> {
        let module = self.tensor_module(v, w)?;
        let id = Matrix::identity(module.field(), module.dim());
        Ok(TensorObject {
            module,
            projector: id.clone(),
            lift: id,
        })
    }
    fn associator(&self, u: &Module, v: &Module, w: &Module) -> Result<Matrix> {
        QuasiHopf::associator(self, u, v, w)
    }
    fn left_unitor(&self, v: &Module) -> Result<Matrix> {
        Ok(Matrix::identity(v.field(), v.dim()))
    }
    fn right_unitor(&self, v: &Module) -> Result<Matrix> {
        Ok(Matrix::identity(v.field(), v.dim()))
    }
    fn hom_l(&self, v: &Module, m: &Module) -> Result<HomObject> {
        Ok(HomObject::full(self.left_hom(v, m)?, v.dim(), m.dim()))
    }
    fn hom_r(&self, v: &Module, m: &Module) -> Result<HomObject> {
        Ok(HomObject::full(self.right_hom(v, m)?, v.dim(), m.dim()))
    }
    fn eval_l(&self, v: &Module, m: &Module) -> Result<Matrix> {
        self.eval_left(v, m)
    }
    fn eval_r(&self, v: &Module, m: &Module) -> Result<Matrix> {
        self.eval_right(v, m)
    }
    fn zeta_l(&self, m: &Module, n: &Module, l: &Module, f: &Matrix) -> Result<Matrix> {
        QuasiHopf::zeta_l(self, m, n, l, f)
    }
    fn eta_l(&self, m: &Module, n: &Module, l: &Module, g: &Matrix) -> Result<Matrix> {
        QuasiHopf::eta_l(self, m, n, l, g)
    }
    fn zeta_r(&self, m: &Module, n: &Module, l: &Module, f: &Matrix) -> Result<Matrix> {
        QuasiHopf::zeta_r(self, m, n, l, f)
    }
    fn eta_r(&self, m: &Module, n: &Module, l: &Module, g: &Matrix) -> Result<Matrix> {
        QuasiHopf::eta_r(self, m, n, l, g)
    }
    fn morphisms(&self, v: &Module, w: &Module) -> Result<Subspace> {
        self.hom_module_morphisms(v, w)
    }
    fn intertwiner_witness(&self, src: &Module, dst: &Module, f: &Matrix) -> Option<usize> {
        QuasiHopf::intertwiner_witness(self, src, dst, f)
    }
    fn hexagon_isos(&self, v: &Module, w: &Module, m: &Module) -> Result<[Matrix; 3]> {
        QuasiHopf::hexagon_isos(self, v, w, m)
    }
}

impl Biclosed for HopfAlgebroid {
    fn field(&self) -> Field {
        HopfAlgebroid::field(self)
    }
    fn algebra(&self) -> &Algebra {
        HopfAlgebroid::algebra(self)
    }
    fn fingerprint(&self) -> u64 {
        HopfAlgebroid::fingerprint(self)
    }
    fn unit_object(&self) -> Module {
        self.base_module()
    }
    fn regular_module(&self) -> Module {
        HopfAlgebroid::regular_module(self)
    }
    fn module(&self, dim: usize, action: Vec<Matrix>) -> Result<Module> {
        HopfAlgebroid::module(self, dim, action)
    }
    fn tensor(&self, v: &Module, w: &Module) -> Result<TensorObject> {
        HopfAlgebroid::tensor(self, v, w)
    }
    fn associator(&self, u: &Module, v: &Module, w: &Module) -> Result<Matrix> {
        HopfAlgebroid::associator(self, u, v, w)
    }
    fn left_unitor(&self, v: &Module) -> Result<Matrix> {
        HopfAlgebroid::left_unitor(self, v)
    }
    fn right_unitor(&self, v: &Module) -> Result<Matrix> {
        HopfAlgebroid::right_unitor(self, v)
    }
    fn hom_l(&self, v: &Module, m: &Module) -> Result<HomObject> {
        self.left_hom(v, m)
    }
    fn hom_r(&self, v: &Module, m: &Module) -> Result<HomObject> {
        self.right_hom(v, m)
    }
    fn eval_l(&self, v: &Module, m: &Module) -> Result<Matrix> {
        self.eval_left(v, m)
    }
    fn eval_r(&self, v: &Module, m: &Module) -> Result<Matrix> {
        self.eval_right(v, m)
    }
    fn zeta_l(&self, m: &Module, n: &Module, l: &Module, f: &Matrix) -> Result<Matrix> {
        HopfAlgebroid::zeta_l(self, m, n, l, f)
    }
    fn eta_l(&self, m: &Module, n: &Module, l: &Module, g: &Matrix) -> Result<Matrix> {
        HopfAlgebroid::eta_l(self, m, n, l, g)
    }
    fn zeta_r(&self, m: &Module, n: &Module, l: &Module, f: &Matrix) -> Result<Matrix> {
        HopfAlgebroid::zeta_r(self, m, n, l, f)
    }
    fn eta_r(&self, m: &Module, n: &Module, l: &Module, g: &Matrix) -> Result<Matrix> {
        HopfAlgebroid::eta_r(self, m, n, l, g)
    }
    fn morphisms(&self, v: &Module, w: &Module) -> Result<Subspace> {
        self.hom_module_morphisms(v, w)
    }
    fn intertwiner_witness(&self, src: &Module, dst: &Module, f: &Matrix) -> Option<usize> {
        HopfAlgebroid::intertwiner_witness(self, src, dst, f)
    }
    fn hexagon_isos(&self, v: &Module, w: &Module, m: &Module) -> Result<[Matrix; 3]> {
        HopfAlgebroid::hexagon_isos(self, v, w, m)
    }
}

/// A module category of either kind, cheap to clone.
#[derive(Clone, Debug)]
pub enum Category {
    Quasi(Arc<QuasiHopf>),
    Algebroid(Arc<HopfAlgebroid>),
}

impl Category {
    pub fn quasi(h: QuasiHopf) -> Category {
        Category::Quasi(Arc::new(h))
    }
    pub fn algebroid(h: HopfAlgebroid) -> Category {
        Category::Algebroid(Arc::new(h))
    }

    pub fn inner(&self) -> &dyn Biclosed {
        match self {
            Category::Quasi(h) => h.as_ref(),
            Category::Algebroid(h) => h.as_ref(),
        }
    }

    pub fn as_quasi(&self) -> Option<&QuasiHopf> {
        match self {
            Category::Quasi(h) => Some(h),
            Category::Algebroid(_) => None,
        }
    }

    pub fn as_algebroid(&self) -> Option<&HopfAlgebroid> {
        match self {
            Category::Quasi(_) => None,
            Category::Algebroid(h) => Some(h),
        }
    }
}

macro_rules! delegate {
    ($($name:ident($($arg:ident: $ty:ty),*) -> $ret:ty;)*) => {
        $(fn $name(&self, $($arg: $ty),*) -> $ret {
            self.inner().$name($($arg),*)
        })*
    };
}

impl Biclosed for Category {
    fn algebra(&self) -> &Algebra {
        match self {
            Category::Quasi(h) => h.algebra(),
            Category::Algebroid(h) => h.algebra(),
        }
    }
    delegate! {
        field() -> Field;
        fingerprint() -> u64;
        unit_object() -> Module;
        regular_module() -> Module;
        module(dim: usize, action: Vec<Matrix>) -> Result<Module>;
        tensor(v: &Module, w: &Module) -> Result<TensorObject>;
        associator(u: &Module, v: &Module, w: &Module) -> Result<Matrix>;
        left_unitor(v: &Module) -> Result<Matrix>;
        right_unitor(v: &Module) -> Result<Matrix>;
        hom_l(v: &Module, m: &Module) -> Result<HomObject>;
        hom_r(v: &Module, m: &Module) -> Result<HomObject>;
        eval_l(v: &Module, m: &Module) -> Result<Matrix>;
        eval_r(v: &Module, m: &Module) -> Result<Matrix>;
        zeta_l(m: &Module, n: &Module, l: &Module, f: &Matrix) -> Result<Matrix>;
        eta_l(m: &Module, n: &Module, l: &Module, g: &Matrix) -> Result<Matrix>;
        zeta_r(m: &Module, n: &Module, l: &Module, f: &Matrix) -> Result<Matrix>;
        eta_r(m: &Module, n: &Module, l: &Module, g: &Matrix) -> Result<Matrix>;
        morphisms(v: &Module, w: &Module) -> Result<Subspace>;
        intertwiner_witness(src: &Module, dst: &Module, f: &Matrix) -> Option<usize>;
        hexagon_isos(v: &Module, w: &Module, m: &Module) -> Result<[Matrix; 3]>;
    }
}

/// `f ⊗ g` between two tensor objects, in quotient coordinates.
pub fn tensor_morphism(src: &TensorObject, dst: &TensorObject, f: &Matrix, g: &Matrix) -> Matrix {
    dst.projector.mul(&f.kron(g)).mul(&src.lift)
}

/// `Hom(V, K) → Hom(V, K')`, `φ ↦ t ∘ φ`, for a module map `t: K → K'`.
pub fn postcompose(src: &HomObject, dst: &HomObject, t: &Matrix) -> Matrix {
    let id = Matrix::identity(t.field(), src.source_dim);
    dst.coords.mul(&t.kron(&id)).mul(&src.embedding)
}

/// `Hom(V', M) → Hom(V, M)`, `φ ↦ φ ∘ g`, for `g: V → V'`.
pub fn precompose(src: &HomObject, dst: &HomObject, g: &Matrix) -> Matrix {
    let id = Matrix::identity(g.field(), src.target_dim);
    dst.coords.mul(&id.kron(&g.transpose())).mul(&src.embedding)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebroid::algebroid_from_hopf;
    use crate::quasihopf::{cyclic_group_table, group_algebra, sweedler_h4};

    /// With `R = k` the algebroid path reproduces the quasi-Hopf path exactly.
    #[test]
    fn trivial_base_agrees_with_hopf_path() {
        let f = Field::prime(5).unwrap();
        for q in [group_algebra(f, &cyclic_group_table(2)).unwrap(), sweedler_h4(f)] {
            let a = algebroid_from_hopf(&q).unwrap();
            let (cq, ca) = (Category::quasi(q.clone()), Category::algebroid(a));
            let (rq, ra) = (cq.regular_module(), ca.regular_module());
            assert_eq!(cq.unit_object().actions(), ca.unit_object().actions());
            assert_eq!(cq.tensor(&rq, &rq).unwrap().module.actions(), ca.tensor(&ra, &ra).unwrap().module.actions());
            assert_eq!(cq.hom_l(&rq, &rq).unwrap().module.actions(), ca.hom_l(&ra, &ra).unwrap().module.actions());
            assert_eq!(cq.hom_r(&rq, &rq).unwrap().module.actions(), ca.hom_r(&ra, &ra).unwrap().module.actions());
            assert_eq!(cq.eval_l(&rq, &rq).unwrap(), ca.eval_l(&ra, &ra).unwrap());
            assert_eq!(cq.eval_r(&rq, &rq).unwrap(), ca.eval_r(&ra, &ra).unwrap());
            assert_eq!(cq.associator(&rq, &rq, &rq).unwrap(), ca.associator(&ra, &ra, &ra).unwrap());
            assert_eq!(cq.hexagon_isos(&rq, &rq, &rq).unwrap(), ca.hexagon_isos(&ra, &ra, &ra).unwrap());
        }
    }
}
