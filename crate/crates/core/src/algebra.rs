//! Finite-dimensional algebras by structure constants, sparse elements of
//! their tensor powers, and modules given by action matrices.

use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeMap;
use std::hash::{Hash, Hasher};

use crate::error::{mismatch, Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::Matrix;

/// An associative unital algebra with basis `e_0..e_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    field: Field,
    dim: usize,
    /// `mult[(i * n + j) * n + k]` = coefficient of `e_k` in `e_i e_j`.
    mult: Vec<Scalar>,
    unit: Vec<Scalar>,
    /// Sparse form of `e_i e_j`, indexed `i * n + j`.
    products: Vec<Vec<(usize, Scalar)>>,
}

impl Algebra {
    pub fn new(field: Field, dim: usize, mult: Vec<Scalar>, unit: Vec<Scalar>) -> Result<Algebra> {
        if dim == 0 {
            return Err(Error::Invalid("algebra of dimension 0".into()));
        }
        if mult.len() != dim * dim * dim {
            return Err(mismatch("mult", dim * dim * dim, mult.len()));
        }
        if unit.len() != dim {
            return Err(mismatch("unit", dim, unit.len()));
        }
        for s in mult.iter().chain(&unit) {
            if s.field() != field {
                return Err(Error::FieldMismatch(field, s.field()));
            }
        }
        let products = (0..dim * dim)
            .map(|ij| {
                (0..dim)
                    .filter_map(|k| {
                        let c = &mult[ij * dim + k];
                        (!c.is_zero()).then(|| (k, c.clone()))
                    })
                    .collect()
            })
            .collect();
        Ok(Algebra {
            field,
            dim,
            mult,
            unit,
            products,
        })
    }

    /// Builds from a closure giving `e_i e_j` as a dense vector.
    pub fn from_fn(
        field: Field,
        dim: usize,
        unit: Vec<Scalar>,
        mut prod: impl FnMut(usize, usize) -> Vec<Scalar>,
    ) -> Result<Algebra> {
        let mut mult = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = prod(i, j);
                if v.len() != dim {
                    return Err(mismatch("product vector", dim, v.len()));
                }
                mult.extend(v);
            }
        }
        Algebra::new(field, dim, mult, unit)
    }

    pub fn field(&self) -> Field {
        self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn mult(&self) -> &[Scalar] {
        &self.mult
    }
    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.products[i * self.dim + j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim]
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero_vector();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in self.basis_product(i, j) {
                    out[*k].add_mul(&xy, c);
                }
            }
        }
        out
    }

    /// Product of several elements, left to right.
    pub fn mul_all(&self, xs: &[&[Scalar]]) -> Vec<Scalar> {
        let mut acc = self.unit.clone();
        for x in xs {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// Matrix of left multiplication `x ↦ a x`.
    pub fn left_mult(&self, a: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.mul(a, &self.basis_vector(j));
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    /// Matrix of right multiplication `x ↦ x a`.
    pub fn right_mult(&self, a: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.mul(&self.basis_vector(j), a);
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    /// The algebra with reversed multiplication.
    pub fn opposite(&self) -> Algebra {
        Algebra::from_fn(self.field, self.dim, self.unit.clone(), |i, j| {
            let n = self.dim;
            self.mult[(j * n + i) * n..(j * n + i + 1) * n].to_vec()
        })
        .expect("opposite of a valid algebra")
    }

    /// `A ⊗ B` with componentwise product.
    pub fn tensor(&self, other: &Algebra) -> Algebra {
        let (n, m) = (self.dim, other.dim);
        let unit = kron_vec(&self.unit, &other.unit);
        Algebra::from_fn(self.field, n * m, unit, |ab, cd| {
            let (a, b) = (ab / m, ab % m);
            let (c, d) = (cd / m, cd % m);
            let mut v = vec![self.field.zero(); n * m];
            for (k, x) in self.basis_product(a, c) {
                for (l, y) in other.basis_product(b, d) {
                    v[k * m + l].add_mul(x, y);
                }
            }
            v
        })
        .expect("tensor of valid algebras")
    }

    /// First failing triple of basis indices for associativity, or `None`.
    pub fn associativity_witness(&self) -> Option<Vec<usize>> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (a, b, c) = (self.basis_vector(i), self.basis_vector(j), self.basis_vector(k));
                    if self.mul(&self.mul(&a, &b), &c) != self.mul(&a, &self.mul(&b, &c)) {
                        return Some(vec![i, j, k]);
                    }
                }
            }
        }
        None
    }

    pub fn unit_witness(&self) -> Option<Vec<usize>> {
        (0..self.dim)
            .find(|&i| {
                let e = self.basis_vector(i);
                self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e
            })
            .map(|i| vec![i])
    }

    pub fn fingerprint(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.field.hash(&mut h);
        self.dim.hash(&mut h);
        self.mult.hash(&mut h);
        self.unit.hash(&mut h);
        h.finish()
    }
}

pub fn kron_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x * y);
        }
    }
    out
}

/// A sparse element of `H^{⊗k}`: a map from index tuples to nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    field: Field,
    order: usize,
    terms: BTreeMap<Vec<usize>, Scalar>,
}

impl Tensor {
    pub fn zero(field: Field, order: usize) -> Tensor {
        Tensor {
            field,
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(s: Scalar) -> Tensor {
        let mut t = Tensor::zero(s.field(), 0);
        t.add_term(Vec::new(), s);
        t
    }

    /// From a dense vector indexed by [`tensor_index`](crate::linalg::tensor_index) over `order` copies of a `dim`-space.
    pub fn from_dense(field: Field, dim: usize, order: usize, v: &[Scalar]) -> Result<Tensor> {
        let expected = dim.pow(order as u32);
        if v.len() != expected {
            return Err(mismatch("tensor entries", expected, v.len()));
        }
        let mut t = Tensor::zero(field, order);
        for (flat, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut idx = vec![0; order];
            let mut r = flat;
            for slot in (0..order).rev() {
                idx[slot] = r % dim;
                r /= dim;
            }
            t.terms.insert(idx, c.clone());
        }
        Ok(t)
    }

    pub fn to_dense(&self, dim: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); dim.pow(self.order as u32)];
        for (idx, c) in &self.terms {
            let flat = idx.iter().fold(0, |acc, &i| acc * dim + i);
            v[flat] = c.clone();
        }
        v
    }

    pub fn field(&self) -> Field {
        self.field
    }
    pub fn order(&self) -> usize {
        self.order
    }
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.terms.iter()
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, idx: Vec<usize>, c: Scalar) {
        debug_assert_eq!(idx.len(), self.order);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&idx) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&idx);
                }
            }
            None => {
                self.terms.insert(idx, c);
            }
        }
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.order, other.order, "tensor order");
        let mut out = self.clone();
        for (i, c) in &other.terms {
            out.add_term(i.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        self.add(&other.scale(&-self.field.one()))
    }

    pub fn scale(&self, s: &Scalar) -> Tensor {
        let mut out = Tensor::zero(self.field, self.order);
        for (i, c) in &self.terms {
            out.add_term(i.clone(), c * s);
        }
        out
    }

    /// `self ⊗ other`.
    pub fn outer(&self, other: &Tensor) -> Tensor {
        let mut out = Tensor::zero(self.field, self.order + other.order);
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                let mut idx = i.clone();
                idx.extend_from_slice(j);
                out.add_term(idx, a * b);
            }
        }
        out
    }

    /// Factorwise product in `H^{⊗k}`.
    pub fn mul(&self, other: &Tensor, alg: &Algebra) -> Tensor {
        assert_eq!(self.order, other.order, "tensor order");
        let mut out = Tensor::zero(self.field, self.order);
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                let ab = a * b;
                let mut partial: Vec<(Vec<usize>, Scalar)> = vec![(Vec::with_capacity(self.order), ab)];
                for slot in 0..self.order {
                    let prods = alg.basis_product(i[slot], j[slot]);
                    let mut next = Vec::with_capacity(partial.len() * prods.len());
                    for (idx, c) in &partial {
                        for (k, d) in prods {
                            let mut idx2 = idx.clone();
                            idx2.push(*k);
                            next.push((idx2, c * d));
                        }
                    }
                    partial = next;
                }
                for (idx, c) in partial {
                    out.add_term(idx, c);
                }
            }
        }
        out
    }

    /// Replaces factor `slot` by the image of its basis index under `images`
    /// (one tensor of a fixed order per basis element). Order-2 images apply a
    /// coproduct, order-0 images a functional, order-1 images a linear map.
    pub fn apply_at(&self, slot: usize, images: &[Tensor]) -> Tensor {
        assert!(slot < self.order, "slot out of range");
        let m = images.first().map_or(1, |t| t.order);
        let mut out = Tensor::zero(self.field, self.order - 1 + m);
        for (idx, c) in &self.terms {
            for (sub, d) in &images[idx[slot]].terms {
                let mut idx2 = Vec::with_capacity(out.order);
                idx2.extend_from_slice(&idx[..slot]);
                idx2.extend_from_slice(sub);
                idx2.extend_from_slice(&idx[slot + 1..]);
                out.add_term(idx2, c * d);
            }
        }
        out
    }

    /// Reorders factors: new factor `i` is old factor `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Tensor {
        assert_eq!(perm.len(), self.order);
        let mut out = Tensor::zero(self.field, self.order);
        for (idx, c) in &self.terms {
            out.add_term(perm.iter().map(|&p| idx[p]).collect(), c.clone());
        }
        out
    }

    /// Inserts `elem` (order 1) as a new factor at position `slot`.
    pub fn insert(&self, slot: usize, elem: &Tensor) -> Tensor {
        assert_eq!(elem.order, 1);
        let mut out = Tensor::zero(self.field, self.order + 1);
        for (idx, c) in &self.terms {
            for (e, d) in &elem.terms {
                let mut idx2 = idx.clone();
                idx2.insert(slot, e[0]);
                out.add_term(idx2, c * d);
            }
        }
        out
    }

    /// Splits into `(coefficient, per-factor basis index)` pairs.
    pub fn legs(&self) -> Vec<(Scalar, Vec<usize>)> {
        self.terms.iter().map(|(i, c)| (c.clone(), i.clone())).collect()
    }

    /// First basis tuple (lexicographic) where `self` and `other` differ.
    pub fn first_difference(&self, other: &Tensor) -> Option<Vec<usize>> {
        let d = self.sub(other);
        d.terms.keys().next().cloned()
    }
}

/// An element of `H` as an order-1 tensor.
pub fn element(field: Field, v: &[Scalar]) -> Tensor {
    Tensor::from_dense(field, v.len(), 1, v).expect("order-1 tensor")
}

/// A left module: one action matrix per basis element of the acting algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Module {
    field: Field,
    dim: usize,
    action: Vec<Matrix>,
    parent: u64,
}

impl Module {
    /// `action[i]` is the matrix of `e_i` acting on the module; entry `(b, a)`
    /// is the coefficient of `v_b` in `e_i · v_a`.
    pub fn new(field: Field, dim: usize, action: Vec<Matrix>, parent: u64) -> Result<Module> {
        for m in &action {
            if m.rows() != dim || m.cols() != dim {
                return Err(mismatch("action matrix", dim, m.rows().max(m.cols())));
            }
            if m.field() != field {
                return Err(Error::FieldMismatch(field, m.field()));
            }
        }
        Ok(Module {
            field,
            dim,
            action,
            parent,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn parent(&self) -> u64 {
        self.parent
    }
    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }
    pub fn basis_action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    /// Action of a general element `Σ c_i e_i`.
    pub fn act(&self, h: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.dim, self.dim);
        for (i, c) in h.iter().enumerate() {
            m.add_scaled(c, &self.action[i]);
        }
        m
    }

    /// Checks `ρ(1) = id` and `ρ(e_i e_j) = ρ(e_i) ρ(e_j)`; returns the first failing pair.
    pub fn action_witness(&self, alg: &Algebra) -> Option<Vec<usize>> {
        if !self.act(alg.unit()).is_identity() {
            return Some(vec![]);
        }
        let n = alg.dim();
        for i in 0..n {
            for j in 0..n {
                let lhs = self.act(&alg.mul(&alg.basis_vector(i), &alg.basis_vector(j)));
                if lhs != self.action[i].mul(&self.action[j]) {
                    return Some(vec![i, j]);
                }
            }
        }
        None
    }

    /// Structural hash used to key caches.
    pub fn fingerprint(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.parent.hash(&mut h);
        self.dim.hash(&mut h);
        self.action.hash(&mut h);
        h.finish()
    }

    /// `self ⊕ other`, block diagonal.
    pub fn direct_sum(&self, other: &Module) -> Result<Module> {
        if self.parent != other.parent || self.action.len() != other.action.len() {
            return Err(Error::ParentMismatch);
        }
        let d = self.dim + other.dim;
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| {
                let mut m = Matrix::zeros(self.field, d, d);
                for i in 0..self.dim {
                    for j in 0..self.dim {
                        m.set(i, j, a.get(i, j).clone());
                    }
                }
                for i in 0..other.dim {
                    for j in 0..other.dim {
                        m.set(self.dim + i, self.dim + j, b.get(i, j).clone());
                    }
                }
                m
            })
            .collect();
        Module::new(self.field, d, action, self.parent)
    }

    /// Conjugates by an invertible change of basis `p`: new action `p ρ p⁻¹`.
    pub fn transport(&self, p: &Matrix) -> Result<Module> {
        let inv = p
            .inverse()
            .ok_or_else(|| Error::Invalid("change of basis is singular".into()))?;
        Module::new(
            self.field,
            self.dim,
            self.action.iter().map(|a| p.mul(a).mul(&inv)).collect(),
            self.parent,
        )
    }
}

/// Action of an element of `H^{⊗k}` on `V_1 ⊗ ... ⊗ V_k`.
pub fn act_tensor(t: &Tensor, modules: &[&Module]) -> Matrix {
    assert_eq!(t.order(), modules.len(), "one module per tensor factor");
    let field = t.field();
    let dim: usize = modules.iter().map(|m| m.dim()).product();
    let mut out = Matrix::zeros(field, dim, dim);
    for (idx, c) in t.terms() {
        let mut k = Matrix::identity(field, 1);
        for (slot, &i) in idx.iter().enumerate() {
            k = k.kron(modules[slot].basis_action(i));
        }
        out.add_scaled(c, &k);
    }
    out
}

/// Row-major flattening of a `rows x cols` matrix back into a matrix.
pub fn unflatten(field: Field, rows: usize, cols: usize, v: &[Scalar]) -> Matrix {
    Matrix::from_data(field, rows, cols, v.to_vec()).expect("flattened length")
}

/// Matrix of `φ ↦ A φ B` on row-major flattened `Hom_k`: `A ⊗ Bᵀ`.
pub fn sandwich(a: &Matrix, b: &Matrix) -> Matrix {
    a.kron(&b.transpose())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2(field: Field) -> Algebra {
        Algebra::from_fn(field, 2, vec![field.one(), field.zero()], |i, j| {
            let mut v = vec![field.zero(); 2];
            v[(i + j) % 2] = field.one();
            v
        })
        .unwrap()
    }

    #[test]
    fn group_algebra_products() {
        let a = c2(Field::Rationals);
        assert!(a.associativity_witness().is_none());
        assert!(a.unit_witness().is_none());
        assert_eq!(a.basis_product(1, 1), &[(0, Field::Rationals.one())]);
    }

    #[test]
    fn tensor_ops_roundtrip() {
        let f = Field::Rationals;
        let v: Vec<Scalar> = (0..8).map(|i| f.from_i64(i % 3)).collect();
        let t = Tensor::from_dense(f, 2, 3, &v).unwrap();
        assert_eq!(t.to_dense(2), v);
        let p = t.permute(&[2, 0, 1]).permute(&[1, 2, 0]);
        assert_eq!(p, t);
    }

    #[test]
    fn apply_at_counit_contracts() {
        let f = Field::Rationals;
        let a = c2(f);
        // Δ(g) = g ⊗ g, ε(g) = 1
        let delta: Vec<Tensor> = (0..2)
            .map(|i| {
                let mut t = Tensor::zero(f, 2);
                t.add_term(vec![i, i], f.one());
                t
            })
            .collect();
        let eps: Vec<Tensor> = (0..2).map(|_| Tensor::scalar(f.one())).collect();
        let g = element(f, &a.basis_vector(1));
        let back = g.apply_at(0, &delta).apply_at(1, &eps);
        assert_eq!(back, g);
    }

    #[test]
    fn regular_module_is_action() {
        let f = Field::prime(5).unwrap();
        let a = c2(f);
        let m = Module::new(
            f,
            2,
            (0..2).map(|i| a.left_mult(&a.basis_vector(i))).collect(),
            a.fingerprint(),
        )
        .unwrap();
        assert!(m.action_witness(&a).is_none());
    }

    #[test]
    fn sandwich_matches_product() {
        let f = Field::Rationals;
        let a = Matrix::from_i64(f, &[&[1, 2], &[0, 1]]);
        let b = Matrix::from_i64(f, &[&[3, 0, 1], &[1, 1, 0], &[0, 2, 1]]);
        let phi = Matrix::from_i64(f, &[&[1, 0, 2], &[4, 1, 1]]);
        let direct = a.mul(&phi).mul(&b).to_vec();
        assert_eq!(sandwich(&a, &b).mul_vec(&phi.to_vec()), direct);
    }
}
