//! Hopf algebroids over a noncommutative base `R` by structure constants.
//!
//! `R_r` shares the carrier of `R_l` with the opposite product. The
//! coproducts are stored as k-linear lifts into `H ⊗_k H`; every identity
//! involving them is checked modulo the relevant relation space, and module
//! tensor products are quotients `M ⊗_{R_l} N` carried with a projector and a
//! section.

use crate::algebra::{act_tensor, element, kron_vec, sandwich, Algebra, Module, Tensor};
use crate::category::{HomObject, TensorObject};
use crate::error::{mismatch, Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{intertwiner_space, quotient_section, Matrix, Subspace};
use crate::quasihopf::{add_eval, curry_left, curry_right, swap_inner_layout, QuasiHopf};
use crate::report::{first_failure, CheckReport};

/// The base algebra `R = R_l`.
pub type BaseRing = Algebra;

/// Plain structure-constant presentation of a Hopf algebroid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebroidData {
    pub field: Field,
    pub base_dim: usize,
    pub base_mult: Vec<Scalar>,
    pub base_unit: Vec<Scalar>,
    pub dim: usize,
    pub mult: Vec<Scalar>,
    pub unit: Vec<Scalar>,
    /// `s_l[r]`: image in `H` of the base basis element `r`; likewise for the other maps.
    pub s_l: Vec<Vec<Scalar>>,
    pub t_l: Vec<Vec<Scalar>>,
    pub s_r: Vec<Vec<Scalar>>,
    pub t_r: Vec<Vec<Scalar>>,
    /// `delta_l[i]`: a lift of `Δ_l(e_i)` to `H ⊗_k H`, dense of length `n²`.
    pub delta_l: Vec<Vec<Scalar>>,
    pub delta_r: Vec<Vec<Scalar>>,
    /// `eps_l[i]`: `ε_l(e_i)` as a vector of `R`.
    pub eps_l: Vec<Vec<Scalar>>,
    pub eps_r: Vec<Vec<Scalar>>,
    pub antipode: Vec<Vec<Scalar>>,
    pub antipode_inv: Vec<Vec<Scalar>>,
}

/// Which base a tensor product is taken over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Base {
    /// `⊗_{R_l}`: `t_l(r)x ⊗ y = x ⊗ s_l(r)y`.
    Left,
    /// `⊗_{R_r}`: `x s_r(r) ⊗ y = x ⊗ y t_r(r)`.
    Right,
}

#[derive(Clone, Debug)]
pub struct HopfAlgebroid {
    data: HopfAlgebroidData,
    base: Algebra,
    alg: Algebra,
    s_l: Matrix,
    t_l: Matrix,
    s_r: Matrix,
    t_r: Matrix,
    delta_l: Vec<Tensor>,
    delta_r: Vec<Tensor>,
    eps_l: Matrix,
    eps_r: Matrix,
    antipode: Matrix,
    antipode_inv: Matrix,
    fingerprint: u64,
}

impl HopfAlgebroid {
    /// Validates shapes only; the axioms are reported by the check methods.
    pub fn new(data: HopfAlgebroidData) -> Result<HopfAlgebroid> {
        let f = data.field;
        let (n, r) = (data.dim, data.base_dim);
        let base = Algebra::new(f, r, data.base_mult.clone(), data.base_unit.clone())?;
        let alg = Algebra::new(f, n, data.mult.clone(), data.unit.clone())?;
        let cols = |what: &str, list: &[Vec<Scalar>], count: usize, len: usize| -> Result<Matrix> {
            if list.len() != count {
                return Err(mismatch(what, count, list.len()));
            }
            for v in list {
                if v.len() != len {
                    return Err(mismatch(what, len, v.len()));
                }
                if let Some(s) = v.iter().find(|s| s.field() != f) {
                    return Err(Error::FieldMismatch(f, s.field()));
                }
            }
            Matrix::from_cols(f, len, list)
        };
        let s_l = cols("s_l", &data.s_l, r, n)?;
        let t_l = cols("t_l", &data.t_l, r, n)?;
        let s_r = cols("s_r", &data.s_r, r, n)?;
        let t_r = cols("t_r", &data.t_r, r, n)?;
        let eps_l = cols("eps_l", &data.eps_l, n, r)?;
        let eps_r = cols("eps_r", &data.eps_r, n, r)?;
        let antipode = cols("antipode", &data.antipode, n, n)?;
        let antipode_inv = cols("antipode_inv", &data.antipode_inv, n, n)?;
        cols("delta_l", &data.delta_l, n, n * n)?;
        cols("delta_r", &data.delta_r, n, n * n)?;
        let lift = |list: &[Vec<Scalar>]| -> Result<Vec<Tensor>> {
            list.iter().map(|v| Tensor::from_dense(f, n, 2, v)).collect()
        };
        let delta_l = lift(&data.delta_l)?;
        let delta_r = lift(&data.delta_r)?;
        let fingerprint = {
            use std::collections::hash_map::DefaultHasher;
            use std::hash::{Hash, Hasher};
            let mut h = DefaultHasher::new();
            "algebroid".hash(&mut h);
            base.fingerprint().hash(&mut h);
            alg.fingerprint().hash(&mut h);
            for list in [
                &data.s_l,
                &data.t_l,
                &data.s_r,
                &data.t_r,
                &data.delta_l,
                &data.delta_r,
                &data.eps_l,
                &data.eps_r,
                &data.antipode,
                &data.antipode_inv,
            ] {
                list.hash(&mut h);
            }
            h.finish()
        };
        Ok(HopfAlgebroid {
            data,
            base,
            alg,
            s_l,
            t_l,
            s_r,
            t_r,
            delta_l,
            delta_r,
            eps_l,
            eps_r,
            antipode,
            antipode_inv,
            fingerprint,
        })
    }

    pub fn data(&self) -> &HopfAlgebroidData {
        &self.data
    }
    pub fn field(&self) -> Field {
        self.data.field
    }
    pub fn dim(&self) -> usize {
        self.data.dim
    }
    pub fn base_dim(&self) -> usize {
        self.data.base_dim
    }
    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }
    pub fn base(&self) -> &BaseRing {
        &self.base
    }
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }
    pub fn one(&self) -> &[Scalar] {
        &self.data.unit
    }
    pub fn delta_l_tensors(&self) -> &[Tensor] {
        &self.delta_l
    }
    pub fn delta_r_tensors(&self) -> &[Tensor] {
        &self.delta_r
    }
    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }
    pub fn antipode_inv(&self) -> &Matrix {
        &self.antipode_inv
    }

    pub fn e(&self, i: usize) -> Vec<Scalar> {
        self.alg.basis_vector(i)
    }
    pub fn r(&self, i: usize) -> Vec<Scalar> {
        self.base.basis_vector(i)
    }
    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.alg.mul(a, b)
    }
    pub fn mul_all(&self, xs: &[&[Scalar]]) -> Vec<Scalar> {
        self.alg.mul_all(xs)
    }
    /// Product in `R_l`.
    pub fn base_mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.base.mul(a, b)
    }
    pub fn s_l(&self, r: &[Scalar]) -> Vec<Scalar> {
        self.s_l.mul_vec(r)
    }
    pub fn t_l(&self, r: &[Scalar]) -> Vec<Scalar> {
        self.t_l.mul_vec(r)
    }
    pub fn s_r(&self, r: &[Scalar]) -> Vec<Scalar> {
        self.s_r.mul_vec(r)
    }
    pub fn t_r(&self, r: &[Scalar]) -> Vec<Scalar> {
        self.t_r.mul_vec(r)
    }
    pub fn eps_l(&self, h: &[Scalar]) -> Vec<Scalar> {
        self.eps_l.mul_vec(h)
    }
    pub fn eps_r(&self, h: &[Scalar]) -> Vec<Scalar> {
        self.eps_r.mul_vec(h)
    }
    pub fn s(&self, h: &[Scalar]) -> Vec<Scalar> {
        self.antipode.mul_vec(h)
    }
    pub fn s_inv(&self, h: &[Scalar]) -> Vec<Scalar> {
        self.antipode_inv.mul_vec(h)
    }
    pub fn delta_l(&self, h: &[Scalar]) -> Tensor {
        element(self.field(), h).apply_at(0, &self.delta_l)
    }
    pub fn delta_r(&self, h: &[Scalar]) -> Tensor {
        element(self.field(), h).apply_at(0, &self.delta_r)
    }

    fn el(&self, h: &[Scalar]) -> Tensor {
        element(self.field(), h)
    }
    fn pair(&self, x: &[Scalar], y: &[Scalar]) -> Tensor {
        self.el(x).outer(&self.el(y))
    }
    fn dense(&self, t: &Tensor) -> Vec<Scalar> {
        t.to_dense(self.dim())
    }
    /// `Σ f(x) g(y)` over the legs `x ⊗ y` of an order-2 tensor.
    fn contract<F, G>(&self, t: &Tensor, f: F, g: G) -> Vec<Scalar>
    where
        F: Fn(&[Scalar]) -> Vec<Scalar>,
        G: Fn(&[Scalar]) -> Vec<Scalar>,
    {
        let mut acc = self.alg.zero_vector();
        for (c, idx) in t.legs() {
            let p = self.mul(&f(&self.e(idx[0])), &g(&self.e(idx[1])));
            for (a, x) in acc.iter_mut().zip(&p) {
                a.add_mul(&c, x);
            }
        }
        acc
    }

    // ---- relation spaces -------------------------------------------------

    /// Operators `(A_r, B_r)` with relations `A_r x ⊗ y − x ⊗ B_r y` on `H ⊗ H`.
    fn regular_pairs(&self, side: Base) -> Vec<(Matrix, Matrix)> {
        (0..self.base_dim())
            .map(|r| {
                let er = self.r(r);
                match side {
                    Base::Left => (self.alg.left_mult(&self.t_l(&er)), self.alg.left_mult(&self.s_l(&er))),
                    Base::Right => (self.alg.right_mult(&self.s_r(&er)), self.alg.right_mult(&self.t_r(&er))),
                }
            })
            .collect()
    }

    /// Relations in `H^{⊗(k+1)}` for the tensor products `sides[0], …, sides[k-1]`
    /// between consecutive factors.
    pub fn relation_space(&self, sides: &[Base]) -> Subspace {
        let n = self.dim();
        let f = self.field();
        let order = sides.len() + 1;
        let mut gens = Vec::new();
        for (slot, &side) in sides.iter().enumerate() {
            let pre = Matrix::identity(f, n.pow(slot as u32));
            let post = Matrix::identity(f, n.pow((order - slot - 2) as u32));
            for (a, b) in self.regular_pairs(side) {
                let local = relation_operator(&a, &b);
                gens.push(pre.kron(&local).kron(&post));
            }
        }
        column_span(f, n.pow(order as u32), &gens)
    }

    // ---- left bialgebroid --------------------------------------------------

    pub fn check_left_bialgebroid(&self) -> CheckReport {
        let (n, rb) = (self.dim(), self.base_dim());
        let mut rep = CheckReport::new();
        rep.record("base_associativity", self.base.associativity_witness());
        rep.record("base_unit", self.base.unit_witness());
        rep.record("associativity", self.alg.associativity_witness());
        rep.record("unit", self.alg.unit_witness());
        rep.record(
            "s_l_multiplicative",
            self.map_witness(rb, &self.s_l, |a, b| self.base_mul(a, b)),
        );
        rep.record(
            "t_l_antimultiplicative",
            self.map_witness(rb, &self.t_l, |a, b| self.base_mul(b, a)),
        );
        rep.record("s_l_t_l_commute", self.commute_witness(&self.s_l, &self.t_l));

        let rel2 = self.relation_space(&[Base::Left]);
        let bimod = first_failure(rb * n * 2, |k| {
            let (r, i, which) = (k / (2 * n), (k / 2) % n, k % 2);
            let er = self.r(r);
            let ei = self.e(i);
            let d = &self.delta_l[i];
            let (lhs, rhs) = if which == 0 {
                let x = self.s_l(&er);
                (self.delta_l(&self.mul(&x, &ei)), self.pair(&x, self.one()).mul(d, &self.alg))
            } else {
                let x = self.t_l(&er);
                (self.delta_l(&self.mul(&x, &ei)), self.pair(self.one(), &x).mul(d, &self.alg))
            };
            !rel2.contains(&self.dense(&lhs.sub(&rhs)))
        });
        rep.record("delta_l_bimodule", bimod.map(|k| vec![k / (2 * n), (k / 2) % n, k % 2]));
        let eps_bimod = first_failure(rb * n * 2, |k| {
            let (r, i, which) = (k / (2 * n), (k / 2) % n, k % 2);
            let er = self.r(r);
            let ei = self.e(i);
            if which == 0 {
                self.eps_l(&self.mul(&self.s_l(&er), &ei)) != self.base_mul(&er, &self.eps_l(&ei))
            } else {
                self.eps_l(&self.mul(&self.t_l(&er), &ei)) != self.base_mul(&self.eps_l(&ei), &er)
            }
        });
        rep.record("eps_l_bimodule", eps_bimod.map(|k| vec![k / (2 * n), (k / 2) % n, k % 2]));

        let rel3 = self.relation_space(&[Base::Left, Base::Left]);
        let coassoc = first_failure(n, |i| {
            let d = &self.delta_l[i];
            let lhs = d.apply_at(0, &self.delta_l);
            let rhs = d.apply_at(1, &self.delta_l);
            !rel3.contains(&self.dense(&lhs.sub(&rhs)))
        });
        rep.record("coassociativity_l", coassoc.map(|i| vec![i]));
        let counit = first_failure(n, |i| {
            let d = &self.delta_l[i];
            let a = self.contract(d, |x| self.s_l(&self.eps_l(x)), |y| y.to_vec());
            let b = {
                let mut acc = self.alg.zero_vector();
                for (c, idx) in d.legs() {
                    let p = self.mul(&self.t_l(&self.eps_l(&self.e(idx[1]))), &self.e(idx[0]));
                    for (s, x) in acc.iter_mut().zip(&p) {
                        s.add_mul(&c, x);
                    }
                }
                acc
            };
            a != self.e(i) || b != self.e(i)
        });
        rep.record("counit_l", counit.map(|i| vec![i]));
        let takeuchi = first_failure(rb * n, |k| {
            let (r, i) = (k / n, k % n);
            let er = self.r(r);
            let d = &self.delta_l[i];
            let lhs = d.mul(&self.pair(&self.t_l(&er), self.one()), &self.alg);
            let rhs = d.mul(&self.pair(self.one(), &self.s_l(&er)), &self.alg);
            !rel2.contains(&self.dense(&lhs.sub(&rhs)))
        });
        rep.record("takeuchi_l", takeuchi.map(|k| vec![k / n, k % n]));
        let mult = if !rel2.contains(&self.dense(&self.delta_l(self.one()).sub(&self.pair(self.one(), self.one())))) {
            Some(vec![])
        } else {
            first_failure(n * n, |k| {
                let (i, j) = (k / n, k % n);
                let lhs = self.delta_l(&self.mul(&self.e(i), &self.e(j)));
                let rhs = self.delta_l[i].mul(&self.delta_l[j], &self.alg);
                !rel2.contains(&self.dense(&lhs.sub(&rhs)))
            })
            .map(|k| vec![k / n, k % n])
        };
        rep.record("delta_l_multiplicative", mult);
        let one_r = self.base.unit().to_vec();
        let character = if self.eps_l(self.one()) != one_r {
            Some(vec![])
        } else {
            first_failure(n * n, |k| {
                let (i, j) = (k / n, k % n);
                let (ei, ej) = (self.e(i), self.e(j));
                let lhs = self.eps_l(&self.mul(&ei, &ej));
                let e = self.eps_l(&ej);
                lhs != self.eps_l(&self.mul(&ei, &self.s_l(&e))) || lhs != self.eps_l(&self.mul(&ei, &self.t_l(&e)))
            })
            .map(|k| vec![k / n, k % n])
        };
        rep.record("eps_l_character", character);
        rep
    }

    // ---- right bialgebroid -------------------------------------------------

    pub fn check_right_bialgebroid(&self) -> CheckReport {
        let (n, rb) = (self.dim(), self.base_dim());
        let mut rep = CheckReport::new();
        rep.record("base_associativity", self.base.associativity_witness());
        rep.record("base_unit", self.base.unit_witness());
        rep.record("associativity", self.alg.associativity_witness());
        rep.record("unit", self.alg.unit_witness());
        // s_r is multiplicative on R_r = R_l^op, t_r anti-multiplicative on R_r
        rep.record(
            "s_r_multiplicative",
            self.map_witness(rb, &self.s_r, |a, b| self.base_mul(b, a)),
        );
        rep.record(
            "t_r_antimultiplicative",
            self.map_witness(rb, &self.t_r, |a, b| self.base_mul(a, b)),
        );
        rep.record("s_r_t_r_commute", self.commute_witness(&self.s_r, &self.t_r));

        let rel2 = self.relation_space(&[Base::Right]);
        let bimod = first_failure(rb * n * 2, |k| {
            let (r, i, which) = (k / (2 * n), (k / 2) % n, k % 2);
            let er = self.r(r);
            let ei = self.e(i);
            let d = &self.delta_r[i];
            let (lhs, rhs) = if which == 0 {
                let x = self.t_r(&er);
                (self.delta_r(&self.mul(&ei, &x)), d.mul(&self.pair(&x, self.one()), &self.alg))
            } else {
                let x = self.s_r(&er);
                (self.delta_r(&self.mul(&ei, &x)), d.mul(&self.pair(self.one(), &x), &self.alg))
            };
            !rel2.contains(&self.dense(&lhs.sub(&rhs)))
        });
        rep.record("delta_r_bimodule", bimod.map(|k| vec![k / (2 * n), (k / 2) % n, k % 2]));
        let eps_bimod = first_failure(rb * n * 2, |k| {
            let (r, i, which) = (k / (2 * n), (k / 2) % n, k % 2);
            let er = self.r(r);
            let ei = self.e(i);
            if which == 0 {
                self.eps_r(&self.mul(&ei, &self.t_r(&er))) != self.base_mul(&self.eps_r(&ei), &er)
            } else {
                self.eps_r(&self.mul(&ei, &self.s_r(&er))) != self.base_mul(&er, &self.eps_r(&ei))
            }
        });
        rep.record("eps_r_bimodule", eps_bimod.map(|k| vec![k / (2 * n), (k / 2) % n, k % 2]));

        let rel3 = self.relation_space(&[Base::Right, Base::Right]);
        let coassoc = first_failure(n, |i| {
            let d = &self.delta_r[i];
            let lhs = d.apply_at(0, &self.delta_r);
            let rhs = d.apply_at(1, &self.delta_r);
            !rel3.contains(&self.dense(&lhs.sub(&rhs)))
        });
        rep.record("coassociativity_r", coassoc.map(|i| vec![i]));
        let counit = first_failure(n, |i| {
            let d = &self.delta_r[i];
            let a = self.contract(d, |x| x.to_vec(), |y| self.s_r(&self.eps_r(y)));
            let mut b = self.alg.zero_vector();
            for (c, idx) in d.legs() {
                let p = self.mul(&self.e(idx[1]), &self.t_r(&self.eps_r(&self.e(idx[0]))));
                for (s, x) in b.iter_mut().zip(&p) {
                    s.add_mul(&c, x);
                }
            }
            a != self.e(i) || b != self.e(i)
        });
        rep.record("counit_r", counit.map(|i| vec![i]));
        let takeuchi = first_failure(rb * n, |k| {
            let (r, i) = (k / n, k % n);
            let er = self.r(r);
            let d = &self.delta_r[i];
            let lhs = self.pair(&self.s_r(&er), self.one()).mul(d, &self.alg);
            let rhs = self.pair(self.one(), &self.t_r(&er)).mul(d, &self.alg);
            !rel2.contains(&self.dense(&lhs.sub(&rhs)))
        });
        rep.record("takeuchi_r", takeuchi.map(|k| vec![k / n, k % n]));
        let mult = if !rel2.contains(&self.dense(&self.delta_r(self.one()).sub(&self.pair(self.one(), self.one())))) {
            Some(vec![])
        } else {
            first_failure(n * n, |k| {
                let (i, j) = (k / n, k % n);
                let lhs = self.delta_r(&self.mul(&self.e(i), &self.e(j)));
                let rhs = self.delta_r[i].mul(&self.delta_r[j], &self.alg);
                !rel2.contains(&self.dense(&lhs.sub(&rhs)))
            })
            .map(|k| vec![k / n, k % n])
        };
        rep.record("delta_r_multiplicative", mult);
        let one_r = self.base.unit().to_vec();
        let character = if self.eps_r(self.one()) != one_r {
            Some(vec![])
        } else {
            first_failure(n * n, |k| {
                let (i, j) = (k / n, k % n);
                let (ei, ej) = (self.e(i), self.e(j));
                let lhs = self.eps_r(&self.mul(&ei, &ej));
                let e = self.eps_r(&ei);
                lhs != self.eps_r(&self.mul(&self.s_r(&e), &ej)) || lhs != self.eps_r(&self.mul(&self.t_r(&e), &ej))
            })
            .map(|k| vec![k / n, k % n])
        };
        rep.record("eps_r_character", character);
        rep
    }

    // ---- Hopf algebroid ----------------------------------------------------

    /// The four axioms relating the two bialgebroids and the antipode, plus the
    /// derived identities for `S⁻¹`.
    pub fn check_hopf_algebroid(&self) -> CheckReport {
        let (n, rb) = (self.dim(), self.base_dim());
        let f = self.field();
        let mut rep = CheckReport::new();
        let compat = [
            (&self.s_l, &self.eps_l, &self.t_r, &self.t_r),
            (&self.s_r, &self.eps_r, &self.t_l, &self.t_l),
            (&self.t_l, &self.eps_l, &self.s_r, &self.s_r),
            (&self.t_r, &self.eps_r, &self.s_l, &self.s_l),
        ]
        .iter()
        .position(|(a, e, b, target)| a.mul(e).mul(b) != **target);
        rep.record("source_target_compatibility", compat.map(|k| vec![k]));

        let rel_lr = self.relation_space(&[Base::Left, Base::Right]);
        let rel_rl = self.relation_space(&[Base::Right, Base::Left]);
        let mixed = first_failure(2 * n, |k| {
            let (i, which) = (k / 2, k % 2);
            let (dl, dr) = (&self.delta_l[i], &self.delta_r[i]);
            if which == 0 {
                let lhs = dr.apply_at(0, &self.delta_l);
                let rhs = dl.apply_at(1, &self.delta_r);
                !rel_lr.contains(&self.dense(&lhs.sub(&rhs)))
            } else {
                let lhs = dl.apply_at(0, &self.delta_r);
                let rhs = dr.apply_at(1, &self.delta_l);
                !rel_rl.contains(&self.dense(&lhs.sub(&rhs)))
            }
        });
        rep.record("mixed_coassociativity", mixed.map(|k| vec![k / 2, k % 2]));

        let twist = first_failure(rb * n * rb, |k| {
            let (a, i, b) = (k / (n * rb), (k / rb) % n, k % rb);
            let (ra, rbv) = (self.r(a), self.r(b));
            let lhs = self.s(&self.mul_all(&[&self.t_l(&ra), &self.e(i), &self.t_r(&rbv)]));
            let rhs = self.mul_all(&[&self.s_r(&rbv), &self.s(&self.e(i)), &self.s_l(&ra)]);
            lhs != rhs
        });
        rep.record("antipode_twist", twist.map(|k| vec![k / (n * rb), (k / rb) % n, k % rb]));
        let conv = first_failure(2 * n, |k| {
            let (i, which) = (k / 2, k % 2);
            let ei = self.e(i);
            if which == 0 {
                self.contract(&self.delta_l[i], |x| self.s(x), |y| y.to_vec()) != self.s_r(&self.eps_r(&ei))
            } else {
                self.contract(&self.delta_r[i], |x| x.to_vec(), |y| self.s(y)) != self.s_l(&self.eps_l(&ei))
            }
        });
        rep.record("antipode_convolution", conv.map(|k| vec![k / 2, k % 2]));
        let id = Matrix::identity(f, n);
        let inv_ok = self.antipode.mul(&self.antipode_inv) == id && self.antipode_inv.mul(&self.antipode) == id;
        rep.record("antipode_invertible", (!inv_ok).then(Vec::new));
        let anti = if self.s(self.one()) != self.one() {
            Some(vec![])
        } else {
            first_failure(n * n, |k| {
                let (i, j) = (k / n, k % n);
                self.s(&self.mul(&self.e(i), &self.e(j))) != self.mul(&self.s(&self.e(j)), &self.s(&self.e(i)))
            })
            .map(|k| vec![k / n, k % n])
        };
        rep.record("antipode_antimultiplicative", anti);

        let inv_conv = first_failure(2 * n, |k| {
            let (i, which) = (k / 2, k % 2);
            let ei = self.e(i);
            let mut acc = self.alg.zero_vector();
            let d = if which == 0 { &self.delta_l[i] } else { &self.delta_r[i] };
            for (c, idx) in d.legs() {
                let (x, y) = (self.e(idx[0]), self.e(idx[1]));
                let p = if which == 0 {
                    self.mul(&self.s_inv(&y), &x)
                } else {
                    self.mul(&y, &self.s_inv(&x))
                };
                for (s, x) in acc.iter_mut().zip(&p) {
                    s.add_mul(&c, x);
                }
            }
            let target = if which == 0 {
                self.t_r(&self.eps_r(&ei))
            } else {
                self.t_l(&self.eps_l(&ei))
            };
            acc != target
        });
        rep.record("inverse_antipode_convolution", inv_conv.map(|k| vec![k / 2, k % 2]));
        let st = first_failure(2 * rb, |k| {
            let (r, which) = (k / 2, k % 2);
            let er = self.r(r);
            if which == 0 {
                let tl = self.t_l(&er);
                self.t_r(&self.eps_r(&tl)) != self.s_inv(&tl)
            } else {
                let sl = self.s_l(&er);
                self.s_r(&self.eps_r(&sl)) != self.s(&sl)
            }
        });
        rep.record("source_target_antipode", st.map(|k| vec![k / 2, k % 2]));
        let inv_twist = first_failure(rb * n * rb, |k| {
            let (a, i, b) = (k / (n * rb), (k / rb) % n, k % rb);
            let (ra, rbv) = (self.r(a), self.r(b));
            let lhs = self.mul_all(&[&self.t_r(&rbv), &self.s_inv(&self.e(i)), &self.t_l(&ra)]);
            let rhs = self.s_inv(&self.mul_all(&[&self.s_l(&ra), &self.e(i), &self.s_r(&rbv)]));
            lhs != rhs
        });
        rep.record("inverse_antipode_twist", inv_twist.map(|k| vec![k / (n * rb), (k / rb) % n, k % rb]));
        rep
    }

    pub fn check_all(&self) -> CheckReport {
        let mut r = self.check_left_bialgebroid();
        let right = self.check_right_bialgebroid();
        for c in right.checks {
            if r.get(&c.id).is_none() {
                r.checks.push(c);
            }
        }
        r.extend(self.check_hopf_algebroid());
        r
    }

    /// First failure of `φ(ab) = φ(a)φ(b)` where the left side uses `prod`
    /// for the base product, then unitality.
    fn map_witness<P>(&self, rb: usize, map: &Matrix, prod: P) -> Option<Vec<usize>>
    where
        P: Fn(&[Scalar], &[Scalar]) -> Vec<Scalar> + Sync,
    {
        if map.mul_vec(self.base.unit()) != self.one() {
            return Some(vec![]);
        }
        first_failure(rb * rb, |k| {
            let (a, b) = (self.r(k / rb), self.r(k % rb));
            map.mul_vec(&prod(&a, &b)) != self.mul(&map.mul_vec(&a), &map.mul_vec(&b))
        })
        .map(|k| vec![k / rb, k % rb])
    }

    fn commute_witness(&self, a: &Matrix, b: &Matrix) -> Option<Vec<usize>> {
        let rb = self.base_dim();
        first_failure(rb * rb, |k| {
            let (x, y) = (a.col(k / rb), b.col(k % rb));
            self.mul(&x, &y) != self.mul(&y, &x)
        })
        .map(|k| vec![k / rb, k % rb])
    }

    // ---- modules -----------------------------------------------------------

    pub fn module(&self, dim: usize, action: Vec<Matrix>) -> Result<Module> {
        if action.len() != self.dim() {
            return Err(mismatch("action list", self.dim(), action.len()));
        }
        Module::new(self.field(), dim, action, self.fingerprint)
    }

    pub fn regular_module(&self) -> Module {
        let action = (0..self.dim()).map(|i| self.alg.left_mult(&self.e(i))).collect();
        self.module(self.dim(), action).unwrap()
    }

    /// The monoidal unit `R` with `h · r = ε_l(h s_l(r))`.
    pub fn base_module(&self) -> Module {
        let f = self.field();
        let rb = self.base_dim();
        let action = (0..self.dim())
            .map(|i| {
                let cols: Vec<Vec<Scalar>> = (0..rb)
                    .map(|r| self.eps_l(&self.mul(&self.e(i), &self.s_l(&self.r(r)))))
                    .collect();
                Matrix::from_cols(f, rb, &cols).unwrap()
            })
            .collect();
        self.module(rb, action).unwrap()
    }

    fn own(&self, m: &Module) -> Result<()> {
        if m.parent() != self.fingerprint {
            return Err(Error::ParentMismatch);
        }
        Ok(())
    }

    /// Relations `t_l(r)m ⊗ n − m ⊗ s_l(r)n` in `M ⊗_k N`.
    pub fn module_relations(&self, m: &Module, n: &Module) -> Result<Subspace> {
        self.own(m)?;
        self.own(n)?;
        let gens: Vec<Matrix> = (0..self.base_dim())
            .map(|r| {
                let er = self.r(r);
                relation_operator(&m.act(&self.t_l(&er)), &n.act(&self.s_l(&er)))
            })
            .collect();
        Ok(column_span(self.field(), m.dim() * n.dim(), &gens))
    }

    /// `M ⊗_{R_l} N` with `b·(m ⊗ n) = b_1 m ⊗ b_2 n`, plus its relation space.
    pub fn tensor_over_base(&self, m: &Module, n: &Module) -> Result<(TensorObject, Subspace)> {
        let rel = self.module_relations(m, n)?;
        let q = quotient_section(m.dim() * n.dim(), &rel)?;
        let mut action = Vec::with_capacity(self.dim());
        for (i, d) in self.delta_l.iter().enumerate() {
            let amb = act_tensor(d, &[m, n]);
            for k in 0..rel.dim() {
                if !rel.contains(&amb.mul_vec(&rel.vector(k))) {
                    return Err(Error::Invalid(format!(
                        "tensor action not well defined: basis element {i} moves relation {k}"
                    )));
                }
            }
            action.push(q.projector.mul(&amb).mul(&q.lift));
        }
        let module = self.module(q.projector.rows(), action)?;
        Ok((
            TensorObject {
                module,
                projector: q.projector,
                lift: q.lift,
            },
            rel,
        ))
    }

    pub fn tensor(&self, m: &Module, n: &Module) -> Result<TensorObject> {
        Ok(self.tensor_over_base(m, n)?.0)
    }

    /// Right `R_l`-linear maps `f(t_l(r)v) = t_l(r)f(v)`, flattened `dM x dV`.
    pub fn left_linear_maps(&self, v: &Module, m: &Module) -> Result<Subspace> {
        self.linear_maps(v, m, &self.t_l)
    }

    /// Left `R_l`-linear maps `f(s_l(r)v) = s_l(r)f(v)`.
    pub fn right_linear_maps(&self, v: &Module, m: &Module) -> Result<Subspace> {
        self.linear_maps(v, m, &self.s_l)
    }

    /// Maps commuting with the images of `map: R → H`.
    pub fn linear_maps(&self, v: &Module, m: &Module, map: &Matrix) -> Result<Subspace> {
        self.own(v)?;
        self.own(m)?;
        let cons: Vec<(Matrix, Matrix)> = (0..self.base_dim())
            .map(|r| {
                let x = map.col(r);
                (v.act(&x), m.act(&x))
            })
            .collect();
        intertwiner_space(self.field(), m.dim(), v.dim(), &cons)
    }

    fn s_actions(&self, v: &Module, inverse: bool) -> Vec<Matrix> {
        let s = if inverse { &self.antipode_inv } else { &self.antipode };
        (0..self.dim()).map(|i| v.act(&s.col(i))).collect()
    }

    fn restricted_hom(&self, carrier: Subspace, ambient: Vec<Matrix>, dv: usize, dm: usize) -> Result<HomObject> {
        let emb = carrier.embedding();
        let coords = carrier.coordinate_map();
        let mut action = Vec::with_capacity(ambient.len());
        for (i, a) in ambient.iter().enumerate() {
            let img = a.mul(&emb);
            for c in 0..img.cols() {
                if !carrier.contains(&img.col(c)) {
                    return Err(Error::Invalid(format!(
                        "hom action leaves the carrier on basis element {i}"
                    )));
                }
            }
            action.push(coords.mul(&img));
        }
        let module = self.module(carrier.dim(), action)?;
        Ok(HomObject {
            module,
            embedding: emb,
            coords,
            source_dim: dv,
            target_dim: dm,
        })
    }

    /// `Hom^l(V, M) = Hom(V, M)_{R_l}` with `h·φ = h¹ φ(S(h²)−)` through `Δ_r`.
    pub fn left_hom(&self, v: &Module, m: &Module) -> Result<HomObject> {
        let carrier = self.left_linear_maps(v, m)?;
        let sv = self.s_actions(v, false);
        let d = v.dim() * m.dim();
        let f = self.field();
        let ambient = self
            .delta_r
            .iter()
            .map(|delta| {
                let mut acc = Matrix::zeros(f, d, d);
                for (c, idx) in delta.legs() {
                    acc.add_scaled(&c, &sandwich(m.basis_action(idx[0]), &sv[idx[1]]));
                }
                acc
            })
            .collect();
        self.restricted_hom(carrier, ambient, v.dim(), m.dim())
    }

    /// `Hom^r(V, M) = Hom_{R_l}(V, M)` with `h·φ = h² φ(S⁻¹(h¹)−)` through `Δ_r`.
    pub fn right_hom(&self, v: &Module, m: &Module) -> Result<HomObject> {
        let carrier = self.right_linear_maps(v, m)?;
        let sv = self.s_actions(v, true);
        let d = v.dim() * m.dim();
        let f = self.field();
        let ambient = self
            .delta_r
            .iter()
            .map(|delta| {
                let mut acc = Matrix::zeros(f, d, d);
                for (c, idx) in delta.legs() {
                    acc.add_scaled(&c, &sandwich(m.basis_action(idx[1]), &sv[idx[0]]));
                }
                acc
            })
            .collect();
        self.restricted_hom(carrier, ambient, v.dim(), m.dim())
    }

    /// `ev^l: Hom^l(V,M) ⊗_{R_l} V → M`, `φ ⊗ v ↦ φ(v)`.
    pub fn eval_left(&self, v: &Module, m: &Module) -> Result<Matrix> {
        let hom = self.left_hom(v, m)?;
        let t = self.tensor(&hom.module, v)?;
        let f = self.field();
        let mut ev = Matrix::zeros(f, m.dim(), m.dim() * v.dim() * v.dim());
        let id_m = Matrix::identity(f, m.dim());
        let id_v = Matrix::identity(f, v.dim());
        add_eval(&mut ev, &f.one(), &id_m, &id_v, v.dim(), m.dim(), false);
        Ok(ev.mul(&hom.embedding.kron(&id_v)).mul(&t.lift))
    }

    /// `ev^r: V ⊗_{R_l} Hom^r(V,M) → M`, `v ⊗ φ ↦ φ(v)`.
    pub fn eval_right(&self, v: &Module, m: &Module) -> Result<Matrix> {
        let hom = self.right_hom(v, m)?;
        let t = self.tensor(v, &hom.module)?;
        let f = self.field();
        let mut ev = Matrix::zeros(f, m.dim(), m.dim() * v.dim() * v.dim());
        let id_m = Matrix::identity(f, m.dim());
        let id_v = Matrix::identity(f, v.dim());
        add_eval(&mut ev, &f.one(), &id_m, &id_v, v.dim(), m.dim(), true);
        Ok(ev.mul(&id_v.kron(&hom.embedding)).mul(&t.lift))
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

    fn into_hom(&self, hom: &HomObject, c: &Matrix) -> Result<Matrix> {
        let sub = Subspace::from_matrix_rows(hom.embedding.transpose());
        for j in 0..c.cols() {
            if !sub.contains(&c.col(j)) {
                return Err(Error::Invalid("curried map leaves the hom carrier".into()));
            }
        }
        Ok(hom.coords.mul(c))
    }

    /// `ζ^l(f) = (m ↦ f(m ⊗ −))`.
    pub fn zeta_l(&self, m: &Module, n: &Module, l: &Module, f: &Matrix) -> Result<Matrix> {
        let mn = self.tensor(m, n)?;
        self.require_intertwiner(&mn.module, l, f, "zeta_l input")?;
        let fp = f.mul(&mn.projector);
        let c = curry_left(&fp, l.dim(), m.dim(), n.dim());
        self.into_hom(&self.left_hom(n, l)?, &c)
    }

    /// `η^l(g) = ev^l ∘ (g ⊗ id)`.
    pub fn eta_l(&self, m: &Module, n: &Module, l: &Module, g: &Matrix) -> Result<Matrix> {
        let hom = self.left_hom(n, l)?;
        self.require_intertwiner(m, &hom.module, g, "eta_l input")?;
        let src = self.tensor(m, n)?;
        let dst = self.tensor(&hom.module, n)?;
        let gid = dst
            .projector
            .mul(&g.kron(&Matrix::identity(self.field(), n.dim())))
            .mul(&src.lift);
        Ok(self.eval_left(n, l)?.mul(&gid))
    }

    /// `ζ^r(f) = (m ↦ f(− ⊗ m))`.
    pub fn zeta_r(&self, m: &Module, n: &Module, l: &Module, f: &Matrix) -> Result<Matrix> {
        let nm = self.tensor(n, m)?;
        self.require_intertwiner(&nm.module, l, f, "zeta_r input")?;
        let fp = f.mul(&nm.projector);
        let c = curry_right(&fp, l.dim(), n.dim(), m.dim());
        self.into_hom(&self.right_hom(n, l)?, &c)
    }

    /// `η^r(g) = ev^r ∘ (id ⊗ g)`.
    pub fn eta_r(&self, m: &Module, n: &Module, l: &Module, g: &Matrix) -> Result<Matrix> {
        let hom = self.right_hom(n, l)?;
        self.require_intertwiner(m, &hom.module, g, "eta_r input")?;
        let src = self.tensor(n, m)?;
        let dst = self.tensor(n, &hom.module)?;
        let idg = dst
            .projector
            .mul(&Matrix::identity(self.field(), n.dim()).kron(g))
            .mul(&src.lift);
        Ok(self.eval_right(n, l)?.mul(&idg))
    }

    /// `Hom_H(V, W)` flattened row-major `dim W x dim V`.
    pub fn hom_module_morphisms(&self, v: &Module, w: &Module) -> Result<Subspace> {
        self.own(v)?;
        self.own(w)?;
        let cons: Vec<(Matrix, Matrix)> = (0..self.dim())
            .map(|i| (v.basis_action(i).clone(), w.basis_action(i).clone()))
            .collect();
        intertwiner_space(self.field(), w.dim(), v.dim(), &cons)
    }

    /// `(U ⊗ V) ⊗ W → U ⊗ (V ⊗ W)` on quotient coordinates.
    pub fn associator(&self, u: &Module, v: &Module, w: &Module) -> Result<Matrix> {
        let f = self.field();
        let uv = self.tensor(u, v)?;
        let vw = self.tensor(v, w)?;
        let src = self.tensor(&uv.module, w)?;
        let dst = self.tensor(u, &vw.module)?;
        Ok(dst
            .projector
            .mul(&Matrix::identity(f, u.dim()).kron(&vw.projector))
            .mul(&uv.lift.kron(&Matrix::identity(f, w.dim())))
            .mul(&src.lift))
    }

    /// `R ⊗ V → V`, `r ⊗ v ↦ s_l(r)v`.
    pub fn left_unitor(&self, v: &Module) -> Result<Matrix> {
        let unit = self.base_module();
        let t = self.tensor(&unit, v)?;
        let (rb, dv) = (self.base_dim(), v.dim());
        let mut amb = Matrix::zeros(self.field(), dv, rb * dv);
        for r in 0..rb {
            let a = v.act(&self.s_l(&self.r(r)));
            for x in 0..dv {
                for y in 0..dv {
                    amb.set(y, r * dv + x, a.get(y, x).clone());
                }
            }
        }
        Ok(amb.mul(&t.lift))
    }

    /// `V ⊗ R → V`, `v ⊗ r ↦ t_l(r)v`.
    pub fn right_unitor(&self, v: &Module) -> Result<Matrix> {
        let unit = self.base_module();
        let t = self.tensor(v, &unit)?;
        let (rb, dv) = (self.base_dim(), v.dim());
        let mut amb = Matrix::zeros(self.field(), dv, dv * rb);
        for r in 0..rb {
            let a = v.act(&self.t_l(&self.r(r)));
            for x in 0..dv {
                for y in 0..dv {
                    amb.set(y, x * rb + r, a.get(y, x).clone());
                }
            }
        }
        Ok(amb.mul(&t.lift))
    }

    /// The three associativity isomorphisms of the hexagon on carrier
    /// coordinates, in the order of [`QuasiHopf::hexagon_isos`]; here all of
    /// them only rebracket.
    pub fn hexagon_isos(&self, v: &Module, w: &Module, m: &Module) -> Result<[Matrix; 3]> {
        let f = self.field();
        let (dv, dw, dm) = (v.dim(), w.dim(), m.dim());
        let perm = swap_inner_layout(f, dm, dw, dv);
        let vw = self.tensor(v, w)?;
        let nested = |outer: &HomObject, inner: &HomObject, d: usize| -> Matrix {
            inner.embedding.kron(&Matrix::identity(f, d)).mul(&outer.embedding)
        };
        let left_inverse = |g: &Matrix| -> Result<Matrix> {
            g.left_inverse()
                .ok_or_else(|| Error::Invalid("nested hom embedding is not injective".into()))
        };

        let k1 = self.left_hom(w, m)?;
        let src1 = self.left_hom(v, &k1.module)?;
        let tgt1 = self.left_hom(&vw.module, m)?;
        let pre = Matrix::identity(f, dm).kron(&vw.lift.transpose());
        let iso1 = tgt1.coords.mul(&pre).mul(&perm).mul(&nested(&src1, &k1, dv));

        let k2 = self.right_hom(w, m)?;
        let src2 = self.left_hom(v, &k2.module)?;
        let k2t = self.left_hom(v, m)?;
        let tgt2 = self.right_hom(w, &k2t.module)?;
        let iso2 = left_inverse(&nested(&tgt2, &k2t, dw))?
            .mul(&perm)
            .mul(&nested(&src2, &k2, dv));

        let src3 = self.right_hom(&vw.module, m)?;
        let k3 = self.right_hom(v, m)?;
        let tgt3 = self.right_hom(w, &k3.module)?;
        let post = Matrix::identity(f, dm).kron(&vw.projector.transpose());
        let iso3 = left_inverse(&nested(&tgt3, &k3, dw))?
            .mul(&post)
            .mul(&src3.embedding);
        Ok([iso1, iso2, iso3])
    }

    // ---- derived checks on modules -------------------------------------------

    /// Right `R_l`-linearity agrees with left `R_r`-linearity (through `s_r`),
    /// and left `R_l`-linearity with right `R_r`-linearity (through `t_r`).
    pub fn linearity_equivalence(&self, v: &Module, m: &Module) -> Result<bool> {
        let a = self.linear_maps(v, m, &self.t_l)? == self.linear_maps(v, m, &self.s_r)?;
        let b = self.linear_maps(v, m, &self.s_l)? == self.linear_maps(v, m, &self.t_r)?;
        Ok(a && b)
    }

    /// The base actions on the internal homs: on `Hom^l`,
    /// `t_l(r)·φ = φ(s_l(r)−)` and `s_l(r)·φ = s_l(r)φ(−)`; on `Hom^r`,
    /// `s_l(r)·ψ = ψ(t_l(r)−)` and `t_l(r)·ψ = t_l(r)ψ(−)`.
    pub fn check_hom_base_actions(&self, v: &Module, m: &Module) -> Result<CheckReport> {
        let f = self.field();
        let (iv, im) = (Matrix::identity(f, v.dim()), Matrix::identity(f, m.dim()));
        let mut rep = CheckReport::new();
        let hl = self.left_hom(v, m)?;
        let hr = self.right_hom(v, m)?;
        let on = |hom: &HomObject, h: &[Scalar], amb: Matrix| -> bool {
            hom.module.act(h) == hom.coords.mul(&amb).mul(&hom.embedding)
        };
        let cases: [(&str, &HomObject, bool, bool); 4] = [
            ("hom_l_t_l", &hl, true, true),
            ("hom_l_s_l", &hl, false, false),
            ("hom_r_s_l", &hr, false, true),
            ("hom_r_t_l", &hr, true, false),
        ];
        for (id, hom, acting_t, precompose) in cases {
            let fail = (0..self.base_dim()).find(|&r| {
                let er = self.r(r);
                let h = if acting_t { self.t_l(&er) } else { self.s_l(&er) };
                let amb = if precompose {
                    let x = if acting_t { self.s_l(&er) } else { self.t_l(&er) };
                    sandwich(&im, &v.act(&x))
                } else {
                    sandwich(&m.act(&h), &iv)
                };
                !on(hom, &h, amb)
            });
            rep.record(id, fail.map(|r| vec![r]));
        }
        Ok(rep)
    }

    /// A copy with each coproduct lift shifted by relation elements;
    /// `coeff(i, k)` is the multiple of the `k`-th relation basis vector added
    /// to the lift of `e_i`.
    pub fn perturb_lifts(&self, coeff: &dyn Fn(usize, usize) -> i64) -> Result<HopfAlgebroid> {
        let f = self.field();
        let mut data = self.data.clone();
        for (side, lifts) in [(Base::Left, &mut data.delta_l), (Base::Right, &mut data.delta_r)] {
            let rel = self.relation_space(&[side]);
            for (i, lift) in lifts.iter_mut().enumerate() {
                for k in 0..rel.dim() {
                    let c = f.from_i64(coeff(i, k));
                    if c.is_zero() {
                        continue;
                    }
                    for (x, y) in lift.iter_mut().zip(rel.vector(k)) {
                        x.add_mul(&c, &y);
                    }
                }
            }
        }
        HopfAlgebroid::new(data)
    }

    /// The same module structure viewed over a perturbed copy.
    pub fn adopt(&self, m: &Module) -> Result<Module> {
        self.module(m.dim(), m.actions().to_vec())
    }
}

/// `A ⊗ I − I ⊗ B`: its columns span the relations `Ax ⊗ y − x ⊗ By`.
fn relation_operator(a: &Matrix, b: &Matrix) -> Matrix {
    let f = a.field();
    a.kron(&Matrix::identity(f, b.rows()))
        .sub(&Matrix::identity(f, a.rows()).kron(b))
}

fn column_span(field: Field, ambient: usize, mats: &[Matrix]) -> Subspace {
    let mut rows = Vec::new();
    for m in mats {
        for c in 0..m.cols() {
            let col = m.col(c);
            if col.iter().any(|s| !s.is_zero()) {
                rows.push(col);
            }
        }
    }
    if rows.is_empty() {
        return Subspace::zero(field, ambient);
    }
    Subspace::from_matrix_rows(Matrix::from_rows(field, &rows).unwrap())
}

// ---- builders ---------------------------------------------------------------

/// `k[x]/(x^k)` with basis `1, x, …, x^{k-1}`.
pub fn truncated_polynomial(field: Field, k: usize) -> Result<Algebra> {
    if k == 0 {
        return Err(Error::Invalid("truncated polynomial ring needs k >= 1".into()));
    }
    let mut unit = vec![field.zero(); k];
    unit[0] = field.one();
    Algebra::from_fn(field, k, unit, |i, j| {
        let mut v = vec![field.zero(); k];
        if i + j < k {
            v[i + j] = field.one();
        }
        v
    })
}

/// The enveloping algebroid `A ⊗ A^op` over `A`, basis `a ⊗ b` at `a·dim A + b`:
/// `s_l(a) = t_r(a) = a⊗1`, `t_l(b) = s_r(b) = 1⊗b`, `ε_l(a⊗b) = ab`,
/// `ε_r(a⊗b) = ba`, `Δ(a⊗b) = (a⊗1) ⊗ (1⊗b)`, `S(a⊗b) = b⊗a`.
pub fn enveloping_algebroid(a: &BaseRing) -> Result<HopfAlgebroid> {
    let f = a.field();
    let r = a.dim();
    let h = a.tensor(&a.opposite());
    let one = a.unit().to_vec();
    let basis: Vec<Vec<Scalar>> = (0..r).map(|i| a.basis_vector(i)).collect();
    let left: Vec<Vec<Scalar>> = basis.iter().map(|x| kron_vec(x, &one)).collect();
    let right: Vec<Vec<Scalar>> = basis.iter().map(|x| kron_vec(&one, x)).collect();
    let mut delta = Vec::with_capacity(r * r);
    let mut eps_l = Vec::with_capacity(r * r);
    let mut eps_r = Vec::with_capacity(r * r);
    let mut antipode = Vec::with_capacity(r * r);
    for i in 0..r {
        for j in 0..r {
            delta.push(kron_vec(&left[i], &right[j]));
            eps_l.push(a.mul(&basis[i], &basis[j]));
            eps_r.push(a.mul(&basis[j], &basis[i]));
            antipode.push(kron_vec(&basis[j], &basis[i]));
        }
    }
    HopfAlgebroid::new(HopfAlgebroidData {
        field: f,
        base_dim: r,
        base_mult: a.mult().to_vec(),
        base_unit: one,
        dim: r * r,
        mult: h.mult().to_vec(),
        unit: h.unit().to_vec(),
        s_l: left.clone(),
        t_l: right.clone(),
        s_r: right,
        t_r: left,
        delta_l: delta.clone(),
        delta_r: delta,
        eps_l,
        eps_r,
        antipode: antipode.clone(),
        antipode_inv: antipode,
    })
}

/// A Hopf algebra as an algebroid over `R = k`.
pub fn algebroid_from_hopf(h: &QuasiHopf) -> Result<HopfAlgebroid> {
    if !h.is_hopf() {
        return Err(Error::Precondition(
            "algebroid_from_hopf needs trivial Φ, α and β".into(),
        ));
    }
    let f = h.field();
    let n = h.dim();
    let d = h.data();
    let unit = d.unit.clone();
    let counit: Vec<Vec<Scalar>> = d.counit.iter().map(|c| vec![c.clone()]).collect();
    HopfAlgebroid::new(HopfAlgebroidData {
        field: f,
        base_dim: 1,
        base_mult: vec![f.one()],
        base_unit: vec![f.one()],
        dim: n,
        mult: d.mult.clone(),
        unit: unit.clone(),
        s_l: vec![unit.clone()],
        t_l: vec![unit.clone()],
        s_r: vec![unit.clone()],
        t_r: vec![unit],
        delta_l: d.comult.clone(),
        delta_r: d.comult.clone(),
        eps_l: counit.clone(),
        eps_r: counit,
        antipode: d.antipode.clone(),
        antipode_inv: d.antipode_inv.clone(),
    })
}
