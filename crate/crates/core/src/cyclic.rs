//! The cocyclic module `C^n = Hom_H(A^{⊗(n+1)}, M)` of an algebra object `A`
//! with coefficients in a stable central element `M`, and its Hochschild and
//! cyclic cohomology.
//!
//! Tensor powers are bracketed to the left, `L_{k+1} = L_k ⊗ A`. Conventions:
//!
//! * `δ_i` (`0 ≤ i ≤ n`) precomposes with the product of factors `i, i+1`;
//! * `δ_{n+1} := t_{n+1} δ_0`;
//! * `σ_j` precomposes with the unit inserted after factor `j`;
//! * `t_n(f) = ι_{A, L_n}(f ∘ r_n)`, `r_n: A ⊗ L_n → L_{n+1}` the rebracketing,
//!   so that `t f(a_0, …, a_n) = f(a_n, a_0, …, a_{n-1})` when Φ is trivial.
//!
//! Cyclic cohomology is the cohomology of the first-quadrant bicomplex with
//! columns `b, −b′` and rows `1 − λ, N`, where `λ = (−1)^n t_n` and
//! `N = Σ λ^i`.

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Module};
use crate::category::{tensor_morphism, Biclosed, TensorObject};
use crate::center::CenterElement;
use crate::error::{mismatch, Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{Matrix, Subspace};
use crate::report::CheckReport;

/// Default cap on `dim M · (dim A)^{n+1}`.
pub const DEFAULT_MAX_DIM: usize = 4096;

/// A unital associative algebra object in the module category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleAlgebra {
    pub carrier: Module,
    /// `A ⊗ A → A` in tensor-object coordinates.
    pub mult: Matrix,
    /// `1 → A` from the unit object.
    pub unit: Matrix,
}

impl ModuleAlgebra {
    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }
}

/// `A = 1` with the unitor as product.
pub fn unit_algebra(cat: &dyn Biclosed) -> Result<ModuleAlgebra> {
    let unit = cat.unit_object();
    let mult = cat.left_unitor(&unit)?;
    let id = Matrix::identity(cat.field(), unit.dim());
    Ok(ModuleAlgebra {
        carrier: unit,
        mult,
        unit: id,
    })
}

/// An ordinary algebra on which `H` acts through the counit `ε(h)`.
/// `counit[i] = ε(e_i)`.
pub fn trivial_action_algebra(cat: &dyn Biclosed, alg: &Algebra, counit: &[Scalar]) -> Result<ModuleAlgebra> {
    let f = cat.field();
    let d = alg.dim();
    if cat.unit_object().dim() != 1 {
        return Err(Error::Precondition("trivial actions need the ground field as unit object".into()));
    }
    let action = counit.iter().map(|e| Matrix::identity(f, d).scale(e)).collect();
    let carrier = cat.module(d, action)?;
    let mut mult = Matrix::zeros(f, d, d * d);
    for i in 0..d {
        for j in 0..d {
            for (k, c) in alg.basis_product(i, j) {
                mult.set(*k, i * d + j, c.clone());
            }
        }
    }
    let unit = Matrix::from_cols(f, d, &[alg.unit().to_vec()])?;
    Ok(ModuleAlgebra { carrier, mult, unit })
}

/// Functions `k^G` on a finite group, with `(g·φ)(x) = φ(xg)` over `kG`.
/// The category must be the group algebra of the same Cayley table.
pub fn group_function_algebra(cat: &dyn Biclosed, table: &[Vec<usize>]) -> Result<ModuleAlgebra> {
    let f = cat.field();
    let n = table.len();
    if cat.acting_dim() != n {
        return Err(mismatch("group order", cat.acting_dim(), n));
    }
    let carrier = cat.module(n, function_action(f, table))?;
    let mut mult = Matrix::zeros(f, n, n * n);
    for x in 0..n {
        mult.set(x, x * n + x, f.one());
    }
    let unit = Matrix::from_cols(f, n, &[vec![f.one(); n]])?;
    Ok(ModuleAlgebra { carrier, mult, unit })
}

fn function_action(f: Field, table: &[Vec<usize>]) -> Vec<Matrix> {
    let n = table.len();
    (0..n)
        .map(|g| {
            let mut m = Matrix::zeros(f, n, n);
            for y in 0..n {
                // g·δ_{yg} = δ_y
                m.set(y, table[y][g], f.one());
            }
            m
        })
        .collect()
}

/// Morphism property, unitality and associativity through the associator.
pub fn check_algebra_object(cat: &dyn Biclosed, a: &ModuleAlgebra) -> Result<CheckReport> {
    let f = cat.field();
    let m = &a.carrier;
    let unit = cat.unit_object();
    let aa = cat.tensor(m, m)?;
    let mut report = CheckReport::new();
    report.record(
        "mult_morphism",
        cat.intertwiner_witness(&aa.module, m, &a.mult).map(|i| vec![i]),
    );
    report.record("unit_morphism", cat.intertwiner_witness(&unit, m, &a.unit).map(|i| vec![i]));

    let id = Matrix::identity(f, m.dim());
    let left_src = cat.tensor(&aa.module, m)?;
    let right_src = cat.tensor(m, &aa.module)?;
    let lhs = a.mult.mul(&tensor_morphism(&left_src, &aa, &a.mult, &id));
    let rhs = a
        .mult
        .mul(&tensor_morphism(&right_src, &aa, &id, &a.mult))
        .mul(&cat.associator(m, m, m)?);
    report.record("associativity", first_entry(&lhs, &rhs));

    let lu = a.mult.mul(&tensor_morphism(&cat.tensor(&unit, m)?, &aa, &a.unit, &id));
    report.record("left_unit", first_entry(&lu, &cat.left_unitor(m)?));
    let ru = a.mult.mul(&tensor_morphism(&cat.tensor(m, &unit)?, &aa, &id, &a.unit));
    report.record("right_unit", first_entry(&ru, &cat.right_unitor(m)?));
    Ok(report)
}

fn first_entry(lhs: &Matrix, rhs: &Matrix) -> Option<Vec<usize>> {
    if lhs == rhs {
        return None;
    }
    if lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols() {
        return Some(vec![]);
    }
    let c = lhs.cols();
    (0..lhs.rows() * c)
        .find(|&k| lhs.get(k / c, k % c) != rhs.get(k / c, k % c))
        .map(|k| vec![k / c, k % c])
}

/// Left-nested tensor powers `L_1 = A`, `L_{k+1} = L_k ⊗ A` and the structure
/// maps between them.
pub struct TensorPowers<'a> {
    cat: &'a dyn Biclosed,
    a: &'a ModuleAlgebra,
    /// `levels[k] = L_k`, with `levels[0]` the unit object.
    levels: Vec<Module>,
}

impl<'a> TensorPowers<'a> {
    pub fn new(cat: &'a dyn Biclosed, a: &'a ModuleAlgebra, top: usize, extra_dim: usize, cap: usize) -> Result<Self> {
        let mut levels = vec![cat.unit_object(), a.carrier.clone()];
        for k in 1..top {
            let ambient = levels[k].dim() * a.dim() * extra_dim;
            if ambient > cap {
                return Err(Error::TooLarge { needed: ambient, cap });
            }
            let next = cat.tensor(&levels[k], &a.carrier)?.module;
            levels.push(next);
        }
        Ok(TensorPowers { cat, a, levels })
    }

    pub fn level(&self, k: usize) -> &Module {
        &self.levels[k]
    }

    fn step(&self, k: usize) -> Result<TensorObject> {
        self.cat.tensor(&self.levels[k], &self.a.carrier)
    }

    fn id(&self, k: usize) -> Matrix {
        Matrix::identity(self.cat.field(), self.levels[k].dim())
    }

    /// `L_{k+1} → L_k`, multiplying factors `i` and `i + 1`.
    pub fn mult_at(&self, k: usize, i: usize) -> Result<Matrix> {
        if i + 1 > k {
            return Err(Error::IndexOutOfRange { index: i, bound: k });
        }
        if k == 1 {
            return Ok(self.a.mult.clone());
        }
        if i + 1 < k {
            let inner = self.mult_at(k - 1, i)?;
            return Ok(tensor_morphism(&self.step(k)?, &self.step(k - 1)?, &inner, &self.id(1)));
        }
        let a = &self.a.carrier;
        let aa = self.cat.tensor(a, a)?;
        let src = self.cat.tensor(&self.levels[k - 1], &aa.module)?;
        let m = tensor_morphism(&src, &self.step(k - 1)?, &self.id(k - 1), &self.a.mult);
        Ok(m.mul(&self.cat.associator(&self.levels[k - 1], a, a)?))
    }

    /// `L_k → L_{k+1}`, inserting the unit after factor `j`.
    pub fn unit_at(&self, k: usize, j: usize) -> Result<Matrix> {
        if j + 1 > k {
            return Err(Error::IndexOutOfRange { index: j, bound: k });
        }
        if j + 1 < k {
            let inner = self.unit_at(k - 1, j)?;
            return Ok(tensor_morphism(&self.step(k - 1)?, &self.step(k)?, &inner, &self.id(1)));
        }
        let lk = &self.levels[k];
        let unit = &self.levels[0];
        let inv = self
            .cat
            .right_unitor(lk)?
            .inverse()
            .ok_or_else(|| Error::Invalid("right unitor is not invertible".into()))?;
        let src = self.cat.tensor(lk, unit)?;
        Ok(tensor_morphism(&src, &self.step(k)?, &self.id(k), &self.a.unit).mul(&inv))
    }

    /// `r_n: A ⊗ L_n → L_{n+1}`.
    pub fn rebracket(&self, n: usize) -> Result<Matrix> {
        let a = &self.a.carrier;
        if n == 1 {
            return Ok(Matrix::identity(self.cat.field(), self.levels[2].dim()));
        }
        let inv = self
            .cat
            .associator(a, &self.levels[n - 1], a)?
            .inverse()
            .ok_or_else(|| Error::Invalid("associator is not invertible".into()))?;
        let inner = self.rebracket(n - 1)?;
        let a_l = self.cat.tensor(a, &self.levels[n - 1])?;
        let src = self.cat.tensor(&a_l.module, a)?;
        Ok(tensor_morphism(&src, &self.step(n)?, &inner, &self.id(1)).mul(&inv))
    }
}

/// `A^{⊗n}` bracketed to the left.
pub fn tensor_power(cat: &dyn Biclosed, a: &ModuleAlgebra, n: usize) -> Result<Module> {
    if n == 0 {
        return Err(Error::Precondition("tensor power 0 is the unit object".into()));
    }
    Ok(TensorPowers::new(cat, a, n, 1, usize::MAX)?.levels[n].clone())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocyclicModule {
    pub n_max: usize,
    pub field: Field,
    /// `spaces[n]`: basis of `C^n` inside `Hom_k(L_{n+1}, M)`.
    pub spaces: Vec<Subspace>,
    /// `cofaces[n][i]: C^n → C^{n+1}`, `0 ≤ i ≤ n + 1`, for `n < n_max`.
    pub cofaces: Vec<Vec<Matrix>>,
    /// `codegeneracies[n][j]: C^{n+1} → C^n`, `0 ≤ j ≤ n`, for `n < n_max`.
    pub codegeneracies: Vec<Vec<Matrix>>,
    /// `cyclic[n] = t_n`.
    pub cyclic: Vec<Matrix>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Theory {
    Hochschild,
    Cyclic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyResult {
    pub theory: Theory,
    pub dims: Vec<usize>,
    pub field: Field,
}

/// `f ↦ f ∘ g` between morphism spaces in their canonical bases.
fn precompose_on(src: &Subspace, dst: &Subspace, dm: usize, g: &Matrix) -> Result<Matrix> {
    let f = src.field();
    let op = Matrix::identity(f, dm).kron(&g.transpose());
    let mut cols = Vec::with_capacity(src.dim());
    for k in 0..src.dim() {
        let v = op.mul_vec(&src.vector(k));
        let c = dst
            .coordinates(&v)
            .ok_or_else(|| Error::Invalid("precomposition leaves the morphism space".into()))?;
        cols.push(c);
    }
    Ok(from_cols(f, dst.dim(), src.dim(), cols))
}

fn from_cols(f: Field, rows: usize, cols: usize, data: Vec<Vec<Scalar>>) -> Matrix {
    if cols == 0 {
        return Matrix::zeros(f, rows, 0);
    }
    Matrix::from_cols(f, rows, &data).expect("column shape")
}

pub fn build_cocyclic(center: &CenterElement, a: &ModuleAlgebra, n_max: usize) -> Result<CocyclicModule> {
    build_cocyclic_capped(center, a, n_max, DEFAULT_MAX_DIM)
}

/// Materializes all operators up to `n_max` and verifies every cocyclic identity.
pub fn build_cocyclic_capped(
    center: &CenterElement,
    a: &ModuleAlgebra,
    n_max: usize,
    cap: usize,
) -> Result<CocyclicModule> {
    let cat = center.category();
    if n_max == 0 {
        return Err(Error::Precondition("n_max must be at least 1".into()));
    }
    if !check_algebra_object(cat, a)?.passed() {
        return Err(Error::Precondition("A is not an algebra object".into()));
    }
    if !center.check_stability_central()?.passed() {
        return Err(Error::Precondition("the coefficient is not stable".into()));
    }
    let m = center.module();
    let dm = m.dim();
    let f = cat.field();
    let powers = TensorPowers::new(cat, a, n_max + 2, dm, cap)?;

    let spaces: Vec<Subspace> = (0..=n_max)
        .map(|n| cat.morphisms(powers.level(n + 1), m))
        .collect::<Result<_>>()?;

    let mut cyclic = vec![Matrix::identity(f, spaces[0].dim())];
    for n in 1..=n_max {
        let a_ln = cat.tensor(&a.carrier, powers.level(n))?;
        let mid = cat.morphisms(&a_ln.module, m)?;
        let pre = precompose_on(&spaces[n], &mid, dm, &powers.rebracket(n)?)?;
        let iota = center.contratrace_iota(&a.carrier, powers.level(n))?;
        cyclic.push(iota.mul(&pre));
    }

    let mut cofaces = Vec::with_capacity(n_max);
    let mut codegeneracies = Vec::with_capacity(n_max);
    for n in 0..n_max {
        let mut faces = Vec::with_capacity(n + 2);
        for i in 0..=n {
            faces.push(precompose_on(&spaces[n], &spaces[n + 1], dm, &powers.mult_at(n + 1, i)?)?);
        }
        faces.push(cyclic[n + 1].mul(&faces[0]));
        cofaces.push(faces);
        let degs = (0..=n)
            .map(|j| precompose_on(&spaces[n + 1], &spaces[n], dm, &powers.unit_at(n + 1, j)?))
            .collect::<Result<Vec<_>>>()?;
        codegeneracies.push(degs);
    }

    let c = CocyclicModule {
        n_max,
        field: f,
        spaces,
        cofaces,
        codegeneracies,
        cyclic,
    };
    let report = c.verify();
    if let Some(bad) = report.checks.iter().find(|r| !r.passed) {
        let degree = bad.counterexample.as_ref().and_then(|w| w.first().copied()).unwrap_or(0);
        return Err(Error::IdentityFailure {
            relation: bad.id.clone(),
            degree,
        });
    }
    Ok(c)
}

impl CocyclicModule {
    pub fn dim(&self, n: usize) -> usize {
        self.spaces[n].dim()
    }

    fn d(&self, n: usize, i: usize) -> &Matrix {
        &self.cofaces[n][i]
    }
    fn s(&self, n: usize, j: usize) -> &Matrix {
        &self.codegeneracies[n][j]
    }
    fn t(&self, n: usize) -> &Matrix {
        &self.cyclic[n]
    }
    fn id(&self, n: usize) -> Matrix {
        Matrix::identity(self.field, self.dim(n))
    }

    /// Every cosimplicial and cocyclic identity available below `n_max`.
    /// Witnesses start with the degree.
    pub fn verify(&self) -> CheckReport {
        let nm = self.n_max;
        let mut report = CheckReport::new();
        let mut first = |id: &str, cases: Vec<(Vec<usize>, Matrix, Matrix)>| {
            let w = cases.into_iter().find(|(_, l, r)| l != r).map(|(w, _, _)| w);
            report.record(id, w);
        };

        let mut dd = Vec::new();
        for n in 0..nm.saturating_sub(1) {
            for j in 1..=n + 2 {
                for i in 0..j {
                    let l = self.d(n + 1, j).mul(self.d(n, i));
                    let r = self.d(n + 1, i).mul(self.d(n, j - 1));
                    dd.push((vec![n, i, j], l, r));
                }
            }
        }
        first("coface_coface", dd);

        let mut ss = Vec::new();
        for n in 0..nm.saturating_sub(1) {
            for j in 0..=n {
                for i in 0..=j {
                    let l = self.s(n, j).mul(self.s(n + 1, i));
                    let r = self.s(n, i).mul(self.s(n + 1, j + 1));
                    ss.push((vec![n, i, j], l, r));
                }
            }
        }
        first("codegeneracy_codegeneracy", ss);

        let mut sd = Vec::new();
        for n in 0..nm {
            for j in 0..=n {
                for i in 0..=n + 1 {
                    let l = self.s(n, j).mul(self.d(n, i));
                    let r = if i < j {
                        self.d(n - 1, i).mul(self.s(n - 1, j - 1))
                    } else if i == j || i == j + 1 {
                        self.id(n)
                    } else {
                        self.d(n - 1, i - 1).mul(self.s(n - 1, j))
                    };
                    sd.push((vec![n, i, j], l, r));
                }
            }
        }
        first("codegeneracy_coface", sd);

        let mut td = Vec::new();
        for n in 0..nm {
            for i in 0..=n + 1 {
                let l = self.t(n + 1).mul(self.d(n, i));
                let r = if i == 0 {
                    self.d(n, n + 1).clone()
                } else {
                    self.d(n, i - 1).mul(self.t(n))
                };
                td.push((vec![n, i], l, r));
            }
        }
        first("cyclic_coface", td);

        let mut ts = Vec::new();
        for n in 0..nm {
            for i in 0..=n {
                let l = self.t(n).mul(self.s(n, i));
                let r = if i == 0 {
                    self.s(n, n).mul(&self.t(n + 1).pow(2))
                } else {
                    self.s(n, i - 1).mul(self.t(n + 1))
                };
                ts.push((vec![n, i], l, r));
            }
        }
        first("cyclic_codegeneracy", ts);

        let order = (0..=nm)
            .map(|n| (vec![n], self.t(n).pow(n + 1), self.id(n)))
            .collect();
        first("cyclic_order", order);
        report
    }

    /// `b = Σ_{i=0}^{n+1} (−1)^i δ_i: C^n → C^{n+1}`.
    pub fn hochschild_differential(&self, n: usize) -> Matrix {
        self.alternating(n, n + 1)
    }

    /// `b′ = Σ_{i=0}^{n} (−1)^i δ_i`.
    pub fn bar_differential(&self, n: usize) -> Matrix {
        self.alternating(n, n)
    }

    fn alternating(&self, n: usize, last: usize) -> Matrix {
        let mut acc = Matrix::zeros(self.field, self.dim(n + 1), self.dim(n));
        let one = self.field.one();
        let minus = -one.clone();
        for i in 0..=last {
            acc.add_scaled(if i % 2 == 0 { &one } else { &minus }, self.d(n, i));
        }
        acc
    }

    /// `λ = (−1)^n t_n`.
    pub fn lambda(&self, n: usize) -> Matrix {
        if n % 2 == 0 {
            self.t(n).clone()
        } else {
            self.t(n).scale(&-self.field.one())
        }
    }

    /// `N = Σ_{i=0}^{n} λ^i`.
    pub fn norm(&self, n: usize) -> Matrix {
        let l = self.lambda(n);
        let mut acc = Matrix::zeros(self.field, self.dim(n), self.dim(n));
        let mut p = self.id(n);
        for _ in 0..=n {
            acc.add_assign(&p);
            p = l.mul(&p);
        }
        acc
    }

    fn require_range(&self, up_to: usize) -> Result<()> {
        if up_to + 1 > self.n_max {
            return Err(Error::Precondition(format!(
                "degree {up_to} needs n_max ≥ {}, have {}",
                up_to + 1,
                self.n_max
            )));
        }
        Ok(())
    }

    pub fn hochschild_cohomology(&self, up_to: usize) -> Result<CohomologyResult> {
        self.require_range(up_to)?;
        let bs: Vec<Matrix> = (0..=up_to).map(|n| self.hochschild_differential(n)).collect();
        for n in 1..=up_to {
            if !bs[n].mul(&bs[n - 1]).is_zero() {
                return Err(Error::IdentityFailure {
                    relation: "b∘b = 0".into(),
                    degree: n,
                });
            }
        }
        let ranks: Vec<usize> = bs.iter().map(|b| b.rank()).collect();
        let dims = (0..=up_to)
            .map(|n| self.dim(n) - ranks[n] - if n > 0 { ranks[n - 1] } else { 0 })
            .collect();
        Ok(CohomologyResult {
            theory: Theory::Hochschild,
            dims,
            field: self.field,
        })
    }

    /// Total differential `Tot^n → Tot^{n+1}`; column `p` of `Tot^n` holds `C^{n−p}`.
    pub fn total_differential(&self, n: usize) -> Matrix {
        let f = self.field;
        let src_off = offsets((0..=n).map(|p| self.dim(n - p)));
        let dst_off = offsets((0..=n + 1).map(|p| self.dim(n + 1 - p)));
        let mut d = Matrix::zeros(f, *dst_off.last().unwrap(), *src_off.last().unwrap());
        let minus = -f.one();
        for p in 0..=n {
            let q = n - p;
            let vertical = if p % 2 == 0 {
                self.hochschild_differential(q)
            } else {
                self.bar_differential(q).scale(&minus)
            };
            place(&mut d, dst_off[p], src_off[p], &vertical);
            let horizontal = if p % 2 == 0 {
                self.id(q).sub(&self.lambda(q))
            } else {
                self.norm(q)
            };
            place(&mut d, dst_off[p + 1], src_off[p], &horizontal);
        }
        d
    }

    pub fn cyclic_cohomology(&self, up_to: usize) -> Result<CohomologyResult> {
        self.require_range(up_to)?;
        for n in 0..self.n_max {
            let l = self.id(n).sub(&self.lambda(n));
            let nn = self.norm(n);
            if !nn.mul(&l).is_zero() || !l.mul(&nn).is_zero() {
                return Err(Error::IdentityFailure {
                    relation: "N(1−λ) = (1−λ)N = 0".into(),
                    degree: n,
                });
            }
        }
        let ds: Vec<Matrix> = (0..=up_to).map(|n| self.total_differential(n)).collect();
        for n in 1..=up_to {
            if !ds[n].mul(&ds[n - 1]).is_zero() {
                return Err(Error::IdentityFailure {
                    relation: "D∘D = 0".into(),
                    degree: n,
                });
            }
        }
        let ranks: Vec<usize> = ds.iter().map(|d| d.rank()).collect();
        let dims = (0..=up_to)
            .map(|n| {
                let tot: usize = (0..=n).map(|q| self.dim(q)).sum();
                tot - ranks[n] - if n > 0 { ranks[n - 1] } else { 0 }
            })
            .collect();
        Ok(CohomologyResult {
            theory: Theory::Cyclic,
            dims,
            field: self.field,
        })
    }
}

fn offsets(sizes: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut out = vec![0];
    for s in sizes {
        out.push(out.last().unwrap() + s);
    }
    out
}

fn place(target: &mut Matrix, row: usize, col: usize, block: &Matrix) {
    for i in 0..block.rows() {
        for j in 0..block.cols() {
            target.set(row + i, col + j, block.get(i, j).clone());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebroid::{enveloping_algebroid, truncated_polynomial};
    use crate::category::Category;
    use crate::coefficients::{enveloping_dual_coefficient, unit_coefficient, Flavor};
    use crate::linalg::kernel;
    use crate::quasihopf::{cyclic_group_table, group_algebra, twisted_dual_group_algebra, z2_cocycle};

    fn hopf_center(f: Field, order: usize) -> CenterElement {
        let h = group_algebra(f, &cyclic_group_table(order)).unwrap();
        let c = unit_coefficient(&h, Flavor::HopfMu).unwrap();
        CenterElement::new(Category::quasi(h), c).unwrap()
    }

    #[test]
    fn ground_field_over_kc2() {
        for f in [Field::Rationals, Field::prime(5).unwrap()] {
            let e = hopf_center(f, 2);
            let a = unit_algebra(e.category()).unwrap();
            let c = build_cocyclic(&e, &a, 5).unwrap();
            assert_eq!(c.cyclic_cohomology(4).unwrap().dims, vec![1, 0, 1, 0, 1]);
            assert_eq!(c.hochschild_cohomology(3).unwrap().dims, vec![1, 0, 0, 0]);
        }
    }

    #[test]
    fn algebra_object_checks() {
        let e = hopf_center(Field::Rationals, 2);
        let cat = e.category();
        let fun = group_function_algebra(cat, &cyclic_group_table(2)).unwrap();
        assert!(check_algebra_object(cat, &fun).unwrap().passed());
        let mut broken = fun.clone();
        broken.mult.set(0, 0, Field::Rationals.from_i64(2));
        let r = check_algebra_object(cat, &broken).unwrap();
        assert!(!r.status("left_unit"));
        assert!(r.status("associativity"));
        assert!(matches!(build_cocyclic(&e, &broken, 2), Err(Error::Precondition(_))));
    }

    #[test]
    fn tensor_power_dims_and_cap() {
        let e = hopf_center(Field::Rationals, 2);
        let fun = group_function_algebra(e.category(), &cyclic_group_table(2)).unwrap();
        assert_eq!(tensor_power(e.category(), &fun, 3).unwrap().dim(), 8);
        assert!(matches!(
            build_cocyclic_capped(&e, &fun, 4, 16),
            Err(Error::TooLarge { .. })
        ));
    }

    /// Connes' complex of `A = k[x]/(x²)` computed directly on `A^{⊗(n+1)}`,
    /// with `a_0` the most significant index digit.
    fn classical(up_to: usize) -> (Vec<usize>, Vec<usize>) {
        let f = Field::Rationals;
        let prod = |i: usize, j: usize| if i + j < 2 { Some(i + j) } else { None };
        let index = |a: &[usize]| a.iter().fold(0, |acc, &x| acc * 2 + x);
        let tuples = |n: usize| -> Vec<Vec<usize>> {
            (0..1usize << n).map(|k| (0..n).map(|p| (k >> (n - 1 - p)) & 1).collect()).collect()
        };
        let sign = |k: usize| if k % 2 == 0 { f.one() } else { -f.one() };
        let b = |n: usize| {
            let mut m = Matrix::zeros(f, 1 << (n + 2), 1 << (n + 1));
            for a in tuples(n + 2) {
                let row = index(&a);
                for i in 0..=n {
                    if let Some(p) = prod(a[i], a[i + 1]) {
                        let mut t = a.clone();
                        t.splice(i..i + 2, [p]);
                        *m.get_mut(row, index(&t)) += &sign(i);
                    }
                }
                if let Some(p) = prod(a[n + 1], a[0]) {
                    let mut t = a[..=n].to_vec();
                    t[0] = p;
                    *m.get_mut(row, index(&t)) += &sign(n + 1);
                }
            }
            m
        };
        let lambda = |n: usize| {
            let mut m = Matrix::zeros(f, 1 << (n + 1), 1 << (n + 1));
            for a in tuples(n + 1) {
                let mut t = vec![a[n]];
                t.extend_from_slice(&a[..n]);
                m.set(index(&a), index(&t), sign(n));
            }
            m
        };
        let bs: Vec<Matrix> = (0..=up_to).map(b).collect();
        let hh_ranks: Vec<usize> = bs.iter().map(|m| m.rank()).collect();
        let hh = (0..=up_to)
            .map(|n| (1 << (n + 1)) - hh_ranks[n] - if n > 0 { hh_ranks[n - 1] } else { 0 })
            .collect();
        let inv: Vec<Subspace> = (0..=up_to)
            .map(|n| kernel(&Matrix::identity(f, 1 << (n + 1)).sub(&lambda(n))))
            .collect();
        let hc_ranks: Vec<usize> = (0..=up_to).map(|n| bs[n].mul(&inv[n].embedding()).rank()).collect();
        let hc = (0..=up_to)
            .map(|n| inv[n].dim() - hc_ranks[n] - if n > 0 { hc_ranks[n - 1] } else { 0 })
            .collect();
        (hh, hc)
    }

    #[test]
    fn dual_numbers_match_connes_complex() {
        let f = Field::Rationals;
        let e = hopf_center(f, 1);
        let alg = truncated_polynomial(f, 2).unwrap();
        let a = trivial_action_algebra(e.category(), &alg, &[f.one()]).unwrap();
        let c = build_cocyclic(&e, &a, 4).unwrap();
        let (hh, hc) = classical(3);
        assert_eq!(c.hochschild_cohomology(3).unwrap().dims, hh);
        assert_eq!(c.cyclic_cohomology(3).unwrap().dims, hc);
    }

    #[test]
    fn functions_on_c2() {
        let e = hopf_center(Field::Rationals, 2);
        let fun = group_function_algebra(e.category(), &cyclic_group_table(2)).unwrap();
        let c = build_cocyclic(&e, &fun, 3).unwrap();
        assert!(c.verify().passed());
        let hh = c.hochschild_cohomology(2).unwrap().dims;
        let hc = c.cyclic_cohomology(2).unwrap().dims;
        assert_eq!(hh.len(), 3);
        assert_eq!(hc.len(), 3);
    }

    #[test]
    fn twisted_dual_ground_field() {
        let f = Field::Rationals;
        let h = twisted_dual_group_algebra(f, &cyclic_group_table(2), &z2_cocycle(f)).unwrap();
        let coef = unit_coefficient(&h, Flavor::QuasiTypeI).unwrap();
        let e = CenterElement::new(Category::quasi(h), coef).unwrap();
        let a = unit_algebra(e.category()).unwrap();
        let c = build_cocyclic(&e, &a, 5).unwrap();
        assert_eq!(c.cyclic_cohomology(4).unwrap().dims, vec![1, 0, 1, 0, 1]);
    }

    #[test]
    fn enveloping_algebroid_unit_algebra() {
        let f = Field::prime(5).unwrap();
        let h = enveloping_algebroid(&truncated_polynomial(f, 2).unwrap()).unwrap();
        let coef = enveloping_dual_coefficient(&h).unwrap();
        let e = CenterElement::new(Category::algebroid(h), coef).unwrap();
        let a = unit_algebra(e.category()).unwrap();
        let c = build_cocyclic(&e, &a, 3).unwrap();
        assert!(c.verify().passed());
        let hc = c.cyclic_cohomology(2).unwrap();
        assert_eq!(hc.dims.len(), 3);
    }
}
