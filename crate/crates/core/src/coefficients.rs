//! Contramodule coefficients: contraactions, anti-Yetter-Drinfeld conditions,
//! stability, the type I / type II conversions and the induced τ families.
//!
//! A contraaction `μ: Hom_k(H, M) → M` is stored as a `dim M x (dim M · dim H)`
//! matrix whose column `j·dim H + a` is the image of the map `e_a ↦ m_j`.
//! Maps `F ∈ Hom_k(H ⊗ H, M)` are flattened as `j·n² + x·n + y` for
//! `F(e_x ⊗ e_y) = m_j`, `x` being the outer variable.

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Module, Tensor};
use crate::algebroid::HopfAlgebroid;
use crate::category::{postcompose, Biclosed, Category};
use crate::error::{mismatch, Error, Result};
use crate::field::Scalar;
use crate::linalg::{intertwiner_space, Matrix, Subspace};
use crate::quasihopf::QuasiHopf;
use crate::report::{digits, first_failure, AydReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Flavor {
    /// Hopf algebra, `μ` with the plain evaluation.
    HopfMu,
    /// Quasi-Hopf, naive evaluation `μ(f) = τ_H(f)(1)`.
    QuasiTypeI,
    /// Quasi-Hopf, categorical evaluation `ν = ev^r_1 ∘ τ_H`.
    QuasiTypeII,
    /// Hopf algebroid, `μ` on `Hom(H, M)_{R_l}`.
    AlgebroidMu,
}

impl Flavor {
    pub fn name(&self) -> &'static str {
        match self {
            Flavor::HopfMu => "hopf_mu",
            Flavor::QuasiTypeI => "type_i",
            Flavor::QuasiTypeII => "type_ii",
            Flavor::AlgebroidMu => "algebroid_mu",
        }
    }

    pub fn parse(s: &str) -> Option<Flavor> {
        match s {
            "hopf_mu" | "hopf" => Some(Flavor::HopfMu),
            "type_i" | "typeI" | "quasi_type_i" => Some(Flavor::QuasiTypeI),
            "type_ii" | "typeII" | "quasi_type_ii" => Some(Flavor::QuasiTypeII),
            "algebroid_mu" | "algebroid" => Some(Flavor::AlgebroidMu),
            _ => None,
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A module `M` with a contraaction `Hom_k(H, M) → M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contramodule {
    module: Module,
    contraaction: Matrix,
    flavor: Flavor,
}

impl Contramodule {
    pub fn new(module: Module, contraaction: Matrix, flavor: Flavor) -> Result<Contramodule> {
        let d = module.dim();
        let n = module.actions().len();
        if contraaction.rows() != d {
            return Err(mismatch("contraaction rows", d, contraaction.rows()));
        }
        if contraaction.cols() != d * n {
            return Err(mismatch("contraaction columns", d * n, contraaction.cols()));
        }
        if contraaction.field() != module.field() {
            return Err(Error::FieldMismatch(contraaction.field(), module.field()));
        }
        Ok(Contramodule {
            module,
            contraaction,
            flavor,
        })
    }

    /// From the 3-tensor `c[i][j][a]`, the `m_i`-coefficient of `μ(e_a ↦ m_j)`.
    pub fn from_tensor(module: Module, c: &[Vec<Vec<Scalar>>], flavor: Flavor) -> Result<Contramodule> {
        let d = module.dim();
        let n = module.actions().len();
        if c.len() != d {
            return Err(mismatch("contraaction tensor", d, c.len()));
        }
        let mut mu = Matrix::zeros(module.field(), d, d * n);
        for (i, rows) in c.iter().enumerate() {
            if rows.len() != d {
                return Err(mismatch(format!("contraaction tensor [{i}]"), d, rows.len()));
            }
            for (j, entries) in rows.iter().enumerate() {
                if entries.len() != n {
                    return Err(mismatch(format!("contraaction tensor [{i}][{j}]"), n, entries.len()));
                }
                for (a, s) in entries.iter().enumerate() {
                    mu.set(i, j * n + a, s.clone());
                }
            }
        }
        Contramodule::new(module, mu, flavor)
    }

    /// `μ(f) = f(u)`.
    pub fn evaluation(module: Module, u: &[Scalar], flavor: Flavor) -> Result<Contramodule> {
        let d = module.dim();
        let n = module.actions().len();
        if u.len() != n {
            return Err(mismatch("evaluation point", n, u.len()));
        }
        let mut mu = Matrix::zeros(module.field(), d, d * n);
        for j in 0..d {
            for (a, s) in u.iter().enumerate() {
                mu.set(j, j * n + a, s.clone());
            }
        }
        Contramodule::new(module, mu, flavor)
    }

    pub fn to_tensor(&self) -> Vec<Vec<Vec<Scalar>>> {
        let (d, n) = (self.dim(), self.acting_dim());
        (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| (0..n).map(|a| self.contraaction.get(i, j * n + a).clone()).collect())
                    .collect()
            })
            .collect()
    }

    pub fn module(&self) -> &Module {
        &self.module
    }
    pub fn contraaction(&self) -> &Matrix {
        &self.contraaction
    }
    pub fn flavor(&self) -> Flavor {
        self.flavor
    }
    pub fn dim(&self) -> usize {
        self.module.dim()
    }
    pub fn acting_dim(&self) -> usize {
        self.module.actions().len()
    }

    /// Same data under another flavor label.
    pub fn relabel(&self, flavor: Flavor) -> Contramodule {
        Contramodule {
            flavor,
            ..self.clone()
        }
    }

    pub fn with_contraaction(&self, mu: Matrix) -> Result<Contramodule> {
        Contramodule::new(self.module.clone(), mu, self.flavor)
    }

    pub fn scaled(&self, s: &Scalar) -> Contramodule {
        Contramodule {
            contraaction: self.contraaction.scale(s),
            ..self.clone()
        }
    }

    pub fn fingerprint(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.module.fingerprint().hash(&mut h);
        self.contraaction.hash(&mut h);
        self.flavor.hash(&mut h);
        h.finish()
    }

    /// `d x d` block `[i][k] = μ(e_a ↦ m_k)_i`.
    fn block(&self, a: usize) -> Matrix {
        let (d, n) = (self.dim(), self.acting_dim());
        let mut b = Matrix::zeros(self.module.field(), d, d);
        for i in 0..d {
            for k in 0..d {
                b.set(i, k, self.contraaction.get(i, k * n + a).clone());
            }
        }
        b
    }

    fn expect(&self, flavor: Flavor) -> Result<()> {
        if self.flavor != flavor {
            return Err(Error::WrongFlavor {
                expected: flavor.name().into(),
                found: self.flavor.name().into(),
            });
        }
        Ok(())
    }

    fn owned_by(&self, parent: u64) -> Result<()> {
        if self.module.parent() != parent {
            return Err(Error::ParentMismatch);
        }
        Ok(())
    }
}

// ---- shared matrix plumbing ------------------------------------------------

/// First differing column (in the given radices) followed by the first differing row.
fn difference_witness(lhs: &Matrix, rhs: &Matrix, radices: &[usize]) -> Option<Vec<usize>> {
    if lhs == rhs {
        return None;
    }
    let col = first_failure(lhs.cols(), |c| lhs.col(c) != rhs.col(c))?;
    let (a, b) = (lhs.col(col), rhs.col(col));
    let row = a.iter().zip(&b).position(|(x, y)| x != y).unwrap_or(0);
    let mut w = digits(col, radices);
    w.push(row);
    Some(w)
}

/// Runs a per-basis-element comparison and prefixes the first failing index.
fn per_element<F>(n: usize, check: F) -> Option<Vec<usize>>
where
    F: Fn(usize) -> Option<Vec<usize>> + Sync + Send,
{
    let h = first_failure(n, |h| check(h).is_some())?;
    let mut w = vec![h];
    w.extend(check(h).unwrap_or_default());
    Some(w)
}

/// Matrix of `f ↦ μ(h ↦ μ(f(h)))` from `Hom_k(H ⊗ H, M)`.
fn nested_mu(mu: &Matrix, d: usize, n: usize) -> Matrix {
    let f = mu.field();
    let mut g = Matrix::zeros(f, d * n, d * n * n);
    for k in 0..d {
        for h in 0..n {
            for j in 0..d {
                for x in 0..n {
                    g.set(k * n + h, j * n * n + h * n + x, mu.get(k, j * n + x).clone());
                }
            }
        }
    }
    mu.mul(&g)
}

/// `m ↦ (h ↦ ρ(u(h)) m)` as a `dn x d` matrix, `u(e_a)` given per basis element.
fn induced_map(m: &Module, images: &[Vec<Scalar>]) -> Matrix {
    let d = m.dim();
    let n = images.len();
    let mut r = Matrix::zeros(m.field(), d * n, d);
    for (a, u) in images.iter().enumerate() {
        let act = m.act(u);
        for j in 0..d {
            for b in 0..d {
                r.set(j * n + a, b, act.get(j, b).clone());
            }
        }
    }
    r
}

/// The dense `n² x n` matrix of a coproduct lift.
fn coproduct_matrix(f: crate::field::Field, n: usize, images: &[Tensor]) -> Matrix {
    let cols: Vec<Vec<Scalar>> = images.iter().map(|t| t.to_dense(n)).collect();
    Matrix::from_cols(f, n * n, &cols).expect("coproduct shape")
}

/// `τ(f)(v) = Σ_t c_t μ(e_a ↦ L_t f(E_{t,a} v))` on `Hom_k(V, M)`.
fn tau_sum(c: &Contramodule, dv: usize, terms: &[(Scalar, Matrix, Vec<Matrix>)]) -> Matrix {
    let d = c.dim();
    let f = c.module.field();
    let blocks: Vec<Matrix> = (0..c.acting_dim()).map(|a| c.block(a)).collect();
    let mut tau = Matrix::zeros(f, d * dv, d * dv);
    for (s, l, es) in terms {
        for (a, e) in es.iter().enumerate() {
            let left = blocks[a].mul(l);
            if left.is_zero() || e.is_zero() {
                continue;
            }
            tau.add_scaled(s, &left.kron(&e.transpose()));
        }
    }
    tau
}

// ---- Hopf algebras ------------------------------------------------------------

fn require_hopf(h: &QuasiHopf, c: &Contramodule) -> Result<()> {
    c.expect(Flavor::HopfMu)?;
    c.owned_by(h.fingerprint())?;
    if !h.is_hopf() {
        return Err(Error::Precondition("parent is not a Hopf algebra".into()));
    }
    Ok(())
}

fn basis_images(alg: &Algebra, g: impl Fn(&[Scalar]) -> Vec<Scalar>) -> Vec<Vec<Scalar>> {
    (0..alg.dim()).map(|a| g(&alg.basis_vector(a))).collect()
}

/// Coassociativity and counitality of the contraaction.
fn contra_core(h: &QuasiHopf, c: &Contramodule, report: &mut AydReport) {
    let (d, n) = (c.dim(), h.dim());
    let f = h.field();
    let mu = c.contraaction();
    let lhs = nested_mu(mu, d, n);
    let dmat = coproduct_matrix(f, n, h.comult_tensors());
    let rhs = mu.mul(&Matrix::identity(f, d).kron(&dmat.transpose()));
    report.record("contra_coassociativity", difference_witness(&lhs, &rhs, &[d, n, n]));
    report.record("contra_unit", unit_witness_quasi(h, c, &f.one()));
}

/// `μ(x ↦ s ε(x) m) = m` for every basis `m`.
fn unit_witness_quasi(h: &QuasiHopf, c: &Contramodule, s: &Scalar) -> Option<Vec<usize>> {
    let images = basis_images(h.algebra(), |x| {
        let mut u = h.one().to_vec();
        let e = h.eps(x) * s;
        for v in u.iter_mut() {
            *v = &*v * &e;
        }
        u
    });
    let lhs = c.contraaction().mul(&induced_map(c.module(), &images));
    let id = Matrix::identity(h.field(), c.dim());
    difference_witness(&lhs, &id, &[c.dim()])
}

pub fn check_contramodule_hopf(h: &QuasiHopf, c: &Contramodule) -> Result<AydReport> {
    require_hopf(h, c)?;
    let mut report = AydReport::new();
    contra_core(h, c, &mut report);
    Ok(report)
}

/// `h² μ(f(−S⁻¹(h¹))) = μ(h¹ f(S(h²)−))` per basis `h`.
fn split_ayd_witness(
    alg: &Algebra,
    c: &Contramodule,
    delta: impl Fn(usize) -> Tensor + Sync + Send,
    s: impl Fn(&[Scalar]) -> Vec<Scalar> + Sync + Send,
    s_inv: impl Fn(&[Scalar]) -> Vec<Scalar> + Sync + Send,
    domain: Option<&Matrix>,
) -> Option<Vec<usize>> {
    let (d, n) = (c.dim(), alg.dim());
    let f = alg.field();
    let mu = c.contraaction();
    let id = Matrix::identity(f, d);
    per_element(n, |hi| {
        let mut lhs = Matrix::zeros(f, d, d * n);
        let mut rhs = Matrix::zeros(f, d, d * n);
        for (cf, idx) in delta(hi).legs() {
            let (p, q) = (alg.basis_vector(idx[0]), alg.basis_vector(idx[1]));
            let r = alg.right_mult(&s_inv(&p));
            lhs.add_scaled(&cf, &c.module().act(&q).mul(mu).mul(&id.kron(&r.transpose())));
            let l = alg.left_mult(&s(&q));
            rhs.add_scaled(&cf, &mu.mul(&c.module().act(&p).kron(&l.transpose())));
        }
        match domain {
            Some(e) => difference_witness(&lhs.mul(e), &rhs.mul(e), &[e.cols()]),
            None => difference_witness(&lhs, &rhs, &[d, n]),
        }
    })
}

/// `h μ(f) = μ(h² f(S(h³)−h¹))` for the given three-fold coproduct.
fn module_ayd_witness(
    h: &QuasiHopf,
    c: &Contramodule,
    triple: impl Fn(usize) -> Tensor + Sync + Send,
    scale: &Scalar,
) -> Option<Vec<usize>> {
    let (d, n) = (c.dim(), h.dim());
    let f = h.field();
    let mu = c.contraaction();
    let alg = h.algebra();
    per_element(n, |hi| {
        let lhs = c.module().basis_action(hi).mul(mu);
        let mut acc = Matrix::zeros(f, d * n, d * n);
        for (cf, idx) in triple(hi).legs() {
            let t = alg
                .left_mult(&h.s(&h.e(idx[2])))
                .mul(&alg.right_mult(&h.e(idx[0])));
            acc.add_scaled(&cf, &c.module().basis_action(idx[1]).kron(&t.transpose()));
        }
        let rhs = mu.mul(&acc).scale(scale);
        difference_witness(&lhs, &rhs, &[d, n])
    })
}

fn left_triple(h: &QuasiHopf, i: usize) -> Tensor {
    h.delta(&h.e(i)).apply_at(0, h.comult_tensors())
}

fn right_triple(h: &QuasiHopf, i: usize) -> Tensor {
    h.delta(&h.e(i)).apply_at(1, h.comult_tensors())
}

pub fn check_ayd_hopf(h: &QuasiHopf, c: &Contramodule) -> Result<AydReport> {
    require_hopf(h, c)?;
    let mut report = AydReport::new();
    let one = h.field().one();
    let module_form = module_ayd_witness(h, c, |i| left_triple(h, i), &one);
    let split_form = split_ayd_witness(
        h.algebra(),
        c,
        |i| h.delta(&h.e(i)),
        |x| h.s(x),
        |x| h.s_inv(x),
        None,
    );
    let agree = module_form.is_none() == split_form.is_none();
    report.record("ayd", module_form);
    report.record("ayd_split", split_form);
    report.record("ayd_forms_agree", if agree { None } else { Some(vec![]) });
    Ok(report)
}

pub fn check_stability_hopf(h: &QuasiHopf, c: &Contramodule) -> Result<AydReport> {
    require_hopf(h, c)?;
    let mut report = AydReport::new();
    let images = basis_images(h.algebra(), |x| x.to_vec());
    let lhs = c.contraaction().mul(&induced_map(c.module(), &images));
    let id = Matrix::identity(h.field(), c.dim());
    report.record("stability", difference_witness(&lhs, &id, &[c.dim()]));
    Ok(report)
}

/// `τ(φ)(v) = μ(h ↦ φ(hv))` and `θ(φ)(v) = μ(h ↦ φ(S⁻¹(h)v))` on `Hom_k(V, M)`.
pub fn tau_theta_hopf(h: &QuasiHopf, c: &Contramodule, v: &Module) -> Result<(Matrix, Matrix)> {
    require_hopf(h, c)?;
    let id = Matrix::identity(h.field(), c.dim());
    let plain: Vec<Matrix> = (0..h.dim()).map(|a| v.basis_action(a).clone()).collect();
    let twisted: Vec<Matrix> = (0..h.dim()).map(|a| v.act(&h.s_inv(&h.e(a)))).collect();
    let one = h.field().one();
    let tau = tau_sum(c, v.dim(), &[(one.clone(), id.clone(), plain)]);
    let theta = tau_sum(c, v.dim(), &[(one, id, twisted)]);
    require_tau(h, v, c.module(), &tau)?;
    Ok((tau, theta))
}

fn require_tau(cat: &dyn Biclosed, v: &Module, m: &Module, tau: &Matrix) -> Result<()> {
    let src = cat.hom_l(v, m)?;
    let dst = cat.hom_r(v, m)?;
    match cat.intertwiner_witness(&src.module, &dst.module, tau) {
        None => Ok(()),
        Some(i) => Err(Error::NotIntertwiner(format!(
            "τ_V fails to commute with basis element {i}; the aYD condition is violated"
        ))),
    }
}

// ---- quasi-Hopf, type I --------------------------------------------------------

fn require_quasi(h: &QuasiHopf, c: &Contramodule, flavor: Flavor) -> Result<()> {
    c.expect(flavor)?;
    c.owned_by(h.fingerprint())
}

/// Both sides of the type I coassociativity condition, read off the hexagon
/// at `V = W = H` evaluated at `1 ⊗ 1`:
/// `μ(x ↦ Y μ(y ↦ F(S(Z)x ⊗ yS(X))))` and
/// `Z′ μ(x ↦ X F(S(Z)x¹S(Y′) ⊗ S(Y)x²S(X′)))` with two copies of Φ.
pub fn quasi_contra_sides(h: &QuasiHopf, c: &Contramodule) -> (Matrix, Matrix) {
    let (d, n) = (c.dim(), h.dim());
    let f = h.field();
    let mu = c.contraaction();
    let m = c.module();
    let id = Matrix::identity(f, d);
    let legs = h.phi().legs();
    let vec_of = |x: &[Scalar], y: &[Scalar]| crate::algebra::kron_vec(x, y);

    let mut lhs = Matrix::zeros(f, d, d * n * n);
    for a in 0..n {
        let mut g = Matrix::zeros(f, d, d * n * n);
        for (cf, idx) in &legs {
            let (x, y, z) = (h.e(idx[0]), h.e(idx[1]), h.e(idx[2]));
            let u = h.mul(&h.s(&z), &h.e(a));
            let sx = h.s(&x);
            let rows: Vec<Vec<Scalar>> = (0..n).map(|b| vec_of(&u, &h.mul(&h.e(b), &sx))).collect();
            let zm = Matrix::from_rows(f, &rows).expect("rows");
            g.add_scaled(cf, &m.act(&y).mul(mu).mul(&id.kron(&zm)));
        }
        lhs.add_assign(&c.block(a).mul(&g));
    }

    let mut rhs = Matrix::zeros(f, d, d * n * n);
    let deltas: Vec<Vec<(Scalar, Vec<usize>)>> = (0..n).map(|a| h.delta(&h.e(a)).legs()).collect();
    for (c1, i1) in &legs {
        let (x, y, z) = (h.e(i1[0]), h.e(i1[1]), h.e(i1[2]));
        let (sz, sy) = (h.s(&z), h.s(&y));
        for (c2, i2) in &legs {
            let (x2, y2, z2) = (h.e(i2[0]), h.e(i2[1]), h.e(i2[2]));
            let (sy2, sx2) = (h.s(&y2), h.s(&x2));
            let rows: Vec<Vec<Scalar>> = deltas
                .iter()
                .map(|dl| {
                    let mut acc = vec![f.zero(); n * n];
                    for (cd, idx) in dl {
                        let u = h.mul_all(&[&sz, &h.e(idx[0]), &sy2]);
                        let w = h.mul_all(&[&sy, &h.e(idx[1]), &sx2]);
                        for (t, s) in acc.iter_mut().zip(vec_of(&u, &w)) {
                            t.add_mul(cd, &s);
                        }
                    }
                    acc
                })
                .collect();
            let zm = Matrix::from_rows(f, &rows).expect("rows");
            let term = m.act(&z2).mul(mu).mul(&m.act(&x).kron(&zm));
            rhs.add_scaled(&(c1 * c2), &term);
        }
    }
    (lhs, rhs)
}

pub fn check_ayd_quasi_i(h: &QuasiHopf, c: &Contramodule) -> Result<AydReport> {
    require_quasi(h, c, Flavor::QuasiTypeI)?;
    let mut report = AydReport::new();
    report.record(
        "ayd",
        split_ayd_witness(h.algebra(), c, |i| h.delta(&h.e(i)), |x| h.s(x), |x| h.s_inv(x), None),
    );
    let (lhs, rhs) = quasi_contra_sides(h, c);
    report.record("quasi_contra", difference_witness(&lhs, &rhs, &[c.dim(), h.dim(), h.dim()]));
    report.record("contra_unit", unit_witness_quasi(h, c, &h.field().one()));
    Ok(report)
}

/// `r′_m(x) = β x S⁻¹(Q) S⁻¹(α) P m`; checks `R μ(r′_m) = m` and the helper
/// identity `ε(P) Q β S(R) = β`.
pub fn check_stability_quasi(h: &QuasiHopf, c: &Contramodule) -> Result<AydReport> {
    require_quasi(h, c, Flavor::QuasiTypeI)?;
    let f = h.field();
    let mu = c.contraaction();
    let mut lhs = Matrix::zeros(f, c.dim(), c.dim());
    let sa = h.s_inv(h.alpha());
    let mut helper = vec![f.zero(); h.dim()];
    for (cf, idx) in h.phi_inv().legs() {
        let (p, q, r) = (h.e(idx[0]), h.e(idx[1]), h.e(idx[2]));
        let tail = h.mul_all(&[&h.s_inv(&q), &sa, &p]);
        let images = basis_images(h.algebra(), |x| h.mul_all(&[h.beta(), x, &tail]));
        let term = c.module().act(&r).mul(mu).mul(&induced_map(c.module(), &images));
        lhs.add_scaled(&cf, &term);
        let e = &cf * &h.eps(&p);
        let v = h.mul_all(&[&q, h.beta(), &h.s(&r)]);
        for (t, s) in helper.iter_mut().zip(&v) {
            t.add_mul(&e, s);
        }
    }
    let mut report = AydReport::new();
    let id = Matrix::identity(f, c.dim());
    report.record("stability", difference_witness(&lhs, &id, &[c.dim()]));
    let hw = helper.iter().zip(h.beta()).position(|(x, y)| x != y).map(|i| vec![i]);
    report.record("stability_helper", hw);
    Ok(report)
}

// ---- quasi-Hopf, type II -------------------------------------------------------

pub fn check_ayd_quasi_ii(h: &QuasiHopf, c: &Contramodule) -> Result<AydReport> {
    require_quasi(h, c, Flavor::QuasiTypeII)?;
    let f = h.field();
    let mut report = AydReport::new();
    report.record("ayd", module_ayd_witness(h, c, |i| right_triple(h, i), &f.one()));

    let reg = h.regular_module();
    let (lhs, rhs) = hexagon_sides_quasi(h, c, &reg, &reg)?;
    let ev = unit_evaluation(h, c.dim(), h.dim(), h.dim());
    let radices = [c.dim(), h.dim(), h.dim()];
    report.record("quasi_contra", difference_witness(&ev.mul(&lhs), &ev.mul(&rhs), &radices));

    let eb = h.eps(h.beta());
    report.record("contra_unit", unit_witness_quasi(h, c, &eb));
    Ok(report)
}

/// `Hom^r(W, Hom^r(V, M)) → M`, evaluation at `1 ⊗ 1` in layout `(m, v, w)`.
fn unit_evaluation(h: &QuasiHopf, dm: usize, dv: usize, dw: usize) -> Matrix {
    let f = h.field();
    let one = h.one();
    let mut ev = Matrix::zeros(f, dm, dm * dv * dw);
    for m in 0..dm {
        for v in 0..dv {
            for w in 0..dw {
                let s = &one[v] * &one[w];
                if !s.is_zero() {
                    ev.set(m, (m * dv + v) * dw + w, s);
                }
            }
        }
    }
    ev
}

fn hexagon_sides_quasi(h: &QuasiHopf, c: &Contramodule, v: &Module, w: &Module) -> Result<(Matrix, Matrix)> {
    let vw = h.tensor_module(v, w)?;
    let tv = tau_quasi(h, c, v)?;
    let tw = tau_quasi(h, c, w)?;
    let tvw = tau_quasi(h, c, &vw)?;
    hexagon_sides(h, v, w, c.module(), &tv, &tw, &tvw)
}

/// The two composites `Hom^l(V, Hom^l(W, M)) → Hom^r(W, Hom^r(V, M))` around the
/// hexagon: `τ_V ∘ iso₂ ∘ τ_W` and `iso₃ ∘ τ_{V⊗W} ∘ iso₁`.
pub fn hexagon_sides(
    cat: &dyn Biclosed,
    v: &Module,
    w: &Module,
    m: &Module,
    tau_v: &Matrix,
    tau_w: &Matrix,
    tau_vw: &Matrix,
) -> Result<(Matrix, Matrix)> {
    let [iso1, iso2, iso3] = cat.hexagon_isos(v, w, m)?;
    let lw = cat.hom_l(w, m)?;
    let rw = cat.hom_r(w, m)?;
    let step1 = postcompose(&cat.hom_l(v, &lw.module)?, &cat.hom_l(v, &rw.module)?, tau_w);
    let lv = cat.hom_l(v, m)?;
    let rv = cat.hom_r(v, m)?;
    let step3 = postcompose(&cat.hom_r(w, &lv.module)?, &cat.hom_r(w, &rv.module)?, tau_v);
    let lhs = step3.mul(&iso2).mul(&step1);
    let rhs = iso3.mul(tau_vw).mul(&iso1);
    Ok((lhs, rhs))
}

// ---- conversions -----------------------------------------------------------

/// `ν_μ(f) = R μ(h ↦ f(h S⁻¹(Q) S⁻¹(α) P))`.
pub fn convert_i_to_ii(h: &QuasiHopf, c: &Contramodule) -> Result<Contramodule> {
    require_quasi(h, c, Flavor::QuasiTypeI)?;
    let f = h.field();
    let id = Matrix::identity(f, c.dim());
    let sa = h.s_inv(h.alpha());
    let mut nu = Matrix::zeros(f, c.dim(), c.contraaction().cols());
    for (cf, idx) in h.phi_inv().legs() {
        let t = h.algebra().right_mult(&h.mul_all(&[&h.s_inv(&h.e(idx[1])), &sa, &h.e(idx[0])]));
        let term = c
            .module()
            .basis_action(idx[2])
            .mul(c.contraaction())
            .mul(&id.kron(&t.transpose()));
        nu.add_scaled(&cf, &term);
    }
    Contramodule::new(c.module().clone(), nu, Flavor::QuasiTypeII)
}

/// `μ_ν(f) = ν(h ↦ (Z·f)(h Y S⁻¹(β) S⁻¹(X)))` with `Z·f = Z¹ f(S(Z²)−)`.
pub fn convert_ii_to_i(h: &QuasiHopf, c: &Contramodule) -> Result<Contramodule> {
    require_quasi(h, c, Flavor::QuasiTypeII)?;
    let f = h.field();
    let alg = h.algebra();
    let sb = h.s_inv(h.beta());
    let mut mu = Matrix::zeros(f, c.dim(), c.contraaction().cols());
    for (cf, idx) in h.phi().legs() {
        let tail = alg.right_mult(&h.mul_all(&[&h.e(idx[1]), &sb, &h.s_inv(&h.e(idx[0]))]));
        for (cz, z) in h.delta(&h.e(idx[2])).legs() {
            let t = alg.left_mult(&h.s(&h.e(z[1]))).mul(&tail);
            let term = c.module().basis_action(z[0]).kron(&t.transpose());
            mu.add_scaled(&(&cf * &cz), &c.contraaction().mul(&term));
        }
    }
    Contramodule::new(c.module().clone(), mu, Flavor::QuasiTypeI)
}

// ---- τ families ----------------------------------------------------------------

/// `τ_V` for a Hopf, type I or type II contraaction, on `Hom_k(V, M)`.
fn tau_quasi(h: &QuasiHopf, c: &Contramodule, v: &Module) -> Result<Matrix> {
    c.owned_by(h.fingerprint())?;
    let f = h.field();
    let id = Matrix::identity(f, c.dim());
    match c.flavor() {
        Flavor::HopfMu | Flavor::QuasiTypeI => {
            let es: Vec<Matrix> = (0..h.dim()).map(|a| v.basis_action(a).clone()).collect();
            Ok(tau_sum(c, v.dim(), &[(f.one(), id, es)]))
        }
        Flavor::QuasiTypeII => {
            let sb = h.s_inv(h.beta());
            let mut terms = Vec::new();
            for (cf, idx) in h.phi().legs() {
                let tail = h.mul_all(&[&h.e(idx[1]), &sb, &h.s_inv(&h.e(idx[0]))]);
                for (cz, z) in h.delta(&h.e(idx[2])).legs() {
                    let head = h.s(&h.e(z[1]));
                    let es = (0..h.dim())
                        .map(|a| v.act(&h.mul_all(&[&head, &h.e(a), &tail])))
                        .collect();
                    terms.push((&cf * &cz, c.module().basis_action(z[0]).clone(), es));
                }
            }
            Ok(tau_sum(c, v.dim(), &terms))
        }
        Flavor::AlgebroidMu => Err(Error::WrongFlavor {
            expected: "hopf_mu, type_i or type_ii".into(),
            found: c.flavor().name().into(),
        }),
    }
}

/// `τ_V(f) = μ(x ↦ f(x−))` on `Hom(V, M)_{R_l}`, in carrier coordinates.
fn tau_algebroid(h: &HopfAlgebroid, c: &Contramodule, v: &Module) -> Result<Matrix> {
    c.expect(Flavor::AlgebroidMu)?;
    c.owned_by(h.fingerprint())?;
    let f = h.field();
    let id = Matrix::identity(f, c.dim());
    let es: Vec<Matrix> = (0..h.dim()).map(|a| v.basis_action(a).clone()).collect();
    let full = tau_sum(c, v.dim(), &[(f.one(), id, es)]);
    let src = h.left_hom(v, c.module())?;
    let dst = h.right_hom(v, c.module())?;
    let img = full.mul(&src.embedding);
    let carrier = Subspace::from_matrix_rows(dst.embedding.transpose());
    for j in 0..img.cols() {
        if !carrier.contains(&img.col(j)) {
            return Err(Error::NotIntertwiner(
                "τ_V leaves Hom_{R_l}(V, M); the left μ-linearity fails".into(),
            ));
        }
    }
    Ok(dst.coords.mul(&img))
}

/// `τ_V: V ◁ M → M ▷ V` in carrier coordinates, verified to be a module map.
pub fn tau_from_contramodule(cat: &Category, c: &Contramodule, v: &Module) -> Result<Matrix> {
    let tau = tau_unchecked(cat, c, v)?;
    require_tau(cat, v, c.module(), &tau)?;
    Ok(tau)
}

/// The τ formula of the coefficient's flavor, without checking that the
/// result is a module map.
pub fn tau_unchecked(cat: &Category, c: &Contramodule, v: &Module) -> Result<Matrix> {
    Ok(match (cat, c.flavor()) {
        (Category::Quasi(h), Flavor::HopfMu | Flavor::QuasiTypeI | Flavor::QuasiTypeII) => {
            if c.flavor() == Flavor::HopfMu && !h.is_hopf() {
                return Err(Error::Precondition("parent is not a Hopf algebra".into()));
            }
            tau_quasi(h, c, v)?
        }
        (Category::Algebroid(h), Flavor::AlgebroidMu) => tau_algebroid(h, c, v)?,
        (Category::Quasi(_), found) => {
            return Err(Error::WrongFlavor {
                expected: "a quasi-Hopf flavor".into(),
                found: found.name().into(),
            })
        }
        (Category::Algebroid(_), found) => {
            return Err(Error::WrongFlavor {
                expected: Flavor::AlgebroidMu.name().into(),
                found: found.name().into(),
            })
        }
    })
}

/// Recovers the contraaction from `τ_H`: `μ(f) = τ_H(f)(1)` for the naive
/// flavors and `ν(f) = ev^r(1 ⊗ τ_H(f))` for type II.
pub fn extract_contraaction(h: &QuasiHopf, m: &Module, tau_h: &Matrix, flavor: Flavor) -> Result<Matrix> {
    let (d, n) = (m.dim(), h.dim());
    if tau_h.rows() != d * n || tau_h.cols() != d * n {
        return Err(mismatch("τ_H", d * n, tau_h.rows()));
    }
    let f = h.field();
    let one = Matrix::from_cols(f, n, &[h.one().to_vec()])?;
    let ev = match flavor {
        Flavor::HopfMu | Flavor::QuasiTypeI => {
            Matrix::identity(f, d).kron(&one.transpose())
        }
        Flavor::QuasiTypeII => {
            let reg = h.regular_module();
            h.eval_right(&reg, m)?.mul(&one.kron(&Matrix::identity(f, d * n)))
        }
        Flavor::AlgebroidMu => {
            return Err(Error::WrongFlavor {
                expected: "a quasi-Hopf flavor".into(),
                found: flavor.name().into(),
            })
        }
    };
    Ok(ev.mul(tau_h))
}

// ---- Hopf algebroids -------------------------------------------------------------

fn require_algebroid(h: &HopfAlgebroid, c: &Contramodule) -> Result<()> {
    c.expect(Flavor::AlgebroidMu)?;
    c.owned_by(h.fingerprint())
}

/// Basis (as columns) of `Hom(H, M)_{R_l}`: maps with `f(t_l(r)x) = t_l(r)f(x)`.
pub fn algebroid_domain(h: &HopfAlgebroid, m: &Module) -> Result<Matrix> {
    Ok(h.left_linear_maps(&h.regular_module(), m)?.embedding())
}

/// `Hom(H ⊗_{R_l} H, M)_{R_l}` inside `Hom_k(H ⊗ H, M)`.
fn algebroid_pair_domain(h: &HopfAlgebroid, m: &Module) -> Result<Matrix> {
    let (d, n) = (m.dim(), h.dim());
    let f = h.field();
    let alg = h.algebra();
    let id_n = Matrix::identity(f, n);
    let mut cons = Vec::new();
    for r in 0..h.base_dim() {
        let er = h.r(r);
        let tl = alg.left_mult(&h.t_l(&er));
        let sl = alg.left_mult(&h.s_l(&er));
        cons.push((id_n.kron(&tl), m.act(&h.t_l(&er))));
        cons.push((tl.kron(&id_n).sub(&id_n.kron(&sl)), Matrix::zeros(f, d, d)));
    }
    Ok(intertwiner_space(f, d, n * n, &cons)?.embedding())
}

pub fn check_contramodule_algebroid(h: &HopfAlgebroid, c: &Contramodule) -> Result<AydReport> {
    require_algebroid(h, c)?;
    let (d, n) = (c.dim(), h.dim());
    let f = h.field();
    let mu = c.contraaction();
    let pairs = algebroid_pair_domain(h, c.module())?;
    let lhs = nested_mu(mu, d, n).mul(&pairs);
    let dl = coproduct_matrix(f, n, h.delta_l_tensors());
    let rhs = mu.mul(&Matrix::identity(f, d).kron(&dl.transpose())).mul(&pairs);
    let mut report = AydReport::new();
    report.record("contra_coassociativity", difference_witness(&lhs, &rhs, &[pairs.cols()]));

    let images: Vec<Vec<Scalar>> = (0..n).map(|a| h.t_l(&h.eps_l(&h.e(a)))).collect();
    let unit = mu.mul(&induced_map(c.module(), &images));
    report.record("contra_unit", difference_witness(&unit, &Matrix::identity(f, d), &[d]));
    Ok(report)
}

pub fn check_ayd_algebroid(h: &HopfAlgebroid, c: &Contramodule) -> Result<AydReport> {
    require_algebroid(h, c)?;
    let d = c.dim();
    let f = h.field();
    let alg = h.algebra();
    let mu = c.contraaction();
    let dom = algebroid_domain(h, c.module())?;
    let id = Matrix::identity(f, d);
    let mut report = AydReport::new();
    report.record(
        "ayd",
        split_ayd_witness(alg, c, |i| h.delta_r(&h.e(i)), |x| h.s(x), |x| h.s_inv(x), Some(&dom)),
    );
    let right = per_element(h.base_dim(), |r| {
        let sl = h.s_l(&h.r(r));
        let lhs = mu.mul(&id.kron(&alg.left_mult(&sl).transpose())).mul(&dom);
        let rhs = c.module().act(&h.t_l(&h.r(r))).mul(mu).mul(&dom);
        difference_witness(&lhs, &rhs, &[dom.cols()])
    });
    report.record("right_mu", right);
    let left = per_element(h.base_dim(), |r| {
        let sl = h.s_l(&h.r(r));
        let lhs = mu.mul(&id.kron(&alg.right_mult(&sl).transpose())).mul(&dom);
        let rhs = c.module().act(&sl).mul(mu).mul(&dom);
        difference_witness(&lhs, &rhs, &[dom.cols()])
    });
    report.record("left_mu", left);
    Ok(report)
}

pub fn check_stability_algebroid(h: &HopfAlgebroid, c: &Contramodule) -> Result<AydReport> {
    require_algebroid(h, c)?;
    let images = basis_images(h.algebra(), |x| x.to_vec());
    let lhs = c.contraaction().mul(&induced_map(c.module(), &images));
    let id = Matrix::identity(h.field(), c.dim());
    let mut report = AydReport::new();
    report.record("stability", difference_witness(&lhs, &id, &[c.dim()]));
    Ok(report)
}

// ---- builders ------------------------------------------------------------------

/// `M = k` with `μ(f) = f(1)`.
pub fn unit_coefficient(h: &QuasiHopf, flavor: Flavor) -> Result<Contramodule> {
    Contramodule::evaluation(h.trivial_module(), h.one(), flavor)
}

/// `M = R*` over the enveloping algebroid of `R`, with
/// `(s_l(a) t_l(b) · ξ)(x) = ξ(b x a)` and `μ(f)(a) = f(s_l(a))(1)`.
pub fn enveloping_dual_coefficient(h: &HopfAlgebroid) -> Result<Contramodule> {
    let base = h.base();
    let r = base.dim();
    if h.dim() != r * r {
        return Err(Error::Precondition("not an enveloping algebroid".into()));
    }
    let f = h.field();
    let action = (0..r * r)
        .map(|e| {
            let (a, b) = (base.basis_vector(e / r), base.basis_vector(e % r));
            let mut m = Matrix::zeros(f, r, r);
            for x in 0..r {
                let img = base.mul_all(&[&b, &base.basis_vector(x), &a]);
                for (k, s) in img.into_iter().enumerate() {
                    m.set(x, k, s);
                }
            }
            m
        })
        .collect();
    let module = h.module(r, action)?;
    let one = base.unit();
    let mut mu = Matrix::zeros(f, r, r * r * r);
    for k in 0..r {
        let sl = h.s_l(&base.basis_vector(k));
        for (j, u) in one.iter().enumerate() {
            for (c, s) in sl.iter().enumerate() {
                mu.set(k, j * r * r + c, s * u);
            }
        }
    }
    Contramodule::new(module, mu, Flavor::AlgebroidMu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebroid::{algebroid_from_hopf, enveloping_algebroid, truncated_polynomial};
    use crate::field::Field;
    use crate::quasihopf::{cyclic_group_table, group_algebra, sweedler_h4, twisted_dual_group_algebra, z2_cocycle};

    fn gf5() -> Field {
        Field::prime(5).unwrap()
    }

    fn kc2(f: Field) -> QuasiHopf {
        group_algebra(f, &cyclic_group_table(2)).unwrap()
    }

    #[test]
    fn unit_coefficient_over_kc2_is_stable_ayd() {
        let h = kc2(Field::Rationals);
        let c = unit_coefficient(&h, Flavor::HopfMu).unwrap();
        assert!(check_contramodule_hopf(&h, &c).unwrap().passed());
        assert!(check_ayd_hopf(&h, &c).unwrap().passed());
        assert!(check_stability_hopf(&h, &c).unwrap().passed());
        let two = Field::Rationals.from_i64(2);
        let bad = check_stability_hopf(&h, &c.scaled(&two)).unwrap();
        assert_eq!(bad.get("stability").unwrap().counterexample, Some(vec![0, 0]));
    }

    #[test]
    fn tau_and_theta_are_inverse() {
        let h = kc2(gf5());
        let c = unit_coefficient(&h, Flavor::HopfMu).unwrap();
        let reg = h.regular_module();
        let (tau, theta) = tau_theta_hopf(&h, &c, &reg).unwrap();
        assert!(tau.mul(&theta).is_identity());
        assert!(theta.mul(&tau).is_identity());
    }

    #[test]
    fn flavors_are_not_coerced() {
        let h = kc2(gf5());
        let c = unit_coefficient(&h, Flavor::QuasiTypeI).unwrap();
        assert!(matches!(check_ayd_hopf(&h, &c), Err(Error::WrongFlavor { .. })));
        assert!(matches!(convert_ii_to_i(&h, &c), Err(Error::WrongFlavor { .. })));
        assert!(matches!(check_ayd_quasi_ii(&h, &c), Err(Error::WrongFlavor { .. })));
    }

    #[test]
    fn type_i_specializes_to_hopf() {
        let h = sweedler_h4(gf5());
        let c = unit_coefficient(&h, Flavor::QuasiTypeI).unwrap();
        let hopf = c.relabel(Flavor::HopfMu);
        let r1 = check_ayd_quasi_i(&h, &c).unwrap();
        let r2 = check_contramodule_hopf(&h, &hopf).unwrap();
        assert_eq!(r1.status("quasi_contra"), r2.status("contra_coassociativity"));
        assert_eq!(r1.status("ayd"), check_ayd_hopf(&h, &hopf).unwrap().status("ayd_split"));
    }

    #[test]
    fn conversions_are_identity_without_phi() {
        let h = kc2(gf5());
        let c = unit_coefficient(&h, Flavor::QuasiTypeI).unwrap();
        let nu = convert_i_to_ii(&h, &c).unwrap();
        assert_eq!(nu.contraaction(), c.contraaction());
        assert_eq!(convert_ii_to_i(&h, &nu).unwrap(), c);
    }

    #[test]
    fn type_i_and_converted_type_ii_give_the_same_tau() {
        let f = Field::Rationals;
        let h = twisted_dual_group_algebra(f, &cyclic_group_table(2), &z2_cocycle(f)).unwrap();
        let c = unit_coefficient(&h, Flavor::QuasiTypeI).unwrap();
        let nu = convert_i_to_ii(&h, &c).unwrap();
        let back = convert_ii_to_i(&h, &nu).unwrap();
        let reg = h.regular_module();
        let t1 = tau_quasi(&h, &back, &reg).unwrap();
        let t2 = tau_quasi(&h, &nu, &reg).unwrap();
        assert_eq!(t1, t2);
    }

    #[test]
    fn quasi_contra_matches_hexagon_at_unit() {
        let f = Field::Rationals;
        let h = twisted_dual_group_algebra(f, &cyclic_group_table(2), &z2_cocycle(f)).unwrap();
        let reg = h.regular_module();
        for u in 0..3 {
            let point: Vec<Scalar> = match u {
                0 => h.one().to_vec(),
                1 => h.beta().to_vec(),
                _ => h.e(1),
            };
            let c = Contramodule::evaluation(reg.clone(), &point, Flavor::QuasiTypeI).unwrap();
            let (lhs, rhs) = quasi_contra_sides(&h, &c);
            let (hl, hr) = hexagon_sides_quasi(&h, &c, &reg, &reg).unwrap();
            let ev = unit_evaluation(&h, c.dim(), h.dim(), h.dim());
            assert_eq!(lhs, ev.mul(&hl), "point {u}");
            assert_eq!(rhs, ev.mul(&hr), "point {u}");
        }
    }

    #[test]
    fn algebroid_reduction_agrees_with_hopf() {
        let h = sweedler_h4(gf5());
        let a = algebroid_from_hopf(&h).unwrap();
        let m = h.trivial_module();
        let ma = a.adopt(&m).unwrap();
        let c = unit_coefficient(&h, Flavor::HopfMu).unwrap();
        let ca = Contramodule::new(ma, c.contraaction().clone(), Flavor::AlgebroidMu).unwrap();
        let hopf = check_contramodule_hopf(&h, &c).unwrap();
        let alg = check_contramodule_algebroid(&a, &ca).unwrap();
        assert_eq!(hopf.passed(), alg.passed());
        assert_eq!(
            check_ayd_hopf(&h, &c).unwrap().status("ayd_split"),
            check_ayd_algebroid(&a, &ca).unwrap().status("ayd")
        );
        assert_eq!(
            check_stability_hopf(&h, &c).unwrap().passed(),
            check_stability_algebroid(&a, &ca).unwrap().passed()
        );
    }

    #[test]
    fn enveloping_dual_coefficient_is_stable() {
        let f = gf5();
        let a = enveloping_algebroid(&truncated_polynomial(f, 2).unwrap()).unwrap();
        let c = enveloping_dual_coefficient(&a).unwrap();
        let contra = check_contramodule_algebroid(&a, &c).unwrap();
        let ayd = check_ayd_algebroid(&a, &c).unwrap();
        let st = check_stability_algebroid(&a, &c).unwrap();
        assert!(contra.passed(), "{contra:?}");
        assert!(ayd.passed(), "{ayd:?}");
        assert!(st.passed(), "{st:?}");
        let cat = Category::algebroid(a.clone());
        let tau = tau_from_contramodule(&cat, &c, &a.regular_module()).unwrap();
        assert_eq!(tau.rank(), tau.rows());
    }
}
