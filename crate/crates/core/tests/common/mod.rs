#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qha_core::algebroid::HopfAlgebroid;
use qha_core::{Biclosed, Field, Matrix, Module, Scalar, Subspace};

pub fn gf5() -> Field {
    Field::prime(5).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_scalar(f: Field, rng: &mut ChaCha8Rng) -> Scalar {
    match f {
        Field::Rationals => f.ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3)),
        Field::Prime(p) => f.from_i64(rng.gen_range(0..p as i64)),
    }
}

pub fn random_matrix(f: Field, rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let data = (0..rows * cols).map(|_| random_scalar(f, rng)).collect();
    Matrix::from_data(f, rows, cols, data).unwrap()
}

pub fn random_invertible(f: Field, n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    loop {
        let m = random_matrix(f, n, n, rng);
        if m.rank() == n {
            return m;
        }
    }
}

/// One-dimensional modules given by characters `χ(e_i)`.
pub fn characters(cat: &dyn Biclosed, chars: &[&[i64]]) -> Vec<Module> {
    let f = cat.field();
    chars
        .iter()
        .map(|c| {
            let action = c.iter().map(|&x| Matrix::from_i64(f, &[&[x]])).collect();
            cat.module(1, action).unwrap()
        })
        .collect()
}

/// Direct sums of one to three of the given simple modules.
pub fn sums_up_to_three(simples: &[Module]) -> Vec<Module> {
    let mut out = Vec::new();
    let n = simples.len();
    for i in 0..n {
        out.push(simples[i].clone());
        for j in i..n {
            let two = simples[i].direct_sum(&simples[j]).unwrap();
            out.push(two.clone());
            for k in j..n {
                out.push(two.direct_sum(&simples[k]).unwrap());
            }
        }
    }
    out
}

/// Bimodules over `R = k[x]/(x²)` as modules over its enveloping algebroid:
/// `e_{a·2+b}` acts by `λ(r_a) ρ(r_b)` for commuting nilpotent `λ(x), ρ(x)`.
pub fn bimodule(h: &HopfAlgebroid, lx: &Matrix, rx: &Matrix) -> Module {
    let f = h.field();
    let d = lx.rows();
    let id = Matrix::identity(f, d);
    let l = [id.clone(), lx.clone()];
    let r = [id, rx.clone()];
    let action = (0..4).map(|e| l[e / 2].mul(&r[e % 2])).collect();
    let m = h.module(d, action).unwrap();
    assert!(m.action_witness(h.algebra()).is_none());
    m
}

pub fn bimodules_up_to_three(h: &HopfAlgebroid) -> Vec<Module> {
    let f = h.field();
    let z1 = Matrix::zeros(f, 1, 1);
    let n = Matrix::from_i64(f, &[&[0, 0], &[1, 0]]);
    let z2 = Matrix::zeros(f, 2, 2);
    let point = bimodule(h, &z1, &z1);
    let base = bimodule(h, &n, &n);
    let left = bimodule(h, &n, &z2);
    let skew = bimodule(h, &n.scale(&f.from_i64(2)), &n.scale(&f.from_i64(3)));
    let x = Matrix::from_i64(f, &[&[0, 0, 0], &[1, 0, 0], &[0, 0, 0]]);
    let y = Matrix::from_i64(f, &[&[0, 0, 0], &[0, 0, 0], &[1, 0, 0]]);
    let fork = bimodule(h, &x, &y);
    vec![
        point.clone(),
        base.clone(),
        left,
        skew,
        point.direct_sum(&point).unwrap(),
        point.direct_sum(&base).unwrap(),
        fork,
    ]
}

pub fn embedding_basis(s: &Subspace, rows: usize, cols: usize) -> Vec<Matrix> {
    (0..s.dim())
        .map(|i| Matrix::from_data(s.field(), rows, cols, s.vector(i)).unwrap())
        .collect()
}

/// Hochschild and cyclic cohomology of `A = k[x]/(x²)` over ℚ from the
/// textbook complexes: `b` on `Hom(A^{⊗(n+1)}, k)` and Connes' `C_λ`.
pub fn dual_numbers_classical(up_to: usize) -> (Vec<usize>, Vec<usize>) {
    let f = Field::Rationals;
    let prod = |i: usize, j: usize| if i + j < 2 { Some(i + j) } else { None };
    let index = |a: &[usize]| a.iter().fold(0, |acc, &x| acc * 2 + x);
    let tuples = |n: usize| -> Vec<Vec<usize>> {
        (0..1usize << n).map(|k| (0..n).map(|p| (k >> (n - 1 - p)) & 1).collect()).collect()
    };
    let sign = |k: usize| if k % 2 == 0 { 1i64 } else { -1 };
    let b = |n: usize| {
        let mut m = vec![vec![0i64; 1 << (n + 1)]; 1 << (n + 2)];
        for a in tuples(n + 2) {
            let row = index(&a);
            for i in 0..=n {
                if let Some(p) = prod(a[i], a[i + 1]) {
                    let mut t = a.clone();
                    t.splice(i..i + 2, [p]);
                    m[row][index(&t)] += sign(i);
                }
            }
            if let Some(p) = prod(a[n + 1], a[0]) {
                let mut t = a[..=n].to_vec();
                t[0] = p;
                m[row][index(&t)] += sign(n + 1);
            }
        }
        m
    };
    let lambda = |n: usize| {
        let mut m = vec![vec![0i64; 1 << (n + 1)]; 1 << (n + 1)];
        for a in tuples(n + 1) {
            let mut t = vec![a[n]];
            t.extend_from_slice(&a[..n]);
            m[index(&a)][index(&t)] = sign(n);
        }
        m
    };
    let to_matrix = |rows: Vec<Vec<i64>>| {
        let r: Vec<&[i64]> = rows.iter().map(|v| v.as_slice()).collect();
        Matrix::from_i64(f, &r)
    };
    let bs: Vec<Matrix> = (0..=up_to).map(|n| to_matrix(b(n))).collect();
    let hh_rank: Vec<usize> = bs.iter().map(Matrix::rank).collect();
    let hh = (0..=up_to)
        .map(|n| (1 << (n + 1)) - hh_rank[n] - if n > 0 { hh_rank[n - 1] } else { 0 })
        .collect();
    let inv: Vec<Subspace> = (0..=up_to)
        .map(|n| qha_core::kernel(&Matrix::identity(f, 1 << (n + 1)).sub(&to_matrix(lambda(n)))))
        .collect();
    let hc_rank: Vec<usize> = (0..=up_to).map(|n| bs[n].mul(&inv[n].embedding()).rank()).collect();
    let hc = (0..=up_to)
        .map(|n| inv[n].dim() - hc_rank[n] - if n > 0 { hc_rank[n - 1] } else { 0 })
        .collect();
    (hh, hc)
}
