mod common;

use common::*;
use proptest::prelude::*;
use rand::Rng;

use qha_core::coefficients::{convert_i_to_ii, convert_ii_to_i, tau_unchecked, unit_coefficient};
use qha_core::cyclic::{build_cocyclic, group_function_algebra, ModuleAlgebra};
use qha_core::quasihopf::{cyclic_group_table, group_algebra, sweedler_h4, twisted_dual_group_algebra, z2_cocycle};
use qha_core::{kernel, Biclosed, Category, CenterElement, Contramodule, Field, Flavor, Matrix, Module, QuasiHopf};

fn field(prime: bool) -> Field {
    if prime {
        gf5()
    } else {
        Field::Rationals
    }
}

fn twisted(f: Field) -> QuasiHopf {
    twisted_dual_group_algebra(f, &cyclic_group_table(2), &z2_cocycle(f)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_plus_nullity(seed in any::<u64>(), prime in any::<bool>(), rows in 1usize..6, cols in 1usize..6) {
        let f = field(prime);
        let m = random_matrix(f, rows, cols, &mut rng(seed));
        prop_assert_eq!(m.rank() + kernel(&m).dim(), cols);
    }

    #[test]
    fn inverse_is_two_sided(seed in any::<u64>(), prime in any::<bool>(), n in 1usize..6) {
        let f = field(prime);
        let m = random_invertible(f, n, &mut rng(seed));
        let inv = m.inverse().unwrap();
        prop_assert!(m.mul(&inv).is_identity());
        prop_assert!(inv.mul(&m).is_identity());
    }

    #[test]
    fn scalar_text_roundtrip(num in -1000i64..1000, den in 1i64..50, p in prop::sample::select(vec![2u64, 3, 5, 7, 101])) {
        let q = Field::Rationals.ratio(num, den);
        prop_assert_eq!(Field::Rationals.parse(&q.to_text()).unwrap(), q);
        let fp = Field::prime(p).unwrap();
        let r = fp.from_i64(num);
        prop_assert_eq!(fp.parse(&r.to_text()).unwrap(), r);
    }

    #[test]
    fn tau_is_linear_in_mu(seed in any::<u64>(), prime in any::<bool>()) {
        let f = field(prime);
        let mut r = rng(seed);
        let h = twisted(f);
        let cat = Category::quasi(h.clone());
        let m = h.regular_module();
        let v = cat.regular_module();
        let (d, n) = (m.dim(), m.dim() * h.dim());
        let (mu1, mu2) = (random_matrix(f, d, n, &mut r), random_matrix(f, d, n, &mut r));
        let s = random_scalar(f, &mut r);
        let mut sum = mu1.clone();
        sum.add_scaled(&s, &mu2);
        let tau = |mu| tau_unchecked(&cat, &Contramodule::new(m.clone(), mu, Flavor::QuasiTypeI).unwrap(), &v).unwrap();
        let mut expected = tau(mu1);
        expected.add_scaled(&s, &tau(mu2));
        prop_assert_eq!(tau(sum), expected);
    }

    #[test]
    fn conversions_are_identity_without_phi(seed in any::<u64>(), prime in any::<bool>(), h4 in any::<bool>()) {
        let f = field(prime);
        let h = if h4 { sweedler_h4(f) } else { group_algebra(f, &cyclic_group_table(2)).unwrap() };
        let m = h.regular_module();
        let mu = random_matrix(f, m.dim(), m.dim() * h.dim(), &mut rng(seed));
        let c1 = Contramodule::new(m.clone(), mu.clone(), Flavor::QuasiTypeI).unwrap();
        let c2 = convert_i_to_ii(&h, &c1).unwrap();
        prop_assert_eq!(c2.contraaction(), &mu);
        let back = convert_ii_to_i(&h, &Contramodule::new(m, mu.clone(), Flavor::QuasiTypeII).unwrap()).unwrap();
        prop_assert_eq!(back.contraaction(), &mu);
    }

    #[test]
    fn adjunction_roundtrip_on_random_maps(seed in any::<u64>(), prime in any::<bool>()) {
        let f = field(prime);
        let mut r = rng(seed);
        let h = twisted(f);
        let cat = Category::quasi(h);
        let simples = characters(&cat, &[&[1, 0], &[0, 1]]);
        let pick = |r: &mut rand_chacha::ChaCha8Rng| -> Module {
            let k = r.gen_range(1..=3);
            let mut m = simples[r.gen_range(0..2)].clone();
            for _ in 1..k {
                m = m.direct_sum(&simples[r.gen_range(0..2)]).unwrap();
            }
            m
        };
        let (m, n, l) = (pick(&mut r), pick(&mut r), pick(&mut r));
        let mn = cat.tensor(&m, &n).unwrap().module;
        let basis = embedding_basis(&cat.morphisms(&mn, &l).unwrap(), l.dim(), mn.dim());
        let mut g = Matrix::zeros(f, l.dim(), mn.dim());
        for b in &basis {
            g.add_scaled(&random_scalar(f, &mut r), b);
        }
        let z = cat.zeta_l(&m, &n, &l, &g).unwrap();
        prop_assert_eq!(cat.eta_l(&m, &n, &l, &z).unwrap(), g.clone());
        let nm = cat.tensor(&n, &m).unwrap().module;
        let basis = embedding_basis(&cat.morphisms(&nm, &l).unwrap(), l.dim(), nm.dim());
        let mut g = Matrix::zeros(f, l.dim(), nm.dim());
        for b in &basis {
            g.add_scaled(&random_scalar(f, &mut r), b);
        }
        let z = cat.zeta_r(&m, &n, &l, &g).unwrap();
        prop_assert_eq!(cat.eta_r(&m, &n, &l, &z).unwrap(), g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn cyclic_dims_ignore_basis_of_a(seed in any::<u64>(), prime in any::<bool>()) {
        let f = field(prime);
        let h = group_algebra(f, &cyclic_group_table(2)).unwrap();
        let c = unit_coefficient(&h, Flavor::HopfMu).unwrap();
        let e = CenterElement::new(Category::quasi(h), c).unwrap();
        let a = group_function_algebra(e.category(), &cyclic_group_table(2)).unwrap();
        let p = random_invertible(f, 2, &mut rng(seed));
        let pi = p.inverse().unwrap();
        let moved = ModuleAlgebra {
            carrier: a.carrier.transport(&p).unwrap(),
            mult: p.mul(&a.mult).mul(&pi.kron(&pi)),
            unit: p.mul(&a.unit),
        };
        let before = build_cocyclic(&e, &a, 3).unwrap();
        let after = build_cocyclic(&e, &moved, 3).unwrap();
        prop_assert_eq!(before.cyclic_cohomology(2).unwrap().dims, after.cyclic_cohomology(2).unwrap().dims);
        prop_assert_eq!(before.hochschild_cohomology(2).unwrap().dims, after.hochschild_cohomology(2).unwrap().dims);
    }
}
