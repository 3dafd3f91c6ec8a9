//! Module-category computations checked against the dense oracle, and worked examples end to end.

mod common;

use std::sync::OnceLock;

use common::*;
use hitt::ct::{all_indecomposables, build_ct_catalog};
use hitt::error::Error;
use hitt::homology::{ext_dim as engine_ext, global_dimension, hom_tau_ext_check, tau_d};
use hitt::io::CatalogFile;
use hitt::module::{decompose, hom_dim as engine_hom, hom_space, Representation};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn eg1_algebra_modules() -> &'static Vec<Representation> {
    static CELL: OnceLock<Vec<Representation>> = OnceLock::new();
    CELL.get_or_init(|| all_indecomposables(&auslander(3, 2), 400).unwrap().modules)
}

#[test]
fn tower_catalog_sizes() {
    let binomial = |n: usize, k: usize| (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1));
    for n in 1..=5 {
        assert_eq!(build_ct_catalog(&path_an(n), 1, None).unwrap().len(), n * (n + 1) / 2);
    }
    for (n, d) in [(2, 2), (3, 2), (4, 2), (2, 3), (3, 3)] {
        assert_eq!(build_ct_catalog(&auslander(n, d), d, None).unwrap().len(), binomial(n + d, d + 1), "({n}, {d})");
    }
    assert_eq!(build_ct_catalog(&nakayama(7, 3), 4, None).unwrap().len(), 9);
}

#[test]
fn catalog_needs_global_dimension_at_most_d() {
    assert_eq!(global_dimension(&nakayama(7, 3)), 4);
    assert!(matches!(build_ct_catalog(&nakayama(7, 3), 2, None), Err(Error::Precondition(_))));
}

#[test]
fn eg1_algebra_is_representation_finite() {
    let mods = eg1_algebra_modules();
    assert!(mods.iter().all(|m| decompose(m).unwrap().len() == 1));
    assert!(mods.iter().all(|m| m.total_dim() <= 6));
}

#[test]
fn hom_tau_ext_duality_on_catalogs() {
    for cat in [eg1(), eg2()] {
        for m in &cat.objects {
            for n in &cat.objects {
                assert!(hom_tau_ext_check(cat.d, m, n).unwrap());
            }
        }
    }
}

#[test]
fn tau_d_moves_along_the_eg1_catalog() {
    let cat = eg1();
    for x in cat.injective_indices() {
        let t = tau_d(2, &cat.objects[x]).unwrap();
        assert!(t.is_zero() || cat.index_of(&t).is_some());
    }
}

#[test]
fn catalog_files_reload() {
    for cat in [eg1(), eg2()] {
        let file = CatalogFile::new(&cat, 7).unwrap();
        let text = serde_json::to_string(&file).unwrap();
        let back: CatalogFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.load().unwrap().objects, cat.objects);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hom_ext_kernel_match_oracle(x in 0usize..1000, y in 0usize..1000) {
        let mods = eg1_algebra_modules();
        let (m, n) = (&mods[x % mods.len()], &mods[y % mods.len()]);
        prop_assert_eq!(engine_hom(m, n), hom_dim(m, n));
        for i in 1..=3 {
            prop_assert_eq!(engine_ext(i, m, n), ext_dim(i, m, n));
        }
        for f in hom_space(m, n) {
            prop_assert_eq!(f.kernel().source.total_dim(), kernel_dim(&f));
        }
    }

    #[test]
    fn krull_schmidt_on_random_sums(picks in proptest::collection::vec(0usize..1000, 1..4), seed in any::<u64>()) {
        let alg = auslander(3, 2);
        let mods = eg1_algebra_modules();
        let chosen: Vec<Representation> = picks.iter().map(|&k| mods[k % mods.len()].clone()).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = conjugate(&mut rng, &Representation::direct_sum(&alg, &chosen));
        let d = decompose(&m).unwrap();
        prop_assert!(d.verify(&m));
        prop_assert!(same_multiset(&d.parts, &chosen));
    }
}
