//! `d`-cluster-tilting catalogs and the structures built on them.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};
use crate::homology::{ext_dim_from, global_dimension, projective_resolution, tau_d, Resolution};
use crate::module::{decompose, hom_dim, indecomposable_iso, Algebra, Representation};
use crate::presentation::endomorphism_presentation;

mod approx;
mod exact;
mod indecomposables;
mod resonance;
mod support;

pub use approx::{left_approximation, right_approximation, AddCategory, Approximation};
pub use exact::{
    canonicalize, d_cokernel, d_kernel, d_pullback, d_pushout, enumerate_d_exact, identify, realize_class, reduce, Chain,
    ChainJson, DExactSequence, LadderDiagram,
};
pub use indecomposables::{all_indecomposables, almost_split_middle, pushout, IndecomposableList};
pub use resonance::{resonance_diagram, ResonanceDiagram};
pub use support::{
    idempotent_ideal_failures, is_almost_directed, is_almost_directed_with, properly_supporting, support_table, vertex_subsets, AlmostDirectedReport,
    SupportKind, SupportReport,
};

/// A `d`-cluster-tilting subcategory given by its indecomposables.
#[derive(Clone, Debug)]
pub struct CtCatalog {
    pub algebra: Algebra,
    pub d: usize,
    pub objects: Vec<Representation>,
    /// `hom[x][y] = dim Hom(X, Y)`.
    pub hom: Vec<Vec<usize>>,
    /// `ext[i][x][y] = dim Ext^i(X, Y)` for `0 ≤ i ≤ d`.
    pub ext: Vec<Vec<Vec<usize>>>,
    /// The objects as an additive category, in the same order.
    pub add: AddCategory,
    resolutions: Vec<Resolution>,
}

pub const DEFAULT_ORBIT_FACTOR: usize = 10;

impl CtCatalog {
    /// Builds a catalog from a list of pairwise non-isomorphic indecomposables.
    pub fn from_objects(algebra: &Algebra, d: usize, mut objects: Vec<Representation>) -> CtCatalog {
        objects.sort_by(|a, b| a.dim_vector().cmp(b.dim_vector()));
        let resolutions: Vec<Resolution> = objects.iter().map(|x| projective_resolution(x, d + 1)).collect();
        let hom = objects.iter().map(|x| objects.iter().map(|y| hom_dim(x, y)).collect()).collect();
        let ext = (0..=d)
            .map(|i| {
                (0..objects.len())
                    .map(|x| objects.iter().map(|y| ext_dim_from(&resolutions[x], i, y)).collect())
                    .collect()
            })
            .collect();
        let add = AddCategory::new(objects.clone());
        CtCatalog { algebra: algebra.clone(), d, objects, hom, ext, add, resolutions }
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn resolution(&self, x: usize) -> &Resolution {
        &self.resolutions[x]
    }

    /// Index of the catalog object isomorphic to an indecomposable `m`.
    pub fn index_of(&self, m: &Representation) -> Option<usize> {
        self.objects.iter().position(|x| indecomposable_iso(x, m).is_some())
    }

    /// Catalog indices (with repetition) of the indecomposable summands of `m`.
    pub fn summand_indices(&self, m: &Representation) -> Result<Vec<usize>> {
        let d = decompose(m)?;
        d.parts
            .iter()
            .map(|p| self.index_of(p).ok_or_else(|| Error::Falsification(format!("{:?} is not in the catalog", p.dim_vector()))))
            .collect()
    }

    /// Indices of indecomposable projectives and injectives.
    pub fn projective_indices(&self) -> Vec<usize> {
        (0..self.algebra.n_vertices())
            .filter_map(|v| self.index_of(&Representation::projective(&self.algebra, v)))
            .collect()
    }

    pub fn injective_indices(&self) -> Vec<usize> {
        (0..self.algebra.n_vertices())
            .filter_map(|v| self.index_of(&Representation::injective(&self.algebra, v)))
            .collect()
    }

    /// Additive generator `⊕ X` of the catalog.
    pub fn generator(&self) -> Representation {
        Representation::direct_sum(&self.algebra, &self.objects)
    }

    pub fn sum_of(&self, idx: &[usize]) -> Representation {
        let parts: Vec<Representation> = idx.iter().map(|&i| self.objects[i].clone()).collect();
        Representation::direct_sum(&self.algebra, &parts)
    }

    /// One `d`-exact sequence per basis class of `Ext^d` between catalog objects.
    pub fn d_exact_sequences(&self) -> Result<Vec<DExactSequence>> {
        enumerate_d_exact(&self.add, &self.resolutions, self.d)
    }

    /// Whether the middle Ext groups vanish inside the catalog, in both arguments.
    pub fn is_rigid(&self) -> bool {
        (1..self.d).all(|i| self.ext[i].iter().flatten().all(|&e| e == 0))
    }

    pub fn to_json(&self) -> CatalogJson {
        let q = self.algebra.quiver();
        CatalogJson {
            algebra: self.algebra.digest(),
            d: self.d,
            vertices: q.labels().to_vec(),
            objects: self.objects.iter().map(|x| x.dim_vector().to_vec()).collect(),
            hom: self.hom.clone(),
            ext: self.ext[1..].to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogJson {
    pub algebra: String,
    pub d: usize,
    pub vertices: Vec<u32>,
    /// Dimension vectors in vertex order.
    pub objects: Vec<Vec<usize>>,
    pub hom: Vec<Vec<usize>>,
    /// `ext[i-1][x][y] = dim Ext^i(X, Y)` for `1 ≤ i ≤ d`.
    pub ext: Vec<Vec<Vec<usize>>>,
}

/// `add{τ_d^i(DA)}`, requiring `gl.dim A ≤ d`.
pub fn build_ct_catalog(algebra: &Algebra, d: usize, orbit_cap: Option<usize>) -> Result<CtCatalog> {
    if d == 0 {
        return Err(Error::InvalidInput("d must be positive".into()));
    }
    let gd = global_dimension(algebra);
    if gd > d {
        return Err(Error::Precondition(format!("global dimension {gd} exceeds d = {d}")));
    }
    let cap = orbit_cap.unwrap_or(DEFAULT_ORBIT_FACTOR * algebra.n_vertices().max(1));
    let mut objects: Vec<Representation> = Vec::new();
    let mut queue: Vec<Representation> = Vec::new();
    for v in 0..algebra.n_vertices() {
        let i = Representation::injective(algebra, v);
        if !objects.iter().any(|x| indecomposable_iso(x, &i).is_some()) {
            objects.push(i.clone());
            queue.push(i);
        }
    }
    let mut steps = 0;
    while let Some(x) = queue.pop() {
        steps += 1;
        if steps > cap {
            return Err(Error::CapExceeded(format!("τ_{d}-orbit closure exceeded {cap} steps")));
        }
        let y = tau_d(d, &x)?;
        for part in decompose(&y)?.parts {
            if !objects.iter().any(|o| indecomposable_iso(o, &part).is_some()) {
                objects.push(part.clone());
                queue.push(part);
            }
        }
    }
    let cat = CtCatalog::from_objects(algebra, d, objects);
    if cat.projective_indices().len() != algebra.n_vertices() {
        return Err(Error::Falsification("the τ_d-closure of DA misses a projective".into()));
    }
    Ok(cat)
}

/// Result of checking a catalog against every indecomposable module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CtCertificate {
    pub certified: bool,
    /// Indecomposables in the catalog violating rigidity, or outside it but orthogonal to it.
    pub violators: Vec<Vec<usize>>,
    pub indecomposables_checked: usize,
}

/// Checks `C = {M : Ext^i(C, M) = 0, 0<i<d} = {M : Ext^i(M, C) = 0, 0<i<d}` on all indecomposables.
pub fn certify_ct(cat: &CtCatalog, cap: usize) -> Result<CtCertificate> {
    let list = all_indecomposables(&cat.algebra, cap)?;
    let res: Vec<Resolution> = list.modules.iter().map(|m| projective_resolution(m, cat.d)).collect();
    let mut violators = Vec::new();
    for (k, m) in list.modules.iter().enumerate() {
        let inside = cat.index_of(m).is_some();
        let left = (0..cat.len()).all(|x| (1..cat.d).all(|i| ext_dim_from(&cat.resolutions[x], i, m) == 0));
        let right = (0..cat.len()).all(|x| (1..cat.d).all(|i| ext_dim_from(&res[k], i, &cat.objects[x]) == 0));
        if inside != left || inside != right {
            violators.push(m.dim_vector().to_vec());
        }
    }
    Ok(CtCertificate { certified: violators.is_empty(), violators, indecomposables_checked: list.modules.len() })
}

/// The `d`-Auslander algebra of linearly oriented `A_n`, with every intermediate catalog.
pub struct AuslanderTower {
    pub algebras: Vec<Algebra>,
    pub catalogs: Vec<CtCatalog>,
}

impl AuslanderTower {
    pub fn top(&self) -> &Algebra {
        self.algebras.last().unwrap()
    }
}

pub fn iterate_auslander_tower(n: usize, d: usize) -> Result<AuslanderTower> {
    if n == 0 || d == 0 {
        return Err(Error::InvalidInput("n and d must be positive".into()));
    }
    let mut algebras: Vec<Algebra> = vec![Arc::new(BoundQuiverAlgebra::linear_an(n, None)?)];
    let mut catalogs = Vec::new();
    for m in 1..d {
        let cat = build_ct_catalog(algebras.last().unwrap(), m, None)?;
        let pres = endomorphism_presentation(&cat.objects)?;
        catalogs.push(cat);
        algebras.push(Arc::new(pres.algebra));
    }
    Ok(AuslanderTower { algebras, catalogs })
}

pub fn iterate_auslander(n: usize, d: usize) -> Result<BoundQuiverAlgebra> {
    let tower = iterate_auslander_tower(n, d)?;
    Ok((**tower.top()).clone())
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::module::Morphism;

    fn eg1() -> CtCatalog {
        let a: Algebra = Arc::new(iterate_auslander(3, 2).unwrap());
        build_ct_catalog(&a, 2, None).unwrap()
    }

    fn nakayama(n: usize, r: usize) -> Algebra {
        Arc::new(BoundQuiverAlgebra::linear_an(n, Some(r)).unwrap())
    }

    #[test]
    fn auslander_algebra_of_a3() {
        let a = iterate_auslander(3, 2).unwrap();
        assert_eq!(a.n_vertices(), 6);
        assert_eq!(a.quiver().arrows().len(), 6);
        assert_eq!(a.relations().zero_relations().count(), 2);
        assert_eq!(a.relations().commutativity_relations().count(), 1);
        assert!(a.relations().length_two_generated());
        assert_eq!(iterate_auslander(2, 2).unwrap().n_vertices(), 3);
        assert_eq!(iterate_auslander(1, 3).unwrap().n_vertices(), 1);
    }

    #[test]
    fn hereditary_catalogs_hold_everything() {
        for n in 1..=4 {
            let a: Algebra = Arc::new(BoundQuiverAlgebra::linear_an(n, None).unwrap());
            assert_eq!(build_ct_catalog(&a, 1, None).unwrap().len(), n * (n + 1) / 2);
        }
    }

    #[test]
    fn eg1_catalog_is_certified() {
        let cat = eg1();
        assert_eq!(cat.len(), 10);
        assert!(cat.is_rigid());
        let cert = certify_ct(&cat, 200).unwrap();
        assert!(cert.certified, "{:?}", cert.violators);
        let mut objects = cat.objects.clone();
        objects.retain(|o| o.total_dim() != 4);
        let smaller = CtCatalog::from_objects(&cat.algebra, 2, objects);
        assert!(!certify_ct(&smaller, 200).unwrap().certified);
    }

    #[test]
    fn nakayama_catalog_needs_d4() {
        let a = nakayama(7, 3);
        assert!(matches!(build_ct_catalog(&a, 2, None), Err(Error::Precondition(_))));
        let cat = build_ct_catalog(&a, 4, None).unwrap();
        let mut expected: Vec<Representation> = (0..7).map(|v| Representation::projective(&a, v)).collect();
        expected.push(Representation::injective(&a, 0));
        expected.push(Representation::injective(&a, 1));
        assert_eq!(cat.len(), 9);
        assert!(expected.iter().all(|m| cat.index_of(m).is_some()));
        assert!(certify_ct(&cat, 100).unwrap().certified);
    }

    #[test]
    fn sequences_realize_every_class() {
        let cat = eg1();
        let seqs = cat.d_exact_sequences().unwrap();
        let classes: usize = cat.ext[2].iter().flatten().sum();
        assert_eq!(seqs.len(), classes);
        for s in &seqs {
            assert!(s.is_exact() && s.is_reduced(&cat.add));
            assert_eq!(s.len(), 4);
        }
        assert_eq!(seqs.iter().filter(|s| s.all_indecomposable()).count(), 5);
    }

    #[test]
    fn pushout_and_pullback_along_identities() {
        let cat = eg1();
        let seq = cat.d_exact_sequences().unwrap().remove(0);
        let up = d_pushout(&cat.add, &seq, &Morphism::identity(&seq.modules[0])).unwrap();
        assert!(up.commutes() && up.induced.is_exact());
        assert_eq!(up.lower.terms, seq.terms);
        let last = seq.modules.last().unwrap();
        let down = d_pullback(&cat.add, &seq, &Morphism::identity(last)).unwrap();
        assert!(down.commutes() && down.induced.is_exact());
        assert_eq!(down.upper.terms, seq.terms);
    }

    #[test]
    fn pushout_along_a_radical_map() {
        let cat = eg1();
        for seq in cat.d_exact_sequences().unwrap() {
            let x0 = seq.first()[0];
            for y in 0..cat.len() {
                if y == x0 {
                    continue;
                }
                for f in crate::module::hom_space(&seq.modules[0], &cat.objects[y]) {
                    let ladder = d_pushout(&cat.add, &seq, &f).unwrap();
                    assert!(ladder.commutes());
                    assert!(ladder.lower.is_exact() && ladder.induced.is_exact());
                    assert_eq!(ladder.lower.last(), seq.last());
                }
            }
        }
    }

    #[test]
    fn kernels_stay_in_the_catalog() {
        let cat = eg1();
        let d = cat.d;
        for x in 0..cat.len() {
            for y in 0..cat.len() {
                for f in crate::module::hom_space(&cat.objects[x], &cat.objects[y]) {
                    let k = d_kernel(&cat.add, d, &f).unwrap();
                    assert_eq!(k.len(), d + 2);
                    assert!(k.maps[0].is_injective() && k.is_exact_inside());
                    let c = d_cokernel(&cat.add, d, &f).unwrap();
                    assert!(c.maps.last().unwrap().is_surjective() && c.is_exact_inside());
                }
            }
        }
    }

    #[test]
    fn eg1_resonance_grid() {
        let cat = eg1();
        let pool: Vec<DExactSequence> =
            cat.d_exact_sequences().unwrap().into_iter().filter(|s| s.all_indecomposable()).collect();
        let (a, b, i, j) = pool
            .iter()
            .enumerate()
            .flat_map(|(p, a)| pool.iter().skip(p + 1).map(move |b| (a, b)))
            .find_map(|(a, b)| {
                (0..4).flat_map(|i| (i..4).map(move |j| (i, j))).find_map(|(i, j)| {
                    if a.terms[i] == b.terms[j] {
                        Some((a, b, i, j))
                    } else if b.terms[i] == a.terms[j] {
                        Some((b, a, i, j))
                    } else {
                        None
                    }
                })
            })
            .unwrap();
        let diagram = resonance_diagram(&cat.add, &pool, a, b, i, j).unwrap();
        assert_eq!(diagram.rows.len(), 5);
        assert!(diagram.terms_twice && diagram.squares_commute);
        assert!(diagram.intermediates.iter().all(|s| s.is_exact()));
        let same = resonance_diagram(&cat.add, &pool, a, a, 1, 1).unwrap();
        assert_eq!(same.rows.len(), 1);
    }

    #[test]
    fn support_checks() {
        let cat = eg1();
        assert_eq!(properly_supporting(&cat, &BTreeSet::new()).unwrap().kind, SupportKind::Both);
        let report = is_almost_directed(&cat).unwrap();
        assert!(report.holds, "{report:?}");

        let a = nakayama(7, 3);
        let cat = build_ct_catalog(&a, 4, None).unwrap();
        // at d = 4 the truncation to vertices 1..5 is not cluster-tilting, but the simple ends are
        let r = properly_supporting(&cat, &[5, 6].into_iter().collect()).unwrap();
        assert!(!r.kind.is_proper() && !r.quotient_ct);
        let proper: Vec<Vec<usize>> =
            support_table(&cat).unwrap().into_iter().filter(|r| r.kind.is_proper()).map(|r| r.killed).collect();
        assert_eq!(proper, vec![vec![], vec![0, 1, 2, 3, 4, 5], vec![1, 2, 3, 4, 5, 6], (0..7).collect()]);
        let report = is_almost_directed(&cat).unwrap();
        // relations of length three break the first condition only
        assert!(!report.length_two && report.ext_bounded && !report.holds);
        assert!(report.left_witness.iter().chain(&report.right_witness).all(Option::is_some));
    }
}
