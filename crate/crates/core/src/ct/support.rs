//! Properly-supporting idempotents and almost-directed pairs.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::indecomposables::all_indecomposables;
use super::CtCatalog;
use crate::algebra::IdempotentQuotient;
use crate::error::Result;
use crate::homology::{ext_dim_from, global_dimension, is_injective, is_projective, projective_resolution};
use crate::module::{decompose, indecomposable_iso, Representation};

/// Default bound on the number of indecomposables enumerated over a quotient.
pub const DEFAULT_QUOTIENT_CAP: usize = 500;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SupportKind {
    Not,
    Proper,
    LeftProper,
    RightProper,
    Both,
}

impl SupportKind {
    pub fn is_proper(self) -> bool {
        self != SupportKind::Not
    }

    pub fn is_left(self) -> bool {
        matches!(self, SupportKind::LeftProper | SupportKind::Both)
    }

    pub fn is_right(self) -> bool {
        matches!(self, SupportKind::RightProper | SupportKind::Both)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportReport {
    pub killed: Vec<usize>,
    pub kind: SupportKind,
    /// `Ext^d(A/⟨e⟩, I) = 0` for injective quotient modules `I`.
    pub ext_vanishing: bool,
    /// `C ∩ mod(A/⟨e⟩)` is `d`-cluster-tilting over the quotient.
    pub quotient_ct: bool,
    pub matches_f: bool,
    pub matches_g: bool,
    pub left: bool,
    pub right: bool,
    /// `A/⟨e⟩` and the injective quotient modules, as `A`-modules, lie in `add C`.
    pub quotient_in_c: bool,
    pub injectives_in_c: bool,
    /// `Ext^i(A/⟨e⟩, I) = 0` for `0 < i ≤ d`.
    pub d_plus_one_idempotent: bool,
    pub quotient_global_dimension: usize,
    /// Catalog indices of the objects living over the quotient.
    pub quotient_objects: Vec<usize>,
}

fn in_list(list: &[Representation], m: &Representation) -> bool {
    list.iter().any(|x| indecomposable_iso(x, m).is_some())
}

fn parts_of(m: &Representation) -> Result<Vec<Representation>> {
    if m.is_zero() {
        return Ok(Vec::new());
    }
    Ok(decompose(m)?.parts)
}

/// Indecomposable summands of a family, without repetition.
fn summand_set(ms: impl Iterator<Item = Representation>) -> Result<Vec<Representation>> {
    let mut out: Vec<Representation> = Vec::new();
    for m in ms {
        for p in parts_of(&m)? {
            if !in_list(&out, &p) {
                out.push(p);
            }
        }
    }
    Ok(out)
}

fn same_set(a: &[Representation], b: &[Representation]) -> bool {
    a.len() == b.len() && a.iter().all(|x| in_list(b, x))
}

/// Checks whether the idempotent on `killed` properly supports the catalog.
pub fn properly_supporting(cat: &CtCatalog, killed: &BTreeSet<usize>) -> Result<SupportReport> {
    let alg = &cat.algebra;
    let d = cat.d;
    let q: IdempotentQuotient = alg.quotient_by_idempotent(killed)?;
    let b = &q.quotient;
    let inside: Vec<usize> = (0..cat.len())
        .filter(|&x| cat.objects[x].support().iter().all(|v| !killed.contains(v)))
        .collect();
    let restricted: Vec<Representation> = inside.iter().map(|&x| cat.objects[x].apply_f(&q).0).collect();
    let mut report = SupportReport {
        killed: killed.iter().copied().collect(),
        kind: SupportKind::Not,
        ext_vanishing: true,
        quotient_ct: true,
        matches_f: true,
        matches_g: true,
        left: true,
        right: true,
        quotient_in_c: true,
        injectives_in_c: true,
        d_plus_one_idempotent: true,
        quotient_global_dimension: 0,
        quotient_objects: inside.clone(),
    };
    if b.n_vertices() == 0 {
        report.kind = SupportKind::Both;
        return Ok(report);
    }

    // A/⟨e⟩ as an A-module against the injective quotient modules
    let top = Representation::regular(alg).apply_g(&q).0.inflate(&q, alg);
    let res = projective_resolution(&top, d + 1);
    let injectives: Vec<Representation> = (0..b.n_vertices()).map(|v| Representation::injective(b, v)).collect();
    let in_c = |m: &Representation| -> Result<bool> { Ok(parts_of(m)?.iter().all(|p| cat.index_of(p).is_some())) };
    report.quotient_in_c = in_c(&top)?;
    for i in &injectives {
        let lifted = i.inflate(&q, alg);
        report.injectives_in_c &= in_c(&lifted)?;
        report.ext_vanishing &= ext_dim_from(&res, d, &lifted) == 0;
        report.d_plus_one_idempotent &= (1..=d).all(|k| ext_dim_from(&res, k, &lifted) == 0);
    }
    report.quotient_global_dimension = global_dimension(b);

    // d-cluster-tilting over the quotient, against every indecomposable quotient module
    let list = all_indecomposables(b, DEFAULT_QUOTIENT_CAP)?;
    let res_c: Vec<_> = restricted.iter().map(|x| projective_resolution(x, d)).collect();
    for m in &list.modules {
        let member = in_list(&restricted, m);
        let res_m = projective_resolution(m, d);
        let left = res_c.iter().all(|r| (1..d).all(|i| ext_dim_from(r, i, m) == 0));
        let right = restricted.iter().all(|x| (1..d).all(|i| ext_dim_from(&res_m, i, x) == 0));
        report.quotient_ct &= member == left && member == right;
    }

    let f_parts = summand_set(cat.objects.iter().map(|x| x.apply_f(&q).0))?;
    let g_parts = summand_set(cat.objects.iter().map(|x| x.apply_g(&q).0))?;
    report.matches_f = same_set(&f_parts, &restricted);
    report.matches_g = same_set(&g_parts, &restricted);

    let g_da = summand_set((0..alg.n_vertices()).map(|v| Representation::injective(alg, v).apply_g(&q).0))?;
    report.left = injectives.iter().all(|i| in_list(&g_da, i));
    let f_a = summand_set((0..alg.n_vertices()).map(|v| Representation::projective(alg, v).apply_f(&q).0))?;
    let projectives: Vec<Representation> = (0..b.n_vertices()).map(|v| Representation::projective(b, v)).collect();
    report.right = same_set(&f_a, &projectives);

    let proper = report.ext_vanishing && report.quotient_ct && report.matches_f && report.matches_g;
    report.kind = match (proper, report.left, report.right) {
        (false, _, _) => SupportKind::Not,
        (true, true, true) => SupportKind::Both,
        (true, true, false) => SupportKind::LeftProper,
        (true, false, true) => SupportKind::RightProper,
        (true, false, false) => SupportKind::Proper,
    };
    Ok(report)
}

/// Idempotents meeting the hypotheses of the ideal corollary whose ideal is not `(d+1)`-idempotent or whose quotient has global dimension above `d`.
pub fn idempotent_ideal_failures(table: &[SupportReport], d: usize) -> Vec<Vec<usize>> {
    table
        .iter()
        .filter(|r| r.quotient_in_c && r.injectives_in_c && r.ext_vanishing)
        .filter(|r| !r.d_plus_one_idempotent || r.quotient_global_dimension > d)
        .map(|r| r.killed.clone())
        .collect()
}

/// Every vertex subset, smallest first.
pub fn vertex_subsets(n: usize) -> Vec<BTreeSet<usize>> {
    let mut all: Vec<BTreeSet<usize>> =
        (0u64..1 << n).map(|mask| (0..n).filter(|v| mask >> v & 1 == 1).collect()).collect();
    all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    all
}

/// Properly-supporting reports for every vertex subset.
pub fn support_table(cat: &CtCatalog) -> Result<Vec<SupportReport>> {
    vertex_subsets(cat.algebra.n_vertices()).iter().map(|k| properly_supporting(cat, k)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlmostDirectedReport {
    /// Relations generated in length two.
    pub length_two: bool,
    /// `dim Ext^i ≤ 1` between catalog objects.
    pub ext_bounded: bool,
    /// Per object, the killed vertices of a left properly-supporting witness.
    pub left_witness: Vec<Option<Vec<usize>>>,
    pub right_witness: Vec<Option<Vec<usize>>>,
    pub holds: bool,
}

/// Checks the four conditions of an almost-directed pair by search over all idempotents.
pub fn is_almost_directed(cat: &CtCatalog) -> Result<AlmostDirectedReport> {
    let table = support_table(cat)?;
    is_almost_directed_with(cat, &table)
}

pub fn is_almost_directed_with(cat: &CtCatalog, table: &[SupportReport]) -> Result<AlmostDirectedReport> {
    let alg = &cat.algebra;
    let length_two = alg.relations().length_two_generated();
    let ext_bounded = cat.ext[1..].iter().flatten().flatten().all(|&e| e <= 1);
    let inj: Vec<bool> = cat.objects.iter().map(is_injective).collect();
    let proj: Vec<bool> = cat.objects.iter().map(is_projective).collect();
    let mut left_witness = vec![None; cat.len()];
    let mut right_witness = vec![None; cat.len()];
    for rep in table {
        let killed: BTreeSet<usize> = rep.killed.iter().copied().collect();
        let q = alg.quotient_by_idempotent(&killed)?;
        for m in 0..cat.len() {
            let here = rep.quotient_objects.contains(&m);
            if left_witness[m].is_none() && rep.kind.is_left() {
                let projective_over = here && is_projective(&cat.objects[m].apply_f(&q).0);
                let into_injectives = rep.quotient_objects.iter().all(|&n| cat.hom[m][n] == 0 || inj[n]);
                if projective_over || into_injectives {
                    left_witness[m] = Some(rep.killed.clone());
                }
            }
            if right_witness[m].is_none() && rep.kind.is_right() {
                let injective_over = here && is_injective(&cat.objects[m].apply_f(&q).0);
                let from_projectives = rep.quotient_objects.iter().all(|&n| cat.hom[n][m] == 0 || proj[n]);
                if injective_over || from_projectives {
                    right_witness[m] = Some(rep.killed.clone());
                }
            }
        }
    }
    let holds = length_two
        && ext_bounded
        && left_witness.iter().all(Option::is_some)
        && right_witness.iter().all(Option::is_some);
    Ok(AlmostDirectedReport { length_two, ext_bounded, left_witness, right_witness, holds })
}
