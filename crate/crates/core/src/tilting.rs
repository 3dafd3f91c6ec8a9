//! Support-`d`-tilting modules, strong torsion classes and strong torsion-free classes.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::{Arc, Mutex};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::algebra::IdempotentQuotient;
use crate::ct::{left_approximation, right_approximation, support_table, AddCategory, Chain, CtCatalog, SupportReport};
use crate::error::{Error, Result};
use crate::homology::{ext_dim_from, injective_resolution, projective_resolution};
use crate::linalg::Matrix;
use crate::module::{decompose, hom_dim, hom_space, indecomposable_iso, Representation};
use crate::rational::Q;

/// Default bound on the number of candidate summand sets examined.
pub const DEFAULT_SUBSET_CAP: usize = 200_000;

/// Catalogs larger than this are not searched exhaustively for torsion classes.
pub const DEFAULT_PROBE_CAP: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportData {
    pub support: Vec<usize>,
    pub killed: Vec<usize>,
    pub annihilator_dim: usize,
    /// `dim ⟨e⟩` for the idempotent on the killed vertices.
    pub ideal_dim: usize,
}

impl SupportData {
    /// `ann(M) = ⟨e_M⟩`; the inclusion `⊇` always holds.
    pub fn annihilator_is_idempotent(&self) -> bool {
        self.annihilator_dim == self.ideal_dim
    }
}

/// Per nonempty block `e_t A e_s`, the matrix whose column `b` is the action of basis path `b`.
fn block_actions(m: &Representation) -> Vec<Matrix> {
    let alg = m.algebra();
    let n = alg.n_vertices();
    let mut out = Vec::new();
    for s in 0..n {
        for t in 0..n {
            let block = alg.basis_between(s, t);
            if block.is_empty() {
                continue;
            }
            let cols: Vec<Vec<Q>> = block.iter().map(|&b| m.path_matrix(alg.basis_path(b)).entries().to_vec()).collect();
            out.push(Matrix::from_cols(m.dim(s) * m.dim(t), &cols));
        }
    }
    out
}

fn annihilator_dim_of(actions: &[&Vec<Matrix>], n_blocks: usize) -> usize {
    (0..n_blocks)
        .map(|k| {
            let cols = actions.first().map_or(0, |a| a[k].cols());
            let stacked = actions.iter().fold(Matrix::zeros(0, cols), |acc, a| acc.vstack(&a[k]));
            if actions.is_empty() {
                return 0;
            }
            stacked.cols() - stacked.rank()
        })
        .sum()
}

pub fn support_data(m: &Representation) -> SupportData {
    let alg = m.algebra();
    let support = m.support();
    let killed: BTreeSet<usize> = (0..alg.n_vertices()).filter(|v| !support.contains(v)).collect();
    let annihilator_dim = block_actions(m).iter().map(|b| b.cols() - b.rank()).sum();
    SupportData {
        support: support.into_iter().collect(),
        ideal_dim: alg.idempotent_ideal(&killed).cols(),
        killed: killed.into_iter().collect(),
        annihilator_dim,
    }
}

/// Catalog objects living over `A/⟨e⟩`, with homological data computed over the quotient.
#[derive(Clone, Debug)]
pub struct QuotientData {
    pub killed: Vec<usize>,
    pub quotient: IdempotentQuotient,
    /// Catalog indices, in catalog order.
    pub objects: Vec<usize>,
    pub modules: Vec<Representation>,
    /// `ext[i][x][y] = dim Ext^i_B(X, Y)` on local indices, `0 ≤ i ≤ d`.
    pub ext: Vec<Vec<Vec<usize>>>,
    pub pd_at_most_d: Vec<bool>,
    pub id_at_most_d: Vec<bool>,
    d: usize,
}

impl QuotientData {
    pub fn new(cat: &CtCatalog, killed: &[usize]) -> Result<QuotientData> {
        let set: BTreeSet<usize> = killed.iter().copied().collect();
        let quotient = cat.algebra.quotient_by_idempotent(&set)?;
        let d = cat.d;
        let objects: Vec<usize> =
            (0..cat.len()).filter(|&x| cat.objects[x].support().iter().all(|v| !set.contains(v))).collect();
        let modules: Vec<Representation> = objects.iter().map(|&x| cat.objects[x].apply_f(&quotient).0).collect();
        let res: Vec<_> = modules.iter().map(|x| projective_resolution(x, d + 1)).collect();
        let ext = (0..=d)
            .map(|i| (0..modules.len()).map(|x| modules.iter().map(|y| ext_dim_from(&res[x], i, y)).collect()).collect())
            .collect();
        let pd_at_most_d = res.iter().map(|r| r.length().is_none_or(|l| l <= d)).collect();
        let id_at_most_d =
            modules.iter().map(|x| injective_resolution(x, d + 1).length().is_none_or(|l| l <= d)).collect();
        Ok(QuotientData { killed: set.into_iter().collect(), quotient, objects, modules, ext, pd_at_most_d, id_at_most_d, d })
    }

    pub fn local(&self, x: usize) -> Option<usize> {
        self.objects.binary_search(&x).ok()
    }

    fn ext_free(&self, s: &[usize], t: &[usize]) -> bool {
        s.iter().all(|&x| t.iter().all(|&y| (1..=self.d).all(|i| self.ext[i][x][y] == 0)))
    }

    pub fn is_pre_tilting(&self, s: &[usize]) -> bool {
        s.iter().all(|&x| self.pd_at_most_d[x]) && self.ext_free(s, s)
    }

    pub fn is_pre_cotilting(&self, s: &[usize]) -> bool {
        s.iter().all(|&x| self.id_at_most_d[x]) && self.ext_free(s, s)
    }

    fn sub_category(&self, s: &[usize]) -> AddCategory {
        AddCategory::new(s.iter().map(|&x| self.modules[x].clone()).collect())
    }

    fn globals(&self, s: &[usize], idx: &[usize]) -> Vec<usize> {
        idx.iter().map(|&k| self.objects[s[k]]).collect()
    }

    /// Terms (catalog indices) of `0 → B → T_0 → ⋯ → T_k → 0` built from left `add T`-approximations, `k ≤ d`.
    pub fn coresolution(&self, s: &[usize]) -> Option<Vec<Vec<usize>>> {
        let sub = self.sub_category(s);
        let mut m = Representation::regular(&self.quotient.quotient);
        let mut terms = Vec::new();
        for _ in 0..=self.d {
            if m.is_zero() {
                break;
            }
            let a = left_approximation(&sub, &m);
            if !a.map.is_injective() {
                return None;
            }
            terms.push(self.globals(s, &a.indices));
            m = a.map.cokernel().target;
        }
        m.is_zero().then_some(terms)
    }

    /// Terms of `0 → T_k → ⋯ → T_0 → M → 0` built from right `add T`-approximations, `k ≤ d`.
    pub fn add_resolution(&self, s: &[usize], m: &Representation) -> Option<Vec<Vec<usize>>> {
        let sub = self.sub_category(s);
        let mut m = m.clone();
        let mut terms = Vec::new();
        for _ in 0..=self.d {
            if m.is_zero() {
                break;
            }
            let a = right_approximation(&sub, &m);
            if !a.map.is_surjective() {
                return None;
            }
            terms.push(self.globals(s, &a.indices));
            m = a.map.kernel().source;
        }
        m.is_zero().then_some(terms)
    }

    /// `add T`-resolution of `DB`.
    pub fn dual_resolution(&self, s: &[usize]) -> Option<Vec<Vec<usize>>> {
        let b = &self.quotient.quotient;
        let parts: Vec<Representation> = (0..b.n_vertices()).map(|v| Representation::injective(b, v)).collect();
        self.add_resolution(s, &Representation::direct_sum(b, &parts))
    }

    /// No further quotient catalog object keeps `s` pre-`d`-tilting.
    pub fn is_maximal_pre_tilting(&self, s: &[usize]) -> bool {
        (0..self.objects.len()).filter(|x| !s.contains(x)).all(|x| {
            let mut bigger = s.to_vec();
            bigger.push(x);
            !self.is_pre_tilting(&bigger)
        })
    }

    pub fn is_tilting(&self, s: &[usize]) -> bool {
        self.is_pre_tilting(s) && self.coresolution(s).is_some()
    }

    pub fn is_cotilting(&self, s: &[usize]) -> bool {
        self.is_pre_cotilting(s) && self.dual_resolution(s).is_some()
    }

    /// Local indices of the distinct indecomposable summands of a quotient module, if all are catalog objects.
    pub fn summands_of(&self, m: &Representation) -> Result<Option<Vec<usize>>> {
        let mut out = BTreeSet::new();
        if m.is_zero() {
            return Ok(Some(Vec::new()));
        }
        for p in decompose(m)?.parts {
            match self.modules.iter().position(|x| indecomposable_iso(x, &p).is_some()) {
                Some(k) => {
                    out.insert(k);
                }
                None => return Ok(None),
            }
        }
        Ok(Some(out.into_iter().collect()))
    }
}

/// Properties of a basic module `T = ⊕ X`, given by catalog indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TiltingVerdict {
    pub summands: Vec<usize>,
    /// Vertices outside the support of `T`.
    pub killed: Vec<usize>,
    /// `ann(T) = ⟨e_T⟩`.
    pub annihilator_idempotent: bool,
    pub pre_d_tilting: bool,
    pub d_tilting: bool,
    pub d_cotilting: bool,
    pub support_pre_d_tilting: bool,
    pub support_d_tilting: bool,
    pub support_d_cotilting: bool,
    /// `e_T` is properly supporting.
    pub proper: bool,
    /// Support pre-`d`-tilting, and no catalog object over `A/⟨e_T⟩` can be added keeping it pre-`d`-tilting there.
    pub maximal_pre: bool,
    /// Terms of the `add T`-coresolution of `A/⟨e_T⟩`.
    pub coresolution: Option<Vec<Vec<usize>>>,
}

impl TiltingVerdict {
    pub fn is_proper_support_d_tilting(&self) -> bool {
        self.proper && self.support_d_tilting
    }
}

/// Images and joint kernels of all morphisms between catalog objects, for `Fac` and `Sub` tests.
#[derive(Clone, Debug)]
pub struct TraceTable {
    dims: Vec<Vec<usize>>,
    /// `images[x][m][v]`: span of `f_v` over `f : X → M`.
    images: Vec<Vec<Vec<Matrix>>>,
    /// `coimages[m][x][v]`: rows of `f_v` over `f : M → X`.
    coimages: Vec<Vec<Vec<Matrix>>>,
}

impl TraceTable {
    pub fn new(cat: &CtCatalog) -> TraceTable {
        let n = cat.len();
        let nv = cat.algebra.n_vertices();
        let dims: Vec<Vec<usize>> = cat.objects.iter().map(|x| x.dim_vector().to_vec()).collect();
        let mut images = vec![vec![Vec::new(); n]; n];
        let mut coimages = vec![vec![Vec::new(); n]; n];
        for x in 0..n {
            for m in 0..n {
                let homs = hom_space(&cat.objects[x], &cat.objects[m]);
                images[x][m] = (0..nv)
                    .map(|v| {
                        homs.iter().fold(Matrix::zeros(dims[m][v], 0), |acc, h| acc.hstack(h.map(v))).col_basis()
                    })
                    .collect();
                coimages[x][m] = (0..nv)
                    .map(|v| homs.iter().fold(Matrix::zeros(0, dims[x][v]), |acc, h| acc.vstack(h.map(v))))
                    .collect();
            }
        }
        TraceTable { dims, images, coimages }
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    /// `M` is a quotient of a module in `add(gens)`.
    pub fn generated_by(&self, gens: &[usize], m: usize) -> bool {
        self.dims[m].iter().enumerate().all(|(v, &dv)| {
            dv == 0 || gens.iter().fold(Matrix::zeros(dv, 0), |acc, &x| acc.hstack(&self.images[x][m][v])).rank() == dv
        })
    }

    /// `M` is a submodule of a module in `add(gens)`.
    pub fn cogenerated_by(&self, gens: &[usize], m: usize) -> bool {
        self.dims[m].iter().enumerate().all(|(v, &dv)| {
            dv == 0 || gens.iter().fold(Matrix::zeros(0, dv), |acc, &x| acc.vstack(&self.coimages[m][x][v])).rank() == dv
        })
    }
}

/// `Fac(add gens) ∩ C`.
pub fn fac_cap_c(trace: &TraceTable, gens: &[usize]) -> Vec<usize> {
    (0..trace.len()).filter(|&m| trace.generated_by(gens, m)).collect()
}

/// `Sub(add gens) ∩ C`.
pub fn sub_cap_c(trace: &TraceTable, gens: &[usize]) -> Vec<usize> {
    (0..trace.len()).filter(|&m| trace.cogenerated_by(gens, m)).collect()
}

/// Objects `M` of the class with `Ext^d(M, class) = 0`.
pub fn ext_projectives(cat: &CtCatalog, class: &[usize]) -> Vec<usize> {
    class.iter().copied().filter(|&m| class.iter().all(|&n| cat.ext[cat.d][m][n] == 0)).collect()
}

/// Objects `M` of the class with `Ext^d(class, M) = 0`.
pub fn ext_injectives(cat: &CtCatalog, class: &[usize]) -> Vec<usize> {
    class.iter().copied().filter(|&m| class.iter().all(|&n| cat.ext[cat.d][n][m] == 0)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomCheck {
    /// Closed under quotients (torsion) or submodules (torsion-free) inside the catalog.
    pub first: bool,
    /// Middle terms of `d`-exact sequences with neighbours in the class lie in the class.
    pub second: bool,
    pub witnesses: Vec<String>,
}

impl AxiomCheck {
    pub fn holds(&self) -> bool {
        self.first && self.second
    }
}

fn inside(class: &[usize], term: &[usize]) -> bool {
    term.iter().all(|x| class.contains(x))
}

fn sequence_closed(seqs: &[Chain], class: &[usize], witnesses: &mut Vec<String>) -> bool {
    let mut ok = true;
    for (k, s) in seqs.iter().enumerate() {
        for i in 1..s.len() - 1 {
            if inside(class, &s.terms[i - 1]) && inside(class, &s.terms[i + 1]) && !inside(class, &s.terms[i]) {
                ok = false;
                witnesses.push(format!("sequence {k}: term {i} {:?} leaves the class", s.terms[i]));
            }
        }
    }
    ok
}

/// Checks (T1) and (T2) against the given `d`-exact sequences.
pub fn check_torsion_class(trace: &TraceTable, seqs: &[Chain], class: &[usize]) -> AxiomCheck {
    let mut witnesses = Vec::new();
    let extra: Vec<usize> = fac_cap_c(trace, class).into_iter().filter(|x| !class.contains(x)).collect();
    for x in &extra {
        witnesses.push(format!("object {x} is a quotient of the class"));
    }
    let second = sequence_closed(seqs, class, &mut witnesses);
    AxiomCheck { first: extra.is_empty(), second, witnesses }
}

/// Checks (C1) and (C2) against the given `d`-exact sequences.
pub fn check_torsion_free_class(trace: &TraceTable, seqs: &[Chain], class: &[usize]) -> AxiomCheck {
    let mut witnesses = Vec::new();
    let extra: Vec<usize> = sub_cap_c(trace, class).into_iter().filter(|x| !class.contains(x)).collect();
    for x in &extra {
        witnesses.push(format!("object {x} is a submodule of the class"));
    }
    let second = sequence_closed(seqs, class, &mut witnesses);
    AxiomCheck { first: extra.is_empty(), second, witnesses }
}

/// Shared state for tilting computations over one catalog.
pub struct TiltingContext<'a> {
    pub cat: &'a CtCatalog,
    pub table: Vec<SupportReport>,
    pub trace: TraceTable,
    actions: Vec<Vec<Matrix>>,
    n_blocks: usize,
    quotients: Mutex<BTreeMap<Vec<usize>, Arc<QuotientData>>>,
}

impl<'a> TiltingContext<'a> {
    pub fn new(cat: &'a CtCatalog) -> Result<TiltingContext<'a>> {
        let table = support_table(cat)?;
        Ok(TiltingContext::with_table(cat, table))
    }

    pub fn with_table(cat: &'a CtCatalog, table: Vec<SupportReport>) -> TiltingContext<'a> {
        let actions: Vec<Vec<Matrix>> = cat.objects.iter().map(block_actions).collect();
        let alg = &cat.algebra;
        let n = alg.n_vertices();
        let n_blocks = (0..n).flat_map(|s| (0..n).map(move |t| (s, t))).filter(|&(s, t)| !alg.basis_between(s, t).is_empty()).count();
        TiltingContext { cat, table, trace: TraceTable::new(cat), actions, n_blocks, quotients: Mutex::new(BTreeMap::new()) }
    }

    pub fn report(&self, killed: &[usize]) -> Option<&SupportReport> {
        self.table.iter().find(|r| r.killed == killed)
    }

    pub fn quotient(&self, killed: &[usize]) -> Result<Arc<QuotientData>> {
        if let Some(q) = self.quotients.lock().expect("quotient cache").get(killed) {
            return Ok(q.clone());
        }
        let q = Arc::new(QuotientData::new(self.cat, killed)?);
        self.quotients.lock().expect("quotient cache").insert(killed.to_vec(), q.clone());
        Ok(q)
    }

    /// Vertices outside the joint support of the objects.
    pub fn killed_of(&self, t: &[usize]) -> Vec<usize> {
        let mut support = BTreeSet::new();
        for &x in t {
            support.extend(self.cat.objects[x].support());
        }
        (0..self.cat.algebra.n_vertices()).filter(|v| !support.contains(v)).collect()
    }

    pub fn annihilator_is_idempotent(&self, t: &[usize]) -> bool {
        let killed: BTreeSet<usize> = self.killed_of(t).into_iter().collect();
        let acts: Vec<&Vec<Matrix>> = t.iter().map(|&x| &self.actions[x]).collect();
        let ann = if t.is_empty() { self.cat.algebra.dim() } else { annihilator_dim_of(&acts, self.n_blocks) };
        ann == self.cat.algebra.idempotent_ideal(&killed).cols()
    }

    fn locals(q: &QuotientData, t: &[usize]) -> Vec<usize> {
        t.iter().map(|&x| q.local(x).expect("object outside its own support")).collect()
    }

    pub fn is_support_pre_tilting(&self, t: &[usize]) -> Result<bool> {
        if !self.annihilator_is_idempotent(t) {
            return Ok(false);
        }
        let q = self.quotient(&self.killed_of(t))?;
        Ok(q.is_pre_tilting(&Self::locals(&q, t)))
    }

    pub fn verdict(&self, t: &[usize]) -> Result<TiltingVerdict> {
        let t: Vec<usize> = t.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        if let Some(&x) = t.iter().find(|&&x| x >= self.cat.len()) {
            return Err(Error::InvalidInput(format!("object {x} is not in the catalog")));
        }
        let killed = self.killed_of(&t);
        let whole = self.quotient(&[])?;
        let q = self.quotient(&killed)?;
        let local = Self::locals(&q, &t);
        let annihilator_idempotent = self.annihilator_is_idempotent(&t);
        let pre_d_tilting = whole.is_pre_tilting(&t);
        let d_tilting = pre_d_tilting && whole.coresolution(&t).is_some();
        let d_cotilting = whole.is_cotilting(&t);
        let support_pre_d_tilting = annihilator_idempotent && q.is_pre_tilting(&local);
        let coresolution = if support_pre_d_tilting { q.coresolution(&local) } else { None };
        let support_d_tilting = coresolution.is_some();
        let support_d_cotilting = annihilator_idempotent && q.is_cotilting(&local);
        let proper = self.report(&killed).is_some_and(|r| r.kind.is_proper());
        let maximal_pre = support_pre_d_tilting && q.is_maximal_pre_tilting(&local);
        Ok(TiltingVerdict {
            summands: t,
            killed,
            annihilator_idempotent,
            pre_d_tilting,
            d_tilting,
            d_cotilting,
            support_pre_d_tilting,
            support_d_tilting,
            support_d_cotilting,
            proper,
            maximal_pre,
            coresolution,
        })
    }

    /// Every proper support-`d`-tilting module with summands in the catalog, including `0`.
    pub fn enumerate_proper_support_d_tilting(&self, cap: Option<usize>) -> Result<Vec<TiltingVerdict>> {
        let cap = cap.unwrap_or(DEFAULT_SUBSET_CAP);
        let n = self.cat.algebra.n_vertices();
        let mut checked = 0usize;
        let mut out = Vec::new();
        for rep in self.table.iter().filter(|r| r.kind.is_proper()) {
            let q = self.quotient(&rep.killed)?;
            let surviving: BTreeSet<usize> = (0..n).filter(|v| !rep.killed.contains(v)).collect();
            let rank = surviving.len();
            let candidates: Vec<usize> = (0..q.objects.len()).filter(|&x| q.is_pre_tilting(&[x])).collect();
            for combo in candidates.iter().copied().combinations(rank) {
                checked += 1;
                if checked > cap {
                    return Err(Error::CapExceeded(format!("more than {cap} candidate summand sets")));
                }
                let global: Vec<usize> = combo.iter().map(|&x| q.objects[x]).collect();
                let support: BTreeSet<usize> = global.iter().flat_map(|&x| self.cat.objects[x].support()).collect();
                if support != surviving || !q.is_pre_tilting(&combo) || !self.annihilator_is_idempotent(&global) {
                    continue;
                }
                if q.coresolution(&combo).is_some() {
                    out.push(self.verdict(&global)?);
                }
            }
        }
        out.sort_by(|a, b| a.summands.len().cmp(&b.summands.len()).then_with(|| a.summands.cmp(&b.summands)));
        Ok(out)
    }
}

/// `0 → T_1 → ⋯ → T_d → M → F_M → 0` for one catalog object.
#[derive(Clone, Debug)]
pub struct ElsoSequence {
    pub object: usize,
    /// `T_1, …, T_d` as catalog indices.
    pub terms: Vec<Vec<usize>>,
    /// `F_M = M / t(M)`.
    pub torsion_free_part: Representation,
    /// All terms were found in the class with exact connecting maps.
    pub exact: bool,
}

/// `0 → T_M → M → F_1 → ⋯ → F_d → 0` for one catalog object.
#[derive(Clone, Debug)]
pub struct CoElsoSequence {
    pub object: usize,
    pub terms: Vec<Vec<usize>>,
    pub torsion_part: Representation,
    pub exact: bool,
}

fn class_indices(cat: &CtCatalog, class: &[usize], m: &Representation) -> Option<Vec<usize>> {
    if m.is_zero() {
        return Some(Vec::new());
    }
    let idx = cat.summand_indices(m).ok()?;
    idx.iter().all(|x| class.contains(x)).then_some(idx)
}

fn category_of(cat: &CtCatalog, idx: &[usize]) -> AddCategory {
    AddCategory::new(idx.iter().map(|&x| cat.objects[x].clone()).collect())
}

/// Builds the torsion sequence of `M` by right approximations, first from `add T`, then from the class.
pub fn elso_sequence(cat: &CtCatalog, t: &[usize], class: &[usize], m: usize) -> ElsoSequence {
    let d = cat.d;
    let mut last = None;
    for gens in [t, class] {
        let sub = category_of(cat, gens);
        let top = right_approximation(&sub, &cat.objects[m]);
        let torsion_free_part = top.map.cokernel().target;
        let mut terms = vec![top.indices.iter().map(|&k| gens[k]).collect::<Vec<_>>()];
        let mut k = top.map.kernel().source;
        let mut exact = true;
        for _ in 0..d.saturating_sub(2) {
            let a = right_approximation(&sub, &k);
            if !a.map.is_surjective() {
                exact = false;
                break;
            }
            terms.push(a.indices.iter().map(|&j| gens[j]).collect());
            k = a.map.kernel().source;
        }
        if exact {
            if d == 1 {
                exact = k.is_zero();
            } else {
                match class_indices(cat, class, &k) {
                    Some(idx) => terms.push(idx),
                    None => exact = false,
                }
            }
        }
        exact &= terms.iter().all(|term| inside(class, term));
        terms.reverse();
        let seq = ElsoSequence { object: m, terms, torsion_free_part, exact };
        if seq.exact {
            return seq;
        }
        last = Some(seq);
    }
    last.expect("two attempts")
}

/// Builds the torsion-free sequence of `M` by left approximations.
pub fn coelso_sequence(cat: &CtCatalog, t: &[usize], class: &[usize], m: usize) -> CoElsoSequence {
    let d = cat.d;
    let mut last = None;
    for gens in [t, class] {
        let sub = category_of(cat, gens);
        let first = left_approximation(&sub, &cat.objects[m]);
        let torsion_part = first.map.kernel().source;
        let mut terms = vec![first.indices.iter().map(|&k| gens[k]).collect::<Vec<_>>()];
        let mut c = first.map.cokernel().target;
        let mut exact = true;
        for _ in 0..d.saturating_sub(2) {
            let a = left_approximation(&sub, &c);
            if !a.map.is_injective() {
                exact = false;
                break;
            }
            terms.push(a.indices.iter().map(|&j| gens[j]).collect());
            c = a.map.cokernel().target;
        }
        if exact {
            if d == 1 {
                exact = c.is_zero();
            } else {
                match class_indices(cat, class, &c) {
                    Some(idx) => terms.push(idx),
                    None => exact = false,
                }
            }
        }
        exact &= terms.iter().all(|term| inside(class, term));
        let seq = CoElsoSequence { object: m, terms, torsion_part, exact };
        if seq.exact {
            return seq;
        }
        last = Some(seq);
    }
    last.expect("two attempts")
}

/// The torsion class of a support-tilting module with its structural checks.
#[derive(Clone, Debug)]
pub struct TorsionReport {
    pub summands: Vec<usize>,
    /// `Fac(T) ∩ C`.
    pub class: Vec<usize>,
    pub axioms: AxiomCheck,
    pub sequences: Vec<ElsoSequence>,
    /// The class is `{X ∈ C : Hom(X, F_M) = 0 for all M}`.
    pub characterization: bool,
    /// The Ext-projectives of the class are the summands of `T`.
    pub round_trip: bool,
}

#[derive(Clone, Debug)]
pub struct TorsionFreeReport {
    pub summands: Vec<usize>,
    /// `Sub(T) ∩ C`.
    pub class: Vec<usize>,
    pub axioms: AxiomCheck,
    pub sequences: Vec<CoElsoSequence>,
    pub characterization: bool,
    /// The Ext-injectives of the class are the summands of `T`.
    pub round_trip: bool,
}

pub fn torsion_report(ctx: &TiltingContext, seqs: &[Chain], t: &[usize]) -> TorsionReport {
    let cat = ctx.cat;
    let class = fac_cap_c(&ctx.trace, t);
    let axioms = check_torsion_class(&ctx.trace, seqs, &class);
    let sequences: Vec<ElsoSequence> = (0..cat.len()).map(|m| elso_sequence(cat, t, &class, m)).collect();
    let perp: Vec<usize> = (0..cat.len())
        .filter(|&x| sequences.iter().all(|s| hom_dim(&cat.objects[x], &s.torsion_free_part) == 0))
        .collect();
    let round_trip = ext_projectives(cat, &class) == t;
    TorsionReport { summands: t.to_vec(), characterization: perp == class, class, axioms, sequences, round_trip }
}

pub fn torsion_free_report(ctx: &TiltingContext, seqs: &[Chain], t: &[usize]) -> TorsionFreeReport {
    let cat = ctx.cat;
    let class = sub_cap_c(&ctx.trace, t);
    let axioms = check_torsion_free_class(&ctx.trace, seqs, &class);
    let sequences: Vec<CoElsoSequence> = (0..cat.len()).map(|m| coelso_sequence(cat, t, &class, m)).collect();
    let perp: Vec<usize> = (0..cat.len())
        .filter(|&x| sequences.iter().all(|s| hom_dim(&s.torsion_part, &cat.objects[x]) == 0))
        .collect();
    let round_trip = ext_injectives(cat, &class) == t;
    TorsionFreeReport { summands: t.to_vec(), characterization: perp == class, class, axioms, sequences, round_trip }
}

/// Structural lemmas checked over a list of proper support-`d`-tilting modules.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TiltingAudit {
    pub count: usize,
    /// `|T| = |A/⟨e_T⟩|`.
    pub rank: bool,
    /// Modules with `Ext^{>0}(T, M) = 0` have `add T`-resolutions of length at most `d`.
    pub resolutions: bool,
    /// Exact chains of indecomposable projectives with both ends in `add T` stay in `add T`.
    pub projective_chains: bool,
    /// `G(T)` and `F(T)` are `d`-tilting over left and right properly-supporting quotients.
    pub reductions: bool,
    pub cotilting: bool,
    pub failures: Vec<String>,
}

impl TiltingAudit {
    pub fn holds(&self) -> bool {
        self.rank && self.resolutions && self.projective_chains && self.reductions && self.cotilting
    }
}

pub fn audit_tilting(ctx: &TiltingContext, seqs: &[Chain], list: &[TiltingVerdict]) -> Result<TiltingAudit> {
    let cat = ctx.cat;
    let n = cat.algebra.n_vertices();
    let d = cat.d;
    let mut audit = TiltingAudit {
        count: list.len(),
        rank: true,
        resolutions: true,
        projective_chains: true,
        reductions: true,
        cotilting: true,
        failures: Vec::new(),
    };
    let projectives = cat.projective_indices();
    for v in list {
        let t = &v.summands;
        if t.len() + v.killed.len() != n {
            audit.rank = false;
            audit.failures.push(format!("{t:?}: rank {} over {} vertices", t.len(), n - v.killed.len()));
        }
        if !v.support_d_cotilting {
            audit.cotilting = false;
            audit.failures.push(format!("{t:?}: not support-{d}-cotilting"));
        }
        let q = ctx.quotient(&v.killed)?;
        let local: Vec<usize> = t.iter().map(|&x| q.local(x).expect("support")).collect();
        for x in 0..q.objects.len() {
            if q.ext_free(&local, &[x]) && q.add_resolution(&local, &q.modules[x]).is_none() {
                audit.resolutions = false;
                audit.failures.push(format!("{t:?}: object {} has no short add T-resolution", q.objects[x]));
            }
        }
        if !v.d_tilting {
            continue;
        }
        for s in seqs.iter().filter(|s| s.all_indecomposable()) {
            let proj: Vec<bool> = s.terms.iter().map(|x| projectives.contains(&x[0])).collect();
            for a in 0..s.len() {
                for b in a + 2..s.len() {
                    if !(a..=b).all(|k| proj[k]) {
                        break;
                    }
                    let in_t = |k: usize| t.contains(&s.terms[k][0]);
                    if in_t(a) && in_t(b) && !(a..=b).all(in_t) {
                        audit.projective_chains = false;
                        audit.failures.push(format!("{t:?}: projective chain {a}..{b} of {:?} leaves add T", s.terms));
                    }
                }
            }
        }
        for rep in ctx.table.iter().filter(|r| r.kind.is_left() || r.kind.is_right()) {
            let qe = ctx.quotient(&rep.killed)?;
            let t_sum = cat.sum_of(t);
            let mut images = Vec::new();
            if rep.kind.is_left() {
                images.push(("G", t_sum.apply_g(&qe.quotient).0));
            }
            if rep.kind.is_right() {
                images.push(("F", t_sum.apply_f(&qe.quotient).0));
            }
            for (name, m) in images {
                let ok = match qe.summands_of(&m)? {
                    Some(s) => qe.is_tilting(&s),
                    None => false,
                };
                if !ok {
                    audit.reductions = false;
                    audit.failures.push(format!("{t:?}: {name}(T) is not {d}-tilting modulo {:?}", rep.killed));
                }
            }
        }
    }
    Ok(audit)
}

/// Exhaustive comparison of strong torsion classes and maximal support pre-`d`-tilting modules.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureProbe {
    /// Subsets of the catalog satisfying (T1) and (T2) on the given sequences.
    pub torsion_classes: Vec<Vec<usize>>,
    pub maximal_support_pre_tilting: Vec<Vec<usize>>,
    pub counts_match: bool,
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..1 << n).map(move |mask| (0..n).filter(|k| mask >> k & 1 == 1).collect())
}

pub fn conjecture_probe(ctx: &TiltingContext, seqs: &[Chain], cap: Option<usize>) -> Result<ConjectureProbe> {
    let n = ctx.cat.len();
    let cap = cap.unwrap_or(DEFAULT_PROBE_CAP);
    if n > cap {
        return Err(Error::CapExceeded(format!("catalog of {n} objects exceeds the probe bound {cap}")));
    }
    let mut torsion_classes = Vec::new();
    let mut pre = Vec::new();
    for s in subsets(n) {
        if check_torsion_class(&ctx.trace, seqs, &s).holds() {
            torsion_classes.push(s.clone());
        }
        if ctx.is_support_pre_tilting(&s)? {
            pre.push(s);
        }
    }
    let mut maximal_support_pre_tilting = Vec::new();
    for s in pre {
        let q = ctx.quotient(&ctx.killed_of(&s))?;
        let local: Vec<usize> = s.iter().map(|&x| q.local(x).expect("support")).collect();
        if q.is_maximal_pre_tilting(&local) {
            maximal_support_pre_tilting.push(s);
        }
    }
    let counts_match = torsion_classes.len() == maximal_support_pre_tilting.len();
    Ok(ConjectureProbe { torsion_classes, maximal_support_pre_tilting, counts_match })
}
