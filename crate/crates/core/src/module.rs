//! Finite-dimensional modules as quiver representations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{BoundQuiverAlgebra, IdempotentQuotient, Path};
use crate::error::{Error, Result};
use crate::linalg::{complement, sum_spans, Matrix};
use crate::rational::Q;

mod decompose;
mod morphism;

pub use decompose::{decompose, is_indecomposable, Decomposition};
pub use morphism::Morphism;

pub type Algebra = Arc<BoundQuiverAlgebra>;

/// A representation: one vector space per vertex, one matrix per arrow
/// (shape `dim(tgt) × dim(src)`).
#[derive(Clone)]
pub struct Representation {
    algebra: Algebra,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra)
            && self.dims == other.dims
            && self.maps == other.maps
    }
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Representation{:?}", self.dims)
    }
}

impl Representation {
    pub fn new(algebra: &Algebra, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Representation> {
        let q = algebra.quiver();
        if dims.len() != q.n_vertices() || maps.len() != q.arrows().len() {
            return Err(Error::InvalidInput("representation does not match the quiver".into()));
        }
        for (a, m) in q.arrows().iter().zip(&maps) {
            if m.shape() != (dims[a.tgt], dims[a.src]) {
                return Err(Error::InvalidInput(format!("matrix for arrow {} has the wrong shape", a.id)));
            }
        }
        let rep = Representation { algebra: algebra.clone(), dims, maps };
        for r in algebra.relations().relations() {
            let mut acc = Matrix::zeros(rep.dims[r.tgt], rep.dims[r.src]);
            for (c, p) in &r.terms {
                acc = &acc + &rep.path_matrix(p).scale(*c);
            }
            if !acc.is_zero() {
                return Err(Error::InvalidInput("representation violates a relation".into()));
            }
        }
        Ok(rep)
    }

    pub fn zero(algebra: &Algebra) -> Representation {
        let dims = vec![0; algebra.n_vertices()];
        let maps = algebra.quiver().arrows().iter().map(|_| Matrix::zeros(0, 0)).collect();
        Representation { algebra: algebra.clone(), dims, maps }
    }

    pub fn simple(algebra: &Algebra, v: usize) -> Representation {
        let mut dims = vec![0; algebra.n_vertices()];
        dims[v] = 1;
        let maps = algebra.quiver().arrows().iter().map(|a| Matrix::zeros(dims[a.tgt], dims[a.src])).collect();
        Representation { algebra: algebra.clone(), dims, maps }
    }

    /// `P_v`: basis at `j` is the basis paths `v → j`.
    pub fn projective(algebra: &Algebra, v: usize) -> Representation {
        let n = algebra.n_vertices();
        let dims: Vec<usize> = (0..n).map(|j| algebra.basis_between(v, j).len()).collect();
        let maps = algebra
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let arrow = Path { src: a.src, tgt: a.tgt, arrows: vec![ai] };
                let cols: Vec<Vec<Q>> = algebra
                    .basis_between(v, a.src)
                    .iter()
                    .map(|&b| algebra.block_coords(&algebra.basis_path(b).then(&arrow).unwrap()))
                    .collect();
                Matrix::from_cols(dims[a.tgt], &cols)
            })
            .collect();
        Representation { algebra: algebra.clone(), dims, maps }
    }

    /// `I_v`: at `j` the dual of the basis paths `j → v`.
    pub fn injective(algebra: &Algebra, v: usize) -> Representation {
        let n = algebra.n_vertices();
        let dims: Vec<usize> = (0..n).map(|j| algebra.basis_between(j, v).len()).collect();
        let maps = algebra
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let arrow = Path { src: a.src, tgt: a.tgt, arrows: vec![ai] };
                let rows: Vec<Vec<Q>> = algebra
                    .basis_between(a.tgt, v)
                    .iter()
                    .map(|&b| algebra.block_coords(&arrow.then(algebra.basis_path(b)).unwrap()))
                    .collect();
                Matrix::from_rows_sized(dims[a.tgt], dims[a.src], &rows)
            })
            .collect();
        Representation { algebra: algebra.clone(), dims, maps }
    }

    /// The regular module `A` as a direct sum of the indecomposable projectives.
    pub fn regular(algebra: &Algebra) -> Representation {
        let ps: Vec<_> = (0..algebra.n_vertices()).map(|v| Representation::projective(algebra, v)).collect();
        Representation::direct_sum(algebra, &ps)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn dim_vector(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn arrow_map(&self, a: usize) -> &Matrix {
        &self.maps[a]
    }

    pub fn arrow_maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn support(&self) -> BTreeSet<usize> {
        (0..self.dims.len()).filter(|&v| self.dims[v] > 0).collect()
    }

    /// Action of a path of the quiver, `dim(tgt) × dim(src)`.
    pub fn path_matrix(&self, p: &Path) -> Matrix {
        let mut m = Matrix::identity(self.dims[p.src]);
        for &a in &p.arrows {
            m = &self.maps[a] * &m;
        }
        m
    }

    pub fn basis_action(&self, b: usize) -> Matrix {
        self.path_matrix(self.algebra.basis_path(b))
    }

    pub fn direct_sum(algebra: &Algebra, parts: &[Representation]) -> Representation {
        let n = algebra.n_vertices();
        let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let maps = (0..algebra.quiver().arrows().len())
            .map(|a| {
                let blocks: Vec<&Matrix> = parts.iter().map(|p| &p.maps[a]).collect();
                Matrix::block_diag(&blocks)
            })
            .collect();
        Representation { algebra: algebra.clone(), dims, maps }
    }

    /// Direct sum with its canonical injections and projections.
    pub fn direct_sum_with_maps(algebra: &Algebra, parts: &[Representation]) -> (Representation, Vec<Morphism>, Vec<Morphism>) {
        let sum = Representation::direct_sum(algebra, parts);
        let n = algebra.n_vertices();
        let mut offsets = vec![0usize; n];
        let mut inj = Vec::new();
        let mut proj = Vec::new();
        for p in parts {
            let mut i_maps = Vec::new();
            let mut p_maps = Vec::new();
            for v in 0..n {
                let mut iv = Matrix::zeros(sum.dims[v], p.dims[v]);
                iv.set_block(offsets[v], 0, &Matrix::identity(p.dims[v]));
                p_maps.push(iv.transpose());
                i_maps.push(iv);
                offsets[v] += p.dims[v];
            }
            inj.push(Morphism::new_unchecked(p.clone(), sum.clone(), i_maps));
            proj.push(Morphism::new_unchecked(sum.clone(), p.clone(), p_maps));
        }
        (sum, inj, proj)
    }

    /// Submodule with the given per-vertex basis (columns), which must be arrow-stable.
    pub fn submodule(&self, basis: Vec<Matrix>) -> Morphism {
        let dims: Vec<usize> = basis.iter().map(Matrix::cols).collect();
        let maps = self
            .algebra
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let img = &self.maps[ai] * &basis[a.src];
                basis[a.tgt].solve_matrix(&img).expect("subspace is not arrow-stable")
            })
            .collect();
        let sub = Representation { algebra: self.algebra.clone(), dims, maps };
        Morphism::new_unchecked(sub, self.clone(), basis)
    }

    /// `rad M`: the images of all arrows, with its inclusion.
    pub fn radical(&self) -> Morphism {
        let q = self.algebra.quiver();
        let basis = (0..self.dims.len())
            .map(|v| {
                let span = q.in_arrows(v).fold(Matrix::zeros(self.dims[v], 0), |acc, a| acc.hstack(&self.maps[a]));
                span.col_basis()
            })
            .collect();
        self.submodule(basis)
    }

    /// Quotient by an arrow-stable subspace, as the projection onto it.
    pub fn quotient(&self, sub: &[Matrix]) -> Morphism {
        let n = self.dims.len();
        let mut projs = Vec::with_capacity(n);
        let mut comps = Vec::with_capacity(n);
        for v in 0..n {
            let s = sub[v].col_basis();
            let c = complement(&s);
            let full = s.hstack(&c);
            let inv = full.inverse().expect("basis completion");
            let rows: Vec<usize> = (s.cols()..self.dims[v]).collect();
            projs.push(inv.select_rows(&rows));
            comps.push(c);
        }
        let dims: Vec<usize> = comps.iter().map(Matrix::cols).collect();
        let maps = self
            .algebra
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| &projs[a.tgt] * &(&self.maps[ai] * &comps[a.src]))
            .collect();
        let quo = Representation { algebra: self.algebra.clone(), dims, maps };
        Morphism::new_unchecked(self.clone(), quo, projs)
    }

    /// Smallest submodule containing the given vectors (columns, per vertex).
    pub fn generated_subspace(&self, gens: &[Matrix]) -> Vec<Matrix> {
        let order = self.algebra.quiver().topological_order().expect("acyclic");
        let mut span: Vec<Matrix> = gens.iter().map(Matrix::col_basis).collect();
        for v in order {
            let out: Vec<usize> = self.algebra.quiver().out_arrows(v).collect();
            for a in out {
                let t = self.algebra.quiver().arrows()[a].tgt;
                let img = &self.maps[a] * &span[v];
                span[t] = sum_spans(&span[t], &img);
            }
        }
        span
    }

    /// `D M` over the opposite algebra.
    pub fn dual(&self, opposite: &Algebra) -> Representation {
        let maps = self.maps.iter().map(Matrix::transpose).collect();
        Representation { algebra: opposite.clone(), dims: self.dims.clone(), maps }
    }

    /// Annihilator of `⟨e⟩`, as a module over the quotient, with its inclusion into `M`.
    pub fn apply_f(&self, q: &IdempotentQuotient) -> (Representation, Morphism) {
        let alg = &self.algebra;
        let n = alg.n_vertices();
        let mut basis = Vec::with_capacity(n);
        for v in 0..n {
            if q.killed.contains(&v) {
                basis.push(Matrix::zeros(self.dims[v], 0));
                continue;
            }
            let mut eqs = Matrix::zeros(0, self.dims[v]);
            for t in 0..n {
                for &b in alg.basis_between(v, t) {
                    let p = alg.basis_path(b);
                    if p.vertices(alg.quiver()).iter().any(|x| q.killed.contains(x)) {
                        eqs = eqs.vstack(&self.path_matrix(p));
                    }
                }
            }
            basis.push(eqs.kernel());
        }
        let inc = self.submodule(basis);
        (restrict(&inc.source, q), inc)
    }

    /// `M / ⟨e⟩M`, as a module over the quotient, with the projection from `M`.
    pub fn apply_g(&self, q: &IdempotentQuotient) -> (Representation, Morphism) {
        let alg = &self.algebra;
        let n = alg.n_vertices();
        let mut sub: Vec<Matrix> = (0..n).map(|v| Matrix::zeros(self.dims[v], 0)).collect();
        for s in 0..n {
            for t in 0..n {
                for &b in alg.basis_between(s, t) {
                    let p = alg.basis_path(b);
                    if p.vertices(alg.quiver()).iter().any(|x| q.killed.contains(x)) {
                        sub[t] = sum_spans(&sub[t], &self.path_matrix(p));
                    }
                }
            }
        }
        let proj = self.quotient(&sub);
        (restrict(&proj.target, q), proj)
    }

    /// Restriction of scalars along `A → A/⟨e⟩`.
    pub fn inflate(&self, q: &IdempotentQuotient, parent: &Algebra) -> Representation {
        let n = parent.n_vertices();
        let dims: Vec<usize> = (0..n).map(|v| q.vertex_map[v].map_or(0, |w| self.dims[w])).collect();
        let qq = self.algebra.quiver();
        let maps = parent
            .quiver()
            .arrows()
            .iter()
            .map(|a| match qq.arrow_of_id(&a.id) {
                Some(b) if q.vertex_map[a.src].is_some() && q.vertex_map[a.tgt].is_some() => self.maps[b].clone(),
                _ => Matrix::zeros(dims[a.tgt], dims[a.src]),
            })
            .collect();
        Representation { algebra: parent.clone(), dims, maps }
    }

    pub fn to_json(&self) -> ModuleJson {
        let q = self.algebra.quiver();
        ModuleJson {
            algebra: self.algebra.digest(),
            dim_vector: (0..q.n_vertices()).map(|v| (q.label(v).to_string(), self.dims[v])).collect(),
            matrices: q
                .arrows()
                .iter()
                .zip(&self.maps)
                .map(|(a, m)| (a.id.clone(), (0..m.rows()).map(|i| m.row(i).to_vec()).collect()))
                .collect(),
        }
    }

    pub fn from_json(algebra: &Algebra, j: &ModuleJson) -> Result<Representation> {
        if j.algebra != algebra.digest() {
            return Err(Error::InvalidInput("module refers to a different algebra".into()));
        }
        let q = algebra.quiver();
        let mut dims = vec![0usize; q.n_vertices()];
        for (k, &d) in &j.dim_vector {
            let label: u32 = k.parse().map_err(|_| Error::InvalidInput(format!("bad vertex key {k}")))?;
            let v = q.vertex_of_label(label).ok_or_else(|| Error::InvalidInput(format!("unknown vertex {k}")))?;
            dims[v] = d;
        }
        let mut maps = Vec::new();
        for a in q.arrows() {
            let m = match j.matrices.get(&a.id) {
                Some(rows) => Matrix::from_rows_sized(rows.len(), dims[a.src], rows),
                None => Matrix::zeros(dims[a.tgt], dims[a.src]),
            };
            maps.push(m);
        }
        Representation::new(algebra, dims, maps)
    }
}

/// Reads a module killed by `⟨e⟩` as a module over the quotient.
fn restrict(m: &Representation, q: &IdempotentQuotient) -> Representation {
    let b = &q.quotient;
    let dims: Vec<usize> = q.surviving.iter().map(|&v| m.dims[v]).collect();
    let parent = m.algebra.quiver();
    let maps = b.quiver().arrows().iter().map(|a| m.maps[parent.arrow_of_id(&a.id).unwrap()].clone()).collect();
    Representation { algebra: b.clone(), dims, maps }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleJson {
    pub algebra: String,
    pub dim_vector: BTreeMap<String, usize>,
    pub matrices: BTreeMap<String, Vec<Vec<Q>>>,
}

/// Basis of `Hom(M, N)`.
pub fn hom_space(m: &Representation, n: &Representation) -> Vec<Morphism> {
    let alg = &m.algebra;
    let nv = alg.n_vertices();
    let mut offset = vec![0usize; nv + 1];
    for v in 0..nv {
        offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
    }
    let nvars = offset[nv];
    // variable for f_v[r][c] sits at offset[v] + r * m_v + c
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for (ai, a) in alg.quiver().arrows().iter().enumerate() {
        let (i, j) = (a.src, a.tgt);
        let (ma, na) = (&m.maps[ai], &n.maps[ai]);
        // (N_a f_i - f_j M_a)[r][c] = 0
        for r in 0..n.dims[j] {
            for c in 0..m.dims[i] {
                let mut row = vec![Q::zero(); nvars];
                for k in 0..n.dims[i] {
                    let x = na[(r, k)];
                    if !x.is_zero() {
                        row[offset[i] + k * m.dims[i] + c] += x;
                    }
                }
                for k in 0..m.dims[j] {
                    let x = ma[(k, c)];
                    if !x.is_zero() {
                        row[offset[j] + r * m.dims[j] + k] -= x;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let sys = Matrix::from_rows_sized(rows.len(), nvars, &rows);
    sys.nullspace()
        .into_iter()
        .map(|sol| {
            let maps = (0..nv)
                .map(|v| {
                    let mut f = Matrix::zeros(n.dims[v], m.dims[v]);
                    for r in 0..n.dims[v] {
                        for c in 0..m.dims[v] {
                            f[(r, c)] = sol[offset[v] + r * m.dims[v] + c];
                        }
                    }
                    f
                })
                .collect();
            Morphism::new_unchecked(m.clone(), n.clone(), maps)
        })
        .collect()
}

pub fn hom_dim(m: &Representation, n: &Representation) -> usize {
    hom_space(m, n).len()
}

/// Whether two indecomposable modules are isomorphic, with an isomorphism when they are.
pub fn indecomposable_iso(m: &Representation, n: &Representation) -> Option<Morphism> {
    if m.dims != n.dims {
        return None;
    }
    // rad Hom(M, N) is a proper subspace, so some basis element lies outside it
    hom_space(m, n).into_iter().find(Morphism::is_iso)
}

pub fn is_isomorphic(m: &Representation, n: &Representation) -> Result<bool> {
    if m.dims != n.dims {
        return Ok(false);
    }
    let dm = decompose(m)?;
    let dn = decompose(n)?;
    Ok(dm.same_summands(&dn))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a3() -> Algebra {
        Arc::new(BoundQuiverAlgebra::linear_an(3, None).unwrap())
    }

    fn eg2() -> Algebra {
        Arc::new(BoundQuiverAlgebra::linear_an(7, Some(3)).unwrap())
    }

    #[test]
    fn standard_modules_have_expected_dims() {
        let a = a3();
        assert_eq!(Representation::projective(&a, 0).dim_vector(), &[1, 1, 1]);
        assert_eq!(Representation::injective(&a, 2).dim_vector(), &[1, 1, 1]);
        assert_eq!(Representation::injective(&a, 0).dim_vector(), &[1, 0, 0]);
        let b = eg2();
        assert_eq!(Representation::projective(&b, 0).dim_vector(), &[1, 1, 1, 0, 0, 0, 0]);
        assert_eq!(Representation::injective(&b, 0), Representation::simple(&b, 0));
        for v in 0..7 {
            let p = Representation::projective(&b, v);
            Representation::new(&b, p.dims.clone(), p.maps.clone()).unwrap();
            let i = Representation::injective(&b, v);
            Representation::new(&b, i.dims.clone(), i.maps.clone()).unwrap();
        }
    }

    #[test]
    fn hom_small_cases() {
        let b = eg2();
        let s1 = Representation::simple(&b, 0);
        assert_eq!(hom_dim(&s1, &s1), 1);
        assert_eq!(hom_dim(&Representation::projective(&b, 0), &s1), 1);
        assert_eq!(hom_dim(&s1, &Representation::projective(&b, 0)), 0);
        assert_eq!(hom_dim(&Representation::projective(&b, 1), &Representation::projective(&b, 0)), 1);
    }

    #[test]
    fn dual_of_projective_is_injective() {
        let a = eg2();
        let op = Arc::new(a.opposite());
        for v in 0..7 {
            let d = Representation::projective(&op, v).dual(&a);
            assert!(indecomposable_iso(&d, &Representation::injective(&a, v)).is_some());
        }
    }

    #[test]
    fn functors_f_and_g() {
        let b = eg2();
        let q3 = b.quotient_by_idempotent(&[2].into_iter().collect()).unwrap();
        let (g, _) = Representation::projective(&b, 0).apply_g(&q3);
        assert_eq!(g.inflate(&q3, &b).dim_vector(), &[1, 1, 0, 0, 0, 0, 0]);
        let q1 = b.quotient_by_idempotent(&[0].into_iter().collect()).unwrap();
        let (f, _) = Representation::injective(&b, 2).apply_f(&q1);
        assert_eq!(f.inflate(&q1, &b).dim_vector(), &[0, 1, 1, 0, 0, 0, 0]);
        let s2 = Representation::simple(&b, 1);
        let q = b.quotient_by_idempotent(&[0].into_iter().collect()).unwrap();
        let (f, _) = s2.apply_f(&q);
        let (g, _) = s2.apply_g(&q);
        assert_eq!(f.inflate(&q, &b), s2);
        assert_eq!(g.inflate(&q, &b), s2);
    }

    #[test]
    fn module_json_round_trip() {
        let b = eg2();
        let p = Representation::projective(&b, 2);
        let j = p.to_json();
        let s = serde_json::to_string(&j).unwrap();
        let back: ModuleJson = serde_json::from_str(&s).unwrap();
        assert_eq!(Representation::from_json(&b, &back).unwrap(), p);
    }

    proptest::proptest! {
        #[test]
        fn hom_is_additive(x in 0usize..6, y in 0usize..6, z in 0usize..6) {
            let a = a3();
            let mut pool: Vec<Representation> = (0..3).map(|v| Representation::projective(&a, v)).collect();
            pool.extend([Representation::injective(&a, 0), Representation::injective(&a, 1), Representation::simple(&a, 1)]);
            let (m, n, k) = (&pool[x], &pool[y], &pool[z]);
            let sum = Representation::direct_sum(&a, &[m.clone(), n.clone()]);
            proptest::prop_assert_eq!(hom_dim(&sum, k), hom_dim(m, k) + hom_dim(n, k));
            proptest::prop_assert_eq!(hom_dim(k, &sum), hom_dim(k, m) + hom_dim(k, n));
            proptest::prop_assert_eq!(hom_space(m, k).len(), hom_dim(m, k));
        }
    }
}
