//! Bound quiver algebras over the rationals.
//!
//! Paths are written in travel order: `[a, b]` means "first `a`, then `b`".
//! Left modules are quiver representations, so the indecomposable projective
//! `P_v` has the paths starting at `v` as a basis.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::Q;



#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Path {
    pub src: usize,
    pub tgt: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path { src: v, tgt: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self` followed by `next`, if they compose.
    pub fn then(&self, next: &Path) -> Option<Path> {
        if self.tgt != next.src {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&next.arrows);
        Some(Path { src: self.src, tgt: next.tgt, arrows })
    }

    /// Every vertex the path passes through, endpoints included.
    pub fn vertices(&self, quiver: &Quiver) -> Vec<usize> {
        let mut v = vec![self.src];
        v.extend(self.arrows.iter().map(|&a| quiver.arrows[a].tgt));
        v
    }

    fn sort_key(&self) -> (usize, usize, usize, Vec<usize>) {
        (self.src, self.tgt, self.len(), self.arrows.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub id: String,
    pub src: usize,
    pub tgt: usize,
}

/// A finite acyclic quiver. Vertices carry integer labels; everything
/// internal refers to them by position.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    labels: Vec<u32>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(labels: Vec<u32>, arrows: Vec<Arrow>) -> Result<Quiver> {
        let uniq: BTreeSet<_> = labels.iter().collect();
        if uniq.len() != labels.len() {
            return Err(Error::InvalidInput("duplicate vertex label".into()));
        }
        let ids: BTreeSet<_> = arrows.iter().map(|a| &a.id).collect();
        if ids.len() != arrows.len() {
            return Err(Error::InvalidInput("duplicate arrow id".into()));
        }
        for a in &arrows {
            if a.src >= labels.len() || a.tgt >= labels.len() {
                return Err(Error::InvalidInput(format!("arrow {} has an undeclared endpoint", a.id)));
            }
        }
        let q = Quiver { labels, arrows };
        q.topological_order()?;
        Ok(q)
    }

    pub fn n_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> u32 {
        self.labels[v]
    }

    pub fn vertex_of_label(&self, label: u32) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_of_id(&self, id: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.id == id)
    }

    pub fn out_arrows(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].src == v)
    }

    pub fn in_arrows(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].tgt == v)
    }

    pub fn topological_order(&self) -> Result<Vec<usize>> {
        let n = self.n_vertices();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.tgt] += 1;
        }
        let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = ready.pop() {
            order.push(v);
            for a in self.out_arrows(v) {
                let t = self.arrows[a].tgt;
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    ready.push(t);
                }
            }
        }
        if order.len() < n {
            let v = (0..n).find(|&v| indeg[v] > 0).unwrap();
            return Err(Error::OrientedCycle(self.labels[v]));
        }
        Ok(order)
    }

    /// All paths of the path algebra, trivial ones included.
    pub fn all_paths(&self) -> Vec<Path> {
        let mut out = Vec::new();
        for v in 0..self.n_vertices() {
            let mut stack = vec![Path::trivial(v)];
            while let Some(p) = stack.pop() {
                for a in self.out_arrows(p.tgt) {
                    let mut q = p.clone();
                    q.arrows.push(a);
                    q.tgt = self.arrows[a].tgt;
                    stack.push(q);
                }
                out.push(p);
            }
        }
        out.sort_by_key(Path::sort_key);
        out
    }

    pub fn path_from_ids(&self, ids: &[String]) -> Result<Path> {
        let first = ids.first().ok_or_else(|| Error::InvalidInput("empty path".into()))?;
        let a0 = self.arrow_of_id(first).ok_or_else(|| Error::InvalidInput(format!("unknown arrow {first}")))?;
        let mut p = Path::trivial(self.arrows[a0].src);
        for id in ids {
            let a = self.arrow_of_id(id).ok_or_else(|| Error::InvalidInput(format!("unknown arrow {id}")))?;
            if self.arrows[a].src != p.tgt {
                return Err(Error::InvalidInput(format!("arrows do not compose at {id}")));
            }
            p.arrows.push(a);
            p.tgt = self.arrows[a].tgt;
        }
        Ok(p)
    }

    pub fn path_ids(&self, p: &Path) -> Vec<String> {
        p.arrows.iter().map(|&a| self.arrows[a].id.clone()).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelationKind {
    Zero,
    Commutativity,
    Linear,
}

/// A linear combination of parallel paths, all of length at least two.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub src: usize,
    pub tgt: usize,
    pub terms: Vec<(Q, Path)>,
}

impl Relation {
    pub fn zero(p: Path) -> Relation {
        Relation { src: p.src, tgt: p.tgt, terms: vec![(Q::one(), p)] }
    }

    /// `p - q`, stored with the smaller path first.
    pub fn commutativity(p: Path, q: Path) -> Relation {
        let (p, q) = if p.sort_key() <= q.sort_key() { (p, q) } else { (q, p) };
        Relation { src: p.src, tgt: p.tgt, terms: vec![(Q::one(), p), (-Q::one(), q)] }
    }

    /// Drops zero terms, sorts terms and scales so the leading coefficient is one.
    pub fn normalized(mut self) -> Relation {
        self.terms.retain(|(c, _)| !c.is_zero());
        self.terms.sort_by_key(|a| a.1.sort_key());
        if let Some(&(lead, _)) = self.terms.first() {
            let inv = lead.recip();
            for t in &mut self.terms {
                t.0 *= inv;
            }
        }
        self
    }

    pub fn kind(&self) -> RelationKind {
        match self.terms.as_slice() {
            [(c, _)] if c.is_one() => RelationKind::Zero,
            [(a, _), (b, _)] if a.is_one() && (*b + Q::one()).is_zero() => RelationKind::Commutativity,
            _ => RelationKind::Linear,
        }
    }

    pub fn min_len(&self) -> usize {
        self.terms.iter().map(|(_, p)| p.len()).min().unwrap_or(0)
    }

    pub fn max_len(&self) -> usize {
        self.terms.iter().map(|(_, p)| p.len()).max().unwrap_or(0)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RelationSet {
    relations: Vec<Relation>,
}

impl RelationSet {
    pub fn new(relations: Vec<Relation>) -> RelationSet {
        RelationSet { relations }
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn zero_relations(&self) -> impl Iterator<Item = &Path> {
        self.relations.iter().filter(|r| r.kind() == RelationKind::Zero).map(|r| &r.terms[0].1)
    }

    pub fn commutativity_relations(&self) -> impl Iterator<Item = (&Path, &Path)> {
        self.relations
            .iter()
            .filter(|r| r.kind() == RelationKind::Commutativity)
            .map(|r| (&r.terms[0].1, &r.terms[1].1))
    }

    /// Whether every generating relation is a combination of paths of length exactly two.
    pub fn length_two_generated(&self) -> bool {
        self.relations.iter().all(|r| r.min_len() == 2 && r.max_len() == 2)
    }
}

/// A finite-dimensional algebra `kQ/I` with a path basis and normal forms.
#[derive(Clone, Debug)]
pub struct BoundQuiverAlgebra {
    quiver: Quiver,
    relations: RelationSet,
    paths: Vec<Path>,
    path_index: HashMap<Path, usize>,
    /// Basis elements as indices into `paths`.
    basis: Vec<usize>,
    /// For every path, its normal form as a sparse combination of basis indices.
    normal_forms: Vec<Vec<(usize, Q)>>,
    blocks: HashMap<(usize, usize), Vec<usize>>,
}

impl PartialEq for BoundQuiverAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.quiver == other.quiver && self.relations == other.relations
    }
}

impl BoundQuiverAlgebra {
    pub fn new(quiver: Quiver, relations: RelationSet) -> Result<BoundQuiverAlgebra> {
        for r in relations.relations() {
            if r.terms.is_empty() {
                return Err(Error::InvalidInput("empty relation".into()));
            }
            for (_, p) in &r.terms {
                if p.src != r.src || p.tgt != r.tgt {
                    return Err(Error::InvalidInput("relation paths are not parallel".into()));
                }
                if p.len() < 2 {
                    return Err(Error::InvalidInput("relation path shorter than two".into()));
                }
            }
        }
        let paths = quiver.all_paths();
        let path_index: HashMap<Path, usize> = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();

        let mut block_paths: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (i, p) in paths.iter().enumerate() {
            block_paths.entry((p.src, p.tgt)).or_default().push(i);
        }
        let into: Vec<Vec<usize>> =
            (0..quiver.n_vertices()).map(|v| (0..paths.len()).filter(|&i| paths[i].tgt == v).collect()).collect();
        let from: Vec<Vec<usize>> =
            (0..quiver.n_vertices()).map(|v| (0..paths.len()).filter(|&i| paths[i].src == v).collect()).collect();

        // Ideal elements x·r·y, grouped by block.
        let mut ideal_rows: HashMap<(usize, usize), Vec<HashMap<usize, Q>>> = HashMap::new();
        for r in relations.relations() {
            for &x in &into[r.src] {
                for &y in &from[r.tgt] {
                    let mut row: HashMap<usize, Q> = HashMap::new();
                    for (c, p) in &r.terms {
                        let full = paths[x].then(p).and_then(|q| q.then(&paths[y])).unwrap();
                        *row.entry(path_index[&full]).or_insert(Q::zero()) += *c;
                    }
                    ideal_rows.entry((paths[x].src, paths[y].tgt)).or_default().push(row);
                }
            }
        }

        let mut normal_forms: Vec<Vec<(usize, Q)>> = vec![Vec::new(); paths.len()];
        let mut basis = Vec::new();
        let mut is_basis = vec![false; paths.len()];
        let mut pending: Vec<(usize, Vec<(usize, Q)>)> = Vec::new();
        let mut keys: Vec<_> = block_paths.keys().copied().collect();
        keys.sort();
        for key in keys {
            // longest paths first so pivots land on long paths
            let mut cols = block_paths[&key].clone();
            cols.sort_by(|&a, &b| paths[b].len().cmp(&paths[a].len()).then(paths[a].arrows.cmp(&paths[b].arrows)));
            let rows = ideal_rows.get(&key).map(Vec::as_slice).unwrap_or(&[]);
            let col_pos: HashMap<usize, usize> = cols.iter().enumerate().map(|(j, &p)| (p, j)).collect();
            let dense: Vec<Vec<Q>> = rows
                .iter()
                .map(|row| {
                    let mut v = vec![Q::zero(); cols.len()];
                    for (p, c) in row {
                        v[col_pos[p]] += *c;
                    }
                    v
                })
                .collect();
            let m = Matrix::from_rows_sized(dense.len(), cols.len(), &dense);
            let (r, pivots) = m.rref();
            let mut pivot_set = vec![false; cols.len()];
            for &p in &pivots {
                pivot_set[p] = true;
            }
            for (j, &p) in cols.iter().enumerate() {
                if !pivot_set[j] {
                    is_basis[p] = true;
                }
            }
            for (i, &pc) in pivots.iter().enumerate() {
                let mut nf = Vec::new();
                for (j, &p) in cols.iter().enumerate() {
                    if !pivot_set[j] && !r[(i, j)].is_zero() {
                        nf.push((p, -r[(i, j)]));
                    }
                }
                pending.push((cols[pc], nf));
            }
        }
        let mut basis_pos = vec![usize::MAX; paths.len()];
        for (i, _) in paths.iter().enumerate() {
            if is_basis[i] {
                basis_pos[i] = basis.len();
                basis.push(i);
            }
        }
        for (i, nf) in normal_forms.iter_mut().enumerate() {
            if is_basis[i] {
                *nf = vec![(basis_pos[i], Q::one())];
            }
        }
        for (p, nf) in pending {
            normal_forms[p] = nf.into_iter().map(|(q, c)| (basis_pos[q], c)).collect();
        }
        let mut blocks: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (bi, &p) in basis.iter().enumerate() {
            blocks.entry((paths[p].src, paths[p].tgt)).or_default().push(bi);
        }
        Ok(BoundQuiverAlgebra { quiver, relations, paths, path_index, basis, normal_forms, blocks })
    }

    /// Linearly oriented `A_n` (`1 → 2 → ⋯ → n`), optionally bound by all paths of length `rad`.
    pub fn linear_an(n: usize, rad: Option<usize>) -> Result<BoundQuiverAlgebra> {
        if n == 0 {
            return Err(Error::InvalidInput("n must be positive".into()));
        }
        if let Some(r) = rad {
            if r <= 1 {
                return Err(Error::InvalidInput("radical bound must be at least 2".into()));
            }
        }
        let labels: Vec<u32> = (1..=n as u32).collect();
        let arrows: Vec<Arrow> =
            (0..n.saturating_sub(1)).map(|i| Arrow { id: format!("a{}", i + 1), src: i, tgt: i + 1 }).collect();
        let quiver = Quiver::new(labels, arrows)?;
        let mut rels = Vec::new();
        if let Some(r) = rad {
            for s in 0..n.saturating_sub(r) {
                rels.push(Relation::zero(Path { src: s, tgt: s + r, arrows: (s..s + r).collect() }));
            }
        }
        BoundQuiverAlgebra::new(quiver, RelationSet::new(rels))
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &RelationSet {
        &self.relations
    }

    pub fn n_vertices(&self) -> usize {
        self.quiver.n_vertices()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_path(&self, b: usize) -> &Path {
        &self.paths[self.basis[b]]
    }

    /// Basis indices of the paths from `s` to `t`.
    pub fn basis_between(&self, s: usize, t: usize) -> &[usize] {
        self.blocks.get(&(s, t)).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn trivial_basis(&self, v: usize) -> usize {
        let nf = self.normal_form(&Path::trivial(v));
        nf[0].0
    }

    /// Normal form of a path of `kQ`.
    pub fn normal_form(&self, p: &Path) -> Vec<(usize, Q)> {
        self.normal_forms[self.path_index[p]].clone()
    }

    /// Coordinates of a path in the basis of its block `(src, tgt)`.
    pub fn block_coords(&self, p: &Path) -> Vec<Q> {
        let block = self.basis_between(p.src, p.tgt);
        let mut v = vec![Q::zero(); block.len()];
        for (b, c) in self.normal_form(p) {
            let pos = block.iter().position(|&x| x == b).expect("normal form outside block");
            v[pos] += c;
        }
        v
    }

    /// Product `b1 · b2` of basis elements in travel order (first `b1`, then `b2`).
    pub fn multiply(&self, b1: usize, b2: usize) -> Vec<(usize, Q)> {
        match self.basis_path(b1).then(self.basis_path(b2)) {
            Some(p) => self.normal_form(&p),
            None => Vec::new(),
        }
    }

    /// Dense structure constants: `table[i][j]` is the product of basis elements `i` and `j`.
    pub fn mult_table(&self) -> Vec<Vec<Vec<(usize, Q)>>> {
        (0..self.dim()).map(|i| (0..self.dim()).map(|j| self.multiply(i, j)).collect()).collect()
    }

    /// Checks `(xy)z = x(yz)` on every triple of basis elements.
    pub fn is_associative(&self) -> bool {
        let n = self.dim();
        let mul_vec = |v: &[(usize, Q)], b: usize, left: bool| -> HashMap<usize, Q> {
            let mut out: HashMap<usize, Q> = HashMap::new();
            for &(x, c) in v {
                let prod = if left { self.multiply(x, b) } else { self.multiply(b, x) };
                for (y, d) in prod {
                    *out.entry(y).or_insert(Q::zero()) += c * d;
                }
            }
            out.retain(|_, c| !c.is_zero());
            out
        };
        for i in 0..n {
            for j in 0..n {
                let ij = self.multiply(i, j);
                for k in 0..n {
                    let jk = self.multiply(j, k);
                    let lhs = mul_vec(&ij, k, true);
                    let rhs = mul_vec(&jk, i, false);
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Dimension of `e_t A e_s`-style blocks: number of basis paths from `s` to `t`.
    pub fn cartan(&self) -> Vec<Vec<usize>> {
        let n = self.n_vertices();
        (0..n).map(|s| (0..n).map(|t| self.basis_between(s, t).len()).collect()).collect()
    }

    /// `A/⟨e⟩` for `e` the sum of the idempotents at `killed`.
    pub fn quotient_by_idempotent(&self, killed: &BTreeSet<usize>) -> Result<IdempotentQuotient> {
        let n = self.n_vertices();
        if let Some(&v) = killed.iter().find(|&&v| v >= n) {
            return Err(Error::InvalidInput(format!("vertex index {v} out of range")));
        }
        let surviving: Vec<usize> = (0..n).filter(|v| !killed.contains(v)).collect();
        let mut vertex_map = vec![None; n];
        for (i, &v) in surviving.iter().enumerate() {
            vertex_map[v] = Some(i);
        }
        let mut arrow_map = vec![None; self.quiver.arrows.len()];
        let mut arrows = Vec::new();
        for (ai, a) in self.quiver.arrows.iter().enumerate() {
            if let (Some(s), Some(t)) = (vertex_map[a.src], vertex_map[a.tgt]) {
                arrow_map[ai] = Some(arrows.len());
                arrows.push(Arrow { id: a.id.clone(), src: s, tgt: t });
            }
        }
        let labels = surviving.iter().map(|&v| self.quiver.labels[v]).collect();
        let quiver = Quiver::new(labels, arrows)?;
        let mut rels = Vec::new();
        for r in self.relations.relations() {
            let (Some(s), Some(t)) = (vertex_map[r.src], vertex_map[r.tgt]) else { continue };
            let terms: Vec<(Q, Path)> = r
                .terms
                .iter()
                .filter_map(|(c, p)| {
                    let arrows: Option<Vec<usize>> = p.arrows.iter().map(|&a| arrow_map[a]).collect();
                    arrows.map(|arrows| (*c, Path { src: s, tgt: t, arrows }))
                })
                .collect();
            if !terms.is_empty() {
                rels.push(Relation { src: s, tgt: t, terms }.normalized());
            }
        }
        rels.dedup();
        let quotient = BoundQuiverAlgebra::new(quiver, RelationSet::new(rels))?;
        Ok(IdempotentQuotient { killed: killed.clone(), vertex_map, surviving, quotient: Arc::new(quotient) })
    }

    /// The ideal `⟨e⟩` as a subspace of `A`, given by a basis of coordinate vectors.
    pub fn idempotent_ideal(&self, killed: &BTreeSet<usize>) -> Matrix {
        let mut vecs = Vec::new();
        for p in &self.paths {
            if p.vertices(&self.quiver).iter().any(|v| killed.contains(v)) {
                let mut v = vec![Q::zero(); self.dim()];
                for (b, c) in self.normal_form(p) {
                    v[b] += c;
                }
                vecs.push(v);
            }
        }
        let m = Matrix::from_cols(self.dim(), &vecs);
        m.col_basis()
    }

    /// Reversed arrows and reversed relation paths.
    pub fn opposite(&self) -> BoundQuiverAlgebra {
        let arrows =
            self.quiver.arrows.iter().map(|a| Arrow { id: a.id.clone(), src: a.tgt, tgt: a.src }).collect();
        let quiver = Quiver::new(self.quiver.labels.clone(), arrows).expect("opposite of an acyclic quiver");
        let rels = self
            .relations
            .relations()
            .iter()
            .map(|r| {
                let terms = r
                    .terms
                    .iter()
                    .map(|(c, p)| (*c, Path { src: p.tgt, tgt: p.src, arrows: p.arrows.iter().rev().copied().collect() }))
                    .collect();
                Relation { src: r.tgt, tgt: r.src, terms }.normalized()
            })
            .collect();
        BoundQuiverAlgebra::new(quiver, RelationSet::new(rels)).expect("opposite relations are valid")
    }

    pub fn to_json(&self) -> AlgebraJson {
        let q = &self.quiver;
        let mut out = AlgebraJson {
            vertices: q.labels.clone(),
            arrows: q
                .arrows
                .iter()
                .map(|a| ArrowJson { id: a.id.clone(), src: q.labels[a.src], tgt: q.labels[a.tgt] })
                .collect(),
            zero_relations: Vec::new(),
            commutativity_relations: Vec::new(),
            linear_relations: Vec::new(),
        };
        for r in self.relations.relations() {
            match r.kind() {
                RelationKind::Zero => out.zero_relations.push(q.path_ids(&r.terms[0].1)),
                RelationKind::Commutativity => out
                    .commutativity_relations
                    .push([q.path_ids(&r.terms[0].1), q.path_ids(&r.terms[1].1)]),
                RelationKind::Linear => {
                    out.linear_relations.push(r.terms.iter().map(|(c, p)| (*c, q.path_ids(p))).collect())
                }
            }
        }
        out
    }

    pub fn from_json(j: &AlgebraJson) -> Result<BoundQuiverAlgebra> {
        let labels = j.vertices.clone();
        let idx = |l: u32| -> Result<usize> {
            labels.iter().position(|&x| x == l).ok_or_else(|| Error::InvalidInput(format!("unknown vertex {l}")))
        };
        let arrows = j
            .arrows
            .iter()
            .map(|a| Ok(Arrow { id: a.id.clone(), src: idx(a.src)?, tgt: idx(a.tgt)? }))
            .collect::<Result<Vec<_>>>()?;
        let quiver = Quiver::new(labels.clone(), arrows)?;
        let mut rels = Vec::new();
        for z in &j.zero_relations {
            rels.push(Relation::zero(quiver.path_from_ids(z)?));
        }
        for [p, q] in &j.commutativity_relations {
            let (p, q) = (quiver.path_from_ids(p)?, quiver.path_from_ids(q)?);
            if p.src != q.src || p.tgt != q.tgt {
                return Err(Error::InvalidInput("commutativity relation between non-parallel paths".into()));
            }
            rels.push(Relation { src: p.src, tgt: p.tgt, terms: vec![(Q::one(), p), (-Q::one(), q)] });
        }
        for l in &j.linear_relations {
            let terms = l.iter().map(|(c, ids)| Ok((*c, quiver.path_from_ids(ids)?))).collect::<Result<Vec<_>>>()?;
            let (s, t) = terms.first().map(|(_, p)| (p.src, p.tgt)).ok_or_else(|| Error::InvalidInput("empty relation".into()))?;
            rels.push(Relation { src: s, tgt: t, terms });
        }
        BoundQuiverAlgebra::new(quiver, RelationSet::new(rels))
    }

    /// Hex SHA-256 of the canonical JSON form.
    pub fn digest(&self) -> String {
        let s = serde_json::to_string(&self.to_json()).expect("algebra json");
        hex::encode(Sha256::digest(s.as_bytes()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowJson {
    pub id: String,
    pub src: u32,
    pub tgt: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    pub vertices: Vec<u32>,
    pub arrows: Vec<ArrowJson>,
    pub zero_relations: Vec<Vec<String>>,
    pub commutativity_relations: Vec<[Vec<String>; 2]>,
    /// Relations that are neither monomial nor binomial `p - q`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub linear_relations: Vec<Vec<(Q, Vec<String>)>>,
}

/// `A/⟨e⟩` together with the embedding of surviving vertices.
#[derive(Clone, Debug)]
pub struct IdempotentQuotient {
    pub killed: BTreeSet<usize>,
    /// Parent vertex → quotient vertex.
    pub vertex_map: Vec<Option<usize>>,
    /// Quotient vertex → parent vertex.
    pub surviving: Vec<usize>,
    pub quotient: Arc<BoundQuiverAlgebra>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count_paths_shorter_than(n: usize, r: usize) -> usize {
        // brute force over all intervals i..=j
        (0..n).flat_map(|i| (i..n).map(move |j| j - i)).filter(|&len| len < r).count()
    }

    #[test]
    fn linear_an_dimensions() {
        let a = BoundQuiverAlgebra::linear_an(7, Some(3)).unwrap();
        assert_eq!(a.n_vertices(), 7);
        assert_eq!(a.quiver().arrows().len(), 6);
        assert_eq!(a.relations().zero_relations().count(), 4);
        assert_eq!(a.dim(), count_paths_shorter_than(7, 3));
        assert_eq!(a.dim(), 18);
        assert_eq!(BoundQuiverAlgebra::linear_an(1, None).unwrap().dim(), 1);
        assert_eq!(BoundQuiverAlgebra::linear_an(3, None).unwrap().dim(), 6);
    }

    #[test]
    fn linear_an_rejects_bad_input() {
        assert!(BoundQuiverAlgebra::linear_an(0, None).is_err());
        assert!(BoundQuiverAlgebra::linear_an(3, Some(1)).is_err());
    }

    #[test]
    fn quotient_dimensions() {
        let a = BoundQuiverAlgebra::linear_an(7, Some(3)).unwrap();
        let q = a.quotient_by_idempotent(&[5, 6].into_iter().collect()).unwrap();
        assert_eq!(q.quotient.dim(), 12);
        assert_eq!(q.quotient.n_vertices(), 5);
        let same = a.quotient_by_idempotent(&BTreeSet::new()).unwrap();
        assert_eq!(same.quotient.dim(), a.dim());
        let zero = a.quotient_by_idempotent(&(0..7).collect()).unwrap();
        assert_eq!(zero.quotient.dim(), 0);
        // dim A/<e> = dim A - dim <e>
        let k: BTreeSet<usize> = [2].into_iter().collect();
        let q = a.quotient_by_idempotent(&k).unwrap();
        assert_eq!(q.quotient.dim(), a.dim() - a.idempotent_ideal(&k).cols());
    }

    #[test]
    fn cycles_are_rejected() {
        let arrows = vec![Arrow { id: "x".into(), src: 0, tgt: 1 }, Arrow { id: "y".into(), src: 1, tgt: 0 }];
        assert!(matches!(Quiver::new(vec![1, 2], arrows), Err(Error::OrientedCycle(_))));
    }

    #[test]
    fn opposite_reverses_arrows() {
        let a = BoundQuiverAlgebra::linear_an(3, None).unwrap();
        let op = a.opposite();
        assert_eq!(op.quiver().arrows()[0].src, 1);
        assert_eq!(op.quiver().arrows()[0].tgt, 0);
        assert_eq!(op.dim(), a.dim());
        assert_eq!(op.opposite(), a);
        let one = BoundQuiverAlgebra::linear_an(1, None).unwrap();
        assert_eq!(one.opposite(), one);
    }

    #[test]
    fn json_round_trip() {
        let a = BoundQuiverAlgebra::linear_an(5, Some(2)).unwrap();
        let j = a.to_json();
        let s = serde_json::to_string(&j).unwrap();
        let back: AlgebraJson = serde_json::from_str(&s).unwrap();
        assert_eq!(back, j);
        assert_eq!(BoundQuiverAlgebra::from_json(&back).unwrap(), a);
    }

    #[test]
    fn associativity_small() {
        for a in [
            BoundQuiverAlgebra::linear_an(4, None).unwrap(),
            BoundQuiverAlgebra::linear_an(5, Some(3)).unwrap(),
        ] {
            assert!(a.is_associative());
        }
    }
}
