//! Quiver-with-relations presentations of endomorphism algebras `End(X_1 ⊕ ⋯ ⊕ X_m)^op`.
//!
//! Vertex `i` stands for `X_i`. A map `X_i → X_j` corresponds to a path `j → i`,
//! and the path `[a_1, …, a_k]` evaluates to `f_{a_1} ∘ ⋯ ∘ f_{a_k}`.

use std::collections::HashMap;

use crate::algebra::{Arrow, BoundQuiverAlgebra, Path, Quiver, Relation, RelationSet};
use crate::error::{Error, Result};
use crate::linalg::{reduced_span, Matrix};
use crate::module::{decompose, hom_space, indecomposable_iso, Morphism, Representation};
use crate::rational::Q;

#[derive(Clone, Debug)]
pub struct Presentation {
    pub algebra: BoundQuiverAlgebra,
    /// The module map each arrow stands for.
    pub arrow_maps: Vec<Morphism>,
    pub length_two_generated: bool,
}

struct HomBlock {
    basis: Vec<Morphism>,
    solver: Matrix,
}

impl HomBlock {
    fn new(basis: Vec<Morphism>, src: &Representation, tgt: &Representation) -> HomBlock {
        let len: usize = (0..src.dim_vector().len()).map(|v| src.dim(v) * tgt.dim(v)).sum();
        let cols: Vec<Vec<Q>> = basis.iter().map(Morphism::coords).collect();
        HomBlock { solver: Matrix::from_cols(len, &cols), basis }
    }

    fn coords(&self, f: &Morphism) -> Vec<Q> {
        if self.basis.is_empty() {
            return Vec::new();
        }
        self.solver.solve(&f.coords()).expect("morphism lies in the Hom space")
    }
}

/// Presents `End(⊕ modules)^op` by a quiver with relations.
pub fn endomorphism_presentation(modules: &[Representation]) -> Result<Presentation> {
    let m = modules.len();
    for x in modules {
        if decompose(x)?.len() != 1 {
            return Err(Error::Decomposable(format!("{:?}", x.dim_vector())));
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            if indecomposable_iso(&modules[i], &modules[j]).is_some() {
                return Err(Error::InvalidInput(format!("summands {} and {} are isomorphic", i + 1, j + 1)));
            }
        }
    }
    let homs: Vec<Vec<HomBlock>> = (0..m)
        .map(|i| (0..m).map(|j| HomBlock::new(hom_space(&modules[i], &modules[j]), &modules[i], &modules[j])).collect())
        .collect();

    // radical: all maps between distinct summands, trace-zero endomorphisms otherwise
    let rad: Vec<Vec<Vec<Morphism>>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    if i != j {
                        return homs[i][j].basis.clone();
                    }
                    let traces: Vec<Q> =
                        homs[i][i].basis.iter().map(|f| f.maps().iter().map(Matrix::trace).sum()).collect();
                    let t = Matrix::from_rows_sized(1, traces.len(), &[traces]);
                    t.nullspace()
                        .into_iter()
                        .map(|c| {
                            let terms: Vec<(Q, &Morphism)> = c.iter().copied().zip(homs[i][i].basis.iter()).collect();
                            Morphism::combination(&modules[i], &modules[i], &terms)
                        })
                        .collect()
                })
                .collect()
        })
        .collect();

    // irreducible maps: a complement of rad² inside rad
    let mut arrows: Vec<Arrow> = Vec::new();
    let mut arrow_maps: Vec<Morphism> = Vec::new();
    for i in 0..m {
        for j in 0..m {
            let mut rad2: Vec<Vec<Q>> = Vec::new();
            for k in 0..m {
                for f in &rad[i][k] {
                    for g in &rad[k][j] {
                        rad2.push(homs[i][j].coords(&f.then(g)));
                    }
                }
            }
            let dim = homs[i][j].basis.len();
            let mut span = reduced_span(&Matrix::from_cols(dim, &rad2));
            for f in &rad[i][j] {
                let c = homs[i][j].coords(f);
                let grown = reduced_span(&span.hstack(&Matrix::from_cols(dim, &[c])));
                if grown.cols() > span.cols() {
                    span = grown;
                    arrow_maps.push(f.clone());
                    arrows.push(Arrow { id: String::new(), src: j, tgt: i });
                }
            }
        }
    }
    for (k, a) in arrows.iter_mut().enumerate() {
        a.id = format!("a{}", k + 1);
    }
    let labels: Vec<u32> = (1..=m as u32).collect();
    let quiver = Quiver::new(labels, arrows)?;

    let mut locked = vec![false; arrow_maps.len()];
    loop {
        let rels = relations(&quiver, &arrow_maps, modules, &homs)?;
        // rescale an arrow so that some binomial relation reads p - q
        let mut changed = false;
        for r in &rels {
            if r.terms.len() != 2 || (r.terms[1].0 + Q::one()).is_zero() {
                continue;
            }
            let (p, q) = (&r.terms[0].1, &r.terms[1].1);
            if let Some(&a) = q.arrows.iter().find(|&&a| !locked[a] && !p.arrows.contains(&a)) {
                let mu = -r.terms[1].0;
                arrow_maps[a] = arrow_maps[a].scale(mu);
                for &b in p.arrows.iter().chain(q.arrows.iter()) {
                    locked[b] = true;
                }
                changed = true;
                break;
            }
        }
        if changed {
            continue;
        }
        for r in &rels {
            for (_, p) in &r.terms {
                for &b in &p.arrows {
                    locked[b] = true;
                }
            }
        }
        let set = RelationSet::new(rels);
        let length_two_generated = set.length_two_generated();
        let algebra = BoundQuiverAlgebra::new(quiver.clone(), set)?;
        let expected: usize = homs.iter().flatten().map(|h| h.basis.len()).sum();
        if algebra.dim() != expected {
            return Err(Error::Falsification(format!(
                "presented algebra has dimension {} but the endomorphism algebra has dimension {expected}",
                algebra.dim()
            )));
        }
        return Ok(Presentation { algebra, arrow_maps, length_two_generated });
    }
}

/// Minimal generators of the kernel of `kQ → End`, block by block.
fn relations(
    quiver: &Quiver,
    arrow_maps: &[Morphism],
    modules: &[Representation],
    homs: &[Vec<HomBlock>],
) -> Result<Vec<Relation>> {
    let paths = quiver.all_paths();
    let n = quiver.n_vertices();
    let mut value: HashMap<&Path, Morphism> = HashMap::new();
    // shorter paths first, so every prefix is already evaluated
    let mut by_len: Vec<&Path> = paths.iter().collect();
    by_len.sort_by_key(|p| p.len());
    for p in by_len {
        let f = match p.len() {
            0 => Morphism::identity(&modules[p.src]),
            1 => arrow_maps[p.arrows[0]].clone(),
            k => {
                let mid = quiver.arrows()[p.arrows[k - 2]].tgt;
                let prefix = Path { src: p.src, tgt: mid, arrows: p.arrows[..k - 1].to_vec() };
                arrow_maps[p.arrows[k - 1]].then(&value[&prefix])
            }
        };
        value.insert(p, f);
    }
    let index: HashMap<&Path, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut blocks: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (i, p) in paths.iter().enumerate() {
        blocks.entry((p.src, p.tgt)).or_default().push(i);
    }
    // kernel of each block, as vectors over the block's paths
    let mut kernels: HashMap<(usize, usize), Matrix> = HashMap::new();
    for s in 0..n {
        for t in 0..n {
            let Some(ids) = blocks.get(&(s, t)) else { continue };
            let h = &homs[t][s];
            let cols: Vec<Vec<Q>> = ids.iter().map(|&i| h.coords(&value[&paths[i]])).collect();
            let eval = Matrix::from_cols(h.basis.len(), &cols);
            if eval.rank() != h.basis.len() {
                return Err(Error::Falsification("arrows do not generate the radical".into()));
            }
            kernels.insert((s, t), reduced_span(&eval.kernel()));
        }
    }
    let mut out = Vec::new();
    let mut keys: Vec<(usize, usize)> = kernels.keys().copied().collect();
    keys.sort();
    for (s, t) in keys {
        let ids = &blocks[&(s, t)];
        let pos: HashMap<usize, usize> = ids.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let ker = &kernels[&(s, t)];
        if ker.cols() == 0 {
            continue;
        }
        // arrows·I + I·arrows inside this block
        let mut gens: Vec<Vec<Q>> = Vec::new();
        for (ai, a) in quiver.arrows().iter().enumerate() {
            let mut push = |src_block: (usize, usize), prepend: bool| {
                let Some(k) = kernels.get(&src_block) else { return };
                let bids = &blocks[&src_block];
                for c in k.col_vectors() {
                    let mut v = vec![Q::zero(); ids.len()];
                    for (x, &pi) in c.iter().zip(bids) {
                        if x.is_zero() {
                            continue;
                        }
                        let p = &paths[pi];
                        let mut arrows = Vec::with_capacity(p.len() + 1);
                        if prepend {
                            arrows.push(ai);
                            arrows.extend_from_slice(&p.arrows);
                        } else {
                            arrows.extend_from_slice(&p.arrows);
                            arrows.push(ai);
                        }
                        let q = Path { src: s, tgt: t, arrows };
                        v[pos[&index[&q]]] += *x;
                    }
                    gens.push(v);
                }
            };
            if a.src == s {
                push((a.tgt, t), true);
            }
            if a.tgt == t {
                push((s, a.src), false);
            }
        }
        let mut span = reduced_span(&Matrix::from_cols(ids.len(), &gens));
        for c in ker.col_vectors() {
            let grown = reduced_span(&span.hstack(&Matrix::from_cols(ids.len(), std::slice::from_ref(&c))));
            if grown.cols() > span.cols() {
                span = grown;
                let terms: Vec<(Q, Path)> =
                    c.iter().zip(ids).filter(|(x, _)| !x.is_zero()).map(|(x, &i)| (*x, paths[i].clone())).collect();
                out.push(Relation { src: s, tgt: t, terms }.normalized());
            }
        }
    }
    Ok(out)
}
