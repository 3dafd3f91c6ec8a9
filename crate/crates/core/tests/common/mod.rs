//! Dense big-rational oracles and shared instances for the integration tests.
#![allow(dead_code)]

use std::sync::Arc;

use hitt::algebra::BoundQuiverAlgebra;
use hitt::ct::{build_ct_catalog, iterate_auslander, CtCatalog};
use hitt::homology::projective_cover;
use hitt::linalg::Matrix;
use hitt::module::{indecomposable_iso, Algebra, Morphism, Representation};
use hitt::rational::Q;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn big(q: &Q) -> BigRational {
    BigRational::new(BigInt::from(q.numer()), BigInt::from(q.denom()))
}

/// Rank by Gaussian elimination over big rationals.
pub fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &pivot;
                for k in c..cols {
                    let x = &f * &rows[r][k];
                    rows[i][k] -= x;
                }
            }
        }
        r += 1;
    }
    r
}

pub fn matrix_rank(m: &Matrix) -> usize {
    rank((0..m.rows()).map(|r| m.row(r).iter().map(big).collect()).collect())
}

/// `dim Hom(M, N)` from the Kronecker form `(I ⊗ N_a) vec f_s - (M_aᵀ ⊗ I) vec f_t = 0`.
pub fn hom_dim(m: &Representation, n: &Representation) -> usize {
    let alg = m.algebra();
    let nv = alg.n_vertices();
    let mut offset = vec![0; nv + 1];
    for v in 0..nv {
        offset[v + 1] = offset[v] + m.dim(v) * n.dim(v);
    }
    let vars = offset[nv];
    if vars == 0 {
        return 0;
    }
    let mut rows = Vec::new();
    for (ai, a) in alg.quiver().arrows().iter().enumerate() {
        let (s, t) = (a.src, a.tgt);
        let (ma, na) = (m.arrow_map(ai), n.arrow_map(ai));
        // vec is column-major: entry (r, c) of f_v sits at offset[v] + c * n_v + r
        for c in 0..m.dim(s) {
            for r in 0..n.dim(t) {
                let mut row = vec![BigRational::zero(); vars];
                for k in 0..n.dim(s) {
                    row[offset[s] + c * n.dim(s) + k] += big(&na[(r, k)]);
                }
                for k in 0..m.dim(t) {
                    row[offset[t] + k * n.dim(t) + r] -= big(&ma[(k, c)]);
                }
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return vars;
    }
    vars - rank(rows)
}

/// `dim Ext^1(X, N) = hom(ΩX, N) - hom(P_0, N) + hom(X, N)` for the projective cover `P_0 → X`.
pub fn ext1_dim(x: &Representation, n: &Representation) -> usize {
    let (cover, _) = projective_cover(x);
    let omega = cover.kernel().source;
    hom_dim(&omega, n) + hom_dim(x, n) - hom_dim(&cover.source, n)
}

pub fn ext_dim(i: usize, m: &Representation, n: &Representation) -> usize {
    if i == 0 {
        return hom_dim(m, n);
    }
    let mut x = m.clone();
    for _ in 1..i {
        x = projective_cover(&x).0.kernel().source;
    }
    ext1_dim(&x, n)
}

/// `dim ker f` from per-vertex ranks.
pub fn kernel_dim(f: &Morphism) -> usize {
    f.maps().iter().map(|g| g.cols() - if g.rows() == 0 || g.cols() == 0 { 0 } else { matrix_rank(g) }).sum()
}

pub fn nakayama(n: usize, r: usize) -> Algebra {
    Arc::new(BoundQuiverAlgebra::linear_an(n, Some(r)).unwrap())
}

pub fn path_an(n: usize) -> Algebra {
    Arc::new(BoundQuiverAlgebra::linear_an(n, None).unwrap())
}

pub fn auslander(n: usize, d: usize) -> Algebra {
    Arc::new(iterate_auslander(n, d).unwrap())
}

pub fn eg1() -> CtCatalog {
    build_ct_catalog(&auslander(3, 2), 2, None).unwrap()
}

pub fn eg2() -> CtCatalog {
    build_ct_catalog(&nakayama(7, 3), 4, None).unwrap()
}

/// A random matrix `LU` with unit triangular factors and small integer entries.
pub fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let mut l = Matrix::identity(n);
    let mut u = Matrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            l[(i, j)] = Q::from(rng.gen_range(-2i64..=2));
            u[(j, i)] = Q::from(rng.gen_range(-2i64..=2));
        }
    }
    &l * &u
}

/// The same module with a random basis change at every vertex.
pub fn conjugate(rng: &mut ChaCha8Rng, m: &Representation) -> Representation {
    let alg = m.algebra();
    let g: Vec<Matrix> = (0..alg.n_vertices()).map(|v| random_invertible(rng, m.dim(v))).collect();
    let maps = alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| &(&g[a.tgt] * m.arrow_map(ai)) * &g[a.src].inverse().unwrap())
        .collect();
    Representation::new(alg, m.dim_vector().to_vec(), maps).unwrap()
}

/// Whether two lists of indecomposables agree up to isomorphism and order.
pub fn same_multiset(a: &[Representation], b: &[Representation]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut left: Vec<&Representation> = b.iter().collect();
    for x in a {
        let Some(p) = left.iter().position(|y| indecomposable_iso(x, y).is_some()) else { return false };
        left.swap_remove(p);
    }
    true
}
