//! Krull–Schmidt decomposition by Fitting splitting of endomorphisms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{hom_space, indecomposable_iso, Morphism, Representation};
use crate::error::{Error, Result};
use crate::linalg::{fitting_pair, rational_roots, Matrix};
use crate::rational::Q;

#[derive(Clone, Debug)]
pub struct Decomposition {
    /// Indecomposable summands, one entry per occurrence.
    pub parts: Vec<Representation>,
    /// Inclusion of each part into the decomposed module; together they form an isomorphism.
    pub inclusions: Vec<Morphism>,
}

impl Decomposition {
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Summands grouped up to isomorphism, with multiplicities.
    pub fn grouped(&self) -> Vec<(Representation, usize)> {
        let mut out: Vec<(Representation, usize)> = Vec::new();
        for p in &self.parts {
            match out.iter_mut().find(|(q, _)| indecomposable_iso(q, p).is_some()) {
                Some(entry) => entry.1 += 1,
                None => out.push((p.clone(), 1)),
            }
        }
        out
    }

    pub fn same_summands(&self, other: &Decomposition) -> bool {
        let mut a = self.grouped();
        let b = other.grouped();
        if a.len() != b.len() {
            return false;
        }
        for (q, k) in b {
            let Some(pos) = a.iter().position(|(p, m)| *m == k && indecomposable_iso(p, &q).is_some()) else {
                return false;
            };
            a.swap_remove(pos);
        }
        true
    }

    /// Checks that the inclusions assemble to an isomorphism onto `m`.
    pub fn verify(&self, m: &Representation) -> bool {
        let n = m.dim_vector().len();
        (0..n).all(|v| {
            let cols = self.inclusions.iter().fold(Matrix::zeros(m.dim(v), 0), |acc, f| acc.hstack(f.map(v)));
            cols.is_invertible() || (m.dim(v) == 0 && cols.cols() == 0)
        }) && self.inclusions.iter().all(Morphism::is_natural)
    }
}

/// Rank of the trace form on `End(M)`; equals `dim End(M)/rad` for split endomorphism rings.
fn trace_form_rank(ends: &[Morphism]) -> usize {
    let k = ends.len();
    let mut g = Matrix::zeros(k, k);
    for i in 0..k {
        for j in i..k {
            let t: Q = ends[i].then(&ends[j]).maps().iter().map(Matrix::trace).sum();
            g[(i, j)] = t;
            g[(j, i)] = t;
        }
    }
    g.rank()
}

pub fn is_indecomposable(m: &Representation) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    let ends = hom_space(m, m);
    if ends.len() == 1 || trace_form_rank(&ends) == 1 {
        return Ok(true);
    }
    match split(m, &ends) {
        Some(_) => Ok(false),
        None => Err(Error::NotSplit(format!("{:?}", m.dim_vector()))),
    }
}

pub fn decompose(m: &Representation) -> Result<Decomposition> {
    let mut parts = Vec::new();
    let mut inclusions = Vec::new();
    let mut stack = vec![Morphism::identity(m)];
    while let Some(inc) = stack.pop() {
        let x = inc.source.clone();
        if x.is_zero() {
            continue;
        }
        let ends = hom_space(&x, &x);
        if ends.len() == 1 || trace_form_rank(&ends) == 1 {
            parts.push(x);
            inclusions.push(inc);
            continue;
        }
        let (u, w) = split(&x, &ends).ok_or(Error::DecompositionStalled(x.total_dim()))?;
        for basis in [u, w] {
            let sub = x.submodule(basis);
            stack.push(sub.then(&inc));
        }
    }
    // deterministic order: by dimension vector
    let mut idx: Vec<usize> = (0..parts.len()).collect();
    idx.sort_by(|&a, &b| parts[a].dim_vector().cmp(parts[b].dim_vector()));
    let parts = idx.iter().map(|&i| parts[i].clone()).collect();
    let inclusions = idx.iter().map(|&i| inclusions[i].clone()).collect();
    Ok(Decomposition { parts, inclusions })
}

/// Fitting decomposition `M = ker ψ^N ⊕ im ψ^N` for some `ψ = φ - λ` with both parts nonzero.
fn split(m: &Representation, ends: &[Morphism]) -> Option<(Vec<Matrix>, Vec<Matrix>)> {
    let k = ends.len();
    let n = m.total_dim();
    let try_phi = |phi: &Morphism| -> Option<(Vec<Matrix>, Vec<Matrix>)> {
        let mut roots: Vec<Q> = Vec::new();
        for f in phi.maps() {
            if f.rows() == 0 {
                continue;
            }
            for r in rational_roots(&f.charpoly()) {
                if !roots.contains(&r) {
                    roots.push(r);
                }
            }
        }
        for lambda in roots {
            let pairs: Vec<(Matrix, Matrix)> = phi
                .maps()
                .iter()
                .map(|f| fitting_pair(&(f - &Matrix::identity(f.rows()).scale(lambda))))
                .collect();
            let (ker, img): (Vec<Matrix>, Vec<Matrix>) = pairs.into_iter().unzip();
            let kd: usize = ker.iter().map(Matrix::cols).sum();
            if kd > 0 && kd < n {
                return Some((ker, img));
            }
        }
        None
    };
    for e in ends {
        if let Some(s) = try_phi(e) {
            return Some(s);
        }
    }
    for i in 0..k {
        for j in 0..k {
            if let Some(s) = try_phi(&ends[i].then(&ends[j])) {
                return Some(s);
            }
            if i < j {
                if let Some(s) = try_phi(&ends[i].add(&ends[j])) {
                    return Some(s);
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..64 {
        let coeffs: Vec<Q> = (0..k).map(|_| Q::from(rng.gen_range(-3i64..=3))).collect();
        let terms: Vec<(Q, &Morphism)> = coeffs.into_iter().zip(ends.iter()).collect();
        if let Some(s) = try_phi(&Morphism::combination(m, m, &terms)) {
            return Some(s);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::BoundQuiverAlgebra;

    #[test]
    fn repeated_simple() {
        let a = Arc::new(BoundQuiverAlgebra::linear_an(2, None).unwrap());
        let s = Representation::simple(&a, 0);
        let m = Representation::direct_sum(&a, &[s.clone(), s.clone()]);
        let d = decompose(&m).unwrap();
        let g = d.grouped();
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].1, 2);
        assert!(d.verify(&m));
        assert!(!is_indecomposable(&m).unwrap());
        assert!(is_indecomposable(&s).unwrap());
    }

    #[test]
    fn regular_module_splits_into_projectives() {
        let a = Arc::new(BoundQuiverAlgebra::linear_an(4, Some(3)).unwrap());
        let reg = Representation::regular(&a);
        let d = decompose(&reg).unwrap();
        assert_eq!(d.len(), 4);
        assert!(d.verify(&reg));
        for v in 0..4 {
            let p = Representation::projective(&a, v);
            assert!(d.parts.iter().any(|x| indecomposable_iso(x, &p).is_some()));
        }
    }

    #[test]
    fn conjugated_sum_is_recovered() {
        // P1 ⊕ S2 over A_3 with a basis change mixing the two summands at vertex 2
        let a = Arc::new(BoundQuiverAlgebra::linear_an(3, None).unwrap());
        let p = Representation::projective(&a, 0);
        let s = Representation::simple(&a, 1);
        let sum = Representation::direct_sum(&a, &[p.clone(), s.clone()]);
        let g = Matrix::from_ints(&[&[1, 1], &[0, 1]]);
        let gi = g.inverse().unwrap();
        let conj = |v: usize| if v == 1 { g.clone() } else { Matrix::identity(sum.dim(v)) };
        let conji = |v: usize| if v == 1 { gi.clone() } else { Matrix::identity(sum.dim(v)) };
        let maps = a
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, ar)| &(&conj(ar.tgt) * sum.arrow_map(ai)) * &conji(ar.src))
            .collect();
        let m = Representation::new(&a, sum.dim_vector().to_vec(), maps).unwrap();
        let d = decompose(&m).unwrap();
        assert_eq!(d.len(), 2);
        assert!(d.verify(&m));
        assert!(d.same_summands(&decompose(&sum).unwrap()));
    }

    fn a3_indecomposables(a: &crate::module::Algebra) -> Vec<Representation> {
        let mut out: Vec<Representation> = (0..3).map(|v| Representation::projective(a, v)).collect();
        out.extend([Representation::injective(a, 0), Representation::injective(a, 1), Representation::simple(a, 1)]);
        out
    }

    /// Unit lower times unit upper triangular, filled from `coeffs`.
    fn unipotent(n: usize, coeffs: &[i64]) -> Matrix {
        let mut l = Matrix::identity(n);
        let mut u = Matrix::identity(n);
        let mut k = 0;
        for i in 0..n {
            for j in 0..i {
                l[(i, j)] = Q::from(coeffs[k % coeffs.len()]);
                u[(j, i)] = Q::from(coeffs[(k + 1) % coeffs.len()]);
                k += 2;
            }
        }
        &l * &u
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(48))]
        #[test]
        fn decomposition_survives_basis_change(
            picks in proptest::collection::vec(0usize..6, 1..5),
            coeffs in proptest::collection::vec(-2i64..=2, 1..12),
        ) {
            let a = Arc::new(BoundQuiverAlgebra::linear_an(3, None).unwrap());
            let pool = a3_indecomposables(&a);
            let chosen: Vec<Representation> = picks.iter().map(|&k| pool[k].clone()).collect();
            let sum = Representation::direct_sum(&a, &chosen);
            let g: Vec<Matrix> = (0..3).map(|v| unipotent(sum.dim(v), &coeffs)).collect();
            let maps = a
                .quiver()
                .arrows()
                .iter()
                .enumerate()
                .map(|(ai, ar)| &(&g[ar.tgt] * sum.arrow_map(ai)) * &g[ar.src].inverse().unwrap())
                .collect();
            let m = Representation::new(&a, sum.dim_vector().to_vec(), maps).unwrap();
            let d = decompose(&m).unwrap();
            proptest::prop_assert!(d.verify(&m));
            proptest::prop_assert_eq!(d.len(), chosen.len());
            proptest::prop_assert!(d.same_summands(&decompose(&sum).unwrap()));
        }
    }
}
