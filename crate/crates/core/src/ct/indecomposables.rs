//! Enumeration of all indecomposables by knitting almost split sequences.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::homology::{is_projective, projective_cover, tau};
use crate::linalg::Matrix;
use crate::module::{decompose, hom_space, indecomposable_iso, Algebra, Morphism, Representation};
use crate::rational::Q;

#[derive(Clone, Debug)]
pub struct IndecomposableList {
    /// Sorted by dimension vector.
    pub modules: Vec<Representation>,
}

/// Pushout of `f: X → Y` and `g: X → Z`, returned as the maps `Y → P` and `Z → P`.
pub fn pushout(f: &Morphism, g: &Morphism) -> (Morphism, Morphism) {
    let alg = f.source.algebra();
    let (_, inc, _) = Representation::direct_sum_with_maps(alg, &[f.target.clone(), g.target.clone()]);
    let diag = f.then(&inc[0]).sub(&g.then(&inc[1]));
    let proj = diag.cokernel();
    (inc[0].then(&proj), inc[1].then(&proj))
}

/// Coordinates of each vector of `vs` in the basis `basis`, as columns.
fn coords_in(basis: &[Morphism], vs: &[Morphism]) -> Matrix {
    let len = basis.first().map_or(0, |b| b.coords().len());
    let m = Matrix::from_cols(len, &basis.iter().map(Morphism::coords).collect::<Vec<_>>());
    let cols: Vec<Vec<Q>> = vs.iter().map(|v| m.solve(&v.coords()).expect("vector lies in the span")).collect();
    Matrix::from_cols(basis.len(), &cols)
}

/// Middle term of the almost split sequence ending in the indecomposable non-projective `m`.
pub fn almost_split_middle(m: &Representation) -> Result<Option<Representation>> {
    if is_projective(m) {
        return Ok(None);
    }
    let n = tau(m);
    let (cover, _) = projective_cover(m);
    let k = cover.kernel();
    let omega = k.source.clone();
    let hom = hom_space(&omega, &n);
    if hom.is_empty() {
        return Err(Error::Falsification(format!("Ext^1(M, τM) vanishes for {:?}", m.dim_vector())));
    }
    let h = hom.len();
    let restricted: Vec<Morphism> = hom_space(&cover.source, &n).iter().map(|f| k.then(f)).collect();
    let bnd = if restricted.is_empty() { Matrix::zeros(h, 0) } else { coords_in(&hom, &restricted).col_basis() };

    // radical of End(M): trace-zero endomorphisms
    let ends = hom_space(m, m);
    let traces: Vec<Q> = ends.iter().map(|f| f.maps().iter().map(Matrix::trace).sum()).collect();
    let rad: Vec<Morphism> = Matrix::from_rows_sized(1, traces.len(), &[traces])
        .nullspace()
        .into_iter()
        .map(|c| {
            let terms: Vec<(Q, &Morphism)> = c.into_iter().zip(ends.iter()).collect();
            Morphism::combination(m, m, &terms)
        })
        .collect();

    // socle of Ext^1(M, τM) as an End(M)-module: classes killed by the radical
    let mut blocks: Vec<Matrix> = Vec::new();
    for r in &rad {
        let rp = cover.then(r).factor_through_right(&cover).expect("projective lifting");
        let ro = k.then(&rp).restrict_target(&k).expect("lift preserves the syzygy");
        let acted: Vec<Morphism> = hom.iter().map(|g| ro.then(g)).collect();
        blocks.push(coords_in(&hom, &acted));
    }
    let nb = bnd.cols();
    let mut sys = Matrix::zeros(h * blocks.len(), h + nb * blocks.len());
    for (t, a) in blocks.iter().enumerate() {
        sys.set_block(t * h, 0, a);
        sys.set_block(t * h, h + t * nb, &bnd.scale(-Q::one()));
    }
    let socle: Vec<Vec<Q>> = if blocks.is_empty() {
        Matrix::identity(h).col_vectors()
    } else {
        sys.nullspace().into_iter().map(|v| v[..h].to_vec()).collect()
    };
    let class = socle
        .into_iter()
        .find(|x| bnd.hstack(&Matrix::from_cols(h, std::slice::from_ref(x))).rank() > bnd.rank())
        .ok_or_else(|| Error::Falsification(format!("no almost split class for {:?}", m.dim_vector())))?;
    let terms: Vec<(Q, &Morphism)> = class.into_iter().zip(hom.iter()).collect();
    let g = Morphism::combination(&omega, &n, &terms);
    let (to_e, _) = pushout(&k, &g);
    Ok(Some(to_e.target))
}

/// Indecomposables with an irreducible map into `m`.
fn predecessors(m: &Representation) -> Result<Vec<Representation>> {
    if is_projective(m) {
        let rad = m.radical().source;
        return if rad.is_zero() { Ok(Vec::new()) } else { Ok(decompose(&rad)?.parts) };
    }
    let e = almost_split_middle(m)?.expect("non-projective");
    Ok(decompose(&e)?.parts)
}

/// Every indecomposable in the Auslander–Reiten components meeting the projectives.
///
/// For representation-finite algebras this is all of them; the cap bounds the count.
pub fn all_indecomposables(alg: &Algebra, cap: usize) -> Result<IndecomposableList> {
    let op: Algebra = Arc::new(alg.opposite());
    let mut found: Vec<Representation> = Vec::new();
    let mut queue: Vec<Representation> = Vec::new();
    let push = |x: Representation, found: &mut Vec<Representation>, queue: &mut Vec<Representation>| -> Result<()> {
        if x.is_zero() || found.iter().any(|y| indecomposable_iso(y, &x).is_some()) {
            return Ok(());
        }
        if found.len() >= cap {
            return Err(Error::CapExceeded(format!("more than {cap} indecomposables")));
        }
        found.push(x.clone());
        queue.push(x);
        Ok(())
    };
    for v in 0..alg.n_vertices() {
        push(Representation::projective(alg, v), &mut found, &mut queue)?;
    }
    while let Some(m) = queue.pop() {
        let mut next = predecessors(&m)?;
        for x in predecessors(&m.dual(&op))? {
            next.push(x.dual(alg));
        }
        for x in next {
            push(x, &mut found, &mut queue)?;
        }
    }
    found.sort_by(|a, b| a.dim_vector().cmp(b.dim_vector()));
    Ok(IndecomposableList { modules: found })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BoundQuiverAlgebra;

    fn alg(n: usize, rad: Option<usize>) -> Algebra {
        Arc::new(BoundQuiverAlgebra::linear_an(n, rad).unwrap())
    }

    #[test]
    fn linear_a_counts() {
        for n in 1..=4 {
            let list = all_indecomposables(&alg(n, None), 100).unwrap();
            assert_eq!(list.modules.len(), n * (n + 1) / 2);
        }
        // Nakayama algebra with Kupisch series bounded by 3
        let list = all_indecomposables(&alg(7, Some(3)), 100).unwrap();
        assert_eq!(list.modules.len(), 7 + 6 + 5);
    }

    #[test]
    fn almost_split_sequence_of_a3() {
        let a = alg(3, None);
        // 0 → P_2 → P_1 ⊕ S_2 → I_2 → 0 over 1→2→3
        let i2 = Representation::injective(&a, 1);
        let e = almost_split_middle(&i2).unwrap().unwrap();
        assert_eq!(e.dim_vector(), &[1, 2, 1]);
        let parts = decompose(&e).unwrap().parts;
        assert_eq!(parts.len(), 2);
        assert!(almost_split_middle(&Representation::projective(&a, 0)).unwrap().is_none());
    }

    #[test]
    fn cap_is_reported() {
        assert!(matches!(all_indecomposables(&alg(4, None), 3), Err(Error::CapExceeded(_))));
    }
}
