//! Minimal approximations by an additive category `add{X_1, …, X_m}`.

use crate::linalg::Matrix;
use crate::module::{hom_space, Morphism, Representation};
use crate::rational::Q;

/// `add` of finitely many pairwise non-isomorphic indecomposables, with radical morphisms cached.
#[derive(Clone, Debug)]
pub struct AddCategory {
    pub objects: Vec<Representation>,
    /// `rad[i][j]` spans `rad(X_i, X_j)`.
    rad: Vec<Vec<Vec<Morphism>>>,
}

impl AddCategory {
    pub fn new(objects: Vec<Representation>) -> AddCategory {
        let rad = objects
            .iter()
            .enumerate()
            .map(|(i, x)| {
                objects
                    .iter()
                    .enumerate()
                    .map(|(j, y)| {
                        let h = hom_space(x, y);
                        if i == j {
                            trace_zero(x, &h)
                        } else {
                            h
                        }
                    })
                    .collect()
            })
            .collect();
        AddCategory { objects, rad }
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn radical(&self, i: usize, j: usize) -> &[Morphism] {
        &self.rad[i][j]
    }

    /// Direct sum of the objects with the given indices, with injections and projections.
    pub fn sum(&self, idx: &[usize]) -> (Representation, Vec<Morphism>, Vec<Morphism>) {
        let alg = self.objects.first().map(|o| o.algebra().clone());
        let parts: Vec<Representation> = idx.iter().map(|&i| self.objects[i].clone()).collect();
        match alg {
            Some(a) => Representation::direct_sum_with_maps(&a, &parts),
            None => unreachable!("sums are only formed over a nonempty category"),
        }
    }
}

fn trace_zero(x: &Representation, ends: &[Morphism]) -> Vec<Morphism> {
    let traces: Vec<Q> = ends.iter().map(|f| f.maps().iter().map(Matrix::trace).sum()).collect();
    Matrix::from_rows_sized(1, traces.len(), &[traces])
        .nullspace()
        .into_iter()
        .map(|c| {
            let terms: Vec<(Q, &Morphism)> = c.into_iter().zip(ends.iter()).collect();
            Morphism::combination(x, x, &terms)
        })
        .collect()
}

/// A map from (right) or to (left) a sum of category objects.
#[derive(Clone, Debug)]
pub struct Approximation {
    /// Object index of each summand, in block order.
    pub indices: Vec<usize>,
    pub map: Morphism,
}

/// Picks vectors of `basis` completing `span` to a basis of their joint span.
fn complement_of(basis: &[Morphism], span: &[Morphism]) -> Vec<usize> {
    if basis.is_empty() {
        return Vec::new();
    }
    let len = basis[0].coords().len();
    let mut cur = Matrix::from_cols(len, &span.iter().map(Morphism::coords).collect::<Vec<_>>());
    let mut rank = cur.rank();
    let mut out = Vec::new();
    for (k, b) in basis.iter().enumerate() {
        let next = cur.hstack(&Matrix::from_cols(len, &[b.coords()]));
        let r = next.rank();
        if r > rank {
            cur = next;
            rank = r;
            out.push(k);
        }
    }
    out
}

/// Minimal right approximation `⊕ X_i → M`.
pub fn right_approximation(cat: &AddCategory, m: &Representation) -> Approximation {
    let homs: Vec<Vec<Morphism>> = cat.objects.iter().map(|x| hom_space(x, m)).collect();
    let mut chosen: Vec<(usize, Morphism)> = Vec::new();
    for i in 0..cat.len() {
        let mut through_rad = Vec::new();
        for j in 0..cat.len() {
            for r in cat.radical(i, j) {
                for h in &homs[j] {
                    through_rad.push(r.then(h));
                }
            }
        }
        for k in complement_of(&homs[i], &through_rad) {
            chosen.push((i, homs[i][k].clone()));
        }
    }
    let indices: Vec<usize> = chosen.iter().map(|c| c.0).collect();
    let map = if indices.is_empty() {
        Morphism::zero(&Representation::zero(m.algebra()), m)
    } else {
        let (sum, _, proj) = cat.sum(&indices);
        chosen
            .iter()
            .zip(&proj)
            .fold(Morphism::zero(&sum, m), |acc, ((_, h), p)| acc.add(&p.then(h)))
    };
    Approximation { indices, map }
}

/// Minimal left approximation `M → ⊕ X_i`.
pub fn left_approximation(cat: &AddCategory, m: &Representation) -> Approximation {
    let homs: Vec<Vec<Morphism>> = cat.objects.iter().map(|x| hom_space(m, x)).collect();
    let mut chosen: Vec<(usize, Morphism)> = Vec::new();
    for i in 0..cat.len() {
        let mut through_rad = Vec::new();
        for j in 0..cat.len() {
            for r in cat.radical(j, i) {
                for h in &homs[j] {
                    through_rad.push(h.then(r));
                }
            }
        }
        for k in complement_of(&homs[i], &through_rad) {
            chosen.push((i, homs[i][k].clone()));
        }
    }
    let indices: Vec<usize> = chosen.iter().map(|c| c.0).collect();
    let map = if indices.is_empty() {
        Morphism::zero(m, &Representation::zero(m.algebra()))
    } else {
        let (sum, inj, _) = cat.sum(&indices);
        chosen
            .iter()
            .zip(&inj)
            .fold(Morphism::zero(m, &sum), |acc, ((_, h), i)| acc.add(&h.then(i)))
    };
    Approximation { indices, map }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::BoundQuiverAlgebra;
    use crate::homology::projective_cover;

    #[test]
    fn projective_approximation_is_the_cover() {
        let a = Arc::new(BoundQuiverAlgebra::linear_an(4, Some(3)).unwrap());
        let cat = AddCategory::new((0..4).map(|v| Representation::projective(&a, v)).collect());
        let m = Representation::injective(&a, 3);
        let ap = right_approximation(&cat, &m);
        let (cover, tops) = projective_cover(&m);
        assert_eq!(ap.indices, tops);
        assert!(ap.map.is_surjective() && ap.map.is_natural());
        assert_eq!(ap.map.source.dim_vector(), cover.source.dim_vector());
    }

    #[test]
    fn left_approximation_by_injectives_is_the_envelope() {
        let a = Arc::new(BoundQuiverAlgebra::linear_an(4, None).unwrap());
        let cat = AddCategory::new((0..4).map(|v| Representation::injective(&a, v)).collect());
        let m = Representation::simple(&a, 1);
        let ap = left_approximation(&cat, &m);
        assert_eq!(ap.indices, vec![1]);
        assert!(ap.map.is_injective());
    }
}
