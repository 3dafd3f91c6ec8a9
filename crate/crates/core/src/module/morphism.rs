use std::fmt;

use super::Representation;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::Q;

/// A module homomorphism, one matrix per vertex.
#[derive(Clone, PartialEq)]
pub struct Morphism {
    pub source: Representation,
    pub target: Representation,
    maps: Vec<Matrix>,
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Morphism({:?} -> {:?})", self.source, self.target)
    }
}

impl Morphism {
    pub fn new(source: Representation, target: Representation, maps: Vec<Matrix>) -> Result<Morphism> {
        let n = source.algebra().n_vertices();
        if maps.len() != n {
            return Err(Error::InvalidInput("morphism needs one matrix per vertex".into()));
        }
        for v in 0..n {
            if maps[v].shape() != (target.dim(v), source.dim(v)) {
                return Err(Error::InvalidInput("morphism matrix has the wrong shape".into()));
            }
        }
        let f = Morphism { source, target, maps };
        if !f.is_natural() {
            return Err(Error::InvalidInput("maps do not commute with the arrows".into()));
        }
        Ok(f)
    }

    pub(crate) fn new_unchecked(source: Representation, target: Representation, maps: Vec<Matrix>) -> Morphism {
        Morphism { source, target, maps }
    }

    pub fn identity(m: &Representation) -> Morphism {
        let maps = m.dim_vector().iter().map(|&d| Matrix::identity(d)).collect();
        Morphism { source: m.clone(), target: m.clone(), maps }
    }

    pub fn zero(source: &Representation, target: &Representation) -> Morphism {
        let maps = (0..source.dim_vector().len()).map(|v| Matrix::zeros(target.dim(v), source.dim(v))).collect();
        Morphism { source: source.clone(), target: target.clone(), maps }
    }

    pub fn map(&self, v: usize) -> &Matrix {
        &self.maps[v]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn is_natural(&self) -> bool {
        let alg = self.source.algebra();
        alg.quiver().arrows().iter().enumerate().all(|(ai, a)| {
            self.target.arrow_map(ai) * &self.maps[a.src] == &self.maps[a.tgt] * self.source.arrow_map(ai)
        })
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &Morphism) -> Morphism {
        let maps = self.maps.iter().zip(&next.maps).map(|(f, g)| g * f).collect();
        Morphism { source: self.source.clone(), target: next.target.clone(), maps }
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        let maps = self.maps.iter().zip(&other.maps).map(|(f, g)| f + g).collect();
        Morphism { source: self.source.clone(), target: self.target.clone(), maps }
    }

    pub fn sub(&self, other: &Morphism) -> Morphism {
        self.add(&other.scale(-Q::one()))
    }

    pub fn scale(&self, c: Q) -> Morphism {
        let maps = self.maps.iter().map(|f| f.scale(c)).collect();
        Morphism { source: self.source.clone(), target: self.target.clone(), maps }
    }

    /// `Σ c_k f_k` over morphisms sharing source and target.
    pub fn combination(source: &Representation, target: &Representation, terms: &[(Q, &Morphism)]) -> Morphism {
        terms.iter().fold(Morphism::zero(source, target), |acc, (c, f)| acc.add(&f.scale(*c)))
    }

    /// `D f : D target → D source` over the opposite algebra.
    pub fn dual(&self, opposite: &crate::module::Algebra) -> Morphism {
        let maps = self.maps.iter().map(Matrix::transpose).collect();
        Morphism { source: self.target.dual(opposite), target: self.source.dual(opposite), maps }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.maps.iter().map(Matrix::rank).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.total_dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.total_dim()
    }

    pub fn is_iso(&self) -> bool {
        self.source.dim_vector() == self.target.dim_vector() && self.maps.iter().all(Matrix::is_invertible)
    }

    pub fn inverse(&self) -> Option<Morphism> {
        let maps = self.maps.iter().map(Matrix::inverse).collect::<Option<Vec<_>>>()?;
        Some(Morphism { source: self.target.clone(), target: self.source.clone(), maps })
    }

    /// Block-diagonal matrix on the total spaces.
    pub fn total_matrix(&self) -> Matrix {
        let refs: Vec<&Matrix> = self.maps.iter().collect();
        Matrix::block_diag(&refs)
    }

    /// Flattened coordinates, used to compare morphisms as vectors.
    pub fn coords(&self) -> Vec<Q> {
        self.maps.iter().flat_map(|m| m.entries().iter().copied()).collect()
    }

    pub fn kernel(&self) -> Morphism {
        let basis = self.maps.iter().map(Matrix::kernel).collect();
        self.source.submodule(basis)
    }

    /// Image factorization `source → im → target`.
    pub fn image(&self) -> (Morphism, Morphism) {
        let basis: Vec<Matrix> = self.maps.iter().map(Matrix::col_basis).collect();
        let inc = self.target.submodule(basis.clone());
        let maps = self
            .maps
            .iter()
            .zip(&basis)
            .map(|(f, b)| b.solve_matrix(f).expect("image coordinates"))
            .collect();
        let epi = Morphism { source: self.source.clone(), target: inc.source.clone(), maps };
        (epi, inc)
    }

    pub fn cokernel(&self) -> Morphism {
        let basis: Vec<Matrix> = self.maps.iter().map(Matrix::col_basis).collect();
        self.target.quotient(&basis)
    }

    /// Induced map `source → K` where `inc: K → target` is injective and contains the image.
    pub fn restrict_target(&self, inc: &Morphism) -> Option<Morphism> {
        let maps = self
            .maps
            .iter()
            .zip(&inc.maps)
            .map(|(f, i)| i.solve_matrix(f))
            .collect::<Option<Vec<_>>>()?;
        Some(Morphism { source: self.source.clone(), target: inc.source.clone(), maps })
    }

    /// Induced map `C → target` where `proj: source → C` is surjective and kills the kernel of `self`.
    pub fn descend(&self, proj: &Morphism) -> Option<Morphism> {
        let maps = self
            .maps
            .iter()
            .zip(&proj.maps)
            .map(|(f, p)| p.solve_left(f))
            .collect::<Option<Vec<_>>>()?;
        Some(Morphism { source: proj.target.clone(), target: self.target.clone(), maps })
    }

    /// Some `h` with `self = h ∘ p`, if one exists among module maps.
    pub fn factor_through_left(&self, p: &Morphism) -> Option<Morphism> {
        factor(self, p, Side::First)
    }

    /// Some `h` with `self = i ∘ h`, if one exists among module maps.
    pub fn factor_through_right(&self, i: &Morphism) -> Option<Morphism> {
        factor(self, i, Side::Last)
    }
}

enum Side {
    First,
    Last,
}

/// Solves for a module map `h` with `q = h ∘ p` (`First`) or `q = p ∘ h` (`Last`).
fn factor(q: &Morphism, p: &Morphism, side: Side) -> Option<Morphism> {
    let (src, tgt) = match side {
        Side::First => (&p.target, &q.target),
        Side::Last => (&q.source, &p.source),
    };
    let basis = super::hom_space(src, tgt);
    let images: Vec<Vec<Q>> = basis
        .iter()
        .map(|h| match side {
            Side::First => p.then(h).coords(),
            Side::Last => h.then(p).coords(),
        })
        .collect();
    let target = q.coords();
    if basis.is_empty() {
        return if target.iter().all(Q::is_zero) { Some(Morphism::zero(src, tgt)) } else { None };
    }
    let m = Matrix::from_cols(target.len(), &images);
    let x = m.solve(&target)?;
    let terms: Vec<(Q, &Morphism)> = x.iter().copied().zip(basis.iter()).collect();
    Some(Morphism::combination(src, tgt, &terms))
}
