//! Chains of objects of an additive category: `d`-exact sequences, `d`-pushouts and `d`-pullbacks,
//! realization of Ext classes and `d`-kernels.

use serde::{Deserialize, Serialize};

use super::approx::{left_approximation, right_approximation, AddCategory};
use crate::error::{Error, Result};
use crate::homology::{ext_basis, Resolution};
use crate::module::{decompose, indecomposable_iso, Algebra, Morphism, Representation};
use crate::rational::Q;

/// A chain `X_0 → X_1 → ⋯` of sums of category objects.
#[derive(Clone, Debug)]
pub struct Chain {
    /// Sorted object indices of each term.
    pub terms: Vec<Vec<usize>>,
    /// Each term as the direct sum of its objects in index order.
    pub modules: Vec<Representation>,
    pub maps: Vec<Morphism>,
}

/// A chain `0 → X_0 → ⋯ → X_{d+1} → 0`.
pub type DExactSequence = Chain;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainJson {
    pub terms: Vec<Vec<usize>>,
    /// `matrices[k][v]`: the map out of term `k` at vertex `v`, row by row.
    pub matrices: Vec<Vec<Vec<Vec<Q>>>>,
}

impl Chain {
    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    /// `d` for a chain of `d + 2` terms.
    pub fn d(&self) -> usize {
        self.modules.len().saturating_sub(2)
    }

    pub fn first(&self) -> &[usize] {
        &self.terms[0]
    }

    pub fn last(&self) -> &[usize] {
        self.terms.last().unwrap()
    }

    /// Composites vanish and homology vanishes at every inner term.
    pub fn is_exact_inside(&self) -> bool {
        let n = self.maps.len();
        (1..n).all(|k| {
            let (a, b) = (&self.maps[k - 1], &self.maps[k]);
            a.then(b).is_zero() && a.rank() + b.rank() == self.modules[k].total_dim()
        })
    }

    /// Exact with a monomorphism at the start and an epimorphism at the end.
    pub fn is_exact(&self) -> bool {
        match (self.maps.first(), self.maps.last()) {
            (Some(f), Some(l)) => f.is_injective() && l.is_surjective() && self.is_exact_inside(),
            _ => true,
        }
    }

    pub fn all_indecomposable(&self) -> bool {
        self.terms.iter().all(|t| t.len() == 1)
    }

    /// No inner pair of terms shares a summand mapped isomorphically.
    pub fn is_reduced(&self, cat: &AddCategory) -> bool {
        find_elimination(cat, self).is_none()
    }

    /// The objects occurring anywhere in the chain.
    pub fn objects(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.terms.iter().flatten().copied().collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn to_json(&self) -> ChainJson {
        let matrices = self
            .maps
            .iter()
            .map(|f| f.maps().iter().map(|m| (0..m.rows()).map(|r| m.row(r).to_vec()).collect()).collect())
            .collect();
        ChainJson { terms: self.terms.clone(), matrices }
    }
}

fn sum_of(cat: &AddCategory, alg: &Algebra, idx: &[usize]) -> (Representation, Vec<Morphism>, Vec<Morphism>) {
    if idx.is_empty() {
        (Representation::zero(alg), Vec::new(), Vec::new())
    } else {
        cat.sum(idx)
    }
}

fn invert(f: &Morphism) -> Morphism {
    if f.source.is_zero() && f.target.is_zero() {
        return Morphism::zero(&f.target, &f.source);
    }
    f.inverse().expect("isomorphism")
}

/// An isomorphism `⊕ X_i → m` with sorted indices, when `m` lies in the category.
pub fn identify(cat: &AddCategory, m: &Representation) -> Result<Option<(Vec<usize>, Morphism)>> {
    let alg = m.algebra();
    if m.is_zero() {
        return Ok(Some((Vec::new(), Morphism::zero(&Representation::zero(alg), m))));
    }
    let dec = decompose(m)?;
    let mut pairs: Vec<(usize, Morphism)> = Vec::new();
    for (part, inc) in dec.parts.iter().zip(&dec.inclusions) {
        let found = cat.objects.iter().enumerate().find_map(|(i, x)| indecomposable_iso(x, part).map(|f| (i, f)));
        let Some((i, iso)) = found else { return Ok(None) };
        pairs.push((i, iso.then(inc)));
    }
    pairs.sort_by_key(|p| p.0);
    let idx: Vec<usize> = pairs.iter().map(|p| p.0).collect();
    let (sum, _, proj) = sum_of(cat, alg, &idx);
    let psi = pairs.iter().zip(&proj).fold(Morphism::zero(&sum, m), |acc, ((_, f), p)| acc.add(&p.then(f)));
    Ok(Some((idx, psi)))
}

/// Rewrites a chain of modules in `add` of the category in canonical form.
///
/// Returns the chain and the isomorphisms from the old terms to the new ones.
pub fn canonicalize(cat: &AddCategory, modules: &[Representation], maps: &[Morphism]) -> Result<(Chain, Vec<Morphism>)> {
    let mut terms = Vec::new();
    let mut new_modules = Vec::new();
    let mut to_new = Vec::new();
    let mut from_new = Vec::new();
    for (k, m) in modules.iter().enumerate() {
        let (idx, psi) = identify(cat, m)?
            .ok_or_else(|| Error::Falsification(format!("term {k} with dimension vector {:?} leaves the category", m.dim_vector())))?;
        terms.push(idx);
        new_modules.push(psi.source.clone());
        to_new.push(invert(&psi));
        from_new.push(psi);
    }
    let new_maps = maps.iter().enumerate().map(|(k, f)| from_new[k].then(f).then(&to_new[k + 1])).collect();
    Ok((Chain { terms, modules: new_modules, maps: new_maps }, to_new))
}

/// An inner component `X_k ⊇ Z → Z ⊆ X_{k+1}` that is an isomorphism.
fn find_elimination(cat: &AddCategory, c: &Chain) -> Option<(usize, usize, usize)> {
    let n = c.modules.len();
    if n < 4 {
        return None;
    }
    let alg = c.modules[0].algebra();
    for k in 1..n - 2 {
        let (_, inj, _) = sum_of(cat, alg, &c.terms[k]);
        let (_, _, proj) = sum_of(cat, alg, &c.terms[k + 1]);
        for (a, &i) in c.terms[k].iter().enumerate() {
            for (b, &j) in c.terms[k + 1].iter().enumerate() {
                if i == j && inj[a].then(&c.maps[k]).then(&proj[b]).is_iso() {
                    return Some((k, a, b));
                }
            }
        }
    }
    None
}

/// The sub-sum keeping all positions but `skip`, with its inclusion and projection.
fn drop_summand(cat: &AddCategory, alg: &Algebra, idx: &[usize], skip: usize) -> (Vec<usize>, Morphism, Morphism) {
    let (whole, inj, proj) = sum_of(cat, alg, idx);
    let keep: Vec<usize> = (0..idx.len()).filter(|&t| t != skip).collect();
    let new_idx: Vec<usize> = keep.iter().map(|&t| idx[t]).collect();
    let (part, pinj, pproj) = sum_of(cat, alg, &new_idx);
    let mut inc = Morphism::zero(&part, &whole);
    let mut pr = Morphism::zero(&whole, &part);
    for (s, &t) in keep.iter().enumerate() {
        inc = inc.add(&pproj[s].then(&inj[t]));
        pr = pr.add(&proj[t].then(&pinj[s]));
    }
    (new_idx, inc, pr)
}

/// Removes contractible summands `Z → Z` between inner terms.
///
/// Returns the reduced chain and a chain map from the old one to it.
pub fn reduce(cat: &AddCategory, chain: &Chain) -> (Chain, Vec<Morphism>) {
    let mut c = chain.clone();
    let mut total: Vec<Morphism> = c.modules.iter().map(Morphism::identity).collect();
    let alg = c.modules[0].algebra().clone();
    while let Some((k, a, b)) = find_elimination(cat, &c) {
        let (_, inj_k, _) = sum_of(cat, &alg, &c.terms[k]);
        let (_, _, proj_k1) = sum_of(cat, &alg, &c.terms[k + 1]);
        let (idx_a, inc_a, pr_a) = drop_summand(cat, &alg, &c.terms[k], a);
        let (idx_b, inc_b, pr_b) = drop_summand(cat, &alg, &c.terms[k + 1], b);
        let d = &c.maps[k];
        let z = &inj_k[a];
        let zp = &proj_k1[b];
        let alpha = inc_a.then(d).then(&pr_b);
        let beta = z.then(d).then(&pr_b);
        let gamma = inc_a.then(d).then(zp);
        let hinv = invert(&z.then(d).then(zp));
        let new_d = alpha.sub(&gamma.then(&hinv).then(&beta));
        let new_prev = c.maps[k - 1].then(&pr_a);
        let new_next = inc_b.then(&c.maps[k + 1]);
        let pi_k1 = pr_b.sub(&zp.then(&hinv).then(&beta));
        total[k] = total[k].then(&pr_a);
        total[k + 1] = total[k + 1].then(&pi_k1);
        c.modules[k] = inc_a.source.clone();
        c.modules[k + 1] = inc_b.source.clone();
        c.terms[k] = idx_a;
        c.terms[k + 1] = idx_b;
        c.maps[k - 1] = new_prev;
        c.maps[k] = new_d;
        c.maps[k + 1] = new_next;
    }
    (c, total)
}

/// Pushout of `f: X → Y` and `g: X → Z`: the quotient map `Y ⊕ Z → P`, the two projections
/// of the sum, and the maps `Y → P`, `Z → P`.
struct Square {
    quotient: Morphism,
    proj: [Morphism; 2],
    into: [Morphism; 2],
}

fn pushout_square(f: &Morphism, g: &Morphism) -> Square {
    let alg = f.source.algebra();
    let (_, inc, proj) = Representation::direct_sum_with_maps(alg, &[f.target.clone(), g.target.clone()]);
    let q = f.then(&inc[0]).sub(&g.then(&inc[1])).cokernel();
    let into = [inc[0].then(&q), inc[1].then(&q)];
    Square { quotient: q, proj: [proj[0].clone(), proj[1].clone()], into }
}

/// The map out of a pushout given on both pieces.
fn out_of(sq: &Square, a: &Morphism, b: &Morphism) -> Morphism {
    sq.proj[0].then(a).add(&sq.proj[1].then(b)).descend(&sq.quotient).expect("map respects the pushout")
}

/// Pullback of `f: Y → X` and `g: Z → X`: inclusion into `Y ⊕ Z`, the injections of the sum,
/// and the maps `P → Y`, `P → Z`.
struct CoSquare {
    inclusion: Morphism,
    inj: [Morphism; 2],
    from: [Morphism; 2],
}

fn pullback_square(f: &Morphism, g: &Morphism) -> CoSquare {
    let alg = f.source.algebra();
    let (_, inj, proj) = Representation::direct_sum_with_maps(alg, &[f.source.clone(), g.source.clone()]);
    let k = proj[0].then(f).sub(&proj[1].then(g)).kernel();
    let from = [k.then(&proj[0]), k.then(&proj[1])];
    CoSquare { inclusion: k, inj: [inj[0].clone(), inj[1].clone()], from }
}

fn into_pullback(sq: &CoSquare, a: &Morphism, b: &Morphism) -> Morphism {
    a.then(&sq.inj[0]).add(&b.then(&sq.inj[1])).restrict_target(&sq.inclusion).expect("maps agree on the pullback")
}

/// A commutative ladder between two chains of equal length with its induced sequence.
#[derive(Clone, Debug)]
pub struct LadderDiagram {
    pub upper: Chain,
    pub lower: Chain,
    /// `verticals[k]: upper_k → lower_k`.
    pub verticals: Vec<Morphism>,
    /// The mapping-cone sequence of the ladder.
    pub induced: Chain,
}

impl LadderDiagram {
    pub fn commutes(&self) -> bool {
        (0..self.upper.maps.len()).all(|k| {
            self.upper.maps[k].then(&self.verticals[k + 1]) == self.verticals[k].then(&self.lower.maps[k])
        })
    }
}

/// Mapping cone of `φ: U → L` restricted to positions `s..=s+d`.
fn cone(cat: &AddCategory, upper: &Chain, lower: &Chain, phi: &[Morphism], s: usize) -> Result<Chain> {
    let d = upper.d();
    let alg = upper.modules[0].algebra().clone();
    let sign = |j: usize| if j.is_multiple_of(2) { Q::one() } else { -Q::one() };
    let mut modules = vec![upper.modules[s].clone()];
    let mut pieces: Vec<Option<(Vec<Morphism>, Vec<Morphism>)>> = vec![None];
    for j in 1..=d {
        let (sum, inj, proj) = Representation::direct_sum_with_maps(&alg, &[upper.modules[s + j].clone(), lower.modules[s + j - 1].clone()]);
        modules.push(sum);
        pieces.push(Some((inj, proj)));
    }
    modules.push(lower.modules[s + d].clone());
    pieces.push(None);
    let mut maps = Vec::new();
    for j in 0..=d {
        let src = &modules[j];
        let tgt = &modules[j + 1];
        let (u_in, l_in): (Morphism, Option<Morphism>) = match &pieces[j] {
            None => (Morphism::identity(src), None),
            Some((_, proj)) => (proj[0].clone(), Some(proj[1].clone())),
        };
        let mut f = Morphism::zero(src, tgt);
        match &pieces[j + 1] {
            Some((inj, _)) => {
                // U_{s+j} → U_{s+j+1} and (−1)^j φ: U_{s+j} → L_{s+j}
                f = f.add(&u_in.then(&upper.maps[s + j]).then(&inj[0]));
                f = f.add(&u_in.then(&phi[s + j].scale(sign(j))).then(&inj[1]));
                if let Some(l) = &l_in {
                    f = f.add(&l.then(&lower.maps[s + j - 1]).then(&inj[1]));
                }
            }
            None => {
                f = f.add(&u_in.then(&phi[s + j].scale(sign(j))));
                if let Some(l) = &l_in {
                    f = f.add(&l.then(&lower.maps[s + j - 1]));
                }
            }
        }
        maps.push(f);
    }
    Ok(canonicalize(cat, &modules, &maps)?.0)
}

/// `d`-pushout of a `d`-exact sequence along `f: X_0 → Y_0`, with `Y_0` in the category.
pub fn d_pushout(cat: &AddCategory, seq: &Chain, f: &Morphism) -> Result<LadderDiagram> {
    let d = seq.d();
    let xs = &seq.modules;
    let dx = &seq.maps;
    let mut ys = vec![f.target.clone()];
    let mut dy = Vec::new();
    let mut vert = vec![f.clone()];
    let sq = pushout_square(&dx[0], f);
    let mut x_to_e = sq.into[0].clone();
    let mut e_in = sq.into[1].clone();
    let mut e_out = out_of(&sq, &dx[1], &Morphism::zero(&f.target, &xs[2]));
    for k in 1..=d {
        if k == d {
            ys.push(e_in.target.clone());
            dy.push(e_in.clone());
            vert.push(x_to_e.clone());
            break;
        }
        let iota = left_approximation(cat, &e_in.target).map;
        if !iota.is_injective() {
            return Err(Error::Falsification("left approximation is not injective".into()));
        }
        ys.push(iota.target.clone());
        dy.push(e_in.then(&iota));
        vert.push(x_to_e.then(&iota));
        let sq = pushout_square(&iota, &e_out);
        let next_out = out_of(&sq, &Morphism::zero(&iota.target, &xs[k + 2]), &dx[k + 1]);
        e_in = sq.into[0].clone();
        x_to_e = sq.into[1].clone();
        e_out = next_out;
    }
    ys.push(xs[d + 1].clone());
    dy.push(e_out);
    vert.push(Morphism::identity(&xs[d + 1]));

    let (lower, to_new) = canonicalize(cat, &ys, &dy)?;
    let (lower, pi) = reduce(cat, &lower);
    let verticals: Vec<Morphism> = (0..vert.len()).map(|k| vert[k].then(&to_new[k]).then(&pi[k])).collect();
    let induced = cone(cat, seq, &lower, &verticals, 0)?;
    Ok(LadderDiagram { upper: seq.clone(), lower, verticals, induced })
}

/// `d`-pullback of a `d`-exact sequence along `g: Y_{d+1} → X_{d+1}`, with `Y_{d+1}` in the category.
pub fn d_pullback(cat: &AddCategory, seq: &Chain, g: &Morphism) -> Result<LadderDiagram> {
    let d = seq.d();
    let xs = &seq.modules;
    let dx = &seq.maps;
    // built from the right, then reversed
    let mut ys = vec![g.source.clone()];
    let mut dy = Vec::new();
    let mut vert = vec![g.clone()];
    let sq = pullback_square(&dx[d], g);
    let mut e_to_x = sq.from[0].clone();
    let mut e_out = sq.from[1].clone();
    let mut e_in = into_pullback(&sq, &dx[d - 1], &Morphism::zero(&xs[d - 1], &g.source));
    for k in (1..=d).rev() {
        if k == 1 {
            ys.push(e_out.source.clone());
            dy.push(e_out.clone());
            vert.push(e_to_x.clone());
            break;
        }
        let pi = right_approximation(cat, &e_out.source).map;
        if !pi.is_surjective() {
            return Err(Error::Falsification("right approximation is not surjective".into()));
        }
        ys.push(pi.source.clone());
        dy.push(pi.then(&e_out));
        vert.push(pi.then(&e_to_x));
        let sq = pullback_square(&pi, &e_in);
        let next_in = into_pullback(&sq, &Morphism::zero(&xs[k - 2], &pi.source), &dx[k - 2]);
        e_out = sq.from[0].clone();
        e_to_x = sq.from[1].clone();
        e_in = next_in;
    }
    ys.push(xs[0].clone());
    dy.push(e_in);
    vert.push(Morphism::identity(&xs[0]));
    ys.reverse();
    dy.reverse();
    vert.reverse();

    let (upper, to_new) = canonicalize(cat, &ys, &dy)?;
    let (upper, pi) = reduce(cat, &upper);
    // verticals go from the new row down to the given one
    let verticals: Vec<Morphism> = (0..vert.len())
        .map(|k| {
            let back = invert(&to_new[k]);
            let section = section_of(&pi[k], &back)?;
            Ok(section.then(&vert[k]))
        })
        .collect::<Result<_>>()?;
    let induced = cone(cat, &upper, seq, &verticals, 1)?;
    Ok(LadderDiagram { upper, lower: seq.clone(), verticals, induced })
}

/// A map `reduced → old` splitting the reduction map `pi`, composed with `back: old' → old`.
fn section_of(pi: &Morphism, back: &Morphism) -> Result<Morphism> {
    if pi.is_iso() || (pi.source.is_zero() && pi.target.is_zero()) {
        return Ok(invert(pi).then(back));
    }
    Morphism::identity(&pi.target)
        .factor_through_right(pi)
        .map(|s| s.then(back))
        .ok_or_else(|| Error::Falsification("reduction does not split".into()))
}

/// Realizes a class of `Ext^d(N, M)` given by a cocycle `c: P_d → M` on a minimal resolution of `N`.
pub fn realize_class(cat: &AddCategory, res: &Resolution, d: usize, c: &Morphism) -> Result<Chain> {
    if res.terms.len() != d + 1 {
        return Err(Error::Precondition(format!("resolution has {} terms, expected {}", res.terms.len(), d + 1)));
    }
    let mut xs: Vec<Representation> = (0..=d).rev().map(|k| res.terms[k].clone()).collect();
    xs.push(res.target.clone());
    let dx: Vec<Morphism> = (0..=d).rev().map(|k| res.differentials[k].clone()).collect();
    let (top, to_new) = canonicalize(cat, &xs, &dx)?;
    let f = invert(&to_new[0]).then(c);
    let (_, psi) = identify(cat, &c.target)?.ok_or_else(|| Error::InvalidInput("cocycle target is not in the category".into()))?;
    let f = f.then(&invert(&psi));
    Ok(d_pushout(cat, &top, &f)?.lower)
}

/// One reduced `d`-exact sequence per basis class of `Ext^d(N, M)` for all catalog pairs.
pub fn enumerate_d_exact(cat: &AddCategory, resolutions: &[Resolution], d: usize) -> Result<Vec<Chain>> {
    let mut out = Vec::new();
    for (n, res) in resolutions.iter().enumerate() {
        if res.terms.len() <= d {
            continue;
        }
        for m in &cat.objects {
            for c in ext_basis(res, d, m) {
                let seq = realize_class(cat, res, d, &c)?;
                if !seq.is_exact() || seq.terms[d + 1] != vec![n] {
                    return Err(Error::Falsification(format!("realization for object {n} is not a d-exact sequence")));
                }
                out.push(seq);
            }
        }
    }
    out.sort_by(|a, b| (a.last(), a.first()).cmp(&(b.last(), b.first())));
    Ok(out)
}

/// `d`-kernel `0 → M_1 → ⋯ → M_d → W_1 → W_2` of a map between sums of category objects.
pub fn d_kernel(cat: &AddCategory, d: usize, f: &Morphism) -> Result<Chain> {
    let mut modules = vec![f.target.clone(), f.source.clone()];
    let mut maps = vec![f.clone()];
    let mut inc = f.kernel();
    for _ in 1..d {
        let pi = right_approximation(cat, &inc.source).map;
        let into = pi.then(&inc);
        modules.push(pi.source.clone());
        maps.push(into);
        inc = pi.kernel();
    }
    modules.push(inc.source.clone());
    maps.push(inc);
    modules.reverse();
    maps.reverse();
    Ok(canonicalize(cat, &modules, &maps)?.0)
}

/// `d`-cokernel `W_1 → W_2 → N_1 → ⋯ → N_d → 0` of a map between sums of category objects.
pub fn d_cokernel(cat: &AddCategory, d: usize, f: &Morphism) -> Result<Chain> {
    let mut modules = vec![f.source.clone(), f.target.clone()];
    let mut maps = vec![f.clone()];
    let mut proj = f.cokernel();
    for _ in 1..d {
        let iota = left_approximation(cat, &proj.target).map;
        modules.push(iota.target.clone());
        maps.push(proj.then(&iota));
        proj = iota.cokernel();
    }
    modules.push(proj.target.clone());
    maps.push(proj);
    Ok(canonicalize(cat, &modules, &maps)?.0)
}
