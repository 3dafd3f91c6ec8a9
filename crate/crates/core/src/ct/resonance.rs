//! Resonance diagrams: families of `d`-exact sequences of indecomposables glued along shared terms.

use super::approx::AddCategory;
use super::exact::{d_pushout, Chain};
use crate::error::{Error, Result};
use crate::module::hom_space;

/// A triangular grid `X_{l,k}` of category objects whose rows are `d`-exact sequences.
///
/// Row `k` runs `X_{0,k} → ⋯ → X_{k,k} → X_{k+1,k+1} → X_{k+1,k+2} → ⋯ → X_{k+1,d+1}`.
#[derive(Clone, Debug)]
pub struct ResonanceDiagram {
    /// The sequences of the grid, from the first column to the last row.
    pub rows: Vec<Chain>,
    /// `grid[l][k]` for `l ≤ k`: object index of `X_{l,k}`.
    pub grid: Vec<Vec<Option<usize>>>,
    /// Positions of the two given sequences among `rows`.
    pub given: (usize, usize),
    /// Reduced induced sequences of `d`-pushouts between consecutive rows.
    pub intermediates: Vec<Chain>,
    pub squares_commute: bool,
    /// Every object of the grid lies in exactly two rows.
    pub terms_twice: bool,
}

fn single(c: &Chain, p: usize) -> usize {
    c.terms[p][0]
}

fn shared(a: &Chain, b: &Chain) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for p in 0..a.len() {
        for q in 0..b.len() {
            if a.terms[p] == b.terms[q] {
                out.push((p, q));
            }
        }
    }
    out
}

fn same_objects(a: &Chain, b: &Chain) -> bool {
    a.terms == b.terms
}

/// Extends `chosen` to `target` sequences pairwise sharing exactly one term.
fn search(pool: &[&Chain], chosen: &mut Vec<usize>, start: usize, target: usize) -> bool {
    if chosen.len() == target {
        return true;
    }
    for k in start..pool.len() {
        if chosen.iter().all(|&c| shared(pool[c], pool[k]).len() == 1) {
            chosen.push(k);
            if search(pool, chosen, k + 1, target) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Two composites `X → Y → Z` agree up to a nonzero scalar, or both vanish.
fn proportional(f: &crate::module::Morphism, g: &crate::module::Morphism) -> bool {
    let (a, b) = (f.coords(), g.coords());
    let fz = a.iter().all(|x| x.is_zero());
    let gz = b.iter().all(|x| x.is_zero());
    if fz || gz {
        return fz && gz;
    }
    let Some(p) = a.iter().position(|x| !x.is_zero()) else { return false };
    let r = b[p] / a[p];
    a.iter().zip(&b).all(|(x, y)| *x * r == *y)
}

/// Builds the resonance diagram of two all-indecomposable `d`-exact sequences with `φ_M[i] = φ_N[j]`.
///
/// `pool` is the set of all-indecomposable `d`-exact sequences to draw the other rows from.
pub fn resonance_diagram(
    cat: &AddCategory,
    pool: &[Chain],
    phi_m: &Chain,
    phi_n: &Chain,
    i: usize,
    j: usize,
) -> Result<ResonanceDiagram> {
    let d = phi_m.d();
    if !phi_m.all_indecomposable() || !phi_n.all_indecomposable() || phi_n.d() != d {
        return Err(Error::InvalidInput("resonance needs two d-exact sequences of indecomposables".into()));
    }
    if i > j || j > d + 1 || phi_m.terms[i] != phi_n.terms[j] {
        return Err(Error::InvalidInput(format!("term {i} of the first sequence is not term {j} of the second")));
    }
    if same_objects(phi_m, phi_n) {
        return Ok(ResonanceDiagram {
            rows: vec![phi_m.clone()],
            grid: Vec::new(),
            given: (0, 0),
            intermediates: Vec::new(),
            squares_commute: true,
            terms_twice: true,
        });
    }
    if shared(phi_m, phi_n).len() != 1 {
        return Err(Error::Falsification("the sequences share more than one term".into()));
    }

    let mut members: Vec<&Chain> = vec![phi_m, phi_n];
    for c in pool.iter().filter(|c| c.all_indecomposable() && c.d() == d) {
        if !members.iter().any(|m| same_objects(m, c)) {
            members.push(c);
        }
    }
    let mut chosen = vec![0, 1];
    if !search(&members, &mut chosen, 2, d + 3) {
        return Err(Error::Falsification(format!(
            "no family of {} d-exact sequences completes the resonance diagram",
            d + 3
        )));
    }
    let family: Vec<&Chain> = chosen.iter().map(|&k| members[k]).collect();

    // the first column is the member whose terms are the first terms of all the others
    let firsts: Vec<usize> = family.iter().map(|c| single(c, 0)).collect();
    let column = (0..family.len())
        .find(|&a| {
            family.iter().enumerate().filter(|&(b, _)| b != a).all(|(_, c)| family[a].terms.iter().any(|t| t[0] == single(c, 0)))
        })
        .ok_or_else(|| Error::Falsification("resonance family has no first column".into()))?;
    let mut order: Vec<(usize, usize)> = Vec::new();
    for b in 0..family.len() {
        if b == column {
            continue;
        }
        let p = family[column].terms.iter().position(|t| t[0] == firsts[b]).unwrap();
        order.push((p, b));
    }
    order.sort_unstable();
    let mut rows: Vec<Chain> = vec![family[column].clone()];
    rows.extend(order.iter().map(|&(_, b)| family[b].clone()));

    // rows[r] is φ_{r-1}; X_{l,k} sits at position l of φ_k when l ≤ k
    let n = d + 2;
    let mut grid = vec![vec![None; n]; n];
    for (l, row) in grid.iter_mut().enumerate() {
        for (k, cell) in row.iter_mut().enumerate().skip(l) {
            *cell = Some(single(&rows[k + 1], l));
        }
    }
    // consistency: column l is the tail of φ_{l-1}
    let mut consistent = true;
    for l in 0..n {
        for k in l..n {
            let col = &rows[l];
            let expect = single(col, k);
            consistent &= grid[l][k] == Some(expect);
        }
    }
    let mut count = std::collections::BTreeMap::new();
    for r in &rows {
        for t in &r.terms {
            *count.entry(t[0]).or_insert(0usize) += 1;
        }
    }
    let terms_twice = consistent && count.values().all(|&c| c == 2) && count.len() == n * (n + 1) / 2;

    // squares X_{l,k} → X_{l+1,k} → X_{l+1,k+1} against X_{l,k} → X_{l,k+1} → X_{l+1,k+1}
    let mut squares_commute = consistent;
    if consistent {
        for l in 0..n {
            for k in l + 1..n - 1 {
                let right = &rows[k + 1].maps[l];
                let down_right = &rows[l + 1].maps[k];
                let down = &rows[l].maps[k];
                let right_low = &rows[k + 2].maps[l];
                squares_commute &= proportional(&right.then(down_right), &down.then(right_low));
            }
        }
    }

    let mut intermediates = Vec::new();
    for w in rows.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        if let Some(f) = hom_space(&a.modules[0], &b.modules[0]).into_iter().next() {
            let ladder = d_pushout(cat, a, &f)?;
            intermediates.push(super::exact::reduce(cat, &ladder.induced).0);
        }
    }

    let given = (
        rows.iter().position(|r| same_objects(r, phi_m)).unwrap(),
        rows.iter().position(|r| same_objects(r, phi_n)).unwrap(),
    );
    Ok(ResonanceDiagram { rows, grid, given, intermediates, squares_commute, terms_twice })
}
