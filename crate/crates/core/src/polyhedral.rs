//! Rational polyhedral cones given by generators, with a facet description
//! computed once at construction.
//!
//! Membership has two independent routes: facet inequalities
//! ([`PolyCone::contains`]) and an exact feasibility LP over the generators
//! ([`PolyCone::contains_lp`]).

use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{dot, QVector, Rational};
use crate::lp::{in_cone, minimize, LpOutcome};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyCone {
    gens: Vec<QVector>,
    facets: Vec<QVector>,
}

/// A spanning vector of the kernel of `rows` when that kernel is a line.
fn kernel_line(rows: &[QVector], dim: usize) -> Option<QVector> {
    let mut a: Vec<QVector> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..dim {
        let Some(p) = (r..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let lead = a[r][col].clone();
        for v in a[r].iter_mut() {
            *v /= &lead;
        }
        let pr = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col].clone();
                for (v, pv) in row.iter_mut().zip(&pr) {
                    *v -= &f * pv;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if pivots.len() + 1 != dim {
        return None;
    }
    let free = (0..dim).find(|c| !pivots.contains(c))?;
    let mut x = vec![Rational::zero(); dim];
    x[free] = Rational::from_integer(1.into());
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = -a[row][free].clone();
    }
    Some(x)
}

/// Scale so the first non-zero entry has absolute value one.
fn normalise(v: QVector) -> QVector {
    match v.iter().find(|x| !x.is_zero()).map(|x| x.abs()) {
        Some(s) => v.into_iter().map(|x| x / &s).collect(),
        None => v,
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

impl PolyCone {
    /// The cone must be full-dimensional and salient.
    pub fn new(gens: Vec<QVector>) -> Result<Self> {
        let dim = gens.first().map(|g| g.len()).ok_or_else(|| Error::InvalidCone("no generators".into()))?;
        if dim == 0 || gens.iter().any(|g| g.len() != dim) {
            return Err(Error::InvalidCone("generators have inconsistent length".into()));
        }
        let gens: Vec<QVector> = gens.into_iter().filter(|g| g.iter().any(|x| !x.is_zero())).collect();
        let mut facets: Vec<QVector> = Vec::new();
        let candidates: Vec<QVector> = if dim == 1 {
            vec![vec![Rational::from_integer(1.into())], vec![Rational::from_integer((-1).into())]]
        } else {
            subsets(gens.len(), dim - 1)
                .into_iter()
                .filter_map(|s| {
                    let rows: Vec<QVector> = s.iter().map(|&k| gens[k].clone()).collect();
                    kernel_line(&rows, dim)
                })
                .collect()
        };
        for n in candidates {
            let signs: Vec<Rational> = gens.iter().map(|g| dot(&n, g)).collect();
            let oriented = if signs.iter().all(|s| !s.is_negative()) {
                n
            } else if signs.iter().all(|s| !s.is_positive()) {
                n.into_iter().map(|x| -x).collect()
            } else {
                continue;
            };
            let oriented = normalise(oriented);
            if !facets.contains(&oriented) {
                facets.push(oriented);
            }
        }
        // full-dimensional and salient iff the facet normals span and cut out a pointed cone
        let salient = gens.iter().all(|g| !in_cone(&gens, &g.iter().map(|x| -x).collect::<Vec<_>>()));
        if facets.len() < dim || !salient {
            return Err(Error::InvalidCone("cone is not full-dimensional and salient".into()));
        }
        facets.sort();
        Ok(PolyCone { gens, facets })
    }

    pub fn dim(&self) -> usize {
        self.gens[0].len()
    }

    pub fn generators(&self) -> &[QVector] {
        &self.gens
    }

    pub fn facets(&self) -> &[QVector] {
        &self.facets
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.facets.iter().all(|n| !dot(n, v).is_negative())
    }

    pub fn contains_lp(&self, v: &[Rational]) -> bool {
        in_cone(&self.gens, v)
    }

    /// Is `h` strictly inside (positive on every facet)?
    pub fn is_interior(&self, h: &[Rational]) -> bool {
        self.facets.iter().all(|n| dot(n, h).is_positive())
    }

    /// `min { t >= 0 : t·h - d ∈ cone }` from the facet inequalities.
    /// `h` must be interior.
    pub fn min_shift(&self, h: &[Rational], d: &[Rational]) -> Rational {
        self.facets
            .iter()
            .map(|n| dot(n, d) / dot(n, h))
            .fold(Rational::zero(), |acc, t| if t > acc { t } else { acc })
    }

    /// The same quantity as [`PolyCone::min_shift`], as an exact LP over the
    /// generators: `min t` s.t. `t·h - Σ λ_k g_k = d`, `t, λ >= 0`.
    pub fn min_shift_lp(&self, h: &[Rational], d: &[Rational]) -> Result<Rational> {
        let a: Vec<QVector> = (0..self.dim())
            .map(|r| {
                std::iter::once(h[r].clone()).chain(self.gens.iter().map(|g| -g[r].clone())).collect()
            })
            .collect();
        let mut c = vec![Rational::zero(); self.gens.len() + 1];
        c[0] = Rational::from_integer(1.into());
        match minimize(&a, d, &c) {
            LpOutcome::Optimal { value, .. } => Ok(value),
            other => Err(Error::Internal(format!("shift LP did not reach an optimum: {other:?}"))),
        }
    }

    /// `min { a ∈ ℚ : base + a·h ∈ cone }` by LP with `a = a⁺ - a⁻`.
    pub fn min_offset_lp(&self, base: &[Rational], h: &[Rational]) -> Result<Rational> {
        // a⁺h - a⁻h - Σ λ g = -base
        let a: Vec<QVector> = (0..self.dim())
            .map(|r| {
                [h[r].clone(), -h[r].clone()]
                    .into_iter()
                    .chain(self.gens.iter().map(|g| -g[r].clone()))
                    .collect()
            })
            .collect();
        let rhs: QVector = base.iter().map(|x| -x).collect();
        let mut c = vec![Rational::zero(); self.gens.len() + 2];
        c[0] = Rational::from_integer(1.into());
        c[1] = Rational::from_integer((-1).into());
        match minimize(&a, &rhs, &c) {
            LpOutcome::Optimal { value, .. } => Ok(value),
            other => Err(Error::Internal(format!("offset LP did not reach an optimum: {other:?}"))),
        }
    }
}
