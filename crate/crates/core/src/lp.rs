//! Exact two-phase simplex over the rationals with Bland's rule.
//!
//! Solves `min c·x` subject to `A x = b`, `x >= 0`. Problems in this crate
//! have a handful of rows, so a dense tableau is plenty.

use num::{Signed, Zero};

use crate::lattice::{zeros, QVector, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { x: QVector, value: Rational },
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn is_feasible(&self) -> bool {
        !matches!(self, LpOutcome::Infeasible)
    }
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    width: usize,
}

enum Phase {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Rational {
        &self.rows[i][self.width]
    }

    fn pivot(&mut self, r: usize, col: usize) {
        let p = self.rows[r][col].clone();
        for v in self.rows[r].iter_mut() {
            *v /= &p;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                *v -= &f * pv;
            }
        }
        self.basis[r] = col;
    }

    fn run(&mut self, cost: &[Rational], enterable: usize) -> Phase {
        loop {
            let entering = (0..enterable).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let reduced: Rational = cost[j].clone()
                    - self
                        .basis
                        .iter()
                        .zip(&self.rows)
                        .map(|(&bi, row)| &cost[bi] * &row[j])
                        .sum::<Rational>();
                reduced.is_negative()
            });
            let Some(col) = entering else {
                return Phase::Optimal;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, col),
                None => return Phase::Unbounded,
            }
        }
    }

    fn solution(&self, n: usize) -> QVector {
        let mut x = zeros(n);
        for (i, &bi) in self.basis.iter().enumerate() {
            if bi < n {
                x[bi] = self.rhs(i).clone();
            }
        }
        x
    }
}

/// `min c·x` s.t. `a x = b`, `x >= 0`. Rows of `a` must have length `c.len()`.
pub fn minimize(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> LpOutcome {
    let m = a.len();
    let n = c.len();
    assert!(a.iter().all(|r| r.len() == n) && b.len() == m, "LP dimensions disagree");
    let width = n + m;
    let rows = a
        .iter()
        .zip(b)
        .enumerate()
        .map(|(i, (row, bi))| {
            let flip = bi.is_negative();
            let mut r: Vec<Rational> =
                row.iter().map(|v| if flip { -v } else { v.clone() }).collect();
            r.extend((0..m).map(|k| if k == i { Rational::from_integer(1.into()) } else { Rational::zero() }));
            r.push(if flip { -bi } else { bi.clone() });
            r
        })
        .collect();
    let mut t = Tableau { rows, basis: (n..n + m).collect(), width };

    let mut phase1 = zeros(width);
    for v in &mut phase1[n..] {
        *v = Rational::from_integer(1.into());
    }
    t.run(&phase1, width);
    let infeasibility: Rational =
        t.basis.iter().enumerate().filter(|(_, &bi)| bi >= n).map(|(i, _)| t.rhs(i).clone()).sum();
    if infeasibility.is_positive() {
        return LpOutcome::Infeasible;
    }
    // drive remaining (zero-level) artificials out; drop redundant rows
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= n {
            match (0..n).find(|&j| !t.rows[i][j].is_zero()) {
                Some(j) => t.pivot(i, j),
                None => {
                    t.rows.remove(i);
                    t.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }

    let mut cost = c.to_vec();
    cost.resize(width, Rational::zero());
    match t.run(&cost, n) {
        Phase::Unbounded => LpOutcome::Unbounded,
        Phase::Optimal => {
            let x = t.solution(n);
            let value = x.iter().zip(c).map(|(xi, ci)| xi * ci).sum();
            LpOutcome::Optimal { x, value }
        }
    }
}

/// Is `v` a non-negative combination of `gens`?
pub fn in_cone(gens: &[QVector], v: &[Rational]) -> bool {
    let a: Vec<Vec<Rational>> =
        (0..v.len()).map(|r| gens.iter().map(|g| g[r].clone()).collect()).collect();
    minimize(&a, v, &zeros(gens.len())).is_feasible()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{q, qi, qvec};

    #[test]
    fn small_programs() {
        // min x + y s.t. x - y = 1
        let out = minimize(&[qvec(&[1, -1])], &qvec(&[1]), &qvec(&[1, 1]));
        assert_eq!(out, LpOutcome::Optimal { x: qvec(&[1, 0]), value: qi(1) });
        // x + y = -1 has no non-negative solution
        assert_eq!(minimize(&[qvec(&[1, 1])], &qvec(&[-1]), &qvec(&[0, 0])), LpOutcome::Infeasible);
        // min -x s.t. x - y = 0 is unbounded
        assert_eq!(minimize(&[qvec(&[1, -1])], &qvec(&[0]), &qvec(&[-1, 0])), LpOutcome::Unbounded);
        // redundant row
        let out = minimize(&[qvec(&[2, 1]), qvec(&[4, 2])], &qvec(&[3, 6]), &qvec(&[-1, 0]));
        assert_eq!(out, LpOutcome::Optimal { x: vec![q(3, 2), qi(0)], value: q(-3, 2) });
    }

    #[test]
    fn cone_membership() {
        let gens = vec![qvec(&[1, 0]), qvec(&[0, 1])];
        assert!(in_cone(&gens, &[q(5, 2), q(1, 2)]));
        assert!(in_cone(&gens, &qvec(&[2, 0])));
        assert!(!in_cone(&gens, &qvec(&[1, -1])));
        let skew = vec![qvec(&[1, 1]), qvec(&[1, -1])];
        assert!(in_cone(&skew, &qvec(&[3, 0])));
        assert!(!in_cone(&skew, &qvec(&[0, 1])));
    }
}
