//! Relative Zariski decomposition over a negative definite exceptional
//! lattice, and the local volume `-P²` of the nef envelope of `A_{Y/X}`.

use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{ExcDivisor, ResolutionGraph};
use crate::lattice::{leq, sub, zeros, Rational};

/// Default vertex bound for [`zariski_oracle`].
pub const ORACLE_MAX_VERTICES: usize = 12;

/// `A = P + N` with `P` relatively nef, `N >= 0`, `P · N = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZariskiDecomposition {
    pub p: ExcDivisor,
    pub n: ExcDivisor,
    /// Support of `N`, as sorted vertex indices.
    pub active: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VolumeReport {
    pub volume: Rational,
    pub log_discrepancy: ExcDivisor,
    pub decomposition: ZariskiDecomposition,
    pub is_lc: bool,
}

fn support(n: &[Rational]) -> Vec<usize> {
    (0..n.len()).filter(|&k| !n[k].is_zero()).collect()
}

/// Solve for `N` supported on `set` with `N · E_j = A · E_j` for `j` in `set`.
fn negative_part(g: &ResolutionGraph, a_dot: &[Rational], set: &[usize]) -> Result<ExcDivisor> {
    let mut n = zeros(g.len());
    if set.is_empty() {
        return Ok(n);
    }
    let rhs: Vec<Rational> = set.iter().map(|&j| a_dot[j].clone()).collect();
    let sol = g.form().restrict(set).solve(&rhs)?;
    for (&j, v) in set.iter().zip(sol) {
        n[j] = v;
    }
    Ok(n)
}

fn check_len(g: &ResolutionGraph, a: &[Rational]) -> Result<()> {
    if a.len() != g.len() {
        return Err(Error::MalformedInput(format!(
            "divisor has {} coefficients for {} vertices",
            a.len(),
            g.len()
        )));
    }
    Ok(())
}

/// Largest relatively nef `P <= A`, by growing the active set.
///
/// Starts from `S = {j : A·E_j < 0}`; each round solves for `N` on `S` and
/// adds every vertex where `A - N` fails to be nef. `S` only grows, so the
/// loop ends after at most `|V|` rounds.
pub fn nef_envelope_trace(g: &ResolutionGraph, a: &[Rational]) -> Result<ZariskiDecomposition> {
    check_len(g, a)?;
    let a_dot = g.intersections(a)?;
    let mut in_set: Vec<bool> = a_dot.iter().map(|x| x.is_negative()).collect();
    for _ in 0..=g.len() {
        let set: Vec<usize> = (0..g.len()).filter(|&j| in_set[j]).collect();
        let n = negative_part(g, &a_dot, &set)?;
        let p = sub(a, &n);
        let p_dot = g.intersections(&p)?;
        let violators: Vec<usize> =
            (0..g.len()).filter(|&j| !in_set[j] && p_dot[j].is_negative()).collect();
        if violators.is_empty() {
            if n.iter().any(|x| x.is_negative()) {
                return Err(Error::Internal(
                    "active-set solve produced a negative part with a negative coefficient".into(),
                ));
            }
            return Ok(ZariskiDecomposition { active: support(&n), p, n });
        }
        for j in violators {
            in_set[j] = true;
        }
    }
    Err(Error::Internal("active set did not stabilise".into()))
}

/// Exhaustive oracle: tries all `2^r` active sets and returns the unique
/// componentwise-maximal feasible nef part.
pub fn zariski_oracle(
    g: &ResolutionGraph,
    a: &[Rational],
    max_vertices: usize,
) -> Result<ZariskiDecomposition> {
    check_len(g, a)?;
    let r = g.len();
    if r > max_vertices {
        return Err(Error::OracleSize { size: r, bound: max_vertices });
    }
    let a_dot = g.intersections(a)?;
    let mut feasible: Vec<ExcDivisor> = Vec::new();
    for mask in 0u64..(1u64 << r) {
        let set: Vec<usize> = (0..r).filter(|&j| mask >> j & 1 == 1).collect();
        let n = negative_part(g, &a_dot, &set)?;
        if n.iter().any(|x| x.is_negative()) {
            continue;
        }
        let p = sub(a, &n);
        if g.intersections(&p)?.iter().any(|x| x.is_negative()) {
            continue;
        }
        if !feasible.contains(&p) {
            feasible.push(p);
        }
    }
    if feasible.is_empty() {
        return Err(Error::Internal("no feasible complementarity candidate".into()));
    }
    let maximal: Vec<&ExcDivisor> =
        feasible.iter().filter(|p| feasible.iter().all(|q| leq(q, p))).collect();
    match maximal.as_slice() {
        [p] => {
            let p = (*p).clone();
            let n = sub(a, &p);
            Ok(ZariskiDecomposition { active: support(&n), p, n })
        }
        _ => Err(Error::Internal("no unique maximal nef candidate".into())),
    }
}

/// `Vol = -P²` for `P` the nef envelope trace of the log discrepancy divisor.
pub fn volume(g: &ResolutionGraph) -> Result<VolumeReport> {
    let report = g.discrepancy_report()?;
    let decomposition = nef_envelope_trace(g, &report.ell)?;
    let p = &decomposition.p;
    let volume = -g.form().pair(p, p)?;
    if volume.is_negative() {
        return Err(Error::Internal("negative volume".into()));
    }
    if volume.is_zero() != report.is_lc {
        return Err(Error::Internal("volume vanishing disagrees with log canonicity".into()));
    }
    Ok(VolumeReport { volume, log_discrepancy: report.ell, decomposition, is_lc: report.is_lc })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Edge, Vertex};
    use crate::lattice::{q, qi, qvec};

    fn graph(self_ints: &[(i64, u32)], edges: &[(usize, usize)]) -> ResolutionGraph {
        let vertices = self_ints
            .iter()
            .enumerate()
            .map(|(k, &(s, g))| Vertex { id: format!("v{k}"), self_int: s, genus: g })
            .collect();
        let edges = edges.iter().map(|&(i, j)| Edge { i, j, mult: 1 }).collect();
        ResolutionGraph::new(vertices, edges).unwrap()
    }

    #[test]
    fn envelope_examples() {
        let a1 = graph(&[(-2, 0)], &[]);
        let z = nef_envelope_trace(&a1, &qvec(&[1])).unwrap();
        assert_eq!((z.p, z.n, z.active), (qvec(&[0]), qvec(&[1]), vec![0]));

        for d in 1..6 {
            let g = graph(&[(-d, 2)], &[]);
            let a = vec![q(-2, d)];
            let z = nef_envelope_trace(&g, &a).unwrap();
            assert_eq!(z.p, a);
            assert_eq!(z.n, qvec(&[0]));
            assert!(z.active.is_empty());
        }

        let a2 = graph(&[(-2, 0), (-2, 0)], &[(0, 1)]);
        let z = nef_envelope_trace(&a2, &qvec(&[1, 0])).unwrap();
        assert_eq!((z.p, z.n, z.active), (qvec(&[0, 0]), qvec(&[1, 0]), vec![0]));
    }

    #[test]
    fn volume_examples() {
        let v = |s, g| volume(&graph(&[(s, g)], &[])).unwrap();
        assert_eq!(v(-2, 0).volume, qi(0));
        assert!(v(-2, 0).is_lc);
        assert_eq!(v(-1, 2).volume, qi(4));
        assert_eq!(v(-1, 2).decomposition.p, qvec(&[-2]));
        assert_eq!(v(-2, 2).volume, qi(2));
        assert!(!v(-2, 2).is_lc);
    }

    #[test]
    fn oracle_examples() {
        let a1 = graph(&[(-2, 0)], &[]);
        assert_eq!(
            zariski_oracle(&a1, &qvec(&[1]), ORACLE_MAX_VERTICES).unwrap(),
            nef_envelope_trace(&a1, &qvec(&[1])).unwrap()
        );
        // already nef: empty active set
        let g = graph(&[(-3, 0), (-2, 0)], &[(0, 1)]);
        let a = qvec(&[-1, -1]);
        assert!(g.intersections(&a).unwrap().iter().all(|x| !x.is_negative()));
        let z = zariski_oracle(&g, &a, ORACLE_MAX_VERTICES).unwrap();
        assert_eq!(z.p, a);
        assert!(z.active.is_empty());
        assert!(matches!(zariski_oracle(&g, &a, 1), Err(Error::OracleSize { size: 2, bound: 1 })));
    }

    #[test]
    fn genus_two_with_tail() {
        // ell = [-5/3, -1/3], A·E = [3, -1]: the tail enters the active set,
        // n = 1/2 from -2n = -1, P = [-5/3, -5/6], P² = -25/6
        let g = graph(&[(-2, 2), (-2, 0)], &[(0, 1)]);
        let r = volume(&g).unwrap();
        assert_eq!(r.decomposition.p, vec![q(-5, 3), q(-5, 6)]);
        assert_eq!(r.decomposition.n, vec![q(0, 1), q(1, 2)]);
        assert_eq!(r.decomposition.active, vec![1]);
        assert_eq!(r.volume, q(25, 6));
        assert_eq!(zariski_oracle(&g, &r.log_discrepancy, 12).unwrap(), r.decomposition);
    }
}
