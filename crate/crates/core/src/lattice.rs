//! Exact rational linear algebra over small symmetric lattices.
//!
//! Every quantity here is an arbitrary-precision rational; there is no
//! floating point anywhere in the crate's numeric path.

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Coefficient vector over a declared basis (graph vertices or a Num basis).
pub type QVector = Vec<Rational>;

pub fn q(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn qi(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn qvec(entries: &[i64]) -> QVector {
    entries.iter().map(|&e| qi(e)).collect()
}

/// Parses `"p/q"` or `"p"`; the result is reduced.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::MalformedInput(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, d)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::MalformedInput(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(p, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Lowest-terms `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn format_vector(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Componentwise `a <= b`.
pub fn leq(a: &[Rational], b: &[Rational]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn sub(a: &[Rational], b: &[Rational]) -> QVector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[Rational], b: &[Rational]) -> QVector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale(c: &Rational, a: &[Rational]) -> QVector {
    a.iter().map(|x| c * x).collect()
}

pub fn zeros(n: usize) -> QVector {
    vec![Rational::zero(); n]
}

/// Serde adapters writing rationals as `"p/q"` strings and reading either
/// strings or bare integers.
pub mod qserde {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::{format_rational, parse_rational, Rational};

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Text {
        Str(String),
        Int(i64),
    }

    fn from_text<E: serde::de::Error>(t: Text) -> Result<Rational, E> {
        match t {
            Text::Str(s) => parse_rational(&s).map_err(E::custom),
            Text::Int(n) => Ok(super::qi(n)),
        }
    }

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        from_text(Text::deserialize(d)?)
    }

    pub mod vec {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for r in v {
                seq.serialize_element(&format_rational(r))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            Vec::<Text>::deserialize(d)?.into_iter().map(from_text).collect()
        }
    }

    pub mod matrix {
        use super::*;

        pub fn serialize<S: Serializer>(m: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
            let rows: Vec<Vec<String>> =
                m.iter().map(|r| r.iter().map(format_rational).collect()).collect();
            serde::Serialize::serialize(&rows, s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Rational>>, D::Error> {
            Vec::<Vec<Text>>::deserialize(d)?
                .into_iter()
                .map(|r| r.into_iter().map(from_text).collect())
                .collect()
        }
    }

    pub mod opt {
        use super::*;

        pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
            match r {
                Some(r) => s.serialize_str(&format_rational(r)),
                None => s.serialize_none(),
            }
        }
    }
}

/// Symmetric bilinear form with exact rational entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymForm {
    entries: Vec<Vec<Rational>>,
}

impl SymForm {
    pub fn new(entries: Vec<Vec<Rational>>) -> Result<Self> {
        let n = entries.len();
        if let Some(row) = entries.iter().position(|r| r.len() != n) {
            return Err(Error::MalformedForm(format!(
                "row {row} has length {} in a {n}x{n} form",
                entries[row].len()
            )));
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if entries[i][j] != entries[j][i] {
                    return Err(Error::MalformedForm(format!("asymmetric at ({i}, {j})")));
                }
            }
        }
        Ok(SymForm { entries })
    }

    pub fn from_integers(rows: &[&[i64]]) -> Result<Self> {
        Self::new(rows.iter().map(|r| qvec(r)).collect())
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    fn check_len(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::MalformedInput(format!(
                "vector of length {} against a form of dimension {}",
                v.len(),
                self.dim()
            )));
        }
        Ok(())
    }

    /// `form · x`.
    pub fn apply(&self, x: &[Rational]) -> Result<QVector> {
        self.check_len(x)?;
        Ok(self.entries.iter().map(|row| dot(row, x)).collect())
    }

    /// `aᵀ · form · b`.
    pub fn pair(&self, a: &[Rational], b: &[Rational]) -> Result<Rational> {
        self.check_len(a)?;
        Ok(dot(a, &self.apply(b)?))
    }

    /// Principal sub-form on the given indices, in the given order.
    pub fn restrict(&self, idx: &[usize]) -> SymForm {
        SymForm {
            entries: idx
                .iter()
                .map(|&i| idx.iter().map(|&j| self.entries[i][j].clone()).collect())
                .collect(),
        }
    }

    /// Pivots of elimination without row exchange. The k-th pivot is
    /// `m_k / m_{k-1}` for leading principal minors `m_k`; elimination stops
    /// at the first zero pivot.
    fn leading_pivots(&self) -> Vec<Rational> {
        let n = self.dim();
        let mut a = self.entries.clone();
        let mut pivots = Vec::with_capacity(n);
        for k in 0..n {
            let p = a[k][k].clone();
            if p.is_zero() {
                pivots.push(p);
                break;
            }
            for i in (k + 1)..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let f = &a[i][k] / &p;
                for j in k..n {
                    let t = &f * &a[k][j];
                    a[i][j] -= t;
                }
            }
            pivots.push(p);
        }
        pivots
    }

    /// Leading principal minors `m_1..m_n` (zeros after the first vanishing one).
    pub fn leading_minors(&self) -> Vec<Rational> {
        let mut out = Vec::with_capacity(self.dim());
        let mut acc = Rational::one();
        for p in self.leading_pivots() {
            acc *= p;
            out.push(acc.clone());
        }
        out.resize(self.dim(), Rational::zero());
        out
    }

    /// Sylvester's criterion: `sign(m_k) = (-1)^k` with every `m_k != 0`,
    /// equivalently every elimination pivot is strictly negative.
    pub fn is_negative_definite(&self) -> bool {
        let pivots = self.leading_pivots();
        pivots.len() == self.dim() && pivots.iter().all(|p| p.is_negative())
    }

    pub fn determinant(&self) -> Rational {
        self.leading_minors().last().cloned().unwrap_or_else(Rational::one)
    }

    /// Exact solution of `form · x = rhs`.
    pub fn solve(&self, rhs: &[Rational]) -> Result<QVector> {
        self.check_len(rhs)?;
        let n = self.dim();
        let mut a: Vec<Vec<Rational>> = self
            .entries
            .iter()
            .zip(rhs)
            .map(|(row, b)| {
                let mut r = row.clone();
                r.push(b.clone());
                r
            })
            .collect();
        for k in 0..n {
            let piv = (k..n).find(|&i| !a[i][k].is_zero()).ok_or(Error::Singular)?;
            a.swap(k, piv);
            for i in (k + 1)..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let f = &a[i][k] / &a[k][k];
                for j in k..=n {
                    let t = &f * &a[k][j];
                    a[i][j] -= t;
                }
            }
        }
        let mut x = zeros(n);
        for k in (0..n).rev() {
            let s: Rational = ((k + 1)..n).map(|j| &a[k][j] * &x[j]).sum();
            x[k] = (&a[k][n] - s) / &a[k][k];
        }
        Ok(x)
    }
}
