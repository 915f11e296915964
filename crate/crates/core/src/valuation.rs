//! Additive monomial orders and quasi-monomial valuations.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::RatMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    Lex,
    DegLex,
}

impl MonomialOrder {
    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::DegLex => "deglex",
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(MonomialOrder::Lex),
            "deglex" => Ok(MonomialOrder::DegLex),
            other => Err(Error::UnknownOrder(other.to_string())),
        }
    }
}

pub fn compare(order: MonomialOrder, a: &[i64], b: &[i64]) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    Ok(compare_unchecked(order, a, b))
}

pub(crate) fn compare_unchecked(order: MonomialOrder, a: &[i64], b: &[i64]) -> Ordering {
    match order {
        MonomialOrder::Lex => a.cmp(b),
        MonomialOrder::DegLex => {
            let da: i64 = a.iter().sum();
            let db: i64 = b.iter().sum();
            da.cmp(&db).then_with(|| a.cmp(b))
        }
    }
}

/// A point of Z^n tagged with the order it is compared under.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ValuationVector {
    pub entries: Vec<i64>,
    pub order: MonomialOrder,
}

impl ValuationVector {
    pub fn new(entries: Vec<i64>, order: MonomialOrder) -> Self {
        ValuationVector { entries, order }
    }

    pub fn try_cmp(&self, other: &ValuationVector) -> Result<Ordering> {
        if self.order != other.order {
            return Err(Error::OrderMismatch);
        }
        compare(self.order, &self.entries, &other.entries)
    }

    pub fn add(&self, other: &ValuationVector) -> Result<ValuationVector> {
        if self.order != other.order {
            return Err(Error::OrderMismatch);
        }
        if self.entries.len() != other.entries.len() {
            return Err(Error::DimensionMismatch {
                expected: self.entries.len(),
                found: other.entries.len(),
            });
        }
        Ok(ValuationVector {
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
            order: self.order,
        })
    }
}

/// `alpha -> sum_i alpha_i * lambda_i`, compared under a fixed monomial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiMonomialValuation {
    lambda: Vec<Vec<i64>>,
    pub order: MonomialOrder,
    pub center_label: String,
}

impl QuasiMonomialValuation {
    /// `lambda` lists the rows λ_1..λ_n, which must be linearly independent.
    pub fn new(lambda: Vec<Vec<i64>>, order: MonomialOrder, center_label: impl Into<String>) -> Result<Self> {
        let n = lambda.len();
        if n == 0 {
            return Err(Error::EmptyInput("lambda"));
        }
        if let Some(r) = lambda.iter().find(|r| r.len() != n) {
            return Err(Error::NotSquare { rows: n, cols: r.len() });
        }
        let v = QuasiMonomialValuation {
            lambda,
            order,
            center_label: center_label.into(),
        };
        if v.matrix().rank() < n {
            return Err(Error::SingularMatrix);
        }
        Ok(v)
    }

    /// Monomial valuation with the identity weights.
    pub fn standard(n: usize, order: MonomialOrder) -> Self {
        let lambda = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        QuasiMonomialValuation { lambda, order, center_label: String::new() }
    }

    /// Lex-ordered weights that realise the deglex order through the total-degree map.
    ///
    /// Row i (0-based) is `e_0 + e_{i+1}` for i < n-1 and the last row is `e_0`,
    /// so `sum alpha_i lambda_i = (|alpha|, alpha_0, ..., alpha_{n-2})`.
    pub fn infinitesimal_flag(n: usize) -> Self {
        let lambda = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| i64::from(j == 0) + i64::from(i + 1 < n && j == i + 1))
                    .collect()
            })
            .collect();
        QuasiMonomialValuation {
            lambda,
            order: MonomialOrder::Lex,
            center_label: String::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.lambda.len()
    }

    pub fn lambda(&self) -> &[Vec<i64>] {
        &self.lambda
    }

    pub fn matrix(&self) -> RatMatrix {
        RatMatrix::new(
            self.lambda
                .iter()
                .map(|r| r.iter().map(|&x| crate::geometry::int(x)).collect())
                .collect(),
        )
        .expect("square by construction")
    }

    pub fn is_faithful(&self) -> bool {
        use num_traits::Signed;
        self.matrix().det().is_ok_and(|d| d.abs() == crate::geometry::int(1))
    }

    pub fn monomial_value(&self, alpha: &[i64]) -> Result<ValuationVector> {
        let n = self.dim();
        if alpha.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: alpha.len() });
        }
        if alpha.iter().any(|&a| a < 0) {
            return Err(Error::OutOfRange("exponents must be nonnegative".into()));
        }
        let mut out = vec![0i64; n];
        for (a, row) in alpha.iter().zip(&self.lambda) {
            for (o, l) in out.iter_mut().zip(row) {
                *o += a * l;
            }
        }
        Ok(ValuationVector::new(out, self.order))
    }

    /// Valuation of a polynomial with the given monomial support: the order-minimum.
    pub fn support_value(&self, support: &[Vec<i64>]) -> Result<ValuationVector> {
        let mut best: Option<ValuationVector> = None;
        for alpha in support {
            let v = self.monomial_value(alpha)?;
            best = Some(match best {
                Some(b) if b.try_cmp(&v)? != Ordering::Greater => b,
                _ => v,
            });
        }
        best.ok_or(Error::EmptyInput("monomial support"))
    }
}

/// `(|alpha|, alpha_0, ..., alpha_{n-2})`, carrying deglex to lex.
pub fn deglex_to_lex(alpha: &[i64]) -> Vec<i64> {
    if alpha.is_empty() {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(alpha.len());
    out.push(alpha.iter().sum());
    out.extend_from_slice(&alpha[..alpha.len() - 1]);
    out
}
