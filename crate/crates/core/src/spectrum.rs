//! Spectra as multisets of `(eigenvalue, multiplicity)`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::exact::{rational_to_f64, Rational};

/// Which matrix a spectrum belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpectrumKind {
    Adjacency,
    Laplacian,
    SignlessLaplacian,
    AAlpha,
    DistanceLaplacian,
}

impl fmt::Display for SpectrumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpectrumKind::Adjacency => "adjacency",
            SpectrumKind::Laplacian => "laplacian",
            SpectrumKind::SignlessLaplacian => "signless",
            SpectrumKind::AAlpha => "a-alpha",
            SpectrumKind::DistanceLaplacian => "distance-laplacian",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Eigenvalue {
    Integer(i128),
    Rational(Rational),
    /// `slope * alpha + intercept`.
    Affine {
        slope: i128,
        intercept: i128,
    },
    Numeric(f64),
    /// Placeholder for the roots of a named quotient matrix, left unevaluated.
    QuotientRoots(&'static str),
}

impl Eigenvalue {
    /// Exact value, evaluating affine forms at `alpha`.
    pub fn exact(&self, alpha: Option<&Rational>) -> Option<Rational> {
        match self {
            Eigenvalue::Integer(v) => Some(Rational::from_integer((*v).into())),
            Eigenvalue::Rational(r) => Some(r.clone()),
            Eigenvalue::Affine { slope, intercept } => alpha.map(|a| {
                a * Rational::from_integer(BigInt::from(*slope)) + Rational::from_integer(BigInt::from(*intercept))
            }),
            Eigenvalue::Numeric(_) | Eigenvalue::QuotientRoots(_) => None,
        }
    }

    pub fn to_f64(&self, alpha: Option<&Rational>) -> Option<f64> {
        match self {
            Eigenvalue::Numeric(v) => Some(*v),
            Eigenvalue::Integer(v) => Some(*v as f64),
            other => other.exact(alpha).map(|r| rational_to_f64(&r)),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Eigenvalue::Integer(_) | Eigenvalue::Rational(_))
    }
}

impl fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Eigenvalue::Integer(v) => write!(f, "{v}"),
            Eigenvalue::Rational(r) => write!(f, "{r}"),
            Eigenvalue::Affine { slope, intercept } => match intercept.cmp(&0) {
                Ordering::Less => write!(f, "{slope}*alpha-{}", intercept.abs()),
                _ => write!(f, "{slope}*alpha+{intercept}"),
            },
            Eigenvalue::Numeric(v) => write!(f, "{v:.12}"),
            Eigenvalue::QuotientRoots(name) => write!(f, "roots of {name}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumEntry {
    pub value: Eigenvalue,
    pub multiplicity: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub kind: SpectrumKind,
    /// The `alpha` at which affine entries are evaluated.
    pub alpha: Option<Rational>,
    pub entries: Vec<SpectrumEntry>,
    /// Residual bound of the eigensolve behind any numeric entries.
    pub residual_bound: Option<f64>,
}

impl Spectrum {
    pub fn new(kind: SpectrumKind, alpha: Option<Rational>) -> Self {
        Self {
            kind,
            alpha,
            entries: Vec::new(),
            residual_bound: None,
        }
    }

    pub fn push(&mut self, value: Eigenvalue, multiplicity: u64) {
        if multiplicity > 0 {
            self.entries.push(SpectrumEntry { value, multiplicity });
        }
    }

    /// Adds an exact value, merging with an equal exact entry.
    pub fn push_exact(&mut self, value: Eigenvalue, multiplicity: u64) {
        debug_assert!(value.is_exact());
        if multiplicity == 0 {
            return;
        }
        if let Some(e) = self
            .entries
            .iter_mut()
            .find(|e| e.value.is_exact() && e.value.exact(None) == value.exact(None))
        {
            e.multiplicity += multiplicity;
        } else {
            self.push(value, multiplicity);
        }
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    pub fn value_f64(&self, entry: &SpectrumEntry) -> Option<f64> {
        entry.value.to_f64(self.alpha.as_ref())
    }

    /// Sorts descending by evaluated value, larger multiplicity first on ties;
    /// unevaluated entries go last.
    pub fn sort(&mut self) {
        let alpha = self.alpha.clone();
        self.entries.sort_by(|a, b| {
            let va = a.value.to_f64(alpha.as_ref());
            let vb = b.value.to_f64(alpha.as_ref());
            match (va, vb) {
                (Some(x), Some(y)) => y.total_cmp(&x),
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (None, None) => Ordering::Equal,
            }
            .then(b.multiplicity.cmp(&a.multiplicity))
        });
    }

    /// Every eigenvalue listed with repetition, descending.
    pub fn expanded_f64(&self) -> Option<Vec<f64>> {
        let mut out = Vec::new();
        for e in &self.entries {
            let v = self.value_f64(e)?;
            out.extend(std::iter::repeat_n(v, e.multiplicity as usize));
        }
        out.sort_by(|a, b| b.total_cmp(a));
        Some(out)
    }

    /// Sum of the exact entries with multiplicity; numeric entries are skipped.
    pub fn exact_sum(&self) -> Rational {
        self.entries
            .iter()
            .filter_map(|e| {
                e.value
                    .exact(self.alpha.as_ref())
                    .map(|v| v * Rational::from_integer(e.multiplicity.into()))
            })
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Sum of the numeric entries.
    pub fn numeric_sum(&self) -> f64 {
        self.entries
            .iter()
            .filter_map(|e| match e.value {
                Eigenvalue::Numeric(v) => Some(v * e.multiplicity as f64),
                _ => None,
            })
            .sum()
    }
}

/// Energy of a spectrum; `non_adjacency` flags a spectrum that is not an
/// adjacency spectrum, for which energy is not the usual graph energy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Energy {
    pub value: f64,
    pub non_adjacency: bool,
}

pub fn graph_energy(spec: &Spectrum) -> Option<Energy> {
    let mut value = 0.0;
    for e in &spec.entries {
        value += spec.value_f64(e)?.abs() * e.multiplicity as f64;
    }
    Some(Energy {
        value,
        non_adjacency: spec.kind != SpectrumKind::Adjacency,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational;

    #[test]
    fn affine_display_and_eval() {
        let v = Eigenvalue::Affine {
            slope: 7,
            intercept: -1,
        };
        assert_eq!(v.to_string(), "7*alpha-1");
        assert_eq!(v.exact(Some(&rational(1, 2))), Some(rational(5, 2)));
        assert_eq!(v.exact(None), None);
        assert_eq!(Eigenvalue::Affine { slope: 1, intercept: 0 }.to_string(), "1*alpha+0");
    }

    #[test]
    fn sorting_and_merging() {
        let mut s = Spectrum::new(SpectrumKind::Laplacian, None);
        s.push_exact(Eigenvalue::Integer(1), 3);
        s.push_exact(Eigenvalue::Integer(7), 1);
        s.push_exact(Eigenvalue::Integer(1), 2);
        s.push_exact(Eigenvalue::Integer(0), 0);
        s.push(Eigenvalue::Numeric(7.0), 4);
        s.sort();
        let mults: Vec<u64> = s.entries.iter().map(|e| e.multiplicity).collect();
        assert_eq!(mults, [4, 1, 5]);
        assert_eq!(s.total_multiplicity(), 10);
    }

    #[test]
    fn energies() {
        let mut k2 = Spectrum::new(SpectrumKind::Adjacency, None);
        k2.push_exact(Eigenvalue::Integer(1), 1);
        k2.push_exact(Eigenvalue::Integer(-1), 1);
        assert_eq!(
            graph_energy(&k2),
            Some(Energy {
                value: 2.0,
                non_adjacency: false
            })
        );

        let mut empty = Spectrum::new(SpectrumKind::Adjacency, None);
        empty.push_exact(Eigenvalue::Integer(0), 5);
        assert_eq!(graph_energy(&empty).unwrap().value, 0.0);

        let mut lap = Spectrum::new(SpectrumKind::Laplacian, None);
        lap.push_exact(Eigenvalue::Integer(2), 1);
        assert!(graph_energy(&lap).unwrap().non_adjacency);
    }
}
