//! Signed/weighted pattern containment and the pattern-avoidance
//! full-commutativity deciders for G(m,1,n), B_n, and D_n.
//!
//! A pattern is a k x k monomial template: a permutation (where the
//! nonzero entry of each column sits) plus a per-column predicate on the
//! weight. Containment quantifies over column subsets only; an n x n
//! monomial matrix meets any k columns in exactly k rows.

use itertools::Itertools;

use crate::group::{Element, GensetKind, GroupSpec};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightPred {
    /// Entry is exactly 1 (weight 0).
    Zero,
    /// Entry is a nontrivial root of unity (weight != 0).
    NonZero,
    /// Any root of unity.
    Any,
}

impl WeightPred {
    fn matches(self, w: u32) -> bool {
        match self {
            WeightPred::Zero => w == 0,
            WeightPred::NonZero => w != 0,
            WeightPred::Any => true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    pub name: &'static str,
    /// Row (0-based) of the nonzero entry in each column of the template.
    pub perm: Vec<usize>,
    pub preds: Vec<WeightPred>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternFamily {
    /// The six rows of the G(m,1,n) table.
    Gm1n,
    /// Same table read at m=2.
    Bn,
    /// All 3-column patterns (a,b,c) with |a|>b>c or -b>|a|>c. This is
    /// the five 3-column table rows plus (±1,-2,-3); the latter is
    /// omitted from the B_n table because any occurrence contains
    /// (-1,-2), but D_n elements may contain (-1,-2) freely.
    Dn,
}

#[derive(Debug, Clone)]
pub struct PatternCatalog {
    pub family: PatternFamily,
    pub patterns: Vec<Pattern>,
}

use WeightPred::{Any, NonZero, Zero};

fn table_rows() -> Vec<Pattern> {
    vec![
        Pattern {
            name: "(-1,-2)",
            perm: vec![0, 1],
            preds: vec![NonZero, NonZero],
        },
        Pattern {
            name: "(±3,2,±1)",
            perm: vec![2, 1, 0],
            preds: vec![Any, Zero, Any],
        },
        Pattern {
            name: "(±3,±1,-2)",
            perm: vec![1, 2, 0],
            preds: vec![Any, NonZero, Any],
        },
        Pattern {
            name: "(±2,±1,-3)",
            perm: vec![1, 0, 2],
            preds: vec![Any, Any, NonZero],
        },
        Pattern {
            name: "(±2,-3,±1)",
            perm: vec![2, 0, 1],
            preds: vec![Any, Any, NonZero],
        },
        Pattern {
            name: "(±1,-3,-2)",
            perm: vec![0, 2, 1],
            preds: vec![Any, NonZero, NonZero],
        },
    ]
}

/// The complete pattern catalog for a family.
pub fn catalog(family: PatternFamily) -> PatternCatalog {
    let rows = table_rows();
    let patterns = match family {
        PatternFamily::Gm1n | PatternFamily::Bn => rows,
        PatternFamily::Dn => {
            let mut rows: Vec<Pattern> = rows.into_iter().skip(1).collect();
            rows.push(Pattern {
                name: "(±1,-2,-3)",
                perm: vec![0, 1, 2],
                preds: vec![Any, NonZero, NonZero],
            });
            rows
        }
    };
    PatternCatalog { family, patterns }
}

/// Columns j_1 < ... < j_k whose induced submatrix realizes the pattern,
/// if any. Rows are standardized by their order in the ambient matrix.
pub fn contains(g: &Element, pattern: &Pattern) -> Option<Vec<usize>> {
    let n = g.perm.len();
    let k = pattern.perm.len();
    if k > n {
        return None;
    }
    for cols in (0..n).combinations(k) {
        if !cols
            .iter()
            .zip(&pattern.preds)
            .all(|(&j, p)| p.matches(g.weights[j]))
        {
            continue;
        }
        let rows: Vec<usize> = cols.iter().map(|&j| g.perm[j]).collect();
        let std: Vec<usize> = rows
            .iter()
            .map(|&r| rows.iter().filter(|&&x| x < r).count())
            .collect();
        if std == pattern.perm {
            return Some(cols);
        }
    }
    None
}

fn family_for_spec(spec: &GroupSpec) -> Result<PatternFamily> {
    match spec.genset {
        GensetKind::Gm1n => Ok(PatternFamily::Gm1n),
        GensetKind::CoxeterB => Ok(PatternFamily::Bn),
        GensetKind::Classical if spec.m == 2 => Ok(PatternFamily::Dn),
        other => Err(Error::UnsupportedSpec(format!(
            "no pattern-avoidance characterization for {other} with m = {}",
            spec.m
        ))),
    }
}

/// Pattern-avoidance decider: g is fully commutative iff it avoids every
/// pattern in the catalog for its family. Supported for G(m,1,n), B_n,
/// and D_n only; the characterization is known to fail for G(m,m,n), m>2.
pub fn is_fc_by_patterns(spec: &GroupSpec, g: &Element) -> Result<bool> {
    Ok(find_pattern(spec, g)?.is_none())
}

/// The first matched catalog pattern with its witness columns, if any.
pub fn find_pattern(spec: &GroupSpec, g: &Element) -> Result<Option<(Pattern, Vec<usize>)>> {
    let family = family_for_spec(spec)?;
    for pattern in catalog(family).patterns {
        if let Some(cols) = contains(g, &pattern) {
            return Ok(Some((pattern, cols)));
        }
    }
    Ok(None)
}
