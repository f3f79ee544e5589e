//! Monomial-matrix model of G(m,p,n) and its generating sets.
//!
//! An element is stored as `[f(g); (a_1, ..., a_n)]`: the underlying
//! permutation `f(g)` together with the exponent `a_j` of the nonzero
//! entry in column `j`. Roots of unity never leave exponent form, so all
//! arithmetic is exact.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Which generating set a [`GroupSpec`] carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GensetKind {
    /// B_n = G(2,1,n) with `s_0, s_1, ..., s_{n-1}`.
    CoxeterB,
    /// G(m,1,n) with `s_0, s_1, ..., s_{n-1}`.
    Gm1n,
    /// G(m,m,n) with `s_bar1, s_1, ..., s_{n-1}` (adjacent transpositions).
    Classical,
    /// G(m,m,n) with `s_1, ..., s_{n-1}, s~_n = [(1 n); (-1,0,...,0,1)]`.
    Affine,
    /// G(m,m,n) with `s_bar1` and the star transpositions `(1, i+1)`.
    Star,
    /// S_n with adjacent transpositions.
    SymAdjacent,
    /// S_n with star transpositions `(1, i+1)`.
    SymStar,
}

impl GensetKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GensetKind::CoxeterB => "coxeterB",
            GensetKind::Gm1n => "gm1n",
            GensetKind::Classical => "classical",
            GensetKind::Affine => "affine",
            GensetKind::Star => "star",
            GensetKind::SymAdjacent => "symAdjacent",
            GensetKind::SymStar => "symStar",
        }
    }

    pub fn parse(s: &str) -> Option<GensetKind> {
        match s {
            "coxeterB" | "coxeterb" | "b" => Some(GensetKind::CoxeterB),
            "gm1n" => Some(GensetKind::Gm1n),
            "classical" => Some(GensetKind::Classical),
            "affine" => Some(GensetKind::Affine),
            "star" => Some(GensetKind::Star),
            "symAdjacent" | "symadjacent" | "adjacent" => Some(GensetKind::SymAdjacent),
            "symStar" | "symstar" => Some(GensetKind::SymStar),
            _ => None,
        }
    }
}

impl fmt::Display for GensetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Index of a generator. Index 0 is the distinguished generator of the
/// genset (`s_0`, `s_bar1`, or `s~_n`); indices `1..n-1` are `s_1..s_{n-1}`.
/// For the symmetric-group gensets there is no distinguished generator and
/// index 0 is invalid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GeneratorId(pub usize);

/// One element of G(m,p,n): `perm[j]` is the row (0-based) of the nonzero
/// entry in column `j`, and `weights[j]` its exponent, reduced to `[0, m)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Element {
    pub perm: Vec<usize>,
    pub weights: Vec<u32>,
}

/// A validated group G(m,p,n) together with its generator list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    pub m: u32,
    pub p: u32,
    pub n: usize,
    pub genset: GensetKind,
    generators: Vec<(GeneratorId, Element)>,
}

/// Builds the spec for G(m,p,n) with the requested generating set,
/// materializing the generator list.
pub fn make_group(m: u32, p: u32, n: usize, genset: GensetKind) -> Result<GroupSpec> {
    if m == 0 || p == 0 || n == 0 {
        return Err(Error::GensetMismatch {
            m,
            p,
            n,
            genset: genset.to_string(),
            reason: "m, p, n must be positive".into(),
        });
    }
    if m % p != 0 {
        return Err(Error::Divisibility { m, p });
    }
    let mismatch = |reason: &str| Error::GensetMismatch {
        m,
        p,
        n,
        genset: genset.to_string(),
        reason: reason.into(),
    };
    match genset {
        GensetKind::CoxeterB => {
            if m != 2 || p != 1 {
                return Err(mismatch("coxeterB requires m=2, p=1"));
            }
        }
        GensetKind::Gm1n => {
            if p != 1 || m < 2 {
                return Err(mismatch("gm1n requires p=1 and m>=2"));
            }
        }
        GensetKind::Classical => {
            if p != m || m < 2 || n < 2 {
                return Err(mismatch("classical requires p=m>=2 and n>=2"));
            }
        }
        GensetKind::Affine => {
            if p != m || m < 2 || n < 3 {
                return Err(mismatch("affine requires p=m>=2 and n>=3"));
            }
        }
        GensetKind::Star => {
            if p != m || m < 2 || n < 2 {
                return Err(mismatch("star requires p=m>=2 and n>=2"));
            }
        }
        GensetKind::SymAdjacent | GensetKind::SymStar => {
            if m != 1 || p != 1 {
                return Err(mismatch("symmetric gensets require m=p=1"));
            }
        }
    }

    let transposition = |i: usize, j: usize| {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(i, j);
        Element {
            perm,
            weights: vec![0; n],
        }
    };
    // -1 exponents in generator definitions are reduced mod m here.
    let mut generators: Vec<(GeneratorId, Element)> = Vec::new();
    match genset {
        GensetKind::CoxeterB | GensetKind::Gm1n => {
            let mut s0 = Element {
                perm: (0..n).collect(),
                weights: vec![0; n],
            };
            s0.weights[0] = 1;
            generators.push((GeneratorId(0), s0));
            for i in 1..n {
                generators.push((GeneratorId(i), transposition(i - 1, i)));
            }
        }
        GensetKind::Classical | GensetKind::Star => {
            let mut sbar = transposition(0, 1);
            sbar.weights[0] = m - 1;
            sbar.weights[1] = 1;
            generators.push((GeneratorId(0), sbar));
            for i in 1..n {
                let s = match genset {
                    GensetKind::Classical => transposition(i - 1, i),
                    _ => transposition(0, i),
                };
                generators.push((GeneratorId(i), s));
            }
        }
        GensetKind::Affine => {
            let mut stilde = transposition(0, n - 1);
            stilde.weights[0] = m - 1;
            stilde.weights[n - 1] = 1;
            generators.push((GeneratorId(0), stilde));
            for i in 1..n {
                generators.push((GeneratorId(i), transposition(i - 1, i)));
            }
        }
        GensetKind::SymAdjacent => {
            for i in 1..n {
                generators.push((GeneratorId(i), transposition(i - 1, i)));
            }
        }
        GensetKind::SymStar => {
            for i in 1..n {
                generators.push((GeneratorId(i), transposition(0, i)));
            }
        }
    }
    Ok(GroupSpec {
        m,
        p,
        n,
        genset,
        generators,
    })
}

impl GroupSpec {
    /// Generator list as `(id, element)` pairs, ordered by id.
    pub fn generators(&self) -> &[(GeneratorId, Element)] {
        &self.generators
    }

    pub fn generator(&self, id: GeneratorId) -> Option<&Element> {
        self.generators
            .iter()
            .find(|(g, _)| *g == id)
            .map(|(_, e)| e)
    }

    /// Group order m^n * n! / p.
    pub fn order(&self) -> u128 {
        let mut ord: u128 = 1;
        for _ in 0..self.n {
            ord *= self.m as u128;
        }
        for k in 2..=self.n {
            ord *= k as u128;
        }
        ord / self.p as u128
    }

    /// All elements of the spec's group family in the same (m, p, n), as an
    /// unordered stream; used by exhaustive scans.
    pub fn identity_spec_key(&self) -> (u32, u32, usize, GensetKind) {
        (self.m, self.p, self.n, self.genset)
    }
}

/// The identity element of the group.
pub fn identity(spec: &GroupSpec) -> Element {
    Element {
        perm: (0..spec.n).collect(),
        weights: vec![0; spec.n],
    }
}

/// Matrix product g*h. Column j of the product is column j of h routed
/// through g: the entry lands in row `g.perm[h.perm[j]]` and picks up the
/// exponent `g.weights[h.perm[j]]`.
pub fn multiply(spec: &GroupSpec, g: &Element, h: &Element) -> Element {
    debug_assert_eq!(g.perm.len(), spec.n);
    debug_assert_eq!(h.perm.len(), spec.n);
    let n = spec.n;
    let mut perm = vec![0; n];
    let mut weights = vec![0; n];
    for j in 0..n {
        let k = h.perm[j];
        perm[j] = g.perm[k];
        weights[j] = (g.weights[k] + h.weights[j]) % spec.m;
    }
    Element { perm, weights }
}

/// Inverse of g, characterized by `multiply(g, inverse(g)) = identity`.
pub fn inverse(spec: &GroupSpec, g: &Element) -> Element {
    let n = spec.n;
    let mut perm = vec![0; n];
    for j in 0..n {
        perm[g.perm[j]] = j;
    }
    let mut weights = vec![0; n];
    for j in 0..n {
        weights[j] = (spec.m - g.weights[perm[j]]) % spec.m;
    }
    Element { perm, weights }
}

/// The underlying permutation f(g): every root of unity replaced with 1.
pub fn underlying_permutation(g: &Element) -> Vec<usize> {
    g.perm.clone()
}

/// The map sending every nontrivial entry of g to -1: same permutation,
/// weights collapsed to 0/1, viewed in G(2,1,n).
pub fn project_to_b(g: &Element) -> Element {
    Element {
        perm: g.perm.clone(),
        weights: g.weights.iter().map(|&w| u32::from(w != 0)).collect(),
    }
}

/// Membership test: the weight of the element must vanish mod p so that
/// the product of its entries is an (m/p)-th root of unity.
pub fn is_member(spec: &GroupSpec, g: &Element) -> bool {
    g.perm.len() == spec.n
        && g.weights.iter().all(|&w| w < spec.m)
        && g.weights.iter().map(|&w| w as u64).sum::<u64>() % spec.p as u64 == 0
}

/// Formats g in the shorthand `<perm>;(<w1>,...,<wn>)`. For n <= 9 the
/// permutation is a digit string, otherwise a bracketed comma list.
pub fn format_element(g: &Element) -> String {
    let n = g.perm.len();
    let perm: String = if n <= 9 {
        g.perm.iter().map(|&r| (r + 1).to_string()).collect()
    } else {
        format!(
            "[{}]",
            g.perm
                .iter()
                .map(|&r| (r + 1).to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    };
    let ws = g
        .weights
        .iter()
        .map(|w| w.to_string())
        .collect::<Vec<_>>()
        .join(",");
    format!("{perm};({ws})")
}

/// Parses the shorthand grammar back into an element of `spec`, validating
/// bijectivity, weight range, and membership.
pub fn parse_element(text: &str, spec: &GroupSpec) -> Result<Element> {
    let err = |reason: &str| Error::ParseElement {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    let (perm_part, weight_part) = text
        .split_once(';')
        .ok_or_else(|| err("missing `;` separator"))?;
    let perm_part = perm_part.trim();
    let perm: Vec<usize> = if let Some(inner) = perm_part
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
    {
        inner
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| err("permutation entries must be integers"))?
    } else {
        perm_part
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as usize))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| err("permutation must be a digit string for n <= 9"))?
    };
    if perm.len() != spec.n {
        return Err(err("permutation length does not match the rank"));
    }
    let mut seen = vec![false; spec.n];
    let mut perm0 = Vec::with_capacity(spec.n);
    for r in perm {
        if r == 0 || r > spec.n || seen[r - 1] {
            return Err(err("permutation is not a bijection on {1..n}"));
        }
        seen[r - 1] = true;
        perm0.push(r - 1);
    }
    let weight_part = weight_part.trim();
    let inner = weight_part
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| err("weights must be parenthesized"))?;
    let weights: Vec<u32> = inner
        .split(',')
        .map(|t| t.trim().parse::<u32>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| err("weights must be nonnegative integers"))?;
    if weights.len() != spec.n {
        return Err(err("weight vector length does not match the rank"));
    }
    if let Some(w) = weights.iter().find(|&&w| w >= spec.m) {
        return Err(err(&format!("weight {w} out of range [0, {})", spec.m)));
    }
    let g = Element {
        perm: perm0,
        weights,
    };
    if !is_member(spec, &g) {
        return Err(err(&format!(
            "weight sum is not divisible by p = {}",
            spec.p
        )));
    }
    Ok(g)
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_element(self))
    }
}
