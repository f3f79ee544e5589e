//! Canonical reduced words for G(m,1,n) (B_n as m=2) via the tower of
//! shortest left coset representatives G(m,1,n) / G(m,1,n-1), the
//! block-shape full-commutativity test, and block projection to B_n.
//!
//! Bracket notation: `[i, j] = s_i s_{i+1} ... s_j`,
//! `[(-i)^e, j] = s_i ... s_1 s_0^e s_1 ... s_j`, and
//! `[0^e, k] = s_0^e s_1 ... s_k`.

use std::fmt;

use crate::cayley::Word;
use crate::group::{identity, inverse, multiply, Element, GeneratorId, GensetKind, GroupSpec};
use crate::{Error, Result};

/// One block `[m_i^{a_i}, n_i]` of a canonical reduced word. The sign of
/// `m` selects the representative family; `a` is pinned to 1 when `m > 0`
/// (and always 1 when the group's m is 2).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    pub m: i32,
    pub a: u32,
    pub n: u32,
}

impl Block {
    /// Number of generator letters the block expands to.
    pub fn letters(&self) -> u32 {
        if self.m > 0 {
            self.n - self.m as u32 + 1
        } else {
            self.m.unsigned_abs() + self.a + self.n
        }
    }

    /// Generator letters of the block.
    pub fn expand(&self) -> Vec<GeneratorId> {
        let mut letters = Vec::new();
        if self.m > 0 {
            for i in self.m as usize..=self.n as usize {
                letters.push(GeneratorId(i));
            }
        } else {
            for i in (1..=self.m.unsigned_abs() as usize).rev() {
                letters.push(GeneratorId(i));
            }
            for _ in 0..self.a {
                letters.push(GeneratorId(0));
            }
            for i in 1..=self.n as usize {
                letters.push(GeneratorId(i));
            }
        }
        letters
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m > 0 || self.a == 1 {
            write!(f, "[{},{}]", self.m, self.n)
        } else {
            write!(f, "[{}^{},{}]", self.m, self.a, self.n)
        }
    }
}

/// A canonical reduced word: blocks with strictly decreasing n_i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalWord {
    pub blocks: Vec<Block>,
}

impl CanonicalWord {
    pub fn m_sequence(&self) -> Vec<i32> {
        self.blocks.iter().map(|b| b.m).collect()
    }
}

impl fmt::Display for CanonicalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return f.write_str("[]");
        }
        for b in &self.blocks {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

fn require_tower_spec(spec: &GroupSpec) -> Result<()> {
    match spec.genset {
        GensetKind::Gm1n | GensetKind::CoxeterB => Ok(()),
        other => Err(Error::UnsupportedSpec(format!(
            "canonical words require the gm1n or coxeterB generating set, got {other}"
        ))),
    }
}

/// The shortest left coset representatives for G(m,1,level)/G(m,1,level-1),
/// as (block descriptor, element) pairs. The identity representative
/// carries no block.
pub fn coset_representatives(
    spec: &GroupSpec,
    level: usize,
) -> Result<Vec<(Option<Block>, Element)>> {
    require_tower_spec(spec)?;
    assert!(level >= 1 && level <= spec.n, "level in 1..=n");
    let top = (level - 1) as u32;
    let mut reps = vec![(None, identity(spec))];
    for i in (1..level).rev() {
        let block = Block {
            m: i as i32,
            a: 1,
            n: top,
        };
        reps.push((Some(block), Word(block.expand()).evaluate(spec)));
    }
    for i in 0..level {
        for eps in 1..spec.m {
            let block = Block {
                m: -(i as i32),
                a: eps,
                n: top,
            };
            reps.push((Some(block), Word(block.expand()).evaluate(spec)));
        }
    }
    Ok(reps)
}

/// Canonical reduced word of g: peel levels n down to 1, at each level
/// choosing the unique representative u for which u^{-1} g fixes that
/// coordinate with weight zero.
pub fn canonical_word(spec: &GroupSpec, g: &Element) -> Result<CanonicalWord> {
    require_tower_spec(spec)?;
    let mut blocks = Vec::new();
    let mut cur = g.clone();
    for level in (1..=spec.n).rev() {
        let coord = level - 1;
        let mut found: Option<(Option<Block>, Element)> = None;
        for (block, u) in coset_representatives(spec, level)? {
            let peeled = multiply(spec, &inverse(spec, &u), &cur);
            if peeled.perm[coord] == coord && peeled.weights[coord] == 0 {
                assert!(
                    found.is_none(),
                    "coset representative at level {level} is not unique for {cur}"
                );
                found = Some((block, peeled));
            }
        }
        let (block, peeled) = found.expect("a coset representative exists at every level");
        if let Some(b) = block {
            blocks.push(b);
        }
        cur = peeled;
    }
    debug_assert_eq!(cur, identity(spec));
    Ok(CanonicalWord { blocks })
}

/// Concatenates the blocks into a plain word in the generators.
pub fn word_from_canonical(cw: &CanonicalWord) -> Word {
    Word(cw.blocks.iter().flat_map(Block::expand).collect())
}

/// Length of g computed from its canonical word, with no BFS.
pub fn length_via_canonical(spec: &GroupSpec, g: &Element) -> Result<u32> {
    Ok(canonical_word(spec, g)?
        .blocks
        .iter()
        .map(Block::letters)
        .sum())
}

/// The block-shape full-commutativity test on the m_i sequence: either a
/// strictly decreasing positive prefix followed by a (possibly empty) tail
/// of zeros, or a strictly decreasing positive prefix with one final
/// negative block whose magnitude stays below the prefix.
///
/// The two source characterizations label these cases in opposite orders;
/// a single pair of predicates covers both readings.
pub fn is_fc_by_criterion(cw: &CanonicalWord) -> bool {
    let ms = cw.m_sequence();
    decreasing_positive_then_zeros(&ms) || decreasing_positive_then_small_negative(&ms)
}

fn decreasing_positive_then_zeros(ms: &[i32]) -> bool {
    let tail_zeros = ms.iter().rev().take_while(|&&m| m == 0).count();
    let prefix = &ms[..ms.len() - tail_zeros];
    prefix.iter().all(|&m| m > 0) && prefix.windows(2).all(|w| w[0] > w[1])
}

fn decreasing_positive_then_small_negative(ms: &[i32]) -> bool {
    let Some((&last, prefix)) = ms.split_last() else {
        return false;
    };
    if last >= 0 {
        return false;
    }
    prefix.iter().all(|&m| m > 0)
        && prefix.windows(2).all(|w| w[0] > w[1])
        && prefix.last().map_or(true, |&m| m > -last)
}

/// Block projection to B_n: same (m_i, n_i), exponents collapsed to 1.
/// Matches `canonical_word(project_to_b(g))` computed in G(2,1,n).
pub fn project_canonical(cw: &CanonicalWord) -> CanonicalWord {
    CanonicalWord {
        blocks: cw
            .blocks
            .iter()
            .map(|b| Block { m: b.m, a: 1, n: b.n })
            .collect(),
    }
}
