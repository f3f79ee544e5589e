//! Length function, reduced expressions, commutation classes, and the
//! brute-force full-commutativity decider, all via breadth-first search
//! over the right Cayley graph.
//!
//! Generators are directed steps: a generator of order > 2 (such as s_0)
//! needs no special casing, its powers simply appear as repeated letters.

use std::collections::{HashMap, HashSet, VecDeque};
use std::path::Path;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::group::{
    format_element, identity, inverse, is_member, multiply, Element, GeneratorId, GroupSpec,
};
use crate::{Error, Result};

/// Default cap on the number of group elements a BFS will visit.
pub const DEFAULT_ELEMENT_CAP: u128 = 2_000_000;
/// Default cap on materialized words per element.
pub const DEFAULT_WORD_CAP: usize = 1_000_000;

/// A word in the generators, kept as a sequence of generator indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<GeneratorId>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Evaluates the word left to right.
    pub fn evaluate(&self, spec: &GroupSpec) -> Element {
        let mut acc = identity(spec);
        for id in &self.0 {
            let s = spec
                .generator(*id)
                .expect("word letter valid for the spec");
            acc = multiply(spec, &acc, s);
        }
        acc
    }
}

impl std::fmt::Display for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = self.0.iter().map(|id| format!("s{}", id.0)).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Complete map from group elements to their lengths (Cayley-graph
/// distance from the identity), plus the elements bucketed by length.
#[derive(Debug, Clone)]
pub struct LengthTable {
    pub spec_key: (u32, u32, usize, crate::GensetKind),
    lengths: HashMap<Element, u32>,
    by_length: Vec<Vec<Element>>,
    pub complete: bool,
}

impl LengthTable {
    pub fn length(&self, g: &Element) -> Option<u32> {
        self.lengths.get(g).copied()
    }

    pub fn len(&self) -> usize {
        self.lengths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lengths.is_empty()
    }

    pub fn max_length(&self) -> u32 {
        self.by_length.len() as u32 - 1
    }

    /// Elements of a given length, sorted for deterministic iteration.
    pub fn elements_of_length(&self, len: u32) -> &[Element] {
        self.by_length
            .get(len as usize)
            .map(|v| v.as_slice())
            .unwrap_or(&[])
    }

    pub fn iter_by_length(&self) -> impl Iterator<Item = &Element> {
        self.by_length.iter().flatten()
    }
}

/// BFS closure of the generators from the identity. Errors if the group
/// order exceeds `element_cap`.
pub fn build_length_table(spec: &GroupSpec, element_cap: u128) -> Result<LengthTable> {
    let order = spec.order();
    if order > element_cap {
        return Err(Error::GroupCapExceeded {
            order,
            cap: element_cap,
        });
    }
    let mut lengths: HashMap<Element, u32> = HashMap::new();
    let mut by_length: Vec<Vec<Element>> = Vec::new();
    let id = identity(spec);
    lengths.insert(id.clone(), 0);
    let mut frontier = vec![id];
    let mut dist = 0u32;
    while !frontier.is_empty() {
        frontier.sort();
        by_length.push(frontier.clone());
        let mut next = Vec::new();
        for g in &frontier {
            for (_, s) in spec.generators() {
                let h = multiply(spec, g, s);
                if !lengths.contains_key(&h) {
                    lengths.insert(h.clone(), dist + 1);
                    next.push(h);
                }
            }
        }
        frontier = next;
        dist += 1;
    }
    Ok(LengthTable {
        spec_key: spec.identity_spec_key(),
        lengths,
        by_length,
        complete: true,
    })
}

/// Every element of the group, in length order. Convenience wrapper used
/// by exhaustive unit tests.
pub fn all_elements(spec: &GroupSpec) -> Vec<Element> {
    let table = build_length_table(spec, DEFAULT_ELEMENT_CAP).expect("desk-scale group");
    table.iter_by_length().cloned().collect()
}

/// Unordered pairs of distinct generators that commute in the group.
pub fn commuting_pairs(spec: &GroupSpec) -> HashSet<(GeneratorId, GeneratorId)> {
    let mut pairs = HashSet::new();
    let gens = spec.generators();
    for (i, (id_a, a)) in gens.iter().enumerate() {
        for (id_b, b) in gens.iter().skip(i + 1) {
            if multiply(spec, a, b) == multiply(spec, b, a) {
                pairs.insert((*id_a, *id_b));
            }
        }
    }
    pairs
}

/// Generators s such that g has a reduced expression ending in s.
fn right_descents(spec: &GroupSpec, table: &LengthTable, g: &Element) -> Vec<(GeneratorId, Element)> {
    let len = table.length(g).expect("element in table");
    let mut out = Vec::new();
    for (id, s) in spec.generators() {
        let prev = multiply(spec, g, &inverse(spec, s));
        if table.length(&prev) == Some(len.wrapping_sub(1)) && len > 0 {
            out.push((*id, prev));
        }
    }
    out
}

/// The set of all reduced expressions of g, via the descent recursion.
/// Errors with a word cap if the set grows beyond `word_cap`.
pub fn reduced_expressions(
    spec: &GroupSpec,
    g: &Element,
    table: &LengthTable,
    word_cap: usize,
) -> Result<Vec<Word>> {
    let mut memo: HashMap<Element, Vec<Vec<GeneratorId>>> = HashMap::new();
    fn rec(
        spec: &GroupSpec,
        table: &LengthTable,
        g: &Element,
        memo: &mut HashMap<Element, Vec<Vec<GeneratorId>>>,
        cap: usize,
    ) -> Result<Vec<Vec<GeneratorId>>> {
        if let Some(ws) = memo.get(g) {
            return Ok(ws.clone());
        }
        let len = table.length(g).expect("element in table");
        if len == 0 {
            return Ok(vec![Vec::new()]);
        }
        let mut words = Vec::new();
        for (id, prev) in right_descents(spec, table, g) {
            for mut w in rec(spec, table, &prev, memo, cap)? {
                w.push(id);
                words.push(w);
                if words.len() > cap {
                    return Err(Error::WordCapExceeded { cap });
                }
            }
        }
        memo.insert(g.clone(), words.clone());
        Ok(words)
    }
    let mut words = rec(spec, table, g, &mut memo, word_cap)?;
    words.sort();
    Ok(words.into_iter().map(Word).collect())
}

/// Exact number of reduced expressions of g, without materializing them.
pub fn count_reduced_expressions(spec: &GroupSpec, g: &Element, table: &LengthTable) -> BigUint {
    let mut memo: HashMap<Element, BigUint> = HashMap::new();
    count_rec(spec, table, g, &mut memo)
}

fn count_rec(
    spec: &GroupSpec,
    table: &LengthTable,
    g: &Element,
    memo: &mut HashMap<Element, BigUint>,
) -> BigUint {
    if let Some(c) = memo.get(g) {
        return c.clone();
    }
    let len = table.length(g).expect("element in table");
    if len == 0 {
        return BigUint::one();
    }
    let mut total = BigUint::zero();
    for (_, prev) in right_descents(spec, table, g) {
        total += count_rec(spec, table, &prev, memo);
    }
    memo.insert(g.clone(), total.clone());
    total
}

/// Reduced-expression counts for every element at once (one pass up the
/// length buckets). Cheaper than per-element recursion for whole-group
/// scans.
pub fn count_table(spec: &GroupSpec, table: &LengthTable) -> HashMap<Element, BigUint> {
    let mut counts: HashMap<Element, BigUint> = HashMap::new();
    counts.insert(identity(spec), BigUint::one());
    let inverses: Vec<Element> = spec
        .generators()
        .iter()
        .map(|(_, s)| inverse(spec, s))
        .collect();
    for len in 1..=table.max_length() {
        for g in table.elements_of_length(len) {
            let mut total = BigUint::zero();
            for s_inv in &inverses {
                let prev = multiply(spec, g, s_inv);
                if table.length(&prev) == Some(len - 1) {
                    total += counts.get(&prev).expect("lower bucket filled");
                }
            }
            counts.insert(g.clone(), total);
        }
    }
    counts
}

/// One reduced expression of g: repeatedly strip the smallest descent.
pub fn one_reduced_expression(spec: &GroupSpec, g: &Element, table: &LengthTable) -> Word {
    let mut letters = Vec::new();
    let mut cur = g.clone();
    while table.length(&cur) != Some(0) {
        let (id, prev) = right_descents(spec, table, &cur)
            .into_iter()
            .min_by_key(|(id, _)| *id)
            .expect("positive-length element has a descent");
        letters.push(id);
        cur = prev;
    }
    letters.reverse();
    Word(letters)
}

/// Closure of `word` under swaps of adjacent commuting distinct letters.
/// Swapping equal adjacent letters is a no-op and is skipped.
pub fn commutation_class(
    word: &Word,
    pairs: &HashSet<(GeneratorId, GeneratorId)>,
    class_cap: usize,
) -> Result<Vec<Word>> {
    let commutes = |a: GeneratorId, b: GeneratorId| {
        a != b && (pairs.contains(&(a, b)) || pairs.contains(&(b, a)))
    };
    let mut seen: HashSet<Vec<GeneratorId>> = HashSet::new();
    seen.insert(word.0.clone());
    let mut queue = VecDeque::new();
    queue.push_back(word.0.clone());
    while let Some(w) = queue.pop_front() {
        for i in 0..w.len().saturating_sub(1) {
            if commutes(w[i], w[i + 1]) {
                let mut v = w.clone();
                v.swap(i, i + 1);
                if seen.insert(v.clone()) {
                    if seen.len() > class_cap {
                        return Err(Error::ClassCapExceeded { cap: class_cap });
                    }
                    queue.push_back(v);
                }
            }
        }
    }
    let mut words: Vec<Word> = seen.into_iter().map(Word).collect();
    words.sort();
    Ok(words)
}

/// Size of the commutation class of `word`, stopping early once `stop_at`
/// words have been found. Returns `min(class size, stop_at)`.
fn commutation_class_size_capped(
    word: &Word,
    pairs: &HashSet<(GeneratorId, GeneratorId)>,
    stop_at: usize,
) -> usize {
    let commutes = |a: GeneratorId, b: GeneratorId| {
        a != b && (pairs.contains(&(a, b)) || pairs.contains(&(b, a)))
    };
    let mut seen: HashSet<Vec<GeneratorId>> = HashSet::new();
    seen.insert(word.0.clone());
    let mut queue = VecDeque::new();
    queue.push_back(word.0.clone());
    while let Some(w) = queue.pop_front() {
        if seen.len() >= stop_at {
            return stop_at;
        }
        for i in 0..w.len().saturating_sub(1) {
            if commutes(w[i], w[i + 1]) {
                let mut v = w.clone();
                v.swap(i, i + 1);
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
    }
    seen.len().min(stop_at)
}

/// Brute-force decider: g is fully commutative iff the commutation class
/// of one reduced expression exhausts all reduced expressions.
pub fn is_fully_commutative_bruteforce(spec: &GroupSpec, g: &Element, table: &LengthTable) -> bool {
    let count = count_reduced_expressions(spec, g, table);
    is_fc_with_count(spec, g, table, &count, &commuting_pairs(spec))
}

/// Same decision given a precomputed count and commuting-pair set.
pub fn is_fc_with_count(
    spec: &GroupSpec,
    g: &Element,
    table: &LengthTable,
    count: &BigUint,
    pairs: &HashSet<(GeneratorId, GeneratorId)>,
) -> bool {
    if count.is_one() {
        return true;
    }
    // The class of any reduced expression is a subset of all reduced
    // expressions, so its size can only reach `count` when g is f.c.
    let count_usize = match usize::try_from(count) {
        Ok(c) => c,
        Err(_) => return false,
    };
    let word = one_reduced_expression(spec, g, table);
    commutation_class_size_capped(&word, pairs, count_usize) == count_usize
}

/// True iff g has exactly one reduced expression.
pub fn has_unique_reduced_expression(spec: &GroupSpec, g: &Element, table: &LengthTable) -> bool {
    count_reduced_expressions(spec, g, table).is_one()
}

/// The exact set of fully commutative elements, in (length, text) order.
pub fn all_fc_elements(spec: &GroupSpec, element_cap: u128) -> Result<Vec<Element>> {
    let table = build_length_table(spec, element_cap)?;
    let counts = count_table(spec, &table);
    let pairs = commuting_pairs(spec);
    let mut out = Vec::new();
    for g in table.iter_by_length() {
        if is_fc_with_count(spec, g, &table, &counts[g], &pairs) {
            out.push(g.clone());
        }
    }
    Ok(out)
}

// --- on-disk cache -------------------------------------------------------

const CACHE_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    m: u32,
    p: u32,
    n: usize,
    genset: crate::GensetKind,
    /// (formatted element, length) pairs in deterministic order.
    entries: Vec<(String, u32)>,
}

/// Writes the table to a versioned JSON cache file.
pub fn save_length_table(table: &LengthTable, path: &Path) -> Result<()> {
    let (m, p, n, genset) = table.spec_key;
    let entries: Vec<(String, u32)> = table
        .by_length
        .iter()
        .enumerate()
        .flat_map(|(len, elems)| {
            elems
                .iter()
                .map(move |g| (format_element(g), len as u32))
        })
        .collect();
    let file = CacheFile {
        version: CACHE_VERSION,
        m,
        p,
        n,
        genset,
        entries,
    };
    std::fs::write(path, serde_json::to_vec_pretty(&file)?)?;
    Ok(())
}

/// Loads a cached table, verifying the version and the (m,p,n,genset) key.
pub fn load_length_table(spec: &GroupSpec, path: &Path) -> Result<LengthTable> {
    let bytes = std::fs::read(path)?;
    let file: CacheFile = serde_json::from_slice(&bytes)?;
    if file.version != CACHE_VERSION {
        return Err(Error::CacheMismatch(format!(
            "cache version {} != {}",
            file.version, CACHE_VERSION
        )));
    }
    if (file.m, file.p, file.n, file.genset) != spec.identity_spec_key() {
        return Err(Error::CacheMismatch(
            "cache was built for a different group".into(),
        ));
    }
    let mut lengths = HashMap::new();
    let mut by_length: Vec<Vec<Element>> = Vec::new();
    for (text, len) in &file.entries {
        let g = crate::group::parse_element(text, spec)
            .map_err(|e| Error::CacheMismatch(e.to_string()))?;
        if !is_member(spec, &g) {
            return Err(Error::CacheMismatch(format!("{text} is not a member")));
        }
        if by_length.len() <= *len as usize {
            by_length.resize(*len as usize + 1, Vec::new());
        }
        by_length[*len as usize].push(g.clone());
        lengths.insert(g, *len);
    }
    Ok(LengthTable {
        spec_key: spec.identity_spec_key(),
        lengths,
        by_length,
        complete: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_group, parse_element};
    use crate::GensetKind;

    fn table_for(spec: &GroupSpec) -> LengthTable {
        build_length_table(spec, DEFAULT_ELEMENT_CAP).unwrap()
    }

    #[test]
    fn bfs_closure_orders() {
        for (m, p, n, k) in [
            (2, 1, 3, GensetKind::CoxeterB),
            (3, 1, 3, GensetKind::Gm1n),
            (3, 3, 3, GensetKind::Classical),
            (4, 4, 3, GensetKind::Affine),
            (3, 3, 4, GensetKind::Star),
            (1, 1, 4, GensetKind::SymStar),
            (1, 1, 5, GensetKind::SymAdjacent),
        ] {
            let spec = make_group(m, p, n, k).unwrap();
            let table = table_for(&spec);
            assert_eq!(table.len() as u128, spec.order(), "order of G({m},{p},{n})");
        }
    }

    #[test]
    fn b3_longest_element() {
        let spec = make_group(2, 1, 3, GensetKind::CoxeterB).unwrap();
        let table = table_for(&spec);
        assert_eq!(table.max_length(), 9);
        assert_eq!(table.elements_of_length(9).len(), 1);
    }

    #[test]
    fn length_of_generators() {
        let spec = make_group(1, 1, 4, GensetKind::SymStar).unwrap();
        let table = table_for(&spec);
        let s1 = spec.generator(GeneratorId(1)).unwrap();
        assert_eq!(table.length(s1), Some(1));
        assert_eq!(table.length(&identity(&spec)), Some(0));
    }

    #[test]
    fn commuting_pairs_match_presentations() {
        let spec = make_group(3, 1, 4, GensetKind::Gm1n).unwrap();
        let pairs = commuting_pairs(&spec);
        let expect: HashSet<_> = [(0, 2), (0, 3), (1, 3)]
            .into_iter()
            .map(|(a, b)| (GeneratorId(a), GeneratorId(b)))
            .collect();
        assert_eq!(pairs, expect);

        for k in [GensetKind::Classical, GensetKind::Star] {
            let spec = make_group(4, 4, 3, k).unwrap();
            assert!(commuting_pairs(&spec).is_empty());
        }

        // classical G(m,m,4), m>2: s_bar1 braids with s_2 and has order 2m
        // with s_1, so the only commuting pairs are (s_bar1, s_3), (s_1, s_3)
        let spec = make_group(3, 3, 4, GensetKind::Classical).unwrap();
        let expect: HashSet<_> = [(0, 3), (1, 3)]
            .into_iter()
            .map(|(a, b)| (GeneratorId(a), GeneratorId(b)))
            .collect();
        assert_eq!(commuting_pairs(&spec), expect);
    }

    #[test]
    fn reduced_expressions_of_b4_example() {
        // g1 = [(24); (0,0,1,0)] has exactly 4 reduced expressions
        let spec = make_group(2, 1, 4, GensetKind::CoxeterB).unwrap();
        let table = table_for(&spec);
        let g1 = parse_element("1432;(0,0,1,0)", &spec).unwrap();
        let words = reduced_expressions(&spec, &g1, &table, DEFAULT_WORD_CAP).unwrap();
        let expect: Vec<Word> = [
            vec![2, 3, 1, 0, 1, 2],
            vec![2, 1, 3, 0, 1, 2],
            vec![2, 1, 0, 3, 1, 2],
            vec![2, 1, 0, 1, 3, 2],
        ]
        .into_iter()
        .map(|v| Word(v.into_iter().map(GeneratorId).collect()))
        .collect();
        assert_eq!(words.len(), 4);
        for w in &expect {
            assert!(words.contains(w), "missing {w}");
            assert_eq!(&w.evaluate(&spec), &g1);
        }
        assert_eq!(
            count_reduced_expressions(&spec, &g1, &table),
            BigUint::from(4u32)
        );
    }

    #[test]
    fn reduced_expressions_of_identity() {
        let spec = make_group(3, 1, 3, GensetKind::Gm1n).unwrap();
        let table = table_for(&spec);
        let id = identity(&spec);
        assert_eq!(
            reduced_expressions(&spec, &id, &table, 10).unwrap(),
            vec![Word::empty()]
        );
        assert!(has_unique_reduced_expression(&spec, &id, &table));
    }

    #[test]
    fn g313_non_fc_example() {
        // [id; (2,1,0)] has exactly three reduced expressions, and none of
        // them are related by a commutation (only s_0, s_2 commute here)
        let spec = make_group(3, 1, 3, GensetKind::Gm1n).unwrap();
        let table = table_for(&spec);
        let g = parse_element("123;(2,1,0)", &spec).unwrap();
        let words = reduced_expressions(&spec, &g, &table, DEFAULT_WORD_CAP).unwrap();
        let expect: Vec<Word> = [
            vec![1, 0, 1, 0, 0],
            vec![0, 1, 0, 1, 0],
            vec![0, 0, 1, 0, 1],
        ]
            .into_iter()
            .map(|v| Word(v.into_iter().map(GeneratorId).collect()))
            .collect();
        let mut sorted = expect.clone();
        sorted.sort();
        assert_eq!(words, sorted);
        assert!(!is_fully_commutative_bruteforce(&spec, &g, &table));

        let fc = parse_element("321;(1,1,1)", &spec).unwrap();
        assert!(is_fully_commutative_bruteforce(&spec, &fc, &table));
    }

    #[test]
    fn commutation_class_examples() {
        let spec = make_group(2, 1, 4, GensetKind::CoxeterB).unwrap();
        let pairs = commuting_pairs(&spec);
        let seed = Word(vec![2, 3, 1, 0, 1, 2].into_iter().map(GeneratorId).collect());
        let class = commutation_class(&seed, &pairs, 1000).unwrap();
        assert_eq!(class.len(), 4);

        let single = Word(vec![GeneratorId(1)]);
        assert_eq!(commutation_class(&single, &pairs, 10).unwrap(), vec![single]);

        // s_0 s_2 s_1 in G(3,1,3): only s_0 and s_2 commute
        let spec3 = make_group(3, 1, 3, GensetKind::Gm1n).unwrap();
        let pairs3 = commuting_pairs(&spec3);
        let seed = Word(vec![0, 2, 1].into_iter().map(GeneratorId).collect());
        let class = commutation_class(&seed, &pairs3, 10).unwrap();
        let expect: Vec<Word> = [vec![0, 2, 1], vec![2, 0, 1]]
            .into_iter()
            .map(|v| Word(v.into_iter().map(GeneratorId).collect()))
            .collect();
        let mut sorted = expect;
        sorted.sort();
        assert_eq!(class, sorted);
    }

    #[test]
    fn class_cap_is_enforced() {
        let spec = make_group(3, 1, 4, GensetKind::Gm1n).unwrap();
        let pairs = commuting_pairs(&spec);
        let seed = Word(vec![0, 2, 0, 2, 0, 2].into_iter().map(GeneratorId).collect());
        assert!(matches!(
            commutation_class(&seed, &pairs, 2),
            Err(Error::ClassCapExceeded { cap: 2 })
        ));
    }

    #[test]
    fn count_agrees_with_materialization_on_g333() {
        let spec = make_group(3, 3, 3, GensetKind::Classical).unwrap();
        let table = table_for(&spec);
        let counts = count_table(&spec, &table);
        for g in table.iter_by_length() {
            let words = reduced_expressions(&spec, g, &table, DEFAULT_WORD_CAP).unwrap();
            assert_eq!(BigUint::from(words.len()), counts[g], "{g}");
            for w in &words {
                assert_eq!(&w.evaluate(&spec), g);
                assert_eq!(w.len() as u32, table.length(g).unwrap());
            }
        }
    }

    #[test]
    fn unique_expression_iff_fc_in_g443() {
        let spec = make_group(4, 4, 3, GensetKind::Classical).unwrap();
        let table = table_for(&spec);
        for g in table.iter_by_length() {
            assert_eq!(
                has_unique_reduced_expression(&spec, g, &table),
                is_fully_commutative_bruteforce(&spec, g, &table),
                "{g}"
            );
        }
    }

    #[test]
    fn fc_sets_at_rank_two() {
        let spec = make_group(2, 2, 2, GensetKind::Classical).unwrap();
        assert_eq!(all_fc_elements(&spec, 100).unwrap().len(), 4);
        let spec = make_group(5, 5, 2, GensetKind::Classical).unwrap();
        assert_eq!(all_fc_elements(&spec, 100).unwrap().len(), 9);
        let spec = make_group(2, 1, 3, GensetKind::CoxeterB).unwrap();
        assert_eq!(all_fc_elements(&spec, 100).unwrap().len(), 24);
    }

    #[test]
    fn unique_non_fc_element_of_mm2() {
        // every element of G(2,2,2) is f.c.
        let spec = make_group(2, 2, 2, GensetKind::Classical).unwrap();
        let table = table_for(&spec);
        assert!(table
            .iter_by_length()
            .all(|g| is_fully_commutative_bruteforce(&spec, g, &table)));

        // for m > 2: [id;(d,d)] for m = 2d, [(12);(d, m-d)] for m = 2d+1
        for m in 3..=7u32 {
            let spec = make_group(m, m, 2, GensetKind::Classical).unwrap();
            let table = table_for(&spec);
            let non_fc: Vec<Element> = table
                .iter_by_length()
                .filter(|g| !is_fully_commutative_bruteforce(&spec, g, &table))
                .cloned()
                .collect();
            assert_eq!(non_fc.len(), 1, "m={m}");
            let d = m / 2;
            let expect = if m % 2 == 0 {
                Element {
                    perm: vec![0, 1],
                    weights: vec![d, d],
                }
            } else {
                Element {
                    perm: vec![1, 0],
                    weights: vec![d, m - d],
                }
            };
            assert_eq!(non_fc[0], expect, "m={m}");
        }
    }

    #[test]
    fn star_fc_elements_are_cycles_moving_one() {
        // at length t > 0 the f.c. elements are the (t+1)-cycles through 1
        for n in 3..=5usize {
            let spec = make_group(1, 1, n, GensetKind::SymStar).unwrap();
            let table = table_for(&spec);
            for g in table.iter_by_length() {
                let t = table.length(g).unwrap() as usize;
                let fc = is_fully_commutative_bruteforce(&spec, g, &table);
                if t == 0 {
                    assert!(fc);
                    continue;
                }
                // cycle containing position 0, in cycle notation
                let mut cycle_len = 0usize;
                let mut j = 0usize;
                loop {
                    cycle_len += 1;
                    j = g.perm[j];
                    if j == 0 {
                        break;
                    }
                }
                let moved = g.perm.iter().enumerate().filter(|(i, &r)| *i != r).count();
                let is_cycle_through_one = moved == cycle_len && cycle_len == t + 1;
                assert_eq!(fc, is_cycle_through_one, "n={n} g={g}");
            }
        }
    }

    #[test]
    fn cache_round_trip_is_identical() {
        let spec = make_group(3, 1, 3, GensetKind::Gm1n).unwrap();
        let table = table_for(&spec);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("g313.json");
        save_length_table(&table, &path).unwrap();
        let loaded = load_length_table(&spec, &path).unwrap();
        assert_eq!(loaded.len(), table.len());
        for len in 0..=table.max_length() {
            assert_eq!(
                loaded.elements_of_length(len),
                table.elements_of_length(len)
            );
        }
        // wrong spec is rejected
        let other = make_group(4, 1, 3, GensetKind::Gm1n).unwrap();
        assert!(load_length_table(&other, &path).is_err());
    }

    #[test]
    fn group_cap_is_enforced() {
        let spec = make_group(3, 1, 3, GensetKind::Gm1n).unwrap();
        assert!(matches!(
            build_length_table(&spec, 100),
            Err(Error::GroupCapExceeded { order: 162, .. })
        ));
    }
}
