//! Randomized invariants: group axioms checked against an independent
//! symbolic monomial-matrix oracle, and parse/format round trips.

use proptest::prelude::*;

use fc_core::group::{
    format_element, identity, inverse, make_group, multiply, parse_element, Element, GensetKind,
    GroupSpec,
};

/// Independent oracle: n x n matrices over formal monomials x^w (w mod m)
/// or zero, multiplied entry by entry.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Matrix {
    n: usize,
    m: u32,
    /// entries[r][c] = Some(weight) for a nonzero entry, None for zero
    entries: Vec<Vec<Option<u32>>>,
}

impl Matrix {
    fn from_element(g: &Element, m: u32) -> Matrix {
        let n = g.perm.len();
        let mut entries = vec![vec![None; n]; n];
        for (col, (&row, &w)) in g.perm.iter().zip(&g.weights).enumerate() {
            entries[row][col] = Some(w);
        }
        Matrix { n, m, entries }
    }

    fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut entries = vec![vec![None; n]; n];
        for r in 0..n {
            for c in 0..n {
                for k in 0..n {
                    if let (Some(a), Some(b)) = (self.entries[r][k], other.entries[k][c]) {
                        assert!(entries[r][c].is_none(), "monomial matrices never collide");
                        entries[r][c] = Some((a + b) % self.m);
                    }
                }
            }
        }
        Matrix {
            n,
            m: self.m,
            entries,
        }
    }
}

fn specs() -> Vec<GroupSpec> {
    vec![
        make_group(2, 1, 4, GensetKind::CoxeterB).unwrap(),
        make_group(5, 1, 3, GensetKind::Gm1n).unwrap(),
        make_group(3, 3, 4, GensetKind::Classical).unwrap(),
        make_group(4, 4, 3, GensetKind::Star).unwrap(),
        make_group(1, 1, 5, GensetKind::SymAdjacent).unwrap(),
    ]
}

fn arb_element(spec: &GroupSpec) -> impl Strategy<Value = Element> {
    let n = spec.n;
    let m = spec.m;
    let p = spec.p;
    let perm: Vec<usize> = (0..n).collect();
    (Just(perm).prop_shuffle(), proptest::collection::vec(0..m, n)).prop_map(
        move |(perm, mut weights)| {
            // fix the last weight so the weight sum is divisible by p;
            // m % p == 0, so reducing mod m preserves the residue mod p
            let r = weights.iter().sum::<u32>() % p;
            weights[n - 1] = (weights[n - 1] + (p - r)) % m;
            Element { perm, weights }
        },
    )
}

fn spec_and_elements(k: usize) -> impl Strategy<Value = (GroupSpec, Vec<Element>)> {
    (0usize..specs().len()).prop_flat_map(move |idx| {
        let spec = specs()[idx].clone();
        let elems = proptest::collection::vec(arb_element(&spec), k);
        (Just(spec), elems)
    })
}

proptest! {
    #[test]
    fn multiply_matches_matrix_product((spec, gs) in spec_and_elements(2)) {
        let (g, h) = (&gs[0], &gs[1]);
        let gh = multiply(&spec, g, h);
        let oracle = Matrix::from_element(g, spec.m).matmul(&Matrix::from_element(h, spec.m));
        prop_assert_eq!(Matrix::from_element(&gh, spec.m), oracle);
    }

    #[test]
    fn group_axioms((spec, gs) in spec_and_elements(3)) {
        let (g, h, k) = (&gs[0], &gs[1], &gs[2]);
        let e = identity(&spec);
        prop_assert_eq!(&multiply(&spec, g, &e), g);
        prop_assert_eq!(&multiply(&spec, &e, g), g);
        prop_assert_eq!(multiply(&spec, g, &inverse(&spec, g)), e.clone());
        prop_assert_eq!(multiply(&spec, &inverse(&spec, g), g), e);
        let gh_k = multiply(&spec, &multiply(&spec, g, h), k);
        let g_hk = multiply(&spec, g, &multiply(&spec, h, k));
        prop_assert_eq!(gh_k, g_hk);
    }

    #[test]
    fn parse_format_round_trip((spec, gs) in spec_and_elements(1)) {
        let g = &gs[0];
        let text = format_element(g);
        let back = parse_element(&text, &spec).unwrap();
        prop_assert_eq!(&back, g);
    }

    #[test]
    fn inverse_matches_matrix_transpose_conjugate((spec, gs) in spec_and_elements(1)) {
        // for a monomial matrix, the inverse is the conjugate transpose:
        // entry x^w at (r,c) becomes x^(m-w) at (c,r)
        let g = &gs[0];
        let inv = inverse(&spec, g);
        let mg = Matrix::from_element(g, spec.m);
        let mut expect = vec![vec![None; spec.n]; spec.n];
        for r in 0..spec.n {
            for c in 0..spec.n {
                if let Some(w) = mg.entries[r][c] {
                    expect[c][r] = Some((spec.m - w) % spec.m);
                }
            }
        }
        prop_assert_eq!(
            Matrix::from_element(&inv, spec.m),
            Matrix { n: spec.n, m: spec.m, entries: expect }
        );
    }
}
