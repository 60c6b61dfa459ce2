//! Closed forms checked against independent brute-force computations.

use std::collections::BTreeMap;

use proptest::prelude::*;
use vample::{
    divisor_degree, sym_degree, sym_power_split, sym_rank, tensor_f, Bundle, NumClass, SplitDegrees,
};

/// Polynomials in `T` and `f`, keyed by `(i, j)` for `T^i f^j`, never reduced
/// until asked.
type Poly = BTreeMap<(usize, usize), i64>;

fn poly_mul(x: &Poly, y: &Poly) -> Poly {
    let mut out = Poly::new();
    for (&(i, j), &c) in x {
        for (&(k, l), &e) in y {
            *out.entry((i + k, j + l)).or_default() += c * e;
        }
    }
    out
}

/// Applies `f² = 0`, `T^r = d T^{r-1} f` once everything is expanded.
fn reduce(p: &Poly, r: usize, d: i64) -> Poly {
    let mut out = Poly::new();
    for (&(i, j), &c) in p {
        let (i, j, c) = match (i, j) {
            (_, j) if j >= 2 => continue,
            (i, j) if i < r => (i, j, c),
            (i, 0) if i == r => (r - 1, 1, c * d),
            _ => continue,
        };
        *out.entry((i, j)).or_default() += c;
    }
    out.retain(|_, c| *c != 0);
    out
}

fn as_poly(class: &NumClass) -> Poly {
    let (r, _) = class.context();
    let mut out = Poly::new();
    for i in 0..r as usize {
        for j in 0..2 {
            let c = class.coeff(i, j);
            if c != 0 {
                out.insert((i, j), c);
            }
        }
    }
    out
}

fn class_from(r: i64, d: i64, coeffs: &[(i64, i64)]) -> NumClass {
    let mut out = NumClass::zero(r, d).unwrap();
    for (i, &(c0, c1)) in coeffs.iter().enumerate().take(r as usize) {
        out = out
            .add(&NumClass::monomial(r, d, c0, i as u32, 0).unwrap())
            .unwrap()
            .add(&NumClass::monomial(r, d, c1, i as u32, 1).unwrap())
            .unwrap();
    }
    out
}

fn split_bundles(r: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                let lo = v.last().copied().unwrap_or(-bound);
                (lo..=bound).map(move |d| {
                    let mut w = v.clone();
                    w.push(d);
                    w
                })
            })
            .collect();
    }
    out
}

#[test]
fn symmetric_power_totals_match_split_expansion() {
    for r in 1..=4 {
        for degrees in split_bundles(r, 4) {
            let split = SplitDegrees::new(degrees.clone()).unwrap();
            for a in 1..=5 {
                let power = sym_power_split(&split, a as u32).unwrap();
                let d: i64 = degrees.iter().sum();
                assert_eq!(
                    power.rank(),
                    sym_rank(r as i64, a).unwrap(),
                    "{degrees:?} a={a}"
                );
                assert_eq!(
                    power.degree(),
                    sym_degree(r as i64, d, a).unwrap(),
                    "{degrees:?} a={a}"
                );
                assert_eq!(power.min(), a * degrees[0]);
            }
        }
    }
}

#[test]
fn divisor_degree_matches_expanded_power() {
    for r in 1..=6i64 {
        for d in -3..=3 {
            let e = Bundle::from_pairs(&[(r, d)]).unwrap();
            for a in -5..=5 {
                for b in -5..=5 {
                    let mut base = Poly::new();
                    base.insert((1, 0), a);
                    base.insert((0, 1), b);
                    let mut expanded = Poly::from([((0, 0), 1)]);
                    for _ in 0..r {
                        expanded = poly_mul(&expanded, &base);
                    }
                    let brute = reduce(&expanded, r as usize, d)
                        .get(&(r as usize - 1, 1))
                        .copied()
                        .unwrap_or(0);
                    let ring = NumClass::divisor(r, d, a, b)
                        .unwrap()
                        .pow(r as u32)
                        .degree();
                    let closed = divisor_degree(&e, a, b).unwrap();
                    assert_eq!((closed, ring), (brute, brute), "r={r} d={d} a={a} b={b}");
                }
            }
        }
    }
}

#[test]
fn rank_two_and_three_products() {
    // (aT + bf)(T - hf) = ag + b on P(O(g) ⊕ O(h))
    for (g, h) in [(0, 0), (1, 3), (-2, 5), (4, -1)] {
        for (a, b) in [(1, 0), (2, -1), (3, 4)] {
            let d = g + h;
            let line = NumClass::divisor(2, d, a, b).unwrap();
            let curve = class_from(2, d, &[(0, -h), (1, 0)]);
            assert_eq!(line.multiply(&curve).unwrap().degree(), a * g + b);
        }
    }
    // T · (T² - gTf) has degree deg E - g on the rank-3 scroll
    let (h, g) = (2, 3);
    let z = class_from(3, h + g, &[(0, 0), (0, -g), (1, 0)]);
    let t = NumClass::monomial(3, h + g, 1, 1, 0).unwrap();
    assert_eq!(t.multiply(&z).unwrap().degree(), h);
}

#[test]
fn atiyah_tensor_conservation() {
    for r in 1..=12u32 {
        for s in 1..=12u32 {
            let orders = tensor_f(r, s).unwrap();
            assert_eq!(orders.iter().sum::<u32>(), r * s, "rank of F_{r} x F_{s}");
            assert_eq!(orders.len() as u32, r.min(s));
            assert!(orders.iter().all(|k| k % 2 == (r + s + 1) % 2));
            assert!(orders.windows(2).all(|w| w[1] == w[0] + 2));
            assert_eq!(*orders.last().unwrap(), r + s - 1);
            assert_eq!(orders, tensor_f(s, r).unwrap());
        }
    }
}

fn class_strategy(r: i64) -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-6i64..=6, -6i64..=6), r as usize)
}

proptest! {
    #[test]
    fn ring_product_matches_late_reduction(
        (r, d, x, y, z) in (1i64..=6, -4i64..=4).prop_flat_map(|(r, d)| {
            (Just(r), Just(d), class_strategy(r), class_strategy(r), class_strategy(r))
        })
    ) {
        let (cx, cy, cz) = (class_from(r, d, &x), class_from(r, d, &y), class_from(r, d, &z));
        let brute = reduce(&poly_mul(&as_poly(&cx), &as_poly(&cy)), r as usize, d);
        let product = cx.multiply(&cy).unwrap();
        prop_assert_eq!(as_poly(&product), brute);
        prop_assert_eq!(&product, &cy.multiply(&cx).unwrap());
        let left = product.multiply(&cz).unwrap();
        let right = cx.multiply(&cy.multiply(&cz).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        let triple = reduce(&poly_mul(&poly_mul(&as_poly(&cx), &as_poly(&cy)), &as_poly(&cz)), r as usize, d);
        prop_assert_eq!(as_poly(&left), triple);
    }
}
