//! The differential operators and monomial products, checked against explicit polynomials in
//! `N` variables (degree ≤ 4, `N ≤ 4`). `D₁` has denominators `x_i − x_j`; the oracle clears
//! them by multiplying both sides with the Vandermonde product.

use std::collections::BTreeMap;

use jackcum::algebra::Q;
use jackcum::partition::{partitions_of, Partition};
use jackcum::symfunc::{apply_d1, apply_d12, apply_d2, m_product, mixed_pairing, Basis, SymFunc};
use num_traits::{One, Zero};

/// Sparse polynomial: exponent vector → coefficient.
#[derive(Clone, Debug, PartialEq, Default)]
struct Poly(BTreeMap<Vec<u32>, Q>);

impl Poly {
    fn add_term(&mut self, e: Vec<u32>, c: Q) {
        let slot = self.0.entry(e.clone()).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.0.remove(&e);
        }
    }

    fn add(&self, o: &Poly) -> Poly {
        let mut r = self.clone();
        for (e, c) in &o.0 {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    fn scale(&self, k: &Q) -> Poly {
        let mut r = Poly::default();
        for (e, c) in &self.0 {
            r.add_term(e.clone(), c * k);
        }
        r
    }

    fn mul(&self, o: &Poly) -> Poly {
        let mut r = Poly::default();
        for (e1, c1) in &self.0 {
            for (e2, c2) in &o.0 {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, c1 * c2);
            }
        }
        r
    }

    /// `x_i^s ∂_i^d`.
    fn x_pow_d(&self, i: usize, s: u32, d: u32) -> Poly {
        let mut r = Poly::default();
        for (e, c) in &self.0 {
            if e[i] < d {
                continue;
            }
            let falling: i64 = (0..d).map(|k| i64::from(e[i] - k)).product();
            let mut e2 = e.clone();
            e2[i] = e[i] - d + s;
            r.add_term(e2, c * Q::from_integer(falling.into()));
        }
        r
    }

    fn var(n: usize, i: usize) -> Poly {
        let mut e = vec![0; n];
        e[i] = 1;
        let mut p = Poly::default();
        p.add_term(e, Q::one());
        p
    }

    fn one(n: usize) -> Poly {
        let mut p = Poly::default();
        p.add_term(vec![0; n], Q::one());
        p
    }
}

/// All distinct rearrangements of `λ` padded to length `n`, as exponent vectors.
fn monomial(lambda: &Partition, n: usize) -> Poly {
    let mut p = Poly::default();
    if lambda.len() > n {
        return p;
    }
    let mut e: Vec<u32> = lambda.parts().to_vec();
    e.resize(n, 0);
    e.sort();
    loop {
        p.add_term(e.clone(), Q::one());
        // next lexicographic permutation
        let Some(i) = (0..e.len().saturating_sub(1))
            .rev()
            .find(|&i| e[i] < e[i + 1])
        else {
            break;
        };
        let j = (i + 1..e.len())
            .rev()
            .find(|&j| e[j] > e[i])
            .expect("successor exists");
        e.swap(i, j);
        e[i + 1..].reverse();
    }
    p
}

/// Expands an α-free symmetric function in `n` variables.
fn expand(f: &SymFunc, n: usize) -> Poly {
    let f = f.to_basis(Basis::Monomial).unwrap();
    let mut p = Poly::default();
    for (mu, c) in f.terms() {
        let c = c.eval(&Q::zero()).unwrap();
        p = p.add(&monomial(mu, n).scale(&c));
    }
    p
}

fn vandermonde(n: usize) -> Poly {
    let mut v = Poly::one(n);
    for i in 0..n {
        for j in i + 1..n {
            v = v.mul(&Poly::var(n, i).add(&Poly::var(n, j).scale(&-Q::one())));
        }
    }
    v
}

/// `V / (x_i − x_j)` as a polynomial (sign included for `i > j`).
fn vandermonde_without(n: usize, i: usize, j: usize) -> Poly {
    let (a, b, sign) = if i < j {
        (i, j, Q::one())
    } else {
        (j, i, -Q::one())
    };
    let mut v = Poly::one(n);
    for p in 0..n {
        for q in p + 1..n {
            if (p, q) != (a, b) {
                v = v.mul(&Poly::var(n, p).add(&Poly::var(n, q).scale(&-Q::one())));
            }
        }
    }
    v.scale(&sign)
}

fn euler(f: &Poly, m: usize) -> Poly {
    f.x_pow_d(m, 1, 1)
}

fn small_cases() -> Vec<(Partition, usize)> {
    let mut out = Vec::new();
    for d in 1..=4 {
        for mu in partitions_of(d).unwrap() {
            for n in d as usize..=4 {
                out.push((mu.clone(), n));
            }
        }
    }
    out
}

#[test]
fn d1_times_vandermonde() {
    for (mu, n) in small_cases() {
        let f = expand(&SymFunc::m(mu.clone()), n);
        let mut cleared = Poly::default();
        for i in 0..n {
            let di = f.x_pow_d(i, 2, 1);
            for j in (0..n).filter(|&j| j != i) {
                cleared = cleared.add(&di.mul(&vandermonde_without(n, i, j)));
            }
        }
        let ours = expand(&apply_d1(&SymFunc::m(mu.clone()), Some(n)).unwrap(), n);
        assert_eq!(
            ours.mul(&vandermonde(n)),
            cleared,
            "D1 m[{mu}] in {n} variables"
        );
    }
}

#[test]
fn d2_is_half_second_euler_part() {
    let half = Q::new(1.into(), 2.into());
    for (mu, n) in small_cases() {
        let f = expand(&SymFunc::m(mu.clone()), n);
        let expected = (0..n).fold(Poly::default(), |acc, i| {
            acc.add(&f.x_pow_d(i, 2, 2).scale(&half))
        });
        let ours = expand(&apply_d2(&SymFunc::m(mu.clone()), Some(n)).unwrap(), n);
        assert_eq!(ours, expected, "D2 m[{mu}] in {n} variables");
    }
}

#[test]
fn mixed_pairing_and_d12() {
    let small: Vec<Partition> = (1..=2).flat_map(|d| partitions_of(d).unwrap()).collect();
    for a in &small {
        for b in &small {
            let deg = (a.size() + b.size()) as usize;
            for n in deg..=4 {
                let (fa, fb) = (
                    expand(&SymFunc::m(a.clone()), n),
                    expand(&SymFunc::m(b.clone()), n),
                );
                let expected = (0..n).fold(Poly::default(), |acc, m| {
                    acc.add(&euler(&fa, m).mul(&euler(&fb, m)))
                });
                let ours =
                    mixed_pairing(&SymFunc::m(a.clone()), &SymFunc::m(b.clone()), Some(n)).unwrap();
                assert_eq!(
                    expand(&ours, n),
                    expected,
                    "B(m[{a}], m[{b}]) in {n} variables"
                );
                let d12 =
                    apply_d12(&[SymFunc::m(a.clone()), SymFunc::m(b.clone())], Some(n)).unwrap();
                assert_eq!(expand(&d12, n), expected);
            }
        }
    }
    // Three factors: D12(f, g, h) = B(f, g) h + B(f, h) g + B(g, h) f.
    let fs = [
        SymFunc::m(Partition::new(vec![1])),
        SymFunc::p(Partition::new(vec![2])),
        SymFunc::m(Partition::new(vec![1])),
    ];
    let n = 4;
    let e: Vec<Poly> = fs.iter().map(|f| expand(f, n)).collect();
    let b = |x: &Poly, y: &Poly| {
        (0..n).fold(Poly::default(), |acc, m| {
            acc.add(&euler(x, m).mul(&euler(y, m)))
        })
    };
    let expected = b(&e[0], &e[1])
        .mul(&e[2])
        .add(&b(&e[0], &e[2]).mul(&e[1]))
        .add(&b(&e[1], &e[2]).mul(&e[0]));
    assert_eq!(expand(&apply_d12(&fs, Some(n)).unwrap(), n), expected);
}

#[test]
fn monomial_products() {
    let small: Vec<Partition> = (0..=2).flat_map(|d| partitions_of(d).unwrap()).collect();
    for a in &small {
        for b in &small {
            let n = 4;
            let expected = monomial(a, n).mul(&monomial(b, n));
            let mut ours = Poly::default();
            for (kappa, c) in m_product(a, b).iter() {
                ours = ours.add(&monomial(kappa, n).scale(&Q::from_integer((*c).into())));
            }
            assert_eq!(ours, expected, "m[{a}] m[{b}]");
        }
    }
}

#[test]
fn leibniz_rule_for_d2() {
    // D2(fg) = D2(f) g + f D2(g) + D12(f, g), checked inside the library's own representation.
    let f = SymFunc::p(Partition::new(vec![2, 1]));
    let g = SymFunc::e(Partition::new(vec![2]));
    let n = 5;
    let lhs = apply_d2(&f.mul(&g).unwrap(), Some(n)).unwrap();
    let rhs = apply_d2(&f, Some(n))
        .unwrap()
        .mul(&g)
        .unwrap()
        .add(&f.mul(&apply_d2(&g, Some(n)).unwrap()).unwrap())
        .unwrap()
        .add(&apply_d12(&[f.clone(), g.clone()], Some(n)).unwrap())
        .unwrap();
    assert_eq!(
        lhs.to_basis(Basis::Monomial).unwrap(),
        rhs.to_basis(Basis::Monomial).unwrap()
    );
}
