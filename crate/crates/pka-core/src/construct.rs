//! Concrete algebra constructions: the two-element Boolean Kleene algebra,
//! the maximally undefined extension of a commutative monoid, and the
//! single-top totalization of a partial algebra.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::algebra::FinitePka;
use crate::error::Error;

/// A finite commutative monoid, validated at construction.
#[derive(Clone, Debug)]
pub struct FiniteMonoid {
    labels: Vec<String>,
    /// Row-major total operation table.
    op: Vec<usize>,
    identity: usize,
}

impl FiniteMonoid {
    pub fn new(labels: Vec<String>, identity: usize, op: Vec<usize>) -> Result<FiniteMonoid, Error> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Malformed("monoid carrier is empty".into()));
        }
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() || l.chars().any(|c| c.is_whitespace()) || labels[..i].contains(l) {
                return Err(Error::Malformed(format!("bad or duplicate monoid label {l:?}")));
            }
        }
        if identity >= n || op.len() != n * n || op.iter().any(|&v| v >= n) {
            return Err(Error::Malformed("monoid table has the wrong shape".into()));
        }
        let at = |x: usize, y: usize| op[x * n + y];
        for x in 0..n {
            if at(identity, x) != x || at(x, identity) != x {
                return Err(Error::Malformed(format!("identity law fails at {}", labels[x])));
            }
            for y in 0..n {
                if at(x, y) != at(y, x) {
                    return Err(Error::Malformed(format!(
                        "commutativity fails at {}, {}",
                        labels[x], labels[y]
                    )));
                }
                for z in 0..n {
                    if at(at(x, y), z) != at(x, at(y, z)) {
                        return Err(Error::Malformed(format!(
                            "associativity fails at {}, {}, {}",
                            labels[x], labels[y], labels[z]
                        )));
                    }
                }
            }
        }
        Ok(FiniteMonoid { labels, op, identity })
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn op(&self, x: usize, y: usize) -> usize {
        self.op[x * self.n() + y]
    }
}

/// The cyclic group of order `n` as a monoid, with labels `1, g, g2, …`.
pub fn zn_monoid(n: usize) -> FiniteMonoid {
    assert!(n >= 1);
    let labels: Vec<String> = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g{i}"),
        })
        .collect();
    let mut op = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            op.push((x + y) % n);
        }
    }
    FiniteMonoid::new(labels, 0, op).expect("cyclic monoid is valid")
}

/// The two-element Boolean Kleene algebra.
pub fn boolean() -> FinitePka {
    FinitePka::new(
        "bool",
        alloc::vec!["0".to_string(), "1".to_string()],
        0,
        1,
        [],
        alloc::vec![0, 0, 0, 1],
        alloc::vec![1, 1],
    )
    .expect("boolean tables are valid")
}

type ExtTables = (Vec<String>, usize, usize, Vec<((usize, usize), usize)>, Vec<usize>);

fn extension_tables(m: &FiniteMonoid) -> Result<ExtTables, Error> {
    // Carrier layout: 0, then the monoid elements, then ⋆.
    let nm = m.n();
    let n = nm + 2;
    let mut labels = Vec::with_capacity(n);
    labels.push("0".to_string());
    labels.extend(m.labels().iter().cloned());
    labels.push("⋆".to_string());
    for l in m.labels() {
        if l == "0" || l == "⋆" {
            return Err(Error::Malformed(format!("monoid label {l:?} clashes with 0/⋆")));
        }
    }
    let zero = 0;
    let one = 1 + m.identity();
    let top = n - 1;

    // a + ⋆ = ⋆ for every a; everything else is forced by the mandatory
    // entries x+0 = x and x+x = x.
    let adds: Vec<((usize, usize), usize)> = (0..n).map(|a| ((a, top), top)).collect();

    let mut mul = alloc::vec![0usize; n * n];
    for x in 0..n {
        for y in 0..n {
            mul[x * n + y] = if x == zero || y == zero {
                zero
            } else if x == top || y == top {
                top
            } else {
                1 + m.op(x - 1, y - 1)
            };
        }
    }
    (labels, zero, one, adds, mul)
}

/// Turns a commutative monoid into a partially additive Kleene algebra with a
/// maximally undefined sum: the carrier gains fresh elements `0` and `⋆`,
/// `a+b` is defined only when one side is `0`, `⋆`, or equal to the other,
/// and the star maps `0` and `1` to `1` and everything else to `⋆`.
pub fn monoid_extension(m: &FiniteMonoid) -> Result<FinitePka, Error> {
    apply_ext(extension_tables(m)?, format!("ext-{}", m.n()), |x, zero, one, top| {
        if x == zero || x == one {
            one
        } else {
            top
        }
    })
}

/// The same extension with the uncorrected star table `0* = 0` and `b* = ⋆`
/// for every `b ≠ 0`. These tables fail axiom (12) at `x = 0` and axiom (15)
/// at `a = x = 1`; they exist as a negative control for the checker.
pub fn monoid_extension_literal(m: &FiniteMonoid) -> Result<FinitePka, Error> {
    apply_ext(extension_tables(m)?, format!("ext-literal-{}", m.n()), |x, zero, _one, top| {
        if x == zero {
            zero
        } else {
            top
        }
    })
}

/// Totalizes a partial algebra by adjoining a single top element: every
/// undefined sum becomes the new top, `a+⊤ = ⊤`, `0·⊤ = ⊤·0 = 0`,
/// `a·⊤ = ⊤·a = ⊤` for `a ≠ 0`, and `⊤* = ⊤`.
pub fn adjoin_top(k: &FinitePka) -> Result<FinitePka, Error> {
    let nk = k.n();
    let n = nk + 1;
    let mut top_label = "⊤".to_string();
    let mut suffix = 0;
    while k.labels().contains(&top_label) {
        suffix += 1;
        top_label = format!("⊤{suffix}");
    }
    let mut labels: Vec<String> = k.labels().to_vec();
    labels.push(top_label);
    let top = nk;

    let mut adds: Vec<((usize, usize), usize)> = k.add_pairs().collect();
    for x in 0..nk {
        for y in x..nk {
            if !k.summable(x, y) {
                adds.push(((x, y), top));
            }
        }
        adds.push(((x, top), top));
    }

    let mut mul = alloc::vec![0usize; n * n];
    for x in 0..nk {
        for y in 0..nk {
            mul[x * n + y] = k.mul(x, y);
        }
    }
    for a in 0..n {
        let v = if a == k.zero() { k.zero() } else { top };
        mul[a * n + top] = v;
        mul[top * n + a] = v;
    }

    let mut star: Vec<usize> = (0..nk).map(|x| k.star(x)).collect();
    star.push(top);

    FinitePka::new(format!("{}+top", k.name()), labels, k.zero(), k.one(), adds, mul, star)
}

fn apply_ext(tables: ExtTables, name: String, star_of: impl Fn(usize, usize, usize, usize) -> usize) -> Result<FinitePka, Error> {
    let (labels, zero, one, adds, mul) = tables;
    let n = labels.len();
    let star: Vec<usize> = (0..n).map(|x| star_of(x, zero, one, n - 1)).collect();
    FinitePka::new(name, labels, zero, one, adds, mul, star)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::VerifyOptions;
    use crate::hom;

    fn opts() -> VerifyOptions {
        VerifyOptions::default()
    }

    #[test]
    fn trivial_extension_is_pka() {
        let k = monoid_extension(&zn_monoid(1)).unwrap();
        assert_eq!(k.n(), 3);
        assert!(k.verify_pka(opts()).pass());
        assert!(k.verify_star_continuity(opts()).pass());
    }

    #[test]
    fn extensions_up_to_six_pass_both_verifiers() {
        for sz in 1..=6 {
            let k = monoid_extension(&zn_monoid(sz)).unwrap();
            assert!(k.verify_pka(opts()).pass(), "size {sz}");
            assert!(k.verify_star_continuity(opts()).pass(), "size {sz}");
        }
    }

    #[test]
    fn z2_extension_tables() {
        let k = monoid_extension(&zn_monoid(2)).unwrap();
        assert_eq!(k.n(), 4);
        let (g, top) = (k.element("g").unwrap(), k.element("⋆").unwrap());
        assert!(!k.summable(g, k.one()));
        assert_eq!(k.add_opt(g, top), Some(top));
        assert_eq!(k.star(g), top);
        assert_eq!(k.mul(top, k.zero()), k.zero());
        assert_eq!(k.mul(g, g), k.one());
    }

    #[test]
    fn adjoin_top_boolean() {
        let b = boolean();
        let t = adjoin_top(&b).unwrap();
        assert_eq!(t.n(), 3);
        assert!(t.verify_total_ka(opts()).pass());
        assert!(t.verify_star_continuity(opts()).pass());
        // inclusion is a homomorphism
        let incl: Vec<usize> = (0..b.n()).collect();
        assert!(hom::is_pka_homomorphism(&b, &t, &incl).pass());
    }

    #[test]
    fn adjoin_top_z2_extension() {
        let k = monoid_extension(&zn_monoid(2)).unwrap();
        let t = adjoin_top(&k).unwrap();
        assert!(t.verify_total_ka(opts()).pass());
        let g = t.element("g").unwrap();
        let top = t.n() - 1;
        assert_eq!(t.add_opt(g, t.one()), Some(top));
        for x in 0..t.n() {
            assert_eq!(t.add_opt(top, x), Some(top));
        }
        // restriction agrees with the host on summable pairs
        for x in 0..k.n() {
            for y in 0..k.n() {
                if let Some(s) = k.add_opt(x, y) {
                    assert_eq!(t.add_opt(x, y), Some(s));
                }
                assert_eq!(t.mul(x, y), k.mul(x, y));
            }
            assert_eq!(t.star(x), k.star(x));
        }
    }

    #[test]
    fn monoid_validation() {
        // non-commutative table rejected
        let err = FiniteMonoid::new(
            alloc::vec!["1".to_string(), "a".to_string()],
            0,
            alloc::vec![0, 1, 0, 1],
        )
        .unwrap_err();
        assert!(matches!(err, Error::Malformed(_)));
    }
}
