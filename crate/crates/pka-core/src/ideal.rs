//! Star-ideals and their arithmetic.
//!
//! A star-ideal of a finite algebra is a nonempty subset closed under
//! defined sums, closed downward under the natural order, and closed under
//! the ω-rule: if `a·bⁿ·c` lies in the set for every distinct power of `b`,
//! so does `a·b*·c`. The generated ideal `⟨A⟩` is the fixpoint of the
//! one-step operator [`tau_step`]; on a finite carrier the fixpoint is
//! reached after finitely many steps.
//!
//! Ideals are represented canonically by their closed subset, so equality of
//! ideals is equality of [`Subset`] masks and the generator-independence of
//! the induced arithmetic is a checkable property rather than a
//! representation hazard.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::algebra::FinitePka;
use crate::error::Error;
use crate::semiring::FinitePs;
use crate::subset::Subset;

/// Default bound on carrier sizes for ideal enumeration.
pub const DEFAULT_ENUM_BOUND: usize = 8;

/// Cached per-algebra data for repeated closure computations.
pub struct Closer<'a> {
    k: &'a FinitePka,
    down: Vec<Subset>,
    pows: Vec<Vec<usize>>,
}

impl<'a> Closer<'a> {
    pub fn new(k: &'a FinitePka) -> Closer<'a> {
        let n = k.n();
        Closer {
            k,
            down: (0..n).map(|x| k.down_set(x)).collect(),
            pows: (0..n).map(|b| k.powers(b).list).collect(),
        }
    }

    /// One closure step: defined pairwise sums, the down-set, and the
    /// ω-rule images.
    pub fn tau_step(&self, a: Subset) -> Subset {
        let k = self.k;
        let n = k.n();
        let mut out = a;
        for x in a.iter() {
            out = out | self.down[x];
            for y in a.iter() {
                if y < x {
                    continue;
                }
                if let Some(s) = k.add_opt(x, y) {
                    out.insert(s);
                }
            }
        }
        for b in 0..n {
            let pows = &self.pows[b];
            let sb = k.star(b);
            for x in 0..n {
                for z in 0..n {
                    if pows.iter().all(|&p| a.contains(k.mul(k.mul(x, p), z))) {
                        out.insert(k.mul(k.mul(x, sb), z));
                    }
                }
            }
        }
        out
    }

    /// The star-ideal generated by `a`; the empty set generates `⟨0⟩`.
    pub fn close(&self, a: Subset) -> Subset {
        let mut cur = if a.is_empty() { Subset::singleton(self.k.zero()) } else { a };
        loop {
            let next = self.tau_step(cur);
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    pub fn principal(&self, x: usize) -> Subset {
        self.down[x]
    }
}

/// One application of the closure operator `τ`.
pub fn tau_step(k: &FinitePka, a: Subset) -> Subset {
    Closer::new(k).tau_step(a)
}

/// The star-ideal `⟨A⟩` generated by a subset.
pub fn close(k: &FinitePka, a: Subset) -> Subset {
    Closer::new(k).close(a)
}

/// The principal ideal `⟨a⟩ = {x | x ≤ a}`.
pub fn principal(k: &FinitePka, x: usize) -> Subset {
    k.down_set(x)
}

/// Pointwise product `A ⊙ B = {a·b}`.
pub fn set_product(k: &FinitePka, a: Subset, b: Subset) -> Subset {
    let mut out = Subset::EMPTY;
    for x in a.iter() {
        for y in b.iter() {
            out.insert(k.mul(x, y));
        }
    }
    out
}

/// `I + J = ⟨I ∪ J⟩`, computed from the canonical closed sets.
pub fn ideal_add(k: &FinitePka, i: Subset, j: Subset) -> Subset {
    close(k, i | j)
}

/// `I · J = ⟨I ⊙ J⟩`.
pub fn ideal_mul(k: &FinitePka, i: Subset, j: Subset) -> Subset {
    close(k, set_product(k, i, j))
}

/// `I* = ⟨(a₁*·…·a_k*)*⟩` over an explicit generator list.
pub fn ideal_star_from(k: &FinitePka, gens: &[usize]) -> Subset {
    let mut prod = k.one();
    for &g in gens {
        prod = k.mul(prod, k.star(g));
    }
    close(k, Subset::singleton(k.star(prod)))
}

/// `I*`, with the canonical closed set in ascending element order as the
/// generator list. Generator independence is a property of the host algebra
/// and is exercised by the test suite.
pub fn ideal_star(k: &FinitePka, i: Subset) -> Subset {
    let gens: Vec<usize> = i.iter().collect();
    ideal_star_from(k, &gens)
}

pub fn ideal_zero(k: &FinitePka) -> Subset {
    close(k, Subset::singleton(k.zero()))
}

pub fn ideal_one(k: &FinitePka) -> Subset {
    close(k, Subset::singleton(k.one()))
}

/// All star-ideals of the algebra: the closures of every subset of the
/// carrier, deduplicated, ordered by (size, mask). On a finite carrier every
/// star-ideal is finitely generated, so this is the whole ideal lattice.
pub fn enumerate_star_ideals(k: &FinitePka, bound: usize) -> Result<Vec<Subset>, Error> {
    let n = k.n();
    if n > bound {
        return Err(Error::CarrierOverflow { size: n, bound });
    }
    let closer = Closer::new(k);
    let mut seen: BTreeSet<Subset> = BTreeSet::new();
    for a in Subset::all(n) {
        seen.insert(closer.close(a));
    }
    let mut out: Vec<Subset> = seen.into_iter().collect();
    out.sort_unstable_by_key(|s| (s.len(), s.0));
    Ok(out)
}

/// A minimal generating set for an ideal: greedily drops elements that the
/// rest already generate.
pub fn minimal_generators(k: &FinitePka, ideal: Subset) -> Vec<usize> {
    let closer = Closer::new(k);
    let mut gens = ideal;
    // Try large elements first so principal ideals shrink to their top.
    let elems: Vec<usize> = ideal.iter().collect();
    for &x in elems.iter().rev() {
        let mut without = gens;
        without.remove(x);
        if closer.close(without) == ideal {
            gens = without;
        }
    }
    gens.iter().collect()
}

/// Closure into a PS-ideal: defined family sums plus down-closure (no
/// ω-rule). The empty set closes to `{0}`.
pub fn ps_close(s: &FinitePs, a: Subset) -> Subset {
    let mut cur = if a.is_empty() { Subset::singleton(s.zero()) } else { a };
    loop {
        let mut next = cur;
        for x in cur.iter() {
            next = next | s.down_set(x);
        }
        for (fam, v) in s.sums() {
            if fam.is_subset_of(cur) {
                next.insert(v);
            }
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// All PS-ideals, by closing every subset.
pub fn enumerate_ps_ideals(s: &FinitePs, bound: usize) -> Result<Vec<Subset>, Error> {
    let n = s.n();
    if n > bound {
        return Err(Error::CarrierOverflow { size: n, bound });
    }
    let mut seen: BTreeSet<Subset> = BTreeSet::new();
    for a in Subset::all(n) {
        seen.insert(ps_close(s, a));
    }
    let mut out: Vec<Subset> = seen.into_iter().collect();
    out.sort_unstable_by_key(|s| (s.len(), s.0));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{boolean, monoid_extension, zn_monoid};

    #[test]
    fn principal_is_down_set_and_close_of_singleton() {
        for k in [boolean(), monoid_extension(&zn_monoid(2)).unwrap(), monoid_extension(&zn_monoid(3)).unwrap()] {
            for x in 0..k.n() {
                let p = principal(&k, x);
                assert_eq!(p, close(&k, Subset::singleton(x)), "element {x} of {}", k.name());
                assert!(p.contains(x));
            }
            assert_eq!(principal(&k, k.zero()), Subset::singleton(k.zero()));
            assert!(principal(&k, k.one()).contains(k.zero()));
        }
    }

    #[test]
    fn close_is_closure_operator() {
        let k = monoid_extension(&zn_monoid(2)).unwrap();
        let closer = Closer::new(&k);
        for a in Subset::all(k.n()) {
            let c = closer.close(a);
            assert!(a.is_subset_of(c));
            assert_eq!(closer.close(c), c);
            assert_eq!(closer.tau_step(c), c, "closed sets are tau fixpoints");
            for b in Subset::all(k.n()) {
                if a.is_subset_of(b) {
                    assert!(c.is_subset_of(closer.close(b)));
                }
            }
        }
    }

    #[test]
    fn close_of_empty_and_zero() {
        let k = boolean();
        assert_eq!(close(&k, Subset::EMPTY), Subset::singleton(k.zero()));
        assert_eq!(close(&k, Subset::singleton(k.zero())), Subset::singleton(k.zero()));
    }

    #[test]
    fn tau_adds_down_sets() {
        let k = monoid_extension(&zn_monoid(2)).unwrap();
        let top = k.element("⋆").unwrap();
        let t = tau_step(&k, Subset::singleton(top));
        for x in 0..k.n() {
            assert!(t.contains(x), "everything is below ⋆");
        }
    }

    #[test]
    fn omega_rule_fires() {
        // In the Z₂ extension, 1 and g are all the powers of g, and g* = ⋆,
        // so closing {1, g} must pull in ⋆ and hence everything.
        let k = monoid_extension(&zn_monoid(2)).unwrap();
        let g = k.element("g").unwrap();
        let c = close(&k, Subset::from_iter([k.one(), g]));
        assert_eq!(c, Subset::full(k.n()));
    }

    #[test]
    fn boolean_ideals() {
        let k = boolean();
        let ideals = enumerate_star_ideals(&k, DEFAULT_ENUM_BOUND).unwrap();
        assert_eq!(ideals.len(), 2);
        assert_eq!(ideals[0], Subset::singleton(k.zero()));
        assert_eq!(ideals[1], Subset::full(2));
    }

    #[test]
    fn enumeration_contains_principals_and_respects_bound() {
        let k = monoid_extension(&zn_monoid(3)).unwrap();
        let ideals = enumerate_star_ideals(&k, DEFAULT_ENUM_BOUND).unwrap();
        for x in 0..k.n() {
            assert!(ideals.contains(&principal(&k, x)));
        }
        assert!(ideals.len() <= 1 << k.n());
        assert!(matches!(
            enumerate_star_ideals(&k, 3),
            Err(Error::CarrierOverflow { .. })
        ));
    }

    #[test]
    fn ideal_arithmetic_examples() {
        let k = monoid_extension(&zn_monoid(2)).unwrap();
        let ideals = enumerate_star_ideals(&k, DEFAULT_ENUM_BOUND).unwrap();
        for &i in &ideals {
            assert_eq!(ideal_add(&k, i, ideal_zero(&k)), i);
            assert_eq!(ideal_mul(&k, ideal_one(&k), i), i);
            // inclusion order: I + J = J iff I ⊆ J
            for &j in &ideals {
                assert_eq!(ideal_add(&k, i, j) == j, i.is_subset_of(j));
            }
        }
        assert_eq!(ideal_star(&k, ideal_zero(&k)), principal(&k, k.one()));
    }

    #[test]
    fn set_product_examples() {
        let k = boolean();
        let all = Subset::full(2);
        assert_eq!(set_product(&k, Subset::singleton(k.one()), all), all);
        assert_eq!(
            set_product(&k, Subset::singleton(k.zero()), all),
            Subset::singleton(k.zero())
        );
    }

    #[test]
    fn lemma3_identities_small() {
        // ⟨A⊙B⟩ = ⟨⟨A⟩⊙B⟩ = ⟨A⊙⟨B⟩⟩ and the union versions.
        let k = monoid_extension(&zn_monoid(2)).unwrap();
        let closer = Closer::new(&k);
        for a in Subset::all(k.n()) {
            for b in Subset::all(k.n()) {
                let ca = closer.close(a);
                let cb = closer.close(b);
                let lhs = closer.close(set_product(&k, a, b));
                assert_eq!(lhs, closer.close(set_product(&k, ca, b)));
                assert_eq!(lhs, closer.close(set_product(&k, a, cb)));
                let lhs = closer.close(a | b);
                assert_eq!(lhs, closer.close(ca | b));
                assert_eq!(lhs, closer.close(a | cb));
            }
        }
    }

    #[test]
    fn generator_independence_for_star() {
        // Lemma-4-style check: any generating set of I, in any order, yields
        // the same I*.
        let k = monoid_extension(&zn_monoid(2)).unwrap();
        let closer = Closer::new(&k);
        let ideals = enumerate_star_ideals(&k, DEFAULT_ENUM_BOUND).unwrap();
        for &i in &ideals {
            let canonical = ideal_star(&k, i);
            for gens in Subset::all(k.n()) {
                if closer.close(gens) == i && !gens.is_empty() {
                    let fwd: Vec<usize> = gens.iter().collect();
                    let mut rev = fwd.clone();
                    rev.reverse();
                    assert_eq!(ideal_star_from(&k, &fwd), canonical);
                    assert_eq!(ideal_star_from(&k, &rev), canonical);
                }
            }
        }
    }

    #[test]
    fn minimal_generators_regenerate() {
        let k = monoid_extension(&zn_monoid(3)).unwrap();
        let ideals = enumerate_star_ideals(&k, DEFAULT_ENUM_BOUND).unwrap();
        for &i in &ideals {
            let gens = minimal_generators(&k, i);
            assert_eq!(close(&k, Subset::from_iter(gens.iter().copied())), i);
        }
    }
}
