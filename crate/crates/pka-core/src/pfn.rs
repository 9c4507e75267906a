//! Partial functions on a finite state set, encoded as sets of state strings.
//!
//! A string `σ₁…σₙ` records a run from `σ₁` to `σₙ`. A set of strings is
//! *functional* when it describes a partial function into the distinguished
//! target set `Ω`, and *sparsely functional* when additionally no member
//! refines another. These sets form a partially additive Kleene algebra:
//! `+` is union (defined when the union is still functional), `·` is fusion
//! composition, and `*` iterates until `Ω` is reached.
//!
//! The carrier here is finitized by capping string length; fusion products
//! that outgrow the cap are dropped from products, and a star iteration that
//! would need them reports divergence.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::FinitePka;
use crate::error::Error;
use crate::subset::{Subset, MAX_CARRIER};

/// A run through states, as indices into the ambient state set.
pub type StateString = Vec<u8>;

/// Largest string universe for which carrier subsets are enumerated.
pub const MAX_UNIVERSE: usize = 16;

/// Ambient state set `Σ` with target subset `Ω ⊆ Σ`.
#[derive(Clone, Debug)]
pub struct PfnContext {
    state_labels: Vec<String>,
    omega: Subset,
}

impl PfnContext {
    pub fn new(state_labels: Vec<String>, omega: Subset) -> Result<PfnContext, Error> {
        if state_labels.is_empty() {
            return Err(Error::Malformed("state set is empty".into()));
        }
        if state_labels.len() > MAX_UNIVERSE {
            return Err(Error::CarrierOverflow { size: state_labels.len(), bound: MAX_UNIVERSE });
        }
        for (i, l) in state_labels.iter().enumerate() {
            if l.chars().count() != 1 || l.chars().any(|c| c.is_whitespace()) {
                return Err(Error::Malformed(format!(
                    "state label {l:?} must be a single non-space character"
                )));
            }
            if state_labels[..i].contains(l) {
                return Err(Error::Malformed(format!("duplicate state label {l:?}")));
            }
        }
        if !omega.is_subset_of(Subset::full(state_labels.len())) {
            return Err(Error::Malformed("Ω is not a subset of the state set".into()));
        }
        Ok(PfnContext { state_labels, omega })
    }

    pub fn n_states(&self) -> usize {
        self.state_labels.len()
    }

    pub fn omega(&self) -> Subset {
        self.omega
    }

    pub fn state_labels(&self) -> &[String] {
        &self.state_labels
    }

    fn render(&self, s: &[u8]) -> String {
        s.iter().map(|&i| self.state_labels[i as usize].as_str()).collect()
    }
}

/// Initial state of a nonempty string.
pub fn initial(s: &[u8]) -> Option<u8> {
    s.first().copied()
}

/// Final state of a nonempty string.
pub fn final_state(s: &[u8]) -> Option<u8> {
    s.last().copied()
}

/// Fusion product `s ⊗ t`: the run `s` continued by `t`, overlapping on the
/// shared boundary state. Empty when either side is empty or the endpoints
/// do not match.
pub fn fusion_product(s: &[u8], t: &[u8]) -> StateString {
    if s.is_empty() || t.is_empty() || s[s.len() - 1] != t[0] {
        return Vec::new();
    }
    let mut out = s.to_vec();
    out.extend_from_slice(&t[1..]);
    out
}

fn is_subsequence(s: &[u8], t: &[u8]) -> bool {
    let mut it = t.iter();
    s.iter().all(|c| it.any(|d| d == c))
}

/// Is `s` a generalized prefix of `t`: can `t` be split as
/// `s₁t₁s₂t₂…sₙtₙ` with `s = s₁s₂…sₙ`?
///
/// The empty string is a generalized prefix of every string. For nonempty
/// `s` the first block anchors at the start of `t`, so the relation reduces
/// to an initial-state-preserving subsequence test.
pub fn is_generalized_prefix(s: &[u8], t: &[u8]) -> bool {
    if s.is_empty() {
        return true;
    }
    if t.is_empty() || s[0] != t[0] {
        return false;
    }
    is_subsequence(&s[1..], &t[1..])
}

/// Is `s` maximal in `a`: not a generalized prefix of any other member.
fn is_maximal(s: &[u8], a: &BTreeSet<StateString>) -> bool {
    !a.iter().any(|t| t.as_slice() != s && is_generalized_prefix(s, t))
}

/// A set of strings is functional when (1) `Ω` states occur only at the end
/// of a string, (2) every `Ω` state starts some string, and (3) the maximal
/// strings define a partial function: equal initial states force equal final
/// states.
pub fn is_functional(ctx: &PfnContext, a: &BTreeSet<StateString>) -> bool {
    for s in a {
        for (i, &st) in s.iter().enumerate() {
            if ctx.omega.contains(st as usize) && i + 1 != s.len() {
                return false;
            }
        }
    }
    for st in ctx.omega.iter() {
        if !a.iter().any(|s| initial(s) == Some(st as u8)) {
            return false;
        }
    }
    let mut fin_of_ini: BTreeMap<u8, u8> = BTreeMap::new();
    for s in a {
        if !is_maximal(s, a) {
            continue;
        }
        let (Some(ini), Some(fin)) = (initial(s), final_state(s)) else { continue };
        match fin_of_ini.insert(ini, fin) {
            Some(prev) if prev != fin => return false,
            _ => {}
        }
    }
    true
}

/// Functional, and no member is a generalized prefix of another.
pub fn is_sparsely_functional(ctx: &PfnContext, a: &BTreeSet<StateString>) -> bool {
    is_functional(ctx, a) && a.iter().all(|s| is_maximal(s, a))
}

/// The largest sparsely functional subset `⌜A⌝` of a functional set: the
/// maximal strings of `A`.
pub fn sf_normalize(
    ctx: &PfnContext,
    a: &BTreeSet<StateString>,
) -> Result<BTreeSet<StateString>, Error> {
    if !is_functional(ctx, a) {
        return Err(Error::NotFunctional);
    }
    let out: BTreeSet<StateString> =
        a.iter().filter(|s| is_maximal(s, a)).cloned().collect();
    if !is_sparsely_functional(ctx, &out) {
        return Err(Error::NotFunctional);
    }
    Ok(out)
}

/// The finite partial-function algebra together with the string sets behind
/// each carrier element.
#[derive(Clone, Debug)]
pub struct PfnAlgebra {
    pub context: PfnContext,
    pub maxlen: usize,
    pub algebra: FinitePka,
    /// The string set of each carrier element; index 0 is the empty set.
    pub sets: Vec<BTreeSet<StateString>>,
}

/// Every nonempty string of length ≤ `maxlen` in which `Ω` states occur
/// only at the last position, ordered by length then lexicographically.
fn universe(ctx: &PfnContext, maxlen: usize) -> Vec<StateString> {
    let n = ctx.n_states() as u8;
    let mut out: Vec<StateString> = Vec::new();
    let mut layer: Vec<StateString> = (0..n).map(|s| alloc::vec![s]).collect();
    out.extend(layer.iter().cloned());
    for _ in 1..maxlen {
        let mut next = Vec::new();
        for s in &layer {
            let last = s[s.len() - 1];
            if ctx.omega.contains(last as usize) {
                continue; // Ω states end a string
            }
            for t in 0..n {
                let mut e = s.clone();
                e.push(t);
                next.push(e);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

struct Builder<'a> {
    ctx: &'a PfnContext,
    maxlen: usize,
    sets: Vec<BTreeSet<StateString>>,
    index: BTreeMap<Vec<StateString>, usize>,
}

impl<'a> Builder<'a> {
    /// Fuse two sets pointwise, dropping empty and over-long products.
    /// Returns the normalized result and whether a length drop occurred.
    fn fuse(&self, a: &BTreeSet<StateString>, b: &BTreeSet<StateString>) -> Result<(BTreeSet<StateString>, bool), Error> {
        let mut raw: BTreeSet<StateString> = BTreeSet::new();
        let mut dropped = false;
        for s in a {
            for t in b {
                let v = fusion_product(s, t);
                if v.is_empty() {
                    continue;
                }
                if v.len() > self.maxlen {
                    dropped = true;
                    continue;
                }
                raw.insert(v);
            }
        }
        let norm = if raw.is_empty() { raw } else { sf_normalize(self.ctx, &raw)? };
        Ok((norm, dropped))
    }

    fn lookup(&self, set: &BTreeSet<StateString>) -> Result<usize, Error> {
        let key: Vec<StateString> = set.iter().cloned().collect();
        self.index.get(&key).copied().ok_or_else(|| {
            Error::Malformed(format!(
                "computed set escapes the carrier: {:?}",
                set.iter().map(|s| self.ctx.render(s)).collect::<Vec<_>>()
            ))
        })
    }
}

/// Builds the partial-function algebra over `ctx` with string length capped
/// at `maxlen`.
pub fn pfn_algebra(ctx: &PfnContext, maxlen: usize, max_carrier: usize) -> Result<PfnAlgebra, Error> {
    if maxlen == 0 {
        return Err(Error::Malformed("maxlen must be positive".into()));
    }
    let uni = universe(ctx, maxlen);
    if uni.len() > MAX_UNIVERSE {
        return Err(Error::CarrierOverflow { size: uni.len(), bound: MAX_UNIVERSE });
    }

    // Carrier: the empty set, then every sparsely functional subset of the
    // universe, ordered by (size, universe mask).
    let mut sets: Vec<BTreeSet<StateString>> = alloc::vec![BTreeSet::new()];
    let mut masks: Vec<(usize, u32)> = Vec::new();
    for mask in Subset::all(uni.len()) {
        if mask.is_empty() {
            continue;
        }
        let set: BTreeSet<StateString> = mask.iter().map(|i| uni[i].clone()).collect();
        if is_sparsely_functional(ctx, &set) {
            masks.push((mask.len(), mask.0));
        }
    }
    masks.sort_unstable();
    for &(_, mask) in &masks {
        sets.push(Subset(mask).iter().map(|i| uni[i].clone()).collect());
    }
    let bound = max_carrier.min(MAX_CARRIER);
    if sets.len() > bound {
        return Err(Error::CarrierOverflow { size: sets.len(), bound });
    }

    let index: BTreeMap<Vec<StateString>, usize> = sets
        .iter()
        .enumerate()
        .map(|(i, s)| (s.iter().cloned().collect::<Vec<_>>(), i))
        .collect();
    let b = Builder { ctx, maxlen, sets: sets.clone(), index };

    let n = b.sets.len();
    let labels: Vec<String> = b
        .sets
        .iter()
        .map(|s| {
            if s.is_empty() {
                "0".into()
            } else {
                let mut l = String::from("{");
                for (k, st) in s.iter().enumerate() {
                    if k > 0 {
                        l.push(',');
                    }
                    l.push_str(&ctx.render(st));
                }
                l.push('}');
                l
            }
        })
        .collect();

    let sigma_set: BTreeSet<StateString> = (0..ctx.n_states() as u8).map(|s| alloc::vec![s]).collect();
    let one = b.lookup(&sigma_set)?;
    let omega_set: BTreeSet<StateString> =
        ctx.omega.iter().map(|s| alloc::vec![s as u8]).collect();

    // Sums: A↓B iff A∪B is functional, with A+B = ⌜A∪B⌝.
    let mut adds = Vec::new();
    for i in 0..n {
        for j in i..n {
            let union: BTreeSet<StateString> = b.sets[i].union(&b.sets[j]).cloned().collect();
            if !union.is_empty() && is_functional(ctx, &union) {
                let v = b.lookup(&sf_normalize(ctx, &union)?)?;
                adds.push(((i, j), v));
            }
        }
    }

    // Products: A·B = ⌜{s⊗t}⌝ with over-long fusions dropped.
    let mut mul = alloc::vec![0usize; n * n];
    for i in 0..n {
        for j in 0..n {
            let (prod, _) = b.fuse(&b.sets[i], &b.sets[j])?;
            mul[i * n + j] = b.lookup(&prod)?;
        }
    }

    // Stars: A* = ⌜Σ ∪ {s | s ∈ Aᵏ, s_fin ∈ Ω}⌝ with A⁰ = Ω. A drop during
    // the Aᵏ iteration means the fixpoint needs strings beyond the cap.
    let mut star = alloc::vec![0usize; n];
    for i in 0..n {
        let mut contributions: BTreeSet<StateString> = BTreeSet::new();
        let mut seen: Vec<BTreeSet<StateString>> = Vec::new();
        let mut cur = omega_set.clone();
        loop {
            for s in &cur {
                if final_state(s).is_some_and(|f| ctx.omega.contains(f as usize)) {
                    contributions.insert(s.clone());
                }
            }
            if seen.contains(&cur) {
                break;
            }
            seen.push(cur.clone());
            let (next, dropped) = b.fuse(&b.sets[i], &cur)?;
            if dropped {
                return Err(Error::StarDivergence(format!(
                    "iteration of {} needs strings longer than {maxlen}",
                    labels[i]
                )));
            }
            cur = next;
        }
        let star_set: BTreeSet<StateString> =
            sigma_set.union(&contributions).cloned().collect();
        star[i] = b.lookup(&sf_normalize(ctx, &star_set)?)?;
    }

    let name = format!(
        "pfn-{}-{}-{maxlen}",
        ctx.state_labels.join(""),
        ctx.omega.iter().map(|i| ctx.state_labels[i].as_str()).collect::<Vec<_>>().join("")
    );
    let algebra = FinitePka::new(name, labels, 0, one, adds, mul, star)?;
    Ok(PfnAlgebra { context: ctx.clone(), maxlen, algebra, sets: b.sets })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::VerifyOptions;

    fn ctx_pq() -> PfnContext {
        PfnContext::new(
            alloc::vec!["p".into(), "q".into()],
            Subset::from_iter([1]),
        )
        .unwrap()
    }

    fn set(strings: &[&[u8]]) -> BTreeSet<StateString> {
        strings.iter().map(|s| s.to_vec()).collect()
    }

    #[test]
    fn fusion_examples() {
        assert_eq!(fusion_product(&[0, 1], &[1, 2]), alloc::vec![0, 1, 2]);
        assert_eq!(fusion_product(&[0, 1], &[]), Vec::<u8>::new());
        assert_eq!(fusion_product(&[], &[0, 1]), Vec::<u8>::new());
        assert_eq!(fusion_product(&[0, 1], &[2, 3]), Vec::<u8>::new());
    }

    #[test]
    fn fusion_associative_when_composable() {
        let strings: Vec<StateString> = alloc::vec![
            alloc::vec![0, 1],
            alloc::vec![1, 2],
            alloc::vec![2, 0],
            alloc::vec![0],
            alloc::vec![1],
        ];
        for s in &strings {
            for t in &strings {
                for u in &strings {
                    let a = fusion_product(&fusion_product(s, t), u);
                    let b = fusion_product(s, &fusion_product(t, u));
                    assert_eq!(a, b, "{s:?} {t:?} {u:?}");
                }
            }
        }
    }

    #[test]
    fn generalized_prefix_examples() {
        // ab ≺ axb
        assert!(is_generalized_prefix(&[0, 1], &[0, 2, 1]));
        // s ≺ s
        assert!(is_generalized_prefix(&[0, 1], &[0, 1]));
        // ba ⊀ ab
        assert!(!is_generalized_prefix(&[1, 0], &[0, 1]));
        // ε ≺ anything
        assert!(is_generalized_prefix(&[], &[0, 1]));
        // the first block anchors the initial state
        assert!(!is_generalized_prefix(&[1], &[0, 1]));
    }

    #[test]
    fn functional_examples() {
        let ctx = ctx_pq();
        // Ω embedded as length-1 strings is functional.
        assert!(is_functional(&ctx, &set(&[&[1]])));
        // The empty set fails condition (2) when Ω is nonempty.
        assert!(!is_functional(&ctx, &set(&[])));
        // A functional set with an internal refinement is not sparse.
        let a = set(&[&[1], &[0], &[0, 1]]);
        assert!(is_functional(&ctx, &a));
        assert!(!is_sparsely_functional(&ctx, &a));
    }

    #[test]
    fn normalize_examples() {
        let ctx = ctx_pq();
        let a = set(&[&[1], &[0], &[0, 1]]);
        let norm = sf_normalize(&ctx, &a).unwrap();
        assert_eq!(norm, set(&[&[1], &[0, 1]]));
        // idempotent
        assert_eq!(sf_normalize(&ctx, &norm).unwrap(), norm);
        // already sparse: unchanged
        let b = set(&[&[1], &[0, 0]]);
        assert_eq!(sf_normalize(&ctx, &b).unwrap(), b);
        // not functional: error
        assert!(matches!(sf_normalize(&ctx, &set(&[])), Err(Error::NotFunctional)));
    }

    #[test]
    fn normalize_is_largest_sparse_subset() {
        // Brute-force oracle over all subsets: nothing sparsely functional
        // inside A is bigger than ⌜A⌝, and ⌜A⌝ keeps every maximal member.
        let ctx = ctx_pq();
        let items: Vec<StateString> = alloc::vec![alloc::vec![1], alloc::vec![0], alloc::vec![0, 1]];
        let a: BTreeSet<StateString> = items.iter().cloned().collect();
        let norm = sf_normalize(&ctx, &a).unwrap();
        assert_eq!(norm, set(&[&[1], &[0, 1]]));
        for keep in crate::subset::Subset::all(items.len()) {
            let sub: BTreeSet<StateString> = keep.iter().map(|i| items[i].clone()).collect();
            if is_sparsely_functional(&ctx, &sub) {
                assert!(sub.len() <= norm.len());
            }
        }
        for s in &a {
            if is_maximal(s, &a) {
                assert!(norm.contains(s));
            }
        }
    }

    #[test]
    fn pq_algebra_shape() {
        let ctx = ctx_pq();
        let pfn = pfn_algebra(&ctx, 2, 32).unwrap();
        let k = &pfn.algebra;
        // 0, {q}, {p,q}, {q,pp}, {q,pq}
        assert_eq!(k.n(), 5);
        assert_eq!(k.label(k.zero()), "0");
        assert_eq!(k.label(k.one()), "{p,q}");
        // 1 is the multiplicative identity and 0 annihilates
        for x in 0..k.n() {
            assert_eq!(k.mul(k.one(), x), x);
            assert_eq!(k.mul(x, k.one()), x);
            assert_eq!(k.mul(x, k.zero()), k.zero());
        }
    }

    #[test]
    fn pq_algebra_passes_verifiers() {
        let ctx = ctx_pq();
        let pfn = pfn_algebra(&ctx, 2, 32).unwrap();
        let rep = pfn.algebra.verify_pka(VerifyOptions::default());
        assert!(rep.pass(), "{rep}");
        let rep = pfn.algebra.verify_star_continuity(VerifyOptions::default());
        assert!(rep.pass(), "{rep}");
    }

    #[test]
    fn star_of_omega_like_sets_stabilizes_quickly() {
        let ctx = ctx_pq();
        let pfn = pfn_algebra(&ctx, 2, 32).unwrap();
        let k = &pfn.algebra;
        let q = k.element("{q}").unwrap();
        assert_eq!(k.label(k.star(q)), "{p,q}");
        assert_eq!(k.star(k.zero()), k.one());
    }
}
