//! Finite partially additive Kleene algebras.
//!
//! A [`FinitePka`] is a finite carrier with a partial binary `+` (stored as a
//! symmetrized table over unordered pairs), a total binary `·`, a total unary
//! `*`, and constants `0` and `1`. [`FinitePka::verify_pka`] checks all
//! sixteen defining axioms by exhaustive enumeration;
//! [`FinitePka::verify_star_continuity`] checks both halves of the
//! star-continuity law over all element quadruples.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::Error;
use crate::report::{AxiomReport, Law};
use crate::subset::{Subset, MAX_CARRIER};

/// Above this carrier size the quadruple-loop checks emit a warning.
pub const QUAD_LOOP_SOFT_LIMIT: usize = 16;

/// Options for the axiom checkers.
#[derive(Clone, Copy, Debug, Default)]
pub struct VerifyOptions {
    /// Also test the converse direction of the guarded associativity axiom:
    /// `x↓y`, `y↓z`, `x↓(y+z)` together imply `(x+y)↓z`. The default tests
    /// exactly the printed direction.
    pub strict_associativity: bool,
}

/// The sequence of powers `b⁰, b¹, …` up to its first repetition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Powers {
    /// Distinct powers in order, starting with `b⁰ = 1`.
    pub list: Vec<usize>,
    /// Index at which the cycle re-enters the list.
    pub tail: usize,
    /// Length of the cycle.
    pub cycle: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePka {
    name: String,
    labels: Vec<String>,
    /// Partial sum on unordered pairs, keyed `(min, max)`.
    add: BTreeMap<(usize, usize), usize>,
    /// Row-major `n × n` multiplication table.
    mul: Vec<usize>,
    star: Vec<usize>,
    zero: usize,
    one: usize,
}

fn pair(x: usize, y: usize) -> (usize, usize) {
    if x <= y {
        (x, y)
    } else {
        (y, x)
    }
}

impl FinitePka {
    /// Builds an algebra from raw tables.
    ///
    /// The sum entries are symmetrized, and the mandatory entries `x+0 = x`
    /// and `x+x = x` are inserted. Conflicting duplicate entries (including
    /// conflicts with the mandatory ones) are rejected.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        zero: usize,
        one: usize,
        add_entries: impl IntoIterator<Item = ((usize, usize), usize)>,
        mul: Vec<usize>,
        star: Vec<usize>,
    ) -> Result<FinitePka, Error> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Malformed("carrier is empty".into()));
        }
        if n > MAX_CARRIER {
            return Err(Error::CarrierOverflow { size: n, bound: MAX_CARRIER });
        }
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() || l.chars().any(|c| c.is_whitespace()) {
                return Err(Error::Malformed(format!("bad element label {l:?}")));
            }
            if labels[..i].contains(l) {
                return Err(Error::Malformed(format!("duplicate element label {l:?}")));
            }
        }
        if zero >= n || one >= n {
            return Err(Error::Malformed("zero/one outside carrier".into()));
        }
        if mul.len() != n * n {
            return Err(Error::Malformed(format!(
                "multiplication table has {} entries, expected {}",
                mul.len(),
                n * n
            )));
        }
        if star.len() != n {
            return Err(Error::Malformed(format!(
                "star table has {} entries, expected {n}",
                star.len()
            )));
        }
        if mul.iter().chain(star.iter()).any(|&v| v >= n) {
            return Err(Error::Malformed("table value outside carrier".into()));
        }

        let mut add = BTreeMap::new();
        let mut put = |k: (usize, usize), v: usize| -> Result<(), Error> {
            match add.insert(k, v) {
                Some(old) if old != v => Err(Error::Malformed(format!(
                    "conflicting sums for pair {k:?}: {old} vs {v}"
                ))),
                _ => Ok(()),
            }
        };
        for ((x, y), v) in add_entries {
            if x >= n || y >= n || v >= n {
                return Err(Error::Malformed("sum entry outside carrier".into()));
            }
            put(pair(x, y), v)?;
        }
        for x in 0..n {
            put(pair(x, zero), x)?;
            put((x, x), x)?;
        }

        Ok(FinitePka { name: name.into(), labels, add, mul, star, zero, one })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    /// Index of the element with the given label.
    pub fn element(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn summable(&self, x: usize, y: usize) -> bool {
        self.add.contains_key(&pair(x, y))
    }

    /// `x + y` if the pair is summable.
    pub fn add_opt(&self, x: usize, y: usize) -> Option<usize> {
        self.add.get(&pair(x, y)).copied()
    }

    /// `x + y`, or an error if the pair is not summable.
    pub fn add(&self, x: usize, y: usize) -> Result<usize, Error> {
        self.add_opt(x, y).ok_or(Error::UndefinedSum(alloc::vec![x, y]))
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.n() + y]
    }

    pub fn star(&self, x: usize) -> usize {
        self.star[x]
    }

    /// Natural order: `x ≤ y` iff `x↓y` and `x+y = y`.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.add_opt(x, y) == Some(y)
    }

    /// The down-set `{y : y ≤ x}`.
    pub fn down_set(&self, x: usize) -> Subset {
        Subset::from_iter((0..self.n()).filter(|&y| self.leq(y, x)))
    }

    /// Is every pair summable?
    pub fn is_total(&self) -> bool {
        let n = self.n();
        (0..n).all(|x| (x..n).all(|y| self.summable(x, y)))
    }

    /// Summable pairs `(x, y)` with `x ≤ y` by index, with their sums, in
    /// canonical order.
    pub fn add_pairs(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.add.iter().map(|(&k, &v)| (k, v))
    }

    /// Distinct powers `b⁰, b¹, …` with cycle metadata.
    pub fn powers(&self, b: usize) -> Powers {
        let mut list = Vec::new();
        let mut cur = self.one;
        loop {
            if let Some(t) = list.iter().position(|&p| p == cur) {
                let cycle = list.len() - t;
                return Powers { list, tail: t, cycle };
            }
            list.push(cur);
            cur = self.mul(b, cur);
        }
    }

    /// Same algebra with a replacement star table.
    pub fn with_star_table(&self, star: Vec<usize>) -> Result<FinitePka, Error> {
        FinitePka::new(
            self.name.clone(),
            self.labels.clone(),
            self.zero,
            self.one,
            self.add_pairs().collect::<Vec<_>>(),
            self.mul.clone(),
            star,
        )
    }

    /// Same algebra under a different name.
    pub fn renamed(&self, name: impl Into<String>) -> FinitePka {
        let mut k = self.clone();
        k.name = name.into();
        k
    }

    fn fmt_el(&self, x: usize) -> &str {
        self.label(x)
    }

    /// Checks the sixteen axioms exhaustively. The report lists every
    /// violated axiom with a witness tuple.
    pub fn verify_pka(&self, opts: VerifyOptions) -> AxiomReport {
        let n = self.n();
        let mut rep = AxiomReport::new();

        // (1) guarded associativity of +.
        for x in 0..n {
            for y in 0..n {
                let Some(xy) = self.add_opt(x, y) else { continue };
                for z in 0..n {
                    if let (Some(xy_z), Some(yz)) = (self.add_opt(xy, z), self.add_opt(y, z)) {
                        if self.add_opt(x, yz) != Some(xy_z) {
                            rep.violate(
                                Law::Axiom(1),
                                alloc::vec![x, y, z],
                                format!(
                                    "({x}+{y})+{z} defined but x+(y+z) undefined or unequal \
                                     at x={}, y={}, z={}",
                                    self.fmt_el(x),
                                    self.fmt_el(y),
                                    self.fmt_el(z)
                                ),
                            );
                        }
                    }
                    if opts.strict_associativity {
                        if let Some(yz) = self.add_opt(y, z) {
                            if self.add_opt(x, yz).is_some()
                                && self.summable(x, y)
                                && self.add_opt(xy, z) != self.add_opt(x, yz)
                            {
                                rep.violate(
                                    Law::Axiom(1),
                                    alloc::vec![x, y, z],
                                    format!(
                                        "strict mode: x+(y+z) defined but (x+y)+z undefined \
                                         or unequal at x={}, y={}, z={}",
                                        self.fmt_el(x),
                                        self.fmt_el(y),
                                        self.fmt_el(z)
                                    ),
                                );
                            }
                        }
                    }
                }
            }
        }

        // (2) commutativity. The table is stored over unordered pairs, so
        // this can only fail if the storage invariant is broken; checked for
        // completeness of the contract.
        for x in 0..n {
            for y in 0..n {
                let a = self.add_opt(x, y);
                let b = self.add_opt(y, x);
                if a != b {
                    rep.violate(
                        Law::Axiom(2),
                        alloc::vec![x, y],
                        format!("{}+{} differs from {}+{}", self.fmt_el(x), self.fmt_el(y), self.fmt_el(y), self.fmt_el(x)),
                    );
                }
            }
        }

        // (3) x↓0 and x+0 = x; (4) x↓x and x+x = x.
        for x in 0..n {
            if self.add_opt(x, self.zero) != Some(x) {
                rep.violate(
                    Law::Axiom(3),
                    alloc::vec![x],
                    format!("{}+0 missing or ≠ {}", self.fmt_el(x), self.fmt_el(x)),
                );
            }
            if self.add_opt(x, x) != Some(x) {
                rep.violate(
                    Law::Axiom(4),
                    alloc::vec![x],
                    format!("{}+{} missing or not idempotent", self.fmt_el(x), self.fmt_el(x)),
                );
            }
        }

        // (5) associativity of ·; (6)-(7) identity.
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.mul(x, self.mul(y, z)) != self.mul(self.mul(x, y), z) {
                        rep.violate(
                            Law::Axiom(5),
                            alloc::vec![x, y, z],
                            format!(
                                "·(·) not associative at x={}, y={}, z={}",
                                self.fmt_el(x),
                                self.fmt_el(y),
                                self.fmt_el(z)
                            ),
                        );
                    }
                }
            }
        }
        for x in 0..n {
            if self.mul(self.one, x) != x {
                rep.violate(Law::Axiom(6), alloc::vec![x], format!("1·{} ≠ {}", self.fmt_el(x), self.fmt_el(x)));
            }
            if self.mul(x, self.one) != x {
                rep.violate(Law::Axiom(7), alloc::vec![x], format!("{}·1 ≠ {}", self.fmt_el(x), self.fmt_el(x)));
            }
        }

        // (8)-(9) distributivity over defined sums.
        for x in 0..n {
            for y in x..n {
                let Some(xy) = self.add_opt(x, y) else { continue };
                for z in 0..n {
                    let (zx, zy) = (self.mul(z, x), self.mul(z, y));
                    if self.add_opt(zx, zy) != Some(self.mul(z, xy)) {
                        rep.violate(
                            Law::Axiom(8),
                            alloc::vec![x, y, z],
                            format!(
                                "z·(x+y) ≠ z·x + z·y at x={}, y={}, z={}",
                                self.fmt_el(x),
                                self.fmt_el(y),
                                self.fmt_el(z)
                            ),
                        );
                    }
                    let (xz, yz) = (self.mul(x, z), self.mul(y, z));
                    if self.add_opt(xz, yz) != Some(self.mul(xy, z)) {
                        rep.violate(
                            Law::Axiom(9),
                            alloc::vec![x, y, z],
                            format!(
                                "(x+y)·z ≠ x·z + y·z at x={}, y={}, z={}",
                                self.fmt_el(x),
                                self.fmt_el(y),
                                self.fmt_el(z)
                            ),
                        );
                    }
                }
            }
        }

        // (10)-(11) annihilation.
        for x in 0..n {
            if self.mul(self.zero, x) != self.zero {
                rep.violate(Law::Axiom(10), alloc::vec![x], format!("0·{} ≠ 0", self.fmt_el(x)));
            }
            if self.mul(x, self.zero) != self.zero {
                rep.violate(Law::Axiom(11), alloc::vec![x], format!("{}·0 ≠ 0", self.fmt_el(x)));
            }
        }

        // (12)-(14) star axioms.
        for x in 0..n {
            let s = self.star(x);
            if !self.leq(self.one, s) {
                rep.violate(
                    Law::Axiom(12),
                    alloc::vec![x],
                    format!("1 ≤ {}* fails ({}* = {})", self.fmt_el(x), self.fmt_el(x), self.fmt_el(s)),
                );
            }
            if !self.leq(self.mul(x, s), s) {
                rep.violate(
                    Law::Axiom(13),
                    alloc::vec![x],
                    format!("{}·{}* ≤ {}* fails", self.fmt_el(x), self.fmt_el(x), self.fmt_el(x)),
                );
            }
            if !self.leq(self.mul(s, x), s) {
                rep.violate(
                    Law::Axiom(14),
                    alloc::vec![x],
                    format!("{}*·{} ≤ {}* fails", self.fmt_el(x), self.fmt_el(x), self.fmt_el(x)),
                );
            }
        }

        // (15)-(16) star induction, over all pairs (a, x).
        for a in 0..n {
            for x in 0..n {
                if self.leq(self.mul(a, x), x) && !self.leq(self.mul(self.star(a), x), x) {
                    rep.violate(
                        Law::Axiom(15),
                        alloc::vec![a, x],
                        format!(
                            "a·x ≤ x but a*·x ≰ x at a={}, x={}",
                            self.fmt_el(a),
                            self.fmt_el(x)
                        ),
                    );
                }
                if self.leq(self.mul(x, a), x) && !self.leq(self.mul(x, self.star(a)), x) {
                    rep.violate(
                        Law::Axiom(16),
                        alloc::vec![a, x],
                        format!(
                            "x·a ≤ x but x·a* ≰ x at a={}, x={}",
                            self.fmt_el(a),
                            self.fmt_el(x)
                        ),
                    );
                }
            }
        }

        rep
    }

    /// [`verify_pka`](Self::verify_pka) plus totality of `+`.
    pub fn verify_total_ka(&self, opts: VerifyOptions) -> AxiomReport {
        let mut rep = self.verify_pka(opts);
        let n = self.n();
        for x in 0..n {
            for y in x..n {
                if !self.summable(x, y) {
                    rep.violate(
                        Law::Totality,
                        alloc::vec![x, y],
                        format!("{}↓{} fails", self.fmt_el(x), self.fmt_el(y)),
                    );
                }
            }
        }
        rep
    }

    /// Checks star-continuity: for all `a, b, c` the element `a·b*·c` is the
    /// least upper bound of the finitely many distinct `a·bⁿ·c`.
    ///
    /// Reports the first failing witness per half.
    pub fn verify_star_continuity(&self, _opts: VerifyOptions) -> AxiomReport {
        let n = self.n();
        let mut rep = AxiomReport::new();
        if n > QUAD_LOOP_SOFT_LIMIT {
            rep.warn(format!(
                "carrier size {n} exceeds soft limit {QUAD_LOOP_SOFT_LIMIT} for quadruple loops"
            ));
        }
        let mut upper_done = false;
        let mut least_done = false;
        for b in 0..n {
            let pows = self.powers(b).list;
            let sb = self.star(b);
            for a in 0..n {
                for c in 0..n {
                    let abstar_c = self.mul(self.mul(a, sb), c);
                    let abnc: Vec<usize> =
                        pows.iter().map(|&p| self.mul(self.mul(a, p), c)).collect();
                    if !upper_done {
                        for (i, &v) in abnc.iter().enumerate() {
                            if !self.leq(v, abstar_c) {
                                rep.violate(
                                    Law::StarUpper,
                                    alloc::vec![a, b, c, i],
                                    format!(
                                        "a·b^{i}·c ≰ a·b*·c at a={}, b={}, c={}",
                                        self.fmt_el(a),
                                        self.fmt_el(b),
                                        self.fmt_el(c)
                                    ),
                                );
                                upper_done = true;
                                break;
                            }
                        }
                    }
                    if !least_done {
                        for w in 0..n {
                            if abnc.iter().all(|&v| self.leq(v, w)) && !self.leq(abstar_c, w) {
                                rep.violate(
                                    Law::StarLeast,
                                    alloc::vec![a, b, c, w],
                                    format!(
                                        "all a·bⁿ·c ≤ w but a·b*·c ≰ w at a={}, b={}, c={}, w={}",
                                        self.fmt_el(a),
                                        self.fmt_el(b),
                                        self.fmt_el(c),
                                        self.fmt_el(w)
                                    ),
                                );
                                least_done = true;
                                break;
                            }
                        }
                    }
                    if upper_done && least_done {
                        return rep;
                    }
                }
            }
        }
        rep
    }
}
