//! Exact counts of `K(r, n)`.
//!
//! Three independent routes are provided: the closed double sum, the
//! iterated decomposition over the position of `n` (via `|K_L|`), and an
//! exhaustive sweep of `S_n`. All arithmetic is on `BigInt`.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::perm::{avoids_builtin_pair, Permutation};
use crate::report::Check;

/// Largest `n` the exhaustive routines accept unless overridden.
pub const DEFAULT_SEARCH_LIMIT: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CountError {
    #[error("need 0 <= r <= n, got r={r}, n={n}")]
    OutOfRange { r: usize, n: usize },
    #[error("n={n} exceeds the exhaustive search limit {limit}")]
    SearchLimit { n: usize, limit: usize },
}

fn check_rn(r: usize, n: usize) -> Result<(), CountError> {
    if r > n {
        Err(CountError::OutOfRange { r, n })
    } else {
        Ok(())
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `(m)_i = m (m-1) … (m-i+1)`; the empty product is 1.
pub fn falling_factorial(m: i64, i: usize) -> BigInt {
    let mut acc = BigInt::one();
    let mut f = BigInt::from(m);
    for _ in 0..i {
        acc *= &f;
        f -= 1;
    }
    acc
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Pascal's triangle and factorials up to a fixed size, shared across the
/// many closed-form evaluations of a table build.
struct Tables {
    pascal: Vec<Vec<BigInt>>,
    fact: Vec<BigInt>,
}

impl Tables {
    fn up_to(n: usize) -> Self {
        let mut pascal: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
        for m in 0..=n {
            let mut row = vec![BigInt::one(); m + 1];
            for k in 1..m {
                row[k] = &pascal[m - 1][k - 1] + &pascal[m - 1][k];
            }
            pascal.push(row);
        }
        let mut fact = vec![BigInt::one()];
        for k in 1..=n {
            let next = &fact[k - 1] * k;
            fact.push(next);
        }
        Self { pascal, fact }
    }

    fn binom(&self, n: usize, k: usize) -> &BigInt {
        &self.pascal[n][k]
    }

    fn k_closed(&self, r: usize, n: usize) -> BigInt {
        if n == 0 {
            return BigInt::one();
        }
        let s = n - r;
        let mut total = &self.fact[r] * &self.fact[s];
        let mut ff_r = BigInt::one();
        for i in 1..=r {
            let mut inner = BigInt::zero();
            let mut ff_s = BigInt::one();
            for j in 1..=s {
                // n-i-j >= r-i because j <= n-r
                inner += self.binom(n - i - j, r - i) * &ff_s;
                ff_s *= s - (j - 1);
            }
            total += inner * &ff_r;
            ff_r *= r - (i - 1);
        }
        total
    }

    fn kl_closed(&self, r: usize, n: usize) -> BigInt {
        if r == n {
            return self.fact[r].clone();
        }
        let mut total = BigInt::zero();
        let mut ff_r = BigInt::one();
        for i in 1..=r {
            total += self.binom(n - i - 1, r - i) * &ff_r;
            ff_r *= r - (i - 1);
        }
        total
    }
}

/// `k(r, n)` from the closed double sum, with `k(0, 0) = 1`.
pub fn k_closed(r: usize, n: usize) -> Result<BigInt, CountError> {
    check_rn(r, n)?;
    Ok(Tables::up_to(n).k_closed(r, n))
}

/// `|K_L(r, n)|`, the members of `K(r, n)` with `n` among the first `r`
/// positions. `r = n` gives `r!`; `r = 0 < n` is the empty sum.
pub fn kl_closed(r: usize, n: usize) -> Result<BigInt, CountError> {
    check_rn(r, n)?;
    Ok(Tables::up_to(n).kl_closed(r, n))
}

/// `k(r, n) = Σ_{j=0}^{n-r} (n-r)_j · |K_L(r, n-j)|`.
pub fn k_via_corollary(r: usize, n: usize) -> Result<BigInt, CountError> {
    check_rn(r, n)?;
    let t = Tables::up_to(n);
    let s = n - r;
    Ok((0..=s)
        .map(|j| falling_factorial(s as i64, j) * t.kl_closed(r, n - j))
        .sum())
}

/// `a(r, s) = k(r, r+s) / (r! s!) - 1`.
pub fn a_value(r: usize, s: usize) -> BigRational {
    let t = Tables::up_to(r + s);
    a_from(&t, r, s)
}

fn a_from(t: &Tables, r: usize, s: usize) -> BigRational {
    let k = t.k_closed(r, r + s);
    BigRational::new(k, &t.fact[r] * &t.fact[s]) - BigRational::one()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecursionViolation {
    pub r: usize,
    pub s: usize,
    pub value: BigRational,
    pub recurrence: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecursionReport {
    pub r_max: usize,
    pub s_max: usize,
    pub cells_checked: usize,
    pub violations: Vec<RecursionViolation>,
}

impl RecursionReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `a(r,s) = a(r,s-1) + a(r-1,s) - a(r-1,s-1) + C(r+s-2, r-1)/(r! s!)`
/// on `1..=r_max × 1..=s_max`, together with the zero boundary rows.
pub fn check_recursion(r_max: usize, s_max: usize) -> RecursionReport {
    let t = Tables::up_to(r_max + s_max);
    let a: Vec<Vec<BigRational>> = (0..=r_max)
        .map(|r| (0..=s_max).map(|s| a_from(&t, r, s)).collect())
        .collect();
    let mut violations = Vec::new();
    let mut cells = 0;
    for (r, row) in a.iter().enumerate() {
        for (s, value) in row.iter().enumerate() {
            cells += 1;
            let recurrence = if r == 0 || s == 0 {
                BigRational::zero()
            } else {
                let source = BigRational::new(
                    t.binom(r + s - 2, r - 1).clone(),
                    &t.fact[r] * &t.fact[s],
                );
                &a[r][s - 1] + &a[r - 1][s] - &a[r - 1][s - 1] + source
            };
            if *value != recurrence {
                violations.push(RecursionViolation { r, s, value: value.clone(), recurrence });
            }
        }
    }
    RecursionReport { r_max, s_max, cells_checked: cells, violations }
}

/// Exhaustive sweeps over `S_n` in lexicographic order, refusing `n` above
/// a configurable limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Exhaustive {
    limit: usize,
}

impl Default for Exhaustive {
    fn default() -> Self {
        Self { limit: DEFAULT_SEARCH_LIMIT }
    }
}

impl Exhaustive {
    pub fn with_limit(limit: usize) -> Self {
        Self { limit }
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    fn guard(&self, r: usize, n: usize) -> Result<(), CountError> {
        check_rn(r, n)?;
        if n > self.limit {
            return Err(CountError::SearchLimit { n, limit: self.limit });
        }
        Ok(())
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(&self, n: usize) -> Result<impl Iterator<Item = Permutation>, CountError> {
        self.guard(0, n)?;
        Ok((1..=n).permutations(n).map(Permutation::from_vec_unchecked))
    }

    /// `K(r, n)` in lexicographic order.
    pub fn enumerate_k(&self, r: usize, n: usize) -> Result<Vec<Permutation>, CountError> {
        self.guard(r, n)?;
        Ok((1..=n)
            .permutations(n)
            .filter(|w| avoids_builtin_pair(w, r))
            .map(Permutation::from_vec_unchecked)
            .collect())
    }

    /// `|K(r, n)|` without materialising the set. The sweep is split by the
    /// leading value and run in parallel.
    pub fn count(&self, r: usize, n: usize) -> Result<BigInt, CountError> {
        self.guard(r, n)?;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let total: u64 = (1..=n)
            .into_par_iter()
            .map(|first| {
                let rest: Vec<usize> = (1..=n).filter(|&v| v != first).collect();
                let mut buf = vec![first; n];
                rest.into_iter()
                    .permutations(n - 1)
                    .filter(|tail| {
                        buf[1..].copy_from_slice(tail);
                        avoids_builtin_pair(&buf, r)
                    })
                    .count() as u64
            })
            .sum();
        Ok(BigInt::from(total))
    }

    /// `(K_L(r, n), K_R(r, n))`, split on whether `n` sits at a position `<= r`.
    pub fn split_by_max(
        &self,
        r: usize,
        n: usize,
    ) -> Result<(Vec<Permutation>, Vec<Permutation>), CountError> {
        Ok(self
            .enumerate_k(r, n)?
            .into_iter()
            .partition(|w| w.position_of(n).is_some_and(|p| p <= r)))
    }

    /// Splits `K_L(r, n)` into the classes `S(i)`, `i` being the smallest
    /// value right of position `r`. Every `i` in `1..=r` has an entry.
    pub fn partition_by_smallest_right(
        &self,
        r: usize,
        n: usize,
    ) -> Result<BTreeMap<usize, Vec<Permutation>>, CountError> {
        if r == 0 || r >= n {
            return Err(CountError::OutOfRange { r, n });
        }
        let (left, _) = self.split_by_max(r, n)?;
        let mut classes: BTreeMap<usize, Vec<Permutation>> = (1..=r).map(|i| (i, Vec::new())).collect();
        for w in left {
            let i = smallest_right(&w, r);
            classes.entry(i).or_default().push(w);
        }
        Ok(classes)
    }
}

fn smallest_right(w: &Permutation, r: usize) -> usize {
    w.values()[r..].iter().copied().min().unwrap_or(usize::MAX)
}

/// `|S(i)| = C(n-i-1, r-i) · (r)_{i-1}` for `1 <= i <= r < n`.
pub fn class_size(r: usize, n: usize, i: usize) -> BigInt {
    if i == 0 || i > r || r >= n {
        return BigInt::zero();
    }
    binomial((n - i - 1) as u64, (r - i) as i64) * falling_factorial(r as i64, i - 1)
}

/// `k(r, n)` for `0 <= r <= n`, `1 <= n <= n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    n_max: usize,
    // keyed (n, r) so iteration follows the output order
    entries: BTreeMap<(usize, usize), BigInt>,
}

#[derive(Serialize)]
struct TableRow {
    r: usize,
    n: usize,
    k: String,
}

impl CountTable {
    pub fn build(n_max: usize) -> Self {
        let t = Tables::up_to(n_max);
        let entries = (1..=n_max)
            .flat_map(|n| (0..=n).map(move |r| (n, r)))
            .map(|(n, r)| ((n, r), t.k_closed(r, n)))
            .collect();
        Self { n_max, entries }
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn get(&self, r: usize, n: usize) -> Option<&BigInt> {
        self.entries.get(&(n, r))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `(r, n, k)` sorted by `(n, r)`, optionally keeping only `r <= r_max`.
    pub fn rows(&self, r_max: Option<usize>) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.entries
            .iter()
            .filter(move |((_, r), _)| r_max.is_none_or(|m| *r <= m))
            .map(|(&(n, r), k)| (r, n, k))
    }

    /// Symmetry `k(r,n) = k(n-r,n)` and the factorial edges.
    pub fn is_consistent(&self) -> bool {
        self.entries.iter().all(|(&(n, r), k)| {
            self.get(n - r, n) == Some(k) && (r != 0 || *k == factorial(n))
        })
    }

    pub fn to_csv(&self, r_max: Option<usize>) -> String {
        let mut out = String::from("r,n,k\n");
        for (r, n, k) in self.rows(r_max) {
            out.push_str(&format!("{r},{n},{k}\n"));
        }
        out
    }

    /// Counts are decimal strings so consumers need no wide integers.
    pub fn to_json(&self, r_max: Option<usize>) -> String {
        let rows: Vec<TableRow> = self
            .rows(r_max)
            .map(|(r, n, k)| TableRow { r, n, k: k.to_string() })
            .collect();
        serde_json::to_string_pretty(&rows).expect("rows serialize")
    }
}

/// Exhaustive count against the closed form and the decomposition route for
/// every `0 <= r <= n <= n_max`.
pub fn oracle_checks(n_max: usize, search: &Exhaustive) -> Result<Vec<Check>, CountError> {
    let mut mismatches = Vec::new();
    let mut cells = 0;
    for n in 0..=n_max {
        for r in 0..=n {
            let brute = search.count(r, n)?;
            let closed = k_closed(r, n)?;
            let corollary = k_via_corollary(r, n)?;
            cells += 1;
            if brute != closed || closed != corollary {
                mismatches.push(format!("k({r},{n}): brute {brute}, closed {closed}, corollary {corollary}"));
            }
        }
    }
    let detail = if mismatches.is_empty() {
        format!("{cells} cells exact, max n tested {n_max}")
    } else {
        mismatches.join("; ")
    };
    Ok(vec![Check::new("oracle: brute = closed = corollary", mismatches.is_empty(), detail)])
}

/// The decomposition, fiber, partition and rotation facts, checked by
/// enumeration for every `1 <= n <= n_max` and every admissible `r`.
pub fn structural_checks(n_max: usize, search: &Exhaustive) -> Result<Vec<Check>, CountError> {
    let mut failures: BTreeMap<&'static str, Vec<String>> = BTreeMap::new();
    let mut note = |key: &'static str, ok: bool, what: String| {
        let list = failures.entry(key).or_default();
        if !ok {
            list.push(what);
        }
    };

    for n in 1..=n_max {
        let sets: Vec<Vec<Permutation>> = (0..=n).map(|r| search.enumerate_k(r, n)).collect::<Result<_, _>>()?;
        let prev: Vec<BTreeSet<Permutation>> = (0..n)
            .map(|r| search.enumerate_k(r, n - 1).map(|v| v.into_iter().collect()))
            .collect::<Result<_, _>>()?;

        for r in 0..=n {
            let k = k_closed(r, n)?;

            if r == 0 {
                let universal = search.all(n)?.all(|w| w.in_k(0) == Ok(true) && w.in_k(n) == Ok(true));
                note("boundary positions avoid", universal, format!("n={n}"));
            }

            let (kl, kr): (Vec<_>, Vec<_>) =
                sets[r].iter().cloned().partition(|w| w.position_of(n).is_some_and(|p| p <= r));
            note(
                "K_L + K_R = k(r,n)",
                BigInt::from(kl.len() + kr.len()) == k && BigInt::from(kl.len()) == kl_closed(r, n)?,
                format!("r={r} n={n}"),
            );

            // images under removal of n
            let right_ok = kr.iter().all(|w| r < n && prev[r].contains(&w.remove_max().unwrap()));
            let left_ok = kl.iter().all(|w| r >= 1 && prev[r - 1].contains(&w.remove_max().unwrap()));
            note("remove_max lands in K(r|r-1, n-1)", right_ok && left_ok, format!("r={r} n={n}"));

            if r < n {
                let mut fibers: BTreeMap<Permutation, usize> = BTreeMap::new();
                for w in &kr {
                    *fibers.entry(w.remove_max().unwrap()).or_default() += 1;
                }
                let ok = fibers.keys().eq(prev[r].iter()) && fibers.values().all(|&c| c == n - r);
                note("fiber size n-r over K_R", ok, format!("r={r} n={n}"));

                let preserved = search.all(n - 1)?.all(|w| {
                    let before = w.in_k(r).unwrap();
                    (r + 1..=n).all(|pos| w.insert_max(pos).unwrap().in_k(r).unwrap() == before)
                });
                note("insert_max right of r preserves K", preserved, format!("r={r} n={n}"));
            }

            if r >= 1 && r < n {
                let classes = search.partition_by_smallest_right(r, n)?;
                let sum: usize = classes.values().map(Vec::len).sum();
                let sizes_ok = classes
                    .iter()
                    .all(|(&i, members)| BigInt::from(members.len()) == class_size(r, n, i));
                note("|S(i)| = C(n-i-1,r-i)(r)_{i-1}", sizes_ok && sum == kl.len(), format!("r={r} n={n}"));
            }

            let rotated: BTreeSet<Permutation> = sets[r].iter().map(Permutation::rotate180).collect();
            let target: BTreeSet<Permutation> = sets[n - r].iter().cloned().collect();
            note("rotate180: K(r,n) -> K(n-r,n)", rotated == target && rotated.len() == sets[r].len(), format!("r={r} n={n}"));
        }
    }

    Ok(failures
        .into_iter()
        .map(|(name, bad)| {
            let detail = if bad.is_empty() {
                format!("all n <= {n_max}")
            } else {
                format!("fails at {}", bad.join(", "))
            };
            Check::new(name, bad.is_empty(), detail)
        })
        .collect())
}

/// `k(r, n) = k(n-r, n)` and `k(r, n) >= r!(n-r)!` from the closed form.
pub fn count_symmetry_checks(n_max: usize) -> Vec<Check> {
    let t = Tables::up_to(n_max);
    let mut asym = Vec::new();
    let mut below = Vec::new();
    for n in 0..=n_max {
        for r in 0..=n {
            let k = t.k_closed(r, n);
            if k != t.k_closed(n - r, n) {
                asym.push(format!("({r},{n})"));
            }
            if k < &t.fact[r] * &t.fact[n - r] {
                below.push(format!("({r},{n})"));
            }
        }
    }
    let detail = |bad: &[String]| if bad.is_empty() { format!("all n <= {n_max}") } else { bad.join(" ") };
    vec![
        Check::new("k(r,n) = k(n-r,n)", asym.is_empty(), detail(&asym)),
        Check::new("k(r,n) >= r!(n-r)!", below.is_empty(), detail(&below)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigInt {
        BigInt::from(v)
    }

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(falling_factorial(5, 2), big(20));
        assert_eq!(falling_factorial(-3, 0), big(1));
        assert_eq!(falling_factorial(3, 5), big(0));
        assert_eq!(falling_factorial(-2, 2), big(6));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), big(6));
        assert_eq!(binomial(3, -1), big(0));
        assert_eq!(binomial(3, 4), big(0));
        assert_eq!(binomial(0, 0), big(1));
        let t = Tables::up_to(40);
        for n in 0..=40u64 {
            for k in 0..=n as i64 {
                assert_eq!(&binomial(n, k), t.binom(n as usize, k as usize));
            }
        }
    }

    #[test]
    fn closed_form_table_values() {
        assert_eq!(k_closed(2, 5).unwrap(), big(47));
        assert_eq!(k_closed(4, 9).unwrap(), big(14359));
        assert_eq!(k_closed(2, 4).unwrap(), big(14));
        assert_eq!(k_closed(0, 0).unwrap(), big(1));
        assert_eq!(k_closed(0, 21).unwrap(), factorial(21));
        assert_eq!(k_closed(3, 2), Err(CountError::OutOfRange { r: 3, n: 2 }));
    }

    #[test]
    fn left_counts() {
        assert_eq!(kl_closed(1, 3).unwrap(), big(1));
        assert_eq!(kl_closed(2, 4).unwrap(), big(4));
        for r in 0..8 {
            assert_eq!(kl_closed(r, r).unwrap(), factorial(r));
        }
        assert_eq!(kl_closed(0, 3).unwrap(), big(0));
    }

    #[test]
    fn corollary_route() {
        assert_eq!(k_via_corollary(1, 3).unwrap(), big(5));
        assert_eq!(k_via_corollary(2, 5).unwrap(), big(47));
        for r in 0..7 {
            assert_eq!(k_via_corollary(r, r).unwrap(), factorial(r));
        }
        for n in 0..=20 {
            for r in 0..=n {
                assert_eq!(k_via_corollary(r, n).unwrap(), k_closed(r, n).unwrap(), "r={r} n={n}");
            }
        }
    }

    #[test]
    fn enumeration_small_cases() {
        let search = Exhaustive::default();
        let k13: Vec<String> = search.enumerate_k(1, 3).unwrap().iter().map(|w| w.to_string()).collect();
        assert_eq!(k13, ["123", "132", "213", "231", "321"]);
        assert_eq!(search.enumerate_k(0, 3).unwrap().len(), 6);
        assert_eq!(search.enumerate_k(2, 4).unwrap().len(), 14);
        assert_eq!(search.enumerate_k(0, 0).unwrap(), vec![Permutation::identity(0)]);
        assert_eq!(
            search.enumerate_k(1, 11),
            Err(CountError::SearchLimit { n: 11, limit: 10 })
        );
        assert!(Exhaustive::with_limit(11).count(0, 11).is_ok_and(|c| c == factorial(11)));
    }

    #[test]
    fn brute_counts() {
        let search = Exhaustive::default();
        assert_eq!(search.count(2, 5).unwrap(), big(47));
        assert_eq!(search.count(3, 7).unwrap(), big(676));
        for n in 0..=6 {
            assert_eq!(search.count(n, n).unwrap(), factorial(n));
            for r in 0..=n {
                assert_eq!(search.count(r, n).unwrap(), BigInt::from(search.enumerate_k(r, n).unwrap().len()));
            }
        }
    }

    #[test]
    fn smallest_right_classes() {
        let search = Exhaustive::default();
        let w: Permutation = "391276854".parse().unwrap();
        let classes = search.partition_by_smallest_right(6, 9).unwrap();
        assert!(classes[&4].contains(&w));

        let c13 = search.partition_by_smallest_right(1, 3).unwrap();
        assert_eq!(c13.len(), 1);
        assert_eq!(c13[&1].len(), 1);

        let c24 = search.partition_by_smallest_right(2, 4).unwrap();
        assert_eq!((c24[&1].len(), c24[&2].len()), (2, 2));
        assert_eq!((class_size(2, 4, 1), class_size(2, 4, 2)), (big(2), big(2)));

        assert!(search.partition_by_smallest_right(3, 3).is_err());
        assert!(search.partition_by_smallest_right(0, 3).is_err());
    }

    #[test]
    fn a_values() {
        assert_eq!(a_value(1, 1), ratio(1, 1));
        assert_eq!(a_value(2, 2), ratio(5, 2));
        assert_eq!(a_value(1, 2), ratio(3, 2));
        assert_eq!(a_value(0, 0), ratio(0, 1));
        for r in 0..8 {
            assert_eq!(a_value(r, 0), ratio(0, 1));
            assert_eq!(a_value(0, r), ratio(0, 1));
            for s in 0..8 {
                assert_eq!(a_value(r, s), a_value(s, r));
            }
        }
    }

    #[test]
    fn recursion_holds() {
        let report = check_recursion(12, 12);
        assert!(report.passed(), "{:?}", report.violations.first());
        assert_eq!(report.cells_checked, 13 * 13);
        // cell (2,2): 5/2 = 3/2 + 3/2 - 1 + 1/2
        assert_eq!(ratio(3, 2) + ratio(3, 2) - ratio(1, 1) + ratio(1, 2), a_value(2, 2));
        assert!(check_recursion(1, 1).passed());
    }

    #[test]
    fn table_build_and_serialization() {
        let table = CountTable::build(9);
        assert!(table.is_consistent());
        assert_eq!(table.get(1, 9), Some(&big(109601)));
        assert_eq!(table.get(5, 9), table.get(4, 9));
        assert_eq!(table.get(4, 9), Some(&big(14359)));
        assert_eq!(table.get(0, 0), None);

        let t1 = CountTable::build(1);
        assert_eq!(t1.to_csv(None), "r,n,k\n0,1,1\n1,1,1\n");
        let json: serde_json::Value = serde_json::from_str(&t1.to_json(None)).unwrap();
        assert_eq!(json, serde_json::json!([{"r":0,"n":1,"k":"1"},{"r":1,"n":1,"k":"1"}]));

        let csv = CountTable::build(3).to_csv(Some(1));
        assert_eq!(csv, "r,n,k\n0,1,1\n1,1,1\n0,2,2\n1,2,2\n0,3,6\n1,3,5\n");
    }

    #[test]
    fn verification_helpers_pass() {
        let search = Exhaustive::default();
        for c in oracle_checks(6, &search).unwrap() {
            assert!(c.passed, "{c}");
        }
        for c in structural_checks(5, &search).unwrap() {
            assert!(c.passed, "{c}");
        }
        for c in count_symmetry_checks(30) {
            assert!(c.passed, "{c}");
        }
    }
}
