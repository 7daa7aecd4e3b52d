//! Exhaustive criterion optimization over all `r`-subsets of the full
//! factorial that contain the all-ones run.
//!
//! Every design is level-switch equivalent to one containing the all-ones
//! run, and all three criteria are invariant under level switching, so
//! fixing that run is sound and cuts `C(2^s, r)` candidates down to
//! `C(2^s - 1, r - 1)`.
//!
//! Enumeration walks subsets in ascending lexicographic order of their
//! point codes, maintaining the Gram matrix incrementally. Parallel runs
//! partition the space by the first free point, round-robin; each worker
//! keeps its own best and the merge uses the same total order (value, then
//! canonical key) as the serial scan, so the result is independent of the
//! worker count.

use num_bigint::BigInt;
use std::cmp::Ordering;

use super::values::{lambda_min_of_gram, LambdaMin};
use super::{CriterionValue, OptimalityCriterion, SearchResult};
use crate::classify::classify;
use crate::design::Design;
use crate::error::{Error, Result};
use crate::linalg::{det_i64, SquareMatrix};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

/// Default cap on the number of candidate subsets.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

const MAX_SEARCH_FACTORS: usize = 6;

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc
}

/// Point-outer-product table: for each point code, the `n x n` rank-one
/// contribution of the row `(1, x_1, .., x_s)` to the Gram matrix.
fn outer_table(s: usize) -> Vec<Vec<i64>> {
    let n = s + 1;
    (0..1u32 << s)
        .map(|code| {
            let mut row = vec![1i64; n];
            for j in 0..s {
                row[j + 1] = if (code >> j) & 1 == 1 { -1 } else { 1 };
            }
            let mut outer = vec![0i64; n * n];
            for a in 0..n {
                for b in 0..n {
                    outer[a * n + b] = row[a] * row[b];
                }
            }
            outer
        })
        .collect()
}

struct Enumerator {
    s: usize,
    r: usize,
    outers: Vec<Vec<i64>>,
}

impl Enumerator {
    fn new(s: usize, r: usize) -> Self {
        Self {
            s,
            r,
            outers: outer_table(s),
        }
    }

    fn run<F: FnMut(&[u32], &[i64])>(&self, worker: usize, num_workers: usize, leaf: &mut F) {
        let mut gram = self.outers[0].clone();
        let mut combo = vec![0u32; self.r];
        if self.r == 1 {
            if worker == 0 {
                leaf(&combo, &gram);
            }
            return;
        }
        self.descend(1, 1, &mut combo, &mut gram, worker, num_workers, leaf);
    }

    #[allow(clippy::too_many_arguments)]
    fn descend<F: FnMut(&[u32], &[i64])>(
        &self,
        depth: usize,
        start: u32,
        combo: &mut Vec<u32>,
        gram: &mut [i64],
        worker: usize,
        num_workers: usize,
        leaf: &mut F,
    ) {
        let total = 1u32 << self.s;
        let remaining = (self.r - depth) as u32;
        for code in start..=(total - remaining) {
            if depth == 1 && (code as usize - 1) % num_workers != worker {
                continue;
            }
            let outer = &self.outers[code as usize];
            for (g, o) in gram.iter_mut().zip(outer) {
                *g += o;
            }
            combo[depth] = code;
            if depth + 1 == self.r {
                leaf(combo, gram);
            } else {
                self.descend(depth + 1, code + 1, combo, gram, worker, num_workers, leaf);
            }
            for (g, o) in gram.iter_mut().zip(outer) {
                *g -= o;
            }
        }
    }
}

fn check_space(s: usize, r: usize, budget: u128) -> Result<u128> {
    if s == 0 || s > MAX_SEARCH_FACTORS {
        return Err(Error::TooManyFactors {
            factors: s,
            max: MAX_SEARCH_FACTORS,
        });
    }
    if r == 0 {
        return Err(Error::RunsTooSmall { r: 0, min: 1 });
    }
    if (r as u64) > 1u64 << s {
        return Err(Error::RunsExceedSpace {
            r: r as u64,
            space: 1u64 << s,
        });
    }
    let candidates = binomial((1u64 << s) - 1, (r - 1) as u64);
    if candidates > budget {
        return Err(Error::BudgetExceeded { candidates, budget });
    }
    Ok(candidates)
}

struct Best<V> {
    value: V,
    combo: Vec<u32>,
    count: u64,
}

/// D search: maximize `|det(M'M)|`, compared in machine words (every value
/// here is bounded by Hadamard's inequality well inside `i64`).
fn scan_d(enumerator: &Enumerator, worker: usize, num_workers: usize) -> (Option<Best<i64>>, u64) {
    let n = enumerator.s + 1;
    let mut scratch = vec![0i64; n * n];
    let mut best: Option<Best<i64>> = None;
    let mut evaluated = 0u64;
    enumerator.run(worker, num_workers, &mut |combo, gram| {
        evaluated += 1;
        scratch.copy_from_slice(gram);
        let value = det_i64(&mut scratch, n).abs();
        match &mut best {
            None => {
                best = Some(Best {
                    value,
                    combo: combo.to_vec(),
                    count: 1,
                })
            }
            Some(b) => match value.cmp(&b.value) {
                Ordering::Greater => {
                    b.value = value;
                    b.combo.copy_from_slice(combo);
                    b.count = 1;
                }
                Ordering::Equal => b.count += 1,
                Ordering::Less => {}
            },
        }
    });
    (best, evaluated)
}

/// A search: minimize `trace(adj G)/det G` over nonsingular `G`, compared
/// by cross multiplication in `i128`.
fn scan_a(
    enumerator: &Enumerator,
    worker: usize,
    num_workers: usize,
) -> (Option<Best<(i64, i64)>>, u64) {
    let n = enumerator.s + 1;
    let mut scratch = vec![0i64; n * n];
    let mut minor = vec![0i64; (n - 1) * (n - 1)];
    let mut best: Option<Best<(i64, i64)>> = None;
    let mut evaluated = 0u64;
    enumerator.run(worker, num_workers, &mut |combo, gram| {
        evaluated += 1;
        scratch.copy_from_slice(gram);
        let det = det_i64(&mut scratch, n).abs();
        if det == 0 {
            return;
        }
        let mut tr_adj = 0i64;
        for k in 0..n {
            let mut idx = 0;
            for i in 0..n {
                if i == k {
                    continue;
                }
                for j in 0..n {
                    if j == k {
                        continue;
                    }
                    minor[idx] = gram[i * n + j];
                    idx += 1;
                }
            }
            tr_adj += det_i64(&mut minor, n - 1);
        }
        let candidate = (tr_adj, det);
        let better = match &best {
            None => true,
            Some(b) => {
                // candidate < best  <=>  tr_c * det_b < tr_b * det_c
                i128::from(candidate.0) * i128::from(b.value.1)
                    < i128::from(b.value.0) * i128::from(candidate.1)
            }
        };
        if better {
            best = Some(Best {
                value: candidate,
                combo: combo.to_vec(),
                count: 1,
            });
        } else if let Some(b) = &mut best {
            if i128::from(candidate.0) * i128::from(b.value.1)
                == i128::from(b.value.0) * i128::from(candidate.1)
            {
                b.count += 1;
            }
        }
    });
    (best, evaluated)
}

/// Sylvester-criterion test that every leading principal minor of the
/// integer matrix is positive, via Bareiss (whose pivots run through
/// exactly those minors). No row swaps: a nonpositive pivot decides.
fn leading_minors_all_positive(a: &mut [i128], n: usize) -> bool {
    let mut prev: i128 = 1;
    for k in 0..n {
        let pivot = a[k * n + k];
        if pivot <= 0 {
            return false;
        }
        if k + 1 == n {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i * n + j] = (a[i * n + j] * pivot - a[i * n + k] * a[k * n + j]) / prev;
            }
            a[i * n + k] = 0;
        }
        prev = pivot;
    }
    true
}

/// Threshold for the E prefilters: a dyadic rational `num/256` strictly
/// below the current best eigenvalue (the incumbent's interval may be
/// degenerate, so "at or below lo" would not be safe). Nonpositive values
/// disable the filters.
fn filter_numerator(lambda: &LambdaMin) -> i64 {
    let scaled = lambda.lo() * BigRational::from_integer(BigInt::from(256));
    scaled.ceil().to_integer().to_i64().unwrap_or(1).max(1) - 1
}

struct EBest {
    value: LambdaMin,
    combo: Vec<u32>,
    count: u64,
    filter_num: i64,
}

/// E search: maximize the smallest eigenvalue, exactly. Cheap integer
/// filters (determinant power bound and a Sylvester test against a rational
/// threshold strictly below the incumbent) reject almost all candidates
/// without touching the algebraic machinery.
fn scan_e(enumerator: &Enumerator, worker: usize, num_workers: usize) -> (Option<EBest>, u64) {
    let n = enumerator.s + 1;
    let mut scratch = vec![0i64; n * n];
    let mut pd_scratch = vec![0i128; n * n];
    let mut best: Option<EBest> = None;
    let mut evaluated = 0u64;
    enumerator.run(worker, num_workers, &mut |combo, gram| {
        evaluated += 1;
        scratch.copy_from_slice(gram);
        let det = det_i64(&mut scratch, n).abs();
        if let Some(b) = &mut best {
            let thr = b.filter_num;
            if thr > 0 {
                // lambda_min <= thr/256 <= lo < lambda*: strictly worse.
                if det == 0 {
                    return;
                }
                let mut det_scaled = i128::from(det);
                for _ in 0..n {
                    det_scaled *= 256;
                }
                let mut thr_pow = 1i128;
                for _ in 0..n {
                    thr_pow *= i128::from(thr);
                }
                if det_scaled < thr_pow {
                    return;
                }
                for (dst, &g) in pd_scratch.iter_mut().zip(gram.iter()) {
                    *dst = i128::from(g) * 256;
                }
                for k in 0..n {
                    pd_scratch[k * n + k] -= i128::from(thr);
                }
                if !leading_minors_all_positive(&mut pd_scratch, n) {
                    return;
                }
            } else if b.value.is_exact() && b.value.lo().is_zero() && det == 0 {
                // Incumbent is exactly zero; a singular candidate ties.
                b.count += 1;
                return;
            }
        }
        let gram_matrix = SquareMatrix::from_flat(n, gram.to_vec());
        let mut candidate = lambda_min_of_gram(&gram_matrix);
        match &mut best {
            None => {
                let filter_num = filter_numerator(&candidate);
                best = Some(EBest {
                    value: candidate,
                    combo: combo.to_vec(),
                    count: 1,
                    filter_num,
                });
            }
            Some(b) => match candidate.cmp_exact(&mut b.value) {
                Ordering::Greater => {
                    let filter_num = filter_numerator(&candidate);
                    *b = EBest {
                        value: candidate,
                        combo: combo.to_vec(),
                        count: 1,
                        filter_num,
                    };
                }
                Ordering::Equal => b.count += 1,
                Ordering::Less => {}
            },
        }
    });
    (best, evaluated)
}

fn finish(
    s: usize,
    criterion: OptimalityCriterion,
    combo: Vec<u32>,
    count: u64,
    evaluated: u64,
) -> Result<SearchResult> {
    let design = Design::from_masks(s, &combo)?;
    let value = match criterion {
        OptimalityCriterion::D => CriterionValue::D(super::d_value(&design)),
        OptimalityCriterion::A => CriterionValue::A(super::a_value(&design)?),
        OptimalityCriterion::E => CriterionValue::E(super::e_value(&design)),
    };
    let classification = classify(&design);
    Ok(SearchResult {
        design,
        value,
        num_evaluated: evaluated,
        num_maximizers: count,
        classification,
        exhaustive: true,
        seed: None,
    })
}

/// Exhaustive search over the normalized space; see the module docs.
///
/// `budget` defaults to [`DEFAULT_BUDGET`] candidates and `threads` to 1.
/// The result is identical whatever the thread count.
pub fn exhaustive_search(
    s: usize,
    r: usize,
    criterion: OptimalityCriterion,
    budget: Option<u128>,
    threads: usize,
) -> Result<SearchResult> {
    let budget = budget.unwrap_or(DEFAULT_BUDGET);
    check_space(s, r, budget)?;
    let threads = threads.max(1);
    let enumerator = Enumerator::new(s, r);

    match criterion {
        OptimalityCriterion::D => {
            let (bests, evaluated) = run_workers(&enumerator, threads, scan_d);
            let merged = merge(bests, |a, b| a.value.cmp(&b.value));
            let best = merged.ok_or(Error::EmptyDesign)?;
            finish(s, criterion, best.combo, best.count, evaluated)
        }
        OptimalityCriterion::A => {
            let (bests, evaluated) = run_workers(&enumerator, threads, scan_a);
            let merged = merge(bests, |a, b| {
                // minimize: bigger is "less optimal"; order by optimality
                let lhs = i128::from(b.value.0) * i128::from(a.value.1);
                let rhs = i128::from(a.value.0) * i128::from(b.value.1);
                lhs.cmp(&rhs)
            });
            let best = merged.ok_or(Error::Singular)?;
            finish(s, criterion, best.combo, best.count, evaluated)
        }
        OptimalityCriterion::E => {
            let (bests, evaluated) = run_workers_e(&enumerator, threads);
            let mut iter = bests.into_iter().flatten();
            let mut best = iter.next().ok_or(Error::EmptyDesign)?;
            for mut other in iter {
                match other.value.cmp_exact(&mut best.value) {
                    Ordering::Greater => best = other,
                    Ordering::Equal => {
                        best.count += other.count;
                        if other.combo < best.combo {
                            best.combo = other.combo;
                        }
                    }
                    Ordering::Less => {}
                }
            }
            finish(s, criterion, best.combo, best.count, evaluated)
        }
    }
}

type ScanFn<V> = fn(&Enumerator, usize, usize) -> (Option<Best<V>>, u64);

fn run_workers<V: Send>(
    enumerator: &Enumerator,
    threads: usize,
    scan: ScanFn<V>,
) -> (Vec<Option<Best<V>>>, u64) {
    if threads == 1 {
        let (best, evaluated) = scan(enumerator, 0, 1);
        return (vec![best], evaluated);
    }
    let mut results = Vec::with_capacity(threads);
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|w| scope.spawn(move || scan(enumerator, w, threads)))
            .collect();
        for h in handles {
            results.push(h.join().expect("search worker panicked"));
        }
    });
    let evaluated = results.iter().map(|(_, e)| e).sum();
    (results.into_iter().map(|(b, _)| b).collect(), evaluated)
}

fn run_workers_e(enumerator: &Enumerator, threads: usize) -> (Vec<Option<EBest>>, u64) {
    if threads == 1 {
        let (best, evaluated) = scan_e(enumerator, 0, 1);
        return (vec![best], evaluated);
    }
    let mut results = Vec::with_capacity(threads);
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|w| scope.spawn(move || scan_e(enumerator, w, threads)))
            .collect();
        for h in handles {
            results.push(h.join().expect("search worker panicked"));
        }
    });
    let evaluated = results.iter().map(|(_, e)| e).sum();
    (results.into_iter().map(|(b, _)| b).collect(), evaluated)
}

/// Merge worker-local bests under `better_first` (an ordering where
/// `Greater` means more optimal), breaking value ties by canonical key.
fn merge<V>(
    bests: Vec<Option<Best<V>>>,
    better_first: impl Fn(&Best<V>, &Best<V>) -> Ordering,
) -> Option<Best<V>> {
    let mut out: Option<Best<V>> = None;
    for b in bests.into_iter().flatten() {
        match &mut out {
            None => out = Some(b),
            Some(cur) => match better_first(&b, cur) {
                Ordering::Greater => *cur = b,
                Ordering::Equal => {
                    cur.count += b.count;
                    if b.combo < cur.combo {
                        cur.combo = b.combo;
                    }
                }
                Ordering::Less => {}
            },
        }
    }
    out
}

/// Every optimal subset (as ascending point-code lists) for the criterion,
/// over the normalized space. Intended for small spaces; the same budget
/// precheck applies.
pub fn argmax_set(
    s: usize,
    r: usize,
    criterion: OptimalityCriterion,
    budget: Option<u128>,
) -> Result<Vec<Vec<u32>>> {
    let budget = budget.unwrap_or(DEFAULT_BUDGET);
    check_space(s, r, budget)?;
    let enumerator = Enumerator::new(s, r);
    let n = s + 1;
    let mut scratch = vec![0i64; n * n];

    match criterion {
        OptimalityCriterion::D => {
            let mut best: Option<(i64, Vec<Vec<u32>>)> = None;
            enumerator.run(0, 1, &mut |combo, gram| {
                scratch.copy_from_slice(gram);
                let v = det_i64(&mut scratch, n).abs();
                match &mut best {
                    None => best = Some((v, vec![combo.to_vec()])),
                    Some((bv, set)) => match v.cmp(bv) {
                        Ordering::Greater => {
                            *bv = v;
                            set.clear();
                            set.push(combo.to_vec());
                        }
                        Ordering::Equal => set.push(combo.to_vec()),
                        Ordering::Less => {}
                    },
                }
            });
            Ok(best.map(|(_, set)| set).unwrap_or_default())
        }
        OptimalityCriterion::A => {
            let mut minor = vec![0i64; (n - 1) * (n - 1)];
            type ABest = ((i64, i64), Vec<Vec<u32>>);
            let mut best: Option<ABest> = None;
            enumerator.run(0, 1, &mut |combo, gram| {
                scratch.copy_from_slice(gram);
                let det = det_i64(&mut scratch, n).abs();
                if det == 0 {
                    return;
                }
                let mut tr_adj = 0i64;
                for k in 0..n {
                    let mut idx = 0;
                    for i in 0..n {
                        if i == k {
                            continue;
                        }
                        for j in 0..n {
                            if j == k {
                                continue;
                            }
                            minor[idx] = gram[i * n + j];
                            idx += 1;
                        }
                    }
                    tr_adj += det_i64(&mut minor, n - 1);
                }
                match &mut best {
                    None => best = Some(((tr_adj, det), vec![combo.to_vec()])),
                    Some(((bt, bd), set)) => {
                        let lhs = i128::from(tr_adj) * i128::from(*bd);
                        let rhs = i128::from(*bt) * i128::from(det);
                        match lhs.cmp(&rhs) {
                            Ordering::Less => {
                                *bt = tr_adj;
                                *bd = det;
                                set.clear();
                                set.push(combo.to_vec());
                            }
                            Ordering::Equal => set.push(combo.to_vec()),
                            Ordering::Greater => {}
                        }
                    }
                }
            });
            match best {
                Some((_, set)) => Ok(set),
                None => Err(Error::Singular),
            }
        }
        OptimalityCriterion::E => {
            let mut pd_scratch = vec![0i128; n * n];
            let mut best: Option<(LambdaMin, i64, Vec<Vec<u32>>)> = None;
            enumerator.run(0, 1, &mut |combo, gram| {
                scratch.copy_from_slice(gram);
                let det = det_i64(&mut scratch, n).abs();
                if let Some((value, thr, set)) = &mut best {
                    if *thr > 0 {
                        if det == 0 {
                            return;
                        }
                        let mut det_scaled = i128::from(det);
                        let mut thr_pow = 1i128;
                        for _ in 0..n {
                            det_scaled *= 256;
                            thr_pow *= i128::from(*thr);
                        }
                        if det_scaled < thr_pow {
                            return;
                        }
                        for (dst, &g) in pd_scratch.iter_mut().zip(gram.iter()) {
                            *dst = i128::from(g) * 256;
                        }
                        for k in 0..n {
                            pd_scratch[k * n + k] -= i128::from(*thr);
                        }
                        if !leading_minors_all_positive(&mut pd_scratch, n) {
                            return;
                        }
                    } else if value.is_exact() && value.lo().is_zero() && det == 0 {
                        set.push(combo.to_vec());
                        return;
                    }
                }
                let gm = SquareMatrix::from_flat(n, gram.to_vec());
                let mut candidate = lambda_min_of_gram(&gm);
                match &mut best {
                    None => {
                        let thr = filter_numerator(&candidate);
                        best = Some((candidate, thr, vec![combo.to_vec()]));
                    }
                    Some((value, thr, set)) => match candidate.cmp_exact(value) {
                        Ordering::Greater => {
                            *thr = filter_numerator(&candidate);
                            *value = candidate;
                            set.clear();
                            set.push(combo.to_vec());
                        }
                        Ordering::Equal => set.push(combo.to_vec()),
                        Ordering::Less => {}
                    },
                }
            });
            Ok(best.map(|(_, _, set)| set).unwrap_or_default())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(15, 4), 1365);
        assert_eq!(binomial(31, 9), 20_160_075);
        assert_eq!(binomial(5, 9), 0);
    }

    #[test]
    fn d_search_s3_r4_matches_unnormalized_oracle() {
        // Oracle: brute force over all C(8, 4) = 70 subsets, no
        // normalization, naive determinant on the Gram matrix.
        let result = exhaustive_search(3, 4, OptimalityCriterion::D, None, 1).unwrap();
        assert_eq!(result.value.as_d().unwrap(), &BigInt::from(256));
        assert_eq!(result.num_evaluated, 35);
        assert!(result.exhaustive);

        let mut oracle_best = 0i64;
        let n = 4usize;
        for mask in 0u32..256 {
            if mask.count_ones() != 4 {
                continue;
            }
            let masks: Vec<u32> = (0..8).filter(|b| (mask >> b) & 1 == 1).collect();
            let d = Design::from_masks(3, &masks).unwrap();
            let g = crate::linalg::gram_matrix(&d.to_design_matrix());
            let mut buf = g.entries().to_vec();
            oracle_best = oracle_best.max(det_i64(&mut buf, n).abs());
        }
        assert_eq!(BigInt::from(oracle_best), *result.value.as_d().unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        let err = exhaustive_search(5, 10, OptimalityCriterion::D, Some(1000), 1).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }

    #[test]
    fn space_checks() {
        assert!(matches!(
            exhaustive_search(7, 4, OptimalityCriterion::D, None, 1),
            Err(Error::TooManyFactors { .. })
        ));
        assert!(matches!(
            exhaustive_search(3, 9, OptimalityCriterion::D, None, 1),
            Err(Error::RunsExceedSpace { .. })
        ));
    }

    #[test]
    fn parallel_matches_serial() {
        for criterion in [
            OptimalityCriterion::D,
            OptimalityCriterion::A,
            OptimalityCriterion::E,
        ] {
            let serial = exhaustive_search(4, 6, criterion, None, 1).unwrap();
            let parallel = exhaustive_search(4, 6, criterion, None, 3).unwrap();
            assert_eq!(serial.design, parallel.design);
            assert_eq!(serial.num_maximizers, parallel.num_maximizers);
            assert_eq!(serial.num_evaluated, parallel.num_evaluated);
            match (&serial.value, &parallel.value) {
                (CriterionValue::D(a), CriterionValue::D(b)) => assert_eq!(a, b),
                (CriterionValue::A(a), CriterionValue::A(b)) => assert_eq!(a, b),
                (CriterionValue::E(a), CriterionValue::E(b)) => {
                    assert_eq!(a.lo(), b.lo());
                    assert_eq!(a.hi(), b.hi());
                }
                _ => panic!("criterion mismatch"),
            }
        }
    }

    #[test]
    fn winner_is_lexicographically_first() {
        let result = exhaustive_search(3, 4, OptimalityCriterion::D, None, 1).unwrap();
        let set = argmax_set(3, 4, OptimalityCriterion::D, None).unwrap();
        assert_eq!(result.num_maximizers as usize, set.len());
        assert_eq!(result.design.canonical_key(), set[0]);
        let mut sorted = set.clone();
        sorted.sort();
        assert_eq!(set, sorted, "argmax set enumerated in ascending order");
    }

    #[test]
    fn e_search_small() {
        // s=2, r=4: the full factorial is the only 4-run design with
        // lambda_min = 4; others are singular or weaker.
        let result = exhaustive_search(2, 4, OptimalityCriterion::E, None, 1).unwrap();
        let lambda = result.value.as_e().unwrap();
        assert!(lambda.is_exact());
        assert_eq!(lambda.lo(), &BigRational::from_integer(BigInt::from(4)));
        assert_eq!(result.num_evaluated, 1); // C(3,3)
    }

    #[test]
    fn a_search_all_singular_errors() {
        // r = 2 < s+1 = 4: every Gram matrix singular.
        assert!(matches!(
            exhaustive_search(3, 2, OptimalityCriterion::A, None, 1),
            Err(Error::Singular)
        ));
    }
}
