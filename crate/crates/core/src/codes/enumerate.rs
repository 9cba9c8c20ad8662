//! Exhaustive codeword traversal.
//!
//! Codewords are visited in q-ary Gray order: step n adds basis row j, where
//! j is the number of trailing zero base-q digits of n. After N steps the
//! coefficient of row j is `d_j - d_{j+1} (mod q)` in terms of the base-q
//! digits of N, a bijection, so every codeword appears exactly once and each
//! step costs a single packed addition.
//!
//! The top information symbols are fixed per parallel task; per-task
//! accumulators are merged by summation or by a final sort, so results never
//! depend on the number of workers.

use num_bigint::BigUint;
use rayon::prelude::*;

use super::mitm;
use super::packed::{with_packed, Packed};
use super::{CodeError, LinearCode, WeightDistribution};

/// How weight-restricted listings are produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// Walk all q^k codewords.
    Exhaustive,
    /// Match parity-check syndromes of the two halves of the coordinates.
    MeetInTheMiddle,
}

fn trailing_digits(mut n: u64, q: u64) -> usize {
    if q == 2 {
        return n.trailing_zeros() as usize;
    }
    let mut j = 0;
    while n % q == 0 {
        n /= q;
        j += 1;
    }
    j
}

pub(crate) fn pack_rows<P: Packed>(code: &LinearCode) -> Vec<P> {
    code.basis().iter().map(|r| P::pack(code.q(), r)).collect()
}

fn gray_fold<P, A, I, V, M>(code: &LinearCode, init: I, visit: V, merge: M) -> A
where
    P: Packed,
    A: Send,
    I: Fn() -> A + Sync + Send,
    V: Fn(&mut A, &P) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    let q = code.q() as u64;
    let rows: Vec<P> = pack_rows(code);
    let zero = P::pack(code.q(), &vec![0u8; code.len()]);
    let k = rows.len();
    let split = if code.size() < 1 << 14 {
        0
    } else {
        (0..=k).find(|&p| q.pow(p as u32) >= 1024).unwrap_or(k)
    };
    let (low, high) = rows.split_at(k - split);
    let inner = q.pow(low.len() as u32);
    (0..q.pow(split as u32))
        .into_par_iter()
        .fold(&init, |mut acc, idx| {
            let mut cur = zero.clone();
            let mut n = idx;
            for r in high {
                let d = (n % q) as u8;
                n /= q;
                if d != 0 {
                    cur.add_assign(&r.scaled(d));
                }
            }
            visit(&mut acc, &cur);
            for step in 1..inner {
                cur.add_assign(&low[trailing_digits(step, q)]);
                visit(&mut acc, &cur);
            }
            acc
        })
        .reduce(&init, &merge)
}

fn budget_error(code: &LinearCode, required: u128, budget: u64) -> CodeError {
    CodeError::BudgetExceeded { required, budget, dual_dim: code.len() - code.dim() }
}

/// Exact weight distribution by visiting every codeword.
pub fn weight_distribution_bruteforce(code: &LinearCode, budget: u64) -> Result<WeightDistribution, CodeError> {
    if code.size() > budget as u128 {
        return Err(budget_error(code, code.size(), budget));
    }
    let v = code.len();
    let counts = with_packed!(code.q(), v, P => gray_fold::<P, _, _, _, _>(
        code,
        || vec![0u64; v + 1],
        |acc, w| acc[w.weight() as usize] += 1,
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        },
    ));
    WeightDistribution::new(v, code.q(), code.dim(), counts.into_iter().map(BigUint::from).collect())
}

fn choose_route(code: &LinearCode, w: usize, budget: u64, forced: Option<Route>) -> Result<Route, CodeError> {
    let gray = code.size();
    let meet = mitm::cost(code, w);
    let cost = |r| match r {
        Route::Exhaustive => gray,
        Route::MeetInTheMiddle => meet,
    };
    let route = forced.unwrap_or(if meet.saturating_mul(4) < gray { Route::MeetInTheMiddle } else { Route::Exhaustive });
    if cost(route) <= budget as u128 {
        return Ok(route);
    }
    if forced.is_none() {
        let other = match route {
            Route::Exhaustive => Route::MeetInTheMiddle,
            Route::MeetInTheMiddle => Route::Exhaustive,
        };
        if cost(other) <= budget as u128 {
            return Ok(other);
        }
    }
    Err(budget_error(code, if forced.is_some() { cost(route) } else { gray.min(meet) }, budget))
}

/// Applies `map` to every codeword of weight exactly `w`, in unspecified order.
fn map_weight<P, T>(code: &LinearCode, w: usize, route: Route, map: impl Fn(&P) -> T + Sync + Send) -> Vec<T>
where
    P: Packed,
    T: Send,
{
    match route {
        Route::Exhaustive => gray_fold::<P, _, _, _, _>(
            code,
            Vec::new,
            |acc, c| {
                if c.weight() as usize == w {
                    acc.push(map(c))
                }
            },
            |mut a, mut b| {
                a.append(&mut b);
                a
            },
        ),
        Route::MeetInTheMiddle => mitm::weight_exactly::<P, T>(code, w, &map),
    }
}

/// All codewords of weight exactly `w`, ordered lexicographically by information vector.
pub fn codewords_of_weight(code: &LinearCode, w: usize, budget: u64) -> Result<Vec<Vec<u8>>, CodeError> {
    codewords_of_weight_via(code, w, budget, None)
}

/// As [`codewords_of_weight`], optionally forcing the enumeration route.
pub fn codewords_of_weight_via(
    code: &LinearCode,
    w: usize,
    budget: u64,
    route: Option<Route>,
) -> Result<Vec<Vec<u8>>, CodeError> {
    if w > code.len() {
        return Ok(Vec::new());
    }
    if w == 0 {
        return Ok(vec![vec![0; code.len()]]);
    }
    let route = choose_route(code, w, budget, route)?;
    let v = code.len();
    let mut words: Vec<(Vec<u8>, Vec<u8>)> = with_packed!(code.q(), v, P => map_weight::<P, _>(code, w, route, |c| {
        let s = c.symbols(v);
        (code.info_of(&s), s)
    }));
    words.par_sort_unstable();
    Ok(words.into_iter().map(|(_, s)| s).collect())
}

/// Distinct supports of the weight-`w` codewords, sorted, with the number
/// of codewords sharing each support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportSet {
    pub v: usize,
    pub weight: usize,
    pub supports: Vec<(Vec<u16>, u64)>,
}

impl SupportSet {
    pub fn codeword_count(&self) -> u64 {
        self.supports.iter().map(|(_, c)| c).sum()
    }
}

/// Supports of the codewords of weight `w`.
pub fn supports_of_weight_raw(code: &LinearCode, w: usize, budget: u64) -> Result<SupportSet, CodeError> {
    let v = code.len();
    if w == 0 || w > v {
        let supports = if w == 0 { vec![(Vec::new(), 1)] } else { Vec::new() };
        return Ok(SupportSet { v, weight: w, supports });
    }
    let route = choose_route(code, w, budget, None)?;
    let supports = with_packed!(code.q(), v, P => {
        let mut raw = map_weight::<P, _>(code, w, route, |c| c.support());
        raw.par_sort_unstable();
        let mut out: Vec<(Vec<u16>, u64)> = Vec::new();
        let mut pts = Vec::with_capacity(w);
        let mut i = 0;
        while i < raw.len() {
            let mut j = i;
            while j < raw.len() && raw[j] == raw[i] {
                j += 1;
            }
            P::support_points(&raw[i], &mut pts);
            out.push((pts.clone(), (j - i) as u64));
            i = j;
        }
        out
    });
    let mut supports = supports;
    supports.par_sort_unstable();
    Ok(SupportSet { v, weight: w, supports })
}

/// Minimum distance; `Ok(None)` for the zero code.
///
/// Uses the full distribution when q^k fits the budget, otherwise searches
/// weights 1, 2, ... by syndrome matching while the accumulated cost fits.
pub fn minimum_distance(code: &LinearCode, budget: u64) -> Result<Option<usize>, CodeError> {
    if code.dim() == 0 {
        return Ok(None);
    }
    if code.size() <= budget as u128 {
        return Ok(weight_distribution_bruteforce(code, budget)?.min_distance());
    }
    let mut spent: u128 = 0;
    for w in 1..=code.len() {
        spent = spent.saturating_add(mitm::cost(code, w));
        if spent > budget as u128 {
            return Err(budget_error(code, spent.min(code.size()), budget));
        }
        let found = with_packed!(code.q(), code.len(), P =>
            map_weight::<P, _>(code, w, Route::MeetInTheMiddle, |_| ()).len());
        if found > 0 {
            return Ok(Some(w));
        }
    }
    unreachable!("a nonzero code has a nonzero codeword")
}
