//! Exact univariate polynomial arithmetic over the integers/rationals:
//! square-free parts, Sturm chains, root counting and isolation of the
//! smallest real root.
//!
//! Polynomials are coefficient vectors in ascending degree order with a
//! nonzero leading coefficient (the zero polynomial is the empty vector).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

pub type IntPoly = Vec<BigInt>;
type RatPoly = Vec<BigRational>;

fn trim(mut p: RatPoly) -> RatPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn to_rational(p: &[BigInt]) -> RatPoly {
    p.iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect()
}

/// Clears denominators and divides out the content; leading coefficient
/// made positive.
fn primitive_integer(p: &RatPoly) -> IntPoly {
    if p.is_empty() {
        return Vec::new();
    }
    let mut denom_lcm = BigInt::one();
    for c in p {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let mut ints: Vec<BigInt> = p
        .iter()
        .map(|c| c.numer() * (&denom_lcm / c.denom()))
        .collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = content.gcd(c);
    }
    if content.is_zero() {
        return Vec::new();
    }
    if ints.last().unwrap().is_negative() {
        content = -content;
    }
    for c in &mut ints {
        *c = &*c / &content;
    }
    ints
}

pub fn derivative(p: &[BigInt]) -> IntPoly {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i as i64))
        .collect()
}

fn rat_rem(num: &RatPoly, den: &RatPoly) -> RatPoly {
    let mut rem = num.clone();
    let dlead = den.last().expect("nonzero divisor");
    let dd = den.len() - 1;
    while rem.len() >= den.len() && !rem.is_empty() {
        let shift = rem.len() - 1 - dd;
        let factor = rem.last().unwrap() / dlead;
        for (i, dc) in den.iter().enumerate() {
            let t = &factor * dc;
            rem[shift + i] -= t;
        }
        rem = trim(rem);
    }
    rem
}

/// Primitive integer gcd of two integer polynomials (Euclid over Q, then
/// cleared). Returns a constant `[1]` for coprime inputs.
pub fn poly_gcd(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let mut x = trim(to_rational(a));
    let mut y = trim(to_rational(b));
    while !y.is_empty() {
        let r = rat_rem(&x, &y);
        x = y;
        y = r;
    }
    let g = primitive_integer(&x);
    if g.is_empty() {
        vec![BigInt::one()]
    } else {
        g
    }
}

/// Exact quotient `p / q` assuming `q` divides `p`.
fn exact_div(p: &[BigInt], q: &[BigInt]) -> IntPoly {
    let pr = trim(to_rational(p));
    let qr = trim(to_rational(q));
    let mut rem = pr;
    let mut quot = vec![BigRational::zero(); rem.len().saturating_sub(qr.len()) + 1];
    let dlead = qr.last().expect("nonzero divisor");
    while rem.len() >= qr.len() && !rem.is_empty() {
        let shift = rem.len() - qr.len();
        let factor = rem.last().unwrap() / dlead;
        quot[shift] = factor.clone();
        for (i, dc) in qr.iter().enumerate() {
            let t = &factor * dc;
            rem[shift + i] -= t;
        }
        rem = trim(rem);
    }
    debug_assert!(rem.is_empty(), "exact_div with non-divisor");
    primitive_integer(&trim(quot))
}

/// The square-free part `p / gcd(p, p')`, primitive with positive leading
/// coefficient. Shares exactly the distinct roots of `p`.
pub fn squarefree_part(p: &[BigInt]) -> IntPoly {
    let g = poly_gcd(p, &derivative(p));
    if g.len() <= 1 {
        let mut out = p.to_vec();
        if out.last().is_some_and(Signed::is_negative) {
            for c in &mut out {
                *c = -&*c;
            }
        }
        return out;
    }
    exact_div(p, &g)
}

pub fn eval_rational(p: &[BigInt], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + BigRational::from_integer(c.clone());
    }
    acc
}

/// Sturm chain of a square-free polynomial, kept as primitive integer
/// polynomials (sign-preserving scaling is harmless to sign counts).
#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(squarefree: &[BigInt]) -> Self {
        let mut chain: Vec<IntPoly> = Vec::new();
        let p0 = squarefree.to_vec();
        let p1 = derivative(&p0);
        chain.push(p0);
        if !p1.is_empty() {
            chain.push(p1);
            loop {
                let n = chain.len();
                let rem = rat_rem(&to_rational(&chain[n - 2]), &to_rational(&chain[n - 1]));
                if rem.is_empty() {
                    break;
                }
                let mut neg = primitive_integer(&rem);
                // rat_rem normalized away the sign; restore -rem's sign.
                let lead_sign_matches = {
                    let r_lead = rem.last().unwrap();
                    r_lead.is_positive()
                };
                if lead_sign_matches {
                    for c in &mut neg {
                        *c = -&*c;
                    }
                }
                chain.push(neg);
            }
        }
        Self { chain }
    }

    fn sign_variations_at(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut last: Option<Ordering> = None;
        for p in &self.chain {
            let v = eval_rational(p, x);
            let s = if v.is_zero() {
                continue;
            } else if v.is_positive() {
                Ordering::Greater
            } else {
                Ordering::Less
            };
            if let Some(prev) = last {
                if prev != s {
                    count += 1;
                }
            }
            last = Some(s);
        }
        count
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count_roots(&self, a: &BigRational, b: &BigRational) -> usize {
        self.sign_variations_at(a) - self.sign_variations_at(b)
    }
}

/// The smallest real root of a square-free integer polynomial, held as an
/// isolating interval with exact rational endpoints (possibly degenerate
/// when the root itself is rational).
#[derive(Debug, Clone)]
pub struct SmallestRoot {
    poly: IntPoly,
    sturm: SturmChain,
    lo: BigRational,
    hi: BigRational,
}

impl SmallestRoot {
    /// A root known exactly, as a degenerate interval. `value` must be a
    /// root of `squarefree` and no smaller real root may exist.
    pub fn exact_rational(squarefree: IntPoly, value: BigRational) -> SmallestRoot {
        debug_assert!(eval_rational(&squarefree, &value).is_zero());
        let sturm = SturmChain::new(&squarefree);
        SmallestRoot {
            poly: squarefree,
            sturm,
            lo: value.clone(),
            hi: value,
        }
    }

    /// Isolates the smallest real root of `squarefree` inside `(lower, upper]`,
    /// narrowing to at most `width`. The interval must contain at least one
    /// real root and `lower` must lie strictly below all of them.
    pub fn isolate(
        squarefree: IntPoly,
        lower: BigRational,
        upper: BigRational,
        width: &BigRational,
    ) -> SmallestRoot {
        let sturm = SturmChain::new(&squarefree);
        debug_assert!(sturm.count_roots(&lower, &upper) >= 1);
        let mut lo = lower;
        let mut hi = upper;
        let two = BigRational::from_integer(BigInt::from(2));
        let one = BigRational::from_integer(BigInt::one());
        loop {
            let isolated = sturm.count_roots(&lo, &hi) == 1;
            if isolated {
                // Exact root at the right endpoint, nothing below it.
                if eval_rational(&squarefree, &hi).is_zero() {
                    lo = hi.clone();
                    break;
                }
                // For a monic integer polynomial every rational root is an
                // integer; in an interval shorter than 1 a single candidate
                // remains. (Harmless, merely incomplete, when not monic.)
                if &hi - &lo < one {
                    let candidate = lo.floor() + &one;
                    if candidate <= hi && eval_rational(&squarefree, &candidate).is_zero() {
                        lo = candidate.clone();
                        hi = candidate;
                        break;
                    }
                }
                if &hi - &lo <= *width {
                    break;
                }
            }
            let mid = (&lo + &hi) / &two;
            if sturm.count_roots(&lo, &mid) >= 1 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        SmallestRoot {
            poly: squarefree,
            sturm,
            lo,
            hi,
        }
    }

    pub fn poly(&self) -> &[BigInt] {
        &self.poly
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.lo)
    }

    fn refine_once(&mut self) {
        if self.is_exact() {
            return;
        }
        let two = BigRational::from_integer(BigInt::from(2));
        let mid = (&self.lo + &self.hi) / &two;
        if eval_rational(&self.poly, &mid).is_zero() {
            // The midpoint is the root itself.
            self.lo = mid.clone();
            self.hi = mid;
            return;
        }
        if self.sturm.count_roots(&self.lo, &mid) >= 1 {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }

    /// Exact comparison with another isolated root. Refines both intervals
    /// until they separate, or certifies equality through a common factor:
    /// once each interval isolates exactly one root, any root of
    /// `gcd(p, q)` in the overlap must be both smallest roots at once.
    pub fn cmp_exact(&mut self, other: &mut SmallestRoot) -> Ordering {
        loop {
            if self.hi < other.lo || (self.is_exact() && other.is_exact() && self.lo < other.lo) {
                return Ordering::Less;
            }
            if other.hi < self.lo || (self.is_exact() && other.is_exact() && other.lo < self.lo) {
                return Ordering::Greater;
            }
            if self.is_exact() && other.is_exact() {
                return self.lo.cmp(&other.lo);
            }
            let g = poly_gcd(&self.poly, &other.poly);
            if g.len() > 1 {
                let lo = if self.lo > other.lo {
                    &self.lo
                } else {
                    &other.lo
                };
                let hi = if self.hi < other.hi {
                    &self.hi
                } else {
                    &other.hi
                };
                // A root of the gcd inside the overlap lies in both
                // isolating intervals, so it is both smallest roots at
                // once. A point overlap decides directly.
                if lo == hi {
                    if eval_rational(&g, hi).is_zero() {
                        return Ordering::Equal;
                    }
                } else if lo < hi {
                    let gs = SturmChain::new(&g);
                    if gs.count_roots(lo, hi) >= 1 {
                        return Ordering::Equal;
                    }
                }
            }
            self.refine_once();
            other.refine_once();
        }
    }
}

pub fn rational_to_f64(x: &BigRational) -> f64 {
    // Adequate for display: both parts fit f64 at the magnitudes used here.
    let n = x.numer();
    let d = x.denom();
    str_to_f64(&n.to_string()) / str_to_f64(&d.to_string())
}

fn str_to_f64(s: &str) -> f64 {
    s.parse().unwrap_or(f64::NAN)
}
