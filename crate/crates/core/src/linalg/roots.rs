//! Exact real roots of integer polynomials: Sturm chains, dyadic
//! bisection, and exact comparison of isolated algebraic numbers.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::poly::IntPoly;

/// Isolating intervals are refined to width at most `2^-ISOLATION_BITS`.
pub const ISOLATION_BITS: u32 = 40;

/// Interval refinement depth at which root comparison switches to the
/// gcd-based equality test.
pub const COMPARISON_BITS: u32 = 80;

/// A dyadic rational `num / 2^exp`, kept in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: BigInt,
    exp: u32,
}

impl Dyadic {
    pub fn new(mut num: BigInt, mut exp: u32) -> Self {
        if num.is_zero() {
            return Dyadic { num, exp: 0 };
        }
        let tz = num.trailing_zeros().unwrap_or(0).min(u64::from(exp)) as u32;
        if tz > 0 {
            num >>= tz as usize;
            exp -= tz;
        }
        Dyadic { num, exp }
    }

    pub fn integer(k: BigInt) -> Self {
        Dyadic { num: k, exp: 0 }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn exponent(&self) -> u32 {
        self.exp
    }

    pub fn as_integer(&self) -> Option<&BigInt> {
        (self.exp == 0).then_some(&self.num)
    }

    fn aligned(&self, other: &Dyadic) -> (BigInt, BigInt, u32) {
        let e = self.exp.max(other.exp);
        (
            &self.num << (e - self.exp) as usize,
            &other.num << (e - other.exp) as usize,
            e,
        )
    }

    pub fn midpoint(&self, other: &Dyadic) -> Dyadic {
        let (a, b, e) = self.aligned(other);
        Dyadic::new(a + b, e + 1)
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        let (a, b, e) = self.aligned(other);
        Dyadic::new(a + b, e)
    }

    pub fn sub(&self, other: &Dyadic) -> Dyadic {
        let (a, b, e) = self.aligned(other);
        Dyadic::new(a - b, e)
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic {
            num: -self.num.clone(),
            exp: self.exp,
        }
    }

    /// `self / 2^k`.
    pub fn halve(&self, k: u32) -> Dyadic {
        Dyadic::new(self.num.clone(), self.exp + k)
    }

    /// `self ≤ 2^-bits` (for non-negative widths).
    pub fn at_most_pow2_neg(&self, bits: u32) -> bool {
        // num / 2^exp ≤ 2^-bits  ⇔  num · 2^bits ≤ 2^exp
        (&self.num << bits as usize) <= (BigInt::from(1) << self.exp as usize)
    }

    pub fn floor(&self) -> BigInt {
        self.num.div_floor(&(BigInt::from(1) << self.exp as usize))
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.num.clone(), BigInt::from(1) << self.exp as usize)
    }

    pub fn to_f64(&self) -> f64 {
        let n = self.num.to_f64().unwrap_or(f64::NAN);
        n / 2f64.powi(self.exp as i32)
    }

    fn sign_of(&self, p: &IntPoly) -> Ordering {
        p.sign_at_dyadic(&self.num, self.exp)
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/2^{}", self.num, self.exp)
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Sturm chain of a squarefree polynomial.
#[derive(Debug, Clone)]
pub struct SturmChain(Vec<IntPoly>);

impl SturmChain {
    pub fn new(p: &IntPoly) -> Self {
        let mut chain = vec![p.clone()];
        let dp = p.derivative();
        if !dp.is_zero() {
            chain.push(dp);
        }
        while chain.len() >= 2 {
            let k = chain.len();
            let r = chain[k - 2].pseudo_rem(&chain[k - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(-r.without_content());
        }
        SturmChain(chain)
    }

    fn count(signs: impl Iterator<Item = Ordering>) -> usize {
        let mut last = Ordering::Equal;
        let mut changes = 0;
        for s in signs.filter(|s| *s != Ordering::Equal) {
            if last != Ordering::Equal && s != last {
                changes += 1;
            }
            last = s;
        }
        changes
    }

    /// Sign variations at `x`, zeros skipped.
    pub fn variations(&self, x: &Dyadic) -> usize {
        Self::count(self.0.iter().map(|q| x.sign_of(q)))
    }

    pub fn variations_at_infinity(&self, positive: bool) -> usize {
        Self::count(self.0.iter().map(|q| q.sign_at_infinity(positive)))
    }

    /// Distinct roots in `(a, b]`.
    pub fn roots_between(&self, a: &Dyadic, b: &Dyadic) -> usize {
        self.variations(a) - self.variations(b)
    }
}

/// The unique root of `poly` in the open interval `(lo, hi)`; neither
/// endpoint is a root.
#[derive(Clone, PartialEq, Eq)]
pub struct IsolatedRoot {
    poly: Arc<IntPoly>,
    lo: Dyadic,
    hi: Dyadic,
}

impl IsolatedRoot {
    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    pub fn width(&self) -> Dyadic {
        self.hi.sub(&self.lo)
    }

    pub fn midpoint_f64(&self) -> f64 {
        self.lo.midpoint(&self.hi).to_f64()
    }

    /// One bisection step.
    pub fn bisect(&mut self) {
        let mid = self.lo.midpoint(&self.hi);
        match mid.sign_of(&self.poly) {
            Ordering::Equal => {
                // The root is `mid` itself; recentre on it.
                let quarter = self.width().halve(2);
                self.lo = mid.sub(&quarter);
                self.hi = mid.add(&quarter);
            }
            s if s == self.lo.sign_of(&self.poly) => self.lo = mid,
            _ => self.hi = mid,
        }
    }

    pub fn refine_to(&mut self, bits: u32) {
        while !self.width().at_most_pow2_neg(bits) {
            self.bisect();
        }
    }

    /// The integer root, if the interval contains one that vanishes.
    fn integer_root(&self) -> Option<BigInt> {
        let k: BigInt = self.lo.floor() + 1;
        (Dyadic::integer(k.clone()) < self.hi && self.poly.eval(&k).is_zero()).then_some(k)
    }

    fn map_linear(&self, negate: bool, offset: &BigInt) -> IsolatedRoot {
        // Root r of p  ↦  ±r + offset, a root of p(±(y - offset)).
        let poly = if negate {
            self.poly.substitute_linear(true, offset)
        } else {
            self.poly.substitute_linear(false, &-offset.clone())
        }
        .with_positive_leading();
        let shift = Dyadic::integer(offset.clone());
        let (lo, hi) = if negate {
            (shift.sub(&self.hi), shift.sub(&self.lo))
        } else {
            (self.lo.add(&shift), self.hi.add(&shift))
        };
        IsolatedRoot {
            poly: Arc::new(poly),
            lo,
            hi,
        }
    }
}

impl fmt::Debug for IsolatedRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "root of {} in ({:?}, {:?})", self.poly, self.lo, self.hi)
    }
}

/// An exact real algebraic number.
#[derive(Clone, PartialEq, Eq)]
pub enum Root {
    Integer(BigInt),
    Isolated(IsolatedRoot),
}

impl Root {
    pub fn int(k: i64) -> Root {
        Root::Integer(BigInt::from(k))
    }

    pub fn as_integer(&self) -> Option<&BigInt> {
        match self {
            Root::Integer(k) => Some(k),
            Root::Isolated(_) => None,
        }
    }

    pub fn is_integer(&self) -> bool {
        matches!(self, Root::Integer(_))
    }

    pub fn approx(&self) -> f64 {
        match self {
            Root::Integer(k) => k.to_f64().unwrap_or(f64::NAN),
            Root::Isolated(r) => r.midpoint_f64(),
        }
    }

    /// `offset - self`.
    pub fn reflect(&self, offset: &BigInt) -> Root {
        match self {
            Root::Integer(k) => Root::Integer(offset - k),
            Root::Isolated(r) => Root::Isolated(r.map_linear(true, offset)),
        }
    }

    /// `self + offset`.
    pub fn shift(&self, offset: &BigInt) -> Root {
        match self {
            Root::Integer(k) => Root::Integer(k + offset),
            Root::Isolated(r) => Root::Isolated(r.map_linear(false, offset)),
        }
    }

    /// Exact comparison. Intervals are refined until they separate; past
    /// `COMPARISON_BITS` a gcd test decides equality of the two algebraic
    /// numbers.
    pub fn cmp_exact(&self, other: &Root) -> Ordering {
        match (self, other) {
            (Root::Integer(a), Root::Integer(b)) => a.cmp(b),
            (Root::Integer(k), Root::Isolated(r)) => cmp_integer_isolated(k, r),
            (Root::Isolated(r), Root::Integer(k)) => cmp_integer_isolated(k, r).reverse(),
            (Root::Isolated(a), Root::Isolated(b)) => cmp_isolated(a, b),
        }
    }

    pub fn cmp_integer(&self, k: &BigInt) -> Ordering {
        self.cmp_exact(&Root::Integer(k.clone()))
    }
}

fn cmp_integer_isolated(k: &BigInt, r: &IsolatedRoot) -> Ordering {
    let k = Dyadic::integer(k.clone());
    let mut r = r.clone();
    loop {
        if k <= r.lo {
            return Ordering::Less;
        }
        if k >= r.hi {
            return Ordering::Greater;
        }
        if k.sign_of(&r.poly) == Ordering::Equal {
            return Ordering::Equal;
        }
        r.bisect();
    }
}

fn cmp_isolated(a: &IsolatedRoot, b: &IsolatedRoot) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut gcd_checked = false;
    loop {
        if a.hi <= b.lo {
            return Ordering::Less;
        }
        if b.hi <= a.lo {
            return Ordering::Greater;
        }
        let fine = a.width().at_most_pow2_neg(COMPARISON_BITS) && b.width().at_most_pow2_neg(COMPARISON_BITS);
        if fine && !gcd_checked {
            gcd_checked = true;
            let g = a.poly.gcd(&b.poly);
            if !g.is_constant() {
                // Endpoints are non-roots of their own polynomial, hence
                // of any common factor.
                let lo = (&a.lo).max(&b.lo);
                let hi = (&a.hi).min(&b.hi);
                if SturmChain::new(&g).roots_between(lo, hi) > 0 {
                    return Ordering::Equal;
                }
            }
        }
        if a.width() >= b.width() {
            a.bisect();
        } else {
            b.bisect();
        }
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Root::Integer(k) => write!(f, "{k}"),
            Root::Isolated(r) => write!(f, "{r:?}"),
        }
    }
}

/// Power of two strictly exceeding the absolute value of every root.
fn root_bound_exponent(p: &IntPoly) -> u32 {
    let lc = p.leading().expect("nonzero polynomial").abs();
    let d = p.degree().unwrap();
    let max = p.coeffs()[..d].iter().map(Signed::abs).max().unwrap_or_default();
    // |r| < 1 + max/|lc| ≤ 1 + ceil(max/|lc|)
    let q: BigInt = max.div_ceil(&lc) + 1;
    let mut k = 0u32;
    while (BigInt::from(1) << k as usize) < q {
        k += 1;
    }
    k
}

/// All distinct real roots of a squarefree polynomial, ascending.
///
/// Integer roots are returned exactly; every other root gets an isolating
/// interval of width at most `2^-ISOLATION_BITS`.
pub fn isolate_real_roots(p: &IntPoly) -> Vec<Root> {
    let Some(deg) = p.degree() else {
        return Vec::new();
    };
    if deg == 0 {
        return Vec::new();
    }
    let p = Arc::new(p.clone().with_positive_leading());
    let chain = SturmChain::new(&p);
    let bound = Dyadic::integer(BigInt::from(1) << root_bound_exponent(&p) as usize);
    let lo = bound.neg();
    let vlo = chain.variations(&lo);
    let vhi = chain.variations(&bound);

    let mut out = Vec::new();
    let mut stack = vec![(lo, bound, vlo, vhi)];
    while let Some((lo, hi, vlo, vhi)) = stack.pop() {
        match vlo - vhi {
            0 => {}
            1 => out.push(finish_isolated(IsolatedRoot {
                poly: p.clone(),
                lo,
                hi,
            })),
            _ => {
                let mid = lo.midpoint(&hi);
                if mid.sign_of(&p) == Ordering::Equal {
                    let quarter = hi.sub(&lo).halve(2);
                    let (a, b) = isolate_exact_point(&p, &chain, &mid, quarter);
                    let (va, vb) = (chain.variations(&a), chain.variations(&b));
                    out.push(finish_isolated(IsolatedRoot {
                        poly: p.clone(),
                        lo: a.clone(),
                        hi: b.clone(),
                    }));
                    stack.push((lo, a, vlo, va));
                    stack.push((b, hi, vb, vhi));
                } else {
                    let vmid = chain.variations(&mid);
                    stack.push((lo, mid.clone(), vlo, vmid));
                    stack.push((mid, hi, vmid, vhi));
                }
            }
        }
    }
    out.sort_by(|a, b| a.cmp_exact(b));
    out
}

/// Largest real root of a squarefree polynomial, isolated the same way as
/// in [`isolate_real_roots`] but skipping every lower root.
pub fn largest_real_root(p: &IntPoly) -> Option<Root> {
    if p.degree().unwrap_or(0) == 0 {
        return None;
    }
    let p = Arc::new(p.clone().with_positive_leading());
    if let Some(r) = largest_root_by_guess(&p) {
        return Some(r);
    }
    let chain = SturmChain::new(&p);
    let mut hi = Dyadic::integer(BigInt::from(1) << root_bound_exponent(&p) as usize);
    let mut lo = hi.neg();
    let vhi = chain.variations(&hi);
    let mut vlo = chain.variations(&lo);
    if vlo == vhi {
        return None;
    }
    // Invariant: the largest root lies in (lo, hi); neither end is a root.
    while vlo - vhi > 1 {
        let mid = lo.midpoint(&hi);
        if mid.sign_of(&p) == Ordering::Equal {
            let quarter = hi.sub(&lo).halve(2);
            let (a, b) = isolate_exact_point(&p, &chain, &mid, quarter);
            let vb = chain.variations(&b);
            if vb == vhi {
                return Some(finish_isolated(IsolatedRoot { poly: p, lo: a, hi: b }));
            }
            (lo, vlo) = (b, vb);
            continue;
        }
        let vmid = chain.variations(&mid);
        if vmid > vhi {
            (lo, vlo) = (mid, vmid);
        } else {
            hi = mid;
        }
    }
    Some(finish_isolated(IsolatedRoot { poly: p, lo, hi }))
}

/// Floating-point Newton guess for the largest root, certified exactly by
/// Descartes' rule on the shifted polynomial. `None` when certification
/// fails, in which case the caller falls back to Sturm bisection.
fn largest_root_by_guess(p: &Arc<IntPoly>) -> Option<Root> {
    const GUESS_BITS: u32 = 24;
    let dp = p.derivative();
    // Newton from above the Cauchy bound decreases towards the largest root
    // when every root is real, as for characteristic polynomials of
    // symmetric matrices.
    let mut x = 2f64.powi(root_bound_exponent(p) as i32);
    for _ in 0..200 {
        let step = p.eval_f64(x) / dp.eval_f64(x);
        if !step.is_finite() {
            return None;
        }
        x -= step;
        if step.abs() <= 1e-12 * (1.0 + x.abs()) {
            break;
        }
    }
    if !x.is_finite() || x.abs() > 1e15 {
        return None;
    }
    let k = BigInt::from(x.round() as i64);
    if p.eval(&k).is_zero() {
        // p(y + k) = y·q(y); no sign change in q means no root above k.
        return (p.sign_variations_above(&k, 0) == 0).then_some(Root::Integer(k));
    }
    let scaled = (x * f64::from(1u32 << GUESS_BITS)).floor() as i64;
    let lo = Dyadic::new(BigInt::from(scaled - 16), GUESS_BITS);
    let hi = Dyadic::new(BigInt::from(scaled + 16), GUESS_BITS);
    let certified = lo.sign_of(p) == Ordering::Less
        && hi.sign_of(p) == Ordering::Greater
        && p.sign_variations_above(lo.numerator(), lo.exponent()) == 1;
    certified.then(|| finish_isolated(IsolatedRoot { poly: p.clone(), lo, hi }))
}

/// Shrink `(mid - δ, mid + δ)` until `mid` is its only root and the
/// endpoints are non-roots.
fn isolate_exact_point(p: &IntPoly, chain: &SturmChain, mid: &Dyadic, mut delta: Dyadic) -> (Dyadic, Dyadic) {
    loop {
        let (a, b) = (mid.sub(&delta), mid.add(&delta));
        if a.sign_of(p) != Ordering::Equal
            && b.sign_of(p) != Ordering::Equal
            && chain.roots_between(&a, &b) == 1
        {
            return (a, b);
        }
        delta = delta.halve(1);
    }
}

fn finish_isolated(mut r: IsolatedRoot) -> Root {
    loop {
        if let Some(k) = r.integer_root() {
            return Root::Integer(k);
        }
        if r.width().at_most_pow2_neg(ISOLATION_BITS) {
            return Root::Isolated(r);
        }
        // A dyadic midpoint root is handled by `bisect` recentring on it;
        // integers are caught by `integer_root` above.
        r.bisect();
    }
}
