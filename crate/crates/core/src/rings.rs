//! Arithmetic in Z_q and R = Z_q + uZ_q with u² = 0.
//!
//! Residues are stored canonically in `[0, q)`. The ring object
//! [`RingParams`] carries the modulus and performs all arithmetic, in the
//! style of "ring as a value" libraries: `ring.mul(x, y)` rather than
//! operator overloading on bare residues.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{AutomorphismFault, Error, Result};

/// Largest supported modulus.
pub const MAX_MODULUS: u32 = 1 << 16;

/// The modulus `q = p^s` together with its factorisation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingParams {
    p: u32,
    s: u32,
    q: u32,
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl RingParams {
    pub fn new(p: u32, s: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidRingParams(format!("{p} is not prime")));
        }
        if s == 0 {
            return Err(Error::InvalidRingParams("exponent must be positive".into()));
        }
        let q = (p as u64)
            .checked_pow(s)
            .filter(|&q| q <= MAX_MODULUS as u64)
            .ok_or_else(|| Error::InvalidRingParams(format!("{p}^{s} exceeds {MAX_MODULUS}")))?;
        Ok(RingParams { p, s, q: q as u32 })
    }

    /// Builds the parameters from the modulus, factoring it as a prime power.
    pub fn from_modulus(q: u32) -> Result<Self> {
        if !(2..=MAX_MODULUS).contains(&q) {
            return Err(Error::InvalidRingParams(format!("modulus {q} out of range")));
        }
        let p = (2..=q).find(|d| q.is_multiple_of(*d)).unwrap();
        let (mut rest, mut s) = (q, 0);
        while rest % p == 0 {
            rest /= p;
            s += 1;
        }
        if rest != 1 {
            return Err(Error::InvalidRingParams(format!("{q} is not a prime power")));
        }
        Ok(RingParams { p, s, q })
    }

    /// Z_4, the ring of the quaternary experiments.
    pub fn z4() -> Self {
        RingParams { p: 2, s: 2, q: 4 }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn reduce(&self, x: i64) -> u32 {
        x.rem_euclid(self.q as i64) as u32
    }

    pub fn zadd(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.q as u64) as u32
    }

    pub fn zsub(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.q as u64 - b as u64) % self.q as u64) as u32
    }

    pub fn zneg(&self, a: u32) -> u32 {
        self.zsub(0, a)
    }

    pub fn zmul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.q as u64) as u32
    }

    pub fn is_zunit(&self, a: u32) -> bool {
        !a.is_multiple_of(self.p)
    }

    pub fn zinv(&self, a: u32) -> Option<u32> {
        if !self.is_zunit(a) {
            return None;
        }
        let g = (a as i64).extended_gcd(&(self.q as i64));
        debug_assert_eq!(g.gcd, 1);
        Some(self.reduce(g.x))
    }

    /// p-adic valuation of a residue, with `valuation(0) = s`.
    pub fn valuation(&self, mut a: u32) -> u32 {
        if a == 0 {
            return self.s;
        }
        let mut v = 0;
        while a.is_multiple_of(self.p) {
            a /= self.p;
            v += 1;
        }
        v
    }

    /// Lee weight `min(x, q - x)` of a single residue.
    pub fn lee(&self, x: u32) -> u32 {
        x.min(self.q - x)
    }

    pub fn elem(&self, a: i64, b: i64) -> RingElem {
        RingElem {
            a: self.reduce(a),
            b: self.reduce(b),
        }
    }

    pub fn add(&self, x: RingElem, y: RingElem) -> RingElem {
        RingElem {
            a: self.zadd(x.a, y.a),
            b: self.zadd(x.b, y.b),
        }
    }

    pub fn sub(&self, x: RingElem, y: RingElem) -> RingElem {
        RingElem {
            a: self.zsub(x.a, y.a),
            b: self.zsub(x.b, y.b),
        }
    }

    pub fn neg(&self, x: RingElem) -> RingElem {
        self.sub(RingElem::ZERO, x)
    }

    /// `(a + ub)(c + ud) = ac + u(ad + bc)`.
    pub fn mul(&self, x: RingElem, y: RingElem) -> RingElem {
        let q = self.q as u64;
        RingElem {
            a: ((x.a as u64 * y.a as u64) % q) as u32,
            b: ((x.a as u64 * y.b as u64 + x.b as u64 * y.a as u64) % q) as u32,
        }
    }

    /// Scales both components by an element of Z_q.
    pub fn scale(&self, c: u32, x: RingElem) -> RingElem {
        RingElem {
            a: self.zmul(c, x.a),
            b: self.zmul(c, x.b),
        }
    }

    pub fn is_unit(&self, x: RingElem) -> bool {
        self.is_zunit(x.a)
    }

    /// `(a + ub)⁻¹ = a⁻¹ - u b a⁻²`.
    pub fn inv(&self, x: RingElem) -> Option<RingElem> {
        let ai = self.zinv(x.a)?;
        let b = self.zneg(self.zmul(x.b, self.zmul(ai, ai)));
        Some(RingElem { a: ai, b })
    }

    /// All `q²` elements of R, ordered by `(a, b)` lexicographically.
    pub fn elements(&self) -> impl Iterator<Item = RingElem> + Clone {
        let q = self.q;
        (0..q).flat_map(move |a| (0..q).map(move |b| RingElem { a, b }))
    }

    pub fn units(&self) -> impl Iterator<Item = RingElem> + '_ {
        self.elements().filter(move |&x| self.is_unit(x))
    }

    pub fn parse_elem(&self, text: &str) -> Result<RingElem> {
        let raw: RawElem = text.parse()?;
        Ok(self.elem(raw.0, raw.1))
    }
}

/// The projection `η(a + ub) = a`.
pub fn eta(x: RingElem) -> u32 {
    x.a
}

/// An element `a + ub` of R.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RingElem {
    pub a: u32,
    pub b: u32,
}

impl RingElem {
    pub const ZERO: RingElem = RingElem { a: 0, b: 0 };
    pub const ONE: RingElem = RingElem { a: 1, b: 0 };
    pub const U: RingElem = RingElem { a: 0, b: 1 };

    /// An element of Z_q embedded in R. Assumes `a` is already reduced.
    pub const fn scalar(a: u32) -> Self {
        RingElem { a, b: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}u", self.a, self.b)
    }
}

/// Unreduced `(a, b)` as read from text.
struct RawElem(i64, i64);

impl FromStr for RawElem {
    type Err = Error;

    /// Accepts `a`, `bu`, `u`, `a+bu`, `bu+a`, with optional whitespace and
    /// leading minus signs on terms.
    fn from_str(text: &str) -> Result<Self> {
        let cleaned: Vec<(usize, char)> = text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        if cleaned.is_empty() {
            return Err(Error::parse(0, "empty ring element"));
        }
        let (mut a, mut b) = (0i64, 0i64);
        let mut i = 0;
        while i < cleaned.len() {
            let start = cleaned[i].0;
            let mut sign = 1i64;
            if i > 0 || cleaned[i].1 == '+' || cleaned[i].1 == '-' {
                match cleaned[i].1 {
                    '+' => i += 1,
                    '-' => {
                        sign = -1;
                        i += 1
                    }
                    _ => return Err(Error::parse(start, "expected '+' or '-'")),
                }
            }
            let mut digits = String::new();
            while i < cleaned.len() && cleaned[i].1.is_ascii_digit() {
                digits.push(cleaned[i].1);
                i += 1;
            }
            let is_u = i < cleaned.len() && cleaned[i].1 == 'u';
            if is_u {
                i += 1;
            }
            if digits.is_empty() && !is_u {
                return Err(Error::parse(start, "expected a number or 'u'"));
            }
            let value: i64 = if digits.is_empty() {
                1
            } else {
                digits
                    .parse()
                    .map_err(|_| Error::parse(start, "number out of range"))?
            };
            if is_u {
                b += sign * value;
            } else {
                a += sign * value;
            }
        }
        Ok(RawElem(a, b))
    }
}

/// A ring automorphism of R fixing Z_q, given by `θ(u) = k + ud`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Automorphism {
    params: RingParams,
    k: u32,
    d: u32,
    order: u32,
}

impl Automorphism {
    pub fn new(params: RingParams, k: i64, d: i64) -> Result<Self> {
        let (k, d) = (params.reduce(k), params.reduce(d));
        if params.is_zunit(k) {
            return Err(Error::InvalidAutomorphism(AutomorphismFault::KIsUnit));
        }
        if params.zmul(k, k) != 0 {
            return Err(Error::InvalidAutomorphism(AutomorphismFault::KSquareNonzero));
        }
        if params.zmul(2, params.zmul(k, d)) != 0 {
            return Err(Error::InvalidAutomorphism(AutomorphismFault::CrossTermNonzero));
        }
        if !params.is_zunit(d) {
            return Err(Error::InvalidAutomorphism(AutomorphismFault::DNotUnit));
        }
        let mut theta = Automorphism {
            params,
            k,
            d,
            order: 0,
        };
        let mut image = theta.step(RingElem::U);
        let mut order = 1;
        while image != RingElem::U {
            if order >= params.q() {
                return Err(Error::InvalidAutomorphism(AutomorphismFault::OrderTooLarge));
            }
            image = theta.step(image);
            order += 1;
        }
        theta.order = order;
        Ok(theta)
    }

    pub fn identity(params: RingParams) -> Self {
        Automorphism {
            params,
            k: 0,
            d: 1,
            order: 1,
        }
    }

    /// Every automorphism fixing Z_q that passes validation, by `(k, d)`.
    pub fn all(params: RingParams) -> Vec<Automorphism> {
        let q = params.q() as i64;
        (0..q)
            .flat_map(|k| (0..q).map(move |d| (k, d)))
            .filter_map(|(k, d)| Automorphism::new(params, k, d).ok())
            .collect()
    }

    pub fn params(&self) -> RingParams {
        self.params
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// Multiplicative order `m`.
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_identity(&self) -> bool {
        self.order == 1
    }

    /// `θ(a + ub) = (a + kb) + u(db)`.
    fn step(&self, x: RingElem) -> RingElem {
        let p = &self.params;
        RingElem {
            a: p.zadd(x.a, p.zmul(self.k, x.b)),
            b: p.zmul(self.d, x.b),
        }
    }

    /// `θ^power(x)`; negative powers use `θ^{-1} = θ^{m-1}`.
    pub fn apply(&self, x: RingElem, power: i64) -> RingElem {
        let power = power.rem_euclid(self.order as i64);
        let mut y = x;
        for _ in 0..power {
            y = self.step(y);
        }
        y
    }

    pub fn fixes(&self, x: RingElem) -> bool {
        self.step(x) == x
    }
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "theta(u)={}+{}u (order {})", self.k, self.d, self.order)
    }
}

/// A vector of Z_q^α × R^β.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MixedWord {
    pub zq: Vec<u32>,
    pub r: Vec<RingElem>,
}

impl MixedWord {
    pub fn new(zq: Vec<u32>, r: Vec<RingElem>) -> Self {
        MixedWord { zq, r }
    }

    pub fn zero(alpha: usize, beta: usize) -> Self {
        MixedWord {
            zq: vec![0; alpha],
            r: vec![RingElem::ZERO; beta],
        }
    }

    pub fn alpha(&self) -> usize {
        self.zq.len()
    }

    pub fn beta(&self) -> usize {
        self.r.len()
    }

    pub fn is_zero(&self) -> bool {
        self.zq.iter().all(|&x| x == 0) && self.r.iter().all(RingElem::is_zero)
    }

    pub fn add(&self, other: &MixedWord, params: &RingParams) -> MixedWord {
        MixedWord {
            zq: self
                .zq
                .iter()
                .zip(&other.zq)
                .map(|(&x, &y)| params.zadd(x, y))
                .collect(),
            r: self
                .r
                .iter()
                .zip(&other.r)
                .map(|(&x, &y)| params.add(x, y))
                .collect(),
        }
    }

    /// Coordinates over Z_q: the Z_q block, then unit parts, then u-parts.
    pub fn to_coords(&self) -> Vec<u32> {
        let mut out = self.zq.clone();
        out.extend(self.r.iter().map(|x| x.a));
        out.extend(self.r.iter().map(|x| x.b));
        out
    }

    pub fn from_coords(coords: &[u32], alpha: usize, beta: usize) -> MixedWord {
        assert_eq!(coords.len(), alpha + 2 * beta);
        let zq = coords[..alpha].to_vec();
        let r = (0..beta)
            .map(|j| RingElem {
                a: coords[alpha + j],
                b: coords[alpha + beta + j],
            })
            .collect();
        MixedWord { zq, r }
    }

    /// Parses `e_0,...,e_{α-1} | r_0,...,r_{β-1}`.
    pub fn parse(text: &str, params: &RingParams) -> Result<MixedWord> {
        let (left, right) = text
            .split_once('|')
            .ok_or_else(|| Error::parse(0, "mixed word needs a '|' separator"))?;
        let zq = split_list(left)
            .map(|(pos, item)| {
                item.parse::<i64>()
                    .map(|v| params.reduce(v))
                    .map_err(|_| Error::parse(pos, format!("bad residue '{item}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        let offset = left.len() + 1;
        let r = split_list(right)
            .map(|(pos, item)| {
                params.parse_elem(item).map_err(|e| match e {
                    Error::Parse { pos: p, msg } => Error::parse(offset + pos + p, msg),
                    other => other,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MixedWord { zq, r })
    }
}

impl fmt::Display for MixedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let zq: Vec<String> = self.zq.iter().map(u32::to_string).collect();
        let r: Vec<String> = self.r.iter().map(RingElem::to_string).collect();
        write!(f, "{} | {}", zq.join(","), r.join(","))
    }
}

/// Non-empty comma separated items with their byte offsets.
pub(crate) fn split_list(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut pos = 0;
    text.split(',')
        .map(move |item| {
            let here = pos;
            pos += item.len() + 1;
            (here + item.len() - item.trim_start().len(), item.trim())
        })
        .filter(|(_, item)| !item.is_empty())
}

/// `d ⋆ (e, r) = (η(d)e, dr)`.
pub fn star_mul(params: &RingParams, scalar: RingElem, w: &MixedWord) -> MixedWord {
    let e = eta(scalar);
    MixedWord {
        zq: w.zq.iter().map(|&x| params.zmul(e, x)).collect(),
        r: w.r.iter().map(|&x| params.mul(scalar, x)).collect(),
    }
}

/// `⟨v, w⟩ = u Σ v_i w_i + Σ v'_j w'_j`, valued in R.
pub fn mixed_inner_product(params: &RingParams, v: &MixedWord, w: &MixedWord) -> Result<RingElem> {
    if v.alpha() != w.alpha() {
        return Err(Error::LengthMismatch {
            expected: v.alpha(),
            found: w.alpha(),
        });
    }
    if v.beta() != w.beta() {
        return Err(Error::LengthMismatch {
            expected: v.beta(),
            found: w.beta(),
        });
    }
    let zq_sum = v
        .zq
        .iter()
        .zip(&w.zq)
        .fold(0, |acc, (&x, &y)| params.zadd(acc, params.zmul(x, y)));
    let r_sum = v
        .r
        .iter()
        .zip(&w.r)
        .fold(RingElem::ZERO, |acc, (&x, &y)| params.add(acc, params.mul(x, y)));
    Ok(params.add(RingElem { a: 0, b: zq_sum }, r_sum))
}

/// Euclidean product `Σ c_j w_j` on R^β.
pub fn r_inner_product(params: &RingParams, v: &[RingElem], w: &[RingElem]) -> RingElem {
    v.iter()
        .zip(w)
        .fold(RingElem::ZERO, |acc, (&x, &y)| params.add(acc, params.mul(x, y)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4() -> RingParams {
        RingParams::z4()
    }

    #[test]
    fn multiplication_examples() {
        let r = z4();
        assert_eq!(r.mul(r.elem(1, 1), r.elem(1, 1)), r.elem(1, 2));
        assert_eq!(r.mul(RingElem::U, RingElem::U), RingElem::ZERO);
        assert_eq!(r.mul(r.elem(2, 3), r.elem(3, 1)), r.elem(2, 3));
    }

    #[test]
    fn eta_examples() {
        let r = z4();
        assert_eq!(eta(r.elem(2, 3)), 2);
        assert_eq!(eta(RingElem::ZERO), 0);
        assert_eq!(eta(RingElem::U), 0);
    }

    #[test]
    fn ring_axioms_exhaustive_q4() {
        let r = z4();
        let all: Vec<_> = r.elements().collect();
        assert_eq!(all.len(), 16);
        for &x in &all {
            for &y in &all {
                assert_eq!(r.mul(x, y), r.mul(y, x));
                assert_eq!(eta(r.mul(x, y)), r.zmul(eta(x), eta(y)));
                assert_eq!(eta(r.add(x, y)), r.zadd(eta(x), eta(y)));
                for &z in &all {
                    assert_eq!(r.mul(r.mul(x, y), z), r.mul(x, r.mul(y, z)));
                    assert_eq!(r.mul(x, r.add(y, z)), r.add(r.mul(x, y), r.mul(x, z)));
                }
            }
        }
    }

    #[test]
    fn inverses() {
        for q in [4, 8, 9, 25] {
            let r = RingParams::from_modulus(q).unwrap();
            for x in r.elements() {
                match r.inv(x) {
                    Some(y) => assert_eq!(r.mul(x, y), RingElem::ONE),
                    None => assert!(!r.is_unit(x)),
                }
            }
        }
    }

    #[test]
    fn params_validation() {
        assert!(RingParams::new(4, 1).is_err());
        assert!(RingParams::new(2, 0).is_err());
        assert!(RingParams::from_modulus(12).is_err());
        assert!(RingParams::from_modulus(1 << 17).is_err());
        let r = RingParams::from_modulus(27).unwrap();
        assert_eq!((r.p(), r.s(), r.q()), (3, 3, 27));
    }

    #[test]
    fn automorphism_examples() {
        let r = z4();
        let t = Automorphism::new(r, 0, 3).unwrap();
        assert_eq!(t.order(), 2);
        assert_eq!(Automorphism::new(r, 0, 1).unwrap().order(), 1);
        assert_eq!(
            Automorphism::new(r, 1, 1),
            Err(Error::InvalidAutomorphism(AutomorphismFault::KIsUnit))
        );
        assert_eq!(
            Automorphism::new(r, 0, 2),
            Err(Error::InvalidAutomorphism(AutomorphismFault::DNotUnit))
        );
        assert_eq!(t.apply(r.elem(1, 2), 1), r.elem(1, 2));
        assert_eq!(t.apply(RingElem::U, 1), r.elem(0, 3));
        assert_eq!(t.apply(r.elem(5, 0), 1), r.elem(1, 0));
    }

    #[test]
    fn automorphism_census_q4() {
        let found: Vec<(u32, u32)> = Automorphism::all(z4()).iter().map(|t| (t.k(), t.d())).collect();
        assert_eq!(found, vec![(0, 1), (0, 3), (2, 1), (2, 3)]);
    }

    #[test]
    fn automorphisms_are_bijective_homomorphisms() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let r = RingParams::from_modulus(q).unwrap();
            for t in Automorphism::all(r) {
                let mut images: Vec<_> = r.elements().map(|x| t.apply(x, 1)).collect();
                for x in r.elements() {
                    assert_eq!(t.apply(x, t.order() as i64), x);
                    for y in r.elements() {
                        assert_eq!(t.apply(r.mul(x, y), 1), r.mul(t.apply(x, 1), t.apply(y, 1)));
                        assert_eq!(t.apply(r.add(x, y), 1), r.add(t.apply(x, 1), t.apply(y, 1)));
                    }
                }
                images.sort();
                images.dedup();
                assert_eq!(images.len(), (q * q) as usize);
            }
        }
    }

    #[test]
    fn star_mul_examples() {
        let r = z4();
        let w = MixedWord::new(vec![3], vec![r.elem(1, 1)]);
        assert_eq!(star_mul(&r, RingElem::U, &w), MixedWord::new(vec![0], vec![RingElem::U]));
        assert_eq!(star_mul(&r, RingElem::ONE, &w), w);
        let w = MixedWord::new(vec![1, 2], vec![r.elem(0, 3)]);
        assert_eq!(
            star_mul(&r, r.elem(2, 1), &w),
            MixedWord::new(vec![2, 0], vec![r.elem(0, 2)])
        );
    }

    #[test]
    fn inner_product_examples() {
        let r = z4();
        let v = MixedWord::new(vec![1], vec![]);
        assert_eq!(mixed_inner_product(&r, &v, &v).unwrap(), RingElem::U);
        let v = MixedWord::new(vec![], vec![RingElem::U]);
        assert_eq!(mixed_inner_product(&r, &v, &v).unwrap(), RingElem::ZERO);
        let v = MixedWord::new(vec![2], vec![r.elem(1, 1)]);
        let w = MixedWord::new(vec![3], vec![RingElem::ONE]);
        assert_eq!(mixed_inner_product(&r, &v, &w).unwrap(), r.elem(1, 3));
        let short = MixedWord::new(vec![], vec![RingElem::ONE]);
        assert!(matches!(
            mixed_inner_product(&r, &v, &short),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn star_action_is_symmetric_in_inner_product() {
        let r = z4();
        let words: Vec<MixedWord> = (0..4)
            .flat_map(|e| r.elements().map(move |x| MixedWord::new(vec![e], vec![x])))
            .collect();
        for c in r.elements() {
            for v in &words {
                for w in &words {
                    let left = mixed_inner_product(&r, &star_mul(&r, c, v), w).unwrap();
                    let right = mixed_inner_product(&r, v, &star_mul(&r, c, w)).unwrap();
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn elem_text_forms() {
        let r = z4();
        assert_eq!(r.parse_elem("3+2u").unwrap(), r.elem(3, 2));
        assert_eq!(r.parse_elem("u").unwrap(), RingElem::U);
        assert_eq!(r.parse_elem(" 0 ").unwrap(), RingElem::ZERO);
        assert_eq!(r.parse_elem("2u + 1").unwrap(), r.elem(1, 2));
        assert_eq!(r.parse_elem("7").unwrap(), r.elem(3, 0));
        assert_eq!(r.parse_elem("-u").unwrap(), r.elem(0, 3));
        assert!(r.parse_elem("").is_err());
        assert!(r.parse_elem("3+x").is_err());
        assert_eq!(r.elem(3, 2).to_string(), "3+2u");
    }

    #[test]
    fn mixed_word_text_form() {
        let r = z4();
        let w = MixedWord::parse("1, 2 | u, 3+1u", &r).unwrap();
        assert_eq!(w, MixedWord::new(vec![1, 2], vec![RingElem::U, r.elem(3, 1)]));
        assert_eq!(MixedWord::parse(&w.to_string(), &r).unwrap(), w);
        assert_eq!(MixedWord::parse(" | 1", &r).unwrap().alpha(), 0);
        assert!(MixedWord::parse("1,2", &r).is_err());
    }
}
