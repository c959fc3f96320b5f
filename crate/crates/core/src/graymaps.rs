//! Gray maps to Z_q, Lee weight and quasi-twisted closure predicates.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rings::{Automorphism, MixedWord, RingElem, RingParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GrayVariant {
    /// `a + ub ↦ (b, a + b)`, blockwise over the R coordinates.
    Double,
    /// `a + ub ↦ (b, 2a + 3b, a + 3b)`, only over Z_4.
    Triple,
}

impl GrayVariant {
    pub const ALL: [GrayVariant; 2] = [GrayVariant::Double, GrayVariant::Triple];

    /// Image length for the ambient Z_q^α R^β.
    pub fn image_len(self, alpha: usize, beta: usize) -> usize {
        match self {
            GrayVariant::Double => alpha + 2 * beta,
            GrayVariant::Triple => alpha + 3 * beta,
        }
    }

    /// The variant producing length `n`, if any.
    pub fn infer(alpha: usize, beta: usize, n: usize) -> Option<GrayVariant> {
        GrayVariant::ALL
            .into_iter()
            .find(|v| v.image_len(alpha, beta) == n)
    }

    pub fn check(self, params: &RingParams) -> Result<()> {
        if self == GrayVariant::Triple && params.q() != 4 {
            return Err(Error::UnsupportedVariant(format!(
                "the triple map needs q = 4, got q = {}",
                params.q()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for GrayVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GrayVariant::Double => "double",
            GrayVariant::Triple => "triple",
        })
    }
}

impl FromStr for GrayVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "double" => Ok(GrayVariant::Double),
            "triple" => Ok(GrayVariant::Triple),
            other => Err(Error::UnsupportedVariant(other.to_string())),
        }
    }
}

/// `Ψ(r_0, …, r_{β-1}) = (b_0, …, b_{β-1}, a_0 + b_0, …, a_{β-1} + b_{β-1})`.
pub fn gray_psi(params: &RingParams, v: &[RingElem]) -> Vec<u32> {
    let mut out: Vec<u32> = v.iter().map(|x| x.b).collect();
    out.extend(v.iter().map(|x| params.zadd(x.a, x.b)));
    out
}

fn gray_triple_block(params: &RingParams, v: &[RingElem]) -> Vec<u32> {
    let mut out: Vec<u32> = v.iter().map(|x| x.b).collect();
    out.extend(
        v.iter()
            .map(|x| params.zadd(params.zmul(2, x.a), params.zmul(3, x.b))),
    );
    out.extend(v.iter().map(|x| params.zadd(x.a, params.zmul(3, x.b))));
    out
}

/// `Φ(e | r) = (e, gray(r))`, identity on the Z_q block.
pub fn gray_phi(params: &RingParams, w: &MixedWord, variant: GrayVariant) -> Result<Vec<u32>> {
    variant.check(params)?;
    let mut out = w.zq.clone();
    out.extend(match variant {
        GrayVariant::Double => gray_psi(params, &w.r),
        GrayVariant::Triple => gray_triple_block(params, &w.r),
    });
    Ok(out)
}

/// Gray image of a word given in coordinate form (see [`MixedWord::to_coords`]).
pub fn gray_coords(
    params: &RingParams,
    coords: &[u32],
    alpha: usize,
    beta: usize,
    variant: GrayVariant,
) -> Result<Vec<u32>> {
    gray_phi(params, &MixedWord::from_coords(coords, alpha, beta), variant)
}

/// `Σ min(x_i, q - x_i)`.
pub fn lee_weight(params: &RingParams, v: &[u32]) -> u32 {
    v.iter().map(|&x| params.lee(x % params.q())).sum()
}

pub fn lee_distance(params: &RingParams, v: &[u32], w: &[u32]) -> u32 {
    v.iter()
        .zip(w)
        .map(|(&x, &y)| params.lee(params.zsub(x, y)))
        .sum()
}

fn check_blocks(words: &HashSet<Vec<u32>>, index_l: usize) -> Result<usize> {
    let Some(n) = words.iter().next().map(Vec::len) else {
        return Ok(0);
    };
    if let Some(bad) = words.iter().find(|w| w.len() != n) {
        return Err(Error::LengthMismatch {
            expected: n,
            found: bad.len(),
        });
    }
    if index_l == 0 || n % index_l != 0 {
        return Err(Error::LengthNotDivisible { len: n, index: index_l });
    }
    Ok(n)
}

/// `(c_{0,·}, …, c_{N-1,·}) ↦ (λ c_{N-1,·}, c_{0,·}, …, c_{N-2,·})` on blocks of
/// length `l`.
pub fn qt_shift(params: &RingParams, word: &[u32], lambda: u32, index_l: usize) -> Vec<u32> {
    let n = word.len();
    let mut out = Vec::with_capacity(n);
    out.extend(word[n - index_l..].iter().map(|&x| params.zmul(lambda, x)));
    out.extend_from_slice(&word[..n - index_l]);
    out
}

pub fn qt_closed(
    params: &RingParams,
    words: &HashSet<Vec<u32>>,
    lambda: u32,
    index_l: usize,
) -> Result<bool> {
    let n = check_blocks(words, index_l)?;
    if n == 0 {
        return Ok(true);
    }
    Ok(words
        .iter()
        .all(|w| words.contains(&qt_shift(params, w, lambda, index_l))))
}

/// `(c_1, …, c_{Nl}) ↦ (λ_1 c_{Nl}, λ_2 c_{Nl-1}, …, λ_l c_{(N-1)l+1}, c_1, …, c_{(N-1)l})`.
/// The wrapped block enters in reverse order.
pub fn generalized_qt_shift(params: &RingParams, word: &[u32], lambdas: &[u32]) -> Vec<u32> {
    let n = word.len();
    let l = lambdas.len();
    let mut out = Vec::with_capacity(n);
    out.extend(
        lambdas
            .iter()
            .enumerate()
            .map(|(i, &lam)| params.zmul(lam, word[n - 1 - i])),
    );
    out.extend_from_slice(&word[..n - l]);
    out
}

pub fn generalized_qt_closed(
    params: &RingParams,
    words: &HashSet<Vec<u32>>,
    lambdas: &[u32],
) -> Result<bool> {
    let n = check_blocks(words, lambdas.len())?;
    if n == 0 {
        return Ok(true);
    }
    Ok(words
        .iter()
        .all(|w| words.contains(&generalized_qt_shift(params, w, lambdas))))
}

/// Maps `Ψ(c)` to `Ψ(shift(c))` directly on Z_q coordinates, where `shift` is
/// the skew λ-constacyclic shift. Works from `(b_i, a_i + b_i)` alone.
pub fn psi_block_map(
    params: &RingParams,
    theta: &Automorphism,
    lambda: RingElem,
    psi: &[u32],
) -> Vec<u32> {
    let beta = psi.len() / 2;
    let (k, d) = (theta.k(), theta.d());
    let (l0, l1) = (lambda.a, lambda.b);
    let z = params;
    let b = |i: usize| psi[i];
    let a = |i: usize| z.zsub(psi[beta + i], psi[i]);
    let last = beta - 1;
    let mut out = Vec::with_capacity(2 * beta);
    out.push(z.zadd(
        z.zmul(l1, a(last)),
        z.zmul(z.zadd(z.zmul(l0, d), z.zmul(l1, k)), b(last)),
    ));
    out.extend((0..last).map(|i| z.zmul(d, b(i))));
    out.push(z.zadd(
        z.zmul(z.zadd(l0, l1), a(last)),
        z.zmul(z.zadd(z.zmul(z.zadd(k, d), l0), z.zmul(k, l1)), b(last)),
    ));
    out.extend((0..last).map(|i| z.zadd(a(i), z.zmul(z.zadd(k, d), b(i)))));
    out
}
