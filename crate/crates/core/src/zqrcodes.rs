//! Z_qR-linear skew constacyclic codes in Z_q^α × R^β, and their
//! two-ambient ("double") generalisation.
//!
//! Codes are held as Howell matrices over the coordinate form of mixed words
//! (Z_q block, unit parts, u-parts). Gray images are obtained by mapping the
//! rows, since every Gray map here is Z_q-linear.

use std::collections::HashSet;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graymaps::{gray_coords, GrayVariant};
use crate::rcodes::Twist;
use crate::rings::{eta, mixed_inner_product, MixedWord, RingElem, RingParams};
use crate::skewpoly::SkewPoly;
use crate::zqlinalg::GenMatrix;
use crate::zqpoly::ZqPoly;

/// `(e | r) ↦ (e_{α-1}, e_0, …, e_{α-2} | λθ(r_{β-1}), θ(r_0), …, θ(r_{β-2}))`.
pub fn mixed_shift(twist: &Twist, w: &MixedWord) -> MixedWord {
    let mut zq = w.zq.clone();
    if !zq.is_empty() {
        zq.rotate_right(1);
    }
    MixedWord {
        zq,
        r: twist.shift(&w.r),
    }
}

/// `h · (f, g) = (η(h) f mod x^α - 1, h ∗ g mod x^β - λ)`.
pub fn poly_scalar_action(h: &SkewPoly, w: &MixedWord, twist: &Twist) -> MixedWord {
    let params = twist.params();
    let alpha = w.alpha();
    let mut zq = vec![0u32; alpha];
    if alpha > 0 {
        for (i, &hi) in h.coeffs().iter().enumerate() {
            let c = eta(hi);
            if c == 0 {
                continue;
            }
            for (j, &ej) in w.zq.iter().enumerate() {
                let slot = (i + j) % alpha;
                zq[slot] = params.zadd(zq[slot], params.zmul(c, ej));
            }
        }
    }
    let beta = w.beta();
    let r = if beta == 0 {
        Vec::new()
    } else {
        let g = twist.ring().poly(w.r.clone());
        let prod = h.mul(&g).expect("same ring");
        twist.reduce(&prod, beta)
    };
    MixedWord { zq, r }
}

/// Which factorisation recovered the generator from a parity check polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FactorSide {
    /// `x^β - λ = g ∗ h`.
    Right,
    /// `x^β - λ = h ∗ g`.
    Left,
}

impl fmt::Display for FactorSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FactorSide::Right => "g*h",
            FactorSide::Left => "h*g",
        })
    }
}

/// Finds `g` with `x^β - λ = g ∗ h`, falling back to `x^β - λ = h ∗ g`.
pub fn generator_from_parity(h: &SkewPoly, beta: usize, twist: &Twist) -> Result<(SkewPoly, FactorSide)> {
    if !h.is_monic() {
        return Err(Error::NotAParityCheck);
    }
    let target = twist.modulus(beta);
    let (g, rem) = target.right_divide(h)?;
    if rem.is_zero() {
        return Ok((g, FactorSide::Right));
    }
    let (g, rem) = target.left_divide(h)?;
    if rem.is_zero() {
        return Ok((g, FactorSide::Left));
    }
    Err(Error::NotAParityCheck)
}

/// Parameters of the code generated by `(g_α, g_β)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedCodeSpec {
    pub alpha: usize,
    pub beta: usize,
    pub twist: Twist,
    pub g_alpha: ZqPoly,
    pub g_beta: SkewPoly,
}

impl MixedCodeSpec {
    /// Requires `g_α | x^α - 1` over Z_q and `g_β` right-dividing `x^β - λ`.
    pub fn new(alpha: usize, beta: usize, twist: Twist, g_alpha: ZqPoly, g_beta: SkewPoly) -> Result<Self> {
        if g_alpha.params() != twist.params() || g_beta.ring() != twist.ring() {
            return Err(Error::ContextMismatch);
        }
        if alpha > 0 && !g_alpha.divides_cyclic(alpha).unwrap_or(false) {
            return Err(Error::GeneratorNotDivisor);
        }
        if beta > 0 {
            let (_, rem) = twist
                .modulus(beta)
                .right_divide(&g_beta)
                .map_err(|_| Error::GeneratorNotDivisor)?;
            if !rem.is_zero() {
                return Err(Error::GeneratorNotDivisor);
            }
        }
        Ok(MixedCodeSpec {
            alpha,
            beta,
            twist,
            g_alpha,
            g_beta,
        })
    }

    pub fn params(&self) -> RingParams {
        self.twist.params()
    }

    /// The generator `(g_α mod x^α - 1, g_β mod x^β - λ)` as a mixed word.
    pub fn generator(&self) -> MixedWord {
        MixedWord {
            zq: self.g_alpha.wrap(self.alpha),
            r: if self.beta == 0 {
                Vec::new()
            } else {
                self.twist.reduce(&self.g_beta, self.beta)
            },
        }
    }

    /// `m · lcm(α, β)`, the hard bound on shift exponents in the spanning rows.
    pub fn shift_bound(&self) -> usize {
        let m = self.twist.ring().theta().order() as usize;
        m * self.alpha.max(1).lcm(&self.beta.max(1))
    }
}

/// How the rows of a mixed code are generated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpanRule {
    /// The full cyclic left module: rows are saturated under `x` and `u`.
    Module,
    /// Rows `x^i · g` and `(u x^i) · g` for `i < bound`.
    Shifts(usize),
    /// `Shifts(β - deg g_β)`: one row pair per degree of the parity check
    /// polynomial, the spanning set of the R block on its own.
    Parity,
}

/// A Z_qR-linear code held as a Howell matrix in coordinate form.
#[derive(Debug, Clone)]
pub struct MixedCode {
    alpha: usize,
    beta: usize,
    params: RingParams,
    matrix: GenMatrix,
}

impl MixedCode {
    pub fn from_words(params: RingParams, alpha: usize, beta: usize, words: &[MixedWord]) -> MixedCode {
        let rows = words.iter().map(MixedWord::to_coords).collect();
        let matrix = GenMatrix::new(params, alpha + 2 * beta, rows)
            .expect("words match the ambient")
            .howell_form();
        MixedCode {
            alpha,
            beta,
            params,
            matrix,
        }
    }

    /// The code generated by `(g_α, g_β)` under the given row rule.
    pub fn build(spec: &MixedCodeSpec, rule: SpanRule) -> MixedCode {
        let gen = spec.generator();
        let params = spec.params();
        let rule = match rule {
            SpanRule::Parity => {
                SpanRule::Shifts(spec.beta - spec.g_beta.degree().unwrap_or(spec.beta).min(spec.beta))
            }
            other => other,
        };
        match rule {
            SpanRule::Parity => unreachable!("resolved above"),
            SpanRule::Shifts(bound) => {
                let mut rows = Vec::with_capacity(2 * bound);
                let mut w = gen;
                for _ in 0..bound {
                    rows.push(crate::rings::star_mul(&params, RingElem::U, &w));
                    let next = mixed_shift(&spec.twist, &w);
                    rows.push(w);
                    w = next;
                }
                MixedCode::from_words(params, spec.alpha, spec.beta, &rows)
            }
            SpanRule::Module => {
                let mut code = MixedCode::from_words(params, spec.alpha, spec.beta, &[gen]);
                loop {
                    let basis = code.rows();
                    let mut extra: Vec<MixedWord> = Vec::new();
                    for w in &basis {
                        for image in [
                            mixed_shift(&spec.twist, w),
                            crate::rings::star_mul(&params, RingElem::U, w),
                        ] {
                            if !code.contains(&image) {
                                extra.push(image);
                            }
                        }
                    }
                    if extra.is_empty() {
                        return code;
                    }
                    extra.extend(basis);
                    code = MixedCode::from_words(params, spec.alpha, spec.beta, &extra);
                }
            }
        }
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    pub fn params(&self) -> RingParams {
        self.params
    }

    pub fn matrix(&self) -> &GenMatrix {
        &self.matrix
    }

    /// Howell basis rows as mixed words.
    pub fn rows(&self) -> Vec<MixedWord> {
        self.matrix
            .rows()
            .iter()
            .map(|r| MixedWord::from_coords(r, self.alpha, self.beta))
            .collect()
    }

    pub fn size(&self) -> u128 {
        self.matrix.code_type().size()
    }

    pub fn contains(&self, w: &MixedWord) -> bool {
        w.alpha() == self.alpha && w.beta() == self.beta && self.matrix.contains(&w.to_coords())
    }

    pub fn same_code(&self, other: &MixedCode) -> bool {
        self.alpha == other.alpha && self.beta == other.beta && self.matrix.same_span(&other.matrix)
    }

    pub fn words(&self, cap: u128) -> Result<Vec<MixedWord>> {
        Ok(self
            .matrix
            .enumerate_codewords(cap)?
            .iter()
            .map(|c| MixedWord::from_coords(c, self.alpha, self.beta))
            .collect())
    }

    /// Generator matrix of the Gray image, in Howell form.
    pub fn gray_matrix(&self, variant: GrayVariant) -> Result<GenMatrix> {
        variant.check(&self.params)?;
        let (alpha, beta, params) = (self.alpha, self.beta, self.params);
        self.matrix
            .map_rows(variant.image_len(alpha, beta), |row| {
                gray_coords(&params, row, alpha, beta, variant).expect("variant checked")
            })
            .map(|m| m.howell_form())
    }

    /// Closed under the mixed shift (checked on the Howell basis).
    pub fn is_shift_closed(&self, twist: &Twist) -> bool {
        self.rows()
            .iter()
            .all(|w| self.contains(&mixed_shift(twist, w)))
    }

    /// Closed under `h ·` (checked on the Howell basis).
    pub fn is_closed_under(&self, h: &SkewPoly, twist: &Twist) -> bool {
        self.rows()
            .iter()
            .all(|w| self.contains(&poly_scalar_action(h, w, twist)))
    }
}

/// `C_α × C_β` as an explicit set.
pub fn separable_product(
    c_alpha: &HashSet<Vec<u32>>,
    c_beta: &HashSet<Vec<RingElem>>,
) -> HashSet<MixedWord> {
    c_alpha
        .iter()
        .flat_map(|e| {
            c_beta
                .iter()
                .map(move |r| MixedWord::new(e.clone(), r.clone()))
        })
        .collect()
}

pub fn is_mixed_shift_closed(words: &HashSet<MixedWord>, twist: &Twist) -> bool {
    words.iter().all(|w| words.contains(&mixed_shift(twist, w)))
}

/// Cyclic closure of a Z_q code.
pub fn is_cyclic_closed(words: &HashSet<Vec<u32>>) -> bool {
    words.iter().all(|w| {
        let mut s = w.clone();
        if !s.is_empty() {
            s.rotate_right(1);
        }
        words.contains(&s)
    })
}

/// All `w ∈ Z_q^α R^β` orthogonal (as an element of R) to every word in
/// `spanning`, by exhaustive scan.
pub fn brute_dual_mixed(
    params: &RingParams,
    alpha: usize,
    beta: usize,
    spanning: &[MixedWord],
    cap: u128,
    exec: Exec,
) -> Result<Vec<MixedWord>> {
    let q = params.q() as u128;
    let total = q
        .checked_pow((alpha + 2 * beta) as u32)
        .unwrap_or(u128::MAX);
    Error::check_cap(total, cap)?;
    let q = q as u64;
    let n = alpha + 2 * beta;
    let candidate = |mut index: u64| {
        let mut coords = vec![0u32; n];
        for slot in coords.iter_mut().rev() {
            *slot = (index % q) as u32;
            index /= q;
        }
        let w = MixedWord::from_coords(&coords, alpha, beta);
        spanning
            .iter()
            .all(|v| mixed_inner_product(params, v, &w).is_ok_and(|x| x.is_zero()))
            .then_some(w)
    };
    Ok(exec.filter_map_range(total as u64, candidate))
}

/// Four block lengths sharing one twist: `Z_q^α R^β × Z_q^α' R^β'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleSpec {
    pub alpha: usize,
    pub beta: usize,
    pub alpha2: usize,
    pub beta2: usize,
    pub twist: Twist,
    pub g_alpha: ZqPoly,
    pub g_beta: SkewPoly,
    pub g_alpha2: ZqPoly,
    pub g_beta2: SkewPoly,
}

/// A word of the double ambient.
pub type DoubleWord = (MixedWord, MixedWord);

impl DoubleSpec {
    /// Image lengths `(n_1, n_2)` under the double Gray map.
    pub fn gray_lengths(&self) -> (usize, usize) {
        (self.alpha + 2 * self.beta, self.alpha2 + 2 * self.beta2)
    }

    fn generator(&self) -> DoubleWord {
        let reduce = |g: &SkewPoly, beta: usize| {
            if beta == 0 {
                Vec::new()
            } else {
                self.twist.reduce(g, beta)
            }
        };
        (
            MixedWord::new(self.g_alpha.wrap(self.alpha), reduce(&self.g_beta, self.beta)),
            MixedWord::new(self.g_alpha2.wrap(self.alpha2), reduce(&self.g_beta2, self.beta2)),
        )
    }
}

/// Simultaneous shift of all four blocks.
pub fn double_shift(twist: &Twist, w: &DoubleWord) -> DoubleWord {
    (mixed_shift(twist, &w.0), mixed_shift(twist, &w.1))
}

/// Explicit module span of the four-block generator.
pub fn build_double_code(spec: &DoubleSpec, cap: u128) -> Result<HashSet<DoubleWord>> {
    let params = spec.twist.params();
    let (a1, b1, a2, b2) = (spec.alpha, spec.beta, spec.alpha2, spec.beta2);
    let split = a1 + 2 * b1;
    let to_coords = |w: &DoubleWord| {
        let mut c = w.0.to_coords();
        c.extend(w.1.to_coords());
        c
    };
    let from_coords = |c: &[u32]| {
        (
            MixedWord::from_coords(&c[..split], a1, b1),
            MixedWord::from_coords(&c[split..], a2, b2),
        )
    };
    let cols = split + a2 + 2 * b2;
    let star_u = |w: &DoubleWord| {
        (
            crate::rings::star_mul(&params, RingElem::U, &w.0),
            crate::rings::star_mul(&params, RingElem::U, &w.1),
        )
    };
    let mut matrix = GenMatrix::new(params, cols, vec![to_coords(&spec.generator())])?.howell_form();
    loop {
        let basis: Vec<DoubleWord> = matrix.rows().iter().map(|r| from_coords(r)).collect();
        let extra: Vec<Vec<u32>> = basis
            .iter()
            .flat_map(|w| [double_shift(&spec.twist, w), star_u(w)])
            .map(|w| to_coords(&w))
            .filter(|c| !matrix.contains(c))
            .collect();
        if extra.is_empty() {
            break;
        }
        let mut rows = matrix.rows().to_vec();
        rows.extend(extra);
        matrix = GenMatrix::new(params, cols, rows)?.howell_form();
    }
    Ok(matrix
        .enumerate_codewords(cap)?
        .iter()
        .map(|c| from_coords(c))
        .collect())
}

pub fn is_double_shift_closed(words: &HashSet<DoubleWord>, twist: &Twist) -> bool {
    words.iter().all(|w| words.contains(&double_shift(twist, w)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::Automorphism;
    use crate::skewpoly::SkewRing;

    fn ring() -> SkewRing {
        SkewRing::new(Automorphism::new(RingParams::z4(), 0, 3).unwrap())
    }

    fn e(a: i64, b: i64) -> RingElem {
        RingParams::z4().elem(a, b)
    }

    #[test]
    fn mixed_shift_examples() {
        let t = Twist::new(ring(), e(3, 0)).unwrap();
        let w = MixedWord::new(vec![1, 2], vec![RingElem::U, RingElem::ONE]);
        assert_eq!(
            mixed_shift(&t, &w),
            MixedWord::new(vec![2, 1], vec![e(3, 0), e(0, 3)])
        );
        let id = Twist::new(SkewRing::new(Automorphism::identity(RingParams::z4())), RingElem::ONE).unwrap();
        let w = MixedWord::new(vec![1, 2, 3], vec![e(1, 0), e(0, 1)]);
        assert_eq!(mixed_shift(&id, &w), MixedWord::new(vec![3, 1, 2], vec![e(0, 1), e(1, 0)]));
        let zero = MixedWord::zero(2, 2);
        assert_eq!(mixed_shift(&t, &zero), zero);
    }

    #[test]
    fn scalar_action_examples() {
        let t = Twist::new(ring(), RingElem::ONE).unwrap();
        let w = MixedWord::new(vec![1, 0], vec![RingElem::ONE, RingElem::ZERO]);
        assert_eq!(poly_scalar_action(&ring().x(), &w, &t), mixed_shift(&t, &w));
        let u = ring().constant(RingElem::U);
        assert_eq!(
            poly_scalar_action(&u, &w, &t),
            MixedWord::new(vec![0, 0], vec![RingElem::U, RingElem::ZERO])
        );
        let h = ring().monomial(e(1, 1), 1);
        assert_eq!(
            poly_scalar_action(&h, &w, &t),
            MixedWord::new(vec![0, 1], vec![RingElem::ZERO, e(1, 1)])
        );
    }

    #[test]
    fn parity_examples() {
        let t = Twist::new(ring(), RingElem::ONE).unwrap();
        let h = ring().parse("1,1,2+u,1").unwrap();
        let (g, side) = generator_from_parity(&h, 14, &t).unwrap();
        assert_eq!(side, FactorSide::Right);
        assert_eq!(g.degree(), Some(11));
        assert!(g.is_monic());
        assert_eq!(g.mul(&h).unwrap(), t.modulus(14));
        let (g, _) = generator_from_parity(&t.modulus(4), 4, &t).unwrap();
        assert_eq!(g, ring().one());
        let (g, _) = generator_from_parity(&ring().one(), 4, &t).unwrap();
        assert_eq!(g, t.modulus(4));
        let not = ring().parse("1,1").unwrap();
        assert_eq!(generator_from_parity(&not, 3, &t).unwrap_err(), Error::NotAParityCheck);
        let non_monic = ring().parse("1,2").unwrap();
        assert_eq!(generator_from_parity(&non_monic, 3, &t).unwrap_err(), Error::NotAParityCheck);
    }

    #[test]
    fn trivial_mixed_codes() {
        let r = RingParams::z4();
        let t = Twist::new(ring(), RingElem::ONE).unwrap();
        let zero = MixedCodeSpec::new(2, 2, t, ZqPoly::cyclic_modulus(r, 2), t.modulus(2)).unwrap();
        assert_eq!(MixedCode::build(&zero, SpanRule::Module).size(), 1);
        // (1, 1) generates {(η(h), h)}: the Z_q block is tied to the unit
        // parts of the R block, so only |R|^β words, not the whole ambient.
        let diag = MixedCodeSpec::new(2, 2, t, ZqPoly::new(r, vec![1]), ring().one()).unwrap();
        let code = MixedCode::build(&diag, SpanRule::Module);
        assert_eq!(code.size(), 256);
        assert!(!code.contains(&MixedWord::new(vec![1, 0], vec![RingElem::ZERO; 2])));
        let full = MixedCode::from_words(
            r,
            2,
            2,
            &[
                MixedWord::new(vec![1, 0], vec![RingElem::ZERO; 2]),
                MixedWord::new(vec![0, 0], vec![RingElem::ONE, RingElem::ZERO]),
            ],
        );
        assert_eq!(full.size(), 16);
    }

    #[test]
    fn spec_validation() {
        let r = RingParams::z4();
        let t = Twist::new(ring(), RingElem::ONE).unwrap();
        let bad_alpha = MixedCodeSpec::new(2, 2, t, ZqPoly::new(r, vec![1, 1, 1]), ring().one());
        assert_eq!(bad_alpha.unwrap_err(), Error::GeneratorNotDivisor);
        let bad_beta = MixedCodeSpec::new(2, 2, t, ZqPoly::new(r, vec![1]), ring().parse("2,1").unwrap());
        assert_eq!(bad_beta.unwrap_err(), Error::GeneratorNotDivisor);
    }

    #[test]
    fn double_code_examples() {
        let r = RingParams::z4();
        let t = Twist::new(ring(), RingElem::ONE).unwrap();
        let zero_spec = DoubleSpec {
            alpha: 1,
            beta: 2,
            alpha2: 1,
            beta2: 2,
            twist: t,
            g_alpha: ZqPoly::new(r, vec![]),
            g_beta: ring().zero(),
            g_alpha2: ZqPoly::new(r, vec![]),
            g_beta2: ring().zero(),
        };
        let zero = build_double_code(&zero_spec, 1 << 20).unwrap();
        assert_eq!(zero.len(), 1);
        assert!(is_double_shift_closed(&zero, &t));
        let g = ring().parse("3,1").unwrap();
        let diag = DoubleSpec {
            g_alpha: ZqPoly::new(r, vec![1]),
            g_beta: g.clone(),
            g_alpha2: ZqPoly::new(r, vec![1]),
            g_beta2: g,
            ..zero_spec
        };
        let code = build_double_code(&diag, 1 << 20).unwrap();
        assert!(code.len() > 1);
        assert!(is_double_shift_closed(&code, &t));
        let lone = HashSet::from([(
            MixedWord::new(vec![1], vec![RingElem::ONE, RingElem::ZERO]),
            MixedWord::zero(1, 2),
        )]);
        assert!(!is_double_shift_closed(&lone, &t));
    }
}
