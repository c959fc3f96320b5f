//! Skew λ-constacyclic codes of length β over R.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::rings::{r_inner_product, RingElem, RingParams};
use crate::skewpoly::{SkewPoly, SkewRing};
use crate::zqlinalg::GenMatrix;

/// A unit λ = λ0 + uλ1 together with the skew ring it twists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Twist {
    ring: SkewRing,
    lambda: RingElem,
}

impl Twist {
    pub fn new(ring: SkewRing, lambda: RingElem) -> Result<Self> {
        if !ring.params().is_unit(lambda) {
            return Err(Error::NonUnitLambda);
        }
        Ok(Twist { ring, lambda })
    }

    pub fn ring(&self) -> SkewRing {
        self.ring
    }

    pub fn params(&self) -> RingParams {
        self.ring.params()
    }

    pub fn lambda(&self) -> RingElem {
        self.lambda
    }

    /// `θ(λ) = λ`.
    pub fn is_fixed(&self) -> bool {
        self.ring.theta().fixes(self.lambda)
    }

    /// The same ring twisted by `λ⁻¹`.
    pub fn inverse(&self) -> Twist {
        Twist {
            ring: self.ring,
            lambda: self.params().inv(self.lambda).expect("lambda is a unit"),
        }
    }

    /// `(c_0, …, c_{β-1}) ↦ (λθ(c_{β-1}), θ(c_0), …, θ(c_{β-2}))`.
    pub fn shift(&self, c: &[RingElem]) -> Vec<RingElem> {
        let Some((&last, init)) = c.split_last() else {
            return Vec::new();
        };
        let theta = self.ring.theta();
        let params = self.params();
        let mut out = Vec::with_capacity(c.len());
        out.push(params.mul(self.lambda, theta.apply(last, 1)));
        out.extend(init.iter().map(|&x| theta.apply(x, 1)));
        out
    }

    /// `x^β - λ`.
    pub fn modulus(&self, beta: usize) -> SkewPoly {
        self.ring.binomial(beta, self.lambda)
    }

    /// Coefficients of `f mod (x^β - λ)` (right remainder), length β.
    pub fn reduce(&self, f: &SkewPoly, beta: usize) -> Vec<RingElem> {
        let (_, rem) = f
            .right_divide(&self.modulus(beta))
            .expect("x^beta - lambda is monic");
        rem.padded(beta)
    }

    /// Whether `x^β - λ` is central, i.e. the quotient is a ring.
    pub fn is_central_for(&self, beta: usize) -> bool {
        self.ring.is_binomial_central(beta, self.lambda)
    }
}

/// Parameters of a code `⟨g⟩ ⊂ R[x; θ]/⟨x^β - λ⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RCodeSpec {
    pub beta: usize,
    pub twist: Twist,
    pub gen: SkewPoly,
}

impl RCodeSpec {
    /// Checks that `gen` right-divides `x^β - λ`.
    pub fn new(beta: usize, twist: Twist, gen: SkewPoly) -> Result<Self> {
        if gen.ring() != twist.ring() {
            return Err(Error::ContextMismatch);
        }
        match gen.degree() {
            Some(d) if d <= beta => {}
            _ => return Err(Error::GeneratorNotDivisor),
        }
        let (_, rem) = twist
            .modulus(beta)
            .right_divide(&gen)
            .map_err(|_| Error::GeneratorNotDivisor)?;
        if !rem.is_zero() {
            return Err(Error::GeneratorNotDivisor);
        }
        Ok(RCodeSpec { beta, twist, gen })
    }

    pub fn params(&self) -> RingParams {
        self.twist.params()
    }

    /// Basis rows `x^i ∗ g`, `0 ≤ i < β - deg g`.
    pub fn basis(&self) -> Vec<Vec<RingElem>> {
        let deg = self.gen.degree().expect("generator is nonzero");
        let ring = self.twist.ring();
        (0..self.beta - deg)
            .map(|i| {
                let shifted = ring
                    .monomial(RingElem::ONE, i)
                    .mul(&self.gen)
                    .expect("same ring");
                self.twist.reduce(&shifted, self.beta)
            })
            .collect()
    }
}

/// Coordinates of an R-vector over Z_q: unit parts then u-parts.
pub fn r_to_coords(v: &[RingElem]) -> Vec<u32> {
    v.iter().map(|x| x.a).chain(v.iter().map(|x| x.b)).collect()
}

pub fn r_from_coords(coords: &[u32]) -> Vec<RingElem> {
    let beta = coords.len() / 2;
    (0..beta)
        .map(|j| RingElem {
            a: coords[j],
            b: coords[beta + j],
        })
        .collect()
}

/// Z_q row space of the R-span of `rows`, in coordinate form.
pub fn r_span_matrix(params: RingParams, beta: usize, rows: &[Vec<RingElem>]) -> GenMatrix {
    let mut coords = Vec::with_capacity(2 * rows.len());
    for row in rows {
        coords.push(r_to_coords(row));
        let times_u: Vec<RingElem> = row.iter().map(|&x| params.mul(RingElem::U, x)).collect();
        coords.push(r_to_coords(&times_u));
    }
    GenMatrix::new(params, 2 * beta, coords)
        .expect("rows have length beta")
        .howell_form()
}

/// A materialised code over R.
#[derive(Debug, Clone)]
pub struct RCode {
    pub spec: RCodeSpec,
    matrix: GenMatrix,
    words: Vec<Vec<RingElem>>,
}

impl RCode {
    pub fn build(spec: RCodeSpec, cap: u128) -> Result<RCode> {
        let params = spec.params();
        let matrix = r_span_matrix(params, spec.beta, &spec.basis());
        let words = matrix
            .enumerate_codewords(cap)?
            .iter()
            .map(|c| r_from_coords(c))
            .collect();
        Ok(RCode {
            spec,
            matrix,
            words,
        })
    }

    pub fn words(&self) -> &[Vec<RingElem>] {
        &self.words
    }

    pub fn word_set(&self) -> HashSet<Vec<RingElem>> {
        self.words.iter().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Howell basis of the code in coordinate form.
    pub fn matrix(&self) -> &GenMatrix {
        &self.matrix
    }

    /// Z_q spanning rows as R-vectors.
    pub fn spanning_rows(&self) -> Vec<Vec<RingElem>> {
        self.matrix.rows().iter().map(|r| r_from_coords(r)).collect()
    }

    pub fn torsion(&self) -> HashSet<Vec<u32>> {
        torsion(&self.words)
    }

    pub fn residue(&self) -> HashSet<Vec<u32>> {
        residue(&self.words)
    }

    /// All `w ∈ R^β` with `Σ c_j w_j = 0` for every codeword `c`.
    pub fn brute_dual(&self, cap: u128, exec: Exec) -> Result<Vec<Vec<RingElem>>> {
        brute_dual_r(
            &self.spec.params(),
            self.spec.beta,
            &self.spanning_rows(),
            cap,
            exec,
        )
    }
}

/// `{b : ub ∈ C}`.
pub fn torsion(words: &[Vec<RingElem>]) -> HashSet<Vec<u32>> {
    words
        .iter()
        .filter(|w| w.iter().all(|x| x.a == 0))
        .map(|w| w.iter().map(|x| x.b).collect())
        .collect()
}

/// `{a : a + ub ∈ C for some b}`.
pub fn residue(words: &[Vec<RingElem>]) -> HashSet<Vec<u32>> {
    words
        .iter()
        .map(|w| w.iter().map(|x| x.a).collect())
        .collect()
}

pub fn is_shift_closed(words: &HashSet<Vec<RingElem>>, twist: &Twist) -> bool {
    words.iter().all(|w| words.contains(&twist.shift(w)))
}

/// Exhaustive annihilator scan over `R^β`. Orthogonality to a Z_q spanning
/// set is equivalent to orthogonality to every codeword.
pub fn brute_dual_r(
    params: &RingParams,
    beta: usize,
    spanning: &[Vec<RingElem>],
    cap: u128,
    exec: Exec,
) -> Result<Vec<Vec<RingElem>>> {
    let q = params.q() as u64;
    let total = (q as u128 * q as u128).checked_pow(beta as u32).unwrap_or(u128::MAX);
    Error::check_cap(total, cap)?;
    let candidate = |mut index: u64| {
        let mut w = vec![RingElem::ZERO; beta];
        for slot in w.iter_mut().rev() {
            let digit = index % (q * q);
            index /= q * q;
            *slot = RingElem {
                a: (digit / q) as u32,
                b: (digit % q) as u32,
            };
        }
        spanning
            .iter()
            .all(|c| r_inner_product(params, c, &w).is_zero())
            .then_some(w)
    };
    Ok(exec.filter_map_range(total as u64, candidate))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::Automorphism;

    fn ring() -> SkewRing {
        SkewRing::new(Automorphism::new(RingParams::z4(), 0, 3).unwrap())
    }

    fn e(a: i64, b: i64) -> RingElem {
        RingParams::z4().elem(a, b)
    }

    #[test]
    fn shift_examples() {
        let t = Twist::new(ring(), RingElem::ONE).unwrap();
        assert_eq!(t.shift(&[RingElem::ONE, RingElem::U]), vec![e(0, 3), RingElem::ONE]);
        let t = Twist::new(ring(), e(3, 0)).unwrap();
        assert_eq!(t.shift(&[e(1, 1), e(2, 0)]), vec![e(2, 0), e(1, 3)]);
        let id = SkewRing::new(Automorphism::identity(RingParams::z4()));
        let t = Twist::new(id, RingElem::ONE).unwrap();
        assert_eq!(t.shift(&[e(1, 0), e(2, 0), e(3, 1)]), vec![e(3, 1), e(1, 0), e(2, 0)]);
        assert_eq!(Twist::new(ring(), e(2, 1)), Err(Error::NonUnitLambda));
    }

    #[test]
    fn trivial_codes() {
        let t = Twist::new(ring(), RingElem::ONE).unwrap();
        let zero = RCode::build(RCodeSpec::new(2, t, t.modulus(2)).unwrap(), 1 << 20).unwrap();
        assert_eq!(zero.len(), 1);
        let full = RCode::build(RCodeSpec::new(2, t, ring().one()).unwrap(), 1 << 20).unwrap();
        assert_eq!(full.len(), 256);
        assert_eq!(full.torsion().len(), 16);
        assert_eq!(full.residue().len(), 16);
        assert_eq!(zero.torsion().len(), 1);
        assert_eq!(zero.residue().len(), 1);
    }

    #[test]
    fn non_divisor_is_rejected() {
        let t = Twist::new(ring(), RingElem::ONE).unwrap();
        let g = ring().poly(vec![e(2, 0), RingElem::ONE]);
        assert_eq!(RCodeSpec::new(2, t, g), Err(Error::GeneratorNotDivisor));
    }

    #[test]
    fn torsion_residue_of_u_multiples() {
        let words: Vec<Vec<RingElem>> = (0..4).map(|b| vec![e(0, b)]).collect();
        assert_eq!(torsion(&words).len(), 4);
        assert_eq!(residue(&words), HashSet::from([vec![0]]));
    }

    #[test]
    fn shift_closure_predicate() {
        let t = Twist::new(ring(), RingElem::ONE).unwrap();
        assert!(is_shift_closed(&HashSet::from([vec![RingElem::ZERO; 2]]), &t));
        assert!(!is_shift_closed(&HashSet::from([vec![RingElem::ONE, RingElem::ZERO]]), &t));
    }

    #[test]
    fn dual_examples() {
        let r = RingParams::z4();
        let all = brute_dual_r(&r, 1, &[], 1 << 20, Exec::Sequential).unwrap();
        assert_eq!(all.len(), 16);
        let none = brute_dual_r(&r, 1, &[vec![RingElem::ONE]], 1 << 20, Exec::Parallel).unwrap();
        assert_eq!(none, vec![vec![RingElem::ZERO]]);
        assert!(matches!(
            brute_dual_r(&r, 8, &[], 1 << 20, Exec::Sequential),
            Err(Error::EnumerationCapExceeded { .. })
        ));
    }
}
