//! The skew polynomial ring R[x; θ] with `x ∗ a = θ(a) x`.

use std::fmt;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::rings::{split_list, Automorphism, RingElem, RingParams};

/// Default cap on the number of candidates a divisor search may visit.
pub const DEFAULT_DIVISOR_CAP: u128 = 1 << 24;

/// The context of a skew polynomial: coefficient ring plus automorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SkewRing {
    theta: Automorphism,
}

impl SkewRing {
    pub fn new(theta: Automorphism) -> Self {
        SkewRing { theta }
    }

    pub fn params(&self) -> RingParams {
        self.theta.params()
    }

    pub fn theta(&self) -> Automorphism {
        self.theta
    }

    pub fn zero(&self) -> SkewPoly {
        SkewPoly {
            ring: *self,
            coeffs: Vec::new(),
        }
    }

    pub fn one(&self) -> SkewPoly {
        self.constant(RingElem::ONE)
    }

    pub fn constant(&self, c: RingElem) -> SkewPoly {
        self.poly(vec![c])
    }

    /// `c x^n`.
    pub fn monomial(&self, c: RingElem, n: usize) -> SkewPoly {
        let mut coeffs = vec![RingElem::ZERO; n + 1];
        coeffs[n] = c;
        self.poly(coeffs)
    }

    pub fn x(&self) -> SkewPoly {
        self.monomial(RingElem::ONE, 1)
    }

    /// `x^n - λ`.
    pub fn binomial(&self, n: usize, lambda: RingElem) -> SkewPoly {
        let mut coeffs = vec![RingElem::ZERO; n + 1];
        coeffs[n] = RingElem::ONE;
        coeffs[0] = self.params().sub(coeffs[0], lambda);
        self.poly(coeffs)
    }

    /// Builds a polynomial from ascending coefficients, stripping trailing zeros.
    pub fn poly(&self, coeffs: Vec<RingElem>) -> SkewPoly {
        let mut p = SkewPoly { ring: *self, coeffs };
        p.normalize();
        p
    }

    /// Parses ascending comma separated coefficients (`3+3u,2+3u,1,1+u,1`).
    /// A bare digit string such as `31212201` is read one coefficient per
    /// digit when `q ≤ 10`.
    pub fn parse(&self, text: &str) -> Result<SkewPoly> {
        let params = self.params();
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Err(Error::parse(0, "empty polynomial"));
        }
        if !trimmed.contains(',') && trimmed.len() > 1 && trimmed.bytes().all(|c| c.is_ascii_digit())
            && params.q() <= 10 {
                let digits = crate::zqpoly::parse_digits(trimmed, &params)?;
                return Ok(self.poly(digits.into_iter().map(RingElem::scalar).collect()));
            }
        let coeffs = split_list(text)
            .map(|(pos, item)| {
                params.parse_elem(item).map_err(|e| match e {
                    Error::Parse { pos: p, msg } => Error::parse(pos + p, msg),
                    other => other,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if coeffs.is_empty() {
            return Err(Error::parse(0, "no coefficients"));
        }
        Ok(self.poly(coeffs))
    }

    /// `x^β - λ` is central iff `m | β` and `θ(λ) = λ`.
    pub fn is_binomial_central(&self, beta: usize, lambda: RingElem) -> bool {
        beta.is_multiple_of(self.theta.order() as usize) && self.theta.fixes(lambda)
    }

    /// Enumerates monic `h` of degree `deg_h` and keeps those with
    /// `x^β - λ = g ∗ h`, returning `(g, h)` in enumeration order.
    ///
    /// The free coefficients `(h_0, …, h_{deg_h-1})` run in lexicographic order
    /// with `h_0` most significant, each coefficient ordered by `(a, b)`.
    pub fn right_divisor_pairs(
        &self,
        beta: usize,
        lambda: RingElem,
        deg_h: usize,
        cap: u128,
        exec: Exec,
    ) -> Result<Vec<(SkewPoly, SkewPoly)>> {
        if deg_h > beta {
            return Err(Error::parse(0, format!("divisor degree {deg_h} outside 0..={beta}")));
        }
        let per_coeff = (self.params().q() as u128).pow(2);
        let total = per_coeff
            .checked_pow(deg_h as u32)
            .unwrap_or(u128::MAX);
        Error::check_cap(total, cap)?;
        let target = self.binomial(beta, lambda);
        let candidate = |index: u64| -> Option<(SkewPoly, SkewPoly)> {
            let h = self.monic_from_index(index, deg_h);
            let (g, rem) = target.right_divide(&h).ok()?;
            rem.is_zero().then_some((g, h))
        };
        Ok(exec.filter_map_range(total as u64, candidate))
    }

    /// The `index`-th monic polynomial of degree `deg` in enumeration order.
    pub fn monic_from_index(&self, mut index: u64, deg: usize) -> SkewPoly {
        let q = self.params().q() as u64;
        let mut coeffs = vec![RingElem::ZERO; deg + 1];
        coeffs[deg] = RingElem::ONE;
        for slot in (0..deg).rev() {
            let digit = index % (q * q);
            index /= q * q;
            coeffs[slot] = RingElem {
                a: (digit / q) as u32,
                b: (digit % q) as u32,
            };
        }
        self.poly(coeffs)
    }
}

/// A polynomial over R in R[x; θ], ascending coefficients, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewPoly {
    ring: SkewRing,
    coeffs: Vec<RingElem>,
}

impl SkewPoly {
    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(RingElem::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn ring(&self) -> SkewRing {
        self.ring
    }

    pub fn coeffs(&self) -> &[RingElem] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> RingElem {
        self.coeffs.get(i).copied().unwrap_or(RingElem::ZERO)
    }

    /// `None` stands for the degree of the zero polynomial (−∞).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<RingElem> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(RingElem::ONE)
    }

    /// Coefficients padded with zeros to `len`.
    pub fn padded(&self, len: usize) -> Vec<RingElem> {
        let mut out = self.coeffs.clone();
        out.resize(len.max(out.len()), RingElem::ZERO);
        out
    }

    fn check_ring(&self, other: &SkewPoly) -> Result<()> {
        if self.ring != other.ring {
            Err(Error::ContextMismatch)
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.check_ring(other)?;
        let params = self.ring.params();
        let n = self.coeffs.len().max(other.coeffs.len());
        Ok(self.ring.poly(
            (0..n)
                .map(|i| params.add(self.coeff(i), other.coeff(i)))
                .collect(),
        ))
    }

    pub fn sub(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.check_ring(other)?;
        let params = self.ring.params();
        let n = self.coeffs.len().max(other.coeffs.len());
        Ok(self.ring.poly(
            (0..n)
                .map(|i| params.sub(self.coeff(i), other.coeff(i)))
                .collect(),
        ))
    }

    /// Skew product: `(a x^i) ∗ (b x^j) = a θ^i(b) x^{i+j}`.
    pub fn mul(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(self.ring.zero());
        }
        let params = self.ring.params();
        let theta = self.ring.theta();
        let mut out = vec![RingElem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let term = params.mul(a, theta.apply(b, i as i64));
                out[i + j] = params.add(out[i + j], term);
            }
        }
        Ok(self.ring.poly(out))
    }

    /// Left scalar multiplication `c ∗ f`.
    pub fn scale_left(&self, c: RingElem) -> SkewPoly {
        let params = self.ring.params();
        self.ring
            .poly(self.coeffs.iter().map(|&a| params.mul(c, a)).collect())
    }

    /// `f = quot ∗ g + rem` with `rem = 0` or `deg rem < deg g`.
    pub fn right_divide(&self, g: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
        self.check_ring(g)?;
        let (n, lead_inv) = divisor_data(g)?;
        let params = self.ring.params();
        let theta = self.ring.theta();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![RingElem::ZERO; rem.len().saturating_sub(n)];
        for top in (n..rem.len()).rev() {
            let c = rem[top];
            if c.is_zero() {
                continue;
            }
            let shift = top - n;
            // t x^shift ∗ g has leading coefficient t θ^shift(lc g).
            let t = params.mul(c, theta.apply(lead_inv, shift as i64));
            quot[shift] = t;
            for (j, &gj) in g.coeffs.iter().enumerate() {
                let term = params.mul(t, theta.apply(gj, shift as i64));
                rem[shift + j] = params.sub(rem[shift + j], term);
            }
        }
        rem.truncate(n);
        let result = (self.ring.poly(quot), self.ring.poly(rem));
        debug_assert_eq!(
            result.0.mul(g).and_then(|p| p.add(&result.1)).as_ref(),
            Ok(self)
        );
        Ok(result)
    }

    /// `f = g ∗ quot + rem` with `rem = 0` or `deg rem < deg g`.
    pub fn left_divide(&self, g: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
        self.check_ring(g)?;
        let (n, lead_inv) = divisor_data(g)?;
        let params = self.ring.params();
        let theta = self.ring.theta();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![RingElem::ZERO; rem.len().saturating_sub(n)];
        for top in (n..rem.len()).rev() {
            let c = rem[top];
            if c.is_zero() {
                continue;
            }
            let shift = top - n;
            // g ∗ t x^shift has leading coefficient lc(g) θ^n(t).
            let t = theta.apply(params.mul(lead_inv, c), -(n as i64));
            quot[shift] = t;
            for (j, &gj) in g.coeffs.iter().enumerate() {
                let term = params.mul(gj, theta.apply(t, j as i64));
                rem[shift + j] = params.sub(rem[shift + j], term);
            }
        }
        rem.truncate(n);
        let result = (self.ring.poly(quot), self.ring.poly(rem));
        debug_assert_eq!(
            g.mul(&result.0).and_then(|p| p.add(&result.1)).as_ref(),
            Ok(self)
        );
        Ok(result)
    }

    /// Whether `f` commutes with `x` and with every constant.
    ///
    /// Commuting with constants is Z_q-linear in the constant, so it is
    /// enough to test the generators `1` and `u`.
    pub fn is_central(&self) -> bool {
        let x = self.ring.x();
        let u = self.ring.constant(RingElem::U);
        [x, u]
            .iter()
            .all(|a| self.mul(a).ok() == a.mul(self).ok())
    }

    /// Pretty form with descending powers, e.g. `x^4+(1+1u)x^3+x^2+(2+3u)x+(3+3u)`.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let coeff = match (c.a, c.b) {
                (a, 0) => a.to_string(),
                (0, 1) => "u".to_string(),
                (0, b) => format!("{b}u"),
                _ => format!("({c})"),
            };
            let power = match i {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{i}"),
            };
            terms.push(match (coeff.as_str(), i) {
                (_, 0) => coeff,
                ("1", _) => power,
                _ => format!("{coeff}{power}"),
            });
        }
        terms.join("+")
    }
}

fn divisor_data(g: &SkewPoly) -> Result<(usize, RingElem)> {
    let n = g.degree().ok_or(Error::DivisionByZeroPoly)?;
    let lead = g.leading().unwrap();
    let inv = g
        .ring
        .params()
        .inv(lead)
        .ok_or(Error::NonUnitLeadingCoeff)?;
    Ok((n, inv))
}

impl fmt::Display for SkewPoly {
    /// Ascending comma separated coefficients, `0` for the zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(RingElem::to_string).collect();
        f.write_str(&parts.join(","))
    }
}
