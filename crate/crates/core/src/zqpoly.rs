//! Ordinary polynomials over Z_q, used for the Z_q block of mixed codes.

use std::fmt;

use crate::error::{Error, Result};
use crate::rings::RingParams;

/// Ascending coefficients over Z_q, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZqPoly {
    params: RingParams,
    coeffs: Vec<u32>,
}

/// Reads a compact digit string, one ascending coefficient per character.
pub fn parse_digits(text: &str, params: &RingParams) -> Result<Vec<u32>> {
    text.char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .map(|(pos, c)| {
            let digit = c
                .to_digit(10)
                .ok_or_else(|| Error::parse(pos, format!("'{c}' is not a digit")))?;
            if digit >= params.q() {
                return Err(Error::parse(pos, format!("digit {digit} is not a residue mod {}", params.q())));
            }
            Ok(digit)
        })
        .collect()
}

impl ZqPoly {
    pub fn new(params: RingParams, coeffs: Vec<u32>) -> Self {
        let mut p = ZqPoly {
            coeffs: coeffs.into_iter().map(|c| c % params.q()).collect(),
            params,
        };
        while p.coeffs.last() == Some(&0) {
            p.coeffs.pop();
        }
        p
    }

    /// Parses the digit form (`31212201` = 3+x+2x²+x³+2x⁴+2x⁵+x⁷) or, when the
    /// text contains commas, comma separated residues.
    pub fn parse(text: &str, params: RingParams) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Err(Error::parse(0, "empty polynomial"));
        }
        let coeffs = if trimmed.contains(',') {
            crate::rings::split_list(text)
                .map(|(pos, item)| {
                    item.parse::<i64>()
                        .map(|v| params.reduce(v))
                        .map_err(|_| Error::parse(pos, format!("bad residue '{item}'")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            parse_digits(text, &params)?
        };
        Ok(ZqPoly::new(params, coeffs))
    }

    /// `x^n - 1`.
    pub fn cyclic_modulus(params: RingParams, n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = params.zneg(1);
        coeffs[n] = 1;
        ZqPoly::new(params, coeffs)
    }

    pub fn params(&self) -> RingParams {
        self.params
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn mul(&self, other: &ZqPoly) -> ZqPoly {
        if self.is_zero() || other.is_zero() {
            return ZqPoly::new(self.params, Vec::new());
        }
        let p = &self.params;
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = p.zadd(out[i + j], p.zmul(a, b));
            }
        }
        ZqPoly::new(self.params, out)
    }

    /// Division by a polynomial with unit leading coefficient.
    pub fn div_rem(&self, g: &ZqPoly) -> Result<(ZqPoly, ZqPoly)> {
        let n = g.degree().ok_or(Error::DivisionByZeroPoly)?;
        let p = &self.params;
        let inv = p.zinv(g.coeffs[n]).ok_or(Error::NonUnitLeadingCoeff)?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0; rem.len().saturating_sub(n)];
        for top in (n..rem.len()).rev() {
            let t = p.zmul(rem[top], inv);
            if t == 0 {
                continue;
            }
            quot[top - n] = t;
            for (j, &gj) in g.coeffs.iter().enumerate() {
                rem[top - n + j] = p.zsub(rem[top - n + j], p.zmul(t, gj));
            }
        }
        rem.truncate(n);
        Ok((ZqPoly::new(self.params, quot), ZqPoly::new(self.params, rem)))
    }

    /// Whether `self` divides `x^n - 1`.
    pub fn divides_cyclic(&self, n: usize) -> Result<bool> {
        let (_, rem) = ZqPoly::cyclic_modulus(self.params, n).div_rem(self)?;
        Ok(rem.is_zero())
    }

    /// Coefficient vector of `self mod (x^n - 1)`, length `n`.
    pub fn wrap(&self, n: usize) -> Vec<u32> {
        let mut out = vec![0; n];
        if n == 0 {
            return out;
        }
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i % n] = self.params.zadd(out[i % n], c);
        }
        out
    }
}

impl fmt::Display for ZqPoly {
    /// Compact digit form when `q ≤ 10`, comma separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let sep = if self.params.q() <= 10 { "" } else { "," };
        let parts: Vec<String> = self.coeffs.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(sep))
    }
}
