//! Linear algebra over Z_q: Howell form, code type, codeword enumeration and
//! minimum Lee distance.
//!
//! Since `q = p^s`, Z_q is a chain ring and every entry is `p^v · unit`. The
//! Howell form used here has one row per pivot column, pivots normalised to
//! `p^v`, entries above a pivot reduced into `[0, p^v)`, and is closed under
//! the annihilator rows `p^{s-v} · row`. With it, every codeword has exactly
//! one expansion `Σ c_i row_i` with `0 ≤ c_i < p^{s - v_i}`.

use std::fmt;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::rings::RingParams;

/// Default cap on the number of codewords an enumeration may produce.
pub const DEFAULT_CODEWORD_CAP: u128 = 1 << 26;

/// Number of leading coefficients fixed per shard in partitioned enumeration.
const TARGET_SHARDS: u128 = 256;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenMatrix {
    params: RingParams,
    cols: usize,
    rows: Vec<Vec<u32>>,
    canonical: bool,
}

/// Type of a linear code over Z_{p^s}: `profile[j]` counts basis rows whose
/// pivot has valuation `j`. For Z_4 this is `(k1, k2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CodeType {
    pub p: u32,
    pub s: u32,
    pub profile: Vec<usize>,
}

impl CodeType {
    /// `k1`, the number of free generators.
    pub fn k1(&self) -> usize {
        self.profile[0]
    }

    /// `k2` for Z_4; in general the count of rows with valuation 1.
    pub fn k2(&self) -> usize {
        self.profile.get(1).copied().unwrap_or(0)
    }

    pub fn is_free(&self) -> bool {
        self.profile.iter().skip(1).all(|&t| t == 0)
    }

    /// `Π p^{(s-j) t_j}`, saturating.
    pub fn size(&self) -> u128 {
        self.profile
            .iter()
            .enumerate()
            .fold(1u128, |acc, (j, &t)| {
                let exp = (self.s as usize - j) * t;
                acc.saturating_mul((self.p as u128).saturating_pow(exp as u32))
            })
    }
}

impl fmt::Display for CodeType {
    /// `4^k1 2^k2` style for Z_4, `(t_0,…)` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p == 2 && self.s == 2 {
            if self.is_free() {
                write!(f, "{}", self.k1())
            } else {
                write!(f, "4^{} 2^{}", self.k1(), self.k2())
            }
        } else {
            let parts: Vec<String> = self.profile.iter().map(usize::to_string).collect();
            write!(f, "({})", parts.join(","))
        }
    }
}

impl GenMatrix {
    pub fn new(params: RingParams, cols: usize, rows: Vec<Vec<u32>>) -> Result<Self> {
        for row in &rows {
            if row.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
        }
        let q = params.q();
        let rows = rows
            .into_iter()
            .map(|r| r.into_iter().map(|x| x % q).collect())
            .collect();
        Ok(GenMatrix {
            params,
            cols,
            rows,
            canonical: false,
        })
    }

    pub fn params(&self) -> RingParams {
        self.params
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    /// Parses one row per line, comma separated residues; blank lines and
    /// `#` comments are skipped.
    pub fn parse(text: &str, params: RingParams) -> Result<Self> {
        let mut rows = Vec::new();
        let mut offset = 0;
        for line in text.lines() {
            let content = line.split('#').next().unwrap_or("");
            if !content.trim().is_empty() {
                let row = crate::rings::split_list(content)
                    .map(|(pos, item)| {
                        item.parse::<i64>()
                            .map(|v| params.reduce(v))
                            .map_err(|_| Error::parse(offset + pos, format!("bad residue '{item}'")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                rows.push(row);
            }
            offset += line.len() + 1;
        }
        let cols = rows.first().map_or(0, Vec::len);
        GenMatrix::new(params, cols, rows)
    }

    /// Howell form of the row space.
    pub fn howell_form(&self) -> GenMatrix {
        if self.canonical {
            return self.clone();
        }
        let params = self.params;
        let (p, s, q) = (params.p(), params.s(), params.q());
        let mut pool: Vec<Vec<u32>> = self
            .rows
            .iter()
            .filter(|r| r.iter().any(|&x| x != 0))
            .cloned()
            .collect();
        let mut basis: Vec<(usize, u32, Vec<u32>)> = Vec::new();
        for col in 0..self.cols {
            let Some(best) = pool
                .iter()
                .enumerate()
                .filter(|(_, r)| r[col] != 0)
                .min_by_key(|(_, r)| params.valuation(r[col]))
                .map(|(i, _)| i)
            else {
                continue;
            };
            let mut pivot = pool.swap_remove(best);
            let v = params.valuation(pivot[col]);
            let pv = p.pow(v);
            let unit = pivot[col] / pv;
            let inv = params.zinv(unit).expect("cofactor of p^v is a unit");
            scale_row(&mut pivot, inv, &params);
            debug_assert_eq!(pivot[col], pv);
            for row in pool.iter_mut() {
                if row[col] != 0 {
                    let t = row[col] / pv;
                    axpy(row, q - t % q, &pivot, &params);
                }
            }
            if v > 0 {
                let mut ann = pivot.clone();
                scale_row(&mut ann, p.pow(s - v), &params);
                if ann.iter().any(|&x| x != 0) {
                    pool.push(ann);
                }
            }
            pool.retain(|r| r.iter().any(|&x| x != 0));
            basis.push((col, pv, pivot));
        }
        for i in 0..basis.len() {
            let (col, pv, pivot) = (basis[i].0, basis[i].1, basis[i].2.clone());
            for row in basis[..i].iter_mut() {
                let t = row.2[col] / pv;
                if t != 0 {
                    axpy(&mut row.2, q - t % q, &pivot, &params);
                }
            }
        }
        GenMatrix {
            params,
            cols: self.cols,
            rows: basis.into_iter().map(|(_, _, r)| r).collect(),
            canonical: true,
        }
    }

    /// Pivot column and valuation of each row of a canonical matrix.
    fn pivots(&self) -> Vec<(usize, u32)> {
        debug_assert!(self.canonical);
        self.rows
            .iter()
            .map(|r| {
                let col = r.iter().position(|&x| x != 0).expect("canonical rows are nonzero");
                (col, self.params.valuation(r[col]))
            })
            .collect()
    }

    pub fn code_type(&self) -> CodeType {
        let h = self.howell_form();
        let mut profile = vec![0; self.params.s() as usize];
        for (_, v) in h.pivots() {
            profile[v as usize] += 1;
        }
        CodeType {
            p: self.params.p(),
            s: self.params.s(),
            profile,
        }
    }

    /// Whether `word` lies in the row space.
    pub fn contains(&self, word: &[u32]) -> bool {
        if word.len() != self.cols {
            return false;
        }
        let h = self.howell_form();
        let params = self.params;
        let mut w: Vec<u32> = word.iter().map(|&x| x % params.q()).collect();
        for (row, (col, v)) in h.rows.iter().zip(h.pivots()) {
            let pv = params.p().pow(v);
            if !w[col].is_multiple_of(pv) {
                return false;
            }
            let t = w[col] / pv;
            if t != 0 {
                axpy(&mut w, params.q() - t, row, &params);
            }
        }
        w.iter().all(|&x| x == 0)
    }

    /// Same row space as `other`.
    pub fn same_span(&self, other: &GenMatrix) -> bool {
        self.cols == other.cols && self.howell_form().rows == other.howell_form().rows
    }

    /// Applies a Z_q-linear map to each row.
    pub fn map_rows<F>(&self, cols: usize, f: F) -> Result<GenMatrix>
    where
        F: Fn(&[u32]) -> Vec<u32>,
    {
        GenMatrix::new(self.params, cols, self.rows.iter().map(|r| f(r)).collect())
    }

    fn enumerator(&self, cap: u128) -> Result<Enumerator> {
        let h = self.howell_form();
        let code_type = h.code_type();
        Error::check_cap(code_type.size(), cap)?;
        let p = self.params.p();
        let s = self.params.s();
        let radices: Vec<u32> = h.pivots().iter().map(|&(_, v)| p.pow(s - v)).collect();
        let mut prefix = 0;
        let mut shards: u128 = 1;
        while prefix < radices.len() && shards < TARGET_SHARDS {
            shards *= radices[prefix] as u128;
            prefix += 1;
        }
        Ok(Enumerator {
            params: self.params,
            cols: self.cols,
            rows: h.rows,
            radices,
            prefix,
            shards: shards as u64,
        })
    }

    /// All codewords, each exactly once.
    pub fn enumerate_codewords(&self, cap: u128) -> Result<Vec<Vec<u32>>> {
        let en = self.enumerator(cap)?;
        let mut out = Vec::with_capacity(self.code_type().size() as usize);
        for shard in 0..en.shards {
            en.for_each_in_shard(shard, |w| out.push(w.to_vec()));
        }
        Ok(out)
    }

    /// Calls `f` on every codeword.
    pub fn for_each_codeword<F: FnMut(&[u32])>(&self, cap: u128, mut f: F) -> Result<()> {
        let en = self.enumerator(cap)?;
        for shard in 0..en.shards {
            en.for_each_in_shard(shard, &mut f);
        }
        Ok(())
    }

    /// Minimum Lee weight over nonzero codewords.
    pub fn min_lee_distance(&self, cap: u128, exec: Exec) -> Result<u32> {
        let en = self.enumerator(cap)?;
        if en.rows.is_empty() {
            return Err(Error::ZeroCode);
        }
        let lee: Vec<u32> = (0..self.params.q()).map(|x| self.params.lee(x)).collect();
        let best = exec.min_range(en.shards, |shard| {
            let mut best = u32::MAX;
            en.for_each_in_shard(shard, |w| {
                let wt: u32 = w.iter().map(|&x| lee[x as usize]).sum();
                if wt != 0 && wt < best {
                    best = wt;
                }
            });
            best
        });
        Ok(best.expect("nonzero code has a shard"))
    }
}

impl fmt::Display for GenMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let parts: Vec<String> = row.iter().map(u32::to_string).collect();
            writeln!(f, "{}", parts.join(","))?;
        }
        Ok(())
    }
}

/// Partitioned mixed-radix walk over `Σ c_i row_i`, `0 ≤ c_i < radix_i`.
/// Shard `k` fixes the first `prefix` coefficients to the digits of `k`.
struct Enumerator {
    params: RingParams,
    cols: usize,
    rows: Vec<Vec<u32>>,
    radices: Vec<u32>,
    prefix: usize,
    shards: u64,
}

impl Enumerator {
    fn for_each_in_shard<F: FnMut(&[u32])>(&self, shard: u64, mut f: F) {
        let params = &self.params;
        let q = params.q();
        let mut word = vec![0u32; self.cols];
        let mut rest = shard;
        for i in (0..self.prefix).rev() {
            let c = (rest % self.radices[i] as u64) as u32;
            rest /= self.radices[i] as u64;
            if c != 0 {
                axpy(&mut word, c, &self.rows[i], params);
            }
        }
        let free = &self.radices[self.prefix..];
        let rows = &self.rows[self.prefix..];
        let mut digits = vec![0u32; free.len()];
        loop {
            f(&word);
            // odometer step: the lowest digit that does not wrap is bumped
            let mut i = 0;
            loop {
                if i == free.len() {
                    return;
                }
                if digits[i] + 1 < free[i] {
                    digits[i] += 1;
                    axpy(&mut word, 1, &rows[i], params);
                    break;
                }
                axpy(&mut word, (q - (free[i] - 1) % q) % q, &rows[i], params);
                digits[i] = 0;
                i += 1;
            }
        }
    }
}

fn scale_row(row: &mut [u32], c: u32, params: &RingParams) {
    for x in row.iter_mut() {
        *x = params.zmul(*x, c);
    }
}

/// `row += c · other`.
fn axpy(row: &mut [u32], c: u32, other: &[u32], params: &RingParams) {
    for (x, &y) in row.iter_mut().zip(other) {
        *x = params.zadd(*x, params.zmul(c, y));
    }
}
