//! Code families and naive oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use rand::Rng;
use skewcodes::graymaps::lee_weight;
use skewcodes::rcodes::{r_from_coords, r_span_matrix};
use skewcodes::*;

pub fn z4() -> RingParams {
    RingParams::z4()
}

pub fn skew(k: i64, d: i64) -> SkewRing {
    SkewRing::new(Automorphism::new(z4(), k, d).unwrap())
}

pub fn twist(k: i64, d: i64, lambda: u32) -> Twist {
    Twist::new(skew(k, d), RingElem::scalar(lambda)).unwrap()
}

/// Every vector of `Z_q^n`, in lexicographic order.
pub fn all_zq_vectors(q: u32, n: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..q).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Every vector of `R^n`.
pub fn all_r_vectors(params: &RingParams, n: usize) -> Vec<Vec<RingElem>> {
    all_zq_vectors(params.q(), 2 * n)
        .iter()
        .map(|c| r_from_coords(c))
        .collect()
}

/// All Z_q-linear codes of length `n` spanned by at most two vectors.
pub fn zq_codes(params: RingParams, n: usize) -> Vec<HashSet<Vec<u32>>> {
    let vectors = all_zq_vectors(params.q(), n);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for v in &vectors {
        for w in &vectors {
            let m = GenMatrix::new(params, n, vec![v.clone(), w.clone()]).unwrap().howell_form();
            if seen.insert(m.rows().to_vec()) {
                out.push(m.enumerate_codewords(u128::MAX).unwrap().into_iter().collect());
            }
        }
    }
    out
}

/// All R-submodules of `R^β` generated by a single vector.
pub fn cyclic_r_modules(params: RingParams, beta: usize) -> Vec<HashSet<Vec<RingElem>>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for v in all_r_vectors(&params, beta) {
        let m = r_span_matrix(params, beta, &[v]);
        if seen.insert(m.rows().to_vec()) {
            out.push(
                m.enumerate_codewords(u128::MAX)
                    .unwrap()
                    .iter()
                    .map(|c| r_from_coords(c))
                    .collect(),
            );
        }
    }
    out
}

/// Codes `⟨h⟩` for every monic right divisor `h` of `x^β - λ`.
pub fn divisor_codes(t: &Twist, beta: usize) -> Vec<RCode> {
    let mut out = Vec::new();
    for deg in 0..=beta {
        let pairs = t
            .ring()
            .right_divisor_pairs(beta, t.lambda(), deg, u128::MAX, Exec::Parallel)
            .unwrap();
        for (_, h) in pairs {
            let spec = RCodeSpec::new(beta, *t, h).unwrap();
            out.push(RCode::build(spec, u128::MAX).unwrap());
        }
    }
    out
}

/// `{w : Σ v_i w_i = 0 for all v ∈ C}` over Z_q.
pub fn zq_dual(params: &RingParams, code: &HashSet<Vec<u32>>, n: usize) -> HashSet<Vec<u32>> {
    all_zq_vectors(params.q(), n)
        .into_iter()
        .filter(|w| {
            code.iter().all(|v| {
                v.iter()
                    .zip(w)
                    .fold(0, |acc, (&x, &y)| params.zadd(acc, params.zmul(x, y)))
                    == 0
            })
        })
        .collect()
}

/// Minimum nonzero Lee weight of the Z_q-span of `rows`, by summing every
/// coefficient tuple. `None` for the zero code.
pub fn naive_min_lee(params: &RingParams, rows: &[Vec<u32>], cols: usize) -> Option<u32> {
    all_zq_vectors(params.q(), rows.len())
        .iter()
        .filter_map(|coeffs| {
            let mut w = vec![0u32; cols];
            for (c, row) in coeffs.iter().zip(rows) {
                for (x, &r) in w.iter_mut().zip(row) {
                    *x = params.zadd(*x, params.zmul(*c, r));
                }
            }
            let wt = lee_weight(params, &w);
            (wt > 0).then_some(wt)
        })
        .min()
}

/// A random matrix with `1..=max_rows` rows and `1..=max_cols` columns.
pub fn random_matrix<R: Rng>(rng: &mut R, params: RingParams, max_rows: usize, max_cols: usize) -> GenMatrix {
    let rows = rng.gen_range(1..=max_rows);
    let cols = rng.gen_range(1..=max_cols);
    let data = (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(0..params.q())).collect())
        .collect();
    GenMatrix::new(params, cols, data).unwrap()
}

pub fn random_poly<R: Rng>(rng: &mut R, ring: SkewRing, max_deg: usize) -> SkewPoly {
    let q = ring.params().q();
    let len = rng.gen_range(0..=max_deg + 1);
    ring.poly(
        (0..len)
            .map(|_| RingElem {
                a: rng.gen_range(0..q),
                b: rng.gen_range(0..q),
            })
            .collect(),
    )
}

pub fn random_monic<R: Rng>(rng: &mut R, ring: SkewRing, max_deg: usize) -> SkewPoly {
    let q = ring.params().q();
    let deg = rng.gen_range(0..=max_deg);
    let mut coeffs: Vec<RingElem> = (0..deg)
        .map(|_| RingElem {
            a: rng.gen_range(0..q),
            b: rng.gen_range(0..q),
        })
        .collect();
    coeffs.push(RingElem::ONE);
    ring.poly(coeffs)
}

/// Prints one acceptance line and returns whether it passed.
pub fn report(id: u32, title: &str, failures: usize, detail: &str) -> bool {
    let status = if failures == 0 { "PASS" } else { "FAIL" };
    println!("criterion {id} [{status}] {title}: {detail}");
    failures == 0
}
