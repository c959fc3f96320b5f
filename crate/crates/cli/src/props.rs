//! Seeded invariant suites behind `skewcodes props`.

use std::collections::HashSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use skewcodes::graymaps::{gray_phi, lee_weight};
use skewcodes::rcodes::{is_shift_closed, RCode, RCodeSpec};
use skewcodes::{Automorphism, Exec, GenMatrix, GrayVariant, MixedWord, RingElem, RingParams, SkewPoly, SkewRing, Twist};

pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.failures == 0 { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} cases, {} failures)", self.name, self.cases, self.failures)
    }
}

const MODULI: [u32; 4] = [4, 8, 9, 27];

fn random_ring(rng: &mut ChaCha8Rng) -> SkewRing {
    let params = RingParams::from_modulus(MODULI[rng.gen_range(0..MODULI.len())]).unwrap();
    let all = Automorphism::all(params);
    SkewRing::new(all[rng.gen_range(0..all.len())])
}

fn random_elem(rng: &mut ChaCha8Rng, params: &RingParams) -> RingElem {
    RingElem {
        a: rng.gen_range(0..params.q()),
        b: rng.gen_range(0..params.q()),
    }
}

fn random_poly(rng: &mut ChaCha8Rng, ring: SkewRing, max_deg: usize) -> SkewPoly {
    let params = ring.params();
    let len = rng.gen_range(0..=max_deg + 1);
    ring.poly((0..len).map(|_| random_elem(rng, &params)).collect())
}

fn random_monic(rng: &mut ChaCha8Rng, ring: SkewRing, max_deg: usize) -> SkewPoly {
    let params = ring.params();
    let deg = rng.gen_range(0..=max_deg);
    let mut coeffs: Vec<RingElem> = (0..deg).map(|_| random_elem(rng, &params)).collect();
    coeffs.push(RingElem::ONE);
    ring.poly(coeffs)
}

fn suite(name: &'static str, cases: usize, mut check: impl FnMut() -> bool) -> SuiteResult {
    let failures = (0..cases).filter(|_| !check()).count();
    SuiteResult { name, cases, failures }
}

/// Runs every suite; identical `(seed, cases)` give identical results.
pub fn run_all(seed: u64, cases: usize, exec: Exec) -> Vec<SuiteResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();

    out.push(suite("division", cases, || {
        let ring = random_ring(&mut rng);
        let f = random_poly(&mut rng, ring, 8);
        let g = random_monic(&mut rng, ring, 6);
        let (q, r) = f.right_divide(&g).unwrap();
        let (lq, lr) = f.left_divide(&g).unwrap();
        q.mul(&g).unwrap().add(&r).unwrap() == f
            && r.degree() < g.degree()
            && g.mul(&lq).unwrap().add(&lr).unwrap() == f
            && lr.degree() < g.degree()
    }));

    out.push(suite("associativity", cases, || {
        let ring = random_ring(&mut rng);
        let (a, b, c) = (
            random_poly(&mut rng, ring, 4),
            random_poly(&mut rng, ring, 4),
            random_poly(&mut rng, ring, 4),
        );
        a.mul(&b).unwrap().mul(&c).unwrap() == a.mul(&b.mul(&c).unwrap()).unwrap()
    }));

    out.push(suite("binomial-centrality", cases, || {
        let ring = random_ring(&mut rng);
        let params = ring.params();
        let beta = rng.gen_range(1..=8);
        let units: Vec<RingElem> = params.units().collect();
        let lambda = units[rng.gen_range(0..units.len())];
        ring.is_binomial_central(beta, lambda) == ring.binomial(beta, lambda).is_central()
    }));

    out.push(suite("lee-distance", cases, || {
        let params = RingParams::from_modulus(MODULI[rng.gen_range(0..2)]).unwrap();
        let rows = rng.gen_range(1..=3);
        let cols = rng.gen_range(1..=5);
        let data: Vec<Vec<u32>> = (0..rows)
            .map(|_| (0..cols).map(|_| rng.gen_range(0..params.q())).collect())
            .collect();
        let m = GenMatrix::new(params, cols, data.clone()).unwrap();
        let mut naive = None::<u32>;
        let q = params.q() as usize;
        for index in 0..q.pow(rows as u32) {
            let mut rest = index;
            let mut w = vec![0u32; cols];
            for row in &data {
                let c = (rest % q) as u32;
                rest /= q;
                for (x, &r) in w.iter_mut().zip(row) {
                    *x = params.zadd(*x, params.zmul(c, r));
                }
            }
            let wt = lee_weight(&params, &w);
            if wt > 0 {
                naive = Some(naive.map_or(wt, |b| b.min(wt)));
            }
        }
        m.min_lee_distance(u128::MAX, exec).ok() == naive
    }));

    out.push(suite("gray-linearity", cases, || {
        let params = RingParams::z4();
        let alpha = rng.gen_range(0..5);
        let beta = rng.gen_range(1..6);
        let mut word = || {
            MixedWord::new(
                (0..alpha).map(|_| rng.gen_range(0..4)).collect(),
                (0..beta).map(|_| random_elem(&mut rng, &params)).collect(),
            )
        };
        let (v, w) = (word(), word());
        GrayVariant::ALL.iter().all(|&variant| {
            let sum = gray_phi(&params, &v.add(&w, &params), variant).unwrap();
            let parts: Vec<u32> = gray_phi(&params, &v, variant)
                .unwrap()
                .iter()
                .zip(gray_phi(&params, &w, variant).unwrap())
                .map(|(&x, y)| params.zadd(x, y))
                .collect();
            sum == parts
        })
    }));

    out.push(suite("dual-closure", cases.div_ceil(10), || {
        let params = RingParams::z4();
        let theta = Automorphism::new(params, 0, 3).unwrap();
        let ring = SkewRing::new(theta);
        let lambda = RingElem::scalar([1, 3][rng.gen_range(0..2)]);
        let twist = Twist::new(ring, lambda).unwrap();
        let beta = 2;
        let pairs = ring
            .right_divisor_pairs(beta, lambda, rng.gen_range(0..=beta), u128::MAX, exec)
            .unwrap();
        if pairs.is_empty() {
            return true;
        }
        let (_, h) = pairs[rng.gen_range(0..pairs.len())].clone();
        let code = RCode::build(RCodeSpec::new(beta, twist, h).unwrap(), u128::MAX).unwrap();
        let dual: HashSet<Vec<RingElem>> = code.brute_dual(u128::MAX, exec).unwrap().into_iter().collect();
        is_shift_closed(&code.word_set(), &twist) && is_shift_closed(&dual, &twist.inverse())
    }));

    out
}
