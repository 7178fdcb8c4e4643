//! Random inputs shared by the integration tests.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;

use wilddiag::{
    Circle, CycloNumber, ExpFactor, Exponent, FormalComponent, JordanClass, PoleLocation,
    ProblemInput, TamePole,
};

pub fn random_coeff(rng: &mut impl Rng) -> CycloNumber {
    let r = *[(1, 1), (-1, 1), (2, 1), (-2, 1), (1, 2), (3, 2)]
        .choose(rng)
        .unwrap();
    let level = *[1u64, 2, 3, 4].choose(rng).unwrap();
    let a = rng.gen_range(0..level as i64);
    CycloNumber::root_of_unity(level, a)
        .scale(&BigRational::new(BigInt::from(r.0), BigInt::from(r.1)))
}

/// A Puiseux polynomial with exponent denominators at most 4 and slope at most 3.
pub fn random_factor(rng: &mut impl Rng) -> ExpFactor {
    let terms = rng.gen_range(0..=2);
    ExpFactor::from_terms((0..terms).map(|_| {
        let d = rng.gen_range(1..=4);
        let n = rng.gen_range(1..=3 * d);
        (Exponent::new(n, d), random_coeff(rng))
    }))
    .unwrap()
}

/// Jordan data of total size `n` on up to three eigenvalues, blocks up to 3.
pub fn random_class(rng: &mut impl Rng, n: u64) -> JordanClass {
    let k = rng.gen_range(1..=3usize);
    let mut blocks: Vec<Vec<u64>> = vec![Vec::new(); k];
    let mut left = n;
    while left > 0 {
        let b = rng.gen_range(1..=left.min(3));
        blocks[rng.gen_range(0..k)].push(b);
        left -= b;
    }
    JordanClass::new(
        blocks
            .into_iter()
            .filter(|b| !b.is_empty())
            .enumerate()
            .map(|(i, b)| (format!("l{i}"), b)),
    )
    .unwrap()
}

/// Up to three distinct circles with multiplicities up to 3 (rank at most
/// 12), random formal monodromy, and up to three tame poles.
pub fn random_input(rng: &mut impl Rng) -> ProblemInput {
    loop {
        let m = rng.gen_range(1..=3);
        let mut comps: Vec<FormalComponent> = Vec::new();
        for _ in 0..m {
            let circle = Circle::of(&random_factor(rng));
            if comps.iter().any(|c| c.circle == circle) {
                continue;
            }
            let mult = rng.gen_range(1..=3);
            comps.push(FormalComponent {
                monodromy: random_class(rng, mult),
                circle,
                mult,
            });
        }
        let rank: u64 = comps.iter().map(|c| c.mult * c.circle.ram()).sum();
        if rank > 12 {
            continue;
        }
        let poles = (0..rng.gen_range(0..=3))
            .map(|k| TamePole {
                location: PoleLocation::Point(BigRational::from_integer(BigInt::from(k))),
                class: random_class(rng, rank),
            })
            .collect();
        return ProblemInput::new(comps, poles).unwrap();
    }
}

/// Every rearrangement of a multiset of entry indices.
pub fn multiset_permutations(counts: &[u64]) -> Vec<Vec<usize>> {
    fn go(counts: &mut [u64], prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if counts.iter().all(|&c| c == 0) {
            out.push(prefix.clone());
            return;
        }
        for j in 0..counts.len() {
            if counts[j] > 0 {
                counts[j] -= 1;
                prefix.push(j);
                go(counts, prefix, out);
                prefix.pop();
                counts[j] += 1;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut counts.to_vec(), &mut Vec::new(), &mut out);
    out
}

/// All minimal markings of a class: each eigenvalue used as many times as its
/// largest block, in any order.
pub fn minimal_markings(c: &JordanClass) -> Vec<Vec<usize>> {
    let counts: Vec<u64> = c.entries().iter().map(|(_, p)| p[0]).collect();
    multiset_permutations(&counts)
}
