//! Seeded input generators.
//!
//! Entries are log-uniform in `[1e-3, 1e3]`. All generators draw from a
//! caller-owned [`ChaCha8Rng`], so a seed fixes every sample.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::lattice::PositiveVector;

pub type SeededRng = ChaCha8Rng;

pub const LOG_LOW: f64 = -3.0;
pub const LOG_HIGH: f64 = 3.0;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Derives an independent stream for sub-task `index` of a seeded run.
pub fn substream(seed: u64, index: u64) -> SeededRng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(index);
    r
}

pub fn log_uniform<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    10f64.powf(rng.gen_range(LOG_LOW..LOG_HIGH))
}

/// A strictly positive vector with log-uniform entries.
pub fn positive_vector<R: Rng + ?Sized>(rng: &mut R, n: usize) -> PositiveVector {
    let entries = (0..n).map(|_| log_uniform(rng)).collect();
    PositiveVector::from_entries(entries).expect("log-uniform entries are finite and positive")
}

pub fn positive_tuple<R: Rng + ?Sized>(rng: &mut R, count: usize, n: usize) -> Vec<PositiveVector> {
    (0..count).map(|_| positive_vector(rng, n)).collect()
}

/// A positive vector supported exactly on `support`.
pub fn supported_on<R: Rng + ?Sized>(rng: &mut R, n: usize, support: &[usize]) -> PositiveVector {
    let mut entries = vec![0.0; n];
    for &i in support {
        entries[i] = log_uniform(rng);
    }
    PositiveVector::from_entries(entries).expect("finite nonnegative entries")
}

/// Like [`supported_on`] with entries in `[1/2, 2]`, so that no monomial
/// dominates the others by orders of magnitude.
pub fn moderate_supported_on<R: Rng + ?Sized>(rng: &mut R, n: usize, support: &[usize]) -> PositiveVector {
    let mut entries = vec![0.0; n];
    for &i in support {
        entries[i] = rng.gen_range(0.5..2.0);
    }
    PositiveVector::from_entries(entries).expect("finite nonnegative entries")
}

/// Splits `0..n` into two disjoint supports; when `n ≥ 2` both are nonempty.
/// Each coordinate may also land in neither support.
pub fn random_bipartition<R: Rng + ?Sized>(rng: &mut R, n: usize) -> (Vec<usize>, Vec<usize>) {
    loop {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for i in 0..n {
            match rng.gen_range(0..3) {
                0 => left.push(i),
                1 => right.push(i),
                _ => {}
            }
        }
        if n < 2 || (!left.is_empty() && !right.is_empty()) {
            return (left, right);
        }
    }
}

/// A disjoint pair `f ⊥ g` in `E_+`.
pub fn disjoint_pair<R: Rng + ?Sized>(rng: &mut R, n: usize) -> (PositiveVector, PositiveVector) {
    let (left, right) = random_bipartition(rng, n);
    (supported_on(rng, n, &left), supported_on(rng, n, &right))
}

/// `count ≥ 2` positive vectors of which (at least) the two at shuffled
/// positions form a disjoint pair; the rest are arbitrary, possibly sparse.
pub fn tuple_with_disjoint_pair<R: Rng + ?Sized>(rng: &mut R, count: usize, n: usize) -> Vec<PositiveVector> {
    assert!(count >= 2, "a disjoint pair needs two vectors");
    let (f, g) = disjoint_pair(rng, n);
    let mut out = vec![f, g];
    for _ in 2..count {
        let support: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.7)).collect();
        out.push(supported_on(rng, n, &support));
    }
    out.shuffle(rng);
    out
}
