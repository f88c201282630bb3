//! Seeded inputs shared by the criterion benches.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use shirshov::verify::corpus;
use shirshov::{Alphabet, Letter, OccurrencePoset, Word};

pub const SEED: u64 = 0x5eed;

pub fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED)
}

pub fn random_letters(len: usize, l: u32) -> Vec<Letter> {
    let mut rng = rng();
    (0..len).map(|_| rng.random_range(1..=l)).collect()
}

/// Concatenated power blocks over `l` letters with period length `t`.
pub fn block_word(l: u32, t: usize, blocks: usize, exponent: usize) -> Word {
    let mut rng = rng();
    let w = corpus::power_block_word(&mut rng, l, t, exponent..=exponent + 3, blocks, usize::MAX);
    Word::new(Alphabet::new(l).expect("l > 0"), w.into_letters()).expect("letters in range")
}

pub fn poset(size: usize) -> OccurrencePoset {
    let mut rng = rng();
    loop {
        let p = corpus::random_poset(&mut rng, size);
        if p.len() == size {
            return p;
        }
    }
}
