use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::dfa::Dfa;
use crate::error::{Error, Result};

/// The Černý automaton on `n` states: `a` rotates `i -> i+1 mod n`, `b`
/// sends state 0 to state 1 and fixes the rest. Its shortest reset word
/// has length `(n-1)^2`.
pub fn gen_cerny(n: usize) -> Result<Dfa> {
    if n < 2 {
        return Err(Error::InvalidDfa("the Černý family starts at n = 2".into()));
    }
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|i| vec![(i + 1) % n, if i == 0 { 1 } else { i }])
        .collect();
    Dfa::new(&rows)
}

/// A uniformly random complete automaton, fixed by `seed`.
///
/// The stream is ChaCha8 keyed with four SplitMix64 outputs of `seed`
/// (little-endian). Entries are drawn in row-major order, each from one or
/// more `next_u32` calls with rejection sampling: a draw `x` is accepted
/// when `x < floor(2^32 / n) * n` and yields `x mod n`. None of this
/// depends on `rand`'s distribution code, so outputs are stable across
/// crate versions.
pub fn random_dfa(n: usize, k: usize, seed: u64) -> Result<Dfa> {
    if n == 0 || k == 0 {
        return Err(Error::InvalidDfa("random automata need n, k >= 1".into()));
    }
    let mut rng = ChaCha8Rng::from_seed(expand_seed(seed));
    let bound = (1u64 << 32) / n as u64 * n as u64;
    let table: Vec<usize> = (0..n * k)
        .map(|_| loop {
            let x = rng.next_u32() as u64;
            if x < bound {
                break (x % n as u64) as usize;
            }
        })
        .collect();
    Dfa::from_table(n, k, &table)
}

fn expand_seed(seed: u64) -> [u8; 32] {
    let mut state = seed;
    let mut out = [0u8; 32];
    for chunk in out.chunks_exact_mut(8) {
        chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
    }
    out
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}
