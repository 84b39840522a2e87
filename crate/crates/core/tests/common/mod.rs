//! Brute-force oracles. Nothing here calls the search code under test; the
//! automaton is read only through `n`, `k` and `target`.
#![allow(dead_code)]

pub mod props;

use syncdfa::Dfa;

pub fn cex() -> Dfa {
    syncdfa::parse_dfa("4 2\n1 0\n0 2\n2 3\n0 1\n").unwrap()
}

/// Image of a set of states (as a membership vector) under a word.
pub fn image(dfa: &Dfa, start: &[bool], word: &[usize]) -> Vec<bool> {
    let mut cur = start.to_vec();
    for &l in word {
        let mut next = vec![false; dfa.n()];
        for (q, &m) in cur.iter().enumerate() {
            if m {
                next[dfa.target(q, l)] = true;
            }
        }
        cur = next;
    }
    cur
}

pub fn full_image(dfa: &Dfa, word: &[usize]) -> Vec<bool> {
    image(dfa, &vec![true; dfa.n()], word)
}

/// All words of length `len` over `k` letters, in lexicographic order.
pub fn words_of_length(k: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = k.pow(len as u32);
    (0..total).map(move |mut i| {
        let mut w = vec![0; len];
        for slot in w.iter_mut().rev() {
            *slot = i % k;
            i /= k;
        }
        w
    })
}

/// Lexicographically least among the shortest words of length at most
/// `max_len` whose full image satisfies `pred`.
pub fn brute_shortest(
    dfa: &Dfa,
    max_len: usize,
    pred: impl Fn(&[bool]) -> bool,
) -> Option<Vec<usize>> {
    (0..=max_len).find_map(|len| words_of_length(dfa.k(), len).find(|w| pred(&full_image(dfa, w))))
}

pub fn is_singleton(img: &[bool]) -> bool {
    img.iter().filter(|&&m| m).count() == 1
}

/// Strong connectivity from the transitive closure (Floyd–Warshall).
pub fn strongly_connected_oracle(dfa: &Dfa) -> bool {
    let n = dfa.n();
    let mut reach = vec![vec![false; n]; n];
    for (q, row) in reach.iter_mut().enumerate() {
        row[q] = true;
        for l in 0..dfa.k() {
            row[dfa.target(q, l)] = true;
        }
    }
    for m in 0..n {
        for i in 0..n {
            for j in 0..n {
                if reach[i][m] && reach[m][j] {
                    reach[i][j] = true;
                }
            }
        }
    }
    reach.iter().all(|row| row.iter().all(|&r| r))
}

/// All permutations of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Table of `dfa` after renaming state `q` to `sigma[q]` and letter `l` to
/// `pi[l]`.
pub fn relabeled_table(dfa: &Dfa, sigma: &[usize], pi: &[usize]) -> Vec<usize> {
    let k = dfa.k();
    let mut t = vec![0; dfa.n() * k];
    for q in 0..dfa.n() {
        for l in 0..k {
            t[sigma[q] * k + pi[l]] = sigma[dfa.target(q, l)];
        }
    }
    t
}

/// Every table in the isomorphism class of `dfa`.
pub fn orbit(dfa: &Dfa) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for sigma in permutations(dfa.n()) {
        for pi in permutations(dfa.k()) {
            out.push(relabeled_table(dfa, &sigma, &pi));
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Shortest avoiding length per state, by brute force up to `max_len`.
pub fn brute_avoidance_lengths(dfa: &Dfa, max_len: usize) -> Vec<Option<usize>> {
    (0..dfa.n())
        .map(|q| brute_shortest(dfa, max_len, |img| !img[q]).map(|w| w.len()))
        .collect()
}
