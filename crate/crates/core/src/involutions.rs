//! Sign-reversing involutions on permutations and the classes they act on.
//!
//! Every map here flips the parity of [`nwnm`](crate::permstat::nwnm), so the
//! signed sum `sum (-1)^nwnm` over its domain vanishes. Inputs outside the
//! domain are rejected instead of being mapped to themselves.

use crate::error::{Error, Result};
use crate::perm::{all_perms, Perm};
use crate::permstat::nwnm_sign;

const BLOCK_PATTERNS: [[u32; 4]; 4] = [[1, 3, 4, 2], [1, 4, 3, 2], [2, 3, 4, 1], [2, 4, 3, 1]];

fn out_of_domain(map: &'static str, p: &Perm) -> Error {
    Error::OutOfDomain {
        map,
        word: p.word().to_vec(),
    }
}

/// `pi_1` is neither 1 nor 2, or the word starts with 12 or 21.
pub fn in_v(p: &Perm) -> bool {
    let w = p.word();
    match w {
        [] => false,
        [a, ..] if *a > 2 => true,
        [1, 2, ..] | [2, 1, ..] => true,
        _ => false,
    }
}

/// The first four letters are not literally 1342, 1432, 2341 or 2431.
/// Words shorter than four letters are all in the class.
pub fn in_w(p: &Perm) -> bool {
    match p.word() {
        [a, b, c, d, ..] => !BLOCK_PATTERNS.contains(&[*a, *b, *c, *d]),
        _ => true,
    }
}

/// `W_n` minus `V_n`: starts with 1 or 2 but not with 12 or 21.
pub fn in_u(p: &Perm) -> bool {
    in_w(p) && !in_v(p)
}

/// Whether positions `4i-3..=4i` hold the values `4i-3..=4i` arranged like
/// one of 1342, 1432, 2341, 2431 (`i` is 1-based).
pub fn is_r_block(p: &Perm, i: usize) -> bool {
    let base = 4 * (i as u32 - 1);
    let w = p.word();
    let Some(block) = w.get(4 * (i - 1)..4 * i) else {
        return false;
    };
    let mut shifted = [0u32; 4];
    for (s, &v) in shifted.iter_mut().zip(block) {
        if v <= base || v > base + 4 {
            return false;
        }
        *s = v - base;
    }
    BLOCK_PATTERNS.contains(&shifted)
}

/// Every complete block of four leading positions is an R-block.
pub fn in_r(p: &Perm) -> bool {
    (1..=p.len() / 4).all(|i| is_r_block(p, i))
}

/// `R_n` for `n = 4k + 3` whose final three letters are arranged like 132 or 231.
pub fn in_r_prime(p: &Perm) -> bool {
    let n = p.len();
    if n % 4 != 3 || !in_r(p) {
        return false;
    }
    let t = &p.word()[n - 3..];
    t[1] > t[0] && t[1] > t[2]
}

/// Exchanges the positions of 1 and 2; defined on `V_n`.
pub fn phi_12(p: &Perm) -> Result<Perm> {
    if p.len() < 2 || !in_v(p) {
        return Err(out_of_domain("phi_12", p));
    }
    let mut q = p.clone();
    q.swap_values(1, 2);
    Ok(q)
}

/// The involution on `U_n` (`n >= 4`).
///
/// For words starting with 1: 1324 and 1423 are exchanged by swapping the
/// values 3 and 4; otherwise, with `i < j < k` the positions of 2, 3 and 4,
/// the letters at `j` and `k` are exchanged. Words starting with 2 are
/// handled the same way with 2314/2413 and the values 1, 3, 4.
pub fn theta(p: &Perm) -> Result<Perm> {
    if p.len() < 4 || !in_u(p) {
        return Err(out_of_domain("theta", p));
    }
    let w = p.word();
    let (special, trio): ([[u32; 4]; 2], [u32; 3]) = if w[0] == 1 {
        ([[1, 3, 2, 4], [1, 4, 2, 3]], [2, 3, 4])
    } else {
        ([[2, 3, 1, 4], [2, 4, 1, 3]], [1, 3, 4])
    };
    let prefix = [w[0], w[1], w[2], w[3]];
    let mut q = p.clone();
    if special.contains(&prefix) {
        q.swap_values(3, 4);
        return Ok(q);
    }
    let mut positions: Vec<usize> = trio.iter().map(|&v| p.position_of(v) as usize).collect();
    positions.sort_unstable();
    let (j, k) = (positions[1], positions[2]);
    q.swap_values(w[j - 1], w[k - 1]);
    Ok(q)
}

/// The involution on `W_n`: [`phi_12`] on `V_n`, [`theta`] on `U_n`.
pub fn w_involution(p: &Perm) -> Result<Perm> {
    if in_v(p) {
        phi_12(p)
    } else {
        theta(p)
    }
}

/// The involution on `S_n \ R_n`.
///
/// Keeps the leading run of R-blocks, shifts the remaining letters down to a
/// permutation of `W_m`, applies [`w_involution`] there and shifts back.
pub fn chi(p: &Perm) -> Result<Perm> {
    let blocks = p.len() / 4;
    let Some(j) = (1..=blocks).find(|&i| !is_r_block(p, i)) else {
        return Err(out_of_domain("chi", p));
    };
    let offset = 4 * (j as u32 - 1);
    let kept = &p.word()[..offset as usize];
    let tail = Perm::new(
        p.word()[offset as usize..]
            .iter()
            .map(|&v| v - offset)
            .collect(),
    )
    .expect("leading R-blocks use the smallest values");
    let q = w_involution(&tail)?;
    let mut word = kept.to_vec();
    word.extend(q.word().iter().map(|&v| v + offset));
    Ok(Perm::from_word_unchecked(word))
}

/// Symmetric permutations of `[2n]` not starting with 12 or 21.
pub fn in_ss(p: &Perm) -> bool {
    p.is_symmetric() && !matches!(p.word(), [1, 2, ..] | [2, 1, ..])
}

/// Exchanges the positions of 1 and 2 and of `2n-1` and `2n`.
pub fn typeb_swap(p: &Perm) -> Result<Perm> {
    if p.len() < 4 || !in_ss(p) {
        return Err(out_of_domain("typeb_swap", p));
    }
    let m = p.len() as u32;
    let mut q = p.clone();
    q.swap_values(1, 2);
    q.swap_values(m - 1, m);
    Ok(q)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Census {
    pub count: usize,
    pub signed_sum: i64,
}

/// Generates `R_n` directly: `4^k` block choices times every arrangement of
/// the last `n mod 4` values.
pub fn r_n_members(n: u32) -> Vec<Perm> {
    let k = n / 4;
    let r = n % 4;
    let tails: Vec<Vec<u32>> = all_perms(r)
        .map(|t| t.word().iter().map(|&v| v + 4 * k).collect())
        .collect();
    let mut out = Vec::new();
    for choice in 0..4usize.pow(k) {
        let mut word = Vec::with_capacity(n as usize);
        let mut c = choice;
        let mut digits = vec![0; k as usize];
        for d in digits.iter_mut().rev() {
            *d = c % 4;
            c /= 4;
        }
        for (b, &d) in digits.iter().enumerate() {
            word.extend(BLOCK_PATTERNS[d].iter().map(|&v| v + 4 * b as u32));
        }
        for t in &tails {
            let mut full = word.clone();
            full.extend_from_slice(t);
            out.push(Perm::from_word_unchecked(full));
        }
    }
    out
}

fn census_of<'a>(perms: impl Iterator<Item = &'a Perm>) -> Census {
    perms.fold(
        Census {
            count: 0,
            signed_sum: 0,
        },
        |acc, p| Census {
            count: acc.count + 1,
            signed_sum: acc.signed_sum + nwnm_sign(p),
        },
    )
}

/// Size and signed sum of `R_n`.
pub fn r_n_census(n: u32) -> Census {
    census_of(r_n_members(n).iter())
}

/// Size and signed sum of `R'_n`, for `n = 4k + 3`.
pub fn r_prime_census(n: u32) -> Census {
    census_of(r_n_members(n).iter().filter(|p| in_r_prime(p)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::enumerate_symmetric_perms;
    use crate::permstat::{four_sets, nwnm};
    use crate::testutil::perm;

    fn flips(f: fn(&Perm) -> Result<Perm>, domain: fn(&Perm) -> bool, perms: Vec<Perm>) {
        for p in perms.into_iter().filter(domain) {
            let q = f(&p).unwrap();
            assert!(domain(&q), "{p} -> {q} leaves the domain");
            assert_eq!(f(&q).unwrap(), p, "{p} is not an involution point");
            assert_ne!(nwnm(&p) % 2, nwnm(&q) % 2, "{p} -> {q} keeps parity");
        }
    }

    #[test]
    fn phi_12_examples() {
        let q = phi_12(&perm(&[3, 1, 2])).unwrap();
        assert_eq!(q.word(), &[3, 2, 1]);
        assert_eq!((nwnm(&perm(&[3, 1, 2])), nwnm(&q)), (2, 1));
        let q = phi_12(&perm(&[1, 2])).unwrap();
        assert_eq!(q.word(), &[2, 1]);
        assert_eq!((nwnm(&perm(&[1, 2])), nwnm(&q)), (0, 1));
        assert!(phi_12(&perm(&[1, 3, 2])).is_err());
    }

    #[test]
    fn theta_examples() {
        let p = perm(&[1, 3, 2, 4]);
        let q = theta(&p).unwrap();
        assert_eq!(q.word(), &[1, 4, 2, 3]);
        assert_eq!((nwnm(&p), nwnm(&q)), (1, 2));

        let p = perm(&[1, 3, 5, 2, 4]);
        let q = theta(&p).unwrap();
        assert_eq!(q.word(), &[1, 3, 5, 4, 2]);
        assert_ne!(nwnm(&p) % 2, nwnm(&q) % 2);

        assert!(theta(&perm(&[1, 3, 4, 2])).is_err());
        assert!(theta(&perm(&[3, 1, 2, 4])).is_err());
        assert!(theta(&perm(&[1, 3, 2])).is_err());
    }

    #[test]
    fn class_relations() {
        for n in 4..=7 {
            for p in all_perms(n) {
                assert!(!(in_u(&p) && in_v(&p)));
                if in_v(&p) {
                    assert!(in_w(&p));
                }
                assert_eq!(in_w(&p), in_u(&p) || in_v(&p));
            }
        }
    }

    #[test]
    fn involutions_flip_parity() {
        for n in 2..=7 {
            flips(phi_12, in_v, all_perms(n).collect());
        }
        for n in 4..=7 {
            flips(theta, in_u, all_perms(n).collect());
            flips(w_involution, in_w, all_perms(n).collect());
            flips(chi, |p| !in_r(p), all_perms(n).collect());
        }
        for n in 2..=4 {
            flips(typeb_swap, in_ss, enumerate_symmetric_perms(n));
        }
    }

    #[test]
    fn chi_examples() {
        // first block already fails: chi is the W-involution of the whole word
        let p = perm(&[3, 1, 2, 4, 5]);
        assert_eq!(chi(&p).unwrap(), w_involution(&p).unwrap());
        // an R-block followed by a lone 5 is in R_5, hence outside the domain
        assert!(chi(&perm(&[1, 3, 4, 2, 5])).is_err());
        // an R-block followed by a non-R block keeps the first block
        let p = perm(&[1, 3, 4, 2, 6, 5, 7, 8]);
        let q = chi(&p).unwrap();
        assert_eq!(&q.word()[..4], &[1, 3, 4, 2]);
        assert_ne!(nwnm(&p) % 2, nwnm(&q) % 2);
    }

    #[test]
    fn typeb_swap_example() {
        let p = perm(&[3, 1, 4, 2]);
        let q = typeb_swap(&p).unwrap();
        assert_eq!(q.word(), &[4, 2, 3, 1]);
        assert_eq!((nwnm(&p), nwnm(&q)), (2, 1));
        assert!(q.is_symmetric());
        assert!(typeb_swap(&perm(&[2, 1, 4, 3])).is_err());
        assert!(typeb_swap(&perm(&[3, 1, 2, 4])).is_err());
    }

    #[test]
    fn census_values() {
        assert_eq!(
            r_n_census(4),
            Census {
                count: 4,
                signed_sum: -4
            }
        );
        assert_eq!(
            r_n_census(8),
            Census {
                count: 16,
                signed_sum: 16
            }
        );
        assert_eq!(
            r_n_census(5),
            Census {
                count: 4,
                signed_sum: -4
            }
        );
        assert_eq!(
            r_prime_census(7),
            Census {
                count: 8,
                signed_sum: 8
            }
        );
        for n in 0..=9 {
            let direct = all_perms(n).filter(in_r).count();
            assert_eq!(r_n_census(n).count, direct);
        }
    }

    #[test]
    fn one_nwnm_value_per_block() {
        for n in [4, 5, 8, 9] {
            for p in r_n_members(n) {
                let s = four_sets(&p).nwnm;
                for b in 0..n / 4 {
                    let in_block = s.iter().filter(|&&v| v > 4 * b && v <= 4 * b + 4).count();
                    assert_eq!(in_block, 1, "{p}");
                }
            }
        }
    }

    #[test]
    fn signed_sums_vanish_on_v() {
        for n in 2..=7 {
            let s: i64 = all_perms(n).filter(in_v).map(|p| nwnm_sign(&p)).sum();
            assert_eq!(s, 0);
        }
    }
}
