//! Permutations in one-line notation and their enumeration.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `1..=n`; `word[i - 1]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    word: Vec<u32>,
}

impl Perm {
    pub fn new(word: Vec<u32>) -> Result<Perm> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v as usize > n {
                return Err(Error::NotAPermutation(format!("value {v} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[v as usize], true) {
                return Err(Error::NotAPermutation(format!("value {v} repeated")));
            }
        }
        Ok(Perm { word })
    }

    pub(crate) fn from_word_unchecked(word: Vec<u32>) -> Perm {
        debug_assert!(Perm::new(word.clone()).is_ok());
        Perm { word }
    }

    pub fn identity(n: u32) -> Perm {
        Perm {
            word: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn into_word(self) -> Vec<u32> {
        self.word
    }

    /// Image of the 1-indexed position `i`.
    pub fn at(&self, i: u32) -> u32 {
        self.word[i as usize - 1]
    }

    /// 1-indexed position of value `v`.
    pub fn position_of(&self, v: u32) -> u32 {
        self.word
            .iter()
            .position(|&x| x == v)
            .expect("value in range") as u32
            + 1
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.word.len()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Perm { word: inv }
    }

    pub fn fixed_points(&self) -> Vec<u32> {
        (1..=self.len() as u32)
            .filter(|&i| self.at(i) == i)
            .collect()
    }

    /// `pi_i + pi_{2n+1-i} = 2n+1` for every position.
    pub fn is_symmetric(&self) -> bool {
        let m = self.word.len();
        m % 2 == 0
            && self
                .word
                .iter()
                .zip(self.word.iter().rev())
                .all(|(&a, &b)| (a + b) as usize == m + 1)
    }

    /// Swaps the positions of the two values.
    pub fn swap_values(&mut self, a: u32, b: u32) {
        let i = self
            .word
            .iter()
            .position(|&x| x == a)
            .expect("value in range");
        let j = self
            .word
            .iter()
            .position(|&x| x == b)
            .expect("value in range");
        self.word.swap(i, j);
    }

    /// Advances to the lexicographically next permutation; false after the last one.
    pub fn next_lex(&mut self) -> bool {
        let w = &mut self.word;
        if w.len() < 2 {
            return false;
        }
        let Some(i) = (0..w.len() - 1).rev().find(|&i| w[i] < w[i + 1]) else {
            return false;
        };
        let j = (i + 1..w.len())
            .rev()
            .find(|&j| w[j] > w[i])
            .expect("successor exists");
        w.swap(i, j);
        w[i + 1..].reverse();
        true
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.word.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// All permutations of `1..=n` in lexicographic order.
pub fn all_perms(n: u32) -> impl Iterator<Item = Perm> {
    let mut next = Some(Perm::identity(n));
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        if succ.next_lex() {
            next = Some(succ);
        }
        Some(current)
    })
}

/// Permutations of `1..=n` with the given first letter, lexicographic.
pub fn perms_with_first(n: u32, first: u32) -> impl Iterator<Item = Perm> {
    let rest: Vec<u32> = (1..=n).filter(|&v| v != first).collect();
    let mut tail = Some(rest);
    std::iter::from_fn(move || {
        let current = tail.take()?;
        let mut succ = Perm {
            word: current.clone(),
        };
        if succ.next_lex() {
            tail = Some(succ.word);
        }
        let mut word = Vec::with_capacity(current.len() + 1);
        word.push(first);
        word.extend(current);
        Some(Perm { word })
    })
}

/// Symmetric permutations of `1..=2n` in lexicographic order; there are `2^n n!`.
pub fn enumerate_symmetric_perms(n: u32) -> Vec<Perm> {
    fn rec(m: u32, pos: usize, word: &mut Vec<u32>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
        let half = m as usize / 2;
        if pos == half {
            out.push(Perm { word: word.clone() });
            return;
        }
        for v in 1..=m {
            let mirror = m + 1 - v;
            if used[v as usize] || v == mirror {
                continue;
            }
            used[v as usize] = true;
            used[mirror as usize] = true;
            word[pos] = v;
            word[m as usize - 1 - pos] = mirror;
            rec(m, pos + 1, word, used, out);
            used[v as usize] = false;
            used[mirror as usize] = false;
        }
    }
    let m = 2 * n;
    let mut out = Vec::new();
    rec(
        m,
        0,
        &mut vec![0; m as usize],
        &mut vec![false; m as usize + 1],
        &mut out,
    );
    out
}

/// A permutation with some fixed points deleted: `values[k]` is the image of
/// `support[k]`, and the unsupported positions of `1..=n` are understood to
/// be fixed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialPerm {
    n: u32,
    support: Vec<u32>,
    values: Vec<u32>,
}

impl PartialPerm {
    pub fn new(n: u32, support: Vec<u32>, values: Vec<u32>) -> Result<PartialPerm> {
        if support.len() != values.len() {
            return Err(Error::NotAPermutation(
                "support and values differ in length".into(),
            ));
        }
        if support.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotAPermutation("support must increase".into()));
        }
        let pp = PartialPerm { n, support, values };
        pp.extend_with_fixed_points()?;
        Ok(pp)
    }

    /// Deletes the fixed points of `p`.
    pub fn without_fixed_points(p: &Perm) -> PartialPerm {
        let (support, values) = p
            .word()
            .iter()
            .enumerate()
            .map(|(i, &v)| (i as u32 + 1, v))
            .filter(|&(i, v)| i != v)
            .unzip();
        PartialPerm {
            n: p.len() as u32,
            support,
            values,
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn support(&self) -> &[u32] {
        &self.support
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// `(position, value)` pairs in position order.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.support
            .iter()
            .copied()
            .zip(self.values.iter().copied())
    }

    pub fn image(&self, i: u32) -> u32 {
        match self.support.binary_search(&i) {
            Ok(k) => self.values[k],
            Err(_) => i,
        }
    }

    pub fn extend_with_fixed_points(&self) -> Result<Perm> {
        let mut word: Vec<u32> = (1..=self.n).collect();
        for (i, v) in self.entries() {
            if i == 0 || i > self.n {
                return Err(Error::NotAPermutation(format!(
                    "position {i} outside 1..={}",
                    self.n
                )));
            }
            word[i as usize - 1] = v;
        }
        Perm::new(word)
    }
}
