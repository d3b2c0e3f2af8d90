//! Weak excedances, mid-points and the four-set partition of a permutation.

use std::collections::BTreeSet;

use crate::perm::{PartialPerm, Perm};
use crate::tableau::Tableau;
use crate::zigzag::phi;

/// Values split by (weak excedance?, mid-point?).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FourSets {
    pub wm: BTreeSet<u32>,
    pub nwm: BTreeSet<u32>,
    pub wnm: BTreeSet<u32>,
    pub nwnm: BTreeSet<u32>,
}

impl FourSets {
    pub fn nwnm_count(&self) -> usize {
        self.nwnm.len()
    }

    pub fn total(&self) -> usize {
        self.wm.len() + self.nwm.len() + self.wnm.len() + self.nwnm.len()
    }
}

/// Positions `i` with `pi_i >= i`.
pub fn weak_excedances(p: &Perm) -> Vec<u32> {
    (1..=p.len() as u32).filter(|&i| p.at(i) >= i).collect()
}

pub fn is_weak_excedance(p: &Perm, i: u32) -> bool {
    p.at(i) >= i
}

/// For each entry of `values`, whether it is the middle letter of a
/// decreasing subsequence of length three.
pub(crate) fn mid_point_flags(values: &[u32]) -> Vec<bool> {
    let n = values.len();
    let mut suffix_min = vec![u32::MAX; n + 1];
    for i in (0..n).rev() {
        suffix_min[i] = suffix_min[i + 1].min(values[i]);
    }
    let mut prefix_max = 0;
    let mut out = Vec::with_capacity(n);
    for (i, &v) in values.iter().enumerate() {
        out.push(prefix_max > v && suffix_min[i + 1] < v);
        prefix_max = prefix_max.max(v);
    }
    out
}

/// Mid-point values.
pub fn mid_points(p: &Perm) -> BTreeSet<u32> {
    p.word()
        .iter()
        .zip(mid_point_flags(p.word()))
        .filter(|(_, m)| *m)
        .map(|(&v, _)| v)
        .collect()
}

fn four_sets_of(entries: impl Iterator<Item = (u32, u32)>) -> FourSets {
    let (positions, values): (Vec<u32>, Vec<u32>) = entries.unzip();
    let mids = mid_point_flags(&values);
    let mut sets = FourSets::default();
    for ((&i, &v), mid) in positions.iter().zip(&values).zip(mids) {
        let target = match (v >= i, mid) {
            (true, true) => &mut sets.wm,
            (false, true) => &mut sets.nwm,
            (true, false) => &mut sets.wnm,
            (false, false) => &mut sets.nwnm,
        };
        target.insert(v);
    }
    sets
}

pub fn four_sets(p: &Perm) -> FourSets {
    four_sets_of(p.word().iter().enumerate().map(|(i, &v)| (i as u32 + 1, v)))
}

/// Positions whose value lies in each of the four sets, for comparing with
/// row and column labels of the corresponding tableau.
pub fn four_sets_by_position(p: &Perm) -> FourSets {
    let by_value = four_sets(p);
    let to_pos = |s: &BTreeSet<u32>| s.iter().map(|&v| p.position_of(v)).collect();
    FourSets {
        wm: to_pos(&by_value.wm),
        nwm: to_pos(&by_value.nwm),
        wnm: to_pos(&by_value.wnm),
        nwnm: to_pos(&by_value.nwnm),
    }
}

/// Number of values that sit at a non-weak excedance and are not mid-points.
pub fn nwnm(p: &Perm) -> usize {
    let w = p.word();
    let n = w.len();
    let mut suffix_min = vec![u32::MAX; n + 1];
    for i in (0..n).rev() {
        suffix_min[i] = suffix_min[i + 1].min(w[i]);
    }
    let mut prefix_max = 0;
    let mut count = 0;
    for (i, &v) in w.iter().enumerate() {
        let mid = prefix_max > v && suffix_min[i + 1] < v;
        if (v as usize) < i + 1 && !mid {
            count += 1;
        }
        prefix_max = prefix_max.max(v);
    }
    count
}

/// `(-1)^nwnm`.
pub fn nwnm_sign(p: &Perm) -> i64 {
    if nwnm(p) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Four sets of a partial permutation: weak excedance compares a value to
/// its original position, mid-points are read along the support order.
pub fn four_sets_of_partial(pp: &PartialPerm) -> FourSets {
    four_sets_of(pp.entries())
}

pub fn nwnm_of_partial(pp: &PartialPerm) -> usize {
    four_sets_of_partial(pp).nwnm_count()
}

/// The value images of the restricted/unrestricted rows and columns of `t`
/// under `phi(t)` coincide with WM, NWM, WNM and NWNM.
pub fn check_four_set_correspondence(t: &Tableau) -> bool {
    let p = phi(t);
    let stats = t.row_column_statistics();
    let sets = four_sets(&p);
    let image =
        |labels: &BTreeSet<u32>| -> BTreeSet<u32> { labels.iter().map(|&i| p.at(i)).collect() };
    image(&stats.restricted_cols) == sets.nwm
        && image(&stats.unrestricted_cols) == sets.nwnm
        && image(&stats.restricted_rows) == sets.wm
        && image(&stats.unrestricted_rows) == sets.wnm
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_perms;
    use crate::testutil::{perm, sample_tableau};

    fn set(v: &[u32]) -> BTreeSet<u32> {
        v.iter().copied().collect()
    }

    /// Cubic scan straight from the definitions.
    fn brute_nwnm(p: &Perm) -> BTreeSet<u32> {
        let w = p.word();
        let n = w.len();
        (0..n)
            .filter(|&i| {
                let mid = (0..i).any(|j| w[j] > w[i]) && (i + 1..n).any(|k| w[k] < w[i]);
                (w[i] as usize) < i + 1 && !mid
            })
            .map(|i| w[i])
            .collect()
    }

    const SAMPLE: [u32; 12] = [6, 5, 1, 10, 4, 3, 8, 9, 2, 11, 7, 12];

    #[test]
    fn weak_excedances_of_sample() {
        assert_eq!(weak_excedances(&perm(&SAMPLE)), vec![1, 2, 4, 7, 8, 10, 12]);
        assert_eq!(weak_excedances(&Perm::identity(5)), vec![1, 2, 3, 4, 5]);
        assert_eq!(weak_excedances(&perm(&[2, 1])), vec![1]);
    }

    #[test]
    fn mid_points_examples() {
        let m = mid_points(&perm(&SAMPLE));
        assert!(m.contains(&5));
        assert!(!m.contains(&1));
        assert!(mid_points(&Perm::identity(6)).is_empty());
        assert_eq!(mid_points(&perm(&[3, 2, 1])), set(&[2]));
    }

    #[test]
    fn four_sets_of_sample() {
        let s = four_sets(&perm(&SAMPLE));
        assert_eq!(s.nwnm, set(&[1, 2, 7]));
        assert_eq!(s.wm, set(&[5, 8, 9]));
        assert_eq!(s.nwm, set(&[3, 4]));
        assert_eq!(s.wnm, set(&[6, 10, 11, 12]));
        assert_eq!(nwnm(&perm(&SAMPLE)), 3);

        let id = four_sets(&Perm::identity(4));
        assert!(id.nwnm.is_empty());
        assert_eq!(id.wnm, set(&[1, 2, 3, 4]));
    }

    #[test]
    fn fast_nwnm_matches_definition() {
        for n in 0..=7 {
            for p in all_perms(n) {
                let brute = brute_nwnm(&p);
                assert_eq!(four_sets(&p).nwnm, brute, "{p}");
                assert_eq!(nwnm(&p), brute.len());
                assert_eq!(four_sets(&p).total(), n as usize);
            }
        }
    }

    #[test]
    fn fixed_points_never_in_nwnm() {
        for p in all_perms(6) {
            let s = four_sets(&p);
            for f in p.fixed_points() {
                assert!(!s.nwnm.contains(&f));
            }
        }
    }

    #[test]
    fn four_sets_on_sample() {
        let t = sample_tableau();
        assert!(check_four_set_correspondence(&t));
        let by_pos = four_sets_by_position(&phi(&t));
        assert_eq!(by_pos.nwnm, set(&[3, 9, 11]));
        assert_eq!(by_pos.nwm, set(&[5, 6]));
        assert!(check_four_set_correspondence(&Tableau::all_rows(1)));
    }

    #[test]
    fn partial_perm_of_identity_support() {
        let pp = PartialPerm::new(5, vec![], vec![]).unwrap();
        assert_eq!(nwnm_of_partial(&pp), 0);
    }

    #[test]
    fn partial_perm_keeps_nwnm() {
        let full = perm(&[8, 1, 12, 4, 3, 7, 11, 2, 15, 6, 10, 14, 13, 5, 16, 9]);
        let pp = PartialPerm::without_fixed_points(&full);
        assert_eq!(
            pp.support(),
            &[1, 2, 3, 5, 6, 7, 8, 9, 10, 11, 12, 14, 15, 16]
        );
        assert_eq!(
            pp.values(),
            &[8, 1, 12, 3, 7, 11, 2, 15, 6, 10, 14, 5, 16, 9]
        );
        assert_eq!(four_sets_of_partial(&pp).nwnm, four_sets(&full).nwnm);
        assert_eq!(pp.extend_with_fixed_points().unwrap(), full);
    }
}
