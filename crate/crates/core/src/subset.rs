//! Subsets of a ground set of at most 64 points, as bitmasks.
//!
//! Points are 0-based internally; text and file formats are 1-based.

pub type Subset = u64;

pub const MAX_POINTS: usize = 64;

pub fn from_points<I: IntoIterator<Item = usize>>(points: I) -> Subset {
    points.into_iter().fold(0, |m, p| m | (1u64 << p))
}

/// Builds a mask from 1-based labels.
pub fn from_labels(labels: &[usize]) -> Option<Subset> {
    labels.iter().try_fold(0u64, |m, &l| (1..=MAX_POINTS).contains(&l).then(|| m | (1u64 << (l - 1))))
}

pub fn points(mask: Subset) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let p = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(p)
        }
    })
}

pub fn labels(mask: Subset) -> Vec<usize> {
    points(mask).map(|p| p + 1).collect()
}

pub fn size(mask: Subset) -> usize {
    mask.count_ones() as usize
}

pub fn full(n: usize) -> Subset {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// All subsets of `mask`, in increasing numeric order.
pub fn subsets_of(mask: Subset) -> impl Iterator<Item = Subset> {
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == mask { None } else { Some(((cur | !mask).wrapping_add(1)) & mask) };
        Some(cur)
    })
}

/// All `k`-element subsets of `mask`.
pub fn k_subsets_of(mask: Subset, k: usize) -> Vec<Subset> {
    let pts: Vec<usize> = points(mask).collect();
    let mut out = Vec::new();
    fn rec(pts: &[usize], k: usize, start: usize, cur: Subset, out: &mut Vec<Subset>) {
        if k == 0 {
            out.push(cur);
            return;
        }
        for i in start..pts.len() {
            if pts.len() - i < k {
                break;
            }
            rec(pts, k - 1, i + 1, cur | (1u64 << pts[i]), out);
        }
    }
    if k <= pts.len() {
        rec(&pts, k, 0, 0, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_enumeration() {
        let m = from_points([0, 2, 5]);
        let all: Vec<_> = subsets_of(m).collect();
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|&s| s & !m == 0));
        assert_eq!(k_subsets_of(full(6), 3).len(), 20);
        assert_eq!(k_subsets_of(full(3), 4).len(), 0);
        assert_eq!(k_subsets_of(m, 0), vec![0]);
        assert_eq!(labels(from_labels(&[1, 4]).unwrap()), vec![1, 4]);
        assert_eq!(from_labels(&[0]), None);
    }
}
