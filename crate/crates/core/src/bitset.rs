//! Word-packed vertex sets. A set over `0..n` is a slice of `ceil(n / 64)` words.

#[inline]
pub fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
pub fn contains(set: &[u64], v: usize) -> bool {
    set[v >> 6] >> (v & 63) & 1 == 1
}

#[inline]
pub fn insert(set: &mut [u64], v: usize) {
    set[v >> 6] |= 1u64 << (v & 63);
}

#[inline]
pub fn remove(set: &mut [u64], v: usize) {
    set[v >> 6] &= !(1u64 << (v & 63));
}

#[inline]
pub fn count(set: &[u64]) -> usize {
    set.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub fn is_empty(set: &[u64]) -> bool {
    set.iter().all(|&w| w == 0)
}

#[inline]
pub fn and_assign(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d &= s;
    }
}

#[inline]
pub fn and_not_assign(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d &= !s;
    }
}

#[inline]
pub fn intersects(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

#[inline]
pub fn intersection_count(a: &[u64], b: &[u64]) -> usize {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x & y).count_ones() as usize)
        .sum()
}

/// Sets bits `0..n` and clears the rest of the slice.
pub fn fill(set: &mut [u64], n: usize) {
    for (i, w) in set.iter_mut().enumerate() {
        let lo = i * 64;
        *w = if n >= lo + 64 {
            u64::MAX
        } else if n > lo {
            (1u64 << (n - lo)) - 1
        } else {
            0
        };
    }
}

pub fn iter(set: &[u64]) -> Ones<'_> {
    Ones {
        words: set,
        index: 0,
        current: set.first().copied().unwrap_or(0),
    }
}

/// Iterator over the members of a set, ascending.
pub struct Ones<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * 64 + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fill_and_iterate_across_words() {
        let mut s = vec![0u64; words_for(130)];
        fill(&mut s, 130);
        assert_eq!(count(&s), 130);
        remove(&mut s, 64);
        remove(&mut s, 0);
        assert!(!contains(&s, 64));
        let v: Vec<usize> = iter(&s).take(3).collect();
        assert_eq!(v, vec![1, 2, 3]);
        assert_eq!(iter(&s).last(), Some(129));
        assert_eq!(iter(&s).count(), 128);
    }

    #[test]
    fn empty_slice_iterates_nothing() {
        assert_eq!(iter(&[]).next(), None);
        assert!(is_empty(&[]));
    }
}
