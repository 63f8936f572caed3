//! Permutation enumeration with parity tracking.

/// Calls `f` with every permutation of `0..n` and its sign. Uses Heap's
/// algorithm, so consecutive permutations differ by one transposition and
/// the sign just alternates. `n = 0` yields the empty permutation once.
pub(crate) fn for_each_permutation<F: FnMut(&[usize], i8)>(n: usize, mut f: F) {
    let mut items: Vec<usize> = (0..n).collect();
    let mut sign: i8 = 1;
    f(&items, sign);
    if n < 2 {
        return;
    }
    let mut counters = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(counters[i], i);
            }
            sign = -sign;
            f(&items, sign);
            counters[i] += 1;
            i = 1;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
}
