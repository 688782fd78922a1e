//! Small shared helpers.

/// Advance `v` to its next lexicographic permutation, returning `false` once
/// the sequence is in descending order. Works on multisets.
pub(crate) fn next_permutation(v: &mut [u64]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len())
        .rev()
        .find(|&j| v[j] > v[i])
        .expect("successor exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Odometer over the box `[0, bounds[k]]` in lexicographic order; returns
/// `false` when the box is exhausted.
pub(crate) fn next_in_box(v: &mut [u64], bounds: &[u64]) -> bool {
    let mut k = v.len();
    while k > 0 {
        k -= 1;
        if v[k] < bounds[k] {
            v[k] += 1;
            for entry in v.iter_mut().skip(k + 1) {
                *entry = 0;
            }
            return true;
        }
    }
    false
}
