use alloc::vec::Vec;

/// Euclidean projection of `y` onto nondecreasing sequences
/// (pool-adjacent-violators). Entries of a pooled block are bitwise equal.
pub fn pava(y: &[f64]) -> Vec<f64> {
    // (sum, count) per block
    let mut blocks: Vec<(f64, usize)> = Vec::with_capacity(y.len());
    for &v in y {
        blocks.push((v, 1));
        while blocks.len() > 1 {
            let (s1, n1) = blocks[blocks.len() - 1];
            let (s0, n0) = blocks[blocks.len() - 2];
            if s0 / n0 as f64 <= s1 / n1 as f64 {
                break;
            }
            blocks.pop();
            let last = blocks.len() - 1;
            blocks[last] = (s0 + s1, n0 + n1);
        }
    }
    let mut out = Vec::with_capacity(y.len());
    for (s, n) in blocks {
        let mean = s / n as f64;
        out.extend(core::iter::repeat_n(mean, n));
    }
    out
}
