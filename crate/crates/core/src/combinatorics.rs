//! Binomial and multinomial coefficients, compositions in colex order, and
//! ordered set partitions ("profiles" without the type wrapper).

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `C(n, k)` in arbitrary precision; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step.
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Binomial with the convention `C(n, k) = 0` for negative arguments.
pub fn binomial_signed(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 {
        BigUint::zero()
    } else {
        binomial(n as u64, k as u64)
    }
}

/// `n! / (p_0! p_1! ... p_c!)` where `n = sum(parts)`.
pub fn multinomial(parts: &[usize]) -> BigUint {
    let mut acc = BigUint::one();
    let mut running = 0u64;
    for &p in parts {
        running += p as u64;
        acc *= binomial(running, p as u64);
    }
    acc
}

/// All compositions of `n` into `len` non-negative parts, in colex order
/// (compared from the last component backwards).
///
/// For `n = 1, len = 3` this gives `[1,0,0], [0,1,0], [0,0,1]`.
pub fn compositions(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if len == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut current = vec![0; len];
    fill_colex(n, len - 1, &mut current, &mut out);
    out
}

// Choose the last component first (smallest first) so that the outer loop
// runs over the most significant colex position.
fn fill_colex(remaining: usize, pos: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if pos == 0 {
        current[0] = remaining;
        out.push(current.clone());
        return;
    }
    for v in 0..=remaining {
        current[pos] = v;
        fill_colex(remaining - v, pos - 1, current, out);
    }
    current[pos] = 0;
}

/// All `k`-subsets of `items` (which must be sorted) in lexicographic order.
pub fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > items.len() {
        return out;
    }
    let m = items.len();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        // rightmost position that can still move right
        let mut i = k;
        while i > 0 && idx[i - 1] == m - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        let i = i - 1;
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Ordered set partitions of `{1..n}` with the given part sizes, each part
/// sorted, in lexicographic order on `(P_0, P_1, ...)`.
pub fn ordered_set_partitions(sizes: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let n: usize = sizes.iter().sum();
    let all: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(sizes.len());
    partitions_rec(&all, sizes, &mut prefix, &mut out);
    out
}

fn partitions_rec(remaining: &[usize], sizes: &[usize], prefix: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
    match sizes.split_first() {
        None => {
            if remaining.is_empty() {
                out.push(prefix.clone());
            }
        }
        Some((&k, rest)) => {
            for part in combinations(remaining, k) {
                let left: Vec<usize> = remaining.iter().copied().filter(|v| !part.contains(v)).collect();
                prefix.push(part);
                partitions_rec(&left, rest, prefix, out);
                prefix.pop();
            }
        }
    }
}
