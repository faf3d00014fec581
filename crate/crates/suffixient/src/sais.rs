//! Suffix array construction by induced sorting (SA-IS), linear time over
//! an integer alphabet with a unique smallest sentinel at the end.

const EMPTY: usize = usize::MAX;

/// Computes the suffix array of `text` (0-based starts). The last symbol
/// must be 0, unique and strictly smallest.
pub fn suffix_array(text: &[u32], sigma: usize) -> Vec<usize> {
    debug_assert_eq!(text.last(), Some(&0));
    let s: Vec<usize> = text.iter().map(|&c| c as usize).collect();
    let mut sa = vec![EMPTY; s.len()];
    sais(&s, sigma, &mut sa);
    sa
}

fn bucket_sizes(s: &[usize], sigma: usize) -> Vec<usize> {
    let mut b = vec![0usize; sigma];
    for &c in s {
        b[c] += 1;
    }
    b
}

fn bucket_heads(sizes: &[usize]) -> Vec<usize> {
    let mut heads = Vec::with_capacity(sizes.len());
    let mut sum = 0;
    for &sz in sizes {
        heads.push(sum);
        sum += sz;
    }
    heads
}

fn bucket_tails(sizes: &[usize]) -> Vec<usize> {
    let mut tails = Vec::with_capacity(sizes.len());
    let mut sum = 0;
    for &sz in sizes {
        sum += sz;
        tails.push(sum);
    }
    tails
}

/// Induces L-type then S-type suffixes from the already placed entries.
fn induce(s: &[usize], sa: &mut [usize], sizes: &[usize], is_s: &[bool]) {
    let n = s.len();
    let mut heads = bucket_heads(sizes);
    for i in 0..n {
        let j = sa[i];
        if j != EMPTY && j > 0 && !is_s[j - 1] {
            sa[heads[s[j - 1]]] = j - 1;
            heads[s[j - 1]] += 1;
        }
    }
    let mut tails = bucket_tails(sizes);
    for i in (0..n).rev() {
        let j = sa[i];
        if j != EMPTY && j > 0 && is_s[j - 1] {
            tails[s[j - 1]] -= 1;
            sa[tails[s[j - 1]]] = j - 1;
        }
    }
}

fn sais(s: &[usize], sigma: usize, sa: &mut [usize]) {
    let n = s.len();
    if n == 1 {
        sa[0] = 0;
        return;
    }

    let mut is_s = vec![false; n];
    is_s[n - 1] = true;
    for i in (0..n - 1).rev() {
        is_s[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && is_s[i + 1]);
    }
    let is_lms = |i: usize| i > 0 && is_s[i] && !is_s[i - 1];

    let sizes = bucket_sizes(s, sigma);

    // First pass: LMS suffixes in arbitrary order at bucket tails.
    sa.fill(EMPTY);
    {
        let mut tails = bucket_tails(&sizes);
        for i in 1..n {
            if is_lms(i) {
                tails[s[i]] -= 1;
                sa[tails[s[i]]] = i;
            }
        }
    }
    induce(s, sa, &sizes, &is_s);

    // Name LMS substrings in sorted order.
    let lms_positions: Vec<usize> = (1..n).filter(|&i| is_lms(i)).collect();
    let m = lms_positions.len();
    let mut name = vec![EMPTY; n];
    let mut last_name = 0usize;
    let mut prev = EMPTY;
    for i in 0..n {
        let j = sa[i];
        if j == EMPTY || !is_lms(j) {
            continue;
        }
        if prev != EMPTY && !lms_substrings_equal(s, &is_s, prev, j, &is_lms) {
            last_name += 1;
        }
        name[j] = last_name;
        prev = j;
    }

    let reduced: Vec<usize> = lms_positions.iter().map(|&p| name[p]).collect();
    let mut reduced_sa = vec![EMPTY; m];
    if last_name + 1 == m {
        for (i, &nm) in reduced.iter().enumerate() {
            reduced_sa[nm] = i;
        }
    } else {
        sais(&reduced, last_name + 1, &mut reduced_sa);
    }

    // Second pass: LMS suffixes in their final order.
    sa.fill(EMPTY);
    let mut tails = bucket_tails(&sizes);
    for &ri in reduced_sa.iter().rev() {
        let j = lms_positions[ri];
        tails[s[j]] -= 1;
        sa[tails[s[j]]] = j;
    }
    induce(s, sa, &sizes, &is_s);
}

fn lms_substrings_equal(
    s: &[usize],
    is_s: &[bool],
    i: usize,
    j: usize,
    is_lms: &impl Fn(usize) -> bool,
) -> bool {
    let n = s.len();
    if i == j {
        return true;
    }
    let mut k = 0;
    loop {
        let (a, b) = (i + k, j + k);
        if a >= n || b >= n {
            return false; // the sentinel LMS substring is unique
        }
        let a_end = k > 0 && is_lms(a);
        let b_end = k > 0 && is_lms(b);
        if a_end && b_end {
            return true;
        }
        if a_end != b_end || s[a] != s[b] || is_s[a] != is_s[b] {
            return false;
        }
        k += 1;
    }
}
