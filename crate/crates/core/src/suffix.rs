//! Suffix array by prefix doubling (radix-sorted rounds, O(n log n)) and
//! Kasai's LCP array, enough to find a longest repeated substring.

pub(crate) fn suffix_array(text: &[u32]) -> Vec<usize> {
    let n = text.len();
    if n == 0 {
        return Vec::new();
    }
    // Initial ranks: dense ranks of the symbols.
    let mut sorted: Vec<u32> = text.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut rank: Vec<usize> = text.iter().map(|c| sorted.binary_search(c).expect("symbol present") + 1).collect();
    let mut sa: Vec<usize> = (0..n).collect();
    let mut tmp = vec![0usize; n];
    let mut k = 1;
    loop {
        // Sort by (rank[i], rank[i + k]) with two stable counting passes;
        // rank 0 stands for "past the end".
        let buckets = rank.iter().copied().max().unwrap_or(0) + 1;
        let second = |i: usize| if i + k < n { rank[i + k] } else { 0 };
        sa = counting_sort(&sa, buckets, second);
        sa = counting_sort(&sa, buckets, |i| rank[i]);

        tmp[sa[0]] = 1;
        for w in 1..n {
            let (a, b) = (sa[w - 1], sa[w]);
            let same = rank[a] == rank[b] && second(a) == second(b);
            tmp[b] = tmp[a] + usize::from(!same);
        }
        std::mem::swap(&mut rank, &mut tmp);
        if rank[sa[n - 1]] == n {
            break;
        }
        k *= 2;
    }
    sa
}

fn counting_sort(items: &[usize], buckets: usize, key: impl Fn(usize) -> usize) -> Vec<usize> {
    let mut count = vec![0usize; buckets + 1];
    for &i in items {
        count[key(i) + 1] += 1;
    }
    for b in 0..buckets {
        count[b + 1] += count[b];
    }
    let mut out = vec![0usize; items.len()];
    for &i in items {
        let slot = &mut count[key(i)];
        out[*slot] = i;
        *slot += 1;
    }
    out
}

/// `lcp[r]` is the longest common prefix of suffixes `sa[r - 1]` and `sa[r]`
/// (`lcp[0] = 0`).
pub(crate) fn lcp_array(text: &[u32], sa: &[usize]) -> Vec<usize> {
    let n = text.len();
    let mut rank = vec![0usize; n];
    for (r, &i) in sa.iter().enumerate() {
        rank[i] = r;
    }
    let mut lcp = vec![0usize; n];
    let mut h = 0usize;
    for i in 0..n {
        if rank[i] == 0 {
            h = 0;
            continue;
        }
        let j = sa[rank[i] - 1];
        while i + h < n && j + h < n && text[i + h] == text[j + h] {
            h += 1;
        }
        lcp[rank[i]] = h;
        h = h.saturating_sub(1);
    }
    lcp
}

/// Longest substring occurring at two different positions, as
/// `(length, first_position, second_position)`; `None` for no repeat.
pub(crate) fn longest_repeat(text: &[u32]) -> Option<(usize, usize, usize)> {
    let sa = suffix_array(text);
    let lcp = lcp_array(text, &sa);
    let mut best: Option<(usize, usize, usize)> = None;
    for r in 1..sa.len() {
        if lcp[r] > 0 && best.is_none_or(|(l, _, _)| lcp[r] > l) {
            let (a, b) = (sa[r - 1].min(sa[r]), sa[r - 1].max(sa[r]));
            best = Some((lcp[r], a, b));
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive_sa(text: &[u32]) -> Vec<usize> {
        let mut sa: Vec<usize> = (0..text.len()).collect();
        sa.sort_by(|&a, &b| text[a..].cmp(&text[b..]));
        sa
    }

    fn naive_lrs(text: &[u32]) -> usize {
        let n = text.len();
        let mut best = 0;
        for i in 0..n {
            for j in i + 1..n {
                let mut l = 0;
                while j + l < n && text[i + l] == text[j + l] {
                    l += 1;
                }
                best = best.max(l);
            }
        }
        best
    }

    #[test]
    fn banana() {
        let t: Vec<u32> = b"banana".iter().map(|&b| u32::from(b)).collect();
        assert_eq!(suffix_array(&t), vec![5, 3, 1, 0, 4, 2]);
        assert_eq!(lcp_array(&t, &suffix_array(&t)), vec![0, 1, 3, 0, 0, 2]);
        assert_eq!(longest_repeat(&t), Some((3, 1, 3)));
        assert_eq!(longest_repeat(&[7]), None);
        assert_eq!(longest_repeat(&[]), None);
    }

    proptest! {
        #[test]
        fn matches_naive(text in proptest::collection::vec(0u32..3, 0..40)) {
            prop_assert_eq!(suffix_array(&text), naive_sa(&text));
            let lrs = longest_repeat(&text).map_or(0, |(l, a, b)| {
                assert_eq!(text[a..a + l], text[b..b + l]);
                l
            });
            prop_assert_eq!(lrs, naive_lrs(&text));
        }
    }
}
