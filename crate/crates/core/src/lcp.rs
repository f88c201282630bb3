use crate::word::Letter;

/// Longest-common-prefix table over all suffix pairs of a word, giving O(1)
/// comparison of arbitrary factors. Quadratic memory; meant for desk-scale words.
pub(crate) struct LcpTable {
    stride: usize,
    table: Vec<u32>,
}

impl LcpTable {
    pub(crate) fn new(word: &[Letter]) -> Self {
        let n = word.len();
        let stride = n + 1;
        let mut table = vec![0u32; stride * stride];
        for i in (0..n).rev() {
            for j in (0..n).rev() {
                if word[i] == word[j] {
                    table[i * stride + j] = table[(i + 1) * stride + j + 1] + 1;
                }
            }
        }
        Self { stride, table }
    }

    pub(crate) fn lcp(&self, i: usize, j: usize) -> usize {
        self.table[i * self.stride + j] as usize
    }
}
