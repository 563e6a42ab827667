use std::sync::atomic::{AtomicU64, Ordering};

/// Fixed-size bitset with atomic insertion, used as a seen-set over the perfect index.
pub struct AtomicBitmap {
    words: Vec<AtomicU64>,
    len: u64,
}

impl AtomicBitmap {
    pub fn new(len: u64) -> Self {
        let n = len.div_ceil(64) as usize;
        AtomicBitmap {
            words: (0..n).map(|_| AtomicU64::new(0)).collect(),
            len,
        }
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, k: u64) -> bool {
        self.words[(k / 64) as usize].load(Ordering::Relaxed) >> (k % 64) & 1 == 1
    }

    /// Sets bit `k`; returns `true` if it was previously clear.
    pub fn insert(&self, k: u64) -> bool {
        let bit = 1u64 << (k % 64);
        self.words[(k / 64) as usize].fetch_or(bit, Ordering::Relaxed) & bit == 0
    }

    /// First clear bit at or after `from`.
    pub fn next_clear(&self, from: u64) -> Option<u64> {
        let mut k = from;
        while k < self.len {
            let w = !self.words[(k / 64) as usize].load(Ordering::Relaxed) >> (k % 64);
            if w != 0 {
                let hit = k + w.trailing_zeros() as u64;
                return (hit < self.len).then_some(hit);
            }
            k = (k / 64 + 1) * 64;
        }
        None
    }

    pub fn count_ones(&self) -> u64 {
        self.words
            .iter()
            .map(|w| w.load(Ordering::Relaxed).count_ones() as u64)
            .sum()
    }
}
