//! Packed bit rows used for order relations and member sets.

/// Fixed-capacity set of element indices, packed 64 per word.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IndexSet {
    nbits: usize,
    words: Vec<u64>,
}

impl IndexSet {
    pub fn empty(nbits: usize) -> Self {
        IndexSet { nbits, words: vec![0; nbits.div_ceil(64)] }
    }

    pub fn full(nbits: usize) -> Self {
        let mut s = Self::empty(nbits);
        for i in 0..nbits {
            s.insert(i);
        }
        s
    }

    pub fn from_pred(nbits: usize, mut pred: impl FnMut(usize) -> bool) -> Self {
        let mut s = Self::empty(nbits);
        for i in 0..nbits {
            if pred(i) {
                s.insert(i);
            }
        }
        s
    }

    pub fn capacity(&self) -> usize {
        self.nbits
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.nbits);
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.nbits);
        self.words[i / 64] &= !(1u64 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.nbits);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        assert_eq!(self.nbits, other.nbits);
        IndexSet {
            nbits: self.nbits,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        assert_eq!(self.nbits, other.nbits);
        IndexSet {
            nbits: self.nbits,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect(),
        }
    }

    pub fn complement(&self) -> Self {
        let mut out = IndexSet {
            nbits: self.nbits,
            words: self.words.iter().map(|w| !w).collect(),
        };
        // mask tail bits beyond capacity
        let tail = self.nbits % 64;
        if tail != 0 {
            if let Some(last) = out.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
        out
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        assert_eq!(self.nbits, other.nbits);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + bit)
            })
        })
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

/// Dense n-by-n boolean matrix with 64-bit packed rows.
#[derive(Clone, Debug)]
pub struct BitMatrix {
    n: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let stride = n.div_ceil(64).max(1);
        BitMatrix { n, stride, data: vec![0; n * stride] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn set(&mut self, i: usize, j: usize) {
        debug_assert!(i < self.n && j < self.n);
        self.data[i * self.stride + j / 64] |= 1u64 << (j % 64);
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.n && j < self.n);
        self.data[i * self.stride + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    /// row(i) |= row(j), in place.
    pub fn or_row(&mut self, i: usize, j: usize) {
        assert_ne!(i, j);
        let (a, b) = if i < j {
            let (lo, hi) = self.data.split_at_mut(j * self.stride);
            (&mut lo[i * self.stride..(i + 1) * self.stride], &hi[..self.stride])
        } else {
            let (lo, hi) = self.data.split_at_mut(i * self.stride);
            (&mut hi[..self.stride], &lo[j * self.stride..(j + 1) * self.stride])
        };
        for (x, y) in a.iter_mut().zip(b) {
            *x |= y;
        }
    }

    /// Is row(i) a subset of row(j)?
    pub fn row_subset(&self, i: usize, j: usize) -> bool {
        self.row(i).iter().zip(self.row(j)).all(|(a, b)| a & !b == 0)
    }

    pub fn row_count(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Is row(i) a subset of the member words of `set`?
    pub fn row_subset_of_set(&self, i: usize, set: &IndexSet) -> bool {
        self.row(i).iter().zip(set.words()).all(|(a, b)| a & !b == 0)
    }

    pub fn row_as_set(&self, i: usize) -> IndexSet {
        let mut s = IndexSet::empty(self.n);
        for (w, src) in s.words.iter_mut().zip(self.row(i)) {
            *w = *src;
        }
        s
    }
}
