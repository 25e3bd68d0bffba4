use alloc::vec;
use alloc::vec::Vec;

use super::FpVector;

/// GF(3) vector packed into two bit planes: `ones` marks coordinates equal to 1,
/// `twos` coordinates equal to 2. No bit is set in both planes.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Gf3Vec {
    n: usize,
    ones: Vec<u64>,
    twos: Vec<u64>,
}

#[inline(always)]
fn add_word(x1: u64, x2: u64, y1: u64, y2: u64) -> (u64, u64) {
    let xz = !(x1 | x2);
    let yz = !(y1 | y2);
    ((x1 & yz) | (y1 & xz) | (x2 & y2), (x2 & yz) | (y2 & xz) | (x1 & y1))
}

impl Gf3Vec {
    fn words(n: usize) -> usize {
        n.div_ceil(64)
    }

    pub fn planes(&self) -> (&[u64], &[u64]) {
        (&self.ones, &self.twos)
    }

    /// Plane invariant: no coordinate has both bits set and nothing past `n`.
    pub fn is_valid(&self) -> bool {
        let tail_ok = match self.n % 64 {
            0 => true,
            r => {
                let mask = !((1u64 << r) - 1);
                self.ones.last().is_none_or(|w| w & mask == 0) && self.twos.last().is_none_or(|w| w & mask == 0)
            }
        };
        tail_ok && self.ones.iter().zip(&self.twos).all(|(a, b)| a & b == 0)
    }

    /// Bit mask of the nonzero coordinates.
    pub fn support_words(&self) -> impl Iterator<Item = u64> + '_ {
        self.ones.iter().zip(&self.twos).map(|(a, b)| a | b)
    }

    /// `self += other`.
    #[inline]
    pub fn add_assign(&mut self, other: &Self) {
        for i in 0..self.ones.len() {
            let (a, b) = add_word(self.ones[i], self.twos[i], other.ones[i], other.twos[i]);
            self.ones[i] = a;
            self.twos[i] = b;
        }
    }

    /// `self -= other`.
    #[inline]
    pub fn sub_assign(&mut self, other: &Self) {
        for i in 0..self.ones.len() {
            let (a, b) = add_word(self.ones[i], self.twos[i], other.twos[i], other.ones[i]);
            self.ones[i] = a;
            self.twos[i] = b;
        }
    }

    /// Componentwise square: every nonzero coordinate becomes 1.
    pub fn square(&self) -> Self {
        let ones = self.support_words().collect();
        Gf3Vec {
            n: self.n,
            ones,
            twos: vec![0; self.twos.len()],
        }
    }

    /// Componentwise product.
    pub fn mul_pointwise(&self, other: &Self) -> Self {
        let (mut ones, mut twos) = (Vec::with_capacity(self.ones.len()), Vec::with_capacity(self.ones.len()));
        for i in 0..self.ones.len() {
            let (a1, a2, b1, b2) = (self.ones[i], self.twos[i], other.ones[i], other.twos[i]);
            ones.push((a1 & b1) | (a2 & b2));
            twos.push((a1 & b2) | (a2 & b1));
        }
        Gf3Vec { n: self.n, ones, twos }
    }

    /// Vector with coordinates taken from `self` through `perm`: `out[i] = self[perm[i]]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut out = Gf3Vec::zeros(3, self.n);
        for (i, &src) in perm.iter().enumerate() {
            out.set(i, self.get(src));
        }
        out
    }
}

impl FpVector for Gf3Vec {
    fn zeros(p: u8, n: usize) -> Self {
        debug_assert_eq!(p, 3);
        let w = Gf3Vec::words(n);
        Gf3Vec {
            n,
            ones: vec![0; w],
            twos: vec![0; w],
        }
    }

    fn modulus(&self) -> u8 {
        3
    }

    fn len(&self) -> usize {
        self.n
    }

    #[inline]
    fn get(&self, i: usize) -> u8 {
        let (w, b) = (i / 64, i % 64);
        ((self.ones[w] >> b) & 1) as u8 | ((((self.twos[w] >> b) & 1) as u8) << 1)
    }

    #[inline]
    fn set(&mut self, i: usize, v: u8) {
        let (w, b) = (i / 64, i % 64);
        let m = 1u64 << b;
        self.ones[w] &= !m;
        self.twos[w] &= !m;
        match v % 3 {
            1 => self.ones[w] |= m,
            2 => self.twos[w] |= m,
            _ => {}
        }
    }

    #[inline]
    fn axpy(&mut self, c: u8, other: &Self) {
        match c % 3 {
            1 => self.add_assign(other),
            2 => self.sub_assign(other),
            _ => {}
        }
    }

    #[inline]
    fn assign_axpy(&mut self, base: &Self, c: u8, other: &Self) {
        let (o1, o2) = match c % 3 {
            1 => (&other.ones, &other.twos),
            2 => (&other.twos, &other.ones),
            _ => {
                self.ones.copy_from_slice(&base.ones);
                self.twos.copy_from_slice(&base.twos);
                return;
            }
        };
        for i in 0..self.ones.len() {
            let (a, b) = add_word(base.ones[i], base.twos[i], o1[i], o2[i]);
            self.ones[i] = a;
            self.twos[i] = b;
        }
    }

    fn scale(&mut self, c: u8) {
        match c % 3 {
            0 => {
                self.ones.iter_mut().for_each(|w| *w = 0);
                self.twos.iter_mut().for_each(|w| *w = 0);
            }
            2 => core::mem::swap(&mut self.ones, &mut self.twos),
            _ => {}
        }
    }

    #[inline]
    fn weight(&self) -> usize {
        self.ones
            .iter()
            .zip(&self.twos)
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    }

    fn dot(&self, other: &Self) -> u8 {
        let mut same = 0u32;
        let mut opposite = 0u32;
        for i in 0..self.ones.len() {
            same += ((self.ones[i] & other.ones[i]) | (self.twos[i] & other.twos[i])).count_ones();
            opposite += ((self.ones[i] & other.twos[i]) | (self.twos[i] & other.ones[i])).count_ones();
        }
        ((same + 2 * opposite) % 3) as u8
    }

    fn is_zero(&self) -> bool {
        self.support_words().all(|w| w == 0)
    }

    fn first_nonzero(&self) -> Option<usize> {
        self.support_words()
            .enumerate()
            .find(|(_, w)| *w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }
}
