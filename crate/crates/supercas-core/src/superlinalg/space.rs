use alloc::vec;
use alloc::vec::Vec;

/// Ordered homogeneous basis with a Z2 grading per index.
///
/// A tensor product remembers its factors, so composite indices can be
/// split back into factor indices (row-major, last factor fastest).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedSpace {
    parity: Vec<u8>,
    factors: Vec<Vec<u8>>,
}

impl GradedSpace {
    /// `V(M|N)`: the first `m` basis vectors even, the remaining `n` odd.
    pub fn standard(m: usize, n: usize) -> Self {
        let mut p = vec![0u8; m];
        p.extend(core::iter::repeat_n(1u8, n));
        Self::from_parities(p)
    }

    /// A single-factor space with the given parities, in order.
    pub fn from_parities(parity: Vec<u8>) -> Self {
        debug_assert!(parity.iter().all(|&p| p < 2));
        GradedSpace {
            factors: vec![parity.clone()],
            parity,
        }
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn dim_even(&self) -> usize {
        self.parity.iter().filter(|&&p| p == 0).count()
    }

    pub fn dim_odd(&self) -> usize {
        self.dim() - self.dim_even()
    }

    pub fn sdim(&self) -> i64 {
        self.dim_even() as i64 - self.dim_odd() as i64
    }

    #[inline]
    pub fn parity(&self, a: usize) -> u8 {
        self.parity[a]
    }

    pub fn parities(&self) -> &[u8] {
        &self.parity
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    /// Parities of each tensor factor.
    pub fn factors(&self) -> &[Vec<u8>] {
        &self.factors
    }

    pub fn tensor(&self, other: &GradedSpace) -> GradedSpace {
        let mut parity = Vec::with_capacity(self.dim() * other.dim());
        for &a in &self.parity {
            for &b in &other.parity {
                parity.push(a ^ b);
            }
        }
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        GradedSpace { parity, factors }
    }

    /// `V^{⊗s}`; `s = 0` gives the one-dimensional even space.
    pub fn power(&self, s: usize) -> GradedSpace {
        let mut out = GradedSpace {
            parity: vec![0],
            factors: Vec::new(),
        };
        for _ in 0..s {
            out = out.tensor(self);
        }
        out
    }

    /// The same parities viewed as one factor.
    pub fn flattened(&self) -> GradedSpace {
        Self::from_parities(self.parity.clone())
    }
}
