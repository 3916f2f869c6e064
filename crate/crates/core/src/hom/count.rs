/// Arithmetic used by the counting routines: exact `u128` with overflow
/// detection, or `f64` which never overflows.
pub(crate) trait Count: Copy + PartialEq + std::fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(self, other: Self) -> Option<Self>;
    fn mul(self, other: Self) -> Option<Self>;
}

impl Count for u64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn add(self, other: Self) -> Option<Self> {
        self.checked_add(other)
    }
    fn mul(self, other: Self) -> Option<Self> {
        self.checked_mul(other)
    }
}

impl Count for u128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn add(self, other: Self) -> Option<Self> {
        self.checked_add(other)
    }
    fn mul(self, other: Self) -> Option<Self> {
        self.checked_mul(other)
    }
}

impl Count for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn add(self, other: Self) -> Option<Self> {
        Some(self + other)
    }
    fn mul(self, other: Self) -> Option<Self> {
        Some(self * other)
    }
}

/// `Σ items`, `None` on overflow.
pub(crate) fn checked_sum<T: Count>(items: impl IntoIterator<Item = T>) -> Option<T> {
    items.into_iter().try_fold(T::zero(), T::add)
}
