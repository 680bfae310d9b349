/// Enumeration bounds. Every brute-force loop in the crate checks its size
/// against one of these before starting and fails with
/// [`Error::CapExceeded`](crate::Error::CapExceeded) instead of truncating.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest group order for which `Aut(G)` is enumerated.
    pub aut_order: usize,
    /// Candidate generator-image tuples in homomorphism enumeration.
    pub hom_tuples: u128,
    /// Cochains enumerated by the naive oracles.
    pub cochains: u128,
    /// Candidate monoidal-functor data enumerated.
    pub monoidal: u128,
    /// Largest cochain dimension fed to the Smith normal form.
    pub matrix_dim: usize,
    /// Largest table built from a presentation.
    pub table_order: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            aut_order: 24,
            hom_tuples: 10_000_000,
            cochains: 1_000_000,
            monoidal: 1_000_000,
            matrix_dim: 4_000,
            table_order: 1_000,
        }
    }
}

impl Caps {
    pub(crate) fn check(what: &'static str, needed: u128, cap: u128) -> crate::Result<()> {
        if needed > cap {
            Err(crate::Error::CapExceeded { what, needed, cap })
        } else {
            Ok(())
        }
    }
}

/// `base^exp` saturating at `u128::MAX`.
pub(crate) fn sat_pow(base: u128, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base);
    }
    acc
}
