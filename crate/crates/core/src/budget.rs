/// Resource limits for the brute-force routines.
///
/// Both limits guard oracles whose cost grows with the count itself rather
/// than with the number of digits of `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budgets {
    /// Maximum number of partitions an enumeration may produce.
    pub enumeration: u64,
    /// Maximum number of innermost iterations of a literal nested sum.
    pub nested_steps: u64,
}

impl Budgets {
    pub const DEFAULT_ENUMERATION: u64 = 1_000_000;
    pub const DEFAULT_NESTED_STEPS: u64 = 100_000_000;

    pub const UNLIMITED: Budgets = Budgets {
        enumeration: u64::MAX,
        nested_steps: u64::MAX,
    };
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            enumeration: Self::DEFAULT_ENUMERATION,
            nested_steps: Self::DEFAULT_NESTED_STEPS,
        }
    }
}
