/// Default bound on the order of any enumerated group.
pub const DEFAULT_ORDER_CAP: usize = 5000;

/// Default bound on the order of groups whose full subgroup lattice is built.
pub const DEFAULT_LATTICE_CAP: usize = 256;

/// Environment variable that overrides [`DEFAULT_ORDER_CAP`].
pub const ORDER_CAP_ENV: &str = "LCGROUP_ORDER_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct Caps {
    pub order: usize,
    pub lattice: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            order: DEFAULT_ORDER_CAP,
            lattice: DEFAULT_LATTICE_CAP,
        }
    }
}

impl Caps {
    /// Defaults, with the order cap taken from [`ORDER_CAP_ENV`] when it
    /// holds a positive integer.
    pub fn from_env() -> Self {
        let order = std::env::var(ORDER_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&n| n > 0)
            .unwrap_or(DEFAULT_ORDER_CAP);
        Self {
            order,
            ..Self::default()
        }
    }
}
