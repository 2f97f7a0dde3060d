use std::sync::OnceLock;

/// Resource caps shared by the enumeration-heavy operations.
///
/// Exceeding a cap is always a hard error; nothing is ever sampled silently.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum order of an enumerated group (`TSL_MAX_GROUP`).
    pub max_group: usize,
    /// Maximum number of events of a test space (`TSL_MAX_EVENTS`).
    pub max_events: usize,
    /// Maximum number of event pairs visited by a pairwise check.
    pub max_event_pairs: usize,
    /// Maximum number of coordinates for vertex enumeration (`TSL_MAX_VERTEX_DIM`).
    pub max_vertex_dim: usize,
    /// Maximum number of stage-two assignments in a two-stage product.
    pub max_assignments: usize,
    /// Maximum number of bijections visited by a symmetry check.
    pub max_bijections: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_group: 1_000_000,
            max_events: 50_000,
            max_event_pairs: 5_000_000,
            max_vertex_dim: 64,
            max_assignments: 100_000,
            max_bijections: 1_000_000,
        }
    }
}

impl Limits {
    /// Defaults overridden by the `TSL_MAX_*` environment variables.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        let read = |key: &str| std::env::var(key).ok().and_then(|v| v.trim().parse::<usize>().ok());
        if let Some(v) = read("TSL_MAX_GROUP") {
            limits.max_group = v;
        }
        if let Some(v) = read("TSL_MAX_EVENTS") {
            limits.max_events = v;
        }
        if let Some(v) = read("TSL_MAX_VERTEX_DIM") {
            limits.max_vertex_dim = v;
        }
        limits
    }

    /// Process-wide limits, read from the environment once.
    pub fn current() -> Limits {
        static CURRENT: OnceLock<Limits> = OnceLock::new();
        *CURRENT.get_or_init(Limits::from_env)
    }
}
