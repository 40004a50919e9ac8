//! Size limits for the exponential enumerations.

use crate::error::{Result, ScarfError};
use crate::pointset::PointSet;

/// Environment variable that disables every guard when set to a nonempty value.
pub const OVERRIDE_ENV: &str = "SCARF_SCALE_OVERRIDE";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScaleGuards {
    pub max_points: usize,
    pub max_dim: usize,
    pub max_lattice: usize,
    pub enabled: bool,
}

impl Default for ScaleGuards {
    fn default() -> Self {
        ScaleGuards { max_points: 64, max_dim: 8, max_lattice: 65536, enabled: true }
    }
}

impl ScaleGuards {
    /// Defaults, disabled when the override variable is set.
    pub fn from_env() -> Self {
        let overridden = std::env::var_os(OVERRIDE_ENV).is_some_and(|v| !v.is_empty());
        ScaleGuards { enabled: !overridden, ..ScaleGuards::default() }
    }

    pub fn unlimited() -> Self {
        ScaleGuards { enabled: false, ..ScaleGuards::default() }
    }

    pub fn check(&self, what: &'static str, size: usize, limit: usize) -> Result<()> {
        if self.enabled && size > limit {
            return Err(ScarfError::ScaleGuard { what, size, limit });
        }
        Ok(())
    }

    pub fn check_set(&self, set: &PointSet) -> Result<()> {
        self.check("point count", set.len(), self.max_points)?;
        self.check("dimension", set.dim(), self.max_dim)
    }

    pub fn check_lattice(&self, size: usize) -> Result<()> {
        self.check("lcm lattice size", size, self.max_lattice)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn limits() {
        let g = ScaleGuards::default();
        assert!(g.check_lattice(65536).is_ok());
        assert_eq!(
            g.check_lattice(65537),
            Err(ScarfError::ScaleGuard { what: "lcm lattice size", size: 65537, limit: 65536 })
        );
        assert!(ScaleGuards::unlimited().check_lattice(1 << 30).is_ok());
        let wide = PointSet::from_ints(9, &[&[0; 9]]).unwrap();
        assert!(g.check_set(&wide).is_err());
    }
}
