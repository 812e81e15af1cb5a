use std::fmt;
use std::sync::Arc;

/// A variable `x^i_{(-j-1)}`: a base symbol together with its jet level `j`.
///
/// Level 0 is the base variable itself. Ordering is by name, then level, so
/// that all jets of one base variable are adjacent.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarId {
    name: Arc<str>,
    level: u32,
}

impl VarId {
    pub fn new(name: &str, level: u32) -> Self {
        VarId {
            name: Arc::from(name),
            level,
        }
    }

    /// The level-0 variable with this name.
    pub fn base(name: &str) -> Self {
        Self::new(name, 0)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// Same base symbol at another jet level.
    pub fn at_level(&self, level: u32) -> Self {
        VarId {
            name: self.name.clone(),
            level,
        }
    }

    pub fn is_base(&self) -> bool {
        self.level == 0
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.level == 0 {
            write!(f, "{}", self.name)
        } else {
            // jet level j prints as the mode index -(j+1)
            write!(f, "{}_(-{})", self.name, self.level + 1)
        }
    }
}

impl fmt::Debug for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
