use std::fmt;
use std::str::FromStr;

use super::Objective;
use crate::error::{Error, Result};
use crate::spaces::NormedSpace;

/// Angular grid with golden-section refinement (2D only).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridConfig {
    /// Angles per variable.
    pub resolution: usize,
    /// Refinement rounds around the best grid cell.
    pub refine: usize,
    /// Radial levels per angle when a variable ranges over the ball.
    pub radii: usize,
}

impl Default for GridConfig {
    fn default() -> Self {
        Self {
            resolution: 1024,
            refine: 40,
            radii: 4,
        }
    }
}

/// Seeded multi-start pattern ascent (any dimension).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MultiStartConfig {
    pub starts: usize,
    pub steps: usize,
    pub seed: u64,
}

impl Default for MultiStartConfig {
    fn default() -> Self {
        Self {
            starts: 128,
            steps: 400,
            seed: 7,
        }
    }
}

/// How a supremum is estimated.
///
/// Text forms: `auto`, `exact`, `grid2d:res=1024,refine=40`,
/// `multistart:starts=128,steps=400,seed=7` (omitted fields take defaults).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Vertex enumeration when it is exact, else the grid in 2D, else
    /// multi-start.
    Auto {
        grid: GridConfig,
        multistart: MultiStartConfig,
    },
    Exact,
    Grid2D(GridConfig),
    MultiStart(MultiStartConfig),
}

impl Default for Strategy {
    fn default() -> Self {
        Strategy::Auto {
            grid: GridConfig::default(),
            multistart: MultiStartConfig::default(),
        }
    }
}

/// Vertex enumeration is preferred by `auto` up to this many ordered pairs.
const AUTO_MAX_VERTEX_PAIRS: usize = 1 << 24;

impl Strategy {
    pub fn is_exact(&self) -> bool {
        matches!(self, Strategy::Exact)
    }

    /// Replaces `Auto` by the concrete engine it selects for `f` on `space`.
    pub fn resolve(&self, space: &NormedSpace, f: &Objective) -> Strategy {
        match *self {
            Strategy::Auto { grid, multistart } => {
                let vertices_ok = space
                    .extreme_point_count()
                    .is_some_and(|n| n * n <= AUTO_MAX_VERTEX_PAIRS);
                if f.is_convex() && vertices_ok {
                    Strategy::Exact
                } else if space.dim() == 2 {
                    Strategy::Grid2D(grid)
                } else {
                    Strategy::MultiStart(multistart)
                }
            }
            s => s,
        }
    }

    /// The strategy to use for objectives that cannot be vertex-enumerated.
    pub fn approximate(&self, space: &NormedSpace) -> Strategy {
        match *self {
            Strategy::Exact => {
                let auto = Strategy::default();
                auto.approximate(space)
            }
            Strategy::Auto { grid, multistart } => {
                if space.dim() == 2 {
                    Strategy::Grid2D(grid)
                } else {
                    Strategy::MultiStart(multistart)
                }
            }
            s => s,
        }
    }
}

fn parse_fields<'a>(rest: &'a str, input: &str) -> Result<Vec<(&'a str, &'a str)>> {
    if rest.is_empty() {
        return Ok(Vec::new());
    }
    rest.split(',')
        .map(|kv| {
            kv.split_once('=').map(|(k, v)| (k.trim(), v.trim())).ok_or(Error::Parse {
                what: "strategy",
                input: input.to_string(),
            })
        })
        .collect()
}

fn parse_num<T: FromStr>(v: &str, input: &str) -> Result<T> {
    v.parse().map_err(|_| Error::Parse {
        what: "strategy",
        input: input.to_string(),
    })
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let fields = parse_fields(rest, s)?;
        let bad = || Error::Parse {
            what: "strategy",
            input: s.to_string(),
        };
        match name {
            "auto" | "exact" if !fields.is_empty() => Err(bad()),
            "auto" => Ok(Strategy::default()),
            "exact" => Ok(Strategy::Exact),
            "grid2d" => {
                let mut cfg = GridConfig::default();
                for (k, v) in fields {
                    match k {
                        "res" => cfg.resolution = parse_num(v, s)?,
                        "refine" => cfg.refine = parse_num(v, s)?,
                        "radii" => cfg.radii = parse_num(v, s)?,
                        _ => return Err(bad()),
                    }
                }
                if cfg.resolution < 8 || cfg.radii == 0 {
                    return Err(bad());
                }
                Ok(Strategy::Grid2D(cfg))
            }
            "multistart" => {
                let mut cfg = MultiStartConfig::default();
                for (k, v) in fields {
                    match k {
                        "starts" => cfg.starts = parse_num(v, s)?,
                        "steps" => cfg.steps = parse_num(v, s)?,
                        "seed" => cfg.seed = parse_num(v, s)?,
                        _ => return Err(bad()),
                    }
                }
                if cfg.starts == 0 || cfg.steps == 0 {
                    return Err(bad());
                }
                Ok(Strategy::MultiStart(cfg))
            }
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strategy::Auto { .. } => write!(f, "auto"),
            Strategy::Exact => write!(f, "exact"),
            Strategy::Grid2D(c) => write!(f, "grid2d:res={},refine={},radii={}", c.resolution, c.refine, c.radii),
            Strategy::MultiStart(c) => {
                write!(f, "multistart:starts={},steps={},seed={}", c.starts, c.steps, c.seed)
            }
        }
    }
}
