//! Text descriptors for spaces:
//! `lp:q=2,dim=3`, `wlp:q=2,dim=2,w=1.0;2.0`, `poly2d:v=(1,0);(0,1);(-1,0);(0,-1)`.
//! `q=inf` selects the max-norm. A handful of preset names are accepted too.

use std::fmt;
use std::str::FromStr;

use super::{NormedSpace, Polygon, SpaceKind};
use crate::error::{Error, Result};

/// Named spaces accepted wherever a descriptor is.
pub const PRESETS: [(&str, &str); 5] = [
    ("l1", "lp:q=1,dim=2"),
    ("linf", "lp:q=inf,dim=2"),
    ("l2", "lp:q=2,dim=2"),
    ("l3", "lp:q=3,dim=2"),
    (
        "hexagon",
        "poly2d:v=(1,0);(0.5,0.8660254037844386);(-0.5,0.8660254037844386);(-1,0);(-0.5,-0.8660254037844386);(0.5,-0.8660254037844386)",
    ),
];

fn parse_err(what: &'static str, input: &str) -> Error {
    Error::Parse {
        what,
        input: input.to_string(),
    }
}

fn parse_f64(what: &'static str, s: &str) -> Result<f64> {
    let s = s.trim();
    match s {
        "inf" | "infinity" | "Inf" => Ok(f64::INFINITY),
        _ => s.parse::<f64>().map_err(|_| parse_err(what, s)),
    }
}

fn parse_dim(s: &str) -> Result<usize> {
    s.trim().parse::<usize>().map_err(|_| parse_err("dimension", s))
}

fn parse_point(s: &str) -> Result<[f64; 2]> {
    let inner = s
        .trim()
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| parse_err("vertex", s))?;
    let mut parts = inner.split(',');
    let (Some(x), Some(y), None) = (parts.next(), parts.next(), parts.next()) else {
        return Err(parse_err("vertex", s));
    };
    Ok([parse_f64("vertex", x)?, parse_f64("vertex", y)?])
}

impl FromStr for NormedSpace {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((_, desc)) = PRESETS.iter().find(|(name, _)| *name == s) {
            return desc.parse();
        }
        let (kind, rest) = s.split_once(':').ok_or_else(|| parse_err("space", s))?;
        match kind {
            "poly2d" => {
                let list = rest
                    .strip_prefix("v=")
                    .ok_or_else(|| parse_err("space", s))?;
                let pts = list
                    .split(';')
                    .map(parse_point)
                    .collect::<Result<Vec<_>>>()?;
                Ok(NormedSpace::from_polygon(Polygon::new(&pts)?))
            }
            "lp" | "wlp" => {
                let (mut q, mut dim, mut w) = (None, None, None);
                for field in rest.split(',') {
                    let (key, value) = field.split_once('=').ok_or_else(|| parse_err("space", s))?;
                    match key.trim() {
                        "q" => q = Some(parse_f64("exponent", value)?),
                        "dim" => dim = Some(parse_dim(value)?),
                        "w" if kind == "wlp" => {
                            w = Some(
                                value
                                    .split(';')
                                    .map(|x| parse_f64("weight", x))
                                    .collect::<Result<Vec<_>>>()?,
                            )
                        }
                        _ => return Err(parse_err("space field", field)),
                    }
                }
                let q = q.ok_or_else(|| parse_err("space (missing q)", s))?;
                let dim = dim.ok_or_else(|| parse_err("space (missing dim)", s))?;
                if kind == "lp" {
                    return NormedSpace::lp(q, dim);
                }
                let w = w.ok_or_else(|| parse_err("space (missing w)", s))?;
                if w.len() != dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        found: w.len(),
                    });
                }
                NormedSpace::weighted_lp(q, w)
            }
            _ => Err(parse_err("space", s)),
        }
    }
}

impl fmt::Display for NormedSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            SpaceKind::Lp(e) => write!(f, "lp:q={e},dim={}", self.dim),
            SpaceKind::WeightedLp { exponent, weights } => {
                write!(f, "wlp:q={exponent},dim={},w=", self.dim)?;
                for (i, w) in weights.iter().enumerate() {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    write!(f, "{w}")?;
                }
                Ok(())
            }
            SpaceKind::Polyhedral2D(p) => {
                write!(f, "poly2d:v=")?;
                for (i, v) in p.vertices().iter().enumerate() {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    write!(f, "({},{})", v[0], v[1])?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_each_kind() {
        let s: NormedSpace = "lp:q=2,dim=3".parse().unwrap();
        assert_eq!(s, NormedSpace::l2(3).unwrap());
        let s: NormedSpace = "lp:q=inf,dim=2".parse().unwrap();
        assert_eq!(s, NormedSpace::linf(2).unwrap());
        let s: NormedSpace = "wlp:q=2,dim=2,w=1.0;2.0".parse().unwrap();
        assert_eq!(s, NormedSpace::weighted_lp(2.0, vec![1.0, 2.0]).unwrap());
        let s: NormedSpace = "poly2d:v=(1,0);(0,1);(-1,0);(0,-1)".parse().unwrap();
        assert_eq!(s.dim(), 2);
        assert!(s.is_polyhedral());
    }

    #[test]
    fn display_round_trips() {
        for (_, desc) in PRESETS {
            let s: NormedSpace = desc.parse().unwrap();
            let again: NormedSpace = s.to_string().parse().unwrap();
            assert_eq!(s, again);
        }
        let w = NormedSpace::weighted_lp(3.0, vec![0.5, 2.0, 1.0]).unwrap();
        assert_eq!(w.to_string().parse::<NormedSpace>().unwrap(), w);
    }

    #[test]
    fn presets_resolve() {
        let hex: NormedSpace = "hexagon".parse().unwrap();
        assert_eq!(hex.extreme_points().unwrap().len(), 6);
        assert_eq!("l1".parse::<NormedSpace>().unwrap(), NormedSpace::l1(2).unwrap());
    }

    #[test]
    fn rejects_malformed() {
        for bad in [
            "lp:q=2",
            "lp:dim=2",
            "lp:q=0.5,dim=2",
            "lp:q=2,dim=1",
            "wlp:q=2,dim=2,w=1",
            "wlp:q=2,dim=2,w=1;-1",
            "poly2d:v=(1,0);(0,1)",
            "poly2d:v=(1,0);(0,1);(-1,0);(0,-1",
            "sphere:r=1",
            "nonsense",
        ] {
            assert!(bad.parse::<NormedSpace>().is_err(), "{bad}");
        }
    }
}
