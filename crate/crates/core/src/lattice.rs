//! Lattice families and site displacements.
//!
//! Coordinates follow the integer conventions used throughout the crate:
//!
//! * chain, square, cubic, hypercubic4: ordinary Cartesian grid; each step
//!   changes one coordinate by one.
//! * bcc: every step moves by `(±1, ±1, ±1)`, so all coordinates of a site
//!   share the same parity.
//! * honeycomb: sites of two (111) planes of the cubic grid, `x+y+z = 0`
//!   (A sublattice) or `x+y+z = 1` (B sublattice).
//! * triangular: the A sublattice of the honeycomb scheme, `x+y+z = 0`.
//! * diamond, fcc: the same construction one dimension up, on the 4D grid
//!   `(u,v,w,s)`; see [`crate::walks::project_grid4`] for Cartesian positions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{LgfError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Chain,
    Square,
    Bcc,
    Cubic,
    Hypercubic4,
    Honeycomb,
    Diamond,
    Triangular,
    Fcc,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Chain,
        Family::Square,
        Family::Bcc,
        Family::Honeycomb,
        Family::Diamond,
        Family::Cubic,
        Family::Hypercubic4,
        Family::Triangular,
        Family::Fcc,
    ];

    /// Coordination number.
    pub fn coordination(self) -> u32 {
        match self {
            Family::Chain => 2,
            Family::Square => 4,
            Family::Bcc => 8,
            Family::Honeycomb => 3,
            Family::Diamond => 4,
            Family::Cubic => 6,
            Family::Hypercubic4 => 8,
            Family::Triangular => 6,
            Family::Fcc => 12,
        }
    }

    /// Physical dimension.
    pub fn dim(self) -> usize {
        match self {
            Family::Chain => 1,
            Family::Square | Family::Honeycomb | Family::Triangular => 2,
            Family::Bcc | Family::Cubic | Family::Diamond | Family::Fcc => 3,
            Family::Hypercubic4 => 4,
        }
    }

    /// Number of integer coordinates used to label a site.
    pub fn coord_len(self) -> usize {
        match self {
            Family::Chain => 1,
            Family::Square => 2,
            Family::Bcc | Family::Cubic | Family::Honeycomb | Family::Triangular => 3,
            Family::Hypercubic4 | Family::Diamond | Family::Fcc => 4,
        }
    }

    pub fn convention(self) -> Convention {
        match self {
            Family::Diamond | Family::Fcc => Convention::Grid4,
            _ => Convention::Cartesian,
        }
    }

    pub fn is_bipartite(self) -> bool {
        !matches!(self, Family::Triangular | Family::Fcc)
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Chain => "chain",
            Family::Square => "square",
            Family::Bcc => "bcc",
            Family::Cubic => "cubic",
            Family::Hypercubic4 => "hypercubic4",
            Family::Honeycomb => "honeycomb",
            Family::Diamond => "diamond",
            Family::Triangular => "triangular",
            Family::Fcc => "fcc",
        }
    }

    pub fn spec(self) -> LatticeSpec {
        LatticeSpec {
            family: self,
            z: self.coordination(),
            dim: self.dim(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = LgfError;

    fn from_str(s: &str) -> Result<Self> {
        let family = match s.trim().to_ascii_lowercase().as_str() {
            "chain" | "1d" => Family::Chain,
            "square" | "sq" => Family::Square,
            "bcc" => Family::Bcc,
            "cubic" | "sc" => Family::Cubic,
            "hypercubic4" | "hypercubic" | "hcub" => Family::Hypercubic4,
            "honeycomb" | "hon" => Family::Honeycomb,
            "diamond" | "diam" => Family::Diamond,
            "triangular" | "tri" => Family::Triangular,
            "fcc" => Family::Fcc,
            other => return Err(LgfError::UnknownLattice(other.to_string())),
        };
        Ok(family)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticeSpec {
    pub family: Family,
    pub z: u32,
    pub dim: usize,
}

impl LatticeSpec {
    pub fn new(family: Family) -> Self {
        family.spec()
    }
}

impl From<Family> for LatticeSpec {
    fn from(family: Family) -> Self {
        family.spec()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    Cartesian,
    Grid4,
}

/// Offset of the end site from the start site, in the family's integer
/// coordinates. Construction validates the sublattice constraints.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Displacement {
    coords: Vec<i64>,
    convention: Convention,
}

impl Displacement {
    pub fn origin(family: Family) -> Self {
        Displacement {
            coords: vec![0; family.coord_len()],
            convention: family.convention(),
        }
    }

    pub fn new(family: Family, coords: impl Into<Vec<i64>>) -> Result<Self> {
        let coords = coords.into();
        validate(family, &coords)?;
        Ok(Displacement {
            coords,
            convention: family.convention(),
        })
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn is_origin(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn coord_sum(&self) -> i64 {
        self.coords.iter().sum()
    }
}

impl fmt::Display for Displacement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn invalid(family: Family, coords: &[i64], reason: impl Into<String>) -> LgfError {
    LgfError::InvalidDisplacement {
        lattice: family.name(),
        coords: coords.to_vec(),
        reason: reason.into(),
    }
}

fn validate(family: Family, coords: &[i64]) -> Result<()> {
    if coords.len() != family.coord_len() {
        return Err(invalid(
            family,
            coords,
            format!("expected {} coordinates", family.coord_len()),
        ));
    }
    let sum: i64 = coords.iter().sum();
    match family {
        Family::Bcc => {
            let p = coords[0].rem_euclid(2);
            if coords.iter().any(|c| c.rem_euclid(2) != p) {
                return Err(invalid(family, coords, "bcc coordinates must share parity"));
            }
        }
        Family::Honeycomb | Family::Diamond => {
            if sum != 0 && sum != 1 {
                return Err(invalid(family, coords, "coordinate sum must be 0 or 1"));
            }
        }
        Family::Triangular | Family::Fcc => {
            if sum != 0 {
                return Err(invalid(family, coords, "coordinate sum must be 0"));
            }
        }
        Family::Chain | Family::Square | Family::Cubic | Family::Hypercubic4 => {}
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coordination_and_dimension() {
        let expected = [
            (Family::Chain, 2, 1),
            (Family::Square, 4, 2),
            (Family::Bcc, 8, 3),
            (Family::Honeycomb, 3, 2),
            (Family::Diamond, 4, 3),
            (Family::Cubic, 6, 3),
            (Family::Hypercubic4, 8, 4),
            (Family::Triangular, 6, 2),
            (Family::Fcc, 12, 3),
        ];
        for (family, z, dim) in expected {
            let spec = family.spec();
            assert_eq!(spec.z, z, "{family}");
            assert_eq!(spec.dim, dim, "{family}");
        }
    }

    #[test]
    fn parses_names() {
        for family in Family::ALL {
            assert_eq!(family.name().parse::<Family>().unwrap(), family);
        }
        assert_eq!("hcub".parse::<Family>().unwrap(), Family::Hypercubic4);
        assert!("kagome".parse::<Family>().is_err());
    }

    #[test]
    fn sublattice_constraints() {
        assert!(Displacement::new(Family::Honeycomb, vec![1, 0, 0]).is_ok());
        assert!(Displacement::new(Family::Honeycomb, vec![1, 1, 0]).is_err());
        assert!(Displacement::new(Family::Triangular, vec![1, 0, 0]).is_err());
        assert!(Displacement::new(Family::Triangular, vec![1, -1, 0]).is_ok());
        assert!(Displacement::new(Family::Diamond, vec![0, 0, 0, 1]).is_ok());
        assert!(Displacement::new(Family::Fcc, vec![0, 0, 0, 1]).is_err());
        assert!(Displacement::new(Family::Bcc, vec![2, 1, 0]).is_err());
        assert!(Displacement::new(Family::Bcc, vec![1, -1, 3]).is_ok());
        assert!(Displacement::new(Family::Square, vec![1]).is_err());
    }
}
