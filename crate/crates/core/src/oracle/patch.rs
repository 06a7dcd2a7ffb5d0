use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{LgfError, Result};
use crate::lattice::{Displacement, Family, LatticeSpec};

fn unit(len: usize, i: usize, sign: i64) -> Vec<i64> {
    let mut v = vec![0; len];
    v[i] = sign;
    v
}

/// Nearest-neighbour steps out of `site` in the family's coordinates.
pub fn steps(family: Family, site: &[i64]) -> Vec<Vec<i64>> {
    let d = family.coord_len();
    match family {
        Family::Chain | Family::Square | Family::Cubic | Family::Hypercubic4 => {
            (0..d).flat_map(|i| [unit(d, i, 1), unit(d, i, -1)]).collect()
        }
        Family::Bcc => (0..8)
            .map(|m: i64| (0..3).map(|b| if m >> b & 1 == 1 { -1 } else { 1 }).collect())
            .collect(),
        Family::Honeycomb | Family::Diamond => {
            let sign = if site.iter().sum::<i64>() == 0 { 1 } else { -1 };
            (0..d).map(|i| unit(d, i, sign)).collect()
        }
        Family::Triangular | Family::Fcc => {
            let mut out = Vec::new();
            for a in 0..d {
                for b in 0..d {
                    if a != b {
                        let mut v = vec![0; d];
                        v[a] = 1;
                        v[b] = -1;
                        out.push(v);
                    }
                }
            }
            out
        }
    }
}

/// Every site within `radius` steps of the origin, with neighbour lists
/// restricted to the patch.
#[derive(Debug, Clone)]
pub struct FinitePatch {
    pub lattice: LatticeSpec,
    pub radius: usize,
    pub sites: Vec<Vec<i64>>,
    /// Step distance from the origin.
    pub depth: Vec<usize>,
    pub adjacency: Vec<Vec<usize>>,
    index: HashMap<Vec<i64>, usize>,
}

impl FinitePatch {
    pub fn new(family: Family, radius: usize) -> Self {
        let origin = vec![0; family.coord_len()];
        let mut sites = vec![origin.clone()];
        let mut depth = vec![0];
        let mut index = HashMap::from([(origin, 0usize)]);
        let mut frontier = vec![0usize];
        for level in 1..=radius {
            let mut next = Vec::new();
            for &i in &frontier {
                let site = sites[i].clone();
                for step in steps(family, &site) {
                    let nb: Vec<i64> = site.iter().zip(&step).map(|(a, b)| a + b).collect();
                    if !index.contains_key(&nb) {
                        index.insert(nb.clone(), sites.len());
                        next.push(sites.len());
                        sites.push(nb);
                        depth.push(level);
                    }
                }
            }
            frontier = next;
        }
        let adjacency = sites
            .iter()
            .map(|site| {
                steps(family, site)
                    .iter()
                    .filter_map(|step| {
                        let nb: Vec<i64> = site.iter().zip(step).map(|(a, b)| a + b).collect();
                        index.get(&nb).copied()
                    })
                    .collect()
            })
            .collect();
        FinitePatch {
            lattice: family.spec(),
            radius,
            sites,
            depth,
            adjacency,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.sites.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sites.is_empty()
    }

    pub fn index_of(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    /// Sites at most `n` steps from the origin.
    pub fn reachable(&self, n: usize) -> impl Iterator<Item = &[i64]> {
        self.sites
            .iter()
            .zip(&self.depth)
            .filter(move |(_, &d)| d <= n)
            .map(|(s, _)| s.as_slice())
    }

    /// `A^n e_0`: walk counts of length `n` from the origin to every site.
    pub fn walk_vector(&self, n: usize) -> Result<Vec<BigUint>> {
        if n > self.radius {
            return Err(LgfError::PatchTooSmall { radius: self.radius, n });
        }
        let mut v = vec![BigUint::zero(); self.len()];
        v[0] = BigUint::from(1u32);
        for _ in 0..n {
            let mut next = vec![BigUint::zero(); self.len()];
            for (i, nbrs) in self.adjacency.iter().enumerate() {
                if v[i].is_zero() {
                    continue;
                }
                for &j in nbrs {
                    next[j] += &v[i];
                }
            }
            v = next;
        }
        Ok(v)
    }
}

/// Walks of length `n` from the origin to `r`, by repeated adjacency
/// application on `patch`.
pub fn walks_via_adjacency(patch: &FinitePatch, r: &Displacement, n: usize) -> Result<BigUint> {
    let v = patch.walk_vector(n)?;
    Ok(patch.index_of(r.coords()).map_or_else(BigUint::zero, |i| v[i].clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interior_degree_is_z() {
        for family in Family::ALL {
            let patch = FinitePatch::new(family, 3);
            let z = family.coordination() as usize;
            for (i, &d) in patch.depth.iter().enumerate() {
                if d < 3 {
                    assert_eq!(patch.adjacency[i].len(), z, "{family}");
                }
            }
        }
    }

    #[test]
    fn spec_examples() {
        let sq = FinitePatch::new(Family::Square, 7);
        let origin = Displacement::origin(Family::Square);
        assert_eq!(walks_via_adjacency(&sq, &origin, 6).unwrap(), BigUint::from(400u32));
        let tri = FinitePatch::new(Family::Triangular, 4);
        let origin = Displacement::origin(Family::Triangular);
        assert_eq!(walks_via_adjacency(&tri, &origin, 3).unwrap(), BigUint::from(12u32));
        for family in Family::ALL {
            let p = FinitePatch::new(family, 2);
            let o = Displacement::origin(family);
            assert!(walks_via_adjacency(&p, &o, 1).unwrap().is_zero());
        }
        assert!(matches!(
            walks_via_adjacency(&sq, &Displacement::origin(Family::Square), 8),
            Err(LgfError::PatchTooSmall { radius: 7, n: 8 })
        ));
    }

    #[test]
    fn honeycomb_neighbour() {
        let p = FinitePatch::new(Family::Honeycomb, 2);
        let r = Displacement::new(Family::Honeycomb, vec![1, 0, 0]).unwrap();
        assert_eq!(walks_via_adjacency(&p, &r, 1).unwrap(), BigUint::from(1u32));
    }
}
