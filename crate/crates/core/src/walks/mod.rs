//! Exact walk counting.
//!
//! `W_{r,n}` is the number of nearest-neighbour walks of length `n` from the
//! origin to `r`. Four families of formulas cover the nine lattices:
//!
//! * bcc family (chain, square, bcc): products of binomials, one per axis;
//! * cubic family (cubic, hypercubic4): multinomial sums over the number of
//!   backward steps along each axis;
//! * honeycomb family (honeycomb, diamond): products of two multinomials,
//!   since forward and backward steps alternate;
//! * triangular family (triangular, fcc): the alternating binomial transform
//!   of the parent honeycomb/diamond counts at even lengths, from
//!   `6 H_tri = (3 H_hon)^2 - 3` and `12 H_fcc = (4 H_diam)^2 - 4`.
//!
//! The square lattice uses Cartesian coordinates; rotating by 45 degrees,
//! `(x, y) -> (x + y, x - y)`, maps it onto the two-dimensional bcc formula.

mod combinatorics;

pub use combinatorics::Combinatorics;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{LgfError, Result};
use crate::lattice::{Displacement, Family, LatticeSpec};
use combinatorics::for_each_composition;

/// Cartesian position of a 4D-grid site of the diamond/fcc scheme.
pub fn project_grid4(u: i64, v: i64, w: i64, s: i64) -> (i64, i64, i64) {
    (u + v - w - s, u - v + w - s, u - v - w + s)
}

/// Walk counts `W_0 ..= W_N` for one lattice and displacement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkTable {
    pub lattice: LatticeSpec,
    pub displacement: Displacement,
    pub counts: Vec<BigUint>,
}

impl WalkTable {
    /// Largest walk length in the table.
    pub fn order(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Repr<'a> {
            lattice: &'a str,
            displacement: &'a [i64],
            z: u32,
            #[serde(rename = "N")]
            order: usize,
            counts: Vec<String>,
        }
        serde_json::to_value(Repr {
            lattice: self.lattice.family.name(),
            displacement: self.displacement.coords(),
            z: self.lattice.z,
            order: self.order(),
            counts: self.counts.iter().map(|c| c.to_str_radix(10)).collect(),
        })
        .expect("walk table serializes")
    }
}

/// Walk counter with a shared factorial/binomial cache.
#[derive(Debug, Clone, Default)]
pub struct WalkCounter {
    comb: Combinatorics,
}

impl WalkCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn combinatorics(&self) -> &Combinatorics {
        &self.comb
    }

    fn warm_up(&mut self, family: Family, n: usize, r: &[i64]) {
        let reach: usize = r.iter().map(|c| c.unsigned_abs() as usize).max().unwrap_or(0);
        self.comb.ensure_factorials(2 * n + reach + 2);
        match family {
            Family::Cubic | Family::Hypercubic4 | Family::Honeycomb | Family::Diamond => {
                self.comb.ensure_pascal(n + reach + 1)
            }
            Family::Triangular | Family::Fcc if r.iter().any(|&c| c != 0) => self.comb.ensure_pascal(n + reach + 1),
            _ => {}
        }
    }

    /// Closed walks of length `n` on `family`.
    pub fn closed(&mut self, family: Family, n: usize) -> BigUint {
        self.warm_up(family, n, &[]);
        self.closed_warm(family, n)
    }

    fn closed_warm(&self, family: Family, n: usize) -> BigUint {
        let c = &self.comb;
        if n % 2 == 1 && family.is_bipartite() {
            return BigUint::zero();
        }
        let half = n / 2;
        match family {
            Family::Chain => c.binomial(n, half),
            Family::Square => c.binomial(n, half).pow(2),
            Family::Bcc => c.binomial(n, half).pow(3),
            Family::Honeycomb => honeycomb_closed(c, half),
            Family::Diamond => diamond_closed(c, half),
            Family::Cubic => c.binomial(n, half) * honeycomb_closed(c, half),
            Family::Hypercubic4 => c.binomial(n, half) * diamond_closed(c, half),
            Family::Triangular | Family::Fcc => {
                let parent: Vec<BigUint> = (0..=n)
                    .map(|j| match family {
                        Family::Triangular => honeycomb_closed(c, j),
                        _ => diamond_closed(c, j),
                    })
                    .collect();
                alternating_transform(n, transform_shift(family), &parent)
            }
        }
    }

    /// Walks of length `n` from the origin to `r`.
    pub fn to(&mut self, lattice: LatticeSpec, r: &Displacement, n: usize) -> Result<BigUint> {
        let family = lattice.family;
        let r = revalidate(family, r)?;
        self.warm_up(family, n, r.coords());
        if r.is_origin() {
            return Ok(self.closed_warm(family, n));
        }
        Ok(self.open_warm(family, r.coords(), n))
    }

    fn open_warm(&self, family: Family, x: &[i64], n: usize) -> BigUint {
        let c = &self.comb;
        match family {
            Family::Chain => c.binomial_half(n, x[0]),
            Family::Square => c.binomial_half(n, x[0] + x[1]) * c.binomial_half(n, x[0] - x[1]),
            Family::Bcc => x.iter().map(|&xi| c.binomial_half(n, xi)).product(),
            Family::Cubic | Family::Hypercubic4 => hypercubic_open(c, x, n),
            Family::Honeycomb | Family::Diamond => bipartite_open(c, x, n),
            Family::Triangular | Family::Fcc => {
                let parent: Vec<BigUint> = (0..=n).map(|j| bipartite_open(c, x, 2 * j)).collect();
                alternating_transform(n, transform_shift(family), &parent)
            }
        }
    }

    /// `W_0 ..= W_N`, sharing the cache and (for the triangular family) the
    /// parent counts across lengths.
    pub fn table(&mut self, lattice: LatticeSpec, r: &Displacement, order: usize) -> Result<WalkTable> {
        let family = lattice.family;
        let r = revalidate(family, r)?;
        self.warm_up(family, order, r.coords());
        let c = &self.comb;
        let counts = match family {
            Family::Triangular | Family::Fcc => {
                let parent: Vec<BigUint> = if r.is_origin() {
                    (0..=order)
                        .map(|j| match family {
                            Family::Triangular => honeycomb_closed(c, j),
                            _ => diamond_closed(c, j),
                        })
                        .collect()
                } else {
                    (0..=order).map(|j| bipartite_open(c, r.coords(), 2 * j)).collect()
                };
                let shift = transform_shift(family);
                (0..=order).map(|n| alternating_transform(n, shift, &parent)).collect()
            }
            _ if r.is_origin() => (0..=order).map(|n| self.closed_warm(family, n)).collect(),
            _ => (0..=order).map(|n| self.open_warm(family, r.coords(), n)).collect(),
        };
        Ok(WalkTable {
            lattice,
            displacement: r,
            counts,
        })
    }
}

/// Number of closed walks of length `n`.
pub fn count_closed_walks(lattice: LatticeSpec, n: usize) -> BigUint {
    WalkCounter::new().closed(lattice.family, n)
}

/// Number of walks of length `n` from the origin to `r`.
pub fn count_walks_to(lattice: LatticeSpec, r: &Displacement, n: usize) -> Result<BigUint> {
    WalkCounter::new().to(lattice, r, n)
}

pub fn build_walk_table(lattice: LatticeSpec, r: &Displacement, order: usize) -> Result<WalkTable> {
    WalkCounter::new().table(lattice, r, order)
}

fn revalidate(family: Family, r: &Displacement) -> Result<Displacement> {
    if r.convention() != family.convention() {
        return Err(LgfError::InvalidDisplacement {
            lattice: family.name(),
            coords: r.coords().to_vec(),
            reason: "coordinate convention does not match the lattice".into(),
        });
    }
    Displacement::new(family, r.coords().to_vec())
}

fn transform_shift(family: Family) -> u32 {
    match family {
        Family::Triangular => 3,
        Family::Fcc => 4,
        _ => unreachable!("only the triangular family uses the binomial transform"),
    }
}

/// `sum_j C(n, j) (-shift)^(n-j) parent[j]`.
fn alternating_transform(n: usize, shift: u32, parent: &[BigUint]) -> BigUint {
    let row = Combinatorics::binomial_row(n);
    let mut acc = BigInt::zero();
    let mut power = BigInt::one(); // shift^(n-j), walking j downward
    for j in (0..=n).rev() {
        let term = BigInt::from_biguint(Sign::Plus, &row[j] * &parent[j]) * &power;
        if (n - j).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
        power *= shift;
    }
    acc.to_biguint().expect("walk counts are non-negative by construction")
}

/// Closed honeycomb walks of length `2N`: `sum_j C(N,j)^2 C(2j,j)`.
fn honeycomb_closed(c: &Combinatorics, half: usize) -> BigUint {
    (0..=half)
        .map(|j| c.binomial(half, j).pow(2) * c.binomial(2 * j, j))
        .sum()
}

/// Closed diamond walks of length `2N`: `sum_j C(N,j)^2 C(2j,j) C(2N-2j,N-j)`.
fn diamond_closed(c: &Combinatorics, half: usize) -> BigUint {
    (0..=half)
        .map(|j| c.binomial(half, j).pow(2) * c.binomial(2 * j, j) * c.binomial(2 * (half - j), half - j))
        .sum()
}

/// Hypercubic walks to `x`: `sum n! / prod_i (m_i! (m_i + |x_i|)!)` over
/// backward-step counts `m` with `2 sum m_i + sum |x_i| = n`.
fn hypercubic_open(c: &Combinatorics, x: &[i64], n: usize) -> BigUint {
    let abs: Vec<usize> = x.iter().map(|v| v.unsigned_abs() as usize).collect();
    let travel: usize = abs.iter().sum();
    if travel > n || (n - travel) % 2 == 1 {
        return BigUint::zero();
    }
    let spare = (n - travel) / 2;
    let lower = vec![0; x.len()];
    let mut total = BigUint::zero();
    let mut steps = Vec::with_capacity(2 * x.len());
    for_each_composition(spare, &lower, |m| {
        steps.clear();
        for (mi, ai) in m.iter().zip(&abs) {
            steps.push(*mi);
            steps.push(mi + ai);
        }
        total += c.multinomial(&steps);
    });
    total
}

/// Honeycomb/diamond walks to `x`. Odd-numbered steps go along `+e_i`, even
/// ones along `-e_i`, so `floor(n/2)` backward steps are distributed as `m`
/// and `ceil(n/2)` forward steps as `m + x`.
fn bipartite_open(c: &Combinatorics, x: &[i64], n: usize) -> BigUint {
    let sum: i64 = x.iter().sum();
    if sum != (n % 2) as i64 {
        return BigUint::zero();
    }
    let backward = n / 2;
    let lower: Vec<usize> = x.iter().map(|&xi| (-xi).max(0) as usize).collect();
    let mut total = BigUint::zero();
    let mut forward = vec![0usize; x.len()];
    for_each_composition(backward, &lower, |m| {
        for ((f, mi), xi) in forward.iter_mut().zip(m).zip(x) {
            *f = (*mi as i64 + xi) as usize;
        }
        total += c.multinomial(m) * c.multinomial(&forward);
    });
    total
}
