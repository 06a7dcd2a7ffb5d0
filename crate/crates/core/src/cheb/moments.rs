use num_bigint::{BigInt, BigUint};
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::coeffs::ChebCoeffTable;
use crate::error::{LgfError, Result};
use crate::lattice::{Displacement, Family, LatticeSpec};
use crate::walks::{WalkCounter, WalkTable};

/// Chebyshev moments `g_n = <0|T_n(H)|r>` of one lattice and displacement.
///
/// The integers `z^n g_n` are authoritative; `floats` and `power` are each
/// the result of a single correctly rounded division.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentTable {
    pub lattice: LatticeSpec,
    pub displacement: Displacement,
    /// `z^n g_n`.
    pub scaled: Vec<BigInt>,
    /// `g_n`.
    pub floats: Vec<f64>,
    /// Power moments `<0|H^n|r> = W_n / z^n`.
    pub power: Vec<f64>,
}

impl MomentTable {
    /// Walk counts, coefficient table and conversion in one go.
    pub fn compute(family: Family, r: &Displacement, order: usize) -> Result<Self> {
        let walks = WalkCounter::new().table(family.spec(), r, order)?;
        let coeffs = ChebCoeffTable::build(order);
        moments_from_walks(&walks, &coeffs)
    }

    pub fn local(family: Family, order: usize) -> Self {
        Self::compute(family, &Displacement::origin(family), order).expect("the origin is a valid displacement")
    }

    pub fn order(&self) -> usize {
        self.floats.len() - 1
    }

    /// The first `order + 1` moments.
    pub fn truncated(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(LgfError::InsufficientOrder {
                have: self.order(),
                need: order,
            });
        }
        Ok(MomentTable {
            lattice: self.lattice,
            displacement: self.displacement.clone(),
            scaled: self.scaled[..=order].to_vec(),
            floats: self.floats[..=order].to_vec(),
            power: self.power[..=order].to_vec(),
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Repr<'a> {
            lattice: &'a str,
            displacement: &'a [i64],
            z: u32,
            #[serde(rename = "N")]
            order: usize,
            scaled: Vec<String>,
            floats: &'a [f64],
        }
        serde_json::to_value(Repr {
            lattice: self.lattice.family.name(),
            displacement: self.displacement.coords(),
            z: self.lattice.z,
            order: self.order(),
            scaled: self.scaled.iter().map(|c| c.to_str_radix(10)).collect(),
            floats: &self.floats,
        })
        .expect("moment table serializes")
    }
}

/// `z^n g_n = sum_k a_{nk} z^{n-k} W_k`, in integers throughout.
pub fn moments_from_walks(walks: &WalkTable, coeffs: &ChebCoeffTable) -> Result<MomentTable> {
    let order = walks.order();
    if coeffs.order() < order {
        return Err(LgfError::InsufficientOrder {
            have: coeffs.order(),
            need: order,
        });
    }
    let z = BigInt::from(walks.lattice.z);
    let z2 = &z * &z;
    let counts: Vec<BigInt> = walks.counts.iter().cloned().map(BigInt::from).collect();

    let scaled: Vec<BigInt> = (0..=order)
        .into_par_iter()
        .map(|n| {
            // Horner in z^2 over k = n mod 2, n mod 2 + 2, ..., n
            let mut acc = BigInt::zero();
            for (k, a) in coeffs.row(n) {
                acc *= &z2;
                if !counts[k].is_zero() {
                    acc += a * &counts[k];
                }
            }
            acc
        })
        .collect();

    let mut powers = Vec::with_capacity(order + 1);
    let mut p = BigInt::from(1);
    for _ in 0..=order {
        powers.push(p.clone());
        p *= &z;
    }
    let floats = scaled
        .par_iter()
        .zip(powers.par_iter())
        .map(|(s, zn)| ratio_to_f64(s, zn))
        .collect();
    let power = counts
        .par_iter()
        .zip(powers.par_iter())
        .map(|(w, zn)| ratio_to_f64(w, zn))
        .collect();

    Ok(MomentTable {
        lattice: walks.lattice,
        displacement: walks.displacement.clone(),
        scaled,
        floats,
        power,
    })
}

/// Correctly rounded `num / den`.
pub(crate) fn ratio_to_f64(num: &BigInt, den: &BigInt) -> f64 {
    Ratio::new_raw(num.clone(), den.clone()).to_f64().expect("finite ratio")
}

/// Power moments recovered from Chebyshev moments via
/// `x^k = sum_n b_{kn} T_n(x)`, iterating `x T_n = (T_{n+1} + T_{n-1}) / 2`.
///
/// Exact version: `2^{k-1} W_k = sum_n' C(k, (k-n)/2) z^{k-n} (z^n g_n)` with
/// the `n = 0` term halved.
pub fn walks_from_moments(scaled: &[BigInt], z: u32) -> Vec<BigUint> {
    let order = scaled.len().saturating_sub(1);
    let z = BigInt::from(z);
    (0..=order)
        .map(|k| {
            if k == 0 {
                return scaled[0].to_biguint().expect("g_0 >= 0");
            }
            let row = crate::walks::Combinatorics::binomial_row(k);
            let mut acc = BigInt::zero();
            // twice the target so the half-weighted n = 0 term stays integral
            for n in (k % 2..=k).step_by(2) {
                let b = BigInt::from(row[(k - n) / 2].clone());
                let weight = if n == 0 { b } else { b * 2 };
                acc += weight * z.pow((k - n) as u32) * &scaled[n];
            }
            let denom = BigInt::from(1) << k;
            let (q, r) = num_integer::Integer::div_rem(&acc, &denom);
            debug_assert!(r.is_zero(), "inverse relation must be exact");
            q.to_biguint().expect("walk counts are non-negative")
        })
        .collect()
}

/// Float version of the inverse relation: `mu_k = sum_n b_{kn} g_n`.
pub fn power_moments_from_chebyshev(g: &[f64]) -> Vec<f64> {
    let order = g.len().saturating_sub(1);
    let mut b = vec![0.0; order + 2];
    b[0] = 1.0;
    let mut mu = Vec::with_capacity(order + 1);
    for k in 0..=order {
        mu.push(b.iter().zip(g).map(|(bi, gi)| bi * gi).sum());
        let mut next = vec![0.0; order + 2];
        for (n, &bn) in b.iter().enumerate().take(k + 1) {
            if bn == 0.0 {
                continue;
            }
            if n == 0 {
                next[1] += bn;
            } else {
                next[n - 1] += 0.5 * bn;
                if n < order + 1 {
                    next[n + 1] += 0.5 * bn;
                }
            }
        }
        b = next;
    }
    mu
}
