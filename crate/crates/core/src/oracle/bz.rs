use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use super::patch::steps;
use crate::error::{LgfError, Result};
use crate::lattice::{Displacement, Family};

/// `cos`/`sin` of `pi j / m` for `j < 2m`; with midpoint nodes
/// `k_i = 2 pi (i + 1/2) / m`, `k . v` is always such a multiple.
struct PhaseTable {
    m: usize,
    cos: Vec<f64>,
    sin: Vec<f64>,
}

impl PhaseTable {
    fn new(m: usize) -> Self {
        let (cos, sin) = (0..2 * m)
            .map(|j| (PI * j as f64 / m as f64).cos())
            .zip((0..2 * m).map(|j| (PI * j as f64 / m as f64).sin()))
            .unzip();
        PhaseTable { m, cos, sin }
    }

    fn slot(&self, idx: &[usize], v: &[i64]) -> usize {
        let m2 = 2 * self.m as i64;
        let raw: i64 = idx.iter().zip(v).map(|(&i, &c)| 2 * c * i as i64 + c).sum();
        raw.rem_euclid(m2) as usize
    }

    fn cos_at(&self, idx: &[usize], v: &[i64]) -> f64 {
        self.cos[self.slot(idx, v)]
    }

    fn exp_at(&self, idx: &[usize], v: &[i64]) -> Complex64 {
        let s = self.slot(idx, v);
        Complex64::new(self.cos[s], self.sin[s])
    }
}

/// Lattice coordinates on which the Bloch sum runs: the last coordinate is
/// dropped for the families labelled on a `(111)` slice.
fn reduce(family: Family, v: &[i64]) -> Vec<i64> {
    match family {
        Family::Honeycomb | Family::Diamond | Family::Triangular | Family::Fcc => v[..v.len() - 1].to_vec(),
        _ => v.to_vec(),
    }
}

fn complex_average<F: Fn(&[usize]) -> Complex64 + Sync>(dim: usize, m: usize, f: F) -> Complex64 {
    let total: Complex64 = (0..m)
        .into_par_iter()
        .map(|i0| {
            let mut idx = vec![0usize; dim];
            idx[0] = i0;
            let inner = m.pow(dim as u32 - 1);
            let mut acc = Complex64::new(0.0, 0.0);
            for flat in 0..inner {
                let mut rest = flat;
                for slot in idx.iter_mut().skip(1) {
                    *slot = rest % m;
                    rest /= m;
                }
                acc += f(&idx);
            }
            acc
        })
        .sum();
    total / (m.pow(dim as u32)) as f64
}

/// `G_r(w)` at complex `w` off the cut from a uniform `grid^d` Bloch sum.
/// Converges quickly when `w` is well away from the band.
pub fn green_via_bz(family: Family, r: &Displacement, w: Complex64, grid: usize) -> Result<Complex64> {
    if family == Family::Hypercubic4 {
        return Err(LgfError::UnsupportedLattice {
            lattice: family.name(),
            what: "the Brillouin-zone oracle",
        });
    }
    let table = PhaseTable::new(grid.max(1));
    let origin = vec![0; family.coord_len()];
    let z = family.coordination() as f64;
    match family {
        Family::Honeycomb | Family::Diamond => {
            let d = family.coord_len();
            let deltas: Vec<Vec<i64>> = (0..d)
                .map(|j| {
                    let mut v = vec![0; d];
                    v[j] += 1;
                    v[0] -= 1;
                    reduce(family, &v)
                })
                .collect();
            let on_b = r.coord_sum() == 1;
            let mut p = r.coords().to_vec();
            if on_b {
                p[0] -= 1;
            }
            let p = reduce(family, &p);
            let t = 1.0 / z;
            Ok(complex_average(d - 1, table.m, |idx| {
                // conj(sum_j e^{i k . delta_j})
                let gamma: Complex64 = deltas.iter().map(|dl| table.exp_at(idx, dl)).sum::<Complex64>().conj();
                let denom = w * w - t * t * gamma.norm_sqr();
                let num = if on_b {
                    Complex64::new(t * (table.exp_at(idx, &p) * gamma).re, 0.0)
                } else {
                    w * table.cos_at(idx, &p)
                };
                num / denom
            }))
        }
        _ => {
            let st: Vec<Vec<i64>> = steps(family, &origin).iter().map(|s| reduce(family, s)).collect();
            let p = reduce(family, r.coords());
            Ok(complex_average(p.len(), table.m, |idx| {
                let eps: f64 = st.iter().map(|s| table.cos_at(idx, s)).sum::<f64>() / z;
                table.cos_at(idx, &p) / (w - eps)
            }))
        }
    }
}

/// Lorentzian-broadened `g_r(omega) = -Im G_r(omega + i eta) / pi`.
///
/// Accuracy is `O(eta)` plus the grid error, which is small only when the
/// band-energy spacing between nodes is well below `eta`.
pub fn spectral_via_bz(family: Family, r: &Displacement, omega: f64, grid: usize, eta: f64) -> Result<f64> {
    Ok(-green_via_bz(family, r, Complex64::new(omega, eta), grid)?.im / PI)
}

/// `2 g(eta/2) - g(eta)`: cancels the linear-in-`eta` broadening bias.
pub fn spectral_via_bz_extrapolated(
    family: Family,
    r: &Displacement,
    omega: f64,
    grid: usize,
    eta: f64,
) -> Result<f64> {
    let coarse = spectral_via_bz(family, r, omega, grid, eta)?;
    let fine = spectral_via_bz(family, r, omega, grid, 0.5 * eta)?;
    Ok(2.0 * fine - coarse)
}
