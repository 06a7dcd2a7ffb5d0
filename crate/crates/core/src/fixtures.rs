//! Reference integer tables for `n = 0..=10`, one column per lattice in
//! [`Family::ALL`] order.

use crate::lattice::Family;

pub const FIXTURE_ORDER: usize = 10;

/// Closed-walk counts `W_n`.
pub const CLOSED_WALKS: [[u64; 11]; 9] = [
    [1, 0, 2, 0, 6, 0, 20, 0, 70, 0, 252],
    [1, 0, 4, 0, 36, 0, 400, 0, 4900, 0, 63504],
    [1, 0, 8, 0, 216, 0, 8000, 0, 343000, 0, 16003008],
    [1, 0, 3, 0, 15, 0, 93, 0, 639, 0, 4653],
    [1, 0, 4, 0, 28, 0, 256, 0, 2716, 0, 31504],
    [1, 0, 6, 0, 90, 0, 1860, 0, 44730, 0, 1172556],
    [1, 0, 8, 0, 168, 0, 5120, 0, 190120, 0, 7939008],
    [1, 0, 6, 12, 90, 360, 2040, 10080, 54810, 290640, 1588356],
    [1, 0, 12, 48, 540, 4320, 42240, 403200, 4038300, 40958400, 423550512],
];

/// Scaled local moments `z^n g_n`.
pub const SCALED_MOMENTS: [[i64; 11]; 9] = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, -8, 0, 32, 0, -512, 0, 4608, 0, -73728],
    [1, 0, -48, 0, 1728, 0, -79872, 0, 4058112, 0, -216956928],
    [1, 0, -3, 0, -15, 0, 141, 0, -1503, 0, 9117],
    [1, 0, -8, 0, -32, 0, 1024, 0, -12800, 0, 90112],
    [1, 0, -24, 0, 288, 0, -2688, 0, -32256, 0, 2820096],
    [1, 0, -48, 0, 1344, 0, -24576, 0, 218112, 0, -688128],
    [1, 0, -24, 48, 288, -2880, 3072, 64512, -400896, -245760, 12496896],
    [
        1,
        0,
        -120,
        192,
        11232,
        -69120,
        -887808,
        11870208,
        34721280,
        -1458585600,
        4612792320,
    ],
];

/// Nonzero `a_nk` for `n <= 6` as `(n, [(k, a_nk)])`.
pub const CHEB_COEFFS: [(usize, &[(usize, i64)]); 7] = [
    (0, &[(0, 1)]),
    (1, &[(1, 1)]),
    (2, &[(0, -1), (2, 2)]),
    (3, &[(1, -3), (3, 4)]),
    (4, &[(0, 1), (2, -8), (4, 8)]),
    (5, &[(1, 5), (3, -20), (5, 16)]),
    (6, &[(0, -1), (2, 18), (4, -48), (6, 32)]),
];

fn column(family: Family) -> usize {
    Family::ALL
        .iter()
        .position(|&f| f == family)
        .expect("every family has a column")
}

pub fn closed_walks(family: Family) -> &'static [u64; 11] {
    &CLOSED_WALKS[column(family)]
}

pub fn scaled_moments(family: Family) -> &'static [i64; 11] {
    &SCALED_MOMENTS[column(family)]
}
