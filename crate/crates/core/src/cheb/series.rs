//! Backward-recurrence summation of Chebyshev series.

/// `sum_n c[n] T_n(x)`.
pub fn eval_t_series(c: &[f64], x: f64) -> f64 {
    match c.len() {
        0 => return 0.0,
        1 => return c[0],
        _ => {}
    }
    let two_x = 2.0 * x;
    let (mut b1, mut b2) = (0.0, 0.0);
    for &ck in c[1..].iter().rev() {
        let b0 = ck + two_x * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    c[0] + x * b1 - b2
}

/// `sum_n c[n] U_{n-1}(x)`, with `U_{-1} = 0` so `c[0]` never contributes.
pub fn eval_u_series(c: &[f64], x: f64) -> f64 {
    if c.len() < 2 {
        return 0.0;
    }
    let two_x = 2.0 * x;
    let (mut b1, mut b2) = (0.0, 0.0);
    for &ck in c[1..].iter().rev() {
        let b0 = ck + two_x * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    b1
}

/// Both sums in a single pass; the two recurrences share `b_k` for `k >= 1`.
pub fn t_and_u_series(c: &[f64], x: f64) -> (f64, f64) {
    if c.is_empty() {
        return (0.0, 0.0);
    }
    let two_x = 2.0 * x;
    let (mut b1, mut b2) = (0.0, 0.0);
    for &ck in c[1..].iter().rev() {
        let b0 = ck + two_x * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    (c[0] + x * b1 - b2, b1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_values() {
        assert_eq!(eval_t_series(&[0.0, 1.0], 0.37), 0.37);
        assert_eq!(eval_t_series(&[1.0, 0.0, 0.0, 0.0], -0.8), 1.0);
        assert!((eval_t_series(&[0.0, 0.0, 1.0], 0.5) + 0.5).abs() < 1e-15);
        assert_eq!(eval_u_series(&[5.0], 0.3), 0.0);
        // U_1(x) = 2x
        assert!((eval_u_series(&[0.0, 0.0, 1.0], 0.3) - 0.6).abs() < 1e-15);
    }

    proptest! {
        #[test]
        fn matches_trigonometric_definition(
            c in proptest::collection::vec(-1.0f64..1.0, 1..60),
            theta in 0.01f64..3.13,
        ) {
            let x = theta.cos();
            let direct_t: f64 = c.iter().enumerate().map(|(n, cn)| cn * (n as f64 * theta).cos()).sum();
            let direct_u: f64 = c.iter().enumerate().map(|(n, cn)| cn * (n as f64 * theta).sin() / theta.sin()).sum();
            let (t, u) = t_and_u_series(&c, x);
            let scale = c.iter().map(|v| v.abs()).sum::<f64>().max(1.0) * c.len() as f64;
            prop_assert!((t - direct_t).abs() < 1e-13 * scale);
            prop_assert!((eval_t_series(&c, x) - t).abs() == 0.0);
            prop_assert!((u - direct_u).abs() < 1e-12 * scale / theta.sin());
            prop_assert!((eval_u_series(&c, x) - u).abs() == 0.0);
        }
    }
}
