use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

/// Integer coefficients `a_{nk}` with `T_n(x) = sum_k a_{nk} x^k`.
///
/// Only entries with `n - k` even are stored; row `n` holds
/// `k = n mod 2, n mod 2 + 2, ..., n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChebCoeffTable {
    rows: Vec<Vec<BigInt>>,
}

impl ChebCoeffTable {
    /// Fill rows `0..=order` with `a_{nk} = 2 a_{n-1,k-1} - a_{n-2,k}`.
    pub fn build(order: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(order + 1);
        rows.push(vec![BigInt::from(1)]);
        if order >= 1 {
            rows.push(vec![BigInt::from(1)]);
        }
        for n in 2..=order {
            let prev = &rows[n - 1];
            let prev2 = &rows[n - 2];
            let len = n / 2 + 1;
            let mut row = Vec::with_capacity(len);
            for i in 0..len {
                let k = n % 2 + 2 * i;
                let mut a = BigInt::zero();
                if k >= 1 {
                    a += &prev[(k - 1 - (n - 1) % 2) / 2] * 2;
                }
                if k <= n - 2 {
                    a -= &prev2[(k - n % 2) / 2];
                }
                row.push(a);
            }
            rows.push(row);
        }
        ChebCoeffTable { rows }
    }

    pub fn order(&self) -> usize {
        self.rows.len() - 1
    }

    /// `a_{nk}`; zero when `n - k` is odd or `k > n`.
    pub fn get(&self, n: usize, k: usize) -> BigInt {
        if k > n || (n - k) % 2 == 1 {
            return BigInt::zero();
        }
        self.rows[n][(k - n % 2) / 2].clone()
    }

    /// Nonzero-parity entries of row `n` as `(k, a_{nk})`, ascending in `k`.
    pub fn row(&self, n: usize) -> impl Iterator<Item = (usize, &BigInt)> {
        self.rows[n].iter().enumerate().map(move |(i, a)| (n % 2 + 2 * i, a))
    }

    /// `sum_k a_{nk} x^k` evaluated exactly at the binary value of `x`,
    /// then rounded once.
    pub fn eval_exact(&self, n: usize, x: f64) -> f64 {
        let x = BigRational::from_float(x).expect("finite argument");
        let x2 = &x * &x;
        let mut acc = BigRational::zero();
        for a in self.rows[n].iter().rev() {
            acc = acc * &x2 + BigRational::from_integer(a.clone());
        }
        if n % 2 == 1 {
            acc *= x;
        }
        acc.to_f64().expect("finite value")
    }
}
