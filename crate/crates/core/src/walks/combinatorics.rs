use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Memoized factorials and binomial rows.
///
/// Both tables only ever grow. Counting routines call the `ensure_*` methods
/// once up front and then read through `&self`.
#[derive(Debug, Clone)]
pub struct Combinatorics {
    factorials: Vec<BigUint>,
    pascal: Vec<Vec<BigUint>>,
}

impl Default for Combinatorics {
    fn default() -> Self {
        Self::new()
    }
}

impl Combinatorics {
    pub fn new() -> Self {
        Combinatorics {
            factorials: vec![BigUint::one()],
            pascal: vec![vec![BigUint::one()]],
        }
    }

    pub fn ensure_factorials(&mut self, n: usize) {
        while self.factorials.len() <= n {
            let k = self.factorials.len();
            let next = &self.factorials[k - 1] * BigUint::from(k);
            self.factorials.push(next);
        }
    }

    /// Pascal rows `0..=n`; used by the multinomial sums where every term is a
    /// product of small binomials.
    pub fn ensure_pascal(&mut self, n: usize) {
        while self.pascal.len() <= n {
            let prev = self.pascal.last().expect("row 0 always present");
            let mut row = Vec::with_capacity(prev.len() + 1);
            row.push(BigUint::one());
            for k in 1..prev.len() {
                row.push(&prev[k - 1] + &prev[k]);
            }
            row.push(BigUint::one());
            self.pascal.push(row);
        }
    }

    pub fn factorial_capacity(&self) -> usize {
        self.factorials.len() - 1
    }

    pub fn factorial(&self, n: usize) -> &BigUint {
        &self.factorials[n]
    }

    /// `C(n, k)`, zero outside `0 <= k <= n`.
    ///
    /// Panics if neither table has been warmed up to `n`.
    pub fn binomial(&self, n: usize, k: usize) -> BigUint {
        if k > n {
            return BigUint::zero();
        }
        if let Some(row) = self.pascal.get(n) {
            return row[k].clone();
        }
        assert!(n < self.factorials.len(), "combinatorics cache not warmed up to {n}");
        &self.factorials[n] / (&self.factorials[k] * &self.factorials[n - k])
    }

    /// `C(n, (n + x) / 2)`: the number of ±1 step sequences of length `n` with
    /// net displacement `x`.
    pub fn binomial_half(&self, n: usize, x: i64) -> BigUint {
        let shifted = n as i64 + x;
        if x.unsigned_abs() as usize > n || shifted.rem_euclid(2) != 0 {
            return BigUint::zero();
        }
        self.binomial(n, (shifted / 2) as usize)
    }

    /// `total! / (parts[0]! parts[1]! ...)` where the parts sum to `total`.
    pub fn multinomial(&self, parts: &[usize]) -> BigUint {
        let mut remaining: usize = parts.iter().sum();
        let mut acc = BigUint::one();
        for &p in parts.iter().take(parts.len().saturating_sub(1)) {
            acc *= self.binomial(remaining, p);
            remaining -= p;
        }
        acc
    }

    /// Row `n` of Pascal's triangle computed multiplicatively, without
    /// touching the caches.
    pub fn binomial_row(n: usize) -> Vec<BigUint> {
        let mut row = Vec::with_capacity(n + 1);
        let mut c = BigUint::one();
        row.push(c.clone());
        for j in 0..n {
            c = c * BigUint::from(n - j) / BigUint::from(j + 1);
            row.push(c.clone());
        }
        row
    }
}

/// Visit every composition `m` of `total` into `lower.len()` parts with
/// `m[i] >= lower[i]`, in lexicographic order.
pub(crate) fn for_each_composition(total: usize, lower: &[usize], mut visit: impl FnMut(&[usize])) {
    let floor: usize = lower.iter().sum();
    if floor > total || lower.is_empty() {
        return;
    }
    let mut parts = lower.to_vec();
    recurse(0, total - floor, lower, &mut parts, &mut visit);
}

fn recurse(idx: usize, spare: usize, lower: &[usize], parts: &mut [usize], visit: &mut impl FnMut(&[usize])) {
    if idx + 1 == parts.len() {
        parts[idx] = lower[idx] + spare;
        visit(parts);
        return;
    }
    for extra in 0..=spare {
        parts[idx] = lower[idx] + extra;
        recurse(idx + 1, spare - extra, lower, parts, visit);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pascal_matches_factorials() {
        let mut c = Combinatorics::new();
        c.ensure_factorials(30);
        let by_factorial: Vec<BigUint> = (0..=30).map(|k| c.binomial(30, k)).collect();
        c.ensure_pascal(30);
        let by_pascal: Vec<BigUint> = (0..=30).map(|k| c.binomial(30, k)).collect();
        assert_eq!(by_factorial, by_pascal);
        assert_eq!(by_pascal, Combinatorics::binomial_row(30));
        assert_eq!(c.binomial(4, 2), BigUint::from(6u32));
        assert_eq!(c.binomial(4, 5), BigUint::zero());
    }

    #[test]
    fn multinomial_small() {
        let mut c = Combinatorics::new();
        c.ensure_pascal(6);
        assert_eq!(c.multinomial(&[1, 2, 3]), BigUint::from(60u32));
        assert_eq!(c.multinomial(&[0, 0]), BigUint::one());
    }

    #[test]
    fn compositions_are_lexicographic() {
        let mut seen = Vec::new();
        for_each_composition(2, &[0, 0, 0], |m| seen.push(m.to_vec()));
        assert_eq!(
            seen,
            vec![
                vec![0, 0, 2],
                vec![0, 1, 1],
                vec![0, 2, 0],
                vec![1, 0, 1],
                vec![1, 1, 0],
                vec![2, 0, 0]
            ]
        );
        let mut count = 0;
        for_each_composition(1, &[1, 1], |_| count += 1);
        assert_eq!(count, 0);
    }
}
