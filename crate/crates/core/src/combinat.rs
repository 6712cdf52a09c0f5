//! Memoized factorials and double factorials.
//!
//! Tables are process-wide and grow on demand under a read-write lock, so
//! concurrent lookups from parallel scans never block each other once the
//! entry exists.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

struct Table {
    values: RwLock<Vec<BigInt>>,
    step: fn(&[BigInt], usize) -> BigInt,
}

impl Table {
    fn get(&self, n: usize) -> BigInt {
        if let Some(v) = self.values.read().unwrap().get(n) {
            return v.clone();
        }
        let mut values = self.values.write().unwrap();
        while values.len() <= n {
            let k = values.len();
            let next = (self.step)(&values, k);
            values.push(next);
        }
        values[n].clone()
    }
}

fn factorials() -> &'static Table {
    static T: OnceLock<Table> = OnceLock::new();
    T.get_or_init(|| Table {
        values: RwLock::new(vec![BigInt::one()]),
        step: |v, k| &v[k - 1] * BigInt::from(k),
    })
}

// Index k stores (k-1)!!, so index 0 holds (-1)!! = 1.
fn double_factorials() -> &'static Table {
    static T: OnceLock<Table> = OnceLock::new();
    T.get_or_init(|| Table {
        values: RwLock::new(vec![BigInt::one(), BigInt::one()]),
        step: |v, k| &v[k - 2] * BigInt::from(k - 1),
    })
}

/// `n!`
pub fn factorial(n: usize) -> BigInt {
    factorials().get(n)
}

/// `n!!` for `n >= -1`, with `(-1)!! = 0!! = 1`.
pub fn double_factorial(n: i64) -> BigInt {
    assert!(n >= -1, "double factorial of {n}");
    double_factorials().get((n + 1) as usize)
}
