//! Arithmetic in GF(p) for small primes.

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Least prime `p` with `p = 1 (mod n)` and `p > bound`.
pub fn dixon_prime(n: u64, bound: u64) -> u64 {
    let mut p = n + 1;
    loop {
        if p > bound && is_prime(p) {
            return p;
        }
        p += n;
    }
}

/// Least generator of the multiplicative group of GF(p).
pub fn primitive_root(p: u64) -> u64 {
    let m = p - 1;
    let factors: Vec<u64> = crate::group::prime_factors(m as usize).into_iter().map(|q| q as u64).collect();
    (2..p).find(|&g| factors.iter().all(|&q| pow_mod(g, m / q, p) != 1)).unwrap_or(1)
}

/// Basis (as vectors) of the nullspace of an `r x c` matrix over GF(p).
pub fn nullspace(m: &[Vec<u64>], cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut a: Vec<Vec<u64>> = m.iter().map(|r| r.iter().map(|x| x % p).collect()).collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(pr) = (row..a.len()).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(row, pr);
        let iv = inv_mod(a[row][col], p);
        for x in a[row].iter_mut() {
            *x = *x * iv % p;
        }
        for i in 0..a.len() {
            if i != row && a[i][col] != 0 {
                let f = a[i][col];
                for j in 0..cols {
                    a[i][j] = (a[i][j] + p - f * a[row][j] % p) % p;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == a.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; cols];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - a[r][f]) % p;
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_roots() {
        assert_eq!(dixon_prime(6, 4), 7);
        assert_eq!(dixon_prime(12, 6), 13);
        assert_eq!(dixon_prime(2, 2), 3);
        assert_eq!(primitive_root(7), 3);
        assert_eq!(primitive_root(13), 2);
    }

    #[test]
    fn nullspace_small() {
        let m = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let n = nullspace(&m, 3, 7);
        assert_eq!(n.len(), 2);
        for v in &n {
            assert_eq!((v[0] + 2 * v[1] + 3 * v[2]) % 7, 0);
        }
    }
}
