//! Cyclotomic integers `Z[zeta_n]` in the power basis `1, z, ..., z^(phi(n)-1)`.

use crate::int::{int, Int};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

fn phi_cache() -> &'static RwLock<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Coefficients (lowest degree first) of the `n`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<i64>> {
    assert!(n >= 1);
    if let Some(p) = phi_cache().read().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by the product of Phi_d for proper divisors d
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let p = cyclotomic_polynomial(d);
            num = exact_div(&num, &p);
        }
    }
    let p = Arc::new(num);
    phi_cache().write().unwrap().insert(n, p.clone());
    p
}

fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    let qd = r.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = r[k + dd];
        q[k] = c;
        for (j, &x) in den.iter().enumerate() {
            r[k + j] -= c * x;
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

/// Euler's totient.
pub fn euler_phi(n: u32) -> u32 {
    (cyclotomic_polynomial(n).len() - 1) as u32
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycInt {
    n: u32,
    coeffs: Vec<Int>,
}

impl CycInt {
    pub fn zero(n: u32) -> Self {
        CycInt {
            n,
            coeffs: vec![Int::ZERO; euler_phi(n) as usize],
        }
    }

    pub fn from_int(n: u32, a: Int) -> Self {
        let mut z = Self::zero(n);
        z.coeffs[0] = a;
        z
    }

    pub fn one(n: u32) -> Self {
        Self::from_int(n, Int::ONE)
    }

    /// `zeta_n^k`.
    pub fn zeta_pow(n: u32, k: i64) -> Self {
        let e = k.rem_euclid(n as i64) as usize;
        let mut c = vec![0i64; n as usize];
        c[e] = 1;
        Self::from_exponent_counts(n, &c)
    }

    /// `sum_k counts[k] * zeta_n^k` for `k` in `0..n`.
    pub fn from_exponent_counts(n: u32, counts: &[i64]) -> Self {
        assert_eq!(counts.len(), n as usize);
        Self::reduce(n, counts.iter().map(|&x| int(x)).collect())
    }

    /// Canonical element from coefficients in the power basis.
    pub fn from_coeffs(n: u32, coeffs: Vec<Int>) -> Self {
        assert_eq!(coeffs.len(), euler_phi(n) as usize, "wrong coefficient count");
        CycInt { n, coeffs }
    }

    fn reduce(n: u32, mut poly: Vec<Int>) -> Self {
        let p = cyclotomic_polynomial(n);
        let d = p.len() - 1;
        for top in (d..poly.len()).rev() {
            let c = std::mem::take(&mut poly[top]);
            if c.is_zero() {
                continue;
            }
            for (j, &pj) in p[..d].iter().enumerate() {
                if pj != 0 {
                    poly[top - d + j] -= &c * int(pj);
                }
            }
        }
        poly.resize(d, Int::ZERO);
        CycInt { n, coeffs: poly }
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The element as a rational integer, if it is one.
    pub fn as_integer(&self) -> Option<Int> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn add(&self, o: &CycInt) -> CycInt {
        assert_eq!(self.n, o.n, "conductor mismatch");
        CycInt {
            n: self.n,
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &CycInt) -> CycInt {
        assert_eq!(self.n, o.n, "conductor mismatch");
        CycInt {
            n: self.n,
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self) -> CycInt {
        CycInt {
            n: self.n,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, c: &Int) -> CycInt {
        CycInt {
            n: self.n,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, o: &CycInt) -> CycInt {
        assert_eq!(self.n, o.n, "conductor mismatch");
        let d = self.coeffs.len();
        let mut poly = vec![Int::ZERO; 2 * d.max(1) - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    poly[i + j] += a * b;
                }
            }
        }
        Self::reduce(self.n, poly)
    }

    /// `self / c` if every coefficient is divisible by `c`.
    pub fn div_exact(&self, c: &Int) -> Option<CycInt> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            if !(a % c).is_zero() {
                return None;
            }
            coeffs.push(a / c);
        }
        Some(CycInt { n: self.n, coeffs })
    }

    /// Image under `zeta -> zeta^k`, `gcd(k, n) = 1`.
    pub fn galois(&self, k: i64) -> CycInt {
        let n = self.n as usize;
        let mut poly = vec![Int::ZERO; n];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let e = ((i as i64) * k).rem_euclid(n as i64) as usize;
                poly[e] += c;
            }
        }
        Self::reduce(self.n, poly)
    }

    /// Complex conjugate.
    pub fn conj(&self) -> CycInt {
        self.galois(-1)
    }

    /// The same number in `Z[zeta_m]`, `n | m`.
    pub fn lift(&self, m: u32) -> CycInt {
        assert_eq!(m % self.n, 0, "conductor must divide the target");
        let s = (m / self.n) as usize;
        let mut poly = vec![Int::ZERO; m as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[i * s] += c;
        }
        Self::reduce(m, poly)
    }
}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = crate::int::is_negative(c);
            let a = crate::int::abs(c);
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            match (i, a == Int::ONE) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "z{}", self.n)?,
                (1, false) => write!(f, "{a}*z{}", self.n)?,
                (_, true) => write!(f, "z{}^{i}", self.n)?,
                (_, false) => write!(f, "{a}*z{}^{i}", self.n)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(euler_phi(24), 8);
    }

    #[test]
    fn roots_of_unity() {
        for n in 1..=24u32 {
            let z = CycInt::zeta_pow(n, 1);
            let mut p = CycInt::one(n);
            for _ in 0..n {
                p = p.mul(&z);
            }
            assert_eq!(p, CycInt::one(n), "zeta_{n}^{n}");
            // minimal polynomial evaluated at zeta
            let phi = cyclotomic_polynomial(n);
            let mut acc = CycInt::zero(n);
            let mut pw = CycInt::one(n);
            for &c in phi.iter() {
                acc = acc.add(&pw.scale(&int(c)));
                pw = pw.mul(&z);
            }
            assert!(acc.is_zero(), "Phi_{n}(zeta) != 0");
        }
    }

    #[test]
    fn sum_of_all_roots_vanishes() {
        for n in 2..=12u32 {
            let s = CycInt::from_exponent_counts(n, &vec![1; n as usize]);
            assert!(s.is_zero());
        }
    }

    #[test]
    fn conjugation_and_lift() {
        let z3 = CycInt::zeta_pow(3, 1);
        assert_eq!(z3.mul(&z3.conj()), CycInt::one(3));
        // z3 + z3^2 = -1
        assert_eq!(z3.add(&z3.conj()).as_integer(), Some(int(-1)));
        assert_eq!(z3.lift(6), CycInt::zeta_pow(6, 2));
        assert_eq!(CycInt::zeta_pow(4, 1).to_string(), "z4");
    }
}
