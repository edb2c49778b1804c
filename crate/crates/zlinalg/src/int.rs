//! Arbitrary precision integer helpers.

use dashu_int::ops::{Abs, ExtendedGcd, Gcd, RemEuclid};
pub use dashu_int::IBig as Int;

#[inline]
pub fn int(v: i64) -> Int {
    Int::from(v)
}

#[inline]
pub fn zero() -> Int {
    Int::ZERO
}

#[inline]
pub fn one() -> Int {
    Int::ONE
}

pub fn abs(a: &Int) -> Int {
    a.clone().abs()
}

/// Nonnegative gcd; `gcd(0, 0) = 0`.
pub fn gcd(a: &Int, b: &Int) -> Int {
    if a.is_zero() {
        return abs(b);
    }
    if b.is_zero() {
        return abs(a);
    }
    Int::from(a.gcd(b))
}

pub fn lcm(a: &Int, b: &Int) -> Int {
    if a.is_zero() || b.is_zero() {
        return zero();
    }
    abs(&(a / gcd(a, b) * b))
}

/// Returns `(g, x, y)` with `g = a*x + b*y` and `g >= 0`.
pub fn ext_gcd(a: &Int, b: &Int) -> (Int, Int, Int) {
    if a.is_zero() || b.is_zero() {
        let sa = if is_negative(a) { -one() } else { one() };
        let sb = if is_negative(b) { -one() } else { one() };
        return if a.is_zero() { (abs(b), zero(), sb) } else { (abs(a), sa, zero()) };
    }
    let (g, x, y) = a.gcd_ext(b);
    (Int::from(g), x, y)
}

/// Floor division, `b != 0`.
pub fn div_floor(a: &Int, b: &Int) -> Int {
    let q = a / b;
    let r = a - &q * b;
    if !r.is_zero() && is_negative(&r) != is_negative(b) {
        q - one()
    } else {
        q
    }
}

/// Representative of `a` modulo `m` in `[0, |m|)`; returns `a` when `m = 0`.
pub fn modulo(a: &Int, m: &Int) -> Int {
    if m.is_zero() {
        return a.clone();
    }
    Int::from(a.rem_euclid(m))
}

/// Quotient rounded to the nearest integer (ties round up).
pub fn div_round(a: &Int, b: &Int) -> Int {
    let two = int(2);
    let bb = abs(b);
    let num = a * &two + &bb;
    let q = div_floor(&num, &(&bb * &two));
    if b.sign() == dashu_int::Sign::Negative {
        -q
    } else {
        q
    }
}

pub fn is_negative(a: &Int) -> bool {
    a.sign() == dashu_int::Sign::Negative && !a.is_zero()
}

pub fn to_i64(a: &Int) -> Option<i64> {
    i64::try_from(a).ok()
}

pub fn to_usize(a: &Int) -> Option<usize> {
    usize::try_from(a).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floor_and_mod() {
        assert_eq!(div_floor(&int(-7), &int(2)), int(-4));
        assert_eq!(div_floor(&int(7), &int(-2)), int(-4));
        assert_eq!(div_floor(&int(-7), &int(-2)), int(3));
        assert_eq!(modulo(&int(-7), &int(3)), int(2));
        assert_eq!(modulo(&int(-7), &int(-3)), int(2));
        assert_eq!(div_round(&int(7), &int(2)), int(4));
        assert_eq!(div_round(&int(-7), &int(2)), int(-3));
        assert_eq!(div_round(&int(5), &int(3)), int(2));
    }

    #[test]
    fn gcds() {
        let (g, x, y) = ext_gcd(&int(12), &int(-18));
        assert_eq!(g, int(6));
        assert_eq!(int(12) * x + int(-18) * y, int(6));
        assert_eq!(lcm(&int(4), &int(6)), int(12));
        assert_eq!(gcd(&int(0), &int(-5)), int(5));
        assert_eq!(gcd(&int(0), &int(0)), int(0));
        assert_eq!(ext_gcd(&int(0), &int(-5)), (int(5), int(0), int(-1)));
    }
}
