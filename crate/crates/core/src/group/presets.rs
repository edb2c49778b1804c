//! Group specifications.
//!
//! Accepted forms (case-insensitive names):
//! `1`/`trivial`, `Z/n` or `Cn`, `Dn` (dihedral of order `2n`), `Sn`
//! (`n <= 4`), `A4`, `Q8`, `E<p>^<k>` or `(Z/p)^k`, products `AxB`, and
//! explicit generators `perm:(1,2,3);(1,2)`.

use super::perm::{self, Perm};
use super::GroupError;

pub(crate) fn parse(spec: &str) -> Result<(String, usize, Vec<Perm>), GroupError> {
    let s = spec.trim();
    if let Some(body) = s.strip_prefix("perm:") {
        return parse_perm(body).map(|(n, g)| (s.to_string(), n, g));
    }
    let factors = split_product(s);
    let mut parts = Vec::new();
    for f in &factors {
        parts.push(parse_atom(f)?);
    }
    let (n, gens) = if parts.len() == 1 { parts.pop().unwrap() } else { perm::direct_product(&parts) };
    Ok((normalize_name(s), n, gens))
}

fn normalize_name(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

/// Splits on `x`/`*` at top level, but not inside `(...)`.
fn split_product(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch)
            }
            ')' => {
                depth -= 1;
                cur.push(ch)
            }
            'x' | 'X' | '*' | '×' if depth == 0 => {
                out.push(cur.trim().to_string());
                cur.clear();
            }
            _ => cur.push(ch),
        }
    }
    out.push(cur.trim().to_string());
    out
}

fn num(s: &str, what: &str) -> Result<usize, GroupError> {
    s.trim().parse::<usize>().map_err(|_| GroupError::Parse(format!("bad {what} {s:?}")))
}

fn parse_atom(s: &str) -> Result<(usize, Vec<Perm>), GroupError> {
    let l = s.to_ascii_lowercase();
    if l == "1" || l == "trivial" || l == "c1" || l == "z/1" {
        return Ok((1, vec![]));
    }
    if let Some(rest) = l.strip_prefix("(z/") {
        // (Z/p)^k
        let (p, k) = rest.split_once(")^").ok_or_else(|| GroupError::Parse(format!("bad group {s:?}")))?;
        return elementary_abelian(num(p, "prime")?, num(k, "exponent")?);
    }
    if let Some(rest) = l.strip_prefix('e') {
        if let Some((p, k)) = rest.split_once('^') {
            return elementary_abelian(num(p, "prime")?, num(k, "exponent")?);
        }
    }
    if let Some(n) = l.strip_prefix("z/").or_else(|| l.strip_prefix('c')) {
        let n = num(n, "cyclic order")?;
        if n == 0 {
            return Err(GroupError::Parse("cyclic group of order 0".into()));
        }
        return Ok(cyclic(n));
    }
    if let Some(n) = l.strip_prefix('d') {
        return dihedral(num(n, "dihedral parameter")?);
    }
    if let Some(n) = l.strip_prefix('s') {
        let n = num(n, "symmetric degree")?;
        if !(1..=4).contains(&n) {
            return Err(GroupError::Parse(format!("symmetric group S{n} not supported (n <= 4)")));
        }
        if n == 1 {
            return Ok((1, vec![]));
        }
        let mut gens = vec![perm::cycle(n, &[0, 1])];
        if n > 2 {
            gens.push(perm::cycle(n, &(0..n as u32).collect::<Vec<_>>()));
        }
        return Ok((n, gens));
    }
    if l == "a4" {
        return Ok((4, vec![perm::cycle(4, &[0, 1, 2]), perm::cycle(4, &[1, 2, 3])]));
    }
    if l == "q8" {
        return Ok(quaternion());
    }
    Err(GroupError::Parse(format!("unknown group {s:?}")))
}

fn cyclic(n: usize) -> (usize, Vec<Perm>) {
    if n == 1 {
        return (1, vec![]);
    }
    (n, vec![perm::cycle(n, &(0..n as u32).collect::<Vec<_>>())])
}

fn dihedral(n: usize) -> Result<(usize, Vec<Perm>), GroupError> {
    match n {
        0 => Err(GroupError::Parse("dihedral parameter must be positive".into())),
        1 => Ok(cyclic(2)),
        2 => Ok((4, vec![perm::cycle(4, &[0, 1]), perm::cycle(4, &[2, 3])])),
        _ => {
            let r = perm::cycle(n, &(0..n as u32).collect::<Vec<_>>());
            let s: Perm = (0..n as u32).map(|i| (n as u32 - i) % n as u32).collect();
            Ok((n, vec![r, s]))
        }
    }
}

fn elementary_abelian(p: usize, k: usize) -> Result<(usize, Vec<Perm>), GroupError> {
    if super::prime_factors(p) != vec![p] {
        return Err(GroupError::Parse(format!("{p} is not prime")));
    }
    let f: Vec<(usize, Vec<Perm>)> = (0..k).map(|_| cyclic(p)).collect();
    if f.is_empty() {
        return Ok((1, vec![]));
    }
    Ok(perm::direct_product(&f))
}

/// Left regular representation of the quaternion group on `±1, ±i, ±j, ±k`.
fn quaternion() -> (usize, Vec<Perm>) {
    // unit u in {1,i,j,k} with sign: index = 2*u + (sign<0)
    fn mul(a: (usize, bool), b: (usize, bool)) -> (usize, bool) {
        // table for units 1,i,j,k
        const T: [[(usize, bool); 4]; 4] = [
            [(0, false), (1, false), (2, false), (3, false)],
            [(1, false), (0, true), (3, false), (2, true)],
            [(2, false), (3, true), (0, true), (1, false)],
            [(3, false), (2, false), (1, true), (0, true)],
        ];
        let (u, s) = T[a.0][b.0];
        (u, s ^ a.1 ^ b.1)
    }
    let decode = |x: usize| (x / 2, x % 2 == 1);
    let encode = |(u, s): (usize, bool)| (2 * u + s as usize) as u32;
    let left = |g: (usize, bool)| -> Perm { (0..8).map(|x| encode(mul(g, decode(x)))).collect() };
    (8, vec![left((1, false)), left((2, false))])
}

fn parse_perm(body: &str) -> Result<(usize, Vec<Perm>), GroupError> {
    let mut cyc_lists = Vec::new();
    let mut n = 0;
    for g in body.split(';').map(str::trim).filter(|g| !g.is_empty()) {
        let cycles = perm::parse_cycles(g)?;
        for c in &cycles {
            for &x in c {
                n = n.max(x as usize + 1);
            }
        }
        cyc_lists.push(cycles);
    }
    let n = n.max(1);
    let gens = cyc_lists.iter().map(|c| perm::from_cycles(n, c)).collect::<Result<Vec<_>, _>>()?;
    Ok((n, gens))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_split() {
        assert_eq!(split_product("Z/2xZ/2"), vec!["Z/2", "Z/2"]);
        assert_eq!(split_product("(Z/2)^3"), vec!["(Z/2)^3"]);
    }

    #[test]
    fn explicit_generators() {
        let (_, n, g) = parse("perm:(1,2,3);(1,2)").unwrap();
        assert_eq!(n, 3);
        assert_eq!(g.len(), 2);
        assert!(parse("perm:(1,2").is_err());
        assert!(parse("S5").is_err());
        assert!(parse("foo").is_err());
    }
}
