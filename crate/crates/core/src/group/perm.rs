//! Permutations on `0..n` and group specifications.

use super::GroupError;

pub type Perm = Vec<u32>;

pub fn identity(n: usize) -> Perm {
    (0..n as u32).collect()
}

/// `(a * b)(x) = a(b(x))`.
pub fn compose(a: &Perm, b: &Perm) -> Perm {
    b.iter().map(|&x| a[x as usize]).collect()
}

pub fn cycle(n: usize, points: &[u32]) -> Perm {
    let mut p = identity(n);
    for (i, &x) in points.iter().enumerate() {
        p[x as usize] = points[(i + 1) % points.len()];
    }
    p
}

/// Cycle notation with 1-based points, `()` for the identity.
pub fn to_cycles(p: &Perm) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        let mut c = vec![start + 1];
        seen[start] = true;
        let mut x = p[start] as usize;
        while x != start {
            seen[x] = true;
            c.push(x + 1);
            x = p[x] as usize;
        }
        out.push('(');
        out.push_str(&c.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","));
        out.push(')');
    }
    if out.is_empty() {
        "()".to_string()
    } else {
        out
    }
}

/// Parses `"(1,2,3)(4,5)"` into a permutation of `0..n` (`n` grows to fit).
pub fn parse_cycles(s: &str) -> Result<Vec<Vec<u32>>, GroupError> {
    let s = s.trim();
    let mut cycles = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        let r = rest.trim_start();
        if r.is_empty() {
            break;
        }
        let Some(inner) = r.strip_prefix('(') else {
            return Err(GroupError::Parse(format!("expected '(' in permutation {s:?}")));
        };
        let Some(end) = inner.find(')') else {
            return Err(GroupError::Parse(format!("unclosed cycle in {s:?}")));
        };
        let body = &inner[..end];
        if !body.trim().is_empty() {
            let mut c = Vec::new();
            for tok in body.split(|ch: char| ch == ',' || ch.is_whitespace()).filter(|t| !t.is_empty()) {
                let v: u32 = tok.parse().map_err(|_| GroupError::Parse(format!("bad point {tok:?} in {s:?}")))?;
                if v == 0 {
                    return Err(GroupError::Parse(format!("points are 1-based in {s:?}")));
                }
                if c.contains(&(v - 1)) {
                    return Err(GroupError::Parse(format!("repeated point {v} in {s:?}")));
                }
                c.push(v - 1);
            }
            cycles.push(c);
        }
        rest = &inner[end + 1..];
    }
    Ok(cycles)
}

pub fn from_cycles(n: usize, cycles: &[Vec<u32>]) -> Result<Perm, GroupError> {
    let mut p = identity(n);
    let mut used = vec![false; n];
    for c in cycles {
        for &x in c {
            if used[x as usize] {
                return Err(GroupError::Parse("cycles are not disjoint".into()));
            }
            used[x as usize] = true;
        }
        for (i, &x) in c.iter().enumerate() {
            p[x as usize] = c[(i + 1) % c.len()];
        }
    }
    Ok(p)
}

/// Places permutations of several groups on disjoint point sets.
pub fn direct_product(factors: &[(usize, Vec<Perm>)]) -> (usize, Vec<Perm>) {
    let n: usize = factors.iter().map(|f| f.0).sum();
    let mut gens = Vec::new();
    let mut off = 0;
    for (deg, fg) in factors {
        for g in fg {
            let mut p = identity(n);
            for (i, &x) in g.iter().enumerate() {
                p[off + i] = off as u32 + x;
            }
            gens.push(p);
        }
        off += deg;
    }
    (n, gens)
}
