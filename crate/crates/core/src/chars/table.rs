//! Character tables of subgroups by Dixon's method.

use super::modp::{dixon_prime, inv_mod, nullspace, pow_mod, primitive_root};
use crate::group::{FiniteGroup, SubId};
use std::cmp::Ordering;
use zlinalg::{int, CycInt, Int};

/// Irreducible characters of a subgroup `H` of the ambient group. Values lie
/// in `Z[zeta_N]`, `N` the exponent of the ambient group, so that tables of
/// different subgroups can be compared directly.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub subgroup: SubId,
    pub conductor: u32,
    pub order: usize,
    /// Conjugacy classes of `H` (ambient element indices).
    pub classes: Vec<Vec<usize>>,
    class_of: Vec<u32>,
    pub inverse_class: Vec<usize>,
    /// `chars[i][k]` = value of the `i`-th irreducible on class `k`.
    pub chars: Vec<Vec<CycInt>>,
}

impl CharacterTable {
    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_size(&self, k: usize) -> usize {
        self.classes[k].len()
    }

    pub fn class_rep(&self, k: usize) -> usize {
        self.classes[k][0]
    }

    /// Class of an element of `H`.
    pub fn class_of(&self, g: usize) -> usize {
        let c = self.class_of[g];
        assert!(c != u32::MAX, "element not in subgroup");
        c as usize
    }

    pub fn degree(&self, i: usize) -> i64 {
        zlinalg::int::to_i64(&self.chars[i][0].as_integer().expect("degree")).expect("degree")
    }

    pub fn degrees(&self) -> Vec<i64> {
        (0..self.chars.len()).map(|i| self.degree(i)).collect()
    }

    /// `|H| <f, g>` for class functions given on classes.
    fn scaled_inner(&self, f: &[CycInt], g: &[CycInt]) -> CycInt {
        let mut acc = CycInt::zero(self.conductor);
        for k in 0..self.num_classes() {
            let t = f[k].mul(&g[k].conj()).scale(&int(self.class_size(k) as i64));
            acc = acc.add(&t);
        }
        acc
    }

    /// `<f, g>` if it is a rational integer.
    pub fn inner_product(&self, f: &[CycInt], g: &[CycInt]) -> Option<Int> {
        let s = self.scaled_inner(f, g).as_integer()?;
        let o = int(self.order as i64);
        if (&s % &o).is_zero() {
            Some(s / o)
        } else {
            None
        }
    }

    /// Coordinates over the irreducibles of a virtual character given by its
    /// values; `None` if the class function is not a virtual character.
    pub fn decompose(&self, values: &[CycInt]) -> Option<Vec<i64>> {
        let mut out = Vec::with_capacity(self.chars.len());
        for chi in &self.chars {
            out.push(zlinalg::int::to_i64(&self.inner_product(values, chi)?)?);
        }
        // must reproduce the class function
        if self.values(&out) != values {
            return None;
        }
        Some(out)
    }

    /// Class-function values of a virtual character.
    pub fn values(&self, coords: &[i64]) -> Vec<CycInt> {
        let mut v = vec![CycInt::zero(self.conductor); self.num_classes()];
        for (i, &c) in coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (k, x) in v.iter_mut().enumerate() {
                *x = x.add(&self.chars[i][k].scale(&int(c)));
            }
        }
        v
    }

    /// Both orthogonality relations, degrees dividing `|H|`, sum of squared
    /// degrees.
    pub fn verify(&self) -> Result<(), String> {
        let r = self.num_classes();
        if self.chars.len() != r {
            return Err(format!("{} characters for {} classes", self.chars.len(), r));
        }
        for i in 0..r {
            for j in 0..r {
                let ip = self.inner_product(&self.chars[i], &self.chars[j]);
                let want = int((i == j) as i64);
                if ip.as_ref() != Some(&want) {
                    return Err(format!("row orthogonality fails for characters {i}, {j}"));
                }
            }
        }
        let order = int(self.order as i64);
        for k in 0..r {
            for l in 0..r {
                let mut acc = CycInt::zero(self.conductor);
                for chi in &self.chars {
                    acc = acc.add(&chi[k].mul(&chi[l].conj()));
                }
                let want = if k == l { &order / int(self.class_size(k) as i64) } else { int(0) };
                if acc.as_integer() != Some(want) {
                    return Err(format!("column orthogonality fails for classes {k}, {l}"));
                }
            }
        }
        let mut sum = 0i64;
        for i in 0..r {
            let d = self.degree(i);
            if d <= 0 || self.order as i64 % d != 0 {
                return Err(format!("degree {d} does not divide the order"));
            }
            sum += d * d;
        }
        if sum != self.order as i64 {
            return Err("sum of squared degrees differs from the order".into());
        }
        Ok(())
    }

    /// The table of `^g H`, values transported along `h -> g h g^-1`.
    pub fn transport(&self, group: &FiniteGroup, g: usize) -> CharacterTable {
        let target = group.conj(g, self.subgroup);
        let classes: Vec<Vec<usize>> = self
            .classes
            .iter()
            .map(|c| {
                let mut v: Vec<usize> = c.iter().map(|&x| group.conj_elem(g, x)).collect();
                v.sort();
                v
            })
            .collect();
        let mut class_of = vec![u32::MAX; group.order()];
        for (k, c) in classes.iter().enumerate() {
            for &x in c {
                class_of[x] = k as u32;
            }
        }
        CharacterTable {
            subgroup: target,
            conductor: self.conductor,
            order: self.order,
            classes,
            class_of,
            inverse_class: self.inverse_class.clone(),
            chars: self.chars.clone(),
        }
    }

    /// Assembles a table from given classes and characters (e.g. imported);
    /// callers should run [`CharacterTable::verify`].
    pub fn from_parts(group: &FiniteGroup, subgroup: SubId, conductor: u32, classes: Vec<Vec<usize>>, chars: Vec<Vec<CycInt>>) -> Self {
        let mut class_of = vec![u32::MAX; group.order()];
        for (k, c) in classes.iter().enumerate() {
            for &x in c {
                class_of[x] = k as u32;
            }
        }
        let inverse_class = classes.iter().map(|c| class_of[group.inv(c[0])] as usize).collect();
        CharacterTable {
            subgroup,
            conductor,
            order: group.sub_order(subgroup),
            classes,
            class_of,
            inverse_class,
            chars,
        }
    }
}

/// Conjugacy classes of `H`, ordered by least element; elements sorted.
pub fn conjugacy_classes(group: &FiniteGroup, h: SubId) -> Vec<Vec<usize>> {
    let mut seen = vec![false; group.order()];
    let mut out = Vec::new();
    for &x in group.elements(h) {
        if seen[x] {
            continue;
        }
        let mut c: Vec<usize> = group.elements(h).iter().map(|&y| group.conj_elem(y, x)).collect();
        c.sort();
        c.dedup();
        for &y in &c {
            seen[y] = true;
        }
        out.push(c);
    }
    out
}

/// Dixon's method: simultaneous eigenvectors of the class matrices over
/// GF(p), lifted to cyclotomic integers through eigenvalue multiplicities.
pub fn character_table(group: &FiniteGroup, h: SubId) -> CharacterTable {
    let classes = conjugacy_classes(group, h);
    let r = classes.len();
    let order = group.sub_order(h);
    let n = group.exponent() as u64;
    let mut class_of = vec![u32::MAX; group.order()];
    for (k, c) in classes.iter().enumerate() {
        for &x in c {
            class_of[x] = k as u32;
        }
    }
    let inverse_class: Vec<usize> = classes.iter().map(|c| class_of[group.inv(c[0])] as usize).collect();
    let bound = (2.0 * (group.order() as f64).sqrt()).floor() as u64;
    let p = dixon_prime(n, bound);
    let z = pow_mod(primitive_root(p), (p - 1) / n, p);

    // c[j][i][k] = #{x in C_j : x^-1 z_k in C_i} for fixed z_k in C_k
    let mut coef = vec![vec![vec![0u64; r]; r]; r];
    for j in 0..r {
        for &x in &classes[j] {
            let xi = group.inv(x);
            for (k, ck) in classes.iter().enumerate() {
                let y = group.mul(xi, ck[0]);
                let i = class_of[y] as usize;
                coef[j][i][k] += 1;
            }
        }
    }
    // common eigenvectors of A_j with (A_j)_{ik} = c_{jik}
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..r).map(|i| (0..r).map(|k| (i == k) as u64).collect()).collect()];
    for j in 1..r {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for basis in spaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            // (A_j - lambda) B
            let d = basis.len();
            let mut found = 0;
            for lambda in 0..p {
                let m: Vec<Vec<u64>> = (0..r)
                    .map(|i| {
                        (0..d)
                            .map(|c| {
                                let mut s = 0u64;
                                for k in 0..r {
                                    let a = (coef[j][i][k] % p + if i == k { p - lambda } else { 0 }) % p;
                                    s = (s + a * basis[c][k]) % p;
                                }
                                s
                            })
                            .collect()
                    })
                    .collect();
                let ns = nullspace(&m, d, p);
                if ns.is_empty() {
                    continue;
                }
                found += ns.len();
                let vecs: Vec<Vec<u64>> = ns
                    .iter()
                    .map(|c| (0..r).map(|k| (0..d).fold(0u64, |s, t| (s + c[t] * basis[t][k]) % p)).collect())
                    .collect();
                next.push(vecs);
                if found == d {
                    break;
                }
            }
            assert_eq!(found, d, "class matrices not diagonalizable over GF({p})");
        }
        spaces = next;
    }
    assert!(spaces.iter().all(|s| s.len() == 1), "eigenspaces did not split");

    let mut chars: Vec<Vec<CycInt>> = Vec::with_capacity(r);
    for s in spaces {
        let v = &s[0];
        let w: Vec<u64> = {
            let iv = inv_mod(v[0], p);
            v.iter().map(|x| x * iv % p).collect()
        };
        // chi(1)^2 * sum_k w_k w_k' / |C_k| = |H|
        let mut s = 0u64;
        for k in 0..r {
            s = (s + w[k] * w[inverse_class[k]] % p * inv_mod(classes[k].len() as u64 % p, p)) % p;
        }
        let d2 = (order as u64 % p) * inv_mod(s, p) % p;
        let deg = (1..=((order as f64).sqrt() as u64 + 1)).find(|&d| d * d % p == d2).expect("degree");
        let modp: Vec<u64> = (0..r).map(|k| deg * w[k] % p * inv_mod(classes[k].len() as u64 % p, p) % p).collect();
        // lift: multiplicity of eigenvalue zeta^m on an element g
        let mut row = Vec::with_capacity(r);
        for c in &classes {
            let g = c[0];
            let mut counts = vec![0i64; n as usize];
            for (m, cnt) in counts.iter_mut().enumerate() {
                let mut acc = 0u64;
                let mut x = 0usize;
                for jj in 0..n {
                    let val = modp[class_of[x] as usize];
                    let e = (n - (jj * m as u64) % n) % n;
                    acc = (acc + val * pow_mod(z, e, p)) % p;
                    x = group.mul(x, g);
                }
                let mult = acc * inv_mod(n % p, p) % p;
                assert!(mult <= deg, "eigenvalue multiplicity out of range");
                *cnt = mult as i64;
            }
            row.push(CycInt::from_exponent_counts(n as u32, &counts));
        }
        chars.push(row);
    }
    sort_characters(&mut chars);
    CharacterTable {
        subgroup: h,
        conductor: n as u32,
        order,
        classes,
        class_of,
        inverse_class,
        chars,
    }
}

/// Trivial character first, then by degree, then by values (power-basis
/// coefficients, class by class) in descending lexicographic order.
fn sort_characters(chars: &mut [Vec<CycInt>]) {
    let key = |c: &Vec<CycInt>| -> (bool, Int) {
        let trivial = c.iter().all(|v| v.as_integer() == Some(int(1)));
        (!trivial, c[0].as_integer().unwrap())
    };
    chars.sort_by(|a, b| {
        key(a).cmp(&key(b)).then_with(|| {
            for (x, y) in a.iter().zip(b) {
                match y.coeffs().cmp(x.coeffs()) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    });
}
