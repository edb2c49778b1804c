//! `(M box N)(X)` as a coequalizer over orbits mapping to `X`.

use crate::group::{GMap, GSet, SubId};
use crate::mackey::MackeyModule;
use std::collections::HashMap;
use zlinalg::int::gcd;
use zlinalg::{Int, IntMatrix, PresentedAbGroup};

struct Block {
    offset: usize,
    mdim: usize,
    ndim: usize,
}

/// `u (x) v` in the basis `e_i (x) f_j`, index `i * len(v) + j`.
fn kron(u: &[Int], v: &[Int]) -> Vec<Int> {
    u.iter().flat_map(|a| v.iter().map(move |b| a * b)).collect()
}

fn unit(n: usize, i: usize) -> Vec<Int> {
    let mut e = vec![Int::ZERO; n];
    e[i] = Int::ONE;
    e
}

/// Generators `M[K] (x) N[K]` for every class representative `K` and
/// `alpha: G/K -> X`; relations from every map `f: G/K -> G/K'` over `X`
/// and from the two actions of `R[K]`.
pub fn box_direct_oracle(m: &MackeyModule, n: &MackeyModule, x: &GSet) -> PresentedAbGroup {
    let g = m.group().clone();
    let reps = g.class_reps();
    let orbit: HashMap<SubId, GSet> = reps.iter().map(|&k| (k, GSet::orbit_set(&g, k))).collect();
    let mut blocks: HashMap<(SubId, usize), Block> = HashMap::new();
    let mut alphas: HashMap<SubId, Vec<GMap>> = HashMap::new();
    let mut total = 0;
    for &k in &reps {
        let maps = orbit[&k].maps_to(x);
        for a in &maps {
            let (mdim, ndim) = (m.value(k).ngens(), n.value(k).ngens());
            blocks.insert((k, a.image(0)), Block { offset: total, mdim, ndim });
            total += mdim * ndim;
        }
        alphas.insert(k, maps);
    }
    let mut cols: Vec<Vec<Int>> = Vec::new();
    let place = |col: &mut Vec<Int>, b: &Block, v: &[Int], sign: bool| {
        for (i, c) in v.iter().enumerate() {
            if sign {
                col[b.offset + i] += c;
            } else {
                col[b.offset + i] -= c;
            }
        }
    };
    for &k in &reps {
        let (mk, nk) = (m.value(k), n.value(k));
        for a in &alphas[&k] {
            let b = &blocks[&(k, a.image(0))];
            for i in 0..b.mdim {
                for j in 0..b.ndim {
                    let d = gcd(mk.modulus(i), nk.modulus(j));
                    if !d.is_zero() {
                        let mut col = vec![Int::ZERO; total];
                        col[b.offset + i * b.ndim + j] = d;
                        cols.push(col);
                    }
                }
            }
            for r in 0..m.green().rank(k) {
                let (am, an) = (m.act(k, r), n.act(k, r));
                for i in 0..b.mdim {
                    for j in 0..b.ndim {
                        let mut col = vec![Int::ZERO; total];
                        place(&mut col, b, &kron(&am.col(i), &unit(b.ndim, j)), true);
                        place(&mut col, b, &kron(&unit(b.mdim, i), &an.col(j)), false);
                        cols.push(col);
                    }
                }
            }
        }
    }
    for &k in &reps {
        for &k2 in &reps {
            for f in orbit[&k].maps_to(&orbit[&k2]) {
                let (m_up, m_down) = (m.maps().contravariant(&f), m.maps().covariant(&f));
                let (n_up, n_down) = (n.maps().contravariant(&f), n.maps().covariant(&f));
                for a2 in &alphas[&k2] {
                    let b2 = &blocks[&(k2, a2.image(0))];
                    let b = &blocks[&(k, a2.image(f.image(0)))];
                    // m (x) N^*(f) n' ~ M_*(f) m (x) n'
                    for i in 0..b.mdim {
                        for j in 0..b2.ndim {
                            let mut col = vec![Int::ZERO; total];
                            place(&mut col, b, &kron(&unit(b.mdim, i), &n_up.col(j)), true);
                            place(&mut col, b2, &kron(&m_down.col(i), &unit(b2.ndim, j)), false);
                            cols.push(col);
                        }
                    }
                    // M^*(f) m' (x) n ~ m' (x) N_*(f) n
                    for i in 0..b2.mdim {
                        for j in 0..b.ndim {
                            let mut col = vec![Int::ZERO; total];
                            place(&mut col, b, &kron(&m_up.col(i), &unit(b.ndim, j)), true);
                            place(&mut col, b2, &kron(&unit(b2.mdim, i), &n_down.col(j)), false);
                            cols.push(col);
                        }
                    }
                }
            }
        }
    }
    cols.retain(|c| c.iter().any(|x| !x.is_zero()));
    cols.sort();
    cols.dedup();
    PresentedAbGroup::new(total, IntMatrix::from_cols(&cols, total))
}
