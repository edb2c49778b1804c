//! Second pages of the universal-coefficient and Kunneth spectral sequences,
//! the collapse annotation, and the Brauer/Artin vanishing tools.

use crate::green::{GreenFunctor, GreenKind};
use crate::group::{FiniteGroup, SubId};
use crate::homalg::{ext_from, resolve, tor_from, Certificate};
use crate::mackey::GradedModule;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::Arc;
use zlinalg::int::to_i64;
use zlinalg::{int, smith_normal_form, AbGroup, IntMatrix, Invariants};

pub const E2_FORMAT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum E2Kind {
    Uct,
    Kunneth,
}

impl E2Kind {
    pub fn name(self) -> &'static str {
        match self {
            E2Kind::Uct => "uct",
            E2Kind::Kunneth => "kunneth",
        }
    }
}

/// Where the nonzero part of the page must lie once the projective
/// dimension `pd` of the first argument is known.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Collapse {
    pub pd: usize,
    /// `0 <= p <= upper`.
    pub upper: usize,
    /// A second bound stated for the UCT, `pd + 1`; reported alongside.
    pub alternative: Option<usize>,
}

impl fmt::Display for Collapse {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "confined, pd = {}: 0 <= p <= {}", self.pd, self.upper)?;
        if let Some(a) = self.alternative {
            write!(f, " (weaker bound 0 <= p <= {a})")?;
        }
        Ok(())
    }
}

/// An E2 page. UCT cells are `E_2^{p,q} = Ext^p(kA, kB)_{-q}`, Kunneth cells
/// are `E^2_{p,q} = Tor_p(kA, kB)_q` at `G/G`; `q` is taken mod 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct E2Page {
    pub kind: E2Kind,
    pub group: String,
    pub functor: GreenKind,
    pub p_max: usize,
    pub cells: Vec<[Invariants; 2]>,
    /// Kunneth only: `Tor_p(kA, kB)_q` at every class representative.
    pub levels: Option<Vec<[Vec<Invariants>; 2]>>,
    pub collapse: Option<Collapse>,
    pub truncated: bool,
}

impl E2Page {
    pub fn cell(&self, p: usize, q: i64) -> &Invariants {
        &self.cells[p][q.rem_euclid(2) as usize]
    }

    /// Whether every cell with `p > 0` vanishes.
    pub fn concentrated_in_p0(&self) -> bool {
        self.cells.iter().skip(1).flatten().all(Invariants::is_zero)
    }

    pub fn is_zero(&self) -> bool {
        self.cells.iter().flatten().all(Invariants::is_zero)
    }
}

/// Resolve every part of `ka` through `X_{p_max + 1}` and certify.
fn resolutions(ka: &GradedModule, p_max: usize) -> Vec<crate::homalg::Resolution> {
    (0..2usize)
        .into_par_iter()
        .map(|i| resolve(ka.part(i), p_max + 1))
        .collect()
}

fn collapse_of(dims: &[Option<usize>], kind: E2Kind) -> Option<Collapse> {
    let pd = dims.iter().try_fold(0usize, |acc, d| d.map(|d| acc.max(d)))?;
    Some(Collapse {
        pd,
        upper: pd,
        alternative: (kind == E2Kind::Uct).then_some(pd + 1),
    })
}

fn same_group(ka: &GradedModule, kb: &GradedModule) -> Result<(), String> {
    let (a, b) = (ka.green(), kb.green());
    if !Arc::ptr_eq(a.group(), b.group()) || a.kind() != b.kind() {
        return Err("modules over different groups or Green functors".into());
    }
    Ok(())
}

fn check_certificates(certs: &[Certificate]) -> Result<(), String> {
    if certs.iter().all(Certificate::is_exact) {
        Ok(())
    } else {
        Err("resolution failed its exactness certificate".into())
    }
}

pub fn uct_e2(ka: &GradedModule, kb: &GradedModule, p_max: usize) -> Result<E2Page, String> {
    same_group(ka, kb)?;
    let res = resolutions(ka, p_max);
    let certs: Vec<Certificate> = res.par_iter().map(|r| r.certify()).collect();
    check_certificates(&certs)?;
    let tables: Vec<Vec<_>> = (0..2usize)
        .into_par_iter()
        .map(|i| (0..2).map(|j| ext_from(&res[i], kb.part(j), p_max)).collect())
        .collect();
    // degree -q = i + j (mod 2), and -q = q mod 2
    let cells = (0..=p_max)
        .map(|p| {
            let cell = |q: usize| (0..2).fold(Invariants::zero(), |acc, i| acc.sum(&tables[i][(q + i) % 2].groups[p]));
            [cell(0), cell(1)]
        })
        .collect();
    let dims: Vec<Option<usize>> = res.iter().map(|r| r.complete.then(|| r.length())).collect();
    Ok(E2Page {
        kind: E2Kind::Uct,
        group: ka.green().group().name().to_string(),
        functor: ka.green().kind(),
        p_max,
        cells,
        levels: None,
        collapse: collapse_of(&dims, E2Kind::Uct),
        truncated: dims.iter().any(Option::is_none),
    })
}

pub fn kunneth_e2(ka: &GradedModule, kb: &GradedModule, p_max: usize) -> Result<E2Page, String> {
    same_group(ka, kb)?;
    let g = ka.green().group().clone();
    let whole = g.class_reps().iter().position(|&h| h == g.class_rep(g.whole())).expect("whole group is a class");
    let res = resolutions(ka, p_max);
    let certs: Vec<Certificate> = res.par_iter().map(|r| r.certify()).collect();
    check_certificates(&certs)?;
    let tables: Vec<Vec<Vec<Vec<Invariants>>>> = (0..2usize)
        .into_par_iter()
        .map(|i| {
            (0..2)
                .map(|j| tor_from(&res[i], kb.part(j), p_max).iter().map(|t| t.class_invariants()).collect())
                .collect()
        })
        .collect();
    let nclass = g.class_reps().len();
    let levels: Vec<[Vec<Invariants>; 2]> = (0..=p_max)
        .map(|p| {
            let cell = |q: usize| {
                (0..nclass)
                    .map(|c| (0..2).fold(Invariants::zero(), |acc, i| acc.sum(&tables[i][(q + i) % 2][p][c])))
                    .collect()
            };
            [cell(0), cell(1)]
        })
        .collect();
    let cells = levels.iter().map(|l| [l[0][whole].clone(), l[1][whole].clone()]).collect();
    let dims: Vec<Option<usize>> = res.iter().map(|r| r.complete.then(|| r.length())).collect();
    Ok(E2Page {
        kind: E2Kind::Kunneth,
        group: g.name().to_string(),
        functor: ka.green().kind(),
        p_max,
        cells,
        levels: Some(levels),
        collapse: collapse_of(&dims, E2Kind::Kunneth),
        truncated: dims.iter().any(Option::is_none),
    })
}

impl fmt::Display for E2Page {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (title, qs) = match self.kind {
            E2Kind::Uct => ("E_2^{p,q} = Ext^p(kA, kB)_{-q}", ["q even", "q odd"]),
            E2Kind::Kunneth => ("E^2_{p,q} = Tor_p(kA, kB)_q at G/G", ["q even", "q odd"]),
        };
        writeln!(f, "{} page over {} ({}): {title}", self.kind.name(), self.group, self.functor.name())?;
        let strs: Vec<[String; 2]> = self.cells.iter().map(|c| [c[0].to_string(), c[1].to_string()]).collect();
        let w0 = strs.iter().map(|s| s[0].len()).chain([qs[0].len()]).max().unwrap_or(0);
        writeln!(f, "  p | {:<w0$} | {}", qs[0], qs[1])?;
        for (p, s) in strs.iter().enumerate() {
            writeln!(f, "{p:>3} | {:<w0$} | {}", s[0], s[1])?;
        }
        match &self.collapse {
            Some(c) => writeln!(f, "collapse: {c}")?,
            None => writeln!(f, "collapse: none")?,
        }
        write!(f, "truncated: {}", self.truncated)
    }
}

// ---- JSON ----

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsDocument {
    pub rank: usize,
    pub torsion: Vec<i64>,
}

impl InvariantsDocument {
    pub fn from_invariants(inv: &Invariants) -> Result<Self, String> {
        let torsion = inv
            .torsion
            .iter()
            .map(|t| to_i64(t).ok_or_else(|| format!("torsion coefficient {t} does not fit in 64 bits")))
            .collect::<Result<_, _>>()?;
        Ok(InvariantsDocument { rank: inv.rank, torsion })
    }

    pub fn to_invariants(&self) -> Result<Invariants, String> {
        let mut prev = 1;
        for &t in &self.torsion {
            if t < 2 || t % prev != 0 {
                return Err(format!("torsion {:?} is not a divisibility chain of integers >= 2", self.torsion));
            }
            prev = t;
        }
        Ok(Invariants {
            rank: self.rank,
            torsion: self.torsion.iter().map(|&t| int(t)).collect(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellDocument {
    pub p: usize,
    pub q: usize,
    pub value: InvariantsDocument,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub levels: Option<Vec<InvariantsDocument>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct E2Document {
    pub format_version: u32,
    pub kind: E2Kind,
    pub group: String,
    pub functor: String,
    pub p_max: usize,
    pub cells: Vec<CellDocument>,
    pub collapse: Option<Collapse>,
    pub truncated: bool,
}

impl E2Page {
    pub fn to_document(&self) -> Result<E2Document, String> {
        let mut cells = Vec::new();
        for p in 0..=self.p_max {
            for q in 0..2 {
                let levels = match &self.levels {
                    Some(l) => Some(l[p][q].iter().map(InvariantsDocument::from_invariants).collect::<Result<_, _>>()?),
                    None => None,
                };
                cells.push(CellDocument {
                    p,
                    q,
                    value: InvariantsDocument::from_invariants(&self.cells[p][q])?,
                    levels,
                });
            }
        }
        Ok(E2Document {
            format_version: E2_FORMAT_VERSION,
            kind: self.kind,
            group: self.group.clone(),
            functor: self.functor.name().to_string(),
            p_max: self.p_max,
            cells,
            collapse: self.collapse.clone(),
            truncated: self.truncated,
        })
    }

    pub fn from_document(doc: &E2Document) -> Result<E2Page, String> {
        if doc.format_version != E2_FORMAT_VERSION {
            return Err(format!("format_version: expected {E2_FORMAT_VERSION}, found {}", doc.format_version));
        }
        let functor = GreenKind::from_name(&doc.functor).ok_or_else(|| format!("functor: unknown kind {:?}", doc.functor))?;
        let n = doc.p_max + 1;
        if doc.cells.len() != 2 * n {
            return Err(format!("cells: expected {} entries, found {}", 2 * n, doc.cells.len()));
        }
        let mut cells = vec![[Invariants::zero(), Invariants::zero()]; n];
        let with_levels = doc.cells.iter().any(|c| c.levels.is_some());
        let mut levels = vec![[Vec::new(), Vec::new()]; n];
        for (i, c) in doc.cells.iter().enumerate() {
            if c.p != i / 2 || c.q != i % 2 {
                return Err(format!("cells[{i}]: expected (p, q) = ({}, {}), found ({}, {})", i / 2, i % 2, c.p, c.q));
            }
            cells[c.p][c.q] = c.value.to_invariants().map_err(|e| format!("cells[{i}].value: {e}"))?;
            if with_levels {
                let l = c.levels.as_ref().ok_or_else(|| format!("cells[{i}].levels: missing"))?;
                levels[c.p][c.q] = l
                    .iter()
                    .map(InvariantsDocument::to_invariants)
                    .collect::<Result<_, _>>()
                    .map_err(|e| format!("cells[{i}].levels: {e}"))?;
            }
        }
        Ok(E2Page {
            kind: doc.kind,
            group: doc.group.clone(),
            functor,
            p_max: doc.p_max,
            cells,
            levels: with_levels.then_some(levels),
            collapse: doc.collapse.clone(),
            truncated: doc.truncated,
        })
    }
}

// ---- vanishing and induction theorems ----

/// Vanishing of a module from its elementary (resp. cyclic, rationally)
/// levels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VanishingReport {
    /// `M[E] = 0` for every elementary `E`.
    pub elementary_zero: bool,
    /// `M = 0` at every level.
    pub module_zero: bool,
    /// `M[C] (x) Q = 0` for every cyclic `C`.
    pub cyclic_rationally_zero: bool,
    /// `M (x) Q = 0` at every level.
    pub rationally_zero: bool,
    /// The implications are only forced over the representation ring.
    pub applies: bool,
}

impl VanishingReport {
    pub fn consistent(&self) -> bool {
        !self.applies || ((!self.elementary_zero || self.module_zero) && (!self.cyclic_rationally_zero || self.rationally_zero))
    }
}

pub fn vanishing_check(m: &GradedModule) -> VanishingReport {
    let g = m.green().group().clone();
    let parts = [m.part(0), m.part(1)];
    let all = |subs: &[SubId], test: &dyn Fn(&AbGroup) -> bool| subs.iter().all(|&h| parts.iter().all(|p| test(p.value(h))));
    let every: Vec<SubId> = g.class_reps();
    VanishingReport {
        elementary_zero: all(&g.elementary_subgroup_classes(), &|v| v.is_trivial()),
        module_zero: all(&every, &|v| v.is_trivial()),
        cyclic_rationally_zero: all(&g.cyclic_subgroup_classes(), &|v| v.free_rank() == 0),
        rationally_zero: all(&every, &|v| v.free_rank() == 0),
        applies: m.green().kind() == GreenKind::Representation,
    }
}

/// `sum over E of ind_E^G: sum R(E) -> R(G)` over a family of subgroup
/// classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InductionReport {
    pub subgroups: Vec<SubId>,
    pub matrix: IntMatrix,
    pub cokernel: Invariants,
    pub rank: usize,
    pub full_rank: bool,
}

fn induction_report(g: &Arc<FiniteGroup>, subgroups: Vec<SubId>) -> InductionReport {
    let r = GreenFunctor::representation(g);
    let w = g.whole();
    let blocks: Vec<IntMatrix> = subgroups.iter().map(|&e| r.maps().ind(e, w).clone()).collect();
    let mut matrix = IntMatrix::zeros(r.rank(w), 0);
    for b in &blocks {
        matrix = matrix.hstack(b);
    }
    let cokernel = AbGroup::free(r.rank(w)).cokernel(&matrix).group.invariants();
    let rank = smith_normal_form(&matrix).rank;
    InductionReport {
        full_rank: rank == r.rank(w),
        subgroups,
        matrix,
        cokernel,
        rank,
    }
}

/// Induction from elementary subgroup classes; the cokernel is trivial.
pub fn brauer_surjectivity(g: &Arc<FiniteGroup>) -> InductionReport {
    induction_report(g, g.elementary_subgroup_classes())
}

/// Induction from cyclic subgroup classes; the rank over Q is full.
pub fn artin_rank(g: &Arc<FiniteGroup>) -> InductionReport {
    induction_report(g, g.cyclic_subgroup_classes())
}
