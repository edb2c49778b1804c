//! JSON module files.
//!
//! A file names its group and Green functor and lists, per degree, the value
//! at each subgroup class and the matrices of [`RepData`]. Subgroups are
//! referenced by class index and elements by cycle notation; a structure
//! matrix is keyed by `(kind, source class, target class, element)`.

use super::{GradedModule, MackeyModule, RepData};
use crate::green::GreenFunctor;
use crate::group::FiniteGroup;
use serde::{Deserialize, Serialize};
use std::sync::Arc;
use zlinalg::{int, AbGroup, IntMatrix};

pub const MODULE_FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ModuleDocument {
    pub format_version: u32,
    pub group: String,
    pub green: String,
    pub degrees: Vec<PartDocument>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct PartDocument {
    pub classes: Vec<ClassDocument>,
    pub maps: Vec<MapDocument>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ClassDocument {
    pub class: usize,
    /// Generators of the class representative.
    pub generators: Vec<String>,
    /// `M[S] = Z/m_1 + ... + Z/m_k`; 0 stands for `Z`.
    pub moduli: Vec<i64>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct MapDocument {
    /// `res`, `ind`, `con` or `act`.
    pub kind: String,
    pub source: usize,
    pub target: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<usize>,
    pub matrix: Vec<Vec<i64>>,
}

fn matrix_rows(m: &IntMatrix) -> Result<Vec<Vec<i64>>, String> {
    m.to_i64_rows().ok_or_else(|| "matrix entry does not fit in 64 bits".to_string())
}

fn matrix_from(rows: &[Vec<i64>], nrows: usize, ncols: usize) -> Result<IntMatrix, String> {
    if rows.len() != nrows || rows.iter().any(|r| r.len() != ncols) {
        return Err(format!("expected a {nrows} x {ncols} matrix"));
    }
    let mut m = IntMatrix::zeros(nrows, ncols);
    for (i, r) in rows.iter().enumerate() {
        for (j, &x) in r.iter().enumerate() {
            m[(i, j)] = int(x);
        }
    }
    Ok(m)
}

fn export_part(m: &MackeyModule) -> Result<PartDocument, String> {
    let g = m.group();
    let d = RepData::from_module(m);
    let reps = g.class_reps();
    let mut classes = Vec::new();
    for (c, &s) in reps.iter().enumerate() {
        let moduli = d.values[c]
            .moduli()
            .iter()
            .map(|x| zlinalg::int::to_i64(x).ok_or("modulus does not fit in 64 bits"))
            .collect::<Result<_, _>>()?;
        classes.push(ClassDocument {
            class: c,
            generators: g.minimal_generators(s).iter().map(|&x| g.elem_label(x)).collect(),
            moduli,
        });
    }
    let mut maps = Vec::new();
    for c in 0..reps.len() {
        for (l, mat) in &d.res[c] {
            maps.push(MapDocument {
                kind: "res".into(),
                source: c,
                target: g.class_of(*l),
                element: Some(g.elem_label(g.transporter(*l))),
                basis: None,
                matrix: matrix_rows(mat)?,
            });
        }
        for (l, mat) in &d.ind[c] {
            maps.push(MapDocument {
                kind: "ind".into(),
                source: g.class_of(*l),
                target: c,
                element: Some(g.elem_label(g.transporter(*l))),
                basis: None,
                matrix: matrix_rows(mat)?,
            });
        }
        for (n, mat) in &d.normalizer[c] {
            maps.push(MapDocument {
                kind: "con".into(),
                source: c,
                target: c,
                element: Some(g.elem_label(*n)),
                basis: None,
                matrix: matrix_rows(mat)?,
            });
        }
        for (b, mat) in d.act[c].iter().enumerate() {
            maps.push(MapDocument {
                kind: "act".into(),
                source: c,
                target: c,
                element: None,
                basis: Some(b),
                matrix: matrix_rows(mat)?,
            });
        }
    }
    Ok(PartDocument { classes, maps })
}

pub fn export_module(m: &GradedModule) -> Result<ModuleDocument, String> {
    Ok(ModuleDocument {
        format_version: MODULE_FORMAT_VERSION,
        group: m.green().group().name().to_string(),
        green: m.green().kind().name().to_string(),
        degrees: vec![export_part(m.part(0))?, export_part(m.part(1))?],
    })
}

fn read_part(green: &Arc<GreenFunctor>, doc: &PartDocument) -> Result<MackeyModule, String> {
    let g: &Arc<FiniteGroup> = green.group();
    let reps = g.class_reps();
    let nc = reps.len();
    if doc.classes.len() != nc {
        return Err(format!("classes: expected {nc} subgroup classes, found {}", doc.classes.len()));
    }
    let mut values = vec![None; nc];
    for (i, cd) in doc.classes.iter().enumerate() {
        (|| -> Result<(), String> {
            if cd.class >= nc {
                return Err(format!("class index {} out of range", cd.class));
            }
            let gens = cd
                .generators
                .iter()
                .map(|s| g.element_from_cycles(s).map_err(|e| e.to_string()))
                .collect::<Result<Vec<_>, _>>()?;
            if g.generate(&gens) != reps[cd.class] {
                return Err(format!(
                    "class {}: generators do not give the representative {}",
                    cd.class,
                    g.describe_subgroup(reps[cd.class])
                ));
            }
            if cd.moduli.iter().any(|&m| m < 0 || m == 1) {
                return Err(format!("class {}: moduli must be 0 or at least 2", cd.class));
            }
            values[cd.class] = Some(AbGroup::from_moduli(cd.moduli.iter().map(|&m| int(m)).collect()));
            Ok(())
        })()
        .map_err(|e| format!("classes[{i}]: {e}"))?;
    }
    let values: Vec<AbGroup> = values
        .into_iter()
        .enumerate()
        .map(|(c, v)| v.ok_or_else(|| format!("classes: class {c} missing")))
        .collect::<Result<_, _>>()?;
    let size = |c: usize| values[c].ngens();
    let mut data = RepData {
        values: values.clone(),
        normalizer: vec![Vec::new(); nc],
        res: vec![Vec::new(); nc],
        ind: vec![Vec::new(); nc],
        act: (0..nc).map(|c| vec![IntMatrix::zeros(0, 0); green.rank(reps[c])]).collect(),
    };
    let mut have_act: Vec<Vec<bool>> = (0..nc).map(|c| vec![false; green.rank(reps[c])]).collect();
    for (i, md) in doc.maps.iter().enumerate() {
        (|| -> Result<(), String> {
            if md.source >= nc || md.target >= nc {
                return Err(format!("{} entry: class index out of range", md.kind));
            }
            let elem = || -> Result<usize, String> {
                let s = md.element.as_ref().ok_or_else(|| format!("{} entry needs an element", md.kind))?;
                g.element_from_cycles(s).map_err(|e| e.to_string())
            };
            match md.kind.as_str() {
                "res" | "ind" => {
                    let (hc, lc) = if md.kind == "res" { (md.source, md.target) } else { (md.target, md.source) };
                    let t = elem()?;
                    let l = g.conj(t, reps[lc]);
                    if g.transporter(l) != t {
                        return Err(format!("{} entry: element {} is not the transporter of its subgroup", md.kind, g.elem_label(t)));
                    }
                    let h = reps[hc];
                    if !g.is_subgroup(l, h) {
                        return Err(format!("{} entry: {} is not contained in {}", md.kind, g.describe_subgroup(l), g.describe_subgroup(h)));
                    }
                    if md.kind == "res" {
                        data.res[hc].push((l, matrix_from(&md.matrix, size(lc), size(hc))?));
                    } else {
                        data.ind[hc].push((l, matrix_from(&md.matrix, size(hc), size(lc))?));
                    }
                }
                "con" => {
                    if md.source != md.target {
                        return Err("con entry must have equal source and target class".into());
                    }
                    let n = elem()?;
                    data.normalizer[md.source].push((n, matrix_from(&md.matrix, size(md.source), size(md.source))?));
                }
                "act" => {
                    if md.source != md.target {
                        return Err("act entry must have equal source and target class".into());
                    }
                    let c = md.source;
                    let b = md.basis.ok_or("act entry needs a basis index")?;
                    if b >= green.rank(reps[c]) {
                        return Err(format!("act entry: basis index {b} out of range"));
                    }
                    data.act[c][b] = matrix_from(&md.matrix, size(c), size(c))?;
                    have_act[c][b] = true;
                }
                other => return Err(format!("unknown map kind {other:?}")),
            }
            Ok(())
        })()
        .map_err(|e| format!("maps[{i}]: {e}"))?;
    }
    if let Some(c) = have_act.iter().position(|v| v.iter().any(|&x| !x)) {
        return Err(format!("maps: missing action matrices at class {c}"));
    }
    data.build(green).map_err(|e| format!("maps: {e}"))
}

/// Loads a graded module without checking the axioms. Errors name the
/// offending field.
pub fn import_module_unchecked(green: &Arc<GreenFunctor>, doc: &ModuleDocument) -> Result<GradedModule, String> {
    if doc.format_version != MODULE_FORMAT_VERSION {
        return Err(format!("format_version: unsupported version {}", doc.format_version));
    }
    if doc.group != green.group().name() {
        return Err(format!("group: module is over {}, not {}", doc.group, green.group().name()));
    }
    if doc.green != green.kind().name() {
        return Err(format!("green: module is over the {} functor, not {}", doc.green, green.kind().name()));
    }
    let part = |k: usize| read_part(green, &doc.degrees[k]).map_err(|e| format!("degrees[{k}].{e}"));
    let (even, odd) = match doc.degrees.len() {
        1 => (part(0)?, MackeyModule::zero(green)),
        2 => (part(0)?, part(1)?),
        n => return Err(format!("degrees: expected 1 or 2 degrees, found {n}")),
    };
    Ok(GradedModule::new(Arc::new(even), Arc::new(odd)))
}

/// Loads a graded module; the result has passed `check_axioms`.
pub fn import_module(green: &Arc<GreenFunctor>, doc: &ModuleDocument) -> Result<GradedModule, String> {
    let m = import_module_unchecked(green, doc)?;
    for k in 0..2 {
        let report = m.part(k).check_axioms();
        if let Some(f) = report.failures.first() {
            return Err(format!("degree {k} fails an axiom: {f}"));
        }
    }
    Ok(m)
}
