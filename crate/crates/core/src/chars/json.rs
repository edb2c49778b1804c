//! JSON import and export of character tables.

use super::table::{character_table, conjugacy_classes, CharacterTable};
use crate::group::FiniteGroup;
use serde::{Deserialize, Serialize};
use zlinalg::{euler_phi, int, CycInt};

pub const TABLE_FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct TableDocument {
    pub format_version: u32,
    /// Elements of the subgroup (indices into the group's element list).
    pub subgroup: Vec<usize>,
    pub conductor: u32,
    pub class_representatives: Vec<usize>,
    /// `characters[i][k]`: power-basis coefficients of `chi_i` on class `k`.
    pub characters: Vec<Vec<Vec<i64>>>,
}

pub fn export_table(group: &FiniteGroup, t: &CharacterTable) -> TableDocument {
    TableDocument {
        format_version: TABLE_FORMAT_VERSION,
        subgroup: group.elements(t.subgroup).to_vec(),
        conductor: t.conductor,
        class_representatives: (0..t.num_classes()).map(|k| t.class_rep(k)).collect(),
        characters: t
            .chars
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.coeffs().iter().map(|c| zlinalg::int::to_i64(c).expect("small coefficient")).collect())
                    .collect()
            })
            .collect(),
    }
}

/// Rebuilds a table and re-verifies both orthogonality relations.
pub fn import_table(group: &FiniteGroup, doc: &TableDocument) -> Result<CharacterTable, String> {
    if doc.format_version != TABLE_FORMAT_VERSION {
        return Err(format!("unsupported format_version {}", doc.format_version));
    }
    let mut elems = doc.subgroup.clone();
    elems.sort();
    if elems.iter().any(|&x| x >= group.order()) {
        return Err("element index out of range".into());
    }
    let h = group.id_of_elements(&elems).ok_or("not a subgroup")?;
    let n = group.exponent();
    if doc.conductor == 0 || n % doc.conductor != 0 {
        return Err(format!("conductor {} does not divide the exponent {n}", doc.conductor));
    }
    let all = conjugacy_classes(group, h);
    if doc.class_representatives.len() != all.len() {
        return Err("wrong number of classes".into());
    }
    let mut classes = Vec::with_capacity(all.len());
    for &r in &doc.class_representatives {
        let c = all.iter().find(|c| c.contains(&r)).ok_or_else(|| format!("{r} is not in the subgroup"))?;
        if classes.contains(c) {
            return Err(format!("class of {r} listed twice"));
        }
        let mut c = c.clone();
        c.retain(|&x| x != r);
        c.insert(0, r);
        classes.push(c);
    }
    if doc.characters.len() != classes.len() {
        return Err("table is not square".into());
    }
    let phi = euler_phi(doc.conductor) as usize;
    let mut chars = Vec::new();
    for row in &doc.characters {
        if row.len() != classes.len() {
            return Err("table is not square".into());
        }
        let mut vals = Vec::new();
        for v in row {
            if v.len() != phi {
                return Err(format!("expected {phi} coefficients per value"));
            }
            vals.push(CycInt::from_coeffs(doc.conductor, v.iter().map(|&c| int(c)).collect()).lift(n));
        }
        chars.push(vals);
    }
    let t = CharacterTable::from_parts(group, h, n, classes, chars);
    t.verify()?;
    let reference = character_table(group, h);
    for row in &t.chars {
        let v: Vec<CycInt> = (0..reference.num_classes()).map(|k| row[t.class_of(reference.class_rep(k))].clone()).collect();
        if !reference.chars.contains(&v) {
            return Err("a row is not an irreducible character".into());
        }
    }
    Ok(t)
}
