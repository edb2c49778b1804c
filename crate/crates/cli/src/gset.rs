//! G-set literals: `G/H` orbits joined by `+` (disjoint union) and `*`
//! (product), `*` binding tighter. `H` is one of
//!
//! - `1` or `G`,
//! - `#k`, the representative of subgroup class `k` (see `group info`),
//! - `<a, b, ...>`, generated by elements given as indices or in cycle
//!   notation, e.g. `<(0,1,2)>` or `<3>`,
//! - a group name such as `C2`, `Z/2xZ/2` or `S3`, matched against the
//!   subgroup classes by element-order statistics; ambiguous names are
//!   rejected.
//!
//! `pt` is `G/G` and `0` the empty G-set.

use anyhow::{anyhow, bail, Context, Result};
use specseq::group::{FiniteGroup, GSet, SubId};
use std::sync::Arc;

pub fn parse_gset(g: &Arc<FiniteGroup>, text: &str) -> Result<GSet> {
    let terms = split_top(text, '+');
    let mut out = GSet::empty(g);
    for term in terms {
        let mut prod: Option<GSet> = None;
        for atom in split_top(&term, '*') {
            let x = parse_atom(g, atom.trim()).with_context(|| format!("in G-set {text:?}"))?;
            prod = Some(match prod {
                None => x,
                Some(p) => p.product(&x).set.clone(),
            });
        }
        out = out.disjoint_union(&prod.ok_or_else(|| anyhow!("empty term in G-set {text:?}"))?);
    }
    Ok(out)
}

/// Splits at `sep` outside `<...>` and `(...)`.
fn split_top(s: &str, sep: char) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '<' | '(' => depth += 1,
            '>' | ')' => depth -= 1,
            _ => {}
        }
        if ch == sep && depth == 0 {
            out.push(std::mem::take(&mut cur));
        } else {
            cur.push(ch);
        }
    }
    out.push(cur);
    out
}

fn parse_atom(g: &Arc<FiniteGroup>, atom: &str) -> Result<GSet> {
    match atom {
        "pt" => return Ok(GSet::point(g)),
        "0" => return Ok(GSet::empty(g)),
        _ => {}
    }
    let sub = atom
        .strip_prefix("G/")
        .ok_or_else(|| anyhow!("expected an orbit G/H, pt or 0, found {atom:?}"))?;
    Ok(GSet::orbit_set(g, parse_subgroup(g, sub)?))
}

pub fn parse_subgroup(g: &Arc<FiniteGroup>, text: &str) -> Result<SubId> {
    let t = text.trim();
    if t == "1" {
        return Ok(g.trivial());
    }
    if t == "G" {
        return Ok(g.whole());
    }
    if let Some(k) = t.strip_prefix('#') {
        let k: usize = k.parse().with_context(|| format!("bad class index {k:?}"))?;
        let classes = g.classes();
        return classes
            .get(k)
            .map(|c| c.rep)
            .ok_or_else(|| anyhow!("class index {k} out of range (the group has {} classes)", classes.len()));
    }
    if let Some(body) = t.strip_prefix('<').and_then(|b| b.strip_suffix('>')) {
        let gens = parse_elements(g, body)?;
        return Ok(g.generate(&gens));
    }
    by_name(g, t)
}

fn parse_elements(g: &FiniteGroup, body: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    let mut rest = body.trim();
    while !rest.is_empty() {
        if rest.starts_with('(') {
            // consecutive cycles form one element
            let mut end = 0;
            let bytes = rest.as_bytes();
            while end < bytes.len() && bytes[end] == b'(' {
                end += rest[end..].find(')').ok_or_else(|| anyhow!("unclosed cycle in {body:?}"))? + 1;
            }
            out.push(g.element_from_cycles(&rest[..end]).map_err(|e| anyhow!("{e}"))?);
            rest = &rest[end..];
        } else {
            let end = rest.find(',').unwrap_or(rest.len());
            let tok = rest[..end].trim();
            let i: usize = tok.parse().with_context(|| format!("bad element {tok:?}"))?;
            if i >= g.order() {
                bail!("element index {i} out of range (order {})", g.order());
            }
            out.push(i);
            rest = &rest[end..];
        }
        rest = rest.trim_start();
        if let Some(r) = rest.strip_prefix(',') {
            rest = r.trim_start();
        } else if !rest.is_empty() {
            bail!("expected ',' in {body:?}");
        }
    }
    Ok(out)
}

/// Sorted element orders, which tell apart the groups of order below 16.
fn order_profile(g: &FiniteGroup, elems: &[usize]) -> Vec<u32> {
    let mut v: Vec<u32> = elems.iter().map(|&a| g.elem_order(a)).collect();
    v.sort_unstable();
    v
}

fn by_name(g: &Arc<FiniteGroup>, name: &str) -> Result<SubId> {
    let spec = match name.strip_prefix('C').and_then(|n| n.parse::<usize>().ok()) {
        Some(n) => format!("Z/{n}"),
        None => name.to_string(),
    };
    let model = FiniteGroup::from_spec(&spec).map_err(|e| anyhow!("{name:?} is not a subgroup description: {e}"))?;
    let want = order_profile(&model, model.elements(model.whole()));
    let hits: Vec<usize> = g
        .classes()
        .iter()
        .enumerate()
        .filter(|(_, c)| order_profile(g, g.elements(c.rep)) == want)
        .map(|(k, _)| k)
        .collect();
    match hits.as_slice() {
        [k] => Ok(g.classes()[*k].rep),
        [] => bail!("{} has no subgroup isomorphic to {name}", g.name()),
        many => bail!(
            "{name} matches subgroup classes {}; use #k",
            many.iter().map(|k| format!("#{k}")).collect::<Vec<_>>().join(", ")
        ),
    }
}
