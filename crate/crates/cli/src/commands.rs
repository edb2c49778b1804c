use crate::gset::parse_gset;
use crate::input::{group, Workspace};
use crate::Failure;
use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use specseq::acceptance::{run_criterion, AcceptanceConfig, CRITERIA};
use specseq::bouc::BoucCategory;
use specseq::chars::{character_table, export_table, import_table, BurnsideRing, TableDocument};
use specseq::group::FiniteGroup;
use specseq::homalg::{graded_ext, graded_tor, resolve as resolve_module};
use specseq::mackey::json::export_module;
use specseq::mackey::GradedModule;
use specseq::spectral::{artin_rank, brauer_surjectivity, kunneth_e2, uct_e2, E2Document, E2Kind, E2Page, InvariantsDocument};
use std::path::PathBuf;
use zlinalg::Invariants;

/// Directory for cached E2 pages.
pub const CACHE_ENV: &str = "SPECSEQ_CACHE_DIR";

fn print_json(v: &impl serde::Serialize) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn inv_json(x: &Invariants) -> Result<Value> {
    let doc = InvariantsDocument::from_invariants(x).map_err(|e| anyhow!(e))?;
    Ok(serde_json::to_value(doc)?)
}

fn flags(g: &FiniteGroup, h: specseq::group::SubId) -> Vec<&'static str> {
    let d = g.subgroup(h);
    let mut out = Vec::new();
    if d.is_cyclic {
        out.push("cyclic");
    }
    if d.is_elementary {
        out.push("elementary");
    }
    if d.is_normal {
        out.push("normal");
    }
    out
}

pub fn group_info(spec: &str, json: bool) -> Result<()> {
    let g = group(spec)?;
    let whole = g.whole();
    if json {
        let classes: Vec<Value> = g
            .classes()
            .iter()
            .enumerate()
            .map(|(k, c)| {
                json!({
                    "class": k,
                    "order": g.sub_order(c.rep),
                    "size": c.members.len(),
                    "generators": g.minimal_generators(c.rep).iter().map(|&x| g.elem_label(x)).collect::<Vec<_>>(),
                    "flags": flags(&g, c.rep),
                })
            })
            .collect();
        return print_json(&json!({
            "group": g.name(),
            "order": g.order(),
            "exponent": g.exponent(),
            "elements": g.elements(whole).iter().map(|&x| g.elem_label(x)).collect::<Vec<_>>(),
            "subgroup_classes": classes,
        }));
    }
    println!("group {}: order {}, exponent {}", g.name(), g.order(), g.exponent());
    println!("elements:");
    for &x in g.elements(whole) {
        println!("  {x:>3}  {}  (order {})", g.elem_label(x), g.elem_order(x));
    }
    println!("subgroup classes: {}", g.classes().len());
    for (k, c) in g.classes().iter().enumerate() {
        println!(
            "  #{k:<3} order {:<3} conjugates {:<3} {}  {}",
            g.sub_order(c.rep),
            c.members.len(),
            g.describe_subgroup(c.rep),
            flags(&g, c.rep).join(" ")
        );
    }
    Ok(())
}

pub fn chartable(spec: &str, export: Option<&str>, import: Option<&str>, json: bool) -> Result<()> {
    let g = group(spec)?;
    let t = match import {
        Some(path) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
            let doc: TableDocument = serde_json::from_str(&text).with_context(|| format!("{path}: malformed table file"))?;
            import_table(&g, &doc).map_err(|e| anyhow!(Failure(format!("{path}: {e}"))))?
        }
        None => character_table(&g, g.whole()),
    };
    let doc = export_table(&g, &t);
    if let Some(path) = export {
        std::fs::write(path, serde_json::to_string_pretty(&doc)? + "\n").with_context(|| format!("writing {path}"))?;
    }
    if json {
        return print_json(&doc);
    }
    if import.is_some() {
        println!("table verified: orthogonality holds and every row is irreducible");
    }
    let n = t.num_classes();
    let head: Vec<String> = (0..n).map(|k| g.elem_label(t.class_rep(k))).collect();
    let sizes: Vec<String> = (0..n).map(|k| t.class_size(k).to_string()).collect();
    let rows: Vec<Vec<String>> = t.chars.iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect();
    let width: Vec<usize> = (0..n)
        .map(|k| rows.iter().map(|r| r[k].len()).chain([head[k].len(), sizes[k].len()]).max().unwrap_or(0))
        .collect();
    let line = |label: &str, cells: &[String]| {
        let body: Vec<String> = cells.iter().zip(&width).map(|(c, w)| format!("{c:>w$}")).collect();
        println!("{label:<6} {}", body.join("  "));
    };
    println!("character table of {} (values in Z[zeta_{}])", g.name(), t.conductor);
    line("class", &head);
    line("size", &sizes);
    for (i, r) in rows.iter().enumerate() {
        line(&format!("chi{i}"), r);
    }
    Ok(())
}

pub fn tom(spec: &str, json: bool) -> Result<()> {
    let g = group(spec)?;
    let b = BurnsideRing::new(&g);
    let local = b.local(g.whole());
    let names: Vec<String> = local.basis.iter().map(|&h| g.describe_subgroup(h)).collect();
    // row j: the orbit G/K_j; column i: fixed points under K_i
    let rows: Vec<Vec<i64>> = (0..names.len()).map(|j| (0..names.len()).map(|i| local.marks[i][j]).collect()).collect();
    if json {
        return print_json(&json!({"group": g.name(), "subgroups": names, "marks": rows}));
    }
    println!("table of marks of {}: |(G/K)^H|, rows K, columns H", g.name());
    let w = rows.iter().flatten().map(|x| x.to_string().len()).max().unwrap_or(1).max(2);
    for (j, r) in rows.iter().enumerate() {
        let cells: Vec<String> = r.iter().map(|x| format!("{x:>w$}")).collect();
        println!("  H{j:<2} {}   G/{}", cells.join(" "), names[j]);
    }
    Ok(())
}

pub fn bouc_hom(ws: &Workspace, x: &str, y: &str, json: bool) -> Result<()> {
    let xs = parse_gset(&ws.group, x)?;
    let ys = parse_gset(&ws.group, y)?;
    let cat = BoucCategory::new(&ws.green);
    let basis = cat.hom_basis(&xs, &ys);
    let g = &ws.group;
    if json {
        let labels: Vec<Value> = basis
            .labels
            .iter()
            .map(|l| {
                json!({
                    "x_orbit": l.x_orbit,
                    "y_orbit": l.y_orbit,
                    "double_coset": g.elem_label(l.double_coset),
                    "stabilizer": g.describe_subgroup(l.stabilizer),
                    "basis": l.basis,
                })
            })
            .collect();
        return print_json(&json!({"x": xs.describe(), "y": ys.describe(), "rank": basis.rank(), "basis": labels}));
    }
    println!(
        "hom {} -> {} over {} ({}): rank {}",
        xs.describe(),
        ys.describe(),
        g.name(),
        ws.green.kind().name(),
        basis.rank()
    );
    print!("{basis}");
    Ok(())
}

pub fn module_check(ws: &Workspace, m: &str, json: bool) -> Result<()> {
    let module = if ws.is_file(m) { ws.module_unchecked(m)? } else { ws.module(m)? };
    let reports = [module.part(0).check_axioms(), module.part(1).check_axioms()];
    if json {
        print_json(&json!({
            "module": m,
            "degrees": reports.iter().map(|r| json!({"passed": r.passed(), "failures": r.failures})).collect::<Vec<_>>(),
        }))?;
    } else {
        for (k, r) in reports.iter().enumerate() {
            println!("degree {k}: {r}");
        }
    }
    let failed: Vec<String> = reports
        .iter()
        .enumerate()
        .filter_map(|(k, r)| r.failures.first().map(|f| format!("degree {k}: {f}")))
        .collect();
    if let Some(f) = failed.first() {
        bail!(Failure(format!("{m}: {f}")));
    }
    Ok(())
}

pub fn module_show(ws: &Workspace, m: &str, json: bool) -> Result<()> {
    let module = ws.module(m)?;
    if json {
        return print_json(&export_module(&module).map_err(|e| anyhow!(e))?);
    }
    let g = &ws.group;
    println!("module {m} over {} ({})", g.name(), ws.green.kind().name());
    for k in 0..2 {
        println!("degree {k}:");
        for (c, inv) in module.part(k).class_invariants().iter().enumerate() {
            println!("  #{c:<3} {:<24} {inv}", g.describe_subgroup(g.classes()[c].rep));
        }
    }
    Ok(())
}

fn load_pair(ws: &Workspace, m: &str, n: &str) -> Result<(GradedModule, GradedModule)> {
    Ok((ws.module(m)?, ws.module(n)?))
}

fn dimension_note(d: Option<usize>) -> String {
    match d {
        Some(d) => format!("projective dimension {d}"),
        None => "resolution truncated".to_string(),
    }
}

pub fn hom(ws: &Workspace, m: &str, n: &str, json: bool) -> Result<()> {
    let (a, b) = load_pair(ws, m, n)?;
    let t = graded_ext(&a, &b, 0);
    if json {
        return print_json(&json!({"even": inv_json(&t.cells[0][0])?, "odd": inv_json(&t.cells[0][1])?}));
    }
    println!("Hom({m}, {n})_0 = {}", t.cells[0][0]);
    println!("Hom({m}, {n})_1 = {}", t.cells[0][1]);
    Ok(())
}

pub fn ext(ws: &Workspace, m: &str, n: &str, max_p: usize, json: bool) -> Result<()> {
    let (a, b) = load_pair(ws, m, n)?;
    let t = graded_ext(&a, &b, max_p);
    if json {
        let cells = t
            .cells
            .iter()
            .map(|c| Ok(json!([inv_json(&c[0])?, inv_json(&c[1])?])))
            .collect::<Result<Vec<_>>>()?;
        return print_json(&json!({"ext": cells, "dimension": t.dimension}));
    }
    println!("Ext^p({m}, {n}), {}", dimension_note(t.dimension));
    for (p, c) in t.cells.iter().enumerate() {
        println!("  p = {p}:  even {}  odd {}", c[0], c[1]);
    }
    Ok(())
}

pub fn tor(ws: &Workspace, m: &str, n: &str, max_p: usize, json: bool) -> Result<()> {
    let (a, b) = load_pair(ws, m, n)?;
    let t = graded_tor(&a, &b, max_p);
    let g = &ws.group;
    if json {
        let cells = t
            .cells
            .iter()
            .map(|c| {
                let side = |v: &Vec<Invariants>| v.iter().map(inv_json).collect::<Result<Vec<_>>>();
                Ok(json!([side(&c[0])?, side(&c[1])?]))
            })
            .collect::<Result<Vec<_>>>()?;
        return print_json(&json!({"tor": cells, "dimension": t.dimension}));
    }
    println!("Tor_p({m}, {n}) per subgroup class, {}", dimension_note(t.dimension));
    for (p, c) in t.cells.iter().enumerate() {
        println!("  p = {p}:");
        for (k, class) in g.classes().iter().enumerate() {
            println!("    #{k:<3} {:<24} even {}  odd {}", g.describe_subgroup(class.rep), c[0][k], c[1][k]);
        }
    }
    Ok(())
}

fn cache_path(kind: E2Kind, a: &GradedModule, b: &GradedModule, max_p: usize) -> Option<PathBuf> {
    let dir = std::env::var_os(CACHE_ENV)?;
    let da = serde_json::to_string(&export_module(a).ok()?).ok()?;
    let db = serde_json::to_string(&export_module(b).ok()?).ok()?;
    let mut h = Sha256::new();
    h.update(format!("{}\n{max_p}\n{da}\n{db}", kind.name()));
    let key: String = h.finalize().iter().map(|x| format!("{x:02x}")).collect();
    Some(PathBuf::from(dir).join(format!("e2-{key}.json")))
}

fn compute_e2(kind: E2Kind, a: &GradedModule, b: &GradedModule, max_p: usize) -> Result<E2Page> {
    let page = match kind {
        E2Kind::Uct => uct_e2(a, b, max_p),
        E2Kind::Kunneth => kunneth_e2(a, b, max_p),
    };
    page.map_err(|e| anyhow!(e))
}

pub fn e2(ws: &Workspace, kind: E2Kind, m: &str, n: &str, max_p: usize, json: bool) -> Result<()> {
    let (a, b) = load_pair(ws, m, n)?;
    let path = cache_path(kind, &a, &b, max_p);
    let cached = path
        .as_ref()
        .and_then(|p| std::fs::read_to_string(p).ok())
        .and_then(|text| serde_json::from_str::<E2Document>(&text).ok())
        .and_then(|doc| E2Page::from_document(&doc).ok());
    let page = match cached {
        Some(p) => p,
        None => {
            let page = compute_e2(kind, &a, &b, max_p)?;
            if let Some(p) = &path {
                let doc = page.to_document().map_err(|e| anyhow!(e))?;
                if let Some(dir) = p.parent() {
                    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
                }
                std::fs::write(p, serde_json::to_string_pretty(&doc)? + "\n").with_context(|| format!("writing {}", p.display()))?;
            }
            page
        }
    };
    if json {
        return print_json(&page.to_document().map_err(|e| anyhow!(e))?);
    }
    println!("kA = {m}, kB = {n}");
    println!("{}", page.to_string().trim_end());
    Ok(())
}

pub fn resolve(ws: &Workspace, m: &str, max_len: usize, json: bool) -> Result<()> {
    let module = ws.module(m)?;
    let mut out = Vec::new();
    let mut exact = true;
    for k in 0..2 {
        let r = resolve_module(module.part(k), max_len);
        let cert = r.certify();
        exact &= cert.is_exact();
        if json {
            out.push(json!({
                "degree": k,
                "objects": r.objects.iter().map(|x| x.describe()).collect::<Vec<_>>(),
                "complete": r.complete,
                "d_squared_zero": cert.d_squared_zero,
                "exact": cert.is_exact(),
            }));
            continue;
        }
        println!("degree {k}: {}", if r.complete { format!("length {}", r.length()) } else { "truncated".into() });
        for (i, x) in r.objects.iter().enumerate() {
            println!("  X_{i} = {}", x.describe());
        }
        println!("  d o d = 0: {}", cert.d_squared_zero);
        for l in &cert.levels {
            let hs: Vec<String> = l.homology.iter().map(|h| h.to_string()).collect();
            println!(
                "  at {}: surjective {}, homology [{}]",
                ws.group.describe_subgroup(l.subgroup),
                l.surjective,
                hs.join(", ")
            );
        }
    }
    if json {
        print_json(&out)?;
    }
    if !exact {
        bail!(Failure(format!("the resolution of {m} is not exact")));
    }
    Ok(())
}

pub fn induction(spec: &str, brauer: bool, json: bool) -> Result<()> {
    let g = group(spec)?;
    let r = if brauer { brauer_surjectivity(&g) } else { artin_rank(&g) };
    let ok = if brauer { r.cokernel.is_zero() } else { r.full_rank };
    let names: Vec<String> = r.subgroups.iter().map(|&h| g.describe_subgroup(h)).collect();
    if json {
        print_json(&json!({
            "group": g.name(),
            "subgroups": names,
            "cokernel": inv_json(&r.cokernel)?,
            "rank": r.rank,
            "full_rank": r.full_rank,
            "passed": ok,
        }))?;
    } else {
        let family = if brauer { "elementary" } else { "cyclic" };
        println!("induction from {family} subgroups of {}: {}", g.name(), names.join(", "));
        println!("  rank {} of {}, cokernel {}", r.rank, r.matrix.rows(), r.cokernel);
    }
    if !ok {
        let what = if brauer { "cokernel is nonzero" } else { "rank is not full" };
        bail!(Failure(format!("{}: {what}", g.name())));
    }
    Ok(())
}

pub fn corpus_run(seed: u64, criteria: &[usize], json: bool) -> Result<()> {
    let ids: Vec<usize> = if criteria.is_empty() { (1..=CRITERIA).collect() } else { criteria.to_vec() };
    if let Some(bad) = ids.iter().find(|&&i| i == 0 || i > CRITERIA) {
        bail!("no criterion {bad} (criteria are 1..={CRITERIA})");
    }
    let config = AcceptanceConfig {
        seed,
        ..AcceptanceConfig::default()
    };
    let mut reports = Vec::new();
    for id in ids {
        let r = run_criterion(id, &config);
        if !json {
            println!("{r}");
        }
        reports.push(r);
    }
    if json {
        let v: Vec<Value> = reports
            .iter()
            .map(|r| json!({"id": r.id, "title": r.title, "checks": r.checks, "passed": r.passed(), "failures": r.failures}))
            .collect();
        print_json(&v)?;
    }
    let failed: Vec<String> = reports.iter().filter(|r| !r.passed()).map(|r| r.id.to_string()).collect();
    if !failed.is_empty() {
        bail!(Failure(format!("criteria {} failed", failed.join(", "))));
    }
    Ok(())
}
