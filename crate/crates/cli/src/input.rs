//! Groups, Green functors and named modules.
//!
//! A module argument is either a path to a JSON module file or a name:
//!
//! - `R`, the regular module; `0`, the zero module;
//! - `R/n`, the regular module modulo `n`;
//! - `R[X]`, the representable module of the G-set literal `X`;
//! - `corpus:k`, entry `k` of the seeded module corpus;
//! - `A|B`, the graded module with even part `A` and odd part `B`
//!   (a name without `|` is even).

use crate::gset::parse_gset;
use crate::Failure;
use anyhow::{anyhow, bail, Context, Result};
use specseq::acceptance::torsion_module;
use specseq::corpus::module_corpus;
use specseq::green::{GreenFunctor, GreenKind};
use specseq::group::FiniteGroup;
use specseq::mackey::json::{import_module, import_module_unchecked, ModuleDocument};
use specseq::mackey::{GradedModule, MackeyModule};
use std::path::Path;
use std::sync::Arc;

pub fn group(spec: &str) -> Result<Arc<FiniteGroup>> {
    FiniteGroup::from_spec(spec).map_err(|e| anyhow!("group {spec:?}: {e}"))
}

pub fn functor_kind(name: &str) -> Result<GreenKind> {
    GreenKind::from_name(name).ok_or_else(|| anyhow!("unknown functor {name:?} (expected representation or burnside)"))
}

fn is_file(arg: &str) -> bool {
    arg.ends_with(".json") || Path::new(arg).is_file()
}

pub fn read_document(path: &str) -> Result<ModuleDocument> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
    serde_json::from_str(&text).with_context(|| format!("{path}: malformed module file"))
}

/// The group and functor shared by the module arguments of one command.
pub struct Workspace {
    pub group: Arc<FiniteGroup>,
    pub green: Arc<GreenFunctor>,
    pub seed: u64,
}

impl Workspace {
    /// The group comes from `--group`, or else from the first module file.
    pub fn new(group_spec: Option<&str>, functor: Option<&str>, seed: u64, modules: &[&str]) -> Result<Workspace> {
        let file_doc = modules.iter().find(|m| is_file(m)).map(|m| read_document(m)).transpose()?;
        let spec = match (group_spec, &file_doc) {
            (Some(s), _) => s.to_string(),
            (None, Some(doc)) => doc.group.clone(),
            (None, None) => bail!("no group: pass --group or a module file"),
        };
        let kind = match (functor, &file_doc) {
            (Some(f), _) => functor_kind(f)?,
            (None, Some(doc)) => functor_kind(&doc.green)?,
            (None, None) => GreenKind::Representation,
        };
        let group = group(&spec)?;
        let green = match kind {
            GreenKind::Representation => GreenFunctor::representation(&group),
            GreenKind::Burnside => GreenFunctor::burnside(&group),
        };
        Ok(Workspace { group, green, seed })
    }

    /// Loads a module; files must pass the axiom check.
    pub fn module(&self, arg: &str) -> Result<GradedModule> {
        if is_file(arg) {
            let doc = read_document(arg)?;
            return import_module(&self.green, &doc).map_err(|e| {
                if e.contains("fails an axiom") {
                    anyhow!(Failure(format!("{arg}: {e}")))
                } else {
                    anyhow!("{arg}: {e}")
                }
            });
        }
        let mut parts = arg.splitn(2, '|');
        let even = self.named(parts.next().unwrap_or_default().trim())?;
        let odd = match parts.next() {
            Some(b) => self.named(b.trim())?,
            None => MackeyModule::zero(&self.green),
        };
        Ok(GradedModule::new(Arc::new(even), Arc::new(odd)))
    }

    /// Loads a module file without the axiom check.
    pub fn module_unchecked(&self, path: &str) -> Result<GradedModule> {
        let doc = read_document(path)?;
        import_module_unchecked(&self.green, &doc).map_err(|e| anyhow!("{path}: {e}"))
    }

    pub fn is_file(&self, arg: &str) -> bool {
        is_file(arg)
    }

    fn named(&self, name: &str) -> Result<MackeyModule> {
        let green = &self.green;
        if name == "R" {
            return Ok(MackeyModule::regular(green));
        }
        if name == "0" {
            return Ok(MackeyModule::zero(green));
        }
        if let Some(n) = name.strip_prefix("R/") {
            let n: i64 = n.parse().with_context(|| format!("bad modulus in {name:?}"))?;
            if n <= 0 {
                bail!("modulus in {name:?} must be positive");
            }
            return Ok(torsion_module(green, n));
        }
        if let Some(x) = name.strip_prefix("R[").and_then(|r| r.strip_suffix(']')) {
            return Ok(MackeyModule::representable(green, &parse_gset(&self.group, x)?));
        }
        if let Some(k) = name.strip_prefix("corpus:") {
            let k: usize = k.parse().with_context(|| format!("bad corpus index in {name:?}"))?;
            let corpus = module_corpus(green, self.seed);
            let n = corpus.len();
            return corpus
                .into_iter()
                .nth(k)
                .map(|e| e.module)
                .ok_or_else(|| anyhow!("corpus index {k} out of range (the corpus has {n} modules)"));
        }
        bail!("unknown module {name:?} (expected R, 0, R/n, R[X], corpus:k, A|B or a .json file)")
    }
}
