use clap::ValueEnum;
use serde::Serialize;

use mvlab::amop::{am, verify_theorem, Theorem};
use mvlab::crystal::{stats, MvCrystal};
use mvlab::exec::Exec;
use mvlab::io::{bz_to_json, BzJson};
use mvlab::polytope::{compare, is_mv, validate_edge_inequalities, BZDatum, Containment};

use crate::target::Target;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Selector {
    Thm31,
    Thm32,
    Thm33,
    AmConjecture,
    Axioms,
    Validators,
}

#[derive(Debug, Serialize)]
pub struct ViolationJson {
    pub j: usize,
    pub detail: String,
    pub polytope: BzJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub containment: Option<Containment>,
}

#[derive(Debug, Serialize)]
pub struct CheckReport {
    pub check: Selector,
    pub root_system: String,
    pub depth: usize,
    pub polytopes: usize,
    pub checked: usize,
    pub passed: usize,
    /// For `am-conjecture`: whether every violator still has `AM_j(P) ⊆ f̃_j(P)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub containment_holds: Option<bool>,
    pub violations: Vec<ViolationJson>,
}

impl CheckReport {
    pub fn clean(&self) -> bool {
        self.violations.is_empty()
    }
}

struct Raw {
    index: usize,
    j: usize,
    detail: String,
}

pub fn run(
    target: &Target,
    label: &str,
    depth: usize,
    set: &[BZDatum],
    selector: Selector,
    exec: Exec,
) -> mvlab::Result<CheckReport> {
    let crystal = target.crystal();
    let rank = crystal.rank();
    let (checked, mut raw) = match selector {
        Selector::Thm31 | Selector::Thm32 | Selector::Thm33 | Selector::AmConjecture => {
            let which = match selector {
                Selector::Thm31 => Theorem::Thm31,
                Selector::Thm32 => Theorem::Thm32,
                Selector::Thm33 => Theorem::Thm33,
                _ => Theorem::AmConjecture,
            };
            let report = verify_theorem(crystal, set, which, exec);
            let index: std::collections::HashMap<&[i64], usize> =
                set.iter().enumerate().map(|(k, m)| (m.entries(), k)).collect();
            let raw: Vec<Raw> = report
                .violations
                .into_iter()
                .map(|v| Raw { index: index[v.entries.as_slice()], j: v.j - 1, detail: v.detail })
                .collect();
            (report.checked, raw)
        }
        Selector::Axioms => {
            let work: Vec<(usize, usize)> = (0..set.len()).flat_map(|p| (0..rank).map(move |j| (p, j))).collect();
            let found = exec.map(&work, |&(p, j)| {
                axioms(crystal, &set[p], j).err().map(|detail| Raw { index: p, j, detail })
            });
            (work.len(), found.into_iter().flatten().collect())
        }
        Selector::Validators => {
            let idx: Vec<usize> = (0..set.len()).collect();
            let found = exec.map(&idx, |&p| validators(target, &set[p]).err().map(|detail| Raw { index: p, j: 0, detail }));
            (set.len(), found.into_iter().flatten().collect())
        }
    };

    raw.sort_by_key(|r| (r.index, r.j));
    let mut violations = Vec::with_capacity(raw.len());
    let mut containment_holds = (selector == Selector::AmConjecture).then_some(true);
    for r in raw {
        let m = &set[r.index];
        let containment = if selector == Selector::AmConjecture {
            let f = crystal.ftilde(m, r.j)?;
            let a = am(crystal, m, r.j)?;
            let c = compare(&f, &a.datum)?;
            if !matches!(c, Containment::Equal | Containment::SecondInsideFirst) {
                containment_holds = Some(false);
            }
            Some(c)
        } else {
            None
        };
        violations.push(ViolationJson { j: r.j + 1, detail: r.detail, polytope: bz_to_json(m), containment });
    }
    Ok(CheckReport {
        check: selector,
        root_system: label.to_string(),
        depth,
        polytopes: set.len(),
        checked,
        passed: checked - violations.len(),
        containment_holds,
        violations,
    })
}

/// Crystal axioms (1)-(4) at `(m, j)`.
fn axioms(crystal: &dyn MvCrystal, m: &BZDatum, j: usize) -> Result<(), String> {
    let err = |e: mvlab::Error| e.to_string();
    let s = stats(crystal, m, j).map_err(err)?;
    let f = crystal.ftilde(m, j).map_err(err)?;
    let sf = stats(crystal, &f, j).map_err(err)?;
    let mut lowered = s.wt.clone();
    lowered.0[j] -= 1;
    if sf.wt != lowered || sf.eps != s.eps + 1 || sf.phi != s.phi - 1 {
        return Err("f̃ does not shift (wt, ε, φ) as required".into());
    }
    if crystal.etilde(&f, j).map_err(err)?.as_ref() != Some(m) {
        return Err("ẽ f̃ is not the identity".into());
    }
    match crystal.etilde(m, j).map_err(err)? {
        None if s.eps != 0 => Err(format!("ẽ vanishes but ε = {}", s.eps)),
        None => Ok(()),
        Some(e) => {
            let se = stats(crystal, &e, j).map_err(err)?;
            let mut raised = s.wt.clone();
            raised.0[j] += 1;
            if se.wt != raised || se.eps != s.eps - 1 || se.phi != s.phi + 1 {
                return Err("ẽ does not shift (wt, ε, φ) as required".into());
            }
            if crystal.ftilde(&e, j).map_err(err)? != *m {
                return Err("f̃ ẽ is not the identity".into());
            }
            Ok(())
        }
    }
}

fn validators(target: &Target, m: &BZDatum) -> Result<(), String> {
    let edge = validate_edge_inequalities(m);
    if let Some(v) = edge.first() {
        return Err(format!("edge inequality fails: {v:?}"));
    }
    let cover = match target.folded() {
        Some(ctx) => ctx.unfold(m).map_err(|e| e.to_string())?,
        None => m.clone(),
    };
    match is_mv(&cover) {
        Ok(true) => Ok(()),
        Ok(false) => Err("tropical Plücker relations fail".into()),
        Err(e) => Err(e.to_string()),
    }
}
