//! JSON formats for BZ data, polytope sets and module literals.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{q, QMatrix};
use crate::polytope::BZDatum;
use crate::preproj::{DoubledQuiver, LambdaModule};
use crate::rootsys::RootSystem;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub gamma: Vec<i64>,
    #[serde(rename = "M")]
    pub m: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BzJson {
    pub root_system: String,
    pub normalized: bool,
    pub entries: Vec<EntryJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetJson {
    pub root_system: String,
    pub polytopes: Vec<BzJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowJson {
    pub from: usize,
    pub to: usize,
    pub matrix: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleJson {
    pub root_system: String,
    pub dims: Vec<usize>,
    pub arrows: Vec<ArrowJson>,
}

/// Entries sorted by chamber weight.
pub fn bz_to_json(m: &BZDatum) -> BzJson {
    let rs = m.rs();
    let mut entries: Vec<EntryJson> =
        rs.chamber_weights().map(|g| EntryJson { gamma: rs.gamma_coords(g).to_vec(), m: m.get(g) }).collect();
    entries.sort_by(|a, b| a.gamma.cmp(&b.gamma));
    BzJson { root_system: rs.name().to_string(), normalized: m.check_normalized().is_ok(), entries }
}

pub fn bz_from_json(rs: &Arc<RootSystem>, value: &BzJson) -> Result<BZDatum> {
    if value.root_system != rs.name() {
        return Err(Error::RootSystemMismatch(rs.name().into(), value.root_system.clone()));
    }
    let mut entries = vec![None; rs.num_chamber_weights()];
    for e in &value.entries {
        let g = rs
            .chamber_weight(&e.gamma)
            .ok_or_else(|| Error::Parse(format!("{:?} is not a chamber weight of {}", e.gamma, rs.name())))?;
        if entries[g.index()].replace(e.m).is_some() {
            return Err(Error::Parse(format!("duplicate entry for {:?}", e.gamma)));
        }
    }
    let entries = rs
        .chamber_weights()
        .zip(entries)
        .map(|(g, v)| v.ok_or_else(|| Error::Parse(format!("missing entry for {:?}", rs.gamma_coords(g)))))
        .collect::<Result<Vec<_>>>()?;
    let m = BZDatum::from_entries(rs, entries)?;
    if value.normalized {
        m.check_normalized()?;
    }
    Ok(m)
}

pub fn set_to_json(label: &str, set: &[BZDatum]) -> SetJson {
    SetJson { root_system: label.to_string(), polytopes: set.iter().map(bz_to_json).collect() }
}

pub fn set_from_json(rs: &Arc<RootSystem>, value: &SetJson) -> Result<Vec<BZDatum>> {
    value.polytopes.iter().map(|p| bz_from_json(rs, p)).collect()
}

/// Serialise a module with integer arrow matrices; zero arrows are omitted.
pub fn module_to_json(label: &str, x: &LambdaModule) -> Result<ModuleJson> {
    let quiver = x.quiver();
    let mut arrows = Vec::new();
    for (a, arrow) in quiver.arrows().iter().enumerate() {
        let m = x.map(a);
        if m.is_zero() {
            continue;
        }
        let matrix = m.to_i64().ok_or_else(|| Error::Module("arrow matrix is not integral".into()))?;
        arrows.push(ArrowJson { from: arrow.source + 1, to: arrow.target + 1, matrix });
    }
    Ok(ModuleJson { root_system: label.to_string(), dims: x.dims().to_vec(), arrows })
}

pub fn module_from_json(quiver: &Arc<DoubledQuiver>, value: &ModuleJson) -> Result<LambdaModule> {
    let n = quiver.vertices();
    if value.dims.len() != n {
        return Err(Error::Parse(format!("{} dimensions for {n} vertices", value.dims.len())));
    }
    let dims = &value.dims;
    let mut maps: Vec<Option<QMatrix>> = vec![None; quiver.num_arrows()];
    for arrow in &value.arrows {
        let (s, t) = (arrow.from.wrapping_sub(1), arrow.to.wrapping_sub(1));
        let a = quiver
            .find(s, t)
            .ok_or_else(|| Error::Parse(format!("no arrow {} → {}", arrow.from, arrow.to)))?;
        if arrow.matrix.len() != dims[t] || arrow.matrix.iter().any(|r| r.len() != dims[s]) {
            return Err(Error::Parse(format!(
                "arrow {} → {} needs a {}x{} matrix",
                arrow.from, arrow.to, dims[t], dims[s]
            )));
        }
        let rows = arrow.matrix.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect();
        if maps[a].replace(QMatrix::from_rows(rows, dims[s])).is_some() {
            return Err(Error::Parse(format!("arrow {} → {} given twice", arrow.from, arrow.to)));
        }
    }
    let maps = quiver
        .arrows()
        .iter()
        .zip(maps)
        .map(|(arrow, m)| m.unwrap_or_else(|| QMatrix::zeros(dims[arrow.target], dims[arrow.source])))
        .collect();
    LambdaModule::new(quiver.clone(), dims.clone(), maps)
}

/// Pretty JSON with a trailing newline.
pub fn to_pretty<T: Serialize>(value: &T) -> Result<String> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    Ok(text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::{MvCrystal, SimplyLaced};
    use crate::preproj::{build_preprojective, Orientation};

    #[test]
    fn bz_round_trip() {
        let rs = Arc::new(RootSystem::from_label("A3", false).unwrap());
        let cr = SimplyLaced::new(rs.clone()).unwrap();
        let m = cr.ftilde(&cr.ftilde(&BZDatum::trivial(&rs), 0).unwrap(), 1).unwrap();
        let text = to_pretty(&bz_to_json(&m)).unwrap();
        let back: BzJson = serde_json::from_str(&text).unwrap();
        assert_eq!(bz_from_json(&rs, &back).unwrap(), m);
        assert!(text.contains("\"M\""));
        let sorted: Vec<_> = back.entries.iter().map(|e| e.gamma.clone()).collect();
        let mut again = sorted.clone();
        again.sort();
        assert_eq!(sorted, again);
    }

    #[test]
    fn bz_rejects_bad_input() {
        let rs = Arc::new(RootSystem::from_label("A2", false).unwrap());
        let mut value = bz_to_json(&BZDatum::trivial(&rs));
        value.entries.pop();
        assert!(bz_from_json(&rs, &value).is_err());
        let mut value = bz_to_json(&BZDatum::trivial(&rs));
        value.entries[0].gamma = vec![5, 5];
        assert!(bz_from_json(&rs, &value).is_err());
        let value = BzJson { root_system: "A3".into(), ..bz_to_json(&BZDatum::trivial(&rs)) };
        assert!(matches!(bz_from_json(&rs, &value), Err(Error::RootSystemMismatch(..))));
    }

    #[test]
    fn module_round_trip() {
        let rs = Arc::new(RootSystem::from_label("D4", false).unwrap());
        let alg = build_preprojective(&rs, Orientation::Standard).unwrap();
        let p = alg.standard_module(crate::preproj::StandardKind::Projective, 1);
        let value = module_to_json("D4", &p).unwrap();
        assert_eq!(module_from_json(alg.quiver(), &value).unwrap(), p);
        let bad = ModuleJson { arrows: vec![ArrowJson { from: 1, to: 3, matrix: vec![] }], ..value };
        assert!(module_from_json(alg.quiver(), &bad).is_err());
    }
}
