//! Kashiwara operators on MV polytopes, crystal statistics, crystal
//! generation from the trivial polytope and DOT export.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;
use std::sync::Arc;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::polytope::{bz_from_lusztig, lusztig_datum, BZDatum};
use crate::rootsys::{CoweightVec, RootSystem};

/// A crystal structure on BZ data of one root system.
pub trait MvCrystal: Send + Sync {
    /// Root system the BZ data live on.
    fn root_system(&self) -> &Arc<RootSystem>;

    fn ftilde(&self, m: &BZDatum, j: usize) -> Result<BZDatum>;

    fn etilde(&self, m: &BZDatum, j: usize) -> Result<Option<BZDatum>>;

    fn epsilon(&self, m: &BZDatum, j: usize) -> Result<i64>;

    fn rank(&self) -> usize {
        self.root_system().rank()
    }
}

/// The crystal on MV polytopes of a simply-laced type, computed through
/// Lusztig data in a fixed reduced word per colour.
#[derive(Debug, Clone)]
pub struct SimplyLaced {
    rs: Arc<RootSystem>,
    base_words: Vec<Vec<usize>>,
}

impl SimplyLaced {
    pub fn new(rs: Arc<RootSystem>) -> Result<Self> {
        if !rs.is_simply_laced() {
            return Err(Error::UseFolding(rs.name().to_string()));
        }
        let base_words = (0..rs.rank()).map(|j| rs.base_word(j)).collect();
        Ok(Self { rs, base_words })
    }

    /// Lexicographically smallest reduced word of `w₀` beginning with `j`.
    pub fn base_word(&self, j: usize) -> &[usize] {
        &self.base_words[j]
    }

    fn shift_first(&self, m: &BZDatum, j: usize, delta: i64) -> Result<Option<BZDatum>> {
        self.check(m, j)?;
        let mut l = lusztig_datum(m, &self.base_words[j])?;
        if l.n[0] + delta < 0 {
            return Ok(None);
        }
        l.n[0] += delta;
        bz_from_lusztig(&self.rs, &l).map(Some)
    }

    fn check(&self, m: &BZDatum, j: usize) -> Result<()> {
        if m.rs().name() != self.rs.name() {
            return Err(Error::RootSystemMismatch(self.rs.name().into(), m.rs().name().into()));
        }
        if j >= self.rs.rank() {
            return Err(Error::InvalidInput(format!("colour {} out of range", j + 1)));
        }
        Ok(())
    }
}

impl MvCrystal for SimplyLaced {
    fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    fn ftilde(&self, m: &BZDatum, j: usize) -> Result<BZDatum> {
        Ok(self.shift_first(m, j, 1)?.expect("raising the first coordinate never fails"))
    }

    fn etilde(&self, m: &BZDatum, j: usize) -> Result<Option<BZDatum>> {
        self.shift_first(m, j, -1)
    }

    fn epsilon(&self, m: &BZDatum, j: usize) -> Result<i64> {
        self.check(m, j)?;
        Ok(lusztig_datum(m, &self.base_words[j])?.n[0])
    }
}

/// `f̃_j` on a simply-laced type. Builds the base word on every call; use
/// [`SimplyLaced`] for repeated application.
pub fn ftilde(m: &BZDatum, j: usize) -> Result<BZDatum> {
    SimplyLaced::new(m.rs().clone())?.ftilde(m, j)
}

pub fn etilde(m: &BZDatum, j: usize) -> Result<Option<BZDatum>> {
    SimplyLaced::new(m.rs().clone())?.etilde(m, j)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalStats {
    pub wt: CoweightVec,
    pub eps: i64,
    pub phi: i64,
    pub c: i64,
}

/// `c_j(P) = M_{ϖ_j} - M_{s_jϖ_j} - 1`.
pub fn c_value(m: &BZDatum, j: usize) -> i64 {
    let rs = m.rs();
    let w = rs.fundamental(j);
    m.get(w) - m.get(rs.reflect_gamma(j, w)) - 1
}

/// Crystal statistics at colour `j`, cross-checking `φ = ε + <wt, α_j>`.
pub fn stats<C: MvCrystal + ?Sized>(crystal: &C, m: &BZDatum, j: usize) -> Result<CrystalStats> {
    let c = c_value(m, j);
    let phi = c + 1;
    let eps = crystal.epsilon(m, j)?;
    let wt = m.weight();
    let pairing = m.rs().pair_root(&wt, j);
    if phi != eps + pairing {
        return Err(Error::CrystalAxiom(format!(
            "φ_{} = {phi} but ε + <wt, α> = {eps} + {pairing}",
            j + 1
        )));
    }
    Ok(CrystalStats { wt, eps, phi, c })
}

/// Every polytope reachable from the trivial one by at most `depth`
/// applications of the `f̃_j`, ordered by depth and then by entries.
pub fn generate<C: MvCrystal + ?Sized>(crystal: &C, depth: usize, exec: Exec) -> Result<Vec<BZDatum>> {
    let rs = crystal.root_system();
    let mut all = vec![BZDatum::trivial(rs)];
    let mut frontier = all.clone();
    let pairs: Vec<usize> = (0..crystal.rank()).collect();
    for _ in 0..depth {
        let work: Vec<(usize, usize)> =
            (0..frontier.len()).flat_map(|p| pairs.iter().map(move |&j| (p, j))).collect();
        let images = exec.try_map(&work, |&(p, j)| crystal.ftilde(&frontier[p], j))?;
        // Every f̃_j lowers the height by one, so layers are disjoint.
        let mut seen = HashSet::with_capacity(images.len());
        let mut next: Vec<BZDatum> = images.into_iter().filter(|m| seen.insert(m.clone())).collect();
        next.sort();
        all.extend(next.iter().cloned());
        frontier = next;
    }
    Ok(all)
}

/// Labelled edges `(source, target, j)` with `f̃_j(source) = target` inside `set`.
pub fn crystal_edges<C: MvCrystal + ?Sized>(
    crystal: &C,
    set: &[BZDatum],
    exec: Exec,
) -> Result<Vec<(usize, usize, usize)>> {
    let index: std::collections::HashMap<&BZDatum, usize> = set.iter().enumerate().map(|(k, m)| (m, k)).collect();
    let work: Vec<(usize, usize)> =
        (0..set.len()).flat_map(|p| (0..crystal.rank()).map(move |j| (p, j))).collect();
    let images = exec.try_map(&work, |&(p, j)| crystal.ftilde(&set[p], j))?;
    Ok(work
        .iter()
        .zip(&images)
        .filter_map(|(&(p, j), img)| index.get(img).map(|&t| (p, t, j)))
        .collect())
}

/// Stable node identifier: SHA-256 of the canonical serialisation.
pub fn node_id(m: &BZDatum) -> String {
    let mut text = String::from(m.rs().name());
    for e in m.entries() {
        write!(text, ",{e}").expect("write to string");
    }
    let digest = Sha256::digest(text.as_bytes());
    let mut out = String::with_capacity(16);
    for byte in &digest[..8] {
        write!(out, "{byte:02x}").expect("write to string");
    }
    out
}

/// DOT description of the crystal graph on `set`.
pub fn crystal_graph<C: MvCrystal + ?Sized>(crystal: &C, set: &[BZDatum], exec: Exec) -> Result<String> {
    let mut nodes: BTreeMap<String, &BZDatum> = BTreeMap::new();
    for m in set {
        nodes.insert(node_id(m), m);
    }
    let mut edges: Vec<(String, String, usize)> = crystal_edges(crystal, set, exec)?
        .into_iter()
        .map(|(s, t, j)| (node_id(&set[s]), node_id(&set[t]), j + 1))
        .collect();
    edges.sort();
    edges.dedup();

    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", crystal.root_system().name()).expect("write to string");
    for (id, m) in &nodes {
        let wt: Vec<String> = m.weight().0.iter().map(i64::to_string).collect();
        writeln!(out, "  \"{id}\" [label=\"wt=({})\"];", wt.join(",")).expect("write to string");
    }
    for (s, t, j) in &edges {
        writeln!(out, "  \"{s}\" -> \"{t}\" [label=\"{j}\"];").expect("write to string");
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{validate_edge_inequalities, validate_tropical_plucker};

    fn crystal(label: &str) -> SimplyLaced {
        SimplyLaced::new(Arc::new(RootSystem::from_label(label, false).unwrap())).unwrap()
    }

    #[test]
    fn ftilde_of_trivial_is_a_segment() {
        for label in ["A2", "A3", "D4"] {
            let cr = crystal(label);
            let rs = cr.root_system().clone();
            for j in 0..rs.rank() {
                let m = cr.ftilde(&BZDatum::trivial(&rs), j).unwrap();
                for g in rs.chamber_weights() {
                    assert_eq!(m.get(g), 0.min(-rs.pair_h(j, g)));
                }
            }
        }
    }

    #[test]
    fn etilde_inverts_ftilde() {
        let cr = crystal("A3");
        let rs = cr.root_system().clone();
        let t = BZDatum::trivial(&rs);
        assert_eq!(cr.etilde(&t, 1).unwrap(), None);
        let m = cr.ftilde(&cr.ftilde(&cr.ftilde(&t, 0).unwrap(), 1).unwrap(), 0).unwrap();
        for j in 0..3 {
            let up = cr.ftilde(&m, j).unwrap();
            assert_eq!(cr.etilde(&up, j).unwrap().as_ref(), Some(&m));
        }
    }

    #[test]
    fn trivial_stats() {
        let cr = crystal("D4");
        let t = BZDatum::trivial(cr.root_system());
        for j in 0..4 {
            let s = stats(&cr, &t, j).unwrap();
            assert_eq!((s.eps, s.phi, s.c), (0, 0, -1));
        }
    }

    #[test]
    fn a2_depth_two() {
        let cr = crystal("A2");
        let set = generate(&cr, 2, Exec::Sequential).unwrap();
        assert_eq!(set.len(), 7);
        let both = set.iter().filter(|m| m.weight().0 == vec![-1, -1]).count();
        assert_eq!(both, 2);
        for m in &set {
            assert!(validate_edge_inequalities(m).is_empty());
            assert!(validate_tropical_plucker(m).unwrap().is_empty());
        }
        assert_eq!(generate(&cr, 0, Exec::Sequential).unwrap().len(), 1);
    }

    #[test]
    fn graph_of_trivial() {
        let cr = crystal("A2");
        let set = vec![BZDatum::trivial(cr.root_system())];
        let dot = crystal_graph(&cr, &set, Exec::Sequential).unwrap();
        assert_eq!(dot.matches("->").count(), 0);
        assert_eq!(dot.matches("label=\"wt=").count(), 1);
    }

    #[test]
    fn parallel_matches_sequential() {
        let cr = crystal("A3");
        let a = generate(&cr, 3, Exec::Sequential).unwrap();
        let b = generate(&cr, 3, Exec::Parallel).unwrap();
        assert_eq!(a, b);
        assert_eq!(
            crystal_graph(&cr, &a, Exec::Sequential).unwrap(),
            crystal_graph(&cr, &b, Exec::Parallel).unwrap()
        );
    }
}
