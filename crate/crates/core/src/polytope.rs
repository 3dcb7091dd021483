//! BZ data, GGMS vertices, Lusztig data and the braid-move propagation that
//! rebuilds a full BZ datum from one Lusztig datum.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::rootsys::{ChamberWeight, CoweightVec, RootSystem, WeylElement};

/// A BZ datum: one integer per chamber weight, normalised so that `μ_{w₀} = 0`.
///
/// The type carries no validity flag; use the validators to establish the
/// edge inequalities and tropical Plücker relations.
#[derive(Clone)]
pub struct BZDatum {
    rs: Arc<RootSystem>,
    entries: Vec<i64>,
}

impl PartialEq for BZDatum {
    fn eq(&self, other: &Self) -> bool {
        self.rs.name() == other.rs.name() && self.entries == other.entries
    }
}

impl Eq for BZDatum {}

impl Hash for BZDatum {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rs.name().hash(state);
        self.entries.hash(state);
    }
}

impl PartialOrd for BZDatum {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BZDatum {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.rs.name(), &self.entries).cmp(&(other.rs.name(), &other.entries))
    }
}

impl fmt::Debug for BZDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BZDatum({}, {:?})", self.rs.name(), self.entries)
    }
}

impl BZDatum {
    /// The datum of the one-point polytope `{0}`.
    pub fn trivial(rs: &Arc<RootSystem>) -> Self {
        Self { rs: rs.clone(), entries: vec![0; rs.num_chamber_weights()] }
    }

    pub fn from_entries(rs: &Arc<RootSystem>, entries: Vec<i64>) -> Result<Self> {
        if entries.len() != rs.num_chamber_weights() {
            return Err(Error::InvalidInput(format!(
                "{} entries for {} chamber weights",
                entries.len(),
                rs.num_chamber_weights()
            )));
        }
        Ok(Self { rs: rs.clone(), entries })
    }

    pub fn rs(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, g: ChamberWeight) -> i64 {
        self.entries[g.index()]
    }

    #[inline]
    pub fn set(&mut self, g: ChamberWeight, value: i64) {
        self.entries[g.index()] = value;
    }

    /// `M_{wϖ_i}`
    #[inline]
    pub fn at(&self, w: WeylElement, i: usize) -> i64 {
        self.get(self.rs.gamma_of(w, i))
    }

    pub fn check_normalized(&self) -> Result<()> {
        let w0 = self.rs.longest();
        for i in 0..self.rs.rank() {
            let value = self.at(w0, i);
            if value != 0 {
                return Err(Error::NotNormalized { index: i + 1, value });
            }
        }
        Ok(())
    }

    /// The vertex `μ_w`, i.e. the solution of `<μ_w, wϖ_i> = M_{wϖ_i}`.
    ///
    /// `w⁻¹μ_w` has coroot coordinates `M_{wϖ_i}`, so the system is unimodular
    /// and the vertex is always integral.
    pub fn vertex(&self, w: WeylElement) -> CoweightVec {
        let local = CoweightVec((0..self.rs.rank()).map(|i| self.at(w, i)).collect());
        self.rs.act_coweight(w, &local)
    }

    /// Weight of the polytope: `μ_e` in coroot coordinates.
    pub fn weight(&self) -> CoweightVec {
        self.vertex(self.rs.identity())
    }

    /// Total height `-Σ_i (μ_e)_i`, i.e. the number of `f̃` steps from the trivial datum.
    pub fn depth(&self) -> i64 {
        -self.weight().0.iter().sum::<i64>()
    }

    pub fn check_same_system(&self, other: &BZDatum) -> Result<()> {
        if self.rs.name() != other.rs.name() {
            return Err(Error::RootSystemMismatch(self.rs.name().into(), other.rs.name().into()));
        }
        Ok(())
    }
}

/// Vertices `μ_w` for every Weyl group element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GgmsDatum {
    pub vertices: Vec<CoweightVec>,
}

impl GgmsDatum {
    pub fn vertex(&self, w: WeylElement) -> &CoweightVec {
        &self.vertices[w.index()]
    }
}

/// A reduced word of `w₀` with one edge length per letter.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LusztigDatum {
    pub word: Vec<usize>,
    pub n: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeViolation {
    pub w: WeylElement,
    pub i: usize,
    pub lhs: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PluckerViolation {
    pub w: WeylElement,
    pub i: usize,
    pub j: usize,
    pub lhs: i64,
    pub rhs: i64,
}

/// Left-hand side `M_{wϖ_i} + M_{ws_iϖ_i} + Σ_{j≠i} c_ji M_{wϖ_j}` of an edge inequality.
pub fn edge_lhs(m: &BZDatum, w: WeylElement, i: usize) -> i64 {
    let rs = m.rs();
    let ws = rs.right_mul(w, i);
    let mut lhs = m.at(w, i) + m.at(ws, i);
    for j in 0..rs.rank() {
        if j != i {
            lhs += rs.c(j, i) * m.at(w, j);
        }
    }
    lhs
}

/// Every edge inequality with positive left-hand side. Each inequality is
/// shared by `w` and `ws_i`, so only `w < ws_i` is visited.
pub fn validate_edge_inequalities(m: &BZDatum) -> Vec<EdgeViolation> {
    let rs = m.rs();
    let mut out = Vec::new();
    for w in rs.elements() {
        for i in 0..rs.rank() {
            if rs.is_right_descent(w, i) {
                continue;
            }
            let lhs = edge_lhs(m, w, i);
            if lhs > 0 {
                out.push(EdgeViolation { w, i, lhs });
            }
        }
    }
    out
}

pub fn satisfies_edge_inequalities(m: &BZDatum) -> bool {
    let rs = m.rs();
    rs.elements().all(|w| (0..rs.rank()).all(|i| rs.is_right_descent(w, i) || edge_lhs(m, w, i) <= 0))
}

/// Check the tropical Plücker relation at every `(w, i, j)` with `ws_i > w`,
/// `ws_j > w` and `c_ij = -1`. Pairs with `c_ij = 0` impose no condition.
pub fn validate_tropical_plucker(m: &BZDatum) -> Result<Vec<PluckerViolation>> {
    let rs = m.rs();
    if !rs.is_simply_laced() {
        return Err(Error::UseFolding(rs.name().to_string()));
    }
    let mut out = Vec::new();
    for w in rs.elements() {
        for i in 0..rs.rank() {
            if rs.is_right_descent(w, i) {
                continue;
            }
            for j in i + 1..rs.rank() {
                if rs.c(i, j) != -1 || rs.is_right_descent(w, j) {
                    continue;
                }
                let wi = rs.right_mul(w, i);
                let wj = rs.right_mul(w, j);
                let wij = rs.right_mul(wi, j);
                let wji = rs.right_mul(wj, i);
                let lhs = m.at(wi, i) + m.at(wj, j);
                let rhs = (m.at(w, i) + m.at(wij, j)).min(m.at(wji, i) + m.at(w, j));
                if lhs != rhs {
                    out.push(PluckerViolation { w, i, j, lhs, rhs });
                }
            }
        }
    }
    Ok(out)
}

/// True when the datum is normalised and passes both validators.
pub fn is_mv(m: &BZDatum) -> Result<bool> {
    if m.check_normalized().is_err() || !satisfies_edge_inequalities(m) {
        return Ok(false);
    }
    Ok(validate_tropical_plucker(m)?.is_empty())
}

pub fn vertices_from_bz(m: &BZDatum) -> Result<GgmsDatum> {
    m.check_normalized()?;
    Ok(GgmsDatum { vertices: m.rs().elements().map(|w| m.vertex(w)).collect() })
}

/// True when every `M_γ` equals `min_w <μ_w, γ>`.
pub fn is_tight(m: &BZDatum) -> bool {
    let rs = m.rs();
    let vertices: Vec<CoweightVec> = rs.elements().map(|w| m.vertex(w)).collect();
    rs.chamber_weights().all(|g| {
        let coords = rs.gamma_coords(g);
        vertices.iter().map(|v| v.pair(coords)).min() == Some(m.get(g))
    })
}

fn check_longest_word(rs: &RootSystem, word: &[usize]) -> Result<()> {
    if word.len() != rs.num_positive_roots() || !rs.is_reduced(word) {
        return Err(Error::NotLongestWord);
    }
    Ok(())
}

/// Edge lengths along the path of `word`, without the sign check.
pub fn lusztig_coordinates(m: &BZDatum, word: &[usize]) -> Result<Vec<i64>> {
    let rs = m.rs();
    check_longest_word(rs, word)?;
    let mut prev = rs.identity();
    let mut out = Vec::with_capacity(word.len());
    for &ik in word {
        let cur = rs.right_mul(prev, ik);
        let mut n = -m.at(prev, ik) - m.at(cur, ik);
        for j in 0..rs.rank() {
            if j != ik {
                n -= rs.c(j, ik) * m.at(cur, j);
            }
        }
        out.push(n);
        prev = cur;
    }
    Ok(out)
}

pub fn lusztig_datum(m: &BZDatum, word: &[usize]) -> Result<LusztigDatum> {
    let n = lusztig_coordinates(m, word)?;
    if let Some((position, &value)) = n.iter().enumerate().find(|(_, &v)| v < 0) {
        return Err(Error::NotMv { position: position + 1, value });
    }
    Ok(LusztigDatum { word: word.to_vec(), n })
}

/// Apply the braid move at `position` (a 2-move for commuting letters, a
/// 3-move `aba -> bab` for `c_ab = c_ba = -1`).
pub fn braid_transition(rs: &RootSystem, datum: &LusztigDatum, position: usize) -> Result<LusztigDatum> {
    let word = &datum.word;
    let n = &datum.n;
    if position + 1 >= word.len() {
        return Err(Error::InvalidMove(position));
    }
    let (a, b) = (word[position], word[position + 1]);
    if a == b {
        return Err(Error::InvalidMove(position));
    }
    let mut out = datum.clone();
    if rs.c(a, b) == 0 {
        out.word.swap(position, position + 1);
        out.n.swap(position, position + 1);
        return Ok(out);
    }
    if rs.c(a, b) == -1
        && rs.c(b, a) == -1
        && position + 2 < word.len()
        && word[position + 2] == a
    {
        let (x, y, z) = (n[position], n[position + 1], n[position + 2]);
        let p = x.min(z);
        out.word[position] = b;
        out.word[position + 1] = a;
        out.word[position + 2] = b;
        out.n[position] = y + z - p;
        out.n[position + 1] = p;
        out.n[position + 2] = x + y - p;
        return Ok(out);
    }
    Err(Error::InvalidMove(position))
}

fn apply_move(word: &mut [u8], n: &mut [i64], p: usize, three: bool) {
    if three {
        let (a, b) = (word[p], word[p + 1]);
        let (x, y, z) = (n[p], n[p + 1], n[p + 2]);
        let q = x.min(z);
        word[p] = b;
        word[p + 1] = a;
        word[p + 2] = b;
        n[p] = y + z - q;
        n[p + 1] = q;
        n[p + 2] = x + y - q;
    } else {
        word.swap(p, p + 1);
        n.swap(p, p + 1);
    }
}

#[derive(Debug)]
struct Target {
    /// Braid moves from the previous target word to this one.
    moves: Vec<(usize, bool)>,
    /// Coroots `w_{k-1}(h_{i_k})` along the path.
    steps: Vec<CoweightVec>,
    path: Vec<WeylElement>,
}

/// Precomputed propagation from one reduced word of `w₀`.
///
/// Picks reduced words whose paths together pass through every chamber
/// weight, starting with the given word and continuing breadth-first over
/// the Weyl group, and records the braid moves linking consecutive words.
/// [`propagate`](Self::propagate) replays those moves on a Lusztig datum.
#[derive(Debug)]
pub struct Propagator {
    rs: Arc<RootSystem>,
    start: Vec<usize>,
    targets: Vec<Target>,
}

impl Propagator {
    pub fn new(rs: &Arc<RootSystem>, word: &[usize]) -> Result<Self> {
        if !rs.is_simply_laced() {
            return Err(Error::UseFolding(rs.name().to_string()));
        }
        check_longest_word(rs, word)?;

        let mut covered = vec![false; rs.num_chamber_weights()];
        let mut targets = Vec::new();
        let mut cur = word.to_vec();
        let mut add = |cur: &[usize], moves: Vec<(usize, bool)>, covered: &mut Vec<bool>| {
            let mut path = Vec::with_capacity(cur.len() + 1);
            path.push(rs.identity());
            for &a in cur {
                let last = *path.last().expect("nonempty path");
                path.push(rs.right_mul(last, a));
            }
            for &w in &path {
                for i in 0..rs.rank() {
                    covered[rs.gamma_of(w, i).index()] = true;
                }
            }
            let steps = cur.iter().zip(&path).map(|(&a, &w)| rs.coroot_image(w, a)).collect();
            targets.push(Target { moves, steps, path });
        };
        add(&cur, Vec::new(), &mut covered);
        for w in rs.elements() {
            if (0..rs.rank()).all(|i| covered[rs.gamma_of(w, i).index()]) {
                continue;
            }
            let target = rs.prefix_word(w);
            let mut moves = Vec::new();
            braid_path(rs, &mut cur, 0, &target, &mut moves);
            debug_assert_eq!(cur, target);
            add(&cur, moves, &mut covered);
        }
        if covered.iter().any(|&c| !c) {
            return Err(Error::CoverageIncomplete);
        }
        Ok(Self { rs: rs.clone(), start: word.to_vec(), targets })
    }

    pub fn word(&self) -> &[usize] {
        &self.start
    }

    /// Number of reduced words whose paths are read.
    pub fn words_read(&self) -> usize {
        self.targets.len()
    }

    /// Total number of braid moves replayed per call.
    pub fn moves(&self) -> usize {
        self.targets.iter().map(|t| t.moves.len()).sum()
    }

    /// The BZ datum with Lusztig datum `n` in the start word.
    pub fn propagate(&self, n: &[i64]) -> Result<BZDatum> {
        let rs = &self.rs;
        if n.len() != self.start.len() {
            return Err(Error::InvalidInput("Lusztig datum length does not match word".into()));
        }
        if let Some((position, &value)) = n.iter().enumerate().find(|(_, &v)| v < 0) {
            return Err(Error::NotMv { position: position + 1, value });
        }
        let rank = rs.rank();
        let mut values: Vec<Option<i64>> = vec![None; rs.num_chamber_weights()];
        let mut vertices: Vec<Option<CoweightVec>> = vec![None; rs.order()];
        let mut word: Vec<u8> = self.start.iter().map(|&a| a as u8).collect();
        let mut lengths = n.to_vec();
        for target in &self.targets {
            for &(p, three) in &target.moves {
                apply_move(&mut word, &mut lengths, p, three);
            }
            // μ_e = -Σ n_k w_{k-1}(h_{i_k}); walk up from there.
            let mut mu = CoweightVec::zero(rank);
            for (step, &len) in target.steps.iter().zip(&lengths) {
                for (m, s) in mu.0.iter_mut().zip(&step.0) {
                    *m -= len * s;
                }
            }
            for (k, &w) in target.path.iter().enumerate() {
                if k > 0 {
                    for (m, s) in mu.0.iter_mut().zip(&target.steps[k - 1].0) {
                        *m += lengths[k - 1] * s;
                    }
                }
                match &vertices[w.index()] {
                    Some(known) if *known != mu => {
                        let g = rs.gamma_of(w, 0);
                        return Err(Error::InconsistentAssignment {
                            first: known.pair(rs.gamma_coords(g)),
                            second: mu.pair(rs.gamma_coords(g)),
                        });
                    }
                    Some(_) => {}
                    None => {
                        for i in 0..rank {
                            let g = rs.gamma_of(w, i);
                            let value = mu.pair(rs.gamma_coords(g));
                            match values[g.index()] {
                                Some(first) if first != value => {
                                    return Err(Error::InconsistentAssignment { first, second: value });
                                }
                                _ => values[g.index()] = Some(value),
                            }
                        }
                        vertices[w.index()] = Some(mu.clone());
                    }
                }
            }
        }
        let entries = values.into_iter().map(|v| v.ok_or(Error::CoverageIncomplete)).collect::<Result<Vec<_>>>()?;
        BZDatum::from_entries(rs, entries)
    }
}

/// Braid moves turning `cur[offset..]` into `target`, both reduced words of
/// the same element. Applies the moves to `cur` and appends them to `moves`.
///
/// When the first letters `a != b` differ, both are left descents, so the
/// element has a reduced word starting with the alternating word `aba…` of
/// the parabolic longest element; route through it and apply one move.
fn braid_path(rs: &RootSystem, cur: &mut [usize], mut offset: usize, target: &[usize], moves: &mut Vec<(usize, bool)>) {
    let mut target = target;
    while offset < cur.len() {
        let (a, b) = (cur[offset], target[0]);
        if a == b {
            offset += 1;
            target = &target[1..];
            continue;
        }
        let three = rs.c(a, b) != 0;
        let alt: Vec<usize> = if three { vec![a, b, a] } else { vec![a, b] };
        let x = rs.from_word(&cur[offset..]).expect("valid letters");
        let parabolic = rs.from_word(&alt).expect("valid letters");
        let rest = rs.mul(rs.inverse(parabolic), x);
        let mut via = alt;
        via.extend(rs.word(rest));
        braid_path(rs, cur, offset, &via, moves);
        let mut scratch = [0i64; 3];
        let len = if three { 3 } else { 2 };
        let mut letters: Vec<u8> = cur[offset..offset + len].iter().map(|&l| l as u8).collect();
        apply_move(&mut letters, &mut scratch[..len], 0, three);
        for (c, l) in cur[offset..offset + len].iter_mut().zip(letters) {
            *c = l as usize;
        }
        moves.push((offset, three));
    }
}

type PlanCache = Mutex<HashMap<(Vec<Vec<i64>>, Vec<usize>), Arc<Propagator>>>;

/// Shared propagation plan for `(rs, word)`, built on first use.
pub fn propagator(rs: &Arc<RootSystem>, word: &[usize]) -> Result<Arc<Propagator>> {
    static CACHE: OnceLock<PlanCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (rs.cartan().to_vec(), word.to_vec());
    if let Some(p) = cache.lock().expect("plan cache poisoned").get(&key) {
        return Ok(p.clone());
    }
    let plan = Arc::new(Propagator::new(rs, word)?);
    cache.lock().expect("plan cache poisoned").entry(key).or_insert_with(|| plan.clone());
    Ok(plan)
}

/// Rebuild the BZ datum of the MV polytope with the given Lusztig datum.
///
/// Moves through braid-adjacent reduced words until every chamber weight
/// lies on a visited path, reading the vertices along each path. Fails if
/// two paths disagree.
pub fn bz_from_lusztig(rs: &Arc<RootSystem>, datum: &LusztigDatum) -> Result<BZDatum> {
    if !rs.is_simply_laced() {
        return Err(Error::UseFolding(rs.name().to_string()));
    }
    check_longest_word(rs, &datum.word)?;
    propagator(rs, &datum.word)?.propagate(&datum.n)
}

/// Containment relation between two tight polytopes `P = P(first)` and `Q = P(second)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Containment {
    Equal,
    /// `Q ⊆ P`: every entry of the second datum is at least the first.
    SecondInsideFirst,
    /// `P ⊆ Q`
    FirstInsideSecond,
    Incomparable,
}

pub fn compare(first: &BZDatum, second: &BZDatum) -> Result<Containment> {
    first.check_same_system(second)?;
    let mut ge = true;
    let mut le = true;
    for (a, b) in first.entries().iter().zip(second.entries()) {
        ge &= b >= a;
        le &= b <= a;
    }
    Ok(match (ge, le) {
        (true, true) => Containment::Equal,
        (true, false) => Containment::SecondInsideFirst,
        (false, true) => Containment::FirstInsideSecond,
        (false, false) => Containment::Incomparable,
    })
}

/// `σ(ϖ_i) = ϖ_{σ(i)}`, so `(σλ)_{σ(i)} = λ_i`.
pub fn permute_weight(perm: &[usize], weight: &[i64]) -> Vec<i64> {
    let mut out = vec![0; weight.len()];
    for (i, &p) in perm.iter().enumerate() {
        out[p] = weight[i];
    }
    out
}

/// `σ(P)` with `M'_γ = M_{σ(γ)}`.
pub fn sigma_act(perm: &[usize], m: &BZDatum) -> Result<BZDatum> {
    let rs = m.rs();
    check_automorphism(rs, perm)?;
    let entries = rs
        .chamber_weights()
        .map(|g| {
            let image = permute_weight(perm, rs.gamma_coords(g));
            let sg = rs.chamber_weight(&image).expect("Γ is σ-stable");
            m.get(sg)
        })
        .collect();
    BZDatum::from_entries(rs, entries)
}

pub(crate) fn check_automorphism(rs: &RootSystem, perm: &[usize]) -> Result<()> {
    let n = rs.rank();
    let mut seen = vec![false; n];
    if perm.len() != n {
        return Err(Error::InvalidAutomorphism(format!("permutation of length {} on rank {n}", perm.len())));
    }
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(Error::InvalidAutomorphism("not a bijection".into()));
        }
    }
    for i in 0..n {
        for j in 0..n {
            if rs.c(i, j) != rs.c(perm[i], perm[j]) {
                return Err(Error::InvalidAutomorphism(format!(
                    "does not preserve the Cartan matrix of {}",
                    rs.name()
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(label: &str) -> Arc<RootSystem> {
        Arc::new(RootSystem::from_label(label, false).unwrap())
    }

    #[test]
    fn trivial_datum_is_valid() {
        for label in ["A2", "A3", "D4"] {
            let r = rs(label);
            let m = BZDatum::trivial(&r);
            assert!(validate_edge_inequalities(&m).is_empty());
            assert!(validate_tropical_plucker(&m).unwrap().is_empty());
            let ggms = vertices_from_bz(&m).unwrap();
            assert!(ggms.vertices.iter().all(CoweightVec::is_zero));
            let word = r.base_word(0);
            assert!(lusztig_datum(&m, &word).unwrap().n.iter().all(|&x| x == 0));
            assert_eq!(bz_from_lusztig(&r, &LusztigDatum { word, n: vec![0; r.num_positive_roots()] }).unwrap(), m);
        }
    }

    #[test]
    fn a2_reconstruction() {
        let r = rs("A2");
        let l = LusztigDatum { word: vec![0, 1, 0], n: vec![1, 0, 1] };
        let m = bz_from_lusztig(&r, &l).unwrap();
        assert_eq!(m.get(r.fundamental(0)), -1);
        assert_eq!(m.weight(), CoweightVec(vec![-1, -1]));
        assert!(validate_edge_inequalities(&m).is_empty());
        assert!(validate_tropical_plucker(&m).unwrap().is_empty());
        assert_eq!(lusztig_datum(&m, &[0, 1, 0]).unwrap(), l);
    }

    #[test]
    fn perturbed_datum_breaks_plucker_at_identity() {
        let r = rs("A2");
        let mut m = bz_from_lusztig(&r, &LusztigDatum { word: vec![0, 1, 0], n: vec![1, 0, 1] }).unwrap();
        let s1 = r.from_word(&[0]).unwrap();
        let g = r.gamma_of(s1, 0);
        m.set(g, m.get(g) - 1);
        let v = validate_tropical_plucker(&m).unwrap();
        assert!(v.iter().any(|x| x.w == r.identity() && x.i == 0 && x.j == 1), "{v:?}");
    }

    #[test]
    fn braid_moves() {
        let r = rs("A2");
        let l = LusztigDatum { word: vec![0, 1, 0], n: vec![1, 0, 1] };
        let t = braid_transition(&r, &l, 0).unwrap();
        assert_eq!(t, LusztigDatum { word: vec![1, 0, 1], n: vec![0, 1, 0] });
        let fixed = LusztigDatum { word: vec![0, 1, 0], n: vec![4, 4, 4] };
        assert_eq!(braid_transition(&r, &fixed, 0).unwrap().n, vec![4, 4, 4]);
        assert!(braid_transition(&r, &l, 1).is_err());

        let a3 = rs("A3");
        let l = LusztigDatum { word: vec![0, 2, 1, 0, 2, 1], n: vec![5, 7, 0, 0, 0, 0] };
        let t = braid_transition(&a3, &l, 0).unwrap();
        assert_eq!(t.word[..2], [2, 0]);
        assert_eq!(t.n[..2], [7, 5]);
    }

    #[test]
    fn both_three_move_sides_give_the_same_polytope() {
        // Build the datum from each side of the move independently and compare.
        let r = rs("A2");
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    let l = LusztigDatum { word: vec![0, 1, 0], n: vec![a, b, c] };
                    let t = braid_transition(&r, &l, 0).unwrap();
                    let from_l = path_only_datum(&r, &l);
                    let from_t = path_only_datum(&r, &t);
                    // The two paths cover all 6 vertices between them; they must agree at e and w0.
                    assert_eq!(from_l.0, from_t.0);
                    let m = bz_from_lusztig(&r, &l).unwrap();
                    assert!(validate_tropical_plucker(&m).unwrap().is_empty());
                    assert_eq!(lusztig_datum(&m, &[1, 0, 1]).unwrap(), t);
                }
            }
        }
    }

    /// μ_e computed directly from one path.
    fn path_only_datum(r: &RootSystem, l: &LusztigDatum) -> (CoweightVec,) {
        let mut mu = CoweightVec::zero(r.rank());
        let mut w = r.identity();
        for (&a, &len) in l.word.iter().zip(&l.n) {
            let step = r.coroot_image(w, a);
            for (m, s) in mu.0.iter_mut().zip(&step.0) {
                *m -= len * s;
            }
            w = r.right_mul(w, a);
        }
        (mu,)
    }

    #[test]
    fn involution_on_three_moves() {
        let r = rs("A3");
        let l = LusztigDatum { word: vec![0, 1, 0, 2, 1, 0], n: vec![3, 1, 2, 0, 5, 1] };
        let once = braid_transition(&r, &l, 0).unwrap();
        assert_eq!(braid_transition(&r, &once, 0).unwrap(), l);
    }

    #[test]
    fn negative_lusztig_rejected() {
        let r = rs("A2");
        let l = LusztigDatum { word: vec![0, 1, 0], n: vec![1, -1, 0] };
        assert!(matches!(bz_from_lusztig(&r, &l), Err(Error::NotMv { .. })));
        let l = LusztigDatum { word: vec![0, 0, 1], n: vec![0, 0, 0] };
        assert!(matches!(bz_from_lusztig(&r, &l), Err(Error::NotLongestWord)));
    }

    #[test]
    fn compare_and_normalization() {
        let r = rs("A2");
        let t = BZDatum::trivial(&r);
        let p = bz_from_lusztig(&r, &LusztigDatum { word: vec![0, 1, 0], n: vec![1, 0, 0] }).unwrap();
        assert_eq!(compare(&t, &t).unwrap(), Containment::Equal);
        // The segment [-h1, 0] contains the origin: trivial ⊆ f̃₁(trivial).
        assert_eq!(compare(&p, &t).unwrap(), Containment::SecondInsideFirst);
        assert_eq!(compare(&t, &p).unwrap(), Containment::FirstInsideSecond);
        let mut bad = t.clone();
        bad.set(r.gamma_of(r.longest(), 1), 3);
        assert!(matches!(vertices_from_bz(&bad), Err(Error::NotNormalized { index: 2, value: 3 })));
        let other = BZDatum::trivial(&rs("A3"));
        assert!(compare(&t, &other).is_err());
    }

    #[test]
    fn non_simply_laced_needs_folding() {
        let r = rs("C2");
        let m = BZDatum::trivial(&r);
        assert!(matches!(validate_tropical_plucker(&m), Err(Error::UseFolding(_))));
        assert!(validate_edge_inequalities(&m).is_empty());
    }

    #[test]
    fn sigma_action() {
        let r = rs("D4");
        let t = BZDatum::trivial(&r);
        let triality = [2, 1, 3, 0];
        assert_eq!(sigma_act(&triality, &t).unwrap(), t);
        // σ(P) has vertices σ⁻¹(μ_{σ(w)}): the segment [-h_1, 0] goes to [-h_4, 0].
        let seg = |j: usize| {
            let mut n = vec![0; r.num_positive_roots()];
            n[0] = 1;
            bz_from_lusztig(&r, &LusztigDatum { word: r.base_word(j), n }).unwrap()
        };
        assert_eq!(sigma_act(&triality, &seg(0)).unwrap(), seg(3));
        assert!(sigma_act(&[1, 0, 2, 3], &t).is_err());
        let a3 = rs("A3");
        let l = LusztigDatum { word: a3.base_word(0), n: { let mut v = vec![0; 6]; v[0] = 2; v[3] = 1; v } };
        let m = bz_from_lusztig(&a3, &l).unwrap();
        let flip = [2, 1, 0];
        assert_eq!(sigma_act(&flip, &sigma_act(&flip, &m).unwrap()).unwrap(), m);
    }
}
