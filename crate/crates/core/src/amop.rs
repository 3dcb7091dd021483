//! The Anderson-Mirković operator and executable checks of its relation to
//! the Kashiwara operators.

use serde::Serialize;

use crate::crystal::{c_value, MvCrystal};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::polytope::{compare, edge_lhs, satisfies_edge_inequalities, BZDatum, Containment};
use crate::rootsys::{ChamberWeight, CoweightVec, GammaClass, RootSystem};

/// Default cap on the number of lattice points in the AM search box.
pub const DEFAULT_BOX_BUDGET: u128 = 1 << 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    FastPath,
    BoxSearch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct ConditionsReport {
    pub i: bool,
    pub ii: bool,
    pub iii: bool,
    pub iv: bool,
    pub a: bool,
    pub b: bool,
    pub c: bool,
    /// `r_j(μ_{s_j}) = μ_e - h_j` for the input polytope.
    pub sanity: bool,
}

impl ConditionsReport {
    pub fn all(&self) -> bool {
        self.i && self.ii && self.iii && self.iv && self.a && self.b && self.c && self.sanity
    }

    pub fn lemma_conditions(&self) -> bool {
        self.a && self.b && self.c
    }
}

#[derive(Debug, Clone)]
pub struct AMResult {
    pub datum: BZDatum,
    pub route: Route,
    pub equal_to_ftilde: bool,
    pub conditions: ConditionsReport,
    /// Number of feasible lattice points found by the box search (1 on the fast path).
    pub feasible_points: usize,
}

/// `m(j, P) = M_{ϖ_j} - M_{-s_jϖ_j} - M_{s_jϖ_j}`.
pub fn m_value(m: &BZDatum, j: usize) -> i64 {
    let rs = m.rs();
    let w = rs.fundamental(j);
    let sw = rs.reflect_gamma(j, w);
    m.get(w) - m.get(rs.neg_gamma(sw)) - m.get(sw)
}

/// The candidate `M″`: `M` on `Γ^j`, `min{M_γ, M_{s_jγ} + c_j <h_j,γ>}` on `Γ_j`.
pub fn m_double_prime(m: &BZDatum, j: usize) -> BZDatum {
    let rs = m.rs();
    let c = c_value(m, j);
    let mut out = m.clone();
    for g in rs.chamber_weights() {
        if let Some(cap) = cap(rs, m, c, j, g) {
            out.set(g, m.get(g).min(cap));
        }
    }
    out
}

fn cap(rs: &RootSystem, m: &BZDatum, c: i64, j: usize, g: ChamberWeight) -> Option<i64> {
    match rs.classify(j, g) {
        GammaClass::Upper => None,
        GammaClass::Lower => Some(m.get(rs.reflect_gamma(j, g)) + c * rs.pair_h(j, g)),
    }
}

/// `r_j(x) = s_j(x) + c h_j`.
fn r_map(rs: &RootSystem, x: &CoweightVec, j: usize, c: i64) -> CoweightVec {
    let mut out = rs.reflect_coweight(x, j);
    out.0[j] += c;
    out
}

fn contains(q: &BZDatum, x: &CoweightVec) -> bool {
    let rs = q.rs();
    rs.chamber_weights().all(|g| x.pair(rs.gamma_coords(g)) >= q.get(g))
}

/// Evaluate the defining conditions of `AM_j(P)` for a candidate `Q`.
pub fn check_conditions(m: &BZDatum, q: &BZDatum, j: usize) -> Result<ConditionsReport> {
    m.check_same_system(q)?;
    let rs = m.rs();
    let c = c_value(m, j);
    let mu: Vec<CoweightVec> = rs.elements().map(|w| m.vertex(w)).collect();
    let mu_q: Vec<CoweightVec> = rs.elements().map(|w| q.vertex(w)).collect();
    let e = rs.identity().index();
    let mut expected_e = mu[e].clone();
    expected_e.0[j] -= 1;

    let mut rep = ConditionsReport { ii: mu_q[e] == expected_e, ..Default::default() };
    rep.i = true;
    rep.iii = true;
    rep.iv = true;
    for w in rs.elements() {
        let k = w.index();
        if rs.is_left_descent(w, j) {
            rep.i &= mu_q[k] == mu[k];
            if rs.pair_root(&mu[k], j) >= c {
                rep.iv &= contains(q, &r_map(rs, &mu[k], j, c));
            }
        } else {
            rep.iii &= contains(q, &mu[k]);
        }
    }

    rep.a = true;
    rep.c = true;
    for g in rs.chamber_weights() {
        match cap(rs, m, c, j, g) {
            None => rep.a &= q.get(g) == m.get(g),
            Some(cap) => rep.c &= q.get(g) <= m.get(g).min(cap),
        }
    }
    rep.b = (0..rs.rank()).all(|i| {
        let g = rs.fundamental(i);
        q.get(g) == m.get(g) - i64::from(i == j)
    });

    let sj = rs.left_mul(j, rs.identity());
    rep.sanity = r_map(rs, &mu[sj.index()], j, c) == expected_e;
    Ok(rep)
}

pub fn am<C: MvCrystal + ?Sized>(crystal: &C, m: &BZDatum, j: usize) -> Result<AMResult> {
    am_with_budget(crystal, m, j, DEFAULT_BOX_BUDGET)
}

/// `AM_j(P)`: `M″` when it satisfies the edge inequalities, otherwise the
/// greatest edge-valid datum between `BZ(f̃_j P)` and `M″`.
pub fn am_with_budget<C: MvCrystal + ?Sized>(crystal: &C, m: &BZDatum, j: usize, budget: u128) -> Result<AMResult> {
    let f = crystal.ftilde(m, j)?;
    let upper = m_double_prime(m, j);
    let (datum, route, feasible_points) = if satisfies_edge_inequalities(&upper) {
        (upper, Route::FastPath, 1)
    } else {
        let (d, n) = box_search(m, &f, &upper, j, budget)?;
        (d, Route::BoxSearch, n)
    };
    let conditions = check_conditions(m, &datum, j)?;
    Ok(AMResult { equal_to_ftilde: datum == f, datum, route, conditions, feasible_points })
}

struct Constraint {
    base: i64,
    terms: Vec<(usize, i64)>,
}

/// Greatest edge-valid datum in the box `lower <= X <= upper`, with equality
/// forced on `Γ^j` and on the fundamental weights.
pub fn box_search(m: &BZDatum, lower: &BZDatum, upper: &BZDatum, j: usize, budget: u128) -> Result<(BZDatum, usize)> {
    let rs = m.rs();
    let fixed = |g: ChamberWeight| {
        rs.classify(j, g) == GammaClass::Upper || (0..rs.rank()).any(|i| rs.fundamental(i) == g)
    };
    for g in rs.chamber_weights() {
        let (lo, hi) = (lower.get(g), upper.get(g));
        if lo > hi || (fixed(g) && lo != hi) {
            return Err(Error::EmptyBox(format!(
                "at {:?}: lower corner {lo}, cap {hi}",
                rs.gamma_coords(g)
            )));
        }
    }

    let vars: Vec<ChamberWeight> = rs.chamber_weights().filter(|&g| lower.get(g) < upper.get(g)).collect();
    let mut var_of = vec![usize::MAX; rs.num_chamber_weights()];
    for (k, g) in vars.iter().enumerate() {
        var_of[g.index()] = k;
    }
    let size = vars.iter().try_fold(1u128, |acc, &g| {
        acc.checked_mul((upper.get(g) - lower.get(g) + 1) as u128)
    });
    match size {
        Some(s) if s <= budget => {}
        Some(s) => return Err(Error::BoxTooLarge(s)),
        None => return Err(Error::BoxTooLarge(u128::MAX)),
    }

    let lo: Vec<i64> = vars.iter().map(|&g| lower.get(g)).collect();
    let hi: Vec<i64> = vars.iter().map(|&g| upper.get(g)).collect();

    // Every edge inequality LHS <= 0, split into constant and variable parts.
    let mut constraints = Vec::new();
    for w in rs.elements() {
        for i in 0..rs.rank() {
            if rs.is_right_descent(w, i) {
                continue;
            }
            let ws = rs.right_mul(w, i);
            let mut row = vec![(rs.gamma_of(w, i), 1), (rs.gamma_of(ws, i), 1)];
            for k in 0..rs.rank() {
                if k != i && rs.c(k, i) != 0 {
                    row.push((rs.gamma_of(w, k), rs.c(k, i)));
                }
            }
            let mut base = 0;
            let mut terms: Vec<(usize, i64)> = Vec::new();
            for (g, a) in row {
                match var_of[g.index()] {
                    usize::MAX => base += a * lower.get(g),
                    v => match terms.iter_mut().find(|(u, _)| *u == v) {
                        Some(t) => t.1 += a,
                        None => terms.push((v, a)),
                    },
                }
            }
            terms.retain(|&(_, a)| a != 0);
            constraints.push(Constraint { base, terms });
        }
    }

    // Optimistic minimum of each constraint over the unassigned variables.
    let mut mins: Vec<i64> = constraints
        .iter()
        .map(|c| c.base + c.terms.iter().map(|&(v, a)| a * if a > 0 { lo[v] } else { hi[v] }).sum::<i64>())
        .collect();
    if mins.iter().any(|&x| x > 0) {
        return Err(Error::EmptyBox("no edge-valid point in the box".into()));
    }
    let mut touching: Vec<Vec<(usize, i64)>> = vec![Vec::new(); vars.len()];
    for (k, c) in constraints.iter().enumerate() {
        for &(v, a) in &c.terms {
            touching[v].push((k, a));
        }
    }

    let mut best: Option<Vec<i64>> = None;
    let mut feasible = 0usize;
    let mut point = lo.clone();
    search(0, &lo, &hi, &touching, &mut mins, &mut point, &mut best, &mut feasible);

    let best = best.ok_or_else(|| Error::EmptyBox("no edge-valid point in the box".into()))?;
    let mut out = lower.clone();
    for (k, &g) in vars.iter().enumerate() {
        out.set(g, best[k]);
    }
    if !satisfies_edge_inequalities(&out) {
        return Err(Error::AmbiguousMaximum { feasible });
    }
    Ok((out, feasible))
}

#[allow(clippy::too_many_arguments)]
fn search(
    depth: usize,
    lo: &[i64],
    hi: &[i64],
    touching: &[Vec<(usize, i64)>],
    mins: &mut [i64],
    point: &mut [i64],
    best: &mut Option<Vec<i64>>,
    feasible: &mut usize,
) {
    if depth == lo.len() {
        *feasible += 1;
        match best {
            Some(b) => b.iter_mut().zip(point.iter()).for_each(|(b, &p)| *b = (*b).max(p)),
            None => *best = Some(point.to_vec()),
        }
        return;
    }
    for x in lo[depth]..=hi[depth] {
        let mut ok = true;
        for &(k, a) in &touching[depth] {
            let bound = if a > 0 { lo[depth] } else { hi[depth] };
            mins[k] += a * (x - bound);
            ok &= mins[k] <= 0;
        }
        if ok {
            point[depth] = x;
            search(depth + 1, lo, hi, touching, mins, point, best, feasible);
        }
        for &(k, a) in &touching[depth] {
            let bound = if a > 0 { lo[depth] } else { hi[depth] };
            mins[k] -= a * (x - bound);
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem {
    Thm31,
    Thm32,
    Thm33,
    AmConjecture,
}

#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub entries: Vec<i64>,
    pub j: usize,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub theorem: Theorem,
    pub root_system: String,
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Run one check over every `(P, j)` with `P` in `set`.
pub fn verify_theorem<C: MvCrystal + ?Sized>(
    crystal: &C,
    set: &[BZDatum],
    which: Theorem,
    exec: Exec,
) -> TheoremReport {
    let rank = crystal.rank();
    let work: Vec<(usize, usize)> = (0..set.len()).flat_map(|p| (0..rank).map(move |j| (p, j))).collect();
    let results = exec.map(&work, |&(p, j)| {
        let m = &set[p];
        let outcome = match which {
            Theorem::Thm31 => check_thm31(crystal, m, j),
            Theorem::Thm32 => check_thm32(crystal, m, j),
            Theorem::Thm33 => check_thm33(crystal, m, j),
            Theorem::AmConjecture => check_am_conjecture(crystal, m, j),
        };
        let detail = match outcome {
            Ok(None) => return None,
            Ok(Some(d)) => d,
            Err(e) => e.to_string(),
        };
        Some(Violation { entries: m.entries().to_vec(), j: j + 1, detail })
    });
    TheoremReport {
        theorem: which,
        root_system: crystal.root_system().name().to_string(),
        checked: work.len(),
        violations: results.into_iter().flatten().collect(),
    }
}

fn check_thm31<C: MvCrystal + ?Sized>(crystal: &C, m: &BZDatum, j: usize) -> Result<Option<String>> {
    let f = crystal.ftilde(m, j)?;
    let a = am(crystal, m, j)?;
    let rep = check_conditions(m, &f, j)?;
    if !rep.all() {
        return Ok(Some(format!("f̃ fails the defining conditions: {rep:?}")));
    }
    Ok(match compare(&f, &a.datum)? {
        Containment::Equal | Containment::SecondInsideFirst => None,
        other => Some(format!("AM versus f̃: {other:?}")),
    })
}

fn check_thm32<C: MvCrystal + ?Sized>(crystal: &C, m: &BZDatum, j: usize) -> Result<Option<String>> {
    let rs = m.rs();
    let f = crystal.ftilde(m, j)?;
    let c = c_value(m, j);
    for g in rs.chamber_weights().filter(|&g| rs.pair_h(j, g) == 1) {
        let expected = m.get(g).min(m.get(rs.reflect_gamma(j, g)) + c);
        if f.get(g) != expected {
            return Ok(Some(format!("at {:?}: {} != {expected}", rs.gamma_coords(g), f.get(g))));
        }
    }
    Ok(None)
}

/// `M^{(k+1)}` from `M^{(k)}` by the closed formula without the minimum.
pub fn string_step(m: &BZDatum, j: usize) -> BZDatum {
    let rs = m.rs();
    let c = c_value(m, j);
    let mut out = m.clone();
    for g in rs.chamber_weights() {
        if rs.classify(j, g) == GammaClass::Lower {
            out.set(g, m.get(rs.reflect_gamma(j, g)) + c * rs.pair_h(j, g));
        }
    }
    out
}

fn check_thm33<C: MvCrystal + ?Sized>(crystal: &C, m: &BZDatum, j: usize) -> Result<Option<String>> {
    let mv = m_value(m, j);
    if mv < 0 {
        return Ok(Some(format!("m = {mv} < 0")));
    }
    let mut cur = m.clone();
    for _ in 0..=mv {
        cur = crystal.ftilde(&cur, j)?;
    }
    for k in mv + 1..=mv + 3 {
        let next = crystal.ftilde(&cur, j)?;
        let a = am(crystal, &cur, j)?;
        if a.datum != next {
            return Ok(Some(format!("k = {k}: AM differs from f̃")));
        }
        if string_step(&cur, j) != next {
            return Ok(Some(format!("k = {k}: closed formula differs from f̃")));
        }
        cur = next;
    }
    Ok(None)
}

fn check_am_conjecture<C: MvCrystal + ?Sized>(crystal: &C, m: &BZDatum, j: usize) -> Result<Option<String>> {
    let a = am(crystal, m, j)?;
    if a.equal_to_ftilde {
        return Ok(None);
    }
    let f = crystal.ftilde(m, j)?;
    Ok(Some(format!("AM differs from f̃ ({:?})", compare(&f, &a.datum)?)))
}

/// Edge inequalities of `m` with positive left-hand side at `(w, i)`, as a
/// convenience for reporting.
pub fn edge_excess(m: &BZDatum) -> i64 {
    let rs = m.rs();
    rs.elements()
        .flat_map(|w| (0..rs.rank()).map(move |i| (w, i)))
        .filter(|&(w, i)| !rs.is_right_descent(w, i))
        .map(|(w, i)| edge_lhs(m, w, i).max(0))
        .sum()
}
