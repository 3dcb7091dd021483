//! Recomputation of the D4 example where `M″` fails the edge inequalities.

use std::sync::Arc;

use serde::Serialize;

use mvlab::amop::{am, m_double_prime, m_value, Route};
use mvlab::crystal::{c_value, MvCrystal, SimplyLaced};
use mvlab::exec::Exec;
use mvlab::polytope::{edge_lhs, BZDatum};
use mvlab::preproj::{build_preprojective, Orientation};
use mvlab::rootsys::RootSystem;

#[derive(Debug, Serialize)]
pub struct Item {
    pub name: String,
    pub expected: i64,
    pub actual: i64,
}

impl Item {
    pub fn ok(&self) -> bool {
        self.expected == self.actual
    }
}

#[derive(Debug, Serialize)]
pub struct D4Report {
    pub items: Vec<Item>,
    pub gamma0: Vec<i64>,
    /// `(M′, M̃, M″)` at `γ₀`.
    pub side_by_side: [i64; 3],
    pub route: Route,
}

impl D4Report {
    pub fn ok(&self) -> bool {
        self.items.iter().all(Item::ok)
    }
}

pub fn run(exec: Exec) -> mvlab::Result<D4Report> {
    let rs = Arc::new(RootSystem::from_label("D4", false)?);
    let cr = SimplyLaced::new(rs.clone())?;
    let mut items = Vec::new();
    let mut push = |name: &str, expected: i64, actual: i64| {
        items.push(Item { name: name.to_string(), expected, actual });
    };
    let gamma = |word: &[usize], i: usize| -> mvlab::Result<_> { Ok(rs.gamma_of(rs.from_word(word)?, i)) };

    // γ₀ = -s1 s2 s4 s3 s2 ϖ2
    let w = rs.from_word(&[0, 1, 3, 2, 1])?;
    let g0 = rs.neg_gamma(rs.gamma_of(w, 1));
    push("<h1, γ0>", 2, rs.pair_h(0, g0));
    push(
        "#{γ : <h1, γ> = 2}",
        1,
        rs.chamber_weights().filter(|&g| rs.pair_h(0, g) == 2).count() as i64,
    );

    let triv = BZDatum::trivial(&rs);
    let p = cr.ftilde(&cr.ftilde(&triv, 1)?, 1)?;
    let f = cr.ftilde(&p, 0)?;
    let upper = m_double_prime(&p, 0);
    let s1g0 = rs.reflect_gamma(0, g0);
    push("M_γ0", 0, p.get(g0));
    push("M_s1γ0", -2, p.get(s1g0));
    push("c1(P)", 1, c_value(&p, 0));
    push("m(1, P)", 2, m_value(&p, 0));
    push("M″_γ0", 0, upper.get(g0));
    push("M′_γ0", -1, f.get(g0));
    push("M″_-s1ϖ1", 0, upper.get(rs.neg_gamma(gamma(&[0], 0)?)));
    push("M″_-s1s2ϖ2", -1, upper.get(rs.neg_gamma(gamma(&[0, 1], 1)?)));
    push("M″_-s1s2s3ϖ3", -1, upper.get(rs.neg_gamma(gamma(&[0, 1, 2], 2)?)));
    push("M″_-s1s2s4ϖ4", -1, upper.get(rs.neg_gamma(gamma(&[0, 1, 3], 3)?)));
    let ww0 = rs.mul(w, rs.longest());
    push("edge LHS of M″ at (w w0, 2)", 1, edge_lhs(&upper, ww0, 1));

    let a = am(&cr, &p, 0)?;
    push("AM1(P) = f̃1(P)", 1, i64::from(a.datum == f));
    push("AM1(P) differs from M″ only at γ0", 1, {
        let diff: Vec<_> = rs.chamber_weights().filter(|&g| a.datum.get(g) != upper.get(g)).collect();
        i64::from(diff == vec![g0])
    });

    let alg = build_preprojective(&rs, Orientation::Standard)?;
    let s2 = alg.simple(1);
    let t = s2.direct_sum(&s2)?;
    let t2 = alg.extension(0, 1)?.direct_sum(&s2)?;
    push("dim Hom(N(γ0), T)", 0, alg.d_gamma(g0, &t)? as i64);
    push("dim Hom(N(s1γ0), T)", 2, alg.d_gamma(s1g0, &t)? as i64);
    push("dim Hom(N(γ0), X⊕S2)", 1, alg.d_gamma(g0, &t2)? as i64);
    push("dim Ext¹(T, S1)", 2, alg.ext1_dim(&t, &alg.simple(0))? as i64);
    push("BZ(T) = P", 1, i64::from(alg.bz_from_module(&t, exec)? == p));
    push("BZ(X⊕S2) = f̃1(P)", 1, i64::from(alg.bz_from_module(&t2, exec)? == f));

    Ok(D4Report {
        items,
        gamma0: rs.gamma_coords(g0).to_vec(),
        side_by_side: [f.get(g0), a.datum.get(g0), upper.get(g0)],
        route: a.route,
    })
}
