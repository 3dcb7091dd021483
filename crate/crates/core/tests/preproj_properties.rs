use std::path::PathBuf;
use std::sync::Arc;

use mvlab::amop::m_value;
use mvlab::crystal::{c_value, MvCrystal, SimplyLaced};
use mvlab::exec::Exec;
use mvlab::io::{module_from_json, ModuleJson};
use mvlab::polytope::{is_mv, BZDatum};
use mvlab::preproj::{build_preprojective, hom_dim, LambdaModule, Orientation, PreprojAlgebra, StandardKind};
use mvlab::rootsys::{GammaClass, RootSystem, WeightVec};
use proptest::prelude::*;

fn algebra(label: &str) -> PreprojAlgebra {
    let rs = Arc::new(RootSystem::from_label(label, false).unwrap());
    build_preprojective(&rs, Orientation::Standard).unwrap()
}

fn fixture(alg: &PreprojAlgebra, name: &str) -> LambdaModule {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/d4").join(format!("{name}.json"));
    let value: ModuleJson = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    module_from_json(alg.quiver(), &value).unwrap()
}

fn corpus(alg: &PreprojAlgebra) -> Vec<LambdaModule> {
    let mut out: Vec<LambdaModule> =
        ["t", "x_plus_s2", "n_gamma0", "n_s1_gamma0"].iter().map(|n| fixture(alg, n)).collect();
    for i in 0..4 {
        out.push(alg.simple(i));
        out.push(alg.standard_module(StandardKind::Projective, i));
    }
    out.push(alg.zero_module());
    out
}

/// The chamber weight `-s_jϖ_j`.
fn minus_sj_wj(rs: &RootSystem, j: usize) -> mvlab::rootsys::ChamberWeight {
    rs.neg_gamma(rs.reflect_gamma(j, rs.fundamental(j)))
}

/// Check the Crawley-Boevey symmetry and the Ext¹ identities for `X`.
fn check_identities(alg: &PreprojAlgebra, x: &LambdaModule) {
    let rs = alg.root_system();
    for j in 0..rs.rank() {
        let s = alg.simple(j);
        let ext = alg.ext1_dim(x, &s).unwrap();
        assert_eq!(ext, alg.ext1_dim(&s, x).unwrap());
        let w = rs.fundamental(j);
        let d = |g| alg.d_gamma(g, x).unwrap() as i64;
        assert_eq!(d(w), x.dims()[j] as i64);
        assert_eq!(d(minus_sj_wj(rs, j)), x.socle_dim(j) as i64);
        assert_eq!(ext as i64, d(minus_sj_wj(rs, j)) - d(w) + d(rs.reflect_gamma(j, w)));
        // D_{s_jϖ_j} = dim Hom(X, S_j) - (α_j, dimv X) + dim X_j
        let lhs = d(rs.reflect_gamma(j, w));
        let rhs = x.top_dim(j) as i64 - alg.form(&s, x) + x.dims()[j] as i64;
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn projective_dimension_vectors() {
    for label in ["A1", "A2", "A3", "A4", "D4"] {
        let alg = algebra(label);
        let rs = alg.root_system().clone();
        for i in 0..rs.rank() {
            let fw = rs.fundamental_weight(i);
            let low = rs.act(rs.longest(), &fw);
            let diff = WeightVec(fw.0.iter().zip(&low.0).map(|(a, b)| a - b).collect());
            let expected = rs.weight_to_roots(&diff).unwrap();
            assert_eq!(alg.standard_module(StandardKind::Projective, i).dimv(), expected);
            assert_eq!(alg.standard_module(StandardKind::Injective, i).dimv(), expected);
            assert_eq!(alg.n_gamma(rs.fundamental(i)).unwrap().dimv(), expected);
        }
    }
    assert_eq!(algebra("A2").dimension(), 4);
}

#[test]
fn n_gamma_properties_d4() {
    let alg = algebra("D4");
    let rs = alg.root_system().clone();
    for g in rs.chamber_weights() {
        let n = alg.n_gamma(g).unwrap();
        for j in 0..4 {
            match rs.classify(j, g) {
                GammaClass::Upper => assert_eq!(n.top_dim(j), 0),
                GammaClass::Lower => {
                    let k = rs.pair_h(j, g);
                    assert_eq!(n.top_dim(j) as i64, k);
                    let m = alg.n_gamma(rs.reflect_gamma(j, g)).unwrap();
                    let mut diff: Vec<i64> = n.dimv().iter().zip(m.dimv()).map(|(a, b)| a - b).collect();
                    diff[j] -= k;
                    assert!(diff.iter().all(|&v| v == 0));
                    if !m.is_zero() {
                        assert!(hom_dim(&m, &n).unwrap() >= 1);
                    }
                }
            }
        }
    }
}

#[test]
fn n_gamma_is_independent_of_the_word() {
    for label in ["A3", "D4"] {
        let alg = algebra(label);
        let rs = alg.root_system().clone();
        for g in rs.chamber_weights() {
            let (w, _) = rs.witness(rs.neg_gamma(g));
            let words = rs.reduced_words(w);
            let first = alg.n_gamma_span(g, &words[0]).unwrap();
            for word in &words[1..] {
                assert_eq!(alg.n_gamma_span(g, word).unwrap(), first, "{label} {word:?}");
            }
        }
    }
}

#[test]
fn fixture_corpus_identities() {
    let alg = algebra("D4");
    for x in corpus(&alg) {
        check_identities(&alg, &x);
    }
    let rs = alg.root_system().clone();
    let g0 = rs.chamber_weights().find(|&g| rs.pair_h(0, g) == 2).unwrap();
    assert_eq!(fixture(&alg, "n_gamma0"), alg.n_gamma(g0).unwrap());
    assert_eq!(fixture(&alg, "n_s1_gamma0"), alg.n_gamma(rs.reflect_gamma(0, g0)).unwrap());
}

#[test]
fn modules_match_the_crystal_side() {
    let alg = algebra("D4");
    let rs = alg.root_system().clone();
    let cr = SimplyLaced::new(rs.clone()).unwrap();
    let t = fixture(&alg, "t");
    let t2 = fixture(&alg, "x_plus_s2");
    let p = cr.ftilde(&cr.ftilde(&BZDatum::trivial(&rs), 1).unwrap(), 1).unwrap();
    let p2 = cr.ftilde(&p, 0).unwrap();
    assert_eq!(alg.bz_from_module(&t, Exec::default()).unwrap(), p);
    assert_eq!(alg.bz_from_module(&t2, Exec::default()).unwrap(), p2);
    for j in 0..4 {
        let s = alg.simple(j);
        let single = alg.bz_from_module(&s, Exec::default()).unwrap();
        assert_eq!(single, cr.ftilde(&BZDatum::trivial(&rs), j).unwrap());
    }

    // c_1(P) = φ_1 - 1 with φ = ε + <h_1, wt>, ε = dim tp_1 T.
    let phi = t.top_dim(0) as i64 - rs.root_form(&[1, 0, 0, 0], &t.dimv());
    assert_eq!(c_value(&p, 0), phi - 1);
    assert_eq!(m_value(&p, 0), alg.ext1_dim(&t, &alg.simple(0)).unwrap() as i64);
    assert_eq!(m_value(&p, 0), 2);

    let c = c_value(&p, 0);
    for g in rs.chamber_weights() {
        let before = alg.d_gamma(g, &t).unwrap() as i64;
        let after = alg.d_gamma(g, &t2).unwrap() as i64;
        assert!(after >= before);
        if rs.classify(0, g) == GammaClass::Lower {
            let reflected = alg.d_gamma(rs.reflect_gamma(0, g), &t).unwrap() as i64;
            assert!(after >= reflected - c * rs.pair_h(0, g));
        }
    }
}

#[test]
fn a3_simple_sums_are_mv() {
    let alg = algebra("A3");
    let rs = alg.root_system().clone();
    let cr = SimplyLaced::new(rs.clone()).unwrap();
    for j in 0..3 {
        let mut x = alg.zero_module();
        let mut expected = BZDatum::trivial(&rs);
        for _ in 0..3 {
            x = x.direct_sum(&alg.simple(j)).unwrap();
            expected = cr.ftilde(&expected, j).unwrap();
            let m = alg.bz_from_module(&x, Exec::Sequential).unwrap();
            assert!(is_mv(&m).unwrap());
            assert_eq!(m, expected);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    /// Submodules of injectives cut out by random socle sequences.
    #[test]
    fn random_submodules(i in 0usize..4, seq in prop::collection::vec(0usize..4, 0..8),
                         k in 0usize..4, seq2 in prop::collection::vec(0usize..4, 0..6)) {
        let alg = algebra("D4");
        let (x, emb) = alg.standard_module(StandardKind::Injective, i).soc_chain(&seq).unwrap();
        prop_assert!(emb.is_injective());
        let (y, _) = alg.standard_module(StandardKind::Injective, k).soc_chain(&seq2).unwrap();
        check_identities(&alg, &x);
        prop_assert_eq!(alg.ext1_dim(&x, &y).unwrap(), alg.ext1_dim(&y, &x).unwrap());
        let dual = x.dual();
        prop_assert_eq!(hom_dim(&x, &y).unwrap(), hom_dim(&y.dual(), &dual).unwrap());
    }
}
