use mvlab::amop::m_value;
use mvlab::crystal::{c_value, generate, stats, MvCrystal};
use mvlab::exec::Exec;
use mvlab::folding::FoldedContext;
use mvlab::polytope::{sigma_act, BZDatum};
use proptest::prelude::*;

fn orders(orbit: &[usize]) -> Vec<Vec<usize>> {
    if orbit.len() <= 1 {
        return vec![orbit.to_vec()];
    }
    let mut out = Vec::new();
    for k in 0..orbit.len() {
        let mut rest = orbit.to_vec();
        let head = rest.remove(k);
        for mut tail in orders(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

fn check_folded_point(ctx: &FoldedContext, hat: &BZDatum) {
    let cover = ctx.unfold(hat).unwrap();
    assert!(ctx.is_sigma_invariant(&cover));
    assert_eq!(sigma_act(ctx.sigma().perm(), &cover).unwrap(), cover);
    assert_eq!(&ctx.fold(&cover).unwrap(), hat);
    for k in 0..ctx.folded().rank() {
        let rep = ctx.representative(k);
        assert_eq!(c_value(hat, k), c_value(&cover, rep));
        assert_eq!(m_value(hat, k), m_value(&cover, rep));
        let images: Vec<BZDatum> =
            orders(ctx.orbit(k)).iter().map(|o| ctx.ftilde_sigma_ordered(&cover, o).unwrap()).collect();
        assert!(images.windows(2).all(|w| w[0] == w[1]));
        assert_eq!(ctx.fold(&images[0]).unwrap(), ctx.ftilde(hat, k).unwrap());
        stats(ctx, hat, k).unwrap();
    }
}

#[test]
fn fold_unfold_coherence() {
    for name in ["C2@A3", "B3@D4", "G2@D4"] {
        let ctx = FoldedContext::build(name, false).unwrap();
        for hat in generate(&ctx, 4, Exec::default()).unwrap() {
            check_folded_point(&ctx, &hat);
        }
    }
}

#[test]
fn folded_crystal_inverse() {
    let ctx = FoldedContext::build("C2@A3", false).unwrap();
    for hat in generate(&ctx, 4, Exec::default()).unwrap() {
        for k in 0..2 {
            let f = ctx.ftilde(&hat, k).unwrap();
            assert_eq!(ctx.etilde(&f, k).unwrap().as_ref(), Some(&hat));
            assert_eq!(ctx.epsilon(&f, k).unwrap(), ctx.epsilon(&hat, k).unwrap() + 1);
        }
    }
}

#[test]
fn c2_layer_sizes() {
    // Kostant partitions for C2 with positive roots α1, α2, α1+α2, 2α1+α2.
    let ctx = FoldedContext::build("C2@A3", false).unwrap();
    let set = generate(&ctx, 3, Exec::Sequential).unwrap();
    let sizes: Vec<usize> =
        (0..=3).map(|d| set.iter().filter(|m| -m.weight().0.iter().sum::<i64>() == d).count()).collect();
    assert_eq!(sizes, vec![1, 2, 4, 7]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn random_folded_walks(name in prop::sample::select(vec!["C2@A3", "B3@D4", "G2@D4", "C3@A5"]),
                           colours in prop::collection::vec(0usize..3, 0..6)) {
        let ctx = FoldedContext::build(name, false).unwrap();
        let rank = ctx.folded().rank();
        let mut hat = BZDatum::trivial(ctx.folded());
        for j in colours {
            hat = ctx.ftilde(&hat, j % rank).unwrap();
        }
        check_folded_point(&ctx, &hat);
    }
}
