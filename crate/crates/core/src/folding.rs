//! Folding simply-laced MV polytopes by a diagram automorphism.
//!
//! A [`FoldedContext`] ties a simply-laced cover to the folded root system,
//! the isomorphism `Θ` between the folded Weyl group and `W^σ`, and the
//! induced embedding of folded chamber weights. Folded Kashiwara operators
//! are computed through the cover.

use std::collections::VecDeque;
use std::sync::Arc;

use crate::crystal::{MvCrystal, SimplyLaced};
use crate::error::{Error, Result};
use crate::polytope::{bz_from_lusztig, check_automorphism, lusztig_coordinates, permute_weight, BZDatum, LusztigDatum};
use crate::rootsys::{cartan_matrix, parse_label, CartanType, ChamberWeight, RootSystem, WeylElement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramAutomorphism {
    perm: Vec<usize>,
    order: usize,
    orbits: Vec<Vec<usize>>,
}

impl DiagramAutomorphism {
    /// Validate `perm` (0-based, `perm[i] = σ(i)`) against the Cartan matrix of `rs`.
    pub fn new(rs: &RootSystem, perm: Vec<usize>) -> Result<Self> {
        check_automorphism(rs, &perm)?;
        let n = perm.len();
        let mut seen = vec![false; n];
        let mut orbits = Vec::new();
        for i in 0..n {
            if seen[i] {
                continue;
            }
            let mut orbit = vec![i];
            seen[i] = true;
            let mut k = perm[i];
            while k != i {
                orbit.push(k);
                seen[k] = true;
                k = perm[k];
            }
            for &a in &orbit {
                for &b in &orbit {
                    if a != b && rs.c(a, b) != 0 {
                        return Err(Error::InvalidAutomorphism(format!(
                            "orbit of {} contains the edge {}-{}",
                            i + 1,
                            a + 1,
                            b + 1
                        )));
                    }
                }
            }
            orbits.push(orbit);
        }
        let order = orbits.iter().map(Vec::len).fold(1, lcm);
        Ok(Self { perm, order, orbits })
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// The order `k` of `σ`.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Orbits `(i, σ(i), σ²(i), ...)`, ordered by their first element.
    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    /// Orbit size `k_i`.
    pub fn orbit_size(&self, i: usize) -> usize {
        self.orbits.iter().find(|o| o.contains(&i)).map_or(1, Vec::len)
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}

/// `M_γ = M_{σ(γ)}` for every chamber weight.
pub fn is_sigma_invariant(m: &BZDatum, sigma: &DiagramAutomorphism) -> bool {
    let rs = m.rs();
    rs.chamber_weights().all(|g| {
        let image = permute_weight(sigma.perm(), rs.gamma_coords(g));
        rs.chamber_weight(&image).is_some_and(|sg| m.get(sg) == m.get(g))
    })
}

/// The folding pairs of the supported table: `(name, cover, σ, folded type, experimental)`.
const PAIRS: &[(&str, &str, &[usize], &str, bool)] = &[
    ("C2@A3", "A3", &[2, 1, 0], "C2", false),
    ("C3@A5", "A5", &[4, 3, 2, 1, 0], "C3", false),
    ("B3@D4", "D4", &[0, 1, 3, 2], "B3", false),
    ("B4@D5", "D5", &[0, 1, 2, 4, 3], "B4", false),
    ("G2@D4", "D4", &[2, 1, 3, 0], "G2", false),
    ("F4@E6", "E6", &[5, 4, 2, 3, 1, 0], "F4", true),
];

/// Names of the supported foldings.
pub fn folding_names() -> impl Iterator<Item = &'static str> {
    PAIRS.iter().map(|p| p.0)
}

#[derive(Debug)]
pub struct FoldedContext {
    name: String,
    cover: SimplyLaced,
    sigma: DiagramAutomorphism,
    folded: Arc<RootSystem>,
    /// Cover index representing each folded index.
    reps: Vec<usize>,
    theta: Vec<WeylElement>,
    gamma_map: Vec<ChamberWeight>,
    /// Reduced word of the folded `w₀` and its expansion in the cover.
    folded_word: Vec<usize>,
    cover_word: Vec<usize>,
}

impl FoldedContext {
    /// Build one of the supported foldings, e.g. `"C2@A3"`.
    pub fn build(name: &str, experimental: bool) -> Result<Self> {
        let &(name, cover, perm, target, gated) = PAIRS
            .iter()
            .find(|p| p.0.eq_ignore_ascii_case(name.trim()))
            .ok_or_else(|| Error::UnsupportedType(name.to_string()))?;
        if gated && !experimental {
            return Err(Error::UnsupportedType(format!("{name} requires the experimental flag")));
        }
        let cover = Arc::new(RootSystem::from_label(cover, experimental)?);
        let sigma = DiagramAutomorphism::new(&cover, perm.to_vec())?;
        let (kind, rank) = parse_label(target)?;
        Self::from_parts(name.to_string(), cover, sigma, Some((kind, rank)))
    }

    /// Fold `cover` by `sigma`. When `expected` is given the folded Cartan
    /// matrix must match that type.
    pub fn from_parts(
        name: String,
        cover: Arc<RootSystem>,
        sigma: DiagramAutomorphism,
        expected: Option<(CartanType, usize)>,
    ) -> Result<Self> {
        if sigma.perm().len() != cover.rank() {
            return Err(Error::InvalidAutomorphism("rank mismatch".into()));
        }
        let reps: Vec<usize> = sigma.orbits().iter().map(|o| o[0]).collect();
        let folded_cartan: Vec<Vec<i64>> = reps
            .iter()
            .enumerate()
            .map(|(k, _)| {
                reps.iter()
                    .map(|&j| sigma.orbits()[k].iter().map(|&a| cover.c(a, j)).sum())
                    .collect()
            })
            .collect();
        let kind = match expected {
            Some((kind, rank)) => {
                if cartan_matrix(kind, rank)? != folded_cartan {
                    return Err(Error::InvalidAutomorphism(format!(
                        "folded Cartan matrix {folded_cartan:?} is not of type {kind}{rank}"
                    )));
                }
                kind
            }
            None => cover.kind(),
        };
        let folded_name = match expected {
            Some((kind, rank)) => format!("{kind}{rank}"),
            None => name.clone(),
        };
        let folded = Arc::new(RootSystem::from_cartan(folded_name, kind, folded_cartan)?);

        // Θ(ŵŝ_i) = Θ(ŵ) s_i^σ, by breadth-first closure.
        let s_sigma = |w: WeylElement, k: usize| {
            sigma.orbits()[k].iter().fold(w, |acc, &a| cover.right_mul(acc, a))
        };
        let mut theta: Vec<Option<WeylElement>> = vec![None; folded.order()];
        theta[folded.identity().index()] = Some(cover.identity());
        let mut queue = VecDeque::from([folded.identity()]);
        while let Some(hw) = queue.pop_front() {
            let w = theta[hw.index()].expect("assigned before enqueue");
            for k in 0..folded.rank() {
                let next = folded.right_mul(hw, k);
                let image = s_sigma(w, k);
                match theta[next.index()] {
                    Some(existing) if existing != image => {
                        return Err(Error::Internal("Θ is not well defined".into()));
                    }
                    Some(_) => {}
                    None => {
                        theta[next.index()] = Some(image);
                        queue.push_back(next);
                    }
                }
            }
        }
        let theta: Vec<WeylElement> = theta.into_iter().map(|t| t.expect("folded group is connected")).collect();
        let mut images: Vec<usize> = theta.iter().map(|w| w.index()).collect();
        images.sort_unstable();
        images.dedup();
        if images.len() != theta.len() || theta[folded.longest().index()] != cover.longest() {
            return Err(Error::Internal("Θ is not an embedding onto W^σ".into()));
        }

        let mut gamma_map: Vec<Option<ChamberWeight>> = vec![None; folded.num_chamber_weights()];
        for hw in folded.elements() {
            for (k, &rep) in reps.iter().enumerate() {
                let image = cover.gamma_of(theta[hw.index()], rep);
                let slot = &mut gamma_map[folded.gamma_of(hw, k).index()];
                match slot {
                    Some(existing) if *existing != image => {
                        return Err(Error::Internal("chamber weight embedding is not well defined".into()));
                    }
                    _ => *slot = Some(image),
                }
            }
        }
        let gamma_map: Vec<ChamberWeight> =
            gamma_map.into_iter().map(|g| g.expect("every folded chamber weight has a witness")).collect();

        let folded_word = folded.base_word(0);
        let cover_word = folded_word.iter().flat_map(|&k| sigma.orbits()[k].iter().copied()).collect();
        let ctx = Self {
            name,
            cover: SimplyLaced::new(cover)?,
            sigma,
            folded,
            reps,
            theta,
            gamma_map,
            folded_word,
            cover_word,
        };
        ctx.check_pairings()?;
        Ok(ctx)
    }

    /// `<ĥ_k, γ̂> = Σ_t <h_{σ^t(k)}, ι(γ̂)>`
    fn check_pairings(&self) -> Result<()> {
        let cover = self.cover.root_system();
        for g in self.folded.chamber_weights() {
            let image = cover.gamma_coords(self.gamma_map[g.index()]);
            for k in 0..self.folded.rank() {
                let sum: i64 = self.sigma.orbits()[k].iter().map(|&a| image[a]).sum();
                if sum != self.folded.pair_h(k, g) {
                    return Err(Error::Internal("folded coroot pairing mismatch".into()));
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn cover(&self) -> &Arc<RootSystem> {
        self.cover.root_system()
    }

    pub fn cover_crystal(&self) -> &SimplyLaced {
        &self.cover
    }

    pub fn folded(&self) -> &Arc<RootSystem> {
        &self.folded
    }

    pub fn sigma(&self) -> &DiagramAutomorphism {
        &self.sigma
    }

    /// Cover index representing folded index `k`.
    pub fn representative(&self, k: usize) -> usize {
        self.reps[k]
    }

    /// Orbit of the folded index `k` in the cover.
    pub fn orbit(&self, k: usize) -> &[usize] {
        &self.sigma.orbits()[k]
    }

    pub fn theta(&self, w: WeylElement) -> WeylElement {
        self.theta[w.index()]
    }

    /// The cover chamber weight `Θ(ŵ)ϖ_i` for `γ̂ = ŵϖ̂_i`.
    pub fn embed_gamma(&self, g: ChamberWeight) -> ChamberWeight {
        self.gamma_map[g.index()]
    }

    pub fn is_sigma_invariant(&self, m: &BZDatum) -> bool {
        is_sigma_invariant(m, &self.sigma)
    }

    fn require_invariant(&self, m: &BZDatum) -> Result<()> {
        if m.rs().name() != self.cover().name() {
            return Err(Error::RootSystemMismatch(self.cover().name().into(), m.rs().name().into()));
        }
        if !self.is_sigma_invariant(m) {
            return Err(Error::NotSigmaInvariant(format!("datum on {} is not σ-invariant", self.cover().name())));
        }
        Ok(())
    }

    /// `M̂_{ŵϖ̂_i} = M_{Θ(ŵ)ϖ_i}`.
    pub fn fold(&self, m: &BZDatum) -> Result<BZDatum> {
        self.require_invariant(m)?;
        let entries = self.folded.chamber_weights().map(|g| m.get(self.embed_gamma(g))).collect();
        BZDatum::from_entries(&self.folded, entries)
    }

    /// The σ-invariant cover datum folding to `m`.
    ///
    /// Reads the folded Lusztig datum along a folded reduced word, repeats
    /// each length once per orbit member and rebuilds on the cover.
    pub fn unfold(&self, m: &BZDatum) -> Result<BZDatum> {
        if m.rs().name() != self.folded.name() {
            return Err(Error::RootSystemMismatch(self.folded.name().into(), m.rs().name().into()));
        }
        let folded_n = lusztig_coordinates(m, &self.folded_word)?;
        if let Some((position, &value)) = folded_n.iter().enumerate().find(|(_, &v)| v < 0) {
            return Err(Error::NotMv { position: position + 1, value });
        }
        let n = self
            .folded_word
            .iter()
            .zip(&folded_n)
            .flat_map(|(&k, &len)| std::iter::repeat_n(len, self.orbit(k).len()))
            .collect();
        let cover = bz_from_lusztig(self.cover(), &LusztigDatum { word: self.cover_word.clone(), n })?;
        if self.fold(&cover)? != *m {
            return Err(Error::NotSigmaInvariant("folded datum is not in the image of the cover".into()));
        }
        Ok(cover)
    }

    /// `f̃_j^σ = Π_t f̃_{σ^t(j)}` on a σ-invariant cover datum.
    pub fn ftilde_sigma(&self, m: &BZDatum, k: usize) -> Result<BZDatum> {
        self.ftilde_sigma_ordered(m, self.orbit(k))
    }

    /// `f̃^σ` applying the orbit members in the given order.
    pub fn ftilde_sigma_ordered(&self, m: &BZDatum, order: &[usize]) -> Result<BZDatum> {
        self.require_invariant(m)?;
        let mut cur = m.clone();
        for &a in order {
            cur = self.cover.ftilde(&cur, a)?;
        }
        self.require_invariant(&cur)?;
        Ok(cur)
    }

    /// `ẽ^σ`, or `None` when `ε` vanishes along the orbit.
    pub fn etilde_sigma(&self, m: &BZDatum, k: usize) -> Result<Option<BZDatum>> {
        self.require_invariant(m)?;
        let mut cur = m.clone();
        for &a in self.orbit(k) {
            match self.cover.etilde(&cur, a)? {
                Some(next) => cur = next,
                None => return Ok(None),
            }
        }
        self.require_invariant(&cur)?;
        Ok(Some(cur))
    }
}

/// Folded Kashiwara operators `f̂_j = fold ∘ f̃_j^σ ∘ unfold`.
impl MvCrystal for FoldedContext {
    fn root_system(&self) -> &Arc<RootSystem> {
        &self.folded
    }

    fn ftilde(&self, m: &BZDatum, j: usize) -> Result<BZDatum> {
        self.fold(&self.ftilde_sigma(&self.unfold(m)?, j)?)
    }

    fn etilde(&self, m: &BZDatum, j: usize) -> Result<Option<BZDatum>> {
        match self.etilde_sigma(&self.unfold(m)?, j)? {
            Some(p) => self.fold(&p).map(Some),
            None => Ok(None),
        }
    }

    fn epsilon(&self, m: &BZDatum, j: usize) -> Result<i64> {
        self.cover.epsilon(&self.unfold(m)?, self.reps[j])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::c_value;

    #[test]
    fn supported_table_builds() {
        for name in folding_names().filter(|n| *n != "F4@E6") {
            let ctx = FoldedContext::build(name, false).unwrap();
            assert_eq!(ctx.theta(ctx.folded().longest()), ctx.cover().longest());
        }
        assert!(FoldedContext::build("F4@E6", false).is_err());
        assert!(FoldedContext::build("X9@A3", false).is_err());
    }

    #[test]
    fn c2_theta_on_generators() {
        let ctx = FoldedContext::build("C2@A3", false).unwrap();
        let cover = ctx.cover();
        let f = ctx.folded();
        let s1 = f.from_word(&[0]).unwrap();
        let s2 = f.from_word(&[1]).unwrap();
        assert_eq!(ctx.theta(s1), cover.from_word(&[0, 2]).unwrap());
        assert_eq!(ctx.theta(s2), cover.from_word(&[1]).unwrap());
        assert_eq!(f.order(), 8);
    }

    #[test]
    fn g2_orbits() {
        let ctx = FoldedContext::build("G2@D4", false).unwrap();
        assert_eq!(ctx.sigma().order(), 3);
        assert_eq!(ctx.sigma().orbit_size(0), 3);
        assert_eq!(ctx.sigma().orbit_size(1), 1);
    }

    #[test]
    fn invalid_automorphisms() {
        let a3 = RootSystem::from_label("A3", false).unwrap();
        assert!(DiagramAutomorphism::new(&a3, vec![1, 0, 2]).is_err());
        let a2 = RootSystem::from_label("A2", false).unwrap();
        // The flip of A2 is Cartan-preserving but its orbit contains an edge.
        assert!(DiagramAutomorphism::new(&a2, vec![1, 0]).is_err());
    }

    #[test]
    fn c2_fold_unfold() {
        let ctx = FoldedContext::build("C2@A3", false).unwrap();
        let cover = ctx.cover_crystal();
        let t = BZDatum::trivial(ctx.cover());
        assert!(ctx.is_sigma_invariant(&t));
        let f1 = cover.ftilde(&t, 0).unwrap();
        assert!(!ctx.is_sigma_invariant(&f1));
        assert!(ctx.fold(&f1).is_err());
        let f13 = cover.ftilde(&f1, 2).unwrap();
        let f31 = cover.ftilde(&cover.ftilde(&t, 2).unwrap(), 0).unwrap();
        assert_eq!(f13, f31);
        assert_eq!(ctx.ftilde_sigma(&t, 0).unwrap(), f13);
        assert_eq!(f13.weight().0, vec![-1, 0, -1]);
        let folded = ctx.fold(&f13).unwrap();
        assert_eq!(folded.get(ctx.folded().fundamental(0)), -1);
        assert_eq!(ctx.unfold(&folded).unwrap(), f13);
        assert_eq!(ctx.unfold(&BZDatum::trivial(ctx.folded())).unwrap(), t);
        assert_eq!(c_value(&folded, 0), c_value(&f13, 0));
        assert_eq!(folded.weight().0, vec![-1, 0]);
    }
}
