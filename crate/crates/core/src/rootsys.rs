//! Root systems, Weyl groups and chamber weights.
//!
//! Weights are stored in the fundamental-weight basis, coweights in the
//! simple-coroot basis, so that `<h, λ> = Σ h_i λ_i`. The Cartan matrix
//! follows `c[i][j] = <h_i, α_j>`, hence `α_j = Σ_i c[i][j] ϖ_i`.
//!
//! Weyl group elements are enumerated once and identified by their action on
//! `ρ = Σ ϖ_i`, which is injective; everything else (words, lengths,
//! multiplication) is a cached table lookup.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Hard ceiling on the number of Weyl group elements we are willing to tabulate.
const MAX_WEYL_ORDER: usize = 60_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl CartanType {
    pub fn from_char(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Self::A,
            'B' => Self::B,
            'C' => Self::C,
            'D' => Self::D,
            'E' => Self::E,
            'F' => Self::F,
            'G' => Self::G,
            _ => return None,
        })
    }

    pub fn letter(self) -> char {
        match self {
            Self::A => 'A',
            Self::B => 'B',
            Self::C => 'C',
            Self::D => 'D',
            Self::E => 'E',
            Self::F => 'F',
            Self::G => 'G',
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// An integral weight in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVec(pub Vec<i64>);

/// An integral coweight in the simple-coroot basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoweightVec(pub Vec<i64>);

impl CoweightVec {
    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    pub fn pair(&self, weight: &[i64]) -> i64 {
        self.0.iter().zip(weight).map(|(a, b)| a * b).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

impl std::ops::Add for &CoweightVec {
    type Output = CoweightVec;
    fn add(self, rhs: &CoweightVec) -> CoweightVec {
        CoweightVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl std::ops::Sub for &CoweightVec {
    type Output = CoweightVec;
    fn sub(self, rhs: &CoweightVec) -> CoweightVec {
        CoweightVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

/// Index of an element of the Weyl group inside its [`RootSystem`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement(pub(crate) u32);

impl WeylElement {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Index of a chamber weight `wϖ_i` inside its [`RootSystem`]. Two witnesses
/// with the same weight vector give the same index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChamberWeight(pub(crate) u32);

impl ChamberWeight {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Which half of the partition `Γ = Γ^j ⊔ Γ_j` a chamber weight lies in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaClass {
    /// `<h_j, γ> <= 0`
    Upper,
    /// `<h_j, γ> > 0`
    Lower,
}

#[derive(Debug, Clone)]
struct ElementData {
    length: usize,
    word: Vec<u8>,
}

#[derive(Debug)]
pub struct RootSystem {
    name: String,
    kind: CartanType,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    simply_laced: bool,

    elements: Vec<ElementData>,
    /// `n*n` block per element; entry `[r*n + c]` is coordinate `r` of `wϖ_c`.
    matrices: Vec<i64>,
    left: Vec<u32>,
    right: Vec<u32>,
    inverse: Vec<u32>,
    longest: u32,

    gammas: Vec<Vec<i64>>,
    gamma_lookup: HashMap<Vec<i64>, u32>,
    gamma_of: Vec<u32>,
    witness: Vec<(u32, u32)>,
    reflect_gamma: Vec<u32>,
    neg_gamma: Vec<u32>,
}

/// Cartan matrix in the labelling used throughout the crate.
///
/// Simply-laced types use the diagrams of the folding pictures: `A_n` is a
/// chain, `D_n` is a chain `1..n-2` with `n-1` and `n` attached to `n-2`, and
/// `E_6` has edges 1-2, 2-3, 3-4, 3-5, 5-6. The non-simply-laced types are
/// labelled the way they come out of folding (orbit representatives of the
/// cover), e.g. `C_l` has `c[l-1][l] = -2`.
pub fn cartan_matrix(kind: CartanType, rank: usize) -> Result<Vec<Vec<i64>>> {
    let unsupported = || Error::UnsupportedType(format!("{kind}{rank}"));
    let n = rank;
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let link = |c: &mut Vec<Vec<i64>>, i: usize, j: usize, cij: i64, cji: i64| {
        c[i - 1][j - 1] = cij;
        c[j - 1][i - 1] = cji;
    };
    match kind {
        CartanType::A => {
            if n == 0 {
                return Err(unsupported());
            }
            for i in 1..n {
                link(&mut c, i, i + 1, -1, -1);
            }
        }
        CartanType::B | CartanType::C => {
            if n < 2 {
                return Err(unsupported());
            }
            for i in 1..n - 1 {
                link(&mut c, i, i + 1, -1, -1);
            }
            if kind == CartanType::C {
                link(&mut c, n - 1, n, -2, -1);
            } else {
                link(&mut c, n - 1, n, -1, -2);
            }
        }
        CartanType::D => {
            if n < 4 {
                return Err(unsupported());
            }
            for i in 1..n - 2 {
                link(&mut c, i, i + 1, -1, -1);
            }
            link(&mut c, n - 2, n - 1, -1, -1);
            link(&mut c, n - 2, n, -1, -1);
        }
        CartanType::E => {
            if n != 6 {
                return Err(unsupported());
            }
            for (i, j) in [(1, 2), (2, 3), (3, 4), (3, 5), (5, 6)] {
                link(&mut c, i, j, -1, -1);
            }
        }
        CartanType::F => {
            if n != 4 {
                return Err(unsupported());
            }
            link(&mut c, 1, 2, -1, -1);
            link(&mut c, 2, 3, -2, -1);
            link(&mut c, 3, 4, -1, -1);
        }
        CartanType::G => {
            if n != 2 {
                return Err(unsupported());
            }
            link(&mut c, 1, 2, -3, -1);
        }
    }
    Ok(c)
}

/// Parse a label such as `"A2"` or `"D4"` into type and rank.
pub fn parse_label(label: &str) -> Result<(CartanType, usize)> {
    let mut chars = label.trim().chars();
    let kind = chars
        .next()
        .and_then(CartanType::from_char)
        .ok_or_else(|| Error::Parse(format!("bad root system label {label:?}")))?;
    let rank: usize = chars
        .as_str()
        .parse()
        .map_err(|_| Error::Parse(format!("bad rank in root system label {label:?}")))?;
    Ok((kind, rank))
}

impl RootSystem {
    /// Build a root system from the supported table.
    ///
    /// Mandatory: `A1`-`A5`, `D4`, `D5`, and `B`/`C`/`F4`/`G2` as Cartan data.
    /// `E6` and larger ranks of `A`/`D` need `experimental`.
    pub fn new(kind: CartanType, rank: usize, experimental: bool) -> Result<Self> {
        let supported = match kind {
            CartanType::A => (1..=5).contains(&rank) || (experimental && rank <= 7),
            CartanType::D => (4..=5).contains(&rank) || (experimental && rank == 6),
            CartanType::E => rank == 6 && experimental,
            CartanType::B | CartanType::C => (2..=4).contains(&rank),
            CartanType::F => rank == 4,
            CartanType::G => rank == 2,
        };
        if !supported {
            return Err(Error::UnsupportedType(format!("{kind}{rank}")));
        }
        let cartan = cartan_matrix(kind, rank)?;
        Self::from_cartan(format!("{kind}{rank}"), kind, cartan)
    }

    pub fn from_label(label: &str, experimental: bool) -> Result<Self> {
        let (kind, rank) = parse_label(label)?;
        Self::new(kind, rank, experimental)
    }

    /// Build from an arbitrary finite-type Cartan matrix.
    pub fn from_cartan(name: String, kind: CartanType, cartan: Vec<Vec<i64>>) -> Result<Self> {
        let n = cartan.len();
        for (i, row) in cartan.iter().enumerate() {
            if row.len() != n || row[i] != 2 {
                return Err(Error::InvalidInput(format!("{name}: malformed Cartan matrix")));
            }
            for (j, &v) in row.iter().enumerate() {
                if i != j && (v > 0 || (v == 0) != (cartan[j][i] == 0)) {
                    return Err(Error::InvalidInput(format!("{name}: malformed Cartan matrix")));
                }
            }
        }
        let simply_laced = (0..n).all(|i| (0..n).all(|j| i == j || cartan[i][j] >= -1));

        // α_i in the ϖ basis is column i of the Cartan matrix.
        let alpha: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|k| cartan[k][i]).collect()).collect();
        let reflect = |v: &[i64], i: usize| -> Vec<i64> {
            let p = v[i];
            v.iter().zip(&alpha[i]).map(|(x, a)| x - p * a).collect()
        };

        let rho = vec![1i64; n];
        let mut keys: Vec<Vec<i64>> = vec![rho.clone()];
        let mut lookup: HashMap<Vec<i64>, u32> = HashMap::new();
        lookup.insert(rho, 0);
        let mut elements = vec![ElementData { length: 0, word: Vec::new() }];
        let mut matrices: Vec<i64> = Vec::new();
        for r in 0..n {
            for c in 0..n {
                matrices.push(i64::from(r == c));
            }
        }

        let mut head = 0;
        while head < keys.len() {
            let key = keys[head].clone();
            for i in 0..n {
                let next = reflect(&key, i);
                if lookup.contains_key(&next) {
                    continue;
                }
                if keys.len() >= MAX_WEYL_ORDER {
                    return Err(Error::UnsupportedType(format!("{name}: Weyl group too large")));
                }
                let id = keys.len() as u32;
                lookup.insert(next.clone(), id);
                keys.push(next);
                let mut word = vec![i as u8];
                word.extend_from_slice(&elements[head].word);
                elements.push(ElementData { length: elements[head].length + 1, word });
                // s_i · M(w): reflect each column.
                let base = head * n * n;
                let mut cols: Vec<Vec<i64>> = (0..n)
                    .map(|c| (0..n).map(|r| matrices[base + r * n + c]).collect())
                    .collect();
                for col in cols.iter_mut() {
                    *col = reflect(col, i);
                }
                for r in 0..n {
                    for col in &cols {
                        matrices.push(col[r]);
                    }
                }
            }
            head += 1;
        }

        let order = keys.len();
        let mat_apply = |w: usize, v: &[i64]| -> Vec<i64> {
            let base = w * n * n;
            (0..n)
                .map(|r| (0..n).map(|c| matrices[base + r * n + c] * v[c]).sum())
                .collect()
        };

        let mut left = vec![0u32; order * n];
        let mut right = vec![0u32; order * n];
        for w in 0..order {
            for i in 0..n {
                left[w * n + i] = lookup[&reflect(&keys[w], i)];
                let s_rho = reflect(&vec![1; n], i);
                right[w * n + i] = lookup[&mat_apply(w, &s_rho)];
            }
        }
        let mut inverse = vec![0u32; order];
        for (w, inv) in inverse.iter_mut().enumerate() {
            let mut x = 0u32;
            for &a in &elements[w].word {
                x = left[x as usize * n + a as usize];
            }
            *inv = x;
        }
        let longest = (0..order).max_by_key(|&w| elements[w].length).unwrap_or(0) as u32;

        // Chamber weights, sorted lexicographically for stable indexing.
        let mut all: Vec<Vec<i64>> = Vec::new();
        for w in 0..order {
            for i in 0..n {
                all.push((0..n).map(|r| matrices[w * n * n + r * n + i]).collect());
            }
        }
        let mut gammas = all.clone();
        gammas.sort();
        gammas.dedup();
        let gamma_lookup: HashMap<Vec<i64>, u32> =
            gammas.iter().enumerate().map(|(k, g)| (g.clone(), k as u32)).collect();
        let gamma_of: Vec<u32> = all.iter().map(|g| gamma_lookup[g]).collect();
        let mut witness = vec![(u32::MAX, u32::MAX); gammas.len()];
        // Elements are in breadth-first order, so the first hit has minimal length.
        for w in 0..order {
            for i in 0..n {
                let g = gamma_of[w * n + i] as usize;
                if witness[g].0 == u32::MAX {
                    witness[g] = (w as u32, i as u32);
                }
            }
        }
        let mut reflect_gamma = vec![0u32; gammas.len() * n];
        let mut neg_gamma = vec![0u32; gammas.len()];
        for (k, g) in gammas.iter().enumerate() {
            for j in 0..n {
                reflect_gamma[k * n + j] = gamma_lookup[&reflect(g, j)];
            }
            let neg: Vec<i64> = g.iter().map(|x| -x).collect();
            neg_gamma[k] = *gamma_lookup
                .get(&neg)
                .ok_or_else(|| Error::Internal(format!("{name}: Γ not closed under negation")))?;
        }

        Ok(Self {
            name,
            kind,
            rank: n,
            cartan,
            simply_laced,
            elements,
            matrices,
            left,
            right,
            inverse,
            longest,
            gammas,
            gamma_lookup,
            gamma_of,
            witness,
            reflect_gamma,
            neg_gamma,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> CartanType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `c_ij = <h_i, α_j>` with 0-based indices.
    #[inline]
    pub fn c(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    pub fn is_simply_laced(&self) -> bool {
        self.simply_laced
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn num_positive_roots(&self) -> usize {
        self.elements[self.longest as usize].length
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement(0)
    }

    pub fn longest(&self) -> WeylElement {
        WeylElement(self.longest)
    }

    pub fn elements(&self) -> impl Iterator<Item = WeylElement> + '_ {
        (0..self.elements.len() as u32).map(WeylElement)
    }

    pub fn length(&self, w: WeylElement) -> usize {
        self.elements[w.index()].length
    }

    /// The cached reduced word (0-based letters).
    pub fn word(&self, w: WeylElement) -> Vec<usize> {
        self.elements[w.index()].word.iter().map(|&a| a as usize).collect()
    }

    /// Lexicographically smallest reduced word of `w`.
    pub fn lexmin_word(&self, w: WeylElement) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.length(w));
        let mut cur = w;
        while self.length(cur) > 0 {
            let i = (0..self.rank)
                .find(|&i| self.is_left_descent(cur, i))
                .expect("nonidentity element has a left descent");
            out.push(i);
            cur = self.left_mul(i, cur);
        }
        out
    }

    #[inline]
    pub fn left_mul(&self, i: usize, w: WeylElement) -> WeylElement {
        WeylElement(self.left[w.index() * self.rank + i])
    }

    #[inline]
    pub fn right_mul(&self, w: WeylElement, i: usize) -> WeylElement {
        WeylElement(self.right[w.index() * self.rank + i])
    }

    pub fn inverse(&self, w: WeylElement) -> WeylElement {
        WeylElement(self.inverse[w.index()])
    }

    pub fn mul(&self, x: WeylElement, y: WeylElement) -> WeylElement {
        let mut out = x;
        for &a in &self.elements[y.index()].word {
            out = self.right_mul(out, a as usize);
        }
        out
    }

    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let mut out = self.identity();
        for &a in word {
            if a >= self.rank {
                return Err(Error::InvalidInput(format!("letter {} out of range", a + 1)));
            }
            out = self.right_mul(out, a);
        }
        Ok(out)
    }

    pub fn is_reduced(&self, word: &[usize]) -> bool {
        match self.from_word(word) {
            Ok(w) => self.length(w) == word.len(),
            Err(_) => false,
        }
    }

    /// `s_i w < w`
    #[inline]
    pub fn is_left_descent(&self, w: WeylElement, i: usize) -> bool {
        self.length(self.left_mul(i, w)) < self.length(w)
    }

    /// Every reduced word of `w`, in lexicographic order.
    pub fn reduced_words(&self, w: WeylElement) -> Vec<Vec<usize>> {
        if self.length(w) == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for i in 0..self.rank {
            if self.is_left_descent(w, i) {
                for mut rest in self.reduced_words(self.left_mul(i, w)) {
                    rest.insert(0, i);
                    out.push(rest);
                }
            }
        }
        out
    }

    /// `w s_i < w`
    #[inline]
    pub fn is_right_descent(&self, w: WeylElement, i: usize) -> bool {
        self.length(self.right_mul(w, i)) < self.length(w)
    }

    /// Action of `w` on a weight in the ϖ basis.
    pub fn act(&self, w: WeylElement, weight: &WeightVec) -> WeightVec {
        let n = self.rank;
        let base = w.index() * n * n;
        WeightVec(
            (0..n)
                .map(|r| (0..n).map(|c| self.matrices[base + r * n + c] * weight.0[c]).sum())
                .collect(),
        )
    }

    /// Action of `w` on a coweight in the coroot basis.
    pub fn act_coweight(&self, w: WeylElement, mu: &CoweightVec) -> CoweightVec {
        // <wμ, ϖ_k> = <μ, w⁻¹ϖ_k>
        let n = self.rank;
        let base = self.inverse(w).index() * n * n;
        CoweightVec(
            (0..n)
                .map(|k| (0..n).map(|r| mu.0[r] * self.matrices[base + r * n + k]).sum())
                .collect(),
        )
    }

    /// The coroot `w(h_i)`.
    pub fn coroot_image(&self, w: WeylElement, i: usize) -> CoweightVec {
        let n = self.rank;
        let base = self.inverse(w).index() * n * n;
        CoweightVec((0..n).map(|k| self.matrices[base + i * n + k]).collect())
    }

    /// `α_j` in the ϖ basis.
    pub fn simple_root(&self, j: usize) -> WeightVec {
        WeightVec((0..self.rank).map(|k| self.cartan[k][j]).collect())
    }

    pub fn fundamental_weight(&self, i: usize) -> WeightVec {
        let mut v = vec![0; self.rank];
        v[i] = 1;
        WeightVec(v)
    }

    /// `<μ, α_j>` for a coweight μ.
    pub fn pair_root(&self, mu: &CoweightVec, j: usize) -> i64 {
        (0..self.rank).map(|i| mu.0[i] * self.cartan[i][j]).sum()
    }

    /// `s_j` on coweights: `μ - <μ, α_j> h_j`.
    pub fn reflect_coweight(&self, mu: &CoweightVec, j: usize) -> CoweightVec {
        let mut out = mu.clone();
        out.0[j] -= self.pair_root(mu, j);
        out
    }

    // ----- chamber weights -----

    pub fn num_chamber_weights(&self) -> usize {
        self.gammas.len()
    }

    pub fn chamber_weights(&self) -> impl Iterator<Item = ChamberWeight> + '_ {
        (0..self.gammas.len() as u32).map(ChamberWeight)
    }

    /// Coordinates of γ in the ϖ basis; coordinate `j` is `<h_j, γ>`.
    #[inline]
    pub fn gamma_coords(&self, g: ChamberWeight) -> &[i64] {
        &self.gammas[g.index()]
    }

    pub fn chamber_weight(&self, weight: &[i64]) -> Option<ChamberWeight> {
        self.gamma_lookup.get(weight).map(|&k| ChamberWeight(k))
    }

    /// The chamber weight `wϖ_i`.
    #[inline]
    pub fn gamma_of(&self, w: WeylElement, i: usize) -> ChamberWeight {
        ChamberWeight(self.gamma_of[w.index() * self.rank + i])
    }

    /// `ϖ_i` as a chamber weight.
    pub fn fundamental(&self, i: usize) -> ChamberWeight {
        self.gamma_of(self.identity(), i)
    }

    /// A witness `(w, i)` with `γ = wϖ_i` and `w` of minimal length.
    pub fn witness(&self, g: ChamberWeight) -> (WeylElement, usize) {
        let (w, i) = self.witness[g.index()];
        (WeylElement(w), i as usize)
    }

    #[inline]
    pub fn reflect_gamma(&self, j: usize, g: ChamberWeight) -> ChamberWeight {
        ChamberWeight(self.reflect_gamma[g.index() * self.rank + j])
    }

    #[inline]
    pub fn neg_gamma(&self, g: ChamberWeight) -> ChamberWeight {
        ChamberWeight(self.neg_gamma[g.index()])
    }

    #[inline]
    pub fn pair_h(&self, j: usize, g: ChamberWeight) -> i64 {
        self.gammas[g.index()][j]
    }

    /// Partition `Γ = Γ^j ⊔ Γ_j` by the sign of `<h_j, γ>`.
    pub fn classify(&self, j: usize, g: ChamberWeight) -> GammaClass {
        if self.pair_h(j, g) <= 0 {
            GammaClass::Upper
        } else {
            GammaClass::Lower
        }
    }

    /// Like [`classify`](Self::classify) but for an arbitrary weight vector,
    /// which must be a chamber weight.
    pub fn classify_weight(&self, j: usize, weight: &[i64]) -> Result<GammaClass> {
        let g = self
            .chamber_weight(weight)
            .ok_or_else(|| Error::InvalidInput(format!("{weight:?} is not a chamber weight")))?;
        Ok(self.classify(j, g))
    }

    /// A reduced word of `w₀` whose prefix of length `ℓ(w)` is a reduced word of `w`.
    pub fn prefix_word(&self, w: WeylElement) -> Vec<usize> {
        let rest = self.mul(self.inverse(w), self.longest());
        let mut word = self.word(w);
        word.extend(self.word(rest));
        word
    }

    /// Lexicographically smallest reduced word of `w₀` starting with `j`.
    pub fn base_word(&self, j: usize) -> Vec<usize> {
        let rest = self.left_mul(j, self.longest());
        let mut word = vec![j];
        word.extend(self.lexmin_word(rest));
        word
    }

    /// Express a weight (ϖ basis) in the simple-root basis, if integral.
    pub fn weight_to_roots(&self, weight: &WeightVec) -> Option<Vec<i64>> {
        // Solve C x = λ exactly by fraction-free elimination.
        crate::linalg::solve_integer(&self.cartan, &weight.0)
    }

    /// Symmetrised form `(α_i, α_k) = c_ik` on root-lattice vectors.
    pub fn root_form(&self, x: &[i64], y: &[i64]) -> i64 {
        let n = self.rank;
        let mut s = 0;
        for i in 0..n {
            for k in 0..n {
                s += x[i] * y[k] * self.cartan[i][k];
            }
        }
        s
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(label: &str) -> RootSystem {
        RootSystem::from_label(label, false).unwrap()
    }

    #[test]
    fn weyl_orders() {
        for (label, order, npos) in [
            ("A1", 2, 1),
            ("A2", 6, 3),
            ("A3", 24, 6),
            ("A4", 120, 10),
            ("D4", 192, 12),
            ("D5", 1920, 20),
            ("C2", 8, 4),
            ("B3", 48, 9),
            ("G2", 12, 6),
            ("F4", 1152, 24),
        ] {
            let r = rs(label);
            assert_eq!(r.order(), order, "{label}");
            assert_eq!(r.num_positive_roots(), npos, "{label}");
        }
    }

    #[test]
    fn unsupported_types() {
        assert!(matches!(RootSystem::new(CartanType::E, 7, true), Err(Error::UnsupportedType(_))));
        assert!(matches!(RootSystem::new(CartanType::E, 6, false), Err(Error::UnsupportedType(_))));
        assert!(RootSystem::from_label("Q3", false).is_err());
    }

    #[test]
    fn simple_reflections_on_fundamental_weights() {
        let r = rs("A2");
        let s1 = r.from_word(&[0]).unwrap();
        let w1 = r.fundamental_weight(0);
        let a1 = r.simple_root(0);
        let expect: Vec<i64> = w1.0.iter().zip(&a1.0).map(|(x, y)| x - y).collect();
        assert_eq!(r.act(s1, &w1).0, expect);
        assert_eq!(r.act(s1, &r.fundamental_weight(1)), r.fundamental_weight(1));
    }

    #[test]
    fn d4_longest_is_minus_one() {
        let r = rs("D4");
        for k in 0..4 {
            let out = r.act(r.longest(), &r.fundamental_weight(k));
            assert_eq!(out.0, r.fundamental_weight(k).0.iter().map(|x| -x).collect::<Vec<_>>());
        }
    }

    #[test]
    fn chamber_weight_counts() {
        assert_eq!(rs("A2").num_chamber_weights(), 6);
        assert_eq!(rs("A3").num_chamber_weights(), 14);
        assert_eq!(rs("D4").num_chamber_weights(), 48);
    }

    #[test]
    fn gamma_zero_pairing() {
        // γ₀ = -s1 s2 s4 s3 s2 ϖ2 in D4 pairs to 2 with h1.
        let r = rs("D4");
        let w = r.from_word(&[0, 1, 3, 2, 1]).unwrap();
        let g = r.neg_gamma(r.gamma_of(w, 1));
        assert_eq!(r.pair_h(0, g), 2);
        assert_eq!(r.classify(0, g), GammaClass::Lower);
        let twos: Vec<_> = r.chamber_weights().filter(|&g| r.pair_h(0, g) == 2).collect();
        assert_eq!(twos, vec![g]);
    }

    #[test]
    fn classify_fundamentals() {
        let r = rs("A3");
        for j in 0..3 {
            let g = r.fundamental(j);
            assert_eq!(r.classify(j, g), GammaClass::Lower);
            assert_eq!(r.classify(j, r.neg_gamma(g)), GammaClass::Upper);
        }
        assert!(r.classify_weight(0, &[5, 5, 5]).is_err());
    }

    #[test]
    fn prefix_words() {
        let r = rs("A2");
        let s2 = r.from_word(&[1]).unwrap();
        assert_eq!(r.prefix_word(s2), vec![1, 0, 1]);
        let w0 = r.longest();
        assert_eq!(r.prefix_word(w0).len(), 3);
        assert_eq!(r.from_word(&r.prefix_word(r.identity())).unwrap(), w0);
        let d4 = rs("D4");
        for w in d4.elements() {
            let word = d4.prefix_word(w);
            assert_eq!(word.len(), 12);
            assert_eq!(d4.from_word(&word).unwrap(), d4.longest());
            assert_eq!(d4.from_word(&word[..d4.length(w)]).unwrap(), w);
        }
    }

    #[test]
    fn length_changes_by_one() {
        for label in ["A3", "D4", "B3", "G2"] {
            let r = rs(label);
            for w in r.elements() {
                for i in 0..r.rank() {
                    let d = r.length(r.left_mul(i, w)) as i64 - r.length(w) as i64;
                    assert!(d == 1 || d == -1);
                }
            }
        }
    }

    #[test]
    fn lemma_classification_matches_witnesses() {
        // γ = wϖ_i with s_j w < w lies in Γ^j; and every γ in Γ^j has such a witness.
        for label in ["A3", "D4", "C2", "G2"] {
            let r = rs(label);
            let n = r.rank();
            for j in 0..n {
                let mut has_minus = vec![false; r.num_chamber_weights()];
                for w in r.elements() {
                    if r.is_left_descent(w, j) {
                        for i in 0..n {
                            let g = r.gamma_of(w, i);
                            assert_eq!(r.classify(j, g), GammaClass::Upper);
                            has_minus[g.index()] = true;
                        }
                    }
                }
                for g in r.chamber_weights() {
                    assert_eq!(has_minus[g.index()], r.classify(j, g) == GammaClass::Upper);
                }
            }
        }
    }

    #[test]
    fn longest_squares_to_identity() {
        let r = rs("D5");
        let w0 = r.longest();
        assert_eq!(r.mul(w0, w0), r.identity());
        for g in r.chamber_weights() {
            let v = WeightVec(r.gamma_coords(g).to_vec());
            assert_eq!(r.act(w0, &r.act(w0, &v)), v);
        }
    }

    #[test]
    fn coweight_action_preserves_pairing() {
        let r = rs("B3");
        let mu = CoweightVec(vec![3, -1, 2]);
        for w in r.elements().take(20) {
            let wm = r.act_coweight(w, &mu);
            for i in 0..3 {
                let g = r.act(w, &r.fundamental_weight(i));
                assert_eq!(wm.pair(&g.0), mu.0[i]);
            }
        }
    }
}
