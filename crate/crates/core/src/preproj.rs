//! Preprojective algebras of simply-laced Dynkin quivers and their modules,
//! over exact rationals.
//!
//! Modules are given by matrices on the arrows of the doubled quiver. The
//! submodules `N(γ)` are cut out of injective hulls by iterated socles, and
//! `M_γ = -dim Hom(N(γ), X)` turns a module into a BZ datum.

use std::sync::{Arc, OnceLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::linalg::{q, span_basis, QMatrix, Q};
use crate::polytope::BZDatum;
use crate::rootsys::{ChamberWeight, RootSystem, WeightVec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Orientation {
    /// `A_n`: `i → i+1`. `D_n`: the chain points towards `n-2`, and so do
    /// the two short legs. Other types: lower label to higher label.
    #[default]
    Standard,
    Flipped,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    /// `+1` on `Ω`, `-1` on `Ω*`.
    pub sign: i64,
}

/// The double `Q̄` of a Dynkin quiver `Q`. Arrows `0..m` are `Ω`, arrow
/// `a + m` is `a*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubledQuiver {
    vertices: usize,
    arrows: Vec<Arrow>,
}

impl DoubledQuiver {
    pub fn new(rs: &RootSystem, orientation: Orientation) -> Result<Self> {
        if !rs.is_simply_laced() {
            return Err(Error::UseFolding(rs.name().to_string()));
        }
        let n = rs.rank();
        let hub = matches!(rs.kind(), crate::rootsys::CartanType::D).then(|| n - 3);
        let mut omega = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rs.c(i, j) == 0 {
                    continue;
                }
                let (s, t) = match hub {
                    Some(h) if j > h && i == h => (j, i),
                    _ => (i, j),
                };
                let (s, t) = if orientation == Orientation::Flipped { (t, s) } else { (s, t) };
                omega.push(Arrow { source: s, target: t, sign: 1 });
            }
        }
        let star: Vec<Arrow> =
            omega.iter().map(|a| Arrow { source: a.target, target: a.source, sign: -1 }).collect();
        omega.extend(star);
        Ok(Self { vertices: n, arrows: omega })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn star(&self, a: usize) -> usize {
        let m = self.arrows.len() / 2;
        if a < m {
            a + m
        } else {
            a - m
        }
    }

    /// Arrow index with the given endpoints.
    pub fn find(&self, source: usize, target: usize) -> Option<usize> {
        self.arrows.iter().position(|a| a.source == source && a.target == target)
    }

    fn incoming(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].target == v)
    }

    fn outgoing(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].source == v)
    }
}

/// A finite-dimensional `Λ`-module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaModule {
    quiver: Arc<DoubledQuiver>,
    dims: Vec<usize>,
    maps: Vec<QMatrix>,
}

impl LambdaModule {
    /// Build a module, checking shapes and the preprojective relations.
    pub fn new(quiver: Arc<DoubledQuiver>, dims: Vec<usize>, maps: Vec<QMatrix>) -> Result<Self> {
        if dims.len() != quiver.vertices() || maps.len() != quiver.num_arrows() {
            return Err(Error::Module(format!(
                "expected {} spaces and {} arrow maps",
                quiver.vertices(),
                quiver.num_arrows()
            )));
        }
        for (a, (arrow, m)) in quiver.arrows().iter().zip(&maps).enumerate() {
            if m.rows() != dims[arrow.target] || m.cols() != dims[arrow.source] {
                return Err(Error::Module(format!(
                    "arrow {}→{} has a {}x{} matrix, expected {}x{} (arrow #{a})",
                    arrow.source + 1,
                    arrow.target + 1,
                    m.rows(),
                    m.cols(),
                    dims[arrow.target],
                    dims[arrow.source]
                )));
            }
        }
        let module = Self { quiver, dims, maps };
        for v in 0..module.dims.len() {
            if !module.relation(v).is_zero() {
                return Err(Error::Module(format!("preprojective relation fails at vertex {}", v + 1)));
            }
        }
        Ok(module)
    }

    pub fn zero(quiver: Arc<DoubledQuiver>) -> Self {
        let dims = vec![0; quiver.vertices()];
        let maps = quiver.arrows().iter().map(|_| QMatrix::zeros(0, 0)).collect();
        Self { quiver, dims, maps }
    }

    pub fn simple(quiver: Arc<DoubledQuiver>, i: usize) -> Self {
        let mut dims = vec![0; quiver.vertices()];
        dims[i] = 1;
        let maps = quiver.arrows().iter().map(|a| QMatrix::zeros(dims[a.target], dims[a.source])).collect();
        Self { quiver, dims, maps }
    }

    /// `Σ_{t(a)=v} ε(a) X_a X_{a*}`.
    fn relation(&self, v: usize) -> QMatrix {
        let mut sum = QMatrix::zeros(self.dims[v], self.dims[v]);
        for a in self.quiver.incoming(v) {
            let prod = self.maps[a].mul(&self.maps[self.quiver.star(a)]);
            sum = sum.add(&prod.scale(&q(self.quiver.arrows()[a].sign)));
        }
        sum
    }

    pub fn quiver(&self) -> &Arc<DoubledQuiver> {
        &self.quiver
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn map(&self, a: usize) -> &QMatrix {
        &self.maps[a]
    }

    /// Dimension vector in the simple-root basis.
    pub fn dimv(&self) -> Vec<i64> {
        self.dims.iter().map(|&d| d as i64).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn direct_sum(&self, other: &LambdaModule) -> Result<LambdaModule> {
        same_quiver(self, other)?;
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a.direct_sum(b)).collect();
        Ok(Self { quiver: self.quiver.clone(), dims, maps })
    }

    /// The dual module, `(DX)_a = (X_{a*})ᵀ`.
    pub fn dual(&self) -> LambdaModule {
        let maps = (0..self.maps.len()).map(|a| self.maps[self.quiver.star(a)].transpose()).collect();
        Self { quiver: self.quiver.clone(), dims: self.dims.clone(), maps }
    }

    /// `dim tp_j X`.
    pub fn top_dim(&self, j: usize) -> usize {
        let blocks: Vec<&QMatrix> = self.quiver.incoming(j).map(|a| &self.maps[a]).collect();
        self.dims[j] - hstack(&blocks, self.dims[j]).rank()
    }

    /// `dim soc_j X`.
    pub fn socle_dim(&self, j: usize) -> usize {
        let blocks: Vec<&QMatrix> = self.quiver.outgoing(j).map(|a| &self.maps[a]).collect();
        self.dims[j] - vstack(&blocks, self.dims[j]).rank()
    }

    /// `soc_{(j₁,…,j_t)} X` together with its embedding into `X`.
    pub fn soc_chain(&self, sequence: &[usize]) -> Result<(LambdaModule, ModuleMap)> {
        let n = self.quiver.vertices();
        if let Some(&j) = sequence.iter().find(|&&j| j >= n) {
            return Err(Error::InvalidInput(format!("vertex {} out of range", j + 1)));
        }
        let mut sub: Vec<QMatrix> = self.dims.iter().map(|&d| QMatrix::zeros(0, d)).collect();
        for &j in sequence {
            // Preimage of soc_j(X/U) at j: vectors mapped into U by every outgoing arrow.
            let reduced: Vec<_> = self.quiver.outgoing(j).map(|a| (a, sub[self.quiver.arrows()[a].target].rref())).collect();
            let mut rows: Vec<Vec<Q>> = Vec::new();
            for (a, rref) in &reduced {
                let image = &self.maps[*a];
                let cols: Vec<Vec<Q>> = (0..self.dims[j]).map(|l| rref.reduce(&image.column(l))).collect();
                for r in 0..image.rows() {
                    rows.push(cols.iter().map(|c| c[r].clone()).collect());
                }
            }
            let kernel = QMatrix::from_rows(rows, self.dims[j]).nullspace();
            sub[j] = span_basis(&kernel, self.dims[j]);
        }
        self.submodule(&sub)
    }

    /// Submodule spanned per vertex by the rows of `basis`.
    fn submodule(&self, basis: &[QMatrix]) -> Result<(LambdaModule, ModuleMap)> {
        let columns: Vec<QMatrix> = basis.iter().map(QMatrix::transpose).collect();
        let dims: Vec<usize> = basis.iter().map(QMatrix::rows).collect();
        let mut maps = Vec::with_capacity(self.maps.len());
        for (a, arrow) in self.quiver.arrows().iter().enumerate() {
            let image = self.maps[a].mul(&columns[arrow.source]);
            let restricted = columns[arrow.target]
                .solve_columns(&image)
                .ok_or_else(|| Error::Internal("subspace is not closed under the arrows".into()))?;
            maps.push(restricted);
        }
        let module = LambdaModule::new(self.quiver.clone(), dims, maps)?;
        Ok((module, ModuleMap { maps: columns }))
    }
}

fn same_quiver(x: &LambdaModule, y: &LambdaModule) -> Result<()> {
    if x.quiver != y.quiver {
        return Err(Error::Module("modules live on different quivers".into()));
    }
    Ok(())
}

fn hstack(blocks: &[&QMatrix], rows: usize) -> QMatrix {
    let cols: usize = blocks.iter().map(|b| b.cols()).sum();
    let mut out = QMatrix::zeros(rows, cols);
    let mut offset = 0;
    for b in blocks {
        for r in 0..rows {
            for c in 0..b.cols() {
                out[(r, offset + c)] = b[(r, c)].clone();
            }
        }
        offset += b.cols();
    }
    out
}

fn vstack(blocks: &[&QMatrix], cols: usize) -> QMatrix {
    let rows = blocks.iter().flat_map(|b| (0..b.rows()).map(move |r| b.row(r).to_vec())).collect();
    QMatrix::from_rows(rows, cols)
}

/// A morphism of `Λ`-modules, one matrix `f_i: X_i → Y_i` per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleMap {
    pub maps: Vec<QMatrix>,
}

impl ModuleMap {
    /// Whether `f_{t(a)} X_a = Y_a f_{s(a)}` for every arrow.
    pub fn is_morphism(&self, x: &LambdaModule, y: &LambdaModule) -> bool {
        x.quiver.arrows().iter().enumerate().all(|(a, arrow)| {
            self.maps[arrow.target].mul(&x.maps[a]) == y.maps[a].mul(&self.maps[arrow.source])
        })
    }

    pub fn is_injective(&self) -> bool {
        self.maps.iter().all(|f| f.rank() == f.cols())
    }
}

/// Linear system whose solutions are the morphisms `X → Y`.
fn hom_system(x: &LambdaModule, y: &LambdaModule) -> (QMatrix, Vec<usize>) {
    let n = x.dims.len();
    let mut offsets = Vec::with_capacity(n + 1);
    offsets.push(0);
    for k in 0..n {
        offsets.push(offsets[k] + y.dims[k] * x.dims[k]);
    }
    let unknowns = offsets[n];
    let mut rows = Vec::new();
    for (a, arrow) in x.quiver.arrows().iter().enumerate() {
        let (s, t) = (arrow.source, arrow.target);
        let (xa, ya) = (&x.maps[a], &y.maps[a]);
        for r in 0..y.dims[t] {
            for c in 0..x.dims[s] {
                // (f_t X_a - Y_a f_s)[r][c]
                let mut row = vec![Q::zero(); unknowns];
                for m in 0..x.dims[t] {
                    let v = &xa[(m, c)];
                    if !v.is_zero() {
                        row[offsets[t] + r * x.dims[t] + m] += v;
                    }
                }
                for m in 0..y.dims[s] {
                    let v = &ya[(r, m)];
                    if !v.is_zero() {
                        row[offsets[s] + m * x.dims[s] + c] -= v;
                    }
                }
                if row.iter().any(|e| !e.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    (QMatrix::from_rows(rows, unknowns), offsets)
}

pub fn hom_dim(x: &LambdaModule, y: &LambdaModule) -> Result<usize> {
    same_quiver(x, y)?;
    let (system, offsets) = hom_system(x, y);
    Ok(offsets[offsets.len() - 1] - system.rank())
}

/// A basis of `Hom_Λ(X, Y)`.
pub fn hom_basis(x: &LambdaModule, y: &LambdaModule) -> Result<Vec<ModuleMap>> {
    same_quiver(x, y)?;
    let (system, offsets) = hom_system(x, y);
    let kernel = system.nullspace();
    Ok(kernel
        .into_iter()
        .map(|v| ModuleMap {
            maps: (0..x.dims.len())
                .map(|k| {
                    let vals = v[offsets[k]..offsets[k + 1]].to_vec();
                    let rows = (0..y.dims[k]).map(|r| vals[r * x.dims[k]..(r + 1) * x.dims[k]].to_vec()).collect();
                    QMatrix::from_rows(rows, x.dims[k])
                })
                .collect(),
        })
        .collect())
}

/// The preprojective algebra `Λ` of a simply-laced type, stored through its
/// indecomposable projectives `P_i = Λe_i`.
#[derive(Debug)]
pub struct PreprojAlgebra {
    rs: Arc<RootSystem>,
    quiver: Arc<DoubledQuiver>,
    projectives: Vec<LambdaModule>,
    injectives: Vec<LambdaModule>,
    /// `layers[i][d][k] = dim` of paths `i → k` of length `d` modulo relations.
    layers: Vec<Vec<Vec<usize>>>,
    n_modules: OnceLock<Vec<LambdaModule>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardKind {
    Simple,
    Projective,
    Injective,
}

/// Build `Λ` degree by degree until the path spaces vanish.
pub fn build_preprojective(rs: &Arc<RootSystem>, orientation: Orientation) -> Result<PreprojAlgebra> {
    let quiver = Arc::new(DoubledQuiver::new(rs, orientation)?);
    let n = rs.rank();
    let coxeter = 2 * rs.num_positive_roots() / n;
    let cap = 2 * (coxeter - 1);
    let mut projectives = Vec::with_capacity(n);
    let mut layers = Vec::with_capacity(n);
    for i in 0..n {
        let (module, dims) = build_projective(&quiver, i, cap)?;
        let expected = projective_dimv(rs, i)?;
        if module.dimv() != expected {
            return Err(Error::Internal(format!(
                "dim P_{} = {:?}, expected {:?}",
                i + 1,
                module.dimv(),
                expected
            )));
        }
        projectives.push(module);
        layers.push(dims);
    }
    let injectives = projectives.iter().map(LambdaModule::dual).collect();
    Ok(PreprojAlgebra { rs: rs.clone(), quiver, projectives, injectives, layers, n_modules: OnceLock::new() })
}

/// `ϖ_i - w₀ϖ_i` in the simple-root basis.
fn projective_dimv(rs: &RootSystem, i: usize) -> Result<Vec<i64>> {
    let fw = rs.fundamental_weight(i);
    let low = rs.act(rs.longest(), &fw);
    let diff = WeightVec(fw.0.iter().zip(&low.0).map(|(a, b)| a - b).collect());
    rs.weight_to_roots(&diff).ok_or_else(|| Error::Internal("ϖ - w₀ϖ is not in the root lattice".into()))
}

fn build_projective(quiver: &Arc<DoubledQuiver>, i: usize, cap: usize) -> Result<(LambdaModule, Vec<Vec<usize>>)> {
    let n = quiver.vertices();
    let arrows = quiver.arrows();
    let mut dims: Vec<Vec<usize>> = vec![(0..n).map(|k| usize::from(k == i)).collect()];
    // act[d][a]: layer d at s(a) → layer d+1 at t(a)
    let mut act: Vec<Vec<QMatrix>> = Vec::new();
    loop {
        let d = dims.len() - 1;
        if dims[d].iter().all(|&x| x == 0) {
            break;
        }
        if d > cap {
            return Err(Error::Internal(format!("path length exceeded {cap} while building P_{}", i + 1)));
        }
        let mut next_dims = vec![0; n];
        let mut next_act: Vec<QMatrix> = (0..arrows.len()).map(|_| QMatrix::zeros(0, 0)).collect();
        for v in 0..n {
            // Free span at v: one block per incoming arrow.
            let incoming: Vec<usize> = quiver.incoming(v).collect();
            let mut offset = vec![0; arrows.len()];
            let mut width = 0;
            for &a in &incoming {
                offset[a] = width;
                width += dims[d][arrows[a].source];
            }
            // Relation ρ_v applied to paths of length d-1 ending at v.
            let mut relations: Vec<Vec<Q>> = Vec::new();
            if d >= 1 {
                for b in 0..dims[d - 1][v] {
                    let mut row = vec![Q::zero(); width];
                    for &a in &incoming {
                        let back = &act[d - 1][quiver.star(a)];
                        let sign = q(arrows[a].sign);
                        for r in 0..back.rows() {
                            let x = &back[(r, b)];
                            if !x.is_zero() {
                                row[offset[a] + r] += &sign * x;
                            }
                        }
                    }
                    relations.push(row);
                }
            }
            let rref = QMatrix::from_rows(relations, width).rref();
            let free = rref.free_columns();
            next_dims[v] = free.len();
            for &a in &incoming {
                let src = dims[d][arrows[a].source];
                let mut m = QMatrix::zeros(free.len(), src);
                for b in 0..src {
                    let mut unit = vec![Q::zero(); width];
                    unit[offset[a] + b] = Q::one();
                    let red = rref.reduce(&unit);
                    for (r, &f) in free.iter().enumerate() {
                        m[(r, b)] = red[f].clone();
                    }
                }
                next_act[a] = m;
            }
        }
        act.push(next_act);
        dims.push(next_dims);
    }
    dims.pop();
    act.pop();

    // Assemble: X_k = ⊕_d layer d at k.
    let depth = dims.len();
    let mut start = vec![vec![0; n]; depth + 1];
    for d in 0..depth {
        for k in 0..n {
            start[d + 1][k] = start[d][k] + dims[d][k];
        }
    }
    let total: Vec<usize> = start[depth].clone();
    let mut maps: Vec<QMatrix> = arrows.iter().map(|a| QMatrix::zeros(total[a.target], total[a.source])).collect();
    for (d, layer) in act.iter().enumerate() {
        for (a, arrow) in arrows.iter().enumerate() {
            let block = &layer[a];
            for r in 0..block.rows() {
                for c in 0..block.cols() {
                    maps[a][(start[d + 1][arrow.target] + r, start[d][arrow.source] + c)] = block[(r, c)].clone();
                }
            }
        }
    }
    let module = LambdaModule::new(quiver.clone(), total, maps)?;
    Ok((module, dims))
}

impl PreprojAlgebra {
    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn quiver(&self) -> &Arc<DoubledQuiver> {
        &self.quiver
    }

    /// `dim e_k Λ e_i`, indexed `[i][k]`.
    pub fn dims(&self) -> Vec<Vec<usize>> {
        self.projectives.iter().map(|p| p.dims().to_vec()).collect()
    }

    pub fn dimension(&self) -> usize {
        self.projectives.iter().map(LambdaModule::total_dim).sum()
    }

    /// Dimensions of the path-length layers of `P_i`.
    pub fn layers(&self, i: usize) -> &[Vec<usize>] {
        &self.layers[i]
    }

    pub fn standard_module(&self, kind: StandardKind, i: usize) -> LambdaModule {
        match kind {
            StandardKind::Simple => LambdaModule::simple(self.quiver.clone(), i),
            StandardKind::Projective => self.projectives[i].clone(),
            StandardKind::Injective => self.injectives[i].clone(),
        }
    }

    pub fn simple(&self, i: usize) -> LambdaModule {
        self.standard_module(StandardKind::Simple, i)
    }

    pub fn zero_module(&self) -> LambdaModule {
        LambdaModule::zero(self.quiver.clone())
    }

    /// The non-split extension `0 → S_socle → X → S_top → 0` along the arrow
    /// `top → socle`, which must exist in `Q̄`.
    pub fn extension(&self, top: usize, socle: usize) -> Result<LambdaModule> {
        let arrow = self
            .quiver
            .find(top, socle)
            .ok_or_else(|| Error::InvalidInput(format!("no arrow {} → {}", top + 1, socle + 1)))?;
        let mut dims = vec![0; self.quiver.vertices()];
        dims[top] = 1;
        dims[socle] = 1;
        let maps = self
            .quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, ar)| {
                let mut m = QMatrix::zeros(dims[ar.target], dims[ar.source]);
                if a == arrow {
                    m[(0, 0)] = Q::one();
                }
                m
            })
            .collect();
        LambdaModule::new(self.quiver.clone(), dims, maps)
    }

    /// `(dimv X, dimv Y)` for the symmetric form `(α_i, α_k) = c_ik`.
    pub fn form(&self, x: &LambdaModule, y: &LambdaModule) -> i64 {
        self.rs.root_form(&x.dimv(), &y.dimv())
    }

    /// `dim Ext¹(X, Y)` by the Crawley-Boevey formula.
    pub fn ext1_dim(&self, x: &LambdaModule, y: &LambdaModule) -> Result<usize> {
        let value = hom_dim(x, y)? as i64 + hom_dim(y, x)? as i64 - self.form(x, y);
        usize::try_from(value)
            .map_err(|_| Error::Internal(format!("negative Ext¹ dimension {value}: input not a valid Λ-module pair")))
    }

    /// `N(γ)` built from the reduced word `word` of `w`, where `-γ = wϖ_i`.
    /// Returns the submodule of `I_i` as a row basis per vertex.
    fn n_gamma_subspace(&self, g: ChamberWeight, word: &[usize]) -> Result<(LambdaModule, Vec<QMatrix>)> {
        let (w, i) = self.rs.witness(self.rs.neg_gamma(g));
        if self.rs.from_word(word)? != w || word.len() != self.rs.length(w) {
            return Err(Error::InvalidInput(format!("{word:?} is not a reduced word for the witness of γ")));
        }
        let sequence: Vec<usize> = word.iter().rev().copied().collect();
        let (module, embedding) = self.injectives[i].soc_chain(&sequence)?;
        let mut expected = self.rs.gamma_coords(g).to_vec();
        expected[i] += 1;
        let expected = self
            .rs
            .weight_to_roots(&WeightVec(expected))
            .ok_or_else(|| Error::Internal("ϖ_i + γ is not in the root lattice".into()))?;
        if module.dimv() != expected {
            return Err(Error::Internal(format!(
                "dimv N(γ) = {:?}, expected {:?}",
                module.dimv(),
                expected
            )));
        }
        let span = embedding.maps.iter().map(|b| b.transpose().rref().matrix).collect();
        Ok((module, span))
    }

    /// `N(γ) = soc_{(k_s,…,k_1)}(I_i)` for `-γ = s_{k_1}⋯s_{k_s}ϖ_i`, checked
    /// against a second reduced word when one is available.
    pub fn n_gamma(&self, g: ChamberWeight) -> Result<LambdaModule> {
        let (w, _) = self.rs.witness(self.rs.neg_gamma(g));
        let first = self.rs.word(w);
        let second = self.rs.lexmin_word(w);
        let (module, span) = self.n_gamma_subspace(g, &first)?;
        if second != first {
            let (_, other) = self.n_gamma_subspace(g, &second)?;
            if other != span {
                return Err(Error::Internal(format!(
                    "N(γ) depends on the reduced word: {first:?} vs {second:?}"
                )));
            }
        }
        Ok(module)
    }

    /// `N(γ)` along an explicit reduced word of its witness.
    pub fn n_gamma_with_word(&self, g: ChamberWeight, word: &[usize]) -> Result<LambdaModule> {
        Ok(self.n_gamma_subspace(g, word)?.0)
    }

    /// The subspace of `I_i` underlying `N(γ)` along `word`, as a reduced
    /// row basis per vertex.
    pub fn n_gamma_span(&self, g: ChamberWeight, word: &[usize]) -> Result<Vec<QMatrix>> {
        Ok(self.n_gamma_subspace(g, word)?.1)
    }

    /// `N(γ)` for every chamber weight, computed once.
    pub fn n_modules(&self) -> Result<&[LambdaModule]> {
        if let Some(all) = self.n_modules.get() {
            return Ok(all);
        }
        let gammas: Vec<ChamberWeight> = self.rs.chamber_weights().collect();
        let all = Exec::default().try_map(&gammas, |&g| self.n_gamma(g))?;
        Ok(self.n_modules.get_or_init(|| all))
    }

    /// `D_γ(X) = dim Hom(N(γ), X)`.
    pub fn d_gamma(&self, g: ChamberWeight, x: &LambdaModule) -> Result<usize> {
        hom_dim(&self.n_modules()?[g.index()], x)
    }

    /// `M_γ = -dim Hom(N(γ), X)` for every γ. Only meaningful as an MV
    /// polytope when `X` is a general point of its component.
    pub fn bz_from_module(&self, x: &LambdaModule, exec: Exec) -> Result<BZDatum> {
        let modules = self.n_modules()?;
        let entries = exec.try_map(modules, |n| hom_dim(n, x).map(|h| -(h as i64)))?;
        BZDatum::from_entries(&self.rs, entries)
    }
}
