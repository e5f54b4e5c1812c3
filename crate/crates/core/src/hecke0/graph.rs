use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_traits::Zero;
use serde::Serialize;

use super::{YBKind, YBLabel};
use crate::combinat::{convolution, ColorWord, ColoredPermutation, ColoredRibbon, Composition, Permutation};
use crate::linalg::{rat, ExactInt, RatMatrix};
use crate::{Error, Result};

/// How `T_i` acts on a basis vector of a semi-combinatorial module.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Action {
    /// An edge to another vertex labelled `T_i`, `1+T_i` or `−T_i`.
    Edge { to: usize, label: YBLabel },
    /// A loop: `−T_i` (eigenvalue −1) or `1+T_i` (eigenvalue 0).
    Loop(YBLabel),
}

/// A semi-combinatorial module presented by a graph: for each vertex and
/// each `i`, exactly one edge or loop says how `T_i` acts. Optional
/// Lagrange labels give the `L_c` eigenvector of each vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModuleGraph {
    pub n: usize,
    /// Vertex labels, sorted lexicographically; vertex ids are positions.
    pub vertices: Vec<Permutation>,
    pub generator: usize,
    /// `actions[v][i-1]`.
    pub actions: Vec<Vec<Action>>,
    pub lagrange: Option<Vec<ColorWord>>,
}

#[derive(Serialize)]
struct EdgeView {
    from: String,
    to: String,
    label: String,
}

#[derive(Serialize)]
struct LoopView {
    vertex: String,
    label: String,
}

#[derive(Serialize)]
struct LagrangeView {
    vertex: String,
    colors: String,
}

#[derive(Serialize)]
struct GraphView {
    n: usize,
    vertices: Vec<String>,
    generator: String,
    edges: Vec<EdgeView>,
    loops: Vec<LoopView>,
    lagrange_loops: Vec<LagrangeView>,
}

impl ModuleGraph {
    pub fn dim(&self) -> usize {
        self.vertices.len()
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.vertices.binary_search(p).ok()
    }

    /// Edges `(from, to, label)` in vertex order.
    pub fn edges(&self) -> Vec<(usize, usize, YBLabel)> {
        let mut out = Vec::new();
        for (v, acts) in self.actions.iter().enumerate() {
            for a in acts {
                if let Action::Edge { to, label } = a {
                    out.push((v, *to, *label));
                }
            }
        }
        out
    }

    pub fn loops(&self) -> Vec<(usize, YBLabel)> {
        let mut out = Vec::new();
        for (v, acts) in self.actions.iter().enumerate() {
            for a in acts {
                if let Action::Loop(label) = a {
                    out.push((v, *label));
                }
            }
        }
        out
    }

    /// `T_i` applied to a coordinate vector.
    pub fn apply_t<T: ExactInt>(&self, i: usize, x: &[T]) -> Result<Vec<T>> {
        let mut y = vec![T::zero(); self.dim()];
        for (v, xv) in x.iter().enumerate() {
            if xv.is_zero() {
                continue;
            }
            match self.actions[v][i - 1] {
                Action::Edge { to, label } => match label.kind {
                    YBKind::T => y[to] = y[to].add(xv)?,
                    YBKind::OnePlusT => {
                        y[to] = y[to].add(xv)?;
                        y[v] = y[v].sub(xv)?;
                    }
                    YBKind::MinusT => y[to] = y[to].sub(xv)?,
                },
                Action::Loop(label) => {
                    if label.kind == YBKind::MinusT {
                        y[v] = y[v].sub(xv)?;
                    }
                }
            }
        }
        Ok(y)
    }

    /// `L_c` applied to a coordinate vector (identity when unlabelled and
    /// `c` is constant equal to 1).
    pub fn apply_l<T: ExactInt>(&self, c: &ColorWord, x: &[T]) -> Vec<T> {
        x.iter().enumerate().map(|(v, xv)| if self.vertex_color(v) == *c { xv.clone() } else { T::zero() }).collect()
    }

    pub fn vertex_color(&self, v: usize) -> ColorWord {
        match &self.lagrange {
            Some(l) => l[v].clone(),
            None => ColorWord::constant(1, self.n),
        }
    }

    pub fn t_matrix(&self, i: usize) -> RatMatrix {
        let mut m = RatMatrix::zeros(self.dim(), self.dim());
        for v in 0..self.dim() {
            let mut e = vec![0i128; self.dim()];
            e[v] = 1;
            let col = self.apply_t(i, &e).expect("small entries");
            for (w, x) in col.into_iter().enumerate() {
                if x != 0 {
                    m.data[w][v] = rat(x as i64);
                }
            }
        }
        m
    }

    pub fn l_matrix(&self, c: &ColorWord) -> RatMatrix {
        let mut m = RatMatrix::zeros(self.dim(), self.dim());
        for v in 0..self.dim() {
            if self.vertex_color(v) == *c {
                m.data[v][v] = rat(1);
            }
        }
        m
    }

    /// Indices `i` where `T_i` acts by −1 on the top (the quotient by the
    /// span of the non-generator vertices).
    pub fn top_descents(&self) -> BTreeSet<usize> {
        (1..self.n)
            .filter(|&i| match self.actions[self.generator][i - 1] {
                Action::Edge { label, .. } => label.kind == YBKind::OnePlusT,
                Action::Loop(label) => label.kind == YBKind::MinusT,
            })
            .collect()
    }

    /// Checks the 0-Hecke relations on the matrix realization.
    pub fn satisfies_hecke_relations(&self) -> bool {
        let ts: Vec<RatMatrix> = (1..self.n).map(|i| self.t_matrix(i)).collect();
        let id = RatMatrix::identity(self.dim());
        for (k, t) in ts.iter().enumerate() {
            if !t.mul(&t.add(&id)).is_zero() {
                return false;
            }
            if let Some(u) = ts.get(k + 1) {
                if t.mul(u).mul(t) != u.mul(t).mul(u) {
                    return false;
                }
            }
            for u in ts.iter().skip(k + 2) {
                if t.mul(u) != u.mul(t) {
                    return false;
                }
            }
        }
        true
    }

    /// Same graph with vertex ids renumbered after sorting the labels.
    pub(crate) fn from_unsorted(
        n: usize,
        vertices: Vec<Permutation>,
        generator: &Permutation,
        action: impl Fn(&Permutation, usize) -> (Option<Permutation>, YBLabel),
        lagrange: Option<&dyn Fn(&Permutation) -> ColorWord>,
    ) -> ModuleGraph {
        let mut vertices = vertices;
        vertices.sort();
        vertices.dedup();
        let index: BTreeMap<&Permutation, usize> = vertices.iter().enumerate().map(|(k, p)| (p, k)).collect();
        let actions = vertices
            .iter()
            .map(|v| {
                (1..n)
                    .map(|i| match action(v, i) {
                        (Some(w), label) => Action::Edge { to: index[&w], label },
                        (None, label) => Action::Loop(label),
                    })
                    .collect()
            })
            .collect();
        let lagrange = lagrange.map(|f| vertices.iter().map(f).collect());
        ModuleGraph { n, generator: index[generator], actions, lagrange, vertices }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let name = |v: usize| self.vertices[v].to_string();
        let view = GraphView {
            n: self.n,
            vertices: self.vertices.iter().map(|p| p.to_string()).collect(),
            generator: name(self.generator),
            edges: self
                .edges()
                .into_iter()
                .map(|(a, b, l)| EdgeView { from: name(a), to: name(b), label: l.to_string() })
                .collect(),
            loops: self.loops().into_iter().map(|(v, l)| LoopView { vertex: name(v), label: l.to_string() }).collect(),
            lagrange_loops: match &self.lagrange {
                Some(l) => {
                    l.iter().enumerate().map(|(v, c)| LagrangeView { vertex: name(v), colors: c.to_string() }).collect()
                }
                None => Vec::new(),
            },
        };
        serde_json::to_value(view).expect("graph view serializes")
    }
}

/// A weak-order interval `[lo, hi]` colored by `x`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntervalSpec {
    pub x: ColorWord,
    pub lo: Permutation,
    pub hi: Permutation,
}

impl IntervalSpec {
    pub fn new(x: ColorWord, lo: Permutation, hi: Permutation) -> Result<Self> {
        if x.len() != lo.n() || lo.n() != hi.n() {
            return Err(Error::SizeMismatch(x.len(), lo.n()));
        }
        if !lo.left_weak_leq(&hi) {
            return Err(Error::NotInWeakOrder { lo: lo.to_string(), hi: hi.to_string() });
        }
        Ok(IntervalSpec { x, lo, hi })
    }

    pub fn n(&self) -> usize {
        self.lo.n()
    }

    /// The monochromatic projective `P_J`: the interval
    /// `[α(J)∘α(J̄~), ω_n]` colored by `ω(J)`.
    pub fn projective(j: &Composition) -> IntervalSpec {
        let n = j.size();
        let lo = j.alpha().compose(&j.mirror().conjugate().alpha());
        let x = ColorWord::new(j.omega().as_slice().to_vec()).unwrap();
        IntervalSpec { x, lo, hi: Permutation::longest(n) }
    }

    /// The simple module `S_I` as the one-point interval `[ω_n, ω_n]`
    /// colored by a word whose descent composition is `Ī`.
    pub fn simple(i: &Composition) -> IntervalSpec {
        let n = i.size();
        let x = ColorWord::new(i.mirror().alpha().as_slice().to_vec()).unwrap();
        IntervalSpec { x, lo: Permutation::longest(n), hi: Permutation::longest(n) }
    }

    /// Vertices of the interval in lexicographic order.
    pub fn vertices(&self) -> Vec<Permutation> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::from([self.lo.clone()]);
        while let Some(p) = queue.pop_front() {
            if !seen.insert(p.clone()) {
                continue;
            }
            for i in 1..self.n() {
                if p.left_ascent(i) {
                    let q = p.s_left(i);
                    if q.left_weak_leq(&self.hi) {
                        queue.push_back(q);
                    }
                }
            }
        }
        seen.into_iter().collect()
    }
}

/// The module spanned by the Yang-Baxter basis elements of `[lo, hi]`:
/// up-edges `T_i` / `1+T_i` per the spectral rule, loops elsewhere
/// (`−T_i` when `x_{ρ⁻¹(i)} < x_{ρ⁻¹(i+1)}`, else `1+T_i`), with `x`
/// standardized.
pub fn interval_module(spec: &IntervalSpec) -> ModuleGraph {
    let n = spec.n();
    let x = spec.x.standardized();
    let vertices = spec.vertices();
    let members: BTreeSet<Permutation> = vertices.iter().cloned().collect();
    let action = |rho: &Permutation, i: usize| {
        let inv = rho.inverse();
        let (t, u) = (x.at(inv.at(i)), x.at(inv.at(i + 1)));
        let up = rho.s_left(i);
        if rho.left_ascent(i) && members.contains(&up) {
            (Some(up), YBLabel::spectral(i, t as u8, u as u8))
        } else {
            let kind = if t < u { YBKind::MinusT } else { YBKind::OnePlusT };
            (None, YBLabel::new(kind, i))
        }
    };
    ModuleGraph::from_unsorted(n, vertices, &spec.lo, action, None)
}

/// The full Yang-Baxter graph of `x`: the interval `[1, ω_n]`.
pub fn yb_graph(x: &ColorWord) -> ModuleGraph {
    let n = x.len();
    interval_module(&IntervalSpec { x: x.clone(), lo: Permutation::identity(n), hi: Permutation::longest(n) })
}

/// Shape of the anticycloribbon of `(σ, x)⁻¹`, labelling the simple
/// quotient of the Yang-Baxter element `Y_σ(x)`.
pub fn simple_quotient_label(sigma: &Permutation, x: &ColorWord) -> Result<Composition> {
    let cp = ColoredPermutation::new(sigma.clone(), x.clone())?;
    Ok(ColoredRibbon::anticycloribbon_of(&cp.inverse()).shape)
}

/// Composition factors of an interval module, one per vertex.
pub fn interval_factors(spec: &IntervalSpec) -> Vec<Composition> {
    let mut out: Vec<Composition> =
        spec.vertices().iter().map(|rho| simple_quotient_label(rho, &spec.x).expect("sizes agree")).collect();
    out.sort();
    out
}

/// Induction product of two interval modules: the interval
/// `[α'•α'', β''[k]·β']` in the graph of a color `x ∈ x' * x''`.
/// Without an explicit color the lexicographically smallest one is used.
pub fn hecke_induction_interval(
    a: &IntervalSpec,
    b: &IntervalSpec,
    color: Option<&ColorWord>,
) -> Result<(IntervalSpec, ModuleGraph)> {
    let k = a.n();
    let candidates = convolution(&a.x.standardized(), &b.x.standardized());
    let x = match color {
        Some(c) => {
            if !candidates.contains(&c.standardized()) {
                return Err(Error::InvalidArgument(format!("{c} is not in the convolution of the colors")));
            }
            c.clone()
        }
        None => ColorWord::new(candidates[0].as_slice().to_vec()).unwrap_or_else(|_| ColorWord::constant(1, 0)),
    };
    let lo = a.lo.shifted_concat(&b.lo);
    let mut hi = b.hi.shifted(k);
    hi.extend_from_slice(a.hi.as_slice());
    let spec = IntervalSpec::new(x, lo, Permutation::new(hi)?)?;
    let graph = interval_module(&spec);
    Ok((spec, graph))
}

/// Checks that every vertex/index pair carries exactly one action and
/// the graph is connected from its generator along edges.
pub fn is_well_formed(g: &ModuleGraph) -> bool {
    if g.actions.len() != g.dim() || g.actions.iter().any(|a| a.len() + 1 != g.n.max(1)) {
        return false;
    }
    let mut seen = vec![false; g.dim()];
    let mut queue = VecDeque::from([g.generator]);
    while let Some(v) = queue.pop_front() {
        if std::mem::replace(&mut seen[v], true) {
            continue;
        }
        for a in &g.actions[v] {
            if let Action::Edge { to, .. } = a {
                queue.push_back(*to);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// Dimension of the cyclic submodule generated by the generator vertex,
/// computed from the matrix realization.
pub fn cyclic_dimension(g: &ModuleGraph) -> usize {
    let mut basis = crate::linalg::IntEchelon::<i128>::new(g.dim());
    let mut e = vec![0i128; g.dim()];
    e[g.generator] = 1;
    let mut queue = VecDeque::from([e]);
    while let Some(v) = queue.pop_front() {
        if v.iter().all(Zero::is_zero) || !basis.insert(v.clone()).expect("small entries") {
            continue;
        }
        for i in 1..g.n {
            queue.push_back(g.apply_t(i, &v).expect("small entries"));
        }
    }
    basis.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn cw(s: &str) -> ColorWord {
        s.parse().unwrap()
    }

    #[test]
    fn yb_graph_2431_edges() {
        let g = yb_graph(&cw("2431"));
        assert_eq!(g.dim(), 24);
        assert!(g.satisfies_hecke_relations());
        assert!(is_well_formed(&g));
        // From the identity: x_1 = 2 < x_2 = 4 gives 1+T_1, x_2 = 4 > x_3 = 3 gives T_2.
        let id = g.index_of(&Permutation::identity(4)).unwrap();
        let labels: Vec<String> = g.actions[id]
            .iter()
            .map(|a| match a {
                Action::Edge { label, .. } => label.to_string(),
                Action::Loop(l) => format!("loop {l}"),
            })
            .collect();
        assert_eq!(labels, ["1+T1", "T2", "T3"]);
    }

    #[test]
    fn simple_quotient_example() {
        assert_eq!(simple_quotient_label(&p("1342"), &cw("3213")).unwrap().parts(), &[1, 3]);
    }

    #[test]
    fn one_point_interval_is_simple() {
        for x in ColorWord::all(3, 3) {
            for s in Permutation::all(3) {
                let spec = IntervalSpec::new(x.clone(), s.clone(), s.clone()).unwrap();
                let g = interval_module(&spec);
                assert_eq!(g.dim(), 1);
                let label = simple_quotient_label(&s, &x).unwrap();
                assert_eq!(g.top_descents(), label.descents());
            }
        }
    }

    #[test]
    fn figure_interval_with_color_2314() {
        let spec = IntervalSpec::new(cw("2314"), p("2143"), p("4321")).unwrap();
        let g = interval_module(&spec);
        let names: Vec<String> = g.vertices.iter().map(|v| v.to_string()).collect();
        assert_eq!(names, ["2143", "3142", "3241", "4132", "4231", "4321"]);
        assert!(g.satisfies_hecke_relations());
        let shapes: Vec<String> = ["2143", "3142", "3241", "4132", "4231", "4321"]
            .iter()
            .map(|v| simple_quotient_label(&p(v), &cw("2314")).unwrap().to_string())
            .collect();
        assert_eq!(shapes, ["2.2", "1.3", "4", "1.2.1", "3.1", "2.2"]);
    }

    #[test]
    fn bad_interval_rejected() {
        assert!(IntervalSpec::new(cw("123"), p("321"), p("123")).is_err());
    }
}
