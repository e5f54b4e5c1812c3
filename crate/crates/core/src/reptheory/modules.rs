use std::collections::BTreeSet;

use super::{ProjectiveLabel, SimpleAction, SimpleLabel};
use crate::aks0::AKSElement;
use crate::combinat::{convolution, ColorWord, ColoredPermutation, ColoredRibbon, Composition, Permutation};
use crate::hecke0::{eta, interval_module, Action, IntervalSpec, ModuleGraph, YBKind, YBLabel};
use crate::linalg::RatMatrix;
use crate::{Error, Result};

/// The one-dimensional action on `S_{[I,c]}`: `L_d ↦ δ_{d,c}`, and `T_i`
/// acts by −1 exactly when `i` is a descent of the shape of `φ([I,c])`.
pub fn simple_action(label: &SimpleLabel) -> SimpleAction {
    let d = label.phi().shape().descents();
    let t_eigenvalues = (1..label.size()).map(|i| if d.contains(&i) { -1 } else { 0 }).collect();
    SimpleAction { colors: label.colors().clone(), t_eigenvalues }
}

/// The generator `η_{[I,c]} = L_c·η_I` of the minimal left ideal
/// isomorphic to `S_{[I,c]}`.
pub fn eta_element(label: &SimpleLabel, r: usize) -> Result<AKSElement> {
    let l = AKSElement::l(r, label.colors())?;
    l.mul(&AKSElement::from_hecke(r, &eta(label.shape())))
}

/// The simple module with color `c` on which `T_i` acts by −1 exactly
/// for `i ∈ minus_one`.
pub fn simple_with_action(c: &ColorWord, minus_one: &BTreeSet<usize>) -> Result<SimpleLabel> {
    let anti = ColoredRibbon::from_descents(minus_one, c.clone());
    Ok(ProjectiveLabel::new(anti)?.phi())
}

/// The simple quotient at each vertex of a semi-combinatorial module with
/// Lagrange labels, read off from the action of `T_i` modulo the other
/// vertices: `1+T_i` edges and `−T_i` loops give −1, everything else 0.
/// Returned in vertex order.
pub fn vertex_factors(g: &ModuleGraph) -> Result<Vec<SimpleLabel>> {
    (0..g.dim())
        .map(|v| {
            let minus: BTreeSet<usize> = (1..g.n)
                .filter(|&i| match g.actions[v][i - 1] {
                    Action::Edge { label, .. } => label.kind == YBKind::OnePlusT,
                    Action::Loop(label) => label.kind == YBKind::MinusT,
                })
                .collect();
            simple_with_action(&g.vertex_color(v), &minus)
        })
        .collect()
}

/// Composition factors of a semi-combinatorial module, sorted canonically
/// (with multiplicity).
pub fn composition_factors(g: &ModuleGraph) -> Result<Vec<SimpleLabel>> {
    let mut out = vertex_factors(g)?;
    out.sort();
    Ok(out)
}

/// The induction product `S_a ⊗̂ S_b`, built vertex by vertex over the
/// convolution `σ_1 * σ_2`, where `(σ_1, c_1)` and `(σ_2, c_2)` are the
/// inverses of the maximal colored permutations of `φ(a)` and `φ(b)`.
///
/// With `c = c_1c_2` and `k = |a|`, the vertex `τ` carries
/// `L_{c∘τ⁻¹}`; the values `i`, `i+1` of `τ` come from the first factor
/// when their positions are at most `k`. When `i` comes from the first
/// factor and `i+1` from the second, `T_i` moves `τ` to `s_i∘τ` with label
/// `1+T_i` (if `i` is an anti-descent of `(τ,c)⁻¹`) or `T_i`; otherwise
/// `T_i` is a loop `−T_i` (anti-descent) or `1+T_i`.
pub fn induct_simples(a: &SimpleLabel, b: &SimpleLabel) -> Result<ModuleGraph> {
    let (pa, pb) = (a.phi(), b.phi());
    let ia = pa.ribbon().max_colored_perm()?.inverse();
    let ib = pb.ribbon().max_colored_perm()?.inverse();
    let (sa, sb) = (ia.perm, ib.perm);
    let c = ia.colors.concat(&ib.colors);
    let k = a.size();
    let n = k + b.size();
    let vertices = convolution(&sa, &sb);
    let generator = vertices.iter().min_by_key(|t| (t.length(), (*t).clone())).cloned().ok_or(Error::EmptyInput)?;
    let inverse_colored =
        |tau: &Permutation| ColoredPermutation::new(tau.clone(), c.clone()).expect("sizes agree").inverse();
    let action = |tau: &Permutation, i: usize| {
        let inv = tau.inverse();
        let first = |v: usize| inv.at(v) <= k;
        let anti = inverse_colored(tau).is_anti_descent(i);
        if first(i) && !first(i + 1) {
            let kind = if anti { YBKind::OnePlusT } else { YBKind::T };
            (Some(tau.s_left(i)), YBLabel::new(kind, i))
        } else {
            let kind = if anti { YBKind::MinusT } else { YBKind::OnePlusT };
            (None, YBLabel::new(kind, i))
        }
    };
    let lagrange = |tau: &Permutation| inverse_colored(tau).colors;
    Ok(ModuleGraph::from_unsorted(n, vertices, &generator, action, Some(&lagrange)))
}

/// Restriction of a simple module to `AKS(k) ⊗ AKS(n−k)`: cut the ribbon
/// after its `k`-th cell.
pub fn restrict_simple(label: &SimpleLabel, k: usize) -> Result<(SimpleLabel, SimpleLabel)> {
    let n = label.size();
    if k == 0 || k >= n {
        return Err(Error::OutOfRange { index: k, bound: n });
    }
    let (l, r) = label.ribbon().cut(k);
    Ok((SimpleLabel::new(l)?, SimpleLabel::new(r)?))
}

/// Whether `d` respects the order of `c`: `c_i < c_j` implies `d_i < d_j`.
fn compatible(d: &Permutation, c: &[u8]) -> bool {
    let n = d.n();
    (1..=n).all(|i| (1..=n).all(|j| c[i - 1] >= c[j - 1] || d.at(i) < d.at(j)))
}

/// The color vector of [`projective_module`]: the lexicographically
/// smallest element of the iterated convolution of the run colors that
/// is compatible with `c`.
fn projective_color(runs: &[IntervalSpec], c: &ColorWord) -> Permutation {
    let mut candidates = vec![Permutation::identity(0)];
    let mut len = 0;
    for run in runs {
        len += run.n();
        let prefix = &c.colors()[..len];
        let x = run.x.standardized();
        let mut next: Vec<Permutation> =
            candidates.iter().flat_map(|p| convolution(p, &x)).filter(|d| compatible(d, prefix)).collect();
        next.sort();
        next.dedup();
        candidates = next;
    }
    candidates.into_iter().next().expect("the color word itself standardizes compatibly")
}

/// The indecomposable projective `P_{[K,c]}`: the induction product of
/// the monochromatic projectives of the maximal monochromatic runs of
/// `[K,c]`, realized on the interval `[α_1•α_2•…, β_m[…]·…·β_1]` with a
/// color vector compatible with `c`. The vertex `ρ` carries `L_{c∘ρ⁻¹}`.
pub fn projective_module(label: &ProjectiveLabel) -> Result<ModuleGraph> {
    let runs: Vec<IntervalSpec> =
        label.ribbon().monochromatic_runs().iter().map(|(shape, _)| IntervalSpec::projective(shape)).collect();
    let mut lo = Permutation::identity(0);
    let mut hi = Permutation::identity(0);
    for run in &runs {
        lo = lo.shifted_concat(&run.lo);
        let mut h = run.hi.shifted(hi.n());
        h.extend_from_slice(hi.as_slice());
        hi = Permutation::new(h)?;
    }
    let x = projective_color(&runs, label.colors());
    let spec = IntervalSpec::new(ColorWord::new(x.as_slice().to_vec())?, lo, hi)?;
    let mut g = interval_module(&spec);
    let c = label.colors();
    g.lagrange = Some(g.vertices.iter().map(|rho| c.act(&rho.inverse())).collect());
    Ok(g)
}

/// The summands of `N_I = AKS(n,r)(0) ⊗_{H_n(0)} P_I`: one projective for
/// each coloring of the shape `I` that is an anticycloribbon, in
/// canonical order.
pub fn induce_hecke_projective(i: &Composition, r: usize) -> Vec<ProjectiveLabel> {
    ColorWord::all(i.size(), r)
        .into_iter()
        .filter_map(|c| ProjectiveLabel::new(ColoredRibbon { shape: i.clone(), colors: c }).ok())
        .collect()
}

/// Checks the defining relations of `AKS(n,r)(0)` on the matrix
/// realization of a labelled graph: the 0-Hecke relations and, for every
/// color word `e` of the evaluation class, the commutation of `T_i` with
/// `L_e` (`T_iL_e = L_{es_i}T_i − L_e`, `L_eT_i` or `L_{es_i}(1+T_i)` as
/// `e_i <, =, > e_{i+1}`).
pub fn satisfies_aks_relations(g: &ModuleGraph) -> bool {
    if !g.satisfies_hecke_relations() {
        return false;
    }
    let Some(labels) = &g.lagrange else { return true };
    let Some(first) = labels.first() else { return true };
    let r = first.max_color() as usize;
    let eval = first.evaluation(r);
    if labels.iter().any(|c| c.len() != g.n || c.evaluation(r) != eval) {
        return false;
    }
    let id = RatMatrix::identity(g.dim());
    let ts: Vec<RatMatrix> = (1..g.n).map(|i| g.t_matrix(i)).collect();
    for e in ColorWord::with_evaluation(&eval) {
        let le = g.l_matrix(&e);
        for i in 1..g.n {
            let t = &ts[i - 1];
            let ls = g.l_matrix(&e.swap(i));
            let lhs = t.mul(&le);
            let rhs = match e.at(i).cmp(&e.at(i + 1)) {
                std::cmp::Ordering::Less => ls.mul(t).add(&le.scale(&crate::linalg::rat(-1))),
                std::cmp::Ordering::Equal => le.mul(t),
                std::cmp::Ordering::Greater => ls.mul(&id.add(t)),
            };
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}
