use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{projective_module, vertex_factors, ProjectiveLabel, SimpleLabel};
use crate::aks0::{BlockAlgebra, BlockId};
use crate::combinat::{ColorWord, PermTable};
use crate::hecke0::ModuleGraph;
use crate::linalg::{IntEchelon, Rat};
use crate::{Error, Result};

/// Refuse block algebras of dimension above this unless told otherwise.
pub const DEFAULT_GUARD: usize = 1000;

/// A polynomial in `q` with integer coefficients, `coeffs[k]` being the
/// coefficient of `q^k`; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct QPoly {
    coeffs: Vec<i64>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    /// `c·q^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        QPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        QPoly::new((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().filter(|(_, c)| **c != 0) {
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let a = c.unsigned_abs();
            let body = match (k, a) {
                (0, _) => a.to_string(),
                (1, 1) => "q".to_string(),
                (1, _) => format!("{a}*q"),
                (_, 1) => format!("q^{k}"),
                _ => format!("{a}*q^{k}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for QPoly {
    type Err = Error;

    /// Accepts sums of terms `c`, `q`, `c*q`, `cq`, `q^k`, `c*q^k`, with
    /// spaces anywhere; `.` and the empty string read as zero.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse(format!("polynomial in q: {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() || compact == "." {
            return Ok(QPoly::zero());
        }
        let mut terms: Vec<(i64, &str)> = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for k in 1..=bytes.len() {
            if k == bytes.len() || ((bytes[k] == b'+' || bytes[k] == b'-') && bytes[k - 1] != b'^') {
                let t = &compact[start..k];
                let (sign, body) = match t.as_bytes().first() {
                    Some(b'-') => (-1, &t[1..]),
                    Some(b'+') => (1, &t[1..]),
                    _ => (1, t),
                };
                terms.push((sign, body));
                start = k;
            }
        }
        let mut out = QPoly::zero();
        for (sign, body) in terms {
            if body.is_empty() {
                return Err(err());
            }
            let (coef, power) = match body.find('q') {
                None => (body, None),
                Some(p) => (body[..p].trim_end_matches('*'), Some(&body[p + 1..])),
            };
            let c: i64 = if coef.is_empty() { 1 } else { coef.parse().map_err(|_| err())? };
            let k: usize = match power {
                None => 0,
                Some("") => 1,
                Some(p) => p.strip_prefix('^').ok_or_else(err)?.parse().map_err(|_| err())?,
            };
            out = out.add(&QPoly::monomial(sign * c, k));
        }
        Ok(out)
    }
}

impl TryFrom<String> for QPoly {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<QPoly> for String {
    fn from(p: QPoly) -> String {
        p.to_string()
    }
}

/// The Jacobson radical of a block algebra, as a basis of integer vectors
/// in the basis `L_cT_σ`.
#[derive(Clone, Debug)]
pub struct BlockRadical {
    pub algebra: BlockAlgebra,
    pub basis: Vec<Vec<BigInt>>,
}

/// The radical of the block, computed as the kernel of the trace form
/// `(x, y) ↦ tr(L_{xy})` of the left regular representation; in
/// characteristic zero this kernel is exactly the Jacobson radical.
pub fn block_radical(block: &BlockId, guard: usize) -> Result<BlockRadical> {
    let alg = BlockAlgebra::new(block, guard)?;
    let dim = alg.dim();
    let nf = alg.perms.len();
    let unit = |j: usize| -> Vec<i128> {
        let mut v = vec![0; dim];
        v[j] = 1;
        v
    };
    // tau[k] = tr(L_{b_k}) = Σ_j (b_k·b_j)_j.
    let mut tau = vec![0i128; dim];
    for j in 0..dim {
        let orbit = alg.t_orbit(&unit(j))?;
        let cj = alg.color_of(j);
        for (p, w) in orbit.iter().enumerate() {
            tau[cj * nf + p] += w[j];
        }
    }
    // Gram matrix G[a][b] = τ(b_a·b_b), built column by column.
    let mut gram = vec![vec![0i128; dim]; dim];
    for b in 0..dim {
        let orbit = alg.t_orbit(&unit(b))?;
        for (a, row) in gram.iter_mut().enumerate() {
            let prod = alg.apply_basis(a, &orbit);
            row[b] = prod.iter().zip(&tau).map(|(x, t)| x * t).sum();
        }
    }
    let mut ech = IntEchelon::<BigInt>::new(dim);
    for row in gram {
        ech.insert(row.into_iter().map(BigInt::from).collect())?;
    }
    let basis = ech.kernel()?;
    Ok(BlockRadical { algebra: alg, basis })
}

/// `T_σ·w` in a module for every `σ`, indexed like `perms`.
fn module_t_orbit(g: &ModuleGraph, perms: &PermTable, w: &[BigInt]) -> Result<Vec<Vec<BigInt>>> {
    let nf = perms.len();
    let mut out: Vec<Option<Vec<BigInt>>> = vec![None; nf];
    let mut by_length: Vec<usize> = (0..nf).collect();
    by_length.sort_by_key(|&p| perms.lengths[p]);
    out[by_length[0]] = Some(w.to_vec());
    for p in by_length {
        let Some(v) = out[p].clone() else { continue };
        for i in 1..g.n {
            let q = perms.s_left[i - 1][p];
            if perms.ascent[i - 1][p] && out[q].is_none() {
                out[q] = Some(g.apply_t(i, &v)?);
            }
        }
    }
    Ok(out.into_iter().map(|x| x.expect("every permutation is reached")).collect())
}

/// `x·w` for an algebra element `x` of the block and a module vector `w`,
/// given the `T`-orbit of `w`.
fn act(rad: &BlockRadical, g: &ModuleGraph, x: &[BigInt], orbit: &[Vec<BigInt>]) -> Vec<BigInt> {
    let nf = rad.algebra.perms.len();
    let mut out = vec![BigInt::zero(); g.dim()];
    let colors: Vec<ColorWord> = (0..g.dim()).map(|v| g.vertex_color(v)).collect();
    for (k, xk) in x.iter().enumerate().filter(|(_, xk)| !xk.is_zero()) {
        let c = &rad.algebra.colors[k / nf];
        for (v, y) in orbit[k % nf].iter().enumerate() {
            if !y.is_zero() && colors[v] == *c {
                out[v] += xk * y;
            }
        }
    }
    out
}

/// The spectral projector of a simple module applied to a module vector:
/// `L_c·Π_i(−T_i or 1+T_i)`, with `−T_i` where `T_i` acts by −1.
fn project(g: &ModuleGraph, s: &SimpleLabel, minus: &[bool], w: &[BigInt]) -> Result<Vec<BigInt>> {
    let mut v = w.to_vec();
    for i in 1..g.n {
        let t = g.apply_t(i, &v)?;
        v = if minus[i - 1] { t.iter().map(|x| -x).collect() } else { v.iter().zip(&t).map(|(a, b)| a + b).collect() };
    }
    Ok(g.apply_l(s.colors(), &v))
}

/// `tr(E|W)` for an operator preserving the subspace `W`, read on the
/// pivot coordinates of its reduced echelon basis.
fn restricted_trace(w: &IntEchelon<BigInt>, op: impl Fn(&[BigInt]) -> Result<Vec<BigInt>>) -> Result<Rat> {
    let mut tr = Rat::zero();
    for (p, row) in w.pivot_rows() {
        let image = op(row)?;
        tr += Rat::new(image[*p].clone(), row[*p].clone());
    }
    Ok(tr)
}

/// The radical series of one projective: `layers[k]` lists (sorted, with
/// multiplicity) the composition factors of `rad^k P / rad^{k+1} P`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RadicalSeries {
    pub projective: ProjectiveLabel,
    pub layers: Vec<Vec<SimpleLabel>>,
}

impl RadicalSeries {
    pub fn dim(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }
}

fn radical_series_with(rad: &BlockRadical, label: &ProjectiveLabel) -> Result<RadicalSeries> {
    let g = projective_module(label)?;
    let dim = g.dim();
    let candidates = SimpleLabel::in_block(&rad.algebra.block);
    let eigen: Vec<Vec<bool>> =
        candidates.iter().map(|s| super::simple_action(s).t_eigenvalues.iter().map(|&e| e == -1).collect()).collect();
    let mut current = IntEchelon::<BigInt>::new(dim);
    for v in 0..dim {
        let mut e = vec![BigInt::zero(); dim];
        e[v] = BigInt::from(1);
        current.insert(e)?;
    }
    let traces = |w: &IntEchelon<BigInt>| -> Result<Vec<Rat>> {
        candidates.iter().zip(&eigen).map(|(s, m)| restricted_trace(w, |x| project(&g, s, m, x))).collect()
    };
    let mut layers = Vec::new();
    let mut before = traces(&current)?;
    while current.rank() > 0 {
        let mut next = IntEchelon::<BigInt>::new(dim);
        for (_, w) in current.pivot_rows() {
            let orbit = module_t_orbit(&g, &rad.algebra.perms, w)?;
            for x in &rad.basis {
                next.insert(act(rad, &g, x, &orbit))?;
            }
        }
        if next.rank() == current.rank() {
            return Err(Error::InvalidArgument(format!("radical series of P[{label}] does not terminate")));
        }
        let after = traces(&next)?;
        let mut layer = Vec::new();
        for (s, (a, b)) in candidates.iter().zip(before.iter().zip(&after)) {
            let m = (a - b).to_integer().to_usize().expect("multiplicities are natural numbers");
            layer.extend(std::iter::repeat_n(s.clone(), m));
        }
        layers.push(layer);
        current = next;
        before = after;
    }
    Ok(RadicalSeries { projective: label.clone(), layers })
}

/// The radical series of every indecomposable projective of a block, in
/// canonical order of the projective labels.
pub fn radical_filtration(block: &BlockId, guard: usize) -> Result<Vec<RadicalSeries>> {
    let rad = block_radical(block, guard)?;
    let mut labels: Vec<ProjectiveLabel> = SimpleLabel::in_block(block).iter().map(SimpleLabel::phi).collect();
    labels.sort();
    labels.iter().map(|p| radical_series_with(&rad, p)).collect()
}

/// One block of the `q`-Cartan matrix: rows are the projective covers of
/// `labels`, columns the simple modules, and the entry is
/// `Σ_k [S_col : rad^k P_row / rad^{k+1} P_row]·q^k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QCartanBlock {
    pub block: BlockId,
    pub labels: Vec<SimpleLabel>,
    pub entries: Vec<Vec<QPoly>>,
}

impl QCartanBlock {
    pub fn entry(&self, row: &SimpleLabel, col: &SimpleLabel) -> Option<&QPoly> {
        let i = self.labels.iter().position(|l| l == row)?;
        let j = self.labels.iter().position(|l| l == col)?;
        Some(&self.entries[i][j])
    }

    /// The specialization `q = 1`, the ordinary Cartan matrix.
    pub fn at_one(&self) -> Vec<Vec<i64>> {
        self.entries.iter().map(|row| row.iter().map(QPoly::at_one).collect()).collect()
    }

    /// The matrix with rows and columns reindexed by `labels` (which must
    /// be a permutation of the block's labels).
    pub fn reindexed(&self, labels: &[SimpleLabel]) -> Result<QCartanBlock> {
        let pos = |l: &SimpleLabel| {
            self.labels
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| Error::InvalidArgument(format!("{l} is not in {}", self.block)))
        };
        let idx = labels.iter().map(pos).collect::<Result<Vec<_>>>()?;
        if labels.len() != self.labels.len() {
            return Err(Error::SizeMismatch(labels.len(), self.labels.len()));
        }
        let entries = idx.iter().map(|&i| idx.iter().map(|&j| self.entries[i][j].clone()).collect()).collect();
        Ok(QCartanBlock { block: self.block.clone(), labels: labels.to_vec(), entries })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "block": self.block.evaluation,
            "labels": self.labels.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "entries": self.entries.iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("label");
        for l in &self.labels {
            out.push(',');
            out.push_str(&l.to_string());
        }
        out.push('\n');
        for (l, row) in self.labels.iter().zip(&self.entries) {
            out.push_str(&l.to_string());
            for e in row {
                out.push(',');
                out.push_str(&e.to_string());
            }
            out.push('\n');
        }
        out
    }

    /// A LaTeX array with the projective (anticycloribbon) labels along
    /// both axes and `.` for zero entries.
    pub fn to_latex(&self) -> String {
        let heads: Vec<String> = self.labels.iter().map(|l| format!("[{}]", l.phi())).collect();
        let mut out = format!("\\begin{{array}}{{c|{}}}\n", "c".repeat(self.labels.len()));
        out.push_str(&format!(" & {} \\\\\n\\hline\n", heads.join(" & ")));
        for (h, row) in heads.iter().zip(&self.entries) {
            let cells: Vec<String> = row.iter().map(|e| if e.is_zero() { ".".into() } else { latex_poly(e) }).collect();
            out.push_str(&format!("{h} & {} \\\\\n", cells.join(" & ")));
        }
        out.push_str("\\end{array}\n");
        out
    }
}

fn latex_poly(p: &QPoly) -> String {
    p.to_string().replace('*', "")
}

/// Reads a radical series into a `q`-Cartan block.
pub fn q_cartan_from_series(block: &BlockId, series: &[RadicalSeries]) -> QCartanBlock {
    let labels = SimpleLabel::in_block(block);
    let index: BTreeMap<&SimpleLabel, usize> = labels.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let mut entries = vec![vec![QPoly::zero(); labels.len()]; labels.len()];
    for s in series {
        let i = index[&s.projective.phi()];
        for (k, layer) in s.layers.iter().enumerate() {
            for f in layer {
                entries[i][index[f]] = entries[i][index[f]].add(&QPoly::monomial(1, k));
            }
        }
    }
    QCartanBlock { block: block.clone(), labels, entries }
}

/// The `q`-Cartan matrix of one block.
pub fn q_cartan_block(block: &BlockId, guard: usize) -> Result<QCartanBlock> {
    Ok(q_cartan_from_series(block, &radical_filtration(block, guard)?))
}

/// The `q`-Cartan matrix of `AKS(n,r)(0)`, block by block in lexicographic
/// order of evaluations.
pub fn q_cartan(n: usize, r: usize, guard: usize) -> Result<Vec<QCartanBlock>> {
    BlockId::all(n, r).iter().map(|b| q_cartan_block(b, guard)).collect()
}

/// The image of a simple module under the automorphism
/// `L_c ↦ L_{mirror(c)}`, `−T_i ↦ 1+T_{n−i}`: the color word is reversed
/// and `T_i` acts by −1 exactly when `T_{n−i}` acted by 0.
pub fn twist_simple(s: &SimpleLabel) -> SimpleLabel {
    let n = s.size();
    let minus = super::simple_action(s).minus_one_set();
    let twisted = (1..n).filter(|&i| !minus.contains(&(n - i))).collect();
    super::simple_with_action(&s.colors().mirror(), &twisted).expect("twists of simple modules are simple")
}

/// Cross-check of the radical series against the vertex labels: the
/// layers of a projective, taken together, are its composition factors.
pub fn layers_match_vertex_factors(series: &RadicalSeries) -> Result<bool> {
    let mut all: Vec<SimpleLabel> = series.layers.concat();
    all.sort();
    let mut expected = vertex_factors(&projective_module(&series.projective)?)?;
    expected.sort();
    Ok(all == expected)
}
