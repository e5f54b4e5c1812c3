use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use super::AKSElement;
use crate::combinat::{ColorWord, PermTable, Permutation};
use crate::linalg::{rat, ExactInt, LinComb, Rat, RatMatrix};
use crate::{Error, Result};

/// A block of `AKS(n,r)(0)`: the color words with a fixed evaluation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BlockId {
    pub evaluation: Vec<usize>,
}

impl BlockId {
    pub fn new(evaluation: Vec<usize>) -> Result<Self> {
        if evaluation.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(BlockId { evaluation })
    }

    pub fn n(&self) -> usize {
        self.evaluation.iter().sum()
    }

    pub fn r(&self) -> usize {
        self.evaluation.len()
    }

    /// The color words of the block, in lexicographic order.
    pub fn colors(&self) -> Vec<ColorWord> {
        ColorWord::with_evaluation(&self.evaluation)
    }

    pub fn contains(&self, c: &ColorWord) -> bool {
        c.evaluation(self.r()) == self.evaluation
    }

    /// Dimension `#colors · n!` of the block.
    pub fn dim(&self) -> usize {
        self.colors().len() * (1..=self.n()).product::<usize>()
    }

    /// All blocks of `AKS(n,r)(0)`, in lexicographic order of evaluations.
    pub fn all(n: usize, r: usize) -> Vec<BlockId> {
        fn rec(n: usize, r: usize, prefix: &mut Vec<usize>, out: &mut Vec<BlockId>) {
            if r == 1 {
                prefix.push(n);
                out.push(BlockId { evaluation: prefix.clone() });
                prefix.pop();
                return;
            }
            for k in 0..=n {
                prefix.push(k);
                rec(n - k, r - 1, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if r > 0 {
            rec(n, r, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for BlockId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.evaluation.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for BlockId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl std::str::FromStr for BlockId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let evaluation = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        BlockId::new(evaluation)
    }
}

/// `Σ_{c of evaluation e} L_c`.
pub fn central_idempotent(e: &BlockId) -> AKSElement {
    let id = Permutation::identity(e.n());
    let terms = e.colors().into_iter().map(|c| ((c, id.clone()), Rat::one())).collect();
    AKSElement::from_terms(e.n(), e.r(), terms).expect("block colors are valid")
}

/// The component of `a` in the block `e`.
pub fn block_project(a: &AKSElement, e: &BlockId) -> AKSElement {
    let terms: LinComb<_> =
        a.terms().iter().filter(|((c, _), _)| e.contains(c)).map(|(k, v)| (k.clone(), v.clone())).collect();
    AKSElement::from_terms(a.n(), a.r(), terms).expect("terms of a valid element")
}

/// A block with integer structure for fast left multiplication. Basis
/// elements `L_c T_σ` are numbered `color_index·n! + perm_index`, which is
/// lexicographic on `(c, σ)`.
#[derive(Clone, Debug)]
pub struct BlockAlgebra {
    pub block: BlockId,
    pub colors: Vec<ColorWord>,
    pub perms: PermTable,
    /// `t_left[i-1][k]`: `T_i·b_k` as at most two `(index, coefficient)` terms.
    t_left: Vec<Vec<Vec<(usize, i64)>>>,
}

impl BlockAlgebra {
    /// Builds the block, refusing algebras of dimension above `guard`.
    pub fn new(block: &BlockId, guard: usize) -> Result<Self> {
        let dim = block.dim();
        if dim > guard {
            return Err(Error::GuardExceeded { dim, guard });
        }
        let n = block.n();
        let colors = block.colors();
        let perms = PermTable::new(n);
        let nf = perms.len();
        let color_index = |c: &ColorWord| colors.binary_search(c).expect("color of the block");
        let mut t_left = Vec::with_capacity(n.saturating_sub(1));
        for i in 1..n {
            let mut per = Vec::with_capacity(dim);
            for (ci, e) in colors.iter().enumerate() {
                for p in 0..nf {
                    let ts = |color: usize| -> (usize, i64) {
                        if perms.ascent[i - 1][p] {
                            (color * nf + perms.s_left[i - 1][p], 1)
                        } else {
                            (color * nf + p, -1)
                        }
                    };
                    let (a, b) = (e.at(i), e.at(i + 1));
                    let mut terms = Vec::with_capacity(2);
                    if a < b {
                        terms.push(ts(color_index(&e.swap(i))));
                        terms.push((ci * nf + p, -1));
                    } else if a == b {
                        terms.push(ts(ci));
                    } else {
                        let sw = color_index(&e.swap(i));
                        terms.push((sw * nf + p, 1));
                        terms.push(ts(sw));
                    }
                    per.push(merge(terms));
                }
            }
            t_left.push(per);
        }
        Ok(BlockAlgebra { block: block.clone(), colors, perms, t_left })
    }

    pub fn n(&self) -> usize {
        self.block.n()
    }

    pub fn dim(&self) -> usize {
        self.colors.len() * self.perms.len()
    }

    pub fn label(&self, k: usize) -> (ColorWord, Permutation) {
        let nf = self.perms.len();
        (self.colors[k / nf].clone(), self.perms.perms[k % nf].clone())
    }

    pub fn index_of(&self, c: &ColorWord, s: &Permutation) -> Option<usize> {
        let ci = self.colors.binary_search(c).ok()?;
        Some(ci * self.perms.len() + self.perms.index_of(s))
    }

    pub fn color_of(&self, k: usize) -> usize {
        k / self.perms.len()
    }

    /// `T_i·v` in coordinates.
    pub fn left_t<T: ExactInt>(&self, i: usize, v: &[T]) -> Result<Vec<T>> {
        let mut out = vec![T::zero(); v.len()];
        for (k, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for &(to, c) in &self.t_left[i - 1][k] {
                out[to] = out[to].add(&x.mul(&T::from_i64(c))?)?;
            }
        }
        Ok(out)
    }

    /// `L_c·v` for the color with index `ci`.
    pub fn left_l<T: ExactInt>(&self, ci: usize, v: &[T]) -> Vec<T> {
        let nf = self.perms.len();
        v.iter().enumerate().map(|(k, x)| if k / nf == ci { x.clone() } else { T::zero() }).collect()
    }

    /// `T_σ·v` for every `σ`, indexed like `perms`, built along the left
    /// weak order from the identity.
    pub fn t_orbit<T: ExactInt>(&self, v: &[T]) -> Result<Vec<Vec<T>>> {
        let nf = self.perms.len();
        let mut out: Vec<Option<Vec<T>>> = vec![None; nf];
        let id = self.perms.index_of(&Permutation::identity(self.n()));
        out[id] = Some(v.to_vec());
        let mut by_length: Vec<usize> = (0..nf).collect();
        by_length.sort_by_key(|&p| self.perms.lengths[p]);
        for p in by_length {
            let Some(w) = out[p].clone() else { continue };
            for i in 1..self.n() {
                let q = self.perms.s_left[i - 1][p];
                if self.perms.ascent[i - 1][p] && out[q].is_none() {
                    out[q] = Some(self.left_t(i, &w)?);
                }
            }
        }
        Ok(out.into_iter().map(|x| x.expect("every permutation is reached")).collect())
    }

    /// Left multiplication by `b_k` applied to each vector of a `t_orbit`.
    pub fn apply_basis<T: ExactInt>(&self, k: usize, orbit: &[Vec<T>]) -> Vec<T> {
        let nf = self.perms.len();
        self.left_l(k / nf, &orbit[k % nf])
    }

    pub fn to_element(&self, v: &[Rat]) -> AKSElement {
        let terms: LinComb<_> = v
            .iter()
            .enumerate()
            .filter(|(_, x)| !num_traits::Zero::is_zero(*x))
            .map(|(k, x)| (self.label(k), x.clone()))
            .collect();
        AKSElement::from_terms(self.n(), self.block.r(), terms).expect("block labels are valid")
    }

    pub fn from_element(&self, a: &AKSElement) -> Result<Vec<Rat>> {
        let mut v = vec![rat(0); self.dim()];
        for ((c, s), x) in a.terms().iter() {
            let k = self
                .index_of(c, s)
                .ok_or_else(|| Error::InvalidArgument(format!("L[{c}] is outside the block {}", self.block)))?;
            v[k] = x.clone();
        }
        Ok(v)
    }

    pub fn t_matrix(&self, i: usize) -> RatMatrix {
        let mut m = RatMatrix::zeros(self.dim(), self.dim());
        for (k, col) in self.t_left[i - 1].iter().enumerate() {
            for &(to, c) in col {
                m.data[to][k] = rat(c);
            }
        }
        m
    }

    pub fn l_matrix(&self, ci: usize) -> RatMatrix {
        let nf = self.perms.len();
        let mut m = RatMatrix::zeros(self.dim(), self.dim());
        for k in ci * nf..(ci + 1) * nf {
            m.data[k][k] = rat(1);
        }
        m
    }
}

fn merge(mut terms: Vec<(usize, i64)>) -> Vec<(usize, i64)> {
    terms.sort();
    let mut out: Vec<(usize, i64)> = Vec::new();
    for (k, c) in terms {
        match out.last_mut() {
            Some((j, d)) if *j == k => *d += c,
            _ => out.push((k, c)),
        }
    }
    out.retain(|&(_, c)| c != 0);
    out
}

/// A named left-multiplication operator on a block.
#[derive(Clone, Debug)]
pub struct ActionMatrix {
    pub name: String,
    pub matrix: RatMatrix,
}

/// Matrices of left multiplication by each `T_i` and each `L_c` of the
/// block on its basis, in canonical order.
pub fn regular_action_matrices(e: &BlockId, guard: usize) -> Result<Vec<ActionMatrix>> {
    let b = BlockAlgebra::new(e, guard)?;
    let mut out = Vec::new();
    for i in 1..e.n() {
        out.push(ActionMatrix { name: format!("T{i}"), matrix: b.t_matrix(i) });
    }
    for (ci, c) in b.colors.iter().enumerate() {
        out.push(ActionMatrix { name: format!("L[{c}]"), matrix: b.l_matrix(ci) });
    }
    Ok(out)
}
