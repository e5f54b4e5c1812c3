use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_traits::Zero;

use crate::combinat::Composition;
use crate::linalg::{format_terms, rat, LinComb, Rat};
use crate::{Error, Result};

/// An integer partition, parts weakly decreasing and positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The partitions of `n` in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                prefix.push(p);
                rec(n - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        let parts: Vec<u64> = self.0.iter().map(|&p| p as u64).collect();
        f.write_str(&crate::combinat::join_letters(&parts))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;
    /// Digits (`"211"`), comma-separated parts (`"10,2"`) or `∅`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = crate::combinat::parse_letters(s)?;
        let p = Partition::new(parts.iter().map(|&x| x as usize).collect());
        if p.0.iter().zip(&parts).any(|(a, &b)| *a as u64 != b) {
            return Err(Error::Parse(format!("{s} is not weakly decreasing")));
        }
        Ok(p)
    }
}

/// An `r`-tuple of partitions, indexing `S_λ = s_{λ^{(1)}}(X_1)⋯s_{λ^{(r)}}(X_r)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multipartition(pub Vec<Partition>);

impl Multipartition {
    /// `|λ^{(i)}|` for each component.
    pub fn evaluation(&self) -> Vec<usize> {
        self.0.iter().map(Partition::size).collect()
    }

    /// All multipartitions with the given component sizes, in
    /// lexicographic order (each component in decreasing order).
    pub fn with_evaluation(e: &[usize]) -> Vec<Multipartition> {
        let mut acc: Vec<Vec<Partition>> = vec![Vec::new()];
        for &k in e {
            let ps = Partition::all(k);
            acc = acc
                .into_iter()
                .flat_map(|prefix| {
                    ps.iter().map(move |p| {
                        let mut v = prefix.clone();
                        v.push(p.clone());
                        v
                    })
                })
                .collect();
        }
        acc.into_iter().map(Multipartition).collect()
    }

    /// Reads the short form `(11,1)` listing only the components of
    /// positive size, placed according to `evaluation`.
    pub fn from_listed(s: &str, evaluation: &[usize]) -> Result<Multipartition> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut listed = inner.split(',').map(str::parse::<Partition>);
        let mut out = Vec::with_capacity(evaluation.len());
        for &e in evaluation {
            if e == 0 {
                out.push(Partition::empty());
            } else {
                let p = listed.next().ok_or_else(|| Error::Parse(s.to_string()))??;
                if p.size() != e {
                    return Err(Error::Parse(format!("{s} does not have evaluation {evaluation:?}")));
                }
                out.push(p);
            }
        }
        if listed.next().is_some() {
            return Err(Error::Parse(s.to_string()));
        }
        Ok(Multipartition(out))
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join("|"))
    }
}

impl fmt::Debug for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Multipartition {
    type Err = Error;
    /// The display form, `(11|1|∅)`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        Ok(Multipartition(inner.split('|').map(str::parse).collect::<Result<Vec<_>>>()?))
    }
}

/// Bases of symmetric functions used here.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum SymBasis {
    Schur,
    H,
}

/// A symmetric function in one alphabet.
#[derive(Clone, PartialEq, Eq)]
pub struct SymElement {
    pub basis: SymBasis,
    pub terms: LinComb<Partition>,
}

/// An element of `Sym^{(r)} = Sym(X_1) ⊗ ⋯ ⊗ Sym(X_r)`.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiSymElement {
    pub basis: SymBasis,
    pub terms: LinComb<Multipartition>,
}

/// Number of semistandard tableaux of shape `λ` and content `μ`, by
/// direct enumeration of chains of horizontal strips.
pub fn kostka(lambda: &Partition, mu: &[usize]) -> u64 {
    /// Adds a horizontal strip of `left` cells to `shape` from row `row`
    /// on (row `k` may grow up to the old length of row `k−1`), then
    /// continues with the remaining content.
    fn strip(outer: &[usize], old: &[usize], new: &mut Vec<usize>, row: usize, left: usize, mu: &[usize]) -> u64 {
        if row == outer.len() {
            return if left == 0 { chains(outer, new, mu) } else { 0 };
        }
        let cap = if row == 0 { outer[0] } else { outer[row].min(old[row - 1]) };
        let mut total = 0;
        for add in 0..=left.min(cap.saturating_sub(old[row])) {
            new[row] = old[row] + add;
            total += strip(outer, old, new, row + 1, left - add, mu);
        }
        new[row] = old[row];
        total
    }
    fn chains(outer: &[usize], shape: &[usize], mu: &[usize]) -> u64 {
        match mu.split_first() {
            None => u64::from(shape == outer),
            Some((&m, rest)) => strip(outer, shape, &mut shape.to_vec(), 0, m, rest),
        }
    }
    if lambda.size() != mu.iter().sum::<usize>() {
        return 0;
    }
    let outer = lambda.parts();
    chains(outer, &vec![0; outer.len()], mu)
}

fn kostka_cached(lambda: &Partition, mu: &Partition) -> u64 {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, Partition), u64>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(&k) = cache.lock().expect("cache").get(&(lambda.clone(), mu.clone())) {
        return k;
    }
    let k = kostka(lambda, mu.parts());
    cache.lock().expect("cache").insert((lambda.clone(), mu.clone()), k);
    k
}

/// `h_μ = Σ_λ K_{λμ} s_λ`.
pub fn h_to_schur(mu: &Partition) -> SymElement {
    let terms = Partition::all(mu.size())
        .into_iter()
        .filter_map(|l| {
            let k = kostka_cached(&l, mu);
            (k > 0).then(|| (l, rat(k as i64)))
        })
        .collect();
    SymElement { basis: SymBasis::Schur, terms }
}

/// `s_λ` in the `h` basis, by triangularity of the Kostka matrix:
/// `s_λ = h_λ − Σ_{ν > λ} K_{νλ} s_ν`.
pub fn schur_to_h(lambda: &Partition) -> SymElement {
    static CACHE: OnceLock<Mutex<HashMap<Partition, LinComb<Partition>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("cache").get(lambda) {
        return SymElement { basis: SymBasis::H, terms: t.clone() };
    }
    let mut terms = LinComb::basis(lambda.clone());
    for nu in Partition::all(lambda.size()).into_iter().filter(|nu| nu > lambda) {
        let k = kostka_cached(&nu, lambda);
        if k > 0 {
            terms = terms.sub(&schur_to_h(&nu).terms.scale(&rat(k as i64)));
        }
    }
    cache.lock().expect("cache").insert(lambda.clone(), terms.clone());
    SymElement { basis: SymBasis::H, terms }
}

impl SymElement {
    pub fn to_basis(&self, basis: SymBasis) -> Self {
        match (self.basis, basis) {
            (SymBasis::H, SymBasis::Schur) => {
                SymElement { basis, terms: self.terms.map_linear(|mu| h_to_schur(mu).terms) }
            }
            (SymBasis::Schur, SymBasis::H) => {
                SymElement { basis, terms: self.terms.map_linear(|l| schur_to_h(l).terms) }
            }
            _ => self.clone(),
        }
    }

    pub fn coeff(&self, p: &Partition) -> Rat {
        self.terms.coeff(p)
    }
}

/// The ribbon Schur function `r_I = Σ_{J coarser than I} (−1)^{ℓ(I)−ℓ(J)} h_J`
/// expanded in Schur functions.
pub fn ribbon_to_schur(i: &Composition) -> SymElement {
    let mut terms = LinComb::zero();
    let n = i.size();
    let d = i.descents();
    let cuts: Vec<usize> = d.iter().copied().collect();
    for mask in 0u64..1 << cuts.len() {
        let kept = cuts.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &c)| c).collect();
        let j = Composition::from_descents(n, &kept);
        terms.add_term(Partition::new(j.parts().to_vec()), super::qmr::sign(i.len() - j.len()));
    }
    SymElement { basis: SymBasis::H, terms }.to_basis(SymBasis::Schur)
}

/// Product of two symmetric functions, routed through the `h` basis;
/// returned in the Schur basis.
pub fn schur_product(a: &SymElement, b: &SymElement) -> SymElement {
    let (a, b) = (a.to_basis(SymBasis::H), b.to_basis(SymBasis::H));
    let mut terms = LinComb::zero();
    for (x, cx) in a.terms.iter() {
        for (y, cy) in b.terms.iter() {
            let mut parts = x.parts().to_vec();
            parts.extend_from_slice(y.parts());
            terms.add_term(Partition::new(parts), cx * cy);
        }
    }
    SymElement { basis: SymBasis::H, terms }.to_basis(SymBasis::Schur)
}

impl MultiSymElement {
    /// Converts every component independently.
    pub fn to_basis(&self, basis: SymBasis) -> Self {
        if basis == self.basis {
            return self.clone();
        }
        let terms = self.terms.map_linear(|lam| {
            let mut acc: LinComb<Vec<Partition>> = LinComb::basis(Vec::new());
            for p in &lam.0 {
                let one = SymElement { basis: self.basis, terms: LinComb::basis(p.clone()) }.to_basis(basis);
                let mut next = LinComb::zero();
                for (prefix, c) in acc.iter() {
                    for (q, d) in one.terms.iter() {
                        let mut v = prefix.clone();
                        v.push(q.clone());
                        next.add_term(v, c * d);
                    }
                }
                acc = next;
            }
            acc.iter().map(|(v, c)| (Multipartition(v.clone()), c.clone())).collect()
        });
        MultiSymElement { basis, terms }
    }

    pub fn coeff(&self, l: &Multipartition) -> Rat {
        self.terms.coeff(l)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_zero())
    }
}

impl fmt::Display for SymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.basis == SymBasis::Schur { "s" } else { "h" };
        f.write_str(&format_terms(self.terms.iter(), |p| format!("{tag}[{p}]")))
    }
}

impl fmt::Debug for SymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MultiSymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.basis == SymBasis::Schur { "S" } else { "h" };
        f.write_str(&format_terms(self.terms.iter(), |p| format!("{tag}{p}")))
    }
}

impl fmt::Debug for MultiSymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
