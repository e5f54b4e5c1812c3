use std::collections::BTreeSet;

use serde::Serialize;

use super::{q_cartan_block, QCartanBlock, SimpleLabel};
use crate::aks0::BlockId;
use crate::combinat::Composition;
use crate::Result;

/// An arrow `from → to` of the Ext-quiver, `multiplicity` being
/// `dim Ext¹(S_from, S_to)`: the number of copies of `S_to` in the second
/// radical layer of the projective cover of `S_from`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct QuiverArrow {
    pub from: SimpleLabel,
    pub to: SimpleLabel,
    pub multiplicity: i64,
}

/// The arrows of one block, read off as the coefficients of `q` in its
/// `q`-Cartan matrix.
pub fn quiver_from_cartan(block: &QCartanBlock) -> Vec<QuiverArrow> {
    let mut out = Vec::new();
    for (a, row) in block.labels.iter().zip(&block.entries) {
        for (b, e) in block.labels.iter().zip(row) {
            if e.coeff(1) != 0 {
                out.push(QuiverArrow { from: a.clone(), to: b.clone(), multiplicity: e.coeff(1) });
            }
        }
    }
    out
}

/// Undirected edge set of a list of arrows, each edge as a sorted pair.
pub fn undirected(arrows: &[QuiverArrow]) -> BTreeSet<(SimpleLabel, SimpleLabel)> {
    arrows
        .iter()
        .map(|a| if a.from <= a.to { (a.from.clone(), a.to.clone()) } else { (a.to.clone(), a.from.clone()) })
        .collect()
}

/// The Ext-quiver of one block computed from its radical series.
pub fn quiver_block(block: &BlockId, guard: usize) -> Result<Vec<QuiverArrow>> {
    Ok(quiver_from_cartan(&q_cartan_block(block, guard)?))
}

/// The Ext-quiver of `AKS(n,r)(0)` from the radical series of every block.
pub fn quiver(n: usize, r: usize, guard: usize) -> Result<Vec<QuiverArrow>> {
    let mut out = Vec::new();
    for b in BlockId::all(n, r) {
        out.extend(quiver_block(&b, guard)?);
    }
    out.sort();
    Ok(out)
}

/// The undirected Ext-quiver of `H_n(0)` on compositions of `n`.
pub fn hecke_quiver(n: usize, guard: usize) -> Result<BTreeSet<(Composition, Composition)>> {
    let arrows = quiver_block(&BlockId { evaluation: vec![n] }, guard)?;
    Ok(undirected(&arrows).into_iter().map(|(a, b)| (a.shape().clone(), b.shape().clone())).collect())
}

/// The combinatorial description of the undirected Ext-quiver of a block:
/// two simple modules `[I,c]` and `[J,c′]` are joined when either
/// `c = c′` and `I — J` in the quiver of `H_n(0)`, or `c′ = c·s_i` for
/// some `i` and every `k ∉ {i−1, i, i+1}` is a descent of both or neither
/// of `I` and `J`.
pub fn quiver_rule(
    block: &BlockId,
    hecke: &BTreeSet<(Composition, Composition)>,
) -> BTreeSet<(SimpleLabel, SimpleLabel)> {
    let labels = SimpleLabel::in_block(block);
    let n = block.n();
    let mut out = BTreeSet::new();
    for (x, a) in labels.iter().enumerate() {
        for b in &labels[x + 1..] {
            let joined = if a.colors() == b.colors() {
                let (i, j) = (a.shape().clone(), b.shape().clone());
                hecke.contains(&(i.clone(), j.clone())) || hecke.contains(&(j, i))
            } else {
                let (da, db) = (a.shape().descents(), b.shape().descents());
                (1..n).any(|i| {
                    a.colors().at(i) != a.colors().at(i + 1)
                        && a.colors().swap(i) == *b.colors()
                        && (1..n).filter(|k| k + 1 < i || *k > i + 1).all(|k| da.contains(&k) == db.contains(&k))
                })
            };
            if joined {
                out.insert((a.clone(), b.clone()));
            }
        }
    }
    out
}
