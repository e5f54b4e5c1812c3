use serde_json::json;

use super::{ProjectiveLabel, SimpleLabel};
use crate::aks0::BlockId;
use crate::hopf::{ch_proj, decomposition_coefficient, pi_map, MrElement, Multipartition};
use crate::linalg::Rat;

/// One block of the decomposition matrix: rows are the multipartitions
/// `λ` with `|λ^{(i)}| = e_i` (lexicographic), columns the simple modules
/// of the block (canonical order), and the entry in column `S` is
/// `d_{λ, φ(S)}`, the multiplicity of the generic irreducible `λ` in the
/// projective cover of `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionBlock {
    pub block: BlockId,
    pub rows: Vec<Multipartition>,
    pub labels: Vec<SimpleLabel>,
    pub entries: Vec<Vec<i64>>,
}

fn to_i64(x: &Rat) -> i64 {
    assert!(x.is_integer(), "decomposition numbers are integers");
    x.to_integer().try_into().expect("decomposition numbers are small")
}

/// The decomposition matrix of one block.
pub fn decomposition_block(block: &BlockId) -> DecompositionBlock {
    let rows = Multipartition::with_evaluation(&block.evaluation);
    let labels = SimpleLabel::in_block(block);
    let entries = rows
        .iter()
        .map(|l| {
            labels.iter().map(|s| to_i64(&decomposition_coefficient(l, &s.phi().to_colored_composition()))).collect()
        })
        .collect();
    DecompositionBlock { block: block.clone(), rows, labels, entries }
}

/// The decomposition matrix of `AKS(n,r)(0)`, block by block.
pub fn decomposition_matrix(n: usize, r: usize) -> Vec<DecompositionBlock> {
    BlockId::all(n, r).iter().map(decomposition_block).collect()
}

impl DecompositionBlock {
    pub fn entry(&self, row: &Multipartition, col: &SimpleLabel) -> Option<i64> {
        let i = self.rows.iter().position(|x| x == row)?;
        let j = self.labels.iter().position(|x| x == col)?;
        Some(self.entries[i][j])
    }

    /// `DᵀD`, indexed by the simple modules of the block.
    pub fn gram(&self) -> Vec<Vec<i64>> {
        let k = self.labels.len();
        (0..k).map(|a| (0..k).map(|b| self.entries.iter().map(|row| row[a] * row[b]).sum()).collect()).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "block": self.block.evaluation,
            "rows": self.rows.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "labels": self.labels.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "entries": self.entries,
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("multipartition");
        for l in &self.labels {
            out.push_str(&format!(",{l}"));
        }
        out.push('\n');
        for (m, row) in self.rows.iter().zip(&self.entries) {
            out.push_str(&m.to_string());
            for e in row {
                out.push_str(&format!(",{e}"));
            }
            out.push('\n');
        }
        out
    }

    /// A LaTeX array with projective labels as column heads and `.` for 0.
    pub fn to_latex(&self) -> String {
        let heads: Vec<String> = self.labels.iter().map(|l| format!("[{}]", l.phi())).collect();
        let mut out = format!("\\begin{{array}}{{c|{}}}\n", "c".repeat(self.labels.len()));
        out.push_str(&format!(" & {} \\\\\n\\hline\n", heads.join(" & ")));
        for (m, row) in self.rows.iter().zip(&self.entries) {
            let cells: Vec<String> = row.iter().map(|e| if *e == 0 { ".".into() } else { e.to_string() }).collect();
            out.push_str(&format!("{m} & {} \\\\\n", cells.join(" & ")));
        }
        out.push_str("\\end{array}\n");
        out
    }
}

/// The restriction of `P_{[K,c]}` to `H_n(0)`: the product of the ribbons
/// of its parts, i.e. the image of its characteristic under the map
/// forgetting colors, in the ribbon basis of noncommutative symmetric
/// functions (all parts colored 1).
pub fn restrict_projective(label: &ProjectiveLabel) -> MrElement {
    pi_map(&ch_proj(label))
}
