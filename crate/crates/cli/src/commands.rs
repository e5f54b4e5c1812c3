use std::fs;
use std::path::PathBuf;

use cycloribbon::aks0::BlockId;
use cycloribbon::combinat::{enumerate_anticycloribbons, enumerate_cycloribbons, ColoredRibbon};
use cycloribbon::reptheory::{
    composition_factors, decomposition_block, induct_simples, q_cartan_block, quiver_from_cartan, restrict_simple,
    undirected, ProjectiveLabel, SimpleLabel,
};
use serde_json::{json, Value};

use crate::config::{Format, RunConfig};
use crate::CliError;

/// What `enumerate` lists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Kind {
    Cycloribbons,
    Anticycloribbons,
    Simples,
    Projectives,
    Blocks,
}

impl Kind {
    fn name(self) -> &'static str {
        match self {
            Kind::Cycloribbons => "cycloribbons",
            Kind::Anticycloribbons => "anticycloribbons",
            Kind::Simples => "simples",
            Kind::Projectives => "projectives",
            Kind::Blocks => "blocks",
        }
    }
}

/// Canonical labels of the given kind, one per line, then a
/// `# <count> <kind>` line. A `--block` filter keeps the labels whose
/// color word has that evaluation.
pub fn enumerate(kind: Kind, cfg: &RunConfig) -> Result<String, CliError> {
    let (n, r) = cfg.size()?;
    let in_filter = |c: &ColoredRibbon| cfg.selects(&c.colors.evaluation(r));
    let labels: Vec<String> = match kind {
        Kind::Cycloribbons => {
            enumerate_cycloribbons(n, r).iter().filter(|c| in_filter(c)).map(|c| c.to_string()).collect()
        }
        Kind::Anticycloribbons => {
            enumerate_anticycloribbons(n, r).iter().filter(|c| in_filter(c)).map(|c| c.to_string()).collect()
        }
        Kind::Simples => {
            SimpleLabel::all(n, r).iter().filter(|s| in_filter(s.ribbon())).map(|s| s.to_string()).collect()
        }
        Kind::Projectives => {
            ProjectiveLabel::all(n, r).iter().filter(|p| in_filter(p.ribbon())).map(|p| p.to_string()).collect()
        }
        Kind::Blocks => {
            BlockId::all(n, r).iter().filter(|b| cfg.selects(&b.evaluation)).map(|b| b.to_string()).collect()
        }
    };
    let mut out = String::new();
    for l in &labels {
        out.push_str(l);
        out.push('\n');
    }
    out.push_str(&format!("# {} {}\n", labels.len(), kind.name()));
    Ok(out)
}

/// A computed table in every supported format.
#[derive(Clone, Debug)]
pub struct Rendered {
    /// File name stem used under `--out`.
    pub stem: String,
    pub json: Value,
    pub csv: String,
    pub latex: String,
}

impl Rendered {
    pub fn text(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("json values serialize");
                s.push('\n');
                s
            }
            Format::Csv => self.csv.clone(),
            Format::Latex => self.latex.clone(),
        }
    }

    /// Writes `<stem>.json`, plus `<stem>.csv` or `<stem>.tex` when that
    /// format is requested, under `--out`; without `--out`, returns the
    /// requested format for standard output. Returns the text to print.
    pub fn emit(&self, cfg: &RunConfig) -> Result<String, CliError> {
        let Some(dir) = &cfg.out else {
            return Ok(self.text(cfg.format));
        };
        fs::create_dir_all(dir)?;
        let mut written: Vec<PathBuf> = Vec::new();
        let mut formats = vec![Format::Json];
        if cfg.format != Format::Json {
            formats.push(cfg.format);
        }
        for f in formats {
            let path = dir.join(format!("{}.{}", self.stem, f.extension()));
            fs::write(&path, self.text(f))?;
            written.push(path);
        }
        Ok(written.iter().map(|p| format!("{}\n", p.display())).collect())
    }
}

fn stem(kind: &str, cfg: &RunConfig, n: usize, r: usize) -> String {
    let mut s = format!("{kind}-n{n}-r{r}");
    if let Some(b) = &cfg.block {
        s.push_str("-block");
        for e in b {
            s.push_str(&format!("-{e}"));
        }
    }
    s
}

/// One section per block: `# block (e1,…)` (CSV) or `% block (e1,…)`
/// (LaTeX) followed by the block's table.
fn sections(blocks: &[BlockId], bodies: impl Iterator<Item = String>, comment: &str) -> String {
    blocks.iter().zip(bodies).map(|(b, body)| format!("{comment} block {b}\n{body}")).collect()
}

/// Runs `f` on every selected block in parallel; the first failure in
/// canonical block order wins.
fn per_block<T: Send>(
    cfg: &RunConfig,
    f: impl Fn(&BlockId) -> cycloribbon::Result<T> + Sync + Send,
) -> Result<(Vec<BlockId>, Vec<T>), CliError> {
    let blocks = cfg.blocks()?;
    let results = cfg.par_map(&blocks, f);
    let values = results.into_iter().collect::<cycloribbon::Result<Vec<T>>>()?;
    Ok((blocks, values))
}

/// The `q`-Cartan matrix, block by block.
pub fn cartan(cfg: &RunConfig) -> Result<Rendered, CliError> {
    let (n, r) = cfg.size()?;
    let (blocks, tables) = per_block(cfg, |b| q_cartan_block(b, cfg.guard))?;
    Ok(Rendered {
        stem: stem("cartan", cfg, n, r),
        json: json!({"kind": "cartan", "n": n, "r": r, "blocks": tables.iter().map(|t| t.to_json()).collect::<Vec<_>>()}),
        csv: sections(&blocks, tables.iter().map(|t| t.to_csv()), "#"),
        latex: sections(&blocks, tables.iter().map(|t| t.to_latex()), "%"),
    })
}

/// The decomposition matrix, block by block.
pub fn decomp(cfg: &RunConfig) -> Result<Rendered, CliError> {
    let (n, r) = cfg.size()?;
    let (blocks, tables) = per_block(cfg, |b| Ok(decomposition_block(b)))?;
    Ok(Rendered {
        stem: stem("decomp", cfg, n, r),
        json: json!({"kind": "decomp", "n": n, "r": r, "blocks": tables.iter().map(|t| t.to_json()).collect::<Vec<_>>()}),
        csv: sections(&blocks, tables.iter().map(|t| t.to_csv()), "#"),
        latex: sections(&blocks, tables.iter().map(|t| t.to_latex()), "%"),
    })
}

/// The Ext-quiver, block by block: arrows with multiplicities and the
/// undirected edge set, vertices named by simple modules.
pub fn quiver(cfg: &RunConfig) -> Result<Rendered, CliError> {
    let (n, r) = cfg.size()?;
    let (blocks, tables) = per_block(cfg, |b| q_cartan_block(b, cfg.guard))?;
    let mut json_blocks = Vec::new();
    let mut csv = Vec::new();
    let mut latex = Vec::new();
    for t in &tables {
        let arrows = quiver_from_cartan(t);
        let edges = undirected(&arrows);
        json_blocks.push(json!({
            "block": t.block.evaluation,
            "vertices": t.labels.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "arrows": arrows.iter().map(|a| json!({"from": a.from.to_string(), "to": a.to.to_string(), "multiplicity": a.multiplicity})).collect::<Vec<_>>(),
            "edges": edges.iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect::<Vec<_>>(),
        }));
        let mut c = String::from("from,to,multiplicity\n");
        for a in &arrows {
            c.push_str(&format!("{},{},{}\n", a.from, a.to, a.multiplicity));
        }
        csv.push(c);
        let mut l = String::from("\\begin{array}{ll}\n");
        for (a, b) in &edges {
            l.push_str(&format!("[{}] & [{}] \\\\\n", a.phi(), b.phi()));
        }
        l.push_str("\\end{array}\n");
        latex.push(l);
    }
    Ok(Rendered {
        stem: stem("quiver", cfg, n, r),
        json: json!({"kind": "quiver", "n": n, "r": r, "blocks": json_blocks}),
        csv: sections(&blocks, csv.into_iter(), "#"),
        latex: sections(&blocks, latex.into_iter(), "%"),
    })
}

fn parse_simple(s: &str) -> Result<SimpleLabel, CliError> {
    s.parse().map_err(|e: cycloribbon::Error| CliError::BadInput(format!("{s}: {e}")))
}

/// The induction product of two simple modules: its module graph and its
/// composition factors (each with multiplicity one).
pub fn induct(left: &str, right: &str) -> Result<Rendered, CliError> {
    let (a, b) = (parse_simple(left)?, parse_simple(right)?);
    let g = induct_simples(&a, &b)?;
    let mut factors = composition_factors(&g)?;
    factors.sort();
    let mut csv = String::from("simple,projective\n");
    let mut latex = String::from("\\begin{array}{ll}\n");
    for f in &factors {
        csv.push_str(&format!("{f},{}\n", f.phi()));
        latex.push_str(&format!("[{f}] & [{}] \\\\\n", f.phi()));
    }
    latex.push_str("\\end{array}\n");
    Ok(Rendered {
        stem: format!("induct-{}-{}", file_safe(&a.to_string()), file_safe(&b.to_string())),
        json: json!({
            "kind": "induct",
            "left": a.to_string(),
            "right": b.to_string(),
            "module": g.to_json(),
            "factors": factors.iter().map(|f| json!({"simple": f.to_string(), "projective": f.phi().to_string()})).collect::<Vec<_>>(),
        }),
        csv,
        latex,
    })
}

/// The restrictions of a simple module to `AKS(k,r)(0) ⊗ AKS(n−k,r)(0)`,
/// for one cut `k` or for every `0 < k < n`.
pub fn restrict(label: &str, at: Option<usize>) -> Result<Rendered, CliError> {
    let s = parse_simple(label)?;
    let cuts: Vec<usize> = match at {
        Some(k) => vec![k],
        None => (1..s.size()).collect(),
    };
    let mut rows = Vec::new();
    for k in cuts {
        let (l, r) = restrict_simple(&s, k)?;
        rows.push((k, l, r));
    }
    let mut csv = String::from("k,left,right\n");
    let mut latex = String::from("\\begin{array}{rll}\n");
    for (k, l, r) in &rows {
        csv.push_str(&format!("{k},{l},{r}\n"));
        latex.push_str(&format!("{k} & [{l}] & [{r}] \\\\\n"));
    }
    latex.push_str("\\end{array}\n");
    Ok(Rendered {
        stem: format!("restrict-{}", file_safe(label)),
        json: json!({
            "kind": "restrict",
            "simple": s.to_string(),
            "cuts": rows.iter().map(|(k, l, r)| json!({"k": k, "left": l.to_string(), "right": r.to_string()})).collect::<Vec<_>>(),
        }),
        csv,
        latex,
    })
}

fn file_safe(s: &str) -> String {
    s.replace('|', "_")
}
