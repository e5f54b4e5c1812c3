use std::collections::{BTreeSet, VecDeque};

use cycloribbon::aks0::BlockId;
use cycloribbon::combinat::Permutation;
use cycloribbon::fixtures;
use cycloribbon::hopf::{cartan_map, ch_proj, Multipartition};
use cycloribbon::reptheory::{
    block_radical, decomposition_block, hecke_quiver, layers_match_vertex_factors, projective_module, q_cartan,
    q_cartan_block, quiver_block, quiver_rule, radical_filtration, twist_simple, undirected, vertex_factors, QPoly,
    SimpleLabel, DEFAULT_GUARD,
};
use num_traits::ToPrimitive;

fn simple(s: &str) -> SimpleLabel {
    s.parse().unwrap()
}

fn block(e: &[usize]) -> BlockId {
    BlockId { evaluation: e.to_vec() }
}

fn q(s: &str) -> QPoly {
    s.parse().unwrap()
}

// Oracles.

#[test]
fn two_colors_two_cells() {
    let c = q_cartan_block(&block(&[1, 1]), DEFAULT_GUARD).unwrap();
    let (a, b) = (simple("2|12"), simple("1.1|21"));
    assert_eq!(c.labels, vec![a.clone(), b.clone()]);
    assert_eq!(c.entry(&a, &a), Some(&q("1")));
    assert_eq!(c.entry(&a, &b), Some(&q("q")));
    assert_eq!(c.entry(&b, &a), Some(&q("q")));
    assert_eq!(c.entry(&b, &b), Some(&q("1")));
}

#[test]
fn distinct_colors_give_length_powers() {
    // With three distinct colors every simple module is determined by its
    // color word c, read as a permutation; the entry is q^ℓ(c⁻¹d).
    let c = q_cartan_block(&block(&[1, 1, 1]), DEFAULT_GUARD).unwrap();
    let perm = |s: &SimpleLabel| Permutation::new(s.colors().colors().to_vec()).unwrap();
    for a in &c.labels {
        for b in &c.labels {
            let len = perm(a).inverse().compose(&perm(b)).length();
            assert_eq!(c.entry(a, b), Some(&QPoly::monomial(1, len)), "{a} {b}");
        }
    }
}

#[test]
fn radical_codimension_is_the_number_of_simples() {
    for n in 1..=4 {
        for b in BlockId::all(n, 2) {
            let rad = block_radical(&b, DEFAULT_GUARD).unwrap();
            assert_eq!(rad.algebra.dim() - rad.basis.len(), SimpleLabel::in_block(&b).len(), "{b}");
        }
    }
}

#[test]
fn guard_refuses_large_blocks() {
    let err = q_cartan_block(&block(&[1, 1, 1]), 5).unwrap_err();
    assert_eq!(err, cycloribbon::Error::GuardExceeded { dim: 36, guard: 5 });
}

// Reference tables.

#[test]
fn qcartan_fixtures_match() {
    for fx in fixtures::qcartan().unwrap() {
        let computed = q_cartan_block(&fx.block_id(), DEFAULT_GUARD).unwrap();
        assert!(fx.covers(&computed), "{}: label sets differ", fx.id);
        let bad = fx.mismatches(&computed);
        assert!(bad.is_empty(), "{}: {:?}", fx.id, bad);
    }
}

#[test]
fn decomposition_fixtures_match() {
    for fx in fixtures::decomposition().unwrap() {
        let computed = decomposition_block(&fx.block_id());
        assert_eq!(computed.rows.len(), fx.rows.len(), "{}", fx.id);
        for (row, entries) in fx.rows.iter().zip(&fx.entries) {
            let lam = Multipartition::from_listed(row, &fx.block).unwrap();
            for (b, want) in fx.labels.iter().zip(entries) {
                assert_eq!(computed.entry(&lam, &b.phi()), Some(*want), "{} {row} {b}", fx.id);
            }
        }
    }
}

#[test]
fn decomposition_examples() {
    let d = decomposition_block(&block(&[1, 1]));
    assert_eq!(d.entries, vec![vec![1, 1]]);
    let d = decomposition_block(&block(&[1, 1, 1]));
    assert_eq!(d.entries, vec![vec![1; 6]]);
}

#[test]
fn quiver_fixtures_match() {
    for fx in fixtures::quivers().unwrap() {
        let computed = undirected(&quiver_block(&fx.block_id(), DEFAULT_GUARD).unwrap());
        let expected: BTreeSet<_> = fx
            .edges
            .iter()
            .map(|[a, b]| {
                let (a, b) = (a.phi(), b.phi());
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        assert_eq!(computed, expected, "{}", fx.id);
    }
}

// Invariants.

#[test]
fn symmetric_along_both_diagonals() {
    for n in 1..=4 {
        for b in BlockId::all(n, 2) {
            let c = q_cartan_block(&b, DEFAULT_GUARD).unwrap();
            for x in &c.labels {
                for y in &c.labels {
                    assert_eq!(c.entry(x, y), c.entry(y, x), "{b} transpose");
                    let (tx, ty) = (twist_simple(x), twist_simple(y));
                    assert_eq!(c.entry(x, y), c.entry(&tx, &ty), "{b} twist {x} {y}");
                }
            }
        }
    }
}

#[test]
fn twist_is_an_involution() {
    for s in SimpleLabel::all(4, 3) {
        assert_eq!(twist_simple(&twist_simple(&s)), s);
    }
}

#[test]
fn radical_layers_account_for_the_whole_projective() {
    for n in 1..=4 {
        for r in 1..=2 {
            for b in BlockId::all(n, r) {
                for s in radical_filtration(&b, DEFAULT_GUARD).unwrap() {
                    let g = projective_module(&s.projective).unwrap();
                    assert_eq!(s.dim(), g.dim(), "{}", s.projective);
                    assert_eq!(s.layers[0], vec![s.projective.top()], "{}", s.projective);
                    assert!(layers_match_vertex_factors(&s).unwrap(), "{}", s.projective);
                }
            }
        }
    }
}

#[test]
fn cartan_is_dtd() {
    for n in 1..=4 {
        for b in BlockId::all(n, 2).into_iter().chain(BlockId::all(n, 3)) {
            let c = q_cartan_block(&b, DEFAULT_GUARD).unwrap();
            let d = decomposition_block(&b);
            assert_eq!(d.labels, c.labels);
            assert_eq!(d.gram(), c.at_one(), "{b}");
        }
    }
}

#[test]
fn cartan_map_gives_the_cartan_matrix() {
    for n in 1..=4 {
        for r in 1..=2 {
            for c in q_cartan(n, r, DEFAULT_GUARD).unwrap() {
                for a in &c.labels {
                    let image = cartan_map(&ch_proj(&a.phi()), r);
                    for b in &c.labels {
                        let got = image.coeff(&b.phi().to_colored_composition()).to_i64().unwrap();
                        assert_eq!(Some(got), c.entry(a, b).map(QPoly::at_one), "{a} {b}");
                    }
                }
            }
        }
    }
}

#[test]
fn quiver_routes_agree() {
    for n in 1..=4 {
        let h = hecke_quiver(n, DEFAULT_GUARD).unwrap();
        for r in 1..=4 {
            for b in BlockId::all(n, r) {
                let a = undirected(&quiver_block(&b, DEFAULT_GUARD).unwrap());
                assert_eq!(a, quiver_rule(&b, &h), "{b}");
            }
        }
    }
}

#[test]
fn hecke_quiver_of_three() {
    let h = hecke_quiver(3, DEFAULT_GUARD).unwrap();
    let pairs: Vec<String> = h.iter().map(|(a, b)| format!("{a}-{b}")).collect();
    assert_eq!(pairs, vec!["1.2-2.1"]);
}

/// Radical layers are not, in general, the layers of graph distance from
/// the generator of the projective module graph; the smallest
/// counterexample already occurs for `H_4(0)`.
#[test]
fn radical_layers_differ_from_graph_distance() {
    let distance_layers = |g: &cycloribbon::hecke0::ModuleGraph| {
        let f = vertex_factors(g).unwrap();
        let mut dist = vec![usize::MAX; g.dim()];
        dist[g.generator] = 0;
        let mut queue = VecDeque::from([g.generator]);
        while let Some(v) = queue.pop_front() {
            for (a, t, _) in g.edges() {
                if a == v && dist[t] == usize::MAX {
                    dist[t] = dist[v] + 1;
                    queue.push_back(t);
                }
            }
        }
        let depth = dist.iter().max().copied().unwrap_or(0);
        (0..=depth)
            .map(|k| {
                let mut layer: Vec<SimpleLabel> =
                    (0..g.dim()).filter(|&v| dist[v] == k).map(|v| f[v].clone()).collect();
                layer.sort();
                layer
            })
            .collect::<Vec<_>>()
    };
    let series = radical_filtration(&block(&[4]), DEFAULT_GUARD).unwrap();
    let p = series.iter().find(|s| s.projective.to_string() == "2.2|1111").unwrap();
    let g = projective_module(&p.projective).unwrap();
    assert_eq!(p.layers.len(), 3);
    assert_eq!(distance_layers(&g).len(), 4);
    // Small cases still agree.
    for s in radical_filtration(&block(&[3]), DEFAULT_GUARD).unwrap() {
        let mut layers = s.layers.clone();
        layers.iter_mut().for_each(|l| l.sort());
        assert_eq!(distance_layers(&projective_module(&s.projective).unwrap()), layers);
    }
}

// Output formats.

#[test]
fn emitters() {
    let c = q_cartan_block(&block(&[1, 1]), DEFAULT_GUARD).unwrap();
    assert_eq!(
        c.to_json().to_string(),
        r#"{"block":[1,1],"entries":[["1","q"],["q","1"]],"labels":["2|12","1.1|21"]}"#
    );
    assert_eq!(c.to_csv(), "label,2|12,1.1|21\n2|12,1,q\n1.1|21,q,1\n");
    assert!(c.to_latex().contains("[1.1|12] & 1 & q \\\\"));
    let d = decomposition_block(&block(&[2, 0]));
    assert_eq!(d.to_csv(), "multipartition,2|11,1.1|11\n(2|∅),1,0\n(11|∅),0,1\n");
}
