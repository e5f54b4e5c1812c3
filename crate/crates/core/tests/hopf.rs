use std::collections::BTreeMap;

use cycloribbon::combinat::{ColoredComposition, Composition, Permutation};
use cycloribbon::hopf::{
    ch_proj, ch_simple, d_map, decomposition_coefficient, e_map, h_to_schur, kostka, m_product, pairing, pi_map,
    ribbon_to_schur, schur_product, MrBasis, MrElement, Multipartition, Partition, QmrBasis, QmrElement, SymBasis,
    SymElement, Tensor,
};
use cycloribbon::linalg::{rat, LinComb, Rat};
use cycloribbon::reptheory::{
    composition_factors, induct_simples, projective_module, restrict_projective, restrict_simple, ProjectiveLabel,
    SimpleLabel,
};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn cc(s: &str) -> ColoredComposition {
    s.parse().unwrap()
}

fn all_upto(d: usize, r: usize) -> Vec<ColoredComposition> {
    (0..=d)
        .flat_map(|k| if k == 0 { vec![ColoredComposition::empty()] } else { ColoredComposition::all(k, r) })
        .collect()
}

// Polynomial realization: variables x_j^{(c)}, with x_j^{(a)}x_j^{(b)} = 0
// for a ≠ b. A monomial records, for each index j < k, its color and
// exponent (exponent 0 = absent).

type Monomial = Vec<(u8, usize)>;
type Poly = BTreeMap<Monomial, Rat>;

fn poly_add(p: &mut Poly, m: Monomial, c: Rat) {
    let e = p.entry(m.clone()).or_insert_with(Rat::zero);
    *e += c;
    if e.is_zero() {
        p.remove(&m);
    }
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (x, cx) in a {
        'pairs: for (y, cy) in b {
            let mut z = x.clone();
            for (j, &(c, e)) in y.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match z[j] {
                    (_, 0) => z[j] = (c, e),
                    (c0, e0) if c0 == c => z[j] = (c, e0 + e),
                    _ => continue 'pairs,
                }
            }
            poly_add(&mut out, z, cx * cy);
        }
    }
    out
}

/// `M_{(I,u)}` in `k` indices: `Σ_{j_1<…<j_ℓ} Π (x_{j_t}^{(u_t)})^{i_t}`.
fn m_poly(a: &ColoredComposition, k: usize) -> Poly {
    fn rec(pairs: &[(usize, u8)], start: usize, k: usize, m: &mut Monomial, out: &mut Poly) {
        let Some((&(p, c), rest)) = pairs.split_first() else {
            poly_add(out, m.clone(), Rat::one());
            return;
        };
        for j in start..k {
            m[j] = (c, p);
            rec(rest, j + 1, k, m, out);
            m[j] = (0, 0);
        }
    }
    let mut out = Poly::new();
    rec(&a.pairs(), 0, k, &mut vec![(0, 0); k], &mut out);
    out
}

/// `F_{(I,u)}` in `k` indices, directly from its ribbon: cells read in
/// order carry weakly increasing indices, strictly increasing at each
/// descent of the ribbon and at each change of color.
fn f_poly(a: &ColoredComposition, k: usize) -> Poly {
    let mut colors = Vec::new();
    let mut strict = Vec::new();
    for (idx, (p, c)) in a.pairs().into_iter().enumerate() {
        for cell in 0..p {
            let prev_color = colors.last().copied();
            strict.push(cell == 0 && idx > 0 || prev_color.is_some_and(|x| x != c));
            colors.push(c);
        }
    }
    fn rec(colors: &[u8], strict: &[bool], pos: usize, min: usize, k: usize, m: &mut Monomial, out: &mut Poly) {
        if pos == colors.len() {
            poly_add(out, m.clone(), Rat::one());
            return;
        }
        let lo = if pos > 0 && strict[pos] { min + 1 } else { min };
        for j in lo..k {
            let saved = m[j];
            m[j] = (colors[pos], saved.1 + 1);
            rec(colors, strict, pos + 1, j, k, m, out);
            m[j] = saved;
        }
    }
    let mut out = Poly::new();
    rec(&colors, &strict, 0, 0, k, &mut vec![(0, 0); k], &mut out);
    out
}

fn qmr_poly(x: &QmrElement, k: usize) -> Poly {
    let mut out = Poly::new();
    for (a, c) in x.to_basis(QmrBasis::M).terms.iter() {
        for (m, d) in m_poly(a, k) {
            poly_add(&mut out, m, c * d);
        }
    }
    out
}

#[test]
fn m_product_matches_polynomials() {
    for a in all_upto(5, 2) {
        for b in all_upto(5 - a.size(), 2) {
            let k = a.len() + b.len() + 1;
            let lhs = poly_mul(&m_poly(&a, k), &m_poly(&b, k));
            let rhs = qmr_poly(&QmrElement::m(a.clone()).mul(&QmrElement::m(b.clone())), k);
            assert_eq!(lhs, rhs, "M[{a}]·M[{b}]");
        }
    }
}

#[test]
fn f_is_the_sum_over_finer_compositions() {
    for a in all_upto(4, 2) {
        let k = a.size() + 1;
        assert_eq!(f_poly(&a, k), qmr_poly(&QmrElement::f(a.clone()), k), "F[{a}]");
    }
}

#[test]
fn m_product_examples() {
    let x = QmrElement::m(cc("1:1"));
    let mut want = LinComb::zero();
    want.add_term(cc("1:1,1:1"), rat(2));
    want.add_term(cc("2:1"), rat(1));
    assert_eq!(x.mul(&x).terms, want);
    let got: Vec<_> = m_product(&cc("1:1"), &cc("1:2"));
    assert_eq!(got, vec![(cc("1:1,1:2"), 1), (cc("1:2,1:1"), 1)]);
}

#[test]
fn conversions_are_inverse_and_unitriangular() {
    for a in all_upto(5, 3).into_iter().filter(|a| a.size() <= 4 || a.len() <= 3) {
        let f = QmrElement::f(a.clone());
        let m = f.to_basis(QmrBasis::M);
        assert!(m.terms.iter().all(|(b, c)| b.refines(&a) && (c.is_one() || -c == Rat::one())));
        assert_eq!(m.coeff(&a), Rat::one());
        assert_eq!(m.to_basis(QmrBasis::F), f);
        assert_eq!(QmrElement::m(a.clone()).to_basis(QmrBasis::F).to_basis(QmrBasis::M), QmrElement::m(a.clone()));
        let r = MrElement::r(a.clone());
        let s = r.to_basis(MrBasis::S);
        assert!(s.terms.iter().all(|(b, c)| a.refines(b) && (c.is_one() || -c == Rat::one())));
        assert_eq!(s.to_basis(MrBasis::R), r);
    }
}

#[test]
fn s_in_ribbons_example() {
    let s = MrElement::s(cc("2:1,1:2,2:2,1:1,3:1")).to_basis(MrBasis::R);
    let want: LinComb<_> = ["2:1,1:2,2:2,1:1,3:1", "2:1,3:2,1:1,3:1", "2:1,1:2,2:2,4:1", "2:1,3:2,4:1"]
        .iter()
        .map(|x| (cc(x), rat(1)))
        .collect();
    assert_eq!(s.terms, want);
}

#[test]
fn ribbon_products() {
    let p = MrElement::r(cc("1:1")).mul(&MrElement::r(cc("1:2")));
    assert_eq!(p, MrElement::r(cc("1:1,1:2")));
    for a in all_upto(3, 2) {
        for b in all_upto(3, 2) {
            let direct = MrElement::r(a.clone()).mul(&MrElement::r(b.clone()));
            let via_s = MrElement::r(a.clone()).to_basis(MrBasis::S).mul(&MrElement::r(b.clone())).to_basis(MrBasis::R);
            assert_eq!(direct, via_s, "R[{a}]·R[{b}]");
        }
    }
}

#[test]
fn ribbons_and_quasi_ribbons_are_dual() {
    for d in 0..=4 {
        let basis = all_upto(d, 2).into_iter().filter(|a| a.size() == d).collect::<Vec<_>>();
        for a in &basis {
            for b in &basis {
                let want = if a == b { Rat::one() } else { Rat::zero() };
                assert_eq!(pairing(&MrElement::r(a.clone()), &QmrElement::f(b.clone())), want, "<R[{a}], F[{b}]>");
            }
        }
    }
}

#[test]
fn pi_example() {
    let got = pi_map(&MrElement::r(cc("2:1,1:2,2:2,1:1,3:1")));
    let want: LinComb<_> = ["2:1,1:1,2:1,1:1,3:1", "2:1,1:1,3:1,3:1", "3:1,2:1,1:1,3:1", "3:1,3:1,3:1"]
        .iter()
        .map(|x| (cc(x), rat(1)))
        .collect();
    assert_eq!(got.terms, want);
    let label = ProjectiveLabel::from_colored_composition(&cc("2:1,1:2,2:2,1:1,3:1"));
    assert_eq!(restrict_projective(&label), got);
}

/// Number of permutations with descent composition `J`: the dimension of
/// the projective `H_n(0)`-module `P_J`.
fn hecke_projective_dim(j: &Composition) -> usize {
    Permutation::all(j.size()).into_iter().filter(|p| p.descents() == j.descents()).count()
}

#[test]
fn restricted_projectives_have_the_right_dimension() {
    for n in 1..=4 {
        for p in ProjectiveLabel::all(n, 2) {
            let dim: Rat =
                restrict_projective(&p).terms.iter().map(|(j, c)| c * rat(hecke_projective_dim(&j.parts) as i64)).sum();
            assert_eq!(dim, rat(projective_module(&p).unwrap().dim() as i64), "{p}");
        }
    }
}

// Symmetric functions.

/// Brute-force count of semistandard tableaux by filling cells in reading
/// order.
fn ssyt_count(shape: &[usize], content: &[usize]) -> u64 {
    fn rec(cells: &[(usize, usize)], k: usize, grid: &mut Vec<Vec<usize>>, left: &mut Vec<usize>) -> u64 {
        if k == cells.len() {
            return u64::from(left.iter().all(|&x| x == 0));
        }
        let (r, c) = cells[k];
        let mut total = 0;
        for v in 0..left.len() {
            if left[v] == 0 || (c > 0 && grid[r][c - 1] > v) || (r > 0 && grid[r - 1][c] >= v) {
                continue;
            }
            left[v] -= 1;
            grid[r][c] = v;
            total += rec(cells, k + 1, grid, left);
            left[v] += 1;
        }
        total
    }
    let cells: Vec<(usize, usize)> = shape.iter().enumerate().flat_map(|(r, &l)| (0..l).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();
    rec(&cells, 0, &mut grid, &mut content.to_vec())
}

#[test]
fn kostka_matches_tableau_enumeration() {
    for n in 0..=6 {
        for l in Partition::all(n) {
            for mu in Composition::all(n) {
                assert_eq!(kostka(&l, mu.parts()), ssyt_count(l.parts(), mu.parts()), "{l} {mu:?}");
            }
        }
    }
}

fn sym(pairs: &[(&str, i64)]) -> LinComb<Partition> {
    pairs.iter().map(|(p, c)| (p.parse().unwrap(), rat(*c))).collect()
}

#[test]
fn schur_examples() {
    assert_eq!(h_to_schur(&"21".parse().unwrap()).terms, sym(&[("3", 1), ("21", 1)]));
    assert_eq!(ribbon_to_schur(&Composition::new(vec![2, 1]).unwrap()).terms, sym(&[("21", 1)]));
    for n in 1..=5 {
        let row = ribbon_to_schur(&Composition::new(vec![n]).unwrap());
        assert_eq!(row.terms, LinComb::basis(Partition::new(vec![n])));
    }
    let s1 = SymElement { basis: SymBasis::Schur, terms: sym(&[("1", 1)]) };
    assert_eq!(schur_product(&s1, &s1).terms, sym(&[("2", 1), ("11", 1)]));
    let s21 = SymElement { basis: SymBasis::Schur, terms: sym(&[("21", 1)]) };
    assert_eq!(schur_product(&s21, &s1).terms, sym(&[("31", 1), ("22", 1), ("211", 1)]));
}

/// Standard Young tableaux of a shape, as the row of each entry.
fn syt_rows(shape: &[usize]) -> Vec<Vec<usize>> {
    fn rec(shape: &[usize], filled: &mut Vec<usize>, rows: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if filled.iter().sum::<usize>() == shape.iter().sum::<usize>() {
            out.push(rows.clone());
            return;
        }
        for r in 0..shape.len() {
            if filled[r] < shape[r] && (r == 0 || filled[r - 1] > filled[r]) {
                filled[r] += 1;
                rows.push(r);
                rec(shape, filled, rows, out);
                rows.pop();
                filled[r] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    rec(shape, &mut vec![0; shape.len()], &mut Vec::new(), &mut out);
    out
}

#[test]
fn monochromatic_decomposition_counts_standard_tableaux() {
    for n in 1..=6 {
        for i in Composition::all(n) {
            let iu = cycloribbon::hopf::monochrome(&i);
            for l in Partition::all(n) {
                let count = syt_rows(l.parts())
                    .into_iter()
                    .filter(|rows| {
                        let d: std::collections::BTreeSet<usize> = (1..n).filter(|&k| rows[k] > rows[k - 1]).collect();
                        d == i.descents()
                    })
                    .count();
                let lam = Multipartition(vec![l.clone()]);
                assert_eq!(decomposition_coefficient(&lam, &iu), rat(count as i64), "{l} {i:?}");
            }
        }
    }
}

#[test]
fn decomposition_coefficient_is_zero_off_the_block() {
    let lam: Multipartition = "(2|1)".parse().unwrap();
    assert!(decomposition_coefficient(&lam, &cc("1:1,2:2")).is_zero());
    assert_eq!(decomposition_coefficient(&lam, &cc("2:1,1:2")), rat(1));
}

#[test]
fn e_is_symmetric_within_a_color() {
    let a = e_map(&MrElement::s(cc("2:1,1:2,1:1")), 2);
    let b = e_map(&MrElement::s(cc("1:1,2:1,1:2")), 2);
    assert_eq!(a, b);
    assert_eq!(a.terms, LinComb::basis("(21|1)".parse().unwrap()));
}

// Characteristic maps against module theory.

#[test]
fn ch_is_multiplicative_on_simples() {
    let labels: Vec<SimpleLabel> = (0..=4).flat_map(|n| SimpleLabel::all(n, 2)).collect();
    for a in &labels {
        for b in labels.iter().filter(|b| a.size() + b.size() <= 4) {
            let lhs = ch_simple(a).mul(&ch_simple(b));
            let mut rhs = QmrElement::zero(QmrBasis::F);
            for f in composition_factors(&induct_simples(a, b).unwrap()).unwrap() {
                rhs = rhs.add(&ch_simple(&f));
            }
            assert_eq!(lhs, rhs, "{a} ⊗ {b}");
        }
    }
}

#[test]
fn unit_has_degree_zero() {
    let empty = SimpleLabel::all(0, 2);
    assert_eq!(empty.len(), 1);
    assert_eq!(ch_simple(&empty[0]), QmrElement::one(QmrBasis::F));
}

#[test]
fn coproduct_of_ch_is_restriction() {
    for n in 1..=4 {
        for s in SimpleLabel::all(n, 2) {
            let mut want = Tensor::zero();
            let empty = &SimpleLabel::all(0, 2)[0];
            let mut cuts = vec![(empty.clone(), s.clone()), (s.clone(), empty.clone())];
            cuts.extend((1..n).map(|k| restrict_simple(&s, k).unwrap()));
            for (l, r) in cuts {
                let key = (l.phi().to_colored_composition(), r.phi().to_colored_composition());
                want.add_term(key, rat(1));
            }
            assert_eq!(tensor_terms(&ch_simple(&s).coproduct()), tensor_terms(&want), "{s}");
        }
    }
}

#[test]
fn projectives_map_to_ribbons() {
    for p in ProjectiveLabel::all(3, 2) {
        assert_eq!(ch_proj(&p), MrElement::r(p.to_colored_composition()));
    }
}

fn tensor_terms(t: &Tensor) -> Vec<(String, String, Rat)> {
    t.iter().map(|((x, y), c)| (x.to_string(), y.to_string(), c.clone())).collect()
}

fn tensor_mul(x: &Tensor, y: &Tensor) -> Tensor {
    let mut out = Tensor::zero();
    for ((a, b), c) in x.iter() {
        for ((a2, b2), c2) in y.iter() {
            out.add_term((a.concat(a2), b.concat(b2)), c * c2);
        }
    }
    out
}

fn element(basis: MrBasis, terms: &[(ColoredComposition, i64)]) -> MrElement {
    MrElement { basis, terms: terms.iter().map(|(a, c)| (a.clone(), rat(*c))).collect() }
}

fn arb_cc(max: usize, r: u8) -> impl Strategy<Value = ColoredComposition> {
    prop::collection::vec((1..=max, 1..=r), 0..=2).prop_filter_map("size", move |v| {
        let cc = ColoredComposition::from_pairs(&v).ok()?;
        (cc.size() <= max).then_some(cc)
    })
}

fn arb_mr(max: usize) -> impl Strategy<Value = MrElement> {
    prop::collection::vec((arb_cc(max, 2), -3i64..=3), 1..=3).prop_map(|t| element(MrBasis::R, &t))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn coproduct_is_multiplicative(a in arb_mr(3), b in arb_mr(3)) {
        let (sa, sb) = (a.to_basis(MrBasis::S), b.to_basis(MrBasis::S));
        let lhs = sa.mul(&sb).coproduct();
        prop_assert_eq!(tensor_terms(&lhs), tensor_terms(&tensor_mul(&sa.coproduct(), &sb.coproduct())));
    }

    #[test]
    fn pi_is_multiplicative(a in arb_mr(4), b in arb_mr(4)) {
        prop_assert_eq!(pi_map(&a.mul(&b)), pi_map(&a).mul(&pi_map(&b)));
    }

    #[test]
    fn e_and_d_are_multiplicative(a in arb_mr(2), b in arb_mr(2)) {
        let ea = e_map(&a, 2);
        let eb = e_map(&b, 2);
        let eab = e_map(&a.mul(&b), 2);
        // Sym^{(r)} is commutative: multiply in the h basis by merging parts.
        let mut prod = LinComb::zero();
        for (x, cx) in ea.terms.iter() {
            for (y, cy) in eb.terms.iter() {
                let z = Multipartition(x.0.iter().zip(&y.0).map(|(p, q)| {
                    let mut parts = p.parts().to_vec();
                    parts.extend_from_slice(q.parts());
                    Partition::new(parts)
                }).collect());
                prod.add_term(z, cx * cy);
            }
        }
        prop_assert_eq!(&eab.terms, &prod);
        prop_assert_eq!(d_map(&eab), d_map(&ea).mul(&d_map(&eb)));
    }

    #[test]
    fn qmr_product_is_associative(a in arb_cc(2, 2), b in arb_cc(2, 2), c in arb_cc(2, 2)) {
        let (x, y, z) = (QmrElement::f(a), QmrElement::f(b), QmrElement::f(c));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
    }
}

#[test]
fn display_forms() {
    let x = QmrElement::f(cc("2:1,1:2")).scale(&rat(3)).add(&QmrElement::m(cc("1:1,1:1,1:2")).scale(&rat(-1)));
    assert_eq!(x.to_string(), "-F[1:1,1:1,1:2] + 3·F[2:1,1:2]");
    assert_eq!(MrElement::r(cc("1:1,2:2")).to_string(), "R[1:1,2:2]");
}
