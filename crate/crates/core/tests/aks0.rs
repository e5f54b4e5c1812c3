use cycloribbon::aks0::{
    aks_mul, block_project, central_idempotent, default_parameters, frobenius_form, lagrange_of_xi,
    regular_action_matrices, xi, AKSElement, BlockAlgebra, BlockId, DEFAULT_GUARD,
};
use cycloribbon::combinat::{ColorWord, Permutation};
use cycloribbon::hecke0::HeckeElement;
use cycloribbon::linalg::{rat, Rat, RatMatrix};
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn p(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn cw(s: &str) -> ColorWord {
    s.parse().unwrap()
}

fn l(r: usize, c: &str) -> AKSElement {
    AKSElement::l(r, &cw(c)).unwrap()
}

fn b(r: usize, c: &ColorWord, s: &Permutation) -> AKSElement {
    AKSElement::basis(r, c, s).unwrap()
}

fn mul(a: &AKSElement, b: &AKSElement) -> AKSElement {
    aks_mul(a, b).unwrap()
}

fn basis_labels(n: usize, r: usize) -> Vec<(ColorWord, Permutation)> {
    let mut out = Vec::new();
    for c in ColorWord::all(n, r) {
        for s in Permutation::all(n) {
            out.push((c.clone(), s));
        }
    }
    out
}

fn random_basis(rng: &mut ChaCha8Rng, n: usize, r: usize) -> AKSElement {
    let colors: Vec<u8> = (0..n).map(|_| rng.gen_range(1..=r as u8)).collect();
    let perms = Permutation::all(n);
    let s = &perms[rng.gen_range(0..perms.len())];
    b(r, &ColorWord::new(colors).unwrap(), s)
}

#[test]
fn lagrange_idempotents_are_orthogonal() {
    for c in ColorWord::all(3, 2) {
        for d in ColorWord::all(3, 2) {
            let prod = mul(&AKSElement::l(2, &d).unwrap(), &AKSElement::l(2, &c).unwrap());
            if c == d {
                assert_eq!(prod, AKSElement::l(2, &c).unwrap());
            } else {
                assert!(prod.is_zero());
            }
        }
    }
}

#[test]
fn straightening_example_in_aks_2_2() {
    let t1 = AKSElement::generator(2, 2, 1);
    let lhs = mul(&t1, &l(2, "12"));
    let expected = b(2, &cw("21"), &p("21")).sub(&l(2, "12"));
    assert_eq!(lhs, expected);
    assert_eq!(lhs.to_string(), "-L[1,2]·T[12] + L[2,1]·T[21]");
}

#[test]
fn presentation_relations_hold() {
    for n in 2..=4 {
        let r = 3;
        let one = AKSElement::one(n, r);
        for i in 1..n {
            let t = AKSElement::generator(n, r, i);
            assert!(mul(&t, &t.add(&one)).is_zero());
            if i + 1 < n {
                let u = AKSElement::generator(n, r, i + 1);
                assert_eq!(mul(&mul(&t, &u), &t), mul(&mul(&u, &t), &u));
            }
            for c in ColorWord::all(n, r) {
                let lc = AKSElement::l(r, &c).unwrap();
                let rhs = mul(&AKSElement::l(r, &c.swap(i)).unwrap(), &t);
                match c.at(i).cmp(&c.at(i + 1)) {
                    std::cmp::Ordering::Less => assert_eq!(mul(&t.add(&one), &lc), rhs),
                    std::cmp::Ordering::Equal => assert_eq!(mul(&t, &lc), rhs),
                    std::cmp::Ordering::Greater => {
                        let rhs = mul(&AKSElement::l(r, &c.swap(i)).unwrap(), &t.add(&one));
                        assert_eq!(mul(&t, &lc), rhs)
                    }
                }
            }
        }
    }
}

#[test]
fn multiplication_is_associative_on_random_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for k in 0..240 {
        let n = 1 + k % 3;
        let r = 1 + (k / 3) % 3;
        let (x, y, z) = (random_basis(&mut rng, n, r), random_basis(&mut rng, n, r), random_basis(&mut rng, n, r));
        assert_eq!(mul(&mul(&x, &y), &z), mul(&x, &mul(&y, &z)), "{x} {y} {z}");
    }
}

#[test]
fn size_mismatch_is_an_error() {
    assert!(aks_mul(&AKSElement::one(2, 2), &AKSElement::one(3, 2)).is_err());
    assert!(AKSElement::basis(2, &cw("13"), &p("12")).is_err());
    assert!(AKSElement::basis(2, &cw("123"), &p("12")).is_err());
}

#[test]
fn xi_with_one_color_is_scalar() {
    let u = vec![rat(5)];
    for j in 1..=3 {
        assert_eq!(xi(3, j, &u).unwrap(), AKSElement::one(3, 1).scale(&rat(5)));
    }
    assert!(xi(3, 1, &[rat(1), rat(1)]).is_err());
    assert!(xi(3, 4, &[rat(1), rat(2)]).is_err());
}

#[test]
fn xi_satisfies_its_minimal_polynomial_and_commutes() {
    for (n, r) in [(2, 2), (3, 3)] {
        let u = default_parameters(r);
        let one = AKSElement::one(n, r);
        for j in 1..=n {
            let x = xi(n, j, &u).unwrap();
            let mut prod = one.clone();
            for uk in &u {
                prod = mul(&prod, &x.sub(&one.scale(uk)));
            }
            assert!(prod.is_zero());
            for k in 1..=n {
                let y = xi(n, k, &u).unwrap();
                assert_eq!(mul(&x, &y), mul(&y, &x));
            }
        }
    }
}

#[test]
fn t_xi_commutation_at_q_zero() {
    for (n, r, u) in [(2, 2, vec![rat(0), rat(1)]), (3, 3, vec![rat(2), rat(-1), Rat::new(1.into(), 2.into())])] {
        for i in 1..n {
            let t = AKSElement::generator(n, r, i);
            let lhs = mul(&t, &xi(n, i, &u).unwrap()).sub(&mul(&xi(n, i + 1, &u).unwrap(), &t));
            let mut rhs = AKSElement::zero(n, r);
            for c1 in 1..=r as u8 {
                for c2 in c1 + 1..=r as u8 {
                    let coeff = u[c2 as usize - 1].clone() - u[c1 as usize - 1].clone();
                    let term = mul(&lagrange_of_xi(n, r, i, c1), &lagrange_of_xi(n, r, i + 1, c2));
                    rhs = rhs.add(&term.scale(&coeff));
                }
            }
            assert_eq!(lhs, rhs);
            // T_i commutes with ξ_i + ξ_{i+1}.
            let s = xi(n, i, &u).unwrap().add(&xi(n, i + 1, &u).unwrap());
            assert_eq!(mul(&t, &s), mul(&s, &t));
        }
    }
}

#[test]
fn frobenius_form_of_the_unit() {
    let w = Permutation::longest(3);
    for c in ColorWord::all(3, 2) {
        let f = frobenius_form(&AKSElement::one(3, 2), &b(2, &c, &w)).unwrap();
        assert_eq!(f, Rat::one());
    }
}

#[test]
fn adjoint_bases_in_hecke_algebra() {
    for n in 1..=4 {
        let r = 1;
        for s in Permutation::all(n) {
            let z = AKSElement::from_hecke(r, &HeckeElement::zeta(&s));
            for t in Permutation::all(n) {
                let nt = AKSElement::from_hecke(r, &HeckeElement::minus_t(&t));
                let expected = if s == t { Rat::one() } else { Rat::zero() };
                assert_eq!(frobenius_form(&z, &nt).unwrap(), expected, "σ = {s}, τ = {t}");
            }
        }
    }
}

#[test]
fn adjoint_bases_in_aks() {
    for n in 1..=3 {
        let r = 2;
        for c in ColorWord::all(n, r) {
            for s in Permutation::all(n) {
                let left = mul(&AKSElement::l(r, &c).unwrap(), &AKSElement::from_hecke(r, &HeckeElement::zeta(&s)));
                for d in ColorWord::all(n, r) {
                    for t in Permutation::all(n) {
                        let right = mul(
                            &AKSElement::from_hecke(r, &HeckeElement::minus_t(&t)),
                            &AKSElement::l(r, &d.mirror()).unwrap(),
                        );
                        let expected = if c == d && s == t { Rat::one() } else { Rat::zero() };
                        assert_eq!(frobenius_form(&left, &right).unwrap(), expected);
                    }
                }
            }
        }
    }
}

fn gram(n: usize, r: usize, left: impl Fn(&ColorWord, &Permutation) -> AKSElement) -> RatMatrix {
    let labels = basis_labels(n, r);
    let elems: Vec<AKSElement> = labels.iter().map(|(c, s)| left(c, s)).collect();
    let mut g = RatMatrix::zeros(elems.len(), elems.len());
    for (a, x) in elems.iter().enumerate() {
        for (k, y) in elems.iter().enumerate() {
            g.data[a][k] = frobenius_form(x, y).unwrap();
        }
    }
    g
}

#[test]
fn basis_gram_matrices_are_nonsingular() {
    for n in 1..=3 {
        for r in 1..=2usize {
            let dim = r.pow(n as u32) * (1..=n).product::<usize>();
            let g = gram(n, r, |c, s| b(r, c, s));
            assert_eq!(g.rank(), dim, "n = {n}, r = {r}");
            let gp = gram(n, r, |c, s| AKSElement::b_prime(r, c, s).unwrap());
            assert_eq!(gp.rank(), dim, "n = {n}, r = {r}");
        }
    }
}

#[test]
fn frobenius_form_is_associative_on_random_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for k in 0..120 {
        let n = 1 + k % 3;
        let r = 1 + k % 2;
        let (x, y, z) = (random_basis(&mut rng, n, r), random_basis(&mut rng, n, r), random_basis(&mut rng, n, r));
        assert_eq!(frobenius_form(&mul(&x, &y), &z).unwrap(), frobenius_form(&x, &mul(&y, &z)).unwrap());
    }
}

#[test]
fn central_idempotents_partition_unity() {
    let (n, r) = (3, 2);
    let mut sum = AKSElement::zero(n, r);
    for e in BlockId::all(n, r) {
        let z = central_idempotent(&e);
        assert_eq!(mul(&z, &z), z);
        sum = sum.add(&z);
    }
    assert_eq!(sum, AKSElement::one(n, r));
    assert_eq!(BlockId::all(n, r).len(), 4);
}

#[test]
fn central_idempotents_are_central() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let blocks = BlockId::all(3, 2);
    for _ in 0..100 {
        let x = random_basis(&mut rng, 3, 2);
        for e in &blocks {
            let z = central_idempotent(e);
            assert_eq!(mul(&z, &x), mul(&x, &z));
            assert_eq!(mul(&z, &x), block_project(&x, e));
        }
    }
}

#[test]
fn products_across_blocks_vanish() {
    let (n, r) = (3, 2);
    for (c, s) in basis_labels(n, r) {
        for (d, t) in basis_labels(n, r) {
            if c.evaluation(r) != d.evaluation(r) {
                assert!(mul(&b(r, &c, &s), &b(r, &d, &t)).is_zero());
            }
        }
    }
}

#[test]
fn block_dimensions() {
    let e = BlockId::new(vec![2, 1, 1, 0]).unwrap();
    assert_eq!(e.dim(), 288);
    assert_eq!(e.to_string(), "(2,1,1,0)");
    assert_eq!("(2,1,1,0)".parse::<BlockId>().unwrap(), e);
    let total: usize = BlockId::all(3, 3).iter().map(BlockId::dim).sum();
    assert_eq!(total, 27 * 6);
    assert!(BlockAlgebra::new(&BlockId::new(vec![1, 1, 1, 1]).unwrap(), 100).is_err());
    assert_eq!(BlockAlgebra::new(&BlockId::new(vec![1, 1, 1, 1]).unwrap(), DEFAULT_GUARD).unwrap().dim(), 576);
}

#[test]
fn regular_action_matrices_are_a_representation() {
    for e in BlockId::all(3, 2) {
        let mats = regular_action_matrices(&e, DEFAULT_GUARD).unwrap();
        let dim = e.dim();
        let id = RatMatrix::identity(dim);
        let ts: Vec<&RatMatrix> = mats.iter().filter(|m| m.name.starts_with('T')).map(|m| &m.matrix).collect();
        let ls: Vec<&RatMatrix> = mats.iter().filter(|m| m.name.starts_with('L')).map(|m| &m.matrix).collect();
        assert_eq!(ts.len(), 2);
        for t in &ts {
            assert!(t.mul(&t.add(&id)).is_zero());
        }
        assert_eq!(ts[0].mul(ts[1]).mul(ts[0]), ts[1].mul(ts[0]).mul(ts[1]));
        let mut sum = RatMatrix::zeros(dim, dim);
        for l in &ls {
            assert_eq!(l.mul(l), **l);
            for k in 0..dim {
                for j in 0..dim {
                    if k != j {
                        assert!(l.data[k][j].is_zero());
                    }
                }
            }
            sum = sum.add(l);
        }
        assert_eq!(sum, id);
    }
}

#[test]
fn block_algebra_matches_element_multiplication() {
    for e in BlockId::all(3, 3) {
        let alg = BlockAlgebra::new(&e, DEFAULT_GUARD).unwrap();
        let r = e.r();
        for k in 0..alg.dim() {
            let (c, s) = alg.label(k);
            let mut v = vec![0i128; alg.dim()];
            v[k] = 1;
            for i in 1..3 {
                let got = alg.left_t(i, &v).unwrap();
                let got: Vec<Rat> = got.iter().map(|&x| rat(x as i64)).collect();
                let want = mul(&AKSElement::generator(3, r, i), &b(r, &c, &s));
                assert_eq!(alg.to_element(&got), want);
                assert_eq!(alg.from_element(&want).unwrap(), got);
            }
            let orbit = alg.t_orbit(&v).unwrap();
            for m in 0..alg.dim() {
                let (d, t) = alg.label(m);
                let got: Vec<Rat> = alg.apply_basis(m, &orbit).iter().map(|&x| rat(x as i64)).collect();
                assert_eq!(alg.to_element(&got), mul(&b(r, &d, &t), &b(r, &c, &s)));
            }
        }
    }
}

#[derive(Clone, Debug)]
enum Gen {
    T(usize),
    L(Vec<u8>),
}

fn gen_strategy(n: usize, r: u8) -> impl Strategy<Value = Gen> {
    prop_oneof![(1..n).prop_map(Gen::T), proptest::collection::vec(1..=r, n).prop_map(Gen::L),]
}

fn gen_element(g: &Gen, n: usize, r: usize) -> AKSElement {
    match g {
        Gen::T(i) => AKSElement::generator(n, r, *i),
        Gen::L(c) => AKSElement::l(r, &ColorWord::new(c.clone()).unwrap()).unwrap(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn straightening_is_confluent(word in proptest::collection::vec(gen_strategy(3, 3), 1..8)) {
        let (n, r) = (3, 3);
        let elems: Vec<AKSElement> = word.iter().map(|g| gen_element(g, n, r)).collect();
        let left_first = elems.iter().skip(1).fold(elems[0].clone(), |acc, x| mul(&acc, x));
        let right_first = elems.iter().rev().skip(1).fold(elems[elems.len() - 1].clone(), |acc, x| mul(x, &acc));
        prop_assert_eq!(left_first, right_first);
    }

    #[test]
    fn block_projection_is_multiplicative(word in proptest::collection::vec(gen_strategy(3, 2), 1..6)) {
        let (n, r) = (3, 2);
        let prod = word.iter().fold(AKSElement::one(n, r), |acc, g| mul(&acc, &gen_element(g, n, r)));
        let mut sum = AKSElement::zero(n, r);
        for e in BlockId::all(n, r) {
            sum = sum.add(&block_project(&prod, &e));
        }
        prop_assert_eq!(sum, prod);
    }
}
