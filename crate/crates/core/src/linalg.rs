//! Exact linear algebra: sparse rational combinations, dense rational
//! matrices, and fraction-free integer echelon forms with an overflow-
//! checked machine-integer fast path.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

pub type Rat = BigRational;

pub fn rat(x: i64) -> Rat {
    Rat::from_integer(BigInt::from(x))
}

/// A sparse linear combination with exact rational coefficients and no
/// stored zeros, ordered by key.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord>(BTreeMap<K, Rat>);

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        LinComb(BTreeMap::new())
    }

    pub fn term(k: K, c: Rat) -> Self {
        let mut out = Self::zero();
        out.add_term(k, c);
        out
    }

    pub fn basis(k: K) -> Self {
        Self::term(k, Rat::one())
    }

    pub fn add_term(&mut self, k: K, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.0.entry(k.clone()).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.0.remove(&k);
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (k, c) in &other.0 {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb(self.0.iter().map(|(k, v)| (k.clone(), v * c)).collect())
    }

    pub fn coeff(&self, k: &K) -> Rat {
        self.0.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Rat)> {
        self.0.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.0.keys()
    }

    /// Apply a linear map given on basis elements.
    pub fn map_linear<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<L>) -> LinComb<L> {
        let mut out = LinComb::zero();
        for (k, c) in &self.0 {
            out.add_assign(&f(k).scale(c));
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, Rat)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Rat)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

/// Format a rational coefficient times a label as `c·label`.
pub fn format_terms<'a, K: Ord + 'a>(
    terms: impl Iterator<Item = (&'a K, &'a Rat)>,
    label: impl Fn(&K) -> String,
) -> String {
    let mut s = String::new();
    for (k, c) in terms {
        let neg = c.is_negative();
        let a = c.abs();
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if !a.is_one() {
            s.push_str(&format!("{a}·"));
        }
        s.push_str(&label(k));
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

impl<K: Ord + Clone + fmt::Display> fmt::Display for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(self.iter(), |k| k.to_string()))
    }
}

impl<K: Ord + Clone + fmt::Display> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Exact integers for fraction-free elimination. Machine integers report
/// overflow instead of wrapping, so every result is exact or an error.
pub trait ExactInt: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn from_i64(x: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn add(&self, o: &Self) -> Result<Self>;
    fn sub(&self, o: &Self) -> Result<Self>;
    fn mul(&self, o: &Self) -> Result<Self>;
    fn neg(&self) -> Self;
    fn gcd(&self, o: &Self) -> Self;
    fn div_exact(&self, o: &Self) -> Self;
    fn to_big(&self) -> BigInt;
}

impl ExactInt for i128 {
    fn zero() -> Self {
        0
    }
    fn from_i64(x: i64) -> Self {
        x as i128
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn add(&self, o: &Self) -> Result<Self> {
        self.checked_add(*o).ok_or(Error::Overflow)
    }
    fn sub(&self, o: &Self) -> Result<Self> {
        self.checked_sub(*o).ok_or(Error::Overflow)
    }
    fn mul(&self, o: &Self) -> Result<Self> {
        self.checked_mul(*o).ok_or(Error::Overflow)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl ExactInt for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_i64(x: i64) -> Self {
        BigInt::from(x)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn add(&self, o: &Self) -> Result<Self> {
        Ok(self + o)
    }
    fn sub(&self, o: &Self) -> Result<Self> {
        Ok(self - o)
    }
    fn mul(&self, o: &Self) -> Result<Self> {
        Ok(self * o)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Divide out the content and make the leading nonzero entry positive.
fn normalize<T: ExactInt>(v: &mut [T]) {
    let mut g = T::zero();
    for x in v.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
        }
    }
    if g.is_zero() {
        return;
    }
    let lead_neg = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    let g = if lead_neg { g.neg() } else { g };
    for x in v.iter_mut() {
        if !x.is_zero() {
            *x = x.div_exact(&g);
        }
    }
}

/// A subspace of `Q^m` kept as a fully reduced integer echelon basis:
/// each row has a pivot column where every other row vanishes.
#[derive(Clone, Debug)]
pub struct IntEchelon<T: ExactInt> {
    pub dim: usize,
    rows: Vec<(usize, Vec<T>)>,
}

impl<T: ExactInt> IntEchelon<T> {
    pub fn new(dim: usize) -> Self {
        IntEchelon { dim, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = &Vec<T>> {
        self.rows.iter().map(|(_, r)| r)
    }

    /// `(pivot column, row)` pairs sorted by pivot.
    pub fn pivot_rows(&self) -> &[(usize, Vec<T>)] {
        &self.rows
    }

    /// Eliminate the pivot columns of the basis from `v`.
    pub fn reduce(&self, mut v: Vec<T>) -> Result<Vec<T>> {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let a = row[*p].clone();
            let b = v[*p].clone();
            let g = a.gcd(&b);
            let (a, b) = (a.div_exact(&g), b.div_exact(&g));
            for (x, y) in v.iter_mut().zip(row) {
                let ax = x.mul(&a)?;
                *x = if y.is_zero() { ax } else { ax.sub(&y.mul(&b)?)? };
            }
            normalize(&mut v);
        }
        Ok(v)
    }

    /// Add `v` to the spanning set; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<T>) -> Result<bool> {
        let v = self.reduce(v)?;
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        // Clear the new pivot column from existing rows.
        for (_, row) in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let a = v[p].clone();
            let b = row[p].clone();
            let g = a.gcd(&b);
            let (a, b) = (a.div_exact(&g), b.div_exact(&g));
            for (x, y) in row.iter_mut().zip(&v) {
                let ax = x.mul(&a)?;
                *x = if y.is_zero() { ax } else { ax.sub(&y.mul(&b)?)? };
            }
            normalize(row);
        }
        let pos = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(pos, (p, v));
        Ok(true)
    }

    pub fn contains(&self, v: &[T]) -> Result<bool> {
        Ok(self.reduce(v.to_vec())?.iter().all(T::is_zero))
    }

    /// Coordinates of a vector of the subspace in the row basis.
    pub fn coordinates(&self, v: &[T]) -> Vec<Rat> {
        self.rows.iter().map(|(p, row)| Rat::new(v[*p].to_big(), row[*p].to_big())).collect()
    }

    /// Basis of the solutions `x` of `row·x = 0` for all rows.
    pub fn kernel(&self) -> Result<Vec<Vec<T>>> {
        let pivots: Vec<usize> = self.rows.iter().map(|(p, _)| *p).collect();
        let mut out = Vec::new();
        for f in (0..self.dim).filter(|c| !pivots.contains(c)) {
            // x_f = L, x_p = -L·row[f]/row[p] with L the lcm of pivots.
            let mut l = T::from_i64(1);
            for (p, row) in &self.rows {
                if !row[f].is_zero() {
                    let a = row[*p].clone();
                    let g = l.gcd(&a);
                    l = l.mul(&a.div_exact(&g))?;
                }
            }
            let mut x = vec![T::zero(); self.dim];
            x[f] = l.clone();
            for (p, row) in &self.rows {
                if !row[f].is_zero() {
                    x[*p] = l.mul(&row[f])?.div_exact(&row[*p]).neg();
                }
            }
            normalize(&mut x);
            out.push(x);
        }
        Ok(out)
    }
}

/// Rank of a list of integer vectors, machine path first.
pub fn rank_i64(rows: &[Vec<i64>]) -> usize {
    let dim = rows.first().map_or(0, Vec::len);
    let fast = (|| -> Result<usize> {
        let mut e = IntEchelon::<i128>::new(dim);
        for r in rows {
            e.insert(r.iter().map(|&x| x as i128).collect())?;
        }
        Ok(e.rank())
    })();
    fast.unwrap_or_else(|_| {
        let mut e = IntEchelon::<BigInt>::new(dim);
        for r in rows {
            e.insert(r.iter().map(|&x| BigInt::from(x)).collect()).expect("big integers do not overflow");
        }
        e.rank()
    })
}

/// Dense matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<Rat>>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![vec![Rat::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = Rat::one();
        }
        m
    }

    pub fn from_i64(data: &[Vec<i64>]) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        RatMatrix { rows, cols, data: data.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect() }
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k][j];
                    if !b.is_zero() {
                        out.data[i][j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &RatMatrix) -> RatMatrix {
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[i][j] += &other.data[i][j];
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|r| r.iter().map(|x| x * c).collect()).collect(),
        }
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut out = RatMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j][i] = self.data[i][j].clone();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.iter().all(Zero::is_zero))
    }

    pub fn trace(&self) -> Rat {
        (0..self.rows.min(self.cols)).map(|i| self.data[i][i].clone()).sum()
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.data.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..self.rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = m[r][c].recip();
            for x in m[r].iter_mut() {
                *x *= &inv;
            }
            let pivot_row = m[r].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i != r && !row[c].is_zero() {
                    let f = row[c].clone();
                    for (x, y) in row.iter_mut().zip(&pivot_row) {
                        if !y.is_zero() {
                            *x -= &f * y;
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        (RatMatrix { rows: self.rows, cols: self.cols, data: m }, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x | self·x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        let (m, pivots) = self.rref();
        let mut out = Vec::new();
        for f in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut x = vec![Rat::zero(); self.cols];
            x[f] = Rat::one();
            for (r, &p) in pivots.iter().enumerate() {
                x[p] = -m.data[r][f].clone();
            }
            out.push(x);
        }
        out
    }
}

/// Convert a rational vector to a primitive integer vector.
pub fn primitive_integer_vector(v: &[Rat]) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    let mut out: Vec<BigInt> = v.iter().map(|x| (x * Rat::from_integer(l.clone())).to_integer()).collect();
    normalize(&mut out);
    out
}

pub fn big_to_i128(v: &[BigInt]) -> Option<Vec<i128>> {
    v.iter().map(|x| x.to_i128()).collect()
}
