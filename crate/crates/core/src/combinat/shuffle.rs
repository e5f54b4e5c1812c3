use super::{ColorWord, ColoredPermutation, Permutation, Word};

fn shuffle_seq<T: Clone>(u: &[T], v: &[T]) -> Vec<Vec<T>> {
    let n = u.len() + v.len();
    let mut out = Vec::new();
    // Choose the positions taken by `u`.
    let mut pos: Vec<usize> = (0..u.len()).collect();
    loop {
        let mut word = Vec::with_capacity(n);
        let (mut a, mut b) = (0, 0);
        for k in 0..n {
            if a < u.len() && pos[a] == k {
                word.push(u[a].clone());
                a += 1;
            } else {
                word.push(v[b].clone());
                b += 1;
            }
        }
        out.push(word);
        // next combination of positions
        let m = u.len();
        let Some(i) = (0..m).rev().find(|&i| pos[i] < n - m + i) else {
            break;
        };
        pos[i] += 1;
        for j in i + 1..m {
            pos[j] = pos[j - 1] + 1;
        }
    }
    out
}

/// The shuffle product `u ⧢ v` as a sorted list with multiplicities.
pub fn shuffle(u: &Word, v: &Word) -> Vec<Word> {
    let mut out: Vec<Word> = shuffle_seq(u.letters(), v.letters())
        .into_iter()
        .map(|w| Word::new(w).expect("letters stay positive"))
        .collect();
    out.sort();
    out
}

/// `σ ⋒ τ`: shuffle of `σ` with `τ` shifted by `|σ|`, sorted.
pub fn shifted_shuffle(s: &Permutation, t: &Permutation) -> Vec<Permutation> {
    let mut out: Vec<Permutation> =
        shuffle_seq(s.as_slice(), &t.shifted(s.n())).into_iter().map(Permutation::from_vec_unchecked).collect();
    out.sort();
    out
}

/// `σ * τ = {π | Std(π_1…π_k) = σ, Std(π_{k+1}…π_n) = τ}`, sorted.
pub fn convolution(s: &Permutation, t: &Permutation) -> Vec<Permutation> {
    let mut out: Vec<Permutation> =
        shifted_shuffle(&s.inverse(), &t.inverse()).iter().map(Permutation::inverse).collect();
    out.sort();
    out
}

/// Shifted shuffle where each letter carries its color, sorted.
pub fn colored_shifted_shuffle(a: &ColoredPermutation, b: &ColoredPermutation) -> Vec<ColoredPermutation> {
    let u: Vec<(u8, u8)> = a.perm.as_slice().iter().copied().zip(a.colors.colors().iter().copied()).collect();
    let v: Vec<(u8, u8)> = b.perm.shifted(a.n()).into_iter().zip(b.colors.colors().iter().copied()).collect();
    let mut out: Vec<ColoredPermutation> = shuffle_seq(&u, &v)
        .into_iter()
        .map(|w| {
            let (p, c): (Vec<u8>, Vec<u8>) = w.into_iter().unzip();
            ColoredPermutation {
                perm: Permutation::from_vec_unchecked(p),
                colors: ColorWord::new(c).expect("colors are positive"),
            }
        })
        .collect();
    out.sort();
    out
}

/// Inverses of the colored shifted shuffle of the inverses, sorted.
pub fn colored_convolution(a: &ColoredPermutation, b: &ColoredPermutation) -> Vec<ColoredPermutation> {
    let mut out: Vec<ColoredPermutation> =
        colored_shifted_shuffle(&a.inverse(), &b.inverse()).iter().map(ColoredPermutation::inverse).collect();
    out.sort();
    out
}
