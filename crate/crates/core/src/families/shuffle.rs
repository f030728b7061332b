use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    /// `x_{i+1}`, shown lowercase from `d`.
    X(u8),
    /// `y_{j+1}`, shown uppercase from `D`.
    Y(u8),
}

impl Letter {
    fn swap(self) -> Letter {
        match self {
            Letter::X(i) => Letter::Y(i),
            Letter::Y(j) => Letter::X(j),
        }
    }

    fn to_char(self) -> char {
        match self {
            Letter::X(i) => (b'd' + i) as char,
            Letter::Y(j) => (b'D' + j) as char,
        }
    }
}

/// A word of distinct letters whose `x`-letters and `y`-letters each appear in
/// alphabet order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShuffleWord {
    pub m: usize,
    pub n: usize,
    pub letters: Vec<Letter>,
}

impl ShuffleWord {
    pub fn new(m: usize, n: usize, letters: Vec<Letter>) -> Result<Self> {
        let w = Self { m, n, letters };
        let bad = |msg: &str| Err(Error::Parse(format!("{msg} in {w}")));
        if w.letters
            .iter()
            .any(|l| matches!(*l, Letter::X(i) if i as usize >= m))
            || w.letters
                .iter()
                .any(|l| matches!(*l, Letter::Y(j) if j as usize >= n))
        {
            return bad("letter outside the alphabet");
        }
        let xs: Vec<u8> = w.x_part();
        let ys: Vec<u8> = w.y_part();
        if xs.windows(2).any(|p| p[0] >= p[1]) || ys.windows(2).any(|p| p[0] >= p[1]) {
            return bad("letters out of order");
        }
        Ok(w)
    }

    /// Parses `dDe`-style words; `∅` is the empty word.
    pub fn parse(m: usize, n: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "∅" {
            return Self::new(m, n, Vec::new());
        }
        let letters = s
            .chars()
            .map(|c| match c {
                'a'..='z' if c >= 'd' => Ok(Letter::X(c as u8 - b'd')),
                'A'..='Z' if c >= 'D' => Ok(Letter::Y(c as u8 - b'D')),
                _ => Err(Error::Parse(format!("bad letter {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(m, n, letters)
    }

    /// The bottom element: the full `x` word.
    pub fn x_word(m: usize, n: usize) -> Self {
        Self {
            m,
            n,
            letters: (0..m as u8).map(Letter::X).collect(),
        }
    }

    /// The top element: the full `y` word.
    pub fn y_word(m: usize, n: usize) -> Self {
        Self {
            m,
            n,
            letters: (0..n as u8).map(Letter::Y).collect(),
        }
    }

    pub fn x_part(&self) -> Vec<u8> {
        self.letters
            .iter()
            .filter_map(|l| if let Letter::X(i) = l { Some(*i) } else { None })
            .collect()
    }

    pub fn y_part(&self) -> Vec<u8> {
        self.letters
            .iter()
            .filter_map(|l| if let Letter::Y(j) = l { Some(*j) } else { None })
            .collect()
    }

    pub fn contains(&self, l: Letter) -> bool {
        self.letters.contains(&l)
    }

    fn position(&self, l: Letter) -> Option<usize> {
        self.letters.iter().position(|&c| c == l)
    }

    /// Subword on the letters that also occur in `other`.
    pub fn restrict_to(&self, other: &ShuffleWord) -> Vec<Letter> {
        self.letters
            .iter()
            .copied()
            .filter(|&l| other.contains(l))
            .collect()
    }

    /// The same word read in `W_{n,m}` with the letter roles exchanged.
    pub fn swap_roles(&self) -> ShuffleWord {
        ShuffleWord {
            m: self.n,
            n: self.m,
            letters: self.letters.iter().map(|l| l.swap()).collect(),
        }
    }
}

impl fmt::Display for ShuffleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("∅");
        }
        self.letters
            .iter()
            .try_for_each(|l| write!(f, "{}", l.to_char()))
    }
}

/// `v <= w` iff `v_x ⊇ w_x`, `v_y ⊆ w_y`, and both words order their common
/// letters alike.
pub fn order_leq(v: &ShuffleWord, w: &ShuffleWord) -> bool {
    let x_ok = w
        .letters
        .iter()
        .all(|&l| !matches!(l, Letter::X(_)) || v.contains(l));
    let y_ok = v
        .letters
        .iter()
        .all(|&l| !matches!(l, Letter::Y(_)) || w.contains(l));
    x_ok && y_ok && v.restrict_to(w) == w.restrict_to(v)
}

/// `(m − |w_x|) + |w_y|`
pub fn rank(w: &ShuffleWord) -> usize {
    w.m - w.x_part().len() + w.y_part().len()
}

pub fn cover(v: &ShuffleWord, w: &ShuffleWord) -> bool {
    rank(w) == rank(v) + 1 && order_leq(v, w)
}

/// Words covering `v`: delete one `x`-letter, or insert one missing
/// `y`-letter at a position keeping the `y`-letters in order.
pub fn upper_covers(v: &ShuffleWord) -> Vec<ShuffleWord> {
    let mut out = Vec::new();
    for (p, l) in v.letters.iter().enumerate() {
        if let Letter::X(_) = l {
            let mut letters = v.letters.clone();
            letters.remove(p);
            out.push(ShuffleWord {
                m: v.m,
                n: v.n,
                letters,
            });
        }
    }
    for j in 0..v.n as u8 {
        let y = Letter::Y(j);
        if v.contains(y) {
            continue;
        }
        // between the last smaller y-letter and the first larger one
        let lo = v
            .letters
            .iter()
            .rposition(|&l| matches!(l, Letter::Y(k) if k < j))
            .map_or(0, |p| p + 1);
        let hi = v
            .letters
            .iter()
            .position(|&l| matches!(l, Letter::Y(k) if k > j))
            .unwrap_or(v.letters.len());
        for p in lo..=hi {
            let mut letters = v.letters.clone();
            letters.insert(p, y);
            out.push(ShuffleWord {
                m: v.m,
                n: v.n,
                letters,
            });
        }
    }
    out
}

/// Common `x`-letters of `u` and `v` that sit before some `y_i` in one word
/// and after some `y_j`, `i <= j`, in the other.
pub fn crossed_letters(u: &ShuffleWord, v: &ShuffleWord) -> Vec<Letter> {
    let crossed_one_way = |a: &ShuffleWord, b: &ShuffleWord, x: Letter| {
        let (pa, pb) = (a.position(x).unwrap(), b.position(x).unwrap());
        // smallest y after x in a, largest y before x in b
        let after_in_a = a.letters[pa + 1..].iter().filter_map(|l| match l {
            Letter::Y(i) => Some(*i),
            _ => None,
        });
        let before_in_b = b.letters[..pb].iter().filter_map(|l| match l {
            Letter::Y(j) => Some(*j),
            _ => None,
        });
        match (after_in_a.min(), before_in_b.max()) {
            (Some(i), Some(j)) => i <= j,
            _ => false,
        }
    };
    u.letters
        .iter()
        .copied()
        .filter(|&l| matches!(l, Letter::X(_)) && v.contains(l))
        .filter(|&x| crossed_one_way(u, v, x) || crossed_one_way(v, u, x))
        .collect()
}

/// Orders `letters` so that each of `u`, `v` agrees with the result on the
/// letters it contains. `None` when the constraints conflict.
fn arrange(letters: &[Letter], u: &ShuffleWord, v: &ShuffleWord) -> Option<Vec<Letter>> {
    let k = letters.len();
    let mut before = vec![vec![false; k]; k];
    for word in [u, v] {
        let pos: Vec<Option<usize>> = letters.iter().map(|&l| word.position(l)).collect();
        for a in 0..k {
            for b in 0..k {
                if let (Some(pa), Some(pb)) = (pos[a], pos[b]) {
                    if pa < pb {
                        before[a][b] = true;
                    }
                }
            }
        }
    }
    for a in 0..k {
        for b in 0..k {
            match (letters[a], letters[b]) {
                (Letter::X(i), Letter::X(j)) | (Letter::Y(i), Letter::Y(j)) if i < j => {
                    before[a][b] = true
                }
                _ => {}
            }
        }
    }
    let mut indeg: Vec<usize> = (0..k)
        .map(|b| (0..k).filter(|&a| before[a][b]).count())
        .collect();
    let mut out = Vec::with_capacity(k);
    let mut done = vec![false; k];
    for _ in 0..k {
        let next = (0..k).find(|&a| !done[a] && indeg[a] == 0)?;
        done[next] = true;
        out.push(letters[next]);
        for b in 0..k {
            if before[next][b] {
                indeg[b] -= 1;
            }
        }
    }
    Some(out)
}

/// The join: uncrossed common `x`-letters together with all `y`-letters of
/// either word, arranged compatibly with both.
pub fn shuffle_join(u: &ShuffleWord, v: &ShuffleWord) -> Result<ShuffleWord> {
    let crossed = crossed_letters(u, v);
    let mut letters: Vec<Letter> = u
        .letters
        .iter()
        .copied()
        .filter(|&l| matches!(l, Letter::X(_)) && v.contains(l) && !crossed.contains(&l))
        .collect();
    for w in [u, v] {
        for &l in &w.letters {
            if matches!(l, Letter::Y(_)) && !letters.contains(&l) {
                letters.push(l);
            }
        }
    }
    let letters = arrange(&letters, u, v)
        .ok_or_else(|| Error::ContractViolation(format!("no consistent join of {u} and {v}")))?;
    let w = ShuffleWord {
        m: u.m,
        n: u.n,
        letters,
    };
    if !order_leq(u, &w) || !order_leq(v, &w) {
        return Err(Error::ContractViolation(format!(
            "{w} is not above {u} and {v}"
        )));
    }
    Ok(w)
}

/// The meet, as the join in `W_{n,m}` with letter roles exchanged.
pub fn shuffle_meet(u: &ShuffleWord, v: &ShuffleWord) -> Result<ShuffleWord> {
    Ok(shuffle_join(&u.swap_roles(), &v.swap_roles())?.swap_roles())
}

/// Every element of `W_{m,n}`.
pub fn all_words(m: usize, n: usize) -> Vec<ShuffleWord> {
    fn interleave(a: &[Letter], b: &[Letter], cur: &mut Vec<Letter>, out: &mut Vec<Vec<Letter>>) {
        if a.is_empty() && b.is_empty() {
            out.push(cur.clone());
            return;
        }
        if let Some((&h, rest)) = a.split_first() {
            cur.push(h);
            interleave(rest, b, cur, out);
            cur.pop();
        }
        if let Some((&h, rest)) = b.split_first() {
            cur.push(h);
            interleave(a, rest, cur, out);
            cur.pop();
        }
    }
    let mut words = Vec::new();
    for xm in 0u32..1 << m {
        let xs: Vec<Letter> = (0..m as u8)
            .filter(|i| xm >> i & 1 == 1)
            .map(Letter::X)
            .collect();
        for ym in 0u32..1 << n {
            let ys: Vec<Letter> = (0..n as u8)
                .filter(|j| ym >> j & 1 == 1)
                .map(Letter::Y)
                .collect();
            let mut out = Vec::new();
            interleave(&xs, &ys, &mut Vec::new(), &mut out);
            words.extend(out.into_iter().map(|letters| ShuffleWord { m, n, letters }));
        }
    }
    words
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(m: usize, n: usize, s: &str) -> ShuffleWord {
        ShuffleWord::parse(m, n, s).unwrap()
    }

    #[test]
    fn crossed_and_join_example() {
        let (u, v) = (w(3, 3, "dDEe"), w(3, 3, "Fdef"));
        assert_eq!(crossed_letters(&u, &v), vec![Letter::X(0)]);
        let j = shuffle_join(&u, &v).unwrap();
        assert_eq!(j.to_string(), "DEFe");
        assert_eq!((rank(&u), rank(&v), rank(&j)), (3, 1, 5));
    }

    #[test]
    fn rank_formula() {
        assert_eq!(rank(&w(2, 1, "dDe")), 1);
        assert_eq!(rank(&w(2, 1, "de")), 0);
        assert_eq!(rank(&w(2, 1, "D")), 3);
        assert_eq!(rank(&w(2, 1, "∅")), 2);
    }

    #[test]
    fn order_and_covers() {
        let (a, b) = (w(2, 1, "de"), w(2, 1, "dDe"));
        assert!(cover(&a, &b));
        assert!(order_leq(&w(2, 1, "dDe"), &w(2, 1, "De")));
        assert!(!order_leq(&w(2, 1, "dDe"), &w(2, 1, "eD")));
        for v in all_words(2, 2) {
            for u in upper_covers(&v) {
                assert!(cover(&v, &u), "{v} {u}");
            }
        }
    }

    #[test]
    fn counts() {
        assert_eq!(all_words(2, 1).len(), 12);
        assert_eq!(all_words(0, 3).len(), 8);
        assert_eq!(all_words(3, 0).len(), 8);
    }

    #[test]
    fn parse_rejects_disorder() {
        assert!(ShuffleWord::parse(2, 1, "ed").is_err());
        assert!(ShuffleWord::parse(2, 1, "dE").is_err());
    }
}
