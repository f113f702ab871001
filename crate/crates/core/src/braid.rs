//! Braid words, closure combinatorics and Markov moves.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A word in the Artin generators of `B_n`; `+i` is `σ_i`, `-i` its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    word: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, word: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Parse("a braid needs at least one strand".into()));
        }
        for &g in &word {
            if g == 0 || g.unsigned_abs() as usize >= strands {
                return Err(Error::GeneratorOutOfRange { gen: g as i64, strands });
            }
        }
        Ok(BraidWord { strands, word })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn word(&self) -> &[i32] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Permutation of the closure: strand starting at position `p` ends at `perm[p]`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut pos: Vec<usize> = (0..self.strands).collect();
        for &g in &self.word {
            let k = g.unsigned_abs() as usize - 1;
            for p in pos.iter_mut() {
                if *p == k {
                    *p = k + 1;
                } else if *p == k + 1 {
                    *p = k;
                }
            }
        }
        pos
    }

    /// Signed crossing count.
    pub fn writhe(&self) -> i64 {
        self.word.iter().map(|&g| g.signum() as i64).sum()
    }

    /// `g^{-1} · b · g` for a generator letter `g`.
    pub fn conjugate(&self, g: i32) -> Result<Self> {
        let mut w = Vec::with_capacity(self.word.len() + 2);
        w.push(-g);
        w.extend_from_slice(&self.word);
        w.push(g);
        BraidWord::new(self.strands, w)
    }

    /// Adds a strand and appends `σ_n^{±1}`.
    pub fn stabilize(&self, positive: bool) -> Self {
        let n = self.strands as i32;
        let mut w = self.word.clone();
        w.push(if positive { n } else { -n });
        BraidWord { strands: self.strands + 1, word: w }
    }

    /// Cyclic rotation of the word (a conjugation).
    pub fn rotate(&self, k: usize) -> Self {
        let mut w = self.word.clone();
        if !w.is_empty() {
            let k = k % w.len();
            w.rotate_left(k);
        }
        BraidWord { strands: self.strands, word: w }
    }

    /// Mirror image: every crossing flipped.
    pub fn mirror(&self) -> Self {
        BraidWord { strands: self.strands, word: self.word.iter().map(|g| -g).collect() }
    }

    /// Braid whose closure is the connected sum of the two closures.
    pub fn connected_sum(&self, other: &BraidWord) -> Self {
        let shift = self.strands as i32 - 1;
        let mut w = self.word.clone();
        w.extend(other.word.iter().map(|&g| g.signum() * (g.abs() + shift)));
        BraidWord { strands: self.strands + other.strands - 1, word: w }
    }

    pub fn close(&self) -> LinkData {
        LinkData::from_braid(self)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.strands)?;
        for g in &self.word {
            write!(f, " {g}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_braid(s)
    }
}

/// Parses `Bn: 1 -2 1` or the compact `Bn: s1 s2' s1` form.
pub fn parse_braid(text: &str) -> Result<BraidWord> {
    let text = text.trim();
    let (head, body) = text
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("missing `Bn:` declaration in `{text}`")))?;
    let head = head.trim();
    let n: usize = head
        .strip_prefix('B')
        .or_else(|| head.strip_prefix('b'))
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| Error::Parse(format!("bad strand declaration `{head}`")))?;
    let body = body.replace([',', '(', ')'], " ");
    let mut word = Vec::new();
    for tok in body.split_whitespace() {
        word.push(parse_letter(tok)?);
    }
    BraidWord::new(n, word)
}

fn parse_letter(tok: &str) -> Result<i32> {
    let bad = || Error::Parse(format!("malformed token `{tok}`"));
    if let Some(rest) = tok.strip_prefix('s').or_else(|| tok.strip_prefix('σ')) {
        let (num, inv) = match rest.strip_suffix('\'') {
            Some(r) => (r, true),
            None => match rest.strip_suffix("^-1") {
                Some(r) => (r, true),
                None => (rest, false),
            },
        };
        let k: i32 = num.parse().map_err(|_| bad())?;
        if k <= 0 {
            return Err(bad());
        }
        return Ok(if inv { -k } else { k });
    }
    let k: i32 = tok.parse().map_err(|_| bad())?;
    if k == 0 {
        return Err(bad());
    }
    Ok(k)
}

/// Combinatorial data of a braid closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkData {
    /// Number of components.
    pub components: usize,
    /// Component of the strand at each bottom position; position 0 is component 0.
    pub strand_component: Vec<usize>,
    /// Colouring of the `2n` endpoints: points `1..n` left to right, then
    /// `n+1..2n` mirror-ordered (point `n+j` sits above strand `n+1-j`).
    pub colouring: Vec<usize>,
    /// Linking matrix, symmetric with zero diagonal.
    pub linking: Vec<Vec<i64>>,
    /// Signed self-crossing count per component.
    pub writhe: Vec<i64>,
    /// Framings, by default equal to the writhes.
    pub framing: Vec<i64>,
}

impl LinkData {
    pub fn from_braid(b: &BraidWord) -> Self {
        let n = b.strands();
        let perm = b.permutation();
        let mut comp = vec![usize::MAX; n];
        let mut c = 0;
        for i in 0..n {
            if comp[i] == usize::MAX {
                let mut j = i;
                while comp[j] == usize::MAX {
                    comp[j] = c;
                    j = perm[j];
                }
                c += 1;
            }
        }
        let l = c;
        let mut at: Vec<usize> = (0..n).collect();
        let mut writhe = vec![0i64; l];
        let mut twice_lk = vec![vec![0i64; l]; l];
        for &g in b.word() {
            let k = g.unsigned_abs() as usize - 1;
            let s = g.signum() as i64;
            let (a, bb) = (comp[at[k]], comp[at[k + 1]]);
            if a == bb {
                writhe[a] += s;
            } else {
                twice_lk[a][bb] += s;
                twice_lk[bb][a] += s;
            }
            at.swap(k, k + 1);
        }
        let linking = twice_lk.iter().map(|r| r.iter().map(|v| v / 2).collect()).collect();
        let mut colouring: Vec<usize> = comp.clone();
        colouring.extend((0..n).map(|j| comp[n - 1 - j]));
        LinkData {
            components: l,
            strand_component: comp,
            colouring,
            linking,
            framing: writhe.clone(),
            writhe,
        }
    }

    pub fn is_knot(&self) -> bool {
        self.components == 1
    }

    pub fn with_framing(mut self, framing: &[i64]) -> Result<Self> {
        if framing.len() != self.components {
            return Err(Error::InvalidArgument(format!(
                "{} framings given for {} components",
                framing.len(),
                self.components
            )));
        }
        self.framing = framing.to_vec();
        Ok(self)
    }

    /// `f_i - Σ_{j≠i} lk_{ij}`.
    pub fn framing_exponent(&self, i: usize) -> i64 {
        self.framing[i] - self.linking[i].iter().sum::<i64>()
    }
}
