//! Words over the generators `a` (α), `b` (β), `e[k]` (ε^[k]) and `I`.
//!
//! Grammar, with optional whitespace between terms:
//!
//! ```text
//! word := term+
//! term := gen ('^' uint)?
//! gen  := 'a' | 'b' | 'I' | 'e[' uint ']'
//! ```
//!
//! Words are read left to right, which is also the order of composition.

use std::fmt;

use crate::error::{Error, Result};
use crate::nat::ElemIN;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    A,
    B,
    /// ε^[k], `k ≥ 2`.
    E(i64),
    I,
}

impl Generator {
    pub fn element(self) -> ElemIN {
        match self {
            Generator::A => ElemIN::alpha(),
            Generator::B => ElemIN::beta(),
            Generator::E(k) => ElemIN::eps(k).expect("word invariant: e[k] has k >= 2"),
            Generator::I => ElemIN::identity(),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::A => f.write_str("a"),
            Generator::B => f.write_str("b"),
            Generator::E(k) => write!(f, "e[{k}]"),
            Generator::I => f.write_str("I"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Token {
    pub gen: Generator,
    pub exp: u32,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word {
    tokens: Vec<Token>,
}

impl Word {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_tokens(tokens: Vec<Token>) -> Result<Self> {
        for t in &tokens {
            if t.exp == 0 {
                return Err(Error::Syntax { offset: 0, message: "exponent must be positive".into() });
            }
            if let Generator::E(k) = t.gen {
                if k < 2 {
                    return Err(Error::InvalidGenerator(k));
                }
            }
        }
        Ok(Word { tokens })
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Appends `gen^exp`, merging with the last token when the generator repeats.
    /// A zero exponent appends nothing.
    pub fn push(&mut self, gen: Generator, exp: u32) {
        if exp == 0 {
            return;
        }
        match self.tokens.last_mut() {
            Some(last) if last.gen == gen => last.exp += exp,
            _ => self.tokens.push(Token { gen, exp }),
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut tokens = self.tokens.clone();
        tokens.extend_from_slice(&other.tokens);
        Word { tokens }
    }

    /// The set of generators used.
    pub fn alphabet(&self) -> Vec<Generator> {
        let mut gens: Vec<_> = self.tokens.iter().map(|t| t.gen).collect();
        gens.sort_unstable();
        gens.dedup();
        gens
    }

    pub fn eval(&self) -> ElemIN {
        let mut acc = ElemIN::identity();
        for t in &self.tokens {
            let g = t.gen.element();
            for _ in 0..t.exp {
                acc = acc.compose(&g);
            }
        }
        acc
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tokens.is_empty() {
            return f.write_str("I");
        }
        for (i, t) in self.tokens.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", t.gen)?;
            if t.exp != 1 {
                write!(f, "^{}", t.exp)?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Lexer<'_> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { offset: self.pos, message: message.into() })
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected `{}`", c as char))
        }
    }

    fn uint(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a decimal number");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        digits.parse().or_else(|_| {
            self.pos = start;
            self.err("number too large")
        })
    }

    fn term(&mut self) -> Result<Token> {
        let start = self.pos;
        let gen = match self.peek() {
            Some(b'a') => {
                self.pos += 1;
                Generator::A
            }
            Some(b'b') => {
                self.pos += 1;
                Generator::B
            }
            Some(b'I') => {
                self.pos += 1;
                Generator::I
            }
            Some(b'e') => {
                self.pos += 1;
                self.expect(b'[')?;
                let index_at = self.pos;
                let k = self.uint()?;
                if k < 2 {
                    self.pos = index_at;
                    return self.err(format!("e[{k}] needs an index of at least 2"));
                }
                self.expect(b']')?;
                Generator::E(i64::try_from(k).or_else(|_| {
                    self.pos = index_at;
                    self.err("index too large")
                })?)
            }
            _ => return self.err("expected one of `a`, `b`, `I`, `e[`"),
        };
        let mut exp = 1;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let at = self.pos;
            let n = self.uint()?;
            exp = match u32::try_from(n) {
                Ok(0) | Err(_) => {
                    self.pos = at;
                    return self.err("exponent must be a positive 32-bit integer");
                }
                Ok(n) => n,
            };
        }
        debug_assert!(self.pos > start);
        Ok(Token { gen, exp })
    }
}

/// Parses a word. Tokens are kept exactly as written (no merging).
pub fn parse(text: &str) -> Result<Word> {
    let mut lx = Lexer { src: text.as_bytes(), pos: 0 };
    let mut tokens = Vec::new();
    lx.skip_ws();
    while lx.peek().is_some() {
        tokens.push(lx.term()?);
        lx.skip_ws();
    }
    if tokens.is_empty() {
        return lx.err("expected at least one term");
    }
    Ok(Word { tokens })
}

/// Writes `gamma` as `ε^[i_1] ⋯ ε^[i_p] β^i α^j`.
///
/// With `m` the least point of the domain and `r` its image, `i = m − 1`,
/// `j = r − 1` and the `i_t` are the exceptions above `m`, in increasing order.
pub fn decompose(gamma: &ElemIN) -> Word {
    let markers = gamma.markers();
    let (m, r) = (markers.nd_low, markers.nr_low);
    let mut word = Word::new();
    for k in gamma.exceptions().iter().filter(|&x| x > m) {
        word.push(Generator::E(k), 1);
    }
    word.push(Generator::B, (m - 1) as u32);
    word.push(Generator::A, (r - 1) as u32);
    word
}

/// Writes an element of gap at most `k` as a word over `a`, `b` and `e[k]` only.
///
/// The element is `β^(m−1) ε₀ α^(r−1)` where `ε₀ = α^(m−1) γ β^(r−1)` is an
/// idempotent with exceptions inside `2..=k`; each `ε^[l]` of `ε₀` with
/// `l < k` is spelled `a^(k−l) e[k] b^(k−l)`.
pub fn decompose_filtered(gamma: &ElemIN, k: i64) -> Result<Word> {
    if k < 2 {
        return Err(Error::InvalidGenerator(k));
    }
    let gap = gamma.gap();
    if gap > k {
        return Err(Error::NotInFiltration { gap, k });
    }
    let markers = gamma.markers();
    let (m, r) = ((markers.nd_low - 1) as u32, (markers.nr_low - 1) as u32);

    let power = |g: ElemIN, n: u32| (0..n).fold(ElemIN::identity(), |acc, _| acc.compose(&g));
    let eps0 = power(ElemIN::alpha(), m).compose(gamma).compose(&power(ElemIN::beta(), r));
    debug_assert!(eps0.is_idempotent());
    debug_assert!(eps0.exceptions().iter().all(|l| (2..=k).contains(&l)));

    let mut word = Word::new();
    word.push(Generator::B, m);
    for l in eps0.exceptions().iter() {
        let d = (k - l) as u32;
        word.push(Generator::A, d);
        word.push(Generator::E(k), 1);
        word.push(Generator::B, d);
    }
    word.push(Generator::A, r);
    Ok(word)
}
