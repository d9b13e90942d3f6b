//! Reduced words in the free product of two cyclic groups `<a | a^n1> * <b | b^n2>`.

use std::fmt;

use crate::error::{Error, Result};
use crate::projective::Isometry;
use crate::triangle::TriangleGroup;

/// A power `gen^exp` of one generator, `gen` in {1, 2}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    pub gen: u8,
    pub exp: u32,
}

/// A reduced word: alternating generators, exponents in `1..n`.
/// The empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    syllables: Vec<Syllable>,
}

impl Word {
    pub fn identity() -> Self {
        Self::default()
    }

    /// Builds a word from syllables, checking that it is reduced for the
    /// given generator orders.
    pub fn new(syllables: Vec<Syllable>, orders: [u32; 2]) -> Result<Self> {
        for (i, s) in syllables.iter().enumerate() {
            if !(s.gen == 1 || s.gen == 2) {
                return Err(Error::BadParameter(format!("generator {} is not 1 or 2", s.gen)));
            }
            let order = orders[usize::from(s.gen - 1)];
            if s.exp == 0 || s.exp >= order {
                return Err(Error::BadWord { generator: s.gen, exp: s.exp, order });
            }
            if i > 0 && syllables[i - 1].gen == s.gen {
                return Err(Error::BadParameter("adjacent syllables share a generator".into()));
            }
        }
        Ok(Self { syllables })
    }

    /// Parses a letter string such as `"112"` (or `"Id"` for the identity).
    pub fn parse(letters: &str, orders: [u32; 2]) -> Result<Self> {
        if letters == "Id" {
            return Ok(Self::identity());
        }
        let mut syllables: Vec<Syllable> = Vec::new();
        for ch in letters.chars() {
            let gen = match ch {
                '1' => 1,
                '2' => 2,
                other => return Err(Error::BadParameter(format!("unexpected letter {other:?}"))),
            };
            match syllables.last_mut() {
                Some(s) if s.gen == gen => s.exp += 1,
                _ => syllables.push(Syllable { gen, exp: 1 }),
            }
        }
        Self::new(syllables, orders)
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of letters, counting each syllable's exponent.
    pub fn letter_len(&self) -> u32 {
        self.syllables.iter().map(|s| s.exp).sum()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("Id");
        }
        for s in &self.syllables {
            for _ in 0..s.exp {
                write!(f, "{}", s.gen)?;
            }
        }
        Ok(())
    }
}

/// All reduced words of letter length `<= max_len`, identity first and
/// lengths nondecreasing. Each word is produced exactly once.
pub fn enumerate_words(max_len: u32, n1: u32, n2: u32) -> impl Iterator<Item = Word> {
    (0..=max_len).flat_map(move |len| {
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        words_of_len(len, [n1, n2], 0, &mut prefix, &mut out);
        out
    })
}

fn words_of_len(remaining: u32, orders: [u32; 2], last: u8, prefix: &mut Vec<Syllable>, out: &mut Vec<Word>) {
    if remaining == 0 {
        out.push(Word { syllables: prefix.clone() });
        return;
    }
    for gen in [1u8, 2] {
        if gen == last {
            continue;
        }
        let max_exp = (orders[usize::from(gen - 1)] - 1).min(remaining);
        for exp in 1..=max_exp {
            prefix.push(Syllable { gen, exp });
            words_of_len(remaining - exp, orders, gen, prefix, out);
            prefix.pop();
        }
    }
}

/// Matrix of a word: the product of generator powers, left to right.
/// Accumulated in double-double so that long words stay accurate to the
/// last bits of their (large) entries.
pub fn evaluate_word_matrix(w: &Word, g: &TriangleGroup) -> Result<Isometry> {
    let mut factors: Vec<&Isometry> = Vec::new();
    for s in w.syllables() {
        let order = g.order(s.gen);
        if s.exp == 0 || s.exp >= order {
            return Err(Error::BadWord { generator: s.gen, exp: s.exp, order });
        }
        factors.extend(std::iter::repeat_n(g.gen(s.gen), s.exp as usize));
    }
    Ok(crate::precise::product(factors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    /// Reduces an arbitrary letter string by collapsing runs modulo the
    /// generator orders until nothing changes.
    fn reduce(letters: &[u8], orders: [u32; 2]) -> Vec<(u8, u32)> {
        let mut runs: Vec<(u8, u32)> = Vec::new();
        for &l in letters {
            runs.push((l, 1));
        }
        loop {
            let mut merged: Vec<(u8, u32)> = Vec::new();
            for (g, e) in runs.iter().copied() {
                match merged.last_mut() {
                    Some((lg, le)) if *lg == g => *le += e,
                    _ => merged.push((g, e)),
                }
            }
            let reduced: Vec<(u8, u32)> =
                merged.into_iter().map(|(g, e)| (g, e % orders[usize::from(g - 1)])).filter(|&(_, e)| e != 0).collect();
            if reduced == runs {
                return reduced;
            }
            runs = reduced;
        }
    }

    fn naive(max_len: u32, orders: [u32; 2]) -> BTreeSet<String> {
        let mut set = BTreeSet::new();
        for len in 0..=max_len {
            for bits in 0..(1u64 << len) {
                let letters: Vec<u8> = (0..len).map(|i| if bits >> i & 1 == 0 { 1 } else { 2 }).collect();
                let red = reduce(&letters, orders);
                if red.iter().map(|r| r.1).sum::<u32>() <= max_len {
                    let s: String =
                        red.iter().flat_map(|&(g, e)| std::iter::repeat_n(char::from(b'0' + g), e as usize)).collect();
                    set.insert(if s.is_empty() { "Id".to_string() } else { s });
                }
            }
        }
        set
    }

    #[test]
    fn small_enumerations() {
        let w0: Vec<String> = enumerate_words(0, 3, 3).map(|w| w.to_string()).collect();
        assert_eq!(w0, ["Id"]);
        let w1: Vec<String> = enumerate_words(1, 3, 3).map(|w| w.to_string()).collect();
        assert_eq!(w1, ["Id", "1", "2"]);
    }

    #[test]
    fn enumeration_matches_naive_reduction() {
        for orders in [[3, 3], [2, 3], [4, 2], [5, 5]] {
            for max_len in 0..=6 {
                let words: Vec<Word> = enumerate_words(max_len, orders[0], orders[1]).collect();
                let listed: Vec<String> = words.iter().map(|w| w.to_string()).collect();
                let distinct: BTreeSet<String> = listed.iter().cloned().collect();
                assert_eq!(distinct.len(), listed.len(), "duplicates for {orders:?} {max_len}");
                assert_eq!(distinct, naive(max_len, orders), "{orders:?} {max_len}");
                assert!(words.windows(2).all(|p| p[0].letter_len() <= p[1].letter_len()));
                assert!(words[0].is_identity());
            }
        }
        assert_eq!(enumerate_words(6, 3, 3).count(), 65);
    }

    #[test]
    fn parse_and_validate() {
        let w = Word::parse("1122", [3, 3]).unwrap();
        assert_eq!(w.syllables(), &[Syllable { gen: 1, exp: 2 }, Syllable { gen: 2, exp: 2 }]);
        assert_eq!(w.letter_len(), 4);
        assert_eq!(w.to_string(), "1122");
        assert!(Word::parse("Id", [3, 3]).unwrap().is_identity());
        assert_eq!(Word::parse("111", [3, 3]), Err(Error::BadWord { generator: 1, exp: 3, order: 3 }));
        assert!(Word::parse("13", [3, 3]).is_err());
        let bad = Word::new(vec![Syllable { gen: 1, exp: 1 }, Syllable { gen: 1, exp: 1 }], [3, 3]);
        assert!(matches!(bad, Err(Error::BadParameter(_))));
    }
}
