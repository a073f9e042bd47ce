//! Colored strings, instances and solution pairs.
//!
//! A [`ColoredString`] is a sequence of [`Block`]s, each carrying a critical
//! character and a color. All positions exposed by this crate are 1-based.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use crate::error::ModelError;

fn valid_ident(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

macro_rules! ident_newtype {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name(String);

        impl $name {
            /// Builds an identifier; it must be non-empty and match `[A-Za-z0-9_]+`.
            pub fn new(id: impl Into<String>) -> Result<Self, ModelError> {
                let id = id.into();
                if valid_ident(&id) {
                    Ok(Self(id))
                } else {
                    Err(ModelError::BadIdentifier(id))
                }
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }
    };
}

ident_newtype!(
    /// Block similarity class.
    Color
);
ident_newtype!(
    /// Abstracted critical-instruction sequence carried by a block.
    CriticalChar
);

/// One position of a colored string.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    pub ch: CriticalChar,
    pub color: Color,
}

impl Block {
    pub fn new(ch: CriticalChar, color: Color) -> Self {
        Self { ch, color }
    }

    /// Convenience constructor from raw identifiers.
    pub fn parse(ch: &str, color: &str) -> Result<Self, ModelError> {
        Ok(Self::new(CriticalChar::new(ch)?, Color::new(color)?))
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.ch, self.color)
    }
}

/// A string with colored indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ColoredString {
    blocks: Vec<Block>,
}

impl ColoredString {
    pub fn new(blocks: Vec<Block>) -> Self {
        Self { blocks }
    }

    /// Parses whitespace-separated `char/color` tokens, e.g. `"a1/1 a2/2"`.
    pub fn from_tokens(text: &str) -> Result<Self, ModelError> {
        text.split_whitespace()
            .map(|tok| {
                let (ch, color) = tok
                    .split_once('/')
                    .ok_or_else(|| ModelError::BadToken(tok.to_string()))?;
                if color.contains('/') {
                    return Err(ModelError::BadToken(tok.to_string()));
                }
                Block::parse(ch, color)
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Self::new)
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Block at 1-based position `pos`.
    pub fn at(&self, pos: usize) -> Option<&Block> {
        pos.checked_sub(1).and_then(|i| self.blocks.get(i))
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Block> {
        self.blocks.iter()
    }

    pub fn push(&mut self, block: Block) {
        self.blocks.push(block);
    }

    /// True iff every color and every character occurs at most once.
    pub fn is_permutation_string(&self) -> bool {
        let mut colors = HashSet::with_capacity(self.len());
        let mut chars = HashSet::with_capacity(self.len());
        self.blocks
            .iter()
            .all(|b| colors.insert(&b.color) && chars.insert(&b.ch))
    }

    /// The subsequence selected by the strictly increasing 1-based `idx`.
    pub fn subsequence_at(&self, idx: &[usize]) -> Result<ColoredString, ModelError> {
        check_indices(idx, self.len())?;
        Ok(ColoredString::new(
            idx.iter().map(|&p| self.blocks[p - 1].clone()).collect(),
        ))
    }

    /// Multiset of characters at the given 1-based positions.
    pub fn char_multiset(&self, idx: &[usize]) -> Result<Multiset, ModelError> {
        check_indices(idx, self.len())?;
        Ok(idx.iter().map(|&p| self.blocks[p - 1].ch.clone()).collect())
    }

    pub fn colors(&self) -> impl Iterator<Item = &Color> {
        self.blocks.iter().map(|b| &b.color)
    }

    pub fn chars(&self) -> impl Iterator<Item = &CriticalChar> {
        self.blocks.iter().map(|b| &b.ch)
    }
}

impl fmt::Display for ColoredString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl FromIterator<Block> for ColoredString {
    fn from_iter<T: IntoIterator<Item = Block>>(iter: T) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a ColoredString {
    type Item = &'a Block;
    type IntoIter = std::slice::Iter<'a, Block>;

    fn into_iter(self) -> Self::IntoIter {
        self.blocks.iter()
    }
}

pub(crate) fn check_indices(idx: &[usize], len: usize) -> Result<(), ModelError> {
    if idx.windows(2).any(|w| w[0] >= w[1]) {
        return Err(ModelError::NonIncreasing);
    }
    if let Some(&bad) = idx.iter().find(|&&p| p == 0 || p > len) {
        return Err(ModelError::OutOfRange { index: bad, len });
    }
    Ok(())
}

/// Multiset of critical characters; every stored count is positive.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Multiset {
    counts: BTreeMap<CriticalChar, usize>,
}

impl Multiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, ch: CriticalChar) {
        *self.counts.entry(ch).or_insert(0) += 1;
    }

    pub fn count(&self, ch: &CriticalChar) -> usize {
        self.counts.get(ch).copied().unwrap_or(0)
    }

    /// Number of elements including multiplicity.
    pub fn len(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CriticalChar, usize)> {
        self.counts.iter().map(|(c, &n)| (c, n))
    }
}

impl FromIterator<CriticalChar> for Multiset {
    fn from_iter<T: IntoIterator<Item = CriticalChar>>(iter: T) -> Self {
        let mut m = Multiset::new();
        for c in iter {
            m.insert(c);
        }
        m
    }
}

/// Problem variant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    General,
    Omdci,
    OmdciPlus,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::General => "general",
            Variant::Omdci => "omdci",
            Variant::OmdciPlus => "omdci+",
        }
    }

    pub fn requires_permutation(self) -> bool {
        !matches!(self, Variant::General)
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Variant {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "general" => Ok(Variant::General),
            "omdci" => Ok(Variant::Omdci),
            "omdci+" | "omdci_plus" => Ok(Variant::OmdciPlus),
            other => Err(ModelError::BadVariant(other.to_string())),
        }
    }
}

/// A pattern `m` and a program `a`, tagged with the problem variant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    variant: Variant,
    m: ColoredString,
    a: ColoredString,
}

impl Instance {
    /// Fails when the variant needs a permutation pattern and `m` is not one.
    pub fn new(variant: Variant, m: ColoredString, a: ColoredString) -> Result<Self, ModelError> {
        if variant.requires_permutation() && !m.is_permutation_string() {
            return Err(ModelError::NotPermutation);
        }
        Ok(Self { variant, m, a })
    }

    pub fn general(m: ColoredString, a: ColoredString) -> Self {
        Self {
            variant: Variant::General,
            m,
            a,
        }
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn m(&self) -> &ColoredString {
        &self.m
    }

    pub fn a(&self) -> &ColoredString {
        &self.a
    }

    /// Same strings under another variant tag.
    pub fn with_variant(&self, variant: Variant) -> Result<Self, ModelError> {
        Self::new(variant, self.m.clone(), self.a.clone())
    }

    pub fn into_parts(self) -> (Variant, ColoredString, ColoredString) {
        (self.variant, self.m, self.a)
    }
}

/// Two index sequences (1-based) into `M` and `A`.
///
/// The fields are public so that malformed candidates can be handed to the
/// verifiers; nothing here enforces monotonicity or equal lengths.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SolutionPair {
    pub idx_m: Vec<usize>,
    pub idx_a: Vec<usize>,
}

impl SolutionPair {
    pub fn new(idx_m: Vec<usize>, idx_a: Vec<usize>) -> Self {
        Self { idx_m, idx_a }
    }

    pub fn k(&self) -> usize {
        self.idx_m.len()
    }
}
