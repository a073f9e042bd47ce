use std::collections::HashMap;

use crate::model::{Color, ColoredString, CriticalChar, Instance};

/// Integer-interned copy of an instance; ids are dense from 0.
pub(crate) struct Encoded {
    pub m_col: Vec<u32>,
    pub m_chr: Vec<u32>,
    pub a_col: Vec<u32>,
    pub a_chr: Vec<u32>,
    pub n_colors: usize,
    pub n_chars: usize,
    pub char_names: Vec<CriticalChar>,
}

#[derive(Default)]
struct Interner<'a> {
    colors: HashMap<&'a Color, u32>,
    chars: HashMap<&'a CriticalChar, u32>,
    char_names: Vec<CriticalChar>,
}

impl<'a> Interner<'a> {
    fn encode(&mut self, s: &'a ColoredString) -> (Vec<u32>, Vec<u32>) {
        s.iter()
            .map(|b| {
                let next = self.colors.len() as u32;
                let col = *self.colors.entry(&b.color).or_insert(next);
                let next = self.chars.len() as u32;
                let chr = *self.chars.entry(&b.ch).or_insert_with(|| {
                    self.char_names.push(b.ch.clone());
                    next
                });
                (col, chr)
            })
            .unzip()
    }
}

impl Encoded {
    pub fn new(inst: &Instance) -> Self {
        let mut it = Interner::default();
        let (m_col, m_chr) = it.encode(inst.m());
        let (a_col, a_chr) = it.encode(inst.a());
        Self {
            m_col,
            m_chr,
            a_col,
            a_chr,
            n_colors: it.colors.len(),
            n_chars: it.chars.len(),
            char_names: it.char_names,
        }
    }
}
