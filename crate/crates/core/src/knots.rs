//! Braid representatives of the prime knots through seven crossings.

use crate::braid::BraidWord;

/// A named knot with a braid representative.
#[derive(Clone, Copy, Debug)]
pub struct KnotEntry {
    pub name: &'static str,
    pub strands: usize,
    pub word: &'static [i32],
}

impl KnotEntry {
    pub fn braid(&self) -> BraidWord {
        BraidWord::new(self.strands, self.word.to_vec()).expect("table braids are valid")
    }
}

pub const TABLE: &[KnotEntry] = &[
    KnotEntry { name: "0_1", strands: 1, word: &[] },
    KnotEntry { name: "3_1", strands: 2, word: &[1, 1, 1] },
    KnotEntry { name: "4_1", strands: 3, word: &[1, -2, 1, -2] },
    KnotEntry { name: "5_1", strands: 2, word: &[1, 1, 1, 1, 1] },
    KnotEntry { name: "5_2", strands: 3, word: &[1, 1, 1, 2, -1, 2] },
    KnotEntry { name: "6_1", strands: 4, word: &[1, 1, 2, -1, -3, 2, -3] },
    KnotEntry { name: "6_2", strands: 3, word: &[1, 1, 1, -2, 1, -2] },
    KnotEntry { name: "6_3", strands: 3, word: &[1, 1, -2, 1, -2, -2] },
    KnotEntry { name: "7_1", strands: 2, word: &[1, 1, 1, 1, 1, 1, 1] },
    KnotEntry { name: "7_2", strands: 4, word: &[1, 1, 1, 2, -1, 2, 3, -2, 3] },
    KnotEntry { name: "7_3", strands: 3, word: &[1, 1, 1, 1, 1, 2, -1, 2] },
    KnotEntry { name: "7_4", strands: 4, word: &[1, 1, 2, -1, 2, 2, 3, -2, 3] },
    KnotEntry { name: "7_5", strands: 3, word: &[1, 1, 1, 1, 2, -1, 2, 2] },
    KnotEntry { name: "7_6", strands: 4, word: &[1, 1, -2, 1, 3, -2, 3] },
    KnotEntry { name: "7_7", strands: 4, word: &[1, -2, 1, -2, 3, -2, 3] },
];

pub fn lookup(name: &str) -> Option<&'static KnotEntry> {
    TABLE.iter().find(|k| k.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_closes_to_a_knot() {
        for k in TABLE {
            assert!(k.braid().close().is_knot(), "{}", k.name);
        }
        assert_eq!(lookup("4_1").unwrap().word, &[1, -2, 1, -2]);
        assert!(lookup("9_42").is_none());
    }
}
