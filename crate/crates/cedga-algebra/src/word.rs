use std::cmp::Ordering;

use smallvec::SmallVec;

use crate::{GenId, IdemId};

/// A composable word of generators, or a bare idempotent when empty.
///
/// Letters are stored in printed order; the last letter acts first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Word {
    letters: SmallVec<[GenId; 6]>,
    src: IdemId,
    tgt: IdemId,
}

impl Word {
    pub fn idempotent(e: IdemId) -> Word {
        Word { letters: SmallVec::new(), src: e, tgt: e }
    }

    /// A single letter with the given ends.
    pub fn letter(g: GenId, src: IdemId, tgt: IdemId) -> Word {
        let mut letters = SmallVec::new();
        letters.push(g);
        Word { letters, src, tgt }
    }

    /// Builds a word without checking composability; validation reports
    /// mismatches later. Prefer `Presentation::word`.
    pub fn from_raw(letters: &[GenId], src: IdemId, tgt: IdemId) -> Word {
        Word { letters: SmallVec::from_slice(letters), src, tgt }
    }

    pub fn letters(&self) -> &[GenId] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_idempotent(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn source(&self) -> IdemId {
        self.src
    }

    pub fn target(&self) -> IdemId {
        self.tgt
    }

    /// `self · other`, or `None` when `source(self) != target(other)`.
    pub fn concat(&self, other: &Word) -> Option<Word> {
        if self.src != other.tgt {
            return None;
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Some(Word { letters, src: other.src, tgt: self.tgt })
    }

    /// Replace the letter at `k` by `w`, whose ends must match that letter.
    pub(crate) fn splice(&self, k: usize, w: &Word) -> Word {
        let mut letters: SmallVec<[GenId; 6]> = SmallVec::with_capacity(self.letters.len() + w.len());
        letters.extend_from_slice(&self.letters[..k]);
        letters.extend_from_slice(&w.letters);
        letters.extend_from_slice(&self.letters[k + 1..]);
        if letters.is_empty() {
            return Word::idempotent(w.src);
        }
        Word { letters, src: self.src, tgt: self.tgt }
    }

    /// Subword `letters[i..j]` with the given ends.
    pub fn slice(&self, i: usize, j: usize, src: IdemId, tgt: IdemId) -> Word {
        Word { letters: SmallVec::from_slice(&self.letters[i..j]), src, tgt }
    }

    /// Position of the first occurrence of `needle` as a contiguous subword.
    pub fn find(&self, needle: &Word) -> Option<usize> {
        if needle.is_idempotent() || needle.len() > self.len() {
            return None;
        }
        self.letters.windows(needle.len()).position(|w| w == needle.letters.as_slice())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
            .then_with(|| self.src.cmp(&other.src))
            .then_with(|| self.tgt.cmp(&other.tgt))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
