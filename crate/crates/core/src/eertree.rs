//! Palindromic tree (eertree) with exact undo.
//!
//! Node 0 is the imaginary root of length -1, node 1 the empty palindrome.
//! Every other node is a distinct nonempty palindromic factor of the text.
//! A push adds at most one node and one edge, so an undo record only needs
//! the previous longest-suffix node and whether a node was created.

use crate::word::Symbol;
use crate::{Error, Result, Word};

const NONE: u32 = u32::MAX;
const IMAGINARY: u32 = 0;
const EMPTY: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
struct Node {
    len: i32,
    link: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Undo {
    prev_suffix: u32,
    /// Parent of the created node; `NONE` when the push created nothing.
    parent: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eertree {
    alphabet: usize,
    nodes: Vec<Node>,
    /// Flat `nodes.len() × alphabet` transition table.
    next: Vec<u32>,
    text: Vec<Symbol>,
    suffix: u32,
    history: Vec<Undo>,
}

impl Eertree {
    pub fn new(alphabet: u32) -> Result<Self> {
        if alphabet == 0 || alphabet > crate::word::MAX_ALPHABET {
            return Err(Error::AlphabetSize {
                got: alphabet,
                max: crate::word::MAX_ALPHABET,
            });
        }
        let alphabet = alphabet as usize;
        Ok(Self {
            alphabet,
            nodes: vec![
                Node {
                    len: -1,
                    link: IMAGINARY,
                },
                Node {
                    len: 0,
                    link: IMAGINARY,
                },
            ],
            next: vec![NONE; 2 * alphabet],
            text: Vec::new(),
            suffix: EMPTY,
            history: Vec::new(),
        })
    }

    /// Builds the tree of a whole word.
    pub fn from_word(w: &Word) -> Self {
        let mut t = Self::new(w.alphabet_size()).expect("word alphabets are valid");
        for &a in w.symbols() {
            t.push_unchecked(a);
        }
        t
    }

    pub fn alphabet_size(&self) -> u32 {
        self.alphabet as u32
    }

    pub fn text(&self) -> &[Symbol] {
        &self.text
    }

    pub fn len(&self) -> usize {
        self.text.len()
    }

    pub fn is_empty(&self) -> bool {
        self.text.is_empty()
    }

    /// Number of distinct nonempty palindromic factors of the text.
    pub fn distinct_palindromes(&self) -> usize {
        self.nodes.len() - 2
    }

    /// Length of the longest palindromic suffix of the text.
    pub fn longest_suffix_palindrome(&self) -> usize {
        self.nodes[self.suffix as usize].len as usize
    }

    /// Appends `a`; returns true iff the new longest palindromic suffix was
    /// not a factor before.
    pub fn push(&mut self, a: Symbol) -> Result<bool> {
        if usize::from(a) >= self.alphabet {
            return Err(Error::SymbolOutOfRange {
                symbol: a.into(),
                position: self.text.len(),
                alphabet: self.alphabet as u32,
            });
        }
        Ok(self.push_unchecked(a))
    }

    #[inline]
    fn extendable(&self, node: u32, pos: usize, a: Symbol) -> bool {
        // node 0 (len -1) always matches: start == pos holds the new symbol
        let start = pos as i64 - self.nodes[node as usize].len as i64 - 1;
        start >= 0 && self.text[start as usize] == a
    }

    #[inline]
    fn find_extendable(&self, mut node: u32, pos: usize, a: Symbol) -> u32 {
        while !self.extendable(node, pos, a) {
            node = self.nodes[node as usize].link;
        }
        node
    }

    pub(crate) fn push_unchecked(&mut self, a: Symbol) -> bool {
        let pos = self.text.len();
        self.text.push(a);
        let parent = self.find_extendable(self.suffix, pos, a);
        let slot = parent as usize * self.alphabet + a as usize;
        let prev_suffix = self.suffix;
        if self.next[slot] != NONE {
            self.suffix = self.next[slot];
            self.history.push(Undo {
                prev_suffix,
                parent: NONE,
            });
            return false;
        }
        let len = self.nodes[parent as usize].len + 2;
        let link = if len == 1 {
            EMPTY
        } else {
            let q = self.find_extendable(self.nodes[parent as usize].link, pos, a);
            self.next[q as usize * self.alphabet + a as usize]
        };
        let id = self.nodes.len() as u32;
        self.nodes.push(Node { len, link });
        self.next.extend(std::iter::repeat_n(NONE, self.alphabet));
        self.next[slot] = id;
        self.suffix = id;
        self.history.push(Undo { prev_suffix, parent });
        true
    }

    /// Undoes the most recent push.
    pub fn pop(&mut self) -> Result<()> {
        let undo = self.history.pop().ok_or(Error::EmptyHistory)?;
        let a = self.text.pop().expect("history and text stay in step");
        if undo.parent != NONE {
            self.nodes.pop();
            let new_len = self.next.len() - self.alphabet;
            self.next.truncate(new_len);
            self.next[undo.parent as usize * self.alphabet + a as usize] = NONE;
        }
        self.suffix = undo.prev_suffix;
        Ok(())
    }

    /// Checks the structural invariants; used by tests.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        for (i, node) in self.nodes.iter().enumerate().skip(2) {
            let link = &self.nodes[node.link as usize];
            if link.len >= node.len {
                return Err(format!("node {i} links to a longer node"));
            }
        }
        if self.history.len() != self.text.len() {
            return Err("history out of step with text".into());
        }
        Ok(())
    }
}
