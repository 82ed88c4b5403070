//! Line-oriented text form of morphism terms.
//!
//! ```text
//! file     := line*
//! line     := header | slice | blank        ("#" starts a comment)
//! header   := "dom" object | "cod" object   (before the first slice)
//! object   := "∅" | interval*
//! interval := "[" item* "]"
//! item     := "+" | "-" | "(" item* ")"
//! slice    := "." | cell+                   (whitespace separated)
//! cell     := interval                      identity on that interval
//!           | "X" s "(" l "|" l ")"         real crossing, s in {+,-}
//!           | "X" s "[" l l "]"             real crossing inside one interval
//!           | "V(" item* "|" item* ")"      virtual crossing of two intervals
//!           | "U(" l "|" l ")" | "U[" l l "]"    cup
//!           | "C(" l "|" l ")" | "C[" l l "]"    cap
//!           | "S(" item* "|" item* ")"      split [w w'] -> [w][w']
//!           | "M(" item* "|" item* ")"      merge [w][w'] -> [w w']
//!           | "unit" | "counit"
//!           | "A>(" w "|" w "|" w ")"       [(w1 w2) w3] -> [w1 (w2 w3)]
//!           | "A<(" w "|" w "|" w ")"       the inverse
//! ```
//!
//! Items inside an interval are multiplied left to right, so `[+-+]` is
//! `((+-)+)` and `[+(-+)]` is `(+(-+))`. One slice per line, top to bottom.

use crate::error::{Error, Result};
use crate::terms::{AssocDir, CrossSign, Generator, Layout, Letter, MorphismTerm, PWord, SeqObject, Slice};

struct Cursor<'a> {
    chars: &'a [char],
    pos: usize,
    line: usize,
    col0: usize,
}

impl<'a> Cursor<'a> {
    fn new(chars: &'a [char], line: usize, col0: usize) -> Self {
        Cursor { chars, pos: 0, line, col0 }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Syntax { line: self.line, column: self.col0 + self.pos + 1, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            match self.peek() {
                Some(got) => Err(self.err(format!("expected '{c}', found '{got}'"))),
                None => Err(self.err(format!("expected '{c}', found end of input"))),
            }
        }
    }

    fn eat_keyword(&mut self, kw: &str) -> bool {
        let k: Vec<char> = kw.chars().collect();
        if self.chars[self.pos..].starts_with(&k) {
            self.pos += k.len();
            true
        } else {
            false
        }
    }

    fn letter(&mut self) -> Result<Letter> {
        self.skip_ws();
        match self.peek().and_then(Letter::from_char) {
            Some(l) => {
                self.pos += 1;
                Ok(l)
            }
            None => Err(self.err("expected '+' or '-'")),
        }
    }

    fn sign(&mut self) -> Result<CrossSign> {
        Ok(match self.letter()? {
            Letter::Plus => CrossSign::Pos,
            Letter::Minus => CrossSign::Neg,
        })
    }

    /// item* up to (not including) one of `stops`.
    fn items(&mut self, stops: &[char]) -> Result<PWord> {
        let mut acc = PWord::Empty;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if stops.contains(&c) => return Ok(acc),
                Some('(') => {
                    self.pos += 1;
                    let inner = self.items(&[')'])?;
                    self.expect(')')?;
                    acc = PWord::product(acc, inner);
                }
                Some(c) => match Letter::from_char(c) {
                    Some(l) => {
                        self.pos += 1;
                        acc = PWord::product(acc, PWord::Leaf(l));
                    }
                    None => return Err(self.err(format!("unexpected '{c}' in word"))),
                },
                None if stops.is_empty() => return Ok(acc),
                None => return Err(self.err("unterminated word")),
            }
        }
    }

    fn interval(&mut self) -> Result<PWord> {
        self.expect('[')?;
        let w = self.items(&[']'])?;
        self.expect(']')?;
        Ok(w)
    }

    fn object(&mut self) -> Result<SeqObject> {
        self.skip_ws();
        if self.peek() == Some('\u{2205}') {
            self.pos += 1;
            return Ok(SeqObject::empty());
        }
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            if self.at_end() {
                return Ok(SeqObject(out));
            }
            out.push(self.interval()?);
        }
    }

    fn word_args<const N: usize>(&mut self) -> Result<[PWord; N]> {
        self.expect('(')?;
        let mut out: [PWord; N] = std::array::from_fn(|_| PWord::Empty);
        for (k, slot) in out.iter_mut().enumerate() {
            let stop = if k + 1 == N { ')' } else { '|' };
            *slot = self.items(&[stop, ')', '|'])?;
            self.expect(stop)?;
        }
        Ok(out)
    }

    fn letter_pair(&mut self) -> Result<([Letter; 2], Layout)> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let a = self.letter()?;
                self.expect('|')?;
                let b = self.letter()?;
                self.expect(')')?;
                Ok(([a, b], Layout::Split))
            }
            Some('[') => {
                self.pos += 1;
                let a = self.letter()?;
                let b = self.letter()?;
                self.expect(']')?;
                Ok(([a, b], Layout::Fused))
            }
            _ => Err(self.err("expected '(' or '['")),
        }
    }

    fn cell(&mut self) -> Result<Generator> {
        let g = match self.peek() {
            Some('[') => Generator::Id { word: self.interval()? },
            Some('X') => {
                self.pos += 1;
                let sign = self.sign()?;
                let (top, layout) = self.letter_pair()?;
                Generator::Crossing { sign, top, layout }
            }
            Some('V') => {
                self.pos += 1;
                let [left, right] = self.word_args()?;
                Generator::Virtual { left, right }
            }
            Some('U') => {
                self.pos += 1;
                let (ends, layout) = self.letter_pair()?;
                Generator::Cup { ends, layout }
            }
            Some('C') => {
                self.pos += 1;
                let (ends, layout) = self.letter_pair()?;
                Generator::Cap { ends, layout }
            }
            Some('S') => {
                self.pos += 1;
                let [left, right] = self.word_args()?;
                Generator::Split { left, right }
            }
            Some('M') => {
                self.pos += 1;
                let [left, right] = self.word_args()?;
                Generator::Merge { left, right }
            }
            Some('A') => {
                self.pos += 1;
                let dir = match self.peek() {
                    Some('>') => AssocDir::Forward,
                    Some('<') => AssocDir::Backward,
                    _ => return Err(self.err("expected '>' or '<' after 'A'")),
                };
                self.pos += 1;
                Generator::Assoc { dir, words: self.word_args()? }
            }
            Some('c') if self.eat_keyword("counit") => Generator::Counit,
            Some('u') if self.eat_keyword("unit") => Generator::Unit,
            Some(c) => return Err(self.err(format!("unknown cell starting with '{c}'"))),
            None => return Err(self.err("expected a cell")),
        };
        if !self.at_end() {
            return Err(self.err("trailing characters after cell"));
        }
        Ok(g)
    }
}

/// Splits a line into whitespace-separated tokens outside brackets, with
/// their starting columns.
fn tokens(line: &[char]) -> Vec<(usize, &[char])> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = None;
    for (i, &c) in line.iter().enumerate() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ => {}
        }
        if c.is_whitespace() && depth <= 0 {
            if let Some(s) = start.take() {
                out.push((s, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out
}

/// Parses a standalone word, e.g. `+(-+)`; the empty string is `∅`.
pub fn parse_pword(text: &str) -> Result<PWord> {
    let chars: Vec<char> = text.chars().collect();
    let mut cur = Cursor::new(&chars, 1, 0);
    let w = cur.items(&[])?;
    Ok(w)
}

/// Parses an object such as `[+-][+]`; empty text or `∅` is the unit.
pub fn parse_object(text: &str) -> Result<SeqObject> {
    let chars: Vec<char> = text.chars().collect();
    Cursor::new(&chars, 1, 0).object()
}

pub fn parse_term(text: &str) -> Result<MorphismTerm> {
    let mut dom_header: Option<SeqObject> = None;
    let mut cod_header: Option<(usize, SeqObject)> = None;
    let mut slices = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line_no = ln + 1;
        let content = raw.split('#').next().unwrap_or("");
        let chars: Vec<char> = content.chars().collect();
        let toks = tokens(&chars);
        let Some(&(first_col, first)) = toks.first() else { continue };
        let first_word: String = first.iter().collect();
        if first_word == "dom" || first_word == "cod" {
            if !slices.is_empty() {
                return Err(Error::Syntax {
                    line: line_no,
                    column: first_col + 1,
                    message: format!("'{first_word}' header after the first slice"),
                });
            }
            let rest = &chars[first_col + 3..];
            let obj = Cursor::new(rest, line_no, first_col + 3).object()?;
            if first_word == "dom" {
                dom_header = Some(obj);
            } else {
                cod_header = Some((line_no, obj));
            }
            continue;
        }
        if toks.len() == 1 && first == ['.'] {
            slices.push(Slice::default());
            continue;
        }
        let mut cells = Vec::with_capacity(toks.len());
        for (col, tok) in toks {
            cells.push(Cursor::new(tok, line_no, col).cell()?);
        }
        slices.push(Slice::new(cells));
    }
    let dom = match (dom_header, slices.first()) {
        (Some(d), _) => d,
        (None, Some(s)) => s.dom(),
        (None, None) => cod_header.as_ref().map(|(_, c)| c.clone()).unwrap_or_default(),
    };
    let t = MorphismTerm::new(dom, slices)?;
    if let Some((line, cod)) = cod_header {
        if &cod != t.cod() {
            return Err(Error::Syntax {
                line,
                column: 1,
                message: format!("declared cod {cod} but the term ends at {}", t.cod()),
            });
        }
    }
    Ok(t)
}

fn letter_pair_text(ls: [Letter; 2], layout: Layout) -> String {
    match layout {
        Layout::Split => format!("({}|{})", ls[0].as_char(), ls[1].as_char()),
        Layout::Fused => format!("[{}{}]", ls[0].as_char(), ls[1].as_char()),
    }
}

pub fn render_cell(g: &Generator) -> String {
    match g {
        Generator::Id { word } => format!("[{}]", word.to_text()),
        Generator::Crossing { sign, top, layout } => format!("X{}{}", sign.as_char(), letter_pair_text(*top, *layout)),
        Generator::Virtual { left, right } => format!("V({}|{})", left.to_text(), right.to_text()),
        Generator::Cup { ends, layout } => format!("U{}", letter_pair_text(*ends, *layout)),
        Generator::Cap { ends, layout } => format!("C{}", letter_pair_text(*ends, *layout)),
        Generator::Split { left, right } => format!("S({}|{})", left.to_text(), right.to_text()),
        Generator::Merge { left, right } => format!("M({}|{})", left.to_text(), right.to_text()),
        Generator::Unit => "unit".to_string(),
        Generator::Counit => "counit".to_string(),
        Generator::Assoc { dir, words } => {
            let d = match dir {
                AssocDir::Forward => '>',
                AssocDir::Backward => '<',
            };
            format!("A{d}({}|{}|{})", words[0].to_text(), words[1].to_text(), words[2].to_text())
        }
    }
}

/// Canonical text of a valid term.
pub fn render(t: &MorphismTerm) -> String {
    if t.slices().is_empty() {
        return if t.dom().is_empty() { String::new() } else { format!("dom {}\n", t.dom().to_text()) };
    }
    let mut out = String::new();
    for s in t.slices() {
        if s.cells.is_empty() {
            out.push('.');
        } else {
            let cells: Vec<String> = s.cells.iter().map(render_cell).collect();
            out.push_str(&cells.join(" "));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::terms::IssueKind;
    use Letter::{Minus as M, Plus as P};

    #[test]
    fn one_slice_crossing() {
        let t = parse_term("X+(+|+)\n").unwrap();
        assert_eq!(t.dom(), &SeqObject::from_letters([P, P]));
        assert_eq!(t.slices().len(), 1);
        assert_eq!(t.slices()[0].cells, vec![Generator::crossing(CrossSign::Pos, P, P)]);
    }

    #[test]
    fn empty_text_is_identity_on_unit() {
        assert_eq!(parse_term("").unwrap(), MorphismTerm::empty());
        assert_eq!(parse_term("# nothing\n\n").unwrap(), MorphismTerm::empty());
        assert_eq!(render(&MorphismTerm::empty()), "");
    }

    #[test]
    fn unbalanced_object_is_syntax_error() {
        let e = parse_object("[(+-").unwrap_err();
        assert!(matches!(e, Error::Syntax { .. }), "{e}");
        let e = parse_term("dom [(+-\n").unwrap_err();
        assert!(matches!(e, Error::Syntax { line: 1, .. }), "{e}");
        let e = parse_term("[+] Q(+)\n").unwrap_err();
        assert!(matches!(e, Error::Syntax { line: 1, column: 5, .. }), "{e}");
    }

    #[test]
    fn validation_errors_are_forwarded() {
        let e = parse_term("[+]\n[-]\n").unwrap_err();
        match e {
            Error::Validation(r) => assert!(r.has(IssueKind::Interface)),
            other => panic!("{other}"),
        }
        assert!(matches!(parse_term("U(+|+)\n"), Err(Error::Validation(_))));
    }

    #[test]
    fn headers() {
        let t = parse_term("dom [+-][+]\n").unwrap();
        assert_eq!(t.dom().len(), 2);
        assert_eq!(render(&t), "dom [+-][+]\n");
        assert!(parse_term("cod [+]\nX+(+|+)\n").is_err());
        assert!(parse_term("dom [+][+]\ncod [+][+]\nV(+|+)\n").is_ok());
    }

    #[test]
    fn every_cell_kind_round_trips() {
        let text = "\
unit [+] [-]
[] S(|+) [-]
counit [] M(+|-)
counit [+-]
C[+-]
.
U(-|+)
X-(-|+)
V(+|-)
C(-|+)
";
        let t = parse_term(text).unwrap();
        assert_eq!(render(&t), text);
        assert_eq!(parse_term(&render(&t)).unwrap(), t);
        let assoc = "A>(+|-|+)\nA<(+|-|+)\n";
        let t = parse_term(assoc).unwrap();
        assert_eq!(t.dom().to_text(), "[+-+]");
        assert_eq!(render(&t), assoc);
    }

    #[test]
    fn single_virtual_crossing_text() {
        let t = MorphismTerm::generator(Generator::virtual_letters(P, M));
        assert_eq!(render(&t), "V(+|-)\n");
    }
}
