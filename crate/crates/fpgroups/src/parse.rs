//! The presentation language and its parser.
//!
//! ```text
//! presentation := "<" gens "|" relators ">"
//! gens         := name ("," name)*
//! relators     := ε | word ("," word)*
//! word         := factor+
//! factor       := name | name "^" int | "(" word ")" "^" int
//!               | "[" word "," word "]"
//! ```
//!
//! Names are ASCII identifiers, whitespace is insignificant, `[u,v]` is the
//! commutator `u v u⁻¹ v⁻¹`, and exponents may be negative. Powers are
//! expanded on ingest and words are freely reduced; a relator that reduces
//! to the empty word is rejected. Errors carry the line and column where
//! parsing failed.
//!
//! [`fmt::Display`] on [`Presentation`] prints the same language back
//! (adjacent equal letters are collapsed into powers), so parsing a printed
//! presentation returns it unchanged.

use std::fmt;

use crate::error::{Error, Result};
use crate::words::{GeneratorMap, Letter, Presentation, Word};

/// Longest a word may grow while expanding powers.
const MAX_EXPANDED_LETTERS: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
enum TokenKind {
    Less,
    Greater,
    Pipe,
    Comma,
    Semicolon,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Equals,
    Name(String),
    Int(i64),
    Eof,
}

impl TokenKind {
    fn describe(&self) -> String {
        match self {
            TokenKind::Less => "'<'".into(),
            TokenKind::Greater => "'>'".into(),
            TokenKind::Pipe => "'|'".into(),
            TokenKind::Comma => "','".into(),
            TokenKind::Semicolon => "';'".into(),
            TokenKind::Caret => "'^'".into(),
            TokenKind::LParen => "'('".into(),
            TokenKind::RParen => "')'".into(),
            TokenKind::LBracket => "'['".into(),
            TokenKind::RBracket => "']'".into(),
            TokenKind::Equals => "'='".into(),
            TokenKind::Name(n) => format!("name '{n}'"),
            TokenKind::Int(v) => format!("integer {v}"),
            TokenKind::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    kind: TokenKind,
    line: usize,
    column: usize,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let mut line = 1usize;
    let mut column = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tline, tcolumn) = (line, column);
        let mut advance = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next().unwrap();
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };
        if c.is_whitespace() {
            advance(&mut chars);
            continue;
        }
        let simple = match c {
            '<' => Some(TokenKind::Less),
            '>' => Some(TokenKind::Greater),
            '|' => Some(TokenKind::Pipe),
            ',' => Some(TokenKind::Comma),
            ';' => Some(TokenKind::Semicolon),
            '^' => Some(TokenKind::Caret),
            '(' => Some(TokenKind::LParen),
            ')' => Some(TokenKind::RParen),
            '[' => Some(TokenKind::LBracket),
            ']' => Some(TokenKind::RBracket),
            '=' => Some(TokenKind::Equals),
            _ => None,
        };
        if let Some(kind) = simple {
            advance(&mut chars);
            tokens.push(Token {
                kind,
                line: tline,
                column: tcolumn,
            });
            continue;
        }
        if c == '-' || c.is_ascii_digit() {
            let mut digits = String::new();
            if c == '-' {
                digits.push(advance(&mut chars));
                if !chars.peek().is_some_and(char::is_ascii_digit) {
                    return Err(parse_error(tline, tcolumn, "expected digits after '-'"));
                }
            }
            while chars.peek().is_some_and(char::is_ascii_digit) {
                digits.push(advance(&mut chars));
            }
            let value: i64 = digits.parse().map_err(|_| {
                parse_error(tline, tcolumn, format!("integer '{digits}' is too large"))
            })?;
            tokens.push(Token {
                kind: TokenKind::Int(value),
                line: tline,
                column: tcolumn,
            });
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut name = String::new();
            while chars
                .peek()
                .is_some_and(|&c| c.is_ascii_alphanumeric() || c == '_')
            {
                name.push(advance(&mut chars));
            }
            tokens.push(Token {
                kind: TokenKind::Name(name),
                line: tline,
                column: tcolumn,
            });
            continue;
        }
        return Err(parse_error(
            tline,
            tcolumn,
            format!("unexpected character '{c}'"),
        ));
    }
    tokens.push(Token {
        kind: TokenKind::Eof,
        line,
        column,
    });
    Ok(tokens)
}

struct TokenParser {
    tokens: Vec<Token>,
    at: usize,
}

impl TokenParser {
    fn new(text: &str) -> Result<TokenParser> {
        Ok(TokenParser {
            tokens: tokenize(text)?,
            at: 0,
        })
    }

    fn peek(&self) -> &Token {
        &self.tokens[self.at]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.at].clone();
        if self.at + 1 < self.tokens.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, kind: &TokenKind) -> Result<Token> {
        let t = self.next();
        if t.kind == *kind {
            Ok(t)
        } else {
            Err(parse_error(
                t.line,
                t.column,
                format!("expected {}, found {}", kind.describe(), t.kind.describe()),
            ))
        }
    }

    fn expect_name(&mut self) -> Result<(String, Token)> {
        let t = self.next();
        match t.kind.clone() {
            TokenKind::Name(n) => Ok((n, t)),
            other => Err(parse_error(
                t.line,
                t.column,
                format!("expected a name, found {}", other.describe()),
            )),
        }
    }

    fn expect_int(&mut self) -> Result<(i64, Token)> {
        let t = self.next();
        match t.kind {
            TokenKind::Int(v) => Ok((v, t)),
            ref other => Err(parse_error(
                t.line,
                t.column,
                format!("expected an integer, found {}", other.describe()),
            )),
        }
    }

    fn expect_eof(&mut self) -> Result<()> {
        let t = self.peek();
        if t.kind == TokenKind::Eof {
            Ok(())
        } else {
            Err(parse_error(
                t.line,
                t.column,
                format!("unexpected {} after the end", t.kind.describe()),
            ))
        }
    }

    /// Repeats `base` `exponent` times (inverting for negative exponents),
    /// appending to `out`.
    fn expand_power(
        &self,
        out: &mut Vec<Letter>,
        base: &[Letter],
        exponent: i64,
        at: &Token,
    ) -> Result<()> {
        let reps = exponent.unsigned_abs() as usize;
        if base.len().saturating_mul(reps) > MAX_EXPANDED_LETTERS
            || out.len() + base.len().saturating_mul(reps) > MAX_EXPANDED_LETTERS
        {
            return Err(parse_error(
                at.line,
                at.column,
                format!("expanding this power needs more than {MAX_EXPANDED_LETTERS} letters"),
            ));
        }
        if exponent >= 0 {
            for _ in 0..reps {
                out.extend_from_slice(base);
            }
        } else {
            let inverse: Vec<Letter> = base.iter().rev().map(|l| l.inverse()).collect();
            for _ in 0..reps {
                out.extend_from_slice(&inverse);
            }
        }
        Ok(())
    }

    fn can_start_factor(&self) -> bool {
        matches!(
            self.peek().kind,
            TokenKind::Name(_) | TokenKind::LParen | TokenKind::LBracket
        )
    }

    /// `word := factor+`, appending letters to `out`.
    fn parse_word_into(&mut self, names: &[String], out: &mut Vec<Letter>) -> Result<()> {
        if !self.can_start_factor() {
            let t = self.peek();
            return Err(parse_error(
                t.line,
                t.column,
                format!("expected a word, found {}", t.kind.describe()),
            ));
        }
        while self.can_start_factor() {
            self.parse_factor_into(names, out)?;
        }
        Ok(())
    }

    fn parse_factor_into(&mut self, names: &[String], out: &mut Vec<Letter>) -> Result<()> {
        let t = self.next();
        match t.kind.clone() {
            TokenKind::Name(name) => {
                let Some(gen) = names.iter().position(|n| *n == name) else {
                    return Err(parse_error(
                        t.line,
                        t.column,
                        format!("unknown generator '{name}'"),
                    ));
                };
                if self.peek().kind == TokenKind::Caret {
                    self.next();
                    let (exponent, at) = self.expect_int()?;
                    self.expand_power(out, &[Letter::positive(gen)], exponent, &at)?;
                } else {
                    out.push(Letter::positive(gen));
                }
            }
            TokenKind::LParen => {
                let mut inner = Vec::new();
                self.parse_word_into(names, &mut inner)?;
                self.expect(&TokenKind::RParen)?;
                self.expect(&TokenKind::Caret)?;
                let (exponent, at) = self.expect_int()?;
                self.expand_power(out, &inner, exponent, &at)?;
            }
            TokenKind::LBracket => {
                let mut u = Vec::new();
                self.parse_word_into(names, &mut u)?;
                self.expect(&TokenKind::Comma)?;
                let mut v = Vec::new();
                self.parse_word_into(names, &mut v)?;
                self.expect(&TokenKind::RBracket)?;
                if u.len()
                    .saturating_mul(2)
                    .saturating_add(v.len().saturating_mul(2))
                    .saturating_add(out.len())
                    > MAX_EXPANDED_LETTERS
                {
                    return Err(parse_error(
                        t.line,
                        t.column,
                        format!("expanding this commutator needs more than {MAX_EXPANDED_LETTERS} letters"),
                    ));
                }
                out.extend_from_slice(&u);
                out.extend_from_slice(&v);
                out.extend(u.iter().rev().map(|l| l.inverse()));
                out.extend(v.iter().rev().map(|l| l.inverse()));
            }
            other => {
                return Err(parse_error(
                    t.line,
                    t.column,
                    format!("expected a word, found {}", other.describe()),
                ));
            }
        }
        Ok(())
    }

    fn parse_reduced_word(&mut self, names: &[String]) -> Result<Word> {
        let mut letters = Vec::new();
        self.parse_word_into(names, &mut letters)?;
        Ok(Word::from_letters(names.len(), letters)
            .expect("parsed letters are in range")
            .free_reduce())
    }
}

/// Parses a presentation `<gens | relators>`.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut p = TokenParser::new(text)?;
    p.expect(&TokenKind::Less)?;
    let mut names: Vec<String> = Vec::new();
    loop {
        let (name, at) = p.expect_name()?;
        if names.contains(&name) {
            return Err(parse_error(
                at.line,
                at.column,
                format!("generator '{name}' is declared twice"),
            ));
        }
        names.push(name);
        if p.peek().kind == TokenKind::Comma {
            p.next();
        } else {
            break;
        }
    }
    p.expect(&TokenKind::Pipe)?;
    let mut relators = Vec::new();
    if p.peek().kind != TokenKind::Greater {
        loop {
            let at = p.peek().clone();
            let word = p.parse_reduced_word(&names)?;
            if word.is_empty() {
                return Err(parse_error(
                    at.line,
                    at.column,
                    "relator reduces to the empty word",
                ));
            }
            relators.push(word);
            if p.peek().kind == TokenKind::Comma {
                p.next();
            } else {
                break;
            }
        }
    }
    p.expect(&TokenKind::Greater)?;
    p.expect_eof()?;
    Presentation::new(names, relators)
}

/// Parses one word over the generators of `p`.
pub fn parse_word(text: &str, p: &Presentation) -> Result<Word> {
    let mut t = TokenParser::new(text)?;
    let word = t.parse_reduced_word(p.generator_names())?;
    t.expect_eof()?;
    Ok(word)
}

/// Parses a semicolon-separated list of words over the generators of `p`.
pub fn parse_words(text: &str, p: &Presentation) -> Result<Vec<Word>> {
    let mut t = TokenParser::new(text)?;
    let mut words = Vec::new();
    loop {
        words.push(t.parse_reduced_word(p.generator_names())?);
        if t.peek().kind == TokenKind::Semicolon {
            t.next();
        } else {
            break;
        }
    }
    t.expect_eof()?;
    Ok(words)
}

/// Parses a generator map `h = word; k = word; ...` sending each generator
/// of `source` to a word over the generators of `target`. Every source
/// generator must be assigned exactly once.
pub fn parse_generator_map(
    text: &str,
    source: &Presentation,
    target: &Presentation,
) -> Result<GeneratorMap> {
    let mut t = TokenParser::new(text)?;
    let mut images: Vec<Option<Word>> = vec![None; source.generator_count()];
    loop {
        let (name, at) = t.expect_name()?;
        let Some(index) = source.generator_index(&name) else {
            return Err(parse_error(
                at.line,
                at.column,
                format!("'{name}' is not a generator of the source presentation"),
            ));
        };
        if images[index].is_some() {
            return Err(parse_error(
                at.line,
                at.column,
                format!("generator '{name}' is assigned twice"),
            ));
        }
        t.expect(&TokenKind::Equals)?;
        images[index] = Some(t.parse_reduced_word(target.generator_names())?);
        if t.peek().kind == TokenKind::Semicolon {
            t.next();
        } else {
            break;
        }
    }
    t.expect_eof()?;
    let mut complete = Vec::with_capacity(images.len());
    for (i, image) in images.into_iter().enumerate() {
        let Some(w) = image else {
            return Err(parse_error(
                1,
                1,
                format!(
                    "no image given for generator '{}'",
                    source.generator_names()[i]
                ),
            ));
        };
        complete.push(w);
    }
    GeneratorMap::new(target.generator_count(), complete)
}

/// Prints a word in the presentation language, collapsing runs of equal
/// letters into powers: `a a b^-1 b^-1 b^-1` prints as `a^2 b^-3`.
pub fn format_word(w: &Word, names: &[String]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let letters = w.letters();
    let mut i = 0;
    while i < letters.len() {
        let l = letters[i];
        let mut run = 1;
        while i + run < letters.len() && letters[i + run] == l {
            run += 1;
        }
        let name = &names[l.generator()];
        let exponent = run as i64 * i64::from(l.sign());
        if exponent == 1 {
            parts.push(name.clone());
        } else {
            parts.push(format!("{name}^{exponent}"));
        }
        i += run;
    }
    parts.join(" ")
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{} |", self.generator_names().join(", "))?;
        for (i, r) in self.relators().iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            write!(f, "{sep}{}", format_word(r, self.generator_names()))?;
        }
        write!(f, ">")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{pres, word};
    use proptest::prelude::*;

    #[test]
    fn parses_the_torus_presentation() {
        let p = parse_presentation("<a,b | [a,b]>").unwrap();
        assert_eq!(p.generator_names(), &["a".to_string(), "b".to_string()]);
        assert_eq!(p.relator_count(), 1);
        assert_eq!(
            p.relators()[0],
            word(2, &[(0, 1), (1, 1), (0, -1), (1, -1)])
        );
    }

    #[test]
    fn parses_powers_and_negative_exponents() {
        let p = parse_presentation("<a | a^6>").unwrap();
        assert_eq!(p.relators()[0], word(1, &[(0, 1); 6]));

        let p = parse_presentation("<a, b | a^2 b^-3>").unwrap();
        assert_eq!(
            p.relators()[0],
            word(2, &[(0, 1), (0, 1), (1, -1), (1, -1), (1, -1)])
        );
    }

    #[test]
    fn parses_grouped_powers_and_nested_commutators() {
        let p = parse_presentation("<a, b | (a b)^2>").unwrap();
        assert_eq!(p.relators()[0], word(2, &[(0, 1), (1, 1), (0, 1), (1, 1)]));

        let p = parse_presentation("<a, b | [a, [a, b]]>").unwrap();
        let inner = word(2, &[(0, 1), (1, 1), (0, -1), (1, -1)]);
        let expected = word(2, &[(0, 1)])
            .product(&inner)
            .unwrap()
            .product(&word(2, &[(0, -1)]))
            .unwrap()
            .product(&inner.inverse())
            .unwrap();
        // relators are stored cyclically reduced
        assert_eq!(p.relators()[0], expected.cyclic_reduce());

        let p = parse_presentation("<a | ((a^2)^3)^-1>").unwrap();
        assert_eq!(p.relators()[0], word(1, &[(0, -1); 6]));
    }

    #[test]
    fn rejects_relators_that_reduce_to_nothing() {
        let err = parse_presentation("<a | a a^-1>").unwrap_err();
        match err {
            Error::Parse {
                line,
                column,
                message,
            } => {
                assert_eq!(line, 1);
                assert_eq!(column, 6);
                assert!(message.contains("empty"));
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn reports_positions_of_unknown_generators() {
        let err = parse_presentation("<a | b>").unwrap_err();
        match err {
            Error::Parse {
                line,
                column,
                message,
            } => {
                assert_eq!((line, column), (1, 6));
                assert!(message.contains("unknown generator"));
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
        let err = parse_presentation("<a,\n b | a^2\n c>").unwrap_err();
        match err {
            Error::Parse { line, column, .. } => assert_eq!((line, column), (3, 2)),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_malformed_syntax() {
        assert!(parse_presentation("a | a^2>").is_err());
        assert!(parse_presentation("<a a^2>").is_err());
        assert!(parse_presentation("<a | a^2").is_err());
        assert!(parse_presentation("<a | a^2> junk").is_err());
        assert!(parse_presentation("< | a>").is_err());
        assert!(parse_presentation("<a,a | >").is_err());
        assert!(parse_presentation("<a | a^>").is_err());
        // grouped words require an exponent
        assert!(parse_presentation("<a, b | (a b)>").is_err());
        // commutators take none
        assert!(parse_presentation("<a, b | [a, b]^2>").is_err());
        assert!(parse_presentation("<a | a^-b>").is_err());
        assert!(parse_presentation("<a | a$>").is_err());
    }

    #[test]
    fn rejects_oversized_expansions() {
        let err = parse_presentation("<a | a^99999999>").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
        let err = parse_presentation("<a | ((((a^100)^100)^100)^100)^100>").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }

    #[test]
    fn whitespace_and_newlines_are_insignificant() {
        let flat = parse_presentation("<a,b|[a,b]>").unwrap();
        let spaced = parse_presentation("  < a ,\n\tb |\n [ a , b ] >\n").unwrap();
        assert_eq!(flat, spaced);
    }

    #[test]
    fn parses_word_lists() {
        let f2 = Presentation::free(vec!["a".into(), "b".into()]).unwrap();
        let words = parse_words("b; a b a^-1; a^2", &f2).unwrap();
        assert_eq!(words.len(), 3);
        assert_eq!(words[1], word(2, &[(0, 1), (1, 1), (0, -1)]));
        assert!(parse_words("b;;a", &f2).is_err());
        assert!(parse_words("", &f2).is_err());
        // a single word needs no separator
        assert_eq!(parse_word("a^2", &f2).unwrap(), word(2, &[(0, 1), (0, 1)]));
    }

    #[test]
    fn parses_generator_maps() {
        let h = Presentation::free(vec!["h".into()]).unwrap();
        let f2 = Presentation::free(vec!["a".into(), "b".into()]).unwrap();
        let map = parse_generator_map("h = a b a^-1", &h, &f2).unwrap();
        assert_eq!(map.images()[0], word(2, &[(0, 1), (1, 1), (0, -1)]));

        let hk = Presentation::free(vec!["h".into(), "k".into()]).unwrap();
        let map = parse_generator_map("k = b; h = a", &hk, &f2).unwrap();
        assert_eq!(map.images()[0], word(2, &[(0, 1)]));
        assert_eq!(map.images()[1], word(2, &[(1, 1)]));

        assert!(parse_generator_map("h = a; h = b", &hk, &f2).is_err());
        assert!(parse_generator_map("h = a", &hk, &f2).is_err());
        assert!(parse_generator_map("x = a", &h, &f2).is_err());
        assert!(parse_generator_map("h = q", &h, &f2).is_err());
    }

    #[test]
    fn printing_collapses_runs() {
        let p = pres(
            &["a", "b"],
            &[
                &[(0, 1), (0, 1), (1, -1), (1, -1), (1, -1)],
                &[(0, 1), (1, 1)],
            ],
        );
        assert_eq!(p.to_string(), "<a, b | a^2 b^-3, a b>");
        let free = Presentation::free(vec!["x".into()]).unwrap();
        assert_eq!(free.to_string(), "<x |>");
    }

    #[test]
    fn printed_presentations_parse_back() {
        let samples = [
            pres(&["a", "b"], &[&[(0, 1), (1, 1), (0, -1), (1, -1)]]),
            pres(&["a"], &[&[(0, 1); 6]]),
            pres(
                &["x", "y", "z_2"],
                &[&[(0, 1), (1, -1), (2, 1), (2, 1)], &[(1, 1)]],
            ),
            Presentation::free(vec!["u".into(), "v".into()]).unwrap(),
        ];
        for p in samples {
            assert_eq!(parse_presentation(&p.to_string()).unwrap(), p);
        }
    }

    proptest! {
        #[test]
        fn random_presentations_round_trip(
            relator_specs in prop::collection::vec(
                prop::collection::vec((0usize..3, prop::bool::ANY), 1..12),
                0..4,
            )
        ) {
            let names: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
            let relators: Vec<Word> = relator_specs
                .iter()
                .map(|spec| {
                    let letters = spec
                        .iter()
                        .map(|&(g, inv)| if inv { Letter::negative(g) } else { Letter::positive(g) })
                        .collect();
                    Word::from_letters(3, letters).unwrap()
                })
                .filter(|w| !w.cyclic_reduce().is_empty())
                .collect();
            let p = Presentation::new(names, relators).unwrap();
            prop_assert_eq!(parse_presentation(&p.to_string()).unwrap(), p);
        }
    }
}
