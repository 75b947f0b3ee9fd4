use super::{Presentation, Word};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(i64),
    Sym(char),
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let (tl, tc) = (line, column);
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_ascii_alphanumeric() || d == '_' {
                    s.push(d);
                    chars.next();
                    column += 1;
                } else {
                    break;
                }
            }
            out.push(Token { tok: Tok::Ident(s), line: tl, column: tc });
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_ascii_digit() {
                    s.push(d);
                    chars.next();
                    column += 1;
                } else {
                    break;
                }
            }
            let v = s.parse::<i64>().map_err(|_| Error::Parse {
                line: tl,
                column: tc,
                expected: "an integer that fits in 64 bits".into(),
            })?;
            out.push(Token { tok: Tok::Int(v), line: tl, column: tc });
        } else if "<>|,*^()=-".contains(c) {
            chars.next();
            column += 1;
            out.push(Token { tok: Tok::Sym(c), line: tl, column: tc });
        } else {
            return Err(Error::Parse {
                line: tl,
                column: tc,
                expected: format!("a presentation symbol, found `{c}`"),
            });
        }
    }
    out.push(Token { tok: Tok::End, line, column });
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    generators: Vec<String>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].tok
    }

    fn error<T>(&self, expected: &str) -> Result<T> {
        let t = &self.tokens[self.pos];
        Err(Error::Parse {
            line: t.line,
            column: t.column,
            expected: expected.to_string(),
        })
    }

    fn expect_sym(&mut self, c: char) -> Result<()> {
        if *self.peek() == Tok::Sym(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.error(&format!("`{c}`"))
        }
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn generators(&mut self) -> Result<()> {
        loop {
            match self.peek().clone() {
                Tok::Ident(name) => {
                    if self.generators.contains(&name) {
                        return self.error("a generator name not already declared");
                    }
                    self.generators.push(name);
                    self.pos += 1;
                    self.eat_sym(',');
                }
                Tok::Sym('|') => return Ok(()),
                _ => return self.error("a generator name or `|`"),
            }
        }
    }

    fn relators(&mut self) -> Result<Vec<Word>> {
        let mut out = Vec::new();
        if self.eat_sym('>') {
            return Ok(out);
        }
        loop {
            let lhs = self.word()?;
            let rel = if self.eat_sym('=') {
                let rhs = self.word()?;
                lhs.concat(&rhs.inverse())
            } else {
                lhs
            };
            out.push(rel);
            if self.eat_sym(',') {
                continue;
            }
            self.expect_sym('>')?;
            return Ok(out);
        }
    }

    fn word(&mut self) -> Result<Word> {
        let mut w = self.term()?;
        while self.eat_sym('*') {
            let t = self.term()?;
            w = w.concat(&t);
        }
        Ok(w)
    }

    fn term(&mut self) -> Result<Word> {
        let base = self.factor()?;
        if self.eat_sym('^') {
            let negative = self.eat_sym('-');
            match *self.peek() {
                Tok::Int(k) => {
                    self.pos += 1;
                    Ok(base.pow(if negative { -k } else { k }))
                }
                _ => self.error("an integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn factor(&mut self) -> Result<Word> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                let g = self
                    .generators
                    .iter()
                    .position(|n| *n == name)
                    .ok_or(Error::UndeclaredGenerator(name))?;
                self.pos += 1;
                Ok(Word::new(vec![(g, 1)]))
            }
            Tok::Int(1) => {
                self.pos += 1;
                Ok(Word::identity())
            }
            Tok::Sym('(') => {
                self.pos += 1;
                let w = self.word()?;
                self.expect_sym(')')?;
                Ok(w)
            }
            _ => self.error("a generator, `1` or `(`"),
        }
    }
}

/// Parses `< gens | relators >`.
pub fn parse(text: &str) -> Result<Presentation> {
    let mut p = Parser {
        tokens: tokenize(text)?,
        pos: 0,
        generators: Vec::new(),
    };
    p.expect_sym('<')?;
    p.generators()?;
    p.expect_sym('|')?;
    let relators = p.relators()?;
    if *p.peek() != Tok::End {
        return p.error("end of input");
    }
    Ok(Presentation::new(p.generators, relators))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_presentation() {
        let p = parse("< a | a^4 >").unwrap();
        assert_eq!(p.generators(), &["a".to_string()]);
        assert_eq!(p.relators().len(), 1);
        assert_eq!(p.relators()[0].syllables(), &[(0, 4)]);
    }

    #[test]
    fn dihedral_presentation_with_equation() {
        let p = parse("< a,b | a^4, b^2, b*a*b^-1 = a^-1 >").unwrap();
        assert_eq!(p.relators().len(), 3);
        // b a b^-1 a
        assert_eq!(p.relators()[2].syllables(), &[(1, 1), (0, 1), (1, -1), (0, 1)]);
    }

    #[test]
    fn space_separated_generators_and_parentheses() {
        let p = parse("<x y | (x*y)^-2 = 1, x^2>").unwrap();
        assert_eq!(p.generators().len(), 2);
        assert_eq!(p.relators()[0].syllables(), &[(1, -1), (0, -1), (1, -1), (0, -1)]);
    }

    #[test]
    fn undeclared_generator() {
        let err = parse("< a,b | a^4, b^2, b*a*c >").unwrap_err();
        assert!(matches!(err, Error::UndeclaredGenerator(ref c) if c == "c"));
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse("< a | a^ >").unwrap_err() {
            Error::Parse { line, column, .. } => assert_eq!((line, column), (1, 10)),
            e => panic!("unexpected {e:?}"),
        }
        match parse("< a |\n a^2 a >").unwrap_err() {
            Error::Parse { line, column, .. } => assert_eq!((line, column), (2, 6)),
            e => panic!("unexpected {e:?}"),
        }
        assert!(matches!(parse("a | a"), Err(Error::Parse { .. })));
        assert!(matches!(parse("< a | a^2 > junk"), Err(Error::Parse { .. })));
    }

    #[test]
    fn trivial_relators_are_dropped() {
        let p = parse("< a | a*a^-1, 1, a^3 >").unwrap();
        assert_eq!(p.relators().len(), 1);
        let empty = parse("< | >").unwrap();
        assert!(empty.generators().is_empty() && empty.relators().is_empty());
    }

    #[test]
    fn display_round_trips() {
        let p = parse("< a,b | a^8, b^2, b*a*b = a^5 >").unwrap();
        assert_eq!(parse(&p.to_string()).unwrap(), p);
    }
}
