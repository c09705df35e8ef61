use crate::cuntz::{Clopen, CuntzError, PrefixMap, Word};

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Self { text, pos: 0 }
    }

    fn error(&self, message: impl Into<String>) -> CuntzError {
        CuntzError::Parse {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.text[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), CuntzError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{token}`")))
        }
    }

    fn word(&mut self, arity: u8) -> Result<Word, CuntzError> {
        self.skip_ws();
        if self.eat("ε") {
            return Ok(Word::empty());
        }
        if self.peek() == Some('e') {
            self.pos += 1;
            return Ok(Word::empty());
        }
        let start = self.pos;
        let mut letters = Vec::new();
        while let Some(c) = self.peek() {
            let Some(d) = c.to_digit(10) else { break };
            if d == 0 || d > arity as u32 {
                return Err(self.error(format!("letter `{c}` is outside 1..{arity}")));
            }
            letters.push((d - 1) as u8);
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a word (digits, or `e` for the empty word)"));
        }
        Ok(Word::from_letters(letters))
    }

    fn finish(&mut self) -> Result<(), CuntzError> {
        self.skip_ws();
        if self.pos != self.text.len() {
            return Err(self.error("unexpected trailing input"));
        }
        Ok(())
    }
}

/// Parses `{d1->r1, d2->r2, ...}`; `e` is the empty word.
pub fn parse_map(arity: u8, text: &str) -> Result<PrefixMap, CuntzError> {
    let mut cur = Cursor::new(text);
    cur.expect("{")?;
    let mut pairs: Vec<(Word, Word)> = Vec::new();
    if !cur.eat("}") {
        loop {
            let at = {
                cur.skip_ws();
                cur.pos
            };
            let d = cur.word(arity)?;
            if !cur.eat("->") && !cur.eat("→") {
                return Err(cur.error("expected `->`"));
            }
            let r = cur.word(arity)?;
            for (d2, r2) in &pairs {
                if d.comparable(d2) {
                    return Err(CuntzError::Parse {
                        position: at,
                        message: format!(
                            "domain word {d} overlaps {d2}; domains must be prefix-free"
                        ),
                    });
                }
                if r.comparable(r2) {
                    return Err(CuntzError::Parse {
                        position: at,
                        message: format!(
                            "range word {r} overlaps {r2}; ranges must be prefix-free"
                        ),
                    });
                }
            }
            pairs.push((d, r));
            if cur.eat("}") {
                break;
            }
            cur.expect(",")?;
        }
    }
    cur.finish()?;
    PrefixMap::new(arity, pairs).map_err(|e| CuntzError::Parse {
        position: 0,
        message: e.to_string(),
    })
}

/// Parses `[w1,w2,...]`, or an idempotent written as a map.
pub fn parse_clopen(arity: u8, text: &str) -> Result<Clopen, CuntzError> {
    if text.trim_start().starts_with('{') {
        let map = parse_map(arity, text)?;
        return Clopen::from_map(&map).map_err(|_| CuntzError::Parse {
            position: 0,
            message: format!("{map} is not idempotent"),
        });
    }
    let mut cur = Cursor::new(text);
    cur.expect("[")?;
    let mut words = Vec::new();
    if !cur.eat("]") {
        loop {
            words.push(cur.word(arity)?);
            if cur.eat("]") {
                break;
            }
            cur.expect(",")?;
        }
    }
    cur.finish()?;
    Ok(Clopen::from_words(arity, words))
}
