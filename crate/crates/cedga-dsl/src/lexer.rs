use crate::ParseError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    Int(String),
    Str(String),
    Sym(&'static str),
    Newline,
    Eof,
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
}

const SYMBOLS: [&str; 14] = ["->", "+", "-", "*", "/", "^", "(", ")", "{", "}", ";", ":", "=", ","];

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl Cursor<'_> {
    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> char {
        let c = self.chars.next().expect("peeked");
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        c
    }

    fn err(&self, line: usize, column: usize, message: &str) -> ParseError {
        ParseError { line, column, message: message.to_string() }
    }
}

/// Newlines end statements except inside parentheses or braces.
pub(crate) fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out: Vec<Token> = Vec::new();
    let mut cur = Cursor { chars: text.chars().peekable(), line: 1, column: 1 };
    let mut depth = 0usize;
    while let Some(c) = cur.peek() {
        let (line, column) = (cur.line, cur.column);
        let tok = match c {
            '\n' => {
                cur.bump();
                if depth > 0 || matches!(out.last().map(|t| &t.tok), Some(Tok::Newline) | None) {
                    continue;
                }
                Tok::Newline
            }
            '\r' | ' ' | '\t' => {
                cur.bump();
                continue;
            }
            '#' => {
                while cur.peek().is_some_and(|c| c != '\n') {
                    cur.bump();
                }
                continue;
            }
            '"' => {
                cur.bump();
                let mut s = String::new();
                loop {
                    match cur.peek() {
                        None | Some('\n') => return Err(cur.err(line, column, "unterminated string")),
                        Some('"') => {
                            cur.bump();
                            break;
                        }
                        Some('\\') => {
                            cur.bump();
                            match cur.peek() {
                                Some('"') | Some('\\') => s.push(cur.bump()),
                                _ => return Err(cur.err(cur.line, cur.column, "unknown escape")),
                            }
                        }
                        Some(_) => s.push(cur.bump()),
                    }
                }
                Tok::Str(s)
            }
            c if c.is_ascii_digit() => {
                let mut s = String::new();
                while cur.peek().is_some_and(|c| c.is_ascii_digit()) {
                    s.push(cur.bump());
                }
                if cur.peek().is_some_and(|c| c.is_ascii_alphabetic() || c == '_') {
                    return Err(cur.err(line, column, "identifiers must not start with a digit"));
                }
                Tok::Int(s)
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut s = String::new();
                while cur.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
                    s.push(cur.bump());
                }
                Tok::Ident(s)
            }
            c => {
                let rest: String = cur.chars.clone().take(2).collect();
                let Some(sym) = SYMBOLS.iter().find(|s| rest.starts_with(**s)) else {
                    return Err(cur.err(line, column, &format!("unexpected character `{c}`")));
                };
                for _ in 0..sym.len() {
                    cur.bump();
                }
                match *sym {
                    "(" | "{" => depth += 1,
                    ")" | "}" => depth = depth.saturating_sub(1),
                    _ => {}
                }
                Tok::Sym(sym)
            }
        };
        out.push(Token { tok, line, column });
    }
    out.push(Token { tok: Tok::Eof, line: cur.line, column: cur.column });
    Ok(out)
}
