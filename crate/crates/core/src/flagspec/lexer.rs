use std::fmt;

use super::LexError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TokenKind {
    Ident,
    Number,
    Keyword,
    Symbol,
    String,
    Eof,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    /// Source text; for strings, the contents without quotes.
    pub lexeme: String,
    pub line: u32,
    pub col: u32,
}

impl Token {
    pub fn is_keyword(&self, word: &str) -> bool {
        self.kind == TokenKind::Keyword && self.lexeme == word
    }

    pub fn is_symbol(&self, sym: &str) -> bool {
        self.kind == TokenKind::Symbol && self.lexeme == sym
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            TokenKind::Eof => f.write_str("end of input"),
            TokenKind::String => write!(f, "string \"{}\"", self.lexeme),
            TokenKind::Number => write!(f, "number `{}`", self.lexeme),
            TokenKind::Ident => write!(f, "identifier `{}`", self.lexeme),
            TokenKind::Keyword | TokenKind::Symbol => write!(f, "`{}`", self.lexeme),
        }
    }
}

pub const KEYWORDS: [&str; 12] = [
    "flag",
    "canvas",
    "let",
    "region",
    "rect",
    "star",
    "at",
    "diagonal_intersection",
    "of",
    "diameter",
    "phi",
    "sqrt",
];

const SYMBOLS: &str = "{}();=+-*/";

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: u32,
    col: u32,
}

impl Cursor<'_> {
    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn take_digits(&mut self, out: &mut String) -> usize {
        let mut n = 0;
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            out.push(c);
            self.bump();
            n += 1;
        }
        n
    }

    fn error(&self, message: impl Into<String>) -> LexError {
        LexError { line: self.line, col: self.col, message: message.into() }
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_ident_continue(c: char) -> bool {
    c.is_alphanumeric() || c == '_'
}

/// Splits `source` into tokens, ending with [`TokenKind::Eof`].
///
/// Numbers are integers, finite decimals (`2.4`) or integer fractions
/// (`3/5`, no spaces). A number running straight into a letter is an error
/// reported at the letter.
pub fn tokenize(source: &str) -> Result<Vec<Token>, LexError> {
    let mut cur = Cursor { chars: source.chars().peekable(), line: 1, col: 1 };
    let mut tokens = Vec::new();
    loop {
        let Some(c) = cur.peek() else { break };
        if c.is_whitespace() {
            cur.bump();
            continue;
        }
        if c == '#' {
            while cur.peek().is_some_and(|c| c != '\n') {
                cur.bump();
            }
            continue;
        }
        let (line, col) = (cur.line, cur.col);
        let token = |kind, lexeme| Token { kind, lexeme, line, col };
        if c.is_ascii_digit() {
            tokens.push(token(TokenKind::Number, lex_number(&mut cur)?));
        } else if is_ident_start(c) {
            let mut word = String::new();
            while let Some(c) = cur.peek().filter(|&c| is_ident_continue(c)) {
                word.push(c);
                cur.bump();
            }
            let kind = if KEYWORDS.contains(&word.as_str()) { TokenKind::Keyword } else { TokenKind::Ident };
            tokens.push(token(kind, word));
        } else if c == '"' {
            let open = cur.error("unterminated string");
            cur.bump();
            let mut text = String::new();
            loop {
                match cur.bump() {
                    Some('"') => break,
                    Some('\n') | None => return Err(open),
                    Some(c) => text.push(c),
                }
            }
            tokens.push(token(TokenKind::String, text));
        } else if SYMBOLS.contains(c) {
            cur.bump();
            tokens.push(token(TokenKind::Symbol, c.to_string()));
        } else {
            return Err(cur.error(format!("unexpected character {c:?}")));
        }
    }
    tokens.push(Token { kind: TokenKind::Eof, lexeme: String::new(), line: cur.line, col: cur.col });
    Ok(tokens)
}

fn lex_number(cur: &mut Cursor<'_>) -> Result<String, LexError> {
    let mut text = String::new();
    cur.take_digits(&mut text);
    match cur.peek() {
        Some('.') => {
            let dot = cur.error("expected digits after the decimal point");
            text.push('.');
            cur.bump();
            if cur.take_digits(&mut text) == 0 {
                return Err(dot);
            }
        }
        Some('/') => {
            let mut ahead = cur.chars.clone();
            ahead.next();
            if ahead.peek().is_some_and(char::is_ascii_digit) {
                text.push('/');
                cur.bump();
                let (line, col) = (cur.line, cur.col);
                let mut den = String::new();
                cur.take_digits(&mut den);
                if cur.peek().is_some_and(is_ident_start) {
                    return Err(cur.error("malformed number"));
                }
                if den.bytes().all(|b| b == b'0') {
                    return Err(LexError { line, col, message: "fraction with zero denominator".into() });
                }
                text.push_str(&den);
            }
        }
        _ => {}
    }
    if let Some(c) = cur.peek().filter(|&c| is_ident_start(c) || c == '.') {
        return Err(cur.error(format!("malformed number: unexpected {c:?}")));
    }
    Ok(text)
}
