use super::ast::{BinOp, ExprAst, ExprAstKind, Item, LetDecl, Pos, RegionDecl, SpecAst, StarCenter, StarDecl};
use super::lexer::{Token, TokenKind};
use super::ParseError;
use crate::constructions::ColorRole;
use crate::exactnum::parse_rational;

/// Deepest expression nesting accepted before giving up.
pub const MAX_DEPTH: usize = 256;

struct Parser<'a> {
    tokens: &'a [Token],
    at: usize,
    depth: usize,
}

/// Parses a whole `.flag` document.
pub fn parse(tokens: &[Token]) -> Result<SpecAst, ParseError> {
    let mut p = Parser::new(tokens)?;
    let spec = p.spec()?;
    p.expect_eof()?;
    Ok(spec)
}

/// Parses a token stream holding a single expression.
pub fn parse_expression(tokens: &[Token]) -> Result<ExprAst, ParseError> {
    let mut p = Parser::new(tokens)?;
    let e = p.expr()?;
    p.expect_eof()?;
    Ok(e)
}

impl<'a> Parser<'a> {
    fn new(tokens: &'a [Token]) -> Result<Self, ParseError> {
        match tokens.last() {
            Some(t) if t.kind == TokenKind::Eof => Ok(Parser { tokens, at: 0, depth: 0 }),
            _ => Err(ParseError {
                line: tokens.last().map_or(1, |t| t.line),
                col: tokens.last().map_or(1, |t| t.col),
                expected: "token stream ending in end of input".into(),
                found: "unterminated stream".into(),
            }),
        }
    }

    fn peek(&self) -> &'a Token {
        &self.tokens[self.at.min(self.tokens.len() - 1)]
    }

    fn pos(&self) -> Pos {
        let t = self.peek();
        Pos { line: t.line, col: t.col }
    }

    fn advance(&mut self) -> &'a Token {
        let t = self.peek();
        if t.kind != TokenKind::Eof {
            self.at += 1;
        }
        t
    }

    fn error(&self, expected: impl Into<String>) -> ParseError {
        let t = self.peek();
        ParseError { line: t.line, col: t.col, expected: expected.into(), found: t.to_string() }
    }

    fn keyword(&mut self, word: &str) -> Result<(), ParseError> {
        if self.peek().is_keyword(word) {
            self.advance();
            Ok(())
        } else {
            Err(self.error(format!("`{word}`")))
        }
    }

    fn symbol(&mut self, sym: &str) -> Result<(), ParseError> {
        if self.peek().is_symbol(sym) {
            self.advance();
            Ok(())
        } else {
            Err(self.error(format!("`{sym}`")))
        }
    }

    fn ident(&mut self, what: &str) -> Result<String, ParseError> {
        if self.peek().kind == TokenKind::Ident {
            Ok(self.advance().lexeme.clone())
        } else {
            Err(self.error(what))
        }
    }

    fn color(&mut self) -> Result<ColorRole, ParseError> {
        let t = self.peek();
        match t.kind {
            TokenKind::Ident => match t.lexeme.parse() {
                Ok(c) => {
                    self.advance();
                    Ok(c)
                }
                Err(_) => Err(self.error("color (red, white, blue, green or yellow)")),
            },
            _ => Err(self.error("color (red, white, blue, green or yellow)")),
        }
    }

    fn expect_eof(&self) -> Result<(), ParseError> {
        if self.peek().kind == TokenKind::Eof {
            Ok(())
        } else {
            Err(self.error("end of input"))
        }
    }

    fn spec(&mut self) -> Result<SpecAst, ParseError> {
        self.keyword("flag")?;
        let name = match self.peek().kind {
            TokenKind::String => self.advance().lexeme.clone(),
            _ => return Err(self.error("flag name string")),
        };
        self.symbol("{")?;
        self.keyword("canvas")?;
        let canvas_w = self.expr()?;
        if self.peek().kind == TokenKind::Ident && self.peek().lexeme == "x" {
            self.advance();
        } else {
            return Err(self.error("`x`"));
        }
        let canvas_h = self.expr()?;
        self.symbol(";")?;

        let mut items = Vec::new();
        loop {
            let pos = self.pos();
            let t = self.peek();
            if t.is_keyword("let") {
                self.advance();
                let name = self.ident("binding name")?;
                self.symbol("=")?;
                let value = self.expr()?;
                self.symbol(";")?;
                items.push(Item::Let(LetDecl { name, value, pos }));
            } else if t.is_keyword("region") {
                self.advance();
                let name = self.ident("region name")?;
                let color = self.color()?;
                self.keyword("rect")?;
                let (x, y, w, h) = (self.expr()?, self.expr()?, self.expr()?, self.expr()?);
                self.symbol(";")?;
                items.push(Item::Region(RegionDecl { name, color, x, y, w, h, pos }));
            } else if t.is_keyword("star") {
                self.advance();
                let color = self.color()?;
                self.keyword("at")?;
                let center = if self.peek().is_keyword("diagonal_intersection") {
                    self.advance();
                    self.keyword("of")?;
                    let pos = self.pos();
                    StarCenter::DiagonalIntersection { region: self.ident("region name")?, pos }
                } else {
                    StarCenter::Point(self.expr()?, self.expr()?)
                };
                self.keyword("diameter")?;
                let diameter = self.expr()?;
                self.symbol(";")?;
                items.push(Item::Star(StarDecl { color, center, diameter, pos }));
            } else if t.is_symbol("}") {
                self.advance();
                break;
            } else {
                return Err(self.error("`let`, `region`, `star` or `}`"));
            }
        }
        Ok(SpecAst { name, canvas_w, canvas_h, items })
    }

    /// Counts one level of tree depth; operator chains count too, since
    /// `a + b + c` nests as deeply as `(a + b) + c`.
    fn enter(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.error(format!("expression nested at most {MAX_DEPTH} deep")));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<ExprAst, ParseError> {
        let saved = self.depth;
        self.enter()?;
        let result = self.sum();
        self.depth = saved;
        result
    }

    fn sum(&mut self) -> Result<ExprAst, ParseError> {
        let saved = self.depth;
        let mut lhs = self.product()?;
        loop {
            let op = match self.peek() {
                t if t.is_symbol("+") => BinOp::Add,
                t if t.is_symbol("-") => BinOp::Sub,
                _ => {
                    self.depth = saved;
                    return Ok(lhs);
                }
            };
            let pos = self.pos();
            self.enter()?;
            self.advance();
            let rhs = self.product()?;
            lhs = ExprAst { kind: ExprAstKind::Binary(op, Box::new(lhs), Box::new(rhs)), pos };
        }
    }

    fn product(&mut self) -> Result<ExprAst, ParseError> {
        let saved = self.depth;
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                t if t.is_symbol("*") => BinOp::Mul,
                t if t.is_symbol("/") => BinOp::Div,
                _ => {
                    self.depth = saved;
                    return Ok(lhs);
                }
            };
            let pos = self.pos();
            self.enter()?;
            self.advance();
            let rhs = self.unary()?;
            lhs = ExprAst { kind: ExprAstKind::Binary(op, Box::new(lhs), Box::new(rhs)), pos };
        }
    }

    fn unary(&mut self) -> Result<ExprAst, ParseError> {
        let pos = self.pos();
        if self.peek().is_symbol("-") {
            let saved = self.depth;
            self.enter()?;
            self.advance();
            let inner = self.unary();
            self.depth = saved;
            return Ok(ExprAst { kind: ExprAstKind::Neg(Box::new(inner?)), pos });
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<ExprAst, ParseError> {
        let pos = self.pos();
        let t = self.peek();
        let kind = match t.kind {
            TokenKind::Number => {
                let q = parse_rational(&t.lexeme).ok_or_else(|| self.error("number"))?;
                self.advance();
                ExprAstKind::Number(q)
            }
            TokenKind::Ident => {
                self.advance();
                ExprAstKind::Ident(t.lexeme.clone())
            }
            TokenKind::Keyword if t.lexeme == "phi" => {
                self.advance();
                ExprAstKind::Phi
            }
            TokenKind::Keyword if t.lexeme == "sqrt" => {
                self.advance();
                self.symbol("(")?;
                let inner = self.expr()?;
                self.symbol(")")?;
                ExprAstKind::Sqrt(Box::new(inner))
            }
            TokenKind::Symbol if t.lexeme == "(" => {
                self.advance();
                let inner = self.expr()?;
                self.symbol(")")?;
                return Ok(inner);
            }
            _ => return Err(self.error("expression")),
        };
        Ok(ExprAst { kind, pos })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, ratio};
    use crate::flagspec::tokenize;

    fn expr(src: &str) -> Result<ExprAst, ParseError> {
        parse_expression(&tokenize(src).unwrap())
    }

    fn spec(src: &str) -> Result<SpecAst, ParseError> {
        parse(&tokenize(src).unwrap())
    }

    #[test]
    fn precedence_and_associativity() {
        let e = expr("1 - 2 - 3").unwrap();
        let ExprAstKind::Binary(BinOp::Sub, lhs, rhs) = e.kind else { panic!() };
        assert!(matches!(lhs.kind, ExprAstKind::Binary(BinOp::Sub, _, _)));
        assert_eq!(rhs.kind, ExprAstKind::Number(int(3)));

        let e = expr("-2*3").unwrap();
        let ExprAstKind::Binary(BinOp::Mul, lhs, _) = e.kind else { panic!() };
        assert!(matches!(lhs.kind, ExprAstKind::Neg(_)));

        let e = expr("1 + 3/5 * phi").unwrap();
        let ExprAstKind::Binary(BinOp::Add, _, rhs) = e.kind else { panic!() };
        let ExprAstKind::Binary(BinOp::Mul, l, r) = rhs.kind else { panic!() };
        assert_eq!(l.kind, ExprAstKind::Number(ratio(3, 5)));
        assert_eq!(r.kind, ExprAstKind::Phi);
    }

    #[test]
    fn minimal_spec() {
        let s = spec("flag \"m\" { canvas 3 x 2; region r red rect 0 0 3 2; }").unwrap();
        assert_eq!(s.name, "m");
        assert_eq!(s.regions().count(), 1);
        assert_eq!(s.stars().count(), 0);
    }

    #[test]
    fn missing_height_expression() {
        let e = spec("flag \"m\" {\n canvas 3 x 2;\n region r red rect 0 0 3;\n}").unwrap_err();
        assert_eq!(e.expected, "expression");
        assert_eq!(e.found, "`;`");
        assert_eq!((e.line, e.col), (3, 25));
    }

    #[test]
    fn canvas_needs_x() {
        let e = spec("flag \"m\" { canvas 3 by 2; }").unwrap_err();
        assert_eq!(e.expected, "`x`");
        assert_eq!(e.col, 21);
    }

    #[test]
    fn unknown_color() {
        let e = spec("flag \"m\" { canvas 1 x 1; region r purple rect 0 0 1 1; }").unwrap_err();
        assert!(e.expected.starts_with("color"));
        assert_eq!(e.found, "identifier `purple`");
    }

    #[test]
    fn star_forms() {
        let s = spec(
            "flag \"s\" { canvas 1 x 1; region b blue rect 0 0 1 1;\n\
             star white at diagonal_intersection of b diameter 1/2;\n\
             star yellow at 1/2 1/2 diameter 1/4; }",
        )
        .unwrap();
        let stars: Vec<_> = s.stars().collect();
        assert!(matches!(&stars[0].center, StarCenter::DiagonalIntersection { region, .. } if region == "b"));
        assert!(matches!(stars[1].center, StarCenter::Point(..)));
    }

    #[test]
    fn deep_nesting_is_an_error_not_a_crash() {
        let src = "(".repeat(10_000) + "1" + &")".repeat(10_000);
        let e = expr(&src).unwrap_err();
        assert!(e.expected.contains("nested"));
        let src = "-".repeat(10_000) + "1";
        assert!(expr(&src).is_err());
        let ok = "(".repeat(100) + "1" + &")".repeat(100);
        assert!(expr(&ok).is_ok());
        let chain = vec!["1"; 10_000].join("+");
        assert!(expr(&chain).unwrap_err().expected.contains("nested"));
        assert!(expr(&vec!["1"; 100].join("*")).is_ok());
    }

    #[test]
    fn trailing_tokens_rejected() {
        let e = expr("1 2").unwrap_err();
        assert_eq!(e.expected, "end of input");
        assert_eq!(e.col, 3);
    }
}
