use cedga_algebra::{Convention, Element, Generator, Presentation, Role};
use cedga_coeff::{BigRational, Coeff, CoeffRing};
use cedga_morphisms::{Augmentation, DgMap};

use crate::lexer::{tokenize, Tok, Token};
use crate::{Bundle, ParseError};

pub fn parse(text: &str) -> Result<Bundle, ParseError> {
    parse_with_context(text, &[])
}

/// Parses `text`; maps and augmentations may also refer to presentations
/// of the `context` bundles, which are not copied into the result.
pub fn parse_with_context(text: &str, context: &[&Bundle]) -> Result<Bundle, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        bundle: Bundle::new(CoeffRing::Rationals),
        started: false,
        default_convention: None,
        current: None,
        context,
    };
    p.file()?;
    Ok(p.bundle)
}

enum Val {
    Scalar(Coeff),
    Elem(Element),
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    bundle: Bundle,
    /// Whether anything but `ring` has been seen.
    started: bool,
    default_convention: Option<Convention>,
    current: Option<String>,
    context: &'a [&'a Bundle],
}

type PResult<T> = Result<T, ParseError>;

impl Parser<'_> {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err_at(t: &Token, message: impl Into<String>) -> ParseError {
        ParseError { line: t.line, column: t.column, message: message.into() }
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        Self::err_at(self.peek(), message)
    }

    fn is_sym(&self, s: &str) -> bool {
        matches!(&self.peek().tok, Tok::Sym(x) if *x == s)
    }

    fn eat_sym(&mut self, s: &str) -> bool {
        if self.is_sym(s) {
            self.next();
            true
        } else {
            false
        }
    }

    fn expect_sym(&mut self, s: &str) -> PResult<()> {
        if self.eat_sym(s) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{s}`")))
        }
    }

    fn ident(&mut self) -> PResult<(String, Token)> {
        let t = self.next();
        match &t.tok {
            Tok::Ident(s) => Ok((s.clone(), t.clone())),
            _ => Err(Self::err_at(&t, "expected a name")),
        }
    }

    fn keyword(&mut self, kw: &str) -> PResult<()> {
        let (s, t) = self.ident()?;
        if s == kw {
            Ok(())
        } else {
            Err(Self::err_at(&t, format!("expected `{kw}`")))
        }
    }

    fn integer(&mut self) -> PResult<i64> {
        let neg = self.eat_sym("-");
        let t = self.next();
        match &t.tok {
            Tok::Int(s) => {
                let v: i64 = s.parse().map_err(|_| Self::err_at(&t, "integer out of range"))?;
                Ok(if neg { -v } else { v })
            }
            _ => Err(Self::err_at(&t, "expected an integer")),
        }
    }

    fn end_of_statement(&mut self) -> PResult<()> {
        match self.peek().tok {
            Tok::Newline => {
                self.next();
                Ok(())
            }
            Tok::Eof => Ok(()),
            _ => Err(self.err("expected end of line")),
        }
    }

    fn file(&mut self) -> PResult<()> {
        loop {
            let t = self.peek().clone();
            match &t.tok {
                Tok::Eof => return Ok(()),
                Tok::Newline => {
                    self.next();
                    continue;
                }
                Tok::Ident(kw) => {
                    let kw = kw.clone();
                    self.next();
                    match kw.as_str() {
                        "ring" => self.ring_stmt(&t)?,
                        "convention" => self.convention_stmt()?,
                        "note" => self.note_stmt()?,
                        "presentation" => self.presentation_stmt()?,
                        "idempotents" => self.idempotents_stmt()?,
                        "gen" => self.gen_stmt()?,
                        "diff" => self.diff_stmt()?,
                        "map" => self.map_stmt()?,
                        "aug" => self.aug_stmt()?,
                        other => return Err(Self::err_at(&t, format!("unknown statement `{other}`"))),
                    }
                    if kw != "ring" {
                        self.started = true;
                    }
                }
                _ => return Err(Self::err_at(&t, "expected a statement")),
            }
            self.end_of_statement()?;
        }
    }

    fn ring_stmt(&mut self, at: &Token) -> PResult<()> {
        if self.started {
            return Err(Self::err_at(at, "`ring` must come before everything else"));
        }
        let (name, t) = self.ident()?;
        let mut text = name;
        if self.eat_sym("(") {
            let mut params = Vec::new();
            loop {
                params.push(self.ident()?.0);
                if !self.eat_sym(",") {
                    break;
                }
            }
            self.expect_sym(")")?;
            text = format!("{text}({})", params.join(","));
        }
        self.bundle.ring = text.parse().map_err(|e| Self::err_at(&t, format!("{e}")))?;
        Ok(())
    }

    fn convention_stmt(&mut self) -> PResult<()> {
        let (name, t) = self.ident()?;
        let c: Convention = name.parse().map_err(|e: String| Self::err_at(&t, e))?;
        match self.current.clone() {
            Some(cur) => self.bundle.presentations.get_mut(&cur).expect("current").set_convention(Some(c)),
            None => self.default_convention = Some(c),
        }
        Ok(())
    }

    fn note_stmt(&mut self) -> PResult<()> {
        let t = self.next();
        match t.tok {
            Tok::Str(s) => {
                self.bundle.notes.push(s);
                Ok(())
            }
            _ => Err(Self::err_at(&t, "expected a quoted string")),
        }
    }

    fn start_presentation(&mut self, name: &str, at: &Token) -> PResult<()> {
        if self.bundle.presentations.contains_key(name) {
            return Err(Self::err_at(at, format!("presentation `{name}` declared twice")));
        }
        let mut p = Presentation::new(name, self.bundle.ring.clone());
        p.set_convention(self.default_convention);
        self.bundle.insert(p);
        self.current = Some(name.to_string());
        Ok(())
    }

    fn presentation_stmt(&mut self) -> PResult<()> {
        let (name, t) = self.ident()?;
        self.start_presentation(&name, &t)
    }

    /// The presentation being defined, opening `main` implicitly.
    fn cur(&mut self) -> PResult<&mut Presentation> {
        if self.current.is_none() {
            let t = self.peek().clone();
            self.start_presentation("main", &t)?;
        }
        let name = self.current.clone().expect("set above");
        Ok(self.bundle.presentations.get_mut(&name).expect("current exists"))
    }

    fn idempotents_stmt(&mut self) -> PResult<()> {
        self.cur()?;
        while let Tok::Ident(_) = self.peek().tok {
            let (name, t) = self.ident()?;
            self.cur()?.add_idempotent(name).map_err(|e| Self::err_at(&t, e.to_string()))?;
        }
        Ok(())
    }

    fn gen_stmt(&mut self) -> PResult<()> {
        let (name, at) = self.ident()?;
        if self.bundle.ring.param_index(&name).is_some() {
            return Err(Self::err_at(&at, format!("`{name}` is a ring parameter")));
        }
        self.keyword("deg")?;
        let degree = self.integer()?;
        self.keyword("from")?;
        let (from, tf) = self.ident()?;
        self.keyword("to")?;
        let (to, tt) = self.ident()?;
        let p = self.cur()?;
        let source = p.idempotent_id(&from).ok_or_else(|| Self::err_at(&tf, format!("unknown idempotent `{from}`")))?;
        let target = p.idempotent_id(&to).ok_or_else(|| Self::err_at(&tt, format!("unknown idempotent `{to}`")))?;
        let mut role = Role::Long;
        let mut level = None;
        while let Tok::Ident(kw) = self.peek().tok.clone() {
            self.next();
            match kw.as_str() {
                "long" => role = Role::Long,
                "short" => role = Role::Short(self.ident()?.0),
                "level" => {
                    let t = self.peek().clone();
                    let v = self.integer()?;
                    level = Some(u32::try_from(v).map_err(|_| Self::err_at(&t, "level must be non-negative"))?);
                }
                other => return Err(self.err(format!("unexpected `{other}`"))),
            }
        }
        self.cur()?
            .add_generator(Generator { name, degree, source, target, role, level })
            .map_err(|e| Self::err_at(&at, e.to_string()))?;
        Ok(())
    }

    fn diff_stmt(&mut self) -> PResult<()> {
        let (name, at) = self.ident()?;
        let g = self
            .cur()?
            .generator_id(&name)
            .ok_or_else(|| Self::err_at(&at, format!("unknown generator `{name}`")))?;
        self.expect_sym("=")?;
        let p = self.cur()?.clone();
        let value = self.element(&p)?;
        self.cur()?.set_differential(g, value).map_err(|e| Self::err_at(&at, e.to_string()))?;
        Ok(())
    }

    fn lookup(&self, name: &str) -> Option<Presentation> {
        self.bundle
            .presentation(name)
            .or_else(|| self.context.iter().find_map(|b| b.presentation(name)))
            .cloned()
    }

    fn presentation_ref(&mut self) -> PResult<Presentation> {
        let (name, t) = self.ident()?;
        self.lookup(&name).ok_or_else(|| Self::err_at(&t, format!("unknown presentation `{name}`")))
    }

    fn map_stmt(&mut self) -> PResult<()> {
        let (name, at) = self.ident()?;
        if self.bundle.maps.contains_key(&name) {
            return Err(Self::err_at(&at, format!("map `{name}` declared twice")));
        }
        self.expect_sym(":")?;
        let src = self.presentation_ref()?;
        self.expect_sym("->")?;
        let tgt = self.presentation_ref()?;
        let mut phi = DgMap::new(name.clone(), &src, &tgt);
        self.expect_sym("{")?;
        while !self.eat_sym("}") {
            let (lhs, t) = self.ident()?;
            self.expect_sym("->")?;
            if let Some(e) = src.idempotent_id(&lhs) {
                let (rhs, rt) = self.ident()?;
                let f = tgt
                    .idempotent_id(&rhs)
                    .ok_or_else(|| Self::err_at(&rt, format!("`{rhs}` is not an idempotent of `{}`", tgt.name())))?;
                if phi.idempotents[e.index()].replace(f).is_some() {
                    return Err(Self::err_at(&t, format!("`{lhs}` assigned twice")));
                }
            } else if let Some(g) = src.generator_id(&lhs) {
                let v = self.element(&tgt)?;
                if phi.generators[g.index()].replace(v).is_some() {
                    return Err(Self::err_at(&t, format!("`{lhs}` assigned twice")));
                }
            } else {
                return Err(Self::err_at(&t, format!("`{lhs}` is not declared in `{}`", src.name())));
            }
            if !self.eat_sym(";") && !self.is_sym("}") {
                return Err(self.err("expected `;` or `}`"));
            }
        }
        self.bundle.maps.insert(name, phi);
        Ok(())
    }

    fn aug_stmt(&mut self) -> PResult<()> {
        let (name, at) = self.ident()?;
        if self.bundle.augmentations.contains_key(&name) {
            return Err(Self::err_at(&at, format!("augmentation `{name}` declared twice")));
        }
        self.keyword("on")?;
        let src = self.presentation_ref()?;
        self.keyword("scope")?;
        let mut scope = Vec::new();
        while let Tok::Ident(_) = self.peek().tok {
            scope.push(self.ident()?.0);
        }
        let mut eps = Augmentation::new(name.clone(), &src, scope);
        self.expect_sym("{")?;
        while !self.eat_sym("}") {
            let (lhs, t) = self.ident()?;
            let g = src
                .generator_id(&lhs)
                .ok_or_else(|| Self::err_at(&t, format!("`{lhs}` is not a generator of `{}`", src.name())))?;
            self.expect_sym("->")?;
            let vt = self.peek().clone();
            let v = match self.sum(&src)? {
                Val::Scalar(c) => c,
                Val::Elem(_) => return Err(Self::err_at(&vt, "augmentation values must be coefficients")),
            };
            if eps.values[g.index()].replace(v).is_some() {
                return Err(Self::err_at(&t, format!("`{lhs}` assigned twice")));
            }
            if !self.eat_sym(";") && !self.is_sym("}") {
                return Err(self.err("expected `;` or `}`"));
            }
        }
        self.bundle.augmentations.insert(name, eps);
        Ok(())
    }

    fn element(&mut self, p: &Presentation) -> PResult<Element> {
        Ok(match self.sum(p)? {
            Val::Scalar(c) => p.one().scale(&c),
            Val::Elem(x) => x,
        })
    }

    fn sum(&mut self, p: &Presentation) -> PResult<Val> {
        let mut acc: Option<Val> = None;
        loop {
            let negate = if self.eat_sym("-") {
                true
            } else if self.eat_sym("+") {
                false
            } else if let Some(v) = acc {
                return Ok(v);
            } else {
                false
            };
            let t = self.term(p)?;
            let t = if negate { neg(t) } else { t };
            acc = Some(match acc {
                None => t,
                Some(a) => add(p, a, t),
            });
        }
    }

    fn term(&mut self, p: &Presentation) -> PResult<Val> {
        let mut acc = self.factor(p)?;
        while self.is_sym("*") {
            let at = self.next();
            let f = self.factor(p)?;
            acc = mul(p, acc, f).map_err(|m| Self::err_at(&at, m))?;
        }
        Ok(acc)
    }

    fn factor(&mut self, p: &Presentation) -> PResult<Val> {
        let t = self.next();
        let ring = p.ring().clone();
        match &t.tok {
            Tok::Sym("(") => {
                let v = self.sum(p)?;
                self.expect_sym(")")?;
                Ok(v)
            }
            Tok::Int(n) => {
                let n: BigRational = BigRational::from_integer(n.parse().expect("digits"));
                let q = if self.eat_sym("/") {
                    let dt = self.next();
                    let Tok::Int(d) = &dt.tok else { return Err(Self::err_at(&dt, "expected a denominator")) };
                    let d: BigRational = BigRational::from_integer(d.parse().expect("digits"));
                    if d == BigRational::from_integer(0.into()) {
                        return Err(Self::err_at(&dt, "division by zero"));
                    }
                    n / d
                } else {
                    n
                };
                Coeff::from_rational(&ring, q).map(Val::Scalar).map_err(|e| Self::err_at(&t, e.to_string()))
            }
            Tok::Ident(name) => {
                if ring.param_index(name).is_some() {
                    let exp = if self.eat_sym("^") { self.integer()? } else { 1 };
                    return Ok(Val::Scalar(Coeff::param_power(&ring, name, exp).expect("parameter")));
                }
                if let Some(e) = p.idempotent_id(name) {
                    return Ok(Val::Elem(p.idem(e)));
                }
                if let Some(g) = p.generator_id(name) {
                    return Ok(Val::Elem(p.gen(g)));
                }
                Err(Self::err_at(&t, format!("`{name}` is not declared in `{}`", p.name())))
            }
            _ => Err(Self::err_at(&t, "expected a term")),
        }
    }
}

fn neg(v: Val) -> Val {
    match v {
        Val::Scalar(c) => Val::Scalar(-c),
        Val::Elem(x) => Val::Elem(-&x),
    }
}

fn add(p: &Presentation, a: Val, b: Val) -> Val {
    match (a, b) {
        (Val::Scalar(x), Val::Scalar(y)) => Val::Scalar(&x + &y),
        (Val::Scalar(x), Val::Elem(y)) | (Val::Elem(y), Val::Scalar(x)) => Val::Elem(&p.one().scale(&x) + &y),
        (Val::Elem(x), Val::Elem(y)) => Val::Elem(&x + &y),
    }
}

fn mul(p: &Presentation, a: Val, b: Val) -> Result<Val, String> {
    Ok(match (a, b) {
        (Val::Scalar(x), Val::Scalar(y)) => Val::Scalar(&x * &y),
        (Val::Scalar(x), Val::Elem(y)) | (Val::Elem(y), Val::Scalar(x)) => Val::Elem(y.scale(&x)),
        (Val::Elem(x), Val::Elem(y)) => {
            for (u, _) in x.terms() {
                for (v, _) in y.terms() {
                    if u.concat(v).is_none() {
                        return Err(format!("`{}*{}` is not composable", p.render_word(u), p.render_word(v)));
                    }
                }
            }
            Val::Elem(&x * &y)
        }
    })
}

/// Parses a single expression in the generators of `p`.
pub fn parse_element(p: &Presentation, text: &str) -> Result<Element, ParseError> {
    let toks = tokenize(text)?;
    let mut parser = Parser {
        toks,
        pos: 0,
        bundle: Bundle::new(p.ring().clone()),
        started: true,
        default_convention: None,
        current: None,
        context: &[],
    };
    let x = parser.element(p)?;
    while parser.peek().tok == Tok::Newline {
        parser.next();
    }
    if parser.peek().tok != Tok::Eof {
        return Err(parser.err("unexpected input after expression"));
    }
    Ok(x)
}
