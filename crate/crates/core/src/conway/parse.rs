use super::{ConwayError, TangleExpr, POLYHEDRON_SLOTS};

/// Parses one Conway symbol.
pub fn parse(text: &str) -> Result<TangleExpr, ConwayError> {
    let mut p = Parser { s: text.as_bytes(), pos: 0 };
    p.skip_ws();
    let t = p.symbol()?;
    p.skip_ws();
    if p.pos < p.s.len() {
        return Err(p.err(format!("unexpected {:?}", p.s[p.pos] as char)));
    }
    Ok(t)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: impl Into<String>) -> ConwayError {
        ConwayError::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn peek_at(&self, k: usize) -> Option<u8> {
        self.s.get(self.pos + k).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    /// Length of a leading polyhedron name like `6*` or `8**`, if present.
    fn polyhedron_prefix(&self) -> Option<usize> {
        let digits = self.s[self.pos..].iter().take_while(|c| c.is_ascii_digit()).count();
        if digits > 0 && self.peek_at(digits) == Some(b'*') {
            let stars = self.s[self.pos + digits..].iter().take_while(|&&c| c == b'*').count();
            Some(digits + stars)
        } else {
            None
        }
    }

    fn symbol(&mut self) -> Result<TangleExpr, ConwayError> {
        if let Some(len) = self.polyhedron_prefix() {
            let name = std::str::from_utf8(&self.s[self.pos..self.pos + len]).unwrap_or_default();
            if name != "6*" {
                return Err(ConwayError::UnknownPolyhedron(name.to_string()));
            }
            self.pos += len;
            return self.slots();
        }
        self.expr()
    }

    fn slots(&mut self) -> Result<TangleExpr, ConwayError> {
        let mut slots = Vec::new();
        loop {
            self.skip_ws();
            let empty = matches!(self.peek(), None | Some(b'.') | Some(b':') | Some(b')'));
            slots.push(if empty { TangleExpr::Int(1) } else { self.expr()? });
            self.skip_ws();
            match self.peek() {
                Some(b'.') => self.pos += 1,
                Some(b':') => {
                    self.pos += 1;
                    slots.push(TangleExpr::Int(1));
                }
                _ => break,
            }
            if slots.len() > POLYHEDRON_SLOTS {
                return Err(self.err("too many polyhedron slots"));
            }
        }
        if slots.len() > POLYHEDRON_SLOTS {
            return Err(self.err("too many polyhedron slots"));
        }
        slots.resize(POLYHEDRON_SLOTS, TangleExpr::Int(1));
        Ok(TangleExpr::Polyhedral(slots))
    }

    fn expr(&mut self) -> Result<TangleExpr, ConwayError> {
        let mut children = vec![self.product()?];
        loop {
            self.skip_ws();
            if self.peek() == Some(b',') {
                self.pos += 1;
                self.skip_ws();
                children.push(self.product()?);
            } else {
                break;
            }
        }
        let mut plus = 0i64;
        let start = self.pos;
        while let Some(c) = self.peek() {
            let step = match c {
                b'+' if plus >= 0 => 1,
                b'-' if plus <= 0 && !self.peek_at(1).is_some_and(|d| d.is_ascii_digit()) => -1,
                _ => break,
            };
            plus += step;
            self.pos += 1;
        }
        if children.len() == 1 {
            if plus != 0 {
                self.pos = start;
                return Err(self.err("'+'/'-' suffix needs a ramification"));
            }
            return Ok(children.pop().expect("one child"));
        }
        Ok(TangleExpr::Ramification { children, plus })
    }

    fn starts_atom(&self) -> bool {
        match self.peek() {
            Some(c) if c.is_ascii_digit() || c == b'(' => true,
            Some(b'-') => self.peek_at(1).is_some_and(|d| d.is_ascii_digit()),
            _ => false,
        }
    }

    fn product(&mut self) -> Result<TangleExpr, ConwayError> {
        if !self.starts_atom() {
            return Err(self.err("expected integer or '('"));
        }
        let mut atoms = vec![self.atom()?];
        loop {
            let save = self.pos;
            self.skip_ws();
            if self.starts_atom() && self.polyhedron_prefix().is_none() {
                atoms.push(self.atom()?);
            } else {
                self.pos = save;
                break;
            }
        }
        Ok(if atoms.len() == 1 { atoms.pop().expect("one atom") } else { TangleExpr::Product(atoms) })
    }

    fn atom(&mut self) -> Result<TangleExpr, ConwayError> {
        if self.peek() == Some(b'(') {
            self.pos += 1;
            self.skip_ws();
            if self.polyhedron_prefix().is_some() {
                return Err(self.err("a basic polyhedron is only allowed at top level"));
            }
            let t = self.expr()?;
            self.skip_ws();
            if self.peek() != Some(b')') {
                return Err(self.err("expected ')'"));
            }
            self.pos += 1;
            return Ok(t);
        }
        if self.polyhedron_prefix().is_some() {
            return Err(self.err("a basic polyhedron is only allowed at top level"));
        }
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap_or_default();
        text.parse().map(TangleExpr::Int).map_err(|_| ConwayError::Syntax {
            pos: start,
            msg: format!("bad integer {text:?}"),
        })
    }
}
