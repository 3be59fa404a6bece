use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Involution on the dual numbers: identity on ε, or ε ↦ −ε.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DualFlavor {
    Trivial,
    Conjugate,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingKind {
    Int,
    Rat,
    ComplexConj,
    Dual { flavor: DualFlavor, base: Ring },
    Mat { n: usize, base: Ring },
    Group { n: usize, base: Ring },
    /// Laurent polynomials in `var`. In q-mode σ sends the variable to its inverse.
    Laurent { var: String, base: Ring, qmode: bool },
}

/// Shared, immutable ring descriptor. Cheap to clone.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ring(Arc<RingKind>);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unsupported parameter at byte {offset}: {message}")]
    Unsupported { offset: usize, message: String },
}

impl Ring {
    pub fn new(kind: RingKind) -> Self {
        Ring(Arc::new(kind))
    }

    pub fn kind(&self) -> &RingKind {
        &self.0
    }

    pub fn int() -> Self {
        Ring::new(RingKind::Int)
    }

    pub fn rat() -> Self {
        Ring::new(RingKind::Rat)
    }

    pub fn complex_conj() -> Self {
        Ring::new(RingKind::ComplexConj)
    }

    pub fn dual(flavor: DualFlavor, base: Ring) -> Self {
        Ring::new(RingKind::Dual { flavor, base })
    }

    pub fn mat(n: usize, base: Ring) -> Self {
        assert!(n >= 1, "matrix size must be positive");
        Ring::new(RingKind::Mat { n, base })
    }

    pub fn group(n: usize, base: Ring) -> Self {
        assert!(n >= 2, "cyclic group order must be at least 2");
        Ring::new(RingKind::Group { n, base })
    }

    pub fn laurent(var: &str, base: Ring) -> Self {
        Ring::new(RingKind::Laurent { var: var.to_string(), base, qmode: false })
    }

    /// Laurent ring in `s` with σ(s) = s⁻¹, the carrier of the quantum deformation.
    pub fn qlaurent(var: &str, base: Ring) -> Self {
        Ring::new(RingKind::Laurent { var: var.to_string(), base, qmode: true })
    }

    pub fn base(&self) -> Option<&Ring> {
        match self.kind() {
            RingKind::Int | RingKind::Rat | RingKind::ComplexConj => None,
            RingKind::Dual { base, .. }
            | RingKind::Mat { base, .. }
            | RingKind::Group { base, .. }
            | RingKind::Laurent { base, .. } => Some(base),
        }
    }

    pub fn is_scalar(&self) -> bool {
        matches!(self.kind(), RingKind::Int | RingKind::Rat)
    }

    pub fn is_commutative(&self) -> bool {
        match self.kind() {
            RingKind::Int | RingKind::Rat | RingKind::ComplexConj => true,
            RingKind::Mat { n, base } => *n == 1 && base.is_commutative(),
            RingKind::Dual { base, .. } | RingKind::Group { base, .. } | RingKind::Laurent { base, .. } => {
                base.is_commutative()
            }
        }
    }

    /// Whether ½ lies in the ring (everything built over the rationals or ℚ(i)).
    pub fn has_half(&self) -> bool {
        match self.kind() {
            RingKind::Int => false,
            RingKind::Rat | RingKind::ComplexConj => true,
            _ => self.base().map(Ring::has_half).unwrap_or(false),
        }
    }

    pub fn is_qmode(&self) -> bool {
        matches!(self.kind(), RingKind::Laurent { qmode: true, .. })
    }

    /// Canonical spec string. Bases are always printed, except the integer base of a dual ring.
    pub fn spec(&self) -> String {
        match self.kind() {
            RingKind::Int => "int".into(),
            RingKind::Rat => "rat".into(),
            RingKind::ComplexConj => "complex-conj".into(),
            RingKind::Dual { flavor, base } => {
                let f = match flavor {
                    DualFlavor::Trivial => "triv",
                    DualFlavor::Conjugate => "conj",
                };
                if matches!(base.kind(), RingKind::Int) {
                    format!("dual:{f}")
                } else {
                    format!("dual:{f}:{}", base.spec())
                }
            }
            RingKind::Mat { n, base } => format!("mat:{n}:{}", base.spec()),
            RingKind::Group { n, base } => format!("group:Z{n}:{}", base.spec()),
            RingKind::Laurent { var, base, qmode } => {
                let head = if *qmode { "qlaurent" } else { "laurent" };
                format!("{head}:{var}:{}", base.spec())
            }
        }
    }

    /// Same as [`Ring::spec`] but q-mode Laurent layers print as plain `laurent:`.
    /// Pair it with a `"qmode": true` flag.
    pub fn plain_spec(&self) -> String {
        match self.kind() {
            RingKind::Laurent { var, base, qmode: true } => format!("laurent:{var}:{}", base.spec()),
            _ => self.spec(),
        }
    }

    pub fn parse(text: &str) -> Result<Ring, SpecError> {
        parse_ring_spec(text)
    }

    /// Parses a spec and, if `qmode` is set, turns the outermost Laurent layer into q-mode.
    pub fn parse_with_qmode(text: &str, qmode: bool) -> Result<Ring, SpecError> {
        let ring = parse_ring_spec(text)?;
        if !qmode {
            return Ok(ring);
        }
        match ring.kind() {
            RingKind::Laurent { var, base, .. } => Ok(Ring::qlaurent(var, base.clone())),
            _ => Err(SpecError::Unsupported {
                offset: 0,
                message: "qmode requires a laurent ring".into(),
            }),
        }
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({})", self.spec())
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec())
    }
}

pub fn parse_ring_spec(text: &str) -> Result<Ring, SpecError> {
    let mut p = SpecParser { text, pos: 0 };
    let ring = p.ring()?;
    if p.pos != text.len() {
        return Err(p.syntax("trailing input"));
    }
    Ok(ring)
}

struct SpecParser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> SpecParser<'a> {
    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn syntax(&self, message: &str) -> SpecError {
        SpecError::Syntax { offset: self.pos, message: message.into() }
    }

    fn eat(&mut self, lit: &str) -> bool {
        if self.rest().starts_with(lit) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, lit: &str) -> Result<(), SpecError> {
        if self.eat(lit) {
            Ok(())
        } else {
            Err(self.syntax(&format!("expected `{lit}`")))
        }
    }

    fn int(&mut self) -> Result<(usize, usize), SpecError> {
        let start = self.pos;
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.syntax("expected integer"));
        }
        self.pos += digits;
        let n = self.text[start..self.pos]
            .parse::<usize>()
            .map_err(|_| SpecError::Unsupported { offset: start, message: "integer too large".into() })?;
        Ok((n, start))
    }

    fn ident(&mut self) -> Result<String, SpecError> {
        let start = self.pos;
        let len = self
            .rest()
            .char_indices()
            .take_while(|(i, c)| c.is_ascii_alphabetic() || c == &'_' || (*i > 0 && c.is_ascii_digit()))
            .map(|(_, c)| c.len_utf8())
            .sum::<usize>();
        if len == 0 {
            return Err(self.syntax("expected identifier"));
        }
        self.pos += len;
        Ok(self.text[start..self.pos].to_string())
    }

    fn optional_base(&mut self) -> Result<Ring, SpecError> {
        if self.eat(":") {
            self.ring()
        } else {
            Ok(Ring::int())
        }
    }

    fn ring(&mut self) -> Result<Ring, SpecError> {
        if self.eat("int") {
            return Ok(Ring::int());
        }
        if self.eat("rat") {
            return Ok(Ring::rat());
        }
        if self.eat("complex-conj") {
            return Ok(Ring::complex_conj());
        }
        if self.eat("dual:") {
            let flavor = if self.eat("triv") {
                DualFlavor::Trivial
            } else if self.eat("conj") {
                DualFlavor::Conjugate
            } else {
                return Err(self.syntax("expected `triv` or `conj`"));
            };
            let base = self.optional_base()?;
            return Ok(Ring::dual(flavor, base));
        }
        if self.eat("mat:") {
            let (n, at) = self.int()?;
            if n == 0 {
                return Err(SpecError::Unsupported { offset: at, message: "matrix size must be at least 1".into() });
            }
            self.expect(":")?;
            let base = self.ring()?;
            return Ok(Ring::mat(n, base));
        }
        if self.eat("group:Z") {
            let (n, at) = self.int()?;
            if n < 2 {
                return Err(SpecError::Unsupported { offset: at, message: format!("group:Z{n} needs order at least 2") });
            }
            let base = self.optional_base()?;
            return Ok(Ring::group(n, base));
        }
        let qmode = if self.eat("qlaurent:") {
            true
        } else if self.eat("laurent:") {
            false
        } else {
            return Err(self.syntax("unknown ring"));
        };
        let var = self.ident()?;
        let base = self.optional_base()?;
        Ok(if qmode { Ring::qlaurent(&var, base) } else { Ring::laurent(&var, base) })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_base_cases() {
        assert_eq!(Ring::parse("int").unwrap(), Ring::int());
        assert_eq!(Ring::parse("group:Z5").unwrap(), Ring::group(5, Ring::int()));
        assert_eq!(Ring::parse("group:Z5:int").unwrap().spec(), "group:Z5:int");
    }

    #[test]
    fn nested_spec_round_trips() {
        for s in ["mat:2:laurent:t:int", "dual:conj", "dual:triv:mat:2:rat", "qlaurent:s:mat:3:int", "group:Z4:rat"] {
            let r = Ring::parse(s).unwrap();
            assert_eq!(r.spec(), s);
            assert_eq!(Ring::parse(&r.spec()).unwrap(), r);
        }
    }

    #[test]
    fn reports_offsets() {
        assert_eq!(
            Ring::parse("mat:2:foo"),
            Err(SpecError::Syntax { offset: 6, message: "unknown ring".into() })
        );
        assert!(matches!(Ring::parse("group:Z1"), Err(SpecError::Unsupported { offset: 7, .. })));
        assert!(matches!(Ring::parse("int:"), Err(SpecError::Syntax { offset: 3, .. })));
    }

    #[test]
    fn qmode_flag() {
        let r = Ring::parse_with_qmode("laurent:s:int", true).unwrap();
        assert!(r.is_qmode());
        assert_eq!(r.plain_spec(), "laurent:s:int");
        assert!(Ring::parse_with_qmode("int", true).is_err());
    }
}
