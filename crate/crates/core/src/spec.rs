//! The group-spec expression language.
//!
//! ```text
//! atom := Cyc(n) | Dih(n) | Dic(n) | Sym(n) | Alt(n) | ElemAb(p,k)
//!       | Heis(p) | Wr(p) | file:<path>
//! expr := atom | prod(expr, expr)
//! ```
//!
//! Whitespace between tokens is ignored. `Dih(n)` takes the group order.

use std::fmt;
use std::path::PathBuf;

use thiserror::Error;

use crate::constructors::{self, DirectProduct};
use crate::error::Result;
use crate::genfile;
use crate::group::FiniteGroup;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyc(u64),
    Dih(u64),
    Dic(u64),
    Sym(u64),
    Alt(u64),
    ElemAb(u64, u64),
    Heis(u64),
    Wr(u64),
    File(PathBuf),
    Prod(Box<GroupSpec>, Box<GroupSpec>),
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("group spec: {message} at offset {offset}")]
pub struct SpecError {
    pub offset: usize,
    pub message: String,
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<Self, SpecError> {
        let mut p = Parser { text, pos: 0 };
        let spec = p.expr()?;
        p.skip_ws();
        if p.pos != text.len() {
            return Err(p.error("trailing input"));
        }
        Ok(spec)
    }

    pub fn prod(a: GroupSpec, b: GroupSpec) -> Self {
        GroupSpec::Prod(Box::new(a), Box::new(b))
    }

    /// Constructs the group, enforcing the order cap at every step.
    pub fn build(&self, cap: usize) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Prod(a, b) => Ok(self.build_product(a, b, cap)?.group),
            GroupSpec::Cyc(n) => constructors::cyclic(*n, cap),
            GroupSpec::Dih(n) => constructors::dihedral(*n, cap),
            GroupSpec::Dic(n) => constructors::dicyclic(*n, cap),
            GroupSpec::Sym(n) => constructors::symmetric(*n, cap),
            GroupSpec::Alt(n) => constructors::alternating(*n, cap),
            GroupSpec::ElemAb(p, k) => constructors::elementary_abelian(*p, *k, cap),
            GroupSpec::Heis(p) => constructors::heisenberg(*p, cap),
            GroupSpec::Wr(p) => constructors::wreath_cyclic(*p, cap),
            GroupSpec::File(path) => genfile::load_group_file(path, cap),
        }
    }

    fn build_product(&self, a: &GroupSpec, b: &GroupSpec, cap: usize) -> Result<DirectProduct> {
        let left = a.build(cap)?;
        let right = b.build(cap)?;
        constructors::direct_product(&left, &right, cap)
    }

    /// For `prod(a, b)`: the product together with both factors and the
    /// embedding data; `None` for atoms.
    pub fn build_factored(
        &self,
        cap: usize,
    ) -> Result<Option<(FiniteGroup, FiniteGroup, DirectProduct)>> {
        match self {
            GroupSpec::Prod(a, b) => {
                let left = a.build(cap)?;
                let right = b.build(cap)?;
                let product = constructors::direct_product(&left, &right, cap)?;
                Ok(Some((left, right, product)))
            }
            _ => Ok(None),
        }
    }
}

impl std::str::FromStr for GroupSpec {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, SpecError> {
        GroupSpec::parse(s)
    }
}

/// Canonical form: no whitespace, `prod(a,b)`.
impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyc(n) => write!(f, "Cyc({n})"),
            GroupSpec::Dih(n) => write!(f, "Dih({n})"),
            GroupSpec::Dic(n) => write!(f, "Dic({n})"),
            GroupSpec::Sym(n) => write!(f, "Sym({n})"),
            GroupSpec::Alt(n) => write!(f, "Alt({n})"),
            GroupSpec::ElemAb(p, k) => write!(f, "ElemAb({p},{k})"),
            GroupSpec::Heis(p) => write!(f, "Heis({p})"),
            GroupSpec::Wr(p) => write!(f, "Wr({p})"),
            GroupSpec::File(path) => write!(f, "file:{}", path.display()),
            GroupSpec::Prod(a, b) => write!(f, "prod({a},{b})"),
        }
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> SpecError {
        SpecError {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn expect(&mut self, c: char) -> Result<(), SpecError> {
        self.skip_ws();
        match self.rest().chars().next() {
            Some(found) if found == c => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(found) => Err(self.error(format!("expected '{c}', found '{found}'"))),
            None => Err(self.error(format!("expected '{c}', found end of input"))),
        }
    }

    fn ident(&mut self) -> Result<&str, SpecError> {
        self.skip_ws();
        let start = self.pos;
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_alphanumeric())
            .unwrap_or(self.rest().len());
        if len == 0 {
            return Err(match self.rest().chars().next() {
                Some(c) => self.error(format!("expected a group expression, found '{c}'")),
                None => self.error("expected a group expression, found end of input"),
            });
        }
        self.pos += len;
        Ok(&self.text[start..start + len])
    }

    fn number(&mut self) -> Result<u64, SpecError> {
        self.skip_ws();
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.rest().len());
        if len == 0 {
            return Err(match self.rest().chars().next() {
                Some(c) => self.error(format!("expected a number, found '{c}'")),
                None => self.error("expected a number, found end of input"),
            });
        }
        let value = self.rest()[..len]
            .parse()
            .map_err(|_| self.error("number too large"))?;
        self.pos += len;
        Ok(value)
    }

    fn args<const N: usize>(&mut self) -> Result<[u64; N], SpecError> {
        self.expect('(')?;
        let mut out = [0; N];
        for (i, slot) in out.iter_mut().enumerate() {
            if i > 0 {
                self.expect(',')?;
            }
            *slot = self.number()?;
        }
        self.expect(')')?;
        Ok(out)
    }

    fn expr(&mut self) -> Result<GroupSpec, SpecError> {
        self.skip_ws();
        let start = self.pos;
        let name = self.ident()?;
        Ok(match name {
            "prod" => {
                self.expect('(')?;
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(')')?;
                GroupSpec::prod(a, b)
            }
            "file" => {
                self.expect(':')?;
                self.skip_ws();
                let len = self.rest().find([',', ')']).unwrap_or(self.rest().len());
                let path = self.rest()[..len].trim_end();
                if path.is_empty() {
                    return Err(self.error("expected a path"));
                }
                let path = PathBuf::from(path);
                self.pos += len;
                GroupSpec::File(path)
            }
            "Cyc" => GroupSpec::Cyc(self.args::<1>()?[0]),
            "Dih" => GroupSpec::Dih(self.args::<1>()?[0]),
            "Dic" => GroupSpec::Dic(self.args::<1>()?[0]),
            "Sym" => GroupSpec::Sym(self.args::<1>()?[0]),
            "Alt" => GroupSpec::Alt(self.args::<1>()?[0]),
            "Heis" => GroupSpec::Heis(self.args::<1>()?[0]),
            "Wr" => GroupSpec::Wr(self.args::<1>()?[0]),
            "ElemAb" => {
                let [p, k] = self.args::<2>()?;
                GroupSpec::ElemAb(p, k)
            }
            other => {
                let message = format!("unknown atom '{other}'");
                return Err(SpecError {
                    offset: start,
                    message,
                });
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn product_of_dihedrals() {
        assert_eq!(
            GroupSpec::parse("prod(Dih(8),Dih(8))").unwrap(),
            GroupSpec::prod(GroupSpec::Dih(8), GroupSpec::Dih(8))
        );
    }

    #[test]
    fn wreath_atom() {
        assert_eq!(GroupSpec::parse("Wr(3)").unwrap(), GroupSpec::Wr(3));
    }

    #[test]
    fn unclosed_argument_reports_offset() {
        let err = GroupSpec::parse("prod(Dih(8),").unwrap_err();
        assert_eq!(err.offset, 12);
    }

    #[test]
    fn whitespace_insensitive() {
        assert_eq!(
            GroupSpec::parse("  prod ( ElemAb( 2 , 3 ) ,Cyc(4) ) ").unwrap(),
            GroupSpec::prod(GroupSpec::ElemAb(2, 3), GroupSpec::Cyc(4))
        );
    }

    #[test]
    fn errors() {
        let err = GroupSpec::parse("Foo(3)").unwrap_err();
        assert_eq!(err.offset, 0);
        assert!(err.message.contains("unknown atom"));
        assert_eq!(GroupSpec::parse("Cyc(3) x").unwrap_err().offset, 7);
        assert_eq!(GroupSpec::parse("Cyc()").unwrap_err().offset, 4);
        assert_eq!(GroupSpec::parse("ElemAb(2)").unwrap_err().offset, 8);
        assert!(GroupSpec::parse("").is_err());
        assert!(GroupSpec::parse("Cyc(99999999999999999999999)").is_err());
    }

    #[test]
    fn file_atoms() {
        assert_eq!(
            GroupSpec::parse("prod(file: a/b.gens ,Cyc(2))").unwrap(),
            GroupSpec::prod(GroupSpec::File("a/b.gens".into()), GroupSpec::Cyc(2))
        );
        assert!(GroupSpec::parse("file:").is_err());
    }

    #[test]
    fn build_sizes() {
        let g = GroupSpec::parse("prod(Dih(8),Cyc(3))")
            .unwrap()
            .build(5000)
            .unwrap();
        assert_eq!(g.order(), 24);
    }

    fn arb_spec() -> impl Strategy<Value = GroupSpec> {
        let leaf = prop_oneof![
            (0u64..100).prop_map(GroupSpec::Cyc),
            (0u64..100).prop_map(GroupSpec::Dih),
            (0u64..100).prop_map(GroupSpec::Dic),
            (0u64..10).prop_map(GroupSpec::Sym),
            (0u64..10).prop_map(GroupSpec::Alt),
            (0u64..10, 0u64..5).prop_map(|(p, k)| GroupSpec::ElemAb(p, k)),
            (0u64..10).prop_map(GroupSpec::Heis),
            (0u64..10).prop_map(GroupSpec::Wr),
            "[a-z/._]{1,12}".prop_map(|s| GroupSpec::File(s.into())),
        ];
        leaf.prop_recursive(4, 16, 2, |inner| {
            (inner.clone(), inner).prop_map(|(a, b)| GroupSpec::prod(a, b))
        })
    }

    proptest! {
        #[test]
        fn canonical_printer_round_trips(spec in arb_spec()) {
            let printed = spec.to_string();
            prop_assert_eq!(GroupSpec::parse(&printed).unwrap(), spec);
        }
    }
}
