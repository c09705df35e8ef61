//! Instance specifications (`I3`, `prod:I2xI3`, `groupoid:path`, `cn:2`, ...)
//! and element parsing for every instance type.

use std::fmt;
use std::path::Path;

use thiserror::Error;

use crate::cuntz::{CuntzError, CuntzMonoid};
use crate::finite::{
    FiniteError, FiniteGroupoid, LocalBisectionMonoid, Product, SymmetricInverseMonoid,
};
use crate::monoid::BooleanInverseMonoid;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("unknown instance `{0}` (expected I<n>, prod:I<a>xI<b>, groupoid:<path>, pair:<k>, cyclic:<m>, discrete:<k> or cn:<n>)")]
    Unknown(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error(transparent)]
    Finite(#[from] FiniteError),
    #[error(transparent)]
    Cuntz(#[from] CuntzError),
}

/// Parsing of element text in a given instance.
pub trait ElementSyntax: BooleanInverseMonoid {
    fn parse_text(&self, text: &str) -> Result<Self::Element, String>;
}

impl ElementSyntax for SymmetricInverseMonoid {
    fn parse_text(&self, text: &str) -> Result<Self::Element, String> {
        self.parse_element(text).map_err(|e| e.to_string())
    }
}

impl ElementSyntax for LocalBisectionMonoid {
    fn parse_text(&self, text: &str) -> Result<Self::Element, String> {
        self.parse_element(text).map_err(|e| e.to_string())
    }
}

/// Maps `{d->r, ...}`, or clopens `[w, ...]` read as idempotents.
impl ElementSyntax for CuntzMonoid {
    fn parse_text(&self, text: &str) -> Result<Self::Element, String> {
        if text.trim_start().starts_with('[') {
            return self
                .parse_clopen(text)
                .map(|e| e.to_map())
                .map_err(|e| e.to_string());
        }
        self.parse_element(text).map_err(|e| e.to_string())
    }
}

/// `(a, b)` with the components split at the top-level comma.
impl<S: ElementSyntax, T: ElementSyntax> ElementSyntax for Product<S, T> {
    fn parse_text(&self, text: &str) -> Result<Self::Element, String> {
        let body = text
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| format!("expected (left, right), got `{text}`"))?;
        let mut depth = 0i32;
        let split = body.char_indices().find_map(|(i, ch)| {
            match ch {
                '{' | '[' | '(' => depth += 1,
                '}' | ']' | ')' => depth -= 1,
                ',' if depth == 0 => return Some(i),
                _ => {}
            }
            None
        });
        let i = split.ok_or_else(|| format!("expected (left, right), got `{text}`"))?;
        Ok((
            self.left.parse_text(&body[..i])?,
            self.right.parse_text(&body[i + 1..])?,
        ))
    }
}

#[derive(Clone, Debug)]
pub enum FiniteInstance {
    Symmetric(SymmetricInverseMonoid),
    Product(Product<SymmetricInverseMonoid, SymmetricInverseMonoid>),
    Bisections(LocalBisectionMonoid),
}

#[derive(Clone, Debug)]
pub enum Instance {
    Finite(FiniteInstance),
    Cuntz(CuntzMonoid),
}

/// Evaluates an expression generic in the finite monoid.
#[macro_export]
macro_rules! with_finite {
    ($instance:expr, $s:ident => $body:expr) => {
        match $instance {
            $crate::instance::FiniteInstance::Symmetric($s) => $body,
            $crate::instance::FiniteInstance::Product($s) => $body,
            $crate::instance::FiniteInstance::Bisections($s) => $body,
        }
    };
}

fn symmetric(text: &str) -> Option<Result<SymmetricInverseMonoid, FiniteError>> {
    let n = text.strip_prefix('I').or_else(|| text.strip_prefix('i'))?;
    Some(SymmetricInverseMonoid::new(n.parse().ok()?))
}

fn number(text: &str, spec: &str) -> Result<usize, InstanceError> {
    text.parse()
        .map_err(|_| InstanceError::Unknown(spec.to_string()))
}

impl Instance {
    pub fn parse(spec: &str) -> Result<Self, InstanceError> {
        let spec = spec.trim();
        let unknown = || InstanceError::Unknown(spec.to_string());
        if let Some(s) = symmetric(spec) {
            return Ok(Instance::Finite(FiniteInstance::Symmetric(s?)));
        }
        let (kind, arg) = spec.split_once(':').ok_or_else(unknown)?;
        let bisections = |g: FiniteGroupoid, label: &str| -> Result<Self, InstanceError> {
            Ok(Instance::Finite(FiniteInstance::Bisections(
                LocalBisectionMonoid::named(g, label)?,
            )))
        };
        match kind {
            "prod" => {
                let (a, b) = arg.split_once(['x', '×']).ok_or_else(unknown)?;
                let a = symmetric(a).ok_or_else(unknown)??;
                let b = symmetric(b).ok_or_else(unknown)??;
                Ok(Instance::Finite(FiniteInstance::Product(Product::new(
                    a, b,
                ))))
            }
            "groupoid" => {
                let text = std::fs::read_to_string(arg).map_err(|e| InstanceError::Io {
                    path: arg.to_string(),
                    message: e.to_string(),
                })?;
                let label = Path::new(arg)
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| arg.to_string());
                bisections(FiniteGroupoid::from_json(&text)?, &label)
            }
            "pair" => bisections(
                FiniteGroupoid::pair(number(arg, spec)?)?,
                &format!("pair{arg}"),
            ),
            "cyclic" => bisections(
                FiniteGroupoid::cyclic_group(number(arg, spec)?)?,
                &format!("Z{arg}"),
            ),
            "discrete" => bisections(
                FiniteGroupoid::discrete(number(arg, spec)?)?,
                &format!("discrete{arg}"),
            ),
            "cn" => {
                let n: u8 = arg.parse().map_err(|_| unknown())?;
                Ok(Instance::Cuntz(CuntzMonoid::new(n)?))
            }
            _ => Err(unknown()),
        }
    }

    pub fn name(&self) -> String {
        use crate::monoid::FiniteMonoid;
        match self {
            Instance::Finite(f) => with_finite!(f, s => s.name()),
            Instance::Cuntz(c) => c.name(),
        }
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::FiniteMonoid;

    #[test]
    fn parses_specs() {
        assert_eq!(Instance::parse("I3").unwrap().name(), "I3");
        assert_eq!(Instance::parse("prod:I2xI3").unwrap().name(), "I2xI3");
        assert_eq!(Instance::parse("cn:2").unwrap().name(), "C2");
        assert_eq!(Instance::parse("pair:3").unwrap().name(), "B(pair3)");
        assert!(matches!(
            Instance::parse("J3"),
            Err(InstanceError::Unknown(_))
        ));
        assert!(matches!(
            Instance::parse("cn:1"),
            Err(InstanceError::Cuntz(_))
        ));
        assert!(matches!(
            Instance::parse("I9"),
            Err(InstanceError::Finite(_))
        ));
        assert!(matches!(
            Instance::parse("groupoid:/nonexistent.json"),
            Err(InstanceError::Io { .. })
        ));
    }

    #[test]
    fn parses_product_elements() {
        let Instance::Finite(FiniteInstance::Product(p)) = Instance::parse("prod:I2xI2").unwrap()
        else {
            panic!()
        };
        let x = p.parse_text("({1->2}, {1->1, 2->2})").unwrap();
        assert_eq!(p.render(&x), "({1->2}, {1->1, 2->2})");
        assert!(p.elements().contains(&x));
        assert!(p.parse_text("{1->2}").is_err());
    }
}
