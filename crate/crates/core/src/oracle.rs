//! Interchangeable deciders for equality of words in a cactus group.

use crate::error::{Error, Result};
use crate::presentation::Presentation;
use crate::rewrite::{RewriteSystem, Status};
use crate::tess::TessBall;
use crate::words::Word;

pub trait WordOracle {
    fn name(&self) -> &'static str;

    fn presentation(&self) -> &Presentation;

    fn equal(&self, u: &Word, v: &Word) -> Result<bool>;

    fn is_trivial(&self, w: &Word) -> Result<bool> {
        self.equal(w, &Word::identity(w.degree()))
    }
}

/// Equality by tracing both words in a ball of the Cayley complex.
pub struct TessOracle(pub TessBall);

impl WordOracle for TessOracle {
    fn name(&self) -> &'static str {
        "tess"
    }

    fn presentation(&self) -> &Presentation {
        self.0.presentation()
    }

    fn equal(&self, u: &Word, v: &Word) -> Result<bool> {
        self.0.wp_equal(u, v)
    }
}

/// Equality of normal forms under a completed rewriting system.
pub struct KbOracle {
    presentation: Presentation,
    system: RewriteSystem,
}

impl KbOracle {
    pub fn new(p: &Presentation, max_rules: usize) -> Self {
        KbOracle {
            presentation: p.clone(),
            system: RewriteSystem::complete(p, max_rules),
        }
    }

    pub fn system(&self) -> &RewriteSystem {
        &self.system
    }
}

impl WordOracle for KbOracle {
    fn name(&self) -> &'static str {
        "kb"
    }

    fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    fn equal(&self, u: &Word, v: &Word) -> Result<bool> {
        if self.system.status() != Status::Confluent {
            return Err(Error::Undecided(format!(
                "rewriting system for {} is not confluent",
                self.presentation.name()
            )));
        }
        Ok(self.system.rewrite(u) == self.system.rewrite(v))
    }
}

pub const ORACLES: [&str; 2] = ["tess", "kb"];

/// Builds the named oracle; `size` is the ball radius for `tess` and the
/// rule cap for `kb`.
pub fn oracle(name: &str, p: &Presentation, size: u32) -> Result<Box<dyn WordOracle>> {
    match name {
        "tess" => Ok(Box::new(TessOracle(TessBall::build(p, size)?))),
        "kb" => Ok(Box::new(KbOracle::new(p, size as usize))),
        _ => Err(Error::Unknown {
            kind: "oracle",
            name: name.to_string(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::word;

    #[test]
    fn both_oracles_agree_on_the_nesting_relation() {
        let p = Presentation::named("j4-23").unwrap();
        let u = word("s12 s13", 4);
        let v = word("s13 s23", 4);
        for (name, size) in [("tess", 6), ("kb", 256)] {
            let o = oracle(name, &p, size).unwrap();
            assert_eq!(o.name(), name);
            assert!(o.equal(&u, &v).unwrap());
            assert!(!o.is_trivial(&u).unwrap());
        }
    }

    #[test]
    fn unknown_oracle() {
        let p = Presentation::named("j3-2").unwrap();
        assert!(oracle("coset", &p, 4).is_err());
    }
}
