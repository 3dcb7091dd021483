use std::sync::Arc;

use mvlab::crystal::{MvCrystal, SimplyLaced};
use mvlab::folding::FoldedContext;
use mvlab::rootsys::RootSystem;
use mvlab::Error;

/// A root system named on the command line: simply laced, or folded as `X@Y`.
pub enum Target {
    Simple(SimplyLaced),
    Folded(Box<FoldedContext>),
}

impl Target {
    pub fn parse(label: &str, experimental: bool) -> mvlab::Result<Self> {
        if label.contains('@') {
            return Ok(Target::Folded(Box::new(FoldedContext::build(label, experimental)?)));
        }
        let rs = RootSystem::from_label(label, experimental)?;
        if !rs.is_simply_laced() {
            let hint: Vec<&str> =
                mvlab::folding::folding_names().filter(|n| n.starts_with(rs.name())).collect();
            return Err(Error::UseFolding(format!("{} (try {})", rs.name(), hint.join(" or "))));
        }
        Ok(Target::Simple(SimplyLaced::new(Arc::new(rs))?))
    }

    pub fn crystal(&self) -> &dyn MvCrystal {
        match self {
            Target::Simple(c) => c,
            Target::Folded(c) => c.as_ref(),
        }
    }

    pub fn folded(&self) -> Option<&FoldedContext> {
        match self {
            Target::Simple(_) => None,
            Target::Folded(c) => Some(c),
        }
    }
}
