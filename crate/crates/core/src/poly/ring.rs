use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

use super::{Monomial, Polynomial};

/// A polynomial ring over the rationals, identified by its ordered variable
/// names. Cloning is cheap.
#[derive(Clone)]
pub struct Ring {
    vars: Arc<[String]>,
}

impl Ring {
    pub fn new<S: AsRef<str>>(vars: &[S]) -> Result<Ring> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().trim().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            let mut chars = v.chars();
            let ok = matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
                && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!("invalid variable name `{v}`"),
                });
            }
            if vars[..i].contains(v) {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!("duplicate variable `{v}`"),
                });
            }
        }
        Ok(Ring { vars: vars.into() })
    }

    /// Parses a comma-separated variable list such as `x,y,z`.
    pub fn parse(list: &str) -> Result<Ring> {
        let names: Vec<&str> = list.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
        Ring::new(&names)
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn var(&self, index: usize) -> Result<Polynomial> {
        if index >= self.nvars() {
            return Err(Error::VariableIndex {
                index,
                nvars: self.nvars(),
            });
        }
        Ok(Polynomial::monomial(self, Monomial::var(self.nvars(), index)))
    }

    pub fn var_named(&self, name: &str) -> Result<Polynomial> {
        let i = self
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        self.var(i)
    }

    /// A fresh ring with `fresh` variables prepended, and the embedding of
    /// this ring into it. Fresh names are made unique against existing ones.
    pub fn extend_front(&self, fresh: &[&str]) -> (Ring, Embedding) {
        let mut names: Vec<String> = Vec::with_capacity(fresh.len() + self.nvars());
        for f in fresh {
            let mut name = f.to_string();
            while self.vars.contains(&name) || names.contains(&name) {
                name.push('_');
            }
            names.push(name);
        }
        names.extend(self.vars.iter().cloned());
        let ext = Ring { vars: names.into() };
        let emb = Embedding {
            base: self.clone(),
            ext: ext.clone(),
            offset: fresh.len(),
        };
        (ext, emb)
    }

    pub fn check_same(&self, other: &Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.vars.join(","),
                right: other.vars.join(","),
            })
        }
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.vars.join(","))
    }
}

/// Inclusion of a ring into an extension with extra leading variables.
#[derive(Clone, Debug)]
pub struct Embedding {
    base: Ring,
    ext: Ring,
    offset: usize,
}

impl Embedding {
    pub fn base(&self) -> &Ring {
        &self.base
    }

    pub fn ext(&self) -> &Ring {
        &self.ext
    }

    /// Indices of the fresh variables in the extension.
    pub fn fresh_indices(&self) -> Vec<usize> {
        (0..self.offset).collect()
    }

    pub fn embed(&self, f: &Polynomial) -> Polynomial {
        let terms = f.terms().iter().map(|(m, c)| {
            let mut e = vec![0; self.offset];
            e.extend_from_slice(m.exponents());
            (Monomial::new(e), c.clone())
        });
        Polynomial::from_terms(&self.ext, terms)
    }

    /// The preimage of `f`, or `None` if `f` involves a fresh variable.
    pub fn contract(&self, f: &Polynomial) -> Option<Polynomial> {
        let mut terms = Vec::with_capacity(f.terms().len());
        for (m, c) in f.terms() {
            let (fresh, rest) = m.exponents().split_at(self.offset);
            if fresh.iter().any(|&e| e != 0) {
                return None;
            }
            terms.push((Monomial::new(rest.to_vec()), c.clone()));
        }
        Some(Polynomial::from_terms(&self.base, terms))
    }
}
