use std::cmp::Ordering;
use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use crate::error::Error;

use super::Monomial;

/// The comparison rule of a monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    GrLex,
    GrevLex,
    /// The first `elim` variables (in priority order) form a block compared
    /// first; ties are broken on the remaining variables. Both blocks use
    /// `inner`. Any monomial involving the leading block beats every monomial
    /// free of it, which is what elimination needs.
    Block {
        elim: usize,
        inner: Box<OrderKind>,
    },
}

/// A monomial order: a comparison rule applied to the variables listed in
/// priority order. `priority = None` means ring order (variable 0 largest).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub priority: Option<Vec<usize>>,
}

impl MonomialOrder {
    pub fn lex() -> Self {
        OrderKind::Lex.into()
    }

    pub fn grlex() -> Self {
        OrderKind::GrLex.into()
    }

    pub fn grevlex() -> Self {
        OrderKind::GrevLex.into()
    }

    /// Block order with the first `elim` ring variables leading, grevlex in each block.
    pub fn elimination(elim: usize) -> Self {
        OrderKind::Block {
            elim,
            inner: Box::new(OrderKind::GrevLex),
        }
        .into()
    }

    /// Block order eliminating the variables in `drop` from a ring of `nvars`
    /// variables. The remaining variables keep their relative order.
    pub fn eliminating(drop: &[usize], nvars: usize) -> Self {
        let mut priority: Vec<usize> = drop.to_vec();
        priority.extend((0..nvars).filter(|i| !drop.contains(i)));
        MonomialOrder {
            kind: OrderKind::Block {
                elim: drop.len(),
                inner: Box::new(OrderKind::GrevLex),
            },
            priority: Some(priority),
        }
    }

    pub fn with_priority(mut self, priority: Vec<usize>) -> Self {
        self.priority = Some(priority);
        self
    }

    /// `Greater` means `a` is the larger monomial.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match &self.priority {
            None => cmp_kind(&self.kind, a, b, 0..a.len(), &|m: &[u32], i| m[i]),
            Some(p) => cmp_kind(&self.kind, a, b, 0..p.len(), &|m: &[u32], i| m[p[i]]),
        }
    }
}

impl From<OrderKind> for MonomialOrder {
    fn from(kind: OrderKind) -> Self {
        MonomialOrder { kind, priority: None }
    }
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::grevlex()
    }
}

fn cmp_kind<F>(kind: &OrderKind, a: &[u32], b: &[u32], range: Range<usize>, get: &F) -> Ordering
where
    F: Fn(&[u32], usize) -> u32,
{
    let degree = |m: &[u32]| -> u64 { range.clone().map(|i| get(m, i) as u64).sum() };
    match kind {
        OrderKind::Lex => {
            for i in range.clone() {
                match get(a, i).cmp(&get(b, i)) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        }
        OrderKind::GrLex => degree(a)
            .cmp(&degree(b))
            .then_with(|| cmp_kind(&OrderKind::Lex, a, b, range.clone(), get)),
        OrderKind::GrevLex => degree(a).cmp(&degree(b)).then_with(|| {
            for i in range.clone().rev() {
                match get(a, i).cmp(&get(b, i)) {
                    Ordering::Equal => continue,
                    o => return o.reverse(),
                }
            }
            Ordering::Equal
        }),
        OrderKind::Block { elim, inner } => {
            let split = (range.start + elim).min(range.end);
            cmp_kind(inner, a, b, range.start..split, get).then_with(|| cmp_kind(inner, a, b, split..range.end, get))
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderKind::Lex => f.write_str("lex"),
            OrderKind::GrLex => f.write_str("grlex"),
            OrderKind::GrevLex => f.write_str("grevlex"),
            OrderKind::Block { elim, inner } => write!(f, "block({elim},{inner})"),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)
    }
}

impl FromStr for OrderKind {
    type Err = Error;

    /// Accepts `lex`, `grlex`, `grevlex` and `block(k,<inner>)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s {
            "lex" => return Ok(OrderKind::Lex),
            "grlex" | "deglex" => return Ok(OrderKind::GrLex),
            "grevlex" | "degrevlex" => return Ok(OrderKind::GrevLex),
            _ => {}
        }
        let bad = || Error::Parse {
            pos: 0,
            msg: format!("unknown monomial order `{s}`"),
        };
        let body = s
            .strip_prefix("block(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (k, inner) = body.split_once(',').ok_or_else(bad)?;
        Ok(OrderKind::Block {
            elim: k.trim().parse().map_err(|_| bad())?,
            inner: Box::new(inner.parse()?),
        })
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(s.parse::<OrderKind>()?.into())
    }
}
