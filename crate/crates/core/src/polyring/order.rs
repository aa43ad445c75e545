use std::cmp::Ordering;
use std::fmt;

/// A monomial order on exponent vectors.
///
/// `Block { elim, inner }` compares the first `elim` variables by graded
/// reverse lex and breaks ties on the remaining variables with `inner`, so
/// every monomial involving an eliminated variable exceeds every monomial
/// free of them.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    Grevlex,
    Block {
        elim: usize,
        inner: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    pub fn block(elim: usize, inner: MonomialOrder) -> Self {
        MonomialOrder::Block {
            elim,
            inner: Box::new(inner),
        }
    }

    pub fn compare(&self, a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Grevlex => grevlex(a, b),
            MonomialOrder::Block { elim, inner } => {
                let k = (*elim).min(a.len());
                grevlex(&a[..k], &b[..k]).then_with(|| inner.compare(&a[k..], &b[k..]))
            }
        }
    }
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => f.write_str("lex"),
            MonomialOrder::Grevlex => f.write_str("grevlex"),
            MonomialOrder::Block { elim, inner } => write!(f, "block({elim}, {inner})"),
        }
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "lex" => Ok(MonomialOrder::Lex),
            "grevlex" => Ok(MonomialOrder::Grevlex),
            other => Err(format!("unknown monomial order `{other}`")),
        }
    }
}
