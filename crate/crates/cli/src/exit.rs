use qwalk_core::Error;

pub const SUCCESS: u8 = 0;
pub const VIOLATION: u8 = 1;
pub const PARSE: u8 = 2;
pub const CONTRADICTION: u8 = 3;
pub const USAGE: u8 = 64;
pub const OVERSIZE: u8 = 65;

/// A run that ends without a report on stdout.
#[derive(Debug)]
pub enum Failure {
    Parse(Vec<String>),
    Usage(String),
    Oversize(String),
    Contradiction(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Parse(_) => PARSE,
            Failure::Usage(_) => USAGE,
            Failure::Oversize(_) => OVERSIZE,
            Failure::Contradiction(_) => CONTRADICTION,
        }
    }

    pub fn messages(&self) -> Vec<String> {
        match self {
            Failure::Parse(lines) => lines.clone(),
            Failure::Usage(m) | Failure::Oversize(m) | Failure::Contradiction(m) => vec![m.clone()],
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::Graph6 { .. }
            | Error::EdgeList { .. }
            | Error::VertexOutOfRange { .. }
            | Error::LoopEdge { .. }
            | Error::EmptyGraph => Failure::Parse(vec![msg]),
            Error::UnsupportedSize { .. } | Error::TowerTooLarge { .. } => Failure::Oversize(msg),
            Error::InvalidArgument(_) => Failure::Usage(msg),
            Error::IdentityViolation { .. }
            | Error::Contradiction(_)
            | Error::Numeric(_)
            | Error::NotSquare { .. }
            | Error::EmptyMatrix
            | Error::ZeroPolynomial
            | Error::ZeroArgument(_)
            | Error::NotPrime(_)
            | Error::BothZeroModP(_) => Failure::Contradiction(msg),
        }
    }
}
