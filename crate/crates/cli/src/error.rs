use character::CharError;
use exactlin::LinError;
use repcat::RepError;
use submod_geometry::GeomError;
use thiserror::Error;
use verify::VerifyError;
use weightlib::WeightError;

/// Failures of a command, each mapped to a documented exit code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error("enumeration cap: {0}")]
    Cap(String),
    #[error("Λ incompatible: {0}")]
    Lambda(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Cap(_) => 3,
            CliError::Lambda(_) => 4,
        }
    }

    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }
}

fn lin_cap(e: &LinError) -> bool {
    matches!(e, LinError::CapExceeded { .. })
}

fn rep_cap(e: &RepError) -> bool {
    matches!(e, RepError::Lin(l) if lin_cap(l))
}

fn geom_cap(e: &GeomError) -> bool {
    match e {
        GeomError::Rep(r) => rep_cap(r),
        GeomError::Lin(l) => lin_cap(l),
        _ => false,
    }
}

fn weight_cap(e: &WeightError) -> bool {
    match e {
        WeightError::Geom(g) => geom_cap(g),
        WeightError::Rep(r) => rep_cap(r),
        _ => false,
    }
}

fn char_cap(e: &CharError) -> bool {
    match e {
        CharError::Rep(r) => rep_cap(r),
        CharError::Geom(g) => geom_cap(g),
        CharError::Weight(w) => weight_cap(w),
        _ => false,
    }
}

fn classify(cap: bool, msg: String) -> CliError {
    if cap {
        CliError::Cap(msg)
    } else {
        CliError::Input(msg)
    }
}

impl From<LinError> for CliError {
    fn from(e: LinError) -> Self {
        classify(lin_cap(&e), e.to_string())
    }
}

impl From<RepError> for CliError {
    fn from(e: RepError) -> Self {
        classify(rep_cap(&e), e.to_string())
    }
}

impl From<GeomError> for CliError {
    fn from(e: GeomError) -> Self {
        classify(geom_cap(&e), e.to_string())
    }
}

impl From<WeightError> for CliError {
    fn from(e: WeightError) -> Self {
        classify(weight_cap(&e), e.to_string())
    }
}

impl From<CharError> for CliError {
    fn from(e: CharError) -> Self {
        match &e {
            CharError::Lambda(_) | CharError::Torus(_) => CliError::Lambda(e.to_string()),
            _ => classify(char_cap(&e), e.to_string()),
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        let cap = match &e {
            VerifyError::Char(c) => char_cap(c),
            VerifyError::Geom(g) => geom_cap(g),
            VerifyError::Weight(w) => weight_cap(w),
            VerifyError::Rep(r) => rep_cap(r),
            VerifyError::Precondition(_) => false,
        };
        classify(cap, e.to_string())
    }
}
