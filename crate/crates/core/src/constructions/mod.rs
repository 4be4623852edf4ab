//! Flag constructions and the identities they satisfy.
//!
//! Every builder returns a [`FlagLayout`] whose coordinates are exact
//! constructible expressions in the y-up canvas frame, with the canvas
//! anchored at the origin.

mod builders;
mod layout;
mod verify;

pub use builders::{
    build_current_flag, build_independence_flag, build_togo, nepal_ratio_expr, nepal_ratio_layout,
    tan36_fourth_root_form, tan36_radical_form, tan72_radical_form,
};
pub use layout::{ColorRole, FlagLayout, Region, Star};
pub use verify::{
    verify_angle_configuration, verify_flag_identities, verify_layout_identities, verify_layout_structure,
    Check, CheckStatus, VerificationReport,
};

use std::fmt;
use std::str::FromStr;

use crate::exactnum::{ExactError, Rational};
use crate::geometry::GeometryError;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error("invalid dimension: {0} must be positive")]
    InvalidDimension(&'static str),
    #[error("wrong layout: {0}")]
    WrongLayout(String),
    #[error("unknown flag `{0}` (expected one of chile-1818, chile-current, togo, nepal-ratio)")]
    UnknownFlag(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// The built-in flags, by their command-line names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    Chile1818,
    ChileCurrent,
    Togo,
    NepalRatio,
}

impl Builtin {
    pub const ALL: [Builtin; 4] = [Builtin::Chile1818, Builtin::ChileCurrent, Builtin::Togo, Builtin::NepalRatio];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::Chile1818 => "chile-1818",
            Builtin::ChileCurrent => "chile-current",
            Builtin::Togo => "togo",
            Builtin::NepalRatio => "nepal-ratio",
        }
    }

    /// Layout at the given length parameter (region height, square side,
    /// or flag height). The Nepal entry ignores it: it is a ratio only.
    pub fn layout_at(self, param: &Rational) -> Result<FlagLayout, ConstructionError> {
        match self {
            Builtin::Chile1818 => build_independence_flag(param),
            Builtin::ChileCurrent => build_current_flag(param),
            Builtin::Togo => build_togo(param),
            Builtin::NepalRatio => nepal_ratio_layout(),
        }
    }

    /// Layout at unit parameter.
    pub fn layout(self) -> Result<FlagLayout, ConstructionError> {
        self.layout_at(&Rational::from_integer(1.into()))
    }

    /// The bundled `.flag` source describing the same layout.
    pub fn spec_source(self) -> &'static str {
        match self {
            Builtin::Chile1818 => include_str!("../../flags/chile-1818.flag"),
            Builtin::ChileCurrent => include_str!("../../flags/chile-current.flag"),
            Builtin::Togo => include_str!("../../flags/togo.flag"),
            Builtin::NepalRatio => include_str!("../../flags/nepal-ratio.flag"),
        }
    }
}

impl FromStr for Builtin {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Builtin::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| ConstructionError::UnknownFlag(s.to_string()))
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
