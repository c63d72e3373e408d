//! The seven space-time discretizations.
//!
//! Two finite-difference stencils (central and balanced), a triangular
//! linear element pair, three tensor-product quadrilateral families
//! (Hermite cubic, trigonometric, bilinear Lagrange), and the bilinear
//! family on a 45-degree rotated lattice (diamond elements). Everything
//! here is a pure local description; `assembly` turns it into the global
//! system.

pub mod basis;
pub mod elements;
pub mod quadrature;
pub mod stencil;

pub use basis::{cubic_eval, family_eval, linear_eval, BasisFamily};
pub use elements::{tensor_element, tensor_element_with_quadrature, triangle_elements, ElementMatrix};
pub use stencil::{balanced_stencil, central_row_stencil, central_stencil, Stencil};

use crate::error::Error;

/// Which discretization to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SchemeTag {
    /// Central finite differences on the five-point cross.
    CentralDifference,
    /// Finite differences on the four diagonal neighbors.
    BalancedDifference,
    /// Linear triangular elements, two per grid cell.
    TriangleLinear,
    /// Cubic Hermite tensor elements (value + slope DOFs).
    HermitePoly,
    /// Trigonometric Hermite tensor elements (value + slope DOFs).
    HermiteTrig,
    /// Bilinear Lagrange tensor elements.
    LagrangeLinear,
    /// Bilinear elements on the 45-degree rotated lattice.
    Diamond,
}

impl SchemeTag {
    pub const ALL: [SchemeTag; 7] = [
        SchemeTag::CentralDifference,
        SchemeTag::BalancedDifference,
        SchemeTag::TriangleLinear,
        SchemeTag::HermitePoly,
        SchemeTag::HermiteTrig,
        SchemeTag::LagrangeLinear,
        SchemeTag::Diamond,
    ];

    /// Scalar DOFs per node and spinor component.
    pub fn dofs_per_node(self) -> usize {
        match self {
            SchemeTag::HermitePoly | SchemeTag::HermiteTrig => 3,
            _ => 1,
        }
    }

    pub fn is_finite_difference(self) -> bool {
        matches!(self, SchemeTag::CentralDifference | SchemeTag::BalancedDifference)
    }

    /// Tensor-product basis family, if the scheme is a quadrilateral
    /// element method.
    pub fn tensor_family(self) -> Option<BasisFamily> {
        match self {
            SchemeTag::HermitePoly => Some(BasisFamily::HermitePoly),
            SchemeTag::HermiteTrig => Some(BasisFamily::HermiteTrig),
            SchemeTag::LagrangeLinear | SchemeTag::Diamond => Some(BasisFamily::LagrangeLinear),
            _ => None,
        }
    }

    /// Lattice rotation the scheme supports: exactly 45 degrees for
    /// diamonds, any angle in [0, 45] for the bilinear tensor family
    /// (whose derivatives go through the rotation chain rule), and
    /// axis-aligned lattices for everything else.
    pub fn admits_rotation(self, theta_deg: f64) -> bool {
        match self {
            SchemeTag::Diamond => theta_deg == 45.0,
            SchemeTag::LagrangeLinear => (0.0..=45.0).contains(&theta_deg),
            _ => theta_deg == 0.0,
        }
    }

    /// Short tag used by the command line and in report tables.
    pub fn tag(self) -> &'static str {
        match self {
            SchemeTag::CentralDifference => "fd-central",
            SchemeTag::BalancedDifference => "fd-balanced",
            SchemeTag::TriangleLinear => "tri",
            SchemeTag::HermitePoly => "hermite",
            SchemeTag::HermiteTrig => "trig",
            SchemeTag::LagrangeLinear => "lagrange",
            SchemeTag::Diamond => "diamond",
        }
    }
}

impl std::str::FromStr for SchemeTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        SchemeTag::ALL
            .iter()
            .copied()
            .find(|t| t.tag() == s)
            .ok_or_else(|| {
                let known: Vec<&str> = SchemeTag::ALL.iter().map(|t| t.tag()).collect();
                Error::InvalidConfig(format!("unknown scheme '{s}'; expected one of {}", known.join(", ")))
            })
    }
}

impl std::fmt::Display for SchemeTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}
