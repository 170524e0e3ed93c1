use super::ConvexBody;
use crate::error::Result;

/// The six functionals of a body and their scale-free products.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FunctionalsReport {
    /// Elastic energy `E`.
    pub energy: f64,
    /// Perimeter `P`.
    pub perimeter: f64,
    /// Area `A`.
    pub area: f64,
    /// Diameter `D`.
    pub diameter: f64,
    /// Circumradius `R`.
    pub circumradius: f64,
    /// Inradius `r`.
    pub inradius: f64,
    /// Scale-invariant products.
    pub products: Products,
}

/// `E·P`, `E²·A`, `E·D`, `E·R` and `E·r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Products {
    /// `E·P`, at least `2π²`.
    pub ep: f64,
    /// `E²·A`, at least `π³`.
    pub e2a: f64,
    /// `E·D`, at least `2π`.
    pub ed: f64,
    /// `E·R`, at least `π`.
    pub e_big_r: f64,
    /// `E·r`, at least `2a²`.
    pub e_small_r: f64,
}

impl Products {
    /// The products in the order `EP, E²A, ED, ER, Er`.
    pub fn as_array(&self) -> [f64; 5] {
        [self.ep, self.e2a, self.ed, self.e_big_r, self.e_small_r]
    }
}

/// Evaluates every functional of `body`.
pub fn functionals(body: &ConvexBody) -> Result<FunctionalsReport> {
    let energy = body.polygon_energy().value;
    let perimeter = body.perimeter();
    let area = body.area();
    let diameter = body.diameter();
    let circumradius = body.circumradius();
    let (inradius, _) = body.inradius()?;
    Ok(FunctionalsReport {
        energy,
        perimeter,
        area,
        diameter,
        circumradius,
        inradius,
        products: Products {
            ep: energy * perimeter,
            e2a: energy * energy * area,
            ed: energy * diameter,
            e_big_r: energy * circumradius,
            e_small_r: energy * inradius,
        },
    })
}
