//! JSON reports. Every real is rounded to 9 significant digits.

use elastica_core::analysis::{inequality_suite, InequalityCheck, InequalityReport};
use elastica_core::geom::{functionals, Products};
use elastica_core::{ConvexBody, Error, FunctionalsReport};
use serde::Serialize;

/// Rounds to 9 significant digits; non-finite values pass through and
/// `−0` becomes `0`.
pub fn sig9(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    if !x.is_finite() {
        return x;
    }
    format!("{x:.8e}").parse().unwrap_or(x)
}

/// The five products, keyed by their usual names.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProductsJson {
    #[serde(rename = "EP")]
    ep: f64,
    #[serde(rename = "E2A")]
    e2a: f64,
    #[serde(rename = "ED")]
    ed: f64,
    #[serde(rename = "ER")]
    e_big_r: f64,
    #[serde(rename = "Er")]
    e_small_r: f64,
}

impl From<&Products> for ProductsJson {
    fn from(p: &Products) -> Self {
        Self {
            ep: sig9(p.ep),
            e2a: sig9(p.e2a),
            ed: sig9(p.ed),
            e_big_r: sig9(p.e_big_r),
            e_small_r: sig9(p.e_small_r),
        }
    }
}

/// The six functionals and their products.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FunctionalsJson {
    #[serde(rename = "E")]
    energy: f64,
    #[serde(rename = "P")]
    perimeter: f64,
    #[serde(rename = "A")]
    area: f64,
    #[serde(rename = "D")]
    diameter: f64,
    #[serde(rename = "R")]
    circumradius: f64,
    #[serde(rename = "r")]
    inradius: f64,
    products: ProductsJson,
}

impl From<&FunctionalsReport> for FunctionalsJson {
    fn from(f: &FunctionalsReport) -> Self {
        Self {
            energy: sig9(f.energy),
            perimeter: sig9(f.perimeter),
            area: sig9(f.area),
            diameter: sig9(f.diameter),
            circumradius: sig9(f.circumradius),
            inradius: sig9(f.inradius),
            products: (&f.products).into(),
        }
    }
}

/// One inequality.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InequalityJson {
    name: &'static str,
    product: f64,
    bound: f64,
    deficit: f64,
    relative_deficit: f64,
    pass: bool,
    equality: bool,
}

impl From<&InequalityCheck> for InequalityJson {
    fn from(c: &InequalityCheck) -> Self {
        Self {
            name: c.name,
            product: sig9(c.product),
            bound: sig9(c.bound),
            deficit: sig9(c.deficit),
            relative_deficit: sig9(c.relative_deficit),
            pass: c.pass,
            equality: c.equality,
        }
    }
}

/// What `functionals` and `omega-star` print.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BodyReport {
    /// Vertex count.
    pub vertices: usize,
    /// Largest turning angle.
    pub max_turning: f64,
    /// Whether the polygon is too coarse for a meaningful energy.
    pub coarse: bool,
    /// The functionals.
    pub functionals: FunctionalsJson,
    /// Centre of the largest inscribed disk.
    pub incenter: [f64; 2],
    /// The five inequalities; absent when the polygon is too coarse.
    pub inequalities: Option<Vec<InequalityJson>>,
    /// Whether all inequalities hold; absent with `inequalities`.
    pub all_pass: Option<bool>,
}

impl BodyReport {
    /// Evaluates `body`. Too-coarse polygons get functionals only.
    pub fn new(body: &ConvexBody) -> Result<Self, Error> {
        let pe = body.polygon_energy();
        let (f, checks) = match inequality_suite(body) {
            Ok(InequalityReport { functionals, checks, .. }) => (functionals, Some(checks)),
            Err(Error::CoarseSampling { .. }) => (functionals(body)?, None),
            Err(e) => return Err(e),
        };
        let center = body.incircle()?.center;
        Ok(Self {
            vertices: body.len(),
            max_turning: sig9(pe.max_turning),
            coarse: pe.is_coarse(),
            functionals: (&f).into(),
            incenter: [sig9(center.x), sig9(center.y)],
            inequalities: checks.map(|c| c.iter().map(Into::into).collect()),
            all_pass: checks.map(|c| c.iter().all(|c| c.pass)),
        })
    }
}

/// Pretty-printed JSON followed by a newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}
