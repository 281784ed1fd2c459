//! Reference forcing fields shared by the tests, the acceptance run and the
//! fixture generator.

use crate::error::Result;
use crate::field::{FieldGrid, GridSpec};

/// Width in `x₂` of the boundary-layer forcing.
pub const LAYER_WIDTH: f64 = 0.0625;

/// `(1 − u²)⁴` on `(a, b)` mapped to `u ∈ (−1, 1)`, zero outside.
pub fn bump(x: f64, a: f64, b: f64) -> f64 {
    if x <= a || x >= b {
        return 0.0;
    }
    let u = (2.0 * x - a - b) / (b - a);
    (1.0 - u * u).powi(4)
}

/// Grid of the boundary-layer field: a `4 × 4` box in `(t, x₁)` and depth
/// `2 LAYER_WIDTH`.
pub fn boundary_layer_spec(n_t: usize, n_x1: usize, n_x2: usize) -> Result<GridSpec> {
    GridSpec::new(n_t, n_x1, n_x2, 4.0, 4.0, 2.0 * LAYER_WIDTH)
}

/// Smooth compactly supported forcing concentrated within `LAYER_WIDTH` of
/// the sheet, with different `(t, x₁)` profiles on the two sides.
pub fn boundary_layer(spec: GridSpec) -> Result<FieldGrid> {
    FieldGrid::from_fn(spec, |t, x1, y| {
        let layer = bump(y, -LAYER_WIDTH, LAYER_WIDTH);
        let plus = bump(t, 0.5, 2.5) * bump(x1, 0.5, 3.5);
        let minus = bump(t, 1.0, 3.0) * bump(x1, 1.0, 3.0);
        (plus * layer, -0.5 * minus * layer)
    })
}
