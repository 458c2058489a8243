//! Quadrature weights on strictly increasing, possibly non-uniform grids.

/// Integration rule applied to a sampled profile.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum QuadratureRule {
    /// Composite Simpson over interval pairs; an odd trailing interval is
    /// closed with the three-point quadratic rule.
    #[default]
    Simpson,
    Trapezoid,
}

impl QuadratureRule {
    pub fn name(&self) -> &'static str {
        match self {
            QuadratureRule::Simpson => "simpson",
            QuadratureRule::Trapezoid => "trapezoid",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "simpson" => Some(QuadratureRule::Simpson),
            "trapezoid" => Some(QuadratureRule::Trapezoid),
            _ => None,
        }
    }

    /// Weights `w` with `∫ f ≈ Σ w_i f(x_i)`. Fewer than two points give
    /// all-zero weights; two points fall back to the trapezoid rule.
    ///
    /// All weights are homogeneous of degree one in the spacings, so
    /// scaling the grid by `s` scales every weight by `s`.
    pub fn weights(&self, grid: &[f64]) -> Vec<f64> {
        let n = grid.len();
        let mut w = vec![0.0; n];
        if n < 2 {
            return w;
        }
        if *self == QuadratureRule::Trapezoid || n == 2 {
            for i in 0..n - 1 {
                let h = grid[i + 1] - grid[i];
                w[i] += 0.5 * h;
                w[i + 1] += 0.5 * h;
            }
            return w;
        }
        let intervals = n - 1;
        let mut i = 0;
        while i + 2 <= intervals {
            let h0 = grid[i + 1] - grid[i];
            let h1 = grid[i + 2] - grid[i + 1];
            let s = h0 + h1;
            w[i] += s / 6.0 * (2.0 - h1 / h0);
            w[i + 1] += s * s * s / (6.0 * h0 * h1);
            w[i + 2] += s / 6.0 * (2.0 - h0 / h1);
            i += 2;
        }
        if intervals % 2 == 1 {
            // quadratic through the last three points, integrated over the
            // final interval only
            let j = n - 1;
            let h0 = grid[j - 1] - grid[j - 2];
            let h1 = grid[j] - grid[j - 1];
            w[j] += h1 * (2.0 * h1 + 3.0 * h0) / (6.0 * (h0 + h1));
            w[j - 1] += h1 * (h1 + 3.0 * h0) / (6.0 * h0);
            w[j - 2] -= h1 * h1 * h1 / (6.0 * h0 * (h0 + h1));
        }
        w
    }
}
