//! Uniform-grid function representation with trapezoid quadrature,
//! differentiation, and normalization.
//!
//! Every density and utility curve in this crate is sampled on a uniform
//! 1-D grid. Composite trapezoid quadrature is the measure throughout: it
//! is exact for affine integrands, which keeps the linear-utility cases
//! exact, and second-order accurate otherwise.

use crate::error::{Error, Result};

/// Default grid resolution when a caller does not choose one.
pub const DEFAULT_POINTS: usize = 1001;

/// Tolerance on quadrature mass for a valid density.
pub const MASS_TOL: f64 = 1e-9;

/// Tolerance absorbed by nondecreasing checks (floating-point noise).
pub const MONOTONE_TOL: f64 = 1e-12;

/// Tolerance on utility endpoints (0 at lower, 1 at upper).
pub const ENDPOINT_TOL: f64 = 1e-9;

/// A uniform grid of at least three nodes on a bounded domain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    lower: f64,
    upper: f64,
    points: usize,
}

impl Grid {
    /// Builds an evenly spaced grid on `[lower, upper]`.
    pub fn new(lower: f64, upper: f64, points: usize) -> Result<Self> {
        if !lower.is_finite() || !upper.is_finite() || lower >= upper {
            return Err(Error::DomainOrder { lower, upper });
        }
        if points < 3 {
            return Err(Error::TooFewPoints { got: points, min: 3 });
        }
        Ok(Self {
            lower,
            upper,
            points,
        })
    }

    pub fn lower(&self) -> f64 {
        self.lower
    }

    pub fn upper(&self) -> f64 {
        self.upper
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    /// Spacing between adjacent nodes.
    pub fn step(&self) -> f64 {
        (self.upper - self.lower) / (self.points - 1) as f64
    }

    /// The i-th node; the last node is exactly `upper`.
    pub fn node(&self, i: usize) -> f64 {
        debug_assert!(i < self.points);
        if i + 1 == self.points {
            self.upper
        } else {
            self.lower + i as f64 * self.step()
        }
    }

    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.points).map(move |i| self.node(i))
    }

    /// Trapezoid quadrature weight of node `i`.
    pub fn weight(&self, i: usize) -> f64 {
        let h = self.step();
        if i == 0 || i + 1 == self.points {
            0.5 * h
        } else {
            h
        }
    }

    /// Index of the node equal to `x`, if `x` sits on the grid
    /// (within a small fraction of the spacing).
    pub fn index_of(&self, x: f64) -> Option<usize> {
        let h = self.step();
        let k = ((x - self.lower) / h).round();
        if !k.is_finite() || k < 0.0 || k >= self.points as f64 {
            return None;
        }
        let k = k as usize;
        if (x - self.node(k)).abs() <= 1e-6 * h {
            Some(k)
        } else {
            None
        }
    }
}

/// A real-valued function sampled at the nodes of a [`Grid`].
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    grid: Grid,
    values: Vec<f64>,
}

impl GridFunction {
    pub fn new(grid: Grid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.points() {
            return Err(Error::LengthMismatch {
                expected: grid.points(),
                got: values.len(),
            });
        }
        for (index, &value) in values.iter().enumerate() {
            if !value.is_finite() {
                return Err(Error::NonFinite { index, value });
            }
        }
        Ok(Self { grid, values })
    }

    pub fn from_fn(grid: Grid, f: impl Fn(f64) -> f64) -> Result<Self> {
        let values = grid.nodes().map(f).collect();
        Self::new(grid, values)
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Linear interpolation at `x`; clamps to the domain endpoints.
    pub fn interpolate(&self, x: f64) -> f64 {
        let g = self.grid;
        if x <= g.lower() {
            return self.values[0];
        }
        if x >= g.upper() {
            return self.values[g.points() - 1];
        }
        let h = g.step();
        let mut k = ((x - g.lower()) / h).floor() as usize;
        if k >= g.points() - 1 {
            k = g.points() - 2;
        }
        let t = (x - g.node(k)) / h;
        self.values[k] * (1.0 - t) + self.values[k + 1] * t
    }
}

/// Composite trapezoid integral of `f` over its grid.
pub fn integrate(f: &GridFunction) -> f64 {
    let v = f.values();
    let n = v.len();
    let mut acc = 0.5 * (v[0] + v[n - 1]);
    for &x in &v[1..n - 1] {
        acc += x;
    }
    acc * f.grid().step()
}

/// Second-order finite differences on uniformly spaced samples:
/// central in the interior, one-sided at the two endpoints.
pub(crate) fn differentiate_values(v: &[f64], h: f64, out: &mut Vec<f64>) {
    let n = v.len();
    debug_assert!(n >= 3);
    out.clear();
    out.reserve(n);
    out.push((-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h));
    for i in 1..n - 1 {
        out.push((v[i + 1] - v[i - 1]) / (2.0 * h));
    }
    out.push((3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) / (2.0 * h));
}

/// Numerical derivative of a grid function.
pub fn differentiate(f: &GridFunction) -> GridFunction {
    let mut out = Vec::new();
    differentiate_values(f.values(), f.grid().step(), &mut out);
    GridFunction {
        grid: f.grid(),
        values: out,
    }
}

/// A nonnegative grid function with unit trapezoid mass.
#[derive(Debug, Clone, PartialEq)]
pub struct UtilityDensity1D {
    inner: GridFunction,
}

impl UtilityDensity1D {
    pub fn new(inner: GridFunction) -> Result<Self> {
        for (index, &value) in inner.values().iter().enumerate() {
            if value < 0.0 {
                return Err(Error::NegativeDensity { index, value });
            }
        }
        let mass = integrate(&inner);
        if (mass - 1.0).abs() > MASS_TOL {
            return Err(Error::NotNormalized {
                mass,
                tol: MASS_TOL,
            });
        }
        Ok(Self { inner })
    }

    pub fn inner(&self) -> &GridFunction {
        &self.inner
    }

    pub fn grid(&self) -> Grid {
        self.inner.grid()
    }

    pub fn values(&self) -> &[f64] {
        self.inner.values()
    }

    /// Trapezoid quadrature of `x^order * u(x)`.
    pub fn moment(&self, order: u32) -> f64 {
        let g = self.grid();
        let mut acc = 0.0;
        for (i, &v) in self.values().iter().enumerate() {
            acc += g.weight(i) * g.node(i).powi(order as i32) * v;
        }
        acc
    }

    pub fn mean(&self) -> f64 {
        self.moment(1)
    }
}

/// A nondecreasing grid function running from 0 at the lower domain
/// endpoint to 1 at the upper one.
#[derive(Debug, Clone, PartialEq)]
pub struct UtilityFunction1D {
    inner: GridFunction,
}

impl UtilityFunction1D {
    pub fn new(inner: GridFunction) -> Result<Self> {
        let v = inner.values();
        let n = v.len();
        if v[0].abs() > ENDPOINT_TOL {
            return Err(Error::BadEndpoint {
                which: "lower",
                expected: 0.0,
                got: v[0],
            });
        }
        if (v[n - 1] - 1.0).abs() > ENDPOINT_TOL {
            return Err(Error::BadEndpoint {
                which: "upper",
                expected: 1.0,
                got: v[n - 1],
            });
        }
        for i in 1..n {
            if v[i] < v[i - 1] - MONOTONE_TOL {
                return Err(Error::NotMonotone { index: i });
            }
        }
        Ok(Self { inner })
    }

    pub fn inner(&self) -> &GridFunction {
        &self.inner
    }

    pub fn grid(&self) -> Grid {
        self.inner.grid()
    }

    pub fn values(&self) -> &[f64] {
        self.inner.values()
    }

    /// Linear interpolation at `x`.
    pub fn evaluate(&self, x: f64) -> f64 {
        self.inner.interpolate(x)
    }
}

/// Scales a nonnegative grid function to unit trapezoid mass.
pub fn normalize_density(f: &GridFunction) -> Result<UtilityDensity1D> {
    for (index, &value) in f.values().iter().enumerate() {
        if value < 0.0 {
            return Err(Error::NegativeDensity { index, value });
        }
    }
    let mass = integrate(f);
    if !(mass > 0.0) || !mass.is_finite() {
        return Err(Error::ZeroMass { mass });
    }
    let values = f.values().iter().map(|v| v / mass).collect();
    UtilityDensity1D::new(GridFunction {
        grid: f.grid(),
        values,
    })
}

/// Running trapezoid integral of a density: the utility curve.
///
/// The lower endpoint is pinned to exactly 0; the whole curve is rescaled
/// so the upper endpoint is exactly 1, absorbing the quadrature residual
/// left by the density's own normalization.
pub fn cumulative(d: &UtilityDensity1D) -> UtilityFunction1D {
    let v = d.values();
    let n = v.len();
    let h = d.grid().step();
    let mut u = Vec::with_capacity(n);
    u.push(0.0);
    for i in 1..n {
        u.push(u[i - 1] + 0.5 * h * (v[i - 1] + v[i]));
    }
    let total = u[n - 1];
    for x in u.iter_mut() {
        *x /= total;
    }
    u[n - 1] = 1.0;
    UtilityFunction1D {
        inner: GridFunction {
            grid: d.grid(),
            values: u,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_grid_even_spacing() {
        let g = Grid::new(0.0, 1.0, 3).unwrap();
        let nodes: Vec<f64> = g.nodes().collect();
        assert_eq!(nodes, vec![0.0, 0.5, 1.0]);

        let g = Grid::new(0.0, 5.0, 6).unwrap();
        let nodes: Vec<f64> = g.nodes().collect();
        assert_eq!(nodes, vec![0.0, 1.0, 2.0, 3.0, 4.0, 5.0]);
    }

    #[test]
    fn make_grid_rejects_bad_input() {
        assert!(matches!(
            Grid::new(2.0, 1.0, 10),
            Err(Error::DomainOrder { .. })
        ));
        assert!(matches!(
            Grid::new(0.0, 1.0, 2),
            Err(Error::TooFewPoints { .. })
        ));
    }

    #[test]
    fn integrate_constant_and_linear_exact() {
        let g = Grid::new(0.0, 5.0, 11).unwrap();
        let f = GridFunction::from_fn(g, |_| 1.0).unwrap();
        assert!((integrate(&f) - 5.0).abs() < 1e-12);

        let g = Grid::new(0.0, 1.0, 101).unwrap();
        let f = GridFunction::from_fn(g, |x| x).unwrap();
        assert!((integrate(&f) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn integrate_exponential() {
        // Oracle: closed-form antiderivative of e^{-x} on [0, 1].
        let expected = 1.0 - (-1.0f64).exp();
        let g = Grid::new(0.0, 1.0, 1001).unwrap();
        let f = GridFunction::from_fn(g, |x| (-x).exp()).unwrap();
        assert!((integrate(&f) - expected).abs() < 1e-6);
    }

    #[test]
    fn differentiate_linear_and_constant() {
        let g = Grid::new(0.0, 1.0, 11).unwrap();
        let f = GridFunction::from_fn(g, |x| x).unwrap();
        for &d in differentiate(&f).values() {
            assert!((d - 1.0).abs() < 1e-12);
        }
        let f = GridFunction::from_fn(g, |_| 3.0).unwrap();
        for &d in differentiate(&f).values() {
            assert!(d.abs() < 1e-12);
        }
    }

    #[test]
    fn differentiate_quadratic_matches_analytic() {
        let g = Grid::new(0.0, 2.0, 1001).unwrap();
        let f = GridFunction::from_fn(g, |x| x * x).unwrap();
        let d = differentiate(&f);
        let sup = d
            .values()
            .iter()
            .enumerate()
            .map(|(i, &v)| (v - 2.0 * g.node(i)).abs())
            .fold(0.0, f64::max);
        assert!(sup < 1e-4, "sup deviation {sup}");
    }

    #[test]
    fn normalize_constant() {
        let g = Grid::new(0.0, 2.0, 21).unwrap();
        let f = GridFunction::from_fn(g, |_| 3.0).unwrap();
        let d = normalize_density(&f).unwrap();
        for &v in d.values() {
            assert!((v - 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn normalize_is_idempotent() {
        let g = Grid::new(0.0, 1.0, 101).unwrap();
        let f = GridFunction::from_fn(g, |x| 1.0 + x).unwrap();
        let d = normalize_density(&f).unwrap();
        let d2 = normalize_density(d.inner()).unwrap();
        for (a, b) in d.values().iter().zip(d2.values()) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn normalize_reciprocal_on_unit_log_interval() {
        // Oracle: the integral of 1/x over [1, e] is exactly 1, so the
        // normalized density stays 1/x up to the quadrature residual.
        let g = Grid::new(1.0, std::f64::consts::E, 1001).unwrap();
        let f = GridFunction::from_fn(g, |x| 1.0 / x).unwrap();
        let d = normalize_density(&f).unwrap();
        let sup = d
            .values()
            .iter()
            .enumerate()
            .map(|(i, &v)| (v - 1.0 / g.node(i)).abs())
            .fold(0.0, f64::max);
        assert!(sup < 1e-6, "sup deviation {sup}");
    }

    #[test]
    fn normalize_rejects_negative_and_zero_mass() {
        let g = Grid::new(0.0, 1.0, 11).unwrap();
        let f = GridFunction::from_fn(g, |x| x - 0.5).unwrap();
        assert!(matches!(
            normalize_density(&f),
            Err(Error::NegativeDensity { .. })
        ));
        let f = GridFunction::from_fn(g, |_| 0.0).unwrap();
        assert!(matches!(normalize_density(&f), Err(Error::ZeroMass { .. })));
    }

    #[test]
    fn cumulative_of_uniform_is_linear() {
        let g = Grid::new(2.0, 6.0, 101).unwrap();
        let f = GridFunction::from_fn(g, |_| 1.0).unwrap();
        let u = cumulative(&normalize_density(&f).unwrap());
        for (i, &v) in u.values().iter().enumerate() {
            let x = g.node(i);
            assert!((v - (x - 2.0) / 4.0).abs() < 1e-12);
        }
    }

    #[test]
    fn cumulative_of_jeffreys_is_log() {
        let g = Grid::new(1.0, std::f64::consts::E, 1001).unwrap();
        let f = GridFunction::from_fn(g, |x| 1.0 / x).unwrap();
        let u = cumulative(&normalize_density(&f).unwrap());
        let sup = u
            .values()
            .iter()
            .enumerate()
            .map(|(i, &v)| (v - g.node(i).ln()).abs())
            .fold(0.0, f64::max);
        assert!(sup < 1e-6, "sup deviation {sup}");
    }

    #[test]
    fn cumulative_saturates_when_mass_sits_left() {
        let g = Grid::new(0.0, 1.0, 1001).unwrap();
        let f = GridFunction::from_fn(g, |x| if x < 0.5 { 1.0 } else { 0.0 }).unwrap();
        let u = cumulative(&normalize_density(&f).unwrap());
        assert!((u.evaluate(0.5) - 1.0).abs() < 1e-2);
        assert!((u.values()[g.points() - 1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn interpolate_clamps_and_hits_nodes() {
        let g = Grid::new(0.0, 1.0, 5).unwrap();
        let f = GridFunction::from_fn(g, |x| x * x).unwrap();
        assert_eq!(f.interpolate(-1.0), 0.0);
        assert_eq!(f.interpolate(2.0), 1.0);
        assert!((f.interpolate(0.25) - 0.0625).abs() < 1e-15);
        assert!((f.interpolate(0.375) - (0.0625 + 0.25) / 2.0).abs() < 1e-15);
    }

    #[test]
    fn index_of_detects_grid_nodes() {
        let g = Grid::new(0.0, 1.0, 1001).unwrap();
        assert_eq!(g.index_of(0.2), Some(200));
        assert_eq!(g.index_of(1.0), Some(1000));
        assert_eq!(g.index_of(0.2004), None);
        assert_eq!(g.index_of(1.5), None);
    }
}
