//! Real Bloore parameterization of 4x4 density matrices.
//!
//! Off-diagonal entries are written `rho_ij = sqrt(rho_ii rho_jj) z_ij`, so
//! the determinant and every principal minor factor into a product of the
//! diagonal entries and a polynomial in the `z_ij` alone. Feasibility of the
//! off-diagonal part is then independent of the diagonal.

use serde::{Deserialize, Serialize};

use crate::density::DensityMatrix;
use crate::error::{Error, Result};

/// Index pairs of the six off-diagonal variables, in storage order.
pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Labels matching [`PAIRS`], one-based as usually written.
pub const PAIR_LABELS: [&str; 6] = ["z12", "z13", "z14", "z23", "z24", "z34"];

/// The six scaled off-diagonal variables `z12, z13, z14, z23, z24, z34`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZValues(pub [f64; 6]);

impl ZValues {
    pub const ZERO: Self = Self([0.0; 6]);

    pub fn new(z12: f64, z13: f64, z14: f64, z23: f64, z24: f64, z34: f64) -> Self {
        Self([z12, z13, z14, z23, z24, z34])
    }

    pub fn z12(&self) -> f64 {
        self.0[0]
    }
    pub fn z13(&self) -> f64 {
        self.0[1]
    }
    pub fn z14(&self) -> f64 {
        self.0[2]
    }
    pub fn z23(&self) -> f64 {
        self.0[3]
    }
    pub fn z24(&self) -> f64 {
        self.0[4]
    }
    pub fn z34(&self) -> f64 {
        self.0[5]
    }

    /// Value for the (unordered) index pair `(i, j)`, zero-based; 1 on the diagonal.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        if i == j {
            return 1.0;
        }
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        let k = PAIRS.iter().position(|&p| p == (a, b)).expect("index pair in range");
        self.0[k]
    }

    pub fn in_box(&self) -> bool {
        self.0.iter().all(|z| (-1.0..=1.0).contains(z))
    }

    /// Under `rho11 = rho22`, `rho33 = rho44` the partial transpose on the
    /// second qubit exchanges `z14` and `z23` and leaves the rest alone.
    pub fn pt_swapped(&self) -> Self {
        let mut z = self.0;
        z.swap(2, 3);
        Self(z)
    }
}

/// Diagonal point on the probability simplex plus the off-diagonal variables.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BlooreCoords {
    pub diag: [f64; 4],
    pub z: ZValues,
}

impl BlooreCoords {
    pub fn new(diag: [f64; 4], z: ZValues) -> Result<Self> {
        if diag.iter().any(|&d| !(d >= 0.0)) {
            return Err(Error::InvalidInput(format!("negative diagonal entry in {diag:?}")));
        }
        let s: f64 = diag.iter().sum();
        if (s - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidInput(format!("diagonal sums to {s}")));
        }
        if !z.in_box() {
            return Err(Error::InvalidInput(format!("z outside [-1,1]: {:?}", z.0)));
        }
        Ok(Self { diag, z })
    }

    /// Product of the diagonal entries (the factor `A` in `det rho = A B`).
    pub fn diag_product(&self) -> f64 {
        self.diag.iter().product()
    }
}

/// The restricted diagonal `rho11 = rho22`, `rho33 = rho44 = (1 - 2 rho11)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RestrictedDiag {
    rho11: f64,
}

impl RestrictedDiag {
    pub fn new(rho11: f64) -> Result<Self> {
        if !(0.0..=0.5).contains(&rho11) {
            return Err(Error::InvalidInput(format!("rho11 = {rho11} outside [0, 1/2]")));
        }
        Ok(Self { rho11 })
    }

    pub fn rho11(&self) -> f64 {
        self.rho11
    }

    pub fn diag(&self) -> [f64; 4] {
        let r = self.rho11;
        let s = (1.0 - 2.0 * r) / 2.0;
        [r, r, s, s]
    }

    /// `(1/4)(1 - 2 rho11)^2 rho11^2`, the diagonal factor of `det rho_PT`.
    pub fn pt_prefactor(&self) -> f64 {
        let r = self.rho11;
        0.25 * (1.0 - 2.0 * r).powi(2) * r * r
    }

    pub fn coords(&self, z: ZValues) -> Result<BlooreCoords> {
        BlooreCoords::new(self.diag(), z)
    }
}

/// Closed interval; `lo > hi` marks it empty.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        Self { lo, hi }
    }

    pub fn empty() -> Self {
        Self { lo: 1.0, hi: -1.0 }
    }

    pub fn is_empty(&self) -> bool {
        !(self.lo <= self.hi)
    }

    pub fn len(&self) -> f64 {
        if self.is_empty() {
            0.0
        } else {
            self.hi - self.lo
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    /// Point at fraction `t` of the way from `lo` to `hi`.
    pub fn lerp(&self, t: f64) -> f64 {
        self.lo + t * (self.hi - self.lo)
    }
}

/// `rho = D^{1/2} Z D^{1/2}` with unit diagonal correlation-like `Z`.
pub fn bloore_compose(coords: &BlooreCoords) -> DensityMatrix {
    let d = coords.diag;
    let mut values = [0.0; 16];
    for i in 0..4 {
        for j in 0..4 {
            values[i * 4 + j] = if i == j { d[i] } else { (d[i] * d[j]).sqrt() * coords.z.get(i, j) };
        }
    }
    DensityMatrix::from_real(4, &values).expect("Bloore composition is symmetric with unit trace")
}

/// The z-only determinant factor: `det rho = (prod rho_ii) * B`.
pub fn factor_b(z: &ZValues) -> f64 {
    let [z12, z13, z14, z23, z24, z34] = z.0;
    (z34 * z34 - 1.0) * z12 * z12
        + 2.0 * (z14 * (z24 - z23 * z34) + z13 * (z23 - z24 * z34)) * z12
        - z23 * z23
        - z24 * z24
        - z34 * z34
        + z14 * z14 * (z23 * z23 - 1.0)
        + z13 * z13 * (z24 * z24 - 1.0)
        + 2.0 * z23 * z24 * z34
        + 2.0 * z13 * z14 * (z34 - z23 * z24)
        + 1.0
}

/// The z-only factor of `det rho_PT` for a restricted diagonal:
/// `det rho_PT = (1/4)(1 - 2 rho11)^2 rho11^2 * D`.
pub fn factor_d(z: &ZValues) -> f64 {
    let [z12, z13, z14, z23, z24, z34] = z.0;
    (z24 * z24 - 1.0) * z13 * z13 + 2.0 * z23 * (z34 - z14 * z24) * z13 - z24 * z24 - z34 * z34
        + (z14 - 1.0) * (z14 + 1.0) * (z23 - 1.0) * (z23 + 1.0)
        + 2.0 * z14 * z24 * z34
        + (z34 * z34 - 1.0) * z12 * z12
        + 2.0 * (z13 * z14 + z23 * z24 - (z14 * z23 + z13 * z24) * z34) * z12
}

/// The cubic `2 (z14 - z23)(z13 - z24)(z12 - z34)`. With the factors as
/// written above it equals `D - B`.
pub fn pt_difference(z: &ZValues) -> f64 {
    let [z12, z13, z14, z23, z24, z34] = z.0;
    2.0 * (z14 - z23) * (z13 - z24) * (z12 - z34)
}

/// z-only factor of the principal 3x3 minor that leaves out index `omit`
/// (zero-based): `1 - a^2 - b^2 - c^2 + 2abc` over the three remaining pairs.
pub fn minor3_factor(z: &ZValues, omit: usize) -> f64 {
    let idx: Vec<usize> = (0..4).filter(|&k| k != omit).collect();
    let a = z.get(idx[0], idx[1]);
    let b = z.get(idx[0], idx[2]);
    let c = z.get(idx[1], idx[2]);
    1.0 - a * a - b * b - c * c + 2.0 * a * b * c
}

/// The designated 3x3 minor used by [`is_feasible`]: rows/columns 1, 2, 3.
pub const FEASIBILITY_MINOR_OMIT: usize = 3;

/// Nested integration limits for `z23`, `z24` and `z34` given the prefix.
///
/// The `z34` interval is empty when `z23` or `z24` lies outside its own
/// interval (the radicand of `s` is then negative) or when `|z12| = 1`.
pub fn cad_limits(z12: f64, z13: f64, z14: f64, z23: f64, z24: f64) -> (Interval, Interval, Interval) {
    let r12 = (1.0 - z12 * z12).max(0.0).sqrt();
    let r13 = (1.0 - z13 * z13).max(0.0).sqrt();
    let r14 = (1.0 - z14 * z14).max(0.0).sqrt();
    let i23 = Interval::new(z12 * z13 - r12 * r13, z12 * z13 + r12 * r13);
    let i24 = Interval::new(z12 * z14 - r12 * r14, z12 * z14 + r12 * r14);

    let m123 = 1.0 - z12 * z12 - z13 * z13 - z23 * z23 + 2.0 * z12 * z13 * z23;
    let m124 = 1.0 - z12 * z12 - z14 * z14 - z24 * z24 + 2.0 * z12 * z14 * z24;
    let denom = 1.0 - z12 * z12;
    let i34 = if m123 < 0.0 || m124 < 0.0 || denom <= 0.0 {
        Interval::empty()
    } else {
        let s = (m123 * m124).sqrt();
        let centre = z13 * z14 - z12 * z14 * z23 - z12 * z13 * z24 + z23 * z24;
        Interval::new((centre - s) / denom, (centre + s) / denom)
    };
    (i23, i24, i34)
}

/// Maps a point of the unit cube to a feasible `z` through the nested limits.
///
/// Returns the point and the product of the interval lengths times `2^3` for
/// the outer box, i.e. the Jacobian of the map. `None` on a degenerate prefix.
pub fn cad_map(u: &[f64; 6]) -> Option<(ZValues, f64)> {
    let z12 = 2.0 * u[0] - 1.0;
    let z13 = 2.0 * u[1] - 1.0;
    let z14 = 2.0 * u[2] - 1.0;
    let (i23, i24, _) = cad_limits(z12, z13, z14, 0.0, 0.0);
    let z23 = i23.lerp(u[3]);
    let z24 = i24.lerp(u[4]);
    let (_, _, i34) = cad_limits(z12, z13, z14, z23, z24);
    if i34.is_empty() {
        return None;
    }
    let z34 = i34.lerp(u[5]);
    let weight = 8.0 * i23.len() * i24.len() * i34.len();
    Some((ZValues::new(z12, z13, z14, z23, z24, z34), weight))
}

/// Positive semidefiniteness of the composed matrix.
///
/// With a strictly positive diagonal this is `B >= 0` plus the designated
/// 3x3 minor factor `>= 0` (the box already covers the 2x2 minors). With a
/// zero diagonal entry the factorization carries no sign information, so the
/// eigenvalues of the composed matrix decide.
pub fn is_feasible(coords: &BlooreCoords) -> bool {
    if coords.diag.iter().any(|&d| d <= 0.0) {
        return bloore_compose(coords).is_positive();
    }
    coords.z.in_box() && factor_b(&coords.z) >= 0.0 && minor3_factor(&coords.z, FEASIBILITY_MINOR_OMIT) >= 0.0
}

/// Separability of a restricted-diagonal state from the z-factors alone:
/// feasible and `D >= 0`. For two qubits the partial transpose of a state has
/// at most one negative eigenvalue, so the sign of its determinant decides.
pub fn is_separable_restricted(z: &ZValues) -> bool {
    z.in_box()
        && factor_b(z) >= 0.0
        && minor3_factor(z, FEASIBILITY_MINOR_OMIT) >= 0.0
        && factor_d(z) >= 0.0
}
