//! Solutions of `ẋ = −∇^g_x x` on the algebra, written as the system
//! `ȧ = −∇_a a − ∇′_b a`, `ḃ = −∇_a b − ∇′_b b` for `x = (a, b)`.

use std::fmt::Write as _;

use serde::Serialize;

use crate::algebra::{AffineSymplecticData, Connection};
use crate::error::{Error, Result};
use crate::linalg::{add, is_zero_vector, neg, scale, Vector};
use crate::rational::{self, Rational};

/// `a(t) = a_rate·t + a0`, `b(t) = b_rate·t + b0`, defined for all real `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeodesicCurve {
    pub a0: Vector,
    pub b0: Vector,
    pub a_rate: Vector,
    pub b_rate: Vector,
}

impl GeodesicCurve {
    pub fn at(&self, t: &Rational) -> (Vector, Vector) {
        (
            add(&scale(t, &self.a_rate), &self.a0),
            add(&scale(t, &self.b_rate), &self.b0),
        )
    }

    /// `(a(t), b(t))` in floating point.
    pub fn at_f64(&self, t: f64) -> Vec<f64> {
        let f = |r: &Vector, c: &Vector| -> Vec<f64> {
            r.iter()
                .zip(c)
                .map(|(r, c)| rational::to_f64(r) * t + rational::to_f64(c))
                .collect()
        };
        let mut out = f(&self.a_rate, &self.a0);
        out.extend(f(&self.b_rate, &self.b0));
        out
    }
}

/// Coefficients of `B(u0 + tU, v0 + tV)` in `t⁰, t¹, t²`.
fn bilinear_on_lines(
    c: &Connection,
    (u0, u1): (&[Rational], &[Rational]),
    (v0, v1): (&[Rational], &[Rational]),
) -> [Vector; 3] {
    [
        c.apply(u0, v0),
        add(&c.apply(u1, v0), &c.apply(u0, v1)),
        c.apply(u1, v1),
    ]
}

/// Residual `ẋ + ∇^g_x x` of a linear curve, as exact coefficients of
/// `t⁰, t¹, t²`, each stacked as `(a-part, b-part)`.
pub fn residual_coefficients(data: &AffineSymplecticData, curve: &GeodesicCurve) -> [Vector; 3] {
    let (n, np) = (data.nabla(), data.nabla_prime());
    let a = (curve.a0.as_slice(), curve.a_rate.as_slice());
    let b = (curve.b0.as_slice(), curve.b_rate.as_slice());
    let aa = bilinear_on_lines(n, a, a);
    let ba = bilinear_on_lines(np, b, a);
    let ab = bilinear_on_lines(n, a, b);
    let bb = bilinear_on_lines(np, b, b);
    let m = data.dim();
    let zero = vec![rational::zero(); m];
    std::array::from_fn(|d| {
        let (da, db) = if d == 0 {
            (curve.a_rate.clone(), curve.b_rate.clone())
        } else {
            (zero.clone(), zero.clone())
        };
        let mut out = add(&da, &add(&aa[d], &ba[d]));
        out.extend(add(&db, &add(&ab[d], &bb[d])));
        out
    })
}

/// The explicit solution with `x(0) = (a0, b0)`:
/// `a(t) = (−∇_{a0} a0 − ∇′_{a0} b0) t + a0`, `b(t) = (−∇_{a0} b0 − ∇′_{b0} b0) t + b0`.
///
/// The residual against the system is verified to vanish identically.
pub fn geodesic_closed_form(data: &AffineSymplecticData, a0: &[Rational], b0: &[Rational]) -> Result<GeodesicCurve> {
    let m = data.dim();
    for v in [a0, b0] {
        if v.len() != m {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: v.len(),
            });
        }
    }
    let (n, np) = (data.nabla(), data.nabla_prime());
    let curve = GeodesicCurve {
        a0: a0.to_vec(),
        b0: b0.to_vec(),
        a_rate: neg(&add(&n.apply(a0, a0), &np.apply(a0, b0))),
        b_rate: neg(&add(&n.apply(a0, b0), &np.apply(b0, b0))),
    };
    if let Some(d) = residual_coefficients(data, &curve)
        .iter()
        .position(|c| !is_zero_vector(c))
    {
        return Err(Error::internal(format!(
            "geodesic residual has a nonzero t^{d} coefficient"
        )));
    }
    Ok(curve)
}

/// A sampled numerical trajectory, state laid out as `(a_1..a_m, b_1..b_m)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Trajectory {
    pub m: usize,
    pub times: Vec<f64>,
    pub states: Vec<Vec<f64>>,
}

impl Trajectory {
    /// Largest max-norm distance from `curve` over all samples.
    pub fn max_deviation(&self, curve: &GeodesicCurve) -> f64 {
        let to_f = |v: &Vector| v.iter().map(rational::to_f64).collect::<Vec<f64>>();
        let start: Vec<f64> = to_f(&curve.a0).into_iter().chain(to_f(&curve.b0)).collect();
        let rate: Vec<f64> = to_f(&curve.a_rate).into_iter().chain(to_f(&curve.b_rate)).collect();
        self.times
            .iter()
            .zip(&self.states)
            .map(|(&t, s)| {
                s.iter()
                    .zip(start.iter().zip(&rate))
                    .map(|(v, (c, r))| (v - (r * t + c)).abs())
                    .fold(0.0, f64::max)
            })
            .fold(0.0, f64::max)
    }

    /// CSV with header `t,a_1..a_m,b_1..b_m`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t");
        for p in ["a", "b"] {
            for i in 1..=self.m {
                let _ = write!(out, ",{p}_{i}");
            }
        }
        out.push('\n');
        for (t, s) in self.times.iter().zip(&self.states) {
            let _ = write!(out, "{t}");
            for v in s {
                let _ = write!(out, ",{v}");
            }
            out.push('\n');
        }
        out
    }
}

/// Sparse floating-point copy of a connection.
struct FloatConnection(Vec<(usize, usize, usize, f64)>);

impl FloatConnection {
    fn new(c: &Connection) -> Self {
        let t = c.tensor();
        Self(
            t.support()
                .iter()
                .map(|&(k, i, j)| (k, i, j, rational::to_f64(t.get(k, i, j))))
                .collect(),
        )
    }

    fn apply_into(&self, x: &[f64], y: &[f64], out: &mut [f64]) {
        for &(k, i, j, c) in &self.0 {
            out[k] += c * x[i] * y[j];
        }
    }
}

/// Classical fixed-step fourth-order Runge-Kutta for `ẏ = f(y)` from `t = 0`,
/// returning every sample including the initial one.
pub fn rk4(
    start: &[f64],
    step: f64,
    steps: usize,
    f: impl Fn(&[f64], &mut [f64]),
) -> (Vec<f64>, Vec<Vec<f64>>) {
    let n = start.len();
    let mut state = start.to_vec();
    let mut times = Vec::with_capacity(steps + 1);
    let mut states = Vec::with_capacity(steps + 1);
    times.push(0.0);
    states.push(state.clone());
    let mut k = [vec![0.0; n], vec![0.0; n], vec![0.0; n], vec![0.0; n]];
    let mut tmp = vec![0.0; n];
    for i in 1..=steps {
        f(&state, &mut k[0]);
        for (stage, h) in [(1, step / 2.0), (2, step / 2.0), (3, step)] {
            for d in 0..n {
                tmp[d] = state[d] + h * k[stage - 1][d];
            }
            f(&tmp, &mut k[stage]);
        }
        for d in 0..n {
            state[d] += step / 6.0 * (k[0][d] + 2.0 * k[1][d] + 2.0 * k[2][d] + k[3][d]);
        }
        times.push(i as f64 * step);
        states.push(state.clone());
    }
    (times, states)
}

/// [`rk4`] applied to the geodesic system,
/// sampled at every step from `t = 0` to `t_end`.
pub fn geodesic_numeric(
    data: &AffineSymplecticData,
    a0: &[Rational],
    b0: &[Rational],
    t_end: f64,
    step: f64,
) -> Result<Trajectory> {
    let m = data.dim();
    if !(step > 0.0 && step.is_finite()) {
        return Err(Error::Input(format!("step must be positive, got {step}")));
    }
    if !(t_end >= 0.0 && t_end.is_finite()) {
        return Err(Error::Input(format!("t_end must be non-negative, got {t_end}")));
    }
    if a0.len() != m || b0.len() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: a0.len().max(b0.len()),
        });
    }
    let n = FloatConnection::new(data.nabla());
    let np = FloatConnection::new(data.nabla_prime());
    let rhs = |s: &[f64], out: &mut [f64]| {
        out.fill(0.0);
        let (a, b) = s.split_at(m);
        let (da, db) = out.split_at_mut(m);
        n.apply_into(a, a, da);
        np.apply_into(b, a, da);
        n.apply_into(a, b, db);
        np.apply_into(b, b, db);
        out.iter_mut().for_each(|v| *v = -*v);
    };

    let start: Vec<f64> = a0.iter().chain(b0).map(rational::to_f64).collect();
    let (times, states) = rk4(&start, step, (t_end / step).round() as usize, rhs);
    Ok(Trajectory { m, times, states })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::SymplecticForm;
    use crate::families::{kodaira_data, threestep_data};
    use crate::linalg::{unit_vector, zero_vector};
    use crate::rational::int;

    #[test]
    fn kodaira_geodesic_from_e1() {
        let data = kodaira_data(1).unwrap();
        let curve = geodesic_closed_form(&data, &unit_vector(4, 0), &zero_vector(4)).unwrap();
        assert_eq!(curve.a_rate, neg(&unit_vector(4, 1)));
        assert!(is_zero_vector(&curve.b_rate));
        let (a, b) = curve.at(&int(3));
        assert_eq!(a, vec![int(1), int(-3), int(0), int(0)]);
        assert!(is_zero_vector(&b));
    }

    #[test]
    fn abelian_geodesics_are_constant() {
        let w = SymplecticForm::canonical(2).unwrap();
        let data = AffineSymplecticData::new(Connection::zero(2), Connection::zero(2), w).unwrap();
        let (a0, b0) = (vec![int(2), int(-1)], vec![int(5), int(7)]);
        let curve = geodesic_closed_form(&data, &a0, &b0).unwrap();
        assert!(is_zero_vector(&curve.a_rate) && is_zero_vector(&curve.b_rate));
        let traj = geodesic_numeric(&data, &a0, &b0, 1.0, 0.01).unwrap();
        assert_eq!(traj.max_deviation(&curve), 0.0);
    }

    #[test]
    fn numeric_tracks_closed_form() {
        let data = threestep_data(&int(0), &int(1), &int(0)).unwrap();
        let e1 = unit_vector(4, 0);
        let curve = geodesic_closed_form(&data, &e1, &e1).unwrap();
        let traj = geodesic_numeric(&data, &e1, &e1, 10.0, 1e-3).unwrap();
        assert_eq!(traj.times.len(), 10_001);
        assert!(traj.max_deviation(&curve) <= 1e-8);
    }

    #[test]
    fn rk4_has_fourth_order_on_exponential() {
        let err = |h: f64| {
            let (_, states) = rk4(&[1.0], h, (1.0 / h).round() as usize, |y, out| out[0] = y[0]);
            (states.last().unwrap()[0] - std::f64::consts::E).abs()
        };
        let ratio = err(0.1) / err(0.05);
        assert!((14.0..=18.0).contains(&ratio), "ratio {ratio}");
    }

    #[test]
    fn linear_solutions_are_reproduced_at_any_step() {
        // every stage point of a step lies on the exact line
        let data = threestep_data(&int(0), &int(1), &int(0)).unwrap();
        let e1 = unit_vector(4, 0);
        let curve = geodesic_closed_form(&data, &e1, &e1).unwrap();
        for step in [0.5, 0.1, 1e-3] {
            let dev = geodesic_numeric(&data, &e1, &e1, 10.0, step).unwrap().max_deviation(&curve);
            assert!(dev < 1e-10, "step {step}: {dev}");
        }
    }

    #[test]
    fn rejects_bad_step() {
        let data = kodaira_data(1).unwrap();
        let z = zero_vector(4);
        assert!(geodesic_numeric(&data, &z, &z, 1.0, 0.0).is_err());
        assert!(geodesic_numeric(&data, &z, &z, 1.0, f64::NAN).is_err());
    }

    #[test]
    fn csv_header() {
        let data = kodaira_data(1).unwrap();
        let z = zero_vector(4);
        let csv = geodesic_numeric(&data, &z, &z, 0.5, 0.25).unwrap().to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("t,a_1,a_2,a_3,a_4,b_1,b_2,b_3,b_4"));
        assert_eq!(lines.count(), 3);
    }
}
