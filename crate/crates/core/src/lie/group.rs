//! The group law on `Qᵐ × Qᵐ` and its audit.
//!
//! `(x, x')·(y, y') = (x + α(x', y), β(x', y) + y')` with
//! `α(x', y) = y + ∇′_y x' − ½ ∇′_y ∇_y x'` and
//! `β(x', y) = x' − ∇_{x'} y − ½ ∇_{x'} ∇′_{x'} y`.

use serde::Serialize;

use crate::algebra::AffineSymplecticData;
use crate::linalg::{add, concat, neg, scale, sub, unit_vector, zero_vector, Matrix, Vector};
use crate::rational::{self, Rational};

/// A point `(x, x')` of the group in its global chart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupElement {
    pub x: Vector,
    pub x_prime: Vector,
}

impl GroupElement {
    pub fn new(x: Vector, x_prime: Vector) -> Self {
        assert_eq!(x.len(), x_prime.len(), "both halves must have length m");
        Self { x, x_prime }
    }

    pub fn identity(m: usize) -> Self {
        Self::new(zero_vector(m), zero_vector(m))
    }

    /// Splits a `2m`-vector `(x, x')`.
    pub fn from_coords(v: &[Rational]) -> Self {
        assert!(v.len().is_multiple_of(2), "coordinate vector must have even length");
        let (x, xp) = v.split_at(v.len() / 2);
        Self::new(x.to_vec(), xp.to_vec())
    }

    pub fn coords(&self) -> Vector {
        concat(&self.x, &self.x_prime)
    }

    pub fn dim(&self) -> usize {
        self.x.len()
    }
}

/// Group operations for one set of validated data.
#[derive(Debug, Clone, Copy)]
pub struct DoubleGroup<'a> {
    data: &'a AffineSymplecticData,
}

impl<'a> DoubleGroup<'a> {
    pub fn new(data: &'a AffineSymplecticData) -> Self {
        Self { data }
    }

    pub fn dim(&self) -> usize {
        self.data.dim()
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::identity(self.dim())
    }

    /// `α_{x'}(y)`.
    pub fn alpha(&self, x_prime: &[Rational], y: &[Rational]) -> Vector {
        let (n, np) = (self.data.nabla(), self.data.nabla_prime());
        let lin = np.apply(y, x_prime);
        let quad = np.apply(y, &n.apply(y, x_prime));
        sub(&add(y, &lin), &scale(&rational::half(), &quad))
    }

    /// `β_y(x')`.
    pub fn beta(&self, x_prime: &[Rational], y: &[Rational]) -> Vector {
        let (n, np) = (self.data.nabla(), self.data.nabla_prime());
        let lin = n.apply(x_prime, y);
        let quad = n.apply(x_prime, &np.apply(x_prime, y));
        sub(&sub(x_prime, &lin), &scale(&rational::half(), &quad))
    }

    pub fn multiply(&self, p: &GroupElement, q: &GroupElement) -> GroupElement {
        GroupElement::new(
            add(&p.x, &self.alpha(&p.x_prime, &q.x)),
            add(&self.beta(&p.x_prime, &q.x), &q.x_prime),
        )
    }

    /// `(α(−x', −x), β(−x', −x))`.
    pub fn inverse(&self, p: &GroupElement) -> GroupElement {
        let (mx, mxp) = (neg(&p.x), neg(&p.x_prime));
        GroupElement::new(self.alpha(&mxp, &mx), self.beta(&mxp, &mx))
    }

    /// Exact Jacobian of `r ↦ p·r` at `r = q`, in the chart `(y, y')`.
    ///
    /// The first slot `x + α(x', y)` does not depend on `y'`; the second slot
    /// `β(x', y) + y'` is linear in `y` and has identity `y'`-derivative.
    pub fn left_translation_jacobian(&self, p: &GroupElement, q: &GroupElement) -> Matrix {
        let m = self.dim();
        let (n, np) = (self.data.nabla(), self.data.nabla_prime());
        let xp = &p.x_prime;
        let y = &q.x;
        let n_y_xp = n.apply(y, xp);
        let mut jac = Matrix::zeros(2 * m, 2 * m);
        for j in 0..m {
            let v = unit_vector(m, j);
            // dα: v + ∇′_v x' − ½(∇′_v ∇_y x' + ∇′_y ∇_v x')
            let quad = add(&np.apply(&v, &n_y_xp), &np.apply(y, &n.apply(&v, xp)));
            let da = sub(&add(&v, &np.apply(&v, xp)), &scale(&rational::half(), &quad));
            // dβ: −∇_{x'} v − ½ ∇_{x'} ∇′_{x'} v
            let db = neg(&add(
                &n.apply(xp, &v),
                &scale(&rational::half(), &n.apply(xp, &np.apply(xp, &v))),
            ));
            for i in 0..m {
                jac[(i, j)] = da[i].clone();
                jac[(m + i, j)] = db[i].clone();
            }
            jac[(m + j, m + j)] = rational::one();
        }
        jac
    }

    /// Linear part of `y ↦ α(x', y)` at `y = 0`, extracted as the odd part of
    /// a polynomial of degree two: `(α(x', v) − α(x', −v)) / 2`.
    pub fn alpha_linearization(&self, x_prime: &[Rational]) -> Matrix {
        let m = self.dim();
        let cols: Vec<Vector> = (0..m)
            .map(|j| {
                let v = unit_vector(m, j);
                let d = sub(&self.alpha(x_prime, &v), &self.alpha(x_prime, &neg(&v)));
                scale(&rational::half(), &d)
            })
            .collect();
        Matrix::from_columns(&cols)
    }

    /// Linear part of `x' ↦ β(x', y)` at `x' = 0`, by the same odd-part trick.
    pub fn beta_linearization(&self, y: &[Rational]) -> Matrix {
        let m = self.dim();
        let cols: Vec<Vector> = (0..m)
            .map(|j| {
                let v = unit_vector(m, j);
                let d = sub(&self.beta(&v, y), &self.beta(&neg(&v), y));
                scale(&rational::half(), &d)
            })
            .collect();
        Matrix::from_columns(&cols)
    }

    /// Points `s·b_i` for every basis vector `b_i` of `Qᵐ ⊕ Qᵐ` and every
    /// `s ∈ {−1, 1, 2}`.
    pub fn basis_grid(&self) -> Vec<GroupElement> {
        let n = 2 * self.dim();
        let mut pts = Vec::with_capacity(3 * n);
        for i in 0..n {
            for s in [-1, 1, 2] {
                pts.push(GroupElement::from_coords(&scale(&rational::int(s), &unit_vector(n, i))));
            }
        }
        pts
    }

    /// Checks every group, action and compatibility law exactly on all
    /// points, pairs and triples drawn from [`DoubleGroup::basis_grid`],
    /// plus the given sample triples.
    pub fn audit(&self, samples: &[[GroupElement; 3]]) -> AuditReport {
        let mut report = AuditReport::default();
        let grid = self.basis_grid();
        for p in &grid {
            self.audit_point(p, &mut report);
            for q in &grid {
                self.audit_pair(p, q, &mut report);
                let pq = self.multiply(p, q);
                for r in &grid {
                    self.audit_triple(p, q, r, &pq, &mut report);
                }
            }
        }
        report.merge(self.audit_samples(samples));
        report
    }

    /// Checks the same laws on the given triples only.
    pub fn audit_samples(&self, samples: &[[GroupElement; 3]]) -> AuditReport {
        let mut report = AuditReport::default();
        for [p, q, r] in samples {
            self.audit_point(p, &mut report);
            self.audit_pair(p, q, &mut report);
            self.audit_triple(p, q, r, &self.multiply(p, q), &mut report);
        }
        report
    }

    /// Laws involving a single point `p = (x', ·)`, also read as `y = x`.
    fn audit_point(&self, p: &GroupElement, report: &mut AuditReport) {
        let m = self.dim();
        let zero = zero_vector(m);
        let e = self.identity();
        let (y, xp) = (&p.x, &p.x_prime);
        let points = || vec![p.clone()];
        let inv = self.inverse(p);
        report.record("identity", self.multiply(&e, p) == *p && self.multiply(p, &e) == *p, points);
        report.record("inverse", self.multiply(p, &inv) == e && self.multiply(&inv, p) == e, points);
        report.record("alpha_identity", self.alpha(&zero, y) == *y, points);
        report.record("alpha_fixes_zero", self.alpha(xp, &zero) == zero, points);
        report.record("beta_identity", self.beta(xp, &zero) == *xp, points);
        report.record("beta_fixes_zero", self.beta(&zero, y) == zero, points);
        let ident = Matrix::identity(m);
        report.record(
            "alpha_linearization",
            self.alpha_linearization(xp) == ident.add(&self.data.nabla_prime().operator(xp)),
            points,
        );
        report.record(
            "beta_linearization",
            self.beta_linearization(y) == ident.sub(&self.data.nabla().operator(y)),
            points,
        );
    }

    fn audit_pair(&self, p: &GroupElement, q: &GroupElement, report: &mut AuditReport) {
        let (x, xp) = (&p.x, &p.x_prime);
        let (y, yp) = (&q.x, &q.x_prime);
        let points = || vec![p.clone(), q.clone()];
        report.record(
            "beta_action",
            self.beta(xp, &add(x, y)) == self.beta(&self.beta(xp, x), y),
            points,
        );
        report.record(
            "alpha_compatibility",
            self.alpha(xp, &add(x, y)) == add(&self.alpha(xp, x), &self.alpha(&self.beta(xp, x), y)),
            points,
        );
        report.record(
            "beta_compatibility",
            self.beta(&add(xp, yp), x) == add(&self.beta(xp, &self.alpha(yp, x)), &self.beta(yp, x)),
            points,
        );
    }

    /// `pq` is `p·q`, shared across the innermost loop.
    fn audit_triple(
        &self,
        p: &GroupElement,
        q: &GroupElement,
        r: &GroupElement,
        pq: &GroupElement,
        report: &mut AuditReport,
    ) {
        let points = || vec![p.clone(), q.clone(), r.clone()];
        report.record(
            "associativity",
            self.multiply(pq, r) == self.multiply(p, &self.multiply(q, r)),
            points,
        );
        let (xp, yp, z) = (&p.x_prime, &q.x_prime, &r.x);
        report.record(
            "alpha_action",
            self.alpha(&add(xp, yp), z) == self.alpha(xp, &self.alpha(yp, z)),
            points,
        );
    }
}

/// Which law failed first, on which points.
#[derive(Debug, Clone)]
pub struct AuditFailure {
    pub law: &'static str,
    pub points: Vec<GroupElement>,
}

#[derive(Debug, Clone, Default)]
pub struct AuditReport {
    pub checks: usize,
    pub failure: Option<AuditFailure>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    fn record(&mut self, law: &'static str, ok: bool, points: impl FnOnce() -> Vec<GroupElement>) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(AuditFailure { law, points: points() });
        }
    }

    fn merge(&mut self, other: AuditReport) {
        self.checks += other.checks;
        if self.failure.is_none() {
            self.failure = other.failure;
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditSummary {
    pub checks: usize,
    pub passed: bool,
    pub failed_law: Option<&'static str>,
}

impl From<&AuditReport> for AuditSummary {
    fn from(r: &AuditReport) -> Self {
        Self {
            checks: r.checks,
            passed: r.passed(),
            failed_law: r.failure.as_ref().map(|f| f.law),
        }
    }
}
