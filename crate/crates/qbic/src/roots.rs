//! All-roots complex polynomial solver: Aberth–Ehrlich simultaneous
//! iteration with a deterministic circular start and per-root Newton
//! polish.

use num_complex::Complex;
use num_traits::{Float, FloatConst};
use thiserror::Error;

use crate::poly::Poly;

/// Default radius for grouping near-coincident roots. Small enough that
/// conjugate QBIC partners a few 1e−7 apart are never merged.
pub const DEFAULT_CLUSTER_RADIUS: f64 = 1e-9;

#[derive(Debug, Clone, Error)]
pub enum RootsError<T: Float + std::fmt::Debug + 'static> {
    #[error("polynomial must have degree ≥ 1")]
    DegreeTooLow,
    #[error("tolerance must be positive")]
    BadTolerance,
    #[error("no convergence after {iterations} iterations; worst residual {worst_residual}")]
    NonConvergence {
        iterations: usize,
        worst_residual: T,
        /// best iterates at the point of giving up
        roots: Vec<Complex<T>>,
        residuals: Vec<T>,
    },
    #[error("non-finite iterate encountered")]
    NonFinite,
}

/// All roots of a polynomial, with per-root `|P(z)|` residuals and
/// iteration counts.
#[derive(Debug, Clone)]
pub struct RootSet<T> {
    pub roots: Vec<Complex<T>>,
    pub residuals: Vec<T>,
    pub iterations: Vec<usize>,
}

impl<T: Float> RootSet<T> {
    /// Group roots into clusters of pairwise distance below `radius`
    /// (transitive closure); returns one cluster id per root.
    ///
    /// A repeated root of multiplicity m is only resolvable to within
    /// roughly `eps^(1/m)`, so the radius must be chosen for the use
    /// case; the default suits simple roots.
    pub fn clusters(&self, radius: T) -> Vec<usize> {
        let n = self.roots.len();
        let mut id: Vec<usize> = (0..n).collect();
        fn find(id: &mut [usize], i: usize) -> usize {
            if id[i] != i {
                let r = find(id, id[i]);
                id[i] = r;
            }
            id[i]
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if (self.roots[i] - self.roots[j]).norm() < radius {
                    let (a, b) = (find(&mut id, i), find(&mut id, j));
                    if a != b {
                        id[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        (0..n).map(|i| find(&mut id, i)).collect()
    }

    /// Indices of roots whose residual exceeds the backward-error bound
    /// `tol·max|c|·max(1,|z|)^degree`.
    pub fn flagged(&self, poly: &Poly<Complex<T>>, tol: T) -> Vec<usize> {
        let max_c = poly
            .coeffs()
            .iter()
            .map(|c| c.norm())
            .fold(T::zero(), T::max);
        let degree = poly.degree().unwrap_or(0) as i32;
        self.roots
            .iter()
            .zip(&self.residuals)
            .enumerate()
            .filter(|(_, (z, &r))| r > tol * max_c * z.norm().max(T::one()).powi(degree))
            .map(|(i, _)| i)
            .collect()
    }
}

/// Find all complex roots of `p` (with multiplicity).
///
/// Simultaneous Aberth–Ehrlich iteration from a deterministic circular
/// start (radius `1 + max|cᵢ/c_n|`, fixed phase offset to break the
/// conjugation tie), stopping when every correction falls below
/// `tol·max(1,|z|)`, then a short Newton polish per root. Conjugate
/// symmetry of real-coefficient input survives to within `tol`.
pub fn find_roots<T: Float + FloatConst + std::fmt::Debug>(
    p: &Poly<Complex<T>>,
    tol: T,
    max_iter: usize,
) -> Result<RootSet<T>, RootsError<T>> {
    let degree = p.degree().filter(|&d| d >= 1).ok_or(RootsError::DegreeTooLow)?;
    if !(tol > T::zero()) {
        return Err(RootsError::BadTolerance);
    }

    // monic normalization
    let lead = p.coeff(degree);
    let monic = p.scale(lead.inv());
    let dmonic = monic.derivative();

    // Cauchy-style inclusion radius
    let radius = T::one()
        + monic
            .coeffs()
            .iter()
            .take(degree)
            .map(|c| c.norm())
            .fold(T::zero(), T::max);
    let n_t = T::from(degree).unwrap();
    let offset = T::from(0.7391).unwrap(); // fixed tie-breaking phase
    let mut z: Vec<Complex<T>> = (0..degree)
        .map(|k| {
            let theta = T::from(2.0).unwrap() * T::PI() * T::from(k).unwrap() / n_t + offset;
            Complex::from_polar(radius, theta)
        })
        .collect();

    let mut iterations = 0usize;
    let mut converged = false;
    while iterations < max_iter {
        iterations += 1;
        let mut max_step = T::zero();
        for k in 0..degree {
            let pk = monic.eval(z[k]);
            let dpk = dmonic.eval(z[k]);
            if !pk.is_finite() || !dpk.is_finite() {
                return Err(RootsError::NonFinite);
            }
            if pk.norm() == T::zero() {
                continue;
            }
            let newton = pk / dpk;
            let mut repulsion = Complex::zero();
            for j in 0..degree {
                if j != k {
                    repulsion = repulsion + (z[k] - z[j]).inv();
                }
            }
            let denom = Complex::<T>::one() - newton * repulsion;
            let step = if denom.norm() > T::epsilon() {
                newton / denom
            } else {
                newton
            };
            z[k] = z[k] - step;
            max_step = max_step.max(step.norm() / z[k].norm().max(T::one()));
        }
        if max_step < tol {
            converged = true;
            break;
        }
    }

    // Newton polish, kept only while it improves |P|
    let mut residuals = vec![T::zero(); degree];
    let mut iter_counts = vec![iterations; degree];
    for k in 0..degree {
        let mut best = z[k];
        let mut best_res = monic.eval(best).norm();
        let mut cur = best;
        for _ in 0..3 {
            let pv = monic.eval(cur);
            let dv = dmonic.eval(cur);
            if dv.norm() == T::zero() {
                break;
            }
            cur = cur - pv / dv;
            let res = monic.eval(cur).norm();
            iter_counts[k] += 1;
            if res < best_res {
                best = cur;
                best_res = res;
            } else {
                break;
            }
        }
        z[k] = best;
        residuals[k] = best_res;
    }

    if !converged {
        let worst = residuals.iter().cloned().fold(T::zero(), T::max);
        // repeated roots stall the relative-step test while the values
        // are already backward-stable; accept on residual instead
        let max_c = monic.coeffs().iter().map(|c| c.norm()).fold(T::zero(), T::max);
        let acceptable = residuals.iter().zip(&z).all(|(&r, zk)| {
            r <= T::from(1e3).unwrap() * T::epsilon() * max_c * zk.norm().max(T::one()).powi(degree as i32)
        });
        if !acceptable {
            return Err(RootsError::NonConvergence {
                iterations,
                worst_residual: worst,
                roots: z,
                residuals,
            });
        }
    }

    Ok(RootSet {
        roots: z,
        residuals,
        iterations: iter_counts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::ModelParams;
    use crate::poly::dispersion_polynomial;
    use num_complex::Complex64;

    fn to_complex(p: &Poly<f64>) -> Poly<Complex64> {
        Poly::new(p.coeffs().iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    #[test]
    fn quadratic_i() {
        // z² + 1
        let p = Poly::new(vec![Complex64::new(1.0, 0.0), Complex64::ZERO, Complex64::new(1.0, 0.0)]);
        let rs = find_roots(&p, 1e-13, 100).unwrap();
        let mut roots = rs.roots.clone();
        roots.sort_by(|a, b| a.im.partial_cmp(&b.im).unwrap());
        assert!((roots[0] - Complex64::new(0.0, -1.0)).norm() < 1e-12);
        assert!((roots[1] - Complex64::new(0.0, 1.0)).norm() < 1e-12);
    }

    #[test]
    fn triple_root_clusters() {
        // (z−2)³ = z³ − 6z² + 12z − 8; a triple root is resolvable only
        // to ~eps^(1/3), cluster at the matching radius
        let p = Poly::new(
            [-8.0, 12.0, -6.0, 1.0]
                .iter()
                .map(|&c| Complex64::new(c, 0.0))
                .collect(),
        );
        let rs = find_roots(&p, 1e-13, 200).unwrap();
        assert_eq!(rs.roots.len(), 3);
        for z in &rs.roots {
            assert!((z - Complex64::new(2.0, 0.0)).norm() < 1e-4);
        }
        let ids = rs.clusters(1e-3);
        assert!(ids.iter().all(|&i| i == ids[0]), "single cluster expected");
    }

    #[test]
    fn dispersion_roots_match_reference_energies() {
        // canonical demo parameters; reference values from the
        // sheet-resolved transcendental solver at high precision
        let params = ModelParams::unit_hopping(0.345, 0.1, 0.3).unwrap();
        let p = to_complex(&dispersion_polynomial(&params));
        let rs = find_roots(&p, 1e-13, 200).unwrap();
        assert_eq!(rs.roots.len(), 12);
        let mut re: Vec<f64> = rs.roots.iter().map(|z| z.re).collect();
        re.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let expected = [
            -1.3450046399654,
            -1.3450045987427,
            -0.6550137040307,
            -0.6550137040307,
            0.2999192745269,
            0.2999192745269,
            0.2999885408330,
            0.2999885408330,
            0.6550990612933,
            0.6550990612933,
            1.3450113663350,
            1.3450115271283,
        ];
        for (got, want) in re.iter().zip(expected) {
            assert!(
                (got - want).abs() < 1e-7,
                "sorted Re root {got} vs reference {want}"
            );
        }
    }

    #[test]
    fn conjugate_symmetry_of_real_input() {
        let params = ModelParams::unit_hopping(0.345, 0.1, 0.3).unwrap();
        let p = to_complex(&dispersion_polynomial(&params));
        let rs = find_roots(&p, 1e-13, 200).unwrap();
        for z in &rs.roots {
            let conj_dist = rs
                .roots
                .iter()
                .map(|w| (w - z.conj()).norm())
                .fold(f64::INFINITY, f64::min);
            assert!(conj_dist < 1e-12, "no conjugate partner for {z}");
        }
    }

    #[test]
    fn root_coefficient_consistency() {
        let params = ModelParams::unit_hopping(0.5, 0.25, -0.7).unwrap();
        let p = to_complex(&dispersion_polynomial(&params));
        let rs = find_roots(&p, 1e-13, 200).unwrap();
        assert!(rs.flagged(&p, 1e-12).is_empty());
    }

    #[test]
    fn degree_zero_rejected() {
        let p = Poly::new(vec![Complex64::new(3.0, 0.0)]);
        assert!(matches!(find_roots(&p, 1e-13, 50), Err(RootsError::DegreeTooLow)));
        assert!(matches!(
            find_roots(&Poly::<Complex64>::zero(), 1e-13, 50),
            Err(RootsError::DegreeTooLow)
        ));
    }

    #[test]
    fn nonconvergence_carries_best_iterates() {
        let params = ModelParams::unit_hopping(0.345, 0.1, 0.3).unwrap();
        let p = to_complex(&dispersion_polynomial(&params));
        match find_roots(&p, 1e-13, 2) {
            Err(RootsError::NonConvergence { roots, residuals, .. }) => {
                assert_eq!(roots.len(), 12);
                assert_eq!(residuals.len(), 12);
            }
            other => panic!("expected NonConvergence, got {other:?}"),
        }
    }
}
