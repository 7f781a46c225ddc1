//! Simultaneous-iteration root extraction for integer polynomials.

use bcf_engine::IntPoly;
use num_complex::Complex64;

use crate::RootError;

const MAX_SWEEPS: u32 = 500;
const STEP_TOL: f64 = 1e-14;
const POLISH_STEPS: usize = 3;
/// Fixed rotation of the initial circle (radians); pinned so runs reproduce.
const SEED_ROTATION: f64 = 0.4;

/// Outcome of a root extraction.
#[derive(Debug, Clone)]
pub struct RootFind {
    /// All roots, multiplicity included (repeated roots appear as
    /// near-coincident values).
    pub roots: Vec<Complex64>,
    /// Normalized residual per root: `|p(r)| / (1 + |r|^deg)` on the
    /// max-coefficient-scaled polynomial.
    pub residuals: Vec<f64>,
    /// False when the sweep cap was hit before the update norms settled.
    pub converged: bool,
    pub sweeps: u32,
}

impl RootFind {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }
}

/// Residual threshold below which a root is accepted.
pub const RESIDUAL_TOL: f64 = 1e-8;

/// Finds all complex roots of `p` (degree >= 1 required) by Aberth–Ehrlich
/// iteration from a scaled initial circle, with a short Newton polish per
/// root. Exact zero roots are stripped first.
pub fn find_roots(p: &IntPoly) -> Result<RootFind, RootError> {
    let deg = match p.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(RootError::DegreeTooSmall),
    };
    // pre-scale by the largest coefficient magnitude to keep evaluations
    // inside f64 range for graphs up to a couple dozen vertices
    let raw = p.coeffs_f64();
    let scale = raw.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let mut coeffs: Vec<f64> = raw.iter().map(|c| c / scale).collect();

    let mut roots = Vec::with_capacity(deg);
    let mut zero_count = 0;
    while coeffs[0] == 0.0 && coeffs.len() > 1 {
        coeffs.remove(0);
        zero_count += 1;
        roots.push(Complex64::new(0.0, 0.0));
    }
    let d = coeffs.len() - 1;
    let mut sweeps = 0;
    let mut converged = true;
    if d >= 1 {
        let mut zs = initial_circle(&coeffs, d);
        converged = false;
        while sweeps < MAX_SWEEPS {
            sweeps += 1;
            let mut max_step = 0.0f64;
            let mut max_residual = 0.0f64;
            for j in 0..d {
                let (pv, dv) = eval_with_derivative(&coeffs, zs[j]);
                max_residual = max_residual.max(pv.norm() / (1.0 + zs[j].norm().powi(d as i32)));
                let newton = if dv.norm() > 0.0 { pv / dv } else { pv };
                let mut repulsion = Complex64::new(0.0, 0.0);
                for k in 0..d {
                    if k != j {
                        repulsion += (zs[j] - zs[k]).inv();
                    }
                }
                let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
                let step = if denom.norm() > 1e-300 { newton / denom } else { newton };
                zs[j] -= step;
                max_step = max_step.max(step.norm() / (1.0 + zs[j].norm()));
            }
            // a multiple root settles as a cluster whose members wander at
            // the pseudozero scale without the steps ever reaching the step
            // tolerance, so residual smallness is accepted as convergence
            if max_step < STEP_TOL || max_residual < 1e-12 {
                converged = true;
                break;
            }
        }
        for z in &mut zs {
            // guarded polish: only genuine point roots take machine-scale
            // Newton steps; a cluster member would drift by its cluster
            // radius and skew the joint configuration, so large steps are
            // discarded
            let mut candidate = *z;
            for _ in 0..POLISH_STEPS {
                let (pv, dv) = eval_with_derivative(&coeffs, candidate);
                if dv.norm() == 0.0 {
                    break;
                }
                let step = pv / dv;
                if !step.re.is_finite() || !step.im.is_finite() {
                    break;
                }
                candidate -= step;
            }
            let drift = (candidate - *z).norm() / (1.0 + z.norm());
            if drift < 1e-10 {
                let before = eval_with_derivative(&coeffs, *z).0.norm();
                let after = eval_with_derivative(&coeffs, candidate).0.norm();
                if after <= before {
                    *z = candidate;
                }
            }
        }
        roots.extend(zs);
    }
    // residuals against the full scaled polynomial (zero roots reinstated)
    let full: Vec<f64> = {
        let mut f = vec![0.0; zero_count];
        f.extend(coeffs.iter().copied());
        f
    };
    let residuals: Vec<f64> = roots
        .iter()
        .map(|&r| {
            let (pv, _) = eval_with_derivative(&full, r);
            pv.norm() / (1.0 + r.norm().powi(deg as i32))
        })
        .collect();
    Ok(RootFind {
        roots,
        residuals,
        converged,
        sweeps,
    })
}

fn initial_circle(coeffs: &[f64], d: usize) -> Vec<Complex64> {
    let lead = coeffs[d].abs();
    let cauchy = 1.0 + coeffs[..d].iter().fold(0.0f64, |m, c| m.max(c.abs())) / lead;
    (0..d)
        .map(|j| {
            let theta = 2.0 * std::f64::consts::PI * j as f64 / d as f64 + SEED_ROTATION;
            Complex64::from_polar(cauchy, theta)
        })
        .collect()
}

fn eval_with_derivative(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + Complex64::new(c, 0.0);
    }
    (p, dp)
}
