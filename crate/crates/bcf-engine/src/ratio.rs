//! The vertex-removal ratio `R^u(z) = F_V(z) / F_(V-u)(z) - 1`.

use graph_core::Graph;
use num_complex::Complex64;

use crate::caps::{BcfError, EnumCaps};
use crate::forests::forest_gf;

/// Evaluates `R^u(z)` with exact integer numerator/denominator polynomials
/// and one floating-point division at the end. A single-vertex graph gives 0.
///
/// Errors with `SingularRatio` when `|F_(V-u)(z)| < 1e-12 (1 + |F_V(z)|)`;
/// inside the certified disk the denominator provably stays away from zero,
/// outside it the conditioning is the caller's problem.
pub fn ratio_r_u(g: &Graph, u: usize, z: Complex64, caps: &EnumCaps) -> Result<Complex64, BcfError> {
    if u >= g.vertex_count() {
        return Err(BcfError::Graph(graph_core::GraphError::UnknownVertex { v: u }));
    }
    if g.vertex_count() == 1 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let numerator = forest_gf(g, caps)?.eval_complex(z);
    let denominator = forest_gf(&g.remove_vertex(u)?, caps)?.eval_complex(z);
    let scale = 1e-12 * (1.0 + numerator.norm());
    if denominator.norm() < scale {
        return Err(BcfError::SingularRatio {
            denominator: denominator.norm(),
            scale,
        });
    }
    Ok(numerator / denominator - Complex64::new(1.0, 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_core::corpus;

    const CAPS: &EnumCaps = &EnumCaps::DEFAULT;

    #[test]
    fn single_vertex_is_zero() {
        let g = Graph::new(1, &[]).unwrap();
        let z = Complex64::new(0.3, -0.8);
        assert_eq!(ratio_r_u(&g, 0, z, CAPS).unwrap(), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn k2_ratio_is_z() {
        let k2 = corpus::complete(2);
        for z in [Complex64::new(0.2, 0.1), Complex64::new(-0.5, 0.4)] {
            for u in 0..2 {
                assert!((ratio_r_u(&k2, u, z, CAPS).unwrap() - z).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn k3_at_zero_is_zero() {
        let k3 = corpus::complete(3);
        let r = ratio_r_u(&k3, 0, Complex64::new(0.0, 0.0), CAPS).unwrap();
        assert_eq!(r, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn singular_denominator_reported() {
        // F of a single edge is 1 + z, which vanishes at z = -1; removing
        // one endpoint of P3's first edge leaves exactly one edge
        let p3 = corpus::path(3);
        let err = ratio_r_u(&p3, 0, Complex64::new(-1.0, 0.0), CAPS).unwrap_err();
        assert!(matches!(err, BcfError::SingularRatio { .. }));
    }

    #[test]
    fn unknown_vertex_rejected() {
        let k2 = corpus::complete(2);
        assert!(matches!(
            ratio_r_u(&k2, 7, Complex64::new(0.0, 0.0), CAPS),
            Err(BcfError::Graph(_))
        ));
    }
}
