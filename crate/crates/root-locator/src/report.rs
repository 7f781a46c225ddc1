//! End-to-end zero-free verification: graph parameters -> certified radius
//! -> chromatic roots -> margin report.

use bcf_engine::{chromatic_dc, EnumCaps};
use bound_engine::c_delta_g;
use graph_core::{Girth, Graph};
use serde::{Serialize, Serializer};

use crate::roots::{find_roots, RootFind, RESIDUAL_TOL};
use crate::RootError;

/// One root with its normalized residual; serializes as
/// `{"value": [re, im], "residual": r}`.
#[derive(Debug, Clone, Serialize)]
pub struct RootEntry {
    pub value: [f64; 2],
    pub residual: f64,
}

/// Verification record for one graph: every chromatic root must lie strictly
/// inside the certified disk `|q| < C`.
#[derive(Debug, Clone, Serialize)]
pub struct ZeroFreeReport {
    pub graph_id: String,
    pub delta: u32,
    #[serde(serialize_with = "serialize_girth")]
    pub girth: Girth,
    pub c: f64,
    pub roots: Vec<RootEntry>,
    pub max_abs_root: f64,
    pub margin: f64,
    pub pass: bool,
}

fn serialize_girth<S: Serializer>(g: &Girth, s: S) -> Result<S::Ok, S::Error> {
    match g {
        Girth::Finite(v) => s.serialize_u64(*v as u64),
        Girth::Infinite => s.serialize_str("inf"),
    }
}

impl ZeroFreeReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

/// Computes Δ, girth, the certified radius `C(Δ, g)` (through the `g = ∞`
/// extension for forests), the exact chromatic polynomial, and its roots.
/// Passes iff every root lies strictly inside `|q| < C` and all residuals
/// clear the acceptance threshold.
pub fn verify_zero_free(g: &Graph, graph_id: &str, caps: &EnumCaps) -> Result<ZeroFreeReport, RootError> {
    verify_zero_free_with_tolerance(g, graph_id, caps, RESIDUAL_TOL)
}

/// Same as [`verify_zero_free`] with a caller-chosen residual tolerance.
pub fn verify_zero_free_with_tolerance(
    g: &Graph,
    graph_id: &str,
    caps: &EnumCaps,
    residual_tol: f64,
) -> Result<ZeroFreeReport, RootError> {
    if g.edge_count() == 0 {
        return Err(RootError::NoEdges);
    }
    let delta = g.max_degree() as u32;
    let girth = g.girth();
    let bound = c_delta_g(delta, girth).map_err(RootError::Bound)?;
    let p = chromatic_dc(g, caps).map_err(RootError::Bcf)?;
    let rf: RootFind = find_roots(&p)?;
    let max_abs_root = rf.roots.iter().map(|r| r.norm()).fold(0.0, f64::max);
    let margin = bound.c - max_abs_root;
    let pass = margin > 0.0 && rf.converged && rf.max_residual() < residual_tol;
    Ok(ZeroFreeReport {
        graph_id: graph_id.to_string(),
        delta,
        girth,
        c: bound.c,
        roots: rf
            .roots
            .iter()
            .zip(&rf.residuals)
            .map(|(r, &residual)| RootEntry {
                value: [r.re, r.im],
                residual,
            })
            .collect(),
        max_abs_root,
        margin,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_core::corpus;

    const CAPS: &EnumCaps = &EnumCaps::DEFAULT;

    #[test]
    fn triangle_report() {
        let report = verify_zero_free(&corpus::complete(3), "K3", CAPS).unwrap();
        assert_eq!(report.delta, 2);
        assert_eq!(report.girth, Girth::Finite(3));
        assert!(report.pass);
        assert!((report.max_abs_root - 2.0).abs() < 1e-9);
        assert!(report.margin > 0.0);
        assert!((report.c - report.margin - 2.0).abs() < 1e-9);
        assert_eq!(report.roots.len(), 3);
    }

    #[test]
    fn c4_closed_form_roots() {
        // (q-1)^4 + (q-1) factors with roots {0, 1, 3/2 ± i sqrt(3)/2}
        let report = verify_zero_free(&corpus::cycle(4), "C4", CAPS).unwrap();
        assert!(report.pass);
        let mut found_complex = 0;
        for e in &report.roots {
            let z = num_complex::Complex64::new(e.value[0], e.value[1]);
            let candidates = [
                num_complex::Complex64::new(0.0, 0.0),
                num_complex::Complex64::new(1.0, 0.0),
                num_complex::Complex64::new(1.5, 3f64.sqrt() / 2.0),
                num_complex::Complex64::new(1.5, -(3f64.sqrt()) / 2.0),
            ];
            assert!(candidates.iter().any(|c| (z - c).norm() < 1e-8));
            if e.value[1].abs() > 1e-8 {
                found_complex += 1;
            }
        }
        assert_eq!(found_complex, 2);
    }

    #[test]
    fn edgeless_rejected() {
        let g = Graph::new(3, &[]).unwrap();
        assert!(matches!(
            verify_zero_free(&g, "edgeless", CAPS),
            Err(RootError::NoEdges)
        ));
    }

    #[test]
    fn forest_uses_infinite_girth_extension() {
        let report = verify_zero_free(&corpus::path(4), "P4", CAPS).unwrap();
        assert_eq!(report.girth, Girth::Infinite);
        assert!(report.pass);
        // q = 1 is a triple root here; the solver reports it as a cluster
        assert!((report.max_abs_root - 1.0).abs() < 1e-4);
    }

    #[test]
    fn json_shape() {
        let report = verify_zero_free(&corpus::complete(3), "K3", CAPS).unwrap();
        let v: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(v["graph_id"], "K3");
        assert_eq!(v["girth"], 3);
        assert!(v["roots"][0]["value"].as_array().unwrap().len() == 2);
        let forest = verify_zero_free(&corpus::path(3), "P3", CAPS).unwrap();
        let v: serde_json::Value = serde_json::from_str(&forest.to_json()).unwrap();
        assert_eq!(v["girth"], "inf");
    }
}
