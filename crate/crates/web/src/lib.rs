//! Browser bindings: torus-link exploration, analysis of a pasted diagram,
//! and cascade playback. Every export returns a JSON string.

use knotrecon::braid::torus_braid;
use knotrecon::diagram::DiagramStats;
use knotrecon::invariants::{alexander_polynomial, reconnection_bounds, signature, ReconnectionBounds};
use knotrecon::reconnection::{cascade as run_cascade, CascadeTrace, Policy};
use knotrecon::seifert::{seifert_genus, seifert_matrix};
use knotrecon::{BraidWord, Error, LinkDiagram};
use serde::Serialize;
use wasm_bindgen::prelude::*;

const CASCADE_STEPS: usize = 500;

#[derive(Serialize)]
pub struct Analysis {
    pub braid: Option<String>,
    pub pd: String,
    pub stats: DiagramStats,
    pub seifert_circles: Option<usize>,
    pub genus: Option<usize>,
    pub alexander: Option<String>,
    pub signature: Option<i64>,
    pub bounds: Option<ReconnectionBounds>,
}

#[derive(Serialize)]
struct Failure<'a> {
    kind: &'a str,
    message: String,
}

fn to_js<T: Serialize>(r: Result<T, Error>) -> Result<String, JsValue> {
    match r {
        Ok(v) => Ok(serde_json::to_string(&v).expect("plain data serializes")),
        Err(e) => Err(JsValue::from_str(
            &serde_json::to_string(&Failure {
                kind: e.kind(),
                message: e.to_string(),
            })
            .expect("plain data serializes"),
        )),
    }
}

fn parse(text: &str) -> Result<(Option<BraidWord>, LinkDiagram), Error> {
    if text.contains('|') {
        let b: BraidWord = text.parse()?;
        let d = b.closure();
        Ok((Some(b), d))
    } else {
        Ok((None, knotrecon::parse_pd(text)?))
    }
}

/// Invariants and bounds of a braid word or PD code. Pieces that need a
/// connected diagram or a braid are left empty when unavailable.
pub fn analysis(text: &str) -> Result<Analysis, Error> {
    let (b, d) = parse(text)?;
    let genus = seifert_genus(&d).ok();
    let matrix = b.as_ref().and_then(|b| seifert_matrix(b).ok());
    Ok(Analysis {
        braid: b.as_ref().map(|b| b.to_string()),
        pd: d.to_pd(),
        stats: d.stats(),
        seifert_circles: genus.as_ref().map(|g| g.s),
        genus: genus.as_ref().map(|g| g.genus),
        alexander: matrix.as_ref().map(|m| alexander_polynomial(m).normalize().to_string()),
        signature: matrix.as_ref().map(signature),
        bounds: reconnection_bounds(&d, b.as_ref(), None).ok(),
    })
}

pub fn torus_analysis(p: usize, q: usize) -> Result<Analysis, Error> {
    analysis(&torus_braid(p, q)?.to_string())
}

pub fn cascade_trace(text: &str, policy: &str, seed: u64) -> Result<CascadeTrace, Error> {
    let (_, d) = parse(text)?;
    let policy = match policy {
        "random" => Policy::Random { seed },
        "greedy-split" => Policy::GreedySplit,
        _ => Policy::Planned,
    };
    run_cascade(&d, policy, CASCADE_STEPS)
}

#[wasm_bindgen]
pub fn analyze(text: &str) -> Result<String, JsValue> {
    to_js(analysis(text))
}

#[wasm_bindgen]
pub fn torus(p: usize, q: usize) -> Result<String, JsValue> {
    to_js(torus_analysis(p, q))
}

#[wasm_bindgen]
pub fn cascade(text: &str, policy: &str, seed: u64) -> Result<String, JsValue> {
    to_js(cascade_trace(text, policy, seed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_three_four() {
        let a = torus_analysis(3, 4).unwrap();
        assert_eq!(a.braid.as_deref(), Some("3 | 1 2 1 2 1 2 1 2"));
        assert_eq!(a.genus, Some(3));
        assert_eq!(a.signature, Some(-6));
        assert_eq!(a.bounds.unwrap().exact, Some(6));
    }

    #[test]
    fn pd_input_has_no_braid_data() {
        let a = analysis("[[1,6,2,5],[6,3,5,2],[7,4,8,3],[4,7,1,8]]").unwrap();
        assert_eq!(a.stats.mu, 3);
        assert!(a.alexander.is_none() && a.signature.is_none());
        assert_eq!(a.bounds.unwrap().exact, Some(2));
    }

    #[test]
    fn disconnected_input_still_reports_stats() {
        let a = analysis("3 | 1 1").unwrap();
        assert!(!a.stats.connected);
        assert!(a.genus.is_none() && a.bounds.is_none());
    }

    #[test]
    fn cascades() {
        assert_eq!(cascade_trace("2 | 1 1 1", "planned", 0).unwrap().total_reconnections, 2);
        assert_eq!(cascade_trace("2 | 1 1 1", "random", 5).unwrap().total_reconnections, 4);
        assert_eq!(cascade_trace("bad", "random", 5).unwrap_err().kind(), "MalformedCode");
    }
}
