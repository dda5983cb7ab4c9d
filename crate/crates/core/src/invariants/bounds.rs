use serde::{Deserialize, Serialize};

use super::signature;
use crate::braid::BraidWord;
use crate::diagram::{LinkDiagram, Sign};
use crate::error::{Error, Result};
use crate::seifert::{seifert_circles, seifert_matrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundSource {
    /// `|σ| ≤ R`
    Signature,
    /// `μ - 1 ≤ R`: every component must be joined to the rest.
    Components,
    /// `R ≤ c - s + 1`, realized by smoothing all crossings off a spanning
    /// tree of the Seifert graph.
    SeifertCircles,
    /// `R ≤ 2u`: each crossing change costs two reconnections.
    Unknotting,
    /// Positive connected diagrams: the four-ball genus equals the Seifert
    /// genus, so `c - s + 1` is also a lower bound.
    Positivity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundSide {
    Lower,
    Upper,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub source: BoundSource,
    pub side: BoundSide,
    pub value: usize,
    /// Whether this contribution attains the reported endpoint.
    pub decisive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReconnectionBounds {
    pub lower: usize,
    pub upper: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<usize>,
    pub certificates: Vec<Certificate>,
}

/// Interval for the reconnection number of a connected diagram.
///
/// `braid`, when given, must close to `d` (same crossings after canonical
/// renumbering) and contributes the signature bound. `unknotting` is a
/// caller-asserted unknotting number.
pub fn reconnection_bounds(
    d: &LinkDiagram,
    braid: Option<&BraidWord>,
    unknotting: Option<usize>,
) -> Result<ReconnectionBounds> {
    if !d.is_connected() {
        return Err(Error::DisconnectedDiagram);
    }
    let c = d.crossing_count();
    let s = seifert_circles(d).count;
    let mu = d.component_count();
    let seifert_upper = c + 1 - s;

    let mut certs = Vec::new();
    let mut cert = |source, side, value| {
        certs.push(Certificate {
            source,
            side,
            value,
            decisive: false,
        })
    };

    if let Some(b) = braid {
        if b.closure().canonical() != d.canonical() {
            return Err(Error::MismatchedBraid);
        }
        let sigma = signature(&seifert_matrix(b)?).unsigned_abs() as usize;
        cert(BoundSource::Signature, BoundSide::Lower, sigma);
    }
    cert(BoundSource::Components, BoundSide::Lower, mu - 1);
    cert(BoundSource::SeifertCircles, BoundSide::Upper, seifert_upper);
    if let Some(u) = unknotting {
        cert(BoundSource::Unknotting, BoundSide::Upper, 2 * u);
    }
    if d.is_positive() {
        cert(BoundSource::Positivity, BoundSide::Lower, seifert_upper);
    }

    let side_values = |side| certs.iter().filter(move |x: &&Certificate| x.side == side).map(|x| x.value);
    let lower = side_values(BoundSide::Lower).max().unwrap_or(0);
    let upper = side_values(BoundSide::Upper).min().expect("c - s + 1 is always present");
    if lower > upper {
        return Err(Error::InconsistentBounds { lower, upper });
    }
    for x in &mut certs {
        x.decisive = match x.side {
            BoundSide::Lower => x.value == lower,
            BoundSide::Upper => x.value == upper,
        };
    }
    Ok(ReconnectionBounds {
        lower,
        upper,
        exact: (lower == upper).then_some(lower),
        certificates: certs,
    })
}

/// `R = c - s + 1` for a positive connected diagram.
pub fn reconnection_number_positive(d: &LinkDiagram) -> Result<usize> {
    if !d.is_connected() {
        return Err(Error::DisconnectedDiagram);
    }
    if let Some(index) = d.crossings().iter().position(|x| x.sign() == Sign::Negative) {
        return Err(Error::NotPositive { index });
    }
    Ok(d.crossing_count() + 1 - seifert_circles(d).count)
}
