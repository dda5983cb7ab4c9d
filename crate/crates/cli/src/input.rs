use knotrecon::{BraidWord, Error, LinkDiagram};

/// A diagram, remembering the braid it came from when there was one.
pub enum Input {
    Braid(BraidWord),
    Diagram(LinkDiagram),
}

impl Input {
    /// Braid text contains `|`, PD text starts with `[`, and JSON records
    /// written by `--format json` are accepted as well.
    pub fn parse(text: &str) -> Result<Input, Error> {
        let text = text.trim();
        if text.starts_with('{') {
            let value: serde_json::Value =
                serde_json::from_str(text).map_err(|e| Error::MalformedCode(e.to_string()))?;
            return if value.get("letters").is_some() {
                serde_json::from_value(value)
                    .map(Input::Braid)
                    .map_err(|e| Error::MalformedWord(e.to_string()))
            } else {
                serde_json::from_value(value)
                    .map(Input::Diagram)
                    .map_err(|e| Error::MalformedCode(e.to_string()))
            };
        }
        if text.contains('|') {
            text.parse().map(Input::Braid)
        } else {
            knotrecon::parse_pd(text).map(Input::Diagram)
        }
    }

    pub fn diagram(&self) -> LinkDiagram {
        match self {
            Input::Braid(b) => b.closure(),
            Input::Diagram(d) => d.clone(),
        }
    }

    pub fn braid(&self) -> Option<&BraidWord> {
        match self {
            Input::Braid(b) => Some(b),
            Input::Diagram(_) => None,
        }
    }
}
