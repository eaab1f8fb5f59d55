//! Browser bindings. Each export wraps a plain function of the same name in
//! [`plain`] so the logic can be tested natively.

use wasm_bindgen::prelude::*;

pub mod plain {
    use surfalt_core::{
        analyze, from_virtual_gauss_code, parse_sld, random_diagrams, to_sld, RandomDiagramSpec, SymmetricForm,
    };

    /// Report JSON for `.sld` text, or for a Gauss code when the input has
    /// no `crossings` header.
    pub fn analyze_source(source: &str) -> Result<String, String> {
        let is_sld = source.lines().any(|l| l.trim_start().starts_with("crossings"));
        let (diagram, orientation) = if is_sld {
            let src = parse_sld(source).map_err(|e| e.to_string())?;
            let o = src.orientation();
            (src.diagram, o)
        } else {
            let g = from_virtual_gauss_code(source.trim()).map_err(|e| e.to_string())?;
            (g.diagram, g.orientation)
        };
        Ok(analyze(&diagram, Some(&orientation)).to_json())
    }

    pub fn random_diagram(crossings: usize, seed: u64, alternating: bool) -> Result<String, String> {
        let mut spec = RandomDiagramSpec::new(crossings, seed, 1).connected().colorable();
        spec.alternating = alternating;
        let d = random_diagrams(spec).next().expect("count is one").map_err(|e| e.to_string())?;
        Ok(to_sld(&d, None))
    }

    /// Rows on separate lines, separated by `;`, or bracketed as in
    /// `[[1, 0], [0, 1]]`; entries separated by spaces or commas.
    pub fn parse_matrix(text: &str) -> Result<SymmetricForm, String> {
        let cleaned: String = text
            .chars()
            .map(|c| match c {
                '[' => ' ',
                ']' => ';',
                c => c,
            })
            .collect();
        let rows = cleaned
            .split(['\n', ';'])
            .map(|row| {
                row.split([' ', ',', '\t'])
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse::<i64>().map_err(|_| format!("not an integer: `{t}`")))
                    .collect::<Result<Vec<_>, _>>()
            })
            .filter(|r| !matches!(r, Ok(v) if v.is_empty()))
            .collect::<Result<Vec<_>, _>>()?;
        if rows.iter().any(|r| r.len() != rows.len()) {
            return Err(format!("expected a square matrix, found {} rows", rows.len()));
        }
        SymmetricForm::from_rows(&rows).map_err(|e| e.to_string())
    }

    pub fn form_signature(text: &str) -> Result<String, String> {
        let form = parse_matrix(text)?;
        Ok(serde_json::to_string_pretty(&form.signature()).expect("json"))
    }
}

#[wasm_bindgen]
pub fn analyze_source(source: &str) -> Result<String, JsError> {
    plain::analyze_source(source).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn random_diagram(crossings: usize, seed: u64, alternating: bool) -> Result<String, JsError> {
    plain::random_diagram(crossings, seed, alternating).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn form_signature(matrix: &str) -> Result<String, JsError> {
    plain::form_signature(matrix).map_err(|e| JsError::new(&e))
}
