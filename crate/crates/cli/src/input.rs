//! Graph sources on the command line: a file (edge-list JSON or graph6), a
//! family spec, or a bare graph6 string.

use std::path::Path;

use anyhow::{Context, Result};
use distspec::format::from_edge_list_json;
use distspec::{from_graph6, FamilySpec, Graph};

/// Resolves `source` to a graph plus a label describing where it came from.
pub fn read_graph(source: &str) -> Result<(Graph, String)> {
    let path = Path::new(source);
    if path.is_file() {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let trimmed = text.trim_start();
        let g = if trimmed.starts_with('{') {
            from_edge_list_json(trimmed).with_context(|| format!("{}: edge-list JSON", path.display()))?
        } else {
            let line = trimmed.lines().next().unwrap_or("").trim();
            from_graph6(line).with_context(|| format!("{}: graph6", path.display()))?
        };
        return Ok((g, path.display().to_string()));
    }
    // graph6 never uses these characters; family specs always do.
    if source.contains([':', '(']) {
        let spec: FamilySpec = source
            .parse()
            .with_context(|| format!("parsing family spec {source:?}"))?;
        let g = spec.construct().with_context(|| format!("constructing {spec}"))?;
        return Ok((g, spec.to_string()));
    }
    let g = from_graph6(source.trim())
        .with_context(|| format!("{source:?} is not a file, a family spec (e.g. pnc:9,2) or a graph6 string"))?;
    Ok((g, source.trim().to_string()))
}
