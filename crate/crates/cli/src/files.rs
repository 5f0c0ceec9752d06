//! Reading inputs and writing outputs; every failure here exits with 3.

use std::path::Path;

use flownet::WeightedGraph;

use crate::error::{CliError, CliResult};

/// Any defect in the file, including invalid links, counts as an I/O error.
pub fn read_graph(path: &Path) -> CliResult<WeightedGraph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    flownet::io::parse_edge_list(&text)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

/// Writes to `path`, or to stdout without one.
pub fn emit(path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => {
            use std::io::Write;
            std::io::stdout()
                .write_all(text.as_bytes())
                .map_err(|e| CliError::Io(format!("stdout: {e}")))
        }
    }
}
