//! Text format for generator sets.
//!
//! ```text
//! # any comment
//! degree 102
//! (1,6)(2,5)   # g1 = v(1,T) u(1) h(1,1,T)
//! (25,30)(26,29)
//! ```
//!
//! The first significant line declares the degree; every following line is
//! one generator in cycle notation. `#` starts a comment anywhere on a
//! line; blank lines are skipped. The writer records each generator's label
//! and gadget factors as trailing comments, which the parser ignores.

use chebcode_core::group::{GeneratorSet, GroupError};
use chebcode_core::perm::ParseError;
use chebcode_core::reduction::ReductionOutput;
use chebcode_core::Permutation;
use std::fmt::Write as _;

#[derive(Debug, thiserror::Error)]
pub enum GenFileError {
    #[error("no `degree N` line before the first generator")]
    MissingDegree,
    #[error("line {line}: cannot parse degree")]
    BadDegree { line: usize },
    #[error("line {line}: {source}")]
    BadGenerator { line: usize, source: ParseError },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Parses the generator-set format. Identity generators are legal in the
/// file; the returned set drops them and counts the drops.
pub fn parse(text: &str) -> Result<GeneratorSet, GenFileError> {
    let mut degree: Option<u32> = None;
    let mut gens: Vec<Permutation> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if degree.is_none() {
            let mut parts = content.split_whitespace();
            match (parts.next(), parts.next(), parts.next()) {
                (Some("degree"), Some(n), None) => {
                    degree = Some(n.parse().map_err(|_| GenFileError::BadDegree { line })?);
                    continue;
                }
                _ => return Err(GenFileError::MissingDegree),
            }
        }
        let perm: Permutation = content
            .parse()
            .map_err(|source| GenFileError::BadGenerator { line, source })?;
        gens.push(perm);
    }
    let degree = degree.ok_or(GenFileError::MissingDegree)?;
    Ok(GeneratorSet::new(degree, gens)?)
}

/// Renders a bare generator set, one generator per line.
pub fn render(gs: &GeneratorSet) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "degree {}", gs.degree());
    for g in gs.gens() {
        let _ = writeln!(out, "{g}");
    }
    out
}

/// Renders a reduction's generators with label and gadget provenance
/// comments.
pub fn render_reduction(r: &ReductionOutput) -> String {
    let params = r.params();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# subgroup generators reduced from a formula with {} variables and {} clauses",
        params.num_vars(),
        params.num_clauses()
    );
    let _ = writeln!(out, "degree {}", r.degree());
    for g in r.generators() {
        let factors: Vec<String> = g.provenance.iter().map(|id| id.to_string()).collect();
        let _ = writeln!(out, "{}   # {} = {}", g.perm, g.label, factors.join(" "));
    }
    out
}
