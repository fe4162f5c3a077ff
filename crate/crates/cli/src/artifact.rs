//! Reading inputs and rendering stage artifacts as text or JSON.

use std::fs;
use std::path::Path;

use clap::ValueEnum;
use eaqcc::circuit::{Circuit, RateReport};
use eaqcc::gram_schmidt::GsResult;
use eaqcc::pauli::{gf4_import, parse_pauli_file, pauli_to_binary, Gf4Matrix};
use eaqcc::symplectic::OmegaMatrix;
use eaqcc::{CheckMatrix, PolyMatrix};
use serde_json::{json, Value};

use crate::failure::{Failure, Outcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputKind {
    /// Bar-delimited Pauli sequences, one generator per line.
    Pauli,
    /// `frames=<n> generators=<r>` followed by `z: ... | x: ...` rows.
    Checkmatrix,
    /// `gf4 cols=<n> rows=<r>` followed by rows of GF(4) polynomials.
    Gf4,
}

impl InputKind {
    pub fn name(self) -> &'static str {
        match self {
            InputKind::Pauli => "pauli",
            InputKind::Checkmatrix => "checkmatrix",
            InputKind::Gf4 => "gf4",
        }
    }

    /// Kind implied by the first content line, if any.
    fn sniff(src: &str) -> Option<Self> {
        let line = src
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'))?;
        if line.starts_with("gf4") {
            Some(InputKind::Gf4)
        } else if line.starts_with("frames=") {
            Some(InputKind::Checkmatrix)
        } else if line.contains('|') {
            Some(InputKind::Pauli)
        } else {
            None
        }
    }
}

pub fn read(path: &Path) -> Outcome<String> {
    fs::read_to_string(path).map_err(|e| Failure::input("io", format!("cannot read {}: {e}", path.display())))
}

pub fn write(path: &Path, body: &str) -> Outcome {
    fs::write(path, body).map_err(|e| Failure::input("io", format!("cannot write {}: {e}", path.display())))
}

/// Reads a code in any input format and returns its check matrix.
pub fn load_code(path: &Path, kind: Option<InputKind>) -> Outcome<(CheckMatrix, InputKind)> {
    let src = read(path)?;
    let at = Failure::in_file(path);
    let sniffed = InputKind::sniff(&src);
    let kind = match (kind, sniffed) {
        (Some(k), Some(s)) if k != s => {
            return Err(Failure::input(
                path.display().to_string(),
                format!(
                    "--kind {} does not match the file header, which reads as {}",
                    k.name(),
                    s.name()
                ),
            ))
        }
        (Some(k), _) | (None, Some(k)) => k,
        (None, None) => return Err(at(eaqcc::Error::EmptyInput)),
    };
    let h = match kind {
        InputKind::Checkmatrix => CheckMatrix::from_text(&src),
        InputKind::Pauli => parse_pauli_file(&src).and_then(|s| pauli_to_binary(&s)),
        InputKind::Gf4 => Gf4Matrix::from_text(&src).and_then(|m| gf4_import(&m)),
    }
    .map_err(at)?;
    Ok((h, kind))
}

pub fn load_gs(path: &Path) -> Outcome<GsResult> {
    GsResult::from_text(&read(path)?).map_err(Failure::in_file(path))
}

/// An S gate is printed without a definition; `reading` picks its meaning.
pub fn load_circuit(path: &Path, reading: Option<&str>) -> Outcome<Circuit> {
    let src = read(path)?;
    let src = match reading {
        Some(r) => substitute_s(&src, r),
        None => src,
    };
    Circuit::from_text(&src).map_err(Failure::in_file(path))
}

pub fn has_s_gate(src: &str) -> bool {
    src.lines().any(|l| l.split_whitespace().next() == Some("S"))
}

fn substitute_s(src: &str, reading: &str) -> String {
    src.lines()
        .map(|l| match l.trim_start().strip_prefix("S ") {
            Some(args) => format!("{reading} {args}\n"),
            None => format!("{l}\n"),
        })
        .collect()
}

/// Artifact header: the tool version, then the stage that produced it.
pub fn header(stage: &str) -> Vec<String> {
    vec![
        format!("eaqcc {}", env!("CARGO_PKG_VERSION")),
        format!("stage: {stage}"),
    ]
}

pub enum Artifact<'a> {
    Check(&'a CheckMatrix),
    Omega(&'a OmegaMatrix),
    Gs(&'a GsResult),
    Circuit(&'a Circuit),
}

impl Artifact<'_> {
    pub fn render(&self, stage: &str, json: bool) -> String {
        let head = header(stage);
        if json {
            let mut v = self.json();
            v["stage"] = json!(stage);
            v["version"] = json!(env!("CARGO_PKG_VERSION"));
            return format!("{}\n", serde_json::to_string_pretty(&v).expect("JSON values serialize"));
        }
        match self {
            Artifact::Check(h) => h.to_text(&head),
            Artifact::Omega(o) => o.to_text(&head),
            Artifact::Gs(g) => g.to_text(&head),
            Artifact::Circuit(c) => c.to_text(&head),
        }
    }

    fn json(&self) -> Value {
        match self {
            Artifact::Check(h) => check_json(h),
            Artifact::Omega(o) => json!({ "size": o.size(), "entries": matrix_json(o.matrix()) }),
            Artifact::Gs(g) => json!({
                "l": g.l,
                "c": g.c,
                "a": g.a,
                "matrix": check_json(&g.h_std),
                "ops": g.ops.ops().iter().map(ToString::to_string).collect::<Vec<_>>(),
            }),
            Artifact::Circuit(c) => json!({
                "frames": c.n,
                "receivers": c.c,
                "gates": c.gates.iter().map(ToString::to_string).collect::<Vec<_>>(),
            }),
        }
    }
}

fn matrix_json(m: &PolyMatrix) -> Value {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(ToString::to_string).collect::<Vec<_>>())
        .collect()
}

fn check_json(h: &CheckMatrix) -> Value {
    json!({
        "frames": h.n(),
        "generators": h.r(),
        "z": matrix_json(h.z()),
        "x": matrix_json(h.x()),
    })
}

pub fn rate_json(r: &RateReport) -> Value {
    json!({ "info": r.info.to_string(), "ebit": r.ebit.to_string() })
}
