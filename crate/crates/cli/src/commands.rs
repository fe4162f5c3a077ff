//! One method per subcommand. Artifacts go to files or stdout; diagnostics
//! and verbose logging go to stderr.

use std::fs;
use std::path::{Path, PathBuf};

use eaqcc::circuit::{
    rate_report, synthesize_decoder, synthesize_encoder, verify_decoder_report, verify_encoder_report, Circuit,
};
use eaqcc::gram_schmidt::{gram_schmidt, to_finite_weight, GsResult};
use eaqcc::pauli::binary_to_pauli;
use eaqcc::symplectic::{expand, omega_matrix};
use eaqcc::CheckMatrix;
use serde_json::{json, Value};

use crate::artifact::{self, Artifact, InputKind};
use crate::failure::{Failure, Outcome};

pub struct Context {
    pub json: bool,
    pub verbose: u8,
}

/// Verdict of one verification stage.
struct Stage {
    name: String,
    passed: bool,
    detail: String,
}

impl Stage {
    fn line(&self) -> String {
        format!(
            "{}: {}: {}",
            self.name,
            if self.passed { "PASS" } else { "FAIL" },
            self.detail
        )
    }

    fn json(&self) -> Value {
        json!({ "stage": self.name, "passed": self.passed, "detail": self.detail })
    }
}

/// Code parameters shared by both verifiers: `c` ebits, `a` ancillas and
/// `k` logical qubits beyond the `c` carried by ebits, per frame.
#[derive(Clone, Copy)]
struct Dims {
    c: usize,
    a: usize,
    k: usize,
}

fn encoder_stage(name: String, enc: &Circuit, target: &CheckMatrix, d: Dims) -> Outcome<Stage> {
    let r = verify_encoder_report(enc, target, d.c, d.a, d.k).map_err(Failure::at(name.clone()))?;
    let strict = if r.strict_equal { "holds" } else { "fails" };
    let detail = match r.first_mismatch {
        None if r.passed() => format!("sender rows span the target; receiver-augmented check {strict}"),
        None => "prepared stabilizer spans more than the target".to_string(),
        Some(row) => format!("target row {row} is not reached; receiver-augmented check {strict}"),
    };
    Ok(Stage {
        name,
        passed: r.passed(),
        detail,
    })
}

fn decoder_stage(name: String, enc: &Circuit, dec: &Circuit, d: Dims) -> Outcome<Stage> {
    let n = enc.n;
    let r = verify_decoder_report(enc, dec, d.c, d.a, d.k, n).map_err(Failure::at(name.clone()))?;
    let detail = match r.first_mismatch {
        Some(row) => format!("information row {row} is not restored"),
        None if r.infinite_depth_gates > 0 => format!("{} infinite-depth gates", r.infinite_depth_gates),
        None => format!("information qubits restored with {} finite-depth gates", dec.len()),
    };
    Ok(Stage {
        name,
        passed: r.passed(),
        detail,
    })
}

/// Everything the pipeline derives from one input file.
struct Summary {
    text: String,
    json: Value,
    passed: bool,
}

impl Context {
    fn log(&self, level: u8, msg: impl AsRef<str>) {
        if self.verbose >= level {
            eprintln!("[eaqcc] {}", msg.as_ref());
        }
    }

    fn ext(&self) -> &'static str {
        if self.json {
            "json"
        } else {
            "txt"
        }
    }

    fn emit(&self, out: Option<&Path>, body: &str) -> Outcome {
        match out {
            Some(p) => artifact::write(p, body),
            None => {
                print!("{body}");
                Ok(())
            }
        }
    }

    fn summary(&self, text: String, json: Value) -> String {
        if self.json {
            format!(
                "{}\n",
                serde_json::to_string_pretty(&json).expect("JSON values serialize")
            )
        } else {
            text
        }
    }

    pub fn import(&self, input: &Path, kind: Option<InputKind>, out: Option<&Path>) -> Outcome {
        let (h, kind) = artifact::load_code(input, kind)?;
        let stage = format!("import kind={}", kind.name());
        self.emit(out, &Artifact::Check(&h).render(&stage, self.json))
    }

    pub fn omega(&self, input: &Path, kind: Option<InputKind>, out: Option<&Path>) -> Outcome {
        let (h, _) = artifact::load_code(input, kind)?;
        self.emit(out, &Artifact::Omega(&omega_matrix(&h)).render("omega", self.json))
    }

    pub fn expand(&self, input: &Path, kind: Option<InputKind>, l: usize, out: Option<&Path>) -> Outcome {
        let (h, _) = artifact::load_code(input, kind)?;
        let e = expand(&h, l).map_err(Failure::at("expand"))?;
        self.emit(out, &Artifact::Check(&e).render(&format!("expand l={l}"), self.json))
    }

    pub fn gs(&self, input: &Path, kind: Option<InputKind>, lmax: usize, out: Option<&Path>) -> Outcome {
        let (h, _) = artifact::load_code(input, kind)?;
        let gs = gram_schmidt(&h, lmax).map_err(Failure::at("gram-schmidt"))?;
        self.emit(out, &Artifact::Gs(&gs).render(&format!("gs l_max={lmax}"), self.json))
    }

    /// Synthesizes, writes and verifies both circuits for `gs`.
    fn synthesize(&self, gs: &GsResult, out: &Path) -> Outcome<Vec<Stage>> {
        self.log(
            1,
            format!("synthesizing for c={} a={} on {} qubits", gs.c, gs.a, gs.n()),
        );
        let (enc, plan) = synthesize_encoder(gs).map_err(Failure::at("encode"))?;
        let dec = synthesize_decoder(&plan);
        self.log(2, format!("encoder {} gates, decoder {} gates", enc.len(), dec.len()));
        for (name, circ) in [("encoder", &enc), ("decoder", &dec)] {
            let path = out.join(format!("{name}.{}", self.ext()));
            artifact::write(
                &path,
                &Artifact::Circuit(circ).render(&format!("encode {name}"), self.json),
            )?;
        }
        let dims = Dims {
            c: gs.c,
            a: gs.a,
            k: gs.k(),
        };
        Ok(vec![
            encoder_stage("encoder".into(), &enc, &gs.h_std, dims)?,
            decoder_stage("decoder".into(), &enc, &dec, dims)?,
        ])
    }

    fn verdict(&self, gs: &GsResult, stages: &[Stage]) -> Summary {
        let rate = rate_report(gs);
        let passed = stages.iter().all(|s| s.passed);
        let mut text = String::new();
        for s in stages {
            text.push_str(&s.line());
            text.push('\n');
        }
        text.push_str(&format!("l={} c={} a={} n={}\n", gs.l, gs.c, gs.a, gs.n()));
        text.push_str(&format!("rate: ({}, {})\n", rate.info, rate.ebit));
        text.push_str(&format!("verdict: {}\n", if passed { "PASS" } else { "FAIL" }));
        let json = json!({
            "stages": stages.iter().map(Stage::json).collect::<Vec<_>>(),
            "l": gs.l,
            "c": gs.c,
            "a": gs.a,
            "n": gs.n(),
            "rate": artifact::rate_json(&rate),
            "verdict": if passed { "PASS" } else { "FAIL" },
        });
        Summary { text, json, passed }
    }

    fn finish(&self, summary: Summary, stages: &[Stage]) -> Outcome {
        print!("{}", self.summary(summary.text, summary.json));
        match stages.iter().find(|s| !s.passed) {
            Some(s) => Err(Failure::verification(s.name.clone(), s.detail.clone())),
            None => Ok(()),
        }
    }

    pub fn encode(&self, gs_path: &Path, out: &Path) -> Outcome {
        let gs = artifact::load_gs(gs_path)?;
        create_dir(out)?;
        let stages = self.synthesize(&gs, out)?;
        let summary = self.verdict(&gs, &stages);
        self.finish(summary, &stages)
    }

    pub fn verify(&self, encoder: &Path, target: &Path, decoder: Option<&Path>, reading: Option<&str>) -> Outcome {
        let target_src = artifact::read(target)?;
        let gs = target_src
            .lines()
            .any(|l| l.trim_start().starts_with("l="))
            .then(|| GsResult::from_text(&target_src))
            .transpose()
            .map_err(Failure::in_file(target))?;
        let target_h = match &gs {
            Some(g) => g.h_std.clone(),
            None => CheckMatrix::from_text(&target_src).map_err(Failure::in_file(target))?,
        };

        let readings: Vec<Option<&str>> = match reading {
            Some(r) => vec![Some(r)],
            None => {
                let mut s = artifact::has_s_gate(&artifact::read(encoder)?);
                if let Some(d) = decoder {
                    s |= artifact::has_s_gate(&artifact::read(d)?);
                }
                if s {
                    vec![Some("CZ"), Some("SWAP")]
                } else {
                    vec![None]
                }
            }
        };

        let mut all = Vec::new();
        let mut any_passed = false;
        for r in &readings {
            let label = |stage: &str| match r {
                Some(g) => format!("{stage} [S={g}]"),
                None => stage.to_string(),
            };
            let enc = artifact::load_circuit(encoder, *r)?;
            let c = enc.c;
            let a = match &gs {
                Some(g) => g.a,
                None => target_h.r().checked_sub(2 * c).ok_or_else(|| {
                    Failure::input(
                        "verify",
                        format!(
                            "target has {} rows, fewer than the circuit's {c} ebit pairs",
                            target_h.r()
                        ),
                    )
                })?,
            };
            let k = target_h.n().checked_sub(2 * c + a).ok_or_else(|| {
                Failure::input(
                    "verify",
                    format!("target on {} qubits cannot hold {c} pairs", target_h.n()),
                )
            })?;
            let dims = Dims { c, a, k };
            let mut stages = vec![encoder_stage(label("encoder"), &enc, &target_h, dims)?];
            if let Some(d) = decoder {
                let dec = artifact::load_circuit(d, *r)?;
                stages.push(decoder_stage(label("decoder"), &enc, &dec, dims)?);
            }
            any_passed |= stages.iter().all(|s| s.passed);
            all.extend(stages);
        }

        let mut text: String = all.iter().map(|s| s.line() + "\n").collect();
        text.push_str(&format!("verdict: {}\n", if any_passed { "PASS" } else { "FAIL" }));
        let json = json!({
            "stages": all.iter().map(Stage::json).collect::<Vec<_>>(),
            "verdict": if any_passed { "PASS" } else { "FAIL" },
        });
        print!("{}", self.summary(text, json));
        match all.iter().find(|s| !s.passed) {
            Some(s) if !any_passed => Err(Failure::verification(s.name.clone(), s.detail.clone())),
            _ => Ok(()),
        }
    }

    fn run_pipeline(
        &self,
        input: &Path,
        kind: Option<InputKind>,
        lmax: usize,
        out: &Path,
    ) -> Outcome<(Summary, Vec<Stage>)> {
        create_dir(out)?;
        let ext = self.ext();
        let put = |name: &str, a: Artifact<'_>, stage: &str| -> Outcome {
            self.log(2, format!("writing {name}.{ext}"));
            artifact::write(&out.join(format!("{name}.{ext}")), &a.render(stage, self.json))
        };

        self.log(1, format!("importing {}", input.display()));
        let (h, kind) = artifact::load_code(input, kind)?;
        put("check", Artifact::Check(&h), &format!("import kind={}", kind.name()))?;
        put("omega", Artifact::Omega(&omega_matrix(&h)), "omega")?;

        self.log(1, format!("reducing to standard form, l_max={lmax}"));
        let gs = gram_schmidt(&h, lmax).map_err(Failure::at("gram-schmidt"))?;
        let expanded = expand(&h, gs.l).map_err(Failure::at("expand"))?;
        put("expanded", Artifact::Check(&expanded), &format!("expand l={}", gs.l))?;
        put(
            "omega-expanded",
            Artifact::Omega(&omega_matrix(&expanded)),
            &format!("omega l={}", gs.l),
        )?;
        put("gs", Artifact::Gs(&gs), &format!("gs l_max={lmax}"))?;

        let stages = self.synthesize(&gs, out)?;
        let summary = self.verdict(&gs, &stages);
        let body = self.summary(summary.text.clone(), summary.json.clone());
        artifact::write(&out.join(format!("report.{ext}")), &body)?;
        Ok((summary, stages))
    }

    pub fn pipeline(&self, input: &Path, kind: Option<InputKind>, lmax: usize, out: &Path) -> Outcome {
        let (summary, stages) = self.run_pipeline(input, kind, lmax, out)?;
        self.finish(summary, &stages)
    }

    /// Runs the pipeline on every file in `dir` concurrently, each into its
    /// own subdirectory of `out`. A failing file does not stop the others;
    /// the exit code is that of the first failing file in name order.
    pub fn batch(&self, dir: &Path, kind: Option<InputKind>, lmax: usize, out: &Path) -> Outcome {
        let mut files: Vec<PathBuf> = fs::read_dir(dir)
            .map_err(|e| Failure::input("io", format!("cannot read directory {}: {e}", dir.display())))?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.is_file())
            .collect();
        files.sort();
        if files.is_empty() {
            return Err(Failure::input("batch", format!("{} contains no files", dir.display())));
        }
        let results: Vec<Outcome<Summary>> = std::thread::scope(|scope| {
            let handles: Vec<_> = files
                .iter()
                .map(|f| {
                    let sub = out.join(f.file_stem().unwrap_or(f.as_os_str()));
                    scope.spawn(move || {
                        let (summary, _) = self.run_pipeline(f, kind, lmax, &sub)?;
                        Ok(summary)
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| {
                    h.join()
                        .unwrap_or_else(|_| Err(Failure::verification("batch", "internal error while processing file")))
                })
                .collect()
        });

        let mut first_failure: Option<Failure> = None;
        let mut text = String::new();
        let mut entries = Vec::new();
        for (file, result) in files.iter().zip(results) {
            let name = file
                .file_name()
                .map(|n| n.to_string_lossy().into_owned())
                .unwrap_or_default();
            let (line, value, failure) = match result {
                Ok(s) => {
                    let verdict = if s.passed { "PASS" } else { "FAIL" };
                    let rate = &s.json["rate"];
                    let line = format!(
                        "{name}: {verdict} rate ({}, {})",
                        rate["info"].as_str().unwrap_or("?"),
                        rate["ebit"].as_str().unwrap_or("?")
                    );
                    let failure = (!s.passed).then(|| Failure::verification(name.clone(), "verification failed"));
                    let value = json!({ "file": name, "exit": if s.passed { 0 } else { 1 }, "summary": s.json });
                    (line, value, failure)
                }
                Err(f) => {
                    let line = format!("{name}: exit {}: {f}", f.code());
                    let value = json!({ "file": name, "exit": f.code(), "error": f.to_string() });
                    (line, value, Some(f))
                }
            };
            if first_failure.is_none() {
                first_failure = failure;
            }
            text.push_str(&line);
            text.push('\n');
            entries.push(value);
        }
        print!("{}", self.summary(text, json!({ "files": entries })));
        first_failure.map_or(Ok(()), Err)
    }

    pub fn report(&self, gs_path: &Path) -> Outcome {
        let gs = artifact::load_gs(gs_path)?;
        let rate = rate_report(&gs);
        let (finite, _) = to_finite_weight(&gs.h_std);
        let rows: Vec<String> = binary_to_pauli(&finite)
            .map_err(Failure::at("report"))?
            .iter()
            .map(ToString::to_string)
            .collect();
        let mut text = format!(
            "n={} k={} c={} a={} l={}\nrate: ({}, {})\nrow operations: {}\ngenerators (finite weight):\n",
            gs.n(),
            gs.k(),
            gs.c,
            gs.a,
            gs.l,
            rate.info,
            rate.ebit,
            gs.ops.len()
        );
        for r in &rows {
            text.push_str(&format!("  {r}\n"));
        }
        let json = json!({
            "n": gs.n(),
            "k": gs.k(),
            "c": gs.c,
            "a": gs.a,
            "l": gs.l,
            "rate": artifact::rate_json(&rate),
            "row_operations": gs.ops.len(),
            "generators": rows,
        });
        print!("{}", self.summary(text, json));
        Ok(())
    }
}

fn create_dir(dir: &Path) -> Outcome {
    fs::create_dir_all(dir).map_err(|e| Failure::input("io", format!("cannot create {}: {e}", dir.display())))
}
