//! Command-line interface.
//!
//! Every subcommand reads JSON documents, writes one document (or text
//! rendering) to stdout, and reserves stderr for diagnostics. Exit code 0
//! means success and, for checking subcommands, that the check passed; 1
//! means a check ran to completion and failed; 2 means the input could not
//! be processed at all.

use crate::constructions;
use crate::error::{Error, Result};
use crate::hopf::antipode::{recursive_antipode, takeuchi_antipode};
use crate::hopf::verify::verify_bialgebra;
use crate::hopf::{AlgebraElement, ClassRegistry, Monomial, Tensor2};
use crate::hyperfield::{canonical_to_krasner, verify_hyperfield_axioms, Homomorphism, Hyperfield};
use crate::io;
use crate::iso::find_isomorphism;
use crate::matroid::axioms::{
    verify_strong_circuits, verify_strong_gpf, verify_weak_circuits, verify_weak_gpf,
};
use crate::matroid::circuits::circuits_from_gpf;
use crate::matroid::GPFunction;
use crate::report::Report;
use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "hypermatroid",
    version,
    about = "Matroids over hyperfields: axiom checks, minors, duality, and the minor Hopf algebra"
)]
struct Cli {
    /// Output format for the primary document on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Random seed, accepted for reproducible scripting; current
    /// subcommands are fully deterministic and do not consume it.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum GpfKind {
    Weak,
    Strong,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum AntipodeMethod {
    Takeuchi,
    Recursive,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the hyperfield axioms of a built-in (by name) or a table
    /// document (by path).
    CheckHyperfield {
        /// Built-in name (krasner, signs, tropical, phase) or path to a
        /// hyperfield-table/1 document.
        target: String,
    },
    /// Check the basis-exchange style axioms of a matroid document.
    CheckGpf {
        /// Which axiom system to check.
        #[arg(long = "type", value_enum)]
        kind: GpfKind,
        file: PathBuf,
    },
    /// Compute the circuits of a matroid document, with the axioms they
    /// satisfy reported alongside.
    Circuits {
        #[arg(long = "type", value_enum, default_value_t = GpfKind::Strong)]
        kind: GpfKind,
        file: PathBuf,
    },
    /// Compute the dual matroid.
    Dual { file: PathBuf },
    /// Restrict to a subset of ground labels.
    Restrict {
        /// Comma-separated ground labels; empty for the empty set.
        #[arg(long, default_value = "")]
        set: String,
        file: PathBuf,
    },
    /// Delete a subset of ground labels.
    Delete {
        #[arg(long, default_value = "")]
        set: String,
        file: PathBuf,
    },
    /// Contract a subset of ground labels.
    Contract {
        #[arg(long, default_value = "")]
        set: String,
        file: PathBuf,
    },
    /// Direct sum of two matroids on disjoint ground labels.
    Dsum {
        /// Two comma-separated label prefixes applied to the left and
        /// right ground sets before summing.
        #[arg(long)]
        prefixes: Option<String>,
        left: PathBuf,
        right: PathBuf,
    },
    /// Push a matroid forward along the canonical homomorphism to a
    /// target hyperfield.
    Push {
        /// Target hyperfield name.
        #[arg(long)]
        to: String,
        file: PathBuf,
    },
    /// Decide isomorphism of two matroid documents.
    Iso { left: PathBuf, right: PathBuf },
    /// The underlying ordinary matroid as an indicator document.
    Underlying { file: PathBuf },
    /// The coproduct of the matroid's class in the minor algebra.
    Coproduct { file: PathBuf },
    /// The antipode of the matroid's class.
    Antipode {
        #[arg(long, value_enum, default_value_t = AntipodeMethod::Takeuchi)]
        method: AntipodeMethod,
        file: PathBuf,
    },
    /// Verify the Hopf algebra laws on classes generated by the given
    /// matroids, up to a degree cap.
    VerifyHopf {
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
}

/// Parses arguments, runs a subcommand, and reports through the given
/// streams. Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{rendered}");
                return 0;
            }
            let _ = write!(stderr, "{rendered}");
            return 2;
        }
    };
    match dispatch(&cli) {
        Ok((text, pass)) => {
            let _ = write!(stdout, "{text}");
            if pass {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

fn load_matroid(path: &PathBuf) -> Result<GPFunction> {
    let text = std::fs::read_to_string(path)?;
    io::parse_matroid(&text)
}

fn subset_positions(phi: &GPFunction, set: &str) -> Result<Vec<usize>> {
    if set.is_empty() {
        return Ok(Vec::new());
    }
    let labels: Vec<String> = set.split(',').map(|s| s.to_string()).collect();
    phi.ground().positions(&labels)
}

fn render_matroid(phi: &GPFunction, format: Format) -> Result<String> {
    let doc = io::matroid_to_doc(phi);
    match format {
        Format::Json => io::to_canonical_json(&doc),
        Format::Text => {
            let mut s = String::new();
            s.push_str(&format!("hyperfield: {}\n", phi.hyperfield().name()));
            s.push_str(&format!("ground: {}\n", phi.ground().labels().join(",")));
            s.push_str(&format!("rank: {}\n", phi.rank()));
            for (key, value) in &doc.values {
                s.push_str(&format!("{{{key}}} = {value}\n"));
            }
            Ok(s)
        }
    }
}

fn render_reports(reports: &[Report], format: Format) -> Result<(String, bool)> {
    let pass = reports.iter().all(|r| r.pass);
    let text = match format {
        Format::Json => {
            let docs: Vec<io::ReportDoc> = reports.iter().map(io::report_to_doc).collect();
            if docs.len() == 1 {
                io::to_canonical_json(&docs[0])?
            } else {
                io::to_canonical_json(&docs)?
            }
        }
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                s.push_str(&format!(
                    "{}: {}\n",
                    r.check,
                    if r.pass { "pass" } else { "FAIL" }
                ));
                for v in &r.violations {
                    s.push_str(&format!("  {} :: {}\n", v.witness, v.detail));
                }
                if r.truncated {
                    s.push_str(&format!(
                        "  ({} violations in total, list truncated)\n",
                        r.total_violations
                    ));
                }
            }
            s
        }
    };
    Ok((text, pass))
}

fn monomial_text(m: &Monomial) -> String {
    m.to_string()
}

fn render_element(e: &AlgebraElement, format: Format) -> Result<String> {
    match format {
        Format::Json => io::to_canonical_json(&io::element_to_doc(e)),
        Format::Text => {
            if e.is_zero() {
                return Ok("0\n".to_string());
            }
            let mut s = String::new();
            for (m, c) in e.terms() {
                s.push_str(&format!("{c} * {}\n", monomial_text(m)));
            }
            Ok(s)
        }
    }
}

fn render_tensor(t: &Tensor2, format: Format) -> Result<String> {
    match format {
        Format::Json => io::to_canonical_json(&io::tensor_to_doc(t)),
        Format::Text => {
            let mut s = String::new();
            for ((a, b), c) in t.terms() {
                s.push_str(&format!(
                    "{c} * {} (x) {}\n",
                    monomial_text(a),
                    monomial_text(b)
                ));
            }
            Ok(s)
        }
    }
}

fn dispatch(cli: &Cli) -> Result<(String, bool)> {
    let format = cli.format;
    match &cli.command {
        Cmd::CheckHyperfield { target } => {
            let h = match Hyperfield::from_name(target) {
                Ok(h) => h,
                Err(_) => {
                    let text = std::fs::read_to_string(target)?;
                    io::parse_table(&text)?
                }
            };
            let report = verify_hyperfield_axioms(&h)?;
            render_reports(&[report], format)
        }
        Cmd::CheckGpf { kind, file } => {
            let phi = load_matroid(file)?;
            let report = match kind {
                GpfKind::Weak => verify_weak_gpf(&phi)?,
                GpfKind::Strong => verify_strong_gpf(&phi)?,
            };
            render_reports(&[report], format)
        }
        Cmd::Circuits { kind, file } => {
            let phi = load_matroid(file)?;
            let c = circuits_from_gpf(&phi)?;
            let report = match kind {
                GpfKind::Weak => verify_weak_circuits(&c)?,
                GpfKind::Strong => verify_strong_circuits(&c)?,
            };
            let h = c.hyperfield();
            let rendered: Vec<BTreeMap<String, String>> = c
                .vectors()
                .iter()
                .map(|v| {
                    v.support(h)
                        .into_iter()
                        .map(|e| {
                            (
                                c.ground().label(e).to_string(),
                                h.format_element(v.get(e)),
                            )
                        })
                        .collect()
                })
                .collect();
            match format {
                Format::Json => {
                    let body = serde_json::json!({
                        "circuits": rendered,
                        "axioms": io::report_to_doc(&report),
                    });
                    Ok((io::to_canonical_json(&body)?, report.pass))
                }
                Format::Text => {
                    let mut s = String::new();
                    for circuit in &rendered {
                        let parts: Vec<String> = circuit
                            .iter()
                            .map(|(l, v)| format!("{l}={v}"))
                            .collect();
                        s.push_str(&format!("circuit: {}\n", parts.join(" ")));
                    }
                    let (report_text, pass) = render_reports(&[report], format)?;
                    s.push_str(&report_text);
                    Ok((s, pass))
                }
            }
        }
        Cmd::Dual { file } => {
            let phi = load_matroid(file)?;
            Ok((render_matroid(&phi.dual()?, format)?, true))
        }
        Cmd::Restrict { set, file } => {
            let phi = load_matroid(file)?;
            let s = subset_positions(&phi, set)?;
            Ok((render_matroid(&constructions::restrict(&phi, &s)?, format)?, true))
        }
        Cmd::Delete { set, file } => {
            let phi = load_matroid(file)?;
            let s = subset_positions(&phi, set)?;
            Ok((render_matroid(&constructions::delete(&phi, &s)?, format)?, true))
        }
        Cmd::Contract { set, file } => {
            let phi = load_matroid(file)?;
            let s = subset_positions(&phi, set)?;
            Ok((render_matroid(&constructions::contract(&phi, &s)?, format)?, true))
        }
        Cmd::Dsum {
            prefixes,
            left,
            right,
        } => {
            let mut l = load_matroid(left)?;
            let mut r = load_matroid(right)?;
            if let Some(p) = prefixes {
                let (pl, pr) = p.split_once(',').ok_or_else(|| {
                    Error::Usage("--prefixes takes two comma-separated prefixes".into())
                })?;
                l = constructions::prefix_labels(&l, pl)?;
                r = constructions::prefix_labels(&r, pr)?;
            }
            Ok((render_matroid(&constructions::direct_sum(&l, &r)?, format)?, true))
        }
        Cmd::Push { to, file } => {
            let phi = load_matroid(file)?;
            let target = Hyperfield::from_name(to)?;
            let hom = if phi.hyperfield() == &target {
                Homomorphism::identity(phi.hyperfield().clone())
            } else if target == Hyperfield::Krasner {
                canonical_to_krasner(phi.hyperfield())
            } else {
                return Err(Error::NoCanonicalHom {
                    from: phi.hyperfield().name(),
                    to: target.name(),
                });
            };
            Ok((render_matroid(&constructions::pushforward(&hom, &phi)?, format)?, true))
        }
        Cmd::Iso { left, right } => {
            let l = load_matroid(left)?;
            let r = load_matroid(right)?;
            let found = find_isomorphism(&l, &r)?;
            let pass = found.is_some();
            let text = match format {
                Format::Json => {
                    let body = match &found {
                        Some((perm, unit)) => {
                            let map: BTreeMap<String, String> = perm
                                .iter()
                                .enumerate()
                                .map(|(i, &j)| {
                                    (
                                        l.ground().label(i).to_string(),
                                        r.ground().label(j).to_string(),
                                    )
                                })
                                .collect();
                            serde_json::json!({
                                "isomorphic": true,
                                "map": map,
                                "unit": l.hyperfield().format_element(unit),
                            })
                        }
                        None => serde_json::json!({
                            "isomorphic": false,
                            "map": null,
                            "unit": null,
                        }),
                    };
                    io::to_canonical_json(&body)?
                }
                Format::Text => match &found {
                    Some((perm, unit)) => {
                        let pairs: Vec<String> = perm
                            .iter()
                            .enumerate()
                            .map(|(i, &j)| {
                                format!("{}->{}", l.ground().label(i), r.ground().label(j))
                            })
                            .collect();
                        format!(
                            "isomorphic: map {} with unit {}\n",
                            pairs.join(" "),
                            l.hyperfield().format_element(unit)
                        )
                    }
                    None => "not isomorphic\n".to_string(),
                },
            };
            Ok((text, pass))
        }
        Cmd::Underlying { file } => {
            let phi = load_matroid(file)?;
            let m = phi.underlying();
            let doc = io::underlying_to_doc(&m, phi.ground());
            match format {
                Format::Json => Ok((io::to_canonical_json(&doc)?, true)),
                Format::Text => {
                    let mut s = format!(
                        "rank {} on {{{}}}\n",
                        m.rank(),
                        phi.ground().labels().join(",")
                    );
                    for b in m.bases() {
                        s.push_str(&format!("basis: {}\n", phi.ground().format_subset(b)));
                    }
                    Ok((s, true))
                }
            }
        }
        Cmd::Coproduct { file } => {
            let phi = load_matroid(file)?;
            let reg = ClassRegistry::new();
            let m = reg.register(&phi)?;
            let delta = reg.coproduct_monomial(&m)?;
            Ok((render_tensor(&delta, format)?, true))
        }
        Cmd::Antipode { method, file } => {
            let phi = load_matroid(file)?;
            let reg = ClassRegistry::new();
            let m = reg.register(&phi)?;
            let x = AlgebraElement::from_monomial(m);
            let s = match method {
                AntipodeMethod::Takeuchi => takeuchi_antipode(&reg, &x)?,
                AntipodeMethod::Recursive => recursive_antipode(&reg, &x)?,
            };
            Ok((render_element(&s, format)?, true))
        }
        Cmd::VerifyHopf { max_degree, files } => {
            let seeds = files
                .iter()
                .map(load_matroid)
                .collect::<Result<Vec<_>>>()?;
            let reg = ClassRegistry::new();
            let reports = verify_bialgebra(&reg, &seeds, *max_degree)?;
            render_reports(&reports, format)
        }
    }
}
