//! Output documents and their json, csv and plain renderings.

use std::fmt::Write as _;

use eqbundle::beta::BetaTauReport;
use eqbundle::classify::Classification;
use eqbundle::complex::Violation;
use eqbundle::export::{ComplexExport, OrbitDocument, RHEntry, Table1Row};
use eqbundle::families::Family;
use eqbundle::reps::{RepClass, RepSpaceExport};
use eqbundle::target::TargetGroup;
use eqbundle::verify::VerifyReport;
use eqbundle::zmodule::{ChainRanks, FixedSequenceReport};
use serde::Serialize;

use crate::{CliError, Format};

type Result<T> = std::result::Result<T, CliError>;

#[derive(Serialize)]
pub struct SkeletonDoc {
    #[serde(flatten)]
    pub complex: ComplexExport,
    pub regular: bool,
    pub violations: Vec<Violation>,
}

#[derive(Serialize)]
pub struct RhDoc {
    pub entries: Vec<RHEntry>,
    pub holds: bool,
}

#[derive(Serialize)]
pub struct RepsDoc {
    pub family: Family,
    #[serde(flatten)]
    pub space: RepSpaceExport,
    /// Omitted when the count exceeds the listing limit.
    pub classes: Option<Vec<RepClass>>,
}

#[derive(Serialize)]
pub struct ZmodDoc {
    pub family: Family,
    pub target: TargetGroup,
    pub ranks: ChainRanks,
    pub report: FixedSequenceReport,
}

#[derive(Serialize)]
pub struct Table1Doc {
    pub rows: Vec<Table1Row>,
    pub all_match: bool,
}

#[derive(Serialize)]
pub struct ClassifyDoc {
    #[serde(flatten)]
    pub classification: Classification,
    pub congruence_holds: bool,
}

#[derive(Serialize)]
pub struct BetaDoc {
    pub family: Family,
    pub target: TargetGroup,
    pub report: BetaTauReport,
}

pub enum Document {
    Skeleton(SkeletonDoc),
    Orbit(OrbitDocument),
    RhCheck(RhDoc),
    Reps(RepsDoc),
    Zmod(ZmodDoc),
    Table1(Table1Doc),
    Classify(ClassifyDoc),
    Beta(BetaDoc),
    Verify(VerifyReport),
}

pub struct Rendered {
    pub text: String,
    /// False when the document reports a failed check.
    pub passed: bool,
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| CliError::Output(e.to_string());
    w.write_record(header).map_err(io)?;
    for r in rows {
        w.write_record(&r).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Output(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

impl Document {
    fn name(&self) -> &'static str {
        match self {
            Document::Skeleton(_) => "skeleton",
            Document::Orbit(_) => "orbit",
            Document::RhCheck(_) => "rh-check",
            Document::Reps(_) => "reps",
            Document::Zmod(_) => "zmod-check",
            Document::Table1(_) => "table1",
            Document::Classify(_) => "classify",
            Document::Beta(_) => "beta-check",
            Document::Verify(_) => "verify",
        }
    }

    fn passed(&self) -> bool {
        match self {
            Document::Skeleton(d) => d.regular,
            Document::Orbit(d) => d.report.passed(),
            Document::RhCheck(d) => d.holds,
            Document::Reps(_) => true,
            Document::Zmod(d) => d.report.holds,
            Document::Table1(d) => d.all_match,
            Document::Classify(d) => d.congruence_holds,
            Document::Beta(d) => d.report.passed,
            Document::Verify(d) => d.passed,
        }
    }

    fn json(&self) -> String {
        let v = match self {
            Document::Skeleton(d) => serde_json::to_string_pretty(d),
            Document::Orbit(d) => serde_json::to_string_pretty(d),
            Document::RhCheck(d) => serde_json::to_string_pretty(d),
            Document::Reps(d) => serde_json::to_string_pretty(d),
            Document::Zmod(d) => serde_json::to_string_pretty(d),
            Document::Table1(d) => serde_json::to_string_pretty(d),
            Document::Classify(d) => serde_json::to_string_pretty(d),
            Document::Beta(d) => serde_json::to_string_pretty(d),
            Document::Verify(d) => serde_json::to_string_pretty(d),
        };
        v.expect("documents serialize") + "\n"
    }

    fn csv(&self) -> Result<String> {
        match self {
            Document::Table1(d) => csv_text(
                &["family", "n", "one_minus_chi", "N"],
                d.rows.iter().map(|r| {
                    vec![r.family.to_string(), opt(r.n), r.one_minus_chi.to_string(), r.big_n.to_string()]
                }),
            ),
            Document::RhCheck(d) => csv_text(
                &["family", "n", "chi_x", "chi_a", "group_order", "singular_sum", "holds"],
                d.entries.iter().map(|e| {
                    let r = &e.report;
                    vec![
                        e.family.kind().to_string(),
                        opt(e.family.n()),
                        r.chi_x.to_string(),
                        r.chi_a.to_string(),
                        r.group_order.to_string(),
                        r.singular_sum.to_string(),
                        r.holds.to_string(),
                    ]
                }),
            ),
            Document::Classify(d) => csv_text(
                &["rep", "chern"],
                d.classification.classes.iter().map(|b| vec![b.rep.to_string(), b.chern.to_string()]),
            ),
            Document::Reps(d) => match &d.classes {
                Some(cs) => csv_text(&["index", "rep"], cs.iter().enumerate().map(|(i, r)| vec![i.to_string(), r.to_string()])),
                None => Err(CliError::Usage(format!(
                    "{} classes exceed the listing limit; raise --list-limit for csv output",
                    d.space.count
                ))),
            },
            Document::Verify(d) => csv_text(
                &["check", "passed", "detail"],
                d.checks.iter().map(|c| vec![c.name.clone(), c.passed.to_string(), c.detail.clone()]),
            ),
            _ => Err(CliError::Usage(format!("csv output is not available for {}", self.name()))),
        }
    }

    fn plain(&self) -> String {
        let mut s = String::new();
        let w = &mut s;
        match self {
            Document::Skeleton(d) => {
                let c = &d.complex;
                let _ = writeln!(w, "group order {}", c.group.order);
                let _ = writeln!(w, "vertices {}  edges {}  chi {}", c.vertices.len(), c.edges.len(), c.euler_characteristic);
                let _ = writeln!(w, "regular {}", d.regular);
                for v in &d.violations {
                    let _ = writeln!(w, "  {v:?}");
                }
            }
            Document::Orbit(d) => {
                let _ = writeln!(w, "{}", d.family);
                let _ = writeln!(w, "vertex orbits {}  edge orbits {}  chi(A) {}", d.orbit_graph.vertex_orbits.len(), d.orbit_graph.edge_orbits.len(), d.orbit_graph.chi_a);
                let _ = writeln!(w, "signature {:?}", d.report.signature);
                let _ = writeln!(w, "groupoid valid {}", d.report.passed());
                for n in &d.report.notes {
                    let _ = writeln!(w, "note: {n}");
                }
            }
            Document::RhCheck(d) => {
                for e in &d.entries {
                    let r = &e.report;
                    let _ = writeln!(
                        w,
                        "{:<16} chi(X) {:>5} = {} * {} - {:<4} {}",
                        e.family.to_string(),
                        r.chi_x,
                        r.group_order,
                        r.chi_a,
                        r.singular_sum,
                        if r.holds { "ok" } else { "FAIL" }
                    );
                }
            }
            Document::Reps(d) => {
                let _ = writeln!(w, "{} into {}: {} classes", d.family, d.space.target, d.space.count);
                for f in &d.space.factors {
                    let _ = writeln!(w, "  cell {} (order {}): {} choices", f.cell, f.k, f.classes.len());
                }
                for c in d.classes.iter().flatten() {
                    let _ = writeln!(w, "{c}");
                }
            }
            Document::Zmod(d) => {
                let r = &d.report;
                let _ = writeln!(w, "{} with {}", d.family, d.target);
                let _ = writeln!(w, "two-cell orbits {}", r.two_cell_orbits);
                let _ = writeln!(w, "fixed ranks: sigma_X {}  two-cells {}", r.sigma_x_fixed_rank, r.two_cell_fixed_rank);
                let _ = writeln!(w, "norm index {} (expected {})", r.norm_index, r.expected_index);
                let _ = writeln!(w, "coker k = {}", r.k_cokernel);
                let _ = writeln!(w, "holds {}", r.holds);
            }
            Document::Table1(d) => {
                let _ = writeln!(w, "{:<12} {:>3} {:>6} {:>4}", "family", "n", "1-chi", "N");
                for r in &d.rows {
                    let _ = writeln!(w, "{:<12} {:>3} {:>6} {:>4}", r.family.to_string(), opt(r.n), r.one_minus_chi, r.big_n);
                }
            }
            Document::Classify(d) => {
                let c = &d.classification;
                let _ = writeln!(w, "{} representation classes, window {}..{}", c.rep_count, c.window[0], c.window[1]);
                for b in &c.classes {
                    let _ = writeln!(w, "{}  c = {}", b.rep, b.chern);
                }
            }
            Document::Beta(d) => {
                let r = &d.report;
                let _ = writeln!(w, "{} into {}", d.family, d.target);
                let _ = writeln!(w, "compatible tuples {}  lifted {}", r.compatible_tuples, r.lifted_tuples);
                let _ = writeln!(w, "beta surjective {}  fibers agree {}", r.beta_surjective, r.fibers_agree);
                let _ = writeln!(w, "passed {}", r.passed);
            }
            Document::Verify(d) => {
                for c in &d.checks {
                    let _ = writeln!(w, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
                }
            }
        }
        s
    }

    pub fn render(&self, format: Format) -> Result<Rendered> {
        let text = match format {
            Format::Json => self.json(),
            Format::Csv => self.csv()?,
            Format::Plain => self.plain(),
        };
        Ok(Rendered { text, passed: self.passed() })
    }
}
