//! Output documents and emitters. Canonical fields carry exact rationals
//! as strings; float mirrors are suffixed `_float`. JSON for nested
//! structures, CSV only for the flat tables, pretty for terminals.

use frobtower_core::coherent::{moment, spectral_measure, Direction, Variant};
use frobtower_core::engine::Engine;
use frobtower_core::error::{Error, Result};
use frobtower_core::towers::frobenius;
use frobtower_core::verify::IdentityReport;
use serde::Serialize;

#[derive(Clone, Copy)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

fn timestamp(enabled: bool) -> Option<u64> {
    enabled.then(|| {
        std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0)
    })
}

pub trait Document: Serialize {
    fn pretty(&self) -> String;
}

pub fn emit<D: Document>(
    doc: &D,
    format: Format,
    csv: impl Fn(&D) -> Result<String>,
) -> Result<()> {
    let text = match format {
        Format::Json => serde_json::to_string_pretty(doc)
            .map_err(|e| Error::Config(format!("serialization: {e}")))?,
        Format::Csv => csv(doc)?,
        Format::Pretty => doc.pretty(),
    };
    println!("{text}");
    Ok(())
}

pub fn no_csv<D>(_: &D) -> Result<String> {
    Err(Error::Config(
        "this command has no flat table; use --format json or pretty".into(),
    ))
}

// ---------------------------------------------------------------- simples

#[derive(Serialize)]
pub struct BlockRow {
    pub index: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub dim_simple: usize,
    pub dim_projective: usize,
    pub block_rank: usize,
    pub central: bool,
}

#[derive(Serialize)]
pub struct LevelRow {
    pub n: usize,
    pub dim: usize,
    pub blocks: Vec<BlockRow>,
}

#[derive(Serialize)]
pub struct SimplesDoc {
    pub tower: String,
    pub field: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated_at: Option<u64>,
    pub levels: Vec<LevelRow>,
}

pub fn simples(
    engine: &mut Engine,
    upto: usize,
    labels: bool,
    stamp: bool,
) -> Result<SimplesDoc> {
    let label_table = if labels {
        engine.partition_labels(upto)?
    } else {
        None
    };
    let mut levels = Vec::with_capacity(upto + 1);
    for n in 0..=upto {
        let blocks = engine.blocks(n)?;
        let rows = blocks
            .blocks
            .iter()
            .enumerate()
            .map(|(i, b)| BlockRow {
                index: i,
                label: label_table
                    .as_ref()
                    .and_then(|t| t.get(n))
                    .and_then(|l| l.get(i))
                    .cloned(),
                dim_simple: b.dim_simple,
                dim_projective: b.dim_proj,
                block_rank: b.dim_simple * b.dim_proj,
                central: b.f_central,
            })
            .collect();
        levels.push(LevelRow {
            n,
            dim: engine.tower.dim(n),
            blocks: rows,
        });
    }
    Ok(SimplesDoc {
        tower: engine.tower.spec_string(),
        field: engine.field().name().to_string(),
        generated_at: timestamp(stamp),
        levels,
    })
}

impl Document for SimplesDoc {
    fn pretty(&self) -> String {
        let mut out = format!("tower {} over {}\n", self.tower, self.field);
        for level in &self.levels {
            out += &format!("level {} (dim {}):\n", level.n, level.dim);
            for b in &level.blocks {
                let label = b.label.as_deref().unwrap_or("");
                out += &format!(
                    "  block {:>2} {:>8}  dim L = {:>3}  dim P = {:>3}  rank = {:>4}  central f: {}\n",
                    b.index, label, b.dim_simple, b.dim_projective, b.block_rank, b.central
                );
            }
        }
        out
    }
}

pub fn simples_csv(doc: &SimplesDoc) -> Result<String> {
    let mut out = String::from("level,index,label,dim_simple,dim_projective,block_rank,central\n");
    for level in &doc.levels {
        for b in &level.blocks {
            out += &format!(
                "{},{},{},{},{},{},{}\n",
                level.n,
                b.index,
                b.label.as_deref().unwrap_or(""),
                b.dim_simple,
                b.dim_projective,
                b.block_rank,
                b.central
            );
        }
    }
    Ok(out)
}

// -------------------------------------------------------------- branching

#[derive(Serialize)]
pub struct PairRow {
    pub lower_level: usize,
    pub kappa: Vec<Vec<usize>>,
    pub kappa_star: Vec<Vec<usize>>,
}

#[derive(Serialize)]
pub struct BranchingDoc {
    pub tower: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated_at: Option<u64>,
    pub pairs: Vec<PairRow>,
}

pub fn branching(engine: &mut Engine, upto: usize, stamp: bool) -> Result<BranchingDoc> {
    let mut pairs = Vec::with_capacity(upto);
    for n in 0..upto {
        let t = engine.branching(n)?;
        pairs.push(PairRow {
            lower_level: n,
            kappa: t.kappa.clone(),
            kappa_star: t.kappa_star.clone(),
        });
    }
    Ok(BranchingDoc {
        tower: engine.tower.spec_string(),
        generated_at: timestamp(stamp),
        pairs,
    })
}

impl Document for BranchingDoc {
    fn pretty(&self) -> String {
        let mut out = format!("tower {}\n", self.tower);
        for p in &self.pairs {
            out += &format!("levels {} -> {}:\n", p.lower_level, p.lower_level + 1);
            out += "  kappa:\n";
            for row in &p.kappa {
                out += &format!("    {row:?}\n");
            }
            out += "  kappa*:\n";
            for row in &p.kappa_star {
                out += &format!("    {row:?}\n");
            }
        }
        out
    }
}

// --------------------------------------------------------------- measures

#[derive(Serialize)]
pub struct MeasureLevel {
    pub n: usize,
    pub pl: Vec<String>,
    pub pl_float: Vec<f64>,
}

#[derive(Serialize)]
pub struct TransitionRow {
    pub lower_level: usize,
    pub variant: Variant,
    pub p_down: Vec<Vec<String>>,
    pub p_up: Vec<Vec<String>>,
}

#[derive(Serialize)]
pub struct MomentRow {
    pub k: u32,
    pub value: String,
    pub value_float: f64,
}

#[derive(Serialize)]
pub struct SpectralRow {
    pub level: usize,
    pub vertex: usize,
    pub variant: Variant,
    pub direction: Direction,
    pub atoms: Vec<(String, String)>,
    pub moments: Vec<MomentRow>,
}

#[derive(Serialize)]
pub struct MeasuresDoc {
    pub tower: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated_at: Option<u64>,
    pub levels: Vec<MeasureLevel>,
    pub transitions: Vec<TransitionRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectral: Option<Vec<SpectralRow>>,
}

fn scalar_float(s: &frobtower_core::exactlin::Scalar) -> f64 {
    s.to_f64_parts().0
}

pub fn measures(
    engine: &mut Engine,
    upto: usize,
    variants: &[Variant],
    k_range: Option<&[u32]>,
    stamp: bool,
) -> Result<MeasuresDoc> {
    let mut levels = Vec::with_capacity(upto + 1);
    let first = engine.coherent_system(upto, variants[0])?;
    for (n, pl) in first.pl.iter().enumerate() {
        levels.push(MeasureLevel {
            n,
            pl: pl.iter().map(|s| s.to_string()).collect(),
            pl_float: pl.iter().map(scalar_float).collect(),
        });
    }
    let mut transitions = Vec::new();
    let mut spectral_rows = Vec::new();
    for &variant in variants {
        let sys = engine.coherent_system(upto, variant)?;
        for n in 0..upto {
            transitions.push(TransitionRow {
                lower_level: n,
                variant,
                p_down: sys.p_down[n]
                    .iter()
                    .map(|row| row.iter().map(|s| s.to_string()).collect())
                    .collect(),
                p_up: sys.p_up[n]
                    .iter()
                    .map(|row| row.iter().map(|s| s.to_string()).collect())
                    .collect(),
            });
        }
        if let Some(ks) = k_range {
            let tables = engine.eigen_tables(upto)?;
            for level in 0..=upto {
                for vertex in 0..sys.pl[level].len() {
                    for direction in [Direction::Up, Direction::Down] {
                        let applicable = match direction {
                            Direction::Up => level < upto,
                            Direction::Down => level > 0,
                        };
                        if !applicable {
                            continue;
                        }
                        let sm = spectral_measure(&sys, &tables, level, vertex, direction)?;
                        let moments = ks
                            .iter()
                            .map(|&k| {
                                let v = moment(&sm, k);
                                MomentRow {
                                    k,
                                    value: v.to_string(),
                                    value_float: scalar_float(&v),
                                }
                            })
                            .collect();
                        spectral_rows.push(SpectralRow {
                            level,
                            vertex,
                            variant,
                            direction,
                            atoms: sm
                                .atoms
                                .iter()
                                .map(|(l, m)| (l.to_string(), m.to_string()))
                                .collect(),
                            moments,
                        });
                    }
                }
            }
        }
    }
    Ok(MeasuresDoc {
        tower: engine.tower.spec_string(),
        generated_at: timestamp(stamp),
        levels,
        transitions,
        spectral: k_range.map(|_| spectral_rows),
    })
}

impl Document for MeasuresDoc {
    fn pretty(&self) -> String {
        let mut out = format!("tower {}\n", self.tower);
        for l in &self.levels {
            out += &format!("Pl_{} = [{}]\n", l.n, l.pl.join(", "));
        }
        for t in &self.transitions {
            out += &format!(
                "{} transitions {} <-> {}\n",
                t.variant.name(),
                t.lower_level,
                t.lower_level + 1
            );
            for (i, row) in t.p_down.iter().enumerate() {
                out += &format!("  down[{i}] = [{}]\n", row.join(", "));
            }
            for (i, row) in t.p_up.iter().enumerate() {
                out += &format!("  up[{i}] = [{}]\n", row.join(", "));
            }
        }
        if let Some(sp) = &self.spectral {
            for row in sp {
                let atoms: Vec<String> = row
                    .atoms
                    .iter()
                    .map(|(l, m)| format!("{m}@{l}"))
                    .collect();
                let moments: Vec<String> = row
                    .moments
                    .iter()
                    .map(|m| format!("m_{} = {}", m.k, m.value))
                    .collect();
                out += &format!(
                    "{} {:?} measure at ({},{}): atoms [{}]; {}\n",
                    row.variant.name(),
                    row.direction,
                    row.level,
                    row.vertex,
                    atoms.join(", "),
                    moments.join(", ")
                );
            }
        }
        out
    }
}

pub fn measures_csv(doc: &MeasuresDoc) -> Result<String> {
    let mut out = String::from("level,vertex,pl,pl_float\n");
    for l in &doc.levels {
        for (v, (p, f)) in l.pl.iter().zip(&l.pl_float).enumerate() {
            out += &format!("{},{},{},{}\n", l.n, v, p, f);
        }
    }
    Ok(out)
}

// ----------------------------------------------------------------- verify

#[derive(Serialize)]
pub struct VerifyDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated_at: Option<u64>,
    pub total: usize,
    pub verified: usize,
    pub failed: usize,
    pub reports: Vec<IdentityReport>,
}

pub fn verify_doc(reports: Vec<IdentityReport>, stamp: bool) -> VerifyDoc {
    let verified = reports
        .iter()
        .filter(|r| r.status == frobtower_core::verify::Status::Verified)
        .count();
    VerifyDoc {
        generated_at: timestamp(stamp),
        total: reports.len(),
        verified,
        failed: reports.len() - verified,
        reports,
    }
}

impl Document for VerifyDoc {
    fn pretty(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            let status = match r.status {
                frobtower_core::verify::Status::Verified => "ok  ",
                frobtower_core::verify::Status::Failed => "FAIL",
            };
            out += &format!(
                "[{status}] {:<32} {:<12} {:<10} {}\n",
                r.id, r.tower, r.level, r.params
            );
            if !r.witness.is_empty() {
                out += &format!("       witness: {}\n", r.witness);
            }
        }
        out += &format!(
            "{} checks, {} verified, {} failed\n",
            self.total, self.verified, self.failed
        );
        out
    }
}

// ----------------------------------------------------------------- sample

#[derive(Serialize)]
pub struct SampleDoc {
    pub tower: String,
    pub variant: Variant,
    pub seed: u64,
    pub steps: usize,
    pub paths: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated_at: Option<u64>,
    pub path_records: Vec<Vec<usize>>,
    pub final_counts: Vec<usize>,
    pub exact_marginal: Vec<String>,
    pub exact_marginal_float: Vec<f64>,
    pub max_abs_deviation_float: f64,
}

pub fn sample(
    engine: &mut Engine,
    steps: usize,
    seed: u64,
    paths: usize,
    variant: Variant,
    stamp: bool,
) -> Result<SampleDoc> {
    let sys = engine.coherent_system(steps, variant)?;
    let walks = sys.sample_growth(steps, seed, paths)?;
    let mut counts = vec![0usize; sys.pl[steps].len()];
    for w in &walks {
        counts[*w.vertices.last().unwrap()] += 1;
    }
    let exact = &sys.pl[steps];
    let mut max_dev = 0f64;
    for (c, e) in counts.iter().zip(exact) {
        let dev = (*c as f64 / paths as f64 - scalar_float(e)).abs();
        max_dev = max_dev.max(dev);
    }
    Ok(SampleDoc {
        tower: engine.tower.spec_string(),
        variant,
        seed,
        steps,
        paths,
        generated_at: timestamp(stamp),
        path_records: walks.into_iter().map(|w| w.vertices).collect(),
        final_counts: counts,
        exact_marginal: exact.iter().map(|s| s.to_string()).collect(),
        exact_marginal_float: exact.iter().map(scalar_float).collect(),
        max_abs_deviation_float: max_dev,
    })
}

impl Document for SampleDoc {
    fn pretty(&self) -> String {
        let mut out = format!(
            "tower {}, {} variant, seed {}, {} paths of {} steps\n",
            self.tower,
            self.variant.name(),
            self.seed,
            self.paths,
            self.steps
        );
        for (v, c) in self.final_counts.iter().enumerate() {
            out += &format!(
                "  vertex {v}: empirical {:.5}  exact {} ({:.5})\n",
                *c as f64 / self.paths as f64,
                self.exact_marginal[v],
                self.exact_marginal_float[v]
            );
        }
        out += &format!("max |empirical - exact| = {:.6}\n", self.max_abs_deviation_float);
        out
    }
}

pub fn sample_csv(doc: &SampleDoc) -> Result<String> {
    let mut out = String::from("path_index,vertices\n");
    for (i, p) in doc.path_records.iter().enumerate() {
        let verts: Vec<String> = p.iter().map(|v| v.to_string()).collect();
        out += &format!("{},{}\n", i, verts.join(" "));
    }
    Ok(out)
}

// ---------------------------------------------------------------- casimir

#[derive(Serialize)]
pub struct CasimirDoc {
    pub tower: String,
    pub n: usize,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated_at: Option<u64>,
    pub casimir: String,
    pub casimir_iota: String,
    pub iota_central: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub iota_witness: Option<String>,
}

pub fn casimir(engine: &mut Engine, n: usize, k: usize, stamp: bool) -> Result<CasimirDoc> {
    let sys = engine.system(n, k)?;
    let c = frobenius::casimir(&engine.tower, &sys)?;
    let ci = frobenius::casimir_iota(&engine.tower, &sys)?;
    let witness = frobenius::centrality_witness(&engine.tower, &ci)?;
    Ok(CasimirDoc {
        tower: engine.tower.spec_string(),
        n,
        k,
        generated_at: timestamp(stamp),
        casimir: c.to_string(),
        casimir_iota: ci.to_string(),
        iota_central: witness.is_none(),
        iota_witness: witness.map(|w| w.to_string()),
    })
}

impl Document for CasimirDoc {
    fn pretty(&self) -> String {
        let mut out = format!("tower {}, extension ({}, {})\n", self.tower, self.n, self.k);
        out += &format!("C      = {}\n", self.casimir);
        out += &format!("C_iota = {}\n", self.casimir_iota);
        out += &format!("C_iota central: {}\n", self.iota_central);
        if let Some(w) = &self.iota_witness {
            out += &format!("non-centrality witness: {w}\n");
        }
        out
    }
}
