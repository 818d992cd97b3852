use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};
use std::sync::{mpsc, Arc};
use std::thread;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use semidec::decompose::{decompose_semigroup, reparametrize, Decomposition, Mode};
use semidec::fibers::{detect_gluing, Fibers, GluingCertificate};
use semidec::linalg::{is_pointed, Pointedness};
use semidec::toric::{
    betti_degrees, is_complete_intersection, is_unique_markov, markov_basis,
    markov_basis_decomposed, Binomial, MarkovBasis,
};
use semidec::SemigroupPresentation;
use thiserror::Error;

use crate::args::{Cli, Command, ComplexKind, Input};
use crate::mat::{parse_mat, parse_moduli, ParseError};
use crate::report::*;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: ParseError },

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Math(#[from] semidec::Error),
}

impl CliError {
    /// 1 for mathematical failures on valid input, 2 for unusable input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } | CliError::Usage(_) => 2,
            CliError::Math(e) if is_input_error(e) => 2,
            CliError::Math(_) => 1,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "io",
            CliError::Parse { .. } => "parse",
            CliError::Usage(_) => "usage",
            CliError::Math(e) if is_input_error(e) => "input",
            CliError::Math(semidec::Error::NotPointed { .. }) => "not_pointed",
            CliError::Math(
                semidec::Error::CapExceeded { .. } | semidec::Error::EnumerationCap { .. },
            ) => "cap_exceeded",
            CliError::Math(_) => "math",
        }
    }

    pub fn to_report(&self) -> ErrorReport {
        ErrorReport {
            error: ErrorBody {
                kind: self.kind().to_string(),
                message: self.to_string(),
                exit_code: i64::from(self.exit_code()).into(),
            },
        }
    }
}

fn is_input_error(e: &semidec::Error) -> bool {
    use semidec::Error::*;
    matches!(
        e,
        DimensionMismatch { .. }
            | NonPositiveModulus(_)
            | ZeroGenerator(_)
            | TorsionPresent(_)
            | NegativeExponent(_)
    )
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn load_presentation(input: &Input) -> Result<SemigroupPresentation, CliError> {
    let matrix = parse_mat(&read(&input.mat)?).map_err(|source| CliError::Parse {
        path: input.mat.clone(),
        source,
    })?;
    let moduli = match &input.moduli {
        Some(path) => parse_moduli(&read(path)?).map_err(|source| CliError::Parse {
            path: path.clone(),
            source,
        })?,
        None => Vec::new(),
    };
    Ok(SemigroupPresentation::new(matrix, moduli)?)
}

struct Timings(Option<BTreeMap<String, Dec>>);

impl Timings {
    fn time<T>(&mut self, phase: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        if let Some(map) = &mut self.0 {
            map.insert(phase.to_string(), micros(start.elapsed()));
        }
        out
    }
}

fn micros(d: Duration) -> Dec {
    Dec::from(d.as_micros())
}

/// Runs one command and returns its report.
pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let mut timings = Timings((!cli.no_timings).then(BTreeMap::new));
    let p = timings.time("load", || load_presentation(cli.command.input()))?;
    let mut report = Report {
        command: cli.command.name().to_string(),
        presentation: PresentationEcho {
            rows: p.matrix().rows().into(),
            cols: p.matrix().cols().into(),
            matrix: matrix(p.matrix()),
            moduli: p.moduli().iter().map(Dec::from).collect(),
        },
        decomposition: None,
        markov: None,
        verdicts: None,
        fiber: None,
        parametrization: None,
        bench: None,
        notes: Vec::new(),
        timings: None,
    };
    match &cli.command {
        Command::Decompose { mode, .. } => decompose(&p, *mode, &mut report, &mut timings)?,
        Command::Markov { whole, .. } => {
            let (basis, strategy) = if *whole {
                (timings.time("markov", || markov_basis(&p))?, "whole")
            } else {
                (
                    timings.time("markov", || markov_basis_decomposed(&p))?.1,
                    "per-block",
                )
            };
            report.markov = Some(markov_report(&p, &basis, strategy)?);
        }
        Command::Check {
            unique, ci, gluing, ..
        } => {
            let all = !(*unique || *ci || *gluing);
            let verdicts = timings.time("check", || {
                check(&p, all || *unique, all || *ci, all || *gluing)
            })?;
            if verdicts.gluing.is_some() {
                report.notes.push(
                    "gluing verdicts assume the generators form a minimal generating set".into(),
                );
            }
            report.verdicts = Some(verdicts);
        }
        Command::Fiber {
            degree, complex, ..
        } => {
            let m = parse_degree(degree, p.degree_dim())?;
            report.fiber = Some(timings.time("fiber", || fiber(&p, &m, *complex))?);
        }
        Command::Reparam { .. } => {
            let r = timings.time("reparam", || reparametrize(&p))?;
            report.parametrization = Some(ParametrizationReport {
                text: r.to_string(),
                parameters: r.parameter_count().into(),
                exponents: matrix(&r.exponent_matrix()),
                blocks: r
                    .blocks
                    .iter()
                    .map(|b| ParameterBlockReport {
                        generators: one_based(&b.generators),
                        parameters: one_based(&b.parameters),
                    })
                    .collect(),
            });
        }
        Command::Bench {
            repeat, timeout, ..
        } => {
            if !(timeout.is_finite() && *timeout > 0.0) {
                return Err(CliError::Usage(format!(
                    "timeout must be a positive number of seconds, got {timeout}"
                )));
            }
            report.bench = Some(bench(
                p.clone(),
                *repeat,
                Duration::from_secs_f64(*timeout),
            )?);
        }
    }
    report.timings = timings.0;
    Ok(report)
}

fn partition(dec: &Decomposition) -> Vec<Vec<Dec>> {
    dec.partition().iter().map(|part| one_based(part)).collect()
}

fn decompose(
    p: &SemigroupPresentation,
    mode: Mode,
    report: &mut Report,
    timings: &mut Timings,
) -> Result<(), CliError> {
    let dec = timings.time("decompose", || decompose_semigroup(p, mode))?;
    let mut out = DecompositionReport {
        mode: mode.as_str().to_string(),
        decomposable: dec.decomposable,
        summands: dec.summand_count().into(),
        column_order: one_based(dec.column_order.order()),
        row_transform: matrix(&dec.row_transform),
        diagonal: matrix(&dec.diagonal),
        blocks: dec
            .blocks
            .iter()
            .map(|b| BlockReport {
                generators: one_based(&b.generators),
                matrix: matrix(&b.matrix),
            })
            .collect(),
        free_generators: one_based(&dec.free_generators),
        partition: partition(&dec),
        cross_check: None,
    };

    if p.is_torsion_free() {
        let other_mode = match mode {
            Mode::Kernel => Mode::Direct,
            Mode::Direct => Mode::Kernel,
        };
        let other = timings.time("cross_check", || decompose_semigroup(p, other_mode))?;
        let (kernel, direct) = match mode {
            Mode::Kernel => (&dec, &other),
            Mode::Direct => (&other, &dec),
        };
        let agree =
            kernel.decomposable == direct.decomposable && kernel.partition() == direct.partition();
        if !agree {
            report.notes.push(format!(
                "kernel and direct mode disagree: kernel mode finds {} summand(s), direct mode finds {}; \
                 direct mode only detects decompositions visible in the generator matrix, the kernel verdict is exact",
                kernel.summand_count(),
                direct.summand_count()
            ));
        }
        out.cross_check = Some(CrossCheck {
            kernel_decomposable: kernel.decomposable,
            direct_decomposable: direct.decomposable,
            kernel_partition: partition(kernel),
            direct_partition: partition(direct),
            agree,
        });
    }

    if mode == Mode::Kernel && dec.blocks.is_empty() {
        report.notes.push(
            "the kernel lattice is zero: every generator is a free summand and the ideal is zero"
                .into(),
        );
    }
    if let Pointedness::NotPointed { witness } = is_pointed(p)? {
        let w: Vec<String> = witness.iter().map(ToString::to_string).collect();
        report.notes.push(format!(
            "not pointed: ({}) is a nonnegative kernel element, so fibers are infinite",
            w.join(", ")
        ));
    }
    report.decomposition = Some(out);
    Ok(())
}

fn markov_report(
    p: &SemigroupPresentation,
    basis: &MarkovBasis,
    strategy: &str,
) -> Result<MarkovReport, CliError> {
    let elements = basis
        .binomials
        .iter()
        .zip(&basis.sdegrees)
        .zip(&basis.block_ids)
        .map(|((b, d), id)| MarkovElement {
            text: b.display_with(|i| p.label(i)).to_string(),
            vector: decs(b.vector()),
            degree: decs(d),
            block: id.map(|k| Dec::from(k + 1)),
        })
        .collect();
    Ok(MarkovReport {
        strategy: strategy.to_string(),
        minimal: basis.minimal,
        elements,
        degree_counts: basis
            .degree_counts()
            .into_iter()
            .map(|(d, c)| DegreeCount {
                degree: decs(&d),
                count: c.into(),
            })
            .collect(),
        betti_degrees: betti_degrees(basis)?.iter().map(|d| decs(d)).collect(),
    })
}

/// Verdicts per irreducible summand of the kernel decomposition, combined:
/// the ideal has a unique minimal generating set, or is a complete
/// intersection, exactly when every summand's ideal is; the semigroup is a
/// gluing exactly when some summand splits as one.
fn check(
    p: &SemigroupPresentation,
    unique: bool,
    ci: bool,
    gluing: bool,
) -> Result<Verdicts, CliError> {
    is_pointed(p)?.into_grading()?;
    let dec = decompose_semigroup(p, Mode::Kernel)?;
    let blocks = dec
        .blocks
        .par_iter()
        .enumerate()
        .map(|(k, b)| -> semidec::Result<BlockVerdict> {
            let sub = p.restrict(&b.generators)?;
            let mut v = BlockVerdict {
                block: (k + 1).into(),
                generators: one_based(&b.generators),
                unique: None,
                complete_intersection: None,
                gluing: None,
            };
            if unique || ci {
                let m = markov_basis(&sub)?;
                if unique {
                    v.unique = Some(is_unique_markov(&m, &sub)?);
                }
                if ci {
                    v.complete_intersection = Some(is_complete_intersection(&m, &sub.kernel())?);
                }
            }
            if gluing {
                v.gluing = Some(detect_gluing(&sub)?.is_some());
            }
            Ok(v)
        })
        .collect::<semidec::Result<Vec<_>>>()?;

    let all = |f: fn(&BlockVerdict) -> Option<bool>| blocks.iter().all(|v| f(v) == Some(true));
    let gluing = if gluing {
        let cert = detect_gluing(p)?;
        Some(GluingReport {
            is_gluing: cert.is_some(),
            certificate: cert.map(|c| certificate(&c)),
        })
    } else {
        None
    };
    Ok(Verdicts {
        unique: unique.then(|| all(|v| v.unique)),
        complete_intersection: ci.then(|| all(|v| v.complete_intersection)),
        gluing,
        free_generators: one_based(&dec.free_generators),
        blocks,
        minimality_assumed: true,
    })
}

fn certificate(c: &GluingCertificate) -> CertificateReport {
    CertificateReport {
        block: (c.block + 1).into(),
        block_first: one_based(&c.block_first),
        block_second: one_based(&c.block_second),
        first: one_based(&c.first),
        second: one_based(&c.second),
        degree: decs(&c.degree),
        first_witness: decs(&c.first_witness),
        second_witness: decs(&c.second_witness),
    }
}

pub fn parse_degree(text: &str, dim: usize) -> Result<Vec<i64>, CliError> {
    let m = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| CliError::Usage(format!("degree entry `{t}` is not an integer")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if m.len() != dim {
        return Err(CliError::Usage(format!(
            "degree has {} entries, the presentation has {dim} rows",
            m.len()
        )));
    }
    Ok(m)
}

fn fiber(p: &SemigroupPresentation, m: &[i64], kind: ComplexKind) -> Result<FiberReport, CliError> {
    let fibers = Fibers::new(p)?;
    let elements = |v: &[Vec<i64>]| v.iter().map(|e| decs(e)).collect::<Vec<_>>();
    Ok(match kind {
        ComplexKind::Nabla => {
            let c = fibers.nabla(m)?;
            FiberReport {
                degree: decs(&c.degree),
                complex: "nabla".into(),
                elements: elements(&c.vertices),
                vertices: None,
                edges: Some(
                    c.edges
                        .iter()
                        .map(|&(a, b)| [(a + 1).into(), (b + 1).into()])
                        .collect(),
                ),
                facets: None,
                components: c.components.iter().map(|part| one_based(part)).collect(),
                connected: c.is_connected(),
            }
        }
        ComplexKind::Delta => {
            let vertices = fibers.fiber(m)?;
            let c = fibers.delta(m)?;
            FiberReport {
                degree: decs(&c.degree),
                complex: "delta".into(),
                elements: elements(&vertices),
                vertices: Some(one_based(&c.vertices)),
                edges: None,
                facets: Some(c.facets.iter().map(|f| one_based(f)).collect()),
                components: c.components.iter().map(|part| one_based(part)).collect(),
                connected: c.is_connected(),
            }
        }
    })
}

fn basis_set(m: &MarkovBasis) -> BTreeSet<Binomial> {
    m.binomials.iter().cloned().collect()
}

fn bench(
    p: SemigroupPresentation,
    repeat: u32,
    timeout: Duration,
) -> Result<BenchReport, CliError> {
    let mut best_decomposed = Duration::MAX;
    let mut decomposed = MarkovBasis::empty();
    for _ in 0..repeat {
        let start = Instant::now();
        decomposed = markov_basis_decomposed(&p)?.1;
        best_decomposed = best_decomposed.min(start.elapsed());
    }

    let p = Arc::new(p);
    let mut best_whole: Option<Duration> = None;
    let mut whole: Option<MarkovBasis> = None;
    let mut timed_out = false;
    for _ in 0..repeat {
        let (tx, rx) = mpsc::channel();
        let q = Arc::clone(&p);
        let handle = thread::spawn(move || {
            let start = Instant::now();
            let r = markov_basis(&q);
            let _ = tx.send((r, start.elapsed()));
        });
        match rx.recv_timeout(timeout) {
            Ok((r, elapsed)) => {
                whole = Some(r?);
                best_whole = Some(best_whole.map_or(elapsed, |b| b.min(elapsed)));
            }
            Err(mpsc::RecvTimeoutError::Timeout) => {
                timed_out = true;
                break;
            }
            Err(mpsc::RecvTimeoutError::Disconnected) => match handle.join() {
                Err(panic) => std::panic::resume_unwind(panic),
                Ok(()) => unreachable!("the worker sends before exiting"),
            },
        }
    }

    let (whole_outcome, speedup, faster) = match best_whole {
        Some(w) if !timed_out => {
            let ratio = w.as_nanos() as f64 / best_decomposed.as_nanos().max(1) as f64;
            (
                BenchOutcome::Completed { best_us: micros(w) },
                Some(format!("{ratio:.2}")),
                best_decomposed < w,
            )
        }
        _ => (
            BenchOutcome::TimedOut {
                timeout_us: micros(timeout),
            },
            None,
            true,
        ),
    };
    Ok(BenchReport {
        repeat: u64::from(repeat).into(),
        timeout_us: micros(timeout),
        decomposed: BenchOutcome::Completed {
            best_us: micros(best_decomposed),
        },
        whole: whole_outcome,
        speedup,
        decomposed_faster: faster,
        bases_agree: whole
            .filter(|_| !timed_out)
            .map(|w| basis_set(&w) == basis_set(&decomposed)),
    })
}

/// Worker count from `SEMIDEC_THREADS`, if set.
pub fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var("SEMIDEC_THREADS") else {
        return Ok(());
    };
    let n: usize = value.trim().parse().map_err(|_| {
        CliError::Usage(format!(
            "SEMIDEC_THREADS must be a nonnegative integer, got `{value}`"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(format!("cannot configure worker threads: {e}")))
}
