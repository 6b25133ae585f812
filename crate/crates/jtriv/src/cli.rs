//! The `jtriv` command-line surface: family descriptors, computation
//! selectors, text/JSON/DOT output, and the survey runners.
//!
//! Family descriptors: `hecke:A:4` (0-Hecke of S_4; for types B, D, I
//! the number is the rank), `ndpf:5`, `ubool:4`, `incidence:<poset.json>`,
//! `or:<poset.json>`, `quivermonoid:<digraph.json>`, `straubing`.
//!
//! Exit codes: 0 success, 2 size guard, 3 invalid input, 4 property-check
//! failure.

use std::fmt::Write as _;

use serde::Serialize;

use crate::algebra::{
    cartan_matrix, orthogonal_idempotents, projective_module, quiver, radical_filtration,
};
use crate::error::{Error, Result};
use crate::families::{
    hecke_monoid, incidence_monoid, ndpf, quiver_monoid, straubing_example,
    unitriangular_boolean, CoxeterGroup, CoxeterType, Digraph,
};
use crate::monoid::{MonoidTable, DEFAULT_ELEMENT_CAP, DEFAULT_SELF_CHECK_SEED};
use crate::regressive::{
    conjecture_check, enumerate_posets, or_monoid, Poset, PosetFilter,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
    Dot,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            "dot" => Ok(OutputFormat::Dot),
            other => Err(Error::InvalidInput(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub enum Computation {
    Info,
    Idempotents,
    Cartan,
    Quiver,
    RadicalSeries,
    Projectives,
    Lift,
    DumpJson,
    Survey { n: usize },
    Conjecture {
        max_size: usize,
        report: Option<String>,
    },
}

/// A fully parsed job: what to compute, on what, with which guards.
#[derive(Debug, Clone)]
pub struct JobConfig {
    pub computation: Computation,
    pub family: Option<String>,
    pub format: OutputFormat,
    pub cap_elements: usize,
    pub filtration_cap: usize,
    pub sieve_cap: u64,
    pub threads: usize,
    pub seed: u64,
}

impl Default for JobConfig {
    fn default() -> Self {
        JobConfig {
            computation: Computation::Info,
            family: None,
            format: OutputFormat::Text,
            cap_elements: DEFAULT_ELEMENT_CAP,
            filtration_cap: 1000,
            sieve_cap: 10_000_000,
            threads: 0,
            seed: DEFAULT_SELF_CHECK_SEED,
        }
    }
}

/// Artifacts of a run: the output text plus any warnings (for stderr).
#[derive(Debug)]
pub struct RunOutput {
    pub artifact: String,
    pub warnings: Vec<String>,
}

pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::ClosureTooLarge { .. }
        | Error::SizeGuard { .. }
        | Error::FiltrationTooLarge { .. } => 2,
        Error::InvalidInput(_)
        | Error::InvalidPoset { .. }
        | Error::BadElement { .. }
        | Error::UnsupportedCoxeterType(_)
        | Error::BadCoxeterRank { .. }
        | Error::NotIdempotent { .. }
        | Error::NotMeetSemilattice { .. }
        | Error::NotJoinClosed { .. }
        | Error::NotAbove { .. } => 3,
        Error::NotJTrivial { .. }
        | Error::NotAperiodic { .. }
        | Error::InvalidComposition { .. }
        | Error::LiftDivergence { .. }
        | Error::NotALattice { .. }
        | Error::Internal(_) => 4,
    }
}

/// Error rendered as machine-readable JSON (for nonzero exits).
pub fn error_json(err: &Error) -> String {
    #[derive(Serialize)]
    struct ErrJson {
        error: String,
        exit_code: i32,
    }
    serde_json::to_string(&ErrJson {
        error: err.to_string(),
        exit_code: exit_code_for(err),
    })
    .expect("error serialization cannot fail")
}

/// Build a monoid from a family descriptor.
pub fn build_family(descriptor: &str, cap: usize) -> Result<MonoidTable> {
    let parts: Vec<&str> = descriptor.split(':').collect();
    match parts.as_slice() {
        ["straubing"] => straubing_example(),
        ["hecke", t, k] => {
            let ctype: CoxeterType = t.parse()?;
            let k: usize = k
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad rank {k:?}")))?;
            // hecke:A:n is the 0-Hecke monoid of S_n (rank n-1); for B, D,
            // and I the number is the rank itself
            let rank = match ctype {
                CoxeterType::A => k
                    .checked_sub(1)
                    .filter(|&r| r >= 1)
                    .ok_or(Error::BadCoxeterRank {
                        ctype: "A".into(),
                        rank: k,
                    })?,
                _ => k,
            };
            let h = hecke_monoid(CoxeterGroup::new(ctype, rank)?)?;
            Ok(h.table)
        }
        ["ndpf", n] => {
            let n: usize = n
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad size {n:?}")))?;
            Ok(ndpf(n)?.0)
        }
        ["ubool", n] => {
            let n: usize = n
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad size {n:?}")))?;
            Ok(unitriangular_boolean(n, cap)?.0)
        }
        ["incidence", path] => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidInput(format!("cannot read {path}: {e}")))?;
            let p = Poset::from_json(&text)?;
            Ok(incidence_monoid(&p)?.0)
        }
        ["or", path] => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidInput(format!("cannot read {path}: {e}")))?;
            let p = Poset::from_json(&text)?;
            Ok(or_monoid(&p, cap)?.0)
        }
        ["quivermonoid", path] => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidInput(format!("cannot read {path}: {e}")))?;
            let g = Digraph::from_json(&text)?;
            quiver_monoid(&g)
        }
        _ => Err(Error::InvalidInput(format!(
            "unknown family descriptor {descriptor:?}"
        ))),
    }
}

/// Sampled triple-product self-check on the finished table: verifies
/// that word-recursion products are associative. Deterministic in the
/// seed.
fn self_check_products(t: &MonoidTable, seed: u64) -> Result<()> {
    let n = t.len() as u64;
    let mut state = seed | 1;
    let mut next = || {
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        (state.wrapping_mul(0x2545_F491_4F6C_DD1D) >> 16) % n
    };
    for _ in 0..500 {
        let (a, b, c) = (
            crate::monoid::ElementId(next() as u32),
            crate::monoid::ElementId(next() as u32),
            crate::monoid::ElementId(next() as u32),
        );
        if t.product(t.product(a, b), c) != t.product(a, t.product(b, c)) {
            return Err(Error::Internal(format!(
                "table products violate associativity at ({a}, {b}, {c})"
            )));
        }
    }
    Ok(())
}

fn family_table(config: &JobConfig) -> Result<MonoidTable> {
    let descriptor = config
        .family
        .as_deref()
        .ok_or_else(|| Error::InvalidInput("missing family descriptor".into()))?;
    let t = build_family(descriptor, config.cap_elements)?;
    self_check_products(&t, config.seed)?;
    Ok(t)
}

fn estimate_sieve_products(t: &MonoidTable) -> Result<u64> {
    let lfix = t.lfix_all()?;
    let rfix = t.rfix_all()?;
    let mut l_count = std::collections::HashMap::new();
    let mut r_count = std::collections::HashMap::new();
    for x in 0..t.len() {
        *l_count.entry(lfix[x]).or_insert(0u64) += 1;
        *r_count.entry(rfix[x]).or_insert(0u64) += 1;
    }
    Ok(r_count
        .iter()
        .map(|(e, rc)| rc * l_count.get(e).copied().unwrap_or(0))
        .sum())
}

pub fn run(config: &JobConfig) -> Result<RunOutput> {
    match &config.computation {
        Computation::Info => {
            let t = family_table(config)?;
            let warnings = t
                .dropped_generators()
                .iter()
                .map(|d| format!("dropped generator {d}"))
                .collect();
            let artifact = match config.format {
                OutputFormat::Json => {
                    #[derive(Serialize)]
                    struct Info {
                        n: usize,
                        idempotents: usize,
                        j_trivial: bool,
                        self_check_seed: u64,
                    }
                    serde_json::to_string(&Info {
                        n: t.len(),
                        idempotents: t.idempotents().len(),
                        j_trivial: t.is_j_trivial(),
                        self_check_seed: config.seed,
                    })
                    .unwrap()
                }
                _ => format!(
                    "n={} idempotents={} j_trivial={}",
                    t.len(),
                    t.idempotents().len(),
                    t.is_j_trivial()
                ),
            };
            Ok(RunOutput { artifact, warnings })
        }
        Computation::Idempotents => {
            let t = family_table(config)?;
            let reprs: Vec<&str> = t.idempotents().iter().map(|&e| t.repr(e)).collect();
            let artifact = match config.format {
                OutputFormat::Json => serde_json::to_string(&reprs).unwrap(),
                _ => reprs.join("\n"),
            };
            Ok(RunOutput {
                artifact,
                warnings: Vec::new(),
            })
        }
        Computation::Cartan => {
            let t = family_table(config)?;
            let c = cartan_matrix(&t)?;
            let artifact = match config.format {
                OutputFormat::Json => c.to_json(&t),
                OutputFormat::Dot => c.to_dot(&t),
                OutputFormat::Text => {
                    let mut s = String::new();
                    for row in c.rows() {
                        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                        writeln!(s, "{}", cells.join(" ")).unwrap();
                    }
                    s
                }
            };
            Ok(RunOutput {
                artifact,
                warnings: Vec::new(),
            })
        }
        Computation::Quiver => {
            let t = family_table(config)?;
            let products = estimate_sieve_products(&t)?;
            if products > config.sieve_cap {
                return Err(Error::SizeGuard {
                    what: "quiver sieve products",
                    value: products as usize,
                    cap: config.sieve_cap as usize,
                });
            }
            let q = quiver(&t)?;
            let artifact = match config.format {
                OutputFormat::Json => q.to_json(&t),
                OutputFormat::Dot => q.to_dot(&t),
                OutputFormat::Text => {
                    let mut s = String::new();
                    writeln!(s, "vertices: {}", q.vertices.len()).unwrap();
                    for e in &q.edges {
                        writeln!(
                            s,
                            "{} -> {} [{}]",
                            t.repr(e.src),
                            t.repr(e.dst),
                            t.repr(e.label)
                        )
                        .unwrap();
                    }
                    s
                }
            };
            Ok(RunOutput {
                artifact,
                warnings: Vec::new(),
            })
        }
        Computation::RadicalSeries => {
            let t = family_table(config)?;
            let series = radical_filtration(&t, Some(config.filtration_cap))?;
            let artifact = match config.format {
                OutputFormat::Json => {
                    #[derive(Serialize)]
                    struct SeriesJson {
                        series: String,
                        radical_dims: Vec<usize>,
                        coefficients: Vec<usize>,
                    }
                    serde_json::to_string(&SeriesJson {
                        series: series.to_string(),
                        radical_dims: series.dims.clone(),
                        coefficients: series.coefficients(),
                    })
                    .unwrap()
                }
                _ => series.to_string(),
            };
            Ok(RunOutput {
                artifact,
                warnings: Vec::new(),
            })
        }
        Computation::Projectives => {
            let t = family_table(config)?;
            let mut rows = Vec::new();
            for &e in t.idempotents() {
                let p = projective_module(&t, e)?;
                rows.push((t.repr(e).to_string(), p.dim()));
            }
            let artifact = match config.format {
                OutputFormat::Json => {
                    #[derive(Serialize)]
                    struct Proj {
                        idempotent: String,
                        dim: usize,
                    }
                    let payload: Vec<Proj> = rows
                        .into_iter()
                        .map(|(idempotent, dim)| Proj { idempotent, dim })
                        .collect();
                    serde_json::to_string(&payload).unwrap()
                }
                _ => rows
                    .into_iter()
                    .map(|(e, d)| format!("P[{e}] dim={d}"))
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            Ok(RunOutput {
                artifact,
                warnings: Vec::new(),
            })
        }
        Computation::Lift => {
            let t = family_table(config)?;
            let f = orthogonal_idempotents(&t)?;
            let artifact = match config.format {
                OutputFormat::Json => {
                    #[derive(Serialize)]
                    struct Term {
                        element: String,
                        coeff: String,
                    }
                    #[derive(Serialize)]
                    struct Lifted {
                        idempotent: String,
                        terms: Vec<Term>,
                    }
                    let payload: Vec<Lifted> = f
                        .iter()
                        .map(|(e, fe)| Lifted {
                            idempotent: t.repr(e).to_string(),
                            terms: fe
                                .terms()
                                .map(|(x, c)| Term {
                                    element: t.repr(x).to_string(),
                                    coeff: c.to_string(),
                                })
                                .collect(),
                        })
                        .collect();
                    serde_json::to_string(&payload).unwrap()
                }
                _ => f
                    .iter()
                    .map(|(e, fe)| format!("f[{}] = {}", t.repr(e), fe.display(&t)))
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            Ok(RunOutput {
                artifact,
                warnings: Vec::new(),
            })
        }
        Computation::DumpJson => {
            let t = family_table(config)?;
            Ok(RunOutput {
                artifact: t.to_json(),
                warnings: Vec::new(),
            })
        }
        Computation::Survey { n } => run_survey(config, *n),
        Computation::Conjecture { max_size, report } => {
            run_conjecture(config, *max_size, report.as_deref())
        }
    }
}

#[derive(Serialize)]
struct SurveyInstance {
    index: usize,
    or_size: usize,
    cartan_acyclic: bool,
}

/// For every poset on n vertices up to isomorphism, check that the
/// Cartan matrix of OR(P) minus the identity is an acyclic digraph.
/// Instances run in parallel; the output order is deterministic.
fn run_survey(config: &JobConfig, n: usize) -> Result<RunOutput> {
    let posets = enumerate_posets(n, PosetFilter::All)?;
    let cap = config.cap_elements;
    let check = |p: &Poset| -> Result<(usize, bool)> {
        let (t, _) = or_monoid(p, cap)?;
        let c = cartan_matrix(&t)?;
        // digraph of the off-diagonal support (the diagonal is all ones)
        let k = c.size();
        let mut indeg = vec![0usize; k];
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); k];
        for (i, j) in c.support_digraph() {
            out[i].push(j);
            indeg[j] += 1;
        }
        let mut stack: Vec<usize> = (0..k).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for &w in &out[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    stack.push(w);
                }
            }
        }
        Ok((t.len(), seen == k))
    };

    let results: Vec<Result<(usize, bool)>> = in_pool(config.threads, || {
        use rayon::prelude::*;
        posets.par_iter().map(check).collect()
    })?;

    let mut instances = Vec::new();
    for (index, r) in results.into_iter().enumerate() {
        let (or_size, cartan_acyclic) = r?;
        instances.push(SurveyInstance {
            index,
            or_size,
            cartan_acyclic,
        });
    }
    let passed = instances.iter().filter(|i| i.cartan_acyclic).count();
    let artifact = match config.format {
        OutputFormat::Json => {
            #[derive(Serialize)]
            struct Survey {
                n: usize,
                posets: usize,
                passed: usize,
                instances: Vec<SurveyInstance>,
            }
            serde_json::to_string(&Survey {
                n,
                posets: instances.len(),
                passed,
                instances,
            })
            .unwrap()
        }
        _ => format!(
            "posets={} check=cartan-acyclic passed={} failed={}",
            instances.len(),
            passed,
            instances.len() - passed
        ),
    };
    Ok(RunOutput {
        artifact,
        warnings: Vec::new(),
    })
}

#[derive(Serialize)]
struct ConjectureInstance {
    size: usize,
    index: usize,
    or_size: usize,
    idempotents: usize,
    diagrams: usize,
    max_power: Option<usize>,
    passes: bool,
    millis: u128,
}

/// Check the demipotent family on every meet semi-lattice with at most
/// `max_size` elements. When `report` is given, the full per-instance
/// JSON is written there and the artifact is the summary.
fn run_conjecture(config: &JobConfig, max_size: usize, report: Option<&str>) -> Result<RunOutput> {
    let cap = config.cap_elements;
    let mut lattices = Vec::new();
    for n in 1..=max_size {
        for (index, p) in enumerate_posets(n, PosetFilter::MeetSemilattice)?
            .into_iter()
            .enumerate()
        {
            lattices.push((n, index, p));
        }
    }
    let results: Vec<Result<ConjectureInstance>> = in_pool(config.threads, || {
        use rayon::prelude::*;
        lattices
            .par_iter()
            .map(|(n, index, p)| {
                let start = std::time::Instant::now();
                let report = conjecture_check(p, cap)?;
                Ok(ConjectureInstance {
                    size: *n,
                    index: *index,
                    or_size: report.or_size,
                    idempotents: report.idempotent_count,
                    diagrams: report.diagram_count,
                    max_power: report.max_power,
                    passes: report.passes(),
                    millis: start.elapsed().as_millis(),
                })
            })
            .collect()
    })?;
    let instances = results.into_iter().collect::<Result<Vec<_>>>()?;
    let passed = instances.iter().filter(|i| i.passes).count();
    let max_power = instances
        .iter()
        .map(|i| i.max_power)
        .collect::<Option<Vec<_>>>()
        .map(|v| v.into_iter().max().unwrap_or(1));
    #[derive(Serialize)]
    struct ConjectureRun {
        max_size: usize,
        semilattices: usize,
        passed: usize,
        max_power: Option<usize>,
        instances: Vec<ConjectureInstance>,
    }
    let full = ConjectureRun {
        max_size,
        semilattices: instances.len(),
        passed,
        max_power,
        instances,
    };
    let json = serde_json::to_string(&full).unwrap();
    if let Some(path) = report {
        std::fs::write(path, &json)
            .map_err(|e| Error::InvalidInput(format!("cannot write report {path}: {e}")))?;
    }
    let artifact = match config.format {
        OutputFormat::Json => json,
        _ => format!(
            "semilattices={} passed={} max_power={}",
            full.semilattices,
            full.passed,
            full.max_power.map_or("divergent".to_string(), |p| p.to_string())
        ),
    };
    Ok(RunOutput {
        artifact,
        warnings: Vec::new(),
    })
}

fn in_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    if threads == 0 {
        Ok(f())
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::InvalidInput(format!("cannot build thread pool: {e}")))?;
        Ok(pool.install(f))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_family(computation: Computation, family: &str) -> Result<String> {
        run(&JobConfig {
            computation,
            family: Some(family.to_string()),
            ..JobConfig::default()
        })
        .map(|o| o.artifact)
    }

    #[test]
    fn info_hecke_a4() {
        let out = run_family(Computation::Info, "hecke:A:4").unwrap();
        assert_eq!(out, "n=24 idempotents=8 j_trivial=true");
    }

    #[test]
    fn info_straubing() {
        let out = run_family(Computation::Info, "straubing").unwrap();
        assert!(out.starts_with("n=5"));
    }

    #[test]
    fn radical_series_of_i5() {
        let out = run_family(Computation::RadicalSeries, "hecke:I:5").unwrap();
        assert_eq!(out, "2q^3 + 2q^2 + 2q + 4");
    }

    #[test]
    fn unknown_descriptor_is_invalid_input() {
        let err = run_family(Computation::Info, "nope:3").unwrap_err();
        assert_eq!(exit_code_for(&err), 3);
    }

    #[test]
    fn guards_exit_with_code_two() {
        let err = run(&JobConfig {
            computation: Computation::Info,
            family: Some("ubool:5".into()),
            cap_elements: 100,
            ..JobConfig::default()
        })
        .unwrap_err();
        assert_eq!(exit_code_for(&err), 2);
    }

    #[test]
    fn dump_round_trips_through_json() {
        let out = run_family(Computation::DumpJson, "ndpf:4").unwrap();
        let t = MonoidTable::from_json(&out).unwrap();
        assert_eq!(t.to_json(), out);
    }
}
