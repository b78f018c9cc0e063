use std::fmt::Write as _;
use std::fs;
use std::time::Instant;

use kneserlab_core::buildings::{self, BuildingSpec, KneserGraph};
use kneserlab_core::coclique::{
    check_ucep as run_check, embedded_golden, parse_golden, verify_nonexample, vertex_record,
    CheckMode, Fixture, FixtureReport, UcepReport, VertexRecord, REPORT_SCHEMA,
};
use kneserlab_core::crossval::{cross_validate as run_cross, cross_validation_grid, CrossValidation};
use kneserlab_core::{with_prime_field, PrimeField};
use serde::Serialize;

use crate::args::{BuildArgs, CheckArgs, CrossArgs, ExportArgs, FixtureArgs, Format, GraphChoice, Mode};
use crate::output::{dimacs, emit, json};
use crate::{CliError, Outcome};

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn unsupported_format(command: &str, format: Format) -> CliError {
    usage(format!("{command} does not support --format {format:?}").to_lowercase())
}

fn header(spec: &BuildingSpec) -> String {
    format!("kneserlab {} over F_{}", spec.label(), spec.p)
}

#[derive(Serialize)]
struct GraphFile {
    schema: u32,
    spec: BuildingSpec,
    label: String,
    vertex_count: usize,
    edge_count: usize,
    vertices: Vec<VertexRecord>,
    edges: Vec<(usize, usize)>,
    sigma: Vec<usize>,
}

fn graph_file<F: PrimeField>(g: &KneserGraph<F>) -> GraphFile {
    GraphFile {
        schema: REPORT_SCHEMA,
        spec: g.spec().clone(),
        label: g.spec().label(),
        vertex_count: g.vertex_count(),
        edge_count: g.graph().edge_count(),
        vertices: (0..g.vertex_count()).map(|i| vertex_record(g, i)).collect(),
        edges: g.graph().edges().collect(),
        sigma: g.sigma().to_vec(),
    }
}

fn build_text<F: PrimeField>(g: &KneserGraph<F>) -> String {
    let mut s = String::new();
    let graph = g.graph();
    writeln!(s, "{}", header(g.spec())).unwrap();
    writeln!(s, "vertices: {}", g.vertex_count()).unwrap();
    writeln!(s, "edges: {}", graph.edge_count()).unwrap();
    if let Some(d) = graph.regular_degree() {
        writeln!(s, "valency: {d}").unwrap();
    }
    let sigma = g.sigma_graph();
    writeln!(s, "apartment: {} vertices, {} edges", sigma.vertex_count(), sigma.edge_count()).unwrap();
    for i in 0..g.vertex_count() {
        let mark = if g.sigma().binary_search(&i).is_ok() { " *" } else { "" };
        writeln!(s, "{i} {}{mark}", vertex_record(g, i).notation).unwrap();
    }
    s
}

fn build_in<F: PrimeField>(spec: &BuildingSpec, format: Format) -> Result<String, CliError> {
    let g = buildings::build::<F>(spec)?;
    Ok(match format {
        Format::Json => json(&graph_file(&g)),
        Format::Dimacs => dimacs(
            g.graph(),
            &[
                header(spec),
                "vertices in canonical order (lexicographic on RREF bases)".into(),
                format!("apartment (1-based): {}", one_based(g.sigma())),
            ],
        ),
        Format::Text => build_text(&g),
    })
}

fn one_based(indices: &[usize]) -> String {
    indices.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(" ")
}

pub fn build(a: &BuildArgs) -> Result<Outcome, CliError> {
    let spec = a.spec.spec()?;
    let text = with_prime_field!(spec.p, F => build_in::<F>(&spec, a.format))??;
    emit(a.out.output.as_deref(), &text)?;
    Ok(Outcome::Ok)
}

fn ucep_text(r: &UcepReport) -> String {
    let mut s = String::new();
    let verdict = if r.holds() { "holds" } else { "fails" };
    writeln!(s, "{} over F_{}: {verdict}", r.label, r.spec.p).unwrap();
    writeln!(
        s,
        "vertices {}, apartment {}, cocliques checked {}, violating {}",
        r.vertices, r.sigma, r.cocliques_checked, r.violating_cocliques
    )
    .unwrap();
    if let Some(seed) = r.seed {
        writeln!(s, "seed {seed}").unwrap();
    }
    if let Some(w) = &r.witness {
        writeln!(s, "coclique C:").unwrap();
        for v in &w.coclique {
            writeln!(s, "  {}", v.notation).unwrap();
        }
        writeln!(s, "adjacent pair in D(C):").unwrap();
        writeln!(s, "  x = {}", w.x.notation).unwrap();
        writeln!(s, "  y = {}", w.y.notation).unwrap();
    }
    s
}

pub fn check_ucep(a: &CheckArgs) -> Result<Outcome, CliError> {
    let spec = match &a.case_from_fixture {
        Some(name) => {
            if !a.spec.is_empty() {
                return Err(usage("--case-from-fixture replaces --family, --rank and --type"));
            }
            let f: Fixture = name.parse()?;
            f.spec(a.spec.p.unwrap_or(f.default_p()))?
        }
        None => a.spec.spec()?,
    };
    let mode = match a.mode {
        Mode::All => CheckMode::All,
        Mode::Sample => CheckMode::Sample {
            count: a.samples,
            seed: a.seed,
        },
    };
    let start = Instant::now();
    let mut report = with_prime_field!(spec.p, F => buildings::build::<F>(&spec).and_then(|g| run_check(&g, mode)))??;
    if a.timing {
        report.elapsed_ms = start.elapsed().as_millis() as u64;
    }
    let text = match a.format {
        Format::Json => json(&report),
        Format::Text => ucep_text(&report),
        f => return Err(unsupported_format("check-ucep", f)),
    };
    emit(a.out.output.as_deref(), &text)?;
    Ok(if report.holds() { Outcome::Ok } else { Outcome::PropertyFails })
}

#[derive(Serialize)]
struct FixtureFile {
    schema: u32,
    certified: usize,
    fixtures: Vec<FixtureReport>,
}

fn fixture_text(file: &FixtureFile) -> String {
    let mut s = String::new();
    for r in &file.fixtures {
        writeln!(s, "{} ({} over F_{}): certified", r.case, r.label, r.spec.p).unwrap();
        for w in &r.witnesses {
            let literal: Vec<String> = w.literal.iter().map(|m| format!("⟨{}⟩", m.join(", "))).collect();
            writeln!(s, "  witness {}  =  {}", literal.join(" < "), w.notation).unwrap();
        }
        writeln!(s, "  C = {{{}}}", r.coclique.join(", ")).unwrap();
        writeln!(
            s,
            "  apartment vertices adjacent to a witness: {} ({} edges among them)",
            r.bad_sigma_vertices, r.bad_sigma_edges
        )
        .unwrap();
    }
    writeln!(s, "{} fixtures certified", file.certified).unwrap();
    s
}

pub fn verify_fixtures(a: &FixtureArgs) -> Result<Outcome, CliError> {
    let golden = match &a.golden {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| kneserlab_core::Error::FixtureIntegrity {
                case: "golden file".into(),
                assertion: format!("cannot read {}: {e}", path.display()),
            })?;
            parse_golden(&text)?
        }
        None => embedded_golden(),
    };
    let cases: Vec<Fixture> = if a.cases.is_empty() {
        Fixture::defaults().to_vec()
    } else {
        a.cases.iter().map(|c| c.parse()).collect::<Result<_, _>>()?
    };
    let fixtures = cases
        .iter()
        .map(|&f| verify_nonexample(f, a.p.unwrap_or(f.default_p()), &golden))
        .collect::<Result<Vec<_>, _>>()?;
    let file = FixtureFile {
        schema: REPORT_SCHEMA,
        certified: fixtures.iter().filter(|r| r.certified).count(),
        fixtures,
    };
    let text = match a.format {
        Format::Json => json(&file),
        Format::Text => fixture_text(&file),
        f => return Err(unsupported_format("verify-fixtures", f)),
    };
    emit(a.out.output.as_deref(), &text)?;
    Ok(Outcome::Ok)
}

#[derive(Serialize)]
struct CrossFile {
    schema: u32,
    cells: usize,
    mismatches: usize,
    results: Vec<CrossValidation>,
}

fn cross_text(file: &CrossFile) -> String {
    let mut s = String::new();
    for r in &file.results {
        let status = match &r.mismatch {
            None => "match".to_string(),
            Some(m) => format!("MISMATCH {m:?}"),
        };
        writeln!(s, "{} over F_{}: {} cosets, {} edges, {status}", r.label, r.spec.p, r.cosets, r.edges).unwrap();
    }
    writeln!(s, "{} cells, {} mismatches", file.cells, file.mismatches).unwrap();
    s
}

pub fn cross_validate(a: &CrossArgs) -> Result<Outcome, CliError> {
    let specs = match (a.grid, a.spec.is_empty()) {
        (true, true) => cross_validation_grid(),
        (true, false) => return Err(usage("--grid cannot be combined with a single spec")),
        (false, _) => vec![a.spec.spec()?],
    };
    let mut results = Vec::with_capacity(specs.len());
    for spec in &specs {
        if spec.rank > 4 {
            return Err(usage(format!("{}: cross-validation supports rank at most 4", spec.label())));
        }
        results.push(with_prime_field!(spec.p, F => run_cross::<F>(spec))??);
    }
    let mismatches = results.iter().filter(|r| !r.matches()).count();
    let file = CrossFile {
        schema: REPORT_SCHEMA,
        cells: results.len(),
        mismatches,
        results,
    };
    let text = match a.format {
        Format::Json => json(&file),
        Format::Text => cross_text(&file),
        f => return Err(unsupported_format("cross-validate", f)),
    };
    emit(a.out.output.as_deref(), &text)?;
    Ok(if mismatches == 0 { Outcome::Ok } else { Outcome::Mismatch })
}

#[derive(Serialize)]
struct ExportFile {
    schema: u32,
    spec: BuildingSpec,
    label: String,
    graph: &'static str,
    vertices: Vec<VertexRecord>,
    edges: Vec<(usize, usize)>,
}

fn export_in<F: PrimeField>(spec: &BuildingSpec, choice: GraphChoice, format: Format) -> Result<String, CliError> {
    let g = buildings::build::<F>(spec)?;
    let (name, graph, members): (&'static str, _, Vec<usize>) = match choice {
        GraphChoice::Gamma => ("gamma", g.graph().clone(), (0..g.vertex_count()).collect()),
        GraphChoice::Sigma => ("sigma", g.sigma_graph(), g.sigma().to_vec()),
        GraphChoice::Complement => ("complement", g.graph().complement(), (0..g.vertex_count()).collect()),
    };
    Ok(match format {
        Format::Dimacs => {
            let mut comments = vec![header(spec), format!("graph: {name}")];
            if choice == GraphChoice::Sigma {
                comments.push(format!("vertex k is Kneser vertex (1-based): {}", one_based(&members)));
            }
            dimacs(&graph, &comments)
        }
        Format::Json => json(&ExportFile {
            schema: REPORT_SCHEMA,
            spec: spec.clone(),
            label: spec.label(),
            graph: name,
            vertices: members.iter().map(|&i| vertex_record(&g, i)).collect(),
            edges: graph.edges().collect(),
        }),
        f => return Err(unsupported_format("export", f)),
    })
}

pub fn export(a: &ExportArgs) -> Result<Outcome, CliError> {
    let spec = a.spec.spec()?;
    let text = with_prime_field!(spec.p, F => export_in::<F>(&spec, a.graph, a.format))??;
    emit(a.out.output.as_deref(), &text)?;
    Ok(Outcome::Ok)
}
