//! The `hstar` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::atlas::{
    audit_theorem, mine_implications, AuditReport, Bounds, EdgeStatus, ImplicationLattice,
    SubsetWitness, TheoremId, SCHEMA_VERSION,
};
use crate::error::TopologyError;
use crate::ladder::{FamilyId, Ladder};
use crate::maps::{MapPropertyId, SpaceMap};
use crate::separation::{hstar_normal_characterization, is_normal_variant, HStarForm, NormalityVariant};
use crate::subset::Subset;

use super::document::{parse_space, DocumentError, LabeledSpace, SpaceDocument};
use super::repro::{repro, DiscrepancyRecord};

const EXIT_OK: i32 = 0;
const EXIT_COUNTEREXAMPLE: i32 = 1;
const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "hstar", version, about = "Generalized closed sets on finite topological spaces")]
struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Class membership of one subset, or of every subset.
    Classify {
        space: PathBuf,
        /// Comma-separated point labels; an empty value means the empty set.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        subset: Option<Vec<String>>,
    },
    /// Normality variants and agreement of the H*-normality forms.
    Normality { space: PathBuf },
    /// Properties of a map given by the image label of each domain point.
    Map {
        domain: PathBuf,
        codomain: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        table: Vec<String>,
        /// Comma-separated property names; all properties when omitted.
        #[arg(long, value_delimiter = ',')]
        props: Vec<String>,
    },
    /// Check a theorem over every small space or map.
    Audit {
        theorem: String,
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        /// Largest ground size; defaults per theorem shape.
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        witness_limit: Option<usize>,
    },
    /// Empirical implication lattice between the closed-type classes.
    Mine {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
    },
    /// Re-derive the worked examples and report agreement.
    Repro,
}

#[derive(Debug, thiserror::Error)]
enum InputError {
    #[error("{path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Document {
        path: String,
        source: DocumentError,
    },
    #[error(transparent)]
    Label(#[from] DocumentError),
    #[error(transparent)]
    Topology(#[from] TopologyError),
    #[error(transparent)]
    Map(#[from] crate::error::MapError),
    #[error("{0}")]
    Usage(String),
}

/// Runs one invocation and returns its exit status: 0 on success, 1 when an
/// audit finds a counterexample, 2 on bad input.
pub fn run_command<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_INPUT
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let result = dispatch(&cli, out);
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn load(path: &Path) -> Result<LabeledSpace, InputError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| InputError::Read {
        path: shown.clone(),
        source,
    })?;
    parse_space(&text).map_err(|source| InputError::Document {
        path: shown,
        source,
    })
}

fn ladder_for(space: &LabeledSpace) -> Result<Ladder, InputError> {
    Ok(Ladder::new(space.space.clone())?)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn emit_json(out: &mut dyn Write, value: &impl Serialize) {
    let text = serde_json::to_string_pretty(value).expect("reports always serialize");
    let _ = writeln!(out, "{text}");
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, InputError> {
    match &cli.command {
        Command::Classify { space, subset } => classify(cli.json, space, subset.as_deref(), out),
        Command::Normality { space } => normality(cli.json, space, out),
        Command::Map {
            domain,
            codomain,
            table,
            props,
        } => map(cli.json, domain, codomain, table, props, out),
        Command::Audit {
            theorem,
            min_n,
            max_n,
            seed,
            samples,
            witness_limit,
        } => {
            let t: TheoremId = theorem
                .parse()
                .map_err(|_| InputError::Usage(format!("unknown theorem {theorem:?}")))?;
            let mut bounds = t.default_bounds();
            bounds.min_n = *min_n;
            if let Some(m) = max_n {
                bounds.max_n = *m;
            }
            bounds.seed = *seed;
            if let Some(s) = samples {
                bounds.samples = *s;
            }
            if let Some(w) = witness_limit {
                bounds.witness_limit = *w;
            }
            audit(cli.json, t, &bounds, out)
        }
        Command::Mine { max_n } => {
            let lattice = mine_implications(*max_n)?;
            write_lattice(cli.json, &lattice, out);
            Ok(EXIT_OK)
        }
        Command::Repro => {
            write_repro(cli.json, &repro(), out);
            Ok(EXIT_OK)
        }
    }
}

fn classify(
    as_json: bool,
    path: &Path,
    subset: Option<&[String]>,
    out: &mut dyn Write,
) -> Result<i32, InputError> {
    let space = load(path)?;
    let ladder = ladder_for(&space)?;
    let subsets: Vec<Subset> = match subset {
        Some(labels) => {
            let labels: Vec<&String> = labels.iter().filter(|l| !l.is_empty()).collect();
            vec![space.subset_from_labels(&labels)?]
        }
        None => ladder.subsets().collect(),
    };
    if as_json {
        let rows: Vec<_> = subsets
            .iter()
            .map(|&a| json!({ "subset": space.labels_of(a), "classes": ladder.classify(a) }))
            .collect();
        emit_json(
            out,
            &json!({ "schema_version": SCHEMA_VERSION, "points": space.labels, "subsets": rows }),
        );
    } else {
        let width = FamilyId::ALL.iter().map(|f| f.name().len()).max().unwrap_or(0);
        for (i, &a) in subsets.iter().enumerate() {
            if i > 0 {
                let _ = writeln!(out);
            }
            let _ = writeln!(out, "subset {}", space.show(a));
            for (f, v) in ladder.classify(a).iter() {
                let _ = writeln!(out, "  {:<width$}  {}", f.name(), yes_no(v));
            }
        }
    }
    Ok(EXIT_OK)
}

fn normality(as_json: bool, path: &Path, out: &mut dyn Write) -> Result<i32, InputError> {
    let space = load(path)?;
    let ladder = ladder_for(&space)?;
    let variants: Vec<(NormalityVariant, bool)> = NormalityVariant::ALL
        .iter()
        .map(|&v| (v, is_normal_variant(&ladder, v)))
        .collect();
    let forms: Vec<bool> = HStarForm::ALL
        .iter()
        .map(|&f| hstar_normal_characterization(&ladder, f))
        .collect();
    let agree = forms.iter().all(|&f| f == forms[0]);
    if as_json {
        let mut v = serde_json::Map::new();
        v.insert("schema_version".into(), json!(SCHEMA_VERSION));
        for (variant, holds) in &variants {
            v.insert(variant.name().into(), json!(holds));
        }
        v.insert("hstar_forms".into(), json!(forms));
        v.insert("forms_agree".into(), json!(agree));
        emit_json(out, &v);
    } else {
        for (variant, holds) in &variants {
            let _ = writeln!(out, "{:<10} {}", variant.name(), yes_no(*holds));
        }
        let shown: Vec<&str> = forms.iter().map(|&f| yes_no(f)).collect();
        let _ = writeln!(
            out,
            "H*-normal forms 1,2,3: {} ({})",
            shown.join(" "),
            if agree { "agree" } else { "disagree" }
        );
    }
    Ok(EXIT_OK)
}

fn map(
    as_json: bool,
    domain: &Path,
    codomain: &Path,
    table: &[String],
    props: &[String],
    out: &mut dyn Write,
) -> Result<i32, InputError> {
    let x = load(domain)?;
    let y = load(codomain)?;
    let images = table
        .iter()
        .map(|l| y.index_of(l))
        .collect::<Result<Vec<_>, _>>()?;
    let m = SpaceMap::new(ladder_for(&x)?.into(), ladder_for(&y)?.into(), images)?;
    let props: Vec<MapPropertyId> = if props.is_empty() {
        MapPropertyId::ALL.to_vec()
    } else {
        props
            .iter()
            .map(|p| {
                p.parse()
                    .map_err(|_| InputError::Usage(format!("unknown map property {p:?}")))
            })
            .collect::<Result<_, _>>()?
    };
    let verdicts: Vec<(MapPropertyId, bool)> = props.iter().map(|&p| (p, m.check(p))).collect();
    if as_json {
        let mut properties = serde_json::Map::new();
        for (p, v) in &verdicts {
            properties.insert(p.name().into(), json!(v));
        }
        emit_json(
            out,
            &json!({
                "schema_version": SCHEMA_VERSION,
                "table": x.labels.iter().zip(table).map(|(a, b)| [a, b]).collect::<Vec<_>>(),
                "properties": properties,
            }),
        );
    } else {
        let width = verdicts.iter().map(|(p, _)| p.name().len()).max().unwrap_or(0);
        for (p, v) in &verdicts {
            let _ = writeln!(out, "{:<width$}  {}", p.name(), yes_no(*v));
        }
    }
    Ok(EXIT_OK)
}

/// `τ={∅,{p},...}` for a document, with its own labels.
fn show_document(doc: &SpaceDocument) -> String {
    let opens: Vec<String> = doc
        .opens
        .iter()
        .map(|o| {
            if o.is_empty() {
                "∅".to_string()
            } else {
                format!("{{{}}}", o.join(","))
            }
        })
        .collect();
    format!("X={{{}}} τ={{{}}}", doc.points.join(","), opens.join(","))
}

fn audit(as_json: bool, t: TheoremId, bounds: &Bounds, out: &mut dyn Write) -> Result<i32, InputError> {
    let report = audit_theorem(t, bounds)?;
    if as_json {
        emit_json(out, &report);
    } else {
        write_audit(&report, out);
    }
    Ok(audit_exit(&report))
}

fn audit_exit(report: &AuditReport) -> i32 {
    if report.passed() {
        EXIT_OK
    } else {
        EXIT_COUNTEREXAMPLE
    }
}

fn write_audit(r: &AuditReport, out: &mut dyn Write) {
    let u = &r.universe;
    let _ = writeln!(out, "theorem          {}", r.theorem);
    let _ = writeln!(out, "statement        {}", r.statement);
    let _ = writeln!(
        out,
        "universe         {:?} sizes {}..={}, exhaustive up to {} ({} instances), sampled {} (seed {})",
        u.shape,
        r.bounds.min_n,
        r.bounds.max_n,
        u.exhaustive_max_n,
        u.exhaustive_instances,
        u.sampled_instances,
        r.bounds.seed
    );
    let _ = writeln!(out, "checked          {}", r.instances_checked);
    let _ = writeln!(out, "skipped          {}", r.skipped_precondition);
    let _ = writeln!(out, "counterexamples  {}", r.counterexample_count);
    for w in &r.counterexamples {
        let _ = writeln!(out, "witness #{}: {}", w.instance, w.note);
        for (i, doc) in w.spaces.iter().enumerate() {
            let _ = writeln!(out, "  space {i}: {}", show_document(doc));
        }
        for (i, table) in w.maps.iter().enumerate() {
            let shown: Vec<String> = table.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "  map {i}: [{}]", shown.join(","));
        }
        if let (Some(side), Some(labels)) = (w.subset_space, &w.subset) {
            let _ = writeln!(out, "  subset of space {side}: {{{}}}", labels.join(","));
        }
    }
}

fn show_witness(w: &SubsetWitness) -> String {
    let doc = SpaceDocument::from_space(&w.space);
    format!(
        "{{{}}} in space #{} {}",
        doc.labels_of(w.subset).join(","),
        w.index,
        show_document(&doc)
    )
}

fn write_lattice(as_json: bool, lattice: &ImplicationLattice, out: &mut dyn Write) {
    if as_json {
        emit_json(
            out,
            &json!({
                "schema_version": SCHEMA_VERSION,
                "n_max": lattice.n_max,
                "nodes": lattice.nodes,
                "edges": lattice.edges,
            }),
        );
        return;
    }
    let _ = writeln!(out, "universe: every subset of every topology with n ≤ {}", lattice.n_max);
    for e in &lattice.edges {
        match (e.status, &e.witness) {
            (EdgeStatus::HoldsOnUniverse, _) => {
                let _ = writeln!(out, "{} => {}  holds", e.source, e.target);
            }
            (EdgeStatus::FailsWithWitness, Some(w)) => {
                let _ = writeln!(out, "{} => {}  fails  {}", e.source, e.target, show_witness(w));
            }
            (EdgeStatus::FailsWithWitness, None) => unreachable!("failing edges carry witnesses"),
        }
    }
}

fn write_repro(as_json: bool, records: &[DiscrepancyRecord], out: &mut dyn Write) {
    if as_json {
        emit_json(
            out,
            &json!({ "schema_version": SCHEMA_VERSION, "records": records }),
        );
        return;
    }
    for (i, r) in records.iter().enumerate() {
        if i > 0 {
            let _ = writeln!(out);
        }
        let verdict = serde_json::to_value(r.engine_verdict).expect("verdict serializes");
        let _ = writeln!(out, "{}: {}", r.source, verdict.as_str().unwrap_or_default());
        let _ = writeln!(out, "  claim: {}", r.claim);
        let _ = writeln!(out, "  space: {}", show_document(&r.evidence.space));
        for o in &r.evidence.observations {
            let target = match &o.subset {
                Some(s) => format!("{{{}}} ", s.join(",")),
                None => String::new(),
            };
            let mark = if o.claimed == o.observed { "" } else { "  <- differs" };
            let _ = writeln!(
                out,
                "  {target}{}: claimed {}, engine {}{mark}",
                o.property,
                yes_no(o.claimed),
                yes_no(o.observed)
            );
        }
    }
}
