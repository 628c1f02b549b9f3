use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use cayley_bi::catalog::{build_group, catalog_list, lookup};
use cayley_bi::chars::{character_table, CharacterTable};
use cayley_bi::engine::{
    bi_check_group, construct_non_bi_witness, find_non_ci_witness, pattern_witness, replay_ci_witness, BiConfig,
    BiMode, CIWitness, CiSearch, MProfile, ViolationReport, DEFAULT_BUDGET,
};
use cayley_bi::group::{automorphism_group, parse_recipe, Group};
use cayley_bi::iso::are_isomorphic;
use cayley_bi::spectra::{cayley_graph, parse_connection_set, spectrum_report, ConnectionSet};
use clap::{Parser, Subcommand};
use serde::Serialize;

/// Writes to stdout, exiting quietly when the reader has gone away.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if let Err(e) = writeln!(std::io::stdout().lock(), $($arg)*) {
            exit_on_closed_pipe(e);
        }
    }};
}

macro_rules! out_raw {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if let Err(e) = write!(std::io::stdout().lock(), $($arg)*) {
            exit_on_closed_pipe(e);
        }
    }};
}

fn exit_on_closed_pipe(e: std::io::Error) {
    if e.kind() == std::io::ErrorKind::BrokenPipe {
        std::process::exit(0);
    }
    panic!("writing to stdout: {e}");
}

#[derive(Parser)]
#[command(name = "cayley-bi", version, about = "Character sums and isomorphisms of Cayley graphs on small groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Group facts.
    Group {
        #[command(subcommand)]
        cmd: GroupCmd,
    },
    /// Exact character table.
    Chartable {
        label: String,
        #[arg(long)]
        json: bool,
    },
    /// Spectrum of a Cayley graph, cross-checked against the character table.
    Spectrum {
        label: String,
        #[arg(long)]
        set: PathBuf,
        /// Add the inverse of every listed element.
        #[arg(long)]
        close_inverse: bool,
    },
    /// BI checks.
    Bi {
        #[command(subcommand)]
        cmd: BiCmd,
    },
    /// CI witness search and replay.
    Ci {
        #[command(subcommand)]
        cmd: CiCmd,
    },
    /// Non-BI witnesses.
    Nonbi {
        #[command(subcommand)]
        cmd: NonbiCmd,
    },
    /// Verdicts for every catalogued group up to an order.
    Classify {
        #[arg(long, default_value_t = 30)]
        max_order: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Subcommand)]
enum GroupCmd {
    Info {
        label: String,
    },
    /// Catalogue entries.
    List,
}

#[derive(Subcommand)]
enum BiCmd {
    /// Compare M-profiles and graph isomorphism for two sets.
    Pair {
        label: String,
        #[arg(long)]
        s: PathBuf,
        #[arg(long)]
        t: PathBuf,
        /// Compare character sums as multisets instead of sets.
        #[arg(long)]
        multiset: bool,
    },
    /// Search every generating set for a violation.
    Group {
        label: String,
        #[arg(long, default_value = "reduced")]
        mode: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Subcommand)]
enum CiCmd {
    Witness {
        label: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Re-verify a witness from a saved report.
    Replay {
        #[arg(long)]
        report: PathBuf,
    },
}

#[derive(Subcommand)]
enum NonbiCmd {
    Witness {
        label: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

type Res<T> = Result<T, String>;

/// Exit status: 0 complete, 2 partial within budget.
enum Status {
    Complete,
    Partial,
}

fn load_group(label: &str) -> Res<Group> {
    if lookup(label).is_some() {
        return build_group(label).map_err(|e| e.to_string());
    }
    let path = Path::new(label);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{label}: {e}"))?;
        let recipe = parse_recipe(&text).map_err(|e| format!("{label}: {e}"))?;
        return recipe.build(&build_group).map(|g| g.with_name(label)).map_err(|e| format!("{label}: {e}"));
    }
    Err(format!("unknown group label `{label}`"))
}

fn load_table(g: &Group) -> Res<CharacterTable> {
    character_table(g).map_err(|e| e.to_string())
}

fn load_set(g: &Group, path: &Path, close_inverse: bool) -> Res<ConnectionSet> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_connection_set(g, &text, close_inverse).map_err(|e| format!("{}: {e}", path.display()))
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serialisable")
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Res<T> {
    match jobs {
        None => Ok(f()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build().map_err(|e| e.to_string())?;
            Ok(pool.install(f))
        }
    }
}

fn group_info(label: &str) -> Res<Status> {
    let g = load_group(label)?;
    let t = load_table(&g)?;
    let name = lookup(label).map_or(g.name(), |e| e.name);
    out!("group      {} ({name})", g.name());
    out!("order      {}", g.order());
    out!("exponent   {}", g.exponent());
    out!("abelian    {}", g.is_abelian());
    let gens: Vec<String> = g.generators().iter().map(|x| format!("{}={}", x.name, x.element)).collect();
    out!("generators {}", gens.join(" "));
    out!("classes    {}", t.num_classes());
    out!("sizes      {:?}", t.class_sizes());
    out!("orders     {:?}", t.class_orders());
    out!("degrees    {:?}", t.degrees());
    out!("derived    {}", g.derived_subgroup().len());
    Ok(Status::Complete)
}

fn group_list() -> Res<Status> {
    for e in catalog_list() {
        let yn = |b: bool| if b { "Y" } else { "N" };
        out!(
            "{:<8} {:<22} BI={} CI={}{}",
            e.label,
            e.name,
            yn(e.reference_bi),
            yn(e.reference_ci),
            if e.in_table { "" } else { "  (control)" }
        );
    }
    Ok(Status::Complete)
}

fn chartable(label: &str, as_json: bool) -> Res<Status> {
    let g = load_group(label)?;
    let t = load_table(&g)?;
    if as_json {
        out!("{}", t.to_json(g.name()));
    } else {
        out_raw!("{}", t.to_text(g.name()));
    }
    Ok(Status::Complete)
}

fn spectrum(label: &str, set: &Path, close_inverse: bool) -> Res<Status> {
    let g = load_group(label)?;
    let t = load_table(&g)?;
    let s = load_set(&g, set, close_inverse)?;
    let report = spectrum_report(&g, &t, &s).map_err(|e| e.to_string())?;
    out!("{}", json(&report));
    Ok(Status::Complete)
}

#[derive(Serialize)]
struct PairReport {
    group: String,
    s: Vec<usize>,
    t: Vec<usize>,
    multiset: bool,
    isomorphic: bool,
    m_profiles_equal: bool,
    first_difference: Option<u32>,
    m_s: BTreeMap<u32, Vec<String>>,
    m_t: BTreeMap<u32, Vec<String>>,
}

fn bi_pair(label: &str, s: &Path, t: &Path, multiset: bool) -> Res<Status> {
    let g = load_group(label)?;
    let table = load_table(&g)?;
    let (s, t) = (load_set(&g, s, false)?, load_set(&g, t, false)?);
    let ps = MProfile::from_class_profile(&table, s.class_profile(), multiset);
    let pt = MProfile::from_class_profile(&table, t.class_profile(), multiset);
    let report = PairReport {
        group: g.name().to_string(),
        s: s.members(),
        t: t.members(),
        multiset,
        isomorphic: are_isomorphic(&cayley_graph(&g, s.mask()), &cayley_graph(&g, t.mask())),
        m_profiles_equal: ps == pt,
        first_difference: ps.first_difference(&pt),
        m_s: ps.rendered(),
        m_t: pt.rendered(),
    };
    out!("{}", json(&report));
    Ok(Status::Complete)
}

fn bi_group(label: &str, mode: &str, budget: u64, jobs: Option<usize>) -> Res<Status> {
    let g = load_group(label)?;
    let table = load_table(&g)?;
    let mode: BiMode = mode.parse().map_err(|e: cayley_bi::engine::EngineError| e.to_string())?;
    let cfg = BiConfig { mode, budget, ..Default::default() };
    let report = with_jobs(jobs, || bi_check_group(&g, &table, &cfg))?;
    out!("{}", json(&report.to_json(&g)));
    Ok(if report.complete() { Status::Complete } else { Status::Partial })
}

fn ci_witness(label: &str, budget: u64, jobs: Option<usize>) -> Res<Status> {
    let g = load_group(label)?;
    let search = with_jobs(jobs, || find_non_ci_witness(&g, budget))?;
    out!("{}", json(&search));
    Ok(if search.complete() { Status::Complete } else { Status::Partial })
}

#[derive(Serialize)]
struct ReplayReport {
    group: String,
    s: Vec<usize>,
    t: Vec<usize>,
    automorphisms_checked: usize,
    verified: bool,
}

fn ci_replay(path: &Path) -> Res<Status> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let witness = match CIWitness::from_json(&text) {
        Ok(w) => w,
        Err(_) => serde_json::from_str::<CiSearch>(&text)
            .map_err(|e| format!("{}: {e}", path.display()))?
            .witness
            .ok_or_else(|| "report holds no witness".to_string())?,
    };
    let g = load_group(&witness.group)?;
    let auts = automorphism_group(&g);
    let verified = replay_ci_witness(&g, &auts, &witness).map_err(|e| e.to_string())?;
    let report = ReplayReport {
        group: witness.group.clone(),
        s: witness.s.clone(),
        t: witness.t.clone(),
        automorphisms_checked: auts.len(),
        verified,
    };
    out!("{}", json(&report));
    if verified {
        Ok(Status::Complete)
    } else {
        Err("witness does not replay".into())
    }
}

#[derive(Serialize)]
struct NotFound {
    group: String,
    found: bool,
    complete: bool,
}

fn nonbi_witness(label: &str, budget: u64, jobs: Option<usize>) -> Res<Status> {
    let g = load_group(label)?;
    let table = load_table(&g)?;
    if g.is_abelian() {
        return Err(format!("{label} is abelian"));
    }
    let out = with_jobs(jobs, || construct_non_bi_witness(&g, &table, budget))?;
    match &out.witness {
        Some(w) => out!("{}", json(&w.report(&g))),
        None => out!("{}", json(&NotFound { group: g.name().to_string(), found: false, complete: out.complete() })),
    }
    Ok(if out.complete() { Status::Complete } else { Status::Partial })
}

#[derive(Serialize)]
struct ClassifyRow {
    label: String,
    name: String,
    order: usize,
    bi_paper: String,
    bi_computed: String,
    method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<ViolationReport>,
    seconds: f64,
}

#[derive(Serialize)]
struct ClassifyReport {
    rows: Vec<ClassifyRow>,
    version: String,
    budget: u64,
}

fn yn(b: bool) -> String {
    if b { "Y" } else { "N" }.to_string()
}

/// Pattern witness first; otherwise the BI check over generating sets,
/// exhaustive up to order 22 and reduced beyond.
fn classify_group(g: &Group, budget: u64) -> Res<(bool, String, Option<ViolationReport>, bool)> {
    let table = load_table(g)?;
    if let Some(w) = pattern_witness(g, &table) {
        return Ok((false, "witness".into(), Some(w.violation.report(g)), true));
    }
    let mode = if g.order() <= 22 { BiMode::Full } else { BiMode::Reduced };
    let report = bi_check_group(g, &table, &BiConfig { mode, budget, ..Default::default() });
    if let Some(v) = &report.violation {
        return Ok((false, "witness".into(), Some(v.report(g)), true));
    }
    let method = match (report.complete(), mode) {
        (false, _) => "sampled",
        (true, BiMode::Full) => "exhaustive",
        (true, BiMode::Reduced) => "exhaustive-reduced",
    };
    Ok((true, method.into(), None, report.complete()))
}

fn classify(max_order: usize, out: Option<&Path>, budget: u64, jobs: Option<usize>) -> Res<Status> {
    let mut rows = Vec::new();
    let mut complete = true;
    for e in catalog_list().iter().filter(|e| e.in_table) {
        let g = e.build().map_err(|err| format!("{}: {err}", e.label))?;
        if g.order() > max_order {
            continue;
        }
        let start = Instant::now();
        let (bi, method, witness, done) = with_jobs(jobs, || classify_group(&g, budget))??;
        complete &= done;
        let seconds = start.elapsed().as_secs_f64();
        eprintln!(
            "{:<8} {:<22} reference={} computed={} {:<18} {:.2}s",
            e.label,
            e.name,
            yn(e.reference_bi),
            yn(bi),
            method,
            seconds
        );
        rows.push(ClassifyRow {
            label: e.label.into(),
            name: e.name.into(),
            order: g.order(),
            bi_paper: yn(e.reference_bi),
            bi_computed: yn(bi),
            method,
            witness,
            seconds,
        });
    }
    let report = ClassifyReport { rows, version: env!("CARGO_PKG_VERSION").into(), budget };
    let text = json(&report);
    match out {
        Some(p) => std::fs::write(p, text + "\n").map_err(|e| format!("{}: {e}", p.display()))?,
        None => out!("{text}"),
    }
    Ok(if complete { Status::Complete } else { Status::Partial })
}

fn run(cli: Cli) -> Res<Status> {
    match cli.command {
        Command::Group { cmd: GroupCmd::Info { label } } => group_info(&label),
        Command::Group { cmd: GroupCmd::List } => group_list(),
        Command::Chartable { label, json } => chartable(&label, json),
        Command::Spectrum { label, set, close_inverse } => spectrum(&label, &set, close_inverse),
        Command::Bi { cmd: BiCmd::Pair { label, s, t, multiset } } => bi_pair(&label, &s, &t, multiset),
        Command::Bi { cmd: BiCmd::Group { label, mode, budget, jobs } } => bi_group(&label, &mode, budget, jobs),
        Command::Ci { cmd: CiCmd::Witness { label, budget, jobs } } => ci_witness(&label, budget, jobs),
        Command::Ci { cmd: CiCmd::Replay { report } } => ci_replay(&report),
        Command::Nonbi { cmd: NonbiCmd::Witness { label, budget, jobs } } => nonbi_witness(&label, budget, jobs),
        Command::Classify { max_order, out, budget, jobs } => classify(max_order, out.as_deref(), budget, jobs),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Status::Complete) => ExitCode::SUCCESS,
        Ok(Status::Partial) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
