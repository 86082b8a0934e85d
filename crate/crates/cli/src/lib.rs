//! Command-line front end for `thompson-core`.
//!
//! Decision commands print a human-readable report followed by a line
//! `VERDICT: yes|no|unknown` and exit with 0, 1 or 2 accordingly. Errors
//! exit with 3.

pub mod format;

use std::fmt::Write as _;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use thompson_core::automaton::AutomatonError;
use thompson_core::decide::{
    is_generating, maximality_verdict, AbelianSubgroup, Condition, DecideError, Maximality, NotMaximalWitness,
    QuotientStatus, CLOSURE_CAVEAT, DEFAULT_CAP,
};
use thompson_core::element::{Generators, TreeDiagram};
use thompson_core::jones::{jones_generators, verify_jones_core, JonesParameter};
use thompson_core::rewriting::{is_core_automaton, CoreCheck, Verdict, DEFAULT_BUDGET};
use thompson_core::stallings::{closure_contains_derived, middle_vertices};
use thompson_core::{build_core, TreeAutomaton};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_ERROR: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "thompson",
    version,
    about = "Subgroups of Thompson's group F via tree-automata"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Generators given inline, from a file, or both.
#[derive(Debug, Args)]
struct GenInput {
    /// Generator words such as "x1 x1 X3"; one argument per generator.
    words: Vec<String>,
    /// Generator file (`-` for standard input).
    #[arg(long, short)]
    gens: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct Limits {
    /// Node expansions allowed per word comparison.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    /// Maximum number of quotients to enumerate.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the reduced tree-diagram of a generator word.
    Parse {
        /// Tokens of the word, e.g. `x0 X1 x2`.
        #[arg(required = true, allow_hyphen_values = true)]
        word: Vec<String>,
    },
    /// Build the core of a finitely generated subgroup.
    Core {
        #[command(flatten)]
        input: GenInput,
        /// Write the automaton here instead of standard output.
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// Also write a DOT rendering.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Does an automaton (or the core of a generator file) accept an element?
    Accepts {
        /// Automaton file.
        #[arg(long, short, conflicts_with = "gens", required_unless_present = "gens")]
        automaton: Option<PathBuf>,
        /// Generator file whose core is used.
        #[arg(long, short)]
        gens: Option<PathBuf>,
        /// Tokens of the element.
        #[arg(required = true)]
        element: Vec<String>,
    },
    /// Do the generators generate all of F?
    IsGenerating {
        #[command(flatten)]
        input: GenInput,
    },
    /// Does the closure of the subgroup contain [F, F]?
    ContainsDerived {
        #[command(flatten)]
        input: GenInput,
    },
    /// Is the automaton the core of some subgroup of F?
    IsCoreAutomaton {
        /// Automaton file (`-` for standard input).
        automaton: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Is the closure of the subgroup maximal of infinite index?
    IsMaximal {
        #[command(flatten)]
        input: GenInput,
        #[command(flatten)]
        limits: Limits,
    },
    /// Enumerate the quotients of an automaton and test each one.
    Quotients {
        /// Automaton file (`-` for standard input).
        #[arg(long, short, conflicts_with = "gens", required_unless_present = "gens")]
        automaton: Option<PathBuf>,
        /// Generator file whose core is used.
        #[arg(long, short)]
        gens: Option<PathBuf>,
        /// Print every quotient in automaton format.
        #[arg(long)]
        print: bool,
        #[command(flatten)]
        limits: Limits,
    },
    /// Check the core of the Jones subgroup for a prime.
    Jones {
        #[arg(long, short)]
        p: u32,
        /// Write the core in automaton format.
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// Also write a DOT rendering of the core.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

/// Standard streams of one invocation.
pub struct Io<'a> {
    pub stdin: &'a mut dyn Read,
    pub stdout: &'a mut dyn Write,
    pub stderr: &'a mut dyn Write,
}

/// Result of a command: report text and, for decisions, a verdict.
struct Report {
    text: String,
    verdict: Option<&'static str>,
}

impl Report {
    fn plain(text: String) -> Self {
        Report { text, verdict: None }
    }

    fn decided(text: String, verdict: &'static str) -> Self {
        Report {
            text,
            verdict: Some(verdict),
        }
    }
}

fn exit_code(verdict: &str) -> i32 {
    match verdict {
        "yes" => EXIT_YES,
        "no" => EXIT_NO,
        _ => EXIT_UNKNOWN,
    }
}

/// Runs one invocation and returns its exit code.
pub fn run<I, T>(args: I, io: &mut Io<'_>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(io.stdout, "{}", e);
            return EXIT_YES;
        }
        Err(e) => {
            let _ = write!(io.stderr, "{}", e);
            return EXIT_ERROR;
        }
    };
    match execute(cli.command, io.stdin) {
        Ok(report) => {
            let _ = io.stdout.write_all(report.text.as_bytes());
            match report.verdict {
                Some(v) => {
                    let _ = writeln!(io.stdout, "VERDICT: {}", v);
                    exit_code(v)
                }
                None => EXIT_YES,
            }
        }
        Err(e) => {
            let _ = writeln!(io.stderr, "error: {:#}", e);
            EXIT_ERROR
        }
    }
}

fn read_source(path: &Path, stdin: &mut dyn Read) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        stdin.read_to_string(&mut s).context("reading standard input")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn write_target(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn load_generators(input: &GenInput, stdin: &mut dyn Read) -> Result<Vec<TreeDiagram>> {
    let mut out = match &input.gens {
        Some(path) => {
            format::parse_generators(&read_source(path, stdin)?).with_context(|| format!("in {}", path.display()))?
        }
        None => Vec::new(),
    };
    let mut gens = Generators::new();
    for w in &input.words {
        out.push(format::parse_word(w, &mut gens).with_context(|| format!("generator `{}`", w))?);
    }
    Ok(out)
}

fn load_automaton(path: &Path, stdin: &mut dyn Read) -> Result<TreeAutomaton> {
    format::parse_automaton(&read_source(path, stdin)?).with_context(|| format!("in {}", path.display()))
}

fn automaton_or_core(
    automaton: &Option<PathBuf>,
    gens: &Option<PathBuf>,
    stdin: &mut dyn Read,
) -> Result<TreeAutomaton> {
    match (automaton, gens) {
        (Some(path), _) => load_automaton(path, stdin),
        (None, Some(path)) => {
            let input = GenInput {
                words: Vec::new(),
                gens: Some(path.clone()),
            };
            Ok(build_core(&load_generators(&input, stdin)?)?)
        }
        (None, None) => bail!("give an automaton or a generator file"),
    }
}

fn summary(a: &TreeAutomaton) -> String {
    let [r, l, rt, m] = a.type_census();
    format!(
        "{} vertices (root {}, left {}, right {}, middle {}), {} leaves",
        a.vertex_count(),
        r,
        l,
        rt,
        m,
        a.leaves().count()
    )
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn execute(command: Command, stdin: &mut dyn Read) -> Result<Report> {
    match command {
        Command::Parse { word } => parse(&word.join(" ")),
        Command::Core { input, output, dot } => {
            let core = build_core(&load_generators(&input, stdin)?)?;
            emit_automaton(&core, output.as_deref(), dot.as_deref())
        }
        Command::Accepts {
            automaton,
            gens,
            element,
        } => {
            let a = automaton_or_core(&automaton, &gens, stdin)?;
            let d = format::parse_word(&element.join(" "), &mut Generators::new())?;
            Ok(accepts(&a, &d))
        }
        Command::IsGenerating { input } => {
            let gens = load_generators(&input, stdin)?;
            let image = AbelianSubgroup::of_diagrams(&gens);
            let core = build_core(&gens)?;
            let derived = closure_contains_derived(&core);
            let yes = is_generating(&gens)?;
            let mut text = String::new();
            let _ = writeln!(
                text,
                "abelian image basis: {:?} (full: {})",
                image.basis(),
                yes_no(image.is_full())
            );
            let _ = writeln!(text, "core: {}", summary(&core));
            let _ = writeln!(text, "closure contains [F,F]: {}", yes_no(derived));
            let _ = writeln!(text, "generates F: {}", yes_no(yes));
            Ok(Report::decided(text, yes_no(yes)))
        }
        Command::ContainsDerived { input } => {
            let core = build_core(&load_generators(&input, stdin)?)?;
            let yes = closure_contains_derived(&core);
            let middles: Vec<&str> = middle_vertices(&core).into_iter().map(|v| core.name(v)).collect();
            let mut text = String::new();
            let _ = writeln!(text, "core: {}", summary(&core));
            let _ = writeln!(text, "middle vertices: {}", middles.join(", "));
            let _ = writeln!(text, "closure contains [F,F]: {}", yes_no(yes));
            Ok(Report::decided(text, yes_no(yes)))
        }
        Command::IsCoreAutomaton { automaton, budget } => {
            let a = load_automaton(&automaton, stdin)?;
            Ok(core_automaton(&a, budget))
        }
        Command::IsMaximal { input, limits } => {
            let gens = load_generators(&input, stdin)?;
            maximal(&gens, &limits)
        }
        Command::Quotients {
            automaton,
            gens,
            print,
            limits,
        } => {
            let a = automaton_or_core(&automaton, &gens, stdin)?;
            Ok(quotients(&a, print, &limits))
        }
        Command::Jones { p, output, dot } => jones(p, output.as_deref(), dot.as_deref()),
    }
}

fn parse(word: &str) -> Result<Report> {
    let d = format::parse_word(word, &mut Generators::new())?;
    let mut text = String::new();
    if d.is_identity() {
        text.push_str("identity\n");
    }
    for (u, v) in d.pairs() {
        let _ = writeln!(text, "{} -> {}", u, v);
    }
    let a = d.abelianize();
    let _ = writeln!(text, "abelian image: ({}, {})", a.0, a.1);
    Ok(Report::plain(text))
}

fn emit_automaton(a: &TreeAutomaton, output: Option<&Path>, dot: Option<&Path>) -> Result<Report> {
    let text = format::write_automaton(a);
    if let Some(path) = dot {
        write_target(path, &format::to_dot(a))?;
    }
    match output {
        Some(path) => {
            write_target(path, &text)?;
            Ok(Report::plain(format!("{}\n", summary(a))))
        }
        None => Ok(Report::plain(text)),
    }
}

fn accepts(a: &TreeAutomaton, d: &TreeDiagram) -> Report {
    let mut text = String::new();
    let rejected = d.pairs().find(|(u, v)| match (a.read_path(u), a.read_path(v)) {
        (Some(x), Some(y)) => x != y,
        _ => true,
    });
    match rejected {
        Some((u, v)) => {
            let end = |w| a.read_path(w).map_or("unreadable", |x| a.name(x));
            let _ = writeln!(text, "rejected at pair {} -> {} (ends {} and {})", u, v, end(u), end(v));
        }
        None => text.push_str("every pair of branches ends at a common vertex\n"),
    }
    Report::decided(text, yes_no(a.accepts(d)))
}

fn describe_check(check: &CoreCheck) -> String {
    match check {
        CoreCheck::LeftWords(s) | CoreCheck::RightWords(s) => format!("{} ({})", check.name(), s),
        other => other.name().to_string(),
    }
}

fn core_automaton(a: &TreeAutomaton, budget: usize) -> Report {
    let mut text = format!("automaton: {}\n", summary(a));
    let v = is_core_automaton(a, budget);
    match &v {
        Verdict::Yes(()) => text.push_str("core-automaton: yes\n"),
        Verdict::No(w) => {
            let _ = writeln!(
                text,
                "core-automaton: no, {} for u = {}, v = {}",
                describe_check(&w.check),
                w.u,
                w.v
            );
        }
        Verdict::Unknown { spent } => {
            let _ = writeln!(text, "core-automaton: undecided after {} expansions", spent);
        }
    }
    Report::decided(text, v.label())
}

fn status_text(status: &QuotientStatus) -> String {
    match status {
        QuotientStatus::Core => "the automaton itself".into(),
        QuotientStatus::CoreOfF => "core of F".into(),
        QuotientStatus::Tested(Verdict::Yes(())) => "core-automaton".into(),
        QuotientStatus::Tested(Verdict::No(w)) => {
            format!(
                "not a core-automaton: {} (u = {}, v = {})",
                describe_check(&w.check),
                w.u,
                w.v
            )
        }
        QuotientStatus::Tested(Verdict::Unknown { spent }) => format!("undecided after {} expansions", spent),
    }
}

fn cap_exceeded(text: &mut String, cap: usize) {
    let _ = writeln!(text, "more than {} quotients; raise --cap", cap);
}

fn maximal(gens: &[TreeDiagram], limits: &Limits) -> Result<Report> {
    let report = match maximality_verdict(gens, limits.budget, limits.cap) {
        Ok(r) => r,
        Err(DecideError::Automaton(AutomatonError::CapExceeded { cap })) => {
            let mut text = String::new();
            cap_exceeded(&mut text, cap);
            return Ok(Report::decided(text, "unknown"));
        }
        Err(e) => return Err(e.into()),
    };
    let mut text = format!("core: {}\n", summary(&report.core));
    for c in [
        Condition::AbelianImageFull,
        Condition::CoreFull,
        Condition::SeveralMiddleVertices,
        Condition::QuotientsRefuted,
    ] {
        let state = report.condition(c).map_or("not decided", yes_no);
        let _ = writeln!(text, "condition {} ({}): {}", c.number(), c.describe(), state);
    }
    for (i, e) in report.census.iter().enumerate() {
        let _ = writeln!(
            text,
            "  quotient {} with {} vertices: {}",
            i,
            e.automaton.vertex_count(),
            status_text(&e.status)
        );
    }
    let verdict = match &report.verdict {
        Maximality::MaximalInfiniteIndex => {
            text.push_str("closure is a maximal subgroup of infinite index\n");
            "yes"
        }
        Maximality::NotMaximal(NotMaximalWitness::ConditionFailed(c)) => {
            let _ = writeln!(text, "not maximal of infinite index: condition {} fails", c.number());
            "no"
        }
        Maximality::NotMaximal(NotMaximalWitness::Quotient(q)) => {
            let _ = writeln!(
                text,
                "not maximal: this quotient is a core-automaton\n{}",
                format::write_automaton(q)
            );
            "no"
        }
        Maximality::Unknown => {
            text.push_str("some quotients could not be decided; raise --budget\n");
            "unknown"
        }
    };
    let _ = writeln!(text, "note: {}", CLOSURE_CAVEAT);
    Ok(Report::decided(text, verdict))
}

fn quotients(a: &TreeAutomaton, print: bool, limits: &Limits) -> Report {
    let mut text = format!("automaton: {}\n", summary(a));
    let list = match a.enumerate_quotients(limits.cap) {
        Ok(list) => list,
        Err(_) => {
            cap_exceeded(&mut text, limits.cap);
            return Report::decided(text, "unknown");
        }
    };
    let own = a.canonical_form();
    let cf = TreeAutomaton::core_of_f().canonical_form();
    let (mut found, mut undecided) = (false, false);
    for (i, q) in list.iter().enumerate() {
        let form = q.canonical_form();
        let status = if form == own {
            QuotientStatus::Core
        } else if form == cf {
            QuotientStatus::CoreOfF
        } else {
            let v = is_core_automaton(q, limits.budget);
            found |= v.is_yes();
            undecided |= v.is_unknown();
            QuotientStatus::Tested(v)
        };
        let _ = writeln!(
            text,
            "quotient {} with {} vertices: {}",
            i,
            q.vertex_count(),
            status_text(&status)
        );
        if print {
            text.push_str(&format::write_automaton(q));
        }
    }
    let verdict = if found {
        text.push_str("some intermediate quotient is a core-automaton\n");
        "yes"
    } else if undecided {
        "unknown"
    } else {
        text.push_str("no intermediate quotient is a core-automaton\n");
        "no"
    };
    Report::decided(text, verdict)
}

fn jones(p: u32, output: Option<&Path>, dot: Option<&Path>) -> Result<Report> {
    let p = JonesParameter::new(p)?;
    let r = verify_jones_core(p);
    let mut text = String::new();
    let _ = writeln!(text, "generators: {}", jones_generators(p).len());
    let _ = writeln!(text, "core: {}", summary(&r.core));
    let _ = writeln!(text, "expected census: {:?}", r.expected_census());
    let _ = writeln!(
        text,
        "onto A^sum: {}, onto A^suf: {}",
        yes_no(r.onto_sum),
        yes_no(r.onto_suf)
    );
    for m in r.mismatches() {
        let _ = writeln!(text, "mismatch: {:?}", m);
    }
    if let Some(path) = output {
        write_target(path, &format::write_automaton(&r.core))?;
    }
    if let Some(path) = dot {
        write_target(path, &format::to_dot(&r.core))?;
    }
    Ok(Report::decided(text, yes_no(r.is_consistent())))
}
