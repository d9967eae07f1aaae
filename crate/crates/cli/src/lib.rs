//! Command-line front end: parses problem files, runs the drivers in
//! `zinbiel-core`, and prints a text report plus an optional JSON report.
//!
//! Exit codes: 0 success, 1 a checked property failed, 2 bad input.

pub mod algebra_file;
pub mod report;
pub mod syntax;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use zinbiel_core::compoly::ComPoly;
use zinbiel_core::embed::verify_embedding;
use zinbiel_core::envelope::{collapse_check, lemma_odd_even_check, verify_trivial_envelope, verify_zinbiel_family};
use zinbiel_core::gsb::{complete, irreducible_words, verify_gsb, GsbReport, Reducer, Strategy};
use zinbiel_core::zinbiel::{star, zinbiel_product};
use zinbiel_core::{Alphabet, ZinbElement};

use crate::algebra_file::parse_algebra;
use crate::report::{Report, Status};
use crate::syntax::{format_poly, parse_aword, parse_poly, parse_relation_file, RelationFile};

#[derive(Parser, Debug)]
#[command(name = "zinbiel", version, about = "Gröbner-Shirshov bases and Zinbiel algebra tools")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the JSON report to this file ("-" for standard output).
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    /// Record wall-clock timings in the report.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Normal form of a polynomial modulo a relation file.
    Reduce(ReduceArgs),
    /// Bounded completion of a relation file.
    Complete(BoundedRelations),
    /// Irreducible words of a relation file up to a length bound.
    Irr(IrrArgs),
    /// Run one of the verification drivers.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Product of two words in the free Zinbiel algebra.
    Zmul(ZmulArgs),
    /// Check the power-series embedding of a filtered algebra.
    Embed(EmbedArgs),
}

#[derive(Args, Debug)]
struct RelationSource {
    /// Relation file (S-expressions).
    #[arg(long)]
    relations: PathBuf,
    /// Use the standard alphabet of this size when the file has no
    /// (alphabet ...) form.
    #[arg(long)]
    letters: Option<usize>,
}

#[derive(Args, Debug)]
struct ReduceArgs {
    #[command(flatten)]
    source: RelationSource,
    /// Polynomial to reduce, e.g. "(x (y z))".
    #[arg(long)]
    input: String,
    /// Longest word the reduction may instantiate (default: longest input word).
    #[arg(long)]
    bound: Option<usize>,
    #[arg(long, value_enum, default_value_t = StrategyArg::Leading)]
    strategy: StrategyArg,
    /// Print every rewrite step.
    #[arg(long)]
    trace: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StrategyArg {
    Leading,
    Leftmost,
}

#[derive(Args, Debug)]
struct BoundedRelations {
    #[command(flatten)]
    source: RelationSource,
    #[arg(long)]
    bound: usize,
}

#[derive(Args, Debug)]
struct IrrArgs {
    #[command(flatten)]
    inner: BoundedRelations,
    /// Print the words, not only the counts.
    #[arg(long)]
    list: bool,
}

#[derive(Subcommand, Debug)]
enum VerifyTarget {
    /// The five-family basis for the envelope of a trivial algebra.
    Thm1(LettersBound),
    /// The Zinbiel family alone.
    Thm2(LettersBound),
    /// Products of odd and even left combs vanish.
    Lemma(LemmaArgs),
    /// Compositions of a relation file.
    Gsb(BoundedRelations),
    /// Complete the envelope of an algebra and compare its star table.
    Collapse(CollapseArgs),
}

#[derive(Args, Debug)]
struct LettersBound {
    #[arg(long)]
    letters: usize,
    #[arg(long)]
    bound: usize,
}

#[derive(Args, Debug)]
struct LemmaArgs {
    #[arg(long)]
    letters: usize,
    #[arg(long)]
    m_max: usize,
    #[arg(long)]
    k_max: usize,
}

#[derive(Args, Debug)]
struct CollapseArgs {
    /// Algebra file (JSON).
    #[arg(long)]
    algebra: PathBuf,
    #[arg(long)]
    bound: usize,
}

#[derive(Args, Debug)]
struct ZmulArgs {
    /// Standard alphabet of this size.
    #[arg(long, conflicts_with = "alphabet")]
    letters: Option<usize>,
    /// Space-separated letter names.
    #[arg(long)]
    alphabet: Option<String>,
    /// Left factor as space-separated letters, e.g. "x y".
    #[arg(long)]
    left: String,
    #[arg(long)]
    right: String,
    /// Print the anti-commutator instead of the product.
    #[arg(long)]
    star: bool,
}

#[derive(Args, Debug)]
struct EmbedArgs {
    /// Algebra file (JSON).
    #[arg(long)]
    algebra: PathBuf,
    /// Truncation degree.
    #[arg(long = "N")]
    n: usize,
}

struct Outcome {
    text: String,
    report: Report,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_relations(src: &RelationSource) -> Result<RelationFile> {
    let text = read(&src.relations)?;
    let fallback = src.letters.map(Alphabet::standard);
    parse_relation_file(&text, fallback)
        .with_context(|| format!("in {}", src.relations.display()))
}

fn fmt_counts(c: &[usize]) -> String {
    format!("{c:?}")
}

fn fmt_compoly(p: &ComPoly, names: &[String]) -> String {
    if p.is_zero() {
        return "0".into();
    }
    p.iter()
        .map(|(m, c)| format!("{c}*{}", m.display(names)))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn gsb_failures(report: &mut Report, text: &mut String, g: &GsbReport, alphabet: &Alphabet) {
    for f in &g.failures {
        let c = &f.composition;
        let entry = json!({
            "ambiguity": alphabet.fmt_word(&c.ambiguity),
            "path": c.path.to_string(),
            "normal_form": format_poly(alphabet, &f.normal_form),
        });
        text.push_str(&format!(
            "nontrivial composition at {} ({}): {}\n",
            entry["ambiguity"].as_str().unwrap(),
            entry["path"].as_str().unwrap(),
            entry["normal_form"].as_str().unwrap()
        ));
        report.failure(entry);
    }
}

fn reduce(args: &ReduceArgs) -> Result<Outcome> {
    let file = load_relations(&args.source)?;
    let p = parse_poly(&args.input, &file.alphabet).context("in --input")?;
    let bound = args.bound.unwrap_or_else(|| p.max_word_len().max(1));
    let strategy = match args.strategy {
        StrategyArg::Leading => Strategy::LeadingFirst,
        StrategyArg::Leftmost => Strategy::LeftmostFirst,
    };
    let (nf, trace) = Reducer::new(&file.relations, bound)
        .with_strategy(strategy)
        .normal_form_traced(&p)?;
    let mut text = format_poly(&file.alphabet, &nf) + "\n";
    if args.trace {
        for step in &trace {
            text.push_str(&format!(
                "  {} at {} by relation {}\n",
                file.alphabet.fmt_word(&step.word),
                step.path,
                step.relation.schema
            ));
        }
    }
    let mut report = Report::new("reduce");
    report
        .param("relations", args.source.relations.display().to_string())
        .param("input", &args.input)
        .param("bound", bound)
        .param("strategy", format!("{:?}", args.strategy).to_lowercase());
    report
        .count("rewrite_steps", trace.len())
        .count("terms", nf.len())
        .count("normal_form", format_poly(&file.alphabet, &nf));
    Ok(Outcome { text, report })
}

fn complete_cmd(args: &BoundedRelations) -> Result<Outcome> {
    let file = load_relations(&args.source)?;
    let done = complete(&file.relations, args.bound)?;
    let counts: Vec<usize> = irreducible_words(&done.relations, args.bound)
        .iter()
        .map(Vec::len)
        .collect();
    let mut text = String::new();
    let added: Vec<String> = done
        .added
        .iter()
        .map(|p| format_poly(&file.alphabet, p))
        .collect();
    for a in &added {
        text.push_str(&format!("added {a}\n"));
    }
    text.push_str(&format!(
        "relations added: {}\ncompletion passes: {}\nirreducible counts {}\n",
        added.len(),
        done.passes,
        fmt_counts(&counts)
    ));
    let mut report = Report::new("complete");
    report
        .param("relations", args.source.relations.display().to_string())
        .param("bound", args.bound);
    report
        .count("added", added)
        .count("passes", done.passes)
        .count("irreducible", counts);
    Ok(Outcome { text, report })
}

fn irr(args: &IrrArgs) -> Result<Outcome> {
    let file = load_relations(&args.inner.source)?;
    let words = irreducible_words(&file.relations, args.inner.bound);
    let counts: Vec<usize> = words.iter().map(Vec::len).collect();
    let mut text = format!("irreducible counts {}\n", fmt_counts(&counts));
    let mut report = Report::new("irr");
    report
        .param("relations", args.inner.source.relations.display().to_string())
        .param("bound", args.inner.bound);
    if args.list {
        let listed: Vec<Vec<String>> = words
            .iter()
            .map(|ws| ws.iter().map(|w| file.alphabet.fmt_word(w)).collect())
            .collect();
        for (n, ws) in listed.iter().enumerate() {
            text.push_str(&format!("{}: {}\n", n + 1, ws.join(" ")));
        }
        report.count("words", listed);
    }
    report.count("irreducible", counts);
    Ok(Outcome { text, report })
}

fn verify(target: &VerifyTarget) -> Result<Outcome> {
    match target {
        VerifyTarget::Thm1(a) => {
            let r = verify_trivial_envelope(a.letters, a.bound)?;
            let alphabet = Alphabet::standard(a.letters);
            let mut report = Report::new("verify thm1");
            report.param("letters", a.letters).param("bound", a.bound);
            let mut text = format!(
                "{} compositions over {} ambiguities, {} nontrivial\nirreducible counts {}\nexpected counts {:?}\ncompletion counts {}\n",
                r.gsb.compositions_checked,
                r.gsb.ambiguities_checked,
                r.gsb.failures.len(),
                fmt_counts(&r.counts),
                r.expected,
                fmt_counts(&r.completion_counts)
            );
            gsb_failures(&mut report, &mut text, &r.gsb, &alphabet);
            if !r.counts_match() {
                report.failure(json!({"counts": r.counts, "expected": r.expected}));
            }
            if r.completion_counts != r.counts {
                report.failure(json!({"completion_counts": r.completion_counts}));
            }
            report
                .count("compositions", r.gsb.compositions_checked)
                .count("ambiguities", r.gsb.ambiguities_checked)
                .count("irreducible", &r.counts)
                .count("expected", &r.expected)
                .count("completion_irreducible", &r.completion_counts)
                .count("completion_added", r.completion_added);
            report.status = Status::from_check(r.passed());
            Ok(Outcome { text, report })
        }
        VerifyTarget::Thm2(a) => {
            let r = verify_zinbiel_family(a.letters, a.bound)?;
            let alphabet = Alphabet::standard(a.letters);
            let mut report = Report::new("verify thm2");
            report.param("letters", a.letters).param("bound", a.bound);
            let mut text = format!(
                "{} compositions over {} ambiguities, {} nontrivial\n",
                r.compositions_checked,
                r.ambiguities_checked,
                r.failures.len()
            );
            gsb_failures(&mut report, &mut text, &r, &alphabet);
            report
                .count("compositions", r.compositions_checked)
                .count("ambiguities", r.ambiguities_checked);
            report.status = Status::from_check(r.verified());
            Ok(Outcome { text, report })
        }
        VerifyTarget::Lemma(a) => {
            let r = lemma_odd_even_check(a.letters, a.m_max, a.k_max)?;
            let alphabet = Alphabet::standard(a.letters);
            let mut report = Report::new("verify lemma");
            report
                .param("letters", a.letters)
                .param("m_max", a.m_max)
                .param("k_max", a.k_max);
            let mut text = format!(
                "{} pairs checked, {} violations\n",
                r.pairs_checked,
                r.violations.len()
            );
            for (x, y, nf) in &r.violations {
                let (x, y, nf) = (
                    alphabet.fmt_word(x),
                    alphabet.fmt_word(y),
                    format_poly(&alphabet, nf),
                );
                text.push_str(&format!("{x} * {y} reduces to {nf}\n"));
                report.failure(json!({"a": x, "b": y, "normal_form": nf}));
            }
            report
                .count("pairs", r.pairs_checked)
                .count("violations", r.violations.len());
            report.status = Status::from_check(r.passed());
            Ok(Outcome { text, report })
        }
        VerifyTarget::Gsb(a) => {
            let file = load_relations(&a.source)?;
            let r = verify_gsb(&file.relations, a.bound)?;
            let mut report = Report::new("verify gsb");
            report
                .param("relations", a.source.relations.display().to_string())
                .param("bound", a.bound);
            let mut text = format!(
                "{} compositions over {} ambiguities, {} nontrivial\n",
                r.compositions_checked,
                r.ambiguities_checked,
                r.failures.len()
            );
            gsb_failures(&mut report, &mut text, &r, &file.alphabet);
            report
                .count("compositions", r.compositions_checked)
                .count("ambiguities", r.ambiguities_checked);
            report.status = Status::from_check(r.verified());
            Ok(Outcome { text, report })
        }
        VerifyTarget::Collapse(a) => {
            let parsed = parse_algebra(&read(&a.algebra)?)
                .with_context(|| format!("in {}", a.algebra.display()))?;
            let r = collapse_check(&parsed.algebra, a.bound)?;
            let alphabet = Alphabet::new(parsed.algebra.names().to_vec())?;
            let mut report = Report::new("verify collapse");
            report
                .param("algebra", a.algebra.display().to_string())
                .param("bound", a.bound);
            let mut text = String::new();
            let added: Vec<String> = r.added.iter().map(|p| format_poly(&alphabet, p)).collect();
            for p in &added {
                text.push_str(&format!("added {p}\n"));
            }
            text.push_str(&format!("irreducible counts {}\n", fmt_counts(&r.counts)));
            for e in &r.star_table {
                let names = parsed.algebra.names();
                let induced = format_poly(&alphabet, &e.induced);
                let expected = format_poly(&alphabet, &e.expected);
                let mark = if e.induced == e.expected { "" } else { "  (differs)" };
                text.push_str(&format!(
                    "{} * {} = {induced}{mark}\n",
                    names[e.i], names[e.j]
                ));
                if e.induced != e.expected {
                    report.failure(json!({
                        "x": names[e.i], "y": names[e.j],
                        "induced": induced, "expected": expected,
                    }));
                }
            }
            report
                .count("added", added)
                .count("irreducible", &r.counts);
            report.status = Status::from_check(r.star_matches());
            Ok(Outcome { text, report })
        }
    }
}

fn zmul(args: &ZmulArgs) -> Result<Outcome> {
    let alphabet = match (&args.alphabet, args.letters) {
        (Some(names), _) => {
            syntax::alphabet(names.split_whitespace().map(String::from).collect(), Default::default())?
        }
        (None, Some(d)) => Alphabet::standard(d),
        (None, None) => bail!("give --letters or --alphabet"),
    };
    let u = ZinbElement::word(parse_aword(&args.left, &alphabet).context("in --left")?);
    let v = ZinbElement::word(parse_aword(&args.right, &alphabet).context("in --right")?);
    let product = if args.star {
        star(&u, &v)
    } else {
        zinbiel_product(&u, &v)
    };
    let formatted = format_poly(&alphabet, &product.to_magma());
    let mut report = Report::new("zmul");
    report
        .param("alphabet", alphabet.names())
        .param("left", &args.left)
        .param("right", &args.right)
        .param("star", args.star);
    report.count("terms", product.len()).count("product", &formatted);
    Ok(Outcome {
        text: formatted + "\n",
        report,
    })
}

fn embed(args: &EmbedArgs) -> Result<Outcome> {
    let parsed = parse_algebra(&read(&args.algebra)?)
        .with_context(|| format!("in {}", args.algebra.display()))?;
    let filtered = parsed.filtered()?;
    let r = verify_embedding(&filtered, args.n)?;
    let names = filtered.names();
    let mut report = Report::new("embed");
    report
        .param("algebra", args.algebra.display().to_string())
        .param("N", args.n);
    let mut text = format!(
        "basis {:?} with levels {:?}\n{} relations, {} pairs, {} residues nonzero\n",
        names,
        filtered.levels(),
        r.relations,
        r.pairs_checked,
        r.homomorphism_failures.len()
    );
    for f in &r.homomorphism_failures {
        let residue = fmt_compoly(&f.residue, names);
        text.push_str(&format!(
            "residue for {} * {} at t^{}: {residue}\n",
            names[f.x], names[f.y], f.degree
        ));
        report.failure(json!({
            "x": names[f.x], "y": names[f.y], "degree": f.degree, "residue": residue,
        }));
    }
    for &(x, y, l) in &r.residue_formula_mismatches {
        report.failure(json!({"x": names[x], "y": names[y], "degree": l, "formula": "mismatch"}));
    }
    for &(i, j, k) in &r.zinbiel_failures {
        report.failure(json!({"zinbiel_triple": [names[i], names[j], names[k]]}));
    }
    let linear: Vec<String> = r
        .buchberger
        .linear_leading
        .iter()
        .map(|m| m.display(names).to_string())
        .collect();
    for m in &linear {
        report.failure(json!({"linear_leading": m}));
    }
    match r.injectivity_certified_to {
        Some(w) => text.push_str(&format!("injectivity certified to weight {w}\n")),
        None => text.push_str(&format!("linear leading monomials: {}\n", linear.join(", "))),
    }
    text.push_str(&format!(
        "zinbiel identity on {} triples, {} failures\n",
        r.zinbiel_triples_checked,
        r.zinbiel_failures.len()
    ));
    report
        .count("levels", filtered.levels())
        .count("relations", r.relations)
        .count("pairs", r.pairs_checked)
        .count("residues", r.homomorphism_failures.len())
        .count("zinbiel_triples", r.zinbiel_triples_checked)
        .count("buchberger_new_leading", r.buchberger.new_leading.len())
        .count("injectivity_certified_to", r.injectivity_certified_to);
    report.status = Status::from_check(r.verified());
    Ok(Outcome { text, report })
}

fn execute(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Reduce(a) => reduce(a),
        Command::Complete(a) => complete_cmd(a),
        Command::Irr(a) => irr(a),
        Command::Verify { target } => verify(target),
        Command::Zmul(a) => zmul(a),
        Command::Embed(a) => embed(a),
    }
}

/// Runs one invocation, writing to the given streams; returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    let start = Instant::now();
    let mut outcome = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            return 2;
        }
    };
    if cli.timings {
        outcome
            .report
            .timings
            .insert("total_seconds".into(), start.elapsed().as_secs_f64());
    }
    let status = outcome.report.status;
    let _ = write!(out, "{}", outcome.text);
    if status != Status::Ok {
        let _ = writeln!(out, "status: {}", if status == Status::Verified { "verified" } else { "failed" });
    }
    if let Some(path) = &cli.report {
        let json = outcome.report.to_json();
        if path.as_os_str() == "-" {
            let _ = write!(out, "{json}");
        } else if let Err(e) = fs::write(path, json) {
            let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
            return 2;
        }
    }
    status.exit_code()
}

/// [`run_with`] on the process streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}
