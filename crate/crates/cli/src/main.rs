mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use spunemb::corpus;
use spunemb::lens_tools::{lens_open_book, plumbing_matrix, psi_parity, psi_target, slid_diagram};
use spunemb::planar_mcg::LetterJson;
use spunemb::surgery_calc::PlanarOpenBook;
use spunemb::*;

use report::RunReport;

#[derive(Parser, Debug)]
#[command(name = "spunemb", version, about = "Spun embeddings of planar open books")]
struct Cli {
    /// Emit the run report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Omit the timestamp so repeated runs are byte-identical.
    #[arg(long, global = true)]
    no_timestamp: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Continued fraction, slid diagram, open book and embedding target of L(p,q).
    Lens { p: i64, q: i64 },
    /// Target 4-manifold for a planar open book given as a twist word.
    Embed {
        #[command(flatten)]
        word: WordArgs,
        /// Show only the raw W_{i,j} form.
        #[arg(long, conflicts_with = "normalized")]
        raw: bool,
        /// Show only the normalized form.
        #[arg(long)]
        normalized: bool,
    },
    /// Sufficient condition for a spun embedding in S^4.
    CertifyS4 {
        #[command(flatten)]
        word: WordArgs,
    },
    /// Linking matrix, H1 and planar open book of a braided surgery diagram.
    Surgery {
        diagram: PathBuf,
        /// Kirby moves to apply, audited through H1.
        #[arg(long)]
        moves: Option<PathBuf>,
    },
    /// Open book realizing a group presentation, and back.
    Pi1 {
        #[arg(long)]
        presentation: PathBuf,
        /// Also round-trip this many random presentations.
        #[arg(long, value_name = "N")]
        round_trip: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Regression corpus.
    Corpus {
        #[command(subcommand)]
        action: CorpusCmd,
    },
}

#[derive(Subcommand, Debug)]
enum CorpusCmd {
    /// Run every fixture in DIR (defaults to the shipped corpus).
    Run { dir: Option<PathBuf> },
}

#[derive(Args, Debug)]
struct WordArgs {
    /// Number of inner boundary components.
    #[arg(long)]
    page: usize,
    /// Word file: text letters like `T{1,2}^-3 P{2|1}`, or a JSON letter list.
    #[arg(long)]
    word: PathBuf,
}

/// Input the command could not use; exit code 2.
struct BadInput(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for BadInput {
    fn from(e: E) -> Self {
        BadInput(e.into())
    }
}

type CmdResult = std::result::Result<RunReport, BadInput>;

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_word(args: &WordArgs) -> anyhow::Result<TwistWord> {
    let page = PlanarPage::new(args.page)?;
    let text = read(&args.word)?;
    if text.trim_start().starts_with('[') {
        let letters: Vec<LetterJson> = serde_json::from_str(&text)?;
        Ok(TwistWord::from_json(page, letters)?)
    } else {
        Ok(TwistWord::parse(page, &text)?)
    }
}

fn cmd_lens(argv: Vec<String>, p: i64, q: i64) -> CmdResult {
    let mut r = RunReport::new(argv, json!({ "p": p, "q": q }));
    let c = cf_expand(p, q)?;
    let value = cf_eval(&c);
    let plumbing_det = plumbing_matrix(&c).determinant();
    let slid = slid_diagram(&c);
    let slid_det = slid.linking_matrix().determinant();
    // Smith form over big integers gets slow on long chains
    let h1 = (c.len() <= 40).then(|| slid.to_braid_diagram().h1());
    let (word, rec) = lens_open_book(&c);
    let psi = psi_parity(&c);
    let raw = psi_target(&c);
    let target = lens_embedding_target(p, q)?;

    r.check("continued fraction evaluates to -p/q", value == Rational::new(-p, q), format!("{value}"));
    r.check("|det plumbing| = p", plumbing_det.abs() == p, plumbing_det.to_string());
    r.check("|det slid linking matrix| = p", slid_det.abs() == p, slid_det.to_string());
    if let Some(h1) = &h1 {
        r.check("|H1| of slid diagram = p", h1.order() == Some(p as u64), h1.to_string());
    }

    r.line(format!("L({p},{q}): -{p}/{q} = {:?}", c.coefficients()));
    r.line(format!("slid framings b = {:?}, twist regions {:?}", slid.framings, slid.twists));
    r.line(format!("open book on Σ_{{0,{}}}: {word}", c.len() + 1));
    r.line(format!("word parity {} / sphere-twist parity {}", rec.word_parity, psi));
    if !rec.agree {
        r.line("note: word parity differs from the sphere-twist parity; the latter sets the target");
    }
    r.line(format!("raw target W_{{{},{}}}", raw.trivial_bundle, raw.twisted_bundle));
    r.line(format!("target {target}"));
    r.outputs = json!({
        "coefficients": c.coefficients(),
        "value": value.to_string(),
        "plumbing_det": plumbing_det,
        "slid": slid,
        "slid_det": slid_det,
        "h1": h1,
        "word": word.to_string(),
        "reconciliation": rec,
        "parity": psi,
        "raw": raw,
        "normalized": target,
        "normalized_text": target.to_string(),
        "spin": target.is_spin(),
    });
    Ok(r)
}

fn cmd_embed(argv: Vec<String>, args: &WordArgs, raw_only: bool, normalized_only: bool) -> CmdResult {
    let word = load_word(args)?;
    let mut r = RunReport::new(argv, json!({ "page": args.page, "word": word.to_json() }));
    if word.has_push() {
        return Err(BadInput(anyhow!(
            "word contains push letters; use `certify-s4` instead"
        )));
    }
    let rep = embedding_target(&word)?;
    r.check(
        "i + j = n",
        rep.raw.trivial_bundle + rep.raw.twisted_bundle == rep.inner_count,
        format!("{} + {} vs {}", rep.raw.trivial_bundle, rep.raw.twisted_bundle, rep.inner_count),
    );
    r.check("spin iff parity zero", rep.spin == rep.parity.is_zero(), "");
    r.line(format!("page Σ_{{0,{}}}, word {word}", rep.inner_count + 1));
    r.line(format!("exponents {:?}, parity {}", rep.exponents, rep.parity));
    if !normalized_only {
        r.line(format!(
            "raw W_{{{},{}}} = {}",
            rep.raw.trivial_bundle, rep.raw.twisted_bundle, rep.raw
        ));
    }
    if !raw_only {
        r.line(format!("normalized {}", rep.normalized));
    }
    r.line(format!("spin target: {}", rep.spin));
    r.outputs = json!({
        "exponents": rep.exponents,
        "parity": rep.parity,
        "raw": rep.raw,
        "normalized": rep.normalized,
        "normalized_text": rep.normalized.to_string(),
        "spin": rep.spin,
    });
    Ok(r)
}

fn cmd_certify(argv: Vec<String>, args: &WordArgs) -> CmdResult {
    let word = load_word(args)?;
    let mut r = RunReport::new(argv, json!({ "page": args.page, "word": word.to_json() }));
    let cert = s4_certificate(&word)?;
    r.line(format!("pairs {}, a-exponents {:?}", cert.pairs, cert.a_exponents));
    r.line(if cert.certified {
        "certified: spun embeds in S^4".to_string()
    } else {
        "not certified: some a-exponent is even".to_string()
    });
    r.check(
        "certificate matches a-exponent parities",
        cert.certified == cert.a_exponents.iter().all(|n| n.rem_euclid(2) == 1),
        "",
    );
    r.outputs = serde_json::to_value(&cert)?;
    Ok(r)
}

fn cmd_surgery(argv: Vec<String>, diagram: &Path, moves: Option<&Path>) -> CmdResult {
    let d0 = FramedBraidDiagram::parse(&read(diagram)?)?;
    let moves: Vec<Move> = match moves {
        None => Vec::new(),
        Some(path) => {
            let text = read(path)?;
            if text.trim_start().starts_with('[') {
                serde_json::from_str(&text)?
            } else {
                Move::parse_list(&text)?
            }
        }
    };
    let mut r = RunReport::new(argv, json!({ "diagram": d0, "moves": moves }));
    let lk = d0.linking_matrix();
    let h0 = d0.h1();
    let book = match d0.to_planar_open_book()? {
        PlanarOpenBook::Disk => "disk page, identity monodromy".to_string(),
        PlanarOpenBook::Planar(w) => w.to_string(),
    };
    r.line(format!("linking matrix {lk:?}"));
    r.line(format!("H1 = {h0}"));
    r.line(format!("open book: {book}"));

    let mut d = d0.clone();
    let mut log = Vec::new();
    for m in &moves {
        let (next, rec) = m.apply(&d)?;
        r.line(format!("{}: {} -> {}", rec.step, rec.before, rec.after));
        r.check(format!("H1 preserved by {}", rec.step), rec.holds(), "");
        log.push(rec);
        d = next;
    }
    if !moves.is_empty() {
        r.check("final H1 equals initial H1", d.h1() == h0, d.h1().to_string());
    }
    r.outputs = json!({
        "linking_matrix": lk.to_rows(),
        "h1": h0,
        "open_book": book,
        "log": log,
        "final": d,
        "final_h1": d.h1(),
    });
    Ok(r)
}

fn random_presentation(rng: &mut ChaCha8Rng) -> GroupPresentation {
    let g = rng.gen_range(1..=5);
    let relators = (0..rng.gen_range(0..=5))
        .map(|_| {
            FreeWord(
                (0..rng.gen_range(0..=12))
                    .map(|_| {
                        let x = rng.gen_range(1..=g as i32);
                        if rng.gen_bool(0.5) {
                            x
                        } else {
                            -x
                        }
                    })
                    .collect(),
            )
        })
        .collect();
    GroupPresentation::new(g, relators)
}

fn cmd_pi1(argv: Vec<String>, path: &Path, round_trip: Option<usize>, seed: u64) -> CmdResult {
    let g = GroupPresentation::parse(&read(path)?)?;
    let mut r = RunReport::new(argv, json!({ "presentation": g.to_string(), "seed": seed }));
    let page = page_for_presentation(&g);
    let back = pi1_of_open_book(&page);
    let h = abelianization(&back);
    r.line(format!("G = {g}"));
    r.line(page.to_string());
    r.line(format!("pi1 = {back}"));
    r.line(format!("H1 = {h}"));
    r.check("round trip", back.same_up_to_renaming(&g.free_reduce()), "");
    if let Some(n) = round_trip {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let bad = (0..n)
            .map(|_| random_presentation(&mut rng))
            .filter(|p| !pi1_of_open_book(&page_for_presentation(p)).same_up_to_renaming(&p.free_reduce()))
            .count();
        r.check(format!("round trip on {n} random presentations"), bad == 0, format!("{bad} failed"));
    }
    r.outputs = json!({
        "page": page,
        "pi1": back.to_string(),
        "relators": back.relators,
        "abelianization": h,
        "abelianization_text": h.to_string(),
    });
    Ok(r)
}

fn cmd_corpus(argv: Vec<String>, dir: Option<&Path>) -> CmdResult {
    let dir = dir.map(Path::to_path_buf).unwrap_or_else(corpus::default_dir);
    let mut r = RunReport::new(argv, json!({ "dir": dir.display().to_string() }));
    let outcomes = corpus::run_dir(&dir)?;
    if outcomes.is_empty() {
        return Err(BadInput(anyhow!("no fixtures in {}", dir.display())));
    }
    for o in &outcomes {
        r.check(&o.name, o.passed, &o.detail);
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    r.line(format!("{passed} of {} fixtures passed", outcomes.len()));
    r.outputs = json!({ "passed": passed, "total": outcomes.len() });
    Ok(r)
}

fn run(cli: &Cli, argv: Vec<String>) -> CmdResult {
    match &cli.cmd {
        Cmd::Lens { p, q } => cmd_lens(argv, *p, *q),
        Cmd::Embed { word, raw, normalized } => cmd_embed(argv, word, *raw, *normalized),
        Cmd::CertifyS4 { word } => cmd_certify(argv, word),
        Cmd::Surgery { diagram, moves } => cmd_surgery(argv, diagram, moves.as_deref()),
        Cmd::Pi1 { presentation, round_trip, seed } => cmd_pi1(argv, presentation, *round_trip, *seed),
        Cmd::Corpus { action: CorpusCmd::Run { dir } } => cmd_corpus(argv, dir.as_deref()),
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let cli = Cli::parse();
    match run(&cli, argv) {
        Ok(mut report) => {
            if !cli.no_timestamp {
                report.stamp();
            }
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                print!("{}", report.render_text());
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(BadInput(e)) => {
            if cli.json {
                println!("{}", json!({ "schema": report::SCHEMA, "error": format!("{e:#}") }));
            } else {
                eprintln!("error: {e:#}");
            }
            ExitCode::from(2)
        }
    }
}
