use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use invdel::engine::Calculator;
use invdel::format::{self, MatrixFormat};
use invdel::genomes::{read_genome_file, GenomeSet, NamedGenome};
use invdel::{Config, Engine, Error, Result};
use invdel_core::algebra::{relation_table, Word};
use invdel_core::cayley::{enumerate_monoid, expected_monoid_size};
use invdel_core::distance::{construct_ancestor, directed_distance, verify_scenario};
use invdel_core::evolve::{random_genome, simulate, BranchEvents};
use invdel_core::genome::{ReferenceFrame, RegionAlphabet};
use invdel_core::npc::{
    partition_brute, reduce_partition, solve_balancedsort_with, InversionModel, PartitionInstance,
    BALANCED_MAX_BUDGET, BALANCED_MAX_DEGREE,
};
use serde_json::{json, Value};

const SCHEMA_VERSION: u32 = 1;

/// Distances between circular genomes under inversions and deletions.
#[derive(Parser)]
#[command(name = "invdel", version)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalArgs {
    /// Directory for cached D-class graphs (default: $INVDEL_CACHE, then the
    /// platform cache directory).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = EngineArg::Onthefly)]
    engine: EngineArg,
    /// Only try the canonical frame pair and its reflection.
    #[arg(long, global = true)]
    fast_pairs: bool,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest genome accepted, and the largest size `verify` checks.
    #[arg(long, global = true, default_value_t = 8)]
    max_n: usize,
    /// Print one JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Onthefly,
    Cayley,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Phylip,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Distance between two genomes of a file.
    Distance {
        file: PathBuf,
        a: String,
        b: String,
        /// Deletions and inversions turning A into B, with no ancestor.
        #[arg(long)]
        directed: bool,
        /// Also print the reference pair and inversion words.
        #[arg(long)]
        emit_events: bool,
    },
    /// A most recent common ancestor and the events leading to each genome.
    Mrca { file: PathBuf, a: String, b: String },
    /// All-pairs distance matrix.
    Matrix {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = FormatArg::Phylip)]
        format: FormatArg,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Check the defining relations and the monoid enumeration.
    Verify {
        #[arg(long)]
        relations: bool,
        #[arg(long, value_name = "N")]
        enumerate: Option<usize>,
    },
    /// Evolve a random ancestor along two branches and measure the result.
    Simulate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        del1: usize,
        #[arg(long, default_value_t = 0)]
        inv1: usize,
        #[arg(long, default_value_t = 0)]
        del2: usize,
        #[arg(long, default_value_t = 0)]
        inv2: usize,
    },
    /// Build the sorting instance for a PARTITION instance and solve both.
    ReducePartition {
        /// Comma separated positive integers.
        values: String,
    },
}

struct Report {
    text: String,
    json: Value,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = Config {
        cache_dir: cli.global.cache_dir.clone(),
        max_n: cli.global.max_n,
        engine: match cli.global.engine {
            EngineArg::Onthefly => Engine::OnTheFly,
            EngineArg::Cayley => Engine::Cayley,
        },
        fast_pairs: cli.global.fast_pairs,
        seed: cli.global.seed,
    };
    let calc = Calculator::new(&config);
    let result = config
        .validate()
        .and_then(|_| run(&cli.command, &config, &calc));
    for note in calc.cache.take_notes() {
        eprintln!("{note}");
    }
    match result {
        Ok(report) => {
            if cli.global.json {
                let mut v = report.json;
                v["schema_version"] = json!(SCHEMA_VERSION);
                println!("{v}");
            } else {
                print!("{}", report.text);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("invdel: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(command: &Command, config: &Config, calc: &Calculator) -> Result<Report> {
    match command {
        Command::Distance {
            file,
            a,
            b,
            directed,
            emit_events,
        } => {
            let set = read_genome_file(file)?;
            let (ga, gb) = pick(&set, config, a, b)?;
            if *directed {
                distance_directed(ga, gb)
            } else {
                distance(&set, calc, ga, gb, *emit_events)
            }
        }
        Command::Mrca { file, a, b } => {
            let set = read_genome_file(file)?;
            let (ga, gb) = pick(&set, config, a, b)?;
            mrca(&set, ga, gb)
        }
        Command::Matrix {
            file,
            format,
            output,
        } => matrix(config, calc, file, *format, output.as_deref()),
        Command::Verify {
            relations,
            enumerate,
        } => verify(config, *relations, *enumerate),
        Command::Simulate {
            n,
            del1,
            inv1,
            del2,
            inv2,
        } => {
            let b1 = BranchEvents {
                deletions: *del1,
                inversions: *inv1,
            };
            let b2 = BranchEvents {
                deletions: *del2,
                inversions: *inv2,
            };
            simulate_cmd(config, calc, *n, b1, b2)
        }
        Command::ReducePartition { values } => reduce(values),
    }
}

fn pick<'a>(
    set: &'a GenomeSet,
    config: &Config,
    a: &str,
    b: &str,
) -> Result<(&'a NamedGenome, &'a NamedGenome)> {
    let ga = set.get(a)?;
    let gb = set.get(b)?;
    config.check_size(&format!("genome `{a}`"), ga.genome.len())?;
    config.check_size(&format!("genome `{b}`"), gb.genome.len())?;
    Ok((ga, gb))
}

fn word_text(w: &Word) -> String {
    if w.is_empty() {
        "-".into()
    } else {
        w.to_string()
    }
}

fn distance(
    set: &GenomeSet,
    calc: &Calculator,
    a: &NamedGenome,
    b: &NamedGenome,
    events: bool,
) -> Result<Report> {
    let d = calc.distance(&a.genome, &b.genome)?;
    let mut text = format!(
        "distance {}\ndeletions {}\ninversions {}\n",
        d.total, d.deletions, d.mu
    );
    let mut v = json!({
        "command": "distance",
        "a": a.name,
        "b": b.name,
        "distance": d.total,
        "deletions": d.deletions,
        "inversions": d.mu,
    });
    if events {
        let f1 = set.render(&d.best_pair.g1);
        let f2 = set.render(&d.best_pair.g2);
        let _ = write!(
            text,
            "frame {}: {f1}\nframe {}: {f2}\nleft {}\nright {}\n",
            a.name,
            b.name,
            word_text(&d.solution.t_m),
            word_text(&d.solution.t_n)
        );
        v["frames"] = json!([f1, f2]);
        v["left"] = json!(d.solution.t_m.to_string());
        v["right"] = json!(d.solution.t_n.to_string());
    }
    Ok(Report { text, json: v })
}

fn distance_directed(a: &NamedGenome, b: &NamedGenome) -> Result<Report> {
    let d = directed_distance(&a.genome, &b.genome)?;
    Ok(Report {
        text: format!("directed distance {d}\n"),
        json: json!({"command": "distance", "directed": true, "a": a.name, "b": b.name, "distance": d}),
    })
}

fn mrca(set: &GenomeSet, a: &NamedGenome, b: &NamedGenome) -> Result<Report> {
    let s = construct_ancestor(&a.genome, &b.genome)?;
    let check = verify_scenario(&s, &a.genome, &b.genome);
    if !check.is_ok() {
        return Err(Error::Verification(format!(
            "ancestor scenario failed to replay: {}",
            check.problems.join("; ")
        )));
    }
    let ancestor = set.render(&s.ancestor_frame);
    let gaps: Vec<String> = s
        .gap_sets
        .iter()
        .map(|g| {
            g.iter()
                .map(|r| set.alphabet.name(*r))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    let gap_text: Vec<String> = gaps.iter().map(|g| format!("[{g}]")).collect();
    let text = format!(
        "ancestor {ancestor}\nto {}: {}\nto {}: {}\ngaps {}\nevents {}\nverify ok\n",
        a.name,
        word_text(&s.events_to_g1),
        b.name,
        word_text(&s.events_to_g2),
        gap_text.join(" "),
        check.event_count
    );
    let json = json!({
        "command": "mrca",
        "a": a.name,
        "b": b.name,
        "ancestor": ancestor,
        "events_to_a": s.events_to_g1.to_string(),
        "events_to_b": s.events_to_g2.to_string(),
        "gaps": gaps,
        "events": check.event_count,
        "verified": true,
    });
    Ok(Report { text, json })
}

fn matrix(
    config: &Config,
    calc: &Calculator,
    file: &Path,
    format: FormatArg,
    output: Option<&Path>,
) -> Result<Report> {
    let set = read_genome_file(file)?;
    if set.genomes.len() < 2 {
        return Err(Error::Usage(
            "a distance matrix needs at least two genomes".into(),
        ));
    }
    for g in &set.genomes {
        config.check_size(&format!("genome `{}`", g.name), g.genome.len())?;
    }
    let genomes: Vec<_> = set.genomes.iter().map(|g| g.genome.clone()).collect();
    let m = calc.matrix(&genomes)?;
    let names = set.names();
    let fmt = match format {
        FormatArg::Phylip => MatrixFormat::Phylip,
        FormatArg::Tsv => MatrixFormat::Tsv,
    };
    let mut text = format::render(fmt, &names, &m);
    if let Some(path) = output {
        std::fs::write(path, &text).map_err(|source| Error::Io {
            context: format!("writing {}", path.display()),
            source,
        })?;
        text = format!("wrote {}\n", path.display());
    }
    Ok(Report {
        text,
        json: json!({"command": "matrix", "names": names, "matrix": m}),
    })
}

fn verify(config: &Config, relations: bool, enumerate: Option<usize>) -> Result<Report> {
    // With no selection, check everything up to a size that stays quick.
    let (relations, degrees): (bool, Vec<usize>) = match (relations, enumerate) {
        (false, None) => (true, (1..=config.max_n.min(6)).collect()),
        (r, e) => (r, e.into_iter().collect()),
    };
    let mut text = String::new();
    let mut sizes = Vec::new();
    for n in degrees {
        if n > config.max_n {
            return Err(Error::Usage(format!(
                "enumeration degree {n} is above --max-n {}",
                config.max_n
            )));
        }
        let got = enumerate_monoid(n)?.len() as u64;
        let want = expected_monoid_size(n);
        if got != want {
            return Err(Error::Verification(format!(
                "degree {n}: enumerated {got} elements, expected {want}"
            )));
        }
        let _ = writeln!(text, "{got} ok");
        sizes.push(json!({"n": n, "size": got}));
    }
    let mut checked = 0;
    if relations {
        for n in 2..=config.max_n.max(2) {
            for r in relation_table(n)? {
                if r.lhs.eval(n)? != r.rhs.eval(n)? {
                    return Err(Error::Verification(format!(
                        "{} fails at n={n}: {} = {}",
                        r.name, r.lhs, r.rhs
                    )));
                }
                checked += 1;
            }
        }
        let _ = writeln!(
            text,
            "{checked} relation instances checked\nall relations hold"
        );
    }
    Ok(Report {
        text,
        json: json!({"command": "verify", "enumerations": sizes, "relations_checked": checked, "ok": true}),
    })
}

fn simulate_cmd(
    config: &Config,
    calc: &Calculator,
    n: usize,
    b1: BranchEvents,
    b2: BranchEvents,
) -> Result<Report> {
    config.check_size("ancestor", n)?;
    let ancestor = random_genome(n, config.seed)?;
    let sc = simulate(&ancestor, b1, b2, config.seed)?;
    let al = RegionAlphabet::letters(n);
    let show = |f: &ReferenceFrame| al.render(f, " ");
    let d = calc.distance(&sc.g1, &sc.g2)?;
    let text = format!(
        "ancestor {}\nevents 1: {}\nevents 2: {}\nG1: {}\nG2: {}\ndistance {} (simulated events {})\n",
        show(&sc.ancestor),
        word_text(&sc.events_1),
        word_text(&sc.events_2),
        show(sc.g1.canonical()),
        show(sc.g2.canonical()),
        d.total,
        sc.event_count()
    );
    let json = json!({
        "command": "simulate",
        "seed": sc.seed,
        "ancestor": show(&sc.ancestor),
        "events_1": sc.events_1.to_string(),
        "events_2": sc.events_2.to_string(),
        "g1": show(sc.g1.canonical()),
        "g2": show(sc.g2.canonical()),
        "distance": d.total,
        "simulated_events": sc.event_count(),
    });
    Ok(Report { text, json })
}

fn reduce(values: &str) -> Result<Report> {
    let parsed = values
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<u64>()
                .map_err(|_| Error::Usage(format!("`{}` is not a positive integer", s.trim())))
        })
        .collect::<Result<Vec<_>>>()?;
    let inst = PartitionInstance::new(parsed)?;
    let red = reduce_partition(&inst)?;
    let m = red.sigma.source_size();
    let pairs: Vec<String> = red
        .sigma
        .pairs()
        .filter(|(p, q)| p < q)
        .map(|(p, q)| format!("{p}<->{q}"))
        .collect();
    let mut text = format!("m {m}\nk {}\npairs {}\n", red.k, pairs.join(" "));
    let split = partition_brute(&inst)?;
    let mut v = json!({
        "command": "reduce-partition",
        "values": inst.values(),
        "m": m,
        "k": red.k,
        "pairs": pairs,
    });
    match &split {
        Some(s) => {
            let side = |first: bool| -> Vec<u64> {
                inst.values()
                    .iter()
                    .zip(&s.in_first)
                    .filter(|(_, f)| **f == first)
                    .map(|(x, _)| *x)
                    .collect()
            };
            let (l, r) = (side(true), side(false));
            let _ = writeln!(text, "partition yes {l:?} {r:?}");
            v["partition"] = json!([l, r]);
        }
        None => {
            text.push_str("partition no\n");
            v["partition"] = Value::Null;
        }
    }
    if m <= BALANCED_MAX_DEGREE && red.k <= BALANCED_MAX_BUDGET {
        for (label, model) in [
            ("cyclic", InversionModel::Cyclic),
            ("linear", InversionModel::Linear),
        ] {
            let ok = solve_balancedsort_with(&red, model)?;
            let _ = writeln!(
                text,
                "balancedsort {label} {}",
                if ok { "yes" } else { "no" }
            );
            v[format!("balancedsort_{label}")] = json!(ok);
        }
    } else {
        let _ = writeln!(
            text,
            "balancedsort skipped (needs m <= {BALANCED_MAX_DEGREE} and k <= {BALANCED_MAX_BUDGET})"
        );
    }
    Ok(Report { text, json: v })
}
