use std::path::Path;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use noncent::catalog::{self, natural_cmp, shipped, table1_search, Catalog};
use noncent::graph::export_as;
use noncent::presentation::{enumerate, parse, DEFAULT_MAX_COSETS};
use noncent::theorems::{self, format_table, run_suite, suite_failed};
use noncent::{
    beta_partition, build_graph, families, is_induced_regular, is_reduced_regular, FiniteGroup,
    RegularityReport,
};

#[derive(Parser)]
#[command(name = "noncent", version, about = "Centralizer structure and non-centralizer graphs of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the regularity report of one group.
    Analyze {
        /// Family spec (`dihedral:4 x cyclic:3`), inline presentation,
        /// or catalog (file or shipped name) with an optional `#label`.
        source: String,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// List catalog groups with a given regularity property.
    Search(SearchArgs),
    /// Run the theorem checks over catalogs.
    Verify {
        #[arg(long, value_delimiter = ',', num_args = 1.., required_unless_present = "families")]
        catalog: Vec<String>,
        /// Comma-separated check ids; all checks when omitted.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        /// Also run over the built-in family instances.
        #[arg(long)]
        families: bool,
        /// Print non-applicable rows too.
        #[arg(long)]
        all: bool,
    },
    /// Export the non-centralizer graph of one group.
    Graph {
        source: String,
        /// Restrict to the non-central elements.
        #[arg(long)]
        induced: bool,
        /// dot, edge-list or parts-json.
        #[arg(long, default_value = "dot")]
        format: String,
    },
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
    catalog: Vec<String>,
    #[arg(long, conflicts_with_all = ["induced_regular", "reduced", "table1"])]
    regular: bool,
    #[arg(long, conflicts_with_all = ["reduced", "table1"])]
    induced_regular: bool,
    #[arg(long, conflicts_with = "table1")]
    reduced: bool,
    /// Only groups of this (induced) degree.
    #[arg(long)]
    degree: Option<usize>,
    /// Print reduced regular 2-groups grouped by degree.
    #[arg(long)]
    table1: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Kv,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn max_cosets() -> Result<usize> {
    match std::env::var("NONCENT_MAX_COSETS") {
        Ok(v) => v.parse().with_context(|| format!("NONCENT_MAX_COSETS=`{v}` is not a count")),
        Err(_) => Ok(DEFAULT_MAX_COSETS),
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Analyze { source, format } => {
            let (label, g) = resolve(&source)?;
            let report = RegularityReport::new(&label, &g);
            print!(
                "{}",
                match format {
                    ReportFormat::Text => report.to_text(),
                    ReportFormat::Kv => report.to_key_value(),
                }
            );
        }
        Command::Search(args) => search(&args)?,
        Command::Verify { catalog, checks, families, all } => {
            let mut groups = load_groups(&catalog)?;
            if families {
                groups.extend(theorems::family_instances());
            }
            let ids: Vec<&str> = checks.iter().map(String::as_str).collect();
            let results = run_suite(&groups, &ids)?;
            let shown: Vec<_> = results.iter().filter(|r| all || r.applicable).cloned().collect();
            // the table's own summary would count only the shown rows
            let table = format_table(&shown);
            let rows = table.lines().count() - 1;
            for line in table.lines().take(rows) {
                println!("{line}");
            }
            println!("{}", theorems::summary(&results));
            if suite_failed(&results) {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Graph { source, induced, format } => {
            let (_, g) = resolve(&source)?;
            print!("{}", export_as(&build_graph(&g, induced), &format)?);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn search(args: &SearchArgs) -> Result<()> {
    let groups = load_groups(&args.catalog)?;
    if args.table1 {
        for (n, labels) in table1_search(&groups) {
            if args.degree.is_none_or(|d| d == n) {
                println!("n={n} ({}): {}", labels.len(), labels.join(" "));
            }
        }
        return Ok(());
    }
    let mut hits: Vec<(usize, &str)> = groups
        .iter()
        .filter(|(_, g)| matches(args, g))
        .map(|(label, g)| (g.order(), label.as_str()))
        .collect();
    hits.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| natural_cmp(a.1, b.1)));
    for (_, label) in hits {
        println!("{label}");
    }
    Ok(())
}

fn matches(args: &SearchArgs, g: &FiniteGroup) -> bool {
    let degree = if args.induced_regular {
        if g.is_abelian() {
            return false;
        }
        is_induced_regular(g)
    } else {
        beta_partition(g).regular_degree()
    };
    let Some(n) = degree else { return false };
    if args.reduced && is_reduced_regular(g).ok() != Some(true) {
        return false;
    }
    args.degree.is_none_or(|d| d == n)
}

/// A catalog from a file path, falling back to the shipped catalogs.
fn open_catalog(name: &str) -> Result<Catalog> {
    if Path::new(name).is_file() {
        return Ok(catalog::load(name)?);
    }
    shipped(name).ok_or_else(|| anyhow!("no catalog file or shipped catalog named `{name}`"))
}

fn load_groups(names: &[String]) -> Result<Vec<(String, FiniteGroup)>> {
    let limit = max_cosets()?;
    let mut out = Vec::new();
    for name in names {
        let c = open_catalog(name)?;
        out.extend(c.groups_with_limit(limit).with_context(|| format!("loading `{name}`"))?);
    }
    Ok(out)
}

fn resolve(source: &str) -> Result<(String, FiniteGroup)> {
    let source = source.trim();
    if source.starts_with('<') {
        let g = enumerate(&parse(source)?, max_cosets()?)?;
        return Ok((source.to_string(), g));
    }
    let (name, label) = match source.split_once('#') {
        Some((n, l)) => (n, Some(l)),
        None => (source, None),
    };
    if label.is_some() || Path::new(name).is_file() || shipped(name).is_some() {
        let c = open_catalog(name)?;
        let entry = match label {
            Some(l) => c.get(l).ok_or_else(|| anyhow!("no group `{l}` in `{name}`"))?,
            None if c.len() == 1 => &c.entries[0],
            None => bail!("`{name}` holds {} groups; pick one with `{name}#LABEL`", c.len()),
        };
        let g = entry.group_with_limit(max_cosets()?)?.clone();
        return Ok((entry.label.clone(), g));
    }
    let g = families::from_spec(source).with_context(|| format!("cannot resolve `{source}`"))?;
    Ok((source.to_string(), g))
}
