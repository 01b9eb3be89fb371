//! `zerosum`: compute factorization invariants of zero-sum sequences over
//! finite abelian groups and run the named verification checks.

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use zerosum_core::atoms::atoms_of_length;
use zerosum_core::invariants::{
    daleth, delta_bounded, delta_star_bounded, m_bounded, render_subset, rho_k,
    InvariantReport, InvariantValue, Mode,
};
use zerosum_core::lengths::{
    catenary_of_element, enumerate_factorizations, pair_length_sets, LengthMemo, LengthSet,
};
use zerosum_core::structure::{amp_decompositions, is_interval, Family};
use zerosum_core::{Error as CoreError, FiniteAbelianGroup, GroupElement, Limits, Sequence};
use zerosum_lab::cache::load_or_enumerate;
use zerosum_lab::checks::{list_checks, run_all, run_check, CheckCtx};
use zerosum_lab::report::{
    render_table, AmpRecord, CheckStatus, InvariantRecord, LengthsRecord,
};

#[derive(Parser)]
#[command(name = "zerosum", version, about = "Factorization invariants of zero-sum sequences over finite abelian groups")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Atom cache directory (also read from ZEROSUM_CACHE_DIR).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Worker threads for parallel sweeps (defaults to the CPU count).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Output format.
    #[arg(long, global = true, default_value = "text", value_parser = ["text", "json"])]
    output: String,
    /// Override the factorization-enumeration cap (guard max_factorizations).
    #[arg(long, global = true)]
    max_factorizations: Option<u64>,
    /// Override the memo key cap (guard memo_limit).
    #[arg(long, global = true)]
    memo_limit: Option<u64>,
    /// Override the bounded-sweep multiset cap (guard max_multisets).
    #[arg(long, global = true)]
    max_multisets: Option<u64>,
    /// Override the atom-count cap for pair sweeps (guard max_sweep_atoms).
    #[arg(long, global = true)]
    max_sweep_atoms: Option<u64>,
    /// Override the group-order cap for subset sweeps (guard max_subset_sweep_order).
    #[arg(long, global = true)]
    max_subset_order: Option<u32>,
    /// Override the elasticity index cap (guard max_rho_k).
    #[arg(long, global = true)]
    max_rho_k: Option<u32>,
}

impl Global {
    fn limits(&self) -> Limits {
        let mut l = Limits::default();
        if let Some(v) = self.max_factorizations {
            l.max_factorizations = v;
        }
        if let Some(v) = self.memo_limit {
            l.memo_limit = v;
        }
        if let Some(v) = self.max_multisets {
            l.max_multisets = v;
        }
        if let Some(v) = self.max_sweep_atoms {
            l.max_sweep_atoms = v;
        }
        if let Some(v) = self.max_subset_order {
            l.max_subset_sweep_order = v;
        }
        if let Some(v) = self.max_rho_k {
            l.max_rho_k = v;
        }
        l
    }

    fn cache_dir(&self) -> Option<PathBuf> {
        self.cache_dir
            .clone()
            .or_else(|| std::env::var_os("ZEROSUM_CACHE_DIR").map(PathBuf::from))
    }

    fn json(&self) -> bool {
        self.output == "json"
    }
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the atoms (minimal zero-sum sequences) over a subset.
    Atoms {
        #[arg(long)]
        group: String,
        /// Subset as space-separated element tuples, e.g. "(1) (3)"; whole
        /// group when omitted.
        #[arg(long)]
        subset: Option<String>,
        /// Only atoms of length at most this.
        #[arg(long)]
        max_length: Option<u64>,
        /// Only atoms of exactly this length.
        #[arg(long, conflicts_with = "max_length")]
        length: Option<u64>,
        /// Print the count instead of the list.
        #[arg(long)]
        count: bool,
    },
    /// Davenport constant of a group, with the lower-bound comparison.
    Davenport {
        #[arg(long)]
        group: String,
    },
    /// Set of lengths of a zero-sum sequence.
    Lengths {
        #[arg(long)]
        group: String,
        #[arg(long)]
        sequence: String,
        /// Also count the factorizations.
        #[arg(long)]
        factorizations: bool,
        /// Also compute the catenary degree.
        #[arg(long)]
        catenary: bool,
    },
    /// Length sets of atom pair products.
    Pairs {
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 1)]
        min_atom_length: u64,
        /// Keep only length sets containing these values, e.g. "2,5".
        #[arg(long)]
        contains: Option<String>,
    },
    /// Derived invariants.
    Invariant {
        #[arg(long, value_parser = ["delta", "delta-star", "rho", "daleth", "m"])]
        name: String,
        #[arg(long)]
        group: String,
        /// Subset for delta/daleth/rho (whole group when omitted).
        #[arg(long)]
        subset: Option<String>,
        /// Sweep bound for the bounded invariants.
        #[arg(long, default_value_t = 12)]
        bound: u64,
        /// Index for the k-th elasticity.
        #[arg(long, default_value_t = 2)]
        k: u32,
    },
    /// Interval/AMP classification of an integer set.
    Classify {
        /// The set, e.g. "2,5,6,9".
        #[arg(long)]
        set: String,
    },
    /// Evaluate a closed-form family of length sets.
    Family {
        #[arg(long)]
        name: String,
        /// Comma-separated parameters (the nine-case family takes its case
        /// label first, e.g. "1a,0,2").
        #[arg(long, default_value = "")]
        params: String,
    },
    /// Run verification checks.
    Verify {
        /// Check id (repeatable); all checks when omitted.
        #[arg(long = "check")]
        checks: Vec<String>,
        /// Run all checks explicitly.
        #[arg(long)]
        all: bool,
        /// Include the opt-in long sub-claims.
        #[arg(long)]
        include_long: bool,
        /// List the registered checks and exit.
        #[arg(long)]
        list: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(workers) = cli.global.workers {
        if rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global()
            .is_err()
        {
            eprintln!("warning: worker pool already initialized");
        }
    }
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            let guard = e.downcast_ref::<CoreError>().is_some_and(|c| {
                matches!(
                    c,
                    CoreError::GuardExceeded { .. }
                        | CoreError::MemoLimit { .. }
                        | CoreError::TooManyFactorizations { .. }
                )
            });
            if guard {
                eprintln!("hint: raise the named guard with its override flag");
                ExitCode::from(3)
            } else {
                ExitCode::from(2)
            }
        }
    }
}

fn parse_group(spec: &str) -> anyhow::Result<FiniteAbelianGroup> {
    FiniteAbelianGroup::parse_spec(spec).with_context(|| format!("bad group spec {spec:?}"))
}

fn parse_subset(
    group: &FiniteAbelianGroup,
    subset: &Option<String>,
) -> anyhow::Result<Vec<GroupElement>> {
    match subset {
        None => Ok(group.elements().collect()),
        Some(s) => {
            let seq = Sequence::parse(group, s).context("bad subset literal")?;
            Ok(seq.support())
        }
    }
}

fn parse_int_set(s: &str) -> anyhow::Result<Vec<u64>> {
    s.split(',')
        .map(|p| p.trim().parse::<u64>().map_err(|e| anyhow::anyhow!("bad integer {p:?}: {e}")))
        .collect()
}

fn run(cli: &Cli) -> anyhow::Result<ExitCode> {
    let limits = cli.global.limits();
    let json = cli.global.json();
    let cache = cli.global.cache_dir();
    match &cli.command {
        Command::Atoms { group, subset, max_length, length, count } => {
            let group = parse_group(group)?;
            let subset = parse_subset(&group, subset)?;
            let atoms = match (max_length, length) {
                (_, Some(len)) => atoms_of_length(&group, &subset, *len, &limits)?,
                (Some(cap), None) => {
                    let mut out = Vec::new();
                    zerosum_core::atoms::for_each_atom(
                        &group,
                        &subset,
                        *cap,
                        &limits,
                        &mut |entries| {
                            out.push(Sequence::from_indexed(&group, entries.to_vec()));
                        },
                    )?;
                    out.sort();
                    out
                }
                (None, None) => load_or_enumerate(cache.as_deref(), &group, &subset, &limits)?
                    .atoms()
                    .to_vec(),
            };
            if json {
                let body = serde_json::json!({
                    "group": group.spec_string(),
                    "subset": render_subset(&subset),
                    "atom_count": atoms.len(),
                    "atoms": if *count { None } else {
                        Some(atoms.iter().map(|a| a.to_string()).collect::<Vec<_>>())
                    },
                });
                println!("{}", serde_json::to_string_pretty(&body)?);
            } else if *count {
                println!("{}", atoms.len());
            } else {
                for a in &atoms {
                    println!("{a}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Davenport { group } => {
            let group = parse_group(group)?;
            let all: Vec<GroupElement> = group.elements().collect();
            let d = zerosum_core::atoms::davenport(&group, &all, &limits)?;
            let d_star = group.d_star();
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "group": group.spec_string(),
                        "davenport": d,
                        "d_star": d_star,
                        "equal": d == d_star,
                    })
                );
            } else {
                println!(
                    "D({}) = {d}, D* = {d_star} ({})",
                    group.name(),
                    if d == d_star { "equal" } else { "strictly larger" }
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Lengths { group, sequence, factorizations, catenary } => {
            let group = parse_group(group)?;
            let b = Sequence::parse(&group, sequence).context("bad sequence literal")?;
            let support = b.support();
            let atoms = load_or_enumerate(cache.as_deref(), &group, &support, &limits)?;
            let l = LengthMemo::new(&atoms, &limits).length_set(&b)?;
            let record = LengthsRecord {
                group: group.spec_string(),
                sequence: b.to_string(),
                length_set: l.values().to_vec(),
                factorization_count: if *factorizations {
                    Some(enumerate_factorizations(&b, &atoms, &limits)?.len() as u64)
                } else {
                    None
                },
                catenary: if *catenary {
                    Some(catenary_of_element(&b, &atoms, &limits)?)
                } else {
                    None
                },
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&record)?);
            } else {
                println!("L({}) = {l}", record.sequence);
                if let Some(n) = record.factorization_count {
                    println!("factorizations: {n}");
                }
                if let Some(c) = record.catenary {
                    println!("catenary: {c}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Pairs { group, min_atom_length, contains } => {
            let group = parse_group(group)?;
            let all: Vec<GroupElement> = group.elements().collect();
            let atoms = load_or_enumerate(cache.as_deref(), &group, &all, &limits)?;
            let needed = contains.as_deref().map(parse_int_set).transpose()?;
            let pairs = pair_length_sets(&atoms, *min_atom_length, &limits)?;
            let kept: Vec<(String, String, LengthSet)> = pairs
                .into_iter()
                .filter(|(_, l)| {
                    needed
                        .as_ref()
                        .is_none_or(|vals| vals.iter().all(|&v| l.contains(v)))
                })
                .map(|((i, j), l)| {
                    (
                        atoms.atoms()[i as usize].to_string(),
                        atoms.atoms()[j as usize].to_string(),
                        l,
                    )
                })
                .collect();
            if json {
                let body: Vec<serde_json::Value> = kept
                    .iter()
                    .map(|(u, v, l)| {
                        serde_json::json!({"u": u, "v": v, "length_set": l.values()})
                    })
                    .collect();
                println!("{}", serde_json::to_string_pretty(&body)?);
            } else {
                for (u, v, l) in &kept {
                    println!("{l}  from  {u}  |  {v}");
                }
                eprintln!("{} pairs", kept.len());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Invariant { name, group, subset, bound, k } => {
            let group = parse_group(group)?;
            let subset_els = parse_subset(&group, subset)?;
            let subset_str = subset.as_ref().map(|_| render_subset(&subset_els));
            let report = match name.as_str() {
                "delta" => {
                    let atoms =
                        load_or_enumerate(cache.as_deref(), &group, &subset_els, &limits)?;
                    let d = delta_bounded(&atoms, *bound, &limits)?;
                    InvariantReport {
                        invariant: "delta",
                        group: group.spec_string(),
                        subset: subset_str,
                        value: InvariantValue::IntegerSet(d.into_iter().collect()),
                        mode: Mode::Bounded(*bound),
                    }
                }
                "delta-star" => {
                    let ds = delta_star_bounded(&group, *bound, &limits)?;
                    InvariantReport {
                        invariant: "delta-star",
                        group: group.spec_string(),
                        subset: None,
                        value: InvariantValue::IntegerSet(ds.gcds.iter().copied().collect()),
                        mode: Mode::Bounded(*bound),
                    }
                }
                "rho" => {
                    let atoms =
                        load_or_enumerate(cache.as_deref(), &group, &subset_els, &limits)?;
                    InvariantReport {
                        invariant: "rho",
                        group: group.spec_string(),
                        subset: subset_str,
                        value: InvariantValue::Integer(rho_k(&atoms, *k, &limits)?),
                        mode: Mode::Exact,
                    }
                }
                "daleth" => {
                    let atoms =
                        load_or_enumerate(cache.as_deref(), &group, &subset_els, &limits)?;
                    match daleth(&atoms, &limits) {
                        Ok(v) => InvariantReport {
                            invariant: "daleth",
                            group: group.spec_string(),
                            subset: subset_str,
                            value: InvariantValue::Integer(v),
                            mode: Mode::Exact,
                        },
                        Err(CoreError::UndefinedDaleth) => InvariantReport {
                            invariant: "daleth",
                            group: group.spec_string(),
                            subset: subset_str,
                            value: InvariantValue::Undefined,
                            mode: Mode::Exact,
                        },
                        Err(e) => return Err(e.into()),
                    }
                }
                "m" => {
                    let m = m_bounded(&group, *bound, &limits)?;
                    InvariantReport {
                        invariant: "m",
                        group: group.spec_string(),
                        subset: None,
                        value: match m.value {
                            Some(v) => InvariantValue::Integer(v),
                            None => InvariantValue::Undefined,
                        },
                        mode: Mode::Bounded(m.bound),
                    }
                }
                _ => unreachable!("clap validates the name"),
            };
            let record = InvariantRecord::from(&report);
            if json {
                println!("{}", serde_json::to_string_pretty(&record)?);
            } else {
                println!(
                    "{}({}{}) = {} [{}]",
                    record.invariant,
                    group.name(),
                    record
                        .subset
                        .as_ref()
                        .map(|s| format!(" on {s}"))
                        .unwrap_or_default(),
                    record.value,
                    record.mode,
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { set } => {
            let values = parse_int_set(set)?;
            anyhow::ensure!(!values.is_empty(), "empty set");
            let l = LengthSet::from_values(values);
            let decs = amp_decompositions(&l, &limits)?;
            if json {
                let body = serde_json::json!({
                    "set": l.values(),
                    "interval": is_interval(&l),
                    "amp": decs.iter().map(AmpRecord::from).collect::<Vec<_>>(),
                });
                println!("{}", serde_json::to_string_pretty(&body)?);
            } else {
                println!("{l}: interval = {}", is_interval(&l));
                for d in &decs {
                    println!(
                        "AMP d={} period={:?} length={} offset={}",
                        d.difference, d.period, d.length, d.offset
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Family { name, params } => {
            let parts: Vec<&str> = if params.trim().is_empty() {
                Vec::new()
            } else {
                params.split(',').map(str::trim).collect()
            };
            let family = Family::parse(name, &parts)?;
            let sets = family.sets()?;
            if json {
                let body: Vec<&[u64]> = sets.iter().map(|l| l.values()).collect();
                println!("{}", serde_json::to_string_pretty(&body)?);
            } else {
                for l in &sets {
                    println!("{l}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { checks, all, include_long, list } => {
            if *list {
                for info in list_checks() {
                    println!("{:24} {:?} {:?}  {}", info.id, info.mode, info.runtime, info.location);
                }
                return Ok(ExitCode::SUCCESS);
            }
            let ctx = CheckCtx {
                limits: limits.clone(),
                include_long: *include_long,
                cache_dir: cache.clone(),
            };
            let reports = if checks.is_empty() || *all {
                run_all(&ctx)
            } else {
                let mut out = Vec::new();
                for id in checks {
                    match run_check(id, &ctx) {
                        Some(r) => out.push(r),
                        None => anyhow::bail!("unknown check {id:?} (see `verify --list`)"),
                    }
                }
                out
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&reports)?);
            } else {
                print!("{}", render_table(&reports));
            }
            let all_pass = reports
                .iter()
                .all(|r| !matches!(r.status, CheckStatus::Fail));
            Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}
