//! Command-line front end for `spets-core`.
//!
//! [`run`] parses arguments and returns the exit code together with what
//! would be written to stdout and stderr, so the whole tool can be tested
//! in-process.

use std::fmt::Write as _;

use clap::{ArgGroup, Args, Parser, Subcommand};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde_json::{json, Value};

use spets_core::induction::{j_geen_to_ge1n, j_sum, j_to_ef};
use spets_core::invariants::{a_value, b_value, fake_degree, families, irreps, is_special};
use spets_core::oracle::OracleGroup;
use spets_core::springer::{
    dihedral_irreps, dihedral_is_special, dihedral_pseudoparabolics, dihedral_springer, dihedral_stabilizer,
    dihedral_witness, pseudoparabolics, springer_reps, springer_type,
};
use spets_core::symbols::symbols_for_group;
use spets_core::{
    enumerate_multipartitions, Error, GroupSpec, LatticeKind, LaurentPoly, Multipartition, MultipartitionOrbit, Result,
    SymbolType, Weight,
};

pub const DEFAULT_BOUND: u128 = 5000;
pub const DEFAULT_SEED: u64 = 20;

#[derive(Parser, Debug)]
#[command(
    name = "spets-kit",
    version,
    about = "Symbols, families and Springer sets of the groups G(de,e,n)"
)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest group order the brute-force oracle will enumerate.
    #[arg(long, global = true, env = "SPETS_KIT_BOUND", default_value_t = DEFAULT_BOUND)]
    bound: u128,
    /// Seed for randomized spot checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GroupArg {
    /// Group G(m,p,n), written m,p,n.
    #[arg(long, short)]
    group: GroupSpec,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the symbols of every character, flagging the distinguished ones.
    Symbols {
        #[command(flatten)]
        group: GroupArg,
        /// Symbol type r,s.
        #[arg(long = "type", short, default_value = "1,0")]
        ty: SymbolType,
        /// Weight: b, d, spetsial, or a list of entries.
        #[arg(long, short, default_value = "spetsial")]
        weight: String,
    },
    /// Families of characters and their special members.
    Families {
        #[command(flatten)]
        group: GroupArg,
    },
    /// Special characters with their a- and b-values.
    Special {
        #[command(flatten)]
        group: GroupArg,
    },
    /// Springer set attached to a lattice.
    Springer {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, short, default_value = "L2")]
        lattice: LatticeKind,
    },
    /// Pseudoparabolic subgroups attached to a lattice.
    Pseudoparabolic {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, short, default_value = "L2")]
        lattice: LatticeKind,
    },
    /// Truncated induction of a multipartition.
    #[command(group(ArgGroup::new("mode").required(true).args(["factor", "plus", "lift"])))]
    Jinduce {
        /// Source multipartition; its number of components is e.
        #[arg(long, allow_hyphen_values = true)]
        mp: String,
        /// From G(e,1,n) to G(ef,1,n).
        #[arg(long)]
        factor: Option<usize>,
        /// From G(e,1,n') x G(e,1,n'') to G(e,1,n'+n''), with this second factor.
        #[arg(long, allow_hyphen_values = true)]
        plus: Option<String>,
        /// From G(e,e,n) to G(e,1,n) for symbols of type (r,0), with this r.
        #[arg(long)]
        lift: Option<u32>,
    },
    /// Fake degree of one character.
    Fakedeg {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, allow_hyphen_values = true)]
        mp: String,
        /// Compare with the brute-force oracle.
        #[arg(long)]
        check_oracle: bool,
    },
    /// Compare fake degrees with the brute-force oracle.
    OracleCheck {
        #[command(flatten)]
        group: GroupArg,
        /// Check this many random characters instead of all of them.
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Characters, pseudoparabolics and Springer set of the dihedral group G(e,e,2).
    Dihedral {
        #[arg(long, short)]
        e: usize,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    text: String,
    json: Value,
    ok: bool,
}

impl Report {
    fn new(text: String, json: Value) -> Self {
        Report { text, json, ok: true }
    }
}

/// Runs the tool on `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: rendered,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: rendered,
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok(report) => {
            let mut stdout = if cli.json {
                serde_json::to_string_pretty(&report.json).expect("serializable")
            } else {
                report.text
            };
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            Outcome {
                code: if report.ok { 0 } else { 1 },
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            code: if e.is_internal() { 1 } else { 2 },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn dispatch(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Symbols { group, ty, weight } => symbols(&group.group, *ty, weight),
        Command::Families { group } => family_report(&group.group),
        Command::Special { group } => special(&group.group),
        Command::Springer { group, lattice } => springer(&group.group, *lattice),
        Command::Pseudoparabolic { group, lattice } => pseudoparabolic(&group.group, *lattice),
        Command::Jinduce { mp, factor, plus, lift } => jinduce(mp, *factor, plus.as_deref(), *lift),
        Command::Fakedeg {
            group,
            mp,
            check_oracle,
        } => fakedeg(&group.group, mp, *check_oracle, cli.bound),
        Command::OracleCheck { group, samples } => oracle_check(&group.group, *samples, cli.bound, cli.seed),
        Command::Dihedral { e } => dihedral(*e),
    }
}

fn parse_mp(text: &str, group: &GroupSpec) -> Result<Multipartition> {
    let mp = Multipartition::parse(text, Some(group.de()))?;
    if mp.size() as usize != group.n {
        return Err(Error::Mismatch(format!("{mp} is not a multipartition of {}", group.n)));
    }
    Ok(mp)
}

fn is_dihedral(group: &GroupSpec) -> bool {
    group.d == 1 && group.e > 1 && group.n == 2
}

fn symbols(group: &GroupSpec, ty: SymbolType, weight: &str) -> Result<Report> {
    let weight = Weight::parse(weight, group)?;
    let syms = symbols_for_group(group, ty, &weight)?;
    let distinguished = syms.iter().filter(|s| s.is_distinguished()).count();
    let mut text = format!(
        "{group} type ({},{}) weight {weight}: {} symbols, {distinguished} distinguished\n",
        ty.r,
        ty.s,
        syms.len()
    );
    let width = syms.iter().map(|s| s.orbit().to_string().len()).max().unwrap_or(0);
    let mut rows = Vec::new();
    for s in &syms {
        let star = if s.is_distinguished() { " *" } else { "" };
        writeln!(text, "{:<width$}  {}{star}", s.orbit().to_string(), s).unwrap();
        rows.push(json!({
            "multipartition": s.orbit().to_string(),
            "symbol": s.to_string(),
            "distinguished": s.is_distinguished(),
            "a_c": s.a_c(),
            "b_c": s.b_c(),
        }));
    }
    Ok(Report::new(
        text,
        json!({
            "group": group.to_string(),
            "type": [ty.r, ty.s],
            "weight": weight.entries(),
            "symbols": rows,
            "distinguished": distinguished,
        }),
    ))
}

fn family_report(group: &GroupSpec) -> Result<Report> {
    let fams = families(group)?;
    let mut text = format!("{group}: {} families\n", fams.len());
    let mut out = Vec::new();
    let mut without = 0;
    for f in &fams {
        let members: Vec<String> = f.members.iter().map(|m| m.to_string()).collect();
        let special: Vec<String> = f.special.iter().map(|m| m.to_string()).collect();
        let a = a_value(group, f.members[0].multipartition())?;
        if special.is_empty() {
            without += 1;
        }
        let shown = if special.is_empty() {
            "none".to_string()
        } else {
            special.join(" ")
        };
        writeln!(text, "a={a}  {}  special: {shown}", members.join(" ")).unwrap();
        out.push(json!({ "a": a, "members": members, "special": special }));
    }
    if without > 0 {
        writeln!(text, "{without} families without a distinguished symbol").unwrap();
    }
    Ok(Report::new(
        text,
        json!({ "group": group.to_string(), "families": out, "without_distinguished": without }),
    ))
}

fn special(group: &GroupSpec) -> Result<Report> {
    let mut text = String::new();
    let mut out = Vec::new();
    for label in irreps(group) {
        let mp = label.multipartition();
        if is_special(group, mp)? {
            let (a, b) = (a_value(group, mp)?, b_value(group, mp)?);
            writeln!(text, "{label}  a={a} b={b}").unwrap();
            out.push(json!({ "character": label.to_string(), "a": a, "b": b }));
        }
    }
    text.insert_str(0, &format!("{group}: {} special characters\n", out.len()));
    Ok(Report::new(text, json!({ "group": group.to_string(), "special": out })))
}

fn springer(group: &GroupSpec, lattice: LatticeKind) -> Result<Report> {
    if is_dihedral(group) {
        let set: Vec<String> = dihedral_springer(group.e)?.iter().map(|c| c.to_string()).collect();
        return Ok(Report::new(
            set.join(" "),
            json!({ "group": group.to_string(), "lattice": lattice.to_string(), "springer": set }),
        ));
    }
    let ty = springer_type(group, lattice)?;
    let set: Vec<String> = springer_reps(group, lattice)?.iter().map(|c| c.to_string()).collect();
    Ok(Report::new(
        format!(
            "{group} {lattice}, symbols of type ({},{}): {}",
            ty.r,
            ty.s,
            set.join(" ")
        ),
        json!({ "group": group.to_string(), "lattice": lattice.to_string(), "type": [ty.r, ty.s], "springer": set }),
    ))
}

fn pseudoparabolic(group: &GroupSpec, lattice: LatticeKind) -> Result<Report> {
    let list: Vec<String> = if is_dihedral(group) {
        dihedral_pseudoparabolics(group.e)?
            .iter()
            .map(|h| h.to_string())
            .collect()
    } else {
        pseudoparabolics(group, lattice)?
            .iter()
            .map(|h| h.to_string())
            .collect()
    };
    Ok(Report::new(
        list.join("\n"),
        json!({ "group": group.to_string(), "lattice": lattice.to_string(), "pseudoparabolics": list }),
    ))
}

fn jinduce(mp: &str, factor: Option<usize>, plus: Option<&str>, lift: Option<u32>) -> Result<Report> {
    let a = Multipartition::parse(mp, None)?;
    let e = a.num_components();
    let n = a.size() as usize;
    let (target, image) = if let Some(f) = factor {
        (GroupSpec::ge1n(e * f, n)?, j_to_ef(&a, f)?)
    } else if let Some(other) = plus {
        let b = Multipartition::parse(other, Some(e))?;
        (GroupSpec::ge1n(e, n + b.size() as usize)?, j_sum(&a, &b)?)
    } else {
        let r = lift.expect("clap requires one mode");
        let orbit = MultipartitionOrbit::new(GroupSpec::geen(e, n)?, &a)?;
        (GroupSpec::ge1n(e, n)?, j_geen_to_ge1n(&orbit, r)?)
    };
    let b = b_value(&target, &image)?;
    Ok(Report::new(
        format!("{image}  in {target}, b={b}"),
        json!({ "source": a.to_string(), "image": image.to_string(), "group": target.to_string(), "b": b }),
    ))
}

fn poly_json(p: &LaurentPoly) -> Value {
    let terms: Vec<[i128; 2]> = p.terms().map(|(e, c)| [e as i128, c]).collect();
    json!({ "text": p.to_string(), "terms": terms })
}

/// Fake degree as seen by the oracle: the restriction is the sum of all components.
fn compare_with_oracle(oracle: &OracleGroup, group: &GroupSpec, mp: &Multipartition) -> Result<(bool, Value)> {
    let s = MultipartitionOrbit::new(*group, mp)?.stabilizer_order as i128;
    let expected = fake_degree(group, mp)?.scale(s);
    let got = oracle.fake_degree(mp)?;
    Ok((got == expected, poly_json(&got)))
}

fn fakedeg(group: &GroupSpec, mp: &str, check: bool, bound: u128) -> Result<Report> {
    let mp = parse_mp(mp, group)?;
    let r = fake_degree(group, &mp)?;
    let mut text = r.to_string();
    let mut json =
        json!({ "group": group.to_string(), "multipartition": mp.to_string(), "fake_degree": poly_json(&r) });
    let mut ok = true;
    if check {
        let oracle = OracleGroup::new(group, bound)?;
        let (agree, got) = compare_with_oracle(&oracle, group, &mp)?;
        ok = agree;
        text.push_str(if agree { " [oracle OK]" } else { " [oracle MISMATCH]" });
        json["oracle"] = json!({ "agrees": agree, "restricted": got });
    }
    Ok(Report { text, json, ok })
}

fn oracle_check(group: &GroupSpec, samples: Option<usize>, bound: u128, seed: u64) -> Result<Report> {
    let oracle = OracleGroup::new(group, bound)?;
    let mut orbits = enumerate_multipartitions(group);
    if let Some(k) = samples {
        let mut rng = StdRng::seed_from_u64(seed);
        orbits = orbits.choose_multiple(&mut rng, k).cloned().collect();
        orbits.sort();
    }
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut failures = 0;
    for o in &orbits {
        let (agree, got) = compare_with_oracle(&oracle, group, &o.representative)?;
        if !agree {
            failures += 1;
        }
        writeln!(text, "{o}  {}", if agree { "OK" } else { "MISMATCH" }).unwrap();
        rows.push(json!({ "multipartition": o.to_string(), "agrees": agree, "restricted": got }));
    }
    writeln!(text, "{group}: {} checked, {failures} mismatches", orbits.len()).unwrap();
    Ok(Report {
        text,
        json: json!({ "group": group.to_string(), "checked": rows, "mismatches": failures }),
        ok: failures == 0,
    })
}

fn dihedral(e: usize) -> Result<Report> {
    let mut text = format!("G({e},{e},2)\ncharacters:");
    let mut chars = Vec::new();
    for c in dihedral_irreps(e)? {
        let special = dihedral_is_special(e, c);
        write!(text, " {c}{}", if special { "*" } else { "" }).unwrap();
        chars.push(json!({ "label": c.to_string(), "b": c.b, "dimension": c.dimension(e), "special": special }));
    }
    text.push_str("\npseudoparabolics:\n");
    let mut subs = Vec::new();
    for h in dihedral_pseudoparabolics(e)? {
        let reflections: Vec<usize> = h.reflection_indices(e).into_iter().collect();
        let witness = if e >= 3 {
            let v = dihedral_witness(e, h)?;
            let fixed: Vec<usize> = dihedral_stabilizer(e, &v)?.into_iter().collect();
            if fixed != reflections {
                return Err(Error::Inconsistency(format!("witness for {h} is fixed by {fixed:?}")));
            }
            Some(v.to_string())
        } else {
            None
        };
        writeln!(
            text,
            "  {h}  reflections {reflections:?}{}",
            witness.as_ref().map_or(String::new(), |w| format!("  witness {w}"))
        )
        .unwrap();
        subs.push(json!({ "subgroup": h.to_string(), "reflections": reflections, "witness": witness }));
    }
    let set: Vec<String> = dihedral_springer(e)?.iter().map(|c| c.to_string()).collect();
    write!(text, "springer: {}", set.join(" ")).unwrap();
    Ok(Report::new(
        text,
        json!({ "e": e, "characters": chars, "pseudoparabolics": subs, "springer": set }),
    ))
}
