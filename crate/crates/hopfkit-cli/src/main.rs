//! `hopfkit`: load or build quasitriangular Hopf algebras, run the
//! axiom and non-degeneracy pipelines, and emit machine- or
//! human-readable reports.
//!
//! Exit codes: 0 = all requested properties hold, 1 = a property
//! failed, 2 = input could not be parsed or built.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::json;

use hopfkit_core::hopf::{verify_hopf, HopfAlgebra, Report};
use hopfkit_core::io;
use hopfkit_core::pointed::{
    check_centralizer_identities, pointed_omega_rank, pointed_vs_hopf_crosscheck, radical,
    Bicharacter, FinAbGroup,
};
use hopfkit_core::qt::{equivalence_crosscheck, verify_qt, CrosscheckReport, QTStructure};
use hopfkit_core::yd::{verify_yd_module, yd_muger_membership};
use hopfkit_core::zoo;

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(name = "hopfkit", version, about = "exact analysis of quasitriangular Hopf algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the Hopf axioms (and quasitriangularity when R is present)
    Verify {
        /// input file, or a zoo://<descriptor> pseudo-path
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Full analysis: ranks, class functions, transparency, equivalence crosscheck
    Report {
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Zoo builders
    Zoo {
        #[command(subcommand)]
        cmd: ZooCmd,
    },
    /// Run the equivalence crosscheck over several inputs (or zoo://all)
    Crosscheck {
        inputs: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Metric-group brute force on a bicharacter
    Pointed {
        /// invariant factors, e.g. 4 or 12x3
        #[arg(long)]
        group: String,
        /// exponent matrix entries, row-major, comma separated
        #[arg(long)]
        chi: String,
        /// conductor L (chi values are zeta_L powers)
        #[arg(long)]
        root: u32,
        /// also run the Hopf-algebra bridge comparison
        #[arg(long)]
        bridge: bool,
        #[arg(long)]
        json: bool,
    },
    /// Yetter-Drinfeld module operations
    Yd {
        #[command(subcommand)]
        cmd: YdCmd,
    },
}

#[derive(Subcommand)]
enum ZooCmd {
    /// Build a zoo member and write it as JSON
    Build {
        descriptor: String,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// List the standard descriptors behind zoo://all
    List,
}

#[derive(Subcommand)]
enum YdCmd {
    /// Verify the module/comodule/compatibility axioms of a YD module
    Verify {
        module: PathBuf,
        /// braided Hopf algebra file
        #[arg(long)]
        over: PathBuf,
        /// base quasitriangular Hopf algebra file (with R)
        #[arg(long)]
        base: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Decide membership in the Mueger center of the YD category
    Muger {
        module: PathBuf,
        #[arg(long)]
        over: PathBuf,
        #[arg(long)]
        base: PathBuf,
    },
}

enum Loaded {
    Hopf(HopfAlgebra),
    Qt(QTStructure),
}

fn load_input(input: &str) -> Result<Loaded, String> {
    if let Some(desc) = input.strip_prefix("zoo://") {
        let d = zoo::parse_descriptor(desc).map_err(|e| e.to_string())?;
        return match zoo::build(&d).map_err(|e| e.to_string())? {
            zoo::ZooObject::Hopf(h) => Ok(Loaded::Hopf(h)),
            zoo::ZooObject::Qt(qt) => Ok(Loaded::Qt(qt)),
        };
    }
    let text = std::fs::read_to_string(input).map_err(|e| format!("{input}: {e}"))?;
    let (h, r) = io::hopf_from_json(&text).map_err(|e| e.to_string())?;
    Ok(match r {
        Some(r) => Loaded::Qt(QTStructure::new(h, r)),
        None => Loaded::Hopf(h),
    })
}

fn report_to_json(rep: &Report) -> serde_json::Value {
    let mut axioms = serde_json::Map::new();
    for c in rep.checks.iter() {
        let mut entry = serde_json::Map::new();
        entry.insert("pass".into(), json!(c.pass));
        if let Some(w) = &c.witness {
            entry.insert("witness".into(), json!(w));
        }
        axioms.insert(c.name.clone(), entry.into());
    }
    axioms.into()
}

fn print_report_table(rep: &Report) {
    for c in rep.checks.iter() {
        let status = if c.pass { "ok  " } else { "FAIL" };
        match &c.witness {
            Some(w) => println!("  [{status}] {:<28} {w}", c.name),
            None => println!("  [{status}] {}", c.name),
        }
    }
}

fn cmd_verify(input: &str, as_json: bool) -> ExitCode {
    let loaded = match load_input(input) {
        Ok(l) => l,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let (mut hopf_rep, qt_rep) = match &loaded {
        Loaded::Hopf(h) => (verify_hopf(h), None),
        Loaded::Qt(qt) => (verify_hopf(&qt.h), Some(verify_qt(qt))),
    };
    // tagged grouplikes are claims about basis vectors; re-verify them
    let h = match &loaded {
        Loaded::Hopf(h) => h,
        Loaded::Qt(qt) => &qt.h,
    };
    if !h.metadata.grouplikes.is_empty() {
        let mut witness = None;
        for label in h.metadata.grouplikes.iter() {
            match h.basis_labels.iter().position(|l| l == label) {
                Some(idx) if h.is_grouplike(&hopfkit_core::linalg::sparse_unit(idx as u32)) => {}
                Some(_) => {
                    witness = Some(format!("`{label}` is not grouplike"));
                    break;
                }
                None => {
                    witness = Some(format!("`{label}` is not a basis label"));
                    break;
                }
            }
        }
        hopf_rep.push("tagged_grouplikes", witness.is_none(), witness);
    }
    let ok = hopf_rep.all_pass() && qt_rep.as_ref().map_or(true, |r| r.all_pass());
    if as_json {
        let mut doc = serde_json::Map::new();
        doc.insert("input".into(), json!(input));
        doc.insert("dim".into(), json!(match &loaded { Loaded::Hopf(h) => h.dim, Loaded::Qt(q) => q.h.dim }));
        doc.insert("hopf_axioms".into(), report_to_json(&hopf_rep));
        if let Some(r) = &qt_rep {
            doc.insert("qt_axioms".into(), report_to_json(r));
        }
        doc.insert("pass".into(), json!(ok));
        println!("{}", serde_json::to_string_pretty(&serde_json::Value::from(doc)).unwrap());
    } else {
        println!("{input}: Hopf axioms");
        print_report_table(&hopf_rep);
        if let Some(r) = &qt_rep {
            println!("{input}: quasitriangularity");
            print_report_table(r);
        }
        println!("{}", if ok { "all checks passed" } else { "FAILED" });
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn analysis_json(input: &str, qt: &QTStructure, axioms: &Report, cc: &CrosscheckReport, ms: u128) -> serde_json::Value {
    json!({
        "input": input,
        "tool_version": VERSION,
        "dim": qt.h.dim,
        "conductor": qt.h.conductor,
        "axioms": report_to_json(axioms),
        "factorizable": cc.factorizable,
        "weakly_factorizable": cc.weakly_factorizable,
        "muger_trivial": cc.muger_trivial,
        "omega_rank": cc.omega_rank,
        "dim_cf": cc.dim_cf,
        "dim_ce": cc.dim_ce,
        "dim_xi": cc.dim_xi,
        "transparency_codim": cc.transparency_codim,
        "consistent": cc.consistent,
        "elapsed_ms": ms,
    })
}

fn cmd_report(input: &str, as_json: bool) -> ExitCode {
    let start = Instant::now();
    let loaded = match load_input(input) {
        Ok(l) => l,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let qt = match loaded {
        Loaded::Qt(qt) => qt,
        Loaded::Hopf(_) => {
            eprintln!("error: {input}: missing R-matrix (report needs a quasitriangular structure)");
            return ExitCode::from(2);
        }
    };
    let mut axioms = verify_hopf(&qt.h);
    let qt_rep = verify_qt(&qt);
    axioms.checks.extend(qt_rep.checks);
    let cc = match equivalence_crosscheck(&qt) {
        Ok(cc) => cc,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let ok = axioms.all_pass() && cc.consistent;
    if as_json {
        println!(
            "{}",
            serde_json::to_string_pretty(&analysis_json(
                input,
                &qt,
                &axioms,
                &cc,
                start.elapsed().as_millis()
            ))
            .unwrap()
        );
    } else {
        println!("{input}: dim {} over Q(zeta_{})", qt.h.dim, qt.h.conductor);
        print_report_table(&axioms);
        println!("  factorizable        : {}", cc.factorizable);
        println!("  weakly factorizable : {}", cc.weakly_factorizable);
        println!("  Mueger trivial      : {}", cc.muger_trivial);
        println!("  omega rank          : {}", cc.omega_rank);
        println!("  dim CF / CE / Xi    : {} / {} / {}", cc.dim_cf, cc.dim_ce, cc.dim_xi);
        println!("  transparency codim  : {}", cc.transparency_codim);
        println!("  consistent          : {}", cc.consistent);
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_zoo(cmd: ZooCmd) -> ExitCode {
    match cmd {
        ZooCmd::List => {
            for d in zoo::all_descriptors() {
                println!("{d}");
            }
            ExitCode::SUCCESS
        }
        ZooCmd::Build { descriptor, output } => {
            let desc = match zoo::parse_descriptor(&descriptor) {
                Ok(d) => d,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            let obj = match zoo::build(&desc) {
                Ok(o) => o,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            let text = match &obj {
                zoo::ZooObject::Hopf(h) => io::hopf_to_json(h, None),
                zoo::ZooObject::Qt(qt) => io::qt_to_json(qt),
            };
            if let Err(e) = std::fs::write(&output, text) {
                eprintln!("error: {}: {e}", output.display());
                return ExitCode::from(2);
            }
            println!("wrote {} (dim {})", output.display(), obj.hopf().dim);
            ExitCode::SUCCESS
        }
    }
}

fn cmd_crosscheck(inputs: &[String], as_json: bool) -> ExitCode {
    let mut expanded: Vec<String> = Vec::new();
    for i in inputs {
        if i == "zoo://all" {
            expanded.extend(zoo::all_descriptors().into_iter().map(|d| format!("zoo://{d}")));
        } else {
            expanded.push(i.clone());
        }
    }
    if expanded.is_empty() {
        eprintln!("error: no inputs");
        return ExitCode::from(2);
    }
    let mut results = Vec::new();
    let mut all_ok = true;
    for input in &expanded {
        let start = Instant::now();
        let qt = match load_input(input) {
            Ok(Loaded::Qt(qt)) => qt,
            Ok(Loaded::Hopf(_)) => {
                eprintln!("error: {input}: missing R-matrix");
                return ExitCode::from(2);
            }
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        };
        let mut axioms = verify_hopf(&qt.h);
        axioms.checks.extend(verify_qt(&qt).checks);
        let cc = match equivalence_crosscheck(&qt) {
            Ok(cc) => cc,
            Err(e) => {
                eprintln!("error: {input}: {e}");
                return ExitCode::from(1);
            }
        };
        let ok = axioms.all_pass() && cc.consistent;
        all_ok &= ok;
        if as_json {
            results.push(analysis_json(input, &qt, &axioms, &cc, start.elapsed().as_millis()));
        } else {
            println!(
                "{input}: dim {:>3}  factorizable={:<5} weak={:<5} muger={:<5} rank={:<3} consistent={}",
                qt.h.dim, cc.factorizable, cc.weakly_factorizable, cc.muger_trivial, cc.omega_rank, cc.consistent
            );
        }
    }
    if as_json {
        println!("{}", serde_json::to_string_pretty(&json!({ "results": results, "pass": all_ok })).unwrap());
    } else {
        println!("{}", if all_ok { "all consistent" } else { "INCONSISTENT" });
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_pointed(group: &str, chi: &str, root: u32, bridge: bool, as_json: bool) -> ExitCode {
    let factors: Result<Vec<u32>, _> = group.split('x').map(|t| t.parse::<u32>()).collect();
    let Ok(factors) = factors else {
        eprintln!("error: cannot parse group `{group}`");
        return ExitCode::from(2);
    };
    let entries: Result<Vec<i64>, _> = chi.split(',').map(|t| t.trim().parse::<i64>()).collect();
    let Ok(entries) = entries else {
        eprintln!("error: cannot parse chi `{chi}`");
        return ExitCode::from(2);
    };
    let m = factors.len();
    if entries.len() != m * m {
        eprintln!("error: chi needs {} entries for {} factors", m * m, m);
        return ExitCode::from(2);
    }
    let e: Vec<Vec<i64>> = entries.chunks(m).map(|c| c.to_vec()).collect();
    let chi = match Bicharacter::new(FinAbGroup::new(factors.clone()), e, root) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let beta = chi.symmetric_form();
    let rad = radical(&beta);
    let rank = pointed_omega_rank(&beta);
    let cent = match check_centralizer_identities(&beta) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let bridge_rep = if bridge {
        match pointed_vs_hopf_crosscheck(&chi) {
            Ok(b) => Some(b),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        }
    } else {
        None
    };
    let ok = cent.identities_ok && bridge_rep.as_ref().map_or(true, |b| b.agree);
    if as_json {
        let mut doc = json!({
            "group": factors,
            "radical_order": rad.len(),
            "omega_rank": rank,
            "identities_ok": cent.identities_ok,
            "subgroups_checked": cent.subgroups_checked,
        });
        if let Some(b) = &bridge_rep {
            doc["bridge"] = serde_json::to_value(b).unwrap();
        }
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        println!("group Z/{}", factors.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(" x Z/"));
        println!("  radical order      : {}", rad.len());
        println!("  omega rank         : {rank}");
        println!("  subgroups checked  : {}", cent.subgroups_checked);
        println!("  identities ok      : {}", cent.identities_ok);
        if let Some(v) = &cent.violation {
            println!("  violation          : {v}");
        }
        if let Some(b) = &bridge_rep {
            println!("  bridge agrees      : {} (hopf rank {})", b.agree, b.hopf_rank);
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn load_yd_inputs(
    module: &PathBuf,
    over: &PathBuf,
    base: &PathBuf,
) -> Result<(hopfkit_core::yd::YDModule, hopfkit_core::yd::BraidedHopfAlgebra, QTStructure), String> {
    let base_text = std::fs::read_to_string(base).map_err(|e| format!("{}: {e}", base.display()))?;
    let qt = io::qt_from_json(&base_text).map_err(|e| e.to_string())?;
    let over_text = std::fs::read_to_string(over).map_err(|e| format!("{}: {e}", over.display()))?;
    let b = io::braided_from_json(&over_text, &qt.h).map_err(|e| e.to_string())?;
    let m_text = std::fs::read_to_string(module).map_err(|e| format!("{}: {e}", module.display()))?;
    let m = io::yd_from_json(&m_text, &b, &qt.h).map_err(|e| e.to_string())?;
    Ok((m, b, qt))
}

fn cmd_yd(cmd: YdCmd) -> ExitCode {
    match cmd {
        YdCmd::Verify { module, over, base, json: as_json } => {
            let (m, b, qt) = match load_yd_inputs(&module, &over, &base) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            let rep = verify_yd_module(&m, &b, &qt);
            if as_json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "module": module.display().to_string(),
                        "checks": report_to_json(&rep),
                        "pass": rep.all_pass(),
                    }))
                    .unwrap()
                );
            } else {
                print_report_table(&rep);
                println!("{}", if rep.all_pass() { "valid Yetter-Drinfeld module" } else { "FAILED" });
            }
            if rep.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        YdCmd::Muger { module, over, base } => {
            let (m, b, qt) = match load_yd_inputs(&module, &over, &base) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            let rep = verify_yd_module(&m, &b, &qt);
            if !rep.all_pass() {
                eprintln!("error: input is not a valid Yetter-Drinfeld module");
                return ExitCode::from(1);
            }
            match yd_muger_membership(&m, &b, &qt) {
                Ok(ans) => {
                    println!("{ans}");
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { input, json } => cmd_verify(&input, json),
        Command::Report { input, json } => cmd_report(&input, json),
        Command::Zoo { cmd } => cmd_zoo(cmd),
        Command::Crosscheck { inputs, json } => cmd_crosscheck(&inputs, json),
        Command::Pointed { group, chi, root, bridge, json } => cmd_pointed(&group, &chi, root, bridge, json),
        Command::Yd { cmd } => cmd_yd(cmd),
    }
}
