//! Command-line front end. Exit status: 0 success, 1 campaign failure,
//! 2 usage or input error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use lcgroup_core::caps::{DEFAULT_LATTICE_CAP, DEFAULT_ORDER_CAP, ORDER_CAP_ENV};
use lcgroup_core::cp2::{is_cp2, lcm_group_routes};
use lcgroup_core::lc_series::lc_series;
use lcgroup_core::lcm::{lc_subgroup, lcm_member, lcm_set};
use lcgroup_core::nlcm::nlcm_check;
use lcgroup_core::structure::{is_nilpotent, is_solvable, is_supersolvable, nilpotency_class};
use lcgroup_core::{Caps, Elem, FiniteGroup, GroupSpec};
use serde_json::{json, Value};

use crate::campaigns::{run_all, run_campaign, Campaign};
use crate::corpus;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "lcgroup",
    version,
    about = "LCM sets, LC-series and CP2 checks for small finite groups"
)]
pub struct Cli {
    /// Largest group order that may be enumerated.
    #[arg(long, global = true, env = ORDER_CAP_ENV, default_value_t = DEFAULT_ORDER_CAP)]
    pub cap: usize,

    /// Largest group order whose full subgroup lattice may be built.
    #[arg(long, global = true, default_value_t = DEFAULT_LATTICE_CAP)]
    pub lattice_cap: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Reserved; always rejected since no computation is randomized.
    #[arg(long, global = true)]
    pub seedless: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Order, exponent, center and solvability flags.
    Info { spec: String },
    /// The LCM set and the LC subgroup.
    Lcm {
        spec: String,
        /// List a failing pair for every non-member.
        #[arg(long)]
        witnesses: bool,
    },
    /// The LC-series and LC-class.
    LcSeries { spec: String },
    /// CP2 membership by definition and by structure.
    Cp2 { spec: String },
    /// Minimal non-LCM check with its structure report.
    Nlcm { spec: String },
    /// Run a campaign, or `all`.
    Verify {
        campaign: String,
        /// Only corpus entries with this tag.
        #[arg(long)]
        filter: Option<String>,
        /// Also write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// The shipped corpus.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum CorpusAction {
    List,
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl ToString) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.to_string(),
    }
}

fn perm_text(g: &FiniteGroup, x: Elem) -> String {
    g.perm(x).to_string()
}

fn build(spec: &str, caps: Caps) -> Result<FiniteGroup, Failure> {
    let spec = GroupSpec::parse(spec).map_err(usage)?;
    spec.build(caps.order).map_err(usage)
}

fn emit(out: &mut dyn Write, format: Format, value: &Value, text: String) -> std::io::Result<()> {
    match format {
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(value).expect("json")
        ),
        Format::Text => write!(out, "{text}"),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            if code == 0 {
                let _ = write!(out, "{}", e.render());
                return EXIT_OK;
            }
            let _ = write!(err, "{}", e.render());
            return EXIT_USAGE;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    if cli.seedless {
        return Err(usage(
            "--seedless is reserved: no computation is randomized",
        ));
    }
    let caps = Caps {
        order: cli.cap,
        lattice: cli.lattice_cap,
    };
    let io = |e: std::io::Error| Failure {
        code: EXIT_USAGE,
        message: e.to_string(),
    };
    match &cli.command {
        Command::Info { spec } => {
            let g = build(spec, caps)?;
            let value = json!({
                "spec": spec,
                "order": g.order(),
                "degree": g.degree(),
                "exponent": g.exponent(),
                "center_order": g.center().order(),
                "abelian": g.is_abelian(),
                "nilpotent": is_nilpotent(&g),
                "nilpotency_class": nilpotency_class(&g),
                "solvable": is_solvable(&g),
                "supersolvable": is_supersolvable(&g),
            });
            emit(out, cli.format, &value, text_lines(&value)).map_err(io)?;
        }
        Command::Lcm { spec, witnesses } => {
            let g = build(spec, caps)?;
            let set = lcm_set(&g);
            let lc = lc_subgroup(&g);
            let routes = lcm_group_routes(&g);
            let mut value = json!({
                "order": g.order(),
                "lcm_size": set.len(),
                "lc_order": lc.order(),
                "lcm_group": routes.by_definition,
                "lcm_group_by_characterization": routes.by_characterization,
            });
            let mut text = format!(
                "order {}\nlcm size {}\nlc order {}\nlcm-group {}\n",
                g.order(),
                set.len(),
                lc.order(),
                routes.by_definition
            );
            if *witnesses {
                let mut list = Vec::new();
                for x in g.elems().filter(|x| set.binary_search(x).is_err()) {
                    let w = lcm_member(&g, x)
                        .map_err(usage)?
                        .failure
                        .expect("non-member");
                    text.push_str(&format!(
                        "{} fails: h = {}, y = {}, orders {} {} {}\n",
                        perm_text(&g, x),
                        perm_text(&g, w.h),
                        perm_text(&g, w.y),
                        w.order_h,
                        w.order_y,
                        w.order_hy
                    ));
                    list.push(json!({
                        "x": perm_text(&g, x),
                        "h": perm_text(&g, w.h),
                        "y": perm_text(&g, w.y),
                        "order_h": w.order_h,
                        "order_y": w.order_y,
                        "order_hy": w.order_hy,
                    }));
                }
                value["witnesses"] = Value::Array(list);
            }
            emit(out, cli.format, &value, text).map_err(io)?;
        }
        Command::LcSeries { spec } => {
            let g = build(spec, caps)?;
            let s = lc_series(&g);
            let value = json!({
                "terms": s.orders(),
                "factors_nilpotent": s.factors_nilpotent,
                "terminated_at_g": s.terminated_at_g,
                "class": s.lc_class,
            });
            let class = s.lc_class.map_or("none".to_string(), |k| k.to_string());
            let orders: Vec<String> = s.orders().iter().map(usize::to_string).collect();
            let text = format!("terms {}\nclass {class}\n", orders.join(" "));
            emit(out, cli.format, &value, text).map_err(io)?;
        }
        Command::Cp2 { spec } => {
            let g = build(spec, caps)?;
            let v = is_cp2(&g);
            let counterexample = v.counterexample.map(|c| {
                json!({
                    "x": perm_text(&g, c.x),
                    "y": perm_text(&g, c.y),
                    "order_x": c.order_x,
                    "order_y": c.order_y,
                    "order_xy": c.order_xy,
                })
            });
            let value = json!({
                "holds": v.holds,
                "counterexample": counterexample,
                "structural_holds": v.structural_holds,
                "structural_route": v.structural_route,
            });
            let mut text = format!("cp2 {}\n", v.holds);
            if let Some(c) = v.counterexample {
                text.push_str(&format!(
                    "counterexample x = {}, y = {}, o(x) = {}, o(y) = {}, o(xy) = {}\n",
                    perm_text(&g, c.x),
                    perm_text(&g, c.y),
                    c.order_x,
                    c.order_y,
                    c.order_xy
                ));
            }
            text.push_str(&format!(
                "structural route {}\n",
                value["structural_route"].as_str().unwrap_or("")
            ));
            emit(out, cli.format, &value, text).map_err(io)?;
        }
        Command::Nlcm { spec } => {
            let g = build(spec, caps)?;
            let report = nlcm_check(&g, caps.lattice).map_err(usage)?;
            let mut value = serde_json::to_value(&report).expect("json");
            value["structure_holds"] = json!(report.structure_holds(g.order()));
            let text = format!(
                "nlcm {}\nlcm-group {}\nsections checked {}\nstructure holds {}\n",
                report.is_nlcm,
                report.is_lcm_group,
                report.sections_checked,
                report.structure_holds(g.order())
            );
            emit(out, cli.format, &value, text).map_err(io)?;
        }
        Command::Verify {
            campaign,
            filter,
            report,
        } => {
            let tag = filter.as_deref();
            let result = if campaign == "all" {
                run_all(tag, caps)
            } else {
                let c: Campaign = campaign.parse().map_err(usage)?;
                run_campaign(c, tag, caps)
            };
            let value = result.to_json();
            if let Some(path) = report {
                let body = serde_json::to_string_pretty(&value).expect("json") + "\n";
                std::fs::write(path, body)
                    .map_err(|e| usage(format!("{}: {e}", path.display())))?;
            }
            emit(out, cli.format, &value, result.to_text()).map_err(io)?;
            return Ok(if result.passed() {
                EXIT_OK
            } else {
                EXIT_FAILURE
            });
        }
        Command::Corpus {
            action: CorpusAction::List,
        } => {
            let entries = corpus::corpus();
            let value = serde_json::to_value(&entries).expect("json");
            let text: String = entries
                .iter()
                .map(|e| format!("{:<24} {}\n", e.name, e.tags.join(",")))
                .collect();
            emit(out, cli.format, &value, text).map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

fn text_lines(value: &Value) -> String {
    let Value::Object(map) = value else {
        return format!("{value}\n");
    };
    map.iter()
        .map(|(k, v)| match v {
            Value::String(s) => format!("{k} {s}\n"),
            other => format!("{k} {other}\n"),
        })
        .collect()
}
