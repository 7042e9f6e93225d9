//! Command-line front end for the exact Askey-scheme toolkit.
//!
//! Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 a usage
//! or parse error.

mod args;
mod commands;
mod document;

use std::process::ExitCode;

use args::Args;
use commands::Usage;

const HELP: &str = "\
askey — exact construction, classification and verification of Askey-scheme families

USAGE:
    askey <command> [flags]

COMMANDS:
    construct   print u_n, the hypergeometric factor and the A/B recurrence table
    classify    print the degree triple, scheme node and normalized parameters
    verify      run the verification battery for a family or raw spec
    dual        print the dualized data sequences (h and x exchanged)
    limit       certify a registered q -> 1 limit case exactly
    graph       export the scheme graph (dot or json)

FLAGS:
    --family <name>        catalog family key or acronym (e.g. wilson, cdH)
    --params k=v[,k=v...]  family parameters; exact literals only (1/2, 3+1/4 i)
    --spec <file>          structured spec document instead of --family
    --n <n>                degree for construct (default 2)
    --nmax <n>             verification sweep bound (default 6)
    --K <k>                working depth for dual/limit (default 8)
    --perturb <d1..d4>     bump one g-coefficient before verifying
    --format <dot|json>    graph export format (default dot)
    --all-catalog          verify every catalog family at default parameters

EXIT CODES:
    0  all checks pass
    1  a mathematical check failed
    2  usage or parse error
";

fn run() -> Result<i32, Usage> {
    let args = Args::parse(std::env::args().skip(1)).map_err(Usage)?;
    match args.verb.as_deref() {
        Some("construct") => commands::cmd_construct(&args),
        Some("classify") => commands::cmd_classify(&args),
        Some("verify") => commands::cmd_verify(&args),
        Some("dual") => commands::cmd_dual(&args),
        Some("limit") => commands::cmd_limit(&args),
        Some("graph") => commands::cmd_graph(&args),
        Some("help") | None => {
            print!("{HELP}");
            Ok(0)
        }
        Some(other) => Err(Usage(format!(
            "unknown command {other:?}; see `askey help`"
        ))),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code as u8),
        Err(Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
