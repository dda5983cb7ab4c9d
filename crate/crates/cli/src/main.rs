use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use clap::error::ErrorKind;
use knotrecon_cli::{run, Cli, ErrorRecord, Format};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => e.exit(),
        Err(e) if wants_json() => {
            let record = ErrorRecord {
                kind: "UsageError".into(),
                message: e.render().to_string().trim_end().to_string(),
                site: None,
                trace: None,
            };
            let json = serde_json::to_string_pretty(&record).expect("error records serialize");
            let _ = writeln!(io::stderr().lock(), "{json}");
            return ExitCode::from(2);
        }
        Err(e) => e.exit(),
    };
    let format = cli.format;
    match run(&cli, &mut io::stdin().lock()) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            let _ = writeln!(stdout, "{}", out.trim_end());
            ExitCode::SUCCESS
        }
        Err(err) => {
            let record = err.record();
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&record).expect("error records serialize"),
                Format::Text => format!("error[{}]: {}", record.kind, record.message),
            };
            let _ = writeln!(io::stderr().lock(), "{text}");
            ExitCode::from(err.exit_code())
        }
    }
}

/// Whether the raw arguments ask for JSON, for reporting parse failures.
fn wants_json() -> bool {
    let args: Vec<String> = std::env::args().collect();
    args.iter().any(|a| a == "--format=json") || args.windows(2).any(|w| w[0] == "--format" && w[1] == "json")
}
