use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ordact_workbench::corpus::emit_fixture_corpus;
use ordact_workbench::error::{Error, Result};
use ordact_workbench::format::Workspace;
use ordact_workbench::tasks::{check_tasks, run_selected, TaskReport, CATALOG};

#[derive(Parser)]
#[command(name = "workbench", version, about = "Run checks and constructions on partial ordered actions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the tasks of a workspace file.
    Run {
        file: PathBuf,
        /// Only run tasks with this id or task name (repeatable).
        #[arg(long = "task")]
        tasks: Vec<String>,
        /// Write one report per task to DIR/<id>.json.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print the reports as a JSON array instead of one line per task.
        #[arg(long)]
        json: bool,
    },
    /// Write the bundled example workspaces into a directory.
    Fixtures { dir: PathBuf },
    /// List the task catalog.
    List,
}

fn io_error(path: &std::path::Path, source: std::io::Error) -> Error {
    Error::Io { path: path.display().to_string(), source }
}

fn summary_line(r: &TaskReport) -> String {
    let mut line = format!("{:<5} {} ({} on {})", r.status.to_string(), r.id, r.task, r.subject);
    if let Some(e) = &r.error {
        line.push_str(&format!(": {e}"));
    } else if let Some(v) = r.violations.first() {
        line.push_str(&format!(": {} {}", v.clause, v.detail));
        if r.violations.len() > 1 {
            line.push_str(&format!(" (+{} more)", r.violations.len() - 1));
        }
    }
    line
}

fn run(file: &PathBuf, tasks: &[String], out: Option<&PathBuf>, json: bool) -> Result<bool> {
    let text = std::fs::read_to_string(file).map_err(|e| io_error(file, e))?;
    let ws = Workspace::parse(&text)?;
    check_tasks(&ws.tasks)?;
    let reports = run_selected(&ws, tasks);
    if let Some(dir) = out {
        std::fs::create_dir_all(dir).map_err(|e| io_error(dir, e))?;
        for r in &reports {
            let path = dir.join(format!("{}.json", r.id));
            std::fs::write(&path, r.to_json() + "\n").map_err(|e| io_error(&path, e))?;
        }
    }
    if json {
        println!("{}", serde_json::to_string_pretty(&reports).expect("reports serialize"));
    } else {
        for r in &reports {
            println!("{}", summary_line(r));
        }
    }
    Ok(reports.iter().all(TaskReport::passed))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Run { file, tasks, out, json } => run(file, tasks, out.as_ref(), *json),
        Command::Fixtures { dir } => emit_fixture_corpus(dir).map(|paths| {
            for p in paths {
                println!("{}", p.display());
            }
            true
        }),
        Command::List => {
            for t in CATALOG {
                let flags = if t.flags.is_empty() { String::new() } else { format!(" [{}]", t.flags.join("|")) };
                println!("{}{}\n    {}", t.name, flags, t.summary);
            }
            Ok(true)
        }
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
