use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};
use specyc::report::{to_rounded_value, ReportEnvelope};
use specyc::search::{ingest, Ingested};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Failure {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] specyc::Error),
    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: io::Error,
    },
}

impl Failure {
    pub fn io(context: impl Into<String>) -> impl FnOnce(io::Error) -> Failure {
        let context = context.into();
        move |source| Failure::Io { context, source }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) | Failure::Io { .. } => 2,
            Failure::Core(e) => core_exit_code(e),
        }
    }

    fn code(&self) -> &'static str {
        match self {
            Failure::Usage(_) => "Usage",
            Failure::Io { .. } => "Io",
            Failure::Core(e) => e.code(),
        }
    }

    pub fn report(&self) {
        diagnostic(self.code(), &self.to_string(), None);
    }
}

pub fn core_exit_code(e: &specyc::Error) -> u8 {
    use specyc::Error::*;
    match e {
        ResourceExhausted(_) => 3,
        MalformedGraph6(_)
        | OrderTooLarge(_)
        | IndexOutOfRange { .. }
        | LoopEdge(_)
        | BadParams(_)
        | EmbedTooLarge { .. }
        | OrderTooLargeForEnumeration(_)
        | UnknownName(_) => 2,
        _ => 1,
    }
}

/// One JSON object per line on standard error.
pub fn diagnostic(code: &str, message: &str, line: Option<usize>) {
    let mut v = json!({"level": "error", "code": code, "message": message});
    if let Some(line) = line {
        v["line"] = json!(line);
    }
    eprintln!("{v}");
}

pub fn info(verbose: bool, message: &str) {
    if verbose {
        eprintln!("{}", json!({"level": "info", "message": message}));
    }
}

pub fn read_input(path: Option<&Path>) -> Result<Ingested, Failure> {
    match path {
        Some(p) => {
            let f = File::open(p).map_err(Failure::io(format!("cannot open {}", p.display())))?;
            ingest(BufReader::new(f)).map_err(Failure::io("cannot read input"))
        }
        None => ingest(io::stdin().lock()).map_err(Failure::io("cannot read standard input")),
    }
}

/// Reports parse diagnostics on standard error; returns whether any occurred.
pub fn report_diagnostics(input: &Ingested) -> bool {
    for d in &input.diagnostics {
        diagnostic("MalformedGraph6", &d.message, Some(d.line));
    }
    !input.diagnostics.is_empty()
}

pub fn now() -> String {
    humantime::format_rfc3339_millis(std::time::SystemTime::now()).to_string()
}

/// Writes `text` to `out` or standard output.
pub fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => {
            std::fs::write(p, text).map_err(Failure::io(format!("cannot write {}", p.display())))
        }
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(Failure::io("cannot write standard output"))
        }
    }
}

pub struct Envelope {
    pub command: &'static str,
    pub config: Value,
    pub started_at: String,
}

impl Envelope {
    pub fn write<T: Serialize>(self, out: Option<&Path>, payload: &T) -> Result<(), Failure> {
        let payload = to_rounded_value(payload).map_err(|e| Failure::Usage(e.to_string()))?;
        let env = ReportEnvelope::new(self.command, self.config, self.started_at, now(), payload);
        let mut text = serde_json::to_string_pretty(&env).expect("JSON values serialize");
        text.push('\n');
        emit(out, &text)
    }
}

pub fn write_csv<R: Serialize>(
    path: &Path,
    rows: impl IntoIterator<Item = R>,
) -> Result<(), Failure> {
    let ctx = format!("cannot write {}", path.display());
    let mut w = csv::Writer::from_path(path).map_err(|e| Failure::Io {
        context: ctx.clone(),
        source: e.into(),
    })?;
    for r in rows {
        w.serialize(r).map_err(|e| Failure::Io {
            context: ctx.clone(),
            source: e.into(),
        })?;
    }
    w.flush().map_err(Failure::io(ctx))
}
