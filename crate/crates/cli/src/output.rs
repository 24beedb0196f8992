use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use anyhow::Context;

use crate::failure::{CmdResult, Failure};

/// CSV destination: `--out` path or stdout.
pub fn open(out: Option<&Path>) -> CmdResult<Box<dyn Write>> {
    match out {
        Some(path) => {
            let file = File::create(path)
                .with_context(|| format!("cannot create {}", path.display()))
                .map_err(Failure::Config)?;
            Ok(Box::new(BufWriter::new(file)))
        }
        None => Ok(Box::new(BufWriter::new(io::stdout().lock()))),
    }
}

pub fn write_err(e: io::Error) -> Failure {
    Failure::Config(anyhow::Error::new(e).context("writing output"))
}

/// Fixed nine decimals, as in the reference table. Negative zero prints as zero.
pub fn fixed(x: f64) -> String {
    let s = format!("{x:.9}");
    if s.starts_with('-') && s[1..].bytes().all(|b| b == b'0' || b == b'.') {
        s[1..].to_string()
    } else {
        s
    }
}

/// Nine significant decimals in scientific notation.
pub fn sci(x: f64) -> String {
    if x == 0.0 {
        "0".to_string()
    } else {
        format!("{x:.9e}")
    }
}
