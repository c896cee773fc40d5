//! Resumable state of an exhaustive search.
//!
//! Plain text, one record per line:
//!
//! ```text
//! turanbench-checkpoint v1
//! n 7
//! pattern A_
//! forbidden Bw
//! depth 5
//! optimum 12
//! enumerated 900
//! ffree 412
//! witness F??~w
//! pending D?{
//! ```
//!
//! `pending` lines are the unfinished frontier graphs at `depth`; `optimum` is
//! `-` until a graph has been scored.

use std::fs;
use std::io::Write;
use std::path::Path;

use num_bigint::BigUint;

use crate::error::{Error, Result};

const HEADER: &str = "turanbench-checkpoint v1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Checkpoint {
    pub n: usize,
    pub pattern: String,
    pub forbidden: String,
    pub depth: usize,
    pub optimum: Option<BigUint>,
    pub enumerated: u64,
    pub ffree: u64,
    pub witnesses: Vec<String>,
    pub pending: Vec<String>,
}

impl Checkpoint {
    pub fn render(&self) -> String {
        let mut s = String::new();
        s.push_str(HEADER);
        s.push('\n');
        s.push_str(&format!("n {}\n", self.n));
        s.push_str(&format!("pattern {}\n", self.pattern));
        s.push_str(&format!("forbidden {}\n", self.forbidden));
        s.push_str(&format!("depth {}\n", self.depth));
        match &self.optimum {
            Some(v) => s.push_str(&format!("optimum {v}\n")),
            None => s.push_str("optimum -\n"),
        }
        s.push_str(&format!("enumerated {}\n", self.enumerated));
        s.push_str(&format!("ffree {}\n", self.ffree));
        for w in &self.witnesses {
            s.push_str(&format!("witness {w}\n"));
        }
        for p in &self.pending {
            s.push_str(&format!("pending {p}\n"));
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let mut offset = 0;
        match lines.next() {
            Some(HEADER) => offset += HEADER.len() + 1,
            _ => return Err(Error::parse(0, "missing checkpoint header")),
        }
        let mut cp = Checkpoint {
            n: 0,
            pattern: String::new(),
            forbidden: String::new(),
            depth: 0,
            optimum: None,
            enumerated: 0,
            ffree: 0,
            witnesses: Vec::new(),
            pending: Vec::new(),
        };
        let mut seen_n = false;
        for line in lines {
            let (key, value) = line
                .split_once(' ')
                .ok_or_else(|| Error::parse(offset, format!("malformed record {line:?}")))?;
            let number = |v: &str| -> Result<u64> {
                v.parse()
                    .map_err(|_| Error::parse(offset + key.len() + 1, format!("bad number {v:?}")))
            };
            match key {
                "n" => {
                    cp.n = number(value)? as usize;
                    seen_n = true;
                }
                "pattern" => cp.pattern = value.to_string(),
                "forbidden" => cp.forbidden = value.to_string(),
                "depth" => cp.depth = number(value)? as usize,
                "optimum" if value == "-" => cp.optimum = None,
                "optimum" => {
                    cp.optimum = Some(value.parse().map_err(|_| {
                        Error::parse(offset + key.len() + 1, format!("bad count {value:?}"))
                    })?)
                }
                "enumerated" => cp.enumerated = number(value)?,
                "ffree" => cp.ffree = number(value)?,
                "witness" => cp.witnesses.push(value.to_string()),
                "pending" => cp.pending.push(value.to_string()),
                _ => return Err(Error::parse(offset, format!("unknown record {key:?}"))),
            }
            offset += line.len() + 1;
        }
        if !seen_n {
            return Err(Error::parse(offset, "checkpoint lacks an order record"));
        }
        Ok(cp)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Checkpoint::parse(&fs::read_to_string(path)?)
    }

    /// Writes through a temporary file so an interrupted write leaves the old state.
    pub fn store(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(self.render().as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, path)?;
        Ok(())
    }
}
