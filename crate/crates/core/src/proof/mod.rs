//! DRAT proof logging with extension variables, and a checker.

mod check;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

pub use check::{check_proof, verify_steps, CheckError, CheckReport};

use crate::formula::{Lit, Var};

/// One proof line in DIMACS numbering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProofEvent {
    Add(Vec<i32>),
    Delete(Vec<i32>),
}

impl ProofEvent {
    pub fn lits(&self) -> &[i32] {
        match self {
            ProofEvent::Add(c) | ProofEvent::Delete(c) => c,
        }
    }
}

enum Sink {
    Memory(Vec<ProofEvent>),
    Writer(Box<dyn Write + Send>),
}

/// Receives proof lines from a solver, either into memory or as DRAT text.
pub struct ProofLog {
    sink: Sink,
    adds: u64,
    deletes: u64,
    max_var: u32,
}

impl std::fmt::Debug for ProofLog {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ProofLog")
            .field("adds", &self.adds)
            .field("deletes", &self.deletes)
            .finish()
    }
}

impl ProofLog {
    pub fn in_memory() -> Self {
        Self::with_sink(Sink::Memory(Vec::new()))
    }

    pub fn to_writer<W: Write + Send + 'static>(w: W) -> Self {
        Self::with_sink(Sink::Writer(Box::new(BufWriter::new(w))))
    }

    pub fn to_file(path: impl AsRef<Path>) -> io::Result<Self> {
        Ok(Self::to_writer(File::create(path)?))
    }

    fn with_sink(sink: Sink) -> Self {
        ProofLog {
            sink,
            adds: 0,
            deletes: 0,
            max_var: 0,
        }
    }

    /// Marks variables `1..=n` as used, so none of them counts as fresh.
    pub fn reserve_vars(&mut self, n: usize) {
        self.max_var = self.max_var.max(n as u32);
    }

    pub fn num_adds(&self) -> u64 {
        self.adds
    }

    pub fn num_deletes(&self) -> u64 {
        self.deletes
    }

    /// The recorded events of an in-memory log.
    pub fn events(&self) -> Option<&[ProofEvent]> {
        match &self.sink {
            Sink::Memory(v) => Some(v),
            Sink::Writer(_) => None,
        }
    }

    pub fn into_events(self) -> Option<Vec<ProofEvent>> {
        match self.sink {
            Sink::Memory(v) => Some(v),
            Sink::Writer(_) => None,
        }
    }

    fn emit(&mut self, delete: bool, lits: &[Lit]) -> io::Result<()> {
        for l in lits {
            self.max_var = self.max_var.max(l.var().dimacs());
        }
        match &mut self.sink {
            Sink::Memory(v) => {
                let c = lits.iter().map(|l| l.to_dimacs()).collect();
                v.push(if delete {
                    ProofEvent::Delete(c)
                } else {
                    ProofEvent::Add(c)
                });
            }
            Sink::Writer(w) => {
                if delete {
                    w.write_all(b"d ")?;
                }
                for l in lits {
                    write!(w, "{} ", l.to_dimacs())?;
                }
                w.write_all(b"0\n")?;
            }
        }
        Ok(())
    }

    pub fn add(&mut self, lits: &[Lit]) -> io::Result<()> {
        self.adds += 1;
        self.emit(false, lits)
    }

    pub fn delete(&mut self, lits: &[Lit]) -> io::Result<()> {
        self.deletes += 1;
        self.emit(true, lits)
    }

    /// Writes the definition `z <-> l1 & l2` as three additions, each RAT on
    /// its first literal. Panics if `z` already occurred in the proof.
    pub fn extension(&mut self, z: Var, l1: Lit, l2: Lit) -> io::Result<()> {
        assert!(z.dimacs() > self.max_var, "extension variable {z} is not fresh");
        let zp = z.pos();
        self.add(&[zp, !l1, !l2])?;
        self.add(&[!zp, l1])?;
        self.add(&[!zp, l2])
    }

    pub fn flush(&mut self) -> io::Result<()> {
        match &mut self.sink {
            Sink::Memory(_) => Ok(()),
            Sink::Writer(w) => w.flush(),
        }
    }
}

/// Parses DRAT text. Comment lines start with `c`.
pub fn parse_drat(text: &str) -> Result<Vec<ProofEvent>, CheckError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let (delete, body) = match line.strip_prefix('d') {
            Some(rest) => (true, rest),
            None => (false, line),
        };
        let mut lits = Vec::new();
        let mut closed = false;
        for tok in body.split_whitespace() {
            if closed {
                return Err(CheckError::Parse {
                    line: i + 1,
                    msg: "text after terminating 0".into(),
                });
            }
            let v: i32 = tok.parse().map_err(|_| CheckError::Parse {
                line: i + 1,
                msg: format!("bad literal {tok:?}"),
            })?;
            if v == 0 {
                closed = true;
            } else {
                lits.push(v);
            }
        }
        if !closed {
            return Err(CheckError::Parse {
                line: i + 1,
                msg: "missing terminating 0".into(),
            });
        }
        out.push(if delete {
            ProofEvent::Delete(lits)
        } else {
            ProofEvent::Add(lits)
        });
    }
    Ok(out)
}
