//! Write-ahead intent records.
//!
//! A transaction is a list of file writes and removals relative to the store
//! root. It is first written to `journal/intent.json.tmp`, synced, and renamed
//! to `journal/intent.json`; that rename is the commit point. Each operation
//! is then applied through a temporary file and a rename, and the intent is
//! removed. [`recover`] replays a committed intent and discards an
//! uncommitted one.

use std::fs::{self, File};
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

pub const JOURNAL_DIR: &str = "journal";
const INTENT: &str = "intent.json";
const INTENT_TMP: &str = "intent.json.tmp";
const TMP_SUFFIX: &str = ".tmp";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase")]
pub enum Op {
    Write { path: String, content: String },
    Remove { path: String },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Intent {
    pub ops: Vec<Op>,
}

/// What a fault hook asks the transaction to do before a step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaultAction {
    Proceed,
    /// Report an I/O error; the store cleans up as it would for a real one.
    Fail,
    /// Stop dead, leaving the disk as is. The store refuses further use.
    Crash,
}

/// Called with the step number and a label before every durable step.
pub type FaultHook = Box<dyn FnMut(usize, &str) -> FaultAction + Send>;

#[derive(Debug)]
pub enum TxError {
    Io { committed: bool, error: io::Error },
    Crash { committed: bool },
}

impl TxError {
    pub fn committed(&self) -> bool {
        match self {
            TxError::Io { committed, .. } | TxError::Crash { committed } => *committed,
        }
    }
}

fn sync_dir(dir: &Path) -> io::Result<()> {
    // Directory handles cannot be synced on every platform.
    match File::open(dir) {
        Ok(f) => f.sync_all().or(Ok(())),
        Err(_) => Ok(()),
    }
}

fn write_synced(path: &Path, content: &[u8]) -> io::Result<()> {
    let mut f = File::create(path)?;
    f.write_all(content)?;
    f.sync_all()
}

fn tmp_path(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(TMP_SUFFIX);
    PathBuf::from(s)
}

fn parent(path: &Path) -> &Path {
    path.parent().unwrap_or(Path::new("."))
}

struct Runner<'h> {
    hook: Option<&'h mut FaultHook>,
    step: usize,
    committed: bool,
}

impl Runner<'_> {
    fn step(&mut self, label: &str) -> Result<(), TxError> {
        let n = self.step;
        self.step += 1;
        let action = match self.hook.as_mut() {
            Some(hook) => hook(n, label),
            None => FaultAction::Proceed,
        };
        match action {
            FaultAction::Proceed => Ok(()),
            FaultAction::Fail => Err(TxError::Io {
                committed: self.committed,
                error: io::Error::other(format!("injected fault at step {n} ({label})")),
            }),
            FaultAction::Crash => Err(TxError::Crash {
                committed: self.committed,
            }),
        }
    }

    fn io<T>(&self, r: io::Result<T>) -> Result<T, TxError> {
        r.map_err(|error| TxError::Io {
            committed: self.committed,
            error,
        })
    }
}

/// Number of fault-hook steps a transaction of `intent` goes through.
pub fn step_count(intent: &Intent) -> usize {
    let apply: usize = intent
        .ops
        .iter()
        .map(|op| match op {
            Op::Write { .. } => 2,
            Op::Remove { .. } => 1,
        })
        .sum();
    apply + 3
}

/// Runs `intent` against `root`. On error, [`TxError::committed`] tells
/// whether the intent reached the commit point.
pub fn execute(root: &Path, intent: &Intent, hook: Option<&mut FaultHook>) -> Result<(), TxError> {
    let mut run = Runner {
        hook,
        step: 0,
        committed: false,
    };
    let journal = root.join(JOURNAL_DIR);
    let body = serde_json::to_vec(intent).map_err(|e| TxError::Io {
        committed: false,
        error: io::Error::other(e),
    })?;

    run.step("journal:write")?;
    run.io(write_synced(&journal.join(INTENT_TMP), &body))?;
    run.step("journal:commit")?;
    run.io(fs::rename(journal.join(INTENT_TMP), journal.join(INTENT)))?;
    run.io(sync_dir(&journal))?;
    run.committed = true;

    for (i, op) in intent.ops.iter().enumerate() {
        match op {
            Op::Write { path, content } => {
                let target = root.join(path);
                let tmp = tmp_path(&target);
                run.step(&format!("apply:{i}:stage {path}"))?;
                run.io(write_synced(&tmp, content.as_bytes()))?;
                run.step(&format!("apply:{i}:rename {path}"))?;
                run.io(fs::rename(&tmp, &target))?;
                run.io(sync_dir(parent(&target)))?;
            }
            Op::Remove { path } => {
                let target = root.join(path);
                run.step(&format!("apply:{i}:remove {path}"))?;
                match fs::remove_file(&target) {
                    Ok(()) => run.io(sync_dir(parent(&target)))?,
                    Err(e) if e.kind() == io::ErrorKind::NotFound => {}
                    Err(error) => {
                        return Err(TxError::Io {
                            committed: run.committed,
                            error,
                        })
                    }
                }
            }
        }
    }

    run.step("journal:clear")?;
    run.io(fs::remove_file(journal.join(INTENT)))?;
    run.io(sync_dir(&journal))?;
    Ok(())
}

/// Brings the root back to a committed state: replays a committed intent,
/// drops an uncommitted one, and removes stray temporary files under `dirs`.
/// Returns whether an intent was replayed.
pub fn recover(root: &Path, dirs: &[PathBuf]) -> io::Result<bool> {
    let journal = root.join(JOURNAL_DIR);
    let mut replayed = false;
    match fs::read(journal.join(INTENT)) {
        Ok(bytes) => {
            let intent: Intent = serde_json::from_slice(&bytes)
                .map_err(|e| io::Error::new(io::ErrorKind::InvalidData, format!("unreadable intent: {e}")))?;
            for op in &intent.ops {
                match op {
                    Op::Write { path, content } => {
                        let target = root.join(path);
                        let tmp = tmp_path(&target);
                        write_synced(&tmp, content.as_bytes())?;
                        fs::rename(&tmp, &target)?;
                        sync_dir(parent(&target))?;
                    }
                    Op::Remove { path } => match fs::remove_file(root.join(path)) {
                        Ok(()) => {}
                        Err(e) if e.kind() == io::ErrorKind::NotFound => {}
                        Err(e) => return Err(e),
                    },
                }
            }
            fs::remove_file(journal.join(INTENT))?;
            sync_dir(&journal)?;
            replayed = true;
        }
        Err(e) if e.kind() == io::ErrorKind::NotFound => {}
        Err(e) => return Err(e),
    }
    match fs::remove_file(journal.join(INTENT_TMP)) {
        Ok(()) => {}
        Err(e) if e.kind() == io::ErrorKind::NotFound => {}
        Err(e) => return Err(e),
    }
    for dir in dirs {
        let Ok(entries) = fs::read_dir(dir) else { continue };
        for entry in entries {
            let path = entry?.path();
            if path.to_string_lossy().ends_with(TMP_SUFFIX) {
                fs::remove_file(&path)?;
            }
        }
    }
    Ok(replayed)
}
