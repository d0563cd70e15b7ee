//! Game sessions and verification jobs, persisted as JSON files under a
//! data directory.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};
use std::time::{SystemTime, UNIX_EPOCH};

use esgame_core::referee::{GameMode, GameState, Trace};
use esgame_core::svg::OverlayBundle;
use esgame_core::verify::VerificationReport;
use esgame_core::{Error, GameVariant};
use serde::{Deserialize, Serialize};

pub const DATA_ENV: &str = "ESGAME_DATA";

/// Data directory from `ESGAME_DATA`, defaulting to `./data`.
pub fn data_dir() -> PathBuf {
    std::env::var_os(DATA_ENV).map(PathBuf::from).unwrap_or_else(|| PathBuf::from("data"))
}

pub fn now_secs() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0)
}

/// What is written to disk for a session.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SessionRecord {
    pub id: String,
    pub mode: GameMode,
    pub created_at: u64,
    /// Seed of the random player 1 in `random` mode.
    pub seed: u64,
    pub trace: Trace,
}

pub struct Session {
    pub id: String,
    pub mode: GameMode,
    pub created_at: u64,
    pub seed: u64,
    pub state: GameState,
    /// Overlay of the position at the cached step.
    pub overlay: Option<OverlayBundle>,
}

impl Session {
    pub fn record(&self) -> SessionRecord {
        SessionRecord {
            id: self.id.clone(),
            mode: self.mode,
            created_at: self.created_at,
            seed: self.seed,
            trace: self.state.to_trace(),
        }
    }

    fn from_record(r: SessionRecord) -> Result<Session, Error> {
        Ok(Session {
            state: GameState::from_trace(&r.trace)?,
            id: r.id,
            mode: r.mode,
            created_at: r.created_at,
            seed: r.seed,
            overlay: None,
        })
    }

    pub fn overlay(&mut self) -> Result<OverlayBundle, Error> {
        match &self.overlay {
            Some(o) if o.step == self.state.step() => Ok(o.clone()),
            _ => {
                let o = OverlayBundle::for_state(&self.state)?;
                self.overlay = Some(o.clone());
                Ok(o)
            }
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum JobStatus {
    Running,
    Done { reports: Vec<VerificationReport> },
    Failed { error: String },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Job {
    pub id: String,
    pub lemma: String,
    pub samples: usize,
    pub seed: u64,
    pub created_at: u64,
    #[serde(flatten)]
    pub status: JobStatus,
}

/// All sessions and jobs. Each session has its own lock so moves on one
/// game never wait on another.
pub struct Store {
    dir: PathBuf,
    sessions: Mutex<HashMap<String, Arc<Mutex<Session>>>>,
    jobs: Mutex<HashMap<String, Job>>,
}

impl Store {
    /// Opens `dir`, loading every saved session and finished job.
    pub fn open(dir: &Path) -> std::io::Result<Store> {
        std::fs::create_dir_all(dir.join("games"))?;
        std::fs::create_dir_all(dir.join("jobs"))?;
        let mut sessions = HashMap::new();
        for entry in std::fs::read_dir(dir.join("games"))? {
            let path = entry?.path();
            let Ok(text) = std::fs::read_to_string(&path) else { continue };
            let Ok(record) = serde_json::from_str::<SessionRecord>(&text) else { continue };
            if let Ok(s) = Session::from_record(record) {
                sessions.insert(s.id.clone(), Arc::new(Mutex::new(s)));
            }
        }
        let mut jobs = HashMap::new();
        for entry in std::fs::read_dir(dir.join("jobs"))? {
            let path = entry?.path();
            let Ok(text) = std::fs::read_to_string(&path) else { continue };
            if let Ok(job) = serde_json::from_str::<Job>(&text) {
                jobs.insert(job.id.clone(), job);
            }
        }
        Ok(Store { dir: dir.to_path_buf(), sessions: Mutex::new(sessions), jobs: Mutex::new(jobs) })
    }

    fn game_path(&self, id: &str) -> PathBuf {
        self.dir.join("games").join(format!("{id}.json"))
    }

    pub fn create(&self, variant: GameVariant, mode: GameMode, seed: u64) -> std::io::Result<Arc<Mutex<Session>>> {
        let id = uuid::Uuid::new_v4().simple().to_string();
        let session = Session { id: id.clone(), mode, created_at: now_secs(), seed, state: GameState::new(variant), overlay: None };
        self.save(&session)?;
        let handle = Arc::new(Mutex::new(session));
        self.sessions.lock().expect("store lock").insert(id, handle.clone());
        Ok(handle)
    }

    pub fn get(&self, id: &str) -> Option<Arc<Mutex<Session>>> {
        self.sessions.lock().expect("store lock").get(id).cloned()
    }

    pub fn ids(&self) -> Vec<String> {
        let mut ids: Vec<String> = self.sessions.lock().expect("store lock").keys().cloned().collect();
        ids.sort();
        ids
    }

    pub fn save(&self, session: &Session) -> std::io::Result<()> {
        let text = serde_json::to_string_pretty(&session.record()).expect("records serialize");
        write_atomic(&self.game_path(&session.id), &text)
    }

    pub fn delete(&self, id: &str) -> std::io::Result<bool> {
        let removed = self.sessions.lock().expect("store lock").remove(id).is_some();
        if removed {
            std::fs::remove_file(self.game_path(id)).or_else(|e| if e.kind() == std::io::ErrorKind::NotFound { Ok(()) } else { Err(e) })?;
        }
        Ok(removed)
    }

    pub fn put_job(&self, job: Job) -> std::io::Result<()> {
        if !matches!(job.status, JobStatus::Running) {
            let text = serde_json::to_string_pretty(&job).expect("jobs serialize");
            write_atomic(&self.dir.join("jobs").join(format!("{}.json", job.id)), &text)?;
        }
        self.jobs.lock().expect("store lock").insert(job.id.clone(), job);
        Ok(())
    }

    pub fn job(&self, id: &str) -> Option<Job> {
        self.jobs.lock().expect("store lock").get(id).cloned()
    }
}

fn write_atomic(path: &Path, text: &str) -> std::io::Result<()> {
    let tmp = path.with_extension("json.tmp");
    std::fs::write(&tmp, text)?;
    std::fs::rename(tmp, path)
}
