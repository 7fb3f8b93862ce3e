use std::process::ExitCode;

use ganita::report::Tree;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    InvalidInput,
    Inconclusive,
}

impl Status {
    fn name(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::InvalidInput => "invalid-input",
            Status::Inconclusive => "inconclusive",
        }
    }
}

/// Exit code 0: computed. 2: input rejected. 3: a limit was exceeded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Computed,
    BadInput,
    LimitExceeded,
}

impl From<Exit> for ExitCode {
    fn from(e: Exit) -> Self {
        ExitCode::from(match e {
            Exit::Computed => 0,
            Exit::BadInput => 2,
            Exit::LimitExceeded => 3,
        })
    }
}

#[derive(Debug)]
pub struct Envelope {
    pub command: &'static str,
    pub status: Status,
    pub result: Option<Tree>,
    pub notes: Vec<String>,
    pub exit: Exit,
    /// Replaces the generic outline in text mode.
    pub text: Option<String>,
}

impl Envelope {
    pub fn ok(command: &'static str, result: Tree) -> Self {
        Self {
            command,
            status: Status::Ok,
            result: Some(result),
            notes: Vec::new(),
            exit: Exit::Computed,
            text: None,
        }
    }

    pub fn inconclusive(command: &'static str, result: Tree) -> Self {
        Self {
            status: Status::Inconclusive,
            ..Self::ok(command, result)
        }
    }

    pub fn invalid(command: &'static str, note: impl Into<String>) -> Self {
        Self {
            command,
            status: Status::InvalidInput,
            result: None,
            notes: vec![note.into()],
            exit: Exit::BadInput,
            text: None,
        }
    }

    pub fn limit(command: &'static str, note: impl Into<String>) -> Self {
        Self {
            status: Status::Inconclusive,
            exit: Exit::LimitExceeded,
            ..Self::invalid(command, note)
        }
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn tree(&self) -> Tree {
        Tree::map()
            .entry("command", self.command)
            .entry("status", self.status.name())
            .entry("result", self.result.clone())
            .entry("notes", Tree::list(self.notes.iter().map(String::as_str)))
            .build()
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let mut s = self.tree().to_json();
            s.push('\n');
            return s;
        }
        match (&self.text, self.status) {
            (Some(body), Status::Ok | Status::Inconclusive) => {
                let mut out = format!("command: {}\nstatus: {}\n", self.command, self.status.name());
                out.push_str(body);
                if !self.notes.is_empty() {
                    out.push_str("notes:\n");
                    for n in &self.notes {
                        out.push_str(&format!("  - {n}\n"));
                    }
                }
                out
            }
            _ => self.tree().to_text(),
        }
    }
}
