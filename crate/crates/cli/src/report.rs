use lattice_factor::verify::{Outcome, Status};
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub status: Status,
    pub witnesses: Vec<String>,
    pub payload: Value,
}

impl Report {
    pub fn pass(command: &str, inputs: Value, payload: Value) -> Self {
        Self {
            command: command.into(),
            inputs,
            status: Status::Pass,
            witnesses: Vec::new(),
            payload,
        }
    }

    /// A failing report always names at least one witness.
    pub fn fail(command: &str, inputs: Value, mut witnesses: Vec<String>, payload: Value) -> Self {
        if witnesses.is_empty() {
            witnesses.push("no witness recorded".into());
        }
        Self {
            command: command.into(),
            inputs,
            status: Status::Fail,
            witnesses,
            payload,
        }
    }

    pub fn from_outcome(command: &str, inputs: Value, o: Outcome) -> Self {
        match o.status {
            Status::Fail => Self::fail(command, inputs, o.witnesses, o.payload),
            status => Self {
                command: command.into(),
                inputs,
                status,
                witnesses: o.witnesses,
                payload: o.payload,
            },
        }
    }

    pub fn emit(&self, human: bool) {
        let text = if human {
            serde_json::to_string_pretty(self)
        } else {
            serde_json::to_string(self)
        };
        println!("{}", text.expect("reports serialize"));
    }
}
