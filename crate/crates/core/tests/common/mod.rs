#![allow(dead_code)]

use singtt::driver::{Command, Record, Workspace};
use singtt::{Mode, Options};

pub const WORKED: &str = include_str!("../corpus/worked.sing");
pub const VECTORS: &str = include_str!("../corpus/vectors.sing");
pub const ISO: &str = include_str!("../corpus/iso.sing");
pub const ISO_REJECT: &str = include_str!("../corpus/iso_reject.sing");
pub const SUBTYPING: &str = include_str!("../corpus/subtyping.sing");
pub const STAR: &str = include_str!("../corpus/star.sing");
pub const SING_WHERE: &str = include_str!("../corpus/sing_where.sing");

pub const ALL: [(&str, &str); 7] = [
    ("worked", WORKED),
    ("vectors", VECTORS),
    ("iso", ISO),
    ("iso_reject", ISO_REJECT),
    ("subtyping", SUBTYPING),
    ("star", STAR),
    ("sing_where", SING_WHERE),
];

/// Files whose declarations are all expected to be accepted in default mode.
pub const ACCEPTED: [(&str, &str); 4] = [
    ("worked", WORKED),
    ("vectors", VECTORS),
    ("iso", ISO),
    ("subtyping", SUBTYPING),
];

pub fn load_with(text: &str, allow_star: bool, command: Command) -> (Workspace, Vec<Record>) {
    let mut ws = Workspace::new(Mode { allow_star }, Options::default());
    let records = ws.load(text, command).expect("corpus parses");
    (ws, records)
}

pub fn load(text: &str) -> (Workspace, Vec<Record>) {
    load_with(text, false, Command::Normalize)
}

pub fn rejected(records: &[Record]) -> Vec<String> {
    records
        .iter()
        .filter(|r| !r.accepted)
        .map(|r| format!("line {}: {}", r.line, r.payload.clone().unwrap_or_default()))
        .collect()
}
