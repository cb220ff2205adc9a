use std::io::Write;
use std::process::{Command, Output};

fn corpus(name: &str) -> String {
    format!("{}/../core/tests/corpus/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn singtt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_singtt"))
        .args(args)
        .output()
        .expect("run singtt")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn source(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn worked_example_normalizes() {
    let o = singtt(&["normalize", &corpus("worked.sing")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "assume (line 1): ACCEPT\ncheck (line 2): ACCEPT\nzero\nnormalize (line 3): ACCEPT\nzero\n"
    );
}

#[test]
fn machine_output() {
    let o = singtt(&["--machine", "check", &corpus("worked.sing")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "1\tassume\tACCEPT\t\n2\tcheck\tACCEPT\t\n3\tnormalize\tACCEPT\tzero\n"
    );
}

#[test]
fn lookup_returns_first_element() {
    let o = singtt(&["--machine", "normalize", &corpus("vectors.sing")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("\tnormalize\tACCEPT\tc{2,0}\n"), "{out}");
}

#[test]
fn rejection_exits_one() {
    let o = singtt(&["check", &corpus("iso_reject.sing")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("IrrelevanceViolation"));
}

#[test]
fn star_needs_flag() {
    let path = corpus("star.sing");
    assert_eq!(singtt(&["check", &path]).status.code(), Some(1));
    assert_eq!(
        singtt(&["--allow-star", "check", &path]).status.code(),
        Some(0)
    );
}

#[test]
fn infer_prints_types_of_neutrals() {
    let f = source("assume f : Nat -> {zero : Nat}\ninfer f zero\n");
    let o = singtt(&["--machine", "infer", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "1\tassume\tACCEPT\t\n2\tinfer\tACCEPT\t{zero : Nat}\n"
    );
}

#[test]
fn parse_errors_are_usage_errors() {
    let f = source("check \\x. : Nat\n");
    let o = singtt(&["check", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(!o.stderr.is_empty());
}

#[test]
fn missing_file_is_usage_error() {
    let o = singtt(&["check", "/nonexistent/file.sing"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_arguments_exit_two() {
    assert_eq!(singtt(&["frobnicate"]).status.code(), Some(2));
}
