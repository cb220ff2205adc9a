//! Batch processing of declaration files.

use std::fmt::Write as _;
use std::path::Path;

use crate::checker::{Checker, Diagnostic, Mode};
use crate::semantics::Options;
use crate::surface::{
    elaborate, parse, parse_term, print::print_term_scoped, DeclKind, ElabError, ElabOptions,
    ParseError, STerm,
};
use crate::syntax::{is_neutral, Ctx, Term};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Command {
    #[default]
    Check,
    Normalize,
    Infer,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Human,
    /// One tab-separated record per declaration.
    Machine,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub allow_star: bool,
    pub proof_relevant: bool,
    pub depth_limit: usize,
    pub output: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> RunConfig {
        RunConfig {
            command: Command::Check,
            allow_star: false,
            proof_relevant: false,
            depth_limit: Options::default().depth_limit,
            output: OutputFormat::Human,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    Rejected = 1,
    UsageError = 2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    /// 1-based position of the declaration in the file.
    pub index: usize,
    pub verb: &'static str,
    pub line: usize,
    pub accepted: bool,
    /// Normal form, inferred type, or diagnostic text.
    pub payload: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub records: Vec<Record>,
    pub status: ExitStatus,
    pub output: String,
}

#[derive(Debug, thiserror::Error)]
enum Failure {
    #[error("{0}")]
    Elab(#[from] ElabError),
    #[error("{0}")]
    Check(Diagnostic),
}

/// An accepted typing judgement `ctx ⊢ term : ty`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Judgement {
    pub ctx: Ctx,
    pub ty: Term,
    pub term: Term,
}

/// A growing context of assumptions and definitions.
#[derive(Debug)]
pub struct Workspace {
    checker: Checker,
    star: ElabOptions,
    ctx: Ctx,
    // outermost first
    names: Vec<String>,
    /// Every accepted `define`, `check` and `normalize`, in order.
    pub judgements: Vec<Judgement>,
}

impl Default for Workspace {
    fn default() -> Workspace {
        Workspace::new(Mode::default(), Options::default())
    }
}

impl Workspace {
    pub fn new(mode: Mode, options: Options) -> Workspace {
        Workspace {
            checker: Checker::new(mode, options),
            star: ElabOptions {
                allow_star: mode.allow_star,
            },
            ctx: Ctx::new(),
            names: Vec::new(),
            judgements: Vec::new(),
        }
    }

    pub fn from_config(cfg: &RunConfig) -> Workspace {
        Workspace::new(
            Mode {
                allow_star: cfg.allow_star,
            },
            Options {
                proof_relevant: cfg.proof_relevant,
                depth_limit: cfg.depth_limit,
            },
        )
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    /// Names in scope, outermost first.
    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn checker(&self) -> &Checker {
        &self.checker
    }

    /// Parses and elaborates a term in the current scope.
    pub fn term(&self, src: &str) -> Result<Term, String> {
        let s = parse_term(src).map_err(|e| e.to_string())?;
        self.elab(&s).map_err(|f| self.render(&f))
    }

    /// Prints a term in the current scope.
    pub fn show(&self, t: &Term) -> String {
        print_term_scoped(t, &self.names, self.names.len())
    }

    /// Runs every declaration in `text`, extending the workspace.
    pub fn load(&mut self, text: &str, command: Command) -> Result<Vec<Record>, ParseError> {
        let file = parse(text)?;
        let mut records = Vec::new();
        for (k, decl) in file.decls.iter().enumerate() {
            let (accepted, payload) = match self.step(&decl.kind, command) {
                Ok(p) => (true, p),
                Err(f) => (false, Some(self.render(&f))),
            };
            records.push(Record {
                index: k + 1,
                verb: decl.verb(),
                line: decl.span.line,
                accepted,
                payload,
            });
        }
        Ok(records)
    }

    fn scope(&self) -> Vec<String> {
        self.names.iter().rev().cloned().collect()
    }

    fn elab(&self, s: &STerm) -> Result<Term, Failure> {
        Ok(elaborate(s, &self.scope(), self.star)?)
    }

    fn fail(&self, d: Diagnostic) -> Failure {
        Failure::Check(d)
    }

    fn render(&self, f: &Failure) -> String {
        match f {
            Failure::Elab(e) => e.to_string(),
            Failure::Check(d) => d.render_named(&self.names),
        }
    }

    /// Checks `t : A`, returning the elaborated term and normalized type.
    fn judge(&mut self, term: &STerm, ty: &STerm) -> Result<(Term, Term), Failure> {
        let a = self.elab(ty)?;
        let t = self.elab(term)?;
        let c = &self.checker;
        c.check_type(&self.ctx, &a).map_err(|d| self.fail(d))?;
        let v = c.nbe_type(&self.ctx, &a).map_err(|d| self.fail(d))?;
        c.check_term(&self.ctx, &v, &t).map_err(|d| self.fail(d))?;
        self.judgements.push(Judgement {
            ctx: self.ctx.clone(),
            ty: a,
            term: t.clone(),
        });
        Ok((t, v))
    }

    fn normal_form(&self, v: &Term, t: &Term) -> Result<String, Failure> {
        let n = self
            .checker
            .nbe_term(&self.ctx, v, t)
            .map_err(|d| self.fail(d))?;
        Ok(self.show(&n))
    }

    fn inferred(&self, t: &Term) -> Result<String, Failure> {
        let ty = self
            .checker
            .infer_type(&self.ctx, t)
            .map_err(|d| self.fail(d))?;
        Ok(self.show(&ty))
    }

    fn step(&mut self, kind: &DeclKind, command: Command) -> Result<Option<String>, Failure> {
        match kind {
            DeclKind::Assume { name, ty } => {
                let a = self.elab(ty)?;
                self.checker
                    .check_type(&self.ctx, &a)
                    .map_err(|d| self.fail(d))?;
                self.ctx.push(a);
                self.names.push(name.clone());
                Ok(None)
            }
            DeclKind::Define { name, ty, body } => {
                let (t, _) = self.judge(body, ty)?;
                let a = self.elab(ty)?;
                self.ctx.push(Term::sing(t, a));
                self.names.push(name.clone());
                Ok(None)
            }
            DeclKind::Check { term, ty } => {
                let (t, v) = self.judge(term, ty)?;
                match command {
                    Command::Check => Ok(None),
                    Command::Normalize => self.normal_form(&v, &t).map(Some),
                    Command::Infer if is_neutral(&t) => self.inferred(&t).map(Some),
                    Command::Infer => Ok(None),
                }
            }
            DeclKind::Normalize { term, ty } => {
                let (t, v) = self.judge(term, ty)?;
                match command {
                    Command::Infer if is_neutral(&t) => self.inferred(&t).map(Some),
                    _ => self.normal_form(&v, &t).map(Some),
                }
            }
            DeclKind::Infer { term } => {
                let t = self.elab(term)?;
                self.inferred(&t).map(Some)
            }
        }
    }
}

fn one_line(s: &str) -> String {
    s.split(['\t', '\n']).collect::<Vec<_>>().join(" ")
}

fn render(records: &[Record], format: OutputFormat) -> String {
    let mut out = String::new();
    for r in records {
        let verdict = if r.accepted { "ACCEPT" } else { "REJECT" };
        match format {
            OutputFormat::Machine => {
                let payload = r.payload.as_deref().map(one_line).unwrap_or_default();
                let _ = writeln!(out, "{}\t{}\t{verdict}\t{payload}", r.index, r.verb);
            }
            OutputFormat::Human => {
                let _ = writeln!(out, "{} (line {}): {verdict}", r.verb, r.line);
                if let Some(p) = &r.payload {
                    let _ = writeln!(out, "{p}");
                }
            }
        }
    }
    out
}

/// Runs every declaration in `text`.
pub fn run_source(cfg: &RunConfig, text: &str) -> Report {
    let mut ws = Workspace::from_config(cfg);
    let records = match ws.load(text, cfg.command) {
        Ok(r) => r,
        Err(e) => return parse_failure(&e),
    };
    let status = if records.iter().all(|r| r.accepted) {
        ExitStatus::Success
    } else {
        ExitStatus::Rejected
    };
    let output = render(&records, cfg.output);
    Report {
        records,
        status,
        output,
    }
}

fn parse_failure(e: &ParseError) -> Report {
    Report {
        records: Vec::new(),
        status: ExitStatus::UsageError,
        output: format!("parse error: {e}\n"),
    }
}

/// Reads and runs a declaration file.
pub fn run(cfg: &RunConfig, path: &Path) -> Report {
    match std::fs::read_to_string(path) {
        Ok(text) => run_source(cfg, &text),
        Err(e) => Report {
            records: Vec::new(),
            status: ExitStatus::UsageError,
            output: format!("cannot read {}: {e}\n", path.display()),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn machine(src: &str) -> Report {
        run_source(
            &RunConfig {
                output: OutputFormat::Machine,
                ..RunConfig::default()
            },
            src,
        )
    }

    #[test]
    fn identity_is_accepted() {
        let r = machine("check \\x. x : Nat -> Nat");
        assert_eq!(r.status, ExitStatus::Success);
        assert_eq!(r.output, "1\tcheck\tACCEPT\t\n");
    }

    #[test]
    fn singleton_normalization() {
        let r = machine("assume v : {zero : Nat}\nnormalize v : {zero : Nat}\n");
        assert_eq!(r.records[1].payload.as_deref(), Some("zero"));
    }

    #[test]
    fn star_is_rejected() {
        let r = machine("check box * : Prf (Enum 1)");
        assert_eq!(r.status, ExitStatus::Rejected);
        assert!(r.output.contains("StarInUserSyntax"));
        let r = run_source(
            &RunConfig {
                allow_star: true,
                ..RunConfig::default()
            },
            "check * : Prf (Enum 1)",
        );
        assert_eq!(r.status, ExitStatus::Success);
    }

    #[test]
    fn parse_errors_are_usage_errors() {
        let r = machine("check (");
        assert_eq!(r.status, ExitStatus::UsageError);
        assert!(r.records.is_empty());
    }

    #[test]
    fn definitions_unfold() {
        let src = "define two : Nat = 2\nnormalize suc two : Nat\ninfer two\n";
        let r = machine(src);
        assert_eq!(r.status, ExitStatus::Success, "{}", r.output);
        assert_eq!(r.records[1].payload.as_deref(), Some("3"));
        assert_eq!(r.records[2].payload.as_deref(), Some("{2 : Nat}"));
    }

    #[test]
    fn commands_add_payloads() {
        let src = "assume n : Nat\ncheck n : Nat\n";
        let cfg = |command| RunConfig {
            command,
            output: OutputFormat::Machine,
            ..RunConfig::default()
        };
        assert_eq!(
            run_source(&cfg(Command::Check), src).records[1].payload,
            None
        );
        assert_eq!(
            run_source(&cfg(Command::Normalize), src).records[1]
                .payload
                .as_deref(),
            Some("n")
        );
        assert_eq!(
            run_source(&cfg(Command::Infer), src).records[1]
                .payload
                .as_deref(),
            Some("Nat")
        );
    }

    #[test]
    fn rejected_assumptions_do_not_extend_scope() {
        let r = machine("assume x : zero\ncheck x : Nat\n");
        assert!(!r.records[0].accepted);
        assert!(r.records[1].payload.as_deref().unwrap().contains("unbound"));
    }

    #[test]
    fn human_format() {
        let r = run_source(
            &RunConfig::default(),
            "assume v : {zero : Nat}\nnormalize v : Nat\n",
        );
        assert_eq!(
            r.output,
            "assume (line 1): ACCEPT\nnormalize (line 2): ACCEPT\nzero\n"
        );
    }
}
