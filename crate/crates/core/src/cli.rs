//! Command line front end: the group-spec language, the analyze / survey /
//! batch subcommands, and exit-code policy.
//!
//! Exit codes: 0 success, 2 specification or usage error, 3 enumeration cap
//! exceeded, 4 survey does not match the published tables, 5 batch I/O error.

use crate::classify::{classify, classify_class_level, AnalyzeOptions, ClassifyError, StructureFlags};
use crate::group::{realize, GroupError, GroupSpec, DEFAULT_CAP};
use crate::report::{ReportDocument, TimingsDoc};
use crate::surveys::{
    alternating_survey, metacyclic_sr_survey, ALT_CUT_DEGREES, ALT_NON_USR_DEGREES,
    GK_CATALOG, METACYCLIC_SR_TABLE,
};
use crate::sympart::{AltClassTable, SymClassTable, SymError, MAX_DEGREE};
use crate::chars::CharError;
use clap::{Parser, Subcommand};
use std::io::Write;
use std::time::Instant;

// ------------------------------------------------------------------
// specification language
// ------------------------------------------------------------------

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
#[error("parse error at byte {position}: expected {expected}")]
pub struct ParseError {
    pub position: usize,
    pub expected: String,
}

struct SpecParser<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> SpecParser<'a> {
    fn new(text: &'a str) -> Self {
        SpecParser {
            text: text.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, expected: &str) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.pos,
            expected: expected.to_string(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> Result<(), ParseError> {
        self.skip_ws();
        if self.text.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(&format!("'{}'", c as char))
        }
    }

    fn number(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("a number");
        }
        std::str::from_utf8(&self.text[start..self.pos])
            .unwrap()
            .parse()
            .or_else(|_| self.err("a number within range"))
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len()
            && (self.text[self.pos].is_ascii_alphanumeric() || self.text[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("an identifier");
        }
        Ok(std::str::from_utf8(&self.text[start..self.pos])
            .unwrap()
            .to_string())
    }

    fn number_list(&mut self, terminators: &[u8]) -> Result<Vec<u64>, ParseError> {
        let mut out = vec![self.number()?];
        loop {
            match self.peek() {
                Some(b',') => {
                    self.pos += 1;
                    out.push(self.number()?);
                }
                Some(c) if terminators.contains(&c) => return Ok(out),
                _ => return self.err("',' or a list terminator"),
            }
        }
    }

    fn spec(&mut self) -> Result<GroupSpec, ParseError> {
        let word = self.ident()?;
        match word.to_ascii_lowercase().as_str() {
            "metacyclic" => {
                self.eat(b'(')?;
                let ns = self.number_list(&[b')'])?;
                self.eat(b')')?;
                if ns.len() != 4 {
                    return self.err("metacyclic(n,t,l,r) with four parameters");
                }
                Ok(GroupSpec::Metacyclic {
                    n: ns[0],
                    t: ns[1],
                    l: ns[2],
                    r: ns[3],
                })
            }
            "abelian" => {
                self.eat(b'(')?;
                let invariants = self.number_list(&[b')'])?;
                self.eat(b')')?;
                Ok(GroupSpec::Abelian { invariants })
            }
            "abc" => {
                self.eat(b'(')?;
                let invariants = self.number_list(&[b';'])?;
                self.eat(b';')?;
                let flat = self.number_list(&[b';'])?;
                self.eat(b';')?;
                let t = self.number()?;
                self.eat(b')')?;
                let k = invariants.len();
                if flat.len() != k * k {
                    return self.err("a k*k action matrix");
                }
                let action = flat.chunks(k).map(|row| row.to_vec()).collect();
                Ok(GroupSpec::AbelianByCyclic {
                    invariants,
                    action,
                    t,
                })
            }
            "product" => {
                self.eat(b'(')?;
                let mut parts = vec![self.spec()?];
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    parts.push(self.spec()?);
                }
                self.eat(b')')?;
                Ok(GroupSpec::DirectProduct(parts))
            }
            "perm" => {
                self.eat(b'(')?;
                let degree = self.number()? as usize;
                self.eat(b';')?;
                let mut generators = vec![self.perm_generator(degree)?];
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    generators.push(self.perm_generator(degree)?);
                }
                self.eat(b')')?;
                Ok(GroupSpec::Permutation { degree, generators })
            }
            "sym" => {
                self.eat(b'(')?;
                let n = self.number()?;
                self.eat(b')')?;
                Ok(GroupSpec::Named(format!("Sym({n})")))
            }
            "alt" => {
                self.eat(b'(')?;
                let n = self.number()?;
                self.eat(b')')?;
                Ok(GroupSpec::Named(format!("Alt({n})")))
            }
            _ => {
                // named literal: G1 G2 C<k> D<k> Q<k>
                let up = word.to_ascii_uppercase();
                let valid = up == "G1"
                    || up == "G2"
                    || (up.len() > 1
                        && matches!(up.as_bytes()[0], b'C' | b'D' | b'Q')
                        && up[1..].bytes().all(|b| b.is_ascii_digit()));
                if valid {
                    Ok(GroupSpec::Named(up))
                } else {
                    Err(ParseError {
                        position: self.pos - word.len(),
                        expected: "metacyclic, abelian, abc, product, perm, sym, alt, or a \
                                   named group (G1, G2, C<k>, D<k>, Q<k>)"
                            .into(),
                    })
                }
            }
        }
    }

    /// One generator as a product of cycles: (1 2 3)(4 5). Points are
    /// 1-based. `()` denotes the identity.
    fn perm_generator(&mut self, degree: usize) -> Result<Vec<usize>, ParseError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut saw_cycle = false;
        while self.peek() == Some(b'(') {
            self.pos += 1;
            saw_cycle = true;
            let mut points = Vec::new();
            loop {
                match self.peek() {
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    Some(c) if c.is_ascii_digit() => {
                        let p = self.number()? as usize;
                        if p == 0 || p > degree {
                            return self.err(&format!("a point between 1 and {degree}"));
                        }
                        points.push(p - 1);
                    }
                    Some(b',') => {
                        // tolerate comma-separated points inside a cycle
                        self.pos += 1;
                    }
                    _ => return self.err("a point or ')'"),
                }
            }
            for w in 0..points.len() {
                let from = points[w];
                let to = points[(w + 1) % points.len()];
                images[from] = to;
            }
        }
        if !saw_cycle {
            return self.err("a cycle '('");
        }
        // validate the cycle product is a permutation (disjointness not
        // required, but images must be a bijection)
        let mut seen = vec![false; degree];
        for &img in &images {
            if seen[img] {
                return self.err("disjoint cycles forming a permutation");
            }
            seen[img] = true;
        }
        Ok(images)
    }
}

/// Parse a group specification; errors carry the byte offset.
pub fn parse_spec(text: &str) -> Result<GroupSpec, ParseError> {
    let mut p = SpecParser::new(text);
    let spec = p.spec()?;
    p.skip_ws();
    if p.pos != p.text.len() {
        return p.err("end of input");
    }
    Ok(spec)
}

// ------------------------------------------------------------------
// command line
// ------------------------------------------------------------------

#[derive(Parser, Debug)]
#[command(
    name = "cutgroups",
    about = "Decide rationality classes of finite groups with exact arithmetic",
    disable_help_subcommand = true
)]
struct Cli {
    /// Cap on the number of elements a realized group may have.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: u64,
    /// Override the working prime of the character table computation.
    #[arg(long, global = true)]
    dixon_prime: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Analyze one group specification and print the full report.
    Analyze {
        spec: String,
        #[arg(long)]
        json: bool,
        /// Include wall-clock timings (off by default so reports are
        /// byte-stable).
        #[arg(long)]
        timings: bool,
    },
    /// Run a classification survey: metacyclic-sr, alternating, gk-catalog.
    Survey {
        name: String,
        /// Largest alternating degree (alternating survey only).
        #[arg(long)]
        max: Option<u64>,
        /// Compare against the published tables; exits 4 on mismatch.
        #[arg(long)]
        expect: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Analyze one specification per line of a file, emitting JSON lines.
    Batch { file: std::path::PathBuf },
}

fn exit_code_for(e: &ClassifyError) -> i32 {
    match e {
        ClassifyError::Group(GroupError::OrderCapExceeded { .. }) => 3,
        ClassifyError::Group(_) => 2,
        ClassifyError::Chars(CharError::BadPrimeOverride { .. }) => 2,
        _ => 1,
    }
}

/// Run the CLI against explicit arguments and output sinks; returns the exit
/// code.
pub fn run(args: &[String], out: &mut dyn Write, errw: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let rendered = e.render().to_string();
            let _ = write!(errw, "{rendered}");
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let opts = AnalyzeOptions {
        cap: cli.cap,
        dixon: crate::chars::DixonOptions {
            prime_override: cli.dixon_prime,
        },
        with_validators: true,
    };
    match cli.command {
        Command::Analyze { spec, json, timings } => cmd_analyze(&spec, json, timings, &opts, out, errw),
        Command::Survey {
            name,
            max,
            expect,
            json,
        } => cmd_survey(&name, max, expect.as_deref(), json, &opts, out, errw),
        Command::Batch { file } => cmd_batch(&file, &opts, out, errw),
    }
}

fn analyze_to_report(
    spec: &GroupSpec,
    opts: &AnalyzeOptions,
) -> Result<crate::classify::GroupReport, ClassifyError> {
    // large symmetric and alternating degrees are served by cycle-type class
    // tables; everything else is realized
    if let GroupSpec::Named(name) = spec {
        let sym_n = name
            .strip_prefix("Sym(")
            .and_then(|s| s.strip_suffix(')'))
            .and_then(|s| s.parse::<u64>().ok());
        let alt_n = name
            .strip_prefix("Alt(")
            .and_then(|s| s.strip_suffix(')'))
            .and_then(|s| s.parse::<u64>().ok());
        let nonsolvable = StructureFlags {
            is_abelian: false,
            is_nilpotent: false,
            is_solvable: false,
        };
        if let Some(n) = sym_n {
            if n >= 10 {
                let t = SymClassTable::new(n).map_err(sym_to_classify)?;
                return Ok(classify_class_level(&t, Some(nonsolvable)));
            }
        }
        if let Some(n) = alt_n {
            if n >= 10 {
                let t = AltClassTable::new(n).map_err(sym_to_classify)?;
                return Ok(classify_class_level(&t, Some(nonsolvable)));
            }
        }
    }
    let g = realize(spec, opts.cap)?;
    classify(&g, opts)
}

fn sym_to_classify(e: SymError) -> ClassifyError {
    ClassifyError::Group(GroupError::InvalidSpec(e.to_string()))
}

fn cmd_analyze(
    spec_text: &str,
    json: bool,
    timings: bool,
    opts: &AnalyzeOptions,
    out: &mut dyn Write,
    errw: &mut dyn Write,
) -> i32 {
    let spec = match parse_spec(spec_text) {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(errw, "{e}");
            return 2;
        }
    };
    let started = Instant::now();
    let report = match analyze_to_report(&spec, opts) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(errw, "{e}");
            return exit_code_for(&e);
        }
    };
    let timing_doc = timings.then(|| TimingsDoc {
        total_ms: started.elapsed().as_millis(),
    });
    let doc = ReportDocument::from_report(spec.to_string(), &report, timing_doc);
    if json {
        let _ = writeln!(out, "{}", doc.to_json());
    } else {
        let _ = write!(out, "{}", doc.render_text());
    }
    0
}

fn cmd_survey(
    name: &str,
    max: Option<u64>,
    expect: Option<&str>,
    json: bool,
    opts: &AnalyzeOptions,
    out: &mut dyn Write,
    errw: &mut dyn Write,
) -> i32 {
    if let Some(e) = expect {
        if e != "paper" {
            let _ = writeln!(errw, "unknown --expect target '{e}' (only 'paper')");
            return 2;
        }
    }
    match name {
        "metacyclic-sr" => cmd_survey_metacyclic(expect.is_some(), json, opts, out, errw),
        "alternating" => cmd_survey_alternating(max.unwrap_or(MAX_DEGREE), expect.is_some(), json, out, errw),
        "gk-catalog" => cmd_survey_gk(json, out),
        _ => {
            let _ = writeln!(
                errw,
                "unknown survey '{name}' (metacyclic-sr, alternating, gk-catalog)"
            );
            2
        }
    }
}

fn cmd_survey_metacyclic(
    expect: bool,
    json: bool,
    opts: &AnalyzeOptions,
    out: &mut dyn Write,
    errw: &mut dyn Write,
) -> i32 {
    let survey = match metacyclic_sr_survey(opts) {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(errw, "{e}");
            return exit_code_for(&e);
        }
    };
    #[derive(serde::Serialize)]
    struct RowDoc {
        n: u64,
        t: u64,
        l: u64,
        r: u64,
        order: u64,
        usr_residues: Vec<u64>,
        usr_modulus: u64,
        qsr: bool,
        paper_index: Option<usize>,
        paper_m: Option<u64>,
    }
    let rows: Vec<RowDoc> = survey
        .rows
        .iter()
        .map(|row| RowDoc {
            n: row.params.0,
            t: row.params.1,
            l: row.params.2,
            r: row.params.3,
            order: row.order,
            usr_residues: row.usr_m_set.residues.clone(),
            usr_modulus: row.usr_m_set.modulus,
            qsr: row.qsr,
            paper_index: row.paper_index,
            paper_m: row.paper_index.and_then(|i| METACYCLIC_SR_TABLE[i].1),
        })
        .collect();
    if json {
        let _ = writeln!(out, "{}", serde_json::to_string(&rows).unwrap());
    } else {
        let _ = writeln!(
            out,
            "semi-rational non-cut metacyclic groups: {} rows from {} parameter tuples",
            rows.len(),
            survey.scanned
        );
        for row in &rows {
            let m = row
                .paper_m
                .map_or("-".to_string(), |m| m.to_string());
            let usr = if row.usr_residues.is_empty() {
                "empty".to_string()
            } else {
                format!("{:?} mod {}", row.usr_residues, row.usr_modulus)
            };
            let _ = writeln!(
                out,
                "  metacyclic({},{},{},{})  order {:>3}  m={m:<3} usr {usr}",
                row.n, row.t, row.l, row.r, row.order
            );
        }
    }
    if !expect {
        return 0;
    }
    let mut problems = Vec::new();
    if survey.rows.len() != 18 {
        problems.push(format!("expected 18 rows, found {}", survey.rows.len()));
    }
    let mut seen = vec![false; METACYCLIC_SR_TABLE.len()];
    for row in &survey.rows {
        match row.paper_index {
            None => problems.push(format!("row {:?} matches no published presentation", row.params)),
            Some(i) => {
                if seen[i] {
                    problems.push(format!("published presentation {i} matched twice"));
                }
                seen[i] = true;
                match METACYCLIC_SR_TABLE[i].1 {
                    Some(m) => {
                        if !row.usr_m_set.contains(m) {
                            problems.push(format!(
                                "row {:?}: published m={m} not in the usr set",
                                row.params
                            ));
                        }
                    }
                    None => {
                        if !row.usr_m_set.is_empty() {
                            problems.push(format!(
                                "row {:?}: expected an empty usr set",
                                row.params
                            ));
                        }
                        // these two rows are semi-rational only; uniform
                        // semi-rationality and quadratic rationality coincide
                        // for metacyclic groups, so both must be absent
                        if row.quadratic_rational || row.qsr {
                            problems.push(format!(
                                "row {:?}: expected not quadratic rational",
                                row.params
                            ));
                        }
                    }
                }
            }
        }
    }
    if !seen.iter().all(|&s| s) {
        problems.push("not every published presentation was matched".into());
    }
    if !survey.qr_usr_mismatches.is_empty() {
        problems.push(format!(
            "quadratic rational / uniformly semi-rational equivalence failed on {:?}",
            survey.qr_usr_mismatches
        ));
    }
    if problems.is_empty() {
        let _ = writeln!(out, "survey matches the published table");
        0
    } else {
        for p in &problems {
            let _ = writeln!(errw, "mismatch: {p}");
        }
        4
    }
}

fn cmd_survey_alternating(
    max: u64,
    expect: bool,
    json: bool,
    out: &mut dyn Write,
    errw: &mut dyn Write,
) -> i32 {
    let rows = match alternating_survey(max) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(errw, "{e}");
            return 2;
        }
    };
    if json {
        let _ = writeln!(out, "{}", serde_json::to_string(&rows).unwrap());
    } else {
        for row in &rows {
            let _ = writeln!(
                out,
                "  alt({:>2})  classes {:>4}  cut {:<5}  usr {}",
                row.n, row.classes, row.cut, row.usr
            );
        }
    }
    if !expect {
        return 0;
    }
    let mut problems = Vec::new();
    for row in &rows {
        let want_cut = ALT_CUT_DEGREES.contains(&row.n);
        let want_usr = !ALT_NON_USR_DEGREES.contains(&row.n);
        if row.cut != want_cut {
            problems.push(format!("alt({}): cut = {}, expected {}", row.n, row.cut, want_cut));
        }
        if row.usr != want_usr {
            problems.push(format!("alt({}): usr = {}, expected {}", row.n, row.usr, want_usr));
        }
    }
    if problems.is_empty() {
        let _ = writeln!(out, "survey matches the published lists");
        0
    } else {
        for p in &problems {
            let _ = writeln!(errw, "mismatch: {p}");
        }
        4
    }
}

fn cmd_survey_gk(json: bool, out: &mut dyn Write) -> i32 {
    #[derive(serde::Serialize)]
    struct EntryDoc {
        label: String,
        vertices: &'static [u64],
        edges: &'static [(u64, u64)],
        realizability_open: bool,
    }
    let entries: Vec<EntryDoc> = GK_CATALOG
        .iter()
        .map(|e| EntryDoc {
            label: e.label.to_string(),
            vertices: e.vertices,
            edges: e.edges,
            realizability_open: e.realizability_open,
        })
        .collect();
    if json {
        let _ = writeln!(out, "{}", serde_json::to_string(&entries).unwrap());
    } else {
        for e in &entries {
            let tag = if e.realizability_open { " (realizability open)" } else { "" };
            let _ = writeln!(
                out,
                "  ({})  vertices {:?}  edges {:?}{tag}",
                e.label, e.vertices, e.edges
            );
        }
    }
    0
}

fn cmd_batch(
    path: &std::path::Path,
    opts: &AnalyzeOptions,
    out: &mut dyn Write,
    errw: &mut dyn Write,
) -> i32 {
    let content = match std::fs::read_to_string(path) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(errw, "cannot read {}: {e}", path.display());
            return 5;
        }
    };
    for (lineno, line) in content.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let result = parse_spec(trimmed)
            .map_err(|e| (2, e.to_string()))
            .and_then(|spec| {
                analyze_to_report(&spec, opts)
                    .map(|r| ReportDocument::from_report(spec.to_string(), &r, None))
                    .map_err(|e| (exit_code_for(&e), e.to_string()))
            });
        match result {
            Ok(doc) => {
                let _ = writeln!(out, "{}", doc.to_json());
            }
            Err((class, message)) => {
                let err_doc = serde_json::json!({
                    "error": {
                        "line": lineno + 1,
                        "spec": trimmed,
                        "exit_class": class,
                        "message": message,
                    }
                });
                let _ = writeln!(out, "{err_doc}");
            }
        }
    }
    0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        assert_eq!(
            parse_spec("metacyclic(5,2,5,4)").unwrap(),
            GroupSpec::Metacyclic { n: 5, t: 2, l: 5, r: 4 }
        );
        assert_eq!(
            parse_spec("product(C3, C4)").unwrap(),
            GroupSpec::DirectProduct(vec![
                GroupSpec::Named("C3".into()),
                GroupSpec::Named("C4".into())
            ])
        );
        assert_eq!(
            parse_spec("alt(13)").unwrap(),
            GroupSpec::Named("Alt(13)".into())
        );
        assert_eq!(
            parse_spec(" abelian( 8 , 2 ) ").unwrap(),
            GroupSpec::Abelian { invariants: vec![8, 2] }
        );
        let p = parse_spec("perm(4; (1 2), (1 2 3 4))").unwrap();
        match p {
            GroupSpec::Permutation { degree, generators } => {
                assert_eq!(degree, 4);
                assert_eq!(generators[0], vec![1, 0, 2, 3]);
                assert_eq!(generators[1], vec![1, 2, 3, 0]);
            }
            _ => panic!("expected permutation spec"),
        }
    }

    #[test]
    fn parse_errors_have_positions() {
        let e = parse_spec("metacyclic(5,2").unwrap_err();
        assert_eq!(e.position, 14);
        let e = parse_spec("frobnicate(3)").unwrap_err();
        assert_eq!(e.position, 0);
        let e = parse_spec("abelian(2) trailing").unwrap_err();
        assert!(e.expected.contains("end of input"));
        assert!(parse_spec("perm(3; (1 4))").is_err());
    }

    fn run_cli(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv: Vec<String> = std::iter::once("cutgroups".to_string())
            .chain(args.iter().map(|s| s.to_string()))
            .collect();
        let code = run(&argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn analyze_exit_codes() {
        let (code, out, _) = run_cli(&["analyze", "C12", "--json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["flags"]["cut"], false);
        assert_eq!(v["rho"], 1);
        let (code, _, _) = run_cli(&["analyze", "metacyclic(5,2"]);
        assert_eq!(code, 2);
        let (code, _, _) = run_cli(&["analyze", "--cap", "50", "C100"]);
        assert_eq!(code, 3);
    }

    #[test]
    fn analyze_virtual_alternating() {
        let (code, out, _) = run_cli(&["analyze", "alt(13)", "--json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["flags"]["cut"], false);
        assert_eq!(v["flags"]["usr"], true);
        assert!(v["flags"]["quadratic_rational"].is_null());
        let (code, _, _) = run_cli(&["analyze", "alt(23)"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn survey_alternating_bounds() {
        let (code, _, _) = run_cli(&["survey", "alternating", "--max", "23"]);
        assert_eq!(code, 2);
        let (code, out, _) = run_cli(&["survey", "alternating", "--max", "9", "--expect", "paper"]);
        assert_eq!(code, 0, "{out}");
    }

    #[test]
    fn survey_unknown() {
        let (code, _, _) = run_cli(&["survey", "nonesuch"]);
        assert_eq!(code, 2);
    }
}
