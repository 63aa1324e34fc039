//! `qha`: checks, conversions and cohomology on JSON structure files.

pub mod error;
pub mod report;
pub mod schema;

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use qha_core::algebroid::{enveloping_algebroid, truncated_polynomial, HopfAlgebroid};
use qha_core::coefficients::{
    check_ayd_algebroid, check_ayd_hopf, check_ayd_quasi_i, check_ayd_quasi_ii, check_contramodule_algebroid,
    check_contramodule_hopf, check_stability_algebroid, check_stability_hopf, check_stability_quasi,
    convert_i_to_ii, convert_ii_to_i, enveloping_dual_coefficient, unit_coefficient,
};
use qha_core::cyclic::{build_cocyclic_capped, unit_algebra, DEFAULT_MAX_DIM};
use qha_core::quasihopf::{
    cyclic_group_table, group_algebra, permutation_group_table, s3_table, sweedler_h4, twisted_dual_group_algebra,
    z2_cocycle, z2_non_cocycle,
};
use qha_core::{Category, CenterElement, CheckReport, Contramodule, Error, Field, Flavor, QuasiHopf, Theory};

use crate::error::{CliError, CliResult};
use crate::report::{CohomologySummary, InputRef, RunReport};
use crate::schema::{Body, ContramoduleSpec, Document, ModuleAlgebraSpec};

#[derive(Parser, Debug)]
#[command(name = "qha", version, about = "Exact checks for quasi-Hopf algebras, Hopf algebroids and their cyclic cohomology")]
pub struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Omit timing so that identical inputs give identical bytes.
    #[arg(long, global = true)]
    pub reproducible: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Verify every axiom of a quasi-Hopf algebra or Hopf algebroid.
    Check { structure: PathBuf },
    /// Contramodule and anti-Yetter-Drinfeld conditions of a coefficient.
    Ayd { structure: PathBuf, coefficient: PathBuf },
    /// Stability of a coefficient, directly and through the center.
    Stability { structure: PathBuf, coefficient: PathBuf },
    /// Convert a quasi-Hopf coefficient between type I and type II.
    Convert {
        structure: PathBuf,
        coefficient: PathBuf,
        #[arg(long)]
        to: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Hochschild or cyclic cohomology of `Hom_H(A^{⊗(n+1)}, M)`.
    Cohomology {
        structure: PathBuf,
        algebra: PathBuf,
        coefficient: PathBuf,
        #[arg(long, default_value_t = 4)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = TheoryArg::Cyclic)]
        theory: TheoryArg,
    },
    /// Write a built-in example as a structure file.
    Generate {
        builder: Builder,
        /// `Q` or `GF<p>`.
        #[arg(long, default_value = "Q")]
        field: String,
        /// Order of the cyclic group for `group-algebra`.
        #[arg(long)]
        order: Option<usize>,
        /// Permutation generators file `{"generators": [[...], ...]}` for `group-algebra`.
        #[arg(long)]
        table: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OmegaArg::Cocycle)]
        omega: OmegaArg,
        /// `k` in `k[x]/(x^k)` for `enveloping-algebroid`.
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Structure file the generated object lives over.
        #[arg(long)]
        structure: Option<PathBuf>,
        #[arg(long)]
        flavor: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TheoryArg {
    Hochschild,
    Cyclic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OmegaArg {
    Cocycle,
    NonCocycle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Builder {
    GroupAlgebra,
    S3,
    SweedlerH4,
    TwistedDual,
    EnvelopingAlgebroid,
    UnitAlgebra,
    UnitCoefficient,
    EnvelopingDualCoefficient,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let cap = match max_dim() {
        Ok(c) => c,
        Err(e) => return failure(&e),
    };
    match execute(&cli, cap) {
        Ok(Emit::Report(mut r)) => {
            if cli.reproducible {
                r.timing_ms = None;
            }
            let code = if r.passed { 0 } else { 1 };
            let stdout = if cli.pretty { r.render_pretty() } else { r.render_json() };
            Outcome { code, stdout, stderr: String::new() }
        }
        Ok(Emit::Document(text)) => Outcome {
            code: 0,
            stdout: text,
            stderr: String::new(),
        },
        Err(e) => failure(&e),
    }
}

fn failure(e: &CliError) -> Outcome {
    let body = serde_json::json!({"error": {"code": e.code(), "message": e.to_string()}});
    Outcome {
        code: 2,
        stdout: String::new(),
        stderr: format!("{body}\n"),
    }
}

/// `QHA_MAX_DIM`, defaulting to 4096.
pub fn max_dim() -> CliResult<usize> {
    match std::env::var("QHA_MAX_DIM") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("QHA_MAX_DIM must be a positive integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_DIM),
    }
}

enum Emit {
    Report(RunReport),
    Document(String),
}

struct Loaded {
    doc: Document,
    input: InputRef,
}

fn load(path: &Path) -> CliResult<Loaded> {
    let doc = schema::parse_file(path)?;
    let input = InputRef::new(&doc);
    Ok(Loaded { doc, input })
}

fn category_of(doc: &Document) -> CliResult<Category> {
    match &doc.body {
        Body::QuasiHopf(d) => Ok(Category::quasi(QuasiHopf::new(d.clone())?)),
        Body::HopfAlgebroid(d) => Ok(Category::algebroid(HopfAlgebroid::new(d.clone())?)),
        other => Err(CliError::Usage(format!(
            "expected a quasi_hopf or hopf_algebroid structure, got {}",
            other.kind()
        ))),
    }
}

fn coefficient_of(structure: &Loaded, cat: &Category, coef: &Loaded) -> CliResult<Contramodule> {
    same_field(structure, coef)?;
    let spec = match &coef.doc.body {
        Body::Contramodule(c) => c,
        other => return Err(CliError::Usage(format!("expected a contramodule, got {}", other.kind()))),
    };
    let algebroid_flavor = spec.flavor == Flavor::AlgebroidMu;
    let algebroid_cat = matches!(cat, Category::Algebroid(_));
    if algebroid_flavor != algebroid_cat {
        return Err(CliError::Usage(format!(
            "{} coefficient cannot be used with a {} structure",
            spec.flavor,
            structure.doc.body.kind()
        )));
    }
    spec.build(cat)
}

fn same_field(a: &Loaded, b: &Loaded) -> CliResult<()> {
    if a.doc.field != b.doc.field {
        return Err(CliError::Usage(format!(
            "{} is over {} but {} is over {}",
            a.doc.name, a.doc.field, b.doc.name, b.doc.field
        )));
    }
    Ok(())
}

fn quasi(cat: &Category) -> CliResult<&QuasiHopf> {
    cat.as_quasi()
        .ok_or_else(|| CliError::Usage("this command needs a quasi_hopf structure".into()))
}

fn execute(cli: &Cli, cap: usize) -> CliResult<Emit> {
    let start = Instant::now();
    let mut report = match &cli.command {
        Command::Check { structure } => {
            let s = load(structure)?;
            let checks = match category_of(&s.doc)? {
                Category::Quasi(h) => h.check_all(),
                Category::Algebroid(h) => h.check_all(),
            };
            RunReport::new("check", vec![s.input], checks)
        }
        Command::Ayd { structure, coefficient } => {
            let s = load(structure)?;
            let c = load(coefficient)?;
            let cat = category_of(&s.doc)?;
            let coef = coefficient_of(&s, &cat, &c)?;
            let checks = ayd_checks(&cat, &coef)?;
            RunReport::new("ayd", vec![s.input, c.input], checks)
        }
        Command::Stability { structure, coefficient } => {
            let s = load(structure)?;
            let c = load(coefficient)?;
            let cat = category_of(&s.doc)?;
            let coef = coefficient_of(&s, &cat, &c)?;
            let mut checks = match &cat {
                Category::Quasi(h) if coef.flavor() == Flavor::HopfMu => check_stability_hopf(h, &coef)?,
                Category::Quasi(h) => check_stability_quasi(h, &coef)?,
                Category::Algebroid(h) => check_stability_algebroid(h, &coef)?,
            };
            let center = CenterElement::new(cat.clone(), coef)?;
            checks.extend(center.check_stability_central()?);
            RunReport::new("stability", vec![s.input, c.input], checks)
        }
        Command::Convert {
            structure,
            coefficient,
            to,
            out,
        } => {
            let s = load(structure)?;
            let c = load(coefficient)?;
            let cat = category_of(&s.doc)?;
            let h = quasi(&cat)?;
            let coef = coefficient_of(&s, &cat, &c)?;
            let target = Flavor::parse(to).ok_or_else(|| CliError::Usage(format!("unknown flavor {to:?}")))?;
            let (there, back) = match (coef.flavor(), target) {
                (Flavor::QuasiTypeI, Flavor::QuasiTypeII) => {
                    let t = convert_i_to_ii(h, &coef)?;
                    let b = convert_ii_to_i(h, &t)?;
                    (t, b)
                }
                (Flavor::QuasiTypeII, Flavor::QuasiTypeI) => {
                    let t = convert_ii_to_i(h, &coef)?;
                    let b = convert_i_to_ii(h, &t)?;
                    (t, b)
                }
                (from, to) => {
                    return Err(CliError::Usage(format!("cannot convert {from} to {to}")));
                }
            };
            let mut checks = CheckReport::new();
            let witness = first_difference(coef.contraaction(), back.contraaction());
            checks.record("roundtrip", witness);
            let doc = Document {
                name: format!("{}_{}", c.doc.name, target.name()),
                field: c.doc.field,
                body: Body::Contramodule(ContramoduleSpec::from_contramodule(&there)),
            };
            if let Some(path) = out {
                write_file(path, &schema::to_json(&doc))?;
            }
            let mut r = RunReport::new("convert", vec![s.input, c.input], checks);
            r.output = Some(schema::to_value(&doc));
            r
        }
        Command::Cohomology {
            structure,
            algebra,
            coefficient,
            degree,
            theory,
        } => {
            let s = load(structure)?;
            let a = load(algebra)?;
            let c = load(coefficient)?;
            same_field(&s, &a)?;
            let cat = category_of(&s.doc)?;
            let coef = coefficient_of(&s, &cat, &c)?;
            let alg = match &a.doc.body {
                Body::ModuleAlgebra(spec) => spec.build(&cat)?,
                other => return Err(CliError::Usage(format!("expected a module_algebra, got {}", other.kind()))),
            };
            let center = CenterElement::new(cat.clone(), coef)?;
            let inputs = vec![s.input, a.input, c.input];
            let theory = match theory {
                TheoryArg::Hochschild => Theory::Hochschild,
                TheoryArg::Cyclic => Theory::Cyclic,
            };
            match build_cocyclic_capped(&center, &alg, degree + 1, cap) {
                Ok(module) => {
                    let checks = module.verify();
                    let result = match theory {
                        Theory::Hochschild => module.hochschild_cohomology(*degree)?,
                        Theory::Cyclic => module.cyclic_cohomology(*degree)?,
                    };
                    let mut r = RunReport::new("cohomology", inputs, checks);
                    r.cohomology = Some(CohomologySummary::new(&result, module.n_max));
                    r
                }
                Err(Error::IdentityFailure { relation, degree }) => {
                    let mut checks = CheckReport::new();
                    checks.record(&relation, Some(vec![degree]));
                    RunReport::new("cohomology", inputs, checks)
                }
                Err(e) => return Err(e.into()),
            }
        }
        Command::Generate {
            builder,
            field,
            order,
            table,
            omega,
            k,
            structure,
            flavor,
            out,
        } => {
            let doc = generate(*builder, field, *order, table.as_deref(), *omega, *k, structure.as_deref(), flavor.as_deref())?;
            let text = schema::to_json(&doc);
            if let Some(path) = out {
                write_file(path, &text)?;
                return Ok(Emit::Document(String::new()));
            }
            return Ok(Emit::Document(text));
        }
    };
    report.timing_ms = Some(start.elapsed().as_millis() as u64);
    Ok(Emit::Report(report))
}

fn ayd_checks(cat: &Category, coef: &Contramodule) -> CliResult<CheckReport> {
    let mut checks = CheckReport::new();
    match (cat, coef.flavor()) {
        (Category::Quasi(h), Flavor::HopfMu) => {
            checks.extend(check_contramodule_hopf(h, coef)?);
            checks.extend(check_ayd_hopf(h, coef)?);
        }
        (Category::Quasi(h), Flavor::QuasiTypeI) => checks.extend(check_ayd_quasi_i(h, coef)?),
        (Category::Quasi(h), Flavor::QuasiTypeII) => checks.extend(check_ayd_quasi_ii(h, coef)?),
        (Category::Algebroid(h), _) => {
            checks.extend(check_contramodule_algebroid(h, coef)?);
            checks.extend(check_ayd_algebroid(h, coef)?);
        }
        (_, f) => return Err(CliError::Usage(format!("flavor {f} does not match the structure"))),
    }
    Ok(checks)
}

fn first_difference(a: &qha_core::Matrix, b: &qha_core::Matrix) -> Option<Vec<usize>> {
    if a == b {
        return None;
    }
    let cols = a.cols();
    (0..a.rows() * cols)
        .find(|&k| a.get(k / cols, k % cols) != b.get(k / cols, k % cols))
        .map(|k| vec![k / cols, k % cols])
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

pub fn parse_field_arg(s: &str) -> CliResult<Field> {
    if s == "Q" {
        return Ok(Field::Rationals);
    }
    let p: u64 = s
        .strip_prefix("GF")
        .unwrap_or(s)
        .parse()
        .map_err(|_| CliError::Usage(format!("field must be Q or GF<p>, got {s:?}")))?;
    Field::prime(p).map_err(|_| CliError::NonPrime { p })
}

#[allow(clippy::too_many_arguments)]
fn generate(
    builder: Builder,
    field: &str,
    order: Option<usize>,
    table: Option<&Path>,
    omega: OmegaArg,
    k: usize,
    structure: Option<&Path>,
    flavor: Option<&str>,
) -> CliResult<Document> {
    let quasi_doc = |name: String, h: QuasiHopf| Document {
        name,
        field: h.field(),
        body: Body::QuasiHopf(h.data().clone()),
    };
    match builder {
        Builder::GroupAlgebra => {
            let f = parse_field_arg(field)?;
            let (name, t) = match (order, table) {
                (_, Some(path)) => (group_name(path), read_permutations(path)?),
                (Some(n), None) => (format!("kC{n}"), cyclic_group_table(n)),
                (None, None) => return Err(CliError::Usage("group-algebra needs --order or --table".into())),
            };
            Ok(quasi_doc(name, group_algebra(f, &t)?))
        }
        Builder::S3 => {
            let f = parse_field_arg(field)?;
            Ok(quasi_doc("kS3".into(), group_algebra(f, &s3_table())?))
        }
        Builder::SweedlerH4 => {
            let f = parse_field_arg(field)?;
            Ok(quasi_doc("H4".into(), sweedler_h4(f)))
        }
        Builder::TwistedDual => {
            let f = parse_field_arg(field)?;
            let (w, name) = match omega {
                OmegaArg::Cocycle => (z2_cocycle(f), "twisted_dual_Z2"),
                OmegaArg::NonCocycle => (z2_non_cocycle(f), "twisted_dual_Z2_non_cocycle"),
            };
            Ok(quasi_doc(name.into(), twisted_dual_group_algebra(f, &cyclic_group_table(2), &w)?))
        }
        Builder::EnvelopingAlgebroid => {
            let f = parse_field_arg(field)?;
            let h = enveloping_algebroid(&truncated_polynomial(f, k)?)?;
            Ok(Document {
                name: format!("enveloping_k[x]/(x^{k})"),
                field: f,
                body: Body::HopfAlgebroid(h.data().clone()),
            })
        }
        Builder::UnitAlgebra | Builder::UnitCoefficient | Builder::EnvelopingDualCoefficient => {
            let path = structure.ok_or_else(|| CliError::Usage("this builder needs --structure".into()))?;
            let s = load(path)?;
            let cat = category_of(&s.doc)?;
            let f = s.doc.field;
            match builder {
                Builder::UnitAlgebra => Ok(Document {
                    name: "unit_algebra".into(),
                    field: f,
                    body: Body::ModuleAlgebra(ModuleAlgebraSpec::from_algebra(&unit_algebra(&cat)?)),
                }),
                Builder::UnitCoefficient => {
                    let h = quasi(&cat)?;
                    let fl = match flavor {
                        Some(t) => Flavor::parse(t).ok_or_else(|| CliError::Usage(format!("unknown flavor {t:?}")))?,
                        None if h.is_hopf() => Flavor::HopfMu,
                        None => Flavor::QuasiTypeI,
                    };
                    let c = unit_coefficient(h, fl)?;
                    Ok(Document {
                        name: format!("unit_coefficient_{}", fl.name()),
                        field: f,
                        body: Body::Contramodule(ContramoduleSpec::from_contramodule(&c)),
                    })
                }
                _ => {
                    let h = cat
                        .as_algebroid()
                        .ok_or_else(|| CliError::Usage("needs a hopf_algebroid structure".into()))?;
                    let c = enveloping_dual_coefficient(h)?;
                    Ok(Document {
                        name: "enveloping_dual".into(),
                        field: f,
                        body: Body::Contramodule(ContramoduleSpec::from_contramodule(&c)),
                    })
                }
            }
        }
    }
}

fn group_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| format!("k[{}]", s.to_string_lossy()))
        .unwrap_or_else(|| "group_algebra".into())
}

fn read_permutations(path: &Path) -> CliResult<Vec<Vec<usize>>> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let v: Value = serde_json::from_str(&text).map_err(|e| CliError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let gens: Vec<Vec<usize>> = serde_json::from_value(
        v.get("generators")
            .cloned()
            .ok_or_else(|| CliError::schema("/generators", "missing"))?,
    )
    .map_err(|e| CliError::schema("/generators", e.to_string()))?;
    Ok(permutation_group_table(&gens)?.0)
}
