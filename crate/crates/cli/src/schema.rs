//! JSON structure files.
//!
//! Every document carries `kind`, `name` and `field`; scalars are strings.
//! Matrices are arrays of rows, vectors are flat arrays.

use std::path::Path;

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use qha_core::algebroid::HopfAlgebroidData;
use qha_core::cyclic::ModuleAlgebra;
use qha_core::{Biclosed, Contramodule, Field, Flavor, Matrix, Module, QuasiHopfData, Scalar};

use crate::error::{CliError, CliResult};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleSpec {
    pub dim: usize,
    /// One matrix per basis element of the acting algebra.
    pub action: Vec<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContramoduleSpec {
    pub flavor: Flavor,
    pub module: ModuleSpec,
    pub contraaction: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleAlgebraSpec {
    pub carrier: ModuleSpec,
    pub mult: Matrix,
    pub unit: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Body {
    QuasiHopf(QuasiHopfData),
    HopfAlgebroid(HopfAlgebroidData),
    Module(ModuleSpec),
    Contramodule(ContramoduleSpec),
    ModuleAlgebra(ModuleAlgebraSpec),
}

impl Body {
    pub fn kind(&self) -> &'static str {
        match self {
            Body::QuasiHopf(_) => "quasi_hopf",
            Body::HopfAlgebroid(_) => "hopf_algebroid",
            Body::Module(_) => "module",
            Body::Contramodule(_) => "contramodule",
            Body::ModuleAlgebra(_) => "module_algebra",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub name: String,
    pub field: Field,
    pub body: Body,
}

impl ModuleSpec {
    pub fn from_module(m: &Module) -> ModuleSpec {
        ModuleSpec {
            dim: m.dim(),
            action: m.actions().to_vec(),
        }
    }

    pub fn build(&self, cat: &dyn Biclosed) -> CliResult<Module> {
        if self.action.len() != cat.acting_dim() {
            return Err(CliError::DimensionMismatch {
                field: "action".into(),
                expected: cat.acting_dim(),
                found: self.action.len(),
            });
        }
        Ok(cat.module(self.dim, self.action.clone())?)
    }
}

impl ContramoduleSpec {
    pub fn from_contramodule(c: &Contramodule) -> ContramoduleSpec {
        ContramoduleSpec {
            flavor: c.flavor(),
            module: ModuleSpec::from_module(c.module()),
            contraaction: c.contraaction().clone(),
        }
    }

    pub fn build(&self, cat: &dyn Biclosed) -> CliResult<Contramodule> {
        let m = self.module.build(cat)?;
        Ok(Contramodule::new(m, self.contraaction.clone(), self.flavor)?)
    }
}

impl ModuleAlgebraSpec {
    pub fn from_algebra(a: &ModuleAlgebra) -> ModuleAlgebraSpec {
        ModuleAlgebraSpec {
            carrier: ModuleSpec::from_module(&a.carrier),
            mult: a.mult.clone(),
            unit: a.unit.clone(),
        }
    }

    pub fn build(&self, cat: &dyn Biclosed) -> CliResult<ModuleAlgebra> {
        let carrier = self.carrier.build(cat)?;
        let d = carrier.dim();
        let aa = cat.tensor(&carrier, &carrier)?.module.dim();
        let u = cat.unit_object().dim();
        check_shape("mult", &self.mult, d, aa)?;
        check_shape("unit", &self.unit, d, u)?;
        Ok(ModuleAlgebra {
            carrier,
            mult: self.mult.clone(),
            unit: self.unit.clone(),
        })
    }
}

fn check_shape(name: &str, m: &Matrix, rows: usize, cols: usize) -> CliResult<()> {
    if m.rows() != rows {
        return Err(CliError::DimensionMismatch {
            field: name.into(),
            expected: rows,
            found: m.rows(),
        });
    }
    if m.cols() != cols {
        return Err(CliError::DimensionMismatch {
            field: format!("{name}[0]"),
            expected: cols,
            found: m.cols(),
        });
    }
    Ok(())
}

// ---- reading ---------------------------------------------------------------

pub fn parse_file(path: &Path) -> CliResult<Document> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_str(&text)
}

pub fn parse_str(text: &str) -> CliResult<Document> {
    let value: Value = serde_json::from_str(text).map_err(|e| CliError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    parse_value(&value)
}

pub fn parse_value(value: &Value) -> CliResult<Document> {
    let obj = value
        .as_object()
        .ok_or_else(|| CliError::schema("", "document must be an object"))?;
    let field = parse_field(get(obj, "", "field")?)?;
    let name = get(obj, "", "name")?
        .as_str()
        .ok_or_else(|| CliError::schema("/name", "expected a string"))?
        .to_string();
    let kind = get(obj, "", "kind")?
        .as_str()
        .ok_or_else(|| CliError::schema("/kind", "expected a string"))?;
    let r = Reader { field };
    let body = match kind {
        "quasi_hopf" => Body::QuasiHopf(r.quasi(obj)?),
        "hopf_algebroid" => Body::HopfAlgebroid(r.algebroid(obj)?),
        "module" => Body::Module(r.module(obj, "")?),
        "contramodule" => {
            let flavor_text = r.string(obj, "", "flavor")?;
            let flavor = Flavor::parse(&flavor_text)
                .ok_or_else(|| CliError::schema("/flavor", format!("unknown flavor {flavor_text:?}")))?;
            let module = r.module(r.object(obj, "", "module")?, "/module")?;
            let n = module.action.len();
            let contraaction = r.matrix(obj, "", "contraaction", module.dim, module.dim * n)?;
            Body::Contramodule(ContramoduleSpec {
                flavor,
                module,
                contraaction,
            })
        }
        "module_algebra" => {
            let carrier = r.module(r.object(obj, "", "carrier")?, "/carrier")?;
            let mult = r.free_matrix(obj, "", "mult")?;
            let unit = r.free_matrix(obj, "", "unit")?;
            Body::ModuleAlgebra(ModuleAlgebraSpec { carrier, mult, unit })
        }
        other => return Err(CliError::schema("/kind", format!("unknown kind {other:?}"))),
    };
    Ok(Document { name, field, body })
}

fn get<'a>(obj: &'a Map<String, Value>, base: &str, key: &str) -> CliResult<&'a Value> {
    obj.get(key)
        .ok_or_else(|| CliError::schema(format!("{base}/{key}"), "missing"))
}

fn parse_field(v: &Value) -> CliResult<Field> {
    let t = v
        .get("type")
        .and_then(Value::as_str)
        .ok_or_else(|| CliError::schema("/field/type", "expected \"Q\" or \"GFp\""))?;
    match t {
        "Q" => Ok(Field::Rationals),
        "GFp" => {
            let p = v
                .get("p")
                .and_then(Value::as_u64)
                .ok_or_else(|| CliError::schema("/field/p", "expected a positive integer"))?;
            Field::prime(p).map_err(|_| CliError::NonPrime { p })
        }
        other => Err(CliError::schema("/field/type", format!("unknown field type {other:?}"))),
    }
}

struct Reader {
    field: Field,
}

impl Reader {
    fn object<'a>(&self, obj: &'a Map<String, Value>, base: &str, key: &str) -> CliResult<&'a Map<String, Value>> {
        get(obj, base, key)?
            .as_object()
            .ok_or_else(|| CliError::schema(format!("{base}/{key}"), "expected an object"))
    }

    fn string(&self, obj: &Map<String, Value>, base: &str, key: &str) -> CliResult<String> {
        Ok(get(obj, base, key)?
            .as_str()
            .ok_or_else(|| CliError::schema(format!("{base}/{key}"), "expected a string"))?
            .to_string())
    }

    fn size(&self, obj: &Map<String, Value>, base: &str, key: &str) -> CliResult<usize> {
        get(obj, base, key)?
            .as_u64()
            .map(|v| v as usize)
            .ok_or_else(|| CliError::schema(format!("{base}/{key}"), "expected a non-negative integer"))
    }

    fn array<'a>(&self, v: &'a Value, pointer: &str) -> CliResult<&'a Vec<Value>> {
        v.as_array().ok_or_else(|| CliError::schema(pointer, "expected an array"))
    }

    fn scalar(&self, v: &Value, pointer: &str) -> CliResult<Scalar> {
        let text = match v {
            Value::String(s) => s.clone(),
            Value::Number(n) if n.is_i64() => n.to_string(),
            _ => return Err(CliError::schema(pointer, "expected a scalar string")),
        };
        self.field.parse(&text).map_err(|_| CliError::ScalarParse {
            pointer: pointer.to_string(),
            text,
        })
    }

    fn vector_value(&self, v: &Value, pointer: &str, name: &str, len: usize) -> CliResult<Vec<Scalar>> {
        let items = self.array(v, pointer)?;
        if items.len() != len {
            return Err(CliError::DimensionMismatch {
                field: name.to_string(),
                expected: len,
                found: items.len(),
            });
        }
        items
            .iter()
            .enumerate()
            .map(|(i, x)| self.scalar(x, &format!("{pointer}/{i}")))
            .collect()
    }

    fn vector(&self, obj: &Map<String, Value>, base: &str, key: &str, len: usize) -> CliResult<Vec<Scalar>> {
        self.vector_value(get(obj, base, key)?, &format!("{base}/{key}"), key, len)
    }

    /// `count` vectors of length `len`.
    fn vectors(
        &self,
        obj: &Map<String, Value>,
        base: &str,
        key: &str,
        count: usize,
        len: usize,
    ) -> CliResult<Vec<Vec<Scalar>>> {
        let pointer = format!("{base}/{key}");
        let rows = self.array(get(obj, base, key)?, &pointer)?;
        if rows.len() != count {
            return Err(CliError::DimensionMismatch {
                field: key.to_string(),
                expected: count,
                found: rows.len(),
            });
        }
        rows.iter()
            .enumerate()
            .map(|(i, row)| self.vector_value(row, &format!("{pointer}/{i}"), &format!("{key}[{i}]"), len))
            .collect()
    }

    fn matrix(&self, obj: &Map<String, Value>, base: &str, key: &str, rows: usize, cols: usize) -> CliResult<Matrix> {
        let data = self.vectors(obj, base, key, rows, cols)?;
        if rows == 0 {
            return Ok(Matrix::zeros(self.field, 0, cols));
        }
        Ok(Matrix::from_rows(self.field, &data)?)
    }

    /// A matrix whose shape is checked later against the category.
    fn free_matrix(&self, obj: &Map<String, Value>, base: &str, key: &str) -> CliResult<Matrix> {
        let pointer = format!("{base}/{key}");
        let rows = self.array(get(obj, base, key)?, &pointer)?;
        let cols = match rows.first() {
            Some(r) => self.array(r, &format!("{pointer}/0"))?.len(),
            None => 0,
        };
        self.matrix(obj, base, key, rows.len(), cols)
    }

    fn module(&self, obj: &Map<String, Value>, base: &str) -> CliResult<ModuleSpec> {
        let dim = self.size(obj, base, "dim")?;
        let pointer = format!("{base}/action");
        let mats = self.array(get(obj, base, "action")?, &pointer)?;
        let action = mats
            .iter()
            .enumerate()
            .map(|(i, m)| {
                let p = format!("{pointer}/{i}");
                let rows = self.array(m, &p)?;
                if rows.len() != dim {
                    return Err(CliError::DimensionMismatch {
                        field: format!("action[{i}]"),
                        expected: dim,
                        found: rows.len(),
                    });
                }
                let data = rows
                    .iter()
                    .enumerate()
                    .map(|(r, row)| self.vector_value(row, &format!("{p}/{r}"), &format!("action[{i}][{r}]"), dim))
                    .collect::<CliResult<Vec<_>>>()?;
                if dim == 0 {
                    return Ok(Matrix::zeros(self.field, 0, 0));
                }
                Ok(Matrix::from_rows(self.field, &data)?)
            })
            .collect::<CliResult<Vec<_>>>()?;
        Ok(ModuleSpec { dim, action })
    }

    fn quasi(&self, obj: &Map<String, Value>) -> CliResult<QuasiHopfData> {
        let n = self.size(obj, "", "dim")?;
        Ok(QuasiHopfData {
            field: self.field,
            dim: n,
            mult: self.vector(obj, "", "mult", n * n * n)?,
            unit: self.vector(obj, "", "unit", n)?,
            comult: self.vectors(obj, "", "comult", n, n * n)?,
            counit: self.vector(obj, "", "counit", n)?,
            antipode: self.vectors(obj, "", "antipode", n, n)?,
            antipode_inv: self.vectors(obj, "", "antipode_inv", n, n)?,
            phi: self.vector(obj, "", "phi", n * n * n)?,
            phi_inv: self.vector(obj, "", "phi_inv", n * n * n)?,
            alpha: self.vector(obj, "", "alpha", n)?,
            beta: self.vector(obj, "", "beta", n)?,
        })
    }

    fn algebroid(&self, obj: &Map<String, Value>) -> CliResult<HopfAlgebroidData> {
        let r = self.size(obj, "", "base_dim")?;
        let n = self.size(obj, "", "dim")?;
        Ok(HopfAlgebroidData {
            field: self.field,
            base_dim: r,
            base_mult: self.vector(obj, "", "base_mult", r * r * r)?,
            base_unit: self.vector(obj, "", "base_unit", r)?,
            dim: n,
            mult: self.vector(obj, "", "mult", n * n * n)?,
            unit: self.vector(obj, "", "unit", n)?,
            s_l: self.vectors(obj, "", "s_l", r, n)?,
            t_l: self.vectors(obj, "", "t_l", r, n)?,
            s_r: self.vectors(obj, "", "s_r", r, n)?,
            t_r: self.vectors(obj, "", "t_r", r, n)?,
            delta_l: self.vectors(obj, "", "delta_l", n, n * n)?,
            delta_r: self.vectors(obj, "", "delta_r", n, n * n)?,
            eps_l: self.vectors(obj, "", "eps_l", n, r)?,
            eps_r: self.vectors(obj, "", "eps_r", n, r)?,
            antipode: self.vectors(obj, "", "antipode", n, n)?,
            antipode_inv: self.vectors(obj, "", "antipode_inv", n, n)?,
        })
    }
}

// ---- writing ---------------------------------------------------------------

fn field_value(f: Field) -> Value {
    match f {
        Field::Rationals => json!({"type": "Q"}),
        Field::Prime(p) => json!({"type": "GFp", "p": p}),
    }
}

fn vec_value(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|s| Value::String(s.to_text())).collect())
}

fn vecs_value(v: &[Vec<Scalar>]) -> Value {
    Value::Array(v.iter().map(|r| vec_value(r)).collect())
}

pub fn matrix_value(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|r| vec_value(m.row(r))).collect())
}

fn module_value(m: &ModuleSpec) -> Value {
    json!({
        "dim": m.dim,
        "action": m.action.iter().map(matrix_value).collect::<Vec<_>>(),
    })
}

pub fn to_value(doc: &Document) -> Value {
    let mut obj = match &doc.body {
        Body::QuasiHopf(d) => json!({
            "dim": d.dim,
            "mult": vec_value(&d.mult),
            "unit": vec_value(&d.unit),
            "comult": vecs_value(&d.comult),
            "counit": vec_value(&d.counit),
            "antipode": vecs_value(&d.antipode),
            "antipode_inv": vecs_value(&d.antipode_inv),
            "phi": vec_value(&d.phi),
            "phi_inv": vec_value(&d.phi_inv),
            "alpha": vec_value(&d.alpha),
            "beta": vec_value(&d.beta),
        }),
        Body::HopfAlgebroid(d) => json!({
            "base_dim": d.base_dim,
            "base_mult": vec_value(&d.base_mult),
            "base_unit": vec_value(&d.base_unit),
            "dim": d.dim,
            "mult": vec_value(&d.mult),
            "unit": vec_value(&d.unit),
            "s_l": vecs_value(&d.s_l),
            "t_l": vecs_value(&d.t_l),
            "s_r": vecs_value(&d.s_r),
            "t_r": vecs_value(&d.t_r),
            "delta_l": vecs_value(&d.delta_l),
            "delta_r": vecs_value(&d.delta_r),
            "eps_l": vecs_value(&d.eps_l),
            "eps_r": vecs_value(&d.eps_r),
            "antipode": vecs_value(&d.antipode),
            "antipode_inv": vecs_value(&d.antipode_inv),
        }),
        Body::Module(m) => module_value(m),
        Body::Contramodule(c) => json!({
            "flavor": c.flavor.name(),
            "module": module_value(&c.module),
            "contraaction": matrix_value(&c.contraaction),
        }),
        Body::ModuleAlgebra(a) => json!({
            "carrier": module_value(&a.carrier),
            "mult": matrix_value(&a.mult),
            "unit": matrix_value(&a.unit),
        }),
    };
    let map = obj.as_object_mut().expect("object literal");
    map.insert("kind".into(), Value::String(doc.body.kind().into()));
    map.insert("name".into(), Value::String(doc.name.clone()));
    map.insert("field".into(), field_value(doc.field));
    obj
}

pub fn to_json(doc: &Document) -> String {
    let mut s = serde_json::to_string_pretty(&to_value(doc)).expect("serializable");
    s.push('\n');
    s
}

/// SHA-256 of the compact serialization; object keys are sorted.
pub fn content_hash(v: &Value) -> String {
    let bytes = serde_json::to_vec(v).expect("serializable");
    Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect()
}
