//! On-disk catalog: one JSON document per family, coefficient formulas as
//! prefix-notation trees (`["mul", ["param", "alpha"], ["qpow", ["const", "2"]]]`).

use std::fs;
use std::path::{Path, PathBuf};

use askey_core::catalog::{self, Form, Group, NuSpec, RelationEntry};
use askey_core::constraints::ShiftData;
use askey_core::contiguity::RelationKind;
use askey_core::expr::{Expr, Var};
use askey_core::{scalar, FamilyId, Param};
use serde_json::{json, Map, Value};
use thiserror::Error;

pub const ENV_DIR: &str = "ASKEY_CATALOG_DIR";

#[derive(Debug, Error)]
pub enum CatalogFileError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Json { path: PathBuf, source: serde_json::Error },
    #[error("{path}: {msg}")]
    Format { path: PathBuf, msg: String },
}

/// `$ASKEY_CATALOG_DIR`, else the `data/catalog` directory of the source tree.
pub fn catalog_dir() -> PathBuf {
    match std::env::var_os(ENV_DIR) {
        Some(d) => PathBuf::from(d),
        None => Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/catalog"),
    }
}

pub fn expr_to_json(e: &Expr) -> Value {
    let list = |tag: &str, xs: &[Expr]| {
        let mut v = vec![json!(tag)];
        v.extend(xs.iter().map(expr_to_json));
        Value::Array(v)
    };
    match e {
        Expr::Const(c) => json!(["const", c.to_string()]),
        Expr::Param(v) => json!(["param", v.name()]),
        Expr::QPow(k) => json!(["qpow", expr_to_json(k)]),
        Expr::Add(xs) => list("add", xs),
        Expr::Mul(xs) => list("mul", xs),
        Expr::Div(a, b) => json!(["div", expr_to_json(a), expr_to_json(b)]),
        Expr::PochQ(a, k) => json!(["pochq", expr_to_json(a), expr_to_json(k)]),
        Expr::Poch(a, k) => json!(["poch", expr_to_json(a), expr_to_json(k)]),
        Expr::Pow(a, k) => json!(["pow", expr_to_json(a), expr_to_json(k)]),
        Expr::Ref(name) => json!(["ref", name]),
    }
}

pub fn expr_from_json(v: &Value) -> Result<Expr, String> {
    let arr = v.as_array().ok_or_else(|| format!("expression node must be an array, got {v}"))?;
    let (tag, args) = arr.split_first().ok_or("empty expression node")?;
    let tag = tag.as_str().ok_or("node tag must be a string")?;
    let text = |k: usize| args.get(k).and_then(Value::as_str).ok_or_else(|| format!("`{tag}` needs a string argument"));
    let sub = |k: usize| args.get(k).ok_or_else(|| format!("`{tag}` is missing an argument")).and_then(expr_from_json);
    let boxed = |k: usize| sub(k).map(Box::new);
    let arity = |n: usize| if args.len() == n { Ok(()) } else { Err(format!("`{tag}` takes {n} arguments")) };
    Ok(match tag {
        "const" => {
            arity(1)?;
            Expr::Const(scalar::parse(text(0)?).map_err(|e| e.to_string())?)
        }
        "param" => {
            arity(1)?;
            let name = text(0)?;
            Expr::Param(Var::from_name(name).ok_or_else(|| format!("unknown variable `{name}`"))?)
        }
        "ref" => {
            arity(1)?;
            Expr::Ref(text(0)?.to_string())
        }
        "qpow" => {
            arity(1)?;
            Expr::QPow(boxed(0)?)
        }
        "add" | "mul" => {
            let xs = args.iter().map(expr_from_json).collect::<Result<Vec<_>, _>>()?;
            if tag == "add" {
                Expr::Add(xs)
            } else {
                Expr::Mul(xs)
            }
        }
        "div" | "pochq" | "poch" | "pow" => {
            arity(2)?;
            let (a, b) = (boxed(0)?, boxed(1)?);
            match tag {
                "div" => Expr::Div(a, b),
                "pochq" => Expr::PochQ(a, b),
                "poch" => Expr::Poch(a, b),
                _ => Expr::Pow(a, b),
            }
        }
        other => return Err(format!("unknown node kind `{other}`")),
    })
}

fn n_bar_text(offset: i64) -> String {
    match offset {
        0 => "N".into(),
        k if k > 0 => format!("N+{k}"),
        k => format!("N{k}"),
    }
}

fn n_bar_offset(s: &str) -> Result<i64, String> {
    let rest = s.strip_prefix('N').ok_or_else(|| format!("N_bar `{s}` must start with N"))?;
    if rest.is_empty() {
        return Ok(0);
    }
    rest.trim_start_matches('+').parse().map_err(|_| format!("bad N_bar `{s}`"))
}

fn form_to_json(f: &Form) -> Value {
    let terms: Vec<Value> = f.terms.iter().map(|(o, e)| json!({"offset": o, "coeff": expr_to_json(e)})).collect();
    json!({"factor": expr_to_json(&f.factor), "terms": terms})
}

fn form_from_json(v: &Value) -> Result<Form, String> {
    let factor = expr_from_json(v.get("factor").ok_or("form without factor")?)?;
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or("form without terms")?
        .iter()
        .map(|t| {
            let o = t.get("offset").and_then(Value::as_i64).ok_or("term without offset")?;
            Ok((o, expr_from_json(t.get("coeff").ok_or("term without coeff")?)?))
        })
        .collect::<Result<Vec<_>, String>>()?;
    Ok(Form { factor, terms })
}

pub fn shift_to_json(s: &ShiftData) -> Value {
    let map: Map<String, Value> = s.map.iter().map(|(p, e)| (p.name().to_string(), expr_to_json(e))).collect();
    let mut v = json!({"eta": s.eta, "N_bar": n_bar_text(s.n_offset), "map": map});
    if let Some(f) = s.bar_family {
        v["bar_family"] = json!(f.code());
    }
    v
}

/// The same shape with infix expressions, used in reports.
pub fn shift_summary(s: &ShiftData) -> Value {
    let map: Map<String, Value> = s.map.iter().map(|(p, e)| (p.name().to_string(), json!(e.to_string()))).collect();
    json!({"eta": s.eta, "N_bar": n_bar_text(s.n_offset), "map": map})
}

fn shift_from_json(v: &Value) -> Result<ShiftData, String> {
    let eta = v.get("eta").and_then(Value::as_i64).ok_or("shift without eta")?;
    let n_offset = n_bar_offset(v.get("N_bar").and_then(Value::as_str).ok_or("shift without N_bar")?)?;
    let map = match v.get("map").and_then(Value::as_object) {
        Some(m) => m
            .iter()
            .map(|(k, e)| Ok((Param::from_name(k).ok_or_else(|| format!("unknown parameter `{k}`"))?, expr_from_json(e)?)))
            .collect::<Result<Vec<_>, String>>()?,
        None => Vec::new(),
    };
    let mut map = map;
    map.sort_by_key(|(p, _)| *p);
    let mut s = ShiftData::new(eta, n_offset, map);
    if let Some(f) = v.get("bar_family").and_then(Value::as_str) {
        s.bar_family = Some(f.parse().map_err(|e: askey_core::Error| e.to_string())?);
    }
    Ok(s)
}

fn entry_to_json(e: &RelationEntry) -> Value {
    let opt = |f: Option<&Form>| f.map_or(Value::Null, form_to_json);
    let nu = e.nu.as_ref().map_or(Value::Null, |n| {
        let (kind, x) = match n {
            NuSpec::Grid(x) => ("grid", x),
            NuSpec::QPower(x) => ("qpower", x),
            NuSpec::Value(x) => ("value", x),
        };
        json!({"kind": kind, "expr": expr_to_json(x)})
    });
    json!({
        "id": e.id,
        "kind": e.kind.code(),
        "group": e.group.code(),
        "parity": e.parity,
        "shift": shift_to_json(&e.shift),
        "plus": opt(e.plus.as_ref()),
        "minus": opt(e.minus.as_ref()),
        "nu": nu,
        "chi": e.chi.as_ref().map_or(Value::Null, expr_to_json),
        "parts": e.parts.as_ref().map(|(a, b)| json!([a, b])),
    })
}

fn entry_from_json(v: &Value, family: FamilyId) -> Result<RelationEntry, String> {
    let s = |k: &str| v.get(k).and_then(Value::as_str).ok_or_else(|| format!("entry without `{k}`"));
    let id = s("id")?.to_string();
    let ctx = |m: String| format!("{id}: {m}");
    let kind = RelationKind::from_code(s("kind")?).ok_or_else(|| ctx("unknown kind".into()))?;
    let group = Group::from_code(s("group")?).ok_or_else(|| ctx("unknown group".into()))?;
    let form = |k: &str| match v.get(k) {
        None | Some(Value::Null) => Ok(None),
        Some(f) => form_from_json(f).map(Some),
    };
    let nu = match v.get("nu") {
        None | Some(Value::Null) => None,
        Some(n) => {
            let x = expr_from_json(n.get("expr").ok_or("nu without expr")?).map_err(&ctx)?;
            Some(match n.get("kind").and_then(Value::as_str) {
                Some("grid") => NuSpec::Grid(x),
                Some("qpower") => NuSpec::QPower(x),
                Some("value") => NuSpec::Value(x),
                _ => return Err(ctx("unknown nu kind".into())),
            })
        }
    };
    let chi = match v.get("chi") {
        None | Some(Value::Null) => None,
        Some(c) => Some(expr_from_json(c).map_err(&ctx)?),
    };
    let parts = match v.get("parts").and_then(Value::as_array) {
        Some(p) if p.len() == 2 => {
            let name = |k: usize| p[k].as_str().map(str::to_string).ok_or_else(|| ctx("bad parts".into()));
            Some((name(0)?, name(1)?))
        }
        _ => None,
    };
    Ok(RelationEntry {
        family,
        kind,
        group,
        shift: shift_from_json(v.get("shift").ok_or_else(|| ctx("no shift".into()))?).map_err(&ctx)?,
        parity: v.get("parity").and_then(Value::as_i64),
        plus: form("plus").map_err(&ctx)?,
        minus: form("minus").map_err(&ctx)?,
        nu,
        chi,
        parts,
        id,
    })
}

/// Families with at least one entry, in enumeration order.
pub fn families_with_entries(entries: &[RelationEntry]) -> Vec<FamilyId> {
    FamilyId::ALL.into_iter().filter(|f| entries.iter().any(|e| e.family == *f)).collect()
}

pub fn family_document(family: FamilyId, entries: &[RelationEntry]) -> Value {
    let list: Vec<Value> = entries.iter().filter(|e| e.family == family).map(entry_to_json).collect();
    json!({"family": family.code(), "entries": list})
}

pub fn file_name(family: FamilyId) -> String {
    format!("{}.json", family.code())
}

/// Writes the built-in catalog, one file per family.
pub fn export_dir(dir: &Path) -> Result<Vec<PathBuf>, CatalogFileError> {
    let entries = catalog::all_entries();
    fs::create_dir_all(dir).map_err(|source| CatalogFileError::Io { path: dir.to_path_buf(), source })?;
    let mut out = Vec::new();
    for fam in families_with_entries(&entries) {
        let path = dir.join(file_name(fam));
        let text = serde_json::to_string_pretty(&family_document(fam, &entries)).expect("catalog serializes") + "\n";
        fs::write(&path, text).map_err(|source| CatalogFileError::Io { path: path.clone(), source })?;
        out.push(path);
    }
    Ok(out)
}

pub fn load_file(path: &Path) -> Result<Vec<RelationEntry>, CatalogFileError> {
    let text = fs::read_to_string(path).map_err(|source| CatalogFileError::Io { path: path.to_path_buf(), source })?;
    let doc: Value = serde_json::from_str(&text).map_err(|source| CatalogFileError::Json { path: path.to_path_buf(), source })?;
    let bad = |msg: String| CatalogFileError::Format { path: path.to_path_buf(), msg };
    let family: FamilyId = doc
        .get("family")
        .and_then(Value::as_str)
        .ok_or_else(|| bad("missing `family`".into()))?
        .parse()
        .map_err(|e: askey_core::Error| bad(e.to_string()))?;
    doc.get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing `entries`".into()))?
        .iter()
        .map(|e| entry_from_json(e, family).map_err(&bad))
        .collect()
}

/// Every `*.json` document in `dir`, families in enumeration order.
pub fn load_dir(dir: &Path) -> Result<Vec<RelationEntry>, CatalogFileError> {
    let io = |source| CatalogFileError::Io { path: dir.to_path_buf(), source };
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(io)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    let mut out = Vec::new();
    for p in paths {
        out.extend(load_file(&p)?);
    }
    let rank = |f: FamilyId| FamilyId::ALL.iter().position(|g| *g == f);
    out.sort_by_key(|e| rank(e.family));
    Ok(out)
}

pub fn load_catalog() -> Result<Vec<RelationEntry>, CatalogFileError> {
    load_dir(&catalog_dir())
}
