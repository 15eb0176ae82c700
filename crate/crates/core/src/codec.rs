//! JSON encodings of every structure, with decoding errors located by JSON path and line.
//!
//! Scalars are strings (`"3/4"`, `"2"`); a LinMap is `{"rows", "cols", "entries": [[r, c, "v"]]}`;
//! a BilMap is `{"dimA", "dimB", "dimC", "coeffs": [[k, i, j, "v"]]}`. Indices are 0-based and
//! only nonzero entries are written. Documents carry `"kind"` and `"field"`.

use std::fmt;

use serde_json::{json, Map, Value};

use crate::classify::{Census, RSData};
use crate::exact_linear::{BilMap, Field, FieldSpec, LinMap, Scalar, TwoVectorSpace};
use crate::report::{ConditionReport, TypoFlag, Violation};
use crate::special_products::{CrossedSystem, MatchedPairDatum};
use crate::unified_product::{ComplementSplit, ExtendingDatum, MapKind};
use crate::zinbiel_core::{BimodulePair, ZinbielAlgebra, ZinbielTwoAlgebra};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Seg {
    Key(String),
    Index(usize),
}

/// A decoding failure at a JSON path, with the source position when known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodecError {
    pub path: Vec<Seg>,
    pub msg: String,
    pub line: usize,
    pub col: usize,
}

impl CodecError {
    pub fn path_string(&self) -> String {
        let mut s = String::from("$");
        for seg in &self.path {
            match seg {
                Seg::Key(k) => {
                    s.push('.');
                    s.push_str(k);
                }
                Seg::Index(i) => s.push_str(&format!("[{i}]")),
            }
        }
        s
    }
}

impl fmt::Display for CodecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: at {}: {}", self.line, self.col, self.path_string(), self.msg)
    }
}

impl std::error::Error for CodecError {}

pub fn field_tag(f: Field) -> String {
    match f {
        Field::Rationals => "q".into(),
        Field::Prime(p) => format!("gf{p}"),
    }
}

// ---------------------------------------------------------------- encoding

pub fn scalar_json(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

pub fn vector_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar_json).collect())
}

pub fn linmap_json(m: &LinMap) -> Value {
    let entries: Vec<Value> = m.entries().map(|(r, c, v)| json!([r, c, v.to_string()])).collect();
    json!({"rows": m.rows(), "cols": m.cols(), "entries": entries})
}

pub fn bilmap_json(m: &BilMap) -> Value {
    let coeffs: Vec<Value> = m.entries().map(|(&(k, i, j), v)| json!([k, i, j, v.to_string()])).collect();
    json!({"dimA": m.dim_a(), "dimB": m.dim_b(), "dimC": m.dim_c(), "coeffs": coeffs})
}

fn algebra_body(a: &ZinbielAlgebra) -> Value {
    json!({"dim": a.dim, "mult": bilmap_json(&a.mult)})
}

fn two_algebra_body(t: &ZinbielTwoAlgebra) -> Value {
    json!({
        "z1": algebra_body(&t.z1),
        "z0": algebra_body(&t.z0),
        "phi": linmap_json(&t.phi),
        "act_left": bilmap_json(&t.act.left),
        "act_right": bilmap_json(&t.act.right),
    })
}

fn vspace_body(v: &TwoVectorSpace) -> Value {
    json!({"dim1": v.dim1, "dim0": v.dim0, "d": linmap_json(&v.d)})
}

fn doc(kind: &str, field: Field, mut body: Value) -> Value {
    let m = body.as_object_mut().unwrap();
    m.insert("kind".into(), kind.into());
    m.insert("field".into(), field_tag(field).into());
    body
}

fn map_key(kind: MapKind, j: usize) -> String {
    format!("{}_{j}", kind.json_name())
}

fn datum_body(d: &ExtendingDatum, kinds: &[MapKind], sigma: bool) -> Value {
    let mut m = Map::new();
    m.insert("z".into(), two_algebra_body(&d.z));
    m.insert("v".into(), vspace_body(&d.v));
    for &kind in kinds {
        for j in 0..4 {
            if !d.map(kind, j).is_zero() {
                m.insert(map_key(kind, j), bilmap_json(d.map(kind, j)));
            }
        }
    }
    if sigma && !d.sigma.is_zero() {
        m.insert("sigma".into(), linmap_json(&d.sigma));
    }
    Value::Object(m)
}

pub fn algebra_json(a: &ZinbielAlgebra) -> Value {
    doc("zinbiel_algebra", a.field(), algebra_body(a))
}

pub fn two_algebra_json(t: &ZinbielTwoAlgebra) -> Value {
    doc("zinbiel_2_algebra", t.field(), two_algebra_body(t))
}

pub fn datum_json(d: &ExtendingDatum) -> Value {
    doc("extending_datum", d.field(), datum_body(d, &MapKind::ALL, true))
}

const CROSSED_KINDS: [MapKind; 4] = [MapKind::HarpoonR, MapKind::HarpoonL, MapKind::Omega, MapKind::Star];
const MATCHED_KINDS: [MapKind; 4] = [MapKind::HarpoonR, MapKind::HarpoonL, MapKind::TriR, MapKind::TriL];

pub fn crossed_system_json(cs: &CrossedSystem) -> Value {
    doc("crossed_system", cs.z.field(), datum_body(&cs.embed(), &CROSSED_KINDS, true))
}

pub fn matched_pair_json(mp: &MatchedPairDatum) -> Value {
    let mut body = datum_body(&mp.embed(), &MATCHED_KINDS, false);
    body["v"] = two_algebra_body(&mp.v);
    doc("matched_pair", mp.z.field(), body)
}

pub fn split_json(s: &ComplementSplit) -> Value {
    doc(
        "complement_split",
        s.field(),
        json!({
            "e": two_algebra_body(&s.e),
            "iota1": linmap_json(&s.iota[1]),
            "iota0": linmap_json(&s.iota[0]),
            "p1": linmap_json(&s.proj[1]),
            "p0": linmap_json(&s.proj[0]),
        }),
    )
}

pub fn rs_json(rs: &RSData) -> Value {
    json!({"r1": linmap_json(&rs.r1), "r0": linmap_json(&rs.r0), "s1": linmap_json(&rs.s1), "s0": linmap_json(&rs.s0)})
}

fn violation_json(v: &Violation) -> Value {
    let mut m = Map::new();
    m.insert("id".into(), v.id.clone().into());
    if let Some(i) = &v.instance {
        m.insert("instance".into(), i.clone().into());
    }
    m.insert("witness".into(), json!(v.witness));
    m.insert("lhs".into(), vector_json(&v.lhs));
    m.insert("rhs".into(), vector_json(&v.rhs));
    Value::Object(m)
}

fn typo_json(t: &TypoFlag) -> Value {
    let mut m = Map::new();
    m.insert("id".into(), t.id.clone().into());
    if let Some(i) = &t.instance {
        m.insert("instance".into(), i.clone().into());
    }
    m.insert("note".into(), t.note.clone().into());
    Value::Object(m)
}

pub fn report_json(r: &ConditionReport) -> Value {
    let mut m = Map::new();
    m.insert("ok".into(), r.ok().into());
    m.insert("violations".into(), Value::Array(r.violations.iter().map(violation_json).collect()));
    if !r.typo_suspects.is_empty() {
        m.insert("typo_suspects".into(), Value::Array(r.typo_suspects.iter().map(typo_json).collect()));
    }
    if r.truncated > 0 {
        m.insert("truncated".into(), r.truncated.into());
    }
    if !r.conforming_field {
        m.insert("conforming_field".into(), false.into());
    }
    Value::Object(m)
}

/// The nonzero maps of a datum, keyed like an `extending_datum` document.
pub fn datum_maps_json(d: &ExtendingDatum) -> Value {
    let mut m = Map::new();
    for kind in MapKind::ALL {
        for j in 0..4 {
            let b = d.map(kind, j);
            if !b.is_zero() {
                m.insert(map_key(kind, j), bilmap_json(b));
            }
        }
    }
    if !d.sigma.is_zero() {
        m.insert("sigma".into(), linmap_json(&d.sigma));
    }
    Value::Object(m)
}

pub fn census_json(c: &Census) -> Value {
    json!({
        "field": field_tag(c.field),
        "Z": two_algebra_body(&c.z),
        "Vdims": [c.vdims.0, c.vdims.1],
        "valid_count": c.valid_count,
        "relation": c.relation.name(),
        "orbit_count": c.orbit_count(),
        "representatives": c.representatives.iter().map(datum_maps_json).collect::<Vec<_>>(),
    })
}

/// Indented JSON in which arrays of scalars stay on one line.
pub fn to_pretty(v: &Value) -> String {
    let mut out = String::new();
    write_pretty(v, 0, &mut out);
    out.push('\n');
    out
}

fn write_pretty(v: &Value, depth: usize, out: &mut String) {
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Object(m) if !m.is_empty() => {
            out.push_str("{\n");
            for (n, (k, x)) in m.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_pretty(x, depth + 1, out);
                out.push_str(if n + 1 < m.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        Value::Array(a) if a.iter().any(|x| x.is_object() || x.is_array()) => {
            out.push_str("[\n");
            for (n, x) in a.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_pretty(x, depth + 1, out);
                out.push_str(if n + 1 < a.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Array(a) => {
            let parts: Vec<String> = a.iter().map(|x| x.to_string()).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        _ => out.push_str(&v.to_string()),
    }
}

/// Compact canonical text, used for ordering and hashing.
pub fn canonical_string(v: &Value) -> String {
    serde_json::to_string(v).expect("json values serialize")
}

// ---------------------------------------------------------------- decoding

/// A parsed input document.
#[derive(Clone, Debug)]
pub enum Document {
    Algebra(ZinbielAlgebra),
    TwoAlgebra(ZinbielTwoAlgebra),
    Datum(ExtendingDatum),
    CrossedSystem(CrossedSystem),
    MatchedPair(MatchedPairDatum),
    Split(ComplementSplit),
    Factorization { e: ZinbielTwoAlgebra, iota_z: [LinMap; 2], iota_v: [LinMap; 2] },
    RsMorphism { d1: ExtendingDatum, d2: ExtendingDatum, rs: RSData },
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Algebra(_) => "zinbiel_algebra",
            Document::TwoAlgebra(_) => "zinbiel_2_algebra",
            Document::Datum(_) => "extending_datum",
            Document::CrossedSystem(_) => "crossed_system",
            Document::MatchedPair(_) => "matched_pair",
            Document::Split(_) => "complement_split",
            Document::Factorization { .. } => "factorization",
            Document::RsMorphism { .. } => "rs_morphism",
        }
    }
}

struct Dec<'a> {
    src: &'a str,
    field: Field,
    path: Vec<Seg>,
}

type R<T> = Result<T, CodecError>;

impl<'a> Dec<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> R<T> {
        let (line, col) = locate(self.src, &self.path);
        Err(CodecError { path: self.path.clone(), msg: msg.into(), line, col })
    }

    fn at<T>(&mut self, seg: Seg, f: impl FnOnce(&mut Self) -> R<T>) -> R<T> {
        self.path.push(seg);
        let r = f(self);
        self.path.pop();
        r
    }

    fn object<'v>(&self, v: &'v Value, allowed: &[&str]) -> R<&'v Map<String, Value>> {
        let Some(m) = v.as_object() else { return self.err("expected an object") };
        for k in m.keys() {
            if !allowed.contains(&k.as_str()) {
                let mut p = self.path.clone();
                p.push(Seg::Key(k.clone()));
                let (line, col) = locate(self.src, &p);
                return Err(CodecError { path: p, msg: format!("unknown key `{k}`"), line, col });
            }
        }
        Ok(m)
    }

    fn req<'v>(&self, m: &'v Map<String, Value>, key: &str) -> R<&'v Value> {
        match m.get(key) {
            Some(v) => Ok(v),
            None => self.err(format!("missing key `{key}`")),
        }
    }

    fn field_of<T>(
        &mut self,
        m: &Map<String, Value>,
        key: &str,
        f: impl FnOnce(&mut Self, &Value) -> R<T>,
    ) -> R<T> {
        let v = self.req(m, key)?;
        self.at(Seg::Key(key.into()), |d| f(d, v))
    }

    fn usize(&self, v: &Value) -> R<usize> {
        match v.as_u64() {
            Some(n) if n <= 64 => Ok(n as usize),
            Some(n) => self.err(format!("dimension or index {n} is too large")),
            None => self.err("expected a non-negative integer"),
        }
    }

    fn scalar(&self, v: &Value) -> R<Scalar> {
        match v.as_str() {
            Some(s) => self.field.parse(s).or_else(|e| self.err(e.to_string())),
            None => self.err("scalars must be strings such as \"3/4\""),
        }
    }

    fn entries(&mut self, v: &Value, arity: usize, bounds: &[usize]) -> R<Vec<(Vec<usize>, Scalar)>> {
        let Some(arr) = v.as_array() else { return self.err("expected an array") };
        let mut out: Vec<(Vec<usize>, Scalar)> = Vec::new();
        for (n, e) in arr.iter().enumerate() {
            let item = self.at(Seg::Index(n), |d| {
                let Some(t) = e.as_array().filter(|t| t.len() == arity + 1) else {
                    return d.err(format!("expected [{} indices, \"value\"]", arity));
                };
                let mut idx = Vec::new();
                for (p, b) in bounds.iter().enumerate() {
                    let i = d.at(Seg::Index(p), |d| d.usize(&t[p]))?;
                    if i >= *b {
                        return d.at(Seg::Index(p), |d| d.err(format!("index {i} out of range 0..{b}")));
                    }
                    idx.push(i);
                }
                let s = d.at(Seg::Index(arity), |d| d.scalar(&t[arity]))?;
                if out.iter().any(|(o, _)| *o == idx) {
                    return d.err(format!("duplicate entry {idx:?}"));
                }
                Ok((idx, s))
            })?;
            out.push(item);
        }
        Ok(out)
    }

    fn linmap(&mut self, v: &Value, shape: Option<(usize, usize)>) -> R<LinMap> {
        let m = self.object(v, &["rows", "cols", "entries"])?;
        let rows = self.field_of(m, "rows", |d, v| d.usize(v))?;
        let cols = self.field_of(m, "cols", |d, v| d.usize(v))?;
        if let Some((r, c)) = shape {
            if (r, c) != (rows, cols) {
                return self.err(format!("expected a {r}×{c} map, got {rows}×{cols}"));
            }
        }
        let es = self.field_of(m, "entries", |d, v| d.entries(v, 2, &[rows, cols]))?;
        let mut out = LinMap::zero(self.field, rows, cols);
        for (idx, s) in es {
            out.set(idx[0], idx[1], s);
        }
        Ok(out)
    }

    fn bilmap(&mut self, v: &Value, shape: Option<(usize, usize, usize)>) -> R<BilMap> {
        let m = self.object(v, &["dimA", "dimB", "dimC", "coeffs"])?;
        let a = self.field_of(m, "dimA", |d, v| d.usize(v))?;
        let b = self.field_of(m, "dimB", |d, v| d.usize(v))?;
        let c = self.field_of(m, "dimC", |d, v| d.usize(v))?;
        if let Some(want) = shape {
            if want != (a, b, c) {
                return self.err(format!(
                    "expected dims {}×{}→{}, got {a}×{b}→{c}",
                    want.0, want.1, want.2
                ));
            }
        }
        let es = self.field_of(m, "coeffs", |d, v| d.entries(v, 3, &[c, a, b]))?;
        let mut out = BilMap::zero(self.field, a, b, c);
        for (idx, s) in es {
            out.set(idx[0], idx[1], idx[2], s);
        }
        Ok(out)
    }

    fn algebra(&mut self, v: &Value, dim: Option<usize>) -> R<ZinbielAlgebra> {
        let m = self.object(v, &["dim", "mult", "kind", "field"])?;
        let n = self.field_of(m, "dim", |d, v| d.usize(v))?;
        if let Some(want) = dim {
            if want != n {
                return self.err(format!("expected dimension {want}, got {n}"));
            }
        }
        let mult = self.field_of(m, "mult", |d, v| d.bilmap(v, Some((n, n, n))))?;
        Ok(ZinbielAlgebra { dim: n, mult })
    }

    fn two_algebra(&mut self, v: &Value) -> R<ZinbielTwoAlgebra> {
        let m = self.object(v, &["z1", "z0", "phi", "act_left", "act_right", "kind", "field"])?;
        let z1 = self.field_of(m, "z1", |d, v| d.algebra(v, None))?;
        let z0 = self.field_of(m, "z0", |d, v| d.algebra(v, None))?;
        let (n1, n0) = (z1.dim, z0.dim);
        let phi = self.field_of(m, "phi", |d, v| d.linmap(v, Some((n0, n1))))?;
        let left = self.field_of(m, "act_left", |d, v| d.bilmap(v, Some((n0, n1, n1))))?;
        let right = self.field_of(m, "act_right", |d, v| d.bilmap(v, Some((n1, n0, n1))))?;
        Ok(ZinbielTwoAlgebra { z1, z0, phi, act: BimodulePair { left, right } })
    }

    fn vspace(&mut self, v: &Value) -> R<TwoVectorSpace> {
        let m = self.object(v, &["dim1", "dim0", "d"])?;
        let dim1 = self.field_of(m, "dim1", |d, v| d.usize(v))?;
        let dim0 = self.field_of(m, "dim0", |d, v| d.usize(v))?;
        let dm = self.field_of(m, "d", |d, v| d.linmap(v, Some((dim0, dim1))))?;
        Ok(TwoVectorSpace::new(dm))
    }

    /// Maps absent from the object are zero.
    fn datum_maps(
        &mut self,
        m: &Map<String, Value>,
        d: &mut ExtendingDatum,
        kinds: &[MapKind],
        sigma: bool,
    ) -> R<()> {
        for &kind in kinds {
            for j in 0..4 {
                let key = map_key(kind, j);
                if m.contains_key(&key) {
                    let want = d.expected_dims(kind, j);
                    *d.map_mut(kind, j) = self.field_of(m, &key, |dd, v| dd.bilmap(v, Some(want)))?;
                }
            }
        }
        if sigma && m.contains_key("sigma") {
            let want = (d.z.z0.dim, d.v.dim1);
            d.sigma = self.field_of(m, "sigma", |dd, v| dd.linmap(v, Some(want)))?;
        }
        Ok(())
    }

    fn datum_like(&mut self, v: &Value, kinds: &[MapKind], sigma: bool, full_v: bool) -> R<(ExtendingDatum, Option<ZinbielTwoAlgebra>)> {
        let mut keys: Vec<String> = vec!["z".into(), "v".into(), "kind".into(), "field".into()];
        for &kind in kinds {
            for j in 0..4 {
                keys.push(map_key(kind, j));
            }
        }
        if sigma {
            keys.push("sigma".into());
        }
        let key_refs: Vec<&str> = keys.iter().map(|s| s.as_str()).collect();
        let m = self.object(v, &key_refs)?;
        let z = self.field_of(m, "z", |d, v| d.two_algebra(v))?;
        let (vs, valg) = if full_v {
            let t = self.field_of(m, "v", |d, v| d.two_algebra(v))?;
            (TwoVectorSpace::new(t.phi.clone()), Some(t))
        } else {
            (self.field_of(m, "v", |d, v| d.vspace(v))?, None)
        };
        let mut d = ExtendingDatum::trivial(z, vs);
        self.datum_maps(m, &mut d, kinds, sigma)?;
        Ok((d, valg))
    }

    fn datum(&mut self, v: &Value) -> R<ExtendingDatum> {
        Ok(self.datum_like(v, &MapKind::ALL, true, false)?.0)
    }

    fn rs(&mut self, v: &Value, d: &ExtendingDatum) -> R<RSData> {
        let m = self.object(v, &["r1", "r0", "s1", "s0"])?;
        let (zd, vd) = (d.zdims(), d.vdims());
        Ok(RSData {
            r1: self.field_of(m, "r1", |dd, v| dd.linmap(v, Some((zd[1], vd[1]))))?,
            r0: self.field_of(m, "r0", |dd, v| dd.linmap(v, Some((zd[0], vd[0]))))?,
            s1: self.field_of(m, "s1", |dd, v| dd.linmap(v, Some((vd[1], vd[1]))))?,
            s0: self.field_of(m, "s0", |dd, v| dd.linmap(v, Some((vd[0], vd[0]))))?,
        })
    }

    fn pair(&mut self, m: &Map<String, Value>, k1: &str, k0: &str, rows: [usize; 2]) -> R<[LinMap; 2]> {
        let l1 = self.field_of(m, k1, |d, v| d.linmap(v, None))?;
        let l0 = self.field_of(m, k0, |d, v| d.linmap(v, None))?;
        for (l, (k, lm)) in [(1, (k1, &l1)), (0, (k0, &l0))] {
            if lm.rows() != rows[l] {
                return self.at(Seg::Key(k.into()), |d| {
                    d.err(format!("expected {} rows (dim E{l}), got {}", rows[l], lm.rows()))
                });
            }
        }
        Ok([l0, l1])
    }

    fn document(&mut self, v: &Value, kind: &str) -> R<Document> {
        Ok(match kind {
            "zinbiel_algebra" => Document::Algebra(self.algebra(v, None)?),
            "zinbiel_2_algebra" => Document::TwoAlgebra(self.two_algebra(v)?),
            "extending_datum" => Document::Datum(self.datum(v)?),
            "crossed_system" => {
                let (d, _) = self.datum_like(v, &CROSSED_KINDS, true, false)?;
                Document::CrossedSystem(CrossedSystem::from_datum(&d).expect("no actions were read"))
            }
            "matched_pair" => {
                let (d, valg) = self.datum_like(v, &MATCHED_KINDS, false, true)?;
                let mut mp = MatchedPairDatum::from_datum(&d).expect("no cocycle was read");
                mp.v = valg.unwrap();
                Document::MatchedPair(mp)
            }
            "complement_split" => {
                let m = self.object(v, &["e", "iota1", "iota0", "p1", "p0", "kind", "field"])?;
                let e = self.field_of(m, "e", |d, v| d.two_algebra(v))?;
                let ed = [e.z0.dim, e.z1.dim];
                let iota = self.pair(m, "iota1", "iota0", ed)?;
                let p1 = self.field_of(m, "p1", |d, v| d.linmap(v, Some((iota[1].cols(), ed[1]))))?;
                let p0 = self.field_of(m, "p0", |d, v| d.linmap(v, Some((iota[0].cols(), ed[0]))))?;
                match ComplementSplit::new(e, iota, [p0, p1]) {
                    Ok(s) => Document::Split(s),
                    Err(err) => return self.err(err.to_string()),
                }
            }
            "factorization" => {
                let m = self.object(v, &["e", "iota_z1", "iota_z0", "iota_v1", "iota_v0", "kind", "field"])?;
                let e = self.field_of(m, "e", |d, v| d.two_algebra(v))?;
                let ed = [e.z0.dim, e.z1.dim];
                let iota_z = self.pair(m, "iota_z1", "iota_z0", ed)?;
                let iota_v = self.pair(m, "iota_v1", "iota_v0", ed)?;
                Document::Factorization { e, iota_z, iota_v }
            }
            "rs_morphism" => {
                let m = self.object(v, &["d1", "d2", "rs", "kind", "field"])?;
                let d1 = self.field_of(m, "d1", |d, v| d.datum(v))?;
                let d2 = self.field_of(m, "d2", |d, v| d.datum(v))?;
                if d1.z != d2.z || d1.v != d2.v {
                    return self.at(Seg::Key("d2".into()), |d| d.err("d1 and d2 must share Z and (V1, V0, d)"));
                }
                let rs = self.field_of(m, "rs", |d, v| d.rs(v, &d1))?;
                Document::RsMorphism { d1, d2, rs }
            }
            other => return self.at(Seg::Key("kind".into()), |d| d.err(format!("unknown kind `{other}`"))),
        })
    }
}

/// Parses a document. The field is `field_override` if given, else the document's `"field"`.
pub fn parse_document(
    src: &str,
    field_override: Option<FieldSpec>,
    allow_small_char: bool,
) -> Result<(FieldSpec, Document), CodecError> {
    let v: Value = serde_json::from_str(src).map_err(|e| CodecError {
        path: vec![],
        msg: format!("invalid JSON: {e}"),
        line: e.line(),
        col: e.column(),
    })?;
    let mut dec = Dec { src, field: Field::Rationals, path: vec![] };
    let Some(obj) = v.as_object() else { return dec.err("expected an object") };
    let kind = match obj.get("kind").and_then(Value::as_str) {
        Some(k) => k.to_string(),
        None => return dec.err("missing string key `kind`"),
    };
    let spec = match field_override {
        Some(f) => f,
        None => {
            let Some(name) = obj.get("field") else { return dec.err("missing key `field`") };
            dec.path.push(Seg::Key("field".into()));
            let f = match name.as_str() {
                Some(s) => FieldSpec::parse(s, allow_small_char).or_else(|e| dec.err(e.to_string()))?,
                None => return dec.err("expected a field name such as \"q\" or \"gf5\""),
            };
            dec.path.pop();
            f
        }
    };
    dec.field = spec.field;
    let d = dec.document(&v, &kind)?;
    Ok((spec, d))
}

/// Parses a bare LinMap object.
pub fn parse_linmap(src: &str, field: Field) -> Result<LinMap, CodecError> {
    let v: Value = serde_json::from_str(src).map_err(|e| CodecError {
        path: vec![],
        msg: format!("invalid JSON: {e}"),
        line: e.line(),
        col: e.column(),
    })?;
    Dec { src, field, path: vec![] }.linmap(&v, None)
}

/// Line and column (1-based) of the value at `path`, or of the deepest prefix found.
pub fn locate(src: &str, path: &[Seg]) -> (usize, usize) {
    let off = Locator { b: src.as_bytes(), i: 0 }.find(path);
    let before = &src[..off.min(src.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, col)
}

struct Locator<'a> {
    b: &'a [u8],
    i: usize,
}

impl Locator<'_> {
    fn ws(&mut self) {
        while self.i < self.b.len() && self.b[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn string(&mut self) -> String {
        let start = self.i + 1;
        self.i += 1;
        while self.i < self.b.len() && self.b[self.i] != b'"' {
            if self.b[self.i] == b'\\' {
                self.i += 1;
            }
            self.i += 1;
        }
        let s = String::from_utf8_lossy(&self.b[start..self.i.min(self.b.len())]).into_owned();
        self.i += 1;
        s
    }

    fn skip(&mut self) {
        self.ws();
        match self.b.get(self.i) {
            Some(b'"') => {
                self.string();
            }
            Some(b'{') | Some(b'[') => {
                let mut depth = 0usize;
                while self.i < self.b.len() {
                    match self.b[self.i] {
                        b'"' => {
                            self.string();
                            continue;
                        }
                        b'{' | b'[' => depth += 1,
                        b'}' | b']' => {
                            depth -= 1;
                            if depth == 0 {
                                self.i += 1;
                                return;
                            }
                        }
                        _ => {}
                    }
                    self.i += 1;
                }
            }
            _ => {
                while self.i < self.b.len() && !b",}] \n\r\t".contains(&self.b[self.i]) {
                    self.i += 1;
                }
            }
        }
    }

    /// Offset of the value at `path`; for a key, the offset of the key itself when it is last.
    fn find(&mut self, path: &[Seg]) -> usize {
        self.ws();
        let Some(seg) = path.first() else { return self.i };
        let here = self.i;
        match (seg, self.b.get(self.i)) {
            (Seg::Key(k), Some(b'{')) => {
                self.i += 1;
                loop {
                    self.ws();
                    if self.b.get(self.i) != Some(&b'"') {
                        return here;
                    }
                    let key_at = self.i;
                    let key = self.string();
                    self.ws();
                    self.i += 1; // ':'
                    if &key == k {
                        if path.len() == 1 {
                            return key_at;
                        }
                        return self.find(&path[1..]);
                    }
                    self.skip();
                    self.ws();
                    if self.b.get(self.i) == Some(&b',') {
                        self.i += 1;
                    } else {
                        return here;
                    }
                }
            }
            (Seg::Index(n), Some(b'[')) => {
                self.i += 1;
                for _ in 0..*n {
                    self.skip();
                    self.ws();
                    if self.b.get(self.i) == Some(&b',') {
                        self.i += 1;
                    } else {
                        return here;
                    }
                }
                self.find(&path[1..])
            }
            _ => here,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn locates_nested_paths() {
        let src = "{\n  \"a\": {\"b\": [1,\n  [2, 3]]},\n  \"c\": 4\n}";
        let p = |s: &[Seg]| locate(src, s);
        assert_eq!(p(&[Seg::Key("c".into())]), (4, 3));
        assert_eq!(p(&[Seg::Key("a".into()), Seg::Key("b".into()), Seg::Index(1), Seg::Index(1)]), (3, 7));
        assert_eq!(p(&[Seg::Key("zz".into())]), (1, 1));
    }

    #[test]
    fn roundtrips_an_algebra() {
        let f = Field::Prime(5);
        let mut m = BilMap::zero(f, 2, 2, 2);
        m.set(1, 0, 0, f.int(3));
        let a = ZinbielAlgebra::new(m).unwrap();
        let text = serde_json::to_string_pretty(&algebra_json(&a)).unwrap();
        let (spec, d) = parse_document(&text, None, false).unwrap();
        assert_eq!(spec.field, f);
        assert!(matches!(d, Document::Algebra(b) if b == a));
    }

    #[test]
    fn errors_cite_the_offending_key() {
        let src = r#"{"kind": "zinbiel_algebra", "field": "gf5",
 "dim": 1, "mult": {"dimA": 1, "dimB": 1, "dimC": 1, "coeffs": [[0, 0, 0, 7]]}}"#;
        let e = parse_document(src, None, false).unwrap_err();
        assert_eq!(e.path_string(), "$.mult.coeffs[0][3]");
        assert_eq!((e.line, e.col), (2, 75));
    }
}
