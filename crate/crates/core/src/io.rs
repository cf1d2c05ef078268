//! JSON and text formats shared by the command line front end.
//!
//! Vertices are numbered from 1 in every external format. JSON objects are
//! emitted with sorted keys, so equal inputs give identical bytes.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cluster::{ClusterExchange, ClusterTriangle};
use crate::derived::{ExchangeTriangle, WindowComplement};
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::excseq::ExceptionalSequence;
use crate::homext::HomExtQuiver;
use crate::placement::{Ledger, PlacementResult};
use crate::quiver::Quiver;
use crate::repcat::{ModCat, Representation, Stalk};
use crate::scalar::Scalar;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct QuiverFile {
    vertices: usize,
    arrows: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModuleFile {
    dim: Vec<usize>,
    maps: Vec<Vec<Vec<String>>>,
}

fn parse_error(e: serde_json::Error) -> Error {
    Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column()))
}

pub fn parse_quiver(text: &str) -> Result<Quiver> {
    let f: QuiverFile = serde_json::from_str(text).map_err(parse_error)?;
    let arrows: Vec<(usize, usize)> = f.arrows.iter().map(|a| (a[0], a[1])).collect();
    Quiver::new(f.vertices, &arrows)
}

pub fn quiver_json(q: &Quiver) -> Value {
    let arrows: Vec<[usize; 2]> = q.arrows().iter().map(|&(s, t)| [s + 1, t + 1]).collect();
    json!({ "vertices": q.num_vertices(), "arrows": arrows })
}

/// `{"dim": [...], "maps": [...]}` with one row-major matrix of `"p/q"`
/// strings per arrow.
pub fn module_json<F: Scalar>(x: &Representation<F>) -> Value {
    let maps: Vec<Vec<Vec<String>>> = x
        .maps()
        .iter()
        .map(|m| (0..m.rows()).map(|r| m.row(r).iter().map(|v| v.to_string()).collect()).collect())
        .collect();
    json!({ "dim": x.dim(), "maps": maps })
}

pub fn parse_module<F: Scalar>(q: &Quiver, v: &Value) -> Result<Representation<F>> {
    let f: ModuleFile = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    if f.dim.len() != q.num_vertices() || f.maps.len() != q.arrows().len() {
        return Err(Error::Parse("module does not fit the quiver".into()));
    }
    let mut maps = Vec::new();
    for (&(s, t), rows) in q.arrows().iter().zip(f.maps) {
        let cols = f.dim[s];
        let rows: Vec<Vec<F>> = rows
            .iter()
            .map(|r| r.iter().map(|e| F::parse(e).ok_or_else(|| Error::Parse(format!("bad scalar {e:?}")))).collect())
            .collect::<Result<_>>()?;
        let m = if rows.is_empty() { Matrix::zeros(f.dim[t], cols) } else { Matrix::from_rows(cols, rows)? };
        maps.push(m);
    }
    Representation::new(q, f.dim, maps)
}

pub fn stalk_json<F: Scalar>(s: &Stalk<F>) -> Value {
    json!({ "module": module_json(&s.module), "degree": s.shift })
}

pub fn stalks_json<F: Scalar>(xs: &[Stalk<F>]) -> Value {
    Value::Array(xs.iter().map(stalk_json).collect())
}

pub fn sequence_json<F: Scalar>(seq: &ExceptionalSequence<F>) -> Value {
    Value::Array(seq.terms().iter().map(module_json).collect())
}

pub fn homext_json(g: &HomExtQuiver) -> Value {
    let arrows: Vec<Value> = g
        .arrows
        .iter()
        .map(|(s, t, d)| json!({ "from": s + 1, "to": t + 1, "decoration": d.to_string() }))
        .collect();
    json!({
        "vertices": g.vertices,
        "arrows": arrows,
        "acyclic": g.is_acyclic(),
        "connected": g.is_connected(),
    })
}

pub fn exchange_json<F: Scalar>(t: &ExchangeTriangle<F>) -> Value {
    json!({ "from": stalk_json(&t.from), "middle": stalks_json(&t.middle), "to": stalk_json(&t.to) })
}

pub fn window_json<F: Scalar>(w: &[WindowComplement<F>]) -> Value {
    Value::Array(
        w.iter()
            .map(|c| json!({ "position": c.position, "complement": stalk_json(&c.stalk), "incoming": exchange_json(&c.incoming) }))
            .collect(),
    )
}

pub fn cluster_triangle_json<F: Scalar>(t: &ClusterTriangle<F>) -> Value {
    json!({
        "from": stalk_json(&t.from),
        "middle": stalks_json(&t.middle),
        "to": stalk_json(&t.to),
        "left": t.left.to_string(),
        "right": t.right.to_string(),
        "d_triangle": t.is_d_triangle(),
    })
}

pub fn cluster_exchange_json<F: Scalar>(e: &ClusterExchange<F>) -> Value {
    json!({
        "complements": stalks_json(&e.complements),
        "consecutive": e.consecutive.iter().map(cluster_triangle_json).collect::<Vec<_>>(),
        "wrap": cluster_triangle_json(&e.wrap),
    })
}

pub fn ledger_json(l: &Ledger) -> Value {
    Value::Array(
        l.clauses
            .iter()
            .map(|c| json!({ "clause": c.name, "rank": c.level, "holds": c.holds, "witness": c.witness }))
            .collect(),
    )
}

pub fn placement_json<F: Scalar>(p: &PlacementResult<F>, ledger: &Ledger) -> Value {
    let triangles: Vec<Value> = p
        .triangles
        .iter()
        .map(|t| json!({ "from": stalk_json(&t.from), "copies": t.r, "middle": stalk_json(&t.middle), "to": stalk_json(&t.to) }))
        .collect();
    json!({
        "sequence": stalks_json(&p.placed_a()),
        "complements": stalks_json(&p.placed_c()),
        "rules": p.rules.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        "triangles": triangles,
        "ledger": ledger_json(ledger),
        "verified": ledger.all_hold(),
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// Resolves a module argument: `P2`, `P_2`, `I3`, `S1`, a dimension vector
/// `[1,0,1]` or `1:0:1`. A dimension vector must name a unique
/// indecomposable up to isomorphism.
pub fn resolve_module<F: Scalar>(cat: &ModCat<F>, text: &str) -> Result<Representation<F>> {
    let t = text.trim();
    let bad = || Error::Parse(format!("cannot read module {t:?}"));
    let named = t.chars().next().filter(|c| matches!(c, 'P' | 'I' | 'S'));
    if let Some(kind) = named {
        let idx: usize = t[1..].trim_start_matches('_').parse().map_err(|_| bad())?;
        if idx == 0 || idx > cat.n() {
            return Err(Error::BadIndex { index: idx, vertices: cat.n() });
        }
        return Ok(cat.tidy(match kind {
            'P' => cat.projective(idx - 1),
            'I' => cat.injective(idx - 1),
            _ => cat.simple(idx - 1),
        }));
    }
    let inner = t.trim_start_matches('[').trim_end_matches(']');
    let sep = if inner.contains(':') { ':' } else { ',' };
    let dim: Vec<usize> = inner.split(sep).map(|x| x.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?;
    if dim.len() != cat.n() {
        return Err(Error::DimensionMismatch(format!("dimension vector {dim:?} on {} vertices", cat.n())));
    }
    if cat.is_dynkin() {
        return cat
            .indecomposables()?
            .iter()
            .find(|x| x.dim() == dim.as_slice())
            .cloned()
            .ok_or_else(|| Error::InvalidArgument(format!("no indecomposable with dimension vector {dim:?}")));
    }
    let standard = (0..cat.n())
        .flat_map(|i| [cat.projective(i), cat.injective(i), cat.simple(i)])
        .find(|x| x.dim() == dim.as_slice());
    if let Some(x) = standard {
        return Ok(x.clone());
    }
    thin_module(cat, &dim)
}

/// The unique indecomposable with a 0/1 dimension vector whose support is a
/// tree; anything else is ambiguous.
fn thin_module<F: Scalar>(cat: &ModCat<F>, dim: &[usize]) -> Result<Representation<F>> {
    let q = cat.quiver();
    let ambiguous = || Error::InvalidArgument(format!("dimension vector {dim:?} does not determine a module"));
    if dim.iter().any(|&d| d > 1) {
        return Err(ambiguous());
    }
    let support = dim.iter().filter(|&&d| d == 1).count();
    let inner = q.arrows().iter().filter(|&&(s, t)| dim[s] == 1 && dim[t] == 1).count();
    if support == 0 || inner + 1 != support {
        return Err(ambiguous());
    }
    let maps = q
        .arrows()
        .iter()
        .map(|&(s, t)| if dim[s] == 1 && dim[t] == 1 { Matrix::identity(1) } else { Matrix::zeros(dim[t], dim[s]) })
        .collect();
    let x = Representation::new(q, dim.to_vec(), maps)?;
    if !cat.is_indecomposable(&x) {
        return Err(ambiguous());
    }
    Ok(x)
}

/// A comma separated list of modules, each optionally followed by `@degree`.
pub fn parse_module_list<F: Scalar>(cat: &ModCat<F>, csv: &str) -> Result<Vec<(Representation<F>, Option<i32>)>> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut cur = String::new();
    let mut items = Vec::new();
    for ch in csv.chars() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            _ => {}
        }
        if ch == ',' && depth == 0 {
            items.push(std::mem::take(&mut cur));
        } else {
            cur.push(ch);
        }
    }
    items.push(cur);
    for item in items.iter().map(|s| s.trim()).filter(|s| !s.is_empty()) {
        let (name, degree) = match item.split_once('@') {
            Some((n, d)) => (n, Some(d.trim().parse().map_err(|_| Error::Parse(format!("bad degree in {item:?}")))?)),
            None => (item, None),
        };
        out.push((resolve_module(cat, name)?, degree));
    }
    Ok(out)
}
