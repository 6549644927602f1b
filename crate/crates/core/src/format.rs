//! Plain-text formats for algebras, modules and universe manifests.
//!
//! Algebra file:
//!
//! ```text
//! field 101
//! vertices 3 4 5
//! arrow α 3 4
//! arrow β 4 5
//! relation 1*βα = 0
//! ```
//!
//! Paths are arrow names juxtaposed right to left and split by longest
//! match. Module file:
//!
//! ```text
//! module (0|P(3)) over lambda
//! dim 3 1
//! dim 4 1
//! map α [[1]]
//! ```
//!
//! Matrices are `target-dim × source-dim`; missing dimensions and maps are
//! zero. A universe manifest lists `member <display name> <module path>`
//! lines, paths relative to the manifest.

use std::fmt::Write as _;
use std::path::{Path as FsPath, PathBuf};
use std::sync::Arc;

use crate::algebra::{
    AlgebraError, BoundQuiverAlgebra, Path, Quiver, RelationSum, DEFAULT_LENGTH_CAP,
};
use crate::error::{Error, Result};
use crate::linalg::{FieldPrime, FpMatrix};
use crate::modcat::{QModule, Universe};

fn perr(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Significant lines: 1-based number, text without comments, trimmed.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn column_of(line: &str, token: &str) -> usize {
    line.find(token)
        .map_or(1, |b| line[..b].chars().count() + 1)
}

#[derive(Clone, Debug, Default)]
pub struct AlgebraOptions {
    /// Replaces the file's `field` line when set.
    pub prime: Option<u64>,
    pub length_cap: Option<usize>,
}

pub fn parse_algebra(
    text: &str,
    name: &str,
    opts: &AlgebraOptions,
) -> Result<Arc<BoundQuiverAlgebra>> {
    let mut prime: Option<u64> = None;
    let mut vertices: Option<Vec<String>> = None;
    let mut arrows: Vec<(String, String, String, usize)> = Vec::new();
    let mut relations: Vec<(usize, &str)> = Vec::new();
    for (ln, l) in lines(text) {
        let mut words = l.split_whitespace();
        let kw = words.next().unwrap_or("");
        match kw {
            "field" => {
                let w = words
                    .next()
                    .ok_or_else(|| perr(ln, l.len() + 1, "missing prime"))?;
                let p = w
                    .parse::<u64>()
                    .map_err(|_| perr(ln, column_of(l, w), format!("bad prime `{w}`")))?;
                prime = Some(p);
            }
            "vertices" => {
                let vs: Vec<String> = words.map(str::to_string).collect();
                if vs.is_empty() {
                    return Err(perr(ln, l.len() + 1, "no vertices"));
                }
                vertices = Some(vs);
            }
            "arrow" => {
                let parts: Vec<&str> = words.collect();
                if parts.len() != 3 {
                    return Err(perr(ln, 1, "expected `arrow <name> <source> <target>`"));
                }
                arrows.push((
                    parts[0].to_string(),
                    parts[1].to_string(),
                    parts[2].to_string(),
                    ln,
                ));
            }
            "relation" => relations.push((ln, l)),
            other => return Err(perr(ln, 1, format!("unknown keyword `{other}`"))),
        }
    }
    let p = opts.prime.or(prime).unwrap_or(crate::linalg::DEFAULT_PRIME);
    let field = FieldPrime::new(p).map_err(|e| perr(0, 0, e.to_string()))?;
    let vertices = vertices.ok_or_else(|| perr(0, 0, "missing `vertices` line"))?;
    let vref: Vec<&str> = vertices.iter().map(String::as_str).collect();
    let aref: Vec<(&str, &str, &str)> = arrows
        .iter()
        .map(|(n, s, t, _)| (n.as_str(), s.as_str(), t.as_str()))
        .collect();
    let quiver = Quiver::from_names(&vref, &aref).map_err(|e| {
        let ln = match &e {
            AlgebraError::UnknownVertex(v) => arrows
                .iter()
                .find(|(_, s, t, _)| s == v || t == v)
                .map_or(0, |a| a.3),
            _ => 0,
        };
        perr(ln, 1, e.to_string())
    })?;
    let mut rels = Vec::new();
    for (ln, l) in relations {
        rels.push(parse_relation(&quiver, field, ln, l)?);
    }
    let cap = opts.length_cap.unwrap_or(DEFAULT_LENGTH_CAP);
    Ok(BoundQuiverAlgebra::build(name, field, quiver, rels, cap)?)
}

fn parse_relation(q: &Quiver, f: FieldPrime, ln: usize, line: &str) -> Result<RelationSum> {
    let body = line["relation".len()..].trim();
    let Some(lhs) = body.strip_suffix("= 0").or_else(|| body.strip_suffix("=0")) else {
        return Err(perr(ln, line.chars().count(), "relation must end in `= 0`"));
    };
    // split into signed terms at top-level `+` / `-` separators
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut negative = false;
    for ch in lhs.chars() {
        if ch == '+' || ch == '-' {
            let t = cur.trim();
            if t.is_empty() {
                if ch == '-' {
                    negative = !negative;
                }
                continue;
            }
            if t.ends_with('*') {
                cur.push(ch);
                continue;
            }
            terms.push((negative, std::mem::take(&mut cur)));
            negative = ch == '-';
            continue;
        }
        cur.push(ch);
    }
    terms.push((negative, cur));
    let mut out = Vec::new();
    for (neg, t) in terms {
        let t = t.trim();
        if t.is_empty() {
            return Err(perr(ln, line.chars().count(), "empty relation term"));
        }
        let col = column_of(line, t);
        let (coef, word) = match t.split_once('*') {
            Some((c, w)) => {
                let c = c.trim();
                let v = c
                    .parse::<i64>()
                    .map_err(|_| perr(ln, col, format!("bad coefficient `{c}`")))?;
                (v, w.trim())
            }
            None => (1, t),
        };
        let coef = if neg { -coef } else { coef };
        let arrows = q
            .parse_path_word(word)
            .map_err(|e| perr(ln, col, e.to_string()))?;
        let path = Path::from_arrows(q, arrows).map_err(|e| perr(ln, col, e.to_string()))?;
        out.push((f.reduce(coef), path));
    }
    RelationSum::new(q, out).map_err(|e| perr(ln, 1, e.to_string()))
}

/// Canonical text of an algebra.
pub fn print_algebra(a: &BoundQuiverAlgebra) -> String {
    let q = a.quiver();
    let f = a.field();
    let mut s = String::new();
    writeln!(s, "field {}", f.p()).unwrap();
    writeln!(s, "vertices {}", q.vertices().join(" ")).unwrap();
    for ar in q.arrows() {
        writeln!(
            s,
            "arrow {} {} {}",
            ar.name,
            q.vertices()[ar.source],
            q.vertices()[ar.target]
        )
        .unwrap();
    }
    for r in a.relations() {
        let terms: Vec<String> = r
            .terms
            .iter()
            .map(|(c, p)| format!("{}*{}", f.signed(*c), p.word(q)))
            .collect();
        writeln!(s, "relation {} = 0", terms.join(" + ")).unwrap();
    }
    s
}

fn parse_matrix(f: FieldPrime, ln: usize, col: usize, text: &str) -> Result<FpMatrix> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = t
        .strip_prefix('[')
        .and_then(|x| x.strip_suffix(']'))
        .ok_or_else(|| perr(ln, col, "matrix must be written `[[..],[..]]`"))?;
    let mut rows: Vec<Vec<i64>> = Vec::new();
    if !inner.is_empty() {
        let inner = inner
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| perr(ln, col, "matrix rows must be bracketed"))?;
        for r in inner.split("],[") {
            let row = if r.is_empty() {
                Vec::new()
            } else {
                r.split(',')
                    .map(|e| {
                        e.parse::<i64>()
                            .map_err(|_| perr(ln, col, format!("bad entry `{e}`")))
                    })
                    .collect::<Result<Vec<_>>>()?
            };
            rows.push(row);
        }
    }
    FpMatrix::from_rows(f, &rows).map_err(|e| perr(ln, col, e.to_string()))
}

/// Parse a module file over `algebra`; returns the module's declared name.
pub fn parse_module(text: &str, algebra: &Arc<BoundQuiverAlgebra>) -> Result<(String, QModule)> {
    let q = algebra.quiver();
    let f = algebra.field();
    let mut name: Option<String> = None;
    let mut dims = vec![0usize; q.vertex_count()];
    let mut given: Vec<Option<(usize, usize, FpMatrix)>> = vec![None; q.arrows().len()];
    for (ln, l) in lines(text) {
        let (kw, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        let rest = rest.trim();
        match kw {
            "module" => {
                let Some((n, over)) = rest.rsplit_once(" over ") else {
                    return Err(perr(ln, 1, "expected `module <name> over <algebra>`"));
                };
                let over = over.trim();
                if over != algebra.name() {
                    return Err(perr(
                        ln,
                        column_of(l, over),
                        format!("module is over `{over}`, expected `{}`", algebra.name()),
                    ));
                }
                name = Some(n.trim().to_string());
            }
            "dim" => {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                if parts.len() != 2 {
                    return Err(perr(ln, 1, "expected `dim <vertex> <d>`"));
                }
                let v = q.vertex_index(parts[0]).ok_or_else(|| {
                    perr(
                        ln,
                        column_of(l, parts[0]),
                        format!("unknown vertex `{}`", parts[0]),
                    )
                })?;
                dims[v] = parts[1].parse().map_err(|_| {
                    perr(
                        ln,
                        column_of(l, parts[1]),
                        format!("bad dimension `{}`", parts[1]),
                    )
                })?;
            }
            "map" => {
                let (a, m) = rest
                    .split_once(char::is_whitespace)
                    .ok_or_else(|| perr(ln, 1, "expected `map <arrow> <matrix>`"))?;
                let ai = q
                    .arrow_index(a)
                    .ok_or_else(|| perr(ln, column_of(l, a), format!("unknown arrow `{a}`")))?;
                let col = column_of(l, m.trim());
                given[ai] = Some((ln, col, parse_matrix(f, ln, col, m)?));
            }
            other => return Err(perr(ln, 1, format!("unknown keyword `{other}`"))),
        }
    }
    let name = name.ok_or_else(|| perr(0, 0, "missing `module` line"))?;
    let mut maps = Vec::new();
    for (ai, ar) in q.arrows().iter().enumerate() {
        let shape = (dims[ar.target], dims[ar.source]);
        match &given[ai] {
            Some((ln, col, m)) => {
                let m = if m.rows() == 0 && shape.0 * shape.1 == 0 {
                    FpMatrix::zeros(f, shape.0, shape.1)
                } else {
                    m.clone()
                };
                if m.shape() != shape {
                    return Err(perr(
                        *ln,
                        *col,
                        format!(
                            "map `{}` has shape {:?}, expected {:?}",
                            ar.name,
                            m.shape(),
                            shape
                        ),
                    ));
                }
                maps.push(m);
            }
            None => maps.push(FpMatrix::zeros(f, shape.0, shape.1)),
        }
    }
    let m = QModule::new(algebra.clone(), dims, maps).map_err(|e| perr(0, 0, e.to_string()))?;
    Ok((name, m))
}

/// Canonical text of a module: nonzero dimensions and nonzero maps only.
pub fn print_module(name: &str, m: &QModule) -> String {
    let a = m.algebra();
    let q = a.quiver();
    let f = a.field();
    let mut s = String::new();
    writeln!(s, "module {name} over {}", a.name()).unwrap();
    for (v, &d) in m.dims().iter().enumerate() {
        if d > 0 {
            writeln!(s, "dim {} {}", q.vertices()[v], d).unwrap();
        }
    }
    for (ai, ar) in q.arrows().iter().enumerate() {
        let mat = m.map(ai);
        if mat.is_zero() {
            continue;
        }
        let rows: Vec<String> = (0..mat.rows())
            .map(|i| {
                let es: Vec<String> = mat
                    .row(i)
                    .iter()
                    .map(|&x| f.signed(x).to_string())
                    .collect();
                format!("[{}]", es.join(","))
            })
            .collect();
        writeln!(s, "map {} [{}]", ar.name, rows.join(",")).unwrap();
    }
    s
}

/// `(display name, module path)` entries of a manifest.
pub fn parse_manifest(text: &str) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for (ln, l) in lines(text) {
        let parts: Vec<&str> = l.split_whitespace().collect();
        if parts.len() != 3 || parts[0] != "member" {
            return Err(perr(ln, 1, "expected `member <name> <path>`"));
        }
        out.push((parts[1].to_string(), parts[2].to_string()));
    }
    Ok(out)
}

/// Read an algebra file; the algebra is named after the file stem.
pub fn load_algebra(path: &FsPath, opts: &AlgebraOptions) -> Result<Arc<BoundQuiverAlgebra>> {
    let text = read(path)?;
    let stem = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("algebra");
    parse_algebra(&text, stem, opts)
}

pub fn load_module(path: &FsPath, algebra: &Arc<BoundQuiverAlgebra>) -> Result<(String, QModule)> {
    parse_module(&read(path)?, algebra)
}

pub fn load_universe(path: &FsPath, algebra: &Arc<BoundQuiverAlgebra>) -> Result<Universe> {
    let text = read(path)?;
    let base: PathBuf = path.parent().map(FsPath::to_path_buf).unwrap_or_default();
    let mut members = Vec::new();
    for (name, rel) in parse_manifest(&text)? {
        let (_, m) = load_module(&base.join(rel), algebra)?;
        members.push((name, m));
    }
    Universe::new(algebra.clone(), members)
}

fn read(path: &FsPath) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| perr(0, 0, format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    const L2: &str = "field 101\nvertices 3 4 5\narrow α 3 4\narrow β 4 5\nrelation 1*βα = 0\n";

    #[test]
    fn algebra_round_trip() {
        let a = parse_algebra(L2, "lambda_dprime", &AlgebraOptions::default()).unwrap();
        assert_eq!(print_algebra(&a), L2);
        assert_eq!(a.dim(), 5);
    }

    #[test]
    fn signed_terms_parse() {
        let text = "vertices 1 2 3 4\narrow a 1 2\narrow b 2 4\narrow c 1 3\narrow d 3 4\nrelation ba - dc = 0\n";
        let a = parse_algebra(text, "sq", &AlgebraOptions::default()).unwrap();
        assert_eq!(a.relations()[0].terms[1].0, 100);
        assert_eq!(a.dim(), 4 + 4 + 1);
    }

    #[test]
    fn non_composable_relation_is_parse_error() {
        let text = "vertices 3 4 5\narrow α 3 4\narrow β 4 5\nrelation 1*αβ = 0\n";
        let e = parse_algebra(text, "x", &AlgebraOptions::default()).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 4, .. }), "{e:?}");
    }

    #[test]
    fn module_round_trip() {
        let a = parse_algebra(L2, "lambda_dprime", &AlgebraOptions::default()).unwrap();
        let text = "module P(3) over lambda_dprime\ndim 3 1\ndim 4 1\nmap α [[1]]\n";
        let (n, m) = parse_module(text, &a).unwrap();
        assert_eq!(n, "P(3)");
        assert_eq!(print_module(&n, &m), text);
    }

    #[test]
    fn relation_violation_rejected() {
        let a = parse_algebra(L2, "lambda_dprime", &AlgebraOptions::default()).unwrap();
        let text =
            "module X over lambda_dprime\ndim 3 1\ndim 4 1\ndim 5 1\nmap α [[1]]\nmap β [[1]]\n";
        assert!(parse_module(text, &a).is_err());
    }

    #[test]
    fn prime_override_wins() {
        let opts = AlgebraOptions {
            prime: Some(32003),
            length_cap: None,
        };
        let a = parse_algebra(L2, "l", &opts).unwrap();
        assert_eq!(a.field().p(), 32003);
    }
}
