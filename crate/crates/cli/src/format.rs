//! Line-oriented text formats for algebras and modules.
//!
//! ```text
//! # algebra
//! field gf 2
//! nilpotency 3
//! vertices 1 2
//! arrow a 1 2
//! relation 1 b.a -1 c
//!
//! # module
//! module M
//! dim 1 1
//! map a 1x1 1
//! ```
//!
//! `#` starts a comment. Paths are written last arrow first.

use cotilt_core::{Algebra, Field, Matrix, Quiver, Relation, Representation};

use crate::error::CliError;

fn parse_err(line: usize, msg: impl Into<String>) -> CliError {
    CliError::Parse {
        line,
        msg: msg.into(),
    }
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Invalid(msg.into())
}

fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let words: Vec<&str> = body.split_whitespace().collect();
        (!words.is_empty()).then_some((i + 1, words))
    })
}

/// `gf 2`, `gf2`, `rational` or `q`.
pub fn parse_field(words: &[&str]) -> Result<Field, String> {
    let joined = words.join("");
    let lower = joined.to_ascii_lowercase();
    if lower == "rational" || lower == "q" {
        return Ok(Field::Rational);
    }
    let digits = lower
        .strip_prefix("gf")
        .ok_or_else(|| format!("unknown field `{}`", words.join(" ")))?;
    let p: u32 = digits
        .parse()
        .map_err(|_| format!("malformed characteristic `{digits}`"))?;
    Field::prime(p).map_err(|e| e.to_string())
}

pub fn parse_algebra(text: &str) -> Result<Algebra, CliError> {
    let mut field = None;
    let mut bound = None;
    let mut vertices: Option<Vec<String>> = None;
    let mut arrows: Vec<(String, String, String)> = Vec::new();
    let mut relations: Vec<(usize, Vec<String>)> = Vec::new();
    for (n, words) in lines(text) {
        match words[0] {
            "field" => field = Some(parse_field(&words[1..]).map_err(|m| parse_err(n, m))?),
            "nilpotency" => {
                let [_, v] = words[..] else {
                    return Err(parse_err(n, "expected `nilpotency <N>`"));
                };
                let b: usize = v
                    .parse()
                    .map_err(|_| parse_err(n, format!("malformed bound `{v}`")))?;
                if b == 0 {
                    return Err(parse_err(n, "nilpotency bound must be positive"));
                }
                bound = Some(b);
            }
            "vertices" => {
                if words.len() < 2 {
                    return Err(parse_err(n, "no vertices listed"));
                }
                vertices = Some(words[1..].iter().map(|s| s.to_string()).collect());
            }
            "arrow" => {
                let [_, name, s, t] = words[..] else {
                    return Err(parse_err(n, "expected `arrow <name> <source> <target>`"));
                };
                arrows.push((name.into(), s.into(), t.into()));
            }
            "relation" => {
                if words.len() < 3 || words.len() % 2 == 0 {
                    return Err(parse_err(
                        n,
                        "expected `relation <coef> <path> [<coef> <path> ...]`",
                    ));
                }
                relations.push((n, words[1..].iter().map(|s| s.to_string()).collect()));
            }
            other => return Err(parse_err(n, format!("unknown directive `{other}`"))),
        }
    }
    let field = field.ok_or_else(|| invalid("missing `field` directive"))?;
    let vertices = vertices.ok_or_else(|| invalid("missing `vertices` directive"))?;
    let vrefs: Vec<&str> = vertices.iter().map(String::as_str).collect();
    let arefs: Vec<(&str, &str, &str)> = arrows
        .iter()
        .map(|(a, s, t)| (a.as_str(), s.as_str(), t.as_str()))
        .collect();
    let quiver = Quiver::from_names(&vrefs, &arefs).map_err(|e| invalid(e.to_string()))?;
    let mut rels = Vec::with_capacity(relations.len());
    for (n, tokens) in relations {
        let mut terms = Vec::new();
        for pair in tokens.chunks(2) {
            let c = field
                .parse(&pair[0])
                .map_err(|e| parse_err(n, e.to_string()))?;
            let p = quiver
                .parse_path(&pair[1])
                .map_err(|e| parse_err(n, e.to_string()))?;
            terms.push((c, p));
        }
        rels.push(Relation::new(field, terms).map_err(|e| parse_err(n, e.to_string()))?);
    }
    let longest = quiver.arrow_count() + 1;
    let bound = bound.unwrap_or(longest.max(1));
    Ok(Algebra::build(quiver, rels, field, bound)?)
}

/// Parses a module; entries are read in the field of `alg`.
pub fn parse_module(text: &str, alg: &Algebra) -> Result<(String, Representation), CliError> {
    let field = alg.field();
    let quiver = alg.quiver();
    let mut name = None;
    let mut dims: Option<(usize, Vec<usize>)> = None;
    let mut maps: Vec<Option<(usize, Matrix)>> = vec![None; quiver.arrow_count()];
    for (n, words) in lines(text) {
        match words[0] {
            "module" => {
                if words.len() != 2 {
                    return Err(parse_err(n, "expected `module <name>`"));
                }
                name = Some(words[1].to_string());
            }
            "dim" => {
                let d: Result<Vec<usize>, _> =
                    words[1..].iter().map(|w| w.parse::<usize>()).collect();
                let d = d.map_err(|_| parse_err(n, "malformed dimension"))?;
                if d.len() != quiver.vertex_count() {
                    return Err(parse_err(
                        n,
                        format!(
                            "{} dimensions for {} vertices",
                            d.len(),
                            quiver.vertex_count()
                        ),
                    ));
                }
                dims = Some((n, d));
            }
            "map" => {
                if words.len() < 3 {
                    return Err(parse_err(
                        n,
                        "expected `map <arrow> <rows>x<cols> <entries>`",
                    ));
                }
                let ai = quiver
                    .arrow_index(words[1])
                    .map_err(|e| parse_err(n, e.to_string()))?;
                let (r, c) = words[2]
                    .split_once('x')
                    .and_then(|(r, c)| Some((r.parse::<usize>().ok()?, c.parse::<usize>().ok()?)))
                    .ok_or_else(|| parse_err(n, format!("malformed shape `{}`", words[2])))?;
                let entries = &words[3..];
                if entries.len() != r * c {
                    return Err(parse_err(
                        n,
                        format!("{} entries for a {r}x{c} matrix", entries.len()),
                    ));
                }
                let values: Result<Vec<_>, _> = entries.iter().map(|e| field.parse(e)).collect();
                let values = values.map_err(|e| parse_err(n, e.to_string()))?;
                let m = Matrix::from_entries(field, r, c, values)
                    .map_err(|e| parse_err(n, e.to_string()))?;
                if maps[ai].is_some() {
                    return Err(parse_err(n, format!("second map for arrow `{}`", words[1])));
                }
                maps[ai] = Some((n, m));
            }
            other => return Err(parse_err(n, format!("unknown directive `{other}`"))),
        }
    }
    let (dim_line, dims) = dims.ok_or_else(|| invalid("missing `dim` directive"))?;
    let mut matrices = Vec::with_capacity(quiver.arrow_count());
    for (ai, slot) in maps.into_iter().enumerate() {
        let a = quiver.arrow(ai);
        let (rows, cols) = (dims[a.target], dims[a.source]);
        match slot {
            Some((n, m)) => {
                if m.rows() != rows || m.cols() != cols {
                    return Err(parse_err(
                        n,
                        format!("arrow `{}` needs a {rows}x{cols} matrix", a.name),
                    ));
                }
                matrices.push(m);
            }
            None if rows == 0 || cols == 0 => matrices.push(Matrix::zeros(field, rows, cols)),
            None => {
                return Err(parse_err(
                    dim_line,
                    format!("missing map for arrow `{}`", a.name),
                ))
            }
        }
    }
    let m = Representation::new(alg, dims, matrices).map_err(|e| invalid(e.to_string()))?;
    Ok((name.unwrap_or_else(|| String::from("M")), m))
}
