//! Parsers and writers for the text file formats: group files (Cayley
//! table or permutation generators), cocycle files, and metric-group
//! files. All formats are line-oriented UTF-8; blank lines and lines
//! starting with `#` are ignored.

use std::sync::Arc;

use thiserror::Error;

use crate::cohomology::{CohError, Cochain};
use crate::group::{FiniteGroup, GroupError};
use crate::metric::{make_metric_group, MetricError, MetricGroup};
use crate::zlinalg::Qz;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FileError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Cohomology(#[from] CohError),
    #[error(transparent)]
    Metric(#[from] MetricError),
}

impl FileError {
    /// Input-shaped errors (syntax, malformed tables) exit with code 2;
    /// mathematical failures on well-formed input exit with code 1.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            FileError::Syntax { .. }
                | FileError::Group(GroupError::MalformedSpec { .. })
                | FileError::Group(GroupError::NotAGroup { .. })
                | FileError::Cohomology(CohError::ValueCount { .. })
                | FileError::Metric(MetricError::ValueCount { .. })
        )
    }
}

/// Numbered, non-blank, non-comment lines.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn syntax(line: usize, msg: impl Into<String>) -> FileError {
    FileError::Syntax { line, msg: msg.into() }
}

/// Loads a group file:
///
/// ```text
/// group <name>
/// order <n>
/// table            |  perm <degree>
/// <n rows of n>    |  <one line per generator, images of 1..degree>
/// ```
pub fn load_group(text: &str) -> Result<Arc<FiniteGroup>, FileError> {
    let mut lines = content_lines(text);

    let (ln, first) = lines.next().ok_or_else(|| syntax(1, "empty group file"))?;
    let name = match first.split_whitespace().collect::<Vec<_>>()[..] {
        ["group", name] => name.to_string(),
        _ => return Err(syntax(ln, "expected `group <name>`")),
    };

    let (ln, second) = lines.next().ok_or_else(|| syntax(ln, "missing `order` line"))?;
    let order: usize = match second.split_whitespace().collect::<Vec<_>>()[..] {
        ["order", n] => n
            .parse()
            .map_err(|_| syntax(ln, format!("bad order `{n}`")))?,
        _ => return Err(syntax(ln, "expected `order <n>`")),
    };
    if order == 0 {
        return Err(syntax(ln, "order must be positive"));
    }

    let (ln, mode) = lines.next().ok_or_else(|| syntax(ln, "missing `table` or `perm` line"))?;
    let mode_parts: Vec<&str> = mode.split_whitespace().collect();
    match mode_parts[..] {
        ["table"] => {
            let mut rows = Vec::with_capacity(order);
            for _ in 0..order {
                let (ln, row) = lines
                    .next()
                    .ok_or_else(|| syntax(ln, format!("table needs {order} rows")))?;
                let parsed: Result<Vec<usize>, _> =
                    row.split_whitespace().map(str::parse).collect();
                let parsed =
                    parsed.map_err(|_| syntax(ln, "table entries must be integers"))?;
                if parsed.len() != order {
                    return Err(syntax(ln, format!("expected {order} entries per row")));
                }
                rows.push(parsed);
            }
            if let Some((ln, _)) = lines.next() {
                return Err(syntax(ln, "unexpected content after the table"));
            }
            Ok(Arc::new(FiniteGroup::from_table(name, rows)?))
        }
        ["perm", degree] => {
            let degree: usize = degree
                .parse()
                .map_err(|_| syntax(ln, format!("bad degree `{degree}`")))?;
            if degree == 0 {
                return Err(syntax(ln, "degree must be positive"));
            }
            let mut gens = Vec::new();
            for (ln, line) in lines {
                let parsed: Result<Vec<usize>, _> =
                    line.split_whitespace().map(str::parse).collect();
                let images =
                    parsed.map_err(|_| syntax(ln, "permutation images must be integers"))?;
                if images.len() != degree {
                    return Err(syntax(ln, format!("expected {degree} images")));
                }
                if images.iter().any(|&x| x == 0 || x > degree) {
                    return Err(syntax(ln, "images use one-based points 1..degree"));
                }
                gens.push(images.iter().map(|&x| x - 1).collect());
            }
            let group = FiniteGroup::from_permutations(name, degree, &gens)?;
            if group.order() != order {
                return Err(FileError::Group(GroupError::NotAGroup {
                    reason: format!(
                        "declared order {order}, but the generators close into {} elements",
                        group.order()
                    ),
                }));
            }
            Ok(group)
        }
        _ => Err(syntax(ln, "expected `table` or `perm <degree>`")),
    }
}

/// Parses a cocycle file against an already-loaded group:
///
/// ```text
/// cocycle <name> degree <n> group <groupname>
/// g1 g2 ... gn num/den
/// ```
///
/// Omitted tuples are zero; tuples mentioning the identity are rejected.
pub fn parse_cocycle(
    text: &str,
    group: &Arc<FiniteGroup>,
) -> Result<(String, Cochain), FileError> {
    let mut lines = content_lines(text);
    let (ln, header) = lines.next().ok_or_else(|| syntax(1, "empty cocycle file"))?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    let (name, degree, group_name) = match parts[..] {
        ["cocycle", name, "degree", n, "group", gname] => {
            let n: usize =
                n.parse().map_err(|_| syntax(ln, format!("bad degree `{n}`")))?;
            (name.to_string(), n, gname.to_string())
        }
        _ => {
            return Err(syntax(
                ln,
                "expected `cocycle <name> degree <n> group <groupname>`",
            ))
        }
    };
    if group_name != group.name() {
        return Err(syntax(
            ln,
            format!("cocycle is for group `{group_name}`, loaded group is `{}`", group.name()),
        ));
    }
    let mut c = Cochain::zero(group, degree)?;
    let mut seen = std::collections::BTreeSet::new();
    for (ln, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != degree + 1 {
            return Err(syntax(
                ln,
                format!("expected {degree} element indices and one value"),
            ));
        }
        let tuple: Result<Vec<usize>, _> =
            fields[..degree].iter().map(|f| f.parse()).collect();
        let tuple = tuple.map_err(|_| syntax(ln, "element indices must be integers"))?;
        if tuple.iter().any(|&g| g == 0) {
            return Err(syntax(ln, "normalized cocycles reject tuples containing 0"));
        }
        if tuple.iter().any(|&g| g >= group.order()) {
            return Err(syntax(ln, "element index out of range"));
        }
        if !seen.insert(tuple.clone()) {
            return Err(syntax(ln, "duplicate tuple"));
        }
        let value = parse_fraction(fields[degree]).ok_or_else(|| {
            syntax(ln, format!("bad value `{}`, expected num/den", fields[degree]))
        })?;
        c.set_value(&tuple, value);
    }
    Ok((name, c))
}

fn parse_fraction(text: &str) -> Option<Qz> {
    let (num, den) = text.split_once('/')?;
    let num: i64 = num.parse().ok()?;
    let den: i64 = den.parse().ok()?;
    if den == 0 {
        return None;
    }
    Some(Qz::new(num, den))
}

/// Serializes a cochain in the cocycle file format (zeros omitted, tuples
/// in lexicographic order).
pub fn write_cocycle(name: &str, c: &Cochain) -> String {
    use std::fmt::Write as _;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "cocycle {name} degree {} group {}",
        c.degree(),
        c.group().name()
    );
    let order = c.group().order();
    let mut tuple = vec![0usize; c.degree()];
    for (idx, v) in c.values().iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        crate::cohomology::decode_tuple_pub(order, idx, &mut tuple);
        let tup = tuple.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(" ");
        let _ = writeln!(s, "{tup} {v}");
    }
    s
}

/// A parsed metric file: the underlying group is referenced by a path
/// resolved by the caller.
pub struct MetricSpec {
    pub name: String,
    pub group_ref: String,
    pub assignments: Vec<(usize, Qz)>,
}

/// Parses a metric-group file:
///
/// ```text
/// metric <name>
/// group <path-to-group-file>
/// <x> <num/den>
/// ```
///
/// Omitted elements default to `q = 0`.
pub fn parse_metric(text: &str) -> Result<MetricSpec, FileError> {
    let mut lines = content_lines(text);
    let (ln, first) = lines.next().ok_or_else(|| syntax(1, "empty metric file"))?;
    let name = match first.split_whitespace().collect::<Vec<_>>()[..] {
        ["metric", name] => name.to_string(),
        _ => return Err(syntax(ln, "expected `metric <name>`")),
    };
    let (ln, second) = lines.next().ok_or_else(|| syntax(ln, "missing `group` line"))?;
    let group_ref = match second.split_whitespace().collect::<Vec<_>>()[..] {
        ["group", path] => path.to_string(),
        _ => return Err(syntax(ln, "expected `group <path>`")),
    };
    let mut assignments = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for (ln, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [x, value] = fields[..] else {
            return Err(syntax(ln, "expected `<element> <num/den>`"));
        };
        let x: usize = x.parse().map_err(|_| syntax(ln, "element must be an integer"))?;
        if !seen.insert(x) {
            return Err(syntax(ln, format!("duplicate assignment for element {x}")));
        }
        let q = parse_fraction(value)
            .ok_or_else(|| syntax(ln, format!("bad value `{value}`, expected num/den")))?;
        assignments.push((x, q));
    }
    Ok(MetricSpec { name, group_ref, assignments })
}

/// Builds the metric group once the underlying group has been loaded.
pub fn realize_metric(
    spec: &MetricSpec,
    group: &Arc<FiniteGroup>,
) -> Result<MetricGroup, FileError> {
    let mut q = vec![Qz::ZERO; group.order()];
    for &(x, v) in &spec.assignments {
        if x >= group.order() {
            return Err(FileError::Metric(MetricError::ValueCount {
                expected: group.order(),
                got: x + 1,
            }));
        }
        q[x] = v;
    }
    Ok(make_metric_group(spec.name.clone(), group, q)?)
}
