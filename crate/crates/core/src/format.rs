//! Plain-text file formats.
//!
//! All formats are line oriented; blank lines and lines starting with `#`
//! are ignored.
//!
//! * Quandle table: `n`, then `n` rows of `n` integers (row `a` lists `a*b`).
//! * Partition: one block per line, elements separated by spaces.
//! * Mesh: `mesh <k>`, then `group <i> <m1>x<m2>...` for every index, then
//!   optional `phi <i> <j> <images>` (images of the elements of `A_i` as
//!   element indices of `A_j`, default zero map) and `c <i> <j> <x>`
//!   (default 0).
//! * Affine spec: `<m1>x<m2>x...:mul:<u>` or `<m1>x...:<i0>,<i1>,...`
//!   (explicit image list, optionally prefixed by `map:`).

use std::fmt::Write as _;

use crate::affine::{AbelianGroup, CyclicProduct};
use crate::cover::CoverResult;
use crate::error::ParseError;
use crate::mesh::{AffineMesh, RawMesh};
use crate::quandle::Quandle;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_num<T: std::str::FromStr>(line: usize, tok: &str) -> Result<T, ParseError> {
    tok.parse().map_err(|_| ParseError::new(line, format!("expected a number, found `{tok}`")))
}

fn parse_list(line: usize, text: &str) -> Result<Vec<usize>, ParseError> {
    text.split_whitespace().map(|t| parse_num(line, t)).collect()
}

/// Reads a quandle table. Only the shape is checked; validation of the
/// axioms is up to the caller.
pub fn parse_table(text: &str) -> Result<Vec<Vec<usize>>, ParseError> {
    let mut lines = content_lines(text);
    let (l0, first) = lines.next().ok_or_else(|| ParseError::new(0, "empty input"))?;
    let n: usize = parse_num(l0, first)?;
    if n == 0 {
        return Err(ParseError::new(l0, "size must be positive"));
    }
    let mut rows = Vec::with_capacity(n);
    for (line, text) in lines {
        if rows.len() == n {
            return Err(ParseError::new(line, "more rows than declared"));
        }
        let row = parse_list(line, text)?;
        if row.len() != n {
            return Err(ParseError::new(line, format!("expected {n} entries, found {}", row.len())));
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(ParseError::new(0, format!("expected {n} rows, found {}", rows.len())));
    }
    Ok(rows)
}

pub fn write_quandle(q: &Quandle) -> String {
    let mut out = format!("{}\n", q.size());
    for row in q.rows() {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_partition(text: &str) -> Result<Vec<Vec<usize>>, ParseError> {
    content_lines(text).map(|(line, l)| parse_list(line, l)).collect()
}

pub fn write_partition(blocks: &[Vec<usize>]) -> String {
    blocks
        .iter()
        .map(|b| b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ") + "\n")
        .collect()
}

/// `2x2x3` → `[2, 2, 3]`.
pub fn parse_moduli(line: usize, text: &str) -> Result<CyclicProduct, ParseError> {
    let moduli: Vec<usize> =
        text.split('x').map(|t| parse_num(line, t.trim())).collect::<Result<_, _>>()?;
    CyclicProduct::new(moduli).map_err(|e| ParseError::new(line, e.to_string()))
}

fn moduli_string(g: &CyclicProduct) -> String {
    g.moduli().iter().map(|m| m.to_string()).collect::<Vec<_>>().join("x")
}

pub fn parse_mesh(text: &str) -> Result<RawMesh, ParseError> {
    let mut lines = content_lines(text);
    let (l0, head) = lines.next().ok_or_else(|| ParseError::new(0, "empty input"))?;
    let k: usize = match head.split_whitespace().collect::<Vec<_>>()[..] {
        ["mesh", k] => parse_num(l0, k)?,
        _ => return Err(ParseError::new(l0, "expected `mesh <k>`")),
    };
    if k == 0 {
        return Err(ParseError::new(l0, "index set must be nonempty"));
    }
    let mut groups: Vec<Option<CyclicProduct>> = vec![None; k];
    let mut phis: Vec<(usize, usize, usize, Vec<usize>)> = Vec::new();
    let mut consts: Vec<(usize, usize, usize, usize)> = Vec::new();
    let index = |line: usize, tok: &str| -> Result<usize, ParseError> {
        let i: usize = parse_num(line, tok)?;
        if i >= k {
            return Err(ParseError::new(line, format!("index {i} out of range")));
        }
        Ok(i)
    };
    for (line, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        match toks.first().copied() {
            Some("group") if toks.len() == 3 => {
                let i = index(line, toks[1])?;
                if groups[i].is_some() {
                    return Err(ParseError::new(line, format!("group {i} declared twice")));
                }
                groups[i] = Some(parse_moduli(line, toks[2])?);
            }
            Some("phi") if toks.len() >= 3 => {
                let (i, j) = (index(line, toks[1])?, index(line, toks[2])?);
                let images = toks[3..].iter().map(|t| parse_num(line, t)).collect::<Result<_, _>>()?;
                phis.push((line, i, j, images));
            }
            Some("c") if toks.len() == 4 => {
                let (i, j) = (index(line, toks[1])?, index(line, toks[2])?);
                consts.push((line, i, j, parse_num(line, toks[3])?));
            }
            _ => return Err(ParseError::new(line, format!("unrecognized line `{l}`"))),
        }
    }
    let groups: Vec<CyclicProduct> = groups
        .into_iter()
        .enumerate()
        .map(|(i, g)| g.ok_or_else(|| ParseError::new(0, format!("group {i} not declared"))))
        .collect::<Result<_, _>>()?;
    let mut raw = RawMesh::zero(groups);
    for (line, i, j, images) in phis {
        if images.len() != raw.groups[i].order() {
            return Err(ParseError::new(
                line,
                format!("phi {i} {j} needs {} images", raw.groups[i].order()),
            ));
        }
        raw.homs[i][j] = images;
    }
    for (_, i, j, c) in consts {
        raw.consts[i][j] = c;
    }
    Ok(raw)
}

/// Writes a mesh, omitting zero maps and zero constants.
pub fn write_mesh(m: &AffineMesh) -> String {
    let k = m.index_count();
    let mut out = format!("mesh {k}\n");
    for (i, g) in m.groups().iter().enumerate() {
        writeln!(out, "group {i} {}", moduli_string(g)).unwrap();
    }
    for i in 0..k {
        for j in 0..k {
            let map = m.phi(i, j).map();
            if map.iter().any(|&x| x != m.groups()[j].zero()) {
                let imgs: Vec<String> = map.iter().map(|x| x.to_string()).collect();
                writeln!(out, "phi {i} {j} {}", imgs.join(" ")).unwrap();
            }
        }
    }
    for i in 0..k {
        for j in 0..k {
            if m.c(i, j) != m.groups()[j].zero() {
                writeln!(out, "c {i} {j} {}", m.c(i, j)).unwrap();
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AutomorphismSpec {
    /// `x ↦ u·x`.
    Multiply(i64),
    /// Explicit images in element order.
    Images(Vec<usize>),
}

/// Parses `<moduli>:<automorphism>`.
pub fn parse_affine_spec(spec: &str) -> Result<(CyclicProduct, AutomorphismSpec), ParseError> {
    let spec = spec.trim();
    let spec = spec.strip_prefix("affine ").unwrap_or(spec).trim();
    let (moduli, auto) = spec
        .split_once(':')
        .ok_or_else(|| ParseError::new(1, "expected `<m1>x<m2>...:<automorphism>`"))?;
    let group = parse_moduli(1, moduli)?;
    let auto = if let Some(u) = auto.strip_prefix("mul:") {
        AutomorphismSpec::Multiply(parse_num(1, u.trim())?)
    } else {
        let list = auto.strip_prefix("map:").unwrap_or(auto);
        let images: Vec<usize> =
            list.split(',').map(|t| parse_num(1, t.trim())).collect::<Result<_, _>>()?;
        AutomorphismSpec::Images(images)
    };
    Ok((group, auto))
}

/// One line per element of `A`: its index, the pair (displacement index,
/// transversal entry), the index of its `f`-image and its `ψ`-image.
pub fn write_cover_sidecar(r: &CoverResult) -> String {
    let mut out = String::new();
    writeln!(out, "# cover of order {}: A = Dis x T, |Dis| = {}, |T| = {}, kappa = {}",
        r.order(), r.displacements.len(), r.transversal.len(), r.transversal.kappa()).unwrap();
    writeln!(out, "# transversal entries (element per index): {}",
        r.transversal.entries().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")).unwrap();
    writeln!(out, "# index alpha t f psi").unwrap();
    for u in 0..r.order() {
        let (alpha, t) = r.pair(u);
        writeln!(out, "{u} {alpha} {t} {} {}", r.f().apply(u), r.psi[u]).unwrap();
    }
    out
}

/// Parses a sidecar back into `(alpha, t, f, psi)` rows.
pub fn parse_cover_sidecar(text: &str) -> Result<Vec<[usize; 4]>, ParseError> {
    let mut rows = Vec::new();
    for (line, l) in content_lines(text) {
        let v = parse_list(line, l)?;
        if v.len() != 5 || v[0] != rows.len() {
            return Err(ParseError::new(line, "expected `index alpha t f psi` in order"));
        }
        rows.push([v[1], v[2], v[3], v[4]]);
    }
    Ok(rows)
}
