//! Plain-text file formats.
//!
//! * instance: one point per line, `x y z`, each a decimal rational
//!   (`3`, `-1.25`, `7/3`);
//! * coloring: `id color` per line;
//! * cover: section `[octants]` with `a1 a2 a3` lines, section `[targets]`
//!   with `x y z` lines;
//! * triangles: section `[triangles]` with `cu cv s` lines, section
//!   `[targets2d]` with `u v` lines;
//! * partition dump: `id -> owner_id` or `id -> S`.
//!
//! Blank lines and lines starting with `#` are ignored everywhere. Errors
//! carry 1-based line numbers.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::coloring::{Color, Coloring};
use crate::duality::{CoverInstance, TriangleHomothet};
use crate::geom::{project, rank_reduce, OctantApex, OrderedPointSet, Point3, PointId, RawPoint3, Rational};
use crate::partition::Partition;
use crate::{Error, Result};

pub fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    let bad = || format!("'{s}' is not a rational number");
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(format!("'{s}' has a zero denominator"));
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let negative = int.starts_with('-');
        let digits = int.trim_start_matches(['-', '+']);
        if frac.is_empty() && digits.is_empty()
            || !frac.chars().all(|c| c.is_ascii_digit())
            || !digits.chars().all(|c| c.is_ascii_digit())
        {
            return Err(bad());
        }
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let whole: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().map_err(|_| bad())? };
        let part: BigInt = if frac.is_empty() { BigInt::zero() } else { frac.parse().map_err(|_| bad())? };
        let value = Rational::new(whole * &scale + part, scale);
        return Ok(if negative { -value } else { value });
    }
    let v: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(v))
}

/// Non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn rationals<const N: usize>(line: usize, s: &str) -> Result<[Rational; N]> {
    let fields: Vec<&str> = s.split_whitespace().collect();
    if fields.len() != N {
        return Err(Error::Format {
            line,
            msg: format!("expected {N} fields, found {}", fields.len()),
        });
    }
    let values = fields
        .iter()
        .map(|f| parse_rational(f).map_err(|msg| Error::Format { line, msg }))
        .collect::<Result<Vec<_>>>()?;
    Ok(values.try_into().expect("length checked"))
}

/// Points in file order; ids are `0, 1, ...`.
pub fn parse_points(text: &str) -> Result<Vec<RawPoint3>> {
    content_lines(text)
        .enumerate()
        .map(|(id, (line, l))| {
            let [x, y, z] = rationals::<3>(line, l)?;
            Ok(RawPoint3::new(id, x, y, z))
        })
        .collect()
}

pub fn emit_points(points: &[RawPoint3]) -> String {
    let mut out = String::new();
    for p in points {
        writeln!(out, "{} {} {}", p.x, p.y, p.z).unwrap();
    }
    out
}

pub fn emit_ranks(points: &[Point3]) -> String {
    let mut out = String::new();
    for p in points {
        writeln!(out, "{} {} {}", p.x, p.y, p.z).unwrap();
    }
    out
}

/// Parse, rank-reduce and project an instance file.
pub fn parse_instance(text: &str) -> Result<OrderedPointSet> {
    let raw = parse_points(text)?;
    if raw.is_empty() {
        return Err(Error::Format {
            line: 0,
            msg: "instance has no points".into(),
        });
    }
    project(&rank_reduce(&raw))
}

pub fn parse_coloring(text: &str) -> Result<Coloring> {
    content_lines(text)
        .map(|(line, l)| {
            let fields: Vec<&str> = l.split_whitespace().collect();
            let err = |msg: String| Error::Format { line, msg };
            if fields.len() != 2 {
                return Err(err(format!("expected 'id color', found {} fields", fields.len())));
            }
            let id: PointId = fields[0].parse().map_err(|_| err(format!("bad id '{}'", fields[0])))?;
            let c: Color = fields[1].parse().map_err(|_| err(format!("bad color '{}'", fields[1])))?;
            Ok((id, c))
        })
        .collect()
}

pub fn emit_coloring(coloring: &Coloring) -> String {
    let mut out = String::new();
    for (id, c) in coloring.iter() {
        writeln!(out, "{id} {c}").unwrap();
    }
    out
}

pub fn emit_partition(set: &OrderedPointSet, partition: &Partition) -> String {
    let mut out = String::new();
    for p in set {
        match partition.owner(p.id) {
            Some(o) => writeln!(out, "{} -> {}", p.id, o).unwrap(),
            None => writeln!(out, "{} -> S", p.id).unwrap(),
        }
    }
    out
}

/// Lines grouped by `[section]` headers; content before any header is an error.
fn sections<'a>(text: &'a str, names: &[&str]) -> Result<Vec<Vec<(usize, &'a str)>>> {
    let mut out = vec![Vec::new(); names.len()];
    let mut current: Option<usize> = None;
    for (line, l) in content_lines(text) {
        if let Some(name) = l.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
            current = Some(names.iter().position(|&n| n == name).ok_or_else(|| Error::Format {
                line,
                msg: format!("unknown section [{name}]"),
            })?);
            continue;
        }
        match current {
            Some(i) => out[i].push((line, l)),
            None => {
                return Err(Error::Format {
                    line,
                    msg: format!("data before the first section header; expected one of {names:?}"),
                })
            }
        }
    }
    Ok(out)
}

pub fn parse_cover(text: &str) -> Result<CoverInstance> {
    let s = sections(text, &["octants", "targets"])?;
    let octants = s[0]
        .iter()
        .map(|&(line, l)| {
            let [a, b, c] = rationals::<3>(line, l)?;
            Ok(OctantApex::new(a, b, c))
        })
        .collect::<Result<Vec<_>>>()?;
    let targets = s[1]
        .iter()
        .enumerate()
        .map(|(id, &(line, l))| {
            let [x, y, z] = rationals::<3>(line, l)?;
            Ok(RawPoint3::new(id, x, y, z))
        })
        .collect::<Result<Vec<_>>>()?;
    CoverInstance::new(octants, targets)
}

pub fn emit_cover(cover: &CoverInstance) -> String {
    let mut out = String::from("[octants]\n");
    for o in &cover.octants {
        writeln!(out, "{} {} {}", o.a[0], o.a[1], o.a[2]).unwrap();
    }
    out.push_str("[targets]\n");
    out.push_str(&emit_points(&cover.targets));
    out
}

pub type TriangleInstance = (Vec<TriangleHomothet>, Vec<(Rational, Rational)>);

pub fn parse_triangles(text: &str) -> Result<TriangleInstance> {
    let s = sections(text, &["triangles", "targets2d"])?;
    let triangles = s[0]
        .iter()
        .map(|&(line, l)| {
            let [u, v, scale] = rationals::<3>(line, l)?;
            if !scale.is_positive() {
                return Err(Error::Format {
                    line,
                    msg: format!("homothety ratio must be positive, got {scale}"),
                });
            }
            TriangleHomothet::new(u, v, scale)
        })
        .collect::<Result<Vec<_>>>()?;
    let targets = s[1]
        .iter()
        .map(|&(line, l)| {
            let [u, v] = rationals::<2>(line, l)?;
            Ok((u, v))
        })
        .collect::<Result<Vec<_>>>()?;
    if triangles.is_empty() || targets.is_empty() {
        return Err(Error::Domain("triangle file needs homothets and targets".into()));
    }
    Ok((triangles, targets))
}

pub fn emit_triangles(triangles: &[TriangleHomothet], targets: &[(Rational, Rational)]) -> String {
    let mut out = String::from("[triangles]\n");
    for t in triangles {
        writeln!(out, "{} {} {}", t.corner_u, t.corner_v, t.scale).unwrap();
    }
    out.push_str("[targets2d]\n");
    for (u, v) in targets {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
