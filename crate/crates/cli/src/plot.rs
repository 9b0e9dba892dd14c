//! Barcode pictures: SVG 1.1 and plain-text lanes, one lane per degree.

use std::collections::BTreeSet;
use std::fmt::Write;

use tamarkin_core::value::BigRational;
use tamarkin_core::{Endpoint, Ext, GradedBarcode, Interval, PiRational};

/// Names tick labels as multiples of a unit, e.g. `2πr²` for the action of
/// a ball of radius `r`.
#[derive(Clone, Debug)]
pub struct TickUnit {
    pub unit: PiRational,
    pub name: String,
}

const WIDTH: f64 = 640.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 24.0;
const TOP: f64 = 20.0;
const ROW: f64 = 22.0;
const LANE_GAP: f64 = 10.0;
const AXIS: f64 = 44.0;

fn pretty(v: &PiRational) -> String {
    v.to_string().replace("pi", "π")
}

/// `v` as an integer multiple of the unit, if it is one.
fn in_units(v: &PiRational, unit: &TickUnit) -> Option<String> {
    let ratio = |a: &BigRational, b: &BigRational| -> Option<BigRational> {
        if b.numer() == &0.into() {
            (a.numer() == &0.into()).then(BigRational::default)
        } else {
            Some(a / b)
        }
    };
    let (p, q) = (ratio(&v.pi, &unit.unit.pi)?, ratio(&v.rat, &unit.unit.rat)?);
    let zero = BigRational::default();
    let m = if unit.unit.pi != zero && unit.unit.rat != zero {
        (p == q).then_some(p)?
    } else if unit.unit.pi != zero {
        p
    } else {
        q
    };
    if !m.is_integer() {
        return None;
    }
    Some(match m.numer().to_string().as_str() {
        "0" => "0".into(),
        "1" => unit.name.clone(),
        "-1" => format!("-{}", unit.name),
        k => format!("{k}{}", unit.name),
    })
}

fn tick_label(v: &PiRational, unit: Option<&TickUnit>) -> String {
    unit.and_then(|u| in_units(v, u)).unwrap_or_else(|| pretty(v))
}

fn finite_ends(b: &GradedBarcode) -> Vec<PiRational> {
    let mut set = BTreeSet::new();
    for bar in b.bars() {
        for e in [bar.interval.lo_value(), bar.interval.hi_value()] {
            if let Ext::Fin(v) = e {
                set.insert(v.clone());
            }
        }
    }
    set.into_iter().collect()
}

struct Scale {
    lo: f64,
    hi: f64,
    x0: f64,
    x1: f64,
}

impl Scale {
    fn new(ends: &[PiRational], x0: f64, x1: f64) -> Self {
        let (mut lo, mut hi) = match (ends.first(), ends.last()) {
            (Some(a), Some(b)) => (a.to_f64(), b.to_f64()),
            _ => (0.0, 1.0),
        };
        if hi - lo < 1e-9 {
            lo -= 1.0;
            hi += 1.0;
        }
        let pad = (hi - lo) * 0.08;
        Self { lo: lo - pad, hi: hi + pad, x0, x1 }
    }

    fn x(&self, e: &Ext) -> f64 {
        match e {
            Ext::NegInf => self.x0,
            Ext::PosInf => self.x1,
            Ext::Fin(v) => self.x0 + (v.to_f64() - self.lo) / (self.hi - self.lo) * (self.x1 - self.x0),
        }
    }
}

/// Rows grouped into lanes by degree, each bar repeated by multiplicity.
fn lanes(b: &GradedBarcode) -> Vec<(i64, Vec<&Interval>)> {
    let mut out: Vec<(i64, Vec<&Interval>)> = Vec::new();
    for (i, d) in b.expanded() {
        match out.last_mut() {
            Some((deg, rows)) if *deg == d => rows.push(i),
            _ => out.push((d, vec![i])),
        }
    }
    out
}

fn end_mark(svg: &mut String, e: &Endpoint, x: f64, y: f64, right: bool) {
    if e.is_finite() {
        let fill = if e.is_closed() { "black" } else { "white" };
        let _ = writeln!(
            svg,
            r#"  <circle cx="{x:.2}" cy="{y:.2}" r="4" fill="{fill}" stroke="black" stroke-width="1.5"/>"#
        );
    } else {
        let tip = if right { x + 6.0 } else { x - 6.0 };
        let _ = writeln!(
            svg,
            r#"  <polygon points="{tip:.2},{y:.2} {x:.2},{:.2} {x:.2},{:.2}" fill="black"/>"#,
            y - 5.0,
            y + 5.0
        );
    }
}

/// The barcode as a standalone SVG document.
pub fn svg(b: &GradedBarcode, unit: Option<&TickUnit>) -> String {
    let ends = finite_ends(b);
    let scale = Scale::new(&ends, LEFT + 10.0, WIDTH - RIGHT - 10.0);
    let lanes = lanes(b);
    let rows: usize = lanes.iter().map(|(_, r)| r.len()).sum();
    let body = rows as f64 * ROW + lanes.len().saturating_sub(1) as f64 * LANE_GAP;
    let height = TOP + body.max(ROW) + AXIS;

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH:.0}" height="{height:.0}" viewBox="0 0 {WIDTH:.0} {height:.0}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(s, r#"  <rect width="100%" height="100%" fill="white"/>"#);

    let mut y = TOP + ROW / 2.0;
    for (k, (deg, rows)) in lanes.iter().enumerate() {
        if k > 0 {
            let sep = y - ROW / 2.0 - LANE_GAP / 2.0;
            let _ = writeln!(
                s,
                r#"  <line x1="{LEFT:.2}" y1="{sep:.2}" x2="{:.2}" y2="{sep:.2}" stroke="gray" stroke-dasharray="4 3"/>"#,
                WIDTH - RIGHT
            );
        }
        let mid = y + (rows.len() as f64 - 1.0) * ROW / 2.0;
        let _ = writeln!(s, r#"  <text x="8" y="{:.2}">deg {deg}</text>"#, mid + 4.0);
        for i in rows {
            let (x0, x1) = (scale.x(i.lo_value()), scale.x(i.hi_value()));
            let _ = writeln!(
                s,
                r#"  <line x1="{x0:.2}" y1="{y:.2}" x2="{x1:.2}" y2="{y:.2}" stroke="black" stroke-width="3"/>"#
            );
            end_mark(&mut s, i.lo(), x0, y, false);
            end_mark(&mut s, i.hi(), x1, y, true);
            y += ROW;
        }
        y += LANE_GAP;
    }

    let axis_y = TOP + body.max(ROW) + 10.0;
    let _ = writeln!(
        s,
        r#"  <line x1="{LEFT:.2}" y1="{axis_y:.2}" x2="{:.2}" y2="{axis_y:.2}" stroke="black"/>"#,
        WIDTH - RIGHT
    );
    for v in &ends {
        let x = scale.x(&Ext::Fin(v.clone()));
        let _ = writeln!(
            s,
            r#"  <line x1="{x:.2}" y1="{axis_y:.2}" x2="{x:.2}" y2="{:.2}" stroke="black"/>"#,
            axis_y + 5.0
        );
        let _ = writeln!(
            s,
            r#"  <text x="{x:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            axis_y + 20.0,
            tick_label(v, unit)
        );
    }
    s.push_str("</svg>\n");
    s
}

const COLS: usize = 48;

/// ASCII lanes: `[`/`(` and `)`/`]` mark closed and open ends, `<` and `>`
/// infinite ones. Each row ends with the bar in interval notation.
pub fn text(b: &GradedBarcode, unit: Option<&TickUnit>) -> String {
    let ends = finite_ends(b);
    let scale = Scale::new(&ends, 1.0, COLS as f64 - 2.0);
    let col = |e: &Ext| scale.x(e).round() as usize;
    let mut out = String::new();
    if b.is_empty() {
        out.push_str("(empty barcode)\n");
        return out;
    }
    for (deg, rows) in lanes(b) {
        for (k, i) in rows.iter().enumerate() {
            let mut line = vec![' '; COLS];
            let (a, z) = (col(i.lo_value()), col(i.hi_value()));
            for c in line.iter_mut().take(z + 1).skip(a) {
                *c = '=';
            }
            line[a] = match (i.lo().is_finite(), i.lo().is_closed()) {
                (false, _) => '<',
                (true, true) => '[',
                (true, false) => '(',
            };
            line[z] = match (i.hi().is_finite(), i.hi().is_closed()) {
                (false, _) => '>',
                (true, true) => ']',
                (true, false) => ')',
            };
            let label = if k == 0 { format!("{deg:>4}") } else { "    ".into() };
            let bar: String = line.into_iter().collect();
            let _ = writeln!(out, "{label} |{bar}| {}", pretty_interval(i));
        }
    }
    let ticks: Vec<String> = ends.iter().map(|v| tick_label(v, unit)).collect();
    let _ = writeln!(out, "     ends: {}", ticks.join(", "));
    out
}

fn pretty_interval(i: &Interval) -> String {
    i.to_string().replace("pi", "π")
}

#[cfg(test)]
mod tests {
    use super::*;
    use tamarkin_core::value::int;

    fn ball_bars() -> GradedBarcode {
        let pi = |k: i64| PiRational::pi_multiple(int(k));
        GradedBarcode::from_intervals([
            (Interval::closed_open(pi(0), pi(1)).unwrap(), 1),
            (Interval::closed_open(pi(1), pi(2)).unwrap(), 3),
            (Interval::closed_open(pi(2), pi(3)).unwrap(), 5),
        ])
    }

    #[test]
    fn svg_marks_and_ticks() {
        let s = svg(&ball_bars(), None);
        assert_eq!(s.matches("stroke-width=\"3\"").count(), 3);
        assert_eq!(s.matches("fill=\"white\" stroke").count(), 3);
        for t in [">0<", ">π<", ">2π<", ">3π<"] {
            assert!(s.contains(t), "missing tick {t}");
        }
        assert!(s.contains("deg 5"));
    }

    #[test]
    fn named_units() {
        let u = TickUnit { unit: PiRational::pi_multiple(int(4)), name: "πr²".into() };
        assert_eq!(tick_label(&PiRational::pi_multiple(int(8)), Some(&u)), "2πr²");
        assert_eq!(tick_label(&PiRational::pi_multiple(int(4)), Some(&u)), "πr²");
        assert_eq!(tick_label(&PiRational::pi_multiple(int(2)), Some(&u)), "2π");
    }

    #[test]
    fn text_lanes() {
        let b = GradedBarcode::from_intervals([
            (Interval::ray_from(0), 0),
            (Interval::closed_open(1, 2).unwrap(), 0),
            (Interval::ray_below(1), 1),
        ]);
        let t = text(&b, None);
        assert_eq!(t.lines().count(), 4);
        assert!(t.lines().any(|l| l.contains('<')));
        assert!(t.contains("ends: 0, 1, 2"));
    }
}
