//! Figures of the simples over a window of lattice points, optionally with
//! the action of a Picard element drawn on top.

use std::fmt::Write as _;

use super::commands::Format;
use crate::error::Result;
use crate::params::{Family, GwaParams, LatticePoint};
use crate::picard::PicardElement;
use crate::simples::{Label, SimpleModule};

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 240.0;

fn rows(params: GwaParams) -> &'static [Label] {
    match params {
        GwaParams::Congruent(_) => &[Label::Zfin, Label::Y, Label::X],
        _ => &[Label::Y, Label::X],
    }
}

fn row_name(label: Label) -> &'static str {
    match label {
        Label::X => "X",
        Label::Y => "Y",
        Label::Zfin => "Z",
    }
}

fn columns(params: GwaParams, window: (i64, i64)) -> Vec<LatticePoint> {
    let mut out = Vec::new();
    for n in window.0..window.1 {
        out.push(LatticePoint::int(n));
        if params.is_noncongruent() {
            out.push(LatticePoint::m(n));
        }
    }
    out
}

fn cell(params: GwaParams, label: Label, point: LatticePoint) -> Option<SimpleModule> {
    SimpleModule::at(params, label, params.coordinate(point)).ok()
}

struct Grid {
    columns: Vec<LatticePoint>,
    cells: Vec<Vec<Option<SimpleModule>>>,
}

impl Grid {
    fn new(params: GwaParams, window: (i64, i64)) -> Grid {
        let columns = columns(params, window);
        let cells = rows(params)
            .iter()
            .map(|l| columns.iter().map(|p| cell(params, *l, *p)).collect())
            .collect();
        Grid { columns, cells }
    }

    fn simples(&self) -> impl Iterator<Item = SimpleModule> + '_ {
        self.cells.iter().flat_map(|r| r.iter().flatten().copied())
    }

    fn position(&self, s: &SimpleModule) -> Option<(usize, usize)> {
        self.cells.iter().enumerate().find_map(|(r, row)| {
            row.iter().position(|c| c.as_ref() == Some(s)).map(|c| (r, c))
        })
    }
}

pub fn render_simples(params: GwaParams, format: Format, window: (i64, i64)) -> Result<String> {
    render_simples_with(params, format, window, None)
}

pub fn render_simples_with(
    params: GwaParams,
    format: Format,
    window: (i64, i64),
    action: Option<&PicardElement>,
) -> Result<String> {
    if let Some(g) = action {
        params.check_same(&g.params())?;
    }
    let grid = Grid::new(params, window);
    let arrows = match action {
        None => Vec::new(),
        Some(g) => grid
            .simples()
            .map(|s| g.act_on_simple(&s).map(|t| (s, t)))
            .collect::<Result<Vec<_>>>()?,
    };
    Ok(match format {
        Format::Ascii => ascii(params, &grid, &arrows),
        Format::Svg => svg(params, &grid, &arrows),
    })
}

fn ascii(params: GwaParams, grid: &Grid, arrows: &[(SimpleModule, SimpleModule)]) -> String {
    let heads: Vec<String> = grid.columns.iter().map(|p| params.coordinate(*p).to_string()).collect();
    let texts: Vec<Vec<String>> = grid
        .cells
        .iter()
        .map(|r| r.iter().map(|c| c.map_or(".".to_string(), |s| s.to_string())).collect())
        .collect();
    let widths: Vec<usize> = (0..heads.len())
        .map(|c| texts.iter().map(|r| r[c].len()).chain([heads[c].len()]).max().unwrap_or(1))
        .collect();
    let mut out = String::new();
    let _ = write!(out, "{:<3}", "");
    for (h, w) in heads.iter().zip(&widths) {
        let _ = write!(out, " {h:>w$}");
    }
    out.push('\n');
    for (label, row) in rows(params).iter().zip(&texts) {
        let _ = write!(out, "{:<3}", row_name(*label));
        for (t, w) in row.iter().zip(&widths) {
            let _ = write!(out, " {t:>w$}");
        }
        out.push('\n');
    }
    for (s, t) in arrows {
        let _ = writeln!(out, "{s} -> {t}");
    }
    out
}

fn svg(params: GwaParams, grid: &Grid, arrows: &[(SimpleModule, SimpleModule)]) -> String {
    let labels = rows(params);
    let dx = (WIDTH - 80.0) / grid.columns.len().max(1) as f64;
    let dy = (HEIGHT - 60.0) / labels.len() as f64;
    let at = |(r, c): (usize, usize)| (70.0 + dx * (c as f64 + 0.5), 40.0 + dy * (r as f64 + 0.5));
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {WIDTH} {HEIGHT}\" font-family=\"monospace\" font-size=\"11\">"
    );
    out.push_str("<defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"7\" refY=\"4\" orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\" fill=\"#b03030\"/></marker></defs>\n");
    for (c, point) in grid.columns.iter().enumerate() {
        let (x, _) = at((0, c));
        let fill = if point.family == Family::M { "#406090" } else { "#000" };
        let _ = writeln!(
            out,
            "<text x=\"{x:.1}\" y=\"20\" text-anchor=\"middle\" fill=\"{fill}\">{}</text>",
            params.coordinate(*point)
        );
    }
    for (r, label) in labels.iter().enumerate() {
        let (_, y) = at((r, 0));
        let _ = writeln!(out, "<text x=\"20\" y=\"{y:.1}\">{}</text>", row_name(*label));
        for (c, s) in grid.cells[r].iter().enumerate() {
            if let Some(s) = s {
                let (x, y) = at((r, c));
                let _ = writeln!(
                    out,
                    "<circle cx=\"{x:.1}\" cy=\"{y:.1}\" r=\"4\"><title>{s}</title></circle>"
                );
            }
        }
    }
    for (s, t) in arrows {
        let (Some(from), Some(to)) = (grid.position(s), grid.position(t)) else { continue };
        if from == to {
            continue;
        }
        let ((x1, y1), (x2, y2)) = (at(from), at(to));
        let _ = writeln!(
            out,
            "<line x1=\"{x1:.1}\" y1=\"{y1:.1}\" x2=\"{x2:.1}\" y2=\"{y2:.1}\" stroke=\"#b03030\" marker-end=\"url(#head)\"><title>{s} -> {t}</title></line>"
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::picard::Generator;

    #[test]
    fn ascii_grid_has_one_row_per_label() {
        let text = render_simples(GwaParams::Congruent(1), Format::Ascii, (0, 3)).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 4);
        assert!(lines[1].starts_with('Z'));
        assert!(lines[3].contains("X<2>"));
    }

    #[test]
    fn svg_is_deterministic_and_draws_arrows() {
        let params = GwaParams::Congruent(2);
        let g = PicardElement::generator(params, &Generator::Shift(1)).unwrap();
        let a = render_simples_with(params, Format::Svg, (-2, 2), Some(&g)).unwrap();
        let b = render_simples_with(params, Format::Svg, (-2, 2), Some(&g)).unwrap();
        assert_eq!(a, b);
        assert!(a.starts_with("<svg"));
        assert!(a.contains("viewBox=\"0 0 800 240\""));
        assert!(a.contains("<line"));
    }

    #[test]
    fn noncongruent_columns_interleave() {
        let params = GwaParams::HalfInteger(num_rational::Rational64::new(1, 2));
        let text = render_simples(params, Format::Ascii, (0, 2)).unwrap();
        let head: Vec<&str> = text.lines().next().unwrap().split_whitespace().collect();
        assert_eq!(head, ["0", "1/2", "1", "3/2"]);
    }
}
