//! Minimal deterministic SVG line plots: polylines over linear axes with
//! 1-2-5 tick spacing, tick labels at four significant digits, and a legend.
//! Identical input produces byte-identical output.

use crate::error::{Error, Result};

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 560.0;
const PLOT_LEFT: f64 = 78.0;
const PLOT_RIGHT: f64 = 776.0;
const PLOT_TOP: f64 = 42.0;
const PLOT_BOTTOM: f64 = 504.0;

const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
];

/// One plotted curve.
#[derive(Debug, Clone)]
pub(crate) struct Series {
    pub label: String,
    pub points: Vec<(f64, f64)>,
    /// Closed curves repeat their first point at the end of the polyline.
    pub closed: bool,
}

/// Plot-level annotations.
#[derive(Debug, Clone)]
pub(crate) struct Axes {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
}

/// Renders the series into a standalone SVG document.
pub(crate) fn render(series: &[Series], axes: &Axes) -> Result<String> {
    let mut any_point = false;
    for s in series {
        for &(x, y) in &s.points {
            if !x.is_finite() || !y.is_finite() {
                return Err(Error::NonFinite {
                    what: format!("plot point ({x}, {y}) in series `{}`", s.label),
                });
            }
            any_point = true;
        }
    }
    if !any_point {
        return Err(Error::Precondition {
            what: "plot dataset is empty".to_string(),
        });
    }

    let (x_lo, x_hi) = padded_range(series.iter().flat_map(|s| s.points.iter().map(|p| p.0)));
    let (y_lo, y_hi) = padded_range(series.iter().flat_map(|s| s.points.iter().map(|p| p.1)));
    let map_x = |v: f64| PLOT_LEFT + (v - x_lo) / (x_hi - x_lo) * (PLOT_RIGHT - PLOT_LEFT);
    let map_y = |v: f64| PLOT_BOTTOM - (v - y_lo) / (y_hi - y_lo) * (PLOT_BOTTOM - PLOT_TOP);

    let mut out = String::with_capacity(4096);
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\" font-family=\"sans-serif\">\n"
    ));
    out.push_str(&format!(
        "<rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>\n"
    ));
    out.push_str(&format!(
        "<text x=\"{:.2}\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">{}</text>\n",
        (PLOT_LEFT + PLOT_RIGHT) / 2.0,
        escape(&axes.title)
    ));

    // Grid and ticks.
    for tick in ticks(x_lo, x_hi) {
        let px = map_x(tick);
        out.push_str(&format!(
            "<line x1=\"{px:.2}\" y1=\"{PLOT_TOP}\" x2=\"{px:.2}\" y2=\"{PLOT_BOTTOM}\" \
             stroke=\"#e0e0e0\" stroke-width=\"1\"/>\n"
        ));
        out.push_str(&format!(
            "<line x1=\"{px:.2}\" y1=\"{PLOT_BOTTOM}\" x2=\"{px:.2}\" y2=\"{:.2}\" \
             stroke=\"black\" stroke-width=\"1\"/>\n",
            PLOT_BOTTOM + 6.0
        ));
        out.push_str(&format!(
            "<text x=\"{px:.2}\" y=\"{:.2}\" text-anchor=\"middle\" font-size=\"12\">{}</text>\n",
            PLOT_BOTTOM + 20.0,
            fmt_tick(tick)
        ));
    }
    for tick in ticks(y_lo, y_hi) {
        let py = map_y(tick);
        out.push_str(&format!(
            "<line x1=\"{PLOT_LEFT}\" y1=\"{py:.2}\" x2=\"{PLOT_RIGHT}\" y2=\"{py:.2}\" \
             stroke=\"#e0e0e0\" stroke-width=\"1\"/>\n"
        ));
        out.push_str(&format!(
            "<line x1=\"{:.2}\" y1=\"{py:.2}\" x2=\"{PLOT_LEFT}\" y2=\"{py:.2}\" \
             stroke=\"black\" stroke-width=\"1\"/>\n",
            PLOT_LEFT - 6.0
        ));
        out.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"end\" font-size=\"12\">{}</text>\n",
            PLOT_LEFT - 10.0,
            py + 4.0,
            fmt_tick(tick)
        ));
    }

    // Axis frame and labels.
    out.push_str(&format!(
        "<line x1=\"{PLOT_LEFT}\" y1=\"{PLOT_BOTTOM}\" x2=\"{PLOT_RIGHT}\" y2=\"{PLOT_BOTTOM}\" \
         stroke=\"black\" stroke-width=\"1.5\"/>\n"
    ));
    out.push_str(&format!(
        "<line x1=\"{PLOT_LEFT}\" y1=\"{PLOT_TOP}\" x2=\"{PLOT_LEFT}\" y2=\"{PLOT_BOTTOM}\" \
         stroke=\"black\" stroke-width=\"1.5\"/>\n"
    ));
    out.push_str(&format!(
        "<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"middle\" font-size=\"14\">{}</text>\n",
        (PLOT_LEFT + PLOT_RIGHT) / 2.0,
        HEIGHT - 14.0,
        escape(&axes.x_label)
    ));
    out.push_str(&format!(
        "<text x=\"20\" y=\"{:.2}\" text-anchor=\"middle\" font-size=\"14\" \
         transform=\"rotate(-90 20 {:.2})\">{}</text>\n",
        (PLOT_TOP + PLOT_BOTTOM) / 2.0,
        (PLOT_TOP + PLOT_BOTTOM) / 2.0,
        escape(&axes.y_label)
    ));

    // Curves.
    for (idx, s) in series.iter().enumerate() {
        let color = PALETTE[idx % PALETTE.len()];
        let mut coords: Vec<String> = s
            .points
            .iter()
            .map(|&(x, y)| format!("{:.2},{:.2}", map_x(x), map_y(y)))
            .collect();
        if s.closed {
            if let Some(first) = coords.first().cloned() {
                coords.push(first);
            }
        }
        out.push_str(&format!(
            "<polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\" points=\"{}\"/>\n",
            coords.join(" ")
        ));
    }

    // Legend, top right inside the plot area.
    for (idx, s) in series.iter().enumerate() {
        let color = PALETTE[idx % PALETTE.len()];
        let y = PLOT_TOP + 16.0 + 18.0 * idx as f64;
        out.push_str(&format!(
            "<line x1=\"{:.2}\" y1=\"{y:.2}\" x2=\"{:.2}\" y2=\"{y:.2}\" \
             stroke=\"{color}\" stroke-width=\"2\"/>\n",
            PLOT_RIGHT - 150.0,
            PLOT_RIGHT - 120.0
        ));
        out.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"12\">{}</text>\n",
            PLOT_RIGHT - 112.0,
            y + 4.0,
            escape(&s.label)
        ));
    }

    out.push_str("</svg>\n");
    Ok(out)
}

/// Data range with 5% padding; degenerate ranges get a unit-scale pad so a
/// single point still yields a valid plot window.
fn padded_range(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for v in values {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    let span = hi - lo;
    let pad = if span > 0.0 {
        0.05 * span
    } else {
        (lo.abs() * 0.1).max(1.0)
    };
    (lo - pad, hi + pad)
}

/// Tick positions at a 1-2-5 progression spanning the range.
fn ticks(lo: f64, hi: f64) -> Vec<f64> {
    let span = hi - lo;
    let raw = span / 6.0;
    let magnitude = 10f64.powf(raw.log10().floor());
    let normalized = raw / magnitude;
    let step = if normalized <= 1.0 {
        1.0
    } else if normalized <= 2.0 {
        2.0
    } else if normalized <= 5.0 {
        5.0
    } else {
        10.0
    } * magnitude;
    let mut ticks = Vec::new();
    let mut tick = (lo / step).ceil() * step;
    while tick <= hi + step * 1e-9 {
        // Snap values that should be zero.
        ticks.push(if tick.abs() < step * 1e-9 { 0.0 } else { tick });
        tick += step;
    }
    ticks
}

/// Tick label with four significant digits.
fn fmt_tick(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let exp = v.abs().log10().floor() as i32;
    if !(-3..=3).contains(&exp) {
        return format!("{v:.3e}");
    }
    let decimals = (3 - exp).max(0) as usize;
    let s = format!("{v:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn demo_axes() -> Axes {
        Axes {
            title: "demo".to_string(),
            x_label: "x".to_string(),
            y_label: "y".to_string(),
        }
    }

    #[test]
    fn renders_polylines_and_legend() {
        let series = [
            Series {
                label: "wave".to_string(),
                points: vec![(0.0, 1.0), (1.0, 0.5), (2.0, 0.25)],
                closed: false,
            },
            Series {
                label: "loop".to_string(),
                points: vec![(0.0, 0.0), (1.0, 1.0), (2.0, 0.0)],
                closed: true,
            },
        ];
        let doc = render(&series, &demo_axes()).unwrap();
        assert!(doc.starts_with("<?xml version=\"1.0\""));
        assert_eq!(doc.matches("<polyline").count(), 2);
        assert!(doc.contains(">wave</text>"));
        assert!(doc.contains(">loop</text>"));
        assert!(doc.ends_with("</svg>\n"));
        // Deterministic bytes.
        assert_eq!(doc, render(&series, &demo_axes()).unwrap());
    }

    #[test]
    fn closed_series_repeats_its_first_point() {
        let series = [Series {
            label: "ring".to_string(),
            points: vec![(0.0, 0.0), (1.0, 1.0), (2.0, 0.0)],
            closed: true,
        }];
        let doc = render(&series, &demo_axes()).unwrap();
        let points = doc
            .split("points=\"")
            .nth(1)
            .unwrap()
            .split('"')
            .next()
            .unwrap();
        let coords: Vec<&str> = points.split(' ').collect();
        assert_eq!(coords.len(), 4);
        assert_eq!(coords.first(), coords.last());
    }

    #[test]
    fn single_point_is_a_valid_degenerate_plot() {
        let series = [Series {
            label: "dot".to_string(),
            points: vec![(1.5, 2.5)],
            closed: false,
        }];
        let doc = render(&series, &demo_axes()).unwrap();
        assert!(doc.contains("<polyline"));
    }

    #[test]
    fn rejects_bad_datasets() {
        let empty: [Series; 0] = [];
        assert!(matches!(
            render(&empty, &demo_axes()),
            Err(Error::Precondition { .. })
        ));
        let nan = [Series {
            label: "bad".to_string(),
            points: vec![(0.0, f64::NAN)],
            closed: false,
        }];
        assert!(matches!(
            render(&nan, &demo_axes()),
            Err(Error::NonFinite { .. })
        ));
    }

    #[test]
    fn tick_labels_use_four_significant_digits() {
        assert_eq!(fmt_tick(0.0), "0");
        assert_eq!(fmt_tick(0.25), "0.25");
        assert_eq!(fmt_tick(1.224_7), "1.225");
        assert_eq!(fmt_tick(-1.5), "-1.5");
        assert_eq!(fmt_tick(12345.0), "1.234e4");
        assert_eq!(fmt_tick(0.000_25), "2.500e-4");
    }

    #[test]
    fn tick_positions_follow_a_1_2_5_progression() {
        let t = ticks(0.0, 1.0);
        assert!(t.contains(&0.0) && t.contains(&1.0));
        for pair in t.windows(2) {
            assert!((pair[1] - pair[0] - 0.2).abs() < 1e-12);
        }
        let t = ticks(-0.3, 0.3);
        assert!(t.contains(&0.0));
    }
}
