//! Wall diagram at a numeric instantiation of `(ε, ε′)`.
//!
//! Centres, squared radii and heights are exact rationals; only the final
//! square roots go through `f64`, and every printed coordinate is rounded to
//! 12 decimals so identical configurations give identical bytes.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use nodal_k3_core::{NumericalWall, PolarizationPath, Q};
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::{rational_json, CliError, CliResult, InstanceArgs};

const WIDTH: f64 = 800.0;
const MARGIN: f64 = 1.2;
// σ± sit this fraction of the W₋₁ height above and below σ₀.
const MARKER_OFFSET: f64 = 0.05;

pub struct WallsOutput {
    pub svg: String,
    pub sidecar: Value,
}

/// `(s - c)² + t² = R²`, exact.
struct Circle {
    centre: Q,
    radius_sq: Q,
}

impl Circle {
    fn from_wall(wall: &NumericalWall, eps: &Q, epsp: &Q) -> Result<Circle, &'static str> {
        let alpha = wall.alpha.instantiate(eps, epsp);
        if alpha.is_zero() {
            return Err("vertical at this instantiation");
        }
        let beta = wall.beta.instantiate(eps, epsp);
        let gamma = wall.gamma.instantiate(eps, epsp);
        let centre = -beta / (Q::from_integer(2.into()) * &alpha);
        let radius_sq = &centre * &centre - gamma / alpha;
        if !radius_sq.is_positive() {
            return Err("no real semicircle at this instantiation");
        }
        Ok(Circle { centre, radius_sq })
    }

    fn radius(&self) -> f64 {
        f64_of(&self.radius_sq).sqrt()
    }

    /// `t²` where the circle crosses the vertical line at `s`, if it does.
    fn height_sq_at(&self, s: &Q) -> Option<Q> {
        let dx = s - &self.centre;
        let h = &self.radius_sq - &dx * &dx;
        h.is_positive().then_some(h)
    }
}

fn f64_of(x: &Q) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

fn fmt12(x: f64) -> String {
    // Avoid "-0.000000000000" flipping bytes between runs of equal input.
    let s = format!("{x:.12}");
    if s.trim_start_matches('-')
        .chars()
        .all(|c| c == '0' || c == '.')
    {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

fn num12(x: f64) -> Value {
    fmt12(x)
        .parse::<f64>()
        .ok()
        .and_then(|v| serde_json::Number::from_f64(v).map(Value::Number))
        .unwrap_or(Value::Null)
}

struct Viewport {
    xmin: f64,
    xmax: f64,
    ymax: f64,
}

impl Viewport {
    fn around(centre: f64, radius: f64) -> Viewport {
        Viewport {
            xmin: centre - MARGIN * radius,
            xmax: centre + MARGIN * radius,
            ymax: MARGIN * radius,
        }
    }

    fn scale(&self) -> f64 {
        WIDTH / (self.xmax - self.xmin)
    }

    fn height(&self) -> f64 {
        self.ymax * self.scale()
    }

    fn x(&self, s: f64) -> f64 {
        (s - self.xmin) * self.scale()
    }

    fn y(&self, t: f64) -> f64 {
        self.height() - t * self.scale()
    }
}

pub fn cmd_walls(
    args: &InstanceArgs,
    eps: &Q,
    epsp: &Q,
    m_range: RangeInclusive<i64>,
) -> CliResult<WallsOutput> {
    if !(eps > epsp && epsp.is_positive()) {
        return Err(CliError::Invalid(format!(
            "need eps > epsp > 0, got eps = {eps}, epsp = {epsp}"
        )));
    }
    let inst = args.build()?;
    let path = PolarizationPath::new(inst);
    let he2 = path.h_eps_squared().instantiate(eps, epsp);
    if !he2.is_positive() {
        return Err(CliError::Invalid(format!(
            "H_eps^2 = {he2} is not positive; choose a smaller eps"
        )));
    }
    let instantiate = |x: &nodal_k3_core::EpsRational| {
        x.instantiate(eps, epsp)
            .map_err(|e| CliError::Invalid(format!("instantiation degenerates: {e}")))
    };

    let line_s = instantiate(path.default_line().abscissa())?;
    let sigma = path.sigma_u();
    let sigma_s = instantiate(&sigma.s)?;
    let sigma_t2 = instantiate(&sigma.t_squared)?;
    let sigma_t = if sigma_t2.is_positive() {
        f64_of(&sigma_t2).sqrt()
    } else {
        0.0
    };

    let pivot = Circle::from_wall(&path.wall_m(-1), eps, epsp).ok();
    let view = match &pivot {
        Some(c) => Viewport::around(f64_of(&c.centre), c.radius()),
        None => Viewport::around(f64_of(&sigma_s), if sigma_t > 0.0 { sigma_t } else { 1.0 }),
    };

    let mut notes = Vec::new();
    let mut walls = Vec::new();
    let mut omitted = Vec::new();
    let mut paths = String::new();
    for m in m_range.clone() {
        let circle = match Circle::from_wall(&path.wall_m(m), eps, epsp) {
            Ok(c) => c,
            Err(why) => {
                omitted.push(json!({ "m": m, "note": why }));
                continue;
            }
        };
        let (c, r) = (f64_of(&circle.centre), circle.radius());
        if c + r < view.xmin || c - r > view.xmax {
            omitted.push(json!({ "m": m, "note": "misses the plotted window" }));
            continue;
        }
        let class = if m == -1 { "wall pivot" } else { "wall" };
        let _ = writeln!(
            paths,
            r#"<path class="{class}" data-m="{m}" d="M {} {} A {} {} 0 0 1 {} {}" fill="none" stroke="{}" stroke-width="{}"/>"#,
            fmt12(view.x(c - r)),
            fmt12(view.y(0.0)),
            fmt12(r * view.scale()),
            fmt12(r * view.scale()),
            fmt12(view.x(c + r)),
            fmt12(view.y(0.0)),
            if m == -1 { "#b03030" } else { "#3060a0" },
            if m == -1 { 2 } else { 1 },
        );
        walls.push(json!({
            "m": m,
            "centre": num12(c),
            "radius": num12(r),
            "centre_exact": rational_json(&circle.centre),
            "radius_squared_exact": rational_json(&circle.radius_sq),
        }));
    }

    let mut markers = Vec::new();
    match pivot.as_ref().and_then(|c| c.height_sq_at(&line_s)) {
        Some(h2) => {
            let t0 = f64_of(&h2).sqrt();
            let s = f64_of(&line_s);
            for (name, t) in [
                ("sigma_plus", t0 * (1.0 + MARKER_OFFSET)),
                ("sigma_zero", t0),
                ("sigma_minus", t0 * (1.0 - MARKER_OFFSET)),
            ] {
                markers.push((name, s, t));
            }
        }
        None => notes.push("W_{-1} does not meet b at this instantiation"),
    }
    if m_range.is_empty() {
        notes.push("empty m range: only b and sigma_u are drawn");
    }

    let line_x = fmt12(view.x(f64_of(&line_s)));
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = fmt12(WIDTH),
        h = fmt12(view.height()),
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<line class="axis" x1="0" y1="{y}" x2="{w}" y2="{y}" stroke="black" stroke-width="1"/>"#,
        y = fmt12(view.y(0.0)),
        w = fmt12(WIDTH),
    );
    svg.push_str(&paths);
    let _ = writeln!(
        svg,
        r##"<line class="line-b" x1="{line_x}" y1="0" x2="{line_x}" y2="{}" stroke="#208040" stroke-dasharray="6 4"/>"##,
        fmt12(view.y(0.0)),
    );
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="14" font-size="12">b</text>"#,
        fmt12(view.x(f64_of(&line_s)) + 4.0),
    );
    let (ux, uy) = (view.x(f64_of(&sigma_s)), view.y(sigma_t));
    let _ = writeln!(
        svg,
        r#"<circle class="sigma-u" cx="{}" cy="{}" r="4" fill="black"/>"#,
        fmt12(ux),
        fmt12(uy),
    );
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="{}" font-size="12">σ_u</text>"#,
        fmt12(ux + 6.0),
        fmt12(uy - 6.0),
    );
    for (name, s, t) in &markers {
        let (x, y) = (view.x(*s), view.y(*t));
        let _ = writeln!(
            svg,
            r##"<circle class="{name}" cx="{}" cy="{}" r="3" fill="#b03030"/>"##,
            fmt12(x),
            fmt12(y),
        );
    }
    svg.push_str("</svg>\n");

    let marker_json: serde_json::Map<String, Value> = markers
        .iter()
        .map(|(name, s, t)| (name.to_string(), json!([num12(*s), num12(*t)])))
        .collect();
    let sidecar = json!({
        "instance": {
            "h2": args.h2, "cl_ne_pic": args.cl_ne_pic, "r": args.r, "d": args.d, "a": args.a,
        },
        "eps": eps.to_string(),
        "epsp": epsp.to_string(),
        "m_range": [m_range.start(), m_range.end()],
        "viewport": {
            "xmin": num12(view.xmin),
            "xmax": num12(view.xmax),
            "ymax": num12(view.ymax),
        },
        "line_b": { "s": num12(f64_of(&line_s)), "s_exact": rational_json(&line_s) },
        "sigma_u": {
            "s": num12(f64_of(&sigma_s)),
            "t": num12(sigma_t),
            "s_exact": rational_json(&sigma_s),
            "t_squared_exact": rational_json(&sigma_t2),
        },
        "walls": walls,
        "omitted": omitted,
        "markers": marker_json,
        "notes": notes,
    });
    Ok(WallsOutput { svg, sidecar })
}
