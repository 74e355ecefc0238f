//! Command implementations behind the `nodal-k3` binary. Every command
//! returns a JSON value (or SVG text) so the binary stays a thin shell and
//! the tests can drive the same code paths without spawning processes.

use std::str::FromStr;

use clap::Args;
use nodal_k3_core::destabilizer::{self, search_with_audit};
use nodal_k3_core::{
    classify, is_minimal_pell_pair, pell_solutions, Candidate, Error, NSLattice, ProblemInstance,
    SplittingType, Verdict, Q,
};
use serde_json::{json, Map, Value};

mod walls;

pub use walls::{cmd_walls, WallsOutput};

/// Everything a command can fail with. Invalid input maps to exit code 2,
/// an internal invariant breach to 3.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("invariant breach: {0}")]
    Breach(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Breach(_) => 3,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvariantBreach(msg) => CliError::Breach(msg),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Args, Clone, Copy, Debug, PartialEq, Eq)]
pub struct InstanceArgs {
    /// Self-intersection of the polarization H.
    #[arg(long)]
    pub h2: i64,
    /// Take the class group strictly larger than the Picard group.
    #[arg(long, default_value_t = false)]
    pub cl_ne_pic: bool,
    #[arg(long)]
    pub r: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub d: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub a: i64,
}

impl InstanceArgs {
    pub fn new(h2: i64, cl_ne_pic: bool, r: i64, d: i64, a: i64) -> Self {
        InstanceArgs {
            h2,
            cl_ne_pic,
            r,
            d,
            a,
        }
    }

    pub fn build(&self) -> CliResult<ProblemInstance> {
        let lattice = NSLattice::new(self.h2, self.cl_ne_pic)?;
        Ok(ProblemInstance::new(lattice, self.r, self.d, self.a)?)
    }

    fn to_json(self) -> Value {
        json!({
            "h2": self.h2,
            "cl_ne_pic": self.cl_ne_pic,
            "r": self.r,
            "d": self.d,
            "a": self.a,
        })
    }
}

/// Exact rational from `p/q` or a plain integer.
pub fn parse_rational(text: &str) -> CliResult<Q> {
    Q::from_str(text.trim()).map_err(|_| CliError::Invalid(format!("not a rational: {text:?}")))
}

/// Integral rationals become JSON integers, everything else a `p/q` string.
pub(crate) fn rational_json(x: &Q) -> Value {
    if x.is_integer() {
        if let Ok(n) = i64::try_from(x.to_integer()) {
            return Value::from(n);
        }
    }
    Value::from(x.to_string())
}

fn candidate_json(c: &Candidate, verdict: Option<&Verdict>) -> Value {
    let mut map = Map::new();
    map.insert("kind".into(), c.kind.as_str().into());
    map.insert("k1".into(), c.k1.into());
    map.insert("e1".into(), c.e1.into());
    map.insert("m".into(), rational_json(&c.m));
    if let Some(v) = verdict {
        map.insert("passed".into(), v.passed.into());
        let failures: Vec<Value> = v.failures.iter().map(|f| f.to_string().into()).collect();
        map.insert("failures".into(), failures.into());
    }
    Value::Object(map)
}

fn mod8_note(args: &InstanceArgs) -> String {
    let residue = args.h2.rem_euclid(8);
    match (residue, args.cl_ne_pic) {
        (2, true) => format!(
            "H^2 = {} = 2 (mod 8): half classes (H+L)/2 present, class group larger than Picard group",
            args.h2
        ),
        (2, false) => format!(
            "H^2 = {} = 2 (mod 8): a larger class group is possible but Cl = Pic was chosen",
            args.h2
        ),
        _ => format!(
            "H^2 = {} = {} (mod 8): only Cl = Pic is possible",
            args.h2, residue
        ),
    }
}

pub fn cmd_classify(args: &InstanceArgs) -> CliResult<Value> {
    let inst = args.build()?;
    let result = classify(&inst)?;
    let square = args.d * args.d * args.h2 - 2 * args.r * args.a;
    let survivors: Vec<Value> = result
        .survivors
        .iter()
        .map(|c| candidate_json(c, None))
        .collect();
    Ok(json!({
        "instance": args.to_json(),
        "spherical_check": {
            "expression": "d^2*H^2 - 2*r*a",
            "value": square,
            "ok": square == -2,
        },
        "gcd_check": {
            "gcd_r_d": gcd(args.r, args.d),
            "ok": gcd(args.r, args.d) == 1,
        },
        "outcome": result.outcome.as_str(),
        "mod8_note": mod8_note(args),
        "survivors": survivors,
    }))
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[derive(Args, Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchArgs {
    #[command(flatten)]
    pub instance: InstanceArgs,
    /// Bound on |k1|; defaults to 12.
    #[arg(long)]
    pub k1_max: Option<i64>,
    /// Bound on |e1|; defaults to 4r + 4.
    #[arg(long)]
    pub e1_max: Option<i64>,
    /// List the verdict of every candidate for v.
    #[arg(long, default_value_t = false)]
    pub audit: bool,
}

pub fn cmd_search(args: &SearchArgs) -> CliResult<Value> {
    let inst = args.instance.build()?;
    let (dk, de) = destabilizer::default_bounds(&inst);
    let (bk, be) = (args.k1_max.unwrap_or(dk), args.e1_max.unwrap_or(de));
    let report = search_with_audit(&inst, bk, be)?;

    let listed = |xs: &[(Candidate, Verdict)]| -> Vec<Value> {
        xs.iter().map(|(c, v)| candidate_json(c, Some(v))).collect()
    };
    let rank_zero: Vec<Value> = report
        .rank_zero
        .iter()
        .map(|(m, v)| {
            let failures: Vec<Value> = v.failures.iter().map(|f| f.to_string().into()).collect();
            json!({ "m": m, "passed": v.passed, "failures": failures })
        })
        .collect();

    let mut out = json!({
        "instance": args.instance.to_json(),
        "bounds": { "k1": bk, "e1": be },
        "examined": report.examined,
        "survivors": listed(&report.survivors),
        "rank_zero": rank_zero,
        "u_survivors": listed(&report.u_survivors),
        "t_survivors": listed(&report.t_survivors),
    });
    if args.audit {
        out["audit"] = listed(&report.audit).into();
    }
    Ok(out)
}

pub fn cmd_pell(r: i64, bound: i64) -> CliResult<Value> {
    if r < 1 {
        return Err(CliError::Invalid(format!("r must be at least 1, got {r}")));
    }
    if bound < 0 {
        return Err(CliError::Invalid(format!(
            "bound must be nonnegative, got {bound}"
        )));
    }
    let solutions: Vec<Value> = pell_solutions(r, bound)
        .into_iter()
        .map(|(x, y)| json!([x, y]))
        .collect();
    Ok(json!({
        "r": r,
        "bound": bound,
        "equation": "x^2 - r*x*y + y^2 = 1",
        "solutions": solutions,
        "minimal": is_minimal_pell_pair(r),
    }))
}

/// Parses `2,-2,0` into parts.
pub fn parse_splitting(text: &str) -> CliResult<SplittingType> {
    let parts = text
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| CliError::Invalid(format!("bad splitting part {p:?}")))
        })
        .collect::<CliResult<Vec<i64>>>()?;
    Ok(SplittingType::new(parts)?)
}

pub fn cmd_descent(splitting: &str, require_zero_sum: bool) -> CliResult<Value> {
    let s = parse_splitting(splitting)?;
    if require_zero_sum && !s.is_zero_sum() {
        return Err(Error::NonZeroSum(s.degree()).into());
    }
    // Off the zero-sum locus the bundle cannot be trivial on L and the
    // criterion does not apply.
    let (descends, agrees) = if s.is_zero_sum() {
        (s.descends()?, Value::from(s.hom_criterion_agrees()?))
    } else {
        (false, Value::Null)
    };
    Ok(json!({
        "splitting": s.parts(),
        "sum": s.degree(),
        "descends": descends,
        "hom_dim_twist_minus2": s.hom_dim_on_l(-2),
        "criterion_agrees": agrees,
    }))
}

/// `key: value` lines for the top-level fields, values as compact JSON.
pub fn render_text(value: &Value) -> String {
    match value {
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}: {s}\n"),
                other => format!("{k}: {other}\n"),
            })
            .collect(),
        other => format!("{other}\n"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nodal18(cl: bool) -> InstanceArgs {
        InstanceArgs::new(18, cl, 2, 1, 5)
    }

    #[test]
    fn classify_empty_lists_witnesses() {
        let out = cmd_classify(&nodal18(true)).unwrap();
        assert_eq!(out["outcome"], "empty");
        let got: Vec<(i64, i64, i64)> = out["survivors"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| {
                (
                    c["k1"].as_i64().unwrap(),
                    c["e1"].as_i64().unwrap(),
                    c["m"].as_i64().unwrap(),
                )
            })
            .collect();
        assert_eq!(got, vec![(1, 1, 3), (1, 3, 1)]);
    }

    #[test]
    fn classify_reduced_point() {
        let out = cmd_classify(&nodal18(false)).unwrap();
        assert_eq!(out["outcome"], "reduced_point_locally_free");
        assert!(out["survivors"].as_array().unwrap().is_empty());
    }

    #[test]
    fn classify_rejects_non_spherical() {
        let err = cmd_classify(&InstanceArgs::new(4, false, 2, 1, 1)).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("d^2*H^2 - 2*r*a != -2"));
    }

    #[test]
    fn search_audit_tags() {
        let args = SearchArgs {
            instance: InstanceArgs::new(4, false, 3, 1, 1),
            k1_max: None,
            e1_max: None,
            audit: true,
        };
        let out = cmd_search(&args).unwrap();
        let audit = out["audit"].as_array().unwrap();
        let find = |k1: i64, e1: i64| {
            audit
                .iter()
                .find(|c| c["k1"] == k1 && c["e1"] == e1)
                .unwrap()
                .clone()
        };
        let failures = find(4, 6)["failures"].to_string();
        assert!(failures.contains("pairing-sign: vv'=2"), "{failures}");
        let failures = find(2, 6)["failures"].to_string();
        assert!(failures.contains("wall-position: W=W_{-1}"), "{failures}");
    }

    #[test]
    fn search_rejects_zero_bounds() {
        let args = SearchArgs {
            instance: nodal18(true),
            k1_max: Some(0),
            e1_max: Some(0),
            audit: false,
        };
        assert_eq!(cmd_search(&args).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn pell_examples() {
        let out = cmd_pell(3, 10).unwrap();
        let sols = out["solutions"].as_array().unwrap();
        for p in [json!([1, 0]), json!([0, 1]), json!([1, 3]), json!([3, 1])] {
            assert!(sols.contains(&p));
        }
        assert_eq!(out["minimal"], true);
        assert_eq!(cmd_pell(0, 5).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn descent_examples() {
        let out = cmd_descent("2,-2", false).unwrap();
        assert_eq!(out["descends"], false);
        assert_eq!(out["hom_dim_twist_minus2"], 3);
        let out = cmd_descent("0,0,0", true).unwrap();
        assert_eq!(out["descends"], true);
        assert_eq!(out["hom_dim_twist_minus2"], 0);
        assert_eq!(cmd_descent("1,0", true).unwrap_err().exit_code(), 2);
        assert_eq!(
            cmd_descent("1,0", false).unwrap()["criterion_agrees"],
            Value::Null
        );
    }

    #[test]
    fn rationals_parse_exactly() {
        assert_eq!(
            parse_rational("1/100").unwrap(),
            Q::new(1.into(), 100.into())
        );
        assert_eq!(parse_rational("3").unwrap(), Q::from_integer(3.into()));
        assert!(parse_rational("0.01").is_err());
    }

    #[test]
    fn breach_maps_to_three() {
        let e: CliError = Error::InvariantBreach("x".into()).into();
        assert_eq!(e.exit_code(), 3);
    }
}
