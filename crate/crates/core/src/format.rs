//! File formats: JSON instances and solutions, and a small DIMACS-style edge
//! list importer. Rationals are written as `"p/q"` strings; integers are also
//! accepted on input, and interval ends may be `"inf"` or `"-inf"`.

use serde::{Deserialize, Serialize};

use crate::element::ElementId;
use crate::error::Error;
use crate::instance::Instance;
use crate::interdiction::{doubled_instance, find_candidates};
use crate::matroid::MatroidBackend;
use crate::parametric::{all_equality_points, parametric_min_basis};
use crate::pwl::{format_rational, parse_rational, ExtRational, Interval, LinearFn, Rational};
use crate::solution::Solution;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{field}: {message}")]
    Value { field: String, message: String },
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error(transparent)]
    Instance(#[from] Error),
}

fn bad(field: impl Into<String>, message: impl ToString) -> FormatError {
    FormatError::Value {
        field: field.into(),
        message: message.to_string(),
    }
}

/// A number as written in a file: a JSON integer or a rational string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Int(i64),
    Text(String),
}

impl Num {
    fn rational(&self, field: &str) -> Result<Rational, FormatError> {
        match self {
            Num::Int(n) => Ok(Rational::from_integer((*n).into())),
            Num::Text(s) => parse_rational(s).map_err(|e| bad(field, e)),
        }
    }

    fn extended(&self, field: &str) -> Result<ExtRational, FormatError> {
        match self {
            Num::Int(n) => Ok(ExtRational::Finite(Rational::from_integer((*n).into()))),
            Num::Text(s) => s.parse().map_err(|e| bad(field, e)),
        }
    }
}

impl From<&Rational> for Num {
    fn from(r: &Rational) -> Self {
        Num::Text(format_rational(r))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightSpec {
    pub a: Num,
    pub b: Num,
}

impl WeightSpec {
    fn line(&self, field: &str) -> Result<LinearFn, FormatError> {
        Ok(LinearFn::new(
            self.a.rational(&format!("{field}.a"))?,
            self.b.rational(&format!("{field}.b"))?,
        ))
    }
}

impl From<&LinearFn> for WeightSpec {
    fn from(l: &LinearFn) -> Self {
        WeightSpec {
            a: (&l.a).into(),
            b: (&l.b).into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeSpec {
    pub u: usize,
    pub v: usize,
    pub a: Num,
    pub b: Num,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalSpec {
    pub lo: Num,
    pub hi: Num,
}

impl From<&Interval> for IntervalSpec {
    fn from(i: &Interval) -> Self {
        IntervalSpec {
            lo: Num::Text(i.lo().to_string()),
            hi: Num::Text(i.hi().to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum InstanceFile {
    Graphic {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        nodes: usize,
        edges: Vec<EdgeSpec>,
        interval: IntervalSpec,
    },
    Uniform {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        m: usize,
        k: usize,
        weights: Vec<WeightSpec>,
        interval: IntervalSpec,
    },
    /// Every element of `inner` plus an identical twin; twin of `i` is `i + m`.
    Doubled {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        inner: Box<InstanceFile>,
    },
}

impl InstanceFile {
    pub fn to_instance(&self) -> Result<Instance, FormatError> {
        let read_interval = |i: &IntervalSpec| -> Result<Interval, FormatError> {
            Interval::new(i.lo.extended("interval.lo")?, i.hi.extended("interval.hi")?)
                .map_err(|e| bad("interval", e))
        };
        let (inst, name) = match self {
            InstanceFile::Graphic {
                name,
                nodes,
                edges,
                interval,
            } => {
                let weights = edges
                    .iter()
                    .enumerate()
                    .map(|(i, e)| {
                        WeightSpec {
                            a: e.a.clone(),
                            b: e.b.clone(),
                        }
                        .line(&format!("edges[{i}]"))
                    })
                    .collect::<Result<_, _>>()?;
                let backend =
                    MatroidBackend::graphic(*nodes, edges.iter().map(|e| (e.u, e.v)).collect());
                (
                    Instance::new(backend, weights, read_interval(interval)?)?,
                    name,
                )
            }
            InstanceFile::Uniform {
                name,
                m,
                k,
                weights,
                interval,
            } => {
                let weights = weights
                    .iter()
                    .enumerate()
                    .map(|(i, w)| w.line(&format!("weights[{i}]")))
                    .collect::<Result<_, _>>()?;
                (
                    Instance::new(
                        MatroidBackend::uniform(*m, *k),
                        weights,
                        read_interval(interval)?,
                    )?,
                    name,
                )
            }
            InstanceFile::Doubled { name, inner } => {
                (doubled_instance(&inner.to_instance()?), name)
            }
        };
        Ok(match name {
            Some(n) => inst.named(n.clone()),
            None => inst,
        })
    }

    pub fn from_instance(inst: &Instance) -> Self {
        let name = inst.name.clone();
        let interval = IntervalSpec::from(inst.interval());
        let weights = inst.weights();
        match inst.backend() {
            MatroidBackend::Graphic { nodes, edges } => InstanceFile::Graphic {
                name,
                nodes: *nodes,
                edges: edges
                    .iter()
                    .zip(weights)
                    .map(|(&(u, v), w)| EdgeSpec {
                        u,
                        v,
                        a: (&w.a).into(),
                        b: (&w.b).into(),
                    })
                    .collect(),
                interval,
            },
            MatroidBackend::Uniform { m, k } => InstanceFile::Uniform {
                name,
                m: *m,
                k: *k,
                weights: weights.iter().map(WeightSpec::from).collect(),
                interval,
            },
            MatroidBackend::Doubled(inner) => {
                let half = Instance::new(
                    (**inner).clone(),
                    weights[..inner.ground_size()].to_vec(),
                    inst.interval().clone(),
                )
                .expect("inner of a valid doubled instance");
                InstanceFile::Doubled {
                    name,
                    inner: Box::new(InstanceFile::from_instance(&half)),
                }
            }
        }
    }
}

pub fn parse_instance_json(text: &str) -> Result<Instance, FormatError> {
    serde_json::from_str::<InstanceFile>(text)?.to_instance()
}

pub fn instance_to_json(inst: &Instance) -> String {
    serde_json::to_string_pretty(&InstanceFile::from_instance(inst)).expect("serializable")
}

/// Reads `p edge N M`, then `e u v a [b]` lines with 1-based nodes, and an
/// optional `i lo hi` interval line (default: the whole real line). Lines
/// starting with `c` are comments.
pub fn parse_dimacs(text: &str) -> Result<Instance, FormatError> {
    let mut nodes = None;
    let mut edges = Vec::new();
    let mut weights = Vec::new();
    let mut interval = Interval::real_line();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let err = |message: String| FormatError::Line { line, message };
        let fields: Vec<&str> = raw.split_whitespace().collect();
        let num = |s: &str| parse_rational(s).map_err(|e| err(format!("{s:?}: {e}")));
        match fields.as_slice() {
            [] | ["c", ..] => {}
            ["p", "edge", n, _m] => {
                nodes = Some(n.parse::<usize>().map_err(|e| err(e.to_string()))?);
            }
            ["e", u, v, rest @ ..] if (1..=2).contains(&rest.len()) => {
                let n = nodes.ok_or_else(|| err("edge before the problem line".into()))?;
                let endpoint = |s: &str| -> Result<usize, FormatError> {
                    match s.parse::<usize>() {
                        Ok(x) if (1..=n).contains(&x) => Ok(x - 1),
                        _ => Err(err(format!("node {s:?} outside 1..={n}"))),
                    }
                };
                edges.push((endpoint(u)?, endpoint(v)?));
                let b = match rest.get(1) {
                    Some(b) => num(b)?,
                    None => Rational::from_integer(0.into()),
                };
                weights.push(LinearFn::new(num(rest[0])?, b));
            }
            ["i", lo, hi] => {
                let lo: ExtRational = lo.parse().map_err(|e| err(format!("{e}")))?;
                let hi: ExtRational = hi.parse().map_err(|e| err(format!("{e}")))?;
                interval = Interval::new(lo, hi).map_err(|e| err(e.to_string()))?;
            }
            _ => return Err(err(format!("unrecognized line {raw:?}"))),
        }
    }
    let nodes = nodes.ok_or(FormatError::Line {
        line: 0,
        message: "missing `p edge` line".into(),
    })?;
    Ok(Instance::new(
        MatroidBackend::graphic(nodes, edges),
        weights,
        interval,
    )?)
}

/// Parses JSON, or the DIMACS edge format when the text does not start with `{`.
pub fn parse_instance(text: &str) -> Result<Instance, FormatError> {
    if text.trim_start().starts_with('{') {
        parse_instance_json(text)
    } else {
        parse_dimacs(text)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmentFile {
    pub lo: String,
    pub hi: String,
    pub value: WeightSpec,
    pub most_vital: ElementId,
    pub basis: Vec<ElementId>,
    pub replacement: ElementId,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    pub m: usize,
    pub k: usize,
    pub equality_points: usize,
    pub candidates: usize,
    pub breakpoints_of_w: usize,
    pub changepoints_of_y: usize,
    pub breakpoints_of_y: usize,
    pub interdiction_points_of_y: usize,
    pub bound_2km: usize,
    /// Between consecutive candidates `y` has at most `k - 1` changepoints.
    pub bound_mk2_intervals_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionFile {
    pub instance: Option<String>,
    pub algorithm: String,
    pub segments: Vec<SegmentFile>,
    pub stats: Stats,
}

pub fn solution_stats(inst: &Instance, sol: &Solution) -> Result<Stats, Error> {
    let eq = all_equality_points(inst);
    let candidates = find_candidates(inst);
    let w = parametric_min_basis(inst)?;
    let (breakpoints, interdiction) = sol.classify_changepoints();
    let k = inst.rank();
    let cands = candidates.lambdas();
    let intervals_ok = (0..=cands.len()).all(|i| {
        let inside = sol
            .y
            .cuts()
            .iter()
            .filter(|c| (i == 0 || **c > cands[i - 1]) && (i == cands.len() || **c < cands[i]))
            .count();
        inside < k
    });
    Ok(Stats {
        m: inst.m(),
        k,
        equality_points: eq.len(),
        candidates: candidates.len(),
        breakpoints_of_w: w.cuts.len(),
        changepoints_of_y: sol.y.cuts().len(),
        breakpoints_of_y: breakpoints.len(),
        interdiction_points_of_y: interdiction.len(),
        bound_2km: 2 * k * inst.m(),
        bound_mk2_intervals_ok: intervals_ok,
    })
}

pub fn solution_file(
    inst: &Instance,
    sol: &Solution,
    algorithm: &str,
) -> Result<SolutionFile, Error> {
    Ok(SolutionFile {
        instance: inst.name.clone(),
        algorithm: algorithm.to_string(),
        segments: sol
            .segments
            .iter()
            .map(|s| SegmentFile {
                lo: s.window.lo().to_string(),
                hi: s.window.hi().to_string(),
                value: (&s.value).into(),
                most_vital: s.most_vital,
                basis: s.basis.to_vec(),
                replacement: s.replacement,
            })
            .collect(),
        stats: solution_stats(inst, sol)?,
    })
}
