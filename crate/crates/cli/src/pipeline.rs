//! The transformation-pipeline language.
//!
//! ```text
//! pipeline := step (';' step)*  |  <empty>
//! step     := 'rot' AX AY AZ ANGLE
//!           | 'boost' VX VY VZ
//!           | 'sl2c' RE IM RE IM RE IM RE IM      (α, β, γ, δ row-major)
//! ```
//!
//! Numbers are decimal floats with an optional exponent. Angles are in
//! radians, velocities in units of `c`. Steps act on states in the order
//! written: `boost 0 0 0.5 ; rot 1 0 0 0.3` boosts first, so the composed
//! matrix is `step_n ⋯ step_1`.

use std::fmt;

use photon_wigner::{compose, make_boost, make_rotation, SpinorTransform, UnitDirection, C64};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq)]
pub enum Step {
    Rot { axis: UnitDirection, angle: f64 },
    Boost { velocity: [f64; 3] },
    RawSl2c { entries: [C64; 4] },
}

impl Step {
    pub fn transform(&self) -> SpinorTransform {
        match self {
            // validated at parse time
            Step::Rot { axis, angle } => make_rotation(*axis, *angle).expect("validated axis"),
            Step::Boost { velocity } => make_boost(*velocity).expect("validated velocity"),
            Step::RawSl2c { entries: [a, b, c, d] } => {
                SpinorTransform::from_entries(*a, *b, *c, *d).expect("validated determinant")
            }
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Rot { axis, angle } => write!(f, "rot {:?} {:?} {:?} {:?}", axis.x, axis.y, axis.z, angle),
            Step::Boost { velocity: [x, y, z] } => write!(f, "boost {x:?} {y:?} {z:?}"),
            Step::RawSl2c { entries } => {
                write!(f, "sl2c")?;
                for e in entries {
                    write!(f, " {:?} {:?}", e.re, e.im)?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct PipelineSpec {
    pub steps: Vec<Step>,
}

impl PipelineSpec {
    /// `step_n ⋯ step_1`; the identity for an empty pipeline.
    pub fn composed(&self) -> SpinorTransform {
        self.steps
            .iter()
            .fold(SpinorTransform::IDENTITY, |acc, s| compose(&s.transform(), &acc))
    }
}

impl fmt::Display for PipelineSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                write!(f, " ; ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

#[derive(Error, Debug, Clone, PartialEq)]
pub enum ParseError {
    /// `position` is the 1-based index of the offending token, or one past
    /// the last token when input ended early.
    #[error("syntax error at token {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("token {position}: {source}")]
    Domain {
        position: usize,
        #[source]
        source: photon_wigner::Error,
    },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::Syntax { position, .. } | ParseError::Domain { position, .. } => *position,
        }
    }
}

fn tokenize(text: &str) -> Vec<&str> {
    let mut tokens = Vec::new();
    for word in text.split_whitespace() {
        let mut rest = word;
        while let Some(i) = rest.find(';') {
            if i > 0 {
                tokens.push(&rest[..i]);
            }
            tokens.push(";");
            rest = &rest[i + 1..];
        }
        if !rest.is_empty() {
            tokens.push(rest);
        }
    }
    tokens
}

/// `[+-]? (digits ('.' digits?)? | '.' digits) ([eE] [+-]? digits)?`
fn is_decimal(tok: &str) -> bool {
    let b = tok.as_bytes();
    let mut i = 0;
    if i < b.len() && (b[i] == b'+' || b[i] == b'-') {
        i += 1;
    }
    let int_start = i;
    while i < b.len() && b[i].is_ascii_digit() {
        i += 1;
    }
    let mut digits = i - int_start;
    if i < b.len() && b[i] == b'.' {
        i += 1;
        let frac_start = i;
        while i < b.len() && b[i].is_ascii_digit() {
            i += 1;
        }
        digits += i - frac_start;
    }
    if digits == 0 {
        return false;
    }
    if i < b.len() && (b[i] == b'e' || b[i] == b'E') {
        i += 1;
        if i < b.len() && (b[i] == b'+' || b[i] == b'-') {
            i += 1;
        }
        let exp_start = i;
        while i < b.len() && b[i].is_ascii_digit() {
            i += 1;
        }
        if i == exp_start {
            return false;
        }
    }
    i == b.len()
}

struct Cursor<'a> {
    tokens: Vec<&'a str>,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<&'a str> {
        self.tokens.get(self.pos).copied()
    }

    /// 1-based position of the next token.
    fn position(&self) -> usize {
        self.pos + 1
    }

    fn syntax(&self, message: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            position: self.position(),
            message: message.into(),
        }
    }

    fn number(&mut self, what: &str) -> Result<f64, ParseError> {
        match self.peek() {
            None | Some(";") => Err(self.syntax(format!("expected {what}"))),
            Some(tok) => {
                let value = if is_decimal(tok) { tok.parse::<f64>().ok() } else { None };
                match value.filter(|v| v.is_finite()) {
                    Some(v) => {
                        self.pos += 1;
                        Ok(v)
                    }
                    None => Err(self.syntax(format!("expected {what}, found `{tok}`"))),
                }
            }
        }
    }

    fn numbers<const N: usize>(&mut self, names: [&str; N]) -> Result<[f64; N], ParseError> {
        let mut out = [0.0; N];
        for (slot, name) in out.iter_mut().zip(names) {
            *slot = self.number(name)?;
        }
        Ok(out)
    }
}

pub fn parse_pipeline(text: &str) -> Result<PipelineSpec, ParseError> {
    let mut cur = Cursor {
        tokens: tokenize(text),
        pos: 0,
    };
    let mut steps = Vec::new();
    if cur.tokens.is_empty() {
        return Ok(PipelineSpec { steps });
    }
    loop {
        let start = cur.position();
        let step = match cur.peek() {
            Some("rot") => {
                cur.pos += 1;
                let [ax, ay, az, angle] = cur.numbers(["axis x", "axis y", "axis z", "angle"])?;
                let axis = UnitDirection::normalize(ax, ay, az).map_err(|source| ParseError::Domain {
                    position: start,
                    source,
                })?;
                Step::Rot { axis, angle }
            }
            Some("boost") => {
                cur.pos += 1;
                let velocity = cur.numbers(["velocity x", "velocity y", "velocity z"])?;
                make_boost(velocity).map_err(|source| ParseError::Domain {
                    position: start,
                    source,
                })?;
                Step::Boost { velocity }
            }
            Some("sl2c") => {
                cur.pos += 1;
                let e = cur.numbers(["Re α", "Im α", "Re β", "Im β", "Re γ", "Im γ", "Re δ", "Im δ"])?;
                let entries = [
                    C64::new(e[0], e[1]),
                    C64::new(e[2], e[3]),
                    C64::new(e[4], e[5]),
                    C64::new(e[6], e[7]),
                ];
                let [a, b, c, d] = entries;
                SpinorTransform::from_entries(a, b, c, d).map_err(|source| ParseError::Domain {
                    position: start,
                    source,
                })?;
                Step::RawSl2c { entries }
            }
            Some(";") => return Err(cur.syntax("empty step")),
            Some(tok) => return Err(cur.syntax(format!("unknown step `{tok}`, expected rot, boost or sl2c"))),
            None => return Err(cur.syntax("expected a step after `;`")),
        };
        steps.push(step);
        match cur.peek() {
            None => break,
            Some(";") => cur.pos += 1,
            Some(tok) => return Err(cur.syntax(format!("expected `;` or end of input, found `{tok}`"))),
        }
    }
    Ok(PipelineSpec { steps })
}
