//! JSON input and output for pencils.
//!
//! Input: `{"n": 6, "q0": [["1","0",...],...], "q1": [[...]]}` with every
//! entry a rational written as "p/q" or "p". Output schema is documented in
//! FORMATS.md at the repository root.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::discriminant::{PencilRoot, RootLocation};
use crate::error::PencilError;
use crate::forms::{QuadricPencil, SymmetricForm};
use crate::isotopy::{IsotopyClass, TopologyVerdict};
use crate::poly::Rat;

pub const CLASSIFY_SCHEMA: &str = "fanoreal/pencil-classify/1";

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PencilInput {
    pub n: usize,
    pub q0: Vec<Vec<String>>,
    pub q1: Vec<Vec<String>>,
}

pub fn parse_rational(s: &str) -> Result<Rat, PencilError> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| PencilError::BadInput(format!("bad rational numerator: {s:?}")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| PencilError::BadInput(format!("bad rational denominator: {s:?}")))?;
    if d.is_zero() {
        return Err(PencilError::BadInput(format!("zero denominator: {s:?}")));
    }
    Ok(Rat::new(n, d))
}

pub fn rational_to_string(r: &Rat) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn parse_matrix(rows: &[Vec<String>], n: usize) -> Result<SymmetricForm, PencilError> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(PencilError::BadInput(format!(
            "matrix must be {n}x{n} to match \"n\""
        )));
    }
    let parsed: Result<Vec<Vec<Rat>>, PencilError> = rows
        .iter()
        .map(|row| row.iter().map(|s| parse_rational(s)).collect())
        .collect();
    SymmetricForm::from_rows(parsed?)
}

impl PencilInput {
    pub fn to_pencil(&self) -> Result<QuadricPencil, PencilError> {
        let q0 = parse_matrix(&self.q0, self.n)?;
        let q1 = parse_matrix(&self.q1, self.n)?;
        QuadricPencil::new(q0, q1)
    }

    pub fn from_pencil(p: &QuadricPencil) -> Self {
        let dump = |f: &SymmetricForm| {
            f.rows()
                .iter()
                .map(|row| row.iter().map(rational_to_string).collect())
                .collect()
        };
        PencilInput {
            n: p.n(),
            q0: dump(&p.q0),
            q1: dump(&p.q1),
        }
    }
}

/// One discriminant root in the output document.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RootJson {
    Rational { value: String, multiplicity: usize },
    Interval { low: String, high: String, multiplicity: usize },
    Infinity { multiplicity: usize },
}

impl RootJson {
    pub fn from_root(r: &PencilRoot) -> Self {
        match &r.location {
            RootLocation::Rational(v) => RootJson::Rational {
                value: rational_to_string(v),
                multiplicity: r.multiplicity,
            },
            RootLocation::Interval { low, high } => RootJson::Interval {
                low: rational_to_string(low),
                high: rational_to_string(high),
                multiplicity: r.multiplicity,
            },
            RootLocation::Infinity => RootJson::Infinity {
                multiplicity: r.multiplicity,
            },
        }
    }
}

/// Full classification result for one pencil, as emitted by the CLI.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub schema: String,
    pub n: usize,
    pub class: Vec<u32>,
    pub k: u32,
    pub verdict: String,
    pub discriminant_roots: Vec<RootJson>,
}

impl ClassifyReport {
    pub fn new(
        n: usize,
        class: &IsotopyClass,
        verdict: Option<TopologyVerdict>,
        roots: &[PencilRoot],
    ) -> Self {
        ClassifyReport {
            schema: CLASSIFY_SCHEMA.to_string(),
            n,
            class: class.parts().to_vec(),
            k: class.k(),
            verdict: verdict.map_or_else(|| "unsupported_dimension".to_string(), |v| v.to_string()),
            discriminant_roots: roots.iter().map(RootJson::from_root).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rationals() {
        assert_eq!(parse_rational("3/4").unwrap(), Rat::new(3.into(), 4.into()));
        assert_eq!(parse_rational("-5").unwrap(), Rat::new((-5).into(), 1.into()));
        assert_eq!(parse_rational(" 7 / -2 ").unwrap(), Rat::new(7.into(), (-2).into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a").is_err());
    }

    #[test]
    fn round_trips_a_pencil() {
        let json = r#"{"n":2,"q0":[["1","1/2"],["1/2","-1"]],"q1":[["0","1"],["1","0"]]}"#;
        let input: PencilInput = serde_json::from_str(json).unwrap();
        let p = input.to_pencil().unwrap();
        assert_eq!(p.n(), 2);
        let back = PencilInput::from_pencil(&p);
        assert_eq!(back.q0[0][1], "1/2");
        assert_eq!(back.q1[1][0], "1");
    }

    #[test]
    fn rejects_asymmetric_input() {
        let json = r#"{"n":2,"q0":[["1","2"],["3","1"]],"q1":[["0","0"],["0","0"]]}"#;
        let input: PencilInput = serde_json::from_str(json).unwrap();
        assert!(input.to_pencil().is_err());
    }
}
