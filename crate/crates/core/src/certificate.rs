//! Walk certificates and their JSON form.
//!
//! ```json
//! {
//!   "instance": "@cube2",
//!   "start": ["0/1", "0/1"],
//!   "steps": [{ "direction": ["1", "0"], "length": "1/1" }],
//!   "end": ["1/1", "0/1"]
//! }
//! ```
//!
//! Rationals are always written in lowest terms as `p/q`.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{format_rational, parse_rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkStep {
    pub direction: Vec<BigInt>,
    pub length: BigRational,
}

/// A claimed circuit walk, re-checkable with
/// [`verify_walk`](crate::walks::verify_walk).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkCertificate {
    /// `@name` for catalog instances, otherwise a file path.
    pub instance: String,
    pub start: Vec<BigRational>,
    pub steps: Vec<WalkStep>,
    pub end: Vec<BigRational>,
}

#[derive(Serialize, Deserialize)]
struct StepJson {
    direction: Vec<String>,
    length: String,
}

#[derive(Serialize, Deserialize)]
struct CertificateJson {
    instance: String,
    start: Vec<String>,
    steps: Vec<StepJson>,
    end: Vec<String>,
}

fn point_strings(x: &[BigRational]) -> Vec<String> {
    x.iter().map(format_rational).collect()
}

fn parse_point(x: &[String]) -> Result<Vec<BigRational>> {
    x.iter()
        .map(|s| parse_rational(s).map_err(Error::Certificate))
        .collect()
}

impl WalkCertificate {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn to_json(&self) -> String {
        let wire = CertificateJson {
            instance: self.instance.clone(),
            start: point_strings(&self.start),
            steps: self
                .steps
                .iter()
                .map(|s| StepJson {
                    direction: s.direction.iter().map(|c| c.to_string()).collect(),
                    length: format_rational(&s.length),
                })
                .collect(),
            end: point_strings(&self.end),
        };
        serde_json::to_string_pretty(&wire).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let wire: CertificateJson =
            serde_json::from_str(text).map_err(|e| Error::Certificate(e.to_string()))?;
        let steps = wire
            .steps
            .iter()
            .map(|s| {
                let direction = s
                    .direction
                    .iter()
                    .map(|c| {
                        c.parse::<BigInt>()
                            .map_err(|_| Error::Certificate(format!("bad integer {c:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let length = parse_rational(&s.length).map_err(Error::Certificate)?;
                Ok(WalkStep { direction, length })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            instance: wire.instance,
            start: parse_point(&wire.start)?,
            steps,
            end: parse_point(&wire.end)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat() -> impl Strategy<Value = BigRational> {
        (-1000i64..1000, 1i64..50).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
    }

    proptest! {
        #[test]
        fn json_round_trip(
            start in prop::collection::vec(rat(), 3),
            end in prop::collection::vec(rat(), 3),
            steps in prop::collection::vec((prop::collection::vec(-9i64..9, 3), rat()), 0..4),
        ) {
            let cert = WalkCertificate {
                instance: "@q4_sym".into(),
                start,
                steps: steps
                    .into_iter()
                    .map(|(d, length)| WalkStep { direction: d.into_iter().map(BigInt::from).collect(), length })
                    .collect(),
                end,
            };
            let text = cert.to_json();
            let back = WalkCertificate::from_json(&text).unwrap();
            prop_assert_eq!(&back, &cert);
            prop_assert_eq!(back.to_json(), text);
        }
    }

    #[test]
    fn wire_format() {
        let cert = WalkCertificate {
            instance: "@cube2".into(),
            start: vec![BigRational::from_integer(0.into()); 2],
            steps: vec![WalkStep {
                direction: vec![1.into(), 0.into()],
                length: BigRational::new(2.into(), 4.into()),
            }],
            end: vec![
                BigRational::new(1.into(), 2.into()),
                BigRational::from_integer(0.into()),
            ],
        };
        let v: serde_json::Value = serde_json::from_str(&cert.to_json()).unwrap();
        assert_eq!(v["start"][0], "0/1");
        assert_eq!(v["steps"][0]["direction"][0], "1");
        assert_eq!(v["steps"][0]["length"], "1/2");
        assert_eq!(v["end"][0], "1/2");
    }

    #[test]
    fn malformed_json_is_an_error() {
        assert!(WalkCertificate::from_json("{").is_err());
        let bad = r#"{"instance":"x","start":["1/0"],"steps":[],"end":[]}"#;
        assert!(WalkCertificate::from_json(bad).is_err());
        let bad =
            r#"{"instance":"x","start":[],"steps":[{"direction":["1.5"],"length":"1"}],"end":[]}"#;
        assert!(WalkCertificate::from_json(bad).is_err());
    }
}
