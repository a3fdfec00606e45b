//! JSON file formats.
//!
//! Clutter: `{"ground_size": n, "members": [[e, ...], ...]}` with 1-based
//! elements. Point set: `{"dimension": n, "points": ["110", ...]}` where
//! character 1 is coordinate 1. Validation errors carry the 1-based line of
//! the offending entry.

use num::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::clutter::{Clutter, SubsetMask};
use crate::cuboid::{Point, PointSet};
use crate::error::{Error, Result};
use crate::polyhedral::{Rational, VertexCertificate};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ClutterFile {
    ground_size: usize,
    members: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PointSetFile {
    dimension: usize,
    points: Vec<String>,
}

fn syntax_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        message: e.to_string(),
    }
}

pub fn parse_clutter(text: &str) -> Result<Clutter> {
    let file: ClutterFile = serde_json::from_str(text).map_err(syntax_error)?;
    let n = file.ground_size;
    let line_of = |idx: usize| entry_line(text, "members", idx);
    let mut sets = Vec::with_capacity(file.members.len());
    for (idx, elems) in file.members.iter().enumerate() {
        let set = SubsetMask::from_elements(n, elems).map_err(|e| Error::Parse {
            line: line_of(idx),
            message: format!("member {}: {e}", idx + 1),
        })?;
        sets.push(set);
    }
    for (b_idx, &b) in sets.iter().enumerate() {
        for (a_idx, &a) in sets[..b_idx].iter().enumerate() {
            if a != b && (a.is_subset(b) || b.is_subset(a)) {
                let (inner, outer) = if a.is_subset(b) { (a, b) } else { (b, a) };
                return Err(Error::Parse {
                    line: line_of(b_idx),
                    message: format!(
                        "antichain violation: {inner} is strictly contained in {outer} (member on line {})",
                        line_of(a_idx)
                    ),
                });
            }
        }
    }
    Clutter::new(n, sets).map_err(|e| Error::Parse {
        line: 1,
        message: e.to_string(),
    })
}

pub fn clutter_to_json(c: &Clutter) -> String {
    let members: Vec<String> = c
        .members()
        .iter()
        .map(|m| {
            format!(
                "[{}]",
                m.elements()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            )
        })
        .collect();
    format!(
        "{{\n  \"ground_size\": {},\n  \"members\": [{}]\n}}\n",
        c.ground_size(),
        list_body(&members)
    )
}

pub fn parse_point_set(text: &str) -> Result<PointSet> {
    let file: PointSetFile = serde_json::from_str(text).map_err(syntax_error)?;
    let n = file.dimension;
    let mut points = Vec::with_capacity(file.points.len());
    for (idx, s) in file.points.iter().enumerate() {
        let bad = |message: String| Error::Parse {
            line: entry_line(text, "points", idx),
            message,
        };
        if s.chars().count() != n {
            return Err(bad(format!(
                "point {s:?} has length {}, expected {n}",
                s.chars().count()
            )));
        }
        points.push(s.parse::<Point>().map_err(|e| bad(e.to_string()))?);
    }
    PointSet::new(n, points).map_err(|e| Error::Parse {
        line: 1,
        message: e.to_string(),
    })
}

pub fn point_set_to_json(s: &PointSet) -> String {
    let points: Vec<String> = s.points().map(|p| format!("\"{p}\"")).collect();
    format!(
        "{{\n  \"dimension\": {},\n  \"points\": [{}]\n}}\n",
        s.dim(),
        list_body(&points)
    )
}

fn list_body(items: &[String]) -> String {
    if items.is_empty() {
        String::new()
    } else {
        format!("\n    {}\n  ", items.join(",\n    "))
    }
}

/// Line of the `index`-th entry of the top-level array under `key`;
/// falls back to the key's own line, or 1.
fn entry_line(text: &str, key: &str, index: usize) -> usize {
    let line_at = |pos: usize| text[..pos].matches('\n').count() + 1;
    let needle = format!("\"{key}\"");
    let Some(key_pos) = text.find(&needle) else {
        return 1;
    };
    let Some(open) = text[key_pos..].find('[').map(|o| key_pos + o) else {
        return line_at(key_pos);
    };
    let mut depth = 0usize;
    let mut in_string = false;
    let mut escaped = false;
    let mut seen = 0usize;
    let mut expecting = true;
    for (off, ch) in text[open..].char_indices() {
        let pos = open + off;
        if in_string {
            match ch {
                _ if escaped => escaped = false,
                '\\' => escaped = true,
                '"' => in_string = false,
                _ => {}
            }
            continue;
        }
        match ch {
            '[' | '{' => {
                if depth == 1 && expecting {
                    if seen == index {
                        return line_at(pos);
                    }
                    seen += 1;
                    expecting = false;
                }
                depth += 1;
            }
            ']' | '}' => {
                depth -= 1;
                if depth == 0 {
                    break;
                }
            }
            ',' if depth == 1 => expecting = true,
            c if c.is_whitespace() => {}
            _ => {
                if depth == 1 && expecting {
                    if seen == index {
                        return line_at(pos);
                    }
                    seen += 1;
                    expecting = false;
                }
                if ch == '"' {
                    in_string = true;
                }
            }
        }
    }
    line_at(key_pos)
}

#[derive(Serialize, Deserialize)]
struct RationalPair {
    num: String,
    den: String,
}

pub(crate) mod rational_pairs {
    use super::*;

    pub fn serialize<S: Serializer>(
        values: &[Rational],
        ser: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<RationalPair> = values
            .iter()
            .map(|v| RationalPair {
                num: v.numer().to_string(),
                den: v.denom().to_string(),
            })
            .collect();
        pairs.serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        de: D,
    ) -> std::result::Result<Vec<Rational>, D::Error> {
        let pairs = Vec::<RationalPair>::deserialize(de)?;
        pairs
            .into_iter()
            .map(|p| {
                let num: BigInt = p.num.parse().map_err(D::Error::custom)?;
                let den: BigInt = p.den.parse().map_err(D::Error::custom)?;
                if den == BigInt::from(0) {
                    return Err(D::Error::custom("zero denominator"));
                }
                Ok(Rational::new(num, den))
            })
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
struct CertificateFile {
    #[serde(with = "rational_pairs")]
    coordinates: Vec<Rational>,
    basis: Vec<usize>,
    integral: bool,
}

impl Serialize for VertexCertificate {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        CertificateFile {
            coordinates: self.coordinates.clone(),
            basis: self.basis.clone(),
            integral: self.integral,
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for VertexCertificate {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let f = CertificateFile::deserialize(de)?;
        Ok(VertexCertificate {
            coordinates: f.coordinates,
            basis: f.basis,
            integral: f.integral,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cuboid::make_s3;
    use crate::polyhedral::{is_ideal, Limits};
    use proptest::prelude::*;

    #[test]
    fn clutter_round_trip() {
        let d3 = Clutter::delta3();
        let text = clutter_to_json(&d3);
        assert_eq!(parse_clutter(&text).unwrap(), d3);
        assert_eq!(
            text,
            "{\n  \"ground_size\": 3,\n  \"members\": [\n    [1, 2],\n    [1, 3],\n    [2, 3]\n  ]\n}\n"
        );
        let empty = Clutter::empty(2);
        assert_eq!(parse_clutter(&clutter_to_json(&empty)).unwrap(), empty);
    }

    #[test]
    fn clutter_errors_name_lines() {
        let text = "{\n  \"ground_size\": 3,\n  \"members\": [\n    [1, 2],\n    [4]\n  ]\n}";
        let err = parse_clutter(text).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 5, .. }), "{err}");

        let text =
            "{\n  \"ground_size\": 3,\n  \"members\": [\n    [1, 2],\n    [2, 3],\n    [2]\n  ]\n}";
        match parse_clutter(text).unwrap_err() {
            Error::Parse { line, message } => {
                assert_eq!(line, 6);
                assert!(message.contains("line 4"), "{message}");
            }
            other => panic!("unexpected {other}"),
        }

        let inline = r#"{"ground_size": 2, "members": [[1], [1, 2]]}"#;
        assert!(matches!(
            parse_clutter(inline),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_clutter("{\"ground_size\": 2,\n \"members\": [[1]"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(parse_clutter("not json").is_err());
        assert!(parse_clutter(r#"{"ground_size": 2, "members": [[1]], "extra": 1}"#).is_err());
    }

    #[test]
    fn point_set_format() {
        let s3 = make_s3();
        let text = point_set_to_json(&s3);
        assert!(text.contains("\"110\""));
        assert_eq!(parse_point_set(&text).unwrap(), s3);

        let text = "{\n  \"dimension\": 3,\n  \"points\": [\n    \"110\",\n    \"01\"\n  ]\n}";
        assert!(matches!(
            parse_point_set(text),
            Err(Error::Parse { line: 5, .. })
        ));
        let text = "{\"dimension\": 3, \"points\": [\"110\", \"0a1\"]}";
        assert!(parse_point_set(text).is_err());
    }

    #[test]
    fn certificate_json_shape() {
        let w = is_ideal(&Clutter::delta3(), &Limits::default())
            .unwrap()
            .witness
            .unwrap();
        let v = serde_json::to_value(&w).unwrap();
        assert_eq!(v["coordinates"][0]["num"], "1");
        assert_eq!(v["coordinates"][0]["den"], "2");
        assert_eq!(v["integral"], false);
        assert_eq!(v["basis"].as_array().unwrap().len(), 3);
    }

    proptest! {
        #[test]
        fn certificate_round_trip(
            nums in prop::collection::vec(-1_000_000_000_000i64..1_000_000_000_000, 1..6),
            den in 1i64..1_000_000,
        ) {
            let coordinates: Vec<Rational> =
                nums.iter().map(|&n| Rational::new(n.into(), den.into())).collect();
            let integral = coordinates.iter().all(|x| x.is_integer());
            let cert = VertexCertificate { basis: (0..nums.len()).collect(), coordinates, integral };
            let text = serde_json::to_string(&cert).unwrap();
            let back: VertexCertificate = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(back, cert);
        }

        #[test]
        fn point_set_round_trip(codes in prop::collection::vec(0u64..32, 0..20)) {
            let s = PointSet::from_codes(5, codes).unwrap();
            prop_assert_eq!(parse_point_set(&point_set_to_json(&s)).unwrap(), s);
        }
    }
}
