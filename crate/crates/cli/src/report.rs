//! Machine-readable result documents.
//!
//! Every command can emit a single JSON object describing the
//! operation, a digest of the (canonicalized) input, the relevant sizes
//! and index sets, and the output vectors or certificates as exact
//! rational strings. Values are built with [`Json`] and written in
//! insertion order, so output bytes are deterministic.

use conemin_core::linalg::RVector;
use conemin_core::rational::Rational;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Minimal JSON document tree.
#[derive(Debug, Clone)]
pub enum Json {
    Bool(bool),
    UInt(usize),
    Str(String),
    Array(Vec<Json>),
    Object(Vec<(&'static str, Json)>),
    Null,
}

impl std::fmt::Display for Json {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut out = String::new();
        self.write(&mut out);
        f.write_str(&out)
    }
}

impl Json {
    fn write(&self, out: &mut String) {
        match self {
            Json::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Json::UInt(n) => out.push_str(&n.to_string()),
            Json::Str(s) => {
                out.push('"');
                for ch in s.chars() {
                    match ch {
                        '"' => out.push_str("\\\""),
                        '\\' => out.push_str("\\\\"),
                        '\n' => out.push_str("\\n"),
                        '\r' => out.push_str("\\r"),
                        '\t' => out.push_str("\\t"),
                        c if (c as u32) < 0x20 => {
                            out.push_str(&format!("\\u{:04x}", c as u32));
                        }
                        c => out.push(c),
                    }
                }
                out.push('"');
            }
            Json::Array(items) => {
                out.push('[');
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    item.write(out);
                }
                out.push(']');
            }
            Json::Object(fields) => {
                out.push('{');
                for (i, (key, value)) in fields.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    Json::Str((*key).to_string()).write(out);
                    out.push(':');
                    value.write(out);
                }
                out.push('}');
            }
            Json::Null => out.push_str("null"),
        }
    }
}

/// One vector as an array of exact rational strings.
pub fn json_vector(v: &RVector) -> Json {
    Json::Array(
        v.entries()
            .iter()
            .map(|r| Json::Str(r.to_string()))
            .collect(),
    )
}

/// A list of vectors as an array of arrays.
pub fn json_vectors<'a, I: IntoIterator<Item = &'a RVector>>(vs: I) -> Json {
    Json::Array(vs.into_iter().map(json_vector).collect())
}

pub fn json_indices(ix: &[usize]) -> Json {
    Json::Array(ix.iter().map(|&i| Json::UInt(i)).collect())
}

/// FNV-1a 64-bit digest of the canonical text form of the input, as a
/// 16-digit hex string. Comments and whitespace variations do not
/// affect it because the digest is taken after re-serialization.
pub fn digest(canonical_text: &str) -> String {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in canonical_text.bytes() {
        hash ^= u64::from(byte);
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    format!("{:016x}", hash)
}

/// Fixed-point decimal rendering with `digits` places, rounding half
/// away from zero. Lossy by construction; only used behind an explicit
/// flag and never in JSON output.
pub fn decimal_string(r: &Rational, digits: usize) -> String {
    let pow10 = BigInt::from(10u32).pow(digits as u32);
    let scaled_num = r.numer().abs() * &pow10;
    let denom = r.denom().clone();
    // round(|r| * 10^k) = floor((2 * |num| * 10^k + den) / (2 * den))
    let rounded = (BigInt::from(2) * &scaled_num + &denom) / (BigInt::from(2) * &denom);
    let digits_str = rounded.to_string();
    let neg = r.numer().is_negative() && !rounded.is_zero();

    let mut body = if digits == 0 {
        digits_str
    } else if digits_str.len() <= digits {
        format!("0.{}{}", "0".repeat(digits - digits_str.len()), digits_str)
    } else {
        let split = digits_str.len() - digits;
        format!("{}.{}", &digits_str[..split], &digits_str[split..])
    };
    if neg {
        body.insert(0, '-');
    }
    body
}
