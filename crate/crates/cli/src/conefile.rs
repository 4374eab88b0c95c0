//! The plain-text generator file format.
//!
//! A cone file is a header line `n m` followed by `m` rows of `n`
//! whitespace-separated rationals (`p`, `-p`, or `p/q` with `q > 0`).
//! Lines starting with `#` are comments; blank lines are ignored.
//! Command outputs use the same format, so results pipe straight back
//! in as inputs.
//!
//! Every parse error carries the 1-based line number of the offending
//! line.

use conemin_core::cone::GeneratorSet;
use conemin_core::linalg::RVector;
use conemin_core::rational::parse_rational;
use std::fmt;

/// Parse failure with the input line it happened on (0 for errors that
/// are not tied to a specific line, like a missing header).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

/// Lines that carry content: (1-based line number, trimmed text).
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Parses a cone file into a generator set.
pub fn parse_cone_file(text: &str) -> Result<GeneratorSet, ParseError> {
    let mut lines = content_lines(text);

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| ParseError::at(0, "missing header line `n m`"))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 2 {
        return Err(ParseError::at(
            header_line,
            format!("header must be `n m`, found {} token(s)", tokens.len()),
        ));
    }
    let n: usize = tokens[0].parse().map_err(|_| {
        ParseError::at(header_line, format!("invalid dimension `{}`", tokens[0]))
    })?;
    let m: usize = tokens[1].parse().map_err(|_| {
        ParseError::at(header_line, format!("invalid row count `{}`", tokens[1]))
    })?;
    if n == 0 {
        return Err(ParseError::at(header_line, "dimension must be positive"));
    }

    let mut vectors = Vec::with_capacity(m);
    for (line_no, line) in lines {
        if vectors.len() == m {
            return Err(ParseError::at(
                line_no,
                format!("unexpected extra row (header declared {} rows)", m),
            ));
        }
        vectors.push(parse_row(line_no, line, n)?);
    }
    if vectors.len() < m {
        return Err(ParseError::at(
            0,
            format!("header declared {} rows, found only {}", m, vectors.len()),
        ));
    }
    Ok(GeneratorSet::new(n, vectors))
}

/// Parses one whitespace-separated vector of exactly `n` rationals.
pub fn parse_row(line_no: usize, line: &str, n: usize) -> Result<RVector, ParseError> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    if tokens.len() != n {
        return Err(ParseError::at(
            line_no,
            format!("expected {} values, found {}", n, tokens.len()),
        ));
    }
    let mut entries = Vec::with_capacity(n);
    for tok in tokens {
        entries.push(
            parse_rational(tok).map_err(|e| ParseError::at(line_no, e.to_string()))?,
        );
    }
    Ok(RVector::new(entries))
}

/// Canonical text form of a generator set: header plus one row per
/// generator, exact rational tokens, trailing newline on every line.
pub fn format_cone_file(s: &GeneratorSet) -> String {
    let mut out = format!("{} {}\n", s.ambient_dim(), s.len());
    for v in s.vectors() {
        out.push_str(&v.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use conemin_core::rational::ratio;

    #[test]
    fn parses_with_comments_and_blank_lines() {
        let text = "# upper half plane\n\n2 3\n1 0\n\n-1 0\n# middle comment\n0 1\n";
        let s = parse_cone_file(text).unwrap();
        assert_eq!(s.ambient_dim(), 2);
        assert_eq!(s.len(), 3);
        assert_eq!(s.vector(1), &RVector::from_i64(&[-1, 0]));
    }

    #[test]
    fn parses_fractions() {
        let s = parse_cone_file("2 1\n1/2 -3/4\n").unwrap();
        assert_eq!(s.vector(0).entries()[0], ratio(1, 2));
        assert_eq!(s.vector(0).entries()[1], ratio(-3, 4));
    }

    #[test]
    fn round_trips_through_format() {
        let text = "3 2\n1 -2/3 0\n5 1/7 -1\n";
        let s = parse_cone_file(text).unwrap();
        assert_eq!(format_cone_file(&s), text);
    }

    #[test]
    fn reports_line_of_bad_token() {
        let err = parse_cone_file("2 2\n1 0\n1 1/0\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(err.message.contains("denominator is zero"), "{}", err);
    }

    #[test]
    fn reports_line_of_wrong_arity() {
        let err = parse_cone_file("2 1\n1 2 3\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.message.contains("expected 2 values, found 3"));
    }

    #[test]
    fn rejects_row_count_mismatches() {
        let err = parse_cone_file("2 1\n1 0\n0 1\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(err.message.contains("extra row"));

        let err = parse_cone_file("2 3\n1 0\n").unwrap_err();
        assert!(err.message.contains("found only 1"));
    }

    #[test]
    fn rejects_bad_headers() {
        assert!(parse_cone_file("").is_err());
        assert!(parse_cone_file("2\n").is_err());
        assert!(parse_cone_file("0 1\n").is_err());
        assert!(parse_cone_file("x 1\n").is_err());
    }

    #[test]
    fn empty_generator_list_is_fine() {
        let s = parse_cone_file("4 0\n").unwrap();
        assert!(s.is_empty());
        assert_eq!(format_cone_file(&s), "4 0\n");
    }
}
