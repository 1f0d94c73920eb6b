//! Plain-text vectors: the length on the first line, then one value per line.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::BenchError;

/// Shortest decimal form that parses back to the same `f64` (never more
/// than 17 significant digits).
pub fn format_value(v: f64) -> String {
    let a = v.abs();
    if a == 0.0 || (1e-5..1e16).contains(&a) || !v.is_finite() {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

pub fn render_vector(v: &[f64]) -> String {
    let mut out = String::with_capacity(v.len() * 20 + 8);
    let _ = writeln!(out, "{}", v.len());
    for &x in v {
        out.push_str(&format_value(x));
        out.push('\n');
    }
    out
}

/// Parses the text form. `path` is used only in error messages.
pub fn parse_vector(text: &str, path: &Path) -> Result<Vec<f64>, BenchError> {
    let err = |line: usize, msg: String| BenchError::Parse {
        path: path.to_path_buf(),
        line,
        msg,
    };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (first, head) = lines
        .next()
        .ok_or_else(|| err(1, "empty file, expected a length".into()))?;
    let n: usize = head
        .parse()
        .map_err(|_| err(first, format!("expected a length, found '{head}'")))?;
    let mut v = Vec::with_capacity(n);
    let mut last = first;
    for (line, s) in lines {
        if v.len() == n {
            return Err(err(line, format!("extra value after the {n} declared")));
        }
        let x: f64 = s
            .parse()
            .map_err(|_| err(line, format!("'{s}' is not a number")))?;
        v.push(x);
        last = line;
    }
    if v.len() < n {
        return Err(err(
            last,
            format!("file ends after {} of {n} values", v.len()),
        ));
    }
    Ok(v)
}

pub fn read_vector(path: impl AsRef<Path>) -> Result<Vec<f64>, BenchError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| BenchError::io(path, e))?;
    parse_vector(&text, path)
}

pub fn write_vector(path: impl AsRef<Path>, v: &[f64]) -> Result<(), BenchError> {
    let path = path.as_ref();
    fs::write(path, render_vector(v)).map_err(|e| BenchError::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn ones_file() {
        assert_eq!(render_vector(&[1.0; 4]), "4\n1\n1\n1\n1\n");
    }

    #[test]
    fn write_then_read() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("v.txt");
        write_vector(&p, &[1.5, -2.25]).unwrap();
        assert_eq!(read_vector(&p).unwrap(), vec![1.5, -2.25]);
    }

    #[test]
    fn short_file_names_the_line() {
        let e = parse_vector("3\n1.0\n2.0\n", Path::new("v.txt")).unwrap_err();
        assert!(matches!(e, BenchError::Parse { line: 3, .. }), "{e}");
        assert!(e.to_string().contains("line 3"));
    }

    #[test]
    fn malformed_entries() {
        let e = parse_vector("2\n1.0\nabc\n", Path::new("v")).unwrap_err();
        assert!(matches!(e, BenchError::Parse { line: 3, .. }));
        let e = parse_vector("x\n", Path::new("v")).unwrap_err();
        assert!(matches!(e, BenchError::Parse { line: 1, .. }));
        let e = parse_vector("1\n1\n2\n", Path::new("v")).unwrap_err();
        assert!(matches!(e, BenchError::Parse { line: 3, .. }));
        assert!(parse_vector("", Path::new("v")).is_err());
        assert_eq!(
            parse_vector("0\n", Path::new("v")).unwrap(),
            Vec::<f64>::new()
        );
    }

    proptest! {
        #[test]
        fn text_round_trip_is_lossless(v in prop::collection::vec(any::<f64>().prop_filter("finite", |x| x.is_finite()), 0..40)) {
            let back = parse_vector(&render_vector(&v), Path::new("v")).unwrap();
            prop_assert_eq!(back.len(), v.len());
            for (a, b) in back.iter().zip(&v) {
                prop_assert_eq!(a.to_bits(), b.to_bits());
            }
        }
    }
}
