//! Line-oriented helpers shared by the artifact file formats.

use crate::error::{Error, Result};

/// Non-blank, non-comment lines with their 1-based line numbers.
pub(crate) fn content_lines(src: &str) -> impl Iterator<Item = (usize, &str)> {
    src.lines().enumerate().filter_map(|(i, l)| {
        let t = l.trim();
        (!t.is_empty() && !t.starts_with('#')).then_some((i + 1, l))
    })
}

/// Splits `s` at `sep`, returning each piece with the number of characters
/// that precede it in `s`.
pub(crate) fn split_with_offsets(s: &str, sep: char) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start_byte = 0;
    let mut start_char = 0;
    for (chars, (b, c)) in s.char_indices().enumerate() {
        if c == sep {
            out.push((start_char, &s[start_byte..b]));
            start_byte = b + c.len_utf8();
            start_char = chars + 1;
        }
    }
    out.push((start_char, &s[start_byte..]));
    out
}

/// Parses `key=value` pairs separated by whitespace, requiring exactly the
/// listed keys after an optional leading keyword.
pub(crate) fn header_fields(line: &str, line_no: usize, keyword: Option<&str>, keys: &[&str]) -> Result<Vec<usize>> {
    let mut words = line.split_whitespace().peekable();
    if let Some(kw) = keyword {
        if words.next() != Some(kw) {
            return Err(Error::parse(line_no, 1, format!("expected header '{kw} ...'")));
        }
    }
    let mut values = vec![None; keys.len()];
    for w in words {
        let col = column_of(line, w);
        let Some((k, v)) = w.split_once('=') else {
            return Err(Error::parse(line_no, col, format!("expected key=value, found '{w}'")));
        };
        let Some(idx) = keys.iter().position(|&key| key == k) else {
            return Err(Error::parse(line_no, col, format!("unknown header key '{k}'")));
        };
        let n: usize = v
            .parse()
            .map_err(|_| Error::parse(line_no, col + k.len() + 1, format!("invalid count '{v}'")))?;
        values[idx] = Some(n);
    }
    keys.iter()
        .zip(values)
        .map(|(k, v)| v.ok_or_else(|| Error::parse(line_no, 1, format!("header is missing '{k}='"))))
        .collect()
}

fn column_of(line: &str, word: &str) -> usize {
    let byte = word.as_ptr() as usize - line.as_ptr() as usize;
    line[..byte].chars().count() + 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn offsets_count_characters() {
        let parts = split_with_offsets("a, bc,d", ',');
        assert_eq!(parts, vec![(0, "a"), (2, " bc"), (6, "d")]);
    }

    #[test]
    fn header_reports_missing_keys() {
        assert_eq!(
            header_fields("frames=3 generators=2", 1, None, &["frames", "generators"]).unwrap(),
            vec![3, 2]
        );
        assert!(header_fields("frames=3", 4, None, &["frames", "generators"]).is_err());
        assert!(header_fields("gf4 cols=x rows=1", 1, Some("gf4"), &["cols", "rows"]).is_err());
    }
}
