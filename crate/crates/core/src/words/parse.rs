use super::letter::{Family, LetterId};
use super::word::{SignedLetter, Word, WordError};

/// Parses the canonical word syntax: whitespace-separated tokens of the form
/// `NAME[i,j](aK)^e`, where NAME is one of `A`, `A'`, `A''`, `x`, `z`,
/// `sigma`, `t`, the bracketed index tuple and parenthesised copy tag are
/// optional per family, and `^e` is an optional integer exponent.
pub fn parse_word(input: &str) -> Result<Word, WordError> {
    let mut letters: Vec<SignedLetter> = Vec::new();
    let mut offset = 0usize;
    for raw in input.split_whitespace() {
        // Track an approximate offset for error messages.
        offset = input[offset..].find(raw).map(|p| p + offset).unwrap_or(offset);
        let (id, exp) = parse_token(raw, offset)?;
        let sign: i8 = if exp >= 0 { 1 } else { -1 };
        for _ in 0..exp.unsigned_abs() {
            letters.push(SignedLetter::new(id.clone(), sign));
        }
        offset += raw.len();
    }
    Ok(Word::from_letters(letters))
}

/// Emits the canonical syntax. Round trip: `parse_word(emit_word(w)) == w`
/// for every word, and `emit_word(parse_word(s)) == s` for canonical
/// strings (runs collapsed into powers).
pub fn emit_word(w: &Word) -> String {
    w.to_string()
}

fn parse_token(tok: &str, base: usize) -> Result<(LetterId, i64), WordError> {
    let err = |msg: &str, pos: usize| WordError::Parse { offset: base + pos, message: msg.to_string() };
    let bytes = tok.as_bytes();
    let mut pos = 0usize;

    let family = if tok.starts_with("A''") {
        pos += 3;
        Family::ADoublePrime
    } else if tok.starts_with("A'") {
        pos += 2;
        Family::APrime
    } else if tok.starts_with('A') {
        pos += 1;
        Family::A
    } else if tok.starts_with("sigma") {
        pos += 5;
        Family::Sigma
    } else if tok.starts_with('x') {
        pos += 1;
        Family::X
    } else if tok.starts_with('z') {
        pos += 1;
        Family::Z
    } else if tok.starts_with('t') {
        pos += 1;
        Family::T
    } else {
        return Err(err("unknown generator name", 0));
    };

    let mut indices: Vec<u32> = Vec::new();
    if pos < bytes.len() && bytes[pos] == b'[' {
        pos += 1;
        loop {
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return Err(err("expected index digit", pos));
            }
            let v: u32 = tok[start..pos].parse().map_err(|_| err("index out of range", start))?;
            indices.push(v);
            match bytes.get(pos) {
                Some(b',') => pos += 1,
                Some(b']') => {
                    pos += 1;
                    break;
                }
                _ => return Err(err("expected ',' or ']'", pos)),
            }
        }
    } else {
        return Err(err("expected '[' after generator name", pos));
    }

    let mut copy_tag = None;
    if pos < bytes.len() && bytes[pos] == b'(' {
        pos += 1;
        if bytes.get(pos) != Some(&b'a') {
            return Err(err("copy tag must look like (aK)", pos));
        }
        pos += 1;
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        if start == pos {
            return Err(err("expected copy tag digits", pos));
        }
        let v: u32 = tok[start..pos].parse().map_err(|_| err("copy tag out of range", start))?;
        copy_tag = Some(v);
        if bytes.get(pos) != Some(&b')') {
            return Err(err("expected ')'", pos));
        }
        pos += 1;
    }

    let mut exp: i64 = 1;
    if pos < bytes.len() && bytes[pos] == b'^' {
        pos += 1;
        let start = pos;
        if pos < bytes.len() && (bytes[pos] == b'-' || bytes[pos] == b'+') {
            pos += 1;
        }
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        exp = tok[start..pos].parse().map_err(|_| err("bad exponent", start))?;
    }
    if pos != bytes.len() {
        return Err(err("trailing characters in token", pos));
    }

    // Validate index shape through the checked constructor, but surface a
    // parse error instead of a panic.
    let valid = std::panic::catch_unwind(|| LetterId::new(family, indices.clone(), copy_tag));
    match valid {
        Ok(id) => Ok((id, exp)),
        Err(_) => Err(err("invalid indices for this generator family", 0)),
    }
}
