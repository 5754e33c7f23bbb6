//! The delta stream: the first word in full, then one line per step listing
//! the changed 1-indexed positions with their new characters, e.g. `1:1 2:1 3:1`.

use std::io::Write;

use sigma_gray::{Alphabet, Word};

pub fn encode(out: &mut dyn Write, terms: impl Iterator<Item = Word>) -> std::io::Result<()> {
    let mut prev: Option<Word> = None;
    for w in terms {
        match &prev {
            None => writeln!(out, "{w}")?,
            Some(p) => {
                let changes: Vec<String> = p
                    .chars()
                    .iter()
                    .zip(w.chars())
                    .enumerate()
                    .filter(|(_, (a, b))| a != b)
                    .map(|(i, (_, b))| format!("{}:{b}", i + 1))
                    .collect();
                writeln!(out, "{}", changes.join(" "))?;
            }
        }
        prev = Some(w);
    }
    Ok(())
}

/// Rebuilds the words from a delta stream.
pub fn decode(text: &str, alphabet: Alphabet) -> Result<Vec<Word>, String> {
    let mut lines = text.lines();
    let first = lines.next().ok_or("empty delta stream")?;
    let mut current = Word::parse(first, alphabet).map_err(|e| format!("line 1: {e}"))?;
    let mut out = vec![current.clone()];
    for (idx, line) in lines.enumerate() {
        let line_no = idx + 2;
        let mut chars = current.chars().to_vec();
        for change in line.split_whitespace() {
            let (pos, c) = change
                .split_once(':')
                .ok_or_else(|| format!("line {line_no}: malformed change {change:?}"))?;
            let pos: usize = pos
                .parse()
                .map_err(|_| format!("line {line_no}: bad position {pos:?}"))?;
            let c: u8 = c
                .parse()
                .map_err(|_| format!("line {line_no}: bad character {c:?}"))?;
            let slot = pos
                .checked_sub(1)
                .and_then(|i| chars.get_mut(i))
                .ok_or_else(|| format!("line {line_no}: position {pos} out of range"))?;
            *slot = c;
        }
        current = Word::new(alphabet, chars).map_err(|e| format!("line {line_no}: {e}"))?;
        out.push(current.clone());
    }
    Ok(out)
}
