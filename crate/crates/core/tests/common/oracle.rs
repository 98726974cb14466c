//! Table-driven reference verbalizer for Vietnamese cardinals.
//!
//! Works on the decimal string of the number, chunked from the right into
//! three-digit groups, and reads the two-digit tail of each group out of a
//! precomputed 100-entry table. It shares no code with the library.

#![allow(dead_code)]

const DIGITS: [&str; 10] = [
    "không", "một", "hai", "ba", "bốn", "năm", "sáu", "bảy", "tám", "chín",
];

/// Labels for chunk index 0..=4 (units, 10^3, 10^6, 10^9, 10^12).
/// Index 3 ("tỷ") is handled separately because 10^12 reads "nghìn tỷ".
const CHUNK_LABELS: [&str; 5] = ["", "nghìn", "triệu", "tỷ", "nghìn"];

/// Reading of 0..=99 when nothing precedes it in the group.
fn two_digit_table() -> Vec<String> {
    let mut table = Vec::with_capacity(100);
    for v in 0..100usize {
        let tens = v / 10;
        let units = v % 10;
        let s = match (tens, units) {
            (0, u) => DIGITS[u].to_string(),
            (1, 0) => "mười".to_string(),
            (1, 5) => "mười lăm".to_string(),
            (1, u) => format!("mười {}", DIGITS[u]),
            (t, 0) => format!("{} mươi", DIGITS[t]),
            (t, 1) => format!("{} mươi mốt", DIGITS[t]),
            (t, 5) => format!("{} mươi lăm", DIGITS[t]),
            (t, u) => format!("{} mươi {}", DIGITS[t], DIGITS[u]),
        };
        table.push(s);
    }
    table
}

/// Reads one three-character chunk. `padded` means a nonzero chunk exists to
/// its left, which forces the hundreds slot to be spoken.
fn read_chunk(chunk: &str, padded: bool, table: &[String]) -> Option<String> {
    let b = chunk.as_bytes();
    let h = (b[0] - b'0') as usize;
    let tail = ((b[1] - b'0') * 10 + (b[2] - b'0')) as usize;
    if h == 0 && tail == 0 {
        return None;
    }
    let mut out = String::new();
    if h != 0 || padded {
        out.push_str(DIGITS[h]);
        out.push_str(" trăm");
        if tail == 0 {
            return Some(out);
        }
        out.push(' ');
        if tail < 10 {
            out.push_str("linh ");
        }
    }
    out.push_str(&table[tail]);
    Some(out)
}

pub fn reference_cardinal(n: u64) -> String {
    assert!(n < 1_000_000_000_000_000, "oracle covers 0..10^15");
    if n == 0 {
        return "không".to_string();
    }
    let table = two_digit_table();
    let digits = n.to_string();
    let pad_len = (3 - digits.len() % 3) % 3;
    let padded = format!("{}{}", "0".repeat(pad_len), digits);
    let chunks: Vec<&str> = (0..padded.len() / 3)
        .map(|i| &padded[i * 3..i * 3 + 3])
        .collect();
    let count = chunks.len();

    let mut words: Vec<String> = Vec::new();
    let mut seen_nonzero = false;
    for (pos, chunk) in chunks.iter().enumerate() {
        let index = count - 1 - pos;
        let reading = read_chunk(chunk, seen_nonzero, &table);
        let nonzero = reading.is_some();
        if let Some(r) = reading {
            words.push(r);
            if !CHUNK_LABELS[index].is_empty() {
                words.push(CHUNK_LABELS[index].to_string());
            }
        } else if index == 3 && seen_nonzero {
            // 10^12 block was spoken, so the billions label still applies.
            words.push("tỷ".to_string());
        }
        seen_nonzero |= nonzero;
    }
    words.join(" ")
}

/// Fraction reading: cardinal for one or two digits without a leading zero,
/// otherwise one word per digit.
pub fn reference_fraction(digits: &str) -> String {
    if digits.len() <= 2 && !digits.starts_with('0') {
        reference_cardinal(digits.parse().unwrap())
    } else {
        digits
            .bytes()
            .map(|b| DIGITS[(b - b'0') as usize])
            .collect::<Vec<_>>()
            .join(" ")
    }
}

pub fn reference_decimal(integer: u64, fraction: &str) -> String {
    format!("{} phẩy {}", reference_cardinal(integer), reference_fraction(fraction))
}

/// NFD, drop combining marks, map đ/Đ to d/D, lowercase.
pub fn fold(text: &str) -> String {
    use unicode_normalization::char::is_combining_mark;
    use unicode_normalization::UnicodeNormalization;
    text.nfd()
        .filter(|c| !is_combining_mark(*c))
        .map(|c| match c {
            'đ' => 'd',
            'Đ' => 'D',
            c => c,
        })
        .collect::<String>()
        .to_lowercase()
}
