//! graph6 encoding (McKay's format).
//!
//! Header `N(n)`: one byte `n + 63` for `n <= 62`; `126` then three 6-bit
//! groups for `n <= 258047`; `126 126` then six groups otherwise. The body
//! lists the upper triangle column by column (`x(0,1) x(0,2) x(1,2) x(0,3)
//! ...`), packed six bits per byte, most significant first, zero padded and
//! offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

const MAX_VERTICES: u64 = (1 << 36) - 1;

pub fn encode(graph: &Graph) -> String {
    let n = graph.vertex_count();
    let mut out = Vec::new();
    encode_size(n as u64, &mut out);

    let mut group = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            group = (group << 1) | u8::from(graph.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn encode_size(n: u64, out: &mut Vec<u8>) {
    let groups = if n <= 62 {
        out.push(n as u8 + 63);
        return;
    } else if n <= 258_047 {
        out.push(126);
        3
    } else {
        out.extend([126, 126]);
        6
    };
    for i in (0..groups).rev() {
        out.push(((n >> (6 * i)) & 0x3f) as u8 + 63);
    }
}

pub fn decode(input: &[u8]) -> Result<Graph> {
    let (n, body) = decode_size(input)?;
    if n > MAX_VERTICES || n > usize::MAX as u64 {
        return Err(Error::Graph6(format!("vertex count {n} too large")));
    }
    let bits = u128::from(n) * u128::from(n.saturating_sub(1)) / 2;
    if bits.div_ceil(6) > body.len() as u128 {
        return Err(Error::Graph6(format!(
            "body has {} bytes, expected {}",
            body.len(),
            bits.div_ceil(6)
        )));
    }
    let (n, bits) = (n as usize, bits as usize);
    let needed = bits.div_ceil(6);
    if body.len() > needed {
        return Err(Error::Graph6(format!(
            "{} trailing bytes after body",
            body.len() - needed
        )));
    }
    let mut values = Vec::with_capacity(needed);
    for &byte in body {
        if !(63..=126).contains(&byte) {
            return Err(Error::Graph6(format!("byte {byte} outside the printable range")));
        }
        values.push(byte - 63);
    }
    let padding = needed * 6 - bits;
    if padding > 0 && values[needed - 1] & ((1 << padding) - 1) != 0 {
        return Err(Error::Graph6("bit set in padding".into()));
    }

    let mut k = 0;
    Ok(Graph::from_fn(n, |_, _| {
        let bit = values[k / 6] >> (5 - k % 6) & 1;
        k += 1;
        bit == 1
    }))
}

fn decode_size(input: &[u8]) -> Result<(u64, &[u8])> {
    let read = |bytes: &[u8]| -> Result<u64> {
        bytes.iter().try_fold(0u64, |acc, &b| {
            if (63..=126).contains(&b) {
                Ok((acc << 6) | u64::from(b - 63))
            } else {
                Err(Error::Graph6(format!("malformed header byte {b}")))
            }
        })
    };
    match input {
        [] => Err(Error::Graph6("empty input".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::Graph6("truncated 8-byte header".into()));
            }
            let n = read(&rest[..6])?;
            if n <= 258_047 {
                return Err(Error::Graph6(format!("non-canonical header for n={n}")));
            }
            Ok((n, &rest[6..]))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("truncated 4-byte header".into()));
            }
            let n = read(&rest[..3])?;
            if n <= 62 {
                return Err(Error::Graph6(format!("non-canonical header for n={n}")));
            }
            Ok((n, &rest[3..]))
        }
        [b, rest @ ..] if (63..126).contains(b) => Ok((u64::from(b - 63), rest)),
        [b, ..] => Err(Error::Graph6(format!("malformed header byte {b}"))),
    }
}
