use std::fmt;

use num::{BigInt, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Rational;

/// Young diagram labelling an irreducible SU(N) representation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Trailing zero parts are dropped; the rest must be weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Parses `"3,2"`; an empty string or `"0"` is the empty partition.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::InvalidArgument(format!("bad partition part '{t}'"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn rows(&self) -> usize {
        self.0.len()
    }

    pub fn boxes(&self) -> usize {
        self.0.iter().sum()
    }

    /// Comma-separated form accepted by [`Partition::parse`].
    pub fn label(&self) -> String {
        if self.0.is_empty() {
            return "0".into();
        }
        self.0.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.0.first().copied().unwrap_or(0);
        Partition((0..cols).map(|c| self.0.iter().filter(|&&r| r > c).count()).collect())
    }

    /// No column of height `n` and at most `n − 1` rows.
    pub fn is_reduced(&self, n: usize) -> bool {
        self.rows() < n
    }

    /// Strips full columns of height `n`. Diagrams with more than `n` rows
    /// do not occur in tensor powers of ℂⁿ and are rejected.
    pub fn reduce(&self, n: usize) -> Result<Partition> {
        if self.rows() > n {
            return Err(Error::NotReduced { partition: self.to_string(), n });
        }
        if self.rows() < n {
            return Ok(self.clone());
        }
        let strip = self.0[n - 1];
        Partition::new(self.0.iter().map(|r| r - strip).collect())
    }

    /// Hook length of box `(row, col)`.
    pub fn hook(&self, row: usize, col: usize) -> usize {
        let arm = self.0[row] - col - 1;
        let leg = self.0[row + 1..].iter().filter(|&&r| r > col).count();
        arm + leg + 1
    }

    pub fn hook_product(&self) -> u64 {
        let mut h = 1u64;
        for (r, &len) in self.0.iter().enumerate() {
            for c in 0..len {
                h *= self.hook(r, c) as u64;
            }
        }
        h
    }

    pub fn boxes_iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", inner.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.label())
    }
}

/// Residue of the central character: `ωI` acts by `ω^{boxes}`.
pub fn central_character(p: &Partition, n: usize) -> Result<usize> {
    Ok(p.reduce(n)?.boxes() % n)
}

/// Hook-content formula `Π (n + c)/h`.
pub fn weyl_dim(p: &Partition, n: usize) -> Result<usize> {
    let p = p.reduce(n)?;
    let mut num = Rational::from_integer(BigInt::from(1));
    for (r, c) in p.boxes_iter() {
        let content = n as i64 + c as i64 - r as i64;
        num *= Rational::new(BigInt::from(content), BigInt::from(p.hook(r, c) as i64));
    }
    Ok(num.to_integer().to_usize().expect("dimension fits usize"))
}

/// All partitions of `k` with at most `max_rows` rows, in decreasing
/// lexicographic order.
pub fn partitions_of(k: usize, max_rows: usize) -> Vec<Partition> {
    fn go(rem: usize, cap: usize, rows_left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if rows_left == 0 {
            return;
        }
        for part in (1..=cap.min(rem)).rev() {
            cur.push(part);
            go(rem - part, part, rows_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, max_rows, &mut Vec::new(), &mut out);
    out
}

/// Reduced partitions whose central character matches the defining
/// representation (`boxes ≡ 1 mod n`), up to `max_boxes`, ordered by box
/// count and then decreasing lexicographically.
pub fn enumerate_nat_class(n: usize, max_boxes: usize) -> Vec<Partition> {
    (1..=max_boxes).filter(|k| k % n == 1 % n).flat_map(|k| partitions_of(k, n - 1)).collect()
}

/// Semistandard tableaux of shape `p` with entries in `0..n`, each flattened
/// in row-reading order.
pub fn semistandard_tableaux(p: &Partition, n: usize) -> Vec<Vec<usize>> {
    let cells: Vec<(usize, usize)> = p.boxes_iter().collect();
    let offsets: Vec<usize> =
        p.0.iter()
            .scan(0, |acc, &r| {
                let o = *acc;
                *acc += r;
                Some(o)
            })
            .collect();
    let mut out = Vec::new();
    let mut fill = vec![0usize; cells.len()];
    fn go(
        idx: usize,
        cells: &[(usize, usize)],
        offsets: &[usize],
        n: usize,
        fill: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if idx == cells.len() {
            out.push(fill.clone());
            return;
        }
        let (r, c) = cells[idx];
        let mut lo = if c > 0 { fill[idx - 1] } else { 0 };
        if r > 0 {
            lo = lo.max(fill[offsets[r - 1] + c] + 1);
        }
        for v in lo..n {
            fill[idx] = v;
            go(idx + 1, cells, offsets, n, fill, out);
        }
    }
    go(0, &cells, &offsets, n, &mut fill, &mut out);
    out
}

/// Number of occurrences of each letter `0..n`.
pub fn content(word: &[usize], n: usize) -> Vec<usize> {
    let mut c = vec![0; n];
    for &w in word {
        c[w] += 1;
    }
    c
}
