//! Permutations of `{0, …, n-1}` stored as image arrays.
//!
//! The composition convention is fixed globally: `compose(p, q)` applies `p`
//! first and then `q`, so `compose(p, q).apply(i) == q.apply(p.apply(i))`.
//! This matches right-action notation: the product `pq` acts as
//! `i^(pq) = (i^p)^q`, conjugation is written `t^-1 * g * t`, and right cosets
//! `Yg` consist of the products `compose(y, g)`.

use std::fmt;

use crate::error::{Error, Result};

/// Parity of a permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// A bijection of `{0, …, n-1}`, stored as the array of images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    /// The identity permutation of the given degree.
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from an image array, rejecting non-bijections
    /// with a position-precise error.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (pos, &img) in images.iter().enumerate() {
            if (img as usize) >= n {
                return Err(Error::NotABijection {
                    position: pos,
                    msg: format!("image {img} out of range for degree {n}"),
                });
            }
            if seen[img as usize] {
                return Err(Error::NotABijection {
                    position: pos,
                    msg: format!("image {img} repeated"),
                });
            }
            seen[img as usize] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of the given degree from disjoint cycles of
    /// 0-based points.
    pub fn from_cycles(cycles: &[Vec<u32>], degree: usize) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for (pos, &pt) in cycle.iter().enumerate() {
                if pt as usize >= degree {
                    return Err(Error::PointOutOfRange {
                        point: pt as usize,
                        degree,
                    });
                }
                if moved[pt as usize] {
                    return Err(Error::NotABijection {
                        position: pos,
                        msg: format!("point {pt} appears in two cycles"),
                    });
                }
                moved[pt as usize] = true;
            }
            for i in 0..cycle.len() {
                images[cycle[i] as usize] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            inv[img as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `compose(p, q)`: apply `p` first, then `q`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose_unchecked(other))
    }

    /// Composition with equal degrees guaranteed by the caller.
    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        let images = self
            .images
            .iter()
            .map(|&x| other.images[x as usize])
            .collect();
        Permutation { images }
    }

    /// Composition into a caller-supplied buffer; used by the hot BSGS loops.
    pub(crate) fn compose_into(&self, other: &Self, out: &mut Vec<u32>) {
        out.clear();
        out.extend(self.images.iter().map(|&x| other.images[x as usize]));
    }

    /// The conjugate `t^-1 * self * t`.
    pub fn conjugate_by(&self, t: &Self) -> Result<Self> {
        t.inverse().compose(self)?.compose(t)
    }

    /// Cycle decomposition, listing only cycles of length at least 2, each
    /// starting from its least point, sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start as u32 {
                continue;
            }
            let mut cycle = Vec::new();
            let mut pt = start as u32;
            while !seen[pt as usize] {
                seen[pt as usize] = true;
                cycle.push(pt);
                pt = self.images[pt as usize];
            }
            out.push(cycle);
        }
        out
    }

    /// Parity from the cycle type: each k-cycle contributes k-1 transpositions.
    pub fn parity(&self) -> Parity {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Multiplicative order of the permutation (lcm of cycle lengths).
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    /// The set of points moved by the permutation.
    pub fn support(&self) -> Vec<u32> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &x)| i as u32 != x)
            .map(|(i, _)| i as u32)
            .collect()
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation with 1-based labels; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, pt) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", pt + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{self}]")
    }
}

/// Parses the permutation text format at a known degree.
///
/// Two forms are accepted: a cycle string with 1-based labels, e.g.
/// `"(1,8,10)(2,7,4,6,9,3,5)"`, or an image list of 0-based integers, e.g.
/// `"img:[2,0,1]"`. Errors carry 1-based column positions.
pub fn parse_permutation(text: &str, degree: usize) -> Result<Permutation> {
    parse_permutation_at(text, degree, 1)
}

fn parse_err(line: usize, column: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        msg: msg.into(),
    }
}

fn parse_permutation_at(text: &str, degree: usize, line: usize) -> Result<Permutation> {
    let trimmed = text.trim();
    let offset = text.len() - text.trim_start().len();
    if let Some(rest) = trimmed.strip_prefix("img:") {
        return parse_image_list(rest, degree, line, offset + 5);
    }
    parse_cycle_string(trimmed, degree, line, offset + 1)
}

fn parse_image_list(rest: &str, degree: usize, line: usize, col0: usize) -> Result<Permutation> {
    let rest = rest.trim();
    let inner = rest
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| parse_err(line, col0, "expected img:[...]"))?;
    let mut images = Vec::new();
    if !inner.trim().is_empty() {
        for (i, tok) in inner.split(',').enumerate() {
            let v: u32 = tok.trim().parse().map_err(|_| {
                parse_err(line, col0 + 1, format!("bad image entry {:?} at index {i}", tok.trim()))
            })?;
            images.push(v);
        }
    }
    if images.len() != degree {
        return Err(parse_err(
            line,
            col0,
            format!("image list has length {}, expected degree {degree}", images.len()),
        ));
    }
    Permutation::from_images(images).map_err(|e| parse_err(line, col0, e.to_string()))
}

fn parse_cycle_string(s: &str, degree: usize, line: usize, col0: usize) -> Result<Permutation> {
    if s == "()" || s.is_empty() {
        return Ok(Permutation::identity(degree));
    }
    let bytes = s.as_bytes();
    let mut cycles: Vec<Vec<u32>> = Vec::new();
    let mut i = 0usize;
    while i < bytes.len() {
        let col = col0 + i;
        match bytes[i] {
            b'(' => {
                let close = s[i..]
                    .find(')')
                    .map(|j| i + j)
                    .ok_or_else(|| parse_err(line, col, "unclosed '('"))?;
                let mut cycle = Vec::new();
                let inner = &s[i + 1..close];
                if inner.trim().is_empty() {
                    return Err(parse_err(line, col, "empty cycle"));
                }
                for tok in inner.split(',') {
                    let label: u32 = tok.trim().parse().map_err(|_| {
                        parse_err(line, col, format!("bad point label {:?}", tok.trim()))
                    })?;
                    if label == 0 || label as usize > degree {
                        return Err(parse_err(
                            line,
                            col,
                            format!("label {label} out of range 1..={degree}"),
                        ));
                    }
                    cycle.push(label - 1);
                }
                cycles.push(cycle);
                i = close + 1;
            }
            b' ' | b'\t' => i += 1,
            c => {
                return Err(parse_err(
                    line,
                    col,
                    format!("unexpected character {:?}", c as char),
                ))
            }
        }
    }
    Permutation::from_cycles(&cycles, degree).map_err(|e| match e {
        Error::NotABijection { msg, .. } => parse_err(line, col0, msg),
        other => other,
    })
}

/// Parses the group file format: a line `degree n` followed by one
/// permutation per line. Blank lines and `#` comments are ignored.
pub fn parse_group_file(text: &str) -> Result<(usize, Vec<Permutation>)> {
    let mut degree: Option<usize> = None;
    let mut perms = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match degree {
            None => {
                let rest = line.strip_prefix("degree").ok_or_else(|| {
                    parse_err(line_no, 1, "expected header line \"degree n\"")
                })?;
                let n: usize = rest.trim().parse().map_err(|_| {
                    parse_err(line_no, 8, format!("bad degree {:?}", rest.trim()))
                })?;
                if n == 0 {
                    return Err(parse_err(line_no, 8, "degree must be positive"));
                }
                degree = Some(n);
            }
            Some(n) => perms.push(parse_permutation_at(raw, n, line_no)?),
        }
    }
    let degree = degree.ok_or_else(|| parse_err(1, 1, "missing \"degree n\" header"))?;
    Ok((degree, perms))
}

/// Writes the group file format parsed by [`parse_group_file`].
pub fn write_group_file(degree: usize, perms: &[Permutation]) -> String {
    let mut out = format!("degree {degree}\n");
    for p in perms {
        out.push_str(&p.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s_of_example_d8() -> Permutation {
        // (1,8,10)(2,7,4,6,9,3,5) on 10 points
        parse_permutation("(1,8,10)(2,7,4,6,9,3,5)", 10).unwrap()
    }

    #[test]
    fn identity_composes_trivially() {
        let p = s_of_example_d8();
        let id = Permutation::identity(10);
        assert_eq!(id.compose(&p).unwrap(), p);
        assert_eq!(p.compose(&id).unwrap(), p);
    }

    #[test]
    fn inverse_composes_to_identity() {
        let p = s_of_example_d8();
        assert!(p.compose(&p.inverse()).unwrap().is_identity());
        assert!(p.inverse().compose(&p).unwrap().is_identity());
    }

    #[test]
    fn compose_order_is_apply_left_then_right() {
        let s = s_of_example_d8();
        // s^2 sends point "1" (0-based 0) to "10" (0-based 9): 1 -> 8 -> 10.
        let s2 = s.compose(&s).unwrap();
        assert_eq!(s2.apply(0), 9);
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let p = Permutation::identity(3);
        let q = Permutation::identity(4);
        assert!(matches!(p.compose(&q), Err(Error::DegreeMismatch(3, 4))));
    }

    #[test]
    fn parity_from_cycle_type() {
        assert_eq!(Permutation::identity(5).parity(), Parity::Even);
        let t = Permutation::from_cycles(&[vec![0, 1]], 4).unwrap();
        assert_eq!(t.parity(), Parity::Odd);
        // cycle type (3,7): 8 transpositions, even
        assert_eq!(s_of_example_d8().parity(), Parity::Even);
    }

    #[test]
    fn parity_matches_brute_force_transposition_count() {
        // Decompose into transpositions by sorting and count them.
        let p = s_of_example_d8();
        let mut imgs = p.images().to_vec();
        let mut swaps = 0usize;
        for i in 0..imgs.len() {
            while imgs[i] != i as u32 {
                let j = imgs[i] as usize;
                imgs.swap(i, j);
                swaps += 1;
            }
        }
        assert_eq!(swaps % 2 == 0, p.parity() == Parity::Even);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
        let err = parse_permutation("img:[0,0,1]", 3).unwrap_err();
        assert!(err.to_string().contains("repeated"), "{err}");
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = parse_permutation("(1,2)(3,x)", 5).unwrap_err();
        match err {
            Error::Parse { line, column, .. } => {
                assert_eq!(line, 1);
                assert_eq!(column, 6);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn display_round_trips() {
        let p = s_of_example_d8();
        assert_eq!(p.to_string(), "(1,8,10)(2,7,4,6,9,3,5)");
        let q = parse_permutation(&p.to_string(), 10).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn group_file_round_trip() {
        let text = "degree 4\n(1,2)(3,4)\nimg:[1,0,2,3]\n";
        let (n, perms) = parse_group_file(text).unwrap();
        assert_eq!(n, 4);
        assert_eq!(perms.len(), 2);
        assert_eq!(perms[0].apply(0), 1);
        let rewritten = write_group_file(n, &perms);
        let (n2, perms2) = parse_group_file(&rewritten).unwrap();
        assert_eq!((n, perms), (n2, perms2));
    }

    #[test]
    fn group_file_rejects_missing_header() {
        assert!(parse_group_file("(1,2)\n").is_err());
    }
}
