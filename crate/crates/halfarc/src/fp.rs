//! Finitely presented groups: words, presentations, Todd–Coxeter coset
//! enumeration (HLT with immediate coincidence processing) and the right
//! regular representation. Also the "graph of a map" isomorphism test used to
//! decide whether a generator-tuple correspondence extends to an isomorphism.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::{BigCount, PermGroup, DEFAULT_ENUM_BOUND};
use crate::perm::Permutation;

/// A word in abstract generators: a sequence of (generator index, ±1).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<(usize, i8)>,
}

impl Word {
    /// The empty word.
    pub fn identity() -> Self {
        Word::default()
    }

    /// The single-letter word `g_index`.
    pub fn gen(index: usize) -> Self {
        Word {
            letters: vec![(index, 1)],
        }
    }

    pub fn from_letters(letters: Vec<(usize, i8)>) -> Result<Self> {
        for &(_, e) in &letters {
            if e != 1 && e != -1 {
                return Err(Error::Invalid(format!("word exponent {e} not ±1")));
            }
        }
        Ok(Word { letters })
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn inverse(&self) -> Word {
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|&(g, e)| (g, -e))
            .collect();
        Word { letters }
    }

    pub fn pow(&self, k: i64) -> Word {
        let block = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(self.letters.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&block.letters);
        }
        Word { letters }
    }

    /// Largest generator index used, if any.
    pub fn max_index(&self) -> Option<usize> {
        self.letters.iter().map(|&(g, _)| g).max()
    }
}

impl fmt::Display for Word {
    /// 1-based file syntax: `g1*g3^-1`; the empty word prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, &(g, e)) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "g{}", g + 1)?;
            if e < 0 {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

/// Abstract generators and relators; every relator is asserted equal to the
/// identity (`u = v` lines are stored as `u v^-1`).
#[derive(Debug, Clone)]
pub struct Presentation {
    generator_count: usize,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generator_count: usize, relators: Vec<Word>) -> Result<Self> {
        if generator_count == 0 {
            return Err(Error::Invalid("presentation needs at least one generator".into()));
        }
        for r in &relators {
            if let Some(m) = r.max_index() {
                if m >= generator_count {
                    return Err(Error::GeneratorIndex {
                        index: m,
                        count: generator_count,
                    });
                }
            }
        }
        Ok(Presentation {
            generator_count,
            relators,
        })
    }

    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }
}

// ---------------------------------------------------------------------------
// Parsing.  Word syntax (1-based):  word := term ('*' term)* ;
// term := atom ('^' int)? ; atom := 'g' digits | '(' word ')' | '1'.
// A relator line may also be an equation  u = v,  normalized to u*v^-1.
// ---------------------------------------------------------------------------

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.pos + 1,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.bytes.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| self.err("expected an integer"))
    }

    fn atom(&mut self) -> Result<Word> {
        match self.peek() {
            Some(b'g') => {
                self.pos += 1;
                let n = self.integer()?;
                if n < 1 {
                    return Err(self.err("generator numbers are 1-based"));
                }
                Ok(Word::gen(n as usize - 1))
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Word::identity())
            }
            Some(b'(') => {
                self.pos += 1;
                let w = self.word()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(w)
            }
            _ => Err(self.err("expected 'g<n>', '1' or '('")),
        }
    }

    fn term(&mut self) -> Result<Word> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let k = self.integer()?;
            Ok(base.pow(k))
        } else {
            Ok(base)
        }
    }

    fn word(&mut self) -> Result<Word> {
        let mut w = self.term()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            w = w.concat(&self.term()?);
        }
        Ok(w)
    }
}

/// Parses one word, e.g. `(g1*g6)^2*g3^-1`.
pub fn parse_word(text: &str, line: usize) -> Result<Word> {
    let mut c = Cursor {
        bytes: text.as_bytes(),
        pos: 0,
        line,
    };
    let w = c.word()?;
    if c.peek().is_some() {
        return Err(c.err("trailing input after word"));
    }
    Ok(w)
}

/// Parses one relator line: a word, or an equation `u = v` (stored as `u*v^-1`).
pub fn parse_relator(text: &str, line: usize) -> Result<Word> {
    match text.split_once('=') {
        Some((lhs, rhs)) => {
            let u = parse_word(lhs, line)?;
            let v = parse_word(rhs, line)?;
            Ok(u.concat(&v.inverse()))
        }
        None => parse_word(text, line),
    }
}

/// Parses the presentation file format: a `gens m` header, then one relator
/// per line. `#` starts a comment; blank lines are skipped.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut generator_count = None;
    let mut relators = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if generator_count.is_none() {
            let m = line
                .strip_prefix("gens")
                .map(str::trim)
                .and_then(|s| s.parse::<usize>().ok())
                .ok_or(Error::Parse {
                    line: line_no,
                    column: 1,
                    msg: "expected header 'gens <m>'".into(),
                })?;
            generator_count = Some(m);
        } else {
            relators.push(parse_relator(line, line_no)?);
        }
    }
    let generator_count = generator_count.ok_or(Error::Parse {
        line: 1,
        column: 1,
        msg: "missing 'gens <m>' header".into(),
    })?;
    Presentation::new(generator_count, relators)
}

// ---------------------------------------------------------------------------
// Todd–Coxeter.
// ---------------------------------------------------------------------------

/// A complete, collapsed coset table: each generator acts as a permutation of
/// the cosets, with row 0 the coset of the enumerated subgroup.
pub struct CosetTable {
    coset_count: usize,
    action: Vec<Permutation>,
    over_trivial: bool,
}

impl CosetTable {
    pub fn coset_count(&self) -> usize {
        self.coset_count
    }

    /// One permutation of the cosets per generator.
    pub fn action(&self) -> &[Permutation] {
        &self.action
    }
}

const UNDEF: u32 = u32::MAX;

struct Enumerator {
    cols: usize, // 2 per generator: 2g forward, 2g+1 inverse
    table: Vec<Vec<u32>>,
    rep: Vec<u32>, // union-find over cosets; rep[i] <= i for live i
    live: usize,
    max_cosets: usize,
}

impl Enumerator {
    fn find(&mut self, mut c: u32) -> u32 {
        while self.rep[c as usize] != c {
            let up = self.rep[self.rep[c as usize] as usize];
            self.rep[c as usize] = up;
            c = up;
        }
        c
    }

    fn is_live(&mut self, c: u32) -> bool {
        self.find(c) == c
    }

    fn define(&mut self, alpha: u32, x: usize) -> Result<u32> {
        if self.live >= self.max_cosets {
            return Err(Error::CosetBound {
                max_cosets: self.max_cosets,
            });
        }
        let beta = self.table.len() as u32;
        self.table.push(vec![UNDEF; self.cols]);
        self.rep.push(beta);
        self.live += 1;
        self.table[alpha as usize][x] = beta;
        self.table[beta as usize][x ^ 1] = alpha;
        Ok(beta)
    }

    fn merge(&mut self, a: u32, b: u32, queue: &mut Vec<u32>) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.rep[hi as usize] = lo;
            self.live -= 1;
            queue.push(hi);
        }
    }

    /// Immediate coincidence processing: merges `a` and `b` and propagates
    /// through the table rows of dead cosets.
    fn coincidence(&mut self, a: u32, b: u32) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut qi = 0;
        while qi < queue.len() {
            let gamma = queue[qi];
            qi += 1;
            for x in 0..self.cols {
                let delta = self.table[gamma as usize][x];
                if delta == UNDEF {
                    continue;
                }
                self.table[delta as usize][x ^ 1] = UNDEF;
                let mu = self.find(gamma);
                let nu = self.find(delta);
                let mu_x = self.table[mu as usize][x];
                let nu_xi = self.table[nu as usize][x ^ 1];
                if mu_x != UNDEF {
                    self.merge(nu, mu_x, &mut queue);
                } else if nu_xi != UNDEF {
                    self.merge(mu, nu_xi, &mut queue);
                } else {
                    self.table[mu as usize][x] = nu;
                    self.table[nu as usize][x ^ 1] = mu;
                }
            }
        }
    }

    /// Holt's SCAN_AND_FILL of `word` at coset `alpha`, defining cosets for
    /// holes and recording coincidences.
    fn scan_and_fill(&mut self, alpha: u32, word: &[usize]) -> Result<()> {
        let alpha = self.find(alpha);
        loop {
            // forward scan
            let mut f = alpha;
            let mut i = 0;
            while i < word.len() && self.table[f as usize][word[i]] != UNDEF {
                f = self.table[f as usize][word[i]];
                i += 1;
            }
            if i == word.len() {
                if f != alpha {
                    self.coincidence(f, alpha);
                }
                return Ok(());
            }
            // backward scan
            let mut b = alpha;
            let mut j = word.len();
            while j > i && self.table[b as usize][word[j - 1] ^ 1] != UNDEF {
                b = self.table[b as usize][word[j - 1] ^ 1];
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i + 1 {
                // deduction closes the scan
                self.table[f as usize][word[i]] = b;
                self.table[b as usize][word[i] ^ 1] = f;
                return Ok(());
            }
            self.define(f, word[i])?;
        }
    }
}

fn word_letters(w: &Word) -> Vec<usize> {
    w.letters()
        .iter()
        .map(|&(g, e)| 2 * g + usize::from(e < 0))
        .collect()
}

/// HLT coset enumeration of `p` over the subgroup generated by
/// `subgroup_words`. Definition order is deterministic: lowest live coset
/// first, relators in order, remaining holes by lowest generator.
pub fn todd_coxeter(
    p: &Presentation,
    subgroup_words: &[Word],
    max_cosets: usize,
) -> Result<CosetTable> {
    if max_cosets < 1 {
        return Err(Error::Invalid("max_cosets must be at least 1".into()));
    }
    for w in subgroup_words {
        if let Some(m) = w.max_index() {
            if m >= p.generator_count() {
                return Err(Error::GeneratorIndex {
                    index: m,
                    count: p.generator_count(),
                });
            }
        }
    }
    let cols = 2 * p.generator_count();
    let mut e = Enumerator {
        cols,
        table: vec![vec![UNDEF; cols]],
        rep: vec![0],
        live: 1,
        max_cosets,
    };
    let relators: Vec<Vec<usize>> = p.relators().iter().map(word_letters).collect();
    for w in subgroup_words {
        e.scan_and_fill(0, &word_letters(w))?;
    }
    let mut alpha: u32 = 0;
    while (alpha as usize) < e.table.len() {
        if e.is_live(alpha) {
            for r in &relators {
                e.scan_and_fill(alpha, r)?;
                if !e.is_live(alpha) {
                    break;
                }
            }
        }
        if e.is_live(alpha) {
            for x in 0..cols {
                if e.table[alpha as usize][x] == UNDEF {
                    e.define(alpha, x)?;
                }
            }
        }
        alpha += 1;
    }
    // compact the live cosets
    let mut index = vec![UNDEF; e.table.len()];
    let mut count = 0u32;
    for c in 0..e.table.len() as u32 {
        if e.is_live(c) {
            index[c as usize] = count;
            count += 1;
        }
    }
    let coset_count = count as usize;
    let mut action = Vec::with_capacity(p.generator_count());
    for g in 0..p.generator_count() {
        let mut images = vec![0u32; coset_count];
        for c in 0..e.table.len() as u32 {
            if index[c as usize] == UNDEF {
                continue;
            }
            let img = e.table[c as usize][2 * g];
            if img == UNDEF {
                return Err(Error::Invalid("coset table incomplete after enumeration".into()));
            }
            let img = e.find(img);
            images[index[c as usize] as usize] = index[img as usize];
        }
        action.push(Permutation::from_images(images)?);
    }
    Ok(CosetTable {
        coset_count,
        action,
        over_trivial: subgroup_words.is_empty(),
    })
}

/// The right regular representation from a coset table over the trivial
/// subgroup, plus one word per point expressing that element (point 0 is the
/// identity).
pub fn regular_representation(table: &CosetTable) -> Result<(PermGroup, Vec<Word>)> {
    if !table.over_trivial {
        return Err(Error::NotRegularTable);
    }
    let n = table.coset_count;
    let mut labels: Vec<Option<Word>> = vec![None; n];
    labels[0] = Some(Word::identity());
    let mut queue = vec![0u32];
    let mut head = 0;
    while head < queue.len() {
        let c = queue[head];
        head += 1;
        for (g, perm) in table.action.iter().enumerate() {
            let img = perm.apply(c);
            if labels[img as usize].is_none() {
                let w = labels[c as usize].as_ref().unwrap().concat(&Word::gen(g));
                labels[img as usize] = Some(w);
                queue.push(img);
            }
        }
    }
    let labels: Vec<Word> = labels
        .into_iter()
        .collect::<Option<_>>()
        .ok_or_else(|| Error::Invalid("generator actions are not transitive on cosets".into()))?;
    let group = PermGroup::from_generators(n, &table.action)?;
    if *group.order() != BigCount::from(n) {
        return Err(Error::Invalid(
            "generator actions do not act regularly on the cosets".into(),
        ));
    }
    Ok((group, labels))
}

/// Product of the images along `w`; `degree` fixes the degree for the empty
/// word.
pub fn evaluate_word(w: &Word, images: &[Permutation], degree: usize) -> Result<Permutation> {
    let mut acc = Permutation::identity(degree);
    for &(g, e) in w.letters() {
        let img = images.get(g).ok_or(Error::GeneratorIndex {
            index: g,
            count: images.len(),
        })?;
        if img.degree() != degree {
            return Err(Error::DegreeMismatch(degree, img.degree()));
        }
        acc = if e < 0 {
            acc.compose_unchecked(&img.inverse())
        } else {
            acc.compose_unchecked(img)
        };
    }
    Ok(acc)
}

/// True iff mapping the presentation's generators to `images` kills every
/// relator, i.e. the map extends to a homomorphism.
pub fn verify_homomorphism(p: &Presentation, images: &[Permutation]) -> Result<bool> {
    if images.len() != p.generator_count() {
        return Err(Error::ArityMismatch {
            got: images.len(),
            want: p.generator_count(),
        });
    }
    let degree = images.first().map(|p| p.degree()).unwrap_or(0);
    for r in p.relators() {
        if !evaluate_word(r, images, degree)?.is_identity() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Decides whether `tuple1[i] -> tuple2[i]` extends to an isomorphism of `g1`
/// onto `g2`, via the graph-of-map trick: pair the tuples inside the direct
/// product acting on the disjoint union of the two domains (second domain
/// offset by the first degree) and compare orders. `tuple1` must generate
/// `g1`.
pub fn extends_to_isomorphism(
    g1: &PermGroup,
    tuple1: &[Permutation],
    g2: &PermGroup,
    tuple2: &[Permutation],
) -> Result<bool> {
    if tuple1.len() != tuple2.len() {
        return Err(Error::ArityMismatch {
            got: tuple2.len(),
            want: tuple1.len(),
        });
    }
    match (g1.order_u64(), g2.order_u64()) {
        (Some(a), Some(b)) if a <= DEFAULT_ENUM_BOUND && b <= DEFAULT_ENUM_BOUND => {
            if a != b {
                return Ok(false);
            }
        }
        _ => {
            return Err(Error::EnumerationBound {
                bound: DEFAULT_ENUM_BOUND,
            })
        }
    }
    let span1 = PermGroup::from_generators(g1.degree(), tuple1)?;
    if span1.order() != g1.order() {
        return Err(Error::Invalid("tuple1 does not generate g1".into()));
    }
    // an isomorphism onto g2 must be surjective, so tuple2 has to generate g2
    let span2 = PermGroup::from_generators(g2.degree(), tuple2)?;
    if span2.order() != g2.order() {
        return Ok(false);
    }
    let (d1, d2) = (g1.degree(), g2.degree());
    let mut paired = Vec::with_capacity(tuple1.len());
    for (a, b) in tuple1.iter().zip(tuple2) {
        if a.degree() != d1 {
            return Err(Error::DegreeMismatch(d1, a.degree()));
        }
        if b.degree() != d2 {
            return Err(Error::DegreeMismatch(d2, b.degree()));
        }
        let mut images: Vec<u32> = a.images().to_vec();
        images.extend(b.images().iter().map(|&v| v + d1 as u32));
        paired.push(Permutation::from_images(images)?);
    }
    let graph = PermGroup::from_generators(d1 + d2, &paired)?;
    Ok(graph.order() == g1.order())
}
