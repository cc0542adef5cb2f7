//! Lusztig data: non-negative integer tuples indexed by the positive roots
//! through a convex order, together with the piecewise-linear transition maps
//! induced by braid moves.
//!
//! A 2-term move swaps the two counts. A 3-term move applies the tropical
//! max/min substitution of the sl3 case. A 4-term move applies the B2
//! transition, implemented twice over: once as closed-form min/max formulas
//! (the runtime default) and once by literal cancellation in a string of
//! large and small brackets (kept as a cross-check oracle).

use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::str::FromStr;

use crate::rootsys::{Node, Root, RootSystem, TypeLetter, TypeRank};
use crate::weyl::{self, BraidMove, BraidPath, ConvexOrder, MoveKind, ReducedWord};
use crate::Error;

/// A convex order together with one count per positive root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LusztigDatum {
    pub order: ConvexOrder,
    pub counts: Vec<u64>,
}

impl LusztigDatum {
    pub fn new(order: ConvexOrder, counts: Vec<u64>) -> Result<Self, Error> {
        if counts.len() != order.len() {
            return Err(Error::CountsLength {
                len: counts.len(),
                expected: order.len(),
            });
        }
        Ok(LusztigDatum { order, counts })
    }

    pub fn zero(order: ConvexOrder) -> Self {
        let counts = vec![0; order.len()];
        LusztigDatum { order, counts }
    }

    pub fn count_of(&self, beta: &Root) -> Option<u64> {
        self.order.position(beta).map(|k| self.counts[k])
    }

    /// Total number of parts of the Kostant partition.
    pub fn num_parts(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// An element of the root lattice recording `-sum c_beta beta`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn minus_root(&mut self, beta: &Root) {
        for (w, c) in self.0.iter_mut().zip(&beta.coeffs) {
            *w -= c;
        }
    }

    /// `<alpha_i^vee, wt>`.
    pub fn pairing(&self, rs: &RootSystem, i: Node) -> i64 {
        (1..=rs.rank()).map(|j| rs.a(i, j) * self.0[j - 1]).sum()
    }
}

/// `wt(c) = -sum c_beta beta`.
pub fn weight(d: &LusztigDatum) -> Weight {
    let rank = d.order.roots.first().map_or(0, Root::rank);
    let mut wt = Weight::zero(rank);
    for (root, &c) in d.order.roots.iter().zip(&d.counts) {
        for (w, p) in wt.0.iter_mut().zip(&root.coeffs) {
            *w -= (c as i64) * p;
        }
    }
    wt
}

/// Positional sl3 transition on a window `(beta, beta+gamma, gamma)`; an
/// involution.
pub fn sl3_map(x: u64, y: u64, z: u64) -> (u64, u64, u64) {
    let (x, y, z) = (x as i64, y as i64, z as i64);
    let a = y.max(z + y - x);
    let b = x.min(z);
    let c = y.max(x + y - z);
    (a as u64, b as u64, c as u64)
}

/// Root-indexed B2 transition with `alpha_1` the long root: input and output
/// are `(c_{a1}, c_{a1+a2}, c_{a1+2a2}, c_{a2})`. An involution.
fn b2_pi(c: [u64; 4]) -> [u64; 4] {
    let [c1, c12, c122, c2] = c.map(|v| v as i64);
    let pi1 = (c1 + c12).min(c1 + c2).min(c122 + c2);
    let pi2 = (2 * c1 + c12).min(2 * c1 + c2).min(2 * c122 + c2);
    let d1 = c1 + c12 + c122 - pi1;
    let d12 = 2 * pi1 - pi2;
    let d122 = pi2 - pi1;
    let d2 = c12 + 2 * c122 + c2 - pi2;
    debug_assert!(d1 >= 0 && d12 >= 0 && d122 >= 0 && d2 >= 0);
    [d1 as u64, d12 as u64, d122 as u64, d2 as u64]
}

/// Positional B2 transition on a 4-term window: `long_first` says whether the
/// window reads `(l, l+s, l+2s, s)` or `(s, 2s+l, s+l, l)`. The output is
/// aligned with the reversed window.
pub fn b2_map(window: [u64; 4], long_first: bool) -> [u64; 4] {
    b2_positional(window, long_first, b2_pi)
}

fn b2_positional(window: [u64; 4], long_first: bool, core: fn([u64; 4]) -> [u64; 4]) -> [u64; 4] {
    let [w0, w1, w2, w3] = window;
    if long_first {
        let [d1, d12, d122, d2] = core([w0, w1, w2, w3]);
        // positions after the move hold (s, l+2s, l+s, l)
        [d2, d122, d12, d1]
    } else {
        let [d1, d12, d122, d2] = core([w3, w2, w1, w0]);
        // positions after the move hold (l, l+s, l+2s, s)
        [d1, d12, d122, d2]
    }
}

/// The B2 transition computed by literal bracket cancellation, exposed as an
/// independent oracle for [`b2_map`].
pub fn bracket_transition_b2(window: [u64; 4], long_first: bool) -> [u64; 4] {
    b2_positional(window, long_first, b2_bracket_core)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok {
    L,
    R,
    BigL,
    BigR,
}

/// Root-indexed bracket cancellation for B2 with `alpha_1` long. The string
/// reads, left to right,
/// `)^(c12)  BIG(^(c1)  BIG)^(c122)  (^(c12)  )^(c2)  BIG(^(c122)`;
/// small pairs and big pairs cancel innermost-first, then a remaining
/// `BIG(` may cancel one or two remaining `)`, maximizing the total number
/// of canceled brackets.
fn b2_bracket_core(c: [u64; 4]) -> [u64; 4] {
    let [c1, c12, c122, c2] = c.map(|v| v as usize);
    let mut toks: Vec<Tok> = Vec::with_capacity(2 * (c1 + c122 + c12) + c2);
    toks.extend(std::iter::repeat(Tok::R).take(c12));
    toks.extend(std::iter::repeat(Tok::BigL).take(c1));
    toks.extend(std::iter::repeat(Tok::BigR).take(c122));
    toks.extend(std::iter::repeat(Tok::L).take(c12));
    toks.extend(std::iter::repeat(Tok::R).take(c2));
    toks.extend(std::iter::repeat(Tok::BigL).take(c122));

    let mut matched = vec![false; toks.len()];
    let mut small_pairs = 0u64;
    let mut big_pairs = 0u64;
    let mut stack = Vec::new();
    for (k, &t) in toks.iter().enumerate() {
        match t {
            Tok::L => stack.push(k),
            Tok::R => {
                if let Some(j) = stack.pop() {
                    matched[j] = true;
                    matched[k] = true;
                    small_pairs += 1;
                }
            }
            _ => {}
        }
    }
    stack.clear();
    for (k, &t) in toks.iter().enumerate() {
        match t {
            Tok::BigL => stack.push(k),
            Tok::BigR => {
                if let Some(j) = stack.pop() {
                    matched[j] = true;
                    matched[k] = true;
                    big_pairs += 1;
                }
            }
            _ => {}
        }
    }
    // Remaining big lefts versus remaining small rights. A big left may eat
    // one or two rights to its right; maximize the number of brackets
    // canceled in total.
    let last_r = toks
        .iter()
        .enumerate()
        .rev()
        .find(|&(k, &t)| t == Tok::R && !matched[k])
        .map(|(k, _)| k);
    let bigs = match last_r {
        Some(last) => toks
            .iter()
            .enumerate()
            .filter(|&(k, &t)| t == Tok::BigL && !matched[k] && k < last)
            .count() as u64,
        None => 0,
    };
    let first_big = toks
        .iter()
        .enumerate()
        .find(|&(k, &t)| t == Tok::BigL && !matched[k])
        .map(|(k, _)| k);
    let rights = match first_big {
        Some(first) => toks
            .iter()
            .enumerate()
            .filter(|&(k, &t)| t == Tok::R && !matched[k] && k > first)
            .count() as u64,
        None => 0,
    };
    // In this layout the eligible big lefts all precede the eligible rights,
    // so only the two totals matter.
    let (two_eaters, one_eaters) = if rights >= 2 * bigs {
        (bigs, 0)
    } else if rights >= bigs {
        (rights - bigs, 2 * bigs - rights)
    } else {
        (0, rights)
    };

    let count_unmatched = |t: Tok| {
        toks.iter()
            .zip(&matched)
            .filter(|&(&u, &m)| u == t && !m)
            .count() as u64
    };
    let unc_l = count_unmatched(Tok::L);
    let unc_big_l = count_unmatched(Tok::BigL) - two_eaters - one_eaters;
    let unc_r = count_unmatched(Tok::R) - 2 * two_eaters - one_eaters;
    let unc_big_r = count_unmatched(Tok::BigR);

    let d1 = unc_l + unc_big_l;
    let d12 = small_pairs + one_eaters;
    let d122 = big_pairs + two_eaters;
    let d2 = unc_r + 2 * unc_big_r;
    [d1, d12, d122, d2]
}

fn transform_window(counts: &mut [u64], pos: usize, kind: MoveKind) {
    match kind {
        MoveKind::Swap => counts.swap(pos, pos + 1),
        MoveKind::Sl3 => {
            let (a, b, c) = sl3_map(counts[pos], counts[pos + 1], counts[pos + 2]);
            counts[pos] = a;
            counts[pos + 1] = b;
            counts[pos + 2] = c;
        }
        MoveKind::B2 { long_first } => {
            let w = [
                counts[pos],
                counts[pos + 1],
                counts[pos + 2],
                counts[pos + 3],
            ];
            counts[pos..pos + 4].copy_from_slice(&b2_map(w, long_first));
        }
    }
}

/// Applies one braid move to a datum: the order changes by the move and the
/// window counts change by the matching rank-2 transition.
pub fn transition_move(
    rs: &RootSystem,
    d: &LusztigDatum,
    mv: BraidMove,
) -> Result<LusztigDatum, Error> {
    let kind = weyl::move_kind(rs, &d.order, mv).ok_or(Error::IllegalMove { pos: mv.pos })?;
    let order = weyl::apply_move(rs, &d.order, mv)?;
    let mut counts = d.counts.clone();
    transform_window(&mut counts, mv.pos, kind);
    Ok(LusztigDatum { order, counts })
}

/// Folds [`transition_move`] over a braid path; this is the transition map
/// between the data parametrizations of the path's two words.
pub fn transition_path(
    rs: &RootSystem,
    d: &LusztigDatum,
    path: &BraidPath,
) -> Result<LusztigDatum, Error> {
    if path.source != d.order.word {
        return Err(Error::PathMismatch);
    }
    let mut cur = d.clone();
    for &mv in &path.moves {
        cur = transition_move(rs, &cur, mv)?;
    }
    Ok(cur)
}

/// A braid path compiled against its source order: each step carries the
/// window classification, so transporting counts is pure integer work.
#[derive(Debug, Clone)]
pub struct CompiledPath {
    pub source: ReducedWord,
    pub target: ReducedWord,
    steps: Vec<(usize, MoveKind)>,
}

impl CompiledPath {
    pub fn compile(rs: &RootSystem, path: &BraidPath) -> Result<Self, Error> {
        let mut order = weyl::convex_order(rs, &path.source)?;
        let mut steps = Vec::with_capacity(path.moves.len());
        for &mv in &path.moves {
            let kind =
                weyl::move_kind(rs, &order, mv).ok_or(Error::IllegalMove { pos: mv.pos })?;
            steps.push((mv.pos, kind));
            order = weyl::apply_move(rs, &order, mv)?;
        }
        debug_assert_eq!(order.word, path.target);
        Ok(CompiledPath {
            source: path.source.clone(),
            target: path.target.clone(),
            steps,
        })
    }

    /// Transports counts from the source parametrization to the target one.
    pub fn transport(&self, counts: &mut [u64]) {
        for &(pos, kind) in &self.steps {
            transform_window(counts, pos, kind);
        }
    }

    /// Transports counts from the target parametrization back to the source.
    /// Every braid move is an involution at its position, with the B2 window
    /// orientation flipped on the way back.
    pub fn transport_back(&self, counts: &mut [u64]) {
        for &(pos, kind) in self.steps.iter().rev() {
            let kind = match kind {
                MoveKind::B2 { long_first } => MoveKind::B2 {
                    long_first: !long_first,
                },
                other => other,
            };
            transform_window(counts, pos, kind);
        }
    }
}

/// On-disk form of a datum: `{"type": "C", "rank": 3, "word": [...], "counts": [...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DatumFile {
    #[serde(rename = "type")]
    pub letter: String,
    pub rank: usize,
    pub word: Vec<Node>,
    pub counts: Vec<u64>,
}

impl DatumFile {
    pub fn new(tr: TypeRank, d: &LusztigDatum) -> Self {
        DatumFile {
            letter: tr.letter.to_string(),
            rank: tr.rank,
            word: d.order.word.letters.clone(),
            counts: d.counts.clone(),
        }
    }

    pub fn type_rank(&self) -> Result<TypeRank, Error> {
        let letter = TypeLetter::from_str(&self.letter)?;
        TypeRank::new(letter, self.rank)
    }

    /// Validates the word and counts against a freshly built root system.
    pub fn into_datum(self) -> Result<(RootSystem, LusztigDatum), Error> {
        let tr = self.type_rank()?;
        let rs = RootSystem::new(tr);
        let order = weyl::convex_order(&rs, &ReducedWord::new(self.word))?;
        let datum = LusztigDatum::new(order, self.counts)?;
        Ok((rs, datum))
    }
}

/// Kostant partition rendering: one line per root with nonzero multiplicity,
/// in the datum's convex order, e.g. `12234 x3`.
pub fn kostant_lines(d: &LusztigDatum) -> String {
    let mut out = String::new();
    for (root, &c) in d.order.roots.iter().zip(&d.counts) {
        if c > 0 {
            writeln!(out, "{} x{}", root.digits(), c).unwrap();
        }
    }
    out
}

/// Parses the output of [`kostant_lines`] back into (root, multiplicity)
/// pairs.
pub fn parse_kostant(text: &str, rank: usize) -> Result<Vec<(Root, u64)>, Error> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let (root_str, mult_str) = line
            .split_once(" x")
            .ok_or_else(|| Error::BadRootString(line.to_string()))?;
        let root = Root::from_digits(root_str.trim(), rank)?;
        let mult = mult_str
            .trim()
            .parse::<u64>()
            .map_err(|_| Error::BadRootString(line.to_string()))?;
        out.push((root, mult));
    }
    Ok(out)
}
