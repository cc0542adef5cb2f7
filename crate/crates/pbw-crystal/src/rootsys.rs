//! Exact root-system arithmetic for the classical types.
//!
//! Roots are stored as integer coefficient vectors over the simple roots,
//! with nodes numbered following Bourbaki. Everything here is plain integer
//! arithmetic; no floating point anywhere.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::Error;

/// Dynkin node index, 1-based as in the usual diagram labelings.
pub type Node = usize;

/// One of the four classical series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TypeLetter {
    A,
    B,
    C,
    D,
}

impl fmt::Display for TypeLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeLetter::A => write!(f, "A"),
            TypeLetter::B => write!(f, "B"),
            TypeLetter::C => write!(f, "C"),
            TypeLetter::D => write!(f, "D"),
        }
    }
}

impl std::str::FromStr for TypeLetter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "A" | "a" => Ok(TypeLetter::A),
            "B" | "b" => Ok(TypeLetter::B),
            "C" | "c" => Ok(TypeLetter::C),
            "D" | "d" => Ok(TypeLetter::D),
            _ => Err(Error::UnknownType(s.to_string())),
        }
    }
}

/// A classical type together with its rank, e.g. `C3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TypeRank {
    pub letter: TypeLetter,
    pub rank: usize,
}

impl TypeRank {
    /// Checks the rank bounds (A: n >= 1, B/C: n >= 2, D: n >= 3).
    pub fn new(letter: TypeLetter, rank: usize) -> Result<Self, Error> {
        let min = match letter {
            TypeLetter::A => 1,
            TypeLetter::B | TypeLetter::C => 2,
            TypeLetter::D => 3,
        };
        if rank < min {
            return Err(Error::InvalidRank { letter, rank });
        }
        Ok(TypeRank { letter, rank })
    }

    /// Number of positive roots.
    pub fn num_positive_roots(&self) -> usize {
        let n = self.rank;
        match self.letter {
            TypeLetter::A => n * (n + 1) / 2,
            TypeLetter::B | TypeLetter::C => n * n,
            TypeLetter::D => n * (n - 1),
        }
    }
}

impl fmt::Display for TypeRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter, self.rank)
    }
}

/// An element of the root lattice: coefficients over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub coeffs: Vec<i64>,
}

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Root { coeffs }
    }

    /// The simple root `alpha_i` in rank `rank`.
    pub fn simple(i: Node, rank: usize) -> Self {
        let mut coeffs = vec![0; rank];
        coeffs[i - 1] = 1;
        Root { coeffs }
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    /// Sum of coefficients.
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// All coefficients >= 0 and at least one > 0.
    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0) && self.coeffs.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.coeffs.iter().all(|&c| c <= 0) && self.coeffs.iter().any(|&c| c < 0)
    }

    pub fn plus(&self, other: &Root) -> Root {
        Root::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn minus(&self, other: &Root) -> Root {
        Root::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scaled(&self, k: i64) -> Root {
        Root::new(self.coeffs.iter().map(|c| k * c).collect())
    }

    /// Dotted coefficient string, e.g. `1.2.1.1`.
    pub fn coeff_string(&self) -> String {
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(".")
    }

    /// Compact digit-multiset string: node `i` written `coeffs[i-1]` times,
    /// e.g. `12234` for coefficients (1,2,1,1).
    pub fn digits(&self) -> String {
        let mut s = String::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            for _ in 0..c {
                s.push_str(&(i + 1).to_string());
            }
        }
        s
    }

    /// Parses the compact digit form back into a root of the given rank.
    pub fn from_digits(s: &str, rank: usize) -> Result<Self, Error> {
        let mut coeffs = vec![0i64; rank];
        for ch in s.chars() {
            let d = ch
                .to_digit(10)
                .ok_or_else(|| Error::BadRootString(s.to_string()))? as usize;
            if d == 0 || d > rank {
                return Err(Error::BadRootString(s.to_string()));
            }
            coeffs[d - 1] += 1;
        }
        Ok(Root { coeffs })
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.digits())
    }
}

/// Cartan matrix and symmetrizers of a classical type.
///
/// Convention: `a[i-1][j-1]` is the pairing of the coroot of `alpha_i` with
/// `alpha_j`, so reflections act by `s_i(beta) = beta - <alpha_i^vee, beta> alpha_i`
/// and the symmetric form is `(alpha_i | alpha_j) = d_i a_ij` with `min d_i = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanData {
    pub tr: TypeRank,
    pub a: Vec<Vec<i64>>,
    pub d: Vec<i64>,
}

/// Builds the Bourbaki Cartan matrix and symmetrizers for `tr`.
pub fn cartan_data(tr: TypeRank) -> CartanData {
    let n = tr.rank;
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        a[i][i] = 2;
    }
    // chain part
    let chain_end = match tr.letter {
        TypeLetter::A => n,
        TypeLetter::B | TypeLetter::C => n - 1,
        TypeLetter::D => n - 1,
    };
    for i in 1..chain_end {
        a[i - 1][i] = -1;
        a[i][i - 1] = -1;
    }
    let mut d = vec![1i64; n];
    match tr.letter {
        TypeLetter::A => {}
        TypeLetter::B => {
            // alpha_n short
            a[n - 2][n - 1] = -1;
            a[n - 1][n - 2] = -2;
            for di in d.iter_mut().take(n - 1) {
                *di = 2;
            }
        }
        TypeLetter::C => {
            // alpha_n long
            a[n - 2][n - 1] = -2;
            a[n - 1][n - 2] = -1;
            d[n - 1] = 2;
        }
        TypeLetter::D => {
            // nodes n-1 and n both attach to n-2
            a[n - 3][n - 2] = -1;
            a[n - 2][n - 3] = -1;
            a[n - 3][n - 1] = -1;
            a[n - 1][n - 3] = -1;
            a[n - 2][n - 1] = 0;
            a[n - 1][n - 2] = 0;
        }
    }
    CartanData { tr, a, d }
}

/// A classical root system: Cartan data plus the generated set of positive
/// roots with an index for membership tests.
#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan: CartanData,
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
}

impl RootSystem {
    pub fn new(tr: TypeRank) -> Self {
        let cartan = cartan_data(tr);
        // Closure under simple reflections, starting from the simple roots.
        let rank = tr.rank;
        let mut seen: HashMap<Root, usize> = HashMap::new();
        let mut queue: Vec<Root> = (1..=rank).map(|i| Root::simple(i, rank)).collect();
        for r in &queue {
            seen.insert(r.clone(), 0);
        }
        let mut head = 0;
        while head < queue.len() {
            let r = queue[head].clone();
            head += 1;
            for i in 1..=rank {
                let s = reflect_with(&cartan, i, &r);
                if s.is_positive() && !seen.contains_key(&s) {
                    seen.insert(s.clone(), 0);
                    queue.push(s);
                }
            }
        }
        let mut roots = queue;
        roots.sort_by_key(|r| (r.height(), r.coeffs.clone()));
        let index = roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k))
            .collect();
        let rs = RootSystem {
            cartan,
            roots,
            index,
        };
        debug_assert_eq!(rs.roots.len(), tr.num_positive_roots());
        rs
    }

    pub fn type_rank(&self) -> TypeRank {
        self.cartan.tr
    }

    pub fn rank(&self) -> usize {
        self.cartan.tr.rank
    }

    pub fn cartan(&self) -> &CartanData {
        &self.cartan
    }

    /// Cartan matrix entry `<alpha_i^vee, alpha_j>`.
    pub fn a(&self, i: Node, j: Node) -> i64 {
        self.cartan.a[i - 1][j - 1]
    }

    pub fn simple(&self, i: Node) -> Root {
        Root::simple(i, self.rank())
    }

    /// The positive roots, sorted by height then coefficients.
    pub fn positive_roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn is_positive_root(&self, r: &Root) -> bool {
        self.index.contains_key(r)
    }

    pub fn is_root(&self, r: &Root) -> bool {
        if r.is_positive() {
            self.index.contains_key(r)
        } else {
            self.index.contains_key(&r.scaled(-1))
        }
    }

    /// `s_i(beta) = beta - <alpha_i^vee, beta> alpha_i`.
    pub fn reflect(&self, i: Node, beta: &Root) -> Root {
        reflect_with(&self.cartan, i, beta)
    }

    /// `<alpha_i^vee, beta>`.
    pub fn pairing(&self, i: Node, beta: &Root) -> i64 {
        pairing_with(&self.cartan, i, beta)
    }

    /// The symmetric form `(beta | gamma)`, normalized so `min d_i = 1`.
    pub fn bilinear(&self, beta: &Root, gamma: &Root) -> i64 {
        let n = self.rank();
        let mut acc = 0i64;
        for i in 0..n {
            if beta.coeffs[i] == 0 {
                continue;
            }
            for j in 0..n {
                if gamma.coeffs[j] == 0 {
                    continue;
                }
                acc += beta.coeffs[i] * gamma.coeffs[j] * self.cartan.d[i] * self.cartan.a[i][j];
            }
        }
        acc
    }

    /// `(beta | beta)`: distinguishes root lengths in B/C.
    pub fn norm(&self, beta: &Root) -> i64 {
        self.bilinear(beta, beta)
    }
}

fn pairing_with(cartan: &CartanData, i: Node, beta: &Root) -> i64 {
    cartan.a[i - 1]
        .iter()
        .zip(&beta.coeffs)
        .map(|(aij, p)| aij * p)
        .sum()
}

fn reflect_with(cartan: &CartanData, i: Node, beta: &Root) -> Root {
    let mut coeffs = beta.coeffs.clone();
    coeffs[i - 1] -= pairing_with(cartan, i, beta);
    Root { coeffs }
}
