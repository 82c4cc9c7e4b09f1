//! Tower specifications: which doubling is applied at each level and with
//! which parameter, plus the multi-index bookkeeping for the diagonal norm
//! form they induce.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::rational::{scan_rational, Rational};

/// The two doubling constructions a level can apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DoublingKind {
    CayleyDickson,
    ConwaySmith,
}

impl DoublingKind {
    pub fn token(self) -> &'static str {
        match self {
            DoublingKind::CayleyDickson => "cd",
            DoublingKind::ConwaySmith => "cs",
        }
    }
}

/// One doubling level: the construction and its parameter D.
///
/// Conway-Smith levels require D < 0. The construction divides by norms of
/// lower-level elements, and over the rationals a negative D at every level is
/// what keeps those norms away from zero. Cayley-Dickson levels accept any D,
/// so degenerate norm forms can be exercised deliberately.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LevelSpec {
    kind: DoublingKind,
    d: Rational,
}

impl LevelSpec {
    pub fn new(kind: DoublingKind, d: Rational) -> Result<LevelSpec, Error> {
        if kind == DoublingKind::ConwaySmith && !d.is_negative() {
            return Err(Error::InvalidCsParameter { d });
        }
        Ok(LevelSpec { kind, d })
    }

    pub fn kind(&self) -> DoublingKind {
        self.kind
    }

    /// The doubling parameter D of this level.
    pub fn d(&self) -> &Rational {
        &self.d
    }

    /// C = -D, the coefficient this level contributes to the norm form.
    pub fn c(&self) -> Rational {
        -&self.d
    }
}

impl fmt::Display for LevelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.kind.token(), self.d)
    }
}

/// An ordered list of doubling levels. Level 1 is applied first (innermost),
/// so an element of an n-level tower is a nested pair whose top split
/// corresponds to the last level in the list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerSpec {
    levels: Vec<LevelSpec>,
}

impl TowerSpec {
    pub fn new(levels: Vec<LevelSpec>) -> TowerSpec {
        TowerSpec { levels }
    }

    /// The zero-level tower: the ground field itself.
    pub fn empty() -> TowerSpec {
        TowerSpec { levels: Vec::new() }
    }

    /// Parses the grammar `tower := level ("," level)*` with
    /// `level := ("cd"|"cs") ":" rational`. Whitespace is forbidden.
    pub fn parse(text: &str) -> Result<TowerSpec, Error> {
        let bytes = text.as_bytes();
        let mut pos = 0;
        let mut levels = Vec::new();
        loop {
            let kind = if text[pos..].starts_with("cd") {
                DoublingKind::CayleyDickson
            } else if text[pos..].starts_with("cs") {
                DoublingKind::ConwaySmith
            } else {
                return Err(Error::ParseError {
                    position: pos,
                    message: "expected level kind `cd` or `cs`".into(),
                });
            };
            pos += 2;
            if bytes.get(pos) != Some(&b':') {
                return Err(Error::ParseError {
                    position: pos,
                    message: "expected `:` after level kind".into(),
                });
            }
            pos += 1;
            let (d, next) = scan_rational(text, pos)?;
            pos = next;
            levels.push(LevelSpec::new(kind, d)?);
            match bytes.get(pos) {
                None => break,
                Some(&b',') => pos += 1,
                Some(_) => {
                    return Err(Error::ParseError {
                        position: pos,
                        message: "expected `,` between levels".into(),
                    });
                }
            }
        }
        Ok(TowerSpec { levels })
    }

    pub fn levels(&self) -> &[LevelSpec] {
        &self.levels
    }

    /// Number of doubling levels n.
    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    /// Dimension 2^n over the ground field.
    pub fn dim(&self) -> usize {
        1usize << self.levels.len()
    }

    /// True when every level has C = -D > 0, which makes the norm form
    /// positive definite and hence anisotropic.
    pub fn is_definite(&self) -> bool {
        self.levels.iter().all(|l| l.c().is_positive())
    }

    /// The coefficient of x_i^2 in the diagonal norm form (1-based `i`):
    /// the product of the level constants C_j = -D_j selected by the
    /// multi-index e(i).
    pub fn form_weight(&self, i: usize) -> Result<Rational, Error> {
        let idx = MultiIndex::nth(i, self.depth())?;
        let mut w = Rational::one();
        for (bit, level) in idx.bits().iter().zip(&self.levels) {
            if *bit == 1 {
                w = &w * &level.c();
            }
        }
        Ok(w)
    }

    /// All 2^n form weights, at array position i-1 for coordinate i.
    pub fn weights(&self) -> Vec<Rational> {
        let mut w = Vec::with_capacity(self.dim());
        w.push(Rational::one());
        for level in &self.levels {
            let c = level.c();
            for k in 0..w.len() {
                let next = &w[k] * &c;
                w.push(next);
            }
        }
        w
    }
}

impl fmt::Display for TowerSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for level in &self.levels {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{}", level)?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for TowerSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TowerSpec::parse(s)
    }
}

impl Serialize for TowerSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Parses a tower specification string.
pub fn parse_tower(text: &str) -> Result<TowerSpec, Error> {
    TowerSpec::parse(text)
}

/// An element e of {0,1}^n selecting which level constants enter a form
/// weight. The ordering on multi-indices puts e before f exactly when, at the
/// highest position where they differ, e has the 0; that is numeric order of
/// the value sum(e_j * 2^(j-1)), so the i-th smallest multi-index is the
/// binary expansion of i-1 with bit j-1 at position j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiIndex {
    bits: Vec<u8>,
}

impl MultiIndex {
    /// The i-th smallest multi-index of length n, 1-based: `i` in 1..=2^n.
    pub fn nth(i: usize, n: usize) -> Result<MultiIndex, Error> {
        let max = 1usize << n;
        if i == 0 || i > max {
            return Err(Error::IndexOutOfRange { index: i, max });
        }
        let bits = (0..n).map(|j| (((i - 1) >> j) & 1) as u8).collect();
        Ok(MultiIndex { bits })
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// Position in the ordering, 1-based: the inverse of [`MultiIndex::nth`].
    pub fn rank(&self) -> usize {
        self.bits
            .iter()
            .enumerate()
            .map(|(j, b)| (*b as usize) << j)
            .sum::<usize>()
            + 1
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.rank()
            .cmp(&other.rank())
            .then(self.bits.len().cmp(&other.bits.len()))
    }
}

/// The i-th smallest multi-index of length n under the norm-form ordering.
pub fn multi_index(i: usize, n: usize) -> Result<MultiIndex, Error> {
    MultiIndex::nth(i, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tower(s: &str) -> TowerSpec {
        TowerSpec::parse(s).unwrap()
    }

    #[test]
    fn parse_basic_towers() {
        let t = tower("cd:-1,cd:-1");
        assert_eq!(t.depth(), 2);
        assert_eq!(t.dim(), 4);
        assert!(t
            .levels()
            .iter()
            .all(|l| l.kind() == DoublingKind::CayleyDickson));
        assert_eq!(t.levels()[0].d(), &Rational::from_integer(-1));

        let t = tower("cs:-1,cs:-1,cs:-1,cs:-1");
        assert_eq!(t.dim(), 16);

        let t = tower("cd:-2,cs:-1/2");
        assert_eq!(t.levels()[1].c(), Rational::parse("1/2").unwrap());
        assert_eq!(t.to_string(), "cd:-2,cs:-1/2");
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(matches!(
            TowerSpec::parse("cs:2"),
            Err(Error::InvalidCsParameter { .. })
        ));
        assert!(matches!(
            TowerSpec::parse("cs:0"),
            Err(Error::InvalidCsParameter { .. })
        ));
        assert!(matches!(
            TowerSpec::parse(""),
            Err(Error::ParseError { position: 0, .. })
        ));
        assert!(matches!(
            TowerSpec::parse("cx:-1"),
            Err(Error::ParseError { position: 0, .. })
        ));
        assert!(matches!(
            TowerSpec::parse("cd-1"),
            Err(Error::ParseError { position: 2, .. })
        ));
        assert!(matches!(
            TowerSpec::parse("cd:-1, cd:-1"),
            Err(Error::ParseError { position: 6, .. })
        ));
        assert!(matches!(
            TowerSpec::parse("cd:-1,"),
            Err(Error::ParseError { position: 6, .. })
        ));
        assert!(matches!(
            TowerSpec::parse("cd:1/0"),
            Err(Error::ParseError { position: 5, .. })
        ));
    }

    #[test]
    fn display_round_trips() {
        for s in ["cd:-1", "cs:-1,cs:-2/3", "cd:0,cd:7/2,cs:-1"] {
            assert_eq!(tower(s).to_string(), s);
        }
    }

    /// Literal transcription of the ordering definition: e < f iff there is a
    /// j with e_j = 0, f_j = 1 and e_i = f_i for all i > j.
    fn defined_less(e: &[u8], f: &[u8]) -> bool {
        (0..e.len()).any(|j| e[j] == 0 && f[j] == 1 && e[j + 1..] == f[j + 1..])
    }

    #[test]
    fn multi_index_order_matches_definition() {
        for n in 0..=4usize {
            // generate {0,1}^n in an arbitrary (Gray-ish) order, then sort by
            // the definitional comparator
            let mut all: Vec<Vec<u8>> = (0..1usize << n)
                .map(|v| {
                    let g = v ^ (v >> 1);
                    (0..n).map(|j| ((g >> j) & 1) as u8).collect()
                })
                .collect();
            all.sort_by(|a, b| {
                if defined_less(a, b) {
                    std::cmp::Ordering::Less
                } else if defined_less(b, a) {
                    std::cmp::Ordering::Greater
                } else {
                    std::cmp::Ordering::Equal
                }
            });
            for (k, bits) in all.iter().enumerate() {
                let idx = MultiIndex::nth(k + 1, n).unwrap();
                assert_eq!(idx.bits(), &bits[..], "n={n} position={}", k + 1);
                assert_eq!(idx.rank(), k + 1);
            }
        }
    }

    #[test]
    fn multi_index_examples() {
        assert_eq!(MultiIndex::nth(1, 3).unwrap().bits(), &[0, 0, 0]);
        assert_eq!(MultiIndex::nth(2, 2).unwrap().bits(), &[1, 0]);
        assert_eq!(MultiIndex::nth(4, 2).unwrap().bits(), &[1, 1]);
        assert!(matches!(
            MultiIndex::nth(5, 2),
            Err(Error::IndexOutOfRange { index: 5, max: 4 })
        ));
        assert!(matches!(
            MultiIndex::nth(0, 2),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn form_weights() {
        let t = tower("cd:-1,cd:-1");
        assert_eq!(t.form_weight(1).unwrap(), Rational::one());
        assert_eq!(t.form_weight(4).unwrap(), Rational::one());

        let t = tower("cd:-2,cd:-3");
        assert_eq!(t.form_weight(1).unwrap(), Rational::one());
        assert_eq!(t.form_weight(2).unwrap(), Rational::from_integer(2));
        assert_eq!(t.form_weight(3).unwrap(), Rational::from_integer(3));
        assert_eq!(t.form_weight(4).unwrap(), Rational::from_integer(6));
        assert!(t.form_weight(5).is_err());

        // weights() agrees with form_weight at every index
        let w = t.weights();
        for i in 1..=t.dim() {
            assert_eq!(w[i - 1], t.form_weight(i).unwrap());
        }
    }

    #[test]
    fn definiteness() {
        assert!(tower("cd:-1,cs:-2").is_definite());
        assert!(!tower("cd:1").is_definite());
        assert!(!tower("cd:0").is_definite());
        assert!(TowerSpec::empty().is_definite());
    }
}
