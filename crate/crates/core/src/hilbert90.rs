//! Constructive Hilbert-90 witnesses, norm-one elements from seeds, the
//! explicit coordinate parametrization of the norm-one equation, and integer
//! Pythagorean tuples.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::element::Element;
use crate::error::Error;
use crate::rational::Rational;
use crate::tower::TowerSpec;

/// Which constructive branch produced a witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessBranch {
    /// a != -1: the witness is a + 1.
    General,
    /// a = -1: the witness is the imaginary basis element e_2.
    MinusOne,
}

impl WitnessBranch {
    pub fn as_str(self) -> &'static str {
        match self {
            WitnessBranch::General => "general",
            WitnessBranch::MinusOne => "minus_one",
        }
    }
}

/// A verified Hilbert-90 witness: a nonzero b with conj(b) * a = b.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessResult {
    pub witness: Element,
    pub branch: WitnessBranch,
}

/// For a norm-one element `a`, produces a nonzero b with conj(b) * a = b:
/// b = a + 1 in general, and b = e_2 when a = -1. The defining equation is
/// re-checked by an actual multiplication before returning.
pub fn hilbert90_witness(a: &Element) -> Result<WitnessResult, Error> {
    let norm = a.norm_form();
    if !norm.is_one() {
        return Err(Error::NormNotOne { norm });
    }
    let one = Element::one(a.tower().clone());
    let (witness, branch) = if *a == one.neg() {
        (
            Element::basis(a.tower().clone(), 2)?,
            WitnessBranch::MinusOne,
        )
    } else {
        (a.add(&one)?, WitnessBranch::General)
    };
    let check = witness.conjugate().mul(a)?;
    assert_eq!(check, witness, "hilbert-90 witness failed its verification");
    Ok(WitnessResult { witness, branch })
}

/// Maps a nonzero anisotropic seed s to x = s^2 / n(s). The closed form
/// x = (2 s_1^2 - n(s))/n(s) + 2 s_1 (s - s_1)/n(s) is evaluated as well and
/// both routes are checked against each other.
pub fn norm_one_from_seed(seed: &Element) -> Result<Element, Error> {
    if seed.is_zero() {
        return Err(Error::ZeroSeed);
    }
    let n = seed.norm_form();
    if n.is_zero() {
        return Err(Error::IsotropicSeed);
    }
    let n_inv = n.invert()?;
    let x = seed.mul(seed)?.scale(&n_inv);

    let tower = seed.tower().clone();
    let s1 = seed.scalar_part().clone();
    let two_s1 = &s1 + &s1;
    let scalar_term = &(&(&two_s1 * &s1) - &n) * &n_inv;
    let imaginary = seed.sub(&Element::scalar(tower.clone(), s1))?;
    let closed = Element::scalar(tower, scalar_term)
        .add(&imaginary.scale(&(&two_s1 * &n_inv)))?;
    assert_eq!(x, closed, "the two routes of s^2/n(s) disagree");
    Ok(x)
}

/// A seed vector for the coordinate parametrization: 2^n rationals, not all
/// zero, attached to a tower.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeedVector {
    tower: Arc<TowerSpec>,
    seeds: Vec<Rational>,
}

impl SeedVector {
    pub fn new(tower: Arc<TowerSpec>, seeds: Vec<Rational>) -> Result<SeedVector, Error> {
        if seeds.len() != tower.dim() {
            return Err(Error::DimensionMismatch {
                expected: tower.dim(),
                got: seeds.len(),
            });
        }
        if seeds.iter().all(Rational::is_zero) {
            return Err(Error::AllZeroSeeds);
        }
        Ok(SeedVector { tower, seeds })
    }

    pub fn tower(&self) -> &Arc<TowerSpec> {
        &self.tower
    }

    pub fn seeds(&self) -> &[Rational] {
        &self.seeds
    }

    /// The seeds as an element of the tower.
    pub fn element(&self) -> Element {
        Element::new(self.tower.clone(), self.seeds.clone()).expect("length checked")
    }
}

/// The explicit norm-one parametrization: with N = sum of C^{e(j)} s_j^2,
/// returns x_1 = (s_1^2 - sum_{j>=2} C^{e(j)} s_j^2) / N and
/// x_i = 2 s_1 s_i / N for i >= 2. Coordinatewise equal to
/// [`norm_one_from_seed`] applied to the seed element.
pub fn param_coordinates(seed: &SeedVector) -> Result<Vec<Rational>, Error> {
    let weights = seed.tower.weights();
    let mut tail = Rational::zero();
    for (w, s) in weights.iter().zip(&seed.seeds).skip(1) {
        if !s.is_zero() {
            tail = &tail + &(w * &s.square());
        }
    }
    let s1 = &seed.seeds[0];
    let s1_sq = s1.square();
    let n = &s1_sq + &tail;
    if n.is_zero() {
        return Err(Error::IsotropicSeed);
    }
    let n_inv = n.invert()?;
    let mut coords = Vec::with_capacity(seed.seeds.len());
    coords.push(&(&s1_sq - &tail) * &n_inv);
    let two_s1 = s1 + s1;
    for s in &seed.seeds[1..] {
        coords.push(&(&two_s1 * s) * &n_inv);
    }
    Ok(coords)
}

/// From integer seeds (s_1, ..., s_m), not all zero, builds the integer tuple
/// (s_1^2 - sum_{j>=2} s_j^2, 2 s_1 s_2, ..., 2 s_1 s_m, sum_j s_j^2), whose
/// first m entries have squares summing to the square of the last. The
/// identity is verified exactly before returning.
pub fn pythagorean_tuple(seeds: &[BigInt]) -> Result<Vec<BigInt>, Error> {
    if seeds.iter().all(Zero::is_zero) {
        return Err(Error::AllZeroSeeds);
    }
    let s1 = &seeds[0];
    let tail: BigInt = seeds[1..].iter().map(|s| s * s).sum();
    let total = s1 * s1 + &tail;
    let head = s1 * s1 - &tail;

    let mut tuple = Vec::with_capacity(seeds.len() + 1);
    tuple.push(head);
    for s in &seeds[1..] {
        tuple.push(2 * s1 * s);
    }
    tuple.push(total);

    let lhs: BigInt = tuple[..tuple.len() - 1].iter().map(|x| x * x).sum();
    let rhs = &tuple[tuple.len() - 1] * &tuple[tuple.len() - 1];
    assert_eq!(lhs, rhs, "pythagorean tuple failed its defining equation");
    Ok(tuple)
}
