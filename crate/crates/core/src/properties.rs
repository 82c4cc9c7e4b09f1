//! Seeded random checking and bounded counterexample search over the
//! identity catalog: every algebraic law the towers are expected to satisfy
//! (or to break) is one [`IdentityId`] with a fixed arity and evaluator.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::element::Element;
use crate::error::Error;
use crate::rational::Rational;
use crate::tower::TowerSpec;

/// splitmix64. Fully specified so runs reproduce across implementations:
/// each step does `state += 0x9E3779B97F4A7C15`, then mixes
/// `z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; z ^= z >> 27;
/// z *= 0x94D049BB133111EB; z ^= z >> 31` (wrapping arithmetic).
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// One draw, reduced to [-bound, bound] as `next_u64() % (2b+1) - b`.
    pub fn int_in(&mut self, bound: u32) -> i64 {
        let m = 2 * u64::from(bound) + 1;
        (self.next_u64() % m) as i64 - i64::from(bound)
    }

    /// Two draws: a numerator in [-bound, bound], then a denominator in
    /// [1, max(bound, 1)].
    pub fn rational(&mut self, bound: u32) -> Rational {
        let numer = self.int_in(bound);
        let denom = 1 + (self.next_u64() % u64::from(bound.max(1))) as i64;
        Rational::new(numer.into(), denom.into()).expect("denominator is positive")
    }
}

/// A random element with integer coordinates in [-coord_bound, coord_bound],
/// one [`SplitMix64::int_in`] draw per coordinate in index order.
pub fn random_element(
    tower: &Arc<TowerSpec>,
    rng: &mut SplitMix64,
    coord_bound: u32,
) -> Element {
    let coords = (0..tower.dim())
        .map(|_| Rational::from_integer(rng.int_in(coord_bound)))
        .collect();
    Element::new(tower.clone(), coords).expect("dimension matches")
}

/// The k-linear functional T: projection onto the ground field, i.e. the
/// first coordinate. Restricts to the identity on scalars.
pub fn t_project(x: &Element) -> Rational {
    x.scalar_part().clone()
}

/// The closed catalog of testable identities.
///
/// Weak-distributivity laws quantify one operand over the ground field; their
/// scalar argument slot (see [`IdentityId::scalar_slots`]) is drawn as a
/// random rational embedded as a multiple of e_1, and evaluators treat it as
/// an ordinary element, so stored counterexamples replay unchanged.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityId {
    /// a(ab) = a^2 b
    LeftAlt,
    /// conj(a)(ab) = n(a) b
    LeftAltNormForm,
    /// a(b+c) = ab + ac
    LeftDist,
    /// (a+b)c = ac + bc
    RightDist,
    /// (s+b)c = sc + bc for scalar s
    WeakRightDist,
    /// c(s+b) = cs + cb for scalar s
    WeakLeftDist,
    /// conj(ab) = conj(b) conj(a)
    Involution,
    /// n(ab) = n(a) n(b)
    NormMultiplicative,
    /// n(conj(a)) = n(a)
    NormSymmetric,
    /// conj(a^2) = conj(a)^2
    ConjRespectsSquares,
    /// n(a^2) = n(a)^2
    NormRespectsSquares,
    /// t(a) b = ab + conj(a) b
    TraceExpansion,
    /// a^2 = t(a) a - n(a) e_1
    QuadraticRelation,
    /// T(ab) = T(ba)
    TCyclic,
    /// T(conj(a)) = T(a)
    TConjInvariant,
    /// T(conj(a(bc))) = T(conj(c)(conj(b) conj(a)))
    TReversalIdentity,
    /// T(conj(a conj(b conj(c conj(d conj(e)))))) =
    /// T(conj(conj(e) conj(conj(d) conj(conj(c) conj(conj(b) a)))))
    FiveFoldIdentity,
    /// a a^{-1} = a^{-1} a = e_1 whenever n(a) != 0 (vacuous otherwise)
    TwoSidedInverse,
}

impl IdentityId {
    pub const ALL: [IdentityId; 18] = [
        IdentityId::LeftAlt,
        IdentityId::LeftAltNormForm,
        IdentityId::LeftDist,
        IdentityId::RightDist,
        IdentityId::WeakRightDist,
        IdentityId::WeakLeftDist,
        IdentityId::Involution,
        IdentityId::NormMultiplicative,
        IdentityId::NormSymmetric,
        IdentityId::ConjRespectsSquares,
        IdentityId::NormRespectsSquares,
        IdentityId::TraceExpansion,
        IdentityId::QuadraticRelation,
        IdentityId::TCyclic,
        IdentityId::TConjInvariant,
        IdentityId::TReversalIdentity,
        IdentityId::FiveFoldIdentity,
        IdentityId::TwoSidedInverse,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::LeftAlt => "LeftAlt",
            IdentityId::LeftAltNormForm => "LeftAltNormForm",
            IdentityId::LeftDist => "LeftDist",
            IdentityId::RightDist => "RightDist",
            IdentityId::WeakRightDist => "WeakRightDist",
            IdentityId::WeakLeftDist => "WeakLeftDist",
            IdentityId::Involution => "Involution",
            IdentityId::NormMultiplicative => "NormMultiplicative",
            IdentityId::NormSymmetric => "NormSymmetric",
            IdentityId::ConjRespectsSquares => "ConjRespectsSquares",
            IdentityId::NormRespectsSquares => "NormRespectsSquares",
            IdentityId::TraceExpansion => "TraceExpansion",
            IdentityId::QuadraticRelation => "QuadraticRelation",
            IdentityId::TCyclic => "T_Cyclic",
            IdentityId::TConjInvariant => "T_ConjInvariant",
            IdentityId::TReversalIdentity => "T_ReversalIdentity",
            IdentityId::FiveFoldIdentity => "FiveFoldIdentity",
            IdentityId::TwoSidedInverse => "TwoSidedInverse",
        }
    }

    /// Number of argument slots, scalar slots included.
    pub fn arity(self) -> usize {
        match self {
            IdentityId::NormSymmetric
            | IdentityId::ConjRespectsSquares
            | IdentityId::NormRespectsSquares
            | IdentityId::QuadraticRelation
            | IdentityId::TConjInvariant
            | IdentityId::TwoSidedInverse => 1,
            IdentityId::LeftAlt
            | IdentityId::LeftAltNormForm
            | IdentityId::Involution
            | IdentityId::NormMultiplicative
            | IdentityId::TraceExpansion
            | IdentityId::TCyclic => 2,
            IdentityId::LeftDist
            | IdentityId::RightDist
            | IdentityId::WeakRightDist
            | IdentityId::WeakLeftDist
            | IdentityId::TReversalIdentity => 3,
            IdentityId::FiveFoldIdentity => 5,
        }
    }

    /// Argument positions that range over the ground field.
    pub fn scalar_slots(self) -> &'static [usize] {
        match self {
            IdentityId::WeakRightDist => &[0],
            IdentityId::WeakLeftDist => &[1],
            _ => &[],
        }
    }

    /// Evaluates both sides on concrete arguments. Scalar-valued sides are
    /// embedded as scalar multiples of e_1 so the result type is uniform.
    pub fn evaluate(self, args: &[Element]) -> Result<(Element, Element), Error> {
        assert_eq!(args.len(), self.arity(), "bad arity for {}", self.name());
        let tower = args[0].tower().clone();
        let scalar = |r: Rational| Element::scalar(tower.clone(), r);
        match self {
            IdentityId::LeftAlt => {
                let (a, b) = (&args[0], &args[1]);
                Ok((a.mul(&a.mul(b)?)?, a.mul(a)?.mul(b)?))
            }
            IdentityId::LeftAltNormForm => {
                let (a, b) = (&args[0], &args[1]);
                Ok((a.conjugate().mul(&a.mul(b)?)?, b.scale(&a.norm_form())))
            }
            IdentityId::LeftDist => {
                let (a, b, c) = (&args[0], &args[1], &args[2]);
                Ok((a.mul(&b.add(c)?)?, a.mul(b)?.add(&a.mul(c)?)?))
            }
            IdentityId::RightDist | IdentityId::WeakRightDist => {
                let (a, b, c) = (&args[0], &args[1], &args[2]);
                Ok((a.add(b)?.mul(c)?, a.mul(c)?.add(&b.mul(c)?)?))
            }
            IdentityId::WeakLeftDist => {
                let (c, s, b) = (&args[0], &args[1], &args[2]);
                Ok((c.mul(&s.add(b)?)?, c.mul(s)?.add(&c.mul(b)?)?))
            }
            IdentityId::Involution => {
                let (a, b) = (&args[0], &args[1]);
                Ok((
                    a.mul(b)?.conjugate(),
                    b.conjugate().mul(&a.conjugate())?,
                ))
            }
            IdentityId::NormMultiplicative => {
                let (a, b) = (&args[0], &args[1]);
                Ok((
                    scalar(a.mul(b)?.norm_form()),
                    scalar(&a.norm_form() * &b.norm_form()),
                ))
            }
            IdentityId::NormSymmetric => {
                let a = &args[0];
                Ok((scalar(a.conjugate().norm_form()), scalar(a.norm_form())))
            }
            IdentityId::ConjRespectsSquares => {
                let a = &args[0];
                let ac = a.conjugate();
                Ok((a.mul(a)?.conjugate(), ac.mul(&ac)?))
            }
            IdentityId::NormRespectsSquares => {
                let a = &args[0];
                Ok((
                    scalar(a.mul(a)?.norm_form()),
                    scalar(a.norm_form().square()),
                ))
            }
            IdentityId::TraceExpansion => {
                let (a, b) = (&args[0], &args[1]);
                Ok((
                    b.scale(&a.trace()),
                    a.mul(b)?.add(&a.conjugate().mul(b)?)?,
                ))
            }
            IdentityId::QuadraticRelation => {
                let a = &args[0];
                let rhs = a.scale(&a.trace()).sub(&scalar(a.norm_form()))?;
                Ok((a.mul(a)?, rhs))
            }
            IdentityId::TCyclic => {
                let (a, b) = (&args[0], &args[1]);
                Ok((
                    scalar(t_project(&a.mul(b)?)),
                    scalar(t_project(&b.mul(a)?)),
                ))
            }
            IdentityId::TConjInvariant => {
                let a = &args[0];
                Ok((scalar(t_project(&a.conjugate())), scalar(t_project(a))))
            }
            IdentityId::TReversalIdentity => {
                let (a, b, c) = (&args[0], &args[1], &args[2]);
                let lhs = a.mul(&b.mul(c)?)?.conjugate();
                let rhs = c.conjugate().mul(&b.conjugate().mul(&a.conjugate())?)?;
                Ok((scalar(t_project(&lhs)), scalar(t_project(&rhs))))
            }
            IdentityId::FiveFoldIdentity => {
                let (a, b, c, d, e) = (&args[0], &args[1], &args[2], &args[3], &args[4]);
                let t = d.mul(&e.conjugate())?;
                let t = c.mul(&t.conjugate())?;
                let t = b.mul(&t.conjugate())?;
                let t = a.mul(&t.conjugate())?;
                let lhs = t.conjugate();

                let u = b.conjugate().mul(a)?;
                let u = c.conjugate().mul(&u.conjugate())?;
                let u = d.conjugate().mul(&u.conjugate())?;
                let u = e.conjugate().mul(&u.conjugate())?;
                let rhs = u.conjugate();
                Ok((scalar(t_project(&lhs)), scalar(t_project(&rhs))))
            }
            IdentityId::TwoSidedInverse => {
                let a = &args[0];
                let one = Element::one(tower.clone());
                if a.norm_form().is_zero() {
                    // no inverse to test
                    return Ok((one.clone(), one));
                }
                let inv = a.inverse()?;
                let left = a.mul(&inv)?;
                if left != one {
                    return Ok((left, one));
                }
                let right = inv.mul(a)?;
                Ok((right, one))
            }
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IdentityId::ALL
            .iter()
            .copied()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::ParseError {
                position: 0,
                message: format!("unknown identity `{s}`"),
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    AllPassed,
    CounterexampleFound,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::AllPassed => "AllPassed",
            Outcome::CounterexampleFound => "CounterexampleFound",
        }
    }
}

/// What a report was checking: one identity on one tower, or the products of
/// two same-dimension towers against each other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckKind {
    Identity(IdentityId),
    CompareTowers { other: Arc<TowerSpec> },
}

/// Outcome of a randomized check or bounded search. When a counterexample was
/// found, the witnessing arguments and both differing values are stored, and
/// re-evaluating on them reproduces the inequality exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub kind: CheckKind,
    pub tower: Arc<TowerSpec>,
    /// For random checks: the requested trial count. For searches: the number
    /// of evaluations actually performed.
    pub trials: u64,
    pub seed: u64,
    pub outcome: Outcome,
    pub counterexample: Option<Vec<Element>>,
    pub lhs: Option<Element>,
    pub rhs: Option<Element>,
}

impl CheckReport {
    fn passed(kind: CheckKind, tower: Arc<TowerSpec>, trials: u64, seed: u64) -> CheckReport {
        CheckReport {
            kind,
            tower,
            trials,
            seed,
            outcome: Outcome::AllPassed,
            counterexample: None,
            lhs: None,
            rhs: None,
        }
    }

    fn failed(
        kind: CheckKind,
        tower: Arc<TowerSpec>,
        trials: u64,
        seed: u64,
        args: Vec<Element>,
        lhs: Element,
        rhs: Element,
    ) -> CheckReport {
        CheckReport {
            kind,
            tower,
            trials,
            seed,
            outcome: Outcome::CounterexampleFound,
            counterexample: Some(args),
            lhs: Some(lhs),
            rhs: Some(rhs),
        }
    }

    /// Compact JSON with fixed key order; byte-identical for identical runs.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }

    /// Re-evaluates the stored counterexample. Returns true when it still
    /// violates the check, false when no counterexample is stored.
    pub fn counterexample_replays(&self) -> Result<bool, Error> {
        let Some(args) = &self.counterexample else {
            return Ok(false);
        };
        match &self.kind {
            CheckKind::Identity(id) => {
                let (lhs, rhs) = id.evaluate(args)?;
                Ok(lhs != rhs)
            }
            CheckKind::CompareTowers { other } => {
                let xb = Element::new(other.clone(), args[0].coords().to_vec())?;
                let yb = Element::new(other.clone(), args[1].coords().to_vec())?;
                let pa = args[0].mul(&args[1])?;
                let pb = xb.mul(&yb)?;
                Ok(pa.coords() != pb.coords())
            }
        }
    }
}

impl Serialize for CheckReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut len = 5;
        if matches!(self.kind, CheckKind::CompareTowers { .. }) {
            len += 1;
        }
        if self.counterexample.is_some() {
            len += 3;
        }
        let mut st = serializer.serialize_struct("CheckReport", len)?;
        let name = match &self.kind {
            CheckKind::Identity(id) => id.name(),
            CheckKind::CompareTowers { .. } => "CompareTowers",
        };
        st.serialize_field("identity", name)?;
        st.serialize_field("tower", self.tower.as_ref())?;
        if let CheckKind::CompareTowers { other } = &self.kind {
            st.serialize_field("other_tower", other.as_ref())?;
        }
        st.serialize_field("trials", &self.trials)?;
        st.serialize_field("seed", &self.seed)?;
        st.serialize_field("outcome", self.outcome.as_str())?;
        if let Some(ce) = &self.counterexample {
            st.serialize_field("counterexample", ce)?;
            st.serialize_field("lhs", self.lhs.as_ref().expect("failure stores lhs"))?;
            st.serialize_field("rhs", self.rhs.as_ref().expect("failure stores rhs"))?;
        }
        st.end()
    }
}

fn draw_args(
    id: IdentityId,
    tower: &Arc<TowerSpec>,
    rng: &mut SplitMix64,
    coord_bound: u32,
) -> Vec<Element> {
    (0..id.arity())
        .map(|slot| {
            if id.scalar_slots().contains(&slot) {
                Element::scalar(tower.clone(), rng.rational(coord_bound))
            } else {
                random_element(tower, rng, coord_bound)
            }
        })
        .collect()
}

/// Evaluates `id` on `trials` random argument tuples. Stops at the first
/// failure; failure is recorded in the report, not an error.
pub fn check_identity(
    id: IdentityId,
    tower: &Arc<TowerSpec>,
    trials: u64,
    seed: u64,
    coord_bound: u32,
) -> Result<CheckReport, Error> {
    let mut rng = SplitMix64::new(seed);
    for _ in 0..trials {
        let args = draw_args(id, tower, &mut rng, coord_bound);
        let (lhs, rhs) = id.evaluate(&args)?;
        if lhs != rhs {
            return Ok(CheckReport::failed(
                CheckKind::Identity(id),
                tower.clone(),
                trials,
                seed,
                args,
                lhs,
                rhs,
            ));
        }
    }
    Ok(CheckReport::passed(
        CheckKind::Identity(id),
        tower.clone(),
        trials,
        seed,
    ))
}

/// Budget for [`find_counterexample`]: a deterministic exhaustive phase over
/// structured small elements, then seeded random trials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// The exhaustive phase runs for identities of arity at most this.
    pub phase1_arity_cap: usize,
    /// Trial count for the random phase.
    pub phase2_trials: u64,
    /// Coordinate bound for the random phase.
    pub phase2_bound: u32,
}

impl Default for SearchBudget {
    fn default() -> SearchBudget {
        SearchBudget {
            phase1_arity_cap: 3,
            phase2_trials: 0,
            phase2_bound: 4,
        }
    }
}

/// +e_1, -e_1, +e_2, -e_2, ...
fn signed_basis_pool(tower: &Arc<TowerSpec>) -> Vec<Element> {
    let mut pool = Vec::with_capacity(2 * tower.dim());
    for i in 1..=tower.dim() {
        let e = Element::basis(tower.clone(), i).expect("index in range");
        pool.push(e.clone());
        pool.push(e.neg());
    }
    pool
}

/// Sums of two signed basis elements, s*e_i + t*e_j with i < j, sign pattern
/// order ++, +-, -+, --. Index pairs that mix the two halves of the
/// coordinate vector come first: the classical zero divisors of a failing
/// fourth doubling have that shape.
fn paired_sum_pool(tower: &Arc<TowerSpec>) -> Vec<Element> {
    let dim = tower.dim();
    let half = dim / 2;
    let mut pairs = Vec::new();
    for i in 1..=dim {
        for j in i + 1..=dim {
            if i <= half && j > half {
                pairs.push((i, j));
            }
        }
    }
    for i in 1..=dim {
        for j in i + 1..=dim {
            if !(i <= half && j > half) {
                pairs.push((i, j));
            }
        }
    }
    let mut pool = Vec::with_capacity(4 * pairs.len());
    for (i, j) in pairs {
        let ei = Element::basis(tower.clone(), i).expect("index in range");
        let ej = Element::basis(tower.clone(), j).expect("index in range");
        for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
            let a = if si == 1 { ei.clone() } else { ei.neg() };
            let b = if sj == 1 { ej.clone() } else { ej.neg() };
            pool.push(a.add(&b).expect("same tower"));
        }
    }
    pool
}

struct Phase1Hit {
    args: Vec<Element>,
    lhs: Element,
    rhs: Element,
}

/// Runs the exhaustive phase. Scalar slots only range over +-e_1 so the
/// weak laws are never fed a non-scalar operand.
fn run_phase1(
    id: IdentityId,
    tower: &Arc<TowerSpec>,
    evals: &mut u64,
) -> Result<Option<Phase1Hit>, Error> {
    let singles = signed_basis_pool(tower);
    let scalars = &singles[..2.min(singles.len())];
    let arity = id.arity();

    let check = |args: &[Element], evals: &mut u64| -> Result<Option<Phase1Hit>, Error> {
        *evals += 1;
        let (lhs, rhs) = id.evaluate(args)?;
        if lhs != rhs {
            Ok(Some(Phase1Hit {
                args: args.to_vec(),
                lhs,
                rhs,
            }))
        } else {
            Ok(None)
        }
    };

    // stage A: every tuple of signed basis elements, last slot fastest
    let slot_pools: Vec<&[Element]> = (0..arity)
        .map(|slot| {
            if id.scalar_slots().contains(&slot) {
                scalars
            } else {
                &singles[..]
            }
        })
        .collect();
    let mut idxs = vec![0usize; arity];
    loop {
        let args: Vec<Element> = idxs
            .iter()
            .zip(&slot_pools)
            .map(|(&k, pool)| pool[k].clone())
            .collect();
        if let Some(hit) = check(&args, evals)? {
            return Ok(Some(hit));
        }
        let mut slot = arity;
        loop {
            if slot == 0 {
                // odometer wrapped: stage A done
                idxs.clear();
                break;
            }
            slot -= 1;
            idxs[slot] += 1;
            if idxs[slot] < slot_pools[slot].len() {
                break;
            }
            idxs[slot] = 0;
        }
        if idxs.is_empty() {
            break;
        }
    }

    // stage B, binary identities only: bring in sums of two signed basis
    // elements, first against single basis elements, then paired with
    // each other
    if arity == 2 && id.scalar_slots().is_empty() {
        let sums = paired_sum_pool(tower);
        for a in &sums {
            for b in &singles {
                if let Some(hit) = check(&[a.clone(), b.clone()], evals)? {
                    return Ok(Some(hit));
                }
            }
        }
        for a in &singles {
            for b in &sums {
                if let Some(hit) = check(&[a.clone(), b.clone()], evals)? {
                    return Ok(Some(hit));
                }
            }
        }
        for a in &sums {
            for b in &sums {
                if let Some(hit) = check(&[a.clone(), b.clone()], evals)? {
                    return Ok(Some(hit));
                }
            }
        }
    }
    Ok(None)
}

/// Two-phase bounded search for a violation of `id` on `tower`: first the
/// deterministic exhaustive grid, then `budget.phase2_trials` seeded random
/// tuples. The report's `trials` field is the number of evaluations made.
pub fn find_counterexample(
    id: IdentityId,
    tower: &Arc<TowerSpec>,
    budget: &SearchBudget,
    seed: u64,
) -> Result<CheckReport, Error> {
    let mut evals: u64 = 0;
    if id.arity() <= budget.phase1_arity_cap {
        if let Some(hit) = run_phase1(id, tower, &mut evals)? {
            return Ok(CheckReport::failed(
                CheckKind::Identity(id),
                tower.clone(),
                evals,
                seed,
                hit.args,
                hit.lhs,
                hit.rhs,
            ));
        }
    }
    let mut rng = SplitMix64::new(seed);
    for _ in 0..budget.phase2_trials {
        evals += 1;
        let args = draw_args(id, tower, &mut rng, budget.phase2_bound);
        let (lhs, rhs) = id.evaluate(&args)?;
        if lhs != rhs {
            return Ok(CheckReport::failed(
                CheckKind::Identity(id),
                tower.clone(),
                evals,
                seed,
                args,
                lhs,
                rhs,
            ));
        }
    }
    Ok(CheckReport::passed(
        CheckKind::Identity(id),
        tower.clone(),
        evals,
        seed,
    ))
}

/// Multiplies identical random coordinate vectors under two same-dimension
/// towers and compares the products exactly.
pub fn compare_towers(
    tower: &Arc<TowerSpec>,
    other: &Arc<TowerSpec>,
    trials: u64,
    seed: u64,
    coord_bound: u32,
) -> Result<CheckReport, Error> {
    if tower.dim() != other.dim() {
        return Err(Error::DimensionMismatch {
            expected: tower.dim(),
            got: other.dim(),
        });
    }
    let kind = CheckKind::CompareTowers {
        other: other.clone(),
    };
    let mut rng = SplitMix64::new(seed);
    for _ in 0..trials {
        let x = random_element(tower, &mut rng, coord_bound);
        let y = random_element(tower, &mut rng, coord_bound);
        let xb = Element::new(other.clone(), x.coords().to_vec())?;
        let yb = Element::new(other.clone(), y.coords().to_vec())?;
        let pa = x.mul(&y)?;
        let pb = xb.mul(&yb)?;
        if pa.coords() != pb.coords() {
            return Ok(CheckReport::failed(
                kind,
                tower.clone(),
                trials,
                seed,
                vec![x, y],
                pa,
                pb,
            ));
        }
    }
    Ok(CheckReport::passed(kind, tower.clone(), trials, seed))
}
