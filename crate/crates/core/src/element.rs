//! Elements of a doubling tower and all element-level arithmetic.
//!
//! An element of an n-level tower is stored as a flat vector of 2^n exact
//! rational coordinates. The recursive pair structure is implicit: the first
//! half of the coordinates is the first component of the top-level pair, the
//! second half is the second component, and the top-level pair corresponds to
//! the *last* level of the tower.

use std::fmt;
use std::sync::Arc;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::rational::Rational;
use crate::tower::{DoublingKind, LevelSpec, TowerSpec};

/// An immutable element of a doubling tower: a tower reference plus 2^n
/// coordinates. Coordinate 1 of the norm-form indexing lives at array
/// position 0.
#[derive(Clone, PartialEq, Eq)]
pub struct Element {
    tower: Arc<TowerSpec>,
    coords: Vec<Rational>,
}

impl Element {
    /// Wraps a coordinate vector; its length must equal the tower dimension.
    pub fn new(tower: Arc<TowerSpec>, coords: Vec<Rational>) -> Result<Element, Error> {
        if coords.len() != tower.dim() {
            return Err(Error::DimensionMismatch {
                expected: tower.dim(),
                got: coords.len(),
            });
        }
        Ok(Element { tower, coords })
    }

    pub fn zero(tower: Arc<TowerSpec>) -> Element {
        let coords = vec![Rational::zero(); tower.dim()];
        Element { tower, coords }
    }

    /// The scalar `value` embedded as `value * e_1`.
    pub fn scalar(tower: Arc<TowerSpec>, value: Rational) -> Element {
        let mut e = Element::zero(tower);
        e.coords[0] = value;
        e
    }

    /// The multiplicative identity e_1.
    pub fn one(tower: Arc<TowerSpec>) -> Element {
        Element::scalar(tower, Rational::one())
    }

    /// The basis element e_i (1-based): all coordinates zero except the i-th.
    pub fn basis(tower: Arc<TowerSpec>, i: usize) -> Result<Element, Error> {
        let dim = tower.dim();
        if i == 0 || i > dim {
            return Err(Error::IndexOutOfRange { index: i, max: dim });
        }
        let mut e = Element::zero(tower);
        e.coords[i - 1] = Rational::one();
        Ok(e)
    }

    /// Parses the element serialization: each coordinate a rational string.
    pub fn from_coord_strings(tower: Arc<TowerSpec>, coords: &[String]) -> Result<Element, Error> {
        let parsed = coords
            .iter()
            .map(|s| Rational::parse(s))
            .collect::<Result<Vec<_>, _>>()?;
        Element::new(tower, parsed)
    }

    pub fn tower(&self) -> &Arc<TowerSpec> {
        &self.tower
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn coord_strings(&self) -> Vec<String> {
        self.coords.iter().map(|c| c.to_string()).collect()
    }

    /// The k-part x_1.
    pub fn scalar_part(&self) -> &Rational {
        &self.coords[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    /// True iff the trace vanishes, i.e. x_1 = 0.
    pub fn is_imaginary(&self) -> bool {
        self.coords[0].is_zero()
    }

    fn require_same_tower(&self, other: &Element) -> Result<(), Error> {
        if self.tower == other.tower {
            Ok(())
        } else {
            Err(Error::TowerMismatch {
                left: self.tower.to_string(),
                right: other.tower.to_string(),
            })
        }
    }

    pub fn add(&self, other: &Element) -> Result<Element, Error> {
        self.require_same_tower(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Element {
            tower: self.tower.clone(),
            coords,
        })
    }

    pub fn sub(&self, other: &Element) -> Result<Element, Error> {
        self.require_same_tower(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Element {
            tower: self.tower.clone(),
            coords,
        })
    }

    pub fn neg(&self) -> Element {
        Element {
            tower: self.tower.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Element {
        Element {
            tower: self.tower.clone(),
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    /// Conjugation: recursively (conj(first half), -(second half)), which
    /// negates every coordinate except the first.
    pub fn conjugate(&self) -> Element {
        Element {
            tower: self.tower.clone(),
            coords: conj_slice(&self.coords),
        }
    }

    /// The tower product. Each level dispatches on its doubling kind; the
    /// base case is plain rational multiplication.
    pub fn mul(&self, other: &Element) -> Result<Element, Error> {
        self.require_same_tower(other)?;
        let coords = mul_slices(self.tower.levels(), &self.coords, &other.coords)?;
        Ok(Element {
            tower: self.tower.clone(),
            coords,
        })
    }

    /// t(x) = x + conj(x), which is always a scalar; returns that scalar.
    pub fn trace(&self) -> Rational {
        let conj = self.conjugate();
        let sum = self.add(&conj).expect("same tower");
        assert!(
            sum.coords[1..].iter().all(Rational::is_zero),
            "trace produced a non-scalar"
        );
        sum.coords.into_iter().next().expect("dim >= 1")
    }

    /// The diagonal norm form: sum of form_weight(i) * x_i^2.
    pub fn norm_form(&self) -> Rational {
        let weights = self.tower.weights();
        let mut acc = Rational::zero();
        for (w, x) in weights.iter().zip(&self.coords) {
            if !x.is_zero() {
                acc = &acc + &(w * &x.square());
            }
        }
        acc
    }

    /// n(x) = conj(x) * x, computed via the actual product. Fails with
    /// `NonScalarNorm` if the product is not a scalar, which would signal a
    /// multiplication bug; otherwise equals [`Element::norm_form`].
    pub fn norm_via_mul(&self) -> Result<Rational, Error> {
        let product = self.conjugate().mul(self)?;
        if !product.coords[1..].iter().all(Rational::is_zero) {
            return Err(Error::NonScalarNorm);
        }
        Ok(product.coords.into_iter().next().expect("dim >= 1"))
    }

    /// x^{-1} = conj(x) / n(x); fails when the norm form vanishes.
    pub fn inverse(&self) -> Result<Element, Error> {
        let n = self.norm_form();
        if n.is_zero() {
            return Err(Error::NotInvertible);
        }
        Ok(self.conjugate().scale(&n.invert()?))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for Element {
    /// Serializes as the JSON array of canonical rational strings.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coords.len()))?;
        for c in &self.coords {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

fn conj_slice(xs: &[Rational]) -> Vec<Rational> {
    let mut out = Vec::with_capacity(xs.len());
    out.push(xs[0].clone());
    for x in &xs[1..] {
        out.push(-x);
    }
    out
}

fn add_slices(xs: &[Rational], ys: &[Rational]) -> Vec<Rational> {
    xs.iter().zip(ys).map(|(a, b)| a + b).collect()
}

fn scale_slice(xs: &[Rational], s: &Rational) -> Vec<Rational> {
    xs.iter().map(|x| x * s).collect()
}

fn is_zero_slice(xs: &[Rational]) -> bool {
    xs.iter().all(Rational::is_zero)
}

/// Norm form of a lower-level coordinate slice, via the recursion
/// n((a,b)) = n(a) + C n(b) with C = -D.
fn norm_slice(levels: &[LevelSpec], xs: &[Rational]) -> Rational {
    match levels.split_last() {
        None => xs[0].square(),
        Some((top, sub)) => {
            let h = xs.len() / 2;
            let na = norm_slice(sub, &xs[..h]);
            let nb = norm_slice(sub, &xs[h..]);
            &na + &(&top.c() * &nb)
        }
    }
}

/// Recursive product of two coordinate slices of the same (sub)tower.
fn mul_slices(
    levels: &[LevelSpec],
    xs: &[Rational],
    ys: &[Rational],
) -> Result<Vec<Rational>, Error> {
    let Some((top, sub)) = levels.split_last() else {
        return Ok(vec![&xs[0] * &ys[0]]);
    };
    let h = xs.len() / 2;
    let (a, b) = xs.split_at(h);
    let (c, d) = ys.split_at(h);
    let dd = top.d();

    match top.kind() {
        // (a,b)(c,d) = (ac + D d conj(b), conj(a) d + c b)
        DoublingKind::CayleyDickson => {
            let ac = mul_slices(sub, a, c)?;
            let d_bconj = mul_slices(sub, d, &conj_slice(b))?;
            let first: Vec<Rational> = ac
                .iter()
                .zip(&d_bconj)
                .map(|(p, q)| p + &(dd * q))
                .collect();
            let aconj_d = mul_slices(sub, &conj_slice(a), d)?;
            let cb = mul_slices(sub, c, b)?;
            let mut out = first;
            out.extend(add_slices(&aconj_d, &cb));
            Ok(out)
        }
        // b = 0: (a,b)(c,d) = (ac, conj(a) d).
        // b != 0: (a,b)(c,d) = (ac + D conj(b conj(d)),
        //   conj(conj(b) conj(c))
        //   + conj(conj(b) conj(conj(a) conj(conj(b^{-1}) conj(d)))))
        // with b^{-1} = conj(b)/n(b) at the lower level.
        DoublingKind::ConwaySmith => {
            if is_zero_slice(b) {
                let ac = mul_slices(sub, a, c)?;
                let aconj_d = mul_slices(sub, &conj_slice(a), d)?;
                let mut out = ac;
                out.extend(aconj_d);
                return Ok(out);
            }
            let nb = norm_slice(sub, b);
            if nb.is_zero() {
                // unreachable for cs levels over definite subtowers, but a
                // mixed tower can make lower norms isotropic
                return Err(Error::NotInvertible);
            }
            let b_conj = conj_slice(b);
            let d_conj = conj_slice(d);

            let ac = mul_slices(sub, a, c)?;
            let b_dconj = mul_slices(sub, b, &d_conj)?;
            let bd_conj = conj_slice(&b_dconj);
            let first: Vec<Rational> = ac
                .iter()
                .zip(&bd_conj)
                .map(|(p, q)| p + &(dd * q))
                .collect();

            let b_inv = scale_slice(&b_conj, &nb.invert()?);
            let u = mul_slices(sub, &conj_slice(&b_inv), &d_conj)?;
            let v = mul_slices(sub, &conj_slice(a), &conj_slice(&u))?;
            let w = mul_slices(sub, &b_conj, &conj_slice(&v))?;
            let t1 = mul_slices(sub, &b_conj, &conj_slice(c))?;

            let second = add_slices(&conj_slice(&t1), &conj_slice(&w));
            let mut out = first;
            out.extend(second);
            Ok(out)
        }
    }
}
