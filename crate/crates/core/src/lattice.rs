//! The coordinatewise vector lattice `R^n`.
//!
//! Order, supremum and infimum are taken coordinatewise, so the lattice
//! homomorphisms onto `R` are exactly the point evaluations. A continuous
//! positively homogeneous function of `k` real variables therefore acts on
//! `k` lattice elements by evaluation at every coordinate, which is what
//! [`apply_homogeneous`] does.
//!
//! Vectors are generic over a [`Scalar`]: `f64` for numerical work and
//! [`BigRational`] for the exact mode used by golden tests.

use std::fmt;
use std::ops::Deref;

use num::{BigInt, BigRational, Num, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::error::{Error, Result};

/// Field of scalars a lattice vector can carry.
pub trait Scalar: Clone + PartialOrd + fmt::Debug + Num + Signed {
    /// Whether the value may be stored in a vector (finite for floats).
    fn is_admissible(&self) -> bool;
    fn from_usize(n: usize) -> Self;
    fn to_f64(&self) -> f64;
    fn to_json(&self) -> Value;
    fn from_json(value: &Value) -> Option<Self>;
    /// Moves a nonnegative value up by `ulps` units in the last place; exact
    /// scalars have no rounding and return the value unchanged.
    fn widen_ulps(&self, ulps: u32) -> Self;
}

impl Scalar for f64 {
    fn is_admissible(&self) -> bool {
        self.is_finite()
    }

    fn from_usize(n: usize) -> Self {
        n as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn to_json(&self) -> Value {
        serde_json::Number::from_f64(*self)
            .map(Value::Number)
            .unwrap_or(Value::Null)
    }

    fn from_json(value: &Value) -> Option<Self> {
        value.as_f64()
    }

    fn widen_ulps(&self, ulps: u32) -> Self {
        if !self.is_finite() || *self < 0.0 {
            return *self;
        }
        f64::from_bits(self.to_bits() + u64::from(ulps))
    }
}

impl Scalar for BigRational {
    fn is_admissible(&self) -> bool {
        true
    }

    fn from_usize(n: usize) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    /// Rationals travel as `"p/q"` strings (`"p"` when the denominator is 1).
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }

    fn from_json(value: &Value) -> Option<Self> {
        match value {
            Value::String(s) => parse_rational(s),
            Value::Number(n) => n.as_i64().map(|i| BigRational::from_integer(BigInt::from(i))),
            _ => None,
        }
    }

    fn widen_ulps(&self, _ulps: u32) -> Self {
        self.clone()
    }
}

/// Parses `"p/q"` or `"p"` into a reduced rational; rejects a zero denominator.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str_radix(p.trim(), 10).ok()?;
            let q = BigInt::from_str_radix(q.trim(), 10).ok()?;
            if q.is_zero() {
                return None;
            }
            Some(BigRational::new(p, q))
        }
        None => BigInt::from_str_radix(s, 10).ok().map(BigRational::from_integer),
    }
}

/// An element of the coordinatewise vector lattice over `T`.
#[derive(Clone, PartialEq)]
pub struct Vector<T> {
    entries: Vec<T>,
}

pub type LatticeVector = Vector<f64>;
pub type RationalVector = Vector<BigRational>;

impl<T: Scalar> Vector<T> {
    pub fn new(entries: Vec<T>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Empty("a lattice vector needs at least one entry"));
        }
        if let Some(i) = entries.iter().position(|x| !x.is_admissible()) {
            return Err(Error::NonFinite(i));
        }
        Ok(Self { entries })
    }

    pub fn zeros(n: usize) -> Result<Self> {
        Self::new(vec![T::zero(); n])
    }

    /// The `i`-th standard unit vector of `R^n`.
    pub fn unit(n: usize, i: usize) -> Result<Self> {
        if i >= n {
            return Err(Error::InvalidParameter {
                name: "i",
                reason: format!("index {i} out of range for dimension {n}"),
            });
        }
        let mut entries = vec![T::zero(); n];
        entries[i] = T::one();
        Self::new(entries)
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<T> {
        self.entries
    }

    pub fn sup(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| if a >= b { a.clone() } else { b.clone() })
    }

    pub fn inf(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| if a <= b { a.clone() } else { b.clone() })
    }

    pub fn abs(&self) -> Self {
        self.map(|x| x.abs())
    }

    pub fn positive_part(&self) -> Self {
        self.map(|x| if x.is_positive() { x.clone() } else { T::zero() })
    }

    pub fn negative_part(&self) -> Self {
        self.map(|x| if x.is_negative() { -x.clone() } else { T::zero() })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.clone() + b.clone())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.clone() - b.clone())
    }

    pub fn scale(&self, lambda: &T) -> Self {
        self.map(|x| x.clone() * lambda.clone())
    }

    pub fn neg(&self) -> Self {
        self.map(|x| -x.clone())
    }

    /// `f ⊥ g`, i.e. `|f| ∧ |g| = 0`. The test is exact, with no tolerance.
    pub fn is_disjoint(&self, other: &Self) -> Result<bool> {
        check_dim(self.dim(), other.dim())?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .all(|(a, b)| a.is_zero() || b.is_zero()))
    }

    /// `self ≤ other` in the coordinatewise order.
    pub fn le(&self, other: &Self) -> Result<bool> {
        check_dim(self.dim(), other.dim())?;
        Ok(self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b))
    }

    pub fn is_positive(&self) -> bool {
        self.entries.iter().all(|x| !x.is_negative())
    }

    /// Indices of the nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    fn map(&self, f: impl Fn(&T) -> T) -> Self {
        Self { entries: self.entries.iter().map(f).collect() }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Result<Self> {
        check_dim(self.dim(), other.dim())?;
        Ok(Self {
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        })
    }
}

impl Vector<f64> {
    pub fn from_slice(entries: &[f64]) -> Result<Self> {
        Self::new(entries.to_vec())
    }
}

impl Vector<BigRational> {
    /// Builds an exact vector from integer numerator/denominator pairs.
    pub fn from_ratios(entries: &[(i64, i64)]) -> Result<Self> {
        let mut out = Vec::with_capacity(entries.len());
        for &(p, q) in entries {
            if q == 0 {
                return Err(Error::InvalidParameter { name: "denominator", reason: "zero".into() });
            }
            out.push(BigRational::new(BigInt::from(p), BigInt::from(q)));
        }
        Self::new(out)
    }

    pub fn to_f64(&self) -> LatticeVector {
        Vector { entries: self.entries.iter().map(Scalar::to_f64).collect() }
    }
}

impl<T: Scalar> fmt::Debug for Vector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.entries).finish()
    }
}

impl<T: Scalar> Serialize for Vector<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.entries.iter().map(Scalar::to_json))
    }
}

impl<'de, T: Scalar> Deserialize<'de> for Vector<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<Value>::deserialize(deserializer)?;
        let entries = raw
            .iter()
            .enumerate()
            .map(|(i, v)| {
                T::from_json(v).ok_or_else(|| D::Error::custom(format!("entry {i}: cannot parse {v}")))
            })
            .collect::<std::result::Result<Vec<T>, _>>()?;
        Vector::new(entries).map_err(D::Error::custom)
    }
}

/// An element of the positive cone `E_+`.
#[derive(Clone, PartialEq)]
pub struct PositiveVector<T = f64>(Vector<T>);

impl<T: Scalar> PositiveVector<T> {
    pub fn new(v: Vector<T>) -> Result<Self> {
        if let Some(i) = v.entries.iter().position(|x| x.is_negative()) {
            return Err(Error::Negative { index: i, value: v.entries[i].to_f64() });
        }
        Ok(Self(v))
    }

    pub fn from_entries(entries: Vec<T>) -> Result<Self> {
        Self::new(Vector::new(entries)?)
    }

    pub fn as_vector(&self) -> &Vector<T> {
        &self.0
    }

    pub fn into_vector(self) -> Vector<T> {
        self.0
    }

    pub fn scale(&self, lambda: &T) -> Result<Self> {
        Self::new(self.0.scale(lambda))
    }

    pub fn inf(&self, other: &Self) -> Result<Self> {
        Ok(Self(self.0.inf(&other.0)?))
    }

    pub fn sup(&self, other: &Self) -> Result<Self> {
        Ok(Self(self.0.sup(&other.0)?))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(Self(self.0.add(&other.0)?))
    }
}

impl PositiveVector<f64> {
    pub fn from_slice(entries: &[f64]) -> Result<Self> {
        Self::new(Vector::from_slice(entries)?)
    }
}

impl<T> Deref for PositiveVector<T> {
    type Target = Vector<T>;

    fn deref(&self) -> &Vector<T> {
        &self.0
    }
}

impl<T: Scalar> fmt::Debug for PositiveVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl<T: Scalar> Serialize for PositiveVector<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for PositiveVector<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = Vector::<T>::deserialize(deserializer)?;
        PositiveVector::new(v).map_err(D::Error::custom)
    }
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

/// Common dimension of a nonempty family of vectors.
pub(crate) fn common_dim<T: Scalar>(fs: &[PositiveVector<T>]) -> Result<usize> {
    let first = fs.first().ok_or(Error::Empty("at least one argument is required"))?;
    for f in &fs[1..] {
        check_dim(first.dim(), f.dim())?;
    }
    Ok(first.dim())
}

/// Coordinatewise functional calculus: `result[i] = phi(f_1[i], ..., f_k[i])`.
///
/// `phi` must be continuous and positively homogeneous on `R^k_+` and take
/// nonnegative values there; a negative output is reported as an error.
pub fn apply_homogeneous<T, F>(mut phi: F, fs: &[PositiveVector<T>]) -> Result<PositiveVector<T>>
where
    T: Scalar,
    F: FnMut(&[T]) -> T,
{
    let n = common_dim(fs)?;
    let mut column = Vec::with_capacity(fs.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        column.clear();
        column.extend(fs.iter().map(|f| f.entries[i].clone()));
        out.push(phi(&column));
    }
    PositiveVector::new(Vector::new(out)?)
}

/// `⋀_k f_k`, the coordinatewise minimum of a nonempty family.
pub fn inf_all<T: Scalar>(fs: &[PositiveVector<T>]) -> Result<PositiveVector<T>> {
    apply_homogeneous(
        |xs| {
            xs[1..]
                .iter()
                .fold(xs[0].clone(), |m, x| if *x < m { x.clone() } else { m })
        },
        fs,
    )
}
