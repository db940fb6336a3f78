use std::sync::Arc;

use serde_json::{Map, Value};

use super::diagonal::TwistedDiagonal;
use super::table::TwistedClassTable;
use crate::error::{Error, Result};

/// An element of `B^Δ(G, H)`: integer coefficients on the twisted classes
/// of its table.
#[derive(Clone, Debug)]
pub struct BisetElement {
    table: Arc<TwistedClassTable>,
    coeffs: Vec<i64>,
}

impl PartialEq for BisetElement {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.table, &other.table) && self.coeffs == other.coeffs
    }
}

impl Eq for BisetElement {}

impl BisetElement {
    pub fn new(table: Arc<TwistedClassTable>, coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.len() != table.len() {
            return Err(Error::Mismatch(format!(
                "expected {} coefficients, got {}",
                table.len(),
                coeffs.len()
            )));
        }
        Ok(BisetElement { table, coeffs })
    }

    pub fn zero(table: Arc<TwistedClassTable>) -> Self {
        let n = table.len();
        BisetElement {
            table,
            coeffs: vec![0; n],
        }
    }

    /// `[(G×H)/Δ_i]`.
    pub fn basis(table: Arc<TwistedClassTable>, i: usize) -> Self {
        let mut x = Self::zero(table);
        x.coeffs[i] = 1;
        x
    }

    /// `[(G×H)/Δ]` for an arbitrary twisted diagonal.
    pub fn transitive(table: Arc<TwistedClassTable>, delta: &TwistedDiagonal) -> Result<Self> {
        let c = table
            .class_of(delta)
            .ok_or_else(|| Error::Mismatch("twisted diagonal does not belong to this table".into()))?;
        Ok(Self::basis(table, c))
    }

    pub fn from_marks(table: Arc<TwistedClassTable>, marks: &[i64]) -> Result<Self> {
        let coeffs = table.coeffs_from_marks(marks)?;
        Ok(BisetElement { table, coeffs })
    }

    pub fn table(&self) -> &Arc<TwistedClassTable> {
        &self.table
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, _)| i)
    }

    /// `Φ_{Δ_i}(self)` for every class `i`.
    pub fn marks(&self) -> Vec<i64> {
        self.table.marks_of(&self.coeffs)
    }

    /// `Φ_Δ(self)` at an arbitrary twisted diagonal of `G × H`.
    pub fn mark(&self, delta: &TwistedDiagonal) -> Result<i64> {
        let i = self
            .table
            .class_of(delta)
            .ok_or_else(|| Error::Mismatch("twisted diagonal does not belong to this table".into()))?;
        Ok(self.mark_at(i))
    }

    /// `Φ_{Δ_i}(self)`.
    pub fn mark_at(&self, i: usize) -> i64 {
        (i..self.table.len())
            .map(|j| self.table.mark(i, j) * self.coeffs[j])
            .sum()
    }

    fn zip(&self, other: &Self, f: impl Fn(i64, i64) -> i64) -> Result<Self> {
        if !Arc::ptr_eq(&self.table, &other.table) {
            return Err(Error::Mismatch("elements of different biset groups".into()));
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| f(a, b)).collect();
        Ok(BisetElement {
            table: self.table.clone(),
            coeffs,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, k: i64) -> Self {
        BisetElement {
            table: self.table.clone(),
            coeffs: self.coeffs.iter().map(|&c| c * k).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    /// Moves coefficients along `map` into `target`; used for duality.
    pub fn relabel(&self, target: &Arc<TwistedClassTable>, map: &[usize]) -> Self {
        let mut coeffs = vec![0; target.len()];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[map[i]] += c;
        }
        BisetElement {
            table: target.clone(),
            coeffs,
        }
    }

    /// Sparse `{label: coefficient}` map in class order.
    pub fn to_json(&self) -> Value {
        let map: Map<String, Value> = self
            .support()
            .map(|i| (self.table.label(i), Value::from(self.coeffs[i])))
            .collect();
        Value::Object(map)
    }

    /// Inverse of [`to_json`](Self::to_json).
    pub fn from_json(table: Arc<TwistedClassTable>, value: &Value) -> Result<Self> {
        let object = value
            .as_object()
            .ok_or_else(|| Error::Mismatch("expected a {label: coefficient} object".into()))?;
        let mut x = Self::zero(table);
        for (label, c) in object {
            let i = x.table.find_label(label)?;
            let c = c
                .as_i64()
                .ok_or_else(|| Error::Mismatch(format!("coefficient of {label} is not an integer")))?;
            x.coeffs[i] += c;
        }
        Ok(x)
    }
}
