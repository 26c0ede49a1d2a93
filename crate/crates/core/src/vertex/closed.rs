//! The closed Schur-function formula for the vertex, with a shared cache.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::schur::{complete_homogeneous, skew_schur_from_h};
use super::volume::VertexKey;
use crate::closed_forms::macmahon_unit;
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::series::HalfLaurent;

const MAX_RETRIES: usize = 8;

type HKey = (Partition, usize, i64);

/// Vertex values exact through a fixed q-precision, computed on demand and cached.
///
/// Safe to share between threads.
#[derive(Default)]
pub struct VertexTable {
    hi: i64,
    values: Mutex<HashMap<VertexKey, HalfLaurent>>,
    h: Mutex<HashMap<HKey, Arc<Vec<HalfLaurent>>>>,
}

impl VertexTable {
    pub fn new(hi: i64) -> Self {
        VertexTable { hi, values: Mutex::default(), h: Mutex::default() }
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    /// `V_{lambda mu nu}` exact through `self.hi()`.
    pub fn get(&self, key: &VertexKey) -> Result<HalfLaurent> {
        if let Some(v) = self.values.lock().expect("cache lock").get(key) {
            return Ok(v.clone());
        }
        let v = self.compute(key)?;
        self.values.lock().expect("cache lock").insert(key.clone(), v.clone());
        Ok(v)
    }

    /// Convenience for `get` on three partitions.
    pub fn v(&self, l: &Partition, m: &Partition, n: &Partition) -> Result<HalfLaurent> {
        self.get(&VertexKey(l.clone(), m.clone(), n.clone()))
    }

    fn h_table(&self, nu: &Partition, k: usize, w: i64) -> Arc<Vec<HalfLaurent>> {
        let key = (nu.clone(), k, w);
        if let Some(t) = self.h.lock().expect("cache lock").get(&key) {
            return t.clone();
        }
        let t = Arc::new(complete_homogeneous(nu, k, w));
        self.h.lock().expect("cache lock").insert(key, t.clone());
        t
    }

    fn compute(&self, key: &VertexKey) -> Result<HalfLaurent> {
        let VertexKey(l, m, n) = key;
        let framing = l.norm_sq() + m.conjugate().norm_sq() + n.norm_sq();
        let mut w = self.hi + framing + 2;
        for _ in 0..MAX_RETRIES {
            let v = self.attempt(l, m, n, framing, w);
            if v.hi() >= self.hi {
                return Ok(v.truncate(self.hi));
            }
            w += self.hi - v.hi() + 2;
        }
        Err(Error::WindowExhausted { needed: self.hi, have: w })
    }

    fn attempt(&self, l: &Partition, m: &Partition, n: &Partition, framing: i64, w: i64) -> HalfLaurent {
        let lt = l.conjugate();
        let nt = n.conjugate();
        let empty = Partition::empty();
        let k_of = |p: &Partition| p.part(0) as usize + p.len();
        let h0 = self.h_table(&empty, k_of(&nt), w);
        let h_nu = self.h_table(n, k_of(&lt), w);
        let h_nut = self.h_table(&nt, k_of(m), w);
        let mut sum = HalfLaurent::zero(w);
        for eta in lt.common_subpartitions(m) {
            let a = skew_schur_from_h(&lt, &eta, &h_nu, w);
            let b = skew_schur_from_h(m, &eta, &h_nut, w);
            sum = sum.add(&a.mul(&b));
        }
        let s_nu = skew_schur_from_h(&nt, &empty, &h0, w);
        macmahon_unit(w).mul(&s_nu).mul(&sum).shift(-framing)
    }
}

/// `V_{lambda mu nu}` exact through q-exponent `hi`.
pub fn vertex_closed(key: &VertexKey, hi: i64) -> Result<HalfLaurent> {
    VertexTable::new(hi).get(key)
}
