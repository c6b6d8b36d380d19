//! Helpers shared by the integration tests.

#![allow(dead_code)]

use std::sync::Arc;

use cyclic_bound::gf::{Elem, FieldCtx};

/// Textbook binary BCH decoder: syndromes on a run of consecutive roots,
/// Berlekamp–Massey for the locator, Chien search for the positions.
pub struct BinaryBch {
    pub field: Arc<FieldCtx>,
    pub n: u64,
    /// `α^b, α^(b+step), ...` are roots of the code for `run` terms.
    pub alpha: Elem,
    pub b: u64,
    pub step: u64,
    pub run: u64,
}

impl BinaryBch {
    pub fn radius(&self) -> u64 {
        self.run / 2
    }

    fn eval(&self, word: &[u32], k: u64) -> Elem {
        let f = &self.field;
        let mut acc = Elem(0);
        for (p, &bit) in word.iter().enumerate() {
            if bit != 0 {
                acc = f.add(acc, f.pow(self.alpha, ((k * p as u64) % self.n) as i64));
            }
        }
        acc
    }

    /// `S_j = r(α^(b + j·step))` for `j < run`.
    pub fn syndromes(&self, word: &[u32]) -> Vec<Elem> {
        (0..self.run)
            .map(|j| self.eval(word, (self.b + j * self.step) % self.n))
            .collect()
    }

    /// Error positions, or `None` when the locator does not split.
    pub fn decode(&self, word: &[u32]) -> Option<Vec<u64>> {
        let f = &self.field;
        let s = self.syndromes(word);
        // Berlekamp–Massey
        let mut c = vec![Elem(1)];
        let mut prev = vec![Elem(1)];
        let mut l = 0usize;
        let mut shift = 1usize;
        let mut last = Elem(1);
        for k in 0..s.len() {
            let mut d = s[k];
            for i in 1..=l.min(c.len() - 1) {
                d = f.add(d, f.mul(c[i], s[k - i]));
            }
            if d.is_zero() {
                shift += 1;
                continue;
            }
            let coef = f.div(d, last);
            let old = c.clone();
            if c.len() < prev.len() + shift {
                c.resize(prev.len() + shift, Elem(0));
            }
            for (i, &pi) in prev.iter().enumerate() {
                c[i + shift] = f.sub(c[i + shift], f.mul(coef, pi));
            }
            if 2 * l <= k {
                l = k + 1 - l;
                prev = old;
                last = d;
                shift = 1;
            } else {
                shift += 1;
            }
        }
        c.truncate(l + 1);
        // Chien search: X_p = α^(step·p) is a root of C(1/x)
        let xs: Vec<u64> = (0..self.n)
            .filter(|&p| {
                let inv = f.pow(self.alpha, -(((self.step * p) % self.n) as i64));
                let mut acc = Elem(0);
                for coef in c.iter().rev() {
                    acc = f.add(f.mul(acc, inv), *coef);
                }
                acc.is_zero()
            })
            .collect();
        (xs.len() == l).then_some(xs)
    }
}
