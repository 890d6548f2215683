//! Sparse elements of a tower level, presented over a normal-form basis.
//!
//! A [`Word`] is the canonical basis word of one tower family: a
//! permutation in one-line notation, an exponent-vector/permutation pair,
//! or a tensor-factor/permutation pair. Elements are canonical sparse
//! maps from words to scalars; zero coefficients are never stored, so
//! structural equality is equality.

use crate::error::{Error, Result};
use crate::exactlin::Scalar;
use std::collections::BTreeMap;
use std::fmt;

/// One-line permutation helpers (0-indexed images).
/// Composition convention throughout: (σ·τ)(j) = σ(τ(j)).
pub mod perm {
    pub fn identity(n: usize) -> Vec<u8> {
        (0..n as u8).collect()
    }

    pub fn is_identity(p: &[u8]) -> bool {
        p.iter().enumerate().all(|(i, &v)| v as usize == i)
    }

    pub fn compose(sigma: &[u8], tau: &[u8]) -> Vec<u8> {
        debug_assert_eq!(sigma.len(), tau.len());
        tau.iter().map(|&j| sigma[j as usize]).collect()
    }

    pub fn inverse(p: &[u8]) -> Vec<u8> {
        let mut out = vec![0u8; p.len()];
        for (i, &v) in p.iter().enumerate() {
            out[v as usize] = i as u8;
        }
        out
    }

    /// Transposition of 0-based positions a and b.
    pub fn transposition(n: usize, a: usize, b: usize) -> Vec<u8> {
        let mut p = identity(n);
        p.swap(a, b);
        p
    }

    /// Adjacent transposition s_i (1-based generator index, 1 ≤ i < n).
    pub fn adjacent(n: usize, i: usize) -> Vec<u8> {
        transposition(n, i - 1, i)
    }

    /// True when p lies in the standard subgroup fixing positions ≥ k.
    pub fn fixes_from(p: &[u8], k: usize) -> bool {
        p.iter().enumerate().skip(k).all(|(i, &v)| v as usize == i)
    }

    /// Reduced word as 1-based generator indices, w = s_{a1}·…·s_{al}.
    pub fn reduced_word(p: &[u8]) -> Vec<usize> {
        let mut w = p.to_vec();
        let mut gens_rev = Vec::new();
        loop {
            let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) else {
                break;
            };
            // right-multiplying by s_{i+1} removes the descent
            w.swap(i, i + 1);
            gens_rev.push(i + 1);
        }
        gens_rev.reverse();
        gens_rev
    }

    /// All permutations of n in lexicographic one-line order.
    pub fn enumerate(n: usize) -> Vec<Vec<u8>> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(n: usize, current: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Vec<u8>>) {
            if current.len() == n {
                out.push(current.clone());
                return;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    current.push(v as u8);
                    rec(n, current, used, out);
                    current.pop();
                    used[v] = false;
                }
            }
        }
        rec(n, &mut current, &mut used, &mut out);
        out
    }
}

/// Normal-form basis word of a tower level.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Word {
    /// Symmetric group: one-line permutation.
    Perm(Vec<u8>),
    /// Degenerate cyclotomic Hecke: x-exponents (each < d), then permutation.
    Hecke { exps: Vec<u8>, perm: Vec<u8> },
    /// Wreath product: tensor-factor basis indices, then permutation.
    Wreath { factors: Vec<u8>, perm: Vec<u8> },
}

impl Word {
    pub fn level(&self) -> usize {
        match self {
            Word::Perm(p) => p.len(),
            Word::Hecke { perm, .. } => perm.len(),
            Word::Wreath { perm, .. } => perm.len(),
        }
    }

    pub fn perm(&self) -> &[u8] {
        match self {
            Word::Perm(p) => p,
            Word::Hecke { perm, .. } => perm,
            Word::Wreath { perm, .. } => perm,
        }
    }
}

/// Sparse linear combination of same-level basis words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraElement {
    level: usize,
    terms: BTreeMap<Word, Scalar>,
}

impl AlgebraElement {
    pub fn zero(level: usize) -> Self {
        AlgebraElement {
            level,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_word(w: Word) -> Self {
        AlgebraElement::from_terms(w.level(), vec![(w, Scalar::one())])
    }

    pub fn from_terms(level: usize, terms: Vec<(Word, Scalar)>) -> Self {
        let mut e = AlgebraElement::zero(level);
        for (w, c) in terms {
            e.add_term(w, c);
        }
        e
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Accumulate a term, dropping the entry if the sum cancels.
    pub fn add_term(&mut self, w: Word, c: Scalar) {
        debug_assert_eq!(w.level(), self.level, "word level mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &AlgebraElement) -> Result<AlgebraElement> {
        if self.level != rhs.level {
            return Err(Error::LevelMismatch(format!(
                "add at levels {} and {}",
                self.level, rhs.level
            )));
        }
        let mut out = self.clone();
        for (w, c) in rhs.terms() {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &AlgebraElement) -> Result<AlgebraElement> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> AlgebraElement {
        AlgebraElement {
            level: self.level,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> AlgebraElement {
        if c.is_zero() {
            return AlgebraElement::zero(self.level);
        }
        AlgebraElement {
            level: self.level,
            terms: self
                .terms
                .iter()
                .map(|(w, v)| (w.clone(), v * c))
                .collect(),
        }
    }

    /// Dense coordinate vector over an indexed basis.
    pub fn to_vector(&self, index: &BTreeMap<Word, usize>, dim: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); dim];
        for (w, c) in self.terms() {
            let i = *index
                .get(w)
                .unwrap_or_else(|| panic!("word outside basis: {w:?}"));
            v[i] = c.clone();
        }
        v
    }

    pub fn from_vector(level: usize, basis: &[Word], v: &[Scalar]) -> AlgebraElement {
        let mut e = AlgebraElement::zero(level);
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                e.add_term(basis[i].clone(), c.clone());
            }
        }
        e
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Word::Perm(p) => {
                let rw = perm::reduced_word(p);
                if rw.is_empty() {
                    write!(f, "1")
                } else {
                    let names: Vec<String> = rw.iter().map(|i| format!("s{i}")).collect();
                    write!(f, "{}", names.join("*"))
                }
            }
            Word::Hecke { exps, perm: p } => {
                let mut parts = Vec::new();
                for (i, &e) in exps.iter().enumerate() {
                    match e {
                        0 => {}
                        1 => parts.push(format!("x{}", i + 1)),
                        _ => parts.push(format!("x{}^{}", i + 1, e)),
                    }
                }
                for i in perm::reduced_word(p) {
                    parts.push(format!("s{i}"));
                }
                if parts.is_empty() {
                    write!(f, "1")
                } else {
                    write!(f, "{}", parts.join("*"))
                }
            }
            Word::Wreath { factors, perm: p } => {
                let mut parts = Vec::new();
                let tensor: Vec<String> =
                    factors.iter().map(|&k| format!("b{k}")).collect();
                if factors.iter().any(|&k| k != 0) || p.is_empty() {
                    parts.push(format!("({})", tensor.join("⊗")));
                }
                for i in perm::reduced_word(p) {
                    parts.push(format!("s{i}"));
                }
                if parts.is_empty() {
                    write!(f, "1")
                } else {
                    write!(f, "{}", parts.join("*"))
                }
            }
        }
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in self.terms() {
            let coeff = c.to_string();
            let (sign, mag) = match coeff.strip_prefix('-') {
                Some(rest) if !coeff.contains('+') && !rest.contains('-') => {
                    ("-", rest.to_string())
                }
                _ => ("+", coeff),
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            let word = w.to_string();
            if mag == "1" {
                write!(f, "{word}")?;
            } else if word == "1" {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag}*{word}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(p: &[u8]) -> Word {
        Word::Perm(p.to_vec())
    }

    #[test]
    fn composition_convention() {
        // (σ·τ)(j) = σ(τ(j)); with σ = (1 2), τ = (2 3) in cycle notation
        let sigma = perm::adjacent(3, 1);
        let tau = perm::adjacent(3, 2);
        let st = perm::compose(&sigma, &tau);
        let ts = perm::compose(&tau, &sigma);
        assert_ne!(st, ts);
        // σ(τ(1)) with 0-based: τ(0)=0, σ(0)=1
        assert_eq!(st[0], 1);
        assert_eq!(perm::compose(&sigma, &sigma), perm::identity(3));
    }

    #[test]
    fn reduced_words_reassemble() {
        for p in perm::enumerate(4) {
            let rw = perm::reduced_word(&p);
            let mut acc = perm::identity(4);
            for i in rw {
                acc = perm::compose(&acc, &perm::adjacent(4, i));
            }
            assert_eq!(acc, p);
        }
    }

    #[test]
    fn add_cancels_to_zero() {
        let x = AlgebraElement::from_word(word(&[1, 0]));
        let zero = x.add(&x.neg()).unwrap();
        assert!(zero.is_zero());
        let five = x.scale(&Scalar::from_int(2)).add(&x.scale(&Scalar::from_int(3))).unwrap();
        assert_eq!(five.coeff(&word(&[1, 0])), Scalar::from_int(5));
        assert_eq!(five.len(), 1);
    }

    #[test]
    fn add_rejects_level_mismatch() {
        let a = AlgebraElement::from_word(word(&[0, 1]));
        let b = AlgebraElement::from_word(word(&[0, 1, 2]));
        assert!(matches!(a.add(&b), Err(Error::LevelMismatch(_))));
    }

    #[test]
    fn identity_plus_x_displays() {
        let mut e = AlgebraElement::from_word(word(&[0, 1, 2]));
        e.add_term(word(&[1, 0, 2]), Scalar::from_int(-2));
        assert_eq!(e.to_string(), "1 - 2*s1");
    }
}
