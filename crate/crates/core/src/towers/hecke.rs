//! Degenerate cyclotomic Hecke tower: normal-form basis
//! x_1^{t_1}…x_n^{t_n}·σ with all t_i < d, and the straightening rules
//! that rewrite arbitrary products into it.
//!
//! Straightening moves permutations right past polynomials one generator
//! at a time using s_i·f = (s_i f)·s_i − ∂_i(f) (a divided difference),
//! then reduces overflowing x-exponents with the cyclotomic relation,
//! transported up the letters by x_j = s_{j-1} x_{j-1} s_{j-1} + s_{j-1}.

use crate::algebra::{perm, AlgebraElement, Word};
use crate::exactlin::Scalar;
use std::collections::HashMap;
use std::sync::RwLock;

pub struct HeckeData {
    /// Weight multiset: one entry per fundamental weight with multiplicity.
    pub weights: Vec<i64>,
    /// x_1^d = Σ_k lower[k]·x_1^k, from the defining product ∏(x_1 - i).
    lower: Vec<Scalar>,
    /// Normal form of x_j^d as an element of level j, keyed by j.
    red_memo: RwLock<HashMap<usize, AlgebraElement>>,
    /// Word-product memo.
    prod_memo: RwLock<HashMap<(Word, Word), Vec<(Word, Scalar)>>>,
}

impl Clone for HeckeData {
    fn clone(&self) -> Self {
        HeckeData {
            weights: self.weights.clone(),
            lower: self.lower.clone(),
            red_memo: RwLock::new(self.red_memo.read().unwrap().clone()),
            prod_memo: RwLock::new(HashMap::new()),
        }
    }
}

impl HeckeData {
    pub fn new(mut weights: Vec<i64>) -> Self {
        assert!(!weights.is_empty(), "level d must be at least 1");
        assert!(weights.len() <= 3, "level d is capped at 3");
        weights.sort_unstable();
        // Expand ∏(x - i) and move the sub-leading part to the right side.
        let mut coeffs = vec![Scalar::one()];
        for &i in &weights {
            let mut next = vec![Scalar::zero(); coeffs.len() + 1];
            for (k, c) in coeffs.iter().enumerate() {
                next[k + 1] = next[k + 1].clone() + c.clone();
                next[k] = next[k].clone() - Scalar::from_int(i) * c.clone();
            }
            coeffs = next;
        }
        let d = weights.len();
        let lower: Vec<Scalar> = (0..d).map(|k| -coeffs[k].clone()).collect();
        HeckeData {
            weights,
            lower,
            red_memo: RwLock::new(HashMap::new()),
            prod_memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn d(&self) -> usize {
        self.weights.len()
    }

    pub fn spec_string(&self) -> String {
        let mut parts = vec![self.d().to_string()];
        parts.extend(self.weights.iter().map(|w| w.to_string()));
        format!("hecke:{}", parts.join(","))
    }

    fn word(exps: Vec<u8>, p: Vec<u8>) -> Word {
        Word::Hecke { exps, perm: p }
    }

    pub fn one_word(&self, n: usize) -> Word {
        Self::word(vec![0; n], perm::identity(n))
    }

    /// Left-multiply the generator s_i (1-based) onto an element in
    /// free normal order (polynomial left of permutation), without
    /// cyclotomic reduction.
    fn left_mul_gen(&self, i: usize, elem: &AlgebraElement) -> AlgebraElement {
        let n = elem.level();
        let mut out = AlgebraElement::zero(n);
        let si = perm::adjacent(n, i);
        for (w, c) in elem.terms() {
            let Word::Hecke { exps, perm: p } = w else {
                panic!("hecke element expected")
            };
            let a = exps[i - 1];
            let b = exps[i];
            let mut swapped = exps.clone();
            swapped.swap(i - 1, i);
            out.add_term(Self::word(swapped, perm::compose(&si, p)), c.clone());
            // divided-difference correction
            if a > b {
                for q in b..a {
                    let mut e2 = exps.clone();
                    e2[i - 1] = q;
                    e2[i] = a + b - 1 - q;
                    out.add_term(Self::word(e2, p.clone()), -c.clone());
                }
            } else if b > a {
                for q in a..b {
                    let mut e2 = exps.clone();
                    e2[i - 1] = q;
                    e2[i] = a + b - 1 - q;
                    out.add_term(Self::word(e2, p.clone()), c.clone());
                }
            }
        }
        out
    }

    fn right_mul_perm(elem: &AlgebraElement, tau: &[u8]) -> AlgebraElement {
        let mut out = AlgebraElement::zero(elem.level());
        for (w, c) in elem.terms() {
            let Word::Hecke { exps, perm: p } = w else {
                panic!("hecke element expected")
            };
            out.add_term(
                Self::word(exps.clone(), perm::compose(p, tau)),
                c.clone(),
            );
        }
        out
    }

    /// Normal form of x_j^d, an element of level j with exponents < d.
    fn reducer(&self, j: usize) -> AlgebraElement {
        if let Some(r) = self.red_memo.read().unwrap().get(&j) {
            return r.clone();
        }
        let d = self.d();
        let value = if j == 1 {
            AlgebraElement::from_terms(
                1,
                self.lower
                    .iter()
                    .enumerate()
                    .map(|(k, c)| (Self::word(vec![k as u8], vec![0]), c.clone()))
                    .collect(),
            )
        } else {
            // x_j^d = s·x_{j-1}^d·s + s·x_{j-1}·h_{d-2} + x_{j-1}^{d-1}·s + h_{d-2}
            // with s = s_{j-1} and h_m the complete homogeneous polynomial
            // of degree m in x_{j-1}, x_j.
            let prev = self.include_raw(&self.reducer(j - 1), j);
            let s = perm::adjacent(j, j - 1);
            let mut acc = Self::right_mul_perm(&self.left_mul_gen(j - 1, &prev), &s);
            let h = |deg: i64| -> AlgebraElement {
                let mut e = AlgebraElement::zero(j);
                if deg < 0 {
                    return e;
                }
                for a in 0..=(deg as u8) {
                    let mut exps = vec![0u8; j];
                    exps[j - 2] = a;
                    exps[j - 1] = deg as u8 - a;
                    e.add_term(Self::word(exps, perm::identity(j)), Scalar::one());
                }
                e
            };
            let h_low = h(d as i64 - 2);
            let mut xh = AlgebraElement::zero(j);
            for (w, c) in h_low.terms() {
                let Word::Hecke { exps, perm: p } = w else { unreachable!() };
                let mut e2 = exps.clone();
                e2[j - 2] += 1;
                xh.add_term(Self::word(e2, p.clone()), c.clone());
            }
            acc = acc.add(&self.left_mul_gen(j - 1, &xh)).unwrap();
            let mut top = vec![0u8; j];
            top[j - 2] = d as u8 - 1;
            acc.add_term(Self::word(top, s), Scalar::one());
            acc = acc.add(&h_low).unwrap();
            acc
        };
        debug_assert!(value
            .terms()
            .all(|(w, _)| matches!(w, Word::Hecke { exps, .. } if exps.iter().all(|&e| (e as usize) < d))));
        self.red_memo.write().unwrap().insert(j, value.clone());
        value
    }

    /// Word-wise inclusion without reduction (exponents stay < d).
    fn include_raw(&self, elem: &AlgebraElement, n: usize) -> AlgebraElement {
        let mut out = AlgebraElement::zero(n);
        for (w, c) in elem.terms() {
            out.add_term(self.include_word(w, n), c.clone());
        }
        out
    }

    pub fn include_word(&self, w: &Word, n: usize) -> Word {
        let Word::Hecke { exps, perm: p } = w else {
            panic!("hecke word expected")
        };
        let mut e = exps.clone();
        let mut q = p.clone();
        while e.len() < n {
            e.push(0);
            q.push(q.len() as u8);
        }
        Self::word(e, q)
    }

    /// Rewrite all x-exponents below d using the cyclotomic relation.
    fn reduce(&self, elem: AlgebraElement) -> AlgebraElement {
        let d = self.d() as u8;
        let n = elem.level();
        let mut pending: Vec<(Word, Scalar)> =
            elem.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
        let mut out = AlgebraElement::zero(n);
        while let Some((w, c)) = pending.pop() {
            let Word::Hecke { exps, perm: p } = &w else {
                panic!("hecke word expected")
            };
            match exps.iter().rposition(|&e| e >= d) {
                None => out.add_term(w.clone(), c),
                Some(jz) => {
                    let j = jz + 1;
                    let red = self.include_raw(&self.reducer(j), n);
                    let mut rest = exps.clone();
                    rest[jz] -= d;
                    for (rw, rc) in red.terms() {
                        let Word::Hecke { exps: v, perm: pi } = rw else {
                            unreachable!()
                        };
                        let mut e2 = rest.clone();
                        for (idx, &ve) in v.iter().enumerate() {
                            e2[idx] += ve;
                        }
                        pending.push((
                            Self::word(e2, perm::compose(pi, p)),
                            c.clone() * rc.clone(),
                        ));
                    }
                }
            }
        }
        out
    }

    pub fn word_mul(&self, a: &Word, b: &Word) -> Vec<(Word, Scalar)> {
        let key = (a.clone(), b.clone());
        if let Some(hit) = self.prod_memo.read().unwrap().get(&key) {
            return hit.clone();
        }
        let (Word::Hecke { exps: m1, perm: sigma }, Word::Hecke { exps: m2, perm: tau }) =
            (a, b)
        else {
            panic!("hecke words expected")
        };
        let n = sigma.len();
        // σ·x^{m2} by peeling generators off a reduced word for σ.
        let mut t = AlgebraElement::from_terms(
            n,
            vec![(Self::word(m2.clone(), perm::identity(n)), Scalar::one())],
        );
        for &g in perm::reduced_word(sigma).iter().rev() {
            t = self.left_mul_gen(g, &t);
        }
        // x^{m1}·t·τ
        let mut shifted = AlgebraElement::zero(n);
        for (w, c) in t.terms() {
            let Word::Hecke { exps, perm: p } = w else { unreachable!() };
            let mut e2 = exps.clone();
            for (i, &mi) in m1.iter().enumerate() {
                e2[i] += mi;
            }
            shifted.add_term(Self::word(e2, perm::compose(p, tau)), c.clone());
        }
        let result = self.reduce(shifted);
        let terms: Vec<(Word, Scalar)> =
            result.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
        self.prod_memo.write().unwrap().insert(key, terms.clone());
        terms
    }

    /// Conditional expectation step: the coefficient of x_{n+1}^{d-1} in
    /// the decomposition over the lower level, word-wise on normal forms.
    pub fn e_step_word(&self, w: &Word) -> Option<(Word, Scalar)> {
        let Word::Hecke { exps, perm: p } = w else {
            panic!("hecke word expected")
        };
        let n = exps.len();
        assert!(n >= 1, "expectation below level 0");
        if p[n - 1] as usize != n - 1 || exps[n - 1] as usize != self.d() - 1 {
            return None;
        }
        Some((
            Self::word(exps[..n - 1].to_vec(), p[..n - 1].to_vec()),
            Scalar::one(),
        ))
    }

    pub fn basis(&self, n: usize) -> Vec<Word> {
        let d = self.d() as u8;
        let perms = perm::enumerate(n);
        let mut exps = vec![vec![]];
        for _ in 0..n {
            let mut next = Vec::with_capacity(exps.len() * d as usize);
            for e in &exps {
                for v in 0..d {
                    let mut e2: Vec<u8> = e.clone();
                    e2.push(v);
                    next.push(e2);
                }
            }
            exps = next;
        }
        let mut words = Vec::with_capacity(exps.len() * perms.len());
        for e in &exps {
            for p in &perms {
                words.push(Self::word(e.clone(), p.clone()));
            }
        }
        words.sort();
        words
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn elem(data: &HeckeData, exps: &[u8], p: &[u8]) -> AlgebraElement {
        AlgebraElement::from_word(Word::Hecke {
            exps: exps.to_vec(),
            perm: p.to_vec(),
        })
    }

    fn mul(data: &HeckeData, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero(a.level());
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                for (w, c) in data.word_mul(wa, wb) {
                    out.add_term(w, ca.clone() * cb.clone() * c);
                }
            }
        }
        out
    }

    #[test]
    fn defining_relation_s1_x1() {
        // s_1·x_1 = x_2·s_1 - 1 in H_2
        let data = HeckeData::new(vec![0, 1]);
        let s1 = elem(&data, &[0, 0], &[1, 0]);
        let x1 = elem(&data, &[1, 0], &[0, 1]);
        let lhs = mul(&data, &s1, &x1);
        let mut rhs = elem(&data, &[0, 1], &[1, 0]);
        rhs.add_term(
            Word::Hecke { exps: vec![0, 0], perm: vec![0, 1] },
            Scalar::from_int(-1),
        );
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn cyclotomic_relation_level_one() {
        // λ = ω_0 + ω_1: (x_1)(x_1 - 1) = 0, so x_1² = x_1.
        let data = HeckeData::new(vec![0, 1]);
        let x1 = elem(&data, &[1], &[0]);
        let sq = mul(&data, &x1, &x1);
        assert_eq!(sq, elem(&data, &[1], &[0]));
    }

    #[test]
    fn x2_reduction_matches_conjugation() {
        // x_2² reduces inside the basis; check via x_2 = s_1 x_1 s_1 + s_1.
        let data = HeckeData::new(vec![0, 0]);
        let x2 = elem(&data, &[0, 1], &[0, 1]);
        let direct = mul(&data, &x2, &x2);
        assert!(direct
            .terms()
            .all(|(w, _)| matches!(w, Word::Hecke { exps, .. } if exps.iter().all(|&e| e < 2))));
        let s1 = elem(&data, &[0, 0], &[1, 0]);
        let x1 = elem(&data, &[1, 0], &[0, 1]);
        let alt = mul(&data, &mul(&data, &s1, &x1), &s1)
            .add(&s1)
            .unwrap();
        assert_eq!(mul(&data, &alt, &alt), direct);
    }

    #[test]
    fn d1_reduces_to_group_algebra_with_shift() {
        // λ = ω_3 (d = 1): x_1 = 3, x_2 = s_1·3·s_1 + s_1 = 3 + s_1.
        let data = HeckeData::new(vec![3]);
        let x2 = elem(&data, &[0, 1], &[0, 1]);
        let reduced = data.reduce(x2);
        let mut expect = AlgebraElement::zero(2);
        expect.add_term(
            Word::Hecke { exps: vec![0, 0], perm: vec![0, 1] },
            Scalar::from_int(3),
        );
        expect.add_term(
            Word::Hecke { exps: vec![0, 0], perm: vec![1, 0] },
            Scalar::one(),
        );
        assert_eq!(reduced, expect);
    }

    #[test]
    fn basis_count_is_d_pow_n_times_factorial() {
        let data = HeckeData::new(vec![0, 1]);
        assert_eq!(data.basis(0).len(), 1);
        assert_eq!(data.basis(1).len(), 2);
        assert_eq!(data.basis(2).len(), 8);
        assert_eq!(data.basis(3).len(), 48);
    }

    #[test]
    fn commuting_x_variables() {
        let data = HeckeData::new(vec![0, 1]);
        let x1 = elem(&data, &[1, 0], &[0, 1]);
        let x2 = elem(&data, &[0, 1], &[0, 1]);
        assert_eq!(mul(&data, &x1, &x2), mul(&data, &x2, &x1));
    }
}
