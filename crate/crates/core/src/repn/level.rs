//! Per-level data: indexed basis, regular trace vector, Jacobson radical
//! and the semisimple quotient with its own trace vector.

use crate::algebra::{AlgebraElement, Word};
use crate::error::{Error, Result};
use crate::exactlin::{kernel_basis, Matrix, Scalar, SpanBuilder};
use crate::exec;
use crate::towers::Tower;
use std::collections::BTreeMap;

pub struct LevelData {
    pub n: usize,
    pub dim: usize,
    pub basis: Vec<Word>,
    pub index: BTreeMap<Word, usize>,
    /// Tr of left multiplication by each basis word on the level.
    pub word_traces: Vec<Scalar>,
    /// Echelonized radical, in word coordinates.
    pub radical: SpanBuilder,
    pub radical_elements: Vec<AlgebraElement>,
    /// Smallest m with J^m = 0 (1 when the radical vanishes).
    pub nilpotency_index: usize,
    /// Word indices representing the quotient basis (radical complement).
    pub quotient_words: Vec<usize>,
    /// Tr of left multiplication on the quotient, per quotient word.
    pub quotient_traces: Vec<Scalar>,
}

impl LevelData {
    pub fn build(tower: &Tower, n: usize) -> Result<LevelData> {
        let basis = tower.basis(n);
        let dim = basis.len();
        let index: BTreeMap<Word, usize> = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, w)| (w, i))
            .collect();

        // Regular trace of each basis word: Tr(L_w) = Σ_u coeff_u(w·u).
        let word_traces: Vec<Scalar> = exec::map_indexed(dim, |i| {
            let mut acc = Scalar::zero();
            for u in &basis {
                for (pw, pc) in tower.word_mul(&basis[i], u) {
                    if &pw == u {
                        acc += pc;
                    }
                }
            }
            acc
        });

        // Radical of the trace form (a,b) ↦ Tr(L_{a·b}).
        let gram_rows: Vec<Vec<Scalar>> = exec::map_indexed(dim, |i| {
            let mut row = vec![Scalar::zero(); dim];
            for (j, u) in basis.iter().enumerate() {
                let mut acc = Scalar::zero();
                for (pw, pc) in tower.word_mul(&basis[i], u) {
                    acc += pc * word_traces[index[&pw]].clone();
                }
                row[j] = acc;
            }
            row
        });
        let gram = Matrix::from_rows(gram_rows);
        let kernel = kernel_basis(&gram);
        let mut radical = SpanBuilder::new(dim);
        for v in kernel {
            radical.insert(v);
        }
        let radical_elements: Vec<AlgebraElement> = radical
            .basis()
            .iter()
            .map(|v| AlgebraElement::from_vector(n, &basis, v))
            .collect();

        let quotient_words: Vec<usize> = {
            let pivots = radical.pivots();
            (0..dim).filter(|i| !pivots.contains(i)).collect()
        };

        let mut data = LevelData {
            n,
            dim,
            basis,
            index,
            word_traces,
            radical,
            radical_elements,
            nilpotency_index: 1,
            quotient_words,
            quotient_traces: Vec::new(),
        };

        data.nilpotency_index = data.verify_radical_nilpotent(tower)?;
        data.quotient_traces = data.compute_quotient_traces(tower);
        data.verify_quotient_semisimple(tower)?;
        Ok(data)
    }

    /// Power up the radical until it vanishes; fails when it stabilizes
    /// without vanishing (the kernel of the trace form would not be the
    /// radical, which cannot happen in characteristic zero).
    fn verify_radical_nilpotent(&self, tower: &Tower) -> Result<usize> {
        if self.radical.rank() == 0 {
            return Ok(1);
        }
        let mut current = self.radical_elements.clone();
        let mut power = 1;
        while !current.is_empty() {
            if power > self.dim {
                return Err(Error::InvariantFailure(format!(
                    "radical at level {} is not nilpotent",
                    self.n
                )));
            }
            let mut span = SpanBuilder::new(self.dim);
            let mut next = Vec::new();
            for a in &current {
                for b in &self.radical_elements {
                    let p = tower.mul(a, b)?;
                    let v = p.to_vector(&self.index, self.dim);
                    if span.insert(v.clone()) {
                        next.push(AlgebraElement::from_vector(self.n, &self.basis, &v));
                    }
                }
            }
            current = next;
            power += 1;
        }
        Ok(power)
    }

    fn compute_quotient_traces(&self, tower: &Tower) -> Vec<Scalar> {
        if self.radical.rank() == 0 {
            return self
                .quotient_words
                .iter()
                .map(|&i| self.word_traces[i].clone())
                .collect();
        }
        exec::map_slice(&self.quotient_words, |&wi| {
            let mut acc = Scalar::zero();
            for &qj in &self.quotient_words {
                let prod = tower
                    .mul(
                        &AlgebraElement::from_word(self.basis[wi].clone()),
                        &AlgebraElement::from_word(self.basis[qj].clone()),
                    )
                    .expect("same level");
                let red = self.reduce(&prod);
                acc += red.coeff(&self.basis[qj]);
            }
            acc
        })
    }

    /// The trace form of the quotient must be nondegenerate.
    fn verify_quotient_semisimple(&self, tower: &Tower) -> Result<()> {
        if self.radical.rank() == 0 {
            // The quotient is the level itself; its radical was just computed.
            return Ok(());
        }
        let q = self.quotient_words.len();
        let mut gram = Matrix::zero(q, q);
        for (a, &wa) in self.quotient_words.iter().enumerate() {
            for (b, &wb) in self.quotient_words.iter().enumerate() {
                let prod = tower.mul(
                    &AlgebraElement::from_word(self.basis[wa].clone()),
                    &AlgebraElement::from_word(self.basis[wb].clone()),
                )?;
                gram.set(a, b, self.qtrace_reduced(&self.reduce(&prod)));
            }
        }
        if crate::exactlin::rank(&gram) != q {
            return Err(Error::InvariantFailure(format!(
                "quotient at level {} still has a radical",
                self.n
            )));
        }
        Ok(())
    }

    /// Canonical representative modulo the radical (supported on quotient
    /// words).
    pub fn reduce(&self, elem: &AlgebraElement) -> AlgebraElement {
        if self.radical.rank() == 0 {
            return elem.clone();
        }
        let v = elem.to_vector(&self.index, self.dim);
        let r = self.radical.reduce(v);
        AlgebraElement::from_vector(self.n, &self.basis, &r)
    }

    /// Multiply and reduce: the product in the quotient algebra.
    pub fn quot_mul(&self, tower: &Tower, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        Ok(self.reduce(&tower.mul(a, b)?))
    }

    /// Regular trace of an arbitrary element (linear in the element).
    pub fn trace(&self, elem: &AlgebraElement) -> Scalar {
        let mut acc = Scalar::zero();
        for (w, c) in elem.terms() {
            acc += c * &self.word_traces[self.index[w]];
        }
        acc
    }

    /// Trace on the quotient algebra of an already reduced element.
    pub fn qtrace_reduced(&self, reduced: &AlgebraElement) -> Scalar {
        let mut acc = Scalar::zero();
        for (w, c) in reduced.terms() {
            let wi = self.index[w];
            let qpos = self
                .quotient_words
                .binary_search(&wi)
                .expect("reduced element supported on quotient words");
            acc += c * &self.quotient_traces[qpos];
        }
        acc
    }

    pub fn qtrace(&self, elem: &AlgebraElement) -> Scalar {
        self.qtrace_reduced(&self.reduce(elem))
    }

    pub fn quotient_dim(&self) -> usize {
        self.quotient_words.len()
    }

    /// Joint kernel of x ↦ g·x − x·g over the given elements, inside the
    /// quotient (when `in_quotient`) or the full level. Returns an
    /// echelonized element basis of the commutant.
    pub fn commutant(
        &self,
        tower: &Tower,
        gens: &[AlgebraElement],
        in_quotient: bool,
    ) -> Result<Vec<AlgebraElement>> {
        // Working basis: elements spanning the ambient space.
        let ambient: Vec<AlgebraElement> = if in_quotient {
            self.quotient_words
                .iter()
                .map(|&i| AlgebraElement::from_word(self.basis[i].clone()))
                .collect()
        } else {
            self.basis
                .iter()
                .map(|w| AlgebraElement::from_word(w.clone()))
                .collect()
        };
        let mut current = ambient;
        for g in gens {
            let gi = tower.include(g, self.n)?;
            // Matrix of v ↦ g·v − v·g on the current span, in word coords.
            let cols: Vec<Vec<Scalar>> = exec::map_slice(&current, |v| {
                let gv = tower.mul(&gi, v).expect("same level");
                let vg = tower.mul(v, &gi).expect("same level");
                let mut d = gv.sub(&vg).expect("same level");
                if in_quotient {
                    d = self.reduce(&d);
                }
                d.to_vector(&self.index, self.dim)
            });
            let m = Matrix::from_fn(self.dim, current.len(), |i, j| cols[j][i].clone());
            let kernel = kernel_basis(&m);
            let mut next = Vec::with_capacity(kernel.len());
            for coords in kernel {
                let mut e = AlgebraElement::zero(self.n);
                for (j, c) in coords.iter().enumerate() {
                    if !c.is_zero() {
                        e = e.add(&current[j].scale(c))?;
                    }
                }
                next.push(e);
            }
            current = next;
            if current.is_empty() {
                break;
            }
        }
        // Echelonize for determinism.
        let mut span = SpanBuilder::new(self.dim);
        for e in &current {
            span.insert(e.to_vector(&self.index, self.dim));
        }
        Ok(span
            .basis()
            .iter()
            .map(|v| AlgebraElement::from_vector(self.n, &self.basis, v))
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_algebra_has_zero_radical() {
        let t = Tower::symmetric();
        for n in 0..=4 {
            let d = LevelData::build(&t, n).unwrap();
            assert_eq!(d.radical.rank(), 0, "S_{n} group algebra is semisimple");
            assert_eq!(d.nilpotency_index, 1);
        }
    }

    #[test]
    fn word_traces_of_group_algebra() {
        let t = Tower::symmetric();
        let d = LevelData::build(&t, 3).unwrap();
        // Tr(L_g) = |G| iff g = identity, else 0.
        for (i, w) in d.basis.iter().enumerate() {
            let expect = if w == &Word::Perm(vec![0, 1, 2]) {
                Scalar::from_int(6)
            } else {
                Scalar::zero()
            };
            assert_eq!(d.word_traces[i], expect);
        }
    }

    #[test]
    fn dual_numbers_level_one_radical() {
        let t = Tower::wreath(crate::towers::wreath::WreathData::dual_numbers());
        let d = LevelData::build(&t, 1).unwrap();
        assert_eq!(d.radical.rank(), 1);
        assert_eq!(d.nilpotency_index, 2);
        // the radical is spanned by ε
        let eps = d.radical_elements[0].clone();
        let prod = t.mul(&eps, &eps).unwrap();
        assert!(prod.is_zero());
    }

    #[test]
    fn hecke_2w0_level_2_has_radical() {
        let t = Tower::hecke(vec![0, 0]);
        let d = LevelData::build(&t, 2).unwrap();
        assert!(d.radical.rank() > 0);
        assert_eq!(d.quotient_dim() + d.radical.rank(), d.dim);
    }

    #[test]
    fn center_of_symmetric_level_three() {
        let t = Tower::symmetric();
        let d = LevelData::build(&t, 3).unwrap();
        let z = d.commutant(&t, &t.generators(3), true).unwrap();
        // class sums: 3 conjugacy classes
        assert_eq!(z.len(), 3);
        for e in &z {
            for g in t.generators(3) {
                assert_eq!(t.mul(&g, e).unwrap(), t.mul(e, &g).unwrap());
            }
        }
    }

    #[test]
    fn centralizer_of_lower_level() {
        let t = Tower::symmetric();
        let d = LevelData::build(&t, 3).unwrap();
        let z = d.commutant(&t, &t.generators(2), false).unwrap();
        // Z(C[S_3], C[S_2]) has dimension 4 (orbit count of S_2-conjugation)
        assert_eq!(z.len(), 4);
    }
}
