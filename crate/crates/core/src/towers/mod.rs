//! Concrete free Frobenius towers: symmetric group algebras, degenerate
//! cyclotomic Hecke algebras, and wreath products over a Frobenius
//! algebra, together with their Frobenius systems, Casimir and norm
//! elements, and Jucys-Murphy elements.

pub mod frobenius;
pub mod hecke;
pub mod wreath;

use crate::algebra::{perm, AlgebraElement, Word};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Scalar};
use hecke::HeckeData;
use wreath::WreathData;

pub use frobenius::{casimir, casimir_iota, relative_norm, FrobeniusSystem};

#[derive(Clone)]
pub enum TowerKind {
    Symmetric,
    CyclotomicHecke(HeckeData),
    WreathProduct(WreathData),
}

/// A tower of algebras A_0 ⊂ A_1 ⊂ … with A_0 the ground field.
#[derive(Clone)]
pub struct Tower {
    pub kind: TowerKind,
    field: Field,
}

impl Tower {
    pub fn symmetric() -> Self {
        Tower { kind: TowerKind::Symmetric, field: Field::Rational }
    }

    pub fn hecke(weights: Vec<i64>) -> Self {
        Tower {
            kind: TowerKind::CyclotomicHecke(HeckeData::new(weights)),
            field: Field::Rational,
        }
    }

    pub fn wreath(data: WreathData) -> Self {
        let field = if data.has_gaussian_entries() {
            Field::Gaussian
        } else {
            Field::Rational
        };
        Tower { kind: TowerKind::WreathProduct(data), field }
    }

    pub fn sergeev() -> Self {
        Tower::wreath(WreathData::clifford1())
    }

    /// Parse a tower spec string: `sym`, `hecke:d,i0,i1,...`, `sergeev`,
    /// or `wreath:<file>`.
    pub fn from_spec(spec: &str) -> Result<Self> {
        if spec == "sym" {
            return Ok(Tower::symmetric());
        }
        if spec == "sergeev" {
            return Ok(Tower::sergeev());
        }
        if let Some(rest) = spec.strip_prefix("hecke:") {
            let nums: Vec<i64> = rest
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::Config(format!("bad hecke weight '{t}'")))
                })
                .collect::<Result<_>>()?;
            if nums.len() < 2 {
                return Err(Error::Config(
                    "hecke spec needs a level and that many weights: hecke:d,i0,...".into(),
                ));
            }
            let d = nums[0];
            let weights = nums[1..].to_vec();
            if d < 1 || d > 3 {
                return Err(Error::Config("hecke level d must be 1, 2 or 3".into()));
            }
            if weights.len() != d as usize {
                return Err(Error::Config(format!(
                    "hecke level {d} requires exactly {d} weight entries"
                )));
            }
            return Ok(Tower::hecke(weights));
        }
        if let Some(path) = spec.strip_prefix("wreath:") {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Config(format!("cannot read '{path}': {e}")))?;
            let data = WreathData::from_json(path, &text)?;
            return Ok(Tower::wreath(data));
        }
        Err(Error::Config(format!(
            "unknown tower spec '{spec}' (expected sym, hecke:d,..., sergeev, wreath:<file>)"
        )))
    }

    pub fn spec_string(&self) -> String {
        match &self.kind {
            TowerKind::Symmetric => "sym".into(),
            TowerKind::CyclotomicHecke(h) => h.spec_string(),
            TowerKind::WreathProduct(w) => w.name.clone(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn with_field(mut self, field: Field) -> Result<Self> {
        if field == Field::Rational {
            if let TowerKind::WreathProduct(w) = &self.kind {
                if w.has_gaussian_entries() {
                    return Err(Error::Config(
                        "wreath data has Gaussian entries; field q is impossible".into(),
                    ));
                }
            }
        }
        self.field = field;
        Ok(self)
    }

    pub fn dim(&self, n: usize) -> usize {
        let fact: usize = (1..=n).product();
        match &self.kind {
            TowerKind::Symmetric => fact,
            TowerKind::CyclotomicHecke(h) => h.d().pow(n as u32) * fact,
            TowerKind::WreathProduct(w) => w.f_dim().pow(n as u32) * fact,
        }
    }

    /// Normal-form basis of level n in canonical (sorted) order.
    pub fn basis(&self, n: usize) -> Vec<Word> {
        match &self.kind {
            TowerKind::Symmetric => perm::enumerate(n).into_iter().map(Word::Perm).collect(),
            TowerKind::CyclotomicHecke(h) => h.basis(n),
            TowerKind::WreathProduct(w) => w.basis(n),
        }
    }

    pub fn one(&self, n: usize) -> AlgebraElement {
        match &self.kind {
            TowerKind::Symmetric => AlgebraElement::from_word(Word::Perm(perm::identity(n))),
            TowerKind::CyclotomicHecke(h) => AlgebraElement::from_word(h.one_word(n)),
            TowerKind::WreathProduct(w) => w.one(n),
        }
    }

    pub fn word_mul(&self, a: &Word, b: &Word) -> Vec<(Word, Scalar)> {
        debug_assert_eq!(a.level(), b.level());
        match &self.kind {
            TowerKind::Symmetric => {
                let (Word::Perm(p), Word::Perm(q)) = (a, b) else {
                    panic!("permutation words expected")
                };
                vec![(Word::Perm(perm::compose(p, q)), Scalar::one())]
            }
            TowerKind::CyclotomicHecke(h) => h.word_mul(a, b),
            TowerKind::WreathProduct(w) => w.word_mul(a, b),
        }
    }

    /// Basis-word products expand into single words with unit coefficient.
    /// True for the symmetric tower, where a cheap convolution shortcut
    /// applies when extracting single coefficients of products.
    pub fn group_like(&self) -> bool {
        matches!(self.kind, TowerKind::Symmetric)
    }

    pub fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        if a.level() != b.level() {
            return Err(Error::LevelMismatch(format!(
                "multiply at levels {} and {}",
                a.level(),
                b.level()
            )));
        }
        let mut out = AlgebraElement::zero(a.level());
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                for (w, c) in self.word_mul(wa, wb) {
                    out.add_term(w, ca.clone() * cb.clone() * c);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_many(&self, factors: &[&AlgebraElement]) -> Result<AlgebraElement> {
        let mut acc = factors[0].clone();
        for f in &factors[1..] {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    /// Canonical embedding A_k → A_n, word-wise on normal forms.
    pub fn include(&self, a: &AlgebraElement, n: usize) -> Result<AlgebraElement> {
        if a.level() > n {
            return Err(Error::LevelMismatch(format!(
                "cannot include level {} into level {}",
                a.level(),
                n
            )));
        }
        if a.level() == n {
            return Ok(a.clone());
        }
        let mut out = AlgebraElement::zero(n);
        for (w, c) in a.terms() {
            match &self.kind {
                TowerKind::Symmetric => {
                    let Word::Perm(p) = w else { panic!("permutation word expected") };
                    let mut q = p.clone();
                    while q.len() < n {
                        q.push(q.len() as u8);
                    }
                    out.add_term(Word::Perm(q), c.clone());
                }
                TowerKind::CyclotomicHecke(h) => {
                    out.add_term(h.include_word(w, n), c.clone());
                }
                TowerKind::WreathProduct(wd) => {
                    let inc = wd.include_word(w, n);
                    for (iw, ic) in inc.terms() {
                        out.add_term(iw.clone(), ic.clone() * c.clone());
                    }
                }
            }
        }
        Ok(out)
    }

    /// One conditional-expectation step E_{n,n-1} applied to a word.
    fn e_step_word(&self, w: &Word) -> Option<(Word, Scalar)> {
        match &self.kind {
            TowerKind::Symmetric => {
                let Word::Perm(p) = w else { panic!("permutation word expected") };
                let n = p.len();
                if p[n - 1] as usize == n - 1 {
                    Some((Word::Perm(p[..n - 1].to_vec()), Scalar::one()))
                } else {
                    None
                }
            }
            TowerKind::CyclotomicHecke(h) => h.e_step_word(w),
            TowerKind::WreathProduct(wd) => wd.e_step_word(w),
        }
    }

    /// Conditional expectation E_{n,lo}: composition of the one-step maps.
    pub fn expectation(&self, a: &AlgebraElement, lo: usize) -> Result<AlgebraElement> {
        if lo > a.level() {
            return Err(Error::LevelMismatch(format!(
                "expectation from level {} down to {}",
                a.level(),
                lo
            )));
        }
        let mut cur = a.clone();
        while cur.level() > lo {
            let mut next = AlgebraElement::zero(cur.level() - 1);
            for (w, c) in cur.terms() {
                if let Some((w2, c2)) = self.e_step_word(w) {
                    next.add_term(w2, c.clone() * c2);
                }
            }
            cur = next;
        }
        Ok(cur)
    }

    /// E_{n,0} as a scalar (A_0 is the ground field).
    pub fn expectation_scalar(&self, a: &AlgebraElement) -> Result<Scalar> {
        let e = self.expectation(a, 0)?;
        let value = e
            .terms()
            .next()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Scalar::zero);
        Ok(value)
    }

    /// Algebra generators of level n (used by centrality and commutant
    /// computations).
    pub fn generators(&self, n: usize) -> Vec<AlgebraElement> {
        let mut gens = Vec::new();
        match &self.kind {
            TowerKind::Symmetric => {
                for i in 1..n {
                    gens.push(AlgebraElement::from_word(Word::Perm(perm::adjacent(n, i))));
                }
            }
            TowerKind::CyclotomicHecke(h) => {
                if n >= 1 {
                    let mut exps = vec![0u8; n];
                    exps[0] = 1;
                    if h.d() > 1 {
                        gens.push(AlgebraElement::from_word(Word::Hecke {
                            exps,
                            perm: perm::identity(n),
                        }));
                    }
                }
                for i in 1..n {
                    gens.push(AlgebraElement::from_word(Word::Hecke {
                        exps: vec![0u8; n],
                        perm: perm::adjacent(n, i),
                    }));
                }
            }
            TowerKind::WreathProduct(w) => {
                if n >= 1 {
                    for k in 0..w.f_dim() {
                        gens.push(w.slot_element(n, 0, k));
                    }
                }
                for i in 1..n {
                    let mut sw = AlgebraElement::zero(n);
                    for (uw, uc) in w.one(n).terms() {
                        let Word::Wreath { factors, .. } = uw else { unreachable!() };
                        sw.add_term(
                            Word::Wreath {
                                factors: factors.clone(),
                                perm: perm::adjacent(n, i),
                            },
                            uc.clone(),
                        );
                    }
                    gens.push(sw);
                }
            }
        }
        gens
    }

    /// The distinguished relative Jucys-Murphy element of level n.
    pub fn jucys_murphy(&self, n: usize) -> Result<AlgebraElement> {
        if n < 1 {
            return Err(Error::Config("Jucys-Murphy elements start at level 1".into()));
        }
        let jm = match &self.kind {
            TowerKind::Symmetric => {
                let mut e = AlgebraElement::zero(n);
                for i in 0..n - 1 {
                    e.add_term(Word::Perm(perm::transposition(n, i, n - 1)), Scalar::one());
                }
                e
            }
            TowerKind::CyclotomicHecke(_) => {
                let mut exps = vec![0u8; n];
                exps[n - 1] = 1;
                // For d = 1 the generator itself reduces; normalize through
                // a multiplication by one.
                let x = AlgebraElement::from_word(Word::Hecke {
                    exps,
                    perm: perm::identity(n),
                });
                self.mul(&self.one(n), &x)?
            }
            TowerKind::WreathProduct(w) => {
                let mut e = AlgebraElement::zero(n);
                for i in 0..n - 1 {
                    // t_{i,n}·(i,n) with t over the designated dual pair of F
                    let mut t = AlgebraElement::zero(n);
                    for k in 0..w.f_dim() {
                        let a = w.slot_element(n, i, w.dual[k]);
                        let b = w.slot_element(n, n - 1, w.dual_hat[k]);
                        t = t.add(&self.mul(&a, &b)?)?;
                    }
                    let mut swap = AlgebraElement::zero(n);
                    for (uw, uc) in w.one(n).terms() {
                        let Word::Wreath { factors, .. } = uw else { unreachable!() };
                        swap.add_term(
                            Word::Wreath {
                                factors: factors.clone(),
                                perm: perm::transposition(n, i, n - 1),
                            },
                            uc.clone(),
                        );
                    }
                    e = e.add(&self.mul(&t, &swap)?)?;
                }
                e
            }
        };
        // Assumption (a): the element centralizes the previous level.
        self.check_centralizes(&jm, n - 1)?;
        Ok(jm)
    }

    /// Element carried by a bare permutation: the permutation word with
    /// trivial polynomial/tensor part (the unit expanded for wreath data).
    pub fn perm_element(&self, n: usize, p: Vec<u8>) -> AlgebraElement {
        match &self.kind {
            TowerKind::Symmetric => AlgebraElement::from_word(Word::Perm(p)),
            TowerKind::CyclotomicHecke(_) => AlgebraElement::from_word(Word::Hecke {
                exps: vec![0; n],
                perm: p,
            }),
            TowerKind::WreathProduct(w) => {
                let mut out = AlgebraElement::zero(n);
                for (uw, uc) in w.one(n).terms() {
                    let Word::Wreath { factors, .. } = uw else { unreachable!() };
                    out.add_term(
                        Word::Wreath { factors: factors.clone(), perm: p.clone() },
                        uc.clone(),
                    );
                }
                out
            }
        }
    }

    /// A mutually commuting family with ground-field spectra, used to
    /// split matrix blocks into primitive pieces: the distinguished
    /// polynomial generators for the Hecke tower, permutation
    /// Jucys-Murphy sums otherwise.
    pub fn splitting_pool(&self, n: usize) -> Vec<AlgebraElement> {
        let mut pool = Vec::new();
        match &self.kind {
            TowerKind::CyclotomicHecke(_) => {
                for k in 1..=n {
                    let mut exps = vec![0u8; n];
                    exps[k - 1] = 1;
                    let x = AlgebraElement::from_word(Word::Hecke {
                        exps,
                        perm: perm::identity(n),
                    });
                    // normalize through the cyclotomic relation (d = 1 case)
                    pool.push(self.mul(&self.one(n), &x).expect("same level"));
                }
            }
            _ => {
                for k in 2..=n {
                    let mut e = AlgebraElement::zero(n);
                    for i in 0..k - 1 {
                        e = e
                            .add(&self.perm_element(n, perm::transposition(n, i, k - 1)))
                            .expect("same level");
                    }
                    pool.push(e);
                }
            }
        }
        pool
    }

    /// Verify that `a` (at level n) commutes with the embedded A_k.
    pub fn check_centralizes(&self, a: &AlgebraElement, k: usize) -> Result<()> {
        for g in self.generators(k) {
            let gi = self.include(&g, a.level())?;
            let left = self.mul(&gi, a)?;
            let right = self.mul(a, &gi)?;
            if left != right {
                return Err(Error::AssumptionAViolated(format!(
                    "element does not commute with a level-{k} generator"
                )));
            }
        }
        Ok(())
    }

    /// Left-multiplication matrix of `a` in the normal-form basis.
    pub fn left_matrix(
        &self,
        a: &AlgebraElement,
        basis: &[Word],
        index: &std::collections::BTreeMap<Word, usize>,
    ) -> crate::exactlin::Matrix {
        let dim = basis.len();
        let mut m = crate::exactlin::Matrix::zero(dim, dim);
        for (j, w) in basis.iter().enumerate() {
            for (aw, ac) in a.terms() {
                for (pw, pc) in self.word_mul(aw, w) {
                    let i = index[&pw];
                    let v = m.at(i, j).clone() + ac.clone() * pc;
                    m.set(i, j, v);
                }
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn index(basis: &[Word]) -> BTreeMap<Word, usize> {
        basis.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect()
    }

    #[test]
    fn symmetric_group_relations() {
        let t = Tower::symmetric();
        let s1 = AlgebraElement::from_word(Word::Perm(perm::adjacent(3, 1)));
        let sq = t.mul(&s1, &s1).unwrap();
        assert_eq!(sq, t.one(3));
    }

    #[test]
    fn include_is_homomorphism_exhaustive_small() {
        for tower in [Tower::symmetric(), Tower::hecke(vec![0, 1]), Tower::sergeev()] {
            let n = 2;
            let basis = tower.basis(n);
            for a in &basis {
                for b in &basis {
                    let ia = tower
                        .include(&AlgebraElement::from_word(a.clone()), n + 1)
                        .unwrap();
                    let ib = tower
                        .include(&AlgebraElement::from_word(b.clone()), n + 1)
                        .unwrap();
                    let prod_then_include = tower
                        .include(
                            &tower
                                .mul(
                                    &AlgebraElement::from_word(a.clone()),
                                    &AlgebraElement::from_word(b.clone()),
                                )
                                .unwrap(),
                            n + 1,
                        )
                        .unwrap();
                    let include_then_prod = tower.mul(&ia, &ib).unwrap();
                    assert_eq!(prod_then_include, include_then_prod);
                }
            }
        }
    }

    #[test]
    fn associativity_on_random_triples() {
        use crate::coherent::sample::SplitMix64;
        for tower in [Tower::symmetric(), Tower::hecke(vec![0, 0]), Tower::sergeev()] {
            let n = 3;
            let basis = tower.basis(n);
            let mut rng = SplitMix64::new(17);
            for _ in 0..20 {
                let pick = |r: &mut SplitMix64| {
                    AlgebraElement::from_word(
                        basis[(r.next_u64() % basis.len() as u64) as usize].clone(),
                    )
                };
                let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
                let left = tower.mul(&tower.mul(&a, &b).unwrap(), &c).unwrap();
                let right = tower.mul(&a, &tower.mul(&b, &c).unwrap()).unwrap();
                assert_eq!(left, right);
            }
        }
    }

    #[test]
    fn unitality() {
        for tower in [Tower::symmetric(), Tower::hecke(vec![0, 1]), Tower::sergeev()] {
            let n = 2;
            let one = tower.one(n);
            for w in tower.basis(n) {
                let a = AlgebraElement::from_word(w);
                assert_eq!(tower.mul(&one, &a).unwrap(), a);
                assert_eq!(tower.mul(&a, &one).unwrap(), a);
            }
        }
    }

    #[test]
    fn regular_representation_identity_and_relations() {
        let t = Tower::symmetric();
        let basis = t.basis(3);
        let idx = index(&basis);
        let one = t.left_matrix(&t.one(3), &basis, &idx);
        assert_eq!(one, crate::exactlin::Matrix::identity(6));
        let s1 = AlgebraElement::from_word(Word::Perm(perm::adjacent(3, 1)));
        let m = t.left_matrix(&s1, &basis, &idx);
        assert_eq!(m.mul(&m), crate::exactlin::Matrix::identity(6));
    }

    #[test]
    fn hecke_dimension_formula() {
        let t = Tower::hecke(vec![0, 1]);
        for n in 0..=3 {
            assert_eq!(t.basis(n).len(), t.dim(n));
            assert_eq!(t.dim(n), 2usize.pow(n as u32) * (1..=n).product::<usize>());
        }
    }

    #[test]
    fn symmetric_jm_elements() {
        let t = Tower::symmetric();
        assert!(t.jucys_murphy(1).unwrap().is_zero());
        let j3 = t.jucys_murphy(3).unwrap();
        let mut expect = AlgebraElement::zero(3);
        expect.add_term(Word::Perm(perm::transposition(3, 0, 2)), Scalar::one());
        expect.add_term(Word::Perm(perm::transposition(3, 1, 2)), Scalar::one());
        assert_eq!(j3, expect);
    }

    #[test]
    fn sergeev_jm_matches_clifford_formula() {
        // J_n = Σ (1 + c_i c_n)(i,n)
        let t = Tower::sergeev();
        let TowerKind::WreathProduct(w) = &t.kind else { unreachable!() };
        let n = 3;
        let jm = t.jucys_murphy(n).unwrap();
        let mut expect = AlgebraElement::zero(n);
        for i in 0..n - 1 {
            let ci = w.slot_element(n, i, 1);
            let cn = w.slot_element(n, n - 1, 1);
            let t_el = t.one(n).add(&t.mul(&ci, &cn).unwrap()).unwrap();
            let swap = AlgebraElement::from_word(Word::Wreath {
                factors: vec![0; n],
                perm: perm::transposition(n, i, n - 1),
            });
            expect = expect.add(&t.mul(&t_el, &swap).unwrap()).unwrap();
        }
        assert_eq!(jm, expect);
    }

    #[test]
    fn hecke_jm_commutes_with_lower_level() {
        let t = Tower::hecke(vec![0, 1]);
        let x3 = t.jucys_murphy(3).unwrap();
        // commutator with s_1 vanishes in H_3
        let s1 = AlgebraElement::from_word(Word::Hecke {
            exps: vec![0, 0, 0],
            perm: perm::adjacent(3, 1),
        });
        assert_eq!(t.mul(&x3, &s1).unwrap(), t.mul(&s1, &x3).unwrap());
    }

    #[test]
    fn expectation_on_symmetric_words() {
        let t = Tower::symmetric();
        let s2 = AlgebraElement::from_word(Word::Perm(perm::adjacent(3, 2)));
        assert!(t.expectation(&s2, 2).unwrap().is_zero());
        let s1 = AlgebraElement::from_word(Word::Perm(perm::adjacent(3, 1)));
        assert_eq!(
            t.expectation(&s1, 2).unwrap(),
            AlgebraElement::from_word(Word::Perm(perm::adjacent(2, 1)))
        );
        assert_eq!(t.expectation_scalar(&t.one(3)).unwrap(), Scalar::one());
        assert_eq!(t.expectation_scalar(&s1).unwrap(), Scalar::zero());
    }

    #[test]
    fn spec_parsing() {
        assert!(Tower::from_spec("sym").is_ok());
        assert!(Tower::from_spec("hecke:2,0,1").is_ok());
        assert!(Tower::from_spec("hecke:2,0").is_err());
        assert!(Tower::from_spec("hecke:4,0,0,0,0").is_err());
        assert!(Tower::from_spec("sergeev").is_ok());
        assert!(Tower::from_spec("nonsense").is_err());
    }
}
