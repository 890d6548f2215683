//! Frobenius systems of tower extensions: the conditional expectation
//! together with an explicit dual basis pair, plus the derived Casimir
//! and relative-norm elements.

use crate::algebra::{perm, AlgebraElement, Word};
use crate::error::{Error, Result};
use crate::exactlin::Scalar;
use crate::towers::{Tower, TowerKind};

/// Dual basis data for the extension A_lo ⊂ A_hi. The involution pairing
/// b ↔ b^∨ is represented by index alignment of `basis` and `dual`.
/// The Frobenius homomorphism itself is canonical per tower and applied
/// via [`Tower::expectation`].
#[derive(Clone)]
pub struct FrobeniusSystem {
    pub hi: usize,
    pub lo: usize,
    pub basis: Vec<AlgebraElement>,
    pub dual: Vec<AlgebraElement>,
}

impl FrobeniusSystem {
    pub fn size(&self) -> usize {
        self.basis.len()
    }
}

/// Element s_n·s_{n-1}·…·s_i at level n+1 (identity when i = n+1).
fn descending_cycle(n: usize, i: usize) -> Vec<u8> {
    let mut p = perm::identity(n + 1);
    for g in (i..=n).rev() {
        p = perm::compose(&p, &perm::adjacent(n + 1, g));
    }
    p
}

/// The one-step Frobenius system for A_n ⊂ A_{n+1}.
pub fn frobenius_step(tower: &Tower, n: usize) -> Result<FrobeniusSystem> {
    let hi = n + 1;
    let (basis, dual) = match &tower.kind {
        TowerKind::Symmetric => {
            let mut basis = Vec::with_capacity(n + 1);
            let mut dual = Vec::with_capacity(n + 1);
            for i in 1..=n + 1 {
                let b = descending_cycle(n, i);
                dual.push(AlgebraElement::from_word(Word::Perm(perm::inverse(&b))));
                basis.push(AlgebraElement::from_word(Word::Perm(b)));
            }
            (basis, dual)
        }
        TowerKind::CyclotomicHecke(h) => {
            let d = h.d();
            let mut basis = Vec::new();
            let mut dual = Vec::new();
            for i in 1..=n + 1 {
                let cycle = AlgebraElement::from_word(Word::Hecke {
                    exps: vec![0; n + 1],
                    perm: descending_cycle(n, i),
                });
                let cycle_inv = AlgebraElement::from_word(Word::Hecke {
                    exps: vec![0; n + 1],
                    perm: perm::inverse(descending_cycle(n, i).as_slice()),
                });
                for a in 0..d {
                    let y = tower.include(&hecke_y(tower, i, a)?, n + 1)?;
                    basis.push(tower.mul(&cycle, &y)?);
                    let mut exps = vec![0u8; n + 1];
                    exps[i - 1] = a as u8;
                    let xa = AlgebraElement::from_word(Word::Hecke {
                        exps,
                        perm: perm::identity(n + 1),
                    });
                    dual.push(tower.mul(&xa, &cycle_inv)?);
                }
            }
            (basis, dual)
        }
        TowerKind::WreathProduct(w) => {
            let mut basis = Vec::new();
            let mut dual = Vec::new();
            for i in 1..=n + 1 {
                let cycle = wreath_perm_element(w, descending_cycle(n, i));
                let cycle_inv =
                    wreath_perm_element(w, perm::inverse(descending_cycle(n, i).as_slice()));
                for k in 0..w.f_dim() {
                    let b = w.slot_element(n + 1, n, w.dual[k]);
                    basis.push(tower.mul(&b, &cycle)?);
                    let bh = w.slot_element(n + 1, n, w.dual_hat[k]);
                    dual.push(tower.mul(&cycle_inv, &bh)?);
                }
            }
            (basis, dual)
        }
    };
    let sys = FrobeniusSystem { hi, lo: n, basis, dual };
    let budget = if tower.dim(hi) <= 48 {
        VerifyBudget::Exhaustive
    } else {
        VerifyBudget::Sampled { seed: 0x5eed ^ hi as u64, count: 100 }
    };
    verify_system(tower, &sys, budget)?;
    Ok(sys)
}

fn wreath_perm_element(w: &crate::towers::wreath::WreathData, p: Vec<u8>) -> AlgebraElement {
    let n = p.len();
    let mut out = AlgebraElement::zero(n);
    for (uw, uc) in w.one(n).terms() {
        let Word::Wreath { factors, .. } = uw else { unreachable!() };
        out.add_term(Word::Wreath { factors: factors.clone(), perm: p.clone() }, uc.clone());
    }
    out
}

/// The Hecke dual-basis ingredient
/// y_{n,k} = Σ_{t=k}^{d-1} (-1)^{d-1-t} x_n^{t-k} det(E_{n,n-1}(x_n^{d+j-i}))_{i,j=1..d-1-t},
/// an element of level n (the empty determinant is 1).
fn hecke_y(tower: &Tower, n: usize, k: usize) -> Result<AlgebraElement> {
    let TowerKind::CyclotomicHecke(h) = &tower.kind else {
        panic!("hecke tower expected")
    };
    let d = h.d();
    let mut exps = vec![0u8; n];
    exps[n - 1] = 1;
    let xn = AlgebraElement::from_word(Word::Hecke { exps, perm: perm::identity(n) });
    // Powers of x_n reduced to normal form, and their expectations one
    // level down.
    let mut xpow = vec![tower.one(n)];
    for p in 1..=2 * d {
        let next = tower.mul(&xpow[p - 1], &xn)?;
        xpow.push(next);
    }
    let expect = |p: usize| -> Result<AlgebraElement> { tower.expectation(&xpow[p], n - 1) };
    let mut y = AlgebraElement::zero(n);
    for t in k..d {
        let m = d - 1 - t;
        let det = determinant_of_expectations(tower, &expect, d, m, n - 1)?;
        let sign = if (d - 1 - t) % 2 == 0 { Scalar::one() } else { -Scalar::one() };
        let term = tower.mul(&xpow[t - k], &tower.include(&det, n)?)?;
        y = y.add(&term.scale(&sign))?;
    }
    Ok(y)
}

/// det(E(x^{d+j-i}))_{i,j=1..m} by Leibniz expansion; entries commute
/// because they are central in the lower level.
fn determinant_of_expectations(
    tower: &Tower,
    entry: &dyn Fn(usize) -> Result<AlgebraElement>,
    d: usize,
    m: usize,
    level: usize,
) -> Result<AlgebraElement> {
    if m == 0 {
        return Ok(tower.one(level));
    }
    let mut det = AlgebraElement::zero(level);
    for sigma in perm::enumerate(m) {
        let mut prod = tower.one(level);
        for (r, &c) in sigma.iter().enumerate() {
            // power d + (c+1) - (r+1) = d + c - r
            let p = (d + c as usize).checked_sub(r).expect("power underflow");
            prod = tower.mul(&prod, &entry(p)?)?;
        }
        let inversions = sigma
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| sigma[i + 1..].iter().map(move |&b| (a, b)))
            .filter(|(a, b)| a > b)
            .count();
        let signed = if inversions % 2 == 0 { prod } else { prod.neg() };
        det = det.add(&signed)?;
    }
    Ok(det)
}

/// Transitive composition: systems (n,m) over (m,k) give (n,k) with
/// product bases, index-paired.
pub fn frobenius_compose(
    tower: &Tower,
    hi_sys: &FrobeniusSystem,
    lo_sys: &FrobeniusSystem,
) -> Result<FrobeniusSystem> {
    if hi_sys.lo != lo_sys.hi {
        return Err(Error::LevelMismatch(format!(
            "cannot chain systems ({},{}) and ({},{})",
            hi_sys.hi, hi_sys.lo, lo_sys.hi, lo_sys.lo
        )));
    }
    let n = hi_sys.hi;
    let mut basis = Vec::with_capacity(hi_sys.size() * lo_sys.size());
    let mut dual = Vec::with_capacity(basis.capacity());
    for lo_b in 0..lo_sys.size() {
        let inc_b = tower.include(&lo_sys.basis[lo_b], n)?;
        let inc_d = tower.include(&lo_sys.dual[lo_b], n)?;
        for hi_b in 0..hi_sys.size() {
            basis.push(tower.mul(&inc_b, &hi_sys.basis[hi_b])?);
            dual.push(tower.mul(&hi_sys.dual[hi_b], &inc_d)?);
        }
    }
    Ok(FrobeniusSystem { hi: n, lo: lo_sys.lo, basis, dual })
}

/// Identity system (n, n).
pub fn frobenius_identity(tower: &Tower, n: usize) -> FrobeniusSystem {
    FrobeniusSystem {
        hi: n,
        lo: n,
        basis: vec![tower.one(n)],
        dual: vec![tower.one(n)],
    }
}

/// C_{n,k} = Σ_b b^∨·b, central in A_n.
pub fn casimir(tower: &Tower, sys: &FrobeniusSystem) -> Result<AlgebraElement> {
    let mut c = AlgebraElement::zero(sys.hi);
    for i in 0..sys.size() {
        c = c.add(&tower.mul(&sys.dual[i], &sys.basis[i])?)?;
    }
    check_central(tower, &c, "Casimir element")?;
    Ok(c)
}

/// C^ι_{n,k} = Σ_b b·b^∨ (no centrality guarantee).
pub fn casimir_iota(tower: &Tower, sys: &FrobeniusSystem) -> Result<AlgebraElement> {
    let mut c = AlgebraElement::zero(sys.hi);
    for i in 0..sys.size() {
        c = c.add(&tower.mul(&sys.basis[i], &sys.dual[i])?)?;
    }
    Ok(c)
}

/// Relative norm N_{n,k}(c) = Σ_b b^∨·c·b, lands in the center of A_n.
pub fn relative_norm(
    tower: &Tower,
    sys: &FrobeniusSystem,
    c: &AlgebraElement,
) -> Result<AlgebraElement> {
    if c.level() != sys.hi {
        return Err(Error::LevelMismatch(format!(
            "norm argument at level {}, system at level {}",
            c.level(),
            sys.hi
        )));
    }
    let mut out = AlgebraElement::zero(sys.hi);
    for i in 0..sys.size() {
        out = out.add(&tower.mul_many(&[&sys.dual[i], c, &sys.basis[i]])?)?;
    }
    check_central(tower, &out, "relative norm")?;
    Ok(out)
}

fn check_central(tower: &Tower, a: &AlgebraElement, what: &str) -> Result<()> {
    for g in tower.generators(a.level()) {
        if tower.mul(&g, a)? != tower.mul(a, &g)? {
            return Err(Error::InvariantFailure(format!(
                "{what} fails centrality against a generator at level {}",
                a.level()
            )));
        }
    }
    Ok(())
}

/// Returns a generator witnessing non-centrality, if any.
pub fn centrality_witness(tower: &Tower, a: &AlgebraElement) -> Result<Option<AlgebraElement>> {
    for g in tower.generators(a.level()) {
        if tower.mul(&g, a)? != tower.mul(a, &g)? {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

pub enum VerifyBudget {
    Exhaustive,
    Sampled { seed: u64, count: usize },
}

/// Construction-time checks of the Frobenius system axioms:
/// duality E(b·(b')^∨) = δ, the two reproduction identities, and the
/// bimodule property of the expectation.
pub fn verify_system(tower: &Tower, sys: &FrobeniusSystem, budget: VerifyBudget) -> Result<()> {
    let expected = tower.dim(sys.hi) / tower.dim(sys.lo).max(1);
    if sys.size() != expected || sys.dual.len() != sys.basis.len() {
        return Err(Error::InvariantFailure(format!(
            "dual basis pair has size {} but the module rank is {expected}",
            sys.size()
        )));
    }
    let one = tower.one(sys.lo);
    for i in 0..sys.size() {
        for j in 0..sys.size() {
            let e = tower.expectation(&tower.mul(&sys.basis[i], &sys.dual[j])?, sys.lo)?;
            let expect = if i == j { one.clone() } else { AlgebraElement::zero(sys.lo) };
            if e != expect {
                return Err(Error::InvariantFailure(format!(
                    "duality fails at pair ({i},{j}) of system ({},{})",
                    sys.hi, sys.lo
                )));
            }
        }
    }
    let samples: Vec<AlgebraElement> = match budget {
        VerifyBudget::Exhaustive => tower
            .basis(sys.hi)
            .into_iter()
            .map(AlgebraElement::from_word)
            .collect(),
        VerifyBudget::Sampled { seed, count } => random_elements(tower, sys.hi, seed, count),
    };
    for a in &samples {
        if *a != reproduce_right(tower, sys, a)? || *a != reproduce_left(tower, sys, a)? {
            return Err(Error::InvariantFailure(format!(
                "reproduction identity fails in system ({},{})",
                sys.hi, sys.lo
            )));
        }
    }
    // Bimodule property on generators of the lower level.
    let gens = tower.generators(sys.lo);
    for g in &gens {
        let gi = tower.include(g, sys.hi)?;
        for a in samples.iter().take(8) {
            let lhs = tower.expectation(&tower.mul_many(&[&gi, a, &gi])?, sys.lo)?;
            let rhs =
                tower.mul_many(&[g, &tower.expectation(a, sys.lo)?, g])?;
            if lhs != rhs {
                return Err(Error::InvariantFailure(format!(
                    "expectation is not a bimodule map in system ({},{})",
                    sys.hi, sys.lo
                )));
            }
        }
    }
    Ok(())
}

/// Σ_b E(a·b^∨)·b
pub fn reproduce_right(
    tower: &Tower,
    sys: &FrobeniusSystem,
    a: &AlgebraElement,
) -> Result<AlgebraElement> {
    let mut out = AlgebraElement::zero(sys.hi);
    for i in 0..sys.size() {
        let coeff = tower.expectation(&tower.mul(a, &sys.dual[i])?, sys.lo)?;
        let term = tower.mul(&tower.include(&coeff, sys.hi)?, &sys.basis[i])?;
        out = out.add(&term)?;
    }
    Ok(out)
}

/// Σ_b b^∨·E(b·a)
pub fn reproduce_left(
    tower: &Tower,
    sys: &FrobeniusSystem,
    a: &AlgebraElement,
) -> Result<AlgebraElement> {
    let mut out = AlgebraElement::zero(sys.hi);
    for i in 0..sys.size() {
        let coeff = tower.expectation(&tower.mul(&sys.basis[i], a)?, sys.lo)?;
        let term = tower.mul(&sys.dual[i], &tower.include(&coeff, sys.hi)?)?;
        out = out.add(&term)?;
    }
    Ok(out)
}

/// Deterministic sparse pseudo-random elements for sampled checks.
pub fn random_elements(
    tower: &Tower,
    level: usize,
    seed: u64,
    count: usize,
) -> Vec<AlgebraElement> {
    use crate::coherent::sample::SplitMix64;
    let basis = tower.basis(level);
    let mut rng = SplitMix64::new(seed);
    (0..count)
        .map(|_| {
            let mut e = AlgebraElement::zero(level);
            let terms = 3 + (rng.next_u64() % 6) as usize;
            for _ in 0..terms {
                let w = basis[(rng.next_u64() % basis.len() as u64) as usize].clone();
                let num = (rng.next_u64() % 19) as i64 - 9;
                let den = 1 + (rng.next_u64() % 4) as i64;
                e.add_term(w, Scalar::from_ratio(if num == 0 { 1 } else { num }, den));
            }
            e
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_step_bases_are_coset_representatives() {
        let t = Tower::symmetric();
        let sys = frobenius_step(&t, 1).unwrap();
        // B_{2,1} = {s_1, 1}, self-dual
        assert_eq!(sys.size(), 2);
        let s1 = AlgebraElement::from_word(Word::Perm(vec![1, 0]));
        let one = t.one(2);
        assert!(sys.basis.contains(&s1) && sys.basis.contains(&one));
        assert_eq!(sys.basis, sys.dual);
    }

    #[test]
    fn hecke_step_level_zero_matches_known_pair() {
        // d = 2, λ = ω_i + ω_j: B_{1,0} = {y_{1,0}, y_{1,1}} = {x_1 - (i+j), 1},
        // B^∨_{1,0} = {1, x_1}.
        let t = Tower::hecke(vec![0, 1]);
        let sys = frobenius_step(&t, 0).unwrap();
        assert_eq!(sys.size(), 2);
        let x1 = AlgebraElement::from_word(Word::Hecke { exps: vec![1], perm: vec![0] });
        let y10 = x1.add(&t.one(1).scale(&Scalar::from_int(-1))).unwrap();
        assert_eq!(sys.basis[0], y10);
        assert_eq!(sys.basis[1], t.one(1));
        assert_eq!(sys.dual[0], t.one(1));
        assert_eq!(sys.dual[1], x1);
    }

    #[test]
    fn composed_system_size_multiplies() {
        let t = Tower::symmetric();
        let s32 = frobenius_step(&t, 2).unwrap();
        let s21 = frobenius_step(&t, 1).unwrap();
        let s31 = frobenius_compose(&t, &s32, &s21).unwrap();
        assert_eq!(s31.size(), 6);
        verify_system(&t, &s31, VerifyBudget::Exhaustive).unwrap();
        // composing with the identity changes nothing
        let id1 = frobenius_identity(&t, 1);
        let same = frobenius_compose(&t, &frobenius_identity(&t, 3), &s31).unwrap();
        assert_eq!(same.basis, s31.basis);
        let same2 = frobenius_compose(&t, &s31, &id1).unwrap();
        assert_eq!(same2.basis, s31.basis);
    }

    #[test]
    fn symmetric_casimir_is_index_scalar() {
        let t = Tower::symmetric();
        let s32 = frobenius_step(&t, 2).unwrap();
        let c = casimir(&t, &s32).unwrap();
        assert_eq!(c, t.one(3).scale(&Scalar::from_int(3)));
        let ci = casimir_iota(&t, &s32).unwrap();
        assert_eq!(ci, c);
    }

    #[test]
    fn expectation_of_composed_system_is_identity_coefficient() {
        // E_{3,0} of a symmetric element picks out the identity coefficient.
        let t = Tower::symmetric();
        let mut a = t.one(3).scale(&Scalar::from_int(5));
        a.add_term(Word::Perm(vec![1, 0, 2]), Scalar::from_int(7));
        assert_eq!(t.expectation_scalar(&a).unwrap(), Scalar::from_int(5));
    }

    #[test]
    fn relative_norm_definition_and_centrality() {
        let t = Tower::symmetric();
        let sys = frobenius_step(&t, 2).unwrap();
        // N(1) = C
        let n1 = relative_norm(&t, &sys, &t.one(3)).unwrap();
        assert_eq!(n1, casimir(&t, &sys).unwrap());
        // N(z) = C·z for central z (z = C itself)
        let z = casimir(&t, &sys).unwrap();
        let nz = relative_norm(&t, &sys, &z).unwrap();
        assert_eq!(nz, t.mul(&casimir(&t, &sys).unwrap(), &z).unwrap());
        // brute force against the definition for J_3
        let j3 = t.jucys_murphy(3).unwrap();
        let mut brute = AlgebraElement::zero(3);
        for i in 0..sys.size() {
            brute = brute
                .add(&t.mul_many(&[&sys.dual[i], &j3, &sys.basis[i]]).unwrap())
                .unwrap();
        }
        assert_eq!(relative_norm(&t, &sys, &j3).unwrap(), brute);
    }

    #[test]
    fn wreath_step_systems_pass_axioms() {
        for t in [Tower::sergeev(), Tower::wreath(crate::towers::wreath::WreathData::dual_numbers())] {
            for n in 0..3 {
                frobenius_step(&t, n).unwrap();
            }
        }
    }

    #[test]
    fn hecke_step_systems_pass_axioms() {
        for weights in [vec![0], vec![0, 0], vec![0, 1]] {
            let t = Tower::hecke(weights);
            for n in 0..3 {
                frobenius_step(&t, n).unwrap();
            }
        }
    }

    #[test]
    fn corrupted_dual_basis_fails_verification() {
        let t = Tower::symmetric();
        let mut sys = frobenius_step(&t, 2).unwrap();
        sys.dual.swap(0, 1);
        assert!(verify_system(&t, &sys, VerifyBudget::Exhaustive).is_err());
    }
}
