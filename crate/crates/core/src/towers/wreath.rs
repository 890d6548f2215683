//! Wreath products F^{⊗n} ⋊ S_n over a finite-dimensional Frobenius
//! (super)algebra F given by structure constants. The ℤ₂-grading enters
//! through sign rules: superpermutation of tensor factors, Koszul signs in
//! slotwise products, and the parity τ of the trace in the conditional
//! expectation.

use crate::algebra::{perm, AlgebraElement, Word};
use crate::error::{Error, Result};
use crate::exactlin::Scalar;
use serde::Deserialize;

#[derive(Clone)]
pub struct WreathData {
    pub name: String,
    pub basis_names: Vec<String>,
    pub parity: Vec<u8>,
    /// mult[i][j] = expansion of b_i·b_j over the basis.
    pub mult: Vec<Vec<Vec<(usize, Scalar)>>>,
    pub trace: Vec<Scalar>,
    /// Index lists of the designated dual bases B_F and B̂_F, pairwise
    /// dual under the trace: tr(B_F[k]·B̂_F[l]) = δ_{kl}.
    pub dual: Vec<usize>,
    pub dual_hat: Vec<usize>,
    /// Coordinates of the unit of F over the basis.
    pub unit: Vec<(usize, Scalar)>,
    /// Parity of the trace map.
    pub tau: u8,
}

/// On-disk schema for user-supplied Frobenius algebra data.
#[derive(Deserialize)]
struct WreathFile {
    basis: Vec<String>,
    parity: Vec<u8>,
    /// Sparse triples [k, i, j, coeff]: b_i·b_j contains coeff·b_k.
    mult: Vec<(usize, usize, usize, Scalar)>,
    trace: Vec<Scalar>,
    dual_basis: Vec<usize>,
    dual_basis_hat: Vec<usize>,
}

impl WreathData {
    pub fn from_json(name: &str, text: &str) -> Result<Self> {
        let file: WreathFile = serde_json::from_str(text)
            .map_err(|e| Error::Config(format!("wreath data: {e}")))?;
        let dim = file.basis.len();
        let check = |ok: bool, msg: &str| -> Result<()> {
            if ok {
                Ok(())
            } else {
                Err(Error::Config(format!("wreath data: {msg}")))
            }
        };
        check(dim > 0, "empty basis")?;
        check(file.parity.len() == dim, "parity length mismatch")?;
        check(file.trace.len() == dim, "trace length mismatch")?;
        check(file.parity.iter().all(|&p| p <= 1), "parity entries must be 0 or 1")?;
        let mut mult = vec![vec![Vec::new(); dim]; dim];
        for (k, i, j, c) in file.mult {
            check(k < dim && i < dim && j < dim, "structure constant index out of range")?;
            if !c.is_zero() {
                mult[i][j].push((k, c));
            }
        }
        let data = WreathData {
            name: name.to_string(),
            basis_names: file.basis,
            parity: file.parity,
            mult,
            trace: file.trace,
            dual: file.dual_basis,
            dual_hat: file.dual_basis_hat,
            unit: Vec::new(),
            tau: 0,
        };
        data.validated()
    }

    /// Built-in Clifford algebra Cl₁ data (the Sergeev tower). The trace
    /// is the even one with tr(1) = 1, under which the basis is self-dual;
    /// the resulting relative Jucys-Murphy elements are Σ (1 + c_i c_n)(i,n).
    pub fn clifford1() -> Self {
        WreathData {
            name: "sergeev".into(),
            basis_names: vec!["1".into(), "c".into()],
            parity: vec![0, 1],
            mult: vec![
                vec![vec![(0, Scalar::one())], vec![(1, Scalar::one())]],
                vec![vec![(1, Scalar::one())], vec![(0, Scalar::one())]],
            ],
            trace: vec![Scalar::one(), Scalar::zero()],
            dual: vec![0, 1],
            dual_hat: vec![0, 1],
            unit: Vec::new(),
            tau: 0,
        }
        .validated()
        .expect("built-in Clifford data is valid")
    }

    /// Built-in dual numbers ℚ[ε]/(ε²), an even local Frobenius algebra.
    pub fn dual_numbers() -> Self {
        WreathData {
            name: "dual-numbers".into(),
            basis_names: vec!["1".into(), "e".into()],
            parity: vec![0, 0],
            mult: vec![
                vec![vec![(0, Scalar::one())], vec![(1, Scalar::one())]],
                vec![vec![(1, Scalar::one())], vec![]],
            ],
            trace: vec![Scalar::zero(), Scalar::one()],
            dual: vec![0, 1],
            dual_hat: vec![1, 0],
            unit: Vec::new(),
            tau: 0,
        }
        .validated()
        .expect("built-in dual-number data is valid")
    }

    /// Validate structure constants and derive the unit and trace parity.
    fn validated(mut self) -> Result<Self> {
        let dim = self.basis_names.len();
        let fail = |msg: String| Error::Config(format!("wreath data '{}': {msg}", self.name));
        // Homogeneity of the product.
        for i in 0..dim {
            for j in 0..dim {
                for (k, c) in &self.mult[i][j] {
                    if !c.is_zero() && self.parity[*k] != (self.parity[i] + self.parity[j]) % 2 {
                        return Err(fail(format!(
                            "product b{i}·b{j} is not parity-homogeneous"
                        )));
                    }
                }
            }
        }
        // Unit: solve u·b_j = b_j and b_j·u = b_j for all j.
        let unit = self.solve_unit().ok_or_else(|| fail("no unit element".into()))?;
        self.unit = unit;
        // Associativity on all basis triples.
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let ab_c = self.f_mul(&self.f_basis(i), &self.f_basis(j));
                    let ab_c = self.f_mul(&ab_c, &self.f_basis(k));
                    let a_bc = self.f_mul(&self.f_basis(j), &self.f_basis(k));
                    let a_bc = self.f_mul(&self.f_basis(i), &a_bc);
                    if ab_c != a_bc {
                        return Err(fail(format!("associativity fails on ({i},{j},{k})")));
                    }
                }
            }
        }
        // Trace parity.
        let mut tau = None;
        for (b, t) in self.trace.iter().enumerate() {
            if !t.is_zero() {
                match tau {
                    None => tau = Some(self.parity[b]),
                    Some(p) if p != self.parity[b] => {
                        return Err(fail("trace is not parity-homogeneous".into()))
                    }
                    _ => {}
                }
            }
        }
        self.tau = tau.ok_or_else(|| fail("trace map is zero".into()))?;
        // Duality of the designated bases.
        if self.dual.len() != dim || self.dual_hat.len() != dim {
            return Err(fail("dual basis lists must cover the whole basis".into()));
        }
        for (k, &bi) in self.dual.iter().enumerate() {
            for (l, &bj) in self.dual_hat.iter().enumerate() {
                let prod = self.f_mul(&self.f_basis(bi), &self.f_basis(bj));
                let tr: Scalar = prod
                    .iter()
                    .enumerate()
                    .map(|(m, c)| c * &self.trace[m])
                    .fold(Scalar::zero(), |a, b| a + b);
                let expect = if k == l { Scalar::one() } else { Scalar::zero() };
                if tr != expect {
                    return Err(fail(format!(
                        "dual bases are not trace-dual at pair ({k},{l})"
                    )));
                }
            }
        }
        Ok(self)
    }

    pub fn f_dim(&self) -> usize {
        self.basis_names.len()
    }

    fn f_basis(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.f_dim()];
        v[i] = Scalar::one();
        v
    }

    /// Multiplication inside F on coordinate vectors.
    fn f_mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.f_dim()];
        for (i, ca) in a.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                for (k, c) in &self.mult[i][j] {
                    out[*k] = out[*k].clone() + ca * cb * c.clone();
                }
            }
        }
        out
    }

    fn solve_unit(&self) -> Option<Vec<(usize, Scalar)>> {
        use crate::exactlin::matrix::{solve, Matrix};
        let dim = self.f_dim();
        // Unknown u with u·b_j = b_j for all j (2·dim² equations incl. b_j·u).
        let rows = 2 * dim * dim;
        let mut m = Matrix::zero(rows, dim);
        let mut rhs = vec![Scalar::zero(); rows];
        for j in 0..dim {
            for i in 0..dim {
                // coefficient of b_k in b_i·b_j  contributes to row (j, k)
                for (k, c) in &self.mult[i][j] {
                    let r = j * dim + k;
                    let v = m.at(r, i).clone() + c.clone();
                    m.set(r, i, v);
                }
                for (k, c) in &self.mult[j][i] {
                    let r = dim * dim + j * dim + k;
                    let v = m.at(r, i).clone() + c.clone();
                    m.set(r, i, v);
                }
            }
            rhs[j * dim + j] = Scalar::one();
            rhs[dim * dim + j * dim + j] = Scalar::one();
        }
        let u = solve(&m, &rhs).ok()?;
        Some(
            u.into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        )
    }

    fn word(factors: Vec<u8>, p: Vec<u8>) -> Word {
        Word::Wreath { factors, perm: p }
    }

    /// Sign of the superpermutation action of σ on homogeneous factors:
    /// (-1) for every inversion of σ that swaps two odd factors.
    fn superperm_sign(&self, sigma: &[u8], factors: &[u8]) -> i8 {
        let n = sigma.len();
        let mut sign = 1i8;
        for i in 0..n {
            for j in (i + 1)..n {
                if sigma[i] > sigma[j]
                    && self.parity[factors[i] as usize] == 1
                    && self.parity[factors[j] as usize] == 1
                {
                    sign = -sign;
                }
            }
        }
        sign
    }

    /// Koszul sign of the slotwise product (u₁⊗…⊗u_n)(v₁⊗…⊗v_n):
    /// (-1)^{Σ_{i>j} ū_i·v̄_j}.
    fn koszul_sign(&self, u: &[u8], v: &[u8]) -> i8 {
        let mut exponent = 0u32;
        let n = u.len();
        for j in 0..n {
            if self.parity[v[j] as usize] == 1 {
                let odd_after: u32 = (j + 1..n)
                    .filter(|&i| self.parity[u[i] as usize] == 1)
                    .count() as u32;
                exponent += odd_after;
            }
        }
        if exponent % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn word_mul(&self, a: &Word, b: &Word) -> Vec<(Word, Scalar)> {
        let (Word::Wreath { factors: m1, perm: sigma }, Word::Wreath { factors: m2, perm: tau }) =
            (a, b)
        else {
            panic!("wreath words expected")
        };
        let n = sigma.len();
        // σ acting on the right tensor by superpermutation.
        let mut permuted = vec![0u8; n];
        for (i, &f) in m2.iter().enumerate() {
            permuted[sigma[i] as usize] = f;
        }
        let sp_sign = self.superperm_sign(sigma, m2);
        let k_sign = self.koszul_sign(m1, &permuted);
        let base = Scalar::from_int((sp_sign * k_sign) as i64);
        let out_perm = perm::compose(sigma, tau);
        // Cross product of slotwise expansions.
        let mut terms: Vec<(Vec<u8>, Scalar)> = vec![(Vec::with_capacity(n), base)];
        for slot in 0..n {
            let choices = &self.mult[m1[slot] as usize][permuted[slot] as usize];
            let mut next = Vec::with_capacity(terms.len() * choices.len());
            for (prefix, coeff) in &terms {
                for (k, c) in choices {
                    let mut f = prefix.clone();
                    f.push(*k as u8);
                    next.push((f, coeff.clone() * c.clone()));
                }
            }
            terms = next;
            if terms.is_empty() {
                return vec![];
            }
        }
        terms
            .into_iter()
            .map(|(f, c)| (Self::word(f, out_perm.clone()), c))
            .collect()
    }

    /// Conditional expectation step: vanishes unless the permutation fixes
    /// the last letter; otherwise applies the trace to the last factor with
    /// the sign (-1)^{τ·(parities of the remaining factors)}.
    pub fn e_step_word(&self, w: &Word) -> Option<(Word, Scalar)> {
        let Word::Wreath { factors, perm: p } = w else {
            panic!("wreath word expected")
        };
        let n = factors.len();
        assert!(n >= 1, "expectation below level 0");
        if p[n - 1] as usize != n - 1 {
            return None;
        }
        let tr = self.trace[factors[n - 1] as usize].clone();
        if tr.is_zero() {
            return None;
        }
        let mut coeff = tr;
        if self.tau == 1 {
            let odd: u32 = factors[..n - 1]
                .iter()
                .filter(|&&f| self.parity[f as usize] == 1)
                .count() as u32;
            if odd % 2 == 1 {
                coeff = -coeff;
            }
        }
        Some((
            Self::word(factors[..n - 1].to_vec(), p[..n - 1].to_vec()),
            coeff,
        ))
    }

    /// Element with the unit in every slot except `pos`, which carries b_k.
    pub fn slot_element(&self, n: usize, pos: usize, k: usize) -> AlgebraElement {
        let mut out = AlgebraElement::zero(n);
        // expand unit coordinates over the other slots
        let mut stack: Vec<(Vec<u8>, Scalar)> = vec![(Vec::new(), Scalar::one())];
        for slot in 0..n {
            let mut next = Vec::new();
            for (prefix, coeff) in &stack {
                if slot == pos {
                    let mut f = prefix.clone();
                    f.push(k as u8);
                    next.push((f, coeff.clone()));
                } else {
                    for (u, c) in &self.unit {
                        let mut f = prefix.clone();
                        f.push(*u as u8);
                        next.push((f, coeff.clone() * c.clone()));
                    }
                }
            }
            stack = next;
        }
        for (f, c) in stack {
            out.add_term(Self::word(f, perm::identity(n)), c);
        }
        out
    }

    pub fn one(&self, n: usize) -> AlgebraElement {
        let mut stack: Vec<(Vec<u8>, Scalar)> = vec![(Vec::new(), Scalar::one())];
        for _ in 0..n {
            let mut next = Vec::new();
            for (prefix, coeff) in &stack {
                for (u, c) in &self.unit {
                    let mut f = prefix.clone();
                    f.push(*u as u8);
                    next.push((f, coeff.clone() * c.clone()));
                }
            }
            stack = next;
        }
        let mut out = AlgebraElement::zero(n);
        for (f, c) in stack {
            out.add_term(Self::word(f, perm::identity(n)), c);
        }
        out
    }

    pub fn include_word(&self, w: &Word, n: usize) -> AlgebraElement {
        let Word::Wreath { factors, perm: p } = w else {
            panic!("wreath word expected")
        };
        let mut stack: Vec<(Vec<u8>, Scalar)> = vec![(factors.clone(), Scalar::one())];
        for _ in factors.len()..n {
            let mut next = Vec::new();
            for (prefix, coeff) in &stack {
                for (u, c) in &self.unit {
                    let mut f = prefix.clone();
                    f.push(*u as u8);
                    next.push((f, coeff.clone() * c.clone()));
                }
            }
            stack = next;
        }
        let mut q = p.clone();
        while q.len() < n {
            q.push(q.len() as u8);
        }
        let mut out = AlgebraElement::zero(n);
        for (f, c) in stack {
            out.add_term(Self::word(f, q.clone()), c);
        }
        out
    }

    pub fn basis(&self, n: usize) -> Vec<Word> {
        let f = self.f_dim() as u8;
        let perms = perm::enumerate(n);
        let mut tuples = vec![vec![]];
        for _ in 0..n {
            let mut next = Vec::with_capacity(tuples.len() * f as usize);
            for t in &tuples {
                for v in 0..f {
                    let mut t2: Vec<u8> = t.clone();
                    t2.push(v);
                    next.push(t2);
                }
            }
            tuples = next;
        }
        let mut words = Vec::with_capacity(tuples.len() * perms.len());
        for t in &tuples {
            for p in &perms {
                words.push(Self::word(t.clone(), p.clone()));
            }
        }
        words.sort();
        words
    }

    pub fn has_gaussian_entries(&self) -> bool {
        self.trace.iter().any(|t| !t.is_real())
            || self
                .mult
                .iter()
                .flatten()
                .flatten()
                .any(|(_, c)| !c.is_real())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mul(data: &WreathData, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
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
    fn clifford_relations() {
        let cl = WreathData::clifford1();
        let c1 = cl.slot_element(2, 0, 1);
        let c2 = cl.slot_element(2, 1, 1);
        let one = cl.one(2);
        assert_eq!(mul(&cl, &c1, &c1), one);
        assert_eq!(mul(&cl, &c2, &c2), one);
        assert_eq!(mul(&cl, &c1, &c2), mul(&cl, &c2, &c1).neg());
    }

    #[test]
    fn sergeev_twist_relation() {
        // s_1 c_1 = c_2 s_1
        let cl = WreathData::clifford1();
        let s1 = AlgebraElement::from_word(Word::Wreath {
            factors: vec![0, 0],
            perm: vec![1, 0],
        });
        let c1 = cl.slot_element(2, 0, 1);
        let c2 = cl.slot_element(2, 1, 1);
        assert_eq!(mul(&cl, &s1, &c1), mul(&cl, &c2, &s1));
    }

    #[test]
    fn dual_numbers_nilpotency() {
        let f = WreathData::dual_numbers();
        let e1 = f.slot_element(2, 0, 1);
        assert!(mul(&f, &e1, &e1).is_zero());
        let e2 = f.slot_element(2, 1, 1);
        assert_eq!(mul(&f, &e1, &e2), mul(&f, &e2, &e1));
    }

    #[test]
    fn unit_detection_rejects_unitless_data() {
        let json = r#"{
            "basis": ["a"],
            "parity": [0],
            "mult": [[0, 0, 0, "0"]],
            "trace": ["1"],
            "dual_basis": [0],
            "dual_basis_hat": [0]
        }"#;
        assert!(WreathData::from_json("bad", json).is_err());
    }

    #[test]
    fn json_roundtrip_of_dual_numbers() {
        let json = r#"{
            "basis": ["1", "e"],
            "parity": [0, 0],
            "mult": [[0,0,0,"1"], [1,0,1,"1"], [1,1,0,"1"]],
            "trace": ["0", "1"],
            "dual_basis": [0, 1],
            "dual_basis_hat": [1, 0]
        }"#;
        let data = WreathData::from_json("dual", json).unwrap();
        assert_eq!(data.unit, vec![(0, Scalar::one())]);
        assert_eq!(data.tau, 0);
    }
}
