//! Exact polynomial helpers: Krylov minimal polynomials, square-free
//! reduction, and root extraction over ℚ / ℚ(i).
//!
//! Root extraction is deliberately limited. The engine only ever needs
//! eigenvalues that live in the ground field, so the strategy is: rational
//! root extraction, the quadratic formula, an even-power substitution and
//! small integer shifts. Anything that still refuses to split is reported
//! as a splitting-field failure instead of being approximated.

use crate::error::{Error, Result};
use crate::exactlin::matrix::{Matrix, SpanBuilder};
use crate::exactlin::scalar::{Field, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense polynomial with `coeffs[k]` the coefficient of t^k.
/// Trailing zeros are trimmed; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    pub coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly::new(vec![Scalar::one()])
    }

    /// t - root
    pub fn linear(root: &Scalar) -> Self {
        Poly::new(vec![-root.clone(), Scalar::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        assert!(!self.is_zero(), "degree of zero polynomial");
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &Scalar {
        self.coeffs.last().expect("zero polynomial")
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let inv = self.leading().inverse();
        Poly::new(self.coeffs.iter().map(|c| c * &inv).collect())
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| Scalar::from_int(k as i64) * c.clone())
                .collect(),
        )
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].clone() + a * b;
            }
        }
        Poly::new(out)
    }

    /// Exact division with remainder.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut rem = self.coeffs.clone();
        let dd = divisor.degree();
        let dlead = divisor.leading().inverse();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Scalar::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = rem[k].clone() * dlead.clone();
            if c.is_zero() {
                continue;
            }
            quot[k - dd] = c.clone();
            for (j, dv) in divisor.coeffs.iter().enumerate() {
                if !dv.is_zero() {
                    rem[k - dd + j] = rem[k - dd + j].clone() - &c * dv;
                }
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn gcd(&self, rhs: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// Square-free part p / gcd(p, p').
    pub fn squarefree(&self) -> Poly {
        let d = self.derivative();
        if d.is_zero() {
            return self.monic();
        }
        let g = self.gcd(&d);
        let (q, r) = self.div_rem(&g);
        debug_assert!(r.is_zero());
        q.monic()
    }

    pub fn has_real_coeffs(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_real)
    }

    /// Coefficient-wise complex conjugate.
    pub fn conj(&self) -> Poly {
        Poly::new(self.coeffs.iter().map(Scalar::conj).collect())
    }
}

/// Minimal polynomial of a square matrix: lcm of per-vector Krylov
/// annihilators over the standard basis, with early exit once the
/// accumulated kernel data saturates the dimension.
pub fn minimal_polynomial(m: &Matrix) -> Poly {
    assert_eq!(m.rows(), m.cols(), "minimal polynomial of non-square matrix");
    let n = m.rows();
    if n == 0 {
        return Poly::one();
    }
    let mut acc = Poly::one();
    for start in 0..n {
        if acc.degree() == n {
            break;
        }
        let mut v = vec![Scalar::zero(); n];
        v[start] = Scalar::one();
        let local = krylov_annihilator(m, v);
        acc = lcm(&acc, &local);
    }
    acc
}

fn krylov_annihilator(m: &Matrix, v0: Vec<Scalar>) -> Poly {
    let n = m.rows();
    let mut span = SpanBuilder::new(n);
    let mut iterates: Vec<Vec<Scalar>> = Vec::new();
    let mut v = v0;
    loop {
        if !span.insert(v.clone()) {
            // First dependence: solve for the combination.
            let cols = iterates.len();
            let sys = Matrix::from_fn(n, cols, |i, j| iterates[j][i].clone());
            let coeffs = crate::exactlin::matrix::solve(&sys, &v)
                .expect("dependent Krylov vector must be a combination");
            let mut poly = vec![Scalar::zero(); cols + 1];
            for (j, c) in coeffs.into_iter().enumerate() {
                poly[j] = -c;
            }
            poly[cols] = Scalar::one();
            return Poly::new(poly);
        }
        iterates.push(v.clone());
        v = m.mul_vec(&v);
        assert!(iterates.len() <= n, "Krylov iteration exceeded dimension");
    }
}

fn lcm(a: &Poly, b: &Poly) -> Poly {
    let g = a.gcd(b);
    let (q, r) = a.div_rem(&g);
    debug_assert!(r.is_zero());
    q.mul(b).monic()
}

/// All roots of a square-free polynomial, required to lie in `field`.
/// Errors with `SplittingFieldFailure` if any irreducible factor does not
/// split over the requested field.
pub fn roots_in_field(p: &Poly, field: Field) -> Result<Vec<Scalar>> {
    let p = p.monic();
    if p.is_zero() || p.degree() == 0 {
        return Ok(vec![]);
    }
    if p.has_real_coeffs() {
        return roots_real_coeffs(&p, field);
    }
    if field == Field::Rational {
        return Err(split_failure(&p, field));
    }
    // Complex coefficients: the roots of p are among the roots of the
    // real-coefficient polynomial p·p̄.
    let candidates = roots_real_coeffs(&p.mul(&p.conj()).squarefree(), Field::Gaussian)?;
    let mut roots: Vec<Scalar> = candidates
        .into_iter()
        .filter(|r| p.eval(r).is_zero())
        .collect();
    roots.sort_by(scalar_order);
    roots.dedup();
    if roots.len() == p.degree() {
        Ok(roots)
    } else {
        Err(split_failure(&p, field))
    }
}

fn split_failure(p: &Poly, field: Field) -> Error {
    let txt: Vec<String> = p.coeffs.iter().map(|c| c.to_string()).collect();
    Error::SplittingFieldFailure(format!(
        "polynomial with coefficients [{}] does not split over {}",
        txt.join(", "),
        field.name()
    ))
}

/// Deterministic ordering of scalars for reproducible output: by real
/// part, then imaginary part.
pub fn scalar_order(a: &Scalar, b: &Scalar) -> std::cmp::Ordering {
    a.re().cmp(&b.re()).then_with(|| a.im().cmp(&b.im()))
}

/// Best-effort root extraction: all roots when the polynomial splits,
/// otherwise whatever rational/Gaussian roots can be found. Never errors.
pub fn field_roots_partial(p: &Poly, field: Field) -> Vec<Scalar> {
    let sf = p.squarefree();
    if sf.degree() == 0 {
        return vec![];
    }
    match roots_in_field(&sf, field) {
        Ok(roots) => roots,
        Err(_) => {
            if sf.has_real_coeffs() {
                rational_roots(&sf)
            } else {
                vec![]
            }
        }
    }
}

/// Extended Euclid: returns (g, u, w) with u·a + w·b = g (monic gcd).
pub fn extended_gcd(a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    let mut s0 = Poly::one();
    let mut s1 = Poly::zero();
    let mut t0 = Poly::zero();
    let mut t1 = Poly::one();
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let new_s = sub(&s0, &q.mul(&s1));
        let new_t = sub(&t0, &q.mul(&t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = new_s;
        t0 = t1;
        t1 = new_t;
    }
    if r0.is_zero() {
        return (Poly::zero(), Poly::zero(), Poly::zero());
    }
    let lead = r0.leading().inverse();
    let scale = |p: &Poly| Poly::new(p.coeffs.iter().map(|c| c * &lead).collect());
    (scale(&r0), scale(&s0), scale(&t0))
}

fn sub(a: &Poly, b: &Poly) -> Poly {
    let len = a.coeffs.len().max(b.coeffs.len());
    let mut out = vec![Scalar::zero(); len];
    for (i, c) in a.coeffs.iter().enumerate() {
        out[i] = out[i].clone() + c.clone();
    }
    for (i, c) in b.coeffs.iter().enumerate() {
        out[i] = out[i].clone() - c.clone();
    }
    Poly::new(out)
}

fn roots_real_coeffs(p: &Poly, field: Field) -> Result<Vec<Scalar>> {
    let mut roots = rational_roots(p);
    let mut rest = p.clone();
    for r in &roots {
        let (q, rem) = rest.div_rem(&Poly::linear(r));
        debug_assert!(rem.is_zero());
        rest = q;
    }
    if rest.degree() >= 1 {
        roots.extend(nonrational_roots(&rest, field)?);
    }
    roots.sort_by(scalar_order);
    roots.dedup();
    Ok(roots)
}

fn nonrational_roots(p: &Poly, field: Field) -> Result<Vec<Scalar>> {
    match p.degree() {
        0 => Ok(vec![]),
        1 => Ok(vec![-p.coeffs[0].clone()]),
        2 => quadratic_roots(p, field),
        _ => {
            // Even polynomial: substitute u = t² and recurse.
            if let Some(roots) = even_substitution(p, field)? {
                return Ok(roots);
            }
            // Small integer shifts can expose an even structure.
            for s in [-3i64, -2, -1, 1, 2, 3] {
                let shifted = shift(p, s);
                if shifted.coeffs.iter().skip(1).step_by(2).all(Scalar::is_zero) {
                    if let Some(roots) = even_substitution(&shifted, field)? {
                        let back = Scalar::from_int(s);
                        return Ok(roots.into_iter().map(|r| r + back.clone()).collect());
                    }
                }
            }
            Err(split_failure(p, field))
        }
    }
}

/// p(t + s)
fn shift(p: &Poly, s: i64) -> Poly {
    let mut out = Poly::zero();
    let lin = Poly::new(vec![Scalar::from_int(s), Scalar::one()]);
    for c in p.coeffs.iter().rev() {
        out = out.mul(&lin);
        if !c.is_zero() {
            let mut coeffs = out.coeffs.clone();
            if coeffs.is_empty() {
                coeffs.push(Scalar::zero());
            }
            coeffs[0] = coeffs[0].clone() + c.clone();
            out = Poly::new(coeffs);
        }
    }
    out
}

fn even_substitution(p: &Poly, field: Field) -> Result<Option<Vec<Scalar>>> {
    if p.coeffs.iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
        return Ok(None);
    }
    let reduced = Poly::new(p.coeffs.iter().step_by(2).cloned().collect());
    let inner = roots_real_coeffs(&reduced.squarefree(), field)?;
    if inner.len() < reduced.degree() {
        return Ok(None);
    }
    let mut roots = Vec::new();
    for u in inner {
        match exact_sqrt(&u, field) {
            Some(s) => {
                roots.push(s.clone());
                roots.push(-s);
            }
            None => return Err(split_failure(p, field)),
        }
    }
    Ok(Some(roots))
}

/// Exact square root of a scalar inside the field, if one exists.
fn exact_sqrt(x: &Scalar, field: Field) -> Option<Scalar> {
    let r = x.as_rational()?.clone();
    if r.is_zero() {
        return Some(Scalar::zero());
    }
    if r.is_positive() {
        rational_sqrt(&r).map(Scalar::from_big)
    } else if field == Field::Gaussian {
        rational_sqrt(&-r).map(|s| Scalar::gauss(BigRational::zero(), s))
    } else {
        None
    }
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    let ns = r.numer().sqrt();
    let ds = r.denom().sqrt();
    if &(&ns * &ns) == r.numer() && &(&ds * &ds) == r.denom() {
        Some(BigRational::new(ns, ds))
    } else {
        None
    }
}

fn quadratic_roots(p: &Poly, field: Field) -> Result<Vec<Scalar>> {
    let p = p.monic();
    let b = p.coeffs[1].clone();
    let c = p.coeffs[0].clone();
    let disc = b.clone() * b.clone() - Scalar::from_int(4) * c;
    match exact_sqrt(&disc, field) {
        Some(s) => {
            let half = Scalar::from_ratio(1, 2);
            Ok(vec![
                (s.clone() - b.clone()) * half.clone(),
                (-s - b) * half,
            ])
        }
        None => Err(split_failure(&p, field)),
    }
}

/// Rational roots of a polynomial with rational coefficients.
fn rational_roots(p: &Poly) -> Vec<Scalar> {
    let mut roots = Vec::new();
    let mut work = p.monic();
    // Root at zero first.
    while !work.coeffs.is_empty() && work.coeffs[0].is_zero() {
        roots.push(Scalar::zero());
        work = Poly::new(work.coeffs[1..].to_vec());
        // square-free input has at most one, but stay safe
        break;
    }
    if work.degree() == 0 {
        return roots;
    }
    // Clear denominators: integer polynomial content-normalized.
    let mut den = BigInt::one();
    for c in &work.coeffs {
        let r = c.as_rational().expect("rational_roots needs real coefficients");
        den = num_integer::lcm(den, r.denom().clone());
    }
    let int_coeffs: Vec<BigInt> = work
        .coeffs
        .iter()
        .map(|c| {
            let r = c.as_rational().unwrap();
            r.numer() * (&den / r.denom())
        })
        .collect();
    let a0 = int_coeffs[0].clone();
    let alead = int_coeffs.last().unwrap().clone();
    debug_assert!(!a0.is_zero());

    // Quick sweep over small integers catches almost every case that
    // occurs in practice (contents of boxes, class sums).
    for k in -64i64..=64 {
        if k == 0 {
            continue;
        }
        let cand = Scalar::from_int(k);
        if work.eval(&cand).is_zero() {
            roots.push(cand);
        }
    }
    // Full divisor enumeration, bounded.
    let nums = bounded_divisors(&a0);
    let dens = bounded_divisors(&alead);
    if let (Some(nums), Some(dens)) = (nums, dens) {
        for nu in &nums {
            for de in &dens {
                let cand = Scalar::from_big(BigRational::new(nu.clone(), de.clone()));
                if work.eval(&cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
                let cand = Scalar::from_big(BigRational::new(-nu.clone(), de.clone()));
                if work.eval(&cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort_by(scalar_order);
    roots.dedup();
    roots
}

/// Positive divisors of |n| by trial division; `None` when the factor base
/// is too coarse (a composite cofactor above the trial bound remains, so
/// the list could be incomplete).
fn bounded_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let mut m = n.abs();
    if m.is_zero() {
        return None;
    }
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut d = BigInt::from(2);
    let bound = BigInt::from(1_000_000u64);
    while &d * &d <= m && d <= bound {
        let mut e = 0;
        while (&m % &d).is_zero() {
            m /= &d;
            e += 1;
        }
        if e > 0 {
            factors.push((d.clone(), e));
        }
        d += 1;
    }
    if !m.is_one() {
        if &m * &m > BigInt::from(1_000_000_000_000u64) && m > bound {
            // Could be composite with two large factors; a prime this size
            // is fine (it is its own divisor list entry).
            let sq = m.sqrt();
            if &sq * &sq != m {
                // Treat as prime if below a safety margin, else give up.
                if m.bits() > 64 {
                    return None;
                }
            }
        }
        factors.push((m, 1));
    }
    let mut divisors = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divisors.len() * (e as usize + 1));
        for d in &divisors {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divisors = next;
        if divisors.len() > 100_000 {
            return None;
        }
    }
    Some(divisors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    fn poly(coeffs: &[i64]) -> Poly {
        Poly::new(coeffs.iter().map(|&c| s(c)).collect())
    }

    #[test]
    fn division_and_gcd() {
        // (t-1)(t-2) = t² - 3t + 2
        let p = poly(&[2, -3, 1]);
        let (q, r) = p.div_rem(&poly(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(q, poly(&[-2, 1]));
        let g = p.gcd(&poly(&[-1, 1]));
        assert_eq!(g, poly(&[-1, 1]));
    }

    #[test]
    fn squarefree_strips_multiplicity() {
        // (t-1)²(t+2)
        let p = poly(&[-1, 1]).mul(&poly(&[-1, 1])).mul(&poly(&[2, 1]));
        let sf = p.squarefree();
        assert_eq!(sf, poly(&[-1, 1]).mul(&poly(&[2, 1])).monic());
    }

    #[test]
    fn rational_root_extraction() {
        // roots 3, -1/2: (t-3)(2t+1)
        let p = poly(&[-3, 1]).mul(&poly(&[1, 2]));
        let roots = roots_in_field(&p, Field::Rational).unwrap();
        assert_eq!(roots, vec![Scalar::from_ratio(-1, 2), s(3)]);
    }

    #[test]
    fn t_squared_plus_one_needs_gaussians() {
        let p = poly(&[1, 0, 1]);
        assert!(matches!(
            roots_in_field(&p, Field::Rational),
            Err(Error::SplittingFieldFailure(_))
        ));
        let roots = roots_in_field(&p, Field::Gaussian).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots.contains(&Scalar::i()));
    }

    #[test]
    fn product_of_two_quadratics_via_even_substitution() {
        // (t²+1)(t²+4)
        let p = poly(&[1, 0, 1]).mul(&poly(&[4, 0, 1]));
        let roots = roots_in_field(&p, Field::Gaussian).unwrap();
        assert_eq!(roots.len(), 4);
    }

    #[test]
    fn shifted_even_structure() {
        // (t-1)²+1 times (t-1)²+4, no rational roots, odd coefficients
        let q = shift(&poly(&[1, 0, 1]).mul(&poly(&[4, 0, 1])), -1);
        let roots = roots_in_field(&q, Field::Gaussian).unwrap();
        assert_eq!(roots.len(), 4);
        for r in &roots {
            assert!(q.eval(r).is_zero());
        }
    }

    #[test]
    fn irreducible_over_qi_fails() {
        // t² - 2 has real irrational roots
        let p = poly(&[-2, 0, 1]);
        assert!(matches!(
            roots_in_field(&p, Field::Gaussian),
            Err(Error::SplittingFieldFailure(_))
        ));
    }

    #[test]
    fn gaussian_coefficient_roots() {
        // (t - i)(t - 2) with Gaussian coefficient
        let p = Poly::linear(&Scalar::i()).mul(&Poly::linear(&s(2)));
        let roots = roots_in_field(&p, Field::Gaussian).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots.contains(&Scalar::i()));
        assert!(roots.contains(&s(2)));
    }

    #[test]
    fn extended_gcd_bezout() {
        // a = (t-1)(t-2), b = (t-1)(t+3): gcd t-1 with Bézout witnesses
        let a = poly(&[2, -3, 1]);
        let b = poly(&[-3, 2, 1]);
        let (g, u, w) = extended_gcd(&a, &b);
        assert_eq!(g, poly(&[-1, 1]));
        assert_eq!(sub(&sub(&u.mul(&a), &g), &w.mul(&b).mul(&poly(&[-1]))), Poly::zero());
    }

    #[test]
    fn minimal_polynomial_of_diagonal() {
        let m = Matrix::from_rows(vec![
            vec![s(1), s(0), s(0)],
            vec![s(0), s(2), s(0)],
            vec![s(0), s(0), s(2)],
        ]);
        let p = minimal_polynomial(&m);
        // (t-1)(t-2)
        assert_eq!(p, poly(&[2, -3, 1]));
    }

    #[test]
    fn minimal_polynomial_of_nilpotent() {
        let m = Matrix::from_rows(vec![vec![s(0), s(1)], vec![s(0), s(0)]]);
        assert_eq!(minimal_polynomial(&m), poly(&[0, 0, 1]));
    }
}
