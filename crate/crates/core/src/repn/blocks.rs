//! Block data of one tower level: central idempotents of the semisimple
//! quotient, their lifts, simple and projective dimensions, and a
//! primitive idempotent per simple.

use crate::algebra::AlgebraElement;

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar, SpanBuilder};
use crate::repn::level::LevelData;
use crate::towers::Tower;
use num_traits::{One, Signed, ToPrimitive};

pub struct BlockData {
    pub dim_simple: usize,
    pub dim_proj: usize,
    /// Isotypic idempotent lifted from the quotient; central exactly when
    /// the simple sits alone in its linkage class.
    pub f: AlgebraElement,
    pub f_central: bool,
    /// Primitive idempotent with A·ê the projective cover of the simple.
    pub e_hat: AlgebraElement,
    /// The central idempotent of the quotient (reduced representative).
    pub f_bar: AlgebraElement,
}

pub struct BlockDecomposition {
    pub level: usize,
    pub blocks: Vec<BlockData>,
}

impl BlockDecomposition {
    pub fn labels(&self) -> usize {
        self.blocks.len()
    }

    pub fn build(tower: &Tower, data: &LevelData) -> Result<BlockDecomposition> {
        let n = data.n;
        if n == 0 || data.dim == 1 {
            let one = tower.one(n);
            return Ok(BlockDecomposition {
                level: n,
                blocks: vec![BlockData {
                    dim_simple: 1,
                    dim_proj: 1,
                    f: one.clone(),
                    f_central: true,
                    e_hat: one.clone(),
                    f_bar: data.reduce(&one),
                }],
            });
        }
        let field = tower.field();

        // Center of the quotient algebra.
        let center = data.commutant(tower, &tower.generators(n), true)?;
        let zdim = center.len();
        let mut zspan = SpanBuilder::new(data.dim);
        for z in &center {
            zspan.insert(z.to_vector(&data.index, data.dim));
        }
        let one_red = data.reduce(&tower.one(n));
        let one_coords = zspan
            .coordinates(&one_red.to_vector(&data.index, data.dim))
            .ok_or_else(|| {
                Error::InvariantFailure("identity not in the quotient center".into())
            })?;
        // Regular action of each center basis element on the center.
        let zbasis = zspan.basis();
        let zelems: Vec<AlgebraElement> = zbasis
            .iter()
            .map(|v| AlgebraElement::from_vector(n, &data.basis, v))
            .collect();
        let mut gens = Vec::with_capacity(zdim);
        for zi in &zelems {
            let mut m = Matrix::zero(zdim, zdim);
            for (j, zj) in zelems.iter().enumerate() {
                let prod = data.quot_mul(tower, zi, zj)?;
                let coords = zspan
                    .coordinates(&prod.to_vector(&data.index, data.dim))
                    .ok_or_else(|| {
                        Error::InvariantFailure("center is not multiplicatively closed".into())
                    })?;
                for (i, c) in coords.into_iter().enumerate() {
                    m.set(i, j, c);
                }
            }
            gens.push(m);
        }
        let idempotent_coords =
            crate::exactlin::split_commutative(&gens, &one_coords, field)?;
        let f_bars: Vec<AlgebraElement> = idempotent_coords
            .iter()
            .map(|coords| {
                let mut e = AlgebraElement::zero(n);
                for (j, c) in coords.iter().enumerate() {
                    if !c.is_zero() {
                        e = e.add(&zelems[j].scale(c)).expect("same level");
                    }
                }
                data.reduce(&e)
            })
            .collect();

        // Simple dimensions: the quotient rank of each central idempotent
        // is the square of the simple dimension over a splitting field.
        let mut raw = Vec::new();
        for f_bar in &f_bars {
            let rank = as_usize(&data.qtrace_reduced(f_bar)).ok_or_else(|| {
                Error::InvariantFailure("idempotent has non-integer quotient rank".into())
            })?;
            let dim_simple = int_sqrt(rank).ok_or_else(|| {
                Error::SplittingFieldFailure(format!(
                    "block of quotient rank {rank} is not split over {}",
                    field.name()
                ))
            })?;
            raw.push((f_bar.clone(), dim_simple));
        }

        // Lift the quotient idempotents to orthogonal idempotents of the
        // level, one at a time inside shrinking corners. With zero radical
        // the quotient representatives are already the lifts.
        let newton_steps = data.nilpotency_index.next_power_of_two().trailing_zeros() as usize + 1;
        let one = tower.one(n);
        let mut fs: Vec<AlgebraElement> = Vec::with_capacity(raw.len());
        if data.radical.rank() == 0 {
            fs.extend(raw.iter().map(|(f_bar, _)| f_bar.clone()));
        } else {
            for (k, (f_bar, _)) in raw.iter().enumerate() {
                if k + 1 == raw.len() {
                    // completeness: the last lift is the complement
                    let mut rest = one.clone();
                    for f in &fs {
                        rest = rest.sub(f)?;
                    }
                    fs.push(rest);
                    break;
                }
                let mut corner = one.clone();
                for f in &fs {
                    corner = corner.sub(f)?;
                }
                let seed = tower.mul_many(&[&corner, f_bar, &corner])?;
                fs.push(newton_idempotent(tower, seed, newton_steps)?);
            }
        }

        // Assemble blocks with projective dimensions and primitives.
        let mut blocks = Vec::with_capacity(raw.len());
        for ((f_bar, dim_simple), f) in raw.into_iter().zip(fs) {
            if tower.mul(&f, &f)? != f {
                return Err(Error::InvariantFailure(
                    "lifted idempotent is not idempotent".into(),
                ));
            }
            if data.reduce(&f) != f_bar {
                return Err(Error::InvariantFailure(
                    "lift does not reduce to the quotient idempotent".into(),
                ));
            }
            let iso_rank = as_usize(&data.trace(&f)).ok_or_else(|| {
                Error::InvariantFailure("isotypic idempotent has non-integer rank".into())
            })?;
            if iso_rank % dim_simple != 0 {
                return Err(Error::InvariantFailure(format!(
                    "isotypic rank {iso_rank} not divisible by simple dimension {dim_simple}"
                )));
            }
            let dim_proj = iso_rank / dim_simple;
            let f_central = crate::towers::frobenius::centrality_witness(tower, &f)?.is_none();
            let e_hat = primitive_idempotent(
                tower,
                data,
                &f,
                &f_bar,
                dim_simple,
                dim_proj,
                newton_steps,
            )?;
            blocks.push(BlockData {
                dim_simple,
                dim_proj,
                f,
                f_central,
                e_hat,
                f_bar,
            });
        }

        // Canonical ordering: (dim L, dim P, smallest support word of f,
        // then the full term list as a final tiebreaker).
        blocks.sort_by(|a, b| {
            (a.dim_simple, a.dim_proj)
                .cmp(&(b.dim_simple, b.dim_proj))
                .then_with(|| {
                    let wa = a.f.terms().next().map(|(w, _)| w.clone());
                    let wb = b.f.terms().next().map(|(w, _)| w.clone());
                    wa.cmp(&wb)
                })
                .then_with(|| {
                    let ta: Vec<(&crate::algebra::Word, String)> =
                        a.f.terms().map(|(w, c)| (w, c.to_string())).collect();
                    let tb: Vec<(&crate::algebra::Word, String)> =
                        b.f.terms().map(|(w, c)| (w, c.to_string())).collect();
                    ta.cmp(&tb)
                })
        });

        let decomp = BlockDecomposition { level: n, blocks };
        decomp.verify(tower, data)?;
        Ok(decomp)
    }

    /// Construction invariants: orthogonal idempotents summing to one,
    /// dimension bookkeeping, primitive ranks.
    fn verify(&self, tower: &Tower, data: &LevelData) -> Result<()> {
        let n = self.level;
        let mut sum = AlgebraElement::zero(n);
        for b in &self.blocks {
            sum = sum.add(&b.f)?;
        }
        if sum != tower.one(n) {
            return Err(Error::InvariantFailure(
                "isotypic idempotents do not sum to one".into(),
            ));
        }
        // Idempotents summing to one whose ranks (traces, char 0) add up to
        // the full dimension are automatically pairwise orthogonal; the
        // rank bookkeeping below certifies that. The explicit product
        // sweep is kept at small dimensions as a direct cross-check.
        if data.dim <= 48 {
            for (i, a) in self.blocks.iter().enumerate() {
                for (j, b) in self.blocks.iter().enumerate() {
                    let prod = tower.mul(&a.f, &b.f)?;
                    let expect = if i == j { a.f.clone() } else { AlgebraElement::zero(n) };
                    if prod != expect {
                        return Err(Error::InvariantFailure(
                            "isotypic idempotents are not orthogonal".into(),
                        ));
                    }
                }
            }
        }
        let total: usize = self
            .blocks
            .iter()
            .map(|b| b.dim_simple * b.dim_proj)
            .sum();
        if total != data.dim {
            return Err(Error::InvariantFailure(format!(
                "Σ dim(L)·dim(P) = {total} but the level has dimension {}",
                data.dim
            )));
        }
        for b in &self.blocks {
            // rank of f on the level
            if data.trace(&b.f) != Scalar::from_int((b.dim_simple * b.dim_proj) as i64) {
                return Err(Error::InvariantFailure(
                    "isotypic idempotent rank mismatch".into(),
                ));
            }
            // ê is idempotent with both regular ranks equal to dim P
            if tower.mul(&b.e_hat, &b.e_hat)? != b.e_hat {
                return Err(Error::InvariantFailure(
                    "primitive idempotent is not idempotent".into(),
                ));
            }
            let left = data.trace(&b.e_hat);
            if left != Scalar::from_int(b.dim_proj as i64) {
                return Err(Error::InvariantFailure(
                    "primitive idempotent has wrong rank".into(),
                ));
            }
        }
        Ok(())
    }
}

fn as_usize(s: &Scalar) -> Option<usize> {
    let r = s.as_rational()?;
    if !r.denom().is_one() || r.numer().is_negative() {
        return None;
    }
    r.numer().to_usize()
}

fn int_sqrt(n: usize) -> Option<usize> {
    let mut r = (n as f64).sqrt().round() as usize;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    if r * r == n {
        Some(r)
    } else {
        None
    }
}

/// Cubic Newton iteration e ← 3e² − 2e³; converges to an idempotent when
/// the seed is idempotent modulo a nilpotent ideal.
fn newton_idempotent(
    tower: &Tower,
    mut e: AlgebraElement,
    steps: usize,
) -> Result<AlgebraElement> {
    for _ in 0..steps.max(1) {
        let e2 = tower.mul(&e, &e)?;
        if e2 == e {
            return Ok(e);
        }
        let e3 = tower.mul(&e2, &e)?;
        e = e2.scale(&Scalar::from_int(3)).sub(&e3.scale(&Scalar::from_int(2)))?;
    }
    if tower.mul(&e, &e)? == e {
        Ok(e)
    } else {
        Err(Error::InvariantFailure(
            "idempotent lifting did not converge".into(),
        ))
    }
}

/// A primitive idempotent under the isotypic projector, found by
/// refining the quotient idempotent f̄ along the spectra of the tower's
/// commuting splitting pool, then lifting into the corner f·A·f.
///
/// For a pool element x commuting with the current idempotent e, the
/// Krylov sequence e, x·e, x²·e, …  yields the minimal polynomial of x on
/// the cyclic ideal through e; its CRT spectral projectors applied to e
/// are again idempotents below e, computed purely from sparse-by-dense
/// products. Refinement stops at quotient rank dim_simple, i.e. a rank-1
/// matrix unit of the block.
fn primitive_idempotent(
    tower: &Tower,
    data: &LevelData,
    f: &AlgebraElement,
    f_bar: &AlgebraElement,
    dim_simple: usize,
    _dim_proj: usize,
    newton_steps: usize,
) -> Result<AlgebraElement> {
    if dim_simple == 1 {
        return Ok(f.clone());
    }
    let target = Scalar::from_int(dim_simple as i64);
    let mut e = f_bar.clone();
    for x in tower.splitting_pool(data.n) {
        if data.qtrace_reduced(&e) == target {
            break;
        }
        e = refine_by_commuting_element(tower, data, e, &x)?;
    }
    if data.qtrace_reduced(&e) != target {
        e = corner_search(tower, data, e, dim_simple)?;
    }
    if data.qtrace_reduced(&e) != target {
        return Err(Error::SplittingFieldFailure(format!(
            "block refinement stalled at quotient rank {} (want {})",
            data.qtrace_reduced(&e),
            target
        )));
    }
    // Lift into the corner f·A·f: e ≤ f̄ holds because every refinement is
    // a polynomial in pool elements times f̄, and f̄ is central.
    let seed = tower.mul_many(&[f, &e, f])?;
    newton_idempotent(tower, seed, newton_steps + 2)
}

/// One refinement step: split e along the generalized eigenspaces of a
/// commuting element x and keep the smallest nonzero piece.
fn refine_by_commuting_element(
    tower: &Tower,
    data: &LevelData,
    e: AlgebraElement,
    x: &AlgebraElement,
) -> Result<AlgebraElement> {
    use crate::exactlin::poly::{extended_gcd, field_roots_partial};
    // Krylov iterates x^j·e in the quotient until dependence.
    let mut span = SpanBuilder::new(data.dim);
    let mut iterates: Vec<AlgebraElement> = Vec::new();
    let mut cur = e.clone();
    let minpoly = loop {
        let v = cur.to_vector(&data.index, data.dim);
        if !span.insert(v.clone()) {
            let cols: Vec<Vec<Scalar>> = iterates
                .iter()
                .map(|it| it.to_vector(&data.index, data.dim))
                .collect();
            let m = Matrix::from_fn(data.dim, cols.len(), |i, j| cols[j][i].clone());
            let coeffs = crate::exactlin::solve(&m, &v)
                .map_err(|_| Error::InvariantFailure("Krylov dependence not solvable".into()))?;
            let mut poly = vec![Scalar::zero(); iterates.len() + 1];
            for (j, c) in coeffs.into_iter().enumerate() {
                poly[j] = -c;
            }
            poly[iterates.len()] = Scalar::one();
            break crate::exactlin::Poly::new(poly);
        }
        iterates.push(cur.clone());
        cur = data.quot_mul(tower, x, &cur)?;
    };
    if minpoly.degree() <= 1 {
        return Ok(e);
    }
    let roots = field_roots_partial(&minpoly, tower.field());
    if roots.is_empty() {
        return Ok(e);
    }
    // Spectral projector polynomials: for each root α of multiplicity m,
    // q = (t-α)^m and π = (w·r mod p) where u·q + w·r = 1, r = p/q.
    let eval_on_e = |poly: &crate::exactlin::Poly| -> AlgebraElement {
        let mut acc = AlgebraElement::zero(data.n);
        for (j, c) in poly.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&iterates[j].scale(c)).expect("same level");
            }
        }
        acc
    };
    let mut best: Option<(Scalar, AlgebraElement)> = None;
    let mut smaller = |piece: AlgebraElement, data: &LevelData| {
        let rank = data.qtrace_reduced(&piece);
        if piece.is_zero() || rank == Scalar::zero() {
            return;
        }
        let better = match &best {
            None => true,
            Some((r, _)) => {
                let cur = rank.as_rational().cloned();
                let old = r.as_rational().cloned();
                matches!((cur, old), (Some(c), Some(o)) if c < o)
            }
        };
        if better {
            best = Some((rank, piece));
        }
    };
    let mut rest_poly = crate::exactlin::Poly::one();
    for alpha in &roots {
        let lin = crate::exactlin::Poly::linear(alpha);
        let mut m = 0;
        let mut p = minpoly.clone();
        loop {
            let (q, r) = p.div_rem(&lin);
            if r.is_zero() {
                p = q;
                m += 1;
            } else {
                break;
            }
        }
        if m == 0 {
            continue;
        }
        let mut qpoly = crate::exactlin::Poly::one();
        for _ in 0..m {
            qpoly = qpoly.mul(&lin);
        }
        rest_poly = rest_poly.mul(&qpoly);
        let (quotient, rem) = minpoly.div_rem(&qpoly);
        debug_assert!(rem.is_zero());
        let (g, _u, w) = extended_gcd(&qpoly, &quotient);
        if g.degree() != 0 {
            continue;
        }
        // normalize the Bézout identity by the constant gcd
        let winv = g.coeffs[0].inverse();
        let wnorm = crate::exactlin::Poly::new(
            w.coeffs.iter().map(|c| c * &winv).collect(),
        );
        let (_, proj) = wnorm.mul(&quotient).div_rem(&minpoly);
        let piece = eval_on_e(&proj);
        debug_assert_eq!(data.quot_mul(tower, &piece, &piece)?, piece);
        smaller(piece, data);
    }
    // the co-root piece (everything outside the extracted spectrum)
    let (quotient_rest, rem) = minpoly.div_rem(&rest_poly);
    if rem.is_zero() && quotient_rest.degree() >= 1 {
        let (g, _u, w) = extended_gcd(&quotient_rest, &rest_poly);
        if g.degree() == 0 {
            let winv = g.coeffs[0].inverse();
            let wnorm = crate::exactlin::Poly::new(
                w.coeffs.iter().map(|c| c * &winv).collect(),
            );
            let (_, proj) = wnorm.mul(&rest_poly).div_rem(&minpoly);
            let piece = eval_on_e(&proj);
            smaller(piece, data);
        }
    }
    Ok(best.map(|(_, p)| p).unwrap_or(e))
}

/// Fallback splitting inside the corner e·Ā·e when the commuting pool
/// does not separate (weight spaces of multiplicity above one). Searches
/// corner elements whose minimal polynomial has at least two distinct
/// ground-field roots and splits the corner unit along the corresponding
/// generalized kernels.
fn corner_search(
    tower: &Tower,
    data: &LevelData,
    mut e: AlgebraElement,
    dim_simple: usize,
) -> Result<AlgebraElement> {
    use crate::coherent::sample::SplitMix64;
    use crate::exactlin::poly::field_roots_partial;
    let target = Scalar::from_int(dim_simple as i64);
    'refine: while data.qtrace_reduced(&e) != target {
        if data.dim > 200 {
            // Corner products are quadratic in the level dimension; the
            // bundled towers never stall at this size.
            break;
        }
        // Corner basis e·w·e over the quotient.
        let mut span = SpanBuilder::new(data.dim);
        let mut corner: Vec<AlgebraElement> = Vec::new();
        for &qi in &data.quotient_words {
            let w = AlgebraElement::from_word(data.basis[qi].clone());
            let ew = data.quot_mul(tower, &e, &w)?;
            let ewe = data.quot_mul(tower, &ew, &e)?;
            if span.insert(ewe.to_vector(&data.index, data.dim)) {
                corner.push(ewe);
            }
        }
        let cdim = corner.len();
        if cdim <= 1 {
            break;
        }
        // Candidates: corner basis, pairwise products, then seeded combos.
        let mut candidates: Vec<AlgebraElement> = corner.clone();
        for u in corner.iter().take(6) {
            for v in corner.iter().take(6) {
                candidates.push(data.quot_mul(tower, u, v)?);
            }
        }
        let mut rng = SplitMix64::new(0xc02ce ^ (data.n as u64));
        for _ in 0..64 {
            let mut cand = AlgebraElement::zero(data.n);
            for b in &corner {
                let cshift = (rng.next_u64() % 9) as i64 - 4;
                if cshift != 0 {
                    cand = cand.add(&b.scale(&Scalar::from_int(cshift)))?;
                }
            }
            candidates.push(cand);
        }
        for y in candidates {
            if y.is_zero() {
                continue;
            }
            // Matrix of left multiplication by y on the corner.
            let mut m = Matrix::zero(cdim, cdim);
            let mut stable = true;
            for (j, b) in corner.iter().enumerate() {
                let img = data.quot_mul(tower, &y, b)?;
                match span.coordinates(&img.to_vector(&data.index, data.dim)) {
                    Some(coords) => {
                        for (i, cval) in coords.into_iter().enumerate() {
                            m.set(i, j, cval);
                        }
                    }
                    None => {
                        stable = false;
                        break;
                    }
                }
            }
            if !stable {
                continue;
            }
            let p = crate::exactlin::minimal_polynomial(&m);
            let roots = field_roots_partial(&p, tower.field());
            if roots.len() < 2 && (roots.len() != 1 || p.squarefree().degree() < 2) {
                continue;
            }
            // Split the corner along ker q(L_y) ⊕ ker r(L_y) with q the
            // full power of the first root.
            let alpha = &roots[0];
            let lin = crate::exactlin::Poly::linear(alpha);
            let mut mult = 0;
            let mut rest = p.clone();
            loop {
                let (qt, rm) = rest.div_rem(&lin);
                if rm.is_zero() {
                    rest = qt;
                    mult += 1;
                } else {
                    break;
                }
            }
            if mult == 0 || rest.degree() == 0 {
                continue;
            }
            let mut qpow = Matrix::identity(cdim);
            let shifted = m.add(&Matrix::identity(cdim).scale(&-alpha.clone()));
            for _ in 0..mult {
                qpow = shifted.mul(&qpow);
            }
            let mut rmat = Matrix::zero(cdim, cdim);
            let mut mp = Matrix::identity(cdim);
            for ccoef in &rest.coeffs {
                if !ccoef.is_zero() {
                    rmat = rmat.add(&mp.scale(ccoef));
                }
                mp = m.mul(&mp);
            }
            let k1 = crate::exactlin::kernel_basis(&qpow);
            let k2 = crate::exactlin::kernel_basis(&rmat);
            if k1.is_empty() || k2.is_empty() || k1.len() + k2.len() != cdim {
                continue;
            }
            // Decompose the corner unit e along the two kernels.
            let cols: Vec<Vec<Scalar>> = k1.iter().chain(k2.iter()).cloned().collect();
            let sys = Matrix::from_fn(cdim, cdim, |i, j| cols[j][i].clone());
            let e_coords = span
                .coordinates(&e.to_vector(&data.index, data.dim))
                .ok_or_else(|| Error::InvariantFailure("corner unit outside corner".into()))?;
            let Ok(mix) = crate::exactlin::solve(&sys, &e_coords) else {
                continue;
            };
            let assemble = |range: std::ops::Range<usize>| -> AlgebraElement {
                let mut out = AlgebraElement::zero(data.n);
                for idx in range {
                    if mix[idx].is_zero() {
                        continue;
                    }
                    for (j, cval) in cols[idx].iter().enumerate() {
                        if !cval.is_zero() {
                            out = out
                                .add(&corner[j].scale(&(mix[idx].clone() * cval.clone())))
                                .expect("same level");
                        }
                    }
                }
                out
            };
            let piece1 = assemble(0..k1.len());
            let piece2 = assemble(k1.len()..cdim);
            for piece in [piece1, piece2] {
                if piece.is_zero() {
                    continue;
                }
                if data.quot_mul(tower, &piece, &piece)? != piece {
                    continue;
                }
                let rank = data.qtrace_reduced(&piece);
                if rank != Scalar::zero() && rank != data.qtrace_reduced(&e) {
                    e = piece;
                    continue 'refine;
                }
            }
        }
        break;
    }
    Ok(e)
}

/// A second primitive idempotent conjugate to ê inside its block:
/// ê' = ê − ê·a·(1−ê) for a deterministic a, distinct from ê whenever the
/// corner allows it.
pub fn conjugate_primitive(
    tower: &Tower,
    data: &LevelData,
    e_hat: &AlgebraElement,
) -> Result<Option<AlgebraElement>> {
    let n = data.n;
    let one = tower.one(n);
    let co = one.sub(e_hat)?;
    for &qi in &data.quotient_words {
        let a = AlgebraElement::from_word(data.basis[qi].clone());
        let x = tower.mul_many(&[e_hat, &a, &co])?;
        if x.is_zero() {
            continue;
        }
        let e2 = e_hat.sub(&x)?;
        debug_assert_eq!(tower.mul(&e2, &e2)?, e2);
        return Ok(Some(e2));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_s3_blocks() {
        let t = Tower::symmetric();
        let d = LevelData::build(&t, 3).unwrap();
        let blocks = BlockDecomposition::build(&t, &d).unwrap();
        let mut dims: Vec<(usize, usize)> = blocks
            .blocks
            .iter()
            .map(|b| (b.dim_simple, b.dim_proj))
            .collect();
        dims.sort();
        assert_eq!(dims, vec![(1, 1), (1, 1), (2, 2)]);
        assert!(blocks.blocks.iter().all(|b| b.f_central));
    }

    #[test]
    fn level_zero_is_single_trivial_block() {
        let t = Tower::symmetric();
        let d = LevelData::build(&t, 0).unwrap();
        let blocks = BlockDecomposition::build(&t, &d).unwrap();
        assert_eq!(blocks.blocks.len(), 1);
        assert_eq!(blocks.blocks[0].dim_simple, 1);
        assert_eq!(blocks.blocks[0].dim_proj, 1);
    }

    #[test]
    fn dual_number_wreath_level_one() {
        // F = Q[ε]/(ε²): one simple of dimension 1 with projective cover
        // of dimension 2.
        let t = Tower::wreath(crate::towers::wreath::WreathData::dual_numbers());
        let d = LevelData::build(&t, 1).unwrap();
        let blocks = BlockDecomposition::build(&t, &d).unwrap();
        assert_eq!(blocks.blocks.len(), 1);
        assert_eq!(blocks.blocks[0].dim_simple, 1);
        assert_eq!(blocks.blocks[0].dim_proj, 2);
    }

    #[test]
    fn hecke_w0_matches_symmetric() {
        let th = Tower::hecke(vec![0]);
        let ts = Tower::symmetric();
        for n in 0..=3 {
            let dh = LevelData::build(&th, n).unwrap();
            let ds = LevelData::build(&ts, n).unwrap();
            let bh = BlockDecomposition::build(&th, &dh).unwrap();
            let bs = BlockDecomposition::build(&ts, &ds).unwrap();
            let dims = |b: &BlockDecomposition| -> Vec<(usize, usize)> {
                b.blocks.iter().map(|x| (x.dim_simple, x.dim_proj)).collect()
            };
            assert_eq!(dims(&bh), dims(&bs));
        }
    }

    #[test]
    fn conjugate_primitive_in_matrix_block() {
        let t = Tower::symmetric();
        let d = LevelData::build(&t, 3).unwrap();
        let blocks = BlockDecomposition::build(&t, &d).unwrap();
        let two_dim = blocks.blocks.iter().find(|b| b.dim_simple == 2).unwrap();
        let other = conjugate_primitive(&t, &d, &two_dim.e_hat).unwrap().unwrap();
        assert_ne!(other, two_dim.e_hat);
        assert_eq!(t.mul(&other, &other).unwrap(), other);
        assert_eq!(d.trace(&other), Scalar::from_int(two_dim.dim_proj as i64));
    }
}
