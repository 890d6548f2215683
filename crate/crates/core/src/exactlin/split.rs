//! Splitting of a commutative semisimple algebra action into primitive
//! idempotents by iterated refinement along eigenspaces.

use crate::error::{Error, Result};
use crate::exactlin::matrix::{solve, Matrix, SpanBuilder};
use crate::exactlin::poly::{minimal_polynomial, roots_in_field, Poly};
use crate::exactlin::scalar::{Field, Scalar};

/// Complete list of primitive orthogonal idempotents of the commutative
/// semisimple algebra generated by `gens` acting on a space, expressed as
/// vectors of that space.
///
/// `identity` is the vector representing the algebra unit (for the regular
/// action this is the unit element's coordinate vector). The returned
/// vectors are the components of `identity` along the joint eigenspace
/// decomposition; they sum to `identity` exactly. Ordering is
/// deterministic: blocks are refined in eigenvalue order.
pub fn split_commutative(
    gens: &[Matrix],
    identity: &[Scalar],
    field: Field,
) -> Result<Vec<Vec<Scalar>>> {
    let dim = identity.len();
    for g in gens {
        assert_eq!(g.rows(), dim, "generator has wrong dimension");
        assert_eq!(g.cols(), dim, "generator has wrong dimension");
    }
    if dim == 0 {
        return Ok(vec![]);
    }
    // Start with the whole space.
    let mut blocks: Vec<Vec<Vec<Scalar>>> = vec![(0..dim)
        .map(|i| {
            let mut v = vec![Scalar::zero(); dim];
            v[i] = Scalar::one();
            v
        })
        .collect()];

    for g in gens {
        let mut refined = Vec::new();
        for block in blocks {
            if block.len() == 1 {
                refined.push(block);
                continue;
            }
            refined.extend(split_block(g, &block, field)?);
        }
        blocks = refined;
    }

    // Decompose the identity along the block sum.
    let total: usize = blocks.iter().map(Vec::len).sum();
    if total != dim {
        return Err(Error::InvariantFailure(format!(
            "eigenspace refinement lost dimensions ({total} of {dim})"
        )));
    }
    let sys = Matrix::from_fn(dim, dim, |i, j| {
        let mut col = 0;
        for block in &blocks {
            if j < col + block.len() {
                return block[j - col][i].clone();
            }
            col += block.len();
        }
        unreachable!()
    });
    let y = solve(&sys, identity).map_err(|_| {
        Error::InvariantFailure("identity does not lie in the block sum".into())
    })?;
    let mut idempotents = Vec::with_capacity(blocks.len());
    let mut col = 0;
    for block in &blocks {
        let mut e = vec![Scalar::zero(); dim];
        for (local, vec) in block.iter().enumerate() {
            let c = &y[col + local];
            if c.is_zero() {
                continue;
            }
            for (i, v) in vec.iter().enumerate() {
                if !v.is_zero() {
                    e[i] = e[i].clone() + c * v;
                }
            }
        }
        col += block.len();
        idempotents.push(e);
    }
    // The components must sum back to the identity.
    let mut sum = vec![Scalar::zero(); dim];
    for e in &idempotents {
        for (i, v) in e.iter().enumerate() {
            sum[i] = sum[i].clone() + v.clone();
        }
    }
    if sum != identity {
        return Err(Error::InvariantFailure(
            "idempotent components do not sum to the identity".into(),
        ));
    }
    Ok(idempotents)
}

/// Split one invariant subspace along the eigenspaces of `g`.
fn split_block(
    g: &Matrix,
    block: &[Vec<Scalar>],
    field: Field,
) -> Result<Vec<Vec<Vec<Scalar>>>> {
    let k = block.len();
    let mut span = SpanBuilder::new(block[0].len());
    for b in block {
        span.insert(b.clone());
    }
    // Matrix of g on the echelonized block basis, in block coordinates.
    let echelon = span.basis();
    let mut matrix = Matrix::zero(k, k);
    for (j, b) in echelon.iter().enumerate() {
        let image = apply(g, b);
        let coords = span
            .coordinates(&image)
            .ok_or_else(|| Error::InvariantFailure("block not invariant".into()))?;
        for (i, c) in coords.into_iter().enumerate() {
            matrix.set(i, j, c);
        }
    }
    let p = minimal_polynomial(&matrix).squarefree();
    if p.degree() <= 1 {
        return Ok(vec![echelon]);
    }
    let roots = roots_in_field(&p, field)?;
    if roots.len() != p.degree() {
        return Err(Error::SplittingFieldFailure(format!(
            "minimal polynomial of degree {} has only {} roots over {}",
            p.degree(),
            roots.len(),
            field.name()
        )));
    }
    let mut parts = Vec::new();
    let mut covered = 0;
    for alpha in roots {
        let shifted = matrix.add(&Matrix::identity(k).scale(&-alpha));
        let kernel = crate::exactlin::matrix::kernel_basis(&shifted);
        if kernel.is_empty() {
            continue;
        }
        covered += kernel.len();
        let vectors: Vec<Vec<Scalar>> = kernel
            .iter()
            .map(|coords| combine(&echelon, coords))
            .collect();
        parts.push(vectors);
    }
    if covered != k {
        return Err(Error::InvariantFailure(
            "commutative action is not semisimple on a block".into(),
        ));
    }
    // Sanity: the eigenpolynomial annihilates the block.
    debug_assert!(annihilates(&p, &matrix));
    Ok(parts)
}

fn apply(g: &Matrix, v: &[Scalar]) -> Vec<Scalar> {
    g.mul_vec(v)
}

fn combine(basis: &[Vec<Scalar>], coords: &[Scalar]) -> Vec<Scalar> {
    let dim = basis[0].len();
    let mut out = vec![Scalar::zero(); dim];
    for (b, c) in basis.iter().zip(coords) {
        if c.is_zero() {
            continue;
        }
        for (i, v) in b.iter().enumerate() {
            if !v.is_zero() {
                out[i] = out[i].clone() + c * v;
            }
        }
    }
    out
}

fn annihilates(p: &Poly, m: &Matrix) -> bool {
    let k = m.rows();
    let mut acc = Matrix::zero(k, k);
    let mut power = Matrix::identity(k);
    for c in &p.coeffs {
        if !c.is_zero() {
            acc = acc.add(&power.scale(c));
        }
        power = m.mul(&power);
    }
    acc.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    #[test]
    fn identity_on_one_dim_space() {
        let gens = [Matrix::identity(1)];
        let idems = split_commutative(&gens, &[s(1)], Field::Rational).unwrap();
        assert_eq!(idems, vec![vec![s(1)]]);
    }

    #[test]
    fn diagonal_splits_into_eigenprojections() {
        // Regular action of Q×Q with basis the two coordinate idempotents;
        // diag(1,2) is the element (1,2) acting by multiplication.
        let g = Matrix::from_rows(vec![vec![s(1), s(0)], vec![s(0), s(2)]]);
        let idems = split_commutative(&[g], &[s(1), s(1)], Field::Rational).unwrap();
        assert_eq!(idems.len(), 2);
        // Componentwise multiplication: each part is idempotent, products vanish.
        for e in &idems {
            for (i, v) in e.iter().enumerate() {
                assert_eq!(v.clone() * v.clone(), e[i].clone());
            }
        }
        let sum0 = idems[0][0].clone() + idems[1][0].clone();
        let sum1 = idems[0][1].clone() + idems[1][1].clone();
        assert_eq!((sum0, sum1), (s(1), s(1)));
    }

    #[test]
    fn rotation_needs_gaussian_field() {
        // Multiplication by i on Q(i) viewed as 2-dim rational space:
        // minimal polynomial t² + 1.
        let g = Matrix::from_rows(vec![vec![s(0), s(-1)], vec![s(1), s(0)]]);
        let err = split_commutative(&[g.clone()], &[s(1), s(0)], Field::Rational);
        assert!(matches!(err, Err(Error::SplittingFieldFailure(_))));
        let idems = split_commutative(&[g], &[s(1), s(0)], Field::Gaussian).unwrap();
        assert_eq!(idems.len(), 2);
    }

    #[test]
    fn refinement_with_two_generators() {
        // Q³ with elements acting diagonally; first generator separates
        // {1,2} from {3}, second separates 1 from 2.
        let g1 = Matrix::from_rows(vec![
            vec![s(1), s(0), s(0)],
            vec![s(0), s(1), s(0)],
            vec![s(0), s(0), s(3)],
        ]);
        let g2 = Matrix::from_rows(vec![
            vec![s(5), s(0), s(0)],
            vec![s(0), s(7), s(0)],
            vec![s(0), s(0), s(7)],
        ]);
        let idems =
            split_commutative(&[g1, g2], &[s(1), s(1), s(1)], Field::Rational).unwrap();
        assert_eq!(idems.len(), 3);
    }
}
