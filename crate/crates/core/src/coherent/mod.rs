//! The two coherent probability systems on the branching graphs of a
//! tower, their transition and co-transition spectral measures, moment
//! functions, and the seeded growth-process sampler.

pub mod sample;

use crate::error::{Error, Result};
use crate::exactlin::Scalar;
use crate::exec;
use crate::repn::EigenvalueTable;
use serde::{Deserialize, Serialize};

pub use sample::{GrowthPath, SplitMix64};

/// Which multiplicity table drives the edges and transition functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Variant {
    /// Simple dimensions drive descent, projective dimensions drive ascent.
    #[serde(rename = "plain")]
    Plain,
    /// Projective dimensions drive descent, simple dimensions drive ascent.
    #[serde(rename = "starred")]
    Starred,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Plain => "plain",
            Variant::Starred => "starred",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    #[serde(rename = "up")]
    Up,
    #[serde(rename = "down")]
    Down,
}

/// Vertex and edge data of the graded branching graph: levels 0..=N with
/// edge multiplicities between adjacent levels only.
pub struct GradedGraph {
    pub level_sizes: Vec<usize>,
    /// multiplicity[n][mu][lam] between Γ_n and Γ_{n+1}
    pub multiplicities: Vec<Vec<Vec<usize>>>,
}

impl GradedGraph {
    pub fn max_level(&self) -> usize {
        self.level_sizes.len() - 1
    }

    pub fn has_edge(&self, n: usize, mu: usize, lam: usize) -> bool {
        self.multiplicities[n][mu][lam] > 0
    }
}

/// Dimension data per level required to build the systems.
pub struct LevelDims {
    pub algebra_dim: usize,
    /// (dim simple, dim projective) per vertex, in canonical order.
    pub blocks: Vec<(usize, usize)>,
}

pub struct CoherentSystem {
    pub variant: Variant,
    pub graph: GradedGraph,
    /// pl[n][v]: the Plancherel-type measure of level n.
    pub pl: Vec<Vec<Scalar>>,
    /// p_down[n][lam][mu]: descent from Γ_{n+1} to Γ_n.
    pub p_down: Vec<Vec<Vec<Scalar>>>,
    /// p_up[n][mu][lam]: ascent from Γ_n to Γ_{n+1}.
    pub p_up: Vec<Vec<Vec<Scalar>>>,
}

/// Build one coherent system from block dimensions and branching
/// multiplicities; verifies stochasticity, positivity, coherence and the
/// up/down consistency identity exactly.
pub fn build_system(
    dims: &[LevelDims],
    multiplicities: &[Vec<Vec<usize>>],
    variant: Variant,
) -> Result<CoherentSystem> {
    assert_eq!(dims.len(), multiplicities.len() + 1, "level count mismatch");
    let rat = |num: usize, den: usize| {
        Scalar::from_ratio(num as i64, den as i64)
    };
    let mut pl = Vec::with_capacity(dims.len());
    for (n, d) in dims.iter().enumerate() {
        let mut level = Vec::with_capacity(d.blocks.len());
        for (v, &(dl, dp)) in d.blocks.iter().enumerate() {
            if dl == 0 || dp == 0 {
                return Err(Error::ZeroMassVertex(format!("vertex {v} at level {n}")));
            }
            level.push(rat(dl * dp, d.algebra_dim));
        }
        pl.push(level);
    }

    let mut p_down = Vec::with_capacity(multiplicities.len());
    let mut p_up = Vec::with_capacity(multiplicities.len());
    for (n, kap) in multiplicities.iter().enumerate() {
        let lo = &dims[n];
        let hi = &dims[n + 1];
        let ratio = rat(lo.algebra_dim, hi.algebra_dim);
        let mut down = vec![vec![Scalar::zero(); lo.blocks.len()]; hi.blocks.len()];
        let mut up = vec![vec![Scalar::zero(); hi.blocks.len()]; lo.blocks.len()];
        for (mu, &(dl_mu, dp_mu)) in lo.blocks.iter().enumerate() {
            for (lam, &(dl_lam, dp_lam)) in hi.blocks.iter().enumerate() {
                let k = kap[mu][lam];
                if k == 0 {
                    continue;
                }
                match variant {
                    Variant::Plain => {
                        down[lam][mu] = rat(k * dl_mu, dl_lam);
                        up[mu][lam] = ratio.clone() * rat(k * dp_lam, dp_mu);
                    }
                    Variant::Starred => {
                        down[lam][mu] = rat(k * dp_mu, dp_lam);
                        up[mu][lam] = ratio.clone() * rat(k * dl_lam, dl_mu);
                    }
                }
            }
        }
        p_down.push(down);
        p_up.push(up);
    }

    let graph = GradedGraph {
        level_sizes: dims.iter().map(|d| d.blocks.len()).collect(),
        multiplicities: multiplicities.to_vec(),
    };
    let sys = CoherentSystem { variant, graph, pl, p_down, p_up };
    sys.verify()?;
    Ok(sys)
}

impl CoherentSystem {
    pub fn max_level(&self) -> usize {
        self.pl.len() - 1
    }

    fn verify(&self) -> Result<()> {
        let one = Scalar::one();
        let fail = |msg: String| Err(Error::InvariantFailure(msg));
        for (n, level) in self.pl.iter().enumerate() {
            let total = level.iter().fold(Scalar::zero(), |a, b| a + b.clone());
            if total != one {
                return fail(format!("measure at level {n} sums to {total}"));
            }
        }
        for n in 0..self.p_down.len() {
            for (lam, row) in self.p_down[n].iter().enumerate() {
                let total = row.iter().fold(Scalar::zero(), |a, b| a + b.clone());
                if total != one {
                    return fail(format!("descent row ({n},{lam}) sums to {total}"));
                }
            }
            for (mu, row) in self.p_up[n].iter().enumerate() {
                let total = row.iter().fold(Scalar::zero(), |a, b| a + b.clone());
                if total != one {
                    return fail(format!("ascent row ({n},{mu}) sums to {total}"));
                }
            }
            // coherence: Σ_λ Pl_{n+1}(λ)·p_down(λ,μ) = Pl_n(μ)
            for mu in 0..self.pl[n].len() {
                let mut acc = Scalar::zero();
                for lam in 0..self.pl[n + 1].len() {
                    acc += self.pl[n + 1][lam].clone() * self.p_down[n][lam][mu].clone();
                }
                if acc != self.pl[n][mu] {
                    return fail(format!("coherence fails at level {n}, vertex {mu}"));
                }
            }
            // up/down consistency: p_up(μ,λ)·Pl_n(μ) = p_down(λ,μ)·Pl_{n+1}(λ)
            for mu in 0..self.pl[n].len() {
                for lam in 0..self.pl[n + 1].len() {
                    let lhs = self.p_up[n][mu][lam].clone() * self.pl[n][mu].clone();
                    let rhs = self.p_down[n][lam][mu].clone() * self.pl[n + 1][lam].clone();
                    if lhs != rhs {
                        return fail(format!(
                            "up/down consistency fails at ({n},{mu},{lam})"
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Exact level-n marginal of the growth process by full path
    /// enumeration (product of ascent probabilities along every path).
    pub fn exact_marginal_by_enumeration(&self, n: usize) -> Vec<Scalar> {
        let mut totals = vec![Scalar::zero(); self.pl[n].len()];
        let mut stack: Vec<(usize, usize, Scalar)> = vec![(0, 0, Scalar::one())];
        while let Some((level, v, weight)) = stack.pop() {
            if level == n {
                totals[v] += weight;
                continue;
            }
            for (next, p) in self.p_up[level][v].iter().enumerate() {
                if !p.is_zero() {
                    stack.push((level + 1, next, weight.clone() * p.clone()));
                }
            }
        }
        totals
    }

    /// Sample `paths` growth trajectories of the given length (parallel
    /// across paths under the default feature set).
    pub fn sample_growth(&self, steps: usize, seed: u64, paths: usize) -> Result<Vec<GrowthPath>> {
        if steps > self.p_up.len() {
            return Err(Error::Config(format!(
                "cannot take {steps} steps on a graph with {} transitions",
                self.p_up.len()
            )));
        }
        let walks = exec::map_indexed(paths, |i| {
            sample::walk(&self.p_up, steps, SplitMix64::for_path(seed, i as u64))
                .expect("walk cannot fail on a verified system")
        });
        Ok(walks)
    }

    /// Sequential twin of [`CoherentSystem::sample_growth`], for
    /// benchmarking and as the reference order.
    pub fn sample_growth_seq(
        &self,
        steps: usize,
        seed: u64,
        paths: usize,
    ) -> Result<Vec<GrowthPath>> {
        if steps > self.p_up.len() {
            return Err(Error::Config(format!(
                "cannot take {steps} steps on a graph with {} transitions",
                self.p_up.len()
            )));
        }
        Ok(exec::map_indexed_seq(paths, |i| {
            sample::walk(&self.p_up, steps, SplitMix64::for_path(seed, i as u64))
                .expect("walk cannot fail on a verified system")
        }))
    }
}

/// Discrete spectral measure attached to one vertex: atoms at eigenvalue
/// coordinates weighted by transition probabilities.
#[derive(Debug, Clone, Serialize)]
pub struct SpectralMeasure {
    pub level: usize,
    pub vertex: usize,
    pub direction: Direction,
    pub variant: Variant,
    /// (location, mass), locations strictly increasing.
    pub atoms: Vec<(Scalar, Scalar)>,
}

/// ν_{↑,μ} or ν_{↓,μ}: masses from the system's transition rows, located
/// at the eigenvalue coordinates. Coinciding locations merge by summing
/// masses. Coordinates must be real.
pub fn spectral_measure(
    sys: &CoherentSystem,
    eigen: &[EigenvalueTable],
    level: usize,
    vertex: usize,
    direction: Direction,
) -> Result<SpectralMeasure> {
    let mut atoms: Vec<(Scalar, Scalar)> = Vec::new();
    let push = |atoms: &mut Vec<(Scalar, Scalar)>, loc: Scalar, mass: Scalar| {
        if !loc.is_real() {
            return Err(Error::NonRealCoordinate(loc.to_string()));
        }
        atoms.push((loc, mass));
        Ok(())
    };
    match direction {
        Direction::Up => {
            if level >= sys.p_up.len() {
                return Err(Error::Config(format!(
                    "no ascent data above level {level}"
                )));
            }
            let table = &eigen[level];
            for (lam, p) in sys.p_up[level][vertex].iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                let alpha = table.alpha.get(&(vertex, lam)).ok_or_else(|| {
                    Error::MissingEigenvalue(format!("({vertex},{lam}) above level {level}"))
                })?;
                push(&mut atoms, alpha.clone(), p.clone())?;
            }
        }
        Direction::Down => {
            if level == 0 {
                return Err(Error::Config("no descent data below level 0".into()));
            }
            let table = &eigen[level - 1];
            for (eta, p) in sys.p_down[level - 1][vertex].iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                let alpha = table.alpha.get(&(eta, vertex)).ok_or_else(|| {
                    Error::MissingEigenvalue(format!("({eta},{vertex}) below level {level}"))
                })?;
                push(&mut atoms, alpha.clone(), p.clone())?;
            }
        }
    }
    // merge equal locations
    atoms.sort_by(|a, b| crate::exactlin::poly::scalar_order(&a.0, &b.0));
    let mut merged: Vec<(Scalar, Scalar)> = Vec::with_capacity(atoms.len());
    for (loc, mass) in atoms {
        match merged.last_mut() {
            Some((l, m)) if *l == loc => *m += mass,
            _ => merged.push((loc, mass)),
        }
    }
    let total = merged
        .iter()
        .fold(Scalar::zero(), |a, (_, m)| a + m.clone());
    if total != Scalar::one() {
        return Err(Error::InvariantFailure(format!(
            "spectral measure has total mass {total}"
        )));
    }
    Ok(SpectralMeasure {
        level,
        vertex,
        direction,
        variant: sys.variant,
        atoms: merged,
    })
}

/// k-th moment Σ mass·location^k, exact.
pub fn moment(sm: &SpectralMeasure, k: u32) -> Scalar {
    sm.atoms
        .iter()
        .fold(Scalar::zero(), |acc, (loc, mass)| acc + mass * &loc.pow(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Young-lattice head: levels 0..=2 with unit multiplicities.
    fn tiny_dims() -> (Vec<LevelDims>, Vec<Vec<Vec<usize>>>) {
        let dims = vec![
            LevelDims { algebra_dim: 1, blocks: vec![(1, 1)] },
            LevelDims { algebra_dim: 1, blocks: vec![(1, 1)] },
            LevelDims { algebra_dim: 2, blocks: vec![(1, 1), (1, 1)] },
        ];
        let mult = vec![vec![vec![1]], vec![vec![1, 1]]];
        (dims, mult)
    }

    #[test]
    fn plancherel_level_two_is_half_half() {
        let (dims, mult) = tiny_dims();
        let sys = build_system(&dims, &mult, Variant::Plain).unwrap();
        assert_eq!(sys.pl[2], vec![Scalar::from_ratio(1, 2), Scalar::from_ratio(1, 2)]);
    }

    #[test]
    fn enumeration_reproduces_marginal() {
        let (dims, mult) = tiny_dims();
        let sys = build_system(&dims, &mult, Variant::Plain).unwrap();
        for n in 0..=2 {
            assert_eq!(sys.exact_marginal_by_enumeration(n), sys.pl[n]);
        }
    }

    #[test]
    fn zero_mass_vertex_is_rejected() {
        let dims = vec![LevelDims { algebra_dim: 1, blocks: vec![(1, 0)] }];
        assert!(matches!(
            build_system(&dims, &[], Variant::Plain),
            Err(Error::ZeroMassVertex(_))
        ));
    }

    #[test]
    fn zero_step_paths_stay_at_origin() {
        let (dims, mult) = tiny_dims();
        let sys = build_system(&dims, &mult, Variant::Plain).unwrap();
        let paths = sys.sample_growth(0, 9, 4).unwrap();
        assert!(paths.iter().all(|p| p.vertices == vec![0]));
    }

    #[test]
    fn fixed_seed_reruns_are_bit_identical() {
        let (dims, mult) = tiny_dims();
        let sys = build_system(&dims, &mult, Variant::Plain).unwrap();
        let a = sys.sample_growth(2, 7, 100).unwrap();
        let b = sys.sample_growth(2, 7, 100).unwrap();
        assert_eq!(a, b);
        let c = sys.sample_growth_seq(2, 7, 100).unwrap();
        assert_eq!(a, c);
    }

    #[test]
    fn atom_merge_convention() {
        // Synthetic eigen table with a collision: both upper vertices carry
        // the same coordinate, so the two atoms merge into one.
        use std::collections::BTreeMap;
        let (dims, mult) = tiny_dims();
        let sys = build_system(&dims, &mult, Variant::Plain).unwrap();
        let mut t0 = BTreeMap::new();
        t0.insert((0usize, 0usize), Scalar::zero());
        let mut t1 = BTreeMap::new();
        t1.insert((0usize, 0usize), Scalar::from_int(5));
        t1.insert((0usize, 1usize), Scalar::from_int(5));
        let tables = vec![
            EigenvalueTable { n: 0, alpha: t0 },
            EigenvalueTable { n: 1, alpha: t1 },
        ];
        let sm = spectral_measure(&sys, &tables, 1, 0, Direction::Up).unwrap();
        assert_eq!(sm.atoms.len(), 1);
        assert_eq!(sm.atoms[0], (Scalar::from_int(5), Scalar::one()));
        assert_eq!(moment(&sm, 0), Scalar::one());
        assert_eq!(moment(&sm, 2), Scalar::from_int(25));
    }

    #[test]
    fn non_real_coordinate_is_an_error() {
        use std::collections::BTreeMap;
        let (dims, mult) = tiny_dims();
        let sys = build_system(&dims, &mult, Variant::Plain).unwrap();
        let mut t0 = BTreeMap::new();
        t0.insert((0usize, 0usize), Scalar::i());
        let tables = vec![EigenvalueTable { n: 0, alpha: t0 }];
        assert!(matches!(
            spectral_measure(&sys, &tables, 0, 0, Direction::Up),
            Err(Error::NonRealCoordinate(_))
        ));
    }
}
