//! Staged orchestration of one tower: bases and Frobenius systems, block
//! decompositions, branching tables, eigenvalue coordinates and coherent
//! systems, with caching, a dimension ceiling, and the ℚ → ℚ(i) retry on
//! splitting failures.

use crate::algebra::AlgebraElement;
use crate::coherent::{build_system, CoherentSystem, LevelDims, Variant};
use crate::error::{Error, Result};
use crate::exactlin::Field;
use crate::repn::{BlockDecomposition, BranchingTable, EigenvalueTable, LevelData};
use crate::towers::{frobenius, FrobeniusSystem, Tower};

pub const DEFAULT_DIM_CEILING: usize = 1000;

pub struct Engine {
    pub tower: Tower,
    pub max_level: usize,
    /// Was the field pinned by the caller (disables the Gaussian retry)?
    field_pinned: bool,
    levels: Vec<Option<LevelData>>,
    blocks: Vec<Option<BlockDecomposition>>,
    branchings: Vec<Option<BranchingTable>>,
    eigen: Vec<Option<EigenvalueTable>>,
    step_systems: Vec<Option<FrobeniusSystem>>,
    ground_systems: Vec<Option<FrobeniusSystem>>,
    jm: Vec<Option<AlgebraElement>>,
}

impl Engine {
    pub fn new(tower: Tower, max_level: usize, ceiling: usize) -> Result<Engine> {
        let dim = tower.dim(max_level);
        if dim > ceiling {
            return Err(Error::DimensionCeiling(format!(
                "level {max_level} has dimension {dim}, above the ceiling {ceiling}"
            )));
        }
        Ok(Engine {
            tower,
            max_level,
            field_pinned: false,
            levels: (0..=max_level).map(|_| None).collect(),
            blocks: (0..=max_level).map(|_| None).collect(),
            branchings: (0..max_level).map(|_| None).collect(),
            eigen: (0..max_level).map(|_| None).collect(),
            step_systems: (0..max_level).map(|_| None).collect(),
            ground_systems: (0..=max_level).map(|_| None).collect(),
            jm: (0..=max_level).map(|_| None).collect(),
        })
    }

    pub fn with_field(mut self, field: Option<Field>) -> Result<Engine> {
        if let Some(f) = field {
            self.tower = self.tower.with_field(f)?;
            self.field_pinned = true;
        }
        Ok(self)
    }

    pub fn field(&self) -> Field {
        self.tower.field()
    }

    pub fn level(&mut self, n: usize) -> Result<&LevelData> {
        assert!(n <= self.max_level, "level beyond the configured maximum");
        if self.levels[n].is_none() {
            self.levels[n] = Some(LevelData::build(&self.tower, n)?);
        }
        Ok(self.levels[n].as_ref().unwrap())
    }

    /// Immutable accessor; the level must have been built already.
    pub fn level_ref(&self, n: usize) -> &LevelData {
        self.levels[n].as_ref().expect("level not built")
    }

    pub fn blocks_ref(&self, n: usize) -> &BlockDecomposition {
        self.blocks[n].as_ref().expect("blocks not built")
    }

    pub fn branching_ref(&self, n: usize) -> &BranchingTable {
        self.branchings[n].as_ref().expect("branching not built")
    }

    pub fn eigen_ref(&self, n: usize) -> &EigenvalueTable {
        self.eigen[n].as_ref().expect("eigenvalues not built")
    }

    /// Block data, retrying over ℚ(i) when splitting fails and the field
    /// was not pinned by the caller.
    pub fn blocks(&mut self, n: usize) -> Result<&BlockDecomposition> {
        if self.blocks[n].is_none() {
            self.level(n)?;
            let data = self.levels[n].as_ref().unwrap();
            let built = BlockDecomposition::build(&self.tower, data);
            let resolved = match built {
                Err(Error::SplittingFieldFailure(why))
                    if !self.field_pinned && self.tower.field() == Field::Rational =>
                {
                    self.tower = self
                        .tower
                        .clone()
                        .with_field(Field::Gaussian)
                        .map_err(|_| Error::SplittingFieldFailure(why.clone()))?;
                    // Invalidate field-dependent caches and rebuild.
                    for b in self.blocks.iter_mut() {
                        *b = None;
                    }
                    for b in self.branchings.iter_mut() {
                        *b = None;
                    }
                    for e in self.eigen.iter_mut() {
                        *e = None;
                    }
                    BlockDecomposition::build(&self.tower, self.levels[n].as_ref().unwrap())?
                }
                other => other?,
            };
            self.blocks[n] = Some(resolved);
        }
        Ok(self.blocks[n].as_ref().unwrap())
    }

    pub fn branching(&mut self, n: usize) -> Result<&BranchingTable> {
        assert!(n < self.max_level, "branching needs level n+1");
        if self.branchings[n].is_none() {
            self.blocks(n)?;
            self.blocks(n + 1)?;
            let table = BranchingTable::build(
                &self.tower,
                self.levels[n].as_ref().unwrap(),
                self.blocks[n].as_ref().unwrap(),
                self.levels[n + 1].as_ref().unwrap(),
                self.blocks[n + 1].as_ref().unwrap(),
            )?;
            self.branchings[n] = Some(table);
        }
        Ok(self.branchings[n].as_ref().unwrap())
    }

    pub fn jucys_murphy(&mut self, n: usize) -> Result<&AlgebraElement> {
        if self.jm[n].is_none() {
            self.jm[n] = Some(self.tower.jucys_murphy(n)?);
        }
        Ok(self.jm[n].as_ref().unwrap())
    }

    pub fn eigenvalues(&mut self, n: usize) -> Result<&EigenvalueTable> {
        assert!(n < self.max_level, "eigenvalues live on level pairs");
        if self.eigen[n].is_none() {
            self.branching(n)?;
            self.jucys_murphy(n + 1)?;
            let table = EigenvalueTable::build(
                &self.tower,
                self.levels[n].as_ref().unwrap(),
                self.blocks[n].as_ref().unwrap(),
                self.levels[n + 1].as_ref().unwrap(),
                self.blocks[n + 1].as_ref().unwrap(),
                self.branchings[n].as_ref().unwrap(),
                self.jm[n + 1].as_ref().unwrap(),
            )?;
            self.eigen[n] = Some(table);
        }
        Ok(self.eigen[n].as_ref().unwrap())
    }

    /// Eigenvalue tables for transitions 0→1 … (upto−1)→upto.
    pub fn eigen_tables(&mut self, upto: usize) -> Result<Vec<EigenvalueTable>> {
        let mut out = Vec::with_capacity(upto);
        for n in 0..upto {
            self.eigenvalues(n)?;
            let t = self.eigen[n].as_ref().unwrap();
            out.push(EigenvalueTable { n: t.n, alpha: t.alpha.clone() });
        }
        Ok(out)
    }

    pub fn step_system(&mut self, n: usize) -> Result<&FrobeniusSystem> {
        assert!(n < self.max_level, "step system needs level n+1");
        if self.step_systems[n].is_none() {
            self.step_systems[n] = Some(frobenius::frobenius_step(&self.tower, n)?);
        }
        Ok(self.step_systems[n].as_ref().unwrap())
    }

    /// Composed system for A_0 ⊂ A_n.
    pub fn ground_system(&mut self, n: usize) -> Result<&FrobeniusSystem> {
        if self.ground_systems[n].is_none() {
            let sys = if n == 0 {
                frobenius::frobenius_identity(&self.tower, 0)
            } else {
                let step = self.step_system(n - 1)?.clone();
                if n == 1 {
                    step
                } else {
                    let lower = self.ground_system(n - 1)?.clone();
                    frobenius::frobenius_compose(&self.tower, &step, &lower)?
                }
            };
            self.ground_systems[n] = Some(sys);
        }
        Ok(self.ground_systems[n].as_ref().unwrap())
    }

    /// System for A_k ⊂ A_n (composed stepwise).
    pub fn system(&mut self, n: usize, k: usize) -> Result<FrobeniusSystem> {
        if k > n {
            return Err(Error::LevelMismatch(format!("system ({n},{k})")));
        }
        if k == n {
            return Ok(frobenius::frobenius_identity(&self.tower, n));
        }
        let mut sys = self.step_system(k)?.clone();
        for m in k + 1..n {
            let step = self.step_system(m)?.clone();
            sys = frobenius::frobenius_compose(&self.tower, &step, &sys)?;
        }
        Ok(sys)
    }

    pub fn level_dims(&mut self, upto: usize) -> Result<Vec<LevelDims>> {
        let mut out = Vec::with_capacity(upto + 1);
        for n in 0..=upto {
            self.blocks(n)?;
            let b = self.blocks[n].as_ref().unwrap();
            out.push(LevelDims {
                algebra_dim: self.tower.dim(n),
                blocks: b.blocks.iter().map(|x| (x.dim_simple, x.dim_proj)).collect(),
            });
        }
        Ok(out)
    }

    /// Both coherent systems over levels 0..=upto.
    pub fn coherent_system(&mut self, upto: usize, variant: Variant) -> Result<CoherentSystem> {
        let dims = self.level_dims(upto)?;
        let mut mult = Vec::with_capacity(upto);
        for n in 0..upto {
            let table = self.branching(n)?;
            let m = match variant {
                Variant::Plain => table.kappa.clone(),
                Variant::Starred => table.kappa_star.clone(),
            };
            mult.push(m);
        }
        build_system(&dims, &mult, variant)
    }

    /// Partition labels for the symmetric tower (content-based
    /// reconstruction); None for other towers.
    pub fn partition_labels(&mut self, upto: usize) -> Result<Option<Vec<Vec<String>>>> {
        if self.tower.spec_string() != "sym" {
            return Ok(None);
        }
        let mut labels: Vec<Vec<crate::young::Partition>> = vec![vec![vec![]]];
        for n in 0..upto {
            let sizes = self.blocks(n + 1)?.blocks.len();
            let kappa = self.branching(n)?.kappa.clone();
            let alpha = self.eigenvalues(n)?.alpha.clone();
            let mut next: Vec<Option<crate::young::Partition>> = vec![None; sizes];
            for lam in 0..sizes {
                for (mu, row) in kappa.iter().enumerate() {
                    if row[lam] > 0 {
                        if let Some(a) = alpha.get(&(mu, lam)) {
                            if let Some(p) =
                                crate::young::extend_label(&labels[n][mu], a)
                            {
                                next[lam] = Some(p);
                                break;
                            }
                        }
                    }
                }
            }
            let level: Option<Vec<_>> = next.into_iter().collect();
            match level {
                Some(l) => labels.push(l),
                None => return Ok(None),
            }
        }
        Ok(Some(
            labels
                .into_iter()
                .map(|level| level.iter().map(crate::young::label).collect())
                .collect(),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ceiling_guard() {
        let t = Tower::symmetric();
        assert!(matches!(
            Engine::new(t, 7, 1000),
            Err(Error::DimensionCeiling(_))
        ));
        assert!(Engine::new(Tower::symmetric(), 6, 1000).is_ok());
    }

    /// F ≅ ℚ[c]/(c²+1): an even Frobenius algebra whose blocks need i.
    fn gaussian_numbers() -> crate::towers::wreath::WreathData {
        crate::towers::wreath::WreathData::from_json(
            "gaussian-numbers",
            r#"{
                "basis": ["1", "c"],
                "parity": [0, 0],
                "mult": [[0,0,0,"1"], [1,0,1,"1"], [1,1,0,"1"], [0,1,1,"-1"]],
                "trace": ["0", "1"],
                "dual_basis": [0, 1],
                "dual_basis_hat": [1, 0]
            }"#,
        )
        .unwrap()
    }

    #[test]
    fn wreath_retries_over_gaussians() {
        // Splitting the level-1 blocks of ℚ[i]-wreath data fails over ℚ;
        // the engine upgrades to ℚ(i) and succeeds.
        let mut e = Engine::new(Tower::wreath(gaussian_numbers()), 1, 1000).unwrap();
        assert_eq!(e.field(), Field::Rational);
        let blocks = e.blocks(1).unwrap();
        assert_eq!(blocks.blocks.len(), 2);
        assert_eq!(e.field(), Field::Gaussian);
    }

    #[test]
    fn pinned_field_fails_instead_of_retrying() {
        let mut e = Engine::new(Tower::wreath(gaussian_numbers()), 1, 1000)
            .unwrap()
            .with_field(Some(Field::Rational))
            .unwrap();
        assert!(matches!(e.blocks(1), Err(Error::SplittingFieldFailure(_))));
    }

    #[test]
    fn sergeev_blocks_exceed_the_gaussian_field() {
        // The ungraded Sergeev tower needs √2 from level 2 on (J₂² = 2·1),
        // which the scalar model rejects rather than approximates.
        let mut e = Engine::new(Tower::sergeev(), 2, 1000).unwrap();
        assert!(matches!(e.blocks(2), Err(Error::SplittingFieldFailure(_))));
        // Level 1 (the Clifford line Cl₁ ≅ ℚ×ℚ) still splits rationally.
        let mut e1 = Engine::new(Tower::sergeev(), 1, 1000).unwrap();
        assert_eq!(e1.blocks(1).unwrap().blocks.len(), 2);
    }

    #[test]
    fn symmetric_partition_labels() {
        let mut e = Engine::new(Tower::symmetric(), 3, 1000).unwrap();
        let labels = e.partition_labels(3).unwrap().unwrap();
        assert_eq!(labels[0], vec!["[]"]);
        assert_eq!(labels[1], vec!["[1]"]);
        let mut l3 = labels[3].clone();
        l3.sort();
        assert_eq!(l3, vec!["[1,1,1]", "[2,1]", "[3]"]);
    }
}
