//! Linear constraints on the eleven ansatz constants, imposed in stages.
//!
//! Each constraint is a linear map from the constants to a list of
//! expressions. Because canonical forms are unique, an expression vanishes
//! exactly when every stored coefficient vanishes, so each constraint turns
//! into finitely many linear equations in `a, …, k`. The equations of all
//! stages so far are kept together and solved from scratch after each stage.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::construct::ansatz::{ansatz_basis, cyclic_field, AnsatzParams, PARAM_NAMES};
use crate::construct::reference::varpi;
use crate::error::{Error, Result};
use crate::exactnum::{rat, GoldenNumber, Rational};
use crate::linalg::{icosahedral_generators, solve_linear, solve_linear_ordered, LinearSolution, LinearSystem};
use crate::trigexpr::{Monomial, TrigExpr, TrigKey};

type G = GoldenNumber;

/// Degree of the Taylor head pinned by [`Stage::TaylorMatch`].
pub const HEAD_DEGREE: u32 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Stage {
    Unconstrained,
    /// Taylor terms of degree below six vanish and the degree-6 part is `ϖ`.
    TaylorMatch,
    /// The cyclic field is solenoidal.
    DivergenceZero,
    /// The cyclic field commutes with `γ`.
    GammaInvariance,
}

impl Stage {
    pub const ORDER: [Stage; 4] = [
        Stage::Unconstrained,
        Stage::TaylorMatch,
        Stage::DivergenceZero,
        Stage::GammaInvariance,
    ];

    pub fn next(self) -> Option<Stage> {
        let i = Stage::ORDER.iter().position(|&s| s == self)?;
        Stage::ORDER.get(i + 1).copied()
    }

    pub fn name(self) -> &'static str {
        match self {
            Stage::Unconstrained => "unconstrained",
            Stage::TaylorMatch => "taylor_match",
            Stage::DivergenceZero => "divergence_zero",
            Stage::GammaInvariance => "gamma_invariance",
        }
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Pivots are searched from `k` back to `a`, so the constants reported as
/// free are the alphabetically earliest possible choice.
const PIVOT_ORDER: [usize; 11] = [10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0];

/// An affine set of ansatz constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnsatzSpace {
    pub particular: AnsatzParams,
    pub basis: Vec<AnsatzParams>,
    pub stage: Stage,
    system: LinearSystem<G>,
}

impl AnsatzSpace {
    pub fn unconstrained() -> Self {
        AnsatzSpace {
            particular: AnsatzParams::zero(),
            basis: (0..11).map(AnsatzParams::unit).collect(),
            stage: Stage::Unconstrained,
            system: LinearSystem::new(11),
        }
    }

    fn from_system(system: LinearSystem<G>, stage: Stage) -> Result<Self> {
        let solution = solve_linear_ordered(&system, &PIVOT_ORDER)?;
        let LinearSolution::Affine(sol) = solution else {
            return Err(Error::InconsistentConstraints {
                stage: stage.name().into(),
            });
        };
        Ok(AnsatzSpace {
            particular: AnsatzParams::from_slice(&sol.particular)?,
            basis: sol
                .basis
                .iter()
                .map(|b| AnsatzParams::from_slice(b))
                .collect::<Result<_>>()?,
            stage,
            system,
        })
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// The constants that parametrize the space: basis vector `n` is the one
    /// with a 1 in the `n`-th reported slot and 0 in the other reported slots.
    pub fn free_parameters(&self) -> Vec<char> {
        let n = self.basis.len();
        (0..11)
            .filter(|&c| {
                let ones = self.basis.iter().filter(|b| b.0[c].is_one()).count();
                let zeros = self.basis.iter().filter(|b| b.0[c].is_zero()).count();
                ones == 1 && zeros == n - 1 && self.particular.0[c].is_zero()
            })
            .map(|c| PARAM_NAMES[c])
            .collect()
    }

    /// `particular + Σ tᵢ basisᵢ`.
    pub fn point(&self, t: &[G]) -> Result<AnsatzParams> {
        if t.len() != self.basis.len() {
            return Err(Error::DimensionMismatch {
                expected: self.basis.len(),
                found: t.len(),
            });
        }
        let mut p = self.particular.clone();
        for (ti, b) in t.iter().zip(&self.basis) {
            for (pj, bj) in p.0.iter_mut().zip(&b.0) {
                *pj += &(ti.clone() * bj);
            }
        }
        Ok(p)
    }

    /// Whether `p` satisfies every equation accumulated so far.
    pub fn contains(&self, p: &AnsatzParams) -> bool {
        self.system.residual(p.as_slice()).iter().all(Zero::is_zero)
    }

    pub fn equations(&self) -> usize {
        self.system.equations()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "stage": self.stage.name(),
            "dimension": self.dimension(),
            "free": self.free_parameters().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "particular": self.particular.to_json(),
            "basis": self.basis.iter().map(AnsatzParams::to_json).collect::<Vec<_>>(),
        })
    }
}

type CoefficientKey = (usize, TrigKey<G>, Monomial);

fn coefficient_map(exprs: &[TrigExpr<G>]) -> BTreeMap<CoefficientKey, G> {
    let mut out = BTreeMap::new();
    for (i, e) in exprs.iter().enumerate() {
        for ((key, mono), c) in e.coefficients() {
            out.insert((i, key.clone(), mono.clone()), c.clone());
        }
    }
    out
}

/// Turns the linear constraint `L(p) = target` into equations in the
/// unknowns indexed by `columns`, given `L` applied to each unit vector.
fn harvest(
    images: &[Vec<TrigExpr<G>>],
    target: &[TrigExpr<G>],
    system: &mut LinearSystem<G>,
    columns: &[usize],
) -> Result<()> {
    let maps: Vec<_> = images.iter().map(|e| coefficient_map(e)).collect();
    let target_map = coefficient_map(target);
    let mut keys: Vec<&CoefficientKey> = maps.iter().flat_map(|m| m.keys()).collect();
    keys.extend(target_map.keys());
    keys.sort();
    keys.dedup();
    for key in keys {
        let mut row = vec![G::zero(); system.unknowns()];
        for (m, &col) in maps.iter().zip(columns) {
            if let Some(c) = m.get(key) {
                row[col] = c.clone();
            }
        }
        let rhs = target_map.get(key).cloned().unwrap_or_else(G::zero);
        system.push(row, rhs)?;
    }
    Ok(())
}

/// Taylor polynomial of `g` up to the head degree.
pub fn taylor_constraint(g: &TrigExpr<G>) -> Vec<TrigExpr<G>> {
    vec![TrigExpr::from_poly(g.taylor(HEAD_DEGREE))]
}

/// Divergence of the cyclic field built from `g`.
pub fn divergence_constraint(g: &TrigExpr<G>) -> Result<Vec<TrigExpr<G>>> {
    Ok(vec![cyclic_field(g)?.divergence()])
}

/// First component of `γ⁻¹∘(g, g∘β, g∘β²)∘γ` minus `g`. Writing
/// `(A, B, C)` for the cyclic field composed with `γ`, and using that the
/// first row of `γ⁻¹ = γᵀ` is `(1/2, φ/2, 1/(2φ))`, this is
/// `A/2 + φB/2 + C/(2φ) − g`.
pub fn gamma_constraint(g: &TrigExpr<G>) -> Result<Vec<TrigExpr<G>>> {
    let [_, _, gamma] = icosahedral_generators();
    let images: Vec<Vec<G>> = gamma.rows().iter().map(|r| r.to_vec()).collect();
    let v = cyclic_field(g)?;
    let weights = gamma.transpose();
    let mut first = TrigExpr::zero(3);
    for (j, c) in v.components().iter().enumerate() {
        first = first + c.substitute(&images).scale(weights.get(0, j));
    }
    Ok(vec![first - g.clone()])
}

fn stage_images(stage: Stage, basis: &[TrigExpr<G>]) -> Result<Vec<Vec<TrigExpr<G>>>> {
    basis
        .iter()
        .map(|g| match stage {
            Stage::Unconstrained => Ok(Vec::new()),
            Stage::TaylorMatch => Ok(taylor_constraint(g)),
            Stage::DivergenceZero => divergence_constraint(g),
            Stage::GammaInvariance => gamma_constraint(g),
        })
        .collect()
}

fn stage_target(stage: Stage) -> Vec<TrigExpr<G>> {
    match stage {
        Stage::TaylorMatch => vec![TrigExpr::from_poly(varpi())],
        Stage::Unconstrained => Vec::new(),
        _ => vec![TrigExpr::zero(3)],
    }
}

/// Imposes the next stage of constraints.
pub fn constraint_stage(space: &AnsatzSpace, stage: Stage) -> Result<AnsatzSpace> {
    if space.stage.next() != Some(stage) {
        return Err(Error::StageOrder {
            current: space.stage.name().into(),
            requested: stage.name().into(),
        });
    }
    let basis = ansatz_basis();
    let mut system = space.system.clone();
    let columns: Vec<usize> = (0..11).collect();
    harvest(&stage_images(stage, &basis)?, &stage_target(stage), &mut system, &columns)?;
    AnsatzSpace::from_system(system, stage)
}

/// All stages in order, starting from the unconstrained space.
pub fn run_pipeline() -> Result<Vec<AnsatzSpace>> {
    let mut spaces = vec![AnsatzSpace::unconstrained()];
    while let Some(next) = spaces.last().and_then(|s| s.stage.next()) {
        let space = constraint_stage(spaces.last().expect("nonempty"), next)?;
        spaces.push(space);
    }
    Ok(spaces)
}

/// A linear subspace of ansatz constants together with the columns (indices
/// into `a, …, k`) that were allowed to vary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousSpace {
    pub columns: Vec<usize>,
    pub basis: Vec<AnsatzParams>,
}

impl HomogeneousSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Whether `p` is a linear combination of the basis.
    pub fn contains(&self, p: &AnsatzParams) -> Result<bool> {
        let n = self.basis.len();
        let rows = (0..11)
            .map(|r| ((0..n).map(|k| self.basis[k].0[r].clone()).collect(), p.0[r].clone()))
            .collect();
        let sys = LinearSystem::from_rows(n, rows)?;
        Ok(!matches!(solve_linear(&sys), LinearSolution::Inconsistent))
    }
}

/// Solenoidal, icosahedrally invariant fields among the ansatz restricted to
/// the given constants (the rest are held at zero). Every summand already
/// solves the Helmholtz equation and the Klein-four and cyclic symmetries
/// hold by construction.
pub fn homogeneous_space(columns: &[usize]) -> Result<HomogeneousSpace> {
    let full = ansatz_basis();
    let basis: Vec<TrigExpr<G>> = columns.iter().map(|&c| full[c].clone()).collect();
    let local: Vec<usize> = (0..columns.len()).collect();
    let mut system = LinearSystem::new(columns.len());
    for stage in [Stage::DivergenceZero, Stage::GammaInvariance] {
        harvest(&stage_images(stage, &basis)?, &[TrigExpr::zero(3)], &mut system, &local)?;
    }
    let LinearSolution::Affine(sol) = solve_linear(&system) else {
        return Err(Error::InconsistentConstraints {
            stage: "homogeneous".into(),
        });
    };
    let basis = sol
        .basis
        .iter()
        .map(|v| {
            let mut p = AnsatzParams::zero();
            for (&c, x) in columns.iter().zip(v) {
                p.0[c] = x.clone();
            }
            p
        })
        .collect();
    Ok(HomogeneousSpace {
        columns: columns.to_vec(),
        basis,
    })
}

/// The space for the full first-order ansatz.
pub fn icosahedral_solution_space() -> Result<HomogeneousSpace> {
    homogeneous_space(&(0..11).collect::<Vec<_>>())
}

/// Only the constant amplitudes `c, d, e` of the cosine terms.
pub fn constants_only_space() -> Result<HomogeneousSpace> {
    homogeneous_space(&[2, 3, 4])
}

/// `b = b₀ + m·a` on the final one-parameter family, as `(b₀, m)`.
pub fn b_relation(space: &AnsatzSpace) -> Result<(G, G)> {
    if space.free_parameters() != ['a'] {
        return Err(Error::InvalidArgument(format!(
            "expected a family parametrized by a alone, found {:?}",
            space.free_parameters()
        )));
    }
    Ok((space.particular.0[1].clone(), space.basis[0].0[1].clone()))
}

/// The relation `b = 1920 − (3/2)a − (√5/2)a + 384√5` as `(b₀, m)`.
pub fn expected_b_relation() -> (G, G) {
    (
        G::new(Rational::from_integer(1920.into()), Rational::from_integer(384.into())),
        G::new(rat(-3, 2), rat(-1, 2)),
    )
}

/// The rational value of `a` on the family `b = b₀ + m·a` with `a = τb`.
///
/// The map `a ↦ a − τm·τa` is only `Q`-linear, and when `N(m) = 1` it has a
/// one-dimensional kernel, so `a = τb` alone leaves a line of solutions
/// inside `Q(√5)`. Asking for `a ∈ Q` picks out a single point. Writing
/// `τm = p + q√5`, the condition `a = τb₀ + τm·a` splits into
/// `(1 − p)·a = rational part of τb₀` and `−q·a = √5 part of τb₀`.
pub fn tau_symmetric_a(b0: &G, m: &G) -> Result<G> {
    let tm = m.tau();
    let tb0 = b0.tau();
    let rows = vec![
        (vec![Rational::one() - tm.rational_part()], tb0.rational_part().clone()),
        (vec![-tm.radical_part().clone()], tb0.radical_part().clone()),
    ];
    let sys = LinearSystem::<Rational>::from_rows(1, rows)?;
    match solve_linear(&sys) {
        LinearSolution::Affine(sol) if sol.basis.is_empty() => Ok(G::rational(sol.particular[0].clone())),
        _ => Err(Error::InconsistentConstraints {
            stage: "tau symmetry".into(),
        }),
    }
}

/// A nonzero `k` with `k = τm·τk`, or `None` when `a ↦ a − τm·τa` is
/// injective. Adding any rational multiple of `k` to a solution of `a = τb`
/// gives another solution.
pub fn tau_kernel(m: &G) -> Option<G> {
    let tm = m.tau();
    let (p, q) = (tm.rational_part().clone(), tm.radical_part().clone());
    let five = Rational::from_integer(5.into());
    // (u + v√5) − (p + q√5)(u − v√5) = ((1 − p)u + 5qv) + (−qu + (1 + p)v)√5
    let rows = vec![
        (vec![Rational::one() - &p, five * &q], Rational::zero()),
        (vec![-q, Rational::one() + &p], Rational::zero()),
    ];
    let sys = LinearSystem::<Rational>::from_rows(2, rows).ok()?;
    match solve_linear(&sys) {
        LinearSolution::Affine(sol) => sol
            .basis
            .first()
            .map(|k| G::new(k[0].clone(), k[1].clone())),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stage_order_is_enforced() {
        let s = AnsatzSpace::unconstrained();
        assert!(matches!(
            constraint_stage(&s, Stage::DivergenceZero),
            Err(Error::StageOrder { .. })
        ));
        assert_eq!(Stage::GammaInvariance.next(), None);
    }

    #[test]
    fn tau_symmetric_point_of_expected_relation() {
        let (b0, m) = expected_b_relation();
        let a = tau_symmetric_a(&b0, &m).unwrap();
        assert_eq!(a, G::integer(768));
        assert_eq!(b0.clone() + m.clone() * &a, G::integer(768));
        let k = tau_kernel(&m).unwrap();
        assert!(!k.is_rational());
        let shifted = a + &k;
        assert_eq!(shifted, (b0 + m * &shifted).tau());
    }
}
