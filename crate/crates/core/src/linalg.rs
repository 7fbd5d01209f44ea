//! Exact linear algebra over a [`Scalar`] field: small square matrices, finite
//! matrix groups generated by closure, line orbits, and affine solution sets of
//! linear systems.

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactnum::{rat, GoldenNumber, Rational, Scalar, Sign};

pub type Vec3G = [GoldenNumber; 3];
pub type Mat3G = Mat<GoldenNumber, 3>;

pub fn dot<S: Scalar, const N: usize>(a: &[S; N], b: &[S; N]) -> S {
    a.iter()
        .zip(b)
        .fold(S::zero(), |acc, (x, y)| acc + x.clone() * y)
}

pub fn cross<S: Scalar>(a: &[S; 3], b: &[S; 3]) -> [S; 3] {
    [
        a[1].clone() * &b[2] - a[2].clone() * &b[1],
        a[2].clone() * &b[0] - a[0].clone() * &b[2],
        a[0].clone() * &b[1] - a[1].clone() * &b[0],
    ]
}

pub fn scale<S: Scalar, const N: usize>(v: &[S; N], c: &S) -> [S; N] {
    std::array::from_fn(|i| v[i].clone() * c)
}

/// Dense `N×N` matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat<S, const N: usize> {
    rows: [[S; N]; N],
}

impl<S: Scalar, const N: usize> Mat<S, N> {
    pub fn from_rows(rows: [[S; N]; N]) -> Self {
        Mat { rows }
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> S) -> Self {
        Mat {
            rows: std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))),
        }
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { S::one() } else { S::zero() })
    }

    pub fn diag(d: [S; N]) -> Self {
        Self::from_fn(|i, j| if i == j { d[i].clone() } else { S::zero() })
    }

    pub fn neg_identity() -> Self {
        Self::from_fn(|i, j| if i == j { -S::one() } else { S::zero() })
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[[S; N]; N] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[S; N] {
        &self.rows[i]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.rows[j][i].clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_fn(|i, j| {
            (0..N).fold(S::zero(), |acc, k| {
                acc + self.rows[i][k].clone() * &other.rows[k][j]
            })
        })
    }

    pub fn apply(&self, v: &[S; N]) -> [S; N] {
        std::array::from_fn(|i| dot(&self.rows[i], v))
    }

    pub fn determinant(&self) -> S {
        let mut m: Vec<Vec<S>> = self.rows.iter().map(|r| r.to_vec()).collect();
        let mut det = S::one();
        for col in 0..N {
            let Some(p) = (col..N).find(|&r| !m[r][col].is_zero()) else {
                return S::zero();
            };
            if p != col {
                m.swap(p, col);
                det = -det;
            }
            let pivot = m[col][col].clone();
            det = det * &pivot;
            let inv = pivot.checked_inv().expect("nonzero pivot");
            for r in col + 1..N {
                if m[r][col].is_zero() {
                    continue;
                }
                let f = m[r][col].clone() * &inv;
                for c in col..N {
                    let t = f.clone() * &m[col][c];
                    m[r][c] -= &t;
                }
            }
        }
        det
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self> {
        let mut m: Vec<Vec<S>> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut row = r.to_vec();
                row.extend((0..N).map(|j| if i == j { S::one() } else { S::zero() }));
                row
            })
            .collect();
        for col in 0..N {
            let p = (col..N)
                .find(|&r| !m[r][col].is_zero())
                .ok_or(Error::NotInvertible)?;
            m.swap(p, col);
            let inv = m[col][col].checked_inv().ok_or(Error::NotInvertible)?;
            for c in 0..2 * N {
                m[col][c] = m[col][c].clone() * &inv;
            }
            for r in 0..N {
                if r == col || m[r][col].is_zero() {
                    continue;
                }
                let f = m[r][col].clone();
                for c in 0..2 * N {
                    let t = f.clone() * &m[col][c];
                    m[r][c] -= &t;
                }
            }
        }
        Ok(Self::from_fn(|i, j| m[i][N + j].clone()))
    }

    pub fn is_orthogonal(&self) -> bool {
        self.transpose().mul(self) == Self::identity()
    }

    pub fn is_special_orthogonal(&self) -> bool {
        self.is_orthogonal() && self.determinant() == S::one()
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Mat<T, N> {
        Mat::from_fn(|i, j| f(&self.rows[i][j]))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|r| Value::Array(r.iter().map(|x| json!(x.to_string())).collect()))
                .collect(),
        )
    }
}

/// The generators `α = diag(−1,−1,1)`, `β` (cyclic permutation) and `γ` of
/// the rotation group of the icosahedron.
pub fn icosahedral_generators() -> [Mat3G; 3] {
    let g = |x: i64| GoldenNumber::integer(x);
    let half = GoldenNumber::rational(rat(1, 2));
    let phi_half = GoldenNumber::phi() * &half;
    let phi_inv_half = GoldenNumber::phi_inv() * &half;
    let alpha = Mat::diag([g(-1), g(-1), g(1)]);
    let beta = Mat::from_rows([[g(0), g(0), g(1)], [g(1), g(0), g(0)], [g(0), g(1), g(0)]]);
    let gamma = Mat::from_rows([
        [half.clone(), -phi_half.clone(), phi_inv_half.clone()],
        [phi_half.clone(), phi_inv_half.clone(), -half.clone()],
        [phi_inv_half, half, phi_half],
    ]);
    [alpha, beta, gamma]
}

/// Finite group of `N×N` matrices with elements in canonical (sorted) order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixGroup<S, const N: usize> {
    elements: Vec<Mat<S, N>>,
    generators: Vec<Mat<S, N>>,
}

impl<S: Scalar, const N: usize> MatrixGroup<S, N> {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Mat<S, N>] {
        &self.elements
    }

    pub fn generators(&self) -> &[Mat<S, N>] {
        &self.generators
    }

    pub fn contains(&self, m: &Mat<S, N>) -> bool {
        self.elements.binary_search(m).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Self) -> bool {
        self.elements.iter().all(|m| other.contains(m))
    }

    /// Checks identity, closure under products and inverses.
    pub fn is_closed(&self) -> bool {
        self.contains(&Mat::identity())
            && self.elements.iter().all(|a| {
                a.inverse().map(|i| self.contains(&i)).unwrap_or(false)
                    && self.elements.iter().all(|b| self.contains(&a.mul(b)))
            })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "order": self.order(),
            "elements": self.elements.iter().map(Mat::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Breadth-first closure of `generators` under multiplication.
pub fn generate_group<S: Scalar, const N: usize>(
    generators: &[Mat<S, N>],
    order_cap: usize,
) -> Result<MatrixGroup<S, N>> {
    if order_cap == 0 {
        return Err(Error::InvalidArgument("order_cap must be at least 1".into()));
    }
    let identity = Mat::identity();
    let mut seen: HashSet<Mat<S, N>> = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(m) = queue.pop_front() {
        for g in generators {
            let next = m.mul(g);
            if seen.insert(next.clone()) {
                if seen.len() > order_cap {
                    return Err(Error::GroupOrderExceeded { cap: order_cap });
                }
                queue.push_back(next);
            }
        }
    }
    let mut elements: Vec<_> = seen.into_iter().collect();
    elements.sort();
    Ok(MatrixGroup {
        elements,
        generators: generators.to_vec(),
    })
}

pub fn icosahedral_group() -> MatrixGroup<GoldenNumber, 3> {
    generate_group(&icosahedral_generators(), 60).expect("icosahedral group has order 60")
}

pub fn tetrahedral_group() -> MatrixGroup<GoldenNumber, 3> {
    let [alpha, beta, _] = icosahedral_generators();
    generate_group(&[alpha, beta], 12).expect("tetrahedral group has order 12")
}

/// `{I, diag(−1,−1,1), diag(−1,1,−1), diag(1,−1,−1)}`.
pub fn klein_group<S: Scalar>() -> MatrixGroup<S, 3> {
    let d = |a: i64, b: i64, c: i64| Mat::diag([S::from_int(a), S::from_int(b), S::from_int(c)]);
    let generators = vec![d(-1, -1, 1), d(-1, 1, -1)];
    generate_group(&generators, 4).expect("Klein group has order 4")
}

/// Scales `v` so that its first nonzero coordinate is 1.
pub fn canonical_direction<S: Scalar, const N: usize>(v: &[S; N]) -> Result<[S; N]> {
    let lead = v.iter().find(|x| !x.is_zero()).ok_or(Error::ZeroVector)?;
    let inv = lead.checked_inv().ok_or(Error::ZeroVector)?;
    Ok(scale(v, &inv))
}

/// `v` scaled so that its first nonzero coordinate is `±1`; two vectors give
/// the same result exactly when they span the same ray from the origin.
pub fn canonical_ray<S: Scalar, const N: usize>(v: &[S; N]) -> Result<[S; N]> {
    let lead = v.iter().find(|x| !x.is_zero()).ok_or(Error::ZeroVector)?;
    let inv = lead.abs().checked_inv().ok_or(Error::ZeroVector)?;
    Ok(scale(v, &inv))
}

/// The distinct rays `R₊·(g·seed)` for `g` in the group, as canonical rays in
/// sorted order. The rotation groups here do not contain `−I`, so a ray and
/// its opposite are counted separately: the icosahedral orbits of the face,
/// vertex and edge axes have 12, 20 and 30 members.
pub fn orbit_of_line<S: Scalar, const N: usize>(
    group: &MatrixGroup<S, N>,
    seed: &[S; N],
) -> Result<Vec<[S; N]>> {
    canonical_ray(seed)?;
    let lines: BTreeSet<[S; N]> = group
        .elements()
        .iter()
        .map(|g| canonical_ray(&g.apply(seed)))
        .collect::<Result<_>>()?;
    Ok(lines.into_iter().collect())
}

/// `A·x = b` with `A` of size `m×n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem<S> {
    coefficients: Vec<Vec<S>>,
    rhs: Vec<S>,
    unknowns: usize,
}

pub type LinearSystemG = LinearSystem<GoldenNumber>;

impl<S: Scalar> LinearSystem<S> {
    pub fn new(unknowns: usize) -> Self {
        LinearSystem {
            coefficients: Vec::new(),
            rhs: Vec::new(),
            unknowns,
        }
    }

    pub fn from_rows(unknowns: usize, rows: Vec<(Vec<S>, S)>) -> Result<Self> {
        let mut sys = Self::new(unknowns);
        for (row, b) in rows {
            sys.push(row, b)?;
        }
        Ok(sys)
    }

    pub fn push(&mut self, row: Vec<S>, rhs: S) -> Result<()> {
        if row.len() != self.unknowns {
            return Err(Error::DimensionMismatch {
                expected: self.unknowns,
                found: row.len(),
            });
        }
        if row.iter().all(Zero::is_zero) && rhs.is_zero() {
            return Ok(());
        }
        self.coefficients.push(row);
        self.rhs.push(rhs);
        Ok(())
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn equations(&self) -> usize {
        self.rhs.len()
    }

    /// `A·x − b`.
    pub fn residual(&self, x: &[S]) -> Vec<S> {
        self.coefficients
            .iter()
            .zip(&self.rhs)
            .map(|(row, b)| {
                row.iter()
                    .zip(x)
                    .fold(S::zero(), |acc, (a, xi)| acc + a.clone() * xi)
                    - b
            })
            .collect()
    }

    /// `A·v` (the homogeneous residual of a direction vector).
    pub fn apply_homogeneous(&self, v: &[S]) -> Vec<S> {
        self.coefficients
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(S::zero(), |acc, (a, vi)| acc + a.clone() * vi)
            })
            .collect()
    }
}

/// `particular + span(basis)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSolution<S> {
    pub particular: Vec<S>,
    pub basis: Vec<Vec<S>>,
}

impl<S: Scalar> AffineSolution<S> {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn point(&self, t: &[S]) -> Vec<S> {
        let mut p = self.particular.clone();
        for (ti, b) in t.iter().zip(&self.basis) {
            for (pj, bj) in p.iter_mut().zip(b) {
                *pj += &(ti.clone() * bj);
            }
        }
        p
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearSolution<S> {
    Inconsistent,
    Affine(AffineSolution<S>),
}

impl<S: Scalar> LinearSolution<S> {
    pub fn affine(self) -> Option<AffineSolution<S>> {
        match self {
            LinearSolution::Affine(a) => Some(a),
            LinearSolution::Inconsistent => None,
        }
    }
}

/// Exact reduction to reduced row echelon form, pivoting on the first nonzero
/// entry in column order. Free variables are set to zero in the particular
/// solution, and each basis vector has a single 1 among the free coordinates.
pub fn solve_linear<S: Scalar>(system: &LinearSystem<S>) -> LinearSolution<S> {
    let n = system.unknowns;
    let mut rows: Vec<Vec<S>> = system
        .coefficients
        .iter()
        .zip(&system.rhs)
        .map(|(r, b)| {
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].checked_inv().expect("nonzero pivot");
        for c in col..=n {
            rows[r][c] = rows[r][c].clone() * &inv;
        }
        for i in 0..rows.len() {
            if i == r || rows[i][col].is_zero() {
                continue;
            }
            let f = rows[i][col].clone();
            for c in col..=n {
                let t = f.clone() * &rows[r][c];
                rows[i][c] -= &t;
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    if rows[r..].iter().any(|row| !row[n].is_zero()) {
        return LinearSolution::Inconsistent;
    }
    let mut particular = vec![S::zero(); n];
    for (i, &pc) in pivots.iter().enumerate() {
        particular[pc] = rows[i][n].clone();
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let basis = free
        .iter()
        .map(|&f| {
            let mut v = vec![S::zero(); n];
            v[f] = S::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[i][f].clone();
            }
            v
        })
        .collect();
    LinearSolution::Affine(AffineSolution { particular, basis })
}

/// [`solve_linear`] with pivots searched in the given column order instead of
/// the natural one. Columns late in `order` are preferred as free variables.
pub fn solve_linear_ordered<S: Scalar>(
    system: &LinearSystem<S>,
    order: &[usize],
) -> Result<LinearSolution<S>> {
    let n = system.unknowns;
    let mut seen = vec![false; n];
    if order.len() != n || order.iter().any(|&c| c >= n || std::mem::replace(&mut seen[c], true)) {
        return Err(Error::InvalidArgument(format!(
            "column order must be a permutation of 0..{n}"
        )));
    }
    let permuted = LinearSystem {
        coefficients: system
            .coefficients
            .iter()
            .map(|row| order.iter().map(|&c| row[c].clone()).collect())
            .collect(),
        rhs: system.rhs.clone(),
        unknowns: n,
    };
    let unpermute = |v: Vec<S>| {
        let mut out = vec![S::zero(); n];
        for (k, &c) in order.iter().enumerate() {
            out[c] = v[k].clone();
        }
        out
    };
    Ok(match solve_linear(&permuted) {
        LinearSolution::Inconsistent => LinearSolution::Inconsistent,
        LinearSolution::Affine(a) => LinearSolution::Affine(AffineSolution {
            particular: unpermute(a.particular),
            basis: a.basis.into_iter().map(unpermute).collect(),
        }),
    })
}

/// Sign of the first nonzero entry, used for deterministic ordering checks.
pub fn leading_sign<S: Scalar>(v: &[S]) -> Sign {
    v.iter()
        .find(|x| !x.is_zero())
        .map(Scalar::sign)
        .unwrap_or(Sign::Zero)
}

pub fn rational_vec(v: &[(i64, i64)]) -> Vec<Rational> {
    v.iter().map(|&(n, d)| rat(n, d)).collect()
}

pub fn lines_to_json<S: Scalar, const N: usize>(lines: &[[S; N]]) -> Value {
    Value::Array(
        lines
            .iter()
            .map(|l| Value::Array(l.iter().map(|x| json!(x.to_string())).collect()))
            .collect(),
    )
}
