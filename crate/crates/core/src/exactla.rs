//! Scalar and matrix arithmetic.
//!
//! Two scalar modes, never mixed within one matrix: arbitrary-precision
//! rationals for certified ranks, and binary64 floats with a relative
//! tolerance for irrational configurations. Exact ranks go through
//! fraction-free (Bareiss) elimination over the integers after clearing
//! row denominators; float ranks count singular values above
//! `tol * sigma_max`.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact rational scalar.
pub type Rat = BigRational;

/// Build `n/d` as an exact rational.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as an exact rational.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Scalar kinds a constraint matrix can be built over.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
    + 'static
{
    /// Rank of a labeled matrix in this scalar mode. `tol` is ignored in
    /// exact mode.
    fn rank_of(m: &LabeledMatrix<Self>, tol: f64) -> Result<usize>;

    /// Whether a squared norm passes the unit-length requirement.
    fn unit_norm2_ok(norm2: &Self) -> bool;

    fn from_i64(v: i64) -> Self;
}

impl Scalar for Rat {
    fn rank_of(m: &LabeledMatrix<Self>, _tol: f64) -> Result<usize> {
        Ok(rank_exact(m))
    }

    fn unit_norm2_ok(norm2: &Self) -> bool {
        norm2.is_one()
    }

    fn from_i64(v: i64) -> Self {
        rint(v)
    }
}

impl Scalar for f64 {
    fn rank_of(m: &LabeledMatrix<Self>, tol: f64) -> Result<usize> {
        rank_float(m, tol)
    }

    fn unit_norm2_ok(norm2: &Self) -> bool {
        (norm2 - 1.0).abs() <= 1e-12
    }

    fn from_i64(v: i64) -> Self {
        v as f64
    }
}

/// Row label of a constraint matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RowLabel {
    /// Constraint row of the edge with this index in the parent graph.
    Edge(usize),
    /// Per-vertex row (unit-normal, sphere, or tangency constraint,
    /// depending on the model).
    Vertex(usize),
    /// Pinning row added on top of a base system (slider pins,
    /// rotation pin).
    Pin(usize),
}

impl fmt::Display for RowLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowLabel::Edge(e) => write!(f, "edge[{e}]"),
            RowLabel::Vertex(v) => write!(f, "vertex[{v}]"),
            RowLabel::Pin(v) => write!(f, "pin[{v}]"),
        }
    }
}

/// Which variable a column stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ColPart {
    /// Coordinate `k` of a point velocity.
    PointCoord(usize),
    /// Coordinate `k` of a normal velocity.
    NormalCoord(usize),
    /// Offset rate of a hyperplane.
    OffsetRate,
    /// Single rotation coefficient of a line in the reduced
    /// fixed-intercept matrix.
    RotationRate,
}

/// Column label: vertex id plus the variable kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ColLabel {
    pub vertex: usize,
    pub part: ColPart,
}

impl fmt::Display for ColLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.part {
            ColPart::PointCoord(k) => write!(f, "p[{}].{}", self.vertex, k),
            ColPart::NormalCoord(k) => write!(f, "a[{}].{}", self.vertex, k),
            ColPart::OffsetRate => write!(f, "r[{}]", self.vertex),
            ColPart::RotationRate => write!(f, "w[{}]", self.vertex),
        }
    }
}

/// Notes a builder may attach to a matrix (rank-relevant degeneracies).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuildNote {
    /// An LL edge whose two normals coincide; its reduced row is zero.
    CoincidentNormals { edge: usize },
}

/// Dense row-major matrix with row and column labels.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledMatrix<T> {
    pub row_labels: Vec<RowLabel>,
    pub col_labels: Vec<ColLabel>,
    pub notes: Vec<BuildNote>,
    entries: Vec<T>,
}

impl<T: Scalar> LabeledMatrix<T> {
    pub fn zeros(row_labels: Vec<RowLabel>, col_labels: Vec<ColLabel>) -> Self {
        let entries = vec![T::zero(); row_labels.len() * col_labels.len()];
        LabeledMatrix {
            row_labels,
            col_labels,
            notes: Vec::new(),
            entries,
        }
    }

    pub fn nrows(&self) -> usize {
        self.row_labels.len()
    }

    pub fn ncols(&self) -> usize {
        self.col_labels.len()
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.entries[r * self.ncols() + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        let n = self.ncols();
        self.entries[r * n + c] = v;
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: T) {
        let n = self.ncols();
        let cur = self.entries[r * n + c].clone();
        self.entries[r * n + c] = cur + v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        let n = self.ncols();
        &self.entries[r * n..(r + 1) * n]
    }

    /// Index of the column labeled (`vertex`, `part`).
    pub fn col_index(&self, vertex: usize, part: ColPart) -> Option<usize> {
        self.col_labels
            .iter()
            .position(|l| l.vertex == vertex && l.part == part)
    }

    /// Append one row (must match the column count).
    pub fn push_row(&mut self, label: RowLabel, row: Vec<T>) {
        assert_eq!(row.len(), self.ncols(), "row length mismatch");
        self.row_labels.push(label);
        self.entries.extend(row);
    }

    pub fn from_rows(
        row_labels: Vec<RowLabel>,
        col_labels: Vec<ColLabel>,
        rows: Vec<Vec<T>>,
    ) -> Self {
        assert_eq!(rows.len(), row_labels.len());
        let mut entries = Vec::with_capacity(row_labels.len() * col_labels.len());
        for row in rows {
            assert_eq!(row.len(), col_labels.len());
            entries.extend(row);
        }
        LabeledMatrix {
            row_labels,
            col_labels,
            notes: Vec::new(),
            entries,
        }
    }

    /// Multiply the matrix by a column vector.
    pub fn apply(&self, x: &[T]) -> Vec<T> {
        assert_eq!(x.len(), self.ncols());
        (0..self.nrows())
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(x)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }
}

/// Rank of `m` (exact in rational mode, singular-value count in float mode).
pub fn rank<T: Scalar>(m: &LabeledMatrix<T>, tol: f64) -> Result<usize> {
    T::rank_of(m, tol)
}

/// Dimension of the kernel: `ncols - rank`.
pub fn nullity<T: Scalar>(m: &LabeledMatrix<T>, tol: f64) -> Result<usize> {
    Ok(m.ncols() - rank(m, tol)?)
}

/// Exact rank over the rationals by fraction-free elimination.
pub fn rank_exact(m: &LabeledMatrix<Rat>) -> usize {
    let rows: Vec<Vec<Rat>> = (0..m.nrows()).map(|r| m.row(r).to_vec()).collect();
    rank_rat_rows(&rows)
}

/// Exact rank of a plain row list.
pub fn rank_rat_rows(rows: &[Vec<Rat>]) -> usize {
    if rows.is_empty() || rows[0].is_empty() {
        return 0;
    }
    bareiss_rank(clear_denominators(rows))
}

fn clear_denominators(rows: &[Vec<Rat>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let mut lcm = BigInt::one();
            for v in row {
                lcm = num::integer::lcm(lcm, v.denom().clone());
            }
            row.iter()
                .map(|v| v.numer() * (&lcm / v.denom()))
                .collect()
        })
        .collect()
}

/// Fraction-free Gaussian elimination; returns the pivot count. Pivot
/// choice is the first nonzero entry in the current column, so the result
/// is deterministic.
fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let nr = m.len();
    let nc = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..nc {
        if rank == nr {
            break;
        }
        let Some(piv) = (rank..nr).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        for r in rank + 1..nr {
            for c in col + 1..nc {
                let num = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                m[r][c] = num / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Float rank: singular values above `tol * sigma_max`.
fn rank_float(m: &LabeledMatrix<f64>, tol: f64) -> Result<usize> {
    let (nr, nc) = (m.nrows(), m.ncols());
    if nr == 0 || nc == 0 {
        return Ok(0);
    }
    for r in 0..nr {
        for (c, v) in m.row(r).iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFinite { row: r, col: c });
            }
        }
    }
    let dm = nalgebra::DMatrix::from_fn(nr, nc, |r, c| *m.get(r, c));
    let svd = dm.svd(false, false);
    let smax = svd.singular_values.iter().cloned().fold(0.0f64, f64::max);
    if smax == 0.0 {
        return Ok(0);
    }
    Ok(svd
        .singular_values
        .iter()
        .filter(|&&s| s > tol * smax)
        .count())
}

/// Basis of the exact kernel of a rational matrix, one vector per free
/// column of the reduced row echelon form. Deterministic.
pub fn kernel_basis(m: &LabeledMatrix<Rat>) -> Vec<Vec<Rat>> {
    let (nr, nc) = (m.nrows(), m.ncols());
    let mut rows: Vec<Vec<Rat>> = (0..nr).map(|r| m.row(r).to_vec()).collect();
    let mut pivot_col_of_row = Vec::new();
    let mut rank = 0;
    for col in 0..nc {
        let Some(piv) = (rank..nr).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = Rat::one() / rows[rank][col].clone();
        for c in col..nc {
            let v = &rows[rank][c] * &inv;
            rows[rank][c] = v;
        }
        for r in 0..nr {
            if r == rank || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            for c in col..nc {
                let v = &rows[r][c] - &factor * &rows[rank][c];
                rows[r][c] = v;
            }
        }
        pivot_col_of_row.push(col);
        rank += 1;
        if rank == nr {
            break;
        }
    }
    let pivot_cols: std::collections::BTreeSet<usize> = pivot_col_of_row.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..nc {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![Rat::zero(); nc];
        v[free] = Rat::one();
        for (r, &pc) in pivot_col_of_row.iter().enumerate() {
            v[pc] = -rows[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

// ---- plain rational matrix helpers (square/small, used by the transfer
// ---- pipeline and the oracles) ----

/// Determinant by fraction elimination with partial pivoting.
pub fn det_rat(rows: &[Vec<Rat>]) -> Rat {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "det of non-square");
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let mut det = Rat::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rat::zero();
        };
        if piv != col {
            m.swap(col, piv);
            det = -det;
        }
        det *= m[col][col].clone();
        let inv = Rat::one() / m[col][col].clone();
        for r in col + 1..n {
            let factor = &m[r][col] * &inv;
            for c in col..n {
                let v = &m[r][c] - &factor * &m[col][c];
                m[r][c] = v;
            }
        }
    }
    det
}

/// Inverse by Gauss-Jordan elimination; `None` when singular.
pub fn invert_rat(rows: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "inverse of non-square");
    let mut m: Vec<Vec<Rat>> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut aug = row.clone();
            aug.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            aug
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = Rat::one() / m[col][col].clone();
        for c in 0..2 * n {
            let v = &m[col][c] * &inv;
            m[col][c] = v;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for c in 0..2 * n {
                let v = &m[r][c] - &factor * &m[col][c];
                m[r][c] = v;
            }
        }
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn matmul_rat(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let (ra, ca) = (a.len(), a[0].len());
    let cb = b[0].len();
    assert_eq!(ca, b.len());
    (0..ra)
        .map(|i| {
            (0..cb)
                .map(|j| (0..ca).fold(Rat::zero(), |acc, k| acc + &a[i][k] * &b[k][j]))
                .collect()
        })
        .collect()
}

pub fn identity_rat(n: usize) -> Vec<Vec<Rat>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect()
}

pub fn transpose_rat(a: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let (r, c) = (a.len(), a[0].len());
    (0..c).map(|j| (0..r).map(|i| a[i][j].clone()).collect()).collect()
}

// ---- vector helpers ----

pub fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

pub fn vsub<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub fn vneg<T: Scalar>(a: &[T]) -> Vec<T> {
    a.iter().map(|x| -x.clone()).collect()
}

pub fn norm2<T: Scalar>(a: &[T]) -> T {
    dot(a, a)
}

/// pi/2 clockwise rotation of a plane vector: (x, y) -> (y, -x).
pub fn perp_cw<T: Scalar>(a: &[T]) -> Vec<T> {
    assert_eq!(a.len(), 2);
    vec![a[1].clone(), -a[0].clone()]
}

/// pi/2 counterclockwise rotation: (x, y) -> (-y, x).
pub fn perp_ccw<T: Scalar>(a: &[T]) -> Vec<T> {
    assert_eq!(a.len(), 2);
    vec![-a[1].clone(), a[0].clone()]
}

// ---- rational points of the circle and rational rotations ----

/// Rational point of the unit circle: t -> ((1-t^2)/(1+t^2), 2t/(1+t^2)).
/// The squared norm is exactly 1.
pub fn rational_unit_vector(t: &Rat) -> [Rat; 2] {
    let t2 = t * t;
    let denom = Rat::one() + &t2;
    [
        (Rat::one() - &t2) / denom.clone(),
        (rint(2) * t) / denom,
    ]
}

/// Rotation from the Cayley transform of a skew-symmetric matrix:
/// R = (I - S)(I + S)^-1. Exactly orthogonal with det 1 over the
/// rationals. `params` fills the strict upper triangle row by row, so a
/// d x d rotation needs d(d-1)/2 parameters.
pub fn cayley_rotation(params: &[Rat], n: usize) -> Result<Vec<Vec<Rat>>> {
    let expected = n * (n - 1) / 2;
    if params.len() != expected {
        return Err(Error::InvalidInput(format!(
            "cayley rotation in dimension {n} needs {expected} parameters, got {}",
            params.len()
        )));
    }
    let mut s = identity_rat(n);
    for row in s.iter_mut() {
        for v in row.iter_mut() {
            *v = Rat::zero();
        }
    }
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            s[i][j] = -params[k].clone();
            s[j][i] = params[k].clone();
            k += 1;
        }
    }
    let mut i_plus = identity_rat(n);
    let mut i_minus = identity_rat(n);
    for r in 0..n {
        for c in 0..n {
            i_plus[r][c] += s[r][c].clone();
            i_minus[r][c] -= s[r][c].clone();
        }
    }
    let inv = invert_rat(&i_plus).ok_or(Error::SingularCayley)?;
    Ok(matmul_rat(&i_minus, &inv))
}

/// Exact orthogonality test: R^T R == I.
pub fn is_orthogonal_rat(r: &[Vec<Rat>]) -> bool {
    let n = r.len();
    if r.iter().any(|row| row.len() != n) {
        return false;
    }
    let prod = matmul_rat(&transpose_rat(r), r);
    prod == identity_rat(n)
}

// ---- seeded random rationals (simulated genericity) ----

pub mod sampling {
    use super::{rat, Rat};
    use rand::Rng;

    /// Rational with numerator drawn from [-span, span] over a fixed
    /// denominator. `den = 10_000` mirrors a generic draw at 4 decimal
    /// digits.
    pub fn random_rat<R: Rng>(rng: &mut R, span: i64, den: i64) -> Rat {
        rat(rng.gen_range(-span..=span), den)
    }

    /// Generic coordinate: numerator in [-10^4, 10^4], denominator 10^4.
    pub fn generic_rat<R: Rng>(rng: &mut R) -> Rat {
        random_rat(rng, 10_000, 10_000)
    }

    /// Nonzero generic coordinate.
    pub fn generic_rat_nonzero<R: Rng>(rng: &mut R) -> Rat {
        loop {
            let v = generic_rat(rng);
            if !num::Zero::is_zero(&v) {
                return v;
            }
        }
    }

    /// Generic rational unit vector in the plane.
    pub fn generic_unit_vector<R: Rng>(rng: &mut R) -> [Rat; 2] {
        super::rational_unit_vector(&generic_rat(rng))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn labels(nr: usize, nc: usize) -> (Vec<RowLabel>, Vec<ColLabel>) {
        (
            (0..nr).map(RowLabel::Edge).collect(),
            (0..nc)
                .map(|c| ColLabel {
                    vertex: c,
                    part: ColPart::PointCoord(0),
                })
                .collect(),
        )
    }

    fn rat_matrix(rows: Vec<Vec<Rat>>) -> LabeledMatrix<Rat> {
        let (rl, cl) = labels(rows.len(), rows[0].len());
        LabeledMatrix::from_rows(rl, cl, rows)
    }

    /// Independent rank oracle: size of the largest nonzero minor, found by
    /// Laplace expansion over all row/column selections.
    fn rank_by_minors(rows: &[Vec<Rat>]) -> usize {
        fn det_laplace(rows: &[Vec<Rat>], ri: &[usize], ci: &[usize]) -> Rat {
            if ri.len() == 1 {
                return rows[ri[0]][ci[0]].clone();
            }
            let mut acc = Rat::zero();
            let mut sign = Rat::one();
            for (k, &c) in ci.iter().enumerate() {
                let sub_ci: Vec<usize> = ci
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != k)
                    .map(|(_, &v)| v)
                    .collect();
                let term = &rows[ri[0]][c] * det_laplace(rows, &ri[1..], &sub_ci);
                acc += &sign * term;
                sign = -sign;
            }
            acc
        }
        use itertools::Itertools;
        let (nr, nc) = (rows.len(), rows[0].len());
        for size in (1..=nr.min(nc)).rev() {
            for ri in (0..nr).combinations(size) {
                for ci in (0..nc).combinations(size) {
                    if !det_laplace(rows, &ri, &ci).is_zero() {
                        return size;
                    }
                }
            }
        }
        0
    }

    #[test]
    fn rank_identity_and_zero() {
        let id = rat_matrix(vec![vec![rint(1), rint(0)], vec![rint(0), rint(1)]]);
        assert_eq!(rank(&id, 0.0).unwrap(), 2);
        assert_eq!(nullity(&id, 0.0).unwrap(), 0);
        let z = rat_matrix(vec![vec![rint(0); 4], vec![rint(0); 4], vec![rint(0); 4]]);
        assert_eq!(rank(&z, 0.0).unwrap(), 0);
        assert_eq!(nullity(&z, 0.0).unwrap(), 4);
    }

    #[test]
    fn rank_matches_minor_expansion_oracle_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let nr = rand::Rng::gen_range(&mut rng, 1..=5usize);
            let nc = rand::Rng::gen_range(&mut rng, 1..=5usize);
            let rows: Vec<Vec<Rat>> = (0..nr)
                .map(|_| {
                    (0..nc)
                        .map(|_| rint(rand::Rng::gen_range(&mut rng, -3i64..=3)))
                        .collect()
                })
                .collect();
            assert_eq!(rank_rat_rows(&rows), rank_by_minors(&rows));
        }
    }

    #[test]
    fn exact_and_float_ranks_agree_on_random_rational_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..500 {
            let nr = rand::Rng::gen_range(&mut rng, 1..=12usize);
            let nc = rand::Rng::gen_range(&mut rng, 1..=12usize);
            let rows: Vec<Vec<Rat>> = (0..nr)
                .map(|_| {
                    (0..nc)
                        .map(|_| sampling::random_rat(&mut rng, 10, 1))
                        .collect()
                })
                .collect();
            let exact = rat_matrix(rows.clone());
            let (rl, cl) = labels(nr, nc);
            let float_rows: Vec<Vec<f64>> = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|v| {
                            let n: f64 = v.numer().to_string().parse().unwrap();
                            let d: f64 = v.denom().to_string().parse().unwrap();
                            n / d
                        })
                        .collect()
                })
                .collect();
            let float = LabeledMatrix::from_rows(rl, cl, float_rows);
            assert_eq!(
                rank(&exact, 0.0).unwrap(),
                rank(&float, 1e-9).unwrap(),
                "rank mismatch on {rows:?}"
            );
        }
    }

    #[test]
    fn float_rank_rejects_non_finite() {
        let (rl, cl) = labels(1, 2);
        let m = LabeledMatrix::from_rows(rl, cl, vec![vec![1.0, f64::NAN]]);
        assert!(matches!(
            rank(&m, 1e-9),
            Err(Error::NonFinite { row: 0, col: 1 })
        ));
    }

    #[test]
    fn unit_vector_is_exactly_on_circle() {
        assert_eq!(rational_unit_vector(&rint(0)), [rint(1), rint(0)]);
        assert_eq!(rational_unit_vector(&rint(1)), [rint(0), rint(1)]);
        assert_eq!(rational_unit_vector(&rat(1, 2)), [rat(3, 5), rat(4, 5)]);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..1000 {
            let t = sampling::generic_rat(&mut rng);
            let [x, y] = rational_unit_vector(&t);
            assert!((&x * &x + &y * &y).is_one());
        }
    }

    #[test]
    fn cayley_rotation_is_exactly_orthogonal() {
        assert_eq!(cayley_rotation(&[], 1).unwrap(), identity_rat(1));
        let r = cayley_rotation(&[rint(1)], 2).unwrap();
        assert_eq!(r, vec![vec![rint(0), rint(1)], vec![rint(-1), rint(0)]]);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let n = rand::Rng::gen_range(&mut rng, 2..=4usize);
            let params: Vec<Rat> = (0..n * (n - 1) / 2)
                .map(|_| sampling::random_rat(&mut rng, 50, 10))
                .collect();
            let r = cayley_rotation(&params, n).unwrap();
            assert!(is_orthogonal_rat(&r));
            assert!(det_rat(&r).is_one());
        }
    }

    #[test]
    fn inverse_round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..50 {
            let n = rand::Rng::gen_range(&mut rng, 1..=5usize);
            let rows: Vec<Vec<Rat>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| rint(rand::Rng::gen_range(&mut rng, -5i64..=5)))
                        .collect()
                })
                .collect();
            match invert_rat(&rows) {
                Some(inv) => assert_eq!(matmul_rat(&rows, &inv), identity_rat(n)),
                None => assert!(det_rat(&rows).is_zero()),
            }
        }
    }
}
