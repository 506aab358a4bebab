//! Dense complex matrices and bicomplex matrices built from a pair of them.
//!
//! A bicomplex matrix is stored as its idempotent pair `(A1, A2)`; addition,
//! multiplication and scalar action are componentwise, the involution is the
//! componentwise conjugate transpose, and the 𝔻-valued norm is the pair of
//! operator norms. The operator norm is computed by power iteration on
//! `A*A` (closed form for n ≤ 2), with the largest row/column norm as a
//! guaranteed lower-bound floor.

use num_complex::Complex;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bicomplex::Bicomplex;
use crate::error::{Error, Result};
use crate::hyperbolic::Hyperbolic;
use crate::scalar::Scalar;

/// Iteration cap for the power method.
const POWER_ITER_CAP: usize = 10_000;

/// Square dense complex matrix, row major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix<T> {
    n: usize,
    data: Vec<Complex<T>>,
}

impl<T: Scalar> ComplexMatrix<T> {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            data: vec![Complex::default(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.data[i * n + i] = Complex::new(T::one(), T::zero());
        }
        m
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> Complex<T>) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    pub fn diagonal(entries: &[Complex<T>]) -> Self {
        let n = entries.len();
        Self::from_fn(n, |i, j| if i == j { entries[i] } else { Complex::default() })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Complex<T> {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex<T>) {
        self.data[i * self.n + j] = v;
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        Self {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        Self {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: Complex<T>) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self.data[i * n + k];
                if aik.re.is_zero() && aik.im.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] = out.data[i * n + j] + aik * other.data[k * n + j];
                }
            }
        }
        out
    }

    pub fn matvec(&self, v: &[Complex<T>]) -> Vec<Complex<T>> {
        let n = self.n;
        let mut out = vec![Complex::default(); n];
        for i in 0..n {
            let mut acc = Complex::default();
            for j in 0..n {
                acc = acc + self.data[i * n + j] * v[j];
            }
            out[i] = acc;
        }
        out
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).conj())
    }

    pub fn frobenius_sq(&self) -> T {
        self.data.iter().map(|c| c.norm_sqr()).sum()
    }

    /// Largest entrywise distance to another matrix.
    pub fn max_entry_distance(&self, other: &Self) -> T {
        assert_eq!(self.n, other.n, "dimension mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(T::zero(), T::max)
    }

    pub fn max_entry_norm(&self) -> T {
        self.data.iter().map(|c| c.norm()).fold(T::zero(), T::max)
    }

    fn max_col_norm_sq(&self) -> T {
        let n = self.n;
        let mut best = T::zero();
        for j in 0..n {
            let mut s = T::zero();
            for i in 0..n {
                s += self.data[i * n + j].norm_sqr();
            }
            best = best.max(s);
        }
        best
    }

    fn max_row_norm_sq(&self) -> T {
        let n = self.n;
        let mut best = T::zero();
        for i in 0..n {
            let mut s = T::zero();
            for j in 0..n {
                s += self.data[i * n + j].norm_sqr();
            }
            best = best.max(s);
        }
        best
    }

    /// Operator norm induced by the Euclidean inner product (largest
    /// singular value).
    ///
    /// Exact closed form for `n ≤ 2`; otherwise power iteration on `A*A`
    /// with tolerance [`Scalar::iter_tol`] and a 10⁴ iteration cap. The
    /// Rayleigh quotient only ever underestimates, so the result is floored
    /// by the largest row and column norms, which are lower bounds for the
    /// true value as well.
    pub fn op_norm(&self) -> T {
        let n = self.n;
        if n == 0 {
            return T::zero();
        }
        if n == 1 {
            return self.data[0].norm();
        }
        if n == 2 {
            // σ² are the roots of λ² − f λ + d² with f = ‖A‖²_F, d = |det A|.
            let f = self.frobenius_sq();
            let det = self.data[0] * self.data[3] - self.data[1] * self.data[2];
            let d2 = det.norm_sqr();
            let disc = (f * f - T::lit(4.0) * d2).max(T::zero());
            return ((f + disc.sqrt()) / T::lit(2.0)).sqrt();
        }

        let b = self.conj_transpose().mul(self);
        let scale = b.frobenius_sq().sqrt();
        if scale.is_zero() {
            return T::zero();
        }

        // Deterministic start with nonuniform entries in both real and
        // imaginary parts, so it is not orthogonal to the top eigenspace
        // for any input arising in practice.
        let mut v: Vec<Complex<T>> = (0..n)
            .map(|j| {
                Complex::new(
                    T::one() / T::from_index(j + 1),
                    T::lit(0.25) / T::from_index(j + 2),
                )
            })
            .collect();
        normalize(&mut v);

        let mut lambda = T::zero();
        for _ in 0..POWER_ITER_CAP {
            let w = b.matvec(&v);
            let new_lambda = dot_re(&v, &w);
            let wn = vec_norm(&w);
            if wn <= T::epsilon() * scale {
                lambda = new_lambda;
                break;
            }
            let done = (new_lambda - lambda).abs() <= T::iter_tol() * T::one().max(new_lambda);
            lambda = new_lambda;
            v = w;
            normalize(&mut v);
            if done {
                break;
            }
        }
        let floor = self.max_col_norm_sq().max(self.max_row_norm_sq());
        lambda.max(floor).max(T::zero()).sqrt()
    }

    /// Inverse by LU decomposition with partial pivoting. Fails when the
    /// smallest pivot magnitude drops below `iter_tol()` times the largest.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        if n == 0 {
            return Ok(self.clone());
        }
        let mut lu = self.data.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut min_pivot = T::infinity();
        let mut max_pivot = T::zero();

        for k in 0..n {
            let mut best = k;
            let mut best_mag = lu[k * n + k].norm();
            for i in (k + 1)..n {
                let mag = lu[i * n + k].norm();
                if mag > best_mag {
                    best = i;
                    best_mag = mag;
                }
            }
            if best != k {
                for j in 0..n {
                    lu.swap(k * n + j, best * n + j);
                }
                perm.swap(k, best);
            }
            min_pivot = min_pivot.min(best_mag);
            max_pivot = max_pivot.max(best_mag);
            if best_mag <= T::iter_tol() * max_pivot {
                return Err(Error::Singular);
            }
            let pivot = lu[k * n + k];
            for i in (k + 1)..n {
                let factor = lu[i * n + k] / pivot;
                lu[i * n + k] = factor;
                for j in (k + 1)..n {
                    lu[i * n + j] = lu[i * n + j] - factor * lu[k * n + j];
                }
            }
        }
        if min_pivot <= T::iter_tol() * max_pivot {
            return Err(Error::Singular);
        }

        // Solve LU x = P e_j for each basis vector.
        let mut inv = Self::zero(n);
        let mut col = vec![Complex::default(); n];
        for j in 0..n {
            for (i, c) in col.iter_mut().enumerate() {
                *c = if perm[i] == j {
                    Complex::new(T::one(), T::zero())
                } else {
                    Complex::default()
                };
            }
            for i in 1..n {
                for k in 0..i {
                    let f = lu[i * n + k];
                    col[i] = col[i] - f * col[k];
                }
            }
            for i in (0..n).rev() {
                for k in (i + 1)..n {
                    let f = lu[i * n + k];
                    col[i] = col[i] - f * col[k];
                }
                col[i] = col[i] / lu[i * n + i];
            }
            for i in 0..n {
                inv.data[i * n + j] = col[i];
            }
        }
        Ok(inv)
    }
}

fn vec_norm<T: Scalar>(v: &[Complex<T>]) -> T {
    v.iter().map(|c| c.norm_sqr()).sum::<T>().sqrt()
}

fn normalize<T: Scalar>(v: &mut [Complex<T>]) {
    let n = vec_norm(v);
    if !n.is_zero() {
        for c in v.iter_mut() {
            *c = c.unscale(n);
        }
    }
}

fn dot_re<T: Scalar>(a: &[Complex<T>], b: &[Complex<T>]) -> T {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x.conj() * y).re)
        .sum()
}

/// Bicomplex `n × n` matrix as the idempotent pair `(A1, A2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BcMatrix<T> {
    a1: ComplexMatrix<T>,
    a2: ComplexMatrix<T>,
}

impl<T: Scalar> BcMatrix<T> {
    pub fn new(a1: ComplexMatrix<T>, a2: ComplexMatrix<T>) -> Self {
        assert_eq!(a1.dim(), a2.dim(), "component dimension mismatch");
        Self { a1, a2 }
    }

    pub fn zero(n: usize) -> Self {
        Self::new(ComplexMatrix::zero(n), ComplexMatrix::zero(n))
    }

    pub fn identity(n: usize) -> Self {
        Self::new(ComplexMatrix::identity(n), ComplexMatrix::identity(n))
    }

    /// Builds from entrywise bicomplex values.
    pub fn from_entries(n: usize, f: impl Fn(usize, usize) -> Bicomplex<T>) -> Self {
        let mut a1 = ComplexMatrix::zero(n);
        let mut a2 = ComplexMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                let v = f(i, j);
                a1.set(i, j, v.z1());
                a2.set(i, j, v.z2());
            }
        }
        Self::new(a1, a2)
    }

    pub fn dim(&self) -> usize {
        self.a1.dim()
    }

    pub fn comp1(&self) -> &ComplexMatrix<T> {
        &self.a1
    }

    pub fn comp2(&self) -> &ComplexMatrix<T> {
        &self.a2
    }

    pub fn entry(&self, i: usize, j: usize) -> Bicomplex<T> {
        Bicomplex::from_idempotent(self.a1.get(i, j), self.a2.get(i, j))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.a1.add(&other.a1), self.a2.add(&other.a2))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(self.a1.sub(&other.a1), self.a2.sub(&other.a2))
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.a1.mul(&other.a1), self.a2.mul(&other.a2))
    }

    /// Scalar action of a bicomplex number, componentwise.
    pub fn scale(&self, c: Bicomplex<T>) -> Self {
        Self::new(self.a1.scale(c.z1()), self.a2.scale(c.z2()))
    }

    /// The involution: componentwise conjugate transpose.
    pub fn star(&self) -> Self {
        Self::new(self.a1.conj_transpose(), self.a2.conj_transpose())
    }

    /// The 𝔻-valued operator norm `(‖A1‖, ‖A2‖)`.
    pub fn d_norm(&self) -> Hyperbolic<T> {
        Hyperbolic::new(self.a1.op_norm(), self.a2.op_norm())
    }

    /// The real norm `√((‖A1‖² + ‖A2‖²)/2)`, the Euclidean magnitude of the
    /// 𝔻-valued norm.
    pub fn real_norm(&self) -> T {
        self.d_norm().magnitude()
    }

    /// Componentwise absolute residual of the C*-identity
    /// `‖A*A‖ = ‖A‖²`.
    pub fn check_cstar_identity(&self) -> Hyperbolic<T> {
        let lhs = self.star().mul(self).d_norm();
        let nrm = self.d_norm();
        (lhs - nrm * nrm).abs()
    }

    /// Splits `A = U + iV` with `U`, `V` hermitian:
    /// `U = (A + A*)/2`, `V = (A − A*)/(2i)`.
    pub fn hermitian_decompose(&self) -> (Self, Self) {
        let star = self.star();
        let half = Bicomplex::from_real(T::lit(0.5));
        let u = self.add(&star).scale(half);
        // 1/(2i) = −i/2.
        let minus_half_i = Bicomplex::from_complex(Complex::new(T::zero(), -T::lit(0.5)));
        let v = self.sub(&star).scale(minus_half_i);
        (u, v)
    }

    pub fn is_hermitian(&self, tol: T) -> bool {
        self.max_entry_distance(&self.star()) <= tol
    }

    /// Componentwise inverse; fails with [`Error::Singular`] when either
    /// component matrix is numerically singular.
    pub fn inverse(&self) -> Result<Self> {
        Ok(Self::new(self.a1.inverse()?, self.a2.inverse()?))
    }

    /// Verifies `(A*)⁻¹ = (A⁻¹)*` entrywise within `tol`.
    pub fn check_star_inverse(&self, tol: T) -> Result<bool> {
        let lhs = self.star().inverse()?;
        let rhs = self.inverse()?.star();
        Ok(lhs.max_entry_distance(&rhs) <= tol)
    }

    /// For a unitary matrix returns its 𝔻-valued norm (which must be
    /// `(1,1)`); fails with [`Error::NotUnitary`] when `A*A = AA* = 1` does
    /// not hold within `tol`.
    pub fn check_unitary_norm(&self, tol: T) -> Result<Hyperbolic<T>> {
        let id = Self::identity(self.dim());
        let left = self.star().mul(self).max_entry_distance(&id);
        let right = self.mul(&self.star()).max_entry_distance(&id);
        if left > tol || right > tol {
            return Err(Error::NotUnitary);
        }
        Ok(self.d_norm())
    }

    /// Largest entrywise distance, maximized over both components.
    pub fn max_entry_distance(&self, other: &Self) -> T {
        self.a1
            .max_entry_distance(&other.a1)
            .max(self.a2.max_entry_distance(&other.a2))
    }
}

// Wire format: {"n": int, "A1": [[[re,im],...],...], "A2": [[...]]}.
#[derive(Serialize, Deserialize)]
struct BcMatrixRepr<T> {
    n: usize,
    #[serde(rename = "A1")]
    a1: Vec<Vec<[T; 2]>>,
    #[serde(rename = "A2")]
    a2: Vec<Vec<[T; 2]>>,
}

fn rows_of<T: Scalar>(m: &ComplexMatrix<T>) -> Vec<Vec<[T; 2]>> {
    (0..m.dim())
        .map(|i| (0..m.dim()).map(|j| [m.get(i, j).re, m.get(i, j).im]).collect())
        .collect()
}

fn matrix_from_rows<T: Scalar, E: serde::de::Error>(
    n: usize,
    rows: &[Vec<[T; 2]>],
) -> std::result::Result<ComplexMatrix<T>, E> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(E::custom("matrix rows do not match declared dimension"));
    }
    let mut m = ComplexMatrix::zero(n);
    for (i, row) in rows.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            if !(e[0].is_finite() && e[1].is_finite()) {
                return Err(E::custom("matrix entries must be finite"));
            }
            m.set(i, j, Complex::new(e[0], e[1]));
        }
    }
    Ok(m)
}

impl<T: Scalar + Serialize> Serialize for BcMatrix<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        BcMatrixRepr {
            n: self.dim(),
            a1: rows_of(&self.a1),
            a2: rows_of(&self.a2),
        }
        .serialize(serializer)
    }
}

impl<'de, T: Scalar + Deserialize<'de>> Deserialize<'de> for BcMatrix<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = BcMatrixRepr::<T>::deserialize(deserializer)?;
        let a1 = matrix_from_rows::<T, D::Error>(repr.n, &repr.a1)?;
        let a2 = matrix_from_rows::<T, D::Error>(repr.n, &repr.a2)?;
        Ok(Self::new(a1, a2))
    }
}
