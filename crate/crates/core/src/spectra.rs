//! Symmetric eigendecomposition (cyclic Jacobi), eigenvalue deduplication,
//! and spectral idempotents for adjacency matrices and quotient matrices,
//! built from orthonormal eigenbases or from Lagrange interpolation.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::Mat;
use crate::partition::QuotientMatrix;
use crate::scalar::Scalar;

/// Maximum number of cyclic Jacobi sweeps before giving up.
const MAX_SWEEPS: usize = 100;
/// Convergence: off-diagonal Frobenius norm below this fraction of the
/// matrix Frobenius norm.
const OFF_DIAGONAL_RATIO: f64 = 1e-12;

/// Full eigendecomposition of a symmetric matrix: eigenvalues in decreasing
/// order (with repetition) and an orthonormal eigenvector matrix whose
/// column `k` pairs with eigenvalue `k`.
#[derive(Clone, Debug)]
pub struct EigenDecomposition<S = f64> {
    eigenvalues: Vec<S>,
    vectors: Mat<S>,
}

impl<S: Scalar> EigenDecomposition<S> {
    pub fn eigenvalues(&self) -> &[S] {
        &self.eigenvalues
    }

    /// Orthonormal eigenvectors as matrix columns.
    pub fn vectors(&self) -> &Mat<S> {
        &self.vectors
    }

    pub fn dimension(&self) -> usize {
        self.eigenvalues.len()
    }
}

/// Distinct eigenvalues in strictly decreasing order with multiplicities.
#[derive(Clone, PartialEq, Debug)]
pub struct Spectrum<S = f64> {
    entries: Vec<(S, usize)>,
}

impl<S: Scalar> Spectrum<S> {
    /// Builds from `(eigenvalue, multiplicity)` entries; they must be
    /// strictly decreasing with positive multiplicities.
    pub fn new(entries: Vec<(S, usize)>) -> Result<Spectrum<S>> {
        for pair in entries.windows(2) {
            if pair[0].0 <= pair[1].0 {
                return Err(Error::InvalidArgument(format!(
                    "spectrum values must strictly decrease: {} then {}",
                    pair[0].0, pair[1].0
                )));
            }
        }
        if let Some(&(value, 0)) = entries.iter().find(|&&(_, m)| m == 0) {
            return Err(Error::InvalidArgument(format!(
                "zero multiplicity for eigenvalue {value}"
            )));
        }
        Ok(Spectrum { entries })
    }

    pub fn entries(&self) -> &[(S, usize)] {
        &self.entries
    }

    pub fn values(&self) -> Vec<S> {
        self.entries.iter().map(|&(v, _)| v).collect()
    }

    pub fn value(&self, i: usize) -> S {
        self.entries[i].0
    }

    pub fn multiplicity(&self, i: usize) -> usize {
        self.entries[i].1
    }

    /// Number of distinct eigenvalues.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of multiplicities, i.e. the matrix dimension.
    pub fn dimension(&self) -> usize {
        self.entries.iter().map(|&(_, m)| m).sum()
    }

    /// Index of the entry within `tol` of `value`, if any.
    pub fn match_value(&self, value: S, tol: S) -> Option<usize> {
        self.entries.iter().position(|&(v, _)| (v - value).abs() <= tol)
    }
}

/// Eigendecomposition of a symmetric real matrix by cyclic Jacobi rotations
/// in row-major order. Unconditionally convergent for symmetric input and
/// deterministic for identical input.
///
/// `tol` only gates the symmetry precheck; convergence is controlled by the
/// fixed off-diagonal ratio.
pub fn symmetric_eigen<S: Scalar>(matrix: &Mat<S>, tol: S) -> Result<EigenDecomposition<S>> {
    assert!(matrix.is_square(), "eigendecomposition of a non-square matrix");
    let n = matrix.rows();

    // reject asymmetric input, reporting the worst location
    let mut worst = (0usize, 0usize, S::zero());
    for i in 0..n {
        for j in (i + 1)..n {
            let delta = (matrix[(i, j)] - matrix[(j, i)]).abs();
            if delta > worst.2 {
                worst = (i, j, delta);
            }
        }
    }
    let scale = S::one().max(matrix.max_abs());
    if worst.2 > tol * scale {
        return Err(Error::NotSymmetric { i: worst.0, j: worst.1, delta: worst.2.as_f64() });
    }

    let mut a = Mat::from_fn(n, n, |i, j| (matrix[(i, j)] + matrix[(j, i)]) / S::of(2.0));
    let mut v = Mat::<S>::identity(n);
    // 1e-12 in f64; scalars with a wider epsilon fall back to n * epsilon
    let ratio = S::of(OFF_DIAGONAL_RATIO).max(S::epsilon() * S::of_usize(n.max(2)));
    let threshold = ratio * a.frobenius_norm();

    let off_diagonal = |a: &Mat<S>| {
        let mut sum = S::zero();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    sum = sum + a[(i, j)] * a[(i, j)];
                }
            }
        }
        sum.sqrt()
    };

    let mut converged = n < 2 || off_diagonal(&a) <= threshold;
    for _ in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                if apq == S::zero() {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (S::of(2.0) * apq);
                let t = {
                    let root = (theta * theta + S::one()).sqrt();
                    if theta >= S::zero() {
                        (theta + root).recip()
                    } else {
                        -(root - theta).recip()
                    }
                };
                let c = (t * t + S::one()).sqrt().recip();
                let s = t * c;

                // A <- G^T A G on rows/columns p and q
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
                a[(p, q)] = S::zero();
                a[(q, p)] = S::zero();

                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
        converged = off_diagonal(&a) <= threshold;
    }
    if !converged {
        return Err(Error::NoConvergence);
    }

    // sort eigenpairs by decreasing eigenvalue; stable for determinism
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].partial_cmp(&a[(i, i)]).unwrap_or(std::cmp::Ordering::Equal));
    let eigenvalues: Vec<S> = order.iter().map(|&k| a[(k, k)]).collect();
    let vectors = Mat::from_fn(n, n, |i, j| v[(i, order[j])]);

    Ok(EigenDecomposition { eigenvalues, vectors })
}

/// Clusters a descending list of eigenvalues into distinct values. Two
/// consecutive values merge when they are within `tol * max(1, |value|)`;
/// each cluster reports the mean of its members.
///
/// A cluster whose total width exceeds ten times the merge threshold means
/// the clustering is ambiguous at this tolerance, which is an error.
pub fn dedup_eigenvalues<S: Scalar>(values: &[S], tol: S) -> Result<Spectrum<S>> {
    for pair in values.windows(2) {
        assert!(pair[0] >= pair[1], "values must be sorted in decreasing order");
    }
    let mut entries: Vec<(S, usize)> = Vec::new();
    let mut start = 0usize;
    while start < values.len() {
        let mut end = start + 1;
        while end < values.len() {
            let gap = values[end - 1] - values[end];
            let scale = S::one().max(values[end - 1].abs().max(values[end].abs()));
            if gap <= tol * scale {
                end += 1;
            } else {
                break;
            }
        }
        let cluster = &values[start..end];
        let mut sum = S::zero();
        for &v in cluster {
            sum = sum + v;
        }
        let mean = sum / S::of_usize(cluster.len());
        let width = cluster[0] - cluster[cluster.len() - 1];
        let limit = S::of(10.0) * tol * S::one().max(mean.abs());
        if width > limit {
            return Err(Error::AmbiguousClustering { value: mean.as_f64(), width: width.as_f64() });
        }
        entries.push((mean, cluster.len()));
        start = end;
    }
    Spectrum::new(entries)
}

/// Spectral projectors, one per distinct eigenvalue.
#[derive(Clone, Debug)]
pub struct IdempotentSet<S = f64> {
    matrices: Vec<Mat<S>>,
}

impl<S: Scalar> IdempotentSet<S> {
    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    pub fn get(&self, i: usize) -> &Mat<S> {
        &self.matrices[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Mat<S>> {
        self.matrices.iter()
    }
}

/// Builds the projector onto each eigenspace as a sum of outer products of
/// the orthonormal eigenvectors in that eigenvalue's cluster.
pub fn idempotents_from_eigen<S: Scalar>(
    decomposition: &EigenDecomposition<S>,
    spectrum: &Spectrum<S>,
) -> IdempotentSet<S> {
    let n = decomposition.dimension();
    assert_eq!(spectrum.dimension(), n, "spectrum must cover the decomposition");
    let v = decomposition.vectors();
    let mut matrices = Vec::with_capacity(spectrum.len());
    let mut column = 0usize;
    for i in 0..spectrum.len() {
        let mult = spectrum.multiplicity(i);
        let mut e = Mat::zeros(n, n);
        for k in column..column + mult {
            for r in 0..n {
                for c in 0..n {
                    e[(r, c)] = e[(r, c)] + v[(r, k)] * v[(c, k)];
                }
            }
        }
        matrices.push(e);
        column += mult;
    }
    IdempotentSet { matrices }
}

/// Evaluates the `i`-th Lagrange basis polynomial over the spectrum's
/// distinct eigenvalues at the matrix `m`:
/// `prod_{j != i} (m - theta_j I) / prod_{j != i} (theta_i - theta_j)`.
///
/// When `m` is diagonalizable with exactly the spectrum's distinct
/// eigenvalues this is the eigenprojection for `theta_i`. A one-eigenvalue
/// spectrum yields the identity (empty product).
pub fn lagrange_idempotent<S: Scalar>(
    m: &Mat<S>,
    spectrum: &Spectrum<S>,
    i: usize,
) -> Result<Mat<S>> {
    assert!(m.is_square());
    assert!(i < spectrum.len(), "eigenvalue index out of range");
    let theta_i = spectrum.value(i);
    let mut numerator = Mat::<S>::identity(m.rows());
    let mut denominator = S::one();
    for j in 0..spectrum.len() {
        if j == i {
            continue;
        }
        let gap = theta_i - spectrum.value(j);
        if gap == S::zero() {
            return Err(Error::RepeatedEigenvalue { value: theta_i.as_f64() });
        }
        numerator = numerator.matmul(&m.shifted(spectrum.value(j)));
        denominator = denominator * gap;
    }
    Ok(numerator.scaled(denominator.recip()))
}

/// Eigenstructure of a quotient matrix: distinct eigenvalues, matched left
/// and right eigenvectors normalized so each pair has unit inner product,
/// and the oblique projectors built from them.
#[derive(Clone, Debug)]
pub struct QuotientEigen<S = f64> {
    spectrum: Spectrum<S>,
    /// Right eigenvectors as columns, in eigenvalue order (with repetition).
    right: Mat<S>,
    /// Left eigenvectors as rows, matched to `right`; equals `right^{-1}`.
    left: Mat<S>,
    /// Raw eigenvalues, decreasing with repetition.
    raw_eigenvalues: Vec<S>,
    idempotents: Vec<Mat<S>>,
}

impl<S: Scalar> QuotientEigen<S> {
    pub fn spectrum(&self) -> &Spectrum<S> {
        &self.spectrum
    }

    pub fn right_vectors(&self) -> &Mat<S> {
        &self.right
    }

    pub fn left_vectors(&self) -> &Mat<S> {
        &self.left
    }

    pub fn raw_eigenvalues(&self) -> &[S] {
        &self.raw_eigenvalues
    }

    /// Projector for the `i`-th distinct eigenvalue.
    pub fn idempotent(&self, i: usize) -> &Mat<S> {
        &self.idempotents[i]
    }

    /// Columns of `right` holding the eigenvectors of the `i`-th distinct
    /// eigenvalue.
    pub fn cluster_columns(&self, i: usize) -> std::ops::Range<usize> {
        let start: usize = (0..i).map(|k| self.spectrum.multiplicity(k)).sum();
        start..start + self.spectrum.multiplicity(i)
    }
}

/// Solves the eigenproblem of an equitable quotient matrix by diagonal
/// scaling: with `D = diag(sqrt(|V_i|))`, the matrix `D B D^{-1}` is
/// symmetric, so one symmetric solve yields real eigenvalues and matched
/// left/right eigenvectors (`v = D^{-1} w`, `u = w^T D`, so `u.v = 1`).
pub fn quotient_eigen<S: Scalar>(quotient: &QuotientMatrix, tol: S) -> Result<QuotientEigen<S>> {
    let m = quotient.num_cells();
    let b = quotient.matrix().to_scalar::<S>();
    let sqrt_sizes: Vec<S> = quotient.cell_sizes().iter().map(|&s| S::of_usize(s).sqrt()).collect();
    let scaled = Mat::from_fn(m, m, |i, j| b[(i, j)] * sqrt_sizes[i] / sqrt_sizes[j]);

    // the scaling is exactly symmetric for a valid quotient; guard anyway
    for i in 0..m {
        for j in (i + 1)..m {
            let delta = (scaled[(i, j)] - scaled[(j, i)]).abs();
            if delta > tol * S::one().max(scaled.max_abs()) {
                return Err(Error::NotSymmetrizable { i, j, delta: delta.as_f64() });
            }
        }
    }

    let dec = symmetric_eigen(&scaled, tol)?;
    let spectrum = dedup_eigenvalues(dec.eigenvalues(), tol)?;
    let w = dec.vectors();
    let right = Mat::from_fn(m, m, |i, j| w[(i, j)] / sqrt_sizes[i]);
    let left = Mat::from_fn(m, m, |i, j| w[(j, i)] * sqrt_sizes[j]);

    let mut idempotents = Vec::with_capacity(spectrum.len());
    let mut column = 0usize;
    for i in 0..spectrum.len() {
        let mult = spectrum.multiplicity(i);
        let mut e = Mat::zeros(m, m);
        for k in column..column + mult {
            for r in 0..m {
                for c in 0..m {
                    e[(r, c)] = e[(r, c)] + right[(r, k)] * left[(k, c)];
                }
            }
        }
        idempotents.push(e);
        column += mult;
    }

    Ok(QuotientEigen {
        spectrum,
        right,
        left,
        raw_eigenvalues: dec.eigenvalues().to_vec(),
        idempotents,
    })
}

/// Oracle eigendecomposition of a graph's adjacency matrix together with its
/// deduplicated spectrum.
pub fn adjacency_eigen<S: Scalar>(
    g: &Graph,
    tol: S,
) -> Result<(EigenDecomposition<S>, Spectrum<S>)> {
    let dec = symmetric_eigen(&g.adjacency().to_scalar::<S>(), tol)?;
    let spectrum = dedup_eigenvalues(dec.eigenvalues(), tol)?;
    Ok((dec, spectrum))
}
