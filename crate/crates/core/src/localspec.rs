//! Crossed local multiplicities from quotient matrices, local spectra,
//! walk-regularity, the simple-eigenvalue shortcut, and full-spectrum
//! reconstruction, together with a direct-eigendecomposition oracle.
//!
//! The central fact: for an equitable partition whose first cell is the
//! singleton `{u}`, the crossed multiplicity `m_uv(theta_i) = (E_i)_{uv}`
//! for `v` in cell `j` equals `(L_i(B))[0][j] / |V_j|`, where `L_i` is the
//! Lagrange basis polynomial over the graph's distinct eigenvalues. It also
//! equals `(Ebar_i)[0][j] / |V_j|` when `theta_i` is an eigenvalue of the
//! quotient `B`, and `0` when it is not.

use crate::error::{Error, Result};
use crate::graph::{require_connected, Graph};
use crate::matrix::Mat;
use crate::partition::{
    quotient_matrix, vertex_partition, vertex_quotient_classes, QuotientMatrix,
};
use crate::scalar::Scalar;
use crate::spectra::{
    adjacency_eigen, idempotents_from_eigen, lagrange_idempotent, quotient_eigen, Spectrum,
};

/// Absolute tolerance for matching quotient eigenvalues against full-graph
/// eigenvalues; the two solvers accumulate different rounding noise, so this
/// is looser than the dedup tolerance.
pub const EIGENVALUE_MATCH_TOL: f64 = 1e-7;

/// Limit on the distance between a float multiplicity and the integer it is
/// rounded to at API boundaries that promise integers.
pub const ROUNDING_RESIDUAL_LIMIT: f64 = 1e-6;

/// Crossed local multiplicities from the singleton base cell: entry `(i, j)`
/// is `m_uv(theta_i)` for the base vertex `u` and any `v` in cell `j`.
///
/// Column 0 holds the local multiplicities of `u` itself (they lie in
/// `[0, 1]` and sum to 1); every other column sums to 0.
#[derive(Clone, Debug)]
pub struct CrossedMultiplicityTable<S = f64> {
    eigenvalues: Vec<S>,
    cell_sizes: Vec<usize>,
    entries: Mat<S>,
}

impl<S: Scalar> CrossedMultiplicityTable<S> {
    /// Assembles a table from precomputed entries (closed-form fixtures).
    pub(crate) fn from_parts(eigenvalues: Vec<S>, cell_sizes: Vec<usize>, entries: Mat<S>) -> Self {
        debug_assert_eq!(entries.rows(), eigenvalues.len());
        debug_assert_eq!(entries.cols(), cell_sizes.len());
        CrossedMultiplicityTable { eigenvalues, cell_sizes, entries }
    }

    /// Distinct eigenvalues of the graph, decreasing; one table row each.
    pub fn eigenvalues(&self) -> &[S] {
        &self.eigenvalues
    }

    pub fn cell_sizes(&self) -> &[usize] {
        &self.cell_sizes
    }

    /// Row per eigenvalue, column per cell.
    pub fn entries(&self) -> &Mat<S> {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> S {
        self.entries[(i, j)]
    }

    /// Local multiplicities of the base vertex (column 0).
    pub fn local_multiplicities(&self) -> Vec<S> {
        (0..self.eigenvalues.len()).map(|i| self.entries[(i, 0)]).collect()
    }

    /// Column sums; the orthonormality row printed under the table
    /// (1 for the base cell, 0 elsewhere).
    pub fn column_sums(&self) -> Vec<S> {
        (0..self.cell_sizes.len())
            .map(|j| {
                (0..self.eigenvalues.len()).fold(S::zero(), |acc, i| acc + self.entries[(i, j)])
            })
            .collect()
    }
}

fn require_singleton_base(quotient: &QuotientMatrix) -> Result<()> {
    match quotient.cell_sizes().first() {
        Some(&1) => Ok(()),
        Some(&size) => Err(Error::BaseCellNotSingleton { size }),
        None => Err(Error::InvalidQuotient { reason: "empty quotient".to_string() }),
    }
}

/// Maps each distinct quotient eigenvalue to its index in the full spectrum,
/// erroring when one is missing (wrong spectrum or non-equitable quotient).
fn match_spectra<S: Scalar>(
    quotient_spectrum: &Spectrum<S>,
    full_spectrum: &Spectrum<S>,
) -> Result<Vec<usize>> {
    let tol = S::of(EIGENVALUE_MATCH_TOL);
    quotient_spectrum
        .values()
        .into_iter()
        .map(|tau| {
            full_spectrum
                .match_value(tau, tol)
                .ok_or(Error::EigenvalueMismatch { value: tau.as_f64() })
        })
        .collect()
}

/// Crossed multiplicities via Lagrange interpolation: row `i` is
/// `(L_i(B))[0][.]` divided entrywise by the cell sizes, with `L_i` taken
/// over the full spectrum.
pub fn crossed_via_lagrange<S: Scalar>(
    quotient: &QuotientMatrix,
    full_spectrum: &Spectrum<S>,
    tol: S,
) -> Result<CrossedMultiplicityTable<S>> {
    require_singleton_base(quotient)?;
    let qe = quotient_eigen(quotient, tol)?;
    match_spectra(qe.spectrum(), full_spectrum)?;

    let b = quotient.matrix().to_scalar::<S>();
    let m = quotient.num_cells();
    let d1 = full_spectrum.len();
    let mut entries = Mat::zeros(d1, m);
    for i in 0..d1 {
        let li = lagrange_idempotent(&b, full_spectrum, i)?;
        for j in 0..m {
            entries[(i, j)] = li[(0, j)] / S::of_usize(quotient.cell_sizes()[j]);
        }
    }
    Ok(CrossedMultiplicityTable {
        eigenvalues: full_spectrum.values(),
        cell_sizes: quotient.cell_sizes().to_vec(),
        entries,
    })
}

/// Crossed multiplicities via the quotient's own spectral projectors: row
/// `i` is `(Ebar_k)[0][.] / |V_j|` when `theta_i` matches the quotient
/// eigenvalue `tau_k`, and all zeros when `theta_i` is not an eigenvalue of
/// the quotient.
pub fn crossed_via_quotient_idempotents<S: Scalar>(
    quotient: &QuotientMatrix,
    full_spectrum: &Spectrum<S>,
    tol: S,
) -> Result<CrossedMultiplicityTable<S>> {
    require_singleton_base(quotient)?;
    let qe = quotient_eigen(quotient, tol)?;
    let row_of = match_spectra(qe.spectrum(), full_spectrum)?;

    let m = quotient.num_cells();
    let mut entries = Mat::zeros(full_spectrum.len(), m);
    for (k, &i) in row_of.iter().enumerate() {
        let e = qe.idempotent(k);
        for j in 0..m {
            entries[(i, j)] = e[(0, j)] / S::of_usize(quotient.cell_sizes()[j]);
        }
    }
    Ok(CrossedMultiplicityTable {
        eigenvalues: full_spectrum.values(),
        cell_sizes: quotient.cell_sizes().to_vec(),
        entries,
    })
}

/// Ground truth for the crossed multiplicities: the `(u,v)` entries of the
/// full-graph spectral projectors, one per distinct eigenvalue.
pub fn crossed_direct_oracle<S: Scalar>(g: &Graph, u: usize, v: usize, tol: S) -> Result<Vec<S>> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let (dec, spectrum) = adjacency_eigen(g, tol)?;
    let idempotents = idempotents_from_eigen(&dec, &spectrum);
    Ok(idempotents.iter().map(|e| e[(u, v)]).collect())
}

/// Eigenvalues with a positive local multiplicity at one vertex.
///
/// The local multiplicity `m_u(theta)` is the squared cosine of the angle
/// between the vertex indicator and its projection onto the eigenspace, so
/// the entries lie in `[0, 1]` and sum to 1.
#[derive(Clone, Debug)]
pub struct LocalSpectrum<S = f64> {
    vertex: usize,
    entries: Vec<(S, S)>,
}

impl<S: Scalar> LocalSpectrum<S> {
    pub fn vertex(&self) -> usize {
        self.vertex
    }

    /// `(eigenvalue, local multiplicity)` pairs, eigenvalues decreasing.
    pub fn entries(&self) -> &[(S, S)] {
        &self.entries
    }

    pub fn multiplicity_sum(&self) -> S {
        self.entries.iter().fold(S::zero(), |acc, &(_, m)| acc + m)
    }
}

/// Local multiplicities read off a quotient whose first cell is a
/// singleton: the pairs `(tau_i, (Ebar_i)[0][0])` with multiplicity above
/// `tol`.
pub fn local_spectrum_from_quotient<S: Scalar>(
    quotient: &QuotientMatrix,
    tol: S,
) -> Result<Vec<(S, S)>> {
    require_singleton_base(quotient)?;
    let qe = quotient_eigen(quotient, tol)?;
    Ok((0..qe.spectrum().len())
        .filter_map(|i| {
            let mult = qe.idempotent(i)[(0, 0)];
            (mult > tol).then_some((qe.spectrum().value(i), mult))
        })
        .collect())
}

/// Local spectrum of `u` from the quotient of its vertex partition.
pub fn local_spectrum<S: Scalar>(g: &Graph, u: usize, tol: S) -> Result<LocalSpectrum<S>> {
    require_connected(g)?;
    let partition = vertex_partition(g, u)?;
    let quotient = quotient_matrix(g, &partition)?;
    let entries = local_spectrum_from_quotient(&quotient, tol)?;
    Ok(LocalSpectrum { vertex: u, entries })
}

/// Number of walks from the base vertex into each cell, recovered from the
/// crossed multiplicities: `sum_i m_uv(theta_i) * theta_i^length` per cell.
pub fn walks_from_crossed<S: Scalar>(table: &CrossedMultiplicityTable<S>, length: usize) -> Vec<S> {
    (0..table.cell_sizes().len())
        .map(|j| {
            table.eigenvalues().iter().enumerate().fold(S::zero(), |acc, (i, &theta)| {
                acc + table.entry(i, j) * theta.powi(length as i32)
            })
        })
        .collect()
}

/// Crossed-multiplicity row for one simple eigenvalue from any left/right
/// eigenvector pair: `m_uv(tau) = v[0] * u[j] / (<u, v> * |V_j|)`. The value
/// is invariant under rescaling either eigenvector.
pub fn crossed_row_from_eigenvectors<S: Scalar>(
    left: &[S],
    right: &[S],
    cell_sizes: &[usize],
) -> Result<Vec<S>> {
    assert_eq!(left.len(), right.len());
    assert_eq!(left.len(), cell_sizes.len());
    let dot = left.iter().zip(right).fold(S::zero(), |acc, (&l, &r)| acc + l * r);
    let scale =
        left.iter().zip(right).fold(S::zero(), |acc, (&l, &r)| acc.max(l.abs()).max(r.abs()));
    if dot.abs() <= S::of(1e-12) * scale * scale {
        return Err(Error::DegenerateEigenpair);
    }
    Ok((0..left.len()).map(|j| right[0] * left[j] / (dot * S::of_usize(cell_sizes[j]))).collect())
}

/// Per-cell crossed multiplicities of the `i`-th distinct quotient
/// eigenvalue, which must be simple.
pub fn simple_eigenvalue_multiplicity<S: Scalar>(
    quotient: &QuotientMatrix,
    i: usize,
    tol: S,
) -> Result<Vec<S>> {
    let qe = quotient_eigen(quotient, tol)?;
    if i >= qe.spectrum().len() {
        return Err(Error::InvalidArgument(format!(
            "eigenvalue index {i} out of range (quotient has {} distinct eigenvalues)",
            qe.spectrum().len()
        )));
    }
    let mult = qe.spectrum().multiplicity(i);
    if mult != 1 {
        return Err(Error::NonsimpleEigenvalue {
            value: qe.spectrum().value(i).as_f64(),
            multiplicity: mult,
        });
    }
    let col = qe.cluster_columns(i).start;
    let m = quotient.num_cells();
    let right: Vec<S> = (0..m).map(|r| qe.right_vectors()[(r, col)]).collect();
    let left: Vec<S> = (0..m).map(|c| qe.left_vectors()[(col, c)]).collect();
    crossed_row_from_eigenvectors(&left, &right, quotient.cell_sizes())
}

/// Returns the first walk length `0..=d` whose closed-walk counts are not
/// constant over the vertices, or `None` when the graph is walk-regular.
fn walk_regularity_defect<S: Scalar>(g: &Graph, tol: S) -> Result<Option<usize>> {
    if g.order() == 0 {
        return Ok(None);
    }
    let (_, spectrum) = adjacency_eigen(g, tol)?;
    let d = spectrum.len() - 1;
    let mut power = Mat::<i64>::identity(g.order());
    for length in 0..=d {
        if length > 0 {
            power = power
                .checked_matmul(g.adjacency())
                .map_err(|_| Error::WalkCountOverflow { length })?;
        }
        let first = power[(0, 0)];
        if (1..g.order()).any(|v| power[(v, v)] != first) {
            return Ok(Some(length));
        }
    }
    Ok(None)
}

/// True iff the diagonal of `A^length` is constant for every
/// `length = 0..=d`, checked with exact integer walk counts. Constant
/// closed-walk counts up to `d` force them constant for all lengths.
pub fn is_walk_regular<S: Scalar>(g: &Graph, tol: S) -> Result<bool> {
    require_connected(g)?;
    Ok(walk_regularity_defect(g, tol)?.is_none())
}

fn round_to_multiplicity<S: Scalar>(value: S, raw: S) -> Result<usize> {
    let rounded = raw.round();
    let residual = (raw - rounded).abs();
    if residual > S::of(ROUNDING_RESIDUAL_LIMIT) || rounded < S::zero() {
        return Err(Error::RoundingResidual {
            value: value.as_f64(),
            residual: residual.as_f64(),
            limit: ROUNDING_RESIDUAL_LIMIT,
        });
    }
    Ok(rounded.to_usize().unwrap_or(0))
}

/// Full spectrum of a walk-regular graph from a single vertex's quotient:
/// the multiplicity of `tau_i` is `n * (Ebar_i)[0][0]`, rounded with an
/// explicit residual check.
pub fn walk_regular_multiplicities<S: Scalar>(g: &Graph, u: usize, tol: S) -> Result<Spectrum<S>> {
    if let Some(length) = walk_regularity_defect(g, tol)? {
        return Err(Error::NotWalkRegular { length });
    }
    let partition = vertex_partition(g, u)?;
    let quotient = quotient_matrix(g, &partition)?;
    let qe = quotient_eigen(&quotient, tol)?;
    let n = S::of_usize(g.order());

    let mut entries = Vec::with_capacity(qe.spectrum().len());
    let mut total = 0usize;
    for i in 0..qe.spectrum().len() {
        let tau = qe.spectrum().value(i);
        let mult = round_to_multiplicity(tau, n * qe.idempotent(i)[(0, 0)])?;
        total += mult;
        entries.push((tau, mult));
    }
    if total != g.order() {
        return Err(Error::MultiplicitySum { expected: g.order(), got: total });
    }
    Spectrum::new(entries)
}

/// Reconstructs the whole spectrum from local data only: every vertex's
/// quotient contributes its local spectrum, the union is clustered, and the
/// per-cluster sums of local multiplicities are the global multiplicities.
///
/// The adjacency matrix is never eigendecomposed here, so the direct oracle
/// stays an independent check. Vertices sharing a quotient matrix share one
/// computation.
pub fn reconstruct_spectrum<S: Scalar>(g: &Graph, tol: S) -> Result<Spectrum<S>> {
    require_connected(g)?;
    if g.order() == 0 {
        return Spectrum::new(Vec::new());
    }

    // (eigenvalue, summed local multiplicity) over all vertices
    let mut contributions: Vec<(S, S)> = Vec::new();
    for (quotient, count) in vertex_quotient_classes(g)? {
        let qe = quotient_eigen(&quotient, tol)?;
        let weight = S::of_usize(count);
        for i in 0..qe.spectrum().len() {
            let local = qe.idempotent(i)[(0, 0)];
            contributions.push((qe.spectrum().value(i), weight * local));
        }
    }
    contributions.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap_or(std::cmp::Ordering::Equal));

    let match_tol = S::of(EIGENVALUE_MATCH_TOL);
    let mut entries: Vec<(S, usize)> = Vec::new();
    let mut total = 0usize;
    let mut start = 0usize;
    while start < contributions.len() {
        let mut end = start + 1;
        while end < contributions.len()
            && contributions[end - 1].0 - contributions[end].0 <= match_tol
        {
            end += 1;
        }
        let cluster = &contributions[start..end];
        let weight_sum = cluster.iter().fold(S::zero(), |acc, &(_, w)| acc + w);
        let weighted_value =
            cluster.iter().fold(S::zero(), |acc, &(v, w)| acc + v * w) / weight_sum;
        let mult = round_to_multiplicity(weighted_value, weight_sum)?;
        if mult > 0 {
            entries.push((weighted_value, mult));
            total += mult;
        }
        start = end;
    }
    if total != g.order() {
        return Err(Error::MultiplicitySum { expected: g.order(), got: total });
    }
    Spectrum::new(entries)
}

/// Global multiplicities of a distance-regular intersection matrix
/// (tridiagonal, all eigenvalues simple): `m(tau_i) = n / <u_i, v_i>` with
/// both eigenvectors normalized to have first entry 1.
pub fn distance_regular_multiplicity<S: Scalar>(
    quotient: &QuotientMatrix,
    n: usize,
    tol: S,
) -> Result<Spectrum<S>> {
    quotient.is_tridiagonal()?;
    let qe = quotient_eigen(quotient, tol)?;
    let m = quotient.num_cells();
    let mut entries = Vec::with_capacity(qe.spectrum().len());
    let mut total = 0usize;
    for i in 0..qe.spectrum().len() {
        let tau = qe.spectrum().value(i);
        let mult_i = qe.spectrum().multiplicity(i);
        if mult_i != 1 {
            return Err(Error::NonsimpleEigenvalue { value: tau.as_f64(), multiplicity: mult_i });
        }
        let col = qe.cluster_columns(i).start;
        let v1 = qe.right_vectors()[(0, col)];
        let u1 = qe.left_vectors()[(col, 0)];
        if v1 == S::zero() || u1 == S::zero() {
            return Err(Error::DegenerateEigenpair);
        }
        // <u/u1, v/v1> = <u, v> / (u1 v1) = 1 / (u1 v1) for normalized pairs
        let dot = (0..m).fold(S::zero(), |acc, k| {
            acc + (qe.left_vectors()[(col, k)] / u1) * (qe.right_vectors()[(k, col)] / v1)
        });
        let mult = round_to_multiplicity(tau, S::of_usize(n) / dot)?;
        total += mult;
        entries.push((tau, mult));
    }
    if total != n {
        return Err(Error::MultiplicitySum { expected: n, got: total });
    }
    Spectrum::new(entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{parse_edge_list, walk_counts};
    use crate::partition::Partition;

    const TOL: f64 = 1e-9;

    fn assert_close(a: f64, b: f64, eps: f64) {
        assert!((a - b).abs() <= eps, "{a} vs {b}");
    }

    fn c4() -> Graph {
        parse_edge_list("0 1\n1 2\n2 3\n3 0").unwrap()
    }

    fn k3() -> Graph {
        parse_edge_list("0 1\n1 2\n2 0").unwrap()
    }

    fn petersen() -> Graph {
        crate::families::petersen()
    }

    #[test]
    fn crossed_tables_for_c4() {
        let g = c4();
        let (_, full) = adjacency_eigen::<f64>(&g, TOL).unwrap();
        let q = quotient_matrix(&g, &vertex_partition(&g, 0).unwrap()).unwrap();
        let lag = crossed_via_lagrange(&q, &full, TOL).unwrap();
        let idem = crossed_via_quotient_idempotents(&q, &full, TOL).unwrap();
        // local multiplicities of any C4 vertex: 1/4, 1/2, 1/4
        let expected = [0.25, 0.5, 0.25];
        for (i, want) in expected.into_iter().enumerate() {
            assert_close(lag.entry(i, 0), want, 1e-10);
            assert_close(idem.entry(i, 0), want, 1e-10);
        }
        assert!(lag.entries().max_abs_diff(idem.entries()) < 1e-10);
        // column sums: 1 for the base cell, 0 elsewhere
        let sums = lag.column_sums();
        assert_close(sums[0], 1.0, 1e-10);
        for &s in &sums[1..] {
            assert_close(s, 0.0, 1e-10);
        }
    }

    #[test]
    fn crossed_k3_quotient() {
        let g = k3();
        let (_, full) = adjacency_eigen::<f64>(&g, TOL).unwrap();
        let q = quotient_matrix(&g, &vertex_partition(&g, 0).unwrap()).unwrap();
        assert_eq!(q.matrix().row(0), &[0, 2]);
        assert_eq!(q.matrix().row(1), &[1, 1]);
        let t = crossed_via_quotient_idempotents(&q, &full, TOL).unwrap();
        assert_close(t.entry(0, 0), 1.0 / 3.0, 1e-10);
        assert_close(t.entry(1, 0), 2.0 / 3.0, 1e-10);
    }

    #[test]
    fn hadamard_crossed_values_at_n1() {
        let g = crate::families::subdivided_complete(4).unwrap();
        let (_, full) = adjacency_eigen::<f64>(&g, TOL).unwrap();

        // subdivision vertex: m_uu(theta_0) = 1/12 and the antipodal column
        // carries -1/4 at theta_1
        let q = quotient_matrix(&g, &vertex_partition(&g, 4).unwrap()).unwrap();
        let lag = crossed_via_lagrange(&q, &full, TOL).unwrap();
        let idem = crossed_via_quotient_idempotents(&q, &full, TOL).unwrap();
        assert_close(lag.entry(0, 0), 1.0 / 12.0, 1e-10);
        assert_close(idem.entry(1, 4), -0.25, 1e-10);
        assert!(lag.entries().max_abs_diff(idem.entries()) < 1e-10);

        // branch vertex: the theta_2 = 0 row vanishes and distance 1 sees
        // sqrt(2)/(8 sqrt(3)) at theta_0
        let q = quotient_matrix(&g, &vertex_partition(&g, 0).unwrap()).unwrap();
        let idem = crossed_via_quotient_idempotents(&q, &full, TOL).unwrap();
        for j in 0..4 {
            assert_close(idem.entry(2, j), 0.0, 1e-12);
        }
        assert_close(idem.entry(0, 1), 2.0f64.sqrt() / (8.0 * 3.0f64.sqrt()), 1e-10);
    }

    #[test]
    fn crossed_requires_singleton_base() {
        let g = c4();
        let (_, full) = adjacency_eigen::<f64>(&g, TOL).unwrap();
        let p = Partition::new(vec![vec![0, 2], vec![1, 3]], 4).unwrap();
        let q = quotient_matrix(&g, &p).unwrap();
        assert!(matches!(
            crossed_via_lagrange(&q, &full, TOL),
            Err(Error::BaseCellNotSingleton { size: 2 })
        ));
    }

    #[test]
    fn crossed_rejects_wrong_spectrum() {
        let g = c4();
        let q = quotient_matrix(&g, &vertex_partition(&g, 0).unwrap()).unwrap();
        // a spectrum missing the quotient eigenvalue 2
        let wrong = Spectrum::new(vec![(0.5, 2), (0.0, 1), (-2.0, 1)]).unwrap();
        assert!(matches!(
            crossed_via_lagrange(&q, &wrong, TOL),
            Err(Error::EigenvalueMismatch { .. })
        ));
    }

    #[test]
    fn oracle_agrees_on_c4_antipode() {
        let vals = crossed_direct_oracle::<f64>(&c4(), 0, 2, TOL).unwrap();
        let expected = [0.25, -0.5, 0.25];
        for (got, want) in vals.iter().zip(expected) {
            assert_close(*got, want, 1e-10);
        }
        // diagonal case: values in [0,1] summing to 1
        let diag = crossed_direct_oracle::<f64>(&c4(), 1, 1, TOL).unwrap();
        assert_close(diag.iter().sum::<f64>(), 1.0, 1e-10);
        assert!(diag.iter().all(|&x| (-1e-12..=1.0 + 1e-12).contains(&x)));
    }

    #[test]
    fn local_spectrum_examples() {
        // any C4 vertex: {2^(1/4), 0^(1/2), (-2)^(1/4)}
        let ls = local_spectrum::<f64>(&c4(), 0, TOL).unwrap();
        assert_eq!(ls.entries().len(), 3);
        assert_close(ls.entries()[0].1, 0.25, 1e-10);
        assert_close(ls.entries()[1].1, 0.5, 1e-10);
        assert_close(ls.entries()[2].1, 0.25, 1e-10);
        assert_close(ls.multiplicity_sum(), 1.0, 1e-10);

        // K_n vertex: {(n-1)^(1/n), (-1)^((n-1)/n)}
        for n in [3usize, 4, 5] {
            let g = crate::families::complete(n).unwrap();
            let ls = local_spectrum::<f64>(&g, 0, TOL).unwrap();
            assert_eq!(ls.entries().len(), 2);
            assert_close(ls.entries()[0].0, (n - 1) as f64, 1e-9);
            assert_close(ls.entries()[0].1, 1.0 / n as f64, 1e-10);
            assert_close(ls.entries()[1].1, (n - 1) as f64 / n as f64, 1e-10);
        }
    }

    #[test]
    fn walks_round_trip_c4() {
        let g = c4();
        let (_, full) = adjacency_eigen::<f64>(&g, TOL).unwrap();
        let partition = vertex_partition(&g, 0).unwrap();
        let q = quotient_matrix(&g, &partition).unwrap();
        let t = crossed_via_quotient_idempotents(&q, &full, TOL).unwrap();

        // length 0: indicator of the base cell
        let w0 = walks_from_crossed(&t, 0);
        assert_close(w0[0], 1.0, 1e-10);
        assert_close(w0[1], 0.0, 1e-10);

        // length 3 into the cell of vertex 1: 4 walks
        let w3 = walks_from_crossed(&t, 3);
        let cell_of_1 = partition.cell_of(1);
        assert_close(w3[cell_of_1], 4.0, 1e-9);

        // exact agreement with integer walk counts for all small lengths
        for len in 0..=3usize {
            let wl = walks_from_crossed(&t, len);
            let exact = walk_counts(&g, len).unwrap();
            for (j, cell) in partition.cells().iter().enumerate() {
                assert_close(wl[j], exact.count(0, cell[0]) as f64, 1e-8);
            }
        }
    }

    #[test]
    fn crossed_row_is_scale_invariant() {
        let g = petersen();
        let q = quotient_matrix(&g, &vertex_partition(&g, 0).unwrap()).unwrap();
        let qe = quotient_eigen::<f64>(&q, TOL).unwrap();
        let m = q.num_cells();
        for i in 0..qe.spectrum().len() {
            let col = qe.cluster_columns(i).start;
            let right: Vec<f64> = (0..m).map(|r| qe.right_vectors()[(r, col)]).collect();
            let left: Vec<f64> = (0..m).map(|c| qe.left_vectors()[(col, c)]).collect();
            let base = crossed_row_from_eigenvectors(&left, &right, q.cell_sizes()).unwrap();
            for (alpha, beta) in [(0.5, 3.0), (3.0, 0.5), (0.5, 0.5), (3.0, 3.0)] {
                let left_s: Vec<f64> = left.iter().map(|x| alpha * x).collect();
                let right_s: Vec<f64> = right.iter().map(|x| beta * x).collect();
                let scaled =
                    crossed_row_from_eigenvectors(&left_s, &right_s, q.cell_sizes()).unwrap();
                for (a, b) in base.iter().zip(&scaled) {
                    assert_close(*a, *b, 1e-12);
                }
            }
        }
    }

    #[test]
    fn orthogonal_eigenvector_pair_is_an_error() {
        assert!(matches!(
            crossed_row_from_eigenvectors(&[1.0, 0.0], &[0.0, 1.0], &[1, 1]),
            Err(Error::DegenerateEigenpair)
        ));
    }

    #[test]
    fn simple_eigenvalue_shortcut_matches_idempotent_route() {
        let g = petersen();
        let (_, full) = adjacency_eigen::<f64>(&g, TOL).unwrap();
        let q = quotient_matrix(&g, &vertex_partition(&g, 0).unwrap()).unwrap();
        let table = crossed_via_quotient_idempotents(&q, &full, TOL).unwrap();
        let qe = quotient_eigen::<f64>(&q, TOL).unwrap();
        for i in 0..qe.spectrum().len() {
            let row = simple_eigenvalue_multiplicity(&q, i, TOL).unwrap();
            let full_row = full.match_value(qe.spectrum().value(i), 1e-7).unwrap();
            for j in 0..q.num_cells() {
                assert_close(row[j], table.entry(full_row, j), 1e-9);
            }
        }

        // closed form on the cone quotient: m_u(theta_0) = (1 - k/sqrt(k^2+4n))/2
        let (n, k) = (5.0f64, 2.0f64);
        let q = crate::families::cone_quotient(5, 2).unwrap();
        let top = simple_eigenvalue_multiplicity(&q, 0, TOL).unwrap();
        assert_close(top[0], 0.5 * (1.0 - k / (k * k + 4.0 * n).sqrt()), 1e-10);

        assert!(matches!(
            simple_eigenvalue_multiplicity(&q, 7, TOL),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn single_cell_quotient_gives_uniform_multiplicity() {
        // K4 with the one-cell partition: B = [3], m_uv(3) = 1/4
        let g = crate::families::complete(4).unwrap();
        let q = quotient_matrix(&g, &Partition::single_cell(4)).unwrap();
        let row = simple_eigenvalue_multiplicity(&q, 0, TOL).unwrap();
        assert_close(row[0], 0.25, 1e-10);
    }

    #[test]
    fn walk_regularity() {
        let c5 = parse_edge_list("0 1\n1 2\n2 3\n3 4\n4 0").unwrap();
        assert!(is_walk_regular(&c5, TOL).unwrap());
        let p3 = parse_edge_list("0 1\n1 2").unwrap();
        assert!(!is_walk_regular(&p3, TOL).unwrap());
        assert!(is_walk_regular(&petersen(), TOL).unwrap());
    }

    #[test]
    fn walk_regular_spectrum_from_one_vertex() {
        // Petersen: {3^1, 1^5, (-2)^4}
        let s = walk_regular_multiplicities::<f64>(&petersen(), 0, TOL).unwrap();
        assert_eq!(s.len(), 3);
        assert_close(s.value(0), 3.0, 1e-9);
        assert_eq!((s.multiplicity(0), s.multiplicity(1), s.multiplicity(2)), (1, 5, 4));

        // K4: {3^1, (-1)^3}
        let s = walk_regular_multiplicities::<f64>(&crate::families::complete(4).unwrap(), 0, TOL)
            .unwrap();
        assert_eq!((s.multiplicity(0), s.multiplicity(1)), (1, 3));

        // C5: {2, (2cos72)^2, (2cos144)^2}
        let s = walk_regular_multiplicities::<f64>(
            &parse_edge_list("0 1\n1 2\n2 3\n3 4\n4 0").unwrap(),
            2,
            TOL,
        )
        .unwrap();
        let c = |k: f64| 2.0 * (2.0 * std::f64::consts::PI * k / 5.0).cos();
        assert_close(s.value(1), c(1.0), 1e-9);
        assert_close(s.value(2), c(2.0), 1e-9);
        assert_eq!((s.multiplicity(0), s.multiplicity(1), s.multiplicity(2)), (1, 2, 2));

        // non-walk-regular input is an error
        let p3 = parse_edge_list("0 1\n1 2").unwrap();
        assert!(matches!(
            walk_regular_multiplicities::<f64>(&p3, 0, TOL),
            Err(Error::NotWalkRegular { .. })
        ));
    }

    #[test]
    fn reconstruction_matches_oracle() {
        for g in [k3(), c4(), petersen(), crate::families::subdivided_complete(4).unwrap()] {
            let reconstructed = reconstruct_spectrum::<f64>(&g, TOL).unwrap();
            let (_, oracle) = adjacency_eigen::<f64>(&g, TOL).unwrap();
            assert_eq!(reconstructed.len(), oracle.len());
            for i in 0..oracle.len() {
                assert_close(reconstructed.value(i), oracle.value(i), 1e-7);
                assert_eq!(reconstructed.multiplicity(i), oracle.multiplicity(i));
            }
        }
    }

    #[test]
    fn distance_regular_formula() {
        // Petersen intersection matrix, n = 10 -> (1, 5, 4)
        let b = Mat::from_rows(&[vec![0, 3, 0], vec![1, 0, 2], vec![0, 1, 2]]);
        let q = QuotientMatrix::new(b, vec![1, 3, 6]).unwrap();
        let s = distance_regular_multiplicity::<f64>(&q, 10, TOL).unwrap();
        assert_eq!((s.multiplicity(0), s.multiplicity(1), s.multiplicity(2)), (1, 5, 4));

        // C4 quotient, n = 4 -> (1, 2, 1)
        let b = Mat::from_rows(&[vec![0, 2, 0], vec![1, 0, 1], vec![0, 2, 0]]);
        let q = QuotientMatrix::new(b, vec![1, 2, 1]).unwrap();
        let s = distance_regular_multiplicity::<f64>(&q, 4, TOL).unwrap();
        assert_eq!((s.multiplicity(0), s.multiplicity(1), s.multiplicity(2)), (1, 2, 1));

        // K3 single-vertex quotient, n = 3 -> (1, 2)
        let b = Mat::from_rows(&[vec![0, 2], vec![1, 1]]);
        let q = QuotientMatrix::new(b, vec![1, 2]).unwrap();
        let s = distance_regular_multiplicity::<f64>(&q, 3, TOL).unwrap();
        assert_eq!((s.multiplicity(0), s.multiplicity(1)), (1, 2));
    }

    #[test]
    fn distance_regular_rejects_bad_input() {
        // not tridiagonal
        let b = Mat::from_rows(&[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
        let q = QuotientMatrix::new(b, vec![1, 1, 1]).unwrap();
        assert!(matches!(
            distance_regular_multiplicity::<f64>(&q, 3, TOL),
            Err(Error::NotTridiagonal { .. })
        ));

        // tridiagonal but with a repeated eigenvalue
        let b = Mat::from_rows(&[vec![1, 0], vec![0, 1]]);
        let q = QuotientMatrix::new(b, vec![1, 1]).unwrap();
        assert!(matches!(
            distance_regular_multiplicity::<f64>(&q, 2, TOL),
            Err(Error::NonsimpleEigenvalue { .. })
        ));
    }

    #[test]
    fn zero_rule_for_missing_quotient_eigenvalues() {
        // from a degree-3 vertex of the subdivided K4, the quotient misses
        // the eigenvalue 0 of the graph; the oracle column must vanish
        let g = crate::families::subdivided_complete(4).unwrap();
        let (_, full) = adjacency_eigen::<f64>(&g, TOL).unwrap();
        let q = quotient_matrix(&g, &vertex_partition(&g, 0).unwrap()).unwrap();
        let qe = quotient_eigen::<f64>(&q, TOL).unwrap();
        let zero_row = full.match_value(0.0, 1e-7).unwrap();
        assert!(qe.spectrum().match_value(0.0, 1e-7).is_none());
        for v in 0..g.order() {
            let oracle = crossed_direct_oracle::<f64>(&g, 0, v, TOL).unwrap();
            assert!(oracle[zero_row].abs() < 1e-8);
        }
    }
}
