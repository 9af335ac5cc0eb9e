//! Fixture graph constructors and closed-form reference data for the
//! worked example families: cones over regular graphs and the Hadamard
//! distance-biregular graphs.
//!
//! Vertex numberings are frozen so quotient matrices are reproducible:
//! cycles and completes use `0..n` in the obvious order, the Petersen graph
//! puts the outer 5-cycle on `0..5` and the inner pentagram on `5..10`,
//! `hypercube(d)` labels vertices by their coordinate bits, `cone` appends
//! the apex as the highest index, and `subdivided_complete(r)` numbers the
//! `r` branch vertices `0..r` followed by one subdivision vertex per pair
//! `(i, j)` in lexicographic order.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::localspec::CrossedMultiplicityTable;
use crate::matrix::Mat;
use crate::partition::QuotientMatrix;
use crate::scalar::Scalar;
use crate::spectra::Spectrum;

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("cycle needs n >= 3, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidArgument("complete graph needs n >= 1".to_string()));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            edges.push((i, j));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Complete bipartite graph with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a < 1 || b < 1 {
        return Err(Error::InvalidArgument(format!(
            "complete bipartite needs both sides nonempty, got {a} and {b}"
        )));
    }
    let mut edges = Vec::new();
    for i in 0..a {
        for j in 0..b {
            edges.push((i, a + j));
        }
    }
    Graph::from_edges(a + b, &edges)
}

/// Petersen graph: outer cycle `0..5`, inner pentagram `5..10`, spokes
/// `i -- 5+i`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Graph::from_edges(10, &edges).expect("fixed construction")
}

/// d-dimensional hypercube on `2^d` vertices labelled by coordinate bits.
pub fn hypercube(d: usize) -> Result<Graph> {
    if d < 1 {
        return Err(Error::InvalidArgument("hypercube needs d >= 1".to_string()));
    }
    if d > 20 {
        return Err(Error::InvalidArgument(format!("hypercube dimension {d} too large")));
    }
    let n = 1usize << d;
    let mut edges = Vec::new();
    for v in 0..n {
        for bit in 0..d {
            let w = v ^ (1 << bit);
            if v < w {
                edges.push((v, w));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Adds an apex adjacent to every vertex; the apex gets the highest index.
pub fn cone(g: &Graph) -> Graph {
    let n = g.order();
    let mut edges = g.edges();
    edges.extend((0..n).map(|v| (v, n)));
    Graph::from_edges(n + 1, &edges).expect("cone of a valid graph")
}

/// Closed-form local spectrum of the apex of a cone over a k-regular graph
/// on n vertices.
#[derive(Clone, Debug)]
pub struct ConeClosedForm<S = f64> {
    pub base_order: usize,
    pub base_degree: usize,
    /// The two quotient eigenvalues `(k +- sqrt(k^2 + 4n)) / 2`, decreasing.
    pub eigenvalues: [S; 2],
    /// Apex local multiplicities `(1 -+ k / sqrt(k^2 + 4n)) / 2`; they sum
    /// to 1.
    pub apex_multiplicities: [S; 2],
}

pub fn cone_closed_form<S: Scalar>(n: usize, k: usize) -> Result<ConeClosedForm<S>> {
    if n < 1 || k + 1 > n {
        return Err(Error::InvalidArgument(format!(
            "cone closed form needs 0 <= k <= n-1, got n={n}, k={k}"
        )));
    }
    let nf = S::of_usize(n);
    let kf = S::of_usize(k);
    let half = S::of(0.5);
    let root = (kf * kf + S::of(4.0) * nf).sqrt();
    Ok(ConeClosedForm {
        base_order: n,
        base_degree: k,
        eigenvalues: [half * (kf + root), half * (kf - root)],
        apex_multiplicities: [half * (S::one() - kf / root), half * (S::one() + kf / root)],
    })
}

/// The quotient matrix of the cone's apex partition `({apex}, base)`:
/// `[[0, n], [1, k]]` with cell sizes `(1, n)`.
pub fn cone_quotient(n: usize, k: usize) -> Result<QuotientMatrix> {
    QuotientMatrix::new(Mat::from_rows(&[vec![0, n as i64], vec![1, k as i64]]), vec![1, n])
}

/// Replaces every edge of the complete graph on `r` branch vertices by a
/// path of length two through a fresh subdivision vertex.
pub fn subdivided_complete(r: usize) -> Result<Graph> {
    if r < 2 {
        return Err(Error::InvalidArgument(format!(
            "subdivided complete graph needs r >= 2, got {r}"
        )));
    }
    let mut edges = Vec::new();
    let mut next = r;
    for i in 0..r {
        for j in (i + 1)..r {
            edges.push((i, next));
            edges.push((j, next));
            next += 1;
        }
    }
    Graph::from_edges(next, &edges)
}

/// Quotient matrices and closed-form spectral data of the Hadamard
/// distance-biregular graph on `12n - 2` vertices.
///
/// The bipartition has a small side of `4n` vertices of degree `4n - 1`
/// (the branch vertices of the subdivided K4 when `n = 1`) and a large side
/// of `8n - 2` vertices of degree `2n` (the subdivision vertices). Hanging
/// the graph from a small-side vertex gives a 4-cell distance partition;
/// from a large-side vertex, a 5-cell one. For `n >= 2` the graph is
/// represented only through these quotients and closed forms.
#[derive(Clone, Debug)]
pub struct HadamardQuotients<S = f64> {
    pub n: usize,
    /// 5x5 quotient of the distance partition from a large-side vertex,
    /// cell sizes `(1, 2n, 8n-4, 2n, 1)`.
    pub large_side_quotient: QuotientMatrix,
    /// 4x4 quotient of the distance partition from a small-side vertex,
    /// cell sizes `(1, 4n-1, 4n-1, 4n-1)`.
    pub small_side_quotient: QuotientMatrix,
    /// Full spectrum: `{sqrt(8n^2-2n)^1, sqrt(2n)^(4n-1), 0^(4n-2),
    /// -sqrt(2n)^(4n-1), -sqrt(8n^2-2n)^1}`.
    pub spectrum: Spectrum<S>,
    /// Closed-form crossed multiplicities from a large-side vertex, by
    /// distance 0..=4.
    pub large_side_table: CrossedMultiplicityTable<S>,
    /// Closed-form crossed multiplicities from a small-side vertex, by
    /// distance 0..=3.
    pub small_side_table: CrossedMultiplicityTable<S>,
}

pub fn hadamard_quotients<S: Scalar>(n: usize) -> Result<HadamardQuotients<S>> {
    if n < 1 {
        return Err(Error::InvalidArgument("Hadamard parameter must be >= 1".to_string()));
    }
    let ni = n as i64;
    let large_side_quotient = QuotientMatrix::new(
        Mat::from_rows(&[
            vec![0, 2 * ni, 0, 0, 0],
            vec![1, 0, 4 * ni - 2, 0, 0],
            vec![0, ni, 0, ni, 0],
            vec![0, 0, 4 * ni - 2, 0, 1],
            vec![0, 0, 0, 2 * ni, 0],
        ]),
        vec![1, 2 * n, 8 * n - 4, 2 * n, 1],
    )?;
    let small_side_quotient = QuotientMatrix::new(
        Mat::from_rows(&[
            vec![0, 4 * ni - 1, 0, 0],
            vec![1, 0, 2 * ni - 1, 0],
            vec![0, 2 * ni - 1, 0, 2 * ni],
            vec![0, 0, 2 * ni, 0],
        ]),
        vec![1, 4 * n - 1, 4 * n - 1, 4 * n - 1],
    )?;

    let nf = S::of_usize(n);
    let two = S::of(2.0);
    let theta0 = (S::of(8.0) * nf * nf - two * nf).sqrt();
    let theta1 = (two * nf).sqrt();
    let spectrum = Spectrum::new(vec![
        (theta0, 1),
        (theta1, 4 * n - 1),
        (S::zero(), 4 * n - 2),
        (-theta1, 4 * n - 1),
        (-theta0, 1),
    ])?;

    // closed-form table entries as functions of n
    let s2 = two.sqrt();
    let a = (S::of(16.0) * nf - S::of(4.0)).recip(); // 1/(16n-4)
    let b = s2 / (S::of(8.0) * (S::of(4.0) * nf * nf - nf).sqrt()); // sqrt2/(8 sqrt(4n^2-n))
    let c = s2 / (S::of(8.0) * nf.sqrt()); // sqrt2/(8 sqrt n)
    let q = S::of(0.25);
    let e = (two * nf - S::one()) / (S::of(4.0) * nf - S::one()); // (2n-1)/(4n-1)
    let f = (S::of(8.0) * nf - two).recip(); // 1/(8n-2)
    let large_rows = vec![
        vec![a, b, a, b, a],
        vec![q, c, S::zero(), -c, -q],
        vec![e, S::zero(), -f, S::zero(), e],
        vec![q, -c, S::zero(), c, -q],
        vec![a, -b, a, -b, a],
    ];

    let h = (S::of(8.0) * nf).recip(); // 1/(8n)
    let w = (S::of(4.0) * nf - S::one()) / (S::of(8.0) * nf); // (4n-1)/(8n)
    let small_rows = vec![
        vec![h, b, h, b],
        vec![w, c, -h, -c],
        vec![S::zero(), S::zero(), S::zero(), S::zero()],
        vec![w, -c, -h, c],
        vec![h, -b, h, -b],
    ];

    let large_side_table = CrossedMultiplicityTable::from_parts(
        spectrum.values(),
        large_side_quotient.cell_sizes().to_vec(),
        Mat::from_rows(&large_rows),
    );
    let small_side_table = CrossedMultiplicityTable::from_parts(
        spectrum.values(),
        small_side_quotient.cell_sizes().to_vec(),
        Mat::from_rows(&small_rows),
    );

    Ok(HadamardQuotients {
        n,
        large_side_quotient,
        small_side_quotient,
        spectrum,
        large_side_table,
        small_side_table,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{distances_from, is_connected, is_regular, walk_counts};
    use crate::localspec::local_spectrum;
    use crate::partition::{distance_partition, quotient_matrix, vertex_partition};
    use crate::spectra::adjacency_eigen;

    const TOL: f64 = 1e-9;

    fn assert_close(a: f64, b: f64, eps: f64) {
        assert!((a - b).abs() <= eps, "{a} vs {b}");
    }

    #[test]
    fn basic_constructors() {
        let c4 = cycle(4).unwrap();
        assert_eq!((c4.order(), c4.size()), (4, 4));
        assert!(cycle(2).is_err());

        let k5 = complete(5).unwrap();
        assert_eq!((k5.order(), k5.size()), (5, 10));

        let k33 = complete_bipartite(3, 3).unwrap();
        assert_eq!((k33.order(), k33.size()), (6, 9));
        assert_eq!(is_regular(&k33), Some(3));
        assert!(complete_bipartite(0, 3).is_err());

        assert!(hypercube(0).is_err());
    }

    #[test]
    fn petersen_shape() {
        let g = petersen();
        assert_eq!((g.order(), g.size()), (10, 15));
        assert_eq!(is_regular(&g), Some(3));
        assert!(is_connected(&g));
        // girth 5: no closed 3-walks, and closed 4-walks are exactly the
        // degenerate ones (2*sum(deg^2) - 2|E| = 150)
        assert_eq!(walk_counts(&g, 3).unwrap().entries().trace(), 0);
        assert_eq!(walk_counts(&g, 4).unwrap().entries().trace(), 150);
        assert!(walk_counts(&g, 5).unwrap().entries().trace() > 0);
        // distance partition from any vertex has cells (1, 3, 6)
        let p = distance_partition(&g, 0).unwrap();
        assert_eq!(p.cell_sizes(), vec![1, 3, 6]);
    }

    #[test]
    fn hypercube_spectrum() {
        let g = hypercube(3).unwrap();
        assert_eq!(g.order(), 8);
        let (_, s) = adjacency_eigen::<f64>(&g, TOL).unwrap();
        let expected = [(3.0, 1), (1.0, 3), (-1.0, 3), (-3.0, 1)];
        assert_eq!(s.len(), expected.len());
        for (i, (v, m)) in expected.into_iter().enumerate() {
            assert_close(s.value(i), v, 1e-9);
            assert_eq!(s.multiplicity(i), m);
        }
    }

    #[test]
    fn cone_shapes() {
        // cone(C4) is the wheel W4
        let w4 = cone(&cycle(4).unwrap());
        assert_eq!((w4.order(), w4.size()), (5, 8));
        assert_eq!(w4.degree(4), 4);
        // cone(K_{n-1}) = K_n
        assert_eq!(cone(&complete(3).unwrap()), complete(4).unwrap());
    }

    #[test]
    fn cone_closed_form_values() {
        // n=5, k=2: theta_0 = 1 + sqrt(6), m = (1 - 1/sqrt(6))/2
        let cf = cone_closed_form::<f64>(5, 2).unwrap();
        assert_close(cf.eigenvalues[0], 1.0 + 6.0f64.sqrt(), 1e-12);
        assert_close(cf.apex_multiplicities[0], 0.5 * (1.0 - 1.0 / 6.0f64.sqrt()), 1e-12);
        assert_close(cf.apex_multiplicities[0] + cf.apex_multiplicities[1], 1.0, 1e-12);

        // n=1, k=0 is K2
        let cf = cone_closed_form::<f64>(1, 0).unwrap();
        assert_close(cf.eigenvalues[0], 1.0, 1e-12);
        assert_close(cf.eigenvalues[1], -1.0, 1e-12);
        assert_close(cf.apex_multiplicities[0], 0.5, 1e-12);

        // n=4, k=3: apex of K5
        let cf = cone_closed_form::<f64>(4, 3).unwrap();
        assert_close(cf.eigenvalues[0], 4.0, 1e-12);
        assert_close(cf.apex_multiplicities[0], 0.2, 1e-12);

        assert!(cone_closed_form::<f64>(3, 3).is_err());
    }

    #[test]
    fn cone_apex_matches_closed_form() {
        let c5 = cycle(5).unwrap();
        let apex = c5.order();
        let ls = local_spectrum::<f64>(&cone(&c5), apex, TOL).unwrap();
        let cf = cone_closed_form::<f64>(5, 2).unwrap();
        assert_eq!(ls.entries().len(), 2);
        for i in 0..2 {
            assert_close(ls.entries()[i].0, cf.eigenvalues[i], 1e-8);
            assert_close(ls.entries()[i].1, cf.apex_multiplicities[i], 1e-8);
        }
    }

    #[test]
    fn cone_apex_partition_gives_the_two_cell_quotient() {
        // the partition ({apex}, base) of a cone over a k-regular graph is
        // equitable with quotient [[0, n], [1, k]]
        for (base, n, k) in
            [(cycle(5).unwrap(), 5usize, 2usize), (complete(4).unwrap(), 4, 3), (petersen(), 10, 3)]
        {
            let coned = cone(&base);
            let q = quotient_matrix(&coned, &vertex_partition(&coned, n).unwrap()).unwrap();
            assert_eq!(q, cone_quotient(n, k).unwrap());
        }
    }

    #[test]
    fn cone_quotient_squares_symbolically() {
        // [[0,n],[1,k]]^2 = [[n, nk], [k, n + k^2]]
        use crate::partition::quotient_walk_counts;
        for (n, k) in [(3i64, 1i64), (5, 2), (9, 4)] {
            let q = cone_quotient(n as usize, k as usize).unwrap();
            let squared = quotient_walk_counts(&q, 2).unwrap();
            assert_eq!(squared, Mat::from_rows(&[vec![n, n * k], vec![k, n + k * k]]));
        }
    }

    #[test]
    fn subdivided_complete_small_cases() {
        // r=2 is the path on three vertices
        let p3 = subdivided_complete(2).unwrap();
        assert_eq!((p3.order(), p3.size()), (3, 2));
        assert_eq!(p3.degree(2), 2);

        // r=3 is the hexagon
        let c6 = subdivided_complete(3).unwrap();
        assert_eq!((c6.order(), c6.size()), (6, 6));
        assert_eq!(is_regular(&c6), Some(2));
        assert!(is_connected(&c6));

        assert!(subdivided_complete(1).is_err());
    }

    #[test]
    fn subdivided_k4_shape() {
        let g = subdivided_complete(4).unwrap();
        assert_eq!((g.order(), g.size()), (10, 12));
        // degree sequence (3^4, 2^6): branch vertices then subdivision
        let mut degrees: Vec<usize> = (0..10).map(|v| g.degree(v)).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![2, 2, 2, 2, 2, 2, 3, 3, 3, 3]);
        // distance partitions: 4 cells from a branch vertex, 5 from a
        // subdivision vertex
        assert_eq!(distance_partition(&g, 0).unwrap().cell_sizes(), vec![1, 3, 3, 3]);
        assert_eq!(distance_partition(&g, 4).unwrap().cell_sizes(), vec![1, 2, 4, 2, 1]);
        assert_eq!(distances_from(&g, 4).unwrap().iter().max(), Some(&4));
    }

    #[test]
    fn quotients_match_hadamard_data_at_n1() {
        let g = subdivided_complete(4).unwrap();
        let hq = hadamard_quotients::<f64>(1).unwrap();
        // subdivision vertex (degree 2) -> 5-cell quotient
        let q = quotient_matrix(&g, &vertex_partition(&g, 4).unwrap()).unwrap();
        assert_eq!(q, hq.large_side_quotient);
        // branch vertex (degree 3) -> 4-cell quotient
        let q = quotient_matrix(&g, &vertex_partition(&g, 0).unwrap()).unwrap();
        assert_eq!(q, hq.small_side_quotient);
        // both refinements stabilize at the distance partitions
        assert_eq!(vertex_partition(&g, 4).unwrap(), distance_partition(&g, 4).unwrap());
        assert_eq!(vertex_partition(&g, 0).unwrap(), distance_partition(&g, 0).unwrap());
        // the same holds on the Petersen graph (distance-regular)
        let p = petersen();
        assert_eq!(vertex_partition(&p, 0).unwrap(), distance_partition(&p, 0).unwrap());
    }

    #[test]
    fn small_side_eigenvalues_drop_zero() {
        // ev(B2) = ev(B1) minus the zero eigenvalue, for every n, and the
        // 5-cell quotient carries the whole closed-form eigenvalue list
        use crate::spectra::quotient_eigen;
        for n in 1..=3usize {
            let hq = hadamard_quotients::<f64>(n).unwrap();
            let large = quotient_eigen::<f64>(&hq.large_side_quotient, TOL).unwrap();
            let small = quotient_eigen::<f64>(&hq.small_side_quotient, TOL).unwrap();
            assert_eq!(large.spectrum().len(), 5);
            assert_eq!(small.spectrum().len(), 4);
            for i in 0..5 {
                assert_close(large.spectrum().value(i), hq.spectrum.value(i), 1e-9);
            }
            let kept: Vec<f64> =
                large.spectrum().values().into_iter().filter(|v| v.abs() > 1e-9).collect();
            for (a, b) in kept.iter().zip(small.spectrum().values()) {
                assert_close(*a, b, 1e-9);
            }
        }
    }

    #[test]
    fn hadamard_table_entries_at_n1() {
        let hq = hadamard_quotients::<f64>(1).unwrap();
        let t1 = &hq.large_side_table;
        assert_close(t1.entry(0, 0), 1.0 / 12.0, 1e-15);
        assert_close(t1.entry(0, 1), 2.0f64.sqrt() / (8.0 * 3.0f64.sqrt()), 1e-15);
        assert_close(t1.entry(2, 2), -1.0 / 6.0, 1e-15);
        assert_close(t1.entry(1, 4), -0.25, 1e-15);
        let t2 = &hq.small_side_table;
        assert_close(t2.entry(0, 0), 1.0 / 8.0, 1e-15);
        assert_close(t2.entry(1, 0), 3.0 / 8.0, 1e-15);
        for j in 0..4 {
            assert_close(t2.entry(2, j), 0.0, 1e-15);
        }
        // sum rows: 1 over the base cell, 0 elsewhere
        for table in [t1, t2] {
            let sums = table.column_sums();
            assert_close(sums[0], 1.0, 1e-12);
            for &s in &sums[1..] {
                assert_close(s, 0.0, 1e-12);
            }
        }
    }

    #[test]
    fn hadamard_multiplicity_sums() {
        for n in 1..=5usize {
            let hq = hadamard_quotients::<f64>(n).unwrap();
            assert_eq!(hq.spectrum.dimension(), 12 * n - 2);
            // weighted column-0 sums reproduce the closed-form multiplicities
            let large = (8 * n - 2) as f64;
            let small = (4 * n) as f64;
            for i in 0..5 {
                let total = large * hq.large_side_table.entry(i, 0)
                    + small * hq.small_side_table.entry(i, 0);
                assert_close(total, hq.spectrum.multiplicity(i) as f64, 1e-9);
            }
        }
        assert!(hadamard_quotients::<f64>(0).is_err());
    }

    #[test]
    fn hadamard_n2_spectrum() {
        let hq = hadamard_quotients::<f64>(2).unwrap();
        assert_close(hq.spectrum.value(0), 28.0f64.sqrt(), 1e-12);
        assert_close(hq.spectrum.value(1), 2.0, 1e-12);
        let mults: Vec<usize> = (0..5).map(|i| hq.spectrum.multiplicity(i)).collect();
        assert_eq!(mults, vec![1, 7, 6, 7, 1]);
    }
}
