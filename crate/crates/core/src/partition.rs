//! Vertex partitions, equitability testing, coarsest equitable refinement,
//! and quotient-matrix extraction.
//!
//! A partition is *equitable* (also called regular) when the number of
//! neighbours a vertex of cell `i` has in cell `j` depends only on `(i, j)`.
//! Those counts form the quotient matrix `B`, which satisfies `A*S = S*B`
//! for the 0/1 characteristic matrix `S` of the partition.

use std::collections::BTreeMap;

use crate::error::{EquitabilityWitness, Error, Result};
use crate::graph::{distances_from, Graph};
use crate::matrix::Mat;

/// Ordered partition of `0..n` into disjoint nonempty cells.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Partition {
    cells: Vec<Vec<usize>>,
    cell_of: Vec<usize>,
}

impl Partition {
    /// Validates that `cells` are disjoint, nonempty, and cover `0..order`.
    pub fn new(cells: Vec<Vec<usize>>, order: usize) -> Result<Partition> {
        let fail = |reason: String| Err(Error::InvalidPartition { reason });
        let mut cell_of = vec![usize::MAX; order];
        for (idx, cell) in cells.iter().enumerate() {
            if cell.is_empty() {
                return fail(format!("cell {idx} is empty"));
            }
            for &v in cell {
                if v >= order {
                    return fail(format!("vertex {v} out of range (order {order})"));
                }
                if cell_of[v] != usize::MAX {
                    return fail(format!("vertex {v} appears in two cells"));
                }
                cell_of[v] = idx;
            }
        }
        if let Some(v) = cell_of.iter().position(|&c| c == usize::MAX) {
            return fail(format!("vertex {v} is not in any cell"));
        }
        let cells = cells
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        Ok(Partition { cells, cell_of })
    }

    pub fn single_cell(order: usize) -> Partition {
        let cells = if order == 0 { Vec::new() } else { vec![(0..order).collect()] };
        Partition::new(cells, order).expect("valid single-cell partition")
    }

    pub fn num_cells(&self) -> usize {
        self.cells.len()
    }

    pub fn order(&self) -> usize {
        self.cell_of.len()
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn cell(&self, i: usize) -> &[usize] {
        &self.cells[i]
    }

    pub fn cell_of(&self, v: usize) -> usize {
        self.cell_of[v]
    }

    pub fn cell_sizes(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    /// True iff every cell of `self` is contained in one cell of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        self.order() == other.order()
            && self
                .cells
                .iter()
                .all(|cell| cell.iter().all(|&v| other.cell_of(v) == other.cell_of(cell[0])))
    }
}

/// Parses the partition file format: one cell per line, comma-separated
/// vertex ids, `#` starts a comment.
pub fn parse_partition(text: &str, order: usize) -> Result<Partition> {
    let mut cells = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        if line.trim().is_empty() {
            continue;
        }
        let cell = line
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::BadToken { line: line_no, token: tok.trim().to_string() })
            })
            .collect::<Result<Vec<_>>>()?;
        cells.push(cell);
    }
    Partition::new(cells, order)
}

/// Partition of the vertices by distance from `u`; cell `i` holds the
/// vertices at distance exactly `i`. Errors when the graph is disconnected.
pub fn distance_partition(g: &Graph, u: usize) -> Result<Partition> {
    let dist = distances_from(g, u)?;
    let ecc = dist.iter().copied().max().unwrap_or(0);
    let mut cells = vec![Vec::new(); ecc + 1];
    for (v, &d) in dist.iter().enumerate() {
        cells[d].push(v);
    }
    Partition::new(cells, g.order())
}

/// Checks equitability; on failure returns a witness naming two vertices of
/// the same cell with different neighbour counts in some cell.
pub fn equitable_witness(g: &Graph, partition: &Partition) -> Option<EquitabilityWitness> {
    let count_row = |v: usize| {
        let mut row = vec![0usize; partition.num_cells()];
        for &w in g.neighbors(v) {
            row[partition.cell_of(w)] += 1;
        }
        row
    };
    for (idx, cell) in partition.cells().iter().enumerate() {
        let reference = count_row(cell[0]);
        for &v in &cell[1..] {
            let row = count_row(v);
            if row != reference {
                let against = (0..row.len()).find(|&j| row[j] != reference[j]).unwrap();
                return Some(EquitabilityWitness {
                    cell: idx,
                    against,
                    vertex_a: cell[0],
                    vertex_b: v,
                    count_a: reference[against],
                    count_b: row[against],
                });
            }
        }
    }
    None
}

pub fn is_equitable(g: &Graph, partition: &Partition) -> bool {
    equitable_witness(g, partition).is_none()
}

/// Quotient matrix of an equitable partition: `entry(i, j)` is the number of
/// neighbours in cell `j` of any vertex of cell `i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuotientMatrix {
    matrix: Mat<i64>,
    cell_sizes: Vec<usize>,
}

impl QuotientMatrix {
    /// Validates the edge-counting identity `|V_i|*b_ij = |V_j|*b_ji` and
    /// entry nonnegativity.
    pub fn new(matrix: Mat<i64>, cell_sizes: Vec<usize>) -> Result<QuotientMatrix> {
        let fail = |reason: String| Err(Error::InvalidQuotient { reason });
        let m = cell_sizes.len();
        if matrix.rows() != m || matrix.cols() != m {
            return fail(format!(
                "matrix is {}x{} but there are {m} cell sizes",
                matrix.rows(),
                matrix.cols()
            ));
        }
        if cell_sizes.contains(&0) {
            return fail("cell sizes must be positive".to_string());
        }
        for i in 0..m {
            for j in 0..m {
                if matrix[(i, j)] < 0 {
                    return fail(format!("negative entry at ({i},{j})"));
                }
                let lhs = cell_sizes[i] as i64 * matrix[(i, j)];
                let rhs = cell_sizes[j] as i64 * matrix[(j, i)];
                if lhs != rhs {
                    return fail(format!(
                        "edge counts between cells {i} and {j} disagree: {lhs} vs {rhs}"
                    ));
                }
            }
        }
        Ok(QuotientMatrix { matrix, cell_sizes })
    }

    pub fn matrix(&self) -> &Mat<i64> {
        &self.matrix
    }

    pub fn cell_sizes(&self) -> &[usize] {
        &self.cell_sizes
    }

    /// Number of cells.
    pub fn num_cells(&self) -> usize {
        self.cell_sizes.len()
    }

    /// Total number of vertices of the underlying graph.
    pub fn total_vertices(&self) -> usize {
        self.cell_sizes.iter().sum()
    }

    pub fn is_tridiagonal(&self) -> Result<()> {
        let m = self.num_cells();
        for i in 0..m {
            for j in 0..m {
                if i.abs_diff(j) > 1 && self.matrix[(i, j)] != 0 {
                    return Err(Error::NotTridiagonal { i, j });
                }
            }
        }
        Ok(())
    }
}

/// Extracts the quotient matrix; errors with the equitability witness when
/// the partition is not equitable.
pub fn quotient_matrix(g: &Graph, partition: &Partition) -> Result<QuotientMatrix> {
    if let Some(witness) = equitable_witness(g, partition) {
        return Err(Error::NotEquitable(witness));
    }
    let m = partition.num_cells();
    let mut matrix = Mat::zeros(m, m);
    for (i, cell) in partition.cells().iter().enumerate() {
        let representative = cell[0];
        for &w in g.neighbors(representative) {
            matrix[(i, partition.cell_of(w))] += 1;
        }
    }
    QuotientMatrix::new(matrix, partition.cell_sizes())
}

/// The n x m 0/1 matrix whose column `i` is the indicator of cell `i`.
pub fn characteristic_matrix(partition: &Partition) -> Mat<i64> {
    Mat::from_fn(partition.order(), partition.num_cells(), |v, i| {
        i64::from(partition.cell_of(v) == i)
    })
}

/// Exact integer check of `A*S = S*B`.
pub fn verify_commutation(g: &Graph, partition: &Partition, quotient: &Mat<i64>) -> Result<bool> {
    if partition.order() != g.order() {
        return Err(Error::DimensionMismatch {
            context: format!(
                "partition covers {} vertices, graph has {}",
                partition.order(),
                g.order()
            ),
        });
    }
    if quotient.rows() != partition.num_cells() || quotient.cols() != partition.num_cells() {
        return Err(Error::DimensionMismatch {
            context: format!(
                "quotient is {}x{} but the partition has {} cells",
                quotient.rows(),
                quotient.cols(),
                partition.num_cells()
            ),
        });
    }
    let s = characteristic_matrix(partition);
    Ok(g.adjacency().checked_matmul(&s)? == s.checked_matmul(quotient)?)
}

/// Coarsest equitable refinement of `seed` by colour refinement: cells are
/// repeatedly split by their vector of neighbour counts against all current
/// cells until stable.
///
/// Cell order is deterministic: descendants of earlier seed cells come
/// first, ties broken by decreasing lexicographic order of the count
/// signatures, so vertices adjacent to earlier cells precede the rest. On a
/// distance-regular graph seeded with `({u}, rest)` this reproduces the
/// distance ordering.
pub fn coarsest_equitable_refinement(g: &Graph, seed: &Partition) -> Partition {
    assert_eq!(seed.order(), g.order(), "seed must cover the graph");
    let n = g.order();
    if n == 0 {
        return seed.clone();
    }
    let mut cell_of: Vec<usize> = (0..n).map(|v| seed.cell_of(v)).collect();
    let mut num_cells = seed.num_cells();

    loop {
        let signature = |v: usize| {
            let mut counts = vec![0usize; num_cells];
            for &w in g.neighbors(v) {
                counts[cell_of[w]] += 1;
            }
            counts
        };
        let signatures: Vec<Vec<usize>> = (0..n).map(signature).collect();

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| {
            cell_of[a].cmp(&cell_of[b]).then_with(|| signatures[b].cmp(&signatures[a]))
        });

        let mut new_cell_of = vec![0usize; n];
        let mut new_num = 0usize;
        for (pos, &v) in order.iter().enumerate() {
            if pos > 0 {
                let prev = order[pos - 1];
                if (cell_of[prev], &signatures[prev]) != (cell_of[v], &signatures[v]) {
                    new_num += 1;
                }
            }
            new_cell_of[v] = new_num;
        }
        new_num += 1;

        if new_num == num_cells {
            // no cell split this round: stable
            let mut cells = vec![Vec::new(); num_cells];
            for v in 0..n {
                cells[cell_of[v]].push(v);
            }
            return Partition::new(cells, n).expect("refinement preserves validity");
        }
        cell_of = new_cell_of;
        num_cells = new_num;
    }
}

/// Coarsest equitable partition whose first cell is the singleton `{u}`:
/// the refinement of the seed `({u}, V \ {u})`, with cells ordered by
/// distance from `u`.
///
/// Each cell of an equitable partition with a singleton base lies at one
/// constant distance from the base (the walk counts from `u` are constant
/// on cells, and they determine the distance), so the distance ordering is
/// well defined; ties keep the refinement order. On a distance-regular
/// graph the result is exactly the distance partition.
pub fn vertex_partition(g: &Graph, u: usize) -> Result<Partition> {
    g.check_vertex(u)?;
    let dist = distances_from(g, u)?;
    let rest: Vec<usize> = (0..g.order()).filter(|&v| v != u).collect();
    let seed = if rest.is_empty() {
        Partition::new(vec![vec![u]], g.order())?
    } else {
        Partition::new(vec![vec![u], rest], g.order())?
    };
    let refined = coarsest_equitable_refinement(g, &seed);
    let mut cells = refined.cells().to_vec();
    cells.sort_by_key(|cell| dist[cell[0]]);
    Partition::new(cells, g.order())
}

/// Exact integer power `B^length` of a quotient matrix. By the quotient walk
/// identity, `(B^length)[0][j]` is `|V_j|` times the vertex-level walk count
/// into cell `j` when cell 0 is a singleton.
pub fn quotient_walk_counts(quotient: &QuotientMatrix, length: usize) -> Result<Mat<i64>> {
    quotient.matrix().checked_pow(length).map_err(|_| Error::WalkCountOverflow { length })
}

/// Groups vertices by the quotient matrix of their vertex partition; used to
/// skip duplicate local-spectrum work. Returns `(quotient, member count)`
/// pairs in a deterministic order.
pub fn vertex_quotient_classes(g: &Graph) -> Result<Vec<(QuotientMatrix, usize)>> {
    let mut classes: BTreeMap<(Vec<i64>, Vec<usize>), (QuotientMatrix, usize)> = BTreeMap::new();
    for u in 0..g.order() {
        let partition = vertex_partition(g, u)?;
        let quotient = quotient_matrix(g, &partition)?;
        let key = (quotient.matrix().data().to_vec(), quotient.cell_sizes().to_vec());
        classes.entry(key).and_modify(|(_, count)| *count += 1).or_insert((quotient, 1));
    }
    Ok(classes.into_values().collect())
}
