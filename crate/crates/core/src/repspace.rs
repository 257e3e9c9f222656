//! Filtrations by coordinate subspaces, the sparsity patterns they induce on
//! representation spaces, and general (symbolic) and concrete representations.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::{Polynomial, Rational, SymbolicMatrix, Variable};
use crate::quiver::Quiver;

/// A chain `gamma^1 <= ... <= gamma^N = beta` of coordinate subspace
/// dimensions at every vertex. `levels[k][v]` is `gamma^{k+1}_v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Filtration {
    levels: Vec<Vec<usize>>,
}

impl Filtration {
    pub fn new(levels: Vec<Vec<usize>>) -> Result<Self> {
        let Some(last) = levels.last() else {
            return Err(Error::InvalidFiltration("no levels".into()));
        };
        let p = last.len();
        if levels.iter().any(|l| l.len() != p) {
            return Err(Error::InvalidFiltration("levels of different lengths".into()));
        }
        for v in 0..p {
            for k in 1..levels.len() {
                if levels[k - 1][v] > levels[k][v] {
                    return Err(Error::InvalidFiltration(format!(
                        "not monotone at vertex index {v}, level {}",
                        k + 1
                    )));
                }
            }
        }
        Ok(Filtration { levels })
    }

    /// The one-step filtration `beta` (the unfiltered setting).
    pub fn trivial(beta: &[usize]) -> Self {
        Filtration {
            levels: vec![beta.to_vec()],
        }
    }

    /// `gamma^k_v = min(k, beta_v)` for `k = 1..max beta`; framed vertices of
    /// `q` get `0, ..., 0, beta_v` so that arrows out of them are unconstrained.
    pub fn complete_standard(q: &Quiver, beta: &[usize]) -> Self {
        let n = beta.iter().copied().max().unwrap_or(0).max(1);
        let levels = (1..=n)
            .map(|k| {
                beta.iter()
                    .enumerate()
                    .map(|(v, &b)| {
                        if q.is_framed(v) {
                            if k == n {
                                b
                            } else {
                                0
                            }
                        } else {
                            k.min(b)
                        }
                    })
                    .collect()
            })
            .collect();
        Filtration { levels }
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn beta(&self) -> &[usize] {
        self.levels.last().expect("at least one level")
    }

    /// `gamma^k_v` with `k` 1-based; `gamma^0 = 0`.
    pub fn gamma(&self, k: usize, v: usize) -> usize {
        if k == 0 {
            0
        } else {
            self.levels[k - 1][v]
        }
    }

    pub fn levels(&self) -> &[Vec<usize>] {
        &self.levels
    }

    /// The chain at one vertex.
    pub fn chain(&self, v: usize) -> Vec<usize> {
        self.levels.iter().map(|l| l[v]).collect()
    }

    /// Entry `(r, c)` (0-based) of a map `tail -> head` is allowed iff for all
    /// levels `c < gamma^k_tail` implies `r < gamma^k_head`.
    pub fn allows(&self, tail: usize, head: usize, r: usize, c: usize) -> bool {
        self.levels.iter().all(|l| c >= l[tail] || r < l[head])
    }
}

/// Which entries of a `rows x cols` matrix may be nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SparsityPattern {
    pub rows: usize,
    pub cols: usize,
    cells: Vec<bool>,
}

impl SparsityPattern {
    pub fn full(rows: usize, cols: usize) -> Self {
        SparsityPattern {
            rows,
            cols,
            cells: vec![true; rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut cells = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                cells.push(f(r, c));
            }
        }
        SparsityPattern { rows, cols, cells }
    }

    /// 0-based lookup.
    pub fn allows(&self, r: usize, c: usize) -> bool {
        self.cells[r * self.cols + c]
    }

    pub fn count(&self) -> usize {
        self.cells.iter().filter(|b| **b).count()
    }

    pub fn transpose(&self) -> Self {
        SparsityPattern::from_fn(self.cols, self.rows, |r, c| self.allows(c, r))
    }

    /// Allowed cells as 1-based `(row, col)` pairs.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.allows(r, c) {
                    out.push((r + 1, c + 1));
                }
            }
        }
        out
    }

    pub fn respected_by(&self, m: &Matrix<Rational>) -> bool {
        m.rows() == self.rows
            && m.cols() == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| self.allows(r, c) || num_traits::Zero::is_zero(m.get(r, c)))
            })
    }
}

fn check_beta(q: &Quiver, beta: &[usize]) -> Result<()> {
    if beta.len() != q.vertex_count() {
        return Err(Error::LengthMismatch {
            expected: q.vertex_count(),
            got: beta.len(),
        });
    }
    Ok(())
}

/// Pattern of `W(a)` for arrow index `a` preserving the filtration.
pub fn filtered_pattern(q: &Quiver, f: &Filtration, a: usize) -> SparsityPattern {
    let arrow = q.arrow(a);
    let beta = f.beta();
    SparsityPattern::from_fn(beta[arrow.head], beta[arrow.tail], |r, c| {
        f.allows(arrow.tail, arrow.head, r, c)
    })
}

/// The transpose pattern, modelling the dual of a filtered representation
/// space through the trace pairing.
pub fn dual_pattern(q: &Quiver, f: &Filtration, a: usize) -> SparsityPattern {
    filtered_pattern(q, f, a).transpose()
}

/// The pattern of the parabolic subalgebra at vertex `v`.
pub fn parabolic_pattern(f: &Filtration, v: usize) -> SparsityPattern {
    let n = f.beta()[v];
    SparsityPattern::from_fn(n, n, |r, c| f.allows(v, v, r, c))
}

/// Rank of the fiber of the quiver Grassmannian projection:
/// `sum_{a: i -> j} (beta_i beta_j + gamma_i gamma_j - beta_j gamma_i)`.
pub fn grassmannian_fiber_rank(q: &Quiver, beta: &[usize], gamma: &[usize]) -> Result<usize> {
    check_beta(q, beta)?;
    check_beta(q, gamma)?;
    if let Some(v) = (0..beta.len()).find(|&v| gamma[v] > beta[v]) {
        return Err(Error::SubdimensionTooLarge(v));
    }
    Ok(q.arrows()
        .iter()
        .map(|a| {
            let (bi, bj, gi, gj) = (beta[a.tail], beta[a.head], gamma[a.tail], gamma[a.head]);
            bi * bj + gi * gj - bj * gi
        })
        .sum())
}

/// Dimension of the product of Grassmannians, `sum_k gamma_k (beta_k - gamma_k)`.
pub fn grassmannian_dim(beta: &[usize], gamma: &[usize]) -> Result<usize> {
    if beta.len() != gamma.len() {
        return Err(Error::LengthMismatch {
            expected: beta.len(),
            got: gamma.len(),
        });
    }
    if let Some(v) = (0..beta.len()).find(|&v| gamma[v] > beta[v]) {
        return Err(Error::SubdimensionTooLarge(v));
    }
    Ok(beta.iter().zip(gamma).map(|(b, g)| g * (b - g)).sum())
}

/// Arrow-indexed symbolic matrices whose allowed entries are fresh variables
/// `{arrow id}[r,c]`.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneralRep {
    pub quiver: Quiver,
    pub beta: Vec<usize>,
    pub filtration: Option<Filtration>,
    pub matrices: Vec<SymbolicMatrix>,
}

impl GeneralRep {
    /// General representation of `F•Rep(Q, beta)`, or of `Rep(Q, beta)` when
    /// no filtration is given. Arrows out of framed vertices are full.
    pub fn new(q: &Quiver, beta: &[usize], f: Option<&Filtration>) -> Result<Self> {
        check_beta(q, beta)?;
        if let Some(f) = f {
            if f.beta() != beta {
                return Err(Error::InvalidFiltration("final level differs from beta".into()));
            }
        }
        let matrices = (0..q.arrows().len())
            .map(|k| {
                let a = q.arrow(k);
                let pattern = match f {
                    Some(f) if !q.is_framed(a.tail) => filtered_pattern(q, f, k),
                    _ => SparsityPattern::full(beta[a.head], beta[a.tail]),
                };
                crate::poly::general_matrix(&a.id, pattern.rows, pattern.cols, |r, c| {
                    pattern.allows(r, c)
                })
            })
            .collect();
        Ok(GeneralRep {
            quiver: q.clone(),
            beta: beta.to_vec(),
            filtration: f.cloned(),
            matrices,
        })
    }

    /// All entry variables, in arrow order then row-major.
    pub fn variables(&self) -> Vec<Variable> {
        let mut out = Vec::new();
        for m in &self.matrices {
            for e in m.entries() {
                out.extend(e.variables());
            }
        }
        out
    }

    pub fn variable_set(&self) -> BTreeSet<Variable> {
        self.variables().into_iter().collect()
    }

    /// Variables on the diagonals of loop-free square blocks, i.e. the
    /// entries `(k, k)` of every arrow matrix.
    pub fn diagonal_variables(&self) -> Vec<Variable> {
        self.variables()
            .into_iter()
            .filter(|v| matches!(v, Variable::Entry { row, col, .. } if row == col))
            .collect()
    }

    /// Locates a variable: `(arrow index, 0-based row, 0-based col)`.
    pub fn locate(&self, v: &Variable) -> Option<(usize, usize, usize)> {
        let Variable::Entry { id, row, col } = v else {
            return None;
        };
        let k = self.quiver.arrow_index(id)?;
        let m = &self.matrices[k];
        if *row == 0 || *col == 0 || *row > m.rows() || *col > m.cols() {
            return None;
        }
        if m.get(row - 1, col - 1) == &Polynomial::var(v.clone()) {
            Some((k, row - 1, col - 1))
        } else {
            None
        }
    }

    /// The product `W(a_k) ... W(a_1)` along arrows given in traversal order.
    pub fn path_product(&self, arrows: &[usize]) -> Result<SymbolicMatrix> {
        let path = self
            .quiver
            .path(arrows)
            .ok_or_else(|| Error::Invalid("arrows do not form a path".into()))?;
        let mut acc = self.matrices[path.arrows[0]].clone();
        for &k in &path.arrows[1..] {
            acc = self.matrices[k].try_mul(&acc)?;
        }
        Ok(acc)
    }
}

/// Arrow-indexed rational matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConcreteRep {
    pub quiver: Quiver,
    pub beta: Vec<usize>,
    pub maps: Vec<Matrix<Rational>>,
}

impl ConcreteRep {
    pub fn new(q: &Quiver, beta: &[usize], maps: Vec<Matrix<Rational>>) -> Result<Self> {
        check_beta(q, beta)?;
        if maps.len() != q.arrows().len() {
            return Err(Error::Shape(format!(
                "{} maps for {} arrows",
                maps.len(),
                q.arrows().len()
            )));
        }
        for (k, m) in maps.iter().enumerate() {
            let a = q.arrow(k);
            if m.rows() != beta[a.head] || m.cols() != beta[a.tail] {
                return Err(Error::Shape(format!(
                    "arrow {} needs a {}x{} matrix, got {}x{}",
                    a.id,
                    beta[a.head],
                    beta[a.tail],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(ConcreteRep {
            quiver: q.clone(),
            beta: beta.to_vec(),
            maps,
        })
    }

    pub fn zero(q: &Quiver, beta: &[usize]) -> Result<Self> {
        let maps = q
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(beta[a.head], beta[a.tail]))
            .collect();
        ConcreteRep::new(q, beta, maps)
    }

    /// The simple representation at vertex `v`.
    pub fn simple(q: &Quiver, v: usize) -> Result<Self> {
        let mut beta = vec![0; q.vertex_count()];
        beta[v] = 1;
        ConcreteRep::zero(q, &beta)
    }

    pub fn respects(&self, f: &Filtration) -> bool {
        f.beta() == self.beta.as_slice()
            && (0..self.maps.len()).all(|k| filtered_pattern(&self.quiver, f, k).respected_by(&self.maps[k]))
    }

    pub fn total_dim(&self) -> usize {
        self.beta.iter().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::DynkinFamily;

    #[test]
    fn complete_flag_gives_upper_triangular() {
        let q = Quiver::jordan(1).unwrap();
        for n in 1..6 {
            let f = Filtration::complete_standard(&q, &[n]);
            let p = filtered_pattern(&q, &f, 0);
            assert_eq!(p.count(), n * (n + 1) / 2);
            assert!((0..n).all(|r| (0..n).all(|c| p.allows(r, c) == (r <= c))));
        }
    }

    #[test]
    fn oriented_path_example_patterns() {
        let q = Quiver::kronecker(1).unwrap().double();
        let f = Filtration::new(vec![vec![3, 1], vec![4, 3], vec![5, 4]]).unwrap();
        let a = filtered_pattern(&q, &f, 0);
        // a: vertex 1 (dim 5) -> vertex 2 (dim 4); 4x5 pattern
        let expected_a: Vec<(usize, usize)> = [
            (1..=5).map(|c| (1, c)).collect::<Vec<_>>(),
            vec![(2, 4), (2, 5), (3, 4), (3, 5)],
            vec![(4, 5)],
        ]
        .concat();
        assert_eq!(a.cells(), expected_a);
        let aop = filtered_pattern(&q, &f, 1);
        let mut expected_op: Vec<(usize, usize)> = Vec::new();
        for r in 1..=5 {
            if r <= 3 {
                expected_op.push((r, 1));
            }
            if r <= 4 {
                expected_op.extend([(r, 2), (r, 3)]);
            }
            expected_op.push((r, 4));
        }
        assert_eq!(aop.cells(), expected_op);
    }

    #[test]
    fn trivial_filtration_is_full() {
        let q = Quiver::kronecker(2).unwrap();
        let f = Filtration::trivial(&[2, 3]);
        assert_eq!(filtered_pattern(&q, &f, 1).count(), 6);
        assert_eq!(dual_pattern(&q, &f, 1).count(), 6);
    }

    #[test]
    fn dual_of_complete_flag_is_lower_triangular() {
        let q = Quiver::jordan(1).unwrap();
        let f = Filtration::complete_standard(&q, &[2]);
        assert_eq!(dual_pattern(&q, &f, 0).cells(), vec![(1, 1), (2, 1), (2, 2)]);
    }

    #[test]
    fn grassmannian_formulas() {
        let a2 = Quiver::dynkin(DynkinFamily::A, 2, None).unwrap();
        assert_eq!(grassmannian_fiber_rank(&a2, &[2, 2], &[1, 1]).unwrap(), 3);
        assert_eq!(grassmannian_fiber_rank(&a2, &[2, 3], &[2, 3]).unwrap(), 6);
        assert_eq!(grassmannian_fiber_rank(&a2, &[2, 3], &[0, 0]).unwrap(), 6);
        assert!(grassmannian_fiber_rank(&a2, &[1, 1], &[2, 0]).is_err());
        assert_eq!(grassmannian_dim(&[2], &[1]).unwrap(), 1);
        assert_eq!(grassmannian_dim(&[5, 4], &[3, 1]).unwrap(), 9);
        assert_eq!(grassmannian_dim(&[5, 4], &[5, 4]).unwrap(), 0);
    }

    #[test]
    fn general_reps() {
        let fj = Quiver::jordan(1).unwrap().framed();
        let f = Filtration::complete_standard(&fj, &[2, 2]);
        let w = GeneralRep::new(&fj, &[2, 2], Some(&f)).unwrap();
        assert_eq!(w.matrices[0].get(1, 0), &Polynomial::zero());
        assert_eq!(w.matrices[1].entries().filter(|e| !e.is_zero()).count(), 4);
        let a2 = Quiver::dynkin(DynkinFamily::A, 2, None).unwrap();
        let w = GeneralRep::new(&a2, &[1, 2], None).unwrap();
        assert_eq!((w.matrices[0].rows(), w.matrices[0].cols()), (2, 1));
        assert_eq!(w.variables().len(), 2);
        let a4 = Quiver::dynkin(DynkinFamily::A, 4, None).unwrap();
        let f = Filtration::complete_standard(&a4, &[3, 3, 3, 3]);
        let w = GeneralRep::new(&a4, &[3, 3, 3, 3], Some(&f)).unwrap();
        assert_eq!(w.matrices.len(), 3);
        assert_eq!(w.variables().len(), 18);
        assert_eq!(w.locate(&Variable::entry("a2", 1, 3)), Some((1, 0, 2)));
        assert_eq!(w.locate(&Variable::entry("a2", 3, 1)), None);
    }

    #[test]
    fn filtration_validation() {
        assert!(Filtration::new(vec![vec![2], vec![1], vec![3]]).is_err());
        assert!(Filtration::new(vec![]).is_err());
    }
}
