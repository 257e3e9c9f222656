//! Semi-invariant constructions: Derksen-Weyman determinants, Domokos-Zubkov
//! block matrices, bideterminants of products of general matrices, and the
//! bounded-degree comparison against diagonal invariants.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::action::{invariant_space, is_unipotent_invariant, InvarianceReport};
use crate::error::{Error, Result};
use crate::linalg::Ring;
use crate::poly::{determinant, general_matrix, Monomial, Polynomial, SymbolicMatrix, Variable};
use crate::quiver::{Path, Quiver};
use crate::repspace::{Filtration, GeneralRep};

/// The representation `V` of dimension `alpha` used by Derksen-Weyman.
#[derive(Clone, Debug, PartialEq)]
pub enum VSpec {
    /// Fresh variables `v{arrow id}[r,c]` in every entry.
    Generic,
    /// Explicit matrices, one per arrow, possibly containing scalar variables.
    Specialized(Vec<SymbolicMatrix>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct DwProblem {
    pub quiver: Quiver,
    pub beta: Vec<usize>,
    pub alpha: Vec<usize>,
    pub v: VSpec,
}

impl DwProblem {
    /// Requires an acyclic quiver and `<alpha, beta> = 0`.
    pub fn new(q: &Quiver, beta: &[usize], alpha: &[usize], v: VSpec) -> Result<Self> {
        if !q.is_acyclic() {
            return Err(Error::Cyclic);
        }
        let b: Vec<i64> = beta.iter().map(|&x| x as i64).collect();
        let a: Vec<i64> = alpha.iter().map(|&x| x as i64).collect();
        let e = q.euler_form(&a, &b)?;
        if e != 0 {
            return Err(Error::EulerFormNonzero(e));
        }
        if let VSpec::Specialized(ms) = &v {
            if ms.len() != q.arrows().len() {
                return Err(Error::Shape("one V matrix per arrow required".into()));
            }
            for (m, arrow) in ms.iter().zip(q.arrows()) {
                if m.rows() != alpha[arrow.head] || m.cols() != alpha[arrow.tail] {
                    return Err(Error::Shape(format!("V({}) must be {}x{}", arrow.id, alpha[arrow.head], alpha[arrow.tail])));
                }
            }
        }
        Ok(DwProblem {
            quiver: q.clone(),
            beta: beta.to_vec(),
            alpha: alpha.to_vec(),
            v,
        })
    }

    fn v_matrices(&self) -> Vec<SymbolicMatrix> {
        match &self.v {
            VSpec::Specialized(ms) => ms.clone(),
            VSpec::Generic => self
                .quiver
                .arrows()
                .iter()
                .map(|a| general_matrix(&format!("v{}", a.id), self.alpha[a.head], self.alpha[a.tail], |_, _| true))
                .collect(),
        }
    }
}

/// Matrix of `(X_i) -> (W(a) X_ta - X_ha V(a))_a`. Columns are the entries of
/// the `beta_i x alpha_i` matrices `X_i` ordered by (vertex, row, col); rows
/// are the target blocks in arrow order, each ordered by (row, col).
pub fn dw_matrix(p: &DwProblem) -> Result<SymbolicMatrix> {
    let q = &p.quiver;
    let w = GeneralRep::new(q, &p.beta, None)?;
    let v = p.v_matrices();
    let mut col_offset = vec![0usize; q.vertex_count()];
    let mut ncols = 0;
    for i in 0..q.vertex_count() {
        col_offset[i] = ncols;
        ncols += p.beta[i] * p.alpha[i];
    }
    let xcol = |vertex: usize, r: usize, c: usize| col_offset[vertex] + r * p.alpha[vertex] + c;
    let nrows: usize = q.arrows().iter().map(|a| p.beta[a.head] * p.alpha[a.tail]).sum();
    if nrows != ncols {
        return Err(Error::NotSquare { rows: nrows, cols: ncols });
    }
    let mut m = SymbolicMatrix::zeros(nrows, ncols);
    let mut row = 0;
    for (k, a) in q.arrows().iter().enumerate() {
        let (bh, at) = (p.beta[a.head], p.alpha[a.tail]);
        for r in 0..bh {
            for c in 0..at {
                // (W X_ta)[r,c] = sum_s W[r,s] X_ta[s,c]
                for s in 0..p.beta[a.tail] {
                    let col = xcol(a.tail, s, c);
                    let cur = m.get(row, col).plus(w.matrices[k].get(r, s));
                    m.set(row, col, cur);
                }
                // -(X_ha V)[r,c] = -sum_s X_ha[r,s] V[s,c]
                for s in 0..p.alpha[a.head] {
                    let col = xcol(a.head, r, s);
                    let cur = m.get(row, col).minus(v[k].get(s, c));
                    m.set(row, col, cur);
                }
                row += 1;
            }
        }
    }
    Ok(m)
}

/// Determinant, its coefficients, and the normalized generator list.
#[derive(Clone, Debug, PartialEq)]
pub struct Generators {
    pub determinant: Polynomial,
    /// Coefficients keyed by monomials in the formal variables.
    pub coefficients: Vec<(Monomial, Polynomial)>,
    /// Distinct non-constant coefficients, made monic; `[1]` if there are none.
    pub generators: Vec<Polynomial>,
}

fn collect_generators(det: Polynomial, formal: &BTreeSet<Variable>) -> Generators {
    let coeffs = det.coefficients_wrt(formal);
    let mut gens: Vec<Polynomial> = Vec::new();
    for c in coeffs.values() {
        if c.is_constant() {
            continue;
        }
        let m = c.monic();
        if !gens.contains(&m) {
            gens.push(m);
        }
    }
    if gens.is_empty() && !det.is_zero() {
        gens.push(Polynomial::one());
    }
    Generators {
        determinant: det,
        coefficients: coeffs.into_iter().rev().collect(),
        generators: gens,
    }
}

/// Expands `det(dw_matrix)` and takes coefficients with respect to the
/// variables occurring in `V`.
pub fn dw_generators(p: &DwProblem) -> Result<Generators> {
    let det = determinant(&dw_matrix(p)?)?;
    let mut formal = BTreeSet::new();
    for m in p.v_matrices() {
        for e in m.entries() {
            formal.extend(e.variables());
        }
    }
    Ok(collect_generators(det, &formal))
}

/// One summand `coeff * W(path)` of a Domokos-Zubkov block.
#[derive(Clone, Debug, PartialEq)]
pub struct DzTerm {
    pub coeff: Polynomial,
    pub path: Path,
}

/// Block matrix with row blocks indexed by `targets` and column blocks by
/// `sources`; `blocks[i][j]` is a combination of paths from `sources[j]` to
/// `targets[i]` (a trivial path stands for the identity).
#[derive(Clone, Debug, PartialEq)]
pub struct DzProblem {
    pub quiver: Quiver,
    pub beta: Vec<usize>,
    pub sources: Vec<usize>,
    pub targets: Vec<usize>,
    pub blocks: Vec<Vec<Vec<DzTerm>>>,
}

impl DzProblem {
    pub fn new(
        q: &Quiver,
        beta: &[usize],
        sources: Vec<usize>,
        targets: Vec<usize>,
        blocks: Vec<Vec<Vec<DzTerm>>>,
    ) -> Result<Self> {
        let s: usize = sources.iter().map(|&v| beta[v]).sum();
        let t: usize = targets.iter().map(|&v| beta[v]).sum();
        if s != t {
            return Err(Error::Unbalanced { sources: s, targets: t });
        }
        if blocks.len() != targets.len() || blocks.iter().any(|row| row.len() != sources.len()) {
            return Err(Error::Shape("block grid does not match the vertex lists".into()));
        }
        for (i, row) in blocks.iter().enumerate() {
            for (j, terms) in row.iter().enumerate() {
                for term in terms {
                    if q.path_tail(&term.path) != sources[j] || q.path_head(&term.path) != targets[i] {
                        return Err(Error::Invalid(format!(
                            "block ({},{}) contains path {} with wrong endpoints",
                            i + 1,
                            j + 1,
                            q.path_name(&term.path)
                        )));
                    }
                }
            }
        }
        Ok(DzProblem {
            quiver: q.clone(),
            beta: beta.to_vec(),
            sources,
            targets,
            blocks,
        })
    }

    /// Every block is a generic combination of the pathways of length at most
    /// `max_len` between the corresponding vertices, with fresh scalars
    /// `s{i}_{j}_{k}`.
    pub fn auto(q: &Quiver, beta: &[usize], vertices: &[usize], max_len: usize, cap: usize) -> Result<Self> {
        let pathways = q.enumerate_pathways(cap)?;
        let mut blocks = Vec::new();
        for (i, &w) in vertices.iter().enumerate() {
            let mut row = Vec::new();
            for (j, &v) in vertices.iter().enumerate() {
                let terms = pathways
                    .get(&(v, w))
                    .map(|ps| {
                        ps.iter()
                            .filter(|p| p.len() <= max_len)
                            .enumerate()
                            .map(|(k, p)| DzTerm {
                                coeff: Polynomial::scalar(&format!("s{}_{}_{}", i + 1, j + 1, k + 1)),
                                path: p.clone(),
                            })
                            .collect()
                    })
                    .unwrap_or_default();
                row.push(terms);
            }
            blocks.push(row);
        }
        DzProblem::new(q, beta, vertices.to_vec(), vertices.to_vec(), blocks)
    }

    fn formal_variables(&self) -> BTreeSet<Variable> {
        self.blocks
            .iter()
            .flatten()
            .flatten()
            .flat_map(|t| t.coeff.variables())
            .collect()
    }
}

pub fn dz_matrix(p: &DzProblem) -> Result<SymbolicMatrix> {
    let w = GeneralRep::new(&p.quiver, &p.beta, None)?;
    let row_off: Vec<usize> = offsets(p.targets.iter().map(|&v| p.beta[v]));
    let col_off: Vec<usize> = offsets(p.sources.iter().map(|&v| p.beta[v]));
    let n: usize = p.sources.iter().map(|&v| p.beta[v]).sum();
    let mut m = SymbolicMatrix::zeros(n, n);
    for (i, row) in p.blocks.iter().enumerate() {
        for (j, terms) in row.iter().enumerate() {
            for term in terms {
                let block = if term.path.is_trivial() {
                    SymbolicMatrix::identity(p.beta[p.sources[j]])
                } else {
                    w.path_product(&term.path.arrows)?
                };
                for r in 0..block.rows() {
                    for c in 0..block.cols() {
                        let (rr, cc) = (row_off[i] + r, col_off[j] + c);
                        let cur = m.get(rr, cc).plus(&(&term.coeff * block.get(r, c)));
                        m.set(rr, cc, cur);
                    }
                }
            }
        }
    }
    Ok(m)
}

fn offsets(sizes: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut acc = 0;
    sizes
        .map(|s| {
            let o = acc;
            acc += s;
            o
        })
        .collect()
}

/// Coefficients of `det(M)` with respect to the formal scalars.
pub fn dz_generators(p: &DzProblem) -> Result<Generators> {
    let det = determinant(&dz_matrix(p)?)?;
    Ok(collect_generators(det, &p.formal_variables()))
}

/// The worked block matrices: `"jordan1"` is `[[sA, tI], [uI, vI]]` on the
/// 1-Jordan quiver, `"jordan2"` is `[[sA, tB], [uI, vI]]` on the 2-Jordan
/// quiver with loops `a`, `b`, and `"single"` is `[tA]`; all with `beta = (n)`.
pub fn dz_example(name: &str, n: usize) -> Result<DzProblem> {
    let term = |c: &str, arrows: &[usize]| DzTerm {
        coeff: Polynomial::scalar(c),
        path: if arrows.is_empty() {
            Path::trivial(0)
        } else {
            Path {
                start: 0,
                arrows: arrows.to_vec(),
            }
        },
    };
    match name {
        "jordan1" => {
            let q = Quiver::jordan(1)?;
            let blocks = vec![
                vec![vec![term("s", &[0])], vec![term("t", &[])]],
                vec![vec![term("u", &[])], vec![term("v", &[])]],
            ];
            DzProblem::new(&q, &[n], vec![0, 0], vec![0, 0], blocks)
        }
        "jordan2" => {
            let q = Quiver::jordan(2)?.with_arrow_ids(&["a", "b"])?;
            let blocks = vec![
                vec![vec![term("s", &[0])], vec![term("t", &[1])]],
                vec![vec![term("u", &[])], vec![term("v", &[])]],
            ];
            DzProblem::new(&q, &[n], vec![0, 0], vec![0, 0], blocks)
        }
        "single" => {
            let q = Quiver::jordan(1)?;
            DzProblem::new(&q, &[n], vec![0], vec![0], vec![vec![vec![term("t", &[0])]]])
        }
        other => Err(Error::Invalid(format!("unknown example {other}"))),
    }
}

/// One row `(J | I)` of a bitableau, evaluated in the product tagged by
/// `tag`. Tags list arrow indices from the outermost factor inwards, so
/// `[1, 0]` is `A_1 A_0`. Indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableauRow {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub tag: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bitableau {
    pub rows: Vec<TableauRow>,
}

impl Bitableau {
    pub fn new(rows: Vec<TableauRow>) -> Result<Self> {
        for r in &rows {
            if r.rows.is_empty() || r.rows.len() != r.cols.len() {
                return Err(Error::TableauIndex("each row needs equally many row and column indices".into()));
            }
        }
        Ok(Bitableau { rows })
    }

    /// Rows written as `J|I@t1,t2;...`, e.g. `2|1@0; 1 2|1 2@1,0`.
    pub fn parse(text: &str) -> std::result::Result<Self, String> {
        let mut rows = Vec::new();
        for (k, part) in text.split(';').enumerate() {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (body, tag) = part.split_once('@').ok_or_else(|| format!("row {}: missing '@tag'", k + 1))?;
            let (j, i) = body.split_once('|').ok_or_else(|| format!("row {}: missing '|'", k + 1))?;
            let nums = |s: &str| -> std::result::Result<Vec<usize>, String> {
                s.split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse::<usize>().map_err(|_| format!("row {}: bad index {t:?}", k + 1)))
                    .collect()
            };
            rows.push(TableauRow {
                rows: nums(j)?,
                cols: nums(i)?,
                tag: nums(tag)?,
            });
        }
        Bitableau::new(rows).map_err(|e| e.to_string())
    }
}

/// The partial order on tags: shorter first; for equal lengths the rightmost
/// nonzero entry of `b - a` decides. Equal tags compare `Equal`.
pub fn tag_cmp(a: &[usize], b: &[usize]) -> Ordering {
    if a.len() != b.len() {
        return a.len().cmp(&b.len());
    }
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return x.cmp(y);
        }
    }
    Ordering::Equal
}

/// The product of minors `det(product(tag)[J, I])` over the rows.
pub fn bideterminant(t: &Bitableau, products: &BTreeMap<Vec<usize>, SymbolicMatrix>) -> Result<Polynomial> {
    let mut acc = Polynomial::one();
    for (k, row) in t.rows.iter().enumerate() {
        let m = products
            .get(&row.tag)
            .ok_or_else(|| Error::TableauIndex(format!("row {}: no product for tag {:?}", k + 1, row.tag)))?;
        let bad = |i: &usize, n: usize| *i == 0 || *i > n;
        if row.rows.iter().any(|i| bad(i, m.rows())) || row.cols.iter().any(|i| bad(i, m.cols())) {
            return Err(Error::TableauIndex(format!("row {} exceeds a {}x{} product", k + 1, m.rows(), m.cols())));
        }
        let r: Vec<usize> = row.rows.iter().map(|i| i - 1).collect();
        let c: Vec<usize> = row.cols.iter().map(|i| i - 1).collect();
        acc = &acc * &determinant(&m.submatrix(&r, &c))?;
    }
    Ok(acc)
}

/// The products `A_{t_1} ... A_{t_k}` of a general representation needed by `t`.
pub fn tag_products(t: &Bitableau, rep: &GeneralRep) -> Result<BTreeMap<Vec<usize>, SymbolicMatrix>> {
    let mut out = BTreeMap::new();
    for row in &t.rows {
        if out.contains_key(&row.tag) {
            continue;
        }
        if row.tag.iter().any(|&a| a >= rep.matrices.len()) {
            return Err(Error::TableauIndex(format!("tag {:?} names a missing arrow", row.tag)));
        }
        let traversal: Vec<usize> = row.tag.iter().rev().copied().collect();
        out.insert(row.tag.clone(), rep.path_product(&traversal)?);
    }
    Ok(out)
}

fn is_standard_block(rows: &[&TableauRow]) -> bool {
    let strictly_increasing = |v: &[usize]| v.windows(2).all(|w| w[0] < w[1]);
    for r in rows {
        if !strictly_increasing(&r.rows) || !strictly_increasing(&r.cols) {
            return false;
        }
    }
    for w in rows.windows(2) {
        let (upper, lower) = (w[0], w[1]);
        if lower.rows.len() > upper.rows.len() {
            return false;
        }
        for k in 0..lower.rows.len() {
            if lower.rows[k] < upper.rows[k] || lower.cols[k] < upper.cols[k] {
                return false;
            }
        }
    }
    true
}

/// Tags nondecreasing down the rows and every block of equal tags standard.
pub fn is_block_standard(t: &Bitableau) -> bool {
    if t.rows.windows(2).any(|w| tag_cmp(&w[0].tag, &w[1].tag) == Ordering::Greater) {
        return false;
    }
    let mut start = 0;
    while start < t.rows.len() {
        let mut end = start + 1;
        while end < t.rows.len() && t.rows[end].tag == t.rows[start].tag {
            end += 1;
        }
        let block: Vec<&TableauRow> = t.rows[start..end].iter().collect();
        if !is_standard_block(&block) {
            return false;
        }
        start = end;
    }
    true
}

/// Unipotent invariance on a framed quiver with the complete standard
/// filtration at the non-framed vertices.
pub fn framed_affine_invariant_check(f: &Polynomial, q: &Quiver, beta: &[usize]) -> Result<InvarianceReport> {
    let filt = Filtration::complete_standard(q, beta);
    is_unipotent_invariant(f, q, beta, Some(&filt))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HarnessReport {
    pub degree: u32,
    pub invariant_dim: usize,
    pub diagonal_count: usize,
    pub holds: bool,
    /// Basis invariants with a term outside the diagonal variables.
    pub extra: Vec<String>,
    #[serde(skip)]
    pub extra_polys: Vec<Polynomial>,
    #[serde(skip)]
    pub basis: Vec<Polynomial>,
}

/// Compares degree-`<= d` unipotent invariants of the filtered space with the
/// polynomials in diagonal variables only.
pub fn theorem_harness(q: &Quiver, beta: &[usize], d: u32, cap: usize) -> Result<HarnessReport> {
    let filt = Filtration::complete_standard(q, beta);
    let space = invariant_space(q, beta, Some(&filt), d, cap)?;
    let rep = GeneralRep::new(q, beta, Some(&filt))?;
    let diag: BTreeSet<Variable> = rep.diagonal_variables().into_iter().collect();
    let diagonal_count = crate::action::monomial_count(diag.len(), d);
    let extra_polys: Vec<Polynomial> = space
        .basis
        .iter()
        .filter(|p| p.variables().iter().any(|v| !diag.contains(v)))
        .cloned()
        .collect();
    Ok(HarnessReport {
        degree: d,
        invariant_dim: space.dim(),
        diagonal_count,
        holds: space.dim() == diagonal_count,
        extra: extra_polys.iter().map(ToString::to_string).collect(),
        extra_polys,
        basis: space.basis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly;

    #[test]
    fn one_kronecker_dw_matrix_is_a() {
        let q = Quiver::kronecker(1).unwrap();
        let p = DwProblem::new(&q, &[2, 2], &[1, 0], VSpec::Generic).unwrap();
        let m = dw_matrix(&p).unwrap();
        let rep = GeneralRep::new(&q, &[2, 2], None).unwrap();
        assert_eq!(m, rep.matrices[0]);
        let g = dw_generators(&p).unwrap();
        assert_eq!(g.generators, vec![poly("a11*a22 - a12*a21")]);
    }

    #[test]
    fn empty_problem() {
        let q = Quiver::new(2, &[]).unwrap();
        let p = DwProblem::new(&q, &[1, 1], &[0, 0], VSpec::Generic).unwrap();
        assert_eq!(dw_matrix(&p).unwrap().rows(), 0);
        assert_eq!(dw_generators(&p).unwrap().generators, vec![Polynomial::one()]);
    }

    #[test]
    fn dw_rejects_bad_input() {
        let q = Quiver::kronecker(1).unwrap();
        assert!(matches!(
            DwProblem::new(&q, &[2, 2], &[1, 1], VSpec::Generic),
            Err(Error::EulerFormNonzero(_))
        ));
        let j = Quiver::jordan(1).unwrap();
        assert!(matches!(DwProblem::new(&j, &[2], &[1], VSpec::Generic), Err(Error::Cyclic)));
    }

    #[test]
    fn dz_single_block() {
        let p = dz_example("single", 2).unwrap();
        assert_eq!(determinant(&dz_matrix(&p).unwrap()).unwrap(), poly("t^2*(a11*a22 - a12*a21)"));
        let q = Quiver::jordan(1).unwrap();
        assert!(matches!(
            DzProblem::new(&q, &[2], vec![0, 0], vec![0], vec![vec![vec![], vec![]]]),
            Err(Error::Unbalanced { sources: 4, targets: 2 })
        ));
    }

    #[test]
    fn tag_order() {
        assert_eq!(tag_cmp(&[0], &[1, 0]), Ordering::Less);
        assert_eq!(tag_cmp(&[2, 0], &[1, 0]), Ordering::Greater);
        assert_eq!(tag_cmp(&[1, 0], &[1, 0]), Ordering::Equal);
    }

    #[test]
    fn block_standard_examples() {
        let t = Bitableau::parse("2|1@0; 2|2@0; 1 2|1 2@1,0; 2|1@1,0").unwrap();
        assert!(is_block_standard(&t));
        let single = Bitableau::parse("3|1@0").unwrap();
        assert!(is_block_standard(&single));
        let bad = Bitableau::parse("2 4|1 2@0; 1 4|2 4@0").unwrap();
        assert!(!is_block_standard(&bad));
        let misordered = Bitableau::parse("1|1@1,0; 1|1@0").unwrap();
        assert!(!is_block_standard(&misordered));
        assert!(Bitableau::parse("1 2|1@0").is_err());
    }

    #[test]
    fn bideterminant_of_single_entries_and_identity() {
        let m = crate::poly::general_matrix("x", 2, 2, |_, _| true);
        let products: BTreeMap<_, _> = [(vec![0], m)].into();
        let t = Bitableau::parse("2|1@0").unwrap();
        assert_eq!(bideterminant(&t, &products).unwrap(), poly("x21"));
        let id: BTreeMap<_, _> = [(vec![0], SymbolicMatrix::identity(3))].into();
        let full = Bitableau::parse("1 2 3|1 2 3@0").unwrap();
        assert_eq!(bideterminant(&full, &id).unwrap(), Polynomial::one());
        let out = Bitableau::parse("4|1@0").unwrap();
        assert!(matches!(bideterminant(&out, &id), Err(Error::TableauIndex(_))));
    }

    #[test]
    fn two_kronecker_with_scalar_v() {
        let q = Quiver::kronecker(2).unwrap().with_arrow_ids(&["a", "b"]).unwrap();
        let one = SymbolicMatrix::from_rows(vec![vec![Polynomial::one()]]).unwrap();
        let lam = SymbolicMatrix::from_rows(vec![vec![Polynomial::scalar("lambda")]]).unwrap();
        let p = DwProblem::new(&q, &[2, 2], &[1, 1], VSpec::Specialized(vec![one, lam])).unwrap();
        let g = dw_generators(&p).unwrap();
        let mut got = g.generators.clone();
        got.sort_by_key(|p| p.to_string());
        let mut want = vec![
            poly("a11*a22 - a12*a21"),
            poly("a11*b22 - a12*b21 - a21*b12 + a22*b11"),
            poly("b11*b22 - b12*b21"),
        ];
        want.sort_by_key(|p| p.to_string());
        assert_eq!(got, want);
    }

    #[test]
    fn jordan_blocks() {
        let p = dz_example("jordan1", 2).unwrap();
        let g = dz_generators(&p).unwrap();
        assert_eq!(
            g.determinant,
            poly("t^2*u^2 - (a11 + a22)*s*t*u*v + (a11*a22 - a12*a21)*s^2*v^2")
        );
        assert_eq!(g.generators.len(), 2);
        let p2 = dz_example("jordan2", 2).unwrap();
        let g2 = dz_generators(&p2).unwrap();
        let mixed = poly("a11*b22 - a12*b21 + a22*b11 - a21*b12");
        assert!(g2.generators.contains(&mixed) || g2.generators.contains(&-mixed));
    }

    #[test]
    fn worked_bideterminant() {
        let x = crate::poly::general_matrix("x", 2, 2, |_, _| true);
        let a = crate::poly::general_matrix("a", 2, 2, |r, c| r <= c);
        let ax = a.try_mul(&x).unwrap();
        let products: BTreeMap<_, _> = [(vec![0], x), (vec![1, 0], ax)].into();
        let t = Bitableau::parse("2|1@0; 2|2@0; 1 2|1 2@1,0; 2|1@1,0").unwrap();
        assert_eq!(
            bideterminant(&t, &products).unwrap(),
            poly("x21^2*x22*a11*a22^2*(x11*x22 - x12*x21)")
        );
    }

    #[test]
    fn harness_small_cases() {
        use crate::quiver::DynkinFamily;
        let a2 = Quiver::dynkin(DynkinFamily::A, 2, None).unwrap();
        let r = theorem_harness(&a2, &[2, 2], 2, 20_000).unwrap();
        assert!(r.holds, "{r:?}");
        assert_eq!(r.diagonal_count, 6);
        let r0 = theorem_harness(&a2, &[2, 2], 0, 20_000).unwrap();
        assert!(r0.holds);
        let j2 = Quiver::jordan(2).unwrap().with_arrow_ids(&["a", "c"]).unwrap();
        let r = theorem_harness(&j2, &[2], 2, 20_000).unwrap();
        assert!(r.invariant_dim > r.diagonal_count);
        let w = poly("(a11 - a22)*c12 - (c11 - c22)*a12");
        assert!(crate::action::in_span(&r.basis, &w));
    }
}
