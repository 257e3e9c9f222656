//! BGP reflection functors, associated graded and Rees/Filt functors on
//! coordinate-filtered representations, strict maps, and isomorphism testing.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Ring};
use crate::poly::{determinant, Polynomial, Rational};
use crate::quiver::{Arrow, Quiver};
use crate::repspace::{ConcreteRep, Filtration};

pub const DEFAULT_TRIALS: usize = 32;

type Mat = Matrix<Rational>;

fn slice(m: &Mat, r0: usize, r1: usize, c0: usize, c1: usize) -> Mat {
    Matrix::from_fn(r1 - r0, c1 - c0, |r, c| m.get(r0 + r, c0 + c).clone())
}

fn columns_to_matrix(rows: usize, cols: &[Vec<Rational>]) -> Mat {
    Matrix::from_fn(rows, cols.len(), |r, c| cols[c][r].clone())
}

/// Appends each candidate that is independent of the vectors already chosen.
fn extend_basis(basis: &mut Vec<Vec<Rational>>, dim: usize, candidates: impl IntoIterator<Item = Vec<Rational>>) {
    for v in candidates {
        let mut trial = basis.clone();
        trial.push(v.clone());
        if columns_to_matrix(dim, &trial).rank() == trial.len() {
            basis.push(v);
        }
    }
}

/// The quiver with every arrow at `i` reversed; ids and order are kept.
fn reverse_at(q: &Quiver, i: usize) -> Result<Quiver> {
    let labels = (0..q.vertex_count()).map(|v| q.label(v).to_string()).collect();
    let arrows = q
        .arrows()
        .iter()
        .map(|a| {
            if a.tail == i || a.head == i {
                Arrow {
                    id: a.id.clone(),
                    tail: a.head,
                    head: a.tail,
                }
            } else {
                a.clone()
            }
        })
        .collect();
    let framed = (0..q.vertex_count()).map(|v| q.is_framed(v)).collect();
    Quiver::from_parts(labels, arrows, framed)
}

/// `phi = [W(a_1) W(a_2) ...]` over the arrows into `i`, and column offsets.
fn in_map(w: &ConcreteRep, i: usize) -> (Mat, Vec<usize>, Vec<usize>) {
    let ins = w.quiver.arrows_into(i);
    let mut offsets = Vec::new();
    let mut total = 0;
    for &a in &ins {
        offsets.push(total);
        total += w.beta[w.quiver.arrow(a).tail];
    }
    let phi = Matrix::from_fn(w.beta[i], total, |r, c| {
        let k = offsets.iter().rposition(|&o| o <= c).expect("offset");
        w.maps[ins[k]].get(r, c - offsets[k]).clone()
    });
    (phi, ins, offsets)
}

/// New maps out of `i` given a kernel basis (columns of `k`).
fn reflected_from_kernel(w: &ConcreteRep, i: usize, k: &Mat, ins: &[usize], offsets: &[usize]) -> Result<ConcreteRep> {
    let q = reverse_at(&w.quiver, i)?;
    let mut beta = w.beta.clone();
    beta[i] = k.cols();
    let mut maps = w.maps.clone();
    for (n, &a) in ins.iter().enumerate() {
        let t = w.quiver.arrow(a).tail;
        maps[a] = slice(k, offsets[n], offsets[n] + w.beta[t], 0, k.cols());
    }
    ConcreteRep::new(&q, &beta, maps)
}

/// `S_i^+` at a sink: the kernel of the total in-map, with the RREF kernel basis.
pub fn reflect_plus(w: &ConcreteRep, i: usize) -> Result<ConcreteRep> {
    if !w.quiver.is_sink(i) {
        return Err(Error::NotSink(w.quiver.label(i).to_string()));
    }
    let (phi, ins, offsets) = in_map(w, i);
    reflected_from_kernel(w, i, &phi.kernel_matrix(), &ins, &offsets)
}

/// `S_i^-` at a source: the cokernel of the total out-map, in quotient
/// coordinates given by a basis of the left kernel.
pub fn reflect_minus(w: &ConcreteRep, i: usize) -> Result<ConcreteRep> {
    if !w.quiver.is_source(i) {
        return Err(Error::NotSource(w.quiver.label(i).to_string()));
    }
    let outs = w.quiver.arrows_out_of(i);
    let mut offsets = Vec::new();
    let mut total = 0;
    for &a in &outs {
        offsets.push(total);
        total += w.beta[w.quiver.arrow(a).head];
    }
    let psi = Matrix::from_fn(total, w.beta[i], |r, c| {
        let k = offsets.iter().rposition(|&o| o <= r).expect("offset");
        w.maps[outs[k]].get(r - offsets[k], c).clone()
    });
    let coker = psi.transpose().kernel_matrix().transpose();
    let q = reverse_at(&w.quiver, i)?;
    let mut beta = w.beta.clone();
    beta[i] = coker.rows();
    let mut maps = w.maps.clone();
    for (n, &a) in outs.iter().enumerate() {
        let h = w.quiver.arrow(a).head;
        maps[a] = slice(&coker, 0, coker.rows(), offsets[n], offsets[n] + w.beta[h]);
    }
    ConcreteRep::new(&q, &beta, maps)
}

/// Outcome of an isomorphism search.
#[derive(Clone, Debug, PartialEq)]
pub enum Isomorphism {
    /// Invertible `g` with `g_head W1(a) = W2(a) g_tail` for every arrow.
    Yes(Vec<Mat>),
    No(String),
    Inconclusive,
}

impl Isomorphism {
    pub fn is_yes(&self) -> bool {
        matches!(self, Isomorphism::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Isomorphism::No(_))
    }
}

/// Solves the intertwiner system and looks for an invertible solution among
/// seeded random combinations of a basis. When the solution space has
/// dimension at most 4, a vertex whose generic determinant vanishes
/// identically certifies non-isomorphism.
pub fn are_isomorphic(w1: &ConcreteRep, w2: &ConcreteRep, seed: u64, trials: usize) -> Isomorphism {
    let same_shape = w1.quiver.vertex_count() == w2.quiver.vertex_count()
        && w1.quiver.arrows().len() == w2.quiver.arrows().len()
        && w1
            .quiver
            .arrows()
            .iter()
            .zip(w2.quiver.arrows())
            .all(|(a, b)| a.tail == b.tail && a.head == b.head);
    if !same_shape {
        return Isomorphism::No("different quivers".into());
    }
    if w1.beta != w2.beta {
        return Isomorphism::No(format!("dimension vectors {:?} and {:?} differ", w1.beta, w2.beta));
    }
    let beta = &w1.beta;
    if w1.maps == w2.maps {
        return Isomorphism::Yes(beta.iter().map(|&b| Matrix::identity(b)).collect());
    }
    let mut off = Vec::new();
    let mut unknowns = 0;
    for &b in beta {
        off.push(unknowns);
        unknowns += b * b;
    }
    let var = |v: usize, r: usize, c: usize| off[v] + r * beta[v] + c;
    let mut eqs: Vec<Vec<Rational>> = Vec::new();
    for (k, a) in w1.quiver.arrows().iter().enumerate() {
        let (m1, m2) = (&w1.maps[k], &w2.maps[k]);
        for r in 0..beta[a.head] {
            for c in 0..beta[a.tail] {
                let mut row = vec![Rational::zero(); unknowns];
                for s in 0..beta[a.head] {
                    row[var(a.head, r, s)] += m1.get(s, c);
                }
                for s in 0..beta[a.tail] {
                    row[var(a.tail, s, c)] -= m2.get(r, s);
                }
                eqs.push(row);
            }
        }
    }
    let basis = if eqs.is_empty() {
        Matrix::<Rational>::zeros(0, unknowns).nullspace()
    } else {
        Matrix::from_rows(eqs).expect("rectangular").nullspace()
    };
    if basis.is_empty() {
        return Isomorphism::No("no nonzero intertwiner".into());
    }
    let assemble = |coeffs: &[Rational]| -> Vec<Mat> {
        (0..beta.len())
            .map(|v| {
                Matrix::from_fn(beta[v], beta[v], |r, c| {
                    let mut acc = Rational::zero();
                    for (x, b) in coeffs.iter().zip(&basis) {
                        acc += x * &b[var(v, r, c)];
                    }
                    acc
                })
            })
            .collect()
    };
    let invertible = |g: &[Mat]| g.iter().all(|m| m.det().map(|d| !d.is_zero()).unwrap_or(false));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let coeffs: Vec<Rational> = basis.iter().map(|_| Rational::from_integer(rng.gen_range(-9i64..=9).into())).collect();
        let g = assemble(&coeffs);
        if invertible(&g) {
            return Isomorphism::Yes(g);
        }
    }
    if basis.len() <= 4 {
        let scalars: Vec<Polynomial> = (1..=basis.len()).map(|k| Polynomial::scalar(&format!("c{k}"))).collect();
        for v in 0..beta.len() {
            if beta[v] > crate::linalg::MAX_COFACTOR_SIZE {
                return Isomorphism::Inconclusive;
            }
            let g = Matrix::from_fn(beta[v], beta[v], |r, c| {
                let mut acc = Polynomial::zero();
                for (s, b) in scalars.iter().zip(&basis) {
                    acc = &acc + &(s * &Polynomial::constant(b[var(v, r, c)].clone()));
                }
                acc
            });
            if let Ok(d) = determinant(&g) {
                if d.is_zero() {
                    return Isomorphism::No(format!("every intertwiner is singular at vertex {}", w1.quiver.label(v)));
                }
            }
        }
    }
    Isomorphism::Inconclusive
}

/// A representation preserving a coordinate filtration.
#[derive(Clone, Debug, PartialEq)]
pub struct FilteredConcreteRep {
    pub rep: ConcreteRep,
    pub filtration: Filtration,
}

impl FilteredConcreteRep {
    pub fn new(rep: ConcreteRep, filtration: Filtration) -> Result<Self> {
        if filtration.levels().iter().any(|l| l.len() != rep.beta.len()) {
            return Err(Error::InvalidFiltration("filtration has the wrong number of vertices".into()));
        }
        if !rep.respects(&filtration) {
            return Err(Error::InvalidFiltration("representation does not preserve the filtration".into()));
        }
        Ok(FilteredConcreteRep { rep, filtration })
    }
}

/// One representation per level; level `l` carries the graded pieces.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedRep {
    pub levels: Vec<ConcreteRep>,
}

impl GradedRep {
    /// `dims()[l][v]` is the dimension of piece `l + 1` at `v`.
    pub fn dims(&self) -> Vec<Vec<usize>> {
        self.levels.iter().map(|r| r.beta.clone()).collect()
    }

    pub fn total_dims(&self) -> Vec<usize> {
        let p = self.levels.first().map_or(0, |r| r.beta.len());
        (0..p).map(|v| self.levels.iter().map(|r| r.beta[v]).sum()).collect()
    }

    pub fn reflect_plus(&self, i: usize) -> Result<GradedRep> {
        Ok(GradedRep {
            levels: self.levels.iter().map(|r| reflect_plus(r, i)).collect::<Result<_>>()?,
        })
    }

    pub fn reflect_minus(&self, i: usize) -> Result<GradedRep> {
        Ok(GradedRep {
            levels: self.levels.iter().map(|r| reflect_minus(r, i)).collect::<Result<_>>()?,
        })
    }
}

/// Associated graded: diagonal blocks between consecutive levels.
pub fn gr(x: &FilteredConcreteRep) -> Result<GradedRep> {
    let f = &x.filtration;
    let q = &x.rep.quiver;
    let mut levels = Vec::new();
    for l in 1..=f.len() {
        let dims: Vec<usize> = (0..q.vertex_count()).map(|v| f.gamma(l, v) - f.gamma(l - 1, v)).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| {
                slice(
                    &x.rep.maps[k],
                    f.gamma(l - 1, a.head),
                    f.gamma(l, a.head),
                    f.gamma(l - 1, a.tail),
                    f.gamma(l, a.tail),
                )
            })
            .collect();
        levels.push(ConcreteRep::new(q, &dims, maps)?);
    }
    Ok(GradedRep { levels })
}

/// `S_i^+` with the induced filtration `ker(phi) cap (sum of level-l pieces)`
/// at `i`, using a kernel basis adapted to that chain.
pub fn induced_filtration_plus(x: &FilteredConcreteRep, i: usize) -> Result<FilteredConcreteRep> {
    let w = &x.rep;
    if !w.quiver.is_sink(i) {
        return Err(Error::NotSink(w.quiver.label(i).to_string()));
    }
    let f = &x.filtration;
    let (phi, ins, offsets) = in_map(w, i);
    let total = phi.cols();
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    let mut chain = Vec::new();
    for l in 1..=f.len() {
        let cols: Vec<usize> = ins
            .iter()
            .zip(&offsets)
            .flat_map(|(&a, &o)| o..o + f.gamma(l, w.quiver.arrow(a).tail))
            .collect();
        let all_rows: Vec<usize> = (0..phi.rows()).collect();
        let restricted = phi.submatrix(&all_rows, &cols);
        let embedded = restricted.nullspace().into_iter().map(|v| {
            let mut full = vec![Rational::zero(); total];
            for (x, &c) in v.into_iter().zip(&cols) {
                full[c] = x;
            }
            full
        });
        extend_basis(&mut basis, total, embedded);
        chain.push(basis.len());
    }
    let k = columns_to_matrix(total, &basis);
    let rep = reflected_from_kernel(w, i, &k, &ins, &offsets)?;
    let levels = f
        .levels()
        .iter()
        .zip(&chain)
        .map(|(l, &d)| {
            let mut l = l.clone();
            l[i] = d;
            l
        })
        .collect();
    FilteredConcreteRep::new(rep, Filtration::new(levels)?)
}

/// A graded `Q[t]`-representation on a finite window of degrees. Beyond the
/// window, `t` acts by identities on the last piece.
#[derive(Clone, Debug, PartialEq)]
pub struct TGradedRep {
    pub quiver: Quiver,
    /// `pieces[v][l]`.
    pub pieces: Vec<Vec<usize>>,
    /// `tmaps[v][l]` maps piece `l` to piece `l + 1`.
    pub tmaps: Vec<Vec<Mat>>,
    /// `maps[a][l]` maps piece `l` of the tail to piece `l` of the head.
    pub maps: Vec<Vec<Mat>>,
}

impl TGradedRep {
    pub fn new(q: &Quiver, pieces: Vec<Vec<usize>>, tmaps: Vec<Vec<Mat>>, maps: Vec<Vec<Mat>>) -> Result<Self> {
        let n = pieces.first().map_or(0, Vec::len);
        if pieces.len() != q.vertex_count() || pieces.iter().any(|p| p.len() != n) || n == 0 {
            return Err(Error::Shape("pieces must cover every vertex on a common window".into()));
        }
        for (v, ts) in tmaps.iter().enumerate() {
            if ts.len() + 1 != n {
                return Err(Error::Shape("one t-map between consecutive pieces".into()));
            }
            for (l, t) in ts.iter().enumerate() {
                if t.rows() != pieces[v][l + 1] || t.cols() != pieces[v][l] {
                    return Err(Error::Shape(format!("t-map at vertex {} level {} has the wrong shape", q.label(v), l + 1)));
                }
            }
        }
        if maps.len() != q.arrows().len() {
            return Err(Error::Shape("one map family per arrow".into()));
        }
        for (k, a) in q.arrows().iter().enumerate() {
            if maps[k].len() != n {
                return Err(Error::Shape(format!("arrow {} needs {} maps", a.id, n)));
            }
            for l in 0..n {
                let m = &maps[k][l];
                if m.rows() != pieces[a.head][l] || m.cols() != pieces[a.tail][l] {
                    return Err(Error::Shape(format!("arrow {} level {} has the wrong shape", a.id, l + 1)));
                }
                if l + 1 < n {
                    let lhs = tmaps[a.head][l].try_mul(m)?;
                    let rhs = maps[k][l + 1].try_mul(&tmaps[a.tail][l])?;
                    if lhs != rhs {
                        return Err(Error::Invalid(format!("arrow {} does not commute with t at level {}", a.id, l + 1)));
                    }
                }
            }
        }
        Ok(TGradedRep {
            quiver: q.clone(),
            pieces,
            tmaps,
            maps,
        })
    }

    pub fn window(&self) -> usize {
        self.pieces.first().map_or(0, Vec::len)
    }

    /// Composite of t-maps from piece `l` to the last piece.
    pub fn to_last(&self, v: usize, l: usize) -> Mat {
        let mut m = Matrix::identity(self.pieces[v][l]);
        for t in &self.tmaps[v][l..] {
            m = t.try_mul(&m).expect("shapes checked");
        }
        m
    }

    pub fn is_torsion_free(&self) -> bool {
        self.tmaps.iter().flatten().all(|t| t.rank() == t.cols())
    }
}

/// Pieces are the filtration levels, `t` acts by inclusions.
pub fn rees(x: &FilteredConcreteRep) -> Result<TGradedRep> {
    let f = &x.filtration;
    let q = &x.rep.quiver;
    let n = f.len();
    let pieces: Vec<Vec<usize>> = (0..q.vertex_count()).map(|v| f.chain(v)).collect();
    let tmaps = pieces
        .iter()
        .map(|p| {
            (0..n - 1)
                .map(|l| Matrix::from_fn(p[l + 1], p[l], |r, c| if r == c { Rational::one() } else { Rational::zero() }))
                .collect()
        })
        .collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            (1..=n)
                .map(|l| slice(&x.rep.maps[k], 0, f.gamma(l, a.head), 0, f.gamma(l, a.tail)))
                .collect()
        })
        .collect();
    TGradedRep::new(q, pieces, tmaps, maps)
}

/// Images of the pieces in the last piece, in a basis adapted to the chain
/// of images.
pub fn filt(r: &TGradedRep) -> Result<FilteredConcreteRep> {
    let q = &r.quiver;
    let n = r.window();
    let mut bases = Vec::new();
    let mut chains = Vec::new();
    for v in 0..q.vertex_count() {
        let dim = r.pieces[v][n - 1];
        let mut basis: Vec<Vec<Rational>> = Vec::new();
        let mut chain = Vec::new();
        for l in 0..n {
            let image = r.to_last(v, l).column_space();
            extend_basis(&mut basis, dim, (0..image.cols()).map(|c| image.col(c)));
            chain.push(basis.len());
        }
        bases.push(columns_to_matrix(dim, &basis));
        chains.push(chain);
    }
    let beta: Vec<usize> = r.pieces.iter().map(|p| p[n - 1]).collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let inv = bases[a.head].inverse().expect("adapted basis spans the last piece");
            inv.try_mul(&r.maps[k][n - 1])?.try_mul(&bases[a.tail])
        })
        .collect::<Result<Vec<_>>>()?;
    let levels = (0..n).map(|l| chains.iter().map(|c| c[l]).collect()).collect();
    FilteredConcreteRep::new(ConcreteRep::new(q, &beta, maps)?, Filtration::new(levels)?)
}

fn check_chain(chain: &[usize], dim: usize) -> Result<()> {
    if chain.windows(2).any(|w| w[0] > w[1]) || chain.iter().any(|&d| d > dim) {
        return Err(Error::InvalidFiltration(format!("chain {chain:?} is not monotone within dimension {dim}")));
    }
    Ok(())
}

/// `phi: Q^m -> Q^n` with `M_l` and `N_l` spanned by the first `source[l]`
/// and `target[l]` coordinates. True iff `phi(M_l) = phi(M) cap N_l` for all `l`.
pub fn is_strict(phi: &Mat, source: &[usize], target: &[usize]) -> Result<bool> {
    if source.len() != target.len() {
        return Err(Error::LengthMismatch {
            expected: source.len(),
            got: target.len(),
        });
    }
    check_chain(source, phi.cols())?;
    check_chain(target, phi.rows())?;
    for (l, (&m, &n)) in source.iter().zip(target).enumerate() {
        for r in n..phi.rows() {
            for c in 0..m {
                if !phi.get(r, c).is_zero() {
                    return Err(Error::NotFiltered(l + 1));
                }
            }
        }
    }
    let rank_phi = phi.rank();
    for (&m, &n) in source.iter().zip(target) {
        let unit = Matrix::from_fn(phi.rows(), n, |r, c| if r == c { Rational::one() } else { Rational::zero() });
        let meet = rank_phi + n - phi.hstack(&unit)?.rank();
        let image = slice(phi, 0, phi.rows(), 0, m).rank();
        if meet != image {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `psi * phi = 0` and `rank phi + rank psi = dim` of the middle space.
pub fn exact_at_middle(phi: &Mat, psi: &Mat) -> Result<bool> {
    Ok(psi.try_mul(phi)?.is_zero() && phi.rank() + psi.rank() == phi.rows())
}

/// Exactness of `gr M -> gr N -> gr P` at every level.
pub fn gr_exact_at_middle(phi: &Mat, psi: &Mat, m: &[usize], n: &[usize], p: &[usize]) -> Result<bool> {
    let prev = |c: &[usize], l: usize| if l == 0 { 0 } else { c[l - 1] };
    for l in 0..m.len() {
        let a = slice(phi, prev(n, l), n[l], prev(m, l), m[l]);
        let b = slice(psi, prev(p, l), p[l], prev(n, l), n[l]);
        if !exact_at_middle(&a, &b)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A random coordinate filtration with `levels` steps ending at `beta`, and
/// small integer maps preserving it.
pub fn random_filtered(q: &Quiver, beta: &[usize], levels: usize, rng: &mut impl Rng) -> Result<FilteredConcreteRep> {
    let mut chains: Vec<Vec<usize>> = beta
        .iter()
        .map(|&b| {
            let mut c: Vec<usize> = (0..levels.saturating_sub(1)).map(|_| rng.gen_range(0..=b)).collect();
            c.sort_unstable();
            c.push(b);
            c
        })
        .collect();
    if levels == 0 {
        chains = beta.iter().map(|&b| vec![b]).collect();
    }
    let n = chains[0].len();
    let f = Filtration::new((0..n).map(|l| chains.iter().map(|c| c[l]).collect()).collect())?;
    let maps = q
        .arrows()
        .iter()
        .map(|a| {
            Matrix::from_fn(beta[a.head], beta[a.tail], |r, c| {
                if f.allows(a.tail, a.head, r, c) {
                    Rational::from_integer(rng.gen_range(-3i64..=3).into())
                } else {
                    Rational::zero()
                }
            })
        })
        .collect();
    FilteredConcreteRep::new(ConcreteRep::new(q, beta, maps)?, f)
}
