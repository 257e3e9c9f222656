//! Quivers, paths, pathways and the Euler form.
//!
//! Vertices are stored 0-based and carry display labels: `"1"`, `"2"`, ... for
//! ordinary vertices and `"1♮"`, ... for the copies added by [`Quiver::framed`].
//! Paths are stored in traversal order (first arrow first) and printed in the
//! usual right-to-left composition order, so the path that follows `a1` and
//! then `a2` prints as `a2a1`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub type DimVector = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Arrow {
    pub id: String,
    pub tail: usize,
    pub head: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Quiver {
    labels: Vec<String>,
    arrows: Vec<Arrow>,
    framed: Vec<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DynkinFamily {
    A,
    D,
    E,
}

/// Default limit on the number of words explored by [`Quiver::enumerate_pathways`].
pub const DEFAULT_PATHWAY_CAP: usize = 100_000;

impl Quiver {
    /// Quiver on `p` vertices labelled `1..=p` with arrows `(id, tail, head)`, 0-based.
    pub fn new(p: usize, arrows: &[(&str, usize, usize)]) -> Result<Self> {
        let arrows = arrows
            .iter()
            .map(|(id, t, h)| Arrow {
                id: id.to_string(),
                tail: *t,
                head: *h,
            })
            .collect();
        Quiver::from_parts((1..=p).map(|i| i.to_string()).collect(), arrows, vec![false; p])
    }

    pub fn from_parts(labels: Vec<String>, arrows: Vec<Arrow>, framed: Vec<bool>) -> Result<Self> {
        let p = labels.len();
        if framed.len() != p {
            return Err(Error::InvalidQuiver("framed flags do not match vertex count".into()));
        }
        for a in &arrows {
            if a.tail >= p || a.head >= p {
                return Err(Error::InvalidQuiver(format!("arrow {} has an endpoint out of range", a.id)));
            }
        }
        for (k, a) in arrows.iter().enumerate() {
            if arrows[..k].iter().any(|b| b.id == a.id) {
                return Err(Error::InvalidQuiver(format!("duplicate arrow id {}", a.id)));
            }
        }
        Ok(Quiver {
            labels,
            arrows,
            framed,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, k: usize) -> &Arrow {
        &self.arrows[k]
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.id == id)
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn is_framed(&self, v: usize) -> bool {
        self.framed[v]
    }

    pub fn set_framed(&mut self, v: usize, flag: bool) {
        self.framed[v] = flag;
    }

    /// Renames the arrows in order; the list must have one id per arrow.
    pub fn with_arrow_ids(mut self, ids: &[&str]) -> Result<Self> {
        if ids.len() != self.arrows.len() {
            return Err(Error::InvalidQuiver(format!(
                "{} ids for {} arrows",
                ids.len(),
                self.arrows.len()
            )));
        }
        for (a, id) in self.arrows.iter_mut().zip(ids) {
            a.id = id.to_string();
        }
        Quiver::from_parts(self.labels, self.arrows, self.framed)
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.arrows.iter().any(|a| a.tail == v && a.head == v)
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.arrows.iter().all(|a| a.tail != v)
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.arrows.iter().all(|a| a.head != v)
    }

    pub fn arrows_into(&self, v: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&k| self.arrows[k].head == v).collect()
    }

    pub fn arrows_out_of(&self, v: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&k| self.arrows[k].tail == v).collect()
    }

    pub fn is_acyclic(&self) -> bool {
        let p = self.vertex_count();
        let mut indeg = vec![0usize; p];
        for a in &self.arrows {
            indeg[a.head] += 1;
        }
        let mut stack: Vec<usize> = (0..p).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for a in self.arrows.iter().filter(|a| a.tail == v) {
                indeg[a.head] -= 1;
                if indeg[a.head] == 0 {
                    stack.push(a.head);
                }
            }
        }
        seen == p
    }

    fn check_len(&self, v: &[i64]) -> Result<()> {
        if v.len() != self.vertex_count() {
            return Err(Error::LengthMismatch {
                expected: self.vertex_count(),
                got: v.len(),
            });
        }
        Ok(())
    }

    /// `<alpha, beta> = sum_i alpha_i beta_i - sum_a alpha_ta beta_ha`.
    pub fn euler_form(&self, alpha: &[i64], beta: &[i64]) -> Result<i64> {
        self.check_len(alpha)?;
        self.check_len(beta)?;
        let diag: i64 = alpha.iter().zip(beta).map(|(a, b)| a * b).sum();
        let off: i64 = self.arrows.iter().map(|a| alpha[a.tail] * beta[a.head]).sum();
        Ok(diag - off)
    }

    pub fn symmetrized_form(&self, alpha: &[i64], beta: &[i64]) -> Result<i64> {
        Ok(self.euler_form(alpha, beta)? + self.euler_form(beta, alpha)?)
    }

    /// The simple reflection `beta - (beta, e_i) e_i`.
    pub fn sigma(&self, i: usize, beta: &[i64]) -> Result<Vec<i64>> {
        self.check_len(beta)?;
        if i >= self.vertex_count() {
            return Err(Error::VertexOutOfRange(i));
        }
        if self.has_loop(i) {
            return Err(Error::LoopAtVertex(self.labels[i].clone()));
        }
        let mut e = vec![0; self.vertex_count()];
        e[i] = 1;
        let pairing = self.symmetrized_form(beta, &e)?;
        let mut out = beta.to_vec();
        out[i] -= pairing;
        Ok(out)
    }

    /// The same quiver with every arrow reversed (arrow ids unchanged).
    pub fn opposite(&self) -> Quiver {
        Quiver {
            labels: self.labels.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    id: a.id.clone(),
                    tail: a.head,
                    head: a.tail,
                })
                .collect(),
            framed: self.framed.clone(),
        }
    }

    /// The quiver with both `a` and a reversed copy `a` + "op" of every arrow.
    pub fn double(&self) -> Quiver {
        let mut arrows = self.arrows.clone();
        arrows.extend(self.arrows.iter().map(|a| Arrow {
            id: format!("{}op", a.id),
            tail: a.head,
            head: a.tail,
        }));
        Quiver {
            labels: self.labels.clone(),
            arrows,
            framed: self.framed.clone(),
        }
    }

    /// Adds a framing copy `i♮` of every vertex with an arrow `iota{i}: i♮ -> i`.
    ///
    /// Original vertices keep their indices; copy of vertex `v` has index `p + v`.
    pub fn framed(&self) -> Quiver {
        let p = self.vertex_count();
        let mut labels = self.labels.clone();
        labels.extend(self.labels.iter().map(|l| format!("{l}♮")));
        let mut arrows = self.arrows.clone();
        arrows.extend((0..p).map(|v| Arrow {
            id: format!("iota{}", self.labels[v]),
            tail: p + v,
            head: v,
        }));
        let mut framed = self.framed.clone();
        framed.extend(std::iter::repeat_n(true, p));
        Quiver {
            labels,
            arrows,
            framed,
        }
    }

    /// One vertex with `m` loops, named `a` when `m = 1` and `a1..am` otherwise.
    pub fn jordan(m: usize) -> Result<Quiver> {
        if m == 0 {
            return Err(Error::InvalidQuiver("Jordan quiver needs m >= 1".into()));
        }
        let ids = numbered_ids(m);
        let arrows: Vec<(&str, usize, usize)> = ids.iter().map(|id| (id.as_str(), 0, 0)).collect();
        Quiver::new(1, &arrows)
    }

    /// Two vertices with `k` arrows `1 -> 2`, named as in [`Quiver::jordan`].
    pub fn kronecker(k: usize) -> Result<Quiver> {
        if k == 0 {
            return Err(Error::InvalidQuiver("Kronecker quiver needs k >= 1".into()));
        }
        let ids = numbered_ids(k);
        let arrows: Vec<(&str, usize, usize)> = ids.iter().map(|id| (id.as_str(), 0, 1)).collect();
        Quiver::new(2, &arrows)
    }

    /// The edges of the Dynkin diagram in preferred orientation, 0-based.
    pub fn dynkin_edges(family: DynkinFamily, r: usize) -> Result<Vec<(usize, usize)>> {
        let edges = match family {
            DynkinFamily::A if r >= 1 => (0..r - 1).map(|a| (a, a + 1)).collect(),
            DynkinFamily::D if r >= 4 => {
                let mut e: Vec<_> = (0..r - 2).map(|a| (a, a + 1)).collect();
                e.push((r - 3, r - 1));
                e
            }
            DynkinFamily::E if (6..=8).contains(&r) => {
                let all = [(0, 1), (1, 2), (2, 3), (2, 4), (4, 5), (5, 6), (6, 7)];
                all.iter().copied().filter(|&(_, h)| h < r).collect()
            }
            _ => {
                return Err(Error::InvalidQuiver(format!(
                    "no Dynkin diagram {family:?}_{r}"
                )))
            }
        };
        Ok(edges)
    }

    /// ADE quiver. Arrow `a{k}` is the k-th edge of [`Quiver::dynkin_edges`];
    /// `flip[k] = true` reverses it. `None` gives the preferred orientation.
    pub fn dynkin(family: DynkinFamily, r: usize, flip: Option<&[bool]>) -> Result<Quiver> {
        let edges = Quiver::dynkin_edges(family, r)?;
        oriented(r, &edges, flip)
    }

    /// Affine type A with `r + 1` vertices on a cycle. Edge k joins `k` and
    /// `k + 1 mod (r + 1)`; `flip[k]` reverses it.
    pub fn affine_a(r: usize, flip: Option<&[bool]>) -> Result<Quiver> {
        if r == 0 {
            return Err(Error::InvalidQuiver("affine A_r needs r >= 1".into()));
        }
        let n = r + 1;
        let edges: Vec<_> = (0..n).map(|k| (k, (k + 1) % n)).collect();
        oriented(n, &edges, flip)
    }

    pub fn path_tail(&self, p: &Path) -> usize {
        p.start
    }

    pub fn path_head(&self, p: &Path) -> usize {
        p.arrows.last().map_or(p.start, |&k| self.arrows[k].head)
    }

    /// The path that follows the arrows in order, if composable.
    pub fn path(&self, arrows: &[usize]) -> Option<Path> {
        let first = *arrows.first()?;
        let mut at = self.arrows.get(first)?.tail;
        for &k in arrows {
            let a = self.arrows.get(k)?;
            if a.tail != at {
                return None;
            }
            at = a.head;
        }
        Some(Path {
            start: self.arrows[first].tail,
            arrows: arrows.to_vec(),
        })
    }

    /// `p ∘ q`: first `q`, then `p`. `None` is the zero of the path algebra.
    pub fn compose(&self, p: &Path, q: &Path) -> Option<Path> {
        if self.path_tail(p) != self.path_head(q) {
            return None;
        }
        let mut arrows = q.arrows.clone();
        arrows.extend_from_slice(&p.arrows);
        Some(Path {
            start: q.start,
            arrows,
        })
    }

    /// Prints a path in composition order, e.g. `a2a1`, or `e1` for a trivial path.
    pub fn path_name(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            return format!("e{}", self.labels[p.start]);
        }
        p.arrows.iter().rev().map(|&k| self.arrows[k].id.as_str()).collect()
    }

    /// All pathways (square-free paths, including trivial ones) between every
    /// ordered pair of vertices, keyed by `(tail, head)`.
    pub fn enumerate_pathways(&self, cap: usize) -> Result<BTreeMap<(usize, usize), Vec<Path>>> {
        let mut out: BTreeMap<(usize, usize), Vec<Path>> = BTreeMap::new();
        let mut explored = 0usize;
        for v in 0..self.vertex_count() {
            let mut stack = vec![Path::trivial(v)];
            while let Some(p) = stack.pop() {
                explored += 1;
                if explored > cap {
                    return Err(Error::PathwayCap(cap));
                }
                let head = self.path_head(&p);
                for k in self.arrows_out_of(head).into_iter().rev() {
                    let mut word = p.arrows.clone();
                    word.push(k);
                    if !has_square_suffix(&word) {
                        stack.push(Path {
                            start: v,
                            arrows: word,
                        });
                    }
                }
                out.entry((v, head)).or_default().push(p);
            }
        }
        for paths in out.values_mut() {
            paths.sort_by(|a, b| a.arrows.len().cmp(&b.arrows.len()).then(a.arrows.cmp(&b.arrows)));
        }
        Ok(out)
    }

    pub fn max_pathways(&self, cap: usize) -> Result<usize> {
        Ok(self
            .enumerate_pathways(cap)?
            .values()
            .map(Vec::len)
            .max()
            .unwrap_or(0))
    }

    pub fn at_most_two_pathways(&self, cap: usize) -> Result<bool> {
        Ok(self.max_pathways(cap)? <= 2)
    }
}

/// A path, stored as its start vertex and the arrows in traversal order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Path {
    pub start: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path {
            start: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{:?}", self.start, self.arrows)
    }
}

fn numbered_ids(m: usize) -> Vec<String> {
    if m == 1 {
        vec!["a".to_string()]
    } else {
        (1..=m).map(|k| format!("a{k}")).collect()
    }
}

fn oriented(p: usize, edges: &[(usize, usize)], flip: Option<&[bool]>) -> Result<Quiver> {
    if let Some(f) = flip {
        if f.len() != edges.len() {
            return Err(Error::InvalidQuiver(format!(
                "orientation list has {} entries for {} edges",
                f.len(),
                edges.len()
            )));
        }
    }
    let ids: Vec<String> = (1..=edges.len()).map(|k| format!("a{k}")).collect();
    let arrows: Vec<(&str, usize, usize)> = edges
        .iter()
        .enumerate()
        .map(|(k, &(t, h))| {
            if flip.is_some_and(|f| f[k]) {
                (ids[k].as_str(), h, t)
            } else {
                (ids[k].as_str(), t, h)
            }
        })
        .collect();
    Quiver::new(p, &arrows)
}

/// True if the word ends in `ww` for some nonempty `w`.
fn has_square_suffix(word: &[usize]) -> bool {
    let n = word.len();
    (1..=n / 2).any(|l| word[n - l..] == word[n - 2 * l..n - l])
}

/// True if the word contains a factor `ww` anywhere.
pub fn contains_square(word: &[usize]) -> bool {
    (1..=word.len()).any(|end| has_square_suffix(&word[..end]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_paths_are_local_identities() {
        let q = Quiver::dynkin(DynkinFamily::A, 3, None).unwrap();
        let e1 = Path::trivial(0);
        let e2 = Path::trivial(1);
        assert_eq!(q.compose(&e1, &e1), Some(e1.clone()));
        assert_eq!(q.compose(&e1, &e2), None);
        let a1 = q.path(&[0]).unwrap();
        let a2 = q.path(&[1]).unwrap();
        let a2a1 = q.compose(&a2, &a1).unwrap();
        assert_eq!(a2a1.len(), 2);
        assert_eq!(q.path_name(&a2a1), "a2a1");
        assert_eq!(q.compose(&a1, &a2), None);
    }

    #[test]
    fn euler_forms() {
        let k1 = Quiver::kronecker(1).unwrap();
        for a1 in -3..4 {
            for a2 in -3..4 {
                assert_eq!(k1.euler_form(&[a1, a2], &[2, 2]).unwrap(), 2 * a2);
            }
        }
        let empty = Quiver::new(3, &[]).unwrap();
        assert_eq!(empty.euler_form(&[1, 2, 3], &[4, 5, 6]).unwrap(), 32);
        let j = Quiver::jordan(1).unwrap();
        assert_eq!(j.euler_form(&[5], &[5]).unwrap(), 0);
        assert!(matches!(
            j.euler_form(&[1, 2], &[1]),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn reflections() {
        let a2 = Quiver::dynkin(DynkinFamily::A, 2, None).unwrap();
        assert_eq!(a2.symmetrized_form(&[1, 1], &[0, 1]).unwrap(), 1);
        assert_eq!(a2.sigma(1, &[1, 1]).unwrap(), vec![1, 0]);
        let a4 = Quiver::dynkin(DynkinFamily::A, 4, None).unwrap();
        assert_eq!(a4.sigma(0, &[0, 0, 1, 0]).unwrap(), vec![0, 0, 1, 0]);
        let j = Quiver::jordan(1).unwrap();
        assert_eq!(j.symmetrized_form(&[1], &[1]).unwrap(), 0);
        assert!(matches!(j.sigma(0, &[1]), Err(Error::LoopAtVertex(_))));
    }

    #[test]
    fn two_jordan_pathways() {
        let q = Quiver::jordan(2).unwrap();
        let pw = q.enumerate_pathways(DEFAULT_PATHWAY_CAP).unwrap();
        let names: Vec<String> = pw[&(0, 0)].iter().map(|p| q.path_name(p)).collect();
        assert_eq!(names, ["e1", "a1", "a2", "a2a1", "a1a2", "a1a2a1", "a2a1a2"]);
        assert!(!names.contains(&"a2a2a1".to_string()));
        assert!(!q.at_most_two_pathways(DEFAULT_PATHWAY_CAP).unwrap());
    }

    #[test]
    fn kronecker_and_tree_pathways() {
        let k3 = Quiver::kronecker(3).unwrap();
        let pw = k3.enumerate_pathways(DEFAULT_PATHWAY_CAP).unwrap();
        assert_eq!(pw[&(0, 1)].len(), 3);
        let a2 = Quiver::dynkin(DynkinFamily::A, 2, None).unwrap();
        let pw = a2.enumerate_pathways(DEFAULT_PATHWAY_CAP).unwrap();
        assert_eq!(pw[&(0, 1)].len(), 1);
        assert!(a2.at_most_two_pathways(DEFAULT_PATHWAY_CAP).unwrap());
    }

    #[test]
    fn three_loops_hit_the_cap() {
        let q = Quiver::jordan(3).unwrap();
        assert!(matches!(q.enumerate_pathways(500), Err(Error::PathwayCap(500))));
    }

    #[test]
    fn constructions() {
        let fj = Quiver::jordan(1).unwrap().framed();
        assert_eq!(fj.vertex_count(), 2);
        assert_eq!(fj.label(1), "1♮");
        assert!(fj.is_framed(1) && !fj.is_framed(0));
        assert_eq!(fj.arrows()[1], Arrow { id: "iota1".into(), tail: 1, head: 0 });
        let d = Quiver::dynkin(DynkinFamily::A, 2, None).unwrap().double();
        assert_eq!(d.arrows()[1], Arrow { id: "a1op".into(), tail: 1, head: 0 });
        let aff = Quiver::affine_a(1, None).unwrap();
        assert_eq!((aff.vertex_count(), aff.arrows().len()), (2, 2));
        let e8 = Quiver::dynkin(DynkinFamily::E, 8, None).unwrap();
        assert_eq!(e8.arrows()[3], Arrow { id: "a4".into(), tail: 2, head: 4 });
        let d5 = Quiver::dynkin(DynkinFamily::D, 5, None).unwrap();
        assert_eq!(d5.arrows()[3], Arrow { id: "a4".into(), tail: 2, head: 4 });
        assert!(Quiver::dynkin(DynkinFamily::E, 9, None).is_err());
        assert!(Quiver::dynkin(DynkinFamily::D, 3, None).is_err());
    }
}
