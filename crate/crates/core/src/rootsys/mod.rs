//! The rank-7 lattice spanned by E0..E6, its 72 roots and 27 lines, and the
//! Weyl group W(E6) acting on them.

mod weyl;

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub use weyl::{weyl, ConjClass, Perm, WeylGroup};

/// Coefficients of E0..E6.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LatticeVector(pub [i64; 7]);

impl LatticeVector {
    pub fn basis(i: usize) -> Self {
        let mut v = [0; 7];
        v[i] = 1;
        LatticeVector(v)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut v = self.0;
        for (a, b) in v.iter_mut().zip(o.0) {
            *a += b;
        }
        LatticeVector(v)
    }

    pub fn scale(&self, s: i64) -> Self {
        LatticeVector(self.0.map(|a| a * s))
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Pairing with (E0,E0) = 1, (Ei,Ej) = -delta_ij, and the canonical class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lattice {
    pub canonical: LatticeVector,
}

pub fn build_lattice() -> Lattice {
    Lattice {
        canonical: LatticeVector([-3, 1, 1, 1, 1, 1, 1]),
    }
}

impl Lattice {
    pub fn pairing(&self, a: &LatticeVector, b: &LatticeVector) -> i64 {
        a.0[0] * b.0[0] - (1..7).map(|i| a.0[i] * b.0[i]).sum::<i64>()
    }

    pub fn is_root(&self, v: &LatticeVector) -> bool {
        self.pairing(v, v) == -2 && self.pairing(v, &self.canonical) == 0
    }

    pub fn is_line(&self, v: &LatticeVector) -> bool {
        self.pairing(v, v) == -1 && self.pairing(v, &self.canonical) == -1
    }

    /// beta -> beta + (alpha, beta) alpha
    pub fn reflect(&self, alpha: &LatticeVector, beta: &LatticeVector) -> LatticeVector {
        beta.add(&alpha.scale(self.pairing(alpha, beta)))
    }
}

/// An ordered vector list with reverse lookup.
#[derive(Debug, Clone)]
pub struct VectorSet {
    pub vectors: Vec<LatticeVector>,
    index: HashMap<LatticeVector, usize>,
}

pub type RootSet = VectorSet;
pub type LineSet = VectorSet;

impl VectorSet {
    fn new(mut vectors: Vec<LatticeVector>) -> Self {
        vectors.sort();
        vectors.dedup();
        let index = vectors.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        VectorSet { vectors, index }
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn position(&self, v: &LatticeVector) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &LatticeVector> {
        self.vectors.iter()
    }
}

fn e(i: usize) -> LatticeVector {
    LatticeVector::basis(i)
}

/// Ei - Ej, +-(E0 - Ei - Ej - Ek), +-(2E0 - E1 - ... - E6).
pub fn enumerate_roots(lat: &Lattice) -> Result<RootSet> {
    let mut v = Vec::new();
    for i in 1..7 {
        for j in 1..7 {
            if i != j {
                v.push(e(i).add(&e(j).neg()));
            }
        }
    }
    for i in 1..7 {
        for j in i + 1..7 {
            for k in j + 1..7 {
                let r = e(0).add(&e(i).neg()).add(&e(j).neg()).add(&e(k).neg());
                v.push(r);
                v.push(r.neg());
            }
        }
    }
    let big = LatticeVector([2, -1, -1, -1, -1, -1, -1]);
    v.push(big);
    v.push(big.neg());
    let set = VectorSet::new(v);
    if let Some(bad) = set.iter().find(|r| !lat.is_root(r)) {
        return Err(Error::NotARoot(bad.0.to_vec(), lat.pairing(bad, bad)));
    }
    if set.len() != 72 {
        return Err(Error::CardinalityMismatch {
            what: "roots",
            expected: 72,
            found: set.len(),
        });
    }
    Ok(set)
}

/// Ei, E0 - Ei - Ej, 2E0 - (E1 + ... + E6) + Ei.
pub fn enumerate_lines(lat: &Lattice) -> Result<LineSet> {
    let mut v = Vec::new();
    for i in 1..7 {
        v.push(e(i));
    }
    for i in 1..7 {
        for j in i + 1..7 {
            v.push(e(0).add(&e(i).neg()).add(&e(j).neg()));
        }
    }
    for i in 1..7 {
        v.push(LatticeVector([2, -1, -1, -1, -1, -1, -1]).add(&e(i)));
    }
    let set = VectorSet::new(v);
    let valid = set.iter().all(|l| lat.is_line(l));
    if set.len() != 27 || !valid {
        return Err(Error::CardinalityMismatch {
            what: "lines",
            expected: 27,
            found: set.iter().filter(|l| lat.is_line(l)).count(),
        });
    }
    Ok(set)
}

/// The reflection in `alpha` as a permutation of `roots`.
pub fn reflection(lat: &Lattice, roots: &RootSet, alpha: &LatticeVector) -> Result<Perm> {
    let n = lat.pairing(alpha, alpha);
    if n != -2 {
        return Err(Error::NotARoot(alpha.0.to_vec(), n));
    }
    let mut p = [0u8; 72];
    for (i, r) in roots.iter().enumerate() {
        let img = lat.reflect(alpha, r);
        p[i] = roots.position(&img).ok_or_else(|| Error::NotARoot(img.0.to_vec(), lat.pairing(&img, &img)))? as u8;
    }
    Ok(p)
}

/// The fixed simple system E1-E2, ..., E5-E6, E0-E1-E2-E3.
pub fn simple_roots() -> [LatticeVector; 6] {
    [
        LatticeVector([0, 1, -1, 0, 0, 0, 0]),
        LatticeVector([0, 0, 1, -1, 0, 0, 0]),
        LatticeVector([0, 0, 0, 1, -1, 0, 0]),
        LatticeVector([0, 0, 0, 0, 1, -1, 0]),
        LatticeVector([0, 0, 0, 0, 0, 1, -1]),
        LatticeVector([1, -1, -1, -1, 0, 0, 0]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairing_values() {
        let lat = build_lattice();
        assert_eq!(lat.pairing(&e(0), &e(0)), 1);
        assert_eq!(lat.pairing(&e(1), &e(1)), -1);
        assert_eq!(lat.pairing(&e(1), &e(2)), 0);
        assert_eq!(lat.pairing(&lat.canonical, &lat.canonical), 3);
    }

    #[test]
    fn counts_and_defining_equations() {
        let lat = build_lattice();
        let roots = enumerate_roots(&lat).unwrap();
        let lines = enumerate_lines(&lat).unwrap();
        assert_eq!(roots.len(), 72);
        assert_eq!(lines.len(), 27);
        for r in roots.iter() {
            assert_eq!(lat.pairing(r, r), -2);
            assert_eq!(lat.pairing(r, &lat.canonical), 0);
            assert!(roots.position(&r.neg()).is_some());
        }
        for l in lines.iter() {
            assert_eq!(lat.pairing(l, l), -1);
            assert_eq!(lat.pairing(l, &lat.canonical), -1);
        }
        assert!(roots.vectors.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn brute_force_finds_no_other_roots_or_lines() {
        // Small-coefficient search: every solution lies in the listed families.
        let lat = build_lattice();
        let roots = enumerate_roots(&lat).unwrap();
        let lines = enumerate_lines(&lat).unwrap();
        let (mut nr, mut nl) = (0, 0);
        let range = -3i64..=3;
        let mut v = [0i64; 7];
        fn rec(k: usize, v: &mut [i64; 7], range: &std::ops::RangeInclusive<i64>, f: &mut dyn FnMut(&[i64; 7])) {
            if k == 7 {
                f(v);
                return;
            }
            for x in range.clone() {
                v[k] = x;
                rec(k + 1, v, range, f);
            }
        }
        rec(0, &mut v, &range, &mut |w| {
            let lv = LatticeVector(*w);
            if lat.is_root(&lv) {
                assert!(roots.position(&lv).is_some());
                nr += 1;
            }
            if lat.is_line(&lv) {
                assert!(lines.position(&lv).is_some());
                nl += 1;
            }
        });
        assert_eq!((nr, nl), (72, 27));
    }

    #[test]
    fn reflection_is_an_involution_sending_alpha_to_minus_alpha() {
        let lat = build_lattice();
        let roots = enumerate_roots(&lat).unwrap();
        for a in roots.iter() {
            let p = reflection(&lat, &roots, a).unwrap();
            for i in 0..72 {
                assert_eq!(p[p[i] as usize] as usize, i);
            }
            let ia = roots.position(a).unwrap();
            assert_eq!(p[ia] as usize, roots.position(&a.neg()).unwrap());
            assert_eq!(lat.reflect(a, &lat.canonical), lat.canonical);
            let x = LatticeVector([3, -1, 4, 1, -5, 9, 2]);
            let y = LatticeVector([2, 7, -1, 8, 2, -8, 1]);
            assert_eq!(lat.pairing(&lat.reflect(a, &x), &lat.reflect(a, &y)), lat.pairing(&x, &y));
        }
    }

    #[test]
    fn non_root_is_rejected() {
        let lat = build_lattice();
        let roots = enumerate_roots(&lat).unwrap();
        assert!(matches!(reflection(&lat, &roots, &e(1)), Err(Error::NotARoot(_, -1))));
    }
}
