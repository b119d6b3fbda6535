//! Small permutation groups with full multiplication tables.

use std::collections::{BTreeSet, HashMap};
use std::sync::Mutex;

use crate::chartable::parse_cycles;
use crate::error::{Error, Result};

/// Images of the base points 0..n.
pub type Perm = Vec<u8>;

/// Canonical form of a subgroup up to conjugacy: the lexicographically
/// smallest sorted element list among its conjugates.
pub type SubgroupKey = Vec<u16>;

#[derive(Debug)]
pub struct FiniteGroup {
    pub name: String,
    pub degree: usize,
    /// Element indices of the generators.
    pub generators: Vec<usize>,
    /// Element 0 is the identity.
    pub elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    mul: Vec<Vec<u16>>,
    inv: Vec<u16>,
    pub class_of: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
    keys: Mutex<HashMap<Vec<u16>, SubgroupKey>>,
    products: Mutex<HashMap<(SubgroupKey, SubgroupKey), Vec<SubgroupKey>>>,
    pub(crate) sym_cache: Mutex<HashMap<(SubgroupKey, usize), Vec<(SubgroupKey, i64)>>>,
}

fn compose(a: &[u8], b: &[u8]) -> Perm {
    b.iter().map(|&x| a[x as usize]).collect()
}

impl FiniteGroup {
    /// Close the generators under composition.
    pub fn generate(name: &str, degree: usize, gens: &[Perm]) -> Result<Self> {
        for g in gens {
            let mut seen = vec![false; degree];
            if g.len() != degree || g.iter().any(|&x| (x as usize) >= degree || std::mem::replace(&mut seen[x as usize], true)) {
                return Err(Error::InvalidAction(format!("{g:?} is not a permutation of {degree} points")));
            }
        }
        let id: Perm = (0..degree as u8).collect();
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut i = 0;
        while i < elements.len() {
            for g in gens {
                let h = compose(&elements[i], g);
                if !index.contains_key(&h) {
                    index.insert(h.clone(), elements.len());
                    elements.push(h);
                }
            }
            i += 1;
        }
        if elements.len() > u16::MAX as usize {
            return Err(Error::InvalidAction(format!("group of order {} is too large", elements.len())));
        }
        let n = elements.len();
        let mul: Vec<Vec<u16>> = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&compose(a, b)] as u16).collect())
            .collect();
        let inv: Vec<u16> = (0..n).map(|a| mul[a].iter().position(|&c| c == 0).expect("group") as u16).collect();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let cl: BTreeSet<usize> = (0..n).map(|g| mul[mul[g][x] as usize][inv[g] as usize] as usize).collect();
            for &y in &cl {
                class_of[y] = classes.len();
            }
            classes.push(cl.into_iter().collect());
        }
        let generators = gens.iter().map(|g| index[g]).collect();
        Ok(FiniteGroup {
            name: name.to_string(),
            degree,
            generators,
            elements,
            index,
            mul,
            inv,
            class_of,
            classes,
            keys: Mutex::new(HashMap::new()),
            products: Mutex::new(HashMap::new()),
            sym_cache: Mutex::new(HashMap::new()),
        })
    }

    /// Generators given in 1-based cycle notation, e.g. "(12)(34)".
    pub fn from_cycles(name: &str, degree: usize, gens: &[&str]) -> Result<Self> {
        let perms = gens
            .iter()
            .map(|s| {
                parse_cycles(s, degree)
                    .map(|p| p.into_iter().map(|x| x as u8).collect())
                    .ok_or_else(|| Error::Parse { what: "cycle notation", input: s.to_string() })
            })
            .collect::<Result<Vec<Perm>>>()?;
        Self::generate(name, degree, &perms)
    }

    /// The full symmetric group on `n` points.
    pub fn symmetric(n: usize) -> Result<Self> {
        let t: Perm = (0..n as u8).map(|x| if x < 2 { 1 - x } else { x }).collect();
        let c: Perm = (0..n as u8).map(|x| (x + 1) % n as u8).collect();
        Self::generate(&format!("S{n}"), n, &[t, c])
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, p: &[u8]) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Index of a ∘ b (b applied first).
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// Canonical conjugacy key of the subgroup with the given elements.
    pub fn subgroup_key(&self, h: &[usize]) -> SubgroupKey {
        let mut sorted: Vec<u16> = h.iter().map(|&x| x as u16).collect();
        sorted.sort_unstable();
        sorted.dedup();
        if let Some(k) = self.keys.lock().expect("poisoned").get(&sorted) {
            return k.clone();
        }
        let mut best: Option<Vec<u16>> = None;
        for g in 0..self.order() {
            let mut c: Vec<u16> = sorted.iter().map(|&x| self.conjugate(g, x as usize) as u16).collect();
            c.sort_unstable();
            if best.as_ref().is_none_or(|b| c < *b) {
                best = Some(c);
            }
        }
        let key = best.expect("nonempty group");
        self.keys.lock().expect("poisoned").insert(sorted, key.clone());
        key
    }

    /// Conjugacy class (index into `classes`) containing the permutation.
    pub fn class_of_perm(&self, p: &[u8]) -> Option<usize> {
        self.index_of(p).map(|i| self.class_of[i])
    }

    /// Left cosets of H, each as a sorted element list, in order of their
    /// smallest element.
    pub fn left_cosets(&self, h: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for g in 0..self.order() {
            if seen[g] {
                continue;
            }
            let mut c: Vec<usize> = h.iter().map(|&x| self.mul(g, x)).collect();
            c.sort_unstable();
            for &y in &c {
                seen[y] = true;
            }
            out.push(c);
        }
        out
    }

    /// Orbit types of G/H x G/K via double cosets: H ∩ gKg^-1 for g in H\G/K.
    pub fn product_types(&self, h: &[usize], k: &[usize]) -> Vec<SubgroupKey> {
        let mut seen = vec![false; self.order()];
        let kset: BTreeSet<usize> = k.iter().copied().collect();
        let mut out = Vec::new();
        for g in 0..self.order() {
            if seen[g] {
                continue;
            }
            for &a in h {
                for &b in k {
                    seen[self.mul(self.mul(a, g), b)] = true;
                }
            }
            // H ∩ gKg^-1 = { x in H : g^-1 x g in K }
            let gi = self.inv(g);
            let inter: Vec<usize> = h.iter().copied().filter(|&x| kset.contains(&self.conjugate(gi, x))).collect();
            out.push(self.subgroup_key(&inter));
        }
        out
    }

    /// Memoized `product_types` on canonical keys (a key is itself a subgroup).
    pub fn type_product(&self, a: &SubgroupKey, b: &SubgroupKey) -> Vec<SubgroupKey> {
        let pair = if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
        if let Some(v) = self.products.lock().expect("poisoned").get(&pair) {
            return v.clone();
        }
        let h: Vec<usize> = pair.0.iter().map(|&x| x as usize).collect();
        let k: Vec<usize> = pair.1.iter().map(|&x| x as usize).collect();
        let v = self.product_types(&h, &k);
        self.products.lock().expect("poisoned").insert(pair, v.clone());
        v
    }

    /// Size of the centralizer of an element.
    pub fn centralizer_order(&self, g: usize) -> usize {
        self.order() / self.classes[self.class_of[g]].len()
    }

    /// Cycle notation (1-based) of an element.
    pub fn cycles(&self, g: usize) -> String {
        let p = &self.elements[g];
        let mut seen = vec![false; p.len()];
        let mut out = String::new();
        for s in 0..p.len() {
            if seen[s] || p[s] as usize == s {
                continue;
            }
            out.push('(');
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                out.push_str(&(x + 1).to_string());
                x = p[x] as usize;
            }
            out.push(')');
        }
        if out.is_empty() {
            "()".to_string()
        } else {
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_group_orders() {
        let s6 = FiniteGroup::symmetric(6).unwrap();
        assert_eq!(s6.order(), 720);
        assert_eq!(s6.classes.len(), 11);
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.classes.len(), 3);
    }

    #[test]
    fn conjugate_subgroups_share_a_key() {
        let s4 = FiniteGroup::symmetric(4).unwrap();
        let t = |c: &str| s4.index_of(&parse_cycles(c, 4).unwrap().into_iter().map(|x| x as u8).collect::<Vec<_>>()).unwrap();
        let h1 = [0, t("(12)")];
        let h2 = [0, t("(34)")];
        let h3 = [0, t("(12)(34)")];
        assert_eq!(s4.subgroup_key(&h1), s4.subgroup_key(&h2));
        assert_ne!(s4.subgroup_key(&h1), s4.subgroup_key(&h3));
    }

    #[test]
    fn product_of_point_stabilizers() {
        // S3/S2 x S3/S2 = diagonal (S2) + off-diagonal (trivial)
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let h: Vec<usize> = (0..6).filter(|&g| s3.elements[g][0] == 0).collect();
        let mut types = s3.product_types(&h, &h);
        types.sort();
        assert_eq!(types.len(), 2);
        assert!(types.iter().any(|k| k.len() == 1));
        assert!(types.iter().any(|k| k.len() == 2));
    }
}
