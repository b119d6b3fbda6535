//! Hand-style substitution for the A2 case: Burnside classes are formal
//! symbols, symmetric powers and squares are rewritten by a fixed list of
//! rules, and whatever survives is the reduced residual.

use std::collections::BTreeMap;
use std::fmt;

pub const SYMBOLS: [&str; 5] = ["A", "K", "A9", "A12", "A18"];
const A: usize = 0;
const K: usize = 1;

type Mono = [u8; 5];

/// Integer polynomial in L and the formal symbols.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Formal {
    terms: BTreeMap<(i32, Mono), i64>,
}

impl Formal {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64, l: i32) -> Self {
        Self::term(c, l, [0; 5])
    }

    pub fn term(c: i64, l: i32, m: Mono) -> Self {
        let mut f = Self::zero();
        if c != 0 {
            f.terms.insert((l, m), c);
        }
        f
    }

    /// A named symbol times L^l.
    pub fn symbol(name: &str, l: i32) -> Self {
        let i = SYMBOLS.iter().position(|s| *s == name).expect("known symbol");
        let mut m = [0; 5];
        m[i] = 1;
        Self::term(1, l, m)
    }

    /// Parse a sum like "4A + 2A9 + A12 + A*A9" at L-degree 0.
    pub fn parse(s: &str) -> Self {
        let mut out = Self::zero();
        for part in s.split('+').map(str::trim).filter(|p| !p.is_empty()) {
            let digits: String = part.chars().take_while(|c| c.is_ascii_digit()).collect();
            let c: i64 = if digits.is_empty() { 1 } else { digits.parse().expect("digits") };
            let rest = &part[digits.len()..];
            let mut f = Self::constant(c, 0);
            for sym in rest.split('*').filter(|x| !x.is_empty()) {
                f = f.mul(&Self::symbol(sym, 0));
            }
            out = out.add(&f);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut t = self.terms.clone();
        for (k, &v) in &o.terms {
            let e = t.entry(*k).or_insert(0);
            *e += v;
            if *e == 0 {
                t.remove(k);
            }
        }
        Formal { terms: t }
    }

    pub fn scale(&self, c: i64) -> Self {
        Formal {
            terms: self.terms.iter().filter(|_| c != 0).map(|(k, &v)| (*k, v * c)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn shift(&self, d: i32) -> Self {
        Formal {
            terms: self.terms.iter().map(|(&(l, m), &v)| ((l + d, m), v)).collect(),
        }
    }

    /// Product followed by the square rules.
    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (&(l1, m1), &a) in &self.terms {
            for (&(l2, m2), &b) in &o.terms {
                let mut m = [0; 5];
                for i in 0..5 {
                    m[i] = m1[i] + m2[i];
                }
                out = out.add(&Self::term(a * b, l1 + l2, m));
            }
        }
        out.reduce()
    }

    /// [A]^2 = [A] + [A12] + [A18] and [K]^n = 2^{n-1}[K].
    fn reduce(&self) -> Self {
        let mut out = Self::zero();
        let mut todo: Vec<((i32, Mono), i64)> = self.terms.iter().map(|(k, &v)| (*k, v)).collect();
        while let Some(((l, mut m), c)) = todo.pop() {
            if m[K] >= 2 {
                let e = m[K] as u32;
                m[K] = 1;
                todo.push(((l, m), c * 2i64.pow(e - 1)));
            } else if m[A] >= 2 {
                m[A] -= 2;
                for (i, extra) in [(A, 1), (3, 1), (4, 1)] {
                    let mut n = m;
                    n[i] += extra;
                    todo.push(((l, n), c));
                }
            } else {
                out = out.add(&Self::term(c, l, m));
            }
        }
        out
    }
}

impl fmt::Display for Formal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (&(l, m), &c) in &self.terms {
            let mut sym: Vec<String> = Vec::new();
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    sym.push(format!("[{}]", SYMBOLS[i]));
                }
            }
            let lpart = match l {
                0 => String::new(),
                1 => "L".to_string(),
                _ => format!("L^{l}"),
            };
            let body = [sym.join(""), lpart].into_iter().filter(|s| !s.is_empty()).collect::<Vec<_>>().join("");
            let coeff = if body.is_empty() || c.abs() != 1 { c.abs().to_string() } else { String::new() };
            parts.push((c < 0, format!("{coeff}{body}")));
        }
        for (i, (neg, s)) in parts.iter().enumerate() {
            match (i, neg) {
                (0, true) => write!(f, "-{s}")?,
                (0, false) => write!(f, "{s}")?,
                (_, true) => write!(f, " - {s}")?,
                (_, false) => write!(f, " + {s}")?,
            }
        }
        Ok(())
    }
}

/// The rewrite rules for symmetric powers of A and K.
pub fn sym_a(k: usize) -> Formal {
    match k {
        0 => Formal::constant(1, 0),
        1 => Formal::parse("A"),
        2 => Formal::parse("2A + A9"),
        3 => Formal::parse("K + 2A18 + A12 + A"),
        4 => Formal::parse("4A + 2A9 + A12 + A18 + A*A9"),
        _ => panic!("no rule for Sym^{k}(A)"),
    }
}

pub fn sym_k(k: usize) -> Formal {
    match k {
        0 => Formal::constant(1, 0),
        1 => Formal::parse("K"),
        2 => Formal::parse("K + 1"),
        3 => Formal::parse("2K"),
        4 => Formal::parse("2K + 1"),
        _ => panic!("no rule for Sym^{k}(K)"),
    }
}

fn series_mul(a: &[Formal], b: &[Formal]) -> Vec<Formal> {
    (0..a.len().min(b.len()))
        .map(|k| (0..=k).fold(Formal::zero(), |s, i| s.add(&a[i].mul(&b[k - i]))))
        .collect()
}

fn series_inverse(a: &[Formal]) -> Vec<Formal> {
    let mut inv = vec![Formal::constant(1, 0)];
    for k in 1..a.len() {
        let s = (1..=k).fold(Formal::zero(), |s, j| s.add(&a[j].mul(&inv[k - j])));
        inv.push(s.neg());
    }
    inv
}

/// Sym^0..Sym^n of [S] = 1 + (1 + [A] - [K]) L + L^2 using the rules.
pub fn s_sym_series(n: usize) -> Vec<Formal> {
    let unit = |d: i32| -> Vec<Formal> { (0..=n).map(|k| Formal::constant(1, d * k as i32)).collect() };
    let a: Vec<Formal> = (0..=n).map(|k| sym_a(k).shift(k as i32)).collect();
    let kk: Vec<Formal> = (0..=n).map(|k| sym_k(k).shift(k as i32)).collect();
    let mut acc = unit(0);
    acc = series_mul(&acc, &unit(1));
    acc = series_mul(&acc, &a);
    acc = series_mul(&acc, &unit(2));
    series_mul(&acc, &series_inverse(&kk))
}

/// Right-hand side minus left-hand side of the A2 relation with every
/// class substituted.
pub fn a2_reduced_residual() -> Formal {
    let s = s_sym_series(4);
    let p = |c: &[i64]| -> Formal {
        c.iter().enumerate().fold(Formal::zero(), |acc, (k, &v)| acc.add(&Formal::constant(v, k as i32)))
    };
    let s2 = s[1].mul(&s[1]);
    let z = Formal::parse("1 + A12 + A18");
    let lhs = z.shift(4);
    let rhs = s[4]
        .sub(&p(&[1, -1, 1]).mul(&s[3]))
        .sub(&s[1].mul(&s[2]).shift(1))
        .add(&p(&[0, 1, 1, 1]).mul(&s2))
        .sub(&s[2].shift(2))
        .sub(&p(&[0, 1, 0, 2, 0, 1]).mul(&s[1]))
        .add(&p(&[0, 0, 1, 1, 0, 1, 1]))
        .add(&Formal::symbol("A", 4));
    rhs.sub(&lhs)
}

/// The residual the hand computation is expected to leave.
pub fn a2_expected_residual() -> Formal {
    Formal::parse("2A18").sub(&Formal::parse("K*A18")).shift(4)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rules_reduce_squares() {
        let a = Formal::parse("A");
        assert_eq!(a.mul(&a), Formal::parse("A + A12 + A18"));
        let k = Formal::parse("K");
        assert_eq!(k.mul(&k).mul(&k), Formal::parse("4K"));
    }

    #[test]
    fn display_is_readable() {
        let f = Formal::parse("2A18").sub(&Formal::parse("K*A18")).shift(4);
        assert_eq!(f.to_string(), "2[A18]L^4 - [K][A18]L^4");
    }
}
