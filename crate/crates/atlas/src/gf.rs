//! Table-driven arithmetic for the small fields the constructions need:
//! F5, F8 = F2[t]/(t^3+t+1), F9 = F3[x]/(x^2+1), and F81 = F9[y]/(y^2-nu)
//! with nu a fixed nonsquare of F9.
//!
//! F9 codes: a + b*x  ->  a + 3b.  F81 codes: a + b*y  ->  a + 9b with a, b
//! F9 codes. The chosen nu is x+1, a generator of F9* (order 8), hence a
//! nonsquare.

#[derive(Debug, Clone)]
pub struct SmallField {
    pub q: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    /// p-th power map (the Frobenius generator).
    frob: Vec<u8>,
}

impl SmallField {
    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }
    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }
    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }
    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        debug_assert!(a != 0);
        self.inv[a as usize]
    }
    #[inline]
    pub fn frob(&self, a: u8) -> u8 {
        self.frob[a as usize]
    }
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    /// Nonzero squares of the field.
    pub fn squares(&self) -> Vec<u8> {
        let mut v: Vec<u8> = (1..self.q as u8).map(|a| self.mul(a, a)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// A fixed multiplicative generator: the least element whose powers
    /// exhaust the nonzero elements.
    pub fn primitive_element(&self) -> u8 {
        'cand: for g in 1..self.q as u8 {
            let mut seen = vec![false; self.q];
            let mut x = 1u8;
            for _ in 0..self.q - 1 {
                x = self.mul(x, g);
                if seen[x as usize] {
                    continue 'cand;
                }
                seen[x as usize] = true;
            }
            return g;
        }
        unreachable!("every finite field has a primitive element")
    }

    fn from_tables(q: usize, add: Vec<u8>, mul: Vec<u8>, p: usize) -> Self {
        let mut neg = vec![0u8; q];
        let mut inv = vec![0u8; q];
        for a in 0..q as u8 {
            for b in 0..q as u8 {
                if add[a as usize * q + b as usize] == 0 {
                    neg[a as usize] = b;
                }
                if a != 0 && mul[a as usize * q + b as usize] == 1 {
                    inv[a as usize] = b;
                }
            }
        }
        let mut frob = vec![0u8; q];
        for a in 0..q as u8 {
            let mut x = 1u8;
            for _ in 0..p {
                x = mul[x as usize * q + a as usize];
            }
            frob[a as usize] = x;
        }
        SmallField {
            q,
            add,
            mul,
            neg,
            inv,
            frob,
        }
    }
}

/// Prime field F5.
pub fn gf5() -> SmallField {
    let q = 5;
    let mut add = vec![0u8; q * q];
    let mut mul = vec![0u8; q * q];
    for a in 0..q {
        for b in 0..q {
            add[a * q + b] = ((a + b) % q) as u8;
            mul[a * q + b] = ((a * b) % q) as u8;
        }
    }
    SmallField::from_tables(q, add, mul, 5)
}

/// F8 = F2[t]/(t^3 + t + 1); code = bit pattern of the polynomial.
pub fn gf8() -> SmallField {
    let q = 8;
    let mut add = vec![0u8; q * q];
    let mut mul = vec![0u8; q * q];
    let reduce = |mut v: u16| -> u8 {
        for d in (3..=4).rev() {
            if v & (1 << d) != 0 {
                v ^= 1 << d;
                v ^= 0b011 << (d - 3); // t^3 = t + 1
            }
        }
        v as u8
    };
    for a in 0..q as u16 {
        for b in 0..q as u16 {
            add[(a * 8 + b) as usize] = (a ^ b) as u8;
            let mut prod = 0u16;
            for bit in 0..3 {
                if b & (1 << bit) != 0 {
                    prod ^= a << bit;
                }
            }
            mul[(a * 8 + b) as usize] = reduce(prod);
        }
    }
    SmallField::from_tables(q, add, mul, 2)
}

/// F9 = F3[x]/(x^2 + 1); code of a + b*x is a + 3b.
pub fn gf9() -> SmallField {
    let q = 9;
    let parts = |c: u8| (c % 3, c / 3);
    let code = |a: u8, b: u8| a + 3 * b;
    let mut add = vec![0u8; q * q];
    let mut mul = vec![0u8; q * q];
    for u in 0..q as u8 {
        for v in 0..q as u8 {
            let (a, b) = parts(u);
            let (c, d) = parts(v);
            add[u as usize * q + v as usize] = code((a + c) % 3, (b + d) % 3);
            // (a+bx)(c+dx) = ac - bd + (ad+bc)x   since x^2 = -1
            let re = (a * c + 2 * (b * d)) % 3;
            let im = (a * d + b * c) % 3;
            mul[u as usize * q + v as usize] = code(re, im);
        }
    }
    SmallField::from_tables(q, add, mul, 3)
}

/// F81 as pairs over F9 with y^2 = nu; code of a + b*y is a + 9b.
#[derive(Debug, Clone)]
pub struct Gf81 {
    pub base: SmallField,
    /// The fixed nonsquare nu of F9 (a primitive element).
    pub nu: u8,
}

impl Gf81 {
    pub fn new() -> Self {
        let base = gf9();
        let nu = base.primitive_element();
        debug_assert!(!base.squares().contains(&nu));
        Gf81 { base, nu }
    }

    #[inline]
    pub fn parts(c: u8) -> (u8, u8) {
        (c % 9, c / 9)
    }
    #[inline]
    pub fn code(a: u8, b: u8) -> u8 {
        a + 9 * b
    }

    pub fn add(&self, u: u8, v: u8) -> u8 {
        let (a, b) = Self::parts(u);
        let (c, d) = Self::parts(v);
        Self::code(self.base.add(a, c), self.base.add(b, d))
    }

    pub fn mul(&self, u: u8, v: u8) -> u8 {
        let (a, b) = Self::parts(u);
        let (c, d) = Self::parts(v);
        // (a+by)(c+dy) = ac + bd*nu + (ad+bc) y
        let re = self
            .base
            .add(self.base.mul(a, c), self.base.mul(self.base.mul(b, d), self.nu));
        let im = self.base.add(self.base.mul(a, d), self.base.mul(b, c));
        Self::code(re, im)
    }

    pub fn neg(&self, u: u8) -> u8 {
        let (a, b) = Self::parts(u);
        Self::code(self.base.neg(a), self.base.neg(b))
    }

    pub fn inv(&self, u: u8) -> u8 {
        debug_assert!(u != 0);
        // (a+by)^{-1} = (a - by) / (a^2 - b^2 nu)
        let (a, b) = Self::parts(u);
        let norm = self.base.sub(
            self.base.mul(a, a),
            self.base.mul(self.base.mul(b, b), self.nu),
        );
        let ninv = self.base.inv(norm);
        Self::code(self.base.mul(a, ninv), self.base.mul(self.base.neg(b), ninv))
    }

    /// The cube map, i.e. the Frobenius generator of F81 over F3.
    pub fn cube(&self, u: u8) -> u8 {
        // (a+by)^3 = a^3 + b^3 y^3 = frob(a) + frob(b)*nu*y
        let (a, b) = Self::parts(u);
        Self::code(
            self.base.frob(a),
            self.base.mul(self.base.frob(b), self.nu),
        )
    }

    /// Conjugation over F9: u -> u^9.
    pub fn conj(&self, u: u8) -> u8 {
        let (a, b) = Self::parts(u);
        Self::code(a, self.base.neg(b))
    }

    /// Embeds an F9 code into F81.
    pub fn embed(&self, a: u8) -> u8 {
        Self::code(a, 0)
    }
}

impl Default for Gf81 {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_field_axioms(f: &SmallField) {
        let q = f.q as u8;
        for a in 0..q {
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
            for b in 0..q {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in 0..q {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                }
            }
        }
    }

    #[test]
    fn axioms_hold() {
        check_field_axioms(&gf5());
        check_field_axioms(&gf8());
        check_field_axioms(&gf9());
    }

    #[test]
    fn frobenius_orders() {
        let f9 = gf9();
        for a in 0..9u8 {
            assert_eq!(f9.frob(f9.frob(a)), a);
        }
        // x -> x^3 is not the identity on F9
        assert!((0..9u8).any(|a| f9.frob(a) != a));
        let f81 = Gf81::new();
        for u in 0..81u8 {
            let mut v = u;
            for _ in 0..4 {
                v = f81.cube(v);
            }
            assert_eq!(v, u, "Frobenius of F81 has order 4");
        }
        let mut moved = false;
        for u in 0..81u8 {
            let c2 = f81.cube(f81.cube(u));
            assert_eq!(c2, f81.conj(u));
            moved |= c2 != u;
        }
        assert!(moved);
    }

    #[test]
    fn f81_is_a_field() {
        let f = Gf81::new();
        for a in 1..81u8 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        for a in 0..81u8 {
            for b in 0..81u8 {
                assert_eq!(f.mul(a, b), f.mul(b, a));
            }
        }
    }

    #[test]
    fn conjugate_pairs_partition_f81_minus_f9() {
        let f = Gf81::new();
        let outside: Vec<u8> = (0..81u8).filter(|&u| Gf81::parts(u).1 != 0).collect();
        assert_eq!(outside.len(), 72);
        for &u in &outside {
            assert_ne!(f.conj(u), u);
            assert!(outside.contains(&f.conj(u)));
        }
    }
}
