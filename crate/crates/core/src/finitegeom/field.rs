//! Table-driven GF(q²) for q ∈ {2, 3}.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("unsupported base field order {0}; only 2 and 3")]
    Unsupported(u8),
    #[error("field table check failed: {0}")]
    Axiom(String),
}

/// GF(q²) as `GF(q)[x]/(f)`, elements encoded as `a + q·b` for `a + b x`.
///
/// `f = x² + x + 1` for q = 2 and `x² + 1` for q = 3.
#[derive(Debug, Clone)]
pub struct Field {
    q: u8,
    order: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    frob: Vec<u8>,
}

pub type FieldElement = u8;

impl Field {
    pub fn new(q: u8) -> Result<Field, FieldError> {
        if q != 2 && q != 3 {
            return Err(FieldError::Unsupported(q));
        }
        let qq = q as usize;
        let order = qq * qq;
        let split = |e: usize| (e % qq, e / qq);
        let join = |a: usize, b: usize| (a % qq + qq * (b % qq)) as u8;
        let mut add = vec![0u8; order * order];
        let mut mul = vec![0u8; order * order];
        for x in 0..order {
            for y in 0..order {
                let (a, b) = split(x);
                let (c, d) = split(y);
                add[x * order + y] = join(a + c, b + d);
                // (a + bx)(c + dx) = ac + (ad + bc)x + bd x²
                let bd = b * d;
                let (r0, r1) = if q == 2 {
                    // x² = x + 1
                    (a * c + bd, a * d + b * c + bd)
                } else {
                    // x² = -1
                    (a * c + 2 * bd, a * d + b * c)
                };
                mul[x * order + y] = join(r0, r1);
            }
        }
        let mut f = Field {
            q,
            order,
            add,
            mul,
            neg: vec![0; order],
            inv: vec![0; order],
            frob: vec![0; order],
        };
        for x in 0..order as u8 {
            f.neg[x as usize] = (0..order as u8).find(|&y| f.add(x, y) == 0).unwrap();
            if x != 0 {
                f.inv[x as usize] = (0..order as u8)
                    .find(|&y| f.mul(x, y) == 1)
                    .ok_or_else(|| FieldError::Axiom(format!("{x} has no inverse")))?;
            }
            let mut p = 1u8;
            for _ in 0..q {
                p = f.mul(p, x);
            }
            f.frob[x as usize] = p;
        }
        f.verify()?;
        Ok(f)
    }

    fn verify(&self) -> Result<(), FieldError> {
        let n = self.order as u8;
        let fail = |m: &str| Err(FieldError::Axiom(m.into()));
        for x in 0..n {
            if self.add(x, 0) != x || self.mul(x, 1) != x {
                return fail("identity");
            }
            for y in 0..n {
                if self.add(x, y) != self.add(y, x) || self.mul(x, y) != self.mul(y, x) {
                    return fail("commutativity");
                }
                if self.frob(self.add(x, y)) != self.add(self.frob(x), self.frob(y))
                    || self.frob(self.mul(x, y)) != self.mul(self.frob(x), self.frob(y))
                {
                    return fail("Frobenius is not a homomorphism");
                }
                for z in 0..n {
                    if self.add(self.add(x, y), z) != self.add(x, self.add(y, z))
                        || self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z))
                    {
                        return fail("associativity");
                    }
                    if self.mul(x, self.add(y, z)) != self.add(self.mul(x, y), self.mul(x, z)) {
                        return fail("distributivity");
                    }
                }
            }
            if self.frob(self.frob(x)) != x {
                return fail("Frobenius not involutory");
            }
            let fixed = self.frob(x) == x;
            if fixed != ((x as usize) < self.q as usize) {
                return fail("Frobenius fixed field is not GF(q)");
            }
        }
        Ok(())
    }

    pub fn base(&self) -> u8 {
        self.q
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn add(&self, x: u8, y: u8) -> u8 {
        self.add[x as usize * self.order + y as usize]
    }

    #[inline]
    pub fn sub(&self, x: u8, y: u8) -> u8 {
        self.add(x, self.neg[y as usize])
    }

    #[inline]
    pub fn mul(&self, x: u8, y: u8) -> u8 {
        self.mul[x as usize * self.order + y as usize]
    }

    #[inline]
    pub fn neg(&self, x: u8) -> u8 {
        self.neg[x as usize]
    }

    /// Multiplicative inverse; `x` must be nonzero.
    #[inline]
    pub fn inv(&self, x: u8) -> u8 {
        debug_assert!(x != 0);
        self.inv[x as usize]
    }

    /// `x ↦ x^q`.
    #[inline]
    pub fn frob(&self, x: u8) -> u8 {
        self.frob[x as usize]
    }

    pub fn render(&self, x: u8) -> String {
        let (a, b) = (x % self.q, x / self.q);
        match (a, b) {
            (a, 0) => a.to_string(),
            (0, 1) => "x".into(),
            (0, b) => format!("{b}x"),
            (a, 1) => format!("{a}+x"),
            (a, b) => format!("{a}+{b}x"),
        }
    }

    /// `Σ x_i y_i^q`.
    pub fn hermitian(&self, x: &[u8], y: &[u8]) -> u8 {
        x.iter()
            .zip(y)
            .fold(0, |acc, (&a, &b)| self.add(acc, self.mul(a, self.frob(b))))
    }

    /// Reduced row-echelon form in place; returns the rank and drops zero rows.
    pub fn rref(&self, rows: &mut Vec<Vec<u8>>) -> usize {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut rank = 0;
        for col in 0..ncols {
            let Some(p) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
                continue;
            };
            rows.swap(rank, p);
            let inv = self.inv(rows[rank][col]);
            for v in rows[rank].iter_mut() {
                *v = self.mul(*v, inv);
            }
            for r in 0..rows.len() {
                if r != rank && rows[r][col] != 0 {
                    let f = rows[r][col];
                    for c in 0..ncols {
                        let t = self.mul(f, rows[rank][c]);
                        rows[r][c] = self.sub(rows[r][c], t);
                    }
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rows.truncate(rank);
        rank
    }

    pub fn rank(&self, rows: &[Vec<u8>]) -> usize {
        let mut m = rows.to_vec();
        self.rref(&mut m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_are_fields() {
        for q in [2, 3] {
            let f = Field::new(q).unwrap();
            assert_eq!(f.order(), (q * q) as usize);
            for x in 1..f.order() as u8 {
                assert_eq!(f.mul(x, f.inv(x)), 1);
            }
        }
        assert!(Field::new(5).is_err());
    }

    #[test]
    fn gf4_structure() {
        let f = Field::new(2).unwrap();
        // x = 2, x² = x + 1 = 3
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.frob(2), 3);
        assert_eq!(f.render(3), "1+x");
    }

    #[test]
    fn rref_rank() {
        let f = Field::new(3).unwrap();
        let mut m = vec![vec![1, 2, 0], vec![0, 1, 0], vec![1, 2, 0]];
        assert_eq!(f.rref(&mut m), 2);
        assert_eq!(m[0][0], 1);
        assert_eq!(m[1][1], 1);
    }
}
