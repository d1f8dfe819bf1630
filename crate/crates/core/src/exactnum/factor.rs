//! Irreducible factorization over the integers.

use algebraics::polynomial::Polynomial;
use num_bigint::BigInt;

use super::poly::IntPoly;

/// Distinct irreducible factors of `p`, each primitive with positive leading
/// coefficient, ignoring multiplicities and constants.
pub fn irreducible_factors(p: &IntPoly) -> Vec<IntPoly> {
    if p.deg() == 0 {
        return Vec::new();
    }
    if p.deg() == 1 {
        return vec![p.primitive()];
    }
    let ap: Polynomial<BigInt> = Polynomial::from(p.coeffs().to_vec());
    let factors = ap.factor();
    let mut out: Vec<IntPoly> = factors
        .polynomial_factors
        .into_iter()
        .map(|f| IntPoly::new(f.polynomial.into_coefficients()).primitive())
        .filter(|f| f.deg() >= 1)
        .collect();
    out.sort_by_key(|f| f.deg());
    out
}

pub fn is_irreducible(p: &IntPoly) -> bool {
    if p.deg() == 0 {
        return false;
    }
    let f = irreducible_factors(p);
    f.len() == 1 && f[0].deg() == p.deg()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factors_product() {
        let p = IntPoly::from_i64(&[-2, 0, 1]).mul(&IntPoly::from_i64(&[-5, 1]));
        let f = irreducible_factors(&p);
        assert_eq!(f.len(), 2);
        assert!(f.contains(&IntPoly::from_i64(&[-5, 1])));
        assert!(f.contains(&IntPoly::from_i64(&[-2, 0, 1])));
        assert!(is_irreducible(&IntPoly::from_i64(&[-2, 0, 1])));
        assert!(!is_irreducible(&p));
    }
}
