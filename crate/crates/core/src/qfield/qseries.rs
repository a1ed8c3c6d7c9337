use super::poly::{GcdRing, QPoly, UPoly};
use super::CoefQT;
use crate::error::{Error, Result};
use crate::partition::Partition;
use num_bigint::BigInt;

fn one_minus_x_pow(e: usize) -> QPoly {
    if e == 0 {
        return QPoly::zero();
    }
    UPoly::one().sub(&UPoly::monomial(BigInt::from(1), e))
}

fn from_qpoly(p: QPoly) -> CoefQT {
    CoefQT::from_poly(UPoly::constant(p))
}

/// `(q;q)_m = (1-q)(1-q^2)...(1-q^m)`.
pub fn qpoch(m: usize) -> CoefQT {
    let mut acc = QPoly::one();
    for i in 1..=m {
        acc = acc.mul(&one_minus_x_pow(i));
    }
    from_qpoly(acc)
}

/// `(a;q)_m = (1-a)(1-aq)...(1-aq^{m-1})` for an arbitrary coefficient `a`.
pub fn q_poch_general(a: &CoefQT, m: usize) -> CoefQT {
    (0..m)
        .map(|j| CoefQT::one() - a * &CoefQT::q_pow(j as i64))
        .product()
}

/// Gaussian binomial `[a over b]_q`; zero outside `0 <= b <= a`.
pub fn qbinom(a: i64, b: i64) -> CoefQT {
    if a < 0 || b < 0 || b > a {
        return CoefQT::zero();
    }
    let b = b.min(a - b) as usize;
    let a = a as usize;
    let mut num = QPoly::one();
    let mut den = QPoly::one();
    for i in 1..=b {
        num = num.mul(&one_minus_x_pow(a - b + i));
        den = den.mul(&one_minus_x_pow(i));
    }
    from_qpoly(num.div_exact(&den).expect("q-binomial is a polynomial"))
}

/// `prod over cells x of lambda of (1 - q^{n - c(x)}) / (1 - q^{h(x)})`.
pub fn qbinom_hook(n: i64, lambda: &Partition) -> Result<CoefQT> {
    if n < 0 {
        return Err(Error::InvalidParams(format!("qbinom_hook needs n >= 0, got {n}")));
    }
    let mut num = QPoly::one();
    let mut den = QPoly::one();
    for cell in lambda.cell_stats() {
        let top = n - cell.content;
        if top == 0 {
            return Ok(CoefQT::zero());
        }
        if top < 0 {
            // 1 - q^{-e} = -q^{-e}(1 - q^e): collect the monomial separately
            let e = (-top) as usize;
            num = num.mul(&one_minus_x_pow(e)).neg();
            den = den.shift(e);
        } else {
            num = num.mul(&one_minus_x_pow(top as usize));
        }
        den = den.mul(&one_minus_x_pow(cell.hook));
    }
    CoefQT::from_fraction(UPoly::constant(num), UPoly::constant(den))
}

/// Check `(q^{-n};q)_m = q^{m(m-2n-1)/2} (-1)^m (q^{n-m+1};q)_m`.
pub fn neg_shift_poch_identity_check(n: i64, m: i64) -> bool {
    if n < 0 || m < 0 {
        return false;
    }
    let lhs = q_poch_general(&CoefQT::q_pow(-n), m as usize);
    let e = m * (m - 2 * n - 1);
    debug_assert!(e % 2 == 0);
    let sign = if m % 2 == 0 { 1 } else { -1 };
    let rhs = CoefQT::monomial(sign, e / 2, 0) * q_poch_general(&CoefQT::q_pow(n - m + 1), m as usize);
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> CoefQT {
        s.parse().unwrap()
    }

    #[test]
    fn qpoch_examples() {
        assert_eq!(qpoch(0), CoefQT::one());
        assert_eq!(qpoch(1), c("1 - q"));
        assert_eq!(qpoch(2), c("1 - q - q^2 + q^3"));
    }

    #[test]
    fn qbinom_examples() {
        assert_eq!(qbinom(2, 1), c("1 + q"));
        assert_eq!(qbinom(7, 0), CoefQT::one());
        assert_eq!(qbinom(1, 2), CoefQT::zero());
        assert_eq!(qbinom(-1, 0), CoefQT::zero());
        assert_eq!(qbinom(4, 2), c("1 + q + 2*q^2 + q^3 + q^4"));
    }

    #[test]
    fn qbinom_hook_examples() {
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(qbinom_hook(2, &p(&[2, 1])).unwrap(), c("1 + q"));
        assert_eq!(qbinom_hook(5, &Partition::empty()).unwrap(), CoefQT::one());
        assert_eq!(qbinom_hook(2, &p(&[1])).unwrap(), c("1 + q"));
        assert_eq!(qbinom_hook(1, &p(&[2])).unwrap(), CoefQT::zero());
        assert_eq!(qbinom_hook(1, &p(&[1, 1])).unwrap(), CoefQT::one());
        assert!(qbinom_hook(-1, &p(&[1])).is_err());
    }

    #[test]
    fn neg_shift_examples() {
        assert!(neg_shift_poch_identity_check(0, 0));
        assert!(neg_shift_poch_identity_check(1, 1));
        assert!(neg_shift_poch_identity_check(3, 2));
        for n in 0..8 {
            for m in 0..8 {
                assert!(neg_shift_poch_identity_check(n, m), "n={n} m={m}");
            }
        }
    }
}
