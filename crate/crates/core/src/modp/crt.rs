//! Chinese remaindering and rational reconstruction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::{inv_mod, mul_mod, sub_mod};

/// Simultaneous CRT lifting of a vector of residues.
#[derive(Clone, Debug)]
pub struct CrtVec {
    pub modulus: BigInt,
    pub values: Vec<BigInt>,
}

impl CrtVec {
    pub fn new(len: usize) -> Self {
        CrtVec {
            modulus: BigInt::one(),
            values: vec![BigInt::zero(); len],
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Folds in residues modulo a new prime `p` (coprime to the current modulus).
    pub fn add(&mut self, residues: &[u64], p: u64) {
        assert_eq!(residues.len(), self.values.len());
        let pb = BigInt::from(p);
        let mmod = self.modulus.mod_floor(&pb).to_u64().unwrap();
        let minv = inv_mod(mmod, p);
        for (v, &r) in self.values.iter_mut().zip(residues) {
            let vm = v.mod_floor(&pb).to_u64().unwrap();
            let t = mul_mod(sub_mod(r % p, vm, p), minv, p);
            if t != 0 {
                *v += &self.modulus * t;
            }
        }
        self.modulus *= p;
    }

    /// Values lifted to the symmetric range (-M/2, M/2].
    pub fn symmetric(&self) -> Vec<BigInt> {
        let half = &self.modulus >> 1;
        self.values
            .iter()
            .map(|v| if v > &half { v - &self.modulus } else { v.clone() })
            .collect()
    }

    pub fn bits(&self) -> u64 {
        self.modulus.bits()
    }
}

/// Finds n/d ≡ a (mod m) with |n|, d ≤ sqrt(m/2), if one exists.
pub fn rational_reconstruct(a: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound: BigInt = (m >> 1usize).sqrt();
    rational_reconstruct_bounded(a, m, &bound, &bound)
}

/// Finds n/d ≡ a (mod m) with |n| ≤ num_bound and 0 < d ≤ den_bound.
/// The answer is unique when 2·num_bound·den_bound < m.
pub fn rational_reconstruct_bounded(
    a: &BigInt,
    m: &BigInt,
    num_bound: &BigInt,
    den_bound: &BigInt,
) -> Option<BigRational> {
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while &r1 > num_bound {
        let (q, r) = r0.div_rem(&r1);
        r0 = r1;
        r1 = r;
        let t2 = &t0 - &q * &t1;
        t0 = t1;
        t1 = t2;
    }
    if t1.is_zero() || &t1.abs() > den_bound {
        return None;
    }
    let (n, d) = if t1.is_negative() { (-r1, -t1) } else { (r1, t1) };
    if !n.gcd(&d).is_one() {
        return None;
    }
    Some(BigRational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crt_recovers_signed_values() {
        let want: Vec<BigInt> = vec![
            BigInt::from(-123456789012345678i64) * BigInt::from(987654321u64),
            BigInt::from(42),
            BigInt::zero(),
        ];
        let mut c = CrtVec::new(3);
        for p in [1_000_000_007u64, 998_244_353, 1_000_000_009, 2_147_483_647] {
            let pb = BigInt::from(p);
            let res: Vec<u64> = want
                .iter()
                .map(|v| v.mod_floor(&pb).to_u64().unwrap())
                .collect();
            c.add(&res, p);
        }
        assert_eq!(c.symmetric(), want);
    }

    #[test]
    fn rational_reconstruction() {
        let m = BigInt::from(1_000_000_007u64) * BigInt::from(998_244_353u64);
        let x = BigRational::new(BigInt::from(-355), BigInt::from(113));
        let e = x.denom().extended_gcd(&m);
        let a = (x.numer() * e.x).mod_floor(&m);
        assert_eq!(rational_reconstruct(&a, &m), Some(x));
    }
}
