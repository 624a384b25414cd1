//! Closed-form thresholds. All of them are sufficient conditions, not
//! necessary ones: colourings with the stated property often exist well below.

use num_rational::Ratio;

use crate::error::{Error, Result};

fn checked_pow(base: u128, exp: usize) -> Result<u128> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base).ok_or_else(|| Error::TooLarge(format!("{base}^{exp} overflows")))?;
    }
    Ok(acc)
}

/// Smallest `n` with `n >= 2 (delta^(g-1) - 1) / (delta - 1) - 1`: above it a
/// graph of order `n`, minimum degree `delta` and girth `g` exists.
pub fn sauer_order_bound(delta: usize, g: usize) -> Result<u128> {
    if delta < 3 || g < 3 {
        return Err(Error::invalid(format!("need delta >= 3 and g >= 3, got delta={delta}, g={g}")));
    }
    let top = checked_pow(delta as u128, g - 1)? - 1;
    // geometric sum, so the division is exact
    Ok(2 * (top / (delta as u128 - 1)) - 1)
}

/// `ceil(2 ((l(k-1) + k)^4 - 1) / ((l + 1)(k - 1))) - 1`; from this order on
/// `K_n` has a 2-colouring with `l` disjoint proper trees per `k`-subset.
pub fn explicit_threshold(k: usize, l: usize) -> Result<u128> {
    if k < 3 || l < 1 {
        return Err(Error::invalid(format!("need k >= 3 and l >= 1, got k={k}, l={l}")));
    }
    let delta = (l * (k - 1) + k) as u128;
    let num = 2 * (checked_pow(delta, 4)? - 1);
    let den = ((l + 1) * (k - 1)) as u128;
    Ok(Ratio::new(num, den).ceil().to_integer() - 1)
}

/// `2k(k + l) ln(1 / (1 - 2^-(2k-3)))`.
pub fn probabilistic_threshold(k: usize, l: usize) -> Result<f64> {
    if k < 3 || l < 1 {
        return Err(Error::invalid(format!("need k >= 3 and l >= 1, got k={k}, l={l}")));
    }
    let q = 0.5f64.powi(2 * k as i32 - 3);
    Ok(-2.0 * (k * (k + l)) as f64 * (-q).ln_1p())
}

/// `a = 1 + 1/(2^(2k-3) - 1)`, exactly.
pub fn base_a(k: usize) -> Result<Ratio<u128>> {
    if k < 3 {
        return Err(Error::invalid(format!("need k >= 3, got {k}")));
    }
    if 2 * k - 3 > 127 {
        return Err(Error::TooLarge(format!("2^(2k-3) overflows for k={k}")));
    }
    let p = 1u128 << (2 * k - 3);
    Ok(Ratio::new(p, p - 1))
}

pub fn base_a_f64(k: usize) -> Result<f64> {
    let a = base_a(k)?;
    Ok(*a.numer() as f64 / *a.denom() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sauer_examples() {
        assert_eq!(sauer_order_bound(3, 3).unwrap(), 7);
        assert_eq!(sauer_order_bound(5, 5).unwrap(), 311);
        assert_eq!(sauer_order_bound(3, 5).unwrap(), 79);
        assert!(sauer_order_bound(2, 5).is_err());
        assert!(sauer_order_bound(3, 2).is_err());
    }

    #[test]
    fn explicit_examples() {
        assert_eq!(explicit_threshold(3, 1).unwrap(), 311);
        assert_eq!(explicit_threshold(3, 2).unwrap(), 799);
        assert!(explicit_threshold(2, 1).is_err());
        for k in 3..8 {
            for l in 1..6 {
                assert_eq!(explicit_threshold(k, l).unwrap(), sauer_order_bound(l * (k - 1) + k, 5).unwrap());
            }
        }
    }

    #[test]
    fn probabilistic_examples() {
        let v = probabilistic_threshold(3, 1).unwrap();
        assert!((v - 24.0 * (8.0f64 / 7.0).ln()).abs() < 1e-12);
        assert_eq!(format!("{v:.3}"), "3.205");
        let v = probabilistic_threshold(3, 2).unwrap();
        assert_eq!(format!("{v:.3}"), "4.006");
        for k in 3..7 {
            let mut prev = 0.0;
            for l in 1..6 {
                let v = probabilistic_threshold(k, l).unwrap();
                assert!(v > prev);
                prev = v;
            }
        }
    }

    #[test]
    fn base_a_examples() {
        assert_eq!(base_a(3).unwrap(), Ratio::new(8, 7));
        assert_eq!(base_a(4).unwrap(), Ratio::new(32, 31));
        assert_eq!(format!("{:.6}", base_a_f64(3).unwrap()), "1.142857");
        for k in 3..20 {
            assert!(base_a_f64(k).unwrap() > 1.0);
        }
        assert!(base_a(2).is_err());
    }
}
