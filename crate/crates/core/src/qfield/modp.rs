//! Arithmetic modulo a word-sized prime.

/// The Mersenne prime 2^61 - 1.
pub const P61: u64 = (1 << 61) - 1;

pub fn add(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

pub fn sub(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + p as u128 - b as u128) % p as u128) as u64
}

pub fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, b, p);
        }
        b = mul(b, b, p);
        e >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo the prime `p`.
pub fn inv(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "no inverse of zero");
    pow(a, p - 2, p)
}

/// Reduces a signed integer into `[0, p)`.
pub fn from_i128(c: i128, p: u64) -> u64 {
    c.rem_euclid(p as i128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_roundtrip() {
        for a in [1u64, 2, 12345, P61 - 1] {
            assert_eq!(mul(a, inv(a, P61), P61), 1);
        }
        assert_eq!(from_i128(-1, P61), P61 - 1);
    }
}
