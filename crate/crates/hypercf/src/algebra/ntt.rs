//! Integer polynomial products via a number-theoretic transform.
//!
//! Multiplication of two coefficient vectors with entries < 102 and lengths
//! up to a few million produces convolution coefficients bounded by
//! 101^2 * 4*10^6 < 2^46, far below the Goldilocks prime 2^64 - 2^32 + 1,
//! so a single NTT modulus recovers the integer convolution exactly. The
//! caller reduces the result into its own field.

/// 2^64 - 2^32 + 1.
const Q: u64 = 0xffff_ffff_0000_0001;
/// Primitive root of Q.
const GEN: u64 = 7;

#[inline]
fn add_q(a: u64, b: u64) -> u64 {
    let (s, over) = a.overflowing_add(b);
    if over || s >= Q {
        s.wrapping_sub(Q)
    } else {
        s
    }
}

#[inline]
fn sub_q(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a.wrapping_sub(b).wrapping_add(Q)
    }
}

/// Goldilocks reduction of a 128-bit product: 2^64 = 2^32 - 1 and
/// 2^96 = -1 modulo Q.
#[inline]
fn mul_q(a: u64, b: u64) -> u64 {
    let t = (a as u128) * (b as u128);
    let lo = t as u64;
    let hi = (t >> 64) as u64;
    let hi_lo = hi & 0xffff_ffff;
    let hi_hi = hi >> 32;
    // lo + hi_lo * (2^32 - 1) - hi_hi
    let mid = (hi_lo << 32) - hi_lo;
    sub_q(add_q(lo, mid), hi_hi)
}

fn pow_q(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_q(acc, b);
        }
        b = mul_q(b, b);
        e >>= 1;
    }
    acc
}

/// In-place radix-2 NTT of length `n = data.len()` (a power of two).
fn ntt(data: &mut [u64], invert: bool) {
    let n = data.len();
    debug_assert!(n.is_power_of_two());

    // bit reversal
    let mut j = 0usize;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j |= bit;
        if i < j {
            data.swap(i, j);
        }
    }

    let mut len = 2;
    while len <= n {
        let mut w = pow_q(GEN, (Q - 1) / len as u64);
        if invert {
            w = pow_q(w, Q - 2);
        }
        for start in (0..n).step_by(len) {
            let mut wn = 1u64;
            for i in start..start + len / 2 {
                let u = data[i];
                let v = mul_q(data[i + len / 2], wn);
                data[i] = add_q(u, v);
                data[i + len / 2] = sub_q(u, v);
                wn = mul_q(wn, w);
            }
        }
        len <<= 1;
    }

    if invert {
        let n_inv = pow_q(n as u64, Q - 2);
        for x in data.iter_mut() {
            *x = mul_q(*x, n_inv);
        }
    }
}

/// Exact integer convolution of `a` and `b`; entries must satisfy
/// `len * max(a) * max(b) < Q`.
pub fn convolve(a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let out_len = a.len() + b.len() - 1;
    let n = out_len.next_power_of_two();
    let mut fa = vec![0u64; n];
    let mut fb = vec![0u64; n];
    fa[..a.len()].copy_from_slice(a);
    fb[..b.len()].copy_from_slice(b);
    ntt(&mut fa, false);
    ntt(&mut fb, false);
    for (x, y) in fa.iter_mut().zip(fb.iter()) {
        *x = mul_q(*x, *y);
    }
    ntt(&mut fa, true);
    fa.truncate(out_len);
    fa
}

#[cfg(test)]
mod tests {
    use super::*;

    fn convolve_naive(a: &[u64], b: &[u64]) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    #[test]
    fn matches_schoolbook() {
        let a: Vec<u64> = (0..97).map(|i| (i * 37 + 11) % 101).collect();
        let b: Vec<u64> = (0..64).map(|i| (i * 53 + 29) % 101).collect();
        assert_eq!(convolve(&a, &b), convolve_naive(&a, &b));
    }

    #[test]
    fn goldilocks_mul() {
        // (Q-1)^2 mod Q = 1
        assert_eq!(mul_q(Q - 1, Q - 1), 1);
        assert_eq!(pow_q(GEN, Q - 1), 1);
    }
}
