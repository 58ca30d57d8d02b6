//! Exact modular arithmetic, Dirichlet characters mod an odd prime, and the
//! classical complete sums (Gauss, Kloosterman, Ramanujan).
//!
//! Residue arithmetic uses 128-bit intermediates so every operation is exact
//! for moduli up to 2^31. Characters are realized through a discrete-log
//! table on the smallest primitive root: O(p) precompute, O(1) lookup,
//! which is the right trade because every sum downstream sweeps a full
//! period mod p anyway.

use crate::{Complex64, Error, Result};
use std::f64::consts::TAU;

/// Largest supported prime modulus.
pub const MAX_PRIME: u64 = 1 << 31;

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Canonical representative of `a` in `[0, m)`, for signed input.
#[inline]
pub fn reduce(a: i64, m: u64) -> u64 {
    let m_i = m as i64;
    let r = a % m_i;
    if r < 0 {
        (r + m_i) as u64
    } else {
        r as u64
    }
}

/// Modular inverse of `a` mod `c` via the extended Euclidean algorithm.
///
/// Errors when `gcd(a, c) != 1`.
pub fn mod_inverse(a: i64, c: u64) -> Result<u64> {
    debug_assert!(c >= 1);
    let a0 = reduce(a, c);
    if c == 1 {
        return Ok(0);
    }
    let (mut old_r, mut r) = (a0 as i128, c as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return Err(Error::NotInvertible { a, modulus: c });
    }
    let inv = ((old_s % c as i128) + c as i128) % c as i128;
    Ok(inv as u64)
}

/// e(a/c) = exp(2 pi i a / c), reduced first so the angle stays in [0, 2 pi).
pub fn unit_exp(a: i64, c: u64) -> Complex64 {
    debug_assert!(c >= 1);
    let r = reduce(a, c);
    let theta = TAU * (r as f64) / (c as f64);
    let (s, co) = theta.sin_cos();
    Complex64::new(co, s)
}

/// Deterministic Miller–Rabin for u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Prime factorization by trial division (adequate for the moduli used here).
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// All positive divisors of `n`, sorted ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut ds = vec![1u64];
    for (p, e) in factorize(n) {
        let prev = ds.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            ds.extend(prev.iter().map(|d| d * pk));
        }
    }
    ds.sort_unstable();
    ds
}

/// Moebius function of `n`.
pub fn moebius(n: u64) -> i64 {
    let mut mu = 1i64;
    for (_, e) in factorize(n) {
        if e > 1 {
            return 0;
        }
        mu = -mu;
    }
    mu
}

/// Euler totient of `n`.
pub fn euler_phi(n: u64) -> u64 {
    let mut phi = n;
    for (p, _) in factorize(n) {
        phi = phi / p * (p - 1);
    }
    phi
}

/// Ramanujan sum c_q(n) = sum over units a mod q of e(an/q), computed through
/// the divisor formula sum_{d | (q,n)} d mu(q/d). `n = 0` yields phi(q).
pub fn ramanujan_sum(q: u64, n: i64) -> i64 {
    debug_assert!(q >= 1);
    // gcd(q, 0) = q, which covers both n = 0 and q | n.
    let g = gcd(q, reduce(n, q));
    let mut s = 0i64;
    for d in divisors(g) {
        s += d as i64 * moebius(q / d);
    }
    s
}

/// An odd prime modulus together with its smallest primitive root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeModulus {
    p: u64,
    primitive_root: u64,
}

impl PrimeModulus {
    /// Verifies primality (deterministic) and finds the smallest primitive root.
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 || p > MAX_PRIME || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let factors = factorize(p - 1);
        let mut g = 2u64;
        loop {
            if factors.iter().all(|&(q, _)| pow_mod(g, (p - 1) / q, p) != 1) {
                break;
            }
            g += 1;
        }
        Ok(PrimeModulus { p, primitive_root: g })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn primitive_root(&self) -> u64 {
        self.primitive_root
    }

    /// Discrete-log table: `dlog[g^j mod p] = j` for `j` in `0..p-1`.
    pub fn dlog_table(&self) -> Vec<u32> {
        let p = self.p;
        let mut table = vec![0u32; p as usize];
        let mut x = 1u64;
        for j in 0..(p - 1) {
            table[x as usize] = j as u32;
            x = mul_mod(x, self.primitive_root, p);
        }
        table
    }
}

/// A Dirichlet character mod an odd prime, held as a full value table.
///
/// With `g` the stored primitive root, the character of index `k` is
/// determined by `chi(g^j) = e(jk/(p-1))`; index 0 is the principal character.
#[derive(Debug, Clone)]
pub struct DirichletCharacter {
    modulus: PrimeModulus,
    index: u64,
    values: Vec<Complex64>,
}

impl DirichletCharacter {
    pub fn new(modulus: PrimeModulus, index: u64) -> Result<Self> {
        let p = modulus.p();
        if index > p - 2 {
            return Err(Error::IndexOutOfRange { index, max: p - 2 });
        }
        let order = p - 1;
        let mut values = vec![Complex64::new(0.0, 0.0); p as usize];
        // chi(g^j) = e(j k / (p-1)); walk powers of g once.
        let mut x = 1u64;
        for j in 0..order {
            let phase = mul_mod(j, index, order);
            values[x as usize] = unit_exp(phase as i64, order);
            x = mul_mod(x, modulus.primitive_root(), p);
        }
        Ok(DirichletCharacter { modulus, index, values })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.modulus.p()
    }

    #[inline]
    pub fn index(&self) -> u64 {
        self.index
    }

    #[inline]
    pub fn modulus(&self) -> &PrimeModulus {
        &self.modulus
    }

    /// chi(a) for any signed a (reduced mod p; chi(0) = 0).
    #[inline]
    pub fn eval(&self, a: i64) -> Complex64 {
        self.values[reduce(a, self.p()) as usize]
    }

    /// chi(a) for a residue already in `[0, p)`.
    #[inline]
    pub fn eval_res(&self, a: u64) -> Complex64 {
        self.values[a as usize]
    }

    pub fn is_principal(&self) -> bool {
        self.index == 0
    }

    /// chi(-1), exactly +-1.
    pub fn parity(&self) -> i32 {
        if self.index % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// The conjugate character (index negated mod p-1).
    pub fn conjugate(&self) -> DirichletCharacter {
        let order = self.p() - 1;
        let k = if self.index == 0 { 0 } else { order - self.index };
        DirichletCharacter::new(self.modulus.clone(), k).expect("index in range")
    }
}

/// Construct the index-`k` character mod `modulus`.
pub fn character(modulus: &PrimeModulus, index: u64) -> Result<DirichletCharacter> {
    DirichletCharacter::new(modulus.clone(), index)
}

/// Gauss sum tau(chi) = sum_{b mod p} chi(b) e(b/p).
///
/// For nontrivial chi, |tau|^2 = p. The principal character gives -1.
pub fn gauss_sum(chi: &DirichletCharacter) -> Complex64 {
    let p = chi.p();
    let mut acc = Complex64::new(0.0, 0.0);
    for b in 1..p {
        acc += chi.eval_res(b) * unit_exp(b as i64, p);
    }
    acc
}

/// Kloosterman sum S(a,b;c) = sum over units x mod c of e((ax + b x^-1)/c).
///
/// The sum is real (x -> -x pairs terms with their conjugates); the imaginary
/// part is summed as a consistency check and discarded.
pub fn kloosterman(a: i64, b: i64, c: u64) -> f64 {
    debug_assert!(c >= 1);
    if c == 1 {
        return 1.0;
    }
    let a = reduce(a, c);
    let b = reduce(b, c);
    // e(j/c) table; every term is a lookup.
    let table: Vec<Complex64> = (0..c).map(|j| unit_exp(j as i64, c)).collect();
    let mut acc = Complex64::new(0.0, 0.0);
    for x in 1..c {
        if gcd(x, c) != 1 {
            continue;
        }
        let xinv = mod_inverse(x as i64, c).expect("unit");
        let idx = (mul_mod(a, x, c) + mul_mod(b, xinv, c)) % c;
        acc += table[idx as usize];
    }
    debug_assert!(
        acc.im.abs() < 1e-9 * (1.0 + acc.re.abs()),
        "Kloosterman imaginary part {} too large",
        acc.im
    );
    acc.re
}

/// Splits 1/(m1*m2) into a1/m1 + a2/m2 (mod 1) for coprime m1, m2:
/// returns (a1, a2) with a1 = inv(m2) mod m1, a2 = inv(m1) mod m2.
pub fn crt_split(m1: u64, m2: u64) -> (u64, u64) {
    debug_assert_eq!(gcd(m1, m2), 1);
    (
        mod_inverse(m2 as i64, m1).expect("coprime"),
        mod_inverse(m1 as i64, m2).expect("coprime"),
    )
}
