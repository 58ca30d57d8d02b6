//! Exact coefficient tables for the computable specializations: the divisor
//! functions d = d_2 and d_3, the minimal-Eisenstein coefficients
//! lambda_min(r,n) built from d_3 by Moebius inversion, and the Ramanujan
//! tau function, plus the Hecke (Pieri) recurrence these satisfy.
//!
//! Tables are sieve-based (smallest-prime-factor sieve) because the pipeline
//! sums sweep n up to 10^6; tau comes from the eta-product power series with
//! i128 coefficients, which is exact through n = 10^5.

use crate::{Error, Result};

/// Which exact coefficient family a table holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoeffKind {
    Divisor2,
    Divisor3,
    LambdaMin,
    RamanujanTau,
}

/// Smallest-prime-factor sieve together with the derived multiplicative tables.
#[derive(Debug, Clone)]
pub struct ArithTables {
    max: u64,
    spf: Vec<u32>,
    d2: Vec<i64>,
    d3: Vec<i64>,
    mu: Vec<i8>,
}

impl ArithTables {
    /// Sieve everything up to and including `max`.
    pub fn new(max: u64) -> Self {
        let n = max as usize;
        let mut spf = vec![0u32; n + 1];
        for i in 2..=n {
            if spf[i] == 0 {
                let mut j = i;
                while j <= n {
                    if spf[j] == 0 {
                        spf[j] = i as u32;
                    }
                    j += i;
                }
            }
        }
        // d_k(p^a) = C(a+k-1, k-1); multiplicative. mu from squarefree part.
        let mut d2 = vec![0i64; n + 1];
        let mut d3 = vec![0i64; n + 1];
        let mut mu = vec![0i8; n + 1];
        if n >= 1 {
            d2[1] = 1;
            d3[1] = 1;
            mu[1] = 1;
        }
        for i in 2..=n {
            let p = spf[i] as usize;
            let mut m = i;
            let mut a = 0i64;
            while m % p == 0 {
                m /= p;
                a += 1;
            }
            d2[i] = d2[m] * (a + 1);
            d3[i] = d3[m] * ((a + 1) * (a + 2) / 2);
            mu[i] = if a > 1 { 0 } else { -mu[m] };
        }
        ArithTables { max, spf, d2, d3, mu }
    }

    pub fn max(&self) -> u64 {
        self.max
    }

    fn check(&self, n: u64) -> Result<usize> {
        if n == 0 || n > self.max {
            return Err(Error::TableRange { n, max: self.max });
        }
        Ok(n as usize)
    }

    /// d_k(n) for k in {2, 3}: ordered factorizations of n into k factors.
    pub fn divisor_k(&self, k: u32, n: u64) -> Result<i64> {
        let i = self.check(n)?;
        match k {
            2 => Ok(self.d2[i]),
            3 => Ok(self.d3[i]),
            _ => Err(Error::InvalidParameter(format!("divisor_k supports k=2,3, got {k}"))),
        }
    }

    #[inline]
    pub fn d2(&self, n: u64) -> i64 {
        self.d2[n as usize]
    }

    #[inline]
    pub fn d3(&self, n: u64) -> i64 {
        self.d3[n as usize]
    }

    #[inline]
    pub fn mu(&self, n: u64) -> i64 {
        self.mu[n as usize] as i64
    }

    /// Divisors of `n` via the sieve factorization.
    pub fn divisors_of(&self, n: u64) -> Vec<u64> {
        debug_assert!(n >= 1 && n <= self.max);
        let mut ds = vec![1u64];
        let mut m = n as usize;
        while m > 1 {
            let p = self.spf[m] as u64;
            let mut e = 0;
            while m as u64 % p == 0 {
                m /= p as usize;
                e += 1;
            }
            let prev = ds.clone();
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                ds.extend(prev.iter().map(|d| d * pk));
            }
        }
        ds
    }

    /// lambda_min(r, n) = sum_{d | (r,n)} mu(d) d3(r/d) d3(n/d), exact.
    pub fn lambda_min(&self, r: u64, n: u64) -> Result<i64> {
        self.check(r)?;
        self.check(n)?;
        let g = crate::modp::gcd(r, n);
        let mut acc = 0i64;
        for d in self.divisors_of(g) {
            let m = self.mu(d);
            if m != 0 {
                acc += m * self.d3(r / d) * self.d3(n / d);
            }
        }
        Ok(acc)
    }

    /// Both sides of the Hecke relation at a prime l:
    /// lhs = lambda(1,l) * lambda(r,n),
    /// rhs = lambda(r,nl) + [l|n] lambda(rl, n/l) + [l|r] lambda(r/l, n).
    ///
    /// The third term uses lambda(r/l, n): that is the form the Pieri-rule
    /// oracle (Weyl dimensions at prime powers) validates.
    pub fn hecke_triple(&self, l: u64, r: u64, n: u64) -> Result<(i64, i64)> {
        debug_assert!(crate::modp::is_prime(l), "l must be prime");
        let lhs = self.lambda_min(1, l)? * self.lambda_min(r, n)?;
        let mut rhs = self.lambda_min(r, n * l)?;
        if n % l == 0 {
            rhs += self.lambda_min(r * l, n / l)?;
        }
        if r % l == 0 {
            rhs += self.lambda_min(r / l, n)?;
        }
        Ok((lhs, rhs))
    }

    /// Exact sum of lambda_min(n1,n2)^2 over n1^2 n2 <= x.
    pub fn ramanujan_average(&self, x: u64) -> Result<i64> {
        self.check(x)?;
        let mut acc = 0i64;
        let mut n1 = 1u64;
        while n1 * n1 <= x {
            let lim = x / (n1 * n1);
            for n2 in 1..=lim {
                let v = self.lambda_min(n1, n2)?;
                acc += v * v;
            }
            n1 += 1;
        }
        Ok(acc)
    }
}

/// Ramanujan tau table: tau(n) is the coefficient of q^n in
/// q prod_{m >= 1} (1 - q^m)^24.
///
/// Computed as the eighth power of Jacobi's series
/// prod (1-q^m)^3 = sum_{k>=0} (-1)^k (2k+1) q^{k(k+1)/2},
/// so each step is a dense-by-sparse multiplication.
#[derive(Debug, Clone)]
pub struct TauTable {
    max: u64,
    values: Vec<i128>,
}

impl TauTable {
    pub fn new(max: u64) -> Result<Self> {
        if max > 100_000 {
            return Err(Error::TableRange { n: max, max: 100_000 });
        }
        let n = max as usize;
        // Jacobi series up to degree n-1 (tau(n) needs eta^24 through q^{n-1}).
        let deg = n.saturating_sub(1);
        let mut jacobi: Vec<(usize, i128)> = Vec::new();
        let mut k = 0usize;
        loop {
            let e = k * (k + 1) / 2;
            if e > deg {
                break;
            }
            let c = (2 * k as i128 + 1) * if k % 2 == 0 { 1 } else { -1 };
            jacobi.push((e, c));
            k += 1;
        }
        let mut acc = vec![0i128; deg + 1];
        acc[0] = 1;
        for _ in 0..8 {
            let mut next = vec![0i128; deg + 1];
            for &(e, c) in &jacobi {
                for i in 0..=(deg - e) {
                    if acc[i] != 0 {
                        next[i + e] += c * acc[i];
                    }
                }
            }
            acc = next;
        }
        let mut values = vec![0i128; n + 1];
        for m in 1..=n {
            values[m] = acc[m - 1];
        }
        Ok(TauTable { max, values })
    }

    pub fn max(&self) -> u64 {
        self.max
    }

    pub fn tau(&self, n: u64) -> Result<i128> {
        if n == 0 || n > self.max {
            return Err(Error::TableRange { n, max: self.max });
        }
        Ok(self.values[n as usize])
    }

    /// Analytically normalized coefficient tau(n) / n^{11/2}.
    pub fn normalized(&self, n: u64) -> Result<f64> {
        let t = self.tau(n)? as f64;
        Ok(t / (n as f64).powf(5.5))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn divisor3_small_values() {
        let t = ArithTables::new(100);
        assert_eq!(t.divisor_k(3, 1).unwrap(), 1);
        // ordered triples for 4: (1,1,4) x3 and (1,2,2) x3
        assert_eq!(t.divisor_k(3, 4).unwrap(), 6);
        for p in [2u64, 3, 5, 7, 11, 13] {
            assert_eq!(t.divisor_k(3, p).unwrap(), 3);
        }
        assert_eq!(t.divisor_k(2, 12).unwrap(), 6);
        assert!(t.divisor_k(3, 0).is_err());
        assert!(t.divisor_k(3, 101).is_err());
        assert!(t.divisor_k(4, 10).is_err());
    }

    #[test]
    fn divisor3_brute_force_oracle() {
        // count ordered triples (a,b,c) with abc = n
        let t = ArithTables::new(60);
        for n in 1..=60u64 {
            let mut count = 0i64;
            for a in 1..=n {
                if n % a != 0 {
                    continue;
                }
                let m = n / a;
                for b in 1..=m {
                    if m % b == 0 {
                        count += 1;
                    }
                }
            }
            assert_eq!(t.d3(n), count, "n={n}");
        }
    }

    #[test]
    fn lambda_min_values() {
        let t = ArithTables::new(100);
        for n in 1..=50u64 {
            assert_eq!(t.lambda_min(1, n).unwrap(), t.d3(n));
        }
        assert_eq!(t.lambda_min(2, 2).unwrap(), 8); // 3*3 - 1*1
        assert_eq!(t.lambda_min(2, 4).unwrap(), 15); // 3*6 - 1*3
    }

    #[test]
    fn lambda_min_weyl_dimension_oracle() {
        // at prime powers, lambda_min(p^a, p^b) = (a+1)(b+1)(a+b+2)/2
        let t = ArithTables::new(13u64.pow(4) + 1);
        for p in [2u64, 3, 5, 7, 11, 13] {
            for a in 0..=4u32 {
                for b in 0..=4u32 {
                    let dim = (a as i64 + 1) * (b as i64 + 1) * (a as i64 + b as i64 + 2) / 2;
                    assert_eq!(
                        t.lambda_min(p.pow(a), p.pow(b)).unwrap(),
                        dim,
                        "p={p} a={a} b={b}"
                    );
                }
            }
        }
    }

    #[test]
    fn divisor_multiplicativity_seeded_coprime_pairs() {
        let t = ArithTables::new(1_000_000);
        let mut rng = ChaCha8Rng::seed_from_u64(0xD1);
        let mut done = 0;
        while done < 500 {
            let m = rng.gen_range(2u64..1000);
            let n = rng.gen_range(2u64..1000);
            if crate::modp::gcd(m, n) != 1 {
                continue;
            }
            assert_eq!(t.d2(m * n), t.d2(m) * t.d2(n));
            assert_eq!(t.d3(m * n), t.d3(m) * t.d3(n));
            done += 1;
        }
    }

    #[test]
    fn hecke_triple_examples() {
        let t = ArithTables::new(10_000);
        assert_eq!(t.hecke_triple(2, 1, 2).unwrap(), (9, 9));
        assert_eq!(t.hecke_triple(2, 2, 2).unwrap(), (24, 24));
        // l coprime to n: 3 d3(n) = d3(nl) by multiplicativity
        for (l, n) in [(5u64, 6u64), (7, 4), (3, 25)] {
            let (lhs, rhs) = t.hecke_triple(l, 1, n).unwrap();
            assert_eq!(lhs, 3 * t.d3(n));
            assert_eq!(rhs, t.d3(n * l));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn hecke_triple_printed_variant_fails_oracle() {
        // The variant with lambda(r/l, n*l) as the l|r term is inconsistent
        // with the Pieri rule: at (l,r,n) = (2,2,2) it gives 27, not 24.
        let t = ArithTables::new(100);
        let wrong = t.lambda_min(2, 4).unwrap()
            + t.lambda_min(4, 1).unwrap()
            + t.lambda_min(1, 4).unwrap();
        assert_eq!(wrong, 27);
        assert_eq!(t.hecke_triple(2, 2, 2).unwrap().0, 24);
    }

    #[test]
    fn hecke_triple_seeded_random() {
        let t = ArithTables::new(20_000);
        let mut rng = ChaCha8Rng::seed_from_u64(0xBEEF);
        let ls = [2u64, 3, 5, 7, 11, 13];
        for _ in 0..200 {
            let l = ls[rng.gen_range(0..ls.len())];
            let r = rng.gen_range(1u64..=500);
            let n = rng.gen_range(1u64..=500);
            let (lhs, rhs) = t.hecke_triple(l, r, n).unwrap();
            assert_eq!(lhs, rhs, "l={l} r={r} n={n}");
        }
    }

    #[test]
    fn ramanujan_average_values() {
        let t = ArithTables::new(1000);
        assert_eq!(t.ramanujan_average(1).unwrap(), 1);
        assert_eq!(t.ramanujan_average(20).unwrap(), 2352);
    }

    #[test]
    fn ramanujan_average_growth_exponent() {
        let t = ArithTables::new(1_000_000);
        let xs = [100u64, 1_000, 10_000, 100_000, 1_000_000];
        let pts: Vec<(f64, f64)> = xs
            .iter()
            .map(|&x| {
                let s = t.ramanujan_average(x).unwrap() as f64;
                ((x as f64).ln(), s.ln())
            })
            .collect();
        let slope = crate::stats::linear_fit(&pts).0;
        assert!(
            slope > 1.0 && slope <= 1.35,
            "fitted exponent {slope} outside (1, 1.35]"
        );
    }

    #[test]
    fn tau_small_values() {
        let t = TauTable::new(100).unwrap();
        let expected: [i128; 10] =
            [1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(t.tau(i as u64 + 1).unwrap(), e, "tau({})", i + 1);
        }
        assert_eq!(t.tau(6).unwrap(), t.tau(2).unwrap() * t.tau(3).unwrap());
        assert!(t.tau(0).is_err());
        assert!(t.tau(101).is_err());
    }

    #[test]
    fn tau_direct_expansion_oracle() {
        // expand q prod_{m<=N} (1-q^m)^24 directly with small-degree i128 series
        let max = 40usize;
        let mut series = vec![0i128; max];
        series[0] = 1;
        for m in 1..max {
            for _ in 0..24 {
                // multiply by (1 - q^m) in place, descending
                for i in (m..max).rev() {
                    let sub = series[i - m];
                    series[i] -= sub;
                }
            }
        }
        let t = TauTable::new(max as u64).unwrap();
        for n in 1..=max as u64 {
            assert_eq!(t.tau(n).unwrap(), series[(n - 1) as usize], "n={n}");
        }
    }

    #[test]
    fn tau_multiplicative_seeded_coprime_pairs() {
        let t = TauTable::new(10_000).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0x7A0);
        let mut done = 0;
        while done < 100 {
            let m = rng.gen_range(2u64..100);
            let n = rng.gen_range(2u64..100);
            if crate::modp::gcd(m, n) != 1 || m * n > 10_000 {
                continue;
            }
            assert_eq!(
                t.tau(m * n).unwrap(),
                t.tau(m).unwrap() * t.tau(n).unwrap(),
                "m={m} n={n}"
            );
            done += 1;
        }
    }
}
