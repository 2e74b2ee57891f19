//! Elementary symmetric polynomials and small helpers over eigenvalue vectors.

use std::collections::BTreeMap;

/// All elementary symmetric polynomials `e_0..=e_n` of `x`, by the
/// standard one-pass recurrence.
pub fn elementary_all(x: &[f64]) -> Vec<f64> {
    let mut e = vec![0.0; x.len() + 1];
    e[0] = 1.0;
    for (i, &xi) in x.iter().enumerate() {
        for k in (1..=i + 1).rev() {
            e[k] += xi * e[k - 1];
        }
    }
    e
}

/// The `k`-th elementary symmetric polynomial of `x`.
pub fn elementary(x: &[f64], k: usize) -> f64 {
    if k > x.len() {
        return 0.0;
    }
    elementary_all(x)[k]
}

/// Squared Vandermonde determinant `prod_{i<j} (x_i - x_j)^2`.
pub fn vandermonde_sq(x: &[f64]) -> f64 {
    let mut p = 1.0;
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            let d = x[i] - x[j];
            p *= d * d;
        }
    }
    p
}

/// Power of a nonnegative base through `exp(p ln x)` with the base clamped at
/// `1e-300`, so boundary points give a tiny positive value instead of NaN.
pub fn clamped_pow(base: f64, exponent: f64) -> f64 {
    if exponent == 0.0 {
        return 1.0;
    }
    (exponent * base.max(1e-300).ln()).exp()
}

/// Integer polynomial in `n` variables, keyed by exponent vectors.
type Poly = BTreeMap<Vec<u32>, i128>;

fn poly_mul(a: &Poly, b: &Poly) -> Option<Poly> {
    let mut out = Poly::new();
    for (ea, &ca) in a {
        for (eb, &cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let slot = out.entry(e).or_insert(0);
            *slot = slot.checked_add(ca.checked_mul(cb)?)?;
        }
    }
    out.retain(|_, c| *c != 0);
    Some(out)
}

fn elementary_poly(n: usize, k: usize) -> Poly {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| ((0..n).map(|i| (m >> i) & 1).collect(), 1))
        .collect()
}

fn vandermonde_sq_poly(n: usize) -> Option<Poly> {
    let mut p: Poly = [(vec![0; n], 1)].into_iter().collect();
    for i in 0..n {
        for j in i + 1..n {
            let mut d = Poly::new();
            let mut ei = vec![0; n];
            ei[i] = 1;
            let mut ej = vec![0; n];
            ej[j] = 1;
            d.insert(ei, 1);
            d.insert(ej, -1);
            p = poly_mul(&p, &d)?;
            p = poly_mul(&p, &d)?;
        }
    }
    Some(p)
}

fn factorial_i128(n: u32) -> Option<i128> {
    (1..=n as i128).try_fold(1i128, |acc, k| acc.checked_mul(k))
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

/// Exact `integral of e_k^m * prod_{i<j} (l_i - l_j)^2` over the simplex
/// `{l_i >= 0, sum l_i = 1}` in the coordinates `l_1..l_{n-1}`, as a reduced
/// fraction `(numerator, denominator)`.
///
/// Each monomial integrates to `prod a_i! / (sum a_i + n - 1)!`. Integer
/// arithmetic is checked; `None` means the result does not fit in `i128`.
pub fn hs_moment_exact(n: usize, k: usize, m: u32) -> Option<(i128, i128)> {
    if n < 2 || k > n {
        return None;
    }
    let mut p = vandermonde_sq_poly(n)?;
    let e = elementary_poly(n, k);
    for _ in 0..m {
        p = poly_mul(&p, &e)?;
    }
    let degree = (n * (n - 1)) as u32 + (k as u32) * m;
    let den = factorial_i128(degree + n as u32 - 1)?;
    let mut num = 0i128;
    for (exps, c) in &p {
        let w = exps.iter().try_fold(1i128, |acc, &a| acc.checked_mul(factorial_i128(a)?))?;
        num = num.checked_add(c.checked_mul(w)?)?;
    }
    let g = gcd(num, den).max(1);
    Some((num / g, den / g))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elementary_matches_direct_sums() {
        let x = [0.4, 0.3, 0.2, 0.1];
        let e = elementary_all(&x);
        assert!((e[1] - 1.0).abs() < 1e-15);
        let e2: f64 = (0..4)
            .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
            .map(|(i, j)| x[i] * x[j])
            .sum();
        assert!((e[2] - e2).abs() < 1e-15);
        let e3 = x[0] * x[1] * x[2] + x[0] * x[1] * x[3] + x[0] * x[2] * x[3] + x[1] * x[2] * x[3];
        assert!((e[3] - e3).abs() < 1e-15);
        assert!((e[4] - 0.0024).abs() < 1e-15);
        assert_eq!(elementary(&x, 5), 0.0);
    }

    #[test]
    fn vandermonde_example() {
        let v = vandermonde_sq(&[0.4, 0.3, 0.2, 0.1]);
        assert!((v - 1.44e-10).abs() < 1e-22);
        assert_eq!(vandermonde_sq(&[0.25; 4]), 0.0);
    }

    #[test]
    fn exact_moments() {
        // Delta^2 of two variables is 1 - 4 l_1 l_2 on the segment: 1/3
        assert_eq!(hs_moment_exact(2, 0, 0), Some((1, 3)));
        // e_2 = l_1 l_2 times that: 1/6 - 4/30
        assert_eq!(hs_moment_exact(2, 2, 1), Some((1, 30)));
        let (p, q) = hs_moment_exact(4, 3, 3).unwrap();
        assert!(p > 0 && q > 0);
        assert!(hs_moment_exact(4, 5, 1).is_none());
    }

    #[test]
    fn clamped_pow_is_finite_at_zero() {
        let v = clamped_pow(0.0, 53.0 / 20.0);
        assert!(v.is_finite() && (0.0..1e-300).contains(&v));
        assert!((clamped_pow(0.5, 2.0) - 0.25).abs() < 1e-15);
    }
}
