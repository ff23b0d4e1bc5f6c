//! Fundamental discriminants, the Kronecker symbol, and the arithmetic
//! invariants of `Q(√d)` used elsewhere.

use crate::exact_algebra::{int, rat, BigRat, ClosedForm};

fn is_squarefree(n: i64) -> bool {
    let mut n = n.unsigned_abs();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p * p) {
            return false;
        }
        if n.is_multiple_of(p) {
            n /= p;
        }
        p += 1;
    }
    true
}

/// `d ≡ 1 (mod 4)` squarefree, or `d = 4m` with `m ≡ 2, 3 (mod 4)`
/// squarefree. `d = 1` is excluded.
pub fn is_fundamental(d: i64) -> bool {
    if d == 0 || d == 1 {
        return false;
    }
    match d.rem_euclid(4) {
        1 => is_squarefree(d),
        0 => {
            let m = d / 4;
            matches!(m.rem_euclid(4), 2 | 3) && is_squarefree(m)
        }
        _ => false,
    }
}

/// Jacobi symbol `(a/n)` for odd positive `n`.
fn jacobi(a: i64, n: i64) -> i32 {
    debug_assert!(n > 0 && n % 2 == 1);
    let mut a = a.rem_euclid(n);
    let mut n = n;
    let mut t = 1;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            t = -t;
        }
        a %= n;
    }
    if n == 1 {
        t
    } else {
        0
    }
}

/// The Kronecker symbol `(d/n)`.
///
/// | argument      | value                                           |
/// |---------------|-------------------------------------------------|
/// | `n = 0`       | 1 if `d = ±1`, else 0                           |
/// | `n = −1`      | −1 if `d < 0`, else 1                           |
/// | `n = 2`       | 0 if `d` even; 1 if `d ≡ ±1 (8)`; −1 if `d ≡ ±3 (8)` |
/// | odd prime `p` | Legendre symbol                                 |
///
/// and complete multiplicativity in `n`.
pub fn kronecker(d: i64, n: i64) -> i32 {
    if n == 0 {
        return if d == 1 || d == -1 { 1 } else { 0 };
    }
    let mut result = 1;
    let mut n = n;
    if n < 0 {
        n = -n;
        if d < 0 {
            result = -result;
        }
    }
    let v = n.trailing_zeros();
    n >>= v;
    if v > 0 {
        if d % 2 == 0 {
            return 0;
        }
        if matches!(d.rem_euclid(8), 3 | 5) && v % 2 == 1 {
            result = -result;
        }
    }
    result * jacobi(d, n)
}

/// Number of roots of unity in `Q(√d)`, `d < 0`.
pub fn w_of(d: i64) -> i64 {
    match d {
        -3 => 6,
        -4 => 4,
        _ => 2,
    }
}

/// `S(d) = [[−d/4, 0], [0, 1]]` for `d ≡ 0 (4)`, else
/// `[[(1−d)/4, 1/2], [1/2, 1]]`; a form of discriminant `d` in matrix shape.
pub fn s_matrix(d: i64) -> [[BigRat; 2]; 2] {
    if d.rem_euclid(4) == 0 {
        [[rat(-d, 4), int(0)], [int(0), int(1)]]
    } else {
        [[rat(1 - d, 4), rat(1, 2)], [rat(1, 2), int(1)]]
    }
}

/// `Tr S(d)`.
pub fn trace_s(d: i64) -> BigRat {
    let s = s_matrix(d);
    &s[0][0] + &s[1][1]
}

/// `L(1, χ_d)` two ways: exactly from the class number formula
/// `2h = w√|d|·L(1, χ_d)/π`, and as a partial character sum whose tail is
/// summed through the digamma function.
#[derive(Clone, Debug)]
pub struct DirichletLOne {
    pub exact: ClosedForm,
    pub numeric: f64,
}

/// `L(1, χ_d)` for fundamental `d < 0`.
pub fn dirichlet_l_one(d: i64) -> DirichletLOne {
    let h = super::class_number(d);
    let w = w_of(d);
    let exact = ClosedForm::rational(rat(2 * h, w))
        .mul(&ClosedForm::pi_pow(1))
        .mul(&ClosedForm::sqrt(&rat(1, -d)));
    DirichletLOne { exact, numeric: l_one_numeric(d) }
}

/// `Σ_{n ≤ M|d|} χ(n)/n − (1/|d|) Σ_{a=1}^{|d|} χ(a)ψ(M + a/|d|)`.
///
/// The second term is exactly the tail `Σ_{n > M|d|} χ(n)/n` because the
/// character sums to zero over a period.
pub fn l_one_numeric(d: i64) -> f64 {
    use statrs::function::gamma::digamma;
    let q = d.abs();
    let m = 8;
    let chi: Vec<f64> = (0..=q).map(|a| kronecker(d, a) as f64).collect();
    let mut head = 0.0;
    for n in 1..=m * q {
        let c = chi[(n % q) as usize];
        if c != 0.0 {
            head += c / n as f64;
        }
    }
    let mut tail = 0.0;
    for a in 1..=q {
        let c = chi[a as usize];
        if c != 0.0 {
            tail -= c * digamma(m as f64 + a as f64 / q as f64);
        }
    }
    head + tail / q as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fundamental() {
        assert!(is_fundamental(-7));
        assert!(!is_fundamental(-12));
        assert!(is_fundamental(-4));
        assert!(is_fundamental(-8));
        assert!(is_fundamental(-3));
        assert!(!is_fundamental(-16));
        assert!(!is_fundamental(-9));
        assert!(is_fundamental(5));
    }

    #[test]
    fn kronecker_values() {
        assert_eq!(kronecker(-4, 3), -1);
        assert_eq!(kronecker(-3, 2), -1);
        assert_eq!(kronecker(-4, 2), 0);
        assert_eq!(kronecker(-7, 2), 1);
        assert_eq!(kronecker(-3, -1), -1);
        assert_eq!(kronecker(5, 0), 0);
    }

    #[test]
    fn invariants() {
        assert_eq!((w_of(-3), w_of(-4), w_of(-7)), (6, 4, 2));
        assert_eq!(s_matrix(-4), [[int(1), int(0)], [int(0), int(1)]]);
        assert_eq!(s_matrix(-7), [[int(2), rat(1, 2)], [rat(1, 2), int(1)]]);
        assert_eq!(trace_s(-3), int(2));
    }

    #[test]
    fn l_one_small() {
        let pi = std::f64::consts::PI;
        for (d, want) in [(-4, pi / 4.0), (-3, pi / (3.0 * 3f64.sqrt())), (-23, 3.0 * pi / 23f64.sqrt())] {
            let l = dirichlet_l_one(d);
            assert!((l.exact.to_f64() - want).abs() < 1e-14, "{d}");
            assert!((l.numeric - want).abs() < 1e-12, "{d}: {}", l.numeric - want);
        }
    }
}
