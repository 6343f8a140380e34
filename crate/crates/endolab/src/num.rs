//! Small shared numerics: 1-D root solves, supremum scans, and fixed-order
//! Gauss-Legendre quadrature.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum NumError {
    #[error("root solve failed to converge after {0} iterations")]
    NoConvergence(usize),
    #[error("root solve needs a bracketing interval, got f({a})={fa}, f({b})={fb}")]
    NoBracket { a: f64, b: f64, fa: f64, fb: f64 },
}

/// Secant iteration with bisection fallback on a bracketing interval.
pub fn solve_secant<F: Fn(f64) -> f64>(
    f: F,
    mut a: f64,
    mut b: f64,
    tol: f64,
    max_iter: usize,
) -> Result<f64, NumError> {
    let mut fa = f(a);
    let mut fb = f(b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa * fb > 0.0 {
        return Err(NumError::NoBracket { a, b, fa, fb });
    }
    for _ in 0..max_iter {
        // secant proposal, clipped into the bracket
        let mut x = b - fb * (b - a) / (fb - fa);
        if !(x > a.min(b) && x < a.max(b)) {
            x = 0.5 * (a + b);
        }
        let fx = f(x);
        if fx == 0.0 || (b - a).abs() < tol {
            return Ok(x);
        }
        if fa * fx < 0.0 {
            b = x;
            fb = fx;
        } else {
            a = x;
            fa = fx;
        }
        if (b - a).abs() < tol {
            return Ok(0.5 * (a + b));
        }
    }
    Err(NumError::NoConvergence(max_iter))
}

/// Bisection to a sign change of f on [a, b]; f(a) and f(b) must differ in sign.
pub fn bisect<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<f64, NumError> {
    solve_secant(f, a, b, tol, 200)
}

/// Maximum of |f| over [lo, hi]: dense scan followed by a golden-section
/// polish around the best cell. Returns (max, argmax).
pub fn sup_abs_on<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, n: usize) -> (f64, f64) {
    let g = |x: f64| f(x).abs();
    let mut best = g(lo);
    let mut arg = lo;
    for i in 1..=n {
        let x = lo + (hi - lo) * i as f64 / n as f64;
        let v = g(x);
        if v > best {
            best = v;
            arg = x;
        }
    }
    // golden-section maximization on the bracketing cells
    let h = (hi - lo) / n as f64;
    let (mut a, mut b) = ((arg - h).max(lo), (arg + h).min(hi));
    let phi = 0.618_033_988_749_894_9;
    let mut x1 = b - phi * (b - a);
    let mut x2 = a + phi * (b - a);
    let mut f1 = g(x1);
    let mut f2 = g(x2);
    for _ in 0..80 {
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = g(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = g(x1);
        }
    }
    let m = 0.5 * (a + b);
    let fm = g(m);
    if fm > best {
        (fm, m)
    } else {
        (best, arg)
    }
}

const GL7_NODES: [f64; 7] = [
    -0.949_107_912_342_758_5,
    -0.741_531_185_599_394_4,
    -0.405_845_151_377_397_2,
    0.0,
    0.405_845_151_377_397_2,
    0.741_531_185_599_394_4,
    0.949_107_912_342_758_5,
];

const GL7_WEIGHTS: [f64; 7] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
    0.381_830_050_505_118_9,
    0.279_705_391_489_276_7,
    0.129_484_966_168_869_7,
];

/// 7-point Gauss-Legendre quadrature of f over [a, b].
pub fn gauss7<F: Fn(f64) -> f64>(f: F, a: f64, b: f64) -> f64 {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut acc = 0.0;
    for (x, w) in GL7_NODES.iter().zip(GL7_WEIGHTS.iter()) {
        acc += w * f(c + h * x);
    }
    acc * h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn secant_finds_log2() {
        // exp(-k/12) = 1/2  =>  k = 12 ln 2
        let k = solve_secant(|k| (-k / 12.0).exp() - 0.5, 1.0, 100.0, 1e-15, 200).unwrap();
        assert!((k - 12.0 * std::f64::consts::LN_2).abs() < 1e-12);
    }

    #[test]
    fn secant_requires_bracket() {
        assert!(solve_secant(|x| x * x + 1.0, -1.0, 1.0, 1e-12, 50).is_err());
    }

    #[test]
    fn gauss_is_exact_on_polynomials() {
        // degree 13 is integrated exactly by 7-point Gauss
        let exact = 2.0 / 13.0; // int_{-1}^{1} x^12
        let got = gauss7(|x| x.powi(12), -1.0, 1.0);
        assert!((got - exact).abs() < 1e-14);
    }

    #[test]
    fn sup_scan_finds_peak() {
        let (m, arg) = sup_abs_on(|x| (x - 0.3) * (x - 0.3) - 1.0, 0.0, 1.0, 64);
        assert!((m - 1.0).abs() < 1e-10);
        assert!((arg - 0.3).abs() < 1e-6);
    }
}
