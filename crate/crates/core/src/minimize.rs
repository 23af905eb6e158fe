//! One-dimensional minimization by golden-section search.

/// `(sqrt(5) - 1) / 2`
const INV_PHI: f64 = 0.618_033_988_749_894_9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GoldenResult {
    pub xmin: f64,
    pub fmin: f64,
    pub iters: usize,
}

/// Minimizes `f` on `[lo, hi]` until the bracket is narrower than `xtol`.
///
/// Assumes `f` is unimodal on the bracket. The returned point is the best
/// of the final interior probes and the two end points.
pub fn golden_section<F>(mut f: F, lo: f64, hi: f64, xtol: f64) -> GoldenResult
where
    F: FnMut(f64) -> f64,
{
    let (mut a, mut b) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let fa = f(a);
    let fb = f(b);
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    let mut iters = 0;
    while (b - a) > xtol && iters < 500 {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
        iters += 1;
    }
    let mut best = (lo, fa);
    for cand in [(hi, fb), (x1, f1), (x2, f2)] {
        if cand.1 < best.1 {
            best = cand;
        }
    }
    GoldenResult { xmin: best.0, fmin: best.1, iters }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parabola() {
        let r = golden_section(|x| (x - 1.3).powi(2), -4.0, 5.0, 1e-10);
        assert!((r.xmin - 1.3).abs() < 1e-9);
        assert!(r.fmin < 1e-18);
    }

    #[test]
    fn minimum_at_endpoint() {
        let r = golden_section(|x| x, 0.0, 1.0, 1e-12);
        assert_eq!(r.xmin, 0.0);
        assert_eq!(r.fmin, 0.0);
    }

    #[test]
    fn reversed_bracket_and_kink() {
        let r = golden_section(|x: f64| (x - 0.25).abs(), 1.0, -1.0, 1e-12);
        assert!((r.xmin - 0.25).abs() < 1e-11);
    }

    #[test]
    fn cosine_well() {
        let r = golden_section(|x: f64| x.cos(), 2.0, 4.5, 1e-12);
        assert!((r.xmin - std::f64::consts::PI).abs() < 1e-6);
        assert!((r.fmin + 1.0).abs() < 1e-12);
    }
}
