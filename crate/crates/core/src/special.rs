//! Scalar special functions and quadrature helpers shared by the engines.

use std::num::NonZeroUsize;
use std::sync::OnceLock;

use gauss_quad::legendre::GaussLegendre;

/// `ln Γ(x)` for `x > 0`.
pub fn ln_gamma(x: f64) -> f64 {
    libm::lgamma(x)
}

/// `ln n!`, evaluated through the log-Gamma function.
pub fn ln_factorial(n: usize) -> f64 {
    ln_gamma(n as f64 + 1.0)
}

pub fn erf(x: f64) -> f64 {
    libm::erf(x)
}

pub fn erfc(x: f64) -> f64 {
    libm::erfc(x)
}

/// `(1 + erf x) / 2` without cancellation for large negative `x`.
pub fn half_erfc_complement(x: f64) -> f64 {
    if x < 0.0 {
        0.5 * erfc(-x)
    } else {
        1.0 - 0.5 * erfc(x)
    }
}

/// Physicists' Hermite polynomial `H_n(x)` by the three-term recurrence.
pub fn hermite(n: usize, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 2.0 * x;
    for k in 1..n {
        let next = 2.0 * x * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

const PANEL_NODES: usize = 24;

fn panel_rule() -> &'static GaussLegendre {
    static RULE: OnceLock<GaussLegendre> = OnceLock::new();
    RULE.get_or_init(|| GaussLegendre::new(NonZeroUsize::new(PANEL_NODES).unwrap()))
}

/// Quadrature nodes and weights on `[lo, hi]`: composite Gauss–Legendre with
/// panels no wider than `max_width`, never straddling any of `breaks`.
pub fn composite_nodes(lo: f64, hi: f64, breaks: &[f64], max_width: f64) -> Vec<(f64, f64)> {
    let mut cuts: Vec<f64> = breaks
        .iter()
        .copied()
        .filter(|b| *b > lo && *b < hi)
        .collect();
    cuts.push(lo);
    cuts.push(hi);
    cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    cuts.dedup();

    let rule = panel_rule();
    let mut out = Vec::new();
    for seg in cuts.windows(2) {
        let (a, b) = (seg[0], seg[1]);
        let panels = ((b - a) / max_width).ceil().max(1.0) as usize;
        let h = (b - a) / panels as f64;
        for p in 0..panels {
            let pa = a + p as f64 * h;
            let mid = pa + 0.5 * h;
            for (x, w) in rule.iter() {
                out.push((mid + 0.5 * h * x, 0.5 * h * w));
            }
        }
    }
    out
}

/// Integrate `f` over `[lo, hi]` with [`composite_nodes`].
pub fn integrate<F: FnMut(f64) -> f64>(
    lo: f64,
    hi: f64,
    breaks: &[f64],
    max_width: f64,
    mut f: F,
) -> f64 {
    composite_nodes(lo, hi, breaks, max_width)
        .into_iter()
        .map(|(x, w)| w * f(x))
        .sum()
}

/// Pairwise summation with a fixed split tree, so the result depends only on
/// the order of `values`.
pub fn pairwise_sum<T>(values: &[T]) -> T
where
    T: Copy + std::ops::Add<Output = T> + num_traits::Zero,
{
    const LEAF: usize = 16;
    if values.len() <= LEAF {
        return values.iter().fold(T::zero(), |acc, v| acc + *v);
    }
    let mid = values.len() / 2;
    pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hermite_low_orders() {
        let x = 0.37;
        assert_eq!(hermite(0, x), 1.0);
        assert!((hermite(1, x) - 2.0 * x).abs() < 1e-15);
        assert!((hermite(2, x) - (4.0 * x * x - 2.0)).abs() < 1e-14);
        assert!((hermite(3, x) - (8.0 * x.powi(3) - 12.0 * x)).abs() < 1e-14);
    }

    #[test]
    fn composite_rule_is_exact_on_piecewise_polynomials() {
        let v = integrate(-2.0, 3.0, &[0.5], 0.7, |x| if x < 0.5 { x * x } else { 1.0 });
        let exact = (0.125 + 8.0) / 3.0 + 2.5;
        assert!((v - exact).abs() < 1e-13);
    }

    #[test]
    fn pairwise_sum_matches_naive_on_integers() {
        let v: Vec<f64> = (0..1000).map(|i| i as f64).collect();
        assert_eq!(pairwise_sum(&v), 499_500.0);
    }

    #[test]
    fn half_erfc_complement_tails() {
        assert_eq!(half_erfc_complement(0.0), 0.5);
        assert!(half_erfc_complement(-20.0) > 0.0);
        assert_eq!(half_erfc_complement(30.0), 1.0);
    }
}
