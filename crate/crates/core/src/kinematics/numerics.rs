//! Finite-difference weights and quadrature on (possibly non-uniform) grids.

/// Fornberg's algorithm: weights `w[k][j]` such that the `k`-th derivative at
/// `z` is approximately `Σ_j w[k][j] f(nodes[j])`, for `k = 0..=max_order`.
pub fn fornberg_weights(z: f64, nodes: &[f64], max_order: usize) -> Vec<Vec<f64>> {
    let n = nodes.len();
    let mut c = vec![vec![0.0; n]; max_order + 1];
    c[0][0] = 1.0;
    let mut c1 = 1.0;
    let mut c4 = nodes[0] - z;
    for i in 1..n {
        let mn = i.min(max_order);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = nodes[i] - z;
        for j in 0..i {
            let c3 = nodes[i] - nodes[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[k][i] = c1 * (k as f64 * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
                }
                c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
            }
            for k in (1..=mn).rev() {
                c[k][j] = (c4 * c[k][j] - k as f64 * c[k - 1][j]) / c3;
            }
            c[0][j] = c4 * c[0][j] / c3;
        }
        c1 = c2;
    }
    c
}

/// Indices of the `width`-point stencil for sample `i` of `n`: centred in the
/// interior, shifted to one side near the ends.
pub fn stencil(i: usize, n: usize, width: usize) -> std::ops::Range<usize> {
    let half = width / 2;
    let start = i.saturating_sub(half).min(n - width);
    start..start + width
}

/// First and second derivatives of sampled data, 5-point stencils.
pub fn derivatives(t: &[f64], f: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let n = t.len();
    let mut d1 = Vec::with_capacity(n);
    let mut d2 = Vec::with_capacity(n);
    for i in 0..n {
        let r = stencil(i, n, 5);
        let w = fornberg_weights(t[i], &t[r.clone()], 2);
        d1.push(r.clone().zip(&w[1]).map(|(j, wj)| wj * f[j]).sum());
        d2.push(r.zip(&w[2]).map(|(j, wj)| wj * f[j]).sum());
    }
    (d1, d2)
}

/// Cumulative integral of sampled values, starting at zero. Each interval
/// integrates the cubic through four neighbouring samples with two-point
/// Gauss–Legendre (exact for cubics), giving fourth-order accuracy.
pub fn cumulative_integral(t: &[f64], g: &[f64]) -> Vec<f64> {
    let n = t.len();
    let mut out = vec![0.0; n];
    if n < 2 {
        return out;
    }
    let width = n.min(4);
    let gl = 1.0 / 3f64.sqrt();
    for k in 0..n - 1 {
        let r = {
            let start = k.saturating_sub(1).min(n - width);
            start..start + width
        };
        let (a, b) = (t[k], t[k + 1]);
        let (mid, half) = ((a + b) / 2.0, (b - a) / 2.0);
        let mut area = 0.0;
        for z in [mid - half * gl, mid + half * gl] {
            let w = fornberg_weights(z, &t[r.clone()], 0);
            area += r.clone().zip(&w[0]).map(|(j, wj)| wj * g[j]).sum::<f64>();
        }
        out[k + 1] = out[k] + area * half;
    }
    out
}

/// Five-point Gauss–Legendre nodes and weights on `[-1, 1]`.
pub const GAUSS_LEGENDRE_5: [(f64, f64); 5] = [
    (0.0, 0.568_888_888_888_888_9),
    (-0.538_469_310_105_683_1, 0.478_628_670_499_366_5),
    (0.538_469_310_105_683_1, 0.478_628_670_499_366_5),
    (-0.906_179_845_938_664, 0.236_926_885_056_189_1),
    (0.906_179_845_938_664, 0.236_926_885_056_189_1),
];

/// Cumulative integral of a function evaluated at Gauss–Legendre nodes on
/// every grid interval.
pub fn cumulative_integral_fn<F: Fn(f64) -> f64>(t: &[f64], g: F) -> Vec<f64> {
    let mut out = vec![0.0; t.len()];
    for k in 0..t.len().saturating_sub(1) {
        let (mid, half) = ((t[k] + t[k + 1]) / 2.0, (t[k + 1] - t[k]) / 2.0);
        let area: f64 = GAUSS_LEGENDRE_5.iter().map(|(x, w)| w * g(mid + half * x)).sum();
        out[k + 1] = out[k] + area * half;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn central_weights_match_textbook() {
        let w = fornberg_weights(0.0, &[-2.0, -1.0, 0.0, 1.0, 2.0], 2);
        let d1 = [1.0 / 12.0, -2.0 / 3.0, 0.0, 2.0 / 3.0, -1.0 / 12.0];
        let d2 = [-1.0 / 12.0, 4.0 / 3.0, -5.0 / 2.0, 4.0 / 3.0, -1.0 / 12.0];
        for j in 0..5 {
            assert!((w[1][j] - d1[j]).abs() < 1e-14);
            assert!((w[2][j] - d2[j]).abs() < 1e-14);
        }
    }

    #[test]
    fn derivatives_exact_for_quartic_on_nonuniform_grid() {
        let t: Vec<f64> = (0..12).map(|k| k as f64 * 0.1 + 0.01 * (k as f64).sin()).collect();
        let f: Vec<f64> = t.iter().map(|x| x.powi(4) - 2.0 * x.powi(2)).collect();
        let (d1, _) = derivatives(&t, &f);
        for (x, d) in t.iter().zip(&d1) {
            assert!((d - (4.0 * x.powi(3) - 4.0 * x)).abs() < 1e-10);
        }
    }

    #[test]
    fn cumulative_integral_exact_for_cubic() {
        let t: Vec<f64> = (0..9).map(|k| (k as f64).powf(1.3) * 0.2).collect();
        let g: Vec<f64> = t.iter().map(|x| 3.0 * x * x - x.powi(3)).collect();
        let integ = cumulative_integral(&t, &g);
        for (x, i) in t.iter().zip(&integ) {
            assert!((i - (x.powi(3) - x.powi(4) / 4.0)).abs() < 1e-12, "{x}");
        }
    }

    #[test]
    fn stencil_positions() {
        assert_eq!(stencil(0, 10, 5), 0..5);
        assert_eq!(stencil(5, 10, 5), 3..8);
        assert_eq!(stencil(9, 10, 5), 5..10);
    }
}
