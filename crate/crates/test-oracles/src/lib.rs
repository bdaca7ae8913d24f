//! Independent reference computations for the test suites.
//!
//! Everything in this crate is deliberately written from first principles
//! (definitions, not simplified closed forms) so it can serve as an oracle
//! for the optimized implementations in `mmd-glm`. Nothing here is used by
//! production code.

/// Adaptive Simpson quadrature of `f` on `[a, b]` to absolute tolerance `tol`.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    simpson_rec(f, a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), tol, 50)
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn simpson_rec<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        left + right + delta / 15.0
    } else {
        simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
            + simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
    }
}

/// Density of N(mu, sigma2) at `y`.
pub fn normal_pdf(y: f64, mu: f64, sigma2: f64) -> f64 {
    let z = y - mu;
    (-0.5 * z * z / sigma2).exp() / (2.0 * std::f64::consts::PI * sigma2).sqrt()
}

/// Gaussian response kernel exp(-(y1-y2)^2 / (2 h^2)), stated independently
/// of the implementation under test.
pub fn gauss_kernel_y(y1: f64, y2: f64, h: f64) -> f64 {
    let d = y1 - y2;
    (-0.5 * d * d / (h * h)).exp()
}

/// Integration window covering all but ~1e-30 of the mass of N(mu, sigma2),
/// widened to also cover the kernel center `y0`.
fn window(mu: f64, sigma2: f64, y0: f64, h: f64) -> (f64, f64) {
    let s = sigma2.sqrt().max(h);
    let lo = (mu - 12.0 * s).min(y0 - 12.0 * s);
    let hi = (mu + 12.0 * s).max(y0 + 12.0 * s);
    (lo, hi)
}

/// E_{Y ~ N(mu, sigma2)}[K_y(Y, y0)] by direct quadrature of the defining
/// integral.
pub fn expected_kernel_quadrature(mu: f64, sigma2: f64, y0: f64, h: f64) -> f64 {
    let (lo, hi) = window(mu, sigma2, y0, h);
    adaptive_simpson(&|y| gauss_kernel_y(y, y0, h) * normal_pdf(y, mu, sigma2), lo, hi, 1e-10)
}

/// The defining integral form of the pairwise Gaussian-model loss:
/// double integral of K_y against the two predictive densities minus twice
/// the single integral of K_y(., y_i) against the second density.
///
/// The inner integral of the double term is evaluated by quadrature as well,
/// so this path never touches any closed form.
pub fn pairwise_loss_gaussian_quadrature(
    mu_i: f64,
    mu_j: f64,
    sigma2: f64,
    y_i: f64,
    h: f64,
) -> f64 {
    let inner = |y: f64| {
        let (lo, hi) = window(mu_j, sigma2, y, h);
        adaptive_simpson(&|yp| gauss_kernel_y(y, yp, h) * normal_pdf(yp, mu_j, sigma2), lo, hi, 1e-11)
    };
    let (lo_i, hi_i) = window(mu_i, sigma2, mu_j, h);
    let double = adaptive_simpson(&|y| inner(y) * normal_pdf(y, mu_i, sigma2), lo_i, hi_i, 1e-10);
    let single = expected_kernel_quadrature(mu_j, sigma2, y_i, h);
    double - 2.0 * single
}

/// Local (i = j) specialization of [`pairwise_loss_gaussian_quadrature`].
pub fn local_loss_gaussian_quadrature(mu_i: f64, sigma2: f64, y_i: f64, h: f64) -> f64 {
    pairwise_loss_gaussian_quadrature(mu_i, mu_i, sigma2, y_i, h)
}

/// Plain sigmoid, written independently of the library's stable variant.
pub fn sigmoid_ref(u: f64) -> f64 {
    if u >= 0.0 {
        1.0 / (1.0 + (-u).exp())
    } else {
        let e = u.exp();
        e / (1.0 + e)
    }
}

/// Geometric kernel 0.5 h (1-h)^{|y1-y2|} on {0,1} labels.
pub fn geometric_kernel_ref(y1: u8, y2: u8, h: f64) -> f64 {
    if y1 == y2 {
        0.5 * h
    } else {
        0.5 * h * (1.0 - h)
    }
}

fn bernoulli_pmf(y: u8, p: f64) -> f64 {
    if y == 1 {
        p
    } else {
        1.0 - p
    }
}

/// Exhaustive 4-term / 2-term discrete expectation defining the pairwise
/// logistic-model loss. `u_i`, `u_j` are the linear predictors.
pub fn pairwise_loss_logistic_enum(u_i: f64, u_j: f64, y_i: u8, h: f64) -> f64 {
    let pi = sigmoid_ref(u_i);
    let pj = sigmoid_ref(u_j);
    let mut double = 0.0;
    for y in [0u8, 1u8] {
        for yp in [0u8, 1u8] {
            double += geometric_kernel_ref(y, yp, h) * bernoulli_pmf(y, pi) * bernoulli_pmf(yp, pj);
        }
    }
    let mut single = 0.0;
    for y in [0u8, 1u8] {
        single += geometric_kernel_ref(y, y_i, h) * bernoulli_pmf(y, pj);
    }
    double - 2.0 * single
}

/// Local (i = j) specialization of [`pairwise_loss_logistic_enum`].
pub fn local_loss_logistic_enum(u_i: f64, y_i: u8, h: f64) -> f64 {
    pairwise_loss_logistic_enum(u_i, u_i, y_i, h)
}

/// Central finite-difference gradient of a scalar function of a vector.
pub fn central_diff_grad<F: Fn(&[f64]) -> f64>(f: &F, x: &[f64], step: f64) -> Vec<f64> {
    let mut g = vec![0.0; x.len()];
    let mut xp = x.to_vec();
    for j in 0..x.len() {
        let orig = xp[j];
        xp[j] = orig + step;
        let fp = f(&xp);
        xp[j] = orig - step;
        let fm = f(&xp);
        xp[j] = orig;
        g[j] = (fp - fm) / (2.0 * step);
    }
    g
}

/// Second finite difference of `f` along direction `d` at `x`:
/// [f(x+h d) - 2 f(x) + f(x-h d)] / h^2.
pub fn second_directional_diff<F: Fn(&[f64]) -> f64>(f: &F, x: &[f64], d: &[f64], h: f64) -> f64 {
    let plus: Vec<f64> = x.iter().zip(d).map(|(xi, di)| xi + h * di).collect();
    let minus: Vec<f64> = x.iter().zip(d).map(|(xi, di)| xi - h * di).collect();
    (f(&plus) - 2.0 * f(x) + f(&minus)) / (h * h)
}

/// Argmin of `f` over the grid lo, lo+step, ..., hi (first minimizer wins).
pub fn grid_argmin<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64, step: f64) -> f64 {
    let n = ((hi - lo) / step).round() as usize;
    let mut best_x = lo;
    let mut best_f = f(lo);
    for k in 1..=n {
        let x = lo + step * k as f64;
        let fx = f(x);
        if fx < best_f {
            best_f = fx;
            best_x = x;
        }
    }
    best_x
}

/// Golden-section minimization of a unimodal 1-D function on [a, b].
pub fn golden_section_min<F: Fn(f64) -> f64>(f: &F, mut a: f64, mut b: f64, tol: f64) -> f64 {
    let inv_phi = 0.5 * (5.0f64.sqrt() - 1.0);
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while (b - a).abs() > tol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    0.5 * (a + b)
}

/// Cyclic exact coordinate minimization using golden-section line searches.
///
/// For convex separable-nonsmooth objectives (smooth + l1) this converges to
/// the global minimizer; it shares no code path with proximal-gradient or
/// coordinate-descent solvers under test. Returns the final point.
pub fn coordinate_search_min<F: Fn(&[f64]) -> f64>(
    f: &F,
    x0: &[f64],
    radius: f64,
    sweeps: usize,
) -> Vec<f64> {
    let mut x = x0.to_vec();
    let mut r = radius;
    for _ in 0..sweeps {
        for j in 0..x.len() {
            let xj = x[j];
            let mut probe = x.clone();
            let line = |t: f64| {
                let mut p = probe.clone();
                p[j] = t;
                f(&p)
            };
            let t = golden_section_min(&line, xj - r, xj + r, 1e-12);
            // l1 kinks sit exactly at zero; try it explicitly.
            probe[j] = t;
            let ft = f(&probe);
            probe[j] = 0.0;
            let f0 = f(&probe);
            x[j] = if f0 <= ft { 0.0 } else { t };
        }
        r = (0.5 * r).max(1e-6);
    }
    x
}

/// Sample mean.
pub fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Unbiased sample variance.
pub fn sample_var(xs: &[f64]) -> f64 {
    let m = mean(xs);
    xs.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / (xs.len() as f64 - 1.0)
}

/// Sample (non-excess) kurtosis m4 / m2^2.
pub fn sample_kurtosis(xs: &[f64]) -> f64 {
    let m = mean(xs);
    let n = xs.len() as f64;
    let m2 = xs.iter().map(|x| (x - m).powi(2)).sum::<f64>() / n;
    let m4 = xs.iter().map(|x| (x - m).powi(4)).sum::<f64>() / n;
    m4 / (m2 * m2)
}

/// Pearson correlation of two equal-length samples.
pub fn pearson_corr(xs: &[f64], ys: &[f64]) -> f64 {
    let mx = mean(xs);
    let my = mean(ys);
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    for (x, y) in xs.iter().zip(ys) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
        syy += (y - my) * (y - my);
    }
    sxy / (sxx * syy).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simpson_integrates_polynomials_exactly() {
        let v = adaptive_simpson(&|x| x * x * x - 2.0 * x + 1.0, -1.0, 3.0, 1e-12);
        // antiderivative x^4/4 - x^2 + x evaluated on [-1, 3]
        let exact = (81.0 / 4.0 - 9.0 + 3.0) - (0.25 - 1.0 - 1.0);
        assert!((v - exact).abs() < 1e-9, "{v} vs {exact}");
    }

    #[test]
    fn simpson_integrates_gaussian_density_to_one() {
        let v = adaptive_simpson(&|x| normal_pdf(x, 1.5, 0.7), -12.0, 15.0, 1e-11);
        assert!((v - 1.0).abs() < 1e-9, "{v}");
    }

    #[test]
    fn expected_kernel_quadrature_matches_hand_value() {
        // mu = y0 = 0, sigma2 = 1, h = 1: closed value is 1/sqrt(2).
        let v = expected_kernel_quadrature(0.0, 1.0, 0.0, 1.0);
        assert!((v - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-8, "{v}");
    }

    #[test]
    fn logistic_enum_at_zero_predictor() {
        // pi = pj = 0.5, h = 0.5: double term = 0.5*0.5*(0.5 + 0.5*(1-0.5)) ...
        // enumerate by hand: K(eq)=0.25, K(ne)=0.125; double = 2*(0.25*0.25) + 2*(0.125*0.25)
        let double = 2.0 * (0.25 * 0.25) + 2.0 * (0.125 * 0.25);
        let single = 0.25 * 0.5 + 0.125 * 0.5;
        let v = pairwise_loss_logistic_enum(0.0, 0.0, 0, 0.5);
        assert!((v - (double - 2.0 * single)).abs() < 1e-15);
        assert!((v - -0.1875).abs() < 1e-15);
    }

    #[test]
    fn finite_diff_gradient_of_quadratic() {
        let f = |x: &[f64]| 0.5 * x.iter().map(|v| v * v).sum::<f64>();
        let g = central_diff_grad(&f, &[1.0, -2.0, 3.0], 1e-5);
        for (gi, xi) in g.iter().zip([1.0, -2.0, 3.0]) {
            assert!((gi - xi).abs() < 1e-9);
        }
    }

    #[test]
    fn coordinate_search_finds_l1_minimum() {
        // min 0.5(x-2)^2 + 1.5|x|  => x = 0.5; min 0.5(y-0.5)^2 + |y| => y = 0
        let f = |x: &[f64]| {
            0.5 * (x[0] - 2.0).powi(2) + 1.5 * x[0].abs() + 0.5 * (x[1] - 0.5).powi(2) + x[1].abs()
        };
        let x = coordinate_search_min(&f, &[1.0, 1.0], 4.0, 60);
        assert!((x[0] - 0.5).abs() < 1e-6, "{:?}", x);
        assert_eq!(x[1], 0.0, "{:?}", x);
    }
}
