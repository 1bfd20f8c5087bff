//! Small numeric helpers shared across modules.

/// Ordinary least-squares slope of `ys` against `xs`.
///
/// Callers are responsible for taking logs first when a log-log slope is
/// wanted. Requires at least two distinct x values.
pub(crate) fn least_squares_slope(xs: &[f64], ys: &[f64]) -> f64 {
    debug_assert_eq!(xs.len(), ys.len());
    let n = xs.len() as f64;
    let x_mean = xs.iter().sum::<f64>() / n;
    let y_mean = ys.iter().sum::<f64>() / n;
    let mut cov = 0.0;
    let mut var = 0.0;
    for (&x, &y) in xs.iter().zip(ys) {
        cov += (x - x_mean) * (y - y_mean);
        var += (x - x_mean) * (x - x_mean);
    }
    cov / var
}

/// Coefficient of determination for the least-squares line of `ys` on `xs`.
#[cfg_attr(not(test), allow(dead_code))]
pub(crate) fn r_squared(xs: &[f64], ys: &[f64]) -> f64 {
    let slope = least_squares_slope(xs, ys);
    let n = xs.len() as f64;
    let x_mean = xs.iter().sum::<f64>() / n;
    let y_mean = ys.iter().sum::<f64>() / n;
    let intercept = y_mean - slope * x_mean;
    let mut ss_res = 0.0;
    let mut ss_tot = 0.0;
    for (&x, &y) in xs.iter().zip(ys) {
        let fit = intercept + slope * x;
        ss_res += (y - fit) * (y - fit);
        ss_tot += (y - y_mean) * (y - y_mean);
    }
    1.0 - ss_res / ss_tot
}

/// Relative difference `|a - b| / max(|a|, |b|)`, zero when both are zero.
pub(crate) fn rel_diff(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_of_exact_line() {
        let xs = [1.0, 2.0, 3.0, 4.0];
        let ys: Vec<f64> = xs.iter().map(|x| 3.0 * x - 1.0).collect();
        assert!((least_squares_slope(&xs, &ys) - 3.0).abs() < 1e-12);
        assert!((r_squared(&xs, &ys) - 1.0).abs() < 1e-12);
    }
}
