//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line (run with `--nocapture` to see them on success).
//!
//! The parameter grid is alpha in {0,1,3} x beta in {0.5,0.8,1} x gamma in
//! {0,1,3} x lambda in {1.1,2,3} x N in {1,2,5,10,20} at spacing 1.
//! Instances where the equal-depletion construction is infeasible are
//! reported and exercised through the LP route only.

use ringflow::analytic::{
    high_compression_slope, min_power_node, min_power_total, phi_exact, phi_integral_approx,
    phi_sum_approx, stepwise_flows,
};
use ringflow::cli::{csv_string, parse_config, OutputTable};
use ringflow::experiments::{
    apply_param, fit_loglog_slope, node_study_table, run_heatmap, run_scaling_fixed_area,
    run_scaling_fixed_spacing, AreaSpacing, AxisSpec, MethodSet, SweepParam,
};
use ringflow::flow_opt::{
    analytic_flow_solution, build_max_lifetime_lp, build_min_power_lp, lifetime_lp_point,
    solve_max_lifetime, solve_min_power,
};
use ringflow::ring_model::{build_profile, NodeProfile, Normalization, SystemParams};
use ringflow::simplex::scaled_residuals;

fn params(alpha: f64, beta: f64, gamma: f64, lambda: f64, n: usize, d: f64) -> SystemParams {
    SystemParams {
        alpha,
        beta,
        gamma,
        lambda,
        n_rings: n,
        spacing: d,
        normalization: Normalization::PaperVerbatim,
    }
}

fn baseline() -> SystemParams {
    params(1.0, 1.0, 1.0, 2.0, 20, 1.0)
}

fn rel(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

fn grid_instances() -> Vec<SystemParams> {
    let mut out = Vec::new();
    for &alpha in &[0.0, 1.0, 3.0] {
        for &beta in &[0.5, 0.8, 1.0] {
            for &gamma in &[0.0, 1.0, 3.0] {
                for &lambda in &[1.1, 2.0, 3.0] {
                    for &n in &[1usize, 2, 5, 10, 20] {
                        out.push(params(alpha, beta, gamma, lambda, n, 1.0));
                    }
                }
            }
        }
    }
    out
}

/// Independent brute-force oracle: cheapest monotone path per source node,
/// compression compounding at every sender.
fn brute_force_min_power(profile: &NodeProfile) -> f64 {
    let n = profile.n();
    let mut total = 0.0;
    for j in 1..=n {
        let hops = j - 1;
        let mut best = f64::INFINITY;
        for mask in 0u32..(1 << hops) {
            let mut nodes = vec![j];
            for k in (1..=hops).rev() {
                if mask & (1 << (k - 1)) != 0 {
                    nodes.push(k);
                }
            }
            nodes.push(0);
            let mut cost = 0.0;
            let mut carried = 1.0;
            for w in nodes.windows(2) {
                carried *= profile.compression(w[0]);
                cost += carried * profile.cost(w[1], w[0]);
            }
            best = best.min(cost);
        }
        total += profile.info_rate(j) * best;
    }
    total
}

fn ols_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let xm = xs.iter().sum::<f64>() / n;
    let ym = ys.iter().sum::<f64>() / n;
    let mut cov = 0.0;
    let mut var = 0.0;
    for (&x, &y) in xs.iter().zip(ys) {
        cov += (x - xm) * (y - ym);
        var += (x - xm) * (x - xm);
    }
    cov / var
}

fn ols_r_squared(xs: &[f64], ys: &[f64]) -> f64 {
    let slope = ols_slope(xs, ys);
    let n = xs.len() as f64;
    let xm = xs.iter().sum::<f64>() / n;
    let ym = ys.iter().sum::<f64>() / n;
    let intercept = ym - slope * xm;
    let mut ss_res = 0.0;
    let mut ss_tot = 0.0;
    for (&x, &y) in xs.iter().zip(ys) {
        ss_res += (y - intercept - slope * x).powi(2);
        ss_tot += (y - ym).powi(2);
    }
    1.0 - ss_res / ss_tot
}

#[test]
fn criterion_1_two_oracle_equality() {
    let mut infeasible = 0usize;
    let mut max_phi_dev = 0.0f64;
    let mut max_residual = 0.0f64;
    let instances = grid_instances();
    let total = instances.len();
    for p in &instances {
        let profile = build_profile(p).unwrap();
        let lp = solve_max_lifetime(&profile).unwrap();
        let analytic = stepwise_flows(&profile);
        if !analytic.valid {
            infeasible += 1;
            continue;
        }
        let dev = rel(lp.phi, analytic.phi);
        max_phi_dev = max_phi_dev.max(dev);
        assert!(
            dev <= 1e-6,
            "criterion 1: FAIL — phi_lp {} vs phi_exact {} at {p:?}",
            lp.phi,
            analytic.phi
        );
        // The analytic schedule, expressed as an LP point, must be feasible
        // and attain the LP objective.
        let constructed = analytic_flow_solution(&profile, &analytic);
        let point = lifetime_lp_point(&profile, &constructed);
        let problem = build_max_lifetime_lp(&profile);
        let rep = scaled_residuals(&problem, &point).unwrap();
        max_residual = max_residual
            .max(rep.max_eq_residual)
            .max(rep.max_ineq_violation);
        assert!(
            rep.max_eq_residual <= 1e-8 && rep.max_ineq_violation <= 1e-8,
            "criterion 1: FAIL — analytic point infeasible (eq {}, ineq {}) at {p:?}",
            rep.max_eq_residual,
            rep.max_ineq_violation
        );
        assert!(
            rep.min_variable >= -1e-8,
            "criterion 1: FAIL — analytic point has negative flow {} at {p:?}",
            rep.min_variable
        );
        assert!(
            rel(constructed.phi, lp.phi) <= 1e-6,
            "criterion 1: FAIL — analytic objective {} misses LP optimum {} at {p:?}",
            constructed.phi,
            lp.phi
        );
    }
    println!(
        "criterion 1: PASS — {total} instances, {infeasible} with infeasible ansatz (reported), \
         max phi deviation {max_phi_dev:.2e}, max point residual {max_residual:.2e}"
    );
}

#[test]
fn criterion_2_hand_solved_instances() {
    // Telescoping oracle for N = 20: prod_{k=2..j}(1 - k^-2) = (j+1)/(2j)
    // reduces phi to [sum j^2/(j+1)] / [sum 1/(j+1)].
    let mut num = 0.0;
    let mut den = 0.0;
    for j in 1..=20u32 {
        let jf = j as f64;
        num += jf * jf / (jf + 1.0);
        den += 1.0 / (jf + 1.0);
    }
    let cases = [
        (1usize, 1.0),
        (2, 11.0 / 5.0),
        (3, 49.0 / 13.0),
        (20, num / den),
    ];
    for &(n, expected) in &cases {
        let profile = build_profile(&params(1.0, 1.0, 1.0, 2.0, n, 1.0)).unwrap();
        let exact = phi_exact(&profile);
        assert!(
            rel(exact, expected) <= 1e-9,
            "criterion 2: FAIL — phi_exact({n}) = {exact}, expected {expected}"
        );
        let lp = solve_max_lifetime(&profile).unwrap();
        assert!(
            rel(lp.phi, expected) <= 1e-6,
            "criterion 2: FAIL — phi_lp({n}) = {}, expected {expected}",
            lp.phi
        );
    }
    println!(
        "criterion 2: PASS — N in {{1, 2, 3, 20}} match 1, 11/5, 49/13, {:.4}",
        num / den
    );
}

#[test]
fn criterion_3_min_power_brute_force() {
    let mut cases = 0usize;
    let mut max_node_dev = 0.0f64;
    for n in 1..=6usize {
        for &beta in &[0.5, 1.0] {
            for &lambda in &[1.5, 2.0, 3.0] {
                let p = params(1.0, beta, 1.0, lambda, n, 1.0);
                let profile = build_profile(&p).unwrap();
                let lp = solve_min_power(&profile).unwrap();
                let brute = brute_force_min_power(&profile);
                let closed = min_power_total(&profile);
                assert!(
                    rel(lp.total_power, brute) <= 1e-9,
                    "criterion 3: FAIL — LP {} vs brute force {} at {p:?}",
                    lp.total_power,
                    brute
                );
                assert!(
                    rel(lp.total_power, closed) <= 1e-9,
                    "criterion 3: FAIL — LP {} vs closed form {} at {p:?}",
                    lp.total_power,
                    closed
                );
                for j in 1..=n {
                    let formula = min_power_node(&profile, j).unwrap();
                    let node = lp.node_power(j);
                    let dev = rel(node, formula);
                    max_node_dev = max_node_dev.max(dev);
                    assert!(
                        dev <= 1e-12,
                        "criterion 3: FAIL — node {j} power {node} vs formula {formula} at {p:?}"
                    );
                }
                cases += 1;
            }
        }
    }
    println!(
        "criterion 3: PASS — {cases} instances; per-node max deviation {max_node_dev:.2e}"
    );
}

#[test]
fn criterion_4_conservation_and_sink_balance() {
    let mut max_conservation = 0.0f64;
    let mut max_sink_dev = 0.0f64;
    for p in grid_instances() {
        let profile = build_profile(&p).unwrap();
        let lp = solve_max_lifetime(&profile).unwrap();
        let residual = lp.max_conservation_residual();
        max_conservation = max_conservation.max(residual);
        assert!(
            residual <= 1e-8,
            "criterion 4: FAIL — conservation residual {residual} at {p:?}"
        );
        if p.beta == 1.0 {
            let dev = (lp.sink_inflow() - profile.total_info_rate()).abs();
            max_sink_dev = max_sink_dev.max(dev);
            assert!(
                dev <= 1e-8,
                "criterion 4: FAIL — sink balance off by {dev} at {p:?}"
            );
        }
    }
    // Min-power solutions observe the same constraint set.
    for n in 1..=6usize {
        for &beta in &[0.5, 1.0] {
            let profile = build_profile(&params(1.0, beta, 1.0, 2.0, n, 1.0)).unwrap();
            let lp = solve_min_power(&profile).unwrap();
            let residual = lp.max_conservation_residual();
            max_conservation = max_conservation.max(residual);
            assert!(residual <= 1e-8);
            if beta == 1.0 {
                let dev = (lp.sink_inflow() - profile.total_info_rate()).abs();
                assert!(dev <= 1e-8);
            }
        }
    }
    println!(
        "criterion 4: PASS — max conservation residual {max_conservation:.2e}, \
         max sink-balance deviation {max_sink_dev:.2e}"
    );
}

#[test]
fn criterion_5_figure_ratio_reproductions() {
    let solve_at = |alpha: f64, beta: f64, gamma: f64, lambda: f64| -> f64 {
        let profile = build_profile(&params(alpha, beta, gamma, lambda, 20, 1.0)).unwrap();
        solve_max_lifetime(&profile).unwrap().phi
    };

    let mut failures: Vec<String> = Vec::new();
    let mut check = |name: &str, value: f64, lo: f64, hi: f64| {
        let ok = value >= lo && value <= hi;
        println!(
            "criterion 5 [{}]: {} — {name} = {value:.3}, band [{lo}, {hi}]",
            name,
            if ok { "pass" } else { "FAIL" }
        );
        if !ok {
            failures.push(format!("{name} = {value:.3} outside [{lo}, {hi}]"));
        }
    };

    let gamma_ratio = solve_at(1.0, 1.0, 1.0, 2.0) / solve_at(1.0, 1.0, 0.0, 2.0);
    check("phi(gamma=1)/phi(gamma=0)", gamma_ratio, 2.5, 4.0);

    let beta_ratio = solve_at(1.0, 1.0, 1.0, 2.0) / solve_at(1.0, 0.5, 1.0, 2.0);
    check("phi(beta=1)/phi(beta=0.5)", beta_ratio, 8.0, 20.0);
    // Diagnostic: the same ratio at N = 10 lands on the quoted "about 13",
    // which points at the ring count behind the published figure.
    let ratio_n10 = {
        let at = |beta: f64| {
            let profile = build_profile(&params(1.0, beta, 1.0, 2.0, 10, 1.0)).unwrap();
            solve_max_lifetime(&profile).unwrap().phi
        };
        at(1.0) / at(0.5)
    };
    println!("criterion 5 diagnostic: the beta ratio at N = 10 is {ratio_n10:.2}");

    let lambda_ratio = solve_at(1.0, 1.0, 1.0, 3.0) / solve_at(1.0, 1.0, 1.0, 1.1);
    check("phi(lambda=3)/phi(lambda=1.1)", lambda_ratio, 6.0, 16.0);

    let lambda_ratio_g3 = solve_at(1.0, 1.0, 3.0, 3.0) / solve_at(1.0, 1.0, 3.0, 1.1);
    check(
        "phi(lambda=3)/phi(lambda=1.1) at gamma=3",
        lambda_ratio_g3,
        50.0,
        200.0,
    );
    // Diagnostic: at (gamma = 3, lambda = 1.1) the equal-depletion
    // construction is infeasible and the closed form undercuts the true
    // optimum; the unguarded formula ratio reproduces the quoted "about
    // 100 times larger".
    {
        let lo = build_profile(&params(1.0, 1.0, 3.0, 1.1, 20, 1.0)).unwrap();
        let hi = build_profile(&params(1.0, 1.0, 3.0, 3.0, 20, 1.0)).unwrap();
        let lo_sol = stepwise_flows(&lo);
        println!(
            "criterion 5 diagnostic: closed-form ratio at gamma=3 is {:.1} \
             (ansatz valid at lambda=1.1: {})",
            phi_exact(&hi) / phi_exact(&lo),
            lo_sol.valid
        );
    }

    let x = AxisSpec::linspace(SweepParam::Beta, 0.5, 1.0, 13).unwrap();
    let y = AxisSpec::linspace(SweepParam::Gamma, 0.0, 3.0, 13).unwrap();
    let grid = run_heatmap(&baseline(), &x, &y).unwrap();
    let mut lo = f64::INFINITY;
    let mut hi = 0.0f64;
    for row in &grid.cells {
        for cell in row {
            lo = lo.min(cell.phi_lp);
            hi = hi.max(cell.phi_lp);
        }
    }
    let extreme = hi / lo;
    let ok = extreme > 100.0;
    println!(
        "criterion 5 [heatmap extreme ratio]: {} — {extreme:.1} (must exceed 100)",
        if ok { "pass" } else { "FAIL" }
    );
    if !ok {
        failures.push(format!("heatmap extreme ratio {extreme:.1} <= 100"));
    }

    assert!(
        failures.is_empty(),
        "criterion 5: FAIL — {}. The model itself gives these values through both \
         LP and closed form; see the decisions ledger discussion of the beta ratio.",
        failures.join("; ")
    );
    println!("criterion 5: PASS");
}

#[test]
fn criterion_6_structure_claim() {
    let mut checked = 0usize;
    for p in grid_instances() {
        let profile = build_profile(&p).unwrap();
        let analytic = stepwise_flows(&profile);
        if !analytic.valid {
            continue;
        }
        let lp = solve_max_lifetime(&profile).unwrap();
        let constructed = analytic_flow_solution(&profile, &analytic);
        // Direct + stepwise only by construction; feasible and optimal by
        // the LP's own accounting.
        let problem = build_max_lifetime_lp(&profile);
        let point = lifetime_lp_point(&profile, &constructed);
        let rep = scaled_residuals(&problem, &point).unwrap();
        assert!(
            rep.max_eq_residual <= 1e-8
                && rep.max_ineq_violation <= 1e-8
                && rep.min_variable >= -1e-8,
            "criterion 6: FAIL — constructed schedule infeasible at {p:?}"
        );
        assert!(
            rel(constructed.phi, lp.phi) <= 1e-6,
            "criterion 6: FAIL — constructed schedule suboptimal at {p:?}"
        );
        // Constant per-node depletion column.
        let table = node_study_table(&constructed, None);
        let lo = table
            .rows
            .iter()
            .map(|r| r.depl_total)
            .fold(f64::INFINITY, f64::min);
        let hi = table.rows.iter().map(|r| r.depl_total).fold(0.0f64, f64::max);
        assert!(
            rel(lo, hi) <= 1e-6,
            "criterion 6: FAIL — depletion column spans [{lo}, {hi}] at {p:?}"
        );
        checked += 1;
    }
    println!(
        "criterion 6: PASS — direct+stepwise optimal schedule verified on {checked} \
         feasible-ansatz instances"
    );
}

#[test]
fn criterion_7_approximation_calibration() {
    let mut previous_integral_err = f64::INFINITY;
    for &n in &[10usize, 15, 20] {
        let p = params(1.0, 1.0, 1.0, 2.0, n, 1.0);
        let exact = phi_exact(&build_profile(&p).unwrap());
        let sum = phi_sum_approx(&p).unwrap();
        let sum_err = (sum - exact).abs() / exact;
        assert!(
            sum_err <= 0.10,
            "criterion 7: FAIL — sum approximation off by {:.1}% at N = {n}",
            100.0 * sum_err
        );
        let integral = phi_integral_approx(&p).unwrap();
        let integral_err = (integral - exact).abs() / exact;
        assert!(
            integral_err <= 0.35,
            "criterion 7: FAIL — integral approximation off by {:.1}% at N = {n}",
            100.0 * integral_err
        );
        assert!(
            integral_err < previous_integral_err,
            "criterion 7: FAIL — integral error did not improve with N (N = {n})"
        );
        previous_integral_err = integral_err;
        println!(
            "criterion 7 [N = {n}]: sum err {:.1}%, integral err {:.1}%",
            100.0 * sum_err,
            100.0 * integral_err
        );
    }
    println!("criterion 7: PASS — sum within 10%, integral within 35% and improving");
}

#[test]
fn criterion_8_asymptotics() {
    let mut failures: Vec<String> = Vec::new();

    // Fixed spacing, beta = 1: log-log slope of phi against N.
    let ns: Vec<usize> = (10..=40).step_by(5).collect();
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for &n in &ns {
        let profile = build_profile(&params(1.0, 1.0, 1.0, 2.0, n, 1.0)).unwrap();
        xs.push(n as f64);
        ys.push(phi_exact(&profile));
    }
    let slope = fit_loglog_slope(&xs, &ys).unwrap();
    let lambda = 2.0;
    let ok = (slope - lambda).abs() <= 0.3;
    println!(
        "criterion 8 [fixed-spacing slope]: {} — slope {slope:.4}, band [{}, {}]",
        if ok { "pass" } else { "FAIL" },
        lambda - 0.3,
        lambda + 0.3
    );
    if !ok {
        failures.push(format!(
            "fixed-spacing slope {slope:.4} outside [{}, {}]",
            lambda - 0.3,
            lambda + 0.3
        ));
    }
    // Diagnostic: against N + 0.5 (the model's effective radius scale) the
    // same data fits just inside the band.
    let xs_shifted: Vec<f64> = ns.iter().map(|&n| n as f64 + 0.5).collect();
    println!(
        "criterion 8 diagnostic: slope against N + 0.5 is {:.4}",
        fit_loglog_slope(&xs_shifted, &ys).unwrap()
    );

    // High compression: slope tends to gamma - alpha.
    for &(alpha, gamma) in &[(1.0, 2.0), (1.0, 1.0), (2.0, 1.0)] {
        let p = params(alpha, 0.5, gamma, 2.0, 20, 1.0);
        let slope = high_compression_slope(&p, 40, 80).unwrap();
        let expected = gamma - alpha;
        let ok = (slope - expected).abs() <= 0.15;
        println!(
            "criterion 8 [high-compression ({alpha}, {gamma})]: {} — slope {slope:.4} \
             vs {expected}",
            if ok { "pass" } else { "FAIL" }
        );
        if !ok {
            failures.push(format!(
                "high-compression slope {slope:.4} at (alpha, gamma) = ({alpha}, {gamma}) \
                 not within 0.15 of {expected}"
            ));
        }
    }

    // Constant area, gamma = 1: strictly decreasing, 1/phi linear in log N.
    let ns: Vec<usize> = (5..=20).collect();
    let tables = run_scaling_fixed_area(
        &baseline(),
        &ns,
        &[1.0],
        MethodSet {
            lp: false,
            exact: true,
            sum: false,
            integral: false,
        },
        AreaSpacing::OuterRadius,
    )
    .unwrap();
    let rows = &tables[0].rows;
    let decreasing = rows
        .windows(2)
        .all(|w| w[1].phi_exact.unwrap() < w[0].phi_exact.unwrap());
    let log_n: Vec<f64> = rows.iter().map(|r| (r.n as f64).ln()).collect();
    let inv_phi: Vec<f64> = rows.iter().map(|r| 1.0 / r.phi_exact.unwrap()).collect();
    let r2 = ols_r_squared(&log_n, &inv_phi);
    let ok = decreasing && r2 > 0.98;
    println!(
        "criterion 8 [constant area]: {} — strictly decreasing: {decreasing}, \
         R^2(1/phi vs log N) = {r2:.4}",
        if ok { "pass" } else { "FAIL" }
    );
    if !ok {
        failures.push(format!(
            "constant-area study: decreasing = {decreasing}, R^2 = {r2:.4}"
        ));
    }

    assert!(
        failures.is_empty(),
        "criterion 8: FAIL — {}. The fixed-spacing slope is dragged below lambda by the \
         harmonic denominator; see the decisions ledger.",
        failures.join("; ")
    );
    println!("criterion 8: PASS");
}

#[test]
fn criterion_9_solver_robustness_and_determinism() {
    // Iteration budget over every lifetime LP of the criterion-1 grid.
    let mut worst_fraction = 0.0f64;
    for p in grid_instances() {
        let profile = build_profile(&p).unwrap();
        let problem = build_max_lifetime_lp(&profile);
        let budget = 10 * (problem.num_rows() + problem.num_vars());
        let lp = solve_max_lifetime(&profile).unwrap();
        worst_fraction = worst_fraction.max(lp.lp_iterations as f64 / budget as f64);
        assert!(
            lp.lp_iterations <= budget,
            "criterion 9: FAIL — {} iterations exceeds budget {budget} at {p:?}",
            lp.lp_iterations
        );
    }
    // Same bound for the min-power programs of criterion 3.
    for n in 1..=6usize {
        for &beta in &[0.5, 1.0] {
            for &lambda in &[1.5, 2.0, 3.0] {
                let profile = build_profile(&params(1.0, beta, 1.0, lambda, n, 1.0)).unwrap();
                let problem = build_min_power_lp(&profile);
                let budget = 10 * (problem.num_rows() + problem.num_vars());
                let lp = solve_min_power(&profile).unwrap();
                assert!(lp.lp_iterations <= budget);
            }
        }
    }
    // And for the heatmap cells behind criterion 5.
    for &beta in &[0.5, 0.75, 1.0] {
        for &gamma in &[0.0, 1.5, 3.0] {
            let p = apply_param(
                &apply_param(&baseline(), SweepParam::Beta, beta).unwrap(),
                SweepParam::Gamma,
                gamma,
            )
            .unwrap();
            let profile = build_profile(&p).unwrap();
            let problem = build_max_lifetime_lp(&profile);
            let budget = 10 * (problem.num_rows() + problem.num_vars());
            let lp = solve_max_lifetime(&profile).unwrap();
            assert!(lp.lp_iterations <= budget);
        }
    }

    // Rerun determinism: identical configurations produce byte-identical
    // CSV text for every table kind.
    let tokens: Vec<String> = [
        "heatmap",
        "--n",
        "10",
        "--x",
        "beta:0.5:1:5",
        "--y",
        "gamma:0:3:5",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    let config = parse_config(&tokens, None).unwrap();
    let x = config.x_axis.clone().unwrap();
    let y = config.y_axis.clone().unwrap();
    let first = csv_string(
        &OutputTable::Heatmap(&run_heatmap(&config.params, &x, &y).unwrap()),
        &config,
    );
    let second = csv_string(
        &OutputTable::Heatmap(&run_heatmap(&config.params, &x, &y).unwrap()),
        &config,
    );
    assert_eq!(first, second, "criterion 9: FAIL — heatmap CSV not byte-stable");

    let scaling_tokens: Vec<String> = ["scaling", "--x", "n:5:12:8"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let sc_config = parse_config(&scaling_tokens, None).unwrap();
    let n_values: Vec<usize> = (5..=12).collect();
    let render = || {
        let tables =
            run_scaling_fixed_spacing(&sc_config.params, &n_values, &[1.0], MethodSet::all())
                .unwrap();
        csv_string(&OutputTable::Scaling(&tables[0]), &sc_config)
    };
    assert_eq!(render(), render(), "criterion 9: FAIL — scaling CSV not byte-stable");

    println!(
        "criterion 9: PASS — all LPs within the 10(rows+cols) budget \
         (worst case {:.0}% of budget); CSV output byte-stable",
        100.0 * worst_fraction
    );
}
