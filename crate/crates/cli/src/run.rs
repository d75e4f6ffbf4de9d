//! One function per subcommand; each validates its inputs, runs the engines
//! and returns a [`Table`].

use anyhow::{anyhow, Context, Result};
use num_complex::Complex64;

use principal_trace::hardy::{helton_howe_check, minimal_section, LaurentSymbol};
use principal_trace::landau::{cumulative_matrix, level_matrix};
use principal_trace::poisson::{
    chhp_prediction, integrate_unit_square, parse_polynomial, poisson_bracket, PrincipalFunction,
    QPolynomial2, Region,
};
use principal_trace::trace::{
    commutator_trace, richardson_extrapolate, to_complex, weighted_trace, word_power_trace,
    word_trace_for_polynomials, OperatorWord, TraceReport, TruncationScheme,
};
use principal_trace::fock::shift::WeightedShift;
use principal_trace::{build_toeplitz_with, switch_integral_check, Axis, PlanarSymbol, ToeplitzMatrix};

use crate::config::{ExperimentConfig, Window};
use crate::report::{Cell, Table};
use crate::Failure;

const SWEEP_START: usize = 64;

const CONVERGENCE_COLUMNS: &[&str] = &[
    "M",
    "N",
    "value_re",
    "value_im",
    "two_pi_i_value",
    "target",
    "abs_error_vs_target",
    "tail_estimate",
];

fn invalid(e: impl std::fmt::Display) -> anyhow::Error {
    anyhow!(Failure::Config(e.to_string()))
}

fn two_pi_i(v: Complex64) -> Complex64 {
    Complex64::new(0.0, 2.0 * std::f64::consts::PI) * v
}

/// `64, 128, …` below `M`, then `M` itself.
pub fn sweep_sizes(outer: usize) -> Vec<usize> {
    let mut sizes = Vec::new();
    let mut m = SWEEP_START;
    while m < outer {
        sizes.push(m);
        m *= 2;
    }
    sizes.push(outer);
    sizes
}

fn warn_if_full(cfg: &ExperimentConfig) {
    if cfg.window == Window::Full {
        eprintln!(
            "warning: window N = M sums the whole diagonal of a finite matrix; by cyclicity of the \
             trace every commutator vanishes identically there (cyclicity trap), so the value is 0 \
             and says nothing about the operator"
        );
    }
}

fn scheme(cfg: &ExperimentConfig, size: usize) -> Result<TruncationScheme> {
    TruncationScheme::new(size, cfg.window.at(size, cfg.outer)).map_err(Into::into)
}

fn symbol(cfg: &ExperimentConfig, axis: Axis) -> Result<PlanarSymbol> {
    Ok(PlanarSymbol::new(cfg.profile, axis).with_field_strength(cfg.b)?)
}

fn fock_pair(cfg: &ExperimentConfig) -> Result<(ToeplitzMatrix, ToeplitzMatrix)> {
    let a = build_toeplitz_with(&symbol(cfg, Axis::First)?, cfg.outer, &cfg.build)?;
    let b = build_toeplitz_with(&symbol(cfg, Axis::Second)?, cfg.outer, &cfg.build)?;
    Ok((a, b))
}

/// Sweeps the leading blocks of `(a, b)` and tabulates `Tr((AB)ⁿ − (BA)ⁿ)`.
fn convergence(
    command: &'static str,
    cfg: &ExperimentConfig,
    a: &ToeplitzMatrix,
    b: &ToeplitzMatrix,
    target: f64,
) -> Result<Table> {
    warn_if_full(cfg);
    let mut table = Table::new(command, CONVERGENCE_COLUMNS);
    let mut samples = Vec::new();
    for size in sweep_sizes(cfg.outer) {
        let s = scheme(cfg, size)?;
        let (a, b) = (a.leading(size)?, b.leading(size)?);
        let r = if cfg.word_n == 1 {
            commutator_trace(&a, &b, &s)?
        } else {
            word_power_trace(cfg.word_n, &a, &b, &s)?
        };
        samples.push((size, r.value));
        table.push(convergence_row(&r, target));
    }
    if cfg.extrapolate {
        let e = richardson_extrapolate(&samples)?;
        let scaled = two_pi_i(e.value);
        table.push(vec![
            "richardson".into(),
            "".into(),
            e.value.re.into(),
            e.value.im.into(),
            scaled.re.into(),
            target.into(),
            (scaled - target).norm().into(),
            e.error_estimate.into(),
        ]);
    }
    Ok(table)
}

fn convergence_row(r: &TraceReport, target: f64) -> Vec<Cell> {
    let scaled = r.two_pi_i_value();
    vec![
        r.outer.into(),
        r.window.into(),
        r.value.re.into(),
        r.value.im.into(),
        scaled.re.into(),
        target.into(),
        (scaled - target).norm().into(),
        r.tail_estimate.into(),
    ]
}

/// Convergence of `2πi Tr[A, B]` (or of the `n`-th word) in the Fock space.
pub fn trace(cfg: &ExperimentConfig) -> Result<Table> {
    let (a, b) = fock_pair(cfg)?;
    convergence("trace", cfg, &a, &b, 1.0 / cfg.word_n as f64)
}

fn words(list: &str) -> Result<Vec<OperatorWord>> {
    list.split(',')
        .map(str::trim)
        .filter(|w| !w.is_empty())
        .map(|w| w.parse::<OperatorWord>().with_context(|| Failure::Config(format!("word `{w}`"))))
        .collect()
}

/// Diagonal summands and running sums of one word difference at fixed `M`.
pub fn word(cfg: &ExperimentConfig) -> Result<Table> {
    let (plus, minus) = if cfg.plus.is_empty() && cfg.minus.is_empty() {
        let ab: OperatorWord = "AB".parse()?;
        let ba: OperatorWord = "BA".parse()?;
        (vec![ab.repeat(cfg.word_n)?], vec![ba.repeat(cfg.word_n)?])
    } else {
        (words(&cfg.plus)?, words(&cfg.minus)?)
    };
    if plus.is_empty() && minus.is_empty() {
        return Err(invalid("no words given"));
    }
    warn_if_full(cfg);
    let s = scheme(cfg, cfg.outer)?;
    let (a, b) = fock_pair(cfg)?;
    let one = Complex64::new(1.0, 0.0);
    let terms: Vec<_> = plus
        .into_iter()
        .map(|w| (one, w))
        .chain(minus.into_iter().map(|w| (-one, w)))
        .collect();
    let r = weighted_trace(&terms, &a, &b, &s)?;
    let mut table = Table::new(
        "word",
        &["m", "d_re", "d_im", "partial_re", "partial_im", "two_pi_i_partial"],
    );
    let mut partial = Complex64::new(0.0, 0.0);
    for (m, d) in r.diagonal.iter().enumerate() {
        partial += d;
        table.push(vec![
            m.into(),
            d.re.into(),
            d.im.into(),
            partial.re.into(),
            partial.im.into(),
            two_pi_i(partial).re.into(),
        ]);
    }
    Ok(table)
}

fn polynomial(key: &str, text: &str) -> Result<QPolynomial2> {
    parse_polynomial(text).with_context(|| Failure::Config(format!("cannot parse {key} = `{text}`")))
}

/// Exact prediction for `Tr[p(A,B), q(A,B)]` from the principal function.
pub fn chhp(cfg: &ExperimentConfig) -> Result<Table> {
    let (p, q) = (polynomial("p", &cfg.p)?, polynomial("q", &cfg.q)?);
    let g = PrincipalFunction::new(cfg.multiplier, cfg.region);
    let pred = chhp_prediction(&g, &p, &q);
    let two_pi_i_trace = pred.two_pi_i_trace();
    if cfg.region == Region::UnitSquare && two_pi_i_trace.has_pi() {
        return Err(anyhow!("square-region integral acquired a pi term: {two_pi_i_trace}"));
    }
    let (over_pi, rational) = pred.trace_parts();
    let decimal = to_complex(&over_pi) / std::f64::consts::PI + to_complex(&rational);
    let mut table = Table::new(
        "chhp",
        &[
            "p",
            "q",
            "region",
            "multiplier",
            "bracket_integral",
            "two_pi_i_trace",
            "trace",
            "trace_re",
            "trace_im",
        ],
    );
    table.push(vec![
        p.to_string().into(),
        q.to_string().into(),
        cfg.region.name().into(),
        cfg.multiplier.into(),
        pred.bracket_integral.to_string().into(),
        two_pi_i_trace.to_string().into(),
        pred.to_string().into(),
        decimal.re.into(),
        decimal.im.into(),
    ]);
    Ok(table)
}

/// Numeric windowed trace against the exact integral over the unit square.
/// Returns the table and whether the difference is within tolerance.
pub fn compare(cfg: &ExperimentConfig) -> Result<(Table, bool)> {
    let (p, q) = (polynomial("p", &cfg.p)?, polynomial("q", &cfg.q)?);
    warn_if_full(cfg);
    let s = scheme(cfg, cfg.outer)?;
    let exact = integrate_unit_square(&poisson_bracket(&p, &q));
    let (a, b) = fock_pair(cfg)?;
    let r = word_trace_for_polynomials(&p, &q, cfg.ordering, &a, &b, &s)?;
    let numeric = r.two_pi_i_value();
    let diff = (numeric - to_complex(&exact)).norm();
    let pass = diff <= cfg.tolerance;
    let mut table = Table::new(
        "compare",
        &[
            "p",
            "q",
            "ordering",
            "M",
            "N",
            "two_pi_i_value_re",
            "two_pi_i_value_im",
            "exact",
            "abs_difference",
            "tolerance",
            "pass",
        ],
    );
    table.push(vec![
        p.to_string().into(),
        q.to_string().into(),
        cfg.ordering.name().into(),
        r.outer.into(),
        r.window.into(),
        numeric.re.into(),
        numeric.im.into(),
        exact.to_string().into(),
        diff.into(),
        cfg.tolerance.into(),
        pass.into(),
    ]);
    Ok((table, pass))
}

fn laurent(key: &str, text: &str) -> Result<LaurentSymbol> {
    LaurentSymbol::parse(text).with_context(|| Failure::Config(format!("cannot parse {key} = `{text}`")))
}

/// Both exact sides of the Hardy-space trace formula.
pub fn hardy(cfg: &ExperimentConfig) -> Result<Table> {
    let (f, g) = (laurent("f", &cfg.f)?, laurent("g", &cfg.g)?);
    let check = helton_howe_check(&f, &g);
    let mut table = Table::new("hardy", &["f", "g", "section", "lhs", "rhs", "equal"]);
    table.push(vec![
        f.to_string().into(),
        g.to_string().into(),
        minimal_section(&f, &g).into(),
        check.lhs.to_string().into(),
        check.rhs.to_string().into(),
        check.equal.into(),
    ]);
    Ok(table)
}

/// Convergence table on one Landau level, or on the levels `0..=level`.
pub fn landau(cfg: &ExperimentConfig) -> Result<Table> {
    let (first, second) = (symbol(cfg, Axis::First)?, symbol(cfg, Axis::Second)?);
    let (a, b, filled) = if cfg.cumulative {
        (
            cumulative_matrix(cfg.level, &first, cfg.outer, &cfg.build)?,
            cumulative_matrix(cfg.level, &second, cfg.outer, &cfg.build)?,
            cfg.level + 1,
        )
    } else {
        (
            level_matrix(cfg.level, &first, cfg.outer, &cfg.build)?,
            level_matrix(cfg.level, &second, cfg.outer, &cfg.build)?,
            1,
        )
    };
    convergence("landau", cfg, &a, &b, filled as f64 / cfg.word_n as f64)
}

/// Weights of the lowest-level shift and its Fredholm index.
pub fn shift_weights(cfg: &ExperimentConfig) -> Result<Table> {
    let shift = WeightedShift::lowest_level(cfg.count)?;
    let idx = shift.fredholm_index();
    eprintln!(
        "index = {} (kernel {}, cokernel {})",
        idx.index, idx.kernel_dim, idx.cokernel_dim
    );
    let mut table = Table::new("shift-weights", &["n", "weight"]);
    for (n, w) in shift.weights().iter().enumerate() {
        table.push(vec![n.into(), (*w).into()]);
    }
    Ok(table)
}

/// `∫ Λ(x + a) − Λ(x) dx`, which equals `a` for every switch function.
pub fn switch_check(cfg: &ExperimentConfig) -> Result<Table> {
    let v = switch_integral_check(&cfg.profile, cfg.shift)?;
    let mut table = Table::new("switch-check", &["symbol", "shift", "integral", "abs_error"]);
    table.push(vec![
        cfg.profile.label().into(),
        cfg.shift.into(),
        v.into(),
        (v - cfg.shift).abs().into(),
    ]);
    Ok(table)
}
