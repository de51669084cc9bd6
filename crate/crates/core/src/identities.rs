//! The coefficient identities as executable, cross-checked computations.
//!
//! Three independent routes produce [z^n] (log C_λ(z))^p:
//!
//! * `log_pow_direct` — truncated-series algebra (formal log, then a power),
//! * `log_pow_stirling` — the finite Stirling-cycle sum over the
//!   Lagrange-inversion coefficients of u^m,
//! * `log_pow_harmonic` — the λ=2 rewrite with c(m,p)/(m−1)! supplied by the
//!   Grünberg partition formula instead of the triangle.
//!
//! All comparisons are exact; a failed sweep reports the first failing
//! parameter tuple together with both values.

use num_bigint::BigInt;
use num_integer::Integer;
use thiserror::Error;

use crate::catalan::{fuss_catalan_series, u_power_coeff, Lambda};
use crate::combinatorics::{binomial, factorial, partitions_of, HarmonicTable, StirlingTriangle};
use crate::rational::Rational;
use crate::series::Series;

/// Parameters of one (log C_λ)^p expansion: exponent, branching parameter,
/// truncation order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExpansionRequest {
    pub p: u32,
    pub lambda: Lambda,
    pub order: usize,
}

impl ExpansionRequest {
    pub fn new(p: u32, lambda: Lambda, order: usize) -> Self {
        ExpansionRequest { p, lambda, order }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HarmonicRouteError {
    #[error("the harmonic route needs p >= 1")]
    ZeroExponent,
    #[error("the harmonic route is stated for lambda = 2 only")]
    NonCatalanLambda,
}

/// Outcome of one identity sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub name: String,
    pub range: String,
    pub passed: bool,
    pub first_failure: Option<FirstFailure>,
}

/// The first failing parameter tuple of a sweep, with both exact values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FirstFailure {
    pub params: String,
    pub lhs: String,
    pub rhs: String,
}

impl VerificationReport {
    fn pass(name: &str, range: String) -> Self {
        VerificationReport { name: name.to_string(), range, passed: true, first_failure: None }
    }

    fn fail(name: &str, range: String, params: String, lhs: String, rhs: String) -> Self {
        VerificationReport {
            name: name.to_string(),
            range,
            passed: false,
            first_failure: Some(FirstFailure { params, lhs, rhs }),
        }
    }
}

/// (log C_λ)^p computed literally: formal log of the closed-form series,
/// then the p-th power. This is the oracle the closed forms are checked
/// against.
pub fn log_pow_direct(req: ExpansionRequest) -> Series {
    if req.p == 0 {
        return Series::one(req.order);
    }
    let c = fuss_catalan_series(req.lambda, req.order);
    // C_λ(0) = 1, so the log precondition always holds here.
    c.log().expect("C_lambda has constant term 1").pow(req.p)
}

/// (log C_λ)^p by the finite Stirling sum, building its own triangle.
pub fn log_pow_stirling(req: ExpansionRequest) -> Series {
    log_pow_stirling_with(req, &StirlingTriangle::new(req.order))
}

/// (log C_λ)^p with coefficient n given by
/// Σ_{p≤m≤n} (p!/m!)(−1)^{m−p} c(m,p) · (m/n)·C(λn, n−m),
/// the α^p coefficient of Σ_m C(α,m) u^m. The triangle is injectable so
/// that failure reporting can be exercised against a corrupted table.
pub fn log_pow_stirling_with(req: ExpansionRequest, triangle: &StirlingTriangle) -> Series {
    let ExpansionRequest { p, lambda, order } = req;
    if p == 0 {
        // Only the m = 0 term survives (c(m,0) = 0 for m >= 1), and u^0 = 1.
        return Series::one(order);
    }
    let p = p as usize;
    assert!(
        p > order || triangle.nmax() >= order,
        "Stirling table built to {}, need rows to {}",
        triangle.nmax(),
        order
    );
    let lam = lambda.get() as i64;
    let p_factorial = factorial(p);

    let mut coeffs = vec![Rational::zero(); order + 1];
    for n in p..=order {
        let big_n = n as i64;
        // b = C(λn, n−m), stepped down in m; every step is an exact division.
        let mut b = binomial(lam * big_n, n - p);
        let mut m_factorial = p_factorial.clone();
        let mut sum = Rational::zero();
        for m in p..=n {
            if m > p {
                m_factorial *= m;
                b = b * (n - m + 1) / (lam * big_n - big_n + m as i64);
            }
            let numer = &p_factorial * triangle.cycle(m, p) * m * &b;
            let term = Rational::new(numer, &m_factorial * n);
            if (m - p).is_multiple_of(2) {
                sum += term;
            } else {
                sum -= term;
            }
        }
        coeffs[n] = sum;
    }
    Series::from_coeffs(coeffs)
}

/// The closed form for (log C)² with harmonic numbers:
/// coefficient n is C(2n,n)·(H_{2n−1} − H_n)/n, coefficient 0 is 0.
pub fn knuth_rhs(order: usize) -> Series {
    if order == 0 {
        return Series::zero(0);
    }
    let harmonic = HarmonicTable::new(2 * order - 1, 1);
    Series::from_fn(order, |n| {
        if n == 0 {
            return Rational::zero();
        }
        let diff = harmonic.harmonic(2 * n - 1, 1) - harmonic.harmonic(n, 1);
        Rational::from(binomial(2 * n as i64, n)) * diff / Rational::from(n as i64)
    })
}

/// c(n+1, r+1)/n! from harmonic numbers alone:
/// (−1)^r Σ over partitions r = Σ i_j·r_j of Π_j (−1)^{i_j}/i_j!·(H_n^{(r_j)}/r_j)^{i_j}.
/// r = 0 is the empty partition sum, 1.
pub fn grunberg_stirling(n: usize, r: usize) -> Rational {
    let table = HarmonicTable::new(n, r.max(1));
    grunberg_stirling_with(n, r, &table)
}

/// `grunberg_stirling` against a caller-provided harmonic table.
pub fn grunberg_stirling_with(n: usize, r: usize, harmonic: &HarmonicTable) -> Rational {
    if r == 0 {
        return Rational::one();
    }
    let mut total = Rational::zero();
    for partition in partitions_of(r as u32) {
        let mut product = Rational::one();
        for &(part, mult) in partition.blocks() {
            let base = harmonic.harmonic(n, part as usize) / Rational::from(part as i64);
            let mut factor = base.pow(mult) / Rational::from(factorial(mult as usize));
            if mult % 2 == 1 {
                factor = -factor;
            }
            product *= factor;
        }
        total += product;
    }
    if r % 2 == 1 {
        -total
    } else {
        total
    }
}

/// The λ=2 expansion with c(m,p)/(m−1)! replaced by the Grünberg value:
/// coefficient n is Σ_{p≤m≤n} grunberg(m−1, p−1)·(−1)^{m−p}·(p!/n)·C(2n, n−m).
pub fn log_pow_harmonic(req: ExpansionRequest) -> Result<Series, HarmonicRouteError> {
    if req.p == 0 {
        return Err(HarmonicRouteError::ZeroExponent);
    }
    if req.lambda.get() != 2 {
        return Err(HarmonicRouteError::NonCatalanLambda);
    }
    let p = req.p as usize;
    let order = req.order;
    let harmonic = HarmonicTable::new(order.saturating_sub(1), p.saturating_sub(1).max(1));
    let p_factorial = factorial(p);

    // The partition sums depend on m alone; computed once per column.
    let grunberg: Vec<Rational> = (p..=order.max(p))
        .map(|m| grunberg_stirling_with(m - 1, p - 1, &harmonic))
        .collect();

    let mut coeffs = vec![Rational::zero(); order + 1];
    for n in p..=order {
        let big_n = n as i64;
        let mut b = binomial(2 * big_n, n - p);
        let mut sum = Rational::zero();
        for m in p..=n {
            if m > p {
                b = b * (n - m + 1) / (big_n + m as i64);
            }
            let weight = Rational::new(&p_factorial * &b, big_n);
            let term = &grunberg[m - p] * weight;
            if (m - p).is_multiple_of(2) {
                sum += term;
            } else {
                sum -= term;
            }
        }
        coeffs[n] = sum;
    }
    Ok(Series::from_coeffs(coeffs))
}

fn join_lambdas(lambdas: &[Lambda]) -> String {
    let parts: Vec<String> = lambdas.iter().map(|l| l.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// Sweep bounds shared by the verification suites.
#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub pmax: u32,
    pub lambdas: Vec<Lambda>,
    pub order: usize,
    /// Upper n for the alternating-sum and Grünberg sweeps.
    pub nmax: usize,
    /// Upper r for the Grünberg sweep.
    pub rmax: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            pmax: 5,
            lambdas: vec![Lambda::catalan()],
            order: 20,
            nmax: 100,
            rmax: 8,
        }
    }
}

impl VerifyOptions {
    /// Rows the shared Stirling triangle must cover for a full run.
    pub fn required_stirling_rows(&self) -> usize {
        self.order.max(self.nmax + 1)
    }
}

/// direct-vs-stirling over (λ, p ≤ pmax) and direct-vs-harmonic (λ=2),
/// all at the given order.
pub fn verify_routes(opts: &VerifyOptions, triangle: &StirlingTriangle) -> Vec<VerificationReport> {
    vec![routes_harmonic_report(opts), routes_stirling_report(opts, triangle)]
}

fn routes_stirling_report(opts: &VerifyOptions, triangle: &StirlingTriangle) -> VerificationReport {
    let name = "direct-vs-stirling";
    let range = format!(
        "p<={}, lambda in {}, order {}",
        opts.pmax,
        join_lambdas(&opts.lambdas),
        opts.order
    );
    for &lambda in &opts.lambdas {
        // One shared log per lambda; the direct route is its p-th power.
        let base_log = fuss_catalan_series(lambda, opts.order)
            .log()
            .expect("C_lambda has constant term 1");
        let mut direct = Series::one(opts.order);
        for p in 0..=opts.pmax {
            if p > 0 {
                direct = &direct * &base_log;
            }
            let req = ExpansionRequest::new(p, lambda, opts.order);
            let stirling = log_pow_stirling_with(req, triangle);
            for n in 0..=opts.order {
                if direct.coeff(n) != stirling.coeff(n) {
                    return VerificationReport::fail(
                        name,
                        range,
                        format!("lambda={lambda}, p={p}, n={n}"),
                        direct.coeff(n).to_string(),
                        stirling.coeff(n).to_string(),
                    );
                }
            }
        }
    }
    VerificationReport::pass(name, range)
}

fn routes_harmonic_report(opts: &VerifyOptions) -> VerificationReport {
    let name = "direct-vs-harmonic";
    let range = format!("1<=p<={}, lambda=2, order {}", opts.pmax, opts.order);
    let base_log = if opts.pmax >= 1 {
        fuss_catalan_series(Lambda::catalan(), opts.order)
            .log()
            .expect("C has constant term 1")
    } else {
        Series::one(opts.order)
    };
    let mut direct = base_log.clone();
    for p in 1..=opts.pmax {
        if p > 1 {
            direct = &direct * &base_log;
        }
        let req = ExpansionRequest::new(p, Lambda::catalan(), opts.order);
        let harmonic = log_pow_harmonic(req).expect("p >= 1 and lambda = 2");
        for n in 0..=opts.order {
            if direct.coeff(n) != harmonic.coeff(n) {
                return VerificationReport::fail(
                    name,
                    range,
                    format!("p={p}, n={n}"),
                    direct.coeff(n).to_string(),
                    harmonic.coeff(n).to_string(),
                );
            }
        }
    }
    VerificationReport::pass(name, range)
}

/// (log C)² by direct algebra and by the Stirling sum, both against the
/// harmonic-number closed form.
pub fn verify_knuth(opts: &VerifyOptions, triangle: &StirlingTriangle) -> Vec<VerificationReport> {
    let name = "knuth-p2";
    let range = format!("n<={}, lambda=2", opts.order);
    let req = ExpansionRequest::new(2, Lambda::catalan(), opts.order);
    let rhs = knuth_rhs(opts.order);
    let routes = [("direct", log_pow_direct(req)), ("stirling", log_pow_stirling_with(req, triangle))];
    for (route, series) in &routes {
        for n in 0..=opts.order {
            if series.coeff(n) != rhs.coeff(n) {
                return vec![VerificationReport::fail(
                    name,
                    range,
                    format!("route={route}, n={n}"),
                    series.coeff(n).to_string(),
                    rhs.coeff(n).to_string(),
                )];
            }
        }
    }
    vec![VerificationReport::pass(name, range)]
}

/// C(2n,n)(H_{2n−1} − H_n) = 2·Σ_{1≤j<n} (−1)^{j−1}/j·C(2n−1, n−j−1),
/// evaluated exactly for every n in 2..=nmax. Binomials are stepped
/// incrementally, and the right side accumulates over the common
/// denominator lcm(1..n−1) so each n costs one rational reduction.
pub fn alternating_identity_check(nmax: usize) -> VerificationReport {
    let name = "alternating-sum";
    let range = format!("2<=n<={nmax}");
    assert!(nmax >= 2, "alternating identity starts at n = 2");

    // State at n: C(2n−1, n−1), H_n, H_{2n−1}, lcm(1..n−1).
    let mut row_start = BigInt::from(3); // C(3,1)
    let mut h_n = Rational::new(3, 2); // H_2
    let mut h_2n1 = Rational::new(11, 6); // H_3
    let mut lcm = BigInt::from(1);

    for n in 2..=nmax {
        let big_n = n as i64;
        lcm = lcm.lcm(&BigInt::from(n - 1));
        let central = &row_start * 2; // C(2n,n) = 2·C(2n−1,n−1)
        let lhs = Rational::from(central) * (&h_2n1 - &h_n);

        // b = C(2n−1, n−j−1), starting at j = 1.
        let mut b = &row_start * (big_n - 1) / (big_n + 1);
        let mut numerator = BigInt::from(0);
        for j in 1..n {
            let big_j = j as i64;
            if j > 1 {
                b = b * (big_n - big_j) / (big_n + big_j);
            }
            let term = &b * (&lcm / big_j);
            if j % 2 == 1 {
                numerator += term;
            } else {
                numerator -= term;
            }
        }
        let rhs = Rational::new(numerator * 2, lcm.clone());

        if lhs != rhs {
            return VerificationReport::fail(
                name,
                range,
                format!("n={n}"),
                lhs.to_string(),
                rhs.to_string(),
            );
        }

        // Advance to n+1.
        row_start = row_start * (2 * big_n) * (2 * big_n + 1) / (big_n * (big_n + 1));
        h_n += Rational::new(1, big_n + 1);
        h_2n1 += Rational::new(1, 2 * big_n) + Rational::new(1, 2 * big_n + 1);
    }
    VerificationReport::pass(name, range)
}

/// grunberg_stirling(n, r)·n! against the triangle entry c(n+1, r+1) for
/// all n ≤ nmax, r ≤ rmax.
pub fn verify_grunberg(
    nmax: usize,
    rmax: usize,
    triangle: &StirlingTriangle,
) -> Vec<VerificationReport> {
    let name = "grunberg-vs-triangle";
    let range = format!("n<={nmax}, r<={rmax}");
    assert!(triangle.nmax() > nmax, "triangle must cover n+1 rows");
    let harmonic = HarmonicTable::new(nmax, rmax.max(1));
    let mut n_factorial = BigInt::from(1);
    for n in 0..=nmax {
        if n > 0 {
            n_factorial *= n;
        }
        for r in 0..=rmax {
            let lhs = grunberg_stirling_with(n, r, &harmonic) * Rational::from(&n_factorial);
            let rhs = Rational::from(triangle.cycle(n + 1, r + 1));
            if lhs != rhs {
                return vec![VerificationReport::fail(
                    name,
                    range,
                    format!("n={n}, r={r}"),
                    lhs.to_string(),
                    rhs.to_string(),
                )];
            }
        }
    }
    vec![VerificationReport::pass(name, range)]
}

pub(crate) fn functional_equation_failure(lam: Lambda, order: usize) -> Option<FirstFailure> {
    let u = crate::catalan::u_power_series_lambda(1, lam, order);
    let one_plus_u = &Series::one(order) + &u;
    let rhs = one_plus_u.pow(lam.get()).shifted_up(1);
    for n in 0..=order {
        if u.coeff(n) != rhs.coeff(n) {
            return Some(FirstFailure {
                params: format!("lambda={lam}, n={n}, u vs z(1+u)^lambda"),
                lhs: u.coeff(n).to_string(),
                rhs: rhs.coeff(n).to_string(),
            });
        }
    }
    let c = fuss_catalan_series(lam, order);
    for n in 0..=order {
        if one_plus_u.coeff(n) != c.coeff(n) {
            return Some(FirstFailure {
                params: format!("lambda={lam}, n={n}, 1+u vs C_lambda"),
                lhs: one_plus_u.coeff(n).to_string(),
                rhs: c.coeff(n).to_string(),
            });
        }
    }
    None
}

/// u = z(1+u)^λ and C_λ = 1 + u, for every requested λ at the given order.
pub fn verify_functional_equation_suite(opts: &VerifyOptions) -> Vec<VerificationReport> {
    let name = "functional-equation";
    let range = format!("lambda in {}, order {}", join_lambdas(&opts.lambdas), opts.order);
    for &lambda in &opts.lambdas {
        if let Some(failure) = functional_equation_failure(lambda, opts.order) {
            return vec![VerificationReport {
                name: name.to_string(),
                range,
                passed: false,
                first_failure: Some(failure),
            }];
        }
    }
    vec![VerificationReport::pass(name, range)]
}

/// Every identity suite, reports ordered by identity name.
pub fn verify_all(opts: &VerifyOptions, triangle: &StirlingTriangle) -> Vec<VerificationReport> {
    let mut reports = Vec::new();
    reports.push(alternating_identity_check(opts.nmax));
    reports.extend(verify_routes(opts, triangle));
    reports.extend(verify_functional_equation_suite(opts));
    reports.extend(verify_grunberg(opts.nmax, opts.rmax, triangle));
    reports.extend(verify_knuth(opts, triangle));
    reports
}

/// The bivariate consistency property: for each n ≤ order, the coefficient
/// of z^n in Σ_{p≤P} α^p/p!·(log C)^p and in Σ_m C(α,m)·u^m agree as
/// polynomials in α of degree ≤ P. The falling-factorial polynomials
/// C(α,m) are expanded by convolution, independently of the Stirling table.
pub fn verify_bivariate(pmax: u32, order: usize) -> VerificationReport {
    let name = "bivariate-f";
    let range = format!("alpha-degree<={pmax}, order {order}");
    let degree = pmax as usize;
    let lambda = Lambda::catalan();

    // Route one: α^q coefficient of F at z^n is [z^n](log C)^q / q!.
    let direct: Vec<Series> = (0..=pmax)
        .map(|q| log_pow_direct(ExpansionRequest::new(q, lambda, order)))
        .collect();

    // Route two: C(α,m) as α-polynomials truncated to the checked degree.
    // C(α,0) = 1; C(α,m) = C(α,m−1)·(α − (m−1))/m.
    let mut binom_polys: Vec<Vec<Rational>> = Vec::with_capacity(order + 1);
    binom_polys.push(vec![Rational::one()]);
    for m in 1..=order {
        let prev = &binom_polys[m - 1];
        let len = (m + 1).min(degree + 1);
        let mut next = vec![Rational::zero(); len.max(1)];
        let shift = Rational::from(m as i64 - 1);
        let inv_m = Rational::new(1, m as i64);
        for (i, coeff) in prev.iter().enumerate() {
            // (α − (m−1))·α^i contributes to degrees i+1 and i.
            if i < degree {
                next[i + 1] += coeff * &inv_m;
            }
            next[i] -= coeff * &shift * &inv_m;
        }
        binom_polys.push(next);
    }

    for n in 0..=order {
        for q in 0..=degree {
            let lhs = direct[q].coeff(n) / Rational::from(factorial(q));
            let mut rhs = Rational::zero();
            for m in 0..=n {
                if let Some(c) = binom_polys[m].get(q) {
                    rhs += c * u_power_coeff(n, m, lambda);
                }
            }
            if lhs != rhs {
                return VerificationReport::fail(
                    name,
                    range,
                    format!("n={n}, alpha-degree={q}"),
                    lhs.to_string(),
                    rhs.to_string(),
                );
            }
        }
    }
    VerificationReport::pass(name, range)
}
