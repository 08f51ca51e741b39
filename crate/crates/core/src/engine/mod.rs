//! The sparse GCD pipeline. The primitive case runs six stages:
//!
//! 1. pick an isolating vector `s` and homogenize both inputs;
//! 2. bound the term count of every `y`-layer of the GCD by early
//!    termination on Hankel minors of scaled univariate GCD images;
//! 3. diversify the inputs and pick an evaluation point;
//! 4. evaluate univariate GCD images on the interpolation grid;
//! 5. interpolate each layer and undo the diversification;
//! 6. sum the layers, remove the monomial content and normalize.
//!
//! [`gcd`] adds the monomial content split around it.

mod config;
mod hankel;
mod images;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub use config::{ExtensionPolicy, GcdConfig, TermStrategy};
pub use hankel::hankel_first_singular;

use crate::error::{Error, Result, Stage};
use crate::field::{find_primitive_root, subfield_primitive, ExtField, Field, PrimeField};
use crate::interp::{interpolate, EvalGrid};
use crate::sparse::{
    choose_isolating_vector, diversify, homogenize, monomial_content, monomial_primitive,
    undiversify, Monomial, Side, SparsePoly,
};
use crate::unipoly::{gcd as uni_gcd, UniPoly};
use hankel::HankelMinors;
use images::ImageEvaluator;

/// The primitive element used for `p = 10000019` unless overridden.
pub const DEFAULT_OMEGA_10000019: u64 = 6;

/// Per-layer term bounds found by early termination.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TermBounds {
    /// `y`-degrees of the non-leading layers, increasing.
    pub layer_degrees: Vec<u64>,
    /// `T_i` for each entry of `layer_degrees`.
    pub bounds: Vec<usize>,
    /// `y`-degree of the leading layer.
    pub top_degree: u64,
}

impl TermBounds {
    /// Global bound `T = max T_i` (0 without non-leading layers).
    pub fn max(&self) -> usize {
        self.bounds.iter().copied().max().unwrap_or(0)
    }

    /// Number of layers including the leading one.
    pub fn layer_count(&self) -> usize {
        self.bounds.len() + 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StageTimings {
    pub isolation: Duration,
    pub term_bounds: Duration,
    pub diversify: Duration,
    pub evaluate: Duration,
    pub interpolate: Duration,
    pub assemble: Duration,
}

/// What a successful primitive GCD run chose and measured. Field elements
/// are listed by their coordinates over `F_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StageTrace {
    pub s: Vec<u32>,
    pub isolated: Side,
    pub isolation_samples: usize,
    /// Degree `k` of the smallest extension whose group holds the exponents.
    pub base_degree: usize,
    /// Stage II extension degree over `F_{p^k}`.
    pub r: usize,
    /// Stage III extension degree over `F_{p^k}`.
    pub m: usize,
    pub sigma: Vec<Vec<u64>>,
    pub zeta: Vec<Vec<u64>>,
    pub alpha: Vec<Vec<u64>>,
    pub omega: Vec<u64>,
    pub term_bounds: TermBounds,
    /// Failed attempts before this one.
    pub retries: u32,
    pub timings: StageTimings,
}

/// Outcome of [`gcd_with_report`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdReport {
    /// `None` when the primitive parts were trivially coprime or one input was zero.
    pub trace: Option<StageTrace>,
    pub retries: u32,
}

/// `gcd(A, B)` normalized so its lexicographically leading coefficient is 1.
pub fn gcd(
    field: &PrimeField,
    a: &SparsePoly<u64>,
    b: &SparsePoly<u64>,
    cfg: &GcdConfig,
) -> Result<SparsePoly<u64>> {
    gcd_with_report(field, a, b, cfg).map(|(g, _)| g)
}

pub fn gcd_with_report(
    field: &PrimeField,
    a: &SparsePoly<u64>,
    b: &SparsePoly<u64>,
    cfg: &GcdConfig,
) -> Result<(SparsePoly<u64>, GcdReport)> {
    if a.nvars() != b.nvars() {
        return Err(Error::InvalidInput(format!(
            "inputs have {} and {} variables",
            a.nvars(),
            b.nvars()
        )));
    }
    let trivial = |g: SparsePoly<u64>| {
        (
            g,
            GcdReport {
                trace: None,
                retries: 0,
            },
        )
    };
    match (a.is_zero(), b.is_zero()) {
        (true, true) => return Err(Error::InvalidInput("gcd(0, 0) is undefined".into())),
        (true, false) => return Ok(trivial(b.lex_monic(field))),
        (false, true) => return Ok(trivial(a.lex_monic(field))),
        _ => {}
    }
    let content = monomial_content(a)?.gcd(&monomial_content(b)?);
    let pa = monomial_primitive(a)?;
    let pb = monomial_primitive(b)?;
    let one = |n| SparsePoly::constant(field, n, 1);
    if pa.len() == 1 || pb.len() == 1 {
        // a primitive single term is a constant
        return Ok(trivial(one(a.nvars()).mul_monomial(&content)));
    }
    let (g, trace) = primitive_gcd(field, &pa, &pb, cfg)?;
    let retries = trace.retries;
    Ok((
        g.mul_monomial(&content),
        GcdReport {
            trace: Some(trace),
            retries,
        },
    ))
}

/// GCD of two nonzero monomial-primitive polynomials, retrying with fresh
/// randomness up to `cfg.max_retries` times after a failed attempt.
pub fn primitive_gcd(
    field: &PrimeField,
    a: &SparsePoly<u64>,
    b: &SparsePoly<u64>,
    cfg: &GcdConfig,
) -> Result<(SparsePoly<u64>, StageTrace)> {
    if !(cfg.epsilon > 0.0 && cfg.epsilon < 1.0) {
        return Err(Error::InvalidInput(format!(
            "epsilon {} is outside (0, 1)",
            cfg.epsilon
        )));
    }
    if a.is_zero() || b.is_zero() || a.nvars() != b.nvars() {
        return Err(Error::InvalidInput(
            "primitive gcd needs two nonzero polynomials in the same ring".into(),
        ));
    }
    if !monomial_content(a)?.is_one() || !monomial_content(b)?.is_one() {
        return Err(Error::InvalidInput(
            "inputs must be monomial primitive".into(),
        ));
    }
    let shape = Shape::of(field, a, b);
    let omega = base_omega(field, &shape, cfg)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut last = None;
    for attempt in 0..=cfg.max_retries {
        match run_attempt(field, a, b, cfg, &shape, omega, &mut rng) {
            Ok((g, mut trace)) => {
                trace.retries = attempt;
                return Ok((g, trace));
            }
            Err(e) if e.is_retryable() => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.expect("at least one attempt ran"))
}

// Degree data shared by all attempts.
#[derive(Debug, Clone, Copy)]
struct Shape {
    n: usize,
    // max partial degree
    d: u64,
    // F_{p^k} is the smallest extension with p^k >= max(D + 1, 2d + 2)
    k: usize,
}

impl Shape {
    fn of(field: &PrimeField, a: &SparsePoly<u64>, b: &SparsePoly<u64>) -> Self {
        let d = a.max_partial_degree().max(b.max_partial_degree()) as u64;
        let total = a.total_degree().max(b.total_degree());
        let need = (total + 1).max(2 * d + 2) as u128;
        let p = field.modulus() as u128;
        let mut k = 1;
        let mut q = p;
        while q < need {
            q = q.saturating_mul(p);
            k += 1;
        }
        Shape { n: a.nvars(), d, k }
    }

    fn ln_q(&self, field: &PrimeField) -> f64 {
        self.k as f64 * (field.modulus() as f64).ln()
    }
}

// Primitive element of F_p when no base extension is needed.
fn base_omega(field: &PrimeField, shape: &Shape, cfg: &GcdConfig) -> Result<Option<u64>> {
    if shape.k > 1 {
        return Ok(None);
    }
    let w = match cfg.omega {
        Some(w) => field.reduce(w),
        None if field.modulus() == 10_000_019 => DEFAULT_OMEGA_10000019,
        None => find_primitive_root(field)?,
    };
    // exponents up to 2d are read off powers of omega
    let mut x = 1u64;
    for e in 1..=2 * shape.d {
        x = field.mul(&x, &w);
        if x == 1 || x == 0 {
            return Err(Error::InvalidInput(format!(
                "omega = {w} has order {e}, but exponents up to {} must be distinguishable",
                2 * shape.d
            )));
        }
    }
    if w == 0 {
        return Err(Error::InvalidInput("omega must be nonzero".into()));
    }
    Ok(Some(w))
}

fn check_deadline(cfg: &GcdConfig) -> Result<()> {
    match cfg.deadline {
        Some(t) if Instant::now() > t => Err(Error::DeadlineExceeded),
        _ => Ok(()),
    }
}

fn retag(stage: Stage) -> impl Fn(Error) -> Error {
    move |e| match e {
        Error::Failure { .. } | Error::DeadlineExceeded => e,
        e if e.is_retryable() => Error::failure(stage, e.to_string()),
        e => e,
    }
}

fn stage_two_degree(field: &PrimeField, shape: &Shape, cfg: &GcdConfig, s_max: u32) -> usize {
    match cfg.extension {
        ExtensionPolicy::BaseFieldOnly => 1,
        ExtensionPolicy::Formula => {
            let n = shape.n as f64;
            let d = shape.d.max(1) as f64;
            let num = (1.0 / cfg.epsilon).ln()
                + 86f64.ln()
                + 2.0 * n * (d + 1.0).ln()
                + 2.0 * (n * d).ln()
                + (s_max.max(1) as f64).ln();
            ((num / shape.ln_q(field)).ceil() as usize).max(1)
        }
    }
}

fn stage_three_degree(field: &PrimeField, shape: &Shape, cfg: &GcdConfig, t: usize) -> usize {
    match cfg.extension {
        ExtensionPolicy::BaseFieldOnly => 1,
        ExtensionPolicy::Formula => {
            let n = shape.n as f64;
            let d = shape.d.max(1) as f64;
            let num = (1.0 / cfg.epsilon).ln()
                + 42f64.ln()
                + (n + 1.0).ln()
                + 2.0 * (n * d * t.max(1) as f64).ln();
            ((num / shape.ln_q(field)).ceil() as usize).max(1)
        }
    }
}

fn coords<F: Field>(field: &F, v: &[F::Elem]) -> Vec<Vec<u64>> {
    v.iter().map(|x| field.coordinates(x)).collect()
}

fn lift<F: Field>(field: &F, f: &SparsePoly<u64>) -> SparsePoly<F::Elem> {
    f.map_coeffs(field, |&c| field.from_u64(c))
}

fn run_attempt<R: Rng>(
    base: &PrimeField,
    a: &SparsePoly<u64>,
    b: &SparsePoly<u64>,
    cfg: &GcdConfig,
    shape: &Shape,
    omega: Option<u64>,
    rng: &mut R,
) -> Result<(SparsePoly<u64>, StageTrace)> {
    check_deadline(cfg)?;
    let mut timings = StageTimings::default();
    let clock = Instant::now();
    let iso = choose_isolating_vector(a, b, cfg.isolation_strategy, rng)?;
    timings.isolation = clock.elapsed();

    let clock = Instant::now();
    let s_max = iso.s.iter().copied().max().unwrap_or(1);
    let r = stage_two_degree(base, shape, cfg, s_max);
    let degree = shape.k * r;
    let (bounds, sigma) = if degree == 1 {
        stage_two(base, a, b, &iso.s, shape, cfg, rng)
    } else {
        let ext = ExtField::random(*base, degree, rng);
        stage_two(&ext, a, b, &iso.s, shape, cfg, rng)
    }
    .map_err(retag(Stage::TermBounds))?;
    timings.term_bounds = clock.elapsed();

    let mut trace = StageTrace {
        s: iso.s.clone(),
        isolated: iso.side,
        isolation_samples: iso.samples,
        base_degree: shape.k,
        r,
        m: 1,
        sigma,
        zeta: Vec::new(),
        alpha: Vec::new(),
        omega: Vec::new(),
        term_bounds: bounds,
        retries: 0,
        timings,
    };
    if trace.term_bounds.top_degree == 0 {
        // the GCD image is constant in y: the primitive GCD is 1
        return Ok((SparsePoly::constant(base, shape.n, 1), trace));
    }
    let m = stage_three_degree(base, shape, cfg, trace.term_bounds.max());
    trace.m = m;
    let degree = shape.k * m;
    let g = if degree == 1 {
        let w = omega.expect("omega exists when k = 1");
        stages_three_to_six(base, base, a, b, shape, cfg, w, &mut trace, rng)?
    } else {
        let ext = ExtField::random(*base, degree, rng);
        let w = match omega {
            Some(w) => ext.from_u64(w),
            None => subfield_primitive(&ext, shape.k)?,
        };
        stages_three_to_six(base, &ext, a, b, shape, cfg, w, &mut trace, rng)?
    };
    Ok((g, trace))
}

// Stage II: returns the term bounds and sigma.
fn stage_two<F: Field, R: Rng>(
    field: &F,
    a: &SparsePoly<u64>,
    b: &SparsePoly<u64>,
    s: &[u32],
    shape: &Shape,
    cfg: &GcdConfig,
    rng: &mut R,
) -> Result<(TermBounds, Vec<Vec<u64>>)> {
    let f1 = homogenize(field, &lift(field, a), s);
    let f2 = homogenize(field, &lift(field, b), s);
    let sigma: Vec<F::Elem> = (0..shape.n).map(|_| field.random_nonzero(rng)).collect();
    let prod = sigma.iter().fold(field.one(), |acc, x| field.mul(&acc, x));
    let eval = ImageEvaluator::new(field, &f1, &f2, &sigma);
    let cap = ((shape.d + 1) as u128).saturating_pow(shape.n as u32);

    let mut etas: Vec<Vec<F::Elem>> = Vec::new();
    let mut top: Option<usize> = None;
    let mut minors: std::collections::BTreeMap<usize, HankelMinors<F::Elem>> = Default::default();
    let mut t = 1usize;
    loop {
        check_deadline(cfg)?;
        let need = 2 * t - 1;
        if etas.len() < need {
            let fresh = eval.map_range(
                field,
                etas.len() as u64 + 1,
                need as u64 + 1,
                |i, p1, p2| scaled_image(field, p1, p2, &prod, i, shape.d),
            );
            for g in fresh {
                let g = g.ok_or_else(|| {
                    Error::failure(Stage::TermBounds, "leading coefficient vanishes at sigma^i")
                })?;
                let deg = g.len() - 1;
                if *top.get_or_insert(deg) != deg {
                    return Err(Error::failure(
                        Stage::TermBounds,
                        "univariate GCD images differ in degree",
                    ));
                }
                etas.push(g);
            }
        }
        let top_deg = top.expect("at least one image");
        if top_deg == 0 {
            break;
        }
        let support: BTreeSet<usize> = etas[..need]
            .iter()
            .flat_map(|g| (0..top_deg).filter(|&j| !field.is_zero(&g[j])))
            .collect();
        for &j in &support {
            let seq: Vec<F::Elem> = etas[..need].iter().map(|g| g[j].clone()).collect();
            minors
                .entry(j)
                .or_insert_with(HankelMinors::new)
                .extend(field, &seq, t);
        }
        if minors.values().all(|m| m.singular_at().is_some()) {
            break;
        }
        t = match cfg.term_strategy {
            TermStrategy::Doubling => 2 * t,
            TermStrategy::Linear => t + 1,
        };
        if t as u128 > cap {
            return Err(Error::failure(
                Stage::TermBounds,
                format!("term bound exceeded (d + 1)^n = {cap}"),
            ));
        }
    }
    let top_deg = top.expect("at least one image");
    let mut bounds = TermBounds {
        top_degree: top_deg as u64,
        ..Default::default()
    };
    for (&j, m) in &minors {
        let first = m.singular_at().expect("loop exits once all are singular");
        let scheduled = match cfg.term_strategy {
            TermStrategy::Doubling => first.next_power_of_two(),
            TermStrategy::Linear => first,
        };
        if scheduled <= 1 {
            return Err(Error::failure(
                Stage::TermBounds,
                "a layer sequence starts with zero",
            ));
        }
        bounds.layer_degrees.push(j as u64);
        bounds.bounds.push(scheduled - 1);
    }
    Ok((bounds, coords(field, &sigma)))
}

// Monic GCD of two images scaled by prod^(i d); None if a leading coefficient vanishes.
fn scaled_image<F: Field>(
    field: &F,
    p1: &[F::Elem],
    p2: &[F::Elem],
    prod: &F::Elem,
    i: u64,
    d: u64,
) -> Option<Vec<F::Elem>> {
    if field.is_zero(p1.last()?) || field.is_zero(p2.last()?) {
        return None;
    }
    let g = uni_gcd(
        field,
        &UniPoly::from_coeffs(field, p1.to_vec()),
        &UniPoly::from_coeffs(field, p2.to_vec()),
    );
    let scale = field.pow_u128(prod, i as u128 * d as u128);
    Some(
        g.into_coeffs()
            .iter()
            .map(|c| field.mul(c, &scale))
            .collect(),
    )
}

#[allow(clippy::too_many_arguments)]
fn stages_three_to_six<F: Field, R: Rng>(
    base: &PrimeField,
    field: &F,
    a: &SparsePoly<u64>,
    b: &SparsePoly<u64>,
    shape: &Shape,
    cfg: &GcdConfig,
    omega: F::Elem,
    trace: &mut StageTrace,
    rng: &mut R,
) -> Result<SparsePoly<u64>> {
    let n = shape.n;
    let d = shape.d;
    let bounds = trace.term_bounds.clone();
    let top = bounds.top_degree as usize;

    // Stage III
    check_deadline(cfg)?;
    let clock = Instant::now();
    let zeta: Vec<F::Elem> = (0..n).map(|_| field.random_nonzero(rng)).collect();
    let alpha: Vec<F::Elem> = (0..n).map(|_| field.random_nonzero(rng)).collect();
    let f1 = homogenize(field, &diversify(field, &lift(field, a), &zeta)?, &trace.s);
    let f2 = homogenize(field, &diversify(field, &lift(field, b), &zeta)?, &trace.s);
    trace.zeta = coords(field, &zeta);
    trace.alpha = coords(field, &alpha);
    trace.omega = field.coordinates(&omega);
    trace.timings.diversify = clock.elapsed();

    // Stage IV: rows[0] at alpha, rows[k + 1] at alpha with coordinate k shifted by omega
    check_deadline(cfg)?;
    let clock = Instant::now();
    let columns = 2 * bounds.max() as u64;
    let mut rows: Vec<Vec<Vec<F::Elem>>> = Vec::with_capacity(n + 1);
    for row in 0..=n {
        check_deadline(cfg)?;
        let mut point = alpha.clone();
        if row > 0 {
            point[row - 1] = field.mul(&point[row - 1], &omega);
        }
        let prod = point.iter().fold(field.one(), |acc, x| field.mul(&acc, x));
        let eval = ImageEvaluator::new(field, &f1, &f2, &point);
        let images = eval.map_range(field, 1, columns + 1, |i, p1, p2| {
            scaled_image(field, p1, p2, &prod, i, d)
        });
        let mut per_layer = vec![Vec::with_capacity(columns as usize); bounds.bounds.len()];
        for g in images {
            let g = g.ok_or_else(|| {
                Error::failure(Stage::Evaluate, "leading coefficient vanishes on the grid")
            })?;
            if g.len() != top + 1 {
                return Err(Error::failure(
                    Stage::Evaluate,
                    "GCD image degree differs from stage II",
                ));
            }
            let mut layer = 0;
            for (j, c) in g[..top].iter().enumerate() {
                if bounds.layer_degrees.get(layer) == Some(&(j as u64)) {
                    per_layer[layer].push(c.clone());
                    layer += 1;
                } else if !field.is_zero(c) {
                    return Err(Error::failure(
                        Stage::Evaluate,
                        format!("unexpected term at y^{j}"),
                    ));
                }
            }
        }
        rows.push(per_layer);
    }
    trace.timings.evaluate = clock.elapsed();

    // Stage V
    check_deadline(cfg)?;
    let clock = Instant::now();
    let seeds: Vec<u64> = bounds.bounds.iter().map(|_| rng.gen()).collect();
    let bound = 2 * d;
    let layers: Vec<SparsePoly<F::Elem>> = (0..bounds.bounds.len())
        .into_par_iter()
        .map(|j| {
            let t = bounds.bounds[j];
            let grid = EvalGrid {
                base_row: rows[0][j][..2 * t].to_vec(),
                shifted_rows: (1..=n).map(|k| rows[k][j][..2 * t].to_vec()).collect(),
                alpha: alpha.clone(),
                omega: omega.clone(),
            };
            let mut layer_rng = ChaCha8Rng::seed_from_u64(seeds[j]);
            let h = interpolate(field, &grid, bound, t, &mut layer_rng).map_err(|e| {
                Error::failure(
                    Stage::Interpolate,
                    format!("layer y^{}: {e}", bounds.layer_degrees[j]),
                )
            })?;
            undiversify(field, &h, &zeta)
        })
        .collect::<Result<_>>()?;
    // the leading layer (x_1 ... x_n)^d, scaled like the others
    let top_layer = undiversify(
        field,
        &SparsePoly::monomial(field, field.one(), &Monomial(vec![d as u32; n])),
        &zeta,
    )?;
    trace.timings.interpolate = clock.elapsed();

    // Stage VI
    let clock = Instant::now();
    let sum = SparsePoly::from_terms(
        field,
        n,
        layers
            .iter()
            .chain(std::iter::once(&top_layer))
            .flat_map(|h| h.terms().map(|(c, e)| (c.clone(), e.to_vec()))),
    );
    let g = monomial_primitive(&sum)?.lex_monic(field);
    let coeffs: Vec<(u64, Vec<u32>)> = g
        .terms()
        .map(|(c, e)| {
            field.to_base(c).map(|c| (c, e.to_vec())).ok_or_else(|| {
                Error::failure(Stage::Assemble, "coefficient outside the prime field")
            })
        })
        .collect::<Result<_>>()?;
    trace.timings.assemble = clock.elapsed();
    Ok(SparsePoly::from_u64_terms(base, n, &coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sparse::homogenize;

    fn poly(f: &PrimeField, n: usize, terms: &[(u64, &[u32])]) -> SparsePoly<u64> {
        SparsePoly::from_terms(
            f,
            n,
            terms.iter().map(|(c, e)| (f.from_u64(*c), e.to_vec())),
        )
    }

    fn mul(f: &PrimeField, a: &SparsePoly<u64>, b: &SparsePoly<u64>) -> SparsePoly<u64> {
        SparsePoly::from_terms(
            f,
            a.nvars(),
            a.terms().flat_map(|(c, e)| {
                b.terms().map(move |(c2, e2)| {
                    (f.mul(c, c2), e.iter().zip(e2).map(|(x, y)| x + y).collect())
                })
            }),
        )
    }

    #[test]
    fn shared_linear_factor_over_f11() {
        let f = PrimeField::new(11).unwrap();
        let g = poly(&f, 2, &[(1, &[1, 0]), (1, &[0, 1])]);
        let a = mul(&f, &g, &poly(&f, 2, &[(1, &[1, 1]), (1, &[0, 0])]));
        let b = mul(&f, &g, &poly(&f, 2, &[(1, &[1, 0]), (2, &[0, 0])]));
        for policy in [ExtensionPolicy::Formula, ExtensionPolicy::BaseFieldOnly] {
            for seed in 0..5 {
                let cfg = GcdConfig {
                    seed,
                    extension: policy,
                    ..GcdConfig::default()
                };
                assert_eq!(gcd(&f, &a, &b, &cfg).unwrap(), g, "{policy:?} seed {seed}");
            }
        }
    }

    #[test]
    fn gcd_with_itself_is_monic_input() {
        let f = PrimeField::new(10_000_019).unwrap();
        let a = poly(
            &f,
            3,
            &[
                (5, &[2, 0, 1]),
                (3, &[0, 4, 0]),
                (9, &[1, 1, 1]),
                (2, &[0, 0, 0]),
            ],
        );
        let g = gcd(&f, &a, &a, &GcdConfig::default()).unwrap();
        assert_eq!(g, a.lex_monic(&f));
    }

    #[test]
    fn coprime_inputs_give_one() {
        let f = PrimeField::new(10_000_019).unwrap();
        let a = poly(&f, 2, &[(1, &[2, 0]), (3, &[0, 1]), (1, &[0, 0])]);
        let b = poly(&f, 2, &[(1, &[1, 1]), (5, &[0, 0])]);
        let g = gcd(&f, &a, &b, &GcdConfig::default()).unwrap();
        assert_eq!(g, poly(&f, 2, &[(1, &[0, 0])]));
    }

    #[test]
    fn content_is_restored() {
        let f = PrimeField::new(10_000_019).unwrap();
        let g0 = poly(&f, 2, &[(1, &[1, 0]), (1, &[0, 1])]);
        let a = mul(&f, &g0, &poly(&f, 2, &[(1, &[2, 1])]));
        let b = mul(&f, &g0, &poly(&f, 2, &[(1, &[1, 2])]));
        let g = gcd(&f, &a, &b, &GcdConfig::default()).unwrap();
        assert_eq!(g, poly(&f, 2, &[(1, &[2, 1]), (1, &[1, 2])]));
    }

    #[test]
    fn monomials_and_zero() {
        let f = PrimeField::new(7).unwrap();
        let x3 = poly(&f, 1, &[(1, &[3])]);
        let x = poly(&f, 1, &[(1, &[1])]);
        assert_eq!(gcd(&f, &x3, &x, &GcdConfig::default()).unwrap(), x);
        let a = poly(&f, 2, &[(3, &[1, 0]), (2, &[0, 1])]);
        let zero = SparsePoly::zero(2);
        assert_eq!(
            gcd(&f, &a, &zero, &GcdConfig::default()).unwrap(),
            a.lex_monic(&f)
        );
        assert!(gcd(&f, &zero, &zero, &GcdConfig::default()).is_err());
    }

    #[test]
    fn small_prime_uses_extensions() {
        let f = PrimeField::new(7).unwrap();
        let g = poly(&f, 2, &[(1, &[3, 1]), (2, &[1, 2]), (3, &[0, 0])]);
        let a = mul(
            &f,
            &g,
            &poly(&f, 2, &[(1, &[2, 0]), (4, &[0, 3]), (1, &[1, 1])]),
        );
        let b = mul(
            &f,
            &g,
            &poly(&f, 2, &[(1, &[0, 2]), (5, &[1, 0]), (6, &[0, 0])]),
        );
        for seed in 0..5 {
            let (got, report) = gcd_with_report(&f, &a, &b, &GcdConfig::with_seed(seed)).unwrap();
            assert_eq!(got, g.lex_monic(&f));
            let trace = report.trace.unwrap();
            assert!(trace.base_degree * trace.m > 1);
        }
    }

    #[test]
    fn term_bounds_bracket_layers() {
        let f = PrimeField::new(10_000_019).unwrap();
        let g = poly(
            &f,
            2,
            &[
                (5, &[3, 1]),
                (7, &[5, 8]),
                (4, &[9, 4]),
                (1, &[0, 0]),
                (8, &[2, 2]),
            ],
        );
        let a = mul(
            &f,
            &g,
            &poly(&f, 2, &[(1, &[1, 0]), (3, &[0, 1]), (2, &[0, 0])]),
        );
        let b = mul(
            &f,
            &g,
            &poly(&f, 2, &[(1, &[0, 2]), (3, &[1, 1]), (5, &[0, 0])]),
        );
        for strategy in [TermStrategy::Doubling, TermStrategy::Linear] {
            let cfg = GcdConfig {
                term_strategy: strategy,
                ..GcdConfig::default()
            };
            let (got, report) = gcd_with_report(&f, &a, &b, &cfg).unwrap();
            assert_eq!(got, g.lex_monic(&f));
            let trace = report.trace.unwrap();
            let h = homogenize(&f, &g, &trace.s);
            let counts: Vec<usize> = h.layers()[..h.layers().len() - 1]
                .iter()
                .map(|(_, p)| p.len())
                .collect();
            assert_eq!(counts.len(), trace.term_bounds.bounds.len());
            for (c, t) in counts.iter().zip(&trace.term_bounds.bounds) {
                assert!(c <= t && *t < 2 * c, "{c} vs {t}");
            }
        }
    }

    #[test]
    fn seeds_are_deterministic() {
        let f = PrimeField::new(10_000_019).unwrap();
        let g = poly(&f, 3, &[(1, &[1, 2, 0]), (3, &[0, 1, 1]), (4, &[0, 0, 0])]);
        let a = mul(&f, &g, &poly(&f, 3, &[(1, &[1, 0, 1]), (2, &[0, 0, 0])]));
        let b = mul(&f, &g, &poly(&f, 3, &[(1, &[0, 3, 0]), (7, &[1, 0, 0])]));
        let cfg = GcdConfig::with_seed(99);
        let (g1, r1) = gcd_with_report(&f, &a, &b, &cfg).unwrap();
        let (g2, r2) = gcd_with_report(&f, &a, &b, &cfg).unwrap();
        assert_eq!(g1, g2);
        let (t1, t2) = (r1.trace.unwrap(), r2.trace.unwrap());
        assert_eq!(
            (t1.s, t1.sigma, t1.zeta, t1.alpha),
            (t2.s, t2.sigma, t2.zeta, t2.alpha)
        );
    }

    #[test]
    fn rejects_bad_omega() {
        let f = PrimeField::new(10_000_019).unwrap();
        let a = poly(&f, 1, &[(1, &[3]), (1, &[0])]);
        let b = poly(&f, 1, &[(1, &[2]), (2, &[0])]);
        let cfg = GcdConfig {
            omega: Some(1),
            ..GcdConfig::default()
        };
        assert!(matches!(gcd(&f, &a, &b, &cfg), Err(Error::InvalidInput(_))));
    }
}
