//! C interface to `spgcd`.
//!
//! Polynomials are opaque `SpgcdPoly` handles owned by the caller and
//! released with `spgcd_poly_free`. Every fallible call returns an
//! `SpgcdStatus`; on anything but `SPGCD_STATUS_OK` a message is available
//! from `spgcd_last_error` on the same thread until the next failing call.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use spgcd::cli::format::PolyFile;
use spgcd::engine::{gcd, ExtensionPolicy, GcdConfig, TermStrategy};
use spgcd::field::PrimeField;
use spgcd::oracle::divides_exactly;
use spgcd::sparse::SparsePoly;
use spgcd::Error;

/// A polynomial over a prime field.
pub struct SpgcdPoly {
    inner: PolyFile,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpgcdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    Parse = 3,
    /// The randomized algorithm failed on every attempt.
    Failure = 4,
    DeadlineExceeded = 5,
    OutOfRange = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpgcdTermStrategy {
    Doubling = 0,
    Linear = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpgcdExtension {
    Formula = 0,
    BaseField = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct SpgcdOptions {
    pub epsilon: f64,
    pub seed: u64,
    pub max_retries: u32,
    /// Primitive element of the prime field; 0 selects one automatically.
    pub omega: u64,
    pub term_strategy: SpgcdTermStrategy,
    pub extension: SpgcdExtension,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(e: &Error) -> SpgcdStatus {
    match e {
        Error::Parse { .. } => SpgcdStatus::Parse,
        Error::DeadlineExceeded => SpgcdStatus::DeadlineExceeded,
        Error::InvalidInput(_)
        | Error::ZeroPolynomial
        | Error::BudgetExceeded(_)
        | Error::FactorizationBudgetExceeded(_) => SpgcdStatus::InvalidInput,
        _ => SpgcdStatus::Failure,
    }
}

// Runs `f`, recording any error or panic.
fn guard(f: impl FnOnce() -> Result<(), (SpgcdStatus, String)>) -> SpgcdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SpgcdStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            SpgcdStatus::Panic
        }
    }
}

fn fail(e: Error) -> (SpgcdStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (SpgcdStatus, String) {
    (SpgcdStatus::NullPointer, format!("{what} is null"))
}

unsafe fn poly_ref<'a>(
    p: *const SpgcdPoly,
    what: &str,
) -> Result<&'a SpgcdPoly, (SpgcdStatus, String)> {
    p.as_ref().ok_or_else(|| null(what))
}

fn into_handle(inner: PolyFile) -> *mut SpgcdPoly {
    Box::into_raw(Box::new(SpgcdPoly { inner }))
}

/// Message for the last failing call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn spgcd_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library defaults: epsilon 1e-3, seed 0, 3 retries, automatic omega,
/// doubling term bounds, tolerance-sized extensions.
#[no_mangle]
pub extern "C" fn spgcd_options_default() -> SpgcdOptions {
    let d = GcdConfig::default();
    SpgcdOptions {
        epsilon: d.epsilon,
        seed: d.seed,
        max_retries: d.max_retries,
        omega: 0,
        term_strategy: SpgcdTermStrategy::Doubling,
        extension: SpgcdExtension::Formula,
    }
}

/// Parses the text format (`p <prime>`, `n <nvars>`, then one term per line).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn spgcd_poly_parse(
    text: *const c_char,
    out: *mut *mut SpgcdPoly,
) -> SpgcdStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| (SpgcdStatus::Parse, "text is not UTF-8".to_string()))?;
        let pf = PolyFile::parse(text).map_err(fail)?;
        *out = into_handle(pf);
        Ok(())
    })
}

/// Builds a polynomial over `F_p` from `nterms` coefficients and a row-major
/// `nterms * nvars` exponent array. Coefficients are reduced mod `p`; repeated
/// exponent vectors are summed.
///
/// # Safety
/// `coeffs` must hold `nterms` values and `exps` `nterms * nvars` values
/// (either may be null when that count is zero); `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn spgcd_poly_from_terms(
    p: u64,
    nvars: usize,
    nterms: usize,
    coeffs: *const u64,
    exps: *const u32,
    out: *mut *mut SpgcdPoly,
) -> SpgcdStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let width = nterms.checked_mul(nvars).ok_or_else(|| {
            (
                SpgcdStatus::OutOfRange,
                "nterms * nvars overflows".to_string(),
            )
        })?;
        if (nterms > 0 && coeffs.is_null()) || (width > 0 && exps.is_null()) {
            return Err(null("term array"));
        }
        let field = PrimeField::new(p).map_err(fail)?;
        let cs: &[u64] = if nterms == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(coeffs, nterms)
        };
        let es: &[u32] = if width == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(exps, width)
        };
        let terms: Vec<(u64, Vec<u32>)> = (0..nterms)
            .map(|i| (cs[i], es[i * nvars..(i + 1) * nvars].to_vec()))
            .collect();
        let poly = SparsePoly::from_u64_terms(&field, nvars, &terms);
        *out = into_handle(PolyFile::new(field, poly));
        Ok(())
    })
}

/// Renders the text format into a new string released with `spgcd_string_free`.
///
/// # Safety
/// `poly` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn spgcd_poly_render(
    poly: *const SpgcdPoly,
    out: *mut *mut c_char,
) -> SpgcdStatus {
    guard(|| {
        let poly = poly_ref(poly, "poly")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let s = CString::new(poly.inner.render()).expect("rendered text has no NUL");
        *out = s.into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must come from `spgcd_poly_render` or be null.
#[no_mangle]
pub unsafe extern "C" fn spgcd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `poly` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn spgcd_poly_free(poly: *mut SpgcdPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// Characteristic of the coefficient field; 0 for a null handle.
///
/// # Safety
/// `poly` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn spgcd_poly_modulus(poly: *const SpgcdPoly) -> u64 {
    poly.as_ref().map_or(0, |p| p.inner.field.modulus())
}

/// # Safety
/// `poly` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn spgcd_poly_nvars(poly: *const SpgcdPoly) -> usize {
    poly.as_ref().map_or(0, |p| p.inner.poly.nvars())
}

/// Number of terms.
///
/// # Safety
/// `poly` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn spgcd_poly_len(poly: *const SpgcdPoly) -> usize {
    poly.as_ref().map_or(0, |p| p.inner.poly.len())
}

/// Copies term `index` (lexicographically increasing order) into `coeff`
/// and the `nvars` entries of `exps`.
///
/// # Safety
/// `poly` must be a live handle, `coeff` valid, and `exps` must hold
/// `spgcd_poly_nvars(poly)` values.
#[no_mangle]
pub unsafe extern "C" fn spgcd_poly_term(
    poly: *const SpgcdPoly,
    index: usize,
    coeff: *mut u64,
    exps: *mut u32,
) -> SpgcdStatus {
    guard(|| {
        let poly = &poly_ref(poly, "poly")?.inner.poly;
        if coeff.is_null() || (exps.is_null() && poly.nvars() > 0) {
            return Err(null("output"));
        }
        if index >= poly.len() {
            return Err((
                SpgcdStatus::OutOfRange,
                format!("term {index} of a {}-term polynomial", poly.len()),
            ));
        }
        *coeff = *poly.coeff(index);
        if poly.nvars() > 0 {
            std::slice::from_raw_parts_mut(exps, poly.nvars()).copy_from_slice(poly.exps_of(index));
        }
        Ok(())
    })
}

fn config(opts: &SpgcdOptions) -> GcdConfig {
    GcdConfig {
        epsilon: opts.epsilon,
        seed: opts.seed,
        max_retries: opts.max_retries,
        omega: (opts.omega != 0).then_some(opts.omega),
        term_strategy: match opts.term_strategy {
            SpgcdTermStrategy::Doubling => TermStrategy::Doubling,
            SpgcdTermStrategy::Linear => TermStrategy::Linear,
        },
        extension: match opts.extension {
            SpgcdExtension::Formula => ExtensionPolicy::Formula,
            SpgcdExtension::BaseField => ExtensionPolicy::BaseFieldOnly,
        },
        ..GcdConfig::default()
    }
}

fn same_ring(a: &PolyFile, b: &PolyFile) -> Result<(), (SpgcdStatus, String)> {
    if a.field != b.field || a.poly.nvars() != b.poly.nvars() {
        return Err((
            SpgcdStatus::InvalidInput,
            "polynomials live in different rings".to_string(),
        ));
    }
    Ok(())
}

/// Lex-monic `gcd(a, b)`. `opts` may be null for the defaults.
///
/// # Safety
/// `a`, `b` must be live handles, `opts` valid or null, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn spgcd_gcd(
    a: *const SpgcdPoly,
    b: *const SpgcdPoly,
    opts: *const SpgcdOptions,
    out: *mut *mut SpgcdPoly,
) -> SpgcdStatus {
    guard(|| {
        let (a, b) = (&poly_ref(a, "a")?.inner, &poly_ref(b, "b")?.inner);
        if out.is_null() {
            return Err(null("out"));
        }
        same_ring(a, b)?;
        let opts = opts
            .as_ref()
            .copied()
            .unwrap_or_else(|| spgcd_options_default());
        let g = gcd(&a.field, &a.poly, &b.poly, &config(&opts)).map_err(fail)?;
        *out = into_handle(PolyFile::new(a.field, g));
        Ok(())
    })
}

/// Sets `*divides` to whether `g` divides `a` exactly. When it does and
/// `quotient` is not null, the quotient is returned there.
///
/// # Safety
/// `g`, `a` must be live handles, `divides` valid, `quotient` valid or null.
#[no_mangle]
pub unsafe extern "C" fn spgcd_divides(
    g: *const SpgcdPoly,
    a: *const SpgcdPoly,
    divides: *mut bool,
    quotient: *mut *mut SpgcdPoly,
) -> SpgcdStatus {
    guard(|| {
        let (g, a) = (&poly_ref(g, "g")?.inner, &poly_ref(a, "a")?.inner);
        if divides.is_null() {
            return Err(null("divides"));
        }
        same_ring(g, a)?;
        if g.poly.is_zero() {
            return Err((
                SpgcdStatus::InvalidInput,
                "division by zero polynomial".to_string(),
            ));
        }
        let q = divides_exactly(&g.field, &g.poly, &a.poly);
        *divides = q.is_some();
        if let (Some(q), false) = (q, quotient.is_null()) {
            *quotient = into_handle(PolyFile::new(g.field, q));
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_mapping() {
        assert_eq!(
            status_of(&Error::DeadlineExceeded),
            SpgcdStatus::DeadlineExceeded
        );
        assert_eq!(
            status_of(&Error::Parse {
                line: 1,
                msg: "x".into()
            }),
            SpgcdStatus::Parse
        );
        assert_eq!(status_of(&Error::VerificationFailed), SpgcdStatus::Failure);
    }

    #[test]
    fn panics_become_status() {
        assert_eq!(guard(|| panic!("boom")), SpgcdStatus::Panic);
        let msg = unsafe { CStr::from_ptr(spgcd_last_error()) };
        assert_eq!(msg.to_str().unwrap(), "internal panic");
    }
}
