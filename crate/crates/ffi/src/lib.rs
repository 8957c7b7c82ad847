//! C ABI over `uhsl2`.
//!
//! Objects cross the boundary as opaque handles released with their `_free`
//! function. Exact values cross as strings: polynomials in the canonical text
//! form (`-(1/2)*h`), matrices and reports as JSON. Strings returned through
//! `out` parameters belong to the caller and are released with
//! [`uhsl2_string_free`]. Half-integers are passed doubled (`twice_j = 3` means
//! `j = 3/2`). Every fallible call returns a [`Uhsl2Status`]; on failure
//! [`uhsl2_last_error`] describes the problem.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;

use uhsl2::algebra::{Generator, Irrep};
use uhsl2::coupling;
use uhsl2::halfint::HalfInt;
use uhsl2::report::Report;
use uhsl2::scalar::json::encode_matrix;
use uhsl2::tensor_ops::{self, OpSpaceContext, TensorOpFamily};
use uhsl2::{suite, wigner_eckart, Error};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Uhsl2Status {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Domain = 3,
    SelectionRule = 4,
    /// A verification ran and at least one check failed.
    VerificationFailed = 5,
    Internal = 6,
}

/// Concrete tensor operator families.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Uhsl2FamilyKind {
    /// `(-a1+, -a2 + h(N2-1)a1+)` on the four-dimensional Fock space.
    FermionFirst = 0,
    /// `(a2+, -a1 - h(N1-1)a2+)` on the four-dimensional Fock space.
    FermionSecond = 1,
    /// Rank 1/2 boson family `W(j) -> W(j+1/2)`.
    BosonRaising = 2,
    /// Rank 1/2 boson family `W(j) -> W(j-1/2)`, `j >= 1/2`.
    BosonLowering = 3,
    /// Rank 1 family built from the generators on `W(j)`.
    Rank1 = 4,
    /// Rank 0 identity on `W(j)`.
    Identity = 5,
}

/// Irreducible representation `W(j)`.
pub struct Uhsl2Irrep {
    inner: Irrep,
}

/// Tensor operator family with its source and target spaces.
pub struct Uhsl2Family {
    inner: TensorOpFamily,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).expect("nul bytes removed"));
}

fn status_of(e: &Error) -> Uhsl2Status {
    match e {
        Error::SelectionRule { .. } => Uhsl2Status::SelectionRule,
        Error::Domain(_) => Uhsl2Status::Domain,
        Error::Parse(_) => Uhsl2Status::InvalidArgument,
        _ => Uhsl2Status::Internal,
    }
}

struct Fail(Uhsl2Status, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

type Outcome<T> = Result<T, Fail>;

fn null(what: &str) -> Fail {
    Fail(Uhsl2Status::NullPointer, format!("{what} is null"))
}

/// Runs `f`, records any error and converts panics into `Internal`.
fn guard(f: impl FnOnce() -> Outcome<Uhsl2Status>) -> Uhsl2Status {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => {
            if s == Uhsl2Status::Ok {
                set_error("");
            }
            s
        }
        Ok(Err(Fail(s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            Uhsl2Status::Internal
        }
    }
}

fn weight(twice: i64) -> HalfInt {
    HalfInt::from_twice(twice)
}

fn nonnegative(label: &str, twice: i64) -> Outcome<HalfInt> {
    if twice < 0 {
        return Err(Fail(Uhsl2Status::InvalidArgument, format!("{label} must be non-negative, got twice = {twice}")));
    }
    Ok(weight(twice))
}

/// # Safety
/// `out` must be null or valid for writes.
unsafe fn write_string(out: *mut *mut c_char, s: String) -> Outcome<()> {
    if out.is_null() {
        return Err(null("out"));
    }
    let c = CString::new(s).map_err(|_| Fail(Uhsl2Status::Internal, "string contains a nul byte".into()))?;
    *out = c.into_raw();
    Ok(())
}

/// # Safety
/// `out` must be null or valid for writes.
unsafe fn write_handle<T>(out: *mut *mut T, value: T) -> Outcome<()> {
    if out.is_null() {
        return Err(null("out"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

/// # Safety
/// `p` must be null or a handle from this library that has not been freed.
unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Outcome<&'a T> {
    p.as_ref().ok_or_else(|| null(what))
}

fn to_json<T: serde::Serialize>(v: &T) -> Outcome<String> {
    serde_json::to_string(v).map_err(|e| Fail(Uhsl2Status::Internal, e.to_string()))
}

fn report_status(r: &Report) -> Uhsl2Status {
    if r.passed() {
        Uhsl2Status::Ok
    } else {
        Uhsl2Status::VerificationFailed
    }
}

/// Library version as a static nul-terminated string.
#[no_mangle]
pub extern "C" fn uhsl2_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the most recent failure on this thread; empty after a success.
/// Valid until the next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn uhsl2_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn uhsl2_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds `W(j)`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn uhsl2_irrep_new(twice_j: i64, out: *mut *mut Uhsl2Irrep) -> Uhsl2Status {
    guard(|| {
        let j = nonnegative("j", twice_j)?;
        write_handle(out, Uhsl2Irrep { inner: Irrep::new(j)? })?;
        Ok(Uhsl2Status::Ok)
    })
}

/// Releases an irrep. Null is ignored.
///
/// # Safety
/// `irrep` must be null or a live handle from [`uhsl2_irrep_new`].
#[no_mangle]
pub unsafe extern "C" fn uhsl2_irrep_free(irrep: *mut Uhsl2Irrep) {
    if !irrep.is_null() {
        drop(Box::from_raw(irrep));
    }
}

/// Dimension `2j + 1`, or 0 for a null handle.
///
/// # Safety
/// `irrep` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn uhsl2_irrep_dim(irrep: *const Uhsl2Irrep) -> usize {
    irrep.as_ref().map_or(0, |i| i.inner.dim())
}

/// JSON matrix (`{"shape": [r, c], "data": [...]}`) of a generator: `X`, `Y`,
/// `H`, `expHX`, `expmHX` or `unit`.
///
/// # Safety
/// `irrep` must be a live handle, `name` a nul-terminated string, `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn uhsl2_irrep_generator_json(
    irrep: *const Uhsl2Irrep,
    name: *const c_char,
    out: *mut *mut c_char,
) -> Uhsl2Status {
    guard(|| {
        let irrep = borrow(irrep, "irrep")?;
        if name.is_null() {
            return Err(null("name"));
        }
        let name = CStr::from_ptr(name).to_str().map_err(|_| Fail(Uhsl2Status::InvalidArgument, "name is not UTF-8".into()))?;
        let g: Generator = name.parse()?;
        write_string(out, to_json(&encode_matrix(&irrep.inner.rep.generator(g)))?)?;
        Ok(Uhsl2Status::Ok)
    })
}

/// `alpha_{k1,k2}^{m1,m2}` for `W(j1) (x) W(j2)` in canonical text form.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn uhsl2_alpha(
    twice_j1: i64,
    twice_j2: i64,
    twice_k1: i64,
    twice_k2: i64,
    twice_m1: i64,
    twice_m2: i64,
    out: *mut *mut c_char,
) -> Uhsl2Status {
    guard(|| {
        let (j1, j2) = (nonnegative("j1", twice_j1)?, nonnegative("j2", twice_j2)?);
        let a = coupling::alpha(j1, j2, weight(twice_k1), weight(twice_k2), weight(twice_m1), weight(twice_m2))?;
        write_string(out, a.to_string())?;
        Ok(Uhsl2Status::Ok)
    })
}

/// Deformed Clebsch-Gordan coefficient: the `|k1 k2>` component of the
/// coupled vector `|j m>` in `W(j1) (x) W(j2)`, in canonical text form.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn uhsl2_cgc(
    twice_j1: i64,
    twice_j2: i64,
    twice_j: i64,
    twice_k1: i64,
    twice_k2: i64,
    twice_m: i64,
    out: *mut *mut c_char,
) -> Uhsl2Status {
    guard(|| {
        let (j1, j2, j) = (nonnegative("j1", twice_j1)?, nonnegative("j2", twice_j2)?, nonnegative("j", twice_j)?);
        let c = coupling::uh_cgc(j1, j2, j, weight(twice_k1), weight(twice_k2), weight(twice_m))?;
        write_string(out, c.to_string())?;
        Ok(Uhsl2Status::Ok)
    })
}

/// Decomposition of `W(j1) (x) W(j2)` as text, e.g. `1 ⊕ 0`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn uhsl2_decompose(twice_j1: i64, twice_j2: i64, out: *mut *mut c_char) -> Uhsl2Status {
    guard(|| {
        let basis = coupling::coupled_basis(nonnegative("j1", twice_j1)?, nonnegative("j2", twice_j2)?)?;
        write_string(out, basis.summary())?;
        Ok(Uhsl2Status::Ok)
    })
}

/// Builds a concrete family. `twice_j` is the source weight for the boson,
/// rank 1 and identity kinds and is ignored for the fermion kinds.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn uhsl2_family_new(kind: Uhsl2FamilyKind, twice_j: i64, out: *mut *mut Uhsl2Family) -> Uhsl2Status {
    guard(|| {
        let fam = match kind {
            Uhsl2FamilyKind::FermionFirst => tensor_ops::fermion_realization()?.first,
            Uhsl2FamilyKind::FermionSecond => tensor_ops::fermion_realization()?.second,
            Uhsl2FamilyKind::BosonRaising => tensor_ops::boson_raising(nonnegative("j", twice_j)?)?,
            Uhsl2FamilyKind::BosonLowering => tensor_ops::boson_lowering(nonnegative("j", twice_j)?)?,
            Uhsl2FamilyKind::Rank1 => tensor_ops::rank1_generators(nonnegative("j", twice_j)?)?,
            Uhsl2FamilyKind::Identity => {
                let rep = Irrep::new(nonnegative("j", twice_j)?)?.rep;
                tensor_ops::identity_family(OpSpaceContext::endo(Arc::new(rep)))
            }
        };
        write_handle(out, Uhsl2Family { inner: fam })?;
        Ok(Uhsl2Status::Ok)
    })
}

/// Restricts a family to irreducible blocks of its source and target spaces,
/// numbered in the order the spaces list them (for the fermion Fock space:
/// 0 is `W(1/2)`, 1 and 2 are the two copies of `W(0)`).
///
/// # Safety
/// `family` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn uhsl2_family_restrict(
    family: *const Uhsl2Family,
    source_block: usize,
    target_block: usize,
    out: *mut *mut Uhsl2Family,
) -> Uhsl2Status {
    guard(|| {
        let fam = &borrow(family, "family")?.inner;
        let pick = |blocks: &[uhsl2::algebra::Block], i: usize, side: &str| {
            blocks.get(i).cloned().ok_or_else(|| {
                Fail(Uhsl2Status::InvalidArgument, format!("{side} has {} blocks, index {i} out of range", blocks.len()))
            })
        };
        let s = pick(&fam.context.source.blocks, source_block, "source")?;
        let t = pick(&fam.context.target.blocks, target_block, "target")?;
        write_handle(out, Uhsl2Family { inner: fam.restrict(&s, &t) })?;
        Ok(Uhsl2Status::Ok)
    })
}

/// Releases a family. Null is ignored.
///
/// # Safety
/// `family` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn uhsl2_family_free(family: *mut Uhsl2Family) {
    if !family.is_null() {
        drop(Box::from_raw(family));
    }
}

/// Twice the rank, or -1 for a null handle.
///
/// # Safety
/// `family` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn uhsl2_family_twice_rank(family: *const Uhsl2Family) -> i64 {
    family.as_ref().map_or(-1, |f| f.inner.rank.twice())
}

/// JSON matrix of the component `t_{rank, m}`.
///
/// # Safety
/// `family` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn uhsl2_family_component_json(
    family: *const Uhsl2Family,
    twice_m: i64,
    out: *mut *mut c_char,
) -> Uhsl2Status {
    guard(|| {
        let fam = &borrow(family, "family")?.inner;
        let m = weight(twice_m);
        let c =
            fam.component(m).ok_or_else(|| Fail(Uhsl2Status::Domain, format!("m = {m} is not a weight of rank {}", fam.rank)))?;
        write_string(out, to_json(&encode_matrix(c))?)?;
        Ok(Uhsl2Status::Ok)
    })
}

/// Checks the tensor operator criterion; writes the report as JSON when `out`
/// is not null. Returns `VerificationFailed` if any check fails.
///
/// # Safety
/// `family` must be a live handle; `out` null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn uhsl2_family_verify(family: *const Uhsl2Family, out: *mut *mut c_char) -> Uhsl2Status {
    guard(|| {
        let fam = &borrow(family, "family")?.inner;
        let report = tensor_ops::verify_tensor_operator(fam)?;
        if !out.is_null() {
            write_string(out, to_json(&report)?)?;
        }
        Ok(report_status(&report))
    })
}

/// Reduced matrix element `I(rank, j2, j)` in canonical text form. The family
/// must map `W(j2)` into `W(j)`; a triangle violation returns `SelectionRule`.
///
/// # Safety
/// `family` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn uhsl2_reduced_matrix_element(
    family: *const Uhsl2Family,
    twice_j2: i64,
    twice_j: i64,
    out: *mut *mut c_char,
) -> Uhsl2Status {
    guard(|| {
        let fam = &borrow(family, "family")?.inner;
        let (j2, j) = (nonnegative("j2", twice_j2)?, nonnegative("j", twice_j)?);
        let red = wigner_eckart::reduced_matrix_element(fam, j2, j)?;
        write_string(out, red.value.to_string())?;
        Ok(Uhsl2Status::Ok)
    })
}

/// Runs every suite up to `max_j`; writes the reports as a JSON array of
/// `{"stage", "reports"}` objects when `out` is not null.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn uhsl2_verify_all(twice_max_j: i64, out: *mut *mut c_char) -> Uhsl2Status {
    guard(|| {
        let run = suite::verify_all(nonnegative("max_j", twice_max_j)?);
        if !out.is_null() {
            let stages: Vec<_> =
                run.stages.iter().map(|(name, reports)| serde_json::json!({ "stage": name, "reports": reports })).collect();
            write_string(out, to_json(&stages)?)?;
        }
        Ok(if run.passed() { Uhsl2Status::Ok } else { Uhsl2Status::VerificationFailed })
    })
}
