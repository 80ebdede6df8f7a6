//! C ABI over the `pythia` library.
//!
//! Every fallible call returns a [`PythiaStatus`] and writes its result
//! through an out-pointer. On failure a message is available from
//! [`pythia_last_error`] on the calling thread. Enumerations and search
//! reports are returned as opaque handles that the caller releases with
//! the matching `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use pythia::boxes::{self, BoxParams, FaceDiagonalParams};
use pythia::shared_side::FamilyParams;
use pythia::triples::{self, Triple, TripleParams};
use pythia::two_square::{self, TwoTwoParams};
use pythia::verifier::{self, Claim, SearchReport};
use pythia::{arith, Error};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PythiaStatus {
    Ok = 0,
    /// A precondition on the inputs does not hold.
    Domain = 1,
    /// An exact result does not fit the arithmetic lane.
    Overflow = 2,
    NullPointer = 3,
    InvalidArgument = 4,
    Internal = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PythiaClaim {
    Result1 = 0,
    Result2 = 1,
    Result3 = 2,
    Prop1 = 3,
    Prop2 = 4,
    Theorem1 = 5,
    Theorem2 = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PythiaTriple {
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PythiaTripleParams {
    pub delta: u64,
    pub m: u64,
    pub n: u64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PythiaTwoTwo {
    pub x: u64,
    pub y: u64,
    pub z: u64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PythiaBox {
    pub x: u64,
    pub y: u64,
    pub z: u64,
    pub t: u64,
}

/// Inputs for one of the four shared-side families. Fields a family does
/// not use are ignored.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PythiaFamilyParams {
    /// 1 to 4.
    pub family: u8,
    pub big_k: u64,
    pub m: u64,
    pub n: u64,
    pub big_m: u64,
    pub big_n: u64,
    pub d: u64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PythiaTrianglePair {
    pub t1: PythiaTriple,
    pub t2: PythiaTriple,
    pub p1: PythiaTripleParams,
    pub p2: PythiaTripleParams,
    pub shared: u64,
    /// True when the shared length is the `δ(m² − n²)` leg of triangle 1,
    /// false when it is the `2δmn` leg.
    pub odd_leg: bool,
}

/// Rows of equal arity, stored row-major.
pub struct PythiaTupleList {
    arity: usize,
    values: Vec<u64>,
}

pub struct PythiaReport {
    report: SearchReport,
    witnesses: PythiaTupleList,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(e: &Error) -> PythiaStatus {
    match e {
        Error::Overflow(_) => PythiaStatus::Overflow,
        Error::Domain(_) => PythiaStatus::Domain,
        Error::Parse(_) => PythiaStatus::InvalidArgument,
        _ => PythiaStatus::Internal,
    }
}

/// Runs `f`, translating errors and panics into a status code.
fn guard<F: FnOnce() -> Result<(), PythiaStatusError>>(f: F) -> PythiaStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PythiaStatus::Ok,
        Ok(Err(PythiaStatusError(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("panic inside pythia".into());
            PythiaStatus::Internal
        }
    }
}

struct PythiaStatusError(PythiaStatus, String);

impl From<Error> for PythiaStatusError {
    fn from(e: Error) -> Self {
        PythiaStatusError(status_of(&e), e.to_string())
    }
}

fn null_error(name: &str) -> PythiaStatusError {
    PythiaStatusError(PythiaStatus::NullPointer, format!("{name} is null"))
}

/// Writes through `out` if non-null.
///
/// # Safety
/// `out` must be null or valid for a write of `T`.
unsafe fn write_out<T>(out: *mut T, value: T, name: &str) -> Result<(), PythiaStatusError> {
    if out.is_null() {
        return Err(null_error(name));
    }
    out.write(value);
    Ok(())
}

impl From<&Triple> for PythiaTriple {
    fn from(t: &Triple) -> Self {
        PythiaTriple {
            a: t.a(),
            b: t.b(),
            c: t.c(),
        }
    }
}

impl From<&TripleParams> for PythiaTripleParams {
    fn from(p: &TripleParams) -> Self {
        PythiaTripleParams {
            delta: p.delta(),
            m: p.m(),
            n: p.n(),
        }
    }
}

impl From<&boxes::PythagoreanBox> for PythiaBox {
    fn from(b: &boxes::PythagoreanBox) -> Self {
        PythiaBox {
            x: b.x(),
            y: b.y(),
            z: b.z(),
            t: b.t(),
        }
    }
}

impl From<PythiaClaim> for Claim {
    fn from(c: PythiaClaim) -> Self {
        match c {
            PythiaClaim::Result1 => Claim::Result1,
            PythiaClaim::Result2 => Claim::Result2,
            PythiaClaim::Result3 => Claim::Result3,
            PythiaClaim::Prop1 => Claim::Prop1,
            PythiaClaim::Prop2 => Claim::Prop2,
            PythiaClaim::Theorem1 => Claim::Theorem1,
            PythiaClaim::Theorem2 => Claim::Theorem2,
        }
    }
}

/// Message for the most recent failure on this thread. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn pythia_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Narrows the single-width arithmetic lane to `bits` (8 to 64). Affects
/// the whole process.
#[no_mangle]
pub extern "C" fn pythia_set_lane_bits(bits: u32) -> PythiaStatus {
    guard(|| Ok(arith::set_lane_bits(bits)?))
}

/// # Safety
/// `out` must be valid for a write of `u64`.
#[no_mangle]
pub unsafe extern "C" fn pythia_gcd(a: u64, b: u64, out: *mut u64) -> PythiaStatus {
    guard(|| write_out(out, arith::gcd(a, b)?, "out"))
}

#[no_mangle]
pub extern "C" fn pythia_isqrt(n: u64) -> u64 {
    arith::isqrt(n)
}

#[no_mangle]
pub extern "C" fn pythia_is_perfect_square(n: u64) -> bool {
    arith::is_perfect_square(n)
}

/// # Safety
/// `out` must be valid for a write of `PythiaTriple`.
#[no_mangle]
pub unsafe extern "C" fn pythia_triple_from_params(
    delta: u64,
    m: u64,
    n: u64,
    out: *mut PythiaTriple,
) -> PythiaStatus {
    guard(|| {
        let t = triples::triple_from_params(&TripleParams::new(delta, m, n)?)?;
        write_out(out, (&t).into(), "out")
    })
}

/// Canonical parameters of `(a, b, c)`; `leg_swap` is set when the even leg
/// is the shorter one.
///
/// # Safety
/// `out` and `leg_swap` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pythia_params_of(
    a: u64,
    b: u64,
    c: u64,
    out: *mut PythiaTripleParams,
    leg_swap: *mut bool,
) -> PythiaStatus {
    guard(|| {
        if leg_swap.is_null() {
            return Err(null_error("leg_swap"));
        }
        let d = triples::params_of(&Triple::new(a, b, c)?)?;
        write_out(out, (&d.params).into(), "out")?;
        leg_swap.write(d.leg_swap);
        Ok(())
    })
}

/// # Safety
/// `out` must be valid for a write of `PythiaTwoTwo`.
#[no_mangle]
pub unsafe extern "C" fn pythia_two_two_from_params(
    delta: u64,
    k: u64,
    lambda: u64,
    out: *mut PythiaTwoTwo,
) -> PythiaStatus {
    guard(|| {
        let s = two_square::two_two_from_params(&TwoTwoParams::new(delta, k, lambda)?)?;
        write_out(
            out,
            PythiaTwoTwo {
                x: s.x(),
                y: s.y(),
                z: s.z(),
            },
            "out",
        )
    })
}

/// # Safety
/// `out` must be valid for a write of `PythiaBox`.
#[no_mangle]
pub unsafe extern "C" fn pythia_box_from_params(
    v: u64,
    ell: u64,
    n: u64,
    out: *mut PythiaBox,
) -> PythiaStatus {
    guard(|| {
        let b = boxes::box_from_params(&BoxParams::new(v, ell, n)?)?;
        write_out(out, (&b).into(), "out")
    })
}

/// # Safety
/// `out` and `diagonal` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pythia_face_diagonal_box(
    delta: u64,
    m: u64,
    k: u64,
    out: *mut PythiaBox,
    diagonal: *mut u64,
) -> PythiaStatus {
    guard(|| {
        if diagonal.is_null() {
            return Err(null_error("diagonal"));
        }
        let (b, d) = boxes::face_diagonal_box(&FaceDiagonalParams::new(delta, m, k)?)?;
        write_out(out, (&b).into(), "out")?;
        diagonal.write(d);
        Ok(())
    })
}

/// # Safety
/// `params` must point to a valid `PythiaFamilyParams`; `out` must be valid
/// for a write of `PythiaTrianglePair`.
#[no_mangle]
pub unsafe extern "C" fn pythia_family_pair(
    params: *const PythiaFamilyParams,
    out: *mut PythiaTrianglePair,
) -> PythiaStatus {
    guard(|| {
        let p = params.as_ref().ok_or_else(|| null_error("params"))?;
        let family = match p.family {
            1 => FamilyParams::F1 {
                big_m: p.big_m,
                big_n: p.big_n,
            },
            2 => FamilyParams::F2 {
                k: p.big_k,
                m: p.m,
                n: p.n,
                big_m: p.big_m,
                big_n: p.big_n,
            },
            3 => FamilyParams::F3 {
                k: p.big_k,
                m: p.m,
                n: p.n,
                big_m: p.big_m,
                big_n: p.big_n,
            },
            4 => FamilyParams::F4 {
                d: p.d,
                big_m: p.big_m,
                big_n: p.big_n,
            },
            f => {
                return Err(PythiaStatusError(
                    PythiaStatus::InvalidArgument,
                    format!("family must be 1 to 4, got {f}"),
                ))
            }
        };
        let pair = family.generate()?;
        let value = PythiaTrianglePair {
            t1: pair.t1().into(),
            t2: pair.t2().into(),
            p1: pair.p1().into(),
            p2: pair.p2().into(),
            shared: pair.shared(),
            odd_leg: pair.mode() == pythia::SharedLeg::OddLeg,
        };
        write_out(out, value, "out")
    })
}

fn list_of<T, const N: usize>(items: &[T], row: impl Fn(&T) -> [u64; N]) -> PythiaTupleList {
    PythiaTupleList {
        arity: N,
        values: items.iter().flat_map(row).collect(),
    }
}

unsafe fn hand_out(
    out: *mut *mut PythiaTupleList,
    list: PythiaTupleList,
) -> Result<(), PythiaStatusError> {
    write_out(out, Box::into_raw(Box::new(list)), "out")
}

/// Triples `(a, b, c)` with `c ≤ max_c`, sorted by `(c, a)`.
///
/// # Safety
/// `out` must be valid for a write of a pointer. Release the list with
/// [`pythia_tuple_list_free`].
#[no_mangle]
pub unsafe extern "C" fn pythia_enumerate_triples(
    max_c: u64,
    primitive_only: bool,
    jobs: usize,
    out: *mut *mut PythiaTupleList,
) -> PythiaStatus {
    guard(|| {
        let v = triples::enumerate_triples_with_jobs(max_c, primitive_only, jobs)?;
        hand_out(out, list_of(&v, |t| [t.a(), t.b(), t.c()]))
    })
}

/// Solutions `(x, y, z)` of `x² + 2y² = z²` with `z ≤ max_z`.
///
/// # Safety
/// As for [`pythia_enumerate_triples`].
#[no_mangle]
pub unsafe extern "C" fn pythia_enumerate_two_two(
    max_z: u64,
    odd_k_only: bool,
    jobs: usize,
    out: *mut *mut PythiaTupleList,
) -> PythiaStatus {
    guard(|| {
        let v = two_square::enumerate_two_two_with_jobs(max_z, odd_k_only, jobs)?;
        hand_out(out, list_of(&v, |s| [s.x(), s.y(), s.z()]))
    })
}

/// Boxes `(x, y, z, t)` with `t ≤ max_t`, edges ascending.
///
/// # Safety
/// As for [`pythia_enumerate_triples`].
#[no_mangle]
pub unsafe extern "C" fn pythia_enumerate_boxes(
    max_t: u64,
    jobs: usize,
    out: *mut *mut PythiaTupleList,
) -> PythiaStatus {
    guard(|| {
        let v = boxes::enumerate_boxes_with_jobs(max_t, jobs)?;
        hand_out(out, list_of(&v, |b| [b.x(), b.y(), b.z(), b.t()]))
    })
}

/// Boxes `(e, e, z, t)` with `t ≤ max_t`.
///
/// # Safety
/// As for [`pythia_enumerate_triples`].
#[no_mangle]
pub unsafe extern "C" fn pythia_equal_edge_boxes(
    max_t: u64,
    jobs: usize,
    out: *mut *mut PythiaTupleList,
) -> PythiaStatus {
    guard(|| {
        let v = boxes::equal_edge_boxes_with_jobs(max_t, jobs)?;
        hand_out(out, list_of(&v, |b| [b.x(), b.y(), b.z(), b.t()]))
    })
}

/// # Safety
/// `list` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pythia_tuple_list_len(list: *const PythiaTupleList) -> usize {
    list.as_ref()
        .map_or(0, |l| l.values.len().checked_div(l.arity).unwrap_or(0))
}

/// # Safety
/// `list` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pythia_tuple_list_arity(list: *const PythiaTupleList) -> usize {
    list.as_ref().map_or(0, |l| l.arity)
}

/// Copies row `index` into `out`, which must hold `arity` values.
///
/// # Safety
/// `list` must be a live handle; `out` must be valid for `arity` writes.
#[no_mangle]
pub unsafe extern "C" fn pythia_tuple_list_get(
    list: *const PythiaTupleList,
    index: usize,
    out: *mut u64,
) -> PythiaStatus {
    guard(|| {
        let l = list.as_ref().ok_or_else(|| null_error("list"))?;
        if out.is_null() {
            return Err(null_error("out"));
        }
        let row = l
            .values
            .chunks_exact(l.arity.max(1))
            .nth(index)
            .ok_or_else(|| {
                PythiaStatusError(
                    PythiaStatus::InvalidArgument,
                    format!("index {index} out of range"),
                )
            })?;
        ptr::copy_nonoverlapping(row.as_ptr(), out, row.len());
        Ok(())
    })
}

/// # Safety
/// `list` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pythia_tuple_list_free(list: *mut PythiaTupleList) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}

/// Bounded counterexample search.
///
/// # Safety
/// `out` must be valid for a write of a pointer. Release the report with
/// [`pythia_report_free`].
#[no_mangle]
pub unsafe extern "C" fn pythia_verify(
    claim: PythiaClaim,
    bound: u64,
    jobs: usize,
    out: *mut *mut PythiaReport,
) -> PythiaStatus {
    guard(|| {
        let report = verifier::verify(claim.into(), bound, jobs)?;
        let witnesses = PythiaTupleList {
            arity: report.claim().witness_layout().len(),
            values: report.counterexamples().concat(),
        };
        write_out(
            out,
            Box::into_raw(Box::new(PythiaReport { report, witnesses })),
            "out",
        )
    })
}

/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pythia_report_examined(report: *const PythiaReport) -> u64 {
    report.as_ref().map_or(0, |r| r.report.examined())
}

/// True when no counterexample was found.
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pythia_report_holds(report: *const PythiaReport) -> bool {
    report.as_ref().is_some_and(|r| r.report.holds())
}

/// Counterexamples as a borrowed list, valid while `report` lives. Do not
/// free it.
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pythia_report_counterexamples(
    report: *const PythiaReport,
) -> *const PythiaTupleList {
    report.as_ref().map_or(ptr::null(), |r| &r.witnesses)
}

/// The report as a JSON object. Release with [`pythia_string_free`].
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pythia_report_to_json(report: *const PythiaReport) -> *mut c_char {
    let Some(r) = report.as_ref() else {
        set_last_error("report is null".into());
        return ptr::null_mut();
    };
    match serde_json::to_string(&r.report).map(CString::new) {
        Ok(Ok(s)) => s.into_raw(),
        _ => {
            set_last_error("report serialization failed".into());
            ptr::null_mut()
        }
    }
}

/// # Safety
/// `report` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pythia_report_free(report: *mut PythiaReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pythia_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
