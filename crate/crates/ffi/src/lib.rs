//! C ABI over the topolab engine.
//!
//! Spaces and maps are opaque heap handles released with their `_free`
//! function. Subsets cross the boundary as `uint32_t` bitmasks where bit
//! `i` is the `i`-th point in document order. Every fallible call returns a
//! [`TopolabStatus`]; on failure the message is available from
//! [`topolab_last_error`] on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use topolab::lab::{self, SweepOptions, Tag, TheoremId};
use topolab::separation::{alternate, axiom, classify_space, scstar_regular_variant};
use topolab::{Error, FiniteMap, Space, SpaceProfile, Subset};

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TopolabStatus {
    Ok = 0,
    /// A required pointer was null or a string was not UTF-8.
    NullArgument = 1,
    /// A JSON document could not be parsed or failed validation.
    InvalidDocument = 2,
    /// A subset mask names points outside the space.
    InvalidSubset = 3,
    /// Unrecognised tag or theorem id.
    UnknownName = 4,
    /// Enumeration bound outside the supported range.
    BoundExceeded = 5,
    /// The engine panicked; the handle arguments are left untouched.
    Internal = 6,
}

/// A validated finite topological space with cached operator tables.
pub struct TopolabSpace {
    profile: SpaceProfile,
}

/// A function between two finite spaces.
pub struct TopolabMap {
    map: FiniteMap,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> TopolabStatus {
    match e {
        Error::SubsetOutOfRange(..) => TopolabStatus::InvalidSubset,
        Error::UnknownTag(_) | Error::UnknownTheorem(_) => TopolabStatus::UnknownName,
        Error::BoundExceeded(..) => TopolabStatus::BoundExceeded,
        _ => TopolabStatus::InvalidDocument,
    }
}

struct Fail(TopolabStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(TopolabStatus::NullArgument, format!("{what} is null"))
}

fn guard(body: impl FnOnce() -> Result<(), Fail>) -> TopolabStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            TopolabStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal error".into());
            TopolabStatus::Internal
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(TopolabStatus::NullArgument, format!("{what} is not UTF-8")))
}

unsafe fn space_ref<'a>(p: *const TopolabSpace) -> Result<&'a TopolabSpace, Fail> {
    p.as_ref().ok_or_else(|| null("space"))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

/// Message for the most recent failure on this thread, or null. Valid until
/// the next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn topolab_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a pointer obtained from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn topolab_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses and validates a space document.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn topolab_space_from_json(json: *const c_char, out: *mut *mut TopolabSpace) -> TopolabStatus {
    guard(|| {
        let space = Space::from_json(text(json, "json")?)?;
        let handle = Box::new(TopolabSpace {
            profile: SpaceProfile::new(&space),
        });
        write(out, Box::into_raw(handle))
    })
}

/// # Safety
/// `space` must be null or a live handle, freed once.
#[no_mangle]
pub unsafe extern "C" fn topolab_space_free(space: *mut TopolabSpace) {
    if !space.is_null() {
        drop(Box::from_raw(space));
    }
}

/// Number of points, or 0 for a null handle.
///
/// # Safety
/// `space` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn topolab_space_point_count(space: *const TopolabSpace) -> u32 {
    space.as_ref().map_or(0, |s| s.profile.n() as u32)
}

/// Bitmask of the subset spelled by comma-separated point labels.
///
/// # Safety
/// Pointers must be valid; `labels` NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn topolab_space_parse_set(
    space: *const TopolabSpace,
    labels: *const c_char,
    out: *mut u32,
) -> TopolabStatus {
    guard(|| {
        let s = space_ref(space)?;
        let a = s.profile.space().parse_set(text(labels, "labels")?)?;
        write(out, a.bits())
    })
}

/// Closure of a subset.
///
/// # Safety
/// `space` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn topolab_space_closure(space: *const TopolabSpace, set: u32, out: *mut u32) -> TopolabStatus {
    guard(|| {
        let s = space_ref(space)?;
        let a = Subset::from_bits(s.profile.n(), set)?;
        write(out, s.profile.closure(a).bits())
    })
}

/// SC*-closure of a subset.
///
/// # Safety
/// `space` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn topolab_space_scstar_closure(
    space: *const TopolabSpace,
    set: u32,
    out: *mut u32,
) -> TopolabStatus {
    guard(|| {
        let s = space_ref(space)?;
        let a = Subset::from_bits(s.profile.n(), set)?;
        write(out, s.profile.scstar_closure(a).bits())
    })
}

/// Membership of a subset in a set class such as `"gscstar-closed"`.
///
/// # Safety
/// Pointers must be valid; `class` NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn topolab_space_classify_set(
    space: *const TopolabSpace,
    set: u32,
    class: *const c_char,
    out: *mut bool,
) -> TopolabStatus {
    guard(|| {
        let s = space_ref(space)?;
        let p = &s.profile;
        let a = Subset::from_bits(p.n(), set)?;
        let name = text(class, "class")?;
        let value = match name.parse::<Tag>()? {
            Tag::Open => p.is_open(a),
            Tag::Closed => p.is_closed(a),
            Tag::Kernel(k) => p.kernel_class(a, k),
            Tag::Gen(g) => p.gen_class(a, g),
            _ => return Err(Error::UnknownTag(format!("{name} is not a set class")).into()),
        };
        write(out, value)
    })
}

/// Whether the space satisfies a separation axiom, variant, or alternate.
///
/// # Safety
/// Pointers must be valid; `tag` NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn topolab_space_axiom(
    space: *const TopolabSpace,
    tag: *const c_char,
    out: *mut bool,
) -> TopolabStatus {
    guard(|| {
        let s = space_ref(space)?;
        let p = &s.profile;
        let name = text(tag, "tag")?;
        let value = match name.parse::<Tag>()? {
            Tag::Axiom(t) => axiom(p, t),
            Tag::Variant(t) => scstar_regular_variant(p, t),
            Tag::Alternate(t) => alternate(p, t),
            Tag::Discrete => p.open_family().len() == 1 << p.n(),
            _ => return Err(Error::UnknownTag(format!("{name} is not a space property")).into()),
        };
        write(out, value)
    })
}

/// Full axiom vector as a JSON object. Release with [`topolab_string_free`].
///
/// # Safety
/// `space` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn topolab_space_classify_json(
    space: *const TopolabSpace,
    out: *mut *mut c_char,
) -> TopolabStatus {
    guard(|| {
        let s = space_ref(space)?;
        let v = classify_space(&s.profile);
        let json = serde_json::to_string(&v).map_err(|e| Fail(TopolabStatus::Internal, e.to_string()))?;
        write(out, owned_string(json))
    })
}

/// Parses a map document. Domain and codomain must be inline space
/// documents; file references are rejected.
///
/// # Safety
/// `json` must be NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn topolab_map_from_json(json: *const c_char, out: *mut *mut TopolabMap) -> TopolabStatus {
    guard(|| {
        let map = FiniteMap::from_json(text(json, "json")?, None)?;
        write(out, Box::into_raw(Box::new(TopolabMap { map })))
    })
}

/// # Safety
/// `map` must be null or a live handle, freed once.
#[no_mangle]
pub unsafe extern "C" fn topolab_map_free(map: *mut TopolabMap) {
    if !map.is_null() {
        drop(Box::from_raw(map));
    }
}

/// Whether the map has a property such as `"scstar-irresolute"`.
///
/// # Safety
/// Pointers must be valid; `property` NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn topolab_map_property(
    map: *const TopolabMap,
    property: *const c_char,
    out: *mut bool,
) -> TopolabStatus {
    guard(|| {
        let m = map.as_ref().ok_or_else(|| null("map"))?;
        let name = text(property, "property")?;
        let value = match name.parse::<Tag>()? {
            Tag::Map(t) => m.map.property(t),
            _ => return Err(Error::UnknownTag(format!("{name} is not a map property")).into()),
        };
        write(out, value)
    })
}

/// Sweeps one registered theorem and writes its report as JSON. A bound of
/// 0 selects the default. A counterexample is reported inside the JSON, not
/// through the status code.
///
/// # Safety
/// `id` must be NUL-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn topolab_verify_theorem(id: *const c_char, bound: u32, out: *mut *mut c_char) -> TopolabStatus {
    guard(|| {
        let id: TheoremId = text(id, "id")?.parse()?;
        let bound = (bound > 0).then_some(bound as usize);
        let report = lab::verify_theorem(id, bound, &SweepOptions::default())?;
        let json = serde_json::to_string(&report).map_err(|e| Fail(TopolabStatus::Internal, e.to_string()))?;
        write(out, owned_string(json))
    })
}
