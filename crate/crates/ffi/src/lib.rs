//! C interface. Objects cross the boundary as opaque handles built from the
//! same JSON documents the command-line tool reads; results come back as
//! JSON strings owned by the library. Every call returns a status code and
//! leaves a message for `kk_last_error` when it is not `KK_STATUS_OK`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use serde_json::Value;

use koszulkit::culie::mc_solve_linear;
use koszulkit::dgcog::group_likes;
use koszulkit::freealg::Poly;
use koszulkit::homotopy::{lemma410_check, weq_coalgebra, weq_curvedlie, DegreeWindow};
use koszulkit::io::{parse_element, parse_poly, Loader, Object};
use koszulkit::koszul::{ce, harrison};
use koszulkit::Error;

/// Status codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KkStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidInput = 4,
    Unsupported = 5,
    Computation = 6,
    Panic = 7,
}

/// A coalgebra, curved Lie algebra, curved associative algebra or morphism.
pub struct KkObject {
    inner: Object,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Fail(KkStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        let code = match &e {
            Error::Parse(_) | Error::Json(_) | Error::Io(_) => KkStatus::Parse,
            Error::Invalid(_)
            | Error::WrongDegree { .. }
            | Error::NotHomogeneous
            | Error::DimensionMismatch(_)
            | Error::BadCounitNormalization(_)
            | Error::SourceTargetMismatch(_)
            | Error::WitnessNotMC(_) => KkStatus::InvalidInput,
            Error::UnsupportedCarrier(_)
            | Error::NotFiniteDimensional(_)
            | Error::NotSplitOverQ(_)
            | Error::IncompleteOverQ(_)
            | Error::NotSolvableExactly(_)
            | Error::NotAugmented(_) => KkStatus::Unsupported,
            _ => KkStatus::Computation,
        };
        Fail(code, e.to_string())
    }
}

type Out<T> = Result<T, Fail>;

fn guard(f: impl FnOnce() -> Out<()>) -> KkStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => KkStatus::Ok,
        Ok(Err(Fail(code, msg))) => {
            set_error(msg);
            code
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal error: {msg}"));
            KkStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Out<&'a str> {
    if p.is_null() {
        return Err(Fail(KkStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(KkStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn opt_text<'a>(p: *const c_char, what: &str) -> Out<Option<&'a str>> {
    if p.is_null() {
        Ok(None)
    } else {
        text(p, what).map(Some)
    }
}

unsafe fn object<'a>(p: *const KkObject) -> Out<&'a Object> {
    p.as_ref()
        .map(|o| &o.inner)
        .ok_or_else(|| Fail(KkStatus::NullArgument, "object handle is null".into()))
}

unsafe fn put_json(out: *mut *mut c_char, v: &Value) -> Out<()> {
    if out.is_null() {
        return Err(Fail(
            KkStatus::NullArgument,
            "output pointer is null".into(),
        ));
    }
    let s = serde_json::to_string(v).map_err(Error::from)?;
    *out = CString::new(s).expect("JSON has no nul").into_raw();
    Ok(())
}

unsafe fn put_object(out: *mut *mut KkObject, o: Object) -> Out<()> {
    if out.is_null() {
        return Err(Fail(
            KkStatus::NullArgument,
            "output pointer is null".into(),
        ));
    }
    *out = Box::into_raw(Box::new(KkObject { inner: o }));
    Ok(())
}

fn window(lo: i64, hi: i64) -> Out<DegreeWindow> {
    Ok(DegreeWindow::new(lo, hi)?)
}

fn wrong(o: &Object, want: &str) -> Fail {
    Fail(
        KkStatus::InvalidInput,
        format!("expected a {want}, found a {}", o.kind()),
    )
}

/// Message of the last failed call on this thread, or null. The pointer
/// stays valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn kk_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses a JSON document. String references inside it resolve against
/// `base_dir` (may be null for the current directory).
///
/// # Safety
/// `json` and `base_dir` must be null or NUL-terminated strings; `out` must
/// be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn kk_object_from_json(
    json: *const c_char,
    base_dir: *const c_char,
    max_weight: u32,
    out: *mut *mut KkObject,
) -> KkStatus {
    guard(|| {
        let v: Value = serde_json::from_str(text(json, "json")?).map_err(Error::from)?;
        let dir = opt_text(base_dir, "base_dir")?.unwrap_or(".");
        let weight = if max_weight == 0 { 6 } else { max_weight };
        let o = Loader {
            default_weight: weight,
        }
        .from_value(&v, Path::new(dir))?;
        put_object(out, o)
    })
}

/// Loads `path` or `path#entry` from disk.
///
/// # Safety
/// `reference` must be a NUL-terminated string; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn kk_object_load(
    reference: *const c_char,
    max_weight: u32,
    out: *mut *mut KkObject,
) -> KkStatus {
    guard(|| {
        let weight = if max_weight == 0 { 6 } else { max_weight };
        let o = Loader {
            default_weight: weight,
        }
        .load(text(reference, "reference")?)?;
        put_object(out, o)
    })
}

/// # Safety
/// `obj` must be a handle from this library (or null); `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn kk_object_to_json(
    obj: *const KkObject,
    out: *mut *mut c_char,
) -> KkStatus {
    guard(|| put_json(out, &object(obj)?.to_value()))
}

/// Static string: "coalgebra", "curved Lie algebra", ... or null.
///
/// # Safety
/// `obj` must be a handle from this library or null.
#[no_mangle]
pub unsafe extern "C" fn kk_object_kind(obj: *const KkObject) -> *const c_char {
    let Some(o) = obj.as_ref() else {
        return ptr::null();
    };
    let k: &'static CStr = match o.inner {
        Object::Coalgebra(_) => c"coalgebra",
        Object::Lie(_) => c"curved Lie algebra",
        Object::Assoc(_) => c"curved associative algebra",
        Object::CoalgebraMap(_) => c"coalgebra map",
        Object::Morphism(_) => c"curved morphism",
    };
    k.as_ptr()
}

/// Axiom certificate of any object, as JSON.
///
/// # Safety
/// `obj` must be a handle from this library; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn kk_validate(obj: *const KkObject, out: *mut *mut c_char) -> KkStatus {
    guard(|| {
        let cert = match object(obj)? {
            Object::Coalgebra(c) => c.validate(),
            Object::Lie(g) => g.check_curved(),
            Object::Assoc(a) => a.check(),
            Object::CoalgebraMap(f) => f.check(),
            Object::Morphism(m) => m.check(),
        };
        put_json(out, &serde_json::to_value(&cert).map_err(Error::from)?)
    })
}

/// Group-like elements of a coalgebra as a JSON array of literals.
///
/// # Safety
/// `obj` must be a handle from this library; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn kk_group_likes(obj: *const KkObject, out: *mut *mut c_char) -> KkStatus {
    guard(|| {
        let o = object(obj)?;
        let Object::Coalgebra(c) = o else {
            return Err(wrong(o, "coalgebra"));
        };
        let g: Vec<String> = group_likes(c)?.iter().map(|x| c.render(x)).collect();
        put_json(out, &serde_json::json!(g))
    })
}

/// Curved Harrison algebra at word length `max_weight`. `coaug` is an
/// element literal; null means the coalgebra's own coaugmentation.
///
/// # Safety
/// `obj` must be a handle from this library, `coaug` null or a string, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn kk_harrison(
    obj: *const KkObject,
    coaug: *const c_char,
    max_weight: u32,
    out: *mut *mut KkObject,
) -> KkStatus {
    guard(|| {
        let o = object(obj)?;
        let Object::Coalgebra(c) = o else {
            return Err(wrong(o, "coalgebra"));
        };
        let eps = match opt_text(coaug, "coaug")? {
            Some(s) => parse_element(&c.space, s)?,
            None => c
                .coaug
                .clone()
                .ok_or_else(|| Fail(KkStatus::InvalidInput, "no coaugmentation given".into()))?,
        };
        put_object(out, Object::Lie(harrison(c, &eps, max_weight)?.algebra))
    })
}

/// Complete Maurer-Cartan set, when the solver can decide it, as JSON.
///
/// # Safety
/// `obj` must be a handle from this library; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn kk_mc_solve(obj: *const KkObject, out: *mut *mut c_char) -> KkStatus {
    guard(|| {
        let o = object(obj)?;
        let Object::Lie(g) = o else {
            return Err(wrong(o, "curved Lie algebra"));
        };
        let s: Vec<String> = mc_solve_linear(g)?
            .iter()
            .map(|w| g.render(&w.element))
            .collect();
        put_json(out, &serde_json::json!(s))
    })
}

fn mc_list(g: &koszulkit::culie::CurvedLie, given: Option<&str>) -> Out<Vec<Poly>> {
    match given {
        None => Ok(mc_solve_linear(g)?.into_iter().map(|w| w.element).collect()),
        Some(s) => {
            let v: Vec<String> = serde_json::from_str(s).map_err(Error::from)?;
            v.iter().map(|e| Ok(parse_poly(&g.gens, e)?)).collect()
        }
    }
}

/// Extended Chevalley-Eilenberg coalgebra. `witnesses` is a JSON array of
/// literals, or null for the solved MC set.
///
/// # Safety
/// `obj` must be a handle from this library, `witnesses` null or a string, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn kk_ce(
    obj: *const KkObject,
    witnesses: *const c_char,
    max_weight: u32,
    out: *mut *mut KkObject,
) -> KkStatus {
    guard(|| {
        let o = object(obj)?;
        let Object::Lie(g) = o else {
            return Err(wrong(o, "curved Lie algebra"));
        };
        let xs = mc_list(g, opt_text(witnesses, "witnesses")?)?;
        put_object(
            out,
            Object::Coalgebra(ce(g, &xs, max_weight as usize)?.total),
        )
    })
}

/// Weak-equivalence certificate of a coalgebra map or curved morphism on
/// degrees `lo..=hi`. For curved morphisms both MC sets are solved for.
///
/// # Safety
/// `obj` must be a handle from this library; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn kk_weak_equivalence(
    obj: *const KkObject,
    lo: i64,
    hi: i64,
    max_weight: u32,
    out: *mut *mut c_char,
) -> KkStatus {
    guard(|| {
        let win = window(lo, hi)?;
        let cert = match object(obj)? {
            Object::CoalgebraMap(f) => weq_coalgebra(f, win, max_weight)?,
            Object::Morphism(m) => {
                let xs = mc_list(&m.source, None)?;
                let ys = mc_list(&m.target, None)?;
                weq_curvedlie(m, &xs, &ys, win)?
            }
            o => return Err(wrong(o, "coalgebra map or curved morphism")),
        };
        put_json(out, &serde_json::to_value(&cert).map_err(Error::from)?)
    })
}

/// Contraction certificate for a curved associative algebra.
///
/// # Safety
/// `obj` must be a handle from this library; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn kk_lemma410(
    obj: *const KkObject,
    max_weight: u32,
    lo: i64,
    hi: i64,
    out: *mut *mut c_char,
) -> KkStatus {
    guard(|| {
        let o = object(obj)?;
        let Object::Assoc(a) = o else {
            return Err(wrong(o, "curved associative algebra"));
        };
        let cert = lemma410_check(a, max_weight as usize, window(lo, hi)?)?;
        put_json(out, &serde_json::to_value(&cert).map_err(Error::from)?)
    })
}

/// # Safety
/// `obj` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn kk_object_free(obj: *mut KkObject) {
    if !obj.is_null() {
        drop(Box::from_raw(obj));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn kk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    unsafe fn take(s: *mut c_char) -> String {
        let out = CStr::from_ptr(s).to_str().unwrap().to_string();
        kk_string_free(s);
        out
    }

    #[test]
    fn harrison_through_handles() {
        let json = CString::new(
            r#"{"basis":[{"name":"g1","degree":0},{"name":"g2","degree":0}],
                "comul":{"g1":[["1","g1","g1"]],"g2":[["1","g2","g2"]]},
                "counit":{"g1":"1","g2":"1"}}"#,
        )
        .unwrap();
        unsafe {
            let mut c = ptr::null_mut();
            assert_eq!(
                kk_object_from_json(json.as_ptr(), ptr::null(), 0, &mut c),
                KkStatus::Ok
            );
            assert_eq!(
                CStr::from_ptr(kk_object_kind(c)).to_str().unwrap(),
                "coalgebra"
            );
            let mut s = ptr::null_mut();
            assert_eq!(kk_group_likes(c, &mut s), KkStatus::Ok);
            assert_eq!(take(s), r#"["g1","g2"]"#);
            let mut h = ptr::null_mut();
            let eps = CString::new("(g1+g2)/2").unwrap();
            assert_eq!(kk_harrison(c, eps.as_ptr(), 4, &mut h), KkStatus::Ok);
            assert_eq!(kk_mc_solve(h, &mut s), KkStatus::Ok);
            assert_eq!(take(s), r#"["-1/2 y_g1","1/2 y_g1"]"#);
            assert_eq!(kk_validate(h, &mut s), KkStatus::Ok);
            assert!(take(s).contains(r#""verdict":"PASS""#));
            kk_object_free(h);
            kk_object_free(c);
        }
    }

    #[test]
    fn errors_are_reported() {
        unsafe {
            let mut c = ptr::null_mut();
            let bad = CString::new("{\"basis\": 3}").unwrap();
            assert_eq!(
                kk_object_from_json(bad.as_ptr(), ptr::null(), 0, &mut c),
                KkStatus::Parse
            );
            assert!(!kk_last_error().is_null());
            assert_eq!(
                kk_object_from_json(ptr::null(), ptr::null(), 0, &mut c),
                KkStatus::NullArgument
            );
            let mut s = ptr::null_mut();
            assert_eq!(kk_validate(ptr::null(), &mut s), KkStatus::NullArgument);
            let g = CString::new(r#"{"basis":[{"name":"e","degree":0}]}"#).unwrap();
            assert_eq!(
                kk_object_from_json(g.as_ptr(), ptr::null(), 0, &mut c),
                KkStatus::Ok
            );
            assert!(kk_last_error().is_null());
            let mut h = ptr::null_mut();
            assert_eq!(
                kk_harrison(c, ptr::null(), 3, &mut h),
                KkStatus::InvalidInput
            );
            let msg = CStr::from_ptr(kk_last_error()).to_str().unwrap();
            assert!(msg.contains("expected a coalgebra"), "{msg}");
            kk_object_free(c);
        }
    }
}
