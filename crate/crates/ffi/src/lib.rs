//! C ABI over the `hurwitz` library.
//!
//! Every function returns a [`HurwitzStatus`]; results come back through out
//! pointers. Strings handed out by the library are owned by the caller and
//! must be released with [`hurwitz_string_free`]. After a failure,
//! [`hurwitz_last_error_message`] describes it (per thread).

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hurwitz::arith::format_rational;
use hurwitz::characters::{self, CharacterTable};
use hurwitz::covers::CyclicCoverSpec;
use hurwitz::floor_diagrams;
use hurwitz::hurwitz::{self as hw, CoveringProblem};
use hurwitz::invariants::{self, MonomialAction};
use hurwitz::{Error, Partition};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HurwitzStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    SizeLimit = 3,
    Internal = 4,
    Panic = 5,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("interior nuls removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

enum Failure {
    Null(&'static str),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = Result<(), Failure>;

fn guard(f: impl FnOnce() -> Outcome) -> HurwitzStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HurwitzStatus::Ok,
        Ok(Err(Failure::Null(what))) => {
            set_error(format!("{what} is null"));
            HurwitzStatus::NullPointer
        }
        Ok(Err(Failure::Lib(e))) => {
            set_error(e.to_string());
            match e {
                Error::SizeLimit { .. } => HurwitzStatus::SizeLimit,
                Error::Internal(_) => HurwitzStatus::Internal,
                _ => HurwitzStatus::InvalidArgument,
            }
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("panic: {msg}"));
            HurwitzStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &'static str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::Null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure::Lib(Error::Parse(format!("{what} is not valid UTF-8"))))
}

unsafe fn read_partition(p: *const c_char, what: &'static str) -> Result<Partition, Failure> {
    Ok(read_str(p, what)?.parse()?)
}

unsafe fn write_string(out: *mut *mut c_char, value: String) -> Outcome {
    if out.is_null() {
        return Err(Failure::Null("out"));
    }
    *out = CString::new(value).expect("library output has no nul bytes").into_raw();
    Ok(())
}

unsafe fn write<T>(out: *mut T, value: T) -> Outcome {
    if out.is_null() {
        return Err(Failure::Null("out"));
    }
    *out = value;
    Ok(())
}

/// Message for the most recent failure on this thread, or null. The pointer
/// stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn hurwitz_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// χ^λ(μ) as a decimal string. Partitions are written "3,1,1".
///
/// # Safety
/// `lambda` and `mu` must be nul-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_character_value(
    lambda: *const c_char,
    mu: *const c_char,
    out: *mut *mut c_char,
) -> HurwitzStatus {
    guard(|| {
        let value = characters::character_value(&read_partition(lambda, "lambda")?, &read_partition(mu, "mu")?)?;
        write_string(out, value.to_string())
    })
}

/// Littlewood–Richardson coefficient c^η_{λμ}.
///
/// # Safety
/// String arguments must be nul-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_lr_coefficient(
    lambda: *const c_char,
    mu: *const c_char,
    eta: *const c_char,
    out: *mut u64,
) -> HurwitzStatus {
    guard(|| {
        let c = characters::lr_coefficient(
            &read_partition(lambda, "lambda")?,
            &read_partition(mu, "mu")?,
            &read_partition(eta, "eta")?,
        );
        write(out, c)
    })
}

/// Kronecker coefficient g_{λμν} as a decimal string.
///
/// # Safety
/// String arguments must be nul-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_kronecker_coefficient(
    lambda: *const c_char,
    mu: *const c_char,
    nu: *const c_char,
    out: *mut *mut c_char,
) -> HurwitzStatus {
    guard(|| {
        let g = characters::kronecker_coefficient(
            &read_partition(lambda, "lambda")?,
            &read_partition(mu, "mu")?,
            &read_partition(nu, "nu")?,
        )?;
        write_string(out, g.to_string())
    })
}

/// (2d-2)!/d! · d^(d-3) as "p/q" or an integer string.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_genus0(d: u32, out: *mut *mut c_char) -> HurwitzStatus {
    guard(|| write_string(out, format_rational(&hw::genus0_closed_form(d)?)))
}

/// Genus of y^d = Π (x - a_i)^(m_i) over `len` roots.
///
/// # Safety
/// `multiplicities` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_cover_genus(
    d: u32,
    multiplicities: *const u32,
    len: usize,
    out: *mut u64,
) -> HurwitzStatus {
    guard(|| {
        if multiplicities.is_null() && len > 0 {
            return Err(Failure::Null("multiplicities"));
        }
        let mults = if len == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(multiplicities, len)
        };
        write(out, CyclicCoverSpec::new(d, mults)?.genus()?)
    })
}

/// Plane-curve count N_{d,g} from floor diagrams, as a decimal string.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_gw_invariant(d: u32, g: u32, out: *mut *mut c_char) -> HurwitzStatus {
    guard(|| write_string(out, floor_diagrams::gw_invariant(d, g)?.to_string()))
}

/// Rational plane-curve count N_d from Kontsevich's recursion.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_kontsevich(d: u32, out: *mut *mut c_char) -> HurwitzStatus {
    guard(|| write_string(out, floor_diagrams::kontsevich_oracle(d)?.to_string()))
}

/// Molien series to degree `terms` of the action described by `config_json`
/// ({"n":…, "s":…, "generators":[{"perm":[…], "exponents":[…]}]}), written as
/// a JSON array of decimal strings.
///
/// # Safety
/// `config_json` must be nul-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_molien_series_json(
    config_json: *const c_char,
    terms: u32,
    out: *mut *mut c_char,
) -> HurwitzStatus {
    guard(|| {
        let action = MonomialAction::from_json(read_str(config_json, "config_json")?)?;
        let series = invariants::molien_series(&action, terms as usize)?;
        let strings: Vec<String> = series.iter().map(|x| x.to_string()).collect();
        write_string(out, serde_json::to_string(&strings).map_err(Error::from)?)
    })
}

/// Opaque character table of S_d.
pub struct HurwitzCharTable(CharacterTable);

/// # Safety
/// `out` must be writable. Free the table with [`hurwitz_char_table_free`].
#[no_mangle]
pub unsafe extern "C" fn hurwitz_char_table_new(d: u32, out: *mut *mut HurwitzCharTable) -> HurwitzStatus {
    guard(|| {
        let table = CharacterTable::new(d)?;
        write(out, Box::into_raw(Box::new(HurwitzCharTable(table))))
    })
}

/// # Safety
/// `table` must come from [`hurwitz_char_table_new`]; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_char_table_free(table: *mut HurwitzCharTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Number of irreducibles, equal to the number of classes.
///
/// # Safety
/// `table` must be a live table; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_char_table_size(table: *const HurwitzCharTable, out: *mut usize) -> HurwitzStatus {
    guard(|| {
        let table = table.as_ref().ok_or(Failure::Null("table"))?;
        write(out, table.0.irreps.len())
    })
}

/// Label of row (and column) `index` as "3,1,1".
///
/// # Safety
/// `table` must be a live table; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_char_table_label(
    table: *const HurwitzCharTable,
    index: usize,
    out: *mut *mut c_char,
) -> HurwitzStatus {
    guard(|| {
        let table = table.as_ref().ok_or(Failure::Null("table"))?;
        let label = table
            .0
            .irreps
            .get(index)
            .ok_or_else(|| out_of_range(index, table.0.irreps.len()))?;
        write_string(out, label.to_string())
    })
}

/// χ^{irreps[irrep]}(classes[class]) as a decimal string.
///
/// # Safety
/// `table` must be a live table; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_char_table_value(
    table: *const HurwitzCharTable,
    irrep: usize,
    class: usize,
    out: *mut *mut c_char,
) -> HurwitzStatus {
    guard(|| {
        let table = table.as_ref().ok_or(Failure::Null("table"))?;
        let n = table.0.irreps.len();
        if irrep >= n || class >= n {
            return Err(out_of_range(irrep.max(class), n));
        }
        write_string(out, table.0.value(irrep, class).to_string())
    })
}

/// The whole table as JSON {"d", "irreps", "classes", "values"}.
///
/// # Safety
/// `table` must be a live table; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_char_table_json(
    table: *const HurwitzCharTable,
    out: *mut *mut c_char,
) -> HurwitzStatus {
    guard(|| {
        let table = table.as_ref().ok_or(Failure::Null("table"))?;
        write_string(out, serde_json::to_string(&table.0).map_err(Error::from)?)
    })
}

fn out_of_range(index: usize, len: usize) -> Failure {
    Failure::Lib(Error::Domain(format!("index {index} out of range for {len} entries")))
}

/// Opaque covering problem, built up one branch profile at a time.
pub struct HurwitzCovering {
    d: u32,
    profiles: Vec<Partition>,
}

impl HurwitzCovering {
    fn problem(&self) -> Result<CoveringProblem, Failure> {
        Ok(CoveringProblem::new(self.d, self.profiles.clone())?)
    }
}

/// # Safety
/// `out` must be writable. Free with [`hurwitz_covering_free`].
#[no_mangle]
pub unsafe extern "C" fn hurwitz_covering_new(d: u32, out: *mut *mut HurwitzCovering) -> HurwitzStatus {
    guard(|| {
        CoveringProblem::new(d, vec![])?;
        write(out, Box::into_raw(Box::new(HurwitzCovering { d, profiles: vec![] })))
    })
}

/// # Safety
/// `covering` must come from [`hurwitz_covering_new`]; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_covering_free(covering: *mut HurwitzCovering) {
    if !covering.is_null() {
        drop(Box::from_raw(covering));
    }
}

/// Appends the ramification profile over one more branch point.
///
/// # Safety
/// `covering` must be live; `profile` must be nul-terminated.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_covering_add_profile(
    covering: *mut HurwitzCovering,
    profile: *const c_char,
) -> HurwitzStatus {
    guard(|| {
        let covering = covering.as_mut().ok_or(Failure::Null("covering"))?;
        let p = read_partition(profile, "profile")?;
        if p.weight() != covering.d {
            return Err(Error::Domain(format!("profile ({p}) is not a partition of {}", covering.d)).into());
        }
        covering.profiles.push(p);
        Ok(())
    })
}

/// Disconnected Hurwitz number as "p/q" or an integer string.
///
/// # Safety
/// `covering` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_covering_disconnected(
    covering: *const HurwitzCovering,
    out: *mut *mut c_char,
) -> HurwitzStatus {
    guard(|| {
        let covering = covering.as_ref().ok_or(Failure::Null("covering"))?;
        write_string(out, format_rational(&hw::disconnected_hurwitz(&covering.problem()?)?))
    })
}

/// Connected Hurwitz number as "p/q" or an integer string.
///
/// # Safety
/// `covering` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hurwitz_covering_connected(
    covering: *const HurwitzCovering,
    out: *mut *mut c_char,
) -> HurwitzStatus {
    guard(|| {
        let covering = covering.as_ref().ok_or(Failure::Null("covering"))?;
        write_string(out, format_rational(&hw::connected_hurwitz(&covering.problem()?)?))
    })
}
