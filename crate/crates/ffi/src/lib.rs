//! C ABI over `mapblocks`.
//!
//! Handles are opaque pointers created by `*_new`/`*_from_*` functions and
//! released with the matching `*_free`. Every fallible function returns an
//! [`MbStatus`]; on failure a message is kept per thread and can be read
//! with [`mb_last_error`]. Strings are written into caller buffers as
//! NUL-terminated UTF-8; the required length (without the NUL) is always
//! reported, so a first call with a zero-length buffer sizes the second.

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::ptr;

use mapblocks::count::{count_maps, count_two_connected};
use mapblocks::limits::frechet_type_cdf;
use mapblocks::map::{blocks, is_two_connected, RootedMap};
use mapblocks::rng::{rng_from_seed, sample_seed};
use mapblocks::sampler::{BlockSizeSampler, MapSampler, Strategy};
use mapblocks::SampleError;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidMap = 3,
    CapExceeded = 4,
    BufferTooSmall = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MbStrategy {
    Auto = 0,
    Rejection = 1,
    Splitting = 2,
}

/// Block-size sampler for a fixed number of edges.
pub struct MbSampler {
    inner: BlockSizeSampler,
    seed: u64,
}

/// A rooted planar map.
pub struct MbMap {
    inner: RootedMap,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn fail(status: MbStatus, msg: impl Into<String>) -> MbStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg.into());
    status
}

fn guarded(f: impl FnOnce() -> MbStatus + std::panic::UnwindSafe) -> MbStatus {
    std::panic::catch_unwind(f).unwrap_or_else(|_| fail(MbStatus::Panic, "internal panic"))
}

fn sample_status(e: &SampleError) -> MbStatus {
    match e {
        SampleError::CapExceeded { .. } => MbStatus::CapExceeded,
        _ => MbStatus::InvalidArgument,
    }
}

/// Copies `s` into `buf` (capacity `len` bytes including the NUL).
unsafe fn write_str(s: &str, buf: *mut c_char, len: usize, written: *mut usize) -> MbStatus {
    if !written.is_null() {
        *written = s.len();
    }
    if len == 0 && buf.is_null() {
        return fail(MbStatus::BufferTooSmall, format!("need {} bytes", s.len() + 1));
    }
    if buf.is_null() {
        return fail(MbStatus::NullPointer, "null buffer");
    }
    if len < s.len() + 1 {
        return fail(MbStatus::BufferTooSmall, format!("need {} bytes", s.len() + 1));
    }
    ptr::copy_nonoverlapping(s.as_ptr(), buf as *mut u8, s.len());
    *buf.add(s.len()) = 0;
    MbStatus::Ok
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn mb_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Copies the calling thread's last error message into `buf`.
///
/// # Safety
/// `buf` must point to `len` writable bytes (or be null with `len == 0`);
/// `written` may be null.
#[no_mangle]
pub unsafe extern "C" fn mb_last_error(buf: *mut c_char, len: usize, written: *mut usize) -> MbStatus {
    let msg = LAST_ERROR.with(|e| e.borrow().clone());
    let status = write_str(&msg, buf, len, written);
    // sizing calls must not clobber the message being read
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
    status
}

/// `M_n` in decimal.
///
/// # Safety
/// As for [`mb_last_error`].
#[no_mangle]
pub unsafe extern "C" fn mb_count_maps(n: u32, buf: *mut c_char, len: usize, written: *mut usize) -> MbStatus {
    write_str(&count_maps(n as usize).to_string(), buf, len, written)
}

/// `C_k` in decimal.
///
/// # Safety
/// As for [`mb_last_error`].
#[no_mangle]
pub unsafe extern "C" fn mb_count_two_connected(
    k: u32,
    buf: *mut c_char,
    len: usize,
    written: *mut usize,
) -> MbStatus {
    write_str(&count_two_connected(k as usize).to_string(), buf, len, written)
}

/// `P(G_k^{-3/2} ≤ x)`; NaN when `k < 2`.
#[no_mangle]
pub extern "C" fn mb_frechet_type_cdf(k: u32, x: f64) -> f64 {
    if k < 2 {
        return f64::NAN;
    }
    frechet_type_cdf(k as usize, x)
}

/// Creates a sampler for maps with `n ≥ 1` edges. Sample `(r, s)` is drawn
/// from the stream seeded by `(master_seed, r, s)`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for a handle.
#[no_mangle]
pub unsafe extern "C" fn mb_sampler_new(
    n: u64,
    strategy: MbStrategy,
    master_seed: u64,
    out: *mut *mut MbSampler,
) -> MbStatus {
    if out.is_null() {
        return fail(MbStatus::NullPointer, "null output handle");
    }
    *out = ptr::null_mut();
    let strategy = match strategy {
        MbStrategy::Auto => Strategy::Auto,
        MbStrategy::Rejection => Strategy::Rejection,
        MbStrategy::Splitting => Strategy::Splitting,
    };
    let out_addr = out as usize;
    guarded(move || match BlockSizeSampler::new(n as usize, strategy) {
        Ok(inner) => {
            let h = Box::into_raw(Box::new(MbSampler { inner, seed: master_seed }));
            // SAFETY: checked non-null above
            unsafe { *(out_addr as *mut *mut MbSampler) = h };
            MbStatus::Ok
        }
        Err(e) => fail(sample_status(&e), e.to_string()),
    })
}

/// Releases a sampler; null is ignored.
///
/// # Safety
/// `s` must come from [`mb_sampler_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn mb_sampler_free(s: *mut MbSampler) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Draws sample `(replica, sample)`: descending block sizes into `sizes`
/// (capacity `cap`), their number into `len`, and the trial count into
/// `trials` (may be null). Returns `BufferTooSmall` with `len` set when
/// `cap` is too small.
///
/// # Safety
/// `s` must be a live sampler; `sizes` must hold `cap` elements; `len` must
/// be valid.
#[no_mangle]
pub unsafe extern "C" fn mb_sampler_sample(
    s: *const MbSampler,
    replica: u64,
    sample: u64,
    sizes: *mut u64,
    cap: usize,
    len: *mut usize,
    trials: *mut u64,
) -> MbStatus {
    if s.is_null() || len.is_null() {
        return fail(MbStatus::NullPointer, "null sampler or length pointer");
    }
    let s = &*s;
    let x = s.inner.sample_seeded(sample_seed(s.seed, replica, sample));
    *len = x.sizes.len();
    if !trials.is_null() {
        *trials = x.trials;
    }
    if cap < x.sizes.len() {
        return fail(MbStatus::BufferTooSmall, format!("need {} slots", x.sizes.len()));
    }
    if sizes.is_null() && !x.sizes.is_empty() {
        return fail(MbStatus::NullPointer, "null size buffer");
    }
    for (i, &v) in x.sizes.iter().enumerate() {
        *sizes.add(i) = v as u64;
    }
    MbStatus::Ok
}

/// Parses a map from its JSON record `{"num_darts", "twin", "next", "root"}`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn mb_map_from_json(json: *const c_char, out: *mut *mut MbMap) -> MbStatus {
    if json.is_null() || out.is_null() {
        return fail(MbStatus::NullPointer, "null argument");
    }
    *out = ptr::null_mut();
    let Ok(text) = CStr::from_ptr(json).to_str() else {
        return fail(MbStatus::InvalidArgument, "input is not UTF-8");
    };
    match RootedMap::from_json(text) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(MbMap { inner }));
            MbStatus::Ok
        }
        Err(e) => fail(MbStatus::InvalidMap, e.to_string()),
    }
}

/// A uniform random rooted map with `n ≤ 6` edges from `seed`.
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn mb_map_sample(n: u64, seed: u64, out: *mut *mut MbMap) -> MbStatus {
    if out.is_null() {
        return fail(MbStatus::NullPointer, "null output handle");
    }
    *out = ptr::null_mut();
    let out_addr = out as usize;
    guarded(move || {
        let result = if n == 0 {
            Ok(RootedMap::trivial())
        } else {
            MapSampler::new(n as usize).map(|s| s.sample(&mut rng_from_seed(seed)))
        };
        match result {
            Ok(inner) => {
                // SAFETY: checked non-null above
                unsafe { *(out_addr as *mut *mut MbMap) = Box::into_raw(Box::new(MbMap { inner })) };
                MbStatus::Ok
            }
            Err(e) => fail(sample_status(&e), e.to_string()),
        }
    })
}

/// Releases a map; null is ignored.
///
/// # Safety
/// `m` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn mb_map_free(m: *mut MbMap) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Number of edges; 0 for null.
///
/// # Safety
/// `m` must be null or a live map.
#[no_mangle]
pub unsafe extern "C" fn mb_map_num_edges(m: *const MbMap) -> usize {
    if m.is_null() {
        0
    } else {
        (*m).inner.num_edges()
    }
}

/// Whether the map is 2-connected (the trivial map counts as 2-connected).
///
/// # Safety
/// `m` must be a live map; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn mb_map_is_two_connected(m: *const MbMap, out: *mut bool) -> MbStatus {
    if m.is_null() || out.is_null() {
        return fail(MbStatus::NullPointer, "null argument");
    }
    *out = is_two_connected(&(*m).inner);
    MbStatus::Ok
}

/// Descending block edge-counts of the map.
///
/// # Safety
/// As for [`mb_sampler_sample`].
#[no_mangle]
pub unsafe extern "C" fn mb_map_block_sizes(
    m: *const MbMap,
    sizes: *mut u64,
    cap: usize,
    len: *mut usize,
) -> MbStatus {
    if m.is_null() || len.is_null() {
        return fail(MbStatus::NullPointer, "null argument");
    }
    let m = &(*m).inner;
    let mut v: Vec<usize> = if m.is_trivial() {
        Vec::new()
    } else {
        blocks(m).blocks.iter().map(|b| b.num_edges()).collect()
    };
    v.sort_unstable_by(|a, b| b.cmp(a));
    *len = v.len();
    if cap < v.len() {
        return fail(MbStatus::BufferTooSmall, format!("need {} slots", v.len()));
    }
    if sizes.is_null() && !v.is_empty() {
        return fail(MbStatus::NullPointer, "null size buffer");
    }
    for (i, &x) in v.iter().enumerate() {
        *sizes.add(i) = x as u64;
    }
    MbStatus::Ok
}

/// Canonical JSON record of the map.
///
/// # Safety
/// `m` must be a live map; buffer rules as for [`mb_last_error`].
#[no_mangle]
pub unsafe extern "C" fn mb_map_to_json(
    m: *const MbMap,
    buf: *mut c_char,
    len: usize,
    written: *mut usize,
) -> MbStatus {
    if m.is_null() {
        return fail(MbStatus::NullPointer, "null map");
    }
    write_str(&(*m).inner.canonical().to_json(), buf, len, written)
}
