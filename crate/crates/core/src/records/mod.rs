//! Record scanning, the set T, and the checks built on them.

mod scan;
mod structure;
mod verify;

pub use scan::{scan_records, RecordEntry, RecordScanner, ScanConfig, DEFAULT_CHUNK};
pub use structure::{
    double_zero_blocks, enumerate_t, in_t, is_fibbinary, max_zero_run, record_value_shape, t_members_up_to,
    TMembers,
};
pub use verify::{
    bound_equality_points, check_bound, check_identities, check_theorem, pads_of_len, BoundReport,
    IdentityReport, IdentityTally, TheoremReport,
};
