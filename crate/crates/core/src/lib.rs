//! Exact irreducible character values of the generalized symmetric groups
//! `C_k wr S_n`.
//!
//! Characters and conjugacy classes are both indexed by k-colored partitions
//! of `n`. Values lie in `Z[w]` for a primitive k-th root of unity `w` and
//! are computed exactly by the colored Murnaghan-Nakayama rule
//! ([`CharacterEngine::mn_value`]), by a recursion on first rows
//! ([`CharacterEngine::row_value`]) or by a brute-force inner product
//! ([`oracle::specht_value`]).
//!
//! ```
//! use wreathchar_core::{CharKey, CharacterEngine, Method};
//!
//! let engine = CharacterEngine::new();
//! let key = CharKey::parse(3, "[[],[2],[1]]", "[[],[1],[1,1]]").unwrap();
//! let value = engine.chi(&key, Method::Auto).unwrap();
//! assert_eq!(value.to_poly_string(), "-w+w^2");
//! assert_eq!(value.digit_sum_d().unwrap(), 0);
//! ```

pub mod cache;
pub mod characters;
pub mod cores_quotients;
pub mod cyclotomic;
pub mod error;
pub mod oracle;
pub mod partitions;
pub mod table;

pub use characters::{
    degree, largest_part_color, mn_expand_step, row_expand_step, special_value, CharKey, CharacterEngine, ExpansionTerm, Method,
};
pub use cores_quotients::{
    core_quotient, from_core_quotient, k_core, k_quotient, sigma, verify_modular_relation, CoreQuotient, ModularCheck,
};
pub use cyclotomic::CyclotomicNumber;
pub use error::{Error, Result};
pub use partitions::{enumerate_colored, enumerate_partitions, ColoredPartition, ColoredRimHook, Partition, RimHook};
pub use table::{build_table, modular_report, verify_table, CharacterTable, ModularReport, TableReport};
