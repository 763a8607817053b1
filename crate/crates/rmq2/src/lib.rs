//! Succinct range-minimum queries.
//!
//! [`RmqIndex`] answers "where is the minimum of `A[i..=j]`?" using about
//! two bits per array element, and never looks at the array after
//! construction — the answer is computed entirely inside a balanced
//! parenthesis sequence that encodes the array's min-heap ordering. Beyond
//! plain minima the index exposes the ordering tree itself (`parent`,
//! `lca`), serializes to a canonical container, and powers the
//! [`doclist`] module, which lists all documents containing a pattern in
//! time proportional to the output size.
//!
//! Construction reads each input value exactly once, right to left, through
//! the [`aux_rmq::ValueAccessor`] trait, so the array may be virtual:
//! the document-listing build generates its value stream on the fly and the
//! full array never exists in memory.
//!
//! ```
//! use rmq2::{RmqIndex, TiePolicy};
//!
//! let a: Vec<i64> = vec![3, 1, 4, 1, 5];
//! let idx = RmqIndex::build(&a, a.len(), TiePolicy::Rightmost).unwrap();
//! assert_eq!(idx.query(1, 5).unwrap(), 4); // rightmost of the two 1s
//! assert_eq!(idx.query(1, 3).unwrap(), 2);
//! ```

pub mod alloc_track;
pub mod aux_rmq;
pub mod bitvec;
pub mod builder;
pub mod doclist;
mod error;
mod intvec;
pub mod parens;
pub mod pm1rmq;
pub mod rmq;
mod tables;

pub use builder::TiePolicy;
pub use doclist::{Corpus, DocIndex};
pub use error::{Error, Result};
pub use rmq::{RmqIndex, SizeBreakdown};
