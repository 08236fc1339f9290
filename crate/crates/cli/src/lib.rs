//! Session language, command execution, reports and the corpus runner.

pub mod corpus_run;
pub mod dsl;
pub mod env;
pub mod report;
pub mod run;

pub use corpus_run::{corpus_run, Aggregate, CorpusConfig};
pub use dsl::{parse, parse_session, Session, SessionError};
pub use report::{canonical_json, to_csv, Document, Report, Status, Verdict};
pub use run::{run, RunOptions};
