//! Corpus, verification campaigns, reports and the command-line front end for
//! `lcgroup-core`.

pub mod campaigns;
pub mod cli;
pub mod corpus;
pub mod report;

pub use campaigns::{run_all, run_campaign, Campaign};
pub use corpus::{corpus, CorpusEntry};
pub use lcgroup_core::genfile::load_group_file;
pub use report::{strip_timing, CampaignReport, Verdict};
