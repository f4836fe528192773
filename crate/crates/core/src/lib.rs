//! End-to-end form understanding at desk scale.
//!
//! Given the word bounding boxes of a form page, the toolkit solves two
//! coupled tasks:
//!
//! * **word grouping** — segmenting the ordered word sequence into semantic
//!   entities with a BiLSTM-CRF tagger over text-layout features, and
//! * **relation extraction** — ranking candidate source entities for every
//!   target entity with an asymmetric bilinear scorer trained by negative
//!   sampling.
//!
//! Both heads share a feature pipeline (sliding-window contextual text
//! encoder plus a coordinate projection network) and can be trained jointly
//! with a teacher-forcing multitask scheme. Everything runs on a small
//! built-in reverse-mode autodiff engine ([`tensor`]), so the crate has no
//! heavyweight ML dependencies and training is bit-for-bit deterministic
//! given a seed.

pub mod commands;
pub mod config;
pub mod dataset;
pub mod error;
pub mod features;
pub mod grouper;
pub mod linker;
pub mod metrics;
pub mod model;
pub mod nn;
pub mod rng;
pub mod tensor;
pub mod trainer;

pub use config::RunConfig;
pub use dataset::{Dataset, Entity, EntityCategory, Page, Split, WordBox};
pub use error::{Error, Result};
pub use metrics::MetricReport;
pub use model::Model;
pub use tensor::{Array, Tape, Tensor};
pub use trainer::{Mode, TrainConfig, TrainHistory};
