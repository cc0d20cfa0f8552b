//! Self-supervised texture learning for B-mode ultrasound images.
//!
//! The core model splits an image into `K` texture channels by projecting
//! backbone logits onto the probability simplex at every pixel (sparsemax),
//! then reconstructs the image from those channel weights with a bank of
//! small learnable kernels. Training combines four-view contrastive
//! learning, logit consistency between color-jittered views, reconstruction
//! (L1 + structural similarity) and a channel-usage entropy regularizer.
//!
//! Around the model: deterministic four-view augmentation, a balanced
//! sampler and manifest loader, a procedural speckle-phantom generator,
//! a cosine-annealed AdamW training loop with resumable checkpoints, and a
//! frozen-encoder evaluation suite (linear probing, attention-pooled
//! regression, 2-D projection, classification/regression metrics).

pub mod augment;
pub mod config;
pub mod data;
pub mod error;
pub mod eval;
pub mod grid;
pub mod losses;
pub mod model;
pub mod nn;
pub mod seed;
pub mod train;

pub use error::{Error, Result};
pub use grid::{ChannelStack, Image};
