//! Crate-wide error type.
//!
//! Every failure carries a stable category string so the CLI can print
//! machine-parsable one-liners (`error[<category>]: <message>`).

/// Errors produced by model construction, data handling, training and
/// evaluation.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An input value violates a precondition (shape mismatch, non-finite
    /// values, simplex violation, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A sampled or user-supplied parameter is out of range (degenerate crop
    /// box, erase box outside the image, negative sigma, ...).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A configuration value is inconsistent or unknown (unknown key, batch
    /// size too small, image size incompatible with the backbone, ...).
    #[error("configuration error: {0}")]
    Config(String),

    /// A dataset manifest row could not be parsed; names the offending line.
    #[error("manifest line {line}: {message}")]
    ManifestRow { line: usize, message: String },

    /// The same image path appears twice in a manifest.
    #[error("duplicate image path in manifest: {0}")]
    DuplicatePath(String),

    /// A referenced file does not exist.
    #[error("missing file: {0}")]
    MissingFile(String),

    /// Dataset contents violate an assumption (conflicting per-patient
    /// labels, unknown patient, empty table, ...).
    #[error("invalid data: {0}")]
    InvalidData(String),

    /// A checkpoint directory is missing, incomplete or corrupt.
    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    /// Training produced a non-finite value; names the first component that
    /// became non-finite and the step at which it happened.
    #[error("non-finite {component} at step {step}")]
    NonFinite { component: String, step: usize },

    /// A metric is undefined on the given inputs (single-class labels,
    /// zero-variance predictions, all folds skipped, ...).
    #[error("metric undefined: {0}")]
    MetricUndefined(String),

    /// Underlying I/O failure.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable category identifier used by the CLI for machine-parsable
    /// error lines.
    pub fn category(&self) -> &'static str {
        match self {
            Error::InvalidInput(_) => "invalid-input",
            Error::InvalidParameter(_) => "invalid-parameter",
            Error::Config(_) => "config",
            Error::ManifestRow { .. } => "manifest-row",
            Error::DuplicatePath(_) => "duplicate-path",
            Error::MissingFile(_) => "missing-file",
            Error::InvalidData(_) => "invalid-data",
            Error::Checkpoint(_) => "checkpoint",
            Error::NonFinite { .. } => "non-finite",
            Error::MetricUndefined(_) => "metric-undefined",
            Error::Io(_) => "io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn categories_are_stable_and_messages_name_the_problem() {
        let e = Error::ManifestRow { line: 17, message: "expected 4 fields, got 3".into() };
        assert_eq!(e.category(), "manifest-row");
        assert!(e.to_string().contains("17"), "row errors must name the line: {e}");

        let e = Error::NonFinite { component: "contrastive".into(), step: 42 };
        assert_eq!(e.category(), "non-finite");
        assert!(
            e.to_string().contains("contrastive") && e.to_string().contains("42"),
            "non-finite errors must name component and step: {e}"
        );
    }
}
