//! Conjecture-probing procedures built on the functionals.

pub mod frobenius;
pub mod one_ps;
pub mod reduction;
pub mod scan;

pub use frobenius::{frobenius_certificate, CertResult, CertStatus};
pub use one_ps::{one_ps_check, OnePs, OnePsReport};
pub use reduction::{
    default_pairing, double_homog_reduce, gaussian_torus_crosscheck, CrosscheckReport,
    DoubleHomogReduction, Pairing,
};
pub use scan::{
    mz_probe, vanish_scan, MzProbeReport, ProbeVerdict, VanishingProfile, DEFAULT_WINDOW,
};
