//! The JSON run report. One document per `solve`/`verify` run on stdout;
//! every numeric field is an exact rational string (a decimal when the
//! denominator divides a power of ten, `p/q` otherwise), so reports are
//! reproducible bit for bit up to the wall-clock field.

use serde::Serialize;

use xapx_core::reductions::ApproxCertificate;
use xapx_core::weight::format_exact;

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub problem: String,
    pub instance: String,
    pub rate: String,
    pub inner: String,
    /// Objective value of the returned solution (exact).
    pub value: String,
    /// Problem-specific witness payload.
    pub solution: serde_json::Value,
    pub certificate: CertificateReport,
    /// Present when `--verify` ran.
    pub oracle_optimum: Option<String>,
    /// Wall-clock milliseconds; the only field that may differ across runs.
    pub wall_ms: u64,
}

#[derive(Debug, Serialize)]
pub struct CertificateReport {
    pub problem: String,
    pub instance_digest: String,
    pub value: String,
    pub maximize: bool,
    pub claimed_bound: String,
    pub oracle_optimum: Option<String>,
    pub verified: bool,
}

impl CertificateReport {
    pub fn from_certificate(cert: &ApproxCertificate) -> Self {
        CertificateReport {
            problem: cert.problem.as_str().to_string(),
            instance_digest: format!("{:016x}", cert.instance_digest),
            value: format_exact(&cert.value),
            maximize: cert.maximize,
            claimed_bound: cert.bound.describe(),
            oracle_optimum: cert.oracle_optimum.as_ref().map(format_exact),
            verified: cert.verified,
        }
    }
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// `key: value` lines for `--format table`.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("problem        {}\n", self.problem));
        out.push_str(&format!("instance       {}\n", self.instance));
        out.push_str(&format!("rate           {}\n", self.rate));
        out.push_str(&format!("inner          {}\n", self.inner));
        out.push_str(&format!("value          {}\n", self.value));
        out.push_str(&format!("bound          {}\n", self.certificate.claimed_bound));
        if let Some(opt) = &self.oracle_optimum {
            out.push_str(&format!("oracle optimum {opt}\n"));
            out.push_str(&format!("verified       {}\n", self.certificate.verified));
        }
        out.push_str(&format!("wall ms        {}\n", self.wall_ms));
        out
    }
}

/// A verify-subcommand (exact solve) report.
#[derive(Debug, Serialize)]
pub struct ExactReport {
    pub problem: String,
    pub instance: String,
    pub optimum: String,
    pub witness: serde_json::Value,
    pub nodes_explored: u64,
    pub wall_ms: u64,
}

impl ExactReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
