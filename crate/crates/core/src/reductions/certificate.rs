use alloc::format;
use alloc::string::String;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::weight::{approx_decimal, ceil_div_rational, ceil_mul_ln, format_exact, harmonic, w_int, Weight};

/// Which problem a certificate talks about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProblemTag {
    Bandwidth,
    SetCover,
    DominatingSet,
    IndependentSet,
    Coloring,
    Tsp,
}

impl ProblemTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            ProblemTag::Bandwidth => "bandwidth",
            ProblemTag::SetCover => "setcover",
            ProblemTag::DominatingSet => "mds",
            ProblemTag::IndependentSet => "mis",
            ProblemTag::Coloring => "coloring",
            ProblemTag::Tsp => "tsp",
        }
    }
}

/// The exact-checkable form of a claimed guarantee.
#[derive(Debug, Clone, PartialEq)]
pub enum GuaranteeBound {
    /// Minimization: `value <= c * opt`. Maximization: `c * value >= opt`.
    Multiplier(Weight),
    /// `value <= (alpha + H_n - H_cap) * opt` — the exact form of the
    /// universe-scaling bound, without the asymptotic slack.
    HarmonicUniverse {
        alpha: Weight,
        n: usize,
        residual_cap: usize,
    },
    /// `value <= alpha * opt + ceil(opt * beta * ln rate)`.
    ColoringAffine {
        alpha: Weight,
        beta: Weight,
        rate: Weight,
    },
}

impl GuaranteeBound {
    /// Exact multiplier/affine bound for a universe-scaling run at `rate`.
    pub fn harmonic_for(alpha: Weight, n: usize, rate: &Weight) -> Self {
        GuaranteeBound::HarmonicUniverse {
            alpha,
            n,
            residual_cap: ceil_div_rational(n, rate),
        }
    }

    /// The right-hand side as a function of the optimum (minimization).
    pub fn bound_value(&self, opt: &Weight) -> Weight {
        match self {
            GuaranteeBound::Multiplier(c) => c * opt,
            GuaranteeBound::HarmonicUniverse {
                alpha,
                n,
                residual_cap,
            } => (alpha + harmonic(*n) - harmonic(*residual_cap)) * opt,
            GuaranteeBound::ColoringAffine { alpha, beta, rate } => {
                let extra: BigInt = ceil_mul_ln(&(opt * beta), rate);
                alpha * opt + BigRational::from_integer(extra)
            }
        }
    }

    pub fn describe(&self) -> String {
        match self {
            GuaranteeBound::Multiplier(c) => format!("{}*OPT", format_exact(c)),
            GuaranteeBound::HarmonicUniverse {
                alpha,
                n,
                residual_cap,
            } => {
                let value = alpha + harmonic(*n) - harmonic(*residual_cap);
                format!(
                    "({} + H_{} - H_{})*OPT = {}*OPT",
                    format_exact(alpha),
                    n,
                    residual_cap,
                    format_exact(&value)
                )
            }
            GuaranteeBound::ColoringAffine { alpha, beta, rate } => format!(
                "{}*OPT + ceil(OPT*{}*ln({}))",
                format_exact(alpha),
                format_exact(beta),
                format_exact(rate)
            ),
        }
    }
}

/// A solution value alongside the guarantee it claims; `verified` is set
/// only after the bound has been checked against an oracle optimum, as an
/// exact rational inequality.
#[derive(Debug, Clone)]
pub struct ApproxCertificate {
    pub problem: ProblemTag,
    pub instance_digest: u64,
    pub value: Weight,
    pub maximize: bool,
    pub bound: GuaranteeBound,
    pub oracle_optimum: Option<Weight>,
    pub verified: bool,
}

impl ApproxCertificate {
    pub fn new(
        problem: ProblemTag,
        instance_digest: u64,
        value: Weight,
        maximize: bool,
        bound: GuaranteeBound,
    ) -> Self {
        ApproxCertificate {
            problem,
            instance_digest,
            value,
            maximize,
            bound,
            oracle_optimum: None,
            verified: false,
        }
    }

    /// Whether the claim holds against a given optimum.
    pub fn holds_against(&self, opt: &Weight) -> bool {
        if self.maximize {
            match &self.bound {
                GuaranteeBound::Multiplier(c) => &(c * &self.value) >= opt,
                _ => unreachable!("maximization bounds are multiplicative"),
            }
        } else {
            self.value <= self.bound.bound_value(opt)
        }
    }

    /// Records the oracle optimum and checks the bound; returns the verdict.
    pub fn verify(&mut self, opt: Weight) -> bool {
        self.verified = self.holds_against(&opt);
        self.oracle_optimum = Some(opt);
        self.verified
    }

    /// `"value <= bound(opt)"` with both sides substituted, for reporting
    /// violations.
    pub fn inequality_text(&self) -> String {
        let opt = self
            .oracle_optimum
            .as_ref()
            .map(format_exact)
            .unwrap_or_else(|| String::from("OPT"));
        if self.maximize {
            let GuaranteeBound::Multiplier(c) = &self.bound else {
                unreachable!()
            };
            format!(
                "{} * {} >= {}",
                format_exact(c),
                format_exact(&self.value),
                opt
            )
        } else {
            let rhs = self
                .oracle_optimum
                .as_ref()
                .map(|o| format_exact(&self.bound.bound_value(o)))
                .unwrap_or_else(|| self.bound.describe());
            format!("{} <= {}", format_exact(&self.value), rhs)
        }
    }
}

/// Short display of a rational ratio for tables.
pub fn ratio_display(value: &Weight, opt: &Weight) -> String {
    if opt == &w_int(0) {
        return String::from("-");
    }
    approx_decimal(&(value / opt), 4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::w_ratio;

    #[test]
    fn multiplier_checks() {
        let mut cert = ApproxCertificate::new(
            ProblemTag::SetCover,
            1,
            w_int(6),
            false,
            GuaranteeBound::Multiplier(w_int(2)),
        );
        assert!(cert.verify(w_int(3)));
        assert!(cert.verified);
        let mut bad = ApproxCertificate::new(
            ProblemTag::SetCover,
            1,
            w_int(7),
            false,
            GuaranteeBound::Multiplier(w_int(2)),
        );
        assert!(!bad.verify(w_int(3)));
    }

    #[test]
    fn maximization_direction() {
        let mut cert = ApproxCertificate::new(
            ProblemTag::IndependentSet,
            1,
            w_int(2),
            true,
            GuaranteeBound::Multiplier(w_int(2)),
        );
        assert!(cert.verify(w_int(4)));
        assert!(!cert.clone().verify(w_int(5)));
    }

    #[test]
    fn harmonic_bound_value() {
        let b = GuaranteeBound::harmonic_for(w_int(1), 8, &w_int(2));
        // 1 + H_8 - H_4 = 1 + 533/840.
        assert_eq!(b.bound_value(&w_int(1)), w_ratio(1373, 840));
    }

    #[test]
    fn coloring_affine_bound() {
        let b = GuaranteeBound::ColoringAffine {
            alpha: w_int(1),
            beta: w_int(1),
            rate: w_int(2),
        };
        // chi = 3: 3 + ceil(3 ln 2) = 3 + 3.
        assert_eq!(b.bound_value(&w_int(3)), w_int(6));
    }
}
