//! Range sweeps: which parameter tuples a claim is checked at, and how the
//! point reports are merged.
//!
//! [`tasks`] enumerates the points in a deterministic order,
//! [`Verifier::run`] checks one point, and [`VerificationReport::merge`]
//! sorts counterexamples by parameters, so running the tasks in any order or
//! on any number of threads gives the same merged report.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Result;
use crate::lehmer::{self, checks};
use crate::mpoly::MultiPoly;
use crate::ntkernel;
use crate::report::VerificationReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Claim {
    Lehmer,
    Conjecture,
    Integrality,
    Ak,
    WModP,
    WExpansion,
    WFactorization,
    Routes,
}

impl Claim {
    pub const ALL: [Claim; 8] = [
        Claim::Lehmer,
        Claim::Conjecture,
        Claim::Integrality,
        Claim::Ak,
        Claim::WModP,
        Claim::WExpansion,
        Claim::WFactorization,
        Claim::Routes,
    ];

    /// Identifier used in reports.
    pub fn id(self) -> &'static str {
        match self {
            Claim::Lehmer => checks::LEHMER_IDENTITY,
            Claim::Conjecture => checks::CONJECTURE,
            Claim::Integrality => checks::INTEGRALITY,
            Claim::Ak => checks::AK_CONGRUENCE,
            Claim::WModP => checks::W_MOD_P,
            Claim::WExpansion => checks::W_EXPANSION,
            Claim::WFactorization => checks::W_FACTORIZATION,
            Claim::Routes => checks::ROUTE_AGREEMENT,
        }
    }

    /// Short name used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            Claim::Lehmer => "lehmer",
            Claim::Conjecture => "conjecture",
            Claim::Integrality => "integrality",
            Claim::Ak => "ak",
            Claim::WModP => "wmodp",
            Claim::WExpansion => "wexpansion",
            Claim::WFactorization => "wfactor",
            Claim::Routes => "routes",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Claim::ALL.into_iter().find(|c| c.name() == s || c.id() == s)
    }

    /// Smallest `n` the claim is stated for.
    pub fn n_floor(self) -> u64 {
        match self {
            Claim::Lehmer => 2,
            Claim::WFactorization => 1,
            _ => 3,
        }
    }

    /// Whether the claim is swept over `n` at all.
    pub fn uses_n(self) -> bool {
        !matches!(self, Claim::Conjecture | Claim::Routes)
    }

    pub fn default_bounds(self) -> SweepBounds {
        let n_max = if self == Claim::Ak { 500 } else { 200 };
        let k_max = match self {
            Claim::Conjecture | Claim::Ak => 6,
            _ => 12,
        };
        SweepBounds { n_min: self.n_floor(), n_max, k_max, m_max: 8 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SweepBounds {
    pub n_min: u64,
    pub n_max: u64,
    pub k_max: usize,
    pub m_max: usize,
}

/// One point of a sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Task {
    Lehmer { n: u64, k: usize },
    Conjecture { k: usize },
    Omega { n: u64, m: usize },
    Fkn { n: u64, k: usize },
    Ak { n: u64, k: usize },
    WModP { p: u64, r: u32 },
    WExpansion { n: u64, m_max: usize },
    WFactorization { n: u64 },
    Routes { k: usize },
}

/// Text description of the swept range, used as the report's `range`.
pub fn range_text(claim: Claim, b: &SweepBounds) -> String {
    let n = format!("n={}..={}", b.n_min, b.n_max);
    match claim {
        Claim::Lehmer => format!("{n}, k=0..=min(phi(n),{})", b.k_max),
        Claim::Conjecture | Claim::Routes => format!("k=0..={}", b.k_max),
        Claim::Integrality => format!("{n}, m=1..={} with m<phi(n)/2, k=1..={} with k<phi(n)", b.m_max, b.k_max),
        Claim::Ak => format!("{n}, k=1..={} with 2k+1<phi(n)", b.k_max),
        Claim::WModP => format!("prime powers p^r in {}..={}", b.n_min.max(3), b.n_max),
        Claim::WExpansion => format!("{n}, m=1..={}", b.m_max),
        Claim::WFactorization => n,
    }
}

/// The points of `claim` within `b`, in a fixed order.
pub fn tasks(claim: Claim, b: &SweepBounds) -> Result<Vec<Task>> {
    let mut out = Vec::new();
    let ns = b.n_min.max(1)..=b.n_max;
    match claim {
        Claim::Lehmer => {
            for n in ns {
                let phi = ntkernel::euler_phi(n)? as usize;
                out.extend((0..=phi.min(b.k_max)).map(|k| Task::Lehmer { n, k }));
            }
        }
        Claim::Conjecture => out.extend((0..=b.k_max).map(|k| Task::Conjecture { k })),
        Claim::Routes => out.extend((0..=b.k_max).map(|k| Task::Routes { k })),
        Claim::Integrality => {
            for n in ns {
                out.extend((1..=b.m_max).map(|m| Task::Omega { n, m }));
                out.extend((1..=b.k_max).map(|k| Task::Fkn { n, k }));
            }
        }
        Claim::Ak => {
            for n in ns {
                out.extend((1..=b.k_max).map(|k| Task::Ak { n, k }));
            }
        }
        Claim::WModP => {
            for n in ns.filter(|&n| n >= 3) {
                if let Some((p, r)) = ntkernel::factorize(n)?.prime_power() {
                    out.push(Task::WModP { p, r });
                }
            }
        }
        Claim::WExpansion => out.extend(ns.map(|n| Task::WExpansion { n, m_max: b.m_max })),
        Claim::WFactorization => out.extend(ns.map(|n| Task::WFactorization { n })),
    }
    Ok(out)
}

/// Runs point checks, using either the crate's own `F_k` or a supplied
/// table (for example one loaded from a fixture file).
#[derive(Clone, Debug, Default)]
pub struct Verifier {
    f_table: Option<Vec<MultiPoly>>,
}

impl Verifier {
    pub fn new() -> Self {
        Self::default()
    }

    /// Uses `f_table[k]` as `F_k` wherever the table reaches; larger `k`
    /// fall back to the computed polynomials.
    pub fn with_f_table(f_table: Vec<MultiPoly>) -> Self {
        Self { f_table: Some(f_table) }
    }

    pub fn f(&self, k: usize) -> Result<MultiPoly> {
        match self.f_table.as_ref().and_then(|t| t.get(k)) {
            Some(f) => Ok(f.clone()),
            None => lehmer::f_poly(k),
        }
    }

    pub fn run(&self, task: &Task) -> VerificationReport {
        let with_f = |k: usize, claim: &str, check: &dyn Fn(&MultiPoly) -> VerificationReport| match self.f(k) {
            Ok(f) => check(&f),
            Err(e) => VerificationReport::fail(
                claim,
                format!("k={k}"),
                crate::report::Counterexample {
                    params: alloc::vec![crate::report::Param::new("k", k as i64)],
                    lhs: String::from("error"),
                    rhs: format!("{e}"),
                },
            ),
        };
        match *task {
            Task::Lehmer { n, k } => {
                with_f(k, checks::LEHMER_IDENTITY, &|f| checks::check_lehmer_identity_with(f, n, k))
            }
            Task::Conjecture { k } => {
                with_f(2 * k + 1, checks::CONJECTURE, &|f| checks::check_conjecture_divisibility_with(f, k))
            }
            Task::Omega { n, m } => checks::check_integrality(n, m),
            Task::Fkn { n, k } => with_f(k, checks::INTEGRALITY, &|f| checks::check_fkn_integrality_with(f, n, k)),
            Task::Ak { n, k } => checks::check_ak_congruence(n, k),
            Task::WModP { p, r } => checks::w_mod_p_check(p, r).unwrap_or_else(|e| {
                VerificationReport::fail(
                    checks::W_MOD_P,
                    format!("p={p}, r={r}"),
                    crate::report::Counterexample {
                        params: alloc::vec![
                            crate::report::Param::new("p", p as i64),
                            crate::report::Param::new("r", r as i64)
                        ],
                        lhs: String::from("error"),
                        rhs: format!("{e}"),
                    },
                )
            }),
            Task::WExpansion { n, m_max } => checks::w_expansion_check(n, m_max),
            Task::WFactorization { n } => checks::check_w_factorization(n),
            Task::Routes { k } => with_f(k, checks::ROUTE_AGREEMENT, &|f| checks::check_route_agreement(f, k)),
        }
    }

    /// Checks every point of `claim` in order and merges the results.
    pub fn sweep(&self, claim: Claim, b: &SweepBounds) -> Result<VerificationReport> {
        let reports: Vec<_> = tasks(claim, b)?.iter().map(|t| self.run(t)).collect();
        Ok(VerificationReport::merge(claim.id(), range_text(claim, b), reports))
    }
}
