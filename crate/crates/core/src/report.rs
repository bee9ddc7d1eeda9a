//! Outcome of checking a claim at one point or over a range.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{domain, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Fail,
    /// Every checked point was outside the claim's hypothesis.
    NotApplicable,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "not_applicable",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "pass" => Some(Status::Pass),
            "fail" => Some(Status::Fail),
            "not_applicable" => Some(Status::NotApplicable),
            _ => None,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One named integer parameter, rendered `name=value`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Param {
    pub name: String,
    pub value: i64,
}

impl Param {
    pub fn new(name: &str, value: i64) -> Self {
        Self { name: name.to_string(), value }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}={}", self.name, self.value)
    }
}

impl core::str::FromStr for Param {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Self> {
        let (name, value) = s.split_once('=').ok_or_else(|| domain("parameter must look like name=value"))?;
        let value = value.parse().map_err(|_| domain("parameter value is not an integer"))?;
        Ok(Self { name: name.to_string(), value })
    }
}

/// A point where the two sides of a claim disagree, both rendered exactly.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Counterexample {
    pub params: Vec<Param>,
    pub lhs: String,
    pub rhs: String,
}

impl Counterexample {
    fn sort_key(&self) -> (Vec<i64>, Vec<&str>) {
        (
            self.params.iter().map(|p| p.value).collect(),
            self.params.iter().map(|p| p.name.as_str()).collect(),
        )
    }
}

/// `status` is [`Status::Fail`] exactly when `counterexamples` is nonempty,
/// and counterexamples are kept sorted by their parameter values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    claim_id: String,
    range: String,
    status: Status,
    counterexamples: Vec<Counterexample>,
    elapsed_ms: u64,
}

impl VerificationReport {
    pub fn pass(claim_id: &str, range: impl Into<String>) -> Self {
        Self::with_status(claim_id, range, Status::Pass)
    }

    pub fn not_applicable(claim_id: &str, range: impl Into<String>) -> Self {
        Self::with_status(claim_id, range, Status::NotApplicable)
    }

    pub fn fail(claim_id: &str, range: impl Into<String>, cx: Counterexample) -> Self {
        Self {
            claim_id: claim_id.to_string(),
            range: range.into(),
            status: Status::Fail,
            counterexamples: alloc::vec![cx],
            elapsed_ms: 0,
        }
    }

    /// `pass` if `ok`, otherwise a failure with the given counterexample.
    pub fn check(
        claim_id: &str,
        range: impl Into<String>,
        ok: bool,
        cx: impl FnOnce() -> Counterexample,
    ) -> Self {
        if ok {
            Self::pass(claim_id, range)
        } else {
            Self::fail(claim_id, range, cx())
        }
    }

    fn with_status(claim_id: &str, range: impl Into<String>, status: Status) -> Self {
        Self {
            claim_id: claim_id.to_string(),
            range: range.into(),
            status,
            counterexamples: Vec::new(),
            elapsed_ms: 0,
        }
    }

    /// Rebuilds a report from its fields, enforcing the status invariant.
    pub fn from_parts(
        claim_id: String,
        range: String,
        status: Status,
        mut counterexamples: Vec<Counterexample>,
        elapsed_ms: u64,
    ) -> Result<Self> {
        if (status == Status::Fail) != !counterexamples.is_empty() {
            return Err(domain("status must be fail exactly when counterexamples are present"));
        }
        counterexamples.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        Ok(Self { claim_id, range, status, counterexamples, elapsed_ms })
    }

    /// Combines point reports into one report over `range`. Fails if any
    /// part failed, is not applicable if every part was (or there were
    /// none), and passes otherwise.
    pub fn merge(
        claim_id: &str,
        range: impl Into<String>,
        parts: impl IntoIterator<Item = VerificationReport>,
    ) -> Self {
        let mut any_pass = false;
        let mut cxs = Vec::new();
        for part in parts {
            match part.status {
                Status::Pass => any_pass = true,
                Status::Fail => cxs.extend(part.counterexamples),
                Status::NotApplicable => {}
            }
        }
        let status = if !cxs.is_empty() {
            Status::Fail
        } else if any_pass {
            Status::Pass
        } else {
            Status::NotApplicable
        };
        cxs.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        Self { claim_id: claim_id.to_string(), range: range.into(), status, counterexamples: cxs, elapsed_ms: 0 }
    }

    pub fn claim_id(&self) -> &str {
        &self.claim_id
    }

    pub fn range(&self) -> &str {
        &self.range
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn counterexamples(&self) -> &[Counterexample] {
        &self.counterexamples
    }

    pub fn elapsed_ms(&self) -> u64 {
        self.elapsed_ms
    }

    pub fn set_elapsed_ms(&mut self, ms: u64) {
        self.elapsed_ms = ms;
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]: {} ({} ms)", self.claim_id, self.range, self.status, self.elapsed_ms)?;
        for cx in &self.counterexamples {
            f.write_str("\n  counterexample")?;
            for p in &cx.params {
                write!(f, " {p}")?;
            }
            write!(f, ": lhs = {}, rhs = {}", cx.lhs, cx.rhs)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn cx(n: i64) -> Counterexample {
        Counterexample { params: vec![Param::new("n", n)], lhs: "1".into(), rhs: "2".into() }
    }

    #[test]
    fn merge_status_rules() {
        let pass = VerificationReport::pass("c", "n=1");
        let na = VerificationReport::not_applicable("c", "n=2");
        assert_eq!(VerificationReport::merge("c", "r", [pass.clone(), na.clone()]).status(), Status::Pass);
        assert_eq!(VerificationReport::merge("c", "r", [na.clone()]).status(), Status::NotApplicable);
        assert_eq!(VerificationReport::merge("c", "r", []).status(), Status::NotApplicable);
        let merged = VerificationReport::merge(
            "c",
            "r",
            [VerificationReport::fail("c", "", cx(9)), pass, VerificationReport::fail("c", "", cx(3))],
        );
        assert_eq!(merged.status(), Status::Fail);
        assert_eq!(merged.counterexamples(), &[cx(3), cx(9)]);
    }

    #[test]
    fn from_parts_enforces_invariant() {
        assert!(VerificationReport::from_parts("c".into(), "r".into(), Status::Fail, vec![], 0).is_err());
        assert!(VerificationReport::from_parts("c".into(), "r".into(), Status::Pass, vec![cx(1)], 0).is_err());
        assert!(VerificationReport::from_parts("c".into(), "r".into(), Status::Fail, vec![cx(1)], 5).is_ok());
    }

    #[test]
    fn param_round_trip() {
        let p = Param::new("m", -4);
        assert_eq!(p.to_string().parse::<Param>().unwrap(), p);
        assert!("m4".parse::<Param>().is_err());
    }
}
