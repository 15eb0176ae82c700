use std::cmp::Ordering;

use crate::exact_linear::{Scalar, Vector};

/// Violations are capped at this many per report unless configured otherwise.
pub const DEFAULT_VIOLATION_CAP: usize = 100;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub id: String,
    /// Level instance (`i=0`), equation part, or checked sub-structure, when relevant.
    pub instance: Option<String>,
    /// 1-based basis indices, one per variable.
    pub witness: Vec<usize>,
    pub lhs: Vector,
    pub rhs: Vector,
}

/// A condition whose as-printed form disagrees with its corrected form on the checked input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypoFlag {
    pub id: String,
    pub instance: Option<String>,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    pub violations: Vec<Violation>,
    pub typo_suspects: Vec<TypoFlag>,
    pub conforming_field: bool,
    /// Violations dropped by the cap.
    pub truncated: usize,
}

impl Default for ConditionReport {
    fn default() -> Self {
        ConditionReport { violations: Vec::new(), typo_suspects: Vec::new(), conforming_field: true, truncated: 0 }
    }
}

/// Orders ids like "Z2" < "Z10" < "ZZ1" by comparing digit runs numerically.
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    fn chunks(s: &str) -> Vec<(bool, &str)> {
        let mut out = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for i in 1..=bytes.len() {
            if i == bytes.len() || bytes[i].is_ascii_digit() != bytes[start].is_ascii_digit() {
                out.push((bytes[start].is_ascii_digit(), &s[start..i]));
                start = i;
            }
        }
        out
    }
    let (ca, cb) = (chunks(a), chunks(b));
    for (x, y) in ca.iter().zip(&cb) {
        let o = match (x, y) {
            ((true, p), (true, q)) => {
                let (p, q) = (p.trim_start_matches('0'), q.trim_start_matches('0'));
                p.len().cmp(&q.len()).then(p.cmp(q))
            }
            ((_, p), (_, q)) => p.cmp(q),
        };
        if o != Ordering::Equal {
            return o;
        }
    }
    ca.len().cmp(&cb.len())
}

fn vec_cmp(a: &[Scalar], b: &[Scalar]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        let o = x.canonical_cmp(y);
        if o != Ordering::Equal {
            return o;
        }
    }
    a.len().cmp(&b.len())
}

impl Violation {
    fn canonical_cmp(&self, other: &Violation) -> Ordering {
        natural_cmp(&self.id, &other.id)
            .then_with(|| self.instance.cmp(&other.instance))
            .then_with(|| self.witness.cmp(&other.witness))
            .then_with(|| vec_cmp(&self.lhs, &other.lhs))
            .then_with(|| vec_cmp(&self.rhs, &other.rhs))
    }
}

impl ConditionReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn from_violations(violations: Vec<Violation>) -> Self {
        let mut r = ConditionReport { violations, ..Default::default() };
        r.canonicalize();
        r
    }

    /// Sorts violations and flags; merge is associative under this ordering.
    pub fn canonicalize(&mut self) {
        self.violations.sort_by(|a, b| a.canonical_cmp(b));
        self.violations.dedup();
        self.typo_suspects.sort_by(|a, b| {
            natural_cmp(&a.id, &b.id).then_with(|| a.instance.cmp(&b.instance)).then_with(|| a.note.cmp(&b.note))
        });
        self.typo_suspects.dedup();
    }

    pub fn merge(mut self, other: ConditionReport) -> ConditionReport {
        self.violations.extend(other.violations);
        self.typo_suspects.extend(other.typo_suspects);
        self.conforming_field &= other.conforming_field;
        self.truncated += other.truncated;
        self.canonicalize();
        self
    }

    pub fn cap(mut self, max: usize) -> ConditionReport {
        if self.violations.len() > max {
            self.truncated += self.violations.len() - max;
            self.violations.truncate(max);
        }
        self
    }

    /// Tags every violation with an instance label, keeping any existing one as a suffix.
    pub fn tagged(mut self, tag: &str) -> ConditionReport {
        for v in &mut self.violations {
            v.instance = Some(match v.instance.take() {
                Some(old) => format!("{tag}, {old}"),
                None => tag.to_string(),
            });
        }
        self.canonicalize();
        self
    }

    pub fn ids(&self) -> Vec<&str> {
        let mut ids: Vec<&str> = self.violations.iter().map(|v| v.id.as_str()).collect();
        ids.dedup();
        ids
    }
}
