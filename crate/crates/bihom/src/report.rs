use std::fmt;

use crate::exactnum::Scalar;
use crate::linalg::Matrix;

/// Where an identity fails: a basis-index tuple and both evaluated sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
}

impl Witness {
    pub fn new(indices: Vec<usize>, lhs: Vec<Scalar>, rhs: Vec<Scalar>) -> Self {
        Witness { indices, lhs, rhs }
    }
}

fn fmt_vec(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices.iter().map(ToString::to_string).collect();
        write!(
            f,
            "at ({}): lhs {} rhs {}",
            idx.join(","),
            fmt_vec(&self.lhs),
            fmt_vec(&self.rhs)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckEntry {
    pub axiom: String,
    pub passed: bool,
    pub witness: Option<Witness>,
}

/// Per-axiom verdicts. Failing entries always carry a witness.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub entries: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records an axiom: passes when `failure` is `None`.
    pub fn record(&mut self, axiom: impl Into<String>, failure: Option<Witness>) {
        self.entries.push(CheckEntry {
            axiom: axiom.into(),
            passed: failure.is_none(),
            witness: failure,
        });
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.passed)
    }

    pub fn entry(&self, axiom: &str) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.axiom == axiom)
    }

    /// True if the named axiom is present and passes.
    pub fn holds(&self, axiom: &str) -> bool {
        self.entry(axiom).is_some_and(|e| e.passed)
    }

    pub fn merge(&mut self, prefix: &str, other: CheckReport) {
        for mut e in other.entries {
            e.axiom = format!("{prefix}{}", e.axiom);
            self.entries.push(e);
        }
    }

    /// Keeps only the failing entries; used to build error payloads.
    pub fn only_failures(&self) -> CheckReport {
        CheckReport {
            entries: self.failures().cloned().collect(),
        }
    }

    /// One line per axiom; at most `witness_limit` witnesses are printed.
    pub fn render(&self, witness_limit: usize) -> String {
        let mut out = String::new();
        let mut shown = 0;
        for e in &self.entries {
            out.push_str(if e.passed { "PASS " } else { "FAIL " });
            out.push_str(&e.axiom);
            out.push('\n');
            if let Some(w) = &e.witness {
                if shown < witness_limit {
                    out.push_str(&format!("     {w}\n"));
                    shown += 1;
                }
            }
        }
        out
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failed: Vec<String> = self
            .failures()
            .map(|e| match &e.witness {
                Some(w) => format!("{} {w}", e.axiom),
                None => e.axiom.clone(),
            })
            .collect();
        if failed.is_empty() {
            write!(f, "all {} axioms hold", self.entries.len())
        } else {
            write!(f, "{}", failed.join("; "))
        }
    }
}

/// First tuple on which `eval` produces different sides.
pub fn first_failure<I, F>(tuples: I, mut eval: F) -> Option<Witness>
where
    I: IntoIterator<Item = Vec<usize>>,
    F: FnMut(&[usize]) -> (Vec<Scalar>, Vec<Scalar>),
{
    tuples.into_iter().find_map(|t| {
        let (lhs, rhs) = eval(&t);
        (lhs != rhs).then(|| Witness::new(t, lhs, rhs))
    })
}

/// All tuples in `0..dims[0] x 0..dims[1] x ...`, lexicographically.
pub fn tuples(dims: &[usize]) -> Vec<Vec<usize>> {
    let total: usize = dims.iter().product();
    (0..total).map(|n| unflatten(n, dims)).collect()
}

/// Mixed-radix decomposition of a flat tensor index.
pub fn unflatten(mut n: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, &d) in out.iter_mut().zip(dims).rev() {
        *slot = n % d;
        n /= d;
    }
    out
}

/// Compares two linear maps column by column. The witness names the
/// first basis tensor (decomposed with `dims`) where they differ.
pub fn matrix_identity(lhs: &Matrix, rhs: &Matrix, dims: &[usize]) -> Option<Witness> {
    if lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols() {
        return Some(Witness::new(vec![], vec![], vec![]));
    }
    (0..lhs.cols()).find_map(|c| {
        let (l, r) = (lhs.column(c), rhs.column(c));
        (l != r).then(|| Witness::new(unflatten(c, dims), l, r))
    })
}
