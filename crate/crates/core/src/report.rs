//! Itemized verdicts of the axiom checkers.
//!
//! Every checker is a list of [`Residual`] families: a named expression that
//! must vanish on every basis tuple of a given shape. Tuples are enumerated
//! lexicographically and the first nonzero residual becomes the witness.

use std::fmt;

use crate::qlinalg::{Rational, Vector};
use crate::scalar::Scalar;
use crate::tensor::tuples;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness<S = Rational> {
    pub tuple: Vec<usize>,
    pub defect: Vector<S>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckItem<S = Rational> {
    pub name: String,
    pub passed: bool,
    pub witness: Option<Witness<S>>,
}

impl<S> CheckItem<S> {
    pub fn pass(name: impl Into<String>) -> Self {
        CheckItem {
            name: name.into(),
            passed: true,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: Option<Witness<S>>) -> Self {
        CheckItem {
            name: name.into(),
            passed: false,
            witness,
        }
    }
}

/// Counted items decide the verdict; advisories are reported alongside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport<S = Rational> {
    pub items: Vec<CheckItem<S>>,
    pub advisories: Vec<CheckItem<S>>,
}

impl<S> Default for CheckReport<S> {
    fn default() -> Self {
        CheckReport {
            items: Vec::new(),
            advisories: Vec::new(),
        }
    }
}

impl<S> CheckReport<S> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn push(&mut self, item: CheckItem<S>) {
        self.items.push(item);
    }

    pub fn push_advisory(&mut self, item: CheckItem<S>) {
        self.advisories.push(item);
    }

    /// Appends another report, prefixing its item names with `prefix/`.
    pub fn absorb(&mut self, prefix: &str, other: CheckReport<S>) {
        let rename = |mut i: CheckItem<S>| {
            i.name = format!("{prefix}/{}", i.name);
            i
        };
        self.items.extend(other.items.into_iter().map(rename));
        self.advisories
            .extend(other.advisories.into_iter().map(rename));
    }

    pub fn item(&self, name: &str) -> Option<&CheckItem<S>> {
        self.items
            .iter()
            .chain(&self.advisories)
            .find(|i| i.name == name)
    }

    pub fn first_failure(&self) -> Option<&CheckItem<S>> {
        self.items.iter().find(|i| !i.passed)
    }

    /// Whether every counted item whose name starts with `prefix` passed.
    pub fn passed_with_prefix(&self, prefix: &str) -> bool {
        self.items
            .iter()
            .filter(|i| i.name.starts_with(prefix))
            .all(|i| i.passed)
    }
}

impl<S: fmt::Display> fmt::Display for CheckReport<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let line = |f: &mut fmt::Formatter<'_>, i: &CheckItem<S>, tag: &str| -> fmt::Result {
            write!(
                f,
                "{} {}{}",
                if i.passed { "\u{2713}" } else { "\u{2717}" },
                i.name,
                tag
            )?;
            if let Some(w) = &i.witness {
                let d: Vec<String> = w.defect.0.iter().map(|c| c.to_string()).collect();
                write!(f, " at {:?}: defect [{}]", w.tuple, d.join(", "))?;
            }
            writeln!(f)
        };
        for i in &self.items {
            line(f, i, "")?;
        }
        for i in &self.advisories {
            line(f, i, " (advisory)")?;
        }
        Ok(())
    }
}

/// An expression that must vanish on every basis tuple of shape `dims`.
pub struct Residual<'a, S> {
    pub name: String,
    pub dims: Vec<usize>,
    eval: Box<dyn Fn(&[usize]) -> Vector<S> + 'a>,
}

impl<'a, S: Scalar> Residual<'a, S> {
    pub fn new(
        name: impl Into<String>,
        dims: &[usize],
        eval: impl Fn(&[usize]) -> Vector<S> + 'a,
    ) -> Self {
        Residual {
            name: name.into(),
            dims: dims.to_vec(),
            eval: Box::new(eval),
        }
    }

    pub fn eval(&self, tuple: &[usize]) -> Vector<S> {
        (self.eval)(tuple)
    }

    /// First tuple whose residual is flagged by `bad`.
    pub fn first_where(&self, bad: impl Fn(&Vector<S>) -> bool) -> Option<Witness<S>> {
        tuples(&self.dims).find_map(|t| {
            let d = self.eval(&t);
            bad(&d).then_some(Witness {
                tuple: t,
                defect: d,
            })
        })
    }

    pub fn check(&self) -> CheckItem<S> {
        match self.first_where(|d| !d.is_zero()) {
            None => CheckItem::pass(self.name.clone()),
            Some(w) => CheckItem::fail(self.name.clone(), Some(w)),
        }
    }
}

/// Runs every family in order.
pub fn run<S: Scalar>(families: &[Residual<'_, S>]) -> CheckReport<S> {
    CheckReport {
        items: families.iter().map(Residual::check).collect(),
        advisories: Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_witness_is_lexicographically_smallest() {
        let r = Residual::new("x", &[2, 2], |t| {
            Vector(vec![Rational::from((t[0] * t[1]) as i64)])
        });
        let item = r.check();
        assert!(!item.passed);
        assert_eq!(item.witness.unwrap().tuple, vec![1, 1]);
    }

    #[test]
    fn advisories_do_not_count() {
        let mut rep = CheckReport::<Rational>::new();
        rep.push(CheckItem::pass("a"));
        rep.push_advisory(CheckItem::fail("b", None));
        assert!(rep.passed());
        let mut outer = CheckReport::new();
        outer.absorb("inner", rep);
        assert!(outer.item("inner/b").is_some());
    }
}
