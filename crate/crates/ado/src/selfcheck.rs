//! End-to-end consistency suite, runnable from the command line. Everything
//! here recomputes from scratch; nothing is cached between checks.

use std::time::{Duration, Instant};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::batch::{compute_report, PipelineChoice, BUILTIN_TABLE};
use crate::braid::BraidWord;
use crate::error::{AdoError, Result};
use crate::invariant::{
    coefficient_c, coefficient_c0_sum_form, direct_invariant, lemma_two_strand_check,
};
use crate::lawrence::alexander_via_burau;
use crate::linalg::Matrix;
use crate::qrep::{braid_matrix, e_matrix, f_matrix, r_matrix, Convention};
use crate::ring::Color;

/// `Fast` keeps to n ≤ 3, N ≤ 3, and short words; `Full` adds four-strand
/// words and an N = 4 spot check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Fast,
    Full,
}

pub struct CheckOutcome {
    pub name: &'static str,
    pub elapsed: Duration,
    pub result: Result<()>,
}

fn fail(msg: &str) -> AdoError {
    AdoError::Parse(format!("selfcheck: {msg}"))
}

fn colors(_level: Level) -> Vec<Color> {
    vec![Color(2), Color(3)]
}

fn check_braid_relation(level: Level) -> Result<()> {
    let mut cs = colors(level);
    if level == Level::Full {
        cs.push(Color(4));
    }
    for c in cs {
        let id = Matrix::identity(c, c.n() as usize);
        let r = r_matrix(c);
        let r12 = r.kron(&id);
        let r23 = id.kron(&r);
        if r12.mul(&r23).mul(&r12) != r23.mul(&r12).mul(&r23) {
            return Err(fail(&format!("braid relation fails at N={}", c.n())));
        }
    }
    Ok(())
}

fn check_equivariance(level: Level) -> Result<()> {
    for c in colors(level) {
        let word = BraidWord::new(3, vec![1, 2]).unwrap();
        let b = braid_matrix(c, &word);
        for (build, label) in [(e_matrix as fn(_, _, _) -> _, "E"), (f_matrix, "F")] {
            let good = build(c, 3, Convention::A);
            if b.mul(&good) != good.mul(&b) {
                return Err(fail(&format!("{label} does not commute at N={}", c.n())));
            }
            let bad = build(c, 3, Convention::B);
            if b.mul(&bad) == bad.mul(&b) {
                return Err(fail(&format!(
                    "opposite coproduct for {label} unexpectedly commutes at N={}",
                    c.n()
                )));
            }
        }
    }
    Ok(())
}

fn check_pipelines_agree(level: Level) -> Result<()> {
    for c in colors(level) {
        for row in BUILTIN_TABLE {
            compute_report(c, row.name, row.word, None, PipelineChoice::Both, 4096)?;
        }
    }
    if level == Level::Full {
        // one N = 4 spot check, and a four-strand presentation
        compute_report(
            Color(4),
            "trefoil_b2",
            "1 1 1",
            None,
            PipelineChoice::Both,
            4096,
        )?;
        compute_report(
            Color(3),
            "trefoil_b4",
            "1 1 1 2 3",
            None,
            PipelineChoice::Both,
            4096,
        )?;
    }
    Ok(())
}

fn check_alexander_oracle(_level: Level) -> Result<()> {
    let c = Color(2);
    for row in BUILTIN_TABLE {
        let w = BraidWord::parse(row.word)?;
        if direct_invariant(c, &w)? != alexander_via_burau(&w)? {
            return Err(fail(&format!(
                "{} disagrees with the Alexander oracle",
                row.name
            )));
        }
    }
    Ok(())
}

fn check_mirror_symmetry(level: Level) -> Result<()> {
    for c in colors(level) {
        for text in ["1 1 1", "1 1 1 1 1"] {
            let w = BraidWord::parse(text)?;
            let v = direct_invariant(c, &w)?;
            if direct_invariant(c, &w.mirror())? != v.galois_mirror() {
                return Err(fail(&format!("mirror symmetry fails at N={}", c.n())));
            }
        }
    }
    Ok(())
}

fn check_markov_moves(level: Level) -> Result<()> {
    for c in colors(level) {
        let base = BraidWord::parse("1 1 1")?;
        let v = direct_invariant(c, &base)?;
        let variants = [
            base.conjugate(1)?,
            base.stabilize(true),
            base.stabilize(false),
            base.stabilize(true).conjugate(2)?,
        ];
        for w in variants {
            if direct_invariant(c, &w)? != v {
                return Err(fail(&format!(
                    "Markov move changes the value at N={}",
                    c.n()
                )));
            }
        }
    }
    Ok(())
}

fn check_two_strand_lemma(level: Level) -> Result<()> {
    for c in colors(level) {
        for text in ["1", "-1", "1 1 1"] {
            lemma_two_strand_check(c, &BraidWord::parse(text)?)?;
        }
    }
    Ok(())
}

fn check_coefficient_sum_form(level: Level) -> Result<()> {
    for c in colors(level) {
        for k in 1..=2i64 {
            if coefficient_c0_sum_form(c, k) != coefficient_c(c, k as usize + 1, 0) {
                return Err(fail(&format!(
                    "coefficient sum form fails at N={} k={k}",
                    c.n()
                )));
            }
        }
    }
    Ok(())
}

type Check = (&'static str, fn(Level) -> Result<()>);

const CHECKS: &[Check] = &[
    ("braid-relation", check_braid_relation),
    ("coproduct-equivariance", check_equivariance),
    ("pipeline-agreement", check_pipelines_agree),
    ("alexander-oracle", check_alexander_oracle),
    ("mirror-symmetry", check_mirror_symmetry),
    ("markov-invariance", check_markov_moves),
    ("two-strand-lemma", check_two_strand_lemma),
    ("coefficient-sum-form", check_coefficient_sum_form),
];

fn run_one(name: &'static str, f: fn(Level) -> Result<()>, level: Level) -> CheckOutcome {
    let start = Instant::now();
    let result = f(level);
    CheckOutcome {
        name,
        elapsed: start.elapsed(),
        result,
    }
}

pub fn run(level: Level) -> Vec<CheckOutcome> {
    #[cfg(feature = "parallel")]
    {
        CHECKS
            .par_iter()
            .map(|&(name, f)| run_one(name, f, level))
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        CHECKS
            .iter()
            .map(|&(name, f)| run_one(name, f, level))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_suite_passes() {
        let outcomes = run(Level::Fast);
        assert_eq!(outcomes.len(), CHECKS.len());
        for o in outcomes {
            assert!(o.result.is_ok(), "{} failed: {:?}", o.name, o.result.err());
        }
    }
}
