//! Batch evaluation over sets of braid presentations, with an optional
//! data-parallel driver.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::braid::BraidWord;
use crate::error::{AdoError, Result};
use crate::invariant::{invariant, Pipeline};
use crate::qrep::state_count;
use crate::report::Report;
use crate::ring::Color;

/// How to evaluate each row; `Both` cross-checks the pipelines and fails on
/// any disagreement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PipelineChoice {
    Direct,
    Lawrence,
    Both,
}

#[derive(Debug, Clone, Copy)]
pub struct TableRow {
    pub name: &'static str,
    pub word: &'static str,
}

/// Small catalogue of knots with low-strand braid presentations.
pub const BUILTIN_TABLE: &[TableRow] = &[
    TableRow {
        name: "unknot_b2",
        word: "1",
    },
    TableRow {
        name: "unknot_b2_neg",
        word: "-1",
    },
    TableRow {
        name: "unknot_b3",
        word: "1 2",
    },
    TableRow {
        name: "trefoil_b2",
        word: "1 1 1",
    },
    TableRow {
        name: "trefoil_b3",
        word: "1 2 1 2",
    },
    TableRow {
        name: "figure8",
        word: "1 -2 1 -2",
    },
    TableRow {
        name: "5_1",
        word: "1 1 1 1 1",
    },
    TableRow {
        name: "5_2",
        word: "1 1 2 2 1 -2",
    },
];

pub fn check_size_cap(color: Color, n: usize, cap: u64) -> Result<()> {
    let states = (color.n() as u64).saturating_pow(n as u32);
    if states > cap {
        return Err(AdoError::SizeCap { states, cap });
    }
    debug_assert_eq!(states as usize, state_count(color, n));
    Ok(())
}

/// Evaluate one braid presentation, cross-checking pipelines when asked.
/// The strand count is inferred from the word unless given explicitly.
pub fn compute_report(
    color: Color,
    name: &str,
    word_text: &str,
    strands: Option<usize>,
    choice: PipelineChoice,
    cap: u64,
) -> Result<Report> {
    let word = match strands {
        Some(n) => BraidWord::parse_with_strands(word_text, n)?,
        None => BraidWord::parse(word_text)?,
    };
    check_size_cap(color, word.strands(), cap)?;
    let (value, pipeline) = match choice {
        PipelineChoice::Direct => (invariant(color, &word, Pipeline::Direct)?, "direct"),
        PipelineChoice::Lawrence => (invariant(color, &word, Pipeline::Lawrence)?, "lawrence"),
        PipelineChoice::Both => {
            let d = invariant(color, &word, Pipeline::Direct)?;
            let l = invariant(color, &word, Pipeline::Lawrence)?;
            if d != l {
                return Err(AdoError::PipelineMismatch {
                    name: name.to_string(),
                });
            }
            (d, "both")
        }
    };
    Ok(Report {
        name: name.to_string(),
        n: word.strands(),
        color,
        e: word.exponent_sum(),
        pipeline: pipeline.to_string(),
        value,
    })
}

/// A table row with its own strand count and color, as read from a file.
#[derive(Debug, Clone, PartialEq)]
pub struct Job {
    pub name: String,
    pub strands: Option<usize>,
    pub color: Color,
    pub word: String,
}

/// Jobs for the built-in table at one color.
pub fn builtin_jobs(color: Color) -> Vec<Job> {
    BUILTIN_TABLE
        .iter()
        .map(|r| Job {
            name: r.name.to_string(),
            strands: None,
            color,
            word: r.word.to_string(),
        })
        .collect()
}

/// Parse a line-oriented table: `name; n; N; braid-word` per line, blank
/// lines skipped.
pub fn parse_table(text: &str) -> Result<Vec<Job>> {
    let mut jobs = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let err = |what: &str| AdoError::Parse(format!("table line {}: {what}", lineno + 1));
        let fields: Vec<&str> = line.split(';').map(str::trim).collect();
        if fields.len() != 4 {
            return Err(err("expected `name; n; N; braid-word`"));
        }
        let strands: usize = fields[1].parse().map_err(|_| err("bad strand count"))?;
        let n: u32 = fields[2].parse().map_err(|_| err("bad color"))?;
        if n < 2 {
            return Err(err("color must be at least 2"));
        }
        jobs.push(Job {
            name: fields[0].to_string(),
            strands: Some(strands),
            color: Color(n),
            word: fields[3].to_string(),
        });
    }
    Ok(jobs)
}

fn run_job(job: &Job, choice: PipelineChoice, cap: u64) -> Result<Report> {
    compute_report(job.color, &job.name, &job.word, job.strands, choice, cap)
}

/// Sequential driver: one result per job, errors collected per job,
/// output order = input order.
pub fn run_jobs_seq(jobs: &[Job], choice: PipelineChoice, cap: u64) -> Vec<Result<Report>> {
    jobs.iter().map(|j| run_job(j, choice, cap)).collect()
}

/// Data-parallel driver over the jobs.
#[cfg(feature = "parallel")]
pub fn run_jobs_par(jobs: &[Job], choice: PipelineChoice, cap: u64) -> Vec<Result<Report>> {
    jobs.par_iter().map(|j| run_job(j, choice, cap)).collect()
}

/// Default driver: parallel when the feature is enabled.
pub fn run_jobs(jobs: &[Job], choice: PipelineChoice, cap: u64) -> Vec<Result<Report>> {
    #[cfg(feature = "parallel")]
    {
        run_jobs_par(jobs, choice, cap)
    }
    #[cfg(not(feature = "parallel"))]
    {
        run_jobs_seq(jobs, choice, cap)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_rows_all_knots() {
        for row in BUILTIN_TABLE {
            let w = BraidWord::parse(row.word).unwrap();
            assert!(w.closure_is_knot(), "{}", row.name);
        }
    }

    #[test]
    fn both_choice_cross_checks() {
        let r = compute_report(
            Color(2),
            "trefoil_b2",
            "1 1 1",
            None,
            PipelineChoice::Both,
            4096,
        )
        .unwrap();
        assert_eq!(r.pipeline, "both");
        let d = compute_report(
            Color(2),
            "trefoil_b2",
            "1 1 1",
            None,
            PipelineChoice::Direct,
            4096,
        )
        .unwrap();
        assert_eq!(r.value, d.value);
    }

    #[test]
    fn size_cap_enforced() {
        let err = compute_report(
            Color(3),
            "big",
            "1 2 3 4 5 6 7",
            None,
            PipelineChoice::Direct,
            64,
        );
        assert!(matches!(err, Err(AdoError::SizeCap { .. })));
        assert!(check_size_cap(Color(2), 12, 4096).is_ok());
        assert!(check_size_cap(Color(2), 13, 4096).is_err());
    }

    #[test]
    fn drivers_agree() {
        let jobs = builtin_jobs(Color(2));
        let seq = run_jobs_seq(&jobs, PipelineChoice::Both, 4096);
        let par = run_jobs(&jobs, PipelineChoice::Both, 4096);
        assert_eq!(seq.len(), par.len());
        for (a, b) in seq.iter().zip(&par) {
            assert_eq!(a.as_ref().unwrap(), b.as_ref().unwrap());
        }
    }

    #[test]
    fn table_file_parsing() {
        let text = "tref; 2; 3; 1 1 1\n\n  hopf; 2; 2; 1 1  \n";
        let jobs = parse_table(text).unwrap();
        assert_eq!(jobs.len(), 2);
        assert_eq!(jobs[0].name, "tref");
        assert_eq!(jobs[0].strands, Some(2));
        assert_eq!(jobs[0].color, Color(3));
        assert_eq!(jobs[1].word, "1 1");
        assert!(parse_table("").unwrap().is_empty());
        assert!(parse_table("bad line").is_err());
        assert!(parse_table("x; 2; 1; 1").is_err());
    }

    #[test]
    fn per_row_errors_do_not_stop_the_batch() {
        let jobs = parse_table("tref; 2; 2; 1 1 1\nhopf; 2; 2; 1 1\nunknot; 2; 2; 1").unwrap();
        let out = run_jobs_seq(&jobs, PipelineChoice::Both, 4096);
        assert!(out[0].is_ok());
        assert!(matches!(out[1], Err(AdoError::NotAKnot { .. })));
        assert!(out[2].is_ok());
    }

    #[test]
    fn unknots_in_table_are_trivial() {
        use crate::ring::WeightRat;
        for row in BUILTIN_TABLE
            .iter()
            .filter(|r| r.name.starts_with("unknot"))
        {
            let rep = compute_report(
                Color(3),
                row.name,
                row.word,
                None,
                PipelineChoice::Both,
                4096,
            )
            .unwrap();
            assert!(rep.value == WeightRat::one(Color(3)), "{}", row.name);
        }
    }
}
