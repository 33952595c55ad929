//! Line-delimited JSON group specifications and the bundled catalog.

use std::collections::HashSet;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::heads::{HeadAnalysis, HeadReport, Verdict};
use crate::permgroup::{Group, Permutation};

const CATALOG: &str = include_str!("../data/catalog.jsonl");

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct Expected {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub carter_order: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub head_count: Option<usize>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GroupSpec {
    pub name: String,
    pub degree: usize,
    /// 0-based image arrays.
    pub generators: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
}

impl GroupSpec {
    fn permutations(&self) -> Result<Vec<Permutation>> {
        self.generators
            .iter()
            .map(|images| {
                if images.len() != self.degree {
                    return Err(Error::InvalidPermutation(format!(
                        "generator has {} images but the degree is {}",
                        images.len(),
                        self.degree
                    )));
                }
                Permutation::from_images(images.clone())
            })
            .collect()
    }

    pub fn build(&self) -> Result<Group> {
        Group::from_generators(self.degree, self.permutations()?)
    }
}

/// Parses line-delimited specs; blank lines are skipped. Errors carry the
/// 1-based line number.
pub fn parse_corpus_str(text: &str) -> Result<Vec<GroupSpec>> {
    let mut names = HashSet::new();
    let mut specs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        let err = |message: String| Error::Corpus { line: line_no, message };
        let spec: GroupSpec = serde_json::from_str(line).map_err(|e| err(e.to_string()))?;
        spec.permutations().map_err(|e| err(e.to_string()))?;
        if !names.insert(spec.name.clone()) {
            return Err(err(format!("duplicate name {:?}", spec.name)));
        }
        specs.push(spec);
    }
    Ok(specs)
}

pub fn parse_corpus(path: impl AsRef<Path>) -> Result<Vec<GroupSpec>> {
    parse_corpus_str(&std::fs::read_to_string(path)?)
}

pub fn builtin_catalog() -> Vec<GroupSpec> {
    parse_corpus_str(CATALOG).expect("bundled catalog is valid")
}

pub fn builtin(name: &str) -> Result<GroupSpec> {
    builtin_catalog()
        .into_iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::UnknownGroup(name.to_string()))
}

/// Outcome of surveying one group.
#[derive(Clone, Debug)]
pub enum SurveyEntry {
    Report(HeadReport),
    Refused { group: String, order: usize },
    Failed { group: String, message: String },
}

impl SurveyEntry {
    pub fn to_json_line(&self) -> String {
        match self {
            SurveyEntry::Report(r) => serde_json::to_string(r).expect("reports serialize"),
            SurveyEntry::Refused { group, order } => {
                json!({"group": group, "order": order, "refused": "not solvable"}).to_string()
            }
            SurveyEntry::Failed { group, message } => {
                json!({"group": group, "error": message}).to_string()
            }
        }
    }
}

/// Whether the computed values agree with a spec's `expected` block; `None`
/// when there is nothing to compare.
pub fn expected_matches(spec: &GroupSpec, entry: &SurveyEntry) -> Option<bool> {
    let e = spec.expected.as_ref()?;
    let (order, carter, heads) = match entry {
        SurveyEntry::Report(r) => (r.order, Some(r.carter_order), Some(r.head_degrees.len())),
        SurveyEntry::Refused { order, .. } => (*order, None, None),
        SurveyEntry::Failed { .. } => return Some(false),
    };
    Some(
        e.order.is_none_or(|o| o == order)
            && (e.carter_order.is_none() || e.carter_order == carter)
            && (e.head_count.is_none() || e.head_count == heads),
    )
}

pub fn survey_one(spec: &GroupSpec) -> SurveyEntry {
    let failed = |e: Error| SurveyEntry::Failed {
        group: spec.name.clone(),
        message: e.to_string(),
    };
    let g = match spec.build() {
        Ok(g) => g,
        Err(e) => return failed(e),
    };
    match HeadAnalysis::new(&g).and_then(|a| a.report(&spec.name)) {
        Ok(r) => SurveyEntry::Report(r),
        Err(Error::NotSolvable) => SurveyEntry::Refused {
            group: spec.name.clone(),
            order: g.order(),
        },
        Err(e) => failed(e),
    }
}

/// Surveys every spec on `jobs` worker threads; entries come back in corpus
/// order.
pub fn survey(specs: &[GroupSpec], jobs: usize) -> Result<Vec<SurveyEntry>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
    Ok(pool.install(|| specs.par_iter().map(survey_one).collect()))
}

/// One JSON line per entry followed by a summary line, each newline-terminated.
pub fn render_survey(specs: &[GroupSpec], entries: &[SurveyEntry]) -> String {
    let mut out = String::new();
    let (mut reports, mut refused, mut errors, mut mismatches) = (0, 0, 0, 0);
    let (mut pass, mut fail, mut skip) = (0, 0, 0);
    for (spec, entry) in specs.iter().zip(entries) {
        out.push_str(&entry.to_json_line());
        out.push('\n');
        match entry {
            SurveyEntry::Report(r) => {
                reports += 1;
                for v in r.verdicts.values() {
                    match v {
                        Verdict::Pass => pass += 1,
                        Verdict::Fail => fail += 1,
                        Verdict::Skip => skip += 1,
                    }
                }
            }
            SurveyEntry::Refused { .. } => refused += 1,
            SurveyEntry::Failed { .. } => errors += 1,
        }
        if expected_matches(spec, entry) == Some(false) {
            mismatches += 1;
        }
    }
    let summary = json!({"summary": {
        "groups": entries.len(),
        "reports": reports,
        "refused": refused,
        "errors": errors,
        "expected_mismatches": mismatches,
        "verdicts": {"pass": pass, "fail": fail, "skip": skip},
    }});
    out.push_str(&summary.to_string());
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        let specs = parse_corpus_str(
            "{\"name\":\"S3\",\"degree\":3,\"generators\":[[1,2,0],[1,0,2]]}\n\n\
             {\"name\":\"F21\",\"degree\":7,\"generators\":[[1,2,3,4,5,6,0],[0,2,4,6,1,3,5]]}\n",
        )
        .unwrap();
        assert_eq!(specs.len(), 2);
        assert_eq!(specs[0].build().unwrap().order(), 6);
        assert_eq!(specs[1].build().unwrap().order(), 21);
        assert!(parse_corpus_str("").unwrap().is_empty());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let dup = "{\"name\":\"A\",\"degree\":1,\"generators\":[]}\n{\"name\":\"A\",\"degree\":1,\"generators\":[]}";
        assert!(matches!(parse_corpus_str(dup), Err(Error::Corpus { line: 2, .. })));
        let bad = "{\"name\":\"A\",\"degree\":2,\"generators\":[[0,0]]}";
        assert!(matches!(parse_corpus_str(bad), Err(Error::Corpus { line: 1, .. })));
        assert!(matches!(parse_corpus_str("\n{oops"), Err(Error::Corpus { line: 2, .. })));
    }

    #[test]
    fn catalog_lookup() {
        assert_eq!(builtin("GL2_3").unwrap().build().unwrap().order(), 48);
        assert_eq!(builtin("S4").unwrap().build().unwrap().order(), 24);
        assert!(matches!(builtin("nope"), Err(Error::UnknownGroup(_))));
    }
}
