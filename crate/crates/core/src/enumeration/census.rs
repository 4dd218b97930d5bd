use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::semigroup::{canonical_form_up_to_anti, CayleyTable};
use crate::solution::{solution_canonical_form, solution_key, solution_key_up_to_flip, PeSolution};

use super::{enumerate_semigroups, parallel_partition, EnumerationError, SearchFilter};

/// Solutions found on one isomorphism class of semigroups.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupRow {
    pub semigroup: CayleyTable,
    pub automorphisms: usize,
    /// Labeled tables isomorphic to this one: `n! / |Aut|`.
    pub labelings: usize,
    pub solutions_on_representative: usize,
    pub iso_classes: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub order: usize,
    pub filter: Vec<String>,
    pub semigroups_labeled: usize,
    pub semigroups_iso: usize,
    pub semigroups_iso_or_anti: usize,
    /// Pairs `(table, θ)` over all labeled tables of this order.
    pub labeled_solutions: usize,
    pub iso_classes: usize,
    /// Classes when `s` is also identified with `τ s τ`.
    pub iso_classes_up_to_flip: usize,
    pub per_semigroup: Vec<SemigroupRow>,
    /// Canonical representative of every class, sorted by key bytes.
    #[serde(skip)]
    pub catalog: Vec<PeSolution>,
}

/// Walks one representative per semigroup isomorphism class (solutions on
/// non-isomorphic semigroups are never isomorphic), scales labeled counts
/// by the number of labelings, and dedupes solutions by canonical form.
pub fn census(n: usize, filter: &SearchFilter, workers: usize) -> Result<CensusReport, EnumerationError> {
    match n {
        0 => return Err(EnumerationError::EmptyCarrier),
        1..=3 => {}
        4 if filter.is_restrictive() => {}
        4 => return Err(EnumerationError::FilterTooWeak(4)),
        _ => return Err(EnumerationError::OrderTooLarge { order: n, max: 4 }),
    }
    let factorial: usize = (1..=n).product();
    let reps = enumerate_semigroups(n, true)?;
    let mut rows = Vec::with_capacity(reps.len());
    let mut classes: BTreeMap<Vec<u8>, PeSolution> = BTreeMap::new();
    let mut flip_classes = std::collections::BTreeSet::new();
    let mut labeled_solutions = 0;
    let mut anti = std::collections::BTreeSet::new();
    for t in &reps {
        anti.insert(canonical_form_up_to_anti(t).expect("small order"));
        let automorphisms = t.automorphisms().len();
        let labelings = factorial / automorphisms;
        let mut f = *filter;
        f.up_to_iso = false;
        let thetas = parallel_partition(t, &f, workers)?;
        let on_rep = thetas.len();
        labeled_solutions += on_rep * labelings;
        let before = classes.len();
        for th in thetas {
            let s = PeSolution::new_unchecked(t.clone(), th);
            flip_classes.insert(solution_key_up_to_flip(&s).expect("small order"));
            let key = solution_key(&s).expect("small order");
            classes
                .entry(key)
                .or_insert_with(|| solution_canonical_form(&s).expect("small order").0);
        }
        rows.push(SemigroupRow {
            semigroup: t.clone(),
            automorphisms,
            labelings,
            solutions_on_representative: on_rep,
            iso_classes: classes.len() - before,
        });
    }
    Ok(CensusReport {
        order: n,
        filter: filter.names().into_iter().map(String::from).collect(),
        semigroups_labeled: rows.iter().map(|r| r.labelings).sum(),
        semigroups_iso: reps.len(),
        semigroups_iso_or_anti: anti.len(),
        labeled_solutions,
        iso_classes: classes.len(),
        iso_classes_up_to_flip: flip_classes.len(),
        per_semigroup: rows,
        catalog: classes.into_values().collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub file: String,
    pub sha256: String,
}

#[derive(Serialize)]
struct Manifest<'a> {
    #[serde(flatten)]
    report: &'a CensusReport,
    files: &'a [CatalogEntry],
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Writes one JSON file per class plus `census.json` with the counts and
/// a SHA-256 checksum of every file.
pub fn write_catalog(report: &CensusReport, dir: &Path) -> io::Result<Vec<CatalogEntry>> {
    fs::create_dir_all(dir)?;
    let mut entries = Vec::with_capacity(report.catalog.len());
    for (i, s) in report.catalog.iter().enumerate() {
        let file = format!("solution_{i:04}.json");
        let mut text = serde_json::to_string(s).map_err(io::Error::other)?;
        text.push('\n');
        fs::write(dir.join(&file), &text)?;
        entries.push(CatalogEntry {
            file,
            sha256: hex(&Sha256::digest(text.as_bytes())),
        });
    }
    let mut manifest = serde_json::to_string_pretty(&Manifest {
        report,
        files: &entries,
    })
    .map_err(io::Error::other)?;
    manifest.push('\n');
    fs::write(dir.join("census.json"), manifest)?;
    Ok(entries)
}
