use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ingest::AttributeTable;
use crate::model::{AttrValue, RegionFeature};

/// Diagnostics from a region/attribute join. Neither kind of miss is fatal.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct JoinReport {
    pub matched: usize,
    /// Feature ids with no table row.
    pub unmatched_features: Vec<String>,
    /// Table keys with no feature.
    pub unmatched_rows: Vec<String>,
}

impl JoinReport {
    pub fn is_complete(&self) -> bool {
        self.unmatched_features.is_empty() && self.unmatched_rows.is_empty()
    }
}

impl std::fmt::Display for JoinReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} matched, {} unmatched features {:?}, {} unmatched rows {:?}",
            self.matched,
            self.unmatched_features.len(),
            self.unmatched_features,
            self.unmatched_rows.len(),
            self.unmatched_rows
        )
    }
}

/// Merges table rows into features where `feature_id_prop` equals
/// `table_id_col` (exact trimmed strings). Table columns overwrite feature
/// properties of the same name.
pub fn join_attributes(
    mut features: Vec<RegionFeature>,
    table: &AttributeTable,
    feature_id_prop: &str,
    table_id_col: &str,
) -> Result<(Vec<RegionFeature>, JoinReport)> {
    let mut report = JoinReport::default();

    // A table without any columns is an empty table, not a bad key.
    if table.header.is_empty() && table.rows.is_empty() {
        report.unmatched_features = features.iter().map(|f| f.id.clone()).collect();
        return Ok((features, report));
    }
    let key_col = table.column(table_id_col)?;
    if !features.is_empty() && features.iter().all(|f| f.attributes.get(feature_id_prop).is_none()) {
        return Err(Error::MissingColumn {
            column: feature_id_prop.to_string(),
            available: features[0].attributes.keys().map(str::to_string).collect(),
        });
    }

    let mut by_key: HashMap<&str, usize> = HashMap::with_capacity(table.rows.len());
    for (i, row) in table.rows.iter().enumerate() {
        if by_key.insert(row[key_col].as_str(), i).is_some() {
            return Err(Error::AmbiguousKey { column: table_id_col.to_string(), key: row[key_col].clone() });
        }
    }

    let mut used = vec![false; table.rows.len()];
    for feature in &mut features {
        let key = feature.attributes.get(feature_id_prop).map(AttrValue::as_key);
        match key.as_deref().and_then(|k| by_key.get(k)) {
            Some(&row) => {
                used[row] = true;
                report.matched += 1;
                for (name, cell) in table.header.iter().zip(&table.rows[row]) {
                    feature.attributes.insert(name.clone(), AttrValue::from_text(cell));
                }
            }
            None => report.unmatched_features.push(feature.id.clone()),
        }
    }
    report.unmatched_rows =
        table.rows.iter().zip(&used).filter(|(_, &u)| !u).map(|(row, _)| row[key_col].clone()).collect();

    Ok((features, report))
}
