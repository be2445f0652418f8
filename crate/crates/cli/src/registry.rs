use randic_core::bounds::{registry, BoundInfo, MeanValues};
use serde::{Deserialize, Serialize};

/// Flat form of [`BoundInfo`] for CSV; anchors are `values:order:side:bound`
/// joined by `|`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegistryRow {
    pub id: String,
    pub statement: String,
    pub target: String,
    pub direction: String,
    pub alpha_domain: String,
    pub graph_predicate: String,
    pub equality_predicate: Option<String>,
    pub mean_anchors: String,
    pub source: String,
}

pub fn registry_dump() -> Vec<BoundInfo> {
    registry().iter().map(|b| b.info()).collect()
}

fn tag<T: Serialize>(v: &T) -> String {
    serde_json::to_value(v)
        .ok()
        .and_then(|j| j.as_str().map(str::to_string))
        .unwrap_or_default()
}

pub fn registry_rows() -> Vec<RegistryRow> {
    registry_dump()
        .into_iter()
        .map(|b| RegistryRow {
            mean_anchors: b
                .mean_anchors
                .iter()
                .map(|a| {
                    let values = match a.values {
                        MeanValues::EdgeProducts => "edge_products",
                        MeanValues::Degrees => "degrees",
                    };
                    format!("{values}:{}:{}:{}", a.order, tag(&a.side), a.bound)
                })
                .collect::<Vec<_>>()
                .join("|"),
            target: tag(&b.target),
            direction: tag(&b.direction),
            id: b.id,
            statement: b.statement,
            alpha_domain: b.alpha_domain,
            graph_predicate: b.graph_predicate,
            equality_predicate: b.equality_predicate,
            source: b.source,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dump_covers_registry() {
        let dump = registry_dump();
        assert_eq!(dump.len(), registry().len());
        let t1a = dump.iter().find(|b| b.id == "T1a").unwrap();
        assert_eq!(t1a.alpha_domain, "α<0");
        let anchors: Vec<(f64, &str)> = dump
            .iter()
            .filter(|b| b.target == randic_core::bounds::Target::RandicAlpha)
            .flat_map(|b| b.mean_anchors.iter().map(|a| (a.order, a.bound.as_str())))
            .collect();
        for want in [(0.5, "λ²"), (0.0, "d²"), (1.0, "2m − n + 1")] {
            assert!(anchors.contains(&want), "{want:?}");
        }
    }

    #[test]
    fn csv_rows_flatten_anchors() {
        let rows = registry_rows();
        let t1a = rows.iter().find(|r| r.id == "T1a").unwrap();
        assert_eq!(t1a.mean_anchors, "edge_products:0.5:upper:λ²");
        assert_eq!((t1a.target.as_str(), t1a.direction.as_str()), ("randic_alpha", "lower"));
    }
}
