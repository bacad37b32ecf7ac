//! JSON description of a matroid.
//!
//! ```json
//! {"construction": {"transversal": {"ground": ["1","2","3"], "sets": [["1","2"], ["2","3"]]}}}
//! ```
//!
//! Every subset is an array of element labels. Validation errors name the JSON
//! path of the offending value.

use serde::{Deserialize, Serialize};

use crate::constructions::{
    family_mn, from_circuits, from_flat_list, from_rank_table, gammoid, graphic, strict_gammoid,
    transversal, uniform, DigraphPresentation, Graph, SetSystem,
};
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::{GroundSet, Subset, DEFAULT_CAP};
use crate::verify::corpus;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatroidDocument {
    pub construction: Construction,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RankEntry {
    pub set: Vec<String>,
    pub rank: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum Construction {
    Uniform {
        k: usize,
        n: usize,
    },
    /// One entry per subset of `ground`, in any order.
    RankTable {
        ground: Vec<String>,
        entries: Vec<RankEntry>,
    },
    Circuits {
        ground: Vec<String>,
        circuits: Vec<Vec<String>>,
    },
    FlatList {
        ground: Vec<String>,
        flats: Vec<Vec<String>>,
    },
    /// Edges are pairs of vertex labels. Edge labels default to the two vertex
    /// labels joined (with `-` unless both are single characters).
    Graphic {
        vertices: Vec<String>,
        edges: Vec<[String; 2]>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    Transversal {
        ground: Vec<String>,
        sets: Vec<Vec<String>>,
    },
    /// Directed edges `[from, to]`; `ground` and `terminals` are vertex sets.
    Gammoid {
        vertices: Vec<String>,
        edges: Vec<[String; 2]>,
        #[serde(alias = "n1")]
        ground: Vec<String>,
        #[serde(alias = "n2")]
        terminals: Vec<String>,
    },
    StrictGammoid {
        vertices: Vec<String>,
        edges: Vec<[String; 2]>,
        #[serde(alias = "n2")]
        terminals: Vec<String>,
    },
    FamilyMn {
        n: usize,
    },
    Corpus {
        name: String,
    },
}

impl MatroidDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        let de = &mut serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            Error::Validation(format!("at {path}: {}", e.into_inner()))
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// Builds the matroid, checking labels and the construction's own
    /// requirements. Ground sets are limited to `cap` elements.
    pub fn build(&self, cap: usize) -> Result<Matroid> {
        self.construction.build(cap)
    }

    /// The rank table of `m` as a document.
    pub fn rank_table(m: &Matroid) -> Result<Self> {
        let ranks = m.rank_table()?;
        let g = m.ground();
        let entries = g
            .full()
            .subsets()
            .zip(ranks)
            .map(|(s, rank)| RankEntry {
                set: g.labels_of(s),
                rank: rank as i64,
            })
            .collect();
        Ok(MatroidDocument {
            construction: Construction::RankTable {
                ground: g.labels().to_vec(),
                entries,
            },
        })
    }
}

fn ground_set(labels: &[String], cap: usize, path: &str) -> Result<GroundSet> {
    if labels.len() > cap {
        return Err(Error::GuardExceeded(format!(
            "{path} has {} elements, above cap {cap}",
            labels.len()
        )));
    }
    GroundSet::with_cap(labels.iter().cloned(), cap)
        .map_err(|e| Error::Validation(format!("at {path}: {}", inner(e))))
}

fn inner(e: Error) -> String {
    match e {
        Error::Validation(s) | Error::InvalidArgument(s) | Error::GuardExceeded(s) => s,
        other => other.to_string(),
    }
}

fn resolve(g: &GroundSet, labels: &[String], path: &str) -> Result<Subset> {
    let mut s = Subset::EMPTY;
    for (i, l) in labels.iter().enumerate() {
        let e = g
            .index_of(l)
            .ok_or_else(|| Error::Validation(format!("at {path}[{i}]: unknown label {l:?}")))?;
        s = s.with(e);
    }
    Ok(s)
}

fn resolve_all(g: &GroundSet, lists: &[Vec<String>], path: &str) -> Result<Vec<Subset>> {
    lists
        .iter()
        .enumerate()
        .map(|(i, l)| resolve(g, l, &format!("{path}[{i}]")))
        .collect()
}

fn vertex(g: &GroundSet, label: &str, path: &str) -> Result<usize> {
    g.index_of(label)
        .ok_or_else(|| Error::Validation(format!("at {path}: unknown vertex {label:?}")))
}

fn arcs(g: &GroundSet, edges: &[[String; 2]], path: &str) -> Result<Vec<(usize, usize)>> {
    edges
        .iter()
        .enumerate()
        .map(|(i, [a, b])| {
            Ok((
                vertex(g, a, &format!("{path}[{i}][0]"))?,
                vertex(g, b, &format!("{path}[{i}][1]"))?,
            ))
        })
        .collect()
}

/// Guard errors pass through; anything else from a construction is a validation error at `path`.
fn at(path: &str) -> impl Fn(Error) -> Error + '_ {
    move |e| match e {
        Error::GuardExceeded(_) | Error::Unsupported(_) | Error::AxiomViolation { .. } => e,
        other => Error::Validation(format!("at {path}: {}", inner(other))),
    }
}

impl Construction {
    pub fn build(&self, cap: usize) -> Result<Matroid> {
        let cap = cap.min(crate::subset::MAX_GROUND);
        match self {
            Construction::Uniform { k, n } => {
                if *n > cap {
                    return Err(Error::GuardExceeded(format!(
                        "uniform matroid on {n} elements exceeds cap {cap}"
                    )));
                }
                uniform(*k, *n).map_err(at("construction.uniform"))
            }
            Construction::RankTable { ground, entries } => {
                let p = "construction.rank_table";
                let g = ground_set(ground, cap, &format!("{p}.ground"))?;
                let mut table: Vec<Option<i64>> = vec![None; 1usize << g.len()];
                for (i, e) in entries.iter().enumerate() {
                    let s = resolve(&g, &e.set, &format!("{p}.entries[{i}].set"))?;
                    let slot = &mut table[s.bits() as usize];
                    if slot.is_some() {
                        return Err(Error::Validation(format!(
                            "at {p}.entries[{i}]: duplicate entry for {}",
                            g.format(s)
                        )));
                    }
                    *slot = Some(e.rank);
                }
                let table: Vec<i64> = table
                    .iter()
                    .enumerate()
                    .map(|(bits, r)| {
                        r.ok_or_else(|| {
                            Error::Validation(format!(
                                "at {p}.entries: no entry for {}",
                                g.format(Subset::from_bits(bits as u64))
                            ))
                        })
                    })
                    .collect::<Result<_>>()?;
                from_rank_table(g, &table).map_err(at(p))
            }
            Construction::Circuits { ground, circuits } => {
                let p = "construction.circuits";
                let g = ground_set(ground, cap, &format!("{p}.ground"))?;
                let cs = resolve_all(&g, circuits, &format!("{p}.circuits"))?;
                from_circuits(g, &cs).map_err(at(p))
            }
            Construction::FlatList { ground, flats } => {
                let p = "construction.flat_list";
                let g = ground_set(ground, cap, &format!("{p}.ground"))?;
                let fs = resolve_all(&g, flats, &format!("{p}.flats"))?;
                from_flat_list(g, &fs).map_err(at(p))
            }
            Construction::Graphic {
                vertices,
                edges,
                labels,
            } => {
                let p = "construction.graphic";
                let vs = ground_set(vertices, crate::subset::MAX_GROUND, &format!("{p}.vertices"))?;
                let es = arcs(&vs, edges, &format!("{p}.edges"))?;
                let labels = match labels {
                    Some(l) => l.clone(),
                    None => edges
                        .iter()
                        .map(|[a, b]| {
                            if a.chars().count() == 1 && b.chars().count() == 1 {
                                format!("{a}{b}")
                            } else {
                                format!("{a}-{b}")
                            }
                        })
                        .collect(),
                };
                let g = ground_set(&labels, cap, &format!("{p}.labels"))?;
                Ok(graphic(&Graph::new(vs.len(), es, g).map_err(at(p))?))
            }
            Construction::Transversal { ground, sets } => {
                let p = "construction.transversal";
                let g = ground_set(ground, cap, &format!("{p}.ground"))?;
                let ss = resolve_all(&g, sets, &format!("{p}.sets"))?;
                Ok(transversal(&SetSystem::new(g, ss).map_err(at(p))?))
            }
            Construction::Gammoid {
                vertices,
                edges,
                ground,
                terminals,
            } => {
                let p = "construction.gammoid";
                let vs = ground_set(vertices, crate::subset::MAX_GROUND, &format!("{p}.vertices"))?;
                let es = arcs(&vs, edges, &format!("{p}.edges"))?;
                let n1 = resolve(&vs, ground, &format!("{p}.ground"))?;
                let n2 = resolve(&vs, terminals, &format!("{p}.terminals"))?;
                if n1.len() > cap {
                    return Err(Error::GuardExceeded(format!(
                        "gammoid ground set of {} elements exceeds cap {cap}",
                        n1.len()
                    )));
                }
                let d = DigraphPresentation::new(vertices.iter().cloned(), es, n1, n2).map_err(at(p))?;
                gammoid(&d)
            }
            Construction::StrictGammoid {
                vertices,
                edges,
                terminals,
            } => {
                let p = "construction.strict_gammoid";
                let vs = ground_set(vertices, cap, &format!("{p}.vertices"))?;
                let es = arcs(&vs, edges, &format!("{p}.edges"))?;
                let n2 = resolve(&vs, terminals, &format!("{p}.terminals"))?;
                let d = DigraphPresentation::strict(vertices.iter().cloned(), es, n2).map_err(at(p))?;
                strict_gammoid(&d)
            }
            Construction::FamilyMn { n } => {
                let size = n * n.saturating_sub(1) / 2;
                if size > cap {
                    return Err(Error::GuardExceeded(format!(
                        "family_mn({n}) has {size} elements, above cap {cap}"
                    )));
                }
                family_mn(*n)
            }
            Construction::Corpus { name } => corpus::by_name(name).ok_or_else(|| {
                Error::Validation(format!(
                    "at construction.corpus.name: unknown corpus entry {name:?} (known: {})",
                    corpus::names().join(", ")
                ))
            }),
        }
    }
}

/// Parses and builds with the default cap.
pub fn parse_matroid(text: &str) -> Result<Matroid> {
    MatroidDocument::from_json(text)?.build(DEFAULT_CAP)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(json: &str) -> Result<Matroid> {
        parse_matroid(json)
    }

    #[test]
    fn every_tag_builds() {
        let docs = [
            r#"{"construction":{"uniform":{"k":2,"n":4}}}"#,
            r#"{"construction":{"rank_table":{"ground":["x"],"entries":[{"set":[],"rank":0},{"set":["x"],"rank":1}]}}}"#,
            r#"{"construction":{"circuits":{"ground":["a","b","c"],"circuits":[["a","b"]]}}}"#,
            r#"{"construction":{"flat_list":{"ground":["a","b"],"flats":[[],["a"],["b"],["a","b"]]}}}"#,
            r#"{"construction":{"graphic":{"vertices":["1","2","3"],"edges":[["1","2"],["2","3"],["1","3"]]}}}"#,
            r#"{"construction":{"transversal":{"ground":["1","2","3"],"sets":[["1","2"],["2","3"]]}}}"#,
            r#"{"construction":{"gammoid":{"vertices":["s","t","u"],"edges":[["s","t"]],"ground":["s","u"],"terminals":["t"]}}}"#,
            r#"{"construction":{"strict_gammoid":{"vertices":["s","t"],"edges":[["s","t"]],"terminals":["t"]}}}"#,
            r#"{"construction":{"family_mn":{"n":5}}}"#,
            r#"{"construction":{"corpus":{"name":"matroidY"}}}"#,
        ];
        let ranks = [2, 1, 2, 2, 2, 2, 1, 1, 6, 4];
        for (d, r) in docs.iter().zip(ranks) {
            let m = build(d).unwrap_or_else(|e| panic!("{d}: {e}"));
            assert_eq!(m.full_rank(), r, "{d}");
        }
        let g = build(docs[4]).unwrap();
        assert_eq!(g.ground().labels(), &["12", "23", "13"]);
    }

    #[test]
    fn gammoid_aliases() {
        let m = build(r#"{"construction":{"gammoid":{"vertices":["s","t"],"edges":[],"n1":["s","t"],"n2":["t"]}}}"#).unwrap();
        assert_eq!(m.full_rank(), 1);
    }

    #[test]
    fn errors_carry_paths() {
        let e = build(r#"{"construction":{"transversal":{"ground":["1","2"],"sets":[["1"],["1","9"]]}}}"#).unwrap_err();
        assert!(e.to_string().contains("construction.transversal.sets[1][1]"), "{e}");

        let e = build(r#"{"construction":{"uniform":{"k":"two","n":4}}}"#).unwrap_err();
        assert!(e.to_string().contains("construction.uniform.k"), "{e}");

        let e = build(r#"{"construction":{"rank_table":{"ground":["x"],"entries":[{"set":[],"rank":0}]}}}"#).unwrap_err();
        assert!(e.to_string().contains("no entry for {x}"), "{e}");

        let e = build(r#"{"construction":{"corpus":{"name":"nope"}}}"#).unwrap_err();
        assert!(matches!(e, Error::Validation(_)));

        let e = build(r#"{"construction":{"uniform":{"k":1,"n":2}},"extra":1}"#).unwrap_err();
        assert!(matches!(e, Error::Validation(_)), "{e}");

        let e = build(r#"{"construction":{"graphic":{"vertices":["1"],"edges":[["1","7"]]}}}"#).unwrap_err();
        assert!(e.to_string().contains("construction.graphic.edges[0][1]"), "{e}");
    }

    #[test]
    fn guards_and_axioms() {
        let e = build(r#"{"construction":{"uniform":{"k":1,"n":40}}}"#).unwrap_err();
        assert!(matches!(e, Error::GuardExceeded(_)));
        let e = build(r#"{"construction":{"rank_table":{"ground":["x"],"entries":[{"set":[],"rank":0},{"set":["x"],"rank":2}]}}}"#).unwrap_err();
        assert!(matches!(e, Error::AxiomViolation { .. }), "{e}");
        let e = build(r#"{"construction":{"family_mn":{"n":4}}}"#).unwrap_err();
        assert!(matches!(e, Error::Unsupported(_)));
    }

    #[test]
    fn rank_table_round_trip() {
        let m = corpus::k4();
        let doc = MatroidDocument::rank_table(&m).unwrap();
        let back = MatroidDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        assert!(back.build(DEFAULT_CAP).unwrap().same_ranks(&m));
    }
}
