//! `ops build`: construct a graph and, where a theorem applies, a verified
//! barbell partition of it.

use anyhow::{bail, Context, Result};
use barbell_core::barbell::{brute_force_barbell, parse_partition_json, CertificateJson, PartitionJson};
use barbell_core::graph::named;
use barbell_core::ops::{self, OpsError, ProductKind};
use barbell_core::{encode_graph6, find_barbell_partition, BarbellPartition, Graph, SearchOptions, Verdict};
use clap::ValueEnum;
use serde::Serialize;

use crate::input::{read_graph, read_source, vertex};
use crate::EXIT_HYPOTHESIS;

pub const BUILD_SCHEMA: &str = "ops-build/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Dup,
    Jdup,
    Join,
    Vsum,
    Corona,
    Cartesian,
    Tensor,
    Strong,
    Prism,
    TensorComplete,
}

impl Kind {
    fn usage(self) -> &'static str {
        match self {
            Kind::Dup | Kind::Jdup => "<graph> <vertex>",
            Kind::Vsum => "<graph> <vertex> <graph> <vertex>",
            Kind::Prism => "<k> <m>",
            Kind::TensorComplete => "<n> <m>",
            _ => "<graph> <graph>",
        }
    }

    fn arity(self) -> usize {
        self.usage().split(' ').count()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BuildOutput {
    pub schema: &'static str,
    pub kind: String,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    /// How the partition was obtained.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub construction: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<PartitionJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypothesis_error: Option<String>,
    /// Direct search on the built graph, run when no construction applied.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub search: Option<CertificateJson>,
    pub notes: Vec<String>,
}

pub struct BuildResult {
    pub output: BuildOutput,
    pub exit_code: i32,
}

type Construction = Result<(BarbellPartition, String), OpsError>;

fn hypothesis(msg: impl Into<String>) -> OpsError {
    OpsError::Hypothesis(msg.into())
}

fn number(arg: &str) -> Result<usize> {
    arg.parse().with_context(|| format!("{arg:?} is not a nonnegative integer"))
}

fn given_partition(path: Option<&str>, g: &Graph) -> Result<Option<BarbellPartition>> {
    path.map(|path| {
        let text = read_source(path)?;
        parse_partition_json(&text, g.n()).with_context(|| format!("reading partition from {path}"))
    })
    .transpose()
}

pub fn build(kind: Kind, inputs: &[String], transfer: Option<&str>, opts: SearchOptions) -> Result<BuildResult> {
    if inputs.len() != kind.arity() {
        bail!("ops build {} expects {}", kind_name(kind), kind.usage());
    }
    let mut notes = Vec::new();
    let (graph, construction) = match kind {
        Kind::Dup | Kind::Jdup => {
            let g = read_graph(&inputs[0])?;
            let v = vertex(&g, &inputs[1])?;
            let with_edge = kind == Kind::Jdup;
            let built = if with_edge { ops::jdup(&g, v)? } else { ops::dup(&g, v)? };
            if with_edge && g.is_path() && g.degree(v) == 1 {
                notes.push(
                    "joining a duplicate to a pendant vertex of a path gives a graph H with q(H) = |H| - 1, \
                     which lies in G^SSP"
                        .to_string(),
                );
            }
            let given = given_partition(transfer, &g)?;
            (built, dup_construction(&g, v, with_edge, given, opts))
        }
        Kind::Join => {
            let (g, h) = (read_graph(&inputs[0])?, read_graph(&inputs[1])?);
            let built = ops::join(&g, &h);
            let construction = match given_partition(transfer, &h)? {
                Some(p) => ops::transfer_barbell_join(&g, &h, &p)
                    .map(|q| (q, "G joins R of the given partition of H".to_string())),
                None => ops::join_barbell(&g, &h, opts).and_then(|found| {
                    found
                        .map(|q| (q, "transferred from a factor partition with |W1|, |W2| >= 2".to_string()))
                        .ok_or_else(|| {
                            hypothesis("neither factor has a barbell partition with both W parts of size at least two")
                        })
                }),
            };
            (built, construction)
        }
        Kind::Vsum => {
            let g = read_graph(&inputs[0])?;
            let u = vertex(&g, &inputs[1])?;
            let h = read_graph(&inputs[2])?;
            let w = vertex(&h, &inputs[3])?;
            let built = ops::vertex_sum(&g, u, &h, w)?.0;
            let given = given_partition(transfer, &h)?;
            let construction = ops::transfer_barbell_vertex_sum(&g, u, &h, w, given.as_ref()).map(|(_, q)| {
                let how = if given.is_some() {
                    "G joins the part of the glued vertex in the given partition of H"
                } else {
                    "separated forts avoiding the glued vertex in each summand"
                };
                (q, how.to_string())
            });
            (built, construction)
        }
        Kind::Corona => {
            let (g, h) = (read_graph(&inputs[0])?, read_graph(&inputs[1])?);
            let built = ops::corona(&g, &h).0;
            let construction = ops::barbell_corona(&g, &h)
                .map(|(_, q)| (q, "W1, W2 are the copies of H at hosts 1 and 2".to_string()));
            (built, construction)
        }
        Kind::Cartesian | Kind::Tensor | Kind::Strong => {
            let (g, h) = (read_graph(&inputs[0])?, read_graph(&inputs[1])?);
            let product_kind = match kind {
                Kind::Cartesian => ProductKind::Cartesian,
                Kind::Tensor => ProductKind::Tensor,
                _ => ProductKind::Strong,
            };
            let built = ops::product(&g, &h, product_kind).0;
            let given = given_partition(transfer, &h)?;
            (built, product_construction(&g, &h, product_kind, given, opts))
        }
        Kind::Prism => {
            let (k, m) = (number(&inputs[0])?, number(&inputs[1])?);
            if k < 3 || m < 1 {
                bail!("ops build prism needs k >= 3 and m >= 1");
            }
            let built = ops::cartesian(&named::cycle(k), &named::cycle(k * m)).0;
            let construction =
                ops::barbell_prism(k, m).map(|(_, q)| (q, "diagonal classes of b - a mod k".to_string()));
            (built, construction)
        }
        Kind::TensorComplete => {
            let (n, m) = (number(&inputs[0])?, number(&inputs[1])?);
            if n < 1 || m < 1 {
                bail!("ops build tensor-complete needs n, m >= 1");
            }
            let built = ops::tensor(&named::complete(n), &named::complete(m)).0;
            let construction =
                ops::barbell_tensor_complete(n, m).map(|(_, q)| (q, "first row split into two halves".to_string()));
            (built, construction)
        }
    };
    let mut output = BuildOutput {
        schema: BUILD_SCHEMA,
        kind: kind_name(kind),
        graph6: encode_graph6(&graph),
        n: graph.n(),
        m: graph.m(),
        construction: None,
        partition: None,
        hypothesis_error: None,
        search: None,
        notes,
    };
    let exit_code = match construction {
        Ok((p, how)) => {
            output.construction = Some(how);
            output.partition = Some(p.to_json());
            0
        }
        Err(OpsError::Hypothesis(msg)) => {
            output.hypothesis_error = Some(msg);
            let cert = find_barbell_partition(&graph, opts);
            output.search = Some(cert.to_json(&graph));
            if cert.verdict != Verdict::BudgetExceeded && graph.n() <= opts.brute_cap {
                let exhaustive = brute_force_barbell(&graph)?;
                output.notes.push(match exhaustive {
                    Some(_) => "exhaustive search: a barbell partition exists".to_string(),
                    None => "exhaustive search: no barbell partition exists".to_string(),
                });
            }
            EXIT_HYPOTHESIS
        }
        Err(e) => return Err(e.into()),
    };
    Ok(BuildResult { output, exit_code })
}

fn kind_name(kind: Kind) -> String {
    kind.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
}

fn dup_construction(
    g: &Graph,
    v: usize,
    with_edge: bool,
    given: Option<BarbellPartition>,
    opts: SearchOptions,
) -> Construction {
    let pick = |(d, j): (BarbellPartition, BarbellPartition)| if with_edge { j } else { d };
    if let Some(p) = given {
        return ops::transfer_barbell_dup(g, &p, v).map(|pair| (pick(pair), "copy joins the part of v".to_string()));
    }
    let cert = find_barbell_partition(g, opts);
    match (cert.verdict, cert.partition) {
        (Verdict::Admits, Some(p)) => ops::transfer_barbell_dup(g, &p, v)
            .map(|pair| (pick(pair), "copy joins the part of v in a partition of G".to_string())),
        (Verdict::BudgetExceeded, _) => Err(hypothesis(format!("could not decide whether G admits: {}", cert.notes))),
        _ => ops::dup_fort_partition(g, v, with_edge)?
            .map(|p| (p, "{v, v'} against a fort of G outside N[v]".to_string()))
            .ok_or_else(|| hypothesis("G has no barbell partition and V(G) - N[v] contains no fort")),
    }
}

fn product_construction(
    g: &Graph,
    h: &Graph,
    kind: ProductKind,
    given: Option<BarbellPartition>,
    opts: SearchOptions,
) -> Construction {
    if kind != ProductKind::Strong {
        let p_h = match given {
            Some(p) => Some(p),
            None => find_barbell_partition(h, opts).partition,
        };
        if let Some(p) = p_h {
            return ops::lift_barbell_product(g, h, &p, kind)
                .map(|(_, q)| (q, "partition of H lifted along the G coordinate".to_string()));
        }
        if kind == ProductKind::Cartesian {
            return Err(hypothesis("H has no barbell partition to lift"));
        }
    }
    let pair = (0..g.n()).flat_map(|u| (u + 1..g.n()).map(move |v| (u, v))).find(|&(u, v)| !g.has_edge(u, v));
    let Some((u, v)) = pair else {
        return Err(hypothesis("G has no pair of distinct nonadjacent vertices"));
    };
    ops::barbell_nonadjacent_pair(g, h, u, v, kind)
        .map(|(_, q)| (q, format!("rows {} and {} of nonadjacent vertices of G", u + 1, v + 1)))
}
