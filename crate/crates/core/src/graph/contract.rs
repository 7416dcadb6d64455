use serde::Serialize;

use super::Graph;
use crate::error::{Error, Result};

/// Certifies that `component` lies within `radius` of `centre` inside the
/// subgraph it induces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RadiusCertificate {
    pub component: Vec<usize>,
    pub centre: usize,
    pub radius: usize,
}

impl RadiusCertificate {
    /// Re-checks the certificate against `g` by a fresh BFS from the centre.
    pub fn holds(&self, g: &Graph) -> bool {
        let Some(inside) = membership(g, &self.component) else { return false };
        if !inside.get(self.centre).copied().unwrap_or(false) {
            return false;
        }
        let dist = g.bfs_distances(self.centre, Some(&inside));
        self.component.iter().all(|&v| dist[v].is_some_and(|d| d <= self.radius))
    }
}

fn membership(g: &Graph, part: &[usize]) -> Option<Vec<bool>> {
    let mut inside = vec![false; g.n()];
    for &v in part {
        if v >= g.n() || inside[v] {
            return None;
        }
        inside[v] = true;
    }
    Some(inside)
}

/// Centre of minimum eccentricity (least id on ties) of the subgraph induced by `part`.
pub fn radius_certificate(g: &Graph, part: &[usize]) -> Result<RadiusCertificate> {
    if part.is_empty() {
        return Err(Error::invalid("empty part"));
    }
    let inside = membership(g, part)
        .ok_or_else(|| Error::invalid(format!("part {part:?} repeats or leaves the vertex range")))?;
    let mut component = part.to_vec();
    component.sort_unstable();
    let mut best: Option<(usize, usize)> = None;
    for &c in &component {
        let dist = g.bfs_distances(c, Some(&inside));
        let mut ecc = 0;
        for &v in &component {
            match dist[v] {
                Some(d) => ecc = ecc.max(d),
                None => return Err(Error::DisconnectedPart(component)),
            }
        }
        if best.map_or(true, |(e, _)| ecc < e) {
            best = Some((ecc, c));
        }
    }
    let (radius, centre) = best.unwrap();
    Ok(RadiusCertificate { component, centre, radius })
}

/// Contracts each part into one vertex; uncovered vertices stay as singletons.
///
/// New vertices are numbered by increasing least member. Returns the simple
/// quotient (loops dropped, parallel edges merged) and the projection map.
pub fn contract_components(g: &Graph, parts: &[Vec<usize>]) -> Result<(Graph, Vec<usize>)> {
    let n = g.n();
    let mut owner = vec![usize::MAX; n];
    for (i, part) in parts.iter().enumerate() {
        if part.is_empty() {
            return Err(Error::invalid("empty part"));
        }
        for &v in part {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if owner[v] != usize::MAX {
                return Err(Error::OverlappingParts(v));
            }
            owner[v] = i;
        }
        radius_certificate(g, part)?;
    }
    // Class representative: least member.
    let mut rep = vec![usize::MAX; n];
    for v in 0..n {
        rep[v] = match owner[v] {
            usize::MAX => v,
            i => *parts[i].iter().min().unwrap(),
        };
    }
    let mut reps: Vec<usize> = rep.clone();
    reps.sort_unstable();
    reps.dedup();
    let mut new_id = vec![usize::MAX; n];
    for (i, &r) in reps.iter().enumerate() {
        new_id[r] = i;
    }
    let projection: Vec<usize> = (0..n).map(|v| new_id[rep[v]]).collect();
    let mut h = Graph::empty(reps.len());
    for (u, v) in g.edges() {
        let (a, b) = (projection[u], projection[v]);
        if a != b {
            h.add_edge(a, b)?;
        }
    }
    Ok((h, projection))
}
