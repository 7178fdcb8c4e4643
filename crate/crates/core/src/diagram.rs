//! Core diagram, leg gluing, tame-pole splaying and the Cartan data.
//!
//! Edges are stored as a symmetric integer matrix of unoriented
//! multiplicities. The diagonal holds unoriented loop counts, so the
//! oriented adjacency matrix is `B_ij = E_ij` off the diagonal and
//! `B_ii = 2 E_ii`.

use std::fmt;

use num_rational::BigRational;
use serde::Serialize;

use crate::circles::{hom_class, Circle, IrregularClass};
use crate::cyclotomic::fmt_rational;
use crate::error::{Error, Result};
use crate::legs::JordanClass;

/// One circle at infinity with its multiplicity and formal monodromy class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalComponent {
    pub circle: Circle,
    pub mult: u64,
    pub monodromy: JordanClass,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PoleLocation {
    Point(BigRational),
    Label(String),
}

impl fmt::Display for PoleLocation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PoleLocation::Point(r) => f.write_str(&fmt_rational(r)),
            PoleLocation::Label(s) => f.write_str(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TamePole {
    pub location: PoleLocation,
    pub class: JordanClass,
}

/// The formal data at infinity plus the tame poles on the affine line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemInput {
    infinity: Vec<FormalComponent>,
    tame_poles: Vec<TamePole>,
    warnings: Vec<String>,
}

impl ProblemInput {
    /// Validates the data. Repeated circles are merged (multiplicities add,
    /// monodromy classes are block-summed) with a warning.
    pub fn new(infinity: Vec<FormalComponent>, tame_poles: Vec<TamePole>) -> Result<Self> {
        let mut warnings = Vec::new();
        let mut merged: Vec<FormalComponent> = Vec::new();
        for comp in infinity {
            if comp.mult == 0 {
                return Err(Error::validation(format!(
                    "circle {} has multiplicity 0",
                    comp.circle
                )));
            }
            if comp.monodromy.size() != comp.mult {
                return Err(Error::validation(format!(
                    "monodromy class {} of circle {} has size {}, expected {}",
                    comp.monodromy,
                    comp.circle,
                    comp.monodromy.size(),
                    comp.mult
                )));
            }
            match merged.iter_mut().find(|c| c.circle == comp.circle) {
                Some(existing) => {
                    warnings.push(format!(
                        "circle {} listed more than once; multiplicities merged",
                        comp.circle
                    ));
                    existing.mult += comp.mult;
                    existing.monodromy = existing.monodromy.direct_sum(&comp.monodromy);
                }
                None => merged.push(comp),
            }
        }
        if merged.is_empty() {
            return Err(Error::validation(
                "no circles at infinity (rank would be 0)",
            ));
        }
        let rank: u64 = merged.iter().map(|c| c.mult * c.circle.ram()).sum();
        for (k, pole) in tame_poles.iter().enumerate() {
            if pole.class.size() != rank {
                return Err(Error::validation(format!(
                    "class {} at pole {} has size {}, expected the rank {rank}",
                    pole.class,
                    pole.location,
                    pole.class.size()
                )));
            }
            if tame_poles[..k].iter().any(|p| p.location == pole.location) {
                return Err(Error::validation(format!(
                    "pole location {} repeated",
                    pole.location
                )));
            }
        }
        Ok(ProblemInput {
            infinity: merged,
            tame_poles,
            warnings,
        })
    }

    pub fn infinity(&self) -> &[FormalComponent] {
        &self.infinity
    }

    pub fn tame_poles(&self) -> &[TamePole] {
        &self.tame_poles
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn irregular_class(&self) -> IrregularClass {
        IrregularClass::new(self.infinity.iter().map(|c| (c.circle.clone(), c.mult))).0
    }

    /// `n = Σ n_i β_i`.
    pub fn rank(&self) -> u64 {
        self.infinity.iter().map(|c| c.mult * c.circle.ram()).sum()
    }

    /// Same data with every exponential factor multiplied by `gamma`.
    pub fn scaled(&self, gamma: &crate::cyclotomic::CycloNumber) -> Self {
        ProblemInput {
            infinity: self
                .infinity
                .iter()
                .map(|c| FormalComponent {
                    circle: c.circle.scale(gamma),
                    ..c.clone()
                })
                .collect(),
            ..self.clone()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NodeKind {
    Core,
    FormalLeg,
    TameLeg,
}

impl fmt::Display for NodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NodeKind::Core => "core",
            NodeKind::FormalLeg => "formal-leg",
            NodeKind::TameLeg => "tame-leg",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Node {
    pub id: usize,
    pub label: String,
    pub kind: NodeKind,
    pub dim: u64,
}

/// Nodes with dimensions and a symmetric matrix of unoriented edge and loop
/// multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Diagram {
    nodes: Vec<Node>,
    edges: Vec<Vec<i64>>,
    core_rams: Vec<u64>,
    warnings: Vec<String>,
}

impl Diagram {
    /// Builds a diagram from dimensions and an unoriented edge matrix;
    /// every node is treated as a core node of ramification 1.
    pub fn from_parts(dims: &[u64], edges: Vec<Vec<i64>>) -> Result<Self> {
        let n = dims.len();
        if edges.len() != n || edges.iter().any(|r| r.len() != n) {
            return Err(Error::validation(
                "edge matrix does not match the node count",
            ));
        }
        if (0..n).any(|i| (0..i).any(|j| edges[i][j] != edges[j][i])) {
            return Err(Error::validation("edge matrix is not symmetric"));
        }
        Ok(Diagram {
            nodes: dims
                .iter()
                .enumerate()
                .map(|(id, &dim)| Node {
                    id,
                    label: format!("n{id}"),
                    kind: NodeKind::Core,
                    dim,
                })
                .collect(),
            edges,
            core_rams: vec![1; n],
            warnings: Vec::new(),
        })
    }

    fn push_node(&mut self, label: String, kind: NodeKind, dim: u64) -> usize {
        let id = self.nodes.len();
        self.nodes.push(Node {
            id,
            label,
            kind,
            dim,
        });
        for row in &mut self.edges {
            row.push(0);
        }
        self.edges.push(vec![0; id + 1]);
        id
    }

    fn add_edges(&mut self, a: usize, b: usize, mult: i64) {
        self.edges[a][b] += mult;
        if a != b {
            self.edges[b][a] += mult;
        }
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn dims(&self) -> Vec<u64> {
        self.nodes.iter().map(|n| n.dim).collect()
    }

    /// Unoriented multiplicity between two distinct nodes.
    pub fn edge(&self, a: usize, b: usize) -> i64 {
        self.edges[a][b]
    }

    /// Unoriented loop count at a node.
    pub fn loops(&self, a: usize) -> i64 {
        self.edges[a][a]
    }

    pub fn edge_matrix(&self) -> &[Vec<i64>] {
        &self.edges
    }

    /// Oriented arrow counts `B`.
    pub fn adjacency(&self) -> Vec<Vec<i64>> {
        let mut b = self.edges.clone();
        for (i, row) in b.iter_mut().enumerate() {
            row[i] *= 2;
        }
        b
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// Rank of the connection, `Σ dim(core_i) · β_i`.
    pub fn rank(&self) -> u64 {
        self.core_rams
            .iter()
            .zip(&self.nodes)
            .map(|(r, n)| r * n.dim)
            .sum()
    }

    /// The diagram with one node and its incident edges removed.
    pub fn remove_node(&self, k: usize) -> Diagram {
        let keep: Vec<usize> = (0..self.len()).filter(|&i| i != k).collect();
        let mut nodes: Vec<Node> = keep.iter().map(|&i| self.nodes[i].clone()).collect();
        for (id, n) in nodes.iter_mut().enumerate() {
            n.id = id;
        }
        Diagram {
            nodes,
            edges: keep
                .iter()
                .map(|&i| keep.iter().map(|&j| self.edges[i][j]).collect())
                .collect(),
            core_rams: self
                .core_rams
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != k)
                .map(|(_, &r)| r)
                .collect(),
            warnings: self.warnings.clone(),
        }
    }

    /// Dimensions and edge matrix after relabelling: the result's node `i` is
    /// this diagram's node `perm[i]`.
    pub fn permuted_shape(&self, perm: &[usize]) -> (Vec<u64>, Vec<Vec<i64>>) {
        let dims = perm.iter().map(|&i| self.nodes[i].dim).collect();
        let edges = perm
            .iter()
            .map(|&i| perm.iter().map(|&j| self.edges[i][j]).collect())
            .collect();
        (dims, edges)
    }

    /// Isomorphism of dimensioned diagrams (same dims and multiplicities up
    /// to relabelling). Returns the node map `self[i] ↦ other[map[i]]`.
    pub fn isomorphism_to(&self, other: &Diagram) -> Option<Vec<usize>> {
        if self.len() != other.len() {
            return None;
        }
        let mut map = vec![usize::MAX; self.len()];
        let mut used = vec![false; other.len()];
        fn extend(
            a: &Diagram,
            b: &Diagram,
            i: usize,
            map: &mut Vec<usize>,
            used: &mut Vec<bool>,
        ) -> bool {
            if i == a.len() {
                return true;
            }
            for j in 0..b.len() {
                if used[j] || a.nodes[i].dim != b.nodes[j].dim || a.edges[i][i] != b.edges[j][j] {
                    continue;
                }
                if (0..i).any(|k| a.edges[i][k] != b.edges[j][map[k]]) {
                    continue;
                }
                map[i] = j;
                used[j] = true;
                if extend(a, b, i + 1, map, used) {
                    return true;
                }
                used[j] = false;
            }
            false
        }
        extend(self, other, 0, &mut map, &mut used).then_some(map)
    }
}

/// The core diagram: one node per circle, `B_ij = A_ij − β_iβ_j` and
/// `B_ii = A_ii − β_i² + 1`, with `A_ij = Irr Hom(⟨q_i⟩, ⟨q_j⟩)`.
pub fn core_diagram(infinity: &[FormalComponent]) -> Result<Diagram> {
    let mut d = Diagram::default();
    for (i, c) in infinity.iter().enumerate() {
        if infinity[..i].iter().any(|o| o.circle == c.circle) {
            return Err(Error::validation(format!(
                "circle {} appears twice in the core diagram",
                c.circle
            )));
        }
        d.push_node(c.circle.to_string(), NodeKind::Core, c.mult);
        d.core_rams.push(c.circle.ram());
    }
    for (i, ci) in infinity.iter().enumerate() {
        let bi = ci.circle.ram() as i64;
        for (j, cj) in infinity.iter().enumerate().skip(i) {
            let bj = cj.circle.ram() as i64;
            let a = hom_class(&ci.circle, &cj.circle)?.irr() as i64;
            if i == j {
                let b = a - bi * bi + 1;
                if b % 2 != 0 {
                    return Err(Error::invariant(format!(
                        "odd loop count B_ii = {b} at {}",
                        ci.circle
                    )));
                }
                d.edges[i][i] = b / 2;
            } else {
                let back = hom_class(&cj.circle, &ci.circle)?.irr() as i64;
                if back != a {
                    return Err(Error::invariant(format!(
                        "asymmetric Hom irregularity between {} and {}",
                        ci.circle, cj.circle
                    )));
                }
                d.add_edges(i, j, a - bi * bj);
            }
        }
    }
    Ok(d)
}

/// Glues the leg of each formal monodromy class onto its core node.
pub fn glue_formal_legs(mut diagram: Diagram, infinity: &[FormalComponent]) -> Result<Diagram> {
    for (i, comp) in infinity.iter().enumerate() {
        if comp.monodromy.size() != comp.mult {
            return Err(Error::validation(format!(
                "monodromy class at {} has size {}, expected {}",
                comp.circle,
                comp.monodromy.size(),
                comp.mult
            )));
        }
        let dims = comp.monodromy.leg_dims();
        let mut prev = i;
        for (k, &dim) in dims.iter().enumerate().skip(1) {
            let id = diagram.push_node(
                format!("{} leg {}", comp.circle, k + 1),
                NodeKind::FormalLeg,
                dim,
            );
            diagram.add_edges(prev, id, 1);
            prev = id;
        }
    }
    Ok(diagram)
}

/// Adds the splayed leg of a tame pole: the second leg node is joined to
/// core node `j` by `β_j` edges, the rest of the leg is a chain.
pub fn add_tame_pole(mut diagram: Diagram, label: &str, class: &JordanClass) -> Result<Diagram> {
    let n = diagram.rank();
    if class.size() != n {
        return Err(Error::validation(format!(
            "class {class} at pole {label} has size {}, expected the rank {n}",
            class.size()
        )));
    }
    let dims = class.leg_dims();
    if dims.len() == 1 {
        diagram.warnings.push(format!(
            "central class at pole {label} contributes no nodes"
        ));
        return Ok(diagram);
    }
    let mut prev = None;
    for (k, &dim) in dims.iter().enumerate().skip(1) {
        let id = diagram.push_node(
            format!("pole {label} leg {}", k + 1),
            NodeKind::TameLeg,
            dim,
        );
        match prev {
            None => {
                for (core, &beta) in diagram.core_rams.clone().iter().enumerate() {
                    diagram.add_edges(core, id, beta as i64);
                }
            }
            Some(p) => diagram.add_edges(p, id, 1),
        }
        prev = Some(id);
    }
    Ok(diagram)
}

/// The full diagram of the input.
pub fn build_diagram(input: &ProblemInput) -> Result<Diagram> {
    let mut d = glue_formal_legs(core_diagram(input.infinity())?, input.infinity())?;
    d.warnings.extend(input.warnings().iter().cloned());
    for pole in input.tame_poles() {
        d = add_tame_pole(d, &pole.location.to_string(), &pole.class)?;
    }
    Ok(d)
}

/// Cartan matrix `C = 2·Id − B`, the pairing `(d, d)` and `2 − (d, d)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CartanData {
    pub cartan: Vec<Vec<i64>>,
    pub dims: Vec<u64>,
    pub pairing: i64,
    pub dim_b: i64,
    /// The dimension formula presumes the moduli space is nonempty; this is
    /// never checked.
    pub nonempty_assumed: bool,
}

pub fn cartan(diagram: &Diagram) -> CartanData {
    let b = diagram.adjacency();
    let c: Vec<Vec<i64>> = b
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, &x)| if i == j { 2 - x } else { -x })
                .collect()
        })
        .collect();
    let d = diagram.dims();
    let pairing = pairing(&c, &d);
    CartanData {
        cartan: c,
        dims: d,
        pairing,
        dim_b: 2 - pairing,
        nonempty_assumed: true,
    }
}

/// `dᵀ C d`.
pub fn pairing(c: &[Vec<i64>], d: &[u64]) -> i64 {
    c.iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, &x)| x * d[i] as i64 * d[j] as i64)
                .sum::<i64>()
        })
        .sum()
}

/// Moduli dimension counted directly from the data, without a diagram:
/// `Irr End Θ + 2 − n² − Σ n_i² + Σ dim 𝒞_i + Σ dim Ĉ_k`.
pub fn dim_oracle(input: &ProblemInput) -> Result<i64> {
    let n = input.rank() as i64;
    let end = input.irregular_class().end_irr()? as i64;
    let formal: i64 = input
        .infinity()
        .iter()
        .map(|c| c.monodromy.class_dim() as i64 - (c.mult * c.mult) as i64)
        .sum();
    let tame: i64 = input
        .tame_poles()
        .iter()
        .map(|p| p.class.class_dim() as i64)
        .sum();
    Ok(end + 2 - n * n + formal + tame)
}

/// Everything computed for one input.
#[derive(Clone, Debug)]
pub struct Compiled {
    pub input: ProblemInput,
    pub diagram: Diagram,
    pub cartan: CartanData,
    pub irr_end: u64,
    pub rank: u64,
}

impl Compiled {
    pub fn warnings(&self) -> &[String] {
        self.diagram.warnings()
    }
}

pub fn compile(input: &ProblemInput) -> Result<Compiled> {
    let diagram = build_diagram(input)?;
    let cartan = cartan(&diagram);
    Ok(Compiled {
        irr_end: input.irregular_class().end_irr()?,
        rank: input.rank(),
        input: input.clone(),
        diagram,
        cartan,
    })
}
