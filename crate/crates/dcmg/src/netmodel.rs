//! Electrical network model: graph, incidence/admittance matrices, node
//! partition into generation and load sets, ZIP loads, and topology edits
//! driven by unit-commitment decisions.
//!
//! The node ordering convention used everywhere in this crate is
//! "generators first, then loads": all vectors and matrix blocks follow it.
//! Units are SI throughout (V, A, W, S, Ω, Wh).

use std::collections::{BTreeMap, BTreeSet};

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// External node label (as drawn in a one-line diagram).
pub type NodeId = u32;

#[derive(Debug, Error)]
pub enum NetError {
    #[error("graph is not connected ({0} components)")]
    Disconnected(usize),
    #[error("edge ({0},{1}) has non-positive conductance {2}")]
    BadConductance(NodeId, NodeId, f64),
    #[error("edge references unknown node {0}")]
    UnknownNode(NodeId),
    #[error("node {0} listed in both generator and load sets")]
    OverlappingPartition(NodeId),
    #[error("duplicate node id {0}")]
    DuplicateNode(NodeId),
    #[error("network has no nodes")]
    Empty,
    #[error("decision set refers to node {0} which is not a {1}")]
    BadDecision(NodeId, &'static str),
    #[error("removing OFF units splits the network ({0} components remain)")]
    SplitsNetwork(usize),
    #[error("matrix {0} is singular")]
    Singular(&'static str),
    #[error("invalid {0}: {1}")]
    BadSpec(&'static str, String),
}

/// One power line with conductance in siemens.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Edge {
    pub a: NodeId,
    pub b: NodeId,
    pub conductance: f64,
}

/// Parallel Z/I/P load attached to one load node.
///
/// `p_const > 0` draws power; a negative value injects power (used to model
/// a PV unit in maximum-power-point mode). `y_const` and positive `p_const`
/// must be non-negative.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct ZipLoad {
    /// Constant-current draw (A).
    pub i_const: f64,
    /// Constant-impedance conductance (S), >= 0.
    pub y_const: f64,
    /// Constant-power draw (W); 0 encodes absence.
    pub p_const: f64,
}

impl ZipLoad {
    pub fn validate(&self) -> Result<(), NetError> {
        if !(self.y_const >= 0.0) {
            return Err(NetError::BadSpec(
                "ZipLoad",
                format!("y_const must be >= 0, got {}", self.y_const),
            ));
        }
        Ok(())
    }

    /// Net absorbed power at voltage `v`: `i*v + y*v^2 + p`.
    pub fn power_at(&self, v: f64) -> f64 {
        self.i_const * v + self.y_const * v * v + self.p_const
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DguKind {
    Dispatchable,
    Battery,
    Pv,
}

/// Battery-specific parameters of a storage unit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BatteryParams {
    /// Usable capacity in Wh.
    pub capacity_wh: f64,
    pub eta_ch: f64,
    pub eta_dh: f64,
    pub soc_min: f64,
    pub soc_max: f64,
    pub soc_nominal: f64,
}

/// Typed generation unit attached to one generator node.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DguSpec {
    pub kind: DguKind,
    /// Lower capability limit (W). Negative for batteries (charging).
    pub p_min: f64,
    /// Upper capability limit (W).
    pub p_max: f64,
    /// Series filter resistance (Ω), > 0.
    pub r_filter: f64,
    pub battery: Option<BatteryParams>,
}

impl DguSpec {
    pub fn validate(&self) -> Result<(), NetError> {
        if self.p_min > self.p_max {
            return Err(NetError::BadSpec(
                "DguSpec",
                format!("p_min {} > p_max {}", self.p_min, self.p_max),
            ));
        }
        if !(self.r_filter > 0.0) {
            return Err(NetError::BadSpec(
                "DguSpec",
                format!("r_filter must be > 0, got {}", self.r_filter),
            ));
        }
        match (self.kind, &self.battery) {
            (DguKind::Battery, Some(b)) => {
                if !(self.p_min < 0.0 && self.p_max > 0.0) {
                    return Err(NetError::BadSpec(
                        "DguSpec",
                        "battery requires p_min < 0 < p_max".into(),
                    ));
                }
                if !(b.eta_ch > 0.0 && b.eta_ch <= 1.0 && b.eta_dh > 0.0 && b.eta_dh <= 1.0) {
                    return Err(NetError::BadSpec("BatteryParams", "efficiencies in (0,1]".into()));
                }
                if !(b.capacity_wh > 0.0) {
                    return Err(NetError::BadSpec("BatteryParams", "capacity must be > 0".into()));
                }
                if !(0.0 <= b.soc_min && b.soc_min <= b.soc_max && b.soc_max <= 1.0) {
                    return Err(NetError::BadSpec("BatteryParams", "SOC bounds out of order".into()));
                }
            }
            (DguKind::Battery, None) => {
                return Err(NetError::BadSpec("DguSpec", "battery kind without battery params".into()))
            }
            (_, Some(_)) => {
                return Err(NetError::BadSpec("DguSpec", "battery params on non-battery".into()))
            }
            (_, None) => {}
        }
        Ok(())
    }
}

/// Connected undirected graph with the node set split into generator nodes
/// (first) and load nodes (second).
///
/// Immutable after construction; edits like [`apply_decisions`] return new
/// topologies. Construction validates connectivity, positive conductances
/// and the partition.
#[derive(Debug, Clone, PartialEq)]
pub struct NetworkTopology {
    node_ids: Vec<NodeId>,
    dgu_count: usize,
    edges: Vec<Edge>,
    index: BTreeMap<NodeId, usize>,
}

impl NetworkTopology {
    pub fn new(
        dgu_ids: Vec<NodeId>,
        load_ids: Vec<NodeId>,
        edges: Vec<Edge>,
    ) -> Result<Self, NetError> {
        let dgu_count = dgu_ids.len();
        let mut node_ids = dgu_ids;
        let dgu_set: BTreeSet<NodeId> = node_ids.iter().copied().collect();
        for id in &load_ids {
            if dgu_set.contains(id) {
                return Err(NetError::OverlappingPartition(*id));
            }
        }
        node_ids.extend(load_ids);
        if node_ids.is_empty() {
            return Err(NetError::Empty);
        }
        let mut index = BTreeMap::new();
        for (i, id) in node_ids.iter().enumerate() {
            if index.insert(*id, i).is_some() {
                return Err(NetError::DuplicateNode(*id));
            }
        }
        for e in &edges {
            if !(e.conductance > 0.0) {
                return Err(NetError::BadConductance(e.a, e.b, e.conductance));
            }
            if !index.contains_key(&e.a) {
                return Err(NetError::UnknownNode(e.a));
            }
            if !index.contains_key(&e.b) {
                return Err(NetError::UnknownNode(e.b));
            }
        }
        let topo = Self { node_ids, dgu_count, edges, index };
        let comps = topo.component_count();
        if comps != 1 {
            return Err(NetError::Disconnected(comps));
        }
        Ok(topo)
    }

    pub fn node_count(&self) -> usize {
        self.node_ids.len()
    }

    pub fn dgu_count(&self) -> usize {
        self.dgu_count
    }

    pub fn load_count(&self) -> usize {
        self.node_ids.len() - self.dgu_count
    }

    pub fn dgu_ids(&self) -> &[NodeId] {
        &self.node_ids[..self.dgu_count]
    }

    pub fn load_ids(&self) -> &[NodeId] {
        &self.node_ids[self.dgu_count..]
    }

    pub fn node_ids(&self) -> &[NodeId] {
        &self.node_ids
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Position of `id` in the generators-first ordering.
    pub fn node_index(&self, id: NodeId) -> Option<usize> {
        self.index.get(&id).copied()
    }

    fn component_count(&self) -> usize {
        let n = self.node_ids.len();
        if n == 0 {
            return 0;
        }
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for e in &self.edges {
            let (i, j) = (self.index[&e.a], self.index[&e.b]);
            adj[i].push(j);
            adj[j].push(i);
        }
        let mut seen = vec![false; n];
        let mut comps = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            comps += 1;
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(u) = stack.pop() {
                for &v in &adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
        }
        comps
    }

    /// Oriented incidence matrix `B` (|V| x |E|), each column one `+1`/`-1` pair.
    /// Edges are oriented from `a` to `b` in list order.
    pub fn incidence(&self) -> DMatrix<f64> {
        let n = self.node_count();
        let ne = self.edges.len();
        let mut b = DMatrix::zeros(n, ne);
        for (l, e) in self.edges.iter().enumerate() {
            b[(self.index[&e.a], l)] = 1.0;
            b[(self.index[&e.b], l)] = -1.0;
        }
        b
    }
}

/// Conductance Laplacian of the network split along the generator/load
/// partition: `Y = B diag(γ) Bᵀ` with blocks ordered generators-first.
#[derive(Debug, Clone, PartialEq)]
pub struct AdmittancePartition {
    pub y_gg: DMatrix<f64>,
    pub y_gl: DMatrix<f64>,
    pub y_lg: DMatrix<f64>,
    pub y_ll: DMatrix<f64>,
}

impl AdmittancePartition {
    pub fn dgu_count(&self) -> usize {
        self.y_gg.nrows()
    }

    pub fn load_count(&self) -> usize {
        self.y_ll.nrows()
    }

    /// Reassembled full Laplacian (zero row sums).
    pub fn full(&self) -> DMatrix<f64> {
        let n = self.dgu_count();
        let m = self.load_count();
        let mut y = DMatrix::zeros(n + m, n + m);
        y.view_mut((0, 0), (n, n)).copy_from(&self.y_gg);
        y.view_mut((0, n), (n, m)).copy_from(&self.y_gl);
        y.view_mut((n, 0), (m, n)).copy_from(&self.y_lg);
        y.view_mut((n, n), (m, m)).copy_from(&self.y_ll);
        y
    }
}

/// Build the partitioned admittance matrix of a (connected) topology.
pub fn build_admittance(topology: &NetworkTopology) -> AdmittancePartition {
    let n = topology.dgu_count();
    let total = topology.node_count();
    let m = total - n;
    let mut y = DMatrix::zeros(total, total);
    for e in topology.edges() {
        let i = topology.node_index(e.a).expect("validated edge");
        let j = topology.node_index(e.b).expect("validated edge");
        y[(i, i)] += e.conductance;
        y[(j, j)] += e.conductance;
        y[(i, j)] -= e.conductance;
        y[(j, i)] -= e.conductance;
    }
    AdmittancePartition {
        y_gg: y.view((0, 0), (n, n)).into(),
        y_gl: y.view((0, n), (n, m)).into(),
        y_lg: y.view((n, 0), (m, n)).into(),
        y_ll: y.view((n, n), (m, m)).into(),
    }
}

/// Network = topology plus the per-node attachments (unit specs, loads).
///
/// `dgus` is aligned with `topology.dgu_ids()`, `loads` with
/// `topology.load_ids()`.
#[derive(Debug, Clone, PartialEq)]
pub struct Network {
    pub topology: NetworkTopology,
    pub dgus: Vec<DguSpec>,
    pub loads: Vec<ZipLoad>,
}

impl Network {
    pub fn new(
        topology: NetworkTopology,
        dgus: Vec<DguSpec>,
        loads: Vec<ZipLoad>,
    ) -> Result<Self, NetError> {
        if dgus.len() != topology.dgu_count() {
            return Err(NetError::BadSpec(
                "Network",
                format!("{} DGU specs for {} generator nodes", dgus.len(), topology.dgu_count()),
            ));
        }
        if loads.len() != topology.load_count() {
            return Err(NetError::BadSpec(
                "Network",
                format!("{} loads for {} load nodes", loads.len(), topology.load_count()),
            ));
        }
        for d in &dgus {
            d.validate()?;
        }
        for l in &loads {
            l.validate()?;
        }
        Ok(Self { topology, dgus, loads })
    }

    pub fn dgu_spec(&self, id: NodeId) -> Option<&DguSpec> {
        let idx = self.topology.node_index(id)?;
        self.dgus.get(idx)
    }

    pub fn load(&self, id: NodeId) -> Option<&ZipLoad> {
        let idx = self.topology.node_index(id)?;
        idx.checked_sub(self.topology.dgu_count())
            .and_then(|k| self.loads.get(k))
    }

    /// Filter resistances of the generator nodes, in partition order.
    pub fn filter_resistances(&self) -> DVector<f64> {
        DVector::from_iterator(self.dgus.len(), self.dgus.iter().map(|d| d.r_filter))
    }
}

/// Commitment decisions that reshape the network for one EMS period.
///
/// Dispatchable units with `on = false` are removed together with their
/// incident lines. PV units in maximum-power-point mode are reclassified as
/// load nodes carrying a pure-P load that injects `injection` watts.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct DecisionSet {
    pub dispatchable_on: BTreeMap<NodeId, bool>,
    pub pv_mppt: BTreeMap<NodeId, bool>,
    /// Available PV power (W) per unit, used as the injection in MPPT mode.
    pub pv_injection: BTreeMap<NodeId, f64>,
}

/// Apply commitment decisions, returning the edited network.
///
/// Fails with [`NetError::SplitsNetwork`] if removing the OFF units
/// disconnects the remainder.
pub fn apply_decisions(network: &Network, decisions: &DecisionSet) -> Result<Network, NetError> {
    let topo = &network.topology;
    for (&id, _) in &decisions.dispatchable_on {
        match network.dgu_spec(id) {
            Some(spec) if spec.kind == DguKind::Dispatchable => {}
            _ => return Err(NetError::BadDecision(id, "dispatchable DGU")),
        }
    }
    for (&id, _) in &decisions.pv_mppt {
        match network.dgu_spec(id) {
            Some(spec) if spec.kind == DguKind::Pv => {}
            _ => return Err(NetError::BadDecision(id, "PV DGU")),
        }
    }

    let mut removed: BTreeSet<NodeId> = BTreeSet::new();
    for (&id, &on) in &decisions.dispatchable_on {
        if !on {
            removed.insert(id);
        }
    }

    let mut dgu_ids = Vec::new();
    let mut dgus = Vec::new();
    let mut moved_pv: Vec<(NodeId, ZipLoad)> = Vec::new();
    for (i, &id) in topo.dgu_ids().iter().enumerate() {
        if removed.contains(&id) {
            continue;
        }
        if decisions.pv_mppt.get(&id).copied().unwrap_or(false) {
            let inj = decisions.pv_injection.get(&id).copied().unwrap_or(0.0);
            moved_pv.push((id, ZipLoad { i_const: 0.0, y_const: 0.0, p_const: -inj }));
            continue;
        }
        dgu_ids.push(id);
        dgus.push(network.dgus[i].clone());
    }

    let mut load_ids: Vec<NodeId> = topo.load_ids().to_vec();
    let mut loads = network.loads.clone();
    for (id, zip) in moved_pv {
        load_ids.push(id);
        loads.push(zip);
    }

    let edges: Vec<Edge> = topo
        .edges()
        .iter()
        .filter(|e| !removed.contains(&e.a) && !removed.contains(&e.b))
        .copied()
        .collect();

    let topology = NetworkTopology::new(dgu_ids, load_ids, edges).map_err(|e| match e {
        NetError::Disconnected(k) => NetError::SplitsNetwork(k),
        other => other,
    })?;
    Network::new(topology, dgus, loads)
}

/// Structural report for the Laplacian decomposition and the sign/row
/// properties of `-(Y_LL + Y_L)^{-1} Y_LG` that underpin the existence and
/// uniqueness arguments.
#[derive(Debug, Clone)]
pub struct LemmaReport {
    /// Max |residual| of reconstructing `Y_LL` from the zero-row-sum part
    /// plus the generator-coupling diagonal.
    pub decomposition_residual: f64,
    pub decomposition_ok: bool,
    /// Smallest entry of `-(Y_LL + Y_L)^{-1} Y_LG` (should be >= 0).
    pub min_entry: f64,
    /// Rows of that matrix with all entries below tolerance (should be none).
    pub zero_rows: Vec<usize>,
    pub nonnegative_ok: bool,
}

impl LemmaReport {
    pub fn pass(&self) -> bool {
        self.decomposition_ok && self.nonnegative_ok && self.zero_rows.is_empty()
    }
}

/// Check the two structural lemmas on a partition built from a connected
/// graph: (a) `Y_LL` splits into a Laplacian plus `diag(-Y_LG 1)`;
/// (b) `-(Y_LL+Y_L)^{-1} Y_LG` is entrywise nonnegative with no zero row.
pub fn check_lemma_structure(
    partition: &AdmittancePartition,
    loads: &[ZipLoad],
) -> Result<LemmaReport, NetError> {
    let m = partition.load_count();
    let n = partition.dgu_count();
    assert_eq!(loads.len(), m, "load count mismatch");

    // (a) Y_LL = hat(Y_LL) + diag(-Y_LG * 1) with hat(Y_LL) zero-row-sum.
    let ones_n = DVector::from_element(n, 1.0);
    let coupling = -(&partition.y_lg * &ones_n);
    let hat = &partition.y_ll - DMatrix::from_diagonal(&coupling);
    let scale = partition
        .y_ll
        .iter()
        .fold(0.0f64, |acc, v| acc.max(v.abs()))
        .max(1.0);
    let mut max_row_sum = 0.0f64;
    for i in 0..m {
        let s: f64 = hat.row(i).iter().sum();
        max_row_sum = max_row_sum.max(s.abs());
    }
    let residual = max_row_sum / scale;
    let decomposition_ok = residual <= 1e-12;

    // (b) -(Y_LL + Y_L)^{-1} Y_LG >= 0 entrywise, no all-zero row.
    let y_l = DMatrix::from_diagonal(&DVector::from_iterator(
        m,
        loads.iter().map(|l| l.y_const),
    ));
    let ytll = &partition.y_ll + y_l;
    let lu = ytll.lu();
    let inv = lu.try_inverse().ok_or(NetError::Singular("Y_LL + Y_L"))?;
    let mat = -(inv * &partition.y_lg);
    let tol = 1e-12 * scale;
    let mut min_entry = f64::INFINITY;
    let mut zero_rows = Vec::new();
    for i in 0..m {
        let mut row_max = 0.0f64;
        for j in 0..n {
            min_entry = min_entry.min(mat[(i, j)]);
            row_max = row_max.max(mat[(i, j)].abs());
        }
        if row_max <= tol {
            zero_rows.push(i);
        }
    }
    let nonnegative_ok = min_entry >= -tol;
    Ok(LemmaReport {
        decomposition_residual: residual,
        decomposition_ok,
        min_entry,
        zero_rows,
        nonnegative_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn two_node() -> NetworkTopology {
        NetworkTopology::new(
            vec![1],
            vec![2],
            vec![Edge { a: 1, b: 2, conductance: 2.0 }],
        )
        .unwrap()
    }

    /// The 16-bus benchmark topology (generator nodes 1-6, loads 7-16).
    pub(crate) fn bus16_edges() -> Vec<Edge> {
        [
            (15, 16),
            (6, 15),
            (15, 1),
            (1, 14),
            (14, 4),
            (4, 3),
            (4, 12),
            (12, 13),
            (6, 7),
            (7, 8),
            (8, 5),
            (5, 9),
            (9, 10),
            (11, 9),
            (12, 2),
            (2, 11),
        ]
        .iter()
        .map(|&(a, b)| Edge { a, b, conductance: 0.5 })
        .collect()
    }

    pub(crate) fn bus16_topology() -> NetworkTopology {
        NetworkTopology::new(vec![1, 2, 3, 4, 5, 6], (7..=16).collect(), bus16_edges()).unwrap()
    }

    fn bus16_network() -> Network {
        let topo = bus16_topology();
        let disp = DguSpec {
            kind: DguKind::Dispatchable,
            p_min: 10e3,
            p_max: 80e3,
            r_filter: 0.002,
            battery: None,
        };
        let batt = DguSpec {
            kind: DguKind::Battery,
            p_min: -40e3,
            p_max: 40e3,
            r_filter: 0.002,
            battery: Some(BatteryParams {
                capacity_wh: 45e3,
                eta_ch: 0.9,
                eta_dh: 0.9,
                soc_min: 0.1,
                soc_max: 0.9,
                soc_nominal: 0.5,
            }),
        };
        let pv = DguSpec {
            kind: DguKind::Pv,
            p_min: 0.0,
            p_max: 70e3,
            r_filter: 0.002,
            battery: None,
        };
        let dgus = vec![disp.clone(), disp, batt.clone(), batt.clone(), batt, pv];
        let loads = vec![ZipLoad { i_const: 10.0, y_const: 0.55, p_const: 1000.0 }; 10];
        Network::new(topo, dgus, loads).unwrap()
    }

    #[test]
    fn single_edge_admittance() {
        let part = build_admittance(&two_node());
        assert_abs_diff_eq!(part.y_gg[(0, 0)], 2.0);
        assert_abs_diff_eq!(part.y_gl[(0, 0)], -2.0);
        assert_abs_diff_eq!(part.y_lg[(0, 0)], -2.0);
        assert_abs_diff_eq!(part.y_ll[(0, 0)], 2.0);
    }

    #[test]
    fn triangle_admittance() {
        let topo = NetworkTopology::new(
            vec![1],
            vec![2, 3],
            vec![
                Edge { a: 1, b: 2, conductance: 1.0 },
                Edge { a: 2, b: 3, conductance: 1.0 },
                Edge { a: 3, b: 1, conductance: 1.0 },
            ],
        )
        .unwrap();
        let y = build_admittance(&topo).full();
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j { 2.0 } else { -1.0 };
                assert_abs_diff_eq!(y[(i, j)], expect, epsilon = 1e-15);
            }
        }
    }

    #[test]
    fn bus16_zero_row_sums() {
        let part = build_admittance(&bus16_topology());
        let y = part.full();
        assert_eq!(y.nrows(), 16);
        let max_abs = y.iter().fold(0.0f64, |a, v| a.max(v.abs()));
        for i in 0..16 {
            let s: f64 = y.row(i).iter().sum();
            assert!(s.abs() <= 1e-12 * max_abs, "row {i} sum {s}");
        }
    }

    #[test]
    fn disconnected_rejected() {
        let err = NetworkTopology::new(
            vec![1],
            vec![2, 3],
            vec![Edge { a: 1, b: 2, conductance: 1.0 }],
        )
        .unwrap_err();
        assert!(matches!(err, NetError::Disconnected(2)));
    }

    #[test]
    fn nonpositive_conductance_rejected() {
        let err = NetworkTopology::new(
            vec![1],
            vec![2],
            vec![Edge { a: 1, b: 2, conductance: 0.0 }],
        )
        .unwrap_err();
        assert!(matches!(err, NetError::BadConductance(..)));
    }

    #[test]
    fn decisions_remove_dispatchable() {
        let net = bus16_network();
        let mut dec = DecisionSet::default();
        dec.dispatchable_on.insert(1, false);
        dec.dispatchable_on.insert(2, true);
        let edited = apply_decisions(&net, &dec).unwrap();
        assert_eq!(edited.topology.node_count(), 15);
        assert!(edited.topology.node_index(1).is_none());
        // Edges (15,1) and (1,14) are gone.
        assert_eq!(edited.topology.edges().len(), 14);
    }

    #[test]
    fn decisions_split_rejected() {
        let net = bus16_network();
        let mut dec = DecisionSet::default();
        dec.dispatchable_on.insert(1, false);
        dec.dispatchable_on.insert(2, false);
        let err = apply_decisions(&net, &dec).unwrap_err();
        assert!(matches!(err, NetError::SplitsNetwork(2)));
    }

    #[test]
    fn decisions_move_pv_to_loads() {
        let net = bus16_network();
        let mut dec = DecisionSet::default();
        dec.pv_mppt.insert(6, true);
        dec.pv_injection.insert(6, 55e3);
        let edited = apply_decisions(&net, &dec).unwrap();
        assert_eq!(edited.topology.dgu_count(), 5);
        assert_eq!(edited.topology.load_count(), 11);
        let zip = edited.load(6).unwrap();
        assert_abs_diff_eq!(zip.p_const, -55e3);
        assert_eq!(zip.y_const, 0.0);
        // Idempotent for the same decision set.
        let again = apply_decisions(&net, &dec).unwrap();
        assert_eq!(edited, again);
    }

    #[test]
    fn lemma_checks_two_node() {
        let part = build_admittance(&NetworkTopology::new(
            vec![1],
            vec![2],
            vec![Edge { a: 1, b: 2, conductance: 0.5 }],
        )
        .unwrap());
        let rep = check_lemma_structure(&part, &[ZipLoad::default()]).unwrap();
        assert!(rep.pass(), "{rep:?}");
        // -(Y_LL)^{-1} Y_LG = 1 for a single line.
        assert_abs_diff_eq!(rep.min_entry, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn lemma_checks_bus16() {
        let net = bus16_network();
        let part = build_admittance(&net.topology);
        let rep = check_lemma_structure(&part, &net.loads).unwrap();
        assert!(rep.pass(), "{rep:?}");
    }
}
