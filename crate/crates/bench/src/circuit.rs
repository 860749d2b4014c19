use chaindd::{Level, Manager, NodeRef};

use crate::collect::Collector;
use crate::error::{BenchError, Result};
use crate::netlist::{Driver, GateOp, Netlist};

#[derive(Debug, Clone)]
pub struct CircuitResult {
    pub outputs: Vec<NodeRef>,
    /// Nodes shared by all output functions, each counted once.
    pub total_nodes: usize,
}

fn gate_function(m: &mut Manager, op: GateOp, ins: &[NodeRef]) -> Result<NodeRef> {
    let fold = |m: &mut Manager, f: fn(&mut Manager, NodeRef, NodeRef) -> chaindd::Result<NodeRef>| {
        let mut acc = ins[0];
        for &x in &ins[1..] {
            acc = f(m, acc, x)?;
        }
        Ok::<_, BenchError>(acc)
    };
    Ok(match op {
        GateOp::Buf => ins[0],
        GateOp::Not => m.not(ins[0])?,
        GateOp::And => fold(m, Manager::and)?,
        GateOp::Or => fold(m, Manager::or)?,
        GateOp::Xor => fold(m, Manager::xor)?,
        GateOp::Nand => {
            let f = fold(m, Manager::and)?;
            m.not(f)?
        }
        GateOp::Nor => {
            let f = fold(m, Manager::or)?;
            m.not(f)?
        }
        GateOp::Xnor => {
            let f = fold(m, Manager::xor)?;
            m.not(f)?
        }
    })
}

/// Build every primary output. `order[i]` is the input placed at level
/// `i+1`; `m` must have exactly one variable per primary input.
pub fn build_circuit(m: &mut Manager, net: &Netlist, order: &[usize]) -> Result<CircuitResult> {
    let k = net.inputs.len();
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..k).collect::<Vec<_>>() || m.num_vars() as usize != k {
        return Err(BenchError::Usage(format!(
            "variable order must be a permutation of the {k} inputs and match the manager"
        )));
    }
    let mut input_fn = vec![NodeRef::LEAF0; k];
    for (i, &inp) in order.iter().enumerate() {
        input_fn[inp] = m.var(i as Level + 1)?;
    }
    let drivers = net.drivers();
    // position in `order` after which a gate's value is no longer read
    let mut last_use = vec![0usize; net.gates.len()];
    for (pos, &g) in net.order.iter().enumerate() {
        for n in &net.gates[g].inputs {
            if let Driver::Gate(h) = drivers[n.as_str()] {
                last_use[h] = pos;
            }
        }
    }
    for n in &net.outputs {
        if let Driver::Gate(h) = drivers[n.as_str()] {
            last_use[h] = usize::MAX;
        }
    }
    let mut gate_fn: Vec<Option<NodeRef>> = vec![None; net.gates.len()];
    let mut gc = Collector::new();
    let value = |gate_fn: &[Option<NodeRef>], n: &str| match drivers[n] {
        Driver::Input(i) => input_fn[i],
        Driver::Gate(h) => gate_fn[h].expect("gates are visited in topological order"),
    };
    for (pos, &g) in net.order.iter().enumerate() {
        let gate = &net.gates[g];
        let ins: Vec<NodeRef> = gate.inputs.iter().map(|n| value(&gate_fn, n)).collect();
        gate_fn[g] = Some(gate_function(m, gate.op, &ins)?);
        for n in &gate.inputs {
            if let Driver::Gate(h) = drivers[n.as_str()] {
                if last_use[h] == pos {
                    gate_fn[h] = None;
                }
            }
        }
        let pins: Vec<NodeRef> = gate_fn.iter().flatten().chain(&input_fn).copied().collect();
        gc.maybe_collect(m, &pins);
    }
    let outputs: Vec<NodeRef> = net.outputs.iter().map(|n| value(&gate_fn, n)).collect();
    let total_nodes = m.shared_node_count(&outputs)?;
    Ok(CircuitResult { outputs, total_nodes })
}
