#![no_main]

use chaindd::{DiagramKind, Manager};
use chaindd_bench::{build_circuit, parse_iscas};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(net) = parse_iscas("fuzz", text) else { return };
    let order = net.fanin_order();
    assert_eq!(order.len(), net.inputs.len());
    if net.inputs.is_empty() || net.inputs.len() > 12 || net.gates.len() > 200 {
        return;
    }
    let mut m = Manager::new(DiagramKind::Czdd, net.inputs.len()).unwrap();
    m.set_node_limit(Some(100_000));
    let Ok(c) = build_circuit(&mut m, &net, &order) else { return };
    let values: Vec<bool> = (0..net.inputs.len()).map(|i| i % 3 == 0).collect();
    let mut bits = vec![false; values.len()];
    for (level, &inp) in order.iter().enumerate() {
        bits[level] = values[inp];
    }
    for (out, want) in c.outputs.iter().zip(net.simulate(&values)) {
        assert_eq!(m.evaluate(*out, &bits).unwrap(), want);
    }
});
