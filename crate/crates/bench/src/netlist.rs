//! ISCAS-85 style combinational netlists.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{BenchError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GateOp {
    And,
    Nand,
    Or,
    Nor,
    Xor,
    Xnor,
    Not,
    Buf,
}

impl GateOp {
    pub fn name(self) -> &'static str {
        match self {
            GateOp::And => "AND",
            GateOp::Nand => "NAND",
            GateOp::Or => "OR",
            GateOp::Nor => "NOR",
            GateOp::Xor => "XOR",
            GateOp::Xnor => "XNOR",
            GateOp::Not => "NOT",
            GateOp::Buf => "BUF",
        }
    }

    pub fn eval(self, inputs: impl IntoIterator<Item = bool>) -> bool {
        let mut it = inputs.into_iter();
        match self {
            GateOp::And => it.all(|b| b),
            GateOp::Nand => !it.all(|b| b),
            GateOp::Or => it.any(|b| b),
            GateOp::Nor => !it.any(|b| b),
            GateOp::Xor => it.fold(false, |a, b| a ^ b),
            GateOp::Xnor => !it.fold(false, |a, b| a ^ b),
            GateOp::Not => !it.next().unwrap_or(false),
            GateOp::Buf => it.next().unwrap_or(false),
        }
    }
}

impl fmt::Display for GateOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GateOp {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s.to_ascii_uppercase().as_str() {
            "AND" => GateOp::And,
            "NAND" => GateOp::Nand,
            "OR" => GateOp::Or,
            "NOR" => GateOp::Nor,
            "XOR" => GateOp::Xor,
            "XNOR" => GateOp::Xnor,
            "NOT" | "INV" => GateOp::Not,
            "BUF" | "BUFF" => GateOp::Buf,
            _ => return Err(format!("unknown gate type `{s}`")),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gate {
    pub output: String,
    pub op: GateOp,
    pub inputs: Vec<String>,
    pub line: usize,
}

/// A parsed, validated circuit. `order` lists gate indices so that every
/// gate comes after the gates driving its inputs.
#[derive(Debug, Clone)]
pub struct Netlist {
    pub name: String,
    pub inputs: Vec<String>,
    pub outputs: Vec<String>,
    pub gates: Vec<Gate>,
    pub order: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Driver {
    Input(usize),
    Gate(usize),
}

fn is_net_char(c: char) -> bool {
    !c.is_whitespace() && !matches!(c, '(' | ')' | ',' | '=' | '#')
}

fn net_name(s: &str, line: usize) -> Result<String> {
    let s = s.trim();
    if s.is_empty() || !s.chars().all(is_net_char) {
        return Err(BenchError::Parse {
            line,
            msg: format!("bad net name `{s}`"),
        });
    }
    Ok(s.to_owned())
}

/// Split `HEAD(args)` into head and the argument text.
fn call(s: &str, line: usize) -> Result<(&str, &str)> {
    let err = |msg: &str| BenchError::Parse {
        line,
        msg: msg.to_owned(),
    };
    let open = s.find('(').ok_or_else(|| err("expected `(`"))?;
    let rest = s[open + 1..].trim_end();
    let body = rest.strip_suffix(')').ok_or_else(|| err("expected `)` at end of line"))?;
    Ok((s[..open].trim(), body))
}

pub fn parse_iscas(name: &str, text: &str) -> Result<Netlist> {
    let mut inputs = Vec::new();
    let mut outputs: Vec<(String, usize)> = Vec::new();
    let mut gates = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let s = raw.split('#').next().unwrap_or("").trim();
        if s.is_empty() {
            continue;
        }
        if let Some((lhs, rhs)) = s.split_once('=') {
            let output = net_name(lhs, line)?;
            let (head, body) = call(rhs.trim(), line)?;
            let op: GateOp = head.parse().map_err(|msg| BenchError::Parse { line, msg })?;
            let ins = body
                .split(',')
                .map(|a| net_name(a, line))
                .collect::<Result<Vec<_>>>()?;
            let unary = matches!(op, GateOp::Not | GateOp::Buf);
            if unary && ins.len() != 1 {
                return Err(BenchError::Parse {
                    line,
                    msg: format!("{op} takes one input, got {}", ins.len()),
                });
            }
            gates.push(Gate {
                output,
                op,
                inputs: ins,
                line,
            });
        } else {
            let (head, body) = call(s, line)?;
            match head.to_ascii_uppercase().as_str() {
                "INPUT" => inputs.push((net_name(body, line)?, line)),
                "OUTPUT" => outputs.push((net_name(body, line)?, line)),
                _ => {
                    return Err(BenchError::Parse {
                        line,
                        msg: format!("expected INPUT, OUTPUT or an assignment, found `{head}`"),
                    })
                }
            }
        }
    }
    if inputs.is_empty() || outputs.is_empty() {
        return Err(BenchError::Parse {
            line: text.lines().count().max(1),
            msg: "netlist needs at least one INPUT and one OUTPUT".into(),
        });
    }

    let mut drivers: HashMap<&str, (Driver, usize)> = HashMap::new();
    for (k, (net, line)) in inputs.iter().enumerate() {
        if drivers.insert(net, (Driver::Input(k), *line)).is_some() {
            return Err(BenchError::Parse {
                line: *line,
                msg: format!("net `{net}` declared twice"),
            });
        }
    }
    for (k, g) in gates.iter().enumerate() {
        if drivers.insert(&g.output, (Driver::Gate(k), g.line)).is_some() {
            return Err(BenchError::Parse {
                line: g.line,
                msg: format!("net `{}` driven twice", g.output),
            });
        }
    }
    for g in &gates {
        if let Some(net) = g.inputs.iter().find(|n| !drivers.contains_key(n.as_str())) {
            return Err(BenchError::UndefinedNet {
                net: net.clone(),
                line: g.line,
            });
        }
    }
    if let Some((net, line)) = outputs.iter().find(|(n, _)| !drivers.contains_key(n.as_str())) {
        return Err(BenchError::UndefinedNet {
            net: net.clone(),
            line: *line,
        });
    }

    // depth-first topological sort in declaration order
    let mut state = vec![0u8; gates.len()];
    let mut order = Vec::with_capacity(gates.len());
    for start in 0..gates.len() {
        if state[start] != 0 {
            continue;
        }
        let mut stack = vec![(start, 0usize)];
        state[start] = 1;
        while let Some(&mut (g, ref mut next)) = stack.last_mut() {
            if let Some(net) = gates[g].inputs.get(*next) {
                *next += 1;
                if let (Driver::Gate(h), _) = drivers[net.as_str()] {
                    match state[h] {
                        0 => {
                            state[h] = 1;
                            stack.push((h, 0));
                        }
                        1 => return Err(BenchError::Cycle(gates[h].output.clone())),
                        _ => {}
                    }
                }
            } else {
                state[g] = 2;
                order.push(g);
                stack.pop();
            }
        }
    }

    Ok(Netlist {
        name: name.to_owned(),
        inputs: inputs.into_iter().map(|(n, _)| n).collect(),
        outputs: outputs.into_iter().map(|(n, _)| n).collect(),
        gates,
        order,
    })
}

impl Netlist {
    pub fn drivers(&self) -> HashMap<&str, Driver> {
        let mut d: HashMap<&str, Driver> = self
            .inputs
            .iter()
            .enumerate()
            .map(|(k, n)| (n.as_str(), Driver::Input(k)))
            .collect();
        for (k, g) in self.gates.iter().enumerate() {
            d.insert(&g.output, Driver::Gate(k));
        }
        d
    }

    /// Output values for one input vector (inputs in declaration order).
    pub fn simulate(&self, values: &[bool]) -> Vec<bool> {
        assert_eq!(values.len(), self.inputs.len(), "one value per primary input");
        let drivers = self.drivers();
        let mut gate_val = vec![false; self.gates.len()];
        let get = |gate_val: &[bool], net: &str| match drivers[net] {
            Driver::Input(k) => values[k],
            Driver::Gate(k) => gate_val[k],
        };
        for &g in &self.order {
            let gate = &self.gates[g];
            let v = gate.op.eval(gate.inputs.iter().map(|n| get(&gate_val, n)));
            gate_val[g] = v;
        }
        self.outputs.iter().map(|n| get(&gate_val, n)).collect()
    }

    /// Input indices in declaration order.
    pub fn declaration_order(&self) -> Vec<usize> {
        (0..self.inputs.len()).collect()
    }

    /// Fanin ordering heuristic: a depth-first walk of the output cones,
    /// outputs in declaration order, entering deeper fanins first (depth
    /// is the longest gate path to a primary input; ties keep the gate's
    /// own fanin order). Inputs are numbered when first reached; inputs
    /// outside every cone follow in declaration order.
    pub fn fanin_order(&self) -> Vec<usize> {
        let drivers = self.drivers();
        let mut depth = vec![0usize; self.gates.len()];
        let depth_of = |depth: &[usize], net: &str| match drivers[net] {
            Driver::Input(_) => 0,
            Driver::Gate(k) => depth[k],
        };
        for &g in &self.order {
            depth[g] = 1 + self.gates[g]
                .inputs
                .iter()
                .map(|n| depth_of(&depth, n))
                .max()
                .unwrap_or(0);
        }
        let mut seen_input = vec![false; self.inputs.len()];
        let mut seen_gate = vec![false; self.gates.len()];
        let mut order = Vec::with_capacity(self.inputs.len());
        for out in &self.outputs {
            let mut stack = vec![out.as_str()];
            while let Some(net) = stack.pop() {
                match drivers[net] {
                    Driver::Input(k) => {
                        if !seen_input[k] {
                            seen_input[k] = true;
                            order.push(k);
                        }
                    }
                    Driver::Gate(k) => {
                        if seen_gate[k] {
                            continue;
                        }
                        seen_gate[k] = true;
                        let mut fanins: Vec<&str> = self.gates[k].inputs.iter().map(String::as_str).collect();
                        fanins.sort_by_key(|n| std::cmp::Reverse(depth_of(&depth, n)));
                        // stack pops in reverse, so push the first-visited last
                        stack.extend(fanins.into_iter().rev());
                    }
                }
            }
        }
        order.extend((0..self.inputs.len()).filter(|&k| !seen_input[k]));
        order
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const C17: &str = "\
# c17
INPUT(1)
INPUT(2)
INPUT(3)
INPUT(6)
INPUT(7)
OUTPUT(22)
OUTPUT(23)
10 = NAND(1, 3)
11 = NAND(3, 6)
16 = NAND(2, 11)
19 = NAND(11, 7)
22 = NAND(10, 16)
23 = NAND(16, 19)
";

    #[test]
    fn c17_structure() {
        let n = parse_iscas("c17", C17).unwrap();
        assert_eq!(n.inputs.len(), 5);
        assert_eq!(n.outputs, ["22", "23"]);
        assert_eq!(n.gates.len(), 6);
        assert!(n.gates.iter().all(|g| g.op == GateOp::Nand));
        // all 0 inputs: 10=11=1, 16=19=1, 22=23=0
        assert_eq!(n.simulate(&[false; 5]), [false, false]);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_iscas("e", ""), Err(BenchError::Parse { .. })));
        let undefined = "INPUT(a)\nOUTPUT(z)\nz = AND(a, b)\n";
        match parse_iscas("u", undefined) {
            Err(BenchError::UndefinedNet { net, line }) => assert_eq!((net.as_str(), line), ("b", 3)),
            other => panic!("{other:?}"),
        }
        let cyclic = "INPUT(a)\nOUTPUT(x)\nx = AND(a, y)\ny = OR(x, a)\n";
        assert!(matches!(parse_iscas("c", cyclic), Err(BenchError::Cycle(_))));
        let bad = "INPUT(a)\nOUTPUT(x)\nx = MUX(a)\n";
        assert!(matches!(parse_iscas("m", bad), Err(BenchError::Parse { line: 3, .. })));
        let bad = "INPUT(a)\nOUTPUT(x)\nx = NOT(a, a)\n";
        assert!(matches!(parse_iscas("m", bad), Err(BenchError::Parse { line: 3, .. })));
    }

    #[test]
    fn fanin_order_rules() {
        let n = parse_iscas("g", "INPUT(a)\nINPUT(b)\nOUTPUT(z)\nz = AND(a, b)\n").unwrap();
        assert_eq!(n.fanin_order(), [0, 1]);
        let deep = "INPUT(a)\nINPUT(b)\nINPUT(c)\nINPUT(d)\nOUTPUT(z)\n\
                    z = AND(a, y)\ny = OR(b, x)\nx = NOT(c)\n";
        let n = parse_iscas("d", deep).unwrap();
        // y is deeper than a, x deeper than b; d is unused
        assert_eq!(n.fanin_order(), [2, 1, 0, 3]);
        let c17 = parse_iscas("c17", C17).unwrap();
        assert_eq!(c17.fanin_order(), c17.fanin_order());
    }
}
