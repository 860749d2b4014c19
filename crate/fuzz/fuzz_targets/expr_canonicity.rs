#![no_main]

use chaindd::{DiagramKind, Expr, Manager, TruthOracle};
use libfuzzer_sys::fuzz_target;

const N: u32 = 6;

fn decode(data: &mut &[u8], depth: usize) -> Expr {
    let Some((&b, rest)) = data.split_first() else { return Expr::Const(false) };
    *data = rest;
    if depth == 0 || b < 64 {
        return if b % 16 == 15 { Expr::Const(b & 16 != 0) } else { Expr::Var(1 + (b as u32) % N) };
    }
    let d = depth - 1;
    match b % 5 {
        0 => Expr::not(decode(data, d)),
        1 => Expr::and(decode(data, d), decode(data, d)),
        2 => Expr::or(decode(data, d), decode(data, d)),
        3 => Expr::xor(decode(data, d), decode(data, d)),
        _ => Expr::ite(decode(data, d), decode(data, d), decode(data, d)),
    }
}

fuzz_target!(|data: &[u8]| {
    let mut cur = data;
    let a = decode(&mut cur, 8);
    let b = decode(&mut cur, 8);
    let ta = TruthOracle::from_expr(N as usize, &a).unwrap();
    let tb = TruthOracle::from_expr(N as usize, &b).unwrap();
    for kind in DiagramKind::ALL {
        let mut m = Manager::new(kind, N as usize).unwrap();
        let fa = a.build(&mut m).unwrap();
        let fb = b.build(&mut m).unwrap();
        assert_eq!(fa == fb, ta == tb, "{kind}");
        assert_eq!(m.count_solutions(fa).unwrap(), ta.count().into());
    }
});
