//! Boolean expression trees used to drive random workloads.

use rand::Rng;

use crate::error::Result;
use crate::manager::Manager;
use crate::node::{Level, NodeRef};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Const(bool),
    Var(Level),
    Not(Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
    Xor(Box<Expr>, Box<Expr>),
    Ite(Box<Expr>, Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn not(e: Expr) -> Expr {
        Expr::Not(Box::new(e))
    }

    pub fn and(a: Expr, b: Expr) -> Expr {
        Expr::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Expr, b: Expr) -> Expr {
        Expr::Or(Box::new(a), Box::new(b))
    }

    pub fn xor(a: Expr, b: Expr) -> Expr {
        Expr::Xor(Box::new(a), Box::new(b))
    }

    pub fn ite(i: Expr, t: Expr, e: Expr) -> Expr {
        Expr::Ite(Box::new(i), Box::new(t), Box::new(e))
    }

    pub fn depth(&self) -> usize {
        match self {
            Expr::Const(_) | Expr::Var(_) => 1,
            Expr::Not(a) => 1 + a.depth(),
            Expr::And(a, b) | Expr::Or(a, b) | Expr::Xor(a, b) => 1 + a.depth().max(b.depth()),
            Expr::Ite(a, b, c) => 1 + a.depth().max(b.depth()).max(c.depth()),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Expr::Const(_) | Expr::Var(_) => 1,
            Expr::Not(a) => 1 + a.size(),
            Expr::And(a, b) | Expr::Or(a, b) | Expr::Xor(a, b) => 1 + a.size() + b.size(),
            Expr::Ite(a, b, c) => 1 + a.size() + b.size() + c.size(),
        }
    }

    /// Largest variable level mentioned, 0 if none.
    pub fn max_level(&self) -> Level {
        match self {
            Expr::Const(_) => 0,
            Expr::Var(l) => *l,
            Expr::Not(a) => a.max_level(),
            Expr::And(a, b) | Expr::Or(a, b) | Expr::Xor(a, b) => a.max_level().max(b.max_level()),
            Expr::Ite(a, b, c) => a.max_level().max(b.max_level()).max(c.max_level()),
        }
    }

    /// Build the expression in `m` with apply operations.
    pub fn build(&self, m: &mut Manager) -> Result<NodeRef> {
        Ok(match self {
            Expr::Const(false) => NodeRef::LEAF0,
            Expr::Const(true) => m.universe()?,
            Expr::Var(l) => m.var(*l)?,
            Expr::Not(a) => {
                let a = a.build(m)?;
                m.not(a)?
            }
            Expr::And(a, b) => {
                let (a, b) = (a.build(m)?, b.build(m)?);
                m.and(a, b)?
            }
            Expr::Or(a, b) => {
                let (a, b) = (a.build(m)?, b.build(m)?);
                m.or(a, b)?
            }
            Expr::Xor(a, b) => {
                let (a, b) = (a.build(m)?, b.build(m)?);
                m.xor(a, b)?
            }
            Expr::Ite(a, b, c) => {
                let (a, b, c) = (a.build(m)?, b.build(m)?, c.build(m)?);
                m.ite(a, b, c)?
            }
        })
    }

    /// Random expression over variables `1..=n` with depth at most `max_depth`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, n: Level, max_depth: usize) -> Expr {
        if max_depth <= 1 || rng.gen_bool(0.2) {
            return if rng.gen_bool(0.05) {
                Expr::Const(rng.gen())
            } else {
                Expr::Var(rng.gen_range(1..=n))
            };
        }
        let d = max_depth - 1;
        match rng.gen_range(0..9) {
            0 => Expr::not(Expr::random(rng, n, d)),
            1 | 2 => Expr::and(Expr::random(rng, n, d), Expr::random(rng, n, d)),
            3 | 4 => Expr::or(Expr::random(rng, n, d), Expr::random(rng, n, d)),
            5 | 6 => Expr::xor(Expr::random(rng, n, d), Expr::random(rng, n, d)),
            _ => Expr::ite(
                Expr::random(rng, n, d),
                Expr::random(rng, n, d),
                Expr::random(rng, n, d),
            ),
        }
    }

    /// A randomly rewritten expression denoting the same function, using
    /// commutation, De Morgan, Shannon-style ITE expansion and similar
    /// identities. The result usually has a different apply call sequence.
    pub fn rewrite<R: Rng + ?Sized>(&self, rng: &mut R) -> Expr {
        let pick = rng.gen_range(0..4);
        match self {
            Expr::Const(v) => match pick {
                0 => Expr::not(Expr::Const(!v)),
                _ => self.clone(),
            },
            Expr::Var(_) => match pick {
                0 => Expr::not(Expr::not(self.clone())),
                1 => Expr::and(self.clone(), self.clone()),
                2 => Expr::ite(self.clone(), Expr::Const(true), Expr::Const(false)),
                _ => self.clone(),
            },
            Expr::Not(a) => {
                let a = a.rewrite(rng);
                match pick {
                    0 => Expr::xor(a, Expr::Const(true)),
                    1 => Expr::ite(a, Expr::Const(false), Expr::Const(true)),
                    _ => Expr::not(a),
                }
            }
            Expr::And(a, b) => {
                let (a, b) = (a.rewrite(rng), b.rewrite(rng));
                match pick {
                    0 => Expr::and(b, a),
                    1 => Expr::not(Expr::or(Expr::not(a), Expr::not(b))),
                    2 => Expr::ite(a, b, Expr::Const(false)),
                    _ => Expr::and(a, b),
                }
            }
            Expr::Or(a, b) => {
                let (a, b) = (a.rewrite(rng), b.rewrite(rng));
                match pick {
                    0 => Expr::or(b, a),
                    1 => Expr::not(Expr::and(Expr::not(a), Expr::not(b))),
                    2 => Expr::ite(a, Expr::Const(true), b),
                    _ => Expr::or(a, b),
                }
            }
            Expr::Xor(a, b) => {
                let (a, b) = (a.rewrite(rng), b.rewrite(rng));
                match pick {
                    0 => Expr::xor(b, a),
                    1 => Expr::or(
                        Expr::and(a.clone(), Expr::not(b.clone())),
                        Expr::and(Expr::not(a), b),
                    ),
                    2 => Expr::ite(a, Expr::not(b.clone()), b),
                    _ => Expr::xor(a, b),
                }
            }
            Expr::Ite(i, t, e) => {
                let (i, t, e) = (i.rewrite(rng), t.rewrite(rng), e.rewrite(rng));
                match pick {
                    0 => Expr::ite(Expr::not(i), e, t),
                    1 => Expr::or(Expr::and(i.clone(), t), Expr::and(Expr::not(i), e)),
                    _ => Expr::ite(i, t, e),
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_respects_depth_and_range() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let e = Expr::random(&mut rng, 6, 12);
            assert!(e.depth() <= 12);
            assert!(e.max_level() <= 6);
        }
    }
}
