#![allow(dead_code)]

use certhull::real_kernel::{CReal, Rat};
use rand::Rng;

/// Arithmetic expression over rational leaves.
#[derive(Clone, Debug)]
pub enum Expr {
    Leaf(Rat),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Abs(Box<Expr>),
}

impl Expr {
    /// Exact value by direct rational evaluation.
    pub fn exact(&self) -> Rat {
        match self {
            Expr::Leaf(q) => q.clone(),
            Expr::Add(a, b) => a.exact() + b.exact(),
            Expr::Sub(a, b) => a.exact() - b.exact(),
            Expr::Mul(a, b) => a.exact() * b.exact(),
            Expr::Neg(a) => -a.exact(),
            Expr::Abs(a) => a.exact().abs(),
        }
    }

    pub fn to_creal(&self) -> CReal {
        match self {
            Expr::Leaf(q) => CReal::embed(q.clone()),
            Expr::Add(a, b) => a.to_creal() + b.to_creal(),
            Expr::Sub(a, b) => a.to_creal() - b.to_creal(),
            Expr::Mul(a, b) => a.to_creal() * b.to_creal(),
            Expr::Neg(a) => -a.to_creal(),
            Expr::Abs(a) => a.to_creal().abs(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Expr::Leaf(_) => 0,
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => 1 + a.depth().max(b.depth()),
            Expr::Neg(a) | Expr::Abs(a) => 1 + a.depth(),
        }
    }
}

pub fn random_rat<R: Rng>(rng: &mut R) -> Rat {
    Rat::new(rng.gen_range(-50..=50), rng.gen_range(1..=16))
}

/// Random tree of depth at most `depth`; leaves become likelier as it deepens.
pub fn random_expr<R: Rng>(rng: &mut R, depth: usize) -> Expr {
    if depth == 0 || rng.gen_bool(0.2) {
        return Expr::Leaf(random_rat(rng));
    }
    let sub = |rng: &mut R| Box::new(random_expr(rng, depth - 1));
    match rng.gen_range(0..5) {
        0 => Expr::Add(sub(rng), sub(rng)),
        1 => Expr::Sub(sub(rng), sub(rng)),
        2 => Expr::Mul(sub(rng), sub(rng)),
        3 => Expr::Neg(sub(rng)),
        _ => Expr::Abs(sub(rng)),
    }
}
