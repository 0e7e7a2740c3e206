use num_bigint::BigInt;

use super::poly::IntPoly;

/// `p = content · ∏ factor^exponent` with pairwise coprime squarefree
/// factors and strictly increasing exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeFactorization {
    pub content: BigInt,
    pub factors: Vec<(IntPoly, u32)>,
}

impl SquarefreeFactorization {
    pub fn expand(&self) -> IntPoly {
        self.factors
            .iter()
            .fold(IntPoly::constant(self.content.clone()), |acc, (f, e)| &acc * &f.pow(*e))
    }

    /// Exponent of the factor that vanishes at integer `x`, if any.
    pub fn multiplicity_at(&self, x: &BigInt) -> u32 {
        self.factors
            .iter()
            .find(|(f, _)| f.eval(x) == BigInt::from(0))
            .map_or(0, |(_, e)| *e)
    }
}

/// Yun's squarefree decomposition over ℤ.
///
/// Works with primitive parts throughout; every division below is exact in
/// ℤ\[x\] by Gauss's lemma.
pub fn squarefree_decompose(p: &IntPoly) -> SquarefreeFactorization {
    assert!(!p.is_zero(), "squarefree decomposition of the zero polynomial");
    let f = p.primitive_part();
    let content = p.leading().unwrap() / f.leading().unwrap();
    let mut factors = Vec::new();
    if f.is_constant() {
        return SquarefreeFactorization { content, factors };
    }

    let df = f.derivative();
    let b = f.gcd(&df);
    let mut c = exact(&f, &b);
    let mut d = &exact(&df, &b) - &c.derivative();
    let mut i = 1;
    while !c.is_constant() {
        let a = c.gcd(&d);
        if !a.is_constant() {
            factors.push((a.clone(), i));
        }
        c = exact(&c, &a);
        d = &exact(&d, &a) - &c.derivative();
        i += 1;
    }
    SquarefreeFactorization { content, factors }
}

fn exact(a: &IntPoly, b: &IntPoly) -> IntPoly {
    a.div_exact(b)
        .expect("Yun step divides exactly in Z[x] for primitive divisors")
}
