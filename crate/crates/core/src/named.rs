//! Named braces that recur in tests, documentation and the corpus.

use crate::brace::{opposite_brace, SkewBrace};
use crate::catalog;
use crate::group::FiniteGroup;

/// Order-4 brace on `Z₂×Z₂` with `(k₁,h₁)∘(k₂,h₂) = (k₁+k₂+h₁h₂, h₁+h₂)`.
/// `(k, h)` is stored at `k + 2h`; `(A,∘)` is cyclic of order 4.
pub fn b4() -> SkewBrace {
    let circ = FiniteGroup::from_fn(4, |a, b| {
        let (k1, h1, k2, h2) = (a % 2, a / 2, b % 2, b / 2);
        (k1 + k2 + h1 * h2) % 2 + 2 * ((h1 + h2) % 2)
    })
    .expect("B4 multiplicative group");
    SkewBrace::new(catalog::elementary_abelian(2, 2), circ).expect("B4 is a skew brace")
}

/// The opposite brace of `S₃`.
pub fn op_s3() -> SkewBrace {
    opposite_brace(&catalog::symmetric3())
}
