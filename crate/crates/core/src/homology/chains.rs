//! Chain complexes of truncated complexes and first homology.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use super::snf::{smith_normal_form, IntMatrix};
use crate::algebra::EffectAlgebra;
use crate::nerve::nerve;
use crate::simplicial::Complex;

/// ∂1 and ∂2 together with the simplices indexing their rows and columns.
#[derive(Clone, Debug, Serialize)]
pub struct ChainMatrices {
    pub vertices: Vec<String>,
    /// Edge indices of the 1-chains.
    pub edges: Vec<usize>,
    /// Triangle indices of the 2-chains.
    pub triangles: Vec<usize>,
    pub d1: IntMatrix,
    pub d2: IntMatrix,
}

fn build(x: &Complex, normalized: bool) -> ChainMatrices {
    let edges: Vec<usize> = (0..x.edge_count()).filter(|&e| !normalized || !x.is_identity(e)).collect();
    let triangles: Vec<usize> =
        (0..x.triangle_count()).filter(|&t| !normalized || !x.is_degenerate(x.triangles()[t])).collect();
    let mut row = vec![None; x.edge_count()];
    for (i, &e) in edges.iter().enumerate() {
        row[e] = Some(i);
    }
    let mut d1 = IntMatrix::zeros(x.vertex_count(), edges.len());
    for (j, &e) in edges.iter().enumerate() {
        d1.add_to(x.target(e), j, 1);
        d1.add_to(x.source(e), j, -1);
    }
    let mut d2 = IntMatrix::zeros(edges.len(), triangles.len());
    for (j, &t) in triangles.iter().enumerate() {
        let [f0, f1, f2] = x.triangles()[t];
        for (face, sign) in [(f0, 1), (f1, -1), (f2, 1)] {
            if let Some(i) = row[face] {
                d2.add_to(i, j, sign);
            }
        }
    }
    ChainMatrices { vertices: x.vertices().to_vec(), edges, triangles, d1, d2 }
}

/// Normalized chains: identity edges and degenerate triangles are left out
/// and identity faces contribute zero.
pub fn chain_matrices(x: &Complex) -> ChainMatrices {
    build(x, true)
}

/// Every edge and triangle, degenerate ones included.
pub fn full_chain_matrices(x: &Complex) -> ChainMatrices {
    build(x, false)
}

/// Z^rank ⊕ Z/d1 ⊕ … ⊕ Z/dk, with the presentation it was read from.
#[derive(Clone, Debug, Serialize)]
pub struct AbelianGroupPresentation {
    pub rank: usize,
    #[serde(serialize_with = "as_strings")]
    pub torsion: Vec<BigInt>,
    pub generators: Vec<String>,
    /// Columns are relations among the generators.
    pub relations: IntMatrix,
}

fn as_strings<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

impl AbelianGroupPresentation {
    /// Same invariants, ignoring how the group was presented.
    pub fn same_group(&self, other: &AbelianGroupPresentation) -> bool {
        self.rank == other.rank && self.torsion == other.torsion
    }
}

impl fmt::Display for AbelianGroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

/// Cokernel of the inclusion of im `relations` into the subgroup of rank
/// `ambient_rank`; the image must lie in a direct summand of that rank.
fn cokernel(generators: Vec<String>, ambient_rank: usize, relations: IntMatrix) -> AbelianGroupPresentation {
    let factors = smith_normal_form(&relations).invariant_factors();
    let one = BigInt::one();
    AbelianGroupPresentation {
        rank: ambient_rank - factors.len(),
        torsion: factors.into_iter().filter(|d| *d != one).collect(),
        generators,
        relations,
    }
}

/// ker ∂1 / im ∂2. ker ∂1 is a direct summand of the 1-chains, so the
/// invariant factors of ∂2 give the torsion.
pub fn h1(x: &Complex) -> AbelianGroupPresentation {
    homology_of(x, chain_matrices(x))
}

fn homology_of(x: &Complex, c: ChainMatrices) -> AbelianGroupPresentation {
    let r1 = smith_normal_form(&c.d1).rank();
    let generators = c.edges.iter().map(|&e| x.edge(e).name.clone()).collect();
    cokernel(generators, c.edges.len() - r1, c.d2)
}

/// H1 computed from the unnormalized chain complex.
pub fn h1_full(x: &Complex) -> AbelianGroupPresentation {
    homology_of(x, full_chain_matrices(x))
}

/// Input to [`h1_universal_group`].
pub enum H1Input<'a> {
    Complex(&'a Complex),
    EffectAlgebra(&'a EffectAlgebra),
}

impl<'a> From<&'a Complex> for H1Input<'a> {
    fn from(x: &'a Complex) -> Self {
        H1Input::Complex(x)
    }
}

impl<'a> From<&'a EffectAlgebra> for H1Input<'a> {
    fn from(e: &'a EffectAlgebra) -> Self {
        H1Input::EffectAlgebra(e)
    }
}

/// H1 of a complex, or of the nerve of an effect algebra, where it is the
/// universal group.
pub fn h1_universal_group<'a>(input: impl Into<H1Input<'a>>) -> AbelianGroupPresentation {
    match input.into() {
        H1Input::Complex(x) => h1(x),
        H1Input::EffectAlgebra(e) => h1(&nerve(&e.to_relfa()).complex),
    }
}

/// Free abelian group on the elements modulo [a] − [a ⊕ b] + [b] for every
/// defined sum.
pub fn universal_group_direct(e: &EffectAlgebra) -> AbelianGroupPresentation {
    let sums: Vec<(usize, usize, usize)> = e.sums().collect();
    let mut rel = IntMatrix::zeros(e.len(), sums.len());
    for (j, &(a, b, c)) in sums.iter().enumerate() {
        rel.add_to(a, j, 1);
        rel.add_to(c, j, -1);
        rel.add_to(b, j, 1);
    }
    cokernel(e.carrier().names().to_vec(), e.len(), rel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog::{boolean, chain, group_algebra, GroupTable};

    #[test]
    fn boundary_of_boundary_vanishes() {
        for e in [chain(2), boolean(2)] {
            let c = chain_matrices(&nerve(&e.to_relfa()).complex);
            assert!(c.d1.mul(&c.d2).is_zero());
        }
    }

    #[test]
    fn small_groups() {
        assert_eq!(h1_universal_group(&chain(3)).to_string(), "Z");
        assert_eq!(h1_universal_group(&boolean(2)).to_string(), "Z^2");
        let z2 = nerve(&group_algebra(&GroupTable::cyclic(2))).complex;
        assert_eq!(h1(&z2).to_string(), "Z/2");
        assert_eq!(universal_group_direct(&chain(2)).to_string(), "Z");
    }
}
