//! Oracles shared by the integration and acceptance targets. They only use
//! tableau combinatorics and the defining representation, never the built
//! irreps.

#![allow(dead_code)]

use index_character::characteristic::omega_tilde;
use index_character::clifford::build_clifford;
use index_character::forms::FormPoly;
use index_character::models::{integrate, ModelManifold};
use index_character::scalar::{rat, Rational};
use index_character::sun::{semistandard_tableaux, Partition};
use num::Zero;
use rand::Rng;

/// Weights of `π` as content vectors of its semistandard tableaux.
pub fn weights(p: &Partition, n: usize) -> Vec<Vec<i64>> {
    semistandard_tableaux(p, n)
        .into_iter()
        .map(|t| {
            let mut c = vec![0i64; n];
            for v in t {
                c[v] += 1;
            }
            c
        })
        .collect()
}

/// Dynkin-type index `ℓ_π` with `Tr(π(X)π(Y)) = ℓ_π Tr(XY)`, read off the
/// Cartan element `diag(1, −1, 0, …)`.
pub fn trace_form_index(p: &Partition, n: usize) -> Rational {
    let s: i64 = weights(p, n).iter().map(|w| (w[0] - w[1]).pow(2)).sum();
    rat(s, 2)
}

/// `[d_π, 0, ℓ_π Tr(Ω̃²)]` computed in the defining representation.
pub fn trace_powers_oracle(m: &ModelManifold, p: &Partition) -> Vec<FormPoly> {
    let n = m.n();
    let cliff = build_clifford(n).unwrap();
    let om = omega_tilde(&m.curvature, &cliff).unwrap();
    let nat_sq = om.trace_of_product(&om).unwrap();
    let d = weights(p, cliff.spinor_dim()).len() as i64;
    vec![
        FormPoly::basis(n, &[], rat(d, 1)).unwrap(),
        FormPoly::zero(n),
        nat_sq.scale_rational(&trace_form_index(p, cliff.spinor_dim())),
    ]
}

/// Index of the `π`-twisted operator on a 4-manifold from the oracle data:
/// `d_π ∫Â + ½ ℓ_π ∫Tr(Ω̃²)`.
pub fn index_oracle(m: &ModelManifold, ahat: &Rational, p: &Partition) -> Rational {
    let tp = trace_powers_oracle(m, p);
    let d = Rational::from_integer((weights(p, 4).len() as i64).into());
    let sq = integrate(&tp[2], m).unwrap().to_rational().unwrap();
    d * ahat + sq * rat(1, 2)
}

pub fn random_antisymmetric(n: usize, rng: &mut impl Rng) -> Vec<Vec<Rational>> {
    let mut a = vec![vec![Rational::zero(); n]; n];
    for (i, j) in (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))) {
        let v = rat(rng.gen_range(-4..=4), rng.gen_range(1..=3));
        a[i][j] = v.clone();
        a[j][i] = -v;
    }
    a
}
