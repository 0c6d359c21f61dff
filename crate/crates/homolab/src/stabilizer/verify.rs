//! Executable lemma verification: the commuting-operators lemma, the
//! large-effective-support lemma, and the trivial-state Hamiltonian
//! construction, all sign-exact.

use super::pauli::PauliOperator;
use super::surface::{surface_generators, symplectic_rank};
use super::tableau::{pauli_displaced_states_equal, run_circuit, StabilizerTableau};
use crate::bits::BitSet;
use crate::circuit::{effective_support_a, light_cone, Circuit, Direction};
use crate::complex::{EdgeSet, Metric, PolygonalComplex};
use crate::error::{Error, Result};
use crate::gf2::{chain_endpoints, class_member_within, Chain, Gf2Matrix};

/// Result of one commuting-operators check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComutOpVerdict {
    Verified,
    /// Both sides disagreed as states; this would contradict the lemma and
    /// is surfaced as an artifact.
    Violated { anticommute: bool },
}

/// Checks `P γ_Z |ψ⟩ = γ_Z P |ψ⟩` as exact states, where |ψ⟩ = U|0ⁿ⟩.
///
/// Preconditions verified individually (each failure is reported as a
/// precondition error naming the premise): the circuit output lies in the
/// surface code, P stabilizes it, and supp(P) avoids B.
pub fn verify_comut_op(
    g: &PolygonalComplex,
    u: &Circuit,
    gamma: &Chain,
    p: &PauliOperator,
) -> Result<ComutOpVerdict> {
    let b = crate::circuit::effective_support_b(g, u, gamma)?;
    let t = run_circuit(u)?;
    verify_comut_op_with(g, u, &t, &b, gamma, p)
}

/// Same as [`verify_comut_op`] with the expensive pieces precomputed.
pub fn verify_comut_op_with(
    g: &PolygonalComplex,
    u: &Circuit,
    t: &StabilizerTableau,
    b: &EdgeSet,
    gamma: &Chain,
    p: &PauliOperator,
) -> Result<ComutOpVerdict> {
    let _ = u;
    let spec = surface_generators(g)?;
    for (i, gen) in spec.generators.iter().enumerate() {
        if !t.stabilizes(gen) {
            return Err(Error::precondition(format!(
                "circuit output is not a code state (generator {i} fails)"
            )));
        }
    }
    if !t.stabilizes(p) {
        return Err(Error::precondition("P does not stabilize the state"));
    }
    if p.support().intersects(b) {
        return Err(Error::precondition("supp(P) meets B"));
    }
    let gamma_z = PauliOperator::z_on(g.edge_count(), &gamma.coeffs);
    let left = p.mul(&gamma_z);
    let right = gamma_z.mul(p);
    if pauli_displaced_states_equal(t, &left, &right) {
        Ok(ComutOpVerdict::Verified)
    } else {
        Ok(ComutOpVerdict::Violated {
            anticommute: !p.commutes_with(&gamma_z),
        })
    }
}

/// Outcome of the large-B check: the class member found inside B plus the
/// size facts the lemma and its corollary assert.
#[derive(Clone, Debug)]
pub enum LargeBVerdict {
    Verified {
        member: Chain,
        a_size: usize,
        b_size: usize,
        endpoint_distance: usize,
        /// |B| ≥ d(e,f).
        b_bound_holds: bool,
        /// |A| > d(e,f) / c^depth.
        a_bound_holds: bool,
    },
    /// No class member fits inside B: contradicts the lemma.
    Violated,
}

/// Verifies that B contains a whole class member and the size bounds
/// |B| ≥ d(e,f) and c^d·|A| ≥ d(e,f).
pub fn verify_large_b(
    g: &PolygonalComplex,
    u: &Circuit,
    gamma: &Chain,
) -> Result<LargeBVerdict> {
    let t = run_circuit(u)?;
    let spec = surface_generators(g)?;
    for (i, gen) in spec.generators.iter().enumerate() {
        if !t.stabilizes(gen) {
            return Err(Error::precondition(format!(
                "circuit output is not a code state (generator {i} fails)"
            )));
        }
    }
    let a = effective_support_a(g, u, gamma)?;
    let b = light_cone(u, &a, Direction::Up);
    verify_large_b_with(g, u, gamma, &a, &b)
}

/// Size/membership checks against a provided (possibly truncated) B, used
/// both by the main path and by harness self-tests of the negative branch.
pub fn verify_large_b_with(
    g: &PolygonalComplex,
    u: &Circuit,
    gamma: &Chain,
    a: &EdgeSet,
    b: &EdgeSet,
) -> Result<LargeBVerdict> {
    let (e, f) = chain_endpoints(g, gamma)?;
    let endpoint_distance = g.edge_distance(e, f, Metric::Path)?;
    match class_member_within(g, gamma, b) {
        Some(member) => {
            // |A| ≥ d(e,f)/c^d checked in saturating integer arithmetic:
            // c^d·|A| ≥ d(e,f).
            let growth = u.locality().saturating_pow(u.depth() as u32);
            Ok(LargeBVerdict::Verified {
                a_size: a.count(),
                b_size: b.count(),
                endpoint_distance,
                b_bound_holds: b.count() >= endpoint_distance,
                a_bound_holds: growth.saturating_mul(a.count()) >= endpoint_distance,
                member,
            })
        }
        None => Ok(LargeBVerdict::Violated),
    }
}

/// All stabilizer-group elements of the state supported inside `region`:
/// returns a basis of the solution space as generator-combination vectors
/// together with the realized Pauli elements (signs exact).
pub fn stabilizer_elements_within(
    t: &StabilizerTableau,
    region: &EdgeSet,
) -> Vec<PauliOperator> {
    let n = t.qubits();
    let outside: Vec<usize> = (0..n).filter(|&q| !region.get(q)).collect();
    // Combination w of rows has support inside region iff for every outside
    // qubit q, the combined x and z bits vanish: two linear constraints per
    // outside qubit on w.
    let rows = t.rows();
    let mut constraint_rows = Vec::with_capacity(2 * outside.len());
    for &q in &outside {
        let mut cx = BitSet::new(rows.len());
        let mut cz = BitSet::new(rows.len());
        for (i, r) in rows.iter().enumerate() {
            if r.x.get(q) {
                cx.insert(i);
            }
            if r.z.get(q) {
                cz.insert(i);
            }
        }
        constraint_rows.push(cx);
        constraint_rows.push(cz);
    }
    let m = Gf2Matrix::from_rows(rows.len(), constraint_rows);
    let basis = m.nullspace();
    basis
        .iter()
        .map(|combo| {
            let mut p = PauliOperator::identity(n);
            for i in combo.iter_ones() {
                p = p.mul(&rows[i]);
            }
            p
        })
        .collect()
}

/// One conjugated term of the trivial-state Hamiltonian with its checks.
#[derive(Clone, Debug)]
pub struct HamiltonianTerm {
    pub pauli: PauliOperator,
    pub support: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct AppendixAReport {
    pub terms: Vec<HamiltonianTerm>,
    pub pairwise_commute: bool,
    /// supp(H_i) ≤ c^d for every term.
    pub support_bound_holds: bool,
    /// U|0ⁿ⟩ is stabilized by every term, i.e. has energy -n.
    pub ground_energy_attained: bool,
    /// The n terms are independent, so the joint +1 eigenspace is unique.
    pub ground_state_unique: bool,
    /// Exact for commuting independent ±1-spectrum terms.
    pub spectral_gap: u32,
}

impl AppendixAReport {
    pub fn all_hold(&self) -> bool {
        self.pairwise_commute
            && self.support_bound_holds
            && self.ground_energy_attained
            && self.ground_state_unique
    }
}

/// Builds H_i = U Z_i U† exactly and verifies the gapped-Hamiltonian facts:
/// commutation, support bounds, ground energy -n, uniqueness, gap 2.
pub fn appendix_a_hamiltonian(u: &Circuit) -> Result<AppendixAReport> {
    u.validate()?;
    let n = u.qubit_count;
    let terms: Vec<HamiltonianTerm> = (0..n)
        .map(|i| {
            let pauli = PauliOperator::single_z(n, i).conjugate_through(u);
            let support = pauli.support().to_vec();
            HamiltonianTerm { pauli, support }
        })
        .collect();
    let pairwise_commute = terms.iter().enumerate().all(|(i, a)| {
        terms
            .iter()
            .skip(i + 1)
            .all(|b| a.pauli.commutes_with(&b.pauli))
    });
    let c = u.locality();
    let bound = c.saturating_pow(u.depth() as u32);
    let support_bound_holds = terms.iter().all(|t| t.support.len() <= bound);
    let t = run_circuit(u)?;
    let ground_energy_attained = terms.iter().all(|term| t.stabilizes(&term.pauli));
    let paulis: Vec<PauliOperator> = terms.iter().map(|t| t.pauli.clone()).collect();
    let ground_state_unique = symplectic_rank(&paulis, n) == n;
    Ok(AppendixAReport {
        terms,
        pairwise_commute,
        support_bound_holds,
        ground_energy_attained,
        ground_state_unique,
        // Flipping exactly one commuting ±1 term costs 2; independence makes
        // every sign pattern an eigenstate, so the gap is exactly 2.
        spectral_gap: 2,
    })
}

#[cfg(test)]
mod tests {
    use super::super::encoder::synthesize_encoder;
    use super::super::surface::{independent_generators, logical_z_cycles};
    use super::*;
    use crate::circuit::{random_circuit, Gate, GateKind};
    use crate::complex::{build_cube, PolygonalComplex};
    use rand::SeedableRng;

    fn cube_encoder(n: usize) -> (PolygonalComplex, Circuit) {
        let g = build_cube(n).unwrap();
        let spec = surface_generators(&g).unwrap();
        let mut gens = independent_generators(&spec.generators);
        for cyc in logical_z_cycles(&g) {
            gens.push(PauliOperator::z_on(g.edge_count(), &cyc));
        }
        let u = synthesize_encoder(&gens).unwrap();
        (g, u)
    }

    #[test]
    fn comut_op_identity_p_verifies() {
        let (g, u) = cube_encoder(1);
        let gamma = Chain::edges(&g, &g.canonical_path(0, 7, Metric::Path).unwrap());
        let p = PauliOperator::identity(g.edge_count());
        assert_eq!(
            verify_comut_op(&g, &u, &gamma, &p).unwrap(),
            ComutOpVerdict::Verified
        );
    }

    #[test]
    fn comut_op_rejects_non_code_state() {
        let g = build_cube(1).unwrap();
        let u = Circuit::identity(g.edge_count());
        let gamma = Chain::edges(&g, &g.canonical_path(0, 7, Metric::Path).unwrap());
        let p = PauliOperator::identity(g.edge_count());
        let err = verify_comut_op(&g, &u, &gamma, &p).unwrap_err();
        assert!(err.to_string().contains("not a code state"));
    }

    #[test]
    fn large_b_on_cube_encoder() {
        let (g, u) = cube_encoder(1);
        let gamma = Chain::edges(&g, &g.canonical_path(0, 11, Metric::Path).unwrap());
        match verify_large_b(&g, &u, &gamma).unwrap() {
            LargeBVerdict::Verified {
                member,
                b_bound_holds,
                a_bound_holds,
                ..
            } => {
                assert!(b_bound_holds);
                assert!(a_bound_holds);
                assert!(!member.coeffs.is_empty());
            }
            LargeBVerdict::Violated => panic!("lemma must hold"),
        }
    }

    #[test]
    fn truncated_b_exercises_negative_path() {
        // Harness self-test: an artificially tiny B admits no class member.
        let (g, u) = cube_encoder(1);
        let gamma = Chain::edges(&g, &g.canonical_path(0, 11, Metric::Path).unwrap());
        let a = BitSet::new(g.edge_count());
        let b = BitSet::from_indices(g.edge_count(), &[3]);
        match verify_large_b_with(&g, &u, &gamma, &a, &b).unwrap() {
            LargeBVerdict::Violated => {}
            LargeBVerdict::Verified { .. } => panic!("truncated B cannot hold a member"),
        }
    }

    #[test]
    fn stabilizer_elements_within_region_are_supported_there() {
        let (g, u) = cube_encoder(1);
        let t = run_circuit(&u).unwrap();
        let region = g.ball(0, 2, Metric::Copath);
        for p in stabilizer_elements_within(&t, &region) {
            assert!(p.support().is_subset_of(&region));
            assert!(t.stabilizes(&p));
        }
    }

    #[test]
    fn appendix_a_identity_circuit() {
        let u = Circuit::identity(5);
        let rep = appendix_a_hamiltonian(&u).unwrap();
        assert!(rep.all_hold());
        assert_eq!(rep.spectral_gap, 2);
        for (i, term) in rep.terms.iter().enumerate() {
            assert_eq!(term.pauli, PauliOperator::single_z(5, i));
        }
    }

    #[test]
    fn appendix_a_random_circuits() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        for _ in 0..20 {
            let u = random_circuit(&mut rng, 8, 2);
            let rep = appendix_a_hamiltonian(&u).unwrap();
            assert!(rep.all_hold());
        }
    }

    #[test]
    fn appendix_a_cx_ladder_support_growth() {
        let gates: Vec<Gate> = (0..4).map(|i| Gate::new(GateKind::CX, vec![i, i + 1])).collect();
        let u = Circuit::from_gates(5, gates);
        let rep = appendix_a_hamiltonian(&u).unwrap();
        assert!(rep.all_hold());
        for term in &rep.terms {
            assert!(term.support.len() <= 2usize.pow(u.depth() as u32));
        }
    }
}
