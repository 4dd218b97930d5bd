use pentagon::clifford::{
    canonical_clifford_solutions, clifford_structure, congruence_from_pair, construct_e_invariant, e_fixed_kernel,
    e_invariant_isomorphic, extract_e_invariant_data, glue_e_fixed, invariance_flags, kernel_and_trace, CliffordError,
    CongruencePairData, Epsilon,
};
use pentagon::constructions::{endo_solution, kac_takesaki};
use pentagon::enumeration::{enumerate_semigroups, enumerate_solutions, SearchFilter};
use pentagon::semigroup::{analyze, named, Congruence, ElementMap};
use pentagon::solution::{verify_solution, PeSolution};

fn m() -> pentagon::semigroup::CayleyTable {
    named::clifford_monoid_m()
}

#[test]
fn structure_of_m() {
    let st = clifford_structure(&m()).unwrap();
    assert_eq!(st.idempotents, vec![0, 1]);
    assert_eq!(st.groups, vec![vec![0], vec![1, 2]]);
    assert_eq!(st.phi_apply(1, 0), 1);
    let g = clifford_structure(&named::symmetric_group_3()).unwrap();
    assert_eq!(g.idempotents, vec![0]);
    assert_eq!(g.groups[0].len(), 6);
    let sl = clifford_structure(&named::semilattice_two()).unwrap();
    assert_eq!(sl.groups, vec![vec![0], vec![1]]);
    assert!(clifford_structure(&named::null_semigroup(3)).is_err());
}

#[test]
fn canonical_solutions() {
    let z3 = named::cyclic_group(3);
    let c = canonical_clifford_solutions(&z3).unwrap();
    assert_eq!(c.identity, kac_takesaki(&z3));
    assert_eq!(c.f, c.constant[0].1);
    let cm = canonical_clifford_solutions(&m()).unwrap();
    assert_eq!(cm.f.apply(0, 2), (2, 1));
    let sl = canonical_clifford_solutions(&named::semilattice_two()).unwrap();
    assert_eq!(sl.identity, sl.f);
    for (_, e) in &cm.constant {
        assert!(invariance_flags(e).e_invariant);
    }
    assert!(invariance_flags(&cm.identity).e_fixed && invariance_flags(&cm.f).e_fixed);
}

#[test]
fn congruence_pair_examples() {
    let t = m();
    let identity = kernel_and_trace(&t, &Congruence::identity(3)).unwrap();
    assert_eq!(identity.kernel, vec![0, 1]);
    let universal = kernel_and_trace(&t, &Congruence::universal(3)).unwrap();
    assert_eq!(universal.kernel, vec![0, 1, 2]);
    assert_eq!(congruence_from_pair(&t, &universal).unwrap(), Congruence::universal(3));
    let z4 = named::cyclic_group(4);
    let mod2 = Congruence::from_labels(&[0, 1, 0, 1]);
    let pair = kernel_and_trace(&z4, &mod2).unwrap();
    assert_eq!(pair.kernel, vec![0, 2]);
    assert_eq!(congruence_from_pair(&z4, &pair).unwrap(), mod2);
    let not_normal = CongruencePairData { kernel: vec![0, 1], trace: vec![vec![0]] };
    assert!(congruence_from_pair(&named::symmetric_group_3(), &not_normal).is_err());
}

#[test]
fn e_invariant_construction_and_extraction() {
    let t = m();
    let rho = Congruence::from_labels(&[0, 0, 1]);
    let gamma = ElementMap::new(vec![1, 1, 2]).unwrap();
    let s = construct_e_invariant(&t, &rho, &[1, 2], &gamma).unwrap();
    assert_eq!(s, endo_solution(&t, &gamma).unwrap());
    let d = extract_e_invariant_data(&s).unwrap();
    assert_eq!(d.pair.kernel, vec![0, 1]);
    assert_eq!(d.quotient_order, 2);
    assert!(d.theta_e_agree);
    assert!(matches!(
        construct_e_invariant(&t, &rho, &[0, 2], &ElementMap::new(vec![0, 0, 2]).unwrap()),
        Err(CliffordError::MuConditionFailed(..))
    ));
    let e = &canonical_clifford_solutions(&t).unwrap().constant[0].1;
    let d = extract_e_invariant_data(e).unwrap();
    assert_eq!((d.pair.kernel.len(), d.quotient_order), (3, 1));
}

#[test]
fn e_invariant_isomorphism() {
    let c = canonical_clifford_solutions(&m()).unwrap();
    let (e1, ex) = (&c.constant[0].1, &c.constant[1].1);
    assert!(e_invariant_isomorphic(e1, e1).unwrap().is_some());
    assert!(e_invariant_isomorphic(e1, ex).unwrap().is_none());
}

#[test]
fn every_e_invariant_solution_is_reconstructed() {
    let f = SearchFilter::none().with_name("e-invariant").unwrap();
    for n in 1..=4 {
        for t in enumerate_semigroups(n, true).unwrap() {
            if !analyze(&t).is_clifford {
                continue;
            }
            for th in enumerate_solutions(&t, &f) {
                let s = verify_solution(&t, &th).unwrap();
                assert!(extract_e_invariant_data(&s).unwrap().theta_e_agree, "{s:?}");
            }
        }
    }
}

#[test]
fn gluing() {
    let sl = named::semilattice_two();
    let one = kac_takesaki(&named::cyclic_group(1));
    let glued = glue_e_fixed(&sl, &[one.clone(), one], &Epsilon::default()).unwrap();
    assert_eq!(glued.solution, canonical_clifford_solutions(&sl).unwrap().identity);
    assert_eq!(e_fixed_kernel(&glued).unwrap(), vec![0, 1]);

    let t = m();
    let z1 = named::cyclic_group(1);
    let z2 = named::cyclic_group(2);
    let canon = canonical_clifford_solutions(&t).unwrap();
    let kt = glue_e_fixed(&t, &[kac_takesaki(&z1), kac_takesaki(&z2)], &Epsilon::default()).unwrap();
    assert_eq!(kt.solution, canon.identity);
    assert_eq!(e_fixed_kernel(&kt).unwrap(), vec![0, 1]);
    let constant = PeSolution::from_fn(&z2, |_, _| 0).unwrap();
    let f = glue_e_fixed(&t, &[kac_takesaki(&z1), constant], &Epsilon::default()).unwrap();
    assert!(invariance_flags(&f.solution).e_fixed);
    assert_eq!(f.solution, canon.f);
    assert_eq!(e_fixed_kernel(&f).unwrap(), vec![0, 1, 2]);
    assert!(glue_e_fixed(&t, &[kac_takesaki(&z1)], &Epsilon::default()).is_err());
}
