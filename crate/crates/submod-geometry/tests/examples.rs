use exactlin::Subspace;
use quiver_core::Quiver;
use repcat::{Algebra, Representation};
use submod_geometry::{
    chain_image, chains_of_type, compatible_dim, grassmannian_count, k_rank, phi_fiber,
    refined_fiber, refined_socle_top, submodules_of_dim, Chain, FlagType, GeomError, Mode,
};

fn flag(s: &str) -> FlagType {
    FlagType::parse(s).unwrap()
}

fn full(alg: &Algebra, m: &Representation) -> Vec<Subspace> {
    m.dims().iter().map(|&d| Subspace::full(alg.field(), d)).collect()
}

fn zero(alg: &Algebra, m: &Representation) -> Vec<Subspace> {
    m.dims().iter().map(|&d| Subspace::zero(alg.field(), d)).collect()
}

fn kronecker_12(alg: &Algebra) -> Representation {
    alg.rep(&[1, 2], &[("a", vec![vec![1], vec![0]]), ("b", vec![vec![0], vec![1]])]).unwrap()
}

#[test]
fn kronecker_grassmannians() {
    let alg = Algebra::new(Quiver::kronecker(), 2).unwrap();
    let m = kronecker_12(&alg);
    assert_eq!(grassmannian_count(&alg, &m, &[0, 1]).unwrap(), 3);
    assert_eq!(grassmannian_count(&alg, &m, &[1, 1]).unwrap(), 0);
    assert_eq!(grassmannian_count(&alg, &m, &[1, 2]).unwrap(), 1);
    assert_eq!(grassmannian_count(&alg, &m, &[0, 0]).unwrap(), 1);
    // Over GF(3) the vertex-2 lines number p + 1.
    let alg3 = Algebra::new(Quiver::kronecker(), 3).unwrap();
    assert_eq!(grassmannian_count(&alg3, &kronecker_12(&alg3), &[0, 1]).unwrap(), 4);
}

#[test]
fn a2_grassmannians() {
    let alg = Algebra::new(Quiver::linear_a(2), 2).unwrap();
    let p1 = alg.projective(1).unwrap();
    assert_eq!(grassmannian_count(&alg, &p1, &[0, 1]).unwrap(), 1);
    assert_eq!(grassmannian_count(&alg, &p1, &[1, 0]).unwrap(), 0);
    assert_eq!(grassmannian_count(&alg, &p1, &[1, 1]).unwrap(), 1);
    let z = alg.zero_rep();
    assert_eq!(grassmannian_count(&alg, &z, &[0, 0]).unwrap(), 1);
    assert_eq!(grassmannian_count(&alg, &p1, &[2, 0]).unwrap(), 0);
}

#[test]
fn submodules_are_listed_in_canonical_order() {
    let alg = Algebra::new(Quiver::kronecker(), 3).unwrap();
    let m = kronecker_12(&alg);
    let subs = submodules_of_dim(&alg, &m, &[0, 1]).unwrap();
    let mut sorted = subs.clone();
    sorted.sort();
    assert_eq!(subs, sorted);
    assert!(subs.iter().all(|f| alg.is_invariant(&m, f)));
}

#[test]
fn refined_fiber_examples() {
    let alg = Algebra::new(Quiver::linear_a(2), 2).unwrap();
    let (s1, s2) = (alg.simple(1), alg.simple(2));
    let space = alg.ext_space(&s1, &s2);
    let eps = space.all_classes().into_iter().find(|c| !c.is_zero()).unwrap();
    let ext = space.middle_term(&eps);
    let fib = refined_fiber(&alg, &ext, &full(&alg, &s1), &full(&alg, &s2)).unwrap();
    assert_eq!(fib, vec![full(&alg, &ext.middle)]);
    assert!(refined_fiber(&alg, &ext, &full(&alg, &s1), &zero(&alg, &s2)).unwrap().is_empty());

    let split = alg.ext_space(&s1, &s1);
    let ext = split.middle_term(&split.zero_class());
    let fib = refined_fiber(&alg, &ext, &full(&alg, &s1), &zero(&alg, &s1)).unwrap();
    assert_eq!(fib.len(), 2);
}

#[test]
fn chain_examples() {
    let alg = Algebra::new(Quiver::linear_a(2), 2).unwrap();
    let p1 = alg.projective(1).unwrap();
    let cs = chains_of_type(&alg, &p1, &flag("1,2;1,1")).unwrap();
    assert_eq!(cs.len(), 1);
    assert_eq!(cs[0].dims(), vec![vec![1, 1], vec![0, 1], vec![0, 0]]);
    assert!(chains_of_type(&alg, &p1, &flag("2,1;1,1")).unwrap().is_empty());
    assert_eq!(chains_of_type(&alg, &alg.simple(1), &flag("1;1")).unwrap().len(), 1);
    // Unset flags repeat a level.
    let cs = chains_of_type(&alg, &p1, &flag("2,1,2;0,1,1")).unwrap();
    assert_eq!(cs.len(), 1);
    assert_eq!(cs[0].levels[0], cs[0].levels[1]);
    // Dimension mismatch gives no chains.
    assert!(chains_of_type(&alg, &p1, &flag("1;1")).unwrap().is_empty());
}

#[test]
fn semisimple_chain_count_is_full_flag_count() {
    // S1 ⊕ S1 ⊕ S1 at p = 2: complete flags in GF(2)^3 number 3 · 7 = 21.
    let alg = Algebra::new(Quiver::linear_a(2), 2).unwrap();
    let s1 = alg.simple(1);
    let l = alg.direct_sum(&alg.direct_sum(&s1, &s1), &s1);
    assert_eq!(chains_of_type(&alg, &l, &flag("1,1,1;1,1,1")).unwrap().len(), 21);
}

#[test]
fn chain_image_splits_preprojective_type() {
    let alg = Algebra::new(Quiver::preprojective_a2(), 2).unwrap();
    let (s1, s2) = (alg.simple(1), alg.simple(2));
    let space = alg.ext_space(&s1, &s2);
    assert_eq!(space.dim(), 1);
    let eps = space.basis()[0].clone();
    let ext = space.middle_term(&eps);
    let cs = chains_of_type(&alg, &ext.middle, &flag("1,2;1,1")).unwrap();
    assert_eq!(cs.len(), 1);
    let (cm, cn) = chain_image(&ext, &cs[0]);
    assert_eq!(cm.flag, flag("1,2;1,0"));
    assert_eq!(cn.flag, flag("1,2;0,1"));
    assert_eq!(cm.dims(), vec![vec![1, 0], vec![0, 0], vec![0, 0]]);
    assert_eq!(cn.dims(), vec![vec![0, 1], vec![0, 1], vec![0, 0]]);

    assert_eq!(phi_fiber(&alg, &space, &eps, &cm, &cn).unwrap().len(), 1);
    assert_eq!(phi_fiber(&alg, &space, &space.zero_class(), &cm, &cn).unwrap().len(), 1);
    assert_eq!(k_rank(&alg, &space, &cm, &cn).unwrap(), 0);
    assert_eq!(compatible_dim(&alg, &space, &cm, &cn).unwrap(), 1);
}

#[test]
fn split_chain_image_recovers_factors() {
    let alg = Algebra::new(Quiver::linear_a(2), 3).unwrap();
    let (s1, s2) = (alg.simple(1), alg.simple(2));
    let space = alg.ext_space(&s1, &s2);
    let ext = space.middle_term(&space.zero_class());
    let cs = chains_of_type(&alg, &ext.middle, &flag("2,1;1,1")).unwrap();
    assert_eq!(cs.len(), 1);
    let (cm, cn) = chain_image(&ext, &cs[0]);
    assert_eq!(cm, chains_of_type(&alg, &s1, &flag("2,1;0,1")).unwrap()[0]);
    assert_eq!(cn, chains_of_type(&alg, &s2, &flag("2,1;1,0")).unwrap()[0]);
    // Removing vertex 2 first is impossible in a nonsplit extension.
    assert_eq!(compatible_dim(&alg, &space, &cm, &cn).unwrap(), 0);
}

#[test]
fn empty_chain_of_zero_module() {
    let alg = Algebra::new(Quiver::linear_a(2), 2).unwrap();
    let z = alg.zero_rep();
    let space = alg.ext_space(&z, &z);
    let ext = space.middle_term(&space.zero_class());
    let cs = chains_of_type(&alg, &z, &flag(";")).unwrap();
    assert_eq!(cs, vec![Chain::empty(&alg)]);
    let (cm, cn) = chain_image(&ext, &cs[0]);
    assert_eq!((cm.len(), cn.len()), (0, 0));
}

#[test]
fn phi_fiber_rejects_mismatched_types() {
    let alg = Algebra::new(Quiver::linear_a(2), 2).unwrap();
    let (s1, s2) = (alg.simple(1), alg.simple(2));
    let space = alg.ext_space(&s1, &s2);
    let cm = chains_of_type(&alg, &s1, &flag("1;1")).unwrap().remove(0);
    let cn = chains_of_type(&alg, &s2, &flag("2;1")).unwrap().remove(0);
    assert!(matches!(
        phi_fiber(&alg, &space, &space.zero_class(), &cm, &cn),
        Err(GeomError::TypeMismatch(_))
    ));
}

#[test]
fn socle_and_top_series() {
    let alg = Algebra::new(Quiver::linear_a(2), 2).unwrap();
    let p1 = alg.projective(1).unwrap();
    let s = refined_socle_top(&alg, &p1, &[1, 2], Mode::Soc);
    let dims: Vec<Vec<usize>> = s.levels.iter().map(|f| f.iter().map(Subspace::dim).collect()).collect();
    assert_eq!(dims, vec![vec![1, 1], vec![0, 1], vec![0, 0]]);
    assert_eq!(s.steps(), vec![1, 1]);

    let s = refined_socle_top(&alg, &alg.simple(1), &[2], Mode::Soc);
    assert_eq!(s.steps(), vec![0]);
    assert_eq!(s.top_dims(), vec![0, 0]);

    let z = refined_socle_top(&alg, &alg.zero_rep(), &[1, 2, 1], Mode::Top);
    assert!(z.levels.iter().all(|f| f.iter().all(|u| u.dim() == 0)));

    // Top of P1 at vertex 2 is zero; at vertex 1 it peels off S1.
    let t = refined_socle_top(&alg, &p1, &[2, 1, 2], Mode::Top);
    assert_eq!(t.steps(), vec![0, 1, 1]);
}
