use exactlin::Subspace;
use proptest::prelude::*;
use quiver_core::{euler_matrix, Quiver};
use repcat::{Algebra, Representation};
use submod_geometry::{chains_of_type, Chain, FlagType};
use weightlib::{ChainCtx, ExponentData, Half, SubCtx, WeightError, WeightExpr, WeightName};

fn full(alg: &Algebra, m: &Representation) -> Vec<Subspace> {
    m.dims().iter().map(|&d| Subspace::full(alg.field(), d)).collect()
}

fn zero(alg: &Algebra, m: &Representation) -> Vec<Subspace> {
    m.dims().iter().map(|&d| Subspace::zero(alg.field(), d)).collect()
}

fn only_chain(alg: &Algebra, m: &Representation, t: &str) -> Chain {
    let mut cs = chains_of_type(alg, m, &FlagType::parse(t).unwrap()).unwrap();
    assert_eq!(cs.len(), 1);
    cs.pop().unwrap()
}

/// Preprojective A2 with `M = S1`, `N = S2` and the unique chain pair of
/// combined type `((1,2),(1,1))`.
struct Preproj {
    alg: Algebra,
    m: Representation,
    n: Representation,
}

impl Preproj {
    fn new() -> Self {
        let alg = Algebra::new(Quiver::preprojective_a2(), 2).unwrap();
        let (m, n) = (alg.simple(1), alg.simple(2));
        Self { alg, m, n }
    }
}

#[test]
fn preprojective_chain_weights() {
    let pp = Preproj::new();
    let ext_mn = pp.alg.ext_space(&pp.m, &pp.n);
    let ext_nm = pp.alg.ext_space(&pp.n, &pp.m);
    let c_m = only_chain(&pp.alg, &pp.m, "1,2;1,0");
    let c_n = only_chain(&pp.alg, &pp.n, "1,2;0,1");
    // ε-side arguments (M, N, c_M, c_N).
    let eps = ChainCtx::new(&pp.alg, &ext_mn, &ext_nm, &c_m, &c_n);
    assert_eq!(eps.f_plus_ext().unwrap(), Half(0));
    // η-side arguments (N, M, c_N, c_M).
    let eta = ChainCtx::new(&pp.alg, &ext_nm, &ext_mn, &c_n, &c_m);
    assert_eq!(eta.f_hom().unwrap(), Half(0));
    assert_eq!(eta.f_minus_ext().unwrap(), Half(2));
    let both = WeightExpr::named(WeightName::FHom).compose(&WeightExpr::named(WeightName::FMinusExt));
    assert_eq!(both.eval_chains(&eta).unwrap(), Half(2));
    assert_eq!(WeightExpr::zero().eval_chains(&eta).unwrap(), Half(0));
}

#[test]
fn symmetric_arguments_have_zero_f_hom() {
    let pp = Preproj::new();
    let ext = pp.alg.ext_space(&pp.m, &pp.m);
    for t in ["1;1", "1,2;1,0", "2,1;0,1"] {
        for c in chains_of_type(&pp.alg, &pp.m, &FlagType::parse(t).unwrap()).unwrap() {
            let ctx = ChainCtx::new(&pp.alg, &ext, &ext, &c, &c);
            assert_eq!(ctx.f_hom().unwrap(), Half(0));
        }
    }
}

#[test]
fn empty_chains_on_zero_modules() {
    let alg = Algebra::new(Quiver::preprojective_a2(), 2).unwrap();
    let z = alg.zero_rep();
    let ext = alg.ext_space(&z, &z);
    let c = Chain::empty(&alg);
    let ctx = ChainCtx::new(&alg, &ext, &ext, &c, &c);
    assert_eq!(ctx.f_hom().unwrap(), Half(0));
    assert_eq!(ctx.f_plus_ext().unwrap(), Half(0));
    assert_eq!(ctx.f_minus_ext().unwrap(), Half(0));
}

#[test]
fn incompatible_chain_pair_has_full_plus_weight() {
    // Over hereditary A2 the split chain pair (0 ⊂ S1 ⊂ S1⊕S2) of type
    // ((2,1),(1,1)) only lives on the split extension.
    let alg = Algebra::new(Quiver::linear_a(2), 2).unwrap();
    let (m, n) = (alg.simple(1), alg.simple(2));
    let ext_mn = alg.ext_space(&m, &n);
    let ext_nm = alg.ext_space(&n, &m);
    let c_m = only_chain(&alg, &m, "2,1;0,1");
    let c_n = only_chain(&alg, &n, "2,1;1,0");
    let ctx = ChainCtx::new(&alg, &ext_mn, &ext_nm, &c_m, &c_n);
    assert_eq!(ext_mn.dim(), 1);
    assert_eq!(ctx.f_minus_ext().unwrap(), Half(0));
    assert_eq!(ctx.f_plus_ext().unwrap(), Half(2));
}

#[test]
fn chain_weights_reject_submodule_names() {
    let pp = Preproj::new();
    let ext = pp.alg.ext_space(&pp.m, &pp.n);
    let back = pp.alg.ext_space(&pp.n, &pp.m);
    let c_m = only_chain(&pp.alg, &pp.m, "1,2;1,0");
    let c_n = only_chain(&pp.alg, &pp.n, "1,2;0,1");
    let ctx = ChainCtx::new(&pp.alg, &ext, &back, &c_m, &c_n);
    let err = WeightExpr::named(WeightName::GSkew).eval_chains(&ctx).unwrap_err();
    assert!(matches!(err, WeightError::WrongDomain { .. }));
}

#[test]
fn orthogonality_on_preprojective_sweep() {
    let pp = Preproj::new();
    let (m, n) = (&pp.m, &pp.n);
    let ext_mn = pp.alg.ext_space(m, n);
    let ext_nm = pp.alg.ext_space(n, m);
    let mut checked = 0;
    for t in FlagType::all_of_depth(2, 3) {
        for (tm, tn) in t.splits() {
            for c_m in chains_of_type(&pp.alg, m, &tm).unwrap() {
                for c_n in chains_of_type(&pp.alg, n, &tn).unwrap() {
                    let o = ChainCtx::new(&pp.alg, &ext_mn, &ext_nm, &c_m, &c_n).orthogonality().unwrap();
                    assert!(o.holds(), "{t}: {o:?}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn l_dim_examples() {
    let alg = Algebra::new(Quiver::linear_a(2), 2).unwrap();
    let s1 = alg.simple(1);
    let s2 = alg.simple(2);
    let p1 = alg.projective(1).unwrap();
    assert_eq!(SubCtx::new(&alg, &p1, &s1, &zero(&alg, &p1), &zero(&alg, &s1)).l_dim().unwrap(), 0);
    assert_eq!(SubCtx::new(&alg, &s1, &p1, &full(&alg, &s1), &full(&alg, &p1)).l_dim().unwrap(), 0);
    assert_eq!(SubCtx::new(&alg, &s1, &s1, &full(&alg, &s1), &zero(&alg, &s1)).l_dim().unwrap(), 1);
    assert_eq!(SubCtx::new(&alg, &s1, &s2, &full(&alg, &s1), &zero(&alg, &s2)).l_dim().unwrap(), 0);
}

#[test]
fn exponent_weights_on_a2() {
    let q = Quiver::linear_a(2);
    let alg = Algebra::new(q.clone(), 2).unwrap();
    let (s1, s2) = (alg.simple(1), alg.simple(2));
    let (m0, n0) = (zero(&alg, &s1), zero(&alg, &s2));
    let data = ExponentData {
        lambda: vec![vec![0, 1], vec![-1, 0]],
        euler: euler_matrix(&q).unwrap(),
        p_m: vec![-1, 0],
        p_n: vec![1, -1],
    };
    let ctx = SubCtx::new(&alg, &s1, &s2, &m0, &n0).with_exponents(data);
    assert_eq!(ctx.g_skew().unwrap(), Half(2));
    assert_eq!(ctx.g_mn().unwrap(), Half(1));
    assert_eq!(ctx.g_mn().unwrap().to_string(), "1/2");
    assert_eq!(ctx.g_sigma().unwrap(), Half(0));
    let bare = SubCtx::new(&alg, &s1, &s2, &m0, &n0);
    assert!(matches!(bare.g_skew(), Err(WeightError::MissingExponents(_))));
}

#[test]
fn g_sigma_on_a2_projective() {
    // L = P1 = (1,1), L0 = S2 = (0,1): −½⟨(0,1),(1,0)⟩ = 0; L0 = 0 gives 0.
    let q = Quiver::linear_a(2);
    let alg = Algebra::new(q.clone(), 2).unwrap();
    let z = alg.zero_rep();
    let p1 = alg.projective(1).unwrap();
    let e = euler_matrix(&q).unwrap();
    let sub = vec![Subspace::zero(alg.field(), 1), Subspace::full(alg.field(), 1)];
    let z0 = zero(&alg, &z);
    let ctx = SubCtx::new(&alg, &z, &p1, &z0, &sub).with_euler(e.clone());
    assert_eq!(ctx.g_sigma().unwrap(), Half(0));
    // S1⊕S1 with L0 = one copy: −½⟨e1, e1⟩ = −½.
    let s1 = alg.simple(1);
    let ss = alg.direct_sum(&s1, &s1);
    let line = vec![Subspace::span(alg.field(), 2, &[vec![1, 0]]), Subspace::zero(alg.field(), 0)];
    let ctx = SubCtx::new(&alg, &z, &ss, &z0, &line).with_euler(e);
    assert_eq!(ctx.g_sigma().unwrap(), Half(-1));
}

#[test]
fn module_extension_weights_on_a2() {
    // ε ∈ Ext¹(S1, S2) is compatible with (M0, N0) = (S1, S2) in both the
    // split and nonsplit case; the reverse group is zero.
    let alg = Algebra::new(Quiver::linear_a(2), 2).unwrap();
    let (s1, s2) = (alg.simple(1), alg.simple(2));
    let (m0, n0) = (full(&alg, &s1), full(&alg, &s2));
    let ctx = SubCtx::new(&alg, &s1, &s2, &m0, &n0);
    assert_eq!(ctx.g_minus_ext().unwrap(), Half(2));
    assert_eq!(ctx.g_plus_ext().unwrap(), Half(0));
    // (M0, N0) = (S1, 0) only survives the split extension.
    let n0 = zero(&alg, &s2);
    let ctx = SubCtx::new(&alg, &s1, &s2, &m0, &n0);
    assert_eq!(ctx.g_minus_ext().unwrap(), Half(0));
}

#[test]
fn user_table_lookup() {
    let alg = Algebra::new(Quiver::linear_a(2), 2).unwrap();
    let s1 = alg.simple(1);
    let (m0, n0) = (full(&alg, &s1), zero(&alg, &s1));
    let ctx = SubCtx::new(&alg, &s1, &s1, &m0, &n0).with_ids("a", "b");
    let key = ctx.key();
    let w = WeightExpr::from_table_json(&format!("{{\"{key}\": 3}}")).unwrap();
    assert_eq!(w.eval_submodules(&ctx).unwrap(), Half(3));
    let other = SubCtx::new(&alg, &s1, &s1, &n0, &m0).with_ids("a", "b");
    assert!(matches!(w.eval_submodules(&other), Err(WeightError::MissingKey(_))));
    assert!(WeightExpr::from_table_json("[1]").is_err());
}

#[test]
fn composed_tables_add() {
    let alg = Algebra::new(Quiver::linear_a(2), 2).unwrap();
    let s1 = alg.simple(1);
    let (m0, n0) = (full(&alg, &s1), zero(&alg, &s1));
    let ctx = SubCtx::new(&alg, &s1, &s1, &m0, &n0);
    let key = ctx.key();
    let a = WeightExpr::from_table_json(&format!("{{\"{key}\": 3}}")).unwrap();
    let b = WeightExpr::from_table_json(&format!("{{\"{key}\": -1}}")).unwrap();
    let ab = a.compose(&b).compose(&WeightExpr::named(WeightName::LDim));
    assert_eq!(ab.eval_submodules(&ctx).unwrap(), Half(2 + 2));
    assert_eq!(ab.support_term(), Some(WeightName::LDim));
}

#[test]
fn names_roundtrip() {
    let w: WeightExpr = "f_hom + f_minus_ext".parse().unwrap();
    assert_eq!(w.terms, vec![WeightName::FHom, WeightName::FMinusExt]);
    assert_eq!(w.to_string(), "f_hom+f_minus_ext");
    assert_eq!("g_MN".parse::<WeightName>().unwrap(), WeightName::GMn);
    assert!("g_mn".parse::<WeightName>().is_err());
    let json = serde_json::to_string(&WeightExpr::named(WeightName::GMn)).unwrap();
    assert_eq!(json, r#"{"terms":["g_MN"]}"#);
}

const SUB_NAMES: [WeightName; 6] = [
    WeightName::Zero,
    WeightName::GSkew,
    WeightName::GMn,
    WeightName::GSigma,
    WeightName::LDim,
    WeightName::GMinusExt,
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn compose_is_pointwise_sum(xs in prop::collection::vec(0usize..6, 0..4),
                                ys in prop::collection::vec(0usize..6, 0..4),
                                pick in 0usize..4) {
        let q = Quiver::linear_a(2);
        let alg = Algebra::new(q.clone(), 2).unwrap();
        let l = alg.projective(1).unwrap();
        let s1 = alg.simple(1);
        let subs_l = [zero(&alg, &l), full(&alg, &l)];
        let subs_s = [zero(&alg, &s1), full(&alg, &s1)];
        let data = ExponentData {
            lambda: vec![vec![0, 1], vec![-1, 0]],
            euler: euler_matrix(&q).unwrap(),
            p_m: vec![1, -2],
            p_n: vec![0, 3],
        };
        let ctx = SubCtx::new(&alg, &l, &s1, &subs_l[pick % 2], &subs_s[pick / 2])
            .with_exponents(data);
        let w1 = WeightExpr { terms: xs.iter().map(|&i| SUB_NAMES[i]).collect(), user_table: None };
        let w2 = WeightExpr { terms: ys.iter().map(|&i| SUB_NAMES[i]).collect(), user_table: None };
        let a = w1.eval_submodules(&ctx).unwrap();
        let b = w2.eval_submodules(&ctx).unwrap();
        prop_assert_eq!(w1.compose(&w2).eval_submodules(&ctx).unwrap(), a + b);
        prop_assert_eq!(w2.compose(&w1).eval_submodules(&ctx).unwrap(), a + b);
        prop_assert_eq!(WeightExpr::zero().compose(&w1).eval_submodules(&ctx).unwrap(), a);
    }
}
