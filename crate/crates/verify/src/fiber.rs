use crate::{VerificationReport, VerifyError};
use exactlin::Subspace;
use quiver_core::Quiver;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use repcat::{Algebra, Representation};
use serde_json::json;
use std::time::Instant;
use submod_geometry::{all_submodules, family_dims, psi_image, refined_fiber, subspace_key};
use weightlib::SubCtx;

/// One refined-fiber query: a class in `Ext¹(M, N)` and submodules
/// `M0 ⊆ M`, `N0 ⊆ N`.
#[derive(Debug, Clone)]
pub struct FiberInstance {
    pub label: String,
    pub alg: Algebra,
    pub m: Representation,
    pub n: Representation,
    pub class_coords: Vec<u32>,
    pub m0: Vec<Subspace>,
    pub n0: Vec<Subspace>,
}

impl FiberInstance {
    fn describe(&self) -> serde_json::Value {
        let fam = |f: &[Subspace]| f.iter().map(subspace_key).collect::<Vec<_>>();
        json!({
            "label": self.label,
            "p": self.alg.p(),
            "m": self.m.to_json(),
            "n": self.n.to_json(),
            "class": self.class_coords,
            "m0": fam(&self.m0),
            "n0": fam(&self.n0),
        })
    }
}

/// Checks that every refined fiber is empty or has exactly
/// `p^{dim Hom(M0, N/N0)}` members, all of one dimension vector.
pub fn check_fiber_law(instances: &[FiberInstance]) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    let p = instances.first().map_or(0, |i| i.alg.p());
    let labels: Vec<&str> = instances.iter().map(|i| i.label.as_str()).collect();
    let mut rep = VerificationReport::new("fiber-law", json!({ "instances": labels }), p);
    let (mut empty, mut nonempty) = (0usize, 0usize);
    let mut counts = Vec::new();
    for inst in instances {
        let space = inst.alg.ext_space(&inst.m, &inst.n);
        let ext = space.middle_term(&space.from_coords(&inst.class_coords));
        let fiber = refined_fiber(&inst.alg, &ext, &inst.m0, &inst.n0)?;
        let l = SubCtx::new(&inst.alg, &inst.m, &inst.n, &inst.m0, &inst.n0).l_dim()?;
        let expected = (inst.alg.p() as u64).pow(l as u32);
        let count = fiber.len() as u64;
        counts.push(count);
        let same_dims = fiber.windows(2).all(|w| family_dims(&w[0]) == family_dims(&w[1]));
        if count == 0 {
            empty += 1;
        } else {
            nonempty += 1;
        }
        if (count != 0 && count != expected) || !same_dims {
            rep.fail(json!({ "instance": inst.describe(), "count": count, "expected": expected }));
        }
    }
    rep.lhs = format!("{counts:?}");
    rep.rhs = format!("each count in {{0, p^l}}; {nonempty} nonempty, {empty} empty");
    Ok(rep.finish(start))
}

/// The three worked fiber examples over hereditary A2 at `p = 2`.
pub fn hand_fiber_instances() -> Vec<FiberInstance> {
    let alg = Algebra::new(Quiver::linear_a(2), 2).expect("A2 is valid");
    let (s1, s2) = (alg.simple(1), alg.simple(2));
    let full = |m: &Representation| m.dims().iter().map(|&d| Subspace::full(alg.field(), d)).collect::<Vec<_>>();
    let zero = |m: &Representation| m.dims().iter().map(|&d| Subspace::zero(alg.field(), d)).collect::<Vec<_>>();
    vec![
        FiberInstance {
            label: "a2/nonsplit/S1,S2".into(),
            alg: alg.clone(),
            m: s1.clone(),
            n: s2.clone(),
            class_coords: vec![1],
            m0: full(&s1),
            n0: full(&s2),
        },
        FiberInstance {
            label: "a2/nonsplit/S1,0".into(),
            alg: alg.clone(),
            m: s1.clone(),
            n: s2.clone(),
            class_coords: vec![1],
            m0: full(&s1),
            n0: zero(&s2),
        },
        FiberInstance {
            label: "a2/split/S1+S1".into(),
            alg: alg.clone(),
            m: s1.clone(),
            n: s1.clone(),
            class_coords: vec![],
            m0: full(&s1),
            n0: zero(&s1),
        },
    ]
}

/// Seeded random instances over A2, A3 and the Kronecker quiver at
/// `p ∈ {2, 3}`, with at most two dimensions per vertex.
pub fn random_fiber_instances(seed: u64, count: usize) -> Vec<FiberInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let quivers = [("a2", Quiver::linear_a(2)), ("a3", Quiver::linear_a(3)), ("k2", Quiver::kronecker())];
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let (qname, q) = &quivers[rng.gen_range(0..quivers.len())];
        let p = [2u32, 3][rng.gen_range(0..2)];
        let alg = Algebra::new(q.clone(), p).expect("catalog quivers are valid");
        let max = if *qname == "a2" { 2 } else { 1 };
        let draw = |rng: &mut ChaCha8Rng| {
            let dims: Vec<usize> = (0..alg.n()).map(|_| rng.gen_range(0..=max)).collect();
            let mut next = || rng.gen_range(0..p);
            alg.rep_from_source(&dims, &mut next).expect("hereditary draws are valid")
        };
        let m = draw(&mut rng);
        let n = draw(&mut rng);
        let space = alg.ext_space(&m, &n);
        let class_coords: Vec<u32> = (0..space.dim()).map(|_| rng.gen_range(0..p)).collect();
        // Half the draws come from a submodule of the middle term, so the
        // fiber is known to be nonempty.
        let (m0, n0) = if rng.gen_bool(0.5) {
            let ext = space.middle_term(&space.from_coords(&class_coords));
            let subs = all_submodules(&alg, &ext.middle).expect("small modules");
            psi_image(&ext, &subs[rng.gen_range(0..subs.len())])
        } else {
            let subs_m = all_submodules(&alg, &m).expect("small modules");
            let subs_n = all_submodules(&alg, &n).expect("small modules");
            (subs_m[rng.gen_range(0..subs_m.len())].clone(), subs_n[rng.gen_range(0..subs_n.len())].clone())
        };
        let label = format!("random/{}/{qname}/p{p}", out.len());
        out.push(FiberInstance { label, alg, m, n, class_coords, m0, n0 });
    }
    out
}
