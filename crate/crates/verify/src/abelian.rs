use crate::{Verdict, VerificationReport, VerifyError};
use character::weighted_delta_eval;
use qtorus::VLaurent;
use repcat::{Algebra, ExtSpace, Representation};
use serde_json::json;
use std::time::Instant;
use submod_geometry::{chains_of_type, phi_fiber_nonempty, FlagType};
use weightlib::{ChainCtx, WeightExpr, WeightName};

/// Two modules over one algebra, with a label for reports.
#[derive(Debug, Clone)]
pub struct AbelianPair<'a> {
    pub label: String,
    pub alg: &'a Algebra,
    pub m: Representation,
    pub n: Representation,
}

struct Spaces {
    mn: ExtSpace,
    nm: ExtSpace,
}

impl AbelianPair<'_> {
    fn spaces(&self) -> Spaces {
        Spaces { mn: self.alg.ext_space(&self.m, &self.n), nm: self.alg.ext_space(&self.n, &self.m) }
    }

    fn instance(&self, depth: usize) -> serde_json::Value {
        json!({ "label": self.label, "m": self.m.to_json(), "n": self.n.to_json(), "depth": depth })
    }
}

/// `Σ_{t' + t'' = t} Σ_{c_M, c_N} v^{2k(c_M, c_N) + 2w}` from the chains of
/// `M` and `N` separately.
fn product_side(pair: &AbelianPair<'_>, sp: &Spaces, t: &FlagType, w: &WeightExpr) -> Result<VLaurent, VerifyError> {
    let mut acc = VLaurent::zero();
    for (tm, tn) in t.splits() {
        let cms = chains_of_type(pair.alg, &pair.m, &tm)?;
        if cms.is_empty() {
            continue;
        }
        let cns = chains_of_type(pair.alg, &pair.n, &tn)?;
        for c_m in &cms {
            for c_n in &cns {
                let ctx = ChainCtx::new(pair.alg, &sp.mn, &sp.nm, c_m, c_n);
                let k = ctx.k_forward()? as i64;
                acc = &acc + &VLaurent::vpow(2 * k + w.eval_chains(&ctx)?.v_exponent());
            }
        }
    }
    Ok(acc)
}

/// `Σ_{[ε] ∈ ℙExt¹(X, Y)} (w * δ_{mt ε})(t)`, from chains of the middle terms.
fn projective_sum(
    alg: &Algebra,
    space: &ExtSpace,
    back: &ExtSpace,
    t: &FlagType,
    w: &WeightExpr,
) -> Result<VLaurent, VerifyError> {
    let mut acc = VLaurent::zero();
    for class in space.projective_classes() {
        let l = space.middle_term(&class).middle;
        acc = &acc + &weighted_delta_eval(alg, &l, space, back, &class, t, w)?;
    }
    Ok(acc)
}

fn named(w: WeightName) -> WeightExpr {
    WeightExpr::named(w)
}

/// Compares per-type sides at `v = √p`, recording the first difference and
/// whether the sides also agree as Laurent polynomials.
struct SideTable {
    p: u32,
    rows: Vec<(String, VLaurent, Vec<VLaurent>)>,
}

impl SideTable {
    fn new(p: u32) -> Self {
        Self { p, rows: Vec::new() }
    }

    fn push(&mut self, t: &FlagType, lhs: VLaurent, rhs: Vec<VLaurent>) {
        self.rows.push((t.to_string(), lhs, rhs));
    }

    fn apply(&self, rep: &mut VerificationReport, variants: &[&str]) {
        let mut formal = vec![true; variants.len()];
        for (t, lhs, rhs) in &self.rows {
            for (i, r) in rhs.iter().enumerate() {
                if r != lhs {
                    formal[i] = false;
                }
                if r.at_sqrt_p(self.p) != lhs.at_sqrt_p(self.p) {
                    rep.fail(json!({
                        "type": t,
                        "variant": variants[i],
                        "lhs": lhs.to_string(),
                        "rhs": r.to_string(),
                        "lhs_at_sqrt_p": lhs.at_sqrt_p(self.p).to_string(),
                        "rhs_at_sqrt_p": r.at_sqrt_p(self.p).to_string(),
                    }));
                }
            }
        }
        rep.lhs = self.rows.iter().map(|(t, l, _)| format!("{t}: {l}")).collect::<Vec<_>>().join("; ");
        rep.rhs = self
            .rows
            .iter()
            .map(|(t, _, r)| {
                let parts: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                format!("{t}: {}", parts.join(" | "))
            })
            .collect::<Vec<_>>()
            .join("; ");
        let formal_map: serde_json::Map<String, serde_json::Value> =
            variants.iter().zip(&formal).map(|(v, f)| (v.to_string(), json!(f))).collect();
        rep.details = json!({ "types": self.rows.len(), "formal_match": formal_map });
        rep.notes.push("sides compared exactly at v = √p; formal_match records Laurent equality".into());
    }
}

/// Both balanced variants of the multiplication theorem for `Ext¹(M, N)`,
/// on every type of length at most `depth`.
pub fn check_maintheorem1(
    pair: &AbelianPair<'_>,
    depth: usize,
    weights: (&WeightExpr, &WeightExpr),
) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    let sp = pair.spaces();
    if sp.mn.dim() == 0 {
        return Err(VerifyError::Precondition("the theorem requires Ext¹(M, N) ≠ 0".into()));
    }
    let base = weights.0.compose(weights.1);
    let pext = sp.mn.projective_classes().len() as i64;
    let f_plus = base.compose(&named(WeightName::FPlusExt));
    let f_hom = base.compose(&named(WeightName::FHom));
    let f_minus_hom = base.compose(&named(WeightName::FMinusExt)).compose(&named(WeightName::FHom));
    let mut table = SideTable::new(pair.alg.p());
    for t in FlagType::all_of_depth(pair.alg.n(), depth) {
        let lhs = product_side(pair, &sp, &t, &base)?.scale(pext);
        let v1 = &projective_sum(pair.alg, &sp.mn, &sp.nm, &t, &f_plus)?
            + &projective_sum(pair.alg, &sp.nm, &sp.mn, &t, &f_hom)?;
        let v2 = &projective_sum(pair.alg, &sp.mn, &sp.nm, &t, &base)?
            + &projective_sum(pair.alg, &sp.nm, &sp.mn, &t, &f_minus_hom)?;
        table.push(&t, lhs, vec![v1, v2]);
    }
    let mut rep = VerificationReport::new("maintheorem1", pair.instance(depth), pair.alg.p());
    table.apply(&mut rep, &["plus_ext/hom", "zero/minus_ext+hom"]);
    rep.notes.push(format!("weights: {} and {}", weights.0, weights.1));
    Ok(rep.finish(start))
}

/// `δ_M * δ_N = δ_L + f_hom * δ_{L'}` when both extension groups are lines.
pub fn check_onedim_delta(pair: &AbelianPair<'_>, depth: usize) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    let sp = pair.spaces();
    if sp.mn.dim() != 1 || sp.nm.dim() != 1 {
        return Err(VerifyError::Precondition(format!(
            "needs dim Ext¹(M, N) = dim Ext¹(N, M) = 1, got {} and {}",
            sp.mn.dim(),
            sp.nm.dim()
        )));
    }
    let eps = sp.mn.basis().remove(0);
    let eta = sp.nm.basis().remove(0);
    let l = sp.mn.middle_term(&eps).middle;
    let lp = sp.nm.middle_term(&eta).middle;
    let zero = WeightExpr::zero();
    let f_hom = named(WeightName::FHom);
    let mut table = SideTable::new(pair.alg.p());
    for t in FlagType::all_of_depth(pair.alg.n(), depth) {
        let lhs = product_side(pair, &sp, &t, &zero)?;
        let rhs = &weighted_delta_eval(pair.alg, &l, &sp.mn, &sp.nm, &eps, &t, &zero)?
            + &weighted_delta_eval(pair.alg, &lp, &sp.nm, &sp.mn, &eta, &t, &f_hom)?;
        table.push(&t, lhs, vec![rhs]);
    }
    let mut rep = VerificationReport::new("onedim-delta", pair.instance(depth), pair.alg.p());
    table.apply(&mut rep, &["onedim"]);
    rep.details["l"] = l.to_json();
    rep.details["l_prime"] = lp.to_json();
    Ok(rep.finish(start))
}

/// The chain-pair balance behind both variants: for every pair of chains
/// `(c_M, c_N)`, `[ℙExt¹(M, N)]·q^k` against the two weighted splits.
pub fn check_pointwise_balance(pair: &AbelianPair<'_>, depth: usize) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    let sp = pair.spaces();
    let alg = pair.alg;
    let p = alg.p();
    let (eps_classes, eta_classes) = (sp.mn.projective_classes(), sp.nm.projective_classes());
    let mut rep = VerificationReport::new("balance", pair.instance(depth), p);
    let (mut pairs, mut formal) = (0usize, [true, true]);
    let mut lines = Vec::new();
    for t in FlagType::all_of_depth(alg.n(), depth) {
        for (tm, tn) in t.splits() {
            let cms = chains_of_type(alg, &pair.m, &tm)?;
            let cns = chains_of_type(alg, &pair.n, &tn)?;
            for c_m in &cms {
                for c_n in &cns {
                    pairs += 1;
                    let eps = ChainCtx::new(alg, &sp.mn, &sp.nm, c_m, c_n);
                    let eta = ChainCtx::new(alg, &sp.nm, &sp.mn, c_n, c_m);
                    let k = eps.k_forward()? as i64;
                    let k_back = eta.k_forward()? as i64;
                    let mut n_eps = 0i64;
                    for c in &eps_classes {
                        n_eps += phi_fiber_nonempty(alg, &sp.mn, c, c_m, c_n)? as i64;
                    }
                    let mut n_eta = 0i64;
                    for c in &eta_classes {
                        n_eta += phi_fiber_nonempty(alg, &sp.nm, c, c_n, c_m)? as i64;
                    }
                    let (fp, fh, fm) = (eps.f_plus_ext()?, eta.f_hom()?, eta.f_minus_ext()?);
                    let lhs = VLaurent::monomial(eps_classes.len() as i64, 2 * k);
                    let v1 = &VLaurent::monomial(n_eps, 2 * k + fp.v_exponent())
                        + &VLaurent::monomial(n_eta, 2 * k_back + fh.v_exponent());
                    let v2 = &VLaurent::monomial(n_eps, 2 * k)
                        + &VLaurent::monomial(n_eta, 2 * k_back + fm.v_exponent() + fh.v_exponent());
                    for (i, v) in [&v1, &v2].into_iter().enumerate() {
                        formal[i] &= *v == lhs;
                        if v.at_sqrt_p(p) != lhs.at_sqrt_p(p) {
                            rep.fail(json!({
                                "type": t.to_string(),
                                "c_m": c_m.canonical_key(),
                                "c_n": c_n.canonical_key(),
                                "variant": i + 1,
                                "lhs": lhs.to_string(),
                                "rhs": v.to_string(),
                            }));
                        }
                    }
                    lines.push((lhs.to_string(), format!("{v1} | {v2}")));
                }
            }
        }
    }
    rep.lhs = lines.iter().map(|l| l.0.clone()).collect::<Vec<_>>().join("; ");
    rep.rhs = lines.iter().map(|l| l.1.clone()).collect::<Vec<_>>().join("; ");
    rep.details = json!({
        "chain_pairs": pairs,
        "formal_match": { "plus_ext/hom": formal[0], "zero/minus_ext+hom": formal[1] },
    });
    rep.notes.push("sides compared exactly at v = √p; formal_match records Laurent equality".into());
    Ok(rep.finish(start))
}

/// Weighted flag counts are unchanged when a class is scaled by a nonzero
/// scalar, for each listed weight.
pub fn check_scaling_invariance(
    pair: &AbelianPair<'_>,
    depth: usize,
    weights: &[WeightExpr],
) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    let sp = pair.spaces();
    let alg = pair.alg;
    let mut rep = VerificationReport::new("scaling", pair.instance(depth), alg.p());
    let mut evaluations = 0usize;
    for class in sp.mn.all_classes().into_iter().filter(|c| !c.is_zero()) {
        let l = sp.mn.middle_term(&class).middle;
        for t in FlagType::all_of_depth(alg.n(), depth) {
            for w in weights {
                let base = weighted_delta_eval(alg, &l, &sp.mn, &sp.nm, &class, &t, w)?;
                for s in 2..alg.p() {
                    let scaled = sp.mn.scale(&class, s);
                    let other = weighted_delta_eval(alg, &l, &sp.mn, &sp.nm, &scaled, &t, w)?;
                    evaluations += 1;
                    if other != base {
                        rep.fail(json!({
                            "class": class.coords,
                            "scalar": s,
                            "type": t.to_string(),
                            "weight": w.to_string(),
                            "lhs": base.to_string(),
                            "rhs": other.to_string(),
                        }));
                    }
                }
            }
        }
    }
    rep.lhs = format!("{evaluations} scaled evaluations");
    rep.rhs = if rep.verdict == Verdict::Pass { "all equal".into() } else { "difference found".into() };
    rep.details = json!({ "evaluations": evaluations });
    Ok(rep.finish(start))
}
