use crate::CharError;
use qtorus::VLaurent;
use repcat::{Algebra, ExtClass, ExtSpace, Representation};
use submod_geometry::{checked_log_p, chains_of_type, grouped_images, FlagType};
use weightlib::{ChainCtx, WeightExpr};

/// `δ_L(d_{i,a})`: the number of chains of type `t` in `L`.
pub fn delta_eval(alg: &Algebra, l: &Representation, t: &FlagType) -> Result<u64, CharError> {
    Ok(chains_of_type(alg, l, t)?.len() as u64)
}

/// `Σ_{(c_M, c_N)} v^{2k(c_M, c_N) + 2w(M, N, c_M, c_N)}` over the image
/// pairs of the chains of type `t` in the middle term of `class`.
///
/// `space` is `Ext¹(M, N)` and `back` is `Ext¹(N, M)`; `l` must be
/// isomorphic to the middle term. Each image pair is hit by exactly
/// `p^{k(c_M, c_N)}` chains, so `k` is read off the group size.
pub fn weighted_delta_eval(
    alg: &Algebra,
    l: &Representation,
    space: &ExtSpace,
    back: &ExtSpace,
    class: &ExtClass,
    t: &FlagType,
    w: &WeightExpr,
) -> Result<VLaurent, CharError> {
    let middle = space.middle_term(class).middle;
    if *l != middle && !alg.is_isomorphic(l, &middle)? {
        return Err(CharError::NotMiddleTerm);
    }
    let mut acc = VLaurent::zero();
    for ((c_m, c_n), count) in grouped_images(alg, space, class, t)? {
        let k = checked_log_p(count as u64, alg.p())? as i64;
        let ctx = ChainCtx::new(alg, space, back, &c_m, &c_n);
        let h = w.eval_chains(&ctx)?;
        acc = &acc + &VLaurent::vpow(2 * k + h.v_exponent());
    }
    Ok(acc)
}
