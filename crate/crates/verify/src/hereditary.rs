use crate::{VerificationReport, VerifyError};
use character::{Characters, ClusterObject};
use qtorus::{solve_two_term, Coefficient};
use quiver_core::lambda_form;
use repcat::Representation;
use serde_json::json;
use std::time::Instant;

/// Objects `M`, `N` with `dim Hom_𝒞(M, ΣN) = 1` and the two middle terms
/// `L`, `L'` of the exchange triangles.
#[derive(Debug, Clone)]
pub struct ExchangeTriple {
    pub label: String,
    pub m: ClusterObject,
    pub n: ClusterObject,
    pub l: ClusterObject,
    pub l_prime: ClusterObject,
}

fn show(c: &Coefficient) -> String {
    match c.pure_power {
        Some(k) => format!("v^{k}"),
        None => c.value.to_string(),
    }
}

/// Solves `X̃_M · X̃_N = a·X̃_L + b·X̃_{L'}` and classifies `(a, b)`.
///
/// The verdict is pass iff both scalars are single powers of `v`. The report
/// records which of the two predicted exponent pairs they match:
/// `(λ(ind M, ind N) − 1, λ(ind M, ind N))` and
/// `(λ(ind M, ind L), λ(ind M, ind L'))`.
pub fn check_exchange_hereditary(chars: &Characters<'_>, t: &ExchangeTriple) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    let hom = chars.hom_c_dim(&t.m, &t.n);
    if hom != 1 {
        return Err(VerifyError::Precondition(format!("dim Hom(M, ΣN) = {hom}, expected 1")));
    }
    let p = chars.algebra().p();
    let prod = chars.tilde_character(&t.m)?.mul(&chars.tilde_character(&t.n)?).map_err(character::CharError::from)?;
    let a = chars.tilde_character(&t.l)?;
    let b = chars.tilde_character(&t.l_prime)?;
    let instance = json!({
        "label": t.label,
        "m": t.m.to_json(),
        "n": t.n.to_json(),
        "l": t.l.to_json(),
        "l_prime": t.l_prime.to_json(),
        "lambda": chars.lambda(),
    });
    let mut rep = VerificationReport::new("exchange", instance, p);
    rep.lhs = prod.canonical_string();
    rep.degenerate = t.l.is_zero() || t.l_prime.is_zero() || (t.l.is_module() && t.l_prime.is_module());
    let ind_m = chars.index(&t.m)?;
    let lam = |x: &ClusterObject| -> Result<i64, VerifyError> {
        Ok(lambda_form(chars.lambda(), &ind_m, &chars.index(x)?))
    };
    let l_mn = lam(&t.n)?;
    let pair_pred = (l_mn - 1, l_mn);
    let summand_pred = (lam(&t.l)?, lam(&t.l_prime)?);
    match solve_two_term(&prod, &a, &b) {
        None => {
            rep.rhs = format!("no two-term decomposition over ({a}) and ({b})");
            rep.fail(json!({ "product": rep.lhs, "a": a.canonical_string(), "b": b.canonical_string() }));
        }
        Some(sol) => {
            rep.scalars = vec![show(&sol.a), show(&sol.b)];
            rep.rhs = format!("({}) * [{}] + ({}) * [{}]", sol.a.value, a, sol.b.value, b);
            let got = sol.a.pure_power.zip(sol.b.pure_power);
            if got.is_none() {
                rep.fail(json!({ "scalars": rep.scalars }));
            }
            rep.details = json!({
                "lambda_ind_m_ind_n": l_mn,
                "pair_form": { "predicted": [pair_pred.0, pair_pred.1], "matches": got == Some(pair_pred) },
                "summand_form": { "predicted": [summand_pred.0, summand_pred.1], "matches": got == Some(summand_pred) },
            });
        }
    }
    if rep.degenerate {
        rep.notes.push("degenerate: L or L' is zero, or neither involves a shifted projective".into());
    }
    Ok(rep.finish(start))
}

/// Compares `½λ(p(M, e), p(N, f))` with
/// `½λ(ind M, ind N) + ½⟨f, m⟩ − ½⟨e, n⟩ + ½⟨e, f⟩ − ½⟨f, e⟩` on every pair of
/// submodule dimension vectors of every listed module pair.
pub fn check_exponent_identity(
    chars: &Characters<'_>,
    pairs: &[(String, Representation, Representation)],
) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    let labels: Vec<&str> = pairs.iter().map(|p| p.0.as_str()).collect();
    let mut rep = VerificationReport::new("exponent-id", json!({ "pairs": labels, "lambda": chars.lambda() }), chars.algebra().p());
    let (mut checked, mut mismatched) = (0usize, 0usize);
    let (mut lhs, mut rhs) = (Vec::new(), Vec::new());
    for (label, m, n) in pairs {
        for s in chars.exponent_sides(m, n)? {
            checked += 1;
            lhs.push(s.lhs.to_string());
            rhs.push(s.rhs.to_string());
            if s.lhs != s.rhs {
                mismatched += 1;
                rep.fail(json!({
                    "pair": label,
                    "e": s.e,
                    "f": s.f,
                    "lhs": s.lhs.to_string(),
                    "rhs": s.rhs.to_string(),
                }));
            }
        }
    }
    rep.lhs = lhs.join(", ");
    rep.rhs = rhs.join(", ");
    rep.details = json!({ "checked": checked, "mismatched": mismatched });
    Ok(rep.finish(start))
}
