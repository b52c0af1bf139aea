//! Grid-wide checks: smash formulas, the closed action, rewriting
//! confluence and equivariance of the actions.

use bihom::exactnum::RationalFunction as Rf;
use bihom::report::{CheckReport, Witness};
use bihom::Scalar;

use crate::error::Result;
use crate::pbw::{normalize_with, straighten, words, Gen, PBWElement, Strategy};
use crate::qplane::{alpha_a, beta_a, classical_action, qplane_action, twisted_action, QPElement};
use crate::smash::verify_smash_formulas;
use crate::twist::{pbw_witness, TwistParams};

/// The right factors `G ∈ {1, E, F, K}` used on the grid.
pub fn right_factors() -> Vec<PBWElement> {
    let mut gs = vec![PBWElement::one()];
    gs.extend([Gen::E, Gen::F, Gen::K].map(PBWElement::generator));
    gs
}

/// All `(m, n, r, s) ∈ {0..=max}⁴` against every `G` in `gs`.
pub fn verify_smash_grid(max: u32, gs: &[PBWElement], tp: &TwistParams, bound: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new();
    for m in 0..=max {
        for n in 0..=max {
            for r in 0..=max {
                for s in 0..=max {
                    for g in gs {
                        report.merge("", verify_smash_formulas((m, n, r, s), g, tp, bound)?);
                    }
                }
            }
        }
    }
    Ok(report)
}

fn qp_witness(indices: Vec<usize>, a: &QPElement, b: &QPElement) -> Option<Witness> {
    let key = a
        .terms()
        .chain(b.terms())
        .map(|(k, _)| *k)
        .find(|&(m, n)| a.coeff(m, n) != b.coeff(m, n))?;
    Some(Witness::new(
        indices,
        vec![Scalar::Function(a.coeff(key.0, key.1))],
        vec![Scalar::Function(b.coeff(key.0, key.1))],
    ))
}

fn monomials(max: u32, bound: usize) -> impl Iterator<Item = (u32, u32, QPElement)> {
    (0..=max).flat_map(move |m| {
        (0..=max).map(move |n| {
            let p = QPElement::monomial(bound, m, n, Rf::one()).expect("within bound");
            (m, n, p)
        })
    })
}

/// The closed generator action against `α(h)·β_𝔸(a)` on `xᵐyⁿ`, `m, n ≤ max`.
pub fn verify_action_grid(max: u32, tp: &TwistParams, bound: usize) -> CheckReport {
    let mut report = CheckReport::new();
    for g in Gen::ALL {
        for (m, n, p) in monomials(max, bound) {
            let lhs = qplane_action(g, &p, tp);
            let rhs = twisted_action(tp, &PBWElement::generator(g), &p);
            let name = format!("rho({}⊗x^{m}y^{n})", g.symbol());
            report.record(name, qp_witness(vec![m as usize, n as usize], &lhs, &rhs));
        }
    }
    report
}

/// Leftmost and rightmost rewriting, and straightening, agree on every word
/// of length at most `max_len`. One entry per length.
pub fn check_confluence(max_len: usize) -> CheckReport {
    let mut report = CheckReport::new();
    for len in 0..=max_len {
        let mut failure = None;
        for w in words(len) {
            let left = normalize_with(&w, Strategy::Leftmost);
            let right = normalize_with(&w, Strategy::Rightmost);
            failure = pbw_witness(&left, &right).or_else(|| pbw_witness(&left, &straighten(&w)));
            if failure.is_some() {
                break;
            }
        }
        report.record(format!("confluence(length={len})"), failure);
    }
    report
}

/// `α_𝔸(h·a) = α(h)·α_𝔸(a)`, the same for `β`, and the analogues for `▷`,
/// on generators and monomials with `m, n ≤ max`.
pub fn check_equivariance(max: u32, tp: &TwistParams, bound: usize) -> CheckReport {
    let mut report = CheckReport::new();
    let (alpha, beta) = (tp.alpha(), tp.beta());
    type Act<'a> = Box<dyn Fn(&PBWElement, &QPElement) -> QPElement + 'a>;
    let actions: [(&str, Act); 2] = [
        ("·", Box::new(classical_action)),
        ("▷", Box::new(|h, p| twisted_action(tp, h, p))),
    ];
    for (sym, act) in &actions {
        for (name, map_h, map_a) in [
            ("alpha", &alpha, alpha_a as fn(&TwistParams, &QPElement) -> QPElement),
            ("beta", &beta, beta_a),
        ] {
            let mut failure = None;
            'outer: for g in Gen::ALL {
                let h = PBWElement::generator(g);
                for (m, n, p) in monomials(max, bound) {
                    let lhs = map_a(tp, &act(&h, &p));
                    let rhs = act(&map_h.apply(&h), &map_a(tp, &p));
                    failure = qp_witness(vec![m as usize, n as usize], &lhs, &rhs);
                    if failure.is_some() {
                        break 'outer;
                    }
                }
            }
            report.record(format!("{name}_A(h{sym}a)={name}(h){sym}{name}_A(a)"), failure);
        }
    }
    report
}
