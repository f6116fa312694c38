//! Invariant checks over a whole semigroup, each reported as pass/fail.

use rand::Rng;

use crate::chop::chop;
use crate::cmp::{all_irreducibles, transversal_independence_check, Classification};
use crate::error::Result;
use crate::field::Field;
use crate::green::GreenStructure;
use crate::meataxe::SearchConfig;
use crate::module::Module;
use crate::semigroup::Semigroup;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn from(name: impl Into<String>, outcome: Result<(bool, String)>) -> Check {
        let (passed, detail) = outcome.unwrap_or_else(|e| (false, e.to_string()));
        Check {
            name: name.into(),
            passed,
            detail,
        }
    }
}

fn green_checks(s: &Semigroup, green: &GreenStructure, out: &mut Vec<Check>) {
    let n = s.size();
    let h_ok = (0..n).all(|x| {
        (0..n).all(|y| (green.h_of[x] == green.h_of[y]) == (green.r_of[x] == green.r_of[y] && green.l_of[x] == green.l_of[y]))
    });
    out.push(Check::from("green.h_is_r_meet_l", Ok((h_ok, String::new()))));
    let nested = (0..n).all(|x| {
        (0..n).all(|y| !(green.r_of[x] == green.r_of[y] || green.l_of[x] == green.l_of[y]) || green.j_of[x] == green.j_of[y])
    });
    out.push(Check::from("green.r_and_l_inside_j", Ok((nested, String::new()))));
    let regular_ok = (0..green.j_class_count()).all(|j| green.regular[j] == !green.idempotents_in(j).is_empty());
    out.push(Check::from("green.regular_iff_idempotent", Ok((regular_ok, String::new()))));
}

fn class_checks(s: &Semigroup, c: &Classification, out: &mut Vec<Check>) {
    for (pipe, _) in &c.classes {
        let j = pipe.data.j_class;
        for (label, rep) in [("right", &pipe.rho), ("left", &pipe.lambda)] {
            out.push(Check::from(format!("schutzenberger.{label}.monomial[J{j}]"), Ok((rep.is_monomial(), String::new()))));
            let fail = rep.multiplicativity_failure(s, &pipe.data.group);
            let detail = fail.map(|(a, b)| format!("fails at ({a}, {b})")).unwrap_or_default();
            out.push(Check::from(format!("schutzenberger.{label}.multiplicative[J{j}]"), Ok((fail.is_none(), detail))));
        }
    }
    for (i, r) in c.reports.iter().enumerate() {
        let tag = format!("J{}#{}", r.apex, i);
        let fail = r.simple.multiplicativity_failure(s);
        out.push(Check::from(format!("simple.multiplicative[{tag}]"), Ok((fail.is_none(), String::new()))));
        out.push(Check::from(
            format!("simple.induced_matches_coinduced[{tag}]"),
            Ok((r.iso_check && r.simple_dim == r.minimal_dim, format!("dim {}", r.simple_dim))),
        ));
        out.push(Check::from(
            format!("simple.radical_codimension[{tag}]"),
            Ok((r.induced_dim - r.radical_dim == r.simple_dim, format!("{} - {}", r.induced_dim, r.radical_dim))),
        ));
    }
    let expected = c.group_simple_total();
    out.push(Check::from(
        "classification.count",
        Ok((c.reports.len() == expected, format!("{} simples, {} group simples", c.reports.len(), expected))),
    ));
}

/// Distinct non-null composition factors of the regular module.
pub fn regular_factor_count<R: Rng + ?Sized>(s: &Semigroup, field: Field, cfg: &SearchConfig, rng: &mut R) -> Result<usize> {
    let factors = chop(&Module::regular(s, field), cfg, rng)?;
    Ok(factors.iter().filter(|f| !f.annihilated).count())
}

/// Runs every check; computation errors become failed checks.
pub fn verify<R: Rng + ?Sized>(s: &Semigroup, field: Field, cfg: &SearchConfig, rng: &mut R) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let regular = Module::regular(s, field);
    out.push(Check::from(
        "regular_module.multiplicative",
        Ok((regular.multiplicativity_failure(s).is_none(), String::new())),
    ));
    let classification = match all_irreducibles(s, field, cfg, rng) {
        Ok(c) => c,
        Err(e) if e.is_input_error() => return Err(e),
        Err(e) => {
            out.push(Check::from("classification", Err(e)));
            return Ok(out);
        }
    };
    green_checks(s, &classification.green, &mut out);
    class_checks(s, &classification, &mut out);
    let chopped = regular_factor_count(s, field, cfg, rng)
        .map(|k| (k == classification.reports.len(), format!("chop found {k}, construction found {}", classification.reports.len())));
    out.push(Check::from("classification.matches_chop", chopped));
    for (pipe, _) in &classification.classes {
        let j = pipe.data.j_class;
        let ok = transversal_independence_check(s, &classification.green, field, j, cfg, rng).map(|b| (b, String::new()));
        out.push(Check::from(format!("transversal_independence[J{j}]"), ok));
    }
    Ok(out)
}
