//! The built-in verification suite, one group of checks per criterion.

use std::time::{Duration, Instant};

use serde_json::{json, Value};

use crate::beck::{all_modules, beck_unit, beck_universal_all};
use crate::crude::{chi, compose_recover, CrudeWreath};
use crate::error::{Error, Result};
use crate::extensions::{check_morphism, sections, Extension};
use crate::fixtures;
use crate::free_product::l_of_extension;
use crate::group::{enumerate_homs, is_isomorphic};
use crate::kk_embed::{
    eta_split, kk_embed, translation_equivariance_failures, universal_factorization, verify_embedding, MorphismRef,
};
use crate::lie::{lie_coinduced, pbw_straighten, verify_lie_embedding};
use crate::linalg::q;
use crate::report::{CheckEntry, Report, Status};
use crate::wreath::{r_on_morphism, wreath_product};

pub const CRITERIA: usize = 11;
pub const SUITE_TIME_LIMIT: Duration = Duration::from_secs(60);

pub(crate) fn failed(id: &str, statement: &str, err: &Error) -> CheckEntry {
    CheckEntry::new(id, statement, Status::Fail, json!({"error": err.to_string()}))
}

pub(crate) fn guarded(id: &str, statement: &str, body: impl FnOnce() -> Result<(bool, Value)>) -> CheckEntry {
    match body() {
        Ok((ok, witnesses)) => CheckEntry::check(id, statement, ok, witnesses),
        Err(e) => failed(id, statement, &e),
    }
}

/// Classical embedding of `Z2 -> Z4 -> Z2` for every section.
pub fn criterion_1() -> Vec<CheckEntry> {
    let e = fixtures::z4_over_z2();
    let start = Instant::now();
    let mut entries = vec![guarded(
        "c1.kk_embed_z4",
        "every section of Z2 -> Z4 -> Z2 gives an injective embedding into Z2 wr Z2 of order 8 with image of order 4",
        || {
            let mut rows = Vec::new();
            let mut ok = true;
            for s in sections(&e) {
                let kk = kk_embed(&e, &s)?;
                let report = verify_embedding(MorphismRef::Plain(&kk.morphism));
                let good = report.all_ok() && kk.wreath.order() == 8 && kk.image_order() == 4;
                ok &= good;
                rows.push(json!({"section": s.map(), "wreath_order": kk.wreath.order(), "image_order": kk.image_order(), "ok": good}));
            }
            ok &= rows.len() == 4;
            Ok((ok, json!(rows)))
        },
    )];
    let elapsed = start.elapsed();
    entries.push(CheckEntry::check(
        "c1.runtime",
        "the four embeddings are built and verified in under one second",
        elapsed < Duration::from_secs(1),
        json!({"limit_ms": 1000}),
    ));
    entries
}

/// Small wreath products and the split embedding of `S3`.
pub fn criterion_2() -> Vec<CheckEntry> {
    let z2 = fixtures::cyclic(2);
    let z3 = fixtures::cyclic(3);
    vec![
        guarded("c2.z2_wr_z2_is_d4", "Z2 wr Z2 is isomorphic to D4", || {
            let w = wreath_product(&z2, &z2)?;
            let iso = is_isomorphic(w.group(), &fixtures::d4())?;
            Ok((iso.is_some(), json!({"isomorphism": iso.map(|h| h.map().to_vec())})))
        }),
        guarded("c2.z3_wr_z2_order", "Z3 wr Z2 has order 18", || {
            let w = wreath_product(&z3, &z2)?;
            Ok((w.order() == 18, json!({"order": w.order()})))
        }),
        guarded(
            "c2.s3_eta",
            "S3 embeds into Z3 wr Z2 through the split unit with image of order 6",
            || {
                let split = fixtures::s3_split();
                let (w, eta) = eta_split(&split)?;
                let report = verify_embedding(MorphismRef::Split(&eta));
                let image = eta.phi_g().image().order();
                Ok((
                    report.all_ok() && image == 6 && w.order() == 18,
                    json!({"image_order": image}),
                ))
            },
        ),
    ]
}

/// Translation equivariance of the split unit on `S3` and `D4`.
pub fn criterion_3() -> Vec<CheckEntry> {
    [("s3_split", fixtures::s3_split()), ("d4_split", fixtures::d4_split())]
        .into_iter()
        .map(|(name, split)| {
            guarded(
                &format!("c3.equivariance.{name}"),
                "translating phi_A(a) by b equals phi_A(a^b) for every a and b",
                || {
                    let (w, eta) = eta_split(&split)?;
                    let failures = translation_equivariance_failures(&eta, &w);
                    let pairs = split.ext().a().order() * split.ext().b().order();
                    Ok((
                        failures.is_empty(),
                        json!({"pairs_checked": pairs, "failures": failures}),
                    ))
                },
            )
        })
        .collect()
}

/// The universal property of the wreath product for `S3` over `Z2`.
pub fn criterion_4() -> Vec<CheckEntry> {
    vec![guarded(
        "c4.universality_s3",
        "every morphism R(gamma) . eta into Z3 wr Z2 factors through exactly one gamma, and it is recovered",
        || {
            let split = fixtures::s3_split();
            let a = split.ext().a().clone();
            let wa = wreath_product(&a, split.ext().b())?;
            let wc = wreath_product(&a, split.ext().b())?;
            let (_, eta) = eta_split(&split)?;
            let mut rows = Vec::new();
            let mut recovered = 0;
            for gamma in enumerate_homs(&a, &a)? {
                let alpha = r_on_morphism(&wa, &wc, &gamma)?.after(&eta)?;
                let fact = universal_factorization(&split, &alpha, &wc)?;
                let ok = fact.alpha_bar.map() == gamma.map() && fact.satisfiers == 1;
                recovered += usize::from(ok);
                rows.push(
                    json!({"gamma": gamma.map(), "recovered": fact.alpha_bar.map(), "satisfiers": fact.satisfiers}),
                );
            }
            Ok((recovered == 3 && rows.len() == 3, json!({"round_trips": rows})))
        },
    )]
}

fn presentation_check(name: &str, e: &Extension, maxlen: usize, max_gens: usize) -> CheckEntry {
    guarded(
        &format!("c5.presentation.{name}"),
        &format!(
            "phi . psi is the identity on kernel words of length <= {maxlen} and psi . phi is the normal form on words with <= {max_gens} generators"
        ),
        || {
            let l = l_of_extension(e);
            let words = l.kernel_words(maxlen)?;
            let mut word_mismatches = Vec::new();
            for w in &words {
                if l.pres_to_word(&l.word_to_pres(w)?) != *w {
                    word_mismatches.push(w.to_string());
                }
            }
            let pres = l.pres_words(max_gens, crate::free_product::DEFAULT_WORD_BUDGET)?;
            let mut pres_mismatches = Vec::new();
            for p in &pres {
                if l.word_to_pres(&l.pres_to_word(p))? != l.normal_form(p) {
                    pres_mismatches.push(p.to_string());
                }
            }
            let ok = word_mismatches.is_empty() && pres_mismatches.is_empty();
            Ok((
                ok,
                json!({
                    "kernel_words": words.len(),
                    "pres_words": pres.len(),
                    "word_mismatches": word_mismatches,
                    "pres_mismatches": pres_mismatches,
                }),
            ))
        },
    )
}

/// The presentation of the kernel of the fold map.
pub fn criterion_5() -> Vec<CheckEntry> {
    vec![
        presentation_check("z2_identity", &fixtures::z2_identity(), 8, 4),
        presentation_check("z4_over_z2", &fixtures::z4_over_z2(), 6, 3),
    ]
}

/// `chi` relations and recovery of the classical embedding.
pub fn criterion_6() -> Vec<CheckEntry> {
    fixtures::extension_fixtures()
        .into_iter()
        .filter(|(_, e)| e.g().order() <= 8)
        .map(|(name, e)| {
            guarded(
                &format!("c6.chi_recovery.{name}"),
                "for every section chi satisfies all |G|^2 |B| relations and W(chi) . upsilon equals the classical embedding",
                || {
                    let expected = e.g().order() * e.g().order() * e.b().order();
                    let mut mismatches = Vec::new();
                    let all = sections(&e);
                    for s in &all {
                        let c = chi(&e, s)?;
                        if c.relations_checked() != expected {
                            mismatches.push(json!({"section": s.map(), "relations": c.relations_checked()}));
                        }
                        let r = compose_recover(&e, s)?;
                        let kk = kk_embed(&e, s)?;
                        for g in e.g().elements() {
                            if r.element(g) != kk.element(g) {
                                mismatches.push(json!({"section": s.map(), "g": g}));
                            }
                        }
                    }
                    Ok((
                        mismatches.is_empty(),
                        json!({"sections": all.len(), "relations_per_section": expected, "mismatches": mismatches}),
                    ))
                },
            )
        })
        .collect()
}

/// The crude unit is an injective homomorphism.
pub fn criterion_7() -> Vec<CheckEntry> {
    fixtures::extension_fixtures()
        .into_iter()
        .map(|(name, e)| {
            guarded(
                &format!("c7.upsilon.{name}"),
                "upsilon is an injective homomorphism, checked on every pair in G x G",
                || {
                    let pairs = CrudeWreath::new(&e).verify_upsilon()?;
                    let n = e.g().order();
                    Ok((pairs == n * n, json!({"pairs": pairs})))
                },
            )
        })
        .collect()
}

/// Two distinct morphisms of extensions with the same kernel component.
pub fn criterion_8() -> Vec<CheckEntry> {
    vec![guarded(
        "c8.kernel_functor_not_faithful",
        "the identity and beta on Z2 -> Z2 x Z2 -> Z2 are both morphisms and agree on the kernel",
        || {
            let (id, beta) = fixtures::klein_morphisms();
            let e = fixtures::klein_over_z2();
            let accepted = [&id, &beta]
                .iter()
                .all(|m| check_morphism(&e, &e, m.phi_a().map().to_vec(), m.phi_g().map().to_vec()).is_ok());
            let same_kernel = id.phi_a() == beta.phi_a();
            let distinct = id.phi_g() != beta.phi_g();
            Ok((
                accepted && same_kernel && distinct,
                json!({"beta": beta.phi_g().map(), "kernel_component": beta.phi_a().map()}),
            ))
        },
    )]
}

/// The unit and universal property of coinduced modules for groups.
pub fn criterion_9() -> Vec<CheckEntry> {
    let groups: Vec<_> = fixtures::small_groups().into_iter().filter(|g| g.order() > 1).collect();
    let abelian: Vec<_> = groups.iter().filter(|g| g.is_abelian()).cloned().collect();
    let mut units = Vec::new();
    let mut lifts = 0usize;
    let mut errors = Vec::new();
    let mut modules = 0usize;
    for b in &groups {
        for m in &abelian {
            let all = match all_modules(b, m) {
                Ok(all) => all,
                Err(e) => {
                    errors.push(json!({"B": b.name(), "M": m.name(), "error": e.to_string()}));
                    continue;
                }
            };
            for module in all {
                modules += 1;
                match beck_unit(&module) {
                    Ok(u) if u.map().is_injective() => {}
                    Ok(_) => {
                        units.push(json!({"B": b.name(), "M": m.name(), "rho": module.rho(), "error": "not injective"}))
                    }
                    Err(e) => {
                        units.push(json!({"B": b.name(), "M": m.name(), "rho": module.rho(), "error": e.to_string()}))
                    }
                }
                for a in &abelian {
                    match beck_universal_all(&module, a) {
                        Ok(all) => {
                            for (gamma, lift) in all {
                                if lift.satisfiers == 1 {
                                    lifts += 1;
                                } else {
                                    errors.push(json!({"gamma": gamma.map(), "satisfiers": lift.satisfiers}));
                                }
                            }
                        }
                        Err(e) => errors.push(json!({"B": b.name(), "M": m.name(), "A": a.name(), "rho": module.rho(), "error": e.to_string()})),
                    }
                }
            }
        }
    }
    let inversion = guarded(
        "c9.unit.z3_inversion",
        "the unit of Z3 with inversion is injective and equivariant",
        || {
            let u = beck_unit(&fixtures::z3_inversion_module())?;
            Ok((u.map().is_injective(), json!({"unit": u.map().map()})))
        },
    );
    vec![
        CheckEntry::check(
            "c9.unit",
            "the unit into the coinduced module is injective and equivariant for every module with |M| <= 4 and |B| <= 4",
            units.is_empty() && modules > 0,
            json!({"modules": modules, "failures": units}),
        ),
        inversion,
        CheckEntry::check(
            "c9.universal",
            "every gamma: M -> A lifts to exactly one equivariant map into the coinduced module",
            errors.is_empty() && lifts > 0,
            json!({"round_trips": lifts, "failures": errors}),
        ),
    ]
}

/// Lie algebra embeddings, coinduced modules and straightening.
pub fn criterion_10() -> Vec<CheckEntry> {
    const D: usize = 3;
    let mut entries = Vec::new();

    match verify_lie_embedding(&fixtures::lie_aff1().0, &fixtures::lie_aff1().1, D) {
        Ok(checks) => {
            let ok = checks.iter().all(|c| c.status == Status::Pass);
            let ids: Vec<_> = checks.iter().map(|c| json!({"id": c.id, "status": c.status})).collect();
            entries.push(CheckEntry::check(
                "c10.aff1",
                "on aff(1) every embedding check passes, including the homomorphism law",
                ok,
                json!(ids),
            ));
        }
        Err(e) => entries.push(failed("c10.aff1", "on aff(1) every embedding check passes", &e)),
    }

    let (h3, s) = fixtures::lie_heisenberg();
    match verify_lie_embedding(&h3, &s, D) {
        Ok(checks) => {
            for c in &checks {
                if c.id == "lie.homomorphism_law" {
                    let at_unit = c.witnesses["defects"]
                        .as_array()
                        .is_some_and(|d| d.iter().any(|x| x["monomial"] == "1"));
                    entries.push(CheckEntry::new(
                        "c10.h3.homomorphism_law",
                        "on h3 the homomorphism law is not asserted; its defect at the empty monomial is reported",
                        if c.status == Status::Informational && at_unit {
                            Status::Informational
                        } else {
                            Status::Fail
                        },
                        c.witnesses.clone(),
                    ));
                } else {
                    entries.push(CheckEntry::new(
                        format!("c10.h3.{}", c.id.trim_start_matches("lie.")),
                        c.statement.clone(),
                        c.status,
                        c.witnesses.clone(),
                    ));
                }
            }
        }
        Err(e) => entries.push(failed("c10.h3", "h3 embedding checks", &e)),
    }

    match fixtures::lie_module_fixtures() {
        Ok(mods) => {
            for (name, module, gamma) in mods {
                entries.push(guarded(
                    &format!("c10.coinduced.{name}"),
                    "the unit is injective and equivariant, and each linear map lifts uniquely through evaluation",
                    || {
                        let b = module.base().clone();
                        let unit_side = lie_coinduced(&b, module.dim(), D);
                        let (injective, equivariant) = unit_side.unit_checks(&module)?;
                        let cert = lie_coinduced(&b, gamma.len(), D).certify(&module, &gamma)?;
                        Ok((
                            injective && equivariant && cert.all_ok(),
                            json!({"unit_injective": injective, "unit_equivariant": equivariant, "certificate": cert}),
                        ))
                    },
                ));
            }
        }
        Err(e) => entries.push(failed("c10.coinduced", "Lie module fixtures", &e)),
    }

    let b = fixtures::lie_solvable();
    let first = pbw_straighten(&b, &[1, 0], D);
    let second = pbw_straighten(&b, &[1, 1, 0], D);
    let ok = first.terms.len() == 2
        && first.coefficient(&[0, 1]) == q(1)
        && first.coefficient(&[1]) == q(-1)
        && second.terms.len() == 2
        && second.coefficient(&[0, 1, 1]) == q(1)
        && second.coefficient(&[1, 1]) == q(-2);
    entries.push(CheckEntry::check(
        "c10.pbw",
        "with [b1, b2] = b2, b2 b1 straightens to b1 b2 - b2 and b2 b2 b1 to b1 b2^2 - 2 b2^2",
        ok,
        json!({"b2 b1": first.to_string(), "b2 b2 b1": second.to_string()}),
    ));
    entries
}

pub fn criterion(n: usize) -> Vec<CheckEntry> {
    match n {
        1 => criterion_1(),
        2 => criterion_2(),
        3 => criterion_3(),
        4 => criterion_4(),
        5 => criterion_5(),
        6 => criterion_6(),
        7 => criterion_7(),
        8 => criterion_8(),
        9 => criterion_9(),
        10 => criterion_10(),
        _ => Vec::new(),
    }
}

/// Runs every criterion and finally checks the total running time.
pub fn run_suite() -> Report {
    let start = Instant::now();
    let mut report = Report::new("suite");
    for n in 1..CRITERIA {
        report.extend(criterion(n));
    }
    report.push(CheckEntry::check(
        "c11.runtime",
        "the whole suite finishes in under 60 seconds",
        start.elapsed() < SUITE_TIME_LIMIT,
        json!({"limit_s": SUITE_TIME_LIMIT.as_secs()}),
    ));
    report
}
