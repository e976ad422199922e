use super::*;
use crate::contiguity::{compose_a2_to_b2, compose_a2_to_b2p, matches_recurrence, same_up_to_scale, verify_relation};
use crate::families::FamilyId::*;
use crate::scalar::{int, ratio};

fn count(family: FamilyId, kind: RelationKind) -> usize {
    list_relations(family, kind).len()
}

#[test]
fn forms_resolve() {
    for e in all_entries() {
        for d in e.directions() {
            let f = e.form(d).unwrap().resolved().unwrap();
            assert!(!f.factor.has_refs() && f.terms.iter().all(|(_, t)| !t.has_refs()), "{}", e.id);
        }
    }
}

#[test]
fn entry_counts() {
    let a2 = [
        (QRacah, 4),
        (QHahn, 4),
        (DualQHahn, 3),
        (QuantumQKrawtchouk, 3),
        (QKrawtchouk, 3),
        (AffineQKrawtchouk, 3),
        (DualQKrawtchouk, 2),
        (Racah, 4),
        (Hahn, 4),
        (DualHahn, 3),
        (Krawtchouk, 2),
    ];
    for (f, n) in a2 {
        assert_eq!(count(f, RelationKind::A2), n, "{f}");
    }
    assert_eq!(a2.iter().map(|(_, n)| n).sum::<usize>(), 35);
    assert_eq!(count(QRacah, RelationKind::B2), 12);
    assert_eq!(count(QRacah, RelationKind::B2p), 10);
    assert_eq!(count(BannaiIto, RelationKind::BiRel), 5);
    assert_eq!(count(ComplementaryBannaiIto, RelationKind::BiRel), 5);
    assert_eq!(count(Generalized, RelationKind::GRel), 6);
    let ids: Vec<String> = all_entries().into_iter().map(|e| e.id).collect();
    for (k, id) in ids.iter().enumerate() {
        assert!(!ids[k + 1..].contains(id), "duplicate id {id}");
    }
}

#[test]
fn krawtchouk_value_frozen() {
    let e = find("KI").unwrap();
    let p = ParameterSet::new(Krawtchouk, 3).with(Param::Alpha, ratio(1, 2));
    let inst = instantiate(&e, &p).unwrap();
    assert_eq!(inst.plus.unwrap().coeff_at(0, 1).unwrap(), ratio(2, 3));
}

fn verify_all(entries: Vec<RelationEntry>, ns: core::ops::RangeInclusive<u32>, samples: usize) {
    let mut rng = SampleRng::seeded(17);
    for e in entries {
        for n in ns.clone() {
            if !e.parity_ok(n) || n < e.min_n() {
                continue;
            }
            let rep = verify_entry(&e, n, samples, &mut rng).unwrap_or_else(|err| panic!("{} N={n}: {err}", e.id));
            assert!(rep.pass() && rep.checked > 0, "{} N={n}: {:?} {:?} {}", e.id, rep.status, rep.residual_locus, rep.detail);
        }
    }
}

#[test]
fn a2_entries_verify() {
    verify_all(all_entries().into_iter().filter(|e| e.kind == RelationKind::A2).collect(), 2..=4, 1);
}

#[test]
fn qracah_tables_verify() {
    verify_all(all_entries().into_iter().filter(|e| matches!(e.kind, RelationKind::B2 | RelationKind::B2p)).collect(), 3..=4, 1);
}

#[test]
fn bi_entries_verify() {
    verify_all(all_entries().into_iter().filter(|e| e.kind == RelationKind::BiRel).collect(), 3..=6, 1);
}

#[test]
fn generalized_entries_verify() {
    verify_all(all_entries().into_iter().filter(|e| e.kind == RelationKind::GRel).collect(), 2..=4, 1);
}

#[test]
fn a2_matches_generic_up_to_scale() {
    let mut rng = SampleRng::seeded(3);
    for e in all_entries().into_iter().filter(|e| e.kind == RelationKind::A2) {
        let inst = sample_instance(&e, 4, &mut rng).unwrap();
        let shift = inst.shift.clone().unwrap();
        for d in e.directions() {
            let generic = crate::contiguity::generic_relation(&shift, RelationKind::A2, d, "generic").unwrap();
            assert!(same_up_to_scale(inst.relation(d).unwrap(), &generic).unwrap(), "{} {d:?}", e.id);
        }
    }
}

fn part_instance(id: &str, params: &ParameterSet) -> CatalogInstance {
    instantiate(&find(id).unwrap(), params).unwrap()
}

#[test]
fn b2_entries_are_compositions() {
    let mut rng = SampleRng::seeded(5);
    for e in list_relations(QRacah, RelationKind::B2) {
        let inst = sample_instance(&e, 4, &mut rng).unwrap();
        let (a, b) = e.parts.clone().unwrap();
        let first = part_instance(&a, &inst.base);
        // the minus part of `b` runs from its bar side `first.bar` back to its base `inst.bar`.
        let second = part_instance(&b, &inst.bar);
        assert_eq!(second.bar, first.bar, "{}", e.id);
        let composed = compose_a2_to_b2(first.plus.as_ref().unwrap(), second.minus.as_ref().unwrap()).unwrap();
        let r = verify_relation(&composed);
        assert!(r.pass(), "{} composed: {:?}", e.id, r.residual_locus);
        assert!(same_up_to_scale(&composed, inst.plus.as_ref().unwrap()).unwrap(), "{}", e.id);
    }
}

#[test]
fn b2p_entries_are_compositions() {
    let mut rng = SampleRng::seeded(6);
    for e in list_relations(QRacah, RelationKind::B2p) {
        let inst = sample_instance(&e, 4, &mut rng).unwrap();
        let (a, b) = e.parts.clone().unwrap();
        let first = part_instance(&a, &inst.base);
        let second = part_instance(&b, &first.bar);
        assert_eq!(second.bar, inst.bar, "{}", e.id);
        let composed = compose_a2_to_b2p(first.plus.as_ref().unwrap(), second.plus.as_ref().unwrap()).unwrap();
        assert!(same_up_to_scale(&composed, inst.plus.as_ref().unwrap()).unwrap(), "{}", e.id);
    }
}

#[test]
fn plus_then_own_minus_is_the_recurrence() {
    let mut rng = SampleRng::seeded(8);
    let inst = sample_instance(&find("qRI").unwrap(), 4, &mut rng).unwrap();
    let rel = crate::contiguity::compose(inst.plus.as_ref().unwrap(), inst.minus.as_ref().unwrap(), RelationKind::B2, "qRI+∘qRI-").unwrap();
    assert!(matches_recurrence(&rel).unwrap());
}

#[test]
fn correspondences() {
    assert_eq!(limit_correspondence("qRII", DualQHahn).unwrap(), "trivial");
    assert_eq!(limit_correspondence("qqKIII", Krawtchouk).unwrap(), "KII");
    assert_eq!(limit_correspondence("qRI", Racah).unwrap(), "RI");
    assert!(matches!(limit_correspondence("qRI", BannaiIto), Err(Error::UnknownCorrespondence(_))));
    for (src, target, label) in correspondence_table() {
        assert!(find(src).is_ok(), "{src}");
        if *label != "trivial" {
            assert_eq!(find(label).unwrap().family, *target);
        }
    }
}

#[test]
fn qracah_nu_points() {
    let p = ParameterSet::new(QRacah, 3)
        .with(Param::Alpha, ratio(1, 3))
        .with(Param::Beta, ratio(2, 5))
        .with(Param::Gamma, ratio(3, 7))
        .with(Param::Q, ratio(1, 2));
    let inst = instantiate(&find("qRI").unwrap(), &p).unwrap();
    assert_eq!(inst.nu, Some(SpectralPoint::Grid(3)));
    let inst = instantiate(&find("qRII").unwrap(), &p).unwrap();
    assert_eq!(inst.nu, Some(SpectralPoint::QPower(ratio(2, 5) * ratio(1, 16))));
    assert_eq!(inst.chi, Some(int(0)));
}

#[test]
fn parity_is_enforced() {
    let p = ParameterSet::new(BannaiIto, 3)
        .with(Param::Alpha, ratio(1, 3))
        .with(Param::Beta, ratio(2, 5))
        .with(Param::Gamma, ratio(3, 7));
    assert!(matches!(instantiate(&find("B1").unwrap(), &p), Err(Error::SingularParameters(_))));
    assert!(instantiate(&find("B3").unwrap(), &p).is_ok());
}

