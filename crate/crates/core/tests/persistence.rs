// SPDX-License-Identifier: Apache-2.0

//! JSON documents: the bundled models, schema rejections and the
//! save→load→save fixpoint.

mod common;

use std::fs;

use common::{ising, models_dir, same_under};
use fuselift::fusion::ring_validate;
use fuselift::io::{self, Document};
use fuselift::{catalog, Error, Ext, Inverse, Problem, Ring, Space};
use num_bigint::BigInt;

fn read(name: &str) -> String {
    fs::read_to_string(models_dir().join(name)).unwrap()
}

#[test]
fn bundled_models_load_and_validate() {
    let mut seen = 0;
    for entry in fs::read_dir(models_dir()).unwrap() {
        let path = entry.unwrap().path();
        let text = fs::read_to_string(&path).unwrap();
        match io::read_document(&text).unwrap() {
            Document::Ring(d) => assert!(ring_validate(&d.to_ring::<BigInt>().unwrap()).is_ok()),
            Document::Space(d) => assert!(d.to_space::<BigInt>().unwrap().is_nondegenerate()),
            Document::Extension(d) => {
                Ext::new(d.to_problem::<BigInt>().unwrap()).unwrap();
            }
            Document::Inverse(d) => {
                d.to_problem::<BigInt>().unwrap().derive().unwrap();
            }
        }
        seen += 1;
    }
    assert!(seen >= 8);
}

#[test]
fn bundled_ising_is_the_hand_ring() {
    let r: Ring = io::ring_from_json(&read("ising.ring.json")).unwrap();
    assert!(same_under(&r, &ising(), &[0, 1, 2]));
}

#[test]
fn generated_models_are_current() {
    let pairs: [(&str, String); 5] = [
        (
            "sl2k2.ring.json",
            io::ring_to_json(&catalog::affine_sl2::<BigInt>(2).unwrap()),
        ),
        (
            "z4.space.json",
            io::space_to_json(&catalog::lattice_rank1::<BigInt>(2, 1).unwrap().space),
        ),
        (
            "pf3.ext.json",
            io::extension_to_json(&catalog::parafermion_problem::<BigInt>(3).unwrap()),
        ),
        (
            "sl2k3.inv.json",
            io::inverse_to_json(&catalog::sl2_inverse_problem::<BigInt>(3).unwrap()),
        ),
        (
            "k2s1.ext.json",
            io::extension_to_json(
                &catalog::deform(
                    &io::extension_from_json::<BigInt>(&read("k2.ext.json")).unwrap(),
                    1,
                )
                .unwrap(),
            ),
        ),
    ];
    for (name, json) in pairs {
        assert_eq!(read(name), json, "{name}");
    }
}

#[test]
fn negative_multiplicity_is_a_parse_error() {
    let text = read("ising.ring.json").replacen("\"n\": 1", "\"n\": -1", 1);
    assert!(matches!(
        io::ring_from_json::<BigInt>(&text),
        Err(Error::Parse(_) | Error::Json(_))
    ));
}

#[test]
fn unknown_fields_and_labels_are_rejected() {
    let extra = read("z4.space.json").replacen("{", "{\n  \"colour\": 1,", 1);
    assert!(io::space_from_json::<BigInt>(&extra)
        .unwrap_err()
        .is_input_error());
    let typo = read("ising.ring.json").replacen("\"a\": \"sigma\"", "\"a\": \"sigmaa\"", 1);
    assert!(io::ring_from_json::<BigInt>(&typo).is_err());
}

#[test]
fn save_load_save_is_a_fixpoint() {
    for name in [
        "ising.ring.json",
        "k2.ext.json",
        "trivial.ext.json",
        "sl2k2.inv.json",
        "z4.space.json",
    ] {
        let text = read(name);
        let once = match io::read_document(&text).unwrap() {
            Document::Ring(d) => io::ring_to_json(&d.to_ring::<BigInt>().unwrap()),
            Document::Space(d) => io::space_to_json::<BigInt>(&d.to_space().unwrap()),
            Document::Extension(d) => io::extension_to_json::<BigInt>(&d.to_problem().unwrap()),
            Document::Inverse(d) => io::inverse_to_json::<BigInt>(&d.to_problem().unwrap()),
        };
        let twice = match io::read_document(&once).unwrap() {
            Document::Ring(d) => io::ring_to_json(&d.to_ring::<BigInt>().unwrap()),
            Document::Space(d) => io::space_to_json::<BigInt>(&d.to_space().unwrap()),
            Document::Extension(d) => io::extension_to_json::<BigInt>(&d.to_problem().unwrap()),
            Document::Inverse(d) => io::inverse_to_json::<BigInt>(&d.to_problem().unwrap()),
        };
        assert_eq!(once, twice, "{name}");
    }
}

#[test]
fn documents_survive_a_round_trip() {
    let p: Problem = io::extension_from_json(&read("k2.ext.json")).unwrap();
    let again: Problem = io::extension_from_json(&io::extension_to_json(&p)).unwrap();
    assert_eq!(again.d(), p.d());
    assert_eq!(again.v().q_values(), p.v().q_values());
    let ip: Inverse = io::inverse_from_json(&read("sl2k2.inv.json")).unwrap();
    let again: Inverse = io::inverse_from_json(&io::inverse_to_json(&ip)).unwrap();
    assert_eq!(again.branching(), ip.branching());
    let s: Space = io::space_from_json(&read("z4.space.json")).unwrap();
    assert_eq!(s.q_values().len(), 4);
}

#[test]
fn tables_are_deterministic() {
    let render = || {
        let e =
            Ext::new(io::extension_from_json::<BigInt>(&read("pf4.ext.json")).unwrap()).unwrap();
        let t = e.sector_table().unwrap();
        (
            io::sector_table_text(&e, &t, true),
            io::sector_table_json(&e, &t, true),
        )
    };
    assert_eq!(render(), render());
}
