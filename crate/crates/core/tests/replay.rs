use std::process::Command;

use topolab::lab::sweep::{Instance, Outcome};
use topolab::lab::{enumerate_maps, replay, spaces_up_to, verify_theorem, SweepOptions, TheoremId, Witness};
use topolab::FiniteMap;

fn r1_4_witness() -> Witness {
    let report = verify_theorem(TheoremId::R1_4, Some(2), &SweepOptions::default()).unwrap();
    let w = report.counterexamples().next().cloned();
    w.expect("R1.4 has a counterexample at two points")
}

#[test]
fn witness_replays_in_process() {
    let w = r1_4_witness();
    assert!(replay(&w).unwrap().is_failure());
    let back: Witness = serde_json::from_str(&serde_json::to_string(&w).unwrap()).unwrap();
    assert_eq!(back, w);
    assert!(replay(&back).unwrap().is_failure());
}

#[test]
fn witness_replays_in_fresh_process() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("witness.json");
    std::fs::write(&path, serde_json::to_string(&r1_4_witness()).unwrap()).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_topolab"))
        .arg("replay")
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("counterexample"));
}

#[test]
fn replay_rejects_mismatched_witnesses() {
    let mut w = r1_4_witness();
    w.clause = "no such clause".into();
    assert!(replay(&w).is_err());

    let mut w = r1_4_witness();
    w.theorem = "T3.3".into();
    assert!(replay(&w).is_err());
}

#[test]
fn space_instance_for_map_theorem_is_rejected() {
    let w = Witness {
        theorem: "T3.7".into(),
        clause: String::new(),
        instance: Instance::Space {
            space: topolab::Space::discrete(1).to_doc(""),
        },
        detail: String::new(),
    };
    assert!(replay(&w).is_err());
}

#[test]
fn composition_with_identity_first_factor_holds() {
    let spaces = spaces_up_to(3);
    let mut applicable = 0;
    for y in &spaces {
        let id = FiniteMap::identity(y);
        for z in &spaces {
            for g in enumerate_maps(y, z, &[]) {
                let w = Witness {
                    theorem: "T4.11".into(),
                    clause: "(i)".into(),
                    instance: Instance::Composition {
                        f: id.to_doc("", ""),
                        g: g.to_doc("", ""),
                    },
                    detail: String::new(),
                };
                match replay(&w).unwrap() {
                    Outcome::Fails(d) => panic!("{d}"),
                    Outcome::Holds => applicable += 1,
                    Outcome::Vacuous => {}
                }
            }
        }
    }
    assert!(applicable > 0);
}
