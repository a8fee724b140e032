use std::path::PathBuf;

use topolab::{FiniteMap, Space};

fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

#[test]
fn every_space_fixture_round_trips() {
    let mut seen = 0;
    for entry in std::fs::read_dir(fixtures_dir()).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        if value.get("map").is_some() {
            continue;
        }
        let space = Space::from_json(&text).unwrap();
        let name = value["name"].as_str().unwrap_or("");
        let again = Space::from_json(&space.to_json(name)).unwrap();
        assert_eq!(space, again, "{}", path.display());
        seen += 1;
    }
    assert_eq!(seen, 6);
}

#[test]
fn map_fixture_round_trips_inline() {
    let dir = fixtures_dir();
    let text = std::fs::read_to_string(dir.join("sierpinski-map.json")).unwrap();
    let f = FiniteMap::from_json(&text, Some(&dir)).unwrap();
    let inline = serde_json::to_string(&f.to_doc("sierpinski", "example-2.9")).unwrap();
    let g = FiniteMap::from_json(&inline, None).unwrap();
    assert_eq!(f, g);
}

#[test]
fn bundled_copies_match_files() {
    for (name, text) in topolab::fixtures::FIXTURES {
        let on_disk = std::fs::read_to_string(fixtures_dir().join(format!("{name}.json"))).unwrap();
        assert_eq!(text, on_disk, "{name}");
    }
}
