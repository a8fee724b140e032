//! Spaces shipped with the repository under `fixtures/`.

use crate::space::Space;

pub const FIXTURES: [(&str, &str); 6] = [
    ("example-1.8", include_str!("../../../fixtures/example-1.8.json")),
    ("example-2.5", include_str!("../../../fixtures/example-2.5.json")),
    ("example-2.6", include_str!("../../../fixtures/example-2.6.json")),
    ("example-2.7", include_str!("../../../fixtures/example-2.7.json")),
    ("example-2.8", include_str!("../../../fixtures/example-2.8.json")),
    ("example-2.9", include_str!("../../../fixtures/example-2.9.json")),
];

pub fn by_name(name: &str) -> Option<Space> {
    FIXTURES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| Space::from_json(text).expect("bundled fixture is a valid space"))
}

pub fn example_1_8() -> Space {
    by_name("example-1.8").unwrap()
}

pub fn example_2_5() -> Space {
    by_name("example-2.5").unwrap()
}

pub fn example_2_6() -> Space {
    by_name("example-2.6").unwrap()
}

/// Points are `{k,l,m,n}`, the labels its open sets use.
pub fn example_2_7() -> Space {
    by_name("example-2.7").unwrap()
}

pub fn example_2_8() -> Space {
    by_name("example-2.8").unwrap()
}

pub fn example_2_9() -> Space {
    by_name("example-2.9").unwrap()
}
