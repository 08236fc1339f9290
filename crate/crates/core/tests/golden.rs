use std::fs;
use std::path::Path;

use genuslab::corpus::random_instance;
use genuslab::invariants::Invariants;
use serde_json::{json, Value};

fn snapshot(seed: u64) -> Value {
    let inst = random_instance(seed, 4, 3).unwrap();
    let alg = inst.module.algebra();
    let inv = Invariants::compute(&inst.module, &inst.parameters).unwrap();
    json!({
        "descriptor": inst.descriptor,
        "ideal": alg.ideal_generators().iter().map(|g| alg.show(g)).collect::<Vec<_>>(),
        "parameters": inst.parameters.elements().iter().map(|g| alg.show(g)).collect::<Vec<_>>(),
        "invariants": inv,
    })
}

#[test]
fn random_seed_zero_matches_golden_file() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/random_seed0.json");
    let text = serde_json::to_string_pretty(&snapshot(0)).unwrap() + "\n";
    if std::env::var_os("GENUSLAB_BLESS").is_some() {
        fs::write(&path, &text).unwrap();
    }
    assert_eq!(text, fs::read_to_string(path).unwrap());
    assert_eq!(snapshot(0), snapshot(0));
}
