//! Regenerates `fixtures/*.json` at the workspace root.

use std::path::Path;

fn main() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    std::fs::create_dir_all(&dir).expect("create fixtures directory");
    for (name, s) in bihom_cli::fixtures::standard_fixtures().expect("fixtures build") {
        let path = dir.join(name);
        std::fs::write(&path, bihom_cli::serialize_structure(&s)).expect("write fixture");
        println!("wrote {}", path.display());
    }
}
