//! Loads a model file from disk and renders the complete JSON report
//! programmatically, exactly as the `qtorb report --format json`
//! subcommand would.

use std::path::Path;

use qtorb::cli::{load_model, report};

fn main() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("models/p112.json");
    let loaded = load_model(&path).expect("bundled model file parses");
    println!(
        "loaded {:?}: rank {}, {} facets",
        loaded.name,
        loaded.model.rank(),
        loaded.model.polytope().facet_count()
    );
    let output = report(&loaded, loaded.orientation, true).expect("report renders");
    print!("{output}");
}
