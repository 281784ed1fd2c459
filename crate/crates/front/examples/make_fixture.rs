//! Writes the small boundary-layer field used by the command-line tests:
//! `cargo run -p vortex-front --example make_fixture -- <path>`.

use std::path::PathBuf;

use vortex_front::fixtures::{boundary_layer, boundary_layer_spec};

fn main() {
    let path: PathBuf = std::env::args_os()
        .nth(1)
        .map(Into::into)
        .unwrap_or_else(|| "crates/front/tests/fixtures/boundary_layer.vfgrid".into());
    let field = boundary_layer_spec(16, 8, 17)
        .and_then(boundary_layer)
        .expect("fixture grid is valid");
    if let Err(e) = field.write_file(&path) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
