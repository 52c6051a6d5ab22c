//! Writes the bundled complexes as JSON files: `cargo run --example export_corpus -- <dir>`.

use std::fs;
use std::path::PathBuf;

use momentangle::{corpus, io};

fn main() -> std::io::Result<()> {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| PathBuf::from("corpus"));
    fs::create_dir_all(&dir)?;
    for (name, k) in corpus::bundled() {
        fs::write(dir.join(format!("{name}.json")), io::to_json(&k) + "\n")?;
    }
    Ok(())
}
