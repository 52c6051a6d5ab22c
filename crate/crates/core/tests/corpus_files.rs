use std::fs;
use std::path::Path;

use momentangle::corpus::bundled;
use momentangle::io::{read_complex, to_json};

#[test]
fn shipped_files_match_the_generator() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus");
    let expected = bundled();
    let mut names: Vec<String> = fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    names.sort();
    let mut want: Vec<String> = expected.iter().map(|(n, _)| format!("{n}.json")).collect();
    want.sort();
    assert_eq!(names, want);
    for (name, k) in expected {
        let path = dir.join(format!("{name}.json"));
        assert_eq!(read_complex(&path).unwrap(), k, "{name}");
        assert_eq!(fs::read_to_string(&path).unwrap(), to_json(&k) + "\n", "{name} is not canonical");
    }
}
