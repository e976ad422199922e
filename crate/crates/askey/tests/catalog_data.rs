//! The shipped `data/catalog` files must match the built-in catalog.
//! Regenerate them with `ASKEY_BLESS=1 cargo test -p askey --test catalog_data`.

use std::path::{Path, PathBuf};

use askey::catalog_file::{export_dir, families_with_entries, family_document, file_name, load_dir};
use askey_core::catalog;

fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/catalog")
}

#[test]
fn shipped_files_match_builtin_catalog() {
    let dir = data_dir();
    if std::env::var_os("ASKEY_BLESS").is_some() {
        export_dir(&dir).unwrap();
    }
    let entries = catalog::all_entries();
    for fam in families_with_entries(&entries) {
        let path = dir.join(file_name(fam));
        let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        let on_disk: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(on_disk, family_document(fam, &entries), "{} is stale", path.display());
    }
    let loaded = load_dir(&dir).unwrap();
    assert_eq!(loaded.len(), entries.len());
    for e in &entries {
        let back = loaded.iter().find(|l| l.id == e.id).unwrap();
        assert_eq!(back.plus, e.plus, "{}", e.id);
        assert_eq!(back.minus, e.minus, "{}", e.id);
    }
}
