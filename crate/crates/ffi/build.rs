use std::env;
use std::path::PathBuf;

fn main() {
    let crate_dir = env::var("CARGO_MANIFEST_DIR").expect("CARGO_MANIFEST_DIR");
    let header = PathBuf::from(&crate_dir).join("include").join("arquiver.h");
    std::fs::create_dir_all(header.parent().unwrap()).expect("create include dir");
    match cbindgen::generate(&crate_dir) {
        Ok(bindings) => {
            bindings.write_to_file(&header);
        }
        Err(e) => {
            // keep a previously generated header usable
            if !header.exists() {
                panic!("cbindgen failed and no committed header exists: {e}");
            }
            println!("cargo:warning=cbindgen failed, using committed header: {e}");
        }
    }
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");
}
