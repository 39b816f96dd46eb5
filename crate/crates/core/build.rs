// Generates the catalog of groups of order 1..=8 (one table per
// isomorphism class, identity 0) by exhaustive search.

use std::fmt::Write as _;
use std::path::PathBuf;

#[allow(dead_code)]
mod group_search {
    include!("src/group_search.rs");
}

const MAX_ORDER: usize = 8;

fn main() {
    println!("cargo:rerun-if-changed=src/group_search.rs");
    println!("cargo:rerun-if-changed=build.rs");
    let mut src = String::from("// @generated by build.rs\n");
    src.push_str("pub(crate) static GROUP_CATALOG: &[&[&[usize]]] = &[\n");
    for n in 1..=MAX_ORDER {
        let reps = group_search::orbit_representatives(n, group_search::labeled_group_tables(n));
        src.push_str("    &[\n");
        for t in reps {
            let body: Vec<String> = t.iter().map(|v| v.to_string()).collect();
            writeln!(src, "        &[{}],", body.join(", ")).unwrap();
        }
        src.push_str("    ],\n");
    }
    src.push_str("];\n");
    let out = PathBuf::from(std::env::var("OUT_DIR").unwrap()).join("group_catalog.rs");
    std::fs::write(out, src).unwrap();
}
