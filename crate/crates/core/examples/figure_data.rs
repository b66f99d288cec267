//! Writes the figure curves as CSV files through the command-line front end.
//!
//! Usage: cargo run --example figure_data -- [output dir]

use std::path::PathBuf;

fn main() {
    let dir: PathBuf = std::env::args()
        .nth(1)
        .map_or_else(std::env::temp_dir, PathBuf::from);
    for which in 1..=4 {
        let path = dir.join(format!("figure{which}.csv"));
        let code = zeroenergy::cli::run([
            "zeroenergy",
            "figures",
            "--which",
            &which.to_string(),
            "--format",
            "csv",
            "--output",
            path.to_str().expect("utf-8 path"),
        ]);
        println!("figure {which}: exit {code}, {}", path.display());
    }
}
