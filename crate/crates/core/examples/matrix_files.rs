//! Reading and writing matrix files, and driving the command-line front end
//! in-process.
//!
//! $ cargo run --example matrix_files

use monotone_norm::cli::{self, io};
use monotone_norm::gallery::cesaro;

fn main() {
    let dir = std::env::temp_dir().join(format!("monotone-norm-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();

    let a = cesaro(4).unwrap().matrix;
    let csv = dir.join("cesaro4.csv");
    let json = dir.join("cesaro4.json");
    io::write_matrix(&csv, &a).unwrap();
    io::write_matrix(&json, &a).unwrap();
    print!("{}", std::fs::read_to_string(&csv).unwrap());
    println!("{}", std::fs::read_to_string(&json).unwrap().trim());
    assert_eq!(
        io::read_matrix(&csv).unwrap(),
        io::read_matrix(&json).unwrap()
    );

    let args = [
        "monotone-norm",
        "norm",
        "-m",
        json.to_str().unwrap(),
        "-p",
        "2",
        "-q",
        "1",
        "--downward",
    ];
    let mut out = Vec::new();
    let code = cli::run(args, &mut out, &mut std::io::stderr());
    print!("{}", String::from_utf8(out).unwrap());
    println!("exit code {code}");
    std::fs::remove_dir_all(&dir).unwrap();
}
