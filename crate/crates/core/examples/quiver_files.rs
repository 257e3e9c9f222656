//! The quiver text format and the command line front end, driven in-process.
//!
//! ```text
//! cargo run --example quiver_files
//! ```

use quiverlab::format::{parse_quiver_file, write_quiver_file};

const KRONECKER: &str = "\
# two parallel arrows with V = (1, lambda)
vertices 2
arrow a: 1 -> 2
arrow b: 1 -> 2
dim 1 = 2
dim 2 = 2
alpha 1 = 1
alpha 2 = 1
vmap a: 1
vmap b: lambda
";

fn main() {
    let f = parse_quiver_file(KRONECKER).expect("valid file");
    println!("parsed {} vertices, {} arrows, beta {:?}", f.quiver.vertex_count(), f.quiver.arrows().len(), f.beta);
    print!("canonical form:\n{}", write_quiver_file(&f));

    match parse_quiver_file("vertices 1\ndim 1 = 3\nfiltration 1: 2 1 3\n") {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }

    let path = std::env::temp_dir().join("quiverlab_example.quiver");
    std::fs::write(&path, KRONECKER).expect("writable temp dir");
    let file = path.to_string_lossy().to_string();
    for args in [vec!["dw", file.as_str()], vec!["euler", file.as_str(), "--json"]] {
        let (code, out) = quiverlab::cli::run(std::iter::once("quiverlab").chain(args.iter().copied()));
        println!("$ quiverlab {}  [exit {code}]\n{out}", args.join(" "));
    }
}
