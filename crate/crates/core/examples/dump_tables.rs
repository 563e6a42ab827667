//! Writes the bundled S3, Q8 and D8 multiplication tables to `data/`.
use classgraph::bdg::corpus;
fn main() -> std::io::Result<()> {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    std::fs::create_dir_all(&dir)?;
    for (name, g) in [
        ("s3", corpus::symmetric(3)),
        ("q8", corpus::dicyclic(2)),
        ("d8", corpus::dihedral(4)),
    ] {
        std::fs::write(dir.join(format!("{name}.tbl")), g.to_text())?;
    }
    Ok(())
}
