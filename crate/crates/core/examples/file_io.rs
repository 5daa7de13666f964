//! Writing and reading vector and matrix files.

use gtt::io::{format_matrix, parse_matrix, read_vector, write_vector};
use gtt::{BaseMatrix, ComplexVector, GttOperator};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join("gtt-file-io-example");
    std::fs::create_dir_all(&dir)?;
    let x = ComplexVector::from_real(&[0.1, 0.2, 0.3, 0.4])?.normalized()?;
    let op = GttOperator::new(BaseMatrix::hadamard(), 2)?;
    let y = op.apply(&x)?;
    for name in ["y.csv", "y.json"] {
        let path = dir.join(name);
        write_vector(&path, &y)?;
        let back = read_vector(&path)?;
        println!("{}: exact round trip = {}", path.display(), back == y);
        println!("{}", std::fs::read_to_string(&path)?.trim_end());
    }
    let text = format_matrix(&BaseMatrix::dft(2)?);
    println!("matrix file: {text}");
    println!("parsed back: {}", parse_matrix(&text)? == BaseMatrix::dft(2)?);
    Ok(())
}
