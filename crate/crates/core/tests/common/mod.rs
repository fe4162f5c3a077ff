//! Reference data for the two-generator example code: its GF(4) source,
//! check matrix, standard form after two-fold expansion, and the printed
//! encoder and decoder.

#![allow(dead_code)]

pub mod random;

use eaqcc::pauli::CheckMatrix;

pub const GF4_SOURCE: &str = "gf4 cols=4 rows=1\n1+D, W+D, 1, D\n";

pub const CHECK: &str = "\
frames=4 generators=2
z: 1+D, D, 1, D | x: 0, 1, 0, 0
z: 0, 1, 0, 0 | x: 1+D, 1+D, 1, D
";

pub const OMEGA: [[&str; 2]; 2] = [["D^-1+D", "D^-1"], ["D", "D^-1+D"]];

pub const EXPANDED: &str = "\
frames=8 generators=4
z: 1, 0, 1, 0, 1, 1, 0, 1 | x: 0, 1, 0, 0, 0, 0, 0, 0
z: 0, 1, 0, 0, 0, 0, 0, 0 | x: 1, 1, 1, 0, 1, 1, 0, 1
z: D, D, 0, D, 1, 0, 1, 0 | x: 0, 0, 0, 0, 0, 1, 0, 0
z: 0, 0, 0, 0, 0, 1, 0, 0 | x: D, D, 0, D, 1, 1, 1, 0
";

pub const OMEGA_EXPANDED: [[&str; 4]; 4] = [
    ["0", "0", "1+D^-1", "D^-1"],
    ["0", "0", "1", "1+D^-1"],
    ["1+D", "1", "0", "0"],
    ["D", "1+D", "0", "0"],
];

pub const STANDARD: &str = "\
frames=8 generators=4
z: 0, 1, 0, 0, 0, 0, 0, 0 | x: 1, 1, 1, 0, 1, 1, 0, 1
z: D, D, 0, D, 1, 0, 1, 0 | x: 0, 0, 0, 0, 0, 1, 0, 0
z: 1, D^-1+1, 1, 0, 1, 1, 0, 1 | x: 1+D^-1, D^-1, 1+D^-1, 0, 1+D^-1, 1+D^-1, 0, 1+D^-1
z: (D^2+D)/(1+D+D^2), (D^2+D)/(1+D+D^2), 0, (D^2+D)/(1+D+D^2), (D+1)/(1+D+D^2), (1)/(1+D+D^2), (D+1)/(1+D+D^2), 0 | x: (D)/(1+D+D^2), (D)/(1+D+D^2), 0, (D)/(1+D+D^2), (1)/(1+D+D^2), (D)/(1+D+D^2), (1)/(1+D+D^2), 0
";

pub const STANDARD_OPS: &str = "\
swap 1 2
swap 2 3
add 3 1 (D^-1+1)
add 4 2 (1+D)
scale 4 ((1)/(1+D+D^2))
";

/// The printed encoder. `S 2 3` is the one gate the text never defines; it
/// is substituted by the caller.
pub fn encoder_text(s23: &str) -> String {
    format!(
        "\
circuit frames=8 receivers=2
CNOT 1 4 D+D^2
CNOT 1 5 1+D^2
CNOT 1 6 1
CNOT 1 7 1+D
CNOT 2 4 D
CNOT 2 5 1+D
CNOT 2 6 1
H 3..8
CNOT 1 4 D+D^2+D^4
CNOT 1 5 D^2
CNOT 1 6 1+D
CNOT 1 7 D^2
CNOT 2 4 D+D^2
CNOT 2 5 1+D
CNOT 2 6 1
CNOT 2 7 1+D
H 1..2
ICNOT 1 (1)/(1+D^-1+D^-2)
ICNOT 2 (1)/(1+D^-1+D^-2)
H 1..2
{}",
        finite_block(s23)
    )
}

fn finite_block(s23: &str) -> String {
    format!(
        "\
H 1..2
CNOT 2 3 1
CNOT 2 5 1
CNOT 2 6 1
CNOT 2 8 1
P 2
H 3..8
{s23}
CNOT 1 2 1
CNOT 1 3 1
CNOT 1 5 1
CNOT 1 6 1
CNOT 1 8 1
P 2
"
    )
}

/// The printed decoder: the finite block reversed, then the receiver's CNOTs.
pub fn decoder_text(s23: &str) -> String {
    let block = finite_block(s23);
    let reversed: Vec<&str> = block.lines().rev().collect();
    format!(
        "\
circuit frames=8 receivers=2
{}
CNOT B1 4 D+D^2+D^4
CNOT B1 5 D^2
CNOT B1 6 1+D
CNOT B1 7 D^2
CNOT B2 4 D+D^2
CNOT B2 5 1+D
CNOT B2 6 1
CNOT B2 7 1+D
H 3..8
CNOT B1 4 D+D^2
CNOT B1 5 1+D^2
CNOT B1 6 1
CNOT B1 7 1+D
CNOT B2 4 D
CNOT B2 5 1+D
CNOT B2 6 1
",
        reversed.join("\n")
    )
}

pub fn check() -> CheckMatrix {
    CheckMatrix::from_text(CHECK).unwrap()
}

pub fn standard() -> CheckMatrix {
    CheckMatrix::from_text(STANDARD).unwrap()
}
