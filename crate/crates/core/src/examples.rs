//! The 3x3 worked system with V_F = 243 and mixed volume 145.

use crate::poly::{parse_system, PolySystem};

pub const SYSTEM1: &str = "144 + 2*x1 - 3*x2^2 + x1^7*x2^8*x3^9
-51 + 5*x1^2 - 27*x3 + x1^9*x2^7*x3^8
7 - 6*x1 + 8*x1^8*x2^9*x3^7 - 12*x1^8*x2^8*x3^7
";

pub fn system1() -> PolySystem {
    parse_system(SYSTEM1, 3).expect("built-in system parses")
}
